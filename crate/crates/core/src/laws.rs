//! Law checkers for bimonoids, Hopf structures, comodules, braiding
//! coelements and distributive laws.
//!
//! Every check is window-exact: both sides of a law are evaluated on all
//! domain labels of window `K` and compared with exact integer arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{
    compose_all, equal_on_window, tensor_all, tensor_maps, Counterexample, Label, LinMap, Space,
    Vector, Verdict,
};

/// Default window used for construction-time legality checks.
pub const DEFAULT_WINDOW: usize = 3;

/// A carrier with multiplication, unit, comultiplication, counit and an
/// optional antipode. Laws are not assumed; see [`check_bialgebra_laws`].
#[derive(Clone)]
pub struct Bimonoid {
    name: String,
    carrier: Space,
    mu: LinMap,
    eta: LinMap,
    delta: LinMap,
    epsilon: LinMap,
    antipode: Option<LinMap>,
}

fn expect_shape(map: &LinMap, what: &str, dom: &Space, cod: &Space) -> Result<()> {
    if map.dom() != dom {
        return Err(Error::mismatch(format!("{what}: {dom}"), map.dom()));
    }
    if map.cod() != cod {
        return Err(Error::mismatch(format!("{what}: {cod}"), map.cod()));
    }
    Ok(())
}

impl Bimonoid {
    pub fn new(
        name: impl Into<String>,
        carrier: &Space,
        mu: LinMap,
        eta: LinMap,
        delta: LinMap,
        epsilon: LinMap,
        antipode: Option<LinMap>,
    ) -> Result<Bimonoid> {
        let h = carrier;
        let hh = Space::pair(h, h);
        let i = Space::unit();
        expect_shape(&mu, "multiplication", &hh, h)?;
        expect_shape(&eta, "unit", &i, h)?;
        expect_shape(&delta, "comultiplication", h, &hh)?;
        expect_shape(&epsilon, "counit", h, &i)?;
        if let Some(s) = &antipode {
            expect_shape(s, "antipode", h, h)?;
        }
        Ok(Bimonoid {
            name: name.into(),
            carrier: carrier.clone(),
            mu,
            eta,
            delta,
            epsilon,
            antipode,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn carrier(&self) -> &Space {
        &self.carrier
    }

    pub fn mu(&self) -> &LinMap {
        &self.mu
    }

    pub fn eta(&self) -> &LinMap {
        &self.eta
    }

    pub fn delta(&self) -> &LinMap {
        &self.delta
    }

    pub fn epsilon(&self) -> &LinMap {
        &self.epsilon
    }

    pub fn antipode(&self) -> Option<&LinMap> {
        self.antipode.as_ref()
    }

    pub fn with_antipode(mut self, s: LinMap) -> Result<Bimonoid> {
        expect_shape(&s, "antipode", &self.carrier, &self.carrier)?;
        self.antipode = Some(s);
        Ok(self)
    }

    pub fn multiply(&self, a: &Label, b: &Label) -> Vector {
        self.mu.apply(&Label::pair(a, b))
    }

    pub fn multiply_vec(&self, a: &Vector, b: &Vector) -> Vector {
        self.mu.apply_vec(&a.tensor(b))
    }

    pub fn one(&self) -> Vector {
        self.eta.apply(&Label::Unit)
    }

    pub fn comultiply(&self, a: &Label) -> Vector {
        self.delta.apply(a)
    }

    pub fn counit(&self, a: &Label) -> BigInt {
        self.epsilon.apply(a).coeff(&Label::Unit)
    }

    /// Splits a label of `H⊗X` into its `H` part and the rest.
    pub fn split(&self, l: &Label) -> (Label, Label) {
        l.split_at(self.carrier.width())
    }
}

impl fmt::Debug for Bimonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bimonoid({} on {})", self.name, self.carrier)
    }
}

/// One law and its verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawResult {
    pub law: String,
    pub verdict: Verdict,
}

impl LawResult {
    pub fn passed(&self) -> bool {
        self.verdict.is_equal()
    }
}

impl Serialize for LawResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            law: &'a str,
            verdict: &'a str,
            #[serde(skip_serializing_if = "Option::is_none")]
            counterexample: Option<&'a Counterexample>,
            instances_checked: usize,
        }
        Repr {
            law: &self.law,
            verdict: if self.passed() { "Equal" } else { "Differ" },
            counterexample: self.verdict.counterexample(),
            instances_checked: self.verdict.instances(),
        }
        .serialize(s)
    }
}

/// Ordered list of law verdicts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LawReport {
    pub results: Vec<LawResult>,
}

impl LawReport {
    pub fn push(&mut self, law: impl Into<String>, verdict: Verdict) {
        self.results.push(LawResult {
            law: law.into(),
            verdict,
        });
    }

    pub fn extend(&mut self, other: LawReport) {
        self.results.extend(other.results);
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(LawResult::passed)
    }

    pub fn get(&self, law: &str) -> Option<&Verdict> {
        self.results.iter().find(|r| r.law == law).map(|r| &r.verdict)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawResult> {
        self.results.iter().filter(|r| !r.passed())
    }

    /// The first failing law as an error.
    pub fn into_result(self) -> Result<()> {
        match self.results.into_iter().find(|r| !r.passed()) {
            None => Ok(()),
            Some(r) => Err(Error::violation(
                r.law,
                r.verdict.counterexample().cloned().expect("failed law"),
            )),
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            match r.verdict.counterexample() {
                None => writeln!(f, "{:<24} Equal ({})", r.law, r.verdict.instances())?,
                Some(c) => writeln!(f, "{:<24} Differ at {c}", r.law)?,
            }
        }
        Ok(())
    }
}

type Provider = Arc<dyn Fn(&Space, &Space) -> Result<LinMap> + Send + Sync>;

/// A choice of braiding `σ_{X,Y}: X⊗Y → Y⊗X` for the spaces a law mentions.
#[derive(Clone)]
pub struct Braiding {
    name: String,
    provider: Provider,
}

impl Braiding {
    pub fn new(
        name: impl Into<String>,
        provider: impl Fn(&Space, &Space) -> Result<LinMap> + Send + Sync + 'static,
    ) -> Braiding {
        Braiding {
            name: name.into(),
            provider: Arc::new(provider),
        }
    }

    /// The plain swap of abelian groups.
    pub fn symmetric() -> Braiding {
        Braiding::new("swap", |x, y| Ok(LinMap::swap(x, y)))
    }

    /// The braiding of `A`-comodules induced by a coelement. The comodules
    /// are looked up by carrier name.
    pub fn coelement(c: &Coelement, comodules: &[Comodule]) -> Braiding {
        let c = c.clone();
        let table: BTreeMap<String, Comodule> = comodules
            .iter()
            .map(|m| (m.carrier().name().to_string(), m.clone()))
            .collect();
        Braiding::new("coelement", move |x, y| {
            let find = |s: &Space| {
                table
                    .get(s.name())
                    .cloned()
                    .ok_or_else(|| Error::mismatch("a registered comodule carrier", s))
            };
            comodule_braiding(&find(x)?, &find(y)?, &c)
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn get(&self, x: &Space, y: &Space) -> Result<LinMap> {
        (self.provider)(x, y)
    }
}

impl fmt::Debug for Braiding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Braiding({})", self.name)
    }
}

/// Checks the monoid, comonoid, compatibility and (if present) antipode
/// laws of `b`, using `braid` for the interchange law.
pub fn check_bialgebra_laws(b: &Bimonoid, braid: &Braiding, k: usize) -> Result<LawReport> {
    let h = b.carrier();
    let id = LinMap::identity(h);
    let (mu, eta, delta, eps) = (b.mu(), b.eta(), b.delta(), b.epsilon());
    let mut r = LawReport::default();

    let mu_l = compose_all(&[&tensor_maps(mu, &id), mu])?;
    let mu_r = compose_all(&[&tensor_maps(&id, mu), mu])?;
    r.push("associativity", equal_on_window(&mu_l, &mu_r, k)?);
    let lu = compose_all(&[&tensor_maps(eta, &id), mu])?;
    r.push("left-unit", equal_on_window(&lu, &id, k)?);
    let ru = compose_all(&[&tensor_maps(&id, eta), mu])?;
    r.push("right-unit", equal_on_window(&ru, &id, k)?);

    let d_l = compose_all(&[delta, &tensor_maps(delta, &id)])?;
    let d_r = compose_all(&[delta, &tensor_maps(&id, delta)])?;
    r.push("coassociativity", equal_on_window(&d_l, &d_r, k)?);
    let lc = compose_all(&[delta, &tensor_maps(eps, &id)])?;
    r.push("left-counit", equal_on_window(&lc, &id, k)?);
    let rc = compose_all(&[delta, &tensor_maps(&id, eps)])?;
    r.push("right-counit", equal_on_window(&rc, &id, k)?);

    let i = Space::unit();
    r.push(
        "counit-unit",
        equal_on_window(&compose_all(&[eta, eps])?, &LinMap::identity(&i), k)?,
    );
    r.push(
        "comultiplication-unit",
        equal_on_window(&compose_all(&[eta, delta])?, &tensor_maps(eta, eta), k)?,
    );
    r.push(
        "counit-multiplication",
        equal_on_window(&compose_all(&[mu, eps])?, &tensor_maps(eps, eps), k)?,
    );

    let sigma = braid.get(h, h)?;
    let middle = tensor_all(&[&id, &sigma, &id]);
    let dd = compose_all(&[&tensor_maps(delta, delta), &middle, &tensor_maps(mu, mu)])?;
    let md = compose_all(&[mu, delta])?;
    r.push("interchange", equal_on_window(&dd, &md, k)?);

    if let Some(s) = b.antipode() {
        let ee = compose_all(&[eps, eta])?;
        let left = compose_all(&[delta, &tensor_maps(s, &id), mu])?;
        r.push("left-antipode", equal_on_window(&left, &ee, k)?);
        let right = compose_all(&[delta, &tensor_maps(&id, s), mu])?;
        r.push("right-antipode", equal_on_window(&right, &ee, k)?);
    }
    Ok(r)
}

/// Only the two antipode identities.
pub fn check_antipode(b: &Bimonoid, s: &LinMap, k: usize) -> Result<LawReport> {
    let id = LinMap::identity(b.carrier());
    let ee = compose_all(&[b.epsilon(), b.eta()])?;
    let mut r = LawReport::default();
    let left = compose_all(&[b.delta(), &tensor_maps(s, &id), b.mu()])?;
    r.push("left-antipode", equal_on_window(&left, &ee, k)?);
    let right = compose_all(&[b.delta(), &tensor_maps(&id, s), b.mu()])?;
    r.push("right-antipode", equal_on_window(&right, &ee, k)?);
    Ok(r)
}

type Gamma = Arc<dyn Fn(&Label, &Label) -> BigInt + Send + Sync>;

/// A bilinear form `γ: A⊗A → I` given on basis pairs.
#[derive(Clone)]
pub struct Coelement {
    ring: Bimonoid,
    gamma: Gamma,
}

impl Coelement {
    pub fn new(
        ring: &Bimonoid,
        gamma: impl Fn(&Label, &Label) -> BigInt + Send + Sync + 'static,
    ) -> Coelement {
        Coelement {
            ring: ring.clone(),
            gamma: Arc::new(gamma),
        }
    }

    /// `γ = ε⊗ε`
    pub fn trivial(ring: &Bimonoid) -> Coelement {
        let r = ring.clone();
        Coelement::new(ring, move |a, b| r.counit(a) * r.counit(b))
    }

    pub fn ring(&self) -> &Bimonoid {
        &self.ring
    }

    pub fn gamma(&self, a: &Label, b: &Label) -> BigInt {
        (self.gamma)(a, b)
    }

    /// `γ` on a vector of `A⊗A`.
    pub fn eval(&self, v: &Vector) -> BigInt {
        let w = self.ring.carrier().width();
        v.iter()
            .map(|(l, c)| {
                let (a, b) = l.split_at(w);
                c * self.gamma(&a, &b)
            })
            .sum()
    }

    pub fn as_map(&self) -> LinMap {
        let a = self.ring.carrier();
        let me = self.clone();
        LinMap::new(&Space::pair(a, a), &Space::unit(), move |l| {
            Vector::term(me.eval(&Vector::basis(l.clone())), Label::Unit)
        })
    }
}

impl fmt::Debug for Coelement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coelement(on {})", self.ring.name())
    }
}

/// Reorders the flat factors of a width-one-per-factor tensor space.
/// `perm[i]` is the source factor placed at position `i`.
fn permute(factors: &[Space], perm: &'static [usize]) -> LinMap {
    let dom = Space::tensor(factors.iter());
    let cod = Space::tensor(perm.iter().map(|&i| &factors[i]));
    let widths: Vec<usize> = factors.iter().map(Space::width).collect();
    LinMap::relabel(&dom, &cod, move |l| {
        let flat = l.factors();
        let mut pieces = Vec::with_capacity(widths.len());
        let mut at = 0;
        for w in &widths {
            pieces.push(Label::tensor(flat[at..at + w].iter()));
            at += w;
        }
        Label::tensor(perm.iter().map(|&i| &pieces[i]))
    })
}

/// The three coelement axioms, read bottom to top:
///
/// ```text
/// elt1:  a₁₍₁₎a₂₍₁₎ · γ(a₂₍₂₎, a₁₍₂₎)  =  γ(a₂₍₁₎, a₁₍₁₎) · a₂₍₂₎a₁₍₂₎
/// elt2:  γ(a₁, a₂a₃)                  =  γ(a₁₍₁₎, a₃) · γ(a₁₍₂₎, a₂)
/// elt3:  γ(a₁a₂, a₃)                  =  γ(a₁, a₃₍₁₎) · γ(a₂, a₃₍₂₎)
/// ```
pub fn check_coelement(c: &Coelement, k: usize) -> Result<LawReport> {
    let ring = c.ring();
    let a = ring.carrier();
    let id = LinMap::identity(a);
    let (mu, delta) = (ring.mu(), ring.delta());
    let g = c.as_map();
    let gs = compose_all(&[&LinMap::swap(a, a), &g])?;
    let mus = compose_all(&[&LinMap::swap(a, a), mu])?;
    let a4 = [a.clone(), a.clone(), a.clone(), a.clone()];
    let mid = permute(&a4, &[0, 2, 1, 3]);
    let dd = tensor_maps(delta, delta);
    let mut r = LawReport::default();

    let lhs1 = compose_all(&[&dd, &mid, &tensor_maps(mu, &gs)])?;
    let rhs1 = compose_all(&[&dd, &mid, &tensor_maps(&gs, &mus)])?;
    r.push("elt1", equal_on_window(&lhs1, &rhs1, k)?);

    let lhs2 = compose_all(&[&tensor_maps(&id, mu), &g])?;
    let rhs2 = compose_all(&[
        &tensor_all(&[delta, &id, &id]),
        &permute(&a4, &[0, 3, 1, 2]),
        &tensor_maps(&g, &g),
    ])?;
    r.push("elt2", equal_on_window(&lhs2, &rhs2, k)?);

    let lhs3 = compose_all(&[&tensor_maps(mu, &id), &g])?;
    let rhs3 = compose_all(&[
        &tensor_all(&[&id, &id, delta]),
        &permute(&a4, &[0, 2, 1, 3]),
        &tensor_maps(&g, &g),
    ])?;
    r.push("elt3", equal_on_window(&lhs3, &rhs3, k)?);
    Ok(r)
}

/// An object `X` with a coaction `X → A⊗X`.
#[derive(Clone)]
pub struct Comodule {
    ring: Bimonoid,
    carrier: Space,
    coaction: LinMap,
}

impl Comodule {
    /// Builds a comodule and checks its counit and coassociativity laws on
    /// the default window.
    pub fn new(ring: &Bimonoid, carrier: &Space, coaction: LinMap) -> Result<Comodule> {
        let m = Comodule::new_unchecked(ring, carrier, coaction)?;
        m.check_legality(DEFAULT_WINDOW)?;
        Ok(m)
    }

    /// Builds a comodule after checking only the shape of the coaction.
    pub fn new_unchecked(ring: &Bimonoid, carrier: &Space, coaction: LinMap) -> Result<Comodule> {
        expect_shape(
            &coaction,
            "coaction",
            carrier,
            &Space::pair(ring.carrier(), carrier),
        )?;
        Ok(Comodule {
            ring: ring.clone(),
            carrier: carrier.clone(),
            coaction,
        })
    }

    /// `x ↦ 1⊗x`
    pub fn trivial(ring: &Bimonoid, carrier: &Space) -> Comodule {
        let one = ring.one();
        let coaction = LinMap::new(carrier, &Space::pair(ring.carrier(), carrier), move |l| {
            one.tensor(&Vector::basis(l.clone()))
        });
        Comodule {
            ring: ring.clone(),
            carrier: carrier.clone(),
            coaction,
        }
    }

    /// The tensor unit `I` with coaction `1 ↦ 1_A⊗1`.
    pub fn unit(ring: &Bimonoid) -> Comodule {
        Comodule::trivial(ring, &Space::unit())
    }

    /// `X⊗Y` with coaction `x⊗y ↦ x₋₁y₋₁ ⊗ x₀ ⊗ y₀`.
    pub fn tensor(x: &Comodule, y: &Comodule) -> Result<Comodule> {
        if x.ring.carrier() != y.ring.carrier() {
            return Err(Error::mismatch(x.ring.carrier(), y.ring.carrier()));
        }
        let ring = x.ring.clone();
        let carrier = Space::pair(&x.carrier, &y.carrier);
        let cod = Space::pair(ring.carrier(), &carrier);
        let (xm, ym) = (x.clone(), y.clone());
        let w = x.carrier.width();
        let coaction = LinMap::new(&carrier, &cod, move |l| {
            let (a, b) = l.split_at(w);
            let mut out = Vector::zero();
            for (xl, xc) in &xm.coact(&a) {
                let (xa, x0) = xm.ring.split(xl);
                for (yl, yc) in &ym.coact(&b) {
                    let (ya, y0) = ym.ring.split(yl);
                    let prod = xm.ring.multiply(&xa, &ya);
                    let tail = Vector::basis(Label::pair(&x0, &y0));
                    out.add_scaled(&(xc * yc), &prod.tensor(&tail));
                }
            }
            out
        });
        Ok(Comodule {
            ring,
            carrier,
            coaction,
        })
    }

    pub fn ring(&self) -> &Bimonoid {
        &self.ring
    }

    pub fn carrier(&self) -> &Space {
        &self.carrier
    }

    pub fn coaction(&self) -> &LinMap {
        &self.coaction
    }

    pub fn coact(&self, l: &Label) -> Vector {
        self.coaction.apply(l)
    }

    pub fn laws(&self, k: usize) -> Result<LawReport> {
        let a = self.ring.carrier();
        let id = LinMap::identity(&self.carrier);
        let mut r = LawReport::default();
        let counit = compose_all(&[&self.coaction, &tensor_maps(self.ring.epsilon(), &id)])?;
        r.push("comodule-counit", equal_on_window(&counit, &id, k)?);
        let lhs = compose_all(&[&self.coaction, &tensor_maps(self.ring.delta(), &id)])?;
        let rhs = compose_all(&[
            &self.coaction,
            &tensor_maps(&LinMap::identity(a), &self.coaction),
        ])?;
        r.push("comodule-coassociativity", equal_on_window(&lhs, &rhs, k)?);
        Ok(r)
    }

    pub fn check_legality(&self, k: usize) -> Result<()> {
        let r = self.laws(k)?;
        let failure = r.failures().next().map(|f| {
            Error::IllegalComodule(format!(
                "{} fails {} at {}",
                self.carrier,
                f.law,
                f.verdict.counterexample().expect("failed law")
            ))
        });
        failure.map_or(Ok(()), Err)
    }
}

impl fmt::Debug for Comodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Comodule({} over {})", self.carrier, self.ring.name())
    }
}

fn same_ring(a: &Bimonoid, b: &Bimonoid) -> Result<()> {
    if a.carrier() != b.carrier() {
        return Err(Error::mismatch(a.carrier(), b.carrier()));
    }
    Ok(())
}

/// `x⊗y ↦ γ(y₋₁, x₋₁) · y₀⊗x₀`
pub fn comodule_braiding(x: &Comodule, y: &Comodule, c: &Coelement) -> Result<LinMap> {
    same_ring(x.ring(), y.ring())?;
    same_ring(x.ring(), c.ring())?;
    let (xm, ym, c) = (x.clone(), y.clone(), c.clone());
    let w = x.carrier().width();
    Ok(LinMap::new(
        &Space::pair(x.carrier(), y.carrier()),
        &Space::pair(y.carrier(), x.carrier()),
        move |l| {
            let (a, b) = l.split_at(w);
            let mut out = Vector::zero();
            for (xl, xc) in &xm.coact(&a) {
                let (xa, x0) = xm.ring().split(xl);
                for (yl, yc) in &ym.coact(&b) {
                    let (ya, y0) = ym.ring().split(yl);
                    let g = c.gamma(&ya, &xa);
                    out.add_term(Label::pair(&y0, &x0), xc * yc * g);
                }
            }
            out
        },
    ))
}

/// `τ_X: X⊗A → A⊗X`, `x⊗a ↦ x₋₁·a ⊗ x₀`.
pub fn distributive_law_tau(x: &Comodule) -> LinMap {
    let xm = x.clone();
    let a = x.ring().carrier();
    let w = x.carrier().width();
    LinMap::new(
        &Space::pair(x.carrier(), a),
        &Space::pair(a, x.carrier()),
        move |l| {
            let (xl, al) = l.split_at(w);
            let mut out = Vector::zero();
            for (t, c) in &xm.coact(&xl) {
                let (xa, x0) = xm.ring().split(t);
                let prod = xm.ring().multiply(&xa, &al);
                out.add_scaled(c, &prod.tensor(&Vector::basis(x0)));
            }
            out
        },
    )
}

/// The distributive-law axioms of `tau: X⊗A → A⊗X` against the comonoid `A`
/// and, when `comonoid` is given, against the comonoid structure of `X`.
pub fn check_distributive_law(
    tau: &LinMap,
    x: &Comodule,
    comonoid: Option<&Bimonoid>,
    k: usize,
) -> Result<LawReport> {
    let ring = x.ring();
    let (xs, a) = (x.carrier(), ring.carrier());
    expect_shape(tau, "distributive law", &Space::pair(xs, a), &Space::pair(a, xs))?;
    let (ia, ix) = (LinMap::identity(a), LinMap::identity(xs));
    let (ea, da) = (ring.epsilon(), ring.delta());
    let mut r = LawReport::default();

    let lhs = compose_all(&[tau, &tensor_maps(ea, &ix)])?;
    r.push("tau-counit-A", equal_on_window(&lhs, &tensor_maps(&ix, ea), k)?);
    let lhs = compose_all(&[tau, &tensor_maps(da, &ix)])?;
    let rhs = compose_all(&[
        &tensor_maps(&ix, da),
        &tensor_maps(tau, &ia),
        &tensor_maps(&ia, tau),
    ])?;
    r.push("tau-comultiplication-A", equal_on_window(&lhs, &rhs, k)?);

    if let Some(h) = comonoid {
        if h.carrier() != xs {
            return Err(Error::mismatch(xs, h.carrier()));
        }
        let (ex, dx) = (h.epsilon(), h.delta());
        let lhs = compose_all(&[tau, &tensor_maps(&ia, ex)])?;
        r.push("tau-counit-X", equal_on_window(&lhs, &tensor_maps(ex, &ia), k)?);
        let lhs = compose_all(&[tau, &tensor_maps(&ia, dx)])?;
        let rhs = compose_all(&[
            &tensor_maps(dx, &ia),
            &tensor_maps(&ix, tau),
            &tensor_maps(tau, &ix),
        ])?;
        r.push("tau-comultiplication-X", equal_on_window(&lhs, &rhs, k)?);
    }
    Ok(r)
}

/// `(1⊗f)∘α_X = α_Y∘f`
pub fn check_comodule_morphism(
    f: &LinMap,
    x: &Comodule,
    y: &Comodule,
    k: usize,
) -> Result<Verdict> {
    same_ring(x.ring(), y.ring())?;
    expect_shape(f, "comodule morphism", x.carrier(), y.carrier())?;
    let lhs = compose_all(&[
        x.coaction(),
        &tensor_maps(&LinMap::identity(x.ring().carrier()), f),
    ])?;
    let rhs = compose_all(&[f, y.coaction()])?;
    equal_on_window(&lhs, &rhs, k)
}
