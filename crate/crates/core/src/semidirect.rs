//! The semidirect product (bosonization) `H⋊A` of a bimonoid `H` in
//! `A`-comodules, and the comparison between `H`-comodules in `A`-comodules
//! and plain `H⋊A`-comodules.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chains::ChainComplex;
use crate::error::{Error, Result};
use crate::grading::monomial;
use crate::laws::{
    check_antipode, check_bialgebra_laws, check_comodule_morphism, comodule_braiding, Bimonoid,
    Braiding, Coelement, Comodule, LawReport,
};
use crate::linalg::{compose_all, equal_on_window, tensor_all, Label, LinMap, Space, Vector};

/// A bimonoid `H` whose carrier is an `A`-comodule, together with the
/// coelement of `A` that braids `A`-comodules.
#[derive(Clone)]
pub struct ComoduleBimonoid {
    hopf: Bimonoid,
    comodule: Comodule,
    coelement: Coelement,
}

impl ComoduleBimonoid {
    pub fn new(hopf: Bimonoid, comodule: Comodule, coelement: Coelement) -> Result<Self> {
        if comodule.carrier() != hopf.carrier() {
            return Err(Error::mismatch(hopf.carrier(), comodule.carrier()));
        }
        if comodule.ring().carrier() != coelement.ring().carrier() {
            return Err(Error::mismatch(
                coelement.ring().carrier(),
                comodule.ring().carrier(),
            ));
        }
        Ok(ComoduleBimonoid {
            hopf,
            comodule,
            coelement,
        })
    }

    pub fn hopf(&self) -> &Bimonoid {
        &self.hopf
    }

    pub fn comodule(&self) -> &Comodule {
        &self.comodule
    }

    pub fn coelement(&self) -> &Coelement {
        &self.coelement
    }

    /// The base ring `A`.
    pub fn base(&self) -> &Bimonoid {
        self.coelement.ring()
    }

    pub fn braiding(&self) -> Braiding {
        Braiding::coelement(&self.coelement, std::slice::from_ref(&self.comodule))
    }

    /// Comodule legality of `H`, colinearity of its structure maps, and the
    /// bimonoid laws under the coelement braiding.
    pub fn validate(&self, k: usize) -> Result<LawReport> {
        let hc = &self.comodule;
        let hh = Comodule::tensor(hc, hc)?;
        let unit = Comodule::unit(self.base());
        let mut r = hc.laws(k)?;
        let h = &self.hopf;
        r.push("mu-colinear", check_comodule_morphism(h.mu(), &hh, hc, k)?);
        r.push("eta-colinear", check_comodule_morphism(h.eta(), &unit, hc, k)?);
        r.push("delta-colinear", check_comodule_morphism(h.delta(), hc, &hh, k)?);
        r.push("epsilon-colinear", check_comodule_morphism(h.epsilon(), hc, &unit, k)?);
        r.extend(check_bialgebra_laws(h, &self.braiding(), k)?);
        Ok(r)
    }

    pub fn check(&self, k: usize) -> Result<()> {
        self.validate(k)?.into_result()
    }
}

impl fmt::Debug for ComoduleBimonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComoduleBimonoid({} over {})", self.hopf.name(), self.base().name())
    }
}

/// `H⋊A` on the carrier `H⊗A`, with the data it was built from.
#[derive(Clone, Debug)]
pub struct SemidirectRing {
    ring: Bimonoid,
    source: ComoduleBimonoid,
}

impl SemidirectRing {
    pub fn ring(&self) -> &Bimonoid {
        &self.ring
    }

    pub fn source(&self) -> &ComoduleBimonoid {
        &self.source
    }
}

/// Builds `H⋊A` and verifies its bimonoid laws (plain swap) on window `k`.
/// The antipode is attached, and verified, when both `H` and `A` have one.
///
/// ```text
/// (h⊗a)(h'⊗a') = Σ γ(h'₋₁, a₍₁₎) · h h'₀ ⊗ a₍₂₎ a'
/// δ(h⊗a)      = Σ (h₍₁₎ ⊗ (h₍₂₎)₋₁ a₍₁₎) ⊗ ((h₍₂₎)₀ ⊗ a₍₂₎)
/// ```
pub fn semidirect_product(hb: &ComoduleBimonoid, k: usize) -> Result<SemidirectRing> {
    hb.check(k)?;
    let h = hb.hopf().clone();
    let a = hb.base().clone();
    let hc = hb.comodule().clone();
    let gamma = hb.coelement().clone();
    let (wh, wa) = (h.carrier().width(), a.carrier().width());
    let carrier = Space::pair(h.carrier(), a.carrier());
    let cc = Space::pair(&carrier, &carrier);
    let i = Space::unit();

    let (h1, a1, hc1) = (h.clone(), a.clone(), hc.clone());
    let mu = LinMap::new(&cc, &carrier, move |l| {
        let (hl, rest) = l.split_at(wh);
        let (al, rest) = rest.split_at(wa);
        let (hl2, al2) = rest.split_at(wh);
        let mut out = Vector::zero();
        for (t, c1) in &hc1.coact(&hl2) {
            let (coeff, h0) = t.split_at(wa);
            for (u, c2) in &a1.comultiply(&al) {
                let (x1, x2) = u.split_at(wa);
                let g = gamma.gamma(&coeff, &x1);
                if g.is_zero() {
                    continue;
                }
                let left = h1.multiply(&hl, &h0);
                if left.is_zero() {
                    continue;
                }
                let right = a1.multiply(&x2, &al2);
                out.add_scaled(&(c1 * c2 * g), &left.tensor(&right));
            }
        }
        out
    });

    let eta = {
        let (h1, a1) = (h.clone(), a.clone());
        LinMap::new(&i, &carrier, move |_| h1.one().tensor(&a1.one()))
    };

    let (h1, a1, hc1) = (h.clone(), a.clone(), hc.clone());
    let delta = LinMap::new(&carrier, &cc, move |l| {
        let (hl, al) = l.split_at(wh);
        let mut out = Vector::zero();
        for (t, c1) in &h1.comultiply(&hl) {
            let (x1, x2) = t.split_at(wh);
            for (u, c2) in &hc1.coact(&x2) {
                let (coeff, x20) = u.split_at(wa);
                for (v, c3) in &a1.comultiply(&al) {
                    let (y1, y2) = v.split_at(wa);
                    let first = Vector::basis(x1.clone()).tensor(&a1.multiply(&coeff, &y1));
                    let second = Vector::basis(Label::pair(&x20, &y2));
                    out.add_scaled(&(c1 * c2 * c3), &first.tensor(&second));
                }
            }
        }
        out
    });

    let (h1, a1) = (h.clone(), a.clone());
    let epsilon = LinMap::new(&carrier, &i, move |l| {
        let (hl, al) = l.split_at(wh);
        Vector::term(h1.counit(&hl) * a1.counit(&al), Label::Unit)
    });

    let name = format!("{}⋊{}", h.name(), a.name());
    let ring = Bimonoid::new(name, &carrier, mu, eta, delta, epsilon, None)?;
    check_bialgebra_laws(&ring, &Braiding::symmetric(), k)?.into_result()?;
    let mut product = SemidirectRing {
        ring,
        source: hb.clone(),
    };
    if h.antipode().is_some() && a.antipode().is_some() {
        let s = semidirect_antipode(&product, k)?;
        product.ring = product.ring.with_antipode(s)?;
    }
    Ok(product)
}

/// The antipode of `H⋊A`; with `c = h₋₁` and `Δ²c = c₍₁₎⊗c₍₂₎⊗c₍₃₎`,
///
/// ```text
/// S(h⊗a) = Σ γ(c₍₃₎, S_A(c₍₂₎a₍₂₎)) · S_H(h₀) ⊗ S_A(c₍₁₎a₍₁₎)
/// ```
///
/// Both antipode identities are verified on window `k`.
pub fn semidirect_antipode(p: &SemidirectRing, k: usize) -> Result<LinMap> {
    let hb = p.source();
    let h = hb.hopf().clone();
    let a = hb.base().clone();
    let (sh, sa) = match (h.antipode(), a.antipode()) {
        (Some(x), Some(y)) => (x.clone(), y.clone()),
        _ => {
            return Err(Error::Config(
                "the semidirect antipode needs antipodes on both factors".into(),
            ))
        }
    };
    let hc = hb.comodule().clone();
    let gamma = hb.coelement().clone();
    let (wh, wa) = (h.carrier().width(), a.carrier().width());
    let carrier = p.ring().carrier().clone();
    let s = LinMap::new(&carrier, &carrier, move |l| {
        let (hl, al) = l.split_at(wh);
        let mut out = Vector::zero();
        for (t, c1) in &hc.coact(&hl) {
            let (c, h0) = t.split_at(wa);
            let sh0 = sh.apply(&h0);
            for (u, c2) in &a.comultiply(&c) {
                let (p1, rest) = u.split_at(wa);
                for (v, c3) in &a.comultiply(&rest) {
                    let (p2, p3) = v.split_at(wa);
                    for (w, c4) in &a.comultiply(&al) {
                        let (a1, a2) = w.split_at(wa);
                        let inner = sa.apply_vec(&a.multiply(&p2, &a2));
                        let g: BigInt = inner
                            .iter()
                            .map(|(m, cm)| cm * gamma.gamma(&p3, m))
                            .sum();
                        if g.is_zero() {
                            continue;
                        }
                        let outer = sa.apply_vec(&a.multiply(&p1, &a1));
                        out.add_scaled(&(c1 * c2 * c3 * c4 * g), &sh0.tensor(&outer));
                    }
                }
            }
        }
        out
    });
    check_antipode(p.ring(), &s, k)?.into_result()?;
    Ok(s)
}

/// An object of `A`-comodules carrying an `H`-coaction `χ: B → H⊗B` that is
/// itself `A`-colinear.
#[derive(Clone)]
pub struct HComodule {
    alpha: Comodule,
    chi: LinMap,
    source: ComoduleBimonoid,
}

impl HComodule {
    pub fn new(hb: &ComoduleBimonoid, alpha: Comodule, chi: LinMap) -> Result<HComodule> {
        let hs = hb.hopf().carrier();
        let b = alpha.carrier();
        if chi.dom() != b || chi.cod() != &Space::pair(hs, b) {
            return Err(Error::mismatch(
                format!("{b} → {}", Space::pair(hs, b)),
                format!("{} → {}", chi.dom(), chi.cod()),
            ));
        }
        Ok(HComodule {
            alpha,
            chi,
            source: hb.clone(),
        })
    }

    /// A chain complex with differential of degree `-s`, as a module over
    /// `H = D ⊕ I` with `D = ℤ@s`: `α(b) = x^n⊗b`, `χ(b) = 1⊗b + d⊗db`.
    pub fn from_chain(hb: &ComoduleBimonoid, x: &ChainComplex) -> Result<HComodule> {
        let dl = hb
            .hopf()
            .carrier()
            .summands()
            .and_then(|(d, _)| d.basis())
            .filter(|b| b.len() == 1)
            .map(|b| Label::left(b[0].clone()))
            .ok_or_else(|| Error::Config("H must be D ⊕ I with D of rank one".into()))?;
        let deg = hb.comodule().coact(&dl);
        let s = match deg.labels().next().and_then(|t| t.factors()[0].atom_index("x")) {
            Some([s]) if deg.len() == 1 => *s,
            _ => return Err(Error::Config("D must be homogeneous over ℤ[x, x⁻¹]".into())),
        };
        if x.step() != -s {
            return Err(Error::IllegalChain(format!(
                "differential has degree {}, the carrier needs {}",
                x.step(),
                -s
            )));
        }
        let a = hb.base().clone();
        let carrier = x.space();
        let xc = x.clone();
        let alpha = LinMap::new(&carrier, &Space::pair(a.carrier(), &carrier), move |l| {
            let n = xc.degree_of(l).expect("basis label");
            Vector::basis(Label::pair(&monomial(&[n]), l))
        });
        let alpha = Comodule::new(&a, &carrier, alpha)?;
        let xc = x.clone();
        let one = Label::right(Label::Unit);
        let chi = LinMap::new(
            &carrier,
            &Space::pair(hb.hopf().carrier(), &carrier),
            move |l| {
                Vector::basis(Label::pair(&one, l))
                    + Vector::basis(dl.clone()).tensor(&xc.differential(l))
            },
        );
        HComodule::new(hb, alpha, chi)
    }

    pub fn alpha(&self) -> &Comodule {
        &self.alpha
    }

    pub fn chi(&self) -> &LinMap {
        &self.chi
    }

    pub fn carrier(&self) -> &Space {
        self.alpha.carrier()
    }

    /// `χ` as a comodule over `H`, for the legality laws.
    fn chi_comodule(&self) -> Result<Comodule> {
        Comodule::new_unchecked(self.source.hopf(), self.carrier(), self.chi.clone())
    }

    /// `α` and `χ` are legal coactions, and `χ` is `A`-colinear.
    pub fn validate(&self, k: usize) -> Result<LawReport> {
        let mut r = self.alpha.laws(k)?;
        for res in self.chi_comodule()?.laws(k)?.results {
            r.push(format!("chi-{}", res.law), res.verdict);
        }
        let target = Comodule::tensor(self.source.comodule(), &self.alpha)?;
        r.push(
            "chi-colinear",
            check_comodule_morphism(&self.chi, &self.alpha, &target, k)?,
        );
        Ok(r)
    }

    /// `B⊗C` with `χ(b⊗c) = Σ h·σ(b₀⊗h') ⊗ c₀` using the coelement braiding.
    pub fn tensor(b: &HComodule, c: &HComodule) -> Result<HComodule> {
        let hb = b.source.clone();
        let alpha = Comodule::tensor(&b.alpha, &c.alpha)?;
        let hs = hb.hopf().carrier();
        let sigma = comodule_braiding(&b.alpha, hb.comodule(), hb.coelement())?;
        let ib = LinMap::identity(b.carrier());
        let ic = LinMap::identity(c.carrier());
        let ih = LinMap::identity(hs);
        let chi = compose_all(&[
            &crate::linalg::tensor_maps(&b.chi, &c.chi),
            &tensor_all(&[&ih, &sigma, &ic]),
            &tensor_all(&[hb.hopf().mu(), &ib, &ic]),
        ])?;
        HComodule::new(&hb, alpha, chi)
    }
}

impl fmt::Debug for HComodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HComodule({})", self.carrier())
    }
}

/// `F(B) = (B, (1⊗α_B)∘χ_B)` over `H⋊A`.
pub fn comparison_f(b: &HComodule, p: &SemidirectRing, k: usize) -> Result<Comodule> {
    let hs = p.source().hopf().carrier();
    let beta = compose_all(&[
        b.chi(),
        &crate::linalg::tensor_maps(&LinMap::identity(hs), b.alpha().coaction()),
    ])?;
    let m = Comodule::new_unchecked(p.ring(), b.carrier(), beta)?;
    m.laws(k)?.into_result()?;
    Ok(m)
}

/// `F⁻¹(B)`: `α = (ε_H⊗1)∘β` and `χ = (1⊗ε_A⊗1)∘β`.
pub fn comparison_f_inverse(b: &Comodule, p: &SemidirectRing, k: usize) -> Result<HComodule> {
    let hb = p.source();
    let (h, a) = (hb.hopf(), hb.base());
    if b.ring().carrier() != p.ring().carrier() {
        return Err(Error::mismatch(p.ring().carrier(), b.ring().carrier()));
    }
    let ib = LinMap::identity(b.carrier());
    let ih = LinMap::identity(h.carrier());
    let ia = LinMap::identity(a.carrier());
    let alpha = compose_all(&[b.coaction(), &tensor_all(&[h.epsilon(), &ia, &ib])])?;
    let chi = compose_all(&[b.coaction(), &tensor_all(&[&ih, a.epsilon(), &ib])])?;
    let alpha = Comodule::new_unchecked(a, b.carrier(), alpha)?;
    let out = HComodule::new(hb, alpha, chi)?;
    out.validate(k)?.into_result()?;
    Ok(out)
}

/// Window-exact data equality of two `H`-comodules in `A`-comodules.
pub fn same_h_comodule(x: &HComodule, y: &HComodule, k: usize) -> Result<bool> {
    Ok(
        equal_on_window(x.alpha().coaction(), y.alpha().coaction(), k)?.is_equal()
            && equal_on_window(x.chi(), y.chi(), k)?.is_equal(),
    )
}
