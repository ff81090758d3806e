//! The Hopf rings `P = ℤ⟨ξ, ξ⁻¹, ψ⟩/(ξψ + ψξ, ψ²)` and `P₊`, presented by
//! normal-form monomials `ψ^a ξ^k`, and the equivalence between chain
//! complexes and their comodules.
//!
//! The parameter `s = ±1` is the degree of the element `ψ`: `Δ(ψ) = ψ⊗1 +
//! ξ^s⊗ψ` and `S(ψ) = ψξ^{-s}`. `s = -1` gives `P`, `s = +1` gives `P₊`.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::chains::{ChainComplex, ChainMap};
use crate::diffhopf::{build_differential_hopf, generator, generator_comodule};
use crate::error::{Error, Result};
use crate::grading::{comodule_to_graded_projections, exponent, laurent_hopf, monomial, sign_coelement, Bicharacter};
use crate::laws::{check_comodule_morphism, Bimonoid, Comodule, LawReport};
use crate::linalg::{shell, tensor_maps, equal_on_window, compose_all, Label, LinMap, Space, Vector};
use crate::semidirect::semidirect_product;

pub const FAMILY: &str = "pareigis";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Xi,
    XiInv,
    Psi,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::Xi => "ξ",
            Letter::XiInv => "ξ⁻¹",
            Letter::Psi => "ψ",
        })
    }
}

/// A word in the free monoid on `ξ, ξ⁻¹, ψ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Letter>);

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        self.0.iter().try_for_each(|l| write!(f, "{l}"))
    }
}

/// Accepts `ξ`, `ξ⁻¹`, `ψ` and the ASCII spellings `x`, `X` (for `ξ⁻¹`), `p`.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let mut out = Vec::new();
        let mut rest = s.trim();
        if rest == "1" {
            return Ok(Word::default());
        }
        while let Some(c) = rest.chars().next() {
            rest = &rest[c.len_utf8()..];
            let letter = match c {
                'ξ' | 'x' => {
                    if let Some(r) = rest.strip_prefix("⁻¹") {
                        rest = r;
                        Letter::XiInv
                    } else {
                        Letter::Xi
                    }
                }
                'X' => Letter::XiInv,
                'ψ' | 'p' => Letter::Psi,
                c if c.is_whitespace() => continue,
                _ => {
                    return Err(Error::LabelParse {
                        input: s.into(),
                        reason: format!("unexpected {c:?}"),
                    })
                }
            };
            out.push(letter);
        }
        Ok(Word(out))
    }
}

/// One application of a rewriting rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rewrite {
    Zero,
    Signed(i64, Word),
}

/// Applies the rule matching letters `i, i+1`, if any:
/// `ξψ → -ψξ`, `ξ⁻¹ψ → -ψξ⁻¹`, `ψψ → 0`, `ξξ⁻¹ → 1`, `ξ⁻¹ξ → 1`.
pub fn rewrite_at(w: &Word, i: usize) -> Option<Rewrite> {
    use Letter::*;
    let (a, b) = (*w.0.get(i)?, *w.0.get(i + 1)?);
    let mut v = w.0.clone();
    match (a, b) {
        (Psi, Psi) => Some(Rewrite::Zero),
        (Xi, Psi) | (XiInv, Psi) => {
            v.swap(i, i + 1);
            Some(Rewrite::Signed(-1, Word(v)))
        }
        (Xi, XiInv) | (XiInv, Xi) => {
            v.drain(i..i + 2);
            Some(Rewrite::Signed(1, Word(v)))
        }
        _ => None,
    }
}

/// A normal-form monomial `ψ^a ξ^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PareigisMonomial {
    pub a: u8,
    pub k: i64,
}

impl PareigisMonomial {
    pub fn new(a: u8, k: i64) -> PareigisMonomial {
        assert!(a <= 1, "ψ-exponent must be 0 or 1");
        PareigisMonomial { a, k }
    }

    pub fn label(&self) -> Label {
        Label::atom(FAMILY, &[self.a as i64, self.k])
    }

    pub fn from_label(l: &Label) -> Option<PareigisMonomial> {
        match l.atom_index(FAMILY)? {
            [a @ (0 | 1), k] => Some(PareigisMonomial { a: *a as u8, k: *k }),
            _ => None,
        }
    }

    pub fn word(&self) -> Word {
        let mut v = vec![Letter::Psi; self.a as usize];
        let x = if self.k >= 0 { Letter::Xi } else { Letter::XiInv };
        v.extend(std::iter::repeat(x).take(self.k.unsigned_abs() as usize));
        Word(v)
    }

    fn from_normal_word(w: &[Letter]) -> PareigisMonomial {
        let a = w.iter().take_while(|l| **l == Letter::Psi).count() as u8;
        let k = w[a as usize..]
            .iter()
            .map(|l| if *l == Letter::Xi { 1 } else { -1 })
            .sum();
        PareigisMonomial { a, k }
    }
}

/// `ψ^a ξ^k` as a basis label.
pub fn pm(a: u8, k: i64) -> Label {
    PareigisMonomial::new(a, k).label()
}

/// Rewrites leftmost-first to `±ψ^a ξ^k` or `0`.
pub fn normalize_word(w: &Word) -> Vector {
    let mut sign = 1i64;
    let mut w = w.clone();
    let mut i = 0;
    while i + 1 < w.0.len() {
        match rewrite_at(&w, i) {
            Some(Rewrite::Zero) => return Vector::zero(),
            Some(Rewrite::Signed(e, next)) => {
                sign *= e;
                w = next;
                i = i.saturating_sub(1);
            }
            None => i += 1,
        }
    }
    Vector::term(sign, PareigisMonomial::from_normal_word(&w.0).label())
}

/// The name of the ring for `s`.
pub fn ring_name(s: i64) -> &'static str {
    if s < 0 {
        "P"
    } else {
        "P+"
    }
}

/// Recovers `s` from a ring built by [`pareigis_ring`].
pub fn ring_sign(ring: &Bimonoid) -> Option<i64> {
    match ring.name() {
        "P" => Some(-1),
        "P+" => Some(1),
        _ => None,
    }
}

pub fn pareigis_space(s: i64) -> Space {
    Space::basic(
        ring_name(s),
        |l| PareigisMonomial::from_label(l).is_some(),
        |k| {
            shell(k)
                .into_iter()
                .flat_map(|j| [pm(0, j), pm(1, j)])
                .collect()
        },
    )
}

fn word_of(l: &Label) -> Word {
    PareigisMonomial::from_label(l).expect("Pareigis label").word()
}

fn product(a: &Label, b: &Label) -> Vector {
    let mut w = word_of(a);
    w.0.extend(word_of(b).0);
    normalize_word(&w)
}

fn product_vec(u: &Vector, v: &Vector) -> Vector {
    let mut out = Vector::zero();
    for (a, x) in u {
        for (b, y) in v {
            out.add_scaled(&(x * y), &product(a, b));
        }
    }
    out
}

/// Product in `P⊗P`: `(p⊗q)(p'⊗q') = pp'⊗qq'`.
fn product_pairs(u: &Vector, v: &Vector) -> Vector {
    let mut out = Vector::zero();
    for (l, x) in u {
        let (p, q) = l.split_at(1);
        for (m, y) in v {
            let (p2, q2) = m.split_at(1);
            out.add_scaled(&(x * y), &product(&p, &p2).tensor(&product(&q, &q2)));
        }
    }
    out
}

fn delta_letter(s: i64, l: Letter) -> Vector {
    match l {
        Letter::Xi => Vector::basis(Label::pair(&pm(0, 1), &pm(0, 1))),
        Letter::XiInv => Vector::basis(Label::pair(&pm(0, -1), &pm(0, -1))),
        Letter::Psi => {
            Vector::basis(Label::pair(&pm(1, 0), &pm(0, 0)))
                + Vector::basis(Label::pair(&pm(0, s), &pm(1, 0)))
        }
    }
}

fn antipode_letter(s: i64, l: Letter) -> Vector {
    match l {
        Letter::Xi => Vector::basis(pm(0, -1)),
        Letter::XiInv => Vector::basis(pm(0, 1)),
        Letter::Psi => Vector::basis(pm(1, -s)),
    }
}

/// `P` for `s = -1`, `P₊` for `s = +1`. `Δ` is extended multiplicatively
/// and the antipode anti-multiplicatively from the generators.
pub fn pareigis_ring(s: i64) -> Result<Bimonoid> {
    if s != 1 && s != -1 {
        return Err(Error::Config(format!("s must be ±1, got {s}")));
    }
    let p = pareigis_space(s);
    let pp = Space::pair(&p, &p);
    let i = Space::unit();
    let mu = LinMap::new(&pp, &p, |l| {
        let (a, b) = l.split_at(1);
        product(&a, &b)
    });
    let eta = LinMap::relabel(&i, &p, |_| pm(0, 0));
    let delta = LinMap::new(&p, &pp, move |l| {
        word_of(l)
            .0
            .iter()
            .fold(Vector::basis(Label::pair(&pm(0, 0), &pm(0, 0))), |acc, &x| {
                product_pairs(&acc, &delta_letter(s, x))
            })
    });
    let epsilon = LinMap::new(&p, &i, |l| match PareigisMonomial::from_label(l) {
        Some(PareigisMonomial { a: 0, .. }) => Vector::basis(Label::Unit),
        _ => Vector::zero(),
    });
    let antipode = LinMap::new(&p, &p, move |l| {
        word_of(l)
            .0
            .iter()
            .rev()
            .fold(Vector::basis(pm(0, 0)), |acc, &x| product_vec(&acc, &antipode_letter(s, x)))
    });
    Bimonoid::new(ring_name(s), &p, mu, eta, delta, epsilon, Some(antipode))
}

/// Builds `(I⊕D)⋊ℤ[x, x⁻¹]` with `D = ℤ@s`, `κ = -1`, and compares its five
/// structure maps with those of `ring` along `ψ^a ξ^k ↔ d^a⊗x^k`.
pub fn identify_against(ring: &Bimonoid, s: i64, k: usize) -> Result<LawReport> {
    let c = sign_coelement(&Bicharacter::single(-1));
    let hb = build_differential_hopf(&generator_comodule(&[s]), &c)?;
    let q = semidirect_product(&hb, k)?.ring().clone();
    let p = ring.carrier().clone();
    let to_q = LinMap::relabel(&p, q.carrier(), |l| {
        let m = PareigisMonomial::from_label(l).expect("Pareigis label");
        let h = if m.a == 1 {
            Label::left(generator())
        } else {
            Label::right(Label::Unit)
        };
        Label::pair(&h, &monomial(&[m.k]))
    });
    let to_p = LinMap::relabel(q.carrier(), &p, |l| {
        let (h, x) = l.split_at(1);
        let k = exponent(&x).expect("monomial")[0];
        pm(u8::from(h != Label::right(Label::Unit)), k)
    });
    let mut r = LawReport::default();
    r.push(
        "mu",
        equal_on_window(
            ring.mu(),
            &compose_all(&[&tensor_maps(&to_q, &to_q), q.mu(), &to_p])?,
            k,
        )?,
    );
    r.push("eta", equal_on_window(ring.eta(), &compose_all(&[q.eta(), &to_p])?, k)?);
    r.push(
        "delta",
        equal_on_window(
            ring.delta(),
            &compose_all(&[&to_q, q.delta(), &tensor_maps(&to_p, &to_p)])?,
            k,
        )?,
    );
    r.push("epsilon", equal_on_window(ring.epsilon(), &compose_all(&[&to_q, q.epsilon()])?, k)?);
    match (ring.antipode(), q.antipode()) {
        (Some(sp), Some(sq)) => r.push(
            "antipode",
            equal_on_window(sp, &compose_all(&[&to_q, sq, &to_p])?, k)?,
        ),
        _ => return Err(Error::Config("both rings need an antipode".into())),
    }
    Ok(r)
}

/// [`identify_against`] with `pareigis_ring(s)`.
pub fn identify_semidirect(s: i64, k: usize) -> Result<LawReport> {
    identify_against(&pareigis_ring(s)?, s, k)
}

/// `β(b) = ξⁿ⊗b + ψξ^{n-s}⊗db` for `b` of degree `n`. The differential of
/// `x` must have degree `-s`.
pub fn chain_to_comodule(x: &ChainComplex, s: i64) -> Result<Comodule> {
    if x.step() != -s {
        return Err(Error::IllegalChain(format!(
            "differential has degree {}, P with s = {s} needs {}",
            x.step(),
            -s
        )));
    }
    if !x.check_d_squared() {
        return Err(Error::IllegalChain("d∘d ≠ 0".into()));
    }
    let ring = pareigis_ring(s)?;
    let xc = x.clone();
    let beta = LinMap::new(&x.space(), &Space::pair(ring.carrier(), &x.space()), move |l| {
        let n = xc.degree_of(l).expect("basis label");
        Vector::basis(Label::pair(&pm(0, n), l))
            + Vector::basis(pm(1, n - s)).tensor(&xc.differential(l))
    });
    Comodule::new(&ring, &x.space(), beta)
}

/// Inverse of [`chain_to_comodule`]. The basis of `b` must be homogeneous
/// for the `ξ`-grading.
pub fn comodule_to_chain(b: &Comodule) -> Result<ChainComplex> {
    let illegal = |m: String| Error::IllegalComodule(m);
    let s = ring_sign(b.ring())
        .ok_or_else(|| illegal(format!("ring {} is not a Pareigis ring", b.ring().name())))?;
    let carrier = b.carrier().clone();
    let basis = carrier
        .basis()
        .ok_or_else(|| illegal(format!("carrier {carrier} is not finite")))?;

    let z = laurent_hopf(1);
    let beta = b.coaction().clone();
    let xi_part = LinMap::new(&carrier, &Space::pair(z.carrier(), &carrier), move |l| {
        let mut out = Vector::zero();
        for (t, c) in &beta.apply(l) {
            let (r, x) = t.split_at(1);
            if let Some(PareigisMonomial { a: 0, k }) = PareigisMonomial::from_label(&r) {
                out.add_term(Label::pair(&monomial(&[k]), &x), c.clone());
            }
        }
        out
    });
    let graded = Comodule::new(&z, &carrier, xi_part)?;
    let projections = comodule_to_graded_projections(&graded)?;

    let mut bases: BTreeMap<i64, Vec<Label>> = BTreeMap::new();
    let mut degree = BTreeMap::new();
    for l in &basis {
        let own = Vector::basis(l.clone());
        let n = projections
            .iter()
            .find(|(_, p)| p.apply(l) == own)
            .map(|(g, _)| g[0])
            .ok_or_else(|| illegal(format!("basis element {l} is not homogeneous")))?;
        bases.entry(n).or_default().push(l.clone());
        degree.insert(l.clone(), n);
    }
    let mut d = BTreeMap::new();
    for l in &basis {
        let n = degree[l];
        let mut v = Vector::zero();
        for (t, c) in &b.coact(l) {
            let (r, x) = t.split_at(1);
            match PareigisMonomial::from_label(&r) {
                Some(PareigisMonomial { a: 1, k }) if k == n - s => v.add_term(x, c.clone()),
                Some(PareigisMonomial { a: 1, k }) => {
                    return Err(illegal(format!(
                        "β({l}) has a term ψξ^{k}, expected ψξ^{}",
                        n - s
                    )))
                }
                _ => {}
            }
        }
        d.insert(l.clone(), v);
    }
    let x = ChainComplex::from_label_differential(-s, bases, carrier, |l| d[l].clone())
        .map_err(|e| illegal(e.to_string()))?;
    let back = chain_to_comodule(&x, s).map_err(|e| illegal(e.to_string()))?;
    if let Some(l) = basis.iter().find(|l| back.coact(l) != b.coact(l)) {
        return Err(illegal(format!("coaction at {l} is not of chain form")));
    }
    Ok(x)
}

/// A chain map as a morphism of the associated comodules.
pub fn chain_map_to_morphism(f: &ChainMap, s: i64) -> Result<(Comodule, Comodule, LinMap)> {
    let x = chain_to_comodule(&f.source, s)?;
    let y = chain_to_comodule(&f.target, s)?;
    let v = check_comodule_morphism(&f.map, &x, &y, 0)?;
    if let Some(ce) = v.counterexample() {
        return Err(Error::violation("comodule-morphism", ce.clone()));
    }
    Ok((x, y, f.map.clone()))
}

/// A comodule morphism as a chain map of the associated complexes.
pub fn morphism_to_chain_map(f: &LinMap, x: &Comodule, y: &Comodule) -> Result<ChainMap> {
    let v = check_comodule_morphism(f, x, y, 0)?;
    if let Some(ce) = v.counterexample() {
        return Err(Error::violation("comodule-morphism", ce.clone()));
    }
    let (cx, cy) = (comodule_to_chain(x)?, comodule_to_chain(y)?);
    ChainMap::new(&cx, &cy, f.clone())
}

/// Comodule JSON: `{ring, basis: [labels], coaction: {label: [[coeff,
/// ringLabel, label]]}}` with ring `"pareigis"` or `"pareigis-plus"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComoduleJson {
    pub ring: String,
    pub basis: Vec<String>,
    pub coaction: BTreeMap<String, Vec<(i64, String, String)>>,
}

/// Ring selection by config name.
pub fn ring_by_name(name: &str) -> Result<i64> {
    match name {
        "pareigis" => Ok(-1),
        "pareigis-plus" => Ok(1),
        other => Err(Error::Config(format!("unknown Pareigis ring {other:?}"))),
    }
}

impl ComoduleJson {
    pub fn build(&self) -> Result<Comodule> {
        let s = ring_by_name(&self.ring)?;
        let ring = pareigis_ring(s)?;
        let basis = self
            .basis
            .iter()
            .map(|t| Label::decode(t))
            .collect::<Result<Vec<Label>>>()?;
        if let Some(l) = basis.iter().find(|l| l.width() != 1) {
            return Err(Error::Config(format!("basis label {l} must be an atom")));
        }
        let mut h = DefaultHasher::new();
        self.basis.hash(&mut h);
        let carrier = Space::finite(format!("B#{:016x}", h.finish()), basis);
        let mut table: BTreeMap<Label, Vector> = BTreeMap::new();
        for (src, terms) in &self.coaction {
            let src = Label::decode(src)?;
            if !carrier.is_valid(&src) {
                return Err(Error::Config(format!("coaction given on unknown label {src}")));
            }
            let mut v = Vector::zero();
            for (c, r, x) in terms {
                let (r, x) = (Label::decode(r)?, Label::decode(x)?);
                if PareigisMonomial::from_label(&r).is_none() || !carrier.is_valid(&x) {
                    return Err(Error::Config(format!("bad coaction term {r}⊗{x}")));
                }
                v.add_term(Label::pair(&r, &x), BigInt::from(*c));
            }
            table.insert(src, v);
        }
        let coaction = LinMap::new(&carrier, &Space::pair(ring.carrier(), &carrier), move |l| {
            table.get(l).cloned().unwrap_or_default()
        });
        Comodule::new(&ring, &carrier, coaction)
    }

    pub fn from_comodule(b: &Comodule) -> Result<ComoduleJson> {
        let ring = match ring_sign(b.ring()) {
            Some(-1) => "pareigis",
            Some(_) => "pareigis-plus",
            None => return Err(Error::Config("not a Pareigis comodule".into())),
        };
        let basis = b
            .carrier()
            .basis()
            .ok_or_else(|| Error::Config("carrier is not finite".into()))?;
        let mut coaction = BTreeMap::new();
        for l in &basis {
            let mut terms = Vec::new();
            for (t, c) in &b.coact(l) {
                let (r, x) = t.split_at(1);
                let c = c
                    .to_i64()
                    .ok_or_else(|| Error::Config(format!("coefficient {c} does not fit in 64 bits")))?;
                terms.push((c, r.encode(), x.encode()));
            }
            coaction.insert(l.encode(), terms);
        }
        Ok(ComoduleJson {
            ring: ring.into(),
            basis: basis.iter().map(Label::encode).collect(),
            coaction,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::{chain_label, random_chain_map, random_complex};
    use crate::laws::{check_antipode, check_bialgebra_laws, Braiding};
    use crate::linalg::IntMatrix;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    
    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    // Sign and exponent by counting: each ψ passes the ξ-letters to its left.
    fn counted(word: &Word) -> Vector {
        let mut sign = 1;
        let mut seen = 0i64;
        let mut psis = 0;
        let mut k = 0;
        for l in &word.0 {
            match l {
                Letter::Psi => {
                    psis += 1;
                    if seen % 2 == 1 {
                        sign = -sign;
                    }
                }
                Letter::Xi => {
                    seen += 1;
                    k += 1
                }
                Letter::XiInv => {
                    seen += 1;
                    k -= 1
                }
            }
        }
        if psis > 1 {
            Vector::zero()
        } else {
            Vector::term(sign, pm(psis, k))
        }
    }

    fn push_new(out: &mut Vec<Vector>, v: Vector) {
        if !out.contains(&v) {
            out.push(v);
        }
    }

    fn all_orders(word: &Word, sign: i64, out: &mut Vec<Vector>) {
        let mut irreducible = true;
        for i in 0..word.0.len().saturating_sub(1) {
            match rewrite_at(word, i) {
                Some(Rewrite::Zero) => {
                    irreducible = false;
                    push_new(out, Vector::zero());
                }
                Some(Rewrite::Signed(e, next)) => {
                    irreducible = false;
                    all_orders(&next, sign * e, out);
                }
                None => {}
            }
        }
        if irreducible {
            push_new(out, Vector::term(sign, PareigisMonomial::from_normal_word(&word.0).label()));
        }
    }

    #[test]
    fn word_examples() {
        assert_eq!(normalize_word(&w("ξψξ⁻¹")), Vector::term(-1, pm(1, 0)));
        assert!(normalize_word(&w("ψψ")).is_zero());
        assert_eq!(normalize_word(&w("ξξ⁻¹")), Vector::basis(pm(0, 0)));
        assert_eq!(w("xpX"), w("ξψξ⁻¹"));
    }

    #[test]
    fn rewriting_is_confluent() {
        use Letter::*;
        let mut words = vec![Word::default()];
        for _len in 1..=6 {
            words = words
                .iter()
                .flat_map(|v| {
                    [Xi, XiInv, Psi].into_iter().map(move |l| {
                        let mut u = v.0.clone();
                        u.push(l);
                        Word(u)
                    })
                })
                .collect();
            for word in &words {
                let mut forms = Vec::new();
                all_orders(word, 1, &mut forms);
                assert_eq!(forms.len(), 1, "{word}");
                assert_eq!(forms.into_iter().next().unwrap(), counted(word), "{word}");
                assert_eq!(normalize_word(word), counted(word));
            }
        }
    }

    #[test]
    fn generator_values() {
        let p = pareigis_ring(-1).unwrap();
        assert_eq!(
            p.comultiply(&pm(1, 0)),
            Vector::basis(Label::pair(&pm(1, 0), &pm(0, 0)))
                + Vector::basis(Label::pair(&pm(0, -1), &pm(1, 0)))
        );
        assert_eq!(p.counit(&pm(1, 0)), BigInt::from(0));
        assert_eq!(p.counit(&pm(0, 1)), BigInt::from(1));
        assert_eq!(
            p.comultiply(&pm(1, 1)),
            Vector::basis(Label::pair(&pm(1, 1), &pm(0, 1)))
                + Vector::basis(Label::pair(&pm(0, 0), &pm(1, 1)))
        );
        let s = p.antipode().unwrap();
        assert_eq!(s.apply(&pm(1, 0)), Vector::basis(pm(1, 1)));
        let q = pareigis_ring(1).unwrap();
        assert_eq!(q.antipode().unwrap().apply(&pm(1, 0)), Vector::basis(pm(1, -1)));
    }

    #[test]
    fn products_match_counting() {
        let p = pareigis_ring(1).unwrap();
        for a in 0..2u8 {
            for b in 0..2u8 {
                for j in -3i64..=3 {
                    for k in -3..=3 {
                        let want = if a + b == 2 {
                            Vector::zero()
                        } else {
                            let sign = if b == 1 && j.rem_euclid(2) == 1 { -1 } else { 1 };
                            Vector::term(sign, pm(a + b, j + k))
                        };
                        assert_eq!(p.multiply(&pm(a, j), &pm(b, k)), want);
                    }
                }
            }
        }
    }

    #[test]
    fn hopf_suite_small_window() {
        for s in [-1, 1] {
            let p = pareigis_ring(s).unwrap();
            let r = check_bialgebra_laws(&p, &Braiding::symmetric(), 3).unwrap();
            assert!(r.all_pass(), "{r}");
            assert!(check_antipode(&p, p.antipode().unwrap(), 3).unwrap().all_pass());
        }
    }

    #[test]
    fn identification_and_cross_check() {
        for s in [-1, 1] {
            let r = identify_semidirect(s, 3).unwrap();
            assert!(r.all_pass(), "{r}");
        }
        let r = identify_against(&pareigis_ring(1).unwrap(), -1, 3).unwrap();
        assert!(!r.get("delta").unwrap().is_equal());
        let ce = r.get("delta").unwrap().counterexample().unwrap();
        assert_eq!(PareigisMonomial::from_label(&ce.label).unwrap().a, 1);
    }

    fn times_two() -> ChainComplex {
        ChainComplex::from_ranks(
            -1,
            &BTreeMap::from([(0, 1), (1, 1)]),
            BTreeMap::from([(1, IntMatrix::from_rows(&[vec![2]], 1))]),
        )
        .unwrap()
    }

    #[test]
    fn coaction_of_times_two() {
        let x = times_two();
        let b = chain_to_comodule(&x, 1).unwrap();
        let (b0, b1) = (chain_label(0, 0), chain_label(1, 0));
        assert_eq!(
            b.coact(&b1),
            Vector::basis(Label::pair(&pm(0, 1), &b1)) + Vector::term(2, Label::pair(&pm(1, 0), &b0))
        );
        assert_eq!(b.coact(&b0), Vector::basis(Label::pair(&pm(0, 0), &b0)));
        let back = comodule_to_chain(&b).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn chain_from_json_comodule() {
        let json = r#"{"ring": "pareigis-plus", "basis": ["u()", "v()"],
            "coaction": {"u()": [[1, "pareigis(0,1)", "u()"], [1, "pareigis(1,0)", "v()"]],
                         "v()": [[1, "pareigis(0,0)", "v()"]]}}"#;
        let b = serde_json::from_str::<ComoduleJson>(json).unwrap().build().unwrap();
        let x = comodule_to_chain(&b).unwrap();
        let (u, v) = (Label::atom("u", &[]), Label::atom("v", &[]));
        assert_eq!(x.differential(&u), Vector::basis(v.clone()));
        assert_eq!(x.degree_of(&u), Some(1));
        assert_eq!(ComoduleJson::from_comodule(&b).unwrap().build().unwrap().coact(&u), b.coact(&u));
    }

    #[test]
    fn round_trips_and_functoriality() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for s in [-1, 1] {
            for _ in 0..10 {
                let x = random_complex(&mut rng, -s, -2, 5, 3, 1);
                let b = chain_to_comodule(&x, s).unwrap();
                assert_eq!(comodule_to_chain(&b).unwrap(), x);
                let f = random_chain_map(&mut rng, &x, &x, true);
                let (bx, by, g) = chain_map_to_morphism(&f, s).unwrap();
                let back = morphism_to_chain_map(&g, &bx, &by).unwrap();
                assert!(back.same_as(&f));
            }
        }
    }

    #[test]
    fn inhomogeneous_basis_is_rejected() {
        let json = r#"{"ring": "pareigis", "basis": ["u()"],
            "coaction": {"u()": [[1, "pareigis(0,1)", "u()"], [1, "pareigis(0,0)", "u()"]]}}"#;
        let r = serde_json::from_str::<ComoduleJson>(json).unwrap().build();
        assert!(r.is_err());
    }
}
