//! The grading Hopf ring `ℤ[ℤ^r]` of Laurent polynomials, its sign
//! coelements, and graded modules as comodules.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laws::{Bimonoid, Coelement, Comodule};
use crate::linalg::{Label, LinMap, Space, Vector};

pub const MONOMIAL: &str = "x";
pub const GENERATOR: &str = "b";

/// `x^g`
pub fn monomial(g: &[i64]) -> Label {
    Label::atom(MONOMIAL, g)
}

/// The exponent of a Laurent monomial label.
pub fn exponent(l: &Label) -> Option<&[i64]> {
    l.atom_index(MONOMIAL)
}

fn add(g: &[i64], h: &[i64]) -> Vec<i64> {
    g.iter().zip(h).map(|(a, b)| a + b).collect()
}

pub fn ring_name(rank: usize) -> String {
    if rank == 1 {
        "Z".to_string()
    } else {
        format!("Z^{rank}")
    }
}

/// `ℤ[ℤ^r]` with group-like monomials.
pub fn laurent_hopf(rank: usize) -> Bimonoid {
    assert!(rank >= 1, "grading rank must be positive");
    let name = ring_name(rank);
    let z = Space::lattice(&name, MONOMIAL, rank);
    let zz = Space::pair(&z, &z);
    let i = Space::unit();
    let mu = LinMap::relabel(&zz, &z, |l| {
        let (a, b) = l.split_at(1);
        monomial(&add(exponent(&a).unwrap(), exponent(&b).unwrap()))
    });
    let eta = LinMap::relabel(&i, &z, move |_| monomial(&vec![0; rank]));
    let delta = LinMap::relabel(&z, &zz, |l| Label::pair(l, l));
    let epsilon = LinMap::relabel(&z, &i, |_| Label::Unit);
    let antipode = LinMap::relabel(&z, &z, |l| {
        let g: Vec<i64> = exponent(l).unwrap().iter().map(|a| -a).collect();
        monomial(&g)
    });
    Bimonoid::new(name, &z, mu, eta, delta, epsilon, Some(antipode))
        .expect("Laurent structure maps are well shaped")
}

/// A diagonal sign bicharacter `γ(g, h) = Π_c κ_c^{g_c h_c}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bicharacter {
    kappas: Vec<i8>,
}

impl Bicharacter {
    pub fn new(kappas: Vec<i8>) -> Result<Bicharacter> {
        if kappas.is_empty() {
            return Err(Error::Config("a bicharacter needs rank at least 1".into()));
        }
        if let Some(k) = kappas.iter().find(|k| k.abs() != 1) {
            return Err(Error::Config(format!("sign {k} is not ±1")));
        }
        Ok(Bicharacter { kappas })
    }

    /// Rank one with the given sign.
    pub fn single(kappa: i8) -> Bicharacter {
        Bicharacter::new(vec![kappa]).expect("sign")
    }

    pub fn rank(&self) -> usize {
        self.kappas.len()
    }

    pub fn kappas(&self) -> &[i8] {
        &self.kappas
    }

    pub fn sign(&self, g: &[i64], h: &[i64]) -> i64 {
        let flips = self
            .kappas
            .iter()
            .zip(g.iter().zip(h))
            .filter(|(k, (a, b))| **k == -1 && a.rem_euclid(2) == 1 && b.rem_euclid(2) == 1)
            .count();
        if flips % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

pub fn sign_coelement(b: &Bicharacter) -> Coelement {
    let ring = laurent_hopf(b.rank());
    let b = b.clone();
    Coelement::new(&ring, move |x, y| {
        BigInt::from(b.sign(exponent(x).unwrap(), exponent(y).unwrap()))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub degree: Vec<i64>,
    pub rank: usize,
}

/// A finite-rank free graded module: a free component per degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraded")]
pub struct GradedModule {
    rank: usize,
    components: Vec<Component>,
}

#[derive(Deserialize)]
struct RawGraded {
    rank: usize,
    components: Vec<Component>,
}

impl TryFrom<RawGraded> for GradedModule {
    type Error = Error;

    fn try_from(raw: RawGraded) -> Result<GradedModule> {
        GradedModule::new(raw.rank, raw.components)
    }
}

impl GradedModule {
    /// Components of equal degree are merged and empty ones dropped.
    pub fn new(rank: usize, components: Vec<Component>) -> Result<GradedModule> {
        let mut merged: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        for c in components {
            if c.degree.len() != rank {
                return Err(Error::Config(format!(
                    "degree {:?} has length {}, expected {rank}",
                    c.degree,
                    c.degree.len()
                )));
            }
            *merged.entry(c.degree).or_default() += c.rank;
        }
        Ok(GradedModule {
            rank,
            components: merged
                .into_iter()
                .filter(|(_, r)| *r > 0)
                .map(|(degree, rank)| Component { degree, rank })
                .collect(),
        })
    }

    pub fn zero(rank: usize) -> GradedModule {
        GradedModule {
            rank,
            components: Vec::new(),
        }
    }

    pub fn grading_rank(&self) -> usize {
        self.rank
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Basis labels `b(g…, i)` with their degrees.
    pub fn graded_basis(&self) -> Vec<(Vec<i64>, Label)> {
        let mut out = Vec::new();
        for c in &self.components {
            for i in 0..c.rank {
                let mut idx = c.degree.clone();
                idx.push(i as i64);
                out.push((c.degree.clone(), Label::atom(GENERATOR, &idx)));
            }
        }
        out
    }

    pub fn name(&self) -> String {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                let d: Vec<String> = c.degree.iter().map(i64::to_string).collect();
                format!("{}:{}", d.join(","), c.rank)
            })
            .collect();
        format!("M[{}]", parts.join(";"))
    }
}

/// The underlying ungraded module: the disjoint union of component bases.
pub fn sigma_functor(m: &GradedModule) -> Space {
    Space::finite(
        m.name(),
        m.graded_basis().into_iter().map(|(_, l)| l).collect(),
    )
}

/// `b ↦ x^{deg b} ⊗ b`
pub fn graded_to_comodule(m: &GradedModule) -> Comodule {
    let ring = laurent_hopf(m.grading_rank());
    let carrier = sigma_functor(m);
    let degrees: BTreeMap<Label, Vec<i64>> =
        m.graded_basis().into_iter().map(|(g, l)| (l, g)).collect();
    let coaction = LinMap::new(
        &carrier,
        &Space::pair(ring.carrier(), &carrier),
        move |l| match degrees.get(l) {
            Some(g) => Vector::basis(Label::pair(&monomial(g), l)),
            None => Vector::zero(),
        },
    );
    Comodule::new_unchecked(&ring, &carrier, coaction).expect("coaction shape")
}

/// `p_g(b)` is the `x^g`-component of `β(b)`. Only nonzero projections are
/// returned; `Σ_g p_g = id` and `p_g p_h = δ_{gh} p_g` are verified.
pub fn comodule_to_graded_projections(x: &Comodule) -> Result<BTreeMap<Vec<i64>, LinMap>> {
    let carrier = x.carrier();
    let basis = carrier
        .basis()
        .ok_or_else(|| Error::IllegalComodule(format!("{carrier} has no finite basis")))?;
    let mut table: BTreeMap<Vec<i64>, BTreeMap<Label, Vector>> = BTreeMap::new();
    for b in &basis {
        for (t, c) in &x.coact(b) {
            let (a, rest) = x.ring().split(t);
            let g = exponent(&a)
                .ok_or_else(|| {
                    Error::IllegalComodule(format!("{a} is not a Laurent monomial"))
                })?
                .to_vec();
            table
                .entry(g)
                .or_default()
                .entry(b.clone())
                .or_default()
                .add_term(rest, c.clone());
        }
    }
    table.retain(|_, m| m.values().any(|v| !v.is_zero()));

    let apply = |g: &Vec<i64>, v: &Vector| -> Vector {
        let mut out = Vector::zero();
        for (l, c) in v {
            if let Some(img) = table[g].get(l) {
                out.add_scaled(c, img);
            }
        }
        out
    };
    for b in &basis {
        let e = Vector::basis(b.clone());
        let mut total = Vector::zero();
        for g in table.keys() {
            let pb = apply(g, &e);
            total += &pb;
            for h in table.keys() {
                let php = apply(h, &pb);
                let expect = if g == h { pb.clone() } else { Vector::zero() };
                if php != expect {
                    return Err(Error::IllegalComodule(format!(
                        "projections for degrees {g:?} and {h:?} are not orthogonal idempotents at {b}"
                    )));
                }
            }
        }
        if total != e {
            return Err(Error::IllegalComodule(format!(
                "projections do not sum to the identity at {b}: {total}"
            )));
        }
    }

    Ok(table
        .into_iter()
        .map(|(g, images)| {
            let map = LinMap::new(carrier, carrier, move |l| {
                images.get(l).cloned().unwrap_or_default()
            });
            (g, map)
        })
        .collect())
}

/// Rebuilds the coaction `b ↦ Σ_g x^g ⊗ p_g(b)` from a family of projections.
pub fn coaction_from_projections(
    ring: &Bimonoid,
    carrier: &Space,
    projections: &BTreeMap<Vec<i64>, LinMap>,
) -> Result<Comodule> {
    let parts: Vec<(Label, LinMap)> = projections
        .iter()
        .map(|(g, p)| (monomial(g), p.clone()))
        .collect();
    let coaction = LinMap::new(carrier, &Space::pair(ring.carrier(), carrier), move |l| {
        let mut out = Vector::zero();
        for (xg, p) in &parts {
            out += &Vector::basis(xg.clone()).tensor(&p.apply(l));
        }
        out
    });
    Comodule::new(ring, carrier, coaction)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::{check_bialgebra_laws, check_coelement, Braiding};
    use crate::linalg::equal_on_window;

    #[test]
    fn structure_values() {
        let z = laurent_hopf(1);
        assert_eq!(
            z.comultiply(&monomial(&[3])),
            Vector::basis(Label::pair(&monomial(&[3]), &monomial(&[3])))
        );
        assert_eq!(z.one(), Vector::basis(monomial(&[0])));
        assert_eq!(z.counit(&monomial(&[-7])), BigInt::from(1));
        assert_eq!(
            z.antipode().unwrap().apply(&monomial(&[3])),
            Vector::basis(monomial(&[-3]))
        );
    }

    #[test]
    fn laurent_laws_hold_in_rank_two() {
        let r = check_bialgebra_laws(&laurent_hopf(2), &Braiding::symmetric(), 2).unwrap();
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn sign_values() {
        let b = Bicharacter::single(-1);
        assert_eq!(b.sign(&[2], &[3]), 1);
        assert_eq!(b.sign(&[1], &[1]), -1);
        assert_eq!(b.sign(&[-1], &[3]), -1);
        let b2 = Bicharacter::new(vec![-1, 1]).unwrap();
        assert_eq!(b2.sign(&[1, 1], &[1, 1]), -1);
        assert!(Bicharacter::new(vec![2]).is_err());
    }

    #[test]
    fn rank_two_sign_coelements_pass() {
        for kappas in [vec![1, 1], vec![1, -1], vec![-1, 1], vec![-1, -1]] {
            let c = sign_coelement(&Bicharacter::new(kappas.clone()).unwrap());
            assert!(check_coelement(&c, 1).unwrap().all_pass(), "{kappas:?}");
        }
    }

    #[test]
    fn graded_coaction_and_projections() {
        let m = GradedModule::new(
            1,
            vec![
                Component { degree: vec![1], rank: 1 },
                Component { degree: vec![-1], rank: 1 },
            ],
        )
        .unwrap();
        let x = graded_to_comodule(&m);
        x.check_legality(2).unwrap();
        let p = comodule_to_graded_projections(&x).unwrap();
        assert_eq!(p.keys().cloned().collect::<Vec<_>>(), vec![vec![-1], vec![1]]);
        assert_eq!(sigma_functor(&m).rank(), Some(2));
        let back = coaction_from_projections(x.ring(), x.carrier(), &p).unwrap();
        assert!(equal_on_window(back.coaction(), x.coaction(), 0).unwrap().is_equal());
    }

    #[test]
    fn projections_after_change_of_basis() {
        let z = laurent_hopf(1);
        let u = Label::atom("u", &[]);
        let w = Label::atom("w", &[]);
        let s = Space::finite("UW", vec![u.clone(), w.clone()]);
        let (u2, w2) = (u.clone(), w.clone());
        let beta = LinMap::new(&s, &Space::pair(z.carrier(), &s), move |l| {
            let x1 = Vector::basis(monomial(&[1]));
            let x2 = Vector::basis(monomial(&[2]));
            if *l == u2 {
                x1.tensor(&Vector::basis(u2.clone()))
            } else {
                x1.tensor(&Vector::basis(u2.clone()))
                    + x2.tensor(&(Vector::basis(w2.clone()) - Vector::basis(u2.clone())))
            }
        });
        let x = Comodule::new(&z, &s, beta).unwrap();
        let p = comodule_to_graded_projections(&x).unwrap();
        assert_eq!(p[&vec![1]].apply(&w), Vector::basis(u.clone()));
        assert_eq!(
            p[&vec![2]].apply(&w),
            Vector::basis(w.clone()) - Vector::basis(u.clone())
        );
    }

    #[test]
    fn non_idempotent_family_is_rejected() {
        let z = laurent_hopf(1);
        let u = Label::atom("u", &[]);
        let s = Space::finite("U", vec![u.clone()]);
        let beta = LinMap::new(&s, &Space::pair(z.carrier(), &s), |l| {
            Vector::term(2, Label::pair(&monomial(&[0]), l))
                - Vector::basis(Label::pair(&monomial(&[1]), l))
        });
        let x = Comodule::new_unchecked(&z, &s, beta).unwrap();
        assert!(matches!(
            comodule_to_graded_projections(&x),
            Err(Error::IllegalComodule(_))
        ));
    }

    #[test]
    fn json_shape() {
        let m: GradedModule = serde_json::from_str(
            r#"{"rank":1,"components":[{"degree":[2],"rank":1},{"degree":[2],"rank":2}]}"#,
        )
        .unwrap();
        assert_eq!(m.components(), &[Component { degree: vec![2], rank: 3 }]);
        assert!(serde_json::from_str::<GradedModule>(
            r#"{"rank":2,"components":[{"degree":[2],"rank":1}]}"#
        )
        .is_err());
    }
}
