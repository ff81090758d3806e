//! Differential carriers and the differential Hopf ring `H = D ⊕ I`.
//!
//! A graded abelian group `D` can play the role of a differential exactly
//! when its self-braiding is `-1`. For finitely generated carriers made of
//! cyclic summands this is decided by [`check_differential_carrier`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::{laurent_hopf, monomial, Bicharacter};
use crate::laws::{comodule_braiding, Bimonoid, Coelement, Comodule, DEFAULT_WINDOW};
use crate::linalg::{equal_on_window, Label, LinMap, Space, Vector};
use crate::semidirect::ComoduleBimonoid;

/// Basis label of a rank-one differential carrier.
pub fn generator() -> Label {
    Label::atom("d", &[])
}

/// `ℤ/a ⊗ ℤ/b = ℤ/gcd(a, b)`, where order `0` stands for `ℤ` and order `1`
/// for the zero module.
pub fn cyclic_tensor(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Summand {
    pub degree: Vec<i64>,
    pub order: u64,
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.degree.iter().map(i64::to_string).collect();
        match self.order {
            0 => write!(f, "ℤ@({})", d.join(",")),
            n => write!(f, "ℤ/{n}@({})", d.join(",")),
        }
    }
}

/// A finitely generated graded abelian group as a list of cyclic summands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawCarrier")]
pub struct GradedCarrier {
    rank: usize,
    summands: Vec<Summand>,
}

#[derive(Deserialize)]
struct RawCarrier {
    rank: usize,
    summands: Vec<Summand>,
}

impl TryFrom<RawCarrier> for GradedCarrier {
    type Error = Error;

    fn try_from(raw: RawCarrier) -> Result<GradedCarrier> {
        GradedCarrier::new(raw.rank, raw.summands)
    }
}

impl GradedCarrier {
    /// Drops order-one (zero) summands and sorts the rest.
    pub fn new(rank: usize, summands: Vec<Summand>) -> Result<GradedCarrier> {
        if let Some(s) = summands.iter().find(|s| s.degree.len() != rank) {
            return Err(Error::Config(format!(
                "summand {s} has a degree of length {}, expected {rank}",
                s.degree.len()
            )));
        }
        let mut summands: Vec<Summand> = summands.into_iter().filter(|s| s.order != 1).collect();
        summands.sort();
        Ok(GradedCarrier { rank, summands })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CarrierVerdict {
    pub accepted: bool,
    pub diagnostics: Vec<String>,
}

fn describe(order: u64) -> String {
    match order {
        0 => "ℤ".into(),
        1 => "0".into(),
        n => format!("ℤ/{n}"),
    }
}

/// Decides whether the braiding of `D` with itself is `-1`.
///
/// Summands in different degrees, and distinct summands in the same degree,
/// must tensor to zero. A summand of order `n` in degree `g` needs
/// `γ(g, g) ≡ -1 (mod n)`, with `n = 0` meaning equality in ℤ.
pub fn check_differential_carrier(d: &GradedCarrier, b: &Bicharacter) -> Result<CarrierVerdict> {
    if d.rank() != b.rank() {
        return Err(Error::RankMismatch {
            carrier: d.rank(),
            bicharacter: b.rank(),
        });
    }
    let s = d.summands();
    let mut diagnostics = Vec::new();
    for (i, x) in s.iter().enumerate() {
        for y in &s[i + 1..] {
            let t = cyclic_tensor(x.order, y.order);
            if t == 1 {
                continue;
            }
            if x.degree == y.degree {
                diagnostics.push(format!(
                    "distinct summands {x} and {y} in the same degree tensor to {}, not 0",
                    describe(t)
                ));
            } else {
                diagnostics.push(format!(
                    "summands {x} and {y} in distinct degrees tensor to {}, not 0",
                    describe(t)
                ));
            }
        }
        let sign = b.sign(&x.degree, &x.degree);
        let defect = BigInt::from(1 + sign);
        let ok = match x.order {
            0 => sign == -1,
            n => (defect % BigInt::from(n)) == BigInt::from(0),
        };
        if !ok {
            if sign == 1 {
                diagnostics.push(format!(
                    "{x}: swap sign +1 at even degree, but {} needs -1",
                    describe(x.order)
                ));
            } else {
                diagnostics.push(format!("{x}: self-braiding is not -1"));
            }
        }
    }
    Ok(CarrierVerdict {
        accepted: diagnostics.is_empty(),
        diagnostics,
    })
}

/// `ℤ` in degree `g` with coaction `d ↦ x^g ⊗ d` over `ℤ[ℤ^r]`.
pub fn generator_comodule(degree: &[i64]) -> Comodule {
    let ring = laurent_hopf(degree.len());
    let deg: Vec<String> = degree.iter().map(i64::to_string).collect();
    let d = Space::finite(format!("D@{}", deg.join(",")), vec![generator()]);
    let xg = monomial(degree);
    let coaction = LinMap::relabel(&d, &Space::pair(ring.carrier(), &d), move |l| {
        Label::pair(&xg, l)
    });
    Comodule::new_unchecked(&ring, &d, coaction).expect("coaction shape")
}

/// Structure maps of `H = D ⊕ I` on labels `L[x]` (for `x ∈ D`) and `R[1]`.
pub fn differential_hopf_maps(d: &Space) -> Bimonoid {
    let i = Space::unit();
    let h = Space::sum(d, &i);
    let hh = Space::pair(&h, &h);
    let one = Label::right(Label::Unit);
    let one2 = one.clone();
    let mu = LinMap::new(&hh, &h, move |l| {
        let (a, b) = l.split_at(1);
        match (&a, &b) {
            (Label::Left(_), Label::Right(_)) => Vector::basis(a.clone()),
            (Label::Right(_), Label::Left(_)) => Vector::basis(b.clone()),
            (Label::Right(_), Label::Right(_)) => Vector::basis(a.clone()),
            _ => Vector::zero(),
        }
    });
    let eta = LinMap::relabel(&i, &h, move |_| one2.clone());
    let one3 = one.clone();
    let delta = LinMap::new(&h, &hh, move |l| match l {
        Label::Left(_) => {
            Vector::basis(Label::pair(l, &one3)) + Vector::basis(Label::pair(&one3, l))
        }
        _ => Vector::basis(Label::pair(l, l)),
    });
    let epsilon = LinMap::new(&h, &i, |l| match l {
        Label::Right(_) => Vector::basis(Label::Unit),
        _ => Vector::zero(),
    });
    let antipode = LinMap::new(&h, &h, |l| match l {
        Label::Left(_) => Vector::term(-1, l.clone()),
        _ => Vector::basis(l.clone()),
    });
    Bimonoid::new(format!("{h}"), &h, mu, eta, delta, epsilon, Some(antipode))
        .expect("differential Hopf maps are well shaped")
}

/// The coaction of `H = D ⊕ I` induced by that of `D`.
fn h_comodule(dm: &Comodule, h: &Bimonoid) -> Comodule {
    let ring = dm.ring().clone();
    let dm2 = dm.clone();
    let one = ring.one();
    let w = ring.carrier().width();
    let coaction = LinMap::new(h.carrier(), &Space::pair(ring.carrier(), h.carrier()), move |l| {
        match l {
            Label::Left(x) => dm2.coact(x).map_labels(|t| {
                let (a, x0) = t.split_at(w);
                Label::pair(&a, &Label::left(x0))
            }),
            _ => one.tensor(&Vector::basis(l.clone())),
        }
    });
    Comodule::new_unchecked(&ring, h.carrier(), coaction).expect("coaction shape")
}

/// Builds `H = D ⊕ I` as a bimonoid in comodules, after checking that the
/// braiding of `D` with itself is `-1` on the default window.
pub fn build_differential_hopf(d: &Comodule, c: &Coelement) -> Result<ComoduleBimonoid> {
    let sigma = comodule_braiding(d, d, c)?;
    let minus = LinMap::scalar(&Space::pair(d.carrier(), d.carrier()), -1);
    let v = equal_on_window(&sigma, &minus, DEFAULT_WINDOW)?;
    if let Some(ce) = v.counterexample() {
        return Err(Error::NotAdmissible(format!(
            "self-braiding of {} is not -1 at {ce}",
            d.carrier()
        )));
    }
    build_differential_hopf_unchecked(d, c)
}

/// [`build_differential_hopf`] without the admissibility guard.
pub fn build_differential_hopf_unchecked(d: &Comodule, c: &Coelement) -> Result<ComoduleBimonoid> {
    let h = differential_hopf_maps(d.carrier());
    let hc = h_comodule(d, &h);
    ComoduleBimonoid::new(h, hc, c.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::sign_coelement;
    use crate::laws::{
        check_bialgebra_laws, check_distributive_law, distributive_law_tau, Braiding,
    };

    fn carrier(items: &[(i64, u64)]) -> GradedCarrier {
        GradedCarrier::new(
            1,
            items
                .iter()
                .map(|&(g, order)| Summand { degree: vec![g], order })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn tensor_table() {
        assert_eq!(cyclic_tensor(2, 2), 2);
        assert_eq!(cyclic_tensor(8, 0), 8);
        assert_eq!(cyclic_tensor(4, 6), 2);
        assert_eq!(cyclic_tensor(0, 0), 0);
        assert_eq!(cyclic_tensor(9, 27), 9);
    }

    #[test]
    fn carrier_examples() {
        let minus = Bicharacter::single(-1);
        assert!(check_differential_carrier(&carrier(&[(-1, 0)]), &minus).unwrap().accepted);
        let v = check_differential_carrier(&carrier(&[(0, 0)]), &minus).unwrap();
        assert!(!v.accepted);
        assert!(v.diagnostics[0].contains("sign +1 at even degree"));
        assert!(check_differential_carrier(&carrier(&[(1, 3), (2, 2)]), &minus).unwrap().accepted);
        let v = check_differential_carrier(&carrier(&[(1, 2), (2, 2)]), &minus).unwrap();
        assert!(!v.accepted);
        assert!(v.diagnostics[0].contains("distinct degrees"));
        assert!(matches!(
            check_differential_carrier(&carrier(&[(1, 0)]), &Bicharacter::new(vec![-1, 1]).unwrap()),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn order_one_is_pruned() {
        let c = carrier(&[(2, 1), (1, 0)]);
        assert_eq!(c.summands().len(), 1);
    }

    #[test]
    fn structure_values() {
        let h = differential_hopf_maps(&Space::finite("D", vec![generator()]));
        let d = Label::left(generator());
        let one = Label::right(Label::Unit);
        assert_eq!(h.multiply(&d, &one), Vector::basis(d.clone()));
        assert_eq!(h.multiply(&one, &d), Vector::basis(d.clone()));
        assert!(h.multiply(&d, &d).is_zero());
        let s = h.antipode().unwrap();
        assert_eq!(s.apply(&d), Vector::term(-1, d.clone()));
        assert_eq!(s.apply(&one), Vector::basis(one.clone()));
    }

    #[test]
    fn admissible_generator_builds() {
        let c = sign_coelement(&Bicharacter::single(-1));
        for s in [-1, 1] {
            let hb = build_differential_hopf(&generator_comodule(&[s]), &c).unwrap();
            hb.check(3).unwrap();
        }
    }

    #[test]
    fn even_generator_is_refused_and_breaks_interchange() {
        let c = sign_coelement(&Bicharacter::single(-1));
        let d = generator_comodule(&[0]);
        assert!(matches!(
            build_differential_hopf(&d, &c),
            Err(Error::NotAdmissible(_))
        ));
        let hb = build_differential_hopf_unchecked(&d, &c).unwrap();
        let braid = Braiding::coelement(&c, &[hb.comodule().clone()]);
        let r = check_bialgebra_laws(hb.hopf(), &braid, 2).unwrap();
        let v = r.get("interchange").unwrap();
        let ce = v.counterexample().unwrap();
        let dd = Label::pair(&Label::left(generator()), &Label::left(generator()));
        assert_eq!(ce.label, dd);
        assert_eq!(ce.lhs, Vector::term(2, dd.clone()));
        assert!(ce.rhs.is_zero());
    }

    #[test]
    fn tau_on_the_generator() {
        let d = generator_comodule(&[-1]);
        let tau = distributive_law_tau(&d);
        let l = Label::pair(&generator(), &monomial(&[4]));
        assert_eq!(
            tau.apply(&l),
            Vector::basis(Label::pair(&monomial(&[3]), &generator()))
        );
    }

    #[test]
    fn tau_of_h_is_a_distributive_law() {
        let c = sign_coelement(&Bicharacter::single(-1));
        let hb = build_differential_hopf(&generator_comodule(&[-1]), &c).unwrap();
        let tau = distributive_law_tau(hb.comodule());
        let r = check_distributive_law(&tau, hb.comodule(), Some(hb.hopf()), 5).unwrap();
        assert!(r.all_pass(), "{r}");
        assert_eq!(r.results.len(), 4);
    }
}
