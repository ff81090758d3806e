use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::{Label, Space, Vector};
use crate::error::{Error, Result};

type Apply = Arc<dyn Fn(&Label) -> Vector + Send + Sync>;

/// A ℤ-linear map given on basis labels and extended linearly.
#[derive(Clone)]
pub struct LinMap {
    dom: Space,
    cod: Space,
    f: Apply,
}

impl LinMap {
    pub fn new(
        dom: &Space,
        cod: &Space,
        f: impl Fn(&Label) -> Vector + Send + Sync + 'static,
    ) -> LinMap {
        LinMap {
            dom: dom.clone(),
            cod: cod.clone(),
            f: Arc::new(f),
        }
    }

    pub fn dom(&self) -> &Space {
        &self.dom
    }

    pub fn cod(&self) -> &Space {
        &self.cod
    }

    pub fn apply(&self, label: &Label) -> Vector {
        (self.f)(label)
    }

    pub fn apply_vec(&self, v: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (l, c) in v {
            out.add_scaled(c, &self.apply(l));
        }
        out
    }

    pub fn identity(x: &Space) -> LinMap {
        LinMap::new(x, x, |l| Vector::basis(l.clone()))
    }

    pub fn zero(dom: &Space, cod: &Space) -> LinMap {
        LinMap::new(dom, cod, |_| Vector::zero())
    }

    /// Multiplication by `k` on `x`.
    pub fn scalar(x: &Space, k: impl Into<BigInt>) -> LinMap {
        let k = k.into();
        LinMap::new(x, x, move |l| Vector::term(k.clone(), l.clone()))
    }

    /// A map that sends each label to a single relabelled basis vector.
    pub fn relabel(
        dom: &Space,
        cod: &Space,
        f: impl Fn(&Label) -> Label + Send + Sync + 'static,
    ) -> LinMap {
        LinMap::new(dom, cod, move |l| Vector::basis(f(l)))
    }

    /// The plain swap `X⊗Y → Y⊗X`.
    pub fn swap(x: &Space, y: &Space) -> LinMap {
        let w = x.width();
        LinMap::relabel(&Space::pair(x, y), &Space::pair(y, x), move |l| {
            let (a, b) = l.split_at(w);
            Label::pair(&b, &a)
        })
    }

    pub fn scaled(&self, k: impl Into<BigInt>) -> LinMap {
        let k = k.into();
        let f = self.f.clone();
        LinMap::new(&self.dom, &self.cod, move |l| f(l).scale(&k))
    }

    pub fn neg(&self) -> LinMap {
        self.scaled(-1)
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap> {
        self.same_shape(other)?;
        let (f, g) = (self.f.clone(), other.f.clone());
        Ok(LinMap::new(&self.dom, &self.cod, move |l| f(l) + g(l)))
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap> {
        self.add(&other.neg())
    }

    /// `g ∘ self`
    pub fn then(&self, g: &LinMap) -> Result<LinMap> {
        compose_maps(self, g)
    }

    /// Same as [`LinMap::then`], for maps already known to be composable.
    pub(crate) fn then_unchecked(&self, g: &LinMap) -> LinMap {
        let (f, g2) = (self.clone(), g.f.clone());
        LinMap::new(&self.dom, &g.cod, move |l| {
            let mut out = Vector::zero();
            for (m, c) in &f.apply(l) {
                out.add_scaled(c, &g2(m));
            }
            out
        })
    }

    pub fn with_spaces(&self, dom: &Space, cod: &Space) -> LinMap {
        LinMap {
            dom: dom.clone(),
            cod: cod.clone(),
            f: self.f.clone(),
        }
    }

    fn same_shape(&self, other: &LinMap) -> Result<()> {
        if self.dom != other.dom {
            return Err(Error::mismatch(&self.dom, &other.dom));
        }
        if self.cod != other.cod {
            return Err(Error::mismatch(&self.cod, &other.cod));
        }
        Ok(())
    }

    /// First window label whose image leaves the codomain, if any.
    pub fn check_support(&self, k: usize) -> Option<Label> {
        self.dom
            .enumerate(k)
            .into_iter()
            .find(|l| self.apply(l).labels().any(|m| !self.cod.is_valid(m)))
    }
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinMap({} → {})", self.dom, self.cod)
    }
}

/// `g ∘ f`; requires `f.cod = g.dom`.
pub fn compose_maps(f: &LinMap, g: &LinMap) -> Result<LinMap> {
    if f.cod != g.dom {
        return Err(Error::mismatch(&g.dom, &f.cod));
    }
    Ok(f.then_unchecked(g))
}

/// Compose a chain `f₁, f₂, …` into `… ∘ f₂ ∘ f₁`.
pub fn compose_all(maps: &[&LinMap]) -> Result<LinMap> {
    let (first, rest) = maps.split_first().expect("at least one map");
    rest.iter()
        .try_fold((*first).clone(), |acc, g| compose_maps(&acc, g))
}

pub fn tensor_maps(f: &LinMap, g: &LinMap) -> LinMap {
    let w = f.dom.width();
    let (fa, ga) = (f.f.clone(), g.f.clone());
    LinMap::new(
        &Space::pair(&f.dom, &g.dom),
        &Space::pair(&f.cod, &g.cod),
        move |l| {
            let (a, b) = l.split_at(w);
            let fa = fa(&a);
            if fa.is_zero() {
                return fa;
            }
            fa.tensor(&ga(&b))
        },
    )
}

/// `f₁ ⊗ f₂ ⊗ …`
pub fn tensor_all(maps: &[&LinMap]) -> LinMap {
    match maps.split_first() {
        None => LinMap::identity(&Space::unit()),
        Some((first, rest)) => rest
            .iter()
            .fold((*first).clone(), |acc, g| tensor_maps(&acc, g)),
    }
}

pub fn direct_sum_maps(f: &LinMap, g: &LinMap) -> LinMap {
    let (fa, ga) = (f.f.clone(), g.f.clone());
    LinMap::new(
        &Space::sum(&f.dom, &g.dom),
        &Space::sum(&f.cod, &g.cod),
        move |l| match l {
            Label::Left(x) => fa(x).map_labels(|m| Label::left(m.clone())),
            Label::Right(x) => ga(x).map_labels(|m| Label::right(m.clone())),
            _ => Vector::zero(),
        },
    )
}

/// A window label where two maps disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub label: Label,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: lhs = {}, rhs = {}", self.label, self.lhs, self.rhs)
    }
}

impl Serialize for Counterexample {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            label: String,
            lhs: String,
            rhs: String,
        }
        Repr {
            label: self.label.encode(),
            lhs: self.lhs.to_string(),
            rhs: self.rhs.to_string(),
        }
        .serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal { instances: usize },
    Differ { counterexample: Counterexample, instances: usize },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal { .. })
    }

    pub fn instances(&self) -> usize {
        match self {
            Verdict::Equal { instances } | Verdict::Differ { instances, .. } => *instances,
        }
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            Verdict::Equal { .. } => None,
            Verdict::Differ { counterexample, .. } => Some(counterexample),
        }
    }
}

/// Compares `f` and `g` on every domain label of window `k`.
///
/// The reported counterexample is the first one in enumeration order, no
/// matter how the work is scheduled.
pub fn equal_on_window(f: &LinMap, g: &LinMap, k: usize) -> Result<Verdict> {
    f.same_shape(g)?;
    Ok(compare_on(f, g, &f.dom.enumerate(k)))
}

/// Compares two maps of the same shape on an explicit list of labels.
pub fn compare_on(f: &LinMap, g: &LinMap, labels: &[Label]) -> Verdict {
    let hit = labels.par_iter().position_first(|l| f.apply(l) != g.apply(l));
    match hit {
        None => Verdict::Equal {
            instances: labels.len(),
        },
        Some(i) => {
            let label = labels[i].clone();
            Verdict::Differ {
                counterexample: Counterexample {
                    lhs: f.apply(&label),
                    rhs: g.apply(&label),
                    label,
                },
                instances: i + 1,
            }
        }
    }
}
