use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::Label;

type Validity = Arc<dyn Fn(&Label) -> bool + Send + Sync>;
type Enumerator = Arc<dyn Fn(usize) -> Vec<Label> + Send + Sync>;

/// A free ℤ-module presented by its basis: a validity predicate on labels
/// and a windowed enumeration.
///
/// Spaces compare by name. Tensor spaces are kept flat and drop unit
/// factors, mirroring the canonical form of [`Label`].
#[derive(Clone)]
pub struct Space(Arc<Node>);

enum Node {
    Unit,
    Basic {
        name: String,
        valid: Validity,
        enumerate: Enumerator,
        finite: bool,
    },
    Sum {
        name: String,
        left: Space,
        right: Space,
    },
    Tensor {
        name: String,
        factors: Vec<Space>,
        width: usize,
    },
}

/// `0, 1, -1, 2, -2, …, k, -k`
pub fn shell(k: usize) -> Vec<i64> {
    let k = k as i64;
    let mut out = vec![0];
    for i in 1..=k {
        out.push(i);
        out.push(-i);
    }
    out
}

/// All integer vectors of length `rank` with entries in `[-k, k]`, in
/// lexicographic shell order.
pub fn shell_vectors(rank: usize, k: usize) -> Vec<Vec<i64>> {
    let s = shell(k);
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                s.iter().map(move |&i| {
                    let mut v = prefix.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    out
}

impl Space {
    /// The tensor unit ℤ, with the single basis label `1`.
    pub fn unit() -> Space {
        Space(Arc::new(Node::Unit))
    }

    /// A general width-one space.
    pub fn basic(
        name: impl Into<String>,
        valid: impl Fn(&Label) -> bool + Send + Sync + 'static,
        enumerate: impl Fn(usize) -> Vec<Label> + Send + Sync + 'static,
    ) -> Space {
        Space(Arc::new(Node::Basic {
            name: name.into(),
            valid: Arc::new(valid),
            enumerate: Arc::new(enumerate),
            finite: false,
        }))
    }

    /// A finite-rank space with an explicit basis. Every label must have
    /// width one.
    pub fn finite(name: impl Into<String>, basis: Vec<Label>) -> Space {
        assert!(
            basis.iter().all(|l| l.width() == 1),
            "basis labels of a basic space must have width one"
        );
        let set: BTreeSet<Label> = basis.iter().cloned().collect();
        let basis = Arc::new(basis);
        Space(Arc::new(Node::Basic {
            name: name.into(),
            valid: Arc::new(move |l| set.contains(l)),
            enumerate: Arc::new(move |_| basis.as_ref().clone()),
            finite: true,
        }))
    }

    /// Atoms `family(g)` for `g ∈ ℤ^rank`; the window `K` bounds every `|g_c|`.
    pub fn lattice(name: impl Into<String>, family: &str, rank: usize) -> Space {
        let fam: Arc<str> = Arc::from(family);
        let fam2 = fam.clone();
        Space::basic(
            name,
            move |l| l.atom_index(&fam).is_some_and(|i| i.len() == rank),
            move |k| {
                shell_vectors(rank, k)
                    .into_iter()
                    .map(|g| Label::atom(&fam2, &g))
                    .collect()
            },
        )
    }

    pub fn sum(left: &Space, right: &Space) -> Space {
        Space(Arc::new(Node::Sum {
            name: format!("({}⊕{})", left.name(), right.name()),
            left: left.clone(),
            right: right.clone(),
        }))
    }

    pub fn pair(a: &Space, b: &Space) -> Space {
        Space::tensor([a, b])
    }

    pub fn tensor<'a>(parts: impl IntoIterator<Item = &'a Space>) -> Space {
        let mut flat: Vec<Space> = Vec::new();
        for p in parts {
            match p.0.as_ref() {
                Node::Unit => {}
                Node::Tensor { factors, .. } => flat.extend(factors.iter().cloned()),
                _ => flat.push(p.clone()),
            }
        }
        match flat.len() {
            0 => Space::unit(),
            1 => flat.pop().unwrap(),
            _ => {
                let name = flat.iter().map(|s| s.name()).collect::<Vec<_>>().join("⊗");
                let width = flat.iter().map(Space::width).sum();
                Space(Arc::new(Node::Tensor {
                    name,
                    factors: flat,
                    width,
                }))
            }
        }
    }

    /// `X^{⊗n}`
    pub fn power(x: &Space, n: usize) -> Space {
        Space::tensor(std::iter::repeat(x).take(n))
    }

    pub fn name(&self) -> &str {
        match self.0.as_ref() {
            Node::Unit => "I",
            Node::Basic { name, .. } | Node::Sum { name, .. } | Node::Tensor { name, .. } => name,
        }
    }

    /// Number of flat label factors of every basis label.
    pub fn width(&self) -> usize {
        match self.0.as_ref() {
            Node::Unit => 0,
            Node::Basic { .. } | Node::Sum { .. } => 1,
            Node::Tensor { width, .. } => *width,
        }
    }

    /// The flat tensor factors (empty for the unit).
    pub fn factors(&self) -> Vec<Space> {
        match self.0.as_ref() {
            Node::Unit => Vec::new(),
            Node::Tensor { factors, .. } => factors.clone(),
            _ => vec![self.clone()],
        }
    }

    pub fn summands(&self) -> Option<(&Space, &Space)> {
        match self.0.as_ref() {
            Node::Sum { left, right, .. } => Some((left, right)),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        match self.0.as_ref() {
            Node::Unit => true,
            Node::Basic { finite, .. } => *finite,
            Node::Sum { left, right, .. } => left.is_finite() && right.is_finite(),
            Node::Tensor { factors, .. } => factors.iter().all(Space::is_finite),
        }
    }

    pub fn is_valid(&self, label: &Label) -> bool {
        match self.0.as_ref() {
            Node::Unit => *label == Label::Unit,
            Node::Basic { valid, .. } => label.width() == 1 && valid(label),
            Node::Sum { left, right, .. } => match label {
                Label::Left(l) => left.is_valid(l),
                Label::Right(r) => right.is_valid(r),
                _ => false,
            },
            Node::Tensor { factors, width, .. } => {
                let parts = label.factors();
                if parts.len() != *width {
                    return false;
                }
                let mut at = 0;
                factors.iter().all(|f| {
                    let w = f.width();
                    let piece = Label::from_factors(parts[at..at + w].to_vec());
                    at += w;
                    f.is_valid(&piece)
                })
            }
        }
    }

    /// Basis labels inside window `k`. Monotone in `k`.
    pub fn enumerate(&self, k: usize) -> Vec<Label> {
        match self.0.as_ref() {
            Node::Unit => vec![Label::Unit],
            Node::Basic { enumerate, .. } => enumerate(k),
            Node::Sum { left, right, .. } => left
                .enumerate(k)
                .into_iter()
                .map(Label::left)
                .chain(right.enumerate(k).into_iter().map(Label::right))
                .collect(),
            Node::Tensor { factors, .. } => {
                let mut acc: Vec<Vec<Label>> = vec![Vec::new()];
                for f in factors {
                    let basis = f.enumerate(k);
                    let mut next = Vec::with_capacity(acc.len() * basis.len());
                    for prefix in &acc {
                        for b in &basis {
                            let mut v = prefix.clone();
                            v.extend_from_slice(b.factors());
                            next.push(v);
                        }
                    }
                    acc = next;
                }
                acc.into_iter().map(Label::from_factors).collect()
            }
        }
    }

    /// The whole basis of a finite space.
    pub fn basis(&self) -> Option<Vec<Label>> {
        self.is_finite().then(|| self.enumerate(0))
    }

    pub fn rank(&self) -> Option<usize> {
        self.basis().map(|b| b.len())
    }
}

impl PartialEq for Space {
    fn eq(&self, other: &Space) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.name() == other.name()
    }
}

impl Eq for Space {}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Space({})", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Space {
        Space::lattice("Z", "x", 1)
    }

    #[test]
    fn shell_order() {
        assert_eq!(shell(2), vec![0, 1, -1, 2, -2]);
        assert_eq!(shell_vectors(2, 1).len(), 9);
    }

    #[test]
    fn enumeration_is_monotone_and_valid() {
        let d = Space::finite("D", vec![Label::atom("d", &[])]);
        let h = Space::sum(&d, &Space::unit());
        let s = Space::tensor([&h, &z(), &h]);
        for k in 0..4 {
            let small = s.enumerate(k);
            let big = s.enumerate(k + 1);
            assert!(small.iter().all(|l| big.contains(l)));
            assert!(big.iter().all(|l| s.is_valid(l)));
        }
        assert_eq!(s.enumerate(2).len(), 2 * 5 * 2);
    }

    #[test]
    fn unit_factors_vanish() {
        let s = Space::tensor([&Space::unit(), &z(), &Space::unit()]);
        assert_eq!(s, z());
        assert_eq!(s.width(), 1);
        assert_eq!(Space::power(&z(), 0), Space::unit());
        assert_eq!(Space::power(&z(), 3).name(), "Z⊗Z⊗Z");
    }

    #[test]
    fn validity_respects_factor_shapes() {
        let zz = Space::pair(&z(), &z());
        let x = |k| Label::atom("x", &[k]);
        assert!(zz.is_valid(&Label::pair(&x(1), &x(-4))));
        assert!(!zz.is_valid(&x(1)));
        assert!(!zz.is_valid(&Label::pair(&x(1), &Label::atom("y", &[0]))));
        let h = Space::sum(&Space::unit(), &z());
        assert!(h.is_valid(&Label::left(Label::Unit)));
        assert!(!h.is_valid(&Label::right(Label::Unit)));
    }
}
