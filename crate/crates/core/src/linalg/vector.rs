use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Label;

/// A finitely supported ℤ-linear combination of basis labels.
///
/// Coefficients are arbitrary precision and zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Vector {
    terms: BTreeMap<Label, BigInt>,
}

impl Vector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(label: Label) -> Self {
        Self::term(BigInt::one(), label)
    }

    pub fn term(coeff: impl Into<BigInt>, label: Label) -> Self {
        let mut v = Self::zero();
        v.add_term(label, coeff.into());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, label: &Label) -> BigInt {
        self.terms.get(label).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Label, BigInt> {
        self.terms.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, label: Label, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(label) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += coeff · other`
    pub fn add_scaled(&mut self, coeff: &BigInt, other: &Vector) {
        if coeff.is_zero() {
            return;
        }
        for (l, c) in other.iter() {
            self.add_term(l.clone(), coeff * c);
        }
    }

    pub fn scale(&self, k: &BigInt) -> Vector {
        if k.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c * k)).collect(),
        }
    }

    /// Bilinear tensor product with canonical label pairing.
    pub fn tensor(&self, other: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                out.add_term(Label::pair(a, b), ca * cb);
            }
        }
        out
    }

    /// Applies `f` to every label; colliding images are summed.
    pub fn map_labels(&self, mut f: impl FnMut(&Label) -> Label) -> Vector {
        let mut out = Vector::zero();
        for (l, c) in self.iter() {
            out.add_term(f(l), c.clone());
        }
        out
    }

    /// Keeps only the terms whose label satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Label) -> bool) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| keep(l))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// The single coefficient of a vector supported on the unit label.
    pub fn scalar(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Label::Unit).cloned(),
            _ => None,
        }
    }
}

impl FromIterator<(Label, BigInt)> for Vector {
    fn from_iter<I: IntoIterator<Item = (Label, BigInt)>>(iter: I) -> Self {
        let mut v = Vector::zero();
        for (l, c) in iter {
            v.add_term(l, c);
        }
        v
    }
}

impl<'a> IntoIterator for &'a Vector {
    type Item = (&'a Label, &'a BigInt);
    type IntoIter = btree_map::Iter<'a, Label, BigInt>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl AddAssign<&Vector> for Vector {
    fn add_assign(&mut self, rhs: &Vector) {
        for (l, c) in rhs.iter() {
            self.add_term(l.clone(), c.clone());
        }
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;

    fn add(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Vector {
    type Output = Vector;

    fn add(mut self, rhs: Vector) -> Vector {
        self += &rhs;
        self
    }
}

impl Neg for &Vector {
    type Output = Vector;

    fn neg(self) -> Vector {
        Vector {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect(),
        }
    }
}

impl Neg for Vector {
    type Output = Vector;

    fn neg(self) -> Vector {
        -&self
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;

    fn sub(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_scaled(&-BigInt::one(), rhs);
        out
    }
}

impl Sub for Vector {
    type Output = Vector;

    fn sub(self, rhs: Vector) -> Vector {
        &self - &rhs
    }
}

impl Mul<&Vector> for &BigInt {
    type Output = Vector;

    fn mul(self, rhs: &Vector) -> Vector {
        rhs.scale(self)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag.is_one() {
                write!(f, "{l}")?;
            } else {
                write!(f, "{mag}*{l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(k: i64) -> Label {
        Label::atom("x", &[k])
    }

    #[test]
    fn cancellation_drops_terms() {
        let v = Vector::basis(x(1)) + Vector::term(-1, x(1));
        assert!(v.is_zero());
        assert_eq!(v.to_string(), "0");
    }

    #[test]
    fn display() {
        let v = Vector::term(2, x(1)) - Vector::basis(x(-1)) + Vector::term(-3, x(0));
        assert_eq!(v.to_string(), "-x(-1) - 3*x(0) + 2*x(1)");
    }

    #[test]
    fn tensor_is_bilinear() {
        let a = Vector::term(2, x(1)) + Vector::basis(x(2));
        let b = Vector::term(3, x(5));
        let t = a.tensor(&b);
        assert_eq!(t.coeff(&Label::pair(&x(1), &x(5))), BigInt::from(6));
        assert_eq!(t.coeff(&Label::pair(&x(2), &x(5))), BigInt::from(3));
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn coefficients_do_not_overflow() {
        let big = BigInt::from(i64::MAX);
        let v = Vector::term(big.clone(), x(0));
        let w = v.scale(&big).scale(&big);
        assert_eq!(w.coeff(&x(0)), &big * &big * &big);
    }
}
