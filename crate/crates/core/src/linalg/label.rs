//! Structured basis labels.
//!
//! A [`Label`] names one basis element of a free ℤ-module. Tensor labels are
//! kept flat: the unit label is dropped from tensors and nested tensors are
//! spliced in, so `(a ⊗ 1) ⊗ (b ⊗ c)` and `a ⊗ (b ⊗ c)` are the same value.
//! This makes associators and unitors identities on labels.
//!
//! Text encoding:
//!
//! ```text
//! 1             unit
//! x(3)          atom of family `x` with index (3)
//! e(1,0)        atom with a two-component index
//! d()           atom with an empty index
//! (a*b*c)       tensor of at least two non-unit factors
//! L[a]  R[a]    left / right summand of a direct sum
//! ```

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    family: Arc<str>,
    index: Arc<[i64]>,
}

impl Atom {
    pub fn family(&self) -> &str {
        &self.family
    }

    pub fn index(&self) -> &[i64] {
        &self.index
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Unit,
    Atom(Atom),
    /// Canonical: at least two factors, none of them `Unit` or `Tensor`.
    Tensor(Arc<[Label]>),
    Left(Arc<Label>),
    Right(Arc<Label>),
}

impl Label {
    pub fn atom(family: &str, index: &[i64]) -> Label {
        Label::Atom(Atom {
            family: Arc::from(family),
            index: Arc::from(index),
        })
    }

    pub fn left(inner: Label) -> Label {
        Label::Left(Arc::new(inner))
    }

    pub fn right(inner: Label) -> Label {
        Label::Right(Arc::new(inner))
    }

    /// `a ⊗ b` in canonical form.
    pub fn pair(a: &Label, b: &Label) -> Label {
        match (a, b) {
            (Label::Unit, _) => b.clone(),
            (_, Label::Unit) => a.clone(),
            _ => {
                let mut parts = Vec::with_capacity(a.width() + b.width());
                parts.extend_from_slice(a.factors());
                parts.extend_from_slice(b.factors());
                Label::Tensor(Arc::from(parts))
            }
        }
    }

    /// Canonical tensor of any number of labels.
    pub fn tensor<'a>(parts: impl IntoIterator<Item = &'a Label>) -> Label {
        let mut flat: Vec<Label> = Vec::new();
        for p in parts {
            flat.extend_from_slice(p.factors());
        }
        Label::from_factors(flat)
    }

    /// Rebuilds a label from already-flat factors (no `Unit`, no `Tensor`).
    pub(crate) fn from_factors(mut flat: Vec<Label>) -> Label {
        match flat.len() {
            0 => Label::Unit,
            1 => flat.pop().unwrap(),
            _ => Label::Tensor(Arc::from(flat)),
        }
    }

    /// The flat tensor factors of this label: empty for the unit, the label
    /// itself for anything that is not a tensor.
    pub fn factors(&self) -> &[Label] {
        match self {
            Label::Unit => &[],
            Label::Tensor(parts) => parts,
            other => std::slice::from_ref(other),
        }
    }

    pub fn width(&self) -> usize {
        self.factors().len()
    }

    /// Splits the flat factors at `at`, returning the two canonical halves.
    pub fn split_at(&self, at: usize) -> (Label, Label) {
        let f = self.factors();
        let at = at.min(f.len());
        (
            Label::from_factors(f[..at].to_vec()),
            Label::from_factors(f[at..].to_vec()),
        )
    }

    pub fn as_atom(&self) -> Option<&Atom> {
        match self {
            Label::Atom(a) => Some(a),
            _ => None,
        }
    }

    /// The index of an atom of the given family.
    pub fn atom_index(&self, family: &str) -> Option<&[i64]> {
        self.as_atom()
            .filter(|a| a.family() == family)
            .map(|a| a.index())
    }

    pub fn encode(&self) -> String {
        self.to_string()
    }

    pub fn decode(text: &str) -> Result<Label, Error> {
        text.parse()
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Unit => f.write_str("1"),
            Label::Atom(a) => {
                write!(f, "{}(", a.family)?;
                for (i, k) in a.index.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{k}")?;
                }
                f.write_str(")")
            }
            Label::Tensor(parts) => {
                f.write_str("(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
            Label::Left(l) => write!(f, "L[{l}]"),
            Label::Right(l) => write!(f, "R[{l}]"),
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { src: s, pos: 0 };
        let label = p.label()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.fail("trailing input"));
        }
        Ok(label)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn fail(&self, reason: &str) -> Error {
        Error::LabelParse {
            input: self.src.to_string(),
            reason: format!("{reason} at byte {}", self.pos),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().unwrap().len_utf8();
        }
    }

    fn eat(&mut self, c: char) -> Result<(), Error> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.fail(&format!("expected `{c}`")))
        }
    }

    fn label(&mut self) -> Result<Label, Error> {
        self.skip_ws();
        match self.peek() {
            Some('1') => {
                self.pos += 1;
                Ok(Label::Unit)
            }
            Some('(') => {
                self.pos += 1;
                let mut parts = vec![self.label()?];
                loop {
                    self.skip_ws();
                    match self.peek() {
                        Some('*') => {
                            self.pos += 1;
                            parts.push(self.label()?);
                        }
                        Some(')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.fail("expected `*` or `)`")),
                    }
                }
                Ok(Label::tensor(parts.iter()))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                match self.peek() {
                    Some('[') if name == "L" || name == "R" => {
                        self.pos += 1;
                        let inner = self.label()?;
                        self.eat(']')?;
                        Ok(if name == "L" {
                            Label::left(inner)
                        } else {
                            Label::right(inner)
                        })
                    }
                    Some('(') => {
                        self.pos += 1;
                        let mut index = Vec::new();
                        self.skip_ws();
                        if self.peek() == Some(')') {
                            self.pos += 1;
                        } else {
                            loop {
                                index.push(self.integer()?);
                                self.skip_ws();
                                match self.peek() {
                                    Some(',') => self.pos += 1,
                                    Some(')') => {
                                        self.pos += 1;
                                        break;
                                    }
                                    _ => return Err(self.fail("expected `,` or `)`")),
                                }
                            }
                        }
                        Ok(Label::atom(name, &index))
                    }
                    _ => Err(self.fail("expected `(` after atom family")),
                }
            }
            _ => Err(self.fail("expected a label")),
        }
    }

    fn integer(&mut self) -> Result<i64, Error> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.fail("expected an integer"))
    }
}
