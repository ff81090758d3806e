//! Bounded chain complexes of free finitely generated abelian groups.
//!
//! A complex stores one basis and one differential matrix per degree. The
//! differential has degree `step`, which is `-1` for the usual homological
//! convention and `+1` for cochains. All monoidal structure uses the Koszul
//! sign `(-1)^i` when `d` passes an element of degree `i`.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet};
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::diffhopf::{build_differential_hopf, differential_hopf_maps, generator, generator_comodule};
use crate::error::{Error, Result};
use crate::grading::{monomial, sign_coelement, Bicharacter};
use crate::laws::{Comodule, LawReport};
use crate::linalg::{
    compare_on, compose_all, equal_on_window, tensor_maps, IntMatrix, Label, LinMap, Space, Vector,
};
use crate::semidirect::HComodule;

fn koszul(i: i64) -> i64 {
    if i.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Default basis label `e(n, i)`.
pub fn chain_label(n: i64, i: usize) -> Label {
    Label::atom("e", &[n, i as i64])
}

#[derive(Clone, Debug)]
pub struct ChainComplex {
    step: i64,
    bases: BTreeMap<i64, Vec<Label>>,
    diffs: BTreeMap<i64, IntMatrix>,
    index: Arc<BTreeMap<Label, (i64, usize)>>,
    space: Space,
}

impl PartialEq for ChainComplex {
    fn eq(&self, other: &Self) -> bool {
        self.step == other.step
            && self.bases == other.bases
            && self.degrees().iter().all(|&n| self.d(n) == other.d(n))
    }
}

impl Eq for ChainComplex {}

fn basis_name(step: i64, bases: &BTreeMap<i64, Vec<Label>>) -> String {
    let mut h = DefaultHasher::new();
    step.hash(&mut h);
    bases.hash(&mut h);
    format!("C#{:016x}", h.finish())
}

impl ChainComplex {
    /// A complex with the default finite carrier. Labels must be distinct
    /// and of width one, except that the single label `1` is allowed alone.
    pub fn new(
        step: i64,
        bases: BTreeMap<i64, Vec<Label>>,
        diffs: BTreeMap<i64, IntMatrix>,
    ) -> Result<ChainComplex> {
        let bases: BTreeMap<i64, Vec<Label>> =
            bases.into_iter().filter(|(_, b)| !b.is_empty()).collect();
        let all: Vec<Label> = bases.values().flatten().cloned().collect();
        let space = if all == [Label::Unit] {
            Space::unit()
        } else {
            if let Some(l) = all.iter().find(|l| l.width() != 1) {
                return Err(Error::IllegalChain(format!(
                    "label {l} needs an explicit carrier"
                )));
            }
            Space::finite(basis_name(step, &bases), all)
        };
        ChainComplex::with_space(step, bases, diffs, space)
    }

    /// A complex on an explicit finite carrier whose basis is exactly the
    /// union of `bases`.
    pub fn with_space(
        step: i64,
        bases: BTreeMap<i64, Vec<Label>>,
        diffs: BTreeMap<i64, IntMatrix>,
        space: Space,
    ) -> Result<ChainComplex> {
        if step != 1 && step != -1 {
            return Err(Error::IllegalChain(format!("differential degree {step} is not ±1")));
        }
        let bases: BTreeMap<i64, Vec<Label>> =
            bases.into_iter().filter(|(_, b)| !b.is_empty()).collect();
        let mut index = BTreeMap::new();
        for (&n, b) in &bases {
            for (i, l) in b.iter().enumerate() {
                if index.insert(l.clone(), (n, i)).is_some() {
                    return Err(Error::IllegalChain(format!("label {l} occurs twice")));
                }
            }
        }
        let declared: BTreeSet<Label> = space
            .basis()
            .ok_or_else(|| Error::IllegalChain(format!("carrier {space} is not finite")))?
            .into_iter()
            .collect();
        if declared.len() != index.len() || !index.keys().all(|l| declared.contains(l)) {
            return Err(Error::IllegalChain(format!(
                "carrier {space} does not match the graded basis"
            )));
        }
        let rank = |n: i64| bases.get(&n).map_or(0, Vec::len);
        let mut kept = BTreeMap::new();
        for (n, m) in diffs {
            if m.shape() != (rank(n + step), rank(n)) {
                return Err(Error::IllegalChain(format!(
                    "d_{n} has shape {:?}, expected {:?}",
                    m.shape(),
                    (rank(n + step), rank(n))
                )));
            }
            if !m.is_zero() {
                kept.insert(n, m);
            }
        }
        for (&n, m) in &kept {
            if let Some(next) = kept.get(&(n + step)) {
                if !(next * m).is_zero() {
                    return Err(Error::IllegalChain(format!("d∘d ≠ 0 starting in degree {n}")));
                }
            }
        }
        Ok(ChainComplex {
            step,
            bases,
            diffs: kept,
            index: Arc::new(index),
            space,
        })
    }

    /// Default labels `e(n, i)` for the given ranks.
    pub fn from_ranks(
        step: i64,
        ranks: &BTreeMap<i64, usize>,
        diffs: BTreeMap<i64, IntMatrix>,
    ) -> Result<ChainComplex> {
        let bases = ranks
            .iter()
            .map(|(&n, &r)| (n, (0..r).map(|i| chain_label(n, i)).collect()))
            .collect();
        ChainComplex::new(step, bases, diffs)
    }

    /// Builds the differential matrices from a label-level formula.
    pub fn from_label_differential(
        step: i64,
        bases: BTreeMap<i64, Vec<Label>>,
        space: Space,
        d: impl Fn(&Label) -> Vector,
    ) -> Result<ChainComplex> {
        let shell = ChainComplex::with_space(step, bases.clone(), BTreeMap::new(), space.clone())?;
        let mut diffs = BTreeMap::new();
        for (&n, b) in &bases {
            let target = shell.basis(n + step);
            let mut m = IntMatrix::zeros(target.len(), b.len());
            for (j, l) in b.iter().enumerate() {
                for (t, c) in &d(l) {
                    match shell.position(t) {
                        Some((deg, i)) if deg == n + step => m.set(i, j, c.clone()),
                        _ => {
                            return Err(Error::IllegalChain(format!(
                                "d({l}) has a term {t} outside degree {}",
                                n + step
                            )))
                        }
                    }
                }
            }
            diffs.insert(n, m);
        }
        ChainComplex::with_space(step, bases, diffs, space)
    }

    pub fn zero(step: i64) -> ChainComplex {
        ChainComplex::new(step, BTreeMap::new(), BTreeMap::new()).expect("zero complex")
    }

    /// `ℤ` in degree 0, with basis label `1`.
    pub fn unit(step: i64) -> ChainComplex {
        ChainComplex::new(step, BTreeMap::from([(0, vec![Label::Unit])]), BTreeMap::new())
            .expect("unit complex")
    }

    pub fn step(&self) -> i64 {
        self.step
    }

    /// Degrees with a nonzero component, ascending.
    pub fn degrees(&self) -> Vec<i64> {
        self.bases.keys().copied().collect()
    }

    pub fn window(&self) -> Option<(i64, i64)> {
        Some((*self.bases.keys().next()?, *self.bases.keys().next_back()?))
    }

    pub fn rank(&self, n: i64) -> usize {
        self.bases.get(&n).map_or(0, Vec::len)
    }

    pub fn total_rank(&self) -> usize {
        self.index.len()
    }

    pub fn basis(&self, n: i64) -> &[Label] {
        self.bases.get(&n).map_or(&[], Vec::as_slice)
    }

    pub fn bases(&self) -> &BTreeMap<i64, Vec<Label>> {
        &self.bases
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.bases.values().flatten()
    }

    /// `d_n: C_n → C_{n+step}`.
    pub fn d(&self, n: i64) -> IntMatrix {
        self.diffs
            .get(&n)
            .cloned()
            .unwrap_or_else(|| IntMatrix::zeros(self.rank(n + self.step), self.rank(n)))
    }

    pub fn position(&self, l: &Label) -> Option<(i64, usize)> {
        self.index.get(l).copied()
    }

    pub fn degree_of(&self, l: &Label) -> Option<i64> {
        self.position(l).map(|(n, _)| n)
    }

    pub fn space(&self) -> Space {
        self.space.clone()
    }

    pub fn coords(&self, n: i64, v: &Vector) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.rank(n)];
        for (l, c) in v {
            if let Some((m, i)) = self.position(l) {
                if m == n {
                    out[i] += c;
                }
            }
        }
        out
    }

    pub fn vector(&self, n: i64, coords: &[BigInt]) -> Vector {
        self.basis(n)
            .iter()
            .zip(coords)
            .map(|(l, c)| (l.clone(), c.clone()))
            .collect()
    }

    /// `d` of a basis label.
    pub fn differential(&self, l: &Label) -> Vector {
        match (self.position(l), self.diffs.is_empty()) {
            (Some((n, i)), false) => match self.diffs.get(&n) {
                Some(m) => self.vector(n + self.step, &m.column(i)),
                None => Vector::zero(),
            },
            _ => Vector::zero(),
        }
    }

    pub fn apply_d(&self, v: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (l, c) in v {
            out.add_scaled(c, &self.differential(l));
        }
        out
    }

    pub fn differential_map(&self) -> LinMap {
        let me = self.clone();
        LinMap::new(&self.space, &self.space, move |l| me.differential(l))
    }

    /// `l ↦ deg(l)·l`; a map preserves degrees iff it commutes with these.
    pub fn degree_operator(&self) -> LinMap {
        let me = self.clone();
        LinMap::new(&self.space, &self.space, move |l| {
            Vector::term(me.degree_of(l).unwrap_or(0), l.clone())
        })
    }

    /// The underlying graded module (differential forgotten).
    pub fn forget(&self) -> ChainComplex {
        let mut u = self.clone();
        u.diffs.clear();
        u
    }

    pub fn identity(&self) -> ChainMap {
        ChainMap {
            source: self.clone(),
            target: self.clone(),
            map: LinMap::identity(&self.space),
        }
    }

    pub fn check_d_squared(&self) -> bool {
        self.degrees().iter().all(|&n| {
            let next = self.d(n + self.step);
            (&next * &self.d(n)).is_zero()
        })
    }
}

/// JSON form: `{window:[lo,hi], ranks:{n:int}, differentials:{n:[[..]]}}`,
/// plus an optional `step` (default `-1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainComplexJson {
    pub window: [i64; 2],
    #[serde(default = "homological")]
    pub step: i64,
    pub ranks: BTreeMap<i64, usize>,
    #[serde(default)]
    pub differentials: BTreeMap<i64, Vec<Vec<i64>>>,
}

fn homological() -> i64 {
    -1
}

impl ChainComplexJson {
    pub fn build(&self) -> Result<ChainComplex> {
        let [lo, hi] = self.window;
        if let Some(n) = self.ranks.keys().find(|n| **n < lo || **n > hi) {
            return Err(Error::IllegalChain(format!("degree {n} outside window [{lo}, {hi}]")));
        }
        let rank = |n: i64| self.ranks.get(&n).copied().unwrap_or(0);
        let mut diffs = BTreeMap::new();
        for (&n, rows) in &self.differentials {
            let (r, c) = (rank(n + self.step), rank(n));
            if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                return Err(Error::IllegalChain(format!(
                    "d_{n} must be a {r}×{c} matrix"
                )));
            }
            diffs.insert(n, IntMatrix::from_rows(rows, c));
        }
        ChainComplex::from_ranks(self.step, &self.ranks, diffs)
    }

    /// Only complexes with default labels round-trip.
    pub fn from_complex(x: &ChainComplex) -> Result<ChainComplexJson> {
        let small = |v: &BigInt| {
            i64::try_from(v).map_err(|_| Error::Config(format!("entry {v} does not fit in 64 bits")))
        };
        let mut differentials = BTreeMap::new();
        for n in x.degrees() {
            let d = x.d(n);
            if d.is_zero() {
                continue;
            }
            let rows = d
                .to_rows()
                .iter()
                .map(|r| r.iter().map(small).collect::<Result<Vec<i64>>>())
                .collect::<Result<Vec<_>>>()?;
            differentials.insert(n, rows);
        }
        let (lo, hi) = x.window().unwrap_or((0, 0));
        Ok(ChainComplexJson {
            window: [lo, hi],
            step: x.step(),
            ranks: x.degrees().into_iter().map(|n| (n, x.rank(n))).collect(),
            differentials,
        })
    }
}

/// A degree-preserving linear map between two complexes.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: ChainComplex,
    pub target: ChainComplex,
    pub map: LinMap,
}

impl ChainMap {
    /// Checks degrees and the chain-map condition `d f = f d`.
    pub fn new(source: &ChainComplex, target: &ChainComplex, map: LinMap) -> Result<ChainMap> {
        let f = ChainMap::graded(source, target, map)?;
        if let Some(l) = f.chain_condition_failure() {
            return Err(Error::IllegalChain(format!("d f ≠ f d at {l}")));
        }
        Ok(f)
    }

    /// Checks only that degrees are preserved.
    pub fn graded(source: &ChainComplex, target: &ChainComplex, map: LinMap) -> Result<ChainMap> {
        if map.dom() != &source.space() || map.cod() != &target.space() {
            return Err(Error::mismatch(
                format!("{} → {}", source.space(), target.space()),
                format!("{} → {}", map.dom(), map.cod()),
            ));
        }
        for l in source.labels() {
            let n = source.degree_of(l);
            if let Some(t) = map.apply(l).labels().find(|t| target.degree_of(t) != n) {
                return Err(Error::IllegalChain(format!("f({l}) has a term {t} of another degree")));
            }
        }
        Ok(ChainMap {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    pub fn apply(&self, l: &Label) -> Vector {
        self.map.apply(l)
    }

    pub fn chain_condition_failure(&self) -> Option<Label> {
        self.source.labels().find(|l| {
            self.target.apply_d(&self.map.apply(l)) != self.map.apply_vec(&self.source.differential(l))
        })
        .cloned()
    }

    pub fn is_chain_map(&self) -> bool {
        self.chain_condition_failure().is_none()
    }

    pub fn then(&self, g: &ChainMap) -> Result<ChainMap> {
        Ok(ChainMap {
            source: self.source.clone(),
            target: g.target.clone(),
            map: compose_all(&[&self.map, &g.map])?,
        })
    }

    /// Componentwise equality on all source labels.
    pub fn same_as(&self, other: &ChainMap) -> bool {
        self.source.labels().all(|l| self.apply(l) == other.apply(l))
    }
}

fn sorted_tensor_basis(a: &ChainComplex, b: &ChainComplex) -> BTreeMap<i64, Vec<Label>> {
    let mut bases: BTreeMap<i64, Vec<Label>> = BTreeMap::new();
    for i in a.degrees() {
        for j in b.degrees() {
            let slot = bases.entry(i + j).or_default();
            for x in a.basis(i) {
                for y in b.basis(j) {
                    slot.push(Label::pair(x, y));
                }
            }
        }
    }
    bases
}

/// `(A⊗B)_n = ⊕_{i+j=n} A_i⊗B_j`, `d(a⊗b) = da⊗b + (-1)^i a⊗db`.
pub fn tensor_chains(a: &ChainComplex, b: &ChainComplex) -> Result<ChainComplex> {
    if a.step() != b.step() {
        return Err(Error::IllegalChain("tensor factors have opposite differentials".into()));
    }
    let bases = sorted_tensor_basis(a, b);
    let space = Space::pair(&a.space(), &b.space());
    let w = a.space().width();
    let (ac, bc) = (a.clone(), b.clone());
    ChainComplex::from_label_differential(a.step(), bases, space, move |l| {
        let (x, y) = l.split_at(w);
        let i = ac.degree_of(&x).expect("left factor");
        let left = ac.differential(&x).tensor(&Vector::basis(y.clone()));
        let right = Vector::basis(x).tensor(&bc.differential(&y)).scale(&koszul(i).into());
        left + right
    })
}

/// `a⊗b ↦ (-1)^{ij} b⊗a`
pub fn chain_symmetry(a: &ChainComplex, b: &ChainComplex) -> Result<ChainMap> {
    let ab = tensor_chains(a, b)?;
    let ba = tensor_chains(b, a)?;
    let w = a.space().width();
    let (ac, bc) = (a.clone(), b.clone());
    let map = LinMap::new(&ab.space(), &ba.space(), move |l| {
        let (x, y) = l.split_at(w);
        let i = ac.degree_of(&x).expect("left factor");
        let j = bc.degree_of(&y).expect("right factor");
        Vector::term(koszul(i * j), Label::pair(&y, &x))
    });
    ChainMap::new(&ab, &ba, map)
}

/// Basis label of `[B, C]_n`: the matrix unit sending the `q`-th basis
/// vector of `B_j` to the `p`-th basis vector of `C_{j+n}`.
pub fn hom_label(n: i64, j: i64, p: usize, q: usize) -> Label {
    Label::atom("hom", &[n, j, p as i64, q as i64])
}

fn parse_hom(l: &Label) -> Option<(i64, i64, usize, usize)> {
    match l.atom_index("hom")? {
        [n, j, p, q] => Some((*n, *j, *p as usize, *q as usize)),
        _ => None,
    }
}

/// `[B, C]_n = ∏_j Hom(B_j, C_{j+n})` with
/// `(df)_j = d f_j - (-1)^n f_{j+step} d`.
pub fn internal_hom(b: &ChainComplex, c: &ChainComplex) -> Result<ChainComplex> {
    if b.step() != c.step() {
        return Err(Error::IllegalChain("hom between opposite differentials".into()));
    }
    let t = b.step();
    let mut bases: BTreeMap<i64, Vec<Label>> = BTreeMap::new();
    if let (Some((blo, bhi)), Some((clo, chi))) = (b.window(), c.window()) {
        for n in (clo - bhi)..=(chi - blo) {
            let slot = bases.entry(n).or_default();
            for j in b.degrees() {
                for p in 0..c.rank(j + n) {
                    for q in 0..b.rank(j) {
                        slot.push(hom_label(n, j, p, q));
                    }
                }
            }
        }
    }
    let (bc, cc) = (b.clone(), c.clone());
    let name = format!("[{},{}]", b.space(), c.space());
    let labels: Vec<Label> = bases.values().flatten().cloned().collect();
    let space = Space::finite(name, labels);
    ChainComplex::from_label_differential(t, bases, space, move |l| {
        let (n, j, p, q) = parse_hom(l).expect("hom label");
        let mut out = Vector::zero();
        let dc = cc.d(j + n);
        for r in 0..dc.rows() {
            let v = dc.get(r, p);
            if !v.is_zero() {
                out.add_term(hom_label(n + t, j, r, q), v.clone());
            }
        }
        let db = bc.d(j - t);
        let sign = BigInt::from(-koszul(n));
        for r in 0..db.cols() {
            let v = db.get(q, r);
            if !v.is_zero() {
                out.add_term(hom_label(n + t, j - t, p, r), &sign * v);
            }
        }
        out
    })
}

/// Chain maps `A⊗B → C` to chain maps `A → [B, C]`: `a ↦ (b ↦ F(a⊗b))`.
pub fn curry(f: &ChainMap, a: &ChainComplex, b: &ChainComplex) -> Result<ChainMap> {
    let c = &f.target;
    let hom = internal_hom(b, c)?;
    let (fc, bc, cc) = (f.clone(), b.clone(), c.clone());
    let map = LinMap::new(&a.space(), &hom.space(), move |x| {
        let mut out = Vector::zero();
        for j in bc.degrees() {
            for (q, y) in bc.basis(j).iter().enumerate() {
                for (t, v) in &fc.apply(&Label::pair(x, y)) {
                    let (deg, p) = cc.position(t).expect("target label");
                    out.add_term(hom_label(deg - j, j, p, q), v.clone());
                }
            }
        }
        out
    });
    ChainMap::new(a, &hom, map)
}

/// Chain maps `A → [B, C]` to chain maps `A⊗B → C`: `a⊗b ↦ G(a)(b)`.
pub fn uncurry(g: &ChainMap, b: &ChainComplex, c: &ChainComplex) -> Result<ChainMap> {
    let a = &g.source;
    let ab = tensor_chains(a, b)?;
    let w = a.space().width();
    let (gc, bc, cc) = (g.clone(), b.clone(), c.clone());
    let map = LinMap::new(&ab.space(), &c.space(), move |l| {
        let (x, y) = l.split_at(w);
        let (j, q) = bc.position(&y).expect("right factor");
        let mut out = Vector::zero();
        for (h, v) in &gc.apply(&x) {
            let (n, j2, p, q2) = parse_hom(h).expect("hom label");
            if j2 == j && q2 == q {
                out.add_term(cc.basis(j + n)[p].clone(), v.clone());
            }
        }
        out
    });
    ChainMap::new(&ab, c, map)
}

/// `ev: [B, C]⊗B → C`, the uncurrying of the identity.
pub fn evaluation(b: &ChainComplex, c: &ChainComplex) -> Result<ChainMap> {
    let hom = internal_hom(b, c)?;
    uncurry(&hom.identity(), b, c)
}

/// `L(C)_n = C_{n-step} ⊕ C_n` with `d(x, y) = (y, 0)`; only the grading of
/// `m` is used.
pub fn left_adjoint(m: &ChainComplex) -> ChainComplex {
    let t = m.step();
    let mut bases: BTreeMap<i64, Vec<Label>> = BTreeMap::new();
    for n in m.degrees() {
        bases
            .entry(n + t)
            .or_default()
            .extend(m.basis(n).iter().cloned().map(Label::left));
    }
    for n in m.degrees() {
        bases
            .entry(n)
            .or_default()
            .extend(m.basis(n).iter().cloned().map(Label::right));
    }
    let space = adjoint_space("L", m);
    ChainComplex::from_label_differential(t, bases, space, |l| match l {
        Label::Right(y) => Vector::basis(Label::left((**y).clone())),
        _ => Vector::zero(),
    })
    .expect("L(C) is a complex")
}

/// `R(C)_n = C_n ⊕ C_{n+step}` with `d(x, y) = (y, 0)`.
pub fn right_adjoint(m: &ChainComplex) -> ChainComplex {
    let t = m.step();
    let mut bases: BTreeMap<i64, Vec<Label>> = BTreeMap::new();
    for n in m.degrees() {
        bases
            .entry(n)
            .or_default()
            .extend(m.basis(n).iter().cloned().map(Label::left));
    }
    for n in m.degrees() {
        bases
            .entry(n - t)
            .or_default()
            .extend(m.basis(n).iter().cloned().map(Label::right));
    }
    let space = adjoint_space("R", m);
    ChainComplex::from_label_differential(t, bases, space, |l| match l {
        Label::Right(y) => Vector::basis(Label::left((**y).clone())),
        _ => Vector::zero(),
    })
    .expect("R(C) is a complex")
}

fn adjoint_space(tag: &str, m: &ChainComplex) -> Space {
    let labels: Vec<Label> = m
        .labels()
        .cloned()
        .map(Label::left)
        .chain(m.labels().cloned().map(Label::right))
        .collect();
    Space::finite(format!("{tag}({})", m.space()), labels)
}

fn wrap(v: &Vector, left: bool) -> Vector {
    v.map_labels(|l| {
        if left {
            Label::left(l.clone())
        } else {
            Label::right(l.clone())
        }
    })
}

/// `L` and `R` on a graded map `f: M → N`: `(x, y) ↦ (fx, fy)`.
pub fn adjoint_on_map(
    functor: fn(&ChainComplex) -> ChainComplex,
    f: &ChainMap,
) -> Result<ChainMap> {
    let (src, tgt) = (functor(&f.source), functor(&f.target));
    let g = f.map.clone();
    let map = LinMap::new(&src.space(), &tgt.space(), move |l| match l {
        Label::Left(x) => wrap(&g.apply(x), true),
        Label::Right(y) => wrap(&g.apply(y), false),
        _ => Vector::zero(),
    });
    ChainMap::new(&src, &tgt, map)
}

/// `η_M: M → U L M`, `m ↦ (0, m)`.
pub fn lu_unit(m: &ChainComplex) -> Result<ChainMap> {
    let lm = left_adjoint(m).forget();
    ChainMap::graded(
        m,
        &lm,
        LinMap::relabel(&m.space(), &lm.space(), |l| Label::right(l.clone())),
    )
}

/// `ε_X: L U X → X`, `(x, y) ↦ dx + y`.
pub fn lu_counit(x: &ChainComplex) -> Result<ChainMap> {
    let lx = left_adjoint(x);
    let xc = x.clone();
    let map = LinMap::new(&lx.space(), &x.space(), move |l| match l {
        Label::Left(a) => xc.differential(a),
        Label::Right(b) => Vector::basis((**b).clone()),
        _ => Vector::zero(),
    });
    ChainMap::new(&lx, x, map)
}

/// `η'_X: X → R U X`, `x ↦ (x, dx)`.
pub fn ur_unit(x: &ChainComplex) -> Result<ChainMap> {
    let rx = right_adjoint(x);
    let xc = x.clone();
    let map = LinMap::new(&x.space(), &rx.space(), move |l| {
        Vector::basis(Label::left(l.clone())) + wrap(&xc.differential(l), false)
    });
    ChainMap::new(x, &rx, map)
}

/// `ε'_M: U R M → M`, `(x, y) ↦ x`.
pub fn ur_counit(m: &ChainComplex) -> Result<ChainMap> {
    let rm = right_adjoint(m).forget();
    let map = LinMap::new(&rm.space(), &m.space(), |l| match l {
        Label::Left(a) => Vector::basis((**a).clone()),
        _ => Vector::zero(),
    });
    ChainMap::graded(&rm, m, map)
}

fn verdict_of(lhs: &ChainMap, rhs: &ChainMap) -> crate::linalg::Verdict {
    let labels: Vec<Label> = lhs.source.labels().cloned().collect();
    compare_on(&lhs.map, &rhs.map.with_spaces(lhs.map.dom(), lhs.map.cod()), &labels)
}

/// Triangle identities of `L ⊣ U` and `U ⊣ R`, at a graded module `m` and a
/// complex `x`.
pub fn check_triangle_identities(m: &ChainComplex, x: &ChainComplex) -> Result<LawReport> {
    let m = m.forget();
    let mut r = LawReport::default();

    let lm = left_adjoint(&m);
    let l_eta = adjoint_on_map(left_adjoint, &lu_unit(&m)?)?;
    let lhs = l_eta.then(&lu_counit(&lm)?)?;
    r.push("L-triangle", verdict_of(&lhs, &lm.identity()));

    let ux = x.forget();
    let lhs = lu_unit(&ux)?.then(&lu_counit(x)?)?;
    r.push("U-triangle-L", verdict_of(&lhs, &ux.identity()));

    let rm = right_adjoint(&m);
    let r_eps = adjoint_on_map(right_adjoint, &ur_counit(&m)?)?;
    let lhs = ur_unit(&rm)?.then(&r_eps)?;
    r.push("R-triangle", verdict_of(&lhs, &rm.identity()));

    let u_eta = ur_unit(x)?;
    let lhs = ChainMap {
        source: ux.clone(),
        target: u_eta.target.forget(),
        map: u_eta.map.clone(),
    }
    .then(&ur_counit(&ux)?)?;
    r.push("U-triangle-R", verdict_of(&lhs, &ux.identity()));
    Ok(r)
}

/// `φ: U R X → (I ⊕ D)⊗U X`, `(x, y) ↦ 1⊗x + d⊗y`, with `D` in degree
/// `-step`.
fn comparison_iso(x: &ChainComplex, h: &Space) -> LinMap {
    let rx = right_adjoint(x);
    let one = Label::right(Label::Unit);
    let d = Label::left(generator());
    LinMap::new(&rx.space(), &Space::pair(h, &x.space()), move |l| match l {
        Label::Left(a) => Vector::basis(Label::pair(&one, a)),
        Label::Right(b) => Vector::basis(Label::pair(&d, b)),
        _ => Vector::zero(),
    })
}

/// Compares the comonad `U R` with `(I ⊕ D)⊗−` at `x`: `φ` is a
/// degree-preserving isomorphism, natural in the sampled graded maps, and
/// carries the counit and comultiplication of `U R` to those of `I ⊕ D`.
pub fn comonad_comparison(x: &ChainComplex, samples: &[ChainMap]) -> Result<LawReport> {
    let t = x.step();
    let d_space = generator_comodule(&[-t]).carrier().clone();
    let h = differential_hopf_maps(&d_space);
    let hs = h.carrier().clone();
    let hx_graded = h_graded(&hs, t);
    let ux = x.forget();
    let rx = right_adjoint(&ux).forget();
    let hux = tensor_chains(&hx_graded, &ux)?;
    let phi = comparison_iso(&ux, &hs);
    let one = Label::right(Label::Unit);
    let psi = LinMap::new(&hux.space(), &rx.space(), move |l| {
        let (a, b) = l.split_at(1);
        if a == one {
            Vector::basis(Label::left(b))
        } else {
            Vector::basis(Label::right(b))
        }
    });
    let k = 0;
    let mut r = LawReport::default();
    r.push(
        "iso-left",
        equal_on_window(&compose_all(&[&phi, &psi])?, &LinMap::identity(&rx.space()), k)?,
    );
    r.push(
        "iso-right",
        equal_on_window(&compose_all(&[&psi, &phi])?, &LinMap::identity(&hux.space()), k)?,
    );
    r.push(
        "degree",
        equal_on_window(
            &compose_all(&[&rx.degree_operator(), &phi])?,
            &compose_all(&[&phi, &hux.degree_operator()])?,
            k,
        )?,
    );
    let counit = ur_counit(&ux)?;
    r.push(
        "counit",
        equal_on_window(
            &counit.map,
            &compose_all(&[&phi, &tensor_maps(h.epsilon(), &LinMap::identity(&ux.space()))])?,
            k,
        )?,
    );
    let rrx = right_adjoint(&rx).forget();
    let delta = ChainMap::graded(&rx, &rrx, ur_unit(&right_adjoint(&ux))?.map)?;
    let phi_outer = comparison_iso(&rx, &hs);
    let lhs = compose_all(&[
        &delta.map,
        &phi_outer,
        &tensor_maps(&LinMap::identity(&hs), &phi),
    ])?;
    let rhs = compose_all(&[&phi, &tensor_maps(h.delta(), &LinMap::identity(&ux.space()))])?;
    r.push("comultiplication", equal_on_window(&lhs, &rhs, k)?);

    for (i, f) in samples.iter().enumerate() {
        let y = f.target.forget();
        let rf = adjoint_on_map(right_adjoint, &ChainMap::graded(&ux, &y, f.map.with_spaces(&ux.space(), &y.space()))?)?;
        let phi_y = comparison_iso(&y, &hs);
        let lhs = compose_all(&[&rf.map.with_spaces(&rx.space(), &right_adjoint(&y).space()), &phi_y])?;
        let rhs = compose_all(&[&phi, &tensor_maps(&LinMap::identity(&hs), &f.map.with_spaces(&ux.space(), &y.space()))])?;
        r.push(format!("naturality-{i}"), equal_on_window(&lhs, &rhs, k)?);
    }
    Ok(r)
}

/// `I ⊕ D` as a graded module with `D` in degree `-step`.
fn h_graded(hs: &Space, step: i64) -> ChainComplex {
    let bases = BTreeMap::from([
        (0, vec![Label::right(Label::Unit)]),
        (-step, vec![Label::left(generator())]),
    ]);
    ChainComplex::with_space(step, bases, BTreeMap::new(), hs.clone()).expect("I ⊕ D")
}

// Random generation.

/// A random bounded complex: a sum of disks `ℤ --1--> ℤ` and spheres, with
/// every differential conjugated by random unimodular elementary matrices.
pub fn random_complex(
    rng: &mut impl Rng,
    step: i64,
    lo: i64,
    len: usize,
    max_rank: usize,
    min_disks: usize,
) -> ChainComplex {
    let degrees: Vec<i64> = (0..len as i64).map(|i| lo + i).collect();
    let mut ranks: BTreeMap<i64, usize> = degrees.iter().map(|&n| (n, rng.gen_range(0..=max_rank))).collect();
    // Disks are placed from the source degree n to n + step.
    let mut disks: BTreeMap<i64, usize> = BTreeMap::new();
    let mut free: BTreeMap<i64, usize> = ranks.clone();
    let order: Vec<i64> = if step < 0 {
        degrees.iter().rev().copied().collect()
    } else {
        degrees.clone()
    };
    let mut placed = 0;
    for &n in &order {
        let to = n + step;
        let cap = free[&n].min(free.get(&to).copied().unwrap_or(0));
        if cap == 0 {
            continue;
        }
        let lower = if placed < min_disks { 1 } else { 0 };
        let k = rng.gen_range(lower..=cap);
        placed += k;
        disks.insert(n, k);
        *free.get_mut(&n).unwrap() -= k;
        *free.get_mut(&to).unwrap() -= k;
    }
    if placed < min_disks && len >= 2 {
        // Force a disk at the top of the window.
        let n = if step < 0 { lo + 1 } else { lo };
        *ranks.get_mut(&n).unwrap() += 1;
        *ranks.get_mut(&(n + step)).unwrap() += 1;
        *disks.entry(n).or_default() += 1;
    }
    // Layout in each degree: [disk sources | disk targets | spheres].
    let mut diffs = BTreeMap::new();
    for (&n, &k) in &disks {
        let to = n + step;
        let tgt_offset = disks.get(&to).copied().unwrap_or(0);
        let mut m = IntMatrix::zeros(ranks[&to], ranks[&n]);
        for i in 0..k {
            m.set(tgt_offset + i, i, BigInt::one());
        }
        diffs.insert(n, m);
    }
    // Conjugate: d_n ↦ P_{n+step} d_n P_n⁻¹.
    let mut basis_change: BTreeMap<i64, (IntMatrix, IntMatrix)> = BTreeMap::new();
    for &n in &degrees {
        let r = ranks[&n];
        let mut p = IntMatrix::identity(r);
        let mut q = IntMatrix::identity(r);
        if r >= 2 {
            for _ in 0..rng.gen_range(0..=3) {
                let i = rng.gen_range(0..r);
                let mut j = rng.gen_range(0..r - 1);
                if j >= i {
                    j += 1;
                }
                let k = BigInt::from(rng.gen_range(-2i64..=2));
                p.add_row_multiple(i, j, &k);
                q.add_col_multiple(j, i, &-k);
            }
        }
        basis_change.insert(n, (p, q));
    }
    let diffs = diffs
        .into_iter()
        .map(|(n, m)| {
            let (p, _) = &basis_change[&(n + step)];
            let (_, q) = &basis_change[&n];
            (n, &(p * &m) * q)
        })
        .collect();
    ChainComplex::from_ranks(step, &ranks, diffs).expect("random complex satisfies d² = 0")
}

fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, BigInt::from(rng.gen_range(-bound..=bound)));
        }
    }
    m
}

/// A linear map given by one matrix per source degree, moving degree by `shift`.
pub fn matrix_map(
    x: &ChainComplex,
    y: &ChainComplex,
    shift: i64,
    comps: BTreeMap<i64, IntMatrix>,
) -> LinMap {
    let (xc, yc) = (x.clone(), y.clone());
    LinMap::new(&x.space(), &y.space(), move |l| match xc.position(l) {
        Some((n, i)) => match comps.get(&n) {
            Some(m) => yc.vector(n + shift, &m.column(i)),
            None => Vector::zero(),
        },
        None => Vector::zero(),
    })
}

/// A random degree-preserving map of graded modules.
pub fn random_graded_map(rng: &mut impl Rng, x: &ChainComplex, y: &ChainComplex) -> ChainMap {
    let comps = x
        .degrees()
        .into_iter()
        .map(|n| (n, random_matrix(rng, y.rank(n), x.rank(n), 3)))
        .collect();
    ChainMap::graded(x, y, matrix_map(x, y, 0, comps)).expect("degree preserving")
}

/// A random chain map `f = d h + h d`, plus the identity when `x = y` and
/// `with_identity` is set.
pub fn random_chain_map(
    rng: &mut impl Rng,
    x: &ChainComplex,
    y: &ChainComplex,
    with_identity: bool,
) -> ChainMap {
    let t = x.step();
    let comps = x
        .degrees()
        .into_iter()
        .map(|n| (n, random_matrix(rng, y.rank(n - t), x.rank(n), 2)))
        .collect();
    let h = matrix_map(x, y, -t, comps);
    let (xc, yc, h2) = (x.clone(), y.clone(), h.clone());
    let mut f = LinMap::new(&x.space(), &y.space(), move |l| {
        yc.apply_d(&h2.apply(l)) + h2.apply_vec(&xc.differential(l))
    });
    if with_identity && x == y {
        f = f.add(&LinMap::identity(&x.space())).expect("same shape");
    }
    ChainMap::new(x, y, f).expect("homotopy form is a chain map")
}

// Bicomplexes.

/// A bigraded free module with a first differential `d` of bidegree
/// `(-1, 0)` and a candidate second differential `d'`.
#[derive(Clone, Debug)]
pub struct Bicomplex {
    bases: BTreeMap<(i64, i64), Vec<Label>>,
    index: BTreeMap<Label, (i64, i64)>,
    d: BTreeMap<Label, Vector>,
    d_prime: BTreeMap<Label, Vector>,
    space: Space,
}

impl Bicomplex {
    pub fn new(
        bases: BTreeMap<(i64, i64), Vec<Label>>,
        d: BTreeMap<Label, Vector>,
        d_prime: BTreeMap<Label, Vector>,
        space: Space,
    ) -> Result<Bicomplex> {
        let mut index = BTreeMap::new();
        for (&nm, b) in &bases {
            for l in b {
                if index.insert(l.clone(), nm).is_some() {
                    return Err(Error::IllegalChain(format!("label {l} occurs twice")));
                }
            }
        }
        let declared: BTreeSet<Label> = space
            .basis()
            .ok_or_else(|| Error::IllegalChain("bicomplex carrier must be finite".into()))?
            .into_iter()
            .collect();
        if declared.len() != index.len() || !index.keys().all(|l| declared.contains(l)) {
            return Err(Error::IllegalChain("carrier does not match the bigraded basis".into()));
        }
        Ok(Bicomplex {
            bases,
            index,
            d,
            d_prime,
            space,
        })
    }

    /// `X⊗Y` with `x⊗y` in bidegree `(|x| + shift·|y|, |y|)`,
    /// `d = d_X⊗1` and `d'(x⊗y) = sign(|x|)·x⊗dy` where `sign` is `+1` or
    /// `(-1)^{|x|}` according to `alternate`.
    pub fn product(x: &ChainComplex, y: &ChainComplex, shift: i64, alternate: bool) -> Result<Bicomplex> {
        let mut bases: BTreeMap<(i64, i64), Vec<Label>> = BTreeMap::new();
        let mut d = BTreeMap::new();
        let mut dp = BTreeMap::new();
        for i in x.degrees() {
            for j in y.degrees() {
                for a in x.basis(i) {
                    for b in y.basis(j) {
                        let l = Label::pair(a, b);
                        bases.entry((i + shift * j, j)).or_default().push(l.clone());
                        d.insert(l.clone(), x.differential(a).tensor(&Vector::basis(b.clone())));
                        let sign = if alternate { koszul(i) } else { 1 };
                        dp.insert(
                            l,
                            Vector::basis(a.clone()).tensor(&y.differential(b)).scale(&sign.into()),
                        );
                    }
                }
            }
        }
        Bicomplex::new(bases, d, dp, Space::pair(&x.space(), &y.space()))
    }

    pub fn bidegree(&self, l: &Label) -> Option<(i64, i64)> {
        self.index.get(l).copied()
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.bases.values().flatten()
    }

    pub fn d(&self, l: &Label) -> Vector {
        self.d.get(l).cloned().unwrap_or_default()
    }

    pub fn d_prime(&self, l: &Label) -> Vector {
        self.d_prime.get(l).cloned().unwrap_or_default()
    }

    fn apply(map: &BTreeMap<Label, Vector>, v: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (l, c) in v {
            if let Some(img) = map.get(l) {
                out.add_scaled(c, img);
            }
        }
        out
    }

    fn check_bidegree(&self, map: &BTreeMap<Label, Vector>, what: &str, shift: (i64, i64)) -> Result<()> {
        for (l, v) in map {
            let (n, m) = self.bidegree(l).ok_or_else(|| {
                Error::IllegalChain(format!("{what} defined on unknown label {l}"))
            })?;
            if let Some(t) = v.labels().find(|t| self.bidegree(t) != Some((n + shift.0, m + shift.1))) {
                return Err(Error::IllegalChain(format!(
                    "{what}({l}) has a term {t} outside bidegree ({}, {})",
                    n + shift.0,
                    m + shift.1
                )));
            }
        }
        Ok(())
    }
}

/// The result of [`second_differential`]: the `(I ⊕ D)`-comodule encoding
/// `d'`, and the legality report it passed.
#[derive(Clone, Debug)]
pub struct SecondDifferential {
    pub comodule: HComodule,
    pub report: LawReport,
}

/// The bidegree of `D` for the coelement `κ` and direction `s`.
pub fn differential_bidegree(kappa: i64, s: i64) -> [i64; 2] {
    [s * (1 + kappa) / 2, 1]
}

/// Validates `d'` against `κ` and `s` and emits the comodule structure.
///
/// `κ = -1` requires `d d' = d' d` and `d'` of bidegree `(0, -1)`;
/// `κ = +1` requires `d' d = -d d'` and `d'` of bidegree `(-s, -1)`.
pub fn second_differential(b: &Bicomplex, kappa: i64, s: i64) -> Result<SecondDifferential> {
    if kappa.abs() != 1 || s.abs() != 1 {
        return Err(Error::Config("κ and s must be ±1".into()));
    }
    let [a, one] = differential_bidegree(kappa, s);
    b.check_bidegree(&b.d, "d", (-1, 0))?;
    b.check_bidegree(&b.d_prime, "d'", (-a, -one))?;
    for l in b.labels() {
        if !Bicomplex::apply(&b.d, &b.d(l)).is_zero() {
            return Err(Error::IllegalChain(format!("d∘d ≠ 0 at {l}")));
        }
        if !Bicomplex::apply(&b.d_prime, &b.d_prime(l)).is_zero() {
            return Err(Error::IllegalChain(format!("d'∘d' ≠ 0 at {l}")));
        }
    }
    let mut labels: Vec<&Label> = b.labels().collect();
    labels.sort_by_key(|l| b.bidegree(l));
    for l in labels {
        let lhs = Bicomplex::apply(&b.d_prime, &b.d(l));
        let rhs = Bicomplex::apply(&b.d, &b.d_prime(l)).scale(&BigInt::from(-kappa));
        if lhs != rhs {
            let (n, m) = b.bidegree(l).unwrap();
            return Err(Error::SquareViolation { n, m });
        }
    }

    let c = sign_coelement(&Bicharacter::new(vec![-1, kappa as i8])?);
    let hb = build_differential_hopf(&generator_comodule(&[a, one]), &c)?;
    let ring = hb.base().clone();
    let space = b.space().clone();
    let bc = b.clone();
    let alpha = LinMap::new(&space, &Space::pair(ring.carrier(), &space), move |l| {
        let (n, m) = bc.bidegree(l).expect("basis label");
        Vector::basis(Label::pair(&monomial(&[n, m]), l))
    });
    let alpha = Comodule::new_unchecked(&ring, &space, alpha)?;
    let bc = b.clone();
    let unit = Label::right(Label::Unit);
    let dl = Label::left(generator());
    let chi = LinMap::new(&space, &Space::pair(hb.hopf().carrier(), &space), move |l| {
        Vector::basis(Label::pair(&unit, l)) + Vector::basis(dl.clone()).tensor(&bc.d_prime(l))
    });
    let comodule = HComodule::new(&hb, alpha, chi.clone())?;
    let mut report = comodule.validate(0)?;

    // χ must commute with the chain differentials, with D in chain degree a.
    let bc = b.clone();
    let hs = hb.hopf().carrier().clone();
    let d_b = LinMap::new(&space, &space, move |l| bc.d(l));
    let bc = b.clone();
    let d_hb = LinMap::new(&Space::pair(&hs, &space), &Space::pair(&hs, &space), move |l| {
        let (h, x) = l.split_at(1);
        let sign = if h == Label::right(Label::Unit) { 1 } else { koszul(a) };
        Vector::basis(h).tensor(&bc.d(&x)).scale(&sign.into())
    });
    let all: Vec<Label> = b.labels().cloned().collect();
    report.push(
        "chi-chain-map",
        compare_on(
            &compose_all(&[&d_b, &chi])?,
            &compose_all(&[&chi, &d_hb])?,
            &all,
        ),
    );
    report.clone().into_result()?;
    Ok(SecondDifferential { comodule, report })
}
