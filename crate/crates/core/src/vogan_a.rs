//! Type-A Vogan varieties.
//!
//! For an unramified infinitesimal character of `GL_n` whose exponents lie in
//! one class modulo the integers, the Vogan variety is the space of graded
//! maps `x_i : V_i -> V_{i+1}` between the eigenspaces, acted on by
//! `prod_i GL(V_i)`. Orbits are classified by multisegments with the given
//! support, the complete invariant being the ranks of the composites
//! `V_i -> V_j`, and orbit closure is the entrywise order on those ranks.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::Q;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Default cap on `n` for orbit enumeration.
pub const DEFAULT_N_CAP: usize = 12;

/// Dimensions `d_i` of the graded pieces, keyed by integer grade.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<String, usize>", into = "BTreeMap<String, usize>")]
pub struct GradedDims {
    dims: BTreeMap<i64, usize>,
}

impl GradedDims {
    pub fn new(dims: BTreeMap<i64, usize>) -> Result<Self> {
        if let Some((i, _)) = dims.iter().find(|(_, d)| **d == 0) {
            return Err(Error::InvalidParam(format!("graded piece {i} has dimension 0")));
        }
        Ok(Self { dims })
    }

    pub fn from_pairs(pairs: &[(i64, usize)]) -> Result<Self> {
        let mut dims = BTreeMap::new();
        for &(i, d) in pairs {
            *dims.entry(i).or_insert(0) += d;
        }
        Self::new(dims)
    }

    pub fn get(&self, i: i64) -> usize {
        self.dims.get(&i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.dims.iter().map(|(i, d)| (*i, *d))
    }

    pub fn min_grade(&self) -> Option<i64> {
        self.dims.keys().next().copied()
    }

    pub fn max_grade(&self) -> Option<i64> {
        self.dims.keys().next_back().copied()
    }

    /// Dimension of the space of graded maps.
    pub fn vogan_dimension(&self) -> usize {
        self.iter().map(|(i, d)| d * self.get(i + 1)).sum()
    }

    /// Dimension of `prod_i GL(d_i)`.
    pub fn group_dimension(&self) -> usize {
        self.dims.values().map(|d| d * d).sum()
    }

    /// Maximal runs of consecutive grades; the Vogan variety and the group
    /// factor over them.
    pub fn components(&self) -> Vec<GradedDims> {
        let mut out: Vec<GradedDims> = Vec::new();
        let mut prev: Option<i64> = None;
        for (i, d) in self.iter() {
            if prev != Some(i - 1) {
                out.push(GradedDims::default());
            }
            out.last_mut().expect("pushed").dims.insert(i, d);
            prev = Some(i);
        }
        out
    }

    pub fn shifted(&self, by: i64) -> Self {
        Self { dims: self.dims.iter().map(|(i, d)| (i + by, *d)).collect() }
    }
}

impl TryFrom<BTreeMap<String, usize>> for GradedDims {
    type Error = String;
    fn try_from(raw: BTreeMap<String, usize>) -> std::result::Result<Self, String> {
        let mut dims = BTreeMap::new();
        for (k, v) in raw {
            let i: i64 = k.trim().parse().map_err(|_| format!("bad grade {k:?}"))?;
            dims.insert(i, v);
        }
        GradedDims::new(dims).map_err(|e| e.to_string())
    }
}

impl From<GradedDims> for BTreeMap<String, usize> {
    fn from(g: GradedDims) -> Self {
        g.dims.into_iter().map(|(i, d)| (i.to_string(), d)).collect()
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(i, d)| format!("{i}:{d}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// An integer segment `[a, b]`, `a <= b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[i64; 2]", into = "[i64; 2]")]
pub struct Segment {
    pub a: i64,
    pub b: i64,
}

impl Segment {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a > b {
            return Err(Error::InvalidParam(format!("segment [{a}, {b}] is empty")));
        }
        Ok(Self { a, b })
    }

    pub fn len(&self) -> usize {
        (self.b - self.a + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn covers(&self, i: i64) -> bool {
        self.a <= i && i <= self.b
    }
}

impl TryFrom<[i64; 2]> for Segment {
    type Error = String;
    fn try_from([a, b]: [i64; 2]) -> std::result::Result<Self, String> {
        Segment::new(a, b).map_err(|e| e.to_string())
    }
}

impl From<Segment> for [i64; 2] {
    fn from(s: Segment) -> Self {
        [s.a, s.b]
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// A multiset of segments, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<Segment>", into = "Vec<Segment>")]
pub struct Multisegment {
    segs: Vec<Segment>,
}

impl Multisegment {
    pub fn new(mut segs: Vec<Segment>) -> Self {
        segs.sort();
        Self { segs }
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        pairs.iter().map(|&(a, b)| Segment::new(a, b)).collect::<Result<Vec<_>>>().map(Self::new)
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segs
    }

    pub fn len(&self) -> usize {
        self.segs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segs.is_empty()
    }

    /// Support with multiplicity.
    pub fn support(&self) -> GradedDims {
        let mut dims = BTreeMap::new();
        for s in &self.segs {
            for i in s.a..=s.b {
                *dims.entry(i).or_insert(0) += 1;
            }
        }
        GradedDims { dims }
    }

    pub fn total(&self) -> usize {
        self.segs.iter().map(Segment::len).sum()
    }

    /// Union of multisets.
    pub fn union(&self, other: &Self) -> Self {
        Self::new(self.segs.iter().chain(&other.segs).copied().collect())
    }
}

impl From<Vec<Segment>> for Multisegment {
    fn from(segs: Vec<Segment>) -> Self {
        Self::new(segs)
    }
}

impl From<Multisegment> for Vec<Segment> {
    fn from(m: Multisegment) -> Self {
        m.segs
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.segs.iter().map(|s| s.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Every multisegment with support `g`, in lexicographic order.
pub fn enumerate_orbits(g: &GradedDims, n_cap: usize) -> Result<Vec<Multisegment>> {
    if g.total() > n_cap {
        return Err(Error::TooLarge { what: "n", got: g.total(), cap: n_cap });
    }
    let mut out = Vec::new();
    let mut remaining = g.dims.clone();
    let mut current = Vec::new();
    extend_orbits(&mut remaining, &mut current, &mut out);
    Ok(out)
}

fn extend_orbits(remaining: &mut BTreeMap<i64, usize>, current: &mut Vec<Segment>, out: &mut Vec<Multisegment>) {
    // The lowest grade still to be covered must start a segment.
    let Some(a) = remaining.iter().find(|(_, d)| **d > 0).map(|(i, _)| *i) else {
        out.push(Multisegment::new(current.clone()));
        return;
    };
    let min_b = match current.last() {
        Some(last) if last.a == a => last.b,
        _ => a,
    };
    let mut b = a;
    while remaining.get(&b).copied().unwrap_or(0) > 0 {
        if b >= min_b {
            for i in a..=b {
                *remaining.get_mut(&i).expect("covered") -= 1;
            }
            current.push(Segment { a, b });
            extend_orbits(remaining, current, out);
            current.pop();
            for i in a..=b {
                *remaining.get_mut(&i).expect("covered") += 1;
            }
        }
        b += 1;
    }
}

/// `r(i, j)` for `i <= j`: the rank of the composite `V_i -> V_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RankMatrix {
    r: BTreeMap<(i64, i64), usize>,
}

impl RankMatrix {
    pub fn get(&self, i: i64, j: i64) -> usize {
        self.r.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((i64, i64), usize)> + '_ {
        self.r.iter().map(|(k, v)| (*k, *v))
    }

    /// Entrywise comparison over the union of the two index sets.
    pub fn leq(&self, other: &Self) -> bool {
        self.r.iter().all(|((i, j), v)| *v <= other.get(*i, *j))
    }

    /// Multiplicity of `[i, j]` by inclusion-exclusion:
    /// `r(i,j) - r(i-1,j) - r(i,j+1) + r(i-1,j+1)`.
    pub fn to_multisegment(&self) -> Result<Multisegment> {
        let mut segs = Vec::new();
        for &(i, j) in self.r.keys() {
            let m = self.get(i, j) as i64 - self.get(i - 1, j) as i64 - self.get(i, j + 1) as i64
                + self.get(i - 1, j + 1) as i64;
            if m < 0 {
                return Err(Error::InvalidParam(format!("rank data gives multiplicity {m} for [{i},{j}]")));
            }
            for _ in 0..m {
                segs.push(Segment { a: i, b: j });
            }
        }
        Ok(Multisegment::new(segs))
    }
}

/// `r(i, j) = #{[a, b] in m : a <= i, j <= b}` for every `i <= j` in the
/// grade range of the support.
pub fn rank_invariants(m: &Multisegment) -> RankMatrix {
    let mut r = BTreeMap::new();
    let support = m.support();
    if let (Some(lo), Some(hi)) = (support.min_grade(), support.max_grade()) {
        for i in lo..=hi {
            for j in i..=hi {
                let c = m.segments().iter().filter(|s| s.a <= i && j <= s.b).count();
                r.insert((i, j), c);
            }
        }
    }
    RankMatrix { r }
}

/// A point of the Vogan variety: `maps[i]` is `x_i : V_i -> V_{i+1}` as a
/// `d_{i+1} x d_i` matrix, present whenever both grades are in the support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMaps<T> {
    pub dims: GradedDims,
    pub maps: BTreeMap<i64, Matrix<T>>,
}

impl<T: Scalar> GradedMaps<T> {
    pub fn new(dims: GradedDims, maps: BTreeMap<i64, Matrix<T>>) -> Result<Self> {
        for (i, d) in dims.iter() {
            let next = dims.get(i + 1);
            match maps.get(&i) {
                Some(x) if next == 0 => {
                    return Err(Error::ShapeMismatch(format!("map from grade {i} into an empty grade ({}x{})", x.rows(), x.cols())));
                }
                Some(x) if x.rows() != next || x.cols() != d => {
                    return Err(Error::ShapeMismatch(format!(
                        "x_{i} is {}x{}, expected {next}x{d}",
                        x.rows(),
                        x.cols()
                    )));
                }
                None if next > 0 => {
                    return Err(Error::ShapeMismatch(format!("missing map x_{i}")));
                }
                _ => {}
            }
        }
        if let Some(i) = maps.keys().find(|i| dims.get(**i) == 0) {
            return Err(Error::ShapeMismatch(format!("map x_{i} out of an empty grade")));
        }
        Ok(Self { dims, maps })
    }

    /// The composite `V_i -> V_j` as a matrix.
    pub fn composite(&self, i: i64, j: i64) -> Matrix<T> {
        let mut acc = Matrix::identity(self.dims.get(i));
        for k in i..j {
            match self.maps.get(&k) {
                Some(x) => acc = x.mul(&acc).expect("shapes validated"),
                None => return Matrix::zeros(self.dims.get(j), self.dims.get(i)),
            }
        }
        acc
    }
}

/// One Jordan string of 1's per segment, blocks ordered by `(a, b)`.
pub fn canonical_representative<T: Scalar>(m: &Multisegment) -> GradedMaps<T> {
    let dims = m.support();
    let basis = |i: i64| -> Vec<usize> {
        m.segments().iter().enumerate().filter(|(_, s)| s.covers(i)).map(|(k, _)| k).collect()
    };
    let mut maps = BTreeMap::new();
    for (i, _) in dims.iter() {
        if dims.get(i + 1) == 0 {
            continue;
        }
        let src = basis(i);
        let dst = basis(i + 1);
        let mut x = Matrix::zeros(dst.len(), src.len());
        for (c, k) in src.iter().enumerate() {
            if let Some(r) = dst.iter().position(|kk| kk == k) {
                x[(r, c)] = T::one();
            }
        }
        maps.insert(i, x);
    }
    GradedMaps { dims, maps }
}

/// Classify a point of the Vogan variety by its composite ranks.
pub fn multisegment_from_matrices<T: Scalar>(g: &GradedDims, x: &BTreeMap<i64, Matrix<T>>) -> Result<Multisegment> {
    let maps = GradedMaps::new(g.clone(), x.clone())?;
    let mut r = BTreeMap::new();
    if let (Some(lo), Some(hi)) = (g.min_grade(), g.max_grade()) {
        for i in lo..=hi {
            for j in i..=hi {
                let rank = if g.get(i) == 0 || g.get(j) == 0 { 0 } else { maps.composite(i, j).rank() };
                r.insert((i, j), rank);
            }
        }
    }
    let m = RankMatrix { r }.to_multisegment()?;
    debug_assert_eq!(m.support(), *g, "rank data must reproduce the support");
    Ok(m)
}

/// Dimension of the orbit: rank of `(g_i) -> (g_{i+1} x_i - x_i g_i)` at the
/// canonical representative.
pub fn orbit_dimension(m: &Multisegment) -> usize {
    let rep = canonical_representative::<Q>(m);
    let dims = &rep.dims;
    // Column offsets of the gl(d_i) blocks.
    let mut col_off = BTreeMap::new();
    let mut ncols = 0;
    for (i, d) in dims.iter() {
        col_off.insert(i, ncols);
        ncols += d * d;
    }
    let mut row_off = BTreeMap::new();
    let mut nrows = 0;
    for (i, x) in &rep.maps {
        row_off.insert(*i, nrows);
        nrows += x.rows() * x.cols();
    }
    let mut a = Matrix::<Q>::zeros(nrows, ncols);
    for (i, x) in &rep.maps {
        let (p, q) = (x.rows(), x.cols());
        let ro = row_off[i];
        let (c_src, c_dst) = (col_off[i], col_off[&(i + 1)]);
        // Output entry (r, c) of g_{i+1} x - x g_i.
        for r in 0..p {
            for c in 0..q {
                let row = ro + r * q + c;
                // (g_{i+1} x)[r][c] = sum_k g_{i+1}[r][k] x[k][c]
                for k in 0..p {
                    if !x[(k, c)].is_zero() {
                        a[(row, c_dst + r * p + k)] += x[(k, c)];
                    }
                }
                // (x g_i)[r][c] = sum_k x[r][k] g_i[k][c]
                for k in 0..q {
                    if !x[(r, k)].is_zero() {
                        a[(row, c_src + k * q + c)] -= x[(r, k)];
                    }
                }
            }
        }
    }
    a.rank()
}

/// Whether the orbit of `m1` lies in the closure of the orbit of `m2`.
pub fn closure_leq(m1: &Multisegment, m2: &Multisegment) -> Result<bool> {
    if m1.support() != m2.support() {
        return Err(Error::SupportMismatch);
    }
    Ok(rank_invariants(m1).leq(&rank_invariants(m2)))
}

/// Exponents `a, a+1, .., b` of each segment, weakly decreasing.
pub fn infchar_of_multisegment<T: Scalar>(m: &Multisegment) -> Vec<T> {
    infchar_with_shift(m, &T::zero())
}

/// As [`infchar_of_multisegment`], with every exponent moved by `shift`
/// (e.g. `1/2` for half-integral supports).
pub fn infchar_with_shift<T: Scalar>(m: &Multisegment, shift: &T) -> Vec<T> {
    let mut out: Vec<T> = m
        .segments()
        .iter()
        .flat_map(|s| (s.a..=s.b).map(|i| T::from_int(i) + shift.clone()))
        .collect();
    out.sort_by(|x, y| y.cmp(x));
    out
}

/// A connected graded piece of the Vogan variety of a type-A infinitesimal
/// character: grade `i` carries the exponent `offset + i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GradedComponent<T> {
    pub offset: T,
    pub dims: GradedDims,
}

/// Split an exponent multiset into classes modulo the integers and each class
/// into connected components. The offset of a class is its fractional part.
pub fn vogan_components<T: Scalar>(exponents: &[T]) -> Vec<GradedComponent<T>> {
    let mut classes: BTreeMap<T, BTreeMap<i64, usize>> = BTreeMap::new();
    for e in exponents {
        let fl = e.floor_i64().expect("exponent fits in i64");
        let offset = e.clone() - T::from_int(fl);
        *classes.entry(offset).or_default().entry(fl).or_insert(0) += 1;
    }
    let mut out: Vec<GradedComponent<T>> = classes
        .into_iter()
        .flat_map(|(offset, dims)| {
            GradedDims { dims }
                .components()
                .into_iter()
                .map(move |dims| GradedComponent { offset: offset.clone(), dims })
        })
        .collect();
    out.sort();
    out
}

/// Orbits of a graded space with their closure order and dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPoset {
    pub orbits: Vec<Multisegment>,
    /// `leq[a][b]`: orbit `a` lies in the closure of orbit `b`.
    pub leq: Vec<Vec<bool>>,
    pub dims: Vec<usize>,
}

impl OrbitPoset {
    pub fn of(g: &GradedDims, n_cap: usize) -> Result<Self> {
        Self::from_orbits(enumerate_orbits(g, n_cap)?)
    }

    pub fn from_orbits(mut orbits: Vec<Multisegment>) -> Result<Self> {
        orbits.sort();
        let leq = orbits
            .iter()
            .map(|a| orbits.iter().map(|b| closure_leq(a, b)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let dims = orbits.iter().map(orbit_dimension).collect();
        Ok(Self { orbits, leq, dims })
    }

    /// Orbits of a direct sum: unions of one orbit from each summand.
    pub fn product(parts: &[Vec<Multisegment>]) -> Vec<Multisegment> {
        parts.iter().fold(vec![Multisegment::default()], |acc, part| {
            acc.iter().flat_map(|m| part.iter().map(move |p| m.union(p))).collect()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gd(pairs: &[(i64, usize)]) -> GradedDims {
        GradedDims::from_pairs(pairs).unwrap()
    }

    fn ms(pairs: &[(i64, i64)]) -> Multisegment {
        Multisegment::from_pairs(pairs).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        let two = enumerate_orbits(&gd(&[(0, 1), (1, 1)]), DEFAULT_N_CAP).unwrap();
        assert_eq!(two, vec![ms(&[(0, 0), (1, 1)]), ms(&[(0, 1)])]);
        assert_eq!(enumerate_orbits(&gd(&[(0, 1), (1, 1), (2, 1)]), DEFAULT_N_CAP).unwrap().len(), 4);
        assert_eq!(enumerate_orbits(&gd(&[(0, 1)]), DEFAULT_N_CAP).unwrap(), vec![ms(&[(0, 0)])]);
        let err = enumerate_orbits(&gd(&[(0, 7), (1, 6)]), DEFAULT_N_CAP);
        assert!(matches!(err, Err(Error::TooLarge { .. })));
    }

    #[test]
    fn enumeration_is_distinct_and_has_right_support() {
        let g = gd(&[(0, 2), (1, 3), (2, 2), (4, 1), (5, 1)]);
        let all = enumerate_orbits(&g, DEFAULT_N_CAP).unwrap();
        let set: std::collections::BTreeSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
        assert!(all.iter().all(|m| m.support() == g));
        // The gap at grade 3 makes the count a product over the components.
        let left = enumerate_orbits(&gd(&[(0, 2), (1, 3), (2, 2)]), DEFAULT_N_CAP).unwrap().len();
        let right = enumerate_orbits(&gd(&[(4, 1), (5, 1)]), DEFAULT_N_CAP).unwrap().len();
        assert_eq!(all.len(), left * right);
    }

    #[test]
    fn rank_examples() {
        let r = rank_invariants(&ms(&[(0, 2)]));
        assert_eq!((r.get(0, 2), r.get(0, 1), r.get(1, 2)), (1, 1, 1));
        let r = rank_invariants(&ms(&[(0, 1), (1, 2)]));
        assert_eq!((r.get(0, 2), r.get(0, 1), r.get(1, 2)), (0, 1, 1));
        assert_eq!(r.get(1, 1), 2);
        assert_eq!(rank_invariants(&ms(&[(0, 0), (1, 1)])).get(0, 1), 0);
    }

    #[test]
    fn explicit_matrix_products_for_linked_pair() {
        // {[0,1],[1,2]}: V_1 = span(e_[0,1], e_[1,2]); x_0 hits the first,
        // x_1 keeps the second, so the composite is zero.
        let m = ms(&[(0, 1), (1, 2)]);
        let rep = canonical_representative::<Q>(&m);
        assert_eq!(rep.composite(0, 1).rank(), 1);
        assert_eq!(rep.composite(1, 2).rank(), 1);
        assert_eq!(rep.composite(0, 2).rank(), 0);
    }

    #[test]
    fn matrices_to_multisegment() {
        let g = gd(&[(0, 1), (1, 1)]);
        let one = Matrix::<Q>::from_int_rows(&[vec![1]]).unwrap();
        let zero = Matrix::<Q>::from_int_rows(&[vec![0]]).unwrap();
        assert_eq!(multisegment_from_matrices(&g, &BTreeMap::from([(0, one)])).unwrap(), ms(&[(0, 1)]));
        assert_eq!(multisegment_from_matrices(&g, &BTreeMap::from([(0, zero)])).unwrap(), ms(&[(0, 0), (1, 1)]));

        // dims 1,2,1 with a generic pair of maps.
        let g = gd(&[(0, 1), (1, 2), (2, 1)]);
        let x0 = Matrix::<Q>::from_int_rows(&[vec![3], vec![-2]]).unwrap();
        let x1 = Matrix::<Q>::from_int_rows(&[vec![5, 7]]).unwrap();
        let m = multisegment_from_matrices(&g, &BTreeMap::from([(0, x0), (1, x1)])).unwrap();
        assert_eq!(m, ms(&[(0, 2), (1, 1)]));

        let bad = Matrix::<Q>::from_int_rows(&[vec![1, 1]]).unwrap();
        assert!(matches!(
            multisegment_from_matrices(&g, &BTreeMap::from([(0, bad)])),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn canonical_representative_roundtrip() {
        for g in [gd(&[(0, 2), (1, 2), (2, 1)]), gd(&[(-1, 1), (0, 2), (1, 2), (2, 1)])] {
            for m in enumerate_orbits(&g, DEFAULT_N_CAP).unwrap() {
                let rep = canonical_representative::<Q>(&m);
                assert_eq!(multisegment_from_matrices(&g, &rep.maps).unwrap(), m);
            }
        }
    }

    #[test]
    fn orbit_dimension_examples() {
        assert_eq!(orbit_dimension(&ms(&[(0, 1)])), 1);
        assert_eq!(orbit_dimension(&ms(&[(0, 0), (1, 1)])), 0);
        assert_eq!(orbit_dimension(&ms(&[(0, 2)])), 2);
        // The open orbit has the dimension of the whole space.
        let g = gd(&[(0, 2), (1, 3), (2, 2)]);
        let dims: Vec<usize> = enumerate_orbits(&g, DEFAULT_N_CAP).unwrap().iter().map(orbit_dimension).collect();
        assert_eq!(dims.iter().max(), Some(&g.vogan_dimension()));
    }

    #[test]
    fn closure_examples() {
        let zero = ms(&[(0, 0), (1, 1)]);
        let open = ms(&[(0, 1)]);
        assert!(closure_leq(&zero, &open).unwrap());
        assert!(!closure_leq(&open, &zero).unwrap());
        assert!(closure_leq(&open, &open).unwrap());
        assert!(matches!(closure_leq(&open, &ms(&[(0, 2)])), Err(Error::SupportMismatch)));
    }

    #[test]
    fn closure_is_a_partial_order_and_dimension_is_monotone() {
        let g = gd(&[(0, 1), (1, 2), (2, 2), (3, 1)]);
        let poset = OrbitPoset::of(&g, DEFAULT_N_CAP).unwrap();
        let n = poset.orbits.len();
        for a in 0..n {
            assert!(poset.leq[a][a]);
            for b in 0..n {
                if a != b && poset.leq[a][b] {
                    assert!(!poset.leq[b][a], "antisymmetry");
                    assert!(poset.dims[a] < poset.dims[b], "strict monotonicity");
                }
                for c in 0..n {
                    if poset.leq[a][b] && poset.leq[b][c] {
                        assert!(poset.leq[a][c], "transitivity");
                    }
                }
            }
        }
    }

    #[test]
    fn infchar_examples() {
        assert_eq!(infchar_of_multisegment::<Q>(&ms(&[(0, 1)])), vec![Q::from_int(1), Q::from_int(0)]);
        let v: Vec<Q> = infchar_of_multisegment(&ms(&[(0, 2), (1, 1)]));
        assert_eq!(v, [2, 1, 1, 0].map(Q::from_int).to_vec());
        let half: Vec<Q> = infchar_with_shift(&ms(&[(-1, 0)]), &Q::new(1, 2));
        assert_eq!(half, vec![Q::new(1, 2), Q::new(-1, 2)]);
    }

    #[test]
    fn components_by_class_and_gap() {
        let e: Vec<Q> = [Q::new(3, 2), Q::new(1, 2), Q::from_int(0), Q::from_int(2), Q::new(-1, 2)].to_vec();
        let comps = vogan_components(&e);
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0].offset, Q::from_int(0));
        assert_eq!(comps[2].offset, Q::new(1, 2));
        assert_eq!(comps[2].dims, gd(&[(-1, 1), (0, 1), (1, 1)]));
    }

    #[test]
    fn serde_shapes() {
        let m = ms(&[(1, 2), (0, 0)]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, "[[0,0],[1,2]]");
        assert_eq!(serde_json::from_str::<Multisegment>(&s).unwrap(), m);
        let g = gd(&[(0, 1), (1, 2)]);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"0":1,"1":2}"#);
        assert_eq!(serde_json::from_str::<GradedDims>(&s).unwrap(), g);
        assert!(serde_json::from_str::<Multisegment>("[[2,1]]").is_err());
    }
}
