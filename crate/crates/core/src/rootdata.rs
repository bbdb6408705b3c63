//! Based root data, exponent vectors in fundamental-weight coordinates, and
//! standard Levi subsets.
//!
//! Conventions: the Cartan matrix entry `a[i][j]` is `<alpha_j, alpha_i^vee>`.
//! A weight `v` is stored by its pairings with the simple coroots, so
//! `coords[i] = <v, alpha_i^vee>`, and the simple root `alpha_j` is the
//! `j`-th column of the Cartan matrix. Indices are 0-based internally and
//! 1-based in every user-facing format.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

/// Finite-type safety bound on the number of positive roots.
pub const MAX_POSITIVE_ROOTS: usize = 10_000;
const MAX_ROOT_COEFFICIENT: i64 = 1 << 20;

/// A positive root together with its coroot.
///
/// `root` holds the coefficients in the basis of simple roots, `coroot` the
/// coefficients of the coroot in the basis of simple coroots. Both are
/// nonnegative integer vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveRoot {
    pub root: Vec<i64>,
    pub coroot: Vec<i64>,
}

impl PositiveRoot {
    /// `<v, gamma^vee>`.
    pub fn pair<T: Scalar>(&self, v: &ExponentVector<T>) -> T {
        self.coroot
            .iter()
            .zip(v.coords())
            .filter(|(c, _)| **c != 0)
            .fold(T::zero(), |acc, (c, x)| acc + T::from_int(*c) * x.clone())
    }

    pub fn height(&self) -> i64 {
        self.root.iter().sum()
    }

    pub fn coroot_height(&self) -> i64 {
        self.coroot.iter().sum()
    }

    /// Indices of simple roots with a nonzero coefficient.
    pub fn support(&self) -> BTreeSet<usize> {
        self.root
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        self.height() == 1
    }
}

/// A validated based root datum with a diagram automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    label: String,
    cartan: Vec<Vec<i64>>,
    gamma: Vec<usize>,
    roots: Vec<PositiveRoot>,
}

impl RootDatum {
    /// Validate a Cartan matrix and diagram permutation (0-based) and
    /// enumerate the positive roots.
    pub fn new(cartan: Vec<Vec<i64>>, gamma: Vec<usize>, label: impl Into<String>) -> Result<Self> {
        let rank = cartan.len();
        if rank == 0 {
            return Err(Error::NotCartan("rank must be positive".into()));
        }
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::NotCartan(format!(
                    "row {} has length {}, expected {rank}",
                    i + 1,
                    row.len()
                )));
            }
        }
        for i in 0..rank {
            if cartan[i][i] != 2 {
                return Err(Error::NotCartan(format!("diagonal entry {} is not 2", i + 1)));
            }
            for j in 0..rank {
                if i == j {
                    continue;
                }
                if cartan[i][j] > 0 {
                    return Err(Error::NotCartan(format!(
                        "positive off-diagonal entry at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
                if (cartan[i][j] == 0) != (cartan[j][i] == 0) {
                    return Err(Error::NotCartan(format!(
                        "asymmetric zero pattern at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        if gamma.len() != rank {
            return Err(Error::LengthMismatch { expected: rank, got: gamma.len() });
        }
        let mut seen = vec![false; rank];
        for &g in &gamma {
            if g >= rank || seen[g] {
                return Err(Error::GammaNotAutomorphism("not a permutation".into()));
            }
            seen[g] = true;
        }
        for i in 0..rank {
            for j in 0..rank {
                if cartan[gamma[i]][gamma[j]] != cartan[i][j] {
                    return Err(Error::GammaNotAutomorphism(format!(
                        "entry ({}, {}) is not preserved",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let roots = enumerate_positive_roots(&cartan)?;
        Ok(Self { label: label.into(), cartan, gamma, roots })
    }

    /// A datum with trivial diagram action.
    pub fn split(cartan: Vec<Vec<i64>>, label: impl Into<String>) -> Result<Self> {
        let rank = cartan.len();
        Self::new(cartan, (0..rank).collect(), label)
    }

    /// Look up a built-in datum by label: `A1`..`A9`, `B2`.., `C2`.., `D4`..,
    /// `E6`, `E7`, `E8`, `F4`, `G2`, and the quasi-split forms `2A2`.., `2D4`..,
    /// `3D4`, `2E6` with their nontrivial diagram automorphism.
    pub fn named(label: &str) -> Result<Self> {
        let unknown = || Error::UnknownDatum(label.to_string());
        let trimmed = label.trim();
        let (twist, body) = match trimmed.as_bytes().first() {
            Some(b'2') => (2, &trimmed[1..]),
            Some(b'3') => (3, &trimmed[1..]),
            _ => (1, trimmed),
        };
        let mut chars = body.chars();
        let family = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
        let rank: usize = chars.as_str().trim_start_matches('_').parse().map_err(|_| unknown())?;
        let cartan = match (family, rank) {
            ('A', n) if n >= 1 => type_a(n),
            ('B', n) if n >= 2 => type_b(n),
            ('C', n) if n >= 2 => type_c(n),
            ('D', n) if n >= 4 => type_d(n),
            ('E', n) if (6..=8).contains(&n) => type_e(n),
            ('F', 4) => type_f4(),
            ('G', 2) => vec![vec![2, -1], vec![-3, 2]],
            _ => return Err(unknown()),
        };
        let gamma: Vec<usize> = match (twist, family, rank) {
            (1, _, n) => (0..n).collect(),
            (2, 'A', n) if n >= 2 => (0..n).rev().collect(),
            (2, 'D', n) => {
                let mut g: Vec<usize> = (0..n).collect();
                g.swap(n - 2, n - 1);
                g
            }
            // Bourbaki labels: 1 and 6 swap, 3 and 5 swap; 2 and 4 fixed.
            (2, 'E', 6) => vec![5, 1, 4, 3, 2, 0],
            // Triality on D4: 1 -> 3 -> 4 -> 1, node 2 central.
            (3, 'D', 4) => vec![2, 1, 3, 0],
            _ => return Err(unknown()),
        };
        Self::new(cartan, gamma, trimmed)
    }

    /// Labels of the registry used by the acceptance checks.
    pub fn registry_labels() -> &'static [&'static str] {
        &["A1", "A2", "A3", "A4", "A5", "B2", "B3", "C2", "C3", "D4", "G2", "F4"]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// The diagram permutation, 0-based.
    pub fn gamma(&self) -> &[usize] {
        &self.gamma
    }

    pub fn has_trivial_gamma(&self) -> bool {
        self.gamma.iter().enumerate().all(|(i, g)| i == *g)
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.roots
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank() })
        }
    }

    pub fn check_vector<T: Scalar>(&self, v: &ExponentVector<T>) -> Result<()> {
        if v.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: self.rank(), got: v.len() })
        }
    }

    pub fn check_subset(&self, m: &LeviSubset) -> Result<()> {
        match m.iter().find(|&i| i >= self.rank()) {
            Some(i) => Err(Error::IndexOutOfRange { index: i, rank: self.rank() }),
            None => Ok(()),
        }
    }

    /// The simple root `alpha_i` in fundamental-weight coordinates.
    pub fn simple_root<T: Scalar>(&self, i: usize) -> ExponentVector<T> {
        ExponentVector::new(self.cartan.iter().map(|row| T::from_int(row[i])).collect())
    }

    /// Fundamental-weight coordinates of the weight `sum_j c_j alpha_j`.
    pub fn root_to_weight<T: Scalar>(&self, coeffs: &[i64]) -> ExponentVector<T> {
        ExponentVector::new(
            self.cartan
                .iter()
                .map(|row| T::from_int(row.iter().zip(coeffs).map(|(a, c)| a * c).sum()))
                .collect(),
        )
    }

    /// Half the sum of the positive roots: every simple-coroot pairing is 1.
    pub fn rho<T: Scalar>(&self) -> ExponentVector<T> {
        ExponentVector::new(vec![T::one(); self.rank()])
    }

    /// Partition the positive roots into those supported on `m` and the
    /// roots of the nilradical of the standard parabolic with Levi `m`.
    pub fn levi_split(&self, m: &LeviSubset) -> (Vec<&PositiveRoot>, Vec<&PositiveRoot>) {
        self.roots.iter().partition(|r| r.support().iter().all(|i| m.contains(*i)))
    }

    pub fn nilradical_roots(&self, m: &LeviSubset) -> Vec<&PositiveRoot> {
        self.levi_split(m).1
    }

    /// Image of a positive root (simple-root coordinates) under the diagram
    /// automorphism.
    pub fn gamma_root(&self, root: &[i64]) -> Vec<i64> {
        let mut out = vec![0; root.len()];
        for (i, c) in root.iter().enumerate() {
            out[self.gamma[i]] = *c;
        }
        out
    }

    pub fn gamma_vector<T: Scalar>(&self, v: &ExponentVector<T>) -> ExponentVector<T> {
        let mut out = vec![T::zero(); v.len()];
        for (i, x) in v.coords().iter().enumerate() {
            out[self.gamma[i]] = x.clone();
        }
        ExponentVector::new(out)
    }
}

fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Result<Vec<PositiveRoot>> {
    let rank = cartan.len();
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut roots = Vec::new();
    let mut queue = VecDeque::new();
    for i in 0..rank {
        let mut e = vec![0; rank];
        e[i] = 1;
        index.insert(e.clone(), roots.len());
        roots.push(PositiveRoot { root: e.clone(), coroot: e });
        queue.push_back(i);
    }
    while let Some(k) = queue.pop_front() {
        for i in 0..rank {
            let PositiveRoot { root, coroot } = &roots[k];
            if root.iter().sum::<i64>() == 1 && root[i] == 1 {
                continue;
            }
            let p: i64 = (0..rank).map(|j| cartan[i][j] * root[j]).sum();
            if p == 0 {
                continue;
            }
            let q: i64 = (0..rank).map(|j| cartan[j][i] * coroot[j]).sum();
            let mut new_root = root.clone();
            new_root[i] -= p;
            let mut new_coroot = coroot.clone();
            new_coroot[i] -= q;
            if index.contains_key(&new_root) {
                continue;
            }
            // Root coefficients of finite root systems never exceed 6; a
            // runaway coefficient means an infinite root system.
            if roots.len() >= MAX_POSITIVE_ROOTS || new_root[i] > MAX_ROOT_COEFFICIENT {
                return Err(Error::NotFiniteType(MAX_POSITIVE_ROOTS));
            }
            index.insert(new_root.clone(), roots.len());
            roots.push(PositiveRoot { root: new_root, coroot: new_coroot });
            queue.push_back(roots.len() - 1);
        }
    }
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.root.cmp(&a.root)));
    Ok(roots)
}

fn chain(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        if i + 1 < n {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    a
}

fn type_a(n: usize) -> Vec<Vec<i64>> {
    chain(n)
}

fn type_b(n: usize) -> Vec<Vec<i64>> {
    let mut a = chain(n);
    a[n - 1][n - 2] = -2;
    a
}

fn type_c(n: usize) -> Vec<Vec<i64>> {
    let mut a = chain(n);
    a[n - 2][n - 1] = -2;
    a
}

fn type_d(n: usize) -> Vec<Vec<i64>> {
    let mut a = chain(n);
    a[n - 2][n - 1] = 0;
    a[n - 1][n - 2] = 0;
    a[n - 3][n - 1] = -1;
    a[n - 1][n - 3] = -1;
    a
}

fn type_e(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; n]; n];
    let mut edges = vec![(0, 2), (2, 3), (3, 4), (1, 3)];
    edges.extend((4..n - 1).map(|i| (i, i + 1)));
    for i in 0..n {
        a[i][i] = 2;
    }
    for (i, j) in edges {
        a[i][j] = -1;
        a[j][i] = -1;
    }
    a
}

fn type_f4() -> Vec<Vec<i64>> {
    let mut a = chain(4);
    a[2][1] = -2;
    a
}

/// A rational weight, stored by its pairings with the simple coroots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector<T> {
    coords: Vec<T>,
}

impl<T: Scalar> ExponentVector<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self { coords }
    }

    pub fn zeros(rank: usize) -> Self {
        Self::new(vec![T::zero(); rank])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|c| T::from_int(*c)).collect())
    }

    /// Parse `"p/q"` strings.
    pub fn parse(items: &[&str]) -> Result<Self> {
        items
            .iter()
            .map(|s| T::parse_str(s).ok_or_else(|| Error::Parse(format!("bad rational {s:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// `<v, alpha_i^vee>`.
    pub fn pairing(&self, i: usize) -> &T {
        &self.coords[i]
    }

    pub(crate) fn coord_mut(&mut self, i: usize) -> &mut T {
        &mut self.coords[i]
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() + b.clone()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() - b.clone()).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coords.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coords.iter().map(|a| -a.clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// All simple-coroot pairings are nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integral())
    }

    /// Indices with zero pairing.
    pub fn zero_set(&self) -> LeviSubset {
        LeviSubset::from_indices(
            self.coords.iter().enumerate().filter(|(_, c)| c.is_zero()).map(|(i, _)| i),
        )
    }

    /// Convert between scalar backends through the decimal string form.
    pub fn convert<U: Scalar>(&self) -> ExponentVector<U> {
        ExponentVector::new(
            self.coords
                .iter()
                .map(|c| U::parse_str(&c.to_string()).expect("rational string form is portable"))
                .collect(),
        )
    }
}

impl<T: Scalar> fmt::Display for ExponentVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<T: Scalar> Serialize for ExponentVector<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coords.iter().map(|c| c.to_string()))
    }
}

impl<'de, T: Scalar> Deserialize<'de> for ExponentVector<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<RationalRepr>::deserialize(d)?;
        raw.into_iter()
            .map(|r| r.parse::<T>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

/// Rationals are written as `"p/q"` strings; bare JSON integers are accepted
/// on input.
#[derive(Deserialize)]
#[serde(untagged)]
pub(crate) enum RationalRepr {
    Text(String),
    Int(i64),
}

impl RationalRepr {
    pub(crate) fn parse<T: Scalar>(self) -> std::result::Result<T, String> {
        match self {
            RationalRepr::Text(s) => T::parse_str(&s).ok_or_else(|| format!("bad rational {s:?}")),
            RationalRepr::Int(n) => Ok(T::from_int(n)),
        }
    }
}

/// A set of simple-root indices determining a standard Levi subgroup.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeviSubset {
    indices: BTreeSet<usize>,
}

impl LeviSubset {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn full(rank: usize) -> Self {
        Self::from_indices(0..rank)
    }

    pub fn from_indices(it: impl IntoIterator<Item = usize>) -> Self {
        Self { indices: it.into_iter().collect() }
    }

    /// From 1-based labels; rejects 0.
    pub fn from_one_based(labels: &[usize]) -> Result<Self> {
        labels
            .iter()
            .map(|&l| l.checked_sub(1).ok_or_else(|| Error::Parse("simple-root labels are 1-based".into())))
            .collect::<Result<BTreeSet<_>>>()
            .map(|indices| Self { indices })
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.indices.iter().map(|i| i + 1).collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.indices.is_subset(&other.indices)
    }

    pub fn union(&self, other: &Self) -> Self {
        Self { indices: self.indices.union(&other.indices).copied().collect() }
    }

    pub fn complement(&self, rank: usize) -> Self {
        Self::from_indices((0..rank).filter(|i| !self.contains(*i)))
    }

    pub fn is_gamma_stable(&self, d: &RootDatum) -> bool {
        self.indices.iter().all(|&i| self.contains(d.gamma()[i]))
    }

    /// Connected components of the Dynkin subdiagram on this subset.
    pub fn components(&self, d: &RootDatum) -> Vec<LeviSubset> {
        let mut left = self.indices.clone();
        let mut out = Vec::new();
        while let Some(&start) = left.iter().next() {
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                if !left.remove(&i) {
                    continue;
                }
                comp.insert(i);
                stack.extend(left.iter().copied().filter(|&j| d.cartan()[i][j] != 0));
            }
            out.push(LeviSubset { indices: comp });
        }
        out
    }
}

impl fmt::Display for LeviSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}
