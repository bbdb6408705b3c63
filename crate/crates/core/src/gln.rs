//! `GL_n` with tagged supercuspidal supports.
//!
//! A representation is recorded by the factors `sigma |.|^c` of its
//! supercuspidal support, each `sigma` an opaque tag of some degree. The
//! exponent on the dual `A_{n-1}` datum is read off by sorting the values `c`.

use crate::error::{Error, Result};
use crate::lparam::{self, ExponentParam, FppVerdict};
use crate::rootdata::{ExponentVector, LeviSubset, RootDatum};
use crate::scalar::{serde_rational, Scalar};
use crate::weyl;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// Largest `n` for the unitary-dual enumeration.
pub const TADIC_N_CAP: usize = 6;

/// An opaque supercuspidal: equal names mean isomorphic representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ScTag {
    pub name: String,
    pub degree: usize,
    #[serde(default = "default_unitary")]
    pub unitary: bool,
}

fn default_unitary() -> bool {
    true
}

impl ScTag {
    pub fn new(name: impl Into<String>, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParam("supercuspidal degree must be positive".into()));
        }
        Ok(Self { name: name.into(), degree, unitary: true })
    }

    /// The trivial character of `GL_1`.
    pub fn trivial() -> Self {
        Self { name: "1".into(), degree: 1, unitary: true }
    }
}

impl fmt::Display for ScTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct TaggedItem<T> {
    pub tag: ScTag,
    #[serde(with = "serde_rational")]
    pub c: T,
}

/// The supercuspidal support `sigma_1 |.|^{c_1} x ... x sigma_k |.|^{c_k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar", try_from = "Vec<TaggedItem<T>>", into = "Vec<TaggedItem<T>>")]
pub struct TaggedExponent<T: Scalar> {
    items: Vec<TaggedItem<T>>,
}

impl<T: Scalar> TaggedExponent<T> {
    pub fn new(items: Vec<(ScTag, T)>) -> Result<Self> {
        let items: Vec<TaggedItem<T>> = items.into_iter().map(|(tag, c)| TaggedItem { tag, c }).collect();
        Self::from_items(items)
    }

    fn from_items(items: Vec<TaggedItem<T>>) -> Result<Self> {
        for (i, a) in items.iter().enumerate() {
            if a.tag.degree == 0 {
                return Err(Error::InvalidParam(format!("tag {} has degree 0", a.tag)));
            }
            if let Some(b) = items[..i].iter().find(|b| b.tag.name == a.tag.name && b.tag != a.tag) {
                return Err(Error::InvalidParam(format!(
                    "tag {} used with degrees {} and {}",
                    a.tag, b.tag.degree, a.tag.degree
                )));
            }
        }
        Ok(Self { items })
    }

    /// All factors carry the trivial character of `GL_1`.
    pub fn unramified(values: &[T]) -> Self {
        Self { items: values.iter().map(|c| TaggedItem { tag: ScTag::trivial(), c: c.clone() }).collect() }
    }

    pub fn items(&self) -> &[TaggedItem<T>] {
        &self.items
    }

    /// `n = sum of the tag degrees`.
    pub fn degree(&self) -> usize {
        self.items.iter().map(|i| i.tag.degree).sum()
    }

    /// The values `c`, each repeated `degree(tag)` times, weakly decreasing.
    pub fn sorted_values(&self) -> Vec<T> {
        let mut v: Vec<T> = self
            .items
            .iter()
            .flat_map(|i| std::iter::repeat_n(i.c.clone(), i.tag.degree))
            .collect();
        v.sort_by(|a, b| b.cmp(a));
        v
    }
}

impl<T: Scalar> TryFrom<Vec<TaggedItem<T>>> for TaggedExponent<T> {
    type Error = String;
    fn try_from(items: Vec<TaggedItem<T>>) -> std::result::Result<Self, String> {
        Self::from_items(items).map_err(|e| e.to_string())
    }
}

impl<T: Scalar> From<TaggedExponent<T>> for Vec<TaggedItem<T>> {
    fn from(e: TaggedExponent<T>) -> Self {
        e.items
    }
}

impl<T: Scalar> fmt::Display for TaggedExponent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.items.iter().map(|i| format!("{}|.|^{}", i.tag, i.c)).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Irreducible unless two factors with the same tag have exponents differing
/// by exactly 1.
pub fn irreducible_induction<T: Scalar>(e: &TaggedExponent<T>) -> bool {
    let one = T::one();
    let items = e.items();
    !items.iter().enumerate().any(|(i, a)| {
        items[i + 1..].iter().any(|b| a.tag == b.tag && (a.c.clone() - b.c.clone()).abs() == one)
    })
}

/// The tagged multiset is stable under `c -> -c`.
pub fn hermitian_test<T: Scalar>(e: &TaggedExponent<T>) -> bool {
    let mut plus: Vec<(ScTag, T)> = e.items().iter().map(|i| (i.tag.clone(), i.c.clone())).collect();
    let mut minus: Vec<(ScTag, T)> = e.items().iter().map(|i| (i.tag.clone(), -i.c.clone())).collect();
    plus.sort();
    minus.sort();
    plus == minus
}

/// Dual `A_{n-1}` datum; `None` for `n <= 1`, where there are no roots.
pub fn gl_dual_datum(n: usize) -> Result<Option<RootDatum>> {
    if n <= 1 {
        return Ok(None);
    }
    RootDatum::named(&format!("A{}", n - 1)).map(Some)
}

/// Consecutive differences of weakly decreasing values: the coordinates on
/// the fundamental weights of `A_{n-1}`.
pub fn coords_of_sorted<T: Scalar>(sorted: &[T]) -> ExponentVector<T> {
    ExponentVector::new(sorted.windows(2).map(|w| w[0].clone() - w[1].clone()).collect())
}

pub fn langlands_exponent<T: Scalar>(e: &TaggedExponent<T>) -> ExponentVector<T> {
    coords_of_sorted(&e.sorted_values())
}

/// The parallelepiped test for `GL_n` on a multiset of exponents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct GlVerdict<T: Scalar> {
    pub n: usize,
    #[serde(with = "serde_rational::vec")]
    pub values: Vec<T>,
    pub coords: ExponentVector<T>,
    pub in_fpp: bool,
    /// 1-based simple coroots with pairing above 1.
    pub violated: Vec<usize>,
    /// 1-based simple coroots with pairing exactly 1.
    pub boundary: Vec<usize>,
    #[serde(with = "serde_rational::option")]
    pub max_pairing: Option<T>,
}

impl<T: Scalar> GlVerdict<T> {
    pub fn saturated(&self) -> bool {
        self.max_pairing.as_ref() == Some(&T::one())
    }
}

/// Sort `values` and run the test on `A_{n-1}`; vacuous for `n <= 1`.
pub fn gl_fpp<T: Scalar>(values: &[T]) -> Result<GlVerdict<T>> {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    let coords = coords_of_sorted(&sorted);
    let verdict = match gl_dual_datum(sorted.len())? {
        Some(d) => lparam::fpp_check_vector(&d, &coords)?,
        None => FppVerdict {
            in_fpp: true,
            violated: LeviSubset::empty(),
            boundary: LeviSubset::empty(),
            pairings: Vec::new(),
        },
    };
    Ok(GlVerdict {
        n: sorted.len(),
        max_pairing: verdict.max_pairing().cloned(),
        values: sorted,
        coords,
        in_fpp: verdict.in_fpp,
        violated: verdict.violated.to_one_based(),
        boundary: verdict.boundary.to_one_based(),
    })
}

/// A `GL_m` factor of the unramified group: one tag with multiplicity `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct GlFactor<T: Scalar> {
    pub tag: ScTag,
    pub m: usize,
    #[serde(with = "serde_rational::vec")]
    pub exponents: Vec<T>,
}

/// Group the factors by tag, in order of first appearance; each tag of
/// multiplicity `m` gives a `GL_m` carrying its exponents, weakly decreasing.
pub fn unramify<T: Scalar>(e: &TaggedExponent<T>) -> (Vec<GlFactor<T>>, String) {
    let mut factors: Vec<GlFactor<T>> = Vec::new();
    for item in e.items() {
        match factors.iter_mut().find(|f| f.tag == item.tag) {
            Some(f) => {
                f.m += 1;
                f.exponents.push(item.c.clone());
            }
            None => factors.push(GlFactor { tag: item.tag.clone(), m: 1, exponents: vec![item.c.clone()] }),
        }
    }
    for f in &mut factors {
        f.exponents.sort_by(|a, b| b.cmp(a));
    }
    let label = factors.iter().map(|f| format!("GL_{}", f.m)).collect::<Vec<_>>().join(" x ");
    (factors, label)
}

/// The test applied to every factor of the unramified group.
pub fn reduced_fpp<T: Scalar>(factors: &[GlFactor<T>]) -> Result<Vec<GlVerdict<T>>> {
    factors.iter().map(|f| gl_fpp(&f.exponents)).collect()
}

/// `u(delta, m)`, twisted by `|.|^{+alpha} x |.|^{-alpha}` when `alpha > 0`,
/// where `delta` is the Steinberg of `GL_l` on the tag.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct UnitaryBlock<T: Scalar> {
    pub tag: ScTag,
    pub speh: usize,
    pub segment: usize,
    #[serde(with = "serde_rational")]
    pub alpha: T,
}

impl<T: Scalar> UnitaryBlock<T> {
    /// `(l-1)/2 - j + (m-1)/2 - k`, shifted by `+-alpha` for a pair.
    pub fn values(&self) -> Vec<T> {
        let (l, m) = (self.segment as i64, self.speh as i64);
        let mut out = Vec::new();
        for j in 0..l {
            for k in 0..m {
                let v = T::ratio(l - 1 - 2 * j + m - 1 - 2 * k, 2);
                if self.alpha.is_zero() {
                    out.push(v);
                } else {
                    out.push(v.clone() + self.alpha.clone());
                    out.push(v - self.alpha.clone());
                }
            }
        }
        out
    }

    pub fn degree(&self) -> usize {
        let pair = if self.alpha.is_zero() { 1 } else { 2 };
        self.segment * self.speh * self.tag.degree * pair
    }
}

impl<T: Scalar> fmt::Display for UnitaryBlock<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.segment == 1 {
            write!(f, "u({},{})", self.tag, self.speh)?;
        } else {
            write!(f, "u(St{}[{}],{})", self.segment, self.tag, self.speh)?;
        }
        if !self.alpha.is_zero() {
            write!(f, "[+-{}]", self.alpha)?;
        }
        Ok(())
    }
}

/// A product of unitary blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct UnitaryPoint<T: Scalar> {
    pub blocks: Vec<UnitaryBlock<T>>,
}

impl<T: Scalar> UnitaryPoint<T> {
    pub fn degree(&self) -> usize {
        self.blocks.iter().map(UnitaryBlock::degree).sum()
    }

    pub fn tagged(&self) -> TaggedExponent<T> {
        TaggedExponent {
            items: self
                .blocks
                .iter()
                .flat_map(|b| b.values().into_iter().map(move |c| TaggedItem { tag: b.tag.clone(), c }))
                .collect(),
        }
    }
}

impl<T: Scalar> fmt::Display for UnitaryPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

fn check_grid<T: Scalar>(grid: &[T]) -> Result<Vec<T>> {
    let half = T::half();
    if let Some(bad) = grid.iter().find(|a| a.is_negative() || **a >= half) {
        return Err(Error::BadGrid(bad.to_string()));
    }
    Ok(grid.iter().filter(|a| !a.is_zero()).cloned().collect::<BTreeSet<T>>().into_iter().collect())
}

/// Unramified unitary points of `GL_n`: products of Speh blocks and
/// complementary pairs with `alpha` from `grid`.
pub fn tadic_enumerate<T: Scalar>(n: usize, grid: &[T]) -> Result<Vec<UnitaryPoint<T>>> {
    if n == 0 {
        return Err(Error::InvalidParam("n must be positive".into()));
    }
    if n > TADIC_N_CAP {
        return Err(Error::TooLarge { what: "n", got: n, cap: TADIC_N_CAP });
    }
    let alphas = check_grid(grid)?;
    let tag = ScTag::trivial();
    let mut kinds: Vec<UnitaryBlock<T>> = Vec::new();
    for segment in 1..=n {
        for speh in 1..=n / segment {
            for alpha in std::iter::once(T::zero()).chain(alphas.iter().cloned()) {
                let b = UnitaryBlock { tag: tag.clone(), speh, segment, alpha };
                if b.degree() <= n {
                    kinds.push(b);
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    choose_blocks(&kinds, 0, n, &mut current, &mut out);
    Ok(out)
}

fn choose_blocks<T: Scalar>(
    kinds: &[UnitaryBlock<T>],
    start: usize,
    remaining: usize,
    current: &mut Vec<UnitaryBlock<T>>,
    out: &mut Vec<UnitaryPoint<T>>,
) {
    if remaining == 0 {
        out.push(UnitaryPoint { blocks: current.clone() });
        return;
    }
    for (k, b) in kinds.iter().enumerate().skip(start) {
        if b.degree() <= remaining {
            current.push(b.clone());
            choose_blocks(kinds, k, remaining - b.degree(), current, out);
            current.pop();
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct ScanEntry<T: Scalar> {
    pub point: UnitaryPoint<T>,
    pub label: String,
    pub verdict: GlVerdict<T>,
    pub saturated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct FppScanReport<T: Scalar> {
    pub n: usize,
    #[serde(with = "serde_rational::vec")]
    pub grid: Vec<T>,
    pub entries: Vec<ScanEntry<T>>,
    pub violations: usize,
    pub saturating: usize,
}

impl<T: Scalar> FppScanReport<T> {
    pub fn all_pass(&self) -> bool {
        self.violations == 0
    }
}

pub fn fpp_scan<T: Scalar>(n: usize, grid: &[T]) -> Result<FppScanReport<T>> {
    let points = tadic_enumerate(n, grid)?;
    let mut entries = Vec::with_capacity(points.len());
    for point in points {
        let verdict = gl_fpp(&point.tagged().sorted_values())?;
        entries.push(ScanEntry { label: point.to_string(), saturated: verdict.saturated(), point, verdict });
    }
    Ok(FppScanReport {
        n,
        grid: grid.to_vec(),
        violations: entries.iter().filter(|e| !e.verdict.in_fpp).count(),
        saturating: entries.iter().filter(|e| e.saturated).count(),
        entries,
    })
}

/// Summary of a non-unitarity certificate on the ambient group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateSummary {
    pub violated: Vec<usize>,
    pub m_leq1: Vec<usize>,
    pub witness: Vec<usize>,
    pub family: String,
    pub assumptions: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct Example41Report<T: Scalar> {
    #[serde(with = "serde_rational")]
    pub b: T,
    pub d: usize,
    pub exponent: TaggedExponent<T>,
    pub hermitian: bool,
    pub irreducible: bool,
    pub ambient: GlVerdict<T>,
    pub unramified_label: String,
    pub factors: Vec<GlFactor<T>>,
    pub reduced: Vec<GlVerdict<T>>,
    pub reduced_in_fpp: bool,
    pub non_unitary: bool,
    pub non_unitary_reason: Option<String>,
    pub certificate: Option<CertificateSummary>,
}

/// `rho x tau|.|^b x tau|.|^{-b}` for non-isomorphic unitary supercuspidals
/// `rho`, `tau` of `GL_d`.
pub fn example_4_1_exponent<T: Scalar>(b: &T, d: usize) -> Result<TaggedExponent<T>> {
    let rho = ScTag::new("rho", d)?;
    let tau = ScTag::new("tau", d)?;
    TaggedExponent::new(vec![(rho, T::zero()), (tau.clone(), b.clone()), (tau, -b.clone())])
}

pub fn example_4_1<T: Scalar>(b: &T, d: usize) -> Result<Example41Report<T>> {
    if b.is_negative() {
        return Err(Error::InvalidParam("b must be non-negative".into()));
    }
    let e = example_4_1_exponent(b, d)?;
    let ambient = gl_fpp(&e.sorted_values())?;
    let (factors, unramified_label) = unramify(&e);
    let reduced = reduced_fpp(&factors)?;
    let reduced_in_fpp = reduced.iter().all(|v| v.in_fpp);
    let hermitian = hermitian_test(&e);
    let irreducible = irreducible_induction(&e);
    // Above 1/2 the point lies on the irreducible Hermitian family b -> infinity
    // of inductions, whose exponents leave every bounded region.
    let non_unitary = *b > T::half();
    let non_unitary_reason = non_unitary.then(|| {
        format!(
            "b = {b} lies on the unbounded family of irreducible Hermitian inductions with b in (1/2, oo); \
             unitarity is lost after the reducibility point b = 1/2"
        )
    });
    let certificate = if ambient.in_fpp { None } else { Some(ambient_certificate(b, d)?) };
    Ok(Example41Report {
        b: b.clone(),
        d,
        exponent: e,
        hermitian,
        irreducible,
        ambient,
        unramified_label,
        factors,
        reduced,
        reduced_in_fpp,
        non_unitary,
        non_unitary_reason,
        certificate,
    })
}

/// On `A_{3d-1}` the exponent is `b` at the junctions `d` and `2d`, zero
/// elsewhere, with tempered Levi the complement of the junctions. The longest
/// element negates it and preserves the Levi, so no Weyl search is needed.
fn ambient_certificate<T: Scalar>(b: &T, d: usize) -> Result<CertificateSummary> {
    let n = 3 * d;
    let datum = gl_dual_datum(n)?.expect("n >= 3");
    let junctions = [d - 1, 2 * d - 1];
    let levi = LeviSubset::from_indices((0..n - 1).filter(|i| !junctions.contains(i)));
    let nu = ExponentVector::new(
        (0..n - 1).map(|i| if junctions.contains(&i) { b.clone() } else { T::zero() }).collect(),
    );
    let p = ExponentParam::without_sl2(&datum, levi, nu, "supercuspidal on each GL_d")?;
    let cert = lparam::certificate_with_witness(&datum, &p, weyl::longest_element(&datum))?;
    Ok(CertificateSummary {
        violated: cert.violated.to_one_based(),
        m_leq1: cert.m_leq1.to_one_based(),
        witness: cert.witness.word_one_based(),
        family: cert.family.description(),
        assumptions: cert.assumptions.clone(),
    })
}
