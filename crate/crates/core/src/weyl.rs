//! Weyl-group machinery over a root datum: simple reflections, dominance,
//! orbits, exhaustive group enumeration and the Hermitian witness search.

use crate::error::{Error, Result};
use crate::rootdata::{ExponentVector, LeviSubset, RootDatum};
use crate::scalar::Scalar;
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

/// Largest rank for which the whole Weyl group is enumerated.
pub const DEFAULT_RANK_CAP: usize = 6;
/// Default cap on the size of an explicitly enumerated orbit.
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// `s_i(v) = v - <v, alpha_i^vee> alpha_i`.
pub fn reflect<T: Scalar>(d: &RootDatum, i: usize, v: &ExponentVector<T>) -> Result<ExponentVector<T>> {
    d.check_index(i)?;
    d.check_vector(v)?;
    let mut out = v.clone();
    reflect_in_place(d, i, &mut out);
    Ok(out)
}

fn reflect_in_place<T: Scalar>(d: &RootDatum, i: usize, v: &mut ExponentVector<T>) {
    let c = v.pairing(i).clone();
    if c.is_zero() {
        return;
    }
    for (k, row) in d.cartan().iter().enumerate() {
        if row[i] != 0 {
            let x = v.coord_mut(k);
            *x = x.clone() - c.clone() * T::from_int(row[i]);
        }
    }
}

/// Simple reflection on a root given in simple-root coordinates.
fn reflect_root(d: &RootDatum, i: usize, root: &mut [i64]) {
    let p: i64 = d.cartan()[i].iter().zip(root.iter()).map(|(a, c)| a * c).sum();
    root[i] -= p;
}

/// An element of the Weyl group.
///
/// The word lists simple reflections in the order they are applied, so the
/// word `[i, j]` sends `v` to `s_j(s_i(v))`. Equality and hashing go through
/// the action on the fundamental weights, never through the word.
#[derive(Clone, Debug)]
pub struct WeylElement {
    word: Vec<usize>,
    /// Column `k` is the image of the `k`-th fundamental weight.
    weight_action: Vec<Vec<i64>>,
    /// Column `j` is the image of `alpha_j`, in simple-root coordinates.
    root_action: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn identity(d: &RootDatum) -> Self {
        let n = d.rank();
        let id: Vec<Vec<i64>> = (0..n).map(|k| (0..n).map(|j| i64::from(j == k)).collect()).collect();
        Self { word: Vec::new(), weight_action: id.clone(), root_action: id }
    }

    pub fn from_word(d: &RootDatum, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(d);
        for &i in word {
            d.check_index(i)?;
            w = w.then_reflect(d, i);
        }
        Ok(w)
    }

    /// `s_i * self`: apply `self`, then `s_i`.
    pub fn then_reflect(&self, d: &RootDatum, i: usize) -> Self {
        let mut word = self.word.clone();
        word.push(i);
        let weight_action = self
            .weight_action
            .iter()
            .map(|col| {
                let mut v = col.clone();
                let c = v[i];
                if c != 0 {
                    for (k, row) in d.cartan().iter().enumerate() {
                        v[k] -= c * row[i];
                    }
                }
                v
            })
            .collect();
        let root_action = self
            .root_action
            .iter()
            .map(|col| {
                let mut r = col.clone();
                reflect_root(d, i, &mut r);
                r
            })
            .collect();
        Self { word, weight_action, root_action }
    }

    /// The element that applies `self` first and then `other`.
    pub fn then(&self, d: &RootDatum, other: &WeylElement) -> Self {
        other.word.iter().fold(self.clone(), |w, &i| w.then_reflect(d, i))
    }

    pub fn inverse(&self, d: &RootDatum) -> Self {
        let rev: Vec<usize> = self.word.iter().rev().copied().collect();
        Self::from_word(d, &rev).expect("indices already validated")
    }

    /// 0-based simple-reflection indices in application order.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn word_one_based(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }

    pub fn apply<T: Scalar>(&self, v: &ExponentVector<T>) -> ExponentVector<T> {
        let n = v.len();
        let mut out = vec![T::zero(); n];
        for (k, col) in self.weight_action.iter().enumerate() {
            let c = v.pairing(k);
            if c.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(col) {
                if *a != 0 {
                    *o = o.clone() + c.clone() * T::from_int(*a);
                }
            }
        }
        ExponentVector::new(out)
    }

    /// Image of a root given by its simple-root coefficients.
    pub fn apply_root(&self, root: &[i64]) -> Vec<i64> {
        let n = root.len();
        let mut out = vec![0; n];
        for (j, col) in self.root_action.iter().enumerate() {
            if root[j] != 0 {
                for (o, a) in out.iter_mut().zip(col) {
                    *o += root[j] * a;
                }
            }
        }
        out
    }

    /// Whether `self` maps the root system of the standard Levi `m` onto
    /// itself (signs allowed).
    pub fn normalizes(&self, m: &LeviSubset) -> bool {
        m.iter().all(|j| {
            self.root_action[j]
                .iter()
                .enumerate()
                .all(|(k, c)| *c == 0 || m.contains(k))
        })
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.weight_action == other.weight_action
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.weight_action.hash(state);
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.word.iter().map(|i| format!("s{}", i + 1)).collect();
        write!(f, "{}", parts.join("."))
    }
}

/// Move `v` into the dominant chamber by simple reflections, returning the
/// dominant representative and a word sending `v` to it.
pub fn make_dominant<T: Scalar>(
    d: &RootDatum,
    v: &ExponentVector<T>,
) -> Result<(ExponentVector<T>, WeylElement)> {
    d.check_vector(v)?;
    let mut cur = v.clone();
    let mut w = WeylElement::identity(d);
    while let Some(i) = cur.coords().iter().position(|c| c.is_negative()) {
        reflect_in_place(d, i, &mut cur);
        w = w.then_reflect(d, i);
    }
    Ok((cur, w))
}

/// Restricted to the reflections of a standard Levi: the `m`-dominant
/// representative of `v` under `W_M`.
pub fn make_levi_dominant<T: Scalar>(
    d: &RootDatum,
    m: &LeviSubset,
    v: &ExponentVector<T>,
) -> Result<(ExponentVector<T>, WeylElement)> {
    d.check_vector(v)?;
    d.check_subset(m)?;
    let mut cur = v.clone();
    let mut w = WeylElement::identity(d);
    while let Some(i) = m.iter().find(|&i| cur.pairing(i).is_negative()) {
        reflect_in_place(d, i, &mut cur);
        w = w.then_reflect(d, i);
    }
    Ok((cur, w))
}

/// The full orbit `W.v`, by breadth-first search over simple reflections.
pub fn weyl_orbit<T: Scalar>(
    d: &RootDatum,
    v: &ExponentVector<T>,
    cap: usize,
) -> Result<BTreeSet<ExponentVector<T>>> {
    d.check_vector(v)?;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(v.clone());
    queue.push_back(v.clone());
    while let Some(x) = queue.pop_front() {
        for i in 0..d.rank() {
            if x.pairing(i).is_zero() {
                continue;
            }
            let mut y = x.clone();
            reflect_in_place(d, i, &mut y);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::OrbitTooLarge(cap));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// All elements of the Weyl group, in nondecreasing word length.
///
/// Elements are found as the orbit of the regular weight `rho`, whose
/// stabilizer is trivial.
pub fn weyl_group_elements(d: &RootDatum, rank_cap: usize) -> Result<Vec<WeylElement>> {
    if d.rank() > rank_cap {
        return Err(Error::RankTooLarge { rank: d.rank(), cap: rank_cap });
    }
    let rho: Vec<i64> = vec![1; d.rank()];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([rho]);
    let mut out = vec![WeylElement::identity(d)];
    let mut k = 0;
    while k < out.len() {
        for i in 0..d.rank() {
            let w = out[k].then_reflect(d, i);
            let img: Vec<i64> = (0..d.rank())
                .map(|r| w.weight_action.iter().map(|col| col[r]).sum())
                .collect();
            if seen.insert(img) {
                out.push(w);
            }
        }
        k += 1;
    }
    Ok(out)
}

/// Search for `w` with `w(R(M)) = R(M)` and `w(v) = -v`.
///
/// Returns a shortest such element. Only the exponent conditions are tested;
/// compatibility of `w` with the tempered datum is outside this model.
pub fn hermitian_witness<T: Scalar>(
    d: &RootDatum,
    m: &LeviSubset,
    v: &ExponentVector<T>,
) -> Result<Option<WeylElement>> {
    hermitian_witness_capped(d, m, v, DEFAULT_RANK_CAP)
}

pub fn hermitian_witness_capped<T: Scalar>(
    d: &RootDatum,
    m: &LeviSubset,
    v: &ExponentVector<T>,
    rank_cap: usize,
) -> Result<Option<WeylElement>> {
    Ok(hermitian_witnesses(d, m, v, rank_cap)?.into_iter().next())
}

/// Every Hermitian witness for `(m, v)`, shortest first.
pub fn hermitian_witnesses<T: Scalar>(
    d: &RootDatum,
    m: &LeviSubset,
    v: &ExponentVector<T>,
    rank_cap: usize,
) -> Result<Vec<WeylElement>> {
    d.check_vector(v)?;
    d.check_subset(m)?;
    // -v must be W-conjugate to v; check on dominant representatives first.
    let (dom, _) = make_dominant(d, v)?;
    let (neg_dom, _) = make_dominant(d, &v.neg())?;
    if dom != neg_dom {
        return Ok(Vec::new());
    }
    let target = v.neg();
    Ok(weyl_group_elements(d, rank_cap)?
        .into_iter()
        .filter(|w| w.normalizes(m) && w.apply(v) == target)
        .collect())
}

/// The longest element, as the element sending `rho` to `-rho`.
pub fn longest_element(d: &RootDatum) -> WeylElement {
    let (_, w) = make_dominant(d, &d.rho::<crate::Q>().neg()).expect("rho has datum rank");
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn named(l: &str) -> RootDatum {
        RootDatum::named(l).unwrap()
    }

    fn v(c: &[i64]) -> ExponentVector<Q> {
        ExponentVector::from_ints(c)
    }

    #[test]
    fn reflect_examples() {
        let a2 = named("A2");
        assert_eq!(reflect(&a2, 0, &v(&[1, 0])).unwrap(), v(&[-1, 1]));
        assert_eq!(reflect(&a2, 1, &v(&[0, 1])).unwrap(), v(&[1, -1]));
        let a1 = named("A1");
        let c = ExponentVector::new(vec![Q::new(7, 3)]);
        assert_eq!(reflect(&a1, 0, &c).unwrap(), c.neg());
        assert!(matches!(reflect(&a2, 2, &v(&[0, 0])), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn reflections_are_involutions() {
        for label in ["A3", "B3", "G2", "F4"] {
            let d = named(label);
            let x = ExponentVector::new((0..d.rank()).map(|k| Q::new(2 * k as i64 - 3, 5)).collect());
            for i in 0..d.rank() {
                let y = reflect(&d, i, &x).unwrap();
                assert_eq!(reflect(&d, i, &y).unwrap(), x);
            }
        }
    }

    #[test]
    fn make_dominant_examples() {
        let a2 = named("A2");
        let (dom, w) = make_dominant(&a2, &v(&[-1, 0])).unwrap();
        assert_eq!(dom, v(&[0, 1]));
        assert_eq!(w.word(), &[0, 1]);
        assert_eq!(w.apply(&v(&[-1, 0])), dom);

        let (dom, w) = make_dominant(&a2, &a2.rho::<Q>()).unwrap();
        assert_eq!(dom, a2.rho::<Q>());
        assert!(w.word().is_empty());

        let a1 = named("A1");
        let (dom, w) = make_dominant(&a1, &v(&[-3])).unwrap();
        assert_eq!(dom, v(&[3]));
        assert_eq!(w.word(), &[0]);
    }

    #[test]
    fn make_dominant_agrees_with_orbit_search() {
        let a2 = named("A2");
        let x = v(&[-1, 0]);
        let orbit = weyl_orbit(&a2, &x, DEFAULT_ORBIT_CAP).unwrap();
        let dominant: Vec<_> = orbit.iter().filter(|y| y.is_dominant()).collect();
        assert_eq!(dominant, vec![&v(&[0, 1])]);
    }

    #[test]
    fn orbit_sizes() {
        let a2 = named("A2");
        assert_eq!(weyl_orbit(&a2, &v(&[1, 1]), DEFAULT_ORBIT_CAP).unwrap().len(), 6);
        assert_eq!(weyl_orbit(&a2, &v(&[1, 0]), DEFAULT_ORBIT_CAP).unwrap().len(), 3);
        for label in ["A1", "B3", "G2"] {
            let d = named(label);
            let z = ExponentVector::<Q>::zeros(d.rank());
            assert_eq!(weyl_orbit(&d, &z, DEFAULT_ORBIT_CAP).unwrap().len(), 1);
        }
        assert!(matches!(
            weyl_orbit(&named("B3"), &v(&[1, 1, 1]), 10),
            Err(Error::OrbitTooLarge(10))
        ));
    }

    #[test]
    fn group_orders() {
        let expected = [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("B3", 48), ("C3", 48), ("G2", 12), ("D4", 192), ("F4", 1152)];
        for (label, order) in expected {
            let d = named(label);
            let els = weyl_group_elements(&d, DEFAULT_RANK_CAP).unwrap();
            assert_eq!(els.len(), order, "{label}");
            // Orbit of a regular weight has |W| points.
            let rho = d.rho::<Q>();
            assert_eq!(weyl_orbit(&d, &rho, DEFAULT_ORBIT_CAP).unwrap().len(), order);
            let distinct: std::collections::HashSet<_> = els.iter().collect();
            assert_eq!(distinct.len(), order);
        }
        assert!(matches!(
            weyl_group_elements(&named("E7"), DEFAULT_RANK_CAP),
            Err(Error::RankTooLarge { .. })
        ));
    }

    #[test]
    fn equality_is_by_action() {
        let a2 = named("A2");
        let braid_left = WeylElement::from_word(&a2, &[0, 1, 0]).unwrap();
        let braid_right = WeylElement::from_word(&a2, &[1, 0, 1]).unwrap();
        assert_eq!(braid_left, braid_right);
        let sq = WeylElement::from_word(&a2, &[0, 0]).unwrap();
        assert_eq!(sq, WeylElement::identity(&a2));
        assert_ne!(WeylElement::from_word(&a2, &[0, 1]).unwrap(), WeylElement::from_word(&a2, &[1, 0]).unwrap());
    }

    #[test]
    fn composition_and_inverse() {
        let b3 = named("B3");
        let w = WeylElement::from_word(&b3, &[0, 1, 2, 1]).unwrap();
        let x = ExponentVector::new(vec![Q::new(1, 2), Q::from_int(-2), Q::new(5, 3)]);
        assert_eq!(w.inverse(&b3).apply(&w.apply(&x)), x);
        let u = WeylElement::from_word(&b3, &[2, 0]).unwrap();
        assert_eq!(w.then(&b3, &u).apply(&x), u.apply(&w.apply(&x)));
    }

    #[test]
    fn root_action_matches_weight_action() {
        let f4 = named("F4");
        let w = WeylElement::from_word(&f4, &[0, 2, 1, 3, 2, 1]).unwrap();
        for r in f4.positive_roots() {
            let img = w.apply_root(&r.root);
            assert_eq!(f4.root_to_weight::<Q>(&img), w.apply(&f4.root_to_weight::<Q>(&r.root)));
        }
    }

    #[test]
    fn longest_element_is_minus_opposition() {
        let a2 = named("A2");
        let w0 = longest_element(&a2);
        assert_eq!(w0.word().len(), 3);
        assert_eq!(w0.apply(&v(&[1, 2])), v(&[-2, -1]));
        let b3 = named("B3");
        assert_eq!(longest_element(&b3).apply(&v(&[1, 2, 3])), v(&[-1, -2, -3]));
    }

    #[test]
    fn hermitian_witness_examples() {
        let a1 = named("A1");
        let w = hermitian_witness(&a1, &LeviSubset::empty(), &v(&[2])).unwrap().unwrap();
        assert_eq!(w.word(), &[0]);

        let a2 = named("A2");
        assert!(hermitian_witness(&a2, &LeviSubset::empty(), &v(&[1, 2])).unwrap().is_none());
        let w = hermitian_witness(&a2, &LeviSubset::empty(), &v(&[1, 1])).unwrap().unwrap();
        assert_eq!(w, longest_element(&a2));
    }

    #[test]
    fn hermitian_witness_matches_exhaustive_search_a2() {
        // Oracle: brute force over the six words of W(A2), no early rejection.
        let a2 = named("A2");
        let words: [&[usize]; 6] = [&[], &[0], &[1], &[0, 1], &[1, 0], &[0, 1, 0]];
        for (a, b) in [(1, 2), (1, 1), (3, 3), (0, 2), (2, 0), (3, 1)] {
            let x = v(&[a, b]);
            let brute = words
                .iter()
                .map(|w| WeylElement::from_word(&a2, w).unwrap())
                .any(|w| w.apply(&x) == x.neg());
            let m = x.zero_set();
            let found = hermitian_witness(&a2, &m, &x).unwrap();
            assert_eq!(found.is_some(), brute, "({a},{b})");
        }
    }

    #[test]
    fn witness_respects_levi() {
        // A3 with M = {2}: v = (1, 0, 1) is fixed by s2; w0 maps {2} to itself.
        let a3 = named("A3");
        let m = LeviSubset::from_indices([1]);
        let x = v(&[1, 0, 1]);
        let w = hermitian_witness(&a3, &m, &x).unwrap().unwrap();
        assert!(w.normalizes(&m));
        assert_eq!(w.apply(&x), x.neg());
        // M = {1}: v = (0, 1, 2) is not flip-symmetric, no witness.
        assert!(hermitian_witness(&a3, &LeviSubset::from_indices([0]), &v(&[0, 1, 2])).unwrap().is_none());
    }
}
