//! Exponent-level Langlands parameters.
//!
//! A parameter is recorded by its standard-triple shadow: the standard Levi
//! `M`, the exponent `nu` (zero on `M`, positive off it) and the neutral
//! element `h` of the `sl_2`-triple of the tempered part. From this the
//! module computes the infinitesimal-character exponent `nu_lambda`, decides
//! the parallelepiped condition, builds the Levi `M_{<=1}`, and assembles
//! non-unitarity certificates from a Hermitian witness and the deformation
//! family `s -> nu_s`.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rootdata::{ExponentVector, LeviSubset, RootDatum};
use crate::scalar::Scalar;
use crate::weyl::{self, WeylElement};
use std::fmt;

pub const ASSUMPTION_LLC: &str = "LLC satisfying LC and KL exists";
pub const ASSUMPTION_TEMPERED: &str = "pi_t^w is isomorphic to pi_t for the tempered datum";

/// Standard-triple data `(M, nu, h)` plus an opaque label for the tempered
/// part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentParam<T> {
    levi: LeviSubset,
    nu: ExponentVector<T>,
    h: ExponentVector<T>,
    tag: String,
}

impl<T: Scalar> ExponentParam<T> {
    /// Validates:
    /// * `<nu, alpha^vee>` is zero on `levi` and positive off it;
    /// * `h` has integral pairings, nonnegative on `levi`;
    /// * `h` lies in the span of the simple roots of `levi`, so its pairings
    ///   off `levi` are the ones forced by the embedding.
    pub fn new(
        d: &RootDatum,
        levi: LeviSubset,
        nu: ExponentVector<T>,
        h: ExponentVector<T>,
        tag: impl Into<String>,
    ) -> Result<Self> {
        d.check_subset(&levi)?;
        d.check_vector(&nu)?;
        d.check_vector(&h)?;
        for i in 0..d.rank() {
            let c = nu.pairing(i);
            if levi.contains(i) && !c.is_zero() {
                return Err(Error::InvalidParam(format!("nu pairs to {c} with simple coroot {} in the Levi", i + 1)));
            }
            if !levi.contains(i) && !c.is_positive() {
                return Err(Error::InvalidParam(format!("nu pairs to {c} with simple coroot {} outside the Levi", i + 1)));
            }
        }
        if !h.is_integral() {
            return Err(Error::InvalidParam(format!("h = {h} is not integral")));
        }
        if let Some(i) = levi.iter().find(|&i| h.pairing(i).is_negative()) {
            return Err(Error::InvalidParam(format!("h is not dominant for the Levi at {}", i + 1)));
        }
        if !in_levi_root_span(d, &levi, &h) {
            return Err(Error::InvalidParam(format!("h = {h} is not in the root span of the Levi {levi}")));
        }
        Ok(Self { levi, nu, h, tag: tag.into() })
    }

    /// A parameter with trivial `SL_2` part.
    pub fn without_sl2(d: &RootDatum, levi: LeviSubset, nu: ExponentVector<T>, tag: impl Into<String>) -> Result<Self> {
        let h = ExponentVector::zeros(d.rank());
        Self::new(d, levi, nu, h, tag)
    }

    /// The Levi is read off as the zero set of `nu`.
    pub fn unramified(d: &RootDatum, nu: ExponentVector<T>) -> Result<Self> {
        let levi = nu.zero_set();
        Self::without_sl2(d, levi, nu, "unramified")
    }

    pub fn levi(&self) -> &LeviSubset {
        &self.levi
    }

    pub fn nu(&self) -> &ExponentVector<T> {
        &self.nu
    }

    pub fn h(&self) -> &ExponentVector<T> {
        &self.h
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }
}

fn in_levi_root_span<T: Scalar>(d: &RootDatum, levi: &LeviSubset, h: &ExponentVector<T>) -> bool {
    let idx: Vec<usize> = levi.iter().collect();
    if idx.is_empty() {
        return h.is_zero();
    }
    let sub: Vec<Vec<i64>> = idx.iter().map(|&i| idx.iter().map(|&j| d.cartan()[i][j]).collect()).collect();
    let a = Matrix::<T>::from_int_rows(&sub).expect("square");
    let rhs: Vec<T> = idx.iter().map(|&i| h.pairing(i).clone()).collect();
    let Ok(c) = a.solve(&rhs) else {
        return false;
    };
    (0..d.rank()).all(|i| {
        let forced = idx
            .iter()
            .zip(&c)
            .fold(T::zero(), |acc, (&j, cj)| acc + cj.clone() * T::from_int(d.cartan()[i][j]));
        forced == *h.pairing(i)
    })
}

/// Infinitesimal-character data: the dominant exponent `nu_lambda` and its
/// stabilizer Levi `M_lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfCharData<T> {
    m_lambda: LeviSubset,
    nu_lambda: ExponentVector<T>,
}

impl<T: Scalar> InfCharData<T> {
    pub fn from_dominant(d: &RootDatum, nu_lambda: ExponentVector<T>) -> Result<Self> {
        d.check_vector(&nu_lambda)?;
        if let Some(i) = nu_lambda.coords().iter().position(|c| c.is_negative()) {
            return Err(Error::NotDominant(i));
        }
        Ok(Self { m_lambda: nu_lambda.zero_set(), nu_lambda })
    }

    /// Checks that `m_lambda` is exactly the zero set of `nu_lambda`.
    pub fn new(d: &RootDatum, m_lambda: LeviSubset, nu_lambda: ExponentVector<T>) -> Result<Self> {
        let ic = Self::from_dominant(d, nu_lambda)?;
        if ic.m_lambda != m_lambda {
            return Err(Error::InvalidParam(format!(
                "M_lambda {m_lambda} differs from the stabilizer {} of nu_lambda",
                ic.m_lambda
            )));
        }
        Ok(ic)
    }

    pub fn m_lambda(&self) -> &LeviSubset {
        &self.m_lambda
    }

    pub fn nu_lambda(&self) -> &ExponentVector<T> {
        &self.nu_lambda
    }

    /// Whether the diagram automorphism fixes `nu_lambda`.
    pub fn is_gamma_fixed(&self, d: &RootDatum) -> bool {
        d.gamma_vector(&self.nu_lambda) == self.nu_lambda
    }
}

/// `nu_lambda = dom(nu + h/2)` together with the Weyl element realizing the
/// dominantization.
pub fn infchar_exponent_with_word<T: Scalar>(
    d: &RootDatum,
    p: &ExponentParam<T>,
) -> Result<(InfCharData<T>, WeylElement)> {
    let shifted = p.nu.add(&p.h.scale(&T::half()));
    let (dom, w) = weyl::make_dominant(d, &shifted)?;
    Ok((InfCharData::from_dominant(d, dom)?, w))
}

pub fn infchar_exponent<T: Scalar>(d: &RootDatum, p: &ExponentParam<T>) -> Result<InfCharData<T>> {
    Ok(infchar_exponent_with_word(d, p)?.0)
}

/// Outcome of the parallelepiped test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FppVerdict<T> {
    pub in_fpp: bool,
    /// Simple coroots with pairing strictly greater than 1.
    pub violated: LeviSubset,
    /// Simple coroots with pairing exactly 1.
    pub boundary: LeviSubset,
    pub pairings: Vec<T>,
}

impl<T: Scalar> FppVerdict<T> {
    pub fn max_pairing(&self) -> Option<&T> {
        self.pairings.iter().max()
    }
}

/// Every simple-coroot pairing of the dominant exponent is at most 1.
pub fn fpp_check<T: Scalar>(d: &RootDatum, ic: &InfCharData<T>) -> FppVerdict<T> {
    fpp_check_vector(d, &ic.nu_lambda).expect("InfCharData is dominant with datum rank")
}

pub fn fpp_check_vector<T: Scalar>(d: &RootDatum, v: &ExponentVector<T>) -> Result<FppVerdict<T>> {
    d.check_vector(v)?;
    if let Some(i) = v.coords().iter().position(|c| c.is_negative()) {
        return Err(Error::NotDominant(i));
    }
    let one = T::one();
    let violated = LeviSubset::from_indices((0..v.len()).filter(|&i| *v.pairing(i) > one));
    let boundary = LeviSubset::from_indices((0..v.len()).filter(|&i| *v.pairing(i) == one));
    Ok(FppVerdict { in_fpp: violated.is_empty(), violated, boundary, pairings: v.coords().to_vec() })
}

/// `M_{<=1}`: `M_lambda` together with the simple roots pairing at most 1.
pub fn levi_leq1<T: Scalar>(d: &RootDatum, ic: &InfCharData<T>) -> LeviSubset {
    let one = T::one();
    let small = LeviSubset::from_indices((0..d.rank()).filter(|&i| *ic.nu_lambda.pairing(i) <= one));
    ic.m_lambda.union(&small)
}

/// Pairings of `v` with the coroots of the nilradical of the standard
/// parabolic with Levi `m`.
pub fn nilradical_weights<T: Scalar>(d: &RootDatum, m: &LeviSubset, v: &ExponentVector<T>) -> Vec<T> {
    d.nilradical_roots(m).into_iter().map(|r| r.pair(v)).collect()
}

/// `<nu_lambda - h/2, gamma^vee> > 1` for every root `gamma` of the
/// nilradical of `m_leq1`.
///
/// `h` must be expressed in the frame where `nu_lambda` is dominant; see
/// [`transported_h`].
pub fn claim_inequality<T: Scalar>(
    d: &RootDatum,
    m_leq1: &LeviSubset,
    ic: &InfCharData<T>,
    h: &ExponentVector<T>,
) -> bool {
    let shifted = ic.nu_lambda.sub(&h.scale(&T::half()));
    let one = T::one();
    nilradical_weights(d, m_leq1, &shifted).into_iter().all(|x| x > one)
}

/// The `sl_2` weight of `p` moved by the dominantizing element of
/// [`infchar_exponent_with_word`].
pub fn transported_h<T: Scalar>(d: &RootDatum, p: &ExponentParam<T>) -> Result<ExponentVector<T>> {
    let (_, w) = infchar_exponent_with_word(d, p)?;
    Ok(w.apply(&p.h))
}

/// The unbounded family `s -> nu_s` with `<nu_s, beta^vee> = s` for `beta`
/// in the violation set and 0 otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationFamily {
    support: LeviSubset,
    rank: usize,
}

impl DeformationFamily {
    pub fn support(&self) -> &LeviSubset {
        &self.support
    }

    pub fn at<T: Scalar>(&self, s: &T) -> ExponentVector<T> {
        ExponentVector::new(
            (0..self.rank)
                .map(|i| if self.support.contains(i) { s.clone() } else { T::zero() })
                .collect(),
        )
    }

    pub fn description(&self) -> String {
        format!("nu_s pairs to s with the simple coroots {} and to 0 elsewhere, s >= 0", self.support)
    }
}

impl fmt::Display for DeformationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.description())
    }
}

pub fn deformation_family<T: Scalar>(d: &RootDatum, ic: &InfCharData<T>) -> Result<DeformationFamily> {
    let verdict = fpp_check(d, ic);
    if verdict.violated.is_empty() {
        return Err(Error::EmptyViolationSet);
    }
    Ok(DeformationFamily { support: verdict.violated, rank: d.rank() })
}

/// Whether `levi_leq1` stays constant along the family at the sample point
/// `s`.
pub fn family_keeps_levi<T: Scalar>(d: &RootDatum, ic: &InfCharData<T>, fam: &DeformationFamily, s: &T) -> Result<bool> {
    let moved = InfCharData::from_dominant(d, ic.nu_lambda.add(&fam.at(s)))?;
    Ok(levi_leq1(d, &moved) == levi_leq1(d, ic))
}

/// Hermitian witnesses for a parameter.
///
/// Beyond `w(R(M)) = R(M)` and `w(nu) = -nu`, the element must send `h` to a
/// `W_M`-conjugate of itself: the exponent-level shadow of `pi_t^w = pi_t`.
pub fn param_hermitian_witness<T: Scalar>(
    d: &RootDatum,
    p: &ExponentParam<T>,
    rank_cap: usize,
) -> Result<Option<WeylElement>> {
    let witnesses = weyl::hermitian_witnesses(d, &p.levi, &p.nu, rank_cap)?;
    for w in witnesses {
        let (moved, _) = weyl::make_levi_dominant(d, &p.levi, &w.apply(&p.h))?;
        if moved == p.h {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// A non-unitarity certificate, valid under the listed assumptions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate<T> {
    pub param: ExponentParam<T>,
    pub infchar: InfCharData<T>,
    pub violated: LeviSubset,
    pub m_leq1: LeviSubset,
    pub witness: WeylElement,
    pub family: DeformationFamily,
    pub assumptions: Vec<String>,
}

impl<T: Scalar> Certificate<T> {
    /// Re-derive every field from its defining predicate.
    pub fn verify(&self, d: &RootDatum) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidParam(format!("certificate check failed: {msg}")));
        let ic = infchar_exponent(d, &self.param)?;
        if ic != self.infchar {
            return fail("infinitesimal character does not match the parameter".into());
        }
        let verdict = fpp_check(d, &ic);
        if verdict.violated != self.violated || self.violated.is_empty() {
            return fail(format!("violation set {} should be {}", self.violated, verdict.violated));
        }
        if levi_leq1(d, &ic) != self.m_leq1 {
            return fail("M_{<=1} does not match".into());
        }
        if !self.witness.normalizes(&self.param.levi) {
            return fail(format!("witness {} does not normalize M", self.witness));
        }
        if self.witness.apply(&self.param.nu) != self.param.nu.neg() {
            return fail(format!("witness {} does not negate nu", self.witness));
        }
        let (moved_h, _) = weyl::make_levi_dominant(d, &self.param.levi, &self.witness.apply(&self.param.h))?;
        if moved_h != self.param.h {
            return fail(format!("witness {} changes the sl2 type", self.witness));
        }
        if self.family.support != self.violated {
            return fail("family support differs from the violation set".into());
        }
        // Linearity: checking s = 1 settles every s.
        let unit = self.family.at(&T::one());
        if self.witness.apply(&unit) != unit.neg() {
            return fail(format!("witness {} does not negate nu_s", self.witness));
        }
        if !self.param.levi.is_subset(&self.m_leq1) {
            return fail("M is not contained in M_{<=1}".into());
        }
        Ok(())
    }
}

/// Assemble a certificate when the exponent leaves the parallelepiped and a
/// Hermitian witness exists; `None` otherwise.
pub fn non_unitarity_certificate<T: Scalar>(d: &RootDatum, p: &ExponentParam<T>) -> Result<Option<Certificate<T>>> {
    non_unitarity_certificate_capped(d, p, weyl::DEFAULT_RANK_CAP)
}

pub fn non_unitarity_certificate_capped<T: Scalar>(
    d: &RootDatum,
    p: &ExponentParam<T>,
    rank_cap: usize,
) -> Result<Option<Certificate<T>>> {
    let infchar = infchar_exponent(d, p)?;
    let verdict = fpp_check(d, &infchar);
    if verdict.in_fpp {
        return Ok(None);
    }
    let Some(witness) = param_hermitian_witness(d, p, rank_cap)? else {
        return Ok(None);
    };
    certificate_with_witness(d, p, witness).map(Some)
}

/// Assemble and verify a certificate around a known Hermitian witness, for
/// groups whose Weyl group is too large to search.
pub fn certificate_with_witness<T: Scalar>(
    d: &RootDatum,
    p: &ExponentParam<T>,
    witness: WeylElement,
) -> Result<Certificate<T>> {
    let infchar = infchar_exponent(d, p)?;
    let verdict = fpp_check(d, &infchar);
    let family = deformation_family(d, &infchar)?;
    let cert = Certificate {
        param: p.clone(),
        m_leq1: levi_leq1(d, &infchar),
        violated: verdict.violated,
        infchar,
        witness,
        family,
        assumptions: vec![ASSUMPTION_LLC.to_string(), ASSUMPTION_TEMPERED.to_string()],
    };
    cert.verify(d)?;
    Ok(cert)
}
