//! Seeded random generation of exponent data for property runs.
//!
//! The `sl_2` weights produced here are principal in a Levi subsystem of the
//! parameter's Levi, conjugated to be dominant for that Levi. In type A this
//! covers every nilpotent orbit; in other types it covers the orbits that are
//! principal in some Levi subalgebra.

use crate::lparam::ExponentParam;
use crate::rootdata::{ExponentVector, LeviSubset, RootDatum};
use crate::scalar::Scalar;
use crate::weyl;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const DENOMINATORS: [i64; 4] = [1, 2, 3, 4];

/// A rational in `(0, 3]` with small denominator, biased toward 1.
fn positive_rational<T: Scalar, R: Rng>(rng: &mut R) -> T {
    if rng.gen_bool(0.15) {
        return T::one();
    }
    let den = *DENOMINATORS.choose(rng).expect("nonempty");
    T::ratio(rng.gen_range(1..=3 * den), den)
}

pub fn random_subset<R: Rng>(rank: usize, rng: &mut R) -> LeviSubset {
    LeviSubset::from_indices((0..rank).filter(|_| rng.gen_bool(0.5)))
}

/// A random dominant exponent, with zero coordinates mixed in.
pub fn random_dominant<T: Scalar, R: Rng>(d: &RootDatum, rng: &mut R) -> ExponentVector<T> {
    ExponentVector::new(
        (0..d.rank())
            .map(|_| if rng.gen_bool(0.2) { T::zero() } else { positive_rational(rng) })
            .collect(),
    )
}

/// `2 rho_L` for the standard Levi subsystem `l`: the neutral element of the
/// principal `sl_2` of `L`.
pub fn principal_h<T: Scalar>(d: &RootDatum, l: &LeviSubset) -> ExponentVector<T> {
    let (levi_roots, _) = d.levi_split(l);
    levi_roots
        .into_iter()
        .fold(ExponentVector::zeros(d.rank()), |acc, r| acc.add(&d.root_to_weight(&r.root)))
}

pub fn random_param<T: Scalar, R: Rng>(d: &RootDatum, rng: &mut R) -> ExponentParam<T> {
    let levi = random_subset(d.rank(), rng);
    let nu = ExponentVector::new(
        (0..d.rank())
            .map(|i| if levi.contains(i) { T::zero() } else { positive_rational(rng) })
            .collect(),
    );
    let sub = LeviSubset::from_indices(levi.iter().filter(|_| rng.gen_bool(0.6)));
    let (h, _) = weyl::make_levi_dominant(d, &levi, &principal_h::<T>(d, &sub)).expect("rank matches");
    ExponentParam::new(d, levi, nu, h, format!("principal on {sub}")).expect("generated parameter is valid")
}
