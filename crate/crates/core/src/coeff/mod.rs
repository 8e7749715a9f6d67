//! Exact Kostka, Littlewood-Richardson, multi-LR, weight-space and plethysm
//! coefficients over unbounded integers, memoized in a shared cache.

mod cache;
mod kostka;
mod lr;
mod newton;
mod plethysm;
mod weight;

pub use cache::{Cache, CoeffKey, CoeffKind};
pub use kostka::kostka;
pub use lr::{lr_coeff, multi_lr_coeff};
pub use plethysm::plethysm;
pub use weight::weight_multiplicity;

#[cfg(test)]
use num_bigint::BigInt;

/// Weyl dimension formula for GL_N: product over cells (i,j) of
/// (N + j − i) / hook(i,j). Test oracle only.
#[cfg(test)]
pub(crate) fn dim_gl(lambda: &crate::partition::Partition, n: u32) -> BigInt {
    use num_traits::{One, Zero};
    if lambda.length() as u32 > n {
        return BigInt::zero();
    }
    let t = lambda.transpose();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..lambda.length() {
        for j in 0..lambda.part(i) as usize {
            num *= BigInt::from(n as i64 + j as i64 - i as i64);
            let hook = (lambda.part(i) as i64 - j as i64)
                + (t.part(j) as i64 - i as i64)
                - 1;
            den *= BigInt::from(hook);
        }
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}
