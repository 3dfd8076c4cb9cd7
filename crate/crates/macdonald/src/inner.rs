//! The deformed Hall pairing.
//!
//! The power sums are orthogonal:
//!
//! ```text
//!     <p_lambda, p_mu> = delta_{lambda,mu} z_lambda prod_j (1-q^{lambda_j})/(1-t^{lambda_j}),
//! ```
//!
//! where z_lambda = prod_v v^{m_v} m_v! over the part multiplicities m_v.
//! Every pairing is computed by converting both arguments to the p basis
//! and summing the diagonal.

use crate::{convert_basis, Basis, MacError, SymFunc};
use exactalg::{var, RatFunc, Scalar};
use partitions::Partition;

/// The symmetrizer order z_lambda = prod_v v^{m_v} m_v!.
pub fn z_lambda(lambda: &Partition) -> Scalar {
    let mut z = Scalar::from_integer(1.into());
    for (value, count) in lambda.multiplicities() {
        for i in 1..=count {
            z *= Scalar::from_integer((value as i64 * i as i64).into());
        }
    }
    // Each of the m_v factors above contributes v * i, so the product over
    // i = 1..m_v is v^{m_v} m_v! in one pass.
    z
}

/// The diagonal pairing weight <p_lambda, p_lambda>.
pub(crate) fn power_sum_norm(lambda: &Partition) -> RatFunc {
    let (q, t) = (var("q"), var("t"));
    let mut w = RatFunc::from_scalar(z_lambda(lambda));
    for &part in lambda.parts() {
        let num = &RatFunc::one() - &q.pow(part as i64);
        let den = &RatFunc::one() - &t.pow(part as i64);
        w = &w * &(&num * &den.inv());
    }
    w
}

/// Pairs two symmetric functions of equal degree; the bases may differ.
pub fn scalar_product(f: &SymFunc, g: &SymFunc) -> Result<RatFunc, MacError> {
    if f.degree() != g.degree() {
        return Err(MacError::PairingDegrees {
            left: f.degree(),
            right: g.degree(),
        });
    }
    let fp = convert_basis(f, Basis::P);
    let gp = convert_basis(g, Basis::P);
    let mut acc = RatFunc::zero();
    for (lambda, a) in fp.iter() {
        let b = gp.coeff(lambda);
        if b.is_zero() {
            continue;
        }
        acc = &acc + &(&(a * &b) * &power_sum_norm(lambda));
    }
    Ok(acc)
}
