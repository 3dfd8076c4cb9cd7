//! The two-point weight functions: the star-product kernel
//!
//! ```text
//!     omega(x, y; q1, q2, q3) = (x - q1 y)(x - q2 y)(x - q3 y) / (x - y)^3
//! ```
//!
//! and the three-case pair weight used by the kernel sums,
//!
//! ```text
//!     gamma_{i,j}(z, w) = (z - t w)(z - t^{-1} w) / (z - w)^2            for i = j,
//!                         (z - q^{-1} w)(z - t w)(z - q t^{-1} w) / (z - w)^3   for i < j,
//!                         (z - q w)(z - t^{-1} w)(z - q^{-1} t w) / (z - w)^3   for i > j,
//! ```
//!
//! so the equal-index case is eps_2(z, w; t), the ascending case is
//! omega(z, w; q^{-1}, t, q t^{-1}), and the descending case is the
//! ascending one with the arguments swapped.

use exactalg::{var, AlgError, RatFunc};

/// Evaluates omega at a pair of points with explicit parameters.
/// The points must stay off the diagonal x = y.
pub fn omega_eval(
    x: &RatFunc,
    y: &RatFunc,
    q1: &RatFunc,
    q2: &RatFunc,
    q3: &RatFunc,
) -> Result<RatFunc, AlgError> {
    let d = x - y;
    if d.is_zero() {
        return Err(AlgError::Pole {
            assignment: format!("coincident pair x = y = {x}"),
        });
    }
    let num = &(&(x - &(q1 * y)) * &(x - &(q2 * y))) * &(x - &(q3 * y));
    Ok(&num * &d.pow(3).inv())
}

/// Evaluates gamma_{i,j} at a pair of points, with q and t pinned to the
/// given values. Only the order relation between i and j matters.
pub(crate) fn gamma_at(
    i: u32,
    j: u32,
    z: &RatFunc,
    w: &RatFunc,
    qv: &RatFunc,
    tv: &RatFunc,
) -> Result<RatFunc, AlgError> {
    if i == j {
        let d = z - w;
        if d.is_zero() {
            return Err(AlgError::Pole {
                assignment: format!("coincident pair z = w = {z}"),
            });
        }
        let num = &(z - &(tv * w)) * &(z - &(&tv.inv() * w));
        Ok(&num * &d.pow(2).inv())
    } else if i < j {
        omega_eval(z, w, &qv.inv(), tv, &(qv * &tv.inv()))
    } else {
        omega_eval(w, z, &qv.inv(), tv, &(qv * &tv.inv()))
    }
}

/// gamma_{i,j}(z, w) with q and t as symbols.
pub fn gamma_pair(i: u32, j: u32, z: &RatFunc, w: &RatFunc) -> Result<RatFunc, AlgError> {
    gamma_at(i, j, z, w, &var("q"), &var("t"))
}
