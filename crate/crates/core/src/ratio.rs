//! Exact rational scalars.
//!
//! Every quantity in this crate that is not a priori an integer is a
//! [`Rat`] (arbitrary-precision rational). No floating point is used
//! anywhere in the library; callers that need floats (e.g. for drawing)
//! convert at the very end via [`to_f64`].

use num::bigint::BigInt;
use num::ToPrimitive;

/// Arbitrary-precision rational number, the scalar type of this crate.
pub type Rat = num::BigRational;

/// The integer `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The fraction `p/q` in lowest terms. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical string form `p/q`: lowest terms, positive denominator, and
/// the denominator always written out (`3` prints as `3/1`).
pub fn rat_str(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses the `p/q` form produced by [`rat_str`]. Also accepts a bare
/// integer. Returns `None` for malformed input or a zero denominator.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().ok()?;
    let q: BigInt = q.parse().ok()?;
    if q == BigInt::from(0) {
        return None;
    }
    Some(Rat::new(p, q))
}

/// Lossy conversion for rendering only.
pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
