//! Divisors, curves and positivity on the Hilbert scheme `X^[n]`.
//!
//! For a surface `X` with `Pic(X) = Z w1 + Z w2`, the Hilbert scheme of
//! `n >= 2` points has `Pic(X^[n]) = Z w1^[n] + Z w2^[n] + Z (B/2)`,
//! where `w_i^[n]` is the class induced by `w_i` and `B` is the divisor
//! of non-reduced subschemes. Divisor classes are written `(a, b, c)` in
//! the basis `(w1^[n], w2^[n], B/2)`.
//!
//! Two kinds of curve classes control positivity:
//!
//! * `C_[n]`, induced by a curve `C` in `X`: fix `g(C) - 1 + n` points
//!   and move one; it pairs with `(a, b, c)` as
//!   `(a w1 + b w2).C + c (g(C) - 1 + n)`;
//! * `C_0`, contracted by the Hilbert-Chow morphism: two points collide
//!   along a fixed direction; it pairs as `-c`.
//!
//! The cone `Lambda` of classes nonnegative against `w1^[n]`, `w2^[n]`
//! and `C_0` always contains the nef cone; past an explicit per-case
//! threshold in `n` ([`threshold_holds`]) the two are equal, the three
//! curves generate the Mori cone, and [`nef_cone_hilb`] /
//! [`mori_cone_hilb`] are exact.

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::cone::{dual_cone, Pairing, RatCone};
use crate::error::Error;
use crate::picard::{genus_adjunction, intersect, make_surface, Case, Div, SurfaceK3};
use crate::ratio::{frac, rat, Rat};

/// A divisor class `a*w1^[n] + b*w2^[n] + c*(B/2)` on `X^[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HDiv {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl HDiv {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Self {
        HDiv { a, b, c }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        HDiv::new(rat(a), rat(b), rat(c))
    }

    /// The class induced by a divisor on the surface (no `B` component).
    pub fn from_div(d: &Div) -> Self {
        HDiv::new(d.a.clone(), d.b.clone(), Rat::zero())
    }

    /// The class `B/2`.
    pub fn b_half() -> Self {
        HDiv::from_ints(0, 0, 1)
    }

    pub fn coords(&self) -> [Rat; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    /// The underlying surface part `a*w1 + b*w2`.
    pub fn surface_part(&self) -> Div {
        Div::new(self.a.clone(), self.b.clone())
    }
}

/// A curve class on `X^[n]` of one of the two controlling kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HCurve {
    /// `C_[n]` for a curve `C` of the given class and genus on `X`.
    Induced { class: Div, genus: Rat },
    /// The exceptional curve `C_0` of the Hilbert-Chow contraction.
    Contracted,
}

impl HCurve {
    /// The induced class `C_[n]`, with the genus from adjunction.
    pub fn induced(s: &SurfaceK3, class: Div) -> Self {
        let genus = genus_adjunction(s, &class);
        HCurve::Induced { class, genus }
    }

    pub fn contracted() -> Self {
        HCurve::Contracted
    }
}

/// The pairing `D.C` between a divisor and a curve class on `X^[n]`.
pub fn pair_hilb(s: &SurfaceK3, n: i64, d: &HDiv, c: &HCurve) -> Rat {
    let f = curve_functional(s, n, c);
    let x = d.coords();
    x.iter().zip(f.iter()).map(|(a, b)| a * b).sum()
}

/// The linear functional `(a, b, c) -> D.C` of a curve class, written in
/// divisor coordinates: `(w1.C, w2.C, g(C) - 1 + n)` for an induced
/// curve and `(0, 0, -1)` for the contracted one.
pub fn curve_functional(s: &SurfaceK3, n: i64, c: &HCurve) -> [Rat; 3] {
    match c {
        HCurve::Induced { class, genus } => [
            intersect(s, &Div::w1(), class),
            intersect(s, &Div::w2(), class),
            genus - Rat::one() + rat(n),
        ],
        HCurve::Contracted => [Rat::zero(), Rat::zero(), -Rat::one()],
    }
}

/// The three curve classes that cut out `Lambda` (and generate the Mori
/// cone once the threshold holds): `w1^[n]`, `w2^[n]`, `C_0`.
pub fn controlling_curves(s: &SurfaceK3) -> [HCurve; 3] {
    [
        HCurve::induced(s, Div::w1()),
        HCurve::induced(s, Div::w2()),
        HCurve::contracted(),
    ]
}

/// The positivity cone `Lambda`: divisor classes pairing nonnegatively
/// with the three controlling curves. Always contains the nef cone of
/// `X^[n]`; equals it once [`threshold_holds`].
pub fn lambda_cone(s: &SurfaceK3, n: i64) -> Result<RatCone, Error> {
    if n < 2 {
        return Err(Error::Precondition {
            requirement: "n >= 2".into(),
            got: format!("n = {n}"),
        });
    }
    let funcs: Vec<Vec<Rat>> = controlling_curves(s)
        .iter()
        .map(|c| curve_functional(s, n, c).to_vec())
        .collect();
    // Lambda is the dual (under the standard dot product on coordinates)
    // of the cone spanned by the curve functionals.
    dual_cone(&funcs, &Pairing::identity(3))
}

/// Closed form of `Lambda` in case I:
/// `Cone(w1^[n], w2^[n], (n/k)(w1^[n] + w2^[n]) - B/2)`.
pub fn lambda_case1_closed_form(k: i64, n: i64) -> Result<RatCone, Error> {
    make_surface(Case::I, k)?;
    if n < 2 {
        return Err(Error::Precondition {
            requirement: "n >= 2".into(),
            got: format!("n = {n}"),
        });
    }
    let third = vec![frac(n, k), frac(n, k), rat(-1)];
    RatCone::from_rays(
        3,
        &[
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            third,
        ],
    )
}

/// The quartic in `n` whose nonnegativity (together with `n > k`) is the
/// case II nef threshold.
fn case2_poly(k: i64, n: i64) -> BigInt {
    let k = BigInt::from(k);
    let n = BigInt::from(n);
    let c4 = 32 * (&k * &k + 2 * &k + 1);
    let c3 = 4 * &k * (25 * &k * &k + 41 * &k + 16);
    let c2 = 4 * &k * &k * (26 * &k * &k + 33 * &k + 7);
    let c1 = 4 * &k * &k * &k * (9 * &k * &k + 8 * &k - 1);
    let c0 = (&k * &k) * (&k * &k);
    c4 * n.pow(4) - c3 * n.pow(3) + c2 * n.pow(2) - c1 * &n - c0
}

/// The quadratic in `n` whose nonnegativity (together with
/// `n >= k >= 3`) is the case III nef threshold.
fn case3_poly(k: i64, n: i64) -> i64 {
    8 * n * n + (2 - 9 * k) * n + 8
}

/// Does the per-case nef threshold hold for `n` points?
///
/// * case I: `8n >= 9k`;
/// * case II: `n > k` and [`case2_poly`]` >= 0`;
/// * case III: `n >= k >= 3` and [`case3_poly`]` >= 0`.
pub fn threshold_holds(s: &SurfaceK3, n: i64) -> bool {
    let k = s.k();
    match s.case() {
        Case::I => 8 * n >= 9 * k,
        Case::II => n > k && !case2_poly(k, n).is_negative(),
        Case::III => k >= 3 && n >= k && case3_poly(k, n) >= 0,
    }
}

/// Human-readable statement of the inequality behind
/// [`threshold_holds`] for the given case.
pub fn threshold_hypothesis(case: Case) -> String {
    match case {
        Case::I => "8n >= 9k".to_string(),
        Case::II => "n > k and 32(k^2+2k+1)n^4 - 4k(25k^2+41k+16)n^3 + 4k^2(26k^2+33k+7)n^2 \
             - 4k^3(9k^2+8k-1)n - k^4 >= 0"
            .to_string(),
        Case::III => "n >= k >= 3 and 8n^2 + (2-9k)n + 8 >= 0".to_string(),
    }
}

fn threshold_error(s: &SurfaceK3, n: i64) -> Error {
    Error::ThresholdNotMet {
        case: s.case(),
        k: s.k(),
        n,
        hypothesis: threshold_hypothesis(s.case()),
    }
}

/// The smallest `n` satisfying the threshold, scanning upward from the
/// smallest structurally possible value. Case III with `k < 3` never
/// satisfies it ([`Error::ThresholdUnattainable`]).
pub fn min_threshold_n(s: &SurfaceK3) -> Result<i64, Error> {
    let k = s.k();
    match s.case() {
        // 8n >= 9k has integer solutions from ceil(9k/8) on.
        Case::I => Ok((9 * k + 7).div_euclid(8)),
        Case::II => {
            // The quartic's leading coefficient is positive, so the scan
            // terminates.
            let mut n = k + 1;
            while case2_poly(k, n).is_negative() {
                n += 1;
            }
            Ok(n)
        }
        Case::III => {
            if k < 3 {
                return Err(Error::ThresholdUnattainable { case: s.case(), k });
            }
            let mut n = k;
            while case3_poly(k, n) < 0 {
                n += 1;
            }
            Ok(n)
        }
    }
}

/// The nef cone of `X^[n]`, exact once the threshold holds (it is then
/// the cone `Lambda`); errors with [`Error::ThresholdNotMet`] otherwise.
pub fn nef_cone_hilb(s: &SurfaceK3, n: i64) -> Result<RatCone, Error> {
    if !threshold_holds(s, n) {
        return Err(threshold_error(s, n));
    }
    lambda_cone(s, n)
}

/// The extremal curve classes of the Mori cone of `X^[n]`, threshold-
/// gated like [`nef_cone_hilb`].
pub fn mori_cone_hilb(s: &SurfaceK3, n: i64) -> Result<[HCurve; 3], Error> {
    if !threshold_holds(s, n) {
        return Err(threshold_error(s, n));
    }
    Ok(controlling_curves(s))
}
