//! Bounds on the nef cone of `X^[n]` below the threshold, and the
//! complete answer for `n = k = 2`.
//!
//! For a case I surface with `n` below the nef threshold `n'` the exact
//! nef cone of `X^[n]` is not known in general, but it is sandwiched:
//! the positivity cone `Lambda_n` contains it, and the divisor that is
//! nef at level `n'` stays nef at level `n`, giving an inner bound
//! ([`sandwich_bounds`]). When `k >= 2n` the section class
//! `L = w1 + w2` is `n`-very ample — checked exactly against the
//! K3 criterion of Knutsen type ([`knutsen_check`]) — and
//! `L^[n] - B/2` is then nef, which closes the gap to the outer bound
//! except for the `B`-ray ([`improved_bound_k_ge_2n`]).
//!
//! The smallest open case of the sandwich is `n = k = 2`, where `L` is
//! ample but not very ample: the Brill-Noether number `rho(3, 1, 2) =
//! -1` ([`brill_noether`]) signals the hyperelliptic curves in `|L|`
//! whose `g^1_2`s sweep out a quadric `Q' = P^1 x P^1` inside the
//! (degenerate) image of `X` in `P^3`. Restricting divisors to `Q'`
//! ([`qprime_restrictions`], [`gamma_t_on_qprime`]) and to the ruled
//! surface over a hyperelliptic curve ([`ruled_surface_pairings`])
//! pins the nef cone exactly: [`nef_cone_n2k2`]. The boundary class
//! `w1^[k] + w2^[k] - B/2` is orthogonal to the induced section-class
//! curve for every `n = k` ([`orthogonality_nk`]), which is why the
//! outer bound is attained there.

use num::{One, Signed};

use crate::cone::RatCone;
use crate::error::Error;
use crate::hilb::{lambda_case1_closed_form, min_threshold_n, pair_hilb, HCurve, HDiv};
use crate::linalg;
use crate::picard::{intersect, make_surface, Case, Div};
use crate::ratio::{frac, rat, Rat};

/// Two-sided bound on `Nef(X^[n])`: `inner` is contained in the nef
/// cone, which is contained in `outer`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichBounds {
    pub outer: RatCone,
    pub inner: RatCone,
    /// The smallest `n` satisfying the nef threshold for this `k`.
    pub n_prime: i64,
    /// `n_prime - n`, the number of levels of slack.
    pub j: i64,
}

/// The sandwich `inner ⊆ Nef(X^[n]) ⊆ outer` for case I with
/// `1 < n < n'`: outer is `Lambda_n`; inner replaces the third
/// generator by the level-`n'` nef divisor `(n'/k)(w1 + w2)^[n] - B/2`,
/// which remains nef at level `n`.
pub fn sandwich_bounds(k: i64, n: i64) -> Result<SandwichBounds, Error> {
    let s = make_surface(Case::I, k)?;
    let n_prime = min_threshold_n(&s)?;
    if n <= 1 || n >= n_prime {
        return Err(Error::Precondition {
            requirement: format!("1 < n < n' = {n_prime} (at n >= n' the cone is exact)"),
            got: format!("n = {n}"),
        });
    }
    let outer = lambda_case1_closed_form(k, n)?;
    let inner = RatCone::from_rays(
        3,
        &[
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![frac(n_prime, k), frac(n_prime, k), rat(-1)],
        ],
    )?;
    Ok(SandwichBounds {
        outer,
        inner,
        n_prime,
        j: n_prime - n,
    })
}

/// Report of the `n`-very-ampleness test for `L = w1 + w2` on a case I
/// surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnutsenReport {
    pub l: Div,
    pub l_sq: Rat,
    /// `L^2 >= 4n` is the first, unconditional requirement.
    pub min_l_sq: i64,
    /// First obstructing divisor found in scan order, if any.
    pub witness: Option<Div>,
    /// `L` is `n`-very ample iff `l_sq >= min_l_sq` and no witness.
    pub ok: bool,
    /// The scan covered every divisor that could possibly obstruct
    /// (true as soon as `bound >= (2n + 2)/k`).
    pub exhaustive: bool,
    pub bound: i64,
}

/// Exact `n`-very-ampleness criterion for `L = w1 + w2` on a case I K3:
/// `L` is `n`-very ample iff `L^2 >= 4n` and no effective `D = x w1 +
/// y w2` (searched for `0 <= x, y <= bound`) satisfies
///
/// ```text
/// 2 D^2 <=(i) L.D <= D^2 + n + 1 <=(ii) 2n + 2
/// ```
///
/// where equality in (i) obstructs only if `L ~ 2D` and `L^2 <= 4n + 4`,
/// and equality in (ii) only if `L ~ 2D` and `L^2 = 4n + 4`.
/// An obstructing `D` must have `k(x + y) = L.D <= 2n + 2`, so the
/// search is exhaustive once `bound >= (2n + 2)/k`.
pub fn knutsen_check(k: i64, n: i64, bound: i64) -> Result<KnutsenReport, Error> {
    let s = make_surface(Case::I, k)?;
    let l = &Div::w1() + &Div::w2();
    let l_sq = intersect(&s, &l, &l);
    let min_l_sq = 4 * n;
    let mut witness = None;
    if l_sq >= rat(min_l_sq) {
        'scan: for x in 0..=bound {
            for y in 0..=bound {
                if (x, y) == (0, 0) {
                    continue;
                }
                let d = Div::from_ints(x, y);
                let d_sq = intersect(&s, &d, &d);
                let ld = intersect(&s, &l, &d);
                let chain = rat(2) * &d_sq <= ld
                    && ld <= &d_sq + rat(n + 1)
                    && &d_sq + rat(n + 1) <= rat(2 * n + 2);
                if !chain {
                    continue;
                }
                let l_is_2d = l == d.scale(&rat(2));
                let eq_i = rat(2) * &d_sq == ld;
                let eq_ii = &d_sq + rat(n + 1) == rat(2 * n + 2);
                let i_obstructs = !eq_i || (l_is_2d && l_sq <= rat(4 * n + 4));
                let ii_obstructs = !eq_ii || (l_is_2d && l_sq == rat(4 * n + 4));
                if i_obstructs && ii_obstructs {
                    witness = Some(d);
                    break 'scan;
                }
            }
        }
    }
    let ok = l_sq >= rat(min_l_sq) && witness.is_none();
    Ok(KnutsenReport {
        l,
        l_sq,
        min_l_sq,
        witness,
        ok,
        // bound >= (2n+2)/k, as integers: k * bound >= 2n + 2.
        exhaustive: k * bound >= 2 * n + 2,
        bound,
    })
}

/// Improved inner bound when `k >= 2n` (and `n >= 2`): `L = w1 + w2` is
/// then `n`-very ample, so `L^[n] - B/2 = (1, 1, -1)` is nef and
/// `Cone(w1^[n], w2^[n], (1,1,-1)) ⊆ Nef(X^[n])`.
pub fn improved_bound_k_ge_2n(k: i64, n: i64) -> Result<RatCone, Error> {
    if n < 2 || k < 2 * n {
        return Err(Error::Precondition {
            requirement: "k >= 2n and n >= 2".into(),
            got: format!("k = {k}, n = {n}"),
        });
    }
    let report = knutsen_check(k, n, (2 * n + 1 + k).div_euclid(k))?;
    debug_assert!(report.exhaustive);
    if !report.ok {
        // Unreachable for k >= 2n (no divisor satisfies the chain), but
        // the claim rests on it, so fail loudly rather than silently.
        return Err(Error::Precondition {
            requirement: "L = w1 + w2 n-very ample".into(),
            got: format!("witness {:?}", report.witness),
        });
    }
    RatCone::from_int_rays(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, -1]])
}

/// Brill-Noether number `rho(g, r, d) = g - (r + 1)(g - d + r)`.
pub fn brill_noether(g: i64, r: i64, d: i64) -> i64 {
    g - (r + 1) * (g - d + r)
}

/// The pairing of `w1^[k] + w2^[k] - B/2` with the curve induced by the
/// section class `w1 + w2` on `X^[k]` (case I, `n = k`). Always zero:
/// the candidate boundary divisor is orthogonal to the section curve.
pub fn orthogonality_nk(k: i64) -> Result<Rat, Error> {
    let s = make_surface(Case::I, k)?;
    let d = HDiv::from_ints(1, 1, -1);
    let c = HCurve::induced(&s, &Div::w1() + &Div::w2());
    Ok(pair_hilb(&s, k, &d, &c))
}

/// A class `p H1 + q H2` on the quadric `Q' = P^1 x P^1`, with the
/// intersection form `H1^2 = H2^2 = 0`, `H1.H2 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricClass {
    pub p: Rat,
    pub q: Rat,
}

impl QuadricClass {
    pub fn new(p: Rat, q: Rat) -> Self {
        QuadricClass { p, q }
    }

    pub fn dot(&self, other: &QuadricClass) -> Rat {
        &self.p * &other.q + &self.q * &other.p
    }

    /// Ample on `P^1 x P^1` iff both degrees are positive.
    pub fn is_ample(&self) -> bool {
        self.p.is_positive() && self.q.is_positive()
    }
}

/// Which published statement's sign convention to use for `B|Q'`; the
/// two disagree, and [`qprime_restrictions`] reports both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BSign {
    Lemma,
    Corollary,
}

/// Restrictions to the quadric `Q'` in the `n = k = 2` analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QprimeRestrictions {
    pub w1: QuadricClass,
    pub w2: QuadricClass,
    pub b_lemma: QuadricClass,
    pub b_corollary: QuadricClass,
    /// The two published values of `B|Q'` differ by a sign.
    pub discrepant: bool,
}

/// Solves `(p, q)` from prescribed intersection numbers against `H1`,
/// `H2` on `Q'`.
fn quadric_class_from_degrees(u: &Rat, v: &Rat) -> QuadricClass {
    // Columns of the Gram matrix of (H1, H2).
    let cols = vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]];
    let sol = linalg::solve_independent(&cols, &[u.clone(), v.clone()])
        .expect("hyperbolic Gram matrix is invertible");
    QuadricClass::new(sol[0].clone(), sol[1].clone())
}

/// Restriction of `w1^[2]`, `w2^[2]` and `B` to the quadric `Q'` for
/// `n = k = 2`, from their intersection numbers with the two rulings:
/// `w1^[2]|Q' = 2 H1`, `w2^[2]|Q' = 2 H2`, and `B|Q' = ±4(H1 + H2)`
/// depending on the sign convention (both are returned and flagged).
pub fn qprime_restrictions() -> QprimeRestrictions {
    let w1 = quadric_class_from_degrees(&rat(0), &rat(2));
    let w2 = quadric_class_from_degrees(&rat(2), &rat(0));
    let b_lemma = quadric_class_from_degrees(&rat(4), &rat(4));
    let b_corollary = quadric_class_from_degrees(&rat(-4), &rat(-4));
    let discrepant = b_lemma != b_corollary;
    QprimeRestrictions {
        w1,
        w2,
        b_lemma,
        b_corollary,
        discrepant,
    }
}

/// The restriction of `Gamma_t = w1^[2] + w2^[2] - ((1 - t)/2) B` to
/// `Q'` under the chosen sign for `B|Q'`, with its ampleness.
///
/// With the corollary sign this is `(4 - 2t)(H1 + H2)`: ample iff
/// `t < 2`. With the lemma sign it is `2t (H1 + H2)`: ample iff `t > 0`.
pub fn gamma_t_on_qprime(t: &Rat, sign: BSign) -> (QuadricClass, bool) {
    let r = qprime_restrictions();
    let b = match sign {
        BSign::Lemma => r.b_lemma,
        BSign::Corollary => r.b_corollary,
    };
    let coeff = (Rat::one() - t) / rat(2);
    let class = QuadricClass::new(
        &r.w1.p + &r.w2.p - &coeff * &b.p,
        &r.w1.q + &r.w2.q - &coeff * &b.q,
    );
    let ample = class.is_ample();
    (class, ample)
}

/// Intersection numbers on the ruled surface over a hyperelliptic curve
/// in `|w1 + w2|` (the second restriction surface of the `n = k = 2`
/// analysis). `F` is the ruling fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuledSurfacePairings {
    /// `F.B = -2` inside `X^[2]`.
    pub fiber_dot_b: i64,
    /// The induced classes do not meet the ruling: `w_i^[2].F = 0`.
    pub w1_dot_fiber: i64,
    pub w2_dot_fiber: i64,
    /// Slope of the first Harder-Narasimhan quotient governing the
    /// surface: zero, so its nef cone is spanned by section and fiber.
    pub hn_slope_mu1: Rat,
}

pub fn ruled_surface_pairings() -> RuledSurfacePairings {
    RuledSurfacePairings {
        fiber_dot_b: -2,
        w1_dot_fiber: 0,
        w2_dot_fiber: 0,
        hn_slope_mu1: rat(0),
    }
}

impl RuledSurfacePairings {
    /// `Gamma_t . F = (w1^[2] + w2^[2] - ((1 - t)/2) B).F = 1 - t`,
    /// assembled from the stored pairings.
    pub fn gamma_t_dot_fiber(&self, t: &Rat) -> Rat {
        rat(self.w1_dot_fiber) + rat(self.w2_dot_fiber)
            - (Rat::one() - t) / rat(2) * rat(self.fiber_dot_b)
    }
}

/// The exact nef cone of `X^[2]` for `k = 2`:
/// `Cone(w1^[2], w2^[2], w1^[2] + w2^[2] - B/2)` — the outer sandwich
/// bound is attained.
pub fn nef_cone_n2k2() -> RatCone {
    RatCone::from_int_rays(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, -1]]).expect("three fixed rays")
}
