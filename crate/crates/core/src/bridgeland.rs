//! Bridgeland stability for ideal sheaves of points: walls, the
//! Gieseker wall, and the nef divisor it induces.
//!
//! Stability conditions are parametrized by a slice `(H, D)` — an ample
//! polarization `H` and a twisting divisor `D` — and a point `(s, t)` of
//! the upper half-plane, `t > 0`. The central charge of a class `v` with
//! Chern character `(ch0, ch1, ch2)` is
//!
//! ```text
//! Z_{s,t}(v) = -ch2^{D+sH}(v) + t^2/2 * H^2 * ch0(v)
//!              + i * H.ch1^{D+sH}(v),
//! ```
//!
//! where `ch^E(v) = ch(v) * exp(-E)` is the twisted Chern character.
//! Numerical walls — loci where two classes have equal tilt slope
//! `mu_{s,t} = -Re Z / Im Z` — are semicircles centered on the `s`-axis
//! (plus one vertical line through `s = mu_{H,D}(v)`), and walls for a
//! fixed class are totally ordered by their centers: farther left means
//! bigger.
//!
//! For the ideal sheaf `I_Z` of `n` points on a case I surface with the
//! standard slice `H = (n/k - 1)(w1 + w2)`, `D = -(w1 + w2)`, the
//! biggest ("Gieseker") wall is computed by testing the candidate
//! destabilizers `O(-F)` for `F` among the critical divisors
//! `{w1 + w2, w1, w2}` and certifying the winner against the rank-one
//! bound [`gieseker_lower_bound`]; certification succeeds exactly when
//! `8(n - k) >= k`. Crossing the Gieseker wall at center `s_W` produces
//! the nef divisor `-s_W H^[n] - D^[n] - B/2` on `X^[n]`
//! ([`bm_nef_divisor`]).

use num::{One, Signed, Zero};

use crate::error::Error;
use crate::hilb::HDiv;
use crate::picard::{intersect, make_surface, Case, Div, SurfaceK3};
use crate::ratio::{frac, rat, Rat};

/// Chern character `(ch0, ch1, ch2)` of a class on the surface, with
/// `ch1` in the `(w1, w2)` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernChar {
    pub ch0: Rat,
    pub ch1: Div,
    pub ch2: Rat,
}

impl ChernChar {
    pub fn new(ch0: Rat, ch1: Div, ch2: Rat) -> Self {
        ChernChar { ch0, ch1, ch2 }
    }

    /// `I_Z` for `Z` of length `n`: `(1, 0, -n)`.
    pub fn ideal_sheaf(n: i64) -> Self {
        ChernChar::new(Rat::one(), Div::zero(), rat(-n))
    }

    /// `O_X(L)`: `(1, L, L^2/2)` (K3 Todd class plays no role here).
    pub fn line_bundle(s: &SurfaceK3, l: &Div) -> Self {
        let lsq = intersect(s, l, l);
        ChernChar::new(Rat::one(), l.clone(), lsq / rat(2))
    }

    /// `I_W(L)` with `|W| = m`: `(1, L, L^2/2 - m)`.
    pub fn twisted_ideal(s: &SurfaceK3, l: &Div, m: i64) -> Self {
        let lsq = intersect(s, l, l);
        ChernChar::new(Rat::one(), l.clone(), lsq / rat(2) - rat(m))
    }
}

/// The Chern character twisted by a divisor `E`:
/// `(ch0, ch1 - ch0 E, ch2 - ch1.E + ch0 E^2/2)`.
pub fn twisted_chern(s: &SurfaceK3, ch: &ChernChar, e: &Div) -> ChernChar {
    let ch1 = &ch.ch1 - &e.scale(&ch.ch0);
    let ch2 =
        ch.ch2.clone() - intersect(s, &ch.ch1, e) + ch.ch0.clone() * intersect(s, e, e) / rat(2);
    ChernChar::new(ch.ch0.clone(), ch1, ch2)
}

/// A stability slice `(H, D)` on a fixed surface. `H` must be ample,
/// i.e. strictly interior to the nef cone, which on these surfaces means
/// `H.w1 > 0` and `H.w2 > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slice {
    surface: SurfaceK3,
    h: Div,
    d: Div,
}

impl Slice {
    pub fn new(surface: SurfaceK3, h: Div, d: Div) -> Result<Self, Error> {
        let pos = |w: &Div| intersect(&surface, &h, w).is_positive();
        if !pos(&Div::w1()) || !pos(&Div::w2()) {
            return Err(Error::NotAmple);
        }
        Ok(Slice { surface, h, d })
    }

    pub fn surface(&self) -> &SurfaceK3 {
        &self.surface
    }

    pub fn h(&self) -> &Div {
        &self.h
    }

    pub fn d(&self) -> &Div {
        &self.d
    }

    /// `H^2` (positive, by the Hodge index theorem, since `H` is ample).
    pub fn h_sq(&self) -> Rat {
        intersect(&self.surface, &self.h, &self.h)
    }
}

/// The standard case I slice for `n` points:
/// `H = (n/k - 1)(w1 + w2)`, `D = -(w1 + w2)`. Needs `n > k` for `H` to
/// be ample.
pub fn case1_slice(k: i64, n: i64) -> Result<Slice, Error> {
    let s = make_surface(Case::I, k)?;
    if n <= k {
        return Err(Error::Precondition {
            requirement: "n > k (else the case I polarization is not ample)".into(),
            got: format!("k = {k}, n = {n}"),
        });
    }
    let l = &Div::w1() + &Div::w2();
    let h = l.scale(&(frac(n, k) - Rat::one()));
    Slice::new(s, h, -&l)
}

/// Slope `mu_{H,D} = H.ch1^D / (H^2 ch0)`; undefined for rank zero.
pub fn mu_hd(slice: &Slice, ch: &ChernChar) -> Result<Rat, Error> {
    if ch.ch0.is_zero() {
        return Err(Error::ZeroRank);
    }
    let tw = twisted_chern(slice.surface(), ch, slice.d());
    Ok(intersect(slice.surface(), slice.h(), &tw.ch1) / (slice.h_sq() * &ch.ch0))
}

/// Discriminant `Delta_{H,D} = mu^2/2 - ch2^D / (H^2 ch0)`.
pub fn delta_hd(slice: &Slice, ch: &ChernChar) -> Result<Rat, Error> {
    let mu = mu_hd(slice, ch)?;
    let tw = twisted_chern(slice.surface(), ch, slice.d());
    Ok(&mu * &mu / rat(2) - tw.ch2 / (slice.h_sq() * &ch.ch0))
}

/// Central charge at the point `(s, t)` of the slice's upper half-plane,
/// parametrized by `t^2` (the charge depends on `t` only through its
/// square, and `t^2` stays rational on rational wall points). Returns
/// `(Re Z, Im Z)`.
pub fn central_charge(
    slice: &Slice,
    ch: &ChernChar,
    s_param: &Rat,
    t_sq: &Rat,
) -> Result<(Rat, Rat), Error> {
    if !t_sq.is_positive() {
        return Err(Error::NonPositiveTSquared {
            got: crate::ratio::rat_str(t_sq),
        });
    }
    let twist = slice.d() + &slice.h().scale(s_param);
    let tw = twisted_chern(slice.surface(), ch, &twist);
    let re = -&tw.ch2 + t_sq * slice.h_sq() / rat(2) * &ch.ch0;
    let im = intersect(slice.surface(), slice.h(), &tw.ch1);
    Ok((re, im))
}

/// Tilt slope `mu_{s,t} = -Re Z / Im Z`; undefined where `Im Z = 0`
/// (the vertical wall).
pub fn mu_st(slice: &Slice, ch: &ChernChar, s_param: &Rat, t_sq: &Rat) -> Result<Rat, Error> {
    let (re, im) = central_charge(slice, ch, s_param, t_sq)?;
    if im.is_zero() {
        return Err(Error::VerticalWall);
    }
    Ok(-re / im)
}

/// A numerical wall: the semicircle `(s - center)^2 + t^2 = radius_sq`.
/// `radius_sq <= 0` marks a degenerate (empty) wall; such walls are
/// still meaningfully ordered by their centers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub center: Rat,
    pub radius_sq: Rat,
}

impl Wall {
    pub fn is_degenerate(&self) -> bool {
        !self.radius_sq.is_positive()
    }
}

/// The numerical wall where `e` and `f` have equal tilt slope:
/// center `(mu(e) + mu(f))/2 - (Delta(e) - Delta(f))/(mu(e) - mu(f))`,
/// `radius^2 = (mu(e) - center)^2 - 2 Delta(e)` (symmetric in `e, f`).
pub fn wall(slice: &Slice, e: &ChernChar, f: &ChernChar) -> Result<Wall, Error> {
    let mu_e = mu_hd(slice, e)?;
    let mu_f = mu_hd(slice, f)?;
    if mu_e == mu_f {
        return Err(Error::EqualSlopes);
    }
    let d_e = delta_hd(slice, e)?;
    let d_f = delta_hd(slice, f)?;
    let center = (&mu_e + &mu_f) / rat(2) - (&d_e - &d_f) / (&mu_e - &mu_f);
    let radius_sq = {
        let off = &mu_e - &center;
        &off * &off - rat(2) * &d_e
    };
    Ok(Wall { center, radius_sq })
}

/// Center of the wall between `I_W(L)` (with `|W| = m`) and the ideal
/// sheaf of `n` points, in closed form:
/// `s = (n - m + L^2/2 - L.D) / (L.H)`. Degenerate when `L.H = 0`.
pub fn wall_center_ideal(slice: &Slice, l: &Div, m: i64, n: i64) -> Result<Rat, Error> {
    let s = slice.surface();
    let lh = intersect(s, l, slice.h());
    if lh.is_zero() {
        return Err(Error::DegenerateWall);
    }
    let lsq = intersect(s, l, l);
    let ld = intersect(s, l, slice.d());
    Ok((rat(n - m) + lsq / rat(2) - ld) / lh)
}

/// Is `inner` strictly inside `outer`? Walls for a fixed class to the
/// left of the vertical wall are totally ordered by their centers, the
/// container having the smaller (leftmost) center.
pub fn is_nested_inside(inner: &Wall, outer: &Wall) -> bool {
    outer.center < inner.center
}

/// Rank-one lower bound for the radius of the Gieseker wall of `n`
/// points: `varrho = (2n H^2 + (H.D)^2 - H^2 D^2) / (8 (H^2)^2)`.
pub fn gieseker_lower_bound(slice: &Slice, n: i64) -> Rat {
    let s = slice.surface();
    let hsq = slice.h_sq();
    let hd = intersect(s, slice.h(), slice.d());
    let dsq = intersect(s, slice.d(), slice.d());
    (rat(2 * n) * &hsq + &hd * &hd - &hsq * dsq) / (rat(8) * &hsq * &hsq)
}

/// The critical divisors tested as destabilizers in case I.
pub fn critical_divisors_default() -> Vec<Div> {
    vec![&Div::w1() + &Div::w2(), Div::w1(), Div::w2()]
}

/// All nonzero effective classes with coordinates up to `bound` — a
/// brute-force superset of any finite critical list, for experiments.
pub fn critical_divisors_bounded(bound: i64) -> Vec<Div> {
    let mut out = Vec::new();
    for a in 0..=bound {
        for b in 0..=bound {
            if (a, b) != (0, 0) {
                out.push(Div::from_ints(a, b));
            }
        }
    }
    out
}

/// One candidate destabilizing wall: the wall between `O(-critical)`
/// and the ideal sheaf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateWall {
    /// The critical divisor `F`.
    pub critical: Div,
    /// The candidate destabilizer is `O(-F)`; this is its `c1 = -F`.
    pub destabilizer: Div,
    pub wall: Wall,
}

/// Everything the case I Gieseker-wall computation produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallAnalysis {
    pub slice: Slice,
    pub n: i64,
    /// Candidate walls in critical-divisor order.
    pub candidates: Vec<CandidateWall>,
    /// The leftmost-centered (biggest) candidate; ties broken by
    /// lexicographically smallest destabilizer coordinates.
    pub chosen: CandidateWall,
    /// Rank-one lower bound for the Gieseker-wall radius.
    pub varrho: Rat,
    /// The chosen wall is certified to be the Gieseker wall when its
    /// radius reaches the lower bound; equivalent to `8(n - k) >= k`.
    pub certified: bool,
    /// Position of the vertical wall `s = mu_{H,D}(I_Z)`.
    pub vertical_s: Rat,
}

/// Runs the case I wall computation for `n` points (uncertified results
/// included; see [`gieseker_wall_case1`] for the gated version).
pub fn case1_wall_analysis(k: i64, n: i64) -> Result<WallAnalysis, Error> {
    let slice = case1_slice(k, n)?;
    let ideal = ChernChar::ideal_sheaf(n);
    let mut candidates = Vec::new();
    for f in critical_divisors_default() {
        let minus_f = -&f;
        let e = ChernChar::line_bundle(slice.surface(), &minus_f);
        let w = wall(&slice, &e, &ideal)?;
        candidates.push(CandidateWall {
            critical: f,
            destabilizer: minus_f,
            wall: w,
        });
    }
    let chosen = candidates
        .iter()
        .min_by(|x, y| {
            (&x.wall.center, &x.destabilizer.a, &x.destabilizer.b).cmp(&(
                &y.wall.center,
                &y.destabilizer.a,
                &y.destabilizer.b,
            ))
        })
        .expect("nonempty candidate list")
        .clone();
    let varrho = gieseker_lower_bound(&slice, n);
    let certified = chosen.wall.radius_sq >= varrho;
    let vertical_s = mu_hd(&slice, &ideal)?;
    Ok(WallAnalysis {
        slice,
        n,
        candidates,
        chosen,
        varrho,
        certified,
        vertical_s,
    })
}

/// The certified Gieseker wall for `n` points in case I, as
/// `(wall, destabilizer c1)`. Errors with [`Error::BelowThreshold`] when
/// the certificate fails (`8(n - k) < k`).
pub fn gieseker_wall_case1(k: i64, n: i64) -> Result<(Wall, Div), Error> {
    let analysis = case1_wall_analysis(k, n)?;
    if !analysis.certified {
        return Err(Error::BelowThreshold { k, n });
    }
    Ok((analysis.chosen.wall, analysis.chosen.destabilizer))
}

/// The nef divisor on `X^[n]` induced by crossing a wall with center
/// `s_w`: `-s_w H^[n] - D^[n] - B/2`. Requires `-D` effective (true for
/// every slice this crate constructs).
pub fn bm_nef_divisor(slice: &Slice, s_w: &Rat) -> Result<HDiv, Error> {
    let minus_d = -slice.d();
    if minus_d.a.is_negative() || minus_d.b.is_negative() {
        return Err(Error::Precondition {
            requirement: "-D effective (nonnegative coordinates)".into(),
            got: format!("D = {}", slice.d()),
        });
    }
    let neg_s = -s_w.clone();
    let surf_part = &slice.h().scale(&neg_s) - slice.d();
    let mut hd = HDiv::from_div(&surf_part);
    hd.c = rat(-1);
    Ok(hd)
}
