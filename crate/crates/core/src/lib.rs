//! Exact computation of nef cones, Mori cones and Bridgeland walls for
//! Hilbert schemes of points on Mori dream K3 surfaces of Picard rank 2.
//!
//! The surfaces come in three families ([`Case::I`], [`Case::II`],
//! [`Case::III`]), each parametrized by one integer `k` that fixes the
//! intersection form on `Pic(X) = Z w1 + Z w2`. For the Hilbert scheme
//! `X^[n]` of `n` points, `Pic(X^[n])` gains one extra class `B/2` (half
//! the locus of non-reduced subschemes), and this crate computes, always
//! in exact rational arithmetic:
//!
//! * the effective and nef cones of the surfaces themselves ([`picard`]);
//! * the positivity cone of `X^[n]` cut out by the curves induced from
//!   `w1`, `w2` and the exceptional curve `C_0`, plus the threshold in
//!   `n` past which it equals the nef cone, and the dual Mori cone
//!   ([`hilb`]);
//! * the Gieseker wall in the Bridgeland stability plane for ideal
//!   sheaves of points, with the destabilizing divisor, the rank-one
//!   lower bound certifying it, and the induced nef divisor ([`bridgeland`]);
//! * two-sided bounds on the nef cone for `n` below the threshold,
//!   including the `n`-very-ampleness criterion that improves the lower
//!   bound when `k >= 2n`, and the complete special-case analysis for
//!   `n = k = 2` ([`smalln`]);
//! * positivity on the nested Hilbert scheme `X^[n, n+1]` via the
//!   published curve-pairing table, with an independent recomputation
//!   that cross-checks every entry ([`nested`]).
//!
//! Cones are handled by a small exact engine ([`cone`]) supporting
//! duality under arbitrary nondegenerate pairings, membership tests and
//! canonical generator lists.
//!
//! ```
//! use k3nef_core::{make_surface, nef_cone_hilb, Case};
//!
//! let s = make_surface(Case::I, 2).unwrap();
//! let nef = nef_cone_hilb(&s, 3).unwrap();
//! assert_eq!(
//!     nef.rays_i64().unwrap(),
//!     vec![vec![0, 1, 0], vec![1, 0, 0], vec![3, 3, -2]],
//! );
//! ```

pub mod bridgeland;
pub mod cone;
pub mod error;
pub mod hilb;
mod linalg;
pub mod nested;
pub mod picard;
pub mod ratio;
pub mod smalln;

pub use bridgeland::{
    bm_nef_divisor, case1_slice, case1_wall_analysis, central_charge, delta_hd,
    gieseker_lower_bound, gieseker_wall_case1, is_nested_inside, mu_hd, mu_st, twisted_chern, wall,
    wall_center_ideal, ChernChar, Slice, Wall, WallAnalysis,
};
pub use cone::{cone_equal, dual_cone, Pairing, RatCone};
pub use error::Error;
pub use hilb::{
    lambda_case1_closed_form, lambda_cone, min_threshold_n, mori_cone_hilb, nef_cone_hilb,
    pair_hilb, threshold_holds, HCurve, HDiv,
};
pub use nested::{
    diff_consistency, nested_nef_generators, nested_pair, nested_table_entry, nested_verify,
    NestedColumn, NestedCurve, NestedDiv, NestedReport,
};
pub use picard::{
    eff_cone_x, genus_adjunction, intersect, make_surface, nef_cone_closed_form, nef_cone_x, Case,
    Div, SurfaceK3,
};
pub use ratio::{frac, parse_rat, rat, rat_str, Rat};
pub use smalln::{
    brill_noether, gamma_t_on_qprime, improved_bound_k_ge_2n, knutsen_check, nef_cone_n2k2,
    orthogonality_nk, qprime_restrictions, ruled_surface_pairings, sandwich_bounds, BSign,
    KnutsenReport, QprimeRestrictions, QuadricClass, RuledSurfacePairings, SandwichBounds,
};
