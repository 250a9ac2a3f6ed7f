//! Rank-2 Picard lattices of the three families of Mori dream K3 surfaces.
//!
//! A surface here is determined by its case and one integer `k`:
//!
//! * case I: Gram matrix `[[0, k], [k, 0]]` with `k >= 2` — two elliptic
//!   fibration classes `w1`, `w2` of square zero;
//! * case II: `[[-2, k], [k, 0]]` with `k >= 1` — a (-2)-class and an
//!   elliptic class;
//! * case III: `[[-2, k], [k, -2]]` with `k >= 1` — two (-2)-classes.
//!
//! In every case the effective cone is spanned by the basis classes `w1`
//! and `w2`, and the nef cone is its dual under the intersection form.
//! Note that in case III the Gram matrix has signature (1,1) — as the
//! Picard lattice of a projective surface must — only for `k >= 3`;
//! `k = 1, 2` are still constructible as lattices, but duality then
//! produces no meaningful nef cone (see [`nef_cone_x`]).

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num::One;

use crate::cone::{dual_cone, Pairing, RatCone};
use crate::error::Error;
use crate::ratio::{rat, Rat};

/// Which of the three Picard-rank-2 families a surface belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    I,
    II,
    III,
}

impl Case {
    /// Smallest `k` for which the family is defined.
    pub fn min_k(self) -> i64 {
        match self {
            Case::I => 2,
            Case::II | Case::III => 1,
        }
    }

    pub const ALL: [Case; 3] = [Case::I, Case::II, Case::III];
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Case::I => "I",
            Case::II => "II",
            Case::III => "III",
        };
        f.write_str(s)
    }
}

impl FromStr for Case {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "I" => Ok(Case::I),
            "II" => Ok(Case::II),
            "III" => Ok(Case::III),
            _ => Err(format!("unknown case {s:?}: expected I, II or III")),
        }
    }
}

/// A K3 surface of Picard rank 2 from one of the three families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceK3 {
    case: Case,
    k: i64,
}

/// Constructs a surface, validating `k` against the case.
pub fn make_surface(case: Case, k: i64) -> Result<SurfaceK3, Error> {
    if k < case.min_k() {
        return Err(Error::InvalidSurface {
            case,
            k,
            min: case.min_k(),
        });
    }
    Ok(SurfaceK3 { case, k })
}

impl SurfaceK3 {
    pub fn case(&self) -> Case {
        self.case
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// The Gram matrix of the intersection form in the basis `(w1, w2)`.
    pub fn gram(&self) -> [[i64; 2]; 2] {
        let k = self.k;
        match self.case {
            Case::I => [[0, k], [k, 0]],
            Case::II => [[-2, k], [k, 0]],
            Case::III => [[-2, k], [k, -2]],
        }
    }

    /// The intersection form as a [`Pairing`] on divisor coordinates.
    pub fn gram_pairing(&self) -> Pairing {
        let g = self.gram();
        let m = g
            .iter()
            .map(|row| row.iter().map(|&x| rat(x)).collect())
            .collect();
        Pairing::from_matrix(m).expect("2x2 matrix")
    }
}

/// A (rational) divisor class `a*w1 + b*w2` on the surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Div {
    pub a: Rat,
    pub b: Rat,
}

impl Div {
    pub fn new(a: Rat, b: Rat) -> Self {
        Div { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Div::new(rat(a), rat(b))
    }

    pub fn zero() -> Self {
        Div::from_ints(0, 0)
    }

    pub fn w1() -> Self {
        Div::from_ints(1, 0)
    }

    pub fn w2() -> Self {
        Div::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self == &Div::zero()
    }

    pub fn coords(&self) -> [Rat; 2] {
        [self.a.clone(), self.b.clone()]
    }

    pub fn scale(&self, c: &Rat) -> Div {
        Div::new(c * &self.a, c * &self.b)
    }
}

impl Add for &Div {
    type Output = Div;
    fn add(self, rhs: &Div) -> Div {
        Div::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &Div {
    type Output = Div;
    fn sub(self, rhs: &Div) -> Div {
        Div::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Neg for &Div {
    type Output = Div;
    fn neg(self) -> Div {
        Div::new(-self.a.clone(), -self.b.clone())
    }
}

impl fmt::Display for Div {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})w1 + ({})w2", self.a, self.b)
    }
}

/// The intersection number `d1 . d2` on the surface.
pub fn intersect(s: &SurfaceK3, d1: &Div, d2: &Div) -> Rat {
    let g = s.gram();
    let mut acc = rat(0);
    let x = d1.coords();
    let y = d2.coords();
    for i in 0..2 {
        for j in 0..2 {
            acc += &x[i] * &rat(g[i][j]) * &y[j];
        }
    }
    acc
}

/// Arithmetic genus of a curve class on a K3 surface: `g = C^2/2 + 1`.
pub fn genus_adjunction(s: &SurfaceK3, c: &Div) -> Rat {
    let csq = intersect(s, c, c);
    csq / rat(2) + Rat::one()
}

/// The effective cone: spanned by `w1` and `w2` in every case.
pub fn eff_cone_x(_s: &SurfaceK3) -> RatCone {
    RatCone::from_int_rays(2, &[&[1, 0], &[0, 1]]).expect("two unit rays")
}

/// The nef cone, computed as the dual of the effective cone under the
/// intersection form.
///
/// For case III with `k <= 2` the Gram matrix is not of signature (1,1),
/// so no projective surface has this Picard lattice; `k = 2` fails with
/// [`Error::DegeneratePairing`] and `k = 1` returns the lattice-theoretic
/// dual (a cone of negative classes), which is not a nef cone of
/// anything. Everywhere else this agrees with [`nef_cone_closed_form`].
pub fn nef_cone_x(s: &SurfaceK3) -> Result<RatCone, Error> {
    dual_cone(&eff_cone_x(s).rays_rat(), &s.gram_pairing())
}

/// Generators of the nef cone in closed form:
/// case I `{w1, w2}`, case II `{k*w1 + 2*w2, w2}`,
/// case III `{k*w1 + 2*w2, 2*w1 + k*w2}`.
pub fn nef_cone_closed_form(s: &SurfaceK3) -> RatCone {
    let k = s.k;
    let gens: [[i64; 2]; 2] = match s.case {
        Case::I => [[1, 0], [0, 1]],
        Case::II => [[k, 2], [0, 1]],
        Case::III => [[k, 2], [2, k]],
    };
    RatCone::from_int_rays(2, &[&gens[0], &gens[1]]).expect("two rays")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::cone_equal;
    use crate::ratio::frac;

    #[test]
    fn surface_validation() {
        assert!(make_surface(Case::I, 2).is_ok());
        assert_eq!(
            make_surface(Case::I, 1),
            Err(Error::InvalidSurface {
                case: Case::I,
                k: 1,
                min: 2
            })
        );
        assert!(make_surface(Case::II, 1).is_ok());
        assert!(make_surface(Case::III, 1).is_ok());
        assert!(make_surface(Case::II, 0).is_err());
        assert!(make_surface(Case::III, -1).is_err());
    }

    #[test]
    fn case_parsing() {
        assert_eq!("I".parse::<Case>(), Ok(Case::I));
        assert_eq!("ii".parse::<Case>(), Ok(Case::II));
        assert_eq!("III".parse::<Case>(), Ok(Case::III));
        assert!("IV".parse::<Case>().is_err());
    }

    #[test]
    fn intersection_numbers() {
        let s = make_surface(Case::I, 2).unwrap();
        assert_eq!(intersect(&s, &Div::w1(), &Div::w1()), rat(0));
        assert_eq!(intersect(&s, &Div::w1(), &Div::w2()), rat(2));
        let d = &Div::w1() + &Div::w2();
        assert_eq!(intersect(&s, &d, &d), rat(4));

        let s = make_surface(Case::II, 3).unwrap();
        assert_eq!(intersect(&s, &Div::w1(), &Div::w1()), rat(-2));
        assert_eq!(intersect(&s, &Div::w1(), &Div::w2()), rat(3));
        assert_eq!(intersect(&s, &Div::w2(), &Div::w2()), rat(0));

        let s = make_surface(Case::III, 3).unwrap();
        assert_eq!(intersect(&s, &Div::w2(), &Div::w2()), rat(-2));
        // Bilinearity with rational coefficients.
        let d1 = Div::new(frac(1, 2), rat(1));
        let d2 = Div::new(rat(1), frac(-1, 3));
        // (1/2 w1 + w2).(w1 - 1/3 w2) = 1/2*(-2) + 1/2*(-1/3)*3 + 3 + (-1/3)*(-2)
        assert_eq!(
            intersect(&s, &d1, &d2),
            rat(-1) + frac(-1, 2) + rat(3) + frac(2, 3)
        );
    }

    #[test]
    fn intersection_is_symmetric() {
        for (case, k) in [(Case::I, 5), (Case::II, 2), (Case::III, 4)] {
            let s = make_surface(case, k).unwrap();
            let d1 = Div::from_ints(3, -2);
            let d2 = Div::from_ints(-1, 7);
            assert_eq!(intersect(&s, &d1, &d2), intersect(&s, &d2, &d1));
        }
    }

    #[test]
    fn genus_by_case() {
        // Case I: both basis classes are elliptic.
        let s = make_surface(Case::I, 2).unwrap();
        assert_eq!(genus_adjunction(&s, &Div::w1()), rat(1));
        assert_eq!(genus_adjunction(&s, &Div::w2()), rat(1));
        assert_eq!(genus_adjunction(&s, &(&Div::w1() + &Div::w2())), rat(3));
        // Case II: w1 is rational, w2 elliptic.
        let s = make_surface(Case::II, 1).unwrap();
        assert_eq!(genus_adjunction(&s, &Div::w1()), rat(0));
        assert_eq!(genus_adjunction(&s, &Div::w2()), rat(1));
        // Case III: both rational.
        let s = make_surface(Case::III, 3).unwrap();
        assert_eq!(genus_adjunction(&s, &Div::w1()), rat(0));
        assert_eq!(genus_adjunction(&s, &Div::w2()), rat(0));
    }

    #[test]
    fn genus_of_section_class() {
        // g(w1 + w2) = k + 1 in case I.
        for k in 2..=8 {
            let s = make_surface(Case::I, k).unwrap();
            let l = &Div::w1() + &Div::w2();
            assert_eq!(genus_adjunction(&s, &l), rat(k + 1));
        }
    }

    #[test]
    fn nef_cone_matches_closed_form() {
        for k in 2..=8 {
            let s = make_surface(Case::I, k).unwrap();
            assert!(cone_equal(
                &nef_cone_x(&s).unwrap(),
                &nef_cone_closed_form(&s)
            ));
        }
        for k in 1..=8 {
            let s = make_surface(Case::II, k).unwrap();
            assert!(cone_equal(
                &nef_cone_x(&s).unwrap(),
                &nef_cone_closed_form(&s)
            ));
        }
        for k in 3..=8 {
            let s = make_surface(Case::III, k).unwrap();
            assert!(cone_equal(
                &nef_cone_x(&s).unwrap(),
                &nef_cone_closed_form(&s)
            ));
        }
    }

    #[test]
    fn nef_cone_concrete_rays() {
        let s = make_surface(Case::II, 2).unwrap();
        assert_eq!(
            nef_cone_x(&s).unwrap().rays_i64().unwrap(),
            vec![vec![0, 1], vec![1, 1]]
        );
        let s = make_surface(Case::III, 3).unwrap();
        assert_eq!(
            nef_cone_x(&s).unwrap().rays_i64().unwrap(),
            vec![vec![2, 3], vec![3, 2]]
        );
    }

    #[test]
    fn nef_cone_sits_inside_eff_cone() {
        // On these surfaces nef classes are effective (both cones live in
        // the first quadrant's closure under the right generators).
        for (case, k) in [(Case::I, 4), (Case::II, 3), (Case::III, 5)] {
            let s = make_surface(case, k).unwrap();
            assert!(nef_cone_x(&s).unwrap().is_subcone_of(&eff_cone_x(&s)));
        }
    }

    #[test]
    fn degenerate_case_iii_lattices() {
        // k = 2: the form is singular, duality refuses.
        let s = make_surface(Case::III, 2).unwrap();
        assert_eq!(nef_cone_x(&s), Err(Error::DegeneratePairing));
        // k = 1: negative definite; the lattice dual exists but is not
        // the closed-form list (no projective surface realizes this).
        let s = make_surface(Case::III, 1).unwrap();
        let dual = nef_cone_x(&s).unwrap();
        assert!(!cone_equal(&dual, &nef_cone_closed_form(&s)));
    }
}
