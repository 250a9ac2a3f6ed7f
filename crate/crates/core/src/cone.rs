//! Finitely generated rational convex cones in ambient dimension 2 or 3.
//!
//! A [`RatCone`] is stored canonically: each extremal ray as a primitive
//! integer vector (coordinates divided by their positive gcd, direction
//! preserved), redundant generators removed, rays sorted lexicographically.
//! Two cones are therefore equal if and only if their stored data are
//! equal, which is what [`cone_equal`] checks.
//!
//! Duality is taken with respect to an arbitrary nondegenerate symmetric
//! bilinear form ([`Pairing`]); the intersection form of a surface is
//! one instance, the standard dot product another. [`dual_cone`] works
//! facet by facet: every extremal ray of the dual lies on `dim - 1`
//! independent supporting hyperplanes of the input rays, so candidates
//! are kernel directions of single constraints (dimension 2) or of
//! constraint pairs (dimension 3), kept when they satisfy all remaining
//! inequalities. Membership testing is Caratheodory: a vector lies in
//! the cone iff it is a nonnegative combination of some linearly
//! independent subset of the generators. All of this is exact.

use std::fmt;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::error::Error;
use crate::linalg;
use crate::ratio::Rat;

/// Largest number of generators a cone in this domain ever needs.
pub const MAX_RAYS: usize = 6;

/// A symmetric bilinear pairing `<x, y> = x^T M y` on `Q^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    m: Vec<Vec<Rat>>,
}

impl Pairing {
    /// The standard dot product on `Q^dim`.
    pub fn identity(dim: usize) -> Self {
        let m = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        Pairing { m }
    }

    /// Pairing with the given square matrix.
    pub fn from_matrix(m: Vec<Vec<Rat>>) -> Result<Self, Error> {
        let dim = m.len();
        if !(2..=3).contains(&dim) {
            return Err(Error::UnsupportedDimension { dim });
        }
        if let Some(row) = m.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: row.len(),
            });
        }
        Ok(Pairing { m })
    }

    pub fn dim(&self) -> usize {
        self.m.len()
    }

    /// `<x, y>`.
    pub fn eval(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                acc += xi * &self.m[i][j] * yj;
            }
        }
        acc
    }

    pub fn is_degenerate(&self) -> bool {
        linalg::det(&self.m).is_zero()
    }

    /// The vector `M r`, i.e. the linear functional `<., r>` written in
    /// dual coordinates.
    fn functional(&self, r: &[Rat]) -> Vec<Rat> {
        self.m
            .iter()
            .map(|row| row.iter().zip(r).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Scales a nonzero rational vector to the primitive integer vector on
/// the same ray (same direction; coordinates coprime). Returns `None`
/// for the zero vector.
pub fn primitive(v: &[Rat]) -> Option<Vec<BigInt>> {
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    Some(ints.iter().map(|x| x / &gcd).collect())
}

fn to_rat_vec(v: &[BigInt]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

/// Conic membership: is `v` a nonnegative rational combination of `rays`?
///
/// By Caratheodory it suffices to scan linearly independent subsets of
/// size at most `dim`; each gives a square-ish exact system.
fn in_cone_of(rays: &[Vec<BigInt>], v: &[Rat]) -> bool {
    if v.iter().all(|x| x.is_zero()) {
        return true;
    }
    let m = rays.len();
    let dim = v.len();
    for mask in 1u32..(1 << m) {
        let size = mask.count_ones() as usize;
        if size > dim {
            continue;
        }
        let cols: Vec<Vec<Rat>> = (0..m)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| to_rat_vec(&rays[i]))
            .collect();
        if linalg::rank(&cols) < size {
            continue;
        }
        if let Some(x) = linalg::solve_independent(&cols, v) {
            if x.iter().all(|c| !c.is_negative()) {
                return true;
            }
        }
    }
    false
}

/// A finitely generated convex cone in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatCone {
    dim: usize,
    rays: Vec<Vec<BigInt>>,
    pointed: bool,
}

impl RatCone {
    /// Builds the cone generated by `rays`, canonicalizing as described
    /// in the module docs. The zero cone (no rays) is allowed.
    pub fn from_rays(dim: usize, rays: &[Vec<Rat>]) -> Result<Self, Error> {
        if !(2..=3).contains(&dim) {
            return Err(Error::UnsupportedDimension { dim });
        }
        if rays.len() > MAX_RAYS {
            return Err(Error::TooManyRays {
                max: MAX_RAYS,
                got: rays.len(),
            });
        }
        if let Some(r) = rays.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: r.len(),
            });
        }
        let mut prim: Vec<Vec<BigInt>> = Vec::new();
        for r in rays {
            if let Some(p) = primitive(r) {
                if !prim.contains(&p) {
                    prim.push(p);
                }
            }
        }
        // Drop generators that already lie in the cone of the others.
        // Removing one cannot make another necessary, but rescanning
        // after each removal keeps the logic obviously correct.
        'outer: loop {
            for i in 0..prim.len() {
                let rest: Vec<Vec<BigInt>> = prim
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, r)| r.clone())
                    .collect();
                if in_cone_of(&rest, &to_rat_vec(&prim[i])) {
                    prim.remove(i);
                    continue 'outer;
                }
            }
            break;
        }
        prim.sort();
        // A cone is pointed iff it contains no line; for a generated
        // cone that happens iff no generator's negation lies back in it.
        let pointed = prim.iter().all(|r| {
            let neg: Vec<Rat> = r.iter().map(|x| Rat::from_integer(-x.clone())).collect();
            !in_cone_of(&prim, &neg)
        });
        Ok(RatCone {
            dim,
            rays: prim,
            pointed,
        })
    }

    /// Convenience constructor from integer ray data.
    pub fn from_int_rays(dim: usize, rays: &[&[i64]]) -> Result<Self, Error> {
        let rq: Vec<Vec<Rat>> = rays
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| Rat::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect();
        Self::from_rays(dim, &rq)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The canonical generator list: primitive, minimal, sorted.
    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    /// The generators as rational vectors (e.g. to feed [`dual_cone`]).
    pub fn rays_rat(&self) -> Vec<Vec<Rat>> {
        self.rays.iter().map(|r| to_rat_vec(r)).collect()
    }

    /// Ray coordinates as machine integers, if they fit.
    pub fn rays_i64(&self) -> Option<Vec<Vec<i64>>> {
        self.rays
            .iter()
            .map(|r| r.iter().map(|x| i64::try_from(x).ok()).collect())
            .collect()
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    /// Exact membership test.
    pub fn contains(&self, v: &[Rat]) -> bool {
        v.len() == self.dim && in_cone_of(&self.rays, v)
    }

    /// Integer-coordinate convenience for [`contains`](Self::contains).
    pub fn contains_ints(&self, v: &[i64]) -> bool {
        let vq: Vec<Rat> = v
            .iter()
            .map(|&x| Rat::from_integer(BigInt::from(x)))
            .collect();
        self.contains(&vq)
    }

    /// `self` is contained in `other` iff every generator of `self` is.
    pub fn is_subcone_of(&self, other: &RatCone) -> bool {
        self.dim == other.dim && self.rays.iter().all(|r| other.contains(&to_rat_vec(r)))
    }
}

impl fmt::Display for RatCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cone(")?;
        for (i, r) in self.rays.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, ")")
    }
}

/// Equality of cones as sets (canonical forms compared verbatim).
pub fn cone_equal(a: &RatCone, b: &RatCone) -> bool {
    a == b
}

fn cross3(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// The dual cone `{ d : <d, r> >= 0 for every input ray r }` under the
/// given pairing.
///
/// Requires a nondegenerate pairing and input rays spanning the ambient
/// space (otherwise the dual contains a line and has no extremal-ray
/// description; [`Error::NotPointed`]). The result may still be
/// lower-dimensional or even the zero cone, both of which are returned
/// faithfully.
pub fn dual_cone(rays: &[Vec<Rat>], pairing: &Pairing) -> Result<RatCone, Error> {
    let dim = pairing.dim();
    if !(2..=3).contains(&dim) {
        return Err(Error::UnsupportedDimension { dim });
    }
    if rays.len() > MAX_RAYS {
        return Err(Error::TooManyRays {
            max: MAX_RAYS,
            got: rays.len(),
        });
    }
    if let Some(r) = rays.iter().find(|r| r.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: r.len(),
        });
    }
    if pairing.is_degenerate() {
        return Err(Error::DegeneratePairing);
    }
    // <d, r> = d . (M r), so each input ray imposes one linear inequality
    // with normal vector M r.
    let normals: Vec<Vec<Rat>> = rays
        .iter()
        .filter(|r| !r.iter().all(|x| x.is_zero()))
        .map(|r| pairing.functional(r))
        .collect();
    if linalg::rank(&normals) < dim {
        return Err(Error::NotPointed);
    }
    let mut candidates: Vec<Vec<Rat>> = Vec::new();
    match dim {
        2 => {
            for n in &normals {
                let d = vec![-n[1].clone(), n[0].clone()];
                candidates.push(d.clone());
                candidates.push(d.into_iter().map(|x| -x).collect());
            }
        }
        _ => {
            for i in 0..normals.len() {
                for j in (i + 1)..normals.len() {
                    let d = cross3(&normals[i], &normals[j]);
                    if d.iter().all(|x| x.is_zero()) {
                        continue; // proportional constraints
                    }
                    candidates.push(d.clone());
                    candidates.push(d.into_iter().map(|x| -x).collect());
                }
            }
        }
    }
    let feasible: Vec<Vec<Rat>> = candidates
        .into_iter()
        .filter(|d| {
            normals.iter().all(|n| {
                !n.iter()
                    .zip(d)
                    .map(|(a, b)| a * b)
                    .sum::<Rat>()
                    .is_negative()
            })
        })
        .collect();
    // Candidates can repeat (several constraint pairs cutting the same
    // edge) but from_rays dedups and prunes. Spanning input rays make
    // the dual pointed, so feasible candidates are genuinely extremal.
    let mut unique: Vec<Vec<Rat>> = Vec::new();
    for d in feasible {
        let p = primitive(&d).expect("feasible candidates are nonzero");
        let pq = to_rat_vec(&p);
        if !unique.contains(&pq) {
            unique.push(pq);
        }
    }
    if unique.len() > MAX_RAYS {
        // Cannot happen for pointed duals of <= 6 rays in dim <= 3, but
        // fail loudly rather than truncate if it ever does.
        return Err(Error::TooManyRays {
            max: MAX_RAYS,
            got: unique.len(),
        });
    }
    RatCone::from_rays(dim, &unique)
}
