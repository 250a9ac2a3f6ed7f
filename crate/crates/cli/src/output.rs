//! Typed output documents for the `k3nef` binary.
//!
//! Every run prints exactly one document to stdout: on success an
//! envelope with a `payload`, on a violated hypothesis an envelope with
//! an `error` (and exit code 2). The JSON layout is versioned by
//! [`SCHEMA_VERSION`] and described in `docs/output-schema.json`.
//! Conventions: rational numbers are strings `"p/q"` in lowest terms
//! with positive denominator; cone rays are arrays of integers
//! (primitive, sorted); divisor coordinate lists are rational strings.

use serde::{Deserialize, Serialize};

use k3nef_core::cone::RatCone;
use k3nef_core::picard::Div;
use k3nef_core::ratio::{rat_str, Rat};

pub const SCHEMA_VERSION: &str = "1";

/// Echo of the invocation that produced a document.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Request {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    pub format: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search_bound: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub svg: Option<String>,
}

impl Request {
    pub fn new(command: &str, format: &str) -> Self {
        Request {
            command: command.to_string(),
            case: None,
            k: None,
            n: None,
            format: format.to_string(),
            search_bound: None,
            svg: None,
        }
    }
}

/// A violated hypothesis, reported instead of a payload.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ErrorDoc {
    /// Stable machine-readable identifier (snake_case).
    pub code: String,
    /// The mathematical hypothesis that failed, when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<String>,
    pub message: String,
}

impl ErrorDoc {
    pub fn from_core(err: &k3nef_core::Error) -> Self {
        ErrorDoc {
            code: err.code().to_string(),
            hypothesis: err.hypothesis(),
            message: err.to_string(),
        }
    }
}

/// The single top-level document printed by every invocation.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OutputDocument<T> {
    pub schema_version: String,
    pub request: Request,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub payload: Option<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorDoc>,
}

impl<T> OutputDocument<T> {
    pub fn ok(request: Request, payload: T) -> Self {
        OutputDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            request,
            payload: Some(payload),
            error: None,
        }
    }

    pub fn err(request: Request, error: ErrorDoc) -> Self {
        OutputDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            request,
            payload: None,
            error: Some(error),
        }
    }
}

/// A cone in canonical form: primitive integer rays, sorted.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConeDoc {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub pointed: bool,
}

impl ConeDoc {
    pub fn from_cone(c: &RatCone) -> Self {
        ConeDoc {
            dim: c.dim(),
            rays: c
                .rays_i64()
                .expect("ray coordinates exceed the documented i64 range"),
            pointed: c.is_pointed(),
        }
    }
}

pub fn rat_vec(xs: &[Rat]) -> Vec<String> {
    xs.iter().map(rat_str).collect()
}

pub fn div_doc(d: &Div) -> Vec<String> {
    rat_vec(&d.coords())
}

// ---- per-command payloads -------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GeneratorDoc {
    pub class: Vec<i64>,
    pub self_intersection: String,
    pub genus: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SurfacePayload {
    pub case: String,
    pub k: i64,
    pub gram: Vec<Vec<i64>>,
    pub eff_cone: ConeDoc,
    pub nef_cone: ConeDoc,
    pub nef_matches_closed_form: bool,
    pub nef_generators: Vec<GeneratorDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HilbNefPayload {
    pub case: String,
    pub k: i64,
    pub n: i64,
    pub threshold_hypothesis: String,
    pub min_threshold_n: i64,
    pub nef_cone: ConeDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MoriCurveDoc {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<String>,
    /// Pairing functional against `(w1^[n], w2^[n], B/2)` coordinates.
    pub functional: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MoriPayload {
    pub case: String,
    pub k: i64,
    pub n: i64,
    pub curves: Vec<MoriCurveDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LambdaPayload {
    pub case: String,
    pub k: i64,
    pub n: i64,
    /// `"closed_form"` for case I, `"computed"` (by duality) otherwise.
    pub method: String,
    pub lambda_cone: ConeDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_closed_form: Option<bool>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SliceDoc {
    pub h: Vec<String>,
    pub d: Vec<String>,
    pub h_sq: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CandidateDoc {
    pub critical: Vec<String>,
    pub destabilizer: Vec<String>,
    pub center: String,
    pub radius_sq: String,
    pub degenerate: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WallsPayload {
    pub case: String,
    pub k: i64,
    pub n: i64,
    pub slice: SliceDoc,
    pub candidates: Vec<CandidateDoc>,
    pub chosen: CandidateDoc,
    pub varrho: String,
    pub certified: bool,
    pub vertical_s: String,
    pub nef_divisor: Vec<String>,
    pub nef_ray: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub svg_path: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct KnutsenDoc {
    pub l: Vec<String>,
    pub l_sq: String,
    pub min_l_sq: i64,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    pub exhaustive: bool,
    pub bound: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BoundsPayload {
    pub case: String,
    pub k: i64,
    pub n: i64,
    pub n_prime: i64,
    pub j: i64,
    pub outer: ConeDoc,
    pub inner: ConeDoc,
    pub knutsen: KnutsenDoc,
    /// Present when `k >= 2n`: the very-ampleness inner bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub improved: Option<ConeDoc>,
    /// Present for `(k, n) = (2, 2)`: the exactly known cone.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ConeDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NestedRowDoc {
    pub curve: String,
    pub entries: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DiffFlagDoc {
    pub curve: String,
    pub column: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NestedDivDoc {
    pub base: Vec<String>,
    pub diff: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckDoc {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NestedPayload {
    pub case: String,
    pub k: i64,
    pub n: i64,
    pub columns: Vec<String>,
    pub printed_table: Vec<NestedRowDoc>,
    pub diff_flags: Vec<DiffFlagDoc>,
    pub curve_order: Vec<String>,
    pub generators: Vec<NestedDivDoc>,
    /// `pairings[i][j]`: generator `i` against `curve_order[j]`.
    pub pairings: Vec<Vec<String>>,
    pub checks: Vec<CheckDoc>,
    pub all_nonneg: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct QprimeDoc {
    pub w1: Vec<String>,
    pub w2: Vec<String>,
    pub b_lemma: Vec<String>,
    pub b_corollary: Vec<String>,
    pub discrepant: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GammaSampleDoc {
    pub t: String,
    pub class: Vec<String>,
    pub ample: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GammaSideDoc {
    pub ample_iff: String,
    pub samples: Vec<GammaSampleDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GammaDoc {
    pub corollary: GammaSideDoc,
    pub lemma: GammaSideDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FiberSampleDoc {
    pub t: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RuledSurfaceDoc {
    pub fiber_dot_b: i64,
    pub w1_dot_fiber: i64,
    pub w2_dot_fiber: i64,
    pub hn_slope_mu1: String,
    pub gamma_fiber_samples: Vec<FiberSampleDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SpecialPayload {
    pub nef_cone: ConeDoc,
    pub qprime: QprimeDoc,
    pub gamma: GammaDoc,
    pub ruled_surface: RuledSurfaceDoc,
    /// `rho(3, 1, 2)`: the Brill-Noether number of the hyperelliptic
    /// pencil forcing the quadric geometry.
    pub brill_noether_rho: i64,
    /// Values of k for which the boundary class pairs to zero with the
    /// section curve on `X^[k]`.
    pub orthogonality_zero_for_k: Vec<i64>,
}
