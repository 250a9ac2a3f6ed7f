//! `k3nef`: exact nef cones, Mori cones, Bridgeland walls, and small-n
//! bounds for Hilbert schemes of points on Picard-rank-2 K3 surfaces.
//!
//! Exit codes: 0 on success, 1 on malformed command lines, 2 when the
//! inputs are well-formed but violate a hypothesis of the requested
//! computation (the violated hypothesis is reported in a structured
//! error document on stdout, honoring `--format`).

use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use k3nef_core::bridgeland::{bm_nef_divisor, case1_wall_analysis, CandidateWall};
use k3nef_core::cone::{cone_equal, primitive};
use k3nef_core::hilb::{
    curve_functional, lambda_case1_closed_form, lambda_cone, min_threshold_n, mori_cone_hilb,
    nef_cone_hilb, threshold_hypothesis, HCurve,
};
use k3nef_core::nested::nested_verify;
use k3nef_core::picard::{
    genus_adjunction, intersect, make_surface, nef_cone_closed_form, nef_cone_x, Case, Div,
};
use k3nef_core::ratio::{frac, rat, rat_str};
use k3nef_core::smalln::{
    brill_noether, gamma_t_on_qprime, improved_bound_k_ge_2n, knutsen_check, nef_cone_n2k2,
    orthogonality_nk, qprime_restrictions, ruled_surface_pairings, sandwich_bounds, BSign,
};
use k3nef_core::Error;

use k3nef_cli::output::*;
use k3nef_cli::svg::walls_svg;
use k3nef_cli::text;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
        }
    }
}

fn parse_case(s: &str) -> Result<Case, String> {
    Case::from_str(s).map_err(|_| format!("expected I, II, or III, got {s:?}"))
}

const NUM_RANGE: std::ops::RangeInclusive<i64> = -1_000_000..=1_000_000;

#[derive(Args, Debug)]
struct SurfaceArgs {
    /// Lattice case: I, II, or III
    #[arg(long, value_parser = parse_case)]
    case: Case,
    /// Off-diagonal intersection number of the rank-2 lattice
    #[arg(long, value_parser = clap::value_parser!(i64).range(NUM_RANGE))]
    k: i64,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct HilbArgs {
    /// Lattice case: I, II, or III
    #[arg(long, value_parser = parse_case)]
    case: Case,
    /// Off-diagonal intersection number of the rank-2 lattice
    #[arg(long, value_parser = clap::value_parser!(i64).range(NUM_RANGE))]
    k: i64,
    /// Number of points of the Hilbert scheme
    #[arg(long, value_parser = clap::value_parser!(i64).range(NUM_RANGE))]
    n: i64,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct WallsArgs {
    #[command(flatten)]
    common: HilbArgs,
    /// Also render the wall picture to this SVG file
    #[arg(long)]
    svg: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[command(flatten)]
    common: HilbArgs,
    /// Per-coordinate bound for the very-ampleness witness scan
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(i64).range(1..=1000))]
    search_bound: i64,
}

#[derive(Args, Debug)]
struct FormatArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Parser, Debug)]
#[command(
    name = "k3nef",
    version,
    about = "Nef cones, Mori cones, Bridgeland walls, and small-n bounds \
             for Hilbert schemes of points on Picard-rank-2 K3 surfaces",
    after_help = "Exit codes: 0 success, 1 malformed command line, \
                  2 violated hypothesis (reported on stdout)."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Intersection lattice, effective cone, and nef cone of the surface
    Surface(SurfaceArgs),
    /// Nef cone of the Hilbert scheme X^[n] (above the threshold)
    HilbNef(HilbArgs),
    /// Extremal curve classes of the Mori cone of X^[n]
    Mori(HilbArgs),
    /// The positivity cone Lambda_n dual to the controlling curves
    Lambda(HilbArgs),
    /// Destabilizing-wall analysis in the (s, t) plane (case I, n > k)
    Walls(WallsArgs),
    /// Two-sided nef bounds below the threshold (case I, 1 < n < n')
    Bounds(BoundsArgs),
    /// Pairing table and nef generators of the nested scheme X^[n,n+1]
    Nested(HilbArgs),
    /// The complete n = k = 2 analysis: exact cone and its certificates
    #[command(name = "special-n2k2")]
    SpecialN2k2(FormatArgs),
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.cmd {
        Cmd::Surface(a) => cmd_surface(a),
        Cmd::HilbNef(a) => cmd_hilb_nef(a),
        Cmd::Mori(a) => cmd_mori(a),
        Cmd::Lambda(a) => cmd_lambda(a),
        Cmd::Walls(a) => cmd_walls(a),
        Cmd::Bounds(a) => cmd_bounds(a),
        Cmd::Nested(a) => cmd_nested(a),
        Cmd::SpecialN2k2(a) => cmd_special(a),
    }
}

/// A computed payload together with its text renderer.
type Rendered<T> = (T, fn(&T) -> String);

fn emit<T: serde::Serialize>(
    request: Request,
    format: Format,
    result: Result<Rendered<T>, Error>,
) -> i32 {
    match result {
        Ok((payload, render)) => {
            match format {
                Format::Json => {
                    let doc = OutputDocument::ok(request, payload);
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&doc).expect("serializable payload")
                    );
                }
                Format::Text => print!("{}", render(&payload)),
            }
            0
        }
        Err(err) => {
            let doc = ErrorDoc::from_core(&err);
            match format {
                Format::Json => {
                    let out: OutputDocument<T> = OutputDocument::err(request, doc);
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&out).expect("serializable error")
                    );
                }
                Format::Text => print!("{}", text::error_text(&request, &doc)),
            }
            2
        }
    }
}

fn require_case1(case: Case) -> Result<(), Error> {
    if case != Case::I {
        return Err(Error::Precondition {
            requirement: "case I".to_string(),
            got: format!("case {case}"),
        });
    }
    Ok(())
}

fn cmd_surface(a: SurfaceArgs) -> i32 {
    let mut req = Request::new("surface", a.format.name());
    req.case = Some(a.case.to_string());
    req.k = Some(a.k);
    let result = surface_payload(a.case, a.k).map(|p| (p, text::surface_text as fn(&_) -> String));
    emit(req, a.format, result)
}

fn surface_payload(case: Case, k: i64) -> Result<SurfacePayload, Error> {
    let s = make_surface(case, k)?;
    let eff = k3nef_core::picard::eff_cone_x(&s);
    let nef = nef_cone_x(&s)?;
    let closed = nef_cone_closed_form(&s);
    let generators = nef
        .rays_rat()
        .iter()
        .map(|ray| {
            let d = Div::new(ray[0].clone(), ray[1].clone());
            let class = ray
                .iter()
                .map(|x| i64::try_from(x.numer()).expect("primitive ray fits i64"))
                .collect();
            GeneratorDoc {
                class,
                self_intersection: rat_str(&intersect(&s, &d, &d)),
                genus: rat_str(&genus_adjunction(&s, &d)),
            }
        })
        .collect();
    let gram = s.gram();
    Ok(SurfacePayload {
        case: case.to_string(),
        k,
        gram: vec![gram[0].to_vec(), gram[1].to_vec()],
        eff_cone: ConeDoc::from_cone(&eff),
        nef_cone: ConeDoc::from_cone(&nef),
        nef_matches_closed_form: cone_equal(&nef, &closed),
        nef_generators: generators,
    })
}

fn cmd_hilb_nef(a: HilbArgs) -> i32 {
    let mut req = Request::new("hilb-nef", a.format.name());
    req.case = Some(a.case.to_string());
    req.k = Some(a.k);
    req.n = Some(a.n);
    let result = (|| {
        let s = make_surface(a.case, a.k)?;
        let nef = nef_cone_hilb(&s, a.n)?;
        Ok(HilbNefPayload {
            case: a.case.to_string(),
            k: a.k,
            n: a.n,
            threshold_hypothesis: threshold_hypothesis(a.case),
            min_threshold_n: min_threshold_n(&s)?,
            nef_cone: ConeDoc::from_cone(&nef),
        })
    })()
    .map(|p| (p, text::hilb_nef_text as fn(&_) -> String));
    emit(req, a.format, result)
}

fn cmd_mori(a: HilbArgs) -> i32 {
    let mut req = Request::new("mori", a.format.name());
    req.case = Some(a.case.to_string());
    req.k = Some(a.k);
    req.n = Some(a.n);
    let result = (|| {
        let s = make_surface(a.case, a.k)?;
        let curves = mori_cone_hilb(&s, a.n)?;
        let docs = curves
            .iter()
            .map(|c| {
                let f = curve_functional(&s, a.n, c);
                match c {
                    HCurve::Induced { class, genus } => MoriCurveDoc {
                        kind: "induced".to_string(),
                        class: Some(div_doc(class)),
                        genus: Some(rat_str(genus)),
                        functional: rat_vec(&f),
                    },
                    HCurve::Contracted => MoriCurveDoc {
                        kind: "contracted".to_string(),
                        class: None,
                        genus: None,
                        functional: rat_vec(&f),
                    },
                }
            })
            .collect();
        Ok(MoriPayload {
            case: a.case.to_string(),
            k: a.k,
            n: a.n,
            curves: docs,
        })
    })()
    .map(|p| (p, text::mori_text as fn(&_) -> String));
    emit(req, a.format, result)
}

fn cmd_lambda(a: HilbArgs) -> i32 {
    let mut req = Request::new("lambda", a.format.name());
    req.case = Some(a.case.to_string());
    req.k = Some(a.k);
    req.n = Some(a.n);
    let result = (|| {
        let s = make_surface(a.case, a.k)?;
        let (cone, method, matches) = if a.case == Case::I {
            let closed = lambda_case1_closed_form(a.k, a.n)?;
            let computed = lambda_cone(&s, a.n)?;
            let agree = cone_equal(&computed, &closed);
            (closed, "closed_form", Some(agree))
        } else {
            (lambda_cone(&s, a.n)?, "computed", None)
        };
        Ok(LambdaPayload {
            case: a.case.to_string(),
            k: a.k,
            n: a.n,
            method: method.to_string(),
            lambda_cone: ConeDoc::from_cone(&cone),
            matches_closed_form: matches,
        })
    })()
    .map(|p| (p, text::lambda_text as fn(&_) -> String));
    emit(req, a.format, result)
}

fn candidate_doc(c: &CandidateWall) -> CandidateDoc {
    CandidateDoc {
        critical: div_doc(&c.critical),
        destabilizer: div_doc(&c.destabilizer),
        center: rat_str(&c.wall.center),
        radius_sq: rat_str(&c.wall.radius_sq),
        degenerate: c.wall.is_degenerate(),
    }
}

fn cmd_walls(a: WallsArgs) -> i32 {
    let args = a.common;
    let mut req = Request::new("walls", args.format.name());
    req.case = Some(args.case.to_string());
    req.k = Some(args.k);
    req.n = Some(args.n);
    req.svg = a.svg.as_ref().map(|p| p.display().to_string());
    let svg_path = a.svg;
    let result = (|| {
        require_case1(args.case)?;
        let analysis = case1_wall_analysis(args.k, args.n)?;
        let nef_div = bm_nef_divisor(&analysis.slice, &analysis.chosen.wall.center)?;
        let nef_ray = primitive(&nef_div.coords())
            .expect("nonzero divisor")
            .iter()
            .map(|x| i64::try_from(x).expect("primitive ray fits i64"))
            .collect();
        Ok((analysis, nef_div, nef_ray))
    })();
    let result = match result {
        Err(e) => Err(e),
        Ok((analysis, nef_div, nef_ray)) => {
            // An unwritable path is an I/O failure, not a violated
            // hypothesis; report it on stderr with exit code 1.
            let written = match &svg_path {
                Some(path) => {
                    if let Err(io) = std::fs::write(path, walls_svg(&analysis)) {
                        eprintln!("error: cannot write {}: {io}", path.display());
                        return 1;
                    }
                    Some(path.display().to_string())
                }
                None => None,
            };
            Ok(WallsPayload {
                case: args.case.to_string(),
                k: args.k,
                n: args.n,
                slice: SliceDoc {
                    h: div_doc(analysis.slice.h()),
                    d: div_doc(analysis.slice.d()),
                    h_sq: rat_str(&analysis.slice.h_sq()),
                },
                candidates: analysis.candidates.iter().map(candidate_doc).collect(),
                chosen: candidate_doc(&analysis.chosen),
                varrho: rat_str(&analysis.varrho),
                certified: analysis.certified,
                vertical_s: rat_str(&analysis.vertical_s),
                nef_divisor: rat_vec(&nef_div.coords()),
                nef_ray,
                svg_path: written,
            })
        }
    };
    emit(
        req,
        args.format,
        result.map(|p| (p, text::walls_text as fn(&_) -> String)),
    )
}

fn cmd_bounds(a: BoundsArgs) -> i32 {
    let args = a.common;
    let mut req = Request::new("bounds", args.format.name());
    req.case = Some(args.case.to_string());
    req.k = Some(args.k);
    req.n = Some(args.n);
    req.search_bound = Some(a.search_bound);
    let result = (|| {
        require_case1(args.case)?;
        let sb = sandwich_bounds(args.k, args.n)?;
        let kn = knutsen_check(args.k, args.n, a.search_bound)?;
        let improved = if args.n >= 2 && args.k >= 2 * args.n {
            Some(ConeDoc::from_cone(&improved_bound_k_ge_2n(args.k, args.n)?))
        } else {
            None
        };
        let exact = if (args.k, args.n) == (2, 2) {
            Some(ConeDoc::from_cone(&nef_cone_n2k2()))
        } else {
            None
        };
        Ok(BoundsPayload {
            case: args.case.to_string(),
            k: args.k,
            n: args.n,
            n_prime: sb.n_prime,
            j: sb.j,
            outer: ConeDoc::from_cone(&sb.outer),
            inner: ConeDoc::from_cone(&sb.inner),
            knutsen: KnutsenDoc {
                l: div_doc(&kn.l),
                l_sq: rat_str(&kn.l_sq),
                min_l_sq: kn.min_l_sq,
                ok: kn.ok,
                witness: kn.witness.as_ref().map(div_doc),
                exhaustive: kn.exhaustive,
                bound: kn.bound,
            },
            improved,
            exact,
        })
    })()
    .map(|p| (p, text::bounds_text as fn(&_) -> String));
    emit(req, args.format, result)
}

fn cmd_nested(a: HilbArgs) -> i32 {
    let mut req = Request::new("nested", a.format.name());
    req.case = Some(a.case.to_string());
    req.k = Some(a.k);
    req.n = Some(a.n);
    let result = (|| {
        require_case1(a.case)?;
        let rep = nested_verify(a.k, a.n)?;
        let s = rep.surface;
        let columns: Vec<String> = k3nef_core::nested::NestedColumn::ALL
            .iter()
            .map(|c| c.to_string())
            .collect();
        let printed_table = rep
            .curves
            .iter()
            .map(|&curve| NestedRowDoc {
                curve: curve.to_string(),
                entries: k3nef_core::nested::NestedColumn::ALL
                    .iter()
                    .map(|&col| {
                        let v = k3nef_core::nested::nested_table_entry(&s, curve, col, true);
                        i64::try_from(v.numer()).expect("table entries are small integers")
                    })
                    .collect(),
            })
            .collect();
        Ok(NestedPayload {
            case: a.case.to_string(),
            k: a.k,
            n: a.n,
            columns,
            printed_table,
            diff_flags: rep
                .diff_flags
                .iter()
                .map(|(curve, col)| DiffFlagDoc {
                    curve: curve.to_string(),
                    column: col.to_string(),
                })
                .collect(),
            curve_order: rep.curves.iter().map(|c| c.to_string()).collect(),
            generators: rep
                .generators
                .iter()
                .map(|g| NestedDivDoc {
                    base: rat_vec(&g.base),
                    diff: rat_vec(&g.diff),
                })
                .collect(),
            pairings: rep.pairings.iter().map(|row| rat_vec(row)).collect(),
            checks: rep
                .checks
                .iter()
                .map(|(name, pass)| CheckDoc {
                    name: name.clone(),
                    pass: *pass,
                })
                .collect(),
            all_nonneg: rep.all_nonneg,
            ok: rep.ok,
        })
    })()
    .map(|p| (p, text::nested_text as fn(&_) -> String));
    emit(req, a.format, result)
}

fn gamma_side(sign: BSign, ample_iff: &str) -> GammaSideDoc {
    let grid = [frac(1, 10), rat(1), frac(19, 10), rat(2), frac(21, 10)];
    GammaSideDoc {
        ample_iff: ample_iff.to_string(),
        samples: grid
            .iter()
            .map(|t| {
                let (class, ample) = gamma_t_on_qprime(t, sign);
                GammaSampleDoc {
                    t: rat_str(t),
                    class: vec![rat_str(&class.p), rat_str(&class.q)],
                    ample,
                }
            })
            .collect(),
    }
}

fn cmd_special(a: FormatArgs) -> i32 {
    let req = Request::new("special-n2k2", a.format.name());
    let result = (|| {
        let q = qprime_restrictions();
        let ruled = ruled_surface_pairings();
        let fiber_samples = [rat(0), rat(1), rat(2)]
            .iter()
            .map(|t| FiberSampleDoc {
                t: rat_str(t),
                value: rat_str(&ruled.gamma_t_dot_fiber(t)),
            })
            .collect();
        let mut ks = Vec::new();
        for k in 2..=10 {
            if orthogonality_nk(k)? == rat(0) {
                ks.push(k);
            }
        }
        Ok(SpecialPayload {
            nef_cone: ConeDoc::from_cone(&nef_cone_n2k2()),
            qprime: QprimeDoc {
                w1: vec![rat_str(&q.w1.p), rat_str(&q.w1.q)],
                w2: vec![rat_str(&q.w2.p), rat_str(&q.w2.q)],
                b_lemma: vec![rat_str(&q.b_lemma.p), rat_str(&q.b_lemma.q)],
                b_corollary: vec![rat_str(&q.b_corollary.p), rat_str(&q.b_corollary.q)],
                discrepant: q.discrepant,
            },
            gamma: GammaDoc {
                corollary: gamma_side(BSign::Corollary, "t < 2"),
                lemma: gamma_side(BSign::Lemma, "t > 0"),
            },
            ruled_surface: RuledSurfaceDoc {
                fiber_dot_b: ruled.fiber_dot_b,
                w1_dot_fiber: ruled.w1_dot_fiber,
                w2_dot_fiber: ruled.w2_dot_fiber,
                hn_slope_mu1: rat_str(&ruled.hn_slope_mu1),
                gamma_fiber_samples: fiber_samples,
            },
            brill_noether_rho: brill_noether(3, 1, 2),
            orthogonality_zero_for_k: ks,
        })
    })()
    .map(|p| (p, text::special_text as fn(&_) -> String));
    emit(req, a.format, result)
}
