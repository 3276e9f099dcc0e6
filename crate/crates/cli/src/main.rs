//! `sdual`: duality of Schubert varieties in the four fundamental pairs of
//! homogeneous spaces, on the command line.
//!
//! Spaces are written `a:R,N` (Grassmannian `G(R, N)`, `2R < N`), `d:P`
//! (spinor variety of a `4P+2`-dimensional quadratic space) and `e6:K` with
//! `K` in `{1, 3}`. Schubert indices are written the way the combinatorics
//! reads: increasing integer lists for type A, sign strings like `+-++-` for
//! type D, reduced words like `6,5,4,3,1` for E6.
//!
//! Exit codes: 0 success (and suitable), 3 valid input but unsuitable,
//! 64 parse error, 65 index/space mismatch, 66 enumeration too large,
//! 1 failed check suite or internal error.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use schubert_duality::dualcore::{DualError, DualityEngine, DualityOutcome, Method};
use schubert_duality::quiver::{self, Format};
use schubert_duality::rootsys::{Family, RootDatum, RootsysError, SchubertIndex};
use schubert_duality::verify;

#[derive(Parser)]
#[command(name = "sdual", version, about = "Dual varieties of Schubert varieties")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the dual of one Schubert variety.
    Dual {
        /// Space tag: a:R,N | d:P | e6:K (K in {1,3}).
        #[arg(long)]
        space: String,
        /// Schubert index: list "2,4,5", signs "+-++-", or word "6,5,4,3,1".
        #[arg(long, visible_alias = "word", allow_hyphen_values = true)]
        index: String,
        /// auto | closed-form | oracle (closed form exists for a/d only).
        #[arg(long, default_value = "auto")]
        method: String,
    },
    /// List every Schubert class of a space with its dual.
    Enumerate {
        #[arg(long)]
        space: String,
        /// Keep only the suitable classes.
        #[arg(long)]
        suitable_only: bool,
        /// json | tsv.
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Run a verification suite.
    Check {
        /// Required for the biduality and equivalence suites.
        #[arg(long)]
        space: Option<String>,
        /// biduality | equivalence | h0 | octonion | isotropic.
        #[arg(long)]
        suite: String,
    },
    /// Emit the tangent-space quiver, optionally marking one class's ideal.
    Quiver {
        #[arg(long)]
        space: String,
        #[arg(long, visible_alias = "word", allow_hyphen_values = true)]
        index: Option<String>,
        /// dot | ascii | json.
        #[arg(long, default_value = "ascii")]
        format: String,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into() }
    }
}

fn parse_space(s: &str) -> Result<Family, Failure> {
    let bad = |msg: &str| Failure::new(64, format!("bad space {s:?}: {msg}"));
    let (kind, rest) = s.split_once(':').ok_or_else(|| bad("expected kind:params"))?;
    match kind {
        "a" => {
            let (r, n) = rest.split_once(',').ok_or_else(|| bad("expected a:R,N"))?;
            let r: usize = r.trim().parse().map_err(|_| bad("R is not an integer"))?;
            let n: usize = n.trim().parse().map_err(|_| bad("N is not an integer"))?;
            Ok(Family::A { r, n })
        }
        "d" => {
            let p: usize = rest.trim().parse().map_err(|_| bad("P is not an integer"))?;
            Ok(Family::Dspin { p })
        }
        "e6" => match rest.trim() {
            "1" => Ok(Family::E6P1),
            "3" => Ok(Family::E6P3),
            _ => Err(bad("E6 node must be 1 or 3")),
        },
        _ => Err(bad("kind must be a, d or e6")),
    }
}

fn parse_index(family: Family, s: &str) -> Result<SchubertIndex, Failure> {
    let bad = |msg: &str| Failure::new(64, format!("bad index {s:?}: {msg}"));
    match family {
        Family::A { .. } => {
            let list: Result<Vec<usize>, _> =
                s.split(',').map(|x| x.trim().parse::<usize>()).collect();
            Ok(SchubertIndex::List(list.map_err(|_| bad("expected integers like 2,4,5"))?))
        }
        Family::Dspin { .. } => {
            let signs: Result<Vec<i8>, Failure> = s
                .chars()
                .map(|c| match c {
                    '+' => Ok(1),
                    '-' => Ok(-1),
                    _ => Err(bad("expected a +/- string like +-++-")),
                })
                .collect();
            Ok(SchubertIndex::Signs(signs?))
        }
        Family::E6P1 | Family::E6P3 => {
            if s.is_empty() || s == "e" {
                return Ok(SchubertIndex::Word(Vec::new()));
            }
            let word: Result<Vec<u8>, _> = s.split(',').map(|x| x.trim().parse::<u8>()).collect();
            Ok(SchubertIndex::Word(word.map_err(|_| bad("expected a word like 6,5,4,3,1"))?))
        }
    }
}

fn parse_method(s: &str) -> Result<Method, Failure> {
    match s {
        "auto" => Ok(Method::Auto),
        "closed-form" => Ok(Method::ClosedForm),
        "oracle" => Ok(Method::Oracle),
        _ => Err(Failure::new(64, format!("bad method {s:?}: expected auto|closed-form|oracle"))),
    }
}

fn datum_for(family: Family) -> Result<RootDatum, Failure> {
    RootDatum::new(family).map_err(|e| Failure::new(64, e.to_string()))
}

fn mismatch(e: RootsysError) -> Failure {
    Failure::new(65, e.to_string())
}

fn engine_error(e: DualError) -> Failure {
    match e {
        DualError::Index(e) => mismatch(e),
        DualError::TooLarge { detail } => Failure::new(66, detail),
        DualError::UnsupportedMethod(s) => Failure::new(64, s),
        other => Failure::new(1, other.to_string()),
    }
}

#[derive(Serialize)]
struct ResultDocument {
    space: String,
    index: String,
    suitable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    dual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lowest_weight: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
    method: String,
}

fn document(space: &str, idx: &SchubertIndex, out: &DualityOutcome, method: &str) -> ResultDocument {
    ResultDocument {
        space: space.to_string(),
        index: idx.to_string(),
        suitable: out.suitable,
        dual: out.dual.as_ref().map(|d| d.to_string()),
        lowest_weight: out.lowest_weight.as_ref().map(|w| w.0.clone()),
        witness: out
            .witness
            .as_ref()
            .map(|labels| labels.iter().map(|l| l.to_string()).collect()),
        method: method.to_string(),
    }
}

fn cmd_dual(space: &str, index: &str, method: &str) -> Result<u8, Failure> {
    let family = parse_space(space)?;
    let idx = parse_index(family, index)?;
    let method = parse_method(method)?;
    let datum = datum_for(family)?;
    datum.validate_index(&idx).map_err(mismatch)?;
    let engine = DualityEngine::new(datum);
    let out = engine.analyze(&idx, method).map_err(engine_error)?;
    let method_used = match method {
        Method::Oracle => "oracle",
        Method::ClosedForm => "closed-form",
        Method::Auto => match family {
            Family::A { .. } | Family::Dspin { .. } => "closed-form",
            _ => "oracle",
        },
    };
    let doc = document(space, &idx, &out, method_used);
    println!("{}", serde_json::to_string(&doc).expect("document serializes"));
    Ok(if out.suitable { 0 } else { 3 })
}

#[derive(Serialize)]
struct EnumRow {
    index: String,
    suitable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    dual: Option<String>,
}

fn cmd_enumerate(space: &str, suitable_only: bool, format: &str) -> Result<u8, Failure> {
    let family = parse_space(space)?;
    let engine = DualityEngine::new(datum_for(family)?);
    let rows = engine.enumerate_suitable(Method::Auto).map_err(engine_error)?;
    let rows: Vec<EnumRow> = rows
        .into_iter()
        .filter(|(_, o)| !suitable_only || o.suitable)
        .map(|(idx, o)| EnumRow {
            index: idx.to_string(),
            suitable: o.suitable,
            dual: o.dual.map(|d| d.to_string()),
        })
        .collect();
    match format {
        "json" => println!("{}", serde_json::to_string(&rows).expect("rows serialize")),
        "tsv" => {
            println!("index\tsuitable\tdual");
            for row in &rows {
                println!("{}\t{}\t{}", row.index, row.suitable, row.dual.as_deref().unwrap_or(""));
            }
        }
        other => return Err(Failure::new(64, format!("bad format {other:?}: expected json|tsv"))),
    }
    Ok(0)
}

fn cmd_check(space: Option<&str>, suite: &str) -> Result<u8, Failure> {
    let family = space.map(parse_space).transpose()?;
    let need_space =
        || family.ok_or_else(|| Failure::new(64, format!("suite {suite:?} needs --space")));
    let reports = match suite {
        "biduality" => verify::check_biduality(need_space()?).map_err(engine_error)?,
        "equivalence" => verify::check_equivalence(need_space()?).map_err(engine_error)?,
        "h0" => verify::check_h0().map_err(engine_error)?,
        "octonion" => verify::check_octonion(0xda1, 1000, 100),
        "isotropic" => verify::check_isotropic(0xda1, 100),
        other => {
            return Err(Failure::new(
                64,
                format!("bad suite {other:?}: expected biduality|equivalence|h0|octonion|isotropic"),
            ))
        }
    };
    print!("{}", verify::render(&reports));
    Ok(if verify::all_passed(&reports) { 0 } else { 1 })
}

fn cmd_quiver(space: &str, index: Option<&str>, format: &str) -> Result<u8, Failure> {
    let family = parse_space(space)?;
    let format: Format = format
        .parse()
        .map_err(|e: quiver::UnknownFormat| Failure::new(64, e.to_string()))?;
    let datum = datum_for(family)?;
    let q = quiver::build_hasse(&datum);
    let marked = match index {
        Some(s) => {
            let idx = parse_index(family, s)?;
            datum.validate_index(&idx).map_err(mismatch)?;
            Some(quiver::subquiver_qw(&q, &datum, &idx).map_err(mismatch)?)
        }
        None => None,
    };
    print!("{}", quiver::emit(&q, &datum, marked.as_ref(), format));
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match &cli.cmd {
        Cmd::Dual { space, index, method } => cmd_dual(space, index, method),
        Cmd::Enumerate { space, suitable_only, format } => {
            cmd_enumerate(space, *suitable_only, format)
        }
        Cmd::Check { space, suite } => cmd_check(space.as_deref(), suite),
        Cmd::Quiver { space, index, format } => cmd_quiver(space, index.as_deref(), format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("sdual: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
