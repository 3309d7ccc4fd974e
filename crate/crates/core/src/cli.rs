//! JSON command line front end.
//!
//! Every subcommand reads a problem file and prints one JSON object on
//! standard output. Malformed input exits with status 1 and a failed
//! precondition with status 2; both print `{"error": {"kind": ..., ...}}`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::lattice::{convex_hull, IntVector, LatticePolytope, Support};
use crate::mvol::{is_2_developed, mixed_volume_lattice_seeded, mv2_detailed, MV2Query};
use crate::resultant::{
    leading_sign_ratio, resultant_vertices, univariate_resultant, Grading, ResultantInput, VertexCheck,
};
use crate::vieta::{binomial_product_sign, vieta_sign, BinomialSystem};
use crate::Sign;

/// Environment variable supplying the seed when `--seed` is absent.
pub const SEED_ENV: &str = "RES_SIGN_SEED";

/// A problem file.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub dimension: usize,
    pub supports: Vec<Vec<Vec<i64>>>,
    #[serde(default)]
    pub zeta: Option<Vec<i64>>,
    /// Named weight vectors over the flattened supports.
    #[serde(default)]
    pub gradings: Option<BTreeMap<String, Vec<i64>>>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub exponent_a: Option<Vec<i64>>,
}

#[derive(Parser, Debug)]
#[command(name = "signres", version, about = "Exact 2-mixed volumes, Vieta signs and resultant sign ratios")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Common {
    /// Problem file (JSON).
    #[arg(long)]
    input: PathBuf,
    /// Lifting seed; overrides the environment and the file.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lattice mixed volume of the hulls of the supports.
    Mv(Common),
    /// 2-mixed volume with respect to `zeta`.
    Mv2(Common),
    /// Prickly / 2-developed verdict with respect to `zeta`.
    CheckDeveloped(Common),
    /// Vieta sign `(-1)^MV2(P; a)` for `exponent_a`.
    VietaSign(Common),
    /// Exact product of `x^a` over the roots of a binomial system.
    BinomialSign(Common),
    /// Sampled vertices of the resultant's Newton polytope.
    ResVertices {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 200)]
        budget: u64,
    },
    /// Sign of the ratio of two leading coefficients of the resultant.
    ResSign {
        #[command(flatten)]
        common: Common,
        /// Liftings sampled to confirm each grading selects one vertex.
        #[arg(long, default_value_t = 200)]
        budget: u64,
        /// Skip the vertex check.
        #[arg(long)]
        trust: bool,
        #[arg(long, default_value = "gamma")]
        gamma: String,
        #[arg(long, default_value = "sigma")]
        sigma: String,
    },
    /// Sylvester resultant of two dense univariate supports.
    Sylvester(Common),
}

/// Failure of a command, with its exit status.
#[derive(Debug)]
enum Failure {
    Input(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Lib(e) if e.is_precondition() => 2,
            _ => 1,
        }
    }

    fn to_json(&self) -> Value {
        let body = match self {
            Failure::Input(msg) => json!({ "kind": "malformed_input", "message": msg }),
            Failure::Lib(e) => {
                let mut body = json!({ "kind": e.kind(), "message": e.to_string() });
                if let Error::NotTwoDeveloped { witness } | Error::NotPrickly { witness } = e {
                    body["witness"] = json!(witness);
                }
                if let Error::GradingTie(name) = e {
                    body["grading"] = json!(name);
                }
                body
            }
        };
        json!({ "error": body })
    }
}

/// Parses `argv` (program name first) and runs the command. Returns the exit
/// status and the text for standard output.
pub fn run<I, T>(argv: I, env_seed: Option<String>) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (0, e.to_string());
            }
            let f = Failure::Input(e.to_string().trim().to_string());
            return (1, format!("{}\n", f.to_json()));
        }
    };
    match dispatch(&cli.command, env_seed.as_deref()) {
        Ok(v) => (0, format!("{v}\n")),
        Err(f) => (f.exit_code(), format!("{}\n", f.to_json())),
    }
}

fn dispatch(cmd: &Command, env_seed: Option<&str>) -> Result<Value, Failure> {
    let common = match cmd {
        Command::Mv(c)
        | Command::Mv2(c)
        | Command::CheckDeveloped(c)
        | Command::VietaSign(c)
        | Command::BinomialSign(c)
        | Command::Sylvester(c) => c,
        Command::ResVertices { common, .. } | Command::ResSign { common, .. } => common,
    };
    let Format::Json = common.format;
    let file = load(&common.input)?;
    let seed = resolve_seed(common.seed, env_seed, file.seed)?;
    match cmd {
        Command::Mv(_) => {
            let polys = polytopes(&file)?;
            Ok(json!({ "mixed_volume": mixed_volume_lattice_seeded(&polys, seed)?, "seed": seed }))
        }
        Command::Mv2(_) => {
            let query = MV2Query::new(polytopes(&file)?, required_vector(&file, file.zeta.as_ref(), "zeta")?)?;
            let r = mv2_detailed(&query, seed)?;
            Ok(json!({
                "mv2": r.value,
                "sign": Sign::from_parity(r.value.into()),
                "seed": r.subdivision.seed(),
            }))
        }
        Command::CheckDeveloped(_) => {
            let zeta = required_vector(&file, file.zeta.as_ref(), "zeta")?;
            Ok(serde_json::to_value(is_2_developed(&polytopes(&file)?, &zeta)?).expect("serializable report"))
        }
        Command::VietaSign(_) => {
            let a = required_vector(&file, file.exponent_a.as_ref(), "exponent_a")?;
            Ok(json!({ "sign": vieta_sign(&polytopes(&file)?, &a, seed)?, "seed": seed }))
        }
        Command::BinomialSign(_) => {
            let a = required_vector(&file, file.exponent_a.as_ref(), "exponent_a")?;
            let rows = file
                .supports
                .iter()
                .enumerate()
                .map(|(i, s)| match s.as_slice() {
                    [p, q] => Ok(IntVector::new(q.iter().zip(p).map(|(x, y)| x - y).collect())),
                    _ => Err(Failure::Input(format!("binomial support {i} must have exactly two points"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let sys = BinomialSystem::new(rows)?;
            Ok(json!({ "sign": binomial_product_sign(&sys, &a)? }))
        }
        Command::ResVertices { budget, .. } => {
            let sampled = resultant_vertices(&resultant_input(&file)?, *budget, seed)?;
            Ok(json!({ "vertices": sampled.vertices, "seeds_used": sampled.seeds_used, "seed": seed }))
        }
        Command::ResSign { budget, trust, gamma, sigma, .. } => {
            let input = resultant_input(&file)?;
            let g = grading(&file, &input, gamma)?;
            let s = grading(&file, &input, sigma)?;
            let check = if *trust {
                eprintln!("warning: gradings are assumed to select vertices of the Newton polytope");
                VertexCheck::Trust
            } else {
                VertexCheck::Sampled(*budget)
            };
            let r = leading_sign_ratio(&input, &g, &s, seed, check)?;
            Ok(json!({
                "ratio": r.ratio,
                "mv_parity": r.mv_parity,
                "mv2": r.mv2,
                "mixed_volume": r.mixed_volume,
                "seed": r.seed,
            }))
        }
        Command::Sylvester(_) => {
            let supports = supports(&file)?;
            let [f, g] = supports.as_slice() else {
                return Err(Failure::Input("sylvester needs exactly two supports".into()));
            };
            let poly = univariate_resultant(f, g)?;
            let terms: Vec<Value> =
                poly.terms().map(|(m, c)| json!({ "coefficient": big_to_json(c), "exponents": m })).collect();
            Ok(json!({ "variables": poly.variables(), "polynomial": terms, "text": poly.to_string() }))
        }
    }
}

fn big_to_json(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn load(path: &PathBuf) -> Result<ProblemFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let file: ProblemFile = serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    for (i, s) in file.supports.iter().enumerate() {
        if s.is_empty() {
            return Err(Failure::Input(format!("support {i} is empty")));
        }
        if let Some(p) = s.iter().find(|p| p.len() != file.dimension) {
            return Err(Failure::Input(format!(
                "support {i} has a point of length {}, expected {}",
                p.len(),
                file.dimension
            )));
        }
    }
    if let Some(gs) = &file.gradings {
        if let Some((name, _)) = gs.iter().find(|(_, w)| w.iter().any(|&x| x <= 0)) {
            return Err(Failure::Input(format!("grading {name} has a nonpositive weight")));
        }
    }
    Ok(file)
}

/// `--seed`, then the environment, then the file, then 0.
fn resolve_seed(flag: Option<u64>, env: Option<&str>, file: Option<u64>) -> Result<u64, Failure> {
    if let Some(s) = flag {
        return Ok(s);
    }
    if let Some(text) = env {
        return text.trim().parse().map_err(|_| Failure::Input(format!("{SEED_ENV} is not an unsigned integer")));
    }
    Ok(file.unwrap_or(0))
}

fn supports(file: &ProblemFile) -> Result<Vec<Support>, Failure> {
    if file.supports.is_empty() {
        return Err(Failure::Input("no supports given".into()));
    }
    file.supports
        .iter()
        .map(|s| Support::new(s.iter().map(|p| IntVector::new(p.clone()))).map_err(Failure::from))
        .collect()
}

fn polytopes(file: &ProblemFile) -> Result<Vec<LatticePolytope>, Failure> {
    supports(file)?.iter().map(|s| convex_hull(s).map_err(Failure::from)).collect()
}

fn required_vector(file: &ProblemFile, v: Option<&Vec<i64>>, name: &str) -> Result<IntVector, Failure> {
    let v = v.ok_or_else(|| Failure::Input(format!("missing field `{name}`")))?;
    if v.len() != file.dimension {
        return Err(Failure::Input(format!("`{name}` has length {}, expected {}", v.len(), file.dimension)));
    }
    Ok(IntVector::new(v.clone()))
}

fn resultant_input(file: &ProblemFile) -> Result<ResultantInput, Failure> {
    supports(file)?;
    Ok(ResultantInput::new(
        file.supports.iter().map(|s| s.iter().map(|p| IntVector::new(p.clone())).collect()).collect(),
    )?)
}

fn grading(file: &ProblemFile, input: &ResultantInput, name: &str) -> Result<Grading, Failure> {
    let w = file
        .gradings
        .as_ref()
        .and_then(|g| g.get(name))
        .ok_or_else(|| Failure::Input(format!("missing grading `{name}`")))?;
    Ok(Grading::new(input, w.clone())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_precedence() {
        assert_eq!(resolve_seed(Some(3), Some("5"), Some(7)).unwrap(), 3);
        assert_eq!(resolve_seed(None, Some("5"), Some(7)).unwrap(), 5);
        assert_eq!(resolve_seed(None, None, Some(7)).unwrap(), 7);
        assert_eq!(resolve_seed(None, None, None).unwrap(), 0);
        assert!(resolve_seed(None, Some("x"), None).is_err());
    }

    #[test]
    fn bad_arguments_exit_1() {
        let (code, out) = run(["signres", "frobnicate"], None);
        assert_eq!(code, 1);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["error"]["kind"], "malformed_input");
    }
}
