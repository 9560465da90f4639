//! `rackcover`: classify extensions and double extensions of finite racks
//! stored as JSON documents.
//!
//! Exit codes: 0 success, 1 I/O or JSON syntax, 2 semantic validation.
//! Classification outcomes never change the exit code.

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rackcover::classify::{classify, classify_square};
use rackcover::commutator::{centralize1, centralize2, commutator, pi0, Variant};
use rackcover::corpus::{selftest, Status};
use rackcover::doc::{parse, CongruenceDoc, Document, MorphismDoc, RackDoc, ReportDoc, SquareDoc};
use rackcover::group::{conj_functor, cyclic_group, quaternion_group, sym_group};
use rackcover::paths::{x_alpha_bounded, x_alpha_stabilized};
use rackcover::{Congruence, Error, ExtSquare, Morphism, Rack};

#[derive(Parser)]
#[command(
    name = "rackcover",
    version,
    about = "Coverings and double coverings of finite racks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a document and print it in normal form.
    Validate { file: String },
    /// Print a generated rack.
    Gen {
        kind: Kind,
        /// Size parameter; ignored for `quaternion`.
        n: Option<usize>,
    },
    /// Classify a morphism: covering, trivial covering, normal covering.
    Classify { file: String },
    /// Classify a square: double extension and the three double covering notions.
    ClassifySquare { file: String },
    /// The covering reflection of a morphism and its unit.
    Centralize { file: String },
    /// The double covering reflection of a double extension and its unit.
    CentralizeSquare { file: String },
    /// `[R, S]` on a rack, with R and S given as JSON lists of pairs.
    Commutator {
        file: String,
        #[arg(long)]
        r: String,
        #[arg(long)]
        s: String,
        #[arg(long, default_value = "i")]
        variant: Variant,
    },
    /// The unit `A → π0(A)`.
    Pi0 { file: String },
    /// Endpoint pairs of horns of bounded length in a double extension.
    OracleVolumes {
        file: String,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        /// Search until no new endpoint state appears; ignores `--max-len`.
        #[arg(long)]
        stabilize: bool,
    },
    /// Recompute the named examples.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Trivial,
    Dihedral,
    Cyclic,
    ConjSym,
    ConjCyclic,
    Quaternion,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn io_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn read(path: &str) -> Result<Document, Failure> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(drop)
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| io_failure(format!("{path}: {e}")))?;
    parse(&text).map_err(|e| io_failure(format!("{path}: {e}")))
}

fn read_rack(path: &str) -> Result<Rack, Failure> {
    match read(path)? {
        Document::Rack(d) => Ok(d.to_rack()?),
        other => Err(invalid(format!(
            "{path}: expected a rack, found a {}",
            other.type_name()
        ))),
    }
}

fn read_morphism(path: &str) -> Result<Morphism, Failure> {
    match read(path)? {
        Document::Morphism(d) => Ok(d.to_morphism()?),
        other => Err(invalid(format!(
            "{path}: expected a morphism, found a {}",
            other.type_name()
        ))),
    }
}

fn read_square(path: &str) -> Result<ExtSquare, Failure> {
    match read(path)? {
        Document::Square(d) => Ok(d.to_square()?),
        other => Err(invalid(format!(
            "{path}: expected a square, found a {}",
            other.type_name()
        ))),
    }
}

fn pairs(arg: &str, a: &Rack) -> Result<Congruence, Failure> {
    let list: Vec<(usize, usize)> =
        serde_json::from_str(arg).map_err(|e| io_failure(format!("pair list {arg}: {e}")))?;
    Ok(Congruence::generated(a, &list)?)
}

fn generate(kind: Kind, n: Option<usize>) -> Result<Rack, Failure> {
    let need = || n.ok_or_else(|| invalid("this kind needs a size"));
    Ok(match kind {
        Kind::Trivial => Rack::trivial(need()?),
        Kind::Dihedral => Rack::dihedral(need()?),
        Kind::Cyclic => Rack::cyclic(need()?),
        Kind::ConjSym => {
            let n = need()?;
            if n > 6 {
                return Err(invalid("conj-sym is limited to n ≤ 6"));
            }
            conj_functor(&sym_group(n)).named(format!("Conj(S{n})"))
        }
        Kind::ConjCyclic => {
            let n = need()?;
            conj_functor(&cyclic_group(n)).named(format!("Conj(Z{n})"))
        }
        Kind::Quaternion => conj_functor(&quaternion_group()).named("Conj(Q8)"),
    })
}

fn run(cmd: Command) -> Result<(Value, u8), Failure> {
    let doc = |d: Document| serde_json::to_value(d).expect("documents serialize");
    let out = match cmd {
        Command::Validate { file } => {
            let d = read(&file)?;
            d.validate()?;
            doc(d)
        }
        Command::Gen { kind, n } => doc(Document::Rack(RackDoc::from_rack(&generate(kind, n)?))),
        Command::Classify { file } => {
            let f = read_morphism(&file)?;
            doc(Document::Report(ReportDoc::from(&classify(&f)?)))
        }
        Command::ClassifySquare { file } => {
            let sq = read_square(&file)?;
            doc(Document::Report(ReportDoc::from(&classify_square(&sq)?)))
        }
        Command::Centralize { file } => {
            let f = read_morphism(&file)?;
            let (g, unit) = centralize1(&f)?;
            json!({
                "quotient": doc(Document::Morphism(MorphismDoc::from_morphism(&g))),
                "unit": doc(Document::Morphism(MorphismDoc::from_morphism(&unit))),
            })
        }
        Command::CentralizeSquare { file } => {
            let sq = read_square(&file)?;
            let (q, unit) = centralize2(&sq)?;
            json!({
                "quotient": doc(Document::Square(SquareDoc::from_square(&q))),
                "unit": doc(Document::Morphism(MorphismDoc::from_morphism(&unit))),
            })
        }
        Command::Commutator {
            file,
            r,
            s,
            variant,
        } => {
            let a = read_rack(&file)?;
            let c = commutator(&pairs(&r, &a)?, &pairs(&s, &a)?, variant)?;
            doc(Document::Congruence(CongruenceDoc::from_congruence(&c)))
        }
        Command::Pi0 { file } => {
            let (_, unit) = pi0(&read_rack(&file)?);
            doc(Document::Morphism(MorphismDoc::from_morphism(&unit)))
        }
        Command::OracleVolumes {
            file,
            max_len,
            stabilize,
        } => {
            let sq = read_square(&file)?;
            let o = if stabilize {
                x_alpha_stabilized(&sq)?
            } else {
                x_alpha_bounded(&sq, max_len)?
            };
            json!({"pairs": o.pairs, "bound": o.bound, "stabilized": o.stabilized})
        }
        Command::Selftest => {
            let checks = selftest();
            let failures = checks.iter().filter(|c| c.status == Status::Fail).count();
            let deviations = checks
                .iter()
                .filter(|c| c.status == Status::Deviation)
                .count();
            for c in &checks {
                if c.status != Status::Pass {
                    eprintln!("{:?} {}: {}", c.status, c.name, c.detail);
                }
            }
            let v = json!({"checks": checks, "failures": failures, "deviations": deviations});
            return Ok((v, if failures == 0 { 0 } else { 2 }));
        }
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((v, code)) => {
            let text = serde_json::to_string(&v).expect("values serialize");
            // a closed pipe is not an error of ours
            let _ = writeln!(std::io::stdout(), "{text}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
