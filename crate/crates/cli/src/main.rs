use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nilorb::correspondence::{
    identify, identify_parabolic, parabolic_representative, pattern_to_matrix, tex_table,
};
use nilorb::correspondence::{matrix_tex, pattern_tex};
use nilorb::harness::{run_suite, CheckFamily, Seed, Status, SuiteConfig};
use nilorb::linalg::{format_rational, ExactMatrix, GroupKind, PatternKind};
use nilorb::patterns::{count_borel, enumerate, LinkPattern, SpaceSpec};
use nilorb::quiver::{ar_sequences, pattern_to_summands};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "nilorb",
    version,
    about = "Borel and parabolic orbits of 2-nilpotent elements in sp_n and o_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the canonical patterns for a block vector
    Enumerate(Common),
    /// Count the patterns (recurrence for the Borel case)
    Count(Common),
    /// Representative matrix of a pattern
    Repr(Common),
    /// Pattern and orbit dimension of a 2-nilpotent matrix
    Identify(Common),
    /// Decomposition of the symmetric representation of a pattern
    Summands(Common),
    /// Almost split sequences of A(l)
    Ar(Common),
    /// Run the verification suite
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct Common {
    /// sp or o
    #[arg(long, value_parser = parse_kind)]
    group: Option<PatternKind>,
    /// Matrix size n
    #[arg(long)]
    n: Option<usize>,
    /// Rank l (n = 2l, or pass --n for odd orthogonal)
    #[arg(long)]
    rank: Option<usize>,
    /// Block sizes b_1,…,b_k of the flag (default all ones)
    #[arg(long, value_delimiter = ',')]
    blocks: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Input file (stdin when absent)
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output file (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// Random group elements per pattern
    #[arg(long, default_value_t = 10)]
    trials: usize,
    /// Restrict to these check families
    #[arg(long, value_delimiter = ',')]
    families: Option<Vec<String>>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Tex,
    Text,
    Dot,
}

fn parse_kind(s: &str) -> Result<PatternKind, String> {
    PatternKind::parse(s).map_err(|e| e.to_string())
}

/// Failures that end the process: input problems exit with 2, failed
/// verification with 1.
enum Failure {
    Input(String),
    Verification(String),
}

impl From<nilorb::Error> for Failure {
    fn from(e: nilorb::Error) -> Self {
        match e {
            nilorb::Error::Malformed(m) => Failure::Input(format!("malformed input: {m}")),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome<T = ()> = Result<T, Failure>;

fn input_error<T>(msg: impl Into<String>) -> Outcome<T> {
    Err(Failure::Input(msg.into()))
}

impl Common {
    fn kind(&self) -> Outcome<PatternKind> {
        self.group
            .ok_or_else(|| Failure::Input("--group sp|o is required".into()))
    }

    fn group(&self) -> Outcome<GroupKind> {
        let kind = self.kind()?;
        let n = match (self.n, self.rank) {
            (Some(n), Some(l)) if n / 2 != l => {
                return input_error(format!("--n {n} does not have rank {l}"))
            }
            (Some(n), _) => n,
            (None, Some(l)) => 2 * l,
            (None, None) => match &self.blocks {
                Some(b) => 2 * b.iter().sum::<usize>(),
                None => return input_error("--n or --rank is required"),
            },
        };
        Ok(GroupKind::from_size(kind, n)?)
    }

    fn rank(&self) -> Outcome<usize> {
        match (self.rank, self.n) {
            (Some(l), _) => Ok(l),
            (None, Some(n)) => Ok(n / 2),
            (None, None) => match &self.blocks {
                Some(b) => Ok(b.iter().sum()),
                None => input_error("--rank or --n is required"),
            },
        }
    }

    fn blocks(&self) -> Outcome<Vec<usize>> {
        match &self.blocks {
            Some(b) => Ok(b.clone()),
            None => Ok(vec![1; self.rank()?]),
        }
    }

    fn spec(&self) -> Outcome<SpaceSpec> {
        let g = self.group()?;
        Ok(SpaceSpec::from_blocks(g, &self.blocks()?)?)
    }

    fn read_input(&self) -> Outcome<String> {
        let mut text = String::new();
        match &self.input {
            Some(path) => {
                text = fs::read_to_string(path)
                    .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?
            }
            None => {
                io::stdin().read_to_string(&mut text)?;
            }
        }
        Ok(text)
    }

    /// A pattern from JSON, or from arc notation such as `{2->1, 3^}` using
    /// --group and --blocks.
    fn read_pattern(&self) -> Outcome<LinkPattern> {
        let text = self.read_input()?;
        let trimmed = text.trim();
        if trimmed.contains('"') {
            let p = LinkPattern::from_json(trimmed)?;
            if let Some(kind) = self.group {
                if kind != p.kind() {
                    return input_error(format!(
                        "pattern is {} but --group is {}",
                        p.kind().as_str(),
                        kind.as_str()
                    ));
                }
            }
            Ok(p)
        } else {
            Ok(LinkPattern::parse_arcs(
                self.kind()?,
                self.blocks()?,
                trimmed,
            )?)
        }
    }

    /// The flag a pattern lives on: its block vector inside the group given
    /// by --n/--rank, or the smallest even-size group fitting it.
    fn spec_for(&self, p: &LinkPattern) -> Outcome<SpaceSpec> {
        let l: usize = p.block_vector().iter().sum();
        let n = match (self.n, self.rank) {
            (Some(n), _) => n,
            (None, Some(r)) => 2 * r,
            (None, None) => 2 * l,
        };
        let g = GroupKind::from_size(p.kind(), n)?;
        Ok(SpaceSpec::from_blocks(g, p.block_vector())?)
    }

    fn write(&self, text: &str) -> Outcome {
        match &self.out {
            Some(path) => fs::write(path, text)
                .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
            None => {
                let mut out = io::stdout().lock();
                out.write_all(text.as_bytes())?;
                out.flush()?;
                Ok(())
            }
        }
    }

    fn unsupported<T>(&self, command: &str) -> Outcome<T> {
        let name = match self.format {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Tex => "tex",
            Format::Text => "text",
            Format::Dot => "dot",
        };
        input_error(format!("{command} does not support --format {name}"))
    }
}

fn matrix_csv(x: &ExactMatrix) -> String {
    let mut out = String::new();
    for r in 0..x.rows() {
        let row: Vec<String> = x.row(r).iter().map(format_rational).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn matrix_text(x: &ExactMatrix) -> String {
    let cells: Vec<Vec<String>> = (0..x.rows())
        .map(|r| x.row(r).iter().map(format_rational).collect())
        .collect();
    let width = cells
        .iter()
        .flatten()
        .map(|c| c.chars().count())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for row in cells {
        let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&padded.join(" "));
        out.push('\n');
    }
    out
}

fn enumerate_cmd(args: &Common) -> Outcome {
    let kind = args.kind()?;
    let b = args.blocks()?;
    let patterns = enumerate(kind, &b);
    let out = match args.format {
        Format::Text => patterns.iter().map(|p| format!("{p}\n")).collect(),
        Format::Json => patterns.iter().map(|p| p.to_json() + "\n").collect(),
        Format::Csv => {
            let mut s = String::from("index,pattern,arcs,nilradical\n");
            for (i, p) in patterns.iter().enumerate() {
                s.push_str(&format!(
                    "{},\"{p}\",{},{}\n",
                    i + 1,
                    p.arcs().len(),
                    p.is_nilradical()
                ));
            }
            s
        }
        Format::Tex => {
            let spec = match args.n.or(args.rank) {
                Some(_) => args.spec()?,
                None => SpaceSpec::from_blocks(
                    GroupKind::from_size(kind, 2 * b.iter().sum::<usize>())?,
                    &b,
                )?,
            };
            let entries = patterns
                .iter()
                .map(|p| Ok((p.clone(), parabolic_representative(p, &spec)?)))
                .collect::<nilorb::Result<Vec<_>>>()?;
            tex_table(&entries)
        }
        Format::Dot => return args.unsupported("enumerate"),
    };
    args.write(&out)
}

fn count_cmd(args: &Common) -> Outcome {
    let kind = args.kind()?;
    let b = args.blocks()?;
    let (count, method) = if b.iter().all(|&x| x == 1) {
        (count_borel(kind, b.len()).to_string(), "recurrence")
    } else {
        (enumerate(kind, &b).len().to_string(), "enumeration")
    };
    let out = match args.format {
        Format::Text => format!("{count} ({method})\n"),
        Format::Json => format!(
            "{}\n",
            json!({"kind": kind.as_str(), "b": b, "count": count, "method": method})
        ),
        Format::Csv => format!(
            "kind,b,count,method\n{},\"{b:?}\",{count},{method}\n",
            kind.as_str()
        ),
        _ => return args.unsupported("count"),
    };
    args.write(&out)
}

fn repr_cmd(args: &Common) -> Outcome {
    let p = args.read_pattern()?;
    let spec = args.spec_for(&p)?;
    let x = if spec.is_borel() {
        pattern_to_matrix(&p, spec.group())?
    } else {
        parabolic_representative(&p, &spec)?
    };
    let out = match args.format {
        Format::Json => x.to_json() + "\n",
        Format::Csv => matrix_csv(&x),
        Format::Tex => format!("{}\n{}\n", pattern_tex(&p), matrix_tex(&x)),
        Format::Text => matrix_text(&x),
        Format::Dot => return args.unsupported("repr"),
    };
    args.write(&out)
}

fn identify_cmd(args: &Common) -> Outcome {
    let kind = args.kind()?;
    let x = ExactMatrix::from_json(args.read_input()?.trim())?;
    if !x.is_square() {
        return input_error(format!(
            "matrix must be square, got {}x{}",
            x.rows(),
            x.cols()
        ));
    }
    let g = GroupKind::from_size(kind, x.rows())?;
    let spec = match &args.blocks {
        Some(b) => SpaceSpec::from_blocks(g, b)?,
        None => SpaceSpec::borel(g),
    };
    let p = if spec.is_borel() {
        identify(&x, g)?
    } else {
        identify_parabolic(&x, &spec)?
    };
    let orbit_dim = spec.flag().orbit_dim(&x)?;
    let out = match args.format {
        Format::Json => format!(
            "{}\n",
            json!({"pattern": serde_json::from_str::<serde_json::Value>(&p.to_json()).expect("valid json"), "orbit_dim": orbit_dim})
        ),
        Format::Text => format!("{p}\norbit dimension {orbit_dim}\n"),
        Format::Csv => format!("pattern,orbit_dim\n\"{p}\",{orbit_dim}\n"),
        Format::Tex => format!("{}\n", pattern_tex(&p)),
        Format::Dot => return args.unsupported("identify"),
    };
    args.write(&out)
}

fn summands_cmd(args: &Common) -> Outcome {
    let p = args.read_pattern()?;
    let spec = args.spec_for(&p)?;
    let m = pattern_to_summands(&p, &spec)?;
    let out = match args.format {
        Format::Json => m.to_json() + "\n",
        Format::Text => format!("{m}\n"),
        Format::Csv => {
            let mut s = String::from("summand,multiplicity\n");
            for (x, k) in m.iter() {
                s.push_str(&format!("\"{x}\",{k}\n"));
            }
            s
        }
        _ => return args.unsupported("summands"),
    };
    args.write(&out)
}

fn ar_cmd(args: &Common) -> Outcome {
    let l = args.rank()?;
    if l == 0 {
        return input_error("A(l) needs rank l ≥ 1");
    }
    let report = ar_sequences(l);
    let out = match args.format {
        Format::Text => report.to_text(),
        Format::Dot => report.to_dot(),
        Format::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
        Format::Csv => {
            let mut s = String::from("tag,left,middle,right,exact\n");
            for q in &report.sequences {
                let mid: Vec<String> = q.middle.iter().map(ToString::to_string).collect();
                s.push_str(&format!(
                    "{},{},\"{}\",{},{}\n",
                    q.tag,
                    q.left,
                    mid.join(" + "),
                    q.right,
                    q.is_exact()
                ));
            }
            s
        }
        Format::Tex => return args.unsupported("ar"),
    };
    args.write(&out)
}

fn verify_cmd(v: &VerifyArgs) -> Outcome {
    let args = &v.common;
    let mut config = SuiteConfig {
        max_rank: args.rank.or(args.n.map(|n| n / 2)).unwrap_or(3),
        seed: Seed(args.seed),
        conjugations: v.trials,
        ..SuiteConfig::default()
    };
    if let Some(kind) = args.group {
        config.kinds = vec![kind];
    }
    if let Some(fams) = &v.families {
        config.families = fams
            .iter()
            .map(|f| {
                CheckFamily::parse(f)
                    .ok_or_else(|| Failure::Input(format!("unknown check family {f:?}")))
            })
            .collect::<Outcome<_>>()?;
    }
    let report = run_suite(&config);
    let summary = report.summary();
    match (args.format, &args.out) {
        (Format::Json, Some(_)) => {
            args.write(&(report.to_json() + "\n"))?;
            println!("{summary}");
        }
        (Format::Json, None) => {
            args.write(&(report.to_json() + "\n"))?;
            eprintln!("{summary}");
        }
        (Format::Text, _) => {
            let mut s = String::new();
            for e in &report.entries {
                let tag = if e.status == Status::Pass {
                    "PASS"
                } else {
                    "FAIL"
                };
                s.push_str(&format!("{tag} {} {}\n", e.test_id, e.details));
            }
            s.push_str(&summary);
            s.push('\n');
            args.write(&s)?;
        }
        _ => return args.unsupported("verify"),
    }
    if report.passed() {
        Ok(())
    } else {
        let first = report.failures().next().expect("a failure exists");
        Err(Failure::Verification(format!(
            "{} failed: {}",
            first.test_id, first.details
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Enumerate(a) => enumerate_cmd(a),
        Command::Count(a) => count_cmd(a),
        Command::Repr(a) => repr_cmd(a),
        Command::Identify(a) => identify_cmd(a),
        Command::Summands(a) => summands_cmd(a),
        Command::Ar(a) => ar_cmd(a),
        Command::Verify(v) => verify_cmd(v),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
