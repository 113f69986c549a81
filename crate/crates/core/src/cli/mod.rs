//! The `g2crystal` command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails (or a graph
//! exceeds its node budget), 2 for malformed or rejected input.

mod export;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cartan::{weyl_dim, DominantWeight, Index};
use crate::error::Error;
use crate::graph::{build_graph, BuildOptions, InfinitySuite, MonomialSuite, TensorSuite};
use crate::highest_weight::{
    enumerate_n_lambda, enumerate_t_lambda, highest_monomial, monomial_of_u, omega, omega_inv, parse_lambda,
    u_weight, TensorElement,
};
use crate::monomial::Monomial;
use crate::tableau::{self, MlTableau};
use crate::verify::{verify_lambda, Check};

pub use export::{graph_to_dot, graph_to_json};

#[derive(Debug, Parser)]
#[command(name = "g2crystal", version, about = "Monomial and tableau realizations of G2 highest-weight crystals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumRealization {
    Monomial,
    Tableau,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphRealization {
    Monomial,
    Tensor,
    Binf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ApplyRealization {
    Monomial,
    Tableau,
    Tensor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvertFrom {
    Monomial,
    Tensor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListFormat {
    Json,
    Lines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

fn lambda_arg(s: &str) -> Result<DominantWeight, String> {
    parse_lambda(s).map_err(|e| e.to_string())
}

fn checks_arg(s: &str) -> Result<Check, String> {
    s.parse().map_err(|_| format!("unknown check `{s}` (expected dim, iso, closure, omega or inverse)"))
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the elements of N(λ) or T(∞)^λ with weights and coordinates.
    Enumerate {
        #[arg(long, value_parser = lambda_arg, allow_hyphen_values = true)]
        lambda: DominantWeight,
        #[arg(long, value_enum, default_value = "monomial")]
        realization: EnumRealization,
        #[arg(long, value_enum, default_value = "lines")]
        format: ListFormat,
    },
    /// Emit a crystal graph.
    Graph {
        #[arg(long, value_parser = lambda_arg, allow_hyphen_values = true)]
        lambda: Option<DominantWeight>,
        #[arg(long, value_enum)]
        realization: GraphRealization,
        #[arg(long, value_enum, default_value = "json")]
        output: GraphFormat,
        #[arg(long)]
        max_depth: Option<usize>,
        #[arg(long, default_value_t = 1_000_000)]
        max_nodes: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Apply a word of Kashiwara operators left to right.
    Apply {
        #[arg(long, value_enum)]
        realization: ApplyRealization,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long, value_parser = lambda_arg, allow_hyphen_values = true)]
        lambda: Option<DominantWeight>,
        /// Space-separated operators such as "f1 f2 e1".
        #[arg(long)]
        ops: String,
    },
    /// Cross-check the two realizations of B(λ).
    Verify {
        #[arg(long, value_parser = lambda_arg, allow_hyphen_values = true)]
        lambda: DominantWeight,
        #[arg(long, value_delimiter = ',', value_parser = checks_arg)]
        checks: Option<Vec<Check>>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Print the Weyl dimension of the irreducible module.
    Dim {
        #[arg(long, value_parser = lambda_arg, allow_hyphen_values = true)]
        lambda: DominantWeight,
    },
    /// Map an element across ω_λ.
    Convert {
        #[arg(long, value_parser = lambda_arg, allow_hyphen_values = true)]
        lambda: Option<DominantWeight>,
        #[arg(long, value_enum)]
        from: ConvertFrom,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
}

/// A failed command: exit code plus message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn element(text: &str, e: Error) -> Self {
        let mut message = format!("invalid element `{text}`: {e}");
        if let Error::Parse { position, .. } = e {
            message.push_str(&format!("\n  {text}\n  {}^", " ".repeat(position)));
        }
        Failure::input(message)
    }
}

type Outcome = Result<(), Failure>;

/// Parses `argv`, runs the command and returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code() as u8;
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure { code: 1, message: format!("write failed: {e}") }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Enumerate { lambda, realization, format } => enumerate(lambda, realization, format, out),
        Command::Graph { lambda, realization, output, max_depth, max_nodes, workers } => {
            let opts = BuildOptions { max_nodes, max_depth, workers: workers.max(1) };
            graph(lambda, realization, output, &opts, out)
        }
        Command::Apply { realization, element, lambda, ops } => apply(realization, &element, lambda, &ops, out, err),
        Command::Verify { lambda, checks, workers } => {
            let checks = checks.unwrap_or_else(|| Check::ALL.to_vec());
            let opts = BuildOptions { workers: workers.max(1), ..BuildOptions::default() };
            verify(lambda, &checks, &opts, out)
        }
        Command::Dim { lambda } => writeln!(out, "{}", weyl_dim(lambda)).map_err(io_failure),
        Command::Convert { lambda, from, element } => convert(lambda, from, &element, out),
    }
}

fn enumerate(lambda: DominantWeight, realization: EnumRealization, format: ListFormat, out: &mut dyn Write) -> Outcome {
    let rows: Vec<export::ListedElement> = match realization {
        EnumRealization::Monomial => enumerate_n_lambda(lambda)
            .into_iter()
            .map(|u| {
                let n = monomial_of_u(&u, lambda).expect("enumerated exponents satisfy the conditions");
                export::ListedElement {
                    repr: n.to_string(),
                    weight: u_weight(&u, lambda),
                    coords: [u.u20, u.u11, u.u21, u.u12, u.u22, u.u13],
                }
            })
            .collect(),
        EnumRealization::Tableau => enumerate_t_lambda(lambda)
            .into_iter()
            .map(|t| {
                let c = t.counts();
                export::ListedElement {
                    weight: t.weight() + lambda.weight(),
                    repr: t.to_string(),
                    coords: [c.t23, c.t12, c.t13, c.t10, c.t1bar2, c.t1bar1],
                }
            })
            .collect(),
    };
    let name = match realization {
        EnumRealization::Monomial => "monomial",
        EnumRealization::Tableau => "tableau",
    };
    let text = match format {
        ListFormat::Json => export::list_to_json(lambda, name, &rows),
        ListFormat::Lines => export::list_to_lines(realization == EnumRealization::Monomial, &rows),
    };
    out.write_all(text.as_bytes()).map_err(io_failure)
}

fn graph(
    lambda: Option<DominantWeight>,
    realization: GraphRealization,
    format: GraphFormat,
    opts: &BuildOptions,
    out: &mut dyn Write,
) -> Outcome {
    let budget = |e: Error| Failure { code: 1, message: e.to_string() };
    let need_lambda = || lambda.ok_or_else(|| Failure::input("--lambda is required for this realization"));
    let text = match realization {
        GraphRealization::Monomial => {
            let lambda = need_lambda()?;
            let g = build_graph(&MonomialSuite::default(), highest_monomial(lambda), opts).map_err(budget)?;
            render(&g, Some(lambda), "monomial", format)
        }
        GraphRealization::Tensor => {
            let lambda = need_lambda()?;
            let g = build_graph(&TensorSuite, TensorElement::highest(lambda), opts).map_err(budget)?;
            render(&g, Some(lambda), "tensor", format)
        }
        GraphRealization::Binf => {
            if lambda.is_some() {
                return Err(Failure::input("--lambda does not apply to the binf realization"));
            }
            if opts.max_depth.is_none() {
                return Err(Failure::input("--max-depth is required for the infinite binf realization"));
            }
            let g = build_graph(&InfinitySuite, tableau::highest(), opts).map_err(budget)?;
            render(&g, None, "binf", format)
        }
    };
    out.write_all(text.as_bytes()).map_err(io_failure)
}

fn render<E>(g: &crate::graph::CrystalGraph<E>, lambda: Option<DominantWeight>, name: &str, format: GraphFormat) -> String {
    match format {
        GraphFormat::Json => graph_to_json(g, lambda, name),
        GraphFormat::Dot => graph_to_dot(g, lambda, name),
    }
}

#[derive(Debug, Clone, Copy)]
enum Op {
    F(Index),
    E(Index),
}

fn parse_ops(ops: &str) -> Result<Vec<(Op, String)>, Failure> {
    let mut out = Vec::new();
    let mut offset = 0;
    for token in ops.split(' ') {
        let at = offset;
        offset += token.len() + 1;
        if token.is_empty() {
            continue;
        }
        let op = match token {
            "f1" => Op::F(Index::One),
            "f2" => Op::F(Index::Two),
            "e1" => Op::E(Index::One),
            "e2" => Op::E(Index::Two),
            _ => {
                return Err(Failure::input(format!(
                    "unknown operator `{token}` at position {at} of --ops (expected f1, f2, e1 or e2)"
                )))
            }
        };
        out.push((op, token.to_string()));
    }
    Ok(out)
}

/// Elements `apply` can act on.
trait Operated: Sized + std::fmt::Display {
    fn act(&self, op: Op) -> Option<Self>;
}

impl Operated for Monomial {
    fn act(&self, op: Op) -> Option<Self> {
        match op {
            Op::F(i) => self.f(i),
            Op::E(i) => self.e(i),
        }
    }
}

impl Operated for MlTableau {
    fn act(&self, op: Op) -> Option<Self> {
        match op {
            Op::F(i) => Some(self.f(i)),
            Op::E(i) => self.e(i),
        }
    }
}

impl Operated for TensorElement {
    fn act(&self, op: Op) -> Option<Self> {
        match op {
            Op::F(i) => self.f(i),
            Op::E(i) => self.e(i),
        }
    }
}

fn run_word<X: Operated>(start: X, ops: &[(Op, String)], out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    writeln!(out, "{start}").map_err(io_failure)?;
    let mut x = start;
    for (step, (op, name)) in ops.iter().enumerate() {
        match x.act(*op) {
            Some(y) => {
                writeln!(out, "{y}").map_err(io_failure)?;
                x = y;
            }
            None => {
                writeln!(out, "0").map_err(io_failure)?;
                let _ = writeln!(err, "{name} (step {}) gives zero on {x}; stopping", step + 1);
                return Ok(());
            }
        }
    }
    Ok(())
}

fn tensor_element(text: &str, lambda: Option<DominantWeight>) -> Result<TensorElement, Failure> {
    if text.contains('#') {
        let x: TensorElement = text.parse().map_err(|e| Failure::element(text, e))?;
        if lambda.is_some_and(|l| l != x.lambda()) {
            return Err(Failure::input(format!("--lambda disagrees with the weight in `{text}`")));
        }
        Ok(x)
    } else {
        let lambda = lambda.ok_or_else(|| Failure::input("tensor elements need `#a,b` or --lambda"))?;
        let t: MlTableau = text.parse().map_err(|e| Failure::element(text, e))?;
        Ok(TensorElement::new(t, lambda))
    }
}

fn apply(
    realization: ApplyRealization,
    element: &str,
    lambda: Option<DominantWeight>,
    ops: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let ops = parse_ops(ops)?;
    match realization {
        ApplyRealization::Monomial => {
            let n: Monomial = element.parse().map_err(|e| Failure::element(element, e))?;
            run_word(n, &ops, out, err)
        }
        ApplyRealization::Tableau => {
            let t: MlTableau = element.parse().map_err(|e| Failure::element(element, e))?;
            run_word(t, &ops, out, err)
        }
        ApplyRealization::Tensor => run_word(tensor_element(element, lambda)?, &ops, out, err),
    }
}

fn convert(lambda: Option<DominantWeight>, from: ConvertFrom, element: &str, out: &mut dyn Write) -> Outcome {
    let converted = match from {
        ConvertFrom::Monomial => {
            let lambda = lambda.ok_or_else(|| Failure::input("--lambda is required to convert a monomial"))?;
            let n: Monomial = element.parse().map_err(|e| Failure::element(element, e))?;
            omega(&n, lambda).map_err(|e| Failure::input(e.to_string()))?.to_string()
        }
        ConvertFrom::Tensor => {
            let x = tensor_element(element, lambda)?;
            omega_inv(&x).map_err(|e| Failure::input(e.to_string()))?.to_string()
        }
    };
    writeln!(out, "{converted}").map_err(io_failure)
}

fn verify(lambda: DominantWeight, checks: &[Check], opts: &BuildOptions, out: &mut dyn Write) -> Outcome {
    let results = verify_lambda(lambda, checks, opts).map_err(|e| Failure { code: 1, message: e.to_string() })?;
    for (check, result) in results {
        match result {
            Ok(summary) => writeln!(out, "{check} {lambda}: ok ({summary})").map_err(io_failure)?,
            Err(counterexample) => {
                writeln!(out, "{check} {lambda}: FAIL").map_err(io_failure)?;
                return Err(Failure { code: 1, message: format!("{check} failed for {lambda}: {counterexample}") });
            }
        }
    }
    Ok(())
}
