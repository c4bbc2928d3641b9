//! Command-line interface of the `qhl` binary.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bases::{transition_matrix, Basis};
use crate::combinatorics::{Composition, WeakComposition};
use crate::conjectures::{check_conj_F, check_conj_permutations, check_conjecture, check_consistency, ConjectureId};
use crate::error::{Error, Result};
use crate::output::{
    render_conjectures, render_matrix, render_polynomials, render_stationary, ConjectureDocument, Format,
    PolynomialReport,
};
use crate::pasep::{parse_rational, stationary_report, Method, PasepState};
use crate::tableaux::{
    brute_pt_a, brute_pt_b, comp_a_to_shape, comp_b_decode, comp_b_encode, pt_a_closed, pt_a_count, pt_b_closed,
    shape_a_to_comp, ShapeA, ShapeB,
};

#[derive(Debug, Parser)]
#[command(name = "qhl", version, about = "Transition matrices, permutation tableaux and PASEP steady states")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "json", value_parser = parse_format)]
    pub format: Format,

    /// Write the output to a file instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Transition matrix between two bases in canonical composition order.
    Matrix(MatrixArgs),
    /// Permutation tableau polynomial of a shape.
    Pt(PtArgs),
    /// PASEP stationary probabilities.
    Pasep(PasepArgs),
    /// Experimental checks of the conjectured combinatorial interpretations.
    Conjectures(ConjectureArgs),
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    /// Weight, 1 to 9.
    #[arg(short, value_parser = clap::value_parser!(u8).range(1..=9))]
    pub n: u8,
    /// Source basis: S, R, Psi or L.
    #[arg(long, value_parser = parse_basis)]
    pub from: Basis,
    /// Target basis: S, R, Psi or L.
    #[arg(long, value_parser = parse_basis)]
    pub to: Basis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableauType {
    A,
    B,
}

#[derive(Debug, Args)]
pub struct PtArgs {
    #[arg(value_enum, ignore_case = true)]
    pub kind: TableauType,
    /// Composition (type A) or weak composition (type B), e.g. `3,4,1`.
    #[arg(long, conflicts_with = "shape", required_unless_present = "shape")]
    pub comp: Option<String>,
    /// Row widths of the shape, longest first for type A, top to bottom for
    /// type B.
    #[arg(long)]
    pub shape: Option<String>,
    /// Closed formula only (the default).
    #[arg(long, group = "mode")]
    pub closed: bool,
    /// Brute-force enumeration of fillings only.
    #[arg(long, group = "mode")]
    pub brute: bool,
    /// Both, with a match verdict.
    #[arg(long, group = "mode")]
    pub both: bool,
}

#[derive(Debug, Args)]
pub struct PasepArgs {
    /// Number of sites, 1 to 16 (exact solver up to 12).
    #[arg(short, value_parser = clap::value_parser!(u8).range(1..=16))]
    pub n: u8,
    /// Report every state.
    #[arg(long, conflicts_with = "state")]
    pub all: bool,
    /// A single state over `0/1` or `◦/•`, left to right.
    #[arg(long)]
    pub state: Option<String>,
    /// Hopping asymmetry as an exact rational such as `1/2`.
    #[arg(long, default_value = "1")]
    pub q: String,
    /// formula, exact or mc.
    #[arg(long, default_value = "formula", value_parser = parse_method)]
    pub method: Method,
    /// Monte Carlo seed.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Monte Carlo steps, burn-in included.
    #[arg(long, default_value_t = 10_000_000)]
    pub steps: u64,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    /// Size, 1 to 7 (permutation checks accept up to 8 in the library).
    #[arg(short, value_parser = clap::value_parser!(u8).range(1..=7))]
    pub n: u8,
    /// E-words, E-perms, F or all.
    #[arg(long, default_value = "all")]
    pub which: String,
}

fn parse_format(s: &str) -> Result<Format> {
    s.parse()
}

fn parse_basis(s: &str) -> Result<Basis> {
    s.parse()
}

fn parse_method(s: &str) -> Result<Method> {
    s.parse()
}

/// Rendered output and whether every requested verification passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub verified: bool,
}

/// Process exit code for an error: input problems give 2, internal
/// cross-check failures give 1.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Consistency(_) | Error::SingularSystem => 1,
        _ => 2,
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Matrix(a) => {
            let m = transition_matrix(a.n as usize, a.from, a.to)?;
            Ok(Outcome { text: render_matrix(&m, cli.format)?, verified: true })
        }
        Command::Pt(a) => {
            let report = pt(a)?;
            let verified = report.matches != Some(false);
            Ok(Outcome { text: render_polynomials(&[report], cli.format)?, verified })
        }
        Command::Pasep(a) => {
            let n = a.n as usize;
            let only = match (&a.state, a.all) {
                (Some(s), _) => {
                    let st: PasepState = s.parse()?;
                    if st.n() != n {
                        return Err(Error::InvalidState(format!("`{s}` has {} sites, expected {n}", st.n())));
                    }
                    Some(st)
                }
                (None, _) => None,
            };
            let q = parse_rational(&a.q)?;
            let report = stationary_report(n, &q, a.method, a.seed, a.steps, only.as_ref())?;
            let verified = report.exact_match != Some(false);
            Ok(Outcome { text: render_stationary(&report, cli.format)?, verified })
        }
        Command::Conjectures(a) => {
            let n = a.n as usize;
            let doc = if a.which == "all" {
                let mut reports: Vec<_> =
                    [ConjectureId::EWords].into_iter().map(|id| check_conjecture(id, n)).collect::<Result<_>>()?;
                let e = check_conj_permutations(n)?;
                let f = check_conj_F(n)?;
                let consistency = check_consistency(&f, &e);
                reports.push(e);
                reports.push(f);
                ConjectureDocument::new(reports, Some(consistency))
            } else {
                let id: ConjectureId = a.which.parse()?;
                ConjectureDocument::new(vec![check_conjecture(id, n)?], None)
            };
            // Conjecture mismatches are findings, not failures; only the
            // consistency check gates the exit code.
            let verified = doc.consistency.as_ref().is_none_or(|c| c.passed());
            Ok(Outcome { text: render_conjectures(&doc, cli.format)?, verified })
        }
    }
}

fn parse_widths(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c == ',' || c == '.' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("`{t}`: {e}"))))
        .collect()
}

fn pt(a: &PtArgs) -> Result<PolynomialReport> {
    let want_closed = !a.brute;
    let want_brute = a.brute || a.both;
    match a.kind {
        TableauType::A => {
            let (comp, shape) = match (&a.comp, &a.shape) {
                (Some(c), _) => {
                    let comp: Composition = c.parse()?;
                    let shape = comp_a_to_shape(&comp)?;
                    (comp, shape)
                }
                (None, Some(s)) => {
                    let shape = ShapeA::new(parse_widths(s)?)?;
                    (shape_a_to_comp(&shape), shape)
                }
                (None, None) => return Err(Error::InvalidArgument("give --comp or --shape".into())),
            };
            let closed = want_closed.then(|| pt_a_closed(&comp)).transpose()?;
            let brute = want_brute.then(|| brute_pt_a(&shape)).transpose()?;
            Ok(PolynomialReport {
                kind: "A".into(),
                composition: comp.label(),
                widths: shape.rows().to_vec(),
                matches: match (&closed, &brute) {
                    (Some(c), Some(b)) => Some(c == b),
                    _ => None,
                },
                closed,
                brute,
                count: Some(pt_a_count(&comp)?.to_string()),
            })
        }
        TableauType::B => {
            let (code, shape) = match (&a.comp, &a.shape) {
                (Some(c), _) => {
                    let code: WeakComposition = c.parse()?;
                    let shape = comp_b_decode(&code)?;
                    (code, shape)
                }
                (None, Some(s)) => {
                    let shape = ShapeB::new(parse_widths(s)?)?;
                    (comp_b_encode(&shape), shape)
                }
                (None, None) => return Err(Error::InvalidArgument("give --comp or --shape".into())),
            };
            let closed = want_closed.then(|| pt_b_closed(&code)).transpose()?;
            let brute = want_brute.then(|| brute_pt_b(&shape)).transpose()?;
            let count = closed.as_ref().or(brute.as_ref()).map(|p| p.eval_at_one().to_string());
            Ok(PolynomialReport {
                kind: "B".into(),
                composition: code.label(),
                widths: shape.widths().to_vec(),
                matches: match (&closed, &brute) {
                    (Some(c), Some(b)) => Some(c == b),
                    _ => None,
                },
                closed,
                brute,
                count,
            })
        }
    }
}
