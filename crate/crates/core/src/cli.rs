//! Command-line front end: enumerate the fixed locus, emit the weight and
//! index tables, assemble the Poincaré polynomial, run the character-series
//! engine on chart data, and verify every invariant.
//!
//! Exit codes: 0 on success, 2 on invariant failure, 3 on input errors.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::charlattice::{OneParamSubgroup, Weight};
use crate::fixedpoints::{xyz_monomial, FixedLine, FixedPoint, Inventory};
use crate::homology::{
    self, hodge, is_generic_closed_form, orthogonal_witness, poincare, tangent_weight_support,
    Cell, ComponentKind, PoincarePolynomial,
};
use crate::series::{self, chi_ff, ext1, plus_cell_dim, ChartData, Laurent2};
use crate::tangent::{table_rep, tangent_rep, Locus, TangentRep};

/// The reference one-parameter subgroup used by the index tables.
pub const DEFAULT_LAMBDA: OneParamSubgroup = OneParamSubgroup::new(0, 1, 5);

#[derive(Parser)]
#[command(
    name = "bbbetti",
    version,
    about = "Torus-fixed locus and Betti numbers of the moduli space of plane sheaves with Hilbert polynomial 4m+1"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the fixed-locus inventory (180 isolated points, 6 lines)
    FixedPoints {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Tangent-space weight decomposition at every fixed locus
    Tangent {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Emit a weight table (1A, 2A, 3A) or plus-cell index table (1B, 2B, 3B)
    Tables {
        /// Which table: 1A, 2A, 3A, 1B, 2B or 3B
        which: String,
        /// One-parameter subgroup "n0,n1,n2" for the B tables
        #[arg(long)]
        lambda: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The Poincaré polynomial of the moduli space
    Poincare {
        /// One-parameter subgroup "n0,n1,n2"
        #[arg(long)]
        lambda: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the character-series engine on chart data (defaults to the
    /// built-in three-line fixture)
    Chi {
        /// Path to a chart-data JSON file
        file: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check every invariant and report pass/fail per check
    Verify,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format: text, json or csv
    #[arg(long, default_value = "text")]
    format: String,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

enum CliError {
    /// Malformed user input: exit code 3.
    Input(String),
    /// A verified invariant failed: exit code 2.
    Invariant(String),
}

impl OutputArgs {
    fn format(&self) -> Result<Format, CliError> {
        match self.format.as_str() {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(CliError::Input(format!(
                "unknown format {other:?}; expected text, json or csv"
            ))),
        }
    }

    fn emit(&self, content: &str) -> Result<(), CliError> {
        match &self.out {
            Some(path) => std::fs::write(path, content)
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{content}");
                Ok(())
            }
        }
    }
}

/// Parses the canonical weight text form.
pub fn parse_weight(text: &str) -> Result<Weight, crate::charlattice::ParseError> {
    text.parse()
}

/// Parses a one-parameter subgroup "n0,n1,n2".
pub fn parse_lambda(text: &str) -> Result<OneParamSubgroup, crate::charlattice::ParseError> {
    text.parse()
}

/// Entry point; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            3
        }
        Err(CliError::Invariant(msg)) => {
            eprintln!("invariant failure: {msg}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::FixedPoints { output } => cmd_fixed_points(&output),
        Command::Tangent { output } => cmd_tangent(&output),
        Command::Tables {
            which,
            lambda,
            output,
        } => cmd_tables(&which, lambda.as_deref(), &output),
        Command::Poincare { lambda, output } => cmd_poincare(lambda.as_deref(), &output),
        Command::Chi { file, output } => cmd_chi(file.as_deref(), &output),
        Command::Verify => cmd_verify(),
    }
}

/// The fixed-locus inventory with all tangent representations, computed once.
pub struct Context {
    pub inventory: Inventory,
    /// Aligned with `inventory.points`.
    pub point_reps: Vec<TangentRep>,
    /// Aligned with `inventory.lines`.
    pub line_reps: Vec<TangentRep>,
}

impl Context {
    pub fn compute() -> Result<Context, String> {
        let inventory = Inventory::enumerate();
        let point_reps = inventory
            .points
            .iter()
            .map(|p| tangent_rep(Locus::Point(p)).map_err(|e| format!("{}: {e}", p.id_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let line_reps = inventory
            .lines
            .iter()
            .map(|l| tangent_rep(Locus::Line(l)).map_err(|e| format!("{}: {e}", l.id_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Context {
            inventory,
            point_reps,
            line_reps,
        })
    }

    /// The 186 fixed components (isolated points first, then lines) feeding
    /// the homology basis formula.
    pub fn components(&self) -> Vec<(ComponentKind, &TangentRep)> {
        let mut out: Vec<(ComponentKind, &TangentRep)> = self
            .inventory
            .points
            .iter()
            .zip(&self.point_reps)
            .filter(|(p, _)| p.isolated)
            .map(|(_, rep)| (ComponentKind::IsolatedPoint, rep))
            .collect();
        out.extend(self.line_reps.iter().map(|rep| (ComponentKind::Line, rep)));
        out
    }
}

fn context() -> Result<Context, CliError> {
    Context::compute().map_err(CliError::Invariant)
}

fn resolve_lambda(text: Option<&str>) -> Result<OneParamSubgroup, CliError> {
    match text {
        None => Ok(DEFAULT_LAMBDA),
        Some(t) => parse_lambda(t).map_err(|e| CliError::Input(e.to_string())),
    }
}

fn genericity_gate(ctx: &Context, lambda: &OneParamSubgroup) -> Result<(), CliError> {
    let support = tangent_weight_support(ctx.point_reps.iter().chain(&ctx.line_reps));
    if let Some(witness) = orthogonal_witness(lambda, &support) {
        return Err(CliError::Input(format!(
            "non-generic lambda {lambda}: orthogonal to tangent weight {witness}"
        )));
    }
    Ok(())
}

fn point_id_json(p: &FixedPoint) -> serde_json::Value {
    serde_json::json!({
        "stratum": p.stratum.to_string(),
        "family": p.family,
        "quartic": p.quartic.0,
    })
}

fn line_id_json(l: &FixedLine) -> serde_json::Value {
    let family = ["X", "Y", "Z"][l.line];
    serde_json::json!({
        "stratum": "M01",
        "family": family,
        "quartic": l.quartic.0,
        "cubic": l.cubic.0,
    })
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

// ---------------------------------------------------------------- commands

fn cmd_fixed_points(output: &OutputArgs) -> Result<(), CliError> {
    let inv = Inventory::enumerate();
    let content = match output.format()? {
        Format::Json => {
            let mut entries: Vec<serde_json::Value> = inv
                .points
                .iter()
                .map(|p| {
                    serde_json::json!({
                        "id": point_id_json(p),
                        "matrix": p.matrix.entry_strings(),
                        "isolated": p.isolated,
                    })
                })
                .collect();
            entries.extend(inv.lines.iter().map(|l| {
                serde_json::json!({
                    "id": line_id_json(l),
                    "matrix": l.matrix.entry_strings(),
                    "isolated": false,
                })
            }));
            format!("{:#}\n", serde_json::Value::Array(entries))
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "fixed locus: {} isolated points, {} lines",
                inv.isolated_count(),
                inv.lines.len()
            );
            for p in &inv.points {
                let tag = if p.isolated {
                    ""
                } else {
                    "  [closure point of a fixed line]"
                };
                let _ = writeln!(s, "{}{}", p.id_string(), tag);
            }
            for l in &inv.lines {
                let _ = writeln!(
                    s,
                    "{}  [closure point at p{} on {}]",
                    l.id_string(),
                    l.closure_point.point,
                    xyz_monomial(&l.closure_point.quartic)
                );
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("stratum,family,quartic,isolated\n");
            for p in &inv.points {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    p.stratum,
                    csv_field(p.family),
                    xyz_monomial(&p.quartic),
                    p.isolated
                );
            }
            for l in &inv.lines {
                let _ = writeln!(
                    s,
                    "M01,line {},{},false",
                    ["X", "Y", "Z"][l.line],
                    xyz_monomial(&l.quartic)
                );
            }
            s
        }
    };
    output.emit(&content)
}

fn weights_json(rep: &TangentRep) -> serde_json::Value {
    serde_json::Value::Array(
        rep.weights
            .iter()
            .map(|(w, &m)| serde_json::json!({"w": w.to_string(), "mult": m}))
            .collect(),
    )
}

fn weights_listing(rep: &TangentRep) -> String {
    rep.weights
        .expanded()
        .iter()
        .map(Weight::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

fn cmd_tangent(output: &OutputArgs) -> Result<(), CliError> {
    let ctx = context()?;
    let content = match output.format()? {
        Format::Json => {
            let mut entries: Vec<serde_json::Value> = ctx
                .inventory
                .points
                .iter()
                .zip(&ctx.point_reps)
                .map(|(p, rep)| {
                    serde_json::json!({
                        "id": point_id_json(p),
                        "weights": weights_json(rep),
                        "zero_mult": rep.zero_multiplicity,
                    })
                })
                .collect();
            entries.extend(
                ctx.inventory
                    .lines
                    .iter()
                    .zip(&ctx.line_reps)
                    .map(|(l, rep)| {
                        serde_json::json!({
                            "id": line_id_json(l),
                            "weights": weights_json(rep),
                            "zero_mult": rep.zero_multiplicity,
                        })
                    }),
            );
            format!("{:#}\n", serde_json::Value::Array(entries))
        }
        Format::Text => {
            let mut s = String::new();
            for (p, rep) in ctx.inventory.points.iter().zip(&ctx.point_reps) {
                let _ = writeln!(s, "{}: {}", p.id_string(), weights_listing(rep));
            }
            for (l, rep) in ctx.inventory.lines.iter().zip(&ctx.line_reps) {
                let _ = writeln!(s, "{}: {}", l.id_string(), weights_listing(rep));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("stratum,family,quartic,zero_mult,weights\n");
            for (p, rep) in ctx.inventory.points.iter().zip(&ctx.point_reps) {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{}",
                    p.stratum,
                    csv_field(p.family),
                    xyz_monomial(&p.quartic),
                    rep.zero_multiplicity,
                    csv_field(&weights_listing(rep))
                );
            }
            for (l, rep) in ctx.inventory.lines.iter().zip(&ctx.line_reps) {
                let _ = writeln!(
                    s,
                    "M01,line {},{},{},{}",
                    ["X", "Y", "Z"][l.line],
                    xyz_monomial(&l.quartic),
                    rep.zero_multiplicity,
                    csv_field(&weights_listing(rep))
                );
            }
            s
        }
    };
    output.emit(&content)
}

/// Rows of a B table: family label and plus-cell counts in canonical order.
pub fn b_table_rows(
    ctx: &Context,
    which: char,
    lambda: &OneParamSubgroup,
) -> Vec<(String, Vec<i64>)> {
    let p = |rep: &TangentRep| homology::p_count(rep, lambda);
    match which {
        '1' => (0..10)
            .map(|row| {
                let family = ctx.inventory.points[12 * row].family.to_string();
                let counts = (0..12).map(|i| p(&ctx.point_reps[12 * row + i])).collect();
                (family, counts)
            })
            .collect(),
        '2' => {
            let mut rows: Vec<(String, Vec<i64>)> = (0..3)
                .map(|row| {
                    let family = ctx.inventory.points[120 + 8 * row].family.to_string();
                    let counts = (0..8)
                        .map(|i| p(&ctx.point_reps[120 + 8 * row + i]))
                        .collect();
                    (family, counts)
                })
                .collect();
            rows.push(("lines".to_string(), ctx.line_reps.iter().map(p).collect()));
            rows
        }
        '3' => (0..3)
            .map(|row| {
                let family = ctx.inventory.points[144 + 14 * row].family.to_string();
                let counts = (0..12)
                    .map(|i| p(&ctx.point_reps[144 + 14 * row + i]))
                    .collect();
                (family, counts)
            })
            .collect(),
        _ => unreachable!(),
    }
}

/// Rows of an A table: per family, the enumerated loci with their tangent
/// weight decompositions.
fn a_table_rows(ctx: &Context, which: char) -> Vec<(String, Vec<(String, &TangentRep)>)> {
    match which {
        '1' => (0..10)
            .map(|row| {
                let family = ctx.inventory.points[12 * row].family.to_string();
                let cells = (0..12)
                    .map(|i| {
                        let p = &ctx.inventory.points[12 * row + i];
                        (xyz_monomial(&p.quartic), &ctx.point_reps[12 * row + i])
                    })
                    .collect();
                (family, cells)
            })
            .collect(),
        '2' => {
            let mut rows: Vec<(String, Vec<(String, &TangentRep)>)> = (0..3)
                .map(|row| {
                    let family = ctx.inventory.points[120 + 8 * row].family.to_string();
                    let cells = (0..8)
                        .map(|i| {
                            let p = &ctx.inventory.points[120 + 8 * row + i];
                            (xyz_monomial(&p.quartic), &ctx.point_reps[120 + 8 * row + i])
                        })
                        .collect();
                    (family, cells)
                })
                .collect();
            rows.push((
                "lines".to_string(),
                ctx.inventory
                    .lines
                    .iter()
                    .zip(&ctx.line_reps)
                    .map(|(l, rep)| (l.id_string(), rep))
                    .collect(),
            ));
            rows
        }
        '3' => (0..3)
            .map(|row| {
                let family = ctx.inventory.points[144 + 14 * row].family.to_string();
                let cells = (0..14)
                    .map(|i| {
                        let p = &ctx.inventory.points[144 + 14 * row + i];
                        let tag = if p.isolated { "" } else { " (closure point)" };
                        (
                            format!("{}{}", xyz_monomial(&p.quartic), tag),
                            &ctx.point_reps[144 + 14 * row + i],
                        )
                    })
                    .collect();
                (family, cells)
            })
            .collect(),
        _ => unreachable!(),
    }
}

fn cmd_tables(which: &str, lambda: Option<&str>, output: &OutputArgs) -> Result<(), CliError> {
    let which_norm = which.to_ascii_uppercase();
    let (digit, kind) = match which_norm.as_str() {
        "1A" => ('1', 'A'),
        "2A" => ('2', 'A'),
        "3A" => ('3', 'A'),
        "1B" => ('1', 'B'),
        "2B" => ('2', 'B'),
        "3B" => ('3', 'B'),
        _ => {
            return Err(CliError::Input(format!(
                "unknown table {which:?}; expected 1A, 2A, 3A, 1B, 2B or 3B"
            )))
        }
    };
    let ctx = context()?;
    let format = output.format()?;
    let content = if kind == 'B' {
        let lam = resolve_lambda(lambda)?;
        genericity_gate(&ctx, &lam)?;
        let rows = b_table_rows(&ctx, digit, &lam);
        match format {
            Format::Text => {
                let mut s = format!("Table {which_norm} (lambda = {lam})\n");
                for (label, counts) in &rows {
                    let joined = counts
                        .iter()
                        .map(i64::to_string)
                        .collect::<Vec<_>>()
                        .join(", ");
                    let _ = writeln!(s, "{label}: {joined}");
                }
                s
            }
            Format::Json => {
                let arr: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|(label, counts)| serde_json::json!({"family": label, "counts": counts}))
                    .collect();
                format!("{:#}\n", serde_json::Value::Array(arr))
            }
            Format::Csv => {
                let mut s = String::from("family,counts\n");
                for (label, counts) in &rows {
                    let joined = counts
                        .iter()
                        .map(i64::to_string)
                        .collect::<Vec<_>>()
                        .join("; ");
                    let _ = writeln!(s, "{},{}", csv_field(label), csv_field(&joined));
                }
                s
            }
        }
    } else {
        let rows = a_table_rows(&ctx, digit);
        match format {
            Format::Text => {
                let mut s = format!("Table {which_norm}\n");
                for (label, cells) in &rows {
                    let _ = writeln!(s, "{label}");
                    for (q, rep) in cells {
                        let _ = writeln!(s, "  {q}: {}", weights_listing(rep));
                    }
                }
                s
            }
            Format::Json => {
                let arr: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|(label, cells)| {
                        serde_json::json!({
                            "family": label,
                            "rows": cells
                                .iter()
                                .map(|(q, rep)| serde_json::json!({
                                    "quartic": q,
                                    "weights": weights_json(rep),
                                }))
                                .collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                format!("{:#}\n", serde_json::Value::Array(arr))
            }
            Format::Csv => {
                let mut s = String::from("family,quartic,weights\n");
                for (label, cells) in &rows {
                    for (q, rep) in cells {
                        let _ = writeln!(
                            s,
                            "{},{},{}",
                            csv_field(label),
                            csv_field(q),
                            csv_field(&weights_listing(rep))
                        );
                    }
                }
                s
            }
        }
    };
    output.emit(&content)
}

fn cmd_poincare(lambda: Option<&str>, output: &OutputArgs) -> Result<(), CliError> {
    let ctx = context()?;
    let lam = resolve_lambda(lambda)?;
    genericity_gate(&ctx, &lam)?;
    let poly = poincare(&ctx.components(), &lam, Cell::Plus)
        .map_err(|e| CliError::Input(e.to_string()))?;
    let content = match output.format()? {
        Format::Text => format!("{}\n", poly.text()),
        Format::Json => {
            let value = serde_json::json!({
                "polynomial": poly.text(),
                "coefficients": poly.coefficients(),
                "euler_characteristic": poly.euler_characteristic(),
            });
            format!("{value:#}\n")
        }
        Format::Csv => {
            let mut s = String::from("degree,betti\n");
            for (k, &b) in poly.coefficients().iter().enumerate() {
                let _ = writeln!(s, "{k},{b}");
            }
            s
        }
    };
    output.emit(&content)
}

/// Truncation radius for the series engine, overridable through the
/// `BBBETTI_TRUNCATION` environment variable.
fn truncation_radius() -> Result<i64, CliError> {
    match std::env::var("BBBETTI_TRUNCATION") {
        Err(_) => Ok(series::DEFAULT_TRUNCATION),
        Ok(text) => match text.trim().parse::<i64>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::Input(format!(
                "BBBETTI_TRUNCATION must be a positive integer, got {text:?}"
            ))),
        },
    }
}

fn laurent_listing(p: &Laurent2) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (i, (w, &c)) in p.iter().enumerate() {
        if i == 0 {
            if c < 0 {
                s.push('-');
            }
        } else {
            s.push_str(if c < 0 { " - " } else { " + " });
        }
        if c.abs() == 1 {
            let _ = write!(s, "{w}");
        } else {
            let _ = write!(s, "{}*{w}", c.abs());
        }
    }
    s
}

fn cmd_chi(file: Option<&std::path::Path>, output: &OutputArgs) -> Result<(), CliError> {
    let data = match file {
        None => series::fixtures::three_line_sheaf(),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
            ChartData::from_json(&text).map_err(|e| CliError::Input(e.to_string()))?
        }
    };
    let n = truncation_radius()?;
    let chi = chi_ff(&data, n).map_err(|e| CliError::Input(e.to_string()))?;
    let e1 = ext1(&data, n).map_err(|e| CliError::Input(e.to_string()))?;
    let pdim = plus_cell_dim(&e1);
    let content = match output.format()? {
        Format::Text => format!(
            "chi(F,F) = {}\nExt1(F,F) = {}\nplus-cell dimension = {}\n",
            laurent_listing(&chi),
            laurent_listing(&e1),
            pdim
        ),
        Format::Json => {
            let to_arr = |p: &Laurent2| {
                p.iter()
                    .map(|(w, &c)| vec![w.0[0], w.0[1], c])
                    .collect::<Vec<_>>()
            };
            let value = serde_json::json!({
                "chi": to_arr(&chi),
                "ext1": to_arr(&e1),
                "plus_cell_dim": pdim,
            });
            format!("{value:#}\n")
        }
        Format::Csv => {
            let mut s = String::from("part,t1_exponent,t2_exponent,multiplicity\n");
            for (w, &c) in chi.iter() {
                let _ = writeln!(s, "chi,{},{},{c}", w.0[0], w.0[1]);
            }
            for (w, &c) in e1.iter() {
                let _ = writeln!(s, "ext1,{},{},{c}", w.0[0], w.0[1]);
            }
            s
        }
    };
    output.emit(&content)
}

// ------------------------------------------------------------------ verify

/// Expected plus-cell index tables at `λ = (0,1,5)`.
#[rustfmt::skip]
pub const EXPECTED_1B: [(&str, [i64; 12]); 10] = [
    ("(XY, XZ, YZ)",   [14, 11, 12, 8, 4, 3, 13, 7, 5, 10, 9, 6]),
    ("(XY, XZ, Y^2)",  [12, 15, 11, 13, 8, 4, 14, 7, 5, 10, 9, 6]),
    ("(YZ, XZ, Y^2)",  [11, 2, 3, 7, 12, 10, 4, 6, 13, 5, 8, 9]),
    ("(XY, XZ, Z^2)",  [2, 10, 13, 4, 3, 11, 7, 12, 5, 9, 6, 8]),
    ("(XY, YZ, Z^2)",  [2, 8, 11, 3, 4, 13, 5, 12, 7, 9, 6, 10]),
    ("(XY, YZ, X^2)",  [15, 12, 8, 14, 11, 4, 13, 5, 7, 9, 10, 6]),
    ("(XZ, YZ, X^2)",  [15, 5, 4, 12, 14, 9, 8, 6, 13, 7, 11, 10]),
    ("(YZ, Y^2, Z^2)", [10, 1, 11, 7, 3, 2, 12, 6, 4, 9, 8, 5]),
    ("(XZ, X^2, Z^2)", [14, 3, 13, 11, 4, 5, 12, 6, 8, 9, 10, 7]),
    ("(XY, X^2, Y^2)", [13, 17, 9, 14, 12, 16, 6, 8, 15, 7, 10, 11]),
];

pub const EXPECTED_2B: [(&str, [i64; 8]); 3] = [
    ("X", [16, 15, 12, 14, 8, 11, 13, 5]),
    ("Y", [11, 12, 7, 13, 4, 8, 14, 3]),
    ("Z", [0, 1, 2, 3, 5, 4, 6, 11]),
];

pub const EXPECTED_2B_LINES: [i64; 6] = [9, 9, 7, 6, 5, 9];

pub const EXPECTED_3B: [(&str, [i64; 12]); 3] = [
    ("(X, Y)", [15, 11, 14, 10, 12, 9, 5, 4, 13, 8, 6, 7]),
    ("(X, Z)", [14, 3, 10, 13, 5, 4, 11, 8, 7, 12, 6, 9]),
    ("(Y, Z)", [2, 10, 3, 4, 7, 11, 9, 13, 5, 6, 12, 8]),
];

/// Betti numbers `b_0, b_2, ..., b_34` of the moduli space.
pub const EXPECTED_BETTI_EVEN: [i64; 18] = [
    1, 2, 6, 10, 14, 15, 16, 16, 16, 16, 16, 16, 15, 14, 10, 6, 2, 1,
];

pub const EXPECTED_POINCARE_TEXT: &str = "x34+2x32+6x30+10x28+14x26+15x24+16x22+16x20+\
    16x18+16x16+16x14+16x12+15x10+14x8+10x6+6x4+2x2+1";

pub fn expected_poincare() -> PoincarePolynomial {
    let mut coeffs = vec![0i64; homology::TOP_DEGREE + 1];
    for (i, &b) in EXPECTED_BETTI_EVEN.iter().enumerate() {
        coeffs[2 * i] = b;
    }
    PoincarePolynomial::from_coefficients(coeffs)
}

/// All closed-form-generic subgroups with entries in `[0, 7]` and minimum
/// entry 0 (the pairing on degree-0 weights only sees `λ` up to a common
/// shift). There are 72 of them.
pub fn generic_lambda_sample() -> Vec<OneParamSubgroup> {
    let mut out = Vec::new();
    for n0 in 0..=7 {
        for n1 in 0..=7 {
            for n2 in 0..=7 {
                let lam = OneParamSubgroup::new(n0, n1, n2);
                if lam.0.iter().min() == Some(&0) && is_generic_closed_form(&lam) {
                    out.push(lam);
                }
            }
        }
    }
    out
}

type CheckResult = Result<(), String>;

fn check_census(ctx: &Context) -> CheckResult {
    let inv = &ctx.inventory;
    let checks = [
        (inv.isolated_count(), 180, "isolated points"),
        (inv.lines.len(), 6, "fixed lines"),
        (
            inv.stratum_count(crate::fixedpoints::Stratum::M0MinusM01),
            120,
            "M0 \\ M01 points",
        ),
        (
            inv.stratum_count(crate::fixedpoints::Stratum::M01),
            24,
            "M01 points",
        ),
        (
            inv.stratum_count(crate::fixedpoints::Stratum::M1),
            36,
            "isolated M1 points",
        ),
        (
            inv.points.iter().filter(|p| !p.isolated).count(),
            6,
            "closure points",
        ),
    ];
    for (got, want, what) in checks {
        if got != want {
            return Err(format!("{what}: expected {want}, found {got}"));
        }
    }
    for l in &inv.lines {
        let hits = inv
            .points
            .iter()
            .filter(|p| {
                !p.isolated
                    && p.quartic == l.closure_point.quartic
                    && p.perm.apply_var(2) == l.closure_point.point
            })
            .count();
        if hits != 1 {
            return Err(format!(
                "{} closure point matched {hits} times",
                l.id_string()
            ));
        }
    }
    Ok(())
}

fn check_matrices(ctx: &Context) -> CheckResult {
    for p in &ctx.inventory.points {
        let det = p
            .matrix
            .det_monomial()
            .map_err(|e| format!("{}: {e}", p.id_string()))?;
        if det != p.quartic {
            return Err(format!(
                "{}: det {} != quartic",
                p.id_string(),
                xyz_monomial(&det)
            ));
        }
    }
    for l in &ctx.inventory.lines {
        let det = l
            .matrix
            .det_monomial()
            .map_err(|e| format!("{}: {e}", l.id_string()))?;
        if det != l.quartic {
            return Err(format!(
                "{}: det {} != quartic",
                l.id_string(),
                xyz_monomial(&det)
            ));
        }
    }
    Ok(())
}

fn check_tangent_vs_closed_form(ctx: &Context) -> CheckResult {
    for (p, rep) in ctx.inventory.points.iter().zip(&ctx.point_reps) {
        let table = table_rep(Locus::Point(p));
        if *rep != table {
            return Err(format!("{}: tableau and closed form differ", p.id_string()));
        }
        if rep.dim() != 17 {
            return Err(format!("{}: dimension {}", p.id_string(), rep.dim()));
        }
        if !rep.weights.weights().all(|w| w.degree() == 0) {
            return Err(format!("{}: non-degree-0 weight", p.id_string()));
        }
        let want_zero = if p.isolated { 0 } else { 1 };
        if rep.zero_multiplicity != want_zero {
            return Err(format!(
                "{}: zero multiplicity {} (expected {want_zero})",
                p.id_string(),
                rep.zero_multiplicity
            ));
        }
    }
    for (l, rep) in ctx.inventory.lines.iter().zip(&ctx.line_reps) {
        let table = table_rep(Locus::Line(l));
        if *rep != table {
            return Err(format!("{}: tableau and closed form differ", l.id_string()));
        }
        if rep.dim() != 17 || rep.zero_multiplicity != 1 {
            return Err(format!(
                "{}: bad dimension or zero multiplicity",
                l.id_string()
            ));
        }
    }
    Ok(())
}

fn check_index_tables(ctx: &Context) -> CheckResult {
    let rows = b_table_rows(ctx, '1', &DEFAULT_LAMBDA);
    for ((label, counts), (want_label, want)) in rows.iter().zip(EXPECTED_1B.iter()) {
        if label != want_label || counts.as_slice() != want.as_slice() {
            return Err(format!("table 1B row {label}: {counts:?}"));
        }
    }
    let rows = b_table_rows(ctx, '2', &DEFAULT_LAMBDA);
    for ((label, counts), (want_label, want)) in rows.iter().zip(EXPECTED_2B.iter()) {
        if label != want_label || counts.as_slice() != want.as_slice() {
            return Err(format!("table 2B row {label}: {counts:?}"));
        }
    }
    if rows[3].1.as_slice() != EXPECTED_2B_LINES.as_slice() {
        return Err(format!("table 2B line row: {:?}", rows[3].1));
    }
    let rows = b_table_rows(ctx, '3', &DEFAULT_LAMBDA);
    for ((label, counts), (want_label, want)) in rows.iter().zip(EXPECTED_3B.iter()) {
        if label != want_label || counts.as_slice() != want.as_slice() {
            return Err(format!("table 3B row {label}: {counts:?}"));
        }
    }
    Ok(())
}

fn check_support_counts(ctx: &Context) -> CheckResult {
    let mut by_count = [0usize; 4];
    for p in ctx.inventory.isolated_points() {
        by_count[p.support_line_count()] += 1;
    }
    if by_count[1] != 21 || by_count[2] != 123 || by_count[3] != 36 {
        return Err(format!(
            "isolated points by support lines: {}/{}/{} (expected 21/123/36)",
            by_count[1], by_count[2], by_count[3]
        ));
    }
    if !ctx
        .inventory
        .lines
        .iter()
        .all(|l| l.quartic.support_size() == 3)
    {
        return Err("a fixed line has a quartic on fewer than three lines".into());
    }
    Ok(())
}

fn check_poincare(ctx: &Context) -> CheckResult {
    let components = ctx.components();
    let poly = poincare(&components, &DEFAULT_LAMBDA, Cell::Plus).map_err(|e| e.to_string())?;
    if poly != expected_poincare() {
        return Err(format!("polynomial {poly}"));
    }
    if poly.text() != EXPECTED_POINCARE_TEXT {
        return Err(format!("text form {}", poly.text()));
    }
    if poly.euler_characteristic() != 192 {
        return Err(format!(
            "Euler characteristic {}",
            poly.euler_characteristic()
        ));
    }
    if !poly.is_palindromic() {
        return Err("polynomial is not palindromic".into());
    }
    let h = hodge(&poly);
    for (p, row) in h.iter().enumerate() {
        for (q, &val) in row.iter().enumerate() {
            let want = if p == q { poly.betti(2 * p) } else { 0 };
            if val != want {
                return Err(format!("hodge h^{{{p},{q}}} = {val}"));
            }
        }
    }
    Ok(())
}

fn check_lambda_independence(ctx: &Context) -> CheckResult {
    let sample = generic_lambda_sample();
    if sample.len() < 25 {
        return Err(format!(
            "only {} generic subgroups in the sample",
            sample.len()
        ));
    }
    let components = ctx.components();
    let expected = expected_poincare();
    for lam in &sample {
        let plus = poincare(&components, lam, Cell::Plus).map_err(|e| e.to_string())?;
        let minus = poincare(&components, lam, Cell::Minus).map_err(|e| e.to_string())?;
        if plus != expected {
            return Err(format!("lambda {lam}: polynomial {plus}"));
        }
        if minus != expected {
            return Err(format!("lambda {lam}: minus-cell polynomial {minus}"));
        }
    }
    Ok(())
}

fn check_genericity_agreement(ctx: &Context) -> CheckResult {
    let support = tangent_weight_support(ctx.point_reps.iter().chain(&ctx.line_reps));
    for n0 in -6..=6 {
        for n1 in -6..=6 {
            for n2 in -6..=6 {
                let lam = OneParamSubgroup::new(n0, n1, n2);
                let direct = orthogonal_witness(&lam, &support).is_none();
                let closed = is_generic_closed_form(&lam);
                if direct != closed {
                    return Err(format!(
                        "lambda {lam}: direct test {direct}, closed form {closed}"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_series_oracle() -> CheckResult {
    let n = truncation_radius().map_err(|e| match e {
        CliError::Input(m) | CliError::Invariant(m) => m,
    })?;
    let data = series::fixtures::three_line_sheaf();
    let e1 = ext1(&data, n).map_err(|e| e.to_string())?;
    let mut golden = Laurent2::new();
    for (a, b, c) in [
        (-1, 2, 1),
        (0, 1, 1),
        (-1, 1, 1),
        (1, 0, 1),
        (-1, 0, 1),
        (2, -1, 2),
        (1, -1, 4),
        (0, -1, 4),
        (-1, -1, 2),
    ] {
        golden.insert(series::Weight2::new(a, b), c);
    }
    if e1 != golden {
        return Err(format!("ext1 = {}", laurent_listing(&e1)));
    }
    if plus_cell_dim(&e1) != 4 {
        return Err(format!("plus-cell dimension {}", plus_cell_dim(&e1)));
    }
    let doubled = ext1(&data, 2 * n).map_err(|e| e.to_string())?;
    if doubled != e1 {
        return Err("output changed under truncation doubling".into());
    }
    let witness = series::fixtures::one_line_sheaf();
    let we = ext1(&witness, n).map_err(|e| e.to_string())?;
    if !we.is_effective() || we.size() != 17 {
        return Err(format!("witness ext1 size {}", we.size()));
    }
    Ok(())
}

fn cmd_verify() -> Result<(), CliError> {
    let ctx = context()?;
    let checks: Vec<(&str, CheckResult)> = vec![
        ("fixed-locus census", check_census(&ctx)),
        ("matrix determinants and connectivity", check_matrices(&ctx)),
        (
            "tangent tableau equals closed form at all loci",
            check_tangent_vs_closed_form(&ctx),
        ),
        ("plus-cell index tables", check_index_tables(&ctx)),
        ("support-line cross-counts", check_support_counts(&ctx)),
        (
            "Poincaré polynomial, Euler characteristic, Hodge table",
            check_poincare(&ctx),
        ),
        ("lambda independence", check_lambda_independence(&ctx)),
        (
            "genericity closed form agrees with direct scan",
            check_genericity_agreement(&ctx),
        ),
        ("character-series oracle", check_series_oracle()),
    ];
    let mut first_failure: Option<String> = None;
    for (name, result) in checks {
        match result {
            Ok(()) => println!("PASS {name}"),
            Err(detail) => {
                println!("FAIL {name}: {detail}");
                if first_failure.is_none() {
                    first_failure = Some(name.to_string());
                }
            }
        }
    }
    match first_failure {
        None => {
            println!("all invariants hold");
            Ok(())
        }
        Some(name) => Err(CliError::Invariant(name)),
    }
}
