//! `symstab`: symmetric-function conversions, character tables, stability
//! scans and transfer-condition checks from the command line.
//!
//! Exit codes: 0 success, 1 fixture mismatch, 2 usage or parse error,
//! 3 resource cap exceeded, 4 internal invariant violation.

mod figures;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use symstab::coeffs::character;
use symstab::frobenius::{
    content_polynomial, macdonald_monomial_coefficient, macdonald_polynomial, qt_kostka, shuffle_h_coefficient,
    shuffle_h_polynomial, LabeledDyckPath,
};
use symstab::limits::{self, DEFAULT_ENUMERATION_CAP, DEFAULT_HORIZON};
use symstab::partition::partitions_of;
use symstab::stability::{
    coefficient_report, schur_report, sequence, table1, table1_table, StabilityReport, SymFuncSequence, Table,
};
use symstab::{Basis, Composition, Error, Partition, QtPoly, SymFunc};

use output::{Output, OutputFormat};

#[derive(Parser)]
#[command(name = "symstab", version, about = "Exact symmetric functions and representation stability")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value = "table")]
    format: OutputFormat,
    /// Largest n scanned by stability commands.
    #[arg(long, global = true)]
    horizon: Option<usize>,
    /// Degree cap for change-of-basis matrices (also read from SYMSTAB_DEGREE_CAP).
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Size cap for full shuffle and Macdonald enumerations. Cost grows
    /// roughly like n! beyond the default.
    #[arg(long, global = true)]
    enumeration_cap: Option<usize>,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Degree-i part of the coinvariant algebra of S_n.
    Coinv,
    /// Bidegree-(i,j) part of the diagonal coinvariants.
    Dr,
    /// Bidegree-(i,j) part of the Garsia-Haiman module of shape mu[n].
    Macdonald,
    /// A fixed sequence with known answers, for testing.
    FixtureV,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a symmetric function in another basis.
    Convert {
        #[arg(long, value_parser = parse_basis)]
        from: Basis,
        /// e.g. "[2,1]" or "2 [2,1] - 1/2 [3]"
        #[arg(long)]
        expr: String,
        #[arg(long, value_parser = parse_basis)]
        to: Basis,
    },
    /// Hall inner product of two symmetric functions.
    Inner {
        #[arg(long, value_parser = parse_basis)]
        left_basis: Basis,
        #[arg(long)]
        left: String,
        #[arg(long, value_parser = parse_basis)]
        right_basis: Basis,
        #[arg(long)]
        right: String,
    },
    /// Character table of the symmetric group S_n.
    Chartable { n: usize },
    /// Check the three transfer conditions for every ordered pair of bases.
    Table1 {
        #[arg(long, default_value_t = 4)]
        size_bound: usize,
    },
    /// Stable ranges of a sequence family.
    Stab {
        #[arg(long, value_enum)]
        family: Family,
        /// First grading degree.
        #[arg(long, default_value_t = 0)]
        i: usize,
        /// Second grading degree (dr, macdonald).
        #[arg(long, default_value_t = 0)]
        j: usize,
        /// Shape before padding (macdonald).
        #[arg(long, value_parser = parse_partition, default_value = "[]")]
        mu: Partition,
        /// Basis of the coefficients scanned; `s` adds uniform-range certificates.
        #[arg(long, value_parser = parse_basis, default_value = "s")]
        basis: Basis,
        /// Largest |λ| listed for bases other than `s`.
        #[arg(long, default_value_t = 3)]
        size_bound: usize,
    },
    /// Modified q,t-Kostka number.
    Qtkostka {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
    },
    /// Shuffle-formula coefficients, or the statistics of one labeled path.
    Shuffle {
        /// Composition α: prints ⟨∇e_n, h_α⟩.
        #[arg(long, value_parser = parse_composition, conflicts_with = "path")]
        alpha: Option<Composition>,
        /// With --alpha: only the coefficient of q^i t^j.
        #[arg(long, requires = "j")]
        i: Option<usize>,
        #[arg(long, requires = "i")]
        j: Option<usize>,
        /// A labeled Dyck path such as "NNEE [1,2]" (labels bottom to top).
        #[arg(long, value_parser = parse_path)]
        path: Option<LabeledDyckPath>,
    },
    /// Modified Macdonald polynomial, or one of its monomial coefficients.
    Macdonald {
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        #[arg(long, value_parser = parse_basis, default_value = "s")]
        basis: Basis,
        /// Content 0^{|ν|-|η|} 1^{η1} 2^{η2} ...: prints ⟨H̃_ν, h⟩ for that content.
        #[arg(long, value_parser = parse_partition)]
        eta: Option<Partition>,
        #[arg(long, requires_all = ["eta", "j"])]
        i: Option<usize>,
        #[arg(long, requires = "i")]
        j: Option<usize>,
    },
    /// Recompute the worked-example fixtures and diff against the shipped values.
    Figures {
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_path(s: &str) -> Result<LabeledDyckPath, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed command and its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::DegreeCap { .. } | Error::EnumerationCap { .. } => 3,
            Error::Invariant(_) | Error::Singular(_) => 4,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

type CmdResult = Result<Output, Failure>;

fn progress(msg: &str) {
    eprintln!("symstab: {msg}");
}

fn symfunc_output(f: &SymFunc) -> Output {
    let mut t = Table::new(&["partition", "coefficient"]);
    for (lam, c) in f.terms() {
        t.push(vec![format!("{}{lam}", f.basis()), c.to_string()]);
    }
    Output::new(t, f.to_json()).with_text(f.to_string())
}

fn poly_output(label: String, value: &QtPoly, extra: serde_json::Value) -> Output {
    let mut t = Table::new(&["quantity", "value"]);
    t.push(vec![label.clone(), value.to_string()]);
    let mut json = json!({"quantity": label, "value": value});
    if let (Some(obj), serde_json::Value::Object(more)) = (json.as_object_mut(), extra) {
        obj.extend(more);
    }
    Output::new(t, json).with_text(value.to_string())
}

fn convert(from: Basis, expr: &str, to: Basis) -> CmdResult {
    let f = SymFunc::parse(expr, from)?;
    Ok(symfunc_output(&f.convert(to)?))
}

fn inner(lb: Basis, left: &str, rb: Basis, right: &str) -> CmdResult {
    let f = SymFunc::parse(left, lb)?;
    let g = SymFunc::parse(right, rb)?;
    let v = f.hall_inner(&g)?;
    Ok(poly_output(format!("<{f}, {g}>"), &v, json!({})))
}

fn chartable(n: usize) -> CmdResult {
    limits::check_degree(n)?;
    let parts = partitions_of(n);
    let mut headers = vec!["λ \\ μ".to_string()];
    headers.extend(parts.iter().map(Partition::to_string));
    let header_refs: Vec<&str> = headers.iter().map(String::as_str).collect();
    let mut t = Table::new(&header_refs).with_title(format!("characters of S_{n}"));
    let mut rows = Vec::new();
    for lam in &parts {
        let values: Vec<i128> = parts.iter().map(|mu| character(lam, mu)).collect();
        let mut row = vec![lam.to_string()];
        row.extend(values.iter().map(i128::to_string));
        t.push(row);
        rows.push(json!({"partition": lam, "values": values}));
    }
    Ok(Output::new(t, json!({"n": n, "classes": parts, "rows": rows})))
}

fn run_table1(size_bound: usize, horizon: usize) -> CmdResult {
    progress(&format!("checking 30 basis pairs, |λ|,|μ| ≤ {size_bound}, degrees up to {horizon}"));
    let reports = table1(size_bound, horizon)?;
    let contradictions: Vec<String> =
        reports.iter().filter(|r| r.has_contradiction()).map(|r| format!("{} -> {}", r.from, r.to)).collect();
    let json = serde_json::to_value(&reports).expect("serializable");
    let out = Output::new(table1_table(&reports), json);
    if contradictions.is_empty() {
        Ok(out)
    } else {
        Err(Failure { code: 4, message: format!("contradicts the expected verdicts: {}", contradictions.join(", ")) })
    }
}

fn family_sequence(family: Family, i: usize, j: usize, mu: &Partition) -> SymFuncSequence {
    match family {
        Family::Coinv => sequence::coinvariant(i),
        Family::Dr => sequence::diagonal(i, j),
        Family::Macdonald => sequence::macdonald(mu, i, j),
        Family::FixtureV => sequence::fixture_v(),
    }
}

fn report_output(r: &StabilityReport) -> Output {
    Output::new(r.to_table(), r.to_json())
}

fn stab(
    family: Family,
    i: usize,
    j: usize,
    mu: &Partition,
    basis: Basis,
    size_bound: usize,
    horizon: usize,
) -> CmdResult {
    let seq = family_sequence(family, i, j, mu);
    progress(&format!("scanning {} in {basis} up to n = {horizon}", seq.label()));
    let report = if basis == Basis::S {
        schur_report(&seq, horizon, None)?
    } else {
        coefficient_report(&seq, basis, horizon, size_bound)?
    };
    Ok(report_output(&report))
}

fn qtkostka(lambda: &Partition, nu: &Partition) -> CmdResult {
    let v = qt_kostka(lambda, nu)?;
    Ok(poly_output(format!("K̃({lambda},{nu})"), &v, json!({"lambda": lambda, "nu": nu})))
}

fn shuffle(alpha: Option<Composition>, ij: Option<(usize, usize)>, path: Option<LabeledDyckPath>) -> CmdResult {
    if let Some(p) = path {
        let word = p.reading_word();
        let pairs = p.dinv_pairs();
        let mut t = Table::new(&["statistic", "value"]);
        t.push(vec!["area".into(), p.area().to_string()]);
        t.push(vec!["dinv".into(), p.dinv().to_string()]);
        t.push(vec!["reading word".into(), format!("{word:?}")]);
        t.push(vec!["dinv pairs".into(), format!("{pairs:?}")]);
        let json = json!({"path": p.to_string(), "area": p.area(), "dinv": p.dinv(), "reading_word": word, "dinv_pairs": pairs});
        return Ok(Output::new(t, json));
    }
    let alpha = alpha.ok_or_else(|| Failure { code: 2, message: "one of --alpha or --path is required".into() })?;
    let label = format!("<nabla e_{}, h{:?}>", alpha.size(), alpha.parts());
    match ij {
        Some((i, j)) => {
            let c = QtPoly::constant(shuffle_h_coefficient(&alpha, i, j));
            Ok(poly_output(format!("[q^{i} t^{j}] {label}"), &c, json!({"alpha": alpha.parts(), "i": i, "j": j})))
        }
        None => {
            let v = shuffle_h_polynomial(&alpha)?;
            Ok(poly_output(label, &v, json!({"alpha": alpha.parts()})))
        }
    }
}

fn macdonald(nu: &Partition, basis: Basis, eta: Option<Partition>, ij: Option<(usize, usize)>) -> CmdResult {
    match (eta, ij) {
        (Some(eta), Some((i, j))) => {
            let c = macdonald_monomial_coefficient(nu, &eta, i, j)?;
            let v = QtPoly::integer(c as i64);
            Ok(poly_output(
                format!("[q^{i} t^{j}] <H̃{nu}, h> at content {eta}"),
                &v,
                json!({"nu": nu, "eta": eta, "i": i, "j": j}),
            ))
        }
        (Some(eta), None) => {
            if eta.size() > nu.size() {
                return Err(Error::SizeMismatch(format!("|{eta}| > |{nu}|")).into());
            }
            let mut content = vec![nu.size() - eta.size()];
            content.extend_from_slice(eta.parts());
            let v = content_polynomial(nu, &content)?;
            Ok(poly_output(format!("<H̃{nu}, h> at content {eta}"), &v, json!({"nu": nu, "eta": eta})))
        }
        (None, _) => {
            progress(&format!("enumerating fillings of {nu}"));
            Ok(symfunc_output(&macdonald_polynomial(nu)?.convert(basis)?))
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Convert { from, expr, to } => convert(from, &expr, to),
        Command::Inner { left_basis, left, right_basis, right } => inner(left_basis, &left, right_basis, &right),
        Command::Chartable { n } => chartable(n),
        Command::Table1 { size_bound } => run_table1(size_bound, cli.horizon.unwrap_or(12)),
        Command::Stab { family, i, j, mu, basis, size_bound } => {
            stab(family, i, j, &mu, basis, size_bound, cli.horizon.unwrap_or(DEFAULT_HORIZON))
        }
        Command::Qtkostka { lambda, nu } => qtkostka(&lambda, &nu),
        Command::Shuffle { alpha, i, j, path } => shuffle(alpha, i.zip(j), path),
        Command::Macdonald { nu, basis, eta, i, j } => macdonald(&nu, basis, eta, i.zip(j)),
        Command::Figures { dir } => {
            let dir = dir.unwrap_or_else(figures::default_dir);
            let r = figures::run(&dir).map_err(|message| Failure { code: 2, message })?;
            // the report is printed either way; mismatches only change the exit code
            Ok(r.output.with_exit_code(u8::from(r.mismatches > 0)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut lim = limits::current();
    if let Some(c) = cli.cap {
        lim.degree = c;
    }
    if let Some(c) = cli.enumeration_cap {
        if c > DEFAULT_ENUMERATION_CAP {
            progress(&format!("enumeration cap raised to {c}; full enumerations grow roughly like n!"));
        }
        lim.enumeration = c;
    }
    limits::set_global(lim);
    let format = cli.format;
    let out_path = cli.out.clone();
    match run(cli) {
        Ok(out) => {
            let text = out.render(format);
            match out_path {
                Some(p) => {
                    if let Err(e) = std::fs::write(&p, text) {
                        eprintln!("symstab: {}: {e}", p.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(out.exit_code)
        }
        Err(f) => {
            eprintln!("symstab: {}", f.message.trim_end());
            ExitCode::from(f.code)
        }
    }
}
