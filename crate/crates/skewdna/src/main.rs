use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use skewdna::analysis::{analyze, to_record, Analysis, PARTIAL_SCAN};
use skewdna::formats::{self, MatrixJson, ParamsJson, ParsedSpec, ReportJson, SpecJson};
use skewdna::parallel;
use skewdna::store::{Filter, Store};
use skewdna::verify::{self, Table};
use skewdna_core::dna::{check_sufficient, construction2, dna_export};
use skewdna_core::search::random_divisor_search;
use skewdna_core::{
    CodeParams, ConstaCodeSpec, Derivation, Distance, Error, GrayVariant, RElement, SkewPoly,
    DEFAULT_DISTANCE_BUDGET, DEFAULT_SEARCH_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "skewdna",
    version,
    about = "Skew constacyclic codes over Z4 + wZ4 and DNA codes"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Global {
    /// Code length over R.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Unit constant gamma, e.g. 3 or 1+2w.
    #[arg(long, global = true)]
    gamma: Option<String>,
    /// Derivation parameter alpha: 0, 2, 1+2w or 3+2w.
    #[arg(long, global = true)]
    alpha: Option<String>,
    /// Generator polynomial, e.g. "x^3 + (1+w)x + 3".
    #[arg(long, global = true)]
    g: Option<String>,
    /// Spec as JSON instead of the individual flags.
    #[arg(long, global = true)]
    spec: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = VariantArg::AAb)]
    variant: VariantArg,
    #[arg(long = "row-mode", global = true, value_enum, default_value_t = RowModeArg::Rank)]
    row_mode: RowModeArg,
    /// Codeword (distance) or candidate (search) budget.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// JSON-lines store of analysed codes.
    #[arg(long, global = true)]
    store: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    #[value(name = "a-ab")]
    AAb,
    #[value(name = "ab-b")]
    AbB,
}

#[derive(Clone, Copy, ValueEnum)]
enum RowModeArg {
    Rank,
    Full,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Find monic right divisors of x^n - gamma of a given degree.
    Search {
        #[arg(long)]
        degree: usize,
        /// Also print the parameters of each divisor's code.
        #[arg(long)]
        analyze: bool,
        /// Sample this many random candidates when the exhaustive space is over budget.
        #[arg(long = "random-samples")]
        random_samples: Option<u64>,
    },
    /// Gray image parameters and reversibility of one code.
    Analyze {
        /// Also compute the N-matrix lifts for every preset and row mode.
        #[arg(long)]
        lifts: bool,
    },
    /// Build the DNA code and write its sequences.
    Dna {
        /// Write sequences here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        fasta: bool,
    },
    /// Recompute the published tables and report per row.
    VerifyTables {
        /// all, 2, 3, 4, 5 or examples.
        #[arg(long, default_value = "all")]
        table: String,
    },
    /// Append to or query the store.
    #[command(subcommand)]
    Store(StoreCmd),
}

#[derive(Subcommand)]
enum StoreCmd {
    /// Analyse the spec and append its record.
    Append {
        #[arg(long)]
        lifts: bool,
    },
    Query {
        #[arg(long)]
        length: Option<usize>,
        #[arg(long)]
        k1: Option<usize>,
        #[arg(long)]
        k2: Option<usize>,
        #[arg(long = "min-d")]
        min_d: Option<u32>,
        #[arg(long = "max-d")]
        max_d: Option<u32>,
        #[arg(long = "r-code")]
        r_code: Option<bool>,
        #[arg(long)]
        dna: Option<bool>,
    },
}

/// Exit status plus the message printed on stderr.
struct Fail(u8, String);

const USAGE: u8 = 1;
const BUDGET: u8 = 2;
const PRECONDITION: u8 = 3;

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let code = match e {
            Error::BudgetExceeded { .. } | Error::SearchSpaceTooLarge { .. } => BUDGET,
            Error::NotRightDivisor { .. } | Error::NotReversible | Error::GammaNotUnit(_) => {
                PRECONDITION
            }
            _ => USAGE,
        };
        Fail(code, e.to_string())
    }
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Fail {
        Fail(USAGE, e.to_string())
    }
}

type Res<T> = Result<T, Fail>;

fn usage(msg: impl Into<String>) -> Fail {
    Fail(USAGE, msg.into())
}

impl Global {
    fn variant(&self) -> GrayVariant {
        match self.variant {
            VariantArg::AAb => GrayVariant::AAb,
            VariantArg::AbB => GrayVariant::AbB,
        }
    }

    fn row_mode(&self) -> &'static str {
        match self.row_mode {
            RowModeArg::Rank => "rank",
            RowModeArg::Full => "full",
        }
    }

    fn need<'a, T>(v: &'a Option<T>, flag: &str) -> Res<&'a T> {
        v.as_ref().ok_or_else(|| usage(format!("missing --{flag}")))
    }

    fn derivation(&self) -> Res<Derivation> {
        Ok(Self::need(&self.alpha, "alpha")?.parse()?)
    }

    fn gamma(&self) -> Res<RElement> {
        Ok(Self::need(&self.gamma, "gamma")?.parse()?)
    }

    fn spec_json(&self) -> Res<SpecJson> {
        if let Some(path) = &self.spec {
            let text = fs::read_to_string(path)?;
            return serde_json::from_str(&text)
                .map_err(|e| usage(format!("{}: {e}", path.display())));
        }
        Ok(SpecJson {
            n: *Self::need(&self.n, "n")?,
            gamma: Self::need(&self.gamma, "gamma")?.clone(),
            alpha: Self::need(&self.alpha, "alpha")?.clone(),
            g: Self::need(&self.g, "g")?.clone(),
            variant: self.variant().to_string(),
            row_mode: self.row_mode().to_string(),
        })
    }

    fn parsed(&self) -> Res<ParsedSpec> {
        Ok(self.spec_json()?.parse()?)
    }

    fn distance_budget(&self) -> u64 {
        self.budget.unwrap_or(DEFAULT_DISTANCE_BUDGET)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Res<()> {
    let g = &cli.global;
    match &cli.cmd {
        Cmd::Search {
            degree,
            analyze,
            random_samples,
        } => cmd_search(g, *degree, *analyze, *random_samples),
        Cmd::Analyze { lifts } => cmd_analyze(g, *lifts),
        Cmd::Dna { out, fasta } => cmd_dna(g, out.as_ref(), *fasta),
        Cmd::VerifyTables { table } => cmd_verify(g, table),
        Cmd::Store(StoreCmd::Append { lifts }) => cmd_store_append(g, *lifts),
        Cmd::Store(StoreCmd::Query {
            length,
            k1,
            k2,
            min_d,
            max_d,
            r_code,
            dna,
        }) => cmd_store_query(
            g,
            &Filter {
                length: *length,
                k1: *k1,
                k2: *k2,
                min_d: *min_d,
                max_d: *max_d,
                r_code: *r_code,
                dna: *dna,
            },
        ),
    }
}

fn json_line<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn cmd_search(g: &Global, degree: usize, with_analysis: bool, samples: Option<u64>) -> Res<()> {
    let n = *Global::need(&g.n, "n")?;
    let gamma = g.gamma()?;
    let der = g.derivation()?;
    if degree == 0 || degree >= n {
        return Err(usage(format!("--degree must be in 1..{n}")));
    }
    let found = if let Some(text) = &g.g {
        // verify-known mode: test the supplied polynomial only
        let h = SkewPoly::parse(text, der)?;
        if h.degree() != Some(degree) {
            return Err(usage(format!(
                "--g has degree {:?}, not {degree}",
                h.degree()
            )));
        }
        let target = SkewPoly::x_pow_minus(n, gamma, der);
        let (_, r) = target.right_divmod(&h)?;
        if !r.is_zero() {
            return Err(Error::NotRightDivisor {
                remainder: r.to_string(),
            }
            .into());
        }
        vec![h]
    } else {
        let budget = g.budget.unwrap_or(DEFAULT_SEARCH_BUDGET);
        match parallel::divisor_search(n, gamma, der, degree, budget) {
            Err(Error::SearchSpaceTooLarge { .. }) if samples.is_some() => {
                let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
                random_divisor_search(n, gamma, der, degree, samples.unwrap_or(0), &mut rng)?
            }
            other => other?,
        }
    };
    let budget = g.distance_budget();
    let mut out = io::stdout().lock();
    for h in &found {
        let spec = ConstaCodeSpec::new(n, gamma, h.clone())?;
        let parsed = ParsedSpec {
            spec,
            variant: g.variant(),
            row_mode: g.row_mode().parse()?,
        };
        let params = with_analysis.then(|| {
            parallel::params_or_bound(
                &parsed.spec.gray_image(parsed.variant),
                budget,
                PARTIAL_SCAN,
            )
        });
        match g.format {
            Format::Json => {
                let v = serde_json::json!({
                    "g": h.to_string(),
                    "params": params.as_ref().map(ParamsJson::from),
                });
                writeln!(out, "{}", json_line(&v))?;
            }
            Format::Csv => match &params {
                Some(p) => writeln!(out, "\"{h}\",{}", params_csv(p))?,
                None => writeln!(out, "\"{h}\"")?,
            },
            Format::Table => match &params {
                Some(p) => writeln!(out, "{h}\t{p}")?,
                None => writeln!(out, "{h}")?,
            },
        }
        if let Some(path) = &g.store {
            let a = analyze(&parsed, budget, false);
            Store::new(path).append(&to_record(&parsed, &a))?;
        }
    }
    if g.format == Format::Table {
        eprintln!("{} divisor(s) of degree {degree}", found.len());
    }
    Ok(())
}

fn params_csv(p: &CodeParams) -> String {
    let d = p.d_lee.value().map_or(String::new(), |d| d.to_string());
    format!(
        "{},{},{},{},{}",
        p.length,
        p.k1,
        p.k2,
        d,
        p.d_lee.is_exact()
    )
}

fn print_analysis(g: &Global, p: &ParsedSpec, a: &Analysis) -> Res<()> {
    let mut out = io::stdout().lock();
    match g.format {
        Format::Json => {
            let rec = to_record(p, a);
            writeln!(out, "{}", json_line(&rec))?;
        }
        Format::Csv => {
            let code = p.spec.gray_image(p.variant);
            write!(out, "{}", formats::matrix_to_csv(&code.basis_matrix()))?;
        }
        Format::Table => {
            let r = ReportJson::from(&a.report);
            writeln!(
                out,
                "spec        n={} gamma={} alpha={} g={}",
                p.spec.n(),
                p.spec.gamma(),
                p.spec.derivation(),
                p.spec.g()
            )?;
            writeln!(out, "gray        {}", p.variant)?;
            writeln!(out, "params      {}", a.params)?;
            writeln!(
                out,
                "cond1       g1 self-reciprocal: {}",
                r.g1_self_reciprocal
            )?;
            writeln!(
                out,
                "cond2       g2 shifted reciprocal: {}",
                r.g2_shifted_reciprocal
            )?;
            writeln!(
                out,
                "cond3       {} in C: {}",
                r.membership_poly, r.membership
            )?;
            writeln!(out, "sufficient  {}", r.sufficient_pass)?;
            writeln!(out, "r-code      {}", r.exact_r_code)?;
            writeln!(out, "rc-code     {}", r.exact_rc_code)?;
            match &a.dna {
                Some(d) => writeln!(out, "dna         {d}")?,
                None => writeln!(out, "dna         none (not an R-code)")?,
            }
            for (nm, mode, params) in &a.lifts {
                writeln!(out, "lift {nm:<8} {mode:<5} {params}")?;
            }
        }
    }
    Ok(())
}

fn cmd_analyze(g: &Global, lifts: bool) -> Res<()> {
    let p = g.parsed()?;
    let a = analyze(&p, g.distance_budget(), lifts);
    print_analysis(g, &p, &a)?;
    if let Some(path) = &g.store {
        Store::new(path).append(&to_record(&p, &a))?;
    }
    if !a.params.d_lee.is_exact() && a.params.d_lee != Distance::Infinite {
        return Err(Fail(
            BUDGET,
            format!(
                "distance not enumerated within budget {}; reported value is an upper bound",
                g.distance_budget()
            ),
        ));
    }
    Ok(())
}

fn cmd_dna(g: &Global, out: Option<&PathBuf>, fasta: bool) -> Res<()> {
    let p = g.parsed()?;
    let d = match construction2(&p.spec, p.variant) {
        Ok(d) => d,
        Err(Error::NotReversible) => {
            let r = check_sufficient(&p.spec);
            let mut failed = Vec::new();
            if !r.g1_self_reciprocal.holds() {
                failed.push(format!("g1 self-reciprocal ({})", r.g1_self_reciprocal));
            }
            if !r.g2_shifted_reciprocal.holds() {
                failed.push(format!(
                    "g2 shifted reciprocal ({})",
                    r.g2_shifted_reciprocal
                ));
            }
            if !r.membership.holds() {
                failed.push(format!("{} in C ({})", r.membership_poly, r.membership));
            }
            return Err(Fail(
                PRECONDITION,
                format!("Gray image is not an R-code; failed: {}", failed.join(", ")),
            ));
        }
        Err(e) => return Err(e.into()),
    };
    let budget = g.distance_budget();
    let params = parallel::min_lee_distance(&d, budget)?;
    let seqs = dna_export(&d, budget)?;
    let text = formats::dna_text(&seqs, fasta);
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    match g.format {
        Format::Json => eprintln!(
            "{}",
            json_line(&serde_json::json!({
                "params": ParamsJson::from(&params),
                "matrix": MatrixJson::from(&d),
            }))
        ),
        Format::Csv => eprintln!("{}", params_csv(&params)),
        Format::Table => eprintln!("DNA code {params}, {} sequences", seqs.len()),
    }
    Ok(())
}

fn cmd_verify(g: &Global, table: &str) -> Res<()> {
    let table: Table = table.parse()?;
    let budget = g.budget.unwrap_or(verify::DEFAULT_BUDGET);
    let lines = verify::verify(table, verify::Options { budget });
    let mut out = io::stdout().lock();
    for l in &lines {
        match g.format {
            Format::Json => writeln!(
                out,
                "{}",
                json_line(&serde_json::json!({
                    "row": l.row,
                    "check": l.check,
                    "status": l.status.to_string(),
                }))
            )?,
            Format::Csv => writeln!(
                out,
                "{},\"{}\",\"{}\"",
                l.row,
                l.check,
                l.status.to_string().replace('"', "'")
            )?,
            Format::Table => writeln!(out, "{l}")?,
        }
    }
    let [m, mm, s, nd, f] = verify::summary(&lines);
    if g.format == Format::Table {
        writeln!(
            out,
            "summary: {m} match, {mm} mismatch, {s} skipped, {nd} not-a-divisor, {f} flagged"
        )?;
    }
    Ok(())
}

fn cmd_store_append(g: &Global, lifts: bool) -> Res<()> {
    let path = Global::need(&g.store, "store")?;
    let p = g.parsed()?;
    let a = analyze(&p, g.distance_budget(), lifts);
    let rec = to_record(&p, &a);
    let written = Store::new(path).append(&rec)?;
    let state = if written {
        "appended"
    } else {
        "already present"
    };
    eprintln!("{state}: {}", rec.spec_hash);
    Ok(())
}

fn cmd_store_query(g: &Global, f: &Filter) -> Res<()> {
    let path = Global::need(&g.store, "store")?;
    let scan = Store::new(path).query(f)?;
    for w in &scan.warnings {
        eprintln!("warning: {w}");
    }
    let mut out = io::stdout().lock();
    for r in &scan.records {
        match g.format {
            Format::Json => writeln!(out, "{}", json_line(r))?,
            Format::Csv => writeln!(
                out,
                "{},{},\"{}\",{},\"{}\",{}",
                r.spec_hash,
                r.spec.n,
                r.spec.gamma,
                r.spec.alpha,
                r.spec.g,
                params_csv(&r.params.to_params())
            )?,
            Format::Table => writeln!(
                out,
                "{}  n={} gamma={} alpha={} g={}  {}  r-code={}",
                &r.spec_hash[..12],
                r.spec.n,
                r.spec.gamma,
                r.spec.alpha,
                r.spec.g,
                r.params.to_params(),
                r.reversibility.exact_r_code
            )?,
        }
    }
    Ok(())
}
