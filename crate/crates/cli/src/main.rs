//! `negbase`: command-line front end for exact negative-base numeration.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use negbase::admissibility::{check_admissible, check_admissible_bounded, BoundedVerdict, RefStrings, Violation};
use negbase::coding::{code_window, extract_with, project_finite, verify_fixed_point, window_records};
use negbase::digits::{DigitString, EventuallyPeriodicString};
use negbase::expansion::{alphabet, endpoint_window, expand, ref_string_l, ref_string_r, ExpansionOutcome};
use negbase::integers::{is_trivial, representations_of, zbeta_between, zbeta_window, GapStructure};
use negbase::serial::{parse_base, parse_element, BaseRecord};
use negbase::{Base, Error, FieldElement, Result};

const EXIT_CODES: &str = "\
Exit codes:
   0  success
   2  usage or parse error
   3  polynomial is zero or constant
   4  polynomial is reducible
   5  irreducibility could not be certified
   6  empty isolating interval
   7  interval does not isolate exactly one root
   8  beta is not greater than one
   9  l outside (-1, 0]
  10  division by zero
  11  point outside [l, l+1)
  12  reference strings not periodic within --max-iter
  13  l outside [-beta/(beta+1), -1/(beta+1)]
  14  no representation within --max-k
  15  a gap could not be labelled
  16  a letter is not realized by any searched pair
  17  inconsistent morphism image
  18  word window shorter than --horizon
  19  letter without a tabulated image
  20  search budget exhausted
  21  invalid argument

On failure a JSON record {\"error\", \"message\", \"exit_code\"} is written to stderr.

Field elements (--x, --l, --bound, --lo, --hi) are either coefficient lists
in the power basis (\"1/2,0,-1\") or expressions in b such as \"-b^9/(b^9+1)\".";

#[derive(Parser, Debug)]
#[command(name = "negbase", version, about = "Exact (-beta)-expansions, admissibility and (-beta)-integers", after_help = EXIT_CODES)]
struct Cli {
    /// Minimal polynomial of beta, integer coefficients, constant term first
    #[arg(long, global = true, allow_hyphen_values = true)]
    minpoly: Option<String>,
    /// Rational interval isolating beta, "lo,hi"
    #[arg(long, global = true, allow_hyphen_values = true)]
    iso: Option<String>,
    /// Left endpoint l of the domain [l, l+1)
    #[arg(long, global = true, allow_hyphen_values = true)]
    l: Option<String>,
    /// JSON base record {"minpoly": [...], "iso": [lo, hi], "l": [...]} instead of the three flags
    #[arg(long, global = true)]
    base: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Iteration budget for periodicity detection
    #[arg(long, global = true, default_value_t = 1000)]
    max_iter: usize,
    /// Window radius for zbeta, word and morphism --project
    #[arg(long, global = true, allow_hyphen_values = true)]
    bound: Option<String>,
    /// Largest letter whose image is tabulated
    #[arg(long, global = true, default_value_t = 9)]
    letter_budget: usize,
    /// Print negative digits as ~d (the empty word prints as e)
    #[arg(long, global = true)]
    overline: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expansion d(x) of a point of [l, l+1)
    Expand {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Reference strings d(l) and d*(l+1)
    Refstrings,
    /// Digit alphabet
    Alphabet,
    /// Which endpoint windows contain l
    WindowCheck,
    /// Admissibility of an eventually periodic string "pre|period"
    Admissible {
        #[arg(allow_hyphen_values = true)]
        string: String,
        /// Test 0 followed by the string
        #[arg(long)]
        strong: bool,
        /// Compare only this many digits when the reference strings are not periodic
        #[arg(long)]
        horizon: Option<usize>,
    },
    /// Representations of x obtained from x/(-beta)^k for k <= max-k
    Representations {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 9)]
        max_k: usize,
    },
    /// The (-beta)-integers in [-bound, bound] (default bound 10), or in [lo, hi]
    Zbeta {
        #[arg(long, allow_hyphen_values = true, requires = "hi")]
        lo: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "lo")]
        hi: Option<String>,
    },
    /// Gap lengths Delta_k
    Distances {
        /// "a..b" (inclusive) or a single k
        #[arg(long, default_value = "0..5")]
        k: String,
    },
    /// The extremal words min(k) and max(k)
    Minmax {
        #[arg(long, default_value = "0..5")]
        k: String,
    },
    /// Antimorphism images of letters 0..=letter-budget
    Morphism {
        /// Also search for a projection to a finite alphabet, using the word in [-bound, bound] (default 70)
        #[arg(long)]
        project: bool,
    },
    /// Gap word of the (-beta)-integers in [-bound, bound] (default 60)
    Word {
        /// Emit (n, z_n, gap, label) rows
        #[arg(long)]
        plot_data: bool,
        /// Check that the square of the antimorphism fixes the word on this many letters per side
        #[arg(long)]
        horizon: Option<usize>,
        /// Apply the finite projection, if one is found
        #[arg(long)]
        project: bool,
    },
}

struct Ctx {
    cli: Cli,
    base: Base,
}

impl Ctx {
    fn element(&self, s: &str) -> Result<FieldElement> {
        parse_element(self.base.field(), s)
    }

    fn bound(&self, default: i64) -> Result<FieldElement> {
        match &self.cli.bound {
            Some(s) => self.element(s),
            None => Ok(self.base.int(default)),
        }
    }

    fn refs(&self) -> Result<RefStrings> {
        RefStrings::compute(&self.base, self.cli.max_iter)
    }

    fn digits(&self, d: &DigitString) -> String {
        if d.is_empty() {
            "e".into()
        } else if self.cli.overline {
            d.overline()
        } else {
            d.to_string()
        }
    }

    fn string(&self, s: &EventuallyPeriodicString) -> String {
        if self.cli.overline {
            s.overline()
        } else {
            s.to_string()
        }
    }

    fn outcome(&self, o: &ExpansionOutcome) -> String {
        match o {
            ExpansionOutcome::Periodic { string, .. } => self.string(string),
            ExpansionOutcome::PrefixOnly { digits, .. } => format!("{},...", self.digits(digits)),
        }
    }
}

/// Output of one command: text and JSON renderings.
enum Output {
    Doc { text: String, json: Value },
    Lines { text: String, json: Vec<Value> },
}

fn load_base(cli: &Cli) -> Result<Base> {
    if let Some(path) = &cli.base {
        let raw = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
        let rec: BaseRecord = serde_json::from_str(&raw).map_err(|e| Error::Parse(e.to_string()))?;
        return rec.to_base();
    }
    match (&cli.minpoly, &cli.iso, &cli.l) {
        (Some(p), Some(i), Some(l)) => parse_base(p, i, l),
        _ => Err(Error::InvalidArgument(
            "give --minpoly, --iso and --l, or --base FILE".into(),
        )),
    }
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<usize>> {
    let bad = || Error::Parse(format!("invalid range {s:?}, expected a..b"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let r = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
        None => {
            let k = num(s)?;
            k..=k
        }
    };
    if r.is_empty() {
        return Err(bad());
    }
    Ok(r)
}

fn cmd_expand(ctx: &Ctx, x: &str) -> Result<Output> {
    let x = ctx.element(x)?;
    let o = expand(&ctx.base, &x, ctx.cli.max_iter)?;
    let mut json = o.to_json();
    json["x"] = json!(x.coeff_strings());
    Ok(Output::Doc {
        text: ctx.outcome(&o),
        json,
    })
}

fn cmd_refstrings(ctx: &Ctx) -> Result<Output> {
    let l = ref_string_l(&ctx.base, ctx.cli.max_iter)?;
    let r = ref_string_r(&ctx.base, ctx.cli.max_iter)?;
    Ok(Output::Doc {
        text: format!("d(l) = {}\nd*(l+1) = {}", ctx.outcome(&l), ctx.outcome(&r)),
        json: json!({ "left": l.to_json(), "right": r.to_json() }),
    })
}

fn cmd_alphabet(ctx: &Ctx) -> Result<Output> {
    let a = alphabet(&ctx.base);
    let digits: Vec<i64> = a.clone().collect();
    Ok(Output::Doc {
        text: ctx.digits(&DigitString(digits.clone())),
        json: json!({ "min": a.start(), "max": a.end(), "digits": digits }),
    })
}

fn cmd_window_check(ctx: &Ctx) -> Result<Output> {
    let w = endpoint_window(&ctx.base);
    Ok(Output::Doc {
        text: format!(
            "zero_digit: {}\nrenyi_alphabet: {}\nunique_expansions: {}",
            w.zero_digit, w.renyi_alphabet, w.unique_expansions
        ),
        json: serde_json::to_value(w).expect("plain record"),
    })
}

fn describe(v: &Violation) -> String {
    match v {
        Violation::Left { shift } => format!("suffix from position {shift} is below d(l)"),
        Violation::Right { shift } => format!("suffix from position {shift} is not below d*(l+1)"),
    }
}

fn cmd_admissible(ctx: &Ctx, s: &str, strong: bool, horizon: Option<usize>) -> Result<Output> {
    let s: EventuallyPeriodicString = s.parse()?;
    let checked = if strong { s.prepend(&[0]) } else { s.clone() };
    let shown = ctx.string(&checked);
    let (verdict, json) = match (ctx.refs(), horizon) {
        (Ok(refs), _) => match check_admissible(&checked, &refs) {
            Ok(()) => ("admissible".to_string(), json!({ "admissible": true })),
            Err(v) => (
                format!("not admissible: {}", describe(&v)),
                json!({ "admissible": false, "violation": v }),
            ),
        },
        (Err(Error::RefsNotPeriodic { .. }), Some(h)) => {
            let l = ref_string_l(&ctx.base, ctx.cli.max_iter)?;
            let r = ref_string_r(&ctx.base, ctx.cli.max_iter)?;
            match check_admissible_bounded(&checked, &l, &r, h)? {
                BoundedVerdict::AdmissibleUpTo { horizon } => (
                    format!("admissible up to horizon {horizon}"),
                    json!({ "admissible_up_to": horizon }),
                ),
                BoundedVerdict::Violated(v) => (
                    format!("not admissible: {}", describe(&v)),
                    json!({ "admissible": false, "violation": v }),
                ),
            }
        }
        (Err(e), _) => return Err(e),
    };
    let mut json = json;
    json["string"] = json!(checked.to_string());
    Ok(Output::Doc {
        text: format!("{shown}: {verdict}"),
        json,
    })
}

fn cmd_representations(ctx: &Ctx, x: &str, max_k: usize) -> Result<Output> {
    let x = ctx.element(x)?;
    let reps = representations_of(&ctx.base, &x, max_k, ctx.cli.max_iter)?;
    let mut text = String::new();
    for r in &reps.strings {
        let frac = r.fraction.as_ref().map(|f| ctx.string(f)).unwrap_or_else(|| "?".into());
        let int = if r.integer_part.is_empty() {
            "0".to_string()
        } else {
            ctx.digits(&r.integer_part)
        };
        writeln!(text, "{int}.{frac}").unwrap();
    }
    let inside: Vec<String> = reps
        .scalings
        .iter()
        .filter(|(_, inside)| *inside)
        .map(|(k, _)| k.to_string())
        .collect();
    write!(text, "x/(-beta)^k in [l, l+1) for k in {{{}}}", inside.join(",")).unwrap();
    let json = json!({
        "x": x.coeff_strings(),
        "scalings": reps.scalings.iter().map(|(k, inside)| json!({ "k": k, "inside": inside })).collect::<Vec<_>>(),
        "representations": reps.strings.iter().map(|r| json!({
            "k": r.k,
            "integer_part": r.integer_part,
            "fraction": r.fraction.as_ref().map(|f| f.to_string()),
            "string": r.render(),
        })).collect::<Vec<_>>(),
    });
    Ok(Output::Doc { text, json })
}

fn cmd_zbeta(ctx: &Ctx, lo: Option<&str>, hi: Option<&str>) -> Result<Output> {
    let refs = ctx.refs()?;
    let b = &ctx.base;
    let window = match (lo, hi) {
        (Some(lo), Some(hi)) => zbeta_between(b, &ctx.element(lo)?, &ctx.element(hi)?, &refs)?,
        _ => zbeta_window(b, &ctx.bound(10)?, &refs)?,
    };
    let longest = window.points.iter().map(|p| p.digits.len()).max().unwrap_or(0);
    let structure = GapStructure::new(b, &refs, longest + 1);
    let records = window_records(&window, &structure, 12);
    let mut text = String::new();
    if is_trivial(b) {
        writeln!(text, "# the set of (-beta)-integers is {{0}}").unwrap();
    }
    for (p, r) in window.points.iter().zip(&records) {
        let label = r["gap_label_k"].as_u64().map(|k| k.to_string()).unwrap_or_else(|| "-".into());
        let digits = if p.digits.is_empty() {
            "0".to_string()
        } else {
            ctx.digits(&p.digits)
        };
        writeln!(text, "{}\t{}\t{}\t{}", p.value.to_decimal(12), p.value, digits, label).unwrap();
    }
    text.pop();
    Ok(Output::Lines { text, json: records })
}

fn cmd_distances(ctx: &Ctx, ks: &str) -> Result<Output> {
    let ks = parse_range(ks)?;
    let refs = ctx.refs()?;
    let g = GapStructure::new(&ctx.base, &refs, *ks.end());
    let mut text = String::new();
    let mut rows = Vec::new();
    for k in ks {
        let d = g.delta(k);
        writeln!(text, "Delta_{k} = {} ~ {}", d, d.to_decimal(12)).unwrap();
        rows.push(json!({ "k": k, "exact": d.coeff_strings(), "expr": d.to_string(), "approx": d.to_decimal(12) }));
    }
    text.pop();
    Ok(Output::Doc {
        text,
        json: Value::Array(rows),
    })
}

fn cmd_minmax(ctx: &Ctx, ks: &str) -> Result<Output> {
    let ks = parse_range(ks)?;
    let refs = ctx.refs()?;
    let g = GapStructure::new(&ctx.base, &refs, *ks.end());
    let mut text = String::new();
    let mut rows = Vec::new();
    for k in ks {
        let e = g.extremal(k);
        writeln!(text, "k = {k}: min = {}  max = {}", ctx.digits(&e.min), ctx.digits(&e.max)).unwrap();
        let shapes = g.shapes(k);
        rows.push(json!({
            "k": k,
            "min": e.min,
            "max": e.max,
            "shape_min": shapes.as_ref().map(|s| &s.0),
            "shape_max": shapes.as_ref().map(|s| &s.1),
        }));
    }
    text.pop();
    Ok(Output::Doc {
        text,
        json: Value::Array(rows),
    })
}

fn join(w: &[usize]) -> String {
    w.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_morphism(ctx: &Ctx, project: bool) -> Result<Output> {
    let refs = ctx.refs()?;
    let b = &ctx.base;
    let budget = ctx.cli.letter_budget;
    let structure = GapStructure::new(b, &refs, budget + 5);
    let table = extract_with(&structure, budget)?;
    let mut text = String::new();
    for (k, img) in table.images() {
        writeln!(text, "{k} -> {}", join(img)).unwrap();
    }
    let rs: serde_json::Map<String, Value> = table
        .rs_words()
        .iter()
        .map(|(k, v)| (k.to_string(), serde_json::to_value(v).expect("plain record")))
        .collect();
    let mut json = json!({ "table": table.to_json(), "rs_words": rs });
    if project {
        let (_, _, word) = code_window(b, &refs, &ctx.bound(70)?)?;
        let outcome = project_finite(&table, &structure, &word)?;
        match outcome.found() {
            Some(p) => {
                writeln!(text, "projection onto {{{}}}:", join(&p.alphabet)).unwrap();
                for (k, img) in &p.images {
                    writeln!(text, "{k} -> {}", join(img)).unwrap();
                }
            }
            None => writeln!(text, "no projection found: {}", outcome.to_json()["reason"]).unwrap(),
        }
        json["projection"] = outcome.to_json();
    }
    text.pop();
    Ok(Output::Doc { text, json })
}

fn cmd_word(ctx: &Ctx, plot_data: bool, horizon: Option<usize>, project: bool) -> Result<Output> {
    let refs = ctx.refs()?;
    let b = &ctx.base;
    let (window, _, word) = code_window(b, &refs, &ctx.bound(60)?)?;
    let needs_table = horizon.is_some() || project;
    let top = word.alphabet().iter().max().copied().unwrap_or(0);
    let budget = ctx.cli.letter_budget.max(top + 1);
    let (table, structure) = if needs_table {
        let structure = GapStructure::new(b, &refs, budget + 5);
        (Some(extract_with(&structure, budget)?), Some(structure))
    } else {
        (None, None)
    };
    let mut shown = word.clone();
    let mut json = word.to_json();
    let mut notes = String::new();
    if project {
        let outcome = project_finite(table.as_ref().expect("built"), structure.as_ref().expect("built"), &word)?;
        json["projection"] = outcome.to_json();
        match outcome.found() {
            Some(p) => shown = p.project_word(&word)?,
            None => writeln!(notes, "no projection found: {}", outcome.to_json()["reason"]).unwrap(),
        }
        json["projected"] = shown.to_json();
    }
    if let Some(h) = horizon {
        let fixed = verify_fixed_point(&word, table.as_ref().expect("built"), h)?;
        json["fixed_point"] = json!({ "horizon": h, "holds": fixed });
        writeln!(notes, "fixed point on horizon {h}: {fixed}").unwrap();
    }
    if plot_data {
        let n0 = word.origin() as i64;
        let rows: Vec<Value> = window
            .points
            .windows(2)
            .zip(shown.letters())
            .enumerate()
            .map(|(i, (pair, &k))| {
                let gap = &pair[1].value - &pair[0].value;
                json!({
                    "n": i as i64 - n0,
                    "z": pair[0].value.to_decimal(12),
                    "gap": gap.to_decimal(12),
                    "label": k,
                })
            })
            .collect();
        let mut text = String::from("# n\tz_n\tgap\tlabel");
        for r in &rows {
            write!(text, "\n{}\t{}\t{}\t{}", r["n"], r["z"].as_str().unwrap(), r["gap"].as_str().unwrap(), r["label"]).unwrap();
        }
        return Ok(Output::Lines { text, json: rows });
    }
    let (left, right) = shown.letters().split_at(shown.origin());
    let text = format!("{}|{}\n{}", join(left), join(right), notes);
    Ok(Output::Doc {
        text: text.trim_end().to_string(),
        json,
    })
}

fn run(cli: Cli) -> Result<Output> {
    let base = load_base(&cli)?;
    let ctx = Ctx { cli, base };
    match &ctx.cli.command {
        Command::Expand { x } => cmd_expand(&ctx, x),
        Command::Refstrings => cmd_refstrings(&ctx),
        Command::Alphabet => cmd_alphabet(&ctx),
        Command::WindowCheck => cmd_window_check(&ctx),
        Command::Admissible { string, strong, horizon } => cmd_admissible(&ctx, string, *strong, *horizon),
        Command::Representations { x, max_k } => cmd_representations(&ctx, x, *max_k),
        Command::Zbeta { lo, hi } => cmd_zbeta(&ctx, lo.as_deref(), hi.as_deref()),
        Command::Distances { k } => cmd_distances(&ctx, k),
        Command::Minmax { k } => cmd_minmax(&ctx, k),
        Command::Morphism { project } => cmd_morphism(&ctx, *project),
        Command::Word {
            plot_data,
            horizon,
            project,
        } => cmd_word(&ctx, *plot_data, *horizon, *project),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(Output::Doc { text, json }) => {
            match format {
                Format::Text => println!("{text}"),
                Format::Json => println!("{json}"),
            }
            ExitCode::SUCCESS
        }
        Ok(Output::Lines { text, json }) => {
            match format {
                Format::Text => println!("{text}"),
                Format::Json => {
                    for line in json {
                        println!("{line}");
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = e.exit_code();
            eprintln!("{}", json!({ "error": e.kind(), "message": e.to_string(), "exit_code": code }));
            ExitCode::from(code as u8)
        }
    }
}
