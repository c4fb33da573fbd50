use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use balanced_rs::mask::{self, MaskMatrix, MaskParams, SelectorVector};
use balanced_rs::{
    CodeProfile, DecoderKind, Field, FieldElement, GeneratorSet, Gf, GfError, MaskError, MatrixFile,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::CliError;
use crate::symbols::{self, StreamFormat};

#[derive(Parser)]
#[command(name = "balrs", version)]
#[command(about = "Balanced, sparsest generator matrices for cyclic Reed-Solomon codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Construct a balanced generator matrix and write it as JSON.
    Gen(GenArgs),
    /// Check every structural property of a matrix file.
    Verify(MatrixArg),
    /// Encode blocks of k symbols into codewords of n symbols.
    Encode(EncodeArgs),
    /// Decode blocks of n symbols back to k-symbol messages.
    Decode(DecodeArgs),
    /// Report per-node load and update cost as JSON.
    Stats(MatrixArg),
    /// Print the circulant mask matrix, selector and chosen masks.
    Masks(MasksArgs),
}

#[derive(Args)]
pub struct GenArgs {
    /// Field order, a prime power.
    #[arg(long)]
    pub q: u64,
    /// Irreducible modulus for extension fields, low-to-high, comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub ext_modulus: Option<Vec<u64>>,
    /// Code length; must be q - 1.
    #[arg(long)]
    pub n: Option<usize>,
    /// Code dimension.
    #[arg(long)]
    pub k: usize,
    /// Primitive element as a canonical integer.
    #[arg(long)]
    pub alpha: Option<u64>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct MatrixArg {
    #[arg(long)]
    pub matrix: PathBuf,
}

#[derive(Args)]
pub struct EncodeArgs {
    #[arg(long)]
    pub matrix: PathBuf,
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: StreamFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum DecoderArg {
    #[default]
    Syndrome,
    Gao,
}

#[derive(Args)]
pub struct DecodeArgs {
    #[arg(long)]
    pub matrix: PathBuf,
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: StreamFormat,
    /// Erased positions within every block, comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub erasures: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t)]
    pub decoder: DecoderArg,
    /// Emit zeros for undecodable blocks instead of suppressing all output.
    #[arg(long)]
    pub best_effort: bool,
}

#[derive(Args)]
pub struct MasksArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gen(a) => gen(a),
        Command::Verify(a) => verify(&a.matrix),
        Command::Encode(a) => encode(a),
        Command::Decode(a) => decode(a),
        Command::Stats(a) => stats(&a.matrix),
        Command::Masks(a) => masks(a),
    }
}

/// Nontrivial admissible dimensions nearest to `k`; falls back to the
/// trivial k = 1 and k = n when nothing else exists.
pub fn suggest_dimensions(n: usize, k: usize) -> Vec<usize> {
    let all = mask::admissible_dimensions(n);
    let mut pool: Vec<usize> = all.iter().copied().filter(|&c| c > 1 && c < n).collect();
    if pool.is_empty() {
        pool = all;
    }
    pool.sort_by_key(|&c| (c.abs_diff(k), c));
    pool.truncate(4);
    pool.sort_unstable();
    pool
}

fn field_error(e: GfError) -> CliError {
    CliError::Format(format!("invalid field: {e}"))
}

fn gen(args: GenArgs) -> Result<(), CliError> {
    let (p, m) = balanced_rs::gf::prime_power(args.q)
        .ok_or_else(|| field_error(GfError::NotPrimePower(args.q)))?;
    let mut builder = Gf::builder(p, m);
    if let Some(c) = args.ext_modulus {
        builder = builder.modulus(c);
    }
    if let Some(a) = args.alpha {
        builder = builder.alpha(a);
    }
    let field = builder.build().map_err(field_error)?;
    let n = (field.order() - 1) as usize;
    if let Some(requested) = args.n {
        if requested != n {
            return Err(CliError::Inadmissible {
                message: format!("n must be q - 1 = {n} for a cyclic code, got {requested}"),
                suggestions: Vec::new(),
            });
        }
    }
    match MaskParams::new(n, args.k) {
        Ok(_) => {}
        Err(MaskError::NonIntegralBalance { numerator, .. }) => {
            return Err(CliError::Inadmissible {
                message: format!(
                    "k(n-k+1)/n = {numerator}/{n} is not an integer for n = {n}, k = {}",
                    args.k
                ),
                suggestions: suggest_dimensions(n, args.k),
            });
        }
        Err(e) => {
            return Err(CliError::Inadmissible {
                message: e.to_string(),
                suggestions: suggest_dimensions(n, args.k.clamp(1, n)),
            })
        }
    }
    let profile = CodeProfile::new(field, args.k).map_err(|e| CliError::Format(e.to_string()))?;
    let set = GeneratorSet::build(profile).map_err(|e| CliError::Format(e.to_string()))?;
    let doc = MatrixFile::from_set(&set);
    let json = render_matrix_file(&doc)?;
    let p = set.params();
    let summary = format!(
        "n={} k={} d={} b={} g={} selector support={:?}",
        p.n,
        p.k,
        p.d,
        p.b,
        p.g,
        set.selector().support()
    );
    match &args.out {
        Some(path) => {
            fs::write(path, json)?;
            println!("{summary}");
        }
        None => {
            symbols::write_output(None, json.as_bytes())?;
            eprintln!("{summary}");
        }
    }
    Ok(())
}

/// Pretty JSON with one matrix row per line.
pub fn render_matrix_file(doc: &MatrixFile) -> Result<String, CliError> {
    let rows = |m: &[Vec<u64>]| -> Result<String, CliError> {
        let lines = m
            .iter()
            .map(|r| serde_json::to_string(r).map(|s| format!("    {s}")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(format!("[\n{}\n  ]", lines.join(",\n")))
    };
    Ok(format!(
        "{{\n  \"profile\": {},\n  \"P\": {},\n  \"G\": {}\n}}\n",
        serde_json::to_string(&doc.profile)?,
        rows(&doc.transform)?,
        rows(&doc.generator)?
    ))
}

fn load(path: &Path) -> Result<GeneratorSet<Gf>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Format(format!("cannot read {}: {e}", path.display())))?;
    let doc: MatrixFile = serde_json::from_str(&text)?;
    Ok(doc.to_set()?)
}

fn verify(path: &Path) -> Result<(), CliError> {
    let set = load(path)?;
    let r = set.report();
    let p = set.params();
    let row = |ok: bool, detail: String| (if ok { "PASS" } else { "FAIL" }, detail);
    let lines = [
        (
            "row weight (sparsest)",
            row(
                r.sparsest.is_none(),
                r.sparsest
                    .map_or(format!("all rows weigh {}", p.d), |i| format!("row {i}")),
            ),
        ),
        (
            "column weight (balanced)",
            row(
                r.balanced.is_none(),
                r.balanced
                    .map_or(format!("all columns weigh {}", p.b), |j| {
                        format!("column {j}")
                    }),
            ),
        ),
        ("rank", row(r.rank == r.k, format!("{} of {}", r.rank, r.k))),
        (
            "mask support",
            row(
                r.support.is_none(),
                r.support
                    .map_or(String::new(), |(i, j)| format!("row {i}, column {j}")),
            ),
        ),
        (
            "code membership",
            row(
                r.non_codewords.is_empty(),
                if r.non_codewords.is_empty() {
                    String::new()
                } else {
                    format!("rows {:?}", r.non_codewords)
                },
            ),
        ),
        ("G = P * G_RS", row(r.product_matches, String::new())),
    ];
    println!("n={} k={} d={} b={}", p.n, p.k, p.d, p.b);
    for (name, (status, detail)) in &lines {
        println!("{name:<26}{status}  {detail}");
    }
    match r.first_failure() {
        None => Ok(()),
        Some(what) => Err(CliError::VerifyFailed(what)),
    }
}

fn encode(args: EncodeArgs) -> Result<(), CliError> {
    let set = load(&args.matrix)?;
    let field = set.profile().field().clone();
    let k = set.profile().k();
    let input = symbols::read_input(args.input.as_deref())?;
    let syms = symbols::parse(&field, &input, args.format, false)?;
    if syms.len() % k != 0 {
        return Err(CliError::Framing(format!(
            "{} symbols is not a multiple of k = {k}",
            syms.len()
        )));
    }
    let blocks = syms
        .chunks(k)
        .map(|chunk| {
            let u: Vec<FieldElement> = chunk.iter().map(|s| s.expect("no erasures")).collect();
            set.encode(&u).map_err(|e| CliError::Framing(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let bytes = symbols::render(&field, &blocks, args.format)?;
    symbols::write_output(args.out.as_deref(), &bytes)
}

fn decode(args: DecodeArgs) -> Result<(), CliError> {
    let set = load(&args.matrix)?;
    let field = set.profile().field().clone();
    let (n, k) = (set.profile().n(), set.profile().k());
    if let Some(&bad) = args.erasures.iter().flatten().find(|&&j| j >= n) {
        return Err(CliError::Framing(format!(
            "erasure position {bad} is not below n = {n}"
        )));
    }
    let input = symbols::read_input(args.input.as_deref())?;
    let syms = symbols::parse(&field, &input, args.format, true)?;
    if syms.len() % n != 0 {
        return Err(CliError::Framing(format!(
            "{} symbols is not a multiple of n = {n}",
            syms.len()
        )));
    }
    let kind = match args.decoder {
        DecoderArg::Syndrome => DecoderKind::Syndrome,
        DecoderArg::Gao => DecoderKind::Gao,
    };
    let mut blocks = Vec::with_capacity(syms.len() / n);
    let mut first_failure = None;
    for (index, chunk) in syms.chunks(n).enumerate() {
        let mut received = chunk.to_vec();
        for &j in args.erasures.iter().flatten() {
            received[j] = None;
        }
        let result = if received.iter().any(Option::is_none) {
            set.decode_erasures(&received)
        } else {
            let word: Vec<FieldElement> = received.into_iter().flatten().collect();
            set.decode(&word, kind)
        };
        match result {
            Ok(u) => blocks.push(u),
            Err(e) => {
                let err = CliError::Decode {
                    block: index,
                    reason: e.to_string(),
                };
                if !args.best_effort {
                    return Err(err);
                }
                eprintln!("error: {err}");
                first_failure.get_or_insert(err);
                blocks.push(vec![field.zero(); k]);
            }
        }
    }
    let bytes = symbols::render(&field, &blocks, args.format)?;
    symbols::write_output(args.out.as_deref(), &bytes)?;
    match first_failure {
        None => Ok(()),
        Some(e) => Err(e),
    }
}

#[derive(Serialize)]
struct LoadSummary {
    row_weights: Vec<usize>,
    column_weights: Vec<usize>,
    row_weight_histogram: BTreeMap<usize, usize>,
    column_weight_histogram: BTreeMap<usize, usize>,
    nonzeros: usize,
    max_column_load: usize,
}

impl LoadSummary {
    fn of(rows: Vec<usize>, cols: Vec<usize>) -> Self {
        let hist = |w: &[usize]| {
            w.iter().fold(BTreeMap::new(), |mut h, &x| {
                *h.entry(x).or_insert(0) += 1;
                h
            })
        };
        LoadSummary {
            row_weight_histogram: hist(&rows),
            column_weight_histogram: hist(&cols),
            nonzeros: rows.iter().sum(),
            max_column_load: cols.iter().copied().max().unwrap_or(0),
            row_weights: rows,
            column_weights: cols,
        }
    }
}

#[derive(Serialize)]
struct StatsReport {
    n: usize,
    k: usize,
    d: usize,
    b: usize,
    /// Column weight = symbols each storage node combines per encoding.
    /// Row weight = nodes touched when one message symbol changes.
    balanced: LoadSummary,
    dense_baseline: LoadSummary,
    nonzero_ratio: f64,
}

fn stats(path: &Path) -> Result<(), CliError> {
    let set = load(path)?;
    let g = set.generator();
    let dense = set.code().vandermonde_generator();
    let p = set.params();
    let balanced = LoadSummary::of(g.row_weights(), g.column_weights());
    let dense_baseline = LoadSummary::of(dense.row_weights(), dense.column_weights());
    let report = StatsReport {
        n: p.n,
        k: p.k,
        d: p.d,
        b: p.b,
        nonzero_ratio: balanced.nonzeros as f64 / dense_baseline.nonzeros as f64,
        balanced,
        dense_baseline,
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}

fn masks(args: MasksArgs) -> Result<(), CliError> {
    let params = MaskParams::new(args.n, args.k).map_err(|e| CliError::Inadmissible {
        message: e.to_string(),
        suggestions: if args.n > 0 {
            suggest_dimensions(args.n, args.k)
        } else {
            Vec::new()
        },
    })?;
    let selector = SelectorVector::solve(&params);
    let chosen =
        mask::select_masks(&selector, &params).map_err(|e| CliError::Format(e.to_string()))?;
    let bits: Vec<String> = selector.bits().iter().map(u8::to_string).collect();
    println!("# A = circ(a), n = {}, k = {}", params.n, params.k);
    print!("{}", MaskMatrix::circulant(&params));
    println!("# v");
    println!("{}", bits.join(" "));
    println!("# selected rows {:?}", selector.support());
    print!("{}", MaskMatrix::stack(&chosen));
    Ok(())
}
