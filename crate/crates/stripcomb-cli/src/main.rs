//! Command-line front end for the stripcomb library: exact counting,
//! generating functions, bijections, identity verification, and conjecture
//! scanning with machine-readable (JSON Lines) output.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use stripcomb::altseq::{
    altseq_gf_all_even, altseq_gf_all_odd, altseq_gf_even, altseq_gf_odd,
    altseq_gf_weighted_all_even, altseq_gf_weighted_all_odd, altseq_gf_weighted_even,
    altseq_gf_weighted_odd, count_all, count_altseq, cumulative_gf, weighted_all,
    weighted_altseq_poly, AltSeq,
};
use stripcomb::exact::{Rat, RatFunc, UniPoly};
use stripcomb::heaps::{
    altseq_to_reordered_heap, altseq_to_segment_heap, dimer_heap_to_path, path_to_dimer_heap,
    polyomino_gf_closed, reordered_heap_to_altseq, segment_heap_to_altseq, Piece,
};
use stripcomb::multipoly::XRatFunc;
use stripcomb::paths::{
    count_paths, motzkin_count, motzkin_gf_closed, motzkin_weighted_poly, path_gf_closed,
    weighted_path_poly, Step, UpDownPath, WeightScheme,
};
use stripcomb::tableaux::{
    count_alt_tableaux, paths_to_tableau, tableau_to_paths, weighted_alt_tableaux, AltTableau,
    Flags, RegionKind, RegionSpec, TableauShape,
};
use stripcomb::verify::{
    run_check, run_default_check, run_default_suite, scan_conjecture, Certificate, Params,
};

#[derive(Parser)]
#[command(
    name = "stripcomb",
    about = "Exact enumeration of height-bounded paths, alternating sequences, heaps, and tableaux",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count or weight-enumerate a single family of objects.
    Count(CountArgs),
    /// Print a generating function, closed or as a truncated series.
    Gf(GfArgs),
    /// Run identity checks and emit certificates.
    Verify(VerifyArgs),
    /// Scan an open determinant conjecture over a parameter grid.
    Scan(ScanArgs),
    /// Apply a bijection to an input object and confirm the round trip.
    Biject(BijectArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum CountObject {
    Path,
    Motzkin,
    Altseq,
    Tableau,
    Polyomino,
}

#[derive(Clone, Copy, ValueEnum)]
enum GfObject {
    Path,
    Motzkin,
    Altseq,
    Polyomino,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    /// One symbolic variable per down-step level.
    B,
    /// Down-step weights built from the A/V variable families.
    Bav,
    /// q raised to the area under the path.
    Area,
}

impl Scheme {
    fn weight(self) -> WeightScheme {
        match self {
            Scheme::B => WeightScheme::BScheme,
            Scheme::Bav => WeightScheme::BavScheme,
            Scheme::Area => WeightScheme::QArea,
        }
    }
}

#[derive(Args)]
struct CountArgs {
    /// Object family to count.
    #[arg(long)]
    object: CountObject,
    /// Length (paths, Motzkin paths, alternating sequences).
    #[arg(long)]
    n: Option<i64>,
    /// Height / value bound.
    #[arg(long)]
    k: Option<i64>,
    /// Starting height or first entry.
    #[arg(long)]
    r: Option<i64>,
    /// Ending height or last entry.
    #[arg(long)]
    s: Option<i64>,
    /// Emit the symbolic weight polynomial instead of the plain count.
    #[arg(long)]
    weighted: bool,
    /// Weight scheme for paths.
    #[arg(long, value_enum, default_value = "b")]
    scheme: Scheme,
    /// Sum over all endpoints (alternating sequences).
    #[arg(long)]
    all: bool,
    /// Row lengths, comma separated (tableaux).
    #[arg(long, value_delimiter = ',')]
    lambda: Vec<i64>,
    /// Row offsets, comma separated (tableaux).
    #[arg(long, value_delimiter = ',')]
    mu: Vec<i64>,
    /// First-entry flags, comma separated (tableaux).
    #[arg(long, value_delimiter = ',')]
    flags_first: Vec<i64>,
    /// Last-entry flags, comma separated (tableaux).
    #[arg(long, value_delimiter = ',')]
    flags_last: Vec<i64>,
    /// Polyomino width.
    #[arg(long)]
    width: Option<i64>,
}

#[derive(Args)]
struct GfArgs {
    /// Object family.
    #[arg(long)]
    object: GfObject,
    /// Height / value bound.
    #[arg(long)]
    k: i64,
    /// Starting height or first entry.
    #[arg(long)]
    r: Option<i64>,
    /// Ending height or last entry.
    #[arg(long)]
    s: Option<i64>,
    /// Symbolic weights instead of plain counts.
    #[arg(long)]
    weighted: bool,
    /// Weight scheme for paths.
    #[arg(long, value_enum, default_value = "b")]
    scheme: Scheme,
    /// Even-length alternating sequences (default: odd).
    #[arg(long)]
    even: bool,
    /// Sum over all endpoints (alternating sequences).
    #[arg(long)]
    all: bool,
    /// Cumulative all-lengths generating function (alternating sequences).
    #[arg(long)]
    cumulative: bool,
    /// Print the closed rational form.
    #[arg(long)]
    closed: bool,
    /// Print the series coefficients up to this order.
    #[arg(long)]
    series: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check identifier (see `verify --list`).
    #[arg(long)]
    id: Option<String>,
    /// Run every registered check over its default grid.
    #[arg(long)]
    suite: bool,
    /// List registered check identifiers.
    #[arg(long)]
    list: bool,
    /// Explicit parameter, repeatable (e.g. --param n=2 --param k=1).
    #[arg(long = "param", value_parser = parse_key_val)]
    params: Vec<(String, i64)>,
    /// Convenience shorthand for --param n=...
    #[arg(long)]
    n: Option<i64>,
    /// Convenience shorthand for --param k=...
    #[arg(long)]
    k: Option<i64>,
    /// Convenience shorthand for --param m=...
    #[arg(long)]
    m: Option<i64>,
    /// Convenience shorthand for --param r=...
    #[arg(long)]
    r: Option<i64>,
    /// Convenience shorthand for --param s=...
    #[arg(long)]
    s: Option<i64>,
    /// Worker threads (1 = sequential).
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Human-readable table instead of JSON lines.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct ScanArgs {
    /// Conjecture to scan: conj-hankel or conj-motzkin.
    #[arg(long)]
    conjecture: String,
    #[arg(long)]
    n_max: i64,
    #[arg(long)]
    k_max: i64,
    #[arg(long)]
    m_max: i64,
    /// Worker threads (1 = sequential).
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Human-readable table instead of JSON lines.
    #[arg(long)]
    pretty: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Bijection {
    /// Bounded path from r to s <-> heap of dimers.
    Dimer,
    /// Alternating sequence <-> marked heap of segments.
    Segment,
    /// Alternating sequence <-> reordered marked heap of segments.
    SegmentReordered,
    /// Non-intersecting path family <-> trapezoid-region tableau.
    Trapezoid,
    /// Non-intersecting path family <-> rhomboid-region tableau.
    Rhombus,
    /// Fixed-anchor family, odd lengths <-> rectangular-region tableau.
    RectOdd,
    /// Fixed-anchor family, even lengths <-> rectangular-region tableau.
    RectEven,
}

#[derive(Args)]
struct BijectArgs {
    /// Which bijection to apply.
    #[arg(long, value_enum)]
    which: Bijection,
    /// Path to a JSON input file.
    #[arg(long, conflicts_with = "inline")]
    input: Option<String>,
    /// Inline JSON input.
    #[arg(long)]
    inline: Option<String>,
}

fn parse_key_val(s: &str) -> Result<(String, i64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected key=value, got {s}"))?;
    let v: i64 = v.parse().map_err(|e| format!("bad value in {s}: {e}"))?;
    Ok((k.to_string(), v))
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

fn rat_abs_str(c: &Rat) -> String {
    let a = if c < &Rat::from_integer(0.into()) { -c.clone() } else { c.clone() };
    a.to_string()
}

fn unipoly_str(p: &UniPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (d, c) in p.coeffs().iter().enumerate() {
        if c == &Rat::from_integer(0.into()) {
            continue;
        }
        let neg = c < &Rat::from_integer(0.into());
        let mag = rat_abs_str(c);
        let body = match d {
            0 => mag,
            _ => {
                let xs = if d == 1 { "x".to_string() } else { format!("x^{d}") };
                if mag == "1" {
                    xs
                } else {
                    format!("{mag}*{xs}")
                }
            }
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
            out.push_str(&body);
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    out
}

fn ratfunc_str(f: &RatFunc) -> String {
    let num = unipoly_str(f.num());
    let den = unipoly_str(f.den());
    if den == "1" {
        return num;
    }
    let num = if f.num().degree() > 0 { format!("({num})") } else { num };
    format!("{num}/({den})")
}

fn xpoly_str(p: &stripcomb::multipoly::XPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (d, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let cs = c.render();
        parts.push(match d {
            0 => cs,
            1 => format!("({cs})*x"),
            _ => format!("({cs})*x^{d}"),
        });
    }
    parts.join(" + ")
}

fn xratfunc_str(f: &XRatFunc) -> String {
    let num = xpoly_str(f.num());
    let den = xpoly_str(f.den());
    if den == "1" {
        return num;
    }
    format!("({num})/({den})")
}

fn piece_str(p: &Piece) -> String {
    match p {
        Piece::Dimer(i) => format!("dimer {i}"),
        Piece::Segment { lo, hi } => format!("segment {hi}-{lo}"),
    }
}

// ---------------------------------------------------------------------------
// Subcommand drivers (errors bubble up as usage errors, exit code 2)
// ---------------------------------------------------------------------------

type Fallible<T> = Result<T, String>;

fn need(v: Option<i64>, name: &str) -> Fallible<i64> {
    v.ok_or_else(|| format!("missing required flag --{name}"))
}

fn run_count(a: &CountArgs) -> Fallible<()> {
    match a.object {
        CountObject::Path => {
            let (n, k) = (need(a.n, "n")?, need(a.k, "k")?);
            let (r, s) = (need(a.r, "r")?, need(a.s, "s")?);
            let n = u64::try_from(n).map_err(|_| "n must be nonnegative".to_string())?;
            if a.weighted {
                let p = weighted_path_poly(n, k, r, s, a.scheme.weight()).map_err(err_str)?;
                println!("{}", p.render());
            } else {
                println!("{}", count_paths(n, k, r, s).map_err(err_str)?);
            }
        }
        CountObject::Motzkin => {
            let (n, k) = (need(a.n, "n")?, need(a.k, "k")?);
            let (r, s) = (need(a.r, "r")?, need(a.s, "s")?);
            let n = u64::try_from(n).map_err(|_| "n must be nonnegative".to_string())?;
            if a.weighted {
                println!("{}", motzkin_weighted_poly(n, k, r, s).map_err(err_str)?.render());
            } else {
                println!("{}", motzkin_count(n, k, r, s).map_err(err_str)?);
            }
        }
        CountObject::Altseq => {
            let (n, k) = (need(a.n, "n")?, need(a.k, "k")?);
            if a.all {
                if a.weighted {
                    let n = u64::try_from(n).map_err(|_| "n must be nonnegative".to_string())?;
                    println!("{}", weighted_all(n, k).map_err(err_str)?.render());
                } else {
                    println!("{}", count_all(n, k).map_err(err_str)?);
                }
            } else {
                let (r, s) = (need(a.r, "r")?, need(a.s, "s")?);
                let n = u64::try_from(n).map_err(|_| "n must be nonnegative".to_string())?;
                if a.weighted {
                    println!("{}", weighted_altseq_poly(n, k, r, s).map_err(err_str)?.render());
                } else {
                    println!("{}", count_altseq(n, k, r, s).map_err(err_str)?);
                }
            }
        }
        CountObject::Tableau => {
            let k = need(a.k, "k")?;
            if a.lambda.is_empty() {
                return Err("tableau counting needs --lambda".to_string());
            }
            let mu = if a.mu.is_empty() { vec![0; a.lambda.len()] } else { a.mu.clone() };
            let shape = TableauShape::new(a.lambda.clone(), mu).map_err(err_str)?;
            let flags = if a.flags_first.is_empty() && a.flags_last.is_empty() {
                None
            } else {
                Some(Flags { first: a.flags_first.clone(), last: a.flags_last.clone() })
            };
            if a.weighted {
                let w = weighted_alt_tableaux(&shape, k, flags.as_ref()).map_err(err_str)?;
                println!("{}", w.render());
            } else {
                println!("{}", count_alt_tableaux(&shape, k, flags.as_ref()).map_err(err_str)?);
            }
        }
        CountObject::Polyomino => {
            let (k, w) = (need(a.k, "k")?, need(a.width, "width")?);
            if w < 1 {
                return Err("width must be positive".to_string());
            }
            let coeff = polyomino_gf_closed(k).series(2 * w as usize).coeff(2 * w as usize);
            println!("{}", coeff.render());
        }
    }
    Ok(())
}

fn print_rat_gf(f: &RatFunc, closed: bool, series: Option<usize>) -> Fallible<()> {
    if closed {
        println!("{}", ratfunc_str(f));
    }
    if let Some(order) = series {
        let coeffs = f.series(order).map_err(err_str)?;
        let parts: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
        println!("{}", parts.join(", "));
    }
    Ok(())
}

fn print_x_gf(f: &XRatFunc, closed: bool, series: Option<usize>) -> Fallible<()> {
    if closed {
        println!("{}", xratfunc_str(f));
    }
    if let Some(order) = series {
        let ser = f.series(order);
        let parts: Vec<String> = (0..=order).map(|d| ser.coeff(d).render()).collect();
        println!("{}", parts.join(", "));
    }
    Ok(())
}

fn run_gf(a: &GfArgs) -> Fallible<()> {
    if !a.closed && a.series.is_none() {
        return Err("choose --closed and/or --series N".to_string());
    }
    match a.object {
        GfObject::Path => {
            let (r, s) = (need(a.r, "r")?, need(a.s, "s")?);
            let scheme = if a.weighted { a.scheme.weight() } else { WeightScheme::Unweighted };
            let f = path_gf_closed(a.k, r, s, scheme).map_err(err_str)?;
            print_x_gf(&f, a.closed, a.series)?;
        }
        GfObject::Motzkin => {
            let (r, s) = (need(a.r, "r")?, need(a.s, "s")?);
            let f = motzkin_gf_closed(a.k, r, s).map_err(err_str)?;
            print_x_gf(&f, a.closed, a.series)?;
        }
        GfObject::Altseq => {
            if a.cumulative {
                let f = cumulative_gf(a.k);
                print_rat_gf(&f, a.closed, a.series)?;
            } else if a.all {
                if a.weighted {
                    let f = if a.even {
                        altseq_gf_weighted_all_even(a.k)
                    } else {
                        altseq_gf_weighted_all_odd(a.k)
                    };
                    print_x_gf(&f, a.closed, a.series)?;
                } else {
                    let f =
                        if a.even { altseq_gf_all_even(a.k) } else { altseq_gf_all_odd(a.k) };
                    print_rat_gf(&f, a.closed, a.series)?;
                }
            } else {
                let (r, s) = (need(a.r, "r")?, need(a.s, "s")?);
                if a.weighted {
                    let f = if a.even {
                        altseq_gf_weighted_even(a.k, r, s)
                    } else {
                        altseq_gf_weighted_odd(a.k, r, s)
                    }
                    .map_err(err_str)?;
                    print_x_gf(&f, a.closed, a.series)?;
                } else {
                    let f = if a.even {
                        altseq_gf_even(a.k, r, s)
                    } else {
                        altseq_gf_odd(a.k, r, s)
                    }
                    .map_err(err_str)?;
                    print_rat_gf(&f, a.closed, a.series)?;
                }
            }
        }
        GfObject::Polyomino => {
            let f = polyomino_gf_closed(a.k);
            print_x_gf(&f, a.closed, a.series)?;
        }
    }
    Ok(())
}

fn emit(cert: &Certificate, pretty: bool) {
    if pretty {
        println!("{}", cert.to_pretty());
    } else {
        println!("{}", cert.to_json());
    }
}

fn run_verify(a: &VerifyArgs) -> Fallible<bool> {
    if a.list {
        for id in stripcomb::verify::check_ids() {
            println!("{id}");
        }
        return Ok(true);
    }
    let mut params: Params = BTreeMap::new();
    for (k, v) in &a.params {
        params.insert(k.clone(), *v);
    }
    for (name, v) in
        [("n", a.n), ("k", a.k), ("m", a.m), ("r", a.r), ("s", a.s)]
    {
        if let Some(v) = v {
            params.insert(name.to_string(), v);
        }
    }
    let certs: Vec<Certificate> = if a.suite {
        run_default_suite(a.jobs)
    } else if let Some(id) = &a.id {
        if params.is_empty() {
            run_default_check(id, a.jobs)
        } else {
            vec![run_check(id, &params).map_err(err_str)?]
        }
    } else {
        return Err("choose --suite, --list, or --id <check>".to_string());
    };
    let mut all_pass = true;
    for c in &certs {
        emit(c, a.pretty);
        all_pass &= c.verdict;
    }
    Ok(all_pass)
}

fn run_scan(a: &ScanArgs) -> Fallible<bool> {
    let id = match a.conjecture.as_str() {
        "conj-hankel" | "hankel" => "conj-hankel",
        "conj-motzkin" | "motzkin" => "conj-motzkin",
        other => return Err(format!("unknown conjecture: {other}")),
    };
    let certs =
        scan_conjecture(id, a.n_max, a.k_max, a.m_max, a.jobs).map_err(err_str)?;
    let mut all_pass = true;
    for c in &certs {
        emit(c, a.pretty);
        all_pass &= c.verdict;
    }
    Ok(all_pass)
}

// ---------------------------------------------------------------------------
// Bijections
// ---------------------------------------------------------------------------

fn json_i64(v: &serde_json::Value, key: &str) -> Fallible<i64> {
    v.get(key)
        .and_then(|x| x.as_i64())
        .ok_or_else(|| format!("input needs integer field \"{key}\""))
}

fn json_vec(v: &serde_json::Value, key: &str) -> Fallible<Vec<i64>> {
    v.get(key)
        .and_then(|x| x.as_array())
        .ok_or_else(|| format!("input needs array field \"{key}\""))?
        .iter()
        .map(|x| x.as_i64().ok_or_else(|| format!("non-integer entry in \"{key}\"")))
        .collect()
}

fn steps_of(signs: &[i64]) -> Fallible<Vec<Step>> {
    signs
        .iter()
        .map(|&v| match v {
            1 => Ok(Step::Up),
            -1 => Ok(Step::Down),
            _ => Err("steps must be 1 or -1".to_string()),
        })
        .collect()
}

fn path_of(v: &serde_json::Value) -> Fallible<UpDownPath> {
    let start = json_i64(v, "start")?;
    let steps = steps_of(&json_vec(v, "steps")?)?;
    Ok(UpDownPath { start, steps })
}

fn biject_output(which: &str, image: String, roundtrip: bool) {
    let out = serde_json::json!({ "which": which, "image": image, "roundtrip": roundtrip });
    println!("{out}");
}

fn run_biject(a: &BijectArgs) -> Fallible<bool> {
    let text = if let Some(path) = &a.input {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?
    } else if let Some(inline) = &a.inline {
        inline.clone()
    } else {
        return Err("provide --input <file> or --inline <json>".to_string());
    };
    let v: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| format!("bad JSON input: {e}"))?;
    match a.which {
        Bijection::Dimer => {
            let (k, r, s) = (json_i64(&v, "k")?, json_i64(&v, "r")?, json_i64(&v, "s")?);
            let p = UpDownPath { start: r, steps: steps_of(&json_vec(&v, "steps")?)? };
            let h = path_to_dimer_heap(&p, k, r, s).map_err(err_str)?;
            let back = dimer_heap_to_path(&h, k, r, s).map_err(err_str)?;
            let image: Vec<String> = h.pieces().iter().map(piece_str).collect();
            biject_output("dimer", image.join("; "), back == p);
            Ok(back == p)
        }
        Bijection::Segment | Bijection::SegmentReordered => {
            let k = json_i64(&v, "k")?;
            let seq = AltSeq { entries: json_vec(&v, "seq")? };
            let reordered = matches!(a.which, Bijection::SegmentReordered);
            let (mh, back) = if reordered {
                let mh = altseq_to_reordered_heap(&seq, k).map_err(err_str)?;
                let back = reordered_heap_to_altseq(&mh).map_err(err_str)?;
                (mh, back)
            } else {
                let mh = altseq_to_segment_heap(&seq, k).map_err(err_str)?;
                let back = segment_heap_to_altseq(&mh).map_err(err_str)?;
                (mh, back)
            };
            let image: Vec<String> = mh.heap.pieces().iter().map(piece_str).collect();
            let name = if reordered { "segment-reordered" } else { "segment" };
            biject_output(
                name,
                format!("mark {}; {}", mh.mark, image.join("; ")),
                back == seq,
            );
            Ok(back == seq)
        }
        Bijection::Trapezoid | Bijection::Rhombus | Bijection::RectOdd | Bijection::RectEven => {
            let (n, k, m) = (json_i64(&v, "n")?, json_i64(&v, "k")?, json_i64(&v, "m")?);
            let (kind, name, anchored) = match a.which {
                Bijection::Trapezoid => (RegionKind::Trapezoid, "trapezoid", false),
                Bijection::Rhombus => (RegionKind::Rhomboid, "rhombus", false),
                Bijection::RectOdd => (RegionKind::RectOdd, "rect-odd", true),
                _ => (RegionKind::RectEven, "rect-even", true),
            };
            let (r, s) = if anchored {
                (json_vec(&v, "r")?, json_vec(&v, "s")?)
            } else {
                (vec![], vec![])
            };
            let spec = RegionSpec::new(kind, n, k, m, r, s).map_err(err_str)?;
            let paths: Vec<UpDownPath> = v
                .get("paths")
                .and_then(|x| x.as_array())
                .ok_or_else(|| "input needs array field \"paths\"".to_string())?
                .iter()
                .map(path_of)
                .collect::<Fallible<_>>()?;
            let tab: AltTableau = paths_to_tableau(&spec, &paths).map_err(err_str)?;
            let back = tableau_to_paths(&spec, &tab).map_err(err_str)?;
            biject_output(name, tab.render(), back == paths);
            Ok(back == paths)
        }
    }
}

fn err_str(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Fallible<bool> = match &cli.command {
        Command::Count(a) => run_count(a).map(|()| true),
        Command::Gf(a) => run_gf(a).map(|()| true),
        Command::Verify(a) => run_verify(a),
        Command::Scan(a) => run_scan(a),
        Command::Biject(a) => run_biject(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
