use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand};

use dctlab::catalog_store::{self, catalog_path, load_catalog, save_catalog, DEFAULT_CATALOG};
use dctlab::codec::{BlockCodec, CodecOptions, RetentionSpec};
use dctlab::fast_transform;
use dctlab::image_io::{list_images, read_image, write_pgm, ImageGray8};
use dctlab::metrics::{self, corpus_curves, psnr, ssim};
use dctlab::reference;
use dctlab::search::{self, alpha_range, ApproximationRecord, Catalog, Classification, TransformRef};
use dctlab::{Error, IntFuncKind};

#[derive(Parser)]
#[command(name = "dctlab", version, about = "Integer-function DCT approximations")]
struct Cli {
    /// Catalog file (default: catalog.json)
    #[arg(long, global = true, env = catalog_store::CATALOG_ENV)]
    catalog: Option<PathBuf>,

    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the expansion factor and write the catalog
    Search {
        /// `all` or a comma-separated list such as `trunc,round_afz`
        #[arg(long, default_value = "all")]
        functions: String,
        /// Print the report without writing the catalog
        #[arg(long)]
        no_save: bool,
    },
    /// Everything known about one transform
    Show {
        name: String,
        #[arg(long)]
        json: bool,
    },
    /// Operation counts of the fast algorithms
    Complexity {
        /// Also print each schedule
        #[arg(long)]
        listing: bool,
    },
    /// Compress one image and report PSNR/SSIM
    Compress {
        #[arg(long = "t")]
        transform: String,
        #[arg(long)]
        r: usize,
        input: PathBuf,
        /// Output PGM (default: <input>.<t>.r<r>.pgm)
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        codec: CodecFlags,
    },
    /// Corpus-mean PSNR/SSIM curves over r
    SweepR {
        #[arg(long)]
        corpus: PathBuf,
        /// `all` or comma-separated names
        #[arg(long = "t", default_value = "all")]
        transforms: String,
        #[arg(long, default_value_t = 1)]
        r_min: usize,
        #[arg(long, default_value_t = 45)]
        r_max: usize,
        /// Curve CSV (default: stdout)
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Per-image CSV
        #[arg(long)]
        per_image: Option<PathBuf>,
        #[command(flatten)]
        codec: CodecFlags,
    },
    /// Recompute and check every published table
    Verify {
        /// Smaller random workloads
        #[arg(long)]
        quick: bool,
    },
}

#[derive(clap::Args)]
struct CodecFlags {
    #[arg(long, default_value_t = true, action = ArgAction::Set)]
    scale_before_retention: bool,
    #[arg(long, default_value_t = true, action = ArgAction::Set)]
    level_shift: bool,
}

impl CodecFlags {
    fn options(&self) -> CodecOptions {
        CodecOptions {
            level_shift: self.level_shift,
            scale_before_retention: self.scale_before_retention,
        }
    }
}

enum Failure {
    Usage(String),
    Io(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io { .. } | Error::Format(_) | Error::Schema(_) | Error::EmptyCorpus | Error::Dimension { .. } => {
                Failure::Io(e.to_string())
            }
            Error::InvariantMismatch { .. } => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let result = match &cli.command {
        Command::Search { functions, no_save } => cmd_search(&cli, functions, *no_save),
        Command::Show { name, json } => cmd_show(&cli, name, *json),
        Command::Complexity { listing } => cmd_complexity(&cli, *listing),
        Command::Compress {
            transform,
            r,
            input,
            out,
            codec,
        } => cmd_compress(&cli, transform, *r, input, out.as_deref(), codec.options()),
        Command::SweepR {
            corpus,
            transforms,
            r_min,
            r_max,
            csv,
            json,
            per_image,
            codec,
        } => cmd_sweep_r(
            &cli,
            corpus,
            transforms,
            (*r_min, *r_max),
            [csv.as_deref(), json.as_deref(), per_image.as_deref()],
            codec.options(),
        ),
        Command::Verify { quick } => cmd_verify(*quick),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(3)
        }
    }
}

/// Loads the configured catalog. An explicit path must exist; the default
/// `catalog.json` is used when present and recomputed otherwise.
fn catalog(cli: &Cli) -> Result<Catalog, Failure> {
    let path = catalog_path(cli.catalog.as_deref());
    if cli.catalog.is_some() || path.exists() {
        return Ok(load_catalog(&path)?.catalog());
    }
    debug_assert_eq!(path, Path::new(DEFAULT_CATALOG));
    Ok(search::full_catalog())
}

fn parse_functions(s: &str) -> Result<Vec<IntFuncKind>, Failure> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(IntFuncKind::ALL.to_vec());
    }
    s.split(',')
        .map(|f| f.trim().parse::<IntFuncKind>().map_err(|e| Failure::Usage(e.to_string())))
        .collect()
}

fn fmt_matrix(m: &dctlab::IntMatrix8, indent: &str) -> String {
    let mut s = String::new();
    for row in m.entries() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
        let _ = writeln!(s, "{indent}[{}]", cells.join(""));
    }
    s
}

fn cmd_search(cli: &Cli, functions: &str, no_save: bool) -> CmdResult {
    let kinds = parse_functions(functions)?;
    let cat = search::sweep_functions(&kinds);
    for &kind in &kinds {
        println!("== {kind}  α range {} ==", alpha_range(kind));
        println!("{:<14} {:<16} {:<24} {:>7}", "name", "class", "interval", "delta");
        let mut rows: Vec<(f64, String)> = Vec::new();
        for r in &cat.records {
            for iv in r.provenance_for(kind) {
                rows.push((
                    iv.lo,
                    format!(
                        "{:<14} {:<16} {:<24} {:>7.4}",
                        r.name,
                        r.classification.to_string(),
                        iv.to_string(),
                        r.delta
                    ),
                ));
            }
        }
        rows.sort_by(|a, b| a.0.total_cmp(&b.0));
        for (_, line) in rows {
            println!("{line}");
        }
        println!();
    }
    let count = |c| cat.with_class(c).count();
    let degenerate_named = cat
        .with_class(Classification::Degenerate)
        .filter(|r| !r.name.contains('#'))
        .count();
    println!(
        "{} accepted ({} orthogonal, {} near-orthogonal), {} degenerate ({} named), {} rejected",
        count(Classification::Orthogonal) + count(Classification::NearOrthogonal),
        count(Classification::Orthogonal),
        count(Classification::NearOrthogonal),
        count(Classification::Degenerate),
        degenerate_named,
        count(Classification::Rejected),
    );
    for r in cat.with_class(Classification::Rejected) {
        println!("rejected {}: delta = {:.4} exceeds the bound {:.4}", r.name, r.delta, dctlab::matrix_lab::sdct_threshold());
    }
    if !no_save {
        let path = catalog_path(cli.catalog.as_deref());
        let file = save_catalog(&cat, &path)?;
        println!("wrote {} ({} records)", path.display(), file.records.len());
    }
    Ok(())
}

fn dossier(r: &ApproximationRecord) -> String {
    let mut s = String::new();
    let _ = write!(s, "{}", r.name);
    if let Some(a) = &r.alias {
        let _ = write!(s, " ({a})");
    }
    let _ = writeln!(s, "\nclassification: {}", r.classification);
    let _ = writeln!(s, "matrix:\n{}", fmt_matrix(&r.matrix, "  ").trim_end());
    let _ = writeln!(s, "provenance:");
    for p in &r.provenance {
        let _ = writeln!(s, "  {:<11} {}", p.function.to_string(), p.interval);
    }
    let _ = writeln!(s, "diag gram: {:?}", r.diag_gram);
    let _ = writeln!(s, "delta: {:.4}", r.delta);
    if let Some(sc) = &r.scaling {
        let sq: Vec<String> = sc.squared.iter().map(|q| q.to_string()).collect();
        let _ = writeln!(s, "scaling d^2: [{}]", sq.join(", "));
    }
    if let Some(inv) = &r.inverse {
        let dg: Vec<String> = inv.diagonal.iter().map(|q| q.to_string()).collect();
        let _ = writeln!(s, "inverse = E * diag([{}]) with E:", dg.join(", "));
        let _ = write!(s, "{}", fmt_matrix(&inv.matrix, "  "));
    }
    if !r.equivalent_to.is_empty() {
        let _ = writeln!(s, "equivalent after scaling to: {}", r.equivalent_to.join(", "));
    }
    match fast_transform::build_plan(r) {
        Ok(p) => {
            let _ = writeln!(s, "fast algorithm: m = {:?}, {}", p.m.unwrap_or_default(), p.counts);
        }
        Err(_) => {
            let _ = writeln!(s, "fast algorithm: none");
        }
    }
    s
}

fn cmd_show(cli: &Cli, name: &str, json: bool) -> CmdResult {
    let cat = catalog(cli)?;
    let r = cat
        .get(name)
        .ok_or_else(|| Failure::Usage(Error::UnknownTransform(name.into()).to_string()))?;
    if json {
        println!("{}", serde_json::to_string_pretty(r).expect("record serializes"));
    } else {
        print!("{}", dossier(r));
    }
    Ok(())
}

fn cmd_complexity(cli: &Cli, listing: bool) -> CmdResult {
    let cat = catalog(cli)?;
    println!("{:<6} {:>4} {:>4} {:>5}", "name", "mult", "add", "shift");
    let mut mismatches = Vec::new();
    for r in cat.usable() {
        let plan = fast_transform::build_plan(r)?;
        let c = plan.counts;
        println!("{:<6} {:>4} {:>4} {:>5}", r.name, c.multiplications, c.additions, c.shifts);
        if listing {
            print!("{}", plan.listing());
        }
        if reference::expected_counts(&r.name) != Some(c) {
            mismatches.push(r.name.clone());
        }
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "counts differ from the reference for {}",
            mismatches.join(", ")
        )))
    }
}

fn resolve<'a>(cat: &'a Catalog, name: &str) -> Result<TransformRef<'a>, Failure> {
    cat.resolve(name)
        .ok_or_else(|| Failure::Usage(Error::UnknownTransform(name.into()).to_string()))
}

fn default_out(input: &Path, t: &str, r: usize) -> PathBuf {
    let stem = input.file_stem().and_then(|s| s.to_str()).unwrap_or("image");
    input.with_file_name(format!("{stem}.{t}.r{r}.pgm"))
}

fn cmd_compress(
    cli: &Cli,
    name: &str,
    r: usize,
    input: &Path,
    out: Option<&Path>,
    options: CodecOptions,
) -> CmdResult {
    let spec = RetentionSpec::new(r)?;
    let cat = catalog(cli)?;
    let t = resolve(&cat, name)?;
    let img = read_image(input)?;
    let codec = BlockCodec::new(t, options)?;
    let rec = codec.compress(&img, spec)?;
    let out = out.map(Path::to_path_buf).unwrap_or_else(|| default_out(input, t.name(), r));
    write_pgm(&rec, &out)?;
    println!(
        "transform={} r={} psnr={} ssim={:.4} out={}",
        t.name(),
        r,
        metrics_fmt(psnr(&img, &rec)?),
        ssim(&img, &rec)?,
        out.display()
    );
    Ok(())
}

fn metrics_fmt(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.3}")
    } else {
        "inf".into()
    }
}

fn select<'a>(cat: &'a Catalog, list: &str) -> Result<Vec<TransformRef<'a>>, Failure> {
    if list.eq_ignore_ascii_case("all") {
        let mut v = vec![TransformRef::Exact];
        v.extend(cat.usable().map(TransformRef::Approx));
        return Ok(v);
    }
    list.split(',').map(|n| resolve(cat, n.trim())).collect()
}

fn write_text(path: &Path, text: &str) -> CmdResult {
    std::fs::write(path, text).map_err(|e| Error::io(path, e).into())
}

fn cmd_sweep_r(
    cli: &Cli,
    corpus: &Path,
    list: &str,
    (r_min, r_max): (usize, usize),
    [csv, json, per_image]: [Option<&Path>; 3],
    options: CodecOptions,
) -> CmdResult {
    if r_min == 0 || r_max > 64 || r_min > r_max {
        return Err(Failure::Usage(format!("invalid r range {r_min}..={r_max}")));
    }
    let cat = catalog(cli)?;
    let transforms = select(&cat, list)?;
    let mut images: Vec<(String, ImageGray8)> = Vec::new();
    for p in list_images(corpus)? {
        let img = read_image(&p)?;
        img.check_blockable()?;
        let name = p.file_name().and_then(|s| s.to_str()).unwrap_or("?").to_owned();
        images.push((name, img));
    }
    let rs: Vec<usize> = (r_min..=r_max).collect();
    let report = corpus_curves(&transforms, &images, &rs, options)?;
    match csv {
        Some(p) => write_text(p, &report.curves_csv())?,
        None => print!("{}", report.curves_csv()),
    }
    if let Some(p) = json {
        write_text(p, &report.to_json())?;
    }
    if let Some(p) = per_image {
        write_text(p, &report.per_image_csv())?;
    }
    eprintln!("trend report over {} images:", images.len());
    for t in metrics::trend_report(&report) {
        let status = match t.holds {
            Some(true) => "holds".to_owned(),
            Some(false) => format!("violated at r = {:?}", t.violations),
            None => "not evaluated".to_owned(),
        };
        eprintln!("  {}: {status}", t.claim);
    }
    Ok(())
}

fn cmd_verify(quick: bool) -> CmdResult {
    let cat = search::full_catalog();
    let checks = reference::run_checks(&cat, quick);
    let mut failed = Vec::new();
    for c in &checks {
        println!("[{}] {:>2} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.name, c.detail);
        if !c.passed {
            failed.push(c.name);
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(failed.join(", ")))
    }
}
