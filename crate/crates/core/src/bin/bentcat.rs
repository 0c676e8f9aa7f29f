//! Command-line front end: analyze single functions, run construction
//! recipes, verify concatenation quadruples, lift permutation triples,
//! and list the result catalog.
//!
//! Exit codes: 0 verified/constructed, 1 a mathematical property fails,
//! 2 input error, 3 search budget exhausted.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use bentcat::boolfn::TruthTable;
use bentcat::catalog::{self, CatalogRecord, Verdicts};
use bentcat::construct::{
    build_theorem2, concat4, dual_bent_condition, homogeneous_concat, lift_am, lift_h,
    monomial_quadruple, MmForm,
};
use bentcat::gf2m::FieldContext;
use bentcat::perm::PointMap;
use bentcat::subspace::{check_sharing_theorem, mm_sharp_report, MmVerdict, Subspace};
use bentcat::textio;
use bentcat::Error;

#[derive(Parser)]
#[command(name = "bentcat", version, about = "Bent-function 4-concatenation toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Dot,
    Trace,
}

#[derive(Subcommand)]
enum Command {
    /// Report bentness, degree, homogeneity, linear structures and
    /// completed-class membership of one function
    Analyze {
        /// Path to a truth-table or ANF file, or an inline ANF like "x1*x2 + 1"
        input: String,
        /// Wall-clock cap for the membership search, in seconds
        #[arg(long, value_name = "SECONDS")]
        mm_search_budget: Option<f64>,
    },
    /// Run a construction recipe file and append the catalog
    Construct {
        recipe: PathBuf,
        /// Output directory for artifacts and the catalog
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, value_name = "SECONDS")]
        mm_search_budget: Option<f64>,
        /// Override the recipe's modulus (hex mask or "default")
        #[arg(long)]
        modulus: Option<String>,
        /// Override the recipe's inner-product form
        #[arg(long, value_enum)]
        form: Option<FormArg>,
    },
    /// Check the dual-sum condition and concatenation bentness of four pieces
    Verify {
        /// Four function files (truth-table or ANF format)
        files: Vec<PathBuf>,
        /// Optional shift file over the y half; verifies f4 = f1+f2+f3+s
        #[arg(long)]
        s: Option<PathBuf>,
        /// Also run the sharing certificate for the quadruple
        #[arg(long)]
        sharing: bool,
    },
    /// Lift two permutation triples (and optionally their h functions)
    /// one dimension up
    Lift {
        /// Three permutation files, comma separated
        #[arg(long, value_delimiter = ',')]
        pis: Vec<PathBuf>,
        /// Three permutation files for the lower half, comma separated
        #[arg(long, value_delimiter = ',')]
        sigmas: Vec<PathBuf>,
        /// Four h-function files matching the first triple
        #[arg(long, value_delimiter = ',')]
        hs: Option<Vec<PathBuf>>,
        /// Four g-function files matching the second triple
        #[arg(long, value_delimiter = ',')]
        gs: Option<Vec<PathBuf>>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Catalog inspection
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Print one line per record
    List {
        #[arg(long, default_value = "catalog.jsonl")]
        path: PathBuf,
    },
}

const EXIT_PROPERTY_FAILED: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;
const EXIT_BUDGET_EXHAUSTED: u8 = 3;

fn main() -> ExitCode {
    // die quietly when the output pipe closes (e.g. `bentcat ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze {
            input,
            mm_search_budget,
        } => cmd_analyze(&input, budget(mm_search_budget)),
        Command::Construct {
            recipe,
            out,
            mm_search_budget,
            modulus,
            form,
        } => cmd_construct(&recipe, &out, budget(mm_search_budget), modulus, form),
        Command::Verify { files, s, sharing } => cmd_verify(&files, s.as_deref(), sharing),
        Command::Lift {
            pis,
            sigmas,
            hs,
            gs,
            out,
        } => cmd_lift(&pis, &sigmas, hs.as_deref(), gs.as_deref(), &out),
        Command::Catalog {
            cmd: CatalogCmd::List { path },
        } => cmd_catalog_list(&path),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn budget(seconds: Option<f64>) -> Option<Duration> {
    seconds.map(Duration::from_secs_f64)
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::NotBent { .. } | Error::Hypothesis { .. } => EXIT_PROPERTY_FAILED,
        _ => EXIT_INPUT_ERROR,
    }
}

fn read_to_string(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(Error::Io)
}

fn load_function(path: &Path) -> Result<TruthTable, Error> {
    textio::parse_function(&read_to_string(path)?)
}

fn load_point_map(path: &Path) -> Result<PointMap, Error> {
    textio::parse_point_map(&read_to_string(path)?)
}

/// File contents if `input` names a file, otherwise the inline text.
fn load_input(input: &str) -> Result<TruthTable, Error> {
    let path = Path::new(input);
    if path.exists() {
        load_function(path)
    } else {
        textio::parse_function(input)
    }
}

fn cmd_analyze(input: &str, budget: Option<Duration>) -> Result<u8, Error> {
    let f = load_input(input)?;
    let anf = f.anf();
    let degree = anf.degree();
    println!("n: {}", f.n());

    let bent = f.n().is_multiple_of(2) && f.is_bent()?;
    if bent {
        println!("bent: yes");
    } else if degree <= 1 {
        println!("bent: no (affine)");
    } else if f.n() % 2 == 1 {
        println!("bent: no (odd variable count)");
    } else {
        println!("bent: no");
    }
    println!("degree: {degree}");
    println!(
        "homogeneous: {}",
        if anf.is_homogeneous() { "yes" } else { "no" }
    );
    let structures = f.linear_structures();
    if structures.len() == 1 {
        println!("linear structures: only 0 (trivial)");
    } else {
        let dim = (structures.len() as f64).log2() as u32;
        println!(
            "linear structures: subspace of dimension {dim} ({} vectors)",
            structures.len()
        );
    }
    if bent {
        let dual = f.dual()?;
        if f.n() <= 8 {
            println!("dual: {}", textio::format_anf(&dual.anf()));
        } else {
            println!("dual degree: {}", dual.degree());
        }
        let report = mm_sharp_report(&f, budget)?;
        match report.verdict {
            MmVerdict::Inside => {
                let canonical = Subspace::canonical_mm(f.n())?;
                let how = if report.witness.as_ref() == Some(&canonical) {
                    "canonical subspace found"
                } else {
                    "vanishing subspace found"
                };
                println!("M#: inside ({how}, {} ms)", report.elapsed.as_millis());
                if let Some(witness) = &report.witness {
                    for row in witness.to_string().lines() {
                        println!("  {row}");
                    }
                }
            }
            MmVerdict::Outside => {
                println!(
                    "M#: outside (exhaustive pruned search, {} ms)",
                    report.elapsed.as_millis()
                );
            }
            MmVerdict::Inconclusive => {
                println!("M#: inconclusive (search budget exhausted)");
                return Ok(EXIT_BUDGET_EXHAUSTED);
            }
        }
    } else {
        println!("M#: n/a (membership test applies to bent functions)");
    }
    Ok(0)
}

struct RecipeCtx {
    map: BTreeMap<String, String>,
    out_dir: PathBuf,
    budget: Option<Duration>,
}

impl RecipeCtx {
    fn get(&self, key: &str) -> Result<&str, Error> {
        self.map
            .get(key)
            .map(|s| s.as_str())
            .ok_or_else(|| Error::parse(1, 1, format!("recipe is missing key {key:?}")))
    }

    fn get_or(&self, key: &str, default: &'static str) -> String {
        self.map
            .get(key)
            .cloned()
            .unwrap_or_else(|| default.to_string())
    }
}

fn cmd_construct(
    recipe_path: &Path,
    out_dir: &Path,
    budget: Option<Duration>,
    modulus_override: Option<String>,
    form_override: Option<FormArg>,
) -> Result<u8, Error> {
    let mut map = textio::parse_recipe(&read_to_string(recipe_path)?)?;
    if let Some(m) = modulus_override {
        map.insert("modulus".into(), m);
    }
    if let Some(f) = form_override {
        map.insert(
            "form".into(),
            match f {
                FormArg::Dot => "dot".into(),
                FormArg::Trace => "trace".into(),
            },
        );
    }
    std::fs::create_dir_all(out_dir)?;
    let ctx = RecipeCtx {
        map,
        out_dir: out_dir.to_path_buf(),
        budget,
    };
    let construction = ctx.get("construction")?.to_string();
    match construction.as_str() {
        "monomial" => construct_monomial(&ctx),
        "theorem2" => construct_theorem2(&ctx),
        "lift" => construct_lift(&ctx),
        "homogeneous" => construct_homogeneous(&ctx),
        other => Err(Error::parse(
            1,
            1,
            format!("unknown construction {other:?} (expected monomial, theorem2, lift or homogeneous)"),
        )),
    }
}

fn field_from_recipe(ctx: &RecipeCtx) -> Result<FieldContext, Error> {
    let m: u32 = ctx
        .get("m")?
        .parse()
        .map_err(|_| Error::parse(1, 1, "bad m value"))?;
    let modulus = textio::parse_modulus(m, &ctx.get_or("modulus", "default"))?;
    FieldContext::new(m, modulus)
}

fn parse_form(text: &str) -> Result<MmForm, Error> {
    match text {
        "dot" => Ok(MmForm::Dot),
        "trace" => Ok(MmForm::Trace),
        other => Err(Error::parse(1, 1, format!("bad form {other:?}"))),
    }
}

fn construct_monomial(ctx: &RecipeCtx) -> Result<u8, Error> {
    let field = field_from_recipe(ctx)?;
    let d: u64 = ctx
        .get("d")?
        .parse()
        .map_err(|_| Error::parse(1, 1, "bad d value"))?;
    let k: u64 = ctx
        .get("k")?
        .parse()
        .map_err(|_| Error::parse(1, 1, "bad k value"))?;
    let alpha_text = ctx.get("alphas")?;
    let alphas: Vec<u32> = alpha_text
        .split(',')
        .map(|t| textio::parse_element(&field, t))
        .collect::<Result<_, _>>()?;
    if alphas.len() != 3 {
        return Err(Error::parse(
            1,
            1,
            format!("expected 3 alphas, got {}", alphas.len()),
        ));
    }
    let sigma_text = ctx.get_or("sigma", "1,2,3,4");
    let sigma_vec: Vec<usize> = sigma_text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .ok()
                .and_then(|v| v.checked_sub(1))
                .ok_or_else(|| Error::parse(1, 1, format!("bad sigma entry {t:?}")))
        })
        .collect::<Result<_, _>>()?;
    let sigma: [usize; 4] = sigma_vec
        .try_into()
        .map_err(|_| Error::parse(1, 1, "sigma needs 4 entries"))?;
    let quad = monomial_quadruple(&field, d, k, [alphas[0], alphas[1], alphas[2]], sigma)?;
    let concat = quad.concat()?;
    finish_function_artifact(ctx, "monomial", concat)
}

fn function_from_key(ctx: &RecipeCtx, key: &str) -> Result<TruthTable, Error> {
    load_function(Path::new(ctx.get(key)?))
}

fn construct_theorem2(ctx: &RecipeCtx) -> Result<u8, Error> {
    let pis = [
        load_point_map(Path::new(ctx.get("pi1")?))?,
        load_point_map(Path::new(ctx.get("pi2")?))?,
        load_point_map(Path::new(ctx.get("pi3")?))?,
    ];
    let hs = [
        function_from_key(ctx, "h1")?,
        function_from_key(ctx, "h2")?,
        function_from_key(ctx, "h3")?,
    ];
    let s = match ctx.map.get("s") {
        Some(path) => load_function(Path::new(path))?,
        None => TruthTable::zero(pis[0].m())?,
    };
    let form = parse_form(&ctx.get_or("form", "dot"))?;
    let field = match form {
        MmForm::Trace => Some(field_from_recipe(ctx)?),
        MmForm::Dot => None,
    };
    let built = build_theorem2(
        [&pis[0], &pis[1], &pis[2]],
        [&hs[0], &hs[1], &hs[2]],
        &s,
        form,
        field.as_ref(),
    )?;
    finish_function_artifact(ctx, "theorem2", built.concat)
}

fn construct_homogeneous(ctx: &RecipeCtx) -> Result<u8, Error> {
    let f1 = function_from_key(ctx, "f1")?;
    let q2 = function_from_key(ctx, "q2")?;
    let q3 = function_from_key(ctx, "q3")?;
    let s = function_from_key(ctx, "s")?;
    let out = homogeneous_concat(&f1, &q2, &q3, &s)?;
    finish_function_artifact(ctx, "homogeneous", out)
}

fn construct_lift(ctx: &RecipeCtx) -> Result<u8, Error> {
    let paths = |key: &str| -> Result<Vec<PathBuf>, Error> {
        Ok(ctx.get(key)?.split(',').map(PathBuf::from).collect())
    };
    let pi_paths = paths("pis")?;
    let sigma_paths = paths("sigmas")?;
    if pi_paths.len() != 3 || sigma_paths.len() != 3 {
        return Err(Error::parse(1, 1, "pis and sigmas each need 3 paths"));
    }
    let pis: Vec<PointMap> = pi_paths
        .iter()
        .map(|p| load_point_map(p))
        .collect::<Result<_, _>>()?;
    let sigmas: Vec<PointMap> = sigma_paths
        .iter()
        .map(|p| load_point_map(p))
        .collect::<Result<_, _>>()?;
    let phis = lift_am(
        [&pis[0], &pis[1], &pis[2]],
        [&sigmas[0], &sigmas[1], &sigmas[2]],
    )?;
    for (i, phi) in phis.iter().enumerate() {
        let path = ctx.out_dir.join(format!("lift_phi{}.perm", i + 1));
        std::fs::write(&path, textio::format_point_map(phi))?;
        println!("wrote {}", path.display());
    }
    if ctx.map.contains_key("hs") || ctx.map.contains_key("gs") {
        let h_paths = paths("hs")?;
        let g_paths = paths("gs")?;
        if h_paths.len() != 4 || g_paths.len() != 4 {
            return Err(Error::parse(1, 1, "hs and gs each need 4 paths"));
        }
        let hs: Vec<TruthTable> = h_paths
            .iter()
            .map(|p| load_function(p))
            .collect::<Result<_, _>>()?;
        let gs: Vec<TruthTable> = g_paths
            .iter()
            .map(|p| load_function(p))
            .collect::<Result<_, _>>()?;
        let lifted = lift_h(
            [&pis[0], &pis[1], &pis[2]],
            [&sigmas[0], &sigmas[1], &sigmas[2]],
            [&hs[0], &hs[1], &hs[2], &hs[3]],
            [&gs[0], &gs[1], &gs[2], &gs[3]],
        )?;
        for (i, h) in lifted.iter().enumerate() {
            let path = ctx.out_dir.join(format!("lift_h{}.tt", i + 1));
            std::fs::write(&path, textio::format_truth_table(h))?;
            println!("wrote {}", path.display());
        }
    }
    println!("lift: property verified at m={}", pis[0].m() + 1);
    Ok(0)
}

/// Writes the function artifact, certifies it, appends the catalog and
/// prints a summary.
fn finish_function_artifact(
    ctx: &RecipeCtx,
    construction: &str,
    f: TruthTable,
) -> Result<u8, Error> {
    let id = catalog::table_id(&f);
    let mut timings = BTreeMap::new();

    let t0 = Instant::now();
    let bent = f.n().is_multiple_of(2) && f.is_bent()?;
    timings.insert("bent".to_string(), t0.elapsed().as_millis() as u64);

    let t0 = Instant::now();
    let anf = f.anf();
    let degree = anf.degree();
    let homogeneous = anf.is_homogeneous();
    timings.insert("degree".to_string(), t0.elapsed().as_millis() as u64);

    let (mm, mm_method) = if bent {
        let report = mm_sharp_report(&f, ctx.budget)?;
        timings.insert("mm".to_string(), report.elapsed.as_millis() as u64);
        let method = match report.verdict {
            MmVerdict::Inside => "vanishing subspace found",
            MmVerdict::Outside => "exhaustive pruned search",
            MmVerdict::Inconclusive => "search budget exhausted",
        };
        (report.verdict.to_string(), method.to_string())
    } else {
        ("n/a".to_string(), "not bent".to_string())
    };

    let filename = format!("{construction}_{}.tt", &id[..12]);
    let path = ctx.out_dir.join(&filename);
    std::fs::write(&path, textio::format_truth_table(&f))?;

    let record = CatalogRecord {
        id,
        recipe: ctx.map.clone(),
        verdicts: Verdicts {
            bent,
            degree,
            homogeneous,
            mm: mm.clone(),
            mm_method,
        },
        timings_ms: timings,
    };
    catalog::append_record(&ctx.out_dir.join("catalog.jsonl"), &record)?;

    println!("wrote {}", path.display());
    println!(
        "n: {}  bent: {}  degree: {degree}  homogeneous: {}  M#: {mm}",
        f.n(),
        if bent { "yes" } else { "no" },
        if homogeneous { "yes" } else { "no" },
    );
    if mm == "inconclusive" {
        return Ok(EXIT_BUDGET_EXHAUSTED);
    }
    Ok(0)
}

fn cmd_verify(files: &[PathBuf], s: Option<&Path>, sharing: bool) -> Result<u8, Error> {
    if files.len() != 4 {
        return Err(Error::parse(
            1,
            1,
            format!("verify needs exactly 4 files, got {}", files.len()),
        ));
    }
    let mut parts = Vec::with_capacity(4);
    for p in files {
        parts.push(load_function(p)?);
    }
    let parts: [TruthTable; 4] = parts.try_into().expect("four parts");
    let mut failed = false;
    for (i, p) in parts.iter().enumerate() {
        let bent = p.n() % 2 == 0 && p.is_bent()?;
        println!("piece {}: {}", i + 1, if bent { "bent" } else { "NOT bent" });
        failed |= !bent;
    }
    if failed {
        println!("dual condition: n/a (non-bent piece)");
        return Ok(EXIT_PROPERTY_FAILED);
    }
    let dual_ok = dual_bent_condition(&parts)?;
    println!("dual condition: {}", if dual_ok { "holds" } else { "fails" });
    let cat = concat4(&parts)?;
    let cat_bent = cat.is_bent()?;
    println!(
        "concatenation: {} (n={})",
        if cat_bent { "bent" } else { "NOT bent" },
        cat.n()
    );
    if let Some(s_path) = s {
        let s_table = load_function(s_path)?;
        let m = parts[0].n() / 2;
        if s_table.n() != m {
            return Err(Error::VariableCountMismatch {
                left: m,
                right: s_table.n(),
            });
        }
        let lifted = TruthTable::from_fn(parts[0].n(), |z| s_table.get(z >> m))?;
        let expected = &(&(&parts[0] ^ &parts[1]) ^ &parts[2]) ^ &lifted;
        println!(
            "f4 = f1+f2+f3+s: {}",
            if expected == parts[3] { "holds" } else { "fails" }
        );
    }
    if sharing {
        let report = check_sharing_theorem(&parts)?;
        println!("sharing-theorem: {}", report.verdict);
        println!("  {}", report.detail);
    }
    Ok(if dual_ok && cat_bent {
        0
    } else {
        EXIT_PROPERTY_FAILED
    })
}

fn cmd_lift(
    pis: &[PathBuf],
    sigmas: &[PathBuf],
    hs: Option<&[PathBuf]>,
    gs: Option<&[PathBuf]>,
    out: &Path,
) -> Result<u8, Error> {
    let mut map = BTreeMap::new();
    map.insert("construction".to_string(), "lift".to_string());
    map.insert("pis".to_string(), join_paths(pis));
    map.insert("sigmas".to_string(), join_paths(sigmas));
    if let Some(hs) = hs {
        map.insert("hs".to_string(), join_paths(hs));
    }
    if let Some(gs) = gs {
        map.insert("gs".to_string(), join_paths(gs));
    }
    std::fs::create_dir_all(out)?;
    let ctx = RecipeCtx {
        map,
        out_dir: out.to_path_buf(),
        budget: None,
    };
    construct_lift(&ctx)
}

fn join_paths(paths: &[PathBuf]) -> String {
    paths
        .iter()
        .map(|p| p.display().to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_catalog_list(path: &Path) -> Result<u8, Error> {
    let records = catalog::read_catalog(path)?;
    for r in &records {
        let construction = r
            .recipe
            .get("construction")
            .map(|s| s.as_str())
            .unwrap_or("?");
        println!(
            "{}  {:<12} bent={} degree={} homogeneous={} M#={}",
            &r.id[..12.min(r.id.len())],
            construction,
            r.verdicts.bent,
            r.verdicts.degree,
            r.verdicts.homogeneous,
            r.verdicts.mm,
        );
    }
    println!("{} record(s)", records.len());
    Ok(0)
}
