use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use cstiling::bounds::bound_report;
use cstiling::classify::{case_counts, class_report, profile_census, ClassReport};
use cstiling::enumerate::{enumerate_classes_for, ClassSet, SQUARE_NOTE};
use cstiling::io::{class_file_stem, parse_json, render_json, render_summary, render_svg, summary};
use cstiling::validate::validate_complex;
use cstiling::{enumerate_irreducible_classes, Multiplicities, SearchConfig, SearchStats};

#[derive(Parser)]
#[command(name = "cstiling", version, about = "Irreducible decompositions of centrally symmetric polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate irreducible classes of the 2k-gon and optionally write them out.
    Enumerate {
        #[arg(long)]
        k: usize,
        /// Restrict to one side-length vector, e.g. 2,1,2,1.
        #[arg(long, value_delimiter = ',')]
        multiplicities: Option<Vec<usize>>,
        /// Directory for class_XXXX.json, class_XXXX.svg and summary.json.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; 1 runs sequentially.
        #[arg(long)]
        jobs: Option<usize>,
        /// Report search counters on stderr.
        #[arg(long)]
        progress: bool,
    },
    /// Print the number of irreducible classes of the 2k-gon.
    Count {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Report side types, cases and tile census for the classes in a directory.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Check tiling documents; exits with status 1 if any check fails.
    Validate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Print the edge bound and the bound on the number of classes.
    Bound {
        #[arg(long)]
        k: usize,
    },
    /// Draw a tiling document as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        svg: PathBuf,
    },
}

fn config(jobs: Option<usize>, progress: bool) -> Result<SearchConfig> {
    if jobs == Some(0) {
        bail!("--jobs must be at least 1");
    }
    let mut cfg = SearchConfig { jobs, ..SearchConfig::default() };
    if progress {
        cfg.progress_hook = Some(Arc::new(|s: &SearchStats| {
            eprintln!("nodes {} pruned {} emitted {}", s.nodes, s.pruned, s.emitted);
        }));
    }
    Ok(cfg)
}

fn classes(k: usize, mults: Option<Vec<usize>>, cfg: &SearchConfig) -> Result<ClassSet> {
    let set = match mults {
        Some(m) => {
            if m.len() != k {
                bail!("{} multiplicities given for k = {k}", m.len());
            }
            enumerate_classes_for(k, &[Multiplicities::new(m)?], cfg)?
        }
        None => enumerate_irreducible_classes(k, cfg)?,
    };
    Ok(set)
}

fn reports(set: &ClassSet) -> Result<Vec<ClassReport>> {
    set.classes.values().map(|e| Ok(class_report(&e.representative)?)).collect()
}

fn write_classes(dir: &Path, set: &ClassSet, reports: &[ClassReport]) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for (i, entry) in set.classes.values().enumerate() {
        let stem = class_file_stem(i);
        fs::write(dir.join(format!("{stem}.json")), render_json(&entry.representative))?;
        fs::write(dir.join(format!("{stem}.svg")), render_svg(&entry.representative)?)?;
    }
    fs::write(dir.join("summary.json"), render_summary(&summary(set.k, reports)))?;
    Ok(())
}

fn print_cases(reports: &[ClassReport]) {
    if reports.iter().any(|r| r.case.is_some()) {
        for (case, n) in case_counts(reports) {
            println!("case {case}: {n}");
        }
    }
}

fn enumerate(k: usize, mults: Option<Vec<usize>>, out: Option<PathBuf>, jobs: Option<usize>, progress: bool) -> Result<()> {
    let set = classes(k, mults, &config(jobs, progress)?)?;
    let reports = reports(&set)?;
    println!("k = {k}: {} classes", set.len());
    print_cases(&reports);
    for (len, n) in profile_census(&reports) {
        println!("sides of length {len}: {n} profiles");
    }
    if progress {
        eprintln!("nodes {} pruned {} emitted {}", set.stats.nodes, set.stats.pruned, set.stats.emitted);
    }
    if let Some(dir) = out {
        write_classes(&dir, &set, &reports)?;
        println!("wrote {} classes to {}", set.len(), dir.display());
    }
    Ok(())
}

fn count(k: usize, jobs: Option<usize>) -> Result<()> {
    let set = classes(k, None, &config(jobs, false)?)?;
    println!("{}", set.len());
    if k == 2 {
        println!("{SQUARE_NOTE}");
    }
    Ok(())
}

fn class_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    files.retain(|p| {
        p.extension().is_some_and(|x| x == "json")
            && p.file_name().and_then(|n| n.to_str()).is_some_and(|n| n.starts_with("class_"))
    });
    files.sort();
    Ok(files)
}

fn read_tiling(path: &Path) -> Result<cstiling::TilingComplex> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn classify(dir: &Path) -> Result<()> {
    let files = class_files(dir)?;
    if files.is_empty() {
        bail!("no class_*.json files in {}", dir.display());
    }
    let mut reports = Vec::new();
    for path in &files {
        let r = class_report(&read_tiling(path)?)?;
        let name = path.file_name().unwrap_or_default().to_string_lossy();
        let case = r.case.map(|c| format!(" case {c}")).unwrap_or_default();
        println!("{name}: type {}{case} tiles {:?}", r.type_string, r.census);
        reports.push(r);
    }
    println!("{} classes", reports.len());
    print_cases(&reports);
    Ok(())
}

fn validate(files: &[PathBuf]) -> Result<bool> {
    let mut all = true;
    for path in files {
        let report = validate_complex(&read_tiling(path)?);
        let verdict = if report.passed() { "valid" } else { "INVALID" };
        println!("{}: {verdict}", path.display());
        print!("{report}");
        all &= report.passed();
    }
    Ok(all)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Enumerate { k, multiplicities, out, jobs, progress } => enumerate(k, multiplicities, out, jobs, progress)?,
        Command::Count { k, jobs } => count(k, jobs)?,
        Command::Classify { input } => classify(&input)?,
        Command::Validate { files } => return validate(&files),
        Command::Bound { k } => println!("{}", bound_report(k)?),
        Command::Render { file, svg } => {
            let c = read_tiling(&file)?;
            fs::write(&svg, render_svg(&c)?).with_context(|| format!("writing {}", svg.display()))?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
