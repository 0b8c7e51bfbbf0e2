use std::fmt;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use serde_json::json;
use vantage_core::acceptance::{run_all, run_criterion};
use vantage_core::arrangement2d::{a_s, ArrangementSummary};
use vantage_core::constructions::{GadgetSpec, Solid};
use vantage_core::exactnum::{parse_rational, QuadExt, Rational};
use vantage_core::formulas::{self, render_tables, TableFormat};
use vantage_core::geometry::{
    distinct_midpoints_1d, ordering_from_vantage, ordering_weighted, parse_config, AnyConfig, Weights,
};
use vantage_core::par::Exec;
use vantage_core::search::{
    append_to_store, coverage_report, missing, report_from_store, search_achievable, verify_witness_store,
    SearchParams,
};
use vantage_core::sphere::{count_sphere, SphereSummary};
use vantage_core::twovantage::{
    collinear_checks, line_positions, ordering_two_vantage, sample_two_vantage_orderings, SamplerSpec, VantagePair,
};

use crate::{Command, ConstructArgs};

#[derive(Debug)]
pub enum CliError {
    /// Bad input file or parameter.
    Input(String),
    /// A check the command performs did not hold.
    Verification(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 3,
            CliError::Verification(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Verification(m) => f.write_str(m),
        }
    }
}

impl From<vantage_core::Error> for CliError {
    fn from(e: vantage_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn read_config(file: &Option<PathBuf>) -> Result<AnyConfig> {
    let text = match file {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| input(format!("{}: {e}", p.display())))?
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| input(format!("stdin: {e}")))?;
            s
        }
    };
    Ok(parse_config(&text)?)
}

fn parse_point(s: &str) -> Result<Vec<Rational>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| parse_rational(t).map_err(CliError::from))
        .collect()
}

fn histogram(h: &std::collections::BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = h.iter().map(|(m, c)| format!("{m}:{c}")).collect();
    if parts.is_empty() {
        "-".into()
    } else {
        parts.join(" ")
    }
}

fn print_planar(n: usize, s: &ArrangementSummary, as_json: bool) {
    if as_json {
        let hist: serde_json::Map<String, serde_json::Value> = s
            .multiplicity_histogram
            .iter()
            .map(|(m, c)| (m.to_string(), json!(c)))
            .collect();
        let v = json!({
            "dim": 2,
            "points": n,
            "lines": s.line_count,
            "directions": s.direction_classes,
            "vertices": s.vertex_count,
            "multiplicity_histogram": hist,
            "regions": s.regions_total,
            "bounded": s.regions_bounded,
            "unbounded": s.regions_unbounded,
        });
        println!("{v}");
        return;
    }
    println!("points      {n}");
    println!("lines       {}", s.line_count);
    println!("directions  {}", s.direction_classes);
    println!("vertices    {}  (lines through a vertex: {})", s.vertex_count, histogram(&s.multiplicity_histogram));
    println!("regions     {}", s.regions_total);
    println!("bounded     {}", s.regions_bounded);
    println!("unbounded   {}", s.regions_unbounded);
}

fn print_sphere(n: usize, s: &SphereSummary, as_json: bool) {
    if as_json {
        let hist: serde_json::Map<String, serde_json::Value> = s
            .multiplicity_histogram
            .iter()
            .map(|(m, c)| (m.to_string(), json!(c)))
            .collect();
        let v = json!({
            "points": n,
            "circles": s.circle_count,
            "vertex_pairs": s.vertex_pairs,
            "multiplicity_histogram": hist,
            "regions": s.regions_total,
        });
        println!("{v}");
        return;
    }
    println!("points        {n}");
    println!("great circles {}", s.circle_count);
    println!(
        "vertex pairs  {}  (circles through a vertex: {})",
        s.vertex_pairs,
        histogram(&s.multiplicity_histogram)
    );
    println!("regions       {}", s.regions_total);
}

pub fn run(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::CountRegions { file, summary_json } => {
            let c = read_config(&file)?;
            match (c.dim(), c) {
                (1, AnyConfig::Rational(c)) => report_line(c.len(), distinct_midpoints_1d(&c)? + 1, summary_json),
                (1, AnyConfig::Quadratic(c)) => report_line(c.len(), distinct_midpoints_1d(&c)? + 1, summary_json),
                (2, AnyConfig::Rational(c)) => print_planar(c.len(), &a_s(&c), summary_json),
                (2, AnyConfig::Quadratic(c)) => print_planar(c.len(), &a_s(&c), summary_json),
                _ => return Err(input("count-regions takes a 1-D or planar configuration; use count-sphere")),
            }
        }
        Command::CountSphere { file, summary_json } => {
            let c = read_config(&file)?;
            let s = match &c {
                AnyConfig::Rational(c) => count_sphere(c)?,
                AnyConfig::Quadratic(c) => count_sphere(c)?,
            };
            print_sphere(c.len(), &s, summary_json);
        }
        Command::Ordering { file, from, and, weights } => {
            let c = read_config(&file)?;
            let v = parse_point(&from)?;
            let o = match (and, weights, c) {
                (Some(_), Some(_), _) => return Err(input("weights apply to a single vantage point")),
                (Some(w), None, AnyConfig::Rational(c)) => {
                    ordering_two_vantage(&c, &VantagePair::new(v, parse_point(&w)?)?)?
                }
                (Some(_), None, AnyConfig::Quadratic(_)) => {
                    return Err(input("two vantage points need rational coordinates"))
                }
                (None, w, AnyConfig::Rational(c)) => match w {
                    Some(w) => ordering_weighted(&c, &v, &Weights::new(parse_point(&w)?)?)?,
                    None => ordering_from_vantage(&c, &v)?,
                },
                (None, w, AnyConfig::Quadratic(c)) => {
                    let v: Vec<QuadExt> = v.into_iter().map(QuadExt::rational).collect();
                    match w {
                        Some(w) => ordering_weighted(&c, &v, &Weights::new(parse_point(&w)?)?)?,
                        None => ordering_from_vantage(&c, &v)?,
                    }
                }
            };
            println!("{o}");
        }
        Command::TwoVantage {
            file,
            budget,
            seed,
            collinear_checks: checks,
            resolution,
        } => {
            let AnyConfig::Rational(c) = read_config(&file)? else {
                return Err(input("two-vantage needs rational coordinates"));
            };
            let spec = SamplerSpec {
                resolution,
                ..SamplerSpec::default()
            };
            let run = sample_two_vantage_orderings(&c, &spec, budget, seed, Exec::Parallel)?;
            let n = c.len() as u64;
            println!("points              {n}");
            println!("samples             {}", run.samples);
            println!("ties skipped        {}", run.ties_skipped);
            println!("distinct orderings  {} (lower bound)", run.distinct());
            if line_positions(&c).is_some() {
                println!("bound 2^(n-1)       {}", formulas::collinear_two_vantage_bound(n));
                println!("bound c_n           {}", formulas::velo_bound(n));
            }
            if checks {
                let rep = collinear_checks(&c, &run).ok_or_else(|| input("configuration is not collinear"))?;
                println!("equally spaced      {}", rep.equally_spaced);
                println!("violations          {}", rep.violations.len());
                for v in &rep.violations {
                    println!("  {v}");
                }
                if !rep.violations.is_empty() {
                    return Err(CliError::Verification("collinear checks failed".into()));
                }
            }
        }
        Command::Construct(args) => {
            let text = construct(&args)?;
            match &args.o {
                Some(p) => std::fs::write(p, text).map_err(|e| input(format!("{}: {e}", p.display())))?,
                None => print!("{text}"),
            }
        }
        Command::Formula { name, args, csv } => formula(&name, &args, csv)?,
        Command::SearchAchievable {
            n,
            budget,
            seed,
            store,
            strategy,
            span,
            max_den,
        } => {
            let params = SearchParams {
                span,
                max_den,
                ..SearchParams::default()
            };
            let run = search_achievable(n, budget, seed, strategy.parse()?, &params, Exec::Parallel)?;
            let cov = coverage_report(&run).ok_or_else(|| input("nothing found"))?;
            println!("n          {n}");
            println!("budget     {budget} samples + {} structured candidates", run.structured_candidates);
            println!("range      [{}, {}]", cov.min, cov.max);
            println!("found      {} of {} ({})", cov.found, cov.interval, cov.percentage());
            let found: Vec<String> = run.achieved.keys().map(u64::to_string).collect();
            println!("achieved   {}", found.join(" "));
            let miss: Vec<String> = missing(&run).iter().map(u64::to_string).collect();
            println!("not found at this budget: {}", if miss.is_empty() { "-".into() } else { miss.join(" ") });
            println!("elapsed    {} ms", run.elapsed_ms);
            if let Some(p) = store {
                let k = append_to_store(&p, &run)?;
                println!("stored     {k} witnesses in {}", p.display());
            }
        }
        Command::Report { store, csv } => {
            let rep = verify_store(&store)?;
            print!("{}", report_from_store(&store, csv)?);
            if !csv {
                println!("{} records re-verified", rep);
            }
        }
        Command::PlatonicTable { csv } => platonic_table(csv),
        Command::Verify { criterion, sequential } => {
            let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
            let reports = match criterion {
                Some(id) => vec![run_criterion(id, exec).ok_or_else(|| input(format!("no criterion {id}")))?],
                None => run_all(exec),
            };
            for r in &reports {
                println!("{r}");
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            println!("{} of {} criteria passed", reports.len() - failed, reports.len());
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn report_line(n: usize, intervals: usize, as_json: bool) {
    if as_json {
        println!("{}", json!({"dim": 1, "points": n, "regions": intervals}));
    } else {
        println!("points      {n}");
        println!("regions     {intervals}");
    }
}

fn verify_store(path: &Path) -> Result<usize> {
    let rep = verify_witness_store(path)?;
    if !rep.mismatches.is_empty() {
        for m in &rep.mismatches {
            eprintln!("record {} (n={}, k={}): {}", m.record, m.n, m.k, m.problem);
        }
        return Err(CliError::Verification(format!(
            "{} of {} witnesses failed to re-verify",
            rep.mismatches.len(),
            rep.records
        )));
    }
    Ok(rep.records)
}

fn construct(a: &ConstructArgs) -> Result<String> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| input(format!("{} needs -{flag}", a.kind)));
    let seed = || a.seed.ok_or_else(|| input(format!("{} is randomized and needs --seed", a.kind)));
    let spec = match a.kind.as_str() {
        "equally-spaced" => GadgetSpec::EquallySpaced { n: need(a.n, "n")? },
        "gap1d" => GadgetSpec::Gap1d {
            n: need(a.n, "n")?,
            k: need(a.k, "k")?,
        },
        "free" => GadgetSpec::Free {
            n: need(a.n, "n")?,
            sphere: a.sphere,
            seed: seed()?,
        },
        "free-sum" => GadgetSpec::FreeSum {
            s: need(a.s, "s")?,
            t: need(a.t, "t")?,
            seed: seed()?,
        },
        "trapezoid" => GadgetSpec::Trapezoid {
            k: need(a.k, "k")?,
            seed: seed()?,
        },
        "near-max" => GadgetSpec::NearMax {
            n: need(a.n, "n")?,
            k: need(a.k, "k")?,
            seed: seed()?,
        },
        "parallel-lines" => GadgetSpec::ParallelLines {
            m: a.m.unwrap_or(0),
            k: need(a.k, "k")?,
            l: need(a.l, "l")?,
            seed: seed()?,
        },
        "circle-gadget" => GadgetSpec::CircleGadget {
            n: need(a.n, "n")?,
            k: need(a.k, "k")?,
            seed: seed()?,
        },
        "concyclic" => GadgetSpec::Concyclic { n: need(a.n, "n")? },
        "grid" => GadgetSpec::Grid {
            k: need(a.k, "k")?,
            l: need(a.l, "l")?,
        },
        "platonic" => GadgetSpec::Platonic {
            solid: a
                .solid
                .as_deref()
                .ok_or_else(|| input("platonic needs a solid name"))?
                .parse::<Solid>()?,
        },
        "doubled" => GadgetSpec::Doubled {
            n: need(a.n, "n")?,
            seed: seed()?,
        },
        other => return Err(input(format!("unknown construction {other:?}"))),
    };
    Ok(spec.build()?.to_text())
}

fn formula(name: &str, args: &[u64], csv: bool) -> Result<()> {
    let arity = |k: usize| -> Result<()> {
        if args.len() == k {
            Ok(())
        } else {
            Err(input(format!("formula {name} takes {k} argument(s)")))
        }
    };
    let value = match name {
        "table" => {
            let f = if csv { TableFormat::Csv } else { TableFormat::Text };
            print!("{}", render_tables(f));
            return Ok(());
        }
        "max" => match args {
            [n] => formulas::max_orderings(*n, 2),
            [n, d] => formulas::max_orderings(*n, *d),
            _ => return Err(input("formula max takes n [d]")),
        },
        "min" => {
            arity(1)?;
            formulas::min_orderings(args[0])?
        }
        "free-sum-increment" => {
            arity(2)?;
            formulas::free_sum_increment(args[0], args[1])
        }
        "trapezoid" => {
            arity(1)?;
            formulas::trapezoid_count(args[0])
        }
        "near-max" => {
            arity(2)?;
            formulas::near_max_count(args[0], args[1])
        }
        "parallel-lines" => {
            arity(3)?;
            let (poly, closed) = formulas::parallel_gadget_count(args[0], args[1], args[2])?;
            if poly != closed {
                return Err(CliError::Verification(format!("forms disagree: {poly} vs {closed}")));
            }
            poly
        }
        "circle" => {
            arity(2)?;
            formulas::circle_gadget_count(args[0], args[1])
        }
        "sphere-max" => {
            arity(1)?;
            formulas::sphere_max(args[0])
        }
        "sphere-min" => {
            arity(1)?;
            formulas::sphere_min(args[0])?
        }
        "doubled" => {
            arity(1)?;
            formulas::sphere_doubled_count(args[0])
        }
        "stirling" => {
            arity(2)?;
            formulas::stirling1(args[0], args[1])
        }
        "fibonacci" => {
            arity(1)?;
            formulas::fibonacci(args[0])
        }
        "velo" => {
            arity(1)?;
            formulas::velo_bound(args[0])
        }
        "collinear-bound" => {
            arity(1)?;
            formulas::collinear_two_vantage_bound(args[0])
        }
        "ratio" => {
            arity(1)?;
            println!("{:.6}", formulas::ratio_to_free(args[0]));
            return Ok(());
        }
        other => return Err(input(format!("unknown formula {other:?}"))),
    };
    println!("{value}");
    Ok(())
}

fn platonic_table(csv: bool) {
    let mut rows = vec![["solid", "vertices", "circles", "regions", "max"].map(String::from)];
    for s in Solid::ALL {
        let c = vantage_core::constructions::platonic(s);
        let sum = c.regions(Exec::Parallel);
        rows.push([
            s.name().to_string(),
            c.len().to_string(),
            sum.circle_count.to_string(),
            sum.regions_total.to_string(),
            formulas::sphere_max(c.len() as u64).to_string(),
        ]);
    }
    if csv {
        for r in rows {
            println!("{}", r.join(","));
        }
        return;
    }
    let w: Vec<usize> = (0..5).map(|k| rows.iter().map(|r| r[k].len()).max().unwrap_or(0)).collect();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(k, c)| if k == 0 { format!("{c:<w$}", w = w[k]) } else { format!("{c:>w$}", w = w[k]) })
            .collect();
        println!("{}", cells.join("  "));
    }
}
