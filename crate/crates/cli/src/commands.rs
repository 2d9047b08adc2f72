//! One handler per subcommand. Each returns the process exit code: 0 for
//! success, 2 for a criterion failure (check/approximate only); hard errors
//! bubble up as `CliError` and become exit code 1.

use std::path::{Path, PathBuf};

use equilib_core::{
    check_serre_criterion, construct_approximation, convergence_report, energy,
    log_potential, solve_equilibrium, ComplexPoint, Config, Error as CoreError, Measure,
};
use equilib_weil::{
    enumerate_totally_real, is_irreducible_small_degree, lift_to_weil, mu_of_multiset_weighted,
    BoundaryWeighting, IntegerPolynomial, RealTraceMultiset,
};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::args::{
    ApproximateArgs, CapacityArgs, CheckArgs, EnergyArgs, EnumerateArgs, EquilibriumArgs,
    LiftArgs, MeasureOfArgs, PotentialArgs,
};
use crate::io::{
    emit_csv, emit_json, json_num, load_interval_union, load_measure, write_atomic, CliError,
    RunRecord,
};

fn fmt_field(v: f64) -> String {
    crate::io::fmt_num(v)
}

fn segment_pair(segment: &[f64]) -> Result<(f64, f64), CliError> {
    if segment.len() != 2 || !segment[0].is_finite() || !segment[1].is_finite() {
        return Err(CliError::Msg("--segment needs two finite numbers".into()));
    }
    Ok((segment[0], segment[1]))
}

/// Two or three column profile CSV; infinities appear as "-inf"/"inf".
fn csv_bytes(header: &[&str], rows: &[Vec<f64>]) -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        let rec: Vec<String> = row.iter().map(|&v| fmt_field(v)).collect();
        w.write_record(&rec)?;
    }
    w.into_inner().map_err(|e| CliError::Msg(e.to_string()))
}

fn density_rows(mu: &Measure) -> Vec<Vec<f64>> {
    mu.pieces()
        .iter()
        .map(|p| {
            let x = 0.5 * (p.lo() + p.hi());
            vec![x, p.density_at(x)]
        })
        .collect()
}

pub fn potential(args: &PotentialArgs, rec: &mut RunRecord) -> Result<i32, CliError> {
    let mu = load_measure(&args.measure, rec)?;
    let cfg = Config::default();
    rec.set_config(json!({ "core": &cfg }));
    if let Some(grid) = &args.grid {
        let (lo, hi) = (grid[0], grid[1]);
        let count = grid[2];
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(CliError::Msg("--grid needs LO < HI".into()));
        }
        if count < 2.0 || count.fract() != 0.0 || count > 10_000_000.0 {
            return Err(CliError::Msg("--grid COUNT must be an integer >= 2".into()));
        }
        let n = count as usize;
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let x = lo + (hi - lo) * i as f64 / (n - 1) as f64;
            let p = log_potential(&mu, ComplexPoint::new(x, args.im), &cfg)?;
            rows.push(vec![x, args.im, p]);
        }
        let bytes = csv_bytes(&["x", "y", "p"], &rows)?;
        emit_csv(bytes, args.out.as_deref(), rec)?;
        Ok(0)
    } else if let Some(x) = args.x {
        let p = log_potential(&mu, ComplexPoint::new(x, args.y), &cfg)?;
        emit_json(
            &json!({ "x": x, "y": args.y, "p": json_num(p) }),
            args.out.as_deref(),
            rec,
        )?;
        Ok(0)
    } else {
        Err(CliError::Msg(
            "pass --x VALUE for a point or --grid LO HI COUNT for a profile".into(),
        ))
    }
}

pub fn energy_cmd(args: &EnergyArgs, rec: &mut RunRecord) -> Result<i32, CliError> {
    let mu = load_measure(&args.measure, rec)?;
    let cfg = Config::default();
    rec.set_config(json!({ "core": &cfg }));
    let e = energy(&mu, &cfg)?;
    emit_json(&json!({ "energy": json_num(e) }), args.out.as_deref(), rec)?;
    Ok(0)
}

pub fn capacity_cmd(args: &CapacityArgs, rec: &mut RunRecord) -> Result<i32, CliError> {
    let k = load_interval_union(&args.compact, rec)?;
    let cfg = Config::default();
    rec.set_config(json!({ "core": &cfg, "panels_per_unit": args.panels }));
    let res = solve_equilibrium(&k, args.panels, &cfg)?;
    let v = res.log_capacity;
    emit_json(
        &json!({ "v": v, "cap": v.exp() }),
        args.out.as_deref(),
        rec,
    )?;
    Ok(0)
}

#[derive(Serialize)]
struct EquilibriumOut {
    v: f64,
    cap: f64,
    kkt_residual: f64,
    offset_margin: f64,
    iterations: usize,
    panels: usize,
    component_masses: Vec<f64>,
    density_csv: String,
    weights: Vec<f64>,
}

pub fn equilibrium(args: &EquilibriumArgs, rec: &mut RunRecord) -> Result<i32, CliError> {
    let k = load_interval_union(&args.compact, rec)?;
    let cfg = Config::default();
    rec.set_config(json!({ "core": &cfg, "panels_per_unit": args.panels }));
    let res = solve_equilibrium(&k, args.panels, &cfg)?;
    let mu = res.measure()?;
    let csv_path = args.density_csv.clone().unwrap_or_else(|| {
        let stem = args
            .out
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "equilibrium".into());
        args.out.with_file_name(format!("{stem}_density.csv"))
    });
    let bytes = csv_bytes(&["x", "density"], &density_rows(&mu))?;
    write_atomic(&csv_path, &bytes)?;
    rec.record_output(&csv_path);
    let out = EquilibriumOut {
        v: res.log_capacity,
        cap: res.log_capacity.exp(),
        kkt_residual: res.kkt_residual,
        offset_margin: res.offset_margin,
        iterations: res.iterations,
        panels: res.weights.len(),
        component_masses: res.component_masses(),
        density_csv: csv_path.display().to_string(),
        weights: res.weights.clone(),
    };
    emit_json(&out, Some(&args.out), rec)?;
    Ok(0)
}

pub fn check(args: &CheckArgs, rec: &mut RunRecord) -> Result<i32, CliError> {
    let mu = load_measure(&args.measure, rec)?;
    let (a, b) = segment_pair(&args.segment)?;
    let mut cfg = Config::default();
    if let Some(n) = args.scan_points {
        cfg.scan_points = n;
    }
    if let Some(t) = args.tol {
        cfg.criterion_tol = t;
    }
    rec.set_config(json!({ "core": &cfg, "segment": [a, b] }));
    let verdict = check_serre_criterion(&mu, a, b, &cfg)?;
    emit_json(
        &json!({
            "passes": verdict.passes,
            "min_value": json_num(verdict.min_value),
            "min_location": verdict.min_location,
            "scan_interval": [verdict.scan_interval.0, verdict.scan_interval.1],
            "has_atoms": verdict.has_atoms,
        }),
        args.out.as_deref(),
        rec,
    )?;
    Ok(if verdict.passes { 0 } else { 2 })
}

pub fn approximate(args: &ApproximateArgs, rec: &mut RunRecord) -> Result<i32, CliError> {
    let mu = load_measure(&args.measure, rec)?;
    let (a, b) = segment_pair(&args.segment)?;
    if args.ns.is_empty() || args.ns.iter().any(|&n| n == 0) {
        return Err(CliError::Msg("--ns needs positive atom counts".into()));
    }
    let cfg = Config::default();
    rec.set_config(json!({
        "core": &cfg,
        "segment": [a, b],
        "ns": &args.ns,
        "panels_per_unit": args.panels,
    }));
    let report = match convergence_report(&mu, &args.ns, a, b, args.panels, &cfg) {
        Ok(r) => r,
        Err(CoreError::NotRealizable { min, at }) => {
            eprintln!("criterion failed: potential minimum {min} at {at}; nothing to approximate");
            return Ok(2);
        }
        Err(e) => return Err(e.into()),
    };
    let mut step_csvs = Vec::with_capacity(args.ns.len());
    for &n in &args.ns {
        let (nu, _, _) = construct_approximation(&mu, n, a, b, args.panels, &cfg)?;
        let path = PathBuf::from(format!("{}_{n}.csv", args.csv_prefix));
        let bytes = csv_bytes(&["x", "density"], &density_rows(&nu))?;
        write_atomic(&path, &bytes)?;
        rec.record_output(&path);
        step_csvs.push(path.display().to_string());
    }
    emit_json(
        &json!({
            "segment": [a, b],
            "ns": &args.ns,
            "steps": report.steps,
            "step_csvs": step_csvs,
        }),
        args.out.as_deref(),
        rec,
    )?;
    Ok(0)
}

#[derive(Serialize)]
struct PolyOut {
    coefficients: Vec<i64>,
    multiplicity: usize,
    display: String,
}

pub fn enumerate(args: &EnumerateArgs, rec: &mut RunRecord) -> Result<i32, CliError> {
    rec.set_config(json!({
        "degree": args.degree,
        "q": args.q,
        "irreducible_only": args.irreducible_only,
    }));
    let mut polys = enumerate_totally_real(args.degree, args.q)?;
    if args.irreducible_only {
        let mut kept = Vec::with_capacity(polys.len());
        for p in polys {
            if is_irreducible_small_degree(&p)? {
                kept.push(p);
            }
        }
        polys = kept;
    }
    let out: Vec<PolyOut> = polys
        .iter()
        .map(|p| PolyOut {
            coefficients: p.coefficients().to_vec(),
            multiplicity: 1,
            display: p.to_string(),
        })
        .collect();
    emit_json(
        &json!({
            "degree": args.degree,
            "q": args.q,
            "count": out.len(),
            "polynomials": out,
        }),
        args.out.as_deref(),
        rec,
    )?;
    Ok(0)
}

pub fn lift(args: &LiftArgs, rec: &mut RunRecord) -> Result<i32, CliError> {
    rec.set_config(json!({ "x": args.x, "q": args.q }));
    let pair = lift_to_weil(args.x, args.q)?;
    emit_json(
        &json!({
            "trace": pair.trace,
            "q": pair.q,
            "omega": [pair.omega.re, pair.omega.im],
        }),
        args.out.as_deref(),
        rec,
    )?;
    Ok(0)
}

#[derive(Deserialize)]
struct CensusJson {
    q: u64,
    polynomials: Vec<CensusEntryJson>,
}

#[derive(Deserialize)]
struct CensusEntryJson {
    coefficients: Vec<i64>,
    #[serde(default = "default_multiplicity")]
    multiplicity: usize,
}

fn default_multiplicity() -> usize {
    1
}

pub fn measure_of(args: &MeasureOfArgs, rec: &mut RunRecord) -> Result<i32, CliError> {
    let bytes = std::fs::read(&args.census)
        .map_err(|e| CliError::Msg(format!("cannot read census {}: {e}", args.census.display())))?;
    rec.record_file_input(Path::new(&args.census), &bytes);
    rec.set_config(json!({ "double_boundary": args.double_boundary }));
    let census: CensusJson = serde_json::from_slice(&bytes)?;
    let mut entries = Vec::with_capacity(census.polynomials.len());
    for e in census.polynomials {
        entries.push((IntegerPolynomial::new(e.coefficients)?, e.multiplicity));
    }
    let multiset = RealTraceMultiset::new(entries, census.q)?;
    let weighting = if args.double_boundary {
        BoundaryWeighting::Doubled
    } else {
        BoundaryWeighting::Stated
    };
    let mu = mu_of_multiset_weighted(&multiset, weighting)?;
    emit_json(&mu, args.out.as_deref(), rec)?;
    Ok(0)
}
