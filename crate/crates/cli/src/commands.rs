use fiberspec_core::forward::{calibrate_radius, fundamental_curve};
use fiberspec_core::inverse::{
    add_noise_with, initial_guess, minimize, tikhonov_value, CondResidual, ReconstructionStatus,
};
use fiberspec_core::{Constraints, Geometry, Measurements, Profile, TikhonovConfig};
use serde::Serialize;

use crate::config::{k_values, measurements, ExperimentConfig, MeasurementSource};
use crate::output::{num, summary, OutDir, Table};
use crate::svg::{self, Heatmap, PointMarker, Shape};
use crate::{CliError, Context};

#[derive(Serialize)]
struct ForwardRow {
    k_squared: f64,
    beta_squared: f64,
    residual: f64,
    cutoff_proximity: bool,
    cross_check_beta_squared: Option<f64>,
}

#[derive(Serialize)]
struct ForwardResults {
    rows: Vec<ForwardRow>,
    unguided_k_squared: Vec<f64>,
}

pub fn forward(cfg: &ExperimentConfig, ctx: &Context) -> Result<(), CliError> {
    let truth = cfg.require_truth("forward")?;
    let geom = cfg.geometry()?;
    let ks = k_values(&cfg.forward.k_squared)?;
    let settings = cfg.forward.search.settings();
    settings.validate().map_err(|e| CliError::Config(e.to_string()))?;
    ctx.progress(&format!("solving {} wavenumbers", ks.len()));
    let curve = fundamental_curve(&truth, &geom, cfg.forward.order, &ks, &settings)?;

    let mut table = Table::new(&["i", "k_squared", "beta_squared", "residual"]);
    let mut rows = Vec::new();
    for (i, p) in curve.iter().enumerate() {
        // report k² as configured rather than the rounded square of √k²
        let k2 = ks.iter().position(|&k| k == p.k).map_or(p.k_squared(), |j| cfg.forward.k_squared[j]);
        table.row(&[(i + 1).to_string(), num(k2), num(p.beta_squared()), num(p.residual)]);
        rows.push(ForwardRow {
            k_squared: k2,
            beta_squared: p.beta_squared(),
            residual: p.residual,
            cutoff_proximity: p.cutoff_proximity,
            cross_check_beta_squared: p.cross_check.map(|b| b * b),
        });
    }
    let mut unguided: Vec<f64> =
        ks.iter().filter(|&&k| !curve.iter().any(|p| p.k == k)).map(|k| k * k).collect();
    unguided.sort_by(f64::total_cmp);
    for k2 in &unguided {
        ctx.warn(&format!("no guided mode at k² = {k2}"));
    }
    let out = OutDir::create(&ctx.out)?;
    out.write("dispersion.csv", &table.into_bytes())?;
    out.write_json("forward.json", &summary("forward", cfg, ForwardResults { rows, unguided_k_squared: unguided }))?;
    Ok(())
}

#[derive(Serialize, Clone)]
struct TrialRecord {
    p: f64,
    trial: usize,
    noise_seed: u64,
    eps0: Vec<f64>,
    eps_alpha: Vec<f64>,
    relative_error: Option<f64>,
    objective: f64,
    initial_objective: f64,
    winner: usize,
    converged: bool,
}

struct Setup {
    data: Measurements,
    geom: Geometry,
    cons: Constraints,
    truth: Option<Profile>,
    seed: u64,
}

fn setup(cfg: &ExperimentConfig, levels: &[f64]) -> Result<Setup, CliError> {
    cfg.validate_tikhonov()?;
    for &p in levels {
        ExperimentConfig::check_level(p)?;
    }
    let noisy = levels.iter().any(|&p| p > 0.0);
    let seed = cfg.seed_for(noisy)?;
    let geom = cfg.geometry()?;
    let truth = cfg.truth()?;
    let data = measurements(cfg)?;
    let cons = Constraints::new(cfg.tikhonov.mu, cfg.layer_count()).map_err(|e| CliError::Config(e.to_string()))?;
    Ok(Setup { data, geom, cons, truth, seed })
}

/// Noise for trial `t` is drawn with seed `seed + 1 + t`; the multistart
/// uses `seed` itself, so noise-free trials coincide.
fn noise_seed(seed: u64, trial: usize) -> u64 {
    seed.wrapping_add(1 + trial as u64)
}

fn run_trial(cfg: &ExperimentConfig, s: &Setup, p: f64, trial: usize) -> Result<TrialRecord, CliError> {
    let n = cfg.layer_count();
    let ns = noise_seed(s.seed, trial);
    let noisy = add_noise_with(&s.data, p, ns, cfg.noise.model())?;
    let eps0 = cfg.tikhonov.eps0.clone().unwrap_or_else(|| initial_guess(&noisy, n));
    let op = CondResidual::new(noisy, s.geom.clone())?;
    let t = &cfg.tikhonov;
    let mut tc = TikhonovConfig::new(t.alpha, eps0.clone(), s.seed);
    tc.starts = t.starts;
    tc.perturbation = t.perturbation;
    tc.penalty = t.penalty;
    tc.max_restarts = t.max_restarts;
    tc.simplex.max_evals = t.max_evals;
    let mut r = minimize(&tc, &s.cons, &op)?;
    if let Some(truth) = &s.truth {
        r = r.with_truth(&truth.to_vector())?;
    }
    Ok(TrialRecord {
        p,
        trial,
        noise_seed: ns,
        eps0,
        eps_alpha: r.eps_alpha,
        relative_error: r.relative_error,
        objective: r.objective,
        initial_objective: r.initial_objective,
        winner: r.winner,
        converged: r.status == ReconstructionStatus::Converged,
    })
}

fn trial_header(n: usize, leading: &[&'static str]) -> Vec<String> {
    let mut h: Vec<String> = leading.iter().map(|s| s.to_string()).collect();
    h.push("eps0_guess".into());
    h.push("eps_alpha_core".into());
    for l in 2..=n {
        h.push(format!("eps_alpha_layer{l}"));
    }
    h.push("eps_alpha_cladding".into());
    h.push("e".into());
    h
}

fn trial_fields(r: &TrialRecord) -> Vec<String> {
    let mut f = vec![num(r.eps0[0])];
    f.extend(r.eps_alpha.iter().map(|&v| num(v)));
    f.push(num(r.relative_error.unwrap_or(f64::NAN)));
    f
}

#[derive(Serialize)]
struct Aggregate {
    p: f64,
    trials: usize,
    max_e: Option<f64>,
    mean_e: Option<f64>,
    unconverged: usize,
}

fn aggregate(p: f64, records: &[&TrialRecord]) -> Aggregate {
    let es: Vec<f64> = records.iter().filter_map(|r| r.relative_error).collect();
    let (max_e, mean_e) = if es.is_empty() || es.len() != records.len() {
        (None, None)
    } else {
        (Some(es.iter().copied().fold(0.0, f64::max)), Some(es.iter().sum::<f64>() / es.len() as f64))
    };
    Aggregate { p, trials: records.len(), max_e, mean_e, unconverged: records.iter().filter(|r| !r.converged).count() }
}

#[derive(Serialize)]
struct ReconstructResults {
    seed: u64,
    aggregate: Aggregate,
    trials: Vec<TrialRecord>,
}

fn unconverged_error(records: &[TrialRecord]) -> Result<(), CliError> {
    let bad = records.iter().filter(|r| !r.converged).count();
    if bad > 0 {
        return Err(CliError::Numerical(format!("{bad} of {} trials exhausted the evaluation budget", records.len())));
    }
    Ok(())
}

pub fn reconstruct(cfg: &ExperimentConfig, ctx: &Context) -> Result<(), CliError> {
    let p = cfg.noise.level;
    let s = setup(cfg, &[p])?;
    let n = cfg.layer_count();
    let header = trial_header(n, &[]);
    let mut table = Table::new(&header.iter().map(String::as_str).collect::<Vec<_>>());
    let mut records = Vec::new();
    for t in 0..cfg.noise.trials {
        let r = run_trial(cfg, &s, p, t)?;
        ctx.progress(&format!(
            "trial {}/{}: eps_alpha = {:?}, e = {}",
            t + 1,
            cfg.noise.trials,
            r.eps_alpha,
            r.relative_error.map_or("n/a".into(), |e| format!("{e:.5}"))
        ));
        table.row(&trial_fields(&r));
        records.push(r);
    }
    let out = OutDir::create(&ctx.out)?;
    out.write("reconstruct.csv", &table.into_bytes())?;
    let agg = aggregate(p, &records.iter().collect::<Vec<_>>());
    out.write_json("reconstruct.json", &summary("reconstruct", cfg, ReconstructResults { seed: s.seed, aggregate: agg, trials: records.clone() }))?;
    unconverged_error(&records)
}

#[derive(Serialize)]
struct SweepResults {
    seed: u64,
    levels: Vec<Aggregate>,
    trials: Vec<TrialRecord>,
}

pub fn noise_sweep(cfg: &ExperimentConfig, ctx: &Context) -> Result<(), CliError> {
    let levels = if cfg.noise.levels.is_empty() { vec![cfg.noise.level] } else { cfg.noise.levels.clone() };
    let s = setup(cfg, &levels)?;
    let n = cfg.layer_count();
    let header = trial_header(n, &["p", "trial"]);
    let mut table = Table::new(&header.iter().map(String::as_str).collect::<Vec<_>>());
    let mut stats = Table::new(&["p", "trials", "max_e", "mean_e", "unconverged"]);
    let mut records = Vec::new();
    let mut aggregates = Vec::new();
    for &p in &levels {
        let start = records.len();
        for t in 0..cfg.noise.trials {
            let r = run_trial(cfg, &s, p, t)?;
            let mut row = vec![num(p), t.to_string()];
            row.extend(trial_fields(&r));
            table.row(&row);
            records.push(r);
        }
        let agg = aggregate(p, &records[start..].iter().collect::<Vec<_>>());
        ctx.progress(&format!(
            "p = {p}: {} trials, max e = {}",
            agg.trials,
            agg.max_e.map_or("n/a".into(), |e| format!("{e:.5}"))
        ));
        stats.row(&[
            num(p),
            agg.trials.to_string(),
            num(agg.max_e.unwrap_or(f64::NAN)),
            num(agg.mean_e.unwrap_or(f64::NAN)),
            agg.unconverged.to_string(),
        ]);
        aggregates.push(agg);
    }
    let out = OutDir::create(&ctx.out)?;
    out.write("sweep.csv", &table.into_bytes())?;
    out.write("sweep_stats.csv", &stats.into_bytes())?;
    out.write_json("sweep.json", &summary("noise-sweep", cfg, SweepResults { seed: s.seed, levels: aggregates, trials: records.clone() }))?;
    unconverged_error(&records)
}

#[derive(Serialize)]
struct LandscapeResults {
    alpha: f64,
    eps0: Vec<f64>,
    cells: usize,
    masked: usize,
    argmin: Option<[f64; 3]>,
}

fn axis(range: [f64; 2], count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![range[0]];
    }
    (0..count).map(|i| range[0] + (range[1] - range[0]) * i as f64 / (count - 1) as f64).collect()
}

pub fn landscape(cfg: &ExperimentConfig, ctx: &Context) -> Result<(), CliError> {
    if cfg.layer_count() != 1 {
        return Err(CliError::Config(format!(
            "landscape needs a single-layer profile, the geometry has {} layers",
            cfg.layer_count()
        )));
    }
    let l = &cfg.landscape;
    let [nx, ny] = l.resolution;
    if nx == 0 || ny == 0 {
        return Err(CliError::Config("landscape.resolution must be positive".into()));
    }
    for r in [l.eps1, l.eps_e] {
        if !(r[0].is_finite() && r[1].is_finite() && r[1] >= r[0]) {
            return Err(CliError::Config(format!("bad landscape range {r:?}")));
        }
    }
    let p = cfg.noise.level;
    let s = setup(cfg, &[p])?;
    let data = add_noise_with(&s.data, p, noise_seed(s.seed, 0), cfg.noise.model())?;
    let eps0 = cfg.tikhonov.eps0.clone().unwrap_or_else(|| initial_guess(&data, 1));
    let op = CondResidual::new(data, s.geom.clone())?;
    let alpha = cfg.tikhonov.alpha;

    let xs = axis(l.eps1, nx);
    let ys = axis(l.eps_e, ny);
    ctx.progress(&format!("evaluating {} cells", nx * ny));
    let mut values = vec![None; nx * ny];
    let mut table = Table::new(&["eps1", "eps_e", "value"]);
    let mut argmin: Option<[f64; 3]> = None;
    for (ix, &x) in xs.iter().enumerate() {
        for (iy, &y) in ys.iter().enumerate() {
            let point = [x, y];
            let v = if s.cons.is_feasible(&point, 0.0) { Some(tikhonov_value(&point, alpha, &eps0, &op)?) } else { None };
            if let Some(v) = v {
                if argmin.is_none_or(|a| v < a[2]) {
                    argmin = Some([x, y, v]);
                }
            }
            values[iy * nx + ix] = v;
            table.row(&[num(x), num(y), num(v.unwrap_or(f64::NAN))]);
        }
    }
    let masked = values.iter().filter(|v| v.is_none()).count();
    if masked == values.len() {
        ctx.warn("every grid cell violates the constraints; the map is fully masked");
    }

    let mut markers = Vec::new();
    if let Some(t) = &s.truth {
        let v = t.to_vector();
        markers.push(PointMarker { label: "exact".into(), at: [v[0], v[1]], shape: Shape::Circle });
    }
    markers.push(PointMarker { label: "initial guess".into(), at: [eps0[0], eps0[1]], shape: Shape::Square });
    for m in &l.markers {
        markers.push(PointMarker { label: m.label.clone(), at: m.eps, shape: Shape::Cross });
    }
    let title = format!("Tikhonov functional, alpha = {alpha}");
    let svg = svg::render(&Heatmap {
        title: &title,
        x_label: "ε₁",
        y_label: "ε_e",
        x_range: l.eps1,
        y_range: l.eps_e,
        nx,
        ny,
        values: &values,
        markers: &markers,
    });
    let out = OutDir::create(&ctx.out)?;
    out.write("landscape.csv", &table.into_bytes())?;
    out.write("landscape.svg", svg.as_bytes())?;
    out.write_json(
        "landscape.json",
        &summary("landscape", cfg, LandscapeResults { alpha, eps0, cells: nx * ny, masked, argmin }),
    )?;
    Ok(())
}

#[derive(Serialize)]
struct CalibrationRow {
    k_squared: f64,
    beta_squared_measured: f64,
    beta_squared_model: Option<f64>,
    relative_error: Option<f64>,
}

#[derive(Serialize)]
struct CalibrationResults {
    radius: f64,
    misfit: f64,
    iterations: usize,
    rows: Vec<CalibrationRow>,
    max_relative_error: Option<f64>,
}

pub fn calibrate(cfg: &ExperimentConfig, ctx: &Context) -> Result<(), CliError> {
    let truth = cfg.require_truth("calibrate-radius")?;
    if cfg.layer_count() != 1 {
        return Err(CliError::Config("radius calibration needs a single-layer profile".into()));
    }
    let c = cfg.calibration.as_ref().ok_or_else(|| CliError::Config("`calibration` is missing".into()))?;
    let [r_lo, r_hi] = c.radius_range;
    if !(r_lo > 0.0 && r_hi > r_lo && c.tol > 0.0) {
        return Err(CliError::Config(format!("bad calibration range {:?} or tolerance {}", c.radius_range, c.tol)));
    }
    if !(c.row[0] > 0.0 && c.row[1] > 0.0) {
        return Err(CliError::Config(format!("calibration row {:?} must be positive", c.row)));
    }
    let settings = cfg.forward.search.settings();
    settings.validate().map_err(|e| CliError::Config(e.to_string()))?;
    let fit = calibrate_radius(c.row[0].sqrt(), c.row[1].sqrt(), &truth, (r_lo, r_hi), c.tol, &settings)?
        .ok_or_else(|| CliError::Numerical(format!("β² − target does not change sign on {:?}", c.radius_range)))?;
    ctx.progress(&format!("radius = {:.15}, misfit = {:e}", fit.radius, fit.misfit));

    let rows_in: Vec<(f64, f64)> = match &cfg.measurements {
        Some(MeasurementSource::Inline { pairs_squared }) => pairs_squared.iter().map(|r| (r[0], r[1])).collect(),
        Some(_) => measurements(cfg)?.pairs().iter().map(|&(k, b)| (k * k, b * b)).collect(),
        None => vec![(c.row[0], c.row[1])],
    };
    let geom = Geometry::single(fit.radius)?;
    let ks: Vec<f64> = rows_in.iter().map(|r| r.0.sqrt()).collect();
    let curve = fundamental_curve(&truth, &geom, 0, &ks, &settings)?;
    let mut table = Table::new(&["i", "k_squared", "beta_squared_measured", "beta_squared_model", "relative_error"]);
    let mut rows = Vec::new();
    for (i, &(k2, b2)) in rows_in.iter().enumerate() {
        let model = curve.iter().find(|p| p.k == ks[i]).map(|p| p.beta_squared());
        let rel = model.map(|m| (m - b2).abs() / b2);
        table.row(&[
            (i + 1).to_string(),
            num(k2),
            num(b2),
            num(model.unwrap_or(f64::NAN)),
            num(rel.unwrap_or(f64::NAN)),
        ]);
        rows.push(CalibrationRow { k_squared: k2, beta_squared_measured: b2, beta_squared_model: model, relative_error: rel });
    }
    let max_rel = rows.iter().map(|r| r.relative_error).try_fold(0.0f64, |acc, e| e.map(|e| acc.max(e)));
    let out = OutDir::create(&ctx.out)?;
    out.write("calibration.csv", &table.into_bytes())?;
    out.write_json(
        "calibration.json",
        &summary(
            "calibrate-radius",
            cfg,
            CalibrationResults { radius: fit.radius, misfit: fit.misfit, iterations: fit.iterations, rows, max_relative_error: max_rel },
        ),
    )?;
    Ok(())
}
