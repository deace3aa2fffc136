use std::path::PathBuf;

use morse_core::solver::fd_hamiltonian;
use morse_core::{
    apply_rotation, energy_expectation, fd_reference_spectrum, level_set, plan_pulses, plan_rotation, shooting_dipole,
    Classification, Error, Mode64, ProductState64, Shooter, TwoMode64,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{Cli, Command, Format, LevelsetArgs, ModeArgs, PlanArgs, Spectra, SweepArgs, WavefunctionArgs};
use crate::config::{parse_list, RunConfig};
use crate::error::{is_numerical, status_of, CliError};
use crate::output::{finite, json, num, Csv};

/// Previously published dipole magnitudes for the standard well
/// (`alpha = 2`, `x0 = 1`), printed with a negative sign.
pub const PUBLISHED_DIPOLES: [(f64, f64); 9] = [
    (6.0, -0.0003),
    (7.0, -0.0003),
    (8.0, -0.588),
    (9.0, -0.604),
    (10.0, -0.609),
    (11.0, -0.6089),
    (12.0, -0.607),
    (13.0, -0.602),
    (14.0, -0.597),
];

pub fn published_dipole(c: f64) -> Option<f64> {
    PUBLISHED_DIPOLES.iter().find(|(k, _)| *k == c).map(|&(_, d)| d)
}

/// Rendered output plus whether any row hit a numerical failure.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub out: Option<PathBuf>,
    pub numerical_failure: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.numerical_failure {
            3
        } else {
            0
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let cfg = RunConfig::resolve(&cli.common)?;
    let (text, numerical_failure) = match &cli.command {
        Command::Spectrum(a) => spectrum(&cfg, a)?,
        Command::Dipole(a) => dipole(&cfg, a)?,
        Command::Wavefunction(a) => (wavefunction(&cfg, a)?, false),
        Command::Levelset(a) => (levelset(&cfg, a)?, false),
        Command::Plan(a) => (plan(&cfg, a)?, false),
    };
    Ok(Outcome { text, out: cfg.out.clone(), numerical_failure })
}

fn parameter_comment(cfg: &RunConfig) -> String {
    let domain = if cfg.adaptive_domain { "adaptive".to_string() } else { num(cfg.x_max) };
    format!(
        "alpha={} x0={} mass={} hbar={} h={} x_max={} tolerance={}",
        num(cfg.alpha),
        num(cfg.x0),
        num(cfg.mass),
        num(cfg.hbar),
        num(cfg.h),
        domain,
        num(cfg.tolerance)
    )
}

/// Depths from a list, a single value or a range, flags before file
/// entries. Every depth is validated before anything is solved.
pub fn depths(cfg: &RunConfig, a: &SweepArgs, default: (f64, f64, f64)) -> Result<Vec<f64>, CliError> {
    let f = &cfg.file;
    let range_flag = a.c_min.is_some() || a.c_max.is_some() || a.c_step.is_some();
    let list = if let Some(l) = &a.c_list {
        parse_list(l, "--c-list")?
    } else if let Some(c) = a.c {
        vec![c]
    } else if range_flag {
        range(f.pick(a.c_min, "c-min")?, f.pick(a.c_max, "c-max")?, f.pick(a.c_step, "c-step")?, default)?
    } else if let Some(l) = f.raw("c-list") {
        parse_list(l, "c-list")?
    } else if let Some(c) = f.get::<f64>("c")? {
        vec![c]
    } else {
        range(f.get("c-min")?, f.get("c-max")?, f.get("c-step")?, default)?
    };
    for &c in &list {
        cfg.potential(c).map_err(|_| CliError::Invalid(format!("invalid depth c = {c}: must be finite and > 0")))?;
    }
    Ok(list)
}

fn range(lo: Option<f64>, hi: Option<f64>, step: Option<f64>, default: (f64, f64, f64)) -> Result<Vec<f64>, CliError> {
    let (lo, hi, step) = (lo.unwrap_or(default.0), hi.unwrap_or(default.1), step.unwrap_or(default.2));
    if !(lo.is_finite() && hi.is_finite() && step.is_finite() && step > 0.0 && lo <= hi) {
        return Err(CliError::Invalid(format!("bad depth range {lo}..{hi} step {step}")));
    }
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    if count > 100_000 {
        return Err(CliError::Invalid(format!("depth range has {count} values")));
    }
    Ok((0..count).map(|k| lo + k as f64 * step).collect())
}

#[derive(Debug, Clone, Serialize)]
struct SpectrumRow {
    c: f64,
    n: Option<usize>,
    #[serde(rename = "E_shooting")]
    e_shooting: Option<f64>,
    #[serde(rename = "E_fd_oracle")]
    e_fd: Option<f64>,
    #[serde(rename = "E_analytic")]
    e_analytic: Option<f64>,
    status: &'static str,
    #[serde(skip)]
    numerical: bool,
}

fn failed_row(c: f64, e: &Error) -> SpectrumRow {
    SpectrumRow {
        c,
        n: None,
        e_shooting: None,
        e_fd: None,
        e_analytic: None,
        status: status_of(e),
        numerical: is_numerical(e),
    }
}

/// One row per closed-form bound level; levels the truncated domain cannot
/// hold are reported with a status instead of an energy.
fn spectrum_rows(cfg: &RunConfig, c: f64) -> Vec<SpectrumRow> {
    let p = match cfg.potential(c) {
        Ok(p) => p,
        Err(_) => return vec![failed_row(c, &Error::InvalidParameter { name: "c", reason: String::new() })],
    };
    let count = p.bound_state_count();
    if count == 0 {
        return vec![failed_row(c, &Error::NoSuchBoundState { n: 0 })];
    }
    let opts = match cfg.options(&p, count - 1) {
        Ok(o) => o,
        Err(_) => return vec![failed_row(c, &Error::InvalidGrid("domain".into()))],
    };
    let shooter = Shooter::new(p, opts.grid);
    let ladder = shooter.ladder(opts.seed);
    let fd_levels = fd_hamiltonian(&p, &opts.grid).sturm_count(0.0).min(count);
    let fd = if fd_levels > 0 { fd_reference_spectrum(&p, &opts.grid, fd_levels) } else { Ok(Vec::new()) };
    (0..count)
        .map(|n| {
            let shot = shooter.solve_level(n, &ladder, &opts).map(|s| s.energy);
            let fd_n = match &fd {
                Ok(v) => v.get(n).copied().ok_or(Error::NoSuchBoundState { n }),
                Err(e) => Err(e.clone()),
            };
            let failure = shot.as_ref().err().or(fd_n.as_ref().err());
            SpectrumRow {
                c,
                n: Some(n),
                e_shooting: shot.as_ref().ok().copied(),
                e_fd: fd_n.as_ref().ok().copied(),
                e_analytic: p.analytic_energy(n),
                status: failure.map_or("ok", status_of),
                numerical: failure.is_some_and(is_numerical),
            }
        })
        .collect()
}

fn opt(x: Option<f64>) -> String {
    x.map_or_else(String::new, num)
}

fn spectrum(cfg: &RunConfig, a: &SweepArgs) -> Result<(String, bool), CliError> {
    let cs = depths(cfg, a, (1.0, 14.0, 1.0))?;
    let rows: Vec<SpectrumRow> = cs.par_iter().flat_map_iter(|&c| spectrum_rows(cfg, c)).collect();
    let failed = rows.iter().any(|r| r.numerical);
    let text = match cfg.format {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut t = Csv::new(&["c", "n", "E_shooting", "E_fd_oracle", "E_analytic", "status"]);
            t.comment(parameter_comment(cfg));
            if rows.iter().any(|r| r.status == "NoSuchBoundState" && r.e_analytic.is_some()) {
                t.comment("some closed-form levels do not fit on this domain; try --adaptive-domain");
            }
            for r in &rows {
                t.row(vec![
                    num(r.c),
                    r.n.map_or_else(String::new, |n| n.to_string()),
                    opt(r.e_shooting),
                    opt(r.e_fd),
                    opt(r.e_analytic),
                    r.status.to_string(),
                ]);
            }
            t.render()
        }
    };
    Ok((text, failed))
}

#[derive(Debug, Clone, Serialize)]
pub struct DipoleRow {
    pub c: f64,
    pub d: Option<f64>,
    pub abs_d: Option<f64>,
    pub published_d: Option<f64>,
    pub status: &'static str,
    #[serde(skip)]
    pub numerical: bool,
}

pub fn dipole_row(cfg: &RunConfig, c: f64) -> DipoleRow {
    let result = cfg
        .potential(c)
        .map_err(|_| Error::InvalidParameter { name: "c", reason: String::new() })
        .and_then(|p| {
            let opts = cfg.options(&p, 1).map_err(|_| Error::InvalidGrid("domain".into()))?;
            shooting_dipole(&p, &opts)
        });
    let (d, status, numerical) = match &result {
        Ok(r) => (Some(r.value), "ok", false),
        Err(e) => (None, status_of(e), is_numerical(e)),
    };
    DipoleRow { c, d, abs_d: d.map(f64::abs), published_d: published_dipole(c), status, numerical }
}

fn dipole(cfg: &RunConfig, a: &SweepArgs) -> Result<(String, bool), CliError> {
    let cs = depths(cfg, a, (6.0, 14.0, 1.0))?;
    let rows: Vec<DipoleRow> = cs.par_iter().map(|&c| dipole_row(cfg, c)).collect();
    let failed = rows.iter().any(|r| r.numerical);
    let text = match cfg.format {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut t = Csv::new(&["c", "d_signed", "abs_d", "published_d", "status"]);
            t.comment(parameter_comment(cfg));
            t.comment("sign convention: first extremum of each eigenfunction positive");
            for r in &rows {
                t.row(vec![num(r.c), opt(r.d), opt(r.abs_d), opt(r.published_d), r.status.to_string()]);
            }
            t.render()
        }
    };
    Ok((text, failed))
}

fn wavefunction(cfg: &RunConfig, a: &WavefunctionArgs) -> Result<String, CliError> {
    let f = &cfg.file;
    let c = f.pick(a.c, "c")?.unwrap_or(10.0);
    let levels: Vec<usize> = match (&a.n, f.raw("n")) {
        (Some(l), _) => parse_list(l, "--n")?,
        (None, Some(l)) => parse_list(l, "n")?,
        (None, None) => vec![0, 1],
    };
    let decimate = f.pick(a.decimate, "decimate")?.unwrap_or(1);
    if decimate == 0 {
        return Err(CliError::Invalid("--decimate must be at least 1".into()));
    }
    let p = cfg
        .potential(c)
        .map_err(|_| CliError::Invalid(format!("invalid depth c = {c}: must be finite and > 0")))?;
    let top = levels.iter().copied().max().unwrap_or(0);
    let opts = cfg.options(&p, top)?;
    let shooter = Shooter::new(p, opts.grid);
    let ladder = shooter.ladder(opts.seed);
    let states = levels
        .iter()
        .map(|&n| shooter.solve_level(n, &ladder, &opts))
        .collect::<Result<Vec<_>, _>>()?;
    let grid = opts.grid;
    let keep: Vec<usize> = (0..grid.len()).step_by(decimate).collect();
    let names: Vec<String> = levels.iter().map(|n| format!("phi_{n}")).collect();

    match cfg.format {
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("c".into(), c.into());
            obj.insert("x".into(), keep.iter().map(|&i| grid.x(i)).collect::<Vec<_>>().into());
            let meta: Vec<serde_json::Value> = states
                .iter()
                .map(|s| {
                    serde_json::json!({
                        "n": s.n,
                        "energy": s.energy,
                        "norm": s.wavefunction.norm_squared(),
                        "sign_changes": s.wavefunction.sign_changes(),
                    })
                })
                .collect();
            obj.insert("levels".into(), meta.into());
            for (name, s) in names.iter().zip(&states) {
                let v = s.wavefunction.values();
                obj.insert(name.clone(), keep.iter().map(|&i| v[i]).collect::<Vec<_>>().into());
            }
            Ok(json(&obj))
        }
        Format::Csv => {
            let mut header = vec!["x".to_string()];
            header.extend(names.iter().cloned());
            let mut t = Csv::new(&header);
            t.comment(format!("c={} {}", num(c), parameter_comment(cfg)));
            for s in &states {
                t.comment(format!(
                    "n={} E={} norm={} sign_changes={}",
                    s.n,
                    num(s.energy),
                    num(s.wavefunction.norm_squared()),
                    s.wavefunction.sign_changes()
                ));
            }
            for &i in &keep {
                let mut row = vec![num(grid.x(i))];
                row.extend(states.iter().map(|s| num(s.wavefunction.values()[i])));
                t.row(row);
            }
            Ok(t.render())
        }
    }
}

/// Two-mode system from the shared settings; each mode gets its own grid.
pub fn build_system(cfg: &RunConfig, m: &ModeArgs) -> Result<(TwoMode64, Spectra, f64, f64), CliError> {
    let f = &cfg.file;
    let c1 = f.pick(m.c1, "c1")?.unwrap_or(10.0);
    let c2 = f.pick(m.c2, "c2")?.unwrap_or(12.0);
    let spectra = f.pick_enum(m.spectra, "spectra")?.unwrap_or(Spectra::Analytic);
    let mode = |label: u8, c: f64| -> Result<Mode64, CliError> {
        let p = cfg
            .potential(c)
            .map_err(|_| CliError::Invalid(format!("invalid depth c{label} = {c}: must be finite and > 0")))?;
        if p.bound_state_count() < 2 {
            return Err(CliError::Invalid(format!("mode {label}: depth {c} holds fewer than two bound levels")));
        }
        let opts = cfg.options(&p, 1)?;
        Ok(match spectra {
            Spectra::Analytic => Mode64::analytic_with_solved_dipole(label, &p, &opts)?,
            Spectra::Shooting => Mode64::solved(label, &p, &opts)?,
        })
    };
    let sys = TwoMode64::new(mode(1, c1)?, mode(2, c2)?)?;
    Ok((sys, spectra, c1, c2))
}

fn spectra_name(s: Spectra) -> &'static str {
    match s {
        Spectra::Analytic => "analytic",
        Spectra::Shooting => "shooting",
    }
}

#[derive(Debug, Clone, Serialize)]
struct LevelPoint {
    arc: usize,
    a1: f64,
    a2: f64,
}

#[derive(Debug, Clone, Serialize)]
struct LevelsetDoc {
    c1: f64,
    c2: f64,
    spectra: &'static str,
    target: f64,
    classification: &'static str,
    semi_axes: [Option<f64>; 2],
    e1_0: f64,
    e1_1: f64,
    e2_0: f64,
    e2_1: f64,
    points: Vec<LevelPoint>,
}

fn levelset(cfg: &RunConfig, a: &LevelsetArgs) -> Result<String, CliError> {
    let f = &cfg.file;
    let target: f64 = f
        .pick(a.energy, "energy")?
        .ok_or_else(|| CliError::Invalid("--energy is required".into()))?;
    if !target.is_finite() {
        return Err(CliError::Invalid(format!("energy must be finite, got {target}")));
    }
    let samples = f.pick(a.samples, "samples")?.unwrap_or(256);
    if samples < 8 {
        return Err(CliError::Invalid(format!("--samples must be at least 8, got {samples}")));
    }
    let (sys, spectra, c1, c2) = build_system(cfg, &a.modes)?;
    let curve = level_set(&sys, target, samples)?;
    let points: Vec<LevelPoint> = curve
        .arcs
        .iter()
        .enumerate()
        .flat_map(|(arc, pts)| pts.iter().map(move |&(a1, a2)| LevelPoint { arc, a1, a2 }))
        .collect();
    let doc = LevelsetDoc {
        c1,
        c2,
        spectra: spectra_name(spectra),
        target,
        classification: curve.classification.as_str(),
        semi_axes: [finite(curve.semi_axes.0), finite(curve.semi_axes.1)],
        e1_0: sys.mode1.e0,
        e1_1: sys.mode1.e1,
        e2_0: sys.mode2.e0,
        e2_1: sys.mode2.e1,
        points,
    };
    Ok(match cfg.format {
        Format::Json => json(&doc),
        Format::Csv => {
            let mut t = Csv::new(&["arc", "a1", "a2"]);
            t.comment(format!("classification={}", doc.classification));
            t.comment(format!(
                "target={} semi_axes={} {}",
                num(target),
                num(curve.semi_axes.0),
                num(curve.semi_axes.1)
            ));
            t.comment(format!(
                "c1={} c2={} spectra={} E1=({}, {}) E2=({}, {})",
                num(c1),
                num(c2),
                doc.spectra,
                num(doc.e1_0),
                num(doc.e1_1),
                num(doc.e2_0),
                num(doc.e2_1)
            ));
            if curve.classification == Classification::Empty {
                t.comment(format!(
                    "reachable range is [{}, {}]",
                    num(sys.min_energy()),
                    num(sys.max_energy())
                ));
            }
            for p in &doc.points {
                t.row(vec![p.arc.to_string(), num(p.a1), num(p.a2)]);
            }
            t.render()
        }
    })
}

#[derive(Debug, Clone, Serialize)]
struct PulseDoc {
    mode: u8,
    carrier: f64,
    rotation: f64,
    area: f64,
    amplitude: f64,
    duration: f64,
}

#[derive(Debug, Clone, Serialize)]
struct PlanDoc {
    c1: f64,
    c2: f64,
    spectra: &'static str,
    initial_energy: f64,
    final_energy: f64,
    delta1: f64,
    delta2: f64,
    total_duration: f64,
    pulses: Vec<PulseDoc>,
}

fn angle_pair(text: Option<String>, what: &str) -> Result<(f64, f64), CliError> {
    let text = text.ok_or_else(|| CliError::Invalid(format!("--{what} is required")))?;
    match parse_list::<f64>(&text, what)?.as_slice() {
        &[a, b] if a.is_finite() && b.is_finite() => Ok((a, b)),
        _ => Err(CliError::Invalid(format!("--{what} takes two finite angles, got `{text}`"))),
    }
}

fn plan(cfg: &RunConfig, a: &PlanArgs) -> Result<String, CliError> {
    let f = &cfg.file;
    let from = angle_pair(f.pick(a.from_angles.clone(), "from-angles")?, "from-angles")?;
    let to = angle_pair(f.pick(a.to_angles.clone(), "to-angles")?, "to-angles")?;
    let amplitude = f.pick(a.amplitude, "amplitude")?.unwrap_or(1.0);
    if !(amplitude > 0.0 && amplitude.is_finite()) {
        return Err(CliError::Invalid(format!("amplitude must be finite and > 0, got {amplitude}")));
    }
    let (sys, spectra, c1, c2) = build_system(cfg, &a.modes)?;
    let from = ProductState64::new(from.0, from.1);
    let to = ProductState64::new(to.0, to.1);
    let rot = plan_rotation(&from, &to);
    let pulses = plan_pulses(&sys, &rot, amplitude)?;
    let doc = PlanDoc {
        c1,
        c2,
        spectra: spectra_name(spectra),
        initial_energy: energy_expectation(&sys, &from),
        final_energy: energy_expectation(&sys, &apply_rotation(&rot, &from)),
        delta1: rot.delta1,
        delta2: rot.delta2,
        total_duration: pulses.total_duration(),
        pulses: pulses
            .pulses
            .iter()
            .map(|p| PulseDoc {
                mode: p.mode,
                carrier: p.carrier,
                rotation: p.rotation,
                area: p.area,
                amplitude: p.amplitude,
                duration: p.duration,
            })
            .collect(),
    };
    Ok(match cfg.format {
        Format::Json => json(&doc),
        Format::Csv => {
            let mut t = Csv::new(&["mode", "carrier", "rotation", "area", "amplitude", "duration"]);
            t.comment(format!(
                "c1={} c2={} spectra={} initial_energy={} final_energy={}",
                num(c1),
                num(c2),
                doc.spectra,
                num(doc.initial_energy),
                num(doc.final_energy)
            ));
            t.comment(format!(
                "delta1={} delta2={} total_duration={}",
                num(doc.delta1),
                num(doc.delta2),
                num(doc.total_duration)
            ));
            for p in &doc.pulses {
                t.row(vec![
                    p.mode.to_string(),
                    num(p.carrier),
                    num(p.rotation),
                    num(p.area),
                    num(p.amplitude),
                    num(p.duration),
                ]);
            }
            t.render()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;
    use morse_core::quadrature::simpson;

    fn call(args: &str) -> Result<Outcome, CliError> {
        let argv = std::iter::once("morse").chain(args.split_whitespace());
        run(&Cli::try_parse_from(argv).expect("arguments parse"))
    }

    fn data_rows(text: &str) -> Vec<Vec<String>> {
        text.lines()
            .filter(|l| !l.starts_with('#'))
            .skip(1)
            .map(|l| l.split(',').map(str::to_string).collect())
            .collect()
    }

    #[test]
    fn spectrum_rows_follow_bound_count() {
        let out = call("spectrum --c 10").unwrap();
        let rows = data_rows(&out.text);
        assert_eq!(rows.len(), 2);
        assert!(rows.iter().all(|r| r[5] == "ok"));
        assert_eq!(out.exit_code(), 0);
        // third level of c = 13 sits above zero on the default box
        let out = call("spectrum --c-list 13").unwrap();
        let rows = data_rows(&out.text);
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[2][5], "NoSuchBoundState");
        assert!(out.text.contains("--adaptive-domain"));
        let out = call("spectrum --c-list 13 --adaptive-domain").unwrap();
        assert!(data_rows(&out.text).iter().all(|r| r[5] == "ok"));
    }

    #[test]
    fn spectrum_sweep_ordered() {
        let out = call("spectrum --c-min 1 --c-max 4 --c-step 1 --h 2e-3").unwrap();
        let cs: Vec<String> = data_rows(&out.text).into_iter().map(|r| r[0].clone()).collect();
        assert_eq!(cs, ["1", "2", "3", "4"]);
    }

    #[test]
    fn invalid_depth_rejected_up_front() {
        let e = call("spectrum --c -5").unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(e.to_string().contains("invalid depth"));
        assert_eq!(call("dipole --c-list 10,0").unwrap_err().exit_code(), 2);
        assert_eq!(call("spectrum --c-min 5 --c-max 1").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn shallow_dipole_row_marked() {
        let out = call("dipole --c-list 3").unwrap();
        let rows = data_rows(&out.text);
        assert_eq!(rows[0][4], "NoSuchBoundState");
        assert_eq!(rows[0][1], "");
        assert_eq!(out.exit_code(), 0);
    }

    #[test]
    fn dipole_json_fields() {
        let out = call("dipole --c-list 10 --format json").unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v[0]["c"], 10.0);
        assert!(v[0]["d"].as_f64().unwrap().abs() > 0.2);
        assert_eq!(v[0]["published_d"], -0.609);
    }

    #[test]
    fn wavefunction_columns_normalized() {
        let out = call("wavefunction --c 10").unwrap();
        let header = out.text.lines().find(|l| !l.starts_with('#')).unwrap();
        assert_eq!(header, "x,phi_0,phi_1");
        let rows = data_rows(&out.text);
        assert_eq!(rows.len(), 12001);
        for col in [1, 2] {
            let sq: Vec<f64> = rows.iter().map(|r| r[col].parse::<f64>().unwrap().powi(2)).collect();
            assert!((simpson(&sq, 1e-3) - 1.0).abs() < 1e-6);
        }
        let e = call("wavefunction --c 10 --n 5").unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(e.to_string().contains("no bound state"));
    }

    #[test]
    fn wavefunction_decimated_json() {
        let out = call("wavefunction --c 10 --n 1 --decimate 100 --format json").unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["x"].as_array().unwrap().len(), 121);
        assert_eq!(v["phi_1"].as_array().unwrap().len(), 121);
        assert_eq!(v["levels"][0]["sign_changes"], 1);
        assert!(call("wavefunction --decimate 0").is_err());
    }

    #[test]
    fn levelset_classifications() {
        let class = |e: &str| {
            let out = call(&format!("levelset --c1 10 --c2 12 --energy {e} --format json")).unwrap();
            let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
            v["classification"].as_str().unwrap().to_string()
        };
        assert_eq!(class("-4"), "FullEllipse");
        assert_eq!(class("-11"), "ClippedArcs");
        assert_eq!(class("1"), "Empty");
        let csv = call("levelset --energy -4 --samples 8").unwrap().text;
        assert!(csv.starts_with("# classification=FullEllipse\n"));
        assert_eq!(data_rows(&csv).len(), 8);
        assert_eq!(call("levelset --energy -4 --samples 4").unwrap_err().exit_code(), 2);
        assert_eq!(call("levelset").unwrap_err().exit_code(), 2);
        assert_eq!(call("levelset --c1 3 --energy -4").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn plan_outputs() {
        let out = call("plan --from-angles 0.4,0.2 --to-angles 0.4,0.2 --format json").unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert!(v["pulses"].as_array().unwrap().is_empty());
        assert_eq!(v["initial_energy"], v["final_energy"]);

        let out = call("plan --from-angles 0.3,-0.2 --to-angles 1.2,1.3 --format json").unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        let carriers: Vec<f64> = v["pulses"].as_array().unwrap().iter().map(|p| p["carrier"].as_f64().unwrap()).collect();
        assert!((carriers[0] - 4.944).abs() < 1e-2 && (carriers[1] - 5.798).abs() < 1e-2);

        assert_eq!(call("plan --from-angles 0,0 --to-angles 1,1 --amplitude 0").unwrap_err().exit_code(), 2);
        assert_eq!(call("plan --from-angles 0 --to-angles 1,1").unwrap_err().exit_code(), 2);
        assert_eq!(call("plan --to-angles 1,1").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn config_file_fills_gaps() {
        let dir = std::env::temp_dir().join(format!("morse-cmd-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.cfg");
        std::fs::write(&path, "# sweep\nc-list = 10\nformat = json\nh = 2e-3\n").unwrap();
        let out = call(&format!("dipole --config {}", path.display())).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 1);
        // the flag wins over the file
        let out = call(&format!("dipole --config {} --c 9 --format csv", path.display())).unwrap();
        assert!(out.text.contains("h=0.002"));
        assert_eq!(data_rows(&out.text)[0][0], "9");
        std::fs::remove_dir_all(dir).unwrap();
    }
}
