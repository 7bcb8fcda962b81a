use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use evenorbit::efunc::{closed_form, EFunctionSpec};
use evenorbit::formats::{
    coefficients_from_json, coefficients_to_json, parse_rational, read_samples_csv, write_grid_csv,
    write_samples_csv, write_spectrum_csv,
};
use evenorbit::grids::{build_point_grid, build_weight_grid};
use evenorbit::lie_data::{SemisimpleSystem, TorusPoint, Weight, SELECTORS};
use evenorbit::transform::{interpolate, SampleSet, TransformPlan, ORTHOGONALITY_TOL};
use evenorbit::verify::{errata_report, regenerate_table, RowStatus, TableId};
use evenorbit::weyl::{EvenGroup, EvenGroupKind};
use evenorbit::Execution;
use num_complex::Complex64;

use crate::{CliError, GridArgs, GroupArgs};

pub type CliResult = Result<(), CliError>;

pub fn output(path: Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    match path {
        None => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
        Some(p) if p.as_os_str() == "-" => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
        Some(p) => {
            let f = File::create(&p)
                .map_err(|e| CliError::Usage(format!("--output {}: {e}", p.display())))?;
            Ok(Box::new(BufWriter::new(f)))
        }
    }
}

pub fn read_input(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)
    } else {
        File::open(path).and_then(|mut f| f.read_to_string(&mut text))
    }
    .map_err(|e| CliError::Usage(format!("--input {}: {e}", path.display())))?;
    Ok(text)
}

fn io_err(e: io::Error) -> CliError {
    CliError::Usage(format!("write failed: {e}"))
}

pub fn system(args: &GroupArgs) -> Result<SemisimpleSystem, CliError> {
    Ok(SemisimpleSystem::from_selector(&args.group)?)
}

pub fn parse_point(system: &SemisimpleSystem, coords: &[String]) -> Result<TorusPoint, CliError> {
    let q = coords
        .iter()
        .map(|s| parse_rational("point", s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TorusPoint::from_rationals(system, &q)?)
}

/// Real and imaginary parts with 15 significant digits.
pub fn format_value(v: Complex64) -> String {
    format!("{:.14e} {:.14e}", v.re, v.im)
}

pub fn list_groups() -> CliResult {
    let mut out = output(None)?;
    writeln!(out, "group     rank  det_C  |W|  |W^e|  |W^ee|").map_err(io_err)?;
    for sel in SELECTORS {
        let s = SemisimpleSystem::from_selector(sel)?;
        let e = EvenGroup::new(&s, EvenGroupKind::FullEven).order();
        let ee = EvenGroup::new(&s, EvenGroupKind::ProductEven).order();
        writeln!(
            out,
            "{sel:<9} {:>4}  {:>5}  {:>3}  {e:>5}  {ee:>6}",
            s.rank(),
            s.det_cartan(),
            s.weyl_order()
        )
        .map_err(io_err)?;
    }
    out.flush().map_err(io_err)
}

pub fn grid(args: &GridArgs, path: Option<PathBuf>) -> CliResult {
    let grid = build_point_grid(&system(&args.group)?, args.group.kind, &args.ms)?;
    let mut out = output(path)?;
    write_grid_csv(&grid, &mut out)?;
    out.flush().map_err(io_err)
}

pub fn spectrum(args: &GridArgs, path: Option<PathBuf>) -> CliResult {
    let spectrum = build_weight_grid(&system(&args.group)?, args.group.kind, &args.ms)?;
    let mut out = output(path)?;
    write_spectrum_csv(&spectrum, &mut out)?;
    out.flush().map_err(io_err)
}

pub fn eval(
    args: &GroupArgs,
    lambda: &[i64],
    point: &[String],
    label: &[i64],
    reflected: &[usize],
    ms: &[i64],
    closed: bool,
) -> CliResult {
    let system = system(args)?;
    let x = if label.is_empty() {
        parse_point(&system, point)?
    } else {
        let grid = build_point_grid(&system, args.kind, ms)?;
        if let Some(&f) = reflected.iter().find(|&&f| f >= system.factor_count()) {
            return Err(CliError::Usage(format!("--reflected: no factor {f}")));
        }
        let flags: Vec<bool> = (0..system.factor_count())
            .map(|f| reflected.contains(&f))
            .collect();
        grid.iter()
            .find(|p| p.label == label && p.reflected == flags)
            .map(|p| p.point.clone())
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "--label: no grid point {label:?} with reflected factors {reflected:?}"
                ))
            })?
    };
    let value = if closed {
        closed_form(&system, args.kind, lambda, &x.to_f64())?
    } else {
        let group = EvenGroup::new(&system, args.kind);
        EFunctionSpec::new(&group, Weight(lambda.to_vec()))?.xi(&x)?
    };
    println!("{}", format_value(value));
    Ok(())
}

pub fn forward(args: &GridArgs, input: &Path, path: Option<PathBuf>, exec: Execution) -> CliResult {
    let plan =
        TransformPlan::new(&system(&args.group)?, args.group.kind, &args.ms)?.with_execution(exec);
    let text = read_input(input)?;
    let samples = read_samples_csv(plan.points(), text.as_bytes())?;
    let coeffs = plan.forward(&samples)?;
    let mut out = output(path)?;
    writeln!(out, "{}", coefficients_to_json(&coeffs)?).map_err(io_err)?;
    out.flush().map_err(io_err)
}

pub fn inverse(input: &Path, path: Option<PathBuf>, exec: Execution) -> CliResult {
    let coeffs = coefficients_from_json(&read_input(input)?)?;
    let ms = coeffs.moduli().as_given(coeffs.kind());
    let plan = TransformPlan::new(coeffs.system(), coeffs.kind(), &ms)?.with_execution(exec);
    let samples = plan.inverse(&coeffs)?;
    let mut out = output(path)?;
    write_samples_csv(&samples, &mut out)?;
    out.flush().map_err(io_err)
}

pub fn interp(input: &Path, point: &[String]) -> CliResult {
    let coeffs = coefficients_from_json(&read_input(input)?)?;
    let x = parse_point(coeffs.system(), point)?;
    println!("{}", format_value(interpolate(&coeffs, &x)?));
    Ok(())
}

pub fn verify(args: &GridArgs, seed: u64, trials: usize, exec: Execution) -> CliResult {
    let plan =
        TransformPlan::new(&system(&args.group)?, args.group.kind, &args.ms)?.with_execution(exec);
    let residual = plan.orthogonality_residual();
    let mut round_trip = 0.0f64;
    for t in 0..trials as u64 {
        let samples = SampleSet::random(plan.points().clone(), seed.wrapping_add(t));
        let back = plan.inverse(&plan.forward(&samples)?)?;
        for (a, b) in samples.values.iter().zip(&back.values) {
            round_trip = round_trip.max((a - b).norm());
        }
    }
    println!("points {}", plan.points().len());
    println!("weights {}", plan.spectrum().len());
    println!("orthogonality residual {residual:.3e}");
    println!("round-trip error {round_trip:.3e} over {trials} random sample sets");
    if plan.points().len() != plan.spectrum().len() {
        return Err(CliError::Failed(format!(
            "{} points but {} weights",
            plan.points().len(),
            plan.spectrum().len()
        )));
    }
    if residual.is_nan() || residual >= ORTHOGONALITY_TOL {
        return Err(CliError::Failed(format!(
            "orthogonality residual {residual:.3e}"
        )));
    }
    if round_trip.is_nan() || round_trip >= ORTHOGONALITY_TOL {
        return Err(CliError::Failed(format!(
            "round-trip error {round_trip:.3e}"
        )));
    }
    println!("ok");
    Ok(())
}

pub fn tables(only: Option<TableId>, m: i64, json: bool) -> CliResult {
    let ids: Vec<TableId> = only.map_or_else(|| TableId::ALL.to_vec(), |t| vec![t]);
    let reports = ids
        .iter()
        .map(|&t| regenerate_table(t, m))
        .collect::<Result<Vec<_>, _>>()?;
    let errata = if only.is_none() {
        Some(errata_report()?)
    } else {
        None
    };
    let mut out = output(None)?;
    if json {
        let doc = serde_json::json!({ "tables": reports, "errata": errata });
        let text =
            serde_json::to_string_pretty(&doc).map_err(|e| CliError::Usage(e.to_string()))?;
        writeln!(out, "{text}").map_err(io_err)?;
        return out.flush().map_err(io_err);
    }
    for r in &reports {
        writeln!(
            out,
            "{:<12} {}: {} entries, {} match, {} errata, {} skipped",
            r.table.slug(),
            r.title,
            r.rows.len(),
            r.count(RowStatus::Match),
            r.count(RowStatus::Mismatch),
            r.count(RowStatus::Skipped)
        )
        .map_err(io_err)?;
        for row in r.mismatches() {
            let at = row.modulus.map(|m| format!(" (M={m})")).unwrap_or_default();
            let observed: Vec<String> = row.observed.iter().map(|v| v.to_string()).collect();
            writeln!(
                out,
                "    erratum {} {} {}{at}: printed {}, computed {}",
                row.group,
                row.coefficient,
                row.pattern,
                row.printed,
                observed.join(" or ")
            )
            .map_err(io_err)?;
        }
    }
    if let Some(notes) = errata {
        writeln!(out, "\n{} errata:", notes.len()).map_err(io_err)?;
        for n in notes {
            let dev = n
                .max_deviation
                .map(|d| format!(" (max deviation {d:.3e})"))
                .unwrap_or_default();
            writeln!(
                out,
                "  [{:?}] {} {} {}: printed {} | computed {}{dev}",
                n.category, n.group, n.kind, n.location, n.printed, n.computed
            )
            .map_err(io_err)?;
        }
    }
    out.flush().map_err(io_err)
}

pub fn dump_group(args: &GroupArgs, path: Option<PathBuf>) -> CliResult {
    let group = EvenGroup::new(&system(args)?, args.kind);
    let doc = serde_json::json!({
        "group": group.system().selector(),
        "kind": args.kind.tag(),
        "order": group.order(),
        "elements": group.elements(),
    });
    let text = serde_json::to_string_pretty(&doc).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut out = output(path)?;
    writeln!(out, "{text}").map_err(io_err)?;
    out.flush().map_err(io_err)
}
