//! Values of one E-function on a lattice covering the fundamental domain.

use std::io::Write;
use std::path::PathBuf;

use evenorbit::efunc::EFunctionSpec;
use evenorbit::formats::{format_f64, parse_rational};
use evenorbit::grids::{build_point_grid, in_fundamental_domain};
use evenorbit::lie_data::{cartesian_embedding, Weight};
use evenorbit::weyl::{EvenGroup, EvenGroupKind};
use evenorbit::Rational;

use crate::commands::{output, system, CliResult};
use crate::{CliError, GroupArgs};

/// Parses `i=p/q` into a 0-based coordinate index and its value.
fn parse_pin(pin: &str, rank: usize) -> Result<(usize, Rational), CliError> {
    let (i, v) = pin
        .split_once('=')
        .ok_or_else(|| CliError::Usage(format!("--pin: expected i=p/q, got {pin:?}")))?;
    let i: usize = i
        .trim()
        .parse()
        .ok()
        .filter(|i| (1..=rank).contains(i))
        .ok_or_else(|| {
            CliError::Usage(format!(
                "--pin: coordinate index must be 1..={rank}, got {i:?}"
            ))
        })?;
    Ok((i - 1, parse_rational("pin", v.trim())?))
}

/// Rows `x1..xn` (ω∨ coordinates), `u1..un` (Cartesian), `re`, `im` for the
/// grid points of the domain at modulus `samples`, optionally restricted to a
/// slice `x_i = p/q`.
pub fn contour(
    args: &GroupArgs,
    lambda: &[i64],
    samples: i64,
    pin: Option<&str>,
    path: Option<PathBuf>,
) -> CliResult {
    let system = system(args)?;
    let n = system.rank();
    let pin = pin.map(|p| parse_pin(p, n)).transpose()?;
    if n > 2 && pin.is_none() {
        return Err(CliError::Usage(format!(
            "--pin: {} has rank {n}; fix one coordinate to get a planar slice",
            system.selector()
        )));
    }
    let ms = match args.kind {
        EvenGroupKind::FullEven => vec![samples],
        EvenGroupKind::ProductEven => vec![samples; system.factor_count()],
    };
    let grid = build_point_grid(&system, args.kind, &ms)?;
    let group = EvenGroup::new(&system, args.kind);
    let spec = EFunctionSpec::new(&group, Weight(lambda.to_vec()))?;
    let embed = cartesian_embedding(&system);

    let mut rows = Vec::new();
    for p in grid.iter() {
        if let Some((i, v)) = pin {
            if p.point.coords()[i] != v {
                continue;
            }
        }
        let x = p.point.to_f64();
        if !in_fundamental_domain(&system, args.kind, &x, 1e-12) {
            return Err(CliError::Failed(format!(
                "sample {x:?} outside the fundamental domain"
            )));
        }
        let u: Vec<f64> = embed
            .iter()
            .map(|r| r.iter().zip(&x).map(|(a, b)| a * b).sum())
            .collect();
        rows.push((x, u, spec.xi(&p.point)?));
    }
    if rows.is_empty() {
        return Err(CliError::Usage(
            "--pin: no sample on this slice; use a value in the domain with denominator dividing --samples".into(),
        ));
    }

    let mut out = output(path)?;
    let io = |e: std::io::Error| CliError::Usage(format!("write failed: {e}"));
    let header: Vec<String> = (1..=n)
        .map(|i| format!("x{i}"))
        .chain((1..=n).map(|i| format!("u{i}")))
        .chain(["re".to_string(), "im".to_string()])
        .collect();
    writeln!(out, "{}", header.join(",")).map_err(io)?;
    for (x, u, v) in rows {
        let fields: Vec<String> = x
            .iter()
            .chain(&u)
            .chain([&v.re, &v.im])
            .map(|&f| format_f64(f))
            .collect();
        writeln!(out, "{}", fields.join(",")).map_err(io)?;
    }
    out.flush().map_err(io)
}
