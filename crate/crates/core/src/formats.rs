//! File formats: grid and spectrum CSV, sample CSV, coefficient JSON.
//!
//! Floats are written with 17 significant digits so files round-trip
//! bit-exactly. Rows always follow the canonical grid order; two rows may
//! share a label (a closed point and a reflected point), so readers match
//! rows by position and check the labels.

use std::io::{Read, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::error::{Error, Result};
use crate::grids::{build_weight_grid, label_names, PointGrid, WeightGrid};
use crate::lie_data::SemisimpleSystem;
use crate::transform::{CoefficientSet, SampleSet};
use crate::weyl::EvenGroupKind;
use crate::Rational;

/// `x` with 17 significant digits.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(field: &str, s: &str) -> Result<Rational> {
    let r: Rational = s
        .trim()
        .parse()
        .map_err(|e| Error::parse(field, format!("{s:?} is not a rational p/q: {e}")))?;
    Ok(r)
}

fn parse_f64(field: &str, s: &str) -> Result<f64> {
    s.trim()
        .parse()
        .map_err(|_| Error::parse(field, format!("{s:?} is not a number")))
}

fn parse_i64(field: &str, s: &str) -> Result<i64> {
    s.trim()
        .parse()
        .map_err(|_| Error::parse(field, format!("{s:?} is not an integer")))
}

fn csv_error(e: csv::Error) -> Error {
    Error::parse("csv", e.to_string())
}

fn io_error(e: std::io::Error) -> Error {
    Error::parse("io", e.to_string())
}

/// One row per point: label columns, `x1..xn` as `num/den`, `epsilon`.
pub fn write_grid_csv<W: Write>(grid: &PointGrid, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = label_names(&grid.system, 's');
    header.extend((1..=grid.system.rank()).map(|i| format!("x{i}")));
    header.push("epsilon".into());
    w.write_record(&header).map_err(csv_error)?;
    for p in grid.iter() {
        let mut row: Vec<String> = p.label.iter().map(i64::to_string).collect();
        row.extend(
            p.point
                .coords()
                .iter()
                .map(|q| format!("{}/{}", q.numer(), q.denom())),
        );
        row.push(p.epsilon.to_string());
        w.write_record(&row).map_err(csv_error)?;
    }
    w.flush().map_err(io_error)
}

/// One row per weight: label columns, `a1..an`, `h`.
pub fn write_spectrum_csv<W: Write>(spectrum: &WeightGrid, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = label_names(&spectrum.system, 't');
    header.extend((1..=spectrum.system.rank()).map(|i| format!("a{i}")));
    header.push("h".into());
    w.write_record(&header).map_err(csv_error)?;
    for p in spectrum.iter() {
        let mut row: Vec<String> = p.label.iter().map(i64::to_string).collect();
        row.extend(p.weight.0.iter().map(i64::to_string));
        row.push(p.h.to_string());
        w.write_record(&row).map_err(csv_error)?;
    }
    w.flush().map_err(io_error)
}

/// Header `s0,s1,…,re,im`, one row per grid point.
pub fn write_samples_csv<W: Write>(samples: &SampleSet, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = label_names(&samples.grid.system, 's');
    header.push("re".into());
    header.push("im".into());
    w.write_record(&header).map_err(csv_error)?;
    for (p, v) in samples.grid.iter().zip(&samples.values) {
        let mut row: Vec<String> = p.label.iter().map(i64::to_string).collect();
        row.push(format_f64(v.re));
        row.push(format_f64(v.im));
        w.write_record(&row).map_err(csv_error)?;
    }
    w.flush().map_err(io_error)
}

/// Reads sample values for `grid`. Rows must follow the grid order.
pub fn read_samples_csv<R: Read>(grid: &PointGrid, input: R) -> Result<SampleSet> {
    let mut r = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(input);
    let names = label_names(&grid.system, 's');
    let header: Vec<String> = r
        .headers()
        .map_err(csv_error)?
        .iter()
        .map(str::to_string)
        .collect();
    let mut expected = names.clone();
    expected.push("re".into());
    expected.push("im".into());
    if header != expected {
        return Err(Error::parse(
            "header",
            format!("expected {}, got {}", expected.join(","), header.join(",")),
        ));
    }
    let mut values = Vec::with_capacity(grid.len());
    for (i, rec) in r.records().enumerate() {
        let rec = rec.map_err(csv_error)?;
        let point = grid.get(i).ok_or_else(|| {
            Error::parse("rows", format!("more than the {} grid points", grid.len()))
        })?;
        for (j, name) in names.iter().enumerate() {
            let v = parse_i64(name, &rec[j])?;
            if v != point.label[j] {
                return Err(Error::parse(
                    name.as_str(),
                    format!("row {} has {name}={v}, grid has {}", i + 1, point.label[j]),
                ));
            }
        }
        let re = parse_f64("re", &rec[names.len()])?;
        let im = parse_f64("im", &rec[names.len() + 1])?;
        values.push(Complex64::new(re, im));
    }
    if values.len() != grid.len() {
        return Err(Error::parse(
            "rows",
            format!("{} rows for a grid of {} points", values.len(), grid.len()),
        ));
    }
    SampleSet::new(grid.clone(), values)
}

#[derive(Serialize)]
struct EntryOut {
    t: Vec<i64>,
    re: Box<RawValue>,
    im: Box<RawValue>,
}

#[derive(Serialize)]
struct CoefficientsOut<'a> {
    group: String,
    kind: &'a str,
    #[serde(rename = "M")]
    m: Vec<i64>,
    entries: Vec<EntryOut>,
}

#[derive(Deserialize)]
struct EntryIn {
    t: Vec<i64>,
    re: f64,
    im: f64,
}

#[derive(Deserialize)]
struct CoefficientsIn {
    group: String,
    kind: String,
    #[serde(rename = "M")]
    m: Vec<i64>,
    entries: Vec<EntryIn>,
}

fn raw(x: f64) -> Box<RawValue> {
    RawValue::from_string(format_f64(x)).expect("formatted floats are valid JSON numbers")
}

/// Coefficient JSON with `group`, `kind`, `M` and one entry per weight.
pub fn coefficients_to_json(coeffs: &CoefficientSet) -> Result<String> {
    let out = CoefficientsOut {
        group: coeffs.system().selector(),
        kind: coeffs.kind().tag(),
        m: coeffs.moduli().as_given(coeffs.kind()),
        entries: coeffs
            .spectrum
            .iter()
            .zip(&coeffs.values)
            .map(|(sp, v)| EntryOut {
                t: sp.label.clone(),
                re: raw(v.re),
                im: raw(v.im),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&out).map_err(|e| Error::parse("json", e.to_string()))
}

/// Parses coefficient JSON and rebuilds its spectrum.
pub fn coefficients_from_json(text: &str) -> Result<CoefficientSet> {
    let parsed: CoefficientsIn =
        serde_json::from_str(text).map_err(|e| Error::parse("json", e.to_string()))?;
    let system = SemisimpleSystem::from_selector(&parsed.group)
        .map_err(|e| Error::parse("group", e.to_string()))?;
    let kind: EvenGroupKind = parsed
        .kind
        .parse()
        .map_err(|e: Error| Error::parse("kind", e.to_string()))?;
    let spectrum = build_weight_grid(&system, kind, &parsed.m)
        .map_err(|e| Error::parse("M", e.to_string()))?;
    if parsed.entries.len() != spectrum.len() {
        return Err(Error::parse(
            "entries",
            format!(
                "{} entries for a spectrum of {} weights",
                parsed.entries.len(),
                spectrum.len()
            ),
        ));
    }
    let mut values = Vec::with_capacity(spectrum.len());
    for (i, (e, sp)) in parsed.entries.iter().zip(spectrum.iter()).enumerate() {
        if e.t != sp.label {
            return Err(Error::parse(
                "t",
                format!(
                    "entry {} has label {:?}, expected {:?}",
                    i + 1,
                    e.t,
                    sp.label
                ),
            ));
        }
        values.push(Complex64::new(e.re, e.im));
    }
    CoefficientSet::new(spectrum, values)
}
