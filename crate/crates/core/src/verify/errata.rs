//! Disagreements between the printed reference material and the values
//! computed from the group action.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    regenerate_table, volume, RowStatus, TableId, PRINTED_ORBITS, PRINTED_ORDERS, PRINTED_VOLUMES,
};
use crate::efunc::{closed_form, EFunctionSpec, CLOSED_FORMS};
use crate::error::{Error, Result};
use crate::grids::enumerate_dominant;
use crate::lie_data::{SemisimpleSystem, Weight};
use crate::transform::FORMULA_TOL;
use crate::weyl::{EvenGroup, EvenGroupKind};

/// Random `(λ, x)` pairs per closed form.
pub const CLOSED_FORM_SAMPLES: usize = 50;

/// Seed of the closed-form sweep in the errata report.
pub const ERRATA_SEED: u64 = 0x5eed;

/// Modulus the discrete tables are regenerated at.
pub const ERRATA_MODULUS: i64 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErratumCategory {
    ClosedForm,
    Orbit,
    Table,
    Volume,
    GroupOrder,
}

/// One printed item that disagrees with the computation.
#[derive(Clone, Debug, Serialize)]
pub struct ErratumNote {
    pub category: ErratumCategory,
    pub group: String,
    pub kind: String,
    /// Which item, e.g. a table slug and row pattern.
    pub location: String,
    pub printed: String,
    /// What the group action gives.
    pub computed: String,
    pub max_deviation: Option<f64>,
}

/// Printed closed form against the group sum.
#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormCheck {
    pub group: &'static str,
    pub kind: &'static str,
    pub printed: &'static str,
    pub samples: usize,
    pub max_deviation: f64,
}

impl ClosedFormCheck {
    pub fn agrees(&self) -> bool {
        self.max_deviation < FORMULA_TOL
    }
}

/// Evaluates every printed closed form against `Ξ` at seeded random pairs:
/// `λ` among the dominant weights with entries up to 3, `x ∈ [-1,1)^n`.
pub fn closed_form_sweep(samples: usize, seed: u64) -> Result<Vec<ClosedFormCheck>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    CLOSED_FORMS
        .iter()
        .map(|form| {
            let system = SemisimpleSystem::from_selector(form.group)?;
            let kind: EvenGroupKind = form.kind.parse()?;
            let group = EvenGroup::new(&system, kind);
            let weights = enumerate_dominant(&system, kind, 3);
            let mut max_deviation = 0.0f64;
            for _ in 0..samples {
                let lambda = weights[rng.random_range(0..weights.len())].clone();
                let x: Vec<f64> = (0..system.rank())
                    .map(|_| rng.random_range(-1.0..1.0))
                    .collect();
                let printed = closed_form(&system, kind, lambda.coords(), &x)?;
                let exact = EFunctionSpec::new(&group, lambda)?.xi_real(&x);
                max_deviation = max_deviation.max((printed - exact).norm());
            }
            Ok(ClosedFormCheck {
                group: form.group,
                kind: form.kind,
                printed: form.printed,
                samples,
                max_deviation,
            })
        })
        .collect()
}

/// Printed generic orbit against the group orbit.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitCheck {
    pub group: String,
    pub kind: &'static str,
    /// Printed tuples that are not orbit elements.
    pub spurious: Vec<String>,
    /// Orbit elements no printed tuple produces.
    pub missing: Vec<String>,
}

impl OrbitCheck {
    pub fn agrees(&self) -> bool {
        self.spurious.is_empty() && self.missing.is_empty()
    }
}

const SYMBOLS: [char; 3] = ['a', 'b', 'c'];

/// Generic values substituted for the symbols.
const GENERIC: [i64; 3] = [5, 7, 11];

/// Reads `±`/`∓` together: upper signs first, then lower signs.
fn expand_signs(tuple: &str) -> Vec<String> {
    if tuple.contains(['±', '∓']) {
        vec![
            tuple.replace('±', "+").replace('∓', "-"),
            tuple.replace('±', "-").replace('∓', "+"),
        ]
    } else {
        vec![tuple.to_string()]
    }
}

/// Parser for sums of integer multiples of `a`, `b`, `c`, with parentheses.
struct Linear<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    vars: usize,
}

impl Linear<'_> {
    fn err(msg: &str) -> Error {
        Error::parse("orbit", msg.to_string())
    }

    fn expr(&mut self) -> Result<Vec<i64>> {
        let mut total = vec![0; self.vars];
        let mut first = true;
        loop {
            let mut sign = 1;
            while let Some(&c) = self.chars.peek() {
                match c {
                    '+' => sign *= 1,
                    '-' => sign = -sign,
                    _ => break,
                }
                self.chars.next();
            }
            match self.chars.peek() {
                None | Some(')') if !first => break,
                _ => {}
            }
            let term = self.term()?;
            for (t, v) in total.iter_mut().zip(term) {
                *t += sign * v;
            }
            first = false;
            if !matches!(self.chars.peek(), Some('+' | '-')) {
                break;
            }
        }
        Ok(total)
    }

    fn term(&mut self) -> Result<Vec<i64>> {
        let mut digits = String::new();
        while let Some(&c) = self.chars.peek().filter(|c| c.is_ascii_digit()) {
            digits.push(c);
            self.chars.next();
        }
        let scale: i64 = if digits.is_empty() {
            1
        } else {
            digits.parse().map_err(|_| Self::err("bad integer"))?
        };
        let mut v = match self.chars.next() {
            Some('(') => {
                let inner = self.expr()?;
                if self.chars.next() != Some(')') {
                    return Err(Self::err("unbalanced parentheses"));
                }
                inner
            }
            Some(c) => {
                let i = SYMBOLS[..self.vars]
                    .iter()
                    .position(|&s| s == c)
                    .ok_or_else(|| Self::err("unknown symbol"))?;
                let mut v = vec![0; self.vars];
                v[i] = 1;
                v
            }
            None if !digits.is_empty() => return Err(Self::err("constant terms are not linear")),
            None => return Err(Self::err("empty term")),
        };
        v.iter_mut().for_each(|x| *x *= scale);
        Ok(v)
    }
}

/// Parses `(a,-b-c,b)` into one coefficient row per component.
fn parse_tuple(tuple: &str, vars: usize) -> Result<Vec<Vec<i64>>> {
    let inner = tuple
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Linear::err("tuple must be parenthesized"))?;
    let mut parts = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&inner[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&inner[start..]);
    parts
        .into_iter()
        .map(|p| {
            let mut parser = Linear {
                chars: p.trim().chars().peekable(),
                vars,
            };
            let v = parser.expr()?;
            if parser.chars.next().is_some() {
                return Err(Linear::err("trailing input"));
            }
            Ok(v)
        })
        .collect()
}

/// Formats coefficient rows as a tuple, e.g. `(-a,2b+c,-3b-2c)`.
pub(crate) fn format_tuple(rows: &[Vec<i64>]) -> String {
    let comps: Vec<String> = rows
        .iter()
        .map(|row| {
            let mut s = String::new();
            for (i, &k) in row.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if k < 0 {
                    s.push('-');
                } else if !s.is_empty() {
                    s.push('+');
                }
                if k.abs() != 1 {
                    s.push_str(&k.abs().to_string());
                }
                s.push(SYMBOLS[i]);
            }
            if s.is_empty() {
                s.push('0');
            }
            s
        })
        .collect();
    format!("({})", comps.join(","))
}

fn evaluate(rows: &[Vec<i64>]) -> Weight {
    Weight(
        rows.iter()
            .map(|r| r.iter().zip(GENERIC).map(|(k, g)| k * g).sum())
            .collect(),
    )
}

/// Compares a printed generic orbit with the orbit of `(a,b,c)` under the group.
pub fn orbit_check(group: &EvenGroup, tuples: &[&str]) -> Result<OrbitCheck> {
    let system = group.system();
    let n = system.rank();
    let generic = Weight(GENERIC[..n].to_vec());
    let symbolic: Vec<(Weight, String)> = group
        .elements()
        .iter()
        .map(|w| {
            let m = &w.weight_matrix;
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| m.get(i, j)).collect())
                .collect();
            (w.act_weight(&generic), format_tuple(&rows))
        })
        .collect();
    let orbit: BTreeSet<Weight> = symbolic.iter().map(|(w, _)| w.clone()).collect();

    let mut printed = BTreeSet::new();
    let mut spurious = Vec::new();
    for tuple in tuples {
        for variant in expand_signs(tuple) {
            let rows = parse_tuple(&variant, n)?;
            if rows.len() != n {
                return Err(Linear::err("tuple length differs from the rank"));
            }
            let w = evaluate(&rows);
            if !orbit.contains(&w) {
                spurious.push(format_tuple(&rows));
            }
            printed.insert(w);
        }
    }
    let mut missing: Vec<String> = symbolic
        .into_iter()
        .filter(|(w, _)| !printed.contains(w))
        .map(|(_, s)| s)
        .collect();
    missing.sort();
    missing.dedup();
    Ok(OrbitCheck {
        group: system.selector(),
        kind: group.kind().tag(),
        spurious,
        missing,
    })
}

fn fmt_values(values: &[usize]) -> String {
    let v: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    v.join(" or ")
}

/// Every disagreement between the printed material and the computation:
/// closed forms, generic orbits, table entries, volumes and group orders.
pub fn errata_report() -> Result<Vec<ErratumNote>> {
    let mut notes = Vec::new();

    for check in closed_form_sweep(CLOSED_FORM_SAMPLES, ERRATA_SEED)? {
        if !check.agrees() {
            notes.push(ErratumNote {
                category: ErratumCategory::ClosedForm,
                group: check.group.into(),
                kind: check.kind.into(),
                location: "closed form".into(),
                printed: check.printed.into(),
                computed: "orbit sum of exponentials".into(),
                max_deviation: Some(check.max_deviation),
            });
        }
    }

    for printed in &PRINTED_ORBITS {
        let system = SemisimpleSystem::from_selector(printed.group)?;
        let group = EvenGroup::new(&system, printed.kind.parse()?);
        let check = orbit_check(&group, printed.tuples)?;
        if !check.agrees() {
            notes.push(ErratumNote {
                category: ErratumCategory::Orbit,
                group: printed.group.into(),
                kind: printed.kind.into(),
                location: "generic orbit".into(),
                printed: check.spurious.join(" "),
                computed: check.missing.join(" "),
                max_deviation: None,
            });
        }
    }

    for table in TableId::ALL {
        let report = regenerate_table(table, ERRATA_MODULUS)?;
        for row in report
            .rows
            .iter()
            .filter(|r| r.status == RowStatus::Mismatch)
        {
            let at = row
                .modulus
                .map(|m| format!(" at M={m}"))
                .unwrap_or_default();
            notes.push(ErratumNote {
                category: ErratumCategory::Table,
                group: row.group.clone(),
                kind: row.kind.into(),
                location: format!("{} {} {}{at}", table.slug(), row.coefficient, row.pattern),
                printed: row.printed.to_string(),
                computed: fmt_values(&row.observed),
                max_deviation: None,
            });
        }
    }

    for printed in &PRINTED_VOLUMES {
        let system = SemisimpleSystem::from_selector(printed.group)?;
        let v = volume(&system, printed.kind.parse()?);
        if (v - printed.value).abs() > 1e-12 * printed.value {
            notes.push(ErratumNote {
                category: ErratumCategory::Volume,
                group: printed.group.into(),
                kind: printed.kind.into(),
                location: "fundamental region volume".into(),
                printed: printed.printed.into(),
                computed: format!("{v}"),
                max_deviation: Some((v - printed.value).abs()),
            });
        }
    }

    for (selector, ee, e) in PRINTED_ORDERS {
        let system = SemisimpleSystem::from_selector(selector)?;
        for (kind, order) in [
            (EvenGroupKind::ProductEven, ee),
            (EvenGroupKind::FullEven, e),
        ] {
            let actual = EvenGroup::new(&system, kind).order();
            if actual != order {
                notes.push(ErratumNote {
                    category: ErratumCategory::GroupOrder,
                    group: selector.into(),
                    kind: kind.tag().into(),
                    location: "group order".into(),
                    printed: order.to_string(),
                    computed: actual.to_string(),
                    max_deviation: None,
                });
            }
        }
    }
    Ok(notes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_parsing() {
        assert_eq!(
            parse_tuple("(a,-b-c,b)", 3).unwrap(),
            vec![vec![1, 0, 0], vec![0, -1, -1], vec![0, 1, 0]]
        );
        let v = expand_signs("(a,±(2c+b),∓(b+c))");
        assert_eq!(v, vec!["(a,+(2c+b),-(b+c))", "(a,-(2c+b),+(b+c))"]);
        assert_eq!(
            parse_tuple(&v[1], 3).unwrap(),
            vec![vec![1, 0, 0], vec![0, -1, -2], vec![0, 1, 1]]
        );
        assert!(parse_tuple("(a,3,b)", 3).is_err());
        assert!(parse_tuple("a,b", 2).is_err());
        assert_eq!(
            format_tuple(&[vec![-1, 0, 0], vec![0, 2, 1], vec![0, -3, -2]]),
            "(-a,2b+c,-3b-2c)"
        );
    }

    #[test]
    fn orbit_typo_is_found() {
        let s = SemisimpleSystem::from_selector("a1xg2").unwrap();
        let group = EvenGroup::new(&s, EvenGroupKind::FullEven);
        let printed = PRINTED_ORBITS
            .iter()
            .find(|o| o.group == "a1xg2" && o.kind == "e")
            .unwrap();
        let check = orbit_check(&group, printed.tuples).unwrap();
        assert_eq!(check.spurious, vec!["(-a,2b+c,-3a-2b)", "(-a,-2b-c,3a+2b)"]);
        assert_eq!(check.missing, vec!["(-a,-2b-c,3b+2c)", "(-a,2b+c,-3b-2c)"]);
    }

    #[test]
    fn all_other_orbits_agree() {
        for printed in PRINTED_ORBITS
            .iter()
            .filter(|o| !(o.group == "a1xg2" && o.kind == "e"))
        {
            let s = SemisimpleSystem::from_selector(printed.group).unwrap();
            let group = EvenGroup::new(&s, printed.kind.parse().unwrap());
            assert!(
                orbit_check(&group, printed.tuples).unwrap().agrees(),
                "{} {}",
                printed.group,
                printed.kind
            );
        }
    }

    #[test]
    fn closed_forms_agree_except_known_errata() {
        for check in closed_form_sweep(20, 3).unwrap() {
            let known = check.group == "a1xg2";
            assert_eq!(
                check.agrees(),
                !known,
                "{} {}: {}",
                check.group,
                check.kind,
                check.max_deviation
            );
        }
    }
}
