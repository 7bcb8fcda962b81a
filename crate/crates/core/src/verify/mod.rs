//! Regenerates the printed coefficient tables, volumes and group orders from
//! the group action and compares them entry by entry.
//!
//! A discrete table row is a zero pattern of a Kac label, e.g.
//! `[s0,0,s0',s2,s3]`. Every closed-branch grid point (or weight) with that
//! pattern is instantiated and its `ε` (or `h`) recorded; the row matches when
//! all of them agree with the printed value. Some patterns need a modulus
//! divisible by a mark, so a row unrealizable at the requested `M` is retried
//! at the next moduli and the modulus actually used is reported.

mod errata;
mod reference;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grids::{build_point_grid_with, build_weight_grid_with, PointGrid, WeightGrid};
use crate::lie_data::{coroot_gram, SemisimpleSystem, Weight};
use crate::weyl::{EvenGroup, EvenGroupKind, Moduli};

pub use errata::{
    closed_form_sweep, errata_report, orbit_check, ClosedFormCheck, ErratumCategory, ErratumNote,
    OrbitCheck,
};
pub use reference::{PrintedOrbit, PrintedVolume, PRINTED_ORBITS, PRINTED_ORDERS, PRINTED_VOLUMES};

use reference::Row;

/// How many moduli past the requested one an unrealizable row may try.
const MAX_ESCALATION: i64 = 12;

/// The six printed coefficient tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableId {
    /// `d`, `ε` and `h` of A1×A1.
    A1xA1,
    /// `d^ee` of the four rank-3 groups.
    ContinuousProductEven,
    /// `d^e` of the four rank-3 groups.
    ContinuousFullEven,
    /// `ε^ee` and `h^ee` of A1×A2, A1×C2, A1×G2.
    DiscreteProductEven,
    /// `ε^e` and `h^e` of A1×A2, A1×C2, A1×G2.
    DiscreteFullEven,
    /// `ε^e` and `h^e` of A1×A1×A1.
    A1xA1xA1,
}

impl TableId {
    pub const ALL: [TableId; 6] = [
        TableId::A1xA1,
        TableId::ContinuousProductEven,
        TableId::ContinuousFullEven,
        TableId::DiscreteProductEven,
        TableId::DiscreteFullEven,
        TableId::A1xA1xA1,
    ];

    pub fn slug(self) -> &'static str {
        match self {
            TableId::A1xA1 => "a1xa1",
            TableId::ContinuousProductEven => "d-ee",
            TableId::ContinuousFullEven => "d-e",
            TableId::DiscreteProductEven => "discrete-ee",
            TableId::DiscreteFullEven => "discrete-e",
            TableId::A1xA1xA1 => "a1xa1xa1",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            TableId::A1xA1 => "d^e, ε^e and h^e of A1×A1",
            TableId::ContinuousProductEven => "d^ee of the rank-3 groups",
            TableId::ContinuousFullEven => "d^e of the rank-3 groups",
            TableId::DiscreteProductEven => "ε^ee and h^ee of the rank-3 groups",
            TableId::DiscreteFullEven => "ε^e and h^e of the rank-3 groups",
            TableId::A1xA1xA1 => "ε^e and h^e of A1×A1×A1",
        }
    }

    fn sections(self) -> Vec<Section> {
        use Coefficient::*;
        use EvenGroupKind::*;
        let one = &["a1xa1"][..];
        let cubed = &["a1xa1xa1"][..];
        let rank3 = &reference::RANK3_GROUPS[..];
        let cont = &reference::CONTINUOUS_GROUPS[..];
        let s = |coefficient, kind, groups, rows| Section {
            coefficient,
            kind,
            groups,
            rows,
        };
        match self {
            TableId::A1xA1 => vec![
                s(D, FullEven, one, &reference::A1XA1_D[..]),
                s(Epsilon, FullEven, one, &reference::A1XA1_EPSILON[..]),
                s(H, FullEven, one, &reference::A1XA1_H[..]),
            ],
            TableId::ContinuousProductEven => {
                vec![s(D, ProductEven, cont, &reference::D_PRODUCT_EVEN[..])]
            }
            TableId::ContinuousFullEven => vec![s(D, FullEven, cont, &reference::D_FULL_EVEN[..])],
            TableId::DiscreteProductEven => vec![
                s(
                    Epsilon,
                    ProductEven,
                    rank3,
                    &reference::EPSILON_PRODUCT_EVEN[..],
                ),
                s(H, ProductEven, rank3, &reference::H_PRODUCT_EVEN[..]),
            ],
            TableId::DiscreteFullEven => vec![
                s(Epsilon, FullEven, rank3, &reference::EPSILON_FULL_EVEN[..]),
                s(H, FullEven, rank3, &reference::H_FULL_EVEN[..]),
            ],
            TableId::A1xA1xA1 => vec![
                s(Epsilon, FullEven, cubed, &reference::A1CUBED_EPSILON[..]),
                s(H, FullEven, cubed, &reference::A1CUBED_H[..]),
            ],
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableId::ALL
            .into_iter()
            .find(|t| t.slug() == s)
            .ok_or_else(|| {
                let known: Vec<_> = TableId::ALL.iter().map(|t| t.slug()).collect();
                Error::usage(format!(
                    "unknown table {s:?}; expected one of {}",
                    known.join(", ")
                ))
            })
    }
}

/// Which coefficient a table column holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Coefficient {
    /// Stabilizer order of a weight.
    D,
    /// Orbit size of a torus point.
    Epsilon,
    /// Stabilizer order of a weight modulo `MQ`.
    H,
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coefficient::D => "d",
            Coefficient::Epsilon => "epsilon",
            Coefficient::H => "h",
        })
    }
}

struct Section {
    coefficient: Coefficient,
    kind: EvenGroupKind,
    groups: &'static [&'static str],
    rows: &'static [Row],
}

/// Outcome of one table entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Match,
    Mismatch,
    Skipped,
}

/// One table entry: a pattern in one group's column.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub coefficient: Coefficient,
    pub kind: &'static str,
    pub pattern: String,
    pub group: String,
    /// The value every instantiation agreed on, if they did.
    pub computed: Option<usize>,
    /// Distinct values over all instantiations.
    pub observed: Vec<usize>,
    pub printed: usize,
    pub status: RowStatus,
    /// Grid modulus used for discrete rows.
    pub modulus: Option<i64>,
    pub instances: usize,
}

/// A regenerated table.
#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub table: TableId,
    pub title: &'static str,
    pub requested_modulus: i64,
    pub rows: Vec<TableRow>,
}

impl TableReport {
    pub fn count(&self, status: RowStatus) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &TableRow> {
        self.rows.iter().filter(|r| r.status == RowStatus::Mismatch)
    }
}

/// Zero pattern of a printed label such as `[s0,0,s0',s2,s3]` or `(a,0,c)`:
/// `true` where the slot is nonzero.
fn parse_pattern(pattern: &str) -> Vec<bool> {
    pattern
        .trim_matches(|c| matches!(c, '[' | ']' | '(' | ')'))
        .split(',')
        .map(|slot| slot.trim() != "0")
        .collect()
}

fn label_pattern(label: &[i64]) -> Vec<bool> {
    label.iter().map(|&v| v != 0).collect()
}

/// Grids and groups shared across the rows of one report.
#[derive(Default)]
struct Cache {
    groups: HashMap<(String, EvenGroupKind), EvenGroup>,
    grids: HashMap<(String, EvenGroupKind, i64), (PointGrid, WeightGrid)>,
}

impl Cache {
    fn group(&mut self, selector: &str, kind: EvenGroupKind) -> Result<&EvenGroup> {
        let key = (selector.to_string(), kind);
        if !self.groups.contains_key(&key) {
            let system = SemisimpleSystem::from_selector(selector)?;
            self.groups
                .insert(key.clone(), EvenGroup::new(&system, kind));
        }
        Ok(&self.groups[&key])
    }

    fn grids(
        &mut self,
        selector: &str,
        kind: EvenGroupKind,
        m: i64,
    ) -> Result<&(PointGrid, WeightGrid)> {
        let key = (selector.to_string(), kind, m);
        if !self.grids.contains_key(&key) {
            let group = self.group(selector, kind)?.clone();
            let ms = match kind {
                EvenGroupKind::FullEven => vec![m],
                EvenGroupKind::ProductEven => vec![m; group.system().factor_count()],
            };
            let moduli = Moduli::new(group.system(), kind, &ms)?;
            let grids = (
                build_point_grid_with(&group, &moduli),
                build_weight_grid_with(&group, &moduli),
            );
            self.grids.insert(key.clone(), grids);
        }
        Ok(&self.grids[&key])
    }
}

/// Values of `ε` (or `h`) over closed-branch grid members with the pattern.
fn discrete_values(
    cache: &mut Cache,
    selector: &str,
    kind: EvenGroupKind,
    coefficient: Coefficient,
    pattern: &[bool],
    m: i64,
) -> Result<Vec<usize>> {
    let (points, weights) = cache.grids(selector, kind, m)?;
    let values = match coefficient {
        Coefficient::Epsilon => points
            .iter()
            .filter(|p| !p.reflected.iter().any(|&r| r) && label_pattern(&p.label) == pattern)
            .map(|p| p.epsilon)
            .collect(),
        Coefficient::H => weights
            .iter()
            .filter(|p| !p.reflected.iter().any(|&r| r) && label_pattern(&p.label) == pattern)
            .map(|p| p.h)
            .collect(),
        Coefficient::D => unreachable!("d rows are continuous"),
    };
    Ok(values)
}

/// Recomputes every entry of a table. `m` is the modulus for discrete rows
/// and must be at least 1.
pub fn regenerate_table(table: TableId, m: i64) -> Result<TableReport> {
    if m < 1 {
        return Err(Error::usage(format!("M must be at least 1, got {m}")));
    }
    let mut cache = Cache::default();
    let mut rows = Vec::new();
    for section in table.sections() {
        for row in section.rows {
            let pattern = parse_pattern(row.pattern);
            for (col, &selector) in section.groups.iter().enumerate() {
                let printed = row.values[col];
                let (observed, modulus, instances) = match section.coefficient {
                    Coefficient::D => {
                        // generic symbols a, b, c = 1, 2, 3
                        let lambda = Weight(
                            pattern
                                .iter()
                                .enumerate()
                                .map(|(i, &nz)| if nz { i as i64 + 1 } else { 0 })
                                .collect(),
                        );
                        let group = cache.group(selector, section.kind)?;
                        (vec![group.stab_order(&lambda)], None, 1)
                    }
                    coefficient => {
                        let mut found = (Vec::new(), None, 0);
                        for mm in m..=m + MAX_ESCALATION {
                            let values = discrete_values(
                                &mut cache,
                                selector,
                                section.kind,
                                coefficient,
                                &pattern,
                                mm,
                            )?;
                            if !values.is_empty() {
                                let count = values.len();
                                let distinct: BTreeSet<usize> = values.into_iter().collect();
                                found = (distinct.into_iter().collect(), Some(mm), count);
                                break;
                            }
                        }
                        found
                    }
                };
                let status = if observed.is_empty() {
                    RowStatus::Skipped
                } else if observed == [printed] {
                    RowStatus::Match
                } else {
                    RowStatus::Mismatch
                };
                rows.push(TableRow {
                    coefficient: section.coefficient,
                    kind: section.kind.tag(),
                    pattern: row.pattern.to_string(),
                    group: selector.to_string(),
                    computed: (observed.len() == 1).then(|| observed[0]),
                    observed,
                    printed,
                    status,
                    modulus,
                    instances,
                });
            }
        }
    }
    Ok(TableReport {
        table,
        title: table.title(),
        requested_modulus: m,
        rows,
    })
}

/// `|F^e|` or `|F^ee|`: the covolume of the coroot lattice over `|W|`,
/// times 2 (full even group) or `2^k` (product of `k` even groups).
pub fn volume(system: &SemisimpleSystem, kind: EvenGroupKind) -> f64 {
    let det = coroot_gram(system).determinant();
    let covolume = (*det.numer() as f64 / *det.denom() as f64).sqrt();
    let copies = match kind {
        EvenGroupKind::FullEven => 2.0,
        EvenGroupKind::ProductEven => (1u64 << system.factor_count()) as f64,
    };
    copies * covolume / system.weyl_order() as f64
}
