//! Discrete point grids `F^e_M`, `F^ee_{M1M2(M3)}` and weight grids `Λ`.
//!
//! Every grid is the union of two kinds of branches. The closed branch is the
//! scaled alcove `{s ≥ 0, Σ m_i s_i ≤ M}` of each factor; the reflected branch
//! is the strict interior of an alcove pushed through the first simple
//! reflection of a factor. The full even group reflects one designated factor
//! (see [`SemisimpleSystem::reflecting_factor`]) across the whole product;
//! the product even group glues the two branches factor by factor.
//!
//! Labels are Kac coordinates `[s0, s1, …]` per factor, with
//! `s0 = M − Σ m_i s_i`. Reflected points keep the positive label of the
//! interior point they came from and set the matching `reflected` flag.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie_data::{SemisimpleSystem, TorusPoint, Weight};
use crate::weyl::{coroot_class, root_class, EvenGroup, EvenGroupKind, GroupElement, Moduli};
use crate::Rational;

/// A point of a discrete grid with its Kac label and `ε(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridPoint {
    pub point: TorusPoint,
    pub label: Vec<i64>,
    /// Which factors' coordinates went through the gluing reflection.
    pub reflected: Vec<bool>,
    pub epsilon: usize,
}

/// A weight of a discrete weight grid with its label and `h∨_λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralPoint {
    pub weight: Weight,
    pub label: Vec<i64>,
    pub reflected: Vec<bool>,
    pub h: usize,
}

/// Grid of torus points for one system, kind and set of moduli.
#[derive(Clone, Debug)]
pub struct PointGrid {
    pub system: SemisimpleSystem,
    pub kind: EvenGroupKind,
    pub moduli: Moduli,
    pub points: Vec<GridPoint>,
}

/// Grid of weights labeling the orthogonal family on a [`PointGrid`].
#[derive(Clone, Debug)]
pub struct WeightGrid {
    pub system: SemisimpleSystem,
    pub kind: EvenGroupKind,
    pub moduli: Moduli,
    pub weights: Vec<SpectralPoint>,
}

impl std::ops::Deref for PointGrid {
    type Target = [GridPoint];

    fn deref(&self) -> &[GridPoint] {
        &self.points
    }
}

impl std::ops::Deref for WeightGrid {
    type Target = [SpectralPoint];

    fn deref(&self) -> &[SpectralPoint] {
        &self.weights
    }
}

/// Label column names: `s0, s1, s0', s2, s3` style.
pub fn label_names(system: &SemisimpleSystem, letter: char) -> Vec<String> {
    let mut names = Vec::new();
    for f in 0..system.factor_count() {
        names.push(format!("{letter}0{}", "'".repeat(f)));
        for i in system.block(f) {
            names.push(format!("{letter}{}", i + 1));
        }
    }
    names
}

/// One factor's contribution: factor-local coordinates and the Kac label.
#[derive(Clone)]
struct Piece {
    coords: Vec<i64>,
    label: Vec<i64>,
}

/// Integer points of `{s ≥ 0, Σ m_i s_i ≤ M}` (closed) or of its interior.
fn alcove_points(marks: &[i64], m: i64, interior: bool) -> Vec<Piece> {
    let lo = i64::from(interior);
    let mut out = Vec::new();
    let mut cur = vec![lo; marks.len()];
    fn rec(
        marks: &[i64],
        m: i64,
        interior: bool,
        lo: i64,
        idx: usize,
        cur: &mut Vec<i64>,
        out: &mut Vec<Piece>,
    ) {
        if idx == marks.len() {
            let used: i64 = cur.iter().zip(marks).map(|(s, k)| s * k).sum();
            let s0 = m - used;
            if s0 > 0 || (!interior && s0 == 0) {
                let mut label = vec![s0];
                label.extend_from_slice(cur);
                out.push(Piece {
                    coords: cur.clone(),
                    label,
                });
            }
            return;
        }
        let mut v = lo;
        while v * marks[idx] <= m {
            cur[idx] = v;
            rec(marks, m, interior, lo, idx + 1, cur, out);
            v += 1;
        }
    }
    rec(marks, m, interior, lo, 0, &mut cur, &mut out);
    out
}

/// Cartesian product of per-factor piece lists, in order.
fn product(lists: &[Vec<(Piece, bool)>]) -> Vec<(Vec<i64>, Vec<i64>, Vec<bool>)> {
    let mut acc: Vec<(Vec<i64>, Vec<i64>, Vec<bool>)> = vec![(vec![], vec![], vec![])];
    for list in lists {
        let mut next = Vec::with_capacity(acc.len() * list.len());
        for (c, l, r) in &acc {
            for (p, refl) in list {
                let mut c2 = c.clone();
                c2.extend_from_slice(&p.coords);
                let mut l2 = l.clone();
                l2.extend_from_slice(&p.label);
                let mut r2 = r.clone();
                r2.push(*refl);
                next.push((c2, l2, r2));
            }
        }
        acc = next;
    }
    acc
}

/// Which alcove coefficients a grid uses.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    /// Points: marks, coweight action.
    Torus,
    /// Weights: dual marks, weight action.
    Spectral,
}

/// Raw (coordinates, label, reflected) triples of a grid before `ε`/`h`.
fn raw_grid(
    system: &SemisimpleSystem,
    kind: EvenGroupKind,
    moduli: &Moduli,
    side: Side,
) -> Vec<(Vec<i64>, Vec<i64>, Vec<bool>)> {
    let coeffs = |f: usize| match side {
        Side::Torus => &system.factors()[f].marks,
        Side::Spectral => &system.factors()[f].dual_marks,
    };
    let ms = moduli.per_factor();
    let k = system.factor_count();
    let reflect = |coords: &mut Vec<i64>, f: usize| {
        let r = GroupElement::reflection(system, system.offsets()[f]);
        let m = match side {
            Side::Torus => &r.coweight_matrix,
            Side::Spectral => &r.weight_matrix,
        };
        *coords = m.apply(coords);
    };
    match kind {
        EvenGroupKind::FullEven => {
            let closed: Vec<Vec<(Piece, bool)>> = (0..k)
                .map(|f| {
                    alcove_points(coeffs(f), ms[f], false)
                        .into_iter()
                        .map(|p| (p, false))
                        .collect()
                })
                .collect();
            let open: Vec<Vec<(Piece, bool)>> = (0..k)
                .map(|f| {
                    alcove_points(coeffs(f), ms[f], true)
                        .into_iter()
                        .map(|p| (p, false))
                        .collect()
                })
                .collect();
            let rf = system.reflecting_factor();
            let mut out = product(&closed);
            for (mut c, l, mut r) in product(&open) {
                reflect(&mut c, rf);
                r[rf] = true;
                out.push((c, l, r));
            }
            out
        }
        EvenGroupKind::ProductEven => {
            let lists: Vec<Vec<(Piece, bool)>> = (0..k)
                .map(|f| {
                    let mut v: Vec<(Piece, bool)> = alcove_points(coeffs(f), ms[f], false)
                        .into_iter()
                        .map(|p| (p, false))
                        .collect();
                    v.extend(
                        alcove_points(coeffs(f), ms[f], true)
                            .into_iter()
                            .map(|p| (p, true)),
                    );
                    v
                })
                .collect();
            product(&lists)
                .into_iter()
                .map(|(mut c, l, r)| {
                    for (f, _) in r.iter().enumerate().take(k).filter(|(_, &flip)| flip) {
                        reflect(&mut c, f);
                    }
                    (c, l, r)
                })
                .collect()
        }
    }
}

/// Builds `F^e_M` (one modulus) or `F^ee_{M1M2…}` (one modulus per factor).
pub fn build_point_grid(
    system: &SemisimpleSystem,
    kind: EvenGroupKind,
    ms: &[i64],
) -> Result<PointGrid> {
    let moduli = Moduli::new(system, kind, ms)?;
    let group = EvenGroup::new(system, kind);
    Ok(build_point_grid_with(&group, &moduli))
}

pub(crate) fn build_point_grid_with(group: &EvenGroup, moduli: &Moduli) -> PointGrid {
    let system = group.system();
    let dens = moduli.per_coordinate(system);
    let points = raw_grid(system, group.kind(), moduli, Side::Torus)
        .into_iter()
        .map(|(coords, label, reflected)| {
            let point = TorusPoint::on_grid(coords, dens.clone());
            let epsilon = group.torus_orbit_size(&point);
            GridPoint {
                point,
                label,
                reflected,
                epsilon,
            }
        })
        .collect();
    PointGrid {
        system: system.clone(),
        kind: group.kind(),
        moduli: moduli.clone(),
        points,
    }
}

/// Builds `Λ^e_M` or `Λ^ee_{M1M2…}`.
pub fn build_weight_grid(
    system: &SemisimpleSystem,
    kind: EvenGroupKind,
    ms: &[i64],
) -> Result<WeightGrid> {
    let moduli = Moduli::new(system, kind, ms)?;
    let group = EvenGroup::new(system, kind);
    Ok(build_weight_grid_with(&group, &moduli))
}

pub(crate) fn build_weight_grid_with(group: &EvenGroup, moduli: &Moduli) -> WeightGrid {
    let system = group.system();
    let weights = raw_grid(system, group.kind(), moduli, Side::Spectral)
        .into_iter()
        .map(|(coords, label, reflected)| {
            let weight = Weight(coords);
            let h = group.weight_stab_mod_mq(&weight, moduli);
            SpectralPoint {
                weight,
                label,
                reflected,
                h,
            }
        })
        .collect();
    WeightGrid {
        system: system.clone(),
        kind: group.kind(),
        moduli: moduli.clone(),
        weights,
    }
}

/// Membership of `v/M` in a scaled fundamental region. `v` holds integer
/// numerators; `coeffs(f)` are the alcove coefficients of factor `f`.
struct Region<'a> {
    system: &'a SemisimpleSystem,
    kind: EvenGroupKind,
    moduli: &'a Moduli,
    side: Side,
}

impl Region<'_> {
    fn coeffs(&self, f: usize) -> &[i64] {
        match self.side {
            Side::Torus => &self.system.factors()[f].marks,
            Side::Spectral => &self.system.factors()[f].dual_marks,
        }
    }

    /// `strict`: interior of the alcove, otherwise the closed alcove.
    fn in_alcove(&self, v: &[i64], f: usize, strict: bool) -> bool {
        let block = self.system.block(f);
        let m = self.moduli.per_factor()[f];
        let coords = &v[block];
        let level: i64 = coords.iter().zip(self.coeffs(f)).map(|(s, k)| s * k).sum();
        if strict {
            coords.iter().all(|&s| s > 0) && level < m
        } else {
            coords.iter().all(|&s| s >= 0) && level <= m
        }
    }

    fn reflect(&self, v: &[i64], f: usize) -> Vec<i64> {
        let r = GroupElement::reflection(self.system, self.system.offsets()[f]);
        match self.side {
            Side::Torus => r.coweight_matrix.apply(v),
            Side::Spectral => r.weight_matrix.apply(v),
        }
    }

    fn contains(&self, v: &[i64]) -> bool {
        let k = self.system.factor_count();
        match self.kind {
            EvenGroupKind::FullEven => {
                let rf = self.system.reflecting_factor();
                let w = self.reflect(v, rf);
                (0..k).all(|f| self.in_alcove(v, f, false))
                    || (0..k).all(|f| self.in_alcove(&w, f, true))
            }
            EvenGroupKind::ProductEven => (0..k).all(|f| {
                self.in_alcove(v, f, false) || self.in_alcove(&self.reflect(v, f), f, true)
            }),
        }
    }
}

/// Whether the real point `x` (ω∨ coordinates) lies in the closure of
/// `F^e` (or `F^ee`), up to `tol`.
pub fn in_fundamental_domain(
    system: &SemisimpleSystem,
    kind: EvenGroupKind,
    x: &[f64],
    tol: f64,
) -> bool {
    let in_alcove = |v: &[f64], f: usize| {
        let block = system.block(f);
        let marks = &system.factors()[f].marks;
        let level: f64 = v[block.clone()]
            .iter()
            .zip(marks)
            .map(|(s, &m)| s * m as f64)
            .sum();
        v[block].iter().all(|&s| s >= -tol) && level <= 1.0 + tol
    };
    let reflect =
        |v: &[f64], f: usize| GroupElement::reflection(system, system.offsets()[f]).act_real(v);
    let k = system.factor_count();
    match kind {
        EvenGroupKind::FullEven => {
            let w = reflect(x, system.reflecting_factor());
            (0..k).all(|f| in_alcove(x, f)) || (0..k).all(|f| in_alcove(&w, f))
        }
        EvenGroupKind::ProductEven => {
            (0..k).all(|f| in_alcove(x, f) || in_alcove(&reflect(x, f), f))
        }
    }
}

/// Every integer vector in `[-bound, bound]^n`.
fn integer_box(n: usize, bound: i64) -> impl Iterator<Item = Vec<i64>> {
    let side = (2 * bound + 1) as usize;
    let total = side.pow(n as u32);
    (0..total).map(move |mut idx| {
        let mut v = vec![0; n];
        for slot in v.iter_mut() {
            *slot = (idx % side) as i64 - bound;
            idx /= side;
        }
        v
    })
}

/// Brute-force `F_M = (1/M) P∨/Q∨ ∩ F^e` (or the product version): scans
/// lattice points in a box around the region, keeps those inside, and
/// returns one representative per class of `ℝⁿ/Q∨`, ordered by class.
///
/// Fails if two points of the region are congruent modulo `Q∨`, which would
/// mean the region is not a fundamental domain.
pub fn oracle_point_grid(
    system: &SemisimpleSystem,
    kind: EvenGroupKind,
    ms: &[i64],
) -> Result<Vec<TorusPoint>> {
    let moduli = Moduli::new(system, kind, ms)?;
    let region = Region {
        system,
        kind,
        moduli: &moduli,
        side: Side::Torus,
    };
    let bound = 4 * moduli.per_factor().iter().max().copied().unwrap_or(1);
    let dens = moduli.per_coordinate(system);
    let mut classes: BTreeMap<Vec<Rational>, TorusPoint> = BTreeMap::new();
    for v in integer_box(system.rank(), bound) {
        if !region.contains(&v) {
            continue;
        }
        let x = TorusPoint::on_grid(v, dens.clone());
        let key = coroot_class(system, &x);
        if let Some(prev) = classes.insert(key, x.clone()) {
            return Err(Error::usage(format!(
                "points {:?} and {:?} of the region are congruent mod Q∨",
                prev.numerators, x.numerators
            )));
        }
    }
    Ok(classes.into_values().collect())
}

/// Brute-force `Λ_M = M F^{e∨} ∩ P/MQ`, one representative per class.
pub fn oracle_weight_grid(
    system: &SemisimpleSystem,
    kind: EvenGroupKind,
    ms: &[i64],
) -> Result<Vec<Weight>> {
    let moduli = Moduli::new(system, kind, ms)?;
    let region = Region {
        system,
        kind,
        moduli: &moduli,
        side: Side::Spectral,
    };
    let bound = 4 * moduli.per_factor().iter().max().copied().unwrap_or(1);
    let mut classes: BTreeMap<Vec<Rational>, Weight> = BTreeMap::new();
    for v in integer_box(system.rank(), bound) {
        if !region.contains(&v) {
            continue;
        }
        let w = Weight(v);
        let key = root_class(system, &w, &moduli);
        if let Some(prev) = classes.insert(key, w.clone()) {
            return Err(Error::usage(format!(
                "weights {:?} and {:?} of the region are congruent mod MQ",
                prev.0, w.0
            )));
        }
    }
    Ok(classes.into_values().collect())
}

/// Whether two point lists cover the same classes of `ℝⁿ/Q∨`, each once.
pub fn same_torus_classes(system: &SemisimpleSystem, a: &[TorusPoint], b: &[TorusPoint]) -> bool {
    let ka: HashSet<_> = a.iter().map(|x| coroot_class(system, x)).collect();
    let kb: HashSet<_> = b.iter().map(|x| coroot_class(system, x)).collect();
    ka.len() == a.len() && kb.len() == b.len() && ka == kb
}

/// Truncation of `P_e` (or `P_ee`) with every generator coefficient at most
/// `bound`: one representative per even-group orbit.
pub fn enumerate_dominant(
    system: &SemisimpleSystem,
    kind: EvenGroupKind,
    bound: i64,
) -> Vec<Weight> {
    let group = EvenGroup::new(system, kind);
    let k = system.factor_count();
    let boxes = |f: usize, lo: i64| -> Vec<Piece> {
        let rank = system.factors()[f].rank;
        let side = (bound - lo + 1).max(0) as usize;
        (0..side.pow(rank as u32))
            .map(|mut idx| {
                let mut c = vec![0; rank];
                for slot in c.iter_mut() {
                    *slot = lo + (idx % side) as i64;
                    idx /= side;
                }
                Piece {
                    coords: c,
                    label: vec![],
                }
            })
            .collect()
    };
    let reflect = |v: &[i64], f: usize| {
        GroupElement::reflection(system, system.offsets()[f])
            .weight_matrix
            .apply(v)
    };
    let candidates: Vec<Vec<i64>> = match kind {
        EvenGroupKind::FullEven => {
            let dominant: Vec<_> = (0..k)
                .map(|f| boxes(f, 0).into_iter().map(|p| (p, false)).collect())
                .collect();
            let strict: Vec<_> = (0..k)
                .map(|f| boxes(f, 1).into_iter().map(|p| (p, false)).collect())
                .collect();
            let rf = system.reflecting_factor();
            let mut out: Vec<Vec<i64>> =
                product(&dominant).into_iter().map(|(c, _, _)| c).collect();
            out.extend(
                product(&strict)
                    .into_iter()
                    .map(|(c, _, _)| reflect(&c, rf)),
            );
            out
        }
        EvenGroupKind::ProductEven => {
            let lists: Vec<Vec<(Piece, bool)>> = (0..k)
                .map(|f| {
                    let mut v: Vec<(Piece, bool)> =
                        boxes(f, 0).into_iter().map(|p| (p, false)).collect();
                    v.extend(boxes(f, 1).into_iter().map(|p| (p, true)));
                    v
                })
                .collect();
            product(&lists)
                .into_iter()
                .map(|(mut c, _, r)| {
                    for (f, _) in r.iter().enumerate().take(k).filter(|(_, &flip)| flip) {
                        c = reflect(&c, f);
                    }
                    c
                })
                .collect()
        }
    };
    let mut seen = HashSet::new();
    candidates
        .into_iter()
        .map(Weight)
        .filter(|w| seen.insert(group.orbit_min(w)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_data::{make_system, FactorKind::*, SUPPORTED_SYSTEMS};
    use EvenGroupKind::*;

    #[test]
    fn point_grid_counts() {
        let s = make_system(&[A1, A1]).unwrap();
        let g = build_point_grid(&s, FullEven, &[2]).unwrap();
        assert_eq!(g.len(), 10);
        assert_eq!(
            g.iter().filter(|p| p.reflected.iter().any(|&r| r)).count(),
            1
        );

        let s = make_system(&[A1, A2]).unwrap();
        assert_eq!(build_point_grid(&s, ProductEven, &[1, 1]).unwrap().len(), 6);

        let s = make_system(&[A1, A1, A1]).unwrap();
        assert_eq!(build_point_grid(&s, FullEven, &[1]).unwrap().len(), 8);
    }

    #[test]
    fn weight_grid_counts() {
        let s = make_system(&[A1, A1]).unwrap();
        assert_eq!(build_weight_grid(&s, FullEven, &[2]).unwrap().len(), 10);
        let s = make_system(&[A1, G2]).unwrap();
        let w = build_weight_grid(&s, FullEven, &[1]).unwrap();
        let coords: Vec<_> = w.iter().map(|p| p.weight.0.clone()).collect();
        assert_eq!(coords, vec![vec![0, 0, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn a1xa1_reflected_branch_matches_printed_set() {
        let s = make_system(&[A1, A1]).unwrap();
        let g = build_point_grid(&s, FullEven, &[3]).unwrap();
        let reflected: Vec<_> = g
            .iter()
            .filter(|p| p.reflected[0])
            .map(|p| p.point.numerators.clone())
            .collect();
        assert_eq!(
            reflected,
            vec![vec![-1, 1], vec![-1, 2], vec![-2, 1], vec![-2, 2]]
        );
    }

    #[test]
    fn labels_satisfy_mark_constraints() {
        for kinds in SUPPORTED_SYSTEMS {
            let s = make_system(kinds).unwrap();
            for (kind, ms) in [
                (FullEven, vec![3]),
                (ProductEven, vec![2; s.factor_count()]),
            ] {
                let g = build_point_grid(&s, kind, &ms).unwrap();
                let w = build_weight_grid(&s, kind, &ms).unwrap();
                let mf = g.moduli.per_factor().to_vec();
                for p in g.iter() {
                    let mut at = 0;
                    for (f, factor) in s.factors().iter().enumerate() {
                        let l = &p.label[at..at + factor.rank + 1];
                        let lvl: i64 = l[1..].iter().zip(&factor.marks).map(|(a, b)| a * b).sum();
                        assert_eq!(l[0] + lvl, mf[f]);
                        assert!(l.iter().all(|&v| v >= 0));
                        at += factor.rank + 1;
                    }
                }
                for p in w.iter() {
                    let mut at = 0;
                    for (f, factor) in s.factors().iter().enumerate() {
                        let l = &p.label[at..at + factor.rank + 1];
                        let lvl: i64 = l[1..]
                            .iter()
                            .zip(&factor.dual_marks)
                            .map(|(a, b)| a * b)
                            .sum();
                        assert_eq!(l[0] + lvl, mf[f]);
                        at += factor.rank + 1;
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let s = make_system(&[A1, A2]).unwrap();
        let built = build_point_grid(&s, FullEven, &[3]).unwrap();
        let pts: Vec<_> = built.iter().map(|p| p.point.clone()).collect();
        assert!(same_torus_classes(
            &s,
            &pts,
            &oracle_point_grid(&s, FullEven, &[3]).unwrap()
        ));

        let s = make_system(&[A1, C2]).unwrap();
        let built = build_point_grid(&s, ProductEven, &[2, 3]).unwrap();
        let pts: Vec<_> = built.iter().map(|p| p.point.clone()).collect();
        assert!(same_torus_classes(
            &s,
            &pts,
            &oracle_point_grid(&s, ProductEven, &[2, 3]).unwrap()
        ));

        let s = make_system(&[A1, A1]).unwrap();
        let oracle = oracle_point_grid(&s, FullEven, &[1]).unwrap();
        assert_eq!(oracle.len(), 4);
        assert!(oracle
            .iter()
            .all(|x| x.numerators.iter().all(|&v| v == 0 || v == 1)));
    }

    #[test]
    fn epsilon_sums_to_torus_size() {
        // one representative per orbit <=> Σ ε = |(1/M)P∨/Q∨| = det C · Π M^rank
        for kinds in SUPPORTED_SYSTEMS {
            let s = make_system(kinds).unwrap();
            for (kind, ms) in [
                (FullEven, vec![4]),
                (ProductEven, vec![3; s.factor_count()]),
            ] {
                let g = build_point_grid(&s, kind, &ms).unwrap();
                let total: usize = g.iter().map(|p| p.epsilon).sum();
                let expected = s.det_cartan() * g.moduli.volume_factor(&s);
                assert_eq!(total as i64, expected, "{s} {kind}");
            }
        }
    }

    #[test]
    fn enumerate_dominant_examples() {
        let s = make_system(&[A1, A1]).unwrap();
        assert_eq!(
            enumerate_dominant(&s, FullEven, 0),
            vec![Weight(vec![0, 0])]
        );
        let mut got = enumerate_dominant(&s, FullEven, 1);
        got.sort();
        let mut expected: Vec<_> = [[0, 0], [1, 0], [0, 1], [1, 1], [-1, 1]]
            .iter()
            .map(|v| Weight(v.to_vec()))
            .collect();
        expected.sort();
        assert_eq!(got, expected);

        for kinds in SUPPORTED_SYSTEMS {
            let s = make_system(kinds).unwrap();
            for kind in [FullEven, ProductEven] {
                let group = EvenGroup::new(&s, kind);
                let ws = enumerate_dominant(&s, kind, 2);
                let orbits: HashSet<_> = ws.iter().map(|w| group.orbit_min(w)).collect();
                assert_eq!(orbits.len(), ws.len());
            }
        }
    }

    #[test]
    fn grid_points_lie_in_the_domain() {
        for kinds in SUPPORTED_SYSTEMS {
            let s = make_system(kinds).unwrap();
            for kind in [FullEven, ProductEven] {
                let ms = vec![
                    3;
                    if kind == FullEven {
                        1
                    } else {
                        s.factor_count()
                    }
                ];
                let grid = build_point_grid(&s, kind, &ms).unwrap();
                assert!(grid.iter().all(|p| in_fundamental_domain(
                    &s,
                    kind,
                    &p.point.to_f64(),
                    1e-12
                )));
                let outside = vec![-0.25; s.rank()];
                assert!(!in_fundamental_domain(&s, kind, &outside, 1e-12) || kind == ProductEven);
            }
        }
        let s = make_system(&[A1, A1]).unwrap();
        assert!(in_fundamental_domain(&s, FullEven, &[-0.5, 0.5], 1e-12));
        assert!(!in_fundamental_domain(&s, FullEven, &[-0.5, -0.5], 1e-12));
        assert!(in_fundamental_domain(&s, ProductEven, &[-0.5, -0.5], 1e-12));
        assert!(!in_fundamental_domain(&s, ProductEven, &[1.5, 0.5], 1e-12));
    }

    #[test]
    fn label_name_layout() {
        let s = make_system(&[A1, A2]).unwrap();
        assert_eq!(label_names(&s, 's'), vec!["s0", "s1", "s0'", "s2", "s3"]);
        let s = make_system(&[A1, A1, A1]).unwrap();
        assert_eq!(
            label_names(&s, 't'),
            vec!["t0", "t1", "t0'", "t2", "t0''", "t3"]
        );
    }

    #[test]
    fn rejects_bad_moduli() {
        let s = make_system(&[A1, A2]).unwrap();
        assert!(matches!(
            build_point_grid(&s, FullEven, &[0]),
            Err(Error::Usage(_))
        ));
        assert!(build_weight_grid(&s, ProductEven, &[2]).is_err());
    }
}
