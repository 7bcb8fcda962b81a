//! Discrete and continuous E-transforms, interpolation and the
//! product-to-sum rule.
//!
//! Discrete transforms are dense sums. Entries `Ξ_λ(x)` on a grid go through a
//! [`PhaseKernel`], so every phase is an exact residue looked up in a table.
//! Batches run through [`Execution`]: the outer loop (over weights or points)
//! may be parallel, each inner sum is sequential in a fixed order, and the two
//! modes agree bit for bit.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::efunc::{xi_real_with, EFunctionSpec};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::grids::{
    build_point_grid_with, build_weight_grid_with, enumerate_dominant, PointGrid, WeightGrid,
};
use crate::lie_data::{coweight_gram, PhaseKernel, SemisimpleSystem, TorusPoint, Weight};
use crate::weyl::{EvenGroup, EvenGroupKind, GroupElement, Moduli};

/// Tolerance for orthogonality and round trips.
pub const ORTHOGONALITY_TOL: f64 = 1e-9;
/// Tolerance for comparing two formulas pointwise.
pub const FORMULA_TOL: f64 = 1e-10;
/// Tolerance for identities between pure phases.
pub const PHASE_TOL: f64 = 1e-12;
/// Default weight bound of the truncated continuous spectrum.
pub const DEFAULT_WEIGHT_BOUND: i64 = 3;

/// Values of a function on a point grid, aligned with `grid` by index.
#[derive(Clone, Debug)]
pub struct SampleSet {
    pub grid: PointGrid,
    pub values: Vec<Complex64>,
}

impl SampleSet {
    pub fn new(grid: PointGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::usage(format!(
                "{} sample values for a grid of {} points",
                values.len(),
                grid.len()
            )));
        }
        Ok(SampleSet { grid, values })
    }

    pub fn from_fn(grid: PointGrid, f: impl Fn(&TorusPoint) -> Complex64) -> Self {
        let values = grid.iter().map(|p| f(&p.point)).collect();
        SampleSet { grid, values }
    }

    /// Independent uniform real and imaginary parts in `[-1, 1)`.
    pub fn random(grid: PointGrid, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values = (0..grid.len())
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        SampleSet { grid, values }
    }
}

/// Expansion coefficients `c_λ`, aligned with `spectrum` by index.
#[derive(Clone, Debug)]
pub struct CoefficientSet {
    pub spectrum: WeightGrid,
    pub values: Vec<Complex64>,
}

impl CoefficientSet {
    pub fn new(spectrum: WeightGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != spectrum.len() {
            return Err(Error::usage(format!(
                "{} coefficients for a spectrum of {} weights",
                values.len(),
                spectrum.len()
            )));
        }
        Ok(CoefficientSet { spectrum, values })
    }

    pub fn system(&self) -> &SemisimpleSystem {
        &self.spectrum.system
    }

    pub fn kind(&self) -> EvenGroupKind {
        self.spectrum.kind
    }

    pub fn moduli(&self) -> &Moduli {
        &self.spectrum.moduli
    }
}

/// Everything needed to transform on one grid: both grids, the phase
/// kernel, and the sorted images `wλ` of every spectral weight.
#[derive(Clone, Debug)]
pub struct TransformPlan {
    group: EvenGroup,
    moduli: Moduli,
    points: PointGrid,
    spectrum: WeightGrid,
    kernel: PhaseKernel,
    images: Vec<Vec<Vec<i64>>>,
    transformed: Vec<Vec<i64>>,
    exec: Execution,
}

impl TransformPlan {
    pub fn new(system: &SemisimpleSystem, kind: EvenGroupKind, ms: &[i64]) -> Result<Self> {
        let moduli = Moduli::new(system, kind, ms)?;
        Ok(Self::from_group(EvenGroup::new(system, kind), moduli))
    }

    pub fn from_group(group: EvenGroup, moduli: Moduli) -> Self {
        let points = build_point_grid_with(&group, &moduli);
        let spectrum = build_weight_grid_with(&group, &moduli);
        let kernel = PhaseKernel::new(group.system(), moduli.per_factor());
        let images = spectrum
            .iter()
            .map(|sp| {
                let mut im: Vec<Vec<i64>> = group
                    .elements()
                    .iter()
                    .map(|g| g.act_weight(&sp.weight).0)
                    .collect();
                im.sort();
                im
            })
            .collect();
        let transformed = points
            .iter()
            .map(|p| kernel.transform_point(&p.point.numerators))
            .collect();
        TransformPlan {
            group,
            moduli,
            points,
            spectrum,
            kernel,
            images,
            transformed,
            exec: Execution::default(),
        }
    }

    pub fn with_execution(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }

    pub fn execution(&self) -> Execution {
        self.exec
    }

    pub fn system(&self) -> &SemisimpleSystem {
        self.group.system()
    }

    pub fn group(&self) -> &EvenGroup {
        &self.group
    }

    pub fn points(&self) -> &PointGrid {
        &self.points
    }

    pub fn spectrum(&self) -> &WeightGrid {
        &self.spectrum
    }

    /// `Ξ_λ(x)` for spectral index `l` and point index `p`.
    pub fn entry(&self, l: usize, p: usize) -> Complex64 {
        let bs = &self.transformed[p];
        let mut acc = Complex64::new(0.0, 0.0);
        for mu in &self.images[l] {
            acc += self.kernel.exp_pretransformed(mu, bs);
        }
        acc
    }

    /// `det C · |G| · Π M_f^{rank_f} · h_λ`, the squared norm of `Ξ_λ`.
    pub fn norm(&self, l: usize) -> f64 {
        let system = self.system();
        (system.det_cartan()
            * self.group.order() as i64
            * self.moduli.volume_factor(system)
            * self.spectrum[l].h as i64) as f64
    }

    fn check_grid(&self, grid: &PointGrid) -> Result<()> {
        let same = grid.system == *self.system()
            && grid.kind == self.group.kind()
            && grid.moduli == self.moduli
            && grid.len() == self.points.len()
            && grid
                .iter()
                .zip(self.points.iter())
                .all(|(a, b)| a.point == b.point);
        if same {
            Ok(())
        } else {
            Err(Error::usage(
                "sample grid does not match the transform grid",
            ))
        }
    }

    fn check_spectrum(&self, spectrum: &WeightGrid) -> Result<()> {
        let same = spectrum.system == *self.system()
            && spectrum.kind == self.group.kind()
            && spectrum.moduli == self.moduli
            && spectrum.len() == self.spectrum.len()
            && spectrum
                .iter()
                .zip(self.spectrum.iter())
                .all(|(a, b)| a.weight == b.weight);
        if same {
            Ok(())
        } else {
            Err(Error::usage(
                "coefficient spectrum does not match the transform grid",
            ))
        }
    }

    /// `c_λ = (1 / norm_λ) Σ_x ε(x) f(x) conj Ξ_λ(x)`.
    pub fn forward(&self, samples: &SampleSet) -> Result<CoefficientSet> {
        self.check_grid(&samples.grid)?;
        let values = self.exec.map_range(self.spectrum.len(), |l| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (p, f) in samples.values.iter().enumerate() {
                acc += f * self.entry(l, p).conj() * self.points[p].epsilon as f64;
            }
            acc / self.norm(l)
        });
        Ok(CoefficientSet {
            spectrum: self.spectrum.clone(),
            values,
        })
    }

    /// `f(x) = Σ_λ c_λ Ξ_λ(x)` at every grid point.
    pub fn inverse(&self, coeffs: &CoefficientSet) -> Result<SampleSet> {
        self.check_spectrum(&coeffs.spectrum)?;
        let values = self.exec.map_range(self.points.len(), |p| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (l, c) in coeffs.values.iter().enumerate() {
                acc += c * self.entry(l, p);
            }
            acc
        });
        Ok(SampleSet {
            grid: self.points.clone(),
            values,
        })
    }

    /// `G_{λλ'} = Σ_x ε(x) Ξ_λ(x) conj Ξ_λ'(x)`.
    pub fn gram(&self) -> Vec<Vec<Complex64>> {
        let table: Vec<Vec<Complex64>> = self.exec.map_range(self.spectrum.len(), |l| {
            (0..self.points.len()).map(|p| self.entry(l, p)).collect()
        });
        self.exec.map_range(self.spectrum.len(), |l| {
            (0..self.spectrum.len())
                .map(|m| {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for (p, pt) in self.points.iter().enumerate() {
                        acc += table[l][p] * table[m][p].conj() * pt.epsilon as f64;
                    }
                    acc
                })
                .collect()
        })
    }

    /// Largest `|G − diag(norm)|` entry over the whole Gram matrix.
    pub fn orthogonality_residual(&self) -> f64 {
        let gram = self.gram();
        let mut worst: f64 = 0.0;
        for (l, row) in gram.iter().enumerate() {
            for (m, g) in row.iter().enumerate() {
                let expected = if l == m { self.norm(l) } else { 0.0 };
                worst = worst.max((g - expected).norm());
            }
        }
        worst
    }
}

/// Forward transform on the grid carried by `samples`.
pub fn forward_discrete(samples: &SampleSet) -> Result<CoefficientSet> {
    let g = &samples.grid;
    TransformPlan::from_group(EvenGroup::new(&g.system, g.kind), g.moduli.clone()).forward(samples)
}

/// Inverse transform on the spectrum carried by `coeffs`.
pub fn inverse_discrete(coeffs: &CoefficientSet) -> Result<SampleSet> {
    let s = &coeffs.spectrum;
    TransformPlan::from_group(EvenGroup::new(&s.system, s.kind), s.moduli.clone()).inverse(coeffs)
}

/// The interpolating series `Σ_λ c_λ Ξ_λ(x)` at any torus point.
pub fn interpolate(coeffs: &CoefficientSet, x: &TorusPoint) -> Result<Complex64> {
    let group = EvenGroup::new(coeffs.system(), coeffs.kind());
    let mut acc = Complex64::new(0.0, 0.0);
    for (sp, c) in coeffs.spectrum.iter().zip(&coeffs.values) {
        acc += c * EFunctionSpec::new(&group, sp.weight.clone())?.xi(x)?;
    }
    Ok(acc)
}

/// The interpolating series at a real point in ω∨ coordinates.
pub fn interpolate_real(coeffs: &CoefficientSet, x: &[f64]) -> Result<Complex64> {
    coeffs.system().check_dim(x.len(), "point")?;
    let group = EvenGroup::new(coeffs.system(), coeffs.kind());
    let mut acc = Complex64::new(0.0, 0.0);
    for (sp, c) in coeffs.spectrum.iter().zip(&coeffs.values) {
        acc += c * EFunctionSpec::new(&group, sp.weight.clone())?.xi_real(x);
    }
    Ok(acc)
}

/// Midpoint-rule nodes and weights on `F^e` (or `F^ee`) in ω∨ coordinates.
/// The weights include the volume element, so they add up to the volume.
#[derive(Clone, Debug)]
pub struct Quadrature {
    pub nodes: Vec<Vec<f64>>,
    pub weights: Vec<f64>,
    /// Which factors each node was reflected in.
    pub reflected: Vec<Vec<bool>>,
}

/// Centroids of a regular subdivision of the unit alcove of one factor,
/// `{s ≥ 0, Σ m_i s_i ≤ 1}`, with their coordinate areas.
fn alcove_centroids(marks: &[i64], resolution: usize) -> Vec<(Vec<f64>, f64)> {
    let n = resolution as f64;
    match marks {
        [m] => (0..resolution)
            .map(|i| {
                (
                    vec![(i as f64 + 0.5) / (n * *m as f64)],
                    1.0 / (n * *m as f64),
                )
            })
            .collect(),
        [m1, m2] => {
            // subdivide the standard triangle u1, u2 ≥ 0, u1 + u2 ≤ 1, then s_i = u_i / m_i
            let jac = 1.0 / (*m1 as f64 * *m2 as f64);
            let area = jac / (2.0 * n * n);
            let mut out = Vec::with_capacity(resolution * resolution);
            for i in 0..resolution {
                for j in 0..resolution - i {
                    let (fi, fj) = (i as f64, j as f64);
                    let up = [(fi + 1.0 / 3.0) / n, (fj + 1.0 / 3.0) / n];
                    out.push((vec![up[0] / *m1 as f64, up[1] / *m2 as f64], area));
                    if i + j + 1 < resolution {
                        let down = [(fi + 2.0 / 3.0) / n, (fj + 2.0 / 3.0) / n];
                        out.push((vec![down[0] / *m1 as f64, down[1] / *m2 as f64], area));
                    }
                }
            }
            out
        }
        _ => unreachable!("factors have rank 1 or 2"),
    }
}

impl Quadrature {
    /// `resolution` subdivisions per unit length of every factor alcove.
    pub fn fundamental_domain(
        system: &SemisimpleSystem,
        kind: EvenGroupKind,
        resolution: usize,
    ) -> Result<Self> {
        if resolution == 0 {
            return Err(Error::usage("quadrature resolution must be at least 1"));
        }
        let k = system.factor_count();
        let per_factor: Vec<Vec<(Vec<f64>, f64)>> = system
            .factors()
            .iter()
            .map(|f| alcove_centroids(&f.marks, resolution))
            .collect();
        let reflections: Vec<GroupElement> = (0..k)
            .map(|f| GroupElement::reflection(system, system.offsets()[f]))
            .collect();

        let mut base: Vec<(Vec<f64>, f64)> = vec![(vec![], 1.0)];
        for list in &per_factor {
            let mut next = Vec::with_capacity(base.len() * list.len());
            for (c, w) in &base {
                for (c2, w2) in list {
                    let mut c3 = c.clone();
                    c3.extend_from_slice(c2);
                    next.push((c3, w * w2));
                }
            }
            base = next;
        }

        let patterns: Vec<Vec<bool>> = match kind {
            EvenGroupKind::FullEven => {
                let mut r = vec![false; k];
                r[system.reflecting_factor()] = true;
                vec![vec![false; k], r]
            }
            EvenGroupKind::ProductEven => (0..1usize << k)
                .map(|bits| (0..k).map(|f| bits >> f & 1 == 1).collect())
                .collect(),
        };
        let scale = coweight_gram(system).determinant();
        let measure = (*scale.numer() as f64 / *scale.denom() as f64).sqrt();

        let mut q = Quadrature {
            nodes: Vec::with_capacity(base.len() * patterns.len()),
            weights: Vec::with_capacity(base.len() * patterns.len()),
            reflected: Vec::with_capacity(base.len() * patterns.len()),
        };
        for pattern in &patterns {
            for (c, w) in &base {
                let mut x = c.clone();
                for (f, &r) in pattern.iter().enumerate() {
                    if r {
                        x = reflections[f].act_real(&x);
                    }
                }
                q.nodes.push(x);
                q.weights.push(w * measure);
                q.reflected.push(pattern.clone());
            }
        }
        Ok(q)
    }

    pub fn volume(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Approximate continuous coefficients over a truncated spectrum.
#[derive(Clone, Debug)]
pub struct ContinuousCoefficients {
    pub system: SemisimpleSystem,
    pub kind: EvenGroupKind,
    pub weights: Vec<Weight>,
    pub values: Vec<Complex64>,
}

/// `c_λ = 1/(|F^e| |W^e| d_λ) ∫_{F^e} f conj Ξ_λ` for every `λ` of
/// [`enumerate_dominant`]`(weight_bound)`, by the midpoint rule with
/// `resolution` subdivisions per unit length. `f` takes ω∨ coordinates.
pub fn continuous_coefficients<F>(
    f: F,
    system: &SemisimpleSystem,
    kind: EvenGroupKind,
    weight_bound: i64,
    resolution: usize,
    exec: Execution,
) -> Result<ContinuousCoefficients>
where
    F: Fn(&[f64]) -> Complex64 + Sync,
{
    let weights = enumerate_dominant(system, kind, weight_bound);
    continuous_coefficients_for(f, system, kind, &weights, resolution, exec)
}

/// As [`continuous_coefficients`], for an explicit list of weights.
pub fn continuous_coefficients_for<F>(
    f: F,
    system: &SemisimpleSystem,
    kind: EvenGroupKind,
    weights: &[Weight],
    resolution: usize,
    exec: Execution,
) -> Result<ContinuousCoefficients>
where
    F: Fn(&[f64]) -> Complex64 + Sync,
{
    let group = EvenGroup::new(system, kind);
    let quad = Quadrature::fundamental_domain(system, kind, resolution)?;
    let samples: Vec<Complex64> = exec.map(&quad.nodes, |x| f(x));
    let inv = system.inv_cartan().to_f64();
    let volume = quad.volume();
    let specs = weights
        .iter()
        .map(|w| EFunctionSpec::new(&group, w.clone()))
        .collect::<Result<Vec<_>>>()?;
    let values = exec.map(&specs, |spec| {
        let mut acc = Complex64::new(0.0, 0.0);
        for ((x, w), fx) in quad.nodes.iter().zip(&quad.weights).zip(&samples) {
            acc += fx * xi_real_with(&inv, spec.images(), x).conj() * *w;
        }
        acc / (volume * group.order() as f64 * spec.stab_order() as f64)
    });
    Ok(ContinuousCoefficients {
        system: system.clone(),
        kind,
        weights: weights.to_vec(),
        values,
    })
}

/// `∫_{F^e} Ξ_λ conj Ξ_λ'` by the midpoint rule.
pub fn continuous_inner_product(
    system: &SemisimpleSystem,
    kind: EvenGroupKind,
    lambda: &Weight,
    lambda2: &Weight,
    resolution: usize,
) -> Result<Complex64> {
    let group = EvenGroup::new(system, kind);
    let a = EFunctionSpec::new(&group, lambda.clone())?;
    let b = EFunctionSpec::new(&group, lambda2.clone())?;
    let quad = Quadrature::fundamental_domain(system, kind, resolution)?;
    let inv = system.inv_cartan().to_f64();
    let mut acc = Complex64::new(0.0, 0.0);
    for (x, w) in quad.nodes.iter().zip(&quad.weights) {
        acc += xi_real_with(&inv, a.images(), x) * xi_real_with(&inv, b.images(), x).conj() * *w;
    }
    Ok(acc)
}

/// `{λ + wλ' : w ∈ G}` with multiplicity, in canonical group order, so that
/// `Ξ_λ Ξ_λ' = Σ_ν Ξ_ν` over the returned weights.
pub fn product_to_sum(group: &EvenGroup, lambda: &Weight, lambda2: &Weight) -> Result<Vec<Weight>> {
    let system = group.system();
    system.check_dim(lambda.0.len(), "lambda")?;
    system.check_dim(lambda2.0.len(), "lambda2")?;
    Ok(group
        .elements()
        .iter()
        .map(|w| lambda + &w.act_weight(lambda2))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_data::{make_system, FactorKind::*, SUPPORTED_SYSTEMS};
    use crate::Rational;
    use EvenGroupKind::*;

    fn plan(
        kinds: &[crate::lie_data::FactorKind],
        kind: EvenGroupKind,
        ms: &[i64],
    ) -> TransformPlan {
        TransformPlan::new(&make_system(kinds).unwrap(), kind, ms).unwrap()
    }

    fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    #[test]
    fn entries_match_exact_orbit_sum() {
        let p = plan(&[A1, G2], FullEven, &[3]);
        for (l, sp) in p.spectrum().iter().enumerate() {
            let spec = EFunctionSpec::new(p.group(), sp.weight.clone()).unwrap();
            for (i, pt) in p.points().iter().enumerate() {
                assert!((p.entry(l, i) - spec.xi(&pt.point).unwrap()).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn gram_is_diagonal() {
        for kinds in SUPPORTED_SYSTEMS {
            let p = plan(kinds, FullEven, &[2]);
            assert!(p.orthogonality_residual() < ORTHOGONALITY_TOL);
            let ms = vec![2; kinds.len()];
            assert!(plan(kinds, ProductEven, &ms).orthogonality_residual() < ORTHOGONALITY_TOL);
        }
    }

    #[test]
    fn constant_function() {
        let p = plan(&[A1, C2], FullEven, &[3]);
        let ones = SampleSet::from_fn(p.points().clone(), |_| Complex64::new(1.0, 0.0));
        let c = p.forward(&ones).unwrap();
        for (sp, v) in c.spectrum.iter().zip(&c.values) {
            let expected = if sp.weight.is_zero() {
                1.0 / p.group().order() as f64
            } else {
                0.0
            };
            assert!((v - expected).norm() < PHASE_TOL);
        }
        let x = TorusPoint::from_rationals(
            p.system(),
            &[
                Rational::new(1, 7),
                Rational::new(2, 9),
                Rational::new(-1, 5),
            ],
        )
        .unwrap();
        assert!((interpolate(&c, &x).unwrap() - 1.0).norm() < ORTHOGONALITY_TOL);
    }

    #[test]
    fn single_mode_and_zero() {
        let p = plan(&[A1, A2], ProductEven, &[2, 3]);
        let target = 4;
        let spec = EFunctionSpec::new(p.group(), p.spectrum()[target].weight.clone()).unwrap();
        let samples = SampleSet::from_fn(p.points().clone(), |x| spec.xi(x).unwrap());
        let c = p.forward(&samples).unwrap();
        for (l, v) in c.values.iter().enumerate() {
            let expected = if l == target { 1.0 } else { 0.0 };
            assert!((v - expected).norm() < PHASE_TOL, "{l}: {v}");
        }
        let zero = SampleSet::from_fn(p.points().clone(), |_| Complex64::new(0.0, 0.0));
        assert!(p
            .forward(&zero)
            .unwrap()
            .values
            .iter()
            .all(|v| v.norm() == 0.0));
    }

    #[test]
    fn round_trips_and_interpolation() {
        let p = plan(&[A1, A1, A1], FullEven, &[3]);
        let f = SampleSet::random(p.points().clone(), 3);
        let c = p.forward(&f).unwrap();
        let back = p.inverse(&c).unwrap();
        assert!(max_diff(&back.values, &f.values) < ORTHOGONALITY_TOL);
        let again = p.forward(&back).unwrap();
        assert!(max_diff(&again.values, &c.values) < ORTHOGONALITY_TOL);
        for (pt, v) in p.points().iter().zip(&f.values) {
            assert!((interpolate(&c, &pt.point).unwrap() - v).norm() < ORTHOGONALITY_TOL);
        }
        let mut unit = c.clone();
        unit.values
            .iter_mut()
            .for_each(|v| *v = Complex64::new(0.0, 0.0));
        unit.values[0] = Complex64::new(1.0, 0.0);
        assert!(p.spectrum()[0].weight.is_zero());
        let consts = p.inverse(&unit).unwrap();
        assert!(consts
            .values
            .iter()
            .all(|v| (v - p.group().order() as f64).norm() < PHASE_TOL));
    }

    #[test]
    fn linearity() {
        let p = plan(&[A1, C2], ProductEven, &[2, 3]);
        let f = SampleSet::random(p.points().clone(), 1);
        let g = SampleSet::random(p.points().clone(), 2);
        let (alpha, beta) = (Complex64::new(0.3, -1.2), Complex64::new(2.0, 0.5));
        let mix = SampleSet::new(
            p.points().clone(),
            f.values
                .iter()
                .zip(&g.values)
                .map(|(a, b)| alpha * a + beta * b)
                .collect(),
        )
        .unwrap();
        let (cf, cg, cm) = (
            p.forward(&f).unwrap(),
            p.forward(&g).unwrap(),
            p.forward(&mix).unwrap(),
        );
        let combined: Vec<_> = cf
            .values
            .iter()
            .zip(&cg.values)
            .map(|(a, b)| alpha * a + beta * b)
            .collect();
        assert!(max_diff(&cm.values, &combined) < PHASE_TOL);
    }

    #[test]
    fn execution_modes_agree_bitwise() {
        let p = plan(&[A1, G2], FullEven, &[3]);
        let f = SampleSet::random(p.points().clone(), 9);
        let seq = p
            .clone()
            .with_execution(Execution::Sequential)
            .forward(&f)
            .unwrap();
        let par = p
            .clone()
            .with_execution(Execution::Parallel)
            .forward(&f)
            .unwrap();
        assert_eq!(seq.values, par.values);
    }

    #[test]
    fn mismatched_inputs_are_rejected() {
        let p = plan(&[A1, A2], FullEven, &[2]);
        let other = plan(&[A1, A2], FullEven, &[3]);
        let f = SampleSet::random(other.points().clone(), 0);
        assert!(matches!(p.forward(&f), Err(Error::Usage(_))));
        assert!(SampleSet::new(p.points().clone(), vec![]).is_err());
        let c = other.forward(&f).unwrap();
        assert!(p.inverse(&c).is_err());
    }

    #[test]
    fn a1_discrete_sum() {
        // Σ_{s=-M+1}^{M} e^{iπ(t-t')s/M} = 2M δ
        let s = SemisimpleSystem::simple(A1);
        for m in 1..=8 {
            let p = TransformPlan::new(&s, FullEven, &[m]).unwrap();
            assert_eq!(p.points().len() as i64, 2 * m);
            for l in 0..p.spectrum().len() {
                for k in 0..p.spectrum().len() {
                    let sum: Complex64 = (0..p.points().len())
                        .map(|i| p.entry(l, i) * p.entry(k, i).conj())
                        .sum();
                    let expected = if l == k { (2 * m) as f64 } else { 0.0 };
                    assert!((sum - expected).norm() < PHASE_TOL);
                }
            }
        }
    }

    #[test]
    fn quadrature_volumes() {
        let s = make_system(&[A1, A1]).unwrap();
        let q = Quadrature::fundamental_domain(&s, FullEven, 8).unwrap();
        assert!((q.volume() - 1.0).abs() < 1e-12);
        let q = Quadrature::fundamental_domain(&s, ProductEven, 8).unwrap();
        assert!((q.volume() - 2.0).abs() < 1e-12);
        let s = make_system(&[A1, C2]).unwrap();
        let q = Quadrature::fundamental_domain(&s, FullEven, 6).unwrap();
        assert!((q.volume() - 2f64.sqrt() / 4.0).abs() < 1e-12);
    }

    #[test]
    fn a1_continuous_orthogonality() {
        let s = SemisimpleSystem::simple(A1);
        for a in -2..=2 {
            for b in -2..=2 {
                let v = continuous_inner_product(
                    &s,
                    FullEven,
                    &Weight(vec![a]),
                    &Weight(vec![b]),
                    2048,
                )
                .unwrap();
                let expected = if a == b { 2f64.sqrt() } else { 0.0 };
                assert!((v - expected).norm() < 1e-6, "{a} {b} {v}");
            }
        }
    }

    #[test]
    fn continuous_recovers_a_mode() {
        let s = make_system(&[A1, A2]).unwrap();
        let group = EvenGroup::new(&s, ProductEven);
        let mu = Weight(vec![1, 1, 0]);
        let spec = EFunctionSpec::new(&group, mu.clone()).unwrap();
        let c = continuous_coefficients(
            |x| spec.xi_real(x),
            &s,
            ProductEven,
            1,
            24,
            Execution::default(),
        )
        .unwrap();
        for (w, v) in c.weights.iter().zip(&c.values) {
            let expected = if *w == mu { 1.0 } else { 0.0 };
            assert!((v - expected).norm() < 5e-3, "{w:?} {v}");
        }
        let z = continuous_coefficients(
            |_| Complex64::new(0.0, 0.0),
            &s,
            ProductEven,
            1,
            4,
            Execution::default(),
        )
        .unwrap();
        assert!(z.values.iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn product_to_sum_rule() {
        let s = make_system(&[A1, A1]).unwrap();
        let g = EvenGroup::new(&s, FullEven);
        let mut got = product_to_sum(&g, &Weight(vec![2, 1]), &Weight(vec![1, 3])).unwrap();
        got.sort();
        assert_eq!(got, vec![Weight(vec![1, -2]), Weight(vec![3, 4])]);
        let zero = product_to_sum(&g, &Weight(vec![2, 1]), &Weight(vec![0, 0])).unwrap();
        assert_eq!(zero, vec![Weight(vec![2, 1]); 2]);

        let s = make_system(&[A1, G2]).unwrap();
        let g = EvenGroup::new(&s, FullEven);
        let (l1, l2) = (Weight(vec![1, 2, -1]), Weight(vec![0, 1, 1]));
        let x = TorusPoint::from_rationals(
            &s,
            &[
                Rational::new(2, 7),
                Rational::new(1, 3),
                Rational::new(-4, 9),
            ],
        )
        .unwrap();
        let lhs = EFunctionSpec::new(&g, l1.clone()).unwrap().xi(&x).unwrap()
            * EFunctionSpec::new(&g, l2.clone()).unwrap().xi(&x).unwrap();
        let rhs: Complex64 = product_to_sum(&g, &l1, &l2)
            .unwrap()
            .into_iter()
            .map(|w| EFunctionSpec::new(&g, w).unwrap().xi(&x).unwrap())
            .sum();
        assert!((lhs - rhs).norm() < FORMULA_TOL);
    }
}
