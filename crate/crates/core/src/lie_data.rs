//! Root-system data of the simple factors A1, A2, C2, G2 and the semisimple
//! systems assembled from them.
//!
//! Weights carry integer coordinates in the basis of fundamental weights,
//! torus points carry rational coordinates in the basis of fundamental
//! coweights. With this choice `<ω_i, ω∨_j> = (C⁻¹)_ij`, so the pairing of a
//! weight `a` with a point `s` is `aᵀ C⁻¹ s`. Long roots have squared length 2.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, RatMatrix};
use crate::Rational;

/// The simple factors that occur in the rank ≤ 3 semisimple systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FactorKind {
    A1,
    A2,
    C2,
    G2,
}

impl FactorKind {
    pub fn name(self) -> &'static str {
        match self {
            FactorKind::A1 => "a1",
            FactorKind::A2 => "a2",
            FactorKind::C2 => "c2",
            FactorKind::G2 => "g2",
        }
    }
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FactorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a1" => Ok(FactorKind::A1),
            "a2" => Ok(FactorKind::A2),
            "c2" => Ok(FactorKind::C2),
            "g2" => Ok(FactorKind::G2),
            other => Err(Error::Config(format!("unknown simple factor '{other}'"))),
        }
    }
}

/// Immutable data of one simple factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleFactor {
    pub kind: FactorKind,
    pub rank: usize,
    pub cartan: IntMatrix,
    /// Highest-root coefficients; the coefficients of the alcove inequality.
    pub marks: Vec<i64>,
    /// Highest dual root coefficients.
    pub dual_marks: Vec<i64>,
    /// `<α_i, α_i> / 2`.
    pub half_lengths: Vec<Rational>,
    pub weyl_order: usize,
}

impl SimpleFactor {
    pub fn new(kind: FactorKind) -> Self {
        let r = Rational::new;
        let (cartan, marks, dual_marks, half_lengths, weyl_order) = match kind {
            FactorKind::A1 => (vec![vec![2]], vec![1], vec![1], vec![r(1, 1)], 2),
            FactorKind::A2 => (
                vec![vec![2, -1], vec![-1, 2]],
                vec![1, 1],
                vec![1, 1],
                vec![r(1, 1), r(1, 1)],
                6,
            ),
            // α1 short, α2 long
            FactorKind::C2 => (
                vec![vec![2, -1], vec![-2, 2]],
                vec![2, 1],
                vec![1, 2],
                vec![r(1, 2), r(1, 1)],
                8,
            ),
            // α1 long, α2 short
            FactorKind::G2 => (
                vec![vec![2, -3], vec![-1, 2]],
                vec![2, 3],
                vec![3, 2],
                vec![r(1, 1), r(1, 3)],
                12,
            ),
        };
        SimpleFactor {
            kind,
            rank: cartan.len(),
            cartan: IntMatrix::from_rows(cartan),
            marks,
            dual_marks,
            half_lengths,
            weyl_order,
        }
    }

    /// `C · diag(d)`, the Gram matrix of the simple roots.
    pub fn root_gram(&self) -> RatMatrix {
        let n = self.rank;
        RatMatrix::from_rows(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            Rational::from_integer(self.cartan.get(i, j)) * self.half_lengths[j]
                        })
                        .collect()
                })
                .collect(),
        )
    }
}

/// A semisimple system: an ordered product of simple factors with
/// block-diagonal Cartan matrix. Coordinates are flat length-`n` vectors;
/// `offsets[f]` is the first coordinate owned by factor `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleSystem {
    factors: Vec<SimpleFactor>,
    offsets: Vec<usize>,
    n: usize,
    cartan: IntMatrix,
    inv_cartan: RatMatrix,
    det_cartan: i64,
}

/// The five factor lists this crate supports.
pub const SUPPORTED_SYSTEMS: [&[FactorKind]; 5] = [
    &[FactorKind::A1, FactorKind::A1],
    &[FactorKind::A1, FactorKind::A2],
    &[FactorKind::A1, FactorKind::C2],
    &[FactorKind::A1, FactorKind::G2],
    &[FactorKind::A1, FactorKind::A1, FactorKind::A1],
];

/// Selector strings of the supported systems, in the order of
/// [`SUPPORTED_SYSTEMS`].
pub const SELECTORS: [&str; 5] = ["a1xa1", "a1xa2", "a1xc2", "a1xg2", "a1xa1xa1"];

/// Builds one of the five supported semisimple systems.
pub fn make_system(kinds: &[FactorKind]) -> Result<SemisimpleSystem> {
    if !SUPPORTED_SYSTEMS.contains(&kinds) {
        let names: Vec<_> = kinds.iter().map(|k| k.name()).collect();
        return Err(Error::Config(format!(
            "unsupported factor list [{}]; expected one of {}",
            names.join(", "),
            SELECTORS.join(", ")
        )));
    }
    Ok(SemisimpleSystem::assemble(kinds))
}

impl SemisimpleSystem {
    fn assemble(kinds: &[FactorKind]) -> Self {
        let factors: Vec<SimpleFactor> = kinds.iter().copied().map(SimpleFactor::new).collect();
        let mut offsets = Vec::with_capacity(factors.len());
        let mut n = 0;
        for f in &factors {
            offsets.push(n);
            n += f.rank;
        }
        let blocks: Vec<IntMatrix> = factors.iter().map(|f| f.cartan.clone()).collect();
        let cartan = IntMatrix::block_diagonal(&blocks);
        let det_cartan = cartan.determinant();
        let inv_cartan = cartan.inverse().expect("Cartan matrices are nonsingular");
        SemisimpleSystem {
            factors,
            offsets,
            n,
            cartan,
            inv_cartan,
            det_cartan,
        }
    }

    /// A single simple factor viewed as a (trivially semisimple) system.
    /// Used for the one-factor checks; the CLI only exposes the five products.
    pub fn simple(kind: FactorKind) -> Self {
        Self::assemble(&[kind])
    }

    pub fn from_selector(selector: &str) -> Result<Self> {
        let kinds = selector
            .split('x')
            .map(FactorKind::from_str)
            .collect::<Result<Vec<_>>>()
            .map_err(|_| {
                Error::Config(format!(
                    "unknown group '{selector}'; expected one of {}",
                    SELECTORS.join(", ")
                ))
            })?;
        make_system(&kinds)
    }

    pub fn selector(&self) -> String {
        self.factors
            .iter()
            .map(|f| f.kind.name())
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Coordinate range owned by factor `f`.
    pub fn block(&self, f: usize) -> std::ops::Range<usize> {
        self.offsets[f]..self.offsets[f] + self.factors[f].rank
    }

    /// Factor owning coordinate `i`.
    pub fn factor_of(&self, i: usize) -> usize {
        self.offsets
            .iter()
            .rposition(|&o| o <= i)
            .expect("coordinate in range")
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn inv_cartan(&self) -> &RatMatrix {
        &self.inv_cartan
    }

    pub fn det_cartan(&self) -> i64 {
        self.det_cartan
    }

    pub fn weyl_order(&self) -> usize {
        self.factors.iter().map(|f| f.weyl_order).product()
    }

    /// Factor whose first simple reflection glues the second half of the
    /// full-even fundamental domain: the first factor of maximal rank.
    pub fn reflecting_factor(&self) -> usize {
        let max = self.factors.iter().map(|f| f.rank).max().unwrap_or(0);
        self.factors.iter().position(|f| f.rank == max).unwrap_or(0)
    }

    /// `diag(d)` over all coordinates.
    pub fn half_lengths(&self) -> Vec<Rational> {
        self.factors
            .iter()
            .flat_map(|f| f.half_lengths.iter().copied())
            .collect()
    }

    pub(crate) fn check_dim(&self, len: usize, what: &str) -> Result<()> {
        if len != self.n {
            return Err(Error::usage(format!(
                "{what} has {len} coordinates but {} has rank {}",
                self.selector(),
                self.n
            )));
        }
        Ok(())
    }
}

impl fmt::Display for SemisimpleSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.selector())
    }
}

/// A weight in the ω basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl std::ops::Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl std::ops::Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// A point `Σ (numerators_i / denominators_i) ω∨_i` of the torus.
///
/// Denominators are positive and constant over each factor's block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorusPoint {
    pub numerators: Vec<i64>,
    pub denominators: Vec<i64>,
}

impl TorusPoint {
    pub fn origin(n: usize) -> Self {
        TorusPoint {
            numerators: vec![0; n],
            denominators: vec![1; n],
        }
    }

    /// A point of `(1/M_f) P∨` with the per-factor moduli expanded to
    /// coordinates.
    pub fn on_grid(numerators: Vec<i64>, denominators: Vec<i64>) -> Self {
        debug_assert_eq!(numerators.len(), denominators.len());
        TorusPoint {
            numerators,
            denominators,
        }
    }

    /// Builds a point from arbitrary rationals, bringing each factor block to
    /// a common denominator.
    pub fn from_rationals(system: &SemisimpleSystem, coords: &[Rational]) -> Result<Self> {
        system.check_dim(coords.len(), "point")?;
        let mut numerators = vec![0; coords.len()];
        let mut denominators = vec![1; coords.len()];
        for f in 0..system.factor_count() {
            let block = system.block(f);
            let den = coords[block.clone()]
                .iter()
                .fold(1i64, |acc, q| acc.lcm(q.denom()));
            for i in block {
                numerators[i] = coords[i].numer() * (den / coords[i].denom());
                denominators[i] = den;
            }
        }
        Ok(TorusPoint {
            numerators,
            denominators,
        })
    }

    pub fn dim(&self) -> usize {
        self.numerators.len()
    }

    pub fn coords(&self) -> Vec<Rational> {
        self.numerators
            .iter()
            .zip(&self.denominators)
            .map(|(&n, &d)| Rational::new(n, d))
            .collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.numerators
            .iter()
            .zip(&self.denominators)
            .map(|(&n, &d)| n as f64 / d as f64)
            .collect()
    }

    /// Adds an integer coweight vector (in ω∨ coordinates).
    pub fn translate(&self, shift: &[i64]) -> Self {
        TorusPoint {
            numerators: self
                .numerators
                .iter()
                .zip(shift)
                .zip(&self.denominators)
                .map(|((n, s), d)| n + s * d)
                .collect(),
            denominators: self.denominators.clone(),
        }
    }
}

/// Exact `<λ, x>`.
pub fn pairing(system: &SemisimpleSystem, lambda: &Weight, x: &TorusPoint) -> Result<Rational> {
    system.check_dim(lambda.0.len(), "weight")?;
    system.check_dim(x.dim(), "point")?;
    let inv = system.inv_cartan();
    let mut acc = Rational::zero();
    for (i, &a) in lambda.0.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for j in system.block(system.factor_of(i)) {
            let s = Rational::new(x.numerators[j], x.denominators[j]);
            acc += inv.get(i, j) * s * a;
        }
    }
    Ok(acc)
}

/// `e^{2πi <λ, x>}` with the phase reduced modulo 1 before rounding.
pub fn exp_phase(system: &SemisimpleSystem, lambda: &Weight, x: &TorusPoint) -> Result<Complex64> {
    Ok(cis_turns(pairing(system, lambda, x)?))
}

/// `e^{2πi r}` for a rational number of turns `r`.
///
/// `r` is reduced modulo 1 exactly and split into whole quarter turns, which
/// are applied without rounding; only the remaining angle in `[0, π/2)` goes
/// through `sin`/`cos`.
pub fn cis_turns(r: Rational) -> Complex64 {
    cis_fraction(i128::from(*r.numer()), i128::from(*r.denom()))
}

/// `e^{2πi num/den}` for `den > 0`.
pub(crate) fn cis_fraction(num: i128, den: i128) -> Complex64 {
    debug_assert!(den > 0);
    let p = num.rem_euclid(den);
    let scaled = 4 * p;
    let quarter = scaled / den;
    let rem = scaled % den;
    let theta = TAU * (rem as f64) / (4.0 * den as f64);
    let (s, c) = theta.sin_cos();
    match quarter {
        0 => Complex64::new(c, s),
        1 => Complex64::new(-s, c),
        2 => Complex64::new(-c, -s),
        _ => Complex64::new(s, -c),
    }
}

/// Gram matrix `<ω∨_i, ω∨_j> = (C⁻ᵀ D⁻¹)_ij` of the fundamental coweights.
pub fn coweight_gram(system: &SemisimpleSystem) -> RatMatrix {
    let inv_t = system.inv_cartan().transpose();
    let d = system.half_lengths();
    let n = system.rank();
    RatMatrix::from_rows(
        (0..n)
            .map(|i| (0..n).map(|j| inv_t.get(i, j) / d[j]).collect())
            .collect(),
    )
}

/// Matrix `R` with `Rᵀ R` equal to the coweight Gram matrix (Cholesky), so
/// `u = R s` maps ω∨ coordinates to Cartesian ones preserving lengths.
pub fn cartesian_embedding(system: &SemisimpleSystem) -> Vec<Vec<f64>> {
    let g = coweight_gram(system).to_f64();
    let n = g.len();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let partial: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
            if i == j {
                l[i][i] = (g[i][i] - partial).sqrt();
            } else {
                l[i][j] = (g[i][j] - partial) / l[j][j];
            }
        }
    }
    (0..n).map(|i| (0..n).map(|j| l[j][i]).collect()).collect()
}

/// Gram matrix `<α∨_i, α∨_j> = (D⁻¹ C)_ij` of the simple coroots.
pub fn coroot_gram(system: &SemisimpleSystem) -> RatMatrix {
    let d = system.half_lengths();
    let n = system.rank();
    RatMatrix::from_rows(
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Rational::from_integer(system.cartan().get(i, j)) / d[i])
                    .collect()
            })
            .collect(),
    )
}

/// Integer form of the pairing on a fixed grid: for weights `a` and grid
/// numerators `s` (denominator `M_f` on factor `f`),
/// `<a, s/M> = (aᵀ B s) / L` with `L = lcm_f(det C_f · M_f)`.
#[derive(Clone, Debug)]
pub struct PhaseKernel {
    modulus: i64,
    form: IntMatrix,
    table: Vec<Complex64>,
}

impl PhaseKernel {
    /// `moduli` holds one modulus per factor.
    pub fn new(system: &SemisimpleSystem, moduli: &[i64]) -> Self {
        assert_eq!(moduli.len(), system.factor_count());
        let modulus = system
            .factors()
            .iter()
            .zip(moduli)
            .fold(1i64, |acc, (f, &m)| acc.lcm(&(f.cartan.determinant() * m)));
        let n = system.rank();
        let mut form = IntMatrix::zeros(n);
        for (fi, f) in system.factors().iter().enumerate() {
            let adj = f.cartan.adjugate();
            let scale = modulus / (f.cartan.determinant() * moduli[fi]);
            let off = system.offsets()[fi];
            for i in 0..f.rank {
                for j in 0..f.rank {
                    form.set(off + i, off + j, adj.get(i, j) * scale);
                }
            }
        }
        let table = (0..modulus)
            .map(|k| cis_fraction(i128::from(k), i128::from(modulus)))
            .collect();
        PhaseKernel {
            modulus,
            form,
            table,
        }
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    /// `aᵀ B s mod L`.
    pub fn phase_index(&self, a: &[i64], s: &[i64]) -> usize {
        let bs = self.form.apply(s);
        let k: i64 = a.iter().zip(&bs).map(|(x, y)| x * y).sum();
        k.rem_euclid(self.modulus) as usize
    }

    pub fn exp(&self, a: &[i64], s: &[i64]) -> Complex64 {
        self.table[self.phase_index(a, s)]
    }

    /// Precomputes `B s` so repeated pairings against one point are a dot
    /// product.
    pub fn transform_point(&self, s: &[i64]) -> Vec<i64> {
        self.form.apply(s)
    }

    pub fn exp_pretransformed(&self, a: &[i64], bs: &[i64]) -> Complex64 {
        let k: i64 = a.iter().zip(bs).map(|(x, y)| x * y).sum();
        self.table[k.rem_euclid(self.modulus) as usize]
    }
}

/// `<λ, x>` for a real point given in ω∨ coordinates.
pub fn pairing_f64(inv_cartan: &[Vec<f64>], lambda: &[i64], x: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (i, &a) in lambda.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let row: f64 = inv_cartan[i].iter().zip(x).map(|(c, s)| c * s).sum();
        acc += a as f64 * row;
    }
    acc
}
