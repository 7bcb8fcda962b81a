//! E-functions `Ξ_λ(x) = Σ_{w ∈ W^e} e^{2πi <wλ, x>}`.
//!
//! The generic sum over the group is the reference evaluation. The per-group
//! closed forms are transcribed exactly as printed, typos included, so that
//! [`crate::verify::errata_report`] can measure how far each one is off.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie_data::{cis_turns, pairing, FactorKind, SemisimpleSystem, TorusPoint, Weight};
use crate::weyl::{EvenGroup, EvenGroupKind};

/// An E-function: a group together with a weight. The images `wλ` are
/// cached sorted, so `Ξ_λ` and `Ξ_{wλ}` add the same terms in the same order.
#[derive(Clone, Debug)]
pub struct EFunctionSpec {
    system: SemisimpleSystem,
    kind: EvenGroupKind,
    lambda: Weight,
    images: Vec<Weight>,
    stab: usize,
}

impl EFunctionSpec {
    pub fn new(group: &EvenGroup, lambda: Weight) -> Result<Self> {
        let system = group.system();
        system.check_dim(lambda.0.len(), "lambda")?;
        let mut images: Vec<Weight> = group
            .elements()
            .iter()
            .map(|g| g.act_weight(&lambda))
            .collect();
        images.sort();
        Ok(EFunctionSpec {
            system: system.clone(),
            kind: group.kind(),
            stab: group.stab_order(&lambda),
            lambda,
            images,
        })
    }

    pub fn system(&self) -> &SemisimpleSystem {
        &self.system
    }

    pub fn kind(&self) -> EvenGroupKind {
        self.kind
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// `d_λ`, the stabilizer order of `λ`.
    pub fn stab_order(&self) -> usize {
        self.stab
    }

    /// `wλ` for every group element, with repetitions, sorted.
    pub fn images(&self) -> &[Weight] {
        &self.images
    }

    /// `Ξ_λ(x)`, summed over every group element.
    pub fn xi(&self, x: &TorusPoint) -> Result<Complex64> {
        self.system.check_dim(x.dim(), "point")?;
        let mut acc = Complex64::new(0.0, 0.0);
        for mu in &self.images {
            acc += cis_turns(pairing(&self.system, mu, x)?);
        }
        Ok(acc)
    }

    /// `E_λ(x)`, summed over distinct orbit members only.
    pub fn xi_orbit(&self, x: &TorusPoint) -> Result<Complex64> {
        self.system.check_dim(x.dim(), "point")?;
        let mut orbit = self.images.clone();
        orbit.dedup();
        let mut acc = Complex64::new(0.0, 0.0);
        for mu in &orbit {
            acc += cis_turns(pairing(&self.system, mu, x)?);
        }
        Ok(acc)
    }

    /// `Ξ_λ` at a real point given in ω∨ coordinates.
    pub fn xi_real(&self, x: &[f64]) -> Complex64 {
        let inv = self.system.inv_cartan().to_f64();
        xi_real_with(&inv, &self.images, x)
    }

    /// The printed closed form for this group and kind, evaluated as written.
    pub fn xi_closed(&self, x: &TorusPoint) -> Result<Complex64> {
        self.system.check_dim(x.dim(), "point")?;
        closed_form(&self.system, self.kind, &self.lambda.0, &x.to_f64())
    }
}

/// Orbit sum at a real point from precomputed images and `C⁻¹` in floats.
pub fn xi_real_with(inv_cartan: &[Vec<f64>], images: &[Weight], x: &[f64]) -> Complex64 {
    let cx: Vec<f64> = inv_cartan
        .iter()
        .map(|row| row.iter().zip(x).map(|(c, s)| c * s).sum())
        .collect();
    let mut acc = Complex64::new(0.0, 0.0);
    for mu in images {
        let p: f64 = mu.0.iter().zip(&cx).map(|(&a, v)| a as f64 * v).sum();
        acc += turns(p);
    }
    acc
}

/// `e^{2πi t}` with `t` reduced to `[0, 1)` first.
fn turns(t: f64) -> Complex64 {
    let r = t - t.floor();
    Complex64::from_polar(1.0, TAU * r)
}

fn cis(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

/// A closed form printed for one group and kind.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ClosedForm {
    pub group: &'static str,
    pub kind: &'static str,
    pub printed: &'static str,
}

/// Every printed closed form, in the order of the five groups.
pub const CLOSED_FORMS: [ClosedForm; 10] = [
    ClosedForm {
        group: "a1xa1",
        kind: "ee",
        printed: "e^{iπ(ax+by)}",
    },
    ClosedForm {
        group: "a1xa1",
        kind: "e",
        printed: "2cos(π(ax+by))",
    },
    ClosedForm {
        group: "a1xa2",
        kind: "ee",
        printed: "e^{iπax}(e^{2πi/3((2b+c)y+(b+2c)z)} + e^{-2πi/3((y+2z)b+(z-y)c)} + e^{-2πi/3((y-z)b+(2y+z)c)})",
    },
    ClosedForm {
        group: "a1xa2",
        kind: "e",
        printed: "e^{iπax}(e^{2πi/3((2b+c)y+(b+2c)z)} + e^{-2πi/3((b-c)y+(2b+c)z)} + e^{-2πi/3((b+2c)y+(c-b)z)}) \
                  + e^{-iπax}(e^{2πi/3((c-b)y+(b+2c)z)} + e^{2πi/3((2b+c)y+(b-c)z)} + e^{-2πi/3((2c+b)y+(c+2b)z)})",
    },
    ClosedForm {
        group: "a1xc2",
        kind: "ee",
        printed: "2e^{iπax}(cos(π((2b+2c)y+(b+2c)z)) + cos(π(2cy-bz)))",
    },
    ClosedForm {
        group: "a1xc2",
        kind: "e",
        printed: "2e^{iπax}(cos(π((2b+2c)y+(b+2c)z)) + cos(π(2cy-bz))) \
                  + 2e^{-iπax}(cos(π(2cy+(b+2c)z)) + cos(π(bz+(2b+2c)y)))",
    },
    ClosedForm {
        group: "a1xg2",
        kind: "ee",
        printed: "2e^{iπax}(cos(2π((2b+c)y+(3b+2c)z)) + 2cos(2π(bx+(3b+c)z)) + 2cos(2π((b+c)y+cz)))",
    },
    ClosedForm {
        group: "a1xg2",
        kind: "e",
        printed: "2e^{iπax}(cos(2π((2b+c)y+(3b+2c)z)) + cos(2π(ay+(3b+c)z)) + cos(2π((b+c)y+cz))) \
                  + 2e^{-iπax}(cos(2π((2b+c)y+(3b+c)z)) + cos(2π(by-cz)) + cos(π((b+c)y+(3b+2c)z)))",
    },
    ClosedForm {
        group: "a1xa1xa1",
        kind: "ee",
        printed: "e^{iπ(ax+by+cz)}",
    },
    ClosedForm {
        group: "a1xa1xa1",
        kind: "e",
        printed: "2e^{iπax}cos π(by+cz) + 2e^{-iπax}cos π(by-cz)",
    },
];

/// A printed closed form that disagrees with the group sum.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Erratum {
    pub group: &'static str,
    pub kind: &'static str,
    pub note: &'static str,
}

/// Closed forms known not to match the orbit sum; `xi` is used for these.
pub const KNOWN_ERRATA: [Erratum; 2] = [
    Erratum {
        group: "a1xg2",
        kind: "ee",
        note: "the second cosine has bx in place of by, and the last two cosines carry a stray factor 2",
    },
    Erratum {
        group: "a1xg2",
        kind: "e",
        note: "the second cosine has ay in place of by, and the last cosine has π in place of 2π",
    },
];

/// Whether the printed closed form for this group and kind is known to be wrong.
pub fn is_known_erratum(system: &SemisimpleSystem, kind: EvenGroupKind) -> bool {
    let sel = system.selector();
    KNOWN_ERRATA
        .iter()
        .any(|e| e.group == sel && e.kind == kind.tag())
}

/// Evaluates the printed closed form for `(system, kind)` at `λ = (a,b,c)`
/// and the real ω∨ coordinates `(x,y,z)`.
pub fn closed_form(
    system: &SemisimpleSystem,
    kind: EvenGroupKind,
    lambda: &[i64],
    x: &[f64],
) -> Result<Complex64> {
    use EvenGroupKind::*;
    use FactorKind::*;

    let unsupported = || Error::UnsupportedFormula {
        group: system.selector(),
        kind: kind.tag().to_string(),
    };
    let kinds: Vec<FactorKind> = system.factors().iter().map(|f| f.kind).collect();
    system.check_dim(lambda.len(), "lambda")?;
    system.check_dim(x.len(), "point")?;
    let l: Vec<f64> = lambda.iter().map(|&v| v as f64).collect();
    let e3 = |t: f64| cis(TAU / 3.0 * t);
    let two = Complex64::new(2.0, 0.0);

    let value = match (kinds.as_slice(), kind) {
        ([A1], _) => cis(PI * l[0] * x[0]),
        ([A1, A1], ProductEven) => cis(PI * (l[0] * x[0] + l[1] * x[1])),
        ([A1, A1], FullEven) => Complex64::new(2.0 * (PI * (l[0] * x[0] + l[1] * x[1])).cos(), 0.0),
        ([A1, A2], _) => {
            let (a, b, c) = (l[0], l[1], l[2]);
            let (x, y, z) = (x[0], x[1], x[2]);
            match kind {
                ProductEven => {
                    cis(PI * a * x)
                        * (e3((2.0 * b + c) * y + (b + 2.0 * c) * z)
                            + e3(-((y + 2.0 * z) * b + (z - y) * c))
                            + e3(-((y - z) * b + (2.0 * y + z) * c)))
                }
                FullEven => {
                    cis(PI * a * x)
                        * (e3((2.0 * b + c) * y + (b + 2.0 * c) * z)
                            + e3(-((b - c) * y + (2.0 * b + c) * z))
                            + e3(-((b + 2.0 * c) * y + (c - b) * z)))
                        + cis(-PI * a * x)
                            * (e3((c - b) * y + (b + 2.0 * c) * z)
                                + e3((2.0 * b + c) * y + (b - c) * z)
                                + e3(-((2.0 * c + b) * y + (c + 2.0 * b) * z)))
                }
            }
        }
        ([A1, C2], _) => {
            let (a, b, c) = (l[0], l[1], l[2]);
            let (x, y, z) = (x[0], x[1], x[2]);
            let first = two
                * cis(PI * a * x)
                * ((PI * ((2.0 * b + 2.0 * c) * y + (b + 2.0 * c) * z)).cos()
                    + (PI * (2.0 * c * y - b * z)).cos());
            match kind {
                ProductEven => first,
                FullEven => {
                    first
                        + two
                            * cis(-PI * a * x)
                            * ((PI * (2.0 * c * y + (b + 2.0 * c) * z)).cos()
                                + (PI * (b * z + (2.0 * b + 2.0 * c) * y)).cos())
                }
            }
        }
        ([A1, G2], _) => {
            let (a, b, c) = (l[0], l[1], l[2]);
            let (x, y, z) = (x[0], x[1], x[2]);
            match kind {
                ProductEven => {
                    two * cis(PI * a * x)
                        * ((TAU * ((2.0 * b + c) * y + (3.0 * b + 2.0 * c) * z)).cos()
                            + 2.0 * (TAU * (b * x + (3.0 * b + c) * z)).cos()
                            + 2.0 * (TAU * ((b + c) * y + c * z)).cos())
                }
                FullEven => {
                    two * cis(PI * a * x)
                        * ((TAU * ((2.0 * b + c) * y + (3.0 * b + 2.0 * c) * z)).cos()
                            + (TAU * (a * y + (3.0 * b + c) * z)).cos()
                            + (TAU * ((b + c) * y + c * z)).cos())
                        + two
                            * cis(-PI * a * x)
                            * ((TAU * ((2.0 * b + c) * y + (3.0 * b + c) * z)).cos()
                                + (TAU * (b * y - c * z)).cos()
                                + (PI * ((b + c) * y + (3.0 * b + 2.0 * c) * z)).cos())
                }
            }
        }
        ([A1, A1, A1], ProductEven) => cis(PI * (l[0] * x[0] + l[1] * x[1] + l[2] * x[2])),
        ([A1, A1, A1], FullEven) => {
            let (a, b, c) = (l[0], l[1], l[2]);
            let (x, y, z) = (x[0], x[1], x[2]);
            two * cis(PI * a * x) * (PI * (b * y + c * z)).cos()
                + two * cis(-PI * a * x) * (PI * (b * y - c * z)).cos()
        }
        _ => return Err(unsupported()),
    };
    Ok(value)
}

/// Closed form where it is trustworthy, the group sum otherwise.
pub fn xi_fast(spec: &EFunctionSpec, x: &TorusPoint) -> Result<Complex64> {
    match closed_form(spec.system(), spec.kind(), &spec.lambda().0, &x.to_f64()) {
        Ok(v) if !is_known_erratum(spec.system(), spec.kind()) => Ok(v),
        _ => spec.xi(x),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_data::{make_system, FactorKind::*, SUPPORTED_SYSTEMS};
    use crate::Rational;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use EvenGroupKind::*;

    fn random_point(rng: &mut ChaCha8Rng, system: &SemisimpleSystem) -> TorusPoint {
        let coords: Vec<Rational> = (0..system.rank())
            .map(|_| Rational::new(rng.random_range(-40..40), rng.random_range(1..13)))
            .collect();
        TorusPoint::from_rationals(system, &coords).unwrap()
    }

    fn random_weight(rng: &mut ChaCha8Rng, n: usize) -> Weight {
        Weight((0..n).map(|_| rng.random_range(-6..7)).collect())
    }

    #[test]
    fn zero_weight_is_group_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for kinds in SUPPORTED_SYSTEMS {
            let s = make_system(kinds).unwrap();
            for kind in [FullEven, ProductEven] {
                let g = EvenGroup::new(&s, kind);
                let spec = EFunctionSpec::new(&g, Weight::zero(s.rank())).unwrap();
                let x = random_point(&mut rng, &s);
                let v = spec.xi(&x).unwrap();
                assert!((v - Complex64::new(g.order() as f64, 0.0)).norm() < 1e-12);
                assert!((spec.xi_orbit(&x).unwrap() - 1.0).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn a1_alone() {
        let s = SemisimpleSystem::simple(A1);
        let g = EvenGroup::new(&s, FullEven);
        assert_eq!(g.order(), 1);
        let spec = EFunctionSpec::new(&g, Weight(vec![3])).unwrap();
        let x = TorusPoint::from_rationals(&s, &[Rational::new(1, 5)]).unwrap();
        let expected = cis(PI * 3.0 / 5.0);
        assert!((spec.xi(&x).unwrap() - expected).norm() < 1e-14);
        assert!((spec.xi_closed(&x).unwrap() - expected).norm() < 1e-14);
    }

    #[test]
    fn a1xa1_cosine() {
        let s = make_system(&[A1, A1]).unwrap();
        let g = EvenGroup::new(&s, FullEven);
        let spec = EFunctionSpec::new(&g, Weight(vec![1, 1])).unwrap();
        let x =
            TorusPoint::from_rationals(&s, &[Rational::new(1, 3), Rational::new(1, 2)]).unwrap();
        let v = spec.xi(&x).unwrap();
        assert!((v.re - 2.0 * (5.0 * PI / 6.0).cos()).abs() < 1e-14);
        assert!(v.im.abs() < 1e-14);
    }

    #[test]
    fn orbit_sum_times_stabilizer() {
        let s = make_system(&[A1, G2]).unwrap();
        let g = EvenGroup::new(&s, FullEven);
        let spec = EFunctionSpec::new(&g, Weight(vec![2, 0, 0])).unwrap();
        assert_eq!(spec.stab_order(), 6);
        let x = TorusPoint::from_rationals(
            &s,
            &[
                Rational::new(1, 7),
                Rational::new(2, 7),
                Rational::new(-3, 11),
            ],
        )
        .unwrap();
        assert!((spec.xi(&x).unwrap() - spec.xi_orbit(&x).unwrap() * 6.0).norm() < 1e-12);
    }

    #[test]
    fn invariance_periodicity_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for kinds in SUPPORTED_SYSTEMS {
            let s = make_system(kinds).unwrap();
            for kind in [FullEven, ProductEven] {
                let g = EvenGroup::new(&s, kind);
                for _ in 0..5 {
                    let lambda = random_weight(&mut rng, s.rank());
                    let spec = EFunctionSpec::new(&g, lambda.clone()).unwrap();
                    let neg = EFunctionSpec::new(&g, -&lambda).unwrap();
                    let x = random_point(&mut rng, &s);
                    let v = spec.xi(&x).unwrap();
                    for w in g.elements() {
                        assert!((spec.xi(&w.act_point(&x)).unwrap() - v).norm() < 1e-12);
                        let moved = EFunctionSpec::new(&g, w.act_weight(&lambda)).unwrap();
                        assert_eq!(moved.xi(&x).unwrap(), v);
                    }
                    for i in 0..s.rank() {
                        let shift: Vec<i64> = (0..s.rank()).map(|j| s.cartan().get(j, i)).collect();
                        assert!((spec.xi(&x.translate(&shift)).unwrap() - v).norm() < 1e-12);
                    }
                    assert!((v.conj() - neg.xi(&x).unwrap()).norm() < 1e-12);
                    assert!(
                        (spec.xi(&x).unwrap()
                            - spec.xi_orbit(&x).unwrap() * spec.stab_order() as f64)
                            .norm()
                            < 1e-12
                    );
                    assert!((spec.xi_real(&x.to_f64()) - v).norm() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn closed_forms_match_except_errata() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for kinds in SUPPORTED_SYSTEMS {
            let s = make_system(kinds).unwrap();
            for kind in [FullEven, ProductEven] {
                let g = EvenGroup::new(&s, kind);
                let mut worst: f64 = 0.0;
                for _ in 0..50 {
                    let spec = EFunctionSpec::new(&g, random_weight(&mut rng, s.rank())).unwrap();
                    let x = random_point(&mut rng, &s);
                    worst = worst.max((spec.xi_closed(&x).unwrap() - spec.xi(&x).unwrap()).norm());
                }
                if is_known_erratum(&s, kind) {
                    assert!(worst > 1e-6, "{s} {kind}: listed erratum matches ({worst})");
                } else {
                    assert!(worst < 1e-10, "{s} {kind}: deviation {worst}");
                }
            }
        }
    }

    #[test]
    fn g2_errata_notes_describe_the_fix() {
        let s = make_system(&[A1, G2]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let cos2 = |t: f64| (TAU * t).cos();
        for kind in [ProductEven, FullEven] {
            let g = EvenGroup::new(&s, kind);
            for _ in 0..20 {
                let spec = EFunctionSpec::new(&g, random_weight(&mut rng, 3)).unwrap();
                let p = random_point(&mut rng, &s);
                let [a, b, c]: [f64; 3] = std::array::from_fn(|i| spec.lambda().0[i] as f64);
                let [x, y, z]: [f64; 3] = p.to_f64().try_into().unwrap();
                let mut v = 2.0
                    * cis(PI * a * x)
                    * (cos2((2.0 * b + c) * y + (3.0 * b + 2.0 * c) * z)
                        + cos2(b * y + (3.0 * b + c) * z)
                        + cos2((b + c) * y + c * z));
                if kind == FullEven {
                    v += 2.0
                        * cis(-PI * a * x)
                        * (cos2((2.0 * b + c) * y + (3.0 * b + c) * z)
                            + cos2(b * y - c * z)
                            + cos2((b + c) * y + (3.0 * b + 2.0 * c) * z));
                }
                assert!((v - spec.xi(&p).unwrap()).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn every_system_kind_has_a_closed_form() {
        for kinds in SUPPORTED_SYSTEMS {
            let s = make_system(kinds).unwrap();
            for kind in [FullEven, ProductEven] {
                assert!(CLOSED_FORMS
                    .iter()
                    .any(|c| c.group == s.selector() && c.kind == kind.tag()));
                assert!(closed_form(&s, kind, &vec![0; s.rank()], &vec![0.0; s.rank()]).is_ok());
            }
        }
        let s = SemisimpleSystem::simple(G2);
        assert!(matches!(
            closed_form(&s, FullEven, &[0, 0], &[0.0, 0.0]),
            Err(Error::UnsupportedFormula { .. })
        ));
    }

    proptest! {
        #[test]
        fn magnitude_bounded_by_order(a in -20i64..20, b in -20i64..20, c in -20i64..20,
                                      p in -50i64..50, q in -50i64..50, r in -50i64..50) {
            let s = make_system(&[A1, C2]).unwrap();
            let g = EvenGroup::new(&s, FullEven);
            let spec = EFunctionSpec::new(&g, Weight(vec![a, b, c])).unwrap();
            let x = TorusPoint::on_grid(vec![p, q, r], vec![7, 7, 7]);
            prop_assert!(spec.xi(&x).unwrap().norm() <= g.order() as f64 + 1e-12);
        }
    }
}
