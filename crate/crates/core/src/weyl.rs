//! Weyl groups of the semisimple systems and their two even subgroups, as
//! explicit lists of integer matrices.
//!
//! The simple reflection `r_i` acts on weight coordinates by
//! `a_j ↦ a_j − a_i c_ij` and on coweight coordinates by `s_j ↦ s_j − s_i c_ji`.
//! Torus points are compared modulo `Q∨` and weights modulo `M Q` through the
//! fractional parts of their pairings with the dual bases, which is exact.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie_data::{SemisimpleSystem, TorusPoint, Weight};
use crate::linalg::IntMatrix;
use crate::Rational;

/// A Weyl group element acting on weights and on coweights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub weight_matrix: IntMatrix,
    pub coweight_matrix: IntMatrix,
    pub det: i64,
}

impl GroupElement {
    pub fn identity(n: usize) -> Self {
        GroupElement {
            weight_matrix: IntMatrix::identity(n),
            coweight_matrix: IntMatrix::identity(n),
            det: 1,
        }
    }

    /// The simple reflection `r_i` (global root index `i`).
    pub fn reflection(system: &SemisimpleSystem, i: usize) -> Self {
        let n = system.rank();
        let c = system.cartan();
        let mut w = IntMatrix::identity(n);
        let mut v = IntMatrix::identity(n);
        for j in 0..n {
            w.set(j, i, w.get(j, i) - c.get(i, j));
            v.set(j, i, v.get(j, i) - c.get(j, i));
        }
        GroupElement {
            weight_matrix: w,
            coweight_matrix: v,
            det: -1,
        }
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            weight_matrix: &self.weight_matrix * &other.weight_matrix,
            coweight_matrix: &self.coweight_matrix * &other.coweight_matrix,
            det: self.det * other.det,
        }
    }

    pub fn act_weight(&self, lambda: &Weight) -> Weight {
        Weight(self.weight_matrix.apply(&lambda.0))
    }

    pub fn act_point(&self, x: &TorusPoint) -> TorusPoint {
        TorusPoint {
            numerators: self.coweight_matrix.apply(&x.numerators),
            denominators: x.denominators.clone(),
        }
    }

    /// Acts on a real point in ω∨ coordinates.
    pub fn act_real(&self, x: &[f64]) -> Vec<f64> {
        self.coweight_matrix
            .rows()
            .iter()
            .map(|r| r.iter().zip(x).map(|(&a, b)| a as f64 * b).sum())
            .collect()
    }

    /// Determinant of the restriction to factor `f`'s block.
    fn block_det(&self, system: &SemisimpleSystem, f: usize) -> i64 {
        let block = system.block(f);
        let rows = block
            .clone()
            .map(|i| {
                block
                    .clone()
                    .map(|j| self.weight_matrix.get(i, j))
                    .collect()
            })
            .collect();
        IntMatrix::from_rows(rows).determinant()
    }
}

/// Which even subgroup of `W = W_1 × … × W_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EvenGroupKind {
    /// `{w ∈ W | det w = 1}`.
    FullEven,
    /// `W_1^e × … × W_k^e`.
    ProductEven,
}

impl EvenGroupKind {
    /// The short tag used in files and on the command line.
    pub fn tag(self) -> &'static str {
        match self {
            EvenGroupKind::FullEven => "e",
            EvenGroupKind::ProductEven => "ee",
        }
    }
}

impl fmt::Display for EvenGroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for EvenGroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(EvenGroupKind::FullEven),
            "ee" => Ok(EvenGroupKind::ProductEven),
            other => Err(Error::parse(
                "kind",
                format!("expected 'e' or 'ee', got '{other}'"),
            )),
        }
    }
}

/// Per-factor grid moduli. The full even group uses one `M` for every factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Moduli(Vec<i64>);

impl Moduli {
    /// Validates `ms` against the kind: `FullEven` takes exactly one modulus,
    /// `ProductEven` one per factor.
    pub fn new(system: &SemisimpleSystem, kind: EvenGroupKind, ms: &[i64]) -> Result<Self> {
        if let Some(bad) = ms.iter().find(|&&m| m < 1) {
            return Err(Error::usage(format!("M must be at least 1, got {bad}")));
        }
        match kind {
            EvenGroupKind::FullEven => {
                if ms.len() != 1 {
                    return Err(Error::usage(format!(
                        "kind e takes exactly one M, got {}",
                        ms.len()
                    )));
                }
                Ok(Moduli(vec![ms[0]; system.factor_count()]))
            }
            EvenGroupKind::ProductEven => {
                if ms.len() != system.factor_count() {
                    return Err(Error::usage(format!(
                        "kind ee on {} takes {} values of M, got {}",
                        system.selector(),
                        system.factor_count(),
                        ms.len()
                    )));
                }
                Ok(Moduli(ms.to_vec()))
            }
        }
    }

    pub fn per_factor(&self) -> &[i64] {
        &self.0
    }

    /// The moduli as given by the caller: one value for `FullEven`.
    pub fn as_given(&self, kind: EvenGroupKind) -> Vec<i64> {
        match kind {
            EvenGroupKind::FullEven => vec![self.0[0]],
            EvenGroupKind::ProductEven => self.0.clone(),
        }
    }

    /// Modulus owning each coordinate.
    pub fn per_coordinate(&self, system: &SemisimpleSystem) -> Vec<i64> {
        (0..system.rank())
            .map(|i| self.0[system.factor_of(i)])
            .collect()
    }

    /// `Π_f M_f^{rank_f}`.
    pub fn volume_factor(&self, system: &SemisimpleSystem) -> i64 {
        system
            .factors()
            .iter()
            .zip(&self.0)
            .map(|(f, &m)| m.pow(f.rank as u32))
            .product()
    }
}

/// Closure of the simple reflections, sorted canonically.
pub fn generate_weyl(system: &SemisimpleSystem) -> Vec<GroupElement> {
    let n = system.rank();
    let generators: Vec<GroupElement> = (0..n)
        .map(|i| GroupElement::reflection(system, i))
        .collect();
    let mut seen: HashSet<GroupElement> = HashSet::new();
    let mut queue = VecDeque::from([GroupElement::identity(n)]);
    while let Some(g) = queue.pop_front() {
        if seen.contains(&g) {
            continue;
        }
        for r in &generators {
            let next = g.compose(r);
            if !seen.contains(&next) {
                queue.push_back(next);
            }
        }
        seen.insert(g);
        assert!(
            seen.len() <= system.weyl_order(),
            "closure exceeded the Weyl group order"
        );
    }
    let mut elements: Vec<GroupElement> = seen.into_iter().collect();
    elements.sort();
    assert_eq!(elements.len(), system.weyl_order());
    elements
}

/// An even subgroup of the Weyl group together with the system it acts on.
#[derive(Clone, Debug)]
pub struct EvenGroup {
    system: SemisimpleSystem,
    kind: EvenGroupKind,
    elements: Vec<GroupElement>,
}

/// Filters the Weyl group down to the requested even subgroup.
pub fn even_subgroup(system: &SemisimpleSystem, kind: EvenGroupKind) -> EvenGroup {
    let elements = generate_weyl(system)
        .into_iter()
        .filter(|g| match kind {
            EvenGroupKind::FullEven => g.det == 1,
            EvenGroupKind::ProductEven => {
                (0..system.factor_count()).all(|f| g.block_det(system, f) == 1)
            }
        })
        .collect();
    EvenGroup {
        system: system.clone(),
        kind,
        elements,
    }
}

impl EvenGroup {
    pub fn new(system: &SemisimpleSystem, kind: EvenGroupKind) -> Self {
        even_subgroup(system, kind)
    }

    pub fn system(&self) -> &SemisimpleSystem {
        &self.system
    }

    pub fn kind(&self) -> EvenGroupKind {
        self.kind
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// `W^e λ`, sorted.
    pub fn orbit(&self, lambda: &Weight) -> BTreeSet<Weight> {
        self.elements.iter().map(|g| g.act_weight(lambda)).collect()
    }

    /// `|{w : wλ = λ}|`.
    pub fn stab_order(&self, lambda: &Weight) -> usize {
        self.elements
            .iter()
            .filter(|g| g.act_weight(lambda) == *lambda)
            .count()
    }

    /// `|W^e x|` in `ℝⁿ/Q∨`.
    pub fn torus_orbit_size(&self, x: &TorusPoint) -> usize {
        self.elements
            .iter()
            .map(|g| coroot_class(&self.system, &g.act_point(x)))
            .collect::<HashSet<_>>()
            .len()
    }

    /// `|{w : wλ ≡ λ mod M Q}|`.
    pub fn weight_stab_mod_mq(&self, lambda: &Weight, moduli: &Moduli) -> usize {
        let key = root_class(&self.system, lambda, moduli);
        self.elements
            .iter()
            .filter(|g| root_class(&self.system, &g.act_weight(lambda), moduli) == key)
            .count()
    }

    /// Lexicographically smallest member of the orbit.
    pub fn orbit_min(&self, lambda: &Weight) -> Weight {
        self.elements
            .iter()
            .map(|g| g.act_weight(lambda))
            .min()
            .expect("groups are nonempty")
    }
}

fn frac(q: Rational) -> Rational {
    q - q.floor()
}

/// Class of `x` in `ℝⁿ/Q∨`: the fractional parts of `<ω_i, x> = (C⁻¹ s)_i`.
/// Two points are congruent mod `Q∨` iff their classes are equal.
pub fn coroot_class(system: &SemisimpleSystem, x: &TorusPoint) -> Vec<Rational> {
    system
        .inv_cartan()
        .apply(&x.coords())
        .into_iter()
        .map(frac)
        .collect()
}

pub fn congruent_mod_coroots(system: &SemisimpleSystem, x: &TorusPoint, y: &TorusPoint) -> bool {
    coroot_class(system, x) == coroot_class(system, y)
}

/// Class of `λ` in `P / M Q`: the fractional parts of `<λ, ω∨_j> / M_f`,
/// i.e. of `(C⁻ᵀ a)_j / M_f`.
pub fn root_class(system: &SemisimpleSystem, lambda: &Weight, moduli: &Moduli) -> Vec<Rational> {
    let inv_t = system.inv_cartan().transpose();
    let a: Vec<Rational> = lambda
        .0
        .iter()
        .map(|&v| Rational::from_integer(v))
        .collect();
    inv_t
        .apply(&a)
        .into_iter()
        .enumerate()
        .map(|(j, q)| frac(q / moduli.per_factor()[system.factor_of(j)]))
        .collect()
}

/// Whether `λ ∈ M Q` (per-factor moduli).
pub fn in_scaled_root_lattice(system: &SemisimpleSystem, lambda: &Weight, moduli: &Moduli) -> bool {
    root_class(system, lambda, moduli).iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_data::{make_system, pairing, FactorKind, SUPPORTED_SYSTEMS};

    fn sys(kinds: &[FactorKind]) -> SemisimpleSystem {
        make_system(kinds).unwrap()
    }

    use FactorKind::*;

    #[test]
    fn weyl_orders() {
        assert_eq!(generate_weyl(&sys(&[A1, A1])).len(), 4);
        assert_eq!(generate_weyl(&sys(&[A1, A2])).len(), 12);
        assert_eq!(generate_weyl(&sys(&[A1, G2])).len(), 24);
        assert_eq!(generate_weyl(&sys(&[A1, C2])).len(), 16);
        assert_eq!(generate_weyl(&sys(&[A1, A1, A1])).len(), 8);
    }

    #[test]
    fn even_orders() {
        let expected = [(2, 1), (6, 3), (8, 4), (12, 6), (4, 1)];
        for (kinds, (e, ee)) in SUPPORTED_SYSTEMS.iter().zip(expected) {
            let s = sys(kinds);
            let full = even_subgroup(&s, EvenGroupKind::FullEven);
            let prod = even_subgroup(&s, EvenGroupKind::ProductEven);
            assert_eq!(full.order(), e, "{s}");
            assert_eq!(prod.order(), ee, "{s}");
            assert!(prod.elements().iter().all(|g| full.elements().contains(g)));
            // closure
            for a in full.elements() {
                for b in full.elements() {
                    assert!(full.elements().contains(&a.compose(b)));
                }
            }
            let all = generate_weyl(&s);
            for g in &all {
                assert_eq!(g.det, g.weight_matrix.determinant());
                assert_eq!(g.det, g.coweight_matrix.determinant());
                assert_eq!(full.elements().contains(g), g.det == 1);
            }
        }
    }

    #[test]
    fn reflections_are_involutions_preserving_pairing() {
        for kinds in SUPPORTED_SYSTEMS {
            let s = sys(kinds);
            let n = s.rank();
            for i in 0..n {
                let r = GroupElement::reflection(&s, i);
                assert_eq!(r.compose(&r), GroupElement::identity(n));
                for row in 0..n {
                    for col in 0..n {
                        let expected = i64::from(row == col)
                            - if col == i { s.cartan().get(i, row) } else { 0 };
                        assert_eq!(r.weight_matrix.get(row, col), expected);
                    }
                }
            }
            for g in generate_weyl(&s) {
                for i in 0..n {
                    for j in 0..n {
                        let mut a = vec![0; n];
                        a[i] = 1;
                        let mut num = vec![0; n];
                        num[j] = 1;
                        let lam = Weight(a);
                        let x = TorusPoint::on_grid(num, vec![1; n]);
                        assert_eq!(
                            pairing(&s, &g.act_weight(&lam), &g.act_point(&x)).unwrap(),
                            pairing(&s, &lam, &x).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let s = sys(&[A1, A1]);
        let g = even_subgroup(&s, EvenGroupKind::FullEven);
        let orbit: Vec<_> = g.orbit(&Weight(vec![3, 5])).into_iter().collect();
        assert_eq!(orbit, vec![Weight(vec![-3, -5]), Weight(vec![3, 5])]);
        assert_eq!(g.orbit(&Weight::zero(2)).len(), 1);

        let s = sys(&[A1, A2]);
        let g = even_subgroup(&s, EvenGroupKind::ProductEven);
        let (a, b, c) = (2, 3, 7);
        let expected: BTreeSet<Weight> = [vec![a, b, c], vec![a, c, -b - c], vec![a, -b - c, b]]
            .into_iter()
            .map(Weight)
            .collect();
        assert_eq!(g.orbit(&Weight(vec![a, b, c])), expected);
    }

    #[test]
    fn stabilizer_examples() {
        let g = even_subgroup(&sys(&[A1, G2]), EvenGroupKind::FullEven);
        assert_eq!(g.stab_order(&Weight(vec![4, 0, 0])), 6);
        let g = even_subgroup(&sys(&[A1, C2]), EvenGroupKind::FullEven);
        assert_eq!(g.stab_order(&Weight(vec![0, 0, 3])), 2);
        for kinds in SUPPORTED_SYSTEMS {
            let s = sys(kinds);
            for kind in [EvenGroupKind::FullEven, EvenGroupKind::ProductEven] {
                let g = even_subgroup(&s, kind);
                assert_eq!(g.stab_order(&Weight::zero(s.rank())), g.order());
                let lam = Weight((0..s.rank() as i64).map(|i| i * 2 - 1).collect());
                assert_eq!(g.orbit(&lam).len() * g.stab_order(&lam), g.order());
            }
        }
    }

    #[test]
    fn torus_orbit_examples() {
        let s = sys(&[A1, A2]);
        let g = even_subgroup(&s, EvenGroupKind::FullEven);
        // [s0,s1,s0',s2,0] with M = 5: s1 = 2, s2 = 3
        let x = TorusPoint::on_grid(vec![2, 3, 0], vec![5; 3]);
        assert_eq!(g.torus_orbit_size(&x), 6);
        assert_eq!(g.torus_orbit_size(&TorusPoint::origin(3)), 1);

        let s = sys(&[A1, A1]);
        let g = even_subgroup(&s, EvenGroupKind::FullEven);
        assert_eq!(
            g.torus_orbit_size(&TorusPoint::on_grid(vec![0, 0], vec![5, 5])),
            1
        );
    }

    #[test]
    fn stab_mod_mq_examples() {
        let s = sys(&[A1, C2]);
        let g = even_subgroup(&s, EvenGroupKind::FullEven);
        let m = Moduli::new(&s, EvenGroupKind::FullEven, &[6]).unwrap();
        // [t0,0,0,0,t3]: t1 = 0, t2 = 0, 2 t3 = 6
        assert_eq!(g.weight_stab_mod_mq(&Weight(vec![0, 0, 3]), &m), 4);
        // generic interior label
        let m5 = Moduli::new(&s, EvenGroupKind::FullEven, &[5]).unwrap();
        assert_eq!(g.weight_stab_mod_mq(&Weight(vec![2, 1, 1]), &m5), 1);
        assert_eq!(g.weight_stab_mod_mq(&Weight::zero(3), &m5), g.order());
    }

    #[test]
    fn moduli_validation() {
        let s = sys(&[A1, A2]);
        assert!(Moduli::new(&s, EvenGroupKind::FullEven, &[2, 3]).is_err());
        assert!(Moduli::new(&s, EvenGroupKind::ProductEven, &[2]).is_err());
        assert!(Moduli::new(&s, EvenGroupKind::FullEven, &[0]).is_err());
        let m = Moduli::new(&s, EvenGroupKind::ProductEven, &[2, 3]).unwrap();
        assert_eq!(m.per_coordinate(&s), vec![2, 3, 3]);
        assert_eq!(m.volume_factor(&s), 18);
    }

    #[test]
    fn coroot_congruence() {
        let s = sys(&[A1, A2]);
        let x = TorusPoint::on_grid(vec![1, 1, 2], vec![3; 3]);
        // α∨ columns of C in ω∨ coordinates
        let shifted = x.translate(&[0, 2, -1]);
        assert!(congruent_mod_coroots(&s, &x, &shifted));
        let other = x.translate(&[0, 1, 0]);
        assert!(!congruent_mod_coroots(&s, &x, &other));
    }
}
