//! Brute-force ground truth for the closed form.
//!
//! Every table entry is the Weyl product `∏_α (1 + Σ_j a_j c_{λ_j}(α))`
//! evaluated directly. Nothing here touches the rational-function engine, so
//! a defect there cannot hide behind a matching defect here.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{check_len, Error, Result};
use crate::genfun::ConeSpec;
use crate::polyring::{CoeffTable, EulerRational};
use crate::rootsys::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: Vec<usize>,
    pub expected: BigInt,
    pub got: BigInt,
}

/// Outcome of comparing a closed form against the oracle table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// `dim L(Σ_j a_j λ_j)` for every `a ≤ bounds`.
pub fn dimension_table(cone: &ConeSpec, bounds: &[usize]) -> Result<CoeffTable> {
    check_len(cone.k(), bounds.len())?;
    let rs = cone.root_system();
    let c: Vec<Vec<Rational>> = rs
        .positive_roots()
        .iter()
        .map(|alpha| {
            cone.generators()
                .iter()
                .map(|g| rs.c_coeff(g, alpha))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    CoeffTable::from_fn(bounds, |a| {
        let mut prod = Rational::one();
        for row in &c {
            let mut factor = Rational::one();
            for (cj, &aj) in row.iter().zip(a) {
                factor += cj * Rational::from_integer(aj.into());
            }
            prod *= factor;
        }
        if prod.is_integer() {
            Ok(prod.to_integer())
        } else {
            Err(Error::Internal(format!("Weyl product {prod} at {a:?} is not an integer")))
        }
    })
}

/// Expand `f` up to `bounds` and compare entrywise with [`dimension_table`].
pub fn verify_equivalence(
    f: &EulerRational,
    cone: &ConeSpec,
    bounds: &[usize],
) -> Result<VerificationReport> {
    check_len(cone.k(), f.nvars())?;
    let expected = dimension_table(cone, bounds)?;
    let got = f.expand(bounds)?;
    let mismatches = expected
        .iter()
        .zip(got.iter())
        .filter(|((_, e), (_, g))| e != g)
        .map(|((index, e), (_, g))| Mismatch { index, expected: e.clone(), got: g.clone() })
        .collect();
    Ok(VerificationReport { checked: expected.len(), mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::hilbert_series;
    use crate::polyring::Poly;
    use crate::rootsys::{Family, RootSystem, Weight};

    fn cone(f: Family, n: usize, gens: &[&[i64]]) -> ConeSpec {
        ConeSpec::new(
            RootSystem::simple(f, n).unwrap(),
            gens.iter().map(|g| Weight::new(g.to_vec())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn a1_table() {
        let t = dimension_table(&cone(Family::A, 1, &[&[1]]), &[3]).unwrap();
        let v: Vec<BigInt> = t.iter().map(|(_, x)| x.clone()).collect();
        assert_eq!(v, vec![1.into(), 2.into(), 3.into(), 4.into()]);
    }

    #[test]
    fn zero_generators_give_ones() {
        let t = dimension_table(&cone(Family::C, 3, &[&[0, 0, 0], &[0, 0, 0]]), &[2, 3]).unwrap();
        assert!(t.iter().all(|(_, x)| x == &BigInt::one()));
    }

    #[test]
    fn sl3_triple_cone_entry() {
        let t = dimension_table(&cone(Family::A, 2, &[&[3, 0], &[0, 3]]), &[2, 2]).unwrap();
        assert_eq!(t.get(&[1, 1]).unwrap(), &BigInt::from(64));
    }

    #[test]
    fn table_agrees_with_weyl_dim() {
        let c = cone(Family::G, 2, &[&[1, 0], &[1, 1]]);
        let t = dimension_table(&c, &[3, 3]).unwrap();
        for (a, x) in t.iter() {
            let w = c.weight_at(&a).unwrap();
            assert_eq!(&c.root_system().weyl_dim(&w).unwrap(), x);
        }
    }

    #[test]
    fn verify_passes_and_detects_faults() {
        let c = cone(Family::A, 2, &[&[3, 0], &[0, 3]]);
        let f = hilbert_series(&c).unwrap();
        let report = verify_equivalence(&f, &c, &[4, 4]).unwrap();
        assert_eq!(report.checked, 25);
        assert!(report.passed());

        let (num, den) = f.clone().into_parts();
        let bumped = num.try_add(&Poly::var(2, 0)).unwrap();
        let bad = EulerRational::new(bumped, den).unwrap();
        let report = verify_equivalence(&bad, &c, &[4, 4]).unwrap();
        assert_eq!(report.mismatches[0].index, vec![1, 0]);

        let report = verify_equivalence(&EulerRational::geometric(2), &c, &[2, 2]).unwrap();
        assert_eq!(report.mismatches[0].index, vec![0, 1]);
    }
}
