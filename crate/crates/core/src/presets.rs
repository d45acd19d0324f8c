//! Named cones for the determinantal varieties and the full dominant chamber.
//!
//! * `sym-det (n, k)`: rank ≤ k symmetric n×n matrices. `A_{n-1}` with the
//!   cone `⟨2ω_1, …, 2ω_k⟩`, graded by `q_i ↦ q^i`.
//! * `antisym-det (n, k)`: rank ≤ 2k antisymmetric 2n×2n matrices.
//!   `A_{2n-1}` with `⟨ω_2, ω_4, …, ω_{2k}⟩`, graded by `q_i ↦ q^i`.
//! * `fundamental`: all fundamental weights, graded by `q_i ↦ q`.

use crate::error::{Error, Result};
use crate::genfun::ConeSpec;
use crate::rootsys::{Family, RootSystem, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemSpec {
    pub name: String,
    pub cone: ConeSpec,
    pub grading: Vec<u32>,
    pub notes: String,
}

pub fn symmetric_determinantal(n: usize, k: usize) -> Result<ProblemSpec> {
    if n < 2 || k == 0 || k >= n {
        return Err(Error::Domain(format!("sym-det needs n >= 2 and 1 <= k <= n-1, got n={n}, k={k}")));
    }
    let rank = n - 1;
    let generators = (0..k).map(|i| Weight::fundamental(rank, i).scaled(2)).collect();
    Ok(ProblemSpec {
        name: format!("sym-det(n={n}, k={k})"),
        cone: ConeSpec::new(RootSystem::simple(Family::A, rank)?, generators)?,
        grading: (1..=k as u32).collect(),
        notes: format!("rank <= {k} symmetric {n}x{n} matrices: A{rank}, even weights of depth <= {k}"),
    })
}

pub fn antisymmetric_determinantal(n: usize, k: usize) -> Result<ProblemSpec> {
    if n == 0 || k == 0 || k > n || 2 * k > 2 * n - 1 {
        return Err(Error::Domain(format!(
            "antisym-det needs 1 <= k and 2k <= 2n-1, got n={n}, k={k}"
        )));
    }
    let rank = 2 * n - 1;
    let generators = (1..=k).map(|i| Weight::fundamental(rank, 2 * i - 1)).collect();
    Ok(ProblemSpec {
        name: format!("antisym-det(n={n}, k={k})"),
        cone: ConeSpec::new(RootSystem::simple(Family::A, rank)?, generators)?,
        grading: (1..=k as u32).collect(),
        notes: format!(
            "rank <= {} antisymmetric {}x{} matrices: A{rank}, cone <w2, ..., w{}>",
            2 * k,
            2 * n,
            2 * n,
            2 * k
        ),
    })
}

pub fn fundamental_cone(rs: RootSystem) -> Result<ProblemSpec> {
    let rank = rs.rank();
    let name = rs.factors().iter().map(|f| f.to_string()).collect::<Vec<_>>().join("x");
    let generators = (0..rank).map(|i| Weight::fundamental(rank, i)).collect();
    Ok(ProblemSpec {
        name: format!("fundamental({name})"),
        cone: ConeSpec::new(rs, generators)?,
        grading: vec![1; rank],
        notes: "all dominant weights, one variable per fundamental weight".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(p: &ProblemSpec) -> Vec<Vec<i64>> {
        p.cone.generators().iter().map(|g| g.coeffs().to_vec()).collect()
    }

    #[test]
    fn sym_det_shapes() {
        let p = symmetric_determinantal(4, 2).unwrap();
        assert_eq!(p.cone.root_system().rank(), 3);
        assert_eq!(gens(&p), vec![vec![2, 0, 0], vec![0, 2, 0]]);
        assert_eq!(p.grading, vec![1, 2]);

        let p = symmetric_determinantal(3, 1).unwrap();
        assert_eq!(gens(&p), vec![vec![2, 0]]);
        assert_eq!(p.grading, vec![1]);

        assert!(matches!(symmetric_determinantal(4, 4), Err(Error::Domain(_))));
        assert!(matches!(symmetric_determinantal(1, 1), Err(Error::Domain(_))));
        assert!(matches!(symmetric_determinantal(4, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn antisym_det_shapes() {
        let p = antisymmetric_determinantal(3, 1).unwrap();
        assert_eq!(p.cone.root_system().rank(), 5);
        assert_eq!(gens(&p), vec![vec![0, 1, 0, 0, 0]]);
        assert_eq!(p.grading, vec![1]);

        let p = antisymmetric_determinantal(3, 2).unwrap();
        assert_eq!(gens(&p), vec![vec![0, 1, 0, 0, 0], vec![0, 0, 0, 1, 0]]);
        assert_eq!(p.grading, vec![1, 2]);

        assert!(matches!(antisymmetric_determinantal(2, 2), Err(Error::Domain(_))));
        assert!(matches!(antisymmetric_determinantal(1, 1), Err(Error::Domain(_))));
        assert!(matches!(antisymmetric_determinantal(0, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn fundamental_shapes() {
        let p = fundamental_cone(RootSystem::simple(Family::A, 2).unwrap()).unwrap();
        assert_eq!(gens(&p), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(p.grading, vec![1, 1]);
        let p = fundamental_cone(RootSystem::simple(Family::A, 1).unwrap()).unwrap();
        assert_eq!(gens(&p), vec![vec![1]]);
    }
}
