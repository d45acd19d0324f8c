//! Closed-form generating function for Weyl dimensions over a lattice cone.
//!
//! For dominant weights `λ_1, …, λ_k` the series
//!
//! ```text
//! Σ_{a ∈ ℕ^k} dim L(a_1 λ_1 + … + a_k λ_k) q_1^{a_1} … q_k^{a_k}
//! ```
//!
//! equals `∏_{α > 0} (1 + Σ_j c_{λ_j}(α) q_j ∂/∂q_j)` applied to
//! `∏_j 1/(1 - q_j)`. Each factor is applied in turn; the Euler operators
//! commute, so the order over positive roots does not matter.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{check_len, Error, Result};
use crate::polyring::{EulerRational, Poly, UniPoly};
use crate::rootsys::{PositiveRoot, Rational, RootSystem, Weight};

/// The operator `1 + Σ_j c_j q_j ∂/∂q_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EulerOp {
    coeffs: Vec<Rational>,
}

impl EulerOp {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        EulerOp { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Apply the operator to `P / ∏(1-q_i)^{e_i}`.
    ///
    /// Uses `q_j ∂_j [P/D] = [q_j (∂_j P)(1-q_j) + e_j q_j P] / [(1-q_j) D]`
    /// and brings every term over the common denominator
    /// `D · ∏_{j ∈ S} (1-q_j)`, `S = {j : c_j ≠ 0}`. Expanded per numerator
    /// term `p q^m`, the new numerator is
    ///
    /// ```text
    /// Σ_{U ⊆ S} (-1)^{|U|} [1 + Σ_{j ∈ S∖U} c_j m_j - Σ_{j ∈ U} c_j (e_j - m_j)] p q^{m + 1_U}
    /// ```
    pub fn apply(&self, f: &EulerRational) -> Result<EulerRational> {
        check_len(f.nvars(), self.nvars())?;
        let active: Vec<usize> = (0..self.nvars()).filter(|&j| !self.coeffs[j].is_zero()).collect();
        if active.is_empty() {
            return Ok(f.clone());
        }
        let den_exps = f.den_exps();
        let mut out: HashMap<Vec<u32>, Rational> = HashMap::new();
        for (m, p) in f.numerator().terms() {
            // per active variable: c_j m_j when q_j is not taken, -c_j (e_j - m_j) when it is
            let stay: Vec<Rational> = active
                .iter()
                .map(|&j| &self.coeffs[j] * Rational::from_integer(m[j].into()))
                .collect();
            let step: Vec<Rational> = active
                .iter()
                .map(|&j| {
                    let diff = i64::from(den_exps[j]) - i64::from(m[j]);
                    -(&self.coeffs[j] * Rational::from_integer(diff.into()))
                })
                .collect();
            for subset in 0u32..(1 << active.len()) {
                let mut weight = Rational::one();
                let mut exps = m.clone();
                for (t, &j) in active.iter().enumerate() {
                    if subset & (1 << t) != 0 {
                        weight += &step[t];
                        exps[j] += 1;
                    } else {
                        weight += &stay[t];
                    }
                }
                if weight.is_zero() {
                    continue;
                }
                if subset.count_ones() % 2 == 1 {
                    weight = -weight;
                }
                *out.entry(exps).or_insert_with(Rational::zero) += weight * p;
            }
        }
        let mut den = den_exps.to_vec();
        for &j in &active {
            den[j] += 1;
        }
        let numerator = Poly::from_terms(self.nvars(), out)?;
        EulerRational::new(numerator, den)
    }
}

/// A root system together with generators `λ_1, …, λ_k` of a lattice cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeSpec {
    rs: RootSystem,
    generators: Vec<Weight>,
}

impl ConeSpec {
    pub fn new(rs: RootSystem, generators: Vec<Weight>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Domain("a cone needs at least one generator".into()));
        }
        for g in &generators {
            check_len(rs.rank(), g.rank())?;
            if !g.is_dominant() {
                return Err(Error::Domain(format!("generator {g} is not dominant")));
            }
        }
        Ok(ConeSpec { rs, generators })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn generators(&self) -> &[Weight] {
        &self.generators
    }

    /// Number of series variables.
    pub fn k(&self) -> usize {
        self.generators.len()
    }

    /// `Σ_j a_j λ_j`.
    pub fn weight_at(&self, a: &[usize]) -> Result<Weight> {
        check_len(self.k(), a.len())?;
        let mut w = Weight::zero(self.rs.rank());
        for (g, &aj) in self.generators.iter().zip(a) {
            w = w.plus(&g.scaled(aj as i64))?;
        }
        Ok(w)
    }
}

/// The factor `1 + Σ_j c_{λ_j}(α) q_j ∂/∂q_j` for one positive root.
pub fn operator_for_root(cone: &ConeSpec, alpha: &PositiveRoot) -> Result<EulerOp> {
    let rs = cone.root_system();
    if alpha.coeffs().len() != rs.rank() || !rs.contains_root(alpha) {
        return Err(Error::Domain(format!("{:?} is not a positive root", alpha.coeffs())));
    }
    let coeffs = cone
        .generators()
        .iter()
        .map(|g| rs.c_coeff(g, alpha))
        .collect::<Result<Vec<_>>>()?;
    Ok(EulerOp::new(coeffs))
}

pub fn apply_euler_op(op: &EulerOp, f: &EulerRational) -> Result<EulerRational> {
    op.apply(f)
}

/// The multi-graded series of the cone in closed form, uncancelled:
/// `den_exps[j] = 1 + #{α : (λ_j, α) ≠ 0}`.
pub fn hilbert_series(cone: &ConeSpec) -> Result<EulerRational> {
    let order: Vec<usize> = (0..cone.root_system().num_positive_roots()).collect();
    hilbert_series_in_order(cone, &order)
}

/// As [`hilbert_series`], applying the root factors in the given order
/// (a permutation of root indices).
pub fn hilbert_series_in_order(cone: &ConeSpec, order: &[usize]) -> Result<EulerRational> {
    let roots = cone.root_system().positive_roots();
    check_len(roots.len(), order.len())?;
    let mut seen = vec![false; roots.len()];
    for &i in order {
        if i >= roots.len() || std::mem::replace(&mut seen[i], true) {
            return Err(Error::Domain("root order is not a permutation".into()));
        }
    }
    let mut f = EulerRational::geometric(cone.k());
    for &i in order {
        f = operator_for_root(cone, &roots[i])?.apply(&f)?;
    }
    if !f.numerator().is_integral() {
        return Err(Error::Internal("closed-form numerator has non-integral coefficients".into()));
    }
    Ok(f)
}

/// A univariate rational function `numerator / denominator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniRational {
    numerator: UniPoly,
    denominator: UniPoly,
}

impl UniRational {
    pub fn new(numerator: UniPoly, denominator: UniPoly) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(UniRational { numerator, denominator })
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.denominator
    }
}

/// A reduced univariate series; `standard_exponent` is `Some(D)` exactly
/// when the reduced denominator is `(1-q)^D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced {
    pub series: UniRational,
    pub standard_exponent: Option<u32>,
}

/// Substitute `q_j ↦ q^{w_j}` without cancelling anything.
pub fn specialize(f: &EulerRational, grading: &[u32]) -> Result<UniRational> {
    check_len(f.nvars(), grading.len())?;
    if let Some(j) = grading.iter().position(|&w| w == 0) {
        return Err(Error::Domain(format!("grading entry {} must be positive", j + 1)));
    }
    let numerator = f.numerator().specialize(grading)?;
    let denominator = grading
        .iter()
        .zip(f.den_exps())
        .fold(UniPoly::one(), |acc, (&w, &e)| &acc * &UniPoly::one_minus_power(w as usize).pow(e));
    UniRational::new(numerator, denominator)
}

/// Cancel the gcd of numerator and denominator and scale so the
/// denominator has constant term 1.
pub fn reduce_univariate(f: &UniRational) -> Result<Reduced> {
    if f.denominator.is_zero() {
        return Err(Error::Domain("zero denominator".into()));
    }
    if f.numerator.is_zero() {
        return Ok(Reduced {
            series: UniRational { numerator: UniPoly::zero(), denominator: UniPoly::one() },
            standard_exponent: Some(0),
        });
    }
    let g = f.numerator.gcd(&f.denominator);
    let (num, r1) = f.numerator.div_rem(&g)?;
    let (den, r2) = f.denominator.div_rem(&g)?;
    if !r1.is_zero() || !r2.is_zero() {
        return Err(Error::Internal("gcd does not divide its arguments".into()));
    }
    let lowest = den
        .coeffs()
        .iter()
        .find(|c| !c.is_zero())
        .cloned()
        .expect("denominator is nonzero");
    let scale = BigRational::one() / lowest;
    let num = num.scale(&scale);
    let den = den.scale(&scale);
    let degree = den.degree().unwrap_or(0) as u32;
    let standard_exponent = (den == UniPoly::one_minus_power(1).pow(degree)).then_some(degree);
    Ok(Reduced {
        series: UniRational { numerator: num, denominator: den },
        standard_exponent,
    })
}

/// The two operators that take the `SL(n-1)` series for `⟨2ω_1, 2ω_2⟩` to the
/// `SL(n)` one: they belong to the new roots `α_2 + … + α_{n-1}` (height
/// `n-2`) and `α_1 + … + α_{n-1}` (height `n-1`).
pub fn recursion_operators(n: u32) -> Result<[EulerOp; 2]> {
    if n < 4 {
        return Err(Error::Domain(format!("recursion step needs n >= 4, got {n}")));
    }
    let r = |num: u32, den: u32| Rational::new(num.into(), den.into());
    Ok([
        EulerOp::new(vec![Rational::zero(), r(2, n - 2)]),
        EulerOp::new(vec![r(2, n - 1), r(2, n - 1)]),
    ])
}

/// One step of the recursion on `n` for the `SL(n)`, `⟨2ω_1, 2ω_2⟩` series.
pub fn lemma_recursion_step(n: u32, f: &EulerRational) -> Result<EulerRational> {
    let [short, long] = recursion_operators(n)?;
    check_len(2, f.nvars())?;
    long.apply(&short.apply(f)?)
}

/// `1/(1-q_1) · f(q_2, …)`: prepends a variable for a zero generator.
pub fn prepend_trivial_variable(f: &EulerRational) -> Result<EulerRational> {
    let mut den = vec![1];
    den.extend_from_slice(f.den_exps());
    EulerRational::new(f.numerator().insert_var(0), den)
}

/// Swap variables according to `perm` (variable `i` becomes `perm[i]`).
pub fn permute_series(f: &EulerRational, perm: &[usize]) -> Result<EulerRational> {
    let num = f.numerator().permute_vars(perm)?;
    let mut den = vec![0; f.nvars()];
    for (i, &e) in f.den_exps().iter().enumerate() {
        den[perm[i]] = e;
    }
    EulerRational::new(num, den)
}

/// A polynomial in one variable as a one-variable [`Poly`].
pub fn unipoly_to_poly(p: &UniPoly) -> Poly {
    Poly::from_terms(
        1,
        p.coeffs().iter().enumerate().map(|(i, c)| (vec![i as u32], c.clone())),
    )
    .expect("one variable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn frac(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn cone(f: Family, n: usize, gens: &[&[i64]]) -> ConeSpec {
        ConeSpec::new(
            RootSystem::simple(f, n).unwrap(),
            gens.iter().map(|g| Weight::new(g.to_vec())).collect(),
        )
        .unwrap()
    }

    fn uni(f: &EulerRational) -> (Vec<Rational>, u32) {
        let n = f.numerator();
        let deg = n.degree_in(0);
        ((0..=deg).map(|e| n.coeff(&[e])).collect(), f.den_exps()[0])
    }

    #[test]
    fn identity_operator() {
        let f = EulerRational::geometric(1);
        assert_eq!(EulerOp::new(vec![int(0)]).apply(&f).unwrap(), f);
    }

    #[test]
    fn single_euler_steps() {
        let f = EulerRational::geometric(1);
        let g = EulerOp::new(vec![int(1)]).apply(&f).unwrap();
        assert_eq!(uni(&g), (vec![int(1)], 2));
        let h = EulerOp::new(vec![int(2)]).apply(&f).unwrap();
        assert_eq!(uni(&h), (vec![int(1), int(1)], 2));
    }

    #[test]
    fn apply_checks_dimensions() {
        let err = EulerOp::new(vec![int(1)]).apply(&EulerRational::geometric(2)).unwrap_err();
        assert_eq!(err, Error::Dimension { expected: 2, got: 1 });
    }

    #[test]
    fn operators_match_sl3_and_sl4_factors() {
        let c = cone(Family::A, 2, &[&[3, 0], &[0, 3]]);
        let alpha1 = c.root_system().positive_roots().iter().find(|r| r.coeffs() == [1, 0]).unwrap();
        assert_eq!(operator_for_root(&c, alpha1).unwrap().coeffs(), &[int(3), int(0)]);

        let c = cone(Family::A, 3, &[&[2, 0, 0], &[0, 2, 0]]);
        let top = c.root_system().highest_root().clone();
        assert_eq!(operator_for_root(&c, &top).unwrap().coeffs(), &[frac(2, 3), frac(2, 3)]);
    }

    #[test]
    fn zero_generator_gives_zero_coefficients() {
        let c = cone(Family::B, 3, &[&[0, 0, 0], &[1, 0, 1]]);
        for alpha in c.root_system().positive_roots() {
            assert!(operator_for_root(&c, alpha).unwrap().coeffs()[0].is_zero());
        }
    }

    #[test]
    fn operator_rejects_non_root() {
        let c = cone(Family::A, 2, &[&[1, 0]]);
        let other = RootSystem::simple(Family::G, 2).unwrap();
        let fake = other.highest_root();
        assert!(matches!(operator_for_root(&c, fake), Err(Error::Domain(_))));
    }

    #[test]
    fn a1_fundamental_series() {
        let f = hilbert_series(&cone(Family::A, 1, &[&[1]])).unwrap();
        assert_eq!(uni(&f), (vec![int(1)], 2));
    }

    #[test]
    fn cone_validation() {
        let rs = RootSystem::simple(Family::A, 2).unwrap();
        assert!(matches!(ConeSpec::new(rs.clone(), vec![]), Err(Error::Domain(_))));
        assert!(matches!(
            ConeSpec::new(rs.clone(), vec![Weight::new(vec![1, -1])]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            ConeSpec::new(rs, vec![Weight::new(vec![1])]),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn specialize_identity_for_univariate() {
        let f = hilbert_series(&cone(Family::A, 2, &[&[1, 1]])).unwrap();
        let s = specialize(&f, &[1]).unwrap();
        assert_eq!(unipoly_to_poly(s.numerator()), f.numerator().clone());
        assert_eq!(s.denominator(), &UniPoly::one_minus_power(1).pow(f.den_exps()[0]));
        assert!(matches!(specialize(&f, &[0]), Err(Error::Domain(_))));
    }

    #[test]
    fn reduce_examples() {
        let one_minus = UniPoly::one_minus_power(1);
        let r = reduce_univariate(
            &UniRational::new(UniPoly::one_minus_power(2), one_minus.pow(2)).unwrap(),
        )
        .unwrap();
        assert_eq!(r.series.numerator(), &UniPoly::from_ints(&[1, 1]));
        assert_eq!(r.series.denominator(), &one_minus);
        assert_eq!(r.standard_exponent, Some(1));

        let base = UniPoly::from_ints(&[1, 3, 6]);
        let num = &base * &UniPoly::from_ints(&[1, 1]);
        let den = &one_minus.pow(7) * &UniPoly::one_minus_power(2);
        let r = reduce_univariate(&UniRational::new(num, den).unwrap()).unwrap();
        assert_eq!(r.series.numerator(), &base);
        assert_eq!(r.standard_exponent, Some(8));

        let already = UniRational::new(base.clone(), one_minus.pow(7)).unwrap();
        let r = reduce_univariate(&already).unwrap();
        assert_eq!(r.series, already);
    }

    #[test]
    fn reduce_reports_non_standard_denominators() {
        let f = UniRational::new(UniPoly::one(), UniPoly::one_minus_power(2)).unwrap();
        let r = reduce_univariate(&f).unwrap();
        assert_eq!(r.standard_exponent, None);
        assert_eq!(r.series, f);
    }

    #[test]
    fn reduce_zero_numerator_and_denominator() {
        let r = reduce_univariate(&UniRational::new(UniPoly::zero(), UniPoly::from_ints(&[2, 1])).unwrap())
            .unwrap();
        assert!(r.series.numerator().is_zero());
        assert!(UniRational::new(UniPoly::one(), UniPoly::zero()).is_err());
    }

    #[test]
    fn recursion_operators_for_n4() {
        let [short, long] = recursion_operators(4).unwrap();
        assert_eq!(short.coeffs(), &[int(0), int(1)]);
        assert_eq!(long.coeffs(), &[frac(2, 3), frac(2, 3)]);
        assert!(matches!(recursion_operators(3), Err(Error::Domain(_))));
    }

    #[test]
    fn series_in_order_rejects_bad_permutation() {
        let c = cone(Family::A, 2, &[&[1, 0]]);
        assert!(hilbert_series_in_order(&c, &[0, 0, 1]).is_err());
        assert!(hilbert_series_in_order(&c, &[0, 1]).is_err());
    }
}
