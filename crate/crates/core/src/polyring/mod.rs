//! Exact sparse polynomials over ℚ and rational functions of the form
//! `P(q) / ∏_j (1 - q_j)^{e_j}`.

mod univariate;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{check_len, Error, Result};
use crate::rootsys::Rational;

pub use univariate::UniPoly;

/// Exponent vector `a` of the monomial `q_1^{a_1} … q_k^{a_k}`.
pub type Monomial = Vec<u32>;

/// Sparse multivariate polynomial with rational coefficients.
///
/// No stored coefficient is zero, and every exponent vector has length
/// `nvars`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `q_j` (0-based).
    pub fn var(nvars: usize, j: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[j] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(exps, Rational::one());
        p
    }

    /// `1 - q_j`.
    pub fn one_minus_var(nvars: usize, j: usize) -> Self {
        Poly::one(nvars).mul_one_minus_var(j)
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Poly::zero(nvars);
        for (exps, c) in terms {
            check_len(nvars, exps.len())?;
            p.add_term(exps, c);
        }
        Ok(p)
    }

    /// Integer-coefficient shorthand, mostly for fixtures.
    pub fn from_int_terms(nvars: usize, terms: &[(&[u32], i64)]) -> Result<Self> {
        Poly::from_terms(
            nvars,
            terms.iter().map(|(e, c)| (e.to_vec(), Rational::from_integer((*c).into()))),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in graded-lexicographic order: increasing total degree, and
    /// within a degree `q_1` before `q_2` before ….
    pub fn grlex_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        v
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, j: usize) -> u32 {
        self.terms.keys().map(|m| m[j]).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, exps: Monomial, c: Rational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        check_len(self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        check_len(self.nvars, other.nvars)?;
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                out.add_term(m, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Multiply by `q_j`.
    pub fn shift(&self, j: usize) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m[j] += 1;
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Multiply by `1 - q_j`.
    pub fn mul_one_minus_var(&self, j: usize) -> Poly {
        let mut out = self.clone();
        for (m, c) in &self.terms {
            let mut m = m.clone();
            m[j] += 1;
            out.add_term(m, -c);
        }
        out
    }

    /// The Euler operator `q_j ∂/∂q_j`: scales each term by its `q_j` exponent.
    pub fn euler(&self, j: usize) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m[j] > 0)
                .map(|(m, c)| (m.clone(), c * Rational::from_integer(m[j].into())))
                .collect(),
        }
    }

    /// Substitute `q_j = 1`, keeping the variable count (the result no longer
    /// depends on `q_j`).
    pub fn eval_one(&self, j: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut m = m.clone();
            m[j] = 0;
            out.add_term(m, c.clone());
        }
        out
    }

    /// Exact division by `1 - q_j`; `None` when `self` does not vanish at
    /// `q_j = 1`.
    ///
    /// Writing `self = Σ_i p_i q_j^i` with coefficients in the other
    /// variables, the quotient is `Σ_i (p_0 + … + p_i) q_j^i`.
    pub fn div_one_minus_var(&self, j: usize) -> Option<Poly> {
        if !self.eval_one(j).is_zero() {
            return None;
        }
        // group by the remaining exponents, walk q_j exponents in order
        let mut columns: BTreeMap<Monomial, BTreeMap<u32, Rational>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let e = rest[j];
            rest[j] = 0;
            columns.entry(rest).or_default().insert(e, c.clone());
        }
        let mut out = Poly::zero(self.nvars);
        for (rest, column) in columns {
            let top = *column.keys().next_back().expect("nonempty column");
            let mut running = Rational::zero();
            for e in 0..top {
                if let Some(c) = column.get(&e) {
                    running += c;
                }
                let mut m = rest.clone();
                m[j] = e;
                out.add_term(m, running.clone());
            }
        }
        Some(out)
    }

    /// Reorder variables: variable `i` of `self` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Result<Poly> {
        check_len(self.nvars, perm.len())?;
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut n = vec![0; self.nvars];
            for (i, &e) in m.iter().enumerate() {
                n[perm[i]] = e;
            }
            out.add_term(n, c.clone());
        }
        Ok(out)
    }

    /// Insert a new variable at position `at` that does not occur.
    pub fn insert_var(&self, at: usize) -> Poly {
        let mut out = Poly::zero(self.nvars + 1);
        for (m, c) in &self.terms {
            let mut n = m.clone();
            n.insert(at, 0);
            out.add_term(n, c.clone());
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Substitute `q_j ↦ q^{w_j}`.
    pub fn specialize(&self, grading: &[u32]) -> Result<UniPoly> {
        check_len(self.nvars, grading.len())?;
        let mut coeffs: BTreeMap<usize, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e: u32 = m.iter().zip(grading).map(|(a, w)| a * w).sum();
            *coeffs.entry(e as usize).or_insert_with(Rational::zero) += c;
        }
        let deg = coeffs.keys().next_back().copied().unwrap_or(0);
        let mut dense = vec![Rational::zero(); deg + 1];
        for (e, c) in coeffs {
            dense[e] = c;
        }
        Ok(UniPoly::new(dense))
    }
}

/// `numerator · ∏_j (1 - q_j)^{-den_exps[j]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EulerRational {
    numerator: Poly,
    den_exps: Vec<u32>,
}

impl EulerRational {
    pub fn new(numerator: Poly, den_exps: Vec<u32>) -> Result<Self> {
        check_len(numerator.nvars(), den_exps.len())?;
        Ok(EulerRational { numerator, den_exps })
    }

    /// `∏_j 1/(1 - q_j)`.
    pub fn geometric(nvars: usize) -> Self {
        EulerRational { numerator: Poly::one(nvars), den_exps: vec![1; nvars] }
    }

    pub fn nvars(&self) -> usize {
        self.den_exps.len()
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn den_exps(&self) -> &[u32] {
        &self.den_exps
    }

    pub fn into_parts(self) -> (Poly, Vec<u32>) {
        (self.numerator, self.den_exps)
    }

    /// Power-series coefficients for every multidegree `a ≤ bounds`, using
    /// `1/(1-q)^e = Σ_a C(a+e-1, e-1) q^a` convolved with the numerator.
    pub fn expand(&self, bounds: &[usize]) -> Result<CoeffTable> {
        check_len(self.nvars(), bounds.len())?;
        let k = self.nvars();
        let binom: Vec<Vec<BigInt>> = (0..k)
            .map(|j| denominator_series(self.den_exps[j], bounds[j]))
            .collect();
        let shape = Shape::new(bounds);
        let mut acc = vec![Rational::zero(); shape.len()];
        let mut a = vec![0usize; k];
        for (m, c) in self.numerator.terms() {
            if m.iter().zip(bounds).any(|(&e, &b)| e as usize > b) {
                continue;
            }
            let lo: Vec<usize> = m.iter().map(|&e| e as usize).collect();
            a.copy_from_slice(&lo);
            loop {
                let weight: BigInt = (0..k).map(|j| &binom[j][a[j] - lo[j]]).product();
                if !weight.is_zero() {
                    acc[shape.index(&a)] += c * Rational::from_integer(weight);
                }
                if !shape.advance_from(&mut a, &lo) {
                    break;
                }
            }
        }
        let mut entries = Vec::with_capacity(acc.len());
        for (i, x) in acc.into_iter().enumerate() {
            if !x.is_integer() {
                return Err(Error::Internal(format!(
                    "series coefficient {x} at {:?} is not an integer",
                    shape.unindex(i)
                )));
            }
            entries.push(x.to_integer());
        }
        Ok(CoeffTable { bounds: bounds.to_vec(), entries })
    }
}

/// Coefficients `C(t+e-1, e-1)` of `1/(1-q)^e` for `t = 0..=bound`.
fn denominator_series(e: u32, bound: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(bound + 1);
    if e == 0 {
        out.push(BigInt::one());
        out.resize(bound + 1, BigInt::zero());
        return out;
    }
    let mut b = BigInt::one();
    out.push(b.clone());
    for t in 1..=bound {
        b = b * BigInt::from(t + e as usize - 1) / BigInt::from(t);
        out.push(b.clone());
    }
    out
}

/// Row-major indexing of the box `0 ≤ a ≤ bounds` (last variable fastest).
#[derive(Debug, Clone)]
pub(crate) struct Shape {
    bounds: Vec<usize>,
}

impl Shape {
    pub(crate) fn new(bounds: &[usize]) -> Self {
        Shape { bounds: bounds.to_vec() }
    }

    pub(crate) fn len(&self) -> usize {
        self.bounds.iter().map(|b| b + 1).product()
    }

    pub(crate) fn index(&self, a: &[usize]) -> usize {
        a.iter().zip(&self.bounds).fold(0, |acc, (&x, &b)| acc * (b + 1) + x)
    }

    pub(crate) fn unindex(&self, mut i: usize) -> Vec<usize> {
        let mut a = vec![0; self.bounds.len()];
        for (slot, &b) in a.iter_mut().zip(&self.bounds).rev() {
            *slot = i % (b + 1);
            i /= b + 1;
        }
        a
    }

    /// Odometer step within `lo ≤ a ≤ bounds`; false once exhausted.
    pub(crate) fn advance_from(&self, a: &mut [usize], lo: &[usize]) -> bool {
        for j in (0..a.len()).rev() {
            if a[j] < self.bounds[j] {
                a[j] += 1;
                return true;
            }
            a[j] = lo[j];
        }
        false
    }
}

/// Dense table of integer series coefficients for multidegrees `a ≤ bounds`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable {
    bounds: Vec<usize>,
    entries: Vec<BigInt>,
}

impl CoeffTable {
    pub fn from_fn<F>(bounds: &[usize], mut f: F) -> Result<Self>
    where
        F: FnMut(&[usize]) -> Result<BigInt>,
    {
        let shape = Shape::new(bounds);
        let entries = (0..shape.len())
            .map(|i| f(&shape.unindex(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(CoeffTable { bounds: bounds.to_vec(), entries })
    }

    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, a: &[usize]) -> Option<&BigInt> {
        if a.len() != self.bounds.len() || a.iter().zip(&self.bounds).any(|(x, b)| x > b) {
            return None;
        }
        self.entries.get(Shape::new(&self.bounds).index(a))
    }

    /// `(multidegree, coefficient)` pairs in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &BigInt)> + '_ {
        let shape = Shape::new(&self.bounds);
        self.entries.iter().enumerate().map(move |(i, x)| (shape.unindex(i), x))
    }

    pub fn all_positive(&self) -> bool {
        self.entries.iter().all(|x| x.is_positive())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn p(nvars: usize, terms: &[(&[u32], i64)]) -> Poly {
        Poly::from_int_terms(nvars, terms).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = p(1, &[(&[0], 1), (&[1], 1)]);
        let b = p(1, &[(&[0], 1), (&[1], -1)]);
        assert_eq!(a.try_mul(&b).unwrap(), p(1, &[(&[0], 1), (&[2], -1)]));
    }

    #[test]
    fn zero_annihilates() {
        let a = p(2, &[(&[0, 0], 3), (&[1, 2], -5)]);
        assert!(Poly::zero(2).try_mul(&a).unwrap().is_zero());
    }

    #[test]
    fn square_of_trinomial() {
        let a = p(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1)]);
        let want = p(
            2,
            &[
                (&[0, 0], 1),
                (&[1, 0], 2),
                (&[0, 1], 2),
                (&[2, 0], 1),
                (&[1, 1], 2),
                (&[0, 2], 1),
            ],
        );
        assert_eq!(a.try_mul(&a).unwrap(), want);
    }

    #[test]
    fn mismatched_vars() {
        let err = Poly::one(1).try_mul(&Poly::one(2)).unwrap_err();
        assert_eq!(err, Error::Dimension { expected: 1, got: 2 });
    }

    #[test]
    fn division_examples() {
        let one_minus_sq = p(1, &[(&[0], 1), (&[2], -1)]);
        assert_eq!(
            one_minus_sq.div_one_minus_var(0).unwrap(),
            p(1, &[(&[0], 1), (&[1], 1)])
        );
        assert_eq!(p(1, &[(&[0], 1), (&[1], 1)]).div_one_minus_var(0), None);
        let both = Poly::one_minus_var(2, 0).try_mul(&Poly::one_minus_var(2, 1)).unwrap();
        assert_eq!(both.div_one_minus_var(1).unwrap(), Poly::one_minus_var(2, 0));
        assert_eq!(Poly::zero(2).div_one_minus_var(0), Some(Poly::zero(2)));
    }

    #[test]
    fn grlex_order() {
        let a = p(2, &[(&[0, 2], 1), (&[1, 1], 2), (&[2, 0], 3), (&[0, 1], 4), (&[1, 0], 5), (&[0, 0], 6)]);
        let order: Vec<Monomial> = a.grlex_terms().into_iter().map(|(m, _)| m.clone()).collect();
        assert_eq!(order, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn euler_operator_scales_by_exponent() {
        let a = p(2, &[(&[0, 0], 7), (&[3, 1], 2)]);
        assert_eq!(a.euler(0), p(2, &[(&[3, 1], 6)]));
        assert_eq!(a.euler(1), p(2, &[(&[3, 1], 2)]));
    }

    #[test]
    fn expand_examples() {
        let f = EulerRational::new(Poly::one(1), vec![2]).unwrap();
        let t = f.expand(&[3]).unwrap();
        let got: Vec<BigInt> = t.iter().map(|(_, x)| x.clone()).collect();
        assert_eq!(got, vec![1.into(), 2.into(), 3.into(), 4.into()]);

        let f = EulerRational::new(Poly::one(1), vec![0]).unwrap();
        let got: Vec<BigInt> = f.expand(&[2]).unwrap().iter().map(|(_, x)| x.clone()).collect();
        assert_eq!(got, vec![1.into(), 0.into(), 0.into()]);
    }

    #[test]
    fn expand_rejects_bad_bounds() {
        let f = EulerRational::geometric(2);
        assert!(matches!(f.expand(&[1]), Err(Error::Dimension { .. })));
    }

    #[test]
    fn expand_flags_non_integral() {
        let f = EulerRational::new(Poly::constant(1, Rational::new(1.into(), 2.into())), vec![1]).unwrap();
        assert!(matches!(f.expand(&[2]), Err(Error::Internal(_))));
    }

    #[test]
    fn specialize_substitutes_powers() {
        let a = p(2, &[(&[0, 0], 1), (&[1, 0], 2), (&[0, 1], 3), (&[1, 1], 4)]);
        let u = a.specialize(&[1, 2]).unwrap();
        assert_eq!(u, UniPoly::from_ints(&[1, 2, 3, 4]));
    }

    #[test]
    fn shape_roundtrip() {
        let s = Shape::new(&[2, 3, 1]);
        for i in 0..s.len() {
            assert_eq!(s.index(&s.unindex(i)), i);
        }
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec((prop::collection::vec(0u32..4, nvars), -5i64..=5), 0..6).prop_map(
            move |terms| Poly::from_terms(nvars, terms.into_iter().map(|(m, c)| (m, int(c)))).unwrap(),
        )
    }

    /// Brute-force coefficient extraction: multiply out the denominator
    /// series term by term as a truncated polynomial product.
    fn naive_expand(f: &EulerRational, bounds: &[usize]) -> Vec<Rational> {
        let k = f.nvars();
        let mut series = f.numerator().clone();
        for j in 0..k {
            for _ in 0..f.den_exps()[j] {
                // multiply by 1 + q_j + … + q_j^{b_j}, then truncate
                let mut geo = Poly::zero(k);
                for t in 0..=bounds[j] as u32 {
                    let mut m = vec![0; k];
                    m[j] = t;
                    geo.add_term(m, int(1));
                }
                series = series.try_mul(&geo).unwrap();
                series = Poly::from_terms(
                    k,
                    series
                        .terms()
                        .filter(|(m, _)| m.iter().zip(bounds).all(|(&e, &b)| e as usize <= b))
                        .map(|(m, c)| (m.clone(), c.clone())),
                )
                .unwrap();
            }
        }
        let shape = Shape::new(bounds);
        (0..shape.len())
            .map(|i| {
                let a: Vec<u32> = shape.unindex(i).into_iter().map(|x| x as u32).collect();
                series.coeff(&a)
            })
            .collect()
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
            prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
            prop_assert_eq!(
                a.try_mul(&b).unwrap().try_mul(&c).unwrap(),
                a.try_mul(&b.try_mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.try_mul(&b.try_add(&c).unwrap()).unwrap(),
                a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap()
            );
            prop_assert!(a.try_sub(&a).unwrap().is_zero());
        }

        #[test]
        fn division_roundtrip(a in arb_poly(3), j in 0usize..3) {
            let prod = a.mul_one_minus_var(j);
            prop_assert_eq!(prod.div_one_minus_var(j).unwrap(), a);
        }

        #[test]
        fn expand_matches_naive(a in arb_poly(2), e0 in 0u32..4, e1 in 0u32..4) {
            let f = EulerRational::new(a, vec![e0, e1]).unwrap();
            let bounds = [4usize, 3];
            let fast = f.expand(&bounds).unwrap();
            let slow = naive_expand(&f, &bounds);
            for ((_, x), y) in fast.iter().zip(slow) {
                prop_assert_eq!(Rational::from_integer(x.clone()), y);
            }
        }

        #[test]
        fn expand_is_linear(a in arb_poly(2), b in arb_poly(2), e0 in 0u32..3, e1 in 0u32..3) {
            let bounds = [3usize, 3];
            let fa = EulerRational::new(a.clone(), vec![e0, e1]).unwrap().expand(&bounds).unwrap();
            let fb = EulerRational::new(b.clone(), vec![e0, e1]).unwrap().expand(&bounds).unwrap();
            let fab = EulerRational::new(a.try_add(&b).unwrap(), vec![e0, e1]).unwrap().expand(&bounds).unwrap();
            for (((_, x), (_, y)), (_, z)) in fa.iter().zip(fb.iter()).zip(fab.iter()) {
                prop_assert_eq!(x + y, z.clone());
            }
        }

        #[test]
        fn expand_multiplies_over_disjoint_vars(a in arb_poly(1), b in arb_poly(1), e0 in 0u32..3, e1 in 0u32..3) {
            let fa = EulerRational::new(a.clone(), vec![e0]).unwrap().expand(&[3]).unwrap();
            let fb = EulerRational::new(b.clone(), vec![e1]).unwrap().expand(&[4]).unwrap();
            let joint = a.insert_var(1).try_mul(&b.insert_var(0)).unwrap();
            let fab = EulerRational::new(joint, vec![e0, e1]).unwrap().expand(&[3, 4]).unwrap();
            for (idx, z) in fab.iter() {
                prop_assert_eq!(fa.get(&idx[..1]).unwrap() * fb.get(&idx[1..]).unwrap(), z.clone());
            }
        }
    }
}
