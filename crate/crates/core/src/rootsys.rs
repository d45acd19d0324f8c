//! Root systems of semisimple Lie algebras built from Cartan data.
//!
//! Simple roots follow Bourbaki numbering within each simple factor. Roots are
//! kept in simple-root coordinates and weights in fundamental-weight
//! coordinates; every inner product goes through the symmetrizer `d`, where
//! `d_j` is the squared length of `α_j` divided by the squared length of a
//! short root of the same factor. With that normalization
//!
//! ```text
//! (λ, α) ∝ Σ_j c_j d_j m_j      for α = Σ c_j α_j,  λ = Σ m_j ω_j
//! ```
//!
//! and the constant of proportionality cancels in every quotient we need.
//!
//! The Cartan matrix is stored as `A[i][j] = ⟨α_j, α_i^∨⟩`, so that
//! `d_i A[i][j]` is symmetric. For the exceptional and non-simply-laced
//! families this gives (Bourbaki numbering):
//!
//! ```text
//! B_n: α_n short        C_n: α_n long         G_2: α_1 short
//! F_4: α_1, α_2 long, α_3, α_4 short
//! D_n: α_{n-2} joined to α_{n-1} and α_n
//! E_n: chain α_1-α_3-α_4-…-α_n with α_2 attached to α_4
//! ```

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{check_len, Error, Result};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn accepts_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::Config(format!("unknown root system family `{other}`"))),
        }
    }
}

/// One simple factor `X_n` of a semisimple root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SimpleFactor {
    family: Family,
    rank: usize,
}

impl SimpleFactor {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.accepts_rank(rank) {
            Ok(SimpleFactor { family, rank })
        } else {
            Err(Error::Config(format!("{family}_{rank} is not a valid root system")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Root lengths (symmetrizer entries) and Dynkin edges, 0-based.
    fn dynkin(&self) -> (Vec<i64>, Vec<(usize, usize)>) {
        let n = self.rank;
        let chain = |len: usize| (1..len).map(|i| (i - 1, i)).collect::<Vec<_>>();
        match self.family {
            Family::A => (vec![1; n], chain(n)),
            Family::B => {
                let mut d = vec![2; n];
                d[n - 1] = 1;
                (d, chain(n))
            }
            Family::C => {
                let mut d = vec![1; n];
                d[n - 1] = 2;
                (d, chain(n))
            }
            Family::D => {
                let mut edges = chain(n - 1);
                edges.push((n - 3, n - 1));
                (vec![1; n], edges)
            }
            Family::E => {
                let mut edges = vec![(0, 2), (1, 3)];
                edges.extend((2..n - 1).map(|i| (i, i + 1)));
                (vec![1; n], edges)
            }
            Family::F => (vec![2, 2, 1, 1], chain(4)),
            Family::G => (vec![1, 3], chain(2)),
        }
    }

    /// Number of positive roots by the classical table.
    pub fn expected_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A positive root as nonnegative coefficients on the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveRoot {
    coeffs: Vec<u32>,
}

impl PositiveRoot {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn height(&self) -> u32 {
        self.coeffs.iter().sum()
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    coeffs: Vec<i64>,
}

impl Weight {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Weight { coeffs }
    }

    pub fn zero(rank: usize) -> Self {
        Weight { coeffs: vec![0; rank] }
    }

    /// `ω_i`, 0-based.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[i] = 1;
        Weight { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|&m| m >= 0)
    }

    pub fn scaled(&self, n: i64) -> Weight {
        Weight::new(self.coeffs.iter().map(|m| m * n).collect())
    }

    pub fn plus(&self, other: &Weight) -> Result<Weight> {
        check_len(self.rank(), other.rank())?;
        Ok(Weight::new(
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Concatenation for product root systems.
    pub fn concat(&self, other: &Weight) -> Weight {
        let mut coeffs = self.coeffs.clone();
        coeffs.extend_from_slice(&other.coeffs);
        Weight::new(coeffs)
    }
}

impl From<Vec<i64>> for Weight {
    fn from(coeffs: Vec<i64>) -> Self {
        Weight::new(coeffs)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A semisimple root system: a product of simple factors with its Cartan
/// data and enumerated positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    factors: Vec<SimpleFactor>,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<PositiveRoot>,
}

impl RootSystem {
    pub fn new(factors: &[SimpleFactor]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Config("a root system needs at least one factor".into()));
        }
        let rank: usize = factors.iter().map(|f| f.rank).sum();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut symmetrizer = Vec::with_capacity(rank);
        let mut offset = 0;
        for factor in factors {
            let (d, edges) = factor.dynkin();
            for (i, &di) in d.iter().enumerate() {
                cartan[offset + i][offset + i] = 2;
                symmetrizer.push(di);
            }
            for (i, j) in edges {
                // d_i A[i][j] = -max(d_i, d_j) on an edge
                let m = d[i].max(d[j]);
                cartan[offset + i][offset + j] = -m / d[i];
                cartan[offset + j][offset + i] = -m / d[j];
            }
            offset += factor.rank;
        }
        let positive_roots = enumerate_positive_roots(&cartan);
        Ok(RootSystem {
            factors: factors.to_vec(),
            cartan,
            symmetrizer,
            positive_roots,
        })
    }

    /// Convenience constructor for a single simple factor.
    pub fn simple(family: Family, rank: usize) -> Result<Self> {
        RootSystem::new(&[SimpleFactor::new(family, rank)?])
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.symmetrizer.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn contains_root(&self, alpha: &PositiveRoot) -> bool {
        self.positive_roots.binary_search_by(|r| root_order(r, alpha)).is_ok()
    }

    /// A root of maximal height; the highest root when the system is simple.
    pub fn highest_root(&self) -> &PositiveRoot {
        self.positive_roots
            .iter()
            .max_by_key(|r| r.height())
            .expect("root systems are nonempty")
    }

    /// The Weyl vector ρ: every fundamental coefficient equal to one.
    pub fn rho(&self) -> Weight {
        Weight::new(vec![1; self.rank()])
    }

    /// Integer proportional to `(λ, α)`, with the same constant for every
    /// `λ` and `α` within a factor.
    pub fn pairing(&self, lambda: &Weight, alpha: &PositiveRoot) -> Result<i64> {
        check_len(self.rank(), lambda.rank())?;
        check_len(self.rank(), alpha.coeffs.len())?;
        Ok(alpha
            .coeffs
            .iter()
            .zip(&self.symmetrizer)
            .zip(&lambda.coeffs)
            .map(|((&c, &d), &m)| i64::from(c) * d * m)
            .sum())
    }

    /// Integer proportional to `(ρ, α)`; always positive.
    pub fn rho_pairing(&self, alpha: &PositiveRoot) -> i64 {
        alpha
            .coeffs
            .iter()
            .zip(&self.symmetrizer)
            .map(|(&c, &d)| i64::from(c) * d)
            .sum()
    }

    /// `c_λ(α) = (λ, α) / (ρ, α)`.
    pub fn c_coeff(&self, lambda: &Weight, alpha: &PositiveRoot) -> Result<Rational> {
        let num = self.pairing(lambda, alpha)?;
        Ok(Rational::new(num.into(), self.rho_pairing(alpha).into()))
    }

    /// Dimension of the irreducible representation with highest weight `λ`,
    /// by the Weyl dimension formula `∏_α (λ + ρ, α) / (ρ, α)`.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<BigInt> {
        check_len(self.rank(), lambda.rank())?;
        if !lambda.is_dominant() {
            return Err(Error::Domain(format!("weight {lambda} is not dominant")));
        }
        let shifted = lambda.plus(&self.rho())?;
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for alpha in &self.positive_roots {
            num *= self.pairing(&shifted, alpha)?;
            den *= self.rho_pairing(alpha);
        }
        let q = Rational::new(num, den);
        if q.is_integer() && q > Rational::zero() {
            Ok(q.to_integer())
        } else {
            Err(Error::Internal(format!(
                "Weyl product for {lambda} is {q}, not a positive integer"
            )))
        }
    }
}

fn root_order(a: &PositiveRoot, b: &PositiveRoot) -> std::cmp::Ordering {
    a.height().cmp(&b.height()).then_with(|| b.coeffs.cmp(&a.coeffs))
}

/// Height-by-height closure: `β + α_i` is a root iff `p - ⟨β, α_i^∨⟩ > 0`,
/// where `p` is the length of the descending `α_i`-string through `β`.
fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Vec<PositiveRoot> {
    let n = cartan.len();
    let simple: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut seen: HashSet<Vec<u32>> = simple.iter().cloned().collect();
    let mut all = simple.clone();
    let mut layer = simple;
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0i64;
                let mut down = beta.clone();
                while down[i] > 0 {
                    down[i] -= 1;
                    if seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let coroot_pairing: i64 = (0..n).map(|j| i64::from(beta[j]) * cartan[i][j]).sum();
                if p - coroot_pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    let mut roots: Vec<PositiveRoot> = all.into_iter().map(|coeffs| PositiveRoot { coeffs }).collect();
    roots.sort_by(root_order);
    roots
}
