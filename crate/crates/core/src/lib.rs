//! Multi-variate generating functions for Weyl dimensions.
//!
//! Given a semisimple root system and dominant weights `λ_1, …, λ_k`, the
//! series `Σ_a dim L(a_1 λ_1 + … + a_k λ_k) q^a` is a rational function
//! `P(q) / ∏_j (1 - q_j)^{e_j}`, obtained by applying one Euler operator
//! `1 + Σ_j c_{λ_j}(α) q_j ∂/∂q_j` per positive root `α` to `∏_j 1/(1 - q_j)`,
//! where `c_λ(α) = (λ, α) / (ρ, α)`.
//!
//! * [`rootsys`]: Cartan data, positive roots, `c_λ(α)` and Weyl dimensions.
//! * [`polyring`]: exact sparse polynomials and power-series expansion.
//! * [`genfun`]: the operator product, specialization to one variable, and
//!   the `SL(n)` recursion for `⟨2ω_1, 2ω_2⟩`.
//! * [`oracle`]: direct tabulation of Weyl dimensions for cross-checking.
//! * [`presets`]: determinantal-variety and fundamental cones.
//!
//! ```
//! use weylgen::{hilbert_series, ConeSpec, Family, RootSystem, Weight};
//!
//! let sl3 = RootSystem::simple(Family::A, 2).unwrap();
//! let cone = ConeSpec::new(sl3, vec![Weight::new(vec![3, 0]), Weight::new(vec![0, 3])]).unwrap();
//! let f = hilbert_series(&cone).unwrap();
//! assert_eq!(f.den_exps(), &[3, 3]);
//! ```

pub mod error;
pub mod genfun;
pub mod oracle;
pub mod polyring;
pub mod presets;
pub mod rootsys;

pub use error::{Error, Result};
pub use genfun::{
    apply_euler_op, hilbert_series, hilbert_series_in_order, lemma_recursion_step,
    operator_for_root, reduce_univariate, specialize, ConeSpec, EulerOp, Reduced, UniRational,
};
pub use oracle::{dimension_table, verify_equivalence, Mismatch, VerificationReport};
pub use polyring::{CoeffTable, EulerRational, Monomial, Poly, UniPoly};
pub use presets::{antisymmetric_determinantal, fundamental_cone, symmetric_determinantal, ProblemSpec};
pub use rootsys::{Family, PositiveRoot, Rational, RootSystem, SimpleFactor, Weight};
