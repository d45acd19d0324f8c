//! Fixtures shared by the benchmarks in `benches/`.

use weylgen::{ConeSpec, Family, RootSystem, Weight};

/// `⟨2ω_1, 2ω_2⟩` for `SL(n)`, `n >= 3`.
pub fn sl_two_two(n: usize) -> ConeSpec {
    let mut a = vec![0; n - 1];
    let mut b = vec![0; n - 1];
    a[0] = 2;
    b[1] = 2;
    ConeSpec::new(RootSystem::simple(Family::A, n - 1).unwrap(), vec![Weight::new(a), Weight::new(b)]).unwrap()
}

/// Every fundamental weight of a simple root system as a generator.
pub fn fundamental(family: Family, rank: usize) -> ConeSpec {
    let gens = (0..rank).map(|i| Weight::fundamental(rank, i)).collect();
    ConeSpec::new(RootSystem::simple(family, rank).unwrap(), gens).unwrap()
}
