//! Deterministic inputs shared by the benchmarks.

use cstar_core::{DpdPair, QDivisor};

/// Pairs with one fixed point over `0` and `extra` one-orbit fibers over `1..=extra`.
pub fn sample_pair(m_plus: i64, m_minus: i64, extra: i64) -> DpdPair {
    let mut plus = vec![(0, -1, m_plus)];
    let mut minus = vec![(0, -1, m_minus)];
    for a in 1..=extra {
        let m = a + 1;
        plus.push((a, -1, m));
        minus.push((a, 1, m));
    }
    DpdPair::new(QDivisor::from_ints(&plus), QDivisor::from_ints(&minus))
        .expect("sum is non-positive")
}
