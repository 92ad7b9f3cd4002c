//! Fixtures shared by the criterion benches.

use permdek_core::enumerate::unrank;
use permdek_core::Permutation;

/// A fixed spread of permutations of size `n`, taken at evenly spaced ranks.
pub fn sample_permutations(n: usize, count: usize) -> Vec<Permutation> {
    let total = permdek_core::enumerate::factorial(n);
    let step = (total / count.max(1) as u64).max(1);
    (0..total)
        .step_by(step as usize)
        .take(count)
        .map(|r| Permutation::new(unrank(n, r)).expect("unrank yields a permutation"))
        .collect()
}

/// The decreasing permutation, which is hard for every search.
pub fn reversed(n: usize) -> Permutation {
    Permutation::new((1..=n as u32).rev().collect()).expect("valid")
}
