//! Multinomial sampling via conditional binomials.

use rand::Rng;
use rand_distr::{Binomial, Distribution};

/// Draws a multinomial sample: counts over `probs.len()` categories summing
/// to `shots`. O(categories) per call. Deterministic given the RNG state.
pub(crate) fn multinomial<R: Rng + ?Sized>(rng: &mut R, probs: &[f64], shots: u64) -> Vec<u64> {
    let n = probs.len();
    let mut out = vec![0u64; n];
    let mut remaining = shots;
    let mut rest = 1.0_f64; // probability mass of categories not yet drawn
    for (i, &p) in probs.iter().enumerate() {
        if remaining == 0 {
            break;
        }
        if i + 1 == n {
            out[i] = remaining;
            break;
        }
        let q = if rest > 0.0 { (p / rest).clamp(0.0, 1.0) } else { 0.0 };
        let draw = if q >= 1.0 {
            remaining
        } else if q <= 0.0 {
            0
        } else {
            Binomial::new(remaining, q)
                .expect("conditional probability in (0, 1)")
                .sample(rng)
        };
        out[i] = draw;
        remaining -= draw;
        rest -= p;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn degenerate_distribution() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(multinomial(&mut rng, &[1.0, 0.0, 0.0, 0.0], 100), vec![100, 0, 0, 0]);
        assert_eq!(multinomial(&mut rng, &[0.0, 0.0, 0.0, 1.0], 7), vec![0, 0, 0, 7]);
    }

    #[test]
    fn counts_sum_to_shots() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let counts = multinomial(&mut rng, &[0.1, 0.2, 0.3, 0.4], 997);
            assert_eq!(counts.iter().sum::<u64>(), 997);
        }
    }

    #[test]
    fn deterministic_given_seed() {
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            multinomial(&mut rng, &[0.25, 0.25, 0.25, 0.25], 4096)
        };
        assert_eq!(draw(9), draw(9));
    }

    /// Binomial-moment check: with p = 0.25 and 10^6 shots, each count lies
    /// within 5σ of 250 000, σ = sqrt(10^6 · 0.25 · 0.75).
    #[test]
    fn binomial_moments() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let counts = multinomial(&mut rng, &[0.25; 4], 1_000_000);
        let sigma = (1_000_000.0_f64 * 0.25 * 0.75).sqrt();
        for &c in &counts {
            assert!((c as f64 - 250_000.0).abs() < 5.0 * sigma, "count {c} outside 5 sigma");
        }
    }
}
