//! SplitMix64, a small portable generator with a fixed update function:
//!
//! ```text
//! state = state + 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! return z ^ (z >> 31)
//! ```
//!
//! All arithmetic wraps modulo 2^64. Bounded draws use rejection sampling so
//! they are unbiased and identical on every platform.

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// A generator for one case of one stream, independent of how many values
    /// other cases consumed.
    pub fn for_case(seed: u64, stream: &str, case: u64) -> Self {
        let mut s = mix(seed.wrapping_add(GAMMA));
        for b in stream.bytes() {
            s = mix(s ^ b as u64).wrapping_add(GAMMA);
        }
        SplitMix64::new(mix(s ^ mix(case.wrapping_add(GAMMA))))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        mix(self.state)
    }

    /// Uniform in `0..n`. `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        let threshold = n.wrapping_neg() % n;
        loop {
            let r = self.next_u64();
            if r >= threshold {
                return r % n;
            }
        }
    }

    /// Uniform in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi as i128 - lo as i128 + 1) as u64;
        (lo as i128 + self.below(span) as i128) as i64
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    pub fn choose<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len() as u64) as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        // First outputs for seed 1234567, as published with the algorithm.
        let mut r = SplitMix64::new(1234567);
        let expected = [
            6457827717110365317u64,
            3203168211198807973,
            9817491932198370423,
            4593380528125082431,
            16408922859458223821,
        ];
        for e in expected {
            assert_eq!(r.next_u64(), e);
        }
    }

    #[test]
    fn bounded_draws_stay_in_range() {
        let mut r = SplitMix64::new(7);
        for _ in 0..1000 {
            assert!(r.below(19) < 19);
            let v = r.range_i64(-9, 9);
            assert!((-9..=9).contains(&v));
        }
        assert_eq!(r.range_i64(i64::MIN, i64::MIN), i64::MIN);
    }

    #[test]
    fn case_streams_are_stable() {
        let a = SplitMix64::for_case(42, "main", 3).next_u64();
        assert_eq!(a, SplitMix64::for_case(42, "main", 3).next_u64());
        assert_ne!(a, SplitMix64::for_case(42, "main", 4).next_u64());
        assert_ne!(a, SplitMix64::for_case(42, "nd", 3).next_u64());
        assert_ne!(a, SplitMix64::for_case(43, "main", 3).next_u64());
    }
}
