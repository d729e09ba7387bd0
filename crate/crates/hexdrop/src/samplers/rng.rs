//! Deterministic uniform random streams.
//!
//! The stream is xoshiro256++ (Blackman & Vigna) seeded through splitmix64,
//! both implemented from the published reference code so that a given seed
//! produces the same draw sequence on every platform and in every build.
//! Draws are mapped to doubles in the *open* interval (0, 1): a raw zero
//! (probability 2^-53 per draw) is replaced by the smallest positive double,
//! and the largest possible output is 1 - 2^-53.

/// Source of standard-uniform variates in the open interval (0, 1).
///
/// Implemented by [`RandomStream`]; test code may substitute scripted
/// sequences.
pub trait UnitSource {
    fn next_unit(&mut self) -> f64;
}

/// splitmix64 finalizer: a bijective 64-bit mix with full avalanche.
///
/// Used to expand seeds into generator state and to derive substream seeds
/// from (master seed, key) tuples.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

#[inline]
fn splitmix64_next(state: &mut u64) -> u64 {
    *state = state.wrapping_add(GOLDEN_GAMMA);
    mix64(*state)
}

/// Deterministic stream of standard-uniform draws.
///
/// Same seed, same sequence. A stream is single-owner: clone it or derive
/// substreams rather than sharing one across threads.
#[derive(Debug, Clone)]
pub struct RandomStream {
    state: [u64; 4],
    draws: u64,
}

impl RandomStream {
    /// Seed the stream from a 64-bit value (state expanded via splitmix64).
    pub fn from_seed(seed: u64) -> Self {
        let mut sm = seed;
        let state = [
            splitmix64_next(&mut sm),
            splitmix64_next(&mut sm),
            splitmix64_next(&mut sm),
            splitmix64_next(&mut sm),
        ];
        RandomStream { state, draws: 0 }
    }

    /// Derive an independent substream keyed by two integers.
    ///
    /// The substream seed is `mix64(mix64(mix64(master ^ gamma) ^ key_a) ^ key_b)`,
    /// a chain of avalanche-quality mixes, so nearby keys yield unrelated
    /// streams and the mapping is stable across releases.
    pub fn substream(master_seed: u64, key_a: u64, key_b: u64) -> Self {
        let mut h = mix64(master_seed ^ GOLDEN_GAMMA);
        h = mix64(h ^ key_a);
        h = mix64(h ^ key_b);
        RandomStream::from_seed(h)
    }

    /// Number of draws taken so far.
    pub fn draws(&self) -> u64 {
        self.draws
    }

    /// Next raw 64-bit output (xoshiro256++ step).
    pub fn next_u64(&mut self) -> u64 {
        let s = &mut self.state;
        let result = s[0].wrapping_add(s[3]).rotate_left(23).wrapping_add(s[0]);
        let t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
        result
    }
}

/// Map a raw 64-bit word to (0, 1): the top 53 bits scale to [0, 1), and a
/// raw zero becomes the smallest positive double so the interval stays open.
#[inline]
fn unit_from_raw(raw: u64) -> f64 {
    let u = (raw >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    if u == 0.0 {
        f64::from_bits(1)
    } else {
        u
    }
}

impl UnitSource for RandomStream {
    fn next_unit(&mut self) -> f64 {
        self.draws += 1;
        unit_from_raw(self.next_u64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference outputs computed from the published splitmix64/xoshiro256++
    // C sources.
    #[test]
    fn splitmix64_reference_sequence() {
        let mut s = 0u64;
        let got: Vec<u64> = (0..5).map(|_| splitmix64_next(&mut s)).collect();
        assert_eq!(
            got,
            vec![
                0xE220_A839_7B1D_CDAF,
                0x6E78_9E6A_A1B9_65F4,
                0x06C4_5D18_8009_454F,
                0xF88B_B8A8_724C_81EC,
                0x1B39_896A_51A8_749B,
            ]
        );
    }

    #[test]
    fn xoshiro_reference_sequence_seed_42() {
        let mut rng = RandomStream::from_seed(42);
        assert_eq!(
            rng.state,
            [
                0xBDD7_3226_2FEB_6E95,
                0x28EF_E333_B266_F103,
                0x4752_6757_130F_9F52,
                0x581C_E1FF_0E4A_E394,
            ]
        );
        let got: Vec<u64> = (0..8).map(|_| rng.next_u64()).collect();
        assert_eq!(
            got,
            vec![
                0xD076_4D4F_4476_689F,
                0x519E_4174_576F_3791,
                0xFBE0_7CFB_0C24_ED8C,
                0xB37D_9F60_0CD8_35B8,
                0xCB23_1C38_7484_6A73,
                0x968D_9F00_4E50_DE7D,
                0x2017_18FF_221A_3556,
                0x9AE9_4E07_0ED8_CB46,
            ]
        );
    }

    #[test]
    fn xoshiro_reference_sequence_seed_0() {
        let mut rng = RandomStream::from_seed(0);
        let got: Vec<u64> = (0..4).map(|_| rng.next_u64()).collect();
        assert_eq!(
            got,
            vec![
                0x5317_5D61_490B_23DF,
                0x61DA_6F3D_C380_D507,
                0x5C0F_DF91_EC9A_7BFC,
                0x02EE_BF8C_3BBE_5E1A,
            ]
        );
    }

    #[test]
    fn unit_draws_match_reference() {
        let mut rng = RandomStream::from_seed(42);
        let expected = [
            0.8143051451229099,
            0.3188210400616611,
            0.9838941681774888,
            0.7011355981347556,
        ];
        for &e in &expected {
            assert_eq!(rng.next_unit(), e);
        }
        assert_eq!(rng.draws(), 4);
    }

    #[test]
    fn same_seed_same_sequence() {
        let mut a = RandomStream::from_seed(0xDEAD_BEEF);
        let mut b = RandomStream::from_seed(0xDEAD_BEEF);
        for _ in 0..1000 {
            assert_eq!(a.next_unit(), b.next_unit());
        }
    }

    #[test]
    fn raw_zero_maps_to_smallest_positive_double() {
        let lo = unit_from_raw(0);
        assert!(lo > 0.0);
        assert_eq!(lo, f64::from_bits(1));
        // 2^11 - 1 still has all significand bits zero after the shift
        assert_eq!(unit_from_raw((1 << 11) - 1), f64::from_bits(1));
        assert!(unit_from_raw(u64::MAX) < 1.0);
        assert_eq!(unit_from_raw(1 << 11), 1.0 / (1u64 << 53) as f64);
    }

    #[test]
    fn draws_stay_in_open_interval() {
        let mut rng = RandomStream::from_seed(7);
        for _ in 0..100_000 {
            let u = rng.next_unit();
            assert!(u > 0.0 && u < 1.0, "u = {u}");
        }
    }

    #[test]
    fn substreams_differ_by_key() {
        let mut a = RandomStream::substream(99, 0, 0);
        let mut b = RandomStream::substream(99, 1, 0);
        let mut c = RandomStream::substream(99, 0, 1);
        let (va, vb, vc) = (a.next_u64(), b.next_u64(), c.next_u64());
        assert_ne!(va, vb);
        assert_ne!(va, vc);
        assert_ne!(vb, vc);
    }

    #[test]
    fn substream_is_stable() {
        // Pin the derivation chain so a refactor cannot silently change it.
        let mut h = mix64(42u64 ^ super::GOLDEN_GAMMA);
        h = mix64(h ^ 5u64);
        h = mix64(h ^ 3u64);
        let mut direct = RandomStream::from_seed(h);
        let mut derived = RandomStream::substream(42, 5, 3);
        assert_eq!(direct.next_u64(), derived.next_u64());
    }
}
