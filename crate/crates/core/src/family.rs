//! Scale families generated by repeatedly breaking the tone.
//!
//! Family 1 splits the octave into a fifth and a fourth. Each following
//! family breaks its tone `θ` into `δ · (θ/δ)`, keeping whichever pair of
//! interval sizes preserves `δ' < θ'`. A linear variant that always swaps the
//! roles is provided as well; it yields Fibonacci note counts but eventually
//! produces a "semitone" below the unison.

use std::cmp::Ordering;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::pitch::{xi, NoteIndex, PitchRatio, ReducedPitch};

/// One generation of the tone-breaking recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub k: u32,
    /// Number of notes per octave.
    pub p: u64,
    /// Number of tones `T`.
    pub tones: u64,
    /// Number of semitones `D`.
    pub semitones: u64,
    pub theta: ReducedPitch,
    pub delta: ReducedPitch,
    /// `+1` or `-1`; `theta = xi(epsilon * D)` and `delta = xi(-epsilon * T)`.
    pub epsilon: i64,
    /// Number of scales, `binomial(p, T)`.
    pub count: BigUint,
}

impl Family {
    /// `theta^T * delta^D`, which is always the octave.
    pub fn octave_product(&self) -> PitchRatio {
        self.theta.ratio().pow(self.tones as i64) * self.delta.ratio().pow(self.semitones as i64)
    }

    /// Number of rotation classes, `binomial(p, T) / p`.
    pub fn type_count(&self) -> BigUint {
        &self.count / self.p
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn family_base() -> Family {
    Family {
        k: 1,
        p: 2,
        tones: 1,
        semitones: 1,
        theta: xi(1),
        delta: xi(-1),
        epsilon: 1,
        count: BigUint::from(2u32),
    }
}

pub fn family_next(f: &Family) -> Family {
    let theta = f.theta.ratio();
    let delta = f.delta.ratio();
    let quotient = ReducedPitch::new(theta / delta).expect("theta/delta lies in (1, 2)");
    let (theta, delta, tones, semitones, epsilon) = if theta < delta.pow(2) {
        (
            f.delta,
            quotient,
            f.tones + f.semitones,
            f.tones,
            -f.epsilon,
        )
    } else {
        (quotient, f.delta, f.tones, f.tones + f.semitones, f.epsilon)
    };
    let p = tones + semitones;
    debug_assert_eq!(p, f.p + f.tones);
    Family {
        k: f.k + 1,
        p,
        tones,
        semitones,
        theta,
        delta,
        epsilon,
        count: binomial(p, tones),
    }
}

pub fn family(k: i64) -> Result<Family> {
    if k < 1 {
        return Err(Error::InvalidFamily(k));
    }
    let mut f = family_base();
    for _ in 1..k {
        f = family_next(&f);
    }
    Ok(f)
}

/// Families `1..=k_max`.
pub fn families(k_max: u32) -> Vec<Family> {
    let mut out = Vec::with_capacity(k_max as usize);
    let mut f = family_base();
    for _ in 0..k_max {
        let next = family_next(&f);
        out.push(std::mem::replace(&mut f, next));
    }
    out
}

/// Lattice indices `(ε·D, −ε·T)` of the tone and the semitone.
pub fn family_xi_indices(f: &Family) -> (NoteIndex, NoteIndex) {
    let d = f.semitones as i64;
    let t = f.tones as i64;
    (f.epsilon * d, -f.epsilon * t)
}

/// A step of the linear recursion, which may stop being a valid family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFamily {
    pub step: u32,
    pub p: u64,
    pub tones: u64,
    pub semitones: u64,
    pub theta: PitchRatio,
    pub delta: PitchRatio,
}

impl LinearFamily {
    pub fn semitone_below_unison(&self) -> bool {
        self.delta < PitchRatio::UNISON
    }

    pub fn semitone_exceeds_tone(&self) -> bool {
        self.delta > self.theta
    }

    pub fn is_valid(&self) -> bool {
        !self.semitone_below_unison() && !self.semitone_exceeds_tone()
    }
}

impl From<&Family> for LinearFamily {
    fn from(f: &Family) -> Self {
        LinearFamily {
            step: f.k,
            p: f.p,
            tones: f.tones,
            semitones: f.semitones,
            theta: f.theta.ratio(),
            delta: f.delta.ratio(),
        }
    }
}

/// Always break the tone as `θ' = δ`, `δ' = θ/δ`.
pub fn linear_family_next(f: &LinearFamily) -> LinearFamily {
    LinearFamily {
        step: f.step + 1,
        p: f.p + f.tones,
        tones: f.tones + f.semitones,
        semitones: f.tones,
        theta: f.delta,
        delta: f.theta / f.delta,
    }
}

/// Position of `h/k` relative to `log2(3/2)`; `1/0` counts as above.
fn side_of(h: u64, k: u64) -> Ordering {
    if k == 0 {
        return Ordering::Greater;
    }
    // h/k < log2(3/2)  <=>  2^(h+k) < 3^k
    let power = PitchRatio::new(k as i64, (h + k) as i64);
    power.cmp(&PitchRatio::UNISON).reverse()
}

/// Partial quotients `[a0; a1, ...]` of `log2(3/2)`, `n` terms.
///
/// Each `a` is the largest integer keeping the intermediate fraction
/// `(a h1 + h0) / (a k1 + k0)` on the same side as the convergent two steps
/// back. Every comparison is an exact power comparison, so the cost is
/// dominated by `3^k` for the largest denominator reached.
pub fn continued_fraction(n: usize) -> Vec<u64> {
    let (mut h0, mut k0, mut h1, mut k1) = (0u64, 1u64, 1u64, 0u64);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let side = side_of(h0, k0);
        let keeps_side = |a: u64| side_of(a * h1 + h0, a * k1 + k0) == side;
        let a = if !keeps_side(1) {
            0
        } else {
            let mut hi = 2;
            while keeps_side(hi) {
                hi *= 2;
            }
            let mut lo = hi / 2;
            while hi - lo > 1 {
                let mid = lo + (hi - lo) / 2;
                if keeps_side(mid) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            lo
        };
        out.push(a);
        (h0, k0, h1, k1) = (h1, k1, a * h1 + h0, a * k1 + k0);
    }
    out
}

/// First `n` convergents `(num, den)` of `log2(3/2)`, starting from `1/1`.
///
/// The trivial zeroth convergent `0/1` is skipped, so the list opens with
/// the approximations 1, 1/2, 3/5, 7/12, ...
pub fn convergents(n: usize) -> Vec<(u64, u64)> {
    let quotients = continued_fraction(n + 1);
    let (mut h0, mut k0, mut h1, mut k1) = (0u64, 1u64, 1u64, 0u64);
    let mut out = Vec::with_capacity(n + 1);
    for a in quotients {
        (h0, k0, h1, k1) = (h1, k1, a * h1 + h0, a * k1 + k0);
        out.push((h1, k1));
    }
    out.remove(0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_family() {
        let f = family_base();
        assert_eq!((f.p, f.tones, f.semitones, f.epsilon), (2, 1, 1, 1));
        assert_eq!(f.theta.ratio(), PitchRatio::new(1, 1));
        assert_eq!(f.delta.ratio(), PitchRatio::new(-1, -2));
        assert_eq!(f.count, BigUint::from(2u32));
        assert_eq!(f.octave_product(), PitchRatio::OCTAVE);
    }

    #[test]
    fn family_two_and_six() {
        let f2 = family(2).unwrap();
        assert_eq!((f2.p, f2.tones, f2.semitones), (3, 2, 1));
        assert_eq!(f2.theta, xi(-1));
        assert_eq!(f2.delta, xi(2));
        assert_eq!(f2.count, BigUint::from(3u32));

        let f6 = family(6).unwrap();
        assert_eq!((f6.p, f6.tones, f6.semitones), (17, 12, 5));
        assert_eq!(f6.theta.ratio(), PitchRatio::new(-5, -8));
        assert_eq!(f6.delta.ratio(), PitchRatio::new(12, 19));
    }

    #[test]
    fn rejects_family_zero() {
        assert_eq!(family(0), Err(Error::InvalidFamily(0)));
        assert!(family(-3).is_err());
    }

    #[test]
    fn xi_indices_first_families() {
        let got: Vec<_> = families(10).iter().map(family_xi_indices).collect();
        assert_eq!(
            got,
            vec![
                (1, -1),
                (-1, 2),
                (-3, 2),
                (2, -5),
                (7, -5),
                (-5, 12),
                (-17, 12),
                (-29, 12),
                (12, -41),
                (-41, 53)
            ]
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 5), BigUint::from(21u32));
        assert_eq!(binomial(12, 5), BigUint::from(792u32));
        assert_eq!(binomial(3, 5), BigUint::from(0u32));
        assert_eq!(binomial(94, 53).to_string(), "760365888182828026538367852");
    }

    #[test]
    fn linear_variant_from_base() {
        let mut f = LinearFamily::from(&family_base());
        let mut ps = vec![f.p];
        for _ in 0..4 {
            f = linear_family_next(&f);
            ps.push(f.p);
        }
        assert_eq!(ps, vec![2, 3, 5, 8, 13]);

        let f2 = linear_family_next(&LinearFamily::from(&family_base()));
        assert_eq!(f2.theta, family(2).unwrap().theta.ratio());
        assert_eq!(f2.delta, family(2).unwrap().delta.ratio());
    }

    #[test]
    fn linear_variant_breaks_at_eight_notes() {
        let base = LinearFamily::from(&family_base());
        let five = linear_family_next(&linear_family_next(&base));
        assert_eq!((five.tones, five.semitones), (3, 2));
        assert_eq!(five.theta, PitchRatio::new(2, 3));
        assert_eq!(five.delta, PitchRatio::new(-3, -5));
        assert!(five.semitone_exceeds_tone());

        let eight = linear_family_next(&five);
        assert_eq!(eight.p, 8);
        assert_eq!(eight.theta, PitchRatio::new(-3, -5));
        assert_eq!(eight.delta, PitchRatio::new(5, 8));
        assert!(eight.semitone_below_unison());
        assert!(!eight.is_valid());
    }

    #[test]
    fn continued_fraction_terms() {
        assert_eq!(continued_fraction(10), vec![0, 1, 1, 2, 2, 3, 1, 5, 2, 23]);
    }

    #[test]
    fn convergent_list() {
        assert_eq!(convergents(4), vec![(1, 1), (1, 2), (3, 5), (7, 12)]);
        assert_eq!(
            convergents(7),
            vec![
                (1, 1),
                (1, 2),
                (3, 5),
                (7, 12),
                (24, 41),
                (31, 53),
                (179, 306)
            ]
        );
    }
}
