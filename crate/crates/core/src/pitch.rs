//! Exact 3-smooth ratios and the octave-reduced note lattice.
//!
//! Every pitch in the crate is a ratio `3^a / 2^b` relative to a free
//! reference frequency. Storing the two exponents keeps the representation
//! canonical and overflow-free; big integers only appear when a ratio has to
//! be compared, rounded, or written out as `NUM/DEN`.

use std::cmp::Ordering;
use std::ops::{Div, Mul};

use num_bigint::BigUint;
use num_integer::Integer;

/// Signed position on the line of fifths.
pub type NoteIndex = i64;

/// Exact ratio `3^pow3 / 2^pow2`.
///
/// Two ratios are equal iff their exponents are equal, and `Ord` is the exact
/// order of the represented values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PitchRatio {
    pub pow3: i64,
    pub pow2: i64,
}

impl PitchRatio {
    pub const UNISON: PitchRatio = PitchRatio { pow3: 0, pow2: 0 };
    pub const OCTAVE: PitchRatio = PitchRatio { pow3: 0, pow2: -1 };

    pub const fn new(pow3: i64, pow2: i64) -> Self {
        PitchRatio { pow3, pow2 }
    }

    pub fn recip(self) -> Self {
        PitchRatio::new(-self.pow3, -self.pow2)
    }

    pub fn pow(self, n: i64) -> Self {
        PitchRatio::new(self.pow3 * n, self.pow2 * n)
    }

    /// Shift by `octaves` octaves (positive is up).
    pub fn octaves(self, octaves: i64) -> Self {
        PitchRatio::new(self.pow3, self.pow2 - octaves)
    }

    /// `1 <= self < 2`.
    pub fn is_reduced(self) -> bool {
        self.pow2 == ell(self.pow3)
    }

    /// Numerator and denominator in lowest terms.
    pub fn numer_denom(self) -> (BigUint, BigUint) {
        let mut num = BigUint::from(1u32);
        let mut den = BigUint::from(1u32);
        if self.pow3 >= 0 {
            num *= pow3_big(self.pow3.unsigned_abs());
        } else {
            den *= pow3_big(self.pow3.unsigned_abs());
        }
        if self.pow2 >= 0 {
            den <<= self.pow2.unsigned_abs();
        } else {
            num <<= self.pow2.unsigned_abs();
        }
        (num, den)
    }

    /// Integer cents, `round(1200 * log2(self))`.
    ///
    /// Exact: with `F = floor(2400 a log2 3)` and `G = F - 2400 b`, twice the
    /// cent value lies strictly inside `(G, G + 1)`, so the nearest integer is
    /// `floor((G + 1) / 2)`. Halves cannot occur, so the rounding direction
    /// on ties never matters.
    pub fn cents(self) -> i64 {
        if self.pow3 == 0 {
            return -1200 * self.pow2;
        }
        let g = ell(2400 * self.pow3) - 2400 * self.pow2;
        (g + 1).div_euclid(2)
    }

    /// Decimal expansion rounded half-up to `places` fractional digits.
    pub fn decimal(self, places: usize) -> String {
        let (num, den) = self.numer_denom();
        let scaled = num * BigUint::from(10u32).pow(places as u32);
        let (mut q, r) = scaled.div_rem(&den);
        if r * 2u32 >= den {
            q += 1u32;
        }
        let digits = q.to_string();
        if places == 0 {
            return digits;
        }
        let padded = format!("{digits:0>width$}", width = places + 1);
        let (int, frac) = padded.split_at(padded.len() - places);
        format!("{int}.{frac}")
    }

    /// Approximate value, for display and test oracles only.
    pub fn to_f64(self) -> f64 {
        (self.pow3 as f64 * 3f64.log2() - self.pow2 as f64).exp2()
    }
}

impl Mul for PitchRatio {
    type Output = PitchRatio;
    fn mul(self, rhs: PitchRatio) -> PitchRatio {
        PitchRatio::new(self.pow3 + rhs.pow3, self.pow2 + rhs.pow2)
    }
}

impl Div for PitchRatio {
    type Output = PitchRatio;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: PitchRatio) -> PitchRatio {
        self * rhs.recip()
    }
}

impl Ord for PitchRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        let q = *self / *other;
        cmp_pow3_pow2(q.pow3, q.pow2)
    }
}

impl PartialOrd for PitchRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Product of two ratios.
pub fn multiply(a: PitchRatio, b: PitchRatio) -> PitchRatio {
    a * b
}

/// Exact comparison of the represented values.
pub fn compare(a: PitchRatio, b: PitchRatio) -> Ordering {
    a.cmp(&b)
}

fn pow3_big(e: u64) -> BigUint {
    let e = u32::try_from(e).expect("exponent of 3 exceeds u32");
    BigUint::from(3u32).pow(e)
}

/// `floor(k * log2 3)`, the octave-reduction exponent of `3^k`.
///
/// Computed from the bit length of `3^|k|`; for `k < 0` the irrationality of
/// `log2 3` gives `ell(k) = -ell(-k) - 1`.
pub fn ell(k: i64) -> i64 {
    match k.cmp(&0) {
        Ordering::Equal => 0,
        Ordering::Greater => pow3_big(k as u64).bits() as i64 - 1,
        Ordering::Less => -ell(-k) - 1,
    }
}

/// Compare `3^x` with `2^y`.
fn cmp_pow3_pow2(x: i64, y: i64) -> Ordering {
    if x == 0 {
        return 0.cmp(&y);
    }
    // 2^ell(x) < 3^x < 2^(ell(x)+1) strictly for x != 0.
    if y <= ell(x) {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// A ratio in `[1, 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedPitch(PitchRatio);

impl ReducedPitch {
    pub fn new(r: PitchRatio) -> Option<Self> {
        r.is_reduced().then_some(ReducedPitch(r))
    }

    pub fn ratio(self) -> PitchRatio {
        self.0
    }

    pub fn index(self) -> NoteIndex {
        self.0.pow3
    }
}

impl From<ReducedPitch> for PitchRatio {
    fn from(r: ReducedPitch) -> PitchRatio {
        r.0
    }
}

/// The reduced note `3^k / 2^ell(k)`.
pub fn xi(k: NoteIndex) -> ReducedPitch {
    ReducedPitch(PitchRatio::new(k, ell(k)))
}

/// Split `a` into `xi(a.pow3) * 2^e`.
pub fn octave_reduce(a: PitchRatio) -> (ReducedPitch, i64) {
    let l = ell(a.pow3);
    (ReducedPitch(PitchRatio::new(a.pow3, l)), l - a.pow2)
}

/// A note of the lattice placed in a given octave: `xi(note) * 2^octave`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pitch {
    pub note: NoteIndex,
    pub octave: i64,
}

impl Pitch {
    pub const fn new(note: NoteIndex, octave: i64) -> Self {
        Pitch { note, octave }
    }

    pub fn ratio(self) -> PitchRatio {
        xi(self.note).ratio().octaves(self.octave)
    }

    pub fn from_ratio(r: PitchRatio) -> Self {
        let (reduced, e) = octave_reduce(r);
        Pitch::new(reduced.index(), e)
    }

    pub fn octaves(self, octaves: i64) -> Self {
        Pitch::new(self.note, self.octave + octaves)
    }
}

impl Ord for Pitch {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ratio().cmp(&other.ratio())
    }
}

impl PartialOrd for Pitch {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
