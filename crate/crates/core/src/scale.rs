//! Tone/semitone words and the scales they produce.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::family::{families, family, Family};
use crate::pitch::{NoteIndex, Pitch, PitchRatio};

/// Families above this index are only enumerated on request.
pub const ENUMERATION_LIMIT: u32 = 6;

/// Tone sorts before semitone, which fixes the lexicographic order of words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Tone,
    Semitone,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::Tone => 'T',
            Step::Semitone => 'S',
        }
    }
}

/// The word of successive intervals of a scale in a given family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScaleStructure {
    family_k: u32,
    steps: Vec<Step>,
}

impl ScaleStructure {
    /// Checks that the word has exactly `T` tones and `D` semitones.
    pub fn new(family_k: u32, steps: Vec<Step>) -> Result<Self> {
        let f = family(family_k as i64)?;
        let tones = steps.iter().filter(|&&s| s == Step::Tone).count() as u64;
        let semitones = steps.len() as u64 - tones;
        if tones != f.tones || semitones != f.semitones {
            return Err(Error::InvalidStructure(format!(
                "family {family_k} needs {} tones and {} semitones, got {tones} and {semitones}",
                f.tones, f.semitones
            )));
        }
        Ok(ScaleStructure { family_k, steps })
    }

    /// Parse a word of `T`/`S` letters. Without an explicit family, the one
    /// whose tone and semitone counts match the word is used.
    pub fn parse(word: &str, family_k: Option<u32>) -> Result<Self> {
        let steps = word
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c.to_ascii_uppercase() {
                'T' => Ok(Step::Tone),
                'S' => Ok(Step::Semitone),
                _ => Err(Error::InvalidStructure(format!(
                    "unexpected letter {c:?} in {word:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        let family_k = match family_k {
            Some(k) => k,
            None => infer_family(&steps).ok_or_else(|| {
                Error::InvalidStructure(format!("no family has the step counts of {word:?}"))
            })?,
        };
        ScaleStructure::new(family_k, steps)
    }

    pub fn family_k(&self) -> u32 {
        self.family_k
    }

    pub fn family(&self) -> Family {
        family(self.family_k as i64).expect("structures hold a valid family index")
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Left rotation: the word read from position `i` onwards, wrapping.
    pub fn rotate(&self, i: usize) -> ScaleStructure {
        let mut steps = self.steps.clone();
        steps.rotate_left(i % self.steps.len());
        ScaleStructure {
            family_k: self.family_k,
            steps,
        }
    }

    /// Interval ratios of the word in its family.
    pub fn ratios(&self) -> Vec<PitchRatio> {
        let f = self.family();
        self.steps
            .iter()
            .map(|s| match s {
                Step::Tone => f.theta.ratio(),
                Step::Semitone => f.delta.ratio(),
            })
            .collect()
    }

    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }
}

impl fmt::Display for ScaleStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

fn infer_family(steps: &[Step]) -> Option<u32> {
    let tones = steps.iter().filter(|&&s| s == Step::Tone).count() as u64;
    let semitones = steps.len() as u64 - tones;
    // Note counts grow with k, so stop once p passes the word length.
    let mut f = crate::family::family_base();
    while f.p <= tones + semitones {
        if f.tones == tones && f.semitones == semitones {
            return Some(f.k);
        }
        f = crate::family::family_next(&f);
    }
    None
}

/// A structure realized on a tonality.
///
/// Pitches run from the tonality to the same note one octave up and are
/// strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scale {
    structure: ScaleStructure,
    pitches: Vec<Pitch>,
}

impl Scale {
    /// Validate an explicit pitch list against a family.
    pub fn from_pitches(family_k: u32, pitches: Vec<Pitch>) -> Result<Self> {
        let structure = structure_of_pitches(family_k, &pitches)?;
        Ok(Scale { structure, pitches })
    }

    pub fn structure(&self) -> &ScaleStructure {
        &self.structure
    }

    pub fn tonality(&self) -> Pitch {
        self.pitches[0]
    }

    /// All `p + 1` pitches, octave included.
    pub fn pitches(&self) -> &[Pitch] {
        &self.pitches
    }

    /// Lattice indices of the `p` notes, without the closing octave.
    pub fn note_indices(&self) -> Vec<NoteIndex> {
        self.pitches[..self.pitches.len() - 1]
            .iter()
            .map(|p| p.note)
            .collect()
    }

    /// Each pitch relative to the tonality.
    pub fn relative_ratios(&self) -> Vec<PitchRatio> {
        let base = self.tonality().ratio();
        self.pitches.iter().map(|p| p.ratio() / base).collect()
    }
}

/// Realize `s` starting from `tonality`.
///
/// A tone moves the note index by `ε·D` and a semitone by `−ε·T`; the octave
/// of each pitch follows from reducing the exact running product.
pub fn build_scale(s: &ScaleStructure, tonality: Pitch) -> Scale {
    let mut current = tonality.ratio();
    let mut pitches = Vec::with_capacity(s.len() + 1);
    pitches.push(tonality);
    for r in s.ratios() {
        current = current * r;
        pitches.push(Pitch::from_ratio(current));
    }
    debug_assert_eq!(pitches.last(), Some(&tonality.octaves(1)));
    Scale {
        structure: s.clone(),
        pitches,
    }
}

pub fn structure_of(sc: &Scale) -> ScaleStructure {
    sc.structure.clone()
}

/// Recover the step word of an explicit pitch list.
pub fn structure_of_pitches(family_k: u32, pitches: &[Pitch]) -> Result<ScaleStructure> {
    let f = family(family_k as i64)?;
    if pitches.len() as u64 != f.p + 1 {
        return Err(Error::InvalidScale(format!(
            "family {family_k} scales have {} pitches including the octave, got {}",
            f.p + 1,
            pitches.len()
        )));
    }
    if pitches[pitches.len() - 1].ratio() != pitches[0].ratio().octaves(1) {
        return Err(Error::InvalidScale(
            "last pitch is not the octave of the first".into(),
        ));
    }
    let steps = pitches
        .windows(2)
        .enumerate()
        .map(|(position, w)| {
            let r = w[1].ratio() / w[0].ratio();
            if r == f.theta.ratio() {
                Ok(Step::Tone)
            } else if r == f.delta.ratio() {
                Ok(Step::Semitone)
            } else {
                Err(Error::NotAStep {
                    family: family_k,
                    position,
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    ScaleStructure::new(family_k, steps)
}

pub fn transpose(sc: &Scale, new_tonality: Pitch) -> Scale {
    build_scale(&sc.structure, new_tonality)
}

/// Same pitches, note and octave alike.
pub fn scale_equal(a: &Scale, b: &Scale) -> bool {
    a.pitches == b.pitches
}

/// Every structure of a family in lexicographic order, produced lazily.
#[derive(Debug, Clone)]
pub struct Structures {
    family_k: u32,
    p: usize,
    /// Positions of the tones, strictly increasing.
    tones: Vec<usize>,
    done: bool,
}

impl Iterator for Structures {
    type Item = ScaleStructure;

    fn next(&mut self) -> Option<ScaleStructure> {
        if self.done {
            return None;
        }
        let mut steps = vec![Step::Semitone; self.p];
        for &i in &self.tones {
            steps[i] = Step::Tone;
        }
        // Next combination: bump the rightmost position that still has room.
        let t = self.tones.len();
        match (0..t).rev().find(|&i| self.tones[i] < self.p - t + i) {
            Some(i) => {
                self.tones[i] += 1;
                for j in i + 1..t {
                    self.tones[j] = self.tones[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(ScaleStructure {
            family_k: self.family_k,
            steps,
        })
    }
}

/// All `binomial(p, T)` structures of family `family_k`.
///
/// Families above [`ENUMERATION_LIMIT`] are refused unless `force` is set.
pub fn enumerate_structures(family_k: i64, force: bool) -> Result<Structures> {
    let f = family(family_k)?;
    if f.k > ENUMERATION_LIMIT && !force {
        return Err(Error::EnumerationGuard {
            family: f.k,
            count: f.count.to_string(),
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(Structures {
        family_k: f.k,
        p: f.p as usize,
        tones: (0..f.tones as usize).collect(),
        done: false,
    })
}

/// Number of structures of each family up to `k_max`.
pub fn structure_counts(k_max: u32) -> Vec<BigUint> {
    families(k_max).into_iter().map(|f| f.count).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pitch::xi;

    fn word(w: &str) -> ScaleStructure {
        ScaleStructure::parse(w, None).unwrap()
    }

    #[test]
    fn parse_infers_family() {
        assert_eq!(word("TS").family_k(), 1);
        assert_eq!(word("TST").family_k(), 2);
        assert_eq!(word("SSTST").family_k(), 3);
        assert_eq!(word("TTSTTTS").family_k(), 4);
        assert!(ScaleStructure::parse("TTTT", None).is_err());
        assert!(ScaleStructure::parse("TSX", None).is_err());
        assert!(ScaleStructure::parse("TS", Some(2)).is_err());
    }

    #[test]
    fn builds_major_scale() {
        let sc = build_scale(&word("TTSTTTS"), Pitch::new(0, 0));
        assert_eq!(sc.note_indices(), vec![0, 2, 4, -1, 1, 3, 5]);
        assert_eq!(sc.pitches().last(), Some(&Pitch::new(0, 1)));
    }

    #[test]
    fn builds_fifth_on_sol() {
        let sc = build_scale(&word("TS"), Pitch::new(1, 0));
        assert_eq!(
            sc.pitches(),
            &[Pitch::new(1, 0), Pitch::new(2, 1), Pitch::new(1, 1)]
        );
    }

    #[test]
    fn recovers_structure_from_pitches() {
        let pitches = vec![
            Pitch::new(0, 0),
            Pitch::new(-1, 0),
            Pitch::new(-2, 0),
            Pitch::new(0, 1),
        ];
        let s = structure_of_pitches(2, &pitches).unwrap();
        assert_eq!(s.word(), "TTS");
        assert_eq!(
            s.ratios(),
            vec![xi(-1).ratio(), xi(-1).ratio(), xi(2).ratio()]
        );
    }

    #[test]
    fn rejects_foreign_steps() {
        let pitches = vec![Pitch::new(0, 0), Pitch::new(1, 0), Pitch::new(0, 1)];
        assert!(structure_of_pitches(1, &pitches).is_ok());
        let bad = vec![Pitch::new(0, 0), Pitch::new(2, 0), Pitch::new(0, 1)];
        assert_eq!(
            structure_of_pitches(1, &bad),
            Err(Error::NotAStep {
                family: 1,
                position: 0
            })
        );
    }

    #[test]
    fn enumeration_order_and_guard() {
        let words: Vec<String> = enumerate_structures(2, false)
            .unwrap()
            .map(|s| s.word())
            .collect();
        assert_eq!(words, vec!["TTS", "TST", "STT"]);
        assert_eq!(enumerate_structures(1, false).unwrap().count(), 2);
        assert_eq!(enumerate_structures(4, false).unwrap().count(), 21);
        assert!(matches!(
            enumerate_structures(7, false),
            Err(Error::EnumerationGuard { family: 7, .. })
        ));
        assert!(enumerate_structures(7, true).is_ok());
        assert!(enumerate_structures(0, true).is_err());
    }

    #[test]
    fn rotation_is_left_shift() {
        assert_eq!(word("TTSTTTS").rotate(1).word(), "TSTTTST");
        assert_eq!(word("TTSTTTS").rotate(7).word(), "TTSTTTS");
    }

    #[test]
    fn structure_counts_match_binomials() {
        let counts: Vec<u64> = structure_counts(5)
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect();
        assert_eq!(counts, vec![2, 3, 10, 21, 792]);
    }
}
