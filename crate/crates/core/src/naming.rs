//! French note names with any number of sharps or flats.
//!
//! Index `k` is written `r + 7q` with `r` in `-1..=5`; `r` picks the base
//! name along the line of fifths (fa do sol ré la mi si) and `q` counts
//! sharps (positive) or flats (negative). Alterations beyond double sharps
//! and flats are supported as a natural extension of the same rule.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pitch::{xi, NoteIndex, Pitch};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Base {
    Do,
    Re,
    Mi,
    Fa,
    Sol,
    La,
    Si,
}

impl Base {
    /// Fifths order starting from fa, matching residues -1..=5.
    const BY_RESIDUE: [Base; 7] = [
        Base::Fa,
        Base::Do,
        Base::Sol,
        Base::Re,
        Base::La,
        Base::Mi,
        Base::Si,
    ];

    pub fn residue(self) -> i64 {
        match self {
            Base::Fa => -1,
            Base::Do => 0,
            Base::Sol => 1,
            Base::Re => 2,
            Base::La => 3,
            Base::Mi => 4,
            Base::Si => 5,
        }
    }

    pub fn name(self, style: Style) -> &'static str {
        match (self, style) {
            (Base::Do, _) => "do",
            (Base::Re, Style::Unicode) => "ré",
            (Base::Re, Style::Ascii) => "re",
            (Base::Mi, _) => "mi",
            (Base::Fa, _) => "fa",
            (Base::Sol, _) => "sol",
            (Base::La, _) => "la",
            (Base::Si, _) => "si",
        }
    }
}

/// Glyph set used when rendering names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Style {
    /// ♯ ♭ and ✻ for octaves.
    #[default]
    Unicode,
    /// `#`, `b` and `*`, with `re` for ré.
    Ascii,
}

impl Style {
    fn sharp(self) -> &'static str {
        match self {
            Style::Unicode => "♯",
            Style::Ascii => "#",
        }
    }

    fn flat(self) -> &'static str {
        match self {
            Style::Unicode => "♭",
            Style::Ascii => "b",
        }
    }

    fn octave_up(self) -> &'static str {
        match self {
            Style::Unicode => "✻",
            Style::Ascii => "*",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NoteName {
    pub base: Base,
    /// Sharps if positive, flats if negative.
    pub alteration: i64,
}

impl NoteName {
    pub fn render(self, style: Style) -> String {
        let mark = if self.alteration >= 0 {
            style.sharp()
        } else {
            style.flat()
        };
        let mut s = self.base.name(style).to_string();
        s.push_str(&mark.repeat(self.alteration.unsigned_abs() as usize));
        s
    }
}

impl fmt::Display for NoteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Style::Unicode))
    }
}

impl FromStr for NoteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, octave) = parse_with_octave(s)?;
        if octave != 0 {
            return Err(Error::NoteParse(s.to_string()));
        }
        Ok(name)
    }
}

pub fn name_of(k: NoteIndex) -> NoteName {
    let q = (k + 1).div_euclid(7);
    let r = k - 7 * q;
    NoteName {
        base: Base::BY_RESIDUE[(r + 1) as usize],
        alteration: q,
    }
}

pub fn index_of(n: NoteName) -> NoteIndex {
    n.base.residue() + 7 * n.alteration
}

/// Indices `k_from..=k_to` ordered by increasing reduced pitch.
pub fn sort_by_pitch(k_from: NoteIndex, k_to: NoteIndex) -> Vec<NoteIndex> {
    let mut ks: Vec<NoteIndex> = (k_from..=k_to).collect();
    ks.sort_by_key(|&k| xi(k));
    ks
}

/// Name plus octave marks: `do✻` is one octave up, `do,` one octave down.
pub fn render_pitch(p: Pitch, style: Style) -> String {
    let mut s = name_of(p.note).render(style);
    let mark = if p.octave >= 0 {
        style.octave_up()
    } else {
        ","
    };
    s.push_str(&mark.repeat(p.octave.unsigned_abs() as usize));
    s
}

/// Parse `do`, `Ré#`, `sib*`, `la♭✻✻`, `sol,` into a pitch.
pub fn parse_pitch(s: &str) -> Result<Pitch> {
    let (name, octave) = parse_with_octave(s)?;
    Ok(Pitch::new(index_of(name), octave))
}

fn parse_with_octave(input: &str) -> Result<(NoteName, i64)> {
    let err = || Error::NoteParse(input.to_string());
    let lower = input.trim().to_lowercase();
    const BASES: [(&str, Base); 8] = [
        ("sol", Base::Sol),
        ("do", Base::Do),
        ("ré", Base::Re),
        ("re", Base::Re),
        ("mi", Base::Mi),
        ("fa", Base::Fa),
        ("la", Base::La),
        ("si", Base::Si),
    ];
    let (base, rest) = BASES
        .iter()
        .find_map(|(prefix, base)| lower.strip_prefix(prefix).map(|rest| (*base, rest)))
        .ok_or_else(err)?;

    let mut alteration = 0i64;
    let mut octave = 0i64;
    let mut in_octave_marks = false;
    for c in rest.chars() {
        let (alt, oct) = match c {
            '#' | '♯' => (1, 0),
            'b' | '♭' => (-1, 0),
            '*' | '✻' => (0, 1),
            ',' => (0, -1),
            _ => return Err(err()),
        };
        if alt != 0 {
            if in_octave_marks || alteration * alt < 0 {
                return Err(err());
            }
            alteration += alt;
        } else {
            if octave * oct < 0 {
                return Err(err());
            }
            in_octave_marks = true;
            octave += oct;
        }
    }
    Ok((NoteName { base, alteration }, octave))
}
