//! Named scales: the small-family listings, Helmholtz's five pentatonic
//! scales and the five Chinese diaoshi.
//!
//! Entries are embedded as literal note data and validated against their
//! family when the catalog is first built.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::naming::parse_pitch;
use crate::pitch::{NoteIndex, Pitch};
use crate::scale::Scale;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub label: &'static str,
    pub nickname: Option<&'static str>,
    pub scale: Scale,
}

enum Notes {
    /// Indices of the notes on do in the first octave; do✻ closes the scale.
    OnDo(&'static [NoteIndex]),
    /// Full pitch listing including the closing octave.
    Named(&'static str),
}

struct Raw {
    label: &'static str,
    family_k: u32,
    nickname: Option<&'static str>,
    notes: Notes,
}

const fn on_do(label: &'static str, family_k: u32, notes: &'static [NoteIndex]) -> Raw {
    Raw {
        label,
        family_k,
        nickname: None,
        notes: Notes::OnDo(notes),
    }
}

const fn nick(mut raw: Raw, nickname: &'static str) -> Raw {
    raw.nickname = Some(nickname);
    raw
}

const fn named(label: &'static str, notes: &'static str) -> Raw {
    Raw {
        label,
        family_k: 3,
        nickname: None,
        notes: Notes::Named(notes),
    }
}

const RAW: &[Raw] = &[
    on_do("G1_1", 1, &[0, 1]),
    on_do("G1_2", 1, &[0, -1]),
    on_do("G2_1", 2, &[0, 2, 1]),
    on_do("G2_2", 2, &[0, -1, 1]),
    on_do("G2_3", 2, &[0, -1, -2]),
    nick(on_do("G3_1", 3, &[0, 2, 4, 1, 3]), "pentatonique majeure"),
    on_do("G3_2", 3, &[0, 2, -1, 1, 3]),
    on_do("G3_3", 3, &[0, 2, -1, 1, -2]),
    on_do("G3_4", 3, &[0, 2, 4, 1, -2]),
    on_do("G3_5", 3, &[0, -3, -1, 1, 3]),
    nick(
        on_do("G3_6", 3, &[0, -3, -1, 1, -2]),
        "pentatonique mineure",
    ),
    on_do("G3_7", 3, &[0, 2, -1, -4, -2]),
    on_do("G3_8", 3, &[0, -3, -1, -4, -2]),
    on_do("G3_9", 3, &[0, -3, -6, -4, -2]),
    on_do("G3_10", 3, &[0, 2, 4, 6, 3]),
    nick(on_do("G4_1", 4, &[0, 2, 4, -1, -6, -4, -2]), "arabe"),
    on_do("G4_2", 4, &[0, 2, -3, -8, -6, -4, -2]),
    on_do("G4_3", 4, &[0, -5, -10, -8, -6, -4, -2]),
    nick(on_do("G4_4", 4, &[0, -5, -3, -1, 1, 3, 5]), "napolitain"),
    nick(
        on_do("G4_5", 4, &[0, 2, 4, 6, 8, 10, 5]),
        "gamme par tons et sensible",
    ),
    nick(on_do("G4_6", 4, &[0, 2, 4, 6, 8, 3, -2]), "hypolydien"),
    nick(
        on_do("G4_7", 4, &[0, 2, 4, 6, 1, -4, -2]),
        "lydien-phrygien",
    ),
    on_do("G4_8", 4, &[0, 2, 4, -1, 1, -4, -2]),
    on_do("G4_9", 4, &[0, 2, -3, -1, -6, -4, -2]),
    on_do("G4_10", 4, &[0, -5, -3, -8, -6, -4, -2]),
    on_do("G4_11", 4, &[0, 2, -3, -1, 1, 3, 5]),
    on_do("G4_12", 4, &[0, -5, -3, -1, 1, 3, -2]),
    on_do("G4_13", 4, &[0, 2, 4, 6, 8, 3, 5]),
    nick(
        on_do("G4_14", 4, &[0, 2, 4, 6, 1, 3, -2]),
        "Bartok / Raga Vachaspati",
    ),
    nick(on_do("G4_15", 4, &[0, 2, 4, -1, 1, 3, 5]), "ionien"),
    nick(on_do("G4_16", 4, &[0, 2, -3, -1, 1, 3, -2]), "dorien"),
    nick(on_do("G4_17", 4, &[0, -5, -3, -1, 1, -4, -2]), "phrygien"),
    nick(on_do("G4_18", 4, &[0, 2, 4, 6, 1, 3, 5]), "lydien"),
    nick(on_do("G4_19", 4, &[0, 2, 4, -1, 1, 3, -2]), "mixolydien"),
    nick(on_do("G4_20", 4, &[0, 2, -3, -1, 1, -4, -2]), "éolien"),
    nick(on_do("G4_21", 4, &[0, -5, -3, -1, -6, -4, -2]), "locrien"),
    named("H1", "do ré fa sol si♭ do✻"),
    named("H2", "fa sol si♭ do✻ ré✻ fa✻"),
    named("H3", "sol si♭ do✻ ré✻ fa✻ sol✻"),
    named("H4", "si♭ do✻ ré✻ fa✻ sol✻ si♭✻"),
    named("H5", "ré fa sol si♭ do✻ ré✻"),
    named("gong diaoshi", "do ré mi sol la do✻"),
    named("shang diaoshi", "ré mi sol la do✻ ré✻"),
    named("jue diaoshi", "mi sol la do✻ ré✻ mi✻"),
    named("zhi diaoshi", "sol la do✻ ré✻ mi✻ sol✻"),
    named("yu diaoshi", "la do✻ ré✻ mi✻ sol✻ la✻"),
];

fn build(raw: &Raw) -> Result<CatalogEntry> {
    let pitches = match raw.notes {
        Notes::OnDo(indices) => indices
            .iter()
            .map(|&k| Pitch::new(k, 0))
            .chain(std::iter::once(Pitch::new(0, 1)))
            .collect(),
        Notes::Named(listing) => listing
            .split_whitespace()
            .map(parse_pitch)
            .collect::<Result<Vec<_>>>()?,
    };
    Ok(CatalogEntry {
        label: raw.label,
        nickname: raw.nickname,
        scale: Scale::from_pitches(raw.family_k, pitches)?,
    })
}

/// Every named scale, in listing order.
pub fn named_catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        RAW.iter()
            .map(|raw| build(raw).unwrap_or_else(|e| panic!("catalog entry {}: {e}", raw.label)))
            .collect()
    })
}

/// Case-insensitive lookup by label. Diaoshi may be given by their first
/// word alone (`yu` for `yu diaoshi`).
pub fn lookup(label: &str) -> Result<&'static CatalogEntry> {
    let wanted = label.trim().to_lowercase();
    named_catalog()
        .iter()
        .find(|e| {
            let l = e.label.to_lowercase();
            l == wanted || l.strip_suffix(" diaoshi") == Some(wanted.as_str())
        })
        .ok_or_else(|| Error::UnknownScale(label.to_string()))
}
