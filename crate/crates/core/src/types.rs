//! Rotation classes of structures ("types") and their modes.
//!
//! A type is identified by its lexicographically smallest rotation. The first
//! four families also carry conventional representatives, which fix the
//! numbering of modes: mode `i` of a type starts on the `i`-th note of the
//! representative built on do.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::family::family;
use crate::naming::{name_of, Style};
use crate::pitch::{NoteIndex, Pitch};
use crate::scale::{build_scale, enumerate_structures, Scale, ScaleStructure};

/// A conventional type representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NamedType {
    pub family_k: u32,
    /// Short id used on the command line, `t1`, `t2`, ...
    pub id: &'static str,
    pub label: &'static str,
    pub word: &'static str,
    /// Traditional names of modes, by rotation index.
    pub mode_names: &'static [(usize, &'static str)],
}

pub const NAMED_TYPES: &[NamedType] = &[
    NamedType {
        family_k: 1,
        id: "t1",
        label: "τ¹",
        word: "TS",
        mode_names: &[],
    },
    NamedType {
        family_k: 2,
        id: "t1",
        label: "τ²",
        word: "TST",
        mode_names: &[],
    },
    NamedType {
        family_k: 3,
        id: "t1",
        label: "τ³₁",
        word: "TSSST",
        mode_names: &[],
    },
    NamedType {
        family_k: 3,
        id: "t2",
        label: "τ³₂",
        word: "STSTS",
        mode_names: &[],
    },
    NamedType {
        family_k: 4,
        id: "t1",
        label: "τ⁴₁",
        word: "TTSSTTT",
        mode_names: &[
            (0, "arabe"),
            (3, "napolitain"),
            (4, "gamme par tons et sensible"),
            (5, "hypolydien"),
            (6, "lydien-phrygien"),
        ],
    },
    NamedType {
        family_k: 4,
        id: "t2",
        label: "τ⁴₂",
        word: "TTSTSTT",
        mode_names: &[(6, "Bartok / Raga Vachaspati")],
    },
    NamedType {
        family_k: 4,
        id: "t3",
        label: "τ⁴₃",
        word: "TTSTTTS",
        mode_names: &[
            (0, "ionien"),
            (1, "dorien"),
            (2, "phrygien"),
            (3, "lydien"),
            (4, "mixolydien"),
            (5, "éolien"),
            (6, "locrien"),
        ],
    },
];

/// Rotation class of a structure.
///
/// Equality and hashing only look at the family and the canonical word.
#[derive(Debug, Clone)]
pub struct TypeClass {
    canonical: ScaleStructure,
    representative: ScaleStructure,
    /// `representative == canonical.rotate(offset)`.
    offset: usize,
    named: Option<&'static NamedType>,
}

impl PartialEq for TypeClass {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for TypeClass {}

impl std::hash::Hash for TypeClass {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.canonical.hash(state);
    }
}

impl TypeClass {
    pub fn family_k(&self) -> u32 {
        self.canonical.family_k()
    }

    pub fn p(&self) -> usize {
        self.canonical.len()
    }

    pub fn canonical(&self) -> &ScaleStructure {
        &self.canonical
    }

    /// The conventional representative if there is one, else the canonical word.
    pub fn representative(&self) -> &ScaleStructure {
        &self.representative
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn named(&self) -> Option<&'static NamedType> {
        self.named
    }

    pub fn label(&self) -> Option<&'static str> {
        self.named.map(|n| n.label)
    }

    /// The `p` rotations of the canonical word, all distinct.
    pub fn rotations(&self) -> Vec<ScaleStructure> {
        (0..self.p()).map(|i| self.canonical.rotate(i)).collect()
    }

    /// The fundamental scale: the representative built on do.
    pub fn fundamental(&self) -> Scale {
        build_scale(&self.representative, Pitch::new(0, 0))
    }
}

impl fmt::Display for TypeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.named {
            Some(n) => f.write_str(n.label),
            None => write!(f, "[{}]", self.canonical),
        }
    }
}

fn canonical_rotation(s: &ScaleStructure) -> (ScaleStructure, usize) {
    (0..s.len())
        .map(|i| (s.rotate(i), i))
        .min()
        .expect("structures are never empty")
}

pub fn classify_type(s: &ScaleStructure) -> TypeClass {
    let (canonical, _) = canonical_rotation(s);
    let named = NAMED_TYPES
        .iter()
        .filter(|n| n.family_k == s.family_k())
        .find(|n| {
            let rep = ScaleStructure::parse(n.word, Some(n.family_k)).expect("valid named type");
            canonical_rotation(&rep).0 == canonical
        });
    let (representative, offset) = match named {
        Some(n) => {
            let rep = ScaleStructure::parse(n.word, Some(n.family_k)).expect("valid named type");
            let offset = (0..canonical.len())
                .find(|&i| canonical.rotate(i) == rep)
                .expect("representative is a rotation of the canonical word");
            (rep, offset)
        }
        None => (canonical.clone(), 0),
    };
    TypeClass {
        canonical,
        representative,
        offset,
        named,
    }
}

/// `binomial(p, T) / p`.
pub fn count_types(family_k: i64) -> Result<BigUint> {
    Ok(family(family_k)?.type_count())
}

/// All types of a family, ordered by canonical word.
pub fn types_of_family(family_k: i64, force: bool) -> Result<Vec<TypeClass>> {
    Ok(enumerate_structures(family_k, force)?
        .filter(|s| canonical_rotation(s).1 == 0)
        .map(|s| classify_type(&s))
        .collect())
}

/// Look a type up by `t<n>` id, `c<n>` canonical position, printed label, or
/// any member word.
pub fn find_type(family_k: i64, label: &str, force: bool) -> Result<TypeClass> {
    let unknown = || Error::UnknownType {
        family: family_k.max(0) as u32,
        label: label.to_string(),
    };
    let fam = family(family_k)?;
    if let Some(n) = NAMED_TYPES
        .iter()
        .find(|n| n.family_k == fam.k && (n.id == label || n.label == label))
    {
        let rep = ScaleStructure::parse(n.word, Some(n.family_k))?;
        return Ok(classify_type(&rep));
    }
    if let Some(pos) = label
        .strip_prefix('c')
        .and_then(|s| s.parse::<usize>().ok())
    {
        return types_of_family(family_k, force)?
            .into_iter()
            .nth(pos)
            .ok_or_else(unknown);
    }
    match ScaleStructure::parse(label, Some(fam.k)) {
        Ok(s) => Ok(classify_type(&s)),
        Err(_) => Err(unknown()),
    }
}

/// A rotation of a type together with the note it starts on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModeDescriptor {
    pub type_class: TypeClass,
    pub index: usize,
    pub mode_note: NoteIndex,
    pub traditional_name: Option<&'static str>,
}

impl ModeDescriptor {
    /// Traditional name, or "mode de <note>".
    pub fn display_name(&self, style: Style) -> String {
        match self.traditional_name {
            Some(name) => name.to_string(),
            None => format!("mode de {}", name_of(self.mode_note).render(style)),
        }
    }
}

pub fn modes_of(t: &TypeClass) -> Vec<ModeDescriptor> {
    let fundamental = t.fundamental();
    (0..t.p())
        .map(|i| ModeDescriptor {
            type_class: t.clone(),
            index: i,
            mode_note: fundamental.pitches()[i].note,
            traditional_name: t.named.and_then(|n| {
                n.mode_names
                    .iter()
                    .find(|(j, _)| *j == i)
                    .map(|(_, name)| *name)
            }),
        })
        .collect()
}

/// Mode `i` of `t`, realized on `tonality`.
pub fn mode_scale(t: &TypeClass, i: usize, tonality: Pitch) -> Result<Scale> {
    if i >= t.p() {
        return Err(Error::RotationOutOfRange { index: i, p: t.p() });
    }
    Ok(build_scale(&t.representative.rotate(i), tonality))
}
