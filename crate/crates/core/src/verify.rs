//! Machine checks of the family recursion's structural properties, a
//! comparison against the published table of lattice indices, and the
//! failure of the linear recursion at eight notes.

use num_integer::Integer;
use serde::Serialize;

use crate::family::{families, family_base, family_xi_indices, linear_family_next, LinearFamily};
use crate::naming::{render_pitch, Style};
use crate::pitch::{ell, xi, NoteIndex, Pitch, PitchRatio};
use crate::scale::Step;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub ok: bool,
    pub detail: String,
}

impl Witness {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Witness {
            ok,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    /// Inclusive range of family indices covered, if any.
    pub range: Option<(u32, u32)>,
    /// True iff no witness failed.
    pub passed: bool,
    /// Informational reports do not affect the overall verdict.
    pub informational: bool,
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    fn new(name: &str, range: Option<(u32, u32)>, witnesses: Vec<Witness>) -> Self {
        CheckReport {
            name: name.to_string(),
            range,
            passed: witnesses.iter().all(|w| w.ok),
            informational: false,
            witnesses,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(|w| !w.ok)
    }
}

/// `gcd(T, D) = 1` and `gcd(T, p) = 1` for every family up to `k_max`.
pub fn check_coprime_counts(k_max: u32) -> CheckReport {
    let witnesses = families(k_max)
        .iter()
        .map(|f| {
            let g1 = f.tones.gcd(&f.semitones);
            let g2 = f.tones.gcd(&f.p);
            Witness::new(
                g1 == 1 && g2 == 1,
                format!(
                    "k={}: gcd(T={}, D={}) = {g1}, gcd(T, p={}) = {g2}",
                    f.k, f.tones, f.semitones, f.p
                ),
            )
        })
        .collect();
    CheckReport::new(
        "coprime tone and semitone counts",
        Some((1, k_max)),
        witnesses,
    )
}

/// `p` divides `binomial(p, T)`, so the structures split into whole types.
pub fn check_type_count_divisibility(k_max: u32) -> CheckReport {
    let witnesses = families(k_max)
        .iter()
        .map(|f| {
            let (q, r) = f.count.div_rem(&f.p.into());
            let ok = r == 0u32.into();
            Witness::new(
                ok,
                if ok {
                    format!("k={}: {} / {} = {q}", f.k, f.count, f.p)
                } else {
                    format!("k={}: {} leaves remainder {r} modulo {}", f.k, f.count, f.p)
                },
            )
        })
        .collect();
    CheckReport::new(
        "note count divides structure count",
        Some((1, k_max)),
        witnesses,
    )
}

/// Tone and semitone are lattice notes `xi(εD)` and `xi(−εT)`, and
/// `ell(εD) − ell(−εT) = ell(ε(T+D))`.
pub fn check_lattice_indices(k_max: u32) -> CheckReport {
    let witnesses = families(k_max)
        .iter()
        .flat_map(|f| {
            let (ti, di) = family_xi_indices(f);
            let eps = f.epsilon;
            let p = f.p as i64;
            let indices_ok = f.theta == xi(ti) && f.delta == xi(di);
            let lhs = ell(ti) - ell(di);
            let rhs = ell(eps * p);
            let sign = if eps > 0 { '+' } else { '-' };
            [
                Witness::new(
                    indices_ok,
                    format!("k={}: ε={sign}1, θ = ξ({ti}), δ = ξ({di})", f.k),
                ),
                Witness::new(
                    lhs == rhs,
                    format!(
                        "k={}: ℓ({ti}) − ℓ({di}) = {lhs}, ℓ({}) = {rhs}",
                        f.k,
                        eps * p
                    ),
                ),
            ]
        })
        .collect();
    CheckReport::new(
        "tone and semitone lie on the lattice",
        Some((1, k_max)),
        witnesses,
    )
}

/// Tone and semitone lattice indices as printed in the published family
/// table, rows 1 to 10.
pub const PUBLISHED_XI_TABLE: [(NoteIndex, NoteIndex); 10] = [
    (1, -1),
    (-1, 2),
    (2, -3),
    (2, -5),
    (7, -5),
    (5, 12),
    (-17, 12),
    (-29, 12),
    (12, -41),
    (-41, 53),
];

/// Compare computed lattice indices with the published table. Mismatches
/// are reported as failing witnesses; the report is informational.
pub fn check_published_table() -> CheckReport {
    let witnesses = families(PUBLISHED_XI_TABLE.len() as u32)
        .iter()
        .zip(PUBLISHED_XI_TABLE)
        .map(|(f, (pt, pd))| {
            let (ti, di) = family_xi_indices(f);
            if (ti, di) == (pt, pd) {
                Witness::new(true, format!("row {}: match, tone ξ({ti}), semitone ξ({di})", f.k))
            } else {
                let swapped = (ti, di) == (pd, pt);
                let why = if swapped {
                    "columns swapped"
                } else if (-ti, di) == (pt, pd) {
                    "sign of the tone index"
                } else {
                    "values differ"
                };
                Witness::new(
                    false,
                    format!(
                        "row {}: mismatch ({why}), table ξ({pt}), ξ({pd}); computed tone ξ({ti}) = {}, semitone ξ({di}) = {}",
                        f.k,
                        ratio_text(xi(ti).ratio()),
                        ratio_text(xi(di).ratio()),
                    ),
                )
            }
        })
        .collect();
    let mut report = CheckReport::new("published lattice index table", Some((1, 10)), witnesses);
    report.informational = true;
    report
}

fn ratio_text(r: PitchRatio) -> String {
    let (n, d) = r.numer_denom();
    format!("{n}/{d} ≈ {}", r.decimal(6))
}

/// The eight-note sequence obtained by always breaking the tone linearly.
#[derive(Debug, Clone)]
pub struct LinearEightNotes {
    pub family: LinearFamily,
    pub steps: Vec<Step>,
    pub pitches: Vec<Pitch>,
}

pub fn linear_eight_notes() -> LinearEightNotes {
    let mut f = LinearFamily::from(&family_base());
    while f.p < 8 {
        f = linear_family_next(&f);
    }
    use Step::{Semitone as S, Tone as T};
    let steps = vec![T, S, T, S, T, T, S, T];
    let mut current = PitchRatio::UNISON;
    let mut pitches = vec![Pitch::new(0, 0)];
    for s in &steps {
        current = current
            * match s {
                Step::Tone => f.theta,
                Step::Semitone => f.delta,
            };
        pitches.push(Pitch::from_ratio(current));
    }
    LinearEightNotes {
        family: f,
        steps,
        pitches,
    }
}

/// The linear recursion's eight-note "scale" has a semitone below the
/// unison, so its pitches descend exactly at the semitone steps.
pub fn check_linear_breaking() -> CheckReport {
    let seq = linear_eight_notes();
    let f = &seq.family;
    let mut witnesses = vec![Witness::new(
        f.semitone_below_unison(),
        format!(
            "{} notes: tone {}, semitone {} < 1",
            f.p,
            ratio_text(f.theta),
            ratio_text(f.delta)
        ),
    )];

    let indices: Vec<NoteIndex> = seq.pitches.iter().map(|p| p.note).collect();
    let rendered: Vec<String> = seq
        .pitches
        .iter()
        .map(|&p| render_pitch(p, Style::Unicode))
        .collect();
    witnesses.push(Witness::new(
        indices == [0, -3, 2, -1, 4, 1, -2, 3, 0] && seq.pitches[8] == Pitch::new(0, 1),
        format!("sequence {}", rendered.join(" ")),
    ));

    for (j, step) in seq.steps.iter().enumerate() {
        let (a, b) = (seq.pitches[j], seq.pitches[j + 1]);
        let descends = b < a;
        let expected = *step == Step::Semitone;
        let detail = format!(
            "position {j}→{}: {} {} {}",
            j + 1,
            render_pitch(a, Style::Unicode),
            if descends { ">" } else { "<" },
            render_pitch(b, Style::Unicode)
        );
        witnesses.push(Witness::new(descends == expected, detail));
    }
    CheckReport::new("linear tone breaking at eight notes", None, witnesses)
}

/// All five reports, in a fixed order.
pub fn run_all(k_max: u32) -> Vec<CheckReport> {
    vec![
        check_coprime_counts(k_max),
        check_type_count_divisibility(k_max),
        check_lattice_indices(k_max),
        check_published_table(),
        check_linear_breaking(),
    ]
}

/// True iff every non-informational report passed.
pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports
        .iter()
        .filter(|r| !r.informational)
        .all(|r| r.passed)
}
