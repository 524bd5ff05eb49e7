//! Rendering of engine values as text tables, CSV, JSON and `.scl`, and the
//! command implementations behind the `gamme` binary.

use std::collections::HashMap;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::ser::Serializer;
use serde::Serialize;
use serde_json::value::RawValue;

use crate::catalog::{lookup, named_catalog};
use crate::error::{Error, Result};
use crate::family::{families, family, family_xi_indices, Family};
use crate::naming::{name_of, parse_pitch, render_pitch, sort_by_pitch, Style};
use crate::pitch::{xi, NoteIndex, Pitch, PitchRatio};
use crate::scale::{
    build_scale, enumerate_structures, transpose, Scale, ScaleStructure, ENUMERATION_LIMIT,
};
use crate::scl::export_scl;
use crate::types::{classify_type, find_type, mode_scale, modes_of, types_of_family, TypeClass};
use crate::verify::{all_passed, run_all, CheckReport};

/// Largest family index accepted by the families table.
pub const FAMILIES_MAX: i64 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
    /// Only meaningful for a single scale.
    Scl,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "scl" => Ok(OutputFormat::Scl),
            _ => Err(Error::Usage(format!(
                "unknown format {s:?}; expected text, json, csv or scl"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NoteOrder {
    #[default]
    Index,
    Pitch,
}

impl FromStr for NoteOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "index" => Ok(NoteOrder::Index),
            "pitch" => Ok(NoteOrder::Pitch),
            _ => Err(Error::Usage(format!(
                "unknown sort order {s:?}; expected index or pitch"
            ))),
        }
    }
}

/// Settings shared by every command.
#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub format: OutputFormat,
    pub style: Style,
    pub force: bool,
}

impl Options {
    fn reject_scl(&self, command: &str) -> Result<()> {
        if self.format == OutputFormat::Scl {
            return Err(Error::Usage(format!(
                "scl output needs a single scale; `{command}` cannot produce it"
            )));
        }
        Ok(())
    }
}

fn superscript(n: u64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

fn power(base: u32, e: u64, style: Style) -> String {
    match (e, style) {
        (1, _) => base.to_string(),
        (_, Style::Unicode) => format!("{base}{}", superscript(e)),
        (_, Style::Ascii) => format!("{base}^{e}"),
    }
}

/// Ratio as powers with the larger power on top: `3⁷/2¹¹`, `2⁵/3³`, `3/2`.
pub fn power_form(r: PitchRatio, style: Style) -> String {
    let mut num = Vec::new();
    let mut den = Vec::new();
    if r.pow2 < 0 {
        num.push(power(2, r.pow2.unsigned_abs(), style));
    }
    if r.pow3 > 0 {
        num.push(power(3, r.pow3.unsigned_abs(), style));
    }
    if r.pow3 < 0 {
        den.push(power(3, r.pow3.unsigned_abs(), style));
    }
    if r.pow2 > 0 {
        den.push(power(2, r.pow2.unsigned_abs(), style));
    }
    let join = |parts: Vec<String>| match parts.len() {
        0 => "1".to_string(),
        1 => parts.concat(),
        _ if style == Style::Ascii => parts.join("*"),
        _ => parts.join("·"),
    };
    if den.is_empty() {
        join(num)
    } else if den.len() == 1 {
        format!("{}/{}", join(num), join(den))
    } else {
        format!("{}/({})", join(num), join(den))
    }
}

#[derive(Serialize)]
struct RatioJson {
    pow3: i64,
    pow2: i64,
    decimal: String,
    cents: i64,
}

impl Serialize for PitchRatio {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RatioJson {
            pow3: self.pow3,
            pow2: self.pow2,
            decimal: self.decimal(6),
            cents: self.cents(),
        }
        .serialize(s)
    }
}

/// Deterministic pretty JSON followed by a newline.
pub fn export_json<T: Serialize + ?Sized>(payload: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(payload).expect("engine values always serialize");
    out.push(b'\n');
    out
}

fn big_number(n: &BigUint) -> Box<RawValue> {
    RawValue::from_string(n.to_string()).expect("decimal digits are valid JSON")
}

struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(cells: &[String]) -> String {
    let fields: Vec<String> = cells.iter().map(|c| csv_field(c)).collect();
    format!("{}\n", fields.join(","))
}

fn pad_line(cells: &[String], widths: &[usize]) -> String {
    let mut line = String::new();
    for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
        if i > 0 {
            line.push_str("  ");
        }
        line.push_str(cell);
        line.extend(std::iter::repeat_n(
            ' ',
            w.saturating_sub(cell.chars().count()),
        ));
    }
    format!("{}\n", line.trim_end())
}

impl Table {
    fn new(headers: Vec<&'static str>) -> Self {
        Table {
            headers,
            rows: Vec::new(),
        }
    }

    fn render(&self, format: OutputFormat) -> String {
        let headers: Vec<String> = self.headers.iter().map(|h| h.to_string()).collect();
        match format {
            OutputFormat::Csv => std::iter::once(&headers)
                .chain(&self.rows)
                .map(|r| csv_line(r))
                .collect(),
            _ => {
                let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
                for row in &self.rows {
                    for (w, cell) in widths.iter_mut().zip(row) {
                        *w = (*w).max(cell.chars().count());
                    }
                }
                std::iter::once(&headers)
                    .chain(&self.rows)
                    .map(|r| pad_line(r, &widths))
                    .collect()
            }
        }
    }
}

#[derive(Serialize)]
struct PitchJson {
    name: String,
    note: NoteIndex,
    octave: i64,
    ratio: PitchRatio,
}

fn pitch_json(p: Pitch, style: Style) -> PitchJson {
    PitchJson {
        name: render_pitch(p, style),
        note: p.note,
        octave: p.octave,
        ratio: p.ratio(),
    }
}

fn pitch_names(sc: &Scale, style: Style) -> String {
    sc.pitches()
        .iter()
        .map(|&p| render_pitch(p, style))
        .collect::<Vec<_>>()
        .join(" ")
}

fn tonality(text: &str) -> Result<Pitch> {
    parse_pitch(text)
}

#[derive(Serialize)]
struct NoteRow {
    index: NoteIndex,
    name: String,
    ratio: PitchRatio,
}

/// The note table for `from..=to`.
pub fn cmd_notes(
    out: &mut dyn Write,
    from: NoteIndex,
    to: NoteIndex,
    sort: NoteOrder,
    opts: Options,
) -> Result<()> {
    opts.reject_scl("notes")?;
    if from > to {
        return Err(Error::Usage(format!("empty note range {from}..{to}")));
    }
    let ks: Vec<NoteIndex> = match sort {
        NoteOrder::Index => (from..=to).collect(),
        NoteOrder::Pitch => sort_by_pitch(from, to),
    };
    if opts.format == OutputFormat::Json {
        let rows: Vec<NoteRow> = ks
            .iter()
            .map(|&k| NoteRow {
                index: k,
                name: name_of(k).render(opts.style),
                ratio: xi(k).ratio(),
            })
            .collect();
        out.write_all(&export_json(&rows))?;
        return Ok(());
    }
    let mut table = Table::new(vec!["k", "name", "ratio", "decimal", "cents"]);
    for k in ks {
        let r = xi(k).ratio();
        table.rows.push(vec![
            k.to_string(),
            name_of(k).render(opts.style),
            power_form(r, opts.style),
            r.decimal(6),
            r.cents().to_string(),
        ]);
    }
    out.write_all(table.render(opts.format).as_bytes())?;
    Ok(())
}

#[derive(Serialize)]
struct IntervalJson {
    index: NoteIndex,
    ratio: PitchRatio,
}

#[derive(Serialize)]
struct FamilyJson {
    k: u32,
    p: u64,
    tones: u64,
    semitones: u64,
    epsilon: i64,
    theta: IntervalJson,
    delta: IntervalJson,
    count: Box<RawValue>,
}

fn family_json(f: &Family) -> FamilyJson {
    let (ti, di) = family_xi_indices(f);
    FamilyJson {
        k: f.k,
        p: f.p,
        tones: f.tones,
        semitones: f.semitones,
        epsilon: f.epsilon,
        theta: IntervalJson {
            index: ti,
            ratio: f.theta.ratio(),
        },
        delta: IntervalJson {
            index: di,
            ratio: f.delta.ratio(),
        },
        count: big_number(&f.count),
    }
}

/// One row per family up to `k_max`.
pub fn cmd_families(out: &mut dyn Write, k_max: i64, opts: Options) -> Result<()> {
    opts.reject_scl("families")?;
    if !(1..=FAMILIES_MAX).contains(&k_max) {
        return Err(Error::Usage(format!(
            "--k-max must lie in 1..={FAMILIES_MAX}, got {k_max}"
        )));
    }
    let fams = families(k_max as u32);
    if opts.format == OutputFormat::Json {
        let rows: Vec<FamilyJson> = fams.iter().map(family_json).collect();
        out.write_all(&export_json(&rows))?;
        return Ok(());
    }
    let mut table = Table::new(vec![
        "k", "p", "T", "D", "eps", "theta", "theta~", "theta_xi", "delta", "delta~", "delta_xi",
        "N",
    ]);
    for f in &fams {
        let (ti, di) = family_xi_indices(f);
        let (theta, delta) = (f.theta.ratio(), f.delta.ratio());
        table.rows.push(vec![
            f.k.to_string(),
            f.p.to_string(),
            f.tones.to_string(),
            f.semitones.to_string(),
            if f.epsilon > 0 { "+1" } else { "-1" }.to_string(),
            power_form(theta, opts.style),
            theta.decimal(6),
            ti.to_string(),
            power_form(delta, opts.style),
            delta.decimal(6),
            di.to_string(),
            f.count.to_string(),
        ]);
    }
    out.write_all(table.render(opts.format).as_bytes())?;
    Ok(())
}

/// Short ids for the types of a family: `c0`, `c1`, ... by canonical word.
fn type_ids(family_k: i64, force: bool) -> Result<HashMap<ScaleStructure, String>> {
    Ok(types_of_family(family_k, force)?
        .into_iter()
        .enumerate()
        .map(|(i, t)| (t.canonical().clone(), format!("c{i}")))
        .collect())
}

fn type_id(t: &TypeClass, ids: Option<&HashMap<ScaleStructure, String>>) -> String {
    ids.and_then(|m| m.get(t.canonical()).cloned())
        .unwrap_or_else(|| t.canonical().word())
}

#[derive(Serialize)]
struct StructureJson {
    index: u64,
    structure: String,
    type_id: String,
    type_label: Option<&'static str>,
    pitches: Vec<PitchJson>,
}

/// Every structure of a family realized on `tonality`, streamed.
pub fn cmd_enumerate(
    out: &mut dyn Write,
    family_k: i64,
    tonality_name: &str,
    opts: Options,
) -> Result<()> {
    opts.reject_scl("enumerate")?;
    let t = tonality(tonality_name)?;
    let structures = enumerate_structures(family_k, opts.force)?;
    let f = family(family_k)?;
    // Numbering types needs a full pass, so forced large families fall back
    // to the canonical word as id.
    let ids = if f.k <= ENUMERATION_LIMIT {
        Some(type_ids(family_k, opts.force)?)
    } else {
        None
    };
    let count_width = f.count.to_string().len();
    let headers = ["#", "structure", "type", "label", "notes"];
    let widths = [
        count_width.max(1),
        (f.p as usize).max(9),
        (f.p as usize).max(4),
        5,
        0,
    ];
    match opts.format {
        OutputFormat::Json => out.write_all(b"[\n")?,
        OutputFormat::Csv => out.write_all(csv_line(&headers.map(String::from)).as_bytes())?,
        _ => out.write_all(pad_line(&headers.map(String::from), &widths).as_bytes())?,
    }
    for (i, s) in structures.enumerate() {
        let sc = build_scale(&s, t);
        let class = classify_type(&s);
        let id = type_id(&class, ids.as_ref());
        let label = class.label();
        match opts.format {
            OutputFormat::Json => {
                let item = StructureJson {
                    index: i as u64 + 1,
                    structure: s.word(),
                    type_id: id,
                    type_label: label,
                    pitches: sc
                        .pitches()
                        .iter()
                        .map(|&p| pitch_json(p, opts.style))
                        .collect(),
                };
                if i > 0 {
                    out.write_all(b",\n")?;
                }
                out.write_all(b"  ")?;
                serde_json::to_writer(&mut *out, &item).map_err(|e| Error::Io(e.to_string()))?;
            }
            format => {
                let cells = [
                    (i + 1).to_string(),
                    s.word(),
                    id,
                    label.unwrap_or("-").to_string(),
                    pitch_names(&sc, opts.style),
                ];
                let line = if format == OutputFormat::Csv {
                    csv_line(&cells)
                } else {
                    pad_line(&cells, &widths)
                };
                out.write_all(line.as_bytes())?;
            }
        }
    }
    if opts.format == OutputFormat::Json {
        out.write_all(b"\n]\n")?;
    }
    Ok(())
}

#[derive(Serialize)]
struct TypeJson {
    id: String,
    label: Option<&'static str>,
    short_id: Option<&'static str>,
    canonical: String,
    representative: String,
    offset: usize,
}

/// The rotation classes of a family.
pub fn cmd_types(out: &mut dyn Write, family_k: i64, opts: Options) -> Result<()> {
    opts.reject_scl("types")?;
    let types = types_of_family(family_k, opts.force)?;
    let rows: Vec<TypeJson> = types
        .iter()
        .enumerate()
        .map(|(i, t)| TypeJson {
            id: format!("c{i}"),
            label: t.label(),
            short_id: t.named().map(|n| n.id),
            canonical: t.canonical().word(),
            representative: t.representative().word(),
            offset: t.offset(),
        })
        .collect();
    if opts.format == OutputFormat::Json {
        out.write_all(&export_json(&rows))?;
        return Ok(());
    }
    let mut table = Table::new(vec![
        "id",
        "alias",
        "label",
        "canonical",
        "representative",
        "offset",
    ]);
    for r in rows {
        table.rows.push(vec![
            r.id,
            r.short_id.unwrap_or("-").to_string(),
            r.label.unwrap_or("-").to_string(),
            r.canonical,
            r.representative,
            r.offset.to_string(),
        ]);
    }
    out.write_all(table.render(opts.format).as_bytes())?;
    Ok(())
}

#[derive(Serialize)]
struct ModeJson {
    index: usize,
    mode_note: String,
    name: String,
    structure: String,
    pitches: Vec<PitchJson>,
}

/// The modes of one type, each realized on `tonality`.
pub fn cmd_modes(
    out: &mut dyn Write,
    family_k: i64,
    type_label: &str,
    tonality_name: &str,
    opts: Options,
) -> Result<()> {
    opts.reject_scl("modes")?;
    let t = tonality(tonality_name)?;
    let class = find_type(family_k, type_label, opts.force)?;
    let mut rows = Vec::new();
    for m in modes_of(&class) {
        let sc = mode_scale(&class, m.index, t)?;
        rows.push(ModeJson {
            index: m.index,
            mode_note: name_of(m.mode_note).render(opts.style),
            name: m.display_name(opts.style),
            structure: sc.structure().word(),
            pitches: sc
                .pitches()
                .iter()
                .map(|&p| pitch_json(p, opts.style))
                .collect(),
        });
    }
    if opts.format == OutputFormat::Json {
        out.write_all(&export_json(&rows))?;
        return Ok(());
    }
    let mut table = Table::new(vec!["i", "mode_note", "name", "structure", "notes"]);
    for r in rows {
        let names: Vec<&str> = r.pitches.iter().map(|p| p.name.as_str()).collect();
        table.rows.push(vec![
            r.index.to_string(),
            r.mode_note,
            r.name,
            r.structure,
            names.join(" "),
        ]);
    }
    out.write_all(table.render(opts.format).as_bytes())?;
    Ok(())
}

/// A scale picked by catalog label or by step word.
#[derive(Debug, Clone)]
pub struct ResolvedScale {
    pub label: String,
    pub nickname: Option<&'static str>,
    pub scale: Scale,
}

/// Resolve a catalog label (`G4_15`, `H3`, `yu`) or a `T`/`S` word realized
/// on do, optionally transposed.
pub fn resolve_scale(
    spec: &str,
    family_k: Option<u32>,
    tonality_name: Option<&str>,
) -> Result<ResolvedScale> {
    let (label, nickname, scale) = match lookup(spec) {
        Ok(entry) => (entry.label.to_string(), entry.nickname, entry.scale.clone()),
        Err(unknown) => {
            let s = ScaleStructure::parse(spec, family_k).map_err(|_| unknown)?;
            (s.word(), None, build_scale(&s, Pitch::new(0, 0)))
        }
    };
    let scale = match tonality_name {
        Some(name) => transpose(&scale, tonality(name)?),
        None => scale,
    };
    Ok(ResolvedScale {
        label,
        nickname,
        scale,
    })
}

#[derive(Serialize)]
struct DegreeJson {
    degree: usize,
    #[serde(flatten)]
    pitch: PitchJson,
    interval: PitchRatio,
}

#[derive(Serialize)]
struct ScaleJson {
    label: String,
    nickname: Option<&'static str>,
    family: u32,
    structure: String,
    type_label: Option<&'static str>,
    tonality: String,
    degrees: Vec<DegreeJson>,
}

/// Header line used for `.scl` descriptions and text output.
pub fn describe(r: &ResolvedScale, style: Style) -> String {
    let mut s = r.label.clone();
    if let Some(n) = r.nickname {
        s.push_str(&format!(" ({n})"));
    }
    s.push_str(&format!(
        " on {}, structure {}",
        render_pitch(r.scale.tonality(), style),
        r.scale.structure()
    ));
    s
}

/// Render one scale in any format, `.scl` included.
pub fn render_scale(
    out: &mut dyn Write,
    r: &ResolvedScale,
    description: Option<&str>,
    opts: Options,
) -> Result<()> {
    let sc = &r.scale;
    let relative = sc.relative_ratios();
    match opts.format {
        OutputFormat::Scl => {
            let desc = description
                .map(str::to_string)
                .unwrap_or_else(|| describe(r, Style::Ascii));
            out.write_all(&export_scl(sc, &r.label, &desc))?;
        }
        OutputFormat::Json => {
            let payload = ScaleJson {
                label: r.label.clone(),
                nickname: r.nickname,
                family: sc.structure().family_k(),
                structure: sc.structure().word(),
                type_label: classify_type(sc.structure()).label(),
                tonality: render_pitch(sc.tonality(), opts.style),
                degrees: sc
                    .pitches()
                    .iter()
                    .zip(&relative)
                    .enumerate()
                    .map(|(degree, (&p, &interval))| DegreeJson {
                        degree,
                        pitch: pitch_json(p, opts.style),
                        interval,
                    })
                    .collect(),
            };
            out.write_all(&export_json(&payload))?;
        }
        format => {
            let mut table = Table::new(vec![
                "degree", "name", "note", "octave", "interval", "decimal", "cents",
            ]);
            for (degree, (&p, &interval)) in sc.pitches().iter().zip(&relative).enumerate() {
                table.rows.push(vec![
                    degree.to_string(),
                    render_pitch(p, opts.style),
                    p.note.to_string(),
                    p.octave.to_string(),
                    power_form(interval, opts.style),
                    interval.decimal(6),
                    interval.cents().to_string(),
                ]);
            }
            if format == OutputFormat::Text {
                writeln!(out, "{}", describe(r, opts.style))?;
                writeln!(out, "{}", pitch_names(sc, opts.style))?;
            }
            out.write_all(table.render(format).as_bytes())?;
        }
    }
    Ok(())
}

/// List the catalog labels.
pub fn cmd_catalog(out: &mut dyn Write, opts: Options) -> Result<()> {
    opts.reject_scl("scale")?;
    #[derive(Serialize)]
    struct EntryJson {
        label: &'static str,
        nickname: Option<&'static str>,
        family: u32,
        structure: String,
        notes: String,
    }
    let rows: Vec<EntryJson> = named_catalog()
        .iter()
        .map(|e| EntryJson {
            label: e.label,
            nickname: e.nickname,
            family: e.scale.structure().family_k(),
            structure: e.scale.structure().word(),
            notes: pitch_names(&e.scale, opts.style),
        })
        .collect();
    if opts.format == OutputFormat::Json {
        out.write_all(&export_json(&rows))?;
        return Ok(());
    }
    let mut table = Table::new(vec!["label", "family", "structure", "notes", "nickname"]);
    for r in rows {
        table.rows.push(vec![
            r.label.to_string(),
            r.family.to_string(),
            r.structure,
            r.notes,
            r.nickname.unwrap_or("").to_string(),
        ]);
    }
    out.write_all(table.render(opts.format).as_bytes())?;
    Ok(())
}

/// Run every check; returns whether all non-informational checks passed.
pub fn cmd_verify(out: &mut dyn Write, k_max: i64, opts: Options) -> Result<bool> {
    opts.reject_scl("verify")?;
    if k_max < 1 || k_max > u32::MAX as i64 {
        return Err(Error::Usage(format!(
            "--k-max must be at least 1, got {k_max}"
        )));
    }
    let reports = run_all(k_max as u32);
    let ok = all_passed(&reports);
    match opts.format {
        OutputFormat::Json => out.write_all(&export_json(&reports))?,
        OutputFormat::Csv => {
            let mut table = Table::new(vec!["check", "status", "ok", "detail"]);
            for r in &reports {
                for w in &r.witnesses {
                    table.rows.push(vec![
                        r.name.clone(),
                        status(r).to_string(),
                        w.ok.to_string(),
                        w.detail.clone(),
                    ]);
                }
            }
            out.write_all(table.render(OutputFormat::Csv).as_bytes())?;
        }
        _ => {
            for r in &reports {
                write_report(out, r)?;
            }
            writeln!(
                out,
                "{}",
                if ok {
                    "all checks passed"
                } else {
                    "verification FAILED"
                }
            )?;
        }
    }
    Ok(ok)
}

fn status(r: &CheckReport) -> &'static str {
    match (r.passed, r.informational) {
        (true, _) => "PASS",
        (false, true) => "NOTE",
        (false, false) => "FAIL",
    }
}

fn write_report(out: &mut dyn Write, r: &CheckReport) -> Result<()> {
    match r.range {
        Some((lo, hi)) => writeln!(out, "{}  {} (k = {lo}..{hi})", status(r), r.name)?,
        None => writeln!(out, "{}  {}", status(r), r.name)?,
    }
    for w in &r.witnesses {
        writeln!(
            out,
            "      {}  {}",
            if w.ok { "ok  " } else { "FAIL" },
            w.detail
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(f: impl FnOnce(&mut dyn Write) -> Result<()>) -> String {
        let mut buf = Vec::new();
        f(&mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn power_forms() {
        let u = Style::Unicode;
        assert_eq!(power_form(xi(7).ratio(), u), "3⁷/2¹¹");
        assert_eq!(power_form(xi(-3).ratio(), u), "2⁵/3³");
        assert_eq!(power_form(xi(1).ratio(), u), "3/2");
        assert_eq!(power_form(xi(-1).ratio(), u), "2²/3");
        assert_eq!(power_form(xi(0).ratio(), u), "1");
        assert_eq!(power_form(PitchRatio::OCTAVE, u), "2");
        assert_eq!(power_form(PitchRatio::new(1, -1), u), "2·3");
        assert_eq!(power_form(PitchRatio::new(-1, 1), Style::Ascii), "1/(3*2)");
        assert_eq!(power_form(xi(-12).ratio(), Style::Ascii), "2^20/3^12");
    }

    #[test]
    fn ratio_json() {
        assert_eq!(
            serde_json::to_string(&xi(2).ratio()).unwrap(),
            r#"{"pow3":2,"pow2":3,"decimal":"1.125000","cents":204}"#
        );
        assert_eq!(
            serde_json::to_string(&xi(0).ratio()).unwrap(),
            r#"{"pow3":0,"pow2":0,"decimal":"1.000000","cents":0}"#
        );
    }

    #[test]
    fn notes_rows() {
        let text = run(|o| cmd_notes(o, 0, 12, NoteOrder::Index, Options::default()));
        let row: Vec<&str> = text.lines().nth(8).unwrap().split_whitespace().collect();
        assert_eq!(row, ["7", "do♯", "3⁷/2¹¹", "1.067871", "114"]);
        let csv = run(|o| {
            cmd_notes(
                o,
                -15,
                -9,
                NoteOrder::Index,
                Options {
                    format: OutputFormat::Csv,
                    ..Default::default()
                },
            )
        });
        assert!(csv.lines().any(|l| l == "-12,ré♭♭,2²⁰/3¹²,1.973081,1177"));
        assert!(matches!(
            cmd_notes(&mut Vec::new(), 1, 0, NoteOrder::Index, Options::default()),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn families_json_has_exact_counts() {
        let opts = Options {
            format: OutputFormat::Json,
            ..Default::default()
        };
        let text = run(|o| cmd_families(o, 10, opts));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v[3]["count"], 21);
        assert_eq!(v[4]["theta"]["index"], 7);
        assert!(text.contains("\"count\": 760365888182828026538367852"));
        assert!(cmd_families(&mut Vec::new(), 31, opts).is_err());
        assert!(cmd_families(&mut Vec::new(), 0, opts).is_err());
    }

    #[test]
    fn scl_rejected_for_tables() {
        let opts = Options {
            format: OutputFormat::Scl,
            ..Default::default()
        };
        assert!(matches!(
            cmd_families(&mut Vec::new(), 3, opts),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn resolves_words_and_labels() {
        let r = resolve_scale("TTSTTTS", None, Some("sib")).unwrap();
        assert_eq!(r.scale.tonality(), Pitch::new(-2, 0));
        let r = resolve_scale("g3_6", None, Some("sol")).unwrap();
        assert_eq!(r.label, "G3_6");
        assert!(resolve_scale("nonsense", None, None).is_err());
    }
}
