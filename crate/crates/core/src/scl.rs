//! Scala `.scl` tuning files with exact ratio lines.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pitch::PitchRatio;
use crate::scale::Scale;

/// Parsed contents of a `.scl` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SclFile {
    pub description: String,
    /// Degrees above the implicit `1/1`, in file order.
    pub ratios: Vec<PitchRatio>,
}

/// Serialize a scale, measured from its tonality. The last line is `2/1`.
pub fn export_scl(sc: &Scale, label: &str, description: &str) -> Vec<u8> {
    let ratios = sc.relative_ratios();
    scl_from_ratios(label, description, &ratios[1..])
}

/// Serialize explicit degrees above `1/1`.
pub fn scl_from_ratios(label: &str, description: &str, ratios: &[PitchRatio]) -> Vec<u8> {
    let mut out = format!("! {label}.scl\n");
    out.push_str(&description.replace(['\r', '\n'], " "));
    out.push('\n');
    out.push_str(&format!("{}\n", ratios.len()));
    for r in ratios {
        let (n, d) = r.numer_denom();
        out.push_str(&format!("{n}/{d}\n"));
    }
    out.into_bytes()
}

fn factor_3_smooth(mut n: BigUint) -> Option<(i64, i64)> {
    if n.is_zero() {
        return None;
    }
    let twos = n.trailing_zeros().unwrap_or(0);
    n >>= twos;
    let three = BigUint::from(3u32);
    let mut threes = 0i64;
    while (&n % &three).is_zero() {
        n /= &three;
        threes += 1;
    }
    n.is_one().then_some((threes, twos as i64))
}

fn parse_ratio(token: &str, line: usize) -> Result<PitchRatio> {
    let err = |message: String| Error::SclParse { line, message };
    if token.contains('.') {
        return Err(err(format!(
            "{token:?} is a cents value; only exact ratios are supported"
        )));
    }
    let (num, den) = token.split_once('/').unwrap_or((token, "1"));
    let parse = |s: &str| {
        s.parse::<BigUint>()
            .map_err(|_| err(format!("{token:?} is not a ratio")))
    };
    let (num, den) = (parse(num)?, parse(den)?);
    let (a3, a2) = factor_3_smooth(num).ok_or_else(|| err(format!("{token:?} is not 3-smooth")))?;
    let (b3, b2) = factor_3_smooth(den).ok_or_else(|| err(format!("{token:?} is not 3-smooth")))?;
    Ok(PitchRatio::new(a3 - b3, b2 - a2))
}

/// Parse a `.scl` file whose pitch lines are 3-smooth ratios.
pub fn parse_scl(text: &str) -> Result<SclFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with('!'));
    let (_, description) = lines.next().ok_or(Error::SclParse {
        line: 1,
        message: "missing description line".into(),
    })?;
    let (count_line, count) = lines.next().ok_or(Error::SclParse {
        line: 2,
        message: "missing note count".into(),
    })?;
    let count: usize = count.trim().parse().map_err(|_| Error::SclParse {
        line: count_line,
        message: format!("{count:?} is not a note count"),
    })?;
    let ratios = lines
        .take(count)
        .map(|(n, l)| {
            let token = l.split_whitespace().next().ok_or(Error::SclParse {
                line: n,
                message: "empty pitch line".into(),
            })?;
            parse_ratio(token, n)
        })
        .collect::<Result<Vec<_>>>()?;
    if ratios.len() != count {
        return Err(Error::SclParse {
            line: count_line,
            message: format!("expected {count} pitch lines, found {}", ratios.len()),
        });
    }
    Ok(SclFile {
        description: description.to_string(),
        ratios,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::lookup;

    #[test]
    fn major_scale_file() {
        let sc = &lookup("G4_15").unwrap().scale;
        let text = String::from_utf8(export_scl(sc, "G4_15", "major")).unwrap();
        assert_eq!(
            text,
            "! G4_15.scl\nmajor\n7\n9/8\n81/64\n4/3\n3/2\n27/16\n243/128\n2/1\n"
        );
    }

    #[test]
    fn fifth_and_octave() {
        let sc = &lookup("G1_1").unwrap().scale;
        let text = String::from_utf8(export_scl(sc, "G1_1", "fifth")).unwrap();
        assert!(text.ends_with("\n2\n3/2\n2/1\n"));
    }

    #[test]
    fn single_note_octave() {
        let text =
            String::from_utf8(scl_from_ratios("octave", "octave", &[PitchRatio::OCTAVE])).unwrap();
        assert_eq!(text, "! octave.scl\noctave\n1\n2/1\n");
    }

    #[test]
    fn parses_comments_and_trailing_text() {
        let f = parse_scl("! x.scl\n!\ndesc\n 2\n!c\n3/2 fifth\n2\n").unwrap();
        assert_eq!(f.description, "desc");
        assert_eq!(f.ratios, vec![PitchRatio::new(1, 1), PitchRatio::OCTAVE]);
    }

    #[test]
    fn rejects_inexact_or_foreign_lines() {
        assert!(parse_scl("d\n1\n701.955\n").is_err());
        assert!(parse_scl("d\n1\n5/4\n").is_err());
        assert!(parse_scl("d\n2\n3/2\n").is_err());
        assert!(parse_scl("d\nx\n").is_err());
    }
}
