use gamme::cli::{cmd_families, cmd_modes, cmd_notes, NoteOrder, Options, OutputFormat};
use gamme::naming::{name_of, sort_by_pitch, Style};

/// Notes -15..=19 in increasing pitch, as published.
const PITCH_ORDER: &str = "do si♯ ré♭ do♯ si♯♯ mi♭♭ ré do♯♯ fa♭♭ mi♭ ré♯ fa♭ mi ré♯♯ sol♭♭ fa mi♯ \
    sol♭ fa♯ mi♯♯ la♭♭ sol fa♯♯ la♭ sol♯ si♭♭ la sol♯♯ do♭♭ si♭ la♯ do♭ si la♯♯ ré♭♭";

fn csv() -> Options {
    Options {
        format: OutputFormat::Csv,
        ..Options::default()
    }
}

fn run(f: impl FnOnce(&mut Vec<u8>) -> gamme::Result<()>) -> String {
    let mut buf = Vec::new();
    f(&mut buf).unwrap();
    String::from_utf8(buf).unwrap()
}

fn rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn pitch_order_of_the_note_tables() {
    let got: Vec<String> = sort_by_pitch(-15, 19)
        .into_iter()
        .map(|k| name_of(k).render(Style::Unicode))
        .collect();
    let expected: Vec<&str> = PITCH_ORDER.split_whitespace().collect();
    assert_eq!(got, expected);
}

#[test]
fn pitch_sorted_note_table_follows_the_order() {
    let text = run(|o| cmd_notes(o, -15, 19, NoteOrder::Pitch, csv()));
    let names: Vec<String> = rows(&text).into_iter().map(|r| r[1].clone()).collect();
    let expected: Vec<&str> = PITCH_ORDER.split_whitespace().collect();
    assert_eq!(names, expected);
}

#[test]
fn note_table_cells() {
    let text = run(|o| cmd_notes(o, 0, 12, NoteOrder::Index, csv()));
    let r = rows(&text);
    assert_eq!(r.len(), 13);
    assert_eq!(r[7], ["7", "do♯", "3⁷/2¹¹", "1.067871", "114"]);
    assert_eq!(r[12], ["12", "si♯", "3¹²/2¹⁹", "1.013643", "23"]);

    let text = run(|o| cmd_notes(o, 0, 0, NoteOrder::Index, csv()));
    assert_eq!(rows(&text), [["0", "do", "1", "1.000000", "0"]]);

    let text = run(|o| cmd_notes(o, -15, -9, NoteOrder::Index, csv()));
    let r = rows(&text);
    assert_eq!(r[3], ["-12", "ré♭♭", "2²⁰/3¹²", "1.973081", "1177"]);
}

#[test]
fn note_table_text_layout() {
    let text = run(|o| cmd_notes(o, 0, 2, NoteOrder::Index, Options::default()));
    assert_eq!(
        text,
        "k  name  ratio  decimal   cents\n\
         0  do    1      1.000000  0\n\
         1  sol   3/2    1.500000  702\n\
         2  ré    3²/2³  1.125000  204\n"
    );
}

#[test]
fn family_table_cells() {
    let text = run(|o| cmd_families(o, 10, csv()));
    let header = text.lines().next().unwrap();
    assert_eq!(
        header,
        "k,p,T,D,eps,theta,theta~,theta_xi,delta,delta~,delta_xi,N"
    );
    let r = rows(&text);
    assert_eq!(r.len(), 10);
    assert_eq!(
        r[4],
        [
            "5",
            "12",
            "5",
            "7",
            "+1",
            "3⁷/2¹¹",
            "1.067871",
            "7",
            "2⁸/3⁵",
            "1.053498",
            "-5",
            "792"
        ]
    );
    assert_eq!(&r[9][..3], ["10", "94", "53"]);
    assert_eq!(&r[9][5..7], ["2⁶⁵/3⁴¹", "1.011529"]);
    assert_eq!(&r[9][8..10], ["3⁵³/2⁸⁴", "1.002090"]);

    let one = run(|o| cmd_families(o, 1, csv()));
    assert_eq!(rows(&one).len(), 1);
}

#[test]
fn major_modes_table() {
    let text = run(|o| cmd_modes(o, 4, "t3", "do", csv()));
    let r = rows(&text);
    let names: Vec<&str> = r.iter().map(|row| row[2].as_str()).collect();
    assert_eq!(
        names,
        [
            "ionien",
            "dorien",
            "phrygien",
            "lydien",
            "mixolydien",
            "éolien",
            "locrien"
        ]
    );
    assert_eq!(r[1][4], "do ré mi♭ fa sol la si♭ do✻");
}

#[test]
fn ascii_rendering() {
    let opts = Options {
        style: Style::Ascii,
        ..csv()
    };
    let text = run(|o| cmd_notes(o, 5, 7, NoteOrder::Index, opts));
    let r = rows(&text);
    assert_eq!(r[1], ["6", "fa#", "3^6/2^9", "1.423828", "612"]);
}
