#![allow(dead_code)]

use std::fs;
use std::path::Path;

use affcell::run;

/// Commands run against each datum; `{}` is replaced by the datum path.
pub const DATUM_COMMANDS: &[&[&str]] = &[
    &["check", "--datum", "{}", "--seed", "7", "--samples", "6", "--bound", "2"],
    &["--format", "records", "check", "--datum", "{}", "--seed", "11", "--samples", "3", "--bound", "1"],
    &["simples", "--datum", "{}", "--random", "4", "--seed", "5"],
    &["--format", "records", "simples", "--datum", "{}", "--random", "2", "--seed", "9"],
];

pub const EXTRA: &[(&str, &[&str])] = &[
    ("unit_gl1", &["mult", "--datum", "{}", "[b0; z1 + z1^-1; b0]", "[b0; z1; b0]"]),
    ("gl2_pair", &["mult", "--datum", "{}", "[b1; s(1,0); b0] + [b0; 2; b1]", "[b1; q^{1/2}; b1]"]),
    ("gl2_pair", &["simples", "--datum", "{}", "--point", "1,1", "--poly", "u^2 - 3*u + 2"]),
    ("two_blocks", &["mult", "--datum", "{}", "[a; s[1](1,0); b]", "[b; s[2](1); a] - [c; 1; c]"]),
    ("two_blocks", &["simples", "--datum", "{}", "--point", "1,2/3", "--point", "1/2,2/3;4"]),
    ("degenerate", &["simples", "--datum", "{}", "--point", "1,2", "--point", "1,3"]),
    ("degenerate", &["mult", "--datum", "{}", "[u; 1; v]", "[v; 1; u]"]),
    ("q_half", &["mult", "--datum", "{}", "[y; 1; y]", "[y; 1; y]"]),
    ("broken_sigma", &["mult", "--datum", "{}", "[b; 1; c]", "[c; 1; b]"]),
];

pub const GENERAL: &[&[&str]] = &[
    &["schur", "--m", "2", "--weight", "2,0"],
    &["schur", "--m", "3", "--weight", "1,0,-1"],
    &["expand", "--m", "2", "(z1 + z2)^3"],
    &["expand", "--shape", "2,1", "q^{1/2}*s[1](1,0)*s[2](-1) + z[2][1]"],
    &["pair", "--m", "2", "s(1,0)", "s(1,0)"],
    &["pair", "--m", "3", "s(1,0,0)*s(1,0,0)", "s(2,0,0) + 5*s(1,1,0)"],
    &["--format", "records", "pair", "--m", "2", "q*s(1,1)", "s(1,1)"],
    &["expand", "--m", "2", "z1"],
    &["schur", "--m", "2", "--weight", "0,1"],
    &["mult", "--datum", "tests/data/missing.datum", "0", "0"],
];

pub fn transcript(cases: &[Vec<String>]) -> String {
    let mut out = String::new();
    for args in cases {
        let o = run(std::iter::once("affcell".to_string()).chain(args.iter().cloned()));
        out.push_str(&format!("$ affcell {}\n", args.join(" ")));
        out.push_str(&o.stdout);
        if !o.stderr.is_empty() {
            out.push_str("[stderr]\n");
            out.push_str(&o.stderr);
        }
        out.push_str(&format!("[exit {}]\n\n", o.status));
    }
    out
}

pub fn fill(args: &[&str], path: &str) -> Vec<String> {
    args.iter().map(|a| a.replace("{}", path)).collect()
}

/// Runs `cases` twice and compares both transcripts with the stored file.
pub fn golden_mismatch(name: &str, cases: &[Vec<String>]) -> Option<String> {
    let first = transcript(cases);
    let second = transcript(cases);
    if first != second {
        return Some(format!("{name}: output differs between runs"));
    }
    let golden = Path::new("tests/golden").join(format!("{name}.txt"));
    if std::env::var_os("AFFCELL_BLESS").is_some() {
        fs::write(&golden, &first).unwrap();
        return None;
    }
    match fs::read_to_string(&golden) {
        Ok(expected) if expected == first => None,
        Ok(_) => Some(format!("{name}: output differs from {}", golden.display())),
        Err(e) => Some(format!("{}: {e} (set AFFCELL_BLESS=1 to create it)", golden.display())),
    }
}

/// Per-datum command lists, keyed by datum name.
pub fn datum_cases() -> Vec<(String, Vec<Vec<String>>)> {
    corpus()
        .into_iter()
        .map(|name| {
            let path = format!("tests/data/{name}.datum");
            let mut cases: Vec<Vec<String>> = DATUM_COMMANDS.iter().map(|a| fill(a, &path)).collect();
            cases.extend(EXTRA.iter().filter(|(n, _)| *n == name).map(|(_, a)| fill(a, &path)));
            (name, cases)
        })
        .collect()
}

pub fn general_cases() -> Vec<Vec<String>> {
    GENERAL.iter().map(|a| fill(a, "")).collect()
}

pub fn corpus() -> Vec<String> {
    let mut names: Vec<String> = fs::read_dir("tests/data")
        .unwrap()
        .filter_map(|e| {
            let p = e.unwrap().path();
            (p.extension()? == "datum").then(|| p.file_stem()?.to_str().map(String::from))?
        })
        .collect();
    names.sort();
    names
}

