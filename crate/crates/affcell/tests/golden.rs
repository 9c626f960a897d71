mod common;

use common::{corpus, datum_cases, general_cases, golden_mismatch};

#[test]
fn datum_corpus_matches_golden_files() {
    assert!(corpus().len() >= 5);
    for (name, cases) in datum_cases() {
        if let Some(msg) = golden_mismatch(&name, &cases) {
            panic!("{msg}");
        }
    }
}

#[test]
fn general_commands_match_golden_file() {
    if let Some(msg) = golden_mismatch("general", &general_cases()) {
        panic!("{msg}");
    }
}
