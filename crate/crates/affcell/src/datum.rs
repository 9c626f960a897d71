//! Line-oriented cell datum files.
//!
//! ```text
//! # comment
//! [blocks]
//! 1 2            # block id, size
//! [labels]
//! b0 b1
//! [weights]
//! rank 1
//! form 2         # one line per row
//! lambda 1
//! wt b0 0
//! wt b1 0
//! [gram]
//! b0 b0 = 1
//! b1 b1 = z1*z2 + q^{1/2}
//! [unit]
//! b0
//! ```
//!
//! `[labels]` may be omitted, in which case labels are taken from the `wt`
//! lines in order. `[unit]` is optional.

use std::collections::BTreeMap;
use std::fmt::Write;

use affcell_core::cellalg::Violation;
use affcell_core::{BlockId, BlockShape, CellDatum, Label, LaurentPoly, Rational, WeightData};

use crate::error::{Error, Result, SyntaxError};
use crate::expr::parse_poly;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Blocks,
    Labels,
    Weights,
    Gram,
    Unit,
}

struct Line<'a> {
    no: usize,
    text: &'a str,
    /// 0-based char offset of `text` in the source line.
    offset: usize,
}

impl Line<'_> {
    fn err(&self, col: usize, msg: impl Into<String>) -> SyntaxError {
        SyntaxError::new(col, msg).at_line(self.no, self.offset)
    }

    /// Whitespace-separated words with their 1-based columns in `text`.
    fn words(&self) -> Vec<(usize, &str)> {
        let mut out = Vec::new();
        let mut start = None;
        for (i, c) in self.text.char_indices() {
            match (c.is_whitespace(), start) {
                (true, Some(s)) => {
                    out.push((s, &self.text[s..i]));
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        if let Some(s) = start {
            out.push((s, &self.text[s..]));
        }
        out.into_iter()
            .map(|(b, w)| (self.text[..b].chars().count() + 1, w))
            .collect()
    }
}

fn parse_int<T: std::str::FromStr>(line: &Line, col: usize, w: &str) -> Result<T, SyntaxError> {
    w.parse().map_err(|_| line.err(col, format!("expected an integer, found '{}'", w)))
}

fn parse_rational(line: &Line, col: usize, w: &str) -> Result<Rational, SyntaxError> {
    let bad = || line.err(col, format!("expected a rational, found '{}'", w));
    let (n, d) = match w.split_once('/') {
        Some((n, d)) => (n, d),
        None => (w, "1"),
    };
    let n = n.parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
    if d == 0.into() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

fn valid_label(w: &str) -> bool {
    !w.is_empty() && !w.contains(['=', ';', '[', ']', '#'])
}

/// Everything read from a datum file, before any invariant is checked.
struct Raw {
    shape: BlockShape,
    labels: Vec<Label>,
    weights: WeightData,
    gram: Vec<((Label, Label), LaurentPoly)>,
    gram_lines: BTreeMap<(Label, Label), usize>,
    unit: Option<Label>,
}

fn read(text: &str) -> Result<Raw> {
    let mut section = Section::None;
    let mut blocks: Vec<(BlockId, usize)> = Vec::new();
    let mut labels: Option<Vec<Label>> = None;
    let mut rank: Option<usize> = None;
    let mut form: Vec<Vec<Rational>> = Vec::new();
    let mut lambda: Option<Vec<i64>> = None;
    let mut wt: Vec<(Label, Vec<i64>)> = Vec::new();
    let mut gram_text: Vec<(usize, usize, Label, Label, String)> = Vec::new();
    let mut unit: Option<Label> = None;
    let mut weights_line = 0;

    for (k, raw) in text.lines().enumerate() {
        let no = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        let offset = content.chars().count() - trimmed.chars().count();
        let line = Line { no, text: trimmed.trim_end(), offset };
        if line.text.is_empty() {
            continue;
        }
        if let Some(name) = line.text.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            section = match name.trim() {
                "blocks" => Section::Blocks,
                "labels" => Section::Labels,
                "weights" => {
                    weights_line = no;
                    Section::Weights
                }
                "gram" => Section::Gram,
                "unit" => Section::Unit,
                other => return Err(line.err(1, format!("unknown section [{}]", other)).into()),
            };
            continue;
        }
        let words = line.words();
        match section {
            Section::None => return Err(line.err(1, "content before the first section header").into()),
            Section::Blocks => {
                let [(c1, id), (c2, size)] = words[..] else {
                    return Err(line.err(1, "expected 'id size'").into());
                };
                blocks.push((parse_int(&line, c1, id)?, parse_int(&line, c2, size)?));
            }
            Section::Labels => {
                let ls = labels.get_or_insert_with(Vec::new);
                for (c, w) in words {
                    if !valid_label(w) {
                        return Err(line.err(c, format!("invalid label '{}'", w)).into());
                    }
                    ls.push(w.to_string());
                }
            }
            Section::Weights => {
                let (c0, key) = words[0];
                let rest = &words[1..];
                match key {
                    "rank" => {
                        let [(c, n)] = rest[..] else {
                            return Err(line.err(c0, "expected 'rank N'").into());
                        };
                        rank = Some(parse_int(&line, c, n)?);
                    }
                    "form" => {
                        let row = rest
                            .iter()
                            .map(|&(c, w)| parse_rational(&line, c, w))
                            .collect::<Result<Vec<_>, _>>()?;
                        form.push(row);
                    }
                    "lambda" => {
                        let v = rest
                            .iter()
                            .map(|&(c, w)| parse_int(&line, c, w))
                            .collect::<Result<Vec<_>, _>>()?;
                        lambda = Some(v);
                    }
                    "wt" => {
                        let Some(&(cl, l)) = rest.first() else {
                            return Err(line.err(c0, "expected 'wt label v1 v2 ...'").into());
                        };
                        if !valid_label(l) {
                            return Err(line.err(cl, format!("invalid label '{}'", l)).into());
                        }
                        let v = rest[1..]
                            .iter()
                            .map(|&(c, w)| parse_int(&line, c, w))
                            .collect::<Result<Vec<_>, _>>()?;
                        wt.push((l.to_string(), v));
                    }
                    other => return Err(line.err(c0, format!("unknown weights key '{}'", other)).into()),
                }
            }
            Section::Gram => {
                let Some(eq) = line.text.find('=') else {
                    return Err(line.err(1, "expected 'b c = polynomial'").into());
                };
                let head = Line { no, text: &line.text[..eq], offset: line.offset };
                let hw = head.words();
                let [(_, b), (_, c)] = hw[..] else {
                    return Err(line.err(1, "expected two labels before '='").into());
                };
                let col = line.text[..eq + 1].chars().count();
                gram_text.push((no, line.offset + col, b.to_string(), c.to_string(), line.text[eq + 1..].to_string()));
            }
            Section::Unit => {
                let [(c, u)] = words[..] else {
                    return Err(line.err(1, "expected a single label").into());
                };
                if unit.is_some() {
                    return Err(line.err(c, "unit declared twice").into());
                }
                unit = Some(u.to_string());
            }
        }
    }

    let file_err = |msg: &str| -> Error { SyntaxError::new(0, msg).at_line(weights_line.max(1), 0).into() };
    if blocks.is_empty() {
        return Err(SyntaxError::new(1, "missing [blocks] section").at_line(1, 0).into());
    }
    let shape = BlockShape::new(blocks)?;
    let lambda = lambda.ok_or_else(|| file_err("missing 'lambda' line"))?;
    if let Some(r) = rank {
        if r != lambda.len() {
            return Err(file_err(&format!("rank {} but lambda has {} entries", r, lambda.len())));
        }
    }
    let labels = labels.unwrap_or_else(|| wt.iter().map(|(l, _)| l.clone()).collect());
    let weights = WeightData::new(form, lambda, wt)?;

    let mut gram = Vec::new();
    let mut gram_lines = BTreeMap::new();
    for (no, offset, b, c, expr) in gram_text {
        let p = parse_poly(&expr, &shape).map_err(|e| e.at_line(no, offset))?;
        gram_lines.entry((b.clone(), c.clone())).or_insert(no);
        gram.push(((b, c), p));
    }
    Ok(Raw { shape, labels, weights, gram, gram_lines, unit })
}

/// Parses a datum checking structure only; the algebraic invariants are
/// left to [`affcell_core::cellalg::verify_cell_axioms`].
pub fn parse_datum_unchecked(text: &str) -> Result<CellDatum> {
    let raw = read(text)?;
    Ok(CellDatum::from_parts(raw.shape, raw.labels, raw.weights, raw.gram, raw.unit)?)
}

/// Parses and validates a datum. Invariant failures name the entry and,
/// for Gram entries, the line it was declared on.
pub fn parse_cell_datum(text: &str) -> Result<CellDatum> {
    let raw = read(text)?;
    let lines = raw.gram_lines;
    let d = CellDatum::from_parts(raw.shape, raw.labels, raw.weights, raw.gram, raw.unit)?;
    let Some(v) = d.violations().into_iter().next() else {
        return Ok(d);
    };
    let line = match &v {
        Violation::NotBlockSymmetric(b, c) | Violation::Support(b, c) => lines.get(&(b.clone(), c.clone())).copied(),
        _ => None,
    };
    Err(Error::Invariant { line, msg: v.to_string() })
}

fn write_rational(out: &mut String, r: &Rational) {
    write!(out, "{}", r).expect("writing to a string");
}

/// Canonical text form; [`parse_cell_datum`] reads it back to an equal datum.
pub fn write_datum(d: &CellDatum) -> String {
    let mut out = String::new();
    out.push_str("[blocks]\n");
    for (b, m) in d.shape().blocks() {
        writeln!(out, "{} {}", b, m).unwrap();
    }
    out.push_str("[labels]\n");
    writeln!(out, "{}", d.labels().join(" ")).unwrap();
    let wd = d.weights();
    out.push_str("[weights]\n");
    writeln!(out, "rank {}", wd.rank()).unwrap();
    for row in wd.form() {
        out.push_str("form");
        for r in row {
            out.push(' ');
            write_rational(&mut out, r);
        }
        out.push('\n');
    }
    out.push_str("lambda");
    for v in wd.lambda() {
        write!(out, " {}", v).unwrap();
    }
    out.push('\n');
    for l in d.labels() {
        if let Some(v) = wd.weight(l) {
            write!(out, "wt {}", l).unwrap();
            for x in v {
                write!(out, " {}", x).unwrap();
            }
            out.push('\n');
        }
    }
    out.push_str("[gram]\n");
    for ((b, c), v) in d.gram_entries() {
        writeln!(out, "{} {} = {}", b, c, v).unwrap();
    }
    if let Some(u) = d.unit_label() {
        writeln!(out, "[unit]\n{}", u).unwrap();
    }
    out
}
