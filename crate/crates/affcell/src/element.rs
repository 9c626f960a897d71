//! Text form of cell elements: `[b; S; c] + [b'; S'; c'] - ...`, where `S`
//! is a block-symmetric expression in the datum's variables. `0` is the
//! zero element.

use std::sync::Arc;

use affcell_core::symfunc::schur_expand;
use affcell_core::{CellDatum, CellElement};

use crate::error::{Result, SyntaxError};
use crate::expr::parse_poly;

pub fn parse_element(src: &str, datum: &Arc<CellDatum>) -> Result<CellElement> {
    let mut acc = CellElement::zero(datum);
    if src.trim() == "0" {
        return Ok(acc);
    }
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    let mut first = true;
    let col = |i: usize| i + 1;
    loop {
        while i < chars.len() && chars[i].1.is_whitespace() {
            i += 1;
        }
        if i == chars.len() {
            if first {
                return Err(SyntaxError::new(1, "empty element").into());
            }
            return Ok(acc);
        }
        let mut negate = false;
        if !first || matches!(chars[i].1, '+' | '-') {
            match chars[i].1 {
                '+' => {}
                '-' => negate = true,
                c => return Err(SyntaxError::new(col(i), format!("expected '+' or '-', found '{}'", c)).into()),
            }
            i += 1;
            while i < chars.len() && chars[i].1.is_whitespace() {
                i += 1;
            }
        }
        first = false;
        if i == chars.len() || chars[i].1 != '[' {
            return Err(SyntaxError::new(col(i), "expected '['").into());
        }
        let open = i;
        // expressions contain brackets too: z[1][2], s[1](..)
        let mut depth = 0;
        let mut close = None;
        for (k, &(_, c)) in chars.iter().enumerate().skip(open) {
            match c {
                '[' => depth += 1,
                ']' => {
                    depth -= 1;
                    if depth == 0 {
                        close = Some(k);
                        break;
                    }
                }
                _ => {}
            }
        }
        let Some(close) = close else {
            return Err(SyntaxError::new(col(open), "unclosed '['").into());
        };
        let inner_start = chars[open].0 + 1;
        let inner = &src[inner_start..chars[close].0];
        let parts: Vec<&str> = inner.split(';').collect();
        let [b, s, c] = parts[..] else {
            return Err(SyntaxError::new(col(open), "expected '[b; S; c]'").into());
        };
        let s_offset = open + 1 + b.chars().count() + 1;
        let poly = parse_poly(s, datum.shape()).map_err(|e| {
            let mut e = e;
            e.col += s_offset;
            e
        })?;
        let mut exp = schur_expand(&poly)?;
        if negate {
            exp = exp.neg();
        }
        let term = CellElement::basis(datum, b.trim(), exp, c.trim())?;
        acc = acc.checked_add(&term)?;
        i = close + 1;
    }
}
