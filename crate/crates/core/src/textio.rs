//! Text formats: truth tables (`n=<k>` header plus a 0/1 string), ANF
//! expressions (`x1*x2 + x3 + 1`), permutation files (`m=<k>` header
//! plus image indices), construction recipes (key=value lines), and
//! field elements (`a^5`, `1`, hex masks).

use std::collections::BTreeMap;

use crate::boolfn::{AnfForm, TruthTable};
use crate::error::{Error, Result};
use crate::gf2m::FieldContext;
use crate::perm::PointMap;

/// Parses `n=<k>` on line 1 and 2^k characters of 0/1 on line 2.
pub fn parse_truth_table(text: &str) -> Result<TruthTable> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty input"))?;
    let n = parse_header(header, "n", ln + 1)?;
    if n == 0 || n > crate::boolfn::MAX_VARS {
        return Err(Error::parse(ln + 1, 3, format!("n={n} out of range")));
    }
    let (ln2, row) = lines
        .next()
        .ok_or_else(|| Error::parse(ln + 2, 1, "missing value row"))?;
    let row = row.trim();
    if row.len() != 1 << n {
        return Err(Error::parse(
            ln2 + 1,
            row.len() + 1,
            format!("expected {} values, got {}", 1u32 << n, row.len()),
        ));
    }
    let mut t = TruthTable::zero(n)?;
    for (i, c) in row.bytes().enumerate() {
        match c {
            b'0' => {}
            b'1' => t.set(i as u32, true),
            _ => {
                return Err(Error::parse(
                    ln2 + 1,
                    i + 1,
                    format!("expected '0' or '1', got {:?}", c as char),
                ))
            }
        }
    }
    if let Some((ln3, _)) = lines.next() {
        return Err(Error::parse(ln3 + 1, 1, "trailing content"));
    }
    Ok(t)
}

pub fn format_truth_table(t: &TruthTable) -> String {
    let mut s = String::with_capacity(t.len() + 8);
    s.push_str(&format!("n={}\n", t.n()));
    for x in 0..t.len() as u32 {
        s.push(if t.get(x) { '1' } else { '0' });
    }
    s.push('\n');
    s
}

fn parse_header(line: &str, key: &str, ln: usize) -> Result<u32> {
    let line = line.trim();
    let rest = line
        .strip_prefix(key)
        .and_then(|r| r.trim_start().strip_prefix('='))
        .ok_or_else(|| Error::parse(ln, 1, format!("expected `{key}=<value>`")))?;
    rest.trim()
        .parse()
        .map_err(|_| Error::parse(ln, key.len() + 2, format!("bad {key} value {rest:?}")))
}

/// Parses an ANF expression: '+'-separated terms, each a '*'-joined
/// product of `x<i>` factors (any letter works as the variable name),
/// with `1` for the constant term and `0` for the zero function. The
/// variable count is inferred from the largest index unless given.
pub fn parse_anf(text: &str, n: Option<u32>) -> Result<AnfForm> {
    // one expression, possibly wrapped over lines
    let flat = text.split_whitespace().collect::<Vec<_>>().join(" ");
    let mut masks: Vec<u32> = Vec::new();
    let mut max_index = 0u32;
    let mut saw_term = false;
    let mut col = 1usize;
    for term in flat.split('+') {
        let term_col = col;
        col += term.len() + 1;
        let term = term.trim();
        if term.is_empty() {
            return Err(Error::parse(1, term_col, "empty term between '+'"));
        }
        saw_term = true;
        if term == "0" {
            continue;
        }
        if term == "1" {
            masks.push(0);
            continue;
        }
        let mut mask = 0u32;
        for factor in term.split(['*', ' ']).filter(|f| !f.trim().is_empty()) {
            let factor = factor.trim();
            let mut chars = factor.chars();
            let head = chars.next().unwrap();
            let digits: String = chars.collect();
            if !head.is_ascii_alphabetic() || digits.is_empty() {
                return Err(Error::parse(
                    1,
                    term_col,
                    format!("bad factor {factor:?}, expected e.g. x3"),
                ));
            }
            let idx: u32 = digits.parse().map_err(|_| {
                Error::parse(1, term_col, format!("bad variable index in {factor:?}"))
            })?;
            if idx == 0 {
                return Err(Error::parse(1, term_col, "variable indices start at 1"));
            }
            max_index = max_index.max(idx);
            mask |= 1 << (idx - 1);
        }
        masks.push(mask);
    }
    if !saw_term {
        return Err(Error::parse(1, 1, "empty ANF"));
    }
    let n = n.unwrap_or(max_index.max(1));
    if max_index > n {
        return Err(Error::parse(
            1,
            1,
            format!("variable x{max_index} exceeds n={n}"),
        ));
    }
    AnfForm::from_monomials(n, masks)
}

/// Canonical ANF text: terms by descending degree then mask order,
/// factors joined with '*'; `0` for the empty form.
pub fn format_anf(a: &AnfForm) -> String {
    let mut terms: Vec<u32> = a.monomials().collect();
    if terms.is_empty() {
        return "0".into();
    }
    terms.sort_by_key(|&m| (std::cmp::Reverse(m.count_ones()), m));
    let rendered: Vec<String> = terms
        .iter()
        .map(|&m| {
            if m == 0 {
                "1".into()
            } else {
                (0..32)
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| format!("x{}", i + 1))
                    .collect::<Vec<_>>()
                    .join("*")
            }
        })
        .collect();
    rendered.join(" + ")
}

/// Parses `m=<k>` on line 1 and 2^k space-separated image indices on
/// line 2.
pub fn parse_point_map(text: &str) -> Result<PointMap> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty input"))?;
    let m = parse_header(header, "m", ln + 1)?;
    let (ln2, row) = lines
        .next()
        .ok_or_else(|| Error::parse(ln + 2, 1, "missing image row"))?;
    let mut table = Vec::with_capacity(1 << m);
    for tok in row.split_whitespace() {
        let v: u32 = tok
            .parse()
            .map_err(|_| Error::parse(ln2 + 1, 1, format!("bad image index {tok:?}")))?;
        table.push(v);
    }
    PointMap::from_table(m, table)
}

pub fn format_point_map(p: &PointMap) -> String {
    let images: Vec<String> = p.table().iter().map(|v| v.to_string()).collect();
    format!("m={}\n{}\n", p.m(), images.join(" "))
}

/// Detects and parses either truth-table or ANF input.
pub fn parse_function(text: &str) -> Result<TruthTable> {
    let first = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .unwrap_or("")
        .trim();
    if first.starts_with("n=") {
        parse_truth_table(text)
    } else {
        Ok(parse_anf(text, None)?.tt())
    }
}

/// key=value lines; '#' starts a comment; later keys may not repeat.
pub fn parse_recipe(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::parse(ln + 1, 1, "expected key=value"))?;
        let key = key.trim().to_string();
        if out.insert(key.clone(), value.trim().to_string()).is_some() {
            return Err(Error::parse(ln + 1, 1, format!("duplicate key {key:?}")));
        }
    }
    Ok(out)
}

/// Field element syntax: `a^<e>` (power of the generator), `a`, `0`,
/// `1`, or a hex mask like `0xB`.
pub fn parse_element(ctx: &FieldContext, text: &str) -> Result<u32> {
    let t = text.trim();
    let bad = || Error::parse(1, 1, format!("bad field element {t:?}"));
    if t == "a" {
        return Ok(ctx.generator());
    }
    if let Some(e) = t.strip_prefix("a^") {
        let e: i64 = e.trim().parse().map_err(|_| bad())?;
        return Ok(ctx.generator_pow(e));
    }
    let v = if let Some(hex) = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        u32::from_str_radix(hex, 16).map_err(|_| bad())?
    } else {
        t.parse().map_err(|_| bad())?
    };
    if v >= ctx.size() {
        return Err(Error::NotInField { value: v, m: ctx.m() });
    }
    Ok(v)
}

/// `default` or a hex/decimal polynomial mask.
pub fn parse_modulus(m: u32, text: &str) -> Result<Option<u32>> {
    let t = text.trim();
    if t.is_empty() || t == "default" {
        return Ok(None);
    }
    let v = if let Some(hex) = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        u32::from_str_radix(hex, 16)
    } else {
        t.parse()
    }
    .map_err(|_| Error::parse(1, 1, format!("bad modulus {t:?} for m={m}")))?;
    Ok(Some(v))
}
