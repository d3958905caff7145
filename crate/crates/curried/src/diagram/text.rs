//! Line format: `n=2 m=2 kind=brauer blocks=[[b1,t2],[t1,b2]]`.
//!
//! A morphism is one line per term, each optionally led by a rational
//! coefficient. The zero morphism is written `zero n=<n> m=<m> kind=<kind>`.

use std::fmt;

use super::{Diagram, DiagramMorphism, Kind, MAX_LABELS};
use crate::error::ParseError;
use crate::rational::Rational;

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} m={} kind={} blocks=[", self.n, self.m, self.kind)?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (l, &x) in b.iter().enumerate() {
                if l > 0 {
                    f.write_str(",")?;
                }
                if self.is_source(x) {
                    write!(f, "b{}", x as usize + 1)?;
                } else {
                    write!(f, "t{}", x as usize - self.n + 1)?;
                }
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

fn field<'a>(tok: Option<&'a str>, key: &str) -> Result<&'a str, ParseError> {
    tok.and_then(|t| t.strip_prefix(key))
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| ParseError::new(format!("expected {key}=...")))
}

fn size(tok: Option<&str>, key: &str) -> Result<usize, ParseError> {
    let v = field(tok, key)?;
    let n: usize = v.parse().map_err(|_| ParseError::new(format!("bad {key}: {v:?}")))?;
    if n > MAX_LABELS {
        return Err(ParseError::new(format!("{key} = {n} exceeds {MAX_LABELS}")));
    }
    Ok(n)
}

fn header<'a>(toks: &mut impl Iterator<Item = &'a str>) -> Result<(usize, usize, Kind), ParseError> {
    let n = size(toks.next(), "n")?;
    let m = size(toks.next(), "m")?;
    let k = field(toks.next(), "kind")?;
    let kind = Kind::parse(k).ok_or_else(|| ParseError::new(format!("unknown kind {k:?}")))?;
    if n + m > MAX_LABELS {
        return Err(ParseError::new("too many labels"));
    }
    Ok((n, m, kind))
}

fn label(tok: &str, n: usize, m: usize) -> Result<u8, ParseError> {
    let bad = || ParseError::new(format!("bad label {tok:?}"));
    let (side, idx) = tok.split_at(tok.char_indices().nth(1).map_or(tok.len(), |(i, _)| i));
    let i: usize = idx.parse().map_err(|_| bad())?;
    match side {
        "b" if (1..=n).contains(&i) => Ok((i - 1) as u8),
        "t" if (1..=m).contains(&i) => Ok((n + i - 1) as u8),
        _ => Err(bad()),
    }
}

pub fn parse_diagram(s: &str) -> Result<Diagram, ParseError> {
    let s = s.trim();
    let at = s.find("blocks=").ok_or_else(|| ParseError::new("missing blocks="))?;
    let (head, rest) = s.split_at(at);
    let mut toks = head.split_whitespace();
    let (n, m, kind) = header(&mut toks)?;
    if toks.next().is_some() {
        return Err(ParseError::new("unexpected token before blocks="));
    }
    let body: String = rest["blocks=".len()..].chars().filter(|c| !c.is_whitespace()).collect();
    let inner = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| ParseError::new("blocks must be bracketed"))?;
    let mut blocks = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let open = rest.strip_prefix('[').ok_or_else(|| ParseError::new("expected '['"))?;
        let close = open.find(']').ok_or_else(|| ParseError::new("unclosed block"))?;
        let block = open[..close].split(',').map(|t| label(t, n, m)).collect::<Result<Vec<u8>, _>>()?;
        blocks.push(block);
        rest = &open[close + 1..];
        if let Some(r) = rest.strip_prefix(',') {
            if r.is_empty() {
                return Err(ParseError::new("trailing comma"));
            }
            rest = r;
        } else if !rest.is_empty() {
            return Err(ParseError::new("expected ',' between blocks"));
        }
    }
    Diagram::new(kind, n, m, blocks).map_err(|e| ParseError::new(e.to_string()))
}

pub fn parse_morphism(s: &str) -> Result<DiagramMorphism, ParseError> {
    let mut out: Option<DiagramMorphism> = None;
    for line in s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let (coef, rest) = match line.split_once(char::is_whitespace) {
            Some((first, rest)) if !first.contains('=') => (first, rest),
            _ => ("1", line),
        };
        let this = if coef == "zero" {
            let (n, m, kind) = header(&mut rest.split_whitespace())?;
            DiagramMorphism::zero(kind, n, m)
        } else {
            let c: Rational = coef.parse()?;
            DiagramMorphism::scaled(parse_diagram(rest)?, c)
        };
        out = Some(match out {
            None => this,
            Some(acc) if (acc.n, acc.m, acc.kind) == (this.n, this.m, this.kind) => acc.add(&this),
            Some(_) => return Err(ParseError::new("terms disagree on source, target or kind")),
        });
    }
    out.ok_or_else(|| ParseError::new("empty morphism"))
}

pub fn write_morphism(f: &DiagramMorphism) -> String {
    if f.is_empty() {
        return format!("zero n={} m={} kind={}", f.n, f.m, f.kind);
    }
    f.terms().map(|(d, c)| format!("{c} {d}")).collect::<Vec<_>>().join("\n")
}
