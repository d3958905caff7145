//! Shared pieces of the line-based file formats: `key=value` headers and
//! dense matrix rows. Blank lines and `#` comments are ignored everywhere.

use crate::error::ParseError;
use crate::matrix::Matrix;
use crate::rational::Rational;

/// Largest row or column count accepted in a matrix header.
pub(crate) const MAX_MATRIX_DIM: usize = 1 << 12;

pub(crate) struct Cursor<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(s: &'a str) -> Self {
        let lines = s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
        Cursor { lines, pos: 0 }
    }

    pub fn peek(&self) -> Option<&'a str> {
        self.lines.get(self.pos).copied()
    }

    pub fn next_line(&mut self, what: &str) -> Result<&'a str, ParseError> {
        let l = self.peek().ok_or_else(|| ParseError::new(format!("unexpected end of input, expected {what}")))?;
        self.pos += 1;
        Ok(l)
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.lines.len()
    }

    /// True when the next line starts with the word `head`.
    pub fn peek_head(&self, head: &str) -> bool {
        self.peek().is_some_and(|l| l.split_whitespace().next() == Some(head))
    }
}

/// The `key=value` pairs of a line whose first word must be `head`.
pub(crate) struct Fields<'a> {
    head: &'a str,
    pairs: Vec<(&'a str, &'a str)>,
}

impl<'a> Fields<'a> {
    pub fn parse(line: &'a str, head: &str) -> Result<Self, ParseError> {
        let mut toks = line.split_whitespace();
        let first = toks.next().unwrap_or("");
        if first != head {
            return Err(ParseError::new(format!("expected `{head}`, found `{first}`")));
        }
        let pairs = toks
            .map(|t| t.split_once('=').ok_or_else(|| ParseError::new(format!("expected key=value, found `{t}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Fields { head: first, pairs })
    }

    pub fn get(&self, key: &str) -> Result<&'a str, ParseError> {
        self.pairs
            .iter()
            .find(|(k, _)| *k == key)
            .map(|&(_, v)| v)
            .ok_or_else(|| ParseError::new(format!("`{}` line lacks {key}=", self.head)))
    }

    pub fn opt(&self, key: &str) -> Option<&'a str> {
        self.pairs.iter().find(|(k, _)| *k == key).map(|&(_, v)| v)
    }

    pub fn usize(&self, key: &str, max: usize) -> Result<usize, ParseError> {
        let v = self.get(key)?;
        let n: usize = v.parse().map_err(|_| ParseError::new(format!("bad {key}: `{v}`")))?;
        if n > max {
            return Err(ParseError::new(format!("{key} = {n} exceeds {max}")));
        }
        Ok(n)
    }
}

/// Reads `rows` lines of `cols` whitespace-separated rationals.
pub(crate) fn read_matrix(cur: &mut Cursor<'_>, rows: usize, cols: usize) -> Result<Matrix, ParseError> {
    let mut m = Matrix::zeros(rows, cols);
    if cols == 0 {
        return Ok(m);
    }
    for i in 0..rows {
        let line = cur.next_line("matrix row")?;
        let vals = line.split_whitespace().map(str::parse::<Rational>).collect::<Result<Vec<_>, _>>()?;
        if vals.len() != cols {
            return Err(ParseError::new(format!("row {} has {} entries, expected {cols}", i + 1, vals.len())));
        }
        for (j, v) in vals.into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
    Ok(m)
}

/// Dense rows, one per line; nothing when there are no columns.
pub(crate) fn write_matrix(out: &mut String, m: &Matrix) {
    if m.cols() == 0 {
        return;
    }
    for row in m.to_rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
}
