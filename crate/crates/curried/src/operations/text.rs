//! Operation files:
//!
//! ```text
//! operation truncation=3 symmetry=symmetric
//! block m=1 n=1 k=0 p=1 rows=1 cols=1
//! 1
//! end
//! ```
//!
//! The header may carry `name=<word>` when several operations share a file.
//! Each block is the canonical-frame matrix of its slot, as dense rows.

use super::{Operation, Slot, Symmetry};
use crate::error::ParseError;
use crate::species::MAX_TRUNCATION;
use crate::text::{read_matrix, write_matrix, Cursor, Fields, MAX_MATRIX_DIM};

pub fn parse_operation(s: &str) -> Result<Operation, ParseError> {
    let mut cur = Cursor::new(s);
    let (_, op) = read_operation(&mut cur)?;
    if !cur.at_end() {
        return Err(ParseError::new("trailing input after operation"));
    }
    Ok(op)
}

/// Reads one operation and its optional name.
pub(crate) fn read_operation(cur: &mut Cursor<'_>) -> Result<(Option<String>, Operation), ParseError> {
    let head = Fields::parse(cur.next_line("operation header")?, "operation")?;
    let truncation = head.usize("truncation", MAX_TRUNCATION)?;
    let sym = head.get("symmetry")?;
    let symmetry = Symmetry::parse(sym).ok_or_else(|| ParseError::new(format!("unknown symmetry `{sym}`")))?;
    let name = head.opt("name").map(str::to_owned);
    let mut op = Operation::new(truncation, symmetry);
    loop {
        let line = cur.next_line("block or end")?;
        if line == "end" {
            return Ok((name, op));
        }
        let f = Fields::parse(line, "block")?;
        let dim = |k: &str| f.usize(k, MAX_TRUNCATION);
        let slot = Slot::new(dim("m")?, dim("n")?, dim("k")?, dim("p")?);
        let (rows, cols) = (f.usize("rows", MAX_MATRIX_DIM)?, f.usize("cols", MAX_MATRIX_DIM)?);
        if op.get(slot).is_some() {
            return Err(ParseError::new(format!("slot {slot} given twice")));
        }
        let m = read_matrix(cur, rows, cols)?;
        op.insert(slot, m).map_err(|e| ParseError::new(e.to_string()))?;
    }
}

pub fn write_operation(op: &Operation) -> String {
    write_operation_named(op, None)
}

pub(crate) fn write_operation_named(op: &Operation, name: Option<&str>) -> String {
    let mut out = format!("operation truncation={} symmetry={}", op.truncation(), op.symmetry());
    if let Some(n) = name {
        out.push_str(&format!(" name={n}"));
    }
    out.push('\n');
    for (s, m) in op.blocks() {
        out.push_str(&format!("block {s} rows={} cols={}\n", m.rows(), m.cols()));
        write_matrix(&mut out, m);
    }
    out.push_str("end\n");
    out
}
