//! Module files:
//!
//! ```text
//! module truncation=2
//! degree n=0 dim=1
//! degree n=1 dim=1
//! degree n=2 dim=2
//! gen i=1
//! 0 1
//! 1 0
//! ```
//!
//! Each `degree` line is followed by its generators `s_1..s_{n-1}` in order.
//! Parsing checks shapes only; [`FbModule::validate`] checks the relations.

use super::{Degree, FbModule};
use crate::error::ParseError;
use crate::text::{read_matrix, write_matrix, Cursor, Fields, MAX_MATRIX_DIM};

/// Largest truncation accepted by [`parse_module`].
pub const MAX_TRUNCATION: usize = 16;

pub fn parse_module(s: &str) -> Result<FbModule, ParseError> {
    let mut cur = Cursor::new(s);
    let m = read_module(&mut cur)?;
    if !cur.at_end() {
        return Err(ParseError::new("trailing input after module"));
    }
    Ok(m)
}

pub(crate) fn read_module(cur: &mut Cursor<'_>) -> Result<FbModule, ParseError> {
    let head = Fields::parse(cur.next_line("module header")?, "module")?;
    let truncation = head.usize("truncation", MAX_TRUNCATION)?;
    let mut degrees = Vec::with_capacity(truncation + 1);
    for n in 0..=truncation {
        let f = Fields::parse(cur.next_line("degree line")?, "degree")?;
        if f.usize("n", MAX_TRUNCATION)? != n {
            return Err(ParseError::new(format!("degrees out of order at {n}")));
        }
        let dim = f.usize("dim", MAX_MATRIX_DIM)?;
        let mut gens = Vec::new();
        for i in 1..n {
            let g = Fields::parse(cur.next_line("generator")?, "gen")?;
            if g.usize("i", MAX_TRUNCATION)? != i {
                return Err(ParseError::new(format!("generator s{i} missing in degree {n}")));
            }
            gens.push(read_matrix(cur, dim, dim)?);
        }
        degrees.push(Degree { dim, gens });
    }
    Ok(FbModule::from_degrees(degrees))
}

pub fn write_module(m: &FbModule) -> String {
    let mut out = format!("module truncation={}\n", m.truncation());
    for (n, d) in m.degrees().iter().enumerate() {
        out.push_str(&format!("degree n={n} dim={}\n", d.dim));
        for (i, g) in d.gens.iter().enumerate() {
            out.push_str(&format!("gen i={}\n", i + 1));
            write_matrix(&mut out, g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::species::{specht, tensor, Partition};

    #[test]
    fn modules_round_trip() {
        let v = FbModule::standard(3);
        for m in [FbModule::unit(2), specht(&Partition::new(vec![2, 1]), 4), tensor(&v, &v).unwrap()] {
            let text = write_module(&m);
            assert_eq!(parse_module(&text).unwrap(), m, "{text}");
        }
    }

    #[test]
    fn malformed_modules_are_rejected() {
        for bad in [
            "",
            "module truncation=1\ndegree n=0 dim=1",
            "module truncation=1\ndegree n=1 dim=1\ndegree n=0 dim=1",
            "module truncation=2\ndegree n=0 dim=0\ndegree n=1 dim=0\ndegree n=2 dim=1\ngen i=1\n1 0",
            "module truncation=99",
            "module truncation=0\ndegree n=0 dim=1\nextra",
        ] {
            assert!(parse_module(bad).is_err(), "{bad}");
        }
    }
}
