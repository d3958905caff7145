//! Representation files: a `rep` header, a module, then named operations.
//!
//! ```text
//! rep algebra=gl
//! module truncation=2
//! ...
//! operation truncation=2 symmetry=symmetric name=alpha
//! ...
//! end
//! operation truncation=1 symmetry=symmetric name=omega
//! end
//! ```
//!
//! The names are `alpha, omega` for gl and Witt, plus `beta, beta_prime` for
//! sp, and `phi` for Weyl. Missing operations are zero.

use std::fmt;

use super::{check_gl, check_sp, check_weyl_b, check_witt, GlRepData, Report, SpRepData, WeylRepData, WittRepData};
use crate::error::{ParseError, Result};
use crate::operations::{read_operation, write_operation_named, Operation, Symmetry};
use crate::species::{read_module, write_module, FbModule};
use crate::text::{Cursor, Fields};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    Gl,
    Sp,
    Witt,
    Weyl,
}

impl Algebra {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "gl" => Algebra::Gl,
            "sp" => Algebra::Sp,
            "witt" => Algebra::Witt,
            "weyl" => Algebra::Weyl,
            _ => return None,
        })
    }

    fn names(self) -> &'static [&'static str] {
        match self {
            Algebra::Gl | Algebra::Witt => &["alpha", "omega"],
            Algebra::Sp => &["alpha", "omega", "beta", "beta_prime"],
            Algebra::Weyl => &["phi"],
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algebra::Gl => "gl",
            Algebra::Sp => "sp",
            Algebra::Witt => "witt",
            Algebra::Weyl => "weyl",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepFile {
    pub algebra: Algebra,
    pub module: FbModule,
    pub ops: Vec<(String, Operation)>,
}

impl RepFile {
    /// The named operation, or zero with the conventional truncation.
    pub fn op(&self, name: &str) -> Operation {
        let n = self.module.truncation();
        let default = if name == "omega" { n.saturating_sub(1) } else { n };
        self.ops
            .iter()
            .find(|(k, _)| k == name)
            .map_or_else(|| Operation::new(default, Symmetry::Symmetric), |(_, op)| op.clone())
    }

    pub fn gl(&self) -> GlRepData {
        GlRepData { module: self.module.clone(), alpha: self.op("alpha"), omega: self.op("omega") }
    }

    pub fn sp(&self) -> SpRepData {
        SpRepData { gl: self.gl(), beta: self.op("beta"), beta_prime: self.op("beta_prime") }
    }

    pub fn witt(&self) -> WittRepData {
        WittRepData { module: self.module.clone(), alpha: self.op("alpha"), omega: self.op("omega") }
    }

    pub fn weyl(&self) -> WeylRepData {
        WeylRepData { module: self.module.clone(), phi: self.op("phi") }
    }

    /// Runs the checker for the declared algebra; Weyl data uses the B-form.
    pub fn check(&self) -> Result<Report> {
        match self.algebra {
            Algebra::Gl => check_gl(&self.gl()),
            Algebra::Sp => check_sp(&self.sp()),
            Algebra::Witt => check_witt(&self.witt()),
            Algebra::Weyl => check_weyl_b(&self.weyl()),
        }
    }
}

pub fn parse_rep(s: &str) -> std::result::Result<RepFile, ParseError> {
    let mut cur = Cursor::new(s);
    let head = Fields::parse(cur.next_line("rep header")?, "rep")?;
    let name = head.get("algebra")?;
    let algebra = Algebra::parse(name).ok_or_else(|| ParseError::new(format!("unknown algebra `{name}`")))?;
    let module = read_module(&mut cur)?;
    let mut ops: Vec<(String, Operation)> = Vec::new();
    while cur.peek_head("operation") {
        let (name, op) = read_operation(&mut cur)?;
        let name = name.ok_or_else(|| ParseError::new("operation in a rep file needs name="))?;
        if !algebra.names().contains(&name.as_str()) {
            return Err(ParseError::new(format!("{algebra} has no operation `{name}`")));
        }
        if ops.iter().any(|(k, _)| *k == name) {
            return Err(ParseError::new(format!("operation `{name}` given twice")));
        }
        ops.push((name, op));
    }
    if !cur.at_end() {
        return Err(ParseError::new("trailing input after operations"));
    }
    Ok(RepFile { algebra, module, ops })
}

pub fn write_rep(r: &RepFile) -> String {
    let mut out = format!("rep algebra={}\n", r.algebra);
    out.push_str(&write_module(&r.module));
    for (name, op) in &r.ops {
        out.push_str(&write_operation_named(op, Some(name)));
    }
    out
}
