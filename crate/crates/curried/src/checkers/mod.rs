//! Verifiers for curried representations in species.
//!
//! Every identity is checked twice: once on the operations and once on the
//! tensor maps built from them with [`op_to_map`]. A [`Report`] keeps the two
//! witness lists apart so callers can assert that the routes agree.

mod gl;
mod pieri;
mod rho;
mod sp;
mod text;
mod weyl;
mod witt;

pub use gl::{check_gl, gl_action, make_delta_standard, tensor_action, tensor_product};
pub use pieri::{pieri_action, pieri_battery, pieri_check, Convention, ConventionOutcome, Eigenspace, PieriReport};
pub use rho::{rho_idempotents, rho_report};
pub use sp::check_sp;
pub use text::{parse_rep, write_rep, Algebra, RepFile};
pub use weyl::{b3_prime_witnesses, central_character, check_weyl_b, check_weyl_c, theta, theta_inv};
pub use witt::check_witt;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::operations::{op_from_map, op_to_map, Frame, Operation, SymSide, Symmetry};
use crate::rational::Rational;
use crate::set::Set;
use crate::species::{FbModule, FbMorphism};

/// One failed instance of a condition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Witness {
    pub degree: usize,
    pub location: String,
    pub condition: String,
}

impl Witness {
    pub fn new(condition: impl Into<String>, degree: usize, location: impl Into<String>) -> Self {
        Witness { degree, location: location.into(), condition: condition.into() }
    }

    fn frame(condition: &str, f: &Frame) -> Self {
        Witness::new(condition, f.s.len(), f.to_string())
    }

    /// A tensor-map identity failing in one degree.
    fn degree(condition: &str, d: usize) -> Self {
        Witness::new(condition, d, format!("degree={d}"))
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.condition, self.location)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub algebra: String,
    pub operation: Vec<Witness>,
    /// `None` when the checker has no tensor-map form.
    pub tensor: Option<Vec<Witness>>,
}

impl Report {
    fn new(algebra: &str, mut operation: Vec<Witness>, tensor: Option<Vec<Witness>>) -> Self {
        operation.sort();
        let tensor = tensor.map(|mut t| {
            t.sort();
            t
        });
        Report { algebra: algebra.to_string(), operation, tensor }
    }

    pub fn passed(&self) -> bool {
        self.operation.is_empty() && self.tensor.as_ref().map_or(true, Vec::is_empty)
    }

    /// Whether both routes reach the same verdict.
    pub fn agree(&self) -> bool {
        self.tensor.as_ref().map_or(true, |t| t.is_empty() == self.operation.is_empty())
    }

    /// Names of the violated conditions on the operation route.
    pub fn failed_conditions(&self) -> BTreeSet<&str> {
        self.operation.iter().map(|w| w.condition.as_str()).collect()
    }

    pub fn tensor_failures(&self) -> BTreeSet<&str> {
        self.tensor.iter().flatten().map(|w| w.condition.as_str()).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {}", self.algebra)?;
        for w in &self.operation {
            writeln!(f, "fail operation {w}")?;
        }
        for w in self.tensor.iter().flatten() {
            writeln!(f, "fail tensor {w}")?;
        }
        if self.tensor.is_some() {
            writeln!(f, "routes {}", if self.agree() { "agree" } else { "disagree" })?;
        }
        writeln!(f, "result {}", if self.passed() { "pass" } else { "fail" })
    }
}

/// `α: simple symmetric (1,1)`, `ω: (0,0)` with truncation one less.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlRepData {
    pub module: FbModule,
    pub alpha: Operation,
    pub omega: Operation,
}

impl GlRepData {
    pub fn truncation(&self) -> usize {
        self.module.truncation()
    }

    /// The symmetric `(1,1)`-operation `φ` with `φ[0] = α`, `φ[1] = ω`.
    pub fn phi(&self) -> Result<Operation> {
        Operation::contract(&[self.alpha.clone(), self.omega.clone()], self.truncation())
    }

    pub fn from_phi(module: FbModule, phi: &Operation) -> Self {
        let n = module.truncation();
        let alpha = layer(phi, 0, n);
        let omega = layer(phi, 1, n);
        GlRepData { module, alpha, omega }
    }

    /// Reads `α, ω` off an equivariant `a: 𝕍⊗M -> 𝕍⊗M`.
    pub fn from_action(module: FbModule, a: &FbMorphism) -> Result<Self> {
        let side = SymSide::Power(1);
        let phi = op_from_map(a, &module, side, side)?;
        Ok(Self::from_phi(module, &phi))
    }

    /// Adds `c·id` to the action.
    pub fn twist(&self, c: &Rational) -> Result<Self> {
        let shift = Operation::scalar(&self.module, self.truncation().saturating_sub(1), c)?;
        Ok(GlRepData { omega: self.omega.add(&shift)?, ..self.clone() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpRepData {
    pub gl: GlRepData,
    /// Simple symmetric `(0,2)`.
    pub beta: Operation,
    /// Simple symmetric `(2,0)`.
    pub beta_prime: Operation,
}

impl SpRepData {
    pub fn module(&self) -> &FbModule {
        &self.gl.module
    }
}

/// `α: simple symmetric (1,*)`, `ω: simple symmetric (0,*)` with truncation one less.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittRepData {
    pub module: FbModule,
    pub alpha: Operation,
    pub omega: Operation,
}

impl WittRepData {
    pub fn truncation(&self) -> usize {
        self.module.truncation()
    }

    pub fn phi(&self) -> Result<Operation> {
        Operation::contract(&[self.alpha.clone(), self.omega.clone()], self.truncation())
    }

    pub fn from_phi(module: FbModule, phi: &Operation) -> Self {
        let n = module.truncation();
        WittRepData { alpha: layer(phi, 0, n), omega: layer(phi, 1, n), module }
    }

    /// `a: Sym⊗M -> 𝕍⊗M`.
    pub fn action(&self) -> Result<FbMorphism> {
        op_to_map(&self.phi()?, &self.module, SymSide::All, SymSide::Power(1))
    }
}

/// A symmetric operation with every arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylRepData {
    pub module: FbModule,
    pub phi: Operation,
}

impl WeylRepData {
    pub fn truncation(&self) -> usize {
        self.module.truncation()
    }

    /// `a: Sym⊗M -> Div⊗M`.
    pub fn action(&self) -> Result<FbMorphism> {
        op_to_map(&self.phi, &self.module, SymSide::All, SymSide::All)
    }
}

/// `φ[k]` with truncation `N - k`, zero when absent.
fn layer(phi: &Operation, k: usize, n: usize) -> Operation {
    phi.expand().into_iter().nth(k).unwrap_or_else(|| Operation::new(n.saturating_sub(k), Symmetry::Symmetric))
}

/// Keeps the slots with `m + k == 1`: the `(1,*)` part of a Weyl operation.
pub fn restrict_weyl_to_witt(w: &WeylRepData) -> WittRepData {
    WittRepData::from_phi(w.module.clone(), &w.phi.filter(|s| s.m + s.k == 1))
}

/// Restricts the source to `𝕍`: the `(1,1)` part.
pub fn restrict_witt_to_gl(w: &WittRepData) -> Result<GlRepData> {
    Ok(GlRepData::from_phi(w.module.clone(), &w.phi()?.filter(|s| s.n + s.k == 1)))
}

pub fn restrict_sp_to_gl(r: &SpRepData) -> GlRepData {
    r.gl.clone()
}

/// Extends gl data by zero to higher `Sym`-degrees.
pub fn extend_gl_to_witt(g: &GlRepData) -> WittRepData {
    WittRepData { module: g.module.clone(), alpha: g.alpha.clone(), omega: g.omega.clone() }
}

/// Whether `α` is the relabeling operation and `ω = δ·id`.
pub fn is_delta_standard(g: &GlRepData, delta: &Rational) -> Result<bool> {
    let std = make_delta_standard(&g.module, delta)?;
    Ok(g.alpha.blocks().eq(std.alpha.blocks()) && g.omega.blocks().eq(std.omega.blocks()))
}

/// Witnesses from a commute check, under a condition name.
fn commute_witnesses(
    module: &FbModule,
    pairs: &[(&str, &Operation, &Operation)],
    condition: &str,
) -> Result<Vec<Witness>> {
    let mut out = Vec::new();
    for (name, phi, psi) in pairs {
        for f in crate::operations::commute_failures(module, phi, psi, &Rational::one())? {
            let mut w = Witness::frame(condition, &f);
            w.location = format!("{name} {}", w.location);
            out.push(w);
        }
    }
    Ok(out)
}

/// Degrees where two maps differ.
fn map_witnesses(condition: &str, lhs: &FbMorphism, rhs: &FbMorphism) -> Vec<Witness> {
    lhs.maps
        .iter()
        .zip(&rhs.maps)
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(d, _)| Witness::degree(condition, d))
        .collect()
}

/// The canonical frame `[p + labels]` with the last `labels` elements named.
fn tail_frame(p: usize, labels: usize) -> (Set, Vec<usize>) {
    (Set::range(p + labels), (p + 1..=p + labels).collect())
}

fn check_simple(op: &Operation, name: &str, arity: Option<(usize, usize)>) -> Result<()> {
    if !op.is_simple() {
        return Err(Error::Arity(format!("{name} must be simple")));
    }
    if op.symmetry() != Symmetry::Symmetric && !op.is_zero() {
        return Err(Error::NotSymmetric);
    }
    if let Some((m, n)) = arity {
        if let Some((s, _)) = op.blocks().find(|(s, _)| (s.m, s.n) != (m, n)) {
            return Err(Error::Arity(format!("{name} has a block at {s}, expected ({m},{n})")));
        }
    }
    Ok(())
}
