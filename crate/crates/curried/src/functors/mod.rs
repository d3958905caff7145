//! Modules over diagram categories and the functors to curried representations.
//!
//! A [`CategoryModule`] is an FB-module together with its generator families,
//! each stored as an operation: cups and caps for Brauer, `η` and `ζ` for the
//! restricted partition category, `η` for partitions and one `η` per factor for
//! the star product. The functors reinterpret those families as the curried
//! data; the inverses check the conditions that make the reinterpretation
//! well defined and hand back the generators.

mod fa;
mod principal;
mod relations;

pub use fa::{fa_module, fa_to_witt};
pub use principal::{star_block, Factor, Morphism, PrincipalModule};
pub use relations::{brauer_relations, partition_relations, restricted_relations, RelationReport};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::checkers::{
    b3_prime_witnesses, central_character, check_sp, check_weyl_b, check_witt, is_delta_standard, make_delta_standard,
    restrict_weyl_to_witt, restrict_witt_to_gl, theta_inv, SpRepData, WeylRepData, WittRepData,
};
use crate::diagram::Kind;
use crate::error::{Error, Result};
use crate::operations::{Operation, Slot, Symmetry};
use crate::rational::Rational;
use crate::species::{FbModule, FbMorphism};

/// A diagram category with its loop parameters. `Brauer(c)` has loop value `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Brauer(Rational),
    Restricted(Rational),
    Partition(Rational),
    /// `P(δ)⋆P(ε)`.
    Star(Rational, Rational),
}

impl Family {
    pub fn kind(&self) -> Kind {
        match self {
            Family::Brauer(_) => Kind::Brauer,
            Family::Restricted(_) => Kind::Restricted,
            Family::Partition(_) | Family::Star(..) => Kind::Partition,
        }
    }

    /// Loop value of the (first) factor.
    pub fn delta(&self) -> Rational {
        match self {
            Family::Brauer(d) | Family::Restricted(d) | Family::Partition(d) | Family::Star(d, _) => d.clone(),
        }
    }

    pub fn epsilon(&self) -> Rational {
        match self {
            Family::Star(_, e) => e.clone(),
            _ => Rational::zero(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Brauer(d) => write!(f, "brauer({d})"),
            Family::Restricted(d) => write!(f, "restricted({d})"),
            Family::Partition(d) => write!(f, "partition({d})"),
            Family::Star(d, e) => write!(f, "star({d},{e})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryModule {
    pub family: Family,
    pub module: FbModule,
    /// Generator families by name, as simple symmetric operations.
    pub generators: BTreeMap<String, Operation>,
}

impl CategoryModule {
    pub fn generator(&self, name: &str) -> Result<&Operation> {
        self.generators
            .get(name)
            .ok_or_else(|| Error::KindMismatch(format!("{} has no generator `{name}`", self.family)))
    }

    pub fn truncation(&self) -> usize {
        self.module.truncation()
    }
}

/// Slots of every arity allowed by `keep`, up to ambient `n`.
fn slots(n: usize, keep: impl Fn(usize, usize) -> bool) -> Vec<Slot> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            if keep(a, b) {
                out.extend(Slot::all(a, b, 0, n));
            }
        }
    }
    out
}

fn tabulate(pm: &PrincipalModule, truncation: usize, slots: Vec<Slot>, factor: Factor) -> Result<Operation> {
    Operation::tabulate(truncation, Symmetry::Symmetric, slots, |s| {
        let (full, x, y) = s.frame();
        pm.act(&pm.generator(full, x, y, factor)?)
    })
}

/// `Hom([k], -)` with its generator families computed by diagram composition.
pub fn principal_module(family: Family, k: usize, truncation: usize) -> Result<CategoryModule> {
    if k > truncation {
        return Err(Error::Bound(format!("k = {k} exceeds the truncation {truncation}")));
    }
    let pm = PrincipalModule::new(family.clone(), k, truncation)?;
    let n = truncation;
    let first = Factor::First;
    let generators: Vec<(&str, Operation)> = match family {
        Family::Brauer(_) => vec![
            ("cup", tabulate(&pm, n, slots(n, |a, b| (a, b) == (0, 2)), first)?),
            ("cap", tabulate(&pm, n, slots(n, |a, b| (a, b) == (2, 0)), first)?),
        ],
        Family::Restricted(_) => vec![
            ("eta", tabulate(&pm, n, slots(n, |a, _| a == 1), first)?),
            ("zeta", tabulate(&pm, n.saturating_sub(1), slots(n.saturating_sub(1), |a, b| a == 0 && b > 0), first)?),
        ],
        Family::Partition(_) => vec![("eta", tabulate(&pm, n, slots(n, |_, _| true), first)?)],
        Family::Star(..) => vec![
            ("eta1", tabulate(&pm, n, slots(n, |_, _| true), first)?),
            ("eta2", tabulate(&pm, n, slots(n, |_, _| true), Factor::Second)?),
        ],
    };
    Ok(CategoryModule {
        family,
        module: pm.fb_module()?,
        generators: generators.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
    })
}

fn expect_family(m: &CategoryModule, kind: &str, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::KindMismatch(format!("expected a {kind} module, got {}", m.family)))
    }
}

fn require_pass(what: &str, passed: bool) -> Result<()> {
    if passed {
        Ok(())
    } else {
        Err(Error::CheckFailed(what.into()))
    }
}

/// Brauer category with loop value `2δ` to δ-standard sp data.
pub fn brauer_to_sp(m: &CategoryModule) -> Result<SpRepData> {
    expect_family(m, "Brauer", matches!(m.family, Family::Brauer(_)))?;
    let delta = &m.family.delta() * &Rational::new(1, 2);
    Ok(SpRepData {
        gl: make_delta_standard(&m.module, &delta)?,
        beta: m.generator("cup")?.clone(),
        beta_prime: m.generator("cap")?.clone(),
    })
}

pub fn sp_to_brauer(r: &SpRepData, delta: &Rational) -> Result<CategoryModule> {
    require_pass("sp data is not δ-standard", is_delta_standard(&r.gl, delta)?)?;
    require_pass("sp data fails check_sp", check_sp(r)?.passed())?;
    let generators = [("cup", r.beta.clone()), ("cap", r.beta_prime.clone())];
    Ok(CategoryModule {
        family: Family::Brauer(delta * &Rational::from_int(2)),
        module: r.module().clone(),
        generators: generators.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
    })
}

/// Restricted partition category to δ-standard Witt data: `α = η`, `ω = ζ` with `ω_∅ = δ`.
pub fn restricted_to_witt(m: &CategoryModule) -> Result<WittRepData> {
    expect_family(m, "restricted partition", matches!(m.family, Family::Restricted(_)))?;
    let zeta = m.generator("zeta")?;
    let omega = Operation::scalar(&m.module, zeta.truncation(), &m.family.delta())?.add(zeta)?;
    Ok(WittRepData { module: m.module.clone(), alpha: m.generator("eta")?.clone(), omega })
}

pub fn witt_to_restricted(w: &WittRepData, delta: &Rational) -> Result<CategoryModule> {
    require_pass("Witt data is not δ-standard", is_delta_standard(&restrict_witt_to_gl(w)?, delta)?)?;
    require_pass("Witt data fails check_witt", check_witt(w)?.passed())?;
    let generators = [("eta", w.alpha.clone()), ("zeta", w.omega.filter(|s| s.n > 0))];
    Ok(CategoryModule {
        family: Family::Restricted(delta.clone()),
        module: w.module.clone(),
        generators: generators.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
    })
}

/// Partition category to Weyl data with `ω = 0`: `φ = η`, `φ_{∅,∅} = δ`.
pub fn partition_to_weyl(m: &CategoryModule) -> Result<WeylRepData> {
    expect_family(m, "partition", matches!(m.family, Family::Partition(_)))?;
    Ok(WeylRepData { module: m.module.clone(), phi: m.generator("eta")?.clone() })
}

/// Needs simple `φ` (so `ω = 0`), a central character, the 0-standard gl part
/// and the B-conditions.
pub fn weyl_to_partition(w: &WeylRepData) -> Result<CategoryModule> {
    require_pass("φ has non-simple layers, so ω ≠ 0", w.phi.is_simple())?;
    let delta = central_character(w).map_err(|x| Error::CheckFailed(format!("no central character: {x}")))?;
    let gl = restrict_witt_to_gl(&restrict_weyl_to_witt(w))?;
    require_pass("Weyl data is not 0-standard", is_delta_standard(&gl, &Rational::zero())?)?;
    require_pass("Weyl data fails the B-conditions", check_weyl_b(w)?.passed())?;
    Ok(CategoryModule {
        family: Family::Partition(delta),
        module: w.module.clone(),
        generators: [("eta".to_string(), w.phi.clone())].into(),
    })
}

/// The C-form of a star-product module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarImage {
    pub module: FbModule,
    pub alpha: Operation,
    pub omega: Operation,
}

impl StarImage {
    pub fn weyl(&self) -> Result<WeylRepData> {
        Ok(WeylRepData { module: self.module.clone(), phi: theta_inv(&self.alpha, &self.omega)? })
    }
}

/// `α` from the first factor, `ω^S_{A,B} = (−1)^{|A|+1}` times the second;
/// the empty slots become `δ` and `−ε`.
pub fn star_to_weyl(m: &CategoryModule) -> Result<StarImage> {
    expect_family(m, "star product", matches!(m.family, Family::Star(..)))?;
    let second = m.generator("eta2")?;
    let mut omega = Operation::new(second.truncation(), Symmetry::Symmetric);
    for (s, c) in second.blocks() {
        let sign = Rational::sign_pow(s.m + 1);
        omega.insert(s, c.scale(&sign))?;
    }
    Ok(StarImage { module: m.module.clone(), alpha: m.generator("eta1")?.clone(), omega })
}

/// Layers of `φ` that break `φ[n] = (−1)^{n+1}φ[1]`, as a pass flag.
pub fn satisfies_b3_prime(w: &WeylRepData) -> bool {
    b3_prime_witnesses(&w.phi).is_empty()
}

/// Slots where `f ∘ φ ≠ ψ ∘ f` for `f: M -> N`. With `f` equivariant and both
/// operations natural, canonical frames suffice.
pub fn intertwining_failures(
    f: &FbMorphism,
    (m, phi): (&FbModule, &Operation),
    (n, psi): (&FbModule, &Operation),
) -> Vec<Slot> {
    let slots: BTreeSet<Slot> = phi.blocks().chain(psi.blocks()).map(|(s, _)| s).collect();
    slots
        .into_iter()
        .filter(|s| s.source_degree() < f.maps.len() && s.target_degree() < f.maps.len())
        .filter(|&s| {
            f.maps[s.target_degree()].mul(&phi.canonical(m, s)) != psi.canonical(n, s).mul(&f.maps[s.source_degree()])
        })
        .collect()
}

/// The curried data a module is sent to, by operation name.
pub fn curried_operations(m: &CategoryModule) -> Result<Vec<(String, Operation)>> {
    let named = |ops: Vec<(&str, Operation)>| ops.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
    Ok(match m.family {
        Family::Brauer(_) => {
            let r = brauer_to_sp(m)?;
            named(vec![("alpha", r.gl.alpha), ("omega", r.gl.omega), ("beta", r.beta), ("beta_prime", r.beta_prime)])
        }
        Family::Restricted(_) => {
            let w = restricted_to_witt(m)?;
            named(vec![("alpha", w.alpha), ("omega", w.omega)])
        }
        Family::Partition(_) => named(vec![("phi", partition_to_weyl(m)?.phi)]),
        Family::Star(..) => {
            let image = star_to_weyl(m)?;
            named(vec![("alpha", image.alpha), ("omega", image.omega)])
        }
    })
}

/// Everything a module map `f: src -> dst` must respect and does not:
/// equivariance, each generator family, and each operation of the curried
/// image. Empty exactly when `f` is a map of modules on both sides.
pub fn module_map_failures(f: &FbMorphism, src: &CategoryModule, dst: &CategoryModule) -> Result<Vec<String>> {
    if src.family != dst.family {
        return Err(Error::KindMismatch(format!("{} vs {}", src.family, dst.family)));
    }
    let mut out = Vec::new();
    if let Some(d) = f.equivariance_failure(&src.module, &dst.module) {
        out.push(format!("not equivariant in degree {d}"));
    }
    let sides = [
        (
            "generator",
            src.generators.clone().into_iter().collect::<Vec<_>>(),
            dst.generators.clone().into_iter().collect::<Vec<_>>(),
        ),
        ("curried", curried_operations(src)?, curried_operations(dst)?),
    ];
    for (what, a, b) in sides {
        for ((name, phi), (_, psi)) in a.iter().zip(&b) {
            for s in intertwining_failures(f, (&src.module, phi), (&dst.module, psi)) {
                out.push(format!("{what} {name} at {s}"));
            }
        }
    }
    Ok(out)
}
