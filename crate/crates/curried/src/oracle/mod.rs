//! De-curried ground truth: explicit Lie algebras over ℚ with their classical
//! representations, and brute-force checks that a representation condition
//! holds exactly when the matching curried identity does.
//!
//! Vectors are sparse combinations keyed by basis labels, so graded carriers
//! such as `ℚ[ξ]` are handled without truncation: every action applied to a
//! finite combination is computed exactly.

mod gl;
mod sp;
mod weyl;
mod witt;

pub use gl::{curry_gl, glid_witnesses, uncurry_gl, Gl, GlModule};
pub use sp::{sp_curry_witnesses, Sp, SpLabel};
pub use weyl::{normal_order_commutator, weyl_commutator, weyl_curry_witnesses, Weyl};
pub use witt::{witt_curry_witnesses, Witt};

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::rc::Rc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::checkers::Algebra;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A finite rational combination of basis keys with no zero coefficients.
pub type Combo<K> = BTreeMap<K, Rational>;

pub(crate) fn add_to<K: Ord>(acc: &mut Combo<K>, k: K, c: &Rational) {
    if c.is_zero() {
        return;
    }
    match acc.entry(k) {
        Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// `acc += c·v`.
pub(crate) fn add_scaled<K: Ord + Clone>(acc: &mut Combo<K>, v: &Combo<K>, c: &Rational) {
    for (k, x) in v {
        add_to(acc, k.clone(), &(x * c));
    }
}

/// Extends `f` linearly.
pub(crate) fn apply<A, B: Ord + Clone>(v: &Combo<A>, f: impl Fn(&A) -> Combo<B>) -> Combo<B> {
    let mut out = Combo::new();
    for (k, c) in v {
        add_scaled(&mut out, &f(k), c);
    }
    out
}

pub(crate) fn difference<K: Ord + Clone>(a: &Combo<K>, b: &Combo<K>) -> Combo<K> {
    let mut out = a.clone();
    add_scaled(&mut out, b, &Rational::from_int(-1));
    out
}

/// Exponent vectors.
pub type Mono = Vec<u8>;

pub(crate) fn degree(m: &[u8]) -> usize {
    m.iter().map(|&e| e as usize).sum()
}

/// All exponent vectors in `n` variables of total degree exactly `d`.
pub(crate) fn monomials_of_degree(n: usize, d: usize) -> Vec<Mono> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - first) {
            rest.insert(0, first as u8);
            out.push(rest);
        }
    }
    out
}

pub(crate) fn monomials_up_to(n: usize, d: usize) -> Vec<Mono> {
    (0..=d).flat_map(|k| monomials_of_degree(n, k)).collect()
}

pub(crate) fn unit(n: usize, i: usize) -> Mono {
    let mut m = vec![0; n];
    m[i] = 1;
    m
}

pub(crate) fn mono_add(a: &[u8], b: &[u8]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `a − b`, or `None` if some exponent would go negative.
pub(crate) fn mono_sub(a: &[u8], b: &[u8]) -> Option<Mono> {
    a.iter().zip(b).map(|(x, y)| x.checked_sub(*y)).collect()
}

/// Every `ε ≤ a` componentwise.
pub(crate) fn below(a: &[u8]) -> Vec<Mono> {
    let mut out = vec![Vec::new()];
    for &e in a {
        out = out.into_iter().flat_map(|m: Mono| (0..=e).map(move |k| [m.clone(), vec![k]].concat())).collect();
    }
    out
}

pub(crate) fn factorial(m: &[u8]) -> Rational {
    m.iter().flat_map(|&e| 1..=e as i64).map(Rational::from_int).product()
}

/// `∏ C(a_i, b_i)`.
pub(crate) fn binomial(a: &[u8], b: &[u8]) -> Rational {
    match mono_sub(a, b) {
        None => Rational::zero(),
        Some(rest) => &factorial(a) / &(&factorial(b) * &factorial(&rest)),
    }
}

/// A Lie algebra with a bounded basis and a bracket defined on all labels.
pub trait LieAlgebra {
    type Label: Clone + Ord + fmt::Debug;

    fn name(&self) -> String;

    /// The labels inside the configured bound.
    fn basis(&self) -> Vec<Self::Label>;

    fn bracket(&self, x: &Self::Label, y: &Self::Label) -> Combo<Self::Label>;
}

/// The bracket table on the bounded basis.
#[derive(Clone, Debug)]
pub struct StructureConstants<L> {
    pub labels: Vec<L>,
    pub table: BTreeMap<(usize, usize), Combo<L>>,
}

impl<L: Clone + Ord + fmt::Debug> StructureConstants<L> {
    pub fn build<A: LieAlgebra<Label = L>>(alg: &A) -> Self {
        let labels = alg.basis();
        let mut table = BTreeMap::new();
        for (i, x) in labels.iter().enumerate() {
            for (j, y) in labels.iter().enumerate() {
                let b = alg.bracket(x, y);
                if !b.is_empty() {
                    table.insert((i, j), b);
                }
            }
        }
        StructureConstants { labels, table }
    }

    pub fn bracket(&self, i: usize, j: usize) -> Combo<L> {
        self.table.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn antisymmetry_witnesses(&self) -> Vec<String> {
        let mut out = Vec::new();
        for i in 0..self.labels.len() {
            for j in i..self.labels.len() {
                let mut sum = self.bracket(i, j);
                add_scaled(&mut sum, &self.bracket(j, i), &Rational::one());
                if !sum.is_empty() {
                    out.push(format!(
                        "[{:?}, {:?}] + [{:?}, {:?}] ≠ 0",
                        self.labels[i], self.labels[j], self.labels[j], self.labels[i]
                    ));
                }
            }
        }
        out
    }
}

/// Basis triples where the Jacobi identity fails.
pub fn jacobi_witnesses<A: LieAlgebra>(alg: &A) -> Vec<String> {
    let basis = alg.basis();
    let mut cache: BTreeMap<(A::Label, A::Label), Combo<A::Label>> = BTreeMap::new();
    let mut bracket = |x: &A::Label, y: &A::Label| -> Combo<A::Label> {
        cache.entry((x.clone(), y.clone())).or_insert_with(|| alg.bracket(x, y)).clone()
    };
    let mut out = Vec::new();
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate().skip(i + 1) {
            for z in basis.iter().skip(j + 1) {
                let mut sum = Combo::new();
                for (inner, outer) in [((x, y), z), ((y, z), x), ((z, x), y)] {
                    for (w, c) in bracket(inner.0, inner.1) {
                        add_scaled(&mut sum, &bracket(&w, outer), &c);
                    }
                }
                if !sum.is_empty() {
                    out.push(format!("Jacobi fails on {x:?}, {y:?}, {z:?}"));
                }
            }
        }
    }
    out
}

type Action<L, K> = Rc<dyn Fn(&L, &K) -> Combo<K>>;

/// A linear map `μ: 𝔤 ⊗ M -> M` given on basis labels and basis vectors.
/// `inputs` are the basis vectors of `M` on which identities are asserted.
#[derive(Clone)]
pub struct ClassicalRep<L, K> {
    pub name: String,
    pub inputs: Vec<K>,
    action: Action<L, K>,
}

impl<L: 'static, K: Ord + Clone + 'static> ClassicalRep<L, K> {
    pub fn new(name: impl Into<String>, inputs: Vec<K>, action: impl Fn(&L, &K) -> Combo<K> + 'static) -> Self {
        ClassicalRep { name: name.into(), inputs, action: Rc::new(action) }
    }

    pub fn act(&self, x: &L, v: &K) -> Combo<K> {
        (self.action)(x, v)
    }

    pub fn act_on(&self, x: &L, v: &Combo<K>) -> Combo<K> {
        apply(v, |k| self.act(x, k))
    }

    /// `μ` plus `c` times the elementary map `input ↦ output` on `label`.
    pub fn perturbed(&self, label: L, input: K, output: K, c: Rational) -> Self
    where
        L: PartialEq,
    {
        let base = self.action.clone();
        ClassicalRep {
            name: format!("{} (perturbed)", self.name),
            inputs: self.inputs.clone(),
            action: Rc::new(move |x: &L, v: &K| {
                let mut out = base(x, v);
                if *x == label && *v == input {
                    add_to(&mut out, output.clone(), &c);
                }
                out
            }),
        }
    }
}

impl<L, K> fmt::Debug for ClassicalRep<L, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassicalRep({}, {} inputs)", self.name, self.inputs.len())
    }
}

/// Failures of `μ([X,Y]) = [μ(X), μ(Y)]` on basis pairs and inputs.
pub fn rep_witnesses<A: LieAlgebra, K: Ord + Clone + fmt::Debug + 'static>(
    alg: &A,
    rep: &ClassicalRep<A::Label, K>,
) -> Vec<String>
where
    A::Label: 'static,
{
    let basis = alg.basis();
    let mut out = Vec::new();
    for (i, x) in basis.iter().enumerate() {
        for y in basis.iter().skip(i + 1) {
            let xy = alg.bracket(x, y);
            for v in &rep.inputs {
                let lhs = apply(&xy, |z| rep.act(z, v));
                let yv = rep.act(y, v);
                let xv = rep.act(x, v);
                let rhs = difference(&rep.act_on(x, &yv), &rep.act_on(y, &xv));
                if lhs != rhs {
                    out.push(format!("μ([{x:?}, {y:?}]) ≠ [μ({x:?}), μ({y:?})] on {v:?}"));
                }
            }
        }
    }
    out
}

/// Adds a random elementary map to one label's action.
pub fn random_perturbation<A: LieAlgebra, K: Ord + Clone + 'static>(
    alg: &A,
    rep: &ClassicalRep<A::Label, K>,
    rng: &mut ChaCha8Rng,
) -> ClassicalRep<A::Label, K>
where
    A::Label: PartialEq + 'static,
{
    let basis = alg.basis();
    let label = basis[rng.gen_range(0..basis.len())].clone();
    let input = rep.inputs[rng.gen_range(0..rep.inputs.len())].clone();
    let output = rep.inputs[rng.gen_range(0..rep.inputs.len())].clone();
    let c = Rational::from_int(rng.gen_range(1..=3));
    rep.perturbed(label, input, output, c)
}

/// One module of the test bank: whether the representation condition and the
/// curried identity hold on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurryCase {
    pub module: String,
    pub perturbed: bool,
    pub rep_holds: bool,
    pub curried_holds: bool,
}

impl CurryCase {
    pub fn agrees(&self) -> bool {
        self.rep_holds == self.curried_holds
    }

    fn new(module: &str, perturbed: bool, rep: &[String], curried: &[String]) -> Self {
        CurryCase {
            module: module.to_string(),
            perturbed,
            rep_holds: rep.is_empty(),
            curried_holds: curried.is_empty(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurryReport {
    pub algebra: String,
    pub basis_size: usize,
    pub structure_failures: Vec<String>,
    pub cases: Vec<CurryCase>,
}

impl CurryReport {
    /// Structure constants are sound, every case agrees, the bank holds and
    /// every perturbation is rejected.
    pub fn passed(&self) -> bool {
        self.structure_failures.is_empty() && self.cases.iter().all(|c| c.agrees() && c.rep_holds != c.perturbed)
    }
}

impl fmt::Display for CurryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "algebra {} (basis {}): {}",
            self.algebra,
            self.basis_size,
            if self.passed() { "pass" } else { "FAIL" }
        )?;
        for w in &self.structure_failures {
            writeln!(f, "  structure: {w}")?;
        }
        for c in &self.cases {
            let yn = |b: bool| if b { "holds" } else { "fails" };
            writeln!(f, "  {}: representation {}, curried {}", c.module, yn(c.rep_holds), yn(c.curried_holds))?;
        }
        Ok(())
    }
}

fn structure_failures<A: LieAlgebra>(alg: &A) -> Vec<String> {
    let mut out = StructureConstants::build(alg).antisymmetry_witnesses();
    out.extend(jacobi_witnesses(alg));
    out
}

fn run_bank<A, K>(
    alg: &A,
    bank: Vec<ClassicalRep<A::Label, K>>,
    curried: impl Fn(&ClassicalRep<A::Label, K>) -> Vec<String>,
    rng: &mut ChaCha8Rng,
) -> CurryReport
where
    A: LieAlgebra,
    A::Label: PartialEq + 'static,
    K: Ord + Clone + fmt::Debug + 'static,
{
    let mut cases = Vec::new();
    for rep in &bank {
        cases.push(CurryCase::new(&rep.name, false, &rep_witnesses(alg, rep), &curried(rep)));
    }
    // the last module of each bank is the one carrying a nontrivial action;
    // an abelian algebra accepts every perturbation, so it gets none
    let abelian = StructureConstants::build(alg).table.is_empty();
    if let Some(rep) = bank.last().filter(|_| !abelian) {
        let p = random_perturbation(alg, rep, rng);
        cases.push(CurryCase::new(&p.name, true, &rep_witnesses(alg, &p), &curried(&p)));
    }
    CurryReport {
        algebra: alg.name(),
        basis_size: alg.basis().len(),
        structure_failures: structure_failures(alg),
        cases,
    }
}

/// Checks the test bank of `algebra` on `V = ℚ^n`: the representation
/// condition and the curried identity must agree on every module, hold on the
/// classical ones and fail on a random perturbation. `degree` bounds the
/// graded carriers and the Witt/Weyl labels.
pub fn verify_currying(algebra: Algebra, n: usize, degree: usize, seed: u64) -> Result<CurryReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = |ok: bool, what: &str| if ok { Ok(()) } else { Err(Error::Bound(what.to_string())) };
    Ok(match algebra {
        Algebra::Gl => {
            bound((1..=3).contains(&n), "gl oracle needs 1 ≤ n ≤ 3")?;
            let alg = Gl::new(n);
            let bank = [GlModule::Trivial, GlModule::Standard, GlModule::StandardSquared]
                .into_iter()
                .map(|m| alg.rep(m))
                .collect();
            run_bank(&alg, bank, |r| glid_witnesses(n, r), &mut rng)
        }
        Algebra::Sp => {
            bound((1..=3).contains(&n), "sp oracle needs 1 ≤ dim V ≤ 3")?;
            let alg = Sp::new(n);
            let bank = vec![alg.trivial_rep(), alg.defining_rep()];
            run_bank(&alg, bank, |r| sp_curry_witnesses(n, r), &mut rng)
        }
        Algebra::Witt => {
            bound((1..=2).contains(&n) && (1..=4).contains(&degree), "Witt oracle needs n ≤ 2 and 1 ≤ degree ≤ 4")?;
            let alg = Witt::new(n, degree);
            let bank = vec![alg.polynomial_rep(degree)];
            run_bank(&alg, bank, |r| witt_curry_witnesses(n, degree, r), &mut rng)
        }
        Algebra::Weyl => {
            bound((1..=2).contains(&n) && (1..=4).contains(&degree), "Weyl oracle needs n ≤ 2 and 1 ≤ degree ≤ 4")?;
            let alg = Weyl::new(n, degree);
            let bank = vec![alg.polynomial_rep(degree)];
            run_bank(&alg, bank, |r| weyl_curry_witnesses(n, degree, degree, r), &mut rng)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(2, 3).len(), 4);
        assert_eq!(monomials_up_to(4, 2).len(), 15);
        assert_eq!(below(&[2, 1]).len(), 6);
        assert_eq!(binomial(&[3, 2], &[1, 1]), Rational::from_int(6));
        assert_eq!(binomial(&[1], &[2]), Rational::zero());
    }

    #[test]
    fn combos_drop_cancelled_terms() {
        let mut c: Combo<u8> = [(1, Rational::one())].into();
        add_to(&mut c, 1, &Rational::from_int(-1));
        assert!(c.is_empty());
    }

    #[test]
    fn every_algebra_passes_its_bank_and_rejects_a_perturbation() {
        let runs = [
            (Algebra::Gl, 1, 0),
            (Algebra::Gl, 2, 0),
            (Algebra::Gl, 3, 0),
            (Algebra::Sp, 2, 0),
            (Algebra::Witt, 2, 4),
            (Algebra::Weyl, 1, 4),
            (Algebra::Weyl, 2, 4),
        ];
        for (alg, n, d) in runs {
            let report = verify_currying(alg, n, d, 7).unwrap();
            assert!(report.passed(), "{report}");
            assert_eq!(report.cases.iter().any(|c| c.perturbed && !c.curried_holds), n > 1 || alg != Algebra::Gl);
        }
        assert!(verify_currying(Algebra::Weyl, 3, 2, 0).is_err());
    }

    mod proptests {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(16))]

            // any perturbation breaks both the representation and the curried identity
            #[test]
            fn both_routes_reject_random_perturbations(seed in any::<u64>()) {
                for (alg, n, d) in [(Algebra::Gl, 2, 0), (Algebra::Sp, 1, 0), (Algebra::Witt, 1, 3), (Algebra::Weyl, 1, 3)] {
                    let report = verify_currying(alg, n, d, seed).unwrap();
                    prop_assert!(report.passed(), "{}", report);
                }
            }
        }
    }
}
