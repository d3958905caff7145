//! The ten acceptance criteria as one runnable battery.
//!
//! Shared by the `acceptance` integration test and the `curried acceptance`
//! subcommand. Each criterion returns a pass flag and a one-line summary; an
//! error inside a criterion counts as a failure.

use std::fmt;
use std::time::{Duration, Instant};

use crate::checkers::central_character;
use crate::checkers::{
    check_sp, check_weyl_c, check_witt, is_delta_standard, pieri_battery, pieri_check, restrict_sp_to_gl,
    restrict_weyl_to_witt, restrict_witt_to_gl, rho_report, theta, theta_inv, Algebra, GlRepData,
};
use crate::diagram::{
    bell, compose_diagrams, double_factorial, enumerate_diagrams, hom_dim, triangular_factorize, DiagramMorphism, Kind,
};
use crate::error::Result;
use crate::functors::{
    brauer_relations, brauer_to_sp, fa_module, fa_to_witt, partition_relations, partition_to_weyl, principal_module,
    restricted_relations, restricted_to_witt, satisfies_b3_prime, sp_to_brauer, star_to_weyl, witt_to_restricted,
    Family,
};
use crate::oracle::{normal_order_commutator, verify_currying, weyl_commutator, LieAlgebra, Weyl};
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {:>2}. {} ({:.1}s): {}", self.id, self.title, self.elapsed.as_secs_f64(), self.detail)
    }
}

type Check = fn(u64) -> Result<(bool, String)>;

pub const CRITERIA: [(&str, Check); 10] = [
    ("diagram counts", diagram_counts),
    ("composition relations", composition_relations),
    ("triangular factorization", factorization),
    ("classical currying", classical_currying),
    ("Weyl commutator", weyl_formula),
    ("Brauer and curried sp", brauer_sp),
    ("restricted partitions and curried Witt", restricted_witt),
    ("star product and curried Weyl", star_weyl),
    ("Pieri contents", pieri),
    ("ρ idempotents", rho),
];

pub fn run_one(id: usize, seed: u64) -> Option<Outcome> {
    let (title, check) = CRITERIA.get(id.checked_sub(1)?)?;
    let start = Instant::now();
    let (passed, detail) = check(seed).unwrap_or_else(|e| (false, format!("error: {e}")));
    Some(Outcome { id, title, passed, detail, elapsed: start.elapsed() })
}

pub fn run_all(seed: u64) -> Vec<Outcome> {
    (1..=CRITERIA.len()).filter_map(|id| run_one(id, seed)).collect()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn deltas() -> [Rational; 3] {
    [q(0, 1), q(1, 1), q(3, 2)]
}

fn diagram_counts(_: u64) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for total in 0..=8usize {
        for n in 0..=total {
            let m = total - n;
            let brauer = if total % 2 == 0 { double_factorial(total as i64 - 1) } else { 0 };
            if hom_dim(n, m, Kind::Brauer)? as u64 != brauer {
                bad.push(format!("brauer {n}→{m}"));
            }
            if hom_dim(n, m, Kind::Partition)? as u64 != bell(total) {
                bad.push(format!("partition {n}→{m}"));
            }
            checked += 2;
        }
    }
    Ok((bad.is_empty(), format!("{checked} hom spaces with n+m ≤ 8; mismatches: {bad:?}")))
}

fn composition_relations(_: u64) -> Result<(bool, String)> {
    let mut ok = true;
    let mut frames = 0;
    let mut failures = Vec::new();
    for delta in deltas() {
        let b = brauer_relations(5, &delta)?;
        let r = restricted_relations(5, &delta)?;
        let p = partition_relations(5, &delta)?;
        ok &= b.covers(&["(a) cups commute", "(a) caps commute", "n=0", "n=1", "n=2"]);
        ok &= r.covers(&["j∉A (a)", "j∈A (b)", "j∈A (c)", "(d)", "(e)"]);
        ok &= p.covers(&["B∩D=∅ (D1)", "B∩D≠∅ (D2)", "B∩D≠∅ (D2)+(D3)", "(D3)", "(D4)"]);
        for rep in [&b, &r, &p] {
            frames += rep.cases.values().sum::<usize>();
            failures.extend(rep.failures.iter().take(3).map(|f| format!("δ={delta}: {f}")));
        }
    }
    Ok((
        ok && failures.is_empty(),
        format!("{frames} frames with |S| ≤ 5, δ ∈ {{0, 1, 3/2}}, all cases reached: {ok}; failures: {failures:?}"),
    ))
}

fn factorization(_: u64) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut count = 0;
    for kind in [Kind::Brauer, Kind::Partition] {
        for n in 0..=4 {
            for m in 0..=4 {
                for d in enumerate_diagrams(n, m, kind)? {
                    let (up, down) = triangular_factorize(&d);
                    let ok = up.is_upwards()
                        && down.is_downwards()
                        && compose_diagrams(&up, &down, &q(3, 2))? == DiagramMorphism::from_diagram(d.clone());
                    if !ok {
                        bad.push(format!("{d}"));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok((bad.is_empty(), format!("{count} diagrams with n, m ≤ 4; failures: {bad:?}")))
}

fn classical_currying(seed: u64) -> Result<(bool, String)> {
    let runs = [
        (Algebra::Gl, 1, 0),
        (Algebra::Gl, 2, 0),
        (Algebra::Gl, 3, 0),
        (Algebra::Sp, 2, 0),
        (Algebra::Witt, 2, 4),
        (Algebra::Weyl, 1, 4),
        (Algebra::Weyl, 2, 4),
    ];
    let mut ok = true;
    let mut rejected = std::collections::BTreeSet::new();
    let mut parts = Vec::new();
    for (alg, n, d) in runs {
        let report = verify_currying(alg, n, d, seed)?;
        ok &= report.passed();
        if report.cases.iter().any(|c| c.perturbed && !c.rep_holds && !c.curried_holds) {
            rejected.insert(format!("{alg:?}"));
        }
        parts.push(format!("{}:{}", report.algebra, if report.passed() { "ok" } else { "FAIL" }));
    }
    // gl(1) is abelian, but gl(2), gl(3) carry the perturbation for the family
    ok &= rejected.len() == 4;
    Ok((ok, format!("{}; perturbation rejected for {rejected:?}", parts.join(", "))))
}

fn weyl_formula(_: u64) -> Result<(bool, String)> {
    let mut pairs = 0;
    let mut bad = Vec::new();
    for n in 1..=2 {
        let labels = Weyl::new(n, 2).basis();
        for (a, s) in &labels {
            for (b, t) in &labels {
                if weyl_commutator(a, s, b, t) != normal_order_commutator(a, s, b, t) {
                    bad.push(format!("ξ^{a:?}η^{s:?}, ξ^{b:?}η^{t:?}"));
                }
                pairs += 1;
            }
        }
    }
    Ok((bad.is_empty(), format!("{pairs} label pairs, n ≤ 2, degree ≤ 2; mismatches: {bad:?}")))
}

fn brauer_sp(_: u64) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for delta in deltas() {
        for k in [0, 1] {
            let m = principal_module(Family::Brauer(&delta * &q(2, 1)), k, 6)?;
            let r = brauer_to_sp(&m)?;
            let sp_ok = check_sp(&r)?.passed();
            let standard = is_delta_standard(&restrict_sp_to_gl(&r), &delta)?;
            let round_trip = sp_to_brauer(&r, &delta).is_ok_and(|back| back == m);
            if !(sp_ok && standard && round_trip) {
                bad.push(format!("δ={delta} k={k}: sp {sp_ok}, standard {standard}, round trip {round_trip}"));
            }
        }
    }
    Ok((bad.is_empty(), format!("N=6, δ ∈ {{0, 1, 3/2}}, k ∈ {{0, 1}}; failures: {bad:?}")))
}

fn restricted_witt(_: u64) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for delta in [q(0, 1), q(1, 1)] {
        let m = principal_module(Family::Restricted(delta.clone()), 0, 5)?;
        let w = restricted_to_witt(&m)?;
        let witt_ok = check_witt(&w)?.passed();
        let round_trip = witt_to_restricted(&w, &delta).is_ok_and(|back| back == m);
        if !(witt_ok && round_trip) {
            bad.push(format!("principal δ={delta}: witt {witt_ok}, round trip {round_trip}"));
        }
    }
    for x in 1..=2 {
        let m = fa_module(x, 5)?;
        // fa_to_witt refuses data with ω ≠ 0
        let ok = match fa_to_witt(&m) {
            Ok(w) => check_witt(&w)?.passed() && is_delta_standard(&restrict_witt_to_gl(&w)?, &q(0, 1))?,
            Err(_) => false,
        };
        if !ok {
            bad.push(format!("colorings |X|={x}"));
        }
    }
    Ok((bad.is_empty(), format!("N=5, principal δ ∈ {{0, 1}}, colorings |X| ∈ {{1, 2}}; failures: {bad:?}")))
}

fn star_weyl(_: u64) -> Result<(bool, String)> {
    let (delta, eps) = (q(1, 1), q(2, 1));
    let m = principal_module(Family::Star(delta, eps.clone()), 0, 4)?;
    let image = star_to_weyl(&m)?;
    let c_ok = check_weyl_c(&image.module, &image.alpha, &image.omega)?.passed();
    let w = image.weyl()?;
    let character = central_character(&w).ok();
    let gl: GlRepData = restrict_witt_to_gl(&restrict_weyl_to_witt(&w))?;
    let standard = is_delta_standard(&gl, &eps)?;
    let (alpha, omega) = theta(&w.phi)?;
    let n = alpha.truncation();
    let theta_ok = (alpha.clone(), omega.clone()) == (image.alpha.truncate(n), image.omega.truncate(n))
        && theta_inv(&alpha, &omega)? == w.phi.truncate(n);
    let mut b3 = true;
    for d in [q(1, 1), q(2, 1)] {
        b3 &= satisfies_b3_prime(&partition_to_weyl(&principal_module(Family::Partition(d), 0, 4)?)?);
    }
    let ok = c_ok && character == Some(q(-1, 1)) && standard && theta_ok && b3;
    let shown = character.map_or("none".to_string(), |c| c.to_string());
    Ok((ok, format!("P(1)⋆P(2), N=4: (C1)(C2) {c_ok}, central character {shown}, 2-standard {standard}, Θ round trip {theta_ok}, B3′ on partitions {b3}")))
}

fn pieri(_: u64) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for lambda in pieri_battery() {
        let r = pieri_check(&lambda)?;
        ok &= r.passed();
        let conv: Vec<String> = r.verified_by().iter().map(|c| c.to_string()).collect();
        parts.push(format!("{}: {}", r.lambda, if conv.is_empty() { "none".to_string() } else { conv.join(" and ") }));
    }
    Ok((ok, format!("conventions verified per λ: {}", parts.join("; "))))
}

fn rho(_: u64) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut data = Vec::new();
    for k in [0, 1] {
        let m = principal_module(Family::Brauer(q(2, 1)), k, 4)?;
        data.push((format!("brauer k={k}"), restrict_sp_to_gl(&brauer_to_sp(&m)?)));
    }
    for d in [q(1, 1), q(2, 1)] {
        let w = partition_to_weyl(&principal_module(Family::Partition(d.clone()), 0, 4)?)?;
        data.push((format!("partition δ={d}"), restrict_witt_to_gl(&restrict_weyl_to_witt(&w))?));
    }
    for (name, gl) in &data {
        for n in 1..=3 {
            let report = rho_report(gl, n)?;
            if !report.passed() {
                bad.push(format!("{name} n={n}"));
            }
        }
    }
    Ok((bad.is_empty(), format!("{} modules, n ≤ 3; failures: {bad:?}", data.len())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn criteria_are_numbered_from_one() {
        assert!(run_one(0, 0).is_none());
        assert!(run_one(11, 0).is_none());
        let o = run_one(5, 0).unwrap();
        assert!(o.passed, "{o}");
        assert!(o.to_string().starts_with("[PASS]  5."));
    }
}
