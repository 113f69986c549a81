//! Cross-checks between the two realizations of B(λ), shared by the
//! `verify` command and the acceptance tests.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::cartan::{weyl_dim, DominantWeight, Index, Weight};
use crate::error::{Error, Result};
use crate::graph::{
    build_graph, closure_check, edge_check, isomorphic, maximal_nodes, BuildOptions, CrystalGraph,
    InfinitySuite, Isomorphism, MonomialSuite, TensorSuite,
};
use crate::highest_weight::{
    enumerate_n_lambda, enumerate_t_lambda, highest_monomial, in_n_lambda, in_t_lambda_set, monomial_of_u, omega,
    omega_inv, TensorElement,
};
use crate::monomial::Monomial;
use crate::tableau;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Dim,
    Iso,
    Closure,
    Omega,
    Inverse,
}

impl Check {
    pub const ALL: [Check; 5] = [Check::Dim, Check::Iso, Check::Closure, Check::Omega, Check::Inverse];

    pub fn name(self) -> &'static str {
        match self {
            Check::Dim => "dim",
            Check::Iso => "iso",
            Check::Closure => "closure",
            Check::Omega => "omega",
            Check::Inverse => "inverse",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::parse(0, format!("unknown check `{s}`")))
    }
}

/// Both crystal graphs of B(λ).
pub struct Graphs {
    pub lambda: DominantWeight,
    pub monomial: CrystalGraph<Monomial>,
    pub tensor: CrystalGraph<TensorElement>,
}

impl Graphs {
    pub fn build(lambda: DominantWeight, opts: &BuildOptions) -> Result<Self> {
        Ok(Graphs {
            lambda,
            monomial: build_graph(&MonomialSuite::default(), highest_monomial(lambda), opts)?,
            tensor: build_graph(&TensorSuite, TensorElement::highest(lambda), opts)?,
        })
    }
}

/// `Ok(summary)` or `Err(first counterexample)`.
pub type CheckResult = std::result::Result<String, String>;

pub fn run_check(check: Check, graphs: &Graphs) -> CheckResult {
    match check {
        Check::Dim => check_dim(graphs),
        Check::Iso => check_iso(graphs),
        Check::Closure => check_closure(graphs),
        Check::Omega => check_omega(graphs),
        Check::Inverse => check_inverse(graphs),
    }
}

/// Enumeration, both BFS closures and the Weyl dimension agree, and the
/// BFS closure of `N_λ` is exactly the enumerated set.
pub fn check_dim(g: &Graphs) -> CheckResult {
    let lambda = g.lambda;
    let dim = weyl_dim(lambda);
    let enumerated = enumerate_n_lambda(lambda);
    let tableaux = enumerate_t_lambda(lambda).len();
    let sizes = [enumerated.len(), tableaux, g.monomial.len(), g.tensor.len()];
    if sizes.iter().any(|&n| n as u128 != dim) {
        return Err(format!(
            "weyl_dim{lambda} = {dim} but |N(λ)| = {}, |T(∞)^λ| = {}, BFS(N_λ) = {}, BFS(T_∞⊗t_λ) = {}",
            sizes[0], sizes[1], sizes[2], sizes[3]
        ));
    }
    let bfs: HashSet<&Monomial> = g.monomial.nodes.iter().map(|n| &n.element).collect();
    for u in &enumerated {
        let n = monomial_of_u(u, lambda).map_err(|e| e.to_string())?;
        if !bfs.contains(&n) {
            return Err(format!("{n} (u = {u}) is enumerated but not reached from N_λ"));
        }
    }
    Ok(format!("{dim}"))
}

pub fn check_iso(g: &Graphs) -> CheckResult {
    match isomorphic(&g.monomial, &g.tensor) {
        Isomorphism::Isomorphic { bijection } => {
            // The forced bijection must be ω_λ itself.
            for (v, &w) in bijection.iter().enumerate() {
                let image = omega(&g.monomial.nodes[v].element, g.lambda).map_err(|e| e.to_string())?;
                if image != g.tensor.nodes[w].element {
                    return Err(format!(
                        "graph bijection sends {} to {} but omega gives {image}",
                        g.monomial.nodes[v].repr, g.tensor.nodes[w].repr
                    ));
                }
            }
            Ok(format!("{} nodes, {} edges", g.monomial.len(), g.monomial.edges.len()))
        }
        Isomorphism::Mismatch { reason } => Err(reason),
    }
}

pub fn check_closure(g: &Graphs) -> CheckResult {
    let lambda = g.lambda;
    let report = closure_check(&MonomialSuite::default(), &g.monomial, |n| in_n_lambda(n, lambda).is_some());
    if let Some(v) = report.violations.first() {
        return Err(format!("N(λ): {}({}) = {}: {}", v.operator, v.node, v.result, v.problem));
    }
    let tensor_report = closure_check(&TensorSuite, &g.tensor, |x| in_t_lambda_set(x.tableau(), lambda));
    if let Some(v) = tensor_report.violations.first() {
        return Err(format!("T(∞)_λ: {}({}) = {}: {}", v.operator, v.node, v.result, v.problem));
    }
    let maximal = maximal_nodes(&MonomialSuite::default(), &g.monomial);
    if maximal != [0] {
        return Err(format!("maximal monomials: {:?}", maximal.iter().map(|&v| &g.monomial.nodes[v].repr).collect::<Vec<_>>()));
    }
    let maximal = maximal_nodes(&TensorSuite, &g.tensor);
    if maximal != [0] {
        return Err(format!("maximal tensor elements: {:?}", maximal.iter().map(|&v| &g.tensor.nodes[v].repr).collect::<Vec<_>>()));
    }
    Ok(format!(
        "{} + {} nodes, {} operator results",
        report.nodes_checked,
        tensor_report.nodes_checked,
        report.nonzero_results + tensor_report.nonzero_results
    ))
}

/// ω_λ preserves wt, ε_i, φ_i and commutes with every `f̃_i`, `ẽ_i`.
pub fn check_omega(g: &Graphs) -> CheckResult {
    let lambda = g.lambda;
    let image = |n: &Monomial| omega(n, lambda).map_err(|e| format!("omega({n}): {e}"));
    let mut checked = 0;
    for node in &g.monomial.nodes {
        let n = &node.element;
        let x = image(n)?;
        if n.weight() != x.weight() {
            return Err(format!("wt({n}) = {} but wt({x}) = {}", n.weight(), x.weight()));
        }
        for i in Index::ALL {
            let d = n.string_data(i);
            if (d.eps, d.phi) != (x.eps(i), x.phi(i)) {
                return Err(format!(
                    "(ε{i}, φ{i}) of {n} is ({}, {}) but of {x} is ({}, {})",
                    d.eps,
                    d.phi,
                    x.eps(i),
                    x.phi(i)
                ));
            }
            let lhs_f = n.f(i).map(|m| image(&m)).transpose()?;
            if lhs_f != x.f(i) {
                return Err(format!("omega(f{i} {n}) = {lhs_f:?} but f{i} omega = {:?}", x.f(i)));
            }
            let lhs_e = n.e(i).map(|m| image(&m)).transpose()?;
            if lhs_e != x.e(i) {
                return Err(format!("omega(e{i} {n}) = {lhs_e:?} but e{i} omega = {:?}", x.e(i)));
            }
            checked += 2;
        }
    }
    Ok(format!("{checked} operator applications intertwined"))
}

/// Every edge is undone by `ẽ_i`, and ω_λ, ω_λ⁻¹ are mutually inverse.
pub fn check_inverse(g: &Graphs) -> CheckResult {
    edge_check(&MonomialSuite::default(), &g.monomial).map_err(|e| format!("N(λ): {e}"))?;
    edge_check(&TensorSuite, &g.tensor).map_err(|e| format!("T(∞)_λ: {e}"))?;
    for node in &g.monomial.nodes {
        let x = omega(&node.element, g.lambda).map_err(|e| e.to_string())?;
        let back = omega_inv(&x).map_err(|e| e.to_string())?;
        if back != node.element {
            return Err(format!("omega_inv(omega({})) = {back}", node.repr));
        }
    }
    for node in &g.tensor.nodes {
        let n = omega_inv(&node.element).map_err(|e| e.to_string())?;
        let back = omega(&n, g.lambda).map_err(|e| e.to_string())?;
        if back != node.element {
            return Err(format!("omega(omega_inv({})) = {back}", node.repr));
        }
    }
    Ok(format!("{} edges, {} round trips", g.monomial.edges.len() + g.tensor.edges.len(), 2 * g.monomial.len()))
}

/// Highest weight whose crystal agrees with B(∞) up to `depth` steps
/// below the top: every `f̃_i` applied above that depth acts on the B(∞)
/// factor because `λ(h_i) >= 2·depth - 1 >= -wt(h_i)`.
pub fn binf_window(depth: usize) -> DominantWeight {
    let d = 2 * depth as i64;
    DominantWeight::new(d, d).expect("nonnegative")
}

/// Truncated graphs of T(∞) and of the monomial crystal seen from a
/// large highest weight, with weights shifted by -λ.
pub fn binf_graphs(
    depth: usize,
    workers: usize,
) -> Result<(CrystalGraph<tableau::MlTableau>, CrystalGraph<Monomial>)> {
    let opts = BuildOptions {
        max_depth: Some(depth),
        workers,
        ..BuildOptions::default()
    };
    let lambda = binf_window(depth);
    let tableaux = build_graph(&InfinitySuite, tableau::highest(), &opts)?;
    let suite = MonomialSuite {
        weight_shift: Weight::ZERO - lambda.weight(),
    };
    let monomials = build_graph(&suite, highest_monomial(lambda), &opts)?;
    Ok((tableaux, monomials))
}

/// Runs the given checks for one λ; returns one line per check.
pub fn verify_lambda(
    lambda: DominantWeight,
    checks: &[Check],
    opts: &BuildOptions,
) -> Result<Vec<(Check, CheckResult)>> {
    let graphs = Graphs::build(lambda, opts)?;
    Ok(checks.iter().map(|&c| (c, run_check(c, &graphs))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass_for_small_weights() {
        for lambda in DominantWeight::up_to_level(2) {
            for (check, outcome) in verify_lambda(lambda, &Check::ALL, &BuildOptions::default()).unwrap() {
                assert!(outcome.is_ok(), "{check} {lambda}: {outcome:?}");
            }
        }
    }

    #[test]
    fn check_names_parse() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("bogus".parse::<Check>().is_err());
    }

    #[test]
    fn dim_reports_mismatch() {
        let mut graphs = Graphs::build(DominantWeight::new(1, 0).unwrap(), &BuildOptions::default()).unwrap();
        graphs.tensor.nodes.pop();
        assert!(check_dim(&graphs).is_err());
    }
}
