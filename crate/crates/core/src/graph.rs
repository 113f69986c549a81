//! Crystal graphs by breadth-first closure under `f̃₁`, `f̃₂`, and the
//! forced-matching isomorphism test for rooted edge-labeled graphs.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use rayon::prelude::*;

use crate::cartan::{simple_root, Index, Weight};
use crate::error::{Error, Result};
use crate::highest_weight::TensorElement;
use crate::monomial::Monomial;
use crate::tableau::MlTableau;

/// One realization's operators and statistics.
pub trait CrystalSuite: Sync {
    type Element: Clone + Eq + Hash + Send + Sync;

    fn f(&self, x: &Self::Element, i: Index) -> Option<Self::Element>;
    fn e(&self, x: &Self::Element, i: Index) -> Option<Self::Element>;
    fn weight(&self, x: &Self::Element) -> Weight;
    fn render(&self, x: &Self::Element) -> String;
}

/// Nakajima monomials. `weight_shift` is added to every reported weight.
#[derive(Debug, Clone, Copy, Default)]
pub struct MonomialSuite {
    pub weight_shift: Weight,
}

impl CrystalSuite for MonomialSuite {
    type Element = Monomial;

    fn f(&self, x: &Monomial, i: Index) -> Option<Monomial> {
        x.f(i)
    }
    fn e(&self, x: &Monomial, i: Index) -> Option<Monomial> {
        x.e(i)
    }
    fn weight(&self, x: &Monomial) -> Weight {
        x.weight() + self.weight_shift
    }
    fn render(&self, x: &Monomial) -> String {
        x.to_string()
    }
}

/// `T(∞) ⊗ T_λ`.
#[derive(Debug, Clone, Copy, Default)]
pub struct TensorSuite;

impl CrystalSuite for TensorSuite {
    type Element = TensorElement;

    fn f(&self, x: &TensorElement, i: Index) -> Option<TensorElement> {
        x.f(i)
    }
    fn e(&self, x: &TensorElement, i: Index) -> Option<TensorElement> {
        x.e(i)
    }
    fn weight(&self, x: &TensorElement) -> Weight {
        x.weight()
    }
    fn render(&self, x: &TensorElement) -> String {
        x.to_string()
    }
}

/// The raw crystal T(∞) of marginally large tableaux.
#[derive(Debug, Clone, Copy, Default)]
pub struct InfinitySuite;

impl CrystalSuite for InfinitySuite {
    type Element = MlTableau;

    fn f(&self, x: &MlTableau, i: Index) -> Option<MlTableau> {
        Some(x.f(i))
    }
    fn e(&self, x: &MlTableau, i: Index) -> Option<MlTableau> {
        x.e(i)
    }
    fn weight(&self, x: &MlTableau) -> Weight {
        x.weight()
    }
    fn render(&self, x: &MlTableau) -> String {
        x.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node<E> {
    pub id: usize,
    pub element: E,
    pub repr: String,
    pub weight: Weight,
    pub depth: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: Index,
}

/// A rooted graph of `f̃_i` arrows. Node 0 is the root and ids follow BFS
/// discovery order (frontier by id, label 1 before label 2).
#[derive(Debug, Clone)]
pub struct CrystalGraph<E> {
    pub nodes: Vec<Node<E>>,
    pub edges: Vec<Edge>,
    index: HashMap<E, usize>,
    /// `succ[v][label]`, indexed by `label.number() - 1`.
    succ: Vec<[Option<usize>; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    pub max_nodes: usize,
    /// Nodes at this depth are kept but not expanded.
    pub max_depth: Option<usize>,
    /// Worker threads for frontier expansion; output does not depend on it.
    pub workers: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_nodes: 1_000_000,
            max_depth: None,
            workers: 1,
        }
    }
}

impl BuildOptions {
    pub fn with_max_depth(depth: usize) -> Self {
        BuildOptions {
            max_depth: Some(depth),
            ..Self::default()
        }
    }
}

fn slot(i: Index) -> usize {
    usize::from(i.number() - 1)
}

impl<E: Clone + Eq + Hash> CrystalGraph<E> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> &Node<E> {
        &self.nodes[0]
    }

    pub fn successor(&self, v: usize, i: Index) -> Option<usize> {
        self.succ[v][slot(i)]
    }

    pub fn id_of(&self, x: &E) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// Largest node depth.
    pub fn depth(&self) -> usize {
        self.nodes.last().map_or(0, |n| n.depth)
    }
}

/// Breadth-first closure of `root` under `f̃₁`, `f̃₂`, deduplicating by
/// structural equality.
pub fn build_graph<S: CrystalSuite>(
    suite: &S,
    root: S::Element,
    opts: &BuildOptions,
) -> Result<CrystalGraph<S::Element>> {
    let pool = if opts.workers > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.workers)
                .build()
                .expect("thread pool"),
        )
    } else {
        None
    };

    let mut graph = CrystalGraph {
        nodes: Vec::new(),
        edges: Vec::new(),
        index: HashMap::new(),
        succ: Vec::new(),
    };
    let push = |graph: &mut CrystalGraph<S::Element>, x: S::Element, depth: usize| -> Result<usize> {
        if graph.nodes.len() >= opts.max_nodes {
            return Err(Error::NodeBudgetExceeded {
                limit: opts.max_nodes,
                discovered: graph.nodes.len(),
            });
        }
        let id = graph.nodes.len();
        graph.nodes.push(Node {
            id,
            repr: suite.render(&x),
            weight: suite.weight(&x),
            element: x.clone(),
            depth,
        });
        graph.index.insert(x, id);
        graph.succ.push([None, None]);
        Ok(id)
    };

    push(&mut graph, root, 0)?;
    let mut frontier = 0..1;
    let mut depth = 0;
    while !frontier.is_empty() && opts.max_depth.is_none_or(|d| depth < d) {
        let expand = |v: usize| -> [Option<S::Element>; 2] {
            let x = &graph.nodes[v].element;
            Index::ALL.map(|i| suite.f(x, i))
        };
        let images: Vec<[Option<S::Element>; 2]> = match &pool {
            Some(pool) => pool.install(|| frontier.clone().into_par_iter().map(expand).collect()),
            None => frontier.clone().map(expand).collect(),
        };
        let next_start = graph.nodes.len();
        for (v, row) in frontier.clone().zip(images) {
            for (i, image) in Index::ALL.into_iter().zip(row) {
                let Some(y) = image else { continue };
                let to = match graph.index.get(&y) {
                    Some(&id) => id,
                    None => push(&mut graph, y, depth + 1)?,
                };
                graph.succ[v][slot(i)] = Some(to);
                graph.edges.push(Edge { from: v, to, label: i });
            }
        }
        frontier = next_start..graph.nodes.len();
        depth += 1;
    }
    Ok(graph)
}

/// Outcome of [`isomorphic`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Isomorphism {
    /// `bijection[v]` is the image in the second graph of node `v` of the first.
    Isomorphic { bijection: Vec<usize> },
    Mismatch { reason: String },
}

impl Isomorphism {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, Isomorphism::Isomorphic { .. })
    }
}

/// Synchronized BFS from both roots. Each node has at most one successor
/// per label, so the matching is forced; weights must agree under it.
pub fn isomorphic<A, B>(g1: &CrystalGraph<A>, g2: &CrystalGraph<B>) -> Isomorphism
where
    A: Clone + Eq + Hash,
    B: Clone + Eq + Hash,
{
    let mismatch = |reason: String| Isomorphism::Mismatch { reason };
    if g1.len() != g2.len() {
        return mismatch(format!("node counts differ: {} vs {}", g1.len(), g2.len()));
    }
    if g1.edges.len() != g2.edges.len() {
        return mismatch(format!("edge counts differ: {} vs {}", g1.edges.len(), g2.edges.len()));
    }
    if g1.is_empty() {
        return Isomorphism::Isomorphic { bijection: Vec::new() };
    }
    let mut forward = vec![None; g1.len()];
    let mut backward = vec![None; g2.len()];
    forward[0] = Some(0);
    backward[0] = Some(0);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        let v = forward[u].expect("queued nodes are matched");
        if g1.nodes[u].weight != g2.nodes[v].weight {
            return mismatch(format!(
                "weights differ at {} ({}) vs {} ({})",
                g1.nodes[u].repr, g1.nodes[u].weight, g2.nodes[v].repr, g2.nodes[v].weight
            ));
        }
        for i in Index::ALL {
            match (g1.successor(u, i), g2.successor(v, i)) {
                (None, None) => {}
                (Some(a), Some(b)) => match (forward[a], backward[b]) {
                    (None, None) => {
                        forward[a] = Some(b);
                        backward[b] = Some(a);
                        queue.push_back(a);
                    }
                    (Some(x), Some(y)) if x == b && y == a => {}
                    _ => {
                        return mismatch(format!(
                            "f{i} from {} leads to {} but from {} to {}, which are matched elsewhere",
                            g1.nodes[u].repr, g1.nodes[a].repr, g2.nodes[v].repr, g2.nodes[b].repr
                        ))
                    }
                },
                (s1, s2) => {
                    return mismatch(format!(
                        "f{i} is {} on {} but {} on {}",
                        if s1.is_some() { "defined" } else { "zero" },
                        g1.nodes[u].repr,
                        if s2.is_some() { "defined" } else { "zero" },
                        g2.nodes[v].repr
                    ))
                }
            }
        }
    }
    match forward.iter().position(Option::is_none) {
        Some(u) => mismatch(format!("{} is not reachable in step with the second graph", g1.nodes[u].repr)),
        None => Isomorphism::Isomorphic {
            bijection: forward.into_iter().map(|v| v.expect("all matched")).collect(),
        },
    }
}

/// Tally of node weights.
pub fn weight_multiplicities<E>(g: &CrystalGraph<E>) -> BTreeMap<Weight, usize> {
    let mut out = BTreeMap::new();
    for n in &g.nodes {
        *out.entry(n.weight).or_insert(0) += 1;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub node: String,
    pub operator: String,
    pub result: String,
    pub problem: &'static str,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClosureReport {
    pub nodes_checked: usize,
    pub nonzero_results: usize,
    pub violations: Vec<Violation>,
}

impl ClosureReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Applies every `f̃_i` and `ẽ_i` to every node and checks that nonzero
/// results satisfy `member` and are already nodes of `g`.
pub fn closure_check<S, P>(suite: &S, g: &CrystalGraph<S::Element>, member: P) -> ClosureReport
where
    S: CrystalSuite,
    P: Fn(&S::Element) -> bool,
{
    let mut report = ClosureReport::default();
    for node in &g.nodes {
        report.nodes_checked += 1;
        for i in Index::ALL {
            for (name, result) in [("f", suite.f(&node.element, i)), ("e", suite.e(&node.element, i))] {
                let Some(y) = result else { continue };
                report.nonzero_results += 1;
                let problem = if !member(&y) {
                    Some("result fails the membership predicate")
                } else if g.id_of(&y).is_none() {
                    Some("result is not a node of the graph")
                } else {
                    None
                };
                if let Some(problem) = problem {
                    report.violations.push(Violation {
                        node: node.repr.clone(),
                        operator: format!("{name}{i}"),
                        result: suite.render(&y),
                        problem,
                    });
                }
            }
        }
    }
    report
}

/// Nodes killed by both `ẽ₁` and `ẽ₂`.
pub fn maximal_nodes<S: CrystalSuite>(suite: &S, g: &CrystalGraph<S::Element>) -> Vec<usize> {
    g.nodes
        .iter()
        .filter(|n| Index::ALL.iter().all(|&i| suite.e(&n.element, i).is_none()))
        .map(|n| n.id)
        .collect()
}

/// Checks every edge: `ẽ_i` undoes it and the weight drops by `α_i`; and
/// every non-root node has an incoming edge. Returns the first failure.
pub fn edge_check<S: CrystalSuite>(suite: &S, g: &CrystalGraph<S::Element>) -> std::result::Result<(), String> {
    let mut has_parent = vec![false; g.len()];
    for edge in &g.edges {
        let (from, to) = (&g.nodes[edge.from], &g.nodes[edge.to]);
        has_parent[edge.to] = true;
        if suite.e(&to.element, edge.label).as_ref() != Some(&from.element) {
            return Err(format!("e{} of {} is not {}", edge.label, to.repr, from.repr));
        }
        if to.weight != from.weight - simple_root(edge.label) {
            return Err(format!("f{} from {} does not lower the weight by a simple root", edge.label, from.repr));
        }
    }
    match has_parent.iter().skip(1).position(|&p| !p) {
        Some(k) => Err(format!("{} has no incoming edge", g.nodes[k + 1].repr)),
        None => Ok(()),
    }
}
