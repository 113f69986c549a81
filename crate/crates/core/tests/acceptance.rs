//! Acceptance criteria. Runs every criterion, prints one PASS/FAIL line
//! each, and exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use g2crystal::graph::{build_graph, closure_check, isomorphic, maximal_nodes, BuildOptions, MonomialSuite, TensorSuite};
use g2crystal::highest_weight::{
    enumerate_n_lambda, highest_elements, in_n_lambda, in_t_lambda_set, monomial_of_u, omega, omega_inv,
};
use g2crystal::tableau::{self, signature};
use g2crystal::verify::{binf_graphs, check_omega, Graphs};
use g2crystal::{simple_root, weyl_dim, BoxCounts, DominantWeight, Index, Letter, MlTableau, Monomial, TensorElement, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// Dominant weights with λ(h₁) + λ(h₂) <= 4.
fn lambdas() -> Vec<DominantWeight> {
    DominantWeight::up_to_level(4)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cardinality() -> Outcome {
    const BUDGET: Duration = Duration::from_secs(5);
    let start = Instant::now();
    let ws = lambdas();
    ensure(ws.len() == 15, || format!("{} weights instead of 15", ws.len()))?;
    let opts = BuildOptions::default();
    let mut largest = 0;
    for lambda in ws {
        let (n, x) = highest_elements(lambda);
        let enumerated = enumerate_n_lambda(lambda).len();
        let bfs_n = build_graph(&MonomialSuite::default(), n, &opts).map_err(|e| e.to_string())?.len();
        let bfs_t = build_graph(&TensorSuite, x, &opts).map_err(|e| e.to_string())?.len();
        let dim = weyl_dim(lambda) as usize;
        ensure(enumerated == dim && bfs_n == dim && bfs_t == dim, || {
            format!("{lambda}: enumerate {enumerated}, BFS(N) {bfs_n}, BFS(T) {bfs_t}, weyl_dim {dim}")
        })?;
        largest = largest.max(dim);
    }
    let elapsed = start.elapsed();
    ensure(elapsed < BUDGET, || format!("took {elapsed:?}, budget {BUDGET:?}"))?;
    Ok(format!("15 weights agree (largest {largest}) in {elapsed:.2?}"))
}

fn spot_counts() -> Outcome {
    for ((a, b), expected) in [((1, 0), 7), ((0, 1), 14), ((1, 1), 64)] {
        let lambda = DominantWeight::new(a, b).unwrap();
        let (n, x) = highest_elements(lambda);
        let dim = weyl_dim(lambda);
        let bfs_n = build_graph(&MonomialSuite::default(), n, &BuildOptions::default()).unwrap().len() as u128;
        let bfs_t = build_graph(&TensorSuite, x, &BuildOptions::default()).unwrap().len() as u128;
        ensure(dim == expected && bfs_n == expected && bfs_t == expected, || {
            format!("{lambda}: weyl_dim {dim}, BFS {bfs_n}/{bfs_t}, expected {expected}")
        })?;
    }
    Ok("7, 14, 64".into())
}

fn monomial_closure() -> Outcome {
    let mut nodes = 0;
    for lambda in lambdas() {
        let g = Graphs::build(lambda, &BuildOptions::default()).map_err(|e| e.to_string())?;
        let report = closure_check(&MonomialSuite::default(), &g.monomial, |n| in_n_lambda(n, lambda).is_some());
        ensure(report.is_clean(), || format!("{lambda}: {:?}", report.violations.first()))?;
        // Every enumerated element, not only those reached, is checked too.
        for u in enumerate_n_lambda(lambda) {
            let n = monomial_of_u(&u, lambda).unwrap();
            for i in Index::ALL {
                for y in [n.f(i), n.e(i)].into_iter().flatten() {
                    ensure(in_n_lambda(&y, lambda).is_some(), || format!("{lambda}: {n} -> {y} leaves N(λ)"))?;
                }
            }
            let maximal = Index::ALL.iter().all(|&i| n.e(i).is_none());
            ensure(maximal == (u == Default::default()), || format!("{lambda}: {n} maximal={maximal}"))?;
        }
        let top = maximal_nodes(&MonomialSuite::default(), &g.monomial);
        ensure(top == [0], || format!("{lambda}: maximal nodes {top:?}"))?;
        nodes += report.nodes_checked;
    }
    Ok(format!("{nodes} monomials, zero violations, unique maximal element"))
}

fn tableau_closure() -> Outcome {
    let mut nodes = 0;
    for lambda in lambdas() {
        let g = Graphs::build(lambda, &BuildOptions::default()).map_err(|e| e.to_string())?;
        let report = closure_check(&TensorSuite, &g.tensor, |x| in_t_lambda_set(x.tableau(), lambda));
        ensure(report.is_clean(), || format!("{lambda}: {:?}", report.violations.first()))?;
        nodes += report.nodes_checked;
    }
    Ok(format!("{nodes} tensor elements, zero violations"))
}

fn main_theorem() -> Outcome {
    let mut pairs = 0;
    for lambda in lambdas() {
        let g = Graphs::build(lambda, &BuildOptions::default()).map_err(|e| e.to_string())?;
        let iso = isomorphic(&g.monomial, &g.tensor);
        let g2crystal::graph::Isomorphism::Isomorphic { bijection } = iso else {
            return Err(format!("{lambda}: {iso:?}"));
        };
        for (v, &w) in bijection.iter().enumerate() {
            ensure(g.monomial.nodes[v].weight == g.tensor.nodes[w].weight, || format!("{lambda}: weight mismatch at {v}"))?;
            let image = omega(&g.monomial.nodes[v].element, lambda).map_err(|e| e.to_string())?;
            ensure(image == g.tensor.nodes[w].element, || format!("{lambda}: bijection is not omega at {image}"))?;
        }
        check_omega(&g).map_err(|e| format!("{lambda}: {e}"))?;
        pairs += bijection.len();
    }
    Ok(format!("15 isomorphisms, omega intertwines on {pairs} elements"))
}

fn paper_figures() -> Outcome {
    let t = tableau::highest();
    let f2 = t.f(Index::Two);
    ensure(f2.to_string() == "1,1,1/2,3", || format!("f2(T_inf) = {f2}"))?;
    let f1f2 = f2.f(Index::One);
    ensure(f1f2.to_string() == "1,1,1,2/2,3", || format!("f1 f2(T_inf) = {f1f2}"))?;
    let example: MlTableau = "1,1,1,3,0,-3,-1/2,3".parse().map_err(|e| format!("{e}"))?;
    use Letter::*;
    let expected = [Bar1, Bar3, Zero, Three, One, One, Three, One, Two];
    ensure(example.reading() == expected, || format!("reading {:?}", example.reading()))?;
    Ok("f2, f1f2 and the far-eastern reading match".into())
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> Vec<Index> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| if rng.gen_bool(0.5) { Index::One } else { Index::Two }).collect()
}

fn crystal_axioms() -> Outcome {
    const PER_REALIZATION: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(0x6_2c4);
    let mut checked = 0;

    // Arbitrary Laurent monomials.
    for _ in 0..PER_REALIZATION {
        let factors = (0..rng.gen_range(0..8)).map(|_| {
            let i = if rng.gen_bool(0.5) { Index::One } else { Index::Two };
            (i, rng.gen_range(-3..7), rng.gen_range(-4..5))
        });
        let n = Monomial::from_factors(factors.collect::<Vec<_>>());
        for i in Index::ALL {
            let d = n.string_data(i);
            ensure(d.phi - d.eps == n.weight().pairing(i), || format!("phi-eps on {n}"))?;
            if let Some(y) = n.f(i) {
                ensure(y.e(i).as_ref() == Some(&n), || format!("e{i} f{i} on {n}"))?;
                ensure(y.weight() == n.weight() - simple_root(i), || format!("wt f{i} on {n}"))?;
            }
            if let Some(y) = n.e(i) {
                ensure(y.f(i).as_ref() == Some(&n), || format!("f{i} e{i} on {n}"))?;
            }
        }
        checked += 1;
    }

    // Tableaux of T(∞) reached by random words, and box-count round trips.
    for _ in 0..PER_REALIZATION {
        let mut t = tableau::highest();
        for i in random_word(&mut rng, 24) {
            t = t.f(i);
        }
        for i in Index::ALL {
            ensure(t.phi(i) - t.eps(i) == t.weight().pairing(i), || format!("phi-eps on {t}"))?;
            let sig = signature(&t.reading(), i);
            ensure(sig.phi_raw - sig.eps == t.box_weight().pairing(i), || format!("signature on {t}"))?;
            let ft = t.f(i);
            ensure(ft.e(i).as_ref() == Some(&t), || format!("e{i} f{i} on {t}"))?;
            ensure(ft.weight() == t.weight() - simple_root(i), || format!("wt f{i} on {t}"))?;
            if let Some(et) = t.e(i) {
                ensure(et.f(i) == t, || format!("f{i} e{i} on {t}"))?;
            }
        }
        let counts: BoxCounts = t.counts();
        let rebuilt = MlTableau::from_counts(counts).map_err(|e| e.to_string())?;
        ensure(rebuilt == t, || format!("from_counts(counts({t})) = {rebuilt}"))?;
        checked += 1;
    }

    // Elements of T(∞)_λ and N(λ) for random dominant λ.
    let cache: BTreeMap<DominantWeight, Vec<_>> =
        DominantWeight::up_to_level(6).into_iter().map(|l| (l, enumerate_n_lambda(l))).collect();
    let keys: Vec<_> = cache.keys().copied().collect();
    for _ in 0..PER_REALIZATION {
        let lambda = keys[rng.gen_range(0..keys.len())];
        let us = &cache[&lambda];
        let u = us[rng.gen_range(0..us.len())];
        let n = monomial_of_u(&u, lambda).map_err(|e| e.to_string())?;
        let x: TensorElement = omega(&n, lambda).map_err(|e| e.to_string())?;
        ensure(omega_inv(&x).as_ref() == Ok(&n), || format!("omega round trip on {n}"))?;
        ensure(BoxCounts::from(u) == x.tableau().counts(), || format!("counts of {x}"))?;
        ensure(x.weight() == n.weight(), || format!("weights of {n} and {x}"))?;
        for i in Index::ALL {
            ensure(x.phi(i) - x.eps(i) == x.weight().pairing(i), || format!("phi-eps on {x}"))?;
            ensure(x.phi(i) == n.phi(i) && x.eps(i) == n.eps(i), || format!("string data of {n} vs {x}"))?;
            if let Some(y) = x.f(i) {
                ensure(y.e(i).as_ref() == Some(&x), || format!("e{i} f{i} on {x}"))?;
                ensure(y.weight() == x.weight() - simple_root(i), || format!("wt f{i} on {x}"))?;
                ensure(n.f(i).map(|m| omega(&m, lambda).ok()) == Some(Some(y.clone())), || format!("omega f{i} on {n}"))?;
            } else {
                ensure(n.f(i).is_none(), || format!("f{i} zero on {x} but not on {n}"))?;
            }
            if let Some(y) = x.e(i) {
                ensure(y.f(i).as_ref() == Some(&x), || format!("f{i} e{i} on {x}"))?;
            }
        }
        checked += 1;
    }
    Ok(format!("{checked} random elements"))
}

/// Number of multisets of positive roots of G₂ summing to `c1·α₁ + c2·α₂`.
fn kostant(c1: usize, c2: usize) -> usize {
    const ROOTS: [(usize, usize); 6] = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)];
    let mut table = vec![vec![0usize; c2 + 1]; c1 + 1];
    table[0][0] = 1;
    for (r1, r2) in ROOTS {
        for a in r1..=c1 {
            for b in r2..=c2 {
                table[a][b] += table[a - r1][b - r2];
            }
        }
    }
    table[c1][c2]
}

fn binf_differential() -> Outcome {
    const DEPTH: usize = 6;
    const BUDGET: Duration = Duration::from_secs(10);
    let start = Instant::now();
    let (tableaux, monomials) = binf_graphs(DEPTH, 1).map_err(|e| e.to_string())?;
    let iso = isomorphic(&tableaux, &monomials);
    ensure(iso.is_isomorphic(), || format!("{iso:?}"))?;
    // Independent count: weight multiplicities of B(∞) are Kostant partition numbers.
    let mut expected = 0;
    for d in 0..=DEPTH {
        for c1 in 0..=d {
            let c2 = d - c1;
            let w = Weight::ZERO - (c1 as i64) * simple_root(Index::One) - (c2 as i64) * simple_root(Index::Two);
            let found = tableaux.nodes.iter().filter(|n| n.weight == w).count();
            let p = kostant(c1, c2);
            ensure(found == p, || format!("weight {w}: {found} tableaux, Kostant number {p}"))?;
            expected += p;
        }
    }
    ensure(tableaux.len() == expected, || format!("{} nodes, expected {expected}", tableaux.len()))?;
    let elapsed = start.elapsed();
    ensure(elapsed < BUDGET, || format!("took {elapsed:?}, budget {BUDGET:?}"))?;
    Ok(format!("{} nodes to depth {DEPTH}, isomorphic, in {elapsed:.2?}", tableaux.len()))
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn determinism() -> Outcome {
    let cases: [(&str, &[&str]); 4] = [
        ("monomial_1_1.json", &["--lambda", "1,1", "--realization", "monomial", "--output", "json"]),
        ("tensor_1_1.dot", &["--lambda", "1,1", "--realization", "tensor", "--output", "dot"]),
        ("tensor_0_1.json", &["--lambda", "0,1", "--realization", "tensor", "--output", "json"]),
        ("binf_depth3.json", &["--realization", "binf", "--max-depth", "3", "--output", "json"]),
    ];
    let mut runs = 0;
    for (file, args) in cases {
        let expected = std::fs::read(golden(file)).map_err(|e| format!("{file}: {e}"))?;
        for workers in ["1", "1", "2", "4"] {
            let output = Command::new(env!("CARGO_BIN_EXE_g2crystal"))
                .arg("graph")
                .args(args)
                .args(["--workers", workers])
                .output()
                .map_err(|e| e.to_string())?;
            ensure(output.status.success(), || format!("{file}: exit {:?}", output.status))?;
            ensure(output.stdout == expected, || format!("{file} differs with {workers} workers"))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} runs byte-identical to golden files"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("cardinality", cardinality),
        ("spot counts", spot_counts),
        ("N(lambda) closure", monomial_closure),
        ("T(inf)_lambda closure", tableau_closure),
        ("isomorphism and intertwining", main_theorem),
        ("figures", paper_figures),
        ("crystal axioms", crystal_axioms),
        ("B(inf) differential", binf_differential),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", k + 1),
            Err(reason) => {
                failures += 1;
                println!("FAIL {}. {name}: {reason}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
