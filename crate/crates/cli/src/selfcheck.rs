//! The oracle-equivalence suite behind `twig selfcheck`.
//!
//! Every fast path is replayed against the brute-force oracles on a corpus
//! of structured and seeded random graphs, with the combinatorial bounds
//! reported as a table. Any mismatch is printed and turns the exit code
//! nonzero.
//!
//! Setting `TWIG_SELFCHECK_INJECT_FAULT=1` deliberately corrupts one
//! computed family per graph before comparison; the suite must then report
//! mismatches. This is the negative control used by the CLI tests.

use anyhow::Result;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::process::ExitCode;
use twig::corpus::{random_graph, structured_suite};
use twig::decomposition::{chordal_clique_number, validate_decomposition, validate_triangulation};
use twig::enumerate::{count_bound, ConnectedSetQuery};
use twig::graph::Graph;
use twig::oracle;
use twig::pmc::{is_nice_pmc, list_pmcs};
use twig::polyspace::{treewidth_polyspace, PolySpaceConfig};
use twig::separators::{list_minimal_separators, list_minimal_separators_bounded};
use twig::set::VertexSet;
use twig::treewidth::{decide_treewidth_at_most, treewidth_exact};

const FAULT_ENV: &str = "TWIG_SELFCHECK_INJECT_FAULT";

#[derive(Default)]
struct Report {
    failures: Vec<String>,
    separators: usize,
    pmcs: usize,
    connected_records: usize,
    /// max of count / C(b+f, b) over all rooted buckets
    binomial_ratio: f64,
    sep_rate: f64,
    pmc_rate: f64,
}

fn inject_fault() -> bool {
    std::env::var_os(FAULT_ENV).is_some_and(|v| v == "1")
}

fn check_graph(g: &Graph) -> Report {
    let mut r = Report::default();
    let n = g.n();
    let fault = inject_fault();

    // Rooted connected-set families, bucketed by (root, |B|-1, |N(B)|),
    // against one subset sweep.
    if (1..=12).contains(&n) {
        let mut got: BTreeMap<(usize, usize, usize), Vec<VertexSet>> = BTreeMap::new();
        for v in 0..n {
            for rec in ConnectedSetQuery::new(g, v).iter() {
                r.connected_records += 1;
                got.entry((v, rec.set.len() - 1, rec.boundary.len()))
                    .or_default()
                    .push(rec.set);
            }
        }
        let mut want: BTreeMap<(usize, usize, usize), Vec<VertexSet>> = BTreeMap::new();
        for mask in 1u32..(1u32 << n) {
            let set = VertexSet::from_members(n, (0..n).filter(|i| mask >> i & 1 == 1));
            if g.is_connected_set(&set) {
                let f = g.neighborhood(&set).len();
                for v in set.iter() {
                    want.entry((v, set.len() - 1, f))
                        .or_default()
                        .push(set.clone());
                }
            }
        }
        for family in got.values_mut().chain(want.values_mut()) {
            family.sort();
        }
        if fault {
            got.values_mut().next().map(|f| f.pop());
        }
        if got != want {
            r.failures
                .push(format!("connected-set families differ on {g:?}"));
        }
        for ((_, b, f), family) in &want {
            let bound = count_bound(*b, *f);
            if BigUint::from(family.len()) > bound {
                r.failures
                    .push(format!("count bound violated at b={b} f={f} on {g:?}"));
            }
            let ratio =
                family.len() as f64 / bound.to_string().parse::<f64>().unwrap_or(f64::INFINITY);
            r.binomial_ratio = r.binomial_ratio.max(ratio);
        }
    }

    // Both separator listers against the subset scan.
    if n <= 12 {
        let want = oracle::oracle_separators(g).expect("within oracle limit");
        let mut got: Vec<VertexSet> = list_minimal_separators(g).sets().cloned().collect();
        if fault {
            got.pop();
        }
        if got != want {
            r.failures
                .push(format!("saturation separator lister differs on {g:?}"));
        }
        let bounded: Vec<VertexSet> = list_minimal_separators_bounded(g, n)
            .sets()
            .cloned()
            .collect();
        if bounded != want {
            r.failures
                .push(format!("bounded separator lister differs on {g:?}"));
        }
        r.separators = want.len();
        if !want.is_empty() && n > 0 {
            r.sep_rate = (want.len() as f64).powf(1.0 / n as f64);
        }
    }

    // Clique listing, certificates, and niceness.
    if n <= 12 {
        let want = oracle::oracle_pmcs(g).expect("within oracle limit");
        let listed = list_pmcs(g, None);
        let mut got: Vec<VertexSet> = listed.iter().map(|p| p.set().clone()).collect();
        if fault {
            got.pop();
        }
        if got != want {
            r.failures.push(format!("clique lister differs on {g:?}"));
        }
        r.pmcs = want.len();
        if !want.is_empty() && n > 0 {
            r.pmc_rate = (want.len() as f64).powf(1.0 / n as f64);
        }
        if n <= 10 {
            for pmc in &listed {
                let want_nice = oracle::oracle_is_nice_pmc(g, pmc.set()).expect("small");
                if is_nice_pmc(g, pmc) != want_nice {
                    r.failures
                        .push(format!("niceness differs on {g:?} at {}", pmc.set()));
                }
            }
        }
    }

    // The three treewidth pipelines.
    if n <= oracle::TREEWIDTH_LIMIT {
        let want = oracle::oracle_treewidth(g).expect("within oracle limit");
        let exact = treewidth_exact(g);
        let mut width = exact.width;
        if fault {
            width += 1;
        }
        if width != want {
            r.failures
                .push(format!("exact treewidth {width} != oracle {want} on {g:?}"));
        }
        if !validate_decomposition(g, &exact.decomposition)
            || exact.decomposition.width() != exact.width
        {
            r.failures.push(format!("invalid decomposition on {g:?}"));
        }
        if !validate_triangulation(g, &exact.triangulation)
            || chordal_clique_number(&exact.triangulation) != Some(exact.width + 1)
        {
            r.failures.push(format!("invalid triangulation on {g:?}"));
        }
        if want > 0 && decide_treewidth_at_most(g, want - 1).is_some() {
            r.failures
                .push(format!("decision accepted k={} on {g:?}", want - 1));
        }
        match decide_treewidth_at_most(g, want) {
            Some(dec) if dec.width == want => {}
            _ => r
                .failures
                .push(format!("decision failed at k={want} on {g:?}")),
        }
        if n <= 10 && treewidth_polyspace(g, PolySpaceConfig::default()) != want {
            r.failures
                .push(format!("polynomial-space width differs on {g:?}"));
        }
    }

    r
}

pub fn run(n_max: usize, trials: usize, seed: u64, threads: usize, json: bool) -> Result<ExitCode> {
    let mut corpus: Vec<Graph> = structured_suite(n_max);
    let structured = corpus.len();
    if n_max >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in 0..trials {
            let n = 2 + i % (n_max - 1);
            let p = rng.gen_range(0.15..0.85);
            corpus.push(random_graph(n, p, &mut rng));
        }
    }

    let reports: Vec<Report> = if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()?;
        pool.install(|| {
            use rayon::prelude::*;
            corpus.par_iter().map(check_graph).collect()
        })
    } else {
        corpus.iter().map(check_graph).collect()
    };

    let mut failures: Vec<&String> = Vec::new();
    let mut separators = 0;
    let mut pmcs = 0;
    let mut records = 0;
    let mut binomial_ratio: f64 = 0.0;
    let mut sep_rate: f64 = 0.0;
    let mut pmc_rate: f64 = 0.0;
    for rep in &reports {
        failures.extend(rep.failures.iter());
        separators += rep.separators;
        pmcs += rep.pmcs;
        records += rep.connected_records;
        binomial_ratio = binomial_ratio.max(rep.binomial_ratio);
        sep_rate = sep_rate.max(rep.sep_rate);
        pmc_rate = pmc_rate.max(rep.pmc_rate);
    }

    // known worst-case growth rates; exceeding them on tiny graphs is a
    // flag, not a failure
    let sep_flag = sep_rate > 1.6181;
    let pmc_flag = pmc_rate > 1.7549;

    if json {
        println!(
            "{}",
            serde_json::json!({
                "command": "selfcheck",
                "graphs": corpus.len(),
                "structured": structured,
                "random": corpus.len() - structured,
                "seed": seed,
                "totals": {
                    "separators": separators,
                    "pmcs": pmcs,
                    "connected_records": records,
                },
                "bounds": {
                    "binomial_ratio": binomial_ratio,
                    "separator_rate": sep_rate,
                    "separator_rate_flagged": sep_flag,
                    "pmc_rate": pmc_rate,
                    "pmc_rate_flagged": pmc_flag,
                },
                "failures": failures,
            })
        );
    } else {
        println!(
            "checked {} graphs ({} structured, {} random, seed {seed})",
            corpus.len(),
            structured,
            corpus.len() - structured
        );
        println!(
            "family totals: {separators} separators, {pmcs} cliques, {records} connected records"
        );
        println!("bound checks:");
        println!("  rooted count / C(b+f,b) : max {binomial_ratio:.4} (must stay <= 1)");
        println!(
            "  |separators|^(1/n)      : max {sep_rate:.4}{}",
            if sep_flag {
                "  ** above 1.6181 **"
            } else {
                " (guide 1.6181)"
            }
        );
        println!(
            "  |cliques|^(1/n)         : max {pmc_rate:.4}{}",
            if pmc_flag {
                "  ** above 1.7549 **"
            } else {
                " (guide 1.7549)"
            }
        );
        for f in &failures {
            println!("MISMATCH: {f}");
        }
        if failures.is_empty() {
            println!("all checks passed");
        } else {
            println!("{} mismatches", failures.len());
        }
    }

    Ok(if failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
