//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any hard criterion fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;

use rand::rngs::StdRng;
use rand::SeedableRng;

use common::*;
use hubmatch::graphlet::reassemble;
use hubmatch::ordering::enumerate_mhc_orderings;
use hubmatch::random::{erdos_renyi, random_full_ordering};
use hubmatch::{
    brute_force_match, enumerate_minimum_hub_covers, graphlet_of, parse_edge_list,
    parse_graphlet_xml, to_edge_list, to_graphlet_xml, to_graphlets, Binding, Counter,
    CoverOptions, Execution, Graph, Matcher, OracleLimits, SearchOptions, SearchStats, UnifyMode,
};

/// Reference explored counts for the 24 orderings of the minimum hub covers.
const EXPLORED: [(&str, u64); 24] = [
    ("3,5,8", 189),
    ("3,8,5", 189),
    ("7,6,1", 207),
    ("7,6,2", 207),
    ("7,6,3", 207),
    ("8,5,3", 211),
    ("5,8,3", 211),
    ("1,6,7", 233),
    ("2,6,7", 233),
    ("3,6,7", 245),
    ("8,3,5", 279),
    ("5,3,8", 279),
    ("6,7,1", 297),
    ("6,7,2", 297),
    ("6,7,3", 297),
    ("6,1,7", 425),
    ("6,2,7", 425),
    ("6,3,7", 425),
    ("3,7,6", 1081),
    ("7,3,6", 1171),
    ("1,7,6", 2029),
    ("2,7,6", 2029),
    ("7,1,6", 2131),
    ("7,2,6", 2131),
];

const FULL_BEST: (&str, u64) = ("3,5,8,6,1,2,4,7", 309);
const FULL_WORST: (&str, u64) = ("5,2,7,1,8,4,6,3", 8815);

const SYMMETRIC: [(&str, &str); 6] = [
    ("3,5,8", "3,8,5"),
    ("1,6,7", "2,6,7"),
    ("6,7,1", "6,7,2"),
    ("6,1,7", "6,2,7"),
    ("1,7,6", "2,7,6"),
    ("7,1,6", "7,2,6"),
];

const MODES: [UnifyMode; 2] = [UnifyMode::Strict, UnifyMode::Lax];
const COUNTERS: [Counter; 4] = [
    Counter::UnifyCalls,
    Counter::PartialGenerated,
    Counter::ValidPartial,
    Counter::RecursiveCalls,
];

struct Suite {
    failures: usize,
    /// Embedding defects seen anywhere, for criterion 10.
    defects: Vec<String>,
    checked: usize,
}

impl Suite {
    fn report(&mut self, id: &str, pass: bool, detail: impl AsRef<str>) {
        println!(
            "{} {id:<4} {}",
            if pass { "PASS" } else { "FAIL" },
            detail.as_ref()
        );
        if !pass {
            self.failures += 1;
        }
    }

    fn inspect(&mut self, data: &Graph, query: &Graph, solutions: &[Binding]) {
        for b in solutions {
            self.checked += 1;
            self.defects.extend(embedding_defects(data, query, b));
        }
    }
}

fn options(mode: UnifyMode) -> SearchOptions {
    SearchOptions {
        mode,
        execution: Execution::Sequential,
        ..Default::default()
    }
}

fn solution_count(s: &mut Suite) {
    let (d, q) = (data(), query());
    let m = Matcher::new(&d, &q).unwrap();
    let mut orderings: Vec<&str> = EXPLORED.iter().map(|(o, _)| *o).collect();
    orderings.extend([FULL_BEST.0, FULL_WORST.0]);
    let mut wrong = Vec::new();
    for o in &orderings {
        let r = m.run(&ord(o), &options(UnifyMode::Strict)).unwrap();
        s.inspect(&d, &q, &r.solutions);
        if r.solutions.len() != 24 {
            wrong.push(format!("({o}) -> {}", r.solutions.len()));
        }
    }
    let detail = if wrong.is_empty() {
        format!("24 solutions for each of {} orderings", orderings.len())
    } else {
        format!("wrong counts: {}", wrong.join(", "))
    };
    s.report("1", wrong.is_empty(), detail);
}

fn known_solutions(s: &mut Suite) {
    let (d, q) = (data(), query());
    let r = Matcher::new(&d, &q)
        .unwrap()
        .run(&ord("3,6,7"), &options(UnifyMode::Strict))
        .unwrap();
    let wanted = [
        [
            ("1", "m"),
            ("2", "l"),
            ("3", "k"),
            ("4", "a"),
            ("5", "c"),
            ("6", "j"),
            ("7", "d"),
            ("8", "e"),
        ],
        [
            ("1", "l"),
            ("2", "m"),
            ("3", "k"),
            ("4", "a"),
            ("5", "c"),
            ("6", "j"),
            ("7", "d"),
            ("8", "e"),
        ],
    ];
    let missing: Vec<String> = wanted
        .iter()
        .map(|w| Binding::from_pairs(w.iter().copied()).unwrap())
        .filter(|b| !r.solutions.contains(b))
        .map(|b| format!("{b:?}"))
        .collect();
    let detail = if missing.is_empty() {
        "both reference solutions present".to_string()
    } else {
        format!("missing {}", missing.join(", "))
    };
    s.report("2", missing.is_empty(), detail);
}

fn cover_enumeration(s: &mut Suite) {
    let covers = enumerate_minimum_hub_covers(&query(), &CoverOptions::default()).unwrap();
    let got: Vec<String> = covers.iter().map(|c| c.to_string()).collect();
    let pass = got == ["{1,6,7}", "{2,6,7}", "{3,5,8}", "{3,6,7}"];
    s.report("3", pass, format!("covers {}", got.join(" ")));
}

fn metrics_table(s: &mut Suite) {
    let q = query();
    let reference = [
        (1, 0),
        (1, 0),
        (2, 0),
        (1, 0),
        (1, 0),
        (1, 2),
        (0, 2),
        (0, 2),
    ];
    let computed: Vec<(usize, usize)> = (1..=8)
        .map(|v| {
            let m = graphlet_of(&q, &v.to_string()).unwrap().metrics();
            (m.boundary_count, m.free_neighbor_count)
        })
        .collect();
    let mut mismatched = Vec::new();
    for v in [1, 2, 3, 4, 6, 7] {
        if computed[v - 1] != reference[v - 1] {
            mismatched.push(v);
        }
    }
    let symmetric = computed[4] == (0, 2) && computed[7] == (0, 2);
    let pass = mismatched.is_empty() && symmetric;
    let detail = format!(
        "rows 1-4,6,7 match{}; 5 and 8 compute to {:?} and {:?}; expected deviation: row 5 of the reference table reads {:?}",
        if mismatched.is_empty() { String::new() } else { format!(" except {mismatched:?}") },
        computed[4],
        computed[7],
        reference[4],
    );
    s.report("4", pass, detail);
}

fn calibration(s: &mut Suite) {
    let (d, q) = (data(), query());
    let m = Matcher::new(&d, &q).unwrap();
    let covers = enumerate_minimum_hub_covers(&q, &CoverOptions::default()).unwrap();
    let orderings = enumerate_mhc_orderings(&covers);
    assert_eq!(orderings.len(), 24);

    let mut stats: BTreeMap<(usize, String), SearchStats> = BTreeMap::new();
    for (mi, mode) in MODES.iter().enumerate() {
        for o in &orderings {
            let r = m.run(o, &options(*mode)).unwrap();
            s.inspect(&d, &q, &r.solutions);
            stats.insert((mi, o.joined()), r.stats);
        }
    }
    let get = |mi: usize, o: &str, c: Counter| c.get(&stats[&(mi, o.to_string())]);

    let mut asymmetric = Vec::new();
    for (mi, mode) in MODES.iter().enumerate() {
        for (a, b) in SYMMETRIC {
            for c in Counter::ALL {
                if get(mi, a, c) != get(mi, b, c) {
                    asymmetric.push(format!("{mode:?} {} ({a}) vs ({b})", c.name()));
                }
            }
        }
    }
    let detail = if asymmetric.is_empty() {
        "six symmetric pairs agree under every counter in both modes".to_string()
    } else {
        format!("asymmetric: {}", asymmetric.join("; "))
    };
    s.report("5a", asymmetric.is_empty(), detail);

    let mut minimal = Vec::new();
    for (mi, mode) in MODES.iter().enumerate() {
        for c in COUNTERS {
            let best = orderings
                .iter()
                .map(|o| get(mi, &o.joined(), c))
                .min()
                .unwrap();
            if get(mi, "3,5,8", c) == best {
                minimal.push(format!("{mode:?}/{}", c.name()));
            }
        }
    }
    s.report(
        "5b",
        !minimal.is_empty(),
        format!("(3,5,8) minimal under {}", minimal.join(", ")),
    );

    // Soft: never counted as a failure.
    let mut exact = Vec::new();
    for (mi, mode) in MODES.iter().enumerate() {
        for c in COUNTERS {
            if EXPLORED.iter().all(|(o, n)| get(mi, o, c) == *n) {
                exact.push(format!("{mode:?}/{}", c.name()));
            }
        }
    }
    let full: Vec<String> = [FULL_BEST, FULL_WORST]
        .iter()
        .map(|(o, reference)| {
            let r = m.run(&ord(o), &options(UnifyMode::Strict)).unwrap();
            format!("({o}) {} vs {reference}", r.stats.recursive_calls)
        })
        .collect();
    let verdict = if exact.is_empty() { "SOFT" } else { "PASS" };
    println!(
        "{verdict} 5c   exact column reproduced by: {}; full orderings under recursiveCalls: {}",
        if exact.is_empty() {
            "none".to_string()
        } else {
            exact.join(", ")
        },
        full.join(", ")
    );
}

/// Criterion 6. Returns the seeds failing the mode comparison of criterion 8.
fn oracle_equivalence(s: &mut Suite) -> Vec<u64> {
    let mut mismatched = Vec::new();
    let mut mode_mismatch = Vec::new();
    let mut total = 0;
    for seed in 0..200 {
        let (d, q) = instance(seed);
        let expected = brute_force_match(&d, &q, &OracleLimits::default()).unwrap();
        let m = Matcher::new(&d, &q).unwrap();
        let o = auto_ordering(&q);
        let strict = m.run(&o, &options(UnifyMode::Strict)).unwrap();
        let lax = m.run(&o, &options(UnifyMode::Lax)).unwrap();
        s.inspect(&d, &q, &strict.solutions);
        s.inspect(&d, &q, &lax.solutions);
        total += expected.len();
        if strict.solutions != expected {
            mismatched.push(seed);
        }
        if strict.solutions != lax.solutions
            || lax.stats.partial_generated < strict.stats.partial_generated
        {
            mode_mismatch.push(seed);
        }
    }
    let detail = if mismatched.is_empty() {
        format!("200 random instances agree with the oracle ({total} embeddings in total)")
    } else {
        format!("seeds disagreeing with the oracle: {mismatched:?}")
    };
    s.report("6", mismatched.is_empty(), detail);
    mode_mismatch
}

fn mode_equivalence(s: &mut Suite, random_failures: Vec<u64>) {
    let (d, q) = (data(), query());
    let m = Matcher::new(&d, &q).unwrap();
    let mut fixed_failures = Vec::new();
    let mut orderings: Vec<&str> = EXPLORED.iter().map(|(o, _)| *o).collect();
    orderings.extend([FULL_BEST.0, FULL_WORST.0]);
    for o in orderings {
        let strict = m.run(&ord(o), &options(UnifyMode::Strict)).unwrap();
        let lax = m.run(&ord(o), &options(UnifyMode::Lax)).unwrap();
        s.inspect(&d, &q, &lax.solutions);
        if strict.solutions != lax.solutions
            || lax.stats.partial_generated < strict.stats.partial_generated
        {
            fixed_failures.push(o);
        }
    }
    let pass = fixed_failures.is_empty() && random_failures.is_empty();
    let detail = if pass {
        "strict and lax agree on 26 fixture orderings and 200 random instances; lax partialGenerated >= strict".into()
    } else {
        format!("fixture orderings {fixed_failures:?}, random seeds {random_failures:?}")
    };
    s.report("8", pass, detail);
}

fn ordering_invariance(s: &mut Suite) {
    let mut failures = Vec::new();
    let mut runs = 0;
    for seed in 0..50 {
        let (d, q) = instance(10_000 + seed);
        let m = Matcher::new(&d, &q).unwrap();
        let covers = enumerate_minimum_hub_covers(&q, &CoverOptions::default()).unwrap();
        let mut orderings = enumerate_mhc_orderings(&covers);
        let mut rng = StdRng::seed_from_u64(seed);
        orderings.extend((0..20).map(|_| random_full_ordering(&q, &mut rng)));
        let mut reference: Option<Vec<Binding>> = None;
        for o in &orderings {
            let r = m.run(o, &options(UnifyMode::Strict)).unwrap();
            s.inspect(&d, &q, &r.solutions);
            runs += 1;
            match &reference {
                None => reference = Some(r.solutions),
                Some(first) if *first != r.solutions => {
                    failures.push(format!("seed {seed} ({})", o.joined()))
                }
                Some(_) => {}
            }
        }
    }
    let detail = if failures.is_empty() {
        format!("50 random instances, {runs} orderings, identical solution sets per instance")
    } else {
        format!("differing: {}", failures.join(", "))
    };
    s.report("7", failures.is_empty(), detail);
}

fn round_trips(s: &mut Suite) {
    let mut failures = Vec::new();
    let fixtures: [(&str, &str, &str); 2] = [
        ("data", DATA_EDGES, DATA_XML),
        ("query", QUERY_EDGES, QUERY_XML),
    ];
    for (name, edges, xml) in fixtures {
        let from_edges = parse_edge_list(edges).unwrap();
        let from_xml = parse_graphlet_xml(xml).unwrap();
        if from_edges != from_xml {
            failures.push(format!("{name}: edge list and XML fixtures differ"));
        }
        if to_graphlet_xml(&from_edges) != xml {
            failures.push(format!("{name}: XML rendering differs from the fixture"));
        }
        check_round_trip(name, &from_edges, &mut failures);
    }
    let mut rng = StdRng::seed_from_u64(7);
    for i in 0..50 {
        let g = erdos_renyi(1 + i % 15, 0.05 + (i as f64) / 60.0, "v", &mut rng);
        check_round_trip(&format!("random #{i}"), &g, &mut failures);
    }
    let detail = if failures.is_empty() {
        "fixtures and 50 random graphs survive both conversions and graphlet reassembly".to_string()
    } else {
        failures.join("; ")
    };
    s.report("9", failures.is_empty(), detail);
}

fn check_round_trip(name: &str, g: &Graph, failures: &mut Vec<String>) {
    if parse_graphlet_xml(&to_graphlet_xml(g)).as_ref() != Ok(g) {
        failures.push(format!("{name}: XML round trip"));
    }
    if parse_edge_list(&to_edge_list(g)).as_ref() != Ok(g) {
        failures.push(format!("{name}: edge list round trip"));
    }
    if &reassemble(&to_graphlets(g)) != g {
        failures.push(format!("{name}: graphlet reassembly"));
    }
}

fn well_formedness(s: &mut Suite) {
    let pass = s.defects.is_empty() && s.checked > 0;
    let detail = if pass {
        format!(
            "{} emitted bindings are total, injective and edge-preserving",
            s.checked
        )
    } else {
        let shown: Vec<&String> = s.defects.iter().take(5).collect();
        format!("{} defects, e.g. {shown:?}", s.defects.len())
    };
    s.report("10", pass, detail);
}

fn main() -> ExitCode {
    let mut s = Suite {
        failures: 0,
        defects: Vec::new(),
        checked: 0,
    };
    solution_count(&mut s);
    known_solutions(&mut s);
    cover_enumeration(&mut s);
    metrics_table(&mut s);
    calibration(&mut s);
    let mode_failures = oracle_equivalence(&mut s);
    ordering_invariance(&mut s);
    mode_equivalence(&mut s, mode_failures);
    round_trips(&mut s);
    well_formedness(&mut s);
    if s.failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{} criteria failed", s.failures);
        ExitCode::FAILURE
    }
}
