//! End-to-end acceptance checks. Each test prints one `criterion N: PASS|FAIL`
//! line straight to stderr (bypassing libtest capture) so the verdicts show up
//! in an ordinary `cargo test` log.

use std::io::Write;
use std::time::{Duration, Instant};

use zsp_core::graphs::{
    blowup_even_label, blowup_label, eulerian_bipartite_label, lex_product, obstruction_check,
    verify_labeling, Graph, Obstruction, Verdict,
};
use zsp_core::kotzig::{
    build_group_kotzig, build_int_kotzig, verify_group_kotzig, verify_int_kotzig,
};
use zsp_core::oracle::{
    scan, search_kotzig, search_labeling, search_triple_bijection, search_zsp,
    verify_unequal_partition, KotzigTarget, DEFAULT_BUDGET,
};
use zsp_core::zsp::{
    triple_bijection, triple_bijection_via, verify_triple_bijection, verify_zsp, z2_z2_z8_rows,
    zsp, BijectionViolation, TripleBijection, TripleStrategy, TABLE_Z2_Z2_Z2, TABLE_Z2_Z2_Z4,
    Z2_Z2_Z8_PATTERN, Z2_Z2_Z8_TRIPLES,
};
use zsp_core::{Error, GroupElement, GroupSpec};

fn report(n: u32, pass: bool, detail: impl AsRef<str>) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    let line = format!("criterion {n}: {verdict} ({})\n", detail.as_ref());
    let _ = std::io::stderr().write_all(line.as_bytes());
}

fn spec(s: &str) -> GroupSpec {
    s.parse().unwrap()
}

fn within(start: Instant, limit: Duration) -> bool {
    start.elapsed() < limit
}

// ---------------------------------------------------------------------------
// Base tables, transcribed cell for cell: g row, phi row, psi row.

const PRINTED_Z2_Z2_Z2: [&str; 3] = [
    "(0,0,0) (0,0,1) (0,1,0) (0,1,1) (1,0,0) (1,0,1) (1,1,0) (1,1,1)",
    "(0,0,1) (1,1,1) (0,1,0) (1,0,0) (0,0,0) (1,1,0) (0,1,1) (1,0,1)",
    "(0,0,1) (1,1,0) (0,0,0) (1,1,1) (1,0,0) (0,1,1) (1,0,1) (0,1,0)",
];

const PRINTED_Z2_Z2_Z4: [&str; 3] = [
    "(0,0,0) (0,1,0) (1,0,0) (1,1,0) (0,0,1) (0,1,1) (1,0,1) (1,1,1) \
     (0,0,2) (0,1,2) (1,0,2) (1,1,2) (0,0,3) (0,1,3) (1,0,3) (1,1,3)",
    "(0,1,0) (1,1,2) (1,0,1) (0,0,3) (1,0,3) (0,0,1) (0,1,3) (1,1,1) \
     (0,0,2) (1,0,0) (1,1,3) (0,1,1) (0,0,0) (1,0,2) (1,1,0) (0,1,2)",
    "(0,1,0) (1,0,2) (0,0,3) (1,1,1) (1,0,0) (0,1,2) (1,1,0) (0,0,2) \
     (0,0,0) (1,1,2) (0,1,3) (1,0,1) (0,0,1) (1,1,3) (0,1,1) (1,0,3)",
];

/// Third coordinate 0 or 4. The psi entry for (0,1,4) reads (1,1,4) as printed.
const PRINTED_Z2_Z2_Z8_EVEN: [&str; 3] = [
    "(0,0,0) (0,1,0) (1,0,0) (1,1,0) (0,0,4) (0,1,4) (1,0,4) (1,1,4)",
    "(0,1,0) (1,1,4) (1,0,0) (0,0,4) (0,0,0) (1,0,4) (1,1,0) (0,1,4)",
    "(0,1,0) (1,0,4) (0,0,0) (1,1,4) (0,0,4) (1,1,4) (0,1,4) (1,0,0)",
];

const PRINTED_TRIPLES: [[usize; 3]; 6] = [
    [2, 3, 3],
    [7, 2, 7],
    [5, 6, 5],
    [6, 1, 1],
    [1, 5, 2],
    [3, 7, 6],
];

/// First two coordinates for third coordinates a, b, c respectively.
const PRINTED_PATTERN: [[&str; 4]; 3] = [
    ["(0,0)", "(0,1)", "(1,0)", "(1,1)"],
    ["(0,0)", "(1,0)", "(1,1)", "(0,1)"],
    ["(0,0)", "(1,1)", "(0,1)", "(1,0)"],
];

fn cells(row: &str) -> Vec<Vec<usize>> {
    row.split_whitespace()
        .map(|c| {
            c.trim_matches(|ch| ch == '(' || ch == ')')
                .split(',')
                .map(|x| x.parse().unwrap())
                .collect()
        })
        .collect()
}

fn table_rows(printed: &[&str; 3]) -> Vec<[Vec<usize>; 3]> {
    let [g, p, q] = printed.map(cells);
    (0..g.len())
        .map(|i| [g[i].clone(), p[i].clone(), q[i].clone()])
        .collect()
}

fn z8_rows(even: &[&str; 3]) -> Vec<[Vec<usize>; 3]> {
    let mut rows = table_rows(even);
    let pattern = PRINTED_PATTERN.map(|r| cells(&r.join(" ")));
    for [a, b, c] in PRINTED_TRIPLES {
        for col in 0..4 {
            let with = |k: usize, third: usize| {
                let mut v = pattern[k][col].clone();
                v.push(third);
                v
            };
            rows.push([with(0, a), with(1, b), with(2, c)]);
        }
    }
    rows
}

/// Loads rows as a bijection without any repair; `None` if a `g` is missing.
fn load(spec: &GroupSpec, rows: &[[Vec<usize>; 3]]) -> Option<TripleBijection> {
    let n = spec.order();
    let (mut phi, mut psi) = (vec![usize::MAX; n], vec![usize::MAX; n]);
    for [g, p, q] in rows {
        let idx = |v: &Vec<usize>| spec.index_of(&GroupElement::new(v.clone())).unwrap();
        phi[idx(g)] = idx(p);
        psi[idx(g)] = idx(q);
    }
    (!phi.contains(&usize::MAX)).then(|| TripleBijection::from_indices(phi, psi))
}

fn as_vecs(rows: &[[[usize; 3]; 3]]) -> Vec<[Vec<usize>; 3]> {
    rows.iter().map(|r| r.map(|c| c.to_vec())).collect()
}

#[test]
fn criterion_1_printed_base_tables() {
    let start = Instant::now();
    let z222 = spec("Z2xZ2xZ2");
    let z224 = spec("Z2xZ2xZ4");
    let z228 = spec("Z2xZ2xZ8");

    let printed_222 = table_rows(&PRINTED_Z2_Z2_Z2);
    let printed_224 = table_rows(&PRINTED_Z2_Z2_Z4);
    let printed_228 = z8_rows(&PRINTED_Z2_Z2_Z8_EVEN);

    let check = |s: &GroupSpec, rows: &[[Vec<usize>; 3]]| {
        let tb = load(s, rows).expect("every element has a row");
        verify_triple_bijection(s, &tb)
    };
    let r222 = check(&z222, &printed_222);
    let r224 = check(&z224, &printed_224);
    let r228 = check(&z228, &printed_228);

    // The six triples on their own: every block of four rows is zero-sum and
    // the third coordinates a, b, c each run over {1,2,3,5,6,7}.
    let triples_ok = PRINTED_TRIPLES
        .iter()
        .all(|t| t.iter().sum::<usize>() % 8 == 0)
        && (0..3).all(|k| {
            let mut col: Vec<usize> = PRINTED_TRIPLES.iter().map(|t| t[k]).collect();
            col.sort_unstable();
            col == [1, 2, 3, 5, 6, 7]
        });

    // The library tables agree with the transcription, up to the one cell.
    assert_eq!(as_vecs(&TABLE_Z2_Z2_Z2), printed_222);
    assert_eq!(as_vecs(&TABLE_Z2_Z2_Z4), printed_224);
    assert_eq!(PRINTED_TRIPLES, Z2_Z2_Z8_TRIPLES);
    let library_pattern: Vec<Vec<Vec<usize>>> = (0..3)
        .map(|k| Z2_Z2_Z8_PATTERN.iter().map(|p| p[k].to_vec()).collect())
        .collect();
    assert_eq!(
        PRINTED_PATTERN.map(|r| cells(&r.join(" "))).to_vec(),
        library_pattern
    );
    let library_228 = as_vecs(&z2_z2_z8_rows());
    let differing: Vec<_> = printed_228
        .iter()
        .zip(&library_228)
        .filter(|(a, b)| a != b)
        .collect();
    assert_eq!(differing.len(), 1);
    assert_eq!(differing[0].0[0], vec![0, 1, 4]);
    assert_eq!(differing[0].0[2], vec![1, 1, 4]);
    assert_eq!(differing[0].1[2], vec![1, 1, 0]);
    assert_eq!(check(&z228, &library_228), Ok(()));

    let elapsed_ok = within(start, Duration::from_secs(1));
    let pass = r222.is_ok() && r224.is_ok() && r228.is_ok() && triples_ok && elapsed_ok;
    let detail = match &r228 {
        Ok(()) => "all three tables verify".to_string(),
        Err(v) => format!(
            "Z2xZ2xZ2 {}, Z2xZ2xZ4 {}, triples {}; Z2xZ2xZ8 as printed rejected: {v}; \
             with psi((0,1,4)) = (1,1,0) it verifies",
            if r222.is_ok() { "ok" } else { "rejected" },
            if r224.is_ok() { "ok" } else { "rejected" },
            if triples_ok { "ok" } else { "rejected" },
        ),
    };
    report(1, pass, detail);

    // The printed Z2xZ2xZ8 table repeats (1,1,4) in the psi row, so this
    // criterion cannot pass verbatim. Pin down exactly that failure.
    assert_eq!(r222, Ok(()));
    assert_eq!(r224, Ok(()));
    assert!(triples_ok);
    assert_eq!(
        r228,
        Err(BijectionViolation::NotPermutation {
            map: "psi",
            element: GroupElement::new(vec![1, 1, 4]),
        })
    );
    assert!(elapsed_ok);
}

#[test]
fn criterion_2_partitions_in_class_g() {
    let start = Instant::now();
    let mut count = 0;
    let mut failures = Vec::new();
    for s in GroupSpec::all_up_to(48)
        .into_iter()
        .filter(GroupSpec::in_class_g)
    {
        let n = s.order();
        for m in (3..=n).filter(|m| n % m == 0) {
            count += 1;
            let ok = zsp(&s, m)
                .map(|p| verify_zsp(&s, &p, m).is_ok())
                .unwrap_or(false);
            if !ok {
                failures.push(format!("{s} m={m}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && elapsed < Duration::from_secs(30);
    report(
        2,
        pass,
        format!(
            "{count} (group, m) pairs, {} failures, {elapsed:.2?}",
            failures.len()
        ),
    );
    assert!(pass, "{failures:?}");
}

#[test]
fn criterion_3_partition_nonexistence() {
    let start = Instant::now();
    let mut count = 0;
    let mut failures = Vec::new();
    for s in GroupSpec::all_up_to(16) {
        let n = s.order();
        let mut ms: Vec<usize> = Vec::new();
        if s.involution_count() == 1 {
            ms.extend((3..=n).filter(|m| n % m == 0));
        }
        if n % 2 == 0 {
            ms.push(2);
        }
        for m in ms {
            count += 1;
            let r = search_zsp(&s, m, DEFAULT_BUDGET).unwrap();
            let refused = match zsp(&s, m) {
                Err(Error::Impossible(_)) => m == 2,
                Err(Error::Nonexistence(_)) => m != 2,
                _ => false,
            };
            if !r.proves_nonexistence() || !refused {
                failures.push(format!("{s} m={m}"));
            }
        }
        if n % 2 == 1 {
            // m = 2 does not divide an odd order; both sides say so.
            count += 1;
            let div = |e: &Error| matches!(e, Error::Divisibility { m: 2, .. });
            let oracle = search_zsp(&s, 2, DEFAULT_BUDGET);
            let built = zsp(&s, 2);
            if !(oracle.as_ref().err().is_some_and(div) && built.as_ref().err().is_some_and(div)) {
                failures.push(format!("{s} m=2"));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && elapsed < Duration::from_secs(60);
    report(
        3,
        pass,
        format!(
            "{count} instances refused and exhausted, {} failures, {elapsed:.2?}",
            failures.len()
        ),
    );
    assert!(pass, "{failures:?}");
}

#[test]
fn criterion_4_triple_bijections() {
    let start = Instant::now();
    let mut built = 0;
    let mut failures = Vec::new();
    for s in GroupSpec::all_up_to(64)
        .into_iter()
        .filter(GroupSpec::in_class_g)
    {
        built += 1;
        match triple_bijection(&s) {
            Ok(tb) if verify_triple_bijection(&s, &tb).is_ok() => {}
            _ => failures.push(s.to_string()),
        }
    }
    // Not covered by the inductive construction; reached by search.
    let z44 = spec("Z4xZ4");
    let searched = triple_bijection_via(&z44, TripleStrategy::Search)
        .map(|tb| verify_triple_bijection(&z44, &tb).is_ok())
        .unwrap_or(false);
    if !searched {
        failures.push("Z4xZ4 by search".into());
    }
    let mut nodes = 0;
    for name in ["Z2", "Z4", "Z8", "Z16", "Z6", "Z12"] {
        let s = spec(name);
        let r = search_triple_bijection(&s, u64::MAX).unwrap();
        nodes += r.nodes;
        if !r.proves_nonexistence() || !triple_bijection(&s).is_err_and(|e| e.is_nonexistence()) {
            failures.push(format!("{name} nonexistence"));
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && elapsed < Duration::from_secs(60);
    report(
        4,
        pass,
        format!(
            "{built} groups built and verified, 6 nonexistence proofs ({nodes} nodes), {elapsed:.2?}"
        ),
    );
    assert!(pass, "{failures:?}");
}

#[test]
fn criterion_5_kotzig_arrays() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut group_arrays = 0;
    for s in GroupSpec::all_up_to(16) {
        for j in (2..=6).filter(|j| j % 2 == 0 || s.in_class_g()) {
            group_arrays += 1;
            let ok = build_group_kotzig(&s, j)
                .map(|a| a.rows() == j && verify_group_kotzig(&a).is_ok())
                .unwrap_or(false);
            if !ok {
                failures.push(format!("{s} j={j}"));
            }
        }
    }
    let mut int_arrays = 0;
    for j in 2..=5 {
        for k in (2..=9).filter(|k| j * (k - 1) % 2 == 0) {
            int_arrays += 1;
            let ok = build_int_kotzig(j, k)
                .map(|a| a.rows() == j && a.cols() == k && verify_int_kotzig(&a).is_ok())
                .unwrap_or(false);
            if !ok {
                failures.push(format!("int j={j} k={k}"));
            }
        }
    }
    let searches = [
        (KotzigTarget::Group(spec("Z4")), 3),
        (KotzigTarget::Group(spec("Z6")), 3),
        (KotzigTarget::Int(4), 3),
    ];
    for (target, j) in &searches {
        let r = search_kotzig(target, *j, DEFAULT_BUDGET).unwrap();
        if !r.proves_nonexistence() {
            failures.push(format!("search {target:?} j={j}"));
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && elapsed < Duration::from_secs(60);
    report(
        5,
        pass,
        format!(
            "{group_arrays} group arrays, {int_arrays} integer arrays, 3 nonexistence proofs, {elapsed:.2?}"
        ),
    );
    assert!(pass, "{failures:?}");
}

#[test]
fn criterion_6_complete_multipartite_blowup() {
    let start = Instant::now();
    let k4 = Graph::complete(4);
    let g = spec("Z2xZ2xZ3");
    let out = blowup_label(&k4, 3, &g).unwrap();
    let verdict = verify_labeling(&out.graph, &out.labeling).unwrap();

    let multipartite =
        (0..12).all(|u| (0..12).all(|v| out.graph.has_edge(u, v) == (u / 3 != v / 3)));
    let same_graph = out.graph == lex_product(&k4, &Graph::empty(3));
    let blocked = obstruction_check(&out.graph, &spec("Z12")).unwrap();

    let pass = verdict == Verdict::Magic(g.identity())
        && multipartite
        && same_graph
        && blocked == Verdict::Impossible(Obstruction::OddRegularSingleInvolution)
        && within(start, Duration::from_secs(1));
    report(
        6,
        pass,
        format!("K4 blow-up by 3 over Z2xZ2xZ3: {verdict}; over Z12: {blocked}"),
    );
    assert!(pass);
}

#[test]
fn criterion_7_eulerian_and_even_families() {
    let start = Instant::now();
    let c6 = Graph::cycle(6).unwrap();
    let mut results = Vec::new();
    for name in ["Z2xZ9", "Z2xZ3xZ3"] {
        let s = spec(name);
        let out = eulerian_bipartite_label(&c6, 3, &s).unwrap();
        let v = verify_labeling(&out.graph, &out.labeling).unwrap();
        results.push((format!("C6 x3 {name}"), v == Verdict::Magic(s.identity())));
    }
    let even = [
        (Graph::cycle(4).unwrap(), "C4", "Z8"),
        (Graph::complete(3), "K3", "Z6"),
        (Graph::complete(2), "K2", "Z4"),
    ];
    for (g, gname, name) in &even {
        let s = spec(name);
        let out = blowup_even_label(g, 2, &s).unwrap();
        let v = verify_labeling(&out.graph, &out.labeling).unwrap();
        results.push((format!("{gname} x2 {name}"), v.is_magic()));
    }
    let pass = results.iter().all(|r| r.1) && within(start, Duration::from_secs(1));
    let summary: Vec<String> = results
        .iter()
        .map(|(n, ok)| format!("{n} {}", if *ok { "magic" } else { "not magic" }))
        .collect();
    report(7, pass, summary.join(", "));
    assert!(pass);
}

#[test]
fn criterion_8_k33_over_z6() {
    let start = Instant::now();
    let r = search_labeling(
        &Graph::complete_bipartite(3, 3),
        &spec("Z6"),
        DEFAULT_BUDGET,
    )
    .unwrap();
    let elapsed = start.elapsed();
    let pass = r.proves_nonexistence() && elapsed < Duration::from_secs(30);
    report(
        8,
        pass,
        format!(
            "found={}, exhausted={}, {} nodes, {elapsed:.2?}",
            r.found, r.exhausted, r.nodes
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_9_unequal_partition_scan() {
    let start = Instant::now();
    let records = scan(16, DEFAULT_BUDGET).unwrap();

    let expected: Vec<String> = GroupSpec::all_up_to(16)
        .into_iter()
        .filter(|s| s.order() % 2 == 0 && s.involution_count() >= 3)
        .map(|s| s.to_string())
        .collect();
    let mut seen: Vec<String> = records.iter().map(|r| r.spec.to_string()).collect();
    seen.dedup();

    let mut failures = Vec::new();
    let mut compositions = 0u128;
    for r in &records {
        compositions += r.compositions;
        let verified = r
            .report
            .witness
            .as_ref()
            .is_some_and(|w| verify_unequal_partition(&r.spec, &r.parts, w).is_ok());
        if !(r.report.found && r.report.exhausted && verified) {
            failures.push(format!("{} {:?}", r.spec, r.parts));
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && seen == expected && elapsed < Duration::from_secs(600);
    report(
        9,
        pass,
        format!(
            "{} groups, {} part multisets ({compositions} compositions), {} without a partition, {elapsed:.2?}",
            seen.len(),
            records.len(),
            failures.len()
        ),
    );
    assert!(pass, "{failures:?}");
}
