//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use griddraw::columns::{
    column_count, degree_partition, embed_on_columns, locate_on_columns, lovasz_partition,
    transfer_to_plane,
};
use griddraw::corpus;
use griddraw::graph::{chromatic_number, is_linear_forest, ClassKind, Coloring, VertexPartition};
use griddraw::io::to_json;
use griddraw::lattice::{segment_lattice_points, GridPoint};
use griddraw::locator::{
    build_column_family, build_complete_family, locate_from_coloring, modular_coloring,
    pattern_term,
};
use griddraw::mixed::{
    build_formula_graph, decode_assignment, mixed_color, reduce_add_cliques, shipped_gadget,
    verify_variable_gadget, MixedSpec, Variant,
};
use griddraw::oracle;
use griddraw::planar::{
    grid_min_distance_bound, grid_min_distance_scan, parity_coloring, proper_drawing,
};
use griddraw::verify::{gp, is_primitive_drawing, is_proper, is_valid_drawing, min_gp_bruteforce};
use griddraw::{Budget, Result};

type Outcome = Result<std::result::Result<String, String>>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(
    cond: bool,
    ok: impl Into<String>,
    fail: impl Into<String>,
) -> std::result::Result<String, String> {
    if cond {
        Ok(ok.into())
    } else {
        Err(fail.into())
    }
}

fn to_i64(p: &GridPoint) -> Vec<i64> {
    p.0.iter().map(|x| i64::try_from(x).unwrap()).collect()
}

fn segment_agrees(a: &[i64], b: &[i64]) -> bool {
    let fast: Vec<Vec<i64>> =
        segment_lattice_points(&GridPoint::from_i64(a), &GridPoint::from_i64(b))
            .unwrap()
            .iter()
            .map(to_i64)
            .collect();
    let mut fast = fast;
    fast.sort();
    let mut slow = oracle::segment_points_scan(a, b);
    slow.sort();
    fast == slow
}

fn c1_segments() -> Outcome {
    let pts: Vec<[i64; 2]> = (-10..=10)
        .flat_map(|x| (-10..=10).map(move |y| [x, y]))
        .collect();
    let mut pairs = 0u64;
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            if !segment_agrees(a, b) {
                return Ok(Err(format!("mismatch on {a:?}-{b:?}")));
            }
            pairs += 1;
        }
    }
    let mut rng = corpus::rng(101);
    let mut done = 0;
    while done < 200 {
        let a: Vec<i64> = (0..3).map(|_| rng.gen_range(-6..=6)).collect();
        let b: Vec<i64> = (0..3).map(|_| rng.gen_range(-6..=6)).collect();
        if a == b {
            continue;
        }
        if !segment_agrees(&a, &b) {
            return Ok(Err(format!("mismatch on {a:?}-{b:?}")));
        }
        done += 1;
    }
    Ok(Ok(format!(
        "{pairs} planar pairs and 200 spatial pairs agree with the scan"
    )))
}

fn c2_example_family() -> Outcome {
    let fam = build_column_family(9, 2, &[])?;
    let ranks: Vec<BigInt> = fam.ranks.iter().map(|r| r[0].clone()).collect();
    let want: Vec<BigInt> = [0, 420, 105, 385, 280, 196, 161, 281, 386]
        .map(BigInt::from)
        .to_vec();
    let col2: Vec<(BigInt, BigInt)> = fam.last[2]
        .constraints
        .iter()
        .map(|c| (c.residue.clone(), c.modulus.clone()))
        .collect();
    let want2: Vec<(BigInt, BigInt)> = [(0, 4), (2, 3), (2, 5), (2, 7)]
        .map(|(r, m)| (BigInt::from(r), BigInt::from(m)))
        .to_vec();
    Ok(check(
        ranks == want && col2 == want2,
        format!("ranks {ranks:?}, column 2 residues {col2:?}"),
        format!("got ranks {ranks:?}, column 2 {col2:?}"),
    ))
}

fn c3_pattern_period() -> Outcome {
    for (p, e) in [(2u64, 1u32), (2, 2), (3, 1)] {
        let period = p.pow(2 * e);
        let terms: Vec<Vec<u64>> = (0..3 * period)
            .map(|i| pattern_term(p, e, 2, i))
            .collect::<Result<_>>()?;
        for i in 0..3 * period {
            for j in 0..3 * period {
                let equal = terms[i as usize] == terms[j as usize];
                if equal != ((i as i64 - j as i64) % period as i64 == 0) {
                    return Ok(Err(format!("p={p} e={e}: terms {i} and {j}")));
                }
            }
        }
    }
    Ok(Ok(
        "term equality matches divisibility for (2,1), (2,2), (3,1)".into(),
    ))
}

fn c4_round_trip() -> Outcome {
    let mut rng = corpus::rng(104);
    let budget = Budget::default();
    let mut total = 0;
    for (q, d) in [(2u64, 2usize), (3, 2), (2, 3)] {
        let cap = q.pow(d as u32) as usize;
        let mut done = 0;
        while done < 50 {
            let n = rng.gen_range(2..=12);
            let p = rng.gen_range(0.1..0.7);
            let g = corpus::random_gnp(n, p, &mut rng);
            let (k, c) = chromatic_number(&g, &budget)?;
            if k > cap {
                continue;
            }
            let dr = locate_from_coloring(&g, &c, q, d)?;
            let back = modular_coloring(&dr, q)?;
            if !is_valid_drawing(&dr) || gp(&dr) > BigInt::from(q) || !back.is_proper(&g) {
                return Ok(Err(format!("q={q} d={d}: failure on {g:?}")));
            }
            done += 1;
            total += 1;
        }
    }
    Ok(Ok(format!(
        "{total} located drawings valid with gp <= q and proper coordinate colorings"
    )))
}

fn c5_k5() -> Outcome {
    let g = corpus::complete(5);
    let dr = locate_from_coloring(&g, &Coloring::new((0..5).collect()), 3, 2)?;
    let located = gp(&dr);
    let least = min_gp_bruteforce(&g, 4, &Budget::default())?;
    Ok(check(
        located <= BigInt::from(3) && least.is_some_and(|m| m >= 3),
        format!("located gp {located}, least gp in a 4x4 box {least:?}"),
        format!("located gp {located}, box search {least:?}"),
    ))
}

fn c6_columns() -> Outcome {
    let mut rng = corpus::rng(106);
    for i in 0..50 {
        let l = 1 + i % 5;
        let n = rng.gen_range(l..=16);
        let (g, p) = corpus::random_partitioned(n, l, 0, 0.5, &mut rng);
        let dr = embed_on_columns(&g, &p)?;
        if !is_valid_drawing(&dr) || column_count(&dr) != l {
            return Ok(Err(format!(
                "embedding {i} invalid or on the wrong number of ranks"
            )));
        }
    }
    let k5 = corpus::complete(5);
    let p = VertexPartition::all_of_kind(ClassKind::Path, vec![vec![0, 1], vec![2, 3], vec![4]]);
    let dr = locate_on_columns(&k5, &p, 3)?;
    if !is_primitive_drawing(&dr) || !is_valid_drawing(&dr) || column_count(&dr) != 3 {
        return Ok(Err("K5 is not primitive on three columns".into()));
    }
    let mut located = 1;
    for d in 2..=4usize {
        let cap = 1usize << d;
        for paths in 0..=cap / 2 {
            for normals in 0..=cap - 2 * paths {
                if paths + normals == 0 {
                    continue;
                }
                let (g, p) = corpus::random_partitioned(18, paths, normals, 0.6, &mut rng);
                let dr = locate_on_columns(&g, &p, d)?;
                if g.edge_count() > 0 && gp(&dr) != BigInt::from(2) {
                    return Ok(Err(format!(
                        "d={d} paths={paths} normals={normals}: gp {}",
                        gp(&dr)
                    )));
                }
                let flat = transfer_to_plane(&dr)?;
                if !is_valid_drawing(&flat) {
                    return Ok(Err("transfer produced an invalid drawing".into()));
                }
                located += 1;
            }
        }
    }
    Ok(Ok(format!("50 column embeddings valid; K5 primitive on 3 columns; {located} located drawings with gp = 2")))
}

fn c7_degree() -> Outcome {
    let mut rng = corpus::rng(107);
    let mut worst_slack = i64::MAX;
    for i in 0..100 {
        let n = rng.gen_range(2..=30);
        let g = corpus::random_gnp(n, rng.gen_range(0.05..0.6), &mut rng);
        let m = rng.gen_range(1..=4usize);
        let need = (g.max_degree() + 1).saturating_sub(m);
        let mut ks = vec![0usize; m];
        for _ in 0..need + rng.gen_range(0..2) {
            ks[rng.gen_range(0..m)] += 1;
        }
        let r = lovasz_partition(&g, &ks)?;
        for (part, &k) in r.parts.iter().zip(&ks) {
            let (h, _) = g.induced(part);
            if h.max_degree() > k {
                return Ok(Err(format!("instance {i}: cap {k} exceeded")));
            }
        }
        let initial = r.initial_potential - r.potential_floor;
        if r.moves as i64 > initial {
            return Ok(Err(format!(
                "instance {i}: {} moves, initial potential {initial}",
                r.moves
            )));
        }
        worst_slack = worst_slack.min(initial - r.moves as i64);
    }
    for (d, delta) in [(1usize, 3usize), (2, 7)] {
        for _ in 0..20 {
            let n = rng.gen_range(4..=40);
            let g = corpus::random_bounded_degree(n, delta, &mut rng);
            let p = degree_partition(&g, d)?;
            if p.len() != 1 << d {
                return Ok(Err(format!("d={d}: {} classes", p.len())));
            }
            for c in &p.classes {
                if !is_linear_forest(&g, &c.vertices)? {
                    return Ok(Err(format!("d={d}: class is not a linear forest")));
                }
            }
        }
    }
    Ok(Ok(format!(
        "100 partitions within caps (least slack {worst_slack} below the initial potential); 40 degree partitions are linear forests"
    )))
}

fn c8_mixed() -> Outcome {
    let budget = Budget::default();
    let mut checked = 0;
    for n in 1..=7 {
        for g in corpus::all_connected_graphs(n) {
            for (a, b) in [(2, 0), (1, 1), (0, 2), (2, 1), (1, 2)] {
                let fast = mixed_color(&g, MixedSpec::new(a, b)?, &budget)?;
                let slow = oracle::mixed_colorable(&g, a, b);
                let witness_ok = fast
                    .as_ref()
                    .is_none_or(|c| oracle::is_mixed_coloring(&g, a, b, &c.colors));
                if fast.is_some() != slow || !witness_ok {
                    return Ok(Err(format!("({a},{b}) disagrees on {g:?}")));
                }
                checked += 1;
            }
        }
    }
    Ok(Ok(format!("{checked} decisions agree with enumeration")))
}

fn c9_reductions() -> Outcome {
    let budget = Budget::default();
    let mut cases = 0;
    for n in 1..=5 {
        for g in corpus::all_graphs(n) {
            let chi = oracle::chromatic_number(&g);
            for (a, b) in [(1, 2), (2, 1)] {
                let spec = MixedSpec::new(a, b)?;
                let h = reduce_add_cliques(&g, spec)?;
                if mixed_color(&h, spec, &budget)?.is_some() != (chi <= a + b) {
                    return Ok(Err(format!("clique reduction {spec} fails on {g:?}")));
                }
                cases += 1;
            }
        }
    }
    let mut rng = corpus::rng(109);
    for i in 0..30 {
        let vars = rng.gen_range(1..=4);
        let clauses = rng.gen_range(1..=4);
        let f = corpus::random_formula(vars, clauses, &mut rng);
        for variant in [Variant::OneInThree, Variant::Nae] {
            let fg = build_formula_graph(&f, variant);
            let c = mixed_color(&fg.graph, variant.spec(), &budget)?;
            let sat = f.brute_force(variant).is_some();
            if c.is_some() != sat {
                return Ok(Err(format!(
                    "formula {i} ({variant}): colorable {} vs satisfiable {sat}",
                    c.is_some()
                )));
            }
            if let Some(c) = c {
                if !f.satisfied_by(&decode_assignment(&c, &fg)?, variant) {
                    return Ok(Err(format!(
                        "formula {i} ({variant}): decoded assignment fails"
                    )));
                }
            }
        }
    }
    for variant in [Variant::OneInThree, Variant::Nae] {
        if !verify_variable_gadget(&shipped_gadget(variant), variant, 3).ok() {
            return Ok(Err(format!("{variant} gadget fails certification")));
        }
    }
    Ok(Ok(format!(
        "{cases} clique reductions, 60 formula reductions, both gadgets certified"
    )))
}

fn c10_proper() -> Outcome {
    let mut rng = corpus::rng(110);
    let budget = Budget::default();
    for i in 0..30 {
        let n = rng.gen_range(3..=25);
        let g = corpus::random_planar(n, rng.gen_range(0.0..0.6), &mut rng);
        let (dr, c, _) = proper_drawing(&g, &budget)?;
        let parity = parity_coloring(&dr)?;
        if !is_proper(&dr)? || !parity.is_proper(&g) || parity.num_colors() != c.num_colors() {
            return Ok(Err(format!("graph {i} on {n} vertices")));
        }
    }
    Ok(Ok(
        "30 planar graphs drawn proper; parity colorings proper with the input color count".into(),
    ))
}

fn c11_grid_distance() -> Outcome {
    let mut detail = Vec::new();
    for n in 2..=12i64 {
        let (num, den) = grid_min_distance_scan(n);
        let found = BigRational::new(BigInt::from(num), BigInt::from(den));
        let bound = grid_min_distance_bound(n as u64)?;
        if found < bound {
            return Ok(Err(format!("n={n}: {found} < {bound}")));
        }
        if n == 12 {
            detail.push(format!("n=12: {found} >= {bound}"));
        }
    }
    Ok(Ok(format!(
        "all n in 2..=12 meet the bound; {}",
        detail.join("")
    )))
}

fn twice<T: serde::Serialize>(f: impl Fn() -> Result<T>) -> Result<bool> {
    Ok(to_json(&f()?)? == to_json(&f()?)?)
}

fn c12_determinism() -> Outcome {
    let budget = Budget::default();
    let k5 = corpus::complete(5);
    let planar = corpus::random_planar(14, 0.3, &mut corpus::rng(112));
    let (pg, pp) = corpus::random_partitioned(14, 2, 3, 0.5, &mut corpus::rng(113));
    let (eg, ep) = corpus::random_partitioned(14, 3, 0, 0.5, &mut corpus::rng(114));
    let f = corpus::random_formula(3, 4, &mut corpus::rng(115));
    let bounded = corpus::random_bounded_degree(30, 7, &mut corpus::rng(116));
    let results = [
        ("family", twice(|| build_complete_family(9, 2))?),
        (
            "locate",
            twice(|| locate_from_coloring(&k5, &Coloring::new((0..5).collect()), 3, 2))?,
        ),
        ("embed-columns", twice(|| embed_on_columns(&eg, &ep))?),
        ("locate-columns", twice(|| locate_on_columns(&pg, &pp, 3))?),
        (
            "transfer",
            twice(|| transfer_to_plane(&locate_on_columns(&pg, &pp, 3)?))?,
        ),
        ("lovasz", twice(|| lovasz_partition(&bounded, &[3, 3]))?),
        ("degree", twice(|| degree_partition(&bounded, 2))?),
        (
            "mixed",
            twice(|| mixed_color(&corpus::petersen(), MixedSpec::new(1, 1)?, &budget))?,
        ),
        (
            "cliques",
            twice(|| reduce_add_cliques(&corpus::cycle(5), MixedSpec::new(1, 2)?))?,
        ),
        (
            "formula",
            twice(|| Ok(build_formula_graph(&f, Variant::Nae)))?,
        ),
        ("proper", twice(|| proper_drawing(&planar, &budget))?),
    ];
    let bad: Vec<&str> = results
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| *n)
        .collect();
    Ok(check(
        bad.is_empty(),
        format!(
            "{} constructors byte-identical across two runs",
            results.len()
        ),
        format!("differing output: {bad:?}"),
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("segment lattice points vs scan", c1_segments),
        ("nine-column family golden values", c2_example_family),
        ("pattern periodicity", c3_pattern_period),
        ("locate / modular coloring round trip", c4_round_trip),
        ("K5 three-locatable, not two", c5_k5),
        ("column drawings", c6_columns),
        ("bounded-degree partitions", c7_degree),
        ("mixed solver vs enumeration", c8_mixed),
        ("reductions", c9_reductions),
        ("proper planar pipeline", c10_proper),
        ("grid distance bound", c11_grid_distance),
        ("determinism", c12_determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (verdict, detail) = match run() {
            Ok(Ok(s)) => ("PASS", s),
            Ok(Err(s)) => ("FAIL", s),
            Err(e) => ("FAIL", format!("error: {e}")),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {:>2} {verdict} [{name}] {detail} ({:.1}s)",
            i + 1,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of 12 criteria pass", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
