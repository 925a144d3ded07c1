//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails.

use std::collections::BTreeSet;
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use trilattice::correspondence::{
    estimated_score, exact_score_correlation, BadnessMode, PointLineCorrespondence,
};
use trilattice::fixtures::{self, HUGHES_BAER_LINES, HUGHES_BAER_POINTS, HUGHES_PARITY_LINES};
use trilattice::groupalg::abelianization;
use trilattice::incidence::{
    check_desargues_config, enumerate_collineations, for_each_correlation, is_baer_subplane,
    CollineationFilter, ProjectivePlane,
};
use trilattice::presentation::{
    check_parity, restrict, verify_presentation, TrianglePresentation, Verdict,
};
use trilattice::scab::{build_scab, residue_plane_iso, verify_generalized_triangle, ScabVertex};
use trilattice::search::{
    best_swap_step, correlation_census, random_stats, Census, NeighborhoodParams,
    NeighborhoodRegistry, SearchState, StepOutcome,
};

type Check = std::result::Result<String, String>;

struct Gate {
    failures: Vec<usize>,
}

impl Gate {
    fn run(&mut self, id: usize, name: &str, limit: Duration, f: impl FnOnce() -> Check) {
        let start = Instant::now();
        let result = f();
        let took = start.elapsed();
        let result = match result {
            Ok(detail) if took > limit => {
                Err(format!("{detail}; took {took:.2?}, limit {limit:?}"))
            }
            other => other,
        };
        match result {
            Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail} ({took:.2?})"),
            Err(detail) => {
                println!("criterion {id:>2} FAIL  {name}: {detail} ({took:.2?})");
                self.failures.push(id);
            }
        }
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn fixture_presentation() -> Check {
    let plane = fixtures::hughes_plane();
    let t = fixtures::hughes_triangles();
    let v = verify_presentation(&plane, &fixtures::hughes_lambda(), &t);
    ensure(
        v == Verdict::Full { triples: 910 },
        format!("verdict {v:?}"),
    )?;
    let (orbits, loops) = t.orbit_decomposition();
    ensure(
        (orbits, loops) == (298, 16),
        format!("{orbits} orbits, {loops} loops"),
    )?;
    ensure(3 * orbits + loops == t.len(), "orbit count does not add up")?;
    Ok(format!("FULL, {} triples = 3*{orbits} + {loops}", t.len()))
}

fn order_two_example() -> Check {
    let plane = ProjectivePlane::difference_set(2).map_err(|e| e.to_string())?;
    ensure(
        plane.line(0).iter().collect::<Vec<_>>() == [1, 2, 4],
        "unexpected line 0",
    )?;
    let lambda = PointLineCorrespondence::identity(7);
    let t = TrianglePresentation::from_orbits(7, (0..7).map(|x| [x, (x + 1) % 7, (x + 3) % 7]))
        .map_err(|e| e.to_string())?;
    let v = verify_presentation(&plane, &lambda, &t);
    ensure(v == Verdict::Full { triples: 21 }, format!("verdict {v:?}"))?;
    Ok("FULL, 21 triples".into())
}

const TABLE: [((usize, usize), i64, usize); 6] = [
    ((4, 4), 846, 6318),
    ((10, 2), 758, 4212),
    ((10, 10), 750, 6318),
    ((16, 0), 670, 4212),
    ((16, 16), 654, 6318),
    ((22, 22), 558, 6318),
];

fn census_matches(census: &Census) -> Check {
    let got: Vec<((usize, usize), i64, usize)> = census
        .rows
        .iter()
        .map(|r| ((r.a, r.b), r.exact, r.count))
        .collect();
    ensure(got == TABLE, format!("classes {got:?}"))?;
    for ((a, b), s, _) in TABLE {
        ensure(exact_score_correlation(9, a, b) == s, format!("S({a},{b})"))?;
    }
    ensure(census.total == 33696, format!("total {}", census.total))?;
    Ok(format!("{} correlations in 6 classes", census.total))
}

fn census_smoke() -> Check {
    let census = correlation_census(&fixtures::hughes_plane(), Some(500));
    ensure(census.total == 500, format!("total {}", census.total))?;
    for r in &census.rows {
        let row = TABLE.iter().find(|(ab, ..)| *ab == (r.a, r.b));
        ensure(
            row.is_some_and(|&(_, s, _)| s == r.exact),
            format!("class ({}, {})", r.a, r.b),
        )?;
    }
    Ok(format!("{} classes seen in 500", census.rows.len()))
}

fn census_deficits(census: &Census) -> Check {
    let mut worst: f64 = 0.0;
    for r in &census.rows {
        ensure(
            r.above_exact == 0,
            format!("({}, {}): {} covers above S", r.a, r.b, r.above_exact),
        )?;
        ensure(
            r.max_estimated as i64 <= r.exact,
            format!("({}, {}): max {}", r.a, r.b, r.max_estimated),
        )?;
        ensure(
            r.fails < r.count,
            format!("({}, {}): no successful cover", r.a, r.b),
        )?;
        ensure(
            r.deficit() <= 1.0,
            format!("({}, {}): deficit {:.3}", r.a, r.b, r.deficit()),
        )?;
        worst = worst.max(r.deficit());
    }
    Ok(format!("max mean deficit {worst:.3}"))
}

fn random_baseline() -> Check {
    let s = random_stats(&fixtures::hughes_plane(), 1000, 0);
    ensure(
        (460.0..=515.0).contains(&s.mean),
        format!("mean {:.2}", s.mean),
    )?;
    Ok(format!("mean {:.2}, sd {:.2}", s.mean, s.std_dev))
}

fn one_swap_recovery() -> Check {
    let plane = fixtures::hughes_plane();
    let start = fixtures::hughes_lambda().swap(0, 1);
    let nb = NeighborhoodRegistry::default()
        .create(
            "full-scan",
            &NeighborhoodParams {
                worst_points: 5,
                badness_mode: BadnessMode::BothEndpoints,
            },
        )
        .map_err(|e| e.to_string())?;
    let mut state = SearchState::new(&plane, start);
    state.visited.clear();
    let before = state.score();
    let outcome = best_swap_step(&plane, &mut state, nb.as_ref());
    ensure(
        matches!(outcome, StepOutcome::Moved { score: 910, .. }),
        format!("{outcome:?}"),
    )?;
    let t = TrianglePresentation::from_cover(plane.n(), &state.cover);
    let v = verify_presentation(&plane, &state.current, &t);
    ensure(
        v == Verdict::Full { triples: 910 },
        format!("verdict {v:?}"),
    )?;
    Ok(format!("{before} -> 910 in one step, FULL"))
}

fn baer_restriction() -> Check {
    let plane = fixtures::hughes_plane();
    let emb = is_baer_subplane(&plane, &HUGHES_BAER_POINTS, &HUGHES_BAER_LINES)
        .map_err(|e| e.to_string())?;
    let r = restrict(
        &plane,
        &fixtures::hughes_lambda(),
        &fixtures::hughes_triangles(),
        &emb,
    )
    .map_err(|e| e.to_string())?;
    ensure(r.sub.plane.order() == 3, "subplane order")?;
    ensure(
        r.triangles.len() == 52,
        format!("{} triples", r.triangles.len()),
    )?;
    let v = verify_presentation(&r.sub.plane, &r.lambda, &r.triangles);
    ensure(v == Verdict::Full { triples: 52 }, format!("verdict {v:?}"))?;
    let bold = TrianglePresentation::parse(fixtures::HUGHES_BAER_TRIANGLES, 91)
        .map_err(|e| e.to_string())?;
    ensure(
        r.ambient_orbits() == bold.orbit_representatives(),
        "orbits differ from the marked entries",
    )?;
    Ok(format!(
        "FULL, 52 triples, {} orbits",
        bold.orbit_representatives().len()
    ))
}

fn parity() -> Check {
    let v = check_parity(
        &fixtures::hughes_plane(),
        &fixtures::hughes_triangles(),
        &HUGHES_PARITY_LINES,
    )
    .map_err(|e| e.to_string())?;
    ensure(v.holds, format!("violated at {:?}", v.violation))?;
    Ok(format!("holds, |A| = {}", v.set_a.len()))
}

fn abelian() -> Check {
    let a = abelianization(&fixtures::hughes_triangles(), 91);
    ensure(
        a.invariant_factors == [BigInt::from(6)] && a.free_rank == 0,
        format!("{a}"),
    )?;
    Ok(format!("{a}"))
}

fn stabilizer() -> Check {
    let plane = fixtures::hughes_plane();
    let filter = CollineationFilter {
        fixed_points: &HUGHES_BAER_POINTS,
        ..Default::default()
    };
    let group = enumerate_collineations(&plane, &filter);
    ensure(
        group.iter().all(|g| g.is_valid(&plane)),
        "invalid collineation",
    )?;
    ensure(
        group
            .iter()
            .all(|g| HUGHES_BAER_POINTS.iter().all(|&p| g.point_perm[p] == p)),
        "point moved",
    )?;
    let distinct: BTreeSet<&Vec<usize>> = group.iter().map(|g| &g.point_perm).collect();
    ensure(
        group.len() == 6 && distinct.len() == 6,
        format!("{} elements", group.len()),
    )?;
    Ok("6 elements".into())
}

fn scab_residues() -> Check {
    let plane = fixtures::hughes_plane();
    let complex = build_scab(&fixtures::hughes_triangles()).map_err(|e| e.to_string())?;
    for v in ScabVertex::ALL {
        let g = complex.residue(v);
        ensure(
            verify_generalized_triangle(&g, 9),
            format!("{v} is not a generalized triangle"),
        )?;
        let iso = residue_plane_iso(&g, &plane).ok_or(format!("{v}: no isomorphism"))?;
        ensure(
            iso.is_valid(&g, &plane),
            format!("{v}: isomorphism does not check"),
        )?;
    }
    Ok("3 residues, all isomorphic to the plane".into())
}

fn desargues() -> Check {
    let h = fixtures::hughes_plane();
    let v = check_desargues_config(&h, 0, [1, 10, 34], [2, 11, 35]).map_err(|e| e.to_string())?;
    ensure(
        v.axis_points == [19, 66, 42] && v.axis_line == 48 && !v.collinear,
        format!("{v:?}"),
    )?;

    let pg3 = ProjectivePlane::difference_set(3).map_err(|e| e.to_string())?;
    let n = pg3.n();
    let (mut checked, mut violations) = (0usize, 0usize);
    for center in 0..n {
        let pencil: Vec<usize> = (0..n).filter(|&l| pg3.incident(center, l)).collect();
        for (i, &l1) in pencil.iter().enumerate() {
            for (j, &l2) in pencil.iter().enumerate().skip(i + 1) {
                for &l3 in &pencil[j + 1..] {
                    let off = |l: usize| {
                        pg3.line(l)
                            .iter()
                            .filter(|&p| p != center)
                            .collect::<Vec<_>>()
                    };
                    let (p1, p2, p3) = (off(l1), off(l2), off(l3));
                    for &a1 in &p1 {
                        for &b1 in p1.iter().filter(|&&b| b > a1) {
                            for &a2 in &p2 {
                                for &b2 in p2.iter().filter(|&&b| b != a2) {
                                    for &a3 in &p3 {
                                        for &b3 in p3.iter().filter(|&&b| b != a3) {
                                            if let Ok(v) = check_desargues_config(
                                                &pg3,
                                                center,
                                                [a1, a2, a3],
                                                [b1, b2, b3],
                                            ) {
                                                checked += 1;
                                                violations += usize::from(!v.collinear);
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    ensure(
        checked > 0 && violations == 0,
        format!("{violations} violations in {checked}"),
    )?;
    Ok(format!(
        "Hughes witness reproduced; order 3: {checked} configurations, 0 violations"
    ))
}

fn correlations_never_full() -> Check {
    const TOTAL: usize = 33696;
    const SAMPLES: usize = 600;
    let plane = fixtures::hughes_plane();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let picked: BTreeSet<usize> = sample(&mut rng, TOTAL, SAMPLES).into_iter().collect();
    let last = *picked.last().unwrap();
    let (mut index, mut tested, mut full) = (0usize, 0usize, 0usize);
    for_each_correlation(&plane, Some(last + 1), |c| {
        if picked.contains(&index) {
            let lambda = PointLineCorrespondence::from_correlation(&c);
            let cover = estimated_score(&plane, &lambda);
            let t = TrianglePresentation::from_cover(plane.n(), &cover);
            if matches!(
                verify_presentation(&plane, &lambda, &t),
                Verdict::Full { .. }
            ) {
                full += 1;
            }
            tested += 1;
        }
        index += 1;
        ControlFlow::Continue(())
    });
    ensure(tested == SAMPLES, format!("only {tested} sampled"))?;
    ensure(full == 0, format!("{full} FULL"))?;
    Ok(format!("{tested} sampled, none FULL"))
}

fn main() {
    let mut gate = Gate {
        failures: Vec::new(),
    };
    gate.run(1, "fixture presentation", secs(1), fixture_presentation);
    gate.run(2, "order-two example", secs(1), order_two_example);

    // the full census is shared by criteria 3 and 4
    let mut census = None;
    gate.run(3, "correlation score classes", secs(15 * 60), || {
        census_matches(census.insert(correlation_census(&fixtures::hughes_plane(), None)))
    });
    gate.run(3, "census smoke test (limit 500)", secs(30), census_smoke);
    gate.run(4, "estimated vs exact score", secs(60), || match &census {
        Some(c) => census_deficits(c),
        None => Err("no census".into()),
    });

    gate.run(5, "random baseline", secs(120), random_baseline);
    gate.run(6, "one-swap recovery", secs(5), one_swap_recovery);
    gate.run(7, "Baer restriction", secs(1), baer_restriction);
    gate.run(8, "parity", secs(1), parity);
    gate.run(9, "abelianization", secs(1), abelian);
    gate.run(10, "subplane stabilizer", secs(5 * 60), stabilizer);
    gate.run(11, "chamber complex residues", secs(120), scab_residues);
    gate.run(12, "Desargues", secs(60), desargues);
    gate.run(
        13,
        "correlations never FULL",
        secs(5 * 60),
        correlations_never_full,
    );

    if !gate.failures.is_empty() {
        eprintln!("failed criteria: {:?}", gate.failures);
        std::process::exit(1);
    }
    println!("all criteria passed");
}
