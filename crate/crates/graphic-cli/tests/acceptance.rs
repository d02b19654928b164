//! Acceptance suite: one test per certified property, each printing a
//! pass line (visible with `--nocapture`).
//!
//! Run with `cargo test -p graphic-cli --test acceptance -- --nocapture`.

use std::f64::consts::FRAC_PI_2;
use std::process::Command;

use graphic_cli::{format, shipped};
use graphic_core::synth::{self, oracle, Rng};
use graphic_core::{
    bound_from_parts, classify_cusp_germs, common_stab_genus, count_c, critical_census,
    genus_trajectory, slice_census, slice_euler, slice_profile, validate, CubicBez, CuspType,
    Graphic, Point, StabError, SweepError, Trajectory, Vec2,
};

const RANDOM_GRAPHICS: usize = 50;
const ANGLES_PER_GRAPHIC: usize = 100;
const ORACLE_SAMPLES: usize = 10_000;

fn corpus() -> Vec<(String, Graphic)> {
    let mut out: Vec<(String, Graphic)> = shipped::all()
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .collect();
    let mut rng = Rng::new(0x5eed_ac11);
    for i in 0..RANDOM_GRAPHICS {
        out.push((format!("random-{i}"), synth::random_graphic(&mut rng)));
    }
    out
}

/// Non-event angles, drawn uniformly and kept clear of the breakpoints.
fn sample_angles(trajectory: &Trajectory, rng: &mut Rng, n: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let t = rng.range(0.01, FRAC_PI_2 - 0.01);
        if trajectory.breakpoints.iter().all(|b| (b - t).abs() > 1e-3) {
            out.push(t);
        }
    }
    out
}

/// Criteria 1 and 2 share their (graphic, angle) pairs: the Euler census
/// invariant and exact agreement with the dense-sampling tangency oracle.
#[test]
fn criterion_1_and_2_euler_census_and_oracle_equivalence() {
    let mut rng = Rng::new(0xe01e5);
    let mut pairs = 0u64;
    for (name, g) in corpus() {
        let trajectory = genus_trajectory(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
        for t in sample_angles(&trajectory, &mut rng, ANGLES_PER_GRAPHIC) {
            let census = critical_census(&g, t).unwrap_or_else(|e| panic!("{name} @{t}: {e}"));
            assert_eq!(census.alternating_sum(), 0, "{name} @{t}: {census:?}");
            let sampled = oracle::graphic_tangency_count(&g, t, ORACLE_SAMPLES);
            assert_eq!(
                census.total() as usize,
                sampled,
                "{name} @{t}: census {census:?} vs oracle {sampled}"
            );
            pairs += 1;
        }
    }
    println!("criterion 1 (Euler census invariant, {pairs} pairs): PASS");
    println!("criterion 2 (root-isolation census equals dense-sampling oracle): PASS");
}

/// Criteria 3 and 4: the stable-genus bound holds everywhere and is
/// attained by the wiggle; nonzero trajectory steps correspond exactly to
/// the count c, and the zero-step kinds never move the genus.
#[test]
fn criterion_3_and_4_bound_and_step_correspondence() {
    for (name, g) in corpus() {
        let trajectory = genus_trajectory(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
        let c = count_c(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
        let bound = bound_from_parts(&trajectory, c).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(trajectory.peak() <= bound, "{name}");

        let moves = trajectory.moves();
        assert_eq!(
            moves.len(),
            c as usize,
            "{name}: steps {moves:?} vs c = {c}"
        );
        for event in &trajectory.events {
            if event.kind.changes_genus() {
                assert_eq!(event.genus_delta.abs(), 1, "{name}: {event:?}");
            } else {
                assert_eq!(event.genus_delta, 0, "{name}: {event:?}");
            }
        }

        if name == "wiggle" {
            assert_eq!(c, 2, "wiggle c");
            assert_eq!(trajectory.p(), trajectory.q(), "wiggle p = q");
            assert_eq!(trajectory.peak(), trajectory.q() + 1, "wiggle peak = q + 1");
            assert_eq!(bound, trajectory.peak(), "wiggle attains the bound");
        }
    }
    println!("criterion 3 (max trajectory genus <= (p+q+c)/2, attained by the wiggle): PASS");
    println!("criterion 4 (nonzero steps = c; zero-step kinds never move the genus): PASS");
}

/// Criterion 5: the parity laws hold on every validated graphic, and
/// violations are flagged as errors rather than silently accepted.
#[test]
fn criterion_5_parity_laws() {
    for (name, g) in corpus() {
        assert!(validate(&g).passed(), "{name}");
        let trajectory = genus_trajectory(&g).unwrap();
        let c = count_c(&g).unwrap();
        let (p, q) = (trajectory.p(), trajectory.q());
        assert_eq!((p + q + c) % 2, 0, "{name}: parity");
        assert!(c >= p.abs_diff(q), "{name}: gap");
    }
    // The checks are errors, not clamps.
    assert_eq!(
        common_stab_genus(0, 1, 2),
        Err(StabError::ParityViolation { p: 0, q: 1, c: 2 })
    );
    assert_eq!(
        common_stab_genus(3, 0, 1),
        Err(StabError::GapViolation { p: 3, q: 0, c: 1 })
    );
    let fake = Trajectory {
        breakpoints: vec![],
        genera: vec![1],
        events: vec![],
    };
    assert!(matches!(
        bound_from_parts(&fake, 1),
        Err(SweepError::ParityViolation { .. })
    ));
    let fake = Trajectory {
        breakpoints: vec![0.5],
        genera: vec![0, 3],
        events: vec![],
    };
    assert!(matches!(
        bound_from_parts(&fake, 1),
        Err(SweepError::GapViolation { .. })
    ));
    println!("criterion 5 (parity and gap laws; violations are errors): PASS");
}

/// Criterion 6: the definite oval's slice fixes the sign chi_Sigma = n − m
/// (= +2 on the sphere band), and profile transitions change chi by ±2.
#[test]
fn criterion_6_slice_sign_and_transitions() {
    let oval = shipped::oval();
    let census = slice_census(&oval, 0.0, 0.1).unwrap();
    assert_eq!((census.n_def, census.m_indef), (2, 0));
    assert_eq!(
        slice_euler(&census).unwrap().chi_sigma,
        2,
        "sphere slice fixes the sign"
    );

    for (name, g) in shipped::all() {
        for t in [0.11, 0.43, 1.02] {
            let profile = slice_profile(&g, t).unwrap_or_else(|e| panic!("{name} @{t}: {e}"));
            let chis: Vec<i64> = profile
                .censuses
                .iter()
                .map(|c| slice_euler(c).unwrap().chi_sigma)
                .collect();
            assert!(!chis.is_empty());
            assert_eq!(*chis.first().unwrap(), 0, "{name}: below the graphic");
            assert_eq!(*chis.last().unwrap(), 0, "{name}: above the graphic");
            for (i, w) in chis.windows(2).enumerate() {
                // Tangency levels step chi by exactly ±2; a cusp level moves
                // a crossing between the incident edges and leaves chi alone.
                let expected = match profile.kinds[i] {
                    graphic_core::BreakKind::Tangency => 2,
                    graphic_core::BreakKind::Cusp => 0,
                };
                assert_eq!((w[1] - w[0]).abs(), expected, "{name} @{t}: {chis:?}");
            }
        }
    }
    println!("criterion 6 (slice sign chi = n − m; tangency transitions step chi by ±2): PASS");
}

/// Cubic Hermite fit of a graph y = f(x), oriented away from x = 0.
fn graph_germ(f: impl Fn(f64) -> f64, df: impl Fn(f64) -> f64, len: f64) -> CubicBez {
    let p0 = Point::new(0.0, f(0.0));
    let p3 = Point::new(len, f(len));
    let v0 = Vec2::new(1.0, df(0.0)) * (len / 3.0);
    let v3 = Vec2::new(1.0, df(len)) * (len / 3.0);
    CubicBez::new(p0, p0 + v0, Point::new(p3.x - v3.x, p3.y - v3.y), p3)
}

/// Criterion 7: the cusp classifier labels the semicubical-type germ pair
/// type one and the same-side pair type two, exactly, under random rigid
/// motions and scalings (including reflections).
#[test]
fn criterion_7_cusp_classifier_robustness() {
    // Branches of the semicubical model: y = ±x^{3/2}, opposite sides.
    let type_one = (
        graph_germ(|x| x.powf(1.5), |x| 1.5 * x.sqrt(), 0.3),
        graph_germ(|x| -x.powf(1.5), |x| -1.5 * x.sqrt(), 0.3),
    );
    // Branches of (s², s⁴(1+s)): y = x²(1 ± √x), both above the tangent.
    let type_two = (
        graph_germ(
            |x| x * x * (1.0 + x.sqrt()),
            |x| 2.0 * x + 2.5 * x * x.sqrt(),
            0.3,
        ),
        graph_germ(
            |x| x * x * (1.0 - x.sqrt()),
            |x| 2.0 * x - 2.5 * x * x.sqrt(),
            0.3,
        ),
    );
    assert_eq!(
        classify_cusp_germs(&type_one.0, &type_one.1),
        Ok(CuspType::TypeOne)
    );
    assert_eq!(
        classify_cusp_germs(&type_two.0, &type_two.1),
        Ok(CuspType::TypeTwo)
    );

    let mut rng = Rng::new(0xc0591f);
    for trial in 0..100 {
        let theta = rng.range(0.0, std::f64::consts::TAU);
        let scale = rng.range(0.25, 4.0);
        let reflect = rng.chance(0.5);
        let shift = Vec2::new(rng.range(-5.0, 5.0), rng.range(-5.0, 5.0));
        let transform = |bez: &CubicBez| {
            bez.map_points(|p| {
                let p = if reflect { Point::new(p.x, -p.y) } else { p };
                let p = Point::new(p.x * scale, p.y * scale);
                p.rotate(theta) + shift
            })
        };
        assert_eq!(
            classify_cusp_germs(&transform(&type_one.0), &transform(&type_one.1)),
            Ok(CuspType::TypeOne),
            "trial {trial}"
        );
        assert_eq!(
            classify_cusp_germs(&transform(&type_two.0), &transform(&type_two.1)),
            Ok(CuspType::TypeTwo),
            "trial {trial}"
        );
    }
    println!("criterion 7 (cusp classifier exact under 100 rigid motions and scalings): PASS");
}

/// Exhaustive deletion-order oracle for the reduction calculus.
fn oracle_fixpoints(moves: &[i8]) -> std::collections::BTreeSet<Vec<i8>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut stack = vec![moves.to_vec()];
    let mut fixpoints = std::collections::BTreeSet::new();
    while let Some(cur) = stack.pop() {
        if !seen.insert(cur.clone()) {
            continue;
        }
        let mut reducible = false;
        for i in 0..cur.len().saturating_sub(1) {
            if cur[i] == -1 && cur[i + 1] == 1 {
                reducible = true;
                let mut next = cur.clone();
                next.drain(i..i + 2);
                stack.push(next);
            }
        }
        if !reducible {
            fixpoints.insert(cur);
        }
    }
    fixpoints
}

/// Criterion 8: reduction is confluent for every move sequence of length
/// ≤ 12 with base genus ≤ 6 (validity-filtered): peak and endpoints equal
/// the exhaustive-search results exactly.
#[test]
fn criterion_8_reduction_confluence() {
    let mut checked = 0u64;
    for len in 0..=12usize {
        for mask in 0u32..(1 << len) {
            let moves: Vec<i8> = (0..len)
                .map(|i| if mask >> i & 1 == 1 { 1 } else { -1 })
                .collect();
            let fixpoints = oracle_fixpoints(&moves);
            assert_eq!(fixpoints.len(), 1, "not confluent: {moves:?}");
            let oracle_moves = fixpoints.into_iter().next().unwrap();
            for base in 0..=6u32 {
                let seq = graphic_core::MoveSequence::new(base, moves.clone());
                if seq.check().is_err() {
                    continue;
                }
                let reduced = graphic_core::reduce(&seq).unwrap();
                assert_eq!(reduced.moves, oracle_moves);
                let sum: i64 = oracle_moves.iter().map(|&m| m as i64).sum();
                assert_eq!(seq.end_genus(), base as i64 + sum, "endpoints preserved");
                let mut peak = base as i64;
                let mut genus = base as i64;
                for &m in &oracle_moves {
                    genus += m as i64;
                    peak = peak.max(genus);
                }
                assert_eq!(reduced.peak as i64, peak);
                checked += 1;
            }
        }
    }
    println!("criterion 8 (reduction confluence, {checked} sequences): PASS");
}

/// Criterion 9: rotating a graphic's control points by 0.3 rad shifts all
/// event angles by −0.3 within 1e−8 and preserves interval genera exactly.
#[test]
fn criterion_9_rotation_covariance() {
    let theta = 0.3;
    let mut rng = Rng::new(0x107a7e);
    let mut graphics = vec![
        ("oval".to_string(), shipped::oval()),
        ("wiggle".to_string(), shipped::wiggle()),
    ];
    graphics.push(("random".to_string(), synth::random_graphic(&mut rng)));

    for (name, g) in graphics {
        let before = genus_trajectory(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
        let rotated = g.rotate(theta);
        assert!(validate(&rotated).passed(), "{name}");
        let after = genus_trajectory(&rotated).unwrap_or_else(|e| panic!("{name} rotated: {e}"));

        let expected: Vec<f64> = before
            .breakpoints
            .iter()
            .map(|b| b - theta)
            .filter(|b| *b > 0.0 && *b < FRAC_PI_2)
            .collect();
        assert_eq!(expected.len(), after.breakpoints.len(), "{name}");
        for (want, got) in expected.iter().zip(&after.breakpoints) {
            assert!((want - got).abs() < 1e-8, "{name}: {want} vs {got}");
        }
        // Genera on corresponding intervals are unchanged: sample each
        // rotated interval and compare with the original angle.
        let mut cuts = vec![0.0];
        cuts.extend_from_slice(&after.breakpoints);
        cuts.push(FRAC_PI_2);
        for (i, w) in cuts.windows(2).enumerate() {
            let mid = 0.5 * (w[0] + w[1]);
            let original = graphic_core::genus_at(&g, mid + theta).unwrap();
            assert_eq!(after.genera[i], original, "{name} interval {i}");
        }
    }
    println!("criterion 9 (rotation covariance, shift −0.3 within 1e−8): PASS");
}

/// Criterion 10: two runs of the sweep command on the same file produce
/// byte-identical reports.
#[test]
fn criterion_10_sweep_determinism() {
    let dir = std::env::temp_dir().join(format!("graphic-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for name in ["oval", "wiggle", "cusp-pair", "bitangent-pair"] {
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, format::serialize(&shipped::by_name(name).unwrap())).unwrap();
        for fmt in ["text", "json"] {
            let run = || {
                Command::new(env!("CARGO_BIN_EXE_graphic"))
                    .args(["sweep", path.to_str().unwrap(), "--format", fmt])
                    .output()
                    .expect("binary runs")
            };
            let first = run();
            let second = run();
            assert!(first.status.success(), "{name}");
            assert_eq!(
                first.stdout, second.stdout,
                "{name} {fmt}: reports must be byte-identical"
            );
        }
    }
    println!("criterion 10 (byte-identical sweep reports): PASS");
}
