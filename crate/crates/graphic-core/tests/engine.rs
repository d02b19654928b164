//! Whole-engine behavior on synthetic graphics: event detection on dented
//! ovals, census/oracle agreement and rotation covariance.

use graphic_core::synth::{self, oracle, Dent, RadialSpec, Rng};
use graphic_core::{
    count_c, critical_census, doubly_tangent_lines, event_schedule, genus_trajectory, slice_census,
    stable_genus_bound, validate, EventKind, FoldType, Graphic, Point, SweepError,
};
use std::f64::consts::FRAC_PI_2;

fn oval(radius: f64, fold: FoldType, dent: Option<Dent>) -> RadialSpec {
    RadialSpec {
        center: Point::new(0.0, 0.0),
        radius,
        harmonics: vec![],
        dent,
        fold,
        sheet_inside: true,
        segments: 10,
        knot_phase: 0.13,
    }
}

/// Definite oval with a dented indefinite oval nested inside.
fn dented_pair() -> Graphic {
    let outer = synth::radial_component(&oval(1.2, FoldType::Definite, None));
    let dent = Dent {
        center: 0.8,
        half_width: 0.65,
        depth: 0.06,
    };
    let inner = synth::radial_component(&oval(0.45, FoldType::Indefinite, Some(dent)));
    Graphic::new(vec![outer, inner])
}

#[test]
fn dented_indefinite_oval_stabilizes_and_destabilizes() {
    let g = dented_pair();
    let report = validate(&g);
    assert!(report.passed(), "{report}");

    let schedule = event_schedule(&g).unwrap();
    let kinds: Vec<EventKind> = schedule.events.iter().map(|e| e.kind).collect();
    let inflections = kinds
        .iter()
        .filter(|k| **k == EventKind::IndefiniteInflection)
        .count();
    assert_eq!(inflections, 2, "{kinds:?}");
    // The dent also bridges a doubly tangent line between its shoulders.
    assert!(kinds.contains(&EventKind::DoubleTangency), "{kinds:?}");

    let traj = genus_trajectory(&g).unwrap();
    assert_eq!(traj.q(), 1);
    assert_eq!(traj.p(), 1);
    assert_eq!(traj.peak(), 2);
    assert_eq!(traj.moves(), vec![1, -1]);
    assert_eq!(count_c(&g).unwrap(), 2);
    assert_eq!(stable_genus_bound(&g).unwrap(), 2);
}

#[test]
fn census_matches_dense_sampling_oracle() {
    let g = dented_pair();
    let traj = genus_trajectory(&g).unwrap();
    let mut rng = Rng::new(7);
    let mut checked = 0;
    while checked < 60 {
        let t = rng.range(1e-3, FRAC_PI_2 - 1e-3);
        if traj.breakpoints.iter().any(|b| (b - t).abs() < 1e-4) {
            continue;
        }
        let census = critical_census(&g, t).unwrap();
        assert_eq!(census.alternating_sum(), 0, "angle {t}");
        let sampled = oracle::graphic_tangency_count(&g, t, 10_000);
        assert_eq!(census.total() as usize, sampled, "angle {t}");
        checked += 1;
    }
}

#[test]
fn rotation_shifts_events_and_preserves_genera() {
    let g = dented_pair();
    let traj = genus_trajectory(&g).unwrap();
    let theta = 0.3;
    let rotated = g.rotate(theta);
    assert!(validate(&rotated).passed());
    let traj_rot = genus_trajectory(&rotated).unwrap();

    let shifted: Vec<f64> = traj
        .breakpoints
        .iter()
        .map(|b| b - theta)
        .filter(|b| *b > 0.0 && *b < FRAC_PI_2)
        .collect();
    assert_eq!(shifted.len(), traj_rot.breakpoints.len());
    for (expected, got) in shifted.iter().zip(&traj_rot.breakpoints) {
        assert!((expected - got).abs() < 1e-8, "{expected} vs {got}");
    }
    // Interval genera at corresponding angles are unchanged.
    for (i, w) in traj_rot.breakpoints.windows(2).enumerate() {
        let mid = 0.5 * (w[0] + w[1]);
        assert_eq!(
            traj_rot.genera[i + 1],
            graphic_core::genus_at(&g, mid + theta).unwrap()
        );
    }
}

#[test]
fn random_graphics_pass_their_own_machinery() {
    let mut rng = Rng::new(0xfeed);
    for _ in 0..8 {
        let g = synth::random_graphic(&mut rng);
        assert!(validate(&g).passed());
        let traj = genus_trajectory(&g).unwrap();
        let c = count_c(&g).unwrap();
        let bound = stable_genus_bound(&g).unwrap();
        assert_eq!(traj.moves().len(), c as usize);
        assert!(traj.peak() <= bound);
        // Nonzero steps only at indefinite inflections and type-two cusps.
        for e in &traj.events {
            if e.kind.changes_genus() {
                assert_eq!(e.genus_delta.abs(), 1);
            } else {
                assert_eq!(e.genus_delta, 0);
            }
        }
    }
}

/// A definite oval with a dent: its two inflections produce zero-step
/// events that create a (0,1) or (2,3) index pair.
#[test]
fn definite_dent_events_do_not_change_the_genus() {
    let dent = Dent {
        center: 0.8,
        half_width: 0.65,
        depth: 0.12,
    };
    let g = Graphic::new(vec![synth::radial_component(&oval(
        1.2,
        FoldType::Definite,
        Some(dent),
    ))]);
    assert!(validate(&g).passed());
    let schedule = event_schedule(&g).unwrap();
    let inflections: Vec<_> = schedule
        .events
        .iter()
        .filter(|e| e.kind == EventKind::DefiniteInflection)
        .collect();
    assert_eq!(inflections.len(), 2);
    assert!(schedule.events.iter().all(|e| e.genus_delta == 0));

    let traj = genus_trajectory(&g).unwrap();
    assert!(traj.genera.iter().all(|&genus| genus == 0));
    assert_eq!(count_c(&g).unwrap(), 0);

    // Between the two inflection angles the dent adds a (0,1) or (2,3)
    // pair to the census.
    let t0 = inflections[0].angle.min(inflections[1].angle);
    let t1 = inflections[0].angle.max(inflections[1].angle);
    let base = critical_census(&g, (t0 - 0.01).max(1e-3)).unwrap();
    let mid = critical_census(&g, 0.5 * (t0 + t1)).unwrap();
    assert_eq!(base.as_tuple(), (1, 0, 0, 1));
    let delta = (
        mid.n0 as i64 - base.n0 as i64,
        mid.n1 as i64 - base.n1 as i64,
        mid.n2 as i64 - base.n2 as i64,
        mid.n3 as i64 - base.n3 as i64,
    );
    assert!(delta == (1, 1, 0, 0) || delta == (0, 0, 1, 1), "{delta:?}");
}

/// Two equal circles side by side have horizontal outer bitangents: the
/// standalone query still reports the negative-slope subset, but the
/// schedule rejects the graphic because its endpoint projections are not
/// Morse.
#[test]
fn horizontal_bitangents_are_endpoint_events() {
    let a = synth::radial_component(&oval(1.0, FoldType::Definite, None));
    let mut b = synth::radial_component(&oval(1.0, FoldType::Definite, None));
    for seg in &mut b.segments {
        seg.bezier = seg.bezier.map_points(|p| Point::new(p.x + 3.0, p.y));
        seg.sheet = graphic_core::SheetSide::Right;
    }
    let g = Graphic::new(vec![a, b]);
    assert!(validate(&g).passed());

    let negative = doubly_tangent_lines(&g).unwrap();
    assert_eq!(negative.len(), 1, "{negative:?}");
    let slope = negative[0].dir.y / negative[0].dir.x;
    assert!(slope < 0.0);

    assert!(matches!(
        event_schedule(&g),
        Err(SweepError::EndpointEvent { .. })
    ));
}

/// Generic level lines cross the graphic in an even number of points, and
/// the analytic crossing counts match dense sampling.
#[test]
fn slice_census_matches_oracle_and_is_even() {
    let mut rng = Rng::new(0x51_1ce);
    for _ in 0..6 {
        let g = synth::random_graphic(&mut rng);
        let traj = genus_trajectory(&g).unwrap();
        let mut checked = 0;
        while checked < 40 {
            let t = rng.range(0.02, FRAC_PI_2 - 0.02);
            if traj.breakpoints.iter().any(|b| (b - t).abs() < 1e-3) {
                continue;
            }
            let level = rng.range(-1.8, 1.8);
            let census = match slice_census(&g, t, level) {
                Ok(c) => c,
                Err(_) => continue, // non-generic draw
            };
            assert_eq!((census.n_def + census.m_indef) % 2, 0);
            let mut sampled_def = 0;
            let mut sampled_indef = 0;
            for (_, seg) in g.segments() {
                let hits = oracle::slice_crossings(&seg.bezier, t, level, 4000);
                match seg.fold {
                    FoldType::Definite => sampled_def += hits,
                    FoldType::Indefinite => sampled_indef += hits,
                }
            }
            assert_eq!(census.n_def as usize, sampled_def, "t={t} level={level}");
            assert_eq!(
                census.m_indef as usize, sampled_indef,
                "t={t} level={level}"
            );
            checked += 1;
        }
    }
}

/// Rotating a segment shifts every inflection slope by the tangent-addition
/// formula and moves no roots.
#[test]
fn inflection_slopes_rotate_by_tangent_addition() {
    use graphic_core::features::{inflections, Slope};
    let curve = graphic_core::CubicBez::new(
        Point::new(-1.0, -1.0),
        Point::new(-1.0 / 3.0, 1.0),
        Point::new(1.0 / 3.0, -1.0),
        Point::new(1.0, 1.0),
    );
    let base = inflections(&curve).unwrap();
    assert_eq!(base.len(), 1);
    let m0 = match base[0].slope {
        Slope::Finite(m) => m,
        Slope::Vertical => panic!(),
    };
    let mut rng = Rng::new(77);
    for _ in 0..50 {
        let theta = rng.range(-0.7, 0.7);
        let rotated = curve.map_points(|p| p.rotate(theta));
        let inf = inflections(&rotated).unwrap();
        assert_eq!(inf.len(), 1);
        assert!(
            (inf[0].s - base[0].s).abs() < 1e-9,
            "root parameter is intrinsic"
        );
        let expected = (m0.atan() + theta).tan();
        match inf[0].slope {
            Slope::Finite(m) => assert!((m - expected).abs() < 1e-9 * (1.0 + expected.abs())),
            Slope::Vertical => panic!("stay away from vertical for this range"),
        }
    }
}

/// Two congruent dented ovals produce events at (numerically) identical
/// angles: the schedule reports the ties as warnings, classifies each
/// coincident pair as a cluster, and the trajectory carries the genus
/// through the unsampleable slivers between them.
#[test]
fn tied_events_classify_as_clusters() {
    let big = synth::radial_component(&RadialSpec {
        center: Point::new(0.0, 0.0),
        radius: 4.0,
        harmonics: vec![],
        dent: None,
        fold: FoldType::Definite,
        sheet_inside: true,
        segments: 10,
        knot_phase: 0.13,
    });
    let twin = |center: Point| {
        synth::radial_component(&RadialSpec {
            center,
            radius: 0.55,
            harmonics: vec![],
            dent: Some(Dent {
                center: 0.8,
                half_width: 0.65,
                depth: 0.055,
            }),
            fold: FoldType::Indefinite,
            sheet_inside: true,
            segments: 10,
            knot_phase: 0.13,
        })
    };
    // Offset along a positive-slope direction so the twins' outer common
    // tangents stay out of the sweep window.
    let (c, sn) = (1.3 * (0.5f64).cos(), 1.3 * (0.5f64).sin());
    let g = Graphic::new(vec![
        big,
        twin(Point::new(c, sn)),
        twin(Point::new(-c, -sn)),
    ]);
    assert!(validate(&g).passed(), "{}", validate(&g));

    let schedule = event_schedule(&g).unwrap();
    assert!(!schedule.warnings.is_empty(), "coincident angles must warn");
    let changer_deltas: Vec<i32> = schedule
        .events
        .iter()
        .filter(|e| e.kind.changes_genus())
        .map(|e| e.genus_delta)
        .collect();
    assert_eq!(changer_deltas, vec![1, 1, -1, -1], "{:?}", schedule.events);

    let traj = genus_trajectory(&g).unwrap();
    assert_eq!(traj.q(), 2);
    assert_eq!(traj.p(), 2);
    assert_eq!(traj.peak(), 4);
    assert_eq!(count_c(&g).unwrap(), 4);
    assert_eq!(
        stable_genus_bound(&g).unwrap(),
        4,
        "bound attained twice over"
    );
}
