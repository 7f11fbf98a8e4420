use holonomy_core::holonomy::{run_audit, AxiomReport, GaugeField};
use holonomy_core::output::{potential_csv, to_json};
use holonomy_core::par::ExecMode;
use holonomy_core::presets::{preset, presets, PresetBackend};
use holonomy_core::reconstruction::{
    round_trip_report, FdConfig, Grid, PotentialField, RoundTripConfig, RoundTripReport,
};

#[test]
fn csv_is_identical_across_execution_modes() {
    let p = preset("su2-twist").unwrap();
    let grid = Grid::new(2, 4, -1.0, 1.0).unwrap();
    let a = PotentialField::reconstructed(p.holonomy(Some(32)).unwrap(), p.frame.clone(), FdConfig::default()).unwrap();
    let b = PotentialField::reconstructed(p.holonomy(Some(32)).unwrap(), p.frame.clone(), FdConfig::default()).unwrap();
    let seq = potential_csv(&a, &grid, ExecMode::Sequential).unwrap();
    let par = potential_csv(&b, &grid, ExecMode::Parallel).unwrap();
    assert_eq!(seq, par);
    assert!(seq.starts_with("x1,x2,mu,re_0_0,im_0_0,re_0_1,im_0_1,re_1_0,im_1_0,re_1_1,im_1_1\n"));
    assert_eq!(seq.lines().count(), 1 + 16 * 2);
}

#[test]
fn sec6_csv_rows() {
    let p = preset("paper-sec6").unwrap();
    let grid = Grid::new(2, 9, -2.0, 2.0).unwrap();
    let a = PotentialField::reconstructed(p.holonomy(None).unwrap(), p.frame.clone(), FdConfig::default()).unwrap();
    let csv = potential_csv(&a, &grid, ExecMode::Parallel).unwrap();
    let mut seen = 0;
    for line in csv.lines().skip(1) {
        let cells: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        if cells[0] == 1.0 && cells[1] == 2.0 {
            let want = if cells[2] == 0.0 { 1.0 } else { -0.5 };
            assert!((cells[3] - want).abs() < 1e-6);
            seen += 1;
        }
    }
    assert_eq!(seen, 2);
}

#[test]
fn audit_is_reproducible_and_serializes() {
    let p = preset("su2-shear").unwrap();
    let h = p.holonomy(Some(32)).unwrap();
    let cfg = p.audit_config(8, 11);
    let family = p.axiom3_family();
    let a = run_audit(&h, Some((&family, 1)), &cfg, ExecMode::Parallel).unwrap();
    let b = run_audit(&h, Some((&family, 1)), &cfg, ExecMode::Sequential).unwrap();
    assert_eq!(to_json(&a).unwrap(), to_json(&b).unwrap());
    let back: AxiomReport = serde_json::from_str(&to_json(&a).unwrap()).unwrap();
    assert_eq!(back, a);
}

#[test]
fn round_trip_report_json_fields() {
    let p = preset("abelian-ydx").unwrap();
    let grid = Grid::new(2, 3, -1.0, 1.0).unwrap();
    let cfg = RoundTripConfig {
        transport_paths: 2,
        ..Default::default()
    };
    let r = round_trip_report(&p.connection, &p.frame, &grid, &cfg).unwrap();
    let v: serde_json::Value = serde_json::from_str(&to_json(&r).unwrap()).unwrap();
    for key in ["grid", "max_curvature_defect", "max_gauge_defect", "max_transport_defect", "tolerances"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let back: RoundTripReport = serde_json::from_value(v).unwrap();
    assert_eq!(back, r);
    assert!(r.pass(), "{r:?}");
}

#[test]
fn presets_reconstruct_their_expected_potentials() {
    for p in presets() {
        let Some(expected) = p.expected.clone() else { continue };
        let steps = match p.backend {
            PresetBackend::Analytic => None,
            PresetBackend::Transport { .. } => Some(64),
        };
        let a = PotentialField::reconstructed(p.holonomy(steps).unwrap(), p.frame.clone(), FdConfig::default()).unwrap();
        for x in [[0.5, -0.25], [-0.75, 0.6]] {
            for mu in 0..2 {
                let err = (a.component(&x, mu).unwrap() - expected(&x, mu)).norm();
                assert!(err <= p.reconstruct_tol.max(1e-12), "{} at {x:?}: {err:e}", p.name);
            }
        }
    }
}
