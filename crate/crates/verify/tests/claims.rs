use std::collections::HashSet;

use gvcrit::SolverConfig;
use gvverify::claims::{
    find, run_all, run_claim, selected, ClaimError, Context, Params, Profile, REGISTRY,
};
use gvverify::report::{RunReport, Status};

fn ctx(allow_stretch: bool) -> Context {
    Context::new(SolverConfig::default(), allow_stretch)
}

fn census(order: usize) -> Params {
    Params {
        census_order: Some(order),
        n: None,
    }
}

fn family(n: usize) -> Params {
    Params {
        census_order: None,
        n: Some(n),
    }
}

#[test]
fn registry_ids_are_unique() {
    let ids: HashSet<&str> = REGISTRY.iter().map(|c| c.id).collect();
    assert_eq!(ids.len(), REGISTRY.len());
    assert_eq!(REGISTRY.len(), 20);
    assert!(find("thm-5.8").is_some());
    let stretch: Vec<&str> = REGISTRY
        .iter()
        .filter(|c| c.stretch)
        .map(|c| c.id)
        .collect();
    assert_eq!(stretch, ["prop-5.3", "prop-5.4"]);
}

#[test]
fn profiles_exclude_stretch_claims() {
    for profile in [Profile::Quick, Profile::Full] {
        assert!(selected(profile, false).iter().all(|c| !c.stretch));
    }
    assert!(selected(Profile::Quick, true).iter().all(|c| !c.stretch));
    assert_eq!(selected(Profile::Full, true).len(), REGISTRY.len());
    let full: Vec<&str> = selected(Profile::Full, false)
        .iter()
        .map(|c| c.id)
        .collect();
    for id in ["prop-3.1", "prop-3.2", "prop-3.3"] {
        assert!(full.contains(&id));
    }
}

#[test]
fn quick_profile_passes() {
    let ctx = ctx(false);
    let reports = run_all(Profile::Quick, &ctx).unwrap();
    for r in &reports {
        assert_eq!(r.status, Status::Pass, "{}", r.line());
    }
    let run = RunReport::new(Some(Profile::Quick), false, reports);
    assert_eq!(run.summary.fail + run.summary.undecided, 0);
}

#[test]
fn census_claims_state_the_checked_range() {
    let ctx = ctx(false);
    let r = run_claim("prop-3.4", &census(6), &ctx).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert!(
        r.checked.contains("order 1..=6 (208 graphs)"),
        "{}",
        r.checked
    );
    let r = run_claim("thm-4.4", &census(7), &ctx).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.evidence.len(), 3);
}

#[test]
fn two_critical_coloring_fails_at_order_seven() {
    let ctx = ctx(false);
    let r = run_claim("prop-3.4", &census(7), &ctx).unwrap();
    assert_eq!(r.status, Status::Fail);
    let bad: Vec<&str> = r
        .evidence
        .iter()
        .filter(|e| e.values.iter().any(|(k, _)| k == "unexpected"))
        .map(|e| e.graph.as_str())
        .collect();
    // C6 plus an isolated vertex
    assert_eq!(bad, ["F?LR?"]);
}

#[test]
fn family_claims_at_smallest_parameter() {
    let ctx = ctx(false);
    for id in ["prop-3.2", "prop-3.3", "prop-5.1", "prop-5.2", "fig-1"] {
        let r = run_claim(id, &Params::default(), &ctx).unwrap();
        assert_eq!(r.status, Status::Pass, "{}", r.line());
    }
}

#[test]
fn parameter_errors() {
    let ctx = ctx(false);
    assert!(matches!(
        run_claim("nope", &Params::default(), &ctx),
        Err(ClaimError::UnknownClaim(_))
    ));
    assert!(matches!(
        run_claim("thm-3.5", &census(9), &ctx),
        Err(ClaimError::InvalidParameters { .. })
    ));
    assert!(matches!(
        run_claim("prop-3.1", &family(5), &ctx),
        Err(ClaimError::InvalidParameters { .. })
    ));
    assert!(matches!(
        run_claim("prop-3.2", &family(40), &ctx),
        Err(ClaimError::InvalidParameters { .. })
    ));
    assert!(matches!(
        run_claim("prop-5.3", &family(2), &ctx),
        Err(ClaimError::StretchNotAllowed(_))
    ));
}

#[test]
fn glued_cones_smallest_instance_disagrees() {
    let ctx = ctx(true);
    let r = run_claim("prop-5.3", &family(2), &ctx).unwrap();
    assert_eq!(r.status, Status::Fail);
    let values = &r.evidence[0].values;
    assert_eq!(values[0], ("chi_ig_ab".to_string(), 3));
    // the shared apex is vertex 8; its deletion raises the value by three
    assert_eq!(values[1 + 8].1, 6);
    assert!(values[1..]
        .iter()
        .enumerate()
        .all(|(x, (_, v))| *v == if x == 8 { 6 } else { 4 }));
}

#[test]
fn unrepresentable_instance_is_undecided() {
    let ctx = ctx(true);
    let r = run_claim("prop-5.4", &family(2), &ctx).unwrap();
    assert!(matches!(r.status, Status::Undecided { budget: None, .. }));
}

#[test]
fn budget_exhaustion_is_undecided() {
    let ctx = Context::new(
        SolverConfig {
            state_budget: Some(5),
            ..SolverConfig::default()
        },
        false,
    );
    let r = run_claim("prop-5.1", &Params::default(), &ctx).unwrap();
    assert_eq!(
        r.status,
        Status::Undecided {
            budget: Some(5),
            reason: "state budget of 5 exhausted".into()
        }
    );
}

#[test]
fn reports_are_stable_across_runs() {
    let a = run_claim("thm-5.5", &census(6), &ctx(false)).unwrap();
    let b = run_claim("thm-5.5", &census(6), &ctx(false)).unwrap();
    assert_eq!(a.status, b.status);
    assert_eq!(a.checked, b.checked);
    assert_eq!(a.evidence, b.evidence);
    let json = serde_json::to_value(&a).unwrap();
    assert_eq!(json["parameters"], serde_json::json!({ "census_order": 6 }));
}
