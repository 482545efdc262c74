//! Registry of checkable statements about the four game invariants, each bound
//! to an exhaustive computation.

use std::collections::BTreeSet;
use std::sync::Mutex;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use gvcrit::canon::{automorphism_orbits, canonical_form};
use gvcrit::criticality::CriticalityClass;
use gvcrit::enumeration::{enumerate_up_to, MAX_GENERATED_ORDER};
use gvcrit::families::*;
use gvcrit::game::coloring::ColoringSolver;
use gvcrit::game::independence::IndependenceSolver;
use gvcrit::{
    graph6, Evaluator, Flavor, GameError, Graph, InvariantId, SolveStats, SolverConfig, Variant,
};

use crate::report::{ClaimReport, Evidence, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Profile {
    Quick,
    Full,
}

/// Claim parameters; unset fields take the claim's full-profile default.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    /// Largest order in a census.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census_order: Option<usize>,
    /// Family parameter.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

pub struct ClaimSpec {
    pub id: &'static str,
    pub statement: &'static str,
    /// Registered but only run with an explicit opt-in.
    pub stretch: bool,
    pub in_quick: bool,
    pub quick: Params,
    pub full: Params,
    check: fn(&Context, &Params) -> Result<Verdict, CheckError>,
}

const fn census(quick: usize, full: usize) -> (Params, Params) {
    (
        Params {
            census_order: Some(quick),
            n: None,
        },
        Params {
            census_order: Some(full),
            n: None,
        },
    )
}

const fn family(n: usize) -> (Params, Params) {
    (
        Params {
            census_order: None,
            n: Some(n),
        },
        Params {
            census_order: None,
            n: Some(n),
        },
    )
}

const NONE: (Params, Params) = (
    Params {
        census_order: None,
        n: None,
    },
    Params {
        census_order: None,
        n: None,
    },
);

macro_rules! claim {
    ($id:literal, $stretch:literal, $quick:literal, $params:expr, $check:path, $text:literal) => {
        ClaimSpec {
            id: $id,
            statement: $text,
            stretch: $stretch,
            in_quick: $quick,
            quick: $params.0,
            full: $params.1,
            check: $check,
        }
    };
}

pub static REGISTRY: &[ClaimSpec] = &[
    claim!("prop-3.1", false, false, family(4), two_matching_copies,
        "Two disjoint copies of K_{k,k} - M have chi_g = k, and deleting any vertex gives chi_g = 3, won by opening with color 1 on the matching partner of the deleted vertex (parameter n is k; k >= 5 is stretch)."),
    claim!("prop-3.2", false, false, family(1), matching_gap,
        "K_{n+3,n+3} - M has chi_g = n + 3 and every vertex-deleted subgraph has chi_g = 3."),
    claim!("prop-3.3", false, false, family(1), matching_cone,
        "The cone over K_{n+3,n+3} - M has chi_g = 3; deleting the apex gives n + 3 and deleting any other vertex gives 4."),
    claim!("prop-3.4", false, true, census(6, 7), two_critical_coloring,
        "K2 is the only 2-chi_g-critical graph."),
    claim!("thm-3.5", false, true, census(6, 7), three_lower_coloring,
        "The connected 3-chi_g-lower-critical graphs are exactly P4, C3 and C4."),
    claim!("lemma-4.1", false, true, census(4, 5), indicated_union,
        "chi_i of a disjoint union is the larger of the two values."),
    claim!("prop-4.2", false, true, census(6, 7), indicated_lower_connected,
        "Every chi_i-lower-critical graph is connected."),
    claim!("prop-4.3", false, true, census(6, 7), two_critical_indicated,
        "K2 is the only 2-chi_i-critical graph."),
    claim!("thm-4.4", false, true, census(6, 7), three_lower_indicated,
        "The 3-chi_i-lower-critical graphs are exactly the odd cycles."),
    claim!("prop-4.5", false, true, census(6, 7), indicated_degree_bound,
        "In a chi_i-lower-critical graph every vertex x has degree at least chi_i(G - x)."),
    claim!("thm-4.6", false, true, census(6, 7), four_lower_indicated,
        "Deleting any vertex of a 4-chi_i-lower-critical graph gives chi_i = 3, so such graphs have minimum degree at least 3."),
    claim!("prop-5.1", false, true, NONE, cycle_path_union,
        "C6 + P6 has chi_ig = 3 in both variants and every vertex-deleted subgraph has chi_ig = 2."),
    claim!("prop-5.2", false, true, NONE, independence_gap,
        "K_{n+2,n+2} - M has chi_ig = n + 2 in both variants and every vertex-deleted subgraph has chi_ig = 2 (n = 1 and 2 unless n is given)."),
    claim!("prop-5.3", true, false, family(2), glued_cones,
        "Identifying the apexes of the cones over K_{2n,2n} - M and K_{6,6} - M gives an AB-upper-critical graph with delta set {-1, -2n + 3}."),
    claim!("prop-5.4", true, false, family(2), triangle_cones,
        "Joining the apexes of the cones over K_{2n,2n} - M and two copies of K_{2n+2,2n+2} - M by a triangle gives an AB-mixed-critical graph with delta set {1, -2n + 3, -2n + 1}."),
    claim!("thm-5.5", false, true, census(6, 7), independence_two,
        "For a connected graph with an edge, chi_ig^A = 2 iff chi_ig^AB = 2 iff the graph is bipartite with a vertex adjacent to the whole other side."),
    claim!("prop-5.6", false, true, census(6, 7), two_critical_independence,
        "K2 is the only connected 2-chi_ig-critical graph, in both variants."),
    claim!("lemma-5.7", false, true, census(6, 7), distance_three_opening,
        "In a connected graph, an opening on a vertex with some vertex at distance at least 3 leads to at least 3 rounds, in both variants."),
    claim!("thm-5.8", false, true, census(7, 8), three_lower_independence,
        "The connected 3-chi_ig-lower-critical graphs, in both variants, are exactly C3, C5, P6, K_{3,3} - M and C4+."),
    claim!("fig-1", false, true, NONE, fig1_claim,
        "The nine-vertex fig1 graph has chi_i = 3 while deleting its vertex x gives chi_i = 4."),
];

pub fn find(id: &str) -> Option<&'static ClaimSpec> {
    REGISTRY.iter().find(|c| c.id == id)
}

#[derive(Debug, Error)]
pub enum ClaimError {
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error("invalid parameters for {claim}: {message}")]
    InvalidParameters { claim: String, message: String },
    #[error("{0} is a stretch claim; pass --allow-stretch to run it")]
    StretchNotAllowed(String),
    #[error("solver error in {claim}: {source}")]
    Solver { claim: String, source: GameError },
}

/// Shared state for a verification run.
pub struct Context {
    pub evaluator: Evaluator,
    /// Connected graphs of order 8, used by censuses that reach that order.
    pub order8_connected: Vec<Graph>,
    pub allow_stretch: bool,
    direct: Mutex<SolveStats>,
}

impl Context {
    pub fn new(config: SolverConfig, allow_stretch: bool) -> Self {
        Context {
            evaluator: Evaluator::new(config),
            order8_connected: gvcrit::enumeration::connected_order8(),
            allow_stretch,
            direct: Mutex::new(SolveStats::default()),
        }
    }

    fn config(&self) -> SolverConfig {
        self.evaluator.config().clone()
    }

    fn value(&self, g: &Graph, inv: InvariantId) -> Result<usize, GameError> {
        self.evaluator.value(g, inv)
    }

    fn record(&self, stats: SolveStats) {
        *self.direct.lock().expect("stats lock") += stats;
    }

    fn stats(&self) -> SolveStats {
        let mut s = self.evaluator.stats();
        s += *self.direct.lock().expect("stats lock");
        s
    }

    fn opening_value(&self, g: &Graph, variant: Variant, u: usize) -> Result<usize, GameError> {
        let mut solver = IndependenceSolver::new(self.config());
        let out = solver.game_value(g, variant, Some(u));
        self.record(solver.stats());
        out
    }

    /// The census pool and a description of it.
    fn pool(&self, max_order: usize, connected: bool) -> Result<(Vec<Graph>, String), String> {
        let kind = if connected {
            "connected graphs"
        } else {
            "graphs"
        };
        if max_order == 0 || max_order > 8 || (max_order == 8 && !connected) {
            return Err(format!("no census of {kind} up to order {max_order}"));
        }
        let mut graphs = enumerate_up_to(max_order.min(MAX_GENERATED_ORDER), connected)
            .map_err(|e| e.to_string())?;
        if max_order == 8 {
            graphs.extend(self.order8_connected.iter().cloned());
        }
        let text = format!(
            "all {kind} of order 1..={max_order} ({} graphs)",
            graphs.len()
        );
        Ok((graphs, text))
    }
}

struct Verdict {
    pass: bool,
    checked: String,
    evidence: Vec<Evidence>,
}

enum CheckError {
    Game(GameError),
    BadParams(String),
    /// The instance is outside what the solver can represent.
    Unrepresentable(String),
}

impl From<GameError> for CheckError {
    fn from(e: GameError) -> Self {
        CheckError::Game(e)
    }
}

fn g6(g: &Graph) -> String {
    graph6::emit(g)
}

fn profile_evidence(
    name: impl Into<String>,
    g: &Graph,
    ctx: &Context,
    inv: InvariantId,
) -> Result<(Evidence, Vec<usize>), GameError> {
    let p = ctx.evaluator.delta_profile(g, inv)?;
    let mut e = Evidence::new(name).with(inv.name(), p.base_value);
    let values: Vec<usize> = p.per_vertex.iter().map(|d| d.value).collect();
    for d in &p.per_vertex {
        e = e.with(format!("{inv}(G-{})", d.vertex), d.value);
    }
    Ok((e, values))
}

/// Runs a census of `k`-critical graphs and compares with `expected`.
fn critical_census(
    ctx: &Context,
    params: &Params,
    inv: InvariantId,
    k: usize,
    flavor: Flavor,
    connected: bool,
    expected: impl Fn(usize) -> Vec<Graph>,
) -> Result<Verdict, CheckError> {
    let max_order = params.census_order.expect("census claims have an order");
    let (pool, checked) = match ctx.pool(max_order, connected) {
        Ok(p) => p,
        Err(msg) => return Err(CheckError::BadParams(msg)),
    };
    let found = ctx.evaluator.critical_members(&pool, inv, k, flavor)?;
    let want: BTreeSet<Vec<u8>> = expected(max_order).iter().map(canonical_form).collect();
    let got: BTreeSet<Vec<u8>> = found.iter().map(canonical_form).collect();
    let mut evidence = Vec::new();
    for g in &found {
        let tag = if want.contains(&canonical_form(g)) {
            "expected"
        } else {
            "unexpected"
        };
        evidence.push(Evidence::new(g6(g)).with(inv.name(), k).with(tag, 1));
    }
    for g in expected(max_order) {
        if !got.contains(&canonical_form(&g)) {
            evidence.push(Evidence::new(g6(&g)).with("missing", 1));
        }
    }
    Ok(Verdict {
        pass: want == got,
        checked: format!("{checked}; {} {k}-critical found", found.len()),
        evidence,
    })
}

fn two_matching_copies(ctx: &Context, params: &Params) -> Result<Verdict, CheckError> {
    let k = params.n.expect("family parameter");
    if k < 4 || 2 * k > gvcrit::MAX_ORDER {
        return Err(CheckError::BadParams(format!(
            "k must be in 4..=16, got {k}"
        )));
    }
    if k >= 5 && !ctx.allow_stretch {
        return Err(CheckError::BadParams(format!(
            "k = {k} is a stretch instance; pass --allow-stretch"
        )));
    }
    let h = complete_bipartite_minus_matching(k).expect("k <= 16");
    let g = disjoint_union(&h, &h).expect("order <= 32");
    let base = ctx.value(&g, InvariantId::ChiG)?;
    let mut pass = base == k;
    let mut evidence = vec![Evidence::new(format!("union(KmM{k},KmM{k})")).with("chi_g", base)];
    let orbits = automorphism_orbits(&g);
    for &orbit in &orbits {
        let x = orbit.trailing_zeros() as usize;
        let partner = 2 * k * (x / (2 * k)) + matching_partner(k, x % (2 * k));
        let y = if partner > x { partner - 1 } else { partner };
        let gx = g.delete_vertex(x).expect("in range");
        let value = ctx.value(&gx, InvariantId::ChiG)?;
        let mut solver = ColoringSolver::new(ctx.config());
        let forced = solver.alice_wins(&gx, 3, Some((y, 1)));
        ctx.record(solver.stats());
        let forced = forced?;
        pass &= value == 3 && forced;
        evidence.push(
            Evidence::new(format!("union(KmM{k},KmM{k}) - {x}"))
                .with("chi_g", value)
                .with(
                    format!("alice wins with 3 after (vertex {partner}, color 1)"),
                    forced as i64,
                ),
        );
    }
    Ok(Verdict {
        pass,
        checked: format!(
            "k = {k}, one deleted vertex per orbit ({} orbits)",
            orbits.len()
        ),
        evidence,
    })
}

fn matching_gap(ctx: &Context, params: &Params) -> Result<Verdict, CheckError> {
    let n = params.n.expect("family parameter");
    let Ok(g) = complete_bipartite_minus_matching(n + 3) else {
        return Err(CheckError::BadParams(format!("n = {n} is too large")));
    };
    let (e, deleted) = profile_evidence(format!("KmM{}", n + 3), &g, ctx, InvariantId::ChiG)?;
    let base = e.values[0].1 as usize;
    Ok(Verdict {
        pass: base == n + 3 && deleted.iter().all(|&v| v == 3),
        checked: format!("n = {n}, all {} vertex deletions", g.order()),
        evidence: vec![e],
    })
}

fn matching_cone(ctx: &Context, params: &Params) -> Result<Verdict, CheckError> {
    let n = params.n.expect("family parameter");
    let Ok(g) = complete_bipartite_minus_matching(n + 3).and_then(|h| cone(&h)) else {
        return Err(CheckError::BadParams(format!("n = {n} is too large")));
    };
    let apex = g.order() - 1;
    let (e, deleted) = profile_evidence(format!("cone(KmM{})", n + 3), &g, ctx, InvariantId::ChiG)?;
    let base = e.values[0].1 as usize;
    let others_ok = deleted[..apex].iter().all(|&v| v == 4);
    let deltas: BTreeSet<i64> = deleted.iter().map(|&v| base as i64 - v as i64).collect();
    let want: BTreeSet<i64> = [-1, -(n as i64)].into();
    Ok(Verdict {
        pass: base == 3 && deleted[apex] == n + 3 && others_ok && deltas == want,
        checked: format!(
            "n = {n}, all {} vertex deletions; delta set {deltas:?}",
            g.order()
        ),
        evidence: vec![e],
    })
}

fn only_k2(max_order: usize) -> Vec<Graph> {
    if max_order >= 2 {
        vec![complete(2).expect("K2")]
    } else {
        Vec::new()
    }
}

fn two_critical_coloring(ctx: &Context, params: &Params) -> Result<Verdict, CheckError> {
    critical_census(
        ctx,
        params,
        InvariantId::ChiG,
        2,
        Flavor::Any,
        false,
        only_k2,
    )
}

fn three_lower_coloring(ctx: &Context, params: &Params) -> Result<Verdict, CheckError> {
    critical_census(
        ctx,
        params,
        InvariantId::ChiG,
        3,
        Flavor::Lower,
        true,
        |max| {
            [path(4), cycle(3), cycle(4)]
                .into_iter()
                .map(|g| g.expect("small"))
                .filter(|g| g.order() <= max)
                .collect()
        },
    )
}

fn indicated_union(ctx: &Context, params: &Params) -> Result<Verdict, CheckError> {
    let max = params.census_order.expect("census order");
    if max > 16 {
        return Err(CheckError::BadParams(
            "unions above order 32 are not representable".into(),
        ));
    }
    let (pool, checked) = ctx.pool(max, true).map_err(CheckError::BadParams)?;
    let values = pool
        .iter()
        .map(|g| ctx.value(g, InvariantId::ChiI))
        .collect::<Result<Vec<_>, _>>()?;
    let mut evidence = Vec::new();
    let mut pairs = 0;
    for i in 0..pool.len() {
        for j in i..pool.len() {
            let u = disjoint_union(&pool[i], &pool[j]).expect("order <= 32");
            let v = ctx.value(&u, InvariantId::ChiI)?;
            pairs += 1;
            if v != values[i].max(values[j]) {
                evidence.push(
                    Evidence::new(g6(&u))
                        .with("chi_i", v)
                        .with("chi_i(first)", values[i])
                        .with("chi_i(second)", values[j]),
                );
            }
        }
    }
    Ok(Verdict {
        pass: evidence.is_empty(),
        checked: format!("{pairs} unordered pairs from {checked}"),
        evidence,
    })
}

fn indicated_lower_connected(ctx: &Context, params: &Params) -> Result<Verdict, CheckError> {
    let max = params.census_order.expect("census order");
    let (pool, checked) = ctx.pool(max, false).map_err(CheckError::BadParams)?;
    let mut lower = 0;
    let mut evidence = Vec::new();
    for g in &pool {
        let p = ctx.evaluator.delta_profile(g, InvariantId::ChiI)?;
        if p.class == CriticalityClass::LowerCritical {
            lower += 1;
            if !g.is_connected() {
                evidence.push(Evidence::new(g6(g)).with("chi_i", p.base_value));
            }
        }
    }
    Ok(Verdict {
        pass: evidence.is_empty(),
        checked: format!("{checked}; {lower} chi_i-lower-critical"),
        evidence,
    })
}

fn two_critical_indicated(ctx: &Context, params: &Params) -> Result<Verdict, CheckError> {
    critical_census(
        ctx,
        params,
        InvariantId::ChiI,
        2,
        Flavor::Any,
        false,
        only_k2,
    )
}

fn three_lower_indicated(ctx: &Context, params: &Params) -> Result<Verdict, CheckError> {
    critical_census(
        ctx,
        params,
        InvariantId::ChiI,
        3,
        Flavor::Lower,
        false,
        |max| {
            (3..=max)
                .step_by(2)
                .map(|n| cycle(n).expect("small"))
                .collect()
        },
    )
}

fn indicated_degree_bound(ctx: &Context, params: &Params) -> Result<Verdict, CheckError> {
    let max = params.census_order.expect("census order");
    let (pool, checked) = ctx.pool(max, false).map_err(CheckError::BadParams)?;
    let mut lower = 0;
    let mut evidence = Vec::new();
    for g in &pool {
        let p = ctx.evaluator.delta_profile(g, InvariantId::ChiI)?;
        if p.class != CriticalityClass::LowerCritical {
            continue;
        }
        lower += 1;
        for d in &p.per_vertex {
            if g.degree(d.vertex) < d.value {
                evidence.push(
                    Evidence::new(g6(g))
                        .with("vertex", d.vertex)
                        .with("degree", g.degree(d.vertex))
                        .with("chi_i(G-x)", d.value),
                );
            }
        }
    }
    Ok(Verdict {
        pass: evidence.is_empty(),
        checked: format!("{checked}; {lower} chi_i-lower-critical"),
        evidence,
    })
}

fn four_lower_indicated(ctx: &Context, params: &Params) -> Result<Verdict, CheckError> {
    let max = params.census_order.expect("census order");
    let (pool, checked) = ctx.pool(max, false).map_err(CheckError::BadParams)?;
    let found = ctx
        .evaluator
        .critical_members(&pool, InvariantId::ChiI, 4, Flavor::Lower)?;
    let mut pass = true;
    let mut evidence = Vec::new();
    for g in &found {
        let (e, deleted) = profile_evidence(g6(g), g, ctx, InvariantId::ChiI)?;
        let ok = deleted.iter().all(|&v| v == 3) && g.min_degree() >= 3;
        pass &= ok;
        evidence.push(e.with("min_degree", g.min_degree()));
    }
    Ok(Verdict {
        pass,
        checked: format!("{checked}; {} 4-chi_i-lower-critical found", found.len()),
        evidence,
    })
}

fn cycle_path_union(ctx: &Context, _: &Params) -> Result<Verdict, CheckError> {
    let g = disjoint_union(&cycle(6).expect("C6"), &path(6).expect("P6")).expect("order 12");
    let mut pass = true;
    let mut evidence = Vec::new();
    for inv in [InvariantId::ChiIgA, InvariantId::ChiIgAB] {
        let (e, deleted) = profile_evidence("union(C6,P6)", &g, ctx, inv)?;
        pass &= e.values[0].1 == 3 && deleted.iter().all(|&v| v == 2);
        evidence.push(e);
    }
    Ok(Verdict {
        pass,
        checked: "both variants, all 12 vertex deletions".into(),
        evidence,
    })
}

fn independence_gap(ctx: &Context, params: &Params) -> Result<Verdict, CheckError> {
    let ns: Vec<usize> = match params.n {
        Some(n) => vec![n],
        None => vec![1, 2],
    };
    let mut pass = true;
    let mut evidence = Vec::new();
    for &n in &ns {
        let Ok(g) = complete_bipartite_minus_matching(n + 2) else {
            return Err(CheckError::BadParams(format!("n = {n} is too large")));
        };
        for inv in [InvariantId::ChiIgA, InvariantId::ChiIgAB] {
            let (e, deleted) = profile_evidence(format!("KmM{}", n + 2), &g, ctx, inv)?;
            pass &= e.values[0].1 as usize == n + 2 && deleted.iter().all(|&v| v == 2);
            evidence.push(e);
        }
    }
    Ok(Verdict {
        pass,
        checked: format!("n in {ns:?}, both variants, every vertex deletion"),
        evidence,
    })
}

fn glued_cones(ctx: &Context, params: &Params) -> Result<Verdict, CheckError> {
    let n = params.n.expect("family parameter");
    let Ok(g) = glued_matching_cones(n) else {
        return Err(CheckError::BadParams(format!(
            "n = {n} exceeds the order limit"
        )));
    };
    if n < 2 {
        return Err(CheckError::BadParams("n must be at least 2".into()));
    }
    let (e, deleted) = profile_evidence(
        format!("glue(cone(KmM{}),cone(KmM6))", 2 * n),
        &g,
        ctx,
        InvariantId::ChiIgAB,
    )?;
    let base = e.values[0].1;
    let deltas: BTreeSet<i64> = deleted.iter().map(|&v| base - v as i64).collect();
    let want: BTreeSet<i64> = [-1, 3 - 2 * n as i64].into();
    Ok(Verdict {
        pass: base == 3 && deltas == want,
        checked: format!(
            "n = {n}, order {}, all vertex deletions; delta set {deltas:?}",
            g.order()
        ),
        evidence: vec![e],
    })
}

fn triangle_cones(_: &Context, params: &Params) -> Result<Verdict, CheckError> {
    let n = params.n.expect("family parameter");
    let (order, _, _) =
        triangle_linked_edge_list(n).map_err(|e| CheckError::BadParams(e.to_string()))?;
    if order > gvcrit::MAX_ORDER {
        return Err(CheckError::Unrepresentable(format!(
            "order {order} exceeds the {}-vertex limit",
            gvcrit::MAX_ORDER
        )));
    }
    Err(CheckError::BadParams(
        "the construction needs n >= 2".into(),
    ))
}

fn independence_two(ctx: &Context, params: &Params) -> Result<Verdict, CheckError> {
    let max = params.census_order.expect("census order");
    let (pool, checked) = ctx.pool(max, true).map_err(CheckError::BadParams)?;
    let mut evidence = Vec::new();
    let mut twos = 0;
    for g in pool.iter().filter(|g| g.size() > 0) {
        let a = ctx.value(g, InvariantId::ChiIgA)? == 2;
        let ab = ctx.value(g, InvariantId::ChiIgAB)? == 2;
        let dom = g.has_bipartite_dominating_vertex();
        twos += usize::from(a);
        if a != ab || ab != dom {
            evidence.push(
                Evidence::new(g6(g))
                    .with("chi_ig_a == 2", a as i64)
                    .with("chi_ig_ab == 2", ab as i64)
                    .with("dominating vertex", dom as i64),
            );
        }
    }
    Ok(Verdict {
        pass: evidence.is_empty(),
        checked: format!("{checked} with an edge; {twos} with value 2"),
        evidence,
    })
}

fn two_critical_independence(ctx: &Context, params: &Params) -> Result<Verdict, CheckError> {
    let a = critical_census(
        ctx,
        params,
        InvariantId::ChiIgA,
        2,
        Flavor::Any,
        true,
        only_k2,
    )?;
    let ab = critical_census(
        ctx,
        params,
        InvariantId::ChiIgAB,
        2,
        Flavor::Any,
        true,
        only_k2,
    )?;
    Ok(Verdict {
        pass: a.pass && ab.pass,
        checked: format!("chi_ig_a: {}; chi_ig_ab: {}", a.checked, ab.checked),
        evidence: a.evidence.into_iter().chain(ab.evidence).collect(),
    })
}

fn distance_three_opening(ctx: &Context, params: &Params) -> Result<Verdict, CheckError> {
    let max = params.census_order.expect("census order");
    let (pool, checked) = ctx.pool(max, true).map_err(CheckError::BadParams)?;
    let mut evidence = Vec::new();
    let mut openings = 0;
    for g in &pool {
        for u in 0..g.order() {
            if g.distances_from(u).into_iter().flatten().all(|d| d < 3) {
                continue;
            }
            openings += 1;
            for variant in [Variant::A, Variant::AB] {
                let v = ctx.opening_value(g, variant, u)?;
                if v < 3 {
                    evidence.push(
                        Evidence::new(g6(g))
                            .with("opening", u)
                            .with(format!("{variant:?} rounds"), v),
                    );
                }
            }
        }
    }
    Ok(Verdict {
        pass: evidence.is_empty(),
        checked: format!("{checked}; {openings} openings"),
        evidence,
    })
}

fn three_lower_independence(ctx: &Context, params: &Params) -> Result<Verdict, CheckError> {
    let expected = |max: usize| -> Vec<Graph> {
        [
            cycle(3).expect("C3"),
            cycle(5).expect("C5"),
            path(6).expect("P6"),
            complete_bipartite_minus_matching(3).expect("K33-M"),
            c4_plus(),
        ]
        .into_iter()
        .filter(|g| g.order() <= max)
        .collect()
    };
    let a = critical_census(
        ctx,
        params,
        InvariantId::ChiIgA,
        3,
        Flavor::Lower,
        true,
        expected,
    )?;
    let ab = critical_census(
        ctx,
        params,
        InvariantId::ChiIgAB,
        3,
        Flavor::Lower,
        true,
        expected,
    )?;
    Ok(Verdict {
        pass: a.pass && ab.pass,
        checked: format!("chi_ig_a: {}; chi_ig_ab: {}", a.checked, ab.checked),
        evidence: a.evidence.into_iter().chain(ab.evidence).collect(),
    })
}

fn fig1_claim(ctx: &Context, _: &Params) -> Result<Verdict, CheckError> {
    let g = fig1_graph();
    let base = ctx.value(&g, InvariantId::ChiI)?;
    let without = ctx.value(&g.delete_vertex(FIG1_X).expect("x"), InvariantId::ChiI)?;
    Ok(Verdict {
        pass: base == 3 && without == 4,
        checked: "fig1 and fig1 - x".into(),
        evidence: vec![Evidence::new("fig1")
            .with("chi_i", base)
            .with("chi_i(G-x)", without)],
    })
}

/// Evaluates one claim. Missing parameters take the full-profile defaults.
pub fn run_claim(id: &str, params: &Params, ctx: &Context) -> Result<ClaimReport, ClaimError> {
    let spec = find(id).ok_or_else(|| ClaimError::UnknownClaim(id.to_string()))?;
    if spec.stretch && !ctx.allow_stretch {
        return Err(ClaimError::StretchNotAllowed(id.to_string()));
    }
    let params = Params {
        census_order: params.census_order.or(spec.full.census_order),
        n: params.n.or(spec.full.n),
    };
    let start = Instant::now();
    let before = ctx.stats();
    let outcome = (spec.check)(ctx, &params);
    let mut stats = ctx.stats();
    stats.expanded -= before.expanded;
    stats.memo_hits -= before.memo_hits;
    let (status, checked, mut evidence) = match outcome {
        Ok(v) => (
            if v.pass { Status::Pass } else { Status::Fail },
            v.checked,
            v.evidence,
        ),
        Err(CheckError::Game(GameError::BudgetExhausted(b))) => (
            Status::Undecided {
                budget: Some(b),
                reason: format!("state budget of {b} exhausted"),
            },
            String::from("incomplete"),
            Vec::new(),
        ),
        Err(CheckError::Unrepresentable(reason)) => (
            Status::Undecided {
                budget: None,
                reason,
            },
            String::from("not attempted"),
            Vec::new(),
        ),
        Err(CheckError::Game(source)) => {
            return Err(ClaimError::Solver {
                claim: id.to_string(),
                source,
            })
        }
        Err(CheckError::BadParams(message)) => {
            return Err(ClaimError::InvalidParameters {
                claim: id.to_string(),
                message,
            })
        }
    };
    evidence.sort();
    Ok(ClaimReport {
        claim_id: id.to_string(),
        statement: spec.statement.to_string(),
        parameters: params,
        status,
        checked,
        evidence,
        wall_time_ms: start.elapsed().as_millis() as u64,
        stats,
    })
}

/// Claims selected by a profile; stretch claims only when the context allows them.
pub fn selected(profile: Profile, allow_stretch: bool) -> Vec<&'static ClaimSpec> {
    REGISTRY
        .iter()
        .filter(|c| match profile {
            Profile::Quick => c.in_quick && !c.stretch,
            Profile::Full => !c.stretch || allow_stretch,
        })
        .collect()
}

pub fn run_all(profile: Profile, ctx: &Context) -> Result<Vec<ClaimReport>, ClaimError> {
    selected(profile, ctx.allow_stretch)
        .into_iter()
        .map(|spec| {
            let params = match profile {
                Profile::Quick => spec.quick.clone(),
                Profile::Full => spec.full.clone(),
            };
            run_claim(spec.id, &params, ctx)
        })
        .collect()
}
