use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{enumerate_family, Budgets, FamilyConfig, HarnessError, Ledger, LedgerEntry};
use crate::classifier::{classify, CrosscapClass, GenusClass, PredictedProfile, Tri};
use crate::graph::{build_pis, SimpleGraph};
use crate::patterns::{classify_graph, find_subdivision, GraphClass, Membership, PatternError, SubdivisionWitness, TopoPattern};
use crate::ring::{RingShape, RingSpec};
use crate::surface::{crosscap_up_to, genus_up_to, SurfaceReport};

/// Genus values above this are not distinguished by any prediction.
const GENUS_CEILING: u32 = 1;
/// Likewise for the crosscap number.
const CROSSCAP_CEILING: u32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Confirmed,
    Refuted,
    Open,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lb: u32,
    pub ub: u32,
}

impl Interval {
    pub fn exact(&self) -> Option<u32> {
        (self.lb == self.ub).then_some(self.lb)
    }
}

/// What direct computation says about the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputedProfile {
    pub split: bool,
    pub threshold: bool,
    pub cograph: bool,
    pub cactus: bool,
    pub unicyclic: bool,
    pub planar: Option<bool>,
    pub outerplanar: Option<bool>,
    /// Exact when the genus is at most one; otherwise only the lower bound
    /// is pushed past one.
    pub genus: Interval,
    /// Same convention with two as the ceiling. `None` for a disconnected
    /// nonplanar graph.
    pub crosscap: Option<Interval>,
}

/// Certificates behind the computed profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub classes: Vec<Membership>,
    /// Genus report per component with at least one edge.
    pub genus: Vec<SurfaceReport>,
    pub crosscap: Option<SurfaceReport>,
    /// A K5 or K3,3 subdivision, when one was found.
    pub kuratowski: Option<SubdivisionWitness>,
    /// A K4 or K2,3 subdivision, when one was found.
    pub outer_obstruction: Option<SubdivisionWitness>,
    /// Genus report of the graph plus a vertex adjacent to everything.
    pub apex: Option<SurfaceReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRow {
    pub key: String,
    pub ring: String,
    pub shape: RingShape,
    pub vertices: usize,
    pub edges: usize,
    pub predicted: PredictedProfile,
    pub computed: ComputedProfile,
    pub evidence: Evidence,
    pub checks: BTreeMap<String, Verdict>,
    pub status: RowStatus,
    /// Disagreements between independent procedures; any makes the row fail.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conflicts: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub millis: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub rings: usize,
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    pub reused: usize,
    /// Rows refuting each field.
    pub refuted: BTreeMap<String, usize>,
    pub open: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub config: FamilyConfig,
    pub rows: Vec<VerificationRow>,
    pub summary: Summary,
    /// Problems reading the ledger; they never affect verdicts.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ledger_warnings: Vec<String>,
}

impl VerificationReport {
    /// Fixed-width table, one line per ring.
    pub fn table(&self) -> String {
        const FIELDS: [&str; 10] = [
            "split",
            "threshold",
            "cograph",
            "cactus",
            "unicyclic",
            "planar",
            "outerplanar",
            "genus_class",
            "crosscap_class",
            "not_projective",
        ];
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<32} {:>4} {:>4} {:<12} {:<10} {:<10} refuted",
            "ring", "v", "e", "status", "genus", "crosscap"
        );
        for r in &self.rows {
            let refuted: Vec<&str> = FIELDS
                .iter()
                .copied()
                .filter(|f| r.checks.get(*f) == Some(&Verdict::Refuted))
                .collect();
            let cr = r
                .computed
                .crosscap
                .map_or("?".to_string(), |i| fmt_interval(i, CROSSCAP_CEILING));
            let _ = writeln!(
                out,
                "{:<32} {:>4} {:>4} {:<12} {:<10} {:<10} {}",
                r.ring,
                r.vertices,
                r.edges,
                format!("{:?}", r.status).to_lowercase(),
                fmt_interval(r.computed.genus, GENUS_CEILING),
                cr,
                if refuted.is_empty() { "-".to_string() } else { refuted.join(",") }
            );
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} rings: {} pass, {} fail, {} inconclusive",
            s.rings, s.pass, s.fail, s.inconclusive
        );
        out
    }
}

fn fmt_interval(i: Interval, ceiling: u32) -> String {
    match i.exact() {
        Some(v) => v.to_string(),
        None if i.lb > ceiling => format!(">={}", i.lb),
        None => format!("[{},{}]", i.lb, i.ub),
    }
}

fn tri_verdict(pred: Tri, comp: Option<bool>) -> Verdict {
    match (pred.as_bool(), comp) {
        (Some(p), Some(c)) if p == c => Verdict::Confirmed,
        (Some(_), Some(_)) => Verdict::Refuted,
        _ => Verdict::Open,
    }
}

fn genus_verdict(pred: GenusClass, i: Interval) -> Verdict {
    let (confirm, refute) = match pred {
        GenusClass::Zero => (i.ub == 0, i.lb >= 1),
        GenusClass::One => (i.lb == 1 && i.ub == 1, i.ub == 0 || i.lb >= 2),
        GenusClass::AtLeastTwo => (i.lb >= 2, i.ub <= 1),
        GenusClass::NotCovered => (false, false),
    };
    decide(confirm, refute)
}

fn crosscap_verdict(pred: CrosscapClass, i: Option<Interval>) -> Verdict {
    let Some(i) = i else { return Verdict::Open };
    let (confirm, refute) = match pred {
        CrosscapClass::Zero => (i.ub == 0, i.lb >= 1),
        CrosscapClass::Two => (i.lb == 2 && i.ub == 2, i.ub <= 1 || i.lb >= 3),
        CrosscapClass::AtLeastThree => (i.lb >= 3, i.ub <= 2),
        CrosscapClass::NotCovered => (false, false),
    };
    decide(confirm, refute)
}

/// The crosscap number of a PIS graph is never one.
fn projective_verdict(i: Option<Interval>) -> Verdict {
    let Some(i) = i else { return Verdict::Open };
    decide(i.ub == 0 || i.lb >= 2, i.exact() == Some(1))
}

fn decide(confirm: bool, refute: bool) -> Verdict {
    if refute {
        Verdict::Refuted
    } else if confirm {
        Verdict::Confirmed
    } else {
        Verdict::Open
    }
}

/// First subdivision among `patterns`; `Err` when any search ran out.
fn obstruction(
    g: &SimpleGraph,
    patterns: &[TopoPattern],
    budget: u64,
) -> Result<Option<SubdivisionWitness>, PatternError> {
    for &p in patterns {
        if let Some(w) = find_subdivision(g, p, None, budget)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn with_apex(g: &SimpleGraph) -> SimpleGraph {
    let n = g.vertex_count();
    let mut h = SimpleGraph::new(n + 1);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    for v in 0..n {
        h.add_edge(v, n);
    }
    h
}

/// Combines two planarity verdicts; a disagreement is recorded.
fn agree(a: Option<bool>, b: Option<bool>, what: &str, conflicts: &mut Vec<String>) -> Option<bool> {
    match (a, b) {
        (Some(x), Some(y)) if x != y => {
            conflicts.push(format!("{what}: embedding search says {x}, subdivision search says {y}"));
            None
        }
        (Some(x), _) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

/// Verifies one ring with the given budgets.
pub fn verify_ring(ring: &RingSpec, budgets: &Budgets) -> VerificationRow {
    let start = Instant::now();
    let shape = ring.shape_summary();
    let predicted = classify(&shape);
    let g = build_pis(ring).map(|l| l.graph().clone()).unwrap_or_else(|_| SimpleGraph::new(0));
    let mut notes = Vec::new();
    let mut conflicts = Vec::new();

    let classes: Vec<Membership> = GraphClass::ALL.iter().map(|&c| classify_graph(&g, c)).collect();
    let member = |c: GraphClass| classes.iter().any(|m| m.class == c && m.member);

    // genus per component, deciding planarity on the way
    let mut genus_reports = Vec::new();
    let mut genus = Interval { lb: 0, ub: 0 };
    for comp in g.components() {
        let sub = g.induced(&comp);
        if sub.edge_count() == 0 {
            continue;
        }
        let r = genus_up_to(&sub, budgets.genus, GENUS_CEILING).expect("components are connected");
        genus.lb += r.lower_bound();
        genus.ub += r.upper_bound();
        genus_reports.push(r);
    }
    let embed_planar = if genus.ub == 0 {
        Some(true)
    } else if genus.lb >= 1 {
        Some(false)
    } else {
        None
    };
    let kuratowski = obstruction(&g, &[TopoPattern::K5, TopoPattern::K33], budgets.subdivision);
    let kura_planar = kuratowski.as_ref().ok().map(|w| w.is_none());
    if kuratowski.is_err() {
        notes.push("Kuratowski search ran out of budget".into());
    }
    let planar = agree(embed_planar, kura_planar, "planarity", &mut conflicts);

    let outer = obstruction(&g, &[TopoPattern::K4, TopoPattern::K23], budgets.subdivision);
    let outer_sub = outer.as_ref().ok().map(|w| w.is_none());
    if outer.is_err() {
        notes.push("outerplanarity obstruction search ran out of budget".into());
    }
    let apex = genus_up_to(&with_apex(&g), budgets.genus, 0).ok();
    let apex_planar = apex.as_ref().and_then(|r| {
        if r.upper_bound() == 0 {
            Some(true)
        } else if r.lower_bound() >= 1 {
            Some(false)
        } else {
            None
        }
    });
    let outerplanar = agree(apex_planar, outer_sub, "outerplanarity", &mut conflicts);

    let (crosscap, crosscap_report) = if genus.ub == 0 {
        (Some(Interval { lb: 0, ub: 0 }), None)
    } else if g.is_connected() {
        let r = crosscap_up_to(&g, budgets.crosscap, CROSSCAP_CEILING).expect("graph is connected");
        (
            Some(Interval {
                lb: r.lower_bound(),
                ub: r.upper_bound(),
            }),
            Some(r),
        )
    } else {
        notes.push("crosscap number of a disconnected nonplanar graph is not computed".into());
        (None, None)
    };

    let computed = ComputedProfile {
        split: member(GraphClass::Split),
        threshold: member(GraphClass::Threshold),
        cograph: member(GraphClass::Cograph),
        cactus: member(GraphClass::Cactus),
        unicyclic: member(GraphClass::Unicyclic),
        planar,
        outerplanar,
        genus,
        crosscap,
    };

    let mut checks = BTreeMap::new();
    let mut put = |k: &str, v: Verdict| {
        checks.insert(k.to_string(), v);
    };
    put("split", tri_verdict(predicted.split, Some(computed.split)));
    put("threshold", tri_verdict(predicted.threshold, Some(computed.threshold)));
    put("cograph", tri_verdict(predicted.cograph, Some(computed.cograph)));
    put("cactus", tri_verdict(predicted.cactus, Some(computed.cactus)));
    put("unicyclic", tri_verdict(predicted.unicyclic, Some(computed.unicyclic)));
    put("planar", tri_verdict(predicted.planar, planar));
    put("outerplanar", tri_verdict(predicted.outerplanar, outerplanar));
    put("genus_class", genus_verdict(predicted.genus_class, genus));
    put("crosscap_class", crosscap_verdict(predicted.crosscap_class, crosscap));
    put("not_projective", projective_verdict(crosscap));

    let status = if !conflicts.is_empty() || checks.values().any(|v| *v == Verdict::Refuted)
    {
        RowStatus::Fail
    } else if checks.iter().any(|(k, v)| *v == Verdict::Open && !not_covered(&predicted, k)) {
        RowStatus::Inconclusive
    } else {
        RowStatus::Pass
    };

    VerificationRow {
        key: ring.canonical_key(),
        ring: ring.describe(),
        shape,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        predicted,
        computed,
        evidence: Evidence {
            classes,
            genus: genus_reports,
            crosscap: crosscap_report,
            kuratowski: kuratowski.ok().flatten(),
            outer_obstruction: outer.ok().flatten(),
            apex,
        },
        checks,
        status,
        conflicts,
        notes,
        millis: start.elapsed().as_millis() as u64,
    }
}

/// A not-covered prediction leaves its check open without making the row
/// inconclusive.
fn not_covered(p: &PredictedProfile, field: &str) -> bool {
    match field {
        "split" => p.split == Tri::NotCovered,
        "threshold" => p.threshold == Tri::NotCovered,
        "cograph" => p.cograph == Tri::NotCovered,
        "cactus" => p.cactus == Tri::NotCovered,
        "unicyclic" => p.unicyclic == Tri::NotCovered,
        "planar" => p.planar == Tri::NotCovered,
        "outerplanar" => p.outerplanar == Tri::NotCovered,
        "genus_class" => p.genus_class == GenusClass::NotCovered,
        "crosscap_class" => p.crosscap_class == CrosscapClass::NotCovered,
        _ => false,
    }
}

/// Verifies every ring of the family, optionally reusing and extending a
/// ledger. Rows are reused only when stored with identical budgets.
pub fn verify(cfg: &FamilyConfig, ledger: Option<&Ledger>) -> Result<VerificationReport, HarnessError> {
    let rings = enumerate_family(cfg)?;
    let mut stored: HashMap<String, VerificationRow> = HashMap::new();
    let mut ledger_warnings = Vec::new();
    if let Some(l) = ledger {
        let scan = l.scan()?;
        ledger_warnings.extend(scan.errors.iter().map(|e| e.to_string()));
        for e in scan.entries {
            if e.budgets == cfg.budgets {
                stored.insert(e.key, e.row);
            }
        }
    }

    let slots: Vec<Mutex<Option<VerificationRow>>> = rings
        .iter()
        .map(|r| Mutex::new(stored.get(&r.canonical_key()).cloned()))
        .collect();
    let reused = slots.iter().filter(|s| s.lock().unwrap().is_some()).count();
    let todo: Vec<usize> = (0..rings.len())
        .filter(|&i| slots[i].lock().unwrap().is_none())
        .collect();
    let workers = match cfg.workers {
        0 => std::thread::available_parallelism().map_or(1, |n| n.get()),
        w => w,
    }
    .min(todo.len().max(1));
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let t = next.fetch_add(1, Ordering::Relaxed);
                let Some(&i) = todo.get(t) else { break };
                let row = verify_ring(&rings[i], &cfg.budgets);
                *slots[i].lock().unwrap() = Some(row);
            });
        }
    });
    let rows: Vec<VerificationRow> = slots
        .into_iter()
        .map(|s| s.into_inner().unwrap().expect("every ring verified"))
        .collect();

    if let Some(l) = ledger {
        for &i in &todo {
            l.append(&LedgerEntry {
                key: rows[i].key.clone(),
                budgets: cfg.budgets,
                row: rows[i].clone(),
            })?;
        }
    }

    let mut summary = Summary {
        rings: rows.len(),
        reused,
        ..Summary::default()
    };
    for r in &rows {
        match r.status {
            RowStatus::Pass => summary.pass += 1,
            RowStatus::Fail => summary.fail += 1,
            RowStatus::Inconclusive => summary.inconclusive += 1,
        }
        for (k, v) in &r.checks {
            match v {
                Verdict::Refuted => *summary.refuted.entry(k.clone()).or_default() += 1,
                Verdict::Open => *summary.open.entry(k.clone()).or_default() += 1,
                Verdict::Confirmed => {}
            }
        }
    }
    Ok(VerificationReport {
        config: cfg.clone(),
        rows,
        summary,
        ledger_warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ring_of, Family};

    fn row(fams: &[Family]) -> VerificationRow {
        verify_ring(&ring_of(fams).unwrap(), &Budgets::default())
    }

    #[test]
    fn field_times_chain_is_unicyclic() {
        let r = row(&[Family::Field, Family::Chain { k: 1 }]);
        assert!(r.computed.unicyclic);
        assert_eq!(r.predicted.unicyclic, Tri::Yes);
        assert_eq!(r.status, RowStatus::Pass);
    }

    #[test]
    fn four_fields() {
        let r = row(&[Family::Field; 4]);
        assert_eq!(r.computed.planar, Some(false));
        assert!(r.computed.crosscap.unwrap().lb >= 3);
        assert_eq!(r.status, RowStatus::Pass);
        assert!(r.evidence.kuratowski.is_some());
    }

    #[test]
    fn two_fields_disconnected() {
        let r = row(&[Family::Field, Family::Field]);
        assert_eq!(r.vertices, 2);
        assert_eq!(r.computed.planar, Some(true));
        assert_eq!(r.computed.outerplanar, Some(true));
        assert_eq!(r.status, RowStatus::Pass);
    }

    #[test]
    fn verdict_rules() {
        let i = |lb, ub| Interval { lb, ub };
        assert_eq!(genus_verdict(GenusClass::AtLeastTwo, i(2, 9)), Verdict::Confirmed);
        assert_eq!(genus_verdict(GenusClass::One, i(1, 3)), Verdict::Open);
        assert_eq!(genus_verdict(GenusClass::One, i(0, 0)), Verdict::Refuted);
        assert_eq!(crosscap_verdict(CrosscapClass::AtLeastThree, Some(i(2, 2))), Verdict::Refuted);
        assert_eq!(crosscap_verdict(CrosscapClass::Two, Some(i(2, 5))), Verdict::Open);
        assert_eq!(projective_verdict(Some(i(1, 1))), Verdict::Refuted);
        assert_eq!(projective_verdict(Some(i(1, 4))), Verdict::Open);
    }
}
