use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::ring::{ring_of, Family, RingSpec};

/// Search budgets in nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Budgets {
    pub genus: u64,
    pub crosscap: u64,
    pub subdivision: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            genus: 2_000_000,
            crosscap: 2_000_000,
            subdivision: 2_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyConfig {
    pub templates: Vec<Family>,
    pub n_max: usize,
    pub max_vertices: usize,
    #[serde(default)]
    pub budgets: Budgets,
    /// Worker threads; 0 picks the available parallelism.
    #[serde(default)]
    pub workers: usize,
}

impl FamilyConfig {
    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |m: &str| Err(HarnessError::BadConfig(m.to_string()));
        if self.templates.is_empty() {
            return bad("no templates");
        }
        if self.n_max < 2 {
            return bad("n_max must be at least 2");
        }
        if self.max_vertices < 2 {
            return bad("max_vertices must be at least 2");
        }
        let b = self.budgets;
        if b.genus == 0 || b.crosscap == 0 || b.subdivision == 0 {
            return bad("budgets must be positive");
        }
        for t in &self.templates {
            ring_of(&[*t, Family::Field]).map_err(|e| HarnessError::BadConfig(format!("{}: {e}", t.tag())))?;
        }
        Ok(())
    }
}

/// Number of nonzero proper ideals of the product.
pub fn vertex_count(fams: &[Family]) -> usize {
    fams.iter().map(|f| f.element_count()).product::<usize>() - 2
}

/// All multisets of templates with `2 <= n <= n_max` factors under the vertex
/// cap, by factor count and then by template order. Products that are
/// isomorphic up to factor order appear once.
pub fn enumerate_family(cfg: &FamilyConfig) -> Result<Vec<RingSpec>, HarnessError> {
    cfg.validate()?;
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for n in 2..=cfg.n_max {
        let mut idx = vec![0usize; n];
        loop {
            let fams: Vec<Family> = idx.iter().map(|&i| cfg.templates[i]).collect();
            if vertex_count(&fams) <= cfg.max_vertices {
                let ring = ring_of(&fams).map_err(|e| HarnessError::BadConfig(e.to_string()))?;
                if seen.insert(ring.multiset_key()) {
                    out.push(ring);
                }
            }
            // next non-decreasing index tuple
            let Some(pos) = (0..n).rev().find(|&p| idx[p] + 1 < cfg.templates.len()) else {
                break;
            };
            let v = idx[pos] + 1;
            for slot in &mut idx[pos..] {
                *slot = v;
            }
        }
    }
    Ok(out)
}
