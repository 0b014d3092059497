//! Predictions of graph-class membership, genus and crosscap number from
//! the factor shape of a ring alone.
//!
//! Every prediction carries a citation tag naming the classification it
//! comes from. Matching is order-insensitive: a field times a ring with one
//! nontrivial ideal matches in either factor order.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ring::{FactorShape, RingShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tri {
    Yes,
    No,
    NotCovered,
}

impl Tri {
    fn from_bool(b: bool) -> Tri {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Tri::Yes => Some(true),
            Tri::No => Some(false),
            Tri::NotCovered => None,
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::NotCovered => "not-covered",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GenusClass {
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "1")]
    One,
    #[serde(rename = ">=2")]
    AtLeastTwo,
    #[serde(rename = "not_covered")]
    NotCovered,
}

impl fmt::Display for GenusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenusClass::Zero => "0",
            GenusClass::One => "1",
            GenusClass::AtLeastTwo => ">=2",
            GenusClass::NotCovered => "not-covered",
        })
    }
}

/// Crosscap classes. There is deliberately no class for the value 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CrosscapClass {
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "2")]
    Two,
    #[serde(rename = ">=3")]
    AtLeastThree,
    #[serde(rename = "not_covered")]
    NotCovered,
}

impl fmt::Display for CrosscapClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrosscapClass::Zero => "0",
            CrosscapClass::Two => "2",
            CrosscapClass::AtLeastThree => ">=3",
            CrosscapClass::NotCovered => "not-covered",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedProfile {
    pub split: Tri,
    pub threshold: Tri,
    pub cograph: Tri,
    pub cactus: Tri,
    pub unicyclic: Tri,
    pub planar: Tri,
    pub outerplanar: Tri,
    pub genus_class: GenusClass,
    pub crosscap_class: CrosscapClass,
    /// Stronger statements that do not fit the class, such as a genus of at
    /// least three for five or more factors.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Classification tags per field.
    pub citations: BTreeMap<String, Vec<String>>,
}

impl PredictedProfile {
    /// Checks the implications that must hold between the fields.
    pub fn consistency_violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.threshold == Tri::Yes && (self.split != Tri::Yes || self.cograph != Tri::Yes) {
            out.push("threshold implies split and cograph");
        }
        if self.unicyclic == Tri::Yes && self.cactus != Tri::Yes {
            out.push("unicyclic implies cactus");
        }
        if self.outerplanar == Tri::Yes && self.planar != Tri::Yes {
            out.push("outerplanar implies planar");
        }
        let planar = self.planar == Tri::Yes;
        if planar != (self.genus_class == GenusClass::Zero) || planar != (self.crosscap_class == CrosscapClass::Zero) {
            out.push("planar iff genus 0 iff crosscap 0");
        }
        out
    }
}

fn single_ideal(f: &FactorShape) -> bool {
    !f.is_field && f.nontrivial == 1
}

/// A non-field chain: the local ring is principal.
fn principal(f: &FactorShape) -> bool {
    !f.is_field && f.is_chain
}

/// The lattice looks like that of a local ring: a chain, or a maximal ideal
/// generated by smaller ideals.
fn ring_like(f: &FactorShape) -> bool {
    f.is_chain || f.maximal_decomposes
}

/// One field, the other factor accepted by `pred`.
fn field_times(s: &[FactorShape], pred: impl Fn(&FactorShape) -> bool) -> bool {
    s.len() == 2 && ((s[0].is_field && pred(&s[1])) || (s[1].is_field && pred(&s[0])))
}

pub fn predict_split(shape: &RingShape) -> Tri {
    let s = &shape.factors;
    match s.len() {
        0 | 1 => Tri::NotCovered,
        2 => Tri::from_bool(s.iter().all(|f| f.is_field) || field_times(s, single_ideal)),
        3 => Tri::from_bool(s.iter().all(|f| f.is_field)),
        _ => Tri::No,
    }
}

/// Threshold graphs and cographs coincide on this family.
pub fn predict_threshold_cograph(shape: &RingShape) -> Tri {
    let s = &shape.factors;
    if s.len() < 2 {
        return Tri::NotCovered;
    }
    Tri::from_bool(s.len() == 2 && (s.iter().all(|f| f.is_field) || field_times(s, single_ideal)))
}

pub fn predict_cactus(shape: &RingShape) -> Tri {
    let s = &shape.factors;
    if s.len() < 2 {
        return Tri::NotCovered;
    }
    Tri::from_bool(field_times(s, single_ideal))
}

pub fn predict_unicyclic(shape: &RingShape) -> Tri {
    predict_cactus(shape)
}

fn covered_topologically(shape: &RingShape) -> bool {
    shape.factors.len() >= 2 && shape.factors.iter().all(ring_like)
}

pub fn predict_planar(shape: &RingShape) -> Tri {
    if !covered_topologically(shape) {
        return Tri::NotCovered;
    }
    let s = &shape.factors;
    let fields = shape.field_count();
    let yes = (s.len() == 3 && fields == 3)
        || (s.len() == 2 && fields == 2)
        || (s.len() == 2 && s.iter().all(single_ideal))
        || field_times(s, principal);
    Tri::from_bool(yes)
}

pub fn predict_outerplanar(shape: &RingShape) -> Tri {
    if !covered_topologically(shape) {
        return Tri::NotCovered;
    }
    let s = &shape.factors;
    let fields = shape.field_count();
    let yes = (s.len() == 3 && fields == 3) || (s.len() == 2 && fields == 2) || field_times(s, single_ideal);
    Tri::from_bool(yes)
}

/// The two genus-one shapes, which are also the crosscap-two shapes.
fn toroidal_shape(shape: &RingShape) -> bool {
    let s = &shape.factors;
    let three = s.len() == 3 && shape.field_count() == 2 && s.iter().any(single_ideal);
    let two = s.len() == 2
        && ((principal(&s[0]) && s[0].nontrivial == 2 && single_ideal(&s[1]))
            || (principal(&s[1]) && s[1].nontrivial == 2 && single_ideal(&s[0])));
    three || two
}

pub fn predict_genus_class(shape: &RingShape) -> GenusClass {
    match predict_planar(shape) {
        Tri::NotCovered => GenusClass::NotCovered,
        Tri::Yes => GenusClass::Zero,
        Tri::No if toroidal_shape(shape) => GenusClass::One,
        Tri::No => GenusClass::AtLeastTwo,
    }
}

pub fn predict_crosscap_class(shape: &RingShape) -> CrosscapClass {
    match predict_planar(shape) {
        Tri::NotCovered => CrosscapClass::NotCovered,
        Tri::Yes => CrosscapClass::Zero,
        Tri::No if toroidal_shape(shape) => CrosscapClass::Two,
        Tri::No => CrosscapClass::AtLeastThree,
    }
}

/// Full predicted profile with citations.
pub fn classify(shape: &RingShape) -> PredictedProfile {
    let n = shape.factor_count();
    let mut citations: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut cite = |field: &str, tags: &[&str]| {
        citations.insert(field.to_string(), tags.iter().map(|t| t.to_string()).collect());
    };
    let uncovered = "outside.hypotheses";
    if n < 2 {
        for f in [
            "split",
            "threshold",
            "cograph",
            "cactus",
            "unicyclic",
            "planar",
            "outerplanar",
            "genus_class",
            "crosscap_class",
        ] {
            cite(f, &[uncovered]);
        }
    } else {
        cite(
            "split",
            &[if n == 2 { "split.two_factors" } else { "split.three_or_more_factors" }],
        );
        cite("threshold", &["threshold_cograph.equivalence"]);
        cite("cograph", &["threshold_cograph.equivalence"]);
        cite("cactus", &["cactus.field_times_single_ideal"]);
        cite("unicyclic", &["unicyclic.field_times_single_ideal"]);
        if covered_topologically(shape) {
            cite("planar", &["planar.classification"]);
            cite("outerplanar", &["outerplanar.classification"]);
            let genus: &[&str] = if n >= 5 {
                &["genus.planar_classification", "genus.k55_subdivision"]
            } else {
                &["genus.planar_classification", "genus.one.classification"]
            };
            cite("genus_class", genus);
            cite(
                "crosscap_class",
                &["crosscap.planar_classification", "crosscap.not_projective", "crosscap.two.classification"],
            );
        } else {
            for f in ["planar", "outerplanar", "genus_class", "crosscap_class"] {
                cite(f, &[uncovered]);
            }
        }
    }
    let tc = predict_threshold_cograph(shape);
    let genus_class = predict_genus_class(shape);
    PredictedProfile {
        split: predict_split(shape),
        threshold: tc,
        cograph: tc,
        cactus: predict_cactus(shape),
        unicyclic: predict_unicyclic(shape),
        planar: predict_planar(shape),
        outerplanar: predict_outerplanar(shape),
        genus_class,
        crosscap_class: predict_crosscap_class(shape),
        note: (n >= 5 && genus_class == GenusClass::AtLeastTwo).then(|| "genus at least 3".to_string()),
        citations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ring_of, Family};

    const F: Family = Family::Field;
    const C1: Family = Family::Chain { k: 1 };
    const C2: Family = Family::Chain { k: 2 };
    const C3: Family = Family::Chain { k: 3 };

    fn profile(fams: &[Family]) -> PredictedProfile {
        classify(&ring_of(fams).unwrap().shape_summary())
    }

    #[test]
    fn split_examples() {
        assert_eq!(profile(&[F, F, F]).split, Tri::Yes);
        assert_eq!(profile(&[C1, C1]).split, Tri::No);
        assert_eq!(profile(&[F, C1]).split, Tri::Yes);
        assert_eq!(profile(&[C1, F]).split, Tri::Yes);
        assert_eq!(profile(&[F, F, F, F]).split, Tri::No);
    }

    #[test]
    fn threshold_cactus_examples() {
        assert_eq!(profile(&[F, F]).threshold, Tri::Yes);
        assert_eq!(profile(&[F, F, F]).cograph, Tri::No);
        assert_eq!(profile(&[F, C2]).threshold, Tri::No);
        assert_eq!(profile(&[F, C1]).cactus, Tri::Yes);
        assert_eq!(profile(&[F, F]).cactus, Tri::No);
        assert_eq!(profile(&[C1, C1]).unicyclic, Tri::No);
    }

    #[test]
    fn planarity_examples() {
        assert_eq!(profile(&[F, C3]).planar, Tri::Yes);
        assert_eq!(profile(&[C1, C1]).planar, Tri::Yes);
        assert_eq!(profile(&[F, F, F, F]).planar, Tri::No);
        assert_eq!(profile(&[F, F, F]).outerplanar, Tri::Yes);
        assert_eq!(profile(&[F, C2]).outerplanar, Tri::No);
        assert_eq!(profile(&[C1, C1]).outerplanar, Tri::No);
        assert_eq!(profile(&[F, Family::TwogenFlat { q: 2 }]).planar, Tri::No);
    }

    #[test]
    fn surface_examples() {
        assert_eq!(profile(&[C1, F, F]).genus_class, GenusClass::One);
        assert_eq!(profile(&[C2, C1]).genus_class, GenusClass::One);
        assert_eq!(profile(&[C1, C2]).crosscap_class, CrosscapClass::Two);
        let f5 = profile(&[F, F, F, F, F]);
        assert_eq!(f5.genus_class, GenusClass::AtLeastTwo);
        assert_eq!(f5.note.as_deref(), Some("genus at least 3"));
        assert_eq!(profile(&[F, F, F, F]).crosscap_class, CrosscapClass::AtLeastThree);
        assert_eq!(profile(&[C1, F, F]).crosscap_class, CrosscapClass::Two);
    }

    #[test]
    fn local_rings_not_covered() {
        let p = profile(&[C2]);
        assert_eq!(p.split, Tri::NotCovered);
        assert_eq!(p.genus_class, GenusClass::NotCovered);
        assert!(p.consistency_violations().is_empty());
    }

    #[test]
    fn json_shape() {
        let p = profile(&[F, C3]);
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v["planar"], "yes");
        assert_eq!(v["genus_class"], "0");
        assert_eq!(v["citations"]["planar"][0], "planar.classification");
        let back: PredictedProfile = serde_json::from_value(v).unwrap();
        assert_eq!(back, p);
    }
}
