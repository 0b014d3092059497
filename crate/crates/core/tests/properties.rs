use std::collections::HashSet;

use pisgraph::classifier::{classify, CrosscapClass, GenusClass, Tri};
use pisgraph::graph::SimpleGraph;
use pisgraph::harness::{enumerate_family, Budgets, FamilyConfig};
use pisgraph::patterns::{check_subdivision, find_subdivision, TopoPattern};
use pisgraph::ring::{Family, FactorShape, RingShape};
use pisgraph::surface::{crosscap_exact, genus_exact, trace_faces, trace_faces_signed, verify_report, Embedding};
use proptest::prelude::*;

fn factor() -> impl Strategy<Value = FactorShape> {
    prop_oneof![
        Just(FactorShape {
            is_field: true,
            nontrivial: 0,
            is_chain: true,
            maximal_decomposes: false,
        }),
        (1usize..5).prop_map(|k| FactorShape {
            is_field: false,
            nontrivial: k,
            is_chain: true,
            maximal_decomposes: false,
        }),
        (3usize..8, any::<bool>()).prop_map(|(k, d)| FactorShape {
            is_field: false,
            nontrivial: k,
            is_chain: false,
            maximal_decomposes: d,
        }),
    ]
}

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = SimpleGraph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    graph(max_n).prop_map(|mut g| {
        // chain the components together
        let comps = g.components();
        for w in comps.windows(2) {
            g.add_edge(w[0][0], w[1][0]);
        }
        g
    })
}

fn euler_identity_holds(g: &SimpleGraph, e: &Embedding) -> bool {
    let t = match e {
        Embedding::Orientable { rotation } => trace_faces(g, rotation).unwrap(),
        Embedding::Signed { rotation } => trace_faces_signed(g, rotation).unwrap(),
    };
    g.vertex_count() as i64 - g.edge_count() as i64 + t.face_count() as i64 == 2 - t.euler_genus
}

proptest! {
    #[test]
    fn profile_is_consistent(factors in proptest::collection::vec(factor(), 1..6)) {
        let p = classify(&RingShape { factors });
        prop_assert!(p.consistency_violations().is_empty(), "{:?}", p.consistency_violations());
    }

    #[test]
    fn profile_ignores_factor_order(mut factors in proptest::collection::vec(factor(), 2..5), rot in 0usize..4) {
        let a = classify(&RingShape { factors: factors.clone() });
        let len = factors.len();
        factors.rotate_left(rot % len);
        let b = classify(&RingShape { factors });
        prop_assert_eq!(a, b);
    }

    #[test]
    fn surface_classes_follow_planarity(factors in proptest::collection::vec(factor(), 2..6)) {
        let p = classify(&RingShape { factors });
        match p.planar {
            Tri::Yes => prop_assert_eq!(p.crosscap_class, CrosscapClass::Zero),
            Tri::No => prop_assert!(matches!(p.crosscap_class, CrosscapClass::Two | CrosscapClass::AtLeastThree)),
            Tri::NotCovered => prop_assert_eq!(p.genus_class, GenusClass::NotCovered),
        }
        prop_assert_eq!(p.genus_class == GenusClass::One, p.crosscap_class == CrosscapClass::Two);
    }

    #[test]
    fn embeddings_certify_themselves(g in connected(7)) {
        let gr = genus_exact(&g, 1_000_000).unwrap();
        let cr = crosscap_exact(&g, 1_000_000).unwrap();
        prop_assert!(verify_report(&g, &gr).is_ok());
        prop_assert!(verify_report(&g, &cr).is_ok());
        for r in [&gr, &cr] {
            if let Some(e) = r.embedding() {
                prop_assert!(euler_identity_holds(&g, e));
            }
        }
        if let (Some(gv), Some(cv)) = (gr.exact(), cr.exact()) {
            prop_assert!(cv <= 2 * gv + 1);
            prop_assert_eq!(gv == 0, cv == 0);
        }
    }

    #[test]
    fn kuratowski_agrees_with_genus_search(g in connected(9)) {
        let planar = genus_exact(&g, 5_000_000).unwrap().exact().map(|v| v == 0);
        let mut obstruction = None;
        for p in [TopoPattern::K5, TopoPattern::K33] {
            if let Some(w) = find_subdivision(&g, p, None, 5_000_000).unwrap() {
                prop_assert!(check_subdivision(&g, &w).is_ok());
                obstruction = Some(w);
                break;
            }
        }
        if let Some(planar) = planar {
            prop_assert_eq!(planar, obstruction.is_none());
        }
    }

    #[test]
    fn enumeration_respects_config(n_max in 2usize..5, cap in 2usize..40, k in 1u32..4) {
        let cfg = FamilyConfig {
            templates: vec![Family::Field, Family::Chain { k }, Family::TwogenFlat { q: 2 }],
            n_max,
            max_vertices: cap,
            budgets: Budgets::default(),
            workers: 1,
        };
        let rings = enumerate_family(&cfg).unwrap();
        let mut keys = HashSet::new();
        for r in &rings {
            prop_assert!((2..=n_max).contains(&r.factor_count()));
            prop_assert!(r.enumerate_vertices().len() <= cap);
            prop_assert!(keys.insert(r.multiset_key()));
        }
    }
}
