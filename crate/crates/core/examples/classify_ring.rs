//! Predicted profiles for a handful of rings, with their citation tags.

use pisgraph::classifier::classify;
use pisgraph::ring::{ring_of, Family};

fn main() {
    let rings: [&[Family]; 5] = [
        &[Family::Field, Family::Field, Family::Field],
        &[Family::Field, Family::Chain { k: 1 }],
        &[Family::Chain { k: 1 }, Family::Field, Family::Field],
        &[Family::Chain { k: 2 }, Family::Chain { k: 1 }],
        &[Family::Field; 5],
    ];
    for fams in rings {
        let ring = ring_of(fams).unwrap();
        let p = classify(&ring.shape_summary());
        println!(
            "{:<24} split={} threshold={} cactus={} planar={} outerplanar={} genus={} crosscap={}",
            ring.describe(),
            p.split,
            p.threshold,
            p.cactus,
            p.planar,
            p.outerplanar,
            p.genus_class,
            p.crosscap_class
        );
        if let Some(note) = &p.note {
            println!("{:<24} note: {note}", "");
        }
    }
    let p = classify(&ring_of(&[Family::Chain { k: 1 }, Family::Field, Family::Field]).unwrap().shape_summary());
    println!("{}", serde_json::to_string_pretty(&p).unwrap());
}
