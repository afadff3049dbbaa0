mod common;

use std::fs;
use std::sync::Arc;

use common::fixture;
use sympow::groebner::cache::{self, GbCache};
use sympow::symbolic::{Strategy, SymbolicPowers};
use sympow::Ideal;

fn second_symbolic_power(name: &str) -> Ideal {
    let sp = SymbolicPowers::new(&fixture(name)).unwrap();
    sp.symbolic_power(2, Strategy::ColonPower).unwrap().ideal
}

// The cache registry is process-global, so every scenario runs inside one test.
#[test]
fn disk_cache_round_trip_corruption_and_sharing() {
    let dir = tempfile::tempdir().unwrap();

    let cold = Arc::new(GbCache::with_dir(dir.path()).unwrap());
    cache::install(cold.clone());
    let first = second_symbolic_power("minors-2x3");
    assert!(cold.misses() > 0);
    let entries: Vec<_> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".json"))
        .collect();
    assert!(!entries.is_empty());
    assert!(entries.iter().all(|n| n.len() == 64 + 5 && n[..64].chars().all(|c| c.is_ascii_hexdigit())));

    // Fresh process state, same directory: everything comes from disk.
    let warm = Arc::new(GbCache::with_dir(dir.path()).unwrap());
    cache::install(warm.clone());
    let second = second_symbolic_power("minors-2x3");
    assert!(warm.hits() > 0);
    assert_eq!(warm.misses(), 0);
    assert_eq!(second.gens(), first.gens());
    assert!(second.equal(&first).unwrap());

    // Damaged entries are ignored and recomputed.
    for name in &entries {
        fs::write(dir.path().join(name), b"{ not json").unwrap();
    }
    let repaired = Arc::new(GbCache::with_dir(dir.path()).unwrap());
    cache::install(repaired.clone());
    let third = second_symbolic_power("minors-2x3");
    assert_eq!(third.gens(), first.gens());
    assert!(repaired.misses() >= entries.len());
    for name in &entries {
        let text = fs::read_to_string(dir.path().join(name)).unwrap();
        assert!(serde_json::from_str::<serde_json::Value>(&text).is_ok());
    }

    // Several writers on one directory.
    let shared = Arc::new(GbCache::with_dir(dir.path()).unwrap());
    cache::install(shared);
    let results: Vec<Ideal> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..4).map(|_| s.spawn(|| second_symbolic_power("hankel"))).collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    for r in &results[1..] {
        assert_eq!(r.gens(), results[0].gens());
    }
    cache::uninstall();
    let uncached = second_symbolic_power("hankel");
    assert_eq!(uncached.gens(), results[0].gens());
}
