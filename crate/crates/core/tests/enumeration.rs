//! An independent enumerator of Speh multisets, compared with the library's
//! enumeration and nonvanishing decision.

use std::collections::BTreeSet;

use hecke_dirac::cohomology::has_nonzero_dirac;
use hecke_dirac::partition::{distinct_partitions, hook_partition, Partition};
use hecke_dirac::unitary::{enumerate_speh_modules, SpehFactor, UnitaryModule};

/// All sorted lists of boxes `(m,d)` of total area `n`, built by appending any
/// box and deduplicating.
fn brute_multisets(n: usize) -> BTreeSet<Vec<(usize, usize)>> {
    let mut layers: Vec<BTreeSet<Vec<(usize, usize)>>> = vec![BTreeSet::from([Vec::new()])];
    for size in 1..=n {
        let mut here = BTreeSet::new();
        for m in 1..=size {
            for d in 1..=size / m {
                for prev in &layers[size - m * d] {
                    let mut v = prev.clone();
                    v.push((m, d));
                    v.sort_unstable();
                    here.insert(v);
                }
            }
        }
        layers.push(here);
    }
    layers.swap_remove(n)
}

fn hooks_distinct(v: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut all: Vec<usize> = v
        .iter()
        .flat_map(|&(m, d)| hook_partition(&Partition::rectangle(m, d)).parts().to_vec())
        .collect();
    all.sort_unstable_by(|a, b| b.cmp(a));
    all.windows(2).all(|w| w[0] != w[1]).then_some(all)
}

fn as_module(v: &[(usize, usize)]) -> UnitaryModule {
    UnitaryModule::from_speh(v.iter().map(|&(m, d)| SpehFactor::new(m, d))).unwrap()
}

#[test]
fn enumeration_and_decision_agree_with_brute_force() {
    let mut counts = Vec::new();
    for n in 1..=8 {
        let brute = brute_multisets(n);
        let lib: BTreeSet<UnitaryModule> = enumerate_speh_modules(n).into_iter().collect();
        assert_eq!(lib.len(), enumerate_speh_modules(n).len(), "duplicates at n = {n}");
        let brute_modules: BTreeSet<UnitaryModule> = brute.iter().map(|v| as_module(v)).collect();
        assert_eq!(lib, brute_modules, "n = {n}");

        let strict: BTreeSet<Vec<usize>> = distinct_partitions(n).iter().map(|l| l.parts().to_vec()).collect();
        let mut nonzero = 0;
        for v in &brute {
            let expected = hooks_distinct(v);
            let (got, witness) = has_nonzero_dirac(&as_module(v));
            assert_eq!(got, expected.is_some(), "{v:?}");
            if let Some(h) = expected {
                assert!(strict.contains(&h));
                assert_eq!(witness.unwrap().parts(), h.as_slice());
                nonzero += 1;
            }
        }
        counts.push((brute.len(), nonzero));
    }
    let frozen = [(1, 1), (3, 2), (5, 4), (11, 5), (17, 8), (34, 16), (52, 18), (94, 24)];
    assert_eq!(counts, frozen);
}
