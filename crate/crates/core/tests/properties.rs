use proptest::prelude::*;

use hecke_dirac::cohomology::{dirac_cohomology_general, has_nonzero_dirac, SpinChoice};
use hecke_dirac::partition::{
    casimir_scalar, distinct_partitions, dominance_leq, enumerate_partitions, hook_partition, middle_element, transpose, Partition,
};
use hecke_dirac::spin::{associate, classify_spin_types, spin_module_restriction, tensor_with_spin};
use hecke_dirac::unitary::{enumerate_speh_modules, restriction_to_w, UnitaryModule};

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn partition(max_n: usize) -> impl Strategy<Value = Partition> {
    (1..=max_n).prop_flat_map(|n| {
        let ps = enumerate_partitions(n);
        (0..ps.len()).prop_map(move |i| ps[i].clone())
    })
}

fn speh_product(max_n: usize) -> impl Strategy<Value = UnitaryModule> {
    (1..=max_n).prop_flat_map(|n| {
        let xs = enumerate_speh_modules(n);
        (0..xs.len()).prop_map(move |i| xs[i].clone())
    })
}

fn same_size_pair(max_n: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (1..=max_n).prop_flat_map(|n| {
        let ps = enumerate_partitions(n);
        let k = ps.len();
        (0..k, 0..k).prop_map(move |(i, j)| (ps[i].clone(), ps[j].clone()))
    })
}

proptest! {
    #[test]
    fn transpose_is_an_involution(p in partition(14)) {
        prop_assert_eq!(transpose(&transpose(&p)), p.clone());
        prop_assert_eq!(transpose(&p).dimension(), p.dimension());
    }

    #[test]
    fn hooks_partition_the_diagram(p in partition(14)) {
        let h = hook_partition(&p);
        prop_assert_eq!(h.size(), p.size());
        prop_assert_eq!(hook_partition(&transpose(&p)), h);
    }

    #[test]
    fn dominance_is_antisymmetric((a, b) in same_size_pair(9)) {
        prop_assert!(dominance_leq(&a, &a).unwrap());
        let both = dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &a).unwrap();
        prop_assert_eq!(both, a == b);
        prop_assert_eq!(dominance_leq(&a, &b).unwrap(), dominance_leq(&transpose(&b), &transpose(&a)).unwrap());
    }

    #[test]
    fn tensor_with_spin_has_the_right_dimension(p in partition(10)) {
        let n = p.size();
        let s = spin_module_restriction(n).unwrap().total_dimension();
        prop_assert_eq!(tensor_with_spin(&p).unwrap().total_dimension(), p.dimension() * s);
    }

    #[test]
    fn restriction_dimension_is_multinomial(x in speh_product(8)) {
        let r = restriction_to_w(&x).unwrap();
        let total: u64 = r.iter().map(|(p, k)| p.dimension() * k).sum();
        let shapes: Vec<Partition> = x.speh_factors().unwrap().iter().map(|f| f.shape()).collect();
        let mut expected = factorial(x.n());
        for s in &shapes {
            expected = expected / factorial(s.size()) * s.dimension();
        }
        prop_assert_eq!(total, expected);
    }

    #[test]
    fn spin_choice_only_relabels(x in speh_product(9)) {
        prop_assume!(x.n() % 2 == 1);
        let p = dirac_cohomology_general(&x, SpinChoice::Plus).unwrap();
        let m = dirac_cohomology_general(&x, SpinChoice::Minus).unwrap();
        prop_assert!(p.symmetrized_eq(&m));
        prop_assert_eq!(p.total_dimension(), m.total_dimension());
        for (s, k) in p.decomposition.iter() {
            let flipped = if s.is_self_associate() { s.clone() } else { associate(s) };
            prop_assert_eq!(m.decomposition.get(&flipped), k);
        }
    }

    #[test]
    fn nonvanishing_matches_the_closed_form(x in speh_product(9)) {
        let (nonzero, witness) = has_nonzero_dirac(&x);
        let r = dirac_cohomology_general(&x, SpinChoice::default_for(x.n())).unwrap();
        prop_assert_eq!(r.nonzero, nonzero);
        prop_assert_eq!(r.witness, witness);
    }

    #[test]
    fn display_parse_roundtrip(x in speh_product(10)) {
        let back: UnitaryModule = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }
}

#[test]
fn spin_types_fill_the_group_algebra() {
    for n in 1..=14 {
        let total: u64 = classify_spin_types(n).iter().map(|t| t.dimension().pow(2)).sum();
        assert_eq!(total, factorial(n), "n = {n}");
    }
}

#[test]
fn casimir_scalar_is_the_norm_of_the_middle_element() {
    for n in 1..=12 {
        for l in distinct_partitions(n) {
            assert_eq!(casimir_scalar(&l), middle_element(l.as_partition()).norm_squared(), "{l}");
        }
    }
}
