//! Acceptance battery: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. All comparisons are exact; the tolerance is pinned at 0.

use std::collections::BTreeMap;
use std::time::Instant;

use hecke_dirac::cohomology::{
    allowed_central_characters, dirac_cohomology_general, dirac_cohomology_speh, dirac_cohomology_speh_literal,
    dirac_cohomology_spherical, dirac_cohomology_spherical_derived, has_nonzero_dirac, SpinChoice,
};
use hecke_dirac::oracle::battery::{run_battery, BatteryOptions, TaskFilter, TaskRecord, ORACLE_MAX_N, PRODUCT_MAX_N};
use hecke_dirac::oracle::kernel::{casimir_on_kernel, induction_multiplicity_check, kernel_structure, predicted_pairings};
use hecke_dirac::oracle::{build_gamma, induce_module, speh_matrices};
use hecke_dirac::partition::{
    casimir_scalar, distinct_partitions, dominance_leq, enumerate_partitions, hook_partition, DistinctPartition,
};
use hecke_dirac::spin::{classify_spin_types, spin_tensor_multiplicity};
use hecke_dirac::symfunc::{g_entry, g_matrix, kostka_foulkes_at_minus_one};
use hecke_dirac::unitary::{enumerate_speh_modules, SpehFactor, UnitaryModule};

/// Exact arithmetic throughout: every comparison must hold with zero slack.
const TOLERANCE: u32 = 0;

type Outcome = Result<String, String>;

fn spins(n: usize) -> Vec<SpinChoice> {
    if n % 2 == 0 {
        vec![SpinChoice::Unique]
    } else {
        vec![SpinChoice::Plus, SpinChoice::Minus]
    }
}

fn speh_in_range() -> Vec<SpehFactor> {
    (1..=ORACLE_MAX_N)
        .flat_map(|m| (1..=ORACLE_MAX_N / m).map(move |d| SpehFactor::new(m, d)))
        .collect()
}

struct Battery {
    records: BTreeMap<(String, String), TaskRecord>,
}

impl Battery {
    fn get(&self, module: &str, spin: SpinChoice) -> Result<&TaskRecord, String> {
        self.records
            .get(&(module.to_string(), spin.to_string()))
            .ok_or_else(|| format!("no battery record for {module} ({spin})"))
    }
}

fn c1_d_squared(b: &Battery) -> Outcome {
    let bad: Vec<_> = b.records.values().filter(|r| r.d_squared != "ok").map(|r| r.module.clone()).collect();
    if bad.is_empty() {
        Ok(format!("D² identity exact on {} module×spin tasks", b.records.len()))
    } else {
        Err(format!("D² identity fails for {bad:?}"))
    }
}

fn c2_speh(notes: &mut Vec<String>) -> Outcome {
    let mut checked = 0;
    for f in speh_in_range() {
        let x = speh_matrices(&f).map_err(|e| e.to_string())?;
        for spin in spins(f.size()) {
            let s = build_gamma(f.size(), spin);
            let k = kernel_structure(&x, &s).map_err(|e| e.to_string())?;
            let h = dirac_cohomology_speh(&f, spin).map_err(|e| e.to_string())?;
            let pred = predicted_pairings(f.size(), &h.decomposition).map_err(|e| e.to_string())?;
            if k.dim as u64 != h.total_dimension() || k.pairings != pred {
                return Err(format!("{f} ({spin}): oracle dim {} vs closed form {}", k.dim, h.total_dimension()));
            }
            if k.dim == 0 {
                return Err(format!("{f}: kernel is zero"));
            }
            let lit = dirac_cohomology_speh_literal(&f, spin).map_err(|e| e.to_string())?;
            let lit_pred = predicted_pairings(f.size(), &lit.decomposition).ok();
            if lit.total_dimension() != h.total_dimension() || lit_pred.as_ref() != Some(&pred) {
                notes.push(format!(
                    "literal Speh formula disagrees with the oracle on {f} ({spin}): literal {} (dim {}), oracle dim {} = {}",
                    lit.decomposition,
                    lit.total_dimension(),
                    k.dim,
                    h.decomposition
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} Speh module×spin cases match the oriented closed form in dimension and pairings"))
}

fn c3_vanishing(b: &Battery) -> Outcome {
    let mut cases: Vec<String> = ["1/8", "1/4", "3/8"].iter().map(|nu| format!("cs(a(1,1),{nu})")).collect();
    cases.push("a(1,2)*a(1,2)".into());
    for c in &cases {
        let x: UnitaryModule = c.parse().map_err(|e: hecke_dirac::Error| e.to_string())?;
        for spin in spins(x.n()) {
            let r = b.get(&x.to_string(), spin)?;
            if r.kernel_dim != Some(0) {
                return Err(format!("{c}: kernel dimension {:?}", r.kernel_dim));
            }
        }
    }
    Ok(format!("ker D = 0 on {}", cases.join(", ")))
}

fn c4_decision(b: &Battery) -> Outcome {
    let mut count = 0;
    for n in 1..=PRODUCT_MAX_N {
        for x in enumerate_speh_modules(n) {
            let (nonzero, _) = has_nonzero_dirac(&x);
            for spin in spins(n) {
                let r = b.get(&x.to_string(), spin)?;
                let k = r.kernel_dim.ok_or("missing kernel")?;
                if nonzero != (k > 0) {
                    return Err(format!("{x} ({spin}): decision {nonzero}, dim ker D = {k}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("decision agrees with the oracle on all {count} Speh multisets×spins with n ≤ {PRODUCT_MAX_N}"))
}

fn c5_casimir() -> Outcome {
    let mut count = 0;
    for f in speh_in_range() {
        let x = speh_matrices(&f).map_err(|e| e.to_string())?;
        let xm = UnitaryModule::from_speh([f.clone()]).map_err(|e| e.to_string())?;
        for spin in spins(f.size()) {
            let h = dirac_cohomology_general(&xm, spin).map_err(|e| e.to_string())?;
            let lambda = h.witness.ok_or(format!("{f}: no witness"))?;
            let s = build_gamma(f.size(), spin);
            let k = kernel_structure(&x, &s).map_err(|e| e.to_string())?;
            if !casimir_on_kernel(&x, &s, &k.kernel, &casimir_scalar(&lambda)) {
                return Err(format!("{f} ({spin}): ¼Ω is not {} on ker D", casimir_scalar(&lambda)));
            }
            count += 1;
        }
    }
    for n in 1..=12 {
        for (lambda, chi) in distinct_partitions(n).iter().zip(allowed_central_characters(n)) {
            if chi.norm_squared() != casimir_scalar(lambda) {
                return Err(format!("⟨χ_{lambda},χ_{lambda}⟩ = {} ≠ {}", chi.norm_squared(), casimir_scalar(lambda)));
            }
        }
    }
    Ok(format!("¼Ω = ⟨χ_λ,χ_λ⟩ on ker D in {count} cases; closed scalar matches for all DP(n), n ≤ 12"))
}

fn c6_g_matrix() -> Outcome {
    for n in 1..=10 {
        let g = g_matrix(n).map_err(|e| e.to_string())?;
        let ps = g.partitions();
        let k = kostka_foulkes_at_minus_one(n);
        for (i, lambda) in ps.iter().enumerate() {
            for (j, mu) in ps.iter().enumerate() {
                let v = g.rows()[i][j];
                if i == j && v != 1 {
                    return Err(format!("g_{{{lambda},{lambda}}} = {v}"));
                }
                if v != 0 && !dominance_leq(mu, lambda).map_err(|e| e.to_string())? {
                    return Err(format!("g_{{{lambda},{mu}}} = {v} but {lambda} does not dominate {mu}"));
                }
                let kg: i64 = (0..ps.len()).map(|t| k[i][t] * g.rows()[t][j]).sum();
                if kg != i64::from(i == j) {
                    return Err(format!("(K(-1)·g)_{{{lambda},{mu}}} = {kg}"));
                }
            }
            let hook = hook_partition(lambda);
            if g_entry(hook.as_partition(), lambda).map_err(|e| e.to_string())? != 1 {
                return Err(format!("g_{{hook({lambda}),{lambda}}} ≠ 1"));
            }
        }
    }
    Ok("unitriangular, hook entries 1, K(-1)·g = I for n ≤ 10".into())
}

fn c7_schur() -> Outcome {
    for n in 1..=12 {
        let total: u128 = classify_spin_types(n).iter().map(|t| u128::from(t.dimension()).pow(2)).sum();
        let fact: u128 = (1..=n as u128).product();
        if total != fact {
            return Err(format!("n={n}: Σ dim² = {total} ≠ {fact}"));
        }
    }
    let mut count = 0;
    for n in 1..=8 {
        for lambda in distinct_partitions(n).into_iter().filter(|l| l.len() > 1) {
            for mu in enumerate_partitions(n) {
                spin_tensor_multiplicity(&lambda, &mu).map_err(|e| format!("({lambda},{mu}): {e}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("Σ dim² = n! for n ≤ 12; {count} tensor multiplicities integral and nonnegative for n ≤ 8"))
}

fn c8_induction() -> Outcome {
    let cases: Vec<Vec<(usize, usize)>> = vec![
        vec![(2, 2)],
        vec![(2, 1), (1, 1)],
        vec![(1, 2), (1, 2)],
        vec![(2, 1), (1, 2)],
        vec![(1, 1), (1, 1), (1, 1)],
        vec![(2, 2), (1, 1)],
        vec![(3, 1), (1, 2)],
    ];
    for case in &cases {
        let parts: Vec<_> = case.iter().map(|&(m, d)| speh_matrices(&SpehFactor::new(m, d)).unwrap()).collect();
        let ind = induce_module(&parts).map_err(|e| e.to_string())?;
        let c = induction_multiplicity_check(&parts, &ind).map_err(|e| e.to_string())?;
        if !c.holds() {
            return Err(format!("{case:?}: left {:?} right {:?}", c.left, c.right));
        }
    }
    Ok(format!("both sides agree on {} inducing data", cases.len()))
}

fn c9_sign(b: &Battery) -> Outcome {
    let bad: Vec<_> = b
        .records
        .values()
        .filter(|r| r.failures.iter().any(|f| f.contains("sign commutation")))
        .map(|r| r.module.clone())
        .collect();
    if bad.is_empty() {
        Ok(format!("Δ(s̃)D = -DΔ(s̃) on all {} tasks", b.records.len()))
    } else {
        Err(format!("sign commutation fails for {bad:?}"))
    }
}

fn c10_triangularity() -> Outcome {
    let mut count = 0;
    for n in 1..=8 {
        for lambda in distinct_partitions(n).into_iter().filter(|l| l.len() > 1) {
            for mu in enumerate_partitions(n) {
                if spin_tensor_multiplicity(&lambda, &mu).map_err(|e| e.to_string())? > 0 {
                    if !dominance_leq(&mu, lambda.as_partition()).map_err(|e| e.to_string())? {
                        return Err(format!("multiplicity of ({lambda},{mu}) positive without dominance"));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} positive multiplicities, all with μ ≤ λ, n ≤ 8"))
}

/// The full battery also covers every other module; it must be clean.
fn battery_clean(b: &Battery) -> Outcome {
    let bad: Vec<_> = b.records.values().filter(|r| !r.passed()).map(|r| format!("{} {:?}", r.module, r.failures)).collect();
    if bad.is_empty() {
        Ok(format!("{} tasks, dimensions and pairings match the general prediction", b.records.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn spherical_arbitration(b: &Battery, notes: &mut Vec<String>) -> Outcome {
    let lambda = DistinctPartition::new(vec![3, 2, 1]).unwrap();
    let derived = dirac_cohomology_spherical_derived(&lambda, SpinChoice::Unique).map_err(|e| e.to_string())?;
    let literal = dirac_cohomology_spherical(6, &lambda, SpinChoice::Unique).map_err(|e| e.to_string())?;
    let x = hecke_dirac::cohomology::spherical_module(&lambda);
    let r = b.get(&x.to_string(), SpinChoice::Unique)?;
    let oracle = r.kernel_dim.ok_or("missing kernel")? as u64;
    if literal.total_dimension() != oracle {
        notes.push(format!(
            "literal spherical formula for (3,2,1) gives dim {} ({}), oracle ker D has dim {oracle}",
            literal.total_dimension(),
            literal.decomposition
        ));
    }
    if derived.total_dimension() != oracle || r.pairings_match != Some(true) {
        return Err(format!("derived {} vs oracle {oracle}", derived.total_dimension()));
    }
    Ok(format!("{x}: oracle dim ker D = {oracle} = derived {}", derived.decomposition))
}

fn main() {
    let start = Instant::now();
    println!("acceptance: exact arithmetic, tolerance {TOLERANCE}");
    let records = run_battery(&BatteryOptions { max_n: ORACLE_MAX_N, filter: TaskFilter::All, jobs: 0 })
        .expect("battery runs");
    let battery = Battery { records: records.into_iter().map(|r| ((r.module.clone(), r.spin.clone()), r)).collect() };
    println!("battery: {} tasks in {:.1}s", battery.records.len(), start.elapsed().as_secs_f64());

    let mut notes = Vec::new();
    let mut results: Vec<(&str, Outcome)> = Vec::new();
    results.push(("1 D² identity", c1_d_squared(&battery)));
    results.push(("2 Speh cohomology", c2_speh(&mut notes)));
    results.push(("3 vanishing cases", c3_vanishing(&battery)));
    results.push(("4 decision procedure", c4_decision(&battery)));
    results.push(("5 Casimir scalar", c5_casimir()));
    results.push(("6 g-matrix", c6_g_matrix()));
    results.push(("7 Schur dimensions", c7_schur()));
    results.push(("8 induction identity", c8_induction()));
    results.push(("9 sign commutation", c9_sign(&battery)));
    results.push(("10 triangularity", c10_triangularity()));
    let extra = [("battery", battery_clean(&battery)), ("spherical (3,2,1)", spherical_arbitration(&battery, &mut notes))];

    let mut failed = 0;
    let labeled = results.iter().map(|r| ("criterion", r)).chain(extra.iter().map(|r| ("check", r)));
    for (kind, (name, r)) in labeled {
        match r {
            Ok(msg) => println!("PASS {kind} {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {kind} {name}: {msg}");
            }
        }
    }
    for n in &notes {
        println!("FLAG {n}");
    }
    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
