//! The verification battery: every module in range, every spin variant.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::clifford::build_gamma;
use super::dirac::{central_square_check, dirac_operator, sign_commutation_with, verify_d_squared_with};
use super::hmodule::module_matrices;
use super::kernel::{casimir_on_kernel, kernel_of_square_matches, kernel_structure_with, predicted_pairings};
use crate::cohomology::{dirac_cohomology_general, spherical_module, SpinChoice};
use crate::error::{Error, Result};
use crate::partition::{casimir_scalar, DistinctPartition};
use crate::rational::q;
use crate::unitary::{enumerate_speh_modules, ComplementaryFactor, Factor, SpehFactor, UnitaryModule};

/// Largest `n` the battery accepts.
pub const ORACLE_MAX_N: usize = 6;

/// Largest `n` for induced Speh products.
pub const PRODUCT_MAX_N: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TaskFilter {
    #[default]
    All,
    /// Only the `D²` identity (and the relations checked on construction).
    D2Only,
}

impl std::str::FromStr for TaskFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(TaskFilter::All),
            "d2-only" => Ok(TaskFilter::D2Only),
            _ => Err(Error::Unsupported(format!("task filter {s:?} (expected all or d2-only)"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BatteryOptions {
    pub max_n: usize,
    pub filter: TaskFilter,
    /// Worker threads; `0` lets the pool decide.
    pub jobs: usize,
}

impl Default for BatteryOptions {
    fn default() -> Self {
        Self { max_n: ORACLE_MAX_N, filter: TaskFilter::All, jobs: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyTask {
    pub module: UnitaryModule,
    pub spin: SpinChoice,
}

/// One line of the report.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TaskRecord {
    pub module: String,
    pub n: usize,
    pub spin: String,
    pub d_squared: String,
    pub kernel_dim: Option<usize>,
    pub predicted_dim: Option<u64>,
    pub pairings_match: Option<bool>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl TaskRecord {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn spins(n: usize) -> Vec<SpinChoice> {
    if n % 2 == 0 {
        vec![SpinChoice::Unique]
    } else {
        vec![SpinChoice::Plus, SpinChoice::Minus]
    }
}

/// The modules of the battery, in report order: single Speh modules, Speh
/// products, complementary series, then the spherical module of `(3,2,1)`.
pub fn battery_modules(max_n: usize) -> Vec<UnitaryModule> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_speh_modules(n).into_iter().filter(|x| x.factors().len() == 1));
    }
    for n in 2..=max_n.min(PRODUCT_MAX_N) {
        out.extend(enumerate_speh_modules(n).into_iter().filter(|x| x.factors().len() > 1));
    }
    for size in 1..=max_n / 2 {
        for m in (1..=size).rev().filter(|m| size % m == 0) {
            for nu in [q(1, 8), q(1, 4), q(3, 8)] {
                let f = ComplementaryFactor { base: SpehFactor::new(m, size / m), nu };
                out.push(UnitaryModule::new(vec![Factor::Complementary(f)]).expect("one factor"));
            }
        }
    }
    if max_n >= 6 {
        out.push(spherical_module(&DistinctPartition::new(vec![3, 2, 1]).expect("strict")));
    }
    out
}

pub fn battery_tasks(max_n: usize) -> Vec<VerifyTask> {
    battery_modules(max_n)
        .into_iter()
        .flat_map(|m| spins(m.n()).into_iter().map(move |spin| VerifyTask { module: m.clone(), spin }))
        .collect()
}

fn fail(failures: &mut Vec<String>, what: impl std::fmt::Display) {
    failures.push(what.to_string());
}

pub fn run_task(task: &VerifyTask, filter: TaskFilter) -> TaskRecord {
    let start = Instant::now();
    let n = task.module.n();
    let mut record = TaskRecord {
        module: task.module.to_string(),
        n,
        spin: task.spin.to_string(),
        d_squared: "fail".into(),
        kernel_dim: None,
        predicted_dim: None,
        pairings_match: None,
        elapsed_ms: 0,
        failures: Vec::new(),
    };
    let mut failures = Vec::new();
    match module_matrices(&task.module) {
        Err(e) => fail(&mut failures, e),
        Ok(x) => {
            let s = build_gamma(n, task.spin);
            let d = dirac_operator(&x, &s);
            match verify_d_squared_with(&x, &s, &d) {
                Ok(()) => record.d_squared = "ok".into(),
                Err(e) => fail(&mut failures, e),
            }
            if filter == TaskFilter::All {
                if let Err(e) = central_square_check(&x) {
                    fail(&mut failures, e);
                }
                if let Err(e) = sign_commutation_with(&x, &s, &d) {
                    fail(&mut failures, e);
                }
                match (kernel_structure_with(&x, &s, &d), dirac_cohomology_general(&task.module, task.spin)) {
                    (Ok(k), Ok(h)) => {
                        record.kernel_dim = Some(k.dim);
                        record.predicted_dim = Some(h.total_dimension());
                        if k.dim as u64 != h.total_dimension() {
                            fail(&mut failures, format!("dim ker D = {} but predicted {}", k.dim, h.total_dimension()));
                        }
                        match predicted_pairings(n, &h.decomposition) {
                            Ok(p) => {
                                record.pairings_match = Some(p == k.pairings);
                                if p != k.pairings {
                                    fail(&mut failures, "pairing vectors differ");
                                }
                            }
                            Err(e) => fail(&mut failures, e),
                        }
                        if let Some(lambda) = &h.witness {
                            if !casimir_on_kernel(&x, &s, &k.kernel, &casimir_scalar(lambda)) {
                                fail(&mut failures, format!("¼Ω_W̃ is not ⟨χ_{lambda},χ_{lambda}⟩ on ker D"));
                            }
                        }
                        if !kernel_of_square_matches(&d, n, s.dim(), k.dim) {
                            fail(&mut failures, "ker D² ≠ ker D");
                        }
                    }
                    (Err(e), _) | (_, Err(e)) => fail(&mut failures, e),
                }
            }
        }
    }
    record.failures = failures;
    record.elapsed_ms = start.elapsed().as_millis() as u64;
    record
}

/// Runs the battery; records come back in task order.
pub fn run_battery(opts: &BatteryOptions) -> Result<Vec<TaskRecord>> {
    run_tasks(&battery_tasks(check_bound(opts.max_n)?), opts)
}

pub fn check_bound(max_n: usize) -> Result<usize> {
    if max_n > ORACLE_MAX_N {
        return Err(Error::BoundExceeded { what: "oracle n", value: max_n, max: ORACLE_MAX_N });
    }
    Ok(max_n)
}

pub fn run_tasks(tasks: &[VerifyTask], opts: &BatteryOptions) -> Result<Vec<TaskRecord>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
    Ok(pool.install(|| tasks.par_iter().map(|t| run_task(t, opts.filter)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn task_lists() {
        let names: Vec<String> = battery_modules(2).iter().map(ToString::to_string).collect();
        assert_eq!(
            names,
            ["a(1,1)", "a(2,1)", "a(1,2)", "a(1,1)*a(1,1)", "cs(a(1,1),1/8)", "cs(a(1,1),1/4)", "cs(a(1,1),3/8)"]
        );
        assert_eq!(battery_tasks(1).len(), 2);
        assert!(battery_modules(6).iter().any(|m| m.to_string() == "a(3,1)*a(2,1)*a(1,1)"));
        assert!(check_bound(7).is_err());
    }

    #[test]
    fn small_battery_passes() {
        let records = run_battery(&BatteryOptions { max_n: 3, filter: TaskFilter::All, jobs: 2 }).unwrap();
        for r in &records {
            assert!(r.passed(), "{r:?}");
        }
        let d2 = run_battery(&BatteryOptions { max_n: 2, filter: TaskFilter::D2Only, jobs: 1 }).unwrap();
        assert!(d2.iter().all(|r| r.d_squared == "ok" && r.kernel_dim.is_none()));
    }
}
