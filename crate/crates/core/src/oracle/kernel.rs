//! `ker D` and its structure as an `S̃_n`-representation.
//!
//! The kernel is computed exactly. Its character is evaluated on one lift
//! per conjugacy class of `S_n` (both lifts of an element give the same
//! product `χ_{ker D} · conj(χ_S)`), and paired with `χ_μ · χ_S` for every
//! `μ ⊢ n`.

use std::collections::BTreeMap;

use super::clifford::{build_gamma, CliffordRep};
use super::cyclo::Cyclo8;
use super::dirac::{casimir_wtilde, dirac_operator, pin_action};
use super::hmodule::HModuleRep;
use super::linalg::{nullspace, verify_kernel, Kernel};
use super::matrix::ExactMatrix;
use super::perm::{class_representative_word, class_size};
use crate::cohomology::SpinChoice;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::rational::{to_u64, Rational};
use crate::spin::{member_multiplicity, SpinMultiset};
use crate::symfunc::symmetric_character;

pub type PairingVector = BTreeMap<Partition, u64>;

#[derive(Debug, Clone)]
pub struct KernelStructure {
    pub dim: usize,
    /// `⟨χ_{ker D}, χ_μ χ_S⟩` for every `μ ⊢ n`, zeros included.
    pub pairings: PairingVector,
    pub kernel: Kernel,
}

/// Index parity of the chirality operator on `X ⊗ S` for even `n`: the
/// product of all `γ_i` is a multiple of `Z ⊗ ⋯ ⊗ Z`.
fn chirality(index: usize, spin_dim: usize) -> bool {
    (index % spin_dim).count_ones() % 2 == 1
}

/// Exact `ker d` for `d = D` on `X ⊗ S`. For even `n`, `D` exchanges the two
/// chirality eigenspaces, so each half is solved separately.
pub fn dirac_kernel(d: &ExactMatrix, n: usize, spin_dim: usize) -> Kernel {
    let total = d.cols();
    if n % 2 == 1 || spin_dim == 1 {
        return nullspace(d);
    }
    let (odd, even): (Vec<usize>, Vec<usize>) = (0..total).partition(|&i| chirality(i, spin_dim));
    let mut free = Vec::new();
    let mut basis = Vec::new();
    for (cols, rows) in [(&even, &odd), (&odd, &even)] {
        let k = nullspace(&d.submatrix(rows, cols));
        for (f, v) in k.free.iter().zip(k.basis) {
            let mut full = vec![Cyclo8::zero(); total];
            for (c, x) in cols.iter().zip(v) {
                full[*c] = x;
            }
            free.push(cols[*f]);
            basis.push(full);
        }
    }
    Kernel { ambient: total, free, basis }
}

/// `tr(Δ(w̃)|_{ker D})` for `w̃` the lift of a word of simple reflections.
fn kernel_trace(kernel: &Kernel, lifts: &[ExactMatrix], word: &[usize]) -> Cyclo8 {
    let images: Vec<Vec<Cyclo8>> = kernel
        .basis
        .iter()
        .map(|v| word.iter().rev().fold(v.clone(), |acc, &k| lifts[k].mul_vec(&acc)))
        .collect();
    kernel.trace_of(&images)
}

fn to_count(x: &Cyclo8, what: &str) -> Result<u64> {
    x.as_rational()
        .and_then(to_u64)
        .ok_or_else(|| Error::Invariant(format!("{what} = {x} is not a nonnegative integer")))
}

/// `(1/n!) Σ_ρ |C_ρ| tr_V(w̃_ρ) conj(χ_μ(ρ) tr_S(w̃_ρ))` for each `μ`, from
/// traces of `V` on class representatives.
pub fn pair_with_spin_tensors(n: usize, s: &CliffordRep, trace_v: impl Fn(&[usize]) -> Cyclo8) -> Result<PairingVector> {
    let order: u64 = (1..=n as u64).product();
    let classes = enumerate_partitions(n);
    let mut weighted = Vec::with_capacity(classes.len());
    for rho in &classes {
        let word = class_representative_word(rho.parts());
        let tv = trace_v(&word);
        let ts = s.lift_word(&word).trace().conj();
        let w = &tv * &ts;
        weighted.push(w.scale(&Rational::from(class_size(rho.parts()))));
    }
    let mut out = PairingVector::new();
    for mu in &classes {
        let mut acc = Cyclo8::zero();
        for (rho, w) in classes.iter().zip(&weighted) {
            acc += &w.scale(&Rational::from(symmetric_character(mu, rho.parts())));
        }
        let v = acc.scale(&Rational::from_unsigneds(1u64, order));
        out.insert(mu.clone(), to_count(&v, &format!("pairing with σ_{mu}⊗S"))?);
    }
    Ok(out)
}

/// Simple-reflection lifts `Δ(s̃_k)` on `X ⊗ S`.
pub fn pin_lifts(x: &HModuleRep, s: &CliffordRep) -> Vec<ExactMatrix> {
    (0..x.n().saturating_sub(1)).map(|k| pin_action(x, s, k)).collect()
}

pub fn kernel_structure(x: &HModuleRep, s: &CliffordRep) -> Result<KernelStructure> {
    let d = dirac_operator(x, s);
    kernel_structure_with(x, s, &d)
}

pub fn kernel_structure_with(x: &HModuleRep, s: &CliffordRep, d: &ExactMatrix) -> Result<KernelStructure> {
    let kernel = dirac_kernel(d, x.n(), s.dim());
    if !verify_kernel(d, &kernel) {
        return Err(Error::Invariant("computed kernel vector is not annihilated by D".into()));
    }
    let lifts = pin_lifts(x, s);
    let pairings = pair_with_spin_tensors(x.n(), s, |w| kernel_trace(&kernel, &lifts, w))?;
    Ok(KernelStructure { dim: kernel.dim(), pairings, kernel })
}

/// Pairings of a predicted cohomology with every `σ_μ ⊗ S`.
pub fn predicted_pairings(n: usize, h: &SpinMultiset) -> Result<PairingVector> {
    let mut out = PairingVector::new();
    for mu in enumerate_partitions(n) {
        let mut acc = 0;
        for (t, m) in h.iter() {
            acc += m * member_multiplicity(t.lambda(), &mu)?;
        }
        out.insert(mu, acc);
    }
    Ok(out)
}

/// `¼ Δ(Ω_W̃) v = c v` for every kernel vector.
pub fn casimir_on_kernel(x: &HModuleRep, s: &CliffordRep, kernel: &Kernel, c: &Rational) -> bool {
    let omega = casimir_wtilde(x, s).scale(&Cyclo8::from_rational(Rational::from_signeds(1, 4)));
    let c = Cyclo8::from_rational(c.clone());
    kernel.basis.iter().all(|v| omega.mul_vec(v).iter().zip(v).all(|(a, b)| *a == b * &c))
}

/// `dim ker D² = dim ker D`.
pub fn kernel_of_square_matches(d: &ExactMatrix, n: usize, spin_dim: usize, kernel_dim: usize) -> bool {
    // D² preserves chirality, so the halves are again independent.
    let d2 = d.mul(d);
    let dim = if n % 2 == 1 || spin_dim == 1 {
        nullspace(&d2).dim()
    } else {
        let (odd, even): (Vec<usize>, Vec<usize>) = (0..d.cols()).partition(|&i| chirality(i, spin_dim));
        nullspace(&d2.submatrix(&odd, &odd)).dim() + nullspace(&d2.submatrix(&even, &even)).dim()
    };
    dim == kernel_dim
}

/// Both sides of the induction identity for test objects `σ_μ ⊗ 𝒞S`, where
/// `𝒞S` is the full Clifford module (`S⁺ ⊕ S⁻` for odd `n`):
///
/// * left: `⟨σ_μ ⊗ 𝒞S, π ⊗ 𝒞S⟩` over `S̃_n`, from the induced module;
/// * right: `(dim 𝒞S / dim 𝒞S_M) · ⟨σ_μ ⊗ 𝒞S, π_M ⊗ 𝒞S_M⟩` over `S̃_M`,
///   from the factors and the product of the block Clifford modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionCheck {
    pub left: PairingVector,
    pub right: PairingVector,
}

impl InductionCheck {
    pub fn holds(&self) -> bool {
        self.left == self.right
    }
}

fn full_clifford_trace(n: usize, word: &[usize]) -> Cyclo8 {
    let plus = build_gamma(n, SpinChoice::Plus).lift_word(word).trace();
    if n % 2 == 0 {
        plus
    } else {
        &plus + &build_gamma(n, SpinChoice::Minus).lift_word(word).trace()
    }
}

fn full_clifford_dim(n: usize) -> u64 {
    1 << n.div_ceil(2)
}

/// Class representatives of `S_{n₁} × ⋯ × S_{n_r}` as (cycle types per block, size).
fn block_classes(sizes: &[usize]) -> Vec<(Vec<Partition>, u64)> {
    let mut out = vec![(Vec::new(), 1u64)];
    for &k in sizes {
        let mut next = Vec::new();
        for (types, size) in &out {
            for rho in enumerate_partitions(k) {
                let mut t = types.clone();
                let c = class_size(rho.parts());
                t.push(rho);
                next.push((t, size * c));
            }
        }
        out = next;
    }
    out
}

pub fn induction_multiplicity_check(factors: &[HModuleRep], induced: &HModuleRep) -> Result<InductionCheck> {
    let n = induced.n();
    let sizes: Vec<usize> = factors.iter().map(HModuleRep::n).collect();
    if sizes.iter().sum::<usize>() != n {
        return Err(Error::SizeMismatch { left: sizes.iter().sum(), right: n });
    }
    let classes = enumerate_partitions(n);
    let order_n: u64 = (1..=n as u64).product();
    let mut left = PairingVector::new();
    let mut right = PairingVector::new();

    let full: Vec<(u64, Cyclo8, Vec<usize>)> = classes
        .iter()
        .map(|rho| {
            let word = class_representative_word(rho.parts());
            let t = full_clifford_trace(n, &word);
            let w = &induced.word_matrix(&word).trace() * &(&t * &t.conj());
            (class_size(rho.parts()), w, rho.parts().to_vec())
        })
        .collect();

    let order_m: u64 = sizes.iter().map(|&k| (1..=k as u64).product::<u64>()).product();
    let c = Rational::from_unsigneds(full_clifford_dim(n), sizes.iter().map(|&k| full_clifford_dim(k)).product::<u64>());
    let mut blocks = Vec::new();
    for (types, size) in block_classes(&sizes) {
        let mut word = Vec::new();
        let mut cycle_type = Vec::new();
        let mut pi_m = Cyclo8::one();
        let mut cs_m = Cyclo8::one();
        let mut offset = 0;
        for (b, rho) in types.iter().enumerate() {
            let local = class_representative_word(rho.parts());
            pi_m = &pi_m * &factors[b].word_matrix(&local).trace();
            cs_m = &cs_m * &full_clifford_trace(sizes[b], &local);
            word.extend(local.iter().map(|k| k + offset));
            cycle_type.extend_from_slice(rho.parts());
            offset += sizes[b];
        }
        cycle_type.sort_unstable_by(|a, b| b.cmp(a));
        let cs = full_clifford_trace(n, &word);
        let w = &(&pi_m * &cs.conj()) * &cs_m;
        blocks.push((size, w, cycle_type));
    }

    for mu in &classes {
        let mut l = Cyclo8::zero();
        for (size, w, rho) in &full {
            l += &w.scale(&Rational::from(*size as i64 * symmetric_character(mu, rho)));
        }
        let l = l.scale(&Rational::from_unsigneds(1u64, order_n));
        left.insert(mu.clone(), to_count(&l, "induced pairing")?);
        let mut r = Cyclo8::zero();
        for (size, w, rho) in &blocks {
            r += &w.scale(&Rational::from(*size as i64 * symmetric_character(mu, rho)));
        }
        let r = r.scale(&(&c / Rational::from(order_m)));
        right.insert(mu.clone(), to_count(&r, "restricted pairing")?);
    }
    Ok(InductionCheck { left, right })
}
