//! The Dirac operator on `X ⊗ S` and the identities it satisfies.
//!
//! `ω̃_i = π(ε_i) - ½ Σ_{β>0} (β, ε_i) π(s_β)` and `D = Σ_i ω̃_i ⊗ γ_i`.
//! The pin cover acts by `Δ(s̃_β) = π(s_β) ⊗ f_β`.

use std::collections::HashMap;
use std::fmt;

use super::clifford::CliffordRep;
use super::cyclo::Cyclo8;
use super::hmodule::HModuleRep;
use super::matrix::ExactMatrix;
use crate::rational::{q, Rational};

/// Positive roots `e_i - e_j`, `i < j`, in lexicographic order.
pub fn positive_roots(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Where an exact identity first fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub check: String,
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at entry ({}, {})", self.check, self.row, self.col)
    }
}

impl std::error::Error for Mismatch {}

fn compare(check: impl Into<String>, a: &ExactMatrix, b: &ExactMatrix) -> Result<(), Mismatch> {
    match a.first_difference(b) {
        None => Ok(()),
        Some((row, col)) => Err(Mismatch { check: check.into(), row, col }),
    }
}

pub fn omega_tilde(x: &HModuleRep, i: usize) -> ExactMatrix {
    let mut out = x.eps(i).clone();
    let half = Cyclo8::from_rational(q(1, 2));
    for (j, k) in positive_roots(x.n()) {
        let coef = i64::from(i == j) - i64::from(i == k);
        if coef != 0 {
            out = out.sub(&x.reflection(j, k).scale(&half.scale(&Rational::from(coef))));
        }
    }
    out
}

/// `ω̃(v) = Σ vᵢ ω̃ᵢ`.
pub fn omega_tilde_of(x: &HModuleRep, v: &[Rational]) -> ExactMatrix {
    let mut out = ExactMatrix::zeros(x.dim(), x.dim());
    for (i, c) in v.iter().enumerate() {
        if *c != 0u32 {
            out = out.add(&omega_tilde(x, i).scale(&Cyclo8::from_rational(c.clone())));
        }
    }
    out
}

pub fn dirac_operator(x: &HModuleRep, s: &CliffordRep) -> ExactMatrix {
    let d = x.dim() * s.dim();
    (0..x.n()).fold(ExactMatrix::zeros(d, d), |acc, i| acc.add(&omega_tilde(x, i).kron(s.gamma(i))))
}

/// `Σ_a ω̃(u_a) ⊗ γ(u_a)` over the orthonormal basis `u`.
pub fn dirac_operator_in_basis(x: &HModuleRep, s: &CliffordRep, basis: &[Vec<Rational>]) -> ExactMatrix {
    let d = x.dim() * s.dim();
    basis.iter().fold(ExactMatrix::zeros(d, d), |acc, u| {
        let g: Vec<Cyclo8> = u.iter().map(|c| Cyclo8::from_rational(c.clone())).collect();
        acc.add(&omega_tilde_of(x, u).kron(&s.gamma_of(&g)))
    })
}

/// A rational orthonormal basis of `R^n` other than the standard one,
/// rotating the first two coordinates by `(3/5, 4/5)` and the last two by
/// `(5/13, 12/13)`.
pub fn rotated_basis(n: usize) -> Vec<Vec<Rational>> {
    let mut u: Vec<Vec<Rational>> =
        (0..n).map(|i| (0..n).map(|j| Rational::from(u32::from(i == j))).collect()).collect();
    let mut rotate = |a: usize, b: usize, c: Rational, s: Rational| {
        for row in u.iter_mut() {
            let (x, y) = (row[a].clone(), row[b].clone());
            row[a] = &c * &x - &s * &y;
            row[b] = &s * &x + &c * &y;
        }
    };
    if n >= 2 {
        rotate(0, 1, q(3, 5), q(4, 5));
    }
    if n >= 3 {
        rotate(n - 2, n - 1, q(5, 13), q(12, 13));
    }
    u
}

/// `Δ(s̃_k) = π(s_k) ⊗ f_{e_k - e_{k+1}}`.
pub fn pin_action(x: &HModuleRep, s: &CliffordRep, k: usize) -> ExactMatrix {
    x.s(k).kron(&s.simple_lift(k).matrix)
}

/// Ordered pairs of positive roots `(α, β)` with `s_α(β) < 0`. For `α ≠ β`
/// this forces `α - β > 0`, so no unordered pair occurs in both orders.
pub fn casimir_pairs(n: usize) -> Vec<((usize, usize), (usize, usize))> {
    let roots = positive_roots(n);
    let mut out = Vec::new();
    for &a in &roots {
        for &b in &roots {
            let swap = |t: usize| if t == a.0 { a.1 } else if t == a.1 { a.0 } else { t };
            if swap(b.0) > swap(b.1) {
                out.push((a, b));
            }
        }
    }
    out
}

/// `Δ(Ω_W̃)` on `X ⊗ S`: `Σ |α^∨||β^∨| Δ(s̃_α s̃_β)` with the central element
/// acting by `-1` and `|α^∨|² = 2`, i.e.
/// `-Σ π(s_α s_β) ⊗ (γ_i - γ_j)(γ_k - γ_l)`.
pub fn casimir_wtilde(x: &HModuleRep, s: &CliffordRep) -> ExactMatrix {
    let d = x.dim() * s.dim();
    let mut refl: HashMap<(usize, usize), ExactMatrix> = HashMap::new();
    let mut root_gamma: HashMap<(usize, usize), ExactMatrix> = HashMap::new();
    for (i, j) in positive_roots(x.n()) {
        refl.insert((i, j), x.reflection(i, j));
        root_gamma.insert((i, j), s.gamma(i).sub(s.gamma(j)));
    }
    let mut out = ExactMatrix::zeros(d, d);
    for (a, b) in casimir_pairs(x.n()) {
        let term = refl[&a].mul(&refl[&b]).kron(&root_gamma[&a].mul(&root_gamma[&b]));
        out = out.sub(&term);
    }
    out
}

/// `-⟨ν,ν⟩ I + ¼ Δ(Ω_W̃)`.
pub fn d_squared_prediction(x: &HModuleRep, s: &CliffordRep) -> ExactMatrix {
    let d = x.dim() * s.dim();
    ExactMatrix::scalar(d, &-x.central_square()).add(&casimir_wtilde(x, s).scale(&Cyclo8::from_rational(q(1, 4))))
}

/// `D² = -⟨ν,ν⟩ + ¼ Δ(Ω_W̃)` as exact matrices.
pub fn verify_d_squared(x: &HModuleRep, s: &CliffordRep) -> Result<(), Mismatch> {
    let d = dirac_operator(x, s);
    verify_d_squared_with(x, s, &d)
}

pub fn verify_d_squared_with(x: &HModuleRep, s: &CliffordRep, d: &ExactMatrix) -> Result<(), Mismatch> {
    compare("D² identity", &d.mul(d), &d_squared_prediction(x, s))
}

/// `Σ π(ε_i)² = ⟨ν,ν⟩`: the central element `Σ ε_i²` acts by its value at `ν`.
pub fn central_square_check(x: &HModuleRep) -> Result<(), Mismatch> {
    let sum = (0..x.n()).fold(ExactMatrix::zeros(x.dim(), x.dim()), |acc, i| acc.add(&x.eps(i).mul(x.eps(i))));
    compare("Σ ε_i² = ⟨ν,ν⟩", &sum, &ExactMatrix::scalar(x.dim(), &x.central_square()))
}

/// `Δ(s̃_k) D = -D Δ(s̃_k)` for every simple `s̃_k`.
pub fn sign_commutation_check(x: &HModuleRep, s: &CliffordRep) -> Result<(), Mismatch> {
    let d = dirac_operator(x, s);
    sign_commutation_with(x, s, &d)
}

pub fn sign_commutation_with(x: &HModuleRep, s: &CliffordRep, d: &ExactMatrix) -> Result<(), Mismatch> {
    for k in 0..x.n().saturating_sub(1) {
        let a = pin_action(x, s, k);
        compare(format!("sign commutation at s̃_{k}"), &a.mul(d), &d.mul(&a).scale(&Cyclo8::from_int(-1)))?;
    }
    Ok(())
}

/// A diagonal form `G` with `G π(s_k)` symmetric for all `k`, normalized by
/// `G₀₀ = 1`, when one exists (seminormal modules).
pub fn diagonal_invariant_form(x: &HModuleRep) -> Option<Vec<Rational>> {
    let dim = x.dim();
    let mut g: Vec<Option<Rational>> = vec![None; dim];
    g[0] = Some(Rational::from(1));
    let mut stack = vec![0];
    while let Some(a) = stack.pop() {
        let ga = g[a].clone().expect("set");
        for k in 0..x.n().saturating_sub(1) {
            for (b, v) in x.s(k).row(a) {
                if *b == a {
                    continue;
                }
                let back = x.s(k).get(*b, a);
                let (v, back) = (v.as_rational()?, back.as_rational()?.clone());
                if back == 0u32 {
                    return None;
                }
                let gb = &ga * v / back;
                match &g[*b] {
                    Some(old) if *old != gb => return None,
                    Some(_) => {}
                    None => {
                        g[*b] = Some(gb);
                        stack.push(*b);
                    }
                }
            }
        }
    }
    let g: Vec<Rational> = g.into_iter().collect::<Option<_>>()?;
    let gm = ExactMatrix::from_triplets(dim, dim, g.iter().enumerate().map(|(i, v)| (i, i, Cyclo8::from_rational(v.clone()))));
    (0..x.n().saturating_sub(1))
        .all(|k| {
            let m = gm.mul(x.s(k));
            m == m.transpose()
        })
        .then_some(g)
}

/// `ω̃_i^† G = -G ω̃_i` for the form `G`.
pub fn omega_skew_check(x: &HModuleRep, g: &[Rational]) -> Result<(), Mismatch> {
    let dim = x.dim();
    let gm = ExactMatrix::from_triplets(dim, dim, g.iter().enumerate().map(|(i, v)| (i, i, Cyclo8::from_rational(v.clone()))));
    for i in 0..x.n() {
        let w = omega_tilde(x, i);
        compare(format!("ω̃_{i} skew"), &w.conj_transpose().mul(&gm), &gm.mul(&w).scale(&Cyclo8::from_int(-1)))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::SpinChoice;
    use crate::oracle::clifford::build_gamma;
    use crate::oracle::hmodule::{module_matrices, speh_matrices};
    use crate::unitary::SpehFactor;

    fn x(s: &str) -> HModuleRep {
        module_matrices(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn small_dirac_operators() {
        let a11 = x("a(1,1)");
        let s1 = build_gamma(1, SpinChoice::Plus);
        assert!(dirac_operator(&a11, &s1).is_zero());
        assert_eq!(omega_tilde(&a11, 0), *a11.eps(0));
        let a21 = x("a(2,1)");
        let s2 = build_gamma(2, SpinChoice::Unique);
        let d = dirac_operator(&a21, &s2);
        assert!(d.mul(&d).is_zero());
        // trivial module: ω̃ vanishes
        for i in 0..3 {
            assert!(omega_tilde(&x("a(3,1)"), i).is_zero());
            assert!(omega_tilde(&x("a(1,3)"), i).is_zero());
        }
        assert!(verify_d_squared(&a21, &s2).is_ok());
    }

    #[test]
    fn casimir_values() {
        let s2 = build_gamma(2, SpinChoice::Unique);
        assert_eq!(casimir_wtilde(&x("a(1,1)*a(1,1)"), &s2), ExactMatrix::scalar(4, &Cyclo8::from_int(2)));
        assert!(casimir_wtilde(&x("a(1,1)"), &build_gamma(1, SpinChoice::Plus)).is_zero());
        let s4 = build_gamma(4, SpinChoice::Unique);
        assert_eq!(casimir_wtilde(&x("a(2,2)"), &s4), ExactMatrix::scalar(8, &Cyclo8::from_int(8)));
    }

    #[test]
    fn d_squared_small_cases() {
        for spec in ["a(2,2)", "cs(a(1,1),1/4)", "a(1,2)*a(1,2)", "a(2,1)*a(1,1)", "a(3,1)"] {
            let m = x(spec);
            for v in [SpinChoice::Plus, SpinChoice::Minus] {
                let s = build_gamma(m.n(), v);
                assert_eq!(verify_d_squared(&m, &s), Ok(()), "{spec}");
                assert_eq!(sign_commutation_check(&m, &s), Ok(()), "{spec}");
            }
            assert_eq!(central_square_check(&m), Ok(()), "{spec}");
        }
        assert_eq!(x("cs(a(1,1),1/4)").central_square(), Cyclo8::from_rational(q(1, 8)));
    }

    #[test]
    fn casimir_pair_sets() {
        assert_eq!(casimir_pairs(2), vec![((0, 1), (0, 1))]);
        assert_eq!(casimir_pairs(3).len(), 5);
        for n in 2..=6 {
            let pairs = casimir_pairs(n);
            for (a, b) in &pairs {
                assert!(a == b || !pairs.contains(&(*b, *a)));
            }
        }
    }

    #[test]
    fn basis_independence() {
        for spec in ["a(2,2)", "a(2,1)*a(1,1)", "cs(a(1,1),3/8)"] {
            let m = x(spec);
            let s = build_gamma(m.n(), SpinChoice::Plus);
            let u = rotated_basis(m.n());
            assert_eq!(dirac_operator_in_basis(&m, &s, &u), dirac_operator(&m, &s), "{spec}");
        }
    }

    #[test]
    fn invariant_forms_on_speh_modules() {
        for (m, d) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2), (2, 3), (1, 4), (3, 1)] {
            let a = speh_matrices(&SpehFactor::new(m, d)).unwrap();
            let g = diagonal_invariant_form(&a).expect("seminormal form has a diagonal form");
            assert!(g.iter().all(crate::rational::is_positive));
            assert_eq!(omega_skew_check(&a, &g), Ok(()), "a({m},{d})");
        }
    }
}
