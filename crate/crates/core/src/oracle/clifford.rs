//! Clifford modules of `C(R^n)` and the pin cover of `S_n` inside them.
//!
//! `γ_i = i·e_i` where the `e_i` are the Jordan–Wigner Pauli strings on
//! `⌊n/2⌋` qubits; for odd `n` the last generator is `±Z⊗⋯⊗Z`, the sign
//! distinguishing `S^+` from `S^-`. Then `γ_iγ_j + γ_jγ_i = -2δ_{ij}`.

use super::cyclo::Cyclo8;
use super::matrix::ExactMatrix;
use super::perm::Perm;
use crate::cohomology::SpinChoice;

#[derive(Debug, Clone)]
pub struct CliffordRep {
    n: usize,
    variant: SpinChoice,
    gammas: Vec<ExactMatrix>,
}

fn pauli(name: char) -> ExactMatrix {
    let (o, z, i) = (Cyclo8::one(), Cyclo8::zero(), Cyclo8::i());
    match name {
        'I' => ExactMatrix::identity(2),
        'X' => ExactMatrix::from_dense(vec![vec![z.clone(), o.clone()], vec![o, z]]),
        'Y' => ExactMatrix::from_dense(vec![vec![z.clone(), -&i], vec![i, z]]),
        'Z' => ExactMatrix::from_dense(vec![vec![o, z.clone()], vec![z, -Cyclo8::one()]]),
        _ => unreachable!(),
    }
}

fn pauli_string(s: &[char]) -> ExactMatrix {
    s.iter().fold(ExactMatrix::identity(1), |acc, &c| acc.kron(&pauli(c)))
}

/// The spin module for `n`; `variant` picks the sign of `γ_n` when `n` is odd.
pub fn build_gamma(n: usize, variant: SpinChoice) -> CliffordRep {
    let k = n / 2;
    let variant = SpinChoice::resolve(n, Some(variant));
    let mut gammas = Vec::with_capacity(n);
    for j in 0..k {
        for last in ['X', 'Y'] {
            let mut s = vec!['Z'; j];
            s.push(last);
            s.extend(std::iter::repeat_n('I', k - j - 1));
            gammas.push(pauli_string(&s).scale(&Cyclo8::i()));
        }
    }
    if n % 2 == 1 {
        let sign = Cyclo8::from_int(i64::from(variant.sign()));
        gammas.push(pauli_string(&vec!['Z'; k]).scale(&(&Cyclo8::i() * &sign)));
    }
    CliffordRep { n, variant, gammas }
}

impl CliffordRep {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> SpinChoice {
        self.variant
    }

    pub fn dim(&self) -> usize {
        1 << (self.n / 2)
    }

    pub fn gamma(&self, i: usize) -> &ExactMatrix {
        &self.gammas[i]
    }

    pub fn gammas(&self) -> &[ExactMatrix] {
        &self.gammas
    }

    /// `γ(v) = Σ vᵢγᵢ`.
    pub fn gamma_of(&self, v: &[Cyclo8]) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.dim(), self.dim());
        for (g, c) in self.gammas.iter().zip(v) {
            if !c.is_zero() {
                m = m.add(&g.scale(c));
            }
        }
        m
    }

    /// First pair `(i, j)` violating `γᵢγⱼ + γⱼγᵢ = -2δᵢⱼ`.
    pub fn check_relations(&self) -> Option<(usize, usize)> {
        let d = self.dim();
        for i in 0..self.n {
            for j in i..self.n {
                let ac = self.gammas[i].mul(&self.gammas[j]).add(&self.gammas[j].mul(&self.gammas[i]));
                let expected = if i == j { ExactMatrix::scalar(d, &Cyclo8::from_int(-2)) } else { ExactMatrix::zeros(d, d) };
                if ac != expected {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `f_α = (γᵢ - γⱼ)/√2` for `α = eᵢ - eⱼ`, covering the transposition `(i j)`.
    pub fn root_element(&self, i: usize, j: usize) -> PinElement {
        let m = self.gammas[i].sub(&self.gammas[j]).scale(&Cyclo8::inv_sqrt2());
        PinElement { matrix: m, perm: Perm::transposition(self.n, i, j) }
    }

    /// The lift `s̃_k = f_{e_k - e_{k+1}}`.
    pub fn simple_lift(&self, k: usize) -> PinElement {
        self.root_element(k, k + 1)
    }

    /// `τ(w̃)` along a word of simple reflections.
    pub fn lift_word(&self, word: &[usize]) -> PinElement {
        word.iter().fold(PinElement::identity(self.n, self.dim()), |acc, &k| acc.mul(&self.simple_lift(k)))
    }
}

/// An element of the pin cover: its Clifford image and the permutation it covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinElement {
    pub matrix: ExactMatrix,
    pub perm: Perm,
}

impl PinElement {
    pub fn identity(n: usize, dim: usize) -> Self {
        Self { matrix: ExactMatrix::identity(dim), perm: Perm::identity(n) }
    }

    pub fn mul(&self, o: &PinElement) -> PinElement {
        PinElement { matrix: self.matrix.mul(&o.matrix), perm: self.perm.compose(&o.perm) }
    }

    /// The character of `S` at this element.
    pub fn trace(&self) -> Cyclo8 {
        self.matrix.trace()
    }

    /// Checks the twisted adjoint action `-a γ(v) a⁻¹ = γ(p(a)v)` for an odd
    /// element with `a² = -1`, i.e. `a γ(e_m) a = γ(e_{p(a)(m)})`.
    pub fn acts_as_reflection(&self, c: &CliffordRep) -> bool {
        (0..c.n()).all(|m| self.matrix.mul(c.gamma(m)).mul(&self.matrix) == *c.gamma(self.perm.apply(m)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anticommutation() {
        for n in 1..=7 {
            for v in [SpinChoice::Plus, SpinChoice::Minus] {
                let c = build_gamma(n, v);
                assert_eq!(c.dim(), 1 << (n / 2));
                assert_eq!(c.check_relations(), None, "n={n}");
            }
        }
        let c = build_gamma(1, SpinChoice::Plus);
        assert_eq!(c.gamma(0).get(0, 0), Cyclo8::i());
        let c = build_gamma(1, SpinChoice::Minus);
        assert_eq!(c.gamma(0).get(0, 0), -Cyclo8::i());
        assert_eq!(build_gamma(4, SpinChoice::Plus).dim(), 4);
    }

    #[test]
    fn pin_elements() {
        for n in 2..=5 {
            let c = build_gamma(n, SpinChoice::Plus);
            for i in 0..n {
                for j in i + 1..n {
                    let f = c.root_element(i, j);
                    assert_eq!(f.matrix.mul(&f.matrix), ExactMatrix::scalar(c.dim(), &Cyclo8::from_int(-1)));
                    assert!(f.acts_as_reflection(&c));
                }
            }
        }
    }

    #[test]
    fn braid_relation_lifts_to_z() {
        // (s̃_k s̃_{k+1})^3 = z = -1 and (s̃_k)^2 = z; far-apart lifts anticommute
        let c = build_gamma(4, SpinChoice::Unique);
        let minus = ExactMatrix::scalar(4, &Cyclo8::from_int(-1));
        let a = c.simple_lift(0).matrix;
        let b = c.simple_lift(1).matrix;
        assert_eq!(a.mul(&b).pow(3), minus);
        let d = c.simple_lift(2).matrix;
        assert_eq!(a.mul(&d).pow(2), minus);
    }
}
