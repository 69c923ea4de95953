//! Explicit `ℍ_n`-modules: matrices for `s_k = s_{k,k+1}` and `ε_1, …, ε_n`
//! satisfying `s_k ε_k - ε_{k+1} s_k = 1`.
//!
//! Speh modules come from the seminormal form through
//! `ε_k ↦ Σ_{j>k} s_{kj} + c`; induced modules are built on minimal coset
//! representatives, with the `ε`-action computed by rewriting `ε_i·w` into
//! the normal form `Σ w'·ξ`.

use std::collections::{HashMap, VecDeque};

use super::cyclo::Cyclo8;
use super::matrix::ExactMatrix;
use super::perm::{class_representative_word, class_size, Perm};
use super::young::young_seminormal;
use crate::error::{Error, Result};
use crate::partition::enumerate_partitions;
use crate::rational::Rational;
use crate::symfunc::{symmetric_character, MultiplicityMap};
use crate::unitary::{speh_central_character, CentralCharacter, ComplementaryFactor, Factor, SpehFactor, UnitaryModule};

#[derive(Debug, Clone)]
pub struct HModuleRep {
    n: usize,
    s: Vec<ExactMatrix>,
    eps: Vec<ExactMatrix>,
    central: CentralCharacter,
}

impl HModuleRep {
    /// Builds and verifies a module from generator matrices.
    pub fn new(s: Vec<ExactMatrix>, eps: Vec<ExactMatrix>, central: CentralCharacter) -> Result<Self> {
        let n = eps.len();
        if n == 0 || s.len() + 1 != n {
            return Err(Error::Invariant(format!("{} reflections for {} coordinates", s.len(), n)));
        }
        let m = Self { n, s, eps, central };
        m.check_relations().map_err(Error::Invariant)?;
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.eps[0].rows()
    }

    pub fn s(&self, k: usize) -> &ExactMatrix {
        &self.s[k]
    }

    pub fn eps(&self, i: usize) -> &ExactMatrix {
        &self.eps[i]
    }

    pub fn central_character(&self) -> &CentralCharacter {
        &self.central
    }

    /// `⟨ν,ν⟩ = Σ νᵢ²` as a field element.
    pub fn central_square(&self) -> Cyclo8 {
        let (re, im) = self.central.bilinear_square();
        Cyclo8::gaussian(re, im)
    }

    /// `π(w)` along a word of simple reflections.
    pub fn word_matrix(&self, word: &[usize]) -> ExactMatrix {
        word.iter().fold(ExactMatrix::identity(self.dim()), |acc, &k| acc.mul(&self.s[k]))
    }

    pub fn perm_matrix(&self, w: &Perm) -> ExactMatrix {
        self.word_matrix(&w.reduced_word())
    }

    /// `π(s_{ij})` for `i < j`.
    pub fn reflection(&self, i: usize, j: usize) -> ExactMatrix {
        self.perm_matrix(&Perm::transposition(self.n, i, j))
    }

    /// Adds `shift` to every `ε_i`.
    pub fn shifted(&self, re: &Rational, im: &Rational) -> HModuleRep {
        let c = Cyclo8::gaussian(re.clone(), im.clone());
        let shift = ExactMatrix::scalar(self.dim(), &c);
        let eps = self.eps.iter().map(|e| e.add(&shift)).collect();
        let entries = self.central.entries().iter().map(|(a, b)| (a + re, b + im)).collect();
        HModuleRep { n: self.n, s: self.s.clone(), eps, central: CentralCharacter::from_entries(entries) }
    }

    /// Coxeter relations, commuting `ε`s and the cross relations.
    pub fn check_relations(&self) -> std::result::Result<(), String> {
        let d = self.dim();
        let id = ExactMatrix::identity(d);
        for (k, a) in self.s.iter().enumerate() {
            if a.mul(a) != id {
                return Err(format!("s_{k}² ≠ 1"));
            }
            for (l, b) in self.s.iter().enumerate().skip(k + 1) {
                let m = if l == k + 1 { 3 } else { 2 };
                if a.mul(b).pow(m) != id {
                    return Err(format!("(s_{k} s_{l})^{m} ≠ 1"));
                }
            }
        }
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.eps[i].mul(&self.eps[j]) != self.eps[j].mul(&self.eps[i]) {
                    return Err(format!("ε_{i} and ε_{j} do not commute"));
                }
            }
        }
        for (k, s) in self.s.iter().enumerate() {
            if s.mul(&self.eps[k]).sub(&self.eps[k + 1].mul(s)) != id {
                return Err(format!("s_{k} ε_{k} - ε_{} s_{k} ≠ 1", k + 1));
            }
            for j in (0..self.n).filter(|&j| j != k && j != k + 1) {
                if s.mul(&self.eps[j]) != self.eps[j].mul(s) {
                    return Err(format!("s_{k} and ε_{j} do not commute"));
                }
            }
        }
        Ok(())
    }

    /// `χ_X` on the class of cycle type `rho`.
    pub fn w_character(&self, rho: &[usize]) -> Cyclo8 {
        self.word_matrix(&class_representative_word(rho)).trace()
    }

    /// `[X|_{S_n} : σ_μ]` from traces.
    pub fn w_restriction(&self) -> Result<MultiplicityMap> {
        let n = self.n;
        let order: u64 = (1..=n as u64).product();
        let classes = enumerate_partitions(n);
        let chars: Vec<Cyclo8> = classes.iter().map(|rho| self.w_character(rho.parts())).collect();
        let mut out = MultiplicityMap::new();
        for mu in &classes {
            let mut s = Cyclo8::zero();
            for (rho, c) in classes.iter().zip(&chars) {
                let w = class_size(rho.parts()) as i64 * symmetric_character(mu, rho.parts());
                s += &c.scale(&Rational::from(w));
            }
            let m = s
                .scale(&Rational::from_unsigneds(1u64, order))
                .as_rational()
                .and_then(crate::rational::to_u64)
                .ok_or_else(|| Error::Invariant(format!("non-integral multiplicity of {mu}")))?;
            if m > 0 {
                out.insert(mu.clone(), m);
            }
        }
        Ok(out)
    }
}

/// `a_y(m,d)`: the `(m^d)` seminormal module pulled back through `τ_c`,
/// `c = (d-m)/2`, plus `i·y` on every `ε`.
pub fn speh_matrices(f: &SpehFactor) -> Result<HModuleRep> {
    if f.m == 0 || f.d == 0 {
        return Err(Error::InvalidPartition(vec![f.m, f.d]));
    }
    let rep = young_seminormal(&f.shape());
    let n = f.size();
    let dim = rep.dim();
    // ρ'(s_k) = ρ(s_{n-2-k}) turns the reversed elements Σ_{j>k} s_{kj}
    // into L_{n-1-k}, which is diagonal.
    let s: Vec<ExactMatrix> = (0..n - 1).map(|k| rep.generators[n - 2 - k].clone()).collect();
    let c = f.content_shift();
    let eps = (0..n)
        .map(|k| {
            let diag = rep.contents(n - 1 - k).into_iter().enumerate().map(|(t, x)| {
                (t, t, Cyclo8::gaussian(Rational::from(x) + &c, f.y.clone()))
            });
            ExactMatrix::from_triplets(dim, dim, diag)
        })
        .collect();
    HModuleRep::new(s, eps, speh_central_character(f))
}

/// `ε_i · s_{a₁}⋯s_{a_k} = s_{a₁}⋯s_{a_k} · ε_j + Σ coef · (group element)`,
/// using `ε_i s_a = s_a ε_{s_a(i)} + [i = a] - [i = a+1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub eps_index: usize,
    pub terms: Vec<(i64, Vec<usize>)>,
}

pub fn rewrite_eps(i: usize, word: &[usize]) -> NormalForm {
    let mut idx = i;
    let mut terms = Vec::new();
    for (t, &a) in word.iter().enumerate() {
        let d = i64::from(idx == a) - i64::from(idx == a + 1);
        if d != 0 {
            let mut w = word[..t].to_vec();
            w.extend_from_slice(&word[t + 1..]);
            terms.push((d, w));
        }
        if idx == a {
            idx = a + 1;
        } else if idx == a + 1 {
            idx = a;
        }
    }
    NormalForm { eps_index: idx, terms }
}

/// Block structure of a parabolic subgroup `S_{n₁} × ⋯ × S_{n_r}`.
struct Blocks {
    offsets: Vec<usize>,
    sizes: Vec<usize>,
}

impl Blocks {
    fn n(&self) -> usize {
        self.sizes.iter().sum()
    }

    fn is_minimal(&self, c: &Perm) -> bool {
        self.offsets
            .iter()
            .zip(&self.sizes)
            .all(|(&o, &s)| (o..o + s - 1).all(|k| c.apply(k) < c.apply(k + 1)))
    }

    /// `g = c·h` with `c` minimal and `h` in the parabolic subgroup.
    fn decompose(&self, g: &Perm) -> (Perm, Perm) {
        let mut images = g.images().to_vec();
        for (&o, &s) in self.offsets.iter().zip(&self.sizes) {
            images[o..o + s].sort_unstable();
        }
        let c = Perm::from_images(images);
        let h = c.inverse().compose(g);
        (c, h)
    }

    /// Minimal coset representatives by breadth-first search over simple reflections.
    fn coset_representatives(&self) -> Vec<Perm> {
        let n = self.n();
        let start = Perm::identity(n);
        let mut seen: HashMap<Perm, ()> = HashMap::from([(start.clone(), ())]);
        let mut order = vec![start.clone()];
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for k in 0..n.saturating_sub(1) {
                let next = Perm::simple(n, k).compose(&c);
                if self.is_minimal(&next) && !seen.contains_key(&next) {
                    seen.insert(next.clone(), ());
                    order.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        order
    }
}

/// `ℍ_n ⊗_{ℍ_M} (X₁ ⊠ ⋯ ⊠ X_r)` with `M` the block subgroup of the factor sizes.
pub fn induce_module(factors: &[HModuleRep]) -> Result<HModuleRep> {
    if factors.is_empty() {
        return Err(Error::Empty("induce_module needs at least one factor"));
    }
    if factors.len() == 1 {
        return Ok(factors[0].clone());
    }
    let sizes: Vec<usize> = factors.iter().map(HModuleRep::n).collect();
    let offsets: Vec<usize> = sizes.iter().scan(0, |acc, &s| Some(std::mem::replace(acc, *acc + s))).collect();
    let blocks = Blocks { offsets, sizes };
    let n = blocks.n();
    let dims: Vec<usize> = factors.iter().map(HModuleRep::dim).collect();
    let dim_u: usize = dims.iter().product();
    let embed = |b: usize, m: &ExactMatrix| {
        let before: usize = dims[..b].iter().product();
        let after: usize = dims[b + 1..].iter().product();
        ExactMatrix::identity(before).kron(m).kron(&ExactMatrix::identity(after))
    };
    // Generators of the inducing module ℍ_M.
    let mut local_s: HashMap<usize, ExactMatrix> = HashMap::new();
    let mut local_eps: Vec<ExactMatrix> = Vec::with_capacity(n);
    for (b, f) in factors.iter().enumerate() {
        let o = blocks.offsets[b];
        for k in 0..f.n() - 1 {
            local_s.insert(o + k, embed(b, f.s(k)));
        }
        for i in 0..f.n() {
            local_eps.push(embed(b, f.eps(i)));
        }
    }
    let mut h_cache: HashMap<Perm, ExactMatrix> = HashMap::new();
    let mut pi_m = |h: &Perm| -> ExactMatrix {
        h_cache
            .entry(h.clone())
            .or_insert_with(|| {
                h.reduced_word().iter().fold(ExactMatrix::identity(dim_u), |acc, k| acc.mul(&local_s[k]))
            })
            .clone()
    };

    let reps = blocks.coset_representatives();
    let index: HashMap<Perm, usize> = reps.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
    let dim = reps.len() * dim_u;
    let place = |trip: &mut Vec<(usize, usize, Cyclo8)>, row_block: usize, col_block: usize, m: &ExactMatrix, coef: &Cyclo8| {
        for r in 0..m.rows() {
            for (c, v) in m.row(r) {
                trip.push((row_block * dim_u + r, col_block * dim_u + c, v * coef));
            }
        }
    };

    let one = Cyclo8::one();
    let mut s_mats = Vec::with_capacity(n - 1);
    for k in 0..n - 1 {
        let mut trip = Vec::new();
        for (ci, c) in reps.iter().enumerate() {
            let (c2, h) = blocks.decompose(&Perm::simple(n, k).compose(c));
            let m = pi_m(&h);
            place(&mut trip, index[&c2], ci, &m, &one);
        }
        s_mats.push(ExactMatrix::from_triplets(dim, dim, trip));
    }
    let words: Vec<Vec<usize>> = reps.iter().map(Perm::reduced_word).collect();
    let mut eps_mats = Vec::with_capacity(n);
    for i in 0..n {
        let mut trip = Vec::new();
        for (ci, word) in words.iter().enumerate() {
            let nf = rewrite_eps(i, word);
            place(&mut trip, ci, ci, &local_eps[nf.eps_index], &one);
            for (coef, w) in nf.terms {
                let (c2, h) = blocks.decompose(&Perm::from_word(n, &w));
                let m = pi_m(&h);
                place(&mut trip, index[&c2], ci, &m, &Cyclo8::from_int(coef));
            }
        }
        eps_mats.push(ExactMatrix::from_triplets(dim, dim, trip));
    }
    let entries = factors.iter().flat_map(|f| f.central.entries().iter().cloned()).collect();
    HModuleRep::new(s_mats, eps_mats, CentralCharacter::from_entries(entries))
}

/// `π(a_y(m,d), ν)`: induced from the `+ν` and `-ν` shifts of the base.
pub fn complementary_matrices(f: &ComplementaryFactor) -> Result<HModuleRep> {
    let base = speh_matrices(&f.base)?;
    let zero = Rational::from(0);
    let plus = base.shifted(&f.nu, &zero);
    let minus = base.shifted(&-f.nu.clone(), &zero);
    induce_module(&[plus, minus])
}

/// Matrices for any module in the text grammar.
pub fn module_matrices(x: &UnitaryModule) -> Result<HModuleRep> {
    let parts = x
        .factors()
        .iter()
        .map(|f| match f {
            Factor::Speh(s) => speh_matrices(s),
            Factor::Complementary(c) => complementary_matrices(c),
        })
        .collect::<Result<Vec<_>>>()?;
    induce_module(&parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{c_content, Partition};
    use crate::rational::q;
    use crate::symfunc::lr_induce;
    use crate::unitary::restriction_to_w;

    fn module(s: &str) -> UnitaryModule {
        s.parse().unwrap()
    }

    #[test]
    fn small_speh_modules() {
        let a11 = speh_matrices(&SpehFactor::new(1, 1)).unwrap();
        assert_eq!(a11.dim(), 1);
        assert!(a11.eps(0).is_zero());
        let a21 = speh_matrices(&SpehFactor::new(2, 1)).unwrap();
        assert_eq!(a21.eps(0).get(0, 0), Cyclo8::from_rational(q(1, 2)));
        assert_eq!(a21.eps(1).get(0, 0), Cyclo8::from_rational(q(-1, 2)));
        let a22 = speh_matrices(&SpehFactor::new(2, 2)).unwrap();
        assert_eq!(a22.dim(), 2);
    }

    #[test]
    fn speh_spectra_are_contents() {
        for m in 1..=6 {
            for d in 1..=6 / m {
                let f = SpehFactor::new(m, d);
                let x = speh_matrices(&f).unwrap();
                let expected = c_content(&f.shape(), &f.content_shift());
                for t in 0..x.dim() {
                    let spec: Vec<Rational> =
                        (0..x.n()).map(|k| x.eps(k).get(t, t).as_rational().unwrap().clone()).collect();
                    assert_eq!(crate::partition::CharacterVector::new(spec), expected, "a({m},{d})");
                }
            }
        }
    }

    #[test]
    fn rewriting() {
        // ε_0 s_0 = s_0 ε_1 + 1
        assert_eq!(rewrite_eps(0, &[0]), NormalForm { eps_index: 1, terms: vec![(1, vec![])] });
        assert_eq!(rewrite_eps(1, &[0]), NormalForm { eps_index: 0, terms: vec![(-1, vec![])] });
        assert_eq!(rewrite_eps(2, &[0]), NormalForm { eps_index: 2, terms: vec![] });
    }

    #[test]
    fn induced_modules() {
        let x = module_matrices(&module("a(1,1)*a(1,1)")).unwrap();
        assert_eq!(x.dim(), 2);
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(x.w_restriction().unwrap(), lr_induce(&[p(&[1]), p(&[1])]).unwrap());
        let x = module_matrices(&module("a(1,2)*a(1,2)")).unwrap();
        assert_eq!(x.dim(), 6);
        for s in ["a(2,1)*a(1,1)", "a(2,2)*a(1,1)", "a(1,2)*a(2,1)", "a(1,1)*a(1,1)*a(1,1)", "a(3,1)*a(1,2)"] {
            let xm = module(s);
            let x = module_matrices(&xm).unwrap();
            assert_eq!(x.w_restriction().unwrap(), restriction_to_w(&xm).unwrap(), "{s}");
        }
    }

    #[test]
    fn complementary() {
        let x = module_matrices(&module("cs(a(1,1),1/4)")).unwrap();
        assert_eq!(x.dim(), 2);
        let mut spec = vec![x.eps(0).get(0, 0), x.eps(1).get(0, 0)];
        spec.sort_by_key(|c| c.components()[0].clone());
        assert_eq!(x.central_character().real_part(), crate::partition::CharacterVector::new(vec![q(1, 4), q(-1, 4)]));
        assert_eq!(module_matrices(&module("cs(a(2,1),1/4)")).unwrap().dim(), 6);
        let tw = module_matrices(&module("cs(a(1,1)@y=1/3,1/8)")).unwrap();
        assert!(!tw.central_character().is_real());
    }
}
