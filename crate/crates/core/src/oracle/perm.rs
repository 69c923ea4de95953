//! Permutations of `{0, …, n-1}` in one-line notation.
//!
//! `(σ∘τ)(i) = σ(τ(i))`, and `w` acts on coordinates by `w(e_i) = e_{w(i)}`.
//! Simple reflection `s_k` (0-based) swaps `k` and `k+1`.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            assert!(x < images.len() && !seen[x], "not a permutation: {images:?}");
            seen[x] = true;
        }
        Perm(images)
    }

    pub fn simple(n: usize, k: usize) -> Self {
        Self::transposition(n, k, k + 1)
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i, j);
        Perm(v)
    }

    /// `s_{a₁} s_{a₂} ⋯ s_{a_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(n), |acc, &k| acc.compose(&Self::simple(n, k)))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x] = i;
        }
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }

    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// A reduced word: `self = s_{w[0]} s_{w[1]} ⋯`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.0.clone();
        let mut pushed = Vec::new();
        // strip right descents: w = (w s_k) s_k
        while let Some(k) = (0..w.len().saturating_sub(1)).find(|&k| w[k] > w[k + 1]) {
            w.swap(k, k + 1);
            pushed.push(k);
        }
        pushed.reverse();
        pushed
    }

    /// Cycle lengths, weakly decreasing.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x];
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", s.join(" "))
    }
}

/// All permutations of `n` letters in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut v: Vec<usize> = (0..n).collect();
    loop {
        out.push(Perm(v.clone()));
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).expect("successor");
        v.swap(i, j);
        v[i + 1..].reverse();
    }
    out
}

/// A reduced word for a representative of the class of cycle type `rho`:
/// each cycle is a run of consecutive simple reflections.
pub fn class_representative_word(rho: &[usize]) -> Vec<usize> {
    let mut word = Vec::new();
    let mut start = 0;
    for &k in rho {
        word.extend(start..start + k - 1);
        start += k;
    }
    word
}

/// `n! / z_ρ`, the size of the conjugacy class of cycle type `rho`.
pub fn class_size(rho: &[usize]) -> u64 {
    let n: usize = rho.iter().sum();
    let mut z: u64 = 1;
    let mut i = 0;
    while i < rho.len() {
        let k = rho[i];
        let mult = rho[i..].iter().take_while(|&&x| x == k).count();
        z *= (k as u64).pow(mult as u32) * (1..=mult as u64).product::<u64>();
        i += mult;
    }
    (1..=n as u64).product::<u64>() / z
}
