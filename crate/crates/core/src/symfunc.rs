//! Kostka–Foulkes polynomials, the integers `g_{λ,μ}` of the inverse matrix
//! `K(-1)^{-1}`, Littlewood–Richardson induction, and `S_n` characters.
//!
//! Matrices are indexed by [`enumerate_partitions`] order with rows `λ` and
//! columns `μ`; `K_{λμ}(t)` is the charge generating function of
//! semistandard tableaux of shape `λ` and content `μ`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Integer polynomial in `t`; `coeffs[k]` is the coefficient of `t^k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0i64, |acc, &c| acc * t + c)
    }

    fn add_monomial(&mut self, k: usize) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, 0);
        }
        self.coeffs[k] += 1;
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{a}t^{k}")?,
            }
        }
        Ok(())
    }
}

/// A tableau as rows of entries `1..=k`.
pub type Tableau = Vec<Vec<u8>>;

/// All semistandard tableaux of shape `λ` and content `μ`, built by adding
/// one horizontal strip per letter.
pub fn semistandard_tableaux(lambda: &Partition, content: &[usize]) -> Vec<Tableau> {
    fn rec(
        lambda: &Partition,
        content: &[usize],
        letter: usize,
        t: &mut Tableau,
        out: &mut Vec<Tableau>,
    ) {
        if letter == content.len() {
            if (0..lambda.len()).all(|i| t[i].len() == lambda.part(i)) {
                out.push(t.clone());
            }
            return;
        }
        let shape: Vec<usize> = t.iter().map(|r| r.len()).collect();
        let mut caps = Vec::with_capacity(lambda.len());
        for i in 0..lambda.len() {
            let upper = if i == 0 { lambda.part(0) } else { lambda.part(i).min(shape[i - 1]) };
            caps.push(upper.saturating_sub(shape[i]));
        }
        strips(&caps, content[letter], 0, &mut vec![0; caps.len()], &mut |add| {
            for (i, &a) in add.iter().enumerate() {
                t[i].extend(std::iter::repeat_n(letter as u8 + 1, a));
            }
            rec(lambda, content, letter + 1, t, out);
            for (i, &a) in add.iter().enumerate() {
                let l = t[i].len();
                t[i].truncate(l - a);
            }
        });
    }
    if lambda.size() != content.iter().sum::<usize>() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut t: Tableau = vec![Vec::new(); lambda.len()];
    rec(lambda, content, 0, &mut t, &mut out);
    out
}

/// Enumerates vectors `add` with `0 ≤ add[i] ≤ caps[i]` summing to `total`.
fn strips(caps: &[usize], total: usize, i: usize, add: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if i == caps.len() {
        if total == 0 {
            f(add);
        }
        return;
    }
    let rest: usize = caps[i + 1..].iter().sum();
    let lo = total.saturating_sub(rest);
    for a in lo..=caps[i].min(total) {
        add[i] = a;
        strips(caps, total - a, i + 1, add, f);
    }
    add[i] = 0;
}

/// Row reading word: rows from bottom to top, each left to right.
pub fn reading_word(t: &Tableau) -> Vec<u8> {
    t.iter().rev().flat_map(|r| r.iter().copied()).collect()
}

/// Lascoux–Schützenberger charge of a word whose content is a partition.
pub fn charge(word: &[u8]) -> usize {
    let mut letters: Vec<Option<u8>> = word.iter().map(|&x| Some(x)).collect();
    let len = letters.len();
    let mut total = 0;
    while letters.iter().any(Option::is_some) {
        // Standard subword: the rightmost 1, then each r+1 found by scanning
        // leftwards from r, wrapping around at most once.
        let Some(mut pos) = (0..len).rev().find(|&p| letters[p] == Some(1)) else { break };
        letters[pos] = None;
        let mut index = 0;
        let mut r = 2u8;
        loop {
            let left = (0..pos).rev().find(|&p| letters[p] == Some(r));
            let next = match left {
                Some(p) => p,
                None => match (pos + 1..len).rev().find(|&p| letters[p] == Some(r)) {
                    Some(p) => {
                        index += 1;
                        p
                    }
                    None => break,
                },
            };
            total += index;
            letters[next] = None;
            pos = next;
            r += 1;
        }
    }
    total
}

/// `K_{λμ}(t) = Σ t^{charge(T)}` over semistandard tableaux of shape `λ`, content `μ`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<IntPolynomial> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    let mut poly = IntPolynomial::default();
    for t in semistandard_tableaux(lambda, mu.parts()) {
        poly.add_monomial(charge(&reading_word(&t)));
    }
    Ok(IntPolynomial::new(poly.coeffs))
}

/// The matrix `g = K(-1)^{-1}`, rows and columns in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GMatrix {
    n: usize,
    index: Vec<Partition>,
    entries: Vec<Vec<i64>>,
}

impl GMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.index
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.index.binary_search(p).ok()
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        Some(self.entries[self.position(lambda)?][self.position(mu)?])
    }

    /// Tab-separated table with partition headers.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("lambda\\mu");
        for p in &self.index {
            s.push('\t');
            s.push_str(&p.to_string());
        }
        s.push('\n');
        for (i, row) in self.entries.iter().enumerate() {
            s.push_str(&self.index[i].to_string());
            for v in row {
                s.push('\t');
                s.push_str(&v.to_string());
            }
            s.push('\n');
        }
        s
    }
}

/// The matrix `[K_{λμ}(-1)]` in enumeration order.
pub fn kostka_foulkes_at_minus_one(n: usize) -> Vec<Vec<i64>> {
    let ps = enumerate_partitions(n);
    ps.iter()
        .map(|l| ps.iter().map(|m| kostka_foulkes(l, m).expect("same size").eval(-1)).collect())
        .collect()
}

static G_CACHE: LazyLock<RwLock<HashMap<usize, Arc<GMatrix>>>> = LazyLock::new(Default::default);

/// Exact inverse of the unitriangular matrix `K(-1)`, by back-substitution.
pub fn g_matrix(n: usize) -> Result<Arc<GMatrix>> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    if let Some(g) = G_CACHE.read().expect("cache poisoned").get(&n) {
        return Ok(g.clone());
    }
    let index = enumerate_partitions(n);
    let k = kostka_foulkes_at_minus_one(n);
    let size = index.len();
    let mut g = vec![vec![0i64; size]; size];
    for j in 0..size {
        g[j][j] = 1;
        for i in (0..j).rev() {
            let mut acc = 0i64;
            for m in i + 1..=j {
                acc = acc
                    .checked_add(k[i][m].checked_mul(g[m][j]).expect("g entry overflow"))
                    .expect("g entry overflow");
            }
            g[i][j] = -acc;
        }
    }
    let gm = Arc::new(GMatrix { n, index, entries: g });
    G_CACHE.write().expect("cache poisoned").insert(n, gm.clone());
    Ok(gm)
}

/// `g_{λ,μ}` for any pair of partitions of the same size.
pub fn g_entry(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    let g = g_matrix(lambda.size())?;
    Ok(g.get(lambda, mu).expect("partition of n"))
}

/// Multiplicities `[X|_W : σ_μ]`, finitely supported.
pub type MultiplicityMap = BTreeMap<Partition, u64>;

/// Littlewood–Richardson coefficients `c^ν_{αβ}` of `s_α s_β`.
pub fn lr_product(alpha: &Partition, beta: &Partition) -> MultiplicityMap {
    // Add the rows of β as horizontal strips labelled 1, 2, ... and keep
    // fillings whose reverse reading word stays a lattice word.
    fn rec(beta: &[usize], label: usize, shape: &[usize], fill: &[Vec<u8>], out: &mut MultiplicityMap) {
        if label == beta.len() {
            let p = Partition::new(shape.to_vec()).expect("valid shape");
            *out.entry(p).or_insert(0) += 1;
            return;
        }
        let rows = shape.len() + 1;
        let caps: Vec<usize> = (0..rows)
            .map(|i| {
                let cur = shape.get(i).copied().unwrap_or(0);
                let cap = if i == 0 { beta[label] } else { shape[i - 1] - cur };
                cap.min(beta[label])
            })
            .collect();
        strips(&caps, beta[label], 0, &mut vec![0; rows], &mut |add| {
            let mut s = shape.to_vec();
            s.push(0);
            let mut f = fill.to_vec();
            f.push(Vec::new());
            for (i, &a) in add.iter().enumerate() {
                s[i] += a;
                f[i].extend(std::iter::repeat_n(label as u8 + 1, a));
            }
            if s.last() == Some(&0) {
                s.pop();
                f.pop();
            }
            if is_lattice(&f) {
                rec(beta, label + 1, &s, &f, out);
            }
        });
    }
    fn is_lattice(fill: &[Vec<u8>]) -> bool {
        let mut counts = vec![0usize; 256];
        for row in fill {
            for &x in row.iter().rev() {
                let x = x as usize;
                counts[x] += 1;
                if x > 1 && counts[x] > counts[x - 1] {
                    return false;
                }
            }
        }
        true
    }
    let mut out = MultiplicityMap::new();
    let fill = vec![Vec::new(); alpha.len()];
    rec(beta.parts(), 0, alpha.parts(), &fill, &mut out);
    out
}

/// Multiplicities of each `σ_μ` in the induction product of the `σ_{shapeᵢ}`.
pub fn lr_induce(shapes: &[Partition]) -> Result<MultiplicityMap> {
    let (first, rest) = shapes.split_first().ok_or(Error::Empty("lr_induce needs at least one shape"))?;
    let mut acc = MultiplicityMap::from([(first.clone(), 1u64)]);
    for s in rest {
        let mut next = MultiplicityMap::new();
        for (p, &m) in &acc {
            for (q, c) in lr_product(p, s) {
                *next.entry(q).or_insert(0) += m * c;
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Character `χ^λ` of `S_n` on the class of cycle type `rho`
/// (Murnaghan–Nakayama, via beta-numbers).
pub fn symmetric_character(lambda: &Partition, rho: &[usize]) -> i64 {
    let l = lambda.len();
    let beta: Vec<usize> = (0..l).map(|i| lambda.part(i) + (l - 1 - i)).collect();
    mn_rec(&beta, rho)
}

fn mn_rec(beta: &[usize], rho: &[usize]) -> i64 {
    let Some((&r, rest)) = rho.split_first() else { return 1 };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut nb = beta.to_vec();
        nb[idx] = b - r;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&nb, rest);
    }
    total
}
