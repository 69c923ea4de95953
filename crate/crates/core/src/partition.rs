//! Partitions, compositions and Young-diagram combinatorics.
//!
//! Partitions of `n` are enumerated in reverse lexicographic order, which
//! refines the dominance order: if `λ` dominates `μ` then `λ` comes first.
//! Every matrix indexed by partitions in this crate uses that order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{q, qi, Rational};

/// A weakly decreasing tuple of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    /// Sorts `parts` into decreasing order; zero parts are dropped.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Self { parts: vec![n] }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    /// The `d x m` box `(m^d)`: `d` rows of length `m`.
    pub fn rectangle(m: usize, d: usize) -> Self {
        Self { parts: vec![m; d] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Part `i` (0-based), or 0 beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Boxes as (row, column), 0-based, in row reading order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        self.part(row) > col
    }

    /// Dimension of the irreducible `S_n`-representation `σ_λ` (hook length formula).
    pub fn dimension(&self) -> u64 {
        let t = transpose(self);
        let n = self.size() as u64;
        let num: u128 = (1..=n as u128).product();
        let hooks: u128 = self
            .boxes()
            .map(|(i, j)| ((self.parts[i] - j - 1) + (t.parts[j] - i - 1) + 1) as u128)
            .product();
        (num / hooks) as u64
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Reverse lexicographic: `(3) < (2,1) < (1,1,1)`, i.e. the enumeration order.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "[")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, "]")
}

/// Parses a bracketed, comma-separated integer list such as `"[3,1]"`.
pub(crate) fn parse_int_list(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::parse(0, format!("expected [a,b,...], got {s:?}")))?;
    let mut out = Vec::new();
    let mut pos = 1;
    for piece in inner.split(',') {
        let v = piece
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::parse(pos, format!("bad integer {:?}", piece.trim())))?;
        out.push(v);
        pos += piece.len() + 1;
    }
    Ok(out)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_int_list(s)?)
    }
}

/// An ordered tuple of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The partition obtained by reordering.
    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.parts.clone()).expect("composition parts are positive")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

/// A partition with strictly decreasing parts; an element of `DP(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DistinctPartition(Partition);

impl DistinctPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)?.try_into()
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[usize] {
        self.0.parts()
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `n - ℓ(λ)` is even. Even partitions index self-associate spin types.
    pub fn is_even(&self) -> bool {
        (self.size() - self.len()) % 2 == 0
    }
}

impl TryFrom<Partition> for DistinctPartition {
    type Error = Error;

    fn try_from(p: Partition) -> Result<Self> {
        if p.is_strict() {
            Ok(Self(p))
        } else {
            Err(Error::NotDistinct(p.parts))
        }
    }
}

impl fmt::Display for DistinctPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for DistinctPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::from_str(s)?.try_into()
    }
}

/// A vector in `V^∨ ≅ Q^n`, compared up to permutation of coordinates.
#[derive(Debug, Clone)]
pub struct CharacterVector {
    entries: Vec<Rational>,
}

impl CharacterVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries sorted decreasingly; the canonical orbit representative.
    pub fn sorted(&self) -> Vec<Rational> {
        let mut v = self.entries.clone();
        v.sort_by(|a, b| b.cmp(a));
        v
    }

    /// `⟨v, v⟩ = Σ vᵢ²`.
    pub fn norm_squared(&self) -> Rational {
        self.entries.iter().map(|x| x * x).sum()
    }

    pub fn concat(&self, other: &CharacterVector) -> CharacterVector {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Self { entries }
    }

    pub fn shifted(&self, by: &Rational) -> CharacterVector {
        Self { entries: self.entries.iter().map(|x| x + by).collect() }
    }

    pub fn sum(&self) -> Rational {
        self.entries.iter().sum()
    }
}

impl PartialEq for CharacterVector {
    fn eq(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }
}

impl Eq for CharacterVector {}

impl fmt::Display for CharacterVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=max.min(remaining)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// `DP(n)`: partitions of `n` into distinct parts, in reverse lexicographic order.
pub fn distinct_partitions(n: usize) -> Vec<DistinctPartition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<DistinctPartition>) {
        if remaining == 0 {
            out.push(DistinctPartition(Partition { parts: prefix.clone() }));
            return;
        }
        for p in (1..=max.min(remaining)).rev() {
            prefix.push(p);
            rec(remaining - p, p - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Column lengths of `λ`.
pub fn transpose(lambda: &Partition) -> Partition {
    let cols = lambda.part(0);
    let parts = (0..cols).map(|j| lambda.parts.iter().filter(|&&p| p > j).count()).collect();
    Partition { parts }
}

/// Principal hook lengths of `λ`.
pub fn hook_partition(lambda: &Partition) -> DistinctPartition {
    let t = transpose(lambda);
    let parts = (0..lambda.len())
        .take_while(|&i| lambda.part(i) > i)
        .map(|i| (lambda.part(i) - i - 1) + (t.part(i) - i - 1) + 1)
        .collect();
    DistinctPartition(Partition { parts })
}

/// `μ ≤ λ` in dominance order: every partial sum of `λ` is at least that of `μ`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch { left: mu.size(), right: lambda.size() });
    }
    let len = mu.len().max(lambda.len());
    let (mut sm, mut sl) = (0, 0);
    for i in 0..len {
        sm += mu.part(i);
        sl += lambda.part(i);
        if sl < sm {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The multiset `{c + (j - i)}` over boxes `(i, j)` of `λ`.
pub fn c_content(lambda: &Partition, c: &Rational) -> CharacterVector {
    CharacterVector::new(lambda.boxes().map(|(i, j)| c + qi(j as i64 - i as i64)).collect())
}

/// The string `((k-1)/2, (k-3)/2, ..., -(k-1)/2)` for a single Jordan block of size `k`.
pub fn middle_string(k: usize) -> Vec<Rational> {
    (0..k).map(|t| q(k as i64 - 1 - 2 * t as i64, 2)).collect()
}

/// The middle element `h_λ`: concatenated strings, one per part.
pub fn middle_element(lambda: &Partition) -> CharacterVector {
    CharacterVector::new(lambda.parts.iter().flat_map(|&k| middle_string(k)).collect())
}

/// `⟨h_λ, h_λ⟩ = Σ λᵢ(λᵢ² - 1)/12`.
pub fn casimir_scalar(lambda: &DistinctPartition) -> Rational {
    lambda
        .parts()
        .iter()
        .map(|&k| {
            let k = k as i64;
            q(k * (k * k - 1), 12)
        })
        .sum()
}
