//! Genuine irreducible representations of the double cover `S̃_n`.
//!
//! These are indexed by `DP(n)`: an even `λ` (`n - ℓ(λ)` even) gives one
//! self-associate type `σ̃_λ`, an odd `λ` gives an associate pair
//! `σ̃_λ^+, σ̃_λ^- = σ̃_λ^+ ⊗ sgn`.  Which member is called `+` is a
//! convention; everything here that mentions `±` is meant up to swapping.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{distinct_partitions, DistinctPartition, Partition};
use crate::rational::{qi, Rational};
use crate::symfunc::g_entry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Associate {
    SelfAssociate,
    Plus,
    Minus,
}

impl Associate {
    pub fn flip(self) -> Self {
        match self {
            Associate::SelfAssociate => Associate::SelfAssociate,
            Associate::Plus => Associate::Minus,
            Associate::Minus => Associate::Plus,
        }
    }
}

/// An irreducible genuine `S̃_n`-type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinType {
    lambda: DistinctPartition,
    associate: Associate,
}

impl SpinType {
    pub fn new(lambda: DistinctPartition, associate: Associate) -> Result<Self> {
        let ok = match associate {
            Associate::SelfAssociate => lambda.is_even(),
            _ => !lambda.is_even(),
        };
        if !ok {
            return Err(Error::Unsupported(format!(
                "{lambda} is {} and cannot carry label {associate:?}",
                if lambda.is_even() { "even" } else { "odd" }
            )));
        }
        Ok(Self { lambda, associate })
    }

    /// The self-associate type for even `λ`, the `sign` member for odd `λ`.
    pub fn with_sign(lambda: DistinctPartition, sign: Associate) -> Self {
        let associate = if lambda.is_even() {
            Associate::SelfAssociate
        } else if sign == Associate::Minus {
            Associate::Minus
        } else {
            Associate::Plus
        };
        Self { lambda, associate }
    }

    pub fn lambda(&self) -> &DistinctPartition {
        &self.lambda
    }

    pub fn associate_label(&self) -> Associate {
        self.associate
    }

    pub fn is_self_associate(&self) -> bool {
        self.associate == Associate::SelfAssociate
    }

    pub fn dimension(&self) -> u64 {
        spin_dimension(&self.lambda).expect("Schur's formula is integral")
    }
}

impl fmt::Display for SpinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lambda)?;
        match self.associate {
            Associate::SelfAssociate => Ok(()),
            Associate::Plus => write!(f, "+"),
            Associate::Minus => write!(f, "-"),
        }
    }
}

impl FromStr for SpinType {
    type Err = Error;

    /// `"[3,1]"`, `"[2,1]+"`, `"[2,1]-"` (a Unicode minus is accepted too).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (body, assoc) = if let Some(b) = t.strip_suffix('+') {
            (b, Associate::Plus)
        } else if let Some(b) = t.strip_suffix('-').or_else(|| t.strip_suffix('\u{2212}')) {
            (b, Associate::Minus)
        } else {
            (t, Associate::SelfAssociate)
        };
        let lambda: DistinctPartition = body.parse()?;
        SpinType::new(lambda, assoc)
    }
}

/// The associate type `σ̃ ⊗ sgn`.
pub fn associate(s: &SpinType) -> SpinType {
    SpinType { lambda: s.lambda.clone(), associate: s.associate.flip() }
}

/// All genuine irreducible `S̃_n`-types, in `DP(n)` order, `+` before `-`.
pub fn classify_spin_types(n: usize) -> Vec<SpinType> {
    let mut out = Vec::new();
    for lambda in distinct_partitions(n) {
        if lambda.is_even() {
            out.push(SpinType { lambda, associate: Associate::SelfAssociate });
        } else {
            out.push(SpinType { lambda: lambda.clone(), associate: Associate::Plus });
            out.push(SpinType { lambda, associate: Associate::Minus });
        }
    }
    out
}

/// Schur's dimension `2^{⌊(n-ℓ)/2⌋} n!/(λ₁!⋯λ_ℓ!) Π_{i<j} (λᵢ-λⱼ)/(λᵢ+λⱼ)`.
pub fn spin_dimension(lambda: &DistinctPartition) -> Result<u64> {
    let n = lambda.size();
    let l = lambda.len();
    let parts = lambda.parts();
    let fact = |k: usize| (1..=k as i64).fold(Rational::from(1), |a, b| a * qi(b));
    let mut v = Rational::from(1u64 << ((n - l) / 2)) * fact(n);
    for &p in parts {
        v /= fact(p);
    }
    for i in 0..l {
        for j in i + 1..l {
            v *= Rational::from_signeds((parts[i] - parts[j]) as i64, (parts[i] + parts[j]) as i64);
        }
    }
    crate::rational::to_u64(&v).ok_or_else(|| Error::NonIntegral(format!("spin dimension of {lambda}: {v}")))
}

/// `dim Hom[σ̃_λ, σ_μ ⊗ σ̃_(n)] = 2^{(ℓ(λ)-1)/2} g_{λμ} / (ε_λ ε_(n))`,
/// with `ε = 1` on even and `√2` on odd partitions. Requires `λ ≠ (n)`.
pub fn spin_tensor_multiplicity(lambda: &DistinctPartition, mu: &Partition) -> Result<u64> {
    let n = lambda.size();
    if mu.size() != n {
        return Err(Error::SizeMismatch { left: n, right: mu.size() });
    }
    if lambda.len() == 1 {
        return Err(Error::Unsupported(format!("λ = ({n}) is excluded from the tensor formula")));
    }
    // Every factor is a power of √2; count the exponent.
    let row_odd = n % 2 == 0;
    let half_exp = lambda.len() as i64 - 1 - i64::from(!lambda.is_even()) - i64::from(row_odd);
    if half_exp < 0 || half_exp % 2 != 0 {
        return Err(Error::NonIntegral(format!("√2^{half_exp} for λ={lambda}, μ={mu}")));
    }
    let g = g_entry(lambda.as_partition(), mu)?;
    if g < 0 {
        return Err(Error::NonIntegral(format!("negative multiplicity g={g} for λ={lambda}, μ={mu}")));
    }
    Ok((g as u64) << (half_exp / 2))
}

/// Multiplicity of each genuine type in a `W̃`-representation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpinMultiset {
    entries: BTreeMap<SpinType, u64>,
}

impl SpinMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, s: SpinType, mult: u64) {
        if mult > 0 {
            *self.entries.entry(s).or_insert(0) += mult;
        }
    }

    pub fn get(&self, s: &SpinType) -> u64 {
        self.entries.get(s).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SpinType, u64)> {
        self.entries.iter().map(|(s, &m)| (s, m))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_dimension(&self) -> u64 {
        self.iter().map(|(s, m)| m * s.dimension()).sum()
    }

    /// Totals per `λ`, summing both members of an associate pair.
    pub fn symmetrized(&self) -> BTreeMap<DistinctPartition, u64> {
        let mut out = BTreeMap::new();
        for (s, m) in self.iter() {
            *out.entry(s.lambda.clone()).or_insert(0) += m;
        }
        out
    }

    pub fn scaled(&self, k: u64) -> Self {
        let mut out = Self::new();
        for (s, m) in self.iter() {
            out.add(s.clone(), m * k);
        }
        out
    }

    pub fn merge(&mut self, other: &SpinMultiset) {
        for (s, m) in other.iter() {
            self.add(s.clone(), m);
        }
    }
}

impl fmt::Display for SpinMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, m)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{m}·{s}")?;
            }
        }
        Ok(())
    }
}

/// `S|_{S̃_n}`: `σ̃_(n)` for `n` odd, `σ̃_(n)^+ + σ̃_(n)^-` for `n` even.
pub fn spin_module_restriction(n: usize) -> Result<SpinMultiset> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let row = DistinctPartition::new(vec![n])?;
    let mut out = SpinMultiset::new();
    if row.is_even() {
        out.add(SpinType { lambda: row, associate: Associate::SelfAssociate }, 1);
    } else {
        out.add(SpinType { lambda: row.clone(), associate: Associate::Plus }, 1);
        out.add(SpinType { lambda: row, associate: Associate::Minus }, 1);
    }
    Ok(out)
}

/// Multiplicity of each member of the class of `λ` in `σ_μ ⊗ S`.
///
/// `σ_μ ⊗ S` is stable under tensoring with sign, so both members of a pair
/// occur equally. For `λ ≠ (n)` this is the tensor formula, doubled when
/// `n` is even because `S` then has two constituents; the `λ = (n)` term
/// is what is left of the dimension.
pub fn member_multiplicity(lambda: &DistinctPartition, mu: &Partition) -> Result<u64> {
    let n = mu.size();
    if lambda.size() != n {
        return Err(Error::SizeMismatch { left: lambda.size(), right: n });
    }
    let factor = if n % 2 == 0 { 2 } else { 1 };
    if lambda.len() > 1 {
        return Ok(factor * spin_tensor_multiplicity(lambda, mu)?);
    }
    let spin_dim = 1u64 << (n / 2);
    let mut rest = (mu.dimension() * spin_dim) as i128;
    for other in distinct_partitions(n).into_iter().filter(|l| l.len() > 1) {
        let members = if other.is_even() { 1 } else { 2 };
        let m = factor * spin_tensor_multiplicity(&other, mu)?;
        rest -= (members * m * spin_dimension(&other)?) as i128;
    }
    let members = if lambda.is_even() { 1 } else { 2 };
    let denom = (members * spin_dimension(lambda)?) as i128;
    if rest < 0 || rest % denom != 0 {
        return Err(Error::NonIntegral(format!("row multiplicity {rest}/{denom} for μ={mu}")));
    }
    Ok((rest / denom) as u64)
}

/// The decomposition of `σ_μ ⊗ S` into genuine types.
pub fn tensor_with_spin(mu: &Partition) -> Result<SpinMultiset> {
    let mut out = SpinMultiset::new();
    for s in classify_spin_types(mu.size()) {
        let m = member_multiplicity(s.lambda(), mu)?;
        out.add(s, m);
    }
    Ok(out)
}
