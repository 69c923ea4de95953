//! Unitary modules of `ℍ_n`: products of Speh modules `a_y(m,d)` and
//! complementary series `π(a_y(m,d), ν)`, their central characters and
//! Langlands data.
//!
//! Text form: `a(m,d)`, `a(m,d)@y=r`, `cs(a(m,d),ν)`, joined with `*`,
//! for example `a(2,2)*cs(a(1,1),1/4)`.
//!
//! The twist `a_y` shifts every coordinate of the central character by
//! `i·y`; it is carried separately from the real part.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{middle_element, CharacterVector, Composition, DistinctPartition, Partition};
use crate::rational::{half, is_positive, parse_rational, q, Rational};
use crate::symfunc::{lr_induce, MultiplicityMap};

/// The Speh module `a_y(m,d)`: the `d × m` box (`d` rows of length `m`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpehFactor {
    pub m: usize,
    pub d: usize,
    pub y: Rational,
}

impl SpehFactor {
    pub fn new(m: usize, d: usize) -> Self {
        Self { m, d, y: Rational::from(0) }
    }

    pub fn twisted(m: usize, d: usize, y: Rational) -> Self {
        Self { m, d, y }
    }

    pub fn size(&self) -> usize {
        self.m * self.d
    }

    pub fn is_real(&self) -> bool {
        self.y == 0u32
    }

    /// The partition `(m^d)`.
    pub fn shape(&self) -> Partition {
        Partition::rectangle(self.m, self.d)
    }

    /// `(m+d-1, m+d-3, ..., |m-d|+1)`, the hooks of the box.
    pub fn hook_string(&self) -> Vec<usize> {
        if self.m == 0 || self.d == 0 {
            return Vec::new();
        }
        let top = self.m + self.d - 1;
        (0..self.m.min(self.d)).map(|k| top - 2 * k).collect()
    }

    /// The effective content parameter `(d - m)/2`.
    pub fn content_shift(&self) -> Rational {
        q(self.d as i64 - self.m as i64, 2)
    }
}

impl fmt::Display for SpehFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a({},{})", self.m, self.d)?;
        if !self.is_real() {
            write!(f, "@y={}", self.y)?;
        }
        Ok(())
    }
}

/// `π(a_y(m,d), ν)`, induced from `a_y(m,d)⊗ℂ_ν ⊠ a_y(m,d)⊗ℂ_{-ν}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComplementaryFactor {
    pub base: SpehFactor,
    pub nu: Rational,
}

impl ComplementaryFactor {
    pub fn size(&self) -> usize {
        2 * self.base.size()
    }
}

impl fmt::Display for ComplementaryFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cs({},{})", self.base, self.nu)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    Speh(SpehFactor),
    Complementary(ComplementaryFactor),
}

impl Factor {
    pub fn size(&self) -> usize {
        match self {
            Factor::Speh(s) => s.size(),
            Factor::Complementary(c) => c.size(),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Speh(s) => s.fmt(f),
            Factor::Complementary(c) => c.fmt(f),
        }
    }
}

/// A product of factors; order is irrelevant and normalized on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitaryModule {
    factors: Vec<Factor>,
}

impl UnitaryModule {
    pub fn new(mut factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Empty("a module needs at least one factor"));
        }
        factors.sort_by(|a, b| b.cmp(a));
        Ok(Self { factors })
    }

    pub fn speh(m: usize, d: usize) -> Self {
        Self { factors: vec![Factor::Speh(SpehFactor::new(m, d))] }
    }

    pub fn from_speh(factors: impl IntoIterator<Item = SpehFactor>) -> Result<Self> {
        Self::new(factors.into_iter().map(Factor::Speh).collect())
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn n(&self) -> usize {
        self.factors.iter().map(Factor::size).sum()
    }

    /// The factors when all are Speh factors.
    pub fn speh_factors(&self) -> Option<Vec<&SpehFactor>> {
        self.factors
            .iter()
            .map(|f| match f {
                Factor::Speh(s) => Some(s),
                Factor::Complementary(_) => None,
            })
            .collect()
    }
}

impl fmt::Display for UnitaryModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            fac.fmt(f)?;
        }
        Ok(())
    }
}

impl FromStr for UnitaryModule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = SpecParser { src: s, pos: 0 };
        let mut factors = vec![p.factor()?];
        p.skip_ws();
        while p.eat('*') {
            factors.push(p.factor()?);
            p.skip_ws();
        }
        if p.pos != s.len() {
            return Err(Error::parse(p.pos, "expected '*' or end of input"));
        }
        UnitaryModule::new(factors)
    }
}

struct SpecParser<'a> {
    src: &'a str,
    pos: usize,
}

impl SpecParser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{c}'")))
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(kw) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(Error::parse(start, "expected a nonnegative integer"));
        }
        self.pos += len;
        self.src[start..self.pos].parse().map_err(|_| Error::parse(start, "integer out of range"))
    }

    fn rational(&mut self) -> Result<Rational> {
        self.skip_ws();
        let start = self.pos;
        let len: usize = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_digit() || matches!(c, '/' | '-' | '+' | '\u{2212}'))
            .map(char::len_utf8)
            .sum();
        if len == 0 {
            return Err(Error::parse(start, "expected a rational"));
        }
        self.pos += len;
        parse_rational(&self.src[start..self.pos]).map_err(|e| match e {
            Error::Parse { msg, .. } => Error::parse(start, msg),
            other => other,
        })
    }

    fn speh(&mut self) -> Result<SpehFactor> {
        self.expect('(')?;
        let m = self.integer()?;
        self.expect(',')?;
        let d = self.integer()?;
        self.expect(')')?;
        self.skip_ws();
        let y = if self.eat('@') {
            if !self.keyword("y") {
                return Err(Error::parse(self.pos, "expected 'y' after '@'"));
            }
            self.expect('=')?;
            self.rational()?
        } else {
            Rational::from(0)
        };
        Ok(SpehFactor { m, d, y })
    }

    fn factor(&mut self) -> Result<Factor> {
        self.skip_ws();
        let start = self.pos;
        if self.keyword("cs") {
            self.expect('(')?;
            self.skip_ws();
            let inner = self.pos;
            if !self.keyword("a") {
                return Err(Error::parse(inner, "complementary series needs a Speh factor a(m,d)"));
            }
            let base = self.speh()?;
            self.expect(',')?;
            let nu = self.rational()?;
            self.expect(')')?;
            Ok(Factor::Complementary(ComplementaryFactor { base, nu }))
        } else if self.keyword("a") {
            Ok(Factor::Speh(self.speh()?))
        } else {
            Err(Error::parse(start, "expected 'a(' or 'cs('"))
        }
    }
}

/// A central character as a multiset of complex coordinates `re + i·im`.
#[derive(Debug, Clone)]
pub struct CentralCharacter {
    entries: Vec<(Rational, Rational)>,
}

impl CentralCharacter {
    pub fn from_entries(entries: Vec<(Rational, Rational)>) -> Self {
        Self { entries }
    }

    pub fn real(v: &CharacterVector) -> Self {
        Self { entries: v.entries().iter().map(|x| (x.clone(), Rational::from(0))).collect() }
    }

    pub fn entries(&self) -> &[(Rational, Rational)] {
        &self.entries
    }

    pub fn real_part(&self) -> CharacterVector {
        CharacterVector::new(self.entries.iter().map(|(r, _)| r.clone()).collect())
    }

    pub fn imag_part(&self) -> Vec<Rational> {
        self.entries.iter().map(|(_, i)| i.clone()).collect()
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|(_, i)| *i == 0u32)
    }

    /// `Σ νᵢ²` with complex coordinates, as `(re, im)`.
    pub fn bilinear_square(&self) -> (Rational, Rational) {
        let mut re = Rational::from(0);
        let mut im = Rational::from(0);
        for (a, b) in &self.entries {
            re += a * a - b * b;
            im += Rational::from(2) * a * b;
        }
        (re, im)
    }

    fn sorted(&self) -> Vec<(Rational, Rational)> {
        let mut v = self.entries.clone();
        v.sort();
        v
    }
}

impl PartialEq for CentralCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }
}

impl Eq for CentralCharacter {}

impl fmt::Display for CentralCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, (a, b)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            if *b == 0u32 {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}+{b}i")?;
            }
        }
        write!(f, ")")
    }
}

/// `h_{hook(m^d)}` plus the uniform imaginary shift `y`.
pub fn speh_central_character(f: &SpehFactor) -> CentralCharacter {
    let hooks = Partition::new(f.hook_string()).expect("hook string is decreasing");
    let h = middle_element(&hooks);
    CentralCharacter { entries: h.entries().iter().map(|x| (x.clone(), f.y.clone())).collect() }
}

/// Concatenation over factors; a complementary factor contributes its base
/// character shifted by `+ν` and by `-ν`.
pub fn central_character(x: &UnitaryModule) -> CentralCharacter {
    let mut entries = Vec::with_capacity(x.n());
    for f in x.factors() {
        match f {
            Factor::Speh(s) => entries.extend(speh_central_character(s).entries),
            Factor::Complementary(c) => {
                let base = speh_central_character(&c.base);
                for sign in [1i64, -1] {
                    let shift = &c.nu * Rational::from(sign);
                    entries.extend(base.entries.iter().map(|(a, b)| (a + &shift, b.clone())));
                }
            }
        }
    }
    CentralCharacter { entries }
}

/// Langlands parameters: a composition and one complex parameter per block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanglandsDatum {
    pub composition: Composition,
    pub nu: Vec<(Rational, Rational)>,
}

impl LanglandsDatum {
    /// Real parts weakly decreasing.
    pub fn is_dominant(&self) -> bool {
        self.nu.windows(2).all(|w| w[0].0 >= w[1].0)
    }
}

/// `a(m,d) ≅ L_{(d,…,d)}((m-1)/2, (m-3)/2, …, -(m-1)/2)` with `m` blocks.
pub fn speh_langlands(f: &SpehFactor) -> Result<LanglandsDatum> {
    if !f.is_real() {
        return Err(Error::Unsupported(format!("Langlands datum of the twisted factor {f}")));
    }
    if f.m == 0 || f.d == 0 {
        return Err(Error::InvalidPartition(vec![f.m, f.d]));
    }
    let composition = Composition::new(vec![f.d; f.m])?;
    let nu = (0..f.m).map(|k| (q(f.m as i64 - 1 - 2 * k as i64, 2), Rational::from(0))).collect();
    Ok(LanglandsDatum { composition, nu })
}

/// Problems found by [`validate_unitary`]; empty means the parameters are in range.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UnitaryReport {
    pub violations: Vec<String>,
}

impl UnitaryReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for UnitaryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            write!(f, "ok")
        } else {
            write!(f, "{}", self.violations.join("; "))
        }
    }
}

/// Checks `m, d ≥ 1` and `0 < ν < 1/2` for every factor.
pub fn validate_unitary(x: &UnitaryModule) -> UnitaryReport {
    let mut report = UnitaryReport::default();
    let check_speh = |s: &SpehFactor, report: &mut UnitaryReport| {
        if s.m == 0 || s.d == 0 {
            report.violations.push(format!("{s}: m and d must be at least 1"));
        }
    };
    for f in x.factors() {
        match f {
            Factor::Speh(s) => check_speh(s, &mut report),
            Factor::Complementary(c) => {
                check_speh(&c.base, &mut report);
                if !(is_positive(&c.nu) && c.nu < half()) {
                    report.violations.push(format!("{c}: ν = {} is not in (0, 1/2)", c.nu));
                }
            }
        }
    }
    if x.n() == 0 {
        report.violations.push("total size is 0".into());
    }
    report
}

/// `[X|_{S_n} : σ_μ]`: Littlewood–Richardson induction of the box shapes.
pub fn restriction_to_w(x: &UnitaryModule) -> Result<MultiplicityMap> {
    let factors = x
        .speh_factors()
        .ok_or_else(|| Error::Unsupported(format!("W-restriction of {x}: complementary factor present")))?;
    let mut shapes = Vec::with_capacity(factors.len());
    for f in factors {
        if !f.is_real() {
            return Err(Error::Unsupported(format!("W-restriction of {x}: twisted factor present")));
        }
        shapes.push(f.shape());
    }
    lr_induce(&shapes)
}

/// When the concatenated hook strings of a real Speh product are pairwise
/// distinct, the strict partition they sort into.
pub fn concatenated_hooks(x: &UnitaryModule) -> Option<DistinctPartition> {
    let factors = x.speh_factors()?;
    if factors.iter().any(|f| !f.is_real()) {
        return None;
    }
    let parts: Vec<usize> = factors.iter().flat_map(|f| f.hook_string()).collect();
    let p = Partition::from_unsorted(parts).ok()?;
    DistinctPartition::try_from(p).ok()
}

/// Every multiset of real Speh factors of total size `n`, factors in
/// descending order, modules in descending lexicographic order.
pub fn enumerate_speh_modules(n: usize) -> Vec<UnitaryModule> {
    fn rec(rest: usize, max: (usize, usize), acc: &mut Vec<SpehFactor>, out: &mut Vec<UnitaryModule>) {
        if rest == 0 {
            out.push(UnitaryModule { factors: acc.iter().cloned().map(Factor::Speh).collect() });
            return;
        }
        for m in (1..=rest.min(max.0)).rev() {
            let top = if m == max.0 { max.1 } else { usize::MAX };
            for d in (1..=(rest / m).min(top)).rev() {
                acc.push(SpehFactor::new(m, d));
                rec(rest - m * d, (m, d), acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, (n, n), &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::c_content;
    use crate::rational::qi;

    fn cv(v: &[(i64, i64)]) -> CharacterVector {
        CharacterVector::new(v.iter().map(|&(a, b)| q(a, b)).collect())
    }

    fn module(s: &str) -> UnitaryModule {
        s.parse().unwrap()
    }

    #[test]
    fn speh_characters() {
        assert_eq!(speh_central_character(&SpehFactor::new(2, 2)).real_part(), cv(&[(1, 1), (0, 1), (-1, 1), (0, 1)]));
        assert_eq!(speh_central_character(&SpehFactor::new(1, 1)).real_part(), cv(&[(0, 1)]));
        assert_eq!(
            speh_central_character(&SpehFactor::new(3, 2)).real_part(),
            cv(&[(3, 2), (1, 2), (-1, 2), (-3, 2), (1, 2), (-1, 2)])
        );
    }

    #[test]
    fn speh_character_is_centered_content() {
        for m in 1..=12 {
            for d in 1..=12 / m {
                let f = SpehFactor::new(m, d);
                assert_eq!(speh_central_character(&f).real_part(), c_content(&f.shape(), &f.content_shift()));
            }
        }
    }

    #[test]
    fn module_characters() {
        assert_eq!(central_character(&module("a(2,2)")).real_part(), cv(&[(1, 1), (0, 1), (-1, 1), (0, 1)]));
        assert_eq!(central_character(&module("a(1,2)*a(1,2)")).real_part(), cv(&[(1, 2), (-1, 2), (1, 2), (-1, 2)]));
        assert_eq!(central_character(&module("cs(a(1,1),1/4)")).real_part(), cv(&[(1, 4), (-1, 4)]));
        assert_eq!(central_character(&module("a(2,1)*a(1,1)")), central_character(&module("a(1,1)*a(2,1)")));
        let tw = central_character(&module("a(2,1)@y=1/3"));
        assert!(!tw.is_real());
        assert_eq!(tw.imag_part(), vec![q(1, 3), q(1, 3)]);
    }

    #[test]
    fn langlands() {
        let l = speh_langlands(&SpehFactor::new(2, 2)).unwrap();
        assert_eq!(l.composition.parts(), &[2, 2]);
        assert_eq!(l.nu, vec![(q(1, 2), qi(0)), (q(-1, 2), qi(0))]);
        let l = speh_langlands(&SpehFactor::new(3, 1)).unwrap();
        assert_eq!(l.composition.parts(), &[1, 1, 1]);
        assert_eq!(l.nu.iter().map(|x| x.0.clone()).collect::<Vec<_>>(), vec![qi(1), qi(0), qi(-1)]);
        assert!(l.is_dominant());
        assert!(speh_langlands(&SpehFactor::twisted(1, 1, qi(1))).is_err());
    }

    #[test]
    fn validation() {
        assert!(validate_unitary(&module("a(2,3)")).is_ok());
        assert!(!validate_unitary(&module("cs(a(1,1),1/2)")).is_ok());
        assert!(validate_unitary(&module("cs(a(1,1),1/4)")).is_ok());
        assert!(!validate_unitary(&module("a(0,2)")).is_ok());
        assert!(!validate_unitary(&module("cs(a(1,1),-1/4)")).is_ok());
    }

    #[test]
    fn restriction() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(restriction_to_w(&module("a(2,2)")).unwrap(), MultiplicityMap::from([(p(&[2, 2]), 1)]));
        assert_eq!(
            restriction_to_w(&module("a(1,1)*a(1,1)")).unwrap(),
            MultiplicityMap::from([(p(&[2]), 1), (p(&[1, 1]), 1)])
        );
        assert_eq!(restriction_to_w(&module("a(5,1)")).unwrap(), MultiplicityMap::from([(p(&[5]), 1)]));
        assert!(restriction_to_w(&module("cs(a(1,1),1/4)")).is_err());
    }

    #[test]
    fn parse_and_display() {
        let x = module("a(2,2)*cs(a(1,1),1/4)");
        assert_eq!(x.n(), 6);
        assert_eq!(x.to_string(), "cs(a(1,1),1/4)*a(2,2)");
        assert_eq!(module(&x.to_string()), x);
        assert_eq!(module(" a(1, 2) @y = -1/3 ").to_string(), "a(1,2)@y=-1/3");
        for (bad, pos) in [("a(1,", 4), ("b(1,1)", 0), ("a(1,1)*", 7), ("cs(cs(a(1,1),1/4),1/4)", 3), ("a(1,1)x", 6), ("cs(a(1,1),1/0)", 10)] {
            match bad.parse::<UnitaryModule>() {
                Err(Error::Parse { pos: p, .. }) => assert_eq!(p, pos, "{bad}"),
                other => panic!("{bad}: {other:?}"),
            }
        }
    }

    #[test]
    fn hook_strings() {
        assert_eq!(SpehFactor::new(2, 3).hook_string(), vec![4, 2]);
        assert_eq!(SpehFactor::new(3, 2).hook_string(), vec![4, 2]);
        assert_eq!(SpehFactor::new(1, 4).hook_string(), vec![4]);
        assert_eq!(concatenated_hooks(&module("a(2,1)*a(1,1)")).unwrap().parts(), &[2, 1]);
        assert!(concatenated_hooks(&module("a(1,2)*a(1,2)")).is_none());
    }

    #[test]
    fn speh_enumeration() {
        let names: Vec<String> = enumerate_speh_modules(2).iter().map(ToString::to_string).collect();
        assert_eq!(names, ["a(2,1)", "a(1,2)", "a(1,1)*a(1,1)"]);
        for n in 1..=7 {
            let all = enumerate_speh_modules(n);
            assert!(all.iter().all(|x| x.n() == n));
            assert!(all.windows(2).all(|w| w[0] > w[1]));
        }
        assert_eq!(enumerate_speh_modules(3).len(), 5);
    }
}
