//! The cyclotomic field `Q(ζ)`, `ζ = e^{2πi/8}`, as `a + bζ + cζ² + dζ³`
//! with `ζ⁴ = -1`. It contains `i = ζ²` and `√2 = ζ - ζ³`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use malachite_base::num::basic::traits::{One, Zero};

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo8 {
    c: [Rational; 4],
}

/// Scalar type of every oracle matrix.
pub type ExactScalar = Cyclo8;

impl Cyclo8 {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Self { c: [a, b, c, d] }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::ONE)
    }

    pub fn from_rational(r: Rational) -> Self {
        Self { c: [r, Rational::ZERO, Rational::ZERO, Rational::ZERO] }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(Rational::from(k))
    }

    /// `re + i·im`.
    pub fn gaussian(re: Rational, im: Rational) -> Self {
        Self { c: [re, Rational::ZERO, im, Rational::ZERO] }
    }

    pub fn zeta() -> Self {
        Self { c: [Rational::ZERO, Rational::ONE, Rational::ZERO, Rational::ZERO] }
    }

    pub fn i() -> Self {
        Self::gaussian(Rational::ZERO, Rational::ONE)
    }

    pub fn sqrt2() -> Self {
        Self { c: [Rational::ZERO, Rational::ONE, Rational::ZERO, -Rational::ONE] }
    }

    /// `1/√2 = (ζ - ζ³)/2`.
    pub fn inv_sqrt2() -> Self {
        let h = Rational::from_signeds(1, 2);
        Self { c: [Rational::ZERO, h.clone(), Rational::ZERO, -h] }
    }

    pub fn components(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| *x == 0u32)
    }

    pub fn is_one(&self) -> bool {
        self.c[0] == 1u32 && self.c[1..].iter().all(|x| *x == 0u32)
    }

    /// `Some(r)` when the element is rational.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.c[1..].iter().all(|x| *x == 0u32).then_some(&self.c[0])
    }

    /// Complex conjugation `ζ ↦ ζ⁻¹ = -ζ³`.
    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.c;
        Self { c: [a.clone(), -d, -c, -b] }
    }

    /// The Galois automorphism `ζ ↦ ζ^k` for odd `k`.
    pub fn galois(&self, k: u32) -> Self {
        let mut out = Self::zero();
        for (j, x) in self.c.iter().enumerate() {
            if *x == 0u32 {
                continue;
            }
            let e = (j as u32 * k) % 8;
            if e < 4 {
                out.c[e as usize] += x;
            } else {
                out.c[(e - 4) as usize] -= x;
            }
        }
        out
    }

    /// `x⁻¹ = (x^{σ₃} x^{σ₅} x^{σ₇}) / N(x)`; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Self::from_rational(Rational::ONE / r));
        }
        let others = &(&self.galois(3) * &self.galois(5)) * &self.galois(7);
        let norm = (&others * self).as_rational().expect("norm is rational").clone();
        Some(others.scale(&(Rational::ONE / norm)))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if *r == 0u32 {
            return Self::zero();
        }
        Self { c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r] }
    }

    /// `self += a·b`, skipping zero components.
    pub fn add_mul(&mut self, a: &Cyclo8, b: &Cyclo8) {
        for (i, x) in a.c.iter().enumerate() {
            if *x == 0u32 {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if *y == 0u32 {
                    continue;
                }
                let p = x * y;
                let k = i + j;
                if k < 4 {
                    self.c[k] += p;
                } else {
                    self.c[k - 4] -= p;
                }
            }
        }
    }

    /// `self -= a·b`.
    pub fn sub_mul(&mut self, a: &Cyclo8, b: &Cyclo8) {
        for (i, x) in a.c.iter().enumerate() {
            if *x == 0u32 {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if *y == 0u32 {
                    continue;
                }
                let p = x * y;
                let k = i + j;
                if k < 4 {
                    self.c[k] -= p;
                } else {
                    self.c[k - 4] += p;
                }
            }
        }
    }
}

impl Default for Cyclo8 {
    fn default() -> Self {
        Self { c: [Rational::ZERO, Rational::ZERO, Rational::ZERO, Rational::ZERO] }
    }
}

impl From<Rational> for Cyclo8 {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for Cyclo8 {
    fn from(k: i64) -> Self {
        Self::from_int(k)
    }
}

impl Add for &Cyclo8 {
    type Output = Cyclo8;
    fn add(self, o: &Cyclo8) -> Cyclo8 {
        Cyclo8 { c: [&self.c[0] + &o.c[0], &self.c[1] + &o.c[1], &self.c[2] + &o.c[2], &self.c[3] + &o.c[3]] }
    }
}

impl Sub for &Cyclo8 {
    type Output = Cyclo8;
    fn sub(self, o: &Cyclo8) -> Cyclo8 {
        Cyclo8 { c: [&self.c[0] - &o.c[0], &self.c[1] - &o.c[1], &self.c[2] - &o.c[2], &self.c[3] - &o.c[3]] }
    }
}

impl Mul for &Cyclo8 {
    type Output = Cyclo8;
    fn mul(self, o: &Cyclo8) -> Cyclo8 {
        let mut out = Cyclo8::zero();
        out.add_mul(self, o);
        out
    }
}

impl Neg for &Cyclo8 {
    type Output = Cyclo8;
    fn neg(self) -> Cyclo8 {
        Cyclo8 { c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]] }
    }
}

impl Neg for Cyclo8 {
    type Output = Cyclo8;
    fn neg(self) -> Cyclo8 {
        -&self
    }
}

impl AddAssign<&Cyclo8> for Cyclo8 {
    fn add_assign(&mut self, o: &Cyclo8) {
        for (x, y) in self.c.iter_mut().zip(&o.c) {
            if *y != 0u32 {
                *x += y;
            }
        }
    }
}

impl SubAssign<&Cyclo8> for Cyclo8 {
    fn sub_assign(&mut self, o: &Cyclo8) {
        for (x, y) in self.c.iter_mut().zip(&o.c) {
            if *y != 0u32 {
                *x -= y;
            }
        }
    }
}

impl fmt::Display for Cyclo8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["", "ζ", "ζ^2", "ζ^3"];
        let mut first = true;
        for (x, name) in self.c.iter().zip(names) {
            if *x == 0u32 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (name.is_empty(), *x == 1u32) {
                (true, _) => write!(f, "{x}")?,
                (false, true) => write!(f, "{name}")?,
                (false, false) => write!(f, "({x}){name}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
