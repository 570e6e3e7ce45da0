//! Exact arithmetic in the cyclotomic field Q(zeta3) and its group of
//! sixth roots of unity.
//!
//! Every constant appearing in the identity catalog lives here:
//! zeta3 = e^{2*pi*i/3}, the primitive third root of unity usually written
//! omega; i*sqrt(3) = zeta3 - zeta3^2 = 1 + 2*zeta3; and e^{-pi*i/3} = -zeta3.
//! Elements are stored as `a + b*zeta3` with `a`, `b` arbitrary-precision
//! rationals, reduced via the minimal polynomial 1 + zeta3 + zeta3^2 = 0.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational. Always reduced, denominator positive,
/// canonical zero 0/1 (guaranteed by `num::BigRational`).
pub type Rational = BigRational;

/// Rational from an integer pair; `d` must be nonzero.
pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// An element `a + b*zeta3` of Q(zeta3), with zeta3 = e^{2*pi*i/3}.
///
/// The pair (a, b) is a basis representation, so equality is structural.
/// Products reduce zeta3^2 through zeta3^2 = -1 - zeta3.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    a: Rational,
    b: Rational,
}

impl CycNum {
    pub fn new(a: Rational, b: Rational) -> Self {
        CycNum { a, b }
    }

    pub fn zero() -> Self {
        CycNum::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        CycNum::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        CycNum::new(rational(n, 1), Rational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        CycNum::new(r, Rational::zero())
    }

    /// zeta3 itself.
    pub fn zeta3() -> Self {
        CycNum::new(Rational::zero(), Rational::one())
    }

    /// i*sqrt(3) = zeta3 - zeta3^2 = 1 + 2*zeta3.
    pub fn i_sqrt3() -> Self {
        CycNum::new(rational(1, 1), rational(2, 1))
    }

    /// The rational part `a`.
    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    /// The zeta3 part `b`.
    pub fn zeta_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// True when the zeta3 part vanishes.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// True when the value is a rational integer.
    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.a.denom().is_one()
    }

    /// Field norm a^2 - a*b + b^2 (the norm to Q); zero only for zero.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// The conjugate under zeta3 -> zeta3^2, i.e. (a - b) - b*zeta3.
    pub fn conj(&self) -> CycNum {
        CycNum::new(&self.a - &self.b, -self.b.clone())
    }

    /// Exact multiplicative inverse, computed as conj(x)/norm(x).
    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(CycNum::new(c.a / &n, c.b / n))
    }

    pub fn mul_rational(&self, r: &Rational) -> CycNum {
        CycNum::new(&self.a * r, &self.b * r)
    }
}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        CycNum::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        CycNum::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        // (a1 + b1 z)(a2 + b2 z) = a1 a2 + (a1 b2 + a2 b1) z + b1 b2 z^2
        // with z^2 = -1 - z.
        let bb = &self.b * &rhs.b;
        let a = &self.a * &rhs.a - &bb;
        let b = &self.a * &rhs.b + &self.b * &rhs.a - bb;
        CycNum::new(a, b)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::new(-self.a.clone(), -self.b.clone())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CycNum {
    /// Report form: `a/b` when the zeta3 part is zero, otherwise
    /// `a1/a2 + b1/b2*z3` (each fraction reduced, denominator-1 printed bare).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            fmt_rational(&self.a, f)
        } else {
            fmt_rational(&self.a, f)?;
            write!(f, " + ")?;
            fmt_rational(&self.b, f)?;
            write!(f, "*z3")
        }
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// A sixth root of unity e^{k*pi*i/3} = (-zeta3^2)^k, stored as k mod 6.
///
/// These are exactly the units that arise from sign flips and omega
/// substitutions (q -> -q, q -> omega*q, bases like -q^10), so monomial
/// arithmetic never leaves the group.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Unit(u8);

impl Unit {
    pub const ONE: Unit = Unit(0);
    /// e^{pi i/3} = -zeta3^2 = 1 + zeta3.
    pub const SIXTH: Unit = Unit(1);
    /// zeta3 = e^{2 pi i/3}.
    pub const ZETA3: Unit = Unit(2);
    pub const MINUS_ONE: Unit = Unit(3);
    /// zeta3^2 = e^{4 pi i/3}.
    pub const ZETA3_SQ: Unit = Unit(4);
    pub const MINUS_ZETA3: Unit = Unit(5);

    /// The unit with index k (taken mod 6).
    pub fn from_index(k: i64) -> Unit {
        Unit(k.rem_euclid(6) as u8)
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// u^e, valid for any integer e (indices add mod 6).
    pub fn pow(self, e: i64) -> Unit {
        Unit::from_index(self.0 as i64 * e)
    }

    pub fn inv(self) -> Unit {
        Unit::from_index(-(self.0 as i64))
    }

    /// Exact image in Q(zeta3).
    pub fn embed(self) -> CycNum {
        match self.0 {
            0 => CycNum::one(),
            1 => CycNum::new(rational(1, 1), rational(1, 1)), // -zeta3^2
            2 => CycNum::zeta3(),
            3 => -CycNum::one(),
            4 => CycNum::new(rational(-1, 1), rational(-1, 1)), // zeta3^2
            5 => -CycNum::zeta3(),
            _ => unreachable!(),
        }
    }
}

impl Mul for Unit {
    type Output = Unit;
    // multiplication of roots of unity is addition of their indices
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Unit) -> Unit {
        Unit::from_index(self.0 as i64 + rhs.0 as i64)
    }
}

impl fmt::Display for Unit {
    /// The expression-language spelling: 1, -1, z3, z3^2, -z3, -z3^2.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.0 {
            0 => "1",
            1 => "-z3^2",
            2 => "z3",
            3 => "-1",
            4 => "z3^2",
            5 => "-z3",
            _ => unreachable!(),
        };
        write!(f, "{}", s)
    }
}

impl fmt::Debug for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
