//! Truncated sparse Laurent series in q over Q(zeta3).
//!
//! A [`QSeries`] stores finitely many coefficients together with a validity
//! order N: every coefficient at exponent <= N is exact, and anything beyond
//! is unknown. All arithmetic propagates the order conservatively, so a
//! Laurent shift like q^{-3} or a substitution q -> q^9 can never silently
//! turn an exact coefficient into a truncated one.
//!
//! Exponents may be negative (bounded below); exact polynomials carry the
//! sentinel order [`ORDER_INF`].

use std::collections::BTreeMap;
use std::fmt;

use crate::cyclotomic::{CycNum, Unit};
use crate::error::{Error, Result};

/// Validity order of values known exactly at every exponent (constants,
/// finite Pochhammer products). Chosen so order arithmetic cannot overflow.
pub const ORDER_INF: i64 = i64::MAX / 4;

/// Clamp an order computation into the representable range.
fn clamp_order(x: i128) -> i64 {
    if x >= ORDER_INF as i128 {
        ORDER_INF
    } else if x <= -(ORDER_INF as i128) {
        -ORDER_INF
    } else {
        x as i64
    }
}

/// `u * q^e`: the argument form for every theta and Appell parameter, and
/// the target of substitutions q -> u*q^k.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub unit: Unit,
    pub exp: i64,
}

#[allow(clippy::should_implement_trait)] // mul/neg read better as plain methods on Copy data
impl Monomial {
    pub fn new(unit: Unit, exp: i64) -> Self {
        Monomial { unit, exp }
    }

    /// Plain q^e.
    pub fn q_pow(e: i64) -> Self {
        Monomial::new(Unit::ONE, e)
    }

    /// Plain q.
    pub fn q() -> Self {
        Monomial::q_pow(1)
    }

    pub fn one() -> Self {
        Monomial::q_pow(0)
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial::new(self.unit * other.unit, self.exp + other.exp)
    }

    pub fn pow(self, e: i64) -> Monomial {
        Monomial::new(self.unit.pow(e), self.exp * e)
    }

    pub fn inv(self) -> Monomial {
        self.pow(-1)
    }

    pub fn neg(self) -> Monomial {
        Monomial::new(self.unit * Unit::MINUS_ONE, self.exp)
    }

    pub fn coeff(self) -> CycNum {
        self.unit.embed()
    }

    pub fn is_one(self) -> bool {
        self.unit.is_one() && self.exp == 0
    }
}

impl fmt::Display for Monomial {
    /// Expression-language spelling: `q^3`, `-q`, `z3^2*q^-1`, `-z3`, `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            return write!(f, "{}", self.unit);
        }
        if self.unit == Unit::ONE {
            // "q" or "q^e"
        } else if self.unit == Unit::MINUS_ONE {
            write!(f, "-")?;
        } else {
            write!(f, "{}*", self.unit)?;
        }
        if self.exp == 1 {
            write!(f, "q")
        } else {
            write!(f, "q^{}", self.exp)
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// A truncated sparse Laurent series: finitely many exact coefficients
/// below the validity order, zeros omitted.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: BTreeMap<i64, CycNum>,
    order: i64,
}

impl QSeries {
    /// The zero series known exactly through `order`.
    pub fn zero(order: i64) -> Self {
        QSeries {
            coeffs: BTreeMap::new(),
            order,
        }
    }

    /// An exact constant (validity order infinite).
    pub fn constant(c: CycNum) -> Self {
        QSeries::monomial(c, 0)
    }

    pub fn one() -> Self {
        QSeries::constant(CycNum::one())
    }

    /// An exact single term c*q^e.
    pub fn monomial(c: CycNum, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        QSeries {
            coeffs,
            order: ORDER_INF,
        }
    }

    /// Build from (exponent, coefficient) pairs; zeros dropped, exponents
    /// above `order` dropped.
    pub fn from_terms<I: IntoIterator<Item = (i64, CycNum)>>(terms: I, order: i64) -> Self {
        let mut s = QSeries::zero(order);
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    /// Validity order: every coefficient at exponent <= order is exact.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Lowest exponent with a nonzero coefficient; `None` when the series is
    /// zero to its order (valuation "infinite").
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn is_zero_to_order(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient at exponent `e`; exact only for e <= order.
    pub fn coeff(&self, e: i64) -> CycNum {
        self.coeffs.get(&e).cloned().unwrap_or_else(CycNum::zero)
    }

    /// Iterate stored (exponent, coefficient) pairs in ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &CycNum)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Add `c` into the coefficient at `e`, respecting sparsity and order.
    pub fn add_term(&mut self, e: i64, c: CycNum) {
        if e > self.order || c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// Restrict the validity order (dropping any stored terms beyond it).
    pub fn truncate(&self, order: i64) -> QSeries {
        let order = order.min(self.order);
        QSeries {
            coeffs: self
                .coeffs
                .range(..=order)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
            order,
        }
    }

    /// Coefficientwise sum; validity order is the smaller of the two.
    pub fn add(&self, other: &QSeries) -> QSeries {
        let order = self.order.min(other.order);
        let mut out = self.truncate(order);
        for (e, c) in other.coeffs.range(..=order) {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
            order: self.order,
        }
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.neg())
    }

    /// Multiply every coefficient by the scalar `c`.
    pub fn scale(&self, c: &CycNum) -> QSeries {
        if c.is_zero() {
            return QSeries::zero(self.order);
        }
        QSeries {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
            order: self.order,
        }
    }

    /// Multiply by an exact single term c*q^e.
    pub fn mul_term(&self, c: &CycNum, e: i64) -> QSeries {
        let order = clamp_order(self.order as i128 + e as i128);
        if c.is_zero() {
            return QSeries::zero(order);
        }
        QSeries {
            coeffs: self.coeffs.iter().map(|(k, v)| (k + e, v * c)).collect(),
            order,
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> QSeries {
        self.mul_term(&m.coeff(), m.exp)
    }

    /// Cauchy product. The result order is
    /// min(order(a) + val(b), order(b) + val(a)) -- the largest exponent at
    /// which every contributing pair of terms is still exact. A factor that
    /// is zero to its order contributes its order plus the partner's
    /// valuation.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let order = match (self.valuation(), other.valuation()) {
            (None, None) => ORDER_INF,
            (Some(va), None) => clamp_order(other.order as i128 + va as i128),
            (None, Some(vb)) => clamp_order(self.order as i128 + vb as i128),
            (Some(va), Some(vb)) => clamp_order(
                (self.order as i128 + vb as i128).min(other.order as i128 + va as i128),
            ),
        };
        let mut out = QSeries::zero(order);
        // Iterate the sparser operand outermost.
        let (small, big) = if self.coeffs.len() <= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (e1, c1) in &small.coeffs {
            let cap = order - e1;
            for (e2, c2) in big.coeffs.range(..=cap) {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiplicative inverse up to `target_order`.
    ///
    /// Requires a finite valuation v and order(self) >= target_order + 2v,
    /// which is exactly enough input data to pin every output coefficient.
    /// The result has valuation -v.
    pub fn inv(&self, target_order: i64) -> Result<QSeries> {
        let v = self.valuation().ok_or(Error::ZeroSeries)?;
        let needed = clamp_order(target_order as i128 + 2 * v as i128);
        if self.order < needed {
            return Err(Error::InsufficientOrder {
                needed,
                have: self.order,
            });
        }
        // Result exponents run from -v to target_order: k = 0 .. target_order + v.
        let len = target_order as i128 + v as i128;
        if len < 0 {
            return Ok(QSeries::zero(target_order));
        }
        let len = len as usize;
        let lead = self.coeffs.get(&v).expect("valuation coefficient");
        let lead_inv = lead.inv().expect("leading coefficient nonzero");
        let mut b: Vec<CycNum> = Vec::with_capacity(len + 1);
        b.push(lead_inv.clone());
        for k in 1..=len {
            // sum_{i>=1} a_{v+i} * b_{k-i}, over stored terms of a only
            let mut acc = CycNum::zero();
            for (e, a) in self.coeffs.range(v + 1..=v + k as i64) {
                let i = (e - v) as usize;
                let t = a * &b[k - i];
                acc = &acc + &t;
            }
            b.push(-(&acc * &lead_inv));
        }
        Ok(QSeries::from_terms(
            b.into_iter().enumerate().map(|(k, c)| (k as i64 - v, c)),
            target_order,
        ))
    }

    /// Substitution q -> u * q^k (k >= 1): each term c*q^e becomes
    /// c*u^e*q^{k e}. The result is exact through k*order + (k-1), since the
    /// first unknown input exponent order+1 lands at k*(order+1).
    pub fn subst(&self, u: Unit, k: i64) -> Result<QSeries> {
        if k < 1 {
            return Err(Error::BadArgument(format!(
                "substitution exponent must be >= 1, got {}",
                k
            )));
        }
        let order = clamp_order(self.order as i128 * k as i128 + (k as i128 - 1));
        Ok(QSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e * k, c * &u.pow(*e).embed()))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
            order,
        })
    }
}

/// Outcome of an exact coefficient comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum PsEq {
    Equal,
    Mismatch {
        exponent: i64,
        lhs: CycNum,
        rhs: CycNum,
    },
}

impl PsEq {
    pub fn is_equal(&self) -> bool {
        matches!(self, PsEq::Equal)
    }
}

/// Compare all coefficients with exponent <= `through`, exactly.
///
/// Fails with `InsufficientOrder` when `through` exceeds either validity
/// order; reports the smallest differing exponent otherwise.
pub fn ps_eq(a: &QSeries, b: &QSeries, through: i64) -> Result<PsEq> {
    let have = a.order().min(b.order());
    if through > have {
        return Err(Error::InsufficientOrder {
            needed: through,
            have,
        });
    }
    let mut exps: Vec<i64> = a
        .terms()
        .map(|(e, _)| e)
        .chain(b.terms().map(|(e, _)| e))
        .filter(|e| *e <= through)
        .collect();
    exps.sort_unstable();
    exps.dedup();
    for e in exps {
        let ca = a.coeff(e);
        let cb = b.coeff(e);
        if ca != cb {
            return Ok(PsEq::Mismatch {
                exponent: e,
                lhs: ca,
                rhs: cb,
            });
        }
    }
    Ok(PsEq::Equal)
}

impl fmt::Display for QSeries {
    /// Terms in ascending exponent as `(<coeff>)*q^<e>` joined by " + ",
    /// then `+ O(q^<N+1>)` for the validity order. Exact values (infinite
    /// order) omit the O-term; the empty series prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        } else {
            let mut first = true;
            for (e, c) in &self.coeffs {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "({})*q^{}", c, e)?;
            }
        }
        if self.order < ORDER_INF {
            write!(f, " + O(q^{})", self.order + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
