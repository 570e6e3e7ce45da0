//! Expression trees for q-series, the order-propagating evaluator, the
//! identity catalog, and the verification engine.
//!
//! An [`Expr`] is an evaluation tree whose leaves are theta atoms, Appell
//! atoms, Lerch sums, Eulerian mock theta series, Pochhammer symbols, and
//! constants, combined by exact ring operations and series division.
//! [`eval`] produces a series exact to the requested order by propagating
//! order demands through the tree: valuations are probed bottom-up and
//! every division or Laurent shift raises the demand on the affected
//! subtree. [`required_order`] exposes the resulting per-leaf assignment.

mod catalog;
mod parse;

pub use catalog::catalog;
pub use parse::{parse, ParseError};

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use crate::appell::{appell_m, lerch_sum, AppellSpec, LerchSpec};
use crate::cyclotomic::{CycNum, Rational};
use crate::error::{Error, Result};
use crate::mock::{mock_series_at, MockName};
use crate::qseries::{ps_eq, Monomial, PsEq, QSeries};
use crate::theta::{named_j, pochhammer, theta_sum, JKind, PochOrder, ThetaSpec};

/// An evaluation tree for q-series expressions.
#[derive(Clone, PartialEq, Debug)]
pub enum Expr {
    Const(CycNum),
    /// q^e for an integer e (Laurent shifts included).
    QPow(i64),
    Theta(ThetaSpec),
    NamedJ(JKind, i64, i64),
    Appell(AppellSpec),
    Lerch(LerchSpec),
    Mock(MockName, Monomial),
    Poch(Monomial, Monomial, PochOrder),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    IntPow(Box<Expr>, i32),
}

impl Expr {
    pub fn pow(self, k: i32) -> Expr {
        Expr::IntPow(Box::new(self), k)
    }

    fn is_leaf(&self) -> bool {
        !matches!(
            self,
            Expr::Neg(_)
                | Expr::Add(..)
                | Expr::Sub(..)
                | Expr::Mul(..)
                | Expr::Div(..)
                | Expr::IntPow(..)
        )
    }
}

impl From<i64> for Expr {
    fn from(n: i64) -> Expr {
        Expr::Const(CycNum::from_int(n))
    }
}

macro_rules! expr_binop {
    ($trait:ident, $method:ident, $node:ident) => {
        impl std::ops::$trait for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$node(Box::new(self), Box::new(rhs))
            }
        }
    };
}

expr_binop!(Add, add, Add);
expr_binop!(Sub, sub, Sub);
expr_binop!(Mul, mul, Mul);
expr_binop!(Div, div, Div);

impl std::ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

/// The order demanded of one leaf so that the root comes out exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafDemand {
    /// Child-index path from the root.
    pub path: Vec<u32>,
    /// Printed form of the leaf.
    pub leaf: String,
    /// Demanded validity order (for mock atoms: the plain-q order before
    /// substitution).
    pub order: i64,
}

struct Engine<'a> {
    demands: Option<&'a mut BTreeMap<Vec<u32>, (String, i64)>>,
}

impl Engine<'_> {
    fn record(&mut self, path: &[u32], e: &Expr, order: i64) {
        if let Some(map) = self.demands.as_deref_mut() {
            let entry = map
                .entry(path.to_vec())
                .or_insert_with(|| (e.to_string(), i64::MIN));
            entry.1 = entry.1.max(order);
        }
    }

    fn eval(&mut self, e: &Expr, target: i64, path: &mut Vec<u32>) -> Result<QSeries> {
        if e.is_leaf() {
            return self.eval_leaf(e, target, path);
        }
        match e {
            Expr::Neg(a) => {
                path.push(0);
                let s = self.eval(a, target, path);
                path.pop();
                Ok(s?.neg())
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                path.push(0);
                let sa = self.eval(a, target, path);
                path.pop();
                path.push(1);
                let sb = self.eval(b, target, path);
                path.pop();
                let (sa, sb) = (sa?, sb?);
                let s = if matches!(e, Expr::Add(..)) {
                    sa.add(&sb)
                } else {
                    sa.sub(&sb)
                };
                Ok(s.truncate(target))
            }
            Expr::Mul(a, b) => {
                path.push(0);
                let sa = self.eval(a, target, path);
                path.pop();
                path.push(1);
                let sb = self.eval(b, target, path);
                path.pop();
                let (mut sa, mut sb) = (sa?, sb?);
                // A partner with negative valuation pulls coefficients from
                // beyond the probe order down below the target: re-demand.
                if let Some(vb) = sb.valuation() {
                    if vb < 0 {
                        path.push(0);
                        sa = self.eval(a, target - vb, path)?;
                        path.pop();
                    }
                }
                if let Some(va) = sa.valuation() {
                    if va < 0 {
                        path.push(1);
                        sb = self.eval(b, target - va, path)?;
                        path.pop();
                    }
                }
                Ok(sa.mul(&sb).truncate(target))
            }
            Expr::Div(a, b) => {
                path.push(1);
                let probe = self.eval(b, target, path);
                path.pop();
                let probe = probe?;
                let vb = probe.valuation().ok_or(Error::ZeroDenominator)?;
                let ta = target + vb.max(0);
                path.push(0);
                let sa = self.eval(a, ta, path);
                path.pop();
                let sa = sa?;
                let va = match sa.valuation() {
                    Some(v) => v,
                    None => return Ok(QSeries::zero(target)),
                };
                let inv_order = target - va;
                if inv_order < -vb {
                    return Ok(QSeries::zero(target));
                }
                let need = inv_order + 2 * vb;
                let sb = if need > probe.order() {
                    path.push(1);
                    let s = self.eval(b, need, path);
                    path.pop();
                    s?
                } else {
                    probe
                };
                Ok(sa.mul(&sb.inv(inv_order)?).truncate(target))
            }
            Expr::IntPow(a, k) => {
                if *k == 0 {
                    return Ok(QSeries::one().truncate(target));
                }
                if *k > 0 {
                    return self.eval_pow(a, *k as u32, target, path);
                }
                // negative power: invert a^{-k}
                let kk = (-*k) as u32;
                let probe = self.eval_pow(a, kk, target, path)?;
                let vb = probe.valuation().ok_or(Error::ZeroDenominator)?;
                let need = target + 2 * vb;
                let den = if need > probe.order() {
                    self.eval_pow(a, kk, need, path)?
                } else {
                    probe
                };
                Ok(den.inv(target)?.truncate(target))
            }
            _ => unreachable!("leaf handled above"),
        }
    }

    fn eval_pow(
        &mut self,
        base: &Expr,
        k: u32,
        target: i64,
        path: &mut Vec<u32>,
    ) -> Result<QSeries> {
        path.push(0);
        let probe = self.eval(base, target, path);
        path.pop();
        let probe = probe?;
        let s = match probe.valuation() {
            None => return Ok(QSeries::zero(target)),
            Some(v) if v < 0 && k > 1 => {
                let t = target - (k as i64 - 1) * v;
                path.push(0);
                let s = self.eval(base, t, path);
                path.pop();
                s?
            }
            Some(_) => probe,
        };
        let mut acc = s.clone();
        for _ in 1..k {
            acc = acc.mul(&s);
        }
        Ok(acc.truncate(target))
    }

    fn eval_leaf(&mut self, e: &Expr, target: i64, path: &[u32]) -> Result<QSeries> {
        let demand = match e {
            Expr::Mock(_, arg) => {
                // report the plain-q order implied by the substitution
                let k = arg.exp.max(1);
                let need = target - (k - 1);
                need.div_euclid(k) + i64::from(need.rem_euclid(k) != 0)
            }
            _ => target,
        };
        self.record(path, e, demand);
        match e {
            Expr::Const(c) => Ok(QSeries::constant(c.clone())),
            Expr::QPow(n) => Ok(QSeries::monomial(CycNum::one(), *n)),
            Expr::Theta(spec) => theta_sum(*spec, target),
            Expr::NamedJ(kind, a, b) => named_j(*kind, *a, *b, target),
            Expr::Appell(spec) => appell_m(*spec, target),
            Expr::Lerch(spec) => lerch_sum(*spec, target),
            Expr::Mock(name, arg) => mock_series_at(*name, *arg, target),
            Expr::Poch(x, base, n) => pochhammer(*x, *base, *n, target),
            _ => unreachable!(),
        }
    }
}

/// Evaluate an expression to a series exact through `target_order`.
pub fn eval(e: &Expr, target_order: i64) -> Result<QSeries> {
    let mut engine = Engine { demands: None };
    let s = engine.eval(e, target_order, &mut Vec::new())?;
    Ok(s.truncate(target_order))
}

/// The per-leaf order assignment produced while evaluating to
/// `target_order`: a bottom-up valuation probe followed by top-down order
/// demands. For mock atoms the reported order is the plain-q order before
/// substitution. Fails like [`eval`] (e.g. `ZeroDenominator` when a
/// division probe sees a zero series).
pub fn required_order(e: &Expr, target_order: i64) -> Result<Vec<LeafDemand>> {
    let mut map = BTreeMap::new();
    let mut engine = Engine {
        demands: Some(&mut map),
    };
    engine.eval(e, target_order, &mut Vec::new())?;
    Ok(map
        .into_iter()
        .map(|(path, (leaf, order))| LeafDemand { path, leaf, order })
        .collect())
}

// ---------------------------------------------------------------------------
// Identity records and verification
// ---------------------------------------------------------------------------

/// A catalog entry: either an active two-sided identity or a labeled gap
/// (stated in the literature but not expressible with the functions this
/// engine defines).
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum RecordKind {
    Active { lhs: Expr, rhs: Expr },
    Gap { note: &'static str },
}

/// A named identity with its literature reference and the order at which
/// the acceptance suite verifies it.
#[derive(Clone, Debug)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub kind: RecordKind,
    pub reference: &'static str,
    pub default_order: i64,
}

impl IdentityRecord {
    pub fn is_active(&self) -> bool {
        matches!(self.kind, RecordKind::Active { .. })
    }
}

/// First differing coefficient of a failed verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: i64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyStatus {
    Pass,
    Fail,
    Error,
    Gap,
}

impl VerifyStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VerifyStatus::Pass => "pass",
            VerifyStatus::Fail => "fail",
            VerifyStatus::Error => "error",
            VerifyStatus::Gap => "gap",
        }
    }
}

/// Result of verifying one catalog record at one order.
#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub id: String,
    pub status: VerifyStatus,
    pub order: i64,
    pub elapsed_ms: u64,
    pub mismatch: Option<Mismatch>,
    pub error_kind: Option<String>,
}

/// Verify one record by exact coefficient comparison through `order`.
/// Evaluation errors are reported as status `error` with the error kind,
/// never as a silent pass or fail; gap records report status `gap`.
pub fn verify(rec: &IdentityRecord, order: i64) -> VerifyOutcome {
    let start = Instant::now();
    let mut outcome = VerifyOutcome {
        id: rec.id.to_string(),
        status: VerifyStatus::Gap,
        order,
        elapsed_ms: 0,
        mismatch: None,
        error_kind: None,
    };
    if let RecordKind::Active { lhs, rhs } = &rec.kind {
        match verify_sides(lhs, rhs, order) {
            Ok(PsEq::Equal) => outcome.status = VerifyStatus::Pass,
            Ok(PsEq::Mismatch { exponent, lhs, rhs }) => {
                outcome.status = VerifyStatus::Fail;
                outcome.mismatch = Some(Mismatch {
                    exponent,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
            Err(err) => {
                outcome.status = VerifyStatus::Error;
                outcome.error_kind = Some(err.kind().to_string());
            }
        }
    }
    outcome.elapsed_ms = start.elapsed().as_millis() as u64;
    outcome
}

fn verify_sides(lhs: &Expr, rhs: &Expr, order: i64) -> Result<PsEq> {
    let l = eval(lhs, order)?;
    let r = eval(rhs, order)?;
    ps_eq(&l, &r, order)
}

/// Look up a catalog record by id.
pub fn find_record(id: &str) -> Option<&'static IdentityRecord> {
    catalog().iter().find(|r| r.id == id)
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

/// Precedence levels: additive 1, multiplicative 2, unary minus 3, power 4,
/// atoms 5. A constant that prints as a compound (e.g. "2*z3") reports the
/// precedence of its printed form.
fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(_) => 3,
        Expr::IntPow(..) => 4,
        Expr::Const(c) => const_prec(c),
        _ => 5,
    }
}

fn const_prec(c: &CycNum) -> u8 {
    let (a, b) = (c.rational_part(), c.zeta_part());
    use num::Zero;
    if b.is_zero() {
        if a < &Rational::zero() {
            3 // leading minus
        } else {
            5
        }
    } else if a.is_zero() {
        if b == &Rational::from_integer(1.into()) {
            5 // "z3"
        } else {
            2 // "b*z3" or 3 for "-..*z3"; 2 is the weaker, parens added where needed
        }
    } else {
        5 // parenthesized composite
    }
}

fn fmt_rational(r: &Rational) -> String {
    use num::One;
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Render a constant in the expression language: rationals verbatim, pure
/// zeta multiples as "b*z3", composites as "(a + b*z3)" / "(a - b*z3)".
fn fmt_const(c: &CycNum) -> String {
    use num::{Signed, Zero};
    let (a, b) = (c.rational_part(), c.zeta_part());
    if b.is_zero() {
        return fmt_rational(a);
    }
    let zpart = if b == &Rational::from_integer(1.into()) {
        "z3".to_string()
    } else if b == &(-Rational::from_integer(1.into())) {
        "-z3".to_string()
    } else {
        format!("{}*z3", fmt_rational(b))
    };
    if a.is_zero() {
        return zpart;
    }
    if b.is_negative() {
        let mag = -b.clone();
        let zmag = if mag == Rational::from_integer(1.into()) {
            "z3".to_string()
        } else {
            format!("{}*z3", fmt_rational(&mag))
        };
        format!("({} - {})", fmt_rational(a), zmag)
    } else {
        format!("({} + {})", fmt_rational(a), zpart)
    }
}

fn fmt_child(e: &Expr, min_prec: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if prec(e) < min_prec {
        write!(f, "({})", e)
    } else {
        write!(f, "{}", e)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => write!(f, "{}", fmt_const(c)),
            Expr::QPow(1) => write!(f, "q"),
            Expr::QPow(e) => write!(f, "q^{}", e),
            Expr::Theta(spec) => write!(f, "j({}; {})", spec.z, spec.base),
            Expr::NamedJ(JKind::J, a, b) => write!(f, "J({},{})", a, b),
            Expr::NamedJ(JKind::Jbar, a, b) => write!(f, "Jb({},{})", a, b),
            Expr::NamedJ(JKind::Jeta, a, _) => write!(f, "Jp({})", a),
            Expr::Appell(spec) => write!(f, "m({}, {}; {})", spec.x, spec.z, spec.base),
            Expr::Lerch(s) => write!(
                f,
                "lerch({}; {},{},{}; {}; {},{})",
                s.u, s.a2, s.a1, s.a0, s.w, s.c, s.d
            ),
            Expr::Mock(name, arg) => write!(f, "{}({})", name, arg),
            Expr::Poch(x, base, PochOrder::Finite(n)) => {
                write!(f, "poch({}; {}; {})", x, base, n)
            }
            Expr::Poch(x, base, PochOrder::Infinite) => {
                write!(f, "poch({}; {}; inf)", x, base)
            }
            Expr::Neg(a) => {
                write!(f, "-")?;
                fmt_child(a, 3, f)
            }
            Expr::Add(a, b) => {
                fmt_child(a, 1, f)?;
                write!(f, " + ")?;
                fmt_child(b, 2, f)
            }
            Expr::Sub(a, b) => {
                fmt_child(a, 1, f)?;
                write!(f, " - ")?;
                fmt_child(b, 2, f)
            }
            Expr::Mul(a, b) => {
                fmt_child(a, 2, f)?;
                write!(f, "*")?;
                fmt_child(b, 3, f)
            }
            Expr::Div(a, b) => {
                fmt_child(a, 2, f)?;
                write!(f, "/")?;
                // A denominator that starts with a digit would re-lex as
                // part of a rational literal ("0/1/2"); parenthesize it.
                let mut rendered = String::new();
                use fmt::Write as _;
                if prec(b) < 3 {
                    write!(rendered, "({})", b)?;
                } else {
                    write!(rendered, "{}", b)?;
                }
                if rendered.starts_with(|c: char| c.is_ascii_digit()) {
                    write!(f, "({})", rendered)
                } else {
                    write!(f, "{}", rendered)
                }
            }
            Expr::IntPow(a, k) => {
                fmt_child(a, 5, f)?;
                write!(f, "^{}", k)
            }
        }
    }
}
