//! Theta function evaluators: q-Pochhammer products, the Jacobi triple
//! product j(z;q), and the shorthand families J_{a,b}, Jbar_{a,b}, J_a.
//!
//! j(z;q) = (z;q)_inf (q/z;q)_inf (q;q)_inf = sum_{n in Z} (-1)^n q^{C(n,2)} z^n
//!
//! Both routes are implemented independently: [`theta_sum`] sums the
//! bilateral series over the finite window of indices that can reach the
//! target order, while [`theta_product`] multiplies the three infinite
//! products after reducing z into the fundamental strip by quasi-periodicity.
//! Their agreement is the Jacobi triple product identity and is checked by
//! the test suite on every catalog argument.

use crate::cyclotomic::{CycNum, Unit};
use crate::error::{Error, Result};
use crate::qseries::{Monomial, QSeries};

/// binom(n,2) = n(n-1)/2, evaluated as-is for negative n (always a
/// nonnegative integer on Z).
pub fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Argument pair for j(z;q): z any monomial, base in the |q|<1 regime.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ThetaSpec {
    pub z: Monomial,
    pub base: Monomial,
}

impl ThetaSpec {
    pub fn new(z: Monomial, base: Monomial) -> Self {
        ThetaSpec { z, base }
    }
}

fn check_base(base: Monomial) -> Result<()> {
    if base.exp < 1 {
        return Err(Error::DivergentProduct);
    }
    Ok(())
}

/// Order parameter of a q-Pochhammer symbol.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PochOrder {
    Finite(u32),
    Infinite,
}

/// (x;q)_n = prod_{i=0}^{n-1} (1 - q^i x) for monomial x and base q.
///
/// The finite case is an exact Laurent polynomial. The infinite case needs
/// base.exp >= 1 and x.exp >= 0 (otherwise factors do not tend to 1) and is
/// exact to `target_order`: factors with exponent beyond it are 1 + O(q^N).
pub fn pochhammer(x: Monomial, base: Monomial, n: PochOrder, target_order: i64) -> Result<QSeries> {
    match n {
        PochOrder::Finite(n) => {
            let mut acc = QSeries::one();
            for i in 0..n as i64 {
                let factor_exp = x.exp + i * base.exp;
                let factor_unit = x.unit * base.unit.pow(i);
                let factor = QSeries::from_terms(
                    [
                        (0, CycNum::one()),
                        (factor_exp, -factor_unit.embed()),
                    ],
                    crate::qseries::ORDER_INF,
                );
                acc = acc.mul(&factor);
            }
            Ok(acc)
        }
        PochOrder::Infinite => {
            if base.exp < 1 || x.exp < 0 {
                return Err(Error::DivergentProduct);
            }
            let mut acc = QSeries::one().truncate(target_order);
            let mut i = 0i64;
            loop {
                let factor_exp = x.exp + i * base.exp;
                if factor_exp > target_order {
                    break;
                }
                let factor_unit = x.unit * base.unit.pow(i);
                let factor = QSeries::from_terms(
                    [(0, CycNum::one()), (factor_exp, -factor_unit.embed())],
                    crate::qseries::ORDER_INF,
                );
                acc = acc.mul(&factor).truncate(target_order);
                if acc.is_zero_to_order() {
                    break; // a vanishing factor kills the whole product
                }
                i += 1;
            }
            Ok(acc)
        }
    }
}

/// Reduction of z into the fundamental strip 0 <= exp < base.exp:
/// z = base^n * z' with the quasi-periodicity prefactor
/// (-1)^n base^{-C(n,2)} z'^{-n} so that j(z;base) = prefactor * j(z';base).
struct Reduced {
    zp: Monomial,
    prefactor_unit: Unit,
    prefactor_exp: i64,
}

fn reduce(spec: ThetaSpec) -> Reduced {
    let b = spec.base.exp;
    let n = spec.z.exp.div_euclid(b);
    let zp = Monomial::new(spec.z.unit * spec.base.unit.pow(-n), spec.z.exp.rem_euclid(b));
    let prefactor_unit = Unit::MINUS_ONE.pow(n) * spec.base.unit.pow(-binom2(n)) * zp.unit.pow(-n);
    let prefactor_exp = -spec.base.exp * binom2(n) - n * zp.exp;
    Reduced {
        zp,
        prefactor_unit,
        prefactor_exp,
    }
}

/// Exact valuation of j(z;base), or `None` when the theta function is
/// identically zero (z a pure power of the base, unit included).
pub fn theta_valuation(spec: ThetaSpec) -> Result<Option<i64>> {
    check_base(spec.base)?;
    let r = reduce(spec);
    if r.zp.exp == 0 && r.zp.unit.is_one() {
        return Ok(None);
    }
    Ok(Some(r.prefactor_exp))
}

/// j(z;q) by the bilateral sum: term exponent base.exp*C(n,2) + z.exp*n,
/// coefficient (-1)^n base.unit^{C(n,2)} z.unit^n, over exactly the n whose
/// exponent does not exceed `target_order`.
pub fn theta_sum(spec: ThetaSpec, target_order: i64) -> Result<QSeries> {
    check_base(spec.base)?;
    let b = spec.base.exp;
    let zx = spec.z.exp;
    let texp = |n: i64| b * binom2(n) + zx * n;
    let mut out = QSeries::zero(target_order);
    let mut push = |n: i64| {
        let u = Unit::MINUS_ONE.pow(n) * spec.base.unit.pow(binom2(n)) * spec.z.unit.pow(n);
        out.add_term(texp(n), u.embed());
    };
    // The forward difference texp(n+1) - texp(n) = b*n + zx changes sign
    // exactly once, so texp is strictly decreasing below n0 = ceil(-zx/b)
    // and non-decreasing from n0 on. Scanning outward from n0 visits every
    // index once and may stop at the first exceedance on each tail.
    let n0 = (-zx).div_euclid(b) + i64::from((-zx).rem_euclid(b) != 0);
    let mut n = n0;
    while texp(n) <= target_order {
        push(n);
        n -= 1;
    }
    n = n0 + 1;
    while texp(n) <= target_order {
        push(n);
        n += 1;
    }
    Ok(out)
}

/// j(z;q) by the triple product (z;q)_inf (q/z;q)_inf (q;q)_inf, after
/// reducing z into the fundamental strip so all infinite products converge.
/// Degenerate arguments give the honest zero series, not an error.
pub fn theta_product(spec: ThetaSpec, target_order: i64) -> Result<QSeries> {
    check_base(spec.base)?;
    let r = reduce(spec);
    if r.zp.exp == 0 && r.zp.unit.is_one() {
        return Ok(QSeries::zero(target_order));
    }
    let inner_order = target_order - r.prefactor_exp;
    let base = spec.base;
    let q_over_z = Monomial::new(base.unit * r.zp.unit.inv(), base.exp - r.zp.exp);
    let p1 = pochhammer(r.zp, base, PochOrder::Infinite, inner_order)?;
    let p2 = pochhammer(q_over_z, base, PochOrder::Infinite, inner_order)?;
    let p3 = pochhammer(base, base, PochOrder::Infinite, inner_order)?;
    let product = p1.mul(&p2).mul(&p3);
    Ok(product
        .mul_term(&r.prefactor_unit.embed(), r.prefactor_exp)
        .truncate(target_order))
}

/// The named theta shorthands.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum JKind {
    /// J_{a,b} = j(q^a; q^b)
    J,
    /// Jbar_{a,b} = j(-q^a; q^b)
    Jbar,
    /// J_a = J_{a,3a} = prod_{i>=1} (1 - q^{a i})
    Jeta,
}

/// Evaluate J_{a,b}, Jbar_{a,b}, or J_a by dispatching to [`theta_sum`].
/// Requires b >= 1, and a >= 1 for the eta-type J_a.
pub fn named_j(kind: JKind, a: i64, b: i64, target_order: i64) -> Result<QSeries> {
    let spec = named_j_spec(kind, a, b)?;
    theta_sum(spec, target_order)
}

/// The ThetaSpec behind a named J (J_a is j(q^a; q^{3a})).
pub fn named_j_spec(kind: JKind, a: i64, b: i64) -> Result<ThetaSpec> {
    match kind {
        JKind::J | JKind::Jbar => {
            if b < 1 {
                return Err(Error::BadArgument(format!(
                    "theta base exponent must be >= 1, got {}",
                    b
                )));
            }
            let unit = if matches!(kind, JKind::Jbar) {
                Unit::MINUS_ONE
            } else {
                Unit::ONE
            };
            Ok(ThetaSpec::new(
                Monomial::new(unit, a),
                Monomial::q_pow(b),
            ))
        }
        JKind::Jeta => {
            if a < 1 {
                return Err(Error::BadArgument(format!(
                    "J_a needs a >= 1, got {}",
                    a
                )));
            }
            Ok(ThetaSpec::new(Monomial::q_pow(a), Monomial::q_pow(3 * a)))
        }
    }
}

/// (q^a; q^a)_inf as a series, via the pentagonal-number sum J_a = J_{a,3a}.
pub fn eta(a: i64, target_order: i64) -> Result<QSeries> {
    named_j(JKind::Jeta, a, 0, target_order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{ps_eq, ORDER_INF};

    fn int(n: i64) -> CycNum {
        CycNum::from_int(n)
    }

    fn q(e: i64) -> Monomial {
        Monomial::q_pow(e)
    }

    fn mq(e: i64) -> Monomial {
        Monomial::new(Unit::MINUS_ONE, e)
    }

    #[test]
    fn finite_pochhammer() {
        // (q;q)_2 = (1-q)(1-q^2) = 1 - q - q^2 + q^3
        let p = pochhammer(q(1), q(1), PochOrder::Finite(2), 0).unwrap();
        let expect = QSeries::from_terms(
            [(0, int(1)), (1, int(-1)), (2, int(-1)), (3, int(1))],
            ORDER_INF,
        );
        assert_eq!(p, expect);
        // empty product
        let p0 = pochhammer(q(5), q(2), PochOrder::Finite(0), 0).unwrap();
        assert_eq!(p0, QSeries::one());
    }

    #[test]
    fn euler_product_matches_pentagonal_numbers() {
        // (q;q)_inf = sum (-1)^n q^{n(3n-1)/2}: frozen signs through q^12
        let p = pochhammer(q(1), q(1), PochOrder::Infinite, 12).unwrap();
        let expect = QSeries::from_terms(
            [
                (0, int(1)),
                (1, int(-1)),
                (2, int(-1)),
                (5, int(1)),
                (7, int(1)),
                (12, int(-1)),
            ],
            12,
        );
        assert_eq!(p, expect);
        // and it equals the J_1 = j(q;q^3) sum form
        let j1 = named_j(JKind::Jeta, 1, 0, 12).unwrap();
        assert!(ps_eq(&p, &j1, 12).unwrap().is_equal());
    }

    #[test]
    fn pochhammer_divergence_rejected() {
        assert_eq!(
            pochhammer(q(-1), q(1), PochOrder::Infinite, 10),
            Err(Error::DivergentProduct)
        );
        assert_eq!(
            pochhammer(q(1), q(0), PochOrder::Infinite, 10),
            Err(Error::DivergentProduct)
        );
    }

    #[test]
    fn theta_of_pure_base_power_vanishes() {
        // j(q^n; q) = 0
        for e in [-2i64, 0, 1, 2, 5] {
            let s = theta_sum(ThetaSpec::new(q(e), q(1)), 40).unwrap();
            assert!(s.is_zero_to_order(), "j(q^{};q) should vanish", e);
            let p = theta_product(ThetaSpec::new(q(e), q(1)), 40).unwrap();
            assert!(p.is_zero_to_order());
        }
        let s = theta_sum(ThetaSpec::new(q(2), q(1)), 40).unwrap();
        assert_eq!(s.order(), 40);
    }

    #[test]
    fn theta_at_minus_one_has_constant_two() {
        let s = theta_sum(ThetaSpec::new(mq(0), q(1)), 30).unwrap();
        assert_eq!(s.coeff(0), int(2));
    }

    #[test]
    fn theta_at_zeta3sq_is_unit_times_eta() {
        // j(zeta3^2; q^2) = (1 - zeta3^2) * J_6
        let s = theta_sum(ThetaSpec::new(Monomial::new(Unit::ZETA3_SQ, 0), q(2)), 60).unwrap();
        let j6 = eta(6, 60).unwrap();
        let unit = &CycNum::one() - &Unit::ZETA3_SQ.embed();
        assert!(ps_eq(&s, &j6.scale(&unit), 60).unwrap().is_equal());
    }

    #[test]
    fn theta_at_zeta3_is_unit_times_eta() {
        // j(zeta3; q) = (1 - zeta3) * J_3
        let s = theta_sum(ThetaSpec::new(Monomial::new(Unit::ZETA3, 0), q(1)), 60).unwrap();
        let j3 = eta(3, 60).unwrap();
        let unit = &CycNum::one() - &CycNum::zeta3();
        assert!(ps_eq(&s, &j3.scale(&unit), 60).unwrap().is_equal());
    }

    #[test]
    fn sum_and_product_agree() {
        let specs = [
            ThetaSpec::new(q(1), q(3)),
            ThetaSpec::new(mq(1), q(4)),
            ThetaSpec::new(Monomial::new(Unit::ZETA3_SQ, 0), q(2)),
            ThetaSpec::new(mq(2), mq(10)),
            ThetaSpec::new(Monomial::new(Unit::ZETA3, -3), q(5)),
            ThetaSpec::new(q(11), q(4)),
        ];
        for spec in specs {
            let s = theta_sum(spec, 100).unwrap();
            let p = theta_product(spec, 100).unwrap();
            assert!(
                ps_eq(&s, &p, 100).unwrap().is_equal(),
                "triple product failed for j({};{})",
                spec.z,
                spec.base
            );
        }
    }

    #[test]
    fn product_rearrangements() {
        // J_{1,2} = J_1^2 / J_2
        let lhs = named_j(JKind::J, 1, 2, 50).unwrap();
        let j1 = eta(1, 50).unwrap();
        let j2 = eta(2, 50).unwrap();
        let rhs = j1.mul(&j1).mul(&j2.inv(50).unwrap());
        assert!(ps_eq(&lhs, &rhs, 50).unwrap().is_equal());

        // Jbar_{1,2} = J_2^5 / (J_1^2 J_4^2)
        let lhs = named_j(JKind::Jbar, 1, 2, 50).unwrap();
        let j4 = eta(4, 50).unwrap();
        let num = j2.mul(&j2).mul(&j2).mul(&j2).mul(&j2);
        let den = j1.mul(&j1).mul(&j4).mul(&j4);
        let rhs = num.mul(&den.inv(50).unwrap());
        assert!(ps_eq(&lhs, &rhs, 50).unwrap().is_equal());

        // Jbar_{0,1} = 2*Jbar_{1,4}
        let lhs = named_j(JKind::Jbar, 0, 1, 50).unwrap();
        let rhs = named_j(JKind::Jbar, 1, 4, 50).unwrap().scale(&int(2));
        assert!(ps_eq(&lhs, &rhs, 50).unwrap().is_equal());
    }

    #[test]
    fn jeta_constant_term() {
        let j = eta(1, 30).unwrap();
        assert_eq!(j.coeff(0), int(1));
        assert!(named_j(JKind::Jeta, 0, 0, 10).is_err());
        assert!(named_j(JKind::J, 1, 0, 10).is_err());
    }

    #[test]
    fn eta_inverse_roundtrips_to_one() {
        let j1 = eta(1, 60).unwrap();
        let inv = j1.inv(60).unwrap();
        let p = j1.mul(&inv);
        assert!(ps_eq(&p, &QSeries::one(), 60).unwrap().is_equal());
        // 1/(q;q)_inf is the partition generating function
        for (e, expect) in [(0, 1), (1, 1), (2, 2), (3, 3), (4, 5), (5, 7), (10, 42)] {
            assert_eq!(inv.coeff(e), int(expect), "p({})", e);
        }
    }

    #[test]
    fn valuation_matches_series() {
        let specs = [
            ThetaSpec::new(q(7), q(3)),
            ThetaSpec::new(mq(-4), q(2)),
            ThetaSpec::new(Monomial::new(Unit::ZETA3, 9), q(4)),
            ThetaSpec::new(q(-6), mq(5)),
        ];
        for spec in specs {
            let v = theta_valuation(spec).unwrap().unwrap();
            let s = theta_sum(spec, v + 30).unwrap();
            assert_eq!(s.valuation(), Some(v), "valuation of j({};{})", spec.z, spec.base);
        }
        // degenerate: unit and exponent both matching a base power
        let degen = ThetaSpec::new(mq(5), mq(1));
        assert_eq!(theta_valuation(degen).unwrap(), None);
    }
}
