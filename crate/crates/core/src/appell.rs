//! The Appell function m(x,z;q), generic Lerch-type bilateral sums, and the
//! base-q^4 / base-q^9 splitting expansions.
//!
//! m(x,z;q) = (1/j(z;q)) * sum_{n in Z} (-1)^n q^{C(n,2)} z^n / (1 - q^{n-1} x z)
//!
//! All parameters are monomials u*q^e with u a sixth root of unity, so every
//! geometric denominator expands exactly over Q(zeta3). Genericity is
//! enforced by construction-time checks, not documentation: a vanishing
//! j(z;q) raises [`Error::DegenerateZ`], and a bilateral index whose
//! denominator vanishes at q^0 raises [`Error::NonGenericPole`].

use crate::cyclotomic::{CycNum, Unit};
use crate::error::{Error, Result};
use crate::qseries::{Monomial, QSeries};
use crate::theta::{binom2, theta_sum, theta_valuation, ThetaSpec};

/// Arguments of m(x,z;q).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AppellSpec {
    pub x: Monomial,
    pub z: Monomial,
    pub base: Monomial,
}

impl AppellSpec {
    pub fn new(x: Monomial, z: Monomial, base: Monomial) -> Self {
        AppellSpec { x, z, base }
    }
}

/// A raw bilateral sum sum_n (-1)^n u^n q^{e(n)} / (1 - w q^{c n + d}) with
/// quadratic exponent law e(n) = (a2 n^2 + a1 n + a0)/2.
///
/// The invariants (a2 > 0, a0 even, a2 + a1 even) make e(n) an integer for
/// every n; [`LerchSpec::new`] enforces them.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LerchSpec {
    pub u: Unit,
    pub a2: i64,
    pub a1: i64,
    pub a0: i64,
    pub w: Unit,
    pub c: i64,
    pub d: i64,
}

impl LerchSpec {
    pub fn new(u: Unit, a2: i64, a1: i64, a0: i64, w: Unit, c: i64, d: i64) -> Result<Self> {
        if a2 <= 0 {
            return Err(Error::BadArgument(format!(
                "Lerch exponent law needs a2 > 0, got {}",
                a2
            )));
        }
        if a0.rem_euclid(2) != 0 || (a2 + a1).rem_euclid(2) != 0 {
            return Err(Error::BadArgument(
                "Lerch exponent law (a2 n^2 + a1 n + a0)/2 must be integral: \
                 a0 and a2 + a1 must be even"
                    .into(),
            ));
        }
        Ok(LerchSpec {
            u,
            a2,
            a1,
            a0,
            w,
            c,
            d,
        })
    }

    fn exponent(&self, n: i64) -> i64 {
        (self.a2 * n * n + self.a1 * n + self.a0) / 2
    }
}

/// ceil(a/b) for b > 0.
fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

/// Expansion of 1/(1 - v*q^g) as a series exact to `target_order`.
///
/// - g > 0: sum_{k>=0} v^k q^{g k}
/// - g = 0, v != 1: the exact constant 1/(1-v)
/// - g < 0: rewrite 1/(1-m) = -m^{-1}/(1-m^{-1}), giving
///   -sum_{j>=1} v^{-j} q^{-g j} with leading term -v^{-1} q^{-g}
pub fn geom_expand(v: Unit, g: i64, target_order: i64) -> Result<QSeries> {
    if g == 0 {
        if v.is_one() {
            return Err(Error::PoleAtOne);
        }
        let c = (&CycNum::one() - &v.embed()).inv().expect("1 - v nonzero");
        return Ok(QSeries::constant(c));
    }
    let mut out = QSeries::zero(target_order);
    if g > 0 {
        let mut k = 0i64;
        while g * k <= target_order {
            out.add_term(g * k, v.pow(k).embed());
            k += 1;
        }
    } else {
        let vi = v.inv();
        let mut j = 1i64;
        while -g * j <= target_order {
            out.add_term(-g * j, -vi.pow(j).embed());
            j += 1;
        }
    }
    Ok(out)
}

/// Conservative lower bound on the lowest exponent that index `n` can
/// contribute: the quadratic term exponent minus the possible downward
/// shift from the geometric denominator, i.e. min(e(n), e(n) + g(n)).
/// Being the pointwise min of two upward parabolas, it is monotone outward
/// once the scan passes both integer vertices, so a single exceedance on
/// each tail is a proof that no further index reaches the target.
fn conservative_min(e: i64, g: i64) -> i64 {
    e.min(e + g)
}

/// Sum a bilateral series given its quadratic exponent law, per-index
/// geometric denominator exponent and unit, and per-index coefficient.
///
/// `vertices` are the integer argmins of the parabolas e(n) and e(n) + g(n).
/// `margin` widens the window on both ends (window-soundness test hook).
fn bilateral_sum(
    target_order: i64,
    vertices: (i64, i64),
    margin: i64,
    e: impl Fn(i64) -> i64,
    g: impl Fn(i64) -> i64,
    coeff: impl Fn(i64) -> Unit,
    w: impl Fn(i64) -> Unit,
) -> Result<QSeries> {
    let lo_anchor = vertices.0.min(vertices.1);
    let hi_anchor = vertices.0.max(vertices.1);
    let mut out = QSeries::zero(target_order);
    let add_index = |n: i64, out: &mut QSeries| -> Result<()> {
        let en = e(n);
        let tail = geom_expand(w(n), g(n), target_order - en)?;
        let term = tail.mul_term(&coeff(n).embed(), en).truncate(target_order);
        *out = out.add(&term);
        Ok(())
    };
    for n in lo_anchor..=hi_anchor {
        add_index(n, &mut out)?;
    }
    let mut n = lo_anchor - 1;
    let mut extra = margin;
    loop {
        if conservative_min(e(n), g(n)) > target_order {
            if extra == 0 {
                break;
            }
            extra -= 1;
        }
        add_index(n, &mut out)?;
        n -= 1;
    }
    n = hi_anchor + 1;
    extra = margin;
    loop {
        if conservative_min(e(n), g(n)) > target_order {
            if extra == 0 {
                break;
            }
            extra -= 1;
        }
        add_index(n, &mut out)?;
        n += 1;
    }
    Ok(out)
}

/// Evaluate a raw Lerch-type bilateral sum exactly to `target_order`.
pub fn lerch_sum(spec: LerchSpec, target_order: i64) -> Result<QSeries> {
    lerch_sum_with_margin(spec, target_order, 0)
}

pub(crate) fn lerch_sum_with_margin(
    spec: LerchSpec,
    target_order: i64,
    margin: i64,
) -> Result<QSeries> {
    // A pole 1 - q^0 anywhere in the bilateral sum is fatal no matter the
    // window, so check for an integer solution of c n + d = 0 with w = 1.
    if spec.w.is_one() {
        let has_pole = if spec.c == 0 {
            spec.d == 0
        } else {
            spec.d % spec.c == 0
        };
        if has_pole {
            return Err(Error::PoleAtOne);
        }
    }
    let v1 = ceil_div(-(spec.a2 + spec.a1), 2 * spec.a2);
    let v2 = ceil_div(-(spec.a2 + spec.a1 + 2 * spec.c), 2 * spec.a2);
    bilateral_sum(
        target_order,
        (v1, v2),
        margin,
        |n| spec.exponent(n),
        |n| spec.c * n + spec.d,
        |n| Unit::MINUS_ONE.pow(n) * spec.u.pow(n),
        |_| spec.w,
    )
}

/// Evaluate m(x,z;q) exactly to `target_order`.
///
/// The bilateral numerator is assembled first (term n carries the
/// denominator 1 - base^{n-1} x z, expanded by [`geom_expand`]), then one
/// division by j(z;base) settles the order bookkeeping: the numerator is
/// computed to target + val(j), the inverse to target - val(numerator).
pub fn appell_m(spec: AppellSpec, target_order: i64) -> Result<QSeries> {
    if spec.base.exp < 1 {
        return Err(Error::DivergentProduct);
    }
    let b = spec.base.exp;
    let zx = spec.z.exp;
    let theta = ThetaSpec::new(spec.z, spec.base);
    let v_den = theta_valuation(theta)?.ok_or(Error::DegenerateZ)?;

    // Denominator of term n: 1 - w(n) q^{g(n)} with
    // g(n) = b(n-1) + x.exp + z.exp and w(n) = base.unit^{n-1} x.unit z.unit.
    let shift = spec.x.exp + spec.z.exp;
    let g = |n: i64| b * (n - 1) + shift;
    let w = |n: i64| spec.base.unit.pow(n - 1) * spec.x.unit * spec.z.unit;
    if shift.rem_euclid(b) == 0 {
        let n0 = 1 - shift / b;
        if w(n0).is_one() {
            return Err(Error::NonGenericPole(n0));
        }
    }

    let num_order = target_order + v_den;
    let v1 = ceil_div(-zx, b);
    let v2 = ceil_div(-(zx + b), b);
    let numerator = bilateral_sum(
        num_order,
        (v1, v2),
        0,
        |n| b * binom2(n) + zx * n,
        g,
        |n| Unit::MINUS_ONE.pow(n) * spec.base.unit.pow(binom2(n)) * spec.z.unit.pow(n),
        w,
    )?;

    let v_num = match numerator.valuation() {
        Some(v) => v,
        None => return Ok(QSeries::zero(target_order)),
    };
    if v_num - v_den > target_order {
        return Ok(QSeries::zero(target_order));
    }
    let inv_order = target_order - v_num;
    let den = theta_sum(theta, inv_order + 2 * v_den)?;
    let den_inv = den.inv(inv_order)?;
    Ok(numerator.mul(&den_inv).truncate(target_order))
}

/// A scalar-and-monomial prefactor times a quotient of theta functions,
/// evaluated with exact order bookkeeping: every factor is computed at
/// order target + (its valuation) - (total valuation), which makes the
/// assembled product exact to target.
///
/// A vanishing numerator factor makes the whole quotient the honest zero
/// series; a vanishing denominator factor is a degeneracy error.
#[derive(Clone, Debug)]
pub(crate) struct ThetaCombo {
    pub coeff: CycNum,
    pub shift: i64,
    pub num: Vec<ThetaSpec>,
    pub den: Vec<ThetaSpec>,
}

impl ThetaCombo {
    pub fn eval(&self, target_order: i64) -> Result<QSeries> {
        if self.coeff.is_zero() {
            return Ok(QSeries::zero(target_order));
        }
        let mut den_vals = Vec::with_capacity(self.den.len());
        for spec in &self.den {
            let v = theta_valuation(*spec)?.ok_or(Error::DegenerateZ)?;
            den_vals.push(v);
        }
        let mut num_vals = Vec::with_capacity(self.num.len());
        for spec in &self.num {
            match theta_valuation(*spec)? {
                None => return Ok(QSeries::zero(target_order)),
                Some(v) => num_vals.push(v),
            }
        }
        let v_total = self.shift + num_vals.iter().sum::<i64>() - den_vals.iter().sum::<i64>();
        if v_total > target_order {
            return Ok(QSeries::zero(target_order));
        }
        let mut acc = QSeries::monomial(self.coeff.clone(), self.shift);
        for (spec, v) in self.num.iter().zip(&num_vals) {
            let f = theta_sum(*spec, target_order + v - v_total)?;
            acc = acc.mul(&f);
        }
        for (spec, v) in self.den.iter().zip(&den_vals) {
            let f = theta_sum(*spec, target_order + v - v_total)?;
            acc = acc.mul(&f.inv(target_order - v - v_total)?);
        }
        Ok(acc.truncate(target_order))
    }
}

/// Both sides of the base-q^4 splitting of m(x,z;q):
///
/// m(x,z;q) = m(-q x^2, z'; q^4) - q^{-1} x m(-q^{-1} x^2, z'; q^4)
///   + (z' J_2^3 / (j(xz;q) j(z';q^4))) * [bracket of two theta quotients]
///
/// where q stands for the monomial `base`. The caller compares the two
/// returned series with [`crate::qseries::ps_eq`].
pub fn split_n2(
    x: Monomial,
    z: Monomial,
    zp: Monomial,
    base: Monomial,
    target_order: i64,
) -> Result<(QSeries, QSeries)> {
    let lhs = appell_m(AppellSpec::new(x, z, base), target_order)?;

    let b2 = base.pow(2);
    let b4 = base.pow(4);
    let eta2 = ThetaSpec::new(b2, base.pow(6));
    let x2 = x.pow(2);

    let m1 = appell_m(AppellSpec::new(base.mul(x2).neg(), zp, b4), target_order)?;
    let m2_pref = x.mul(base.inv()).neg();
    let m2 = appell_m(
        AppellSpec::new(x2.mul(base.inv()).neg(), zp, b4),
        target_order - m2_pref.exp.min(0),
    )?;
    let m2_term = m2.mul_monomial(m2_pref).truncate(target_order);

    let common_den = |extra: ThetaSpec| {
        vec![
            ThetaSpec::new(x.mul(z), base),
            ThetaSpec::new(zp, b4),
            ThetaSpec::new(base.mul(x2).mul(zp).neg(), b2),
            extra,
        ]
    };

    let q1 = ThetaCombo {
        coeff: zp.unit.embed(),
        shift: zp.exp,
        num: vec![
            eta2,
            eta2,
            eta2,
            ThetaSpec::new(base.mul(x2).mul(z).mul(zp).neg(), b2),
            ThetaSpec::new(z.pow(2).mul(zp.inv()), b4),
        ],
        den: common_den(ThetaSpec::new(z, b2)),
    };
    let q2_pref = x.mul(z).mul(zp);
    let q2 = ThetaCombo {
        coeff: -q2_pref.unit.embed(),
        shift: q2_pref.exp,
        num: vec![
            eta2,
            eta2,
            eta2,
            ThetaSpec::new(b2.mul(x2).mul(z).mul(zp).neg(), b2),
            ThetaSpec::new(b2.mul(z.pow(2)).mul(zp.inv()), b4),
        ],
        den: common_den(ThetaSpec::new(base.mul(z), b2)),
    };

    let rhs = m1
        .add(&m2_term)
        .add(&q1.eval(target_order)?)
        .add(&q2.eval(target_order)?);
    Ok((lhs.truncate(target_order), rhs.truncate(target_order)))
}

/// Both sides of the base-q^9 splitting of m(x,z;q):
///
/// m(x,z;q) = m(q^3 x^3, z'; q^9) - q^{-1} x m(x^3, z'; q^9)
///   + q^{-3} x^2 m(q^{-3} x^3, z'; q^9)
///   + (z' J_3^3 / (j(xz;q) j(z';q^9) j(x^3 z';q^3))) * [bracket of three]
pub fn split_n3(
    x: Monomial,
    z: Monomial,
    zp: Monomial,
    base: Monomial,
    target_order: i64,
) -> Result<(QSeries, QSeries)> {
    let lhs = appell_m(AppellSpec::new(x, z, base), target_order)?;

    let b3 = base.pow(3);
    let b9 = base.pow(9);
    let eta3 = ThetaSpec::new(b3, b3.pow(3));
    let x3 = x.pow(3);
    let z3 = z.pow(3);

    let m1 = appell_m(AppellSpec::new(b3.mul(x3), zp, b9), target_order)?;
    let m2_pref = x.mul(base.inv()).neg();
    let m2 = appell_m(
        AppellSpec::new(x3, zp, b9),
        target_order - m2_pref.exp.min(0),
    )?;
    let m2_term = m2.mul_monomial(m2_pref).truncate(target_order);
    let m3_pref = x.pow(2).mul(b3.inv());
    let m3 = appell_m(
        AppellSpec::new(x3.mul(b3.inv()), zp, b9),
        target_order - m3_pref.exp.min(0),
    )?;
    let m3_term = m3.mul_monomial(m3_pref).truncate(target_order);

    let common_den = |extra: ThetaSpec| {
        vec![
            ThetaSpec::new(x.mul(z), base),
            ThetaSpec::new(zp, b9),
            ThetaSpec::new(x3.mul(zp), b3),
            extra,
        ]
    };

    // Bracket term k (k = 0,1,2): prefactor x^k z^{k-1} q^{-[k>0]} with sign
    // (-1)^[k=1]; numerator j(q^k x^3 z z'; q^3) j(q^{3k} z^3/z'; q^9);
    // denominator j(q^k z; q^3).
    let mut quotients = Vec::new();
    for k in 0..3i64 {
        let sign = if k == 1 {
            -CycNum::one()
        } else {
            CycNum::one()
        };
        let qshift = if k == 0 { Monomial::one() } else { base.inv() };
        let pref = zp.mul(x.pow(k)).mul(z.pow(k - 1)).mul(qshift);
        quotients.push(ThetaCombo {
            coeff: &sign * &pref.unit.embed(),
            shift: pref.exp,
            num: vec![
                eta3,
                eta3,
                eta3,
                ThetaSpec::new(base.pow(k).mul(x3).mul(z).mul(zp), b3),
                ThetaSpec::new(b3.pow(k).mul(z3).mul(zp.inv()), b9),
            ],
            den: common_den(ThetaSpec::new(base.pow(k).mul(z), b3)),
        });
    }

    let mut rhs = m1.add(&m2_term).add(&m3_term);
    for q in &quotients {
        rhs = rhs.add(&q.eval(target_order)?);
    }
    Ok((lhs.truncate(target_order), rhs.truncate(target_order)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::rational;
    use crate::qseries::{ps_eq, ORDER_INF};
    use crate::theta::eta;

    fn int(n: i64) -> CycNum {
        CycNum::from_int(n)
    }

    fn q(e: i64) -> Monomial {
        Monomial::q_pow(e)
    }

    fn mq(e: i64) -> Monomial {
        Monomial::new(Unit::MINUS_ONE, e)
    }

    fn zu(k: i64, e: i64) -> Monomial {
        Monomial::new(Unit::from_index(k), e)
    }

    #[test]
    fn geom_expand_examples() {
        let s = geom_expand(Unit::ONE, 2, 10).unwrap();
        let expect = QSeries::from_terms((0..=5).map(|k| (2 * k, int(1))), 10);
        assert_eq!(s, expect);

        let c = geom_expand(Unit::MINUS_ONE, 0, 10).unwrap();
        assert_eq!(c, QSeries::constant(CycNum::from_rational(rational(1, 2))));
        assert_eq!(c.order(), ORDER_INF);

        let s = geom_expand(Unit::ONE, -1, 5).unwrap();
        let expect = QSeries::from_terms((1..=5).map(|e| (e, int(-1))), 5);
        assert_eq!(s, expect);

        assert_eq!(geom_expand(Unit::ONE, 0, 5), Err(Error::PoleAtOne));
    }

    fn gm1_spec() -> LerchSpec {
        // sum (-1)^n zeta3^{2n} q^{n^2+n} / (1 - zeta3 q^{2n+1})
        LerchSpec::new(Unit::ZETA3_SQ, 2, 2, 0, Unit::ZETA3, 2, 1).unwrap()
    }

    fn gm2_spec() -> LerchSpec {
        // sum (-1)^n zeta3^n q^{C(n+1,2)} / (1 + q^n)
        LerchSpec::new(Unit::ZETA3, 1, 1, 0, Unit::MINUS_ONE, 1, 0).unwrap()
    }

    #[test]
    fn lerch_invariants_enforced() {
        assert!(LerchSpec::new(Unit::ONE, 0, 1, 0, Unit::ONE, 1, 1).is_err());
        assert!(LerchSpec::new(Unit::ONE, 1, 0, 0, Unit::ONE, 1, 1).is_err());
        assert!(LerchSpec::new(Unit::ONE, 2, 0, 1, Unit::ONE, 1, 1).is_err());
        // w = 1 with c n + d = 0 solvable is a pole
        let s = LerchSpec::new(Unit::ONE, 2, 0, 0, Unit::ONE, 2, 4).unwrap();
        assert_eq!(lerch_sum(s, 10), Err(Error::PoleAtOne));
        let s = LerchSpec::new(Unit::ONE, 2, 0, 0, Unit::ONE, 2, 3).unwrap();
        assert!(lerch_sum(s, 10).is_ok());
    }

    #[test]
    fn gm2_lerch_constant_term() {
        // the n = 0 term is q^0/(1 + q^0) = 1/2, and no other index reaches q^0
        let s = lerch_sum(gm2_spec(), 0).unwrap();
        assert_eq!(s.coeff(0), CycNum::from_rational(rational(1, 2)));
    }

    #[test]
    fn lerch_window_soundness() {
        for (spec, order) in [(gm1_spec(), 40), (gm2_spec(), 40)] {
            let tight = lerch_sum(spec, order).unwrap();
            let wide = lerch_sum_with_margin(spec, order, 5).unwrap();
            assert!(ps_eq(&tight, &wide, order).unwrap().is_equal());
        }
    }

    #[test]
    fn appell_pole_and_degeneracy_checks() {
        // z a pure base power: j(z;q) = 0
        let bad = AppellSpec::new(q(1), q(3), q(3));
        assert_eq!(appell_m(bad, 10), Err(Error::DegenerateZ));
        // m(q,q^2;q^3) has denominator 1 - q^{3(n-1)+3} = 0 at n = 0
        let bad = AppellSpec::new(q(1), q(2), q(3));
        assert_eq!(appell_m(bad, 10), Err(Error::NonGenericPole(0)));
    }

    /// Independent dense-arithmetic oracle for m(-q, q; q^3) through q^8:
    /// bilateral numerator summed over n in [-12, 12] with explicit
    /// geometric tails, divided by the pentagonal expansion of j(q;q^3),
    /// all on dense rational vectors with no QSeries machinery.
    fn oracle_m_negq_q_q3(order: usize) -> Vec<CycNum> {
        let len = order + 1;
        let mut num = vec![CycNum::zero(); len];
        for n in -12i64..=12 {
            let t = 3 * binom2(n) + n;
            let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
            // denominator 1 - q^{3(n-1)}*(-q)*q = 1 + q^{3n-1}
            let g = 3 * n - 1;
            if g > 0 {
                // 1/(1+q^g) = sum (-1)^k q^{g k}
                let mut k = 0i64;
                while t + g * k <= order as i64 {
                    if t + g * k >= 0 {
                        let s = sign * if k % 2 == 0 { 1 } else { -1 };
                        let idx = (t + g * k) as usize;
                        num[idx] = &num[idx] + &int(s);
                    }
                    k += 1;
                }
            } else if g < 0 {
                // 1/(1+q^g) = q^{-g}/(q^{-g}+1) = sum_{j>=1} (-1)^{j-1} q^{-g j}
                let h = -g;
                let mut j = 1i64;
                while t + h * j <= order as i64 {
                    if t + h * j >= 0 {
                        let s = sign * if (j - 1) % 2 == 0 { 1 } else { -1 };
                        let idx = (t + h * j) as usize;
                        num[idx] = &num[idx] + &int(s);
                    }
                    j += 1;
                }
            } else if (0..=order as i64).contains(&t) {
                // g = 0: the term is (+-1) * q^t / 2
                let half = CycNum::from_rational(rational(sign, 2));
                num[t as usize] = &num[t as usize] + &half;
            }
        }
        // j(q;q^3) = sum (-1)^n q^{3 C(n,2) + n}, all exponents >= 0
        let mut den = vec![CycNum::zero(); len];
        for n in -12i64..=12 {
            let t = 3 * binom2(n) + n;
            if (0..=order as i64).contains(&t) {
                let s = if n.rem_euclid(2) == 0 { 1 } else { -1 };
                den[t as usize] = &den[t as usize] + &int(s);
            }
        }
        // dense long division num/den with den[0] = 1
        assert_eq!(den[0], int(1));
        let mut out = vec![CycNum::zero(); len];
        for k in 0..len {
            let mut acc = num[k].clone();
            for i in 1..=k {
                acc = &acc - &(&den[i] * &out[k - i]);
            }
            out[k] = acc;
        }
        out
    }

    #[test]
    fn appell_matches_bilateral_oracle() {
        let oracle = oracle_m_negq_q_q3(8);
        let m = appell_m(AppellSpec::new(mq(1), q(1), q(3)), 8).unwrap();
        for (e, c) in oracle.iter().enumerate() {
            assert_eq!(&m.coeff(e as i64), c, "m(-q,q;q^3) at q^{}", e);
        }
    }

    #[test]
    fn gm1_raw_sum_equals_theta_times_appell() {
        // sum = -zeta3^{-2} j(zeta3^2;q^2) m(zeta3^{-1} q, zeta3^2; q^2)
        let order = 40;
        let lhs = lerch_sum(gm1_spec(), order).unwrap();
        let j = theta_sum(ThetaSpec::new(zu(4, 0), q(2)), order).unwrap();
        let m = appell_m(AppellSpec::new(zu(4, 1), zu(4, 0), q(2)), order).unwrap();
        let rhs = j.mul(&m).scale(&Unit::MINUS_ZETA3.embed());
        assert!(ps_eq(&lhs, &rhs, order).unwrap().is_equal());
    }

    #[test]
    fn gm2_raw_sum_equals_eta_times_appell() {
        // sum = (1 - zeta3) (q^3;q^3)_inf m(-zeta3, -1; q)
        let order = 40;
        let lhs = lerch_sum(gm2_spec(), order).unwrap();
        let e3 = eta(3, order).unwrap();
        let m = appell_m(AppellSpec::new(zu(5, 0), mq(0), q(1)), order).unwrap();
        let c = &CycNum::one() - &CycNum::zeta3();
        let rhs = e3.mul(&m).scale(&c);
        assert!(ps_eq(&lhs, &rhs, order).unwrap().is_equal());
    }

    #[test]
    fn functional_equation_shift_z() {
        // m(x,z;q) = m(x,qz;q)
        let x = zu(5, 2);
        let z = mq(1);
        let base = q(3);
        let a = appell_m(AppellSpec::new(x, z, base), 30).unwrap();
        let b = appell_m(AppellSpec::new(x, base.mul(z), base), 30).unwrap();
        assert!(ps_eq(&a, &b, 30).unwrap().is_equal());
    }

    #[test]
    fn functional_equation_flip() {
        // m(x,z;q) = x^{-1} m(x^{-1}, z^{-1}; q)
        let x = mq(2);
        let z = zu(2, 1);
        let base = q(3);
        let a = appell_m(AppellSpec::new(x, z, base), 25).unwrap();
        let flip = appell_m(AppellSpec::new(x.inv(), z.inv(), base), 25 + x.exp.abs()).unwrap();
        let b = flip.mul_monomial(x.inv()).truncate(25);
        assert!(ps_eq(&a, &b, 25).unwrap().is_equal());
    }

    #[test]
    fn split_n2_on_first_watson_parameter_set() {
        let (lhs, rhs) = split_n2(q(1), q(2), q(8), q(6), 50).unwrap();
        assert!(ps_eq(&lhs, &rhs, 50).unwrap().is_equal());
    }

    #[test]
    fn split_n3_on_gm2_parameter_set() {
        let (lhs, rhs) = split_n3(zu(5, 0), mq(0), q(3), q(1), 40).unwrap();
        assert!(ps_eq(&lhs, &rhs, 40).unwrap().is_equal());
    }

    #[test]
    fn split_n3_on_gm1_parameter_set() {
        let (lhs, rhs) = split_n3(zu(4, 1), zu(4, 0), q(6), q(2), 40).unwrap();
        assert!(ps_eq(&lhs, &rhs, 40).unwrap().is_equal());
    }
}
