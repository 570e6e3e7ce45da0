//! Eulerian (q-hypergeometric) series for the named mock theta functions,
//! and their recorded Appell-function forms.
//!
//! Two independent computation paths: [`mock_series`] sums the Eulerian
//! definition term by term, while [`appell_form`] assembles the recorded
//! combination of m(x,z;q) atoms and theta corrections. Their agreement to
//! high order is the central definitional cross-check of the test suite.
//!
//! Third order:
//!   f3(q)     = sum_{n>=0} q^{n^2} / (-q;q)_n^2
//!   psi3(q)   = sum_{n>=1} q^{n^2} / (q;q^2)_n
//!   chi3(q)   = sum_{n>=0} q^{n^2} (-q;q)_n / (-q^3;q^3)_n
//!   omega3(q) = sum_{n>=0} q^{2n(n+1)} / (q;q^2)_{n+1}^2
//! Tenth order:
//!   phi10(q)  = sum_{n>=0} q^{C(n+1,2)} / (q;q^2)_{n+1}
//!   psi10(q)  = sum_{n>=0} q^{C(n+2,2)} / (q;q^2)_{n+1}
//!   X10(q)    = sum_{n>=0} (-1)^n q^{n^2} / (-q;q)_{2n}
//!   chi10(q)  = sum_{n>=0} (-1)^n q^{(n+1)^2} / (-q;q)_{2n+1}
//! Sixth order:
//!   phi6(q)   = sum_{n>=0} (-1)^n q^{n^2} (q;q^2)_n / (-q;q)_{2n}
//!   psi6(q)   = sum_{n>=0} (-1)^n q^{(n+1)^2} (q;q^2)_n / (-q;q)_{2n+1}

use crate::appell::{appell_m, AppellSpec, ThetaCombo};
use crate::cyclotomic::{CycNum, Unit};
use crate::error::{Error, Result};
use crate::qseries::{Monomial, QSeries};
use crate::theta::{named_j_spec, pochhammer, JKind, PochOrder};

/// The closed enumeration of mock theta functions known to the engine.
/// The sixth-order phi/psi reuse letters that the third-order functions
/// already claimed; the tags keep them apart.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MockName {
    F3,
    Psi3,
    Chi3,
    Omega3,
    Phi10,
    Psi10,
    X10,
    Chi10,
    Phi6,
    Psi6,
}

pub const ALL_MOCK_NAMES: [MockName; 10] = [
    MockName::F3,
    MockName::Psi3,
    MockName::Chi3,
    MockName::Omega3,
    MockName::Phi10,
    MockName::Psi10,
    MockName::X10,
    MockName::Chi10,
    MockName::Phi6,
    MockName::Psi6,
];

impl MockName {
    /// Expression-language spelling.
    pub fn as_str(self) -> &'static str {
        match self {
            MockName::F3 => "f3",
            MockName::Psi3 => "psi3",
            MockName::Chi3 => "chi3",
            MockName::Omega3 => "omega3",
            MockName::Phi10 => "phi10",
            MockName::Psi10 => "psi10",
            MockName::X10 => "X10",
            MockName::Chi10 => "chi10",
            MockName::Phi6 => "phi6",
            MockName::Psi6 => "psi6",
        }
    }

    pub fn parse(s: &str) -> Option<MockName> {
        ALL_MOCK_NAMES.iter().copied().find(|n| n.as_str() == s)
    }
}

impl std::fmt::Display for MockName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

fn q(e: i64) -> Monomial {
    Monomial::q_pow(e)
}

fn mq(e: i64) -> Monomial {
    Monomial::new(Unit::MINUS_ONE, e)
}

/// One Eulerian term: sign * q^exp * num_poch / den_poch, with Pochhammer
/// symbols given as (argument, base, length).
struct EulerianTerm {
    sign: i64,
    exp: i64,
    num: Option<(Monomial, Monomial, u32)>,
    den: Vec<(Monomial, Monomial, u32)>,
}

fn eulerian_term(name: MockName, n: i64) -> EulerianTerm {
    let nn = n as u32;
    let alt = if n % 2 == 0 { 1 } else { -1 };
    match name {
        MockName::F3 => EulerianTerm {
            sign: 1,
            exp: n * n,
            num: None,
            den: vec![(mq(1), q(1), nn), (mq(1), q(1), nn)],
        },
        MockName::Psi3 => EulerianTerm {
            sign: 1,
            exp: n * n,
            num: None,
            den: vec![(q(1), q(2), nn)],
        },
        MockName::Chi3 => EulerianTerm {
            sign: 1,
            exp: n * n,
            num: Some((mq(1), q(1), nn)),
            den: vec![(mq(3), q(3), nn)],
        },
        MockName::Omega3 => EulerianTerm {
            sign: 1,
            exp: 2 * n * (n + 1),
            num: None,
            den: vec![(q(1), q(2), nn + 1), (q(1), q(2), nn + 1)],
        },
        MockName::Phi10 => EulerianTerm {
            sign: 1,
            exp: n * (n + 1) / 2,
            num: None,
            den: vec![(q(1), q(2), nn + 1)],
        },
        MockName::Psi10 => EulerianTerm {
            sign: 1,
            exp: (n + 1) * (n + 2) / 2,
            num: None,
            den: vec![(q(1), q(2), nn + 1)],
        },
        MockName::X10 => EulerianTerm {
            sign: alt,
            exp: n * n,
            num: None,
            den: vec![(mq(1), q(1), 2 * nn)],
        },
        MockName::Chi10 => EulerianTerm {
            sign: alt,
            exp: (n + 1) * (n + 1),
            num: None,
            den: vec![(mq(1), q(1), 2 * nn + 1)],
        },
        MockName::Phi6 => EulerianTerm {
            sign: alt,
            exp: n * n,
            num: Some((q(1), q(2), nn)),
            den: vec![(mq(1), q(1), 2 * nn)],
        },
        MockName::Psi6 => EulerianTerm {
            sign: alt,
            exp: (n + 1) * (n + 1),
            num: Some((q(1), q(2), nn)),
            den: vec![(mq(1), q(1), 2 * nn + 1)],
        },
    }
}

/// First summation index (psi3 starts at n = 1, everything else at 0).
fn first_index(name: MockName) -> i64 {
    if name == MockName::Psi3 {
        1
    } else {
        0
    }
}

/// Sum the Eulerian definition at plain q, exact to `target_order`.
///
/// The quadratic numerator exponent is the term valuation (each Pochhammer
/// factor has constant term 1), so summation stops at the first index whose
/// exponent exceeds the target, and each denominator is inverted only to
/// the order it still contributes.
pub fn mock_series(name: MockName, target_order: i64) -> QSeries {
    let mut out = QSeries::zero(target_order);
    let mut n = first_index(name);
    loop {
        let term = eulerian_term(name, n);
        if term.exp > target_order {
            break;
        }
        let rest = target_order - term.exp;
        let mut den = QSeries::one();
        for (x, base, len) in &term.den {
            let p =
                pochhammer(*x, *base, PochOrder::Finite(*len), rest).expect("finite product");
            den = den.mul(&p).truncate(rest);
        }
        let mut piece = den.inv(rest).expect("constant term 1");
        if let Some((x, base, len)) = term.num {
            let p = pochhammer(x, base, PochOrder::Finite(len), rest).expect("finite product");
            piece = piece.mul(&p).truncate(rest);
        }
        let c = CycNum::from_int(term.sign);
        out = out.add(&piece.mul_term(&c, term.exp));
        n += 1;
    }
    out
}

/// Which recorded Appell form: the theta-less combination of m-functions,
/// or the classical single-m form with a theta-quotient correction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AppellFormKind {
    ThetaLess,
    Classical,
}

/// The Appell forms recorded for a name (empty when none is recorded).
pub fn appell_forms(name: MockName) -> &'static [AppellFormKind] {
    match name {
        MockName::F3 => &[AppellFormKind::ThetaLess, AppellFormKind::Classical],
        MockName::Psi3 => &[AppellFormKind::Classical],
        MockName::Omega3 | MockName::Phi6 | MockName::Psi6 => &[AppellFormKind::ThetaLess],
        _ => &[],
    }
}

/// Evaluate the default recorded Appell form of a mock theta function.
/// The tenth-order functions have none recorded; they error.
pub fn appell_form(name: MockName, target_order: i64) -> Result<QSeries> {
    match appell_forms(name).first() {
        Some(kind) => appell_form_kind(name, *kind, target_order),
        None => Err(Error::UnsupportedForm(name.as_str())),
    }
}

/// Evaluate a specific recorded Appell form.
///
/// - f3 theta-less: 2 m(-q,q;q^3) + 2 m(-q,q^2;q^3)
/// - f3 classical:  4 m(-q,q;q^3) + J_{3,6}^2 / J_1
/// - psi3 classical: -m(q,-q;-q^3) + q J_12^3 / (J_4 J_{3,12})
/// - omega3 theta-less: -q^{-1} m(q,q^2;q^6) - q^{-1} m(q,q^4;q^6)
/// - phi6: 2 m(q,-1;q^3)
/// - psi6: m(1,-q;q^3)
pub fn appell_form_kind(
    name: MockName,
    kind: AppellFormKind,
    target_order: i64,
) -> Result<QSeries> {
    if !appell_forms(name).contains(&kind) {
        return Err(Error::UnsupportedForm(name.as_str()));
    }
    let two = CycNum::from_int(2);
    match (name, kind) {
        (MockName::F3, AppellFormKind::ThetaLess) => {
            let a = appell_m(AppellSpec::new(mq(1), q(1), q(3)), target_order)?;
            let b = appell_m(AppellSpec::new(mq(1), q(2), q(3)), target_order)?;
            Ok(a.add(&b).scale(&two))
        }
        (MockName::F3, AppellFormKind::Classical) => {
            let a = appell_m(AppellSpec::new(mq(1), q(1), q(3)), target_order)?;
            let corr = ThetaCombo {
                coeff: CycNum::one(),
                shift: 0,
                num: vec![named_j_spec(JKind::J, 3, 6)?, named_j_spec(JKind::J, 3, 6)?],
                den: vec![named_j_spec(JKind::Jeta, 1, 0)?],
            };
            Ok(a.scale(&CycNum::from_int(4)).add(&corr.eval(target_order)?))
        }
        (MockName::Psi3, AppellFormKind::Classical) => {
            // the -q^3 base exercises negative-unit bases
            let a = appell_m(AppellSpec::new(q(1), mq(1), mq(3)), target_order)?;
            let corr = ThetaCombo {
                coeff: CycNum::one(),
                shift: 1,
                num: vec![
                    named_j_spec(JKind::Jeta, 12, 0)?,
                    named_j_spec(JKind::Jeta, 12, 0)?,
                    named_j_spec(JKind::Jeta, 12, 0)?,
                ],
                den: vec![
                    named_j_spec(JKind::Jeta, 4, 0)?,
                    named_j_spec(JKind::J, 3, 12)?,
                ],
            };
            Ok(a.neg().add(&corr.eval(target_order)?))
        }
        (MockName::Omega3, AppellFormKind::ThetaLess) => {
            let a = appell_m(AppellSpec::new(q(1), q(2), q(6)), target_order + 1)?;
            let b = appell_m(AppellSpec::new(q(1), q(4), q(6)), target_order + 1)?;
            Ok(a.add(&b)
                .mul_term(&-CycNum::one(), -1)
                .truncate(target_order))
        }
        (MockName::Phi6, AppellFormKind::ThetaLess) => {
            let a = appell_m(AppellSpec::new(q(1), mq(0), q(3)), target_order)?;
            Ok(a.scale(&two))
        }
        (MockName::Psi6, AppellFormKind::ThetaLess) => {
            appell_m(AppellSpec::new(q(0), mq(1), q(3)), target_order)
        }
        _ => Err(Error::UnsupportedForm(name.as_str())),
    }
}

/// Evaluate a mock theta function at a monomial argument u*q^k (k >= 1):
/// the plain-q Eulerian series is computed to the substitution-adjusted
/// order, then mapped through q -> u q^k.
pub fn mock_series_at(name: MockName, arg: Monomial, target_order: i64) -> Result<QSeries> {
    let k = arg.exp;
    if k < 1 {
        return Err(Error::BadArgument(format!(
            "mock theta argument must be u*q^k with k >= 1, got {}",
            arg
        )));
    }
    // plain order N gives substituted order k*N + (k-1) >= target
    let need = target_order - (k - 1);
    let plain = need.div_euclid(k) + i64::from(need.rem_euclid(k) != 0);
    let series = mock_series(name, plain.max(-1));
    Ok(series.subst(arg.unit, k)?.truncate(target_order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::ps_eq;

    fn int(n: i64) -> CycNum {
        CycNum::from_int(n)
    }

    #[test]
    fn f3_leading_terms() {
        let s = mock_series(MockName::F3, 8);
        assert_eq!(s.coeff(0), int(1));
        for (e, c) in [
            (1, 1),
            (2, -2),
            (3, 3),
            (4, -3),
            (5, 3),
            (6, -5),
            (7, 7),
            (8, -6),
        ] {
            assert_eq!(s.coeff(e), int(c), "f3 coefficient at q^{}", e);
        }
    }

    #[test]
    fn psi3_valuation() {
        let s = mock_series(MockName::Psi3, 10);
        assert_eq!(s.valuation(), Some(1));
        assert_eq!(s.coeff(1), int(1));
    }

    #[test]
    fn eulerian_coefficients_are_rational_integers() {
        for name in [
            MockName::F3,
            MockName::Psi3,
            MockName::Chi3,
            MockName::Omega3,
            MockName::Phi10,
            MockName::Psi10,
            MockName::X10,
            MockName::Chi10,
        ] {
            let s = mock_series(name, 60);
            for (e, c) in s.terms() {
                assert!(
                    c.is_integer(),
                    "{} coefficient at q^{} = {} is not a rational integer",
                    name,
                    e,
                    c
                );
            }
        }
    }

    #[test]
    fn omega3_matches_appell_form_through_q30() {
        let eulerian = mock_series(MockName::Omega3, 30);
        let appell = appell_form(MockName::Omega3, 30).unwrap();
        assert!(ps_eq(&eulerian, &appell, 30).unwrap().is_equal());
    }

    #[test]
    fn f3_matches_both_appell_forms() {
        let eulerian = mock_series(MockName::F3, 40);
        for kind in appell_forms(MockName::F3) {
            let form = appell_form_kind(MockName::F3, *kind, 40).unwrap();
            assert!(
                ps_eq(&eulerian, &form, 40).unwrap().is_equal(),
                "f3 {:?} form",
                kind
            );
        }
    }

    #[test]
    fn psi3_matches_classical_form() {
        let eulerian = mock_series(MockName::Psi3, 40);
        let form = appell_form(MockName::Psi3, 40).unwrap();
        assert!(ps_eq(&eulerian, &form, 40).unwrap().is_equal());
    }

    #[test]
    fn sixth_order_forms_match() {
        for name in [MockName::Phi6, MockName::Psi6] {
            let eulerian = mock_series(name, 40);
            let form = appell_form(name, 40).unwrap();
            assert!(ps_eq(&eulerian, &form, 40).unwrap().is_equal(), "{}", name);
        }
    }

    #[test]
    fn unsupported_forms_error() {
        for name in [
            MockName::Chi3,
            MockName::Phi10,
            MockName::Psi10,
            MockName::X10,
            MockName::Chi10,
        ] {
            assert!(matches!(
                appell_form(name, 10),
                Err(Error::UnsupportedForm(_))
            ));
        }
    }

    #[test]
    fn subst_matches_direct_eulerian_expansion_at_omega_q() {
        // psi10(w q) computed two ways to q^20: substituting q -> w q in the
        // plain series, and summing the Eulerian terms directly with the
        // monomial argument Q = w q (numerator Q^{C(n+2,2)}, denominator
        // (Q;Q^2)_{n+1}).
        let order = 20;
        for u in [Unit::ZETA3, Unit::ZETA3_SQ] {
            let via_subst = mock_series(MockName::Psi10, order).subst(u, 1).unwrap();
            let arg = Monomial::new(u, 1);
            let mut direct = QSeries::zero(order);
            let mut n = 0i64;
            loop {
                let e = (n + 1) * (n + 2) / 2;
                if e > order {
                    break;
                }
                let den = pochhammer(
                    arg,
                    arg.pow(2),
                    PochOrder::Finite(n as u32 + 1),
                    order - e,
                )
                .unwrap();
                let num = arg.pow(e);
                direct = direct.add(
                    &den.inv(order - e)
                        .unwrap()
                        .mul_term(&num.unit.embed(), num.exp),
                );
                n += 1;
            }
            assert!(
                ps_eq(&via_subst, &direct, order).unwrap().is_equal(),
                "psi10 at {}*q",
                u
            );
        }
    }

    #[test]
    fn omega_substitution_difference_is_rational() {
        // (psi10(w q) - psi10(w^2 q)) / (w - w^2) has purely rational
        // coefficients by the conjugation symmetry w <-> w^2
        let s = mock_series(MockName::Psi10, 20);
        let a = s.subst(Unit::ZETA3, 1).unwrap();
        let b = s.subst(Unit::ZETA3_SQ, 1).unwrap();
        let i_sqrt3_inv = CycNum::i_sqrt3().inv().unwrap();
        let d = a.sub(&b).scale(&i_sqrt3_inv);
        for (e, c) in d.terms() {
            assert!(c.is_rational(), "coefficient at q^{} = {}", e, c);
        }
    }

    #[test]
    fn mock_series_at_substitutes() {
        // f3(q^3) at order 60 demands the plain series only to order 20
        let direct = mock_series(MockName::F3, 20).subst(Unit::ONE, 3).unwrap();
        let via = mock_series_at(MockName::F3, Monomial::q_pow(3), 60).unwrap();
        assert!(ps_eq(&direct, &via, 60).unwrap().is_equal());
        assert!(mock_series_at(MockName::F3, Monomial::q_pow(0), 10).is_err());
    }
}
