//! The identity catalog: every verified identity as a pair of expression
//! trees, with its literature source and default verification order.
//!
//! Exact constants are forced by zeta3 = e^{2 pi i/3}:
//!   omega = zeta3,  omega - omega^2 = i*sqrt(3) = 1 + 2*zeta3,
//!   e^{-pi i/3} = -zeta3,  -2i/sqrt(3) = -(2/3)(1 + 2*zeta3).

use once_cell::sync::Lazy;

use crate::appell::{AppellSpec, LerchSpec};
use crate::cyclotomic::{rational, CycNum, Unit};
use crate::mock::MockName;
use crate::qseries::Monomial;
use crate::theta::{JKind, ThetaSpec};

use super::{Expr, IdentityRecord, RecordKind};

fn q(e: i64) -> Monomial {
    Monomial::q_pow(e)
}

fn mq(e: i64) -> Monomial {
    Monomial::new(Unit::MINUS_ONE, e)
}

fn zq(u: Unit, e: i64) -> Monomial {
    Monomial::new(u, e)
}

fn qe(e: i64) -> Expr {
    Expr::QPow(e)
}

fn ci(n: i64) -> Expr {
    Expr::from(n)
}

fn cr(n: i64, d: i64) -> Expr {
    Expr::Const(CycNum::from_rational(rational(n, d)))
}

fn cz(c: CycNum) -> Expr {
    Expr::Const(c)
}

fn jp(a: i64) -> Expr {
    Expr::NamedJ(JKind::Jeta, a, 0)
}

fn jj(a: i64, b: i64) -> Expr {
    Expr::NamedJ(JKind::J, a, b)
}

fn jb(a: i64, b: i64) -> Expr {
    Expr::NamedJ(JKind::Jbar, a, b)
}

fn mk(name: MockName, arg: Monomial) -> Expr {
    Expr::Mock(name, arg)
}

fn m(x: Monomial, z: Monomial, base: Monomial) -> Expr {
    Expr::Appell(AppellSpec::new(x, z, base))
}

fn th(z: Monomial, base: Monomial) -> Expr {
    Expr::Theta(ThetaSpec::new(z, base))
}

/// omega - omega^2 = i sqrt(3) = 1 + 2 zeta3.
fn i_sqrt3() -> Expr {
    cz(CycNum::i_sqrt3())
}

fn omega() -> Expr {
    cz(CycNum::zeta3())
}

fn omega_sq() -> Expr {
    cz(Unit::ZETA3_SQ.embed())
}

/// The raw Lerch sum of the first Garvan-Mukhopadhyay identity:
/// sum (-1)^n zeta3^{2n} q^{n^2+n} / (1 - zeta3 q^{2n+1}).
fn lerch_gm1() -> Expr {
    Expr::Lerch(LerchSpec::new(Unit::ZETA3_SQ, 2, 2, 0, Unit::ZETA3, 2, 1).expect("valid spec"))
}

/// The raw Lerch sum of the second: sum (-1)^n zeta3^n q^{C(n+1,2)} / (1 + q^n).
fn lerch_gm2() -> Expr {
    Expr::Lerch(LerchSpec::new(Unit::ZETA3, 1, 1, 0, Unit::MINUS_ONE, 1, 0).expect("valid spec"))
}

fn active(
    id: &'static str,
    reference: &'static str,
    default_order: i64,
    lhs: Expr,
    rhs: Expr,
) -> IdentityRecord {
    IdentityRecord {
        id,
        kind: RecordKind::Active { lhs, rhs },
        reference,
        default_order,
    }
}

fn build() -> Vec<IdentityRecord> {
    use MockName::*;
    let wq = zq(Unit::ZETA3, 1); // omega * q
    let wwq = zq(Unit::ZETA3_SQ, 1); // omega^2 * q

    let mut records = vec![
        active(
            "third.f-psi",
            "Ramanujan, third order: f3(q) + 4 psi3(-q) = J_1^3/J_2^2",
            150,
            mk(F3, q(1)) + ci(4) * mk(Psi3, mq(1)),
            jp(1).pow(3) / jp(2).pow(2),
        ),
        active(
            "third.chi-f",
            "Ramanujan, third order: 4 chi3(q) - f3(q) = 3 J_3^4/(J_1 J_6^2)",
            150,
            ci(4) * mk(Chi3, q(1)) - mk(F3, q(1)),
            ci(3) * jp(3).pow(4) / (jp(1) * jp(6).pow(2)),
        ),
        active(
            "third.chi-psi",
            "Ramanujan, third order: chi3(q) + psi3(-q) = J_3 J_4^3/(J_2^2 J_12)",
            150,
            mk(Chi3, q(1)) + mk(Psi3, mq(1)),
            jp(3) * jp(4).pow(3) / (jp(2).pow(2) * jp(12)),
        ),
        active(
            "tenth.1",
            "Lost notebook, tenth order (Choi; short Appell proof by Mortenson)",
            60,
            qe(2) * mk(Phi10, q(9)) - (mk(Psi10, wq) - mk(Psi10, wwq)) / i_sqrt3(),
            -(qe(1) * (jj(1, 2) / jj(3, 6)) * (jj(3, 15) * jp(6) / jp(3))),
        ),
        active(
            "tenth.2",
            "Lost notebook, tenth order (Choi; short Appell proof by Mortenson)",
            60,
            qe(-2) * mk(Psi10, q(9))
                + (omega() * mk(Phi10, wq) - omega_sq() * mk(Phi10, wwq)) / i_sqrt3(),
            (jj(1, 2) / jj(3, 6)) * (jj(6, 15) * jp(6) / jp(3)),
        ),
        active(
            "tenth.3",
            "Lost notebook, tenth order (Choi; short Appell proof by Mortenson)",
            60,
            mk(X10, q(9)) + -((omega() * mk(Chi10, wq) - omega_sq() * mk(Chi10, wwq)) / i_sqrt3()),
            (jb(1, 4) / jb(3, 12)) * (jj(18, 30) * jp(3) / jp(6)),
        ),
        active(
            "tenth.4",
            "Lost notebook, tenth order (Choi; short Appell proof by Mortenson)",
            60,
            mk(Chi10, q(9)) + qe(2) * ((mk(X10, wq) - mk(X10, wwq)) / i_sqrt3()),
            -(qe(3) * (jb(1, 4) / jb(3, 12)) * (jj(6, 30) * jp(3) / jp(6))),
        ),
        active(
            "tenth.5",
            "Lost notebook, tenth order, fifth identity (Choi)",
            60,
            mk(Phi10, q(1)) - qe(-1) * mk(Psi10, mq(4)) + qe(-2) * mk(Chi10, q(8)),
            jb(1, 2) * th(mq(2), mq(10)) / jj(2, 8),
        ),
        active(
            "tenth.6",
            "Lost notebook, tenth order, sixth identity (Choi)",
            60,
            mk(Psi10, q(1)) + qe(1) * mk(Phi10, mq(4)) + mk(X10, q(8)),
            jb(1, 2) * th(mq(6), mq(10)) / jj(2, 8),
        ),
        active(
            "sixth.A",
            "Lost notebook, sixth order (Andrews-Hickerson, Entry 7.4.2)",
            100,
            mk(Phi6, q(9)) - mk(Psi6, q(1)) - qe(-3) * mk(Psi6, q(9)),
            jb(3, 12) * jp(6).pow(2) / (jb(1, 4) * jb(9, 36)),
        ),
        active(
            "sixth.B",
            "Lost notebook, sixth order, omega-difference form",
            100,
            (mk(Psi6, wq) - mk(Psi6, wwq)) / (i_sqrt3() * qe(1)),
            jb(1, 4) * jb(9, 36) * jj(3, 6) / (jb(3, 12) * jp(6)),
        ),
        active(
            "gm.1",
            "Garvan-Mukhopadhyay first identity, corrected sign",
            100,
            ci(2) * qe(2) * mk(Omega3, q(3)),
            cz(CycNum::new(rational(-2, 3), rational(-4, 3)))
                + cr(2, 3) * jp(2).pow(4) / (jp(6) * jp(1).pow(2))
                - cr(4, 3) * cz(Unit::MINUS_ZETA3.embed()) * lerch_gm1() / jp(6),
        ),
        active(
            "gm.1.raw",
            "First Garvan-Mukhopadhyay Lerch sum as a theta multiple of an Appell function",
            100,
            lerch_gm1(),
            cz(Unit::MINUS_ZETA3.embed())
                * th(zq(Unit::ZETA3_SQ, 0), q(2))
                * m(zq(Unit::ZETA3_SQ, 1), zq(Unit::ZETA3_SQ, 0), q(2)),
        ),
        active(
            "gm.2",
            "Garvan-Mukhopadhyay second identity, corrected sign and exponent",
            100,
            mk(F3, q(3)),
            cr(1, 3) * jp(1).pow(4) / (jp(3) * jp(2).pow(2)) + cr(4, 3) * lerch_gm2() / jp(3),
        ),
        active(
            "gm.2.raw",
            "Second Garvan-Mukhopadhyay Lerch sum as an eta multiple of an Appell function",
            100,
            lerch_gm2(),
            cz(&CycNum::one() - &CycNum::zeta3())
                * jp(3)
                * m(zq(Unit::MINUS_ZETA3, 0), mq(0), q(1)),
        ),
        active(
            "gm.1.final",
            "Appell form of the first Garvan-Mukhopadhyay identity",
            100,
            ci(2) * m(zq(Unit::ZETA3_SQ, 1), zq(Unit::ZETA3_SQ, 0), q(2)),
            ci(1) - i_sqrt3() * qe(2) * mk(Omega3, q(3))
                - cz(CycNum::i_sqrt3().inv().expect("nonzero"))
                    * jp(2).pow(4)
                    / (jp(1).pow(2) * jp(6)),
        ),
        active(
            "watson.main",
            "Watson's identity: f3(q^8) + 2q omega3(q) + 2q^3 omega3(-q^4) = J_2 J_4^6/(J_1^2 J_8^4)",
            150,
            mk(F3, q(8)) + ci(2) * qe(1) * mk(Omega3, q(1)) + ci(2) * qe(3) * mk(Omega3, mq(4)),
            jp(2) * jp(4).pow(6) / (jp(1).pow(2) * jp(8).pow(4)),
        ),
        active(
            "watson.f3-appell",
            "Watson's Appell form of f3",
            150,
            mk(F3, q(1)),
            ci(4) * m(mq(1), q(1), q(3)) + jj(3, 6).pow(2) / jp(1),
        ),
        active(
            "watson.psi3-appell",
            "Watson's Appell form of psi3 (the -q^3 base)",
            150,
            mk(Psi3, q(1)),
            -m(q(1), mq(1), mq(3)) + qe(1) * jp(12).pow(3) / (jp(4) * jj(3, 12)),
        ),
        active(
            "forms.f3",
            "Theta-less Appell form of f3 (Hickerson-Mortenson)",
            100,
            mk(F3, q(1)),
            ci(2) * m(mq(1), q(1), q(3)) + ci(2) * m(mq(1), q(2), q(3)),
        ),
        active(
            "forms.omega3",
            "Theta-less Appell form of omega3 (Hickerson-Mortenson)",
            100,
            qe(1) * mk(Omega3, q(1)),
            -m(q(1), q(2), q(6)) - m(q(1), q(4), q(6)),
        ),
        active(
            "forms.phi6",
            "Sixth-order phi as a single Appell function",
            100,
            mk(Phi6, q(1)),
            ci(2) * m(q(1), mq(0), q(3)),
        ),
        active(
            "forms.psi6",
            "Sixth-order psi as a single Appell function",
            100,
            mk(Psi6, q(1)),
            m(q(0), mq(1), q(3)),
        ),
        active(
            "step.thirdLine",
            "Theta-pair collapse used in the first Garvan-Mukhopadhyay proof",
            150,
            th(zq(Unit::ZETA3_SQ, 1), q(6)) * th(zq(Unit::ZETA3_SQ, 2), q(6))
                - omega_sq() * th(zq(Unit::ZETA3_SQ, 4), q(6)) * th(zq(Unit::ZETA3_SQ, 5), q(6)),
            th(zq(Unit::ZETA3_SQ, 0), q(3)) * th(mq(1), q(3)),
        ),
        active(
            "step.watson-theta-1",
            "First theta-quotient pair of the Watson proof, summing to half the product side",
            150,
            jp(12).pow(3) / (jj(1, 6) * jp(8)) * (jp(24) / (jp(12).pow(2) * jb(0, 12)))
                * jb(1, 6)
                * jb(3, 6)
                + qe(2) * (jp(12).pow(3) / (jj(3, 6) * jp(8)))
                    * (jp(24) / (jp(12).pow(2) * jb(4, 12)))
                    * jb(1, 6).pow(2),
            cr(1, 2) * jp(2) * jp(4).pow(6) / (jp(1).pow(2) * jp(8).pow(4)),
        ),
    ];

    // Identities stated for the sixth-order functions rho, sigma, lambda,
    // mu, phi_, psi_ cannot be expressed here: those Eulerian series are
    // not among the functions this engine defines. Kept as labeled gaps so
    // the catalog is complete without silently skipping them.
    records.push(IdentityRecord {
        id: "sixth.new-1",
        kind: RecordKind::Gap {
            note: "q rho(q) + q^3 rho(q^9) - 2 sigma(q^9) = q J_{3,6} J_3^2/(J_{1,2} J_{9,18}); \
                   rho, sigma are not in the engine's function set",
        },
        reference: "New sixth-order identities in the tenth-order style",
        default_order: 60,
    });
    records.push(IdentityRecord {
        id: "sixth.new-2",
        kind: RecordKind::Gap {
            note: "q lambda(q) + q^3 lambda(q^9) - 2 mu(q^9) = -J_{3,6} J_6^2/(Jbar_{1,4} Jbar_{9,36}); \
                   lambda, mu are not in the engine's function set",
        },
        reference: "New sixth-order identities in the tenth-order style",
        default_order: 60,
    });
    records.push(IdentityRecord {
        id: "sixth.new-3",
        kind: RecordKind::Gap {
            note: "psi_(q) + q^{-3} psi_(q^9) - phi_(q^9) = q Jbar_{3,12} J_3^2/(J_{1,2} J_{9,18}); \
                   phi_, psi_ are not in the engine's function set",
        },
        reference: "New sixth-order identities in the tenth-order style",
        default_order: 60,
    });
    records
}

static CATALOG: Lazy<Vec<IdentityRecord>> = Lazy::new(build);

/// The full identity catalog, built once. Active records verify; gap
/// records are excluded from pass/fail totals.
pub fn catalog() -> &'static [IdentityRecord] {
    &CATALOG
}
