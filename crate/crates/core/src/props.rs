//! Seeded randomized property suites for the classical theta-function and
//! Appell-function transformation laws.
//!
//! Each property draws random monomial parameters (exponents -5..=5, base
//! exponents 1..=6, all six unit coefficients), builds both sides
//! of the law as exact series, and compares coefficients. Degenerate draws
//! (vanishing theta denominators, Appell poles) are rejected and redrawn --
//! up to 100 attempts per case -- never counted as failures.
//!
//! The same seed always produces the same draws and the same report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::appell::{appell_m, split_n2, split_n3, AppellSpec, ThetaCombo};
use crate::cyclotomic::{CycNum, Unit};
use crate::error::Error;
use crate::qseries::{ps_eq, Monomial, PsEq, QSeries, ORDER_INF};
use crate::theta::{binom2, theta_sum, theta_valuation, ThetaSpec};

/// Outcome of a single drawn case.
enum CaseResult {
    Pass,
    Fail(String),
    /// Degenerate parameters; the runner redraws.
    Rejected,
}

/// Summary of one property's run.
#[derive(Clone, Debug)]
pub struct PropReport {
    pub name: &'static str,
    pub cases: u32,
    pub failures: Vec<String>,
    /// Cases abandoned after 100 degenerate draws in a row.
    pub exhausted: u32,
    pub elapsed_ms: u64,
}

impl PropReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.exhausted == 0
    }
}

#[derive(Clone, Copy, Debug)]
pub struct PropConfig {
    pub cases: u32,
    pub order: i64,
    pub seed: u64,
}

impl Default for PropConfig {
    fn default() -> Self {
        PropConfig {
            cases: 50,
            order: 60,
            seed: 0,
        }
    }
}

type PropFn = fn(&mut ChaCha8Rng, i64) -> CaseResult;

const PROPERTIES: &[(&str, PropFn)] = &[
    ("theta.sum-product", prop_sum_product),
    ("theta.inversion", prop_inversion),
    ("theta.quasiperiodicity", prop_quasiperiodicity),
    ("theta.split-base", prop_split_base_any),
    ("theta.split-base-2", prop_split_base_2),
    ("theta.split-base-3", prop_split_base_3),
    ("theta.m-dissection", prop_m_dissection),
    ("theta.root-split", prop_root_split),
    ("theta.product-pair", prop_product_pair),
    ("theta.quintuple", prop_quintuple),
    ("theta.weierstrass", prop_weierstrass),
    ("appell.shift-z", prop_appell_shift_z),
    ("appell.flip", prop_appell_flip),
    ("appell.shift-x", prop_appell_shift_x),
    ("appell.flip-xz", prop_appell_flip_xz),
    ("appell.change-z", prop_appell_change_z),
    ("appell.split-2", prop_appell_split_2),
    ("appell.split-3", prop_appell_split_3),
    ("series.ring", prop_series_ring),
    ("series.subst-mul", prop_series_subst_mul),
    ("series.inv-roundtrip", prop_series_inv_roundtrip),
];

pub fn all_property_names() -> Vec<&'static str> {
    PROPERTIES.iter().map(|(n, _)| *n).collect()
}

/// Run one named property; `None` when the name is unknown.
pub fn run_property(name: &str, config: &PropConfig) -> Option<PropReport> {
    let (name, f) = PROPERTIES.iter().find(|(n, _)| *n == name)?;
    Some(run_one(name, *f, config))
}

/// Run every property suite with the given configuration.
pub fn run_all(config: &PropConfig) -> Vec<PropReport> {
    PROPERTIES
        .iter()
        .map(|(name, f)| run_one(name, *f, config))
        .collect()
}

fn run_one(name: &'static str, f: PropFn, config: &PropConfig) -> PropReport {
    let start = std::time::Instant::now();
    // Per-property stream: reproducible from (seed, name) and independent
    // of suite ordering.
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ fnv1a(name.as_bytes()));
    let mut failures = Vec::new();
    let mut exhausted = 0;
    for case in 0..config.cases {
        let mut done = false;
        for _attempt in 0..100 {
            match f(&mut rng, config.order) {
                CaseResult::Pass => {
                    done = true;
                    break;
                }
                CaseResult::Fail(msg) => {
                    failures.push(format!("case {}: {}", case, msg));
                    done = true;
                    break;
                }
                CaseResult::Rejected => continue,
            }
        }
        if !done {
            exhausted += 1;
        }
    }
    PropReport {
        name,
        cases: config.cases,
        failures,
        exhausted,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in bytes {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

// ---------------------------------------------------------------------------
// draw helpers
// ---------------------------------------------------------------------------

fn draw_unit(rng: &mut ChaCha8Rng) -> Unit {
    Unit::from_index(rng.gen_range(0..6))
}

fn draw_mono(rng: &mut ChaCha8Rng) -> Monomial {
    Monomial::new(draw_unit(rng), rng.gen_range(-5..=5))
}

fn draw_base(rng: &mut ChaCha8Rng) -> Monomial {
    Monomial::new(draw_unit(rng), rng.gen_range(1..=6))
}

/// False when the theta function vanishes identically.
fn nondegenerate(z: Monomial, base: Monomial) -> bool {
    matches!(theta_valuation(ThetaSpec::new(z, base)), Ok(Some(_)))
}

fn check_equal(lhs: &QSeries, rhs: &QSeries, order: i64, what: &str) -> CaseResult {
    match ps_eq(lhs, rhs, order) {
        Ok(PsEq::Equal) => CaseResult::Pass,
        Ok(PsEq::Mismatch { exponent, lhs, rhs }) => CaseResult::Fail(format!(
            "{}: mismatch at q^{}: {} vs {}",
            what, exponent, lhs, rhs
        )),
        Err(e) => CaseResult::Fail(format!("{}: comparison error {}", what, e)),
    }
}

/// Run a closure whose genericity violations surface as evaluator errors,
/// mapping them to a rejection instead of a failure.
fn generic_or_reject(
    what: String,
    f: impl FnOnce() -> crate::error::Result<(QSeries, QSeries, i64)>,
) -> CaseResult {
    match f() {
        Ok((lhs, rhs, order)) => check_equal(&lhs, &rhs, order, &what),
        Err(Error::DegenerateZ) | Err(Error::NonGenericPole(_)) | Err(Error::PoleAtOne) => {
            CaseResult::Rejected
        }
        Err(e) => CaseResult::Fail(format!("{}: evaluation error {}", what, e)),
    }
}

// ---------------------------------------------------------------------------
// theta properties
// ---------------------------------------------------------------------------

/// Jacobi triple product: bilateral sum equals the threefold product.
fn prop_sum_product(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let spec = ThetaSpec::new(draw_mono(rng), draw_base(rng));
    let s = theta_sum(spec, order).expect("base >= 1");
    let p = crate::theta::theta_product(spec, order).expect("base >= 1");
    check_equal(&s, &p, order, &format!("j({};{})", spec.z, spec.base))
}

/// j(x;q) = j(q/x;q).
fn prop_inversion(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let x = draw_mono(rng);
    let base = draw_base(rng);
    if !nondegenerate(x, base) {
        return CaseResult::Rejected;
    }
    let lhs = theta_sum(ThetaSpec::new(x, base), order).unwrap();
    let rhs = theta_sum(ThetaSpec::new(base.mul(x.inv()), base), order).unwrap();
    check_equal(&lhs, &rhs, order, &format!("j({};{}) inverted", x, base))
}

/// j(q^n x;q) = (-1)^n q^{-C(n,2)} x^{-n} j(x;q) for n in [-4,4].
fn prop_quasiperiodicity(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let x = draw_mono(rng);
    let base = draw_base(rng);
    let n: i64 = rng.gen_range(-4..=4);
    if !nondegenerate(x, base) {
        return CaseResult::Rejected;
    }
    let shifted = base.pow(n).mul(x);
    let lhs = theta_sum(ThetaSpec::new(shifted, base), order).unwrap();
    let pref = Monomial::new(
        Unit::MINUS_ONE.pow(n) * base.unit.pow(-binom2(n)) * x.unit.pow(-n),
        -base.exp * binom2(n) - n * x.exp,
    );
    let rhs = theta_sum(ThetaSpec::new(x, base), order - pref.exp)
        .unwrap()
        .mul_monomial(pref)
        .truncate(order);
    check_equal(
        &lhs,
        &rhs,
        order,
        &format!("quasi-periodicity n={} x={} base={}", n, x, base),
    )
}

/// j(x;q) = J_1 * prod_{k<n} j(q^k x; q^n) / J_n^n.
fn split_base_case(rng: &mut ChaCha8Rng, order: i64, n: i64) -> CaseResult {
    let x = draw_mono(rng);
    let base = draw_base(rng);
    if !nondegenerate(x, base) {
        return CaseResult::Rejected;
    }
    let bn = base.pow(n);
    let mut num: Vec<ThetaSpec> = (0..n)
        .map(|k| ThetaSpec::new(base.pow(k).mul(x), bn))
        .collect();
    num.push(ThetaSpec::new(base, base.pow(3))); // J_1 as an eta-type theta
    let den = vec![ThetaSpec::new(bn, bn.pow(3)); n as usize];
    let combo = ThetaCombo {
        coeff: CycNum::one(),
        shift: 0,
        num,
        den,
    };
    generic_or_reject(format!("base split n={} x={} base={}", n, x, base), || {
        let lhs = theta_sum(ThetaSpec::new(x, base), order)?;
        let rhs = combo.eval(order)?;
        Ok((lhs, rhs, order))
    })
}

fn prop_split_base_any(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let n = rng.gen_range(2..=4);
    split_base_case(rng, order, n)
}

fn prop_split_base_2(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    split_base_case(rng, order, 2)
}

fn prop_split_base_3(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    split_base_case(rng, order, 3)
}

/// m-dissection: j(z;q) = sum_{k<m} (-1)^k q^{C(k,2)} z^k
/// j((-1)^{m+1} q^{C(m,2)+mk} z^m; q^{m^2}).
fn prop_m_dissection(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let z = draw_mono(rng);
    let base = draw_base(rng);
    let m: i64 = rng.gen_range(2..=3);
    if !nondegenerate(z, base) {
        return CaseResult::Rejected;
    }
    let lhs = theta_sum(ThetaSpec::new(z, base), order).unwrap();
    let sign = if m % 2 == 0 {
        Unit::MINUS_ONE
    } else {
        Unit::ONE
    };
    let mut rhs = QSeries::zero(order);
    for k in 0..m {
        let pref = Monomial::new(
            Unit::MINUS_ONE.pow(k) * base.unit.pow(binom2(k)) * z.unit.pow(k),
            base.exp * binom2(k) + z.exp * k,
        );
        let arg = Monomial::new(sign, 0)
            .mul(base.pow(binom2(m) + m * k))
            .mul(z.pow(m));
        let theta = theta_sum(ThetaSpec::new(arg, base.pow(m * m)), order - pref.exp).unwrap();
        rhs = rhs.add(&theta.mul_monomial(pref).truncate(order));
    }
    check_equal(
        &lhs,
        &rhs,
        order,
        &format!("{}-dissection z={} base={}", m, z, base),
    )
}

/// Root-of-unity split: j(x^n;q^n) = J_n prod_i j(zeta_n^i x;q) / J_1^n.
fn prop_root_split(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let x = draw_mono(rng);
    let base = draw_base(rng);
    let n: i64 = rng.gen_range(2..=3);
    let zeta_n = if n == 2 { Unit::MINUS_ONE } else { Unit::ZETA3 };
    let bn = base.pow(n);
    if !nondegenerate(x.pow(n), bn) {
        return CaseResult::Rejected;
    }
    let mut num: Vec<ThetaSpec> = (0..n)
        .map(|i| ThetaSpec::new(Monomial::new(zeta_n.pow(i), 0).mul(x), base))
        .collect();
    num.push(ThetaSpec::new(bn, bn.pow(3)));
    let den = vec![ThetaSpec::new(base, base.pow(3)); n as usize];
    let combo = ThetaCombo {
        coeff: CycNum::one(),
        shift: 0,
        num,
        den,
    };
    generic_or_reject(format!("root split n={} x={} base={}", n, x, base), || {
        let lhs = theta_sum(ThetaSpec::new(x.pow(n), bn), order)?;
        let rhs = combo.eval(order)?;
        Ok((lhs, rhs, order))
    })
}

/// j(x;q)j(y;q) = j(-xy;q^2)j(-q x^{-1} y;q^2) - x j(-q xy;q^2)j(-x^{-1} y;q^2).
fn prop_product_pair(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let x = draw_mono(rng);
    let y = draw_mono(rng);
    let base = draw_base(rng);
    let b2 = base.pow(2);
    let specs = [
        ThetaSpec::new(x, base),
        ThetaSpec::new(y, base),
        ThetaSpec::new(x.mul(y).neg(), b2),
        ThetaSpec::new(base.mul(x.inv()).mul(y).neg(), b2),
        ThetaSpec::new(base.mul(x).mul(y).neg(), b2),
        ThetaSpec::new(x.inv().mul(y).neg(), b2),
    ];
    if specs.iter().any(|s| !nondegenerate(s.z, s.base)) {
        return CaseResult::Rejected;
    }
    let combo = |coeff: CycNum, shift: i64, num: Vec<ThetaSpec>| ThetaCombo {
        coeff,
        shift,
        num,
        den: Vec::new(),
    };
    generic_or_reject(format!("product pair x={} y={} base={}", x, y, base), || {
        let lhs = combo(CycNum::one(), 0, vec![specs[0], specs[1]]).eval(order)?;
        let r1 = combo(CycNum::one(), 0, vec![specs[2], specs[3]]).eval(order)?;
        let r2 = combo(x.unit.embed(), x.exp, vec![specs[4], specs[5]]).eval(order)?;
        Ok((lhs, r1.sub(&r2), order))
    })
}

/// Quintuple product: j(qx^3;q^3) + x j(q^2x^3;q^3) = j(-x;q) j(qx^2;q^2)/J_2.
fn prop_quintuple(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let x = draw_mono(rng);
    let base = draw_base(rng);
    let b2 = base.pow(2);
    let b3 = base.pow(3);
    let l1 = ThetaSpec::new(base.mul(x.pow(3)), b3);
    let l2 = ThetaSpec::new(b2.mul(x.pow(3)), b3);
    let r1 = ThetaSpec::new(x.neg(), base);
    let r2 = ThetaSpec::new(base.mul(x.pow(2)), b2);
    if [l1, l2, r1, r2].iter().any(|s| !nondegenerate(s.z, s.base)) {
        return CaseResult::Rejected;
    }
    generic_or_reject(format!("quintuple x={} base={}", x, base), || {
        let lhs = theta_sum(l1, order)?.add(
            &theta_sum(l2, order - x.exp)?
                .mul_monomial(x)
                .truncate(order),
        );
        let rhs = ThetaCombo {
            coeff: CycNum::one(),
            shift: 0,
            num: vec![r1, r2],
            den: vec![ThetaSpec::new(b2, b2.pow(3))],
        }
        .eval(order)?;
        Ok((lhs, rhs, order))
    })
}

/// Three-term Weierstrass relation on four generic parameters.
fn prop_weierstrass(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let a = draw_mono(rng);
    let b = draw_mono(rng);
    let c = draw_mono(rng);
    let d = draw_mono(rng);
    let base = draw_base(rng);
    let pair = |u: Monomial, v: Monomial| {
        (
            ThetaSpec::new(u.mul(v), base),
            ThetaSpec::new(u.mul(v.inv()), base),
        )
    };
    let (ac, a_c) = pair(a, c);
    let (bd, b_d) = pair(b, d);
    let (ad, a_d) = pair(a, d);
    let (bc, b_c) = pair(b, c);
    let (ab, a_b) = pair(a, b);
    let (cd, c_d) = pair(c, d);
    let all = [ac, a_c, bd, b_d, ad, a_d, bc, b_c, ab, a_b, cd, c_d];
    if all.iter().any(|s| !nondegenerate(s.z, s.base)) {
        return CaseResult::Rejected;
    }
    let bc_pref = b.mul(c.inv());
    generic_or_reject(
        format!("weierstrass a={} b={} c={} d={} base={}", a, b, c, d, base),
        || {
            let term = |specs: [ThetaSpec; 4], coeff: CycNum, shift: i64| ThetaCombo {
                coeff,
                shift,
                num: specs.to_vec(),
                den: Vec::new(),
            };
            let lhs = term([ac, a_c, bd, b_d], CycNum::one(), 0).eval(order)?;
            let r1 = term([ad, a_d, bc, b_c], CycNum::one(), 0).eval(order)?;
            let r2 = term([ab, a_b, cd, c_d], bc_pref.unit.embed(), bc_pref.exp).eval(order)?;
            Ok((lhs, r1.add(&r2), order))
        },
    )
}

// ---------------------------------------------------------------------------
// Appell properties
// ---------------------------------------------------------------------------

fn draw_appell(rng: &mut ChaCha8Rng) -> AppellSpec {
    AppellSpec::new(draw_mono(rng), draw_mono(rng), draw_base(rng))
}

/// m(x,z;q) = m(x,qz;q).
fn prop_appell_shift_z(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let s = draw_appell(rng);
    generic_or_reject(format!("m({},{};{}) shift-z", s.x, s.z, s.base), || {
        let lhs = appell_m(s, order)?;
        let rhs = appell_m(AppellSpec::new(s.x, s.base.mul(s.z), s.base), order)?;
        Ok((lhs, rhs, order))
    })
}

/// m(x,z;q) = x^{-1} m(x^{-1},z^{-1};q).
fn prop_appell_flip(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let s = draw_appell(rng);
    generic_or_reject(format!("m({},{};{}) flip", s.x, s.z, s.base), || {
        let lhs = appell_m(s, order)?;
        let flipped = appell_m(
            AppellSpec::new(s.x.inv(), s.z.inv(), s.base),
            order + s.x.exp.abs(),
        )?;
        let rhs = flipped.mul_monomial(s.x.inv()).truncate(order);
        Ok((lhs, rhs, order))
    })
}

/// m(qx,z;q) = 1 - x m(x,z;q).
fn prop_appell_shift_x(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let s = draw_appell(rng);
    generic_or_reject(format!("m({},{};{}) shift-x", s.x, s.z, s.base), || {
        let lhs = appell_m(AppellSpec::new(s.base.mul(s.x), s.z, s.base), order)?;
        let m = appell_m(s, order + s.x.exp.abs())?;
        let rhs = QSeries::one().sub(&m.mul_monomial(s.x)).truncate(order);
        Ok((lhs, rhs, order))
    })
}

/// m(x,z;q) = m(x, x^{-1} z^{-1}; q).
fn prop_appell_flip_xz(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let s = draw_appell(rng);
    generic_or_reject(format!("m({},{};{}) flip-xz", s.x, s.z, s.base), || {
        let lhs = appell_m(s, order)?;
        let rhs = appell_m(
            AppellSpec::new(s.x, s.x.inv().mul(s.z.inv()), s.base),
            order,
        )?;
        Ok((lhs, rhs, order))
    })
}

/// m(x,z1;q) - m(x,z0;q) = z0 (q)_inf^3 j(z1/z0;q) j(x z0 z1;q)
///   / (j(z0;q) j(z1;q) j(x z0;q) j(x z1;q)).
fn prop_appell_change_z(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let x = draw_mono(rng);
    let z0 = draw_mono(rng);
    let z1 = draw_mono(rng);
    let base = draw_base(rng);
    generic_or_reject(
        format!("change-z x={} z0={} z1={} base={}", x, z0, z1, base),
        || {
            let lhs = appell_m(AppellSpec::new(x, z1, base), order)?
                .sub(&appell_m(AppellSpec::new(x, z0, base), order)?);
            let eta = ThetaSpec::new(base, base.pow(3));
            let rhs = ThetaCombo {
                coeff: z0.unit.embed(),
                shift: z0.exp,
                num: vec![
                    eta,
                    eta,
                    eta,
                    ThetaSpec::new(z1.mul(z0.inv()), base),
                    ThetaSpec::new(x.mul(z0).mul(z1), base),
                ],
                den: vec![
                    ThetaSpec::new(z0, base),
                    ThetaSpec::new(z1, base),
                    ThetaSpec::new(x.mul(z0), base),
                    ThetaSpec::new(x.mul(z1), base),
                ],
            }
            .eval(order)?;
            Ok((lhs, rhs, order))
        },
    )
}

fn prop_appell_split_2(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let x = draw_mono(rng);
    let z = draw_mono(rng);
    let zp = draw_mono(rng);
    let base = draw_base(rng);
    generic_or_reject(
        format!("split2 x={} z={} z'={} base={}", x, z, zp, base),
        || {
            let (lhs, rhs) = split_n2(x, z, zp, base, order)?;
            Ok((lhs, rhs, order))
        },
    )
}

fn prop_appell_split_3(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let x = draw_mono(rng);
    let z = draw_mono(rng);
    let zp = draw_mono(rng);
    let base = draw_base(rng);
    generic_or_reject(
        format!("split3 x={} z={} z'={} base={}", x, z, zp, base),
        || {
            let (lhs, rhs) = split_n3(x, z, zp, base, order)?;
            Ok((lhs, rhs, order))
        },
    )
}

// ---------------------------------------------------------------------------
// series properties
// ---------------------------------------------------------------------------

fn draw_series(rng: &mut ChaCha8Rng) -> QSeries {
    let terms = rng.gen_range(1..6);
    QSeries::from_terms(
        (0..terms).map(|_| {
            let e = rng.gen_range(-5..=10);
            let c = CycNum::new(
                crate::cyclotomic::rational(rng.gen_range(-4..=4), rng.gen_range(1..=3)),
                crate::cyclotomic::rational(rng.gen_range(-4..=4), rng.gen_range(1..=3)),
            );
            (e, c)
        }),
        ORDER_INF,
    )
}

fn prop_series_ring(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let a = draw_series(rng).truncate(order + 15);
    let b = draw_series(rng).truncate(order + 15);
    let c = draw_series(rng).truncate(order + 15);
    let assoc_l = a.mul(&b).mul(&c);
    let assoc_r = a.mul(&b.mul(&c));
    let through = assoc_l.order().min(assoc_r.order()).min(order);
    if let r @ CaseResult::Fail(_) = check_equal(&assoc_l, &assoc_r, through, "associativity") {
        return r;
    }
    let dist_l = a.mul(&b.add(&c));
    let dist_r = a.mul(&b).add(&a.mul(&c));
    let through = dist_l.order().min(dist_r.order()).min(order);
    if let r @ CaseResult::Fail(_) = check_equal(&dist_l, &dist_r, through, "distributivity") {
        return r;
    }
    check_equal(&a.mul(&b), &b.mul(&a), order, "commutativity")
}

fn prop_series_subst_mul(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let a = draw_series(rng);
    let b = draw_series(rng);
    let u = draw_unit(rng);
    let k = rng.gen_range(1..=4);
    let lhs = a.mul(&b).subst(u, k).unwrap();
    let rhs = a.subst(u, k).unwrap().mul(&b.subst(u, k).unwrap());
    let through = lhs.order().min(rhs.order()).min(order);
    check_equal(&lhs, &rhs, through, &format!("subst u={} k={}", u, k))
}

fn prop_series_inv_roundtrip(rng: &mut ChaCha8Rng, order: i64) -> CaseResult {
    let a = draw_series(rng);
    if a.valuation().is_none() {
        return CaseResult::Rejected;
    }
    let inv = match a.inv(order) {
        Ok(s) => s,
        Err(e) => return CaseResult::Fail(format!("inversion failed: {}", e)),
    };
    let prod = a.mul(&inv);
    let through = prod.order().min(order);
    check_equal(&prod, &QSeries::one(), through, "a * inv(a)")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_properties_pass_small_run() {
        let config = PropConfig {
            cases: 6,
            order: 25,
            seed: 12345,
        };
        for report in run_all(&config) {
            assert!(
                report.passed(),
                "{} failed: {:?} (exhausted {})",
                report.name,
                report.failures,
                report.exhausted
            );
        }
    }

    #[test]
    fn same_seed_same_report() {
        let config = PropConfig {
            cases: 4,
            order: 20,
            seed: 7,
        };
        let a = run_all(&config);
        let b = run_all(&config);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.failures, y.failures);
            assert_eq!(x.exhausted, y.exhausted);
        }
    }
}
