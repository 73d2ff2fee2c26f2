//! The weight-54 reproduction: divisibility hypotheses from L-values, the
//! residual irreducibility argument and the congruence scan, assembled into
//! one deterministic report.

use std::collections::BTreeMap;
use std::thread;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::exactnum::field::rational_valuation;
use crate::exactnum::intfactor::{factor_integer, factor_u64, is_prime_u64};
use crate::exactnum::{discriminant, roots_mod_p, Poly, Rationals};
use crate::interchange::{params, FormRecord, Kind};
use crate::level1::{dim_cusp, hecke_matrix, newform, NewformData};
use crate::lfun::character::is_fundamental;
use crate::lfun::{
    dirichlet_l_neg, gen_bernoulli, irregular_scan, l_alg, l_alg_products, remove_euler_q, DirichletChar,
    ScanMethod, SymbolSpace,
};
use crate::ntt::pow_mod;
use crate::{Error, Result};

pub const EXAMPLE_WEIGHT: i64 = 54;
pub const EXAMPLE_PRIME: u64 = 516223;
pub const EXAMPLE_DISC: i64 = -3;

/// `g(x)` reference value for weight 54, constant term first.
pub const REFERENCE_G: [&str; 5] = [
    "39446133467662904714689328971776",
    "-10833127246634489297121280",
    "-19584715019010048",
    "68476320",
    "1",
];

/// Reference factorization of `disc(g)`: sign, then `(prime, exponent)`.
pub const REFERENCE_DISC_FACTORS: [(&str, u32); 9] = [
    ("2", 48),
    ("3", 3),
    ("5", 6),
    ("11", 1),
    ("59", 1),
    ("4581597403", 1),
    ("15909926723", 1),
    ("61912455248726091228769884731066259290896074682396020673553", 1),
    ("-1", 1),
];

pub const REFERENCE_ROOTS: [u64; 2] = [85284, 287487];
pub const REFERENCE_EXPONENTS: (u64, u64) = (32486, 483789);
pub const REFERENCE_TRACE: u64 = 258573;
pub const REFERENCE_IRREGULAR_INDEX: usize = 451304;

pub fn reference_g() -> Poly<Rationals> {
    let cs: Vec<BigInt> = REFERENCE_G.iter().map(|s| s.parse().unwrap()).collect();
    Poly::from_bigints(&cs)
}

/// The reference discriminant as an integer.
pub fn reference_disc() -> BigInt {
    REFERENCE_DISC_FACTORS
        .iter()
        .map(|(p, e)| p.parse::<BigInt>().unwrap().pow(*e))
        .product()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl CheckRecord {
    fn new(name: &str, expected: impl ToString, computed: impl ToString, pass: bool) -> Self {
        CheckRecord {
            name: name.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
        }
    }
}

/// `p`-adic valuation of a Galois-orbit norm; `None` when the value is 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuationRecord {
    pub name: String,
    pub norm: String,
    pub valuation: Option<i64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub roots: Vec<u64>,
    pub a: Option<u64>,
    pub b: Option<u64>,
    pub trace: Option<u64>,
    pub irregular_indices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityReport {
    pub p: u64,
    pub weight: i64,
    pub k: i64,
    pub character: String,
    pub disc: i64,
    /// Valuation of `N L_alg(k, f)`; `None` means the value vanishes.
    pub m: Option<i64>,
    /// Valuation of the product of the four twisted values; `None` means
    /// one of them vanishes.
    pub n: Option<i64>,
    pub hypotheses_satisfied: bool,
    pub hecke_route: String,
    pub valuations: Vec<ValuationRecord>,
    pub checks: Vec<CheckRecord>,
    pub witnesses: Witnesses,
}

impl DivisibilityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&CheckRecord> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_record(rec: &FormRecord) -> Result<Self> {
        if rec.kind != Kind::Report {
            return Err(Error::Format(format!("expected a report record, got {:?}", rec.kind)));
        }
        Ok(serde_json::from_value(rec.payload.clone())?)
    }

    pub fn to_record(&self) -> FormRecord {
        let payload = serde_json::to_value(self).expect("reports serialize");
        FormRecord::new(
            Kind::Report,
            self.weight,
            0,
            payload,
            params([
                ("p", self.p.to_string()),
                ("character", self.character.clone()),
                ("disc", self.disc.to_string()),
            ]),
        )
    }
}

fn fmt_val(v: Option<i64>) -> String {
    v.map_or("inf (value is 0)".into(), |x| x.to_string())
}

fn sum_vals(vs: &[Option<i64>]) -> Option<i64> {
    vs.iter().try_fold(0, |acc, v| v.map(|x| acc + x))
}

/// `Sigma`: the primes dividing `N |D|`.
fn bad_primes(n: u64, d: i64) -> Vec<u64> {
    let mut ps: Vec<u64> = factor_u64(n * d.unsigned_abs()).into_iter().map(|(p, _)| p).collect();
    ps.dedup();
    ps
}

/// Evaluates the divisibility hypotheses for weight `w = 2k - 2`, the prime
/// `p`, the twisting character `chi` and the discriminant `d`.
pub fn check_hypotheses(w: i64, p: u64, chi: Option<&DirichletChar>, d: i64) -> Result<DivisibilityReport> {
    if w < 4 || w % 2 != 0 {
        return Err(Error::domain(format!("weight {w} must be even and at least 4")));
    }
    if !is_prime_u64(p) || p <= w as u64 {
        return Err(Error::domain(format!("p = {p} must be a prime above {w}")));
    }
    let k = (w + 2) / 2;
    let mut report = DivisibilityReport {
        p,
        weight: w,
        k,
        character: chi.map_or("none".into(), |c| c.label().to_string()),
        disc: d,
        m: None,
        n: None,
        hypotheses_satisfied: false,
        hecke_route: String::new(),
        valuations: Vec::new(),
        checks: Vec::new(),
        witnesses: Witnesses::default(),
    };
    let chi = match chi {
        Some(c) if !c.is_trivial() => c,
        _ => {
            report
                .checks
                .push(CheckRecord::new("character", "non-trivial character", "character required", false));
            return Ok(report);
        }
    };
    let fundamental = is_fundamental(d);
    report
        .checks
        .push(CheckRecord::new("D fundamental", "true", fundamental, fundamental));
    if !fundamental {
        return Ok(report);
    }
    let chi_d = DirichletChar::quadratic(d)?;
    let nd = chi.modulus() * d.unsigned_abs();
    let coprime = !nd.is_multiple_of(p);
    report.checks.push(CheckRecord::new("p does not divide N*D", "true", coprime, coprime));
    let odd = chi_d.parity() == -1;
    report
        .checks
        .push(CheckRecord::new("chi_D(-1) = -1", "-1", chi_d.parity(), odd));
    let sign = if (k - 1) % 2 == 0 { d } else { -d };
    report
        .checks
        .push(CheckRecord::new("(-1)^(k-1) D > 0", "positive", sign, sign > 0));

    let f = newform(w, 0)?;
    let triv = DirichletChar::trivial();
    let reqs = vec![
        (k, triv),
        (k - 1, chi_d.clone()),
        (1, chi.clone()),
        (2, chi.clone()),
    ];
    let norms = l_alg_products(&f, &reqs, p)?;
    let names = [
        format!("L_alg({k}, f)"),
        format!("L_alg({}, f, {})", k - 1, chi_d.label()),
        format!("L_alg(1, f, {})", chi.label()),
        format!("L_alg(2, f, {})", chi.label()),
    ];
    let sigma = bad_primes(chi.modulus(), d);
    let l_dir = dirichlet_l_neg((k - 2) as usize, chi)?;
    let l_sigma = remove_euler_q(&l_dir, 3 - k, chi, &sigma)?;
    let v_dir = rational_valuation(&l_sigma, &BigInt::from(p));
    report.valuations.push(ValuationRecord {
        name: format!("L^Sigma({}, {})", 3 - k, chi.label()),
        norm: fmt_rat(&l_sigma),
        valuation: v_dir,
    });
    for (name, r) in names.iter().zip(&norms) {
        report.valuations.push(ValuationRecord {
            name: name.clone(),
            norm: fmt_rat(&r.norm),
            valuation: r.valuation,
        });
    }
    let m = norms[0].valuation;
    let n = sum_vals(&[v_dir, norms[1].valuation, norms[2].valuation, norms[3].valuation]);
    report.m = m;
    report.n = n;
    let m_ok = m.is_none_or(|m| m >= 1);
    report.checks.push(CheckRecord::new("m >= 1", ">= 1", fmt_val(m), m_ok));
    let n_ok = match (n, m) {
        (Some(n), Some(m)) => n < m,
        (Some(_), None) => true,
        (None, _) => false,
    };
    report
        .checks
        .push(CheckRecord::new("n < m", format!("< {}", fmt_val(m)), fmt_val(n), n_ok));
    report.hypotheses_satisfied = report.all_pass();
    Ok(report)
}

fn fmt_rat(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceCheck {
    pub p: u64,
    pub a: u64,
    pub b: u64,
    pub value: u64,
    pub target: u64,
    pub pass: bool,
}

/// `2^a + 2^b mod p` against `target`.
pub fn residual_trace_check(p: u64, a: u64, b: u64, target: u64) -> TraceCheck {
    let value = (pow_mod(2, a, p) + pow_mod(2, b, p)) % p;
    TraceCheck {
        p,
        a,
        b,
        value,
        target,
        pass: value == target % p,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub index: usize,
    /// `a + b`.
    pub sum: u64,
    pub a: i64,
    pub b: i64,
    pub admissible: bool,
    pub trace: Option<u64>,
    pub matching_roots: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    /// No admissible branch has a trace equal to a root.
    Irreducible,
    /// Some admissible branch matches a root.
    Inconclusive,
    /// `p` is regular.
    Vacuous,
}

impl Conclusion {
    pub fn message(&self) -> &'static str {
        match self {
            Conclusion::Irreducible => "no reducible residual representation consistent",
            Conclusion::Inconclusive => "match - argument inconclusive",
            Conclusion::Vacuous => "no reducible shape possible at any index",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityReport {
    pub p: u64,
    pub weight: i64,
    pub irregular_indices: Vec<usize>,
    pub roots: Vec<u64>,
    pub branches: Vec<Branch>,
    pub conclusion: Conclusion,
}

/// The case analysis for given irregular indices and roots of the `T(2)`
/// characteristic polynomial mod `p`: for each index `b - a + 1` and each
/// of `a + b = w - 1` and `a + b = p - 1 + w - 1`, solve for `a, b`, keep
/// `0 < a < b < p - 1`, and compare `2^a + 2^b` with the roots.
pub fn irreducibility_chain(p: u64, w: i64, indices: &[usize], roots: &[u64]) -> IrreducibilityReport {
    let mut branches = Vec::new();
    for &idx in indices {
        for sum in [(w - 1) as u64, p - 1 + (w - 1) as u64] {
            let twice_b = idx as i64 - 1 + sum as i64;
            let (a, b) = (sum as i64 - twice_b / 2, twice_b / 2);
            let admissible = twice_b % 2 == 0 && 0 < a && a < b && b < (p - 1) as i64;
            let (trace, matching_roots) = if admissible {
                let t = residual_trace_check(p, a as u64, b as u64, 0).value;
                (Some(t), roots.iter().copied().filter(|&r| r == t).collect())
            } else {
                (None, Vec::new())
            };
            branches.push(Branch {
                index: idx,
                sum,
                a,
                b,
                admissible,
                trace,
                matching_roots,
            });
        }
    }
    let conclusion = if indices.is_empty() {
        Conclusion::Vacuous
    } else if branches.iter().any(|b| !b.matching_roots.is_empty()) {
        Conclusion::Inconclusive
    } else {
        Conclusion::Irreducible
    };
    IrreducibilityReport {
        p,
        weight: w,
        irregular_indices: indices.to_vec(),
        roots: roots.to_vec(),
        branches,
        conclusion,
    }
}

/// Full `T(2)` characteristic polynomial on `S_w`.
pub fn t2_charpoly(w: i64) -> Result<Poly<Rationals>> {
    let d = dim_cusp(w);
    hecke_matrix(w, 2, 2 * (d + 1))?.charpoly()
}

/// Runs the irregular scan and root finding, then the case analysis.
pub fn irreducibility_argument(p: u64, w: i64) -> Result<IrreducibilityReport> {
    let indices = irregular_scan(p, ScanMethod::Series)?;
    let roots = roots_mod_p(&t2_charpoly(w)?, p)?;
    Ok(irreducibility_chain(p, w, &indices, &roots))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceReport {
    pub weight: i64,
    pub p: u64,
    pub charpoly: String,
    pub discriminant: String,
    pub conjugates: usize,
    pub pass: bool,
}

/// No two conjugate `a(2)` are congruent modulo a prime above `p` when `p`
/// does not divide the discriminant of the `T(2)` characteristic polynomial.
pub fn congruence_scan(w: i64, p: u64) -> Result<CongruenceReport> {
    let g = t2_charpoly(w)?;
    congruence_scan_for(w, p, &g)
}

pub fn congruence_scan_for(w: i64, p: u64, g: &Poly<Rationals>) -> Result<CongruenceReport> {
    let conjugates = g.degree().unwrap_or(0);
    let disc = discriminant(g)?;
    let pass = conjugates <= 1 || rational_valuation(&disc, &BigInt::from(p)).is_some_and(|v| v == 0);
    Ok(CongruenceReport {
        weight: w,
        p,
        charpoly: g.to_string(),
        discriminant: fmt_rat(&disc),
        conjugates,
        pass,
    })
}

/// The full weight-54, `p = 516223`, `chi_{-3}` run with every check
/// recorded against the reference values.
pub fn verify_weight54_example() -> Result<DivisibilityReport> {
    let (w, p, d) = (EXAMPLE_WEIGHT, EXAMPLE_PRIME, EXAMPLE_DISC);
    let chi = DirichletChar::quadratic(d)?;
    let (hyp, scan, charpoly, reference_factors, central) = thread::scope(|s| {
        let hyp = s.spawn(|| check_hypotheses(w, p, Some(&chi), d));
        let scan = s.spawn(move || irregular_scan(p, ScanMethod::Series));
        let charpoly = s.spawn(move || t2_charpoly(w));
        let reference = s.spawn(|| factor_integer(&reference_disc_of_g()));
        let central = s.spawn(move || -> Result<bool> {
            let f: NewformData = newform(w, 0)?;
            let space = SymbolSpace::new(w)?;
            Ok(l_alg(&space, &f, w / 2, &DirichletChar::trivial())?.is_zero())
        });
        (
            hyp.join().expect("hypothesis thread"),
            scan.join().expect("scan thread"),
            charpoly.join().expect("charpoly thread"),
            reference.join().expect("factor thread"),
            central.join().expect("central value thread"),
        )
    });
    let mut report = hyp?;
    let indices = scan?;
    let charpoly = charpoly?;
    let central = central?;
    let reference = reference_g();
    let mut checks = Vec::new();

    checks.push(CheckRecord::new(
        "T(2) charpoly on S_54",
        &reference,
        &charpoly,
        charpoly == reference,
    ));
    let reference_disc_value = reference_disc();
    let disc_g = discriminant(&reference)?;
    let expected_factors: BTreeMap<String, u32> = REFERENCE_DISC_FACTORS
        .iter()
        .filter(|(q, _)| *q != "-1")
        .map(|(q, e)| (q.to_string(), *e))
        .collect();
    let got_factors: BTreeMap<String, u32> =
        reference_factors.factors.iter().map(|(q, e)| (q.to_string(), *e)).collect();
    let disc_ok = disc_g == BigRational::from_integer(reference_disc_value.clone())
        && expected_factors == got_factors
        && reference_factors.negative;
    checks.push(CheckRecord::new(
        "disc(g) and its factorization",
        format!("-{}", fmt_factors(&expected_factors)),
        format!("{} = {}", fmt_rat(&disc_g), reference_factors),
        disc_ok,
    ));
    let roots = roots_mod_p(&charpoly, p)?;
    checks.push(CheckRecord::new(
        "roots of T(2) charpoly mod p",
        format!("{REFERENCE_ROOTS:?}"),
        format!("{roots:?}"),
        roots == REFERENCE_ROOTS,
    ));
    let (a, b) = REFERENCE_EXPONENTS;
    let trace = residual_trace_check(p, a, b, REFERENCE_TRACE);
    checks.push(CheckRecord::new(
        "2^32486 + 2^483789 mod p",
        REFERENCE_TRACE,
        trace.value,
        trace.pass,
    ));
    checks.push(CheckRecord::new(
        "irregular indices of p",
        format!("[{REFERENCE_IRREGULAR_INDEX}]"),
        format!("{indices:?}"),
        indices == [REFERENCE_IRREGULAR_INDEX],
    ));
    let chain = irreducibility_chain(p, w, &indices, &roots);
    checks.push(CheckRecord::new(
        "irreducibility argument",
        Conclusion::Irreducible.message(),
        chain.conclusion.message(),
        chain.conclusion == Conclusion::Irreducible,
    ));
    let cong = congruence_scan_for(w, p, &charpoly)?;
    checks.push(CheckRecord::new(
        "congruence scan (p does not divide disc)",
        "pass",
        if cong.pass { "pass" } else { "fail" },
        cong.pass,
    ));
    let b26 = gen_bernoulli(26, &chi);
    let l25 = dirichlet_l_neg(26, &chi)?;
    let exact = l25 == -b26 / BigRational::from_integer(26.into());
    let v25 = rational_valuation(&l25, &BigInt::from(p));
    checks.push(CheckRecord::new(
        "L^(3)(-25, chi_-3) = -B_26,chi/26 with valuation 0",
        "0",
        format!("{} (value {})", fmt_val(v25), fmt_rat(&l25)),
        exact && v25 == Some(0),
    ));
    for v in &report.valuations[1..] {
        let (expected, pass) = if v.name.starts_with(&format!("L_alg({}, f)", report.k)) {
            (">= 1", v.valuation.is_none_or(|x| x >= 1))
        } else {
            ("0", v.valuation == Some(0))
        };
        checks.push(CheckRecord::new(&format!("v_p(N {})", v.name), expected, fmt_val(v.valuation), pass));
    }
    checks.push(CheckRecord::new("L_alg(27, f) = 0", "0", if central { "0" } else { "nonzero" }, central));
    checks.push(CheckRecord::new("n = 0", "0", fmt_val(report.n), report.n == Some(0)));
    report.checks.extend(checks);
    report.hecke_route = "no-congruence discriminant scan".into();
    let best = chain.branches.iter().find(|b| b.admissible);
    report.witnesses = Witnesses {
        roots,
        a: best.map(|b| b.a as u64),
        b: best.map(|b| b.b as u64),
        trace: best.and_then(|b| b.trace),
        irregular_indices: indices,
    };
    Ok(report)
}

fn reference_disc_of_g() -> BigInt {
    let d = discriminant(&reference_g()).expect("nonzero leading coefficient");
    if d.is_zero() {
        BigInt::zero()
    } else {
        d.to_integer()
    }
}

fn fmt_factors(fs: &BTreeMap<String, u32>) -> String {
    let mut v: Vec<(BigInt, u32)> = fs.iter().map(|(q, e)| (q.parse().unwrap(), *e)).collect();
    v.sort();
    v.iter()
        .map(|(q, e)| if *e == 1 { q.to_string() } else { format!("{q}^{e}") })
        .collect::<Vec<_>>()
        .join(" * ")
}

/// Machine-readable summary of a failure-free report.
pub fn summary(report: &DivisibilityReport) -> serde_json::Value {
    json!({
        "all_pass": report.all_pass(),
        "m": report.m,
        "n": report.n,
        "failures": report.failures().iter().map(|c| c.name.clone()).collect::<Vec<_>>(),
    })
}
