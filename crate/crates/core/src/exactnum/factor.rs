//! Factoring and root finding for univariate polynomials over Q and GF(p).
//!
//! Roots and factors modulo a prime use distinct-degree factorisation
//! followed by Cantor-Zassenhaus splitting. Factorisation over Q is the
//! classical Zassenhaus method (Hensel lifting plus recombination);
//! irreducibility is first attempted with cheap degree-pattern certificates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::field::{Field, PrimeField, Rationals};
use super::intfactor::is_prime_u64;
use super::matrix::Matrix;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Reduction of a rational polynomial modulo `p`; `None` if some denominator
/// or the leading coefficient vanishes mod p.
pub fn reduce_mod_p(f: &Poly<Rationals>, fp: PrimeField) -> Option<Poly<PrimeField>> {
    let mut out = Vec::with_capacity(f.coeffs().len());
    for c in f.coeffs() {
        out.push(fp.from_rational(c).ok()?);
    }
    let g = Poly::new(fp, out);
    if g.degree() != f.degree() {
        return None;
    }
    Some(g)
}

/// Distinct roots of `f` modulo `p`, sorted ascending.
pub fn roots_mod_p(f: &Poly<Rationals>, p: u64) -> Result<Vec<u64>> {
    let fp = PrimeField::new(p)?;
    let g = reduce_mod_p(f, fp).ok_or_else(|| {
        Error::domain(format!("{p} divides a denominator or the leading coefficient"))
    })?;
    let mut roots = roots_gf(&g);
    roots.sort_unstable();
    Ok(roots)
}

/// Distinct roots of a nonzero polynomial over GF(p).
pub fn roots_gf(g: &Poly<PrimeField>) -> Vec<u64> {
    let fp = *g.field();
    let p = fp.modulus();
    let x = Poly::x(fp);
    let xp = x.pow_mod(&BigInt::from(p), g).expect("nonzero");
    let lin = g.gcd(&xp.sub(&x));
    let mut out = Vec::new();
    let mut rng = StdRng::seed_from_u64(p);
    for f in equal_degree_split(&lin, 1, &mut rng) {
        out.push(fp.neg(&f.coeff(0)));
    }
    out
}

/// Splits a squarefree monic product of irreducibles of degree `d` into its
/// factors.
fn equal_degree_split(f: &Poly<PrimeField>, d: usize, rng: &mut StdRng) -> Vec<Poly<PrimeField>> {
    let n = match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(n) => n,
    };
    if n == d {
        return vec![f.monic()];
    }
    let fp = *f.field();
    let p = fp.modulus();
    let e = (BigInt::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        let a = Poly::new(fp, a);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = a.pow_mod(&e, f).expect("nonzero").sub(&Poly::one(fp));
        let h = f.gcd(&b);
        let dh = h.degree().unwrap_or(0);
        if dh > 0 && dh < n {
            let (q, _) = f.div_rem(&h).expect("nonzero");
            let mut out = equal_degree_split(&h, d, rng);
            out.extend(equal_degree_split(&q, d, rng));
            return out;
        }
    }
}

/// Distinct-degree factorisation of a squarefree monic polynomial over
/// GF(p): pairs `(d, product of the irreducible factors of degree d)`.
pub fn distinct_degree(f: &Poly<PrimeField>) -> Vec<(usize, Poly<PrimeField>)> {
    let fp = *f.field();
    let p = BigInt::from(fp.modulus());
    let x = Poly::x(fp);
    let mut rest = f.monic();
    let mut w = x.clone();
    let mut out = Vec::new();
    let mut d = 0;
    while let Some(n) = rest.degree() {
        if n == 0 {
            break;
        }
        d += 1;
        if 2 * d > n {
            out.push((n, rest.clone()));
            break;
        }
        w = w.pow_mod(&p, &rest).expect("nonzero");
        let h = rest.gcd(&w.sub(&x));
        if h.degree().unwrap_or(0) > 0 {
            rest = rest.div_rem(&h).expect("nonzero").0;
            w = w.rem(&rest).expect("nonzero");
            out.push((d, h));
        }
    }
    out
}

/// Complete factorisation of a squarefree polynomial over GF(p) into monic
/// irreducibles.
pub fn factor_gf_squarefree(f: &Poly<PrimeField>) -> Vec<Poly<PrimeField>> {
    let mut rng = StdRng::seed_from_u64(f.field().modulus() ^ 0x5eed);
    let mut out = Vec::new();
    for (d, h) in distinct_degree(f) {
        out.extend(equal_degree_split(&h, d, &mut rng));
    }
    out
}

fn is_squarefree_gf(f: &Poly<PrimeField>) -> bool {
    f.gcd(&f.derivative()).degree() == Some(0)
}

/// Discriminant of a polynomial of degree >= 1 with the usual sign
/// convention `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant(f: &Poly<Rationals>) -> Result<BigRational> {
    let n = match f.degree() {
        None | Some(0) => return Err(Error::domain("discriminant needs degree >= 1")),
        Some(n) => n,
    };
    if n == 1 {
        return Ok(BigRational::one());
    }
    let res = resultant(f, &f.derivative())?;
    let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
    Ok(res * BigRational::from_integer(sign.into()) / f.leading().unwrap())
}

/// Resultant via the Sylvester determinant.
pub fn resultant(f: &Poly<Rationals>, g: &Poly<Rationals>) -> Result<BigRational> {
    let (m, n) = match (f.degree(), g.degree()) {
        (Some(m), Some(n)) => (m, n),
        _ => return Ok(BigRational::zero()),
    };
    if m + n == 0 {
        return Ok(BigRational::one());
    }
    let size = m + n;
    let mut rows = vec![vec![BigRational::zero(); size]; size];
    for i in 0..n {
        for (j, c) in f.coeffs().iter().rev().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.coeffs().iter().rev().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    bareiss_det(rows)
}

/// Fraction-free determinant. Entries are cleared to integers first so the
/// elimination stays in Z.
fn bareiss_det(rows: Vec<Vec<BigRational>>) -> Result<BigRational> {
    let n = rows.len();
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in rows {
        let den = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        scale *= &den;
        a.push(
            row.iter()
                .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
                .collect(),
        );
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(BigRational::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(BigRational::new(sign * &a[n - 1][n - 1], scale))
}

fn integer_poly(f: &Poly<Rationals>) -> Vec<BigInt> {
    f.primitive_part()
}

/// Squarefree over Q.
pub fn is_squarefree(f: &Poly<Rationals>) -> bool {
    f.gcd(&f.derivative()).degree() == Some(0)
}

/// Decides irreducibility over Q.
pub fn is_irreducible(f: &Poly<Rationals>) -> Result<bool> {
    let n = match f.degree() {
        None | Some(0) => return Err(Error::domain("constant polynomial")),
        Some(n) => n,
    };
    if n == 1 {
        return Ok(true);
    }
    if !is_squarefree(f) {
        return Ok(false);
    }
    if degree_certificate(f, 60).unwrap_or(false) {
        return Ok(true);
    }
    Ok(factor_over_q(f)?.len() == 1)
}

/// Tries to prove irreducibility from factorisation patterns modulo small
/// primes: the achievable factor degrees are intersected over primes. Returns
/// `Some(true)` when only `0` and `deg f` survive, `None` if undecided.
pub fn degree_certificate(f: &Poly<Rationals>, primes: usize) -> Option<bool> {
    let n = f.degree()?;
    let ints = integer_poly(f);
    let fz = Poly::from_bigints(&ints);
    let mut possible = vec![true; n + 1];
    let mut used = 0;
    let mut p = 3u64;
    while used < primes {
        p += 2;
        if !is_prime_u64(p) {
            continue;
        }
        let fp = PrimeField::new(p).ok()?;
        let g = match reduce_mod_p(&fz, fp) {
            Some(g) if is_squarefree_gf(&g) => g,
            _ => continue,
        };
        used += 1;
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for (d, h) in distinct_degree(&g) {
            let count = h.degree().unwrap() / d;
            for _ in 0..count {
                for s in (d..=n).rev() {
                    if sums[s - d] {
                        sums[s] = true;
                    }
                }
            }
        }
        for s in 0..=n {
            possible[s] &= sums[s];
        }
        if (1..n).all(|s| !possible[s]) {
            return Some(true);
        }
    }
    None
}

/// Irreducible factors over Q with multiplicity; each factor is a primitive
/// integer polynomial (as rationals) with positive leading coefficient.
pub fn factor_over_q(f: &Poly<Rationals>) -> Result<Vec<(Poly<Rationals>, u32)>> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::domain("cannot factor a constant"));
    }
    // Yun's squarefree decomposition
    let mut out: Vec<(Poly<Rationals>, u32)> = Vec::new();
    let f = f.monic();
    let fd = f.derivative();
    let a0 = f.gcd(&fd);
    let mut b = f.div_rem(&a0)?.0;
    let mut c = fd.div_rem(&a0)?.0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1u32;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            for g in zassenhaus(&a)? {
                out.push((g, i));
            }
        }
        b = b.div_rem(&a)?.0;
        c = d.div_rem(&a)?.0;
        d = c.sub(&b.derivative());
        i += 1;
    }
    out.sort_by(|x, y| {
        (x.0.degree(), x.0.to_string()).cmp(&(y.0.degree(), y.0.to_string()))
    });
    Ok(out)
}

type ZPoly = Vec<BigInt>;

fn zmod(v: &mut ZPoly, m: &BigInt) {
    for c in v.iter_mut() {
        *c = c.mod_floor(m);
    }
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn zmul(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = crate::ntt::mul_integer(a, b);
    zmod(&mut v, m);
    v
}

fn zsub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
        .collect()
}

fn zadd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect()
}

fn to_gf(a: &ZPoly, fp: PrimeField) -> Poly<PrimeField> {
    Poly::new(fp, a.iter().map(|c| fp.reduce_int(c)).collect())
}

fn from_gf(a: &Poly<PrimeField>) -> ZPoly {
    a.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

fn scale_z(a: &ZPoly, c: &BigInt) -> ZPoly {
    a.iter().map(|x| x * c).collect()
}

/// Lifts `f = g*h mod p` (g, h monic, coprime mod p, f monic mod p^k) to a
/// factorisation modulo `p^k`.
fn hensel_pair(f: &ZPoly, g: &ZPoly, h: &ZPoly, p: u64, k: u32) -> (ZPoly, ZPoly) {
    let fp = PrimeField::new(p).unwrap();
    let (one, s, t) = to_gf(g, fp).ext_gcd(&to_gf(h, fp));
    debug_assert_eq!(one.degree(), Some(0));
    let pb = BigInt::from(p);
    let mut m = pb.clone();
    let (mut g, mut h) = (g.clone(), h.clone());
    for _ in 1..k {
        let next = &m * &pb;
        let mut e = zsub(f, &zmul(&g, &h, &next));
        zmod(&mut e, &next);
        let e: ZPoly = e.iter().map(|c| c / &m).collect();
        let eg = to_gf(&e, fp);
        let hg = to_gf(&h, fp);
        let gg = to_gf(&g, fp);
        let (q, r) = s.mul(&eg).div_rem(&hg).expect("nonzero");
        let dg = t.mul(&eg).add(&q.mul(&gg));
        g = zadd(&g, &scale_z(&from_gf(&dg), &m));
        h = zadd(&h, &scale_z(&from_gf(&r), &m));
        zmod(&mut g, &next);
        zmod(&mut h, &next);
        m = next;
    }
    (g, h)
}

/// Lifts a full factorisation of `f mod p` into monic irreducibles.
fn hensel_multi(f: &ZPoly, factors: &[Poly<PrimeField>], p: u64, k: u32) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![f.clone()];
    }
    let fp = *factors[0].field();
    let mid = factors.len() / 2;
    let prod = |fs: &[Poly<PrimeField>]| {
        fs.iter().fold(Poly::one(fp), |acc, x| acc.mul(x))
    };
    let g = from_gf(&prod(&factors[..mid]));
    let h = from_gf(&prod(&factors[mid..]));
    let (g, h) = hensel_pair(f, &g, &h, p, k);
    let mut out = hensel_multi(&g, &factors[..mid], p, k);
    out.extend(hensel_multi(&h, &factors[mid..], p, k));
    out
}

fn symmetric(v: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2u32;
    v.iter()
        .map(|c| {
            let c = c.mod_floor(m);
            if c > half { c - m } else { c }
        })
        .collect()
}

/// Factors a squarefree rational polynomial into irreducibles.
fn zassenhaus(f: &Poly<Rationals>) -> Result<Vec<Poly<Rationals>>> {
    let n = f.degree().unwrap();
    if n == 1 {
        return Ok(vec![Poly::from_bigints(&integer_poly(f))]);
    }
    let fz = integer_poly(f);
    let lc = fz.last().unwrap().clone();
    // a prime where f stays squarefree of the same degree
    let mut p = 3u64;
    let (fp, fbar) = loop {
        p += 2;
        if !is_prime_u64(p) || (&lc % p).is_zero() {
            continue;
        }
        let fp = PrimeField::new(p)?;
        let g = to_gf(&fz, fp);
        if g.degree() == Some(n) && is_squarefree_gf(&g) {
            break (fp, g);
        }
    };
    let modfac = factor_gf_squarefree(&fbar.monic());
    if modfac.len() == 1 {
        return Ok(vec![Poly::from_bigints(&fz)]);
    }
    // coefficient bound for factors of lc*f
    let maxc = fz.iter().map(|c| c.abs()).max().unwrap();
    let bound = BigInt::from(2u32).pow(n as u32) * BigInt::from(n as u64 + 1) * &maxc * &lc.abs();
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut m = pb.clone();
    while m <= &bound * 2u32 {
        m *= &pb;
        k += 1;
    }
    let lc_inv = BigInt::from(fp.inv(&fp.reduce_int(&lc)).unwrap());
    // monic version of f modulo p^k
    let inv_k = mod_inverse(&lc, &m).unwrap_or_else(|| lc_inv.clone());
    let mut fmonic = scale_z(&fz, &inv_k);
    zmod(&mut fmonic, &m);
    let lifted = hensel_multi(&fmonic, &modfac, p, k);

    let mut remaining: Vec<ZPoly> = lifted;
    let mut target = fz.clone();
    let mut result = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= remaining.len() {
        for subset in combinations(remaining.len(), s) {
            let tlc = target.last().unwrap().clone();
            let mut cand: ZPoly = vec![tlc.clone()];
            for &i in &subset {
                cand = zmul(&cand, &remaining[i], &m);
            }
            let cand = symmetric(&cand, &m);
            let cq = Poly::from_bigints(&cand);
            let pp = Poly::from_bigints(&integer_poly(&cq));
            let tq = Poly::from_bigints(&target);
            let (quo, r) = tq.div_rem(&pp)?;
            if r.is_zero() && quo.is_integral() {
                result.push(pp);
                target = integer_poly(&quo);
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, v)| v)
                    .collect();
                continue 'outer;
            }
        }
        s += 1;
    }
    result.push(Poly::from_bigints(&target));
    Ok(result)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Determinant over Q through the fraction-free route; used by tests to
/// cross-check Berkowitz.
pub fn det_bareiss(m: &Matrix<Rationals>) -> Result<BigRational> {
    if !m.is_square() {
        return Err(Error::domain("determinant of a non-square matrix"));
    }
    if m.rows() == 0 {
        return Ok(BigRational::one());
    }
    bareiss_det(m.to_rows())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::field::qi;

    #[test]
    fn roots_of_quadratic_mod_13() {
        // x^2 + 1 mod 13 has roots 5 and 8
        assert_eq!(roots_mod_p(&Poly::from_ints(&[1, 0, 1]), 13).unwrap(), vec![5, 8]);
        assert!(roots_mod_p(&Poly::from_ints(&[1, 0, 1]), 7).unwrap().is_empty());
    }

    #[test]
    fn discriminant_of_cubic() {
        // x^3 + a x + b: -4a^3 - 27b^2
        let f = Poly::from_ints(&[2, -3, 0, 1]);
        assert_eq!(discriminant(&f).unwrap(), qi(-4 * -27 - 27 * 4));
        let g = Poly::from_ints(&[3, 5, 7]);
        assert_eq!(discriminant(&g).unwrap(), qi(25 - 4 * 21));
    }

    #[test]
    fn x4_plus_1_needs_full_factoring() {
        let f = Poly::from_ints(&[1, 0, 0, 0, 1]);
        assert_eq!(degree_certificate(&f, 40), None);
        assert!(is_irreducible(&f).unwrap());
    }

    #[test]
    fn factors_product_of_quadratics() {
        let a = Poly::from_ints(&[1, 0, 1]);
        let b = Poly::from_ints(&[-2, 0, 1]);
        let c = Poly::from_ints(&[3, 1]);
        let f = a.mul(&b).mul(&c).mul(&c).scale(&qi(6));
        let fac = factor_over_q(&f).unwrap();
        assert_eq!(fac.len(), 3);
        assert_eq!(fac[0], (c.clone(), 2));
        assert!(fac.contains(&(a, 1)));
        assert!(fac.contains(&(b, 1)));
        assert!(!is_irreducible(&f).unwrap());
    }

    #[test]
    fn factors_swinnerton_dyer_like_product() {
        // (x^2 - 2)(x^2 - 3)(x^2 - 6) has many factors modulo every prime
        let f = Poly::from_ints(&[-2, 0, 1])
            .mul(&Poly::from_ints(&[-3, 0, 1]))
            .mul(&Poly::from_ints(&[-6, 0, 1]));
        assert_eq!(factor_over_q(&f).unwrap().len(), 3);
    }

    #[test]
    fn factorisation_mod_p_multiplies_back() {
        let fp = PrimeField::new(101).unwrap();
        let f = Poly::new(fp, vec![7, 3, 0, 99, 5, 1, 0, 1]).monic();
        if is_squarefree_gf(&f) {
            let fs = factor_gf_squarefree(&f);
            let prod = fs.iter().fold(Poly::one(fp), |a, b| a.mul(b));
            assert_eq!(prod, f);
        }
    }

    #[test]
    fn bareiss_matches_berkowitz() {
        let m = Matrix::from_rows(
            Rationals,
            vec![
                vec![qi(2), qi(-1), qi(0), qi(3)],
                vec![qi(1), qi(1), qi(4), qi(0)],
                vec![qi(0), qi(5), qi(-2), qi(1)],
                vec![qi(7), qi(0), qi(1), qi(1)],
            ],
        );
        assert_eq!(det_bareiss(&m).unwrap(), m.det().unwrap());
    }
}
