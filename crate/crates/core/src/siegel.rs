//! Genus-2 Fourier expansions: Maass relations, the Siegel Phi operator,
//! and the Hecke operator T(p).
//!
//! A coefficient `A(n, r, m)` belongs to the half-integral matrix
//! `[[n, r/2], [r/2, m]]`. For level one and even weight it only depends on
//! the GL_2(Z) class of that matrix, which is how lookups outside the stored
//! range are resolved.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::intfactor::{divisors_u64, gcd_i64, is_prime_u64};
use crate::exactnum::Field;
use crate::qexp::QExpansion;

pub type Triple = (i64, i64, i64);

/// Representative with `0 <= r`, `n <= m`.
fn canonical(n: i64, r: i64, m: i64) -> Triple {
    let (n, m) = if n <= m { (n, m) } else { (m, n) };
    (n, r.abs(), m)
}

/// Reduced representative `0 <= r <= n <= m` of the GL_2(Z) class.
pub fn reduce(n: i64, r: i64, m: i64) -> Triple {
    let (mut n, mut r, mut m) = (n, r, m);
    loop {
        if n > m {
            std::mem::swap(&mut n, &mut m);
        }
        if n == 0 {
            return (0, 0, m);
        }
        // x -> x + t y moves r by 2nt
        let t = (-r).div_euclid(2 * n);
        let t = if (r + 2 * n * (t + 1)).abs() < (r + 2 * n * t).abs() { t + 1 } else { t };
        let r2 = r + 2 * n * t;
        let m2 = n * t * t + r * t + m;
        r = r2;
        m = m2;
        if n <= m && r.abs() <= n {
            return (n, r.abs(), m);
        }
    }
}

/// Coefficients `A(n, r, m)` of a genus-2 form of weight `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct SiegelExpansion<F: Field> {
    pub field: F,
    pub weight: i64,
    /// All triples with `0 <= n, m <= bound` are stored.
    pub bound: i64,
    coeffs: BTreeMap<Triple, F::Elem>,
}

impl<F: Field> SiegelExpansion<F> {
    pub fn new(field: F, weight: i64, bound: i64) -> Self {
        SiegelExpansion {
            field,
            weight,
            bound,
            coeffs: BTreeMap::new(),
        }
    }

    /// All triples `(n, r, m)` with `0 <= r`, `n <= m <= bound`,
    /// `r^2 <= 4nm`.
    pub fn index_set(bound: i64) -> Vec<Triple> {
        let mut out = Vec::new();
        for m in 0..=bound {
            for n in 0..=m {
                let mut r = 0;
                while r * r <= 4 * n * m {
                    out.push((n, r, m));
                    r += 1;
                }
            }
        }
        out
    }

    pub fn set(&mut self, n: i64, r: i64, m: i64, v: F::Elem) {
        self.coeffs.insert(canonical(n, r, m), v);
    }

    pub fn stored(&self) -> impl Iterator<Item = (&Triple, &F::Elem)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(|v| self.field.is_zero(v))
    }

    /// `A(n, r, m)`; zero for indefinite indices, precision error when the
    /// class is not stored.
    pub fn get(&self, n: i64, r: i64, m: i64) -> Result<F::Elem> {
        if n < 0 || m < 0 || r * r > 4 * n * m {
            return Ok(self.field.zero());
        }
        if let Some(v) = self.coeffs.get(&canonical(n, r, m)) {
            return Ok(v.clone());
        }
        let red = reduce(n, r, m);
        self.coeffs.get(&red).cloned().ok_or_else(|| {
            Error::precision(
                format!("A({n},{r},{m}) (reduced {red:?})"),
                red.2 as usize,
                self.bound as usize,
            )
        })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let mut out = self.clone();
        for v in out.coeffs.values_mut() {
            *v = self.field.mul(v, c);
        }
        out
    }

    /// Sum over the common stored triples.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.weight != other.weight {
            return Err(Error::domain("Siegel forms of different weight"));
        }
        let mut out = SiegelExpansion::new(self.field.clone(), self.weight, self.bound.min(other.bound));
        for (t, v) in &self.coeffs {
            if let Some(w) = other.coeffs.get(t) {
                out.coeffs.insert(*t, self.field.add(v, w));
            }
        }
        Ok(out)
    }

    /// Restriction to `n, m <= bound`.
    pub fn truncate(&self, bound: i64) -> Result<Self> {
        if bound > self.bound {
            return Err(Error::precision("Siegel truncation", bound as usize, self.bound as usize));
        }
        let mut out = SiegelExpansion::new(self.field.clone(), self.weight, bound);
        for t in Self::index_set(bound) {
            out.coeffs.insert(t, self.get(t.0, t.1, t.2)?);
        }
        Ok(out)
    }
}

fn pow_elem<F: Field>(f: &F, base: i64, e: i64) -> F::Elem {
    let q = if e >= 0 {
        BigRational::from_integer(BigInt::from(base).pow(e as u32))
    } else {
        BigRational::new(1.into(), BigInt::from(base).pow((-e) as u32))
    };
    f.from_rational(&q).expect("prime powers are invertible here")
}

/// Stored triples with `n, m >= 1` violating
/// `A(n,r,m) = sum_{d | (n,r,m)} d^(k-1) A(nm/d^2, r/d, 1)`.
pub fn maass_check<F: Field>(f: &SiegelExpansion<F>) -> Result<Vec<Triple>> {
    let fld = &f.field;
    let mut bad = Vec::new();
    for (&(n, r, m), v) in f.stored() {
        if n < 1 || m < 1 {
            continue;
        }
        let g = gcd_i64(gcd_i64(n, r), m) as u64;
        let mut rhs = fld.zero();
        for d in divisors_u64(g) {
            let d = d as i64;
            let term = f.get(n * m / (d * d), r / d, 1)?;
            rhs = fld.add(&rhs, &fld.mul(&pow_elem(fld, d, f.weight - 1), &term));
        }
        if rhs != *v {
            bad.push((n, r, m));
        }
    }
    Ok(bad)
}

/// `Phi(F) = sum_n A(n, 0, 0) q^n`, to precision `bound + 1`.
pub fn phi_operator<F: Field>(f: &SiegelExpansion<F>) -> Result<QExpansion<F>> {
    let coeffs = (0..=f.bound)
        .map(|n| f.get(n, 0, 0))
        .collect::<Result<Vec<_>>>()?;
    Ok(QExpansion::new(f.field.clone(), f.weight, coeffs))
}

/// One coset class of `T(p)`: the lower-right block `D = [[a, b], [0, d]]`
/// and the symmetric `X` in `(1/p) Sym_2(Z) / Sym_2(Z)` with `X D` integral,
/// stored as numerators `(u11, u12, u22)`.
#[derive(Clone, Debug)]
struct CosetBlock {
    a: i64,
    b: i64,
    d: i64,
    xs: Vec<(i64, i64, i64)>,
}

/// Coset data for `Gamma diag(1,1,p,p) Gamma` with upper-triangular lower
/// block: every `D` in Hermite normal form with `p D^{-1}` integral.
fn coset_blocks(p: i64) -> Vec<CosetBlock> {
    let mut out = Vec::new();
    for det in [1, p, p * p] {
        for a in 1..=det {
            if det % a != 0 {
                continue;
            }
            let d = det / a;
            for b in 0..d {
                // p D^{-1} = (p/det) [[d, -b], [0, a]]
                if (p * d) % det != 0 || (p * b) % det != 0 || (p * a) % det != 0 {
                    continue;
                }
                let mut xs = Vec::new();
                for u11 in 0..p {
                    for u12 in 0..p {
                        for u22 in 0..p {
                            // X D = (1/p) [[u11 a, u11 b + u12 d], [u12 a, u12 b + u22 d]]
                            let ok = (u11 * a) % p == 0
                                && (u11 * b + u12 * d) % p == 0
                                && (u12 * a) % p == 0
                                && (u12 * b + u22 * d) % p == 0;
                            if ok {
                                xs.push((u11, u12, u22));
                            }
                        }
                    }
                }
                out.push(CosetBlock { a, b, d, xs });
            }
        }
    }
    out
}

/// `T(p) F` for a prime `p`, normalized so that a Saito-Kurokawa lift of
/// `f` has eigenvalue `p^(k-1) + p^(k-2) + a_f(p)`. The output bound is
/// `floor(bound / p)`.
pub fn hecke_t2<F: Field>(f: &SiegelExpansion<F>, p: u64) -> Result<SiegelExpansion<F>> {
    hecke_t2_to(f, p, f.bound / p as i64)
}

pub fn hecke_t2_to<F: Field>(f: &SiegelExpansion<F>, p: u64, out_bound: i64) -> Result<SiegelExpansion<F>> {
    if !is_prime_u64(p) {
        return Err(Error::domain(format!("T({p}) is only implemented for primes")));
    }
    let pi = p as i64;
    if f.bound < pi * out_bound {
        return Err(Error::precision(
            format!("genus-2 T({p}) to bound {out_bound}"),
            (pi * out_bound) as usize,
            f.bound as usize,
        ));
    }
    let fld = &f.field;
    let k = f.weight;
    let blocks = coset_blocks(pi);
    // p^(2k-3) det(D)^(-k) per block
    let weights: Vec<F::Elem> = blocks
        .iter()
        .map(|bl| {
            let det = bl.a * bl.d;
            let e = if det == 1 { 0 } else if det == pi { 1 } else { 2 };
            pow_elem(fld, pi, 2 * k - 3 - k * e)
        })
        .collect();
    let mut out = SiegelExpansion::new(fld.clone(), k, out_bound);
    for (n, r, m) in SiegelExpansion::<F>::index_set(out_bound) {
        let mut acc = fld.zero();
        for (bl, w) in blocks.iter().zip(&weights) {
            // 2T' = D (2T) D^t / p with 2T = [[2n, r], [r, 2m]]
            let (a, b, d) = (bl.a, bl.b, bl.d);
            let t11 = a * a * 2 * n + 2 * a * b * r + b * b * 2 * m;
            let t12 = a * d * r + b * d * 2 * m;
            let t22 = d * d * 2 * m;
            if t11 % pi != 0 || t12 % pi != 0 || t22 % pi != 0 {
                continue;
            }
            let (t11, t12, t22) = (t11 / pi, t12 / pi, t22 / pi);
            if t11 % 2 != 0 || t22 % 2 != 0 {
                continue;
            }
            let (n2, r2, m2) = (t11 / 2, t12, t22 / 2);
            // the character sum over X is |X| or 0
            let count = if bl
                .xs
                .iter()
                .all(|&(u11, u12, u22)| (n2 * u11 + r2 * u12 + m2 * u22) % pi == 0)
            {
                bl.xs.len() as i64
            } else {
                0
            };
            if count == 0 {
                continue;
            }
            let coeff = f.get(n2, r2, m2)?;
            if fld.is_zero(&coeff) {
                continue;
            }
            let term = fld.mul(&fld.mul(w, &fld.from_i64(count)), &coeff);
            acc = fld.add(&acc, &term);
        }
        out.set(n, r, m, acc);
    }
    Ok(out)
}

/// Result of comparing `T F` with `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenReport<E> {
    pub lambda: E,
    /// Every triple where `F` is nonzero, with the ratio found there.
    pub ratios: Vec<(Triple, E)>,
}

/// The scalar `lambda` with `TF = lambda F` on every triple stored in `TF`.
pub fn eigenvalue_extract<F: Field>(
    f: &SiegelExpansion<F>,
    tf: &SiegelExpansion<F>,
) -> Result<EigenReport<F::Elem>> {
    let fld = &f.field;
    let mut lambda: Option<F::Elem> = None;
    let mut ratios = Vec::new();
    for (&(n, r, m), tv) in tf.stored() {
        let fv = f.get(n, r, m)?;
        if fld.is_zero(&fv) {
            if !fld.is_zero(tv) {
                return Err(Error::NotEigenform { triple: (n, r, m) });
            }
            continue;
        }
        let ratio = fld.div(tv, &fv).expect("nonzero");
        match &lambda {
            None => lambda = Some(ratio.clone()),
            Some(l) if *l != ratio => return Err(Error::NotEigenform { triple: (n, r, m) }),
            _ => {}
        }
        ratios.push(((n, r, m), ratio));
    }
    let lambda = lambda.ok_or_else(|| Error::domain("F vanishes on the comparison range"))?;
    Ok(EigenReport { lambda, ratios })
}

/// Swaps `n` and `m` and negates `r` in every stored index.
pub fn symmetry_image<F: Field>(f: &SiegelExpansion<F>) -> SiegelExpansion<F> {
    let mut out = SiegelExpansion::new(f.field.clone(), f.weight, f.bound);
    for (&(n, r, m), v) in f.stored() {
        out.set(m, -r, n, v.clone());
    }
    out
}

/// Convenience zero test for rational expansions.
pub fn all_zero(f: &SiegelExpansion<crate::exactnum::Rationals>) -> bool {
    f.stored().all(|(_, v)| v.is_zero())
}
