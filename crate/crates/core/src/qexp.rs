//! Truncated q-expansions of level-one modular forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::intfactor::divisors_u64;
use crate::exactnum::{Field, Rationals};
use crate::lfun::bernoulli::bernoulli;

/// `a(0), ..., a(N-1)` of a weight-`w` form; `N` is the precision.
#[derive(Clone, Debug, PartialEq)]
pub struct QExpansion<F: Field> {
    field: F,
    weight: i64,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> QExpansion<F> {
    pub fn new(field: F, weight: i64, coeffs: Vec<F::Elem>) -> Self {
        QExpansion {
            field,
            weight,
            coeffs,
        }
    }

    pub fn zero(field: F, weight: i64, prec: usize) -> Self {
        let coeffs = vec![field.zero(); prec];
        QExpansion::new(field, weight, coeffs)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    /// `a(n)`; a precision error if `n` is not known.
    pub fn coeff(&self, n: usize) -> Result<&F::Elem> {
        self.coeffs
            .get(n)
            .ok_or_else(|| Error::precision(format!("a({n})"), n + 1, self.coeffs.len()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    pub fn truncate(&self, prec: usize) -> Result<Self> {
        if prec > self.precision() {
            return Err(Error::precision("truncation", prec, self.precision()));
        }
        Ok(QExpansion::new(
            self.field.clone(),
            self.weight,
            self.coeffs[..prec].to_vec(),
        ))
    }

    fn same_weight(&self, other: &Self) -> Result<()> {
        if self.weight != other.weight {
            return Err(Error::domain(format!(
                "cannot add forms of weight {} and {}",
                self.weight, other.weight
            )));
        }
        Ok(())
    }

    /// Sum; precision is the smaller of the two.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_weight(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Ok(QExpansion::new(self.field.clone(), self.weight, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_weight(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        Ok(QExpansion::new(self.field.clone(), self.weight, coeffs))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        QExpansion::new(self.field.clone(), self.weight, coeffs)
    }

    /// Product; weights add and the precision is the smaller one.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        let coeffs = self.field.mul_series(&self.coeffs, &other.coeffs, n);
        QExpansion::new(self.field.clone(), self.weight + other.weight, coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QExpansion::new(self.field.clone(), 0, {
            let mut v = vec![self.field.zero(); self.precision()];
            if !v.is_empty() {
                v[0] = self.field.one();
            }
            v
        });
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by `q^s` (a cusp-form shift); the precision grows by `s`.
    pub fn shift(&self, s: usize) -> Self {
        let mut coeffs = vec![self.field.zero(); s];
        coeffs.extend(self.coeffs.iter().cloned());
        QExpansion::new(self.field.clone(), self.weight, coeffs)
    }

    pub fn map<G: Field>(&self, target: G, f: impl Fn(&F::Elem) -> G::Elem) -> QExpansion<G> {
        let coeffs = self.coeffs.iter().map(f).collect();
        QExpansion::new(target, self.weight, coeffs)
    }

    /// Hecke operator `T(l)` with the largest provable output precision
    /// `floor(prec / l)`.
    pub fn hecke(&self, ell: u64) -> Result<Self> {
        let out = self.precision() / ell as usize;
        self.hecke_to(ell, out)
    }

    /// `T(l)` to a requested output precision; the input must have precision
    /// at least `l * out`.
    pub fn hecke_to(&self, ell: u64, out: usize) -> Result<Self> {
        if !crate::exactnum::intfactor::is_prime_u64(ell) {
            return Err(Error::domain(format!("T({ell}) is only implemented for primes")));
        }
        let l = ell as usize;
        if self.precision() < l * out {
            return Err(Error::precision(
                format!("T({ell}) to precision {out}"),
                l * out,
                self.precision(),
            ));
        }
        if self.weight < 1 {
            return Err(Error::domain("Hecke operators need weight >= 1"));
        }
        let lw = self
            .field
            .from_integer(&BigInt::from(ell).pow((self.weight - 1) as u32));
        let coeffs = (0..out)
            .map(|n| {
                let mut c = self.coeffs[l * n].clone();
                if n % l == 0 {
                    c = self.field.add(&c, &self.field.mul(&lw, &self.coeffs[n / l]));
                }
                c
            })
            .collect();
        Ok(QExpansion::new(self.field.clone(), self.weight, coeffs))
    }
}

fn sigma(n: u64, k: u32) -> BigInt {
    divisors_u64(n).into_iter().map(|d| BigInt::from(d).pow(k)).sum()
}

/// `E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n`.
pub fn eisenstein(k: i64, prec: usize) -> Result<QExpansion<Rationals>> {
    if k < 4 || k % 2 != 0 {
        return Err(Error::domain(format!("E_{k}: weight must be even and >= 4")));
    }
    let factor = -BigRational::from_integer(BigInt::from(2 * k)) / bernoulli(k as usize);
    let mut coeffs = Vec::with_capacity(prec);
    for n in 0..prec {
        if n == 0 {
            coeffs.push(BigRational::one());
        } else {
            coeffs.push(&factor * BigRational::from_integer(sigma(n as u64, (k - 1) as u32)));
        }
    }
    Ok(QExpansion::new(Rationals, k, coeffs))
}

/// Integer coefficients of `prod_{n>=1} (1 - q^n)` from Euler's pentagonal
/// number theorem.
pub fn euler_product(prec: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); prec];
    let mut j: i64 = 0;
    loop {
        let mut any = false;
        for g in [j * (3 * j - 1) / 2, j * (3 * j + 1) / 2] {
            if (g as usize) < prec {
                any = true;
                out[g as usize] = BigInt::from(if j % 2 == 0 { 1 } else { -1 });
            }
        }
        if !any {
            break;
        }
        j += 1;
    }
    out
}

/// `q prod (1 - q^n)^24`.
pub fn delta_eta(prec: usize) -> QExpansion<Rationals> {
    let e = euler_product(prec);
    let mut acc = vec![BigInt::one()];
    let mut base = e;
    let mut exp = 24u32;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = crate::ntt::mul_integer(&acc, &base);
            acc.truncate(prec);
        }
        exp >>= 1;
        if exp > 0 {
            base = crate::ntt::mul_integer(&base, &base);
            base.truncate(prec);
        }
    }
    acc.resize(prec, BigInt::zero());
    let mut coeffs = vec![BigRational::zero()];
    coeffs.extend(acc.into_iter().take(prec.saturating_sub(1)).map(BigRational::from_integer));
    coeffs.truncate(prec);
    QExpansion::new(Rationals, 12, coeffs)
}

/// `Delta = (E_4^3 - E_6^2)/1728`, checked against the eta product.
pub fn delta(prec: usize) -> Result<QExpansion<Rationals>> {
    if prec == 0 {
        return Err(Error::domain("precision must be at least 1"));
    }
    let e4 = eisenstein(4, prec)?;
    let e6 = eisenstein(6, prec)?;
    let d = e4
        .pow(3)
        .sub(&e6.pow(2))?
        .scale(&BigRational::new(BigInt::one(), BigInt::from(1728)));
    let eta = delta_eta(prec);
    if d.coeffs() != eta.coeffs() {
        return Err(Error::Internal(
            "Eisenstein and eta-product expansions of Delta disagree".into(),
        ));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::field::qi;

    #[test]
    fn eisenstein_coefficients() {
        let e4 = eisenstein(4, 4).unwrap();
        assert_eq!(e4.coeffs()[1], qi(240));
        assert_eq!(e4.coeffs()[2], qi(2160));
        assert_eq!(eisenstein(6, 3).unwrap().coeffs()[0], qi(1));
        assert_eq!(eisenstein(6, 3).unwrap().coeffs()[1], qi(-504));
        assert!(eisenstein(5, 3).is_err());
        assert!(eisenstein(2, 3).is_err());
    }

    #[test]
    fn delta_first_terms() {
        let d = delta(200).unwrap();
        assert_eq!(d.coeffs()[0], qi(0));
        assert_eq!(d.coeffs()[1], qi(1));
        assert_eq!(d.coeffs()[2], qi(-24));
        assert_eq!(d.coeffs()[3], qi(252));
        assert_eq!(d.coeffs()[11], qi(534612));
    }

    #[test]
    fn hecke_on_delta() {
        let d = delta(60).unwrap();
        let t2 = d.hecke(2).unwrap();
        assert_eq!(t2.precision(), 30);
        assert_eq!(t2.coeffs()[1], qi(-24));
        assert_eq!(t2, d.truncate(30).unwrap().scale(&qi(-24)));
        assert_eq!(d.hecke(3).unwrap().coeffs()[1], qi(252));
        let z = QExpansion::zero(Rationals, 12, 10);
        assert!(z.hecke(5).unwrap().is_zero());
        assert!(matches!(d.hecke_to(2, 31), Err(Error::Precision { .. })));
    }
}
