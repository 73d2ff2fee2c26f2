//! Coefficient fields.
//!
//! Every algebraic container in the crate (polynomials, matrices,
//! q-expansions, Siegel expansions) is generic over a [`Field`] *context*:
//! a small value that knows how to combine elements. Elements themselves
//! carry no context, which keeps `Vec<F::Elem>` cheap for the rationals and
//! the prime fields while still allowing number fields whose arithmetic
//! depends on a defining polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_integer(&self, n: &BigInt) -> Self::Elem;
    /// Image of a rational number. Fails when the denominator is not
    /// invertible (prime fields).
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;
    /// Human-readable form of an element.
    fn format_elem(&self, a: &Self::Elem) -> String;
    /// Short tag naming the field ("QQ", "GF(p)", ...).
    fn tag(&self) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_integer(&BigInt::from(n))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// First `n` coefficients of the product of two truncated series.
    fn mul_series(&self, a: &[Self::Elem], b: &[Self::Elem], n: usize) -> Vec<Self::Elem> {
        schoolbook(self, a, b, n)
    }
}

pub(crate) fn schoolbook<F: Field + ?Sized>(
    field: &F,
    a: &[F::Elem],
    b: &[F::Elem],
    n: usize,
) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            if field.is_zero(y) {
                continue;
            }
            out[i + j] = field.add(&out[i + j], &field.mul(x, y));
        }
    }
    out
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

/// Below this length rational series are multiplied by the schoolbook method.
pub const NTT_THRESHOLD: usize = 96;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_integer(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }
    fn format_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn tag(&self) -> String {
        "QQ".into()
    }

    fn mul_series(&self, a: &[BigRational], b: &[BigRational], n: usize) -> Vec<BigRational> {
        if a.len().min(n) < NTT_THRESHOLD || b.len().min(n) < NTT_THRESHOLD {
            return schoolbook(self, a, b, n);
        }
        crate::ntt::mul_rational_series(a, b, n)
    }
}

/// The prime field Z/pZ for an odd prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Fails unless `p` is an odd prime below 2^32.
    pub fn new(p: u64) -> Result<Self> {
        if !(3..1 << 32).contains(&p) || !crate::exactnum::intfactor::is_prime_u64(p) {
            return Err(Error::domain(format!("{p} is not an odd prime below 2^32")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_int(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits")
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| crate::ntt::pow_mod(*a, self.p - 2, self.p))
    }
    fn from_integer(&self, n: &BigInt) -> u64 {
        self.reduce_int(n)
    }
    fn from_rational(&self, q: &BigRational) -> Result<u64> {
        let den = self.reduce_int(q.denom());
        if den == 0 {
            return Err(Error::domain(format!(
                "denominator {} is divisible by {}",
                q.denom(),
                self.p
            )));
        }
        let num = self.reduce_int(q.numer());
        Ok(self.mul(&num, &self.inv(&den).unwrap()))
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
    fn tag(&self) -> String {
        format!("GF({})", self.p)
    }

    fn mul_series(&self, a: &[u64], b: &[u64], n: usize) -> Vec<u64> {
        if a.len().min(n) < NTT_THRESHOLD || b.len().min(n) < NTT_THRESHOLD {
            return schoolbook(self, a, b, n);
        }
        let a = &a[..a.len().min(n)];
        let b = &b[..b.len().min(n)];
        let mut out = crate::ntt::mul_mod(a, b, self.p);
        out.resize(n, 0);
        out.truncate(n);
        out
    }
}

/// Exact p-adic valuation of a nonzero rational; `None` for zero.
pub fn rational_valuation(q: &BigRational, p: &BigInt) -> Option<i64> {
    if q.is_zero() {
        return None;
    }
    Some(int_valuation(q.numer(), p) as i64 - int_valuation(q.denom(), p) as i64)
}

/// Largest `e` with `p^e | n`, for nonzero `n`.
pub fn int_valuation(n: &BigInt, p: &BigInt) -> u64 {
    let mut n = n.abs();
    let mut e = 0;
    if n.is_zero() {
        return u64::MAX;
    }
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return e;
        }
        n = q;
        e += 1;
    }
}

/// Shorthand for a rational number from two machine integers.
pub fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integral rational number.
pub fn qi(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}
