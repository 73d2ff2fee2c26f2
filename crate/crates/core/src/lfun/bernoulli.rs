//! Bernoulli numbers: exact, generalized, and modulo a prime.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::character::DirichletChar;
use crate::error::{Error, Result};
use crate::exactnum::Residue;
use crate::ntt::{inverse_series_mod, pow_mod};

/// `B_0, ..., B_n` with `B_1 = -1/2`, from the inverse of `(e^t - 1)/t`.
pub fn bernoulli_numbers(n: usize) -> Vec<BigRational> {
    // c_i = 1/(i+1)!; invert the series, then B_m = m! * inverse_m
    let mut fact = vec![BigInt::one()];
    for i in 1..=n + 1 {
        let next = &fact[i - 1] * BigInt::from(i);
        fact.push(next);
    }
    let c: Vec<BigRational> = (0..=n)
        .map(|i| BigRational::new(BigInt::one(), fact[i + 1].clone()))
        .collect();
    let mut inv = vec![BigRational::zero(); n + 1];
    inv[0] = BigRational::one();
    for m in 1..=n {
        let mut s = BigRational::zero();
        for j in 1..=m {
            s += &c[j] * &inv[m - j];
        }
        inv[m] = -s;
    }
    inv.into_iter()
        .enumerate()
        .map(|(m, x)| x * BigRational::from_integer(fact[m].clone()))
        .collect()
}

pub fn bernoulli(n: usize) -> BigRational {
    bernoulli_numbers(n).pop().unwrap()
}

fn binomials(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for i in 1..=n {
        let next = &row[i - 1] * BigInt::from(n - i + 1) / BigInt::from(i);
        row.push(next);
    }
    row
}

/// Generalized Bernoulli number `B_{n,chi}` defined by
/// `sum_{a=1}^N chi(a) t e^{at} / (e^{Nt} - 1) = sum B_{n,chi} t^n / n!`.
///
/// For the trivial character this gives `B_{1} = +1/2`; all other indices
/// agree with [`bernoulli`].
pub fn gen_bernoulli(n: usize, chi: &DirichletChar) -> BigRational {
    // t/(e^{Nt}-1) = sum_m B_m N^{m-1} t^m/m!  and
    // sum_a chi(a) e^{at} = sum_j S_j t^j/j!  with S_j = sum_a chi(a) a^j.
    let big_n = chi.modulus();
    let bs = bernoulli_numbers(n);
    let binom = binomials(n);
    let nq = BigRational::from_integer(BigInt::from(big_n));
    let mut total = BigRational::zero();
    for m in 0..=n {
        if bs[m].is_zero() {
            continue;
        }
        let j = n - m;
        let s_j: BigInt = (1..=big_n)
            .map(|a| BigInt::from(chi.value(a as i64)) * BigInt::from(a).pow(j as u32))
            .sum();
        if s_j.is_zero() {
            continue;
        }
        let npow = if m == 0 {
            BigRational::one() / &nq
        } else {
            BigRational::from_integer(BigInt::from(big_n).pow((m - 1) as u32))
        };
        total += &bs[m] * npow * BigRational::from_integer(&binom[m] * s_j);
    }
    total
}

/// `L(1 - n, chi) = -B_{n,chi}/n` for `n >= 1`.
pub fn dirichlet_l_neg(n: usize, chi: &DirichletChar) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::domain("L(1-n, chi) needs n >= 1"));
    }
    Ok(-gen_bernoulli(n, chi) / BigRational::from_integer(BigInt::from(n)))
}

/// The series `(e^t - 1)/t mod p` to `len` terms, and factorials mod p.
fn exp_quotient_mod(len: usize, p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut fact = vec![1u64; len + 1];
    for i in 1..=len {
        fact[i] = fact[i - 1] * (i as u64 % p) % p;
    }
    let mut inv_fact = vec![0u64; len + 1];
    inv_fact[len] = pow_mod(fact[len], p - 2, p);
    for i in (0..len).rev() {
        inv_fact[i] = inv_fact[i + 1] * ((i as u64 + 1) % p) % p;
    }
    let series = (0..len).map(|i| inv_fact[i + 1]).collect();
    (series, fact)
}

fn check_prime(p: u64) -> Result<()> {
    crate::exactnum::PrimeField::new(p).map(|_| ())
}

/// `B_n mod p` through power-series inversion over GF(p).
pub fn bernoulli_mod_p(n: usize, p: u64) -> Result<Residue> {
    check_prime(p)?;
    if n % 2 == 1 || n < 2 {
        return Err(Error::domain(format!("index {n} must be even and at least 2")));
    }
    if (n as u64).is_multiple_of(p - 1) {
        return Err(Error::domain(format!(
            "B_{n} has a pole at {p} (von Staudt-Clausen: p-1 divides n)"
        )));
    }
    if n as u64 >= p {
        return Err(Error::domain(format!("index {n} must be below {p}")));
    }
    let (series, fact) = exp_quotient_mod(n + 1, p);
    let inv = inverse_series_mod(&series, n + 1, p);
    Ok(Residue {
        value: inv[n] * fact[n] % p,
        modulus: p,
    })
}

/// Algorithm used by [`irregular_scan`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMethod {
    /// One Newton inversion of `(e^t - 1)/t` with NTT products.
    Series,
    /// The quadratic recurrence `sum_j C(m+1, j) B_j = 0` mod p.
    Naive,
}

/// Every even `n <= p - 3` with `p | B_n`.
pub fn irregular_scan(p: u64, method: ScanMethod) -> Result<Vec<usize>> {
    check_prime(p)?;
    if p < 5 {
        return Ok(Vec::new());
    }
    let top = (p - 3) as usize;
    let values = match method {
        ScanMethod::Series => {
            let (series, fact) = exp_quotient_mod(top + 1, p);
            let inv = inverse_series_mod(&series, top + 1, p);
            (0..=top).map(|m| inv[m] * fact[m] % p).collect::<Vec<_>>()
        }
        ScanMethod::Naive => naive_mod_p(top, p),
    };
    Ok((2..=top).step_by(2).filter(|&m| values[m] == 0).collect())
}

fn naive_mod_p(top: usize, p: u64) -> Vec<u64> {
    // (m+1) B_m = -sum_{j<m} C(m+1, j) B_j
    let mut fact = vec![1u64; top + 2];
    for i in 1..top + 2 {
        fact[i] = fact[i - 1] * i as u64 % p;
    }
    let inv_fact: Vec<u64> = fact.iter().map(|&f| pow_mod(f, p - 2, p)).collect();
    let binom = |n: usize, k: usize| fact[n] * inv_fact[k] % p * inv_fact[n - k] % p;
    let mut b = vec![0u64; top + 1];
    b[0] = 1;
    for m in 1..=top {
        let mut s = 0u64;
        for (j, bj) in b.iter().enumerate().take(m) {
            s = (s + binom(m + 1, j) * bj) % p;
        }
        let inv = pow_mod((m as u64 + 1) % p, p - 2, p);
        b[m] = (p - s) % p * inv % p;
    }
    b
}
