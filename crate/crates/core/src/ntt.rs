//! Number-theoretic transforms and multi-modular convolution.
//!
//! Convolutions are computed modulo a family of NTT-friendly primes
//! `c * 2^20 + 1 < 2^31` and reassembled with Garner's algorithm. Two
//! consumers exist: products of power series over a small prime field
//! (Bernoulli scans) and products of rational power series, which are
//! scaled to integer vectors first.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

const LOG_MAX_LEN: u32 = 20;

/// An NTT prime together with a generator of its multiplicative group.
#[derive(Clone, Copy, Debug)]
struct NttPrime {
    p: u64,
    g: u64,
}

pub fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * a as u128) % m as u128) as u64;
        }
        a = ((a as u128 * a as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

fn ntt_primes() -> &'static [NttPrime] {
    static PRIMES: OnceLock<Vec<NttPrime>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::new();
        let step = 1u64 << LOG_MAX_LEN;
        let mut c = (1u64 << 31) / step;
        while c > 1 {
            c -= 1;
            let p = c * step + 1;
            if !crate::exactnum::intfactor::is_prime_u64(p) {
                continue;
            }
            let factors = small_prime_factors(p - 1);
            let g = (2..p)
                .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
                .expect("prime has a primitive root");
            out.push(NttPrime { p, g });
        }
        out
    })
}

fn small_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn ntt(a: &mut [u64], invert: bool, prime: NttPrime) {
    let n = a.len();
    let p = prime.p;
    let mut j = 0;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            a.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let mut w = pow_mod(prime.g, (p - 1) / len as u64, p);
        if invert {
            w = pow_mod(w, p - 2, p);
        }
        let half = len / 2;
        let mut powers = Vec::with_capacity(half);
        let mut cur = 1u64;
        for _ in 0..half {
            powers.push(cur);
            cur = cur * w % p;
        }
        for chunk in a.chunks_mut(len) {
            let (lo, hi) = chunk.split_at_mut(half);
            for k in 0..half {
                let u = lo[k];
                let v = hi[k] * powers[k] % p;
                lo[k] = if u + v >= p { u + v - p } else { u + v };
                hi[k] = if u >= v { u - v } else { u + p - v };
            }
        }
        len <<= 1;
    }
    if invert {
        let n_inv = pow_mod(n as u64, p - 2, p);
        for x in a.iter_mut() {
            *x = *x * n_inv % p;
        }
    }
}

/// Cyclic-free convolution of two residue vectors modulo one NTT prime.
fn convolve_one(a: &[u64], b: &[u64], prime: NttPrime) -> Vec<u64> {
    let need = a.len() + b.len() - 1;
    let size = need.next_power_of_two();
    assert!(
        size <= 1 << LOG_MAX_LEN,
        "convolution of length {need} exceeds NTT capacity"
    );
    let mut fa = vec![0u64; size];
    let mut fb = vec![0u64; size];
    for (dst, &x) in fa.iter_mut().zip(a) {
        *dst = x % prime.p;
    }
    for (dst, &x) in fb.iter_mut().zip(b) {
        *dst = x % prime.p;
    }
    ntt(&mut fa, false, prime);
    ntt(&mut fb, false, prime);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x = *x * y % prime.p;
    }
    ntt(&mut fa, true, prime);
    fa.truncate(need);
    fa
}

/// Product of two polynomials with coefficients reduced modulo `m < 2^32`.
pub fn mul_mod(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let primes = &ntt_primes()[..3];
    let parts: Vec<Vec<u64>> = primes.iter().map(|&pr| convolve_one(a, b, pr)).collect();
    let (p0, p1, p2) = (primes[0].p, primes[1].p, primes[2].p);
    let inv01 = pow_mod(p0 % p1, p1 - 2, p1);
    let p01 = (p0 as u128 * p1 as u128) % p2 as u128;
    let inv012 = pow_mod(p01 as u64, p2 - 2, p2);
    (0..parts[0].len())
        .map(|i| {
            let r0 = parts[0][i];
            let r1 = parts[1][i];
            let r2 = parts[2][i];
            let t1 = ((r1 + p1 - r0 % p1) % p1) * inv01 % p1;
            let x01 = r0 as u128 + t1 as u128 * p0 as u128;
            let x01_mod = (x01 % p2 as u128) as u64;
            let t2 = ((r2 + p2 - x01_mod) % p2) as u128 * inv012 as u128 % p2 as u128;
            let x = x01 + t2 * p0 as u128 * p1 as u128;
            (x % m as u128) as u64
        })
        .collect()
}

fn residue(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

/// Product of two integer polynomials, exact.
pub fn mul_integer(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let max_a = a.iter().map(|x| x.abs()).max().unwrap();
    let max_b = b.iter().map(|x| x.abs()).max().unwrap();
    let bound: BigInt = max_a * max_b * BigInt::from(a.len().min(b.len())) * 2 + 1;
    let primes = ntt_primes();
    let mut modulus = BigInt::one();
    let mut used = Vec::new();
    for pr in primes {
        if modulus > bound {
            break;
        }
        modulus *= pr.p;
        used.push(*pr);
    }
    assert!(modulus > bound, "coefficients too large for the NTT prime pool");

    let parts: Vec<Vec<u64>> = used
        .iter()
        .map(|&pr| {
            let ra: Vec<u64> = a.iter().map(|x| residue(x, pr.p)).collect();
            let rb: Vec<u64> = b.iter().map(|x| residue(x, pr.p)).collect();
            convolve_one(&ra, &rb, pr)
        })
        .collect();

    // Garner: mixed-radix digits, then symmetric lift.
    let k = used.len();
    let mut inv = vec![vec![0u64; k]; k];
    for i in 0..k {
        for j in 0..i {
            inv[j][i] = pow_mod(used[j].p % used[i].p, used[i].p - 2, used[i].p);
        }
    }
    let half = &modulus >> 1;
    (0..parts[0].len())
        .map(|idx| {
            let mut digits = vec![0u64; k];
            for i in 0..k {
                let pi = used[i].p;
                let mut x = parts[i][idx];
                for j in 0..i {
                    x = (x + pi - digits[j] % pi) % pi * inv[j][i] % pi;
                }
                digits[i] = x;
            }
            let mut value = BigInt::zero();
            for i in (0..k).rev() {
                value = value * used[i].p + digits[i];
            }
            if value > half {
                value -= &modulus;
            }
            value
        })
        .collect()
}

fn common_denominator(v: &[BigRational]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// First `n` coefficients of the product of two rational series.
pub fn mul_rational_series(a: &[BigRational], b: &[BigRational], n: usize) -> Vec<BigRational> {
    let a = &a[..a.len().min(n)];
    let b = &b[..b.len().min(n)];
    if a.is_empty() || b.is_empty() {
        return vec![BigRational::zero(); n];
    }
    let da = common_denominator(a);
    let db = common_denominator(b);
    let ia: Vec<BigInt> = a.iter().map(|x| (x * &da).to_integer()).collect();
    let ib: Vec<BigInt> = b.iter().map(|x| (x * &db).to_integer()).collect();
    let prod = mul_integer(&ia, &ib);
    let den = da * db;
    let mut out: Vec<BigRational> = prod
        .into_iter()
        .take(n)
        .map(|c| BigRational::new(c, den.clone()))
        .collect();
    out.resize(n, BigRational::zero());
    out
}

/// Inverse of a power series modulo `p` to `n` terms (Newton iteration).
///
/// Requires `a[0] != 0 (mod p)`.
pub fn inverse_series_mod(a: &[u64], n: usize, p: u64) -> Vec<u64> {
    assert!(!a.is_empty() && !a[0].is_multiple_of(p), "series is not invertible");
    let mut inv = vec![pow_mod(a[0] % p, p - 2, p)];
    let mut len = 1;
    while len < n {
        let next = (2 * len).min(n);
        // inv <- inv * (2 - a * inv) mod x^next
        let a_trunc: Vec<u64> = a.iter().take(next).map(|&x| x % p).collect();
        let mut e = mul_mod(&a_trunc, &inv, p);
        e.truncate(next);
        e.resize(next, 0);
        for x in e.iter_mut() {
            *x = (p - *x) % p;
        }
        e[0] = (e[0] + 2) % p;
        let mut prod = mul_mod(&inv, &e, p);
        prod.truncate(next);
        prod.resize(next, 0);
        inv = prod;
        len = next;
    }
    inv.truncate(n);
    inv
}


#[cfg(test)]
mod tests {
    use super::*;

    fn naive(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % m;
            }
        }
        out
    }

    #[test]
    fn prime_pool_is_large_enough() {
        let primes = ntt_primes();
        assert!(primes.len() >= 40);
        for pr in primes {
            assert_eq!((pr.p - 1) % (1 << LOG_MAX_LEN), 0);
            assert_eq!(pow_mod(pr.g, pr.p - 1, pr.p), 1);
        }
    }

    #[test]
    fn mul_mod_matches_schoolbook() {
        let m = 516_223;
        let a: Vec<u64> = (0..300).map(|i| (i * i * 7 + 3) % m).collect();
        let b: Vec<u64> = (0..257).map(|i| (i * 13 + m - 1) % m).collect();
        assert_eq!(mul_mod(&a, &b, m), naive(&a, &b, m));
    }

    #[test]
    fn integer_product_handles_signs_and_size() {
        let a: Vec<BigInt> = (0..150)
            .map(|i| BigInt::from(10).pow(40 + i % 7) * if i % 3 == 0 { -1 } else { 1 } + i)
            .collect();
        let b: Vec<BigInt> = (0..120).map(|i| BigInt::from(-7 * i + 11).pow(9)).collect();
        let fast = mul_integer(&a, &b);
        let mut slow = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                slow[i + j] += x * y;
            }
        }
        assert_eq!(fast, slow);
    }

    #[test]
    fn series_inverse_mod_p() {
        let p = 1_000_003;
        let a: Vec<u64> = (0..500).map(|i| (i * 31 + 1) % p).collect();
        let inv = inverse_series_mod(&a, 500, p);
        let prod = naive(&a, &inv, p);
        assert_eq!(prod[0], 1);
        assert!(prod[1..500].iter().all(|&x| x == 0));
    }
}
