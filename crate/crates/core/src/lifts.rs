//! The correspondence maps: Shimura lift, Maass lift, index raising `V_m`,
//! and Euler factors of the lifted forms.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::intfactor::{divisors_u64, gcd_i64};
use crate::exactnum::{Field, NfElem, NumberField, Poly, Rationals};
use crate::jacobi::{JacobiForm1, KohnenForm};
use crate::lfun::bernoulli::bernoulli;
use crate::lfun::character::is_fundamental;
use crate::qexp::QExpansion;
use crate::siegel::SiegelExpansion;

pub use crate::lfun::character::kronecker;

fn powq(base: i64, e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::from(base).pow(e as u32))
    } else {
        BigRational::new(BigInt::one(), BigInt::from(base).pow((-e) as u32))
    }
}

/// `sum_n ( sum_{d | n} (D/d) d^(k-2) a_g(|D| n^2 / d^2) ) q^n`, weight `2k - 2`.
pub fn shimura_lift(g: &KohnenForm, disc: i64, prec: usize) -> Result<QExpansion<Rationals>> {
    let k = g.k;
    if !is_fundamental(disc) {
        return Err(Error::domain(format!("{disc} is not a fundamental discriminant")));
    }
    let sign = if (k - 1) % 2 == 0 { 1 } else { -1 };
    if sign * disc <= 0 {
        return Err(Error::domain(format!("(-1)^(k-1) D must be positive (k = {k}, D = {disc})")));
    }
    let ad = disc.unsigned_abs() as usize;
    let top = prec.saturating_sub(1);
    let need = ad * top * top + 1;
    if g.precision() < need {
        return Err(Error::precision(format!("Shimura lift to q^{top}"), need, g.precision()));
    }
    let mut coeffs = vec![BigRational::zero(); prec];
    for n in 1..prec {
        let mut s = BigRational::zero();
        for d in divisors_u64(n as u64) {
            let chi = kronecker(disc, d);
            if chi == 0 {
                continue;
            }
            let idx = ad * (n / d as usize) * (n / d as usize);
            s += BigRational::from_integer(BigInt::from(chi) * BigInt::from(d).pow((k - 2) as u32))
                * g.a(idx)?;
        }
        coeffs[n] = s;
    }
    Ok(QExpansion::new(Rationals, 2 * k - 2, coeffs))
}

/// The Maass lift `A(n,r,m) = sum_{d | (n,r,m)} d^(k-1) c((4nm - r^2)/d^2)`
/// of `g`, with `A(0,0,0) = -B_k/(2k) c(0)`.
///
/// Besides every triple with `n, m <= bound`, the first Fourier-Jacobi
/// row `A(n, r, 1)` is stored for `n <= bound^2`, which is what the Maass
/// relations refer to.
pub fn maass_lift(g: &KohnenForm, bound: i64) -> Result<SiegelExpansion<Rationals>> {
    let k = g.k;
    if k % 2 != 0 {
        return Err(Error::domain("Maass lifts need even k"));
    }
    let need = (4 * bound * bound) as usize + 1;
    if g.precision() < need {
        return Err(Error::precision("Maass lift", need, g.precision()));
    }
    let a = |t: i64| -> Result<BigRational> { g.a(t as usize).cloned() };
    let coeff = |n: i64, r: i64, m: i64| -> Result<BigRational> {
        if n == 0 && m == 0 {
            let c0 = a(0)?;
            let bk = bernoulli(k as usize);
            return Ok(-bk / BigRational::from_integer(BigInt::from(2 * k)) * c0);
        }
        let g0 = gcd_i64(gcd_i64(n, r), m) as u64;
        let disc = 4 * n * m - r * r;
        let mut s = BigRational::zero();
        for d in divisors_u64(g0) {
            let d = d as i64;
            s += powq(d, k - 1) * a(disc / (d * d))?;
        }
        Ok(s)
    };
    let mut out = SiegelExpansion::new(Rationals, k, bound);
    for (n, r, m) in SiegelExpansion::<Rationals>::index_set(bound) {
        out.set(n, r, m, coeff(n, r, m)?);
    }
    for n in bound + 1..=bound * bound {
        let mut r = 0;
        while r * r <= 4 * n {
            out.set(n, r, 1, coeff(n, r, 1)?);
            r += 1;
        }
    }
    Ok(out)
}

/// Coefficients `c'(n, r)` of an index-`m` Jacobi form, keyed by `(n, r)`
/// with `r >= 0` and `r^2 <= 4nm`.
#[derive(Clone, Debug, PartialEq)]
pub struct IndexTable {
    pub weight: i64,
    pub index: i64,
    pub max_n: i64,
    pub entries: BTreeMap<(i64, i64), BigRational>,
}

/// `V_m phi` on `0 <= n <= max_n`:
/// `c'(n, r) = sum_{d | (n, r, m)} d^(k-1) c((r^2 - 4nm)/d^2)`.
pub fn v_operator(phi: &JacobiForm1, m: i64, max_n: i64) -> Result<IndexTable> {
    if m < 1 {
        return Err(Error::domain("V_m needs m >= 1"));
    }
    let k = phi.weight;
    let mut entries = BTreeMap::new();
    for n in 0..=max_n {
        let mut r = 0;
        while r * r <= 4 * n * m {
            let g0 = gcd_i64(gcd_i64(n, r), m) as u64;
            let mut s = BigRational::zero();
            for d in divisors_u64(g0) {
                let d = d as i64;
                s += powq(d, k - 1) * phi.c((r * r - 4 * n * m) / (d * d))?;
            }
            entries.insert((n, r), s);
            r += 1;
        }
    }
    Ok(IndexTable {
        weight: k,
        index: m,
        max_n,
        entries,
    })
}

/// The `m`-th Fourier-Jacobi coefficient of a Siegel expansion as an
/// index-`m` table on `n <= max_n`.
pub fn fourier_jacobi(f: &SiegelExpansion<Rationals>, m: i64, max_n: i64) -> Result<IndexTable> {
    let mut entries = BTreeMap::new();
    for n in 0..=max_n {
        let mut r = 0;
        while r * r <= 4 * n * m {
            entries.insert((n, r), f.get(n, r, m)?);
            r += 1;
        }
    }
    Ok(IndexTable {
        weight: f.weight,
        index: m,
        max_n,
        entries,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EulerTag {
    Spinor,
    Standard,
    Elliptic,
    Dirichlet,
}

/// A local factor: a polynomial with constant term 1 in one variable.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerFactor {
    pub prime: u64,
    pub tag: EulerTag,
    pub poly: Poly<NumberField>,
}

fn kq(k: &NumberField, q: BigRational) -> NfElem {
    k.from_rational(&q).expect("rationals embed")
}

/// `(1 - l^(k-1) x)(1 - l^(k-2) x)(1 - a x + l^(2k-3) x^2)`.
pub fn spinor_euler_factor(field: &NumberField, a: &NfElem, k: i64, ell: u64) -> EulerFactor {
    let l = ell as i64;
    let one = field.one();
    let lin = |c: BigRational| Poly::new(field.clone(), vec![one.clone(), kq(field, -c)]);
    let quad = Poly::new(
        field.clone(),
        vec![one.clone(), field.neg(a), kq(field, powq(l, 2 * k - 3))],
    );
    let poly = lin(powq(l, k - 1)).mul(&lin(powq(l, k - 2))).mul(&quad);
    EulerFactor {
        prime: ell,
        tag: EulerTag::Spinor,
        poly,
    }
}

/// `W_l(chi(l) t)` for the standard L-function of the lift, expanded from
/// symmetric functions of the Satake parameters `alpha_1, alpha_2`
/// (`alpha_1 + alpha_2 = a l^(1-k)`, `alpha_1 alpha_2 = 1/l`): the reciprocal
/// roots are `chi l^2`, `chi l^2 alpha_i` and `chi l^2 / alpha_i`.
pub fn standard_euler_factor(
    field: &NumberField,
    a: &NfElem,
    k: i64,
    ell: u64,
    chi: i64,
) -> Result<EulerFactor> {
    if !(-1..=1).contains(&chi) {
        return Err(Error::domain("only real character values are supported"));
    }
    let l = ell as i64;
    let e1 = field.mul(a, &kq(field, powq(l, 1 - k)));
    let e2 = kq(field, powq(l, -1));
    // inverse parameters: e1' = e1/e2, e2' = 1/e2
    let e1i = field.div(&e1, &e2).expect("nonzero");
    let e2i = field.inv(&e2).expect("nonzero");
    let power_sums = |s1: &NfElem, s2: &NfElem, upto: usize| -> Vec<NfElem> {
        // s_j = alpha_1^j + alpha_2^j by Newton's recurrence
        let mut s = vec![field.from_i64(2), s1.clone()];
        for j in 2..=upto {
            let v = field.sub(&field.mul(s1, &s[j - 1]), &field.mul(s2, &s[j - 2]));
            s.push(v);
        }
        s
    };
    let ps = power_sums(&e1, &e2, 5);
    let pi = power_sums(&e1i, &e2i, 5);
    // power sums of the five reciprocal roots
    let mut p = vec![field.zero()];
    for j in 1..=5usize {
        let scale = kq(field, BigRational::from_integer(BigInt::from(chi).pow(j as u32)) * powq(l, 2 * j as i64));
        let inner = field.add(&field.add(&field.one(), &ps[j]), &pi[j]);
        p.push(field.mul(&scale, &inner));
    }
    // Newton's identities: j e_j = sum_{i=1}^j (-1)^(i-1) e_{j-i} p_i
    let mut e = vec![field.one()];
    for j in 1..=5usize {
        let mut acc = field.zero();
        for i in 1..=j {
            let term = field.mul(&e[j - i], &p[i]);
            acc = if i % 2 == 1 { field.add(&acc, &term) } else { field.sub(&acc, &term) };
        }
        e.push(field.mul(&acc, &kq(field, BigRational::new(BigInt::one(), BigInt::from(j)))));
    }
    let coeffs = e
        .into_iter()
        .enumerate()
        .map(|(j, c)| if j % 2 == 1 { field.neg(&c) } else { c })
        .collect();
    Ok(EulerFactor {
        prime: ell,
        tag: EulerTag::Standard,
        poly: Poly::new(field.clone(), coeffs),
    })
}

/// `1 - chi a l^(-s) + chi^2 l^(2k-3-2s)` for `L(s, f, chi)` with `f` of
/// weight `2k - 2`, written in `t = l^(-2 s0)` after substituting
/// `s = 2 s0 + shift`.
pub fn elliptic_euler_factor(
    field: &NumberField,
    a: &NfElem,
    k: i64,
    ell: u64,
    chi: i64,
    shift: i64,
) -> EulerFactor {
    let l = ell as i64;
    let c1 = field.mul(a, &kq(field, BigRational::from_integer((-chi).into()) * powq(l, -shift)));
    let c2 = kq(field, BigRational::from_integer((chi * chi).into()) * powq(l, 2 * k - 3 - 2 * shift));
    EulerFactor {
        prime: ell,
        tag: EulerTag::Elliptic,
        poly: Poly::new(field.clone(), vec![field.one(), c1, c2]),
    }
}

/// `1 - chi l^(-s)` in `t = l^(-2 s0)` with `s = 2 s0 + shift`.
pub fn dirichlet_euler_factor(field: &NumberField, ell: u64, chi: i64, shift: i64) -> EulerFactor {
    let c1 = kq(field, BigRational::from_integer((-chi).into()) * powq(ell as i64, -shift));
    EulerFactor {
        prime: ell,
        tag: EulerTag::Dirichlet,
        poly: Poly::new(field.clone(), vec![field.one(), c1]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::field::qi;
    use crate::jacobi::{ez_to_kohnen, jacobi_generators};

    #[test]
    fn maass_lift_small_entries() {
        let (p10, _) = jacobi_generators(160).unwrap();
        let g = ez_to_kohnen(&p10);
        let f = maass_lift(&g, 6).unwrap();
        assert_eq!(f.get(1, 1, 1).unwrap(), g.coeffs[3]);
        assert_eq!(f.get(1, 0, 1).unwrap(), g.coeffs[4]);
        let want = &g.coeffs[12] + BigRational::from_integer(BigInt::from(512)) * &g.coeffs[3];
        assert_eq!(f.get(2, 2, 2).unwrap(), want);
        assert_eq!(f.get(0, 0, 3).unwrap(), qi(0));
    }

    #[test]
    fn shimura_first_coefficient() {
        let (p10, _) = jacobi_generators(400).unwrap();
        let g = ez_to_kohnen(&p10);
        let f = shimura_lift(&g, -3, 10).unwrap();
        assert_eq!(f.coeffs()[1], qi(1));
        assert!(matches!(shimura_lift(&g, -3, 20), Err(Error::Precision { .. })));
        assert!(matches!(shimura_lift(&g, -12, 5), Err(Error::Domain(_))));
        assert!(matches!(shimura_lift(&g, 5, 5), Err(Error::Domain(_))));
    }

    #[test]
    fn spinor_linear_coefficient() {
        let k = NumberField::rationals();
        let a = k.from_i64(-528);
        let e = spinor_euler_factor(&k, &a, 10, 2);
        assert_eq!(e.poly.coeff(1), k.from_i64(-(512 + 256 - 528)));
        assert_eq!(e.poly.coeff(4), k.from_i64(1 << 34));
        assert_eq!(e.poly.degree(), Some(4));
    }
}
