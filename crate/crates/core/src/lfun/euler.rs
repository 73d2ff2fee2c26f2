//! Restricted L-values: multiplying back the Euler factors at finitely many
//! primes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactnum::{Field, NfElem, NumberField};
use crate::level1::{hecke_eigenvalue, NewformData};
use crate::lfun::DirichletChar;
use crate::{Error, Result};

/// `l^e` for a possibly negative exponent.
fn power(l: u64, e: i64) -> BigRational {
    let b = BigInt::from(l).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(b)
    } else {
        BigRational::new(BigInt::one(), b)
    }
}

/// Euler factor `E_l(s)` with `L = E_l^{-1} L^{(l)}` at `l`, evaluated at
/// the integer `s`: `1 - chi(l) l^-s` for a Dirichlet L-function, or
/// `1 - chi(l) a(l) l^-s + chi(l)^2 l^(w-1-2s)` for a twisted newform.
pub fn euler_factor_at(
    field: &NumberField,
    s: i64,
    chi: &DirichletChar,
    f: Option<&NewformData>,
    ell: u64,
) -> Result<NfElem> {
    let c = chi.value(ell as i64);
    let cq = BigRational::from_integer(c.into());
    let one = field.one();
    match f {
        None => {
            let t = field.from_rational(&(cq * power(ell, -s)))?;
            Ok(field.sub(&one, &t))
        }
        Some(f) => {
            let a = hecke_eigenvalue(f, ell)?;
            let lin = field.mul(&a, &field.from_rational(&(&cq * power(ell, -s)))?);
            let quad = field.from_rational(&(&cq * &cq * power(ell, f.weight - 1 - 2 * s)))?;
            Ok(field.add(&field.sub(&one, &lin), &quad))
        }
    }
}

/// `L^Sigma(s)` from `L(s)`: multiplies `value` by the Euler factor at each
/// prime in `sigma`. A vanishing factor is a domain error.
pub fn remove_euler(
    field: &NumberField,
    value: &NfElem,
    s: i64,
    chi: &DirichletChar,
    f: Option<&NewformData>,
    sigma: &[u64],
) -> Result<NfElem> {
    if let Some(f) = f {
        if f.field != *field {
            return Err(Error::domain("value must live in the eigenfield of f"));
        }
    }
    let mut acc = value.clone();
    for &ell in sigma {
        let e = euler_factor_at(field, s, chi, f, ell)?;
        if field.is_zero(&e) {
            return Err(Error::domain(format!("Euler factor at {ell} vanishes at s = {s}")));
        }
        acc = field.mul(&acc, &e);
    }
    Ok(acc)
}

/// Rational convenience wrapper for Dirichlet L-values.
pub fn remove_euler_q(value: &BigRational, s: i64, chi: &DirichletChar, sigma: &[u64]) -> Result<BigRational> {
    let q = NumberField::rationals();
    let v = remove_euler(&q, &q.from_rational(value)?, s, chi, None, sigma)?;
    Ok(v.0.first().cloned().unwrap_or_else(BigRational::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::q;
    use crate::lfun::dirichlet_l_neg;

    #[test]
    fn dirichlet_removal() {
        let triv = DirichletChar::trivial();
        let z = dirichlet_l_neg(2, &triv).unwrap();
        assert_eq!(z, q(-1, 12));
        assert_eq!(remove_euler_q(&z, -1, &triv, &[]).unwrap(), z);
        assert_eq!(remove_euler_q(&z, -1, &triv, &[2]).unwrap(), q(1, 12));
        let chi = DirichletChar::quadratic(-3).unwrap();
        let v = q(7, 5);
        assert_eq!(remove_euler_q(&v, -25, &chi, &[3]).unwrap(), v);
        assert!(remove_euler_q(&v, 0, &triv, &[2]).is_err());
    }
}
