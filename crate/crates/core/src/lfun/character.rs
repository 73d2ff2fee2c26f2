//! Real Dirichlet characters and the Kronecker symbol.

use crate::error::{Error, Result};
use crate::exactnum::intfactor::factor_u64;

/// Kronecker symbol `(D/d)` for `d >= 1`, completely multiplicative in `d`.
pub fn kronecker(disc: i64, d: u64) -> i64 {
    if d == 0 {
        return if disc.abs() == 1 { 1 } else { 0 };
    }
    let mut out = 1;
    for (q, e) in factor_u64(d) {
        let s = kronecker_prime(disc, q);
        if s == 0 {
            return 0;
        }
        if e % 2 == 1 {
            out *= s;
        }
    }
    out
}

fn kronecker_prime(disc: i64, q: u64) -> i64 {
    if q == 2 {
        if disc % 2 == 0 {
            return 0;
        }
        return match disc.rem_euclid(8) {
            1 | 7 => 1,
            _ => -1,
        };
    }
    let a = disc.rem_euclid(q as i64) as u64;
    if a == 0 {
        return 0;
    }
    let e = crate::ntt::pow_mod(a, (q - 1) / 2, q);
    if e == 1 {
        1
    } else {
        -1
    }
}

/// Fundamental discriminant test.
pub fn is_fundamental(d: i64) -> bool {
    if d == 1 {
        return true;
    }
    if d == 0 {
        return false;
    }
    let squarefree = |n: u64| factor_u64(n).iter().all(|&(_, e)| e == 1);
    match d.rem_euclid(4) {
        1 => squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

/// A Dirichlet character with values in {-1, 0, 1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletChar {
    modulus: u64,
    values: Vec<i64>,
    label: String,
}

impl DirichletChar {
    /// The character of modulus 1.
    pub fn trivial() -> Self {
        DirichletChar {
            modulus: 1,
            values: vec![1],
            label: "1".into(),
        }
    }

    /// The primitive quadratic character `a -> (D/a)` of conductor `|D|`.
    pub fn quadratic(disc: i64) -> Result<Self> {
        if disc == 1 {
            return Ok(Self::trivial());
        }
        if !is_fundamental(disc) {
            return Err(Error::domain(format!("{disc} is not a fundamental discriminant")));
        }
        let n = disc.unsigned_abs();
        let values = (0..n).map(|a| kronecker(disc, a)).collect();
        Ok(DirichletChar {
            modulus: n,
            values,
            label: format!("chi_{disc}"),
        })
    }

    /// Builds a character from its value table on `0..N`; checks it is
    /// real, multiplicative and supported on units.
    pub fn from_table(values: Vec<i64>, label: &str) -> Result<Self> {
        let n = values.len() as u64;
        if n == 0 {
            return Err(Error::domain("empty character table"));
        }
        for a in 0..n {
            let unit = crate::exactnum::intfactor::gcd_i64(a as i64, n as i64) == 1;
            let v = values[a as usize];
            if unit != (v != 0) || v.abs() > 1 {
                return Err(Error::domain(format!("bad value {v} at {a} mod {n}")));
            }
            for b in 0..n {
                if values[((a * b) % n) as usize] != v * values[b as usize] {
                    return Err(Error::domain("table is not multiplicative"));
                }
            }
        }
        if n > 1 && values[1] != 1 {
            return Err(Error::domain("chi(1) must be 1"));
        }
        Ok(DirichletChar {
            modulus: n,
            values,
            label: label.into(),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_trivial(&self) -> bool {
        self.modulus == 1
    }

    pub fn value(&self, a: i64) -> i64 {
        self.values[a.rem_euclid(self.modulus as i64) as usize]
    }

    /// `chi(-1)`.
    pub fn parity(&self) -> i64 {
        self.value(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(-3, 2), -1);
        assert_eq!(kronecker(-3, 1), 1);
        assert_eq!(kronecker(-3, 3), 0);
        assert_eq!(kronecker(-4, 3), -1);
        assert_eq!(kronecker(5, 4), 1);
        assert_eq!(kronecker(-3, 7), 1);
    }

    #[test]
    fn fundamental_discriminants() {
        for d in [-3, -4, -7, -8, 5, 8, 12, -15, 1] {
            assert!(is_fundamental(d), "{d}");
        }
        for d in [-12, -16, 4, 9, -1, 2, 0] {
            assert!(!is_fundamental(d), "{d}");
        }
    }

    #[test]
    fn quadratic_character_parity() {
        assert_eq!(DirichletChar::quadratic(-3).unwrap().parity(), -1);
        assert_eq!(DirichletChar::quadratic(-4).unwrap().parity(), -1);
        assert_eq!(DirichletChar::quadratic(12).unwrap().parity(), 1);
        assert!(DirichletChar::quadratic(-12).is_err());
    }
}
