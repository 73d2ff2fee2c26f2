//! Number fields Q[x]/(g) and reduction at degree-one primes.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::factor::is_irreducible;
use super::field::{Field, PrimeField, Rationals};
use super::matrix::Matrix;
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Debug, PartialEq)]
struct Inner {
    modulus: Poly<Rationals>,
    generator: String,
}

/// The field Q[x]/(g) for an irreducible `g`, stored monic.
#[derive(Clone, Debug, PartialEq)]
pub struct NumberField(Arc<Inner>);

/// Element of a number field: coefficients on the power basis
/// `1, a, ..., a^(d-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NfElem(pub Vec<BigRational>);

/// Residue modulo an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    pub value: u64,
    pub modulus: u64,
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl NumberField {
    /// Builds Q[x]/(g). Fails unless `g` is irreducible over Q.
    pub fn new(g: &Poly<Rationals>) -> Result<Self> {
        match g.degree() {
            None | Some(0) => return Err(Error::domain("defining polynomial must have degree >= 1")),
            _ => {}
        }
        if !is_irreducible(g)? {
            return Err(Error::domain(format!("{g} is reducible over QQ")));
        }
        Ok(NumberField(Arc::new(Inner {
            modulus: g.monic(),
            generator: "a".into(),
        })))
    }

    /// The rationals viewed as the degree-one field Q[x]/(x).
    pub fn rationals() -> Self {
        NumberField(Arc::new(Inner {
            modulus: Poly::x(Rationals),
            generator: "a".into(),
        }))
    }

    pub fn degree(&self) -> usize {
        self.0.modulus.degree().unwrap()
    }

    pub fn modulus(&self) -> &Poly<Rationals> {
        &self.0.modulus
    }

    /// Class of `x`, i.e. a root of the defining polynomial.
    pub fn generator(&self) -> NfElem {
        if self.degree() == 1 {
            // x = -c0 in Q[x]/(x + c0)
            return NfElem(vec![-self.0.modulus.coeff(0)]);
        }
        let mut v = vec![BigRational::zero(); self.degree()];
        v[1] = BigRational::one();
        NfElem(v)
    }

    pub fn from_poly(&self, p: &Poly<Rationals>) -> NfElem {
        let r = p.rem(&self.0.modulus).expect("nonzero modulus");
        let mut v = r.into_coeffs();
        v.resize(self.degree(), BigRational::zero());
        NfElem(v)
    }

    pub fn to_poly(&self, a: &NfElem) -> Poly<Rationals> {
        Poly::new(Rationals, a.0.clone())
    }

    /// Matrix of multiplication by `a` on the power basis (columns are images
    /// of basis vectors).
    pub fn mult_matrix(&self, a: &NfElem) -> Matrix<Rationals> {
        let d = self.degree();
        let mut cols = Vec::with_capacity(d);
        let mut basis = Poly::one(Rationals);
        let x = Poly::x(Rationals);
        for _ in 0..d {
            let prod = self.mul(a, &self.from_poly(&basis));
            cols.push(prod.0);
            basis = basis.mul(&x);
        }
        Matrix::from_cols(Rationals, cols)
    }

    pub fn norm(&self, a: &NfElem) -> BigRational {
        self.mult_matrix(a).det().expect("square")
    }

    pub fn trace(&self, a: &NfElem) -> BigRational {
        let m = self.mult_matrix(a);
        (0..self.degree()).fold(BigRational::zero(), |acc, i| acc + m.get(i, i))
    }

    /// Characteristic polynomial of multiplication by `a`.
    pub fn charpoly_of(&self, a: &NfElem) -> Poly<Rationals> {
        self.mult_matrix(a).charpoly().expect("square")
    }

    /// Image of `a` under the reduction map to GF(p) that sends the
    /// generator to `root`.
    pub fn reduce_deg1(&self, a: &NfElem, p: u64, root: u64) -> Result<Residue> {
        let fp = PrimeField::new(p)?;
        let g = self
            .0
            .modulus
            .map(fp, |c| fp.from_rational(c).unwrap_or(u64::MAX));
        if g.coeffs().contains(&u64::MAX) {
            return Err(Error::domain(format!(
                "{p} divides a denominator of the defining polynomial"
            )));
        }
        if !fp.is_zero(&g.eval(&(root % p))) {
            return Err(Error::domain(format!(
                "{root} is not a root of the defining polynomial mod {p}"
            )));
        }
        let mut acc = 0u64;
        for c in a.0.iter().rev() {
            let c = fp.from_rational(c)?;
            acc = fp.add(&fp.mul(&acc, &(root % p)), &c);
        }
        Ok(Residue {
            value: acc,
            modulus: p,
        })
    }

    /// The element as a polynomial in the generator.
    pub fn describe(&self, a: &NfElem) -> String {
        let p = Poly::new(Rationals, a.0.clone());
        p.to_string().replace('x', &self.0.generator)
    }
}

impl Field for NumberField {
    type Elem = NfElem;

    fn zero(&self) -> NfElem {
        NfElem(vec![BigRational::zero(); self.degree()])
    }
    fn one(&self) -> NfElem {
        let mut v = vec![BigRational::zero(); self.degree()];
        v[0] = BigRational::one();
        NfElem(v)
    }
    fn is_zero(&self, a: &NfElem) -> bool {
        a.0.iter().all(|c| c.is_zero())
    }
    fn add(&self, a: &NfElem, b: &NfElem) -> NfElem {
        NfElem(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }
    fn sub(&self, a: &NfElem, b: &NfElem) -> NfElem {
        NfElem(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }
    fn neg(&self, a: &NfElem) -> NfElem {
        NfElem(a.0.iter().map(|x| -x).collect())
    }
    fn mul(&self, a: &NfElem, b: &NfElem) -> NfElem {
        let d = self.degree();
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        // reduce using x^d = -sum g_i x^i (modulus is monic)
        let g = self.0.modulus.coeffs();
        for top in (d..2 * d - 1).rev() {
            let c = std::mem::replace(&mut prod[top], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for (i, gi) in g.iter().enumerate().take(d) {
                prod[top - d + i] -= &c * gi;
            }
        }
        prod.truncate(d);
        NfElem(prod)
    }
    fn inv(&self, a: &NfElem) -> Option<NfElem> {
        if self.is_zero(a) {
            return None;
        }
        let (g, s, _) = self.to_poly(a).ext_gcd(&self.0.modulus);
        debug_assert_eq!(g.degree(), Some(0));
        Some(self.from_poly(&s))
    }
    fn from_integer(&self, n: &BigInt) -> NfElem {
        let mut v = vec![BigRational::zero(); self.degree()];
        v[0] = BigRational::from_integer(n.clone());
        NfElem(v)
    }
    fn from_rational(&self, q: &BigRational) -> Result<NfElem> {
        let mut v = vec![BigRational::zero(); self.degree()];
        v[0] = q.clone();
        Ok(NfElem(v))
    }
    fn format_elem(&self, a: &NfElem) -> String {
        self.describe(a)
    }
    fn tag(&self) -> String {
        format!("QQ[a]/({})", self.0.modulus.to_string().replace('x', "a"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::field::qi;

    fn gaussian() -> NumberField {
        NumberField::new(&Poly::from_ints(&[1, 0, 1])).unwrap()
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(NumberField::new(&Poly::from_ints(&[-1, 0, 1])).is_err());
    }

    #[test]
    fn arithmetic_in_gaussian_field() {
        let k = gaussian();
        let i = k.generator();
        assert_eq!(k.mul(&i, &i), k.from_i64(-1));
        let a = NfElem(vec![qi(3), qi(4)]);
        assert_eq!(k.norm(&a), qi(25));
        let inv = k.inv(&a).unwrap();
        assert_eq!(k.mul(&a, &inv), k.one());
    }

    #[test]
    fn reduction_at_degree_one_prime() {
        let k = gaussian();
        let a = k.generator();
        assert_eq!(k.reduce_deg1(&a, 5, 2).unwrap().value, 2);
        assert_eq!(k.reduce_deg1(&k.from_i64(7), 5, 2).unwrap().value, 2);
        let sq = k.mul(&a, &a);
        assert_eq!(k.reduce_deg1(&sq, 5, 3).unwrap().value, 4);
        assert!(matches!(k.reduce_deg1(&a, 5, 1), Err(Error::Domain(_))));
        let bad = NfElem(vec![crate::exactnum::field::q(1, 5), qi(0)]);
        assert!(matches!(k.reduce_deg1(&bad, 5, 2), Err(Error::Domain(_))));
    }
}
