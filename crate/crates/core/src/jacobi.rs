//! Index-one Jacobi forms through their discriminant coefficients, and the
//! Eichler-Zagier map to Kohnen's plus space.
//!
//! A form of index 1 and even weight is determined by `c(D)` for
//! `D = r^2 - 4n <= 0`; we store `c` at `N = |D|`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::intfactor::{divisors_u64, factor_u64, mobius};
use crate::exactnum::Rationals;
use crate::level1::dim_cusp;
use crate::lfun::bernoulli::bernoulli;
use crate::lfun::{dirichlet_l_neg, kronecker, DirichletChar};
use crate::qexp::{delta, QExpansion};

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiForm1 {
    pub weight: i64,
    /// `c(N)` for `0 <= N <= D_max`, zero unless `N = 0, 3 (mod 4)`.
    pub coeffs: Vec<BigRational>,
}

impl JacobiForm1 {
    pub fn zero(weight: i64, dmax: usize) -> Self {
        JacobiForm1 {
            weight,
            coeffs: vec![BigRational::zero(); dmax + 1],
        }
    }

    pub fn dmax(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `c(D)` for a discriminant `D <= 0`.
    pub fn c(&self, disc: i64) -> Result<BigRational> {
        if disc > 0 {
            return Ok(BigRational::zero());
        }
        let n = disc.unsigned_abs() as usize;
        self.coeffs
            .get(n)
            .cloned()
            .ok_or_else(|| Error::precision(format!("c({disc})"), n + 1, self.coeffs.len()))
    }

    /// `c(n, r)` read through `D = r^2 - 4n`.
    pub fn c_nr(&self, n: i64, r: i64) -> Result<BigRational> {
        self.c(r * r - 4 * n)
    }

    pub fn truncate(&self, dmax: usize) -> Result<Self> {
        if dmax > self.dmax() {
            return Err(Error::precision("Jacobi truncation", dmax + 1, self.coeffs.len()));
        }
        Ok(JacobiForm1 {
            weight: self.weight,
            coeffs: self.coeffs[..=dmax].to_vec(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.weight != other.weight {
            return Err(Error::domain("Jacobi forms of different weight"));
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(JacobiForm1 {
            weight: self.weight,
            coeffs,
        })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        JacobiForm1 {
            weight: self.weight,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Product with an elliptic modular form `h`:
    /// `c'(N) = sum_{4m <= N} a_h(m) c(N - 4m)`.
    pub fn mul_elliptic(&self, h: &QExpansion<Rationals>) -> Result<Self> {
        let dmax = self.dmax();
        let need = dmax / 4 + 1;
        if h.precision() < need {
            return Err(Error::precision("elliptic factor", need, h.precision()));
        }
        // spread c onto a q^(1/4) grid and multiply as series in q^(1/4)
        let mut hs = vec![BigRational::zero(); dmax + 1];
        for m in 0..need {
            hs[4 * m] = h.coeffs()[m].clone();
        }
        let coeffs = crate::ntt::mul_rational_series(&hs, &self.coeffs, dmax + 1);
        Ok(JacobiForm1 {
            weight: self.weight + h.weight(),
            coeffs,
        })
    }
}

/// Discriminant-indexed Dirichlet values `L(1 - r, chi_{D0})`, memoized.
struct CohenCache {
    r: usize,
    values: HashMap<i64, BigRational>,
}

impl CohenCache {
    fn l_value(&mut self, d0: i64) -> BigRational {
        let r = self.r;
        self.values
            .entry(d0)
            .or_insert_with(|| {
                let chi = DirichletChar::quadratic(d0).expect("fundamental discriminant");
                dirichlet_l_neg(r, &chi).expect("r >= 1")
            })
            .clone()
    }
}

/// Splits `-N = D0 f^2` with `D0` a negative fundamental discriminant.
fn fundamental_split(n: u64) -> (i64, u64) {
    let mut f = 1u64;
    let mut core = 1u64;
    for (q, e) in factor_u64(n) {
        f *= q.pow(e / 2);
        if e % 2 == 1 {
            core *= q;
        }
    }
    // -core is 1 mod 4 or we need the factor 4 back
    if (core as i64).wrapping_neg().rem_euclid(4) == 1 {
        (-(core as i64), f)
    } else {
        (-4 * core as i64, f / 2)
    }
}

fn sigma(n: u64, k: u32) -> BigInt {
    divisors_u64(n).into_iter().map(|d| BigInt::from(d).pow(k)).sum()
}

/// Cohen's number `H(r, N)` for odd `r >= 1` and `N = 0, 3 (mod 4)`.
pub fn cohen_h(r: usize, n: u64) -> BigRational {
    let mut cache = CohenCache {
        r,
        values: HashMap::new(),
    };
    cohen_h_cached(&mut cache, n)
}

fn cohen_h_cached(cache: &mut CohenCache, n: u64) -> BigRational {
    let r = cache.r;
    if n == 0 {
        // zeta(1 - 2r) = -B_{2r}/(2r)
        return -bernoulli(2 * r) / BigRational::from_integer(BigInt::from(2 * r));
    }
    if n % 4 == 1 || n % 4 == 2 {
        return BigRational::zero();
    }
    let (d0, f) = fundamental_split(n);
    let mut s = BigInt::zero();
    for d in divisors_u64(f) {
        let mu = mobius(d);
        let chi = kronecker(d0, d);
        if mu == 0 || chi == 0 {
            continue;
        }
        s += BigInt::from(mu * chi)
            * BigInt::from(d).pow((r - 1) as u32)
            * sigma(f / d, (2 * r - 1) as u32);
    }
    cache.l_value(d0) * BigRational::from_integer(s)
}

/// The index-1 Jacobi Eisenstein series `E_{k,1}` (k even, k >= 4):
/// `c(N) = H(k-1, N) / zeta(3 - 2k)`.
pub fn eisenstein_jacobi(k: i64, dmax: usize) -> Result<JacobiForm1> {
    if k < 4 || k % 2 != 0 {
        return Err(Error::domain(format!("E_{{{k},1}} needs even k >= 4")));
    }
    let r = (k - 1) as usize;
    let mut cache = CohenCache {
        r,
        values: HashMap::new(),
    };
    let zeta = -bernoulli(2 * r) / BigRational::from_integer(BigInt::from(2 * r));
    let coeffs = (0..=dmax as u64)
        .map(|n| cohen_h_cached(&mut cache, n) / &zeta)
        .collect();
    Ok(JacobiForm1 { weight: k, coeffs })
}

/// The cusp forms `phi_10` and `phi_12`, each scaled to `c(-3) = 1`.
pub fn jacobi_generators(dmax: usize) -> Result<(JacobiForm1, JacobiForm1)> {
    if dmax < 4 {
        return Err(Error::precision("Jacobi generators", 5, dmax + 1));
    }
    let prec = dmax / 4 + 1;
    let e4 = crate::qexp::eisenstein(4, prec)?;
    let e6 = crate::qexp::eisenstein(6, prec)?;
    let e41 = eisenstein_jacobi(4, dmax)?;
    let e61 = eisenstein_jacobi(6, dmax)?;
    let neg = |f: &JacobiForm1| f.scale(&-BigRational::one());
    let phi10 = e41.mul_elliptic(&e6)?.add(&neg(&e61.mul_elliptic(&e4)?))?;
    let phi12 = e41
        .mul_elliptic(&e4.mul(&e4))?
        .add(&neg(&e61.mul_elliptic(&e6)?))?;
    let normalize = |f: JacobiForm1| -> Result<JacobiForm1> {
        let c3 = f.c(-3)?;
        if c3.is_zero() || !f.coeffs[0].is_zero() {
            return Err(Error::Internal("Jacobi generator is not a cusp form".into()));
        }
        let g = f.scale(&(BigRational::one() / c3));
        if !g.coeffs.iter().all(|c| c.is_integer()) {
            return Err(Error::Internal("Jacobi generator is not integral".into()));
        }
        Ok(g)
    };
    Ok((normalize(phi10)?, normalize(phi12)?))
}

/// Basis of `J^cusp_{k,1}` together with an explanatory note.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiBasis {
    pub weight: i64,
    pub forms: Vec<JacobiForm1>,
    pub note: Option<String>,
}

/// Monomial basis `Delta^i E_4^a E_6^b` of `M_w`.
pub fn modular_basis(w: i64, prec: usize) -> Result<Vec<QExpansion<Rationals>>> {
    let mut out = Vec::new();
    if w < 0 || w % 2 != 0 || w == 2 {
        return Ok(out);
    }
    let del = delta(prec.max(1))?;
    let d = crate::level1::dim_modular(w);
    let mut dpow = crate::level1::e4e6_monomial(0, prec)?.expect("weight 0");
    for i in 0..d as i64 {
        let rest = crate::level1::e4e6_monomial(w - 12 * i, prec)?
            .ok_or_else(|| Error::Internal(format!("no monomial of weight {}", w - 12 * i)))?;
        out.push(dpow.mul(&rest));
        dpow = dpow.mul(&del);
    }
    Ok(out)
}

/// `M_{k-10} phi_10 + M_{k-12} phi_12`.
pub fn jacobi_cusp_basis(k: i64, dmax: usize) -> Result<JacobiBasis> {
    if k % 2 != 0 {
        return Ok(JacobiBasis {
            weight: k,
            forms: Vec::new(),
            note: Some("odd-weight vanishing: index-1 Jacobi forms of odd weight are zero".into()),
        });
    }
    if k < 10 {
        return Ok(JacobiBasis {
            weight: k,
            forms: Vec::new(),
            note: Some(format!("J^cusp_{{{k},1}} = 0 below weight 10")),
        });
    }
    let (phi10, phi12) = jacobi_generators(dmax.max(4))?;
    let prec = dmax / 4 + 1;
    let mut forms = Vec::new();
    for h in modular_basis(k - 10, prec)? {
        forms.push(phi10.mul_elliptic(&h)?.truncate(dmax)?);
    }
    for h in modular_basis(k - 12, prec)? {
        forms.push(phi12.mul_elliptic(&h)?.truncate(dmax)?);
    }
    Ok(JacobiBasis {
        weight: k,
        forms,
        note: None,
    })
}

/// Expected dimension `dim S_{2k-2}` of `J^cusp_{k,1}` for even `k`.
pub fn jacobi_cusp_dim(k: i64) -> usize {
    if k % 2 != 0 {
        0
    } else {
        dim_cusp(2 * k - 2)
    }
}

/// Half-integral weight `k - 1/2` form in Kohnen's plus space.
#[derive(Clone, Debug, PartialEq)]
pub struct KohnenForm {
    /// The integer `k`; the weight is `k - 1/2`.
    pub k: i64,
    /// `a(n)` for `0 <= n < precision`.
    pub coeffs: Vec<BigRational>,
}

impl KohnenForm {
    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn a(&self, n: usize) -> Result<&BigRational> {
        self.coeffs
            .get(n)
            .ok_or_else(|| Error::precision(format!("a_g({n})"), n + 1, self.coeffs.len()))
    }
}

/// `a_g(|D|) = c(D)`.
pub fn ez_to_kohnen(phi: &JacobiForm1) -> KohnenForm {
    KohnenForm {
        k: phi.weight,
        coeffs: phi.coeffs.clone(),
    }
}

/// Kohnen's `T(l^2)` on the plus space of weight `k - 1/2`:
/// `a'(n) = a(l^2 n) + ((-1)^(k-1) n / l) l^(k-2) a(n) + l^(2k-3) a(n / l^2)`.
pub fn kohnen_hecke(g: &KohnenForm, ell: u64) -> Result<KohnenForm> {
    let l2 = (ell * ell) as usize;
    if g.precision() == 0 {
        return Err(Error::precision("T(l^2) input", 1, 0));
    }
    let out = (g.precision() - 1) / l2 + 1;
    let sign: i64 = if (g.k - 1) % 2 == 0 { 1 } else { -1 };
    let l = BigInt::from(ell);
    let mid = BigRational::from_integer(l.pow((g.k - 2) as u32));
    let top = BigRational::from_integer(l.pow((2 * g.k - 3) as u32));
    let mut coeffs = Vec::with_capacity(out);
    for n in 0..out {
        let mut v = g.a(l2 * n)?.clone();
        let chi = kronecker(sign * n as i64, ell);
        if chi != 0 {
            v += &mid * BigRational::from_integer(chi.into()) * g.a(n)?;
        }
        if n % l2 == 0 {
            v += &top * g.a(n / l2)?;
        }
        coeffs.push(v);
    }
    Ok(KohnenForm { k: g.k, coeffs })
}

/// Indices `n` with `a(n) != 0` although `(-1)^(k-1) n = 2, 3 (mod 4)`.
pub fn plus_space_check(g: &KohnenForm) -> Vec<usize> {
    let sign: i64 = if g.k % 2 == 0 { -1 } else { 1 };
    g.coeffs
        .iter()
        .enumerate()
        .filter(|(n, a)| {
            let cls = (sign * *n as i64).rem_euclid(4);
            (cls == 2 || cls == 3) && !a.is_zero()
        })
        .map(|(n, _)| n)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::field::{q, qi};

    #[test]
    fn cohen_numbers() {
        assert_eq!(cohen_h(3, 3), q(-2, 9));
        assert_eq!(cohen_h(3, 4), q(-1, 2));
        assert_eq!(cohen_h(3, 0), q(-1, 252));
        assert_eq!(cohen_h(1, 0), q(-1, 12));
        assert_eq!(cohen_h(1, 3), q(1, 3));
        assert_eq!(cohen_h(1, 4), q(1, 2));
        // class number 2 of discriminant -15
        assert_eq!(cohen_h(1, 15), qi(2));
        assert!(cohen_h(3, 5).is_zero());
    }

    #[test]
    fn eisenstein_jacobi_weight_4() {
        let e = eisenstein_jacobi(4, 12).unwrap();
        assert_eq!(e.c(0).unwrap(), qi(1));
        assert_eq!(e.c(-3).unwrap(), qi(56));
        assert_eq!(e.c(-4).unwrap(), qi(126));
        assert_eq!(e.c(-7).unwrap(), qi(576));
        assert_eq!(e.c(-8).unwrap(), qi(756));
    }

    #[test]
    fn generators() {
        let (p10, p12) = jacobi_generators(40).unwrap();
        assert_eq!(p10.c(-3).unwrap(), qi(1));
        assert_eq!(p10.c(-4).unwrap(), qi(-2));
        assert_eq!(p12.c(-3).unwrap(), qi(1));
        assert_eq!(p12.c(-4).unwrap(), qi(10));
        assert!(plus_space_check(&ez_to_kohnen(&p10)).is_empty());
    }

    #[test]
    fn basis_dimensions() {
        assert_eq!(jacobi_cusp_basis(10, 20).unwrap().forms.len(), 1);
        let odd = jacobi_cusp_basis(11, 20).unwrap();
        assert!(odd.forms.is_empty() && odd.note.is_some());
        assert_eq!(jacobi_cusp_basis(28, 40).unwrap().forms.len(), 4);
    }

    #[test]
    fn plus_space_violation() {
        let mut g = KohnenForm {
            k: 10,
            coeffs: vec![qi(0); 8],
        };
        assert!(plus_space_check(&g).is_empty());
        g.coeffs[2] = qi(1);
        assert_eq!(plus_space_check(&g), vec![2]);
    }
}
