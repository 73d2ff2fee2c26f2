//! Cusp forms on SL_2(Z): Miller bases, Hecke matrices, newforms.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{factor_over_q, Field, Matrix, NfElem, NumberField, Poly, Rationals};
use crate::interchange::{self, Cache};
use crate::qexp::{delta, eisenstein, QExpansion};

/// `dim S_w(SL_2(Z))`; zero for odd or negative weight.
pub fn dim_cusp(w: i64) -> usize {
    if w < 12 || w % 2 != 0 {
        return 0;
    }
    let d = (w / 12) as usize;
    if w % 12 == 2 {
        d - 1
    } else {
        d
    }
}

/// `dim M_w(SL_2(Z))`.
pub fn dim_modular(w: i64) -> usize {
    match w {
        0 => 1,
        w if w < 4 || w % 2 != 0 => 0,
        w => dim_cusp(w) + 1,
    }
}

/// `E_4^a E_6^b` with `4a + 6b = w`, `b` minimal; `None` if no such pair.
pub fn e4e6_monomial(w: i64, prec: usize) -> Result<Option<QExpansion<Rationals>>> {
    if w < 0 || w % 2 != 0 || w == 2 {
        return Ok(None);
    }
    let b = if w % 4 == 0 { 0 } else { 1 };
    let a = (w - 6 * b) / 4;
    let mut f = QExpansion::new(Rationals, 0, {
        let mut v = vec![BigRational::zero(); prec];
        if prec > 0 {
            v[0] = BigRational::one();
        }
        v
    });
    if a > 0 {
        f = f.mul(&eisenstein(4, prec)?.pow(a as u32));
    }
    if b > 0 {
        f = f.mul(&eisenstein(6, prec)?);
    }
    Ok(Some(f))
}

/// Echelon basis `b_1, ..., b_d` of `S_w` with `a(b_i)(j) = delta_ij` for
/// `1 <= i, j <= d`.
#[derive(Clone, Debug, PartialEq)]
pub struct MillerBasis {
    pub weight: i64,
    pub precision: usize,
    pub rows: Vec<QExpansion<Rationals>>,
}

impl MillerBasis {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

pub fn miller_basis(w: i64, prec: usize) -> Result<MillerBasis> {
    let d = dim_cusp(w);
    if d > 0 && prec <= d {
        return Err(Error::precision(format!("Miller basis of weight {w}"), d + 1, prec));
    }
    let del = delta(prec)?;
    let mut rows = Vec::with_capacity(d);
    let mut dpow = del.clone();
    for i in 1..=d as i64 {
        let rest = e4e6_monomial(w - 12 * i, prec)?
            .ok_or_else(|| Error::Internal(format!("no E4/E6 monomial of weight {}", w - 12 * i)))?;
        rows.push(dpow.mul(&rest));
        dpow = dpow.mul(&del);
    }
    // clear the entries above the diagonal
    for i in (0..d).rev() {
        for j in i + 1..d {
            let c = rows[i].coeffs()[j + 1].clone();
            if !c.is_zero() {
                rows[i] = rows[i].sub(&rows[j].scale(&c))?;
            }
        }
    }
    for (i, r) in rows.iter().enumerate() {
        for j in 1..=d {
            let want = if i + 1 == j { BigRational::one() } else { BigRational::zero() };
            if r.coeffs()[j] != want || !r.coeffs().iter().all(|c| c.is_integer()) {
                return Err(Error::Internal("Miller basis failed its echelon check".into()));
            }
        }
    }
    Ok(MillerBasis {
        weight: w,
        precision: prec,
        rows,
    })
}

/// Matrix of `T(l)` on the Miller basis, acting on rows:
/// `T(l) b_i = sum_j M[i][j] b_j`.
pub fn hecke_matrix(w: i64, ell: u64, prec: usize) -> Result<Matrix<Rationals>> {
    let d = dim_cusp(w);
    let need = ell as usize * (d + 1);
    if prec < need {
        return Err(Error::precision(format!("T({ell}) on S_{w}"), need, prec));
    }
    let basis = miller_basis(w, prec)?;
    hecke_matrix_on(&basis, ell)
}

/// `T(l)` on an already computed basis.
pub fn hecke_matrix_on(basis: &MillerBasis, ell: u64) -> Result<Matrix<Rationals>> {
    let d = basis.dim();
    let mut rows = Vec::with_capacity(d);
    for b in &basis.rows {
        let t = b.hecke_to(ell, d + 1)?;
        rows.push(t.coeffs()[1..=d].to_vec());
    }
    Ok(Matrix::from_rows(Rationals, rows))
}

/// Cached variant of [`hecke_matrix`], keyed by `(w, l, prec)`.
pub fn hecke_matrix_cached(w: i64, ell: u64, prec: usize, cache: &Cache) -> Result<Matrix<Rationals>> {
    let params = interchange::params([
        ("object", "hecke-matrix".into()),
        ("weight", w.to_string()),
        ("ell", ell.to_string()),
        ("prec", prec.to_string()),
    ]);
    if let Some(rec) = cache.get(&params) {
        if let Ok(m) = interchange::matrix_from_record(&rec) {
            return Ok(m);
        }
    }
    let m = hecke_matrix(w, ell, prec)?;
    cache.put(&interchange::matrix_to_record(&m, w, params))?;
    Ok(m)
}

/// Normalized eigenform for one Galois orbit of `S_w`.
#[derive(Clone, Debug, PartialEq)]
pub struct NewformData {
    pub weight: i64,
    /// Irreducible factor of the `T(2)` characteristic polynomial.
    pub charpoly: Poly<Rationals>,
    pub field: NumberField,
    /// Coordinates in the Miller basis.
    pub coords: Vec<NfElem>,
    pub expansion: QExpansion<NumberField>,
}

impl NewformData {
    /// `a(n)`; precision error beyond the stored range.
    pub fn coeff(&self, n: usize) -> Result<&NfElem> {
        self.expansion.coeff(n)
    }

    /// `a(2)`, which generates the eigenfield.
    pub fn a2(&self) -> &NfElem {
        &self.expansion.coeffs()[2]
    }
}

fn factor_strings(fs: &[(Poly<Rationals>, u32)]) -> Vec<String> {
    fs.iter()
        .map(|(f, e)| if *e == 1 { format!("({f})") } else { format!("({f})^{e}") })
        .collect()
}

/// The newform of weight `w`, assuming the `T(2)` characteristic polynomial
/// is irreducible; otherwise a multiple-class error naming the factors.
pub fn newform(w: i64, prec: usize) -> Result<NewformData> {
    let d = dim_cusp(w);
    if d == 0 {
        return Err(Error::domain(format!("S_{w} is zero")));
    }
    let prec = prec.max(2 * (d + 1)).max(3);
    let basis = miller_basis(w, prec)?;
    let t2 = hecke_matrix_on(&basis, 2)?;
    let cp = t2.charpoly()?;
    let fs = factor_over_q(&cp)?;
    if fs.len() != 1 || fs[0].1 != 1 {
        return Err(Error::MultipleClass {
            factors: factor_strings(&fs),
        });
    }
    newform_for_factor(&basis, &t2, &cp)
}

/// One normalized eigenform per irreducible factor of the `T(2)`
/// characteristic polynomial.
pub fn newforms(w: i64, prec: usize) -> Result<Vec<NewformData>> {
    let d = dim_cusp(w);
    if d == 0 {
        return Ok(Vec::new());
    }
    let prec = prec.max(2 * (d + 1)).max(3);
    let basis = miller_basis(w, prec)?;
    let t2 = hecke_matrix_on(&basis, 2)?;
    let cp = t2.charpoly()?;
    let mut out = Vec::new();
    for (f, e) in factor_over_q(&cp)? {
        if e != 1 {
            return Err(Error::MultipleClass {
                factors: factor_strings(&factor_over_q(&cp)?),
            });
        }
        out.push(newform_for_factor(&basis, &t2, &f)?);
    }
    Ok(out)
}

fn newform_for_factor(
    basis: &MillerBasis,
    t2: &Matrix<Rationals>,
    factor: &Poly<Rationals>,
) -> Result<NewformData> {
    let k = NumberField::new(factor)?;
    let alpha = k.generator();
    let d = basis.dim();
    // left eigenvector: c^T T2 = alpha c^T
    let m = t2
        .transpose()
        .map(k.clone(), |x| k.from_rational(x).expect("rationals embed"));
    let shifted = m.sub(&Matrix::identity(k.clone(), d).scale(&alpha));
    let ker = shifted.kernel();
    if ker.len() != 1 {
        return Err(Error::Internal(format!(
            "T(2) eigenspace has dimension {} over the eigenfield",
            ker.len()
        )));
    }
    let c0 = ker[0][0].clone();
    let inv = k
        .inv(&c0)
        .ok_or_else(|| Error::Internal("eigenvector has vanishing first coordinate".into()))?;
    let coords: Vec<NfElem> = ker[0].iter().map(|x| k.mul(x, &inv)).collect();
    let prec = basis.precision;
    let mut coeffs = vec![k.zero(); prec];
    for (c, b) in coords.iter().zip(&basis.rows) {
        for (n, bn) in b.coeffs().iter().enumerate() {
            if !bn.is_zero() {
                let term = k.mul(c, &k.from_rational(bn)?);
                coeffs[n] = k.add(&coeffs[n], &term);
            }
        }
    }
    let expansion = QExpansion::new(k.clone(), basis.weight, coeffs);
    if expansion.coeffs()[2] != alpha {
        return Err(Error::Internal("eigenform a(2) differs from the field generator".into()));
    }
    Ok(NewformData {
        weight: basis.weight,
        charpoly: factor.monic(),
        field: k,
        coords,
        expansion,
    })
}

/// `a(l)` read from the `T(l)` matrix against the `T(2)` eigenvector:
/// the first coordinate of `c^T T(l)`.
pub fn hecke_eigenvalue(f: &NewformData, ell: u64) -> Result<NfElem> {
    let d = f.coords.len();
    let basis = miller_basis(f.weight, ell as usize * (d + 1))?;
    let t = hecke_matrix_on(&basis, ell)?;
    let k = &f.field;
    let tk = t.map(k.clone(), |x| k.from_rational(x).expect("rationals embed"));
    let row = tk.vec_mul(&f.coords);
    // every coordinate must be lambda * c_i
    for (r, c) in row.iter().zip(&f.coords) {
        if *r != k.mul(&row[0], c) {
            return Err(Error::Internal(format!("T({ell}) does not preserve the eigenline")));
        }
    }
    Ok(row[0].clone())
}

/// `a(n)` as a rational when the eigenfield is Q.
pub fn rational_coeff(f: &NewformData, n: usize) -> Result<BigRational> {
    if f.field.degree() != 1 {
        return Err(Error::domain("eigenfield is not Q"));
    }
    Ok(f.coeff(n)?.0[0].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::field::qi;

    #[test]
    fn dimensions() {
        assert_eq!(dim_cusp(12), 1);
        assert_eq!(dim_cusp(2), 0);
        assert_eq!(dim_cusp(14), 0);
        assert_eq!(dim_cusp(26), 1);
        assert_eq!(dim_cusp(54), 4);
        assert_eq!(dim_cusp(13), 0);
        assert_eq!(dim_modular(0), 1);
        assert_eq!(dim_modular(2), 0);
        assert_eq!(dim_modular(16), 2);
    }

    #[test]
    fn weight_12_data() {
        let b = miller_basis(12, 10).unwrap();
        assert_eq!(b.rows[0], delta(10).unwrap());
        assert_eq!(hecke_matrix(12, 2, 4).unwrap().get(0, 0), &qi(-24));
        assert_eq!(hecke_matrix(12, 3, 6).unwrap().get(0, 0), &qi(252));
        assert!(matches!(hecke_matrix(12, 3, 5), Err(Error::Precision { .. })));
        let f = newform(12, 10).unwrap();
        assert_eq!(rational_coeff(&f, 2).unwrap(), qi(-24));
        assert_eq!(rational_coeff(&f, 1).unwrap(), qi(1));
    }

    #[test]
    fn weight_54_basis_is_echelon() {
        let b = miller_basis(54, 12).unwrap();
        assert_eq!(b.dim(), 4);
        assert_eq!(b.rows[0].coeffs()[1], qi(1));
        assert_eq!(b.rows[0].coeffs()[2], qi(0));
    }

    #[test]
    fn weight_24_eigenvalues() {
        let f = newform(24, 30).unwrap();
        assert_eq!(f.field.degree(), 2);
        let k = &f.field;
        let a3 = hecke_eigenvalue(&f, 3).unwrap();
        assert_eq!(&a3, f.coeff(3).unwrap());
        // a(4) = a(2)^2 - 2^23
        let a2 = f.a2();
        let want = k.sub(&k.mul(a2, a2), &k.from_i64(1 << 23));
        assert_eq!(f.coeff(4).unwrap(), &want);
    }
}
