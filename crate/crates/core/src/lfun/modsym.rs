//! Level-one modular symbols of weight `w` via Manin symbols `[P] = P{0, oo}`,
//! `P` homogeneous of degree `w - 2` in `X, Y`.
//!
//! Polynomials are stored by the exponent of `X`: index `i` is `X^i Y^(n-i)`.
//! Matrices act on the right, `(P|g)(X, Y) = P(aX + bY, cX + dY)`, so that
//! `P{g a, g b} = (P|g){a, b}`.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactnum::intmat::rational_lattice_basis;
use crate::exactnum::{Matrix, NfElem, NumberField, Poly, Rationals};
use crate::level1::{dim_cusp, NewformData};
use crate::lfun::DirichletChar;
use crate::{Error, Result};

pub type Mat2 = [[i64; 2]; 2];

fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for k in 1..=n {
        let prev = &rows[k - 1];
        let mut row = vec![BigInt::one(); k + 1];
        for j in 1..k {
            row[j] = &prev[j - 1] + &prev[j];
        }
        rows.push(row);
    }
    rows
}

/// Coefficients (by power of `X`) of `(uX + vY)^e`.
fn linear_power(u: &BigInt, v: &BigInt, e: usize, binom: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(e + 1);
    let mut up = vec![BigInt::one(); e + 1];
    let mut vp = vec![BigInt::one(); e + 1];
    for k in 1..=e {
        up[k] = &up[k - 1] * u;
        vp[k] = &vp[k - 1] * v;
    }
    for i in 0..=e {
        out.push(&binom[e][i] * &up[i] * &vp[e - i]);
    }
    out
}

fn poly_mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Homogeneous polynomial of degree `n` in the right action, integral.
fn act_int(p: &[BigInt], g: &Mat2, binom: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = p.len() - 1;
    let (a, b, c, d) = (
        BigInt::from(g[0][0]),
        BigInt::from(g[0][1]),
        BigInt::from(g[1][0]),
        BigInt::from(g[1][1]),
    );
    let mut out = vec![BigInt::zero(); n + 1];
    for (i, coef) in p.iter().enumerate() {
        if coef.is_zero() {
            continue;
        }
        let term = poly_mul_int(&linear_power(&a, &b, i, binom), &linear_power(&c, &d, n - i, binom));
        for (o, t) in out.iter_mut().zip(term) {
            *o += coef * t;
        }
    }
    out
}

/// Merel's set `X_n`: `a > b >= 0`, `d > c >= 0`, `ad - bc = n`.
pub fn heilbronn_merel(n: u64) -> Vec<Mat2> {
    let n = n as i64;
    let mut out = Vec::new();
    for a in 1..=n {
        for d in 1..=n {
            let ad = a * d;
            if ad < n {
                continue;
            }
            // bc = ad - n with 0 <= b < a, 0 <= c < d
            let bc = ad - n;
            if bc == 0 {
                if ad == n {
                    out.push([[a, 0], [0, d]]);
                    for c in 1..d {
                        out.push([[a, 0], [c, d]]);
                    }
                    for b in 1..a {
                        out.push([[a, b], [0, d]]);
                    }
                }
                continue;
            }
            for b in 1..a {
                if bc % b == 0 {
                    let c = bc / b;
                    if c < d {
                        out.push([[a, b], [c, d]]);
                    }
                }
            }
        }
    }
    out
}

/// Convergents `p_k/q_k` of `a/b` for `k = -2, ..., m`.
fn convergents(a: i64, b: i64) -> Vec<(i64, i64)> {
    let mut out = vec![(0, 1), (1, 0)];
    let (mut x, mut y) = (a, b);
    while y != 0 {
        let q = x.div_euclid(y);
        let (p1, q1) = out[out.len() - 1];
        let (p2, q2) = out[out.len() - 2];
        out.push((q * p1 + p2, q * q1 + q2));
        (x, y) = (y, x - q * y);
    }
    out
}

/// Matrices `g` with `{0, a/b} = sum g{0, oo}`.
pub fn path_to(a: i64, b: i64) -> Vec<Mat2> {
    let cv = convergents(a, b);
    let mut out = Vec::new();
    for idx in 1..cv.len() {
        // k = idx - 2 runs from -1
        let k = idx as i64 - 2;
        let (pk, qk) = cv[idx];
        let (pp, qp) = cv[idx - 1];
        let s = if (k - 1).rem_euclid(2) == 0 { 1 } else { -1 };
        out.push([[s * pk, pp], [s * qk, qp]]);
    }
    out
}

/// The space of weight-`w` level-one modular symbols with rational
/// coefficients, presented as Manin symbols modulo the S and U relations.
#[derive(Debug)]
pub struct SymbolSpace {
    weight: i64,
    n: usize,
    binom: Vec<Vec<BigInt>>,
    /// Monomials whose classes form the basis.
    free: Vec<usize>,
    /// Column `i` holds the class of `X^i Y^(n-i)`.
    proj: Matrix<Rationals>,
    star: Matrix<Rationals>,
    boundary: Vec<BigRational>,
    hecke_cache: Mutex<HashMap<u64, Matrix<Rationals>>>,
}

const S: Mat2 = [[0, -1], [1, 0]];
const U: Mat2 = [[1, -1], [1, 0]];
const U2: Mat2 = [[0, -1], [1, -1]];

impl SymbolSpace {
    pub fn new(w: i64) -> Result<Self> {
        let n = (w - 2).max(0) as usize;
        Self::with_order(w, &(0..=n).collect::<Vec<_>>())
    }

    /// Same space, with the Manin generators eliminated in the given order;
    /// different orders give different bases of the same space.
    pub fn with_order(w: i64, order: &[usize]) -> Result<Self> {
        if w < 4 || w % 2 != 0 {
            return Err(Error::domain(format!("weight {w} must be even and at least 4")));
        }
        let n = (w - 2) as usize;
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        if sorted != (0..=n).collect::<Vec<_>>() {
            return Err(Error::domain("order must be a permutation of the Manin generators"));
        }
        let binom = binomials(n);
        let unit = |i: usize| {
            let mut v = vec![BigInt::zero(); n + 1];
            v[i] = BigInt::one();
            v
        };
        let mut rels = Vec::new();
        for i in 0..=n {
            let e = unit(i);
            let s = act_int(&e, &S, &binom);
            rels.push(e.iter().zip(&s).map(|(x, y)| x + y).collect::<Vec<_>>());
            let u = act_int(&e, &U, &binom);
            let u2 = act_int(&e, &U2, &binom);
            rels.push(e.iter().zip(&u).zip(&u2).map(|((x, y), z)| x + y + z).collect());
        }
        // columns permuted so that `order` decides which generators become pivots
        let rows: Vec<Vec<BigRational>> = rels
            .iter()
            .map(|r| order.iter().map(|&i| BigRational::from_integer(r[i].clone())).collect())
            .collect();
        let (rr, pivots) = Matrix::from_rows(Rationals, rows).rref();
        let free_pos: Vec<usize> = (0..=n).filter(|c| !pivots.contains(c)).collect();
        let free: Vec<usize> = free_pos.iter().map(|&c| order[c]).collect();
        let dim = free.len();
        let mut proj = Matrix::zero(Rationals, dim, n + 1);
        for (k, &c) in free_pos.iter().enumerate() {
            proj.set(k, order[c], BigRational::one());
        }
        for (row, &pc) in pivots.iter().enumerate() {
            for (k, &fc) in free_pos.iter().enumerate() {
                proj.set(k, order[pc], -rr.get(row, fc).clone());
            }
        }
        let mut space = SymbolSpace {
            weight: w,
            n,
            binom,
            free,
            proj,
            star: Matrix::zero(Rationals, 0, 0),
            boundary: Vec::new(),
            hecke_cache: Mutex::new(HashMap::new()),
        };
        let star_cols = (0..dim)
            .map(|k| {
                let i = space.free[k];
                let sign = if i.is_multiple_of(2) { 1 } else { -1 };
                let mut p = vec![BigInt::zero(); n + 1];
                p[i] = BigInt::from(sign);
                space.class_of_int(&p)
            })
            .collect();
        space.star = Matrix::from_cols(Rationals, star_cols);
        // delta[P] = P(1,0) - P(0,1)
        space.boundary = space
            .free
            .iter()
            .map(|&i| {
                let v = i64::from(i == n) - i64::from(i == 0);
                BigRational::from_integer(v.into())
            })
            .collect();
        Ok(space)
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    /// Dimension of the full space (cuspidal plus one boundary dimension).
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Monomials `X^i Y^(n-i)` whose classes are the basis.
    pub fn basis_monomials(&self) -> &[usize] {
        &self.free
    }

    /// Class of the Manin symbol of an integral polynomial.
    pub fn class_of_int(&self, p: &[BigInt]) -> Vec<BigRational> {
        let v: Vec<BigRational> = p.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        self.proj.mul_vec(&v)
    }

    /// Class of `X^i Y^(n-i)`.
    pub fn monomial_class(&self, i: usize) -> Vec<BigRational> {
        self.proj.col(i)
    }

    /// Class of `P{0, a/b}`.
    pub fn symbol_to_cusp(&self, p: &[BigInt], a: i64, b: i64) -> Vec<BigRational> {
        let mut acc = vec![BigInt::zero(); self.n + 1];
        for g in path_to(a, b) {
            for (x, y) in acc.iter_mut().zip(act_int(p, &g, &self.binom)) {
                *x += y;
            }
        }
        self.class_of_int(&acc)
    }

    /// Star involution `[P(X, Y)] -> [P(-X, Y)]`.
    pub fn star(&self) -> &Matrix<Rationals> {
        &self.star
    }

    /// Boundary map, a functional on class coordinates.
    pub fn boundary(&self) -> &[BigRational] {
        &self.boundary
    }

    /// Basis of the cuspidal subspace (kernel of the boundary map).
    pub fn cuspidal_basis(&self) -> Vec<Vec<BigRational>> {
        Matrix::from_rows(Rationals, vec![self.boundary.clone()]).kernel()
    }

    /// Dimensions of the `+1` and `-1` star eigenspaces on cuspidal symbols.
    pub fn cuspidal_sign_dims(&self) -> (usize, usize) {
        let cusp = self.cuspidal_basis();
        if cusp.is_empty() {
            return (0, 0);
        }
        let dim = |sign: i64| {
            let s = self.star.sub(&Matrix::identity(Rationals, self.dim()).scale(&BigRational::from_integer(sign.into())));
            let b = Matrix::from_cols(Rationals, cusp.clone());
            let img = s.mul(&b);
            cusp.len() - img.rank()
        };
        (dim(1), dim(-1))
    }

    /// Hecke operator `T(l)` on class coordinates (acting on columns).
    pub fn hecke(&self, ell: u64) -> Matrix<Rationals> {
        if let Some(m) = self.hecke_cache.lock().unwrap().get(&ell) {
            return m.clone();
        }
        let mats = heilbronn_merel(ell);
        let cols = self
            .free
            .iter()
            .map(|&i| {
                let mut e = vec![BigInt::zero(); self.n + 1];
                e[i] = BigInt::one();
                let mut acc = vec![BigInt::zero(); self.n + 1];
                for h in &mats {
                    for (x, y) in acc.iter_mut().zip(act_int(&e, h, &self.binom)) {
                        *x += y;
                    }
                }
                self.class_of_int(&acc)
            })
            .collect();
        let m = Matrix::from_cols(Rationals, cols);
        self.hecke_cache.lock().unwrap().insert(ell, m.clone());
        m
    }

    /// Characteristic polynomial of `T(l)` on the `sign` part of cuspidal
    /// symbols.
    pub fn cuspidal_charpoly(&self, ell: u64, sign: i64) -> Result<Poly<Rationals>> {
        let id = Matrix::identity(Rationals, self.dim());
        let s = self.star.sub(&id.scale(&BigRational::from_integer(sign.into())));
        let mut rows = vec![self.boundary.clone()];
        rows.extend(s.to_rows());
        // symbols killed by boundary and by (star - sign)
        let basis = Matrix::from_rows(Rationals, rows).kernel();
        if basis.is_empty() {
            return Ok(Poly::one(Rationals));
        }
        let b = Matrix::from_cols(Rationals, basis);
        self.hecke(ell).restrict(&b)?.charpoly()
    }

    /// Winding element for `L(f, chi, j)`:
    /// `sum_a chi(a) (NX - aY)^(j-1) Y^(w-1-j) {a/N, oo}`.
    pub fn winding(&self, j: i64, chi: &DirichletChar) -> Result<Vec<BigRational>> {
        let w = self.weight;
        if j < 1 || j > w - 1 {
            return Err(Error::domain(format!("j = {j} is outside the critical strip 1..{}", w - 1)));
        }
        let n_mod = chi.modulus() as i64;
        let e = (j - 1) as usize;
        let mut acc = vec![BigRational::zero(); self.dim()];
        for a in 1..=n_mod {
            let c = chi.value(a);
            if c == 0 {
                continue;
            }
            let lin = linear_power(&BigInt::from(n_mod), &BigInt::from(-a), e, &self.binom);
            let mut p = vec![BigInt::zero(); self.n + 1];
            p[..=e].clone_from_slice(&lin);
            // {a/N, oo} = {0, oo} - {0, a/N}
            let here = self.class_of_int(&p);
            let back = self.symbol_to_cusp(&p, a, n_mod);
            let cq = BigRational::from_integer(c.into());
            for ((x, h), b) in acc.iter_mut().zip(here).zip(back) {
                *x += (h - b) * &cq;
            }
        }
        Ok(acc)
    }
}

/// Sign of the star eigenspace carrying `L(f, chi, j)`.
pub fn winding_sign(j: i64, chi: &DirichletChar) -> i64 {
    let s = if (j - 1) % 2 == 0 { 1 } else { -1 };
    s * chi.parity()
}

/// The `f`-isotypic quotient of the `sign` part: functionals `Y` on class
/// coordinates, the lattice spanned by integral symbols, and the matrix of
/// `T(2)` on it.
#[derive(Clone, Debug)]
pub struct Isotypic {
    pub sign: i64,
    pub functionals: Matrix<Rationals>,
    pub lattice: Vec<Vec<BigRational>>,
    pub t2: Matrix<Rationals>,
}

impl Isotypic {
    pub fn new(space: &SymbolSpace, h: &Poly<Rationals>, sign: i64) -> Result<Self> {
        let dim = space.dim();
        let id = Matrix::identity(Rationals, dim);
        let t2 = space.hecke(2);
        let gt = t2.eval_poly(h);
        let s = space.star().sub(&id.scale(&BigRational::from_integer(sign.into())));
        // y * [h(T2) | star - sign] = 0
        let mut rows = gt.to_rows();
        for (r, sr) in rows.iter_mut().zip(s.to_rows()) {
            r.extend(sr);
        }
        let ys = Matrix::from_rows(Rationals, rows).left_kernel();
        let d = h.degree().unwrap_or(0);
        if ys.len() != d {
            return Err(Error::Internal(format!(
                "isotypic {sign} part has dimension {}, expected {d}",
                ys.len()
            )));
        }
        let y = Matrix::from_rows(Rationals, ys);
        // Y T2 = A Y
        let yt = y.mul(&t2);
        let a_t = y.transpose().solve(&yt.transpose()).ok_or_else(|| Error::Internal("T2 does not preserve the isotypic functionals".into()))?;
        let a = a_t.transpose();
        let images: Vec<Vec<BigRational>> = (0..=space.n).map(|i| y.mul_vec(&space.monomial_class(i))).collect();
        let lattice = rational_lattice_basis(&images);
        if lattice.len() != d {
            return Err(Error::Internal("integral symbols do not span the isotypic part".into()));
        }
        Ok(Isotypic {
            sign,
            functionals: y,
            lattice,
            t2: a,
        })
    }

    pub fn eval(&self, x: &[BigRational]) -> Vec<BigRational> {
        self.functionals.mul_vec(x)
    }

    fn krylov(&self, v: &[BigRational]) -> Matrix<Rationals> {
        let d = v.len();
        let mut cols = vec![v.to_vec()];
        for _ in 1..d {
            let last = cols.last().unwrap();
            cols.push(self.t2.mul_vec(last));
        }
        Matrix::from_cols(Rationals, cols)
    }

    /// Covolume of the integral lattice.
    pub fn covolume(&self) -> BigRational {
        Matrix::from_rows(Rationals, self.lattice.clone()).det().unwrap().abs()
    }

    /// `det[v, Av, ..., A^(d-1) v] / covolume`: the norm of the element
    /// `c` with `v = c(A) g` for a local generator `g` of the lattice.
    pub fn normalized_norm(&self, v: &[BigRational]) -> BigRational {
        self.krylov(v).det().unwrap() / self.covolume()
    }
}

/// Algebraic part of `L(f, chi, j)` in the eigenfield.
#[derive(Clone, Debug)]
pub struct AlgebraicLValue {
    pub j: i64,
    pub chi: String,
    pub sign: i64,
    /// `c` in `K` with `ev(winding) = c(T2) g`, `g` the chosen lattice vector.
    pub value: NfElem,
    /// `[lattice : Z[T2] g]`.
    pub generator_index: BigRational,
    /// `N(value) * generator_index`, independent of the choice of `g` and
    /// of the symbol basis up to sign.
    pub normalized_norm: BigRational,
}

impl AlgebraicLValue {
    pub fn is_zero(&self) -> bool {
        self.value.0.iter().all(|c| c.is_zero())
    }
}

/// Computes the algebraic part of `L(f, chi, j)` from modular symbols.
/// The period is fixed by the integral lattice, so values are defined up
/// to units that are prime to every `p` not dividing the generator index.
pub fn l_alg(space: &SymbolSpace, f: &NewformData, j: i64, chi: &DirichletChar) -> Result<AlgebraicLValue> {
    if space.weight() != f.weight {
        return Err(Error::domain("weight mismatch between symbols and newform"));
    }
    let sign = winding_sign(j, chi);
    let iso = Isotypic::new(space, &f.charpoly, sign)?;
    l_alg_in(&iso, space, &f.field, j, chi)
}

pub fn l_alg_in(
    iso: &Isotypic,
    space: &SymbolSpace,
    field: &NumberField,
    j: i64,
    chi: &DirichletChar,
) -> Result<AlgebraicLValue> {
    let sign = winding_sign(j, chi);
    if sign != iso.sign {
        return Err(Error::domain(format!("L(f, {}, {j}) lives in the {sign} part", chi.label())));
    }
    let v = iso.eval(&space.winding(j, chi)?);
    let cov = iso.covolume();
    // lattice vector with the smallest index [lattice : Z[A] g]
    let mut best: Option<(BigRational, Vec<BigRational>)> = None;
    let mut candidates = iso.lattice.clone();
    for a in 0..iso.lattice.len() {
        for b in a + 1..iso.lattice.len() {
            candidates.push(iso.lattice[a].iter().zip(&iso.lattice[b]).map(|(x, y)| x + y).collect());
        }
    }
    for g in candidates {
        let idx = (iso.krylov(&g).det()? / &cov).abs();
        if idx.is_zero() {
            continue;
        }
        if best.as_ref().is_none_or(|(b, _)| idx < *b) {
            best = Some((idx, g));
        }
    }
    let (index, g) = best.ok_or_else(|| Error::Internal("no cyclic lattice vector".into()))?;
    let kg = iso.krylov(&g);
    let rhs = Matrix::from_cols(Rationals, vec![v.clone()]);
    let c = kg.solve(&rhs).ok_or_else(|| Error::Internal("winding image outside the isotypic part".into()))?;
    let value = NfElem(c.col(0));
    let normalized_norm = field.norm(&value) * &index;
    Ok(AlgebraicLValue {
        j,
        chi: chi.label().to_string(),
        sign,
        value,
        generator_index: index,
        normalized_norm,
    })
}

/// Norm and exact `p`-valuation of an algebraic L-value.
#[derive(Clone, Debug, PartialEq)]
pub struct NormReport {
    pub j: i64,
    pub chi: String,
    pub norm: BigRational,
    /// `None` when the value vanishes.
    pub valuation: Option<i64>,
}

/// `L_alg` for each `(j, chi)` with its normalized norm and `p`-valuation.
pub fn l_alg_products(
    f: &NewformData,
    requests: &[(i64, DirichletChar)],
    p: u64,
) -> Result<Vec<NormReport>> {
    let space = SymbolSpace::new(f.weight)?;
    let mut isos: HashMap<i64, Isotypic> = HashMap::new();
    let mut out = Vec::new();
    for (j, chi) in requests {
        let sign = winding_sign(*j, chi);
        if let std::collections::hash_map::Entry::Vacant(e) = isos.entry(sign) {
            e.insert(Isotypic::new(&space, &f.charpoly, sign)?);
        }
        let l = l_alg_in(&isos[&sign], &space, &f.field, *j, chi)?;
        let valuation = crate::exactnum::field::rational_valuation(&l.normalized_norm, &BigInt::from(p));
        out.push(NormReport {
            j: *j,
            chi: chi.label().to_string(),
            norm: l.normalized_norm,
            valuation,
        });
    }
    Ok(out)
}

/// Sanity data: `dim S_w` equals each cuspidal sign dimension.
pub fn check_dimensions(space: &SymbolSpace) -> bool {
    let d = dim_cusp(space.weight());
    let (p, m) = space.cuspidal_sign_dims();
    p == d && m == d && space.dim() == 2 * d + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heilbronn_count() {
        assert_eq!(heilbronn_merel(2).len(), 4);
        assert_eq!(heilbronn_merel(3).len(), 7);
    }

    #[test]
    fn path_telescopes() {
        for (a, b) in [(1, 3), (2, 3), (5, 7), (1, 1), (3, 1)] {
            let gs = path_to(a, b);
            assert_eq!(gs.first().unwrap(), &[[1, 0], [0, 1]]);
            let last = gs.last().unwrap();
            assert_eq!(last[0][0] * b, last[1][0] * a);
            for g in &gs {
                assert_eq!(g[0][0] * g[1][1] - g[0][1] * g[1][0], 1);
            }
        }
    }

    #[test]
    fn weight_12_hecke() {
        let s = SymbolSpace::new(12).unwrap();
        assert_eq!(s.dim(), 3);
        assert!(check_dimensions(&s));
        let cp = s.hecke(2).charpoly().unwrap();
        let expect = Poly::from_ints(&[24, 1]).pow(2).mul(&Poly::from_ints(&[-2049, 1]));
        assert_eq!(cp, expect);
        assert_eq!(s.cuspidal_charpoly(2, 1).unwrap(), Poly::from_ints(&[24, 1]));
        assert_eq!(s.cuspidal_charpoly(3, -1).unwrap(), Poly::from_ints(&[-252, 1]));
        let t2 = s.hecke(2);
        assert_eq!(t2.mul(s.star()), s.star().mul(&t2));
    }
}
