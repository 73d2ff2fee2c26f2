//! Integer lattices: Hermite normal form of a generating set.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Row-style Hermite normal form basis of the Z-span of `rows`.
pub fn hnf_basis(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut top = 0;
    for c in 0..cols {
        if top >= a.len() {
            break;
        }
        // Euclid on column c among rows top..
        loop {
            let piv = (top..a.len())
                .filter(|&i| !a[i][c].is_zero())
                .min_by_key(|&i| a[i][c].abs());
            let Some(piv) = piv else { break };
            a.swap(top, piv);
            let mut done = true;
            for i in top + 1..a.len() {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[top][c]);
                let (head, tail) = a.split_at_mut(i);
                for (x, y) in tail[0].iter_mut().zip(&head[top]) {
                    *x -= &q * y;
                }
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if top < a.len() && !a[top][c].is_zero() {
            if a[top][c].is_negative() {
                for x in a[top].iter_mut() {
                    *x = -x.clone();
                }
            }
            for i in 0..top {
                let q = a[i][c].div_floor(&a[top][c]);
                if !q.is_zero() {
                    let (head, tail) = a.split_at_mut(top);
                    for (x, y) in head[i].iter_mut().zip(&tail[0]) {
                        *x -= &q * y;
                    }
                }
            }
            top += 1;
        }
    }
    a.truncate(top);
    a.retain(|r| r.iter().any(|x| !x.is_zero()));
    a
}

/// Basis of the Z-span of rational vectors, as rational vectors.
pub fn rational_lattice_basis(rows: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let den = rows
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|x| (x * &den).to_integer()).collect())
        .collect();
    hnf_basis(&ints)
        .into_iter()
        .map(|r| r.into_iter().map(|x| BigRational::new(x, den.clone())).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn hnf_of_small_lattice() {
        let b = hnf_basis(&[v(&[2, 4]), v(&[3, 7]), v(&[0, 0])]);
        // (1, 1) = 2 (2, 4) - (3, 7); the entry above the pivot 2 is reduced mod 2
        assert_eq!(b, vec![v(&[1, 1]), v(&[0, 2])]);
        let b = hnf_basis(&[v(&[4, 0]), v(&[6, 0])]);
        assert_eq!(b, vec![v(&[2, 0])]);
    }
}
