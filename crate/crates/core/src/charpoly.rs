//! Determinants, characteristic polynomials and Pfaffians of matrices with
//! polynomial entries, optionally truncated above a total degree.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::poly::SparsePoly;

pub type PolyMatrix = Vec<Vec<SparsePoly>>;

fn check_square(m: &PolyMatrix) -> usize {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    n
}

/// Coefficients `c_0 = 1, c_1, ..., c_n` of `det(t I - M) = sum c_k t^{n-k}`,
/// computed division-free by the Berkowitz recursion.
pub fn berkowitz(m: &PolyMatrix, max_degree: u32) -> Vec<SparsePoly> {
    let n = check_square(m);
    let mul = |a: &SparsePoly, b: &SparsePoly| a.mul_truncated(b, max_degree);
    let mut vect = vec![SparsePoly::one()];
    for r in 0..n {
        // leading (r+1)x(r+1) block: [[M_r, C], [R, a]]
        let a = &m[r][r];
        let mut toeplitz = vec![SparsePoly::one(), a.neg().truncate(max_degree)];
        let mut col: Vec<SparsePoly> = (0..r).map(|i| m[i][r].truncate(max_degree)).collect();
        for _ in 0..r {
            let mut rc = SparsePoly::zero();
            for (j, cj) in col.iter().enumerate() {
                if !m[r][j].is_zero() && !cj.is_zero() {
                    rc.add_assign(&mul(&m[r][j], cj));
                }
            }
            toeplitz.push(rc.neg());
            let next: Vec<SparsePoly> = (0..r)
                .map(|i| {
                    let mut acc = SparsePoly::zero();
                    for (j, cj) in col.iter().enumerate() {
                        if !m[i][j].is_zero() && !cj.is_zero() {
                            acc.add_assign(&mul(&m[i][j], cj));
                        }
                    }
                    acc
                })
                .collect();
            col = next;
        }
        let mut out = vec![SparsePoly::zero(); r + 2];
        for (i, slot) in out.iter_mut().enumerate() {
            for (k, v) in vect.iter().enumerate() {
                if i >= k && !v.is_zero() && !toeplitz[i - k].is_zero() {
                    slot.add_assign(&mul(&toeplitz[i - k], v));
                }
            }
        }
        vect = out;
    }
    vect
}

/// `Delta_l` = sum of the principal `l x l` minors, i.e. `(-1)^l` times the
/// coefficient of `t^{n-l}` in `det(t I - M)`, for `l = 0..=n`.
pub fn principal_minor_sums(m: &PolyMatrix, max_degree: u32) -> Vec<SparsePoly> {
    let n = check_square(m);
    assert!(n <= 30, "matrix too large for subset enumeration");
    let mut memo: HashMap<(u32, u32), SparsePoly> = HashMap::new();
    let mut out = vec![SparsePoly::zero(); n + 1];
    out[0] = SparsePoly::one();
    for set in 1u32..(1u32 << n) {
        let d = minor(m, set, set, max_degree, &mut memo);
        out[set.count_ones() as usize].add_assign(&d);
    }
    out
}

fn minor(
    m: &PolyMatrix,
    rows: u32,
    cols: u32,
    max_degree: u32,
    memo: &mut HashMap<(u32, u32), SparsePoly>,
) -> SparsePoly {
    if rows == 0 {
        return SparsePoly::one();
    }
    if let Some(p) = memo.get(&(rows, cols)) {
        return p.clone();
    }
    let r0 = rows.trailing_zeros() as usize;
    let rest = rows & (rows - 1);
    let mut acc = SparsePoly::zero();
    let mut pos = 0;
    let mut c = cols;
    while c != 0 {
        let col = c.trailing_zeros() as usize;
        c &= c - 1;
        let entry = &m[r0][col];
        if !entry.is_zero() {
            let sub = minor(m, rest, cols & !(1 << col), max_degree, memo);
            if !sub.is_zero() {
                let t = entry.mul_truncated(&sub, max_degree);
                if pos % 2 == 0 {
                    acc.add_assign(&t);
                } else {
                    acc = acc.sub(&t);
                }
            }
        }
        pos += 1;
    }
    memo.insert((rows, cols), acc.clone());
    acc
}

pub fn determinant(m: &PolyMatrix, max_degree: u32) -> SparsePoly {
    let n = check_square(m);
    if n == 0 {
        return SparsePoly::one();
    }
    let full = (1u32 << n) - 1;
    minor(m, full, full, max_degree, &mut HashMap::new())
}

/// Pfaffian of an antisymmetric matrix of even size.
pub fn pfaffian(m: &PolyMatrix, max_degree: u32) -> Result<SparsePoly> {
    let n = check_square(m);
    for i in 0..n {
        for j in 0..n {
            if m[i][j].add(&m[j][i]) != SparsePoly::zero() {
                return Err(Error::NotAntisymmetric);
            }
        }
    }
    if n % 2 == 1 {
        return Err(Error::Invalid("Pfaffian of an odd-sized matrix".into()));
    }
    if n == 0 {
        return Ok(SparsePoly::one());
    }
    let mut memo = HashMap::new();
    Ok(pf(m, (1u32 << n) - 1, max_degree, &mut memo))
}

fn pf(m: &PolyMatrix, set: u32, max_degree: u32, memo: &mut HashMap<u32, SparsePoly>) -> SparsePoly {
    if set == 0 {
        return SparsePoly::one();
    }
    if let Some(p) = memo.get(&set) {
        return p.clone();
    }
    let i0 = set.trailing_zeros() as usize;
    let rest = set & (set - 1);
    let mut acc = SparsePoly::zero();
    let mut pos = 1;
    let mut c = rest;
    while c != 0 {
        let j = c.trailing_zeros() as usize;
        c &= c - 1;
        if !m[i0][j].is_zero() {
            let sub = pf(m, rest & !(1 << j), max_degree, memo);
            let t = m[i0][j].mul_truncated(&sub, max_degree);
            if pos % 2 == 1 {
                acc.add_assign(&t);
            } else {
                acc = acc.sub(&t);
            }
        }
        pos += 1;
    }
    memo.insert(set, acc.clone());
    acc
}

/// Converts Berkowitz coefficients into signed principal minor sums.
pub fn minor_sums_from_charpoly(coeffs: &[SparsePoly]) -> Vec<SparsePoly> {
    coeffs.iter().enumerate().map(|(l, c)| if l % 2 == 0 { c.clone() } else { c.neg() }).collect()
}

pub fn constant_matrix(m: &crate::linalg::Matrix) -> PolyMatrix {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| SparsePoly::constant(m[(i, j)].clone())).collect()).collect()
}

pub fn scalar(x: i64) -> SparsePoly {
    if x == 0 {
        SparsePoly::zero()
    } else {
        SparsePoly::constant(q(x))
    }
}

pub fn eval_matrix(m: &PolyMatrix, point: &HashMap<crate::poly::Var, Q>) -> crate::linalg::Matrix {
    let rows = m.iter().map(|r| r.iter().map(|p| p.eval(point)).collect()).collect();
    crate::linalg::Matrix::from_rows(rows)
}

pub fn trace(m: &PolyMatrix) -> SparsePoly {
    let mut acc = SparsePoly::zero();
    for (i, r) in m.iter().enumerate() {
        if !r[i].is_zero() {
            acc.add_assign(&r[i]);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{self, qf, Matrix};
    use crate::poly::Var;
    use proptest::prelude::*;

    fn cofactor(m: &PolyMatrix) -> SparsePoly {
        let n = m.len();
        if n == 0 {
            return SparsePoly::one();
        }
        let mut acc = SparsePoly::zero();
        for j in 0..n {
            let minor: PolyMatrix =
                (1..n).map(|i| (0..n).filter(|&c| c != j).map(|c| m[i][c].clone()).collect()).collect();
            let t = m[0][j].mul(&cofactor(&minor));
            acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
        }
        acc
    }

    fn generic(n: usize) -> PolyMatrix {
        (0..n).map(|i| (0..n).map(|j| SparsePoly::var(Var::xi(i + 1, j + 1, 0))).collect()).collect()
    }

    fn arb_poly_matrix(max: usize) -> impl Strategy<Value = PolyMatrix> {
        (1..=max).prop_flat_map(|n| {
            proptest::collection::vec((-2i64..=2, 0usize..3, 0u32..2), n * n).prop_map(move |v| {
                (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                let (c, var, e) = v[i * n + j];
                                SparsePoly::var(Var::sym('a', var)).pow(e).scale(&q(c)).add(&scalar((i + j) as i64 % 2))
                            })
                            .collect()
                    })
                    .collect()
            })
        })
    }

    #[test]
    fn generic_determinant_has_factorial_terms() {
        for n in 1..=5 {
            let d = determinant(&generic(n), u32::MAX);
            assert_eq!(d.len(), (1..=n).product::<usize>());
            assert_eq!(d, cofactor(&generic(n)));
        }
    }

    #[test]
    fn generic_charpoly_paths_agree() {
        for n in 1..=5 {
            let g = generic(n);
            let a = minor_sums_from_charpoly(&berkowitz(&g, u32::MAX));
            let b = principal_minor_sums(&g, u32::MAX);
            assert_eq!(a, b);
            assert_eq!(b[1], trace(&g));
        }
    }

    #[test]
    fn pfaffian_squares_to_determinant() {
        for half in 1..=3 {
            let n = 2 * half;
            let mut m = vec![vec![SparsePoly::zero(); n]; n];
            for i in 0..n {
                for j in i + 1..n {
                    let v = SparsePoly::var(Var::xi(i + 1, j + 1, 0));
                    m[j][i] = v.neg();
                    m[i][j] = v;
                }
            }
            let p = pfaffian(&m, u32::MAX).unwrap();
            assert_eq!(p.mul(&p), cofactor(&m));
        }
        let bad = vec![vec![scalar(1)]];
        assert_eq!(pfaffian(&bad, u32::MAX), Err(Error::NotAntisymmetric));
    }

    #[test]
    fn numeric_charpoly_matches_eigen_sums() {
        let m = Matrix::from_rows(vec![vec![q(2), qf(1, 2), q(0)], vec![q(-1), q(3), q(1)], vec![q(0), q(4), q(-2)]]);
        let pm = constant_matrix(&m);
        let sums = principal_minor_sums(&pm, u32::MAX);
        assert_eq!(sums[1], SparsePoly::constant(m.trace()));
        assert_eq!(sums[3], SparsePoly::constant(linalg::determinant(&m)));
    }

    proptest! {
        #[test]
        fn determinant_matches_cofactor(m in arb_poly_matrix(4)) {
            prop_assert_eq!(determinant(&m, u32::MAX), cofactor(&m));
        }

        #[test]
        fn berkowitz_matches_minor_sums(m in arb_poly_matrix(4), d in 0u32..4) {
            let a = minor_sums_from_charpoly(&berkowitz(&m, d));
            let b = principal_minor_sums(&m, d);
            prop_assert_eq!(&a, &b);
            let full = principal_minor_sums(&m, u32::MAX);
            for (x, y) in b.iter().zip(&full) {
                prop_assert_eq!(x, &y.truncate(d));
            }
        }
    }
}
