use num_bigint::BigInt;
use num_traits::One;

use super::{IntPolynomial, RationalFunction};
use crate::error::{Error, Result};

/// The matrix `Id - t A` over `Z[t]`.
pub fn i_minus_ta(adjacency: &[Vec<u64>]) -> Vec<Vec<IntPolynomial>> {
    let r = adjacency.len();
    adjacency
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), r, "adjacency matrix is not square");
            row.iter()
                .enumerate()
                .map(|(j, &a)| {
                    let diag = if i == j { BigInt::one() } else { BigInt::from(0) };
                    IntPolynomial::new(vec![diag, -BigInt::from(a)])
                })
                .collect()
        })
        .collect()
}

/// Markowitz cost, pivot degree, row, column.
type PivotKey = (usize, usize, usize, usize);

/// Fraction-free (Bareiss) determinant over `Z[t]`.
///
/// Pivots are chosen by minimum Markowitz cost `(r_i - 1)(c_j - 1)` over the
/// active submatrix, ties broken by pivot degree and position. Each step
/// divides exactly by the previous pivot.
pub(crate) fn bareiss_det(mut m: Vec<Vec<IntPolynomial>>) -> IntPolynomial {
    let r = m.len();
    let mut negate = false;
    let mut prev = IntPolynomial::one();
    for k in 0..r {
        let row_nnz: Vec<usize> = (k..r)
            .map(|i| (k..r).filter(|&j| !m[i][j].is_zero()).count())
            .collect();
        let col_nnz: Vec<usize> = (k..r)
            .map(|j| (k..r).filter(|&i| !m[i][j].is_zero()).count())
            .collect();
        let mut best: Option<(PivotKey, usize, usize)> = None;
        for i in k..r {
            for j in k..r {
                let entry = &m[i][j];
                if entry.is_zero() {
                    continue;
                }
                let cost = (row_nnz[i - k] - 1) * (col_nnz[j - k] - 1);
                let key = (cost, entry.degree().unwrap_or(0), i, j);
                if best.as_ref().is_none_or(|(b, _, _)| key < *b) {
                    best = Some((key, i, j));
                }
            }
        }
        let Some((_, pi, pj)) = best else {
            return IntPolynomial::zero();
        };
        if pi != k {
            m.swap(pi, k);
            negate = !negate;
        }
        if pj != k {
            for row in m.iter_mut() {
                row.swap(pj, k);
            }
            negate = !negate;
        }

        let (upper, lower) = m.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        let pivot = &pivot_row[k];
        for row in lower.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..r {
                let updated = if factor.is_zero() || pivot_row[j].is_zero() {
                    if row[j].is_zero() {
                        continue;
                    }
                    pivot * &row[j]
                } else {
                    &(pivot * &row[j]) - &(&factor * &pivot_row[j])
                };
                row[j] = updated
                    .div_exact(&prev)
                    .expect("Bareiss step divides exactly");
            }
        }
        prev = m[k][k].clone();
    }
    if negate {
        -prev
    } else {
        prev
    }
}

/// `det(Id - t A) = t^r p_A(1/t)`, where `p_A` is the characteristic
/// polynomial. Its constant term is always 1.
pub fn det_i_minus_ta(adjacency: &[Vec<u64>]) -> IntPolynomial {
    bareiss_det(i_minus_ta(adjacency))
}

/// First column of the cofactor matrix of `Id - t A`: entry `k` is
/// `(-1)^k` times the minor obtained by deleting row `k` and column 0.
pub fn first_cofactor_column(adjacency: &[Vec<u64>]) -> Vec<IntPolynomial> {
    let m = i_minus_ta(adjacency);
    let r = m.len();
    (0..r)
        .map(|k| {
            let minor: Vec<Vec<IntPolynomial>> = m
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, row)| row[1..].to_vec())
                .collect();
            let d = bareiss_det(minor);
            if k % 2 == 1 {
                -d
            } else {
                d
            }
        })
        .collect()
}

/// First component `H_1` of the unique solution of `(Id - t A) H = C`, by
/// Cramer's rule: the numerator is the determinant with column 0 replaced by
/// `C`, the denominator `det(Id - t A)`.
pub fn solve_first_component(adjacency: &[Vec<u64>], constants: &[u8]) -> Result<RationalFunction> {
    let r = adjacency.len();
    if r == 0 {
        return Err(Error::Dimension("empty system".into()));
    }
    if constants.len() != r || adjacency.iter().any(|row| row.len() != r) {
        return Err(Error::Dimension(format!(
            "matrix is {r}x{}, constant vector has {} entries",
            adjacency.first().map_or(0, Vec::len),
            constants.len()
        )));
    }
    let m = i_minus_ta(adjacency);
    let den = bareiss_det(m.clone());
    let mut replaced = m;
    for (row, &c) in replaced.iter_mut().zip(constants) {
        row[0] = IntPolynomial::constant(BigInt::from(c));
    }
    let num = bareiss_det(replaced);
    Ok(RationalFunction::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn artin_matrix() -> Vec<Vec<u64>> {
        vec![
            vec![1, 1, 1, 0, 0, 0],
            vec![0, 1, 1, 1, 0, 0],
            vec![0, 1, 1, 0, 1, 0],
            vec![0, 0, 1, 0, 1, 1],
            vec![0, 0, 0, 0, 3, 0],
            vec![0, 0, 2, 0, 0, 1],
        ]
    }

    /// Leibniz expansion over all permutations: an independent determinant.
    fn leibniz(m: &[Vec<IntPolynomial>]) -> IntPolynomial {
        fn go(m: &[Vec<IntPolynomial>], row: usize, used: &mut Vec<bool>, sign: bool, acc: IntPolynomial) -> IntPolynomial {
            if row == m.len() {
                return if sign { -acc } else { acc };
            }
            let mut total = IntPolynomial::zero();
            for j in 0..m.len() {
                if used[j] {
                    continue;
                }
                // inversions contributed by placing column j at this row
                let inversions = (j + 1..m.len()).filter(|&k| used[k]).count();
                if !m[row][j].is_zero() {
                    used[j] = true;
                    let s = sign ^ (inversions % 2 == 1);
                    total = &total + &go(m, row + 1, used, s, &acc * &m[row][j]);
                    used[j] = false;
                }
            }
            total
        }
        go(m, 0, &mut vec![false; m.len()], false, IntPolynomial::one())
    }

    #[test]
    fn small_determinants() {
        assert_eq!(det_i_minus_ta(&[vec![3]]), p(&[1, -3]));
        assert_eq!(det_i_minus_ta(&[vec![0, 0], vec![0, 0]]), p(&[1]));
        let artin = det_i_minus_ta(&artin_matrix());
        assert_eq!(artin, leibniz(&i_minus_ta(&artin_matrix())));
        assert_eq!(artin.coeff(0), BigInt::from(1));
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve_first_component(&[vec![2]], &[1]).unwrap(), RationalFunction::free_algebra(2));
        assert_eq!(solve_first_component(&[vec![2]], &[0]).unwrap(), RationalFunction::zero());
        let artin = solve_first_component(&artin_matrix(), &[1, 1, 1, 1, 0, 1]).unwrap();
        assert_eq!(artin, RationalFunction::new(p(&[1]), p(&[1, -3, 1, 1])));
        assert!(solve_first_component(&[vec![1]], &[1, 0]).is_err());
        assert!(solve_first_component(&[], &[]).is_err());
    }

    #[test]
    fn cofactor_numerator_matches_cramer() {
        let a = artin_matrix();
        let c = [1u8, 1, 1, 1, 0, 1];
        let b = first_cofactor_column(&a);
        let f = b
            .iter()
            .zip(c)
            .fold(IntPolynomial::zero(), |acc, (bk, ck)| &acc + &bk.scale(&BigInt::from(ck)));
        let g = det_i_minus_ta(&a);
        assert_eq!(RationalFunction::new(f, g), solve_first_component(&a, &c).unwrap());
    }

    /// Dense Gauss-Jordan over Q(t): an independent solver.
    fn gauss_first_component(a: &[Vec<u64>], c: &[u8]) -> RationalFunction {
        let r = a.len();
        let mut m: Vec<Vec<RationalFunction>> = i_minus_ta(a)
            .into_iter()
            .zip(c)
            .map(|(row, &ck)| {
                let mut row: Vec<RationalFunction> = row.into_iter().map(RationalFunction::from_polynomial).collect();
                row.push(RationalFunction::from_polynomial(IntPolynomial::constant(BigInt::from(ck))));
                row
            })
            .collect();
        for k in 0..r {
            let piv = (k..r).find(|&i| !m[i][k].is_zero()).unwrap();
            m.swap(k, piv);
            let inv = m[k][k].recip();
            for j in k..=r {
                m[k][j] = &m[k][j] * &inv;
            }
            for i in 0..r {
                if i != k && !m[i][k].is_zero() {
                    let f = m[i][k].clone();
                    for j in k..=r {
                        let sub = &f * &m[k][j];
                        m[i][j] = &m[i][j] - &sub;
                    }
                }
            }
        }
        m[0][r].clone()
    }

    fn system_strategy() -> impl Strategy<Value = (Vec<Vec<u64>>, Vec<u8>)> {
        (1usize..=8).prop_flat_map(|r| {
            (
                proptest::collection::vec(proptest::collection::vec(0u64..3, r), r),
                proptest::collection::vec(0u8..2, r),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn determinant_has_unit_constant_term((a, _) in system_strategy()) {
            prop_assert_eq!(det_i_minus_ta(&a).coeff(0), BigInt::from(1));
        }

        #[test]
        fn solver_agrees_with_gauss_jordan((a, c) in system_strategy()) {
            prop_assert_eq!(solve_first_component(&a, &c).unwrap(), gauss_first_component(&a, &c));
        }

        #[test]
        fn bareiss_agrees_with_leibniz(a in proptest::collection::vec(proptest::collection::vec(0u64..3, 5), 5)) {
            let m = i_minus_ta(&a);
            prop_assert_eq!(bareiss_det(m.clone()), leibniz(&m));
        }
    }

    #[test]
    fn zero_determinant_detected() {
        let m = vec![vec![p(&[1, 1]), p(&[2, 2])], vec![p(&[1]), p(&[2])]];
        assert!(bareiss_det(m).is_zero());
    }
}
