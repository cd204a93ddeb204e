//! Exact feasibility of small linear systems over the rationals.
//!
//! Phase one of the simplex method on a dense tableau with Bland's rule, so
//! it terminates without any tolerance handling.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `coeffs · x = rhs` or `coeffs · x >= rhs` over free variables `x`.
#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
    pub equality: bool,
}

impl Constraint {
    pub fn eq(coeffs: Vec<BigRational>, rhs: BigRational) -> Self {
        Constraint { coeffs, rhs, equality: true }
    }

    pub fn geq(coeffs: Vec<BigRational>, rhs: BigRational) -> Self {
        Constraint { coeffs, rhs, equality: false }
    }

    pub fn holds(&self, x: &[BigRational]) -> bool {
        let lhs: BigRational = self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
        if self.equality {
            lhs == self.rhs
        } else {
            lhs >= self.rhs
        }
    }
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Returns a point satisfying every constraint, or `None` if there is none.
pub fn find_feasible(nvars: usize, constraints: &[Constraint]) -> Option<Vec<BigRational>> {
    let m = constraints.len();
    if m == 0 {
        return Some(vec![BigRational::zero(); nvars]);
    }
    let nslack = constraints.iter().filter(|c| !c.equality).count();
    // columns: x+ (nvars), x- (nvars), slacks, artificials, rhs
    let ncols = 2 * nvars + nslack + m;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut slack = 0;
    for (i, c) in constraints.iter().enumerate() {
        let mut row = vec![BigRational::zero(); ncols + 1];
        for (j, a) in c.coeffs.iter().enumerate() {
            row[j] = a.clone();
            row[nvars + j] = -a.clone();
        }
        if !c.equality {
            row[2 * nvars + slack] = -BigRational::one();
            slack += 1;
        }
        row[ncols] = c.rhs.clone();
        if row[ncols].is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
        }
        row[2 * nvars + nslack + i] = BigRational::one();
        t.push(row);
    }
    let art0 = 2 * nvars + nslack;
    let mut basis: Vec<usize> = (0..m).map(|i| art0 + i).collect();

    loop {
        // reduced costs of minimizing the sum of artificials
        let entering = (0..ncols).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let cost = if j >= art0 { BigRational::one() } else { BigRational::zero() };
            let basic_cost: BigRational = (0..m)
                .filter(|&i| basis[i] >= art0)
                .map(|i| t[i][j].clone())
                .sum();
            (cost - basic_cost).is_negative()
        });
        let Some(col) = entering else { break };
        let mut best: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][col].is_positive() {
                let ratio = &t[i][ncols] / &t[i][col];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && basis[i] < basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
        }
        let Some((row, _)) = best else {
            // unbounded direction cannot occur for a bounded-below objective
            break;
        };
        let p = t[row][col].clone();
        for v in t[row].iter_mut() {
            *v = &*v / &p;
        }
        for i in 0..m {
            if i != row && !t[i][col].is_zero() {
                let f = t[i][col].clone();
                for j in 0..=ncols {
                    let sub = &f * &t[row][j];
                    t[i][j] -= sub;
                }
            }
        }
        basis[row] = col;
    }

    let infeasible = (0..m).any(|i| basis[i] >= art0 && !t[i][ncols].is_zero());
    if infeasible {
        return None;
    }
    let mut x = vec![BigRational::zero(); nvars];
    for i in 0..m {
        let b = basis[i];
        if b < nvars {
            x[b] += t[i][ncols].clone();
        } else if b < 2 * nvars {
            x[b - nvars] -= t[i][ncols].clone();
        }
    }
    debug_assert!(constraints.iter().all(|c| c.holds(&x)));
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn simple_feasible_system() {
        // x + y = 1, x >= 2, y >= -3
        let cs = vec![
            Constraint::eq(v(&[1, 1]), int(1)),
            Constraint::geq(v(&[1, 0]), int(2)),
            Constraint::geq(v(&[0, 1]), int(-3)),
        ];
        let x = find_feasible(2, &cs).unwrap();
        assert!(cs.iter().all(|c| c.holds(&x)));
    }

    #[test]
    fn infeasible_system() {
        // x >= 1 and -x >= 0
        let cs = vec![Constraint::geq(v(&[1]), int(1)), Constraint::geq(v(&[-1]), int(0))];
        assert!(find_feasible(1, &cs).is_none());
    }

    #[test]
    fn equalities_pin_a_point() {
        let cs = vec![Constraint::eq(v(&[2, 0]), int(3)), Constraint::eq(v(&[1, 1]), int(0))];
        let x = find_feasible(2, &cs).unwrap();
        assert_eq!(x, vec![BigRational::new(3.into(), 2.into()), BigRational::new((-3).into(), 2.into())]);
    }
}
