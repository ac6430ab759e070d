//! Exact phase-one simplex for feasibility of `A x = b, x ≥ 0`.
//!
//! Pivoting follows Bland's rule (lowest entering index, lowest leaving
//! basic variable on ties), which guarantees termination on degenerate
//! problems.

use crate::arith::Rational;

/// Returns a nonnegative solution of `Σ_j x_j columns[j] = b`, or `None` if
/// the system is infeasible. All columns must have `b.len()` entries.
pub fn nonneg_combination(columns: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = b.len();
    let n = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == m));

    if b.iter().all(Rational::is_zero) {
        return Some(vec![Rational::zero(); n]);
    }
    if n == 0 {
        return None;
    }

    // Tableau columns: 0..n structural, n..n+m artificial, last = rhs.
    let width = n + m + 1;
    let rhs = n + m;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = Vec::with_capacity(width);
        for c in columns {
            row.push(if flip { -&c[i] } else { c[i].clone() });
        }
        for k in 0..m {
            row.push(if k == i { Rational::one() } else { Rational::zero() });
        }
        row.push(if flip { -&b[i] } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs for minimising the sum of artificials.
    let mut cost = vec![Rational::zero(); width];
    for row in &t {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[rhs] -= &row[rhs];
    }

    loop {
        let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][rhs] / &t[i][enter];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase one is bounded below by zero, so a pivot row always exists.
        let (p, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut t, &mut cost, p, enter);
        basis[p] = enter;
    }

    if !cost[rhs].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][rhs].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<Rational>], cost: &mut [Rational], p: usize, q: usize) {
    let inv = t[p][q].recip();
    for x in t[p].iter_mut() {
        if !x.is_zero() {
            *x = &*x * &inv;
        }
    }
    let prow = t[p].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == p || row[q].is_zero() {
            continue;
        }
        let f = row[q].clone();
        for (x, y) in row.iter_mut().zip(&prow) {
            if !y.is_zero() {
                *x -= &(&f * y);
            }
        }
    }
    if !cost[q].is_zero() {
        let f = cost[q].clone();
        for (x, y) in cost.iter_mut().zip(&prow) {
            if !y.is_zero() {
                *x -= &(&f * y);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::int(x)).collect()
    }

    fn check(cols: &[Vec<Rational>], b: &[Rational], x: &[Rational]) {
        assert!(x.iter().all(|v| !v.is_negative()));
        for i in 0..b.len() {
            let s: Rational = cols.iter().zip(x).map(|(c, xj)| &c[i] * xj).sum();
            assert_eq!(s, b[i]);
        }
    }

    #[test]
    fn feasible_and_infeasible() {
        let cols = vec![ints(&[1, 0]), ints(&[0, 1])];
        let x = nonneg_combination(&cols, &ints(&[3, 2])).unwrap();
        check(&cols, &ints(&[3, 2]), &x);
        assert!(nonneg_combination(&cols, &ints(&[-1, 0])).is_none());
        assert!(nonneg_combination(&[], &ints(&[1])).is_none());
        assert!(nonneg_combination(&[], &ints(&[0, 0])).is_some());
    }

    #[test]
    fn degenerate_cycling_prone_instance() {
        // Beale-style degenerate data; Bland's rule must terminate.
        let cols = vec![
            ints(&[1, 0, 0, 1]),
            ints(&[0, 1, 0, 1]),
            ints(&[0, 0, 1, 1]),
            ints(&[1, 1, 0, 2]),
            ints(&[1, 1, 1, 3]),
            ints(&[-1, 0, 0, -1]),
        ];
        let b = ints(&[0, 0, 0, 0]);
        assert!(nonneg_combination(&cols, &b).is_some());
        let b = ints(&[2, 1, 1, 4]);
        let x = nonneg_combination(&cols, &b).unwrap();
        check(&cols, &b, &x);
        assert!(nonneg_combination(&cols, &ints(&[1, 1, 1, 2])).is_none());
    }
}
