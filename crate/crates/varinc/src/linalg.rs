//! Small exact linear algebra over `Rat`: just enough Gaussian elimination
//! for the geometry kernel. Everything is dense and dimensions stay tiny
//! (graph spaces of the maps under study), so no effort is spent on sparsity.

use crate::rat::Rat;
use num_traits::Zero;

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut s = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        s += x * y;
    }
    s
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * c).collect()
}

pub fn neg(a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn zeros(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = zeros(n);
    v[i] = Rat::from_integer(1.into());
    v
}

pub fn norm_sq(a: &[Rat]) -> Rat {
    dot(a, a)
}

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row (rows beyond are zeroed and truncated).
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let d = &rows[r][j] * &f;
                    rows[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : rows * x = 0}` in dimension `dim`.
pub fn kernel_basis(rows: &[Vec<Rat>], dim: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows.iter().filter(|r| !is_zero_vec(r)).cloned().collect();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = zeros(dim);
        v[f] = Rat::from_integer(1.into());
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -m[r][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solve `A x = b`. Returns `Ok(None)` when inconsistent, `Ok(Some(x))` with
/// one solution otherwise (free variables set to zero).
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let dim = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&dim) {
        return None; // pivot in augmented column: inconsistent
    }
    let mut x = zeros(dim);
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[r][dim].clone();
    }
    Some(x)
}

/// Gram–Schmidt without normalization: returns an orthogonal spanning set
/// (zero vectors dropped) for `span(vs)`.
pub fn orthogonalize(vs: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut basis: Vec<Vec<Rat>> = Vec::new();
    for v in vs {
        let mut w = v.clone();
        for u in &basis {
            let c = dot(&w, u) / norm_sq(u);
            w = sub(&w, &scale(u, &c));
        }
        if !is_zero_vec(&w) {
            basis.push(w);
        }
    }
    basis
}

/// Component of `v` orthogonal to `span(orth)`; `orth` must be orthogonal
/// (as produced by [`orthogonalize`]).
pub fn reduce_mod_span(v: &[Rat], orth: &[Vec<Rat>]) -> Vec<Rat> {
    let mut w = v.to_vec();
    for u in orth {
        let c = dot(&w, u) / norm_sq(u);
        w = sub(&w, &scale(u, &c));
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    #[test]
    fn rref_and_kernel() {
        let rows = vec![
            vec![rint(1), rint(2), rint(3)],
            vec![rint(2), rint(4), rint(6)],
        ];
        let basis = kernel_basis(&rows, 3);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(dot(&rows[0], v).is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = vec![vec![rint(1), rint(1)], vec![rint(1), rint(-1)]];
        let x = solve(&a, &[rint(3), rint(1)]).unwrap();
        assert_eq!(x, vec![rint(2), rint(1)]);
        let a2 = vec![vec![rint(1), rint(1)], vec![rint(2), rint(2)]];
        assert!(solve(&a2, &[rint(1), rint(3)]).is_none());
        assert!(solve(&a2, &[rint(1), rint(2)]).is_some());
    }

    #[test]
    fn orthogonal_reduction() {
        let basis = orthogonalize(&[vec![rint(1), rint(1)], vec![rint(1), rint(0)]]);
        assert_eq!(basis.len(), 2);
        assert!(dot(&basis[0], &basis[1]).is_zero());
        let r = reduce_mod_span(&[rint(5), rat(7, 2)], &basis);
        assert!(is_zero_vec(&r));
    }
}
