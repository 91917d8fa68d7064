use super::DenseMatrix;
use crate::error::{Error, Result};

const MAX_SWEEPS_PER_EIGENVALUE: usize = 60;

/// Householder reduction of a symmetric matrix to tridiagonal form.
/// Returns `(diagonal, subdiagonal)`; `subdiagonal[i]` couples `i` and `i+1`.
fn tridiagonalize(m: &DenseMatrix) -> (Vec<f64>, Vec<f64>) {
    let n = m.order();
    let mut a: Vec<Vec<f64>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut e = vec![0.0; n.saturating_sub(1)];

    for k in 0..n.saturating_sub(2) {
        let norm = (k + 1..n).map(|i| a[i][k] * a[i][k]).sum::<f64>().sqrt();
        if norm == 0.0 {
            e[k] = 0.0;
            continue;
        }
        let x0 = a[k + 1][k];
        let beta = if x0 >= 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = (k + 1..n).map(|i| a[i][k]).collect();
        v[0] -= beta;
        let vnorm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            e[k] = x0;
            continue;
        }
        for x in &mut v {
            *x /= vnorm;
        }
        // p = B v, w = p - (v.p) v, B <- B - 2 v w^T - 2 w v^T
        let size = n - k - 1;
        let mut p = vec![0.0; size];
        for (r, pr) in p.iter_mut().enumerate() {
            let row = &a[k + 1 + r];
            *pr = (0..size).map(|c| row[k + 1 + c] * v[c]).sum();
        }
        let vp: f64 = v.iter().zip(&p).map(|(a, b)| a * b).sum();
        let w: Vec<f64> = p.iter().zip(&v).map(|(pi, vi)| pi - vp * vi).collect();
        for r in 0..size {
            for c in 0..size {
                a[k + 1 + r][k + 1 + c] -= 2.0 * (v[r] * w[c] + w[r] * v[c]);
            }
        }
        e[k] = beta;
        for i in k + 1..n {
            a[i][k] = 0.0;
            a[k][i] = 0.0;
        }
    }
    if n >= 2 {
        e[n - 2] = a[n - 1][n - 2];
    }
    let d = (0..n).map(|i| a[i][i]).collect();
    (d, e)
}

/// Implicit QL with Wilkinson-style shifts on a symmetric tridiagonal
/// matrix. Overwrites `d` with the eigenvalues (unsorted).
fn tridiagonal_ql(d: &mut [f64], sub: &[f64]) -> Result<usize> {
    let n = d.len();
    let mut e = vec![0.0; n];
    e[..sub.len()].copy_from_slice(sub);
    let mut total = 0;

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            total += 1;
            if iter > MAX_SWEEPS_PER_EIGENVALUE {
                return Err(Error::NoConvergence {
                    what: "tridiagonal QL",
                    iterations: total,
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(total)
}

/// Eigenvalues of a symmetric matrix in ascending order, plus the number of
/// QL sweeps used.
pub(super) fn symmetric_eigenvalues(m: &DenseMatrix) -> Result<(Vec<f64>, usize)> {
    if m.order() == 0 {
        return Ok((Vec::new(), 0));
    }
    let (mut d, e) = tridiagonalize(m);
    let sweeps = tridiagonal_ql(&mut d, &e)?;
    d.sort_by(f64::total_cmp);
    Ok((d, sweeps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[f64]]) -> DenseMatrix {
        DenseMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn diagonal_and_two_by_two() {
        let (ev, _) = symmetric_eigenvalues(&dense(&[&[3.0, 0.0], &[0.0, -1.0]])).unwrap();
        assert_eq!(ev, vec![-1.0, 3.0]);
        let (ev, _) = symmetric_eigenvalues(&dense(&[&[2.0, 1.0], &[1.0, 2.0]])).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-15 && (ev[1] - 3.0).abs() < 1e-15);
        let (ev, _) = symmetric_eigenvalues(&dense(&[&[5.0]])).unwrap();
        assert_eq!(ev, vec![5.0]);
    }

    #[test]
    fn agrees_with_nalgebra_on_dense_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in [3usize, 7, 16, 33] {
            let mut m = DenseMatrix::zeros(n);
            for i in 0..n {
                for j in i..n {
                    let x: f64 = rng.gen_range(-2.0..2.0);
                    m.set(i, j, x);
                    m.set(j, i, x);
                }
            }
            let (ours, _) = symmetric_eigenvalues(&m).unwrap();
            let na = nalgebra::DMatrix::from_fn(n, n, |i, j| m.get(i, j));
            let mut theirs: Vec<f64> = na.symmetric_eigenvalues().iter().copied().collect();
            theirs.sort_by(f64::total_cmp);
            for (a, b) in ours.iter().zip(&theirs) {
                assert!((a - b).abs() < 1e-11, "n={n}: {a} vs {b}");
            }
        }
    }
}
