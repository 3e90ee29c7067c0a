//! Linear algebra over a prime field `F_p`, sized for class-algebra matrices
//! of groups of order at most 96 (`p` fits comfortably in `u64`).
//!
//! The character-table solver needs: simultaneous eigenspace splitting of a
//! commuting family of matrices, characteristic polynomials (via Hessenberg
//! reduction), root scans over `F_p`, and nullspaces.

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `a` must be nonzero mod `p`.
    pub fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }
}

pub type Vector = Vec<u64>;
pub type Matrix = Vec<Vec<u64>>;

/// Row-reduce `m` in place; returns pivot column indices.
fn row_reduce(f: Fp, m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = f.inv(m[r][c]);
        for x in c..cols {
            m[r][x] = f.mul(m[r][x], inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                for x in c..cols {
                    let adj = f.mul(factor, m[r][x]);
                    m[i][x] = f.sub(m[i][x], adj);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right nullspace of `m`.
pub fn nullspace(f: Fp, m: &Matrix) -> Vec<Vector> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    let mut reduced = m.clone();
    let pivots = row_reduce(f, &mut reduced);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(reduced[row][free]);
        }
        basis.push(v);
    }
    basis
}

pub fn mat_vec(f: Fp, m: &Matrix, v: &Vector) -> Vector {
    m.iter()
        .map(|row| {
            let mut acc = 0u64;
            for (a, b) in row.iter().zip(v) {
                acc = f.add(acc, f.mul(*a, *b));
            }
            acc
        })
        .collect()
}

/// Matrix of `a` restricted to the invariant subspace spanned by `basis`
/// (columns). Panics if the subspace is not invariant.
fn restrict(f: Fp, a: &Matrix, basis: &[Vector]) -> Matrix {
    let n = basis[0].len();
    let d = basis.len();
    // solve basis * X = a * basis column by column via an augmented RREF
    let mut aug: Matrix = (0..n)
        .map(|i| {
            let mut row = Vec::with_capacity(2 * d);
            for b in basis {
                row.push(b[i]);
            }
            row.extend(std::iter::repeat(0).take(d));
            row
        })
        .collect();
    for (j, b) in basis.iter().enumerate() {
        let img = mat_vec(f, a, b);
        for i in 0..n {
            aug[i][d + j] = img[i];
        }
    }
    let pivots = row_reduce(f, &mut aug);
    let rank = pivots.iter().filter(|&&c| c < d).count();
    assert_eq!(rank, d, "basis is not independent");
    assert!(pivots.iter().all(|&c| c < d), "subspace not invariant under matrix");
    let mut out = vec![vec![0u64; d]; d];
    for (row, &pc) in pivots.iter().enumerate() {
        for j in 0..d {
            out[pc][j] = aug[row][d + j];
        }
    }
    out
}

/// Characteristic polynomial coefficients (monic, low degree first) via
/// Hessenberg reduction.
fn charpoly(f: Fp, m: &Matrix) -> Vec<u64> {
    let n = m.len();
    let mut h = m.clone();
    // reduce to upper Hessenberg form by similarity transforms
    for c in 0..n.saturating_sub(2) {
        let Some(pr) = (c + 1..n).find(|&i| h[i][c] != 0) else {
            continue;
        };
        if pr != c + 1 {
            h.swap(pr, c + 1);
            for row in h.iter_mut() {
                row.swap(pr, c + 1);
            }
        }
        let inv = f.inv(h[c + 1][c]);
        for i in c + 2..n {
            if h[i][c] != 0 {
                let factor = f.mul(h[i][c], inv);
                // row_i -= factor * row_{c+1}, then col_{c+1} += factor * col_i
                for j in 0..n {
                    let adj = f.mul(factor, h[c + 1][j]);
                    h[i][j] = f.sub(h[i][j], adj);
                }
                for j in 0..n {
                    let adj = f.mul(factor, h[j][i]);
                    h[j][c + 1] = f.add(h[j][c + 1], adj);
                }
            }
        }
    }
    // p_k(x) = (x - h[k-1][k-1]) p_{k-1}(x)
    //          - sum_i h[i-1][k-1] (prod_{j=i..k-1} h[j][j-1]) p_{i-1}(x)
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let mut pk = vec![0u64; k + 1];
        let prev = polys[k - 1].clone();
        for (i, c) in prev.iter().enumerate() {
            pk[i + 1] = f.add(pk[i + 1], *c);
            let adj = f.mul(h[k - 1][k - 1], *c);
            pk[i] = f.sub(pk[i], adj);
        }
        let mut subprod = 1u64;
        for i in (1..k).rev() {
            subprod = f.mul(subprod, h[i][i - 1]);
            if subprod == 0 {
                break;
            }
            let factor = f.mul(h[i - 1][k - 1], subprod);
            if factor != 0 {
                for (j, c) in polys[i - 1].iter().enumerate() {
                    let adj = f.mul(factor, *c);
                    pk[j] = f.sub(pk[j], adj);
                }
            }
        }
        polys.push(pk);
    }
    polys.pop().unwrap()
}

fn poly_eval(f: Fp, poly: &[u64], x: u64) -> u64 {
    let mut acc = 0u64;
    for c in poly.iter().rev() {
        acc = f.add(f.mul(acc, x), *c);
    }
    acc
}

/// Split an `a`-invariant subspace into the eigenspaces of `a` restricted to
/// it. Eigenvalues are found by scanning the roots of the characteristic
/// polynomial over all of `F_p` (fine at this scale). The class matrices of a
/// finite group are diagonalizable with eigenvalues in `F_p` when
/// `exponent(G) | p - 1`, so the split is always complete here.
pub fn split_by_eigenspaces(f: Fp, a: &Matrix, basis: &[Vector]) -> Vec<Vec<Vector>> {
    let d = basis.len();
    if d == 1 {
        return vec![vec![basis[0].clone()]];
    }
    let m = restrict(f, a, basis);
    let poly = charpoly(f, &m);
    let mut out = Vec::new();
    let mut found = 0;
    for lambda in 0..f.p {
        if found == d {
            break;
        }
        if poly_eval(f, &poly, lambda) != 0 {
            continue;
        }
        let mut shifted = m.clone();
        for i in 0..d {
            shifted[i][i] = f.sub(shifted[i][i], lambda);
        }
        let small = nullspace(f, &shifted);
        if small.is_empty() {
            continue;
        }
        found += small.len();
        let lifted: Vec<Vector> = small
            .iter()
            .map(|coeffs| {
                let n = basis[0].len();
                let mut v = vec![0u64; n];
                for (c, b) in coeffs.iter().zip(basis) {
                    if *c != 0 {
                        for i in 0..n {
                            v[i] = f.add(v[i], f.mul(*c, b[i]));
                        }
                    }
                }
                v
            })
            .collect();
        out.push(lifted);
    }
    assert_eq!(found, d, "class matrix not diagonalizable over F_p");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_singular_matrix() {
        let f = Fp::new(7);
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 0, 0]];
        let ns = nullspace(f, &m);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert_eq!(mat_vec(f, &m, v), vec![0, 0, 0]);
        }
    }

    #[test]
    fn charpoly_of_diagonal_matrix() {
        let f = Fp::new(11);
        let m = vec![vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 3]];
        let poly = charpoly(f, &m);
        // (x-2)(x-3)^2 = x^3 - 8x^2 + 21x - 18 = x^3 + 3x^2 + 10x + 4 mod 11
        assert_eq!(poly, vec![4, 10, 3, 1]);
    }

    #[test]
    fn charpoly_of_dense_matrix() {
        let f = Fp::new(13);
        let m = vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]];
        // det(xI - M) = x^3 - 16x^2 - 12x + 3 = x^3 + 10x^2 + x + 3 mod 13
        assert_eq!(charpoly(f, &m), vec![3, 1, 10, 1]);
    }

    #[test]
    fn eigen_split_of_diagonalizable_matrix() {
        let f = Fp::new(13);
        let m = vec![vec![5, 0, 0], vec![0, 7, 0], vec![0, 1, 2]];
        let full: Vec<Vector> = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        let spaces = split_by_eigenspaces(f, &m, &full);
        assert_eq!(spaces.len(), 3);
        for space in spaces {
            assert_eq!(space.len(), 1);
            let v = &space[0];
            let img = mat_vec(f, &m, v);
            // image is a scalar multiple of v
            let (i, &pivot) = v.iter().enumerate().find(|(_, &x)| x != 0).unwrap();
            let lambda = f.mul(img[i], f.inv(pivot));
            for (a, b) in img.iter().zip(v) {
                assert_eq!(*a, f.mul(lambda, *b));
            }
        }
    }
}
