//! The R-matrix of the vector representation and its defining identities.

use super::free::FreeMatrixExpr;
use crate::report::{timed, Check, Report};
use crate::scalars::Field;

/// Dense square matrix of scalars, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareMatrix<F> {
    pub dim: usize,
    pub data: Vec<F>,
}

impl<F: Field> SquareMatrix<F> {
    pub fn zeros(dim: usize) -> Self {
        SquareMatrix { dim, data: vec![F::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = F::one();
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.dim + j] = v;
    }

    pub fn mul(&self, o: &Self) -> Self {
        let d = self.dim;
        let mut r = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        r.data[i * d + j] = r.data[i * d + j].add(&a.mul(b));
                    }
                }
            }
        }
        r
    }

    pub fn add(&self, o: &Self) -> Self {
        SquareMatrix { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        SquareMatrix { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &F) -> Self {
        SquareMatrix { dim: self.dim, data: self.data.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let mut r = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                r.data[j * d + i] = self.get(i, j).clone();
            }
        }
        r
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.dim;
        let mut a = self.clone();
        let mut inv = Self::identity(d);
        for c in 0..d {
            let p = (c..d).find(|&r| !a.get(r, c).is_zero())?;
            if p != c {
                for j in 0..d {
                    a.data.swap(p * d + j, c * d + j);
                    inv.data.swap(p * d + j, c * d + j);
                }
            }
            let s = a.get(c, c).inv().ok()?;
            for j in 0..d {
                a.data[c * d + j] = a.data[c * d + j].mul(&s);
                inv.data[c * d + j] = inv.data[c * d + j].mul(&s);
            }
            for r in 0..d {
                if r == c || a.get(r, c).is_zero() {
                    continue;
                }
                let f = a.get(r, c).clone();
                for j in 0..d {
                    let x = a.data[c * d + j].mul(&f);
                    a.data[r * d + j] = a.data[r * d + j].sub(&x);
                    let y = inv.data[c * d + j].mul(&f);
                    inv.data[r * d + j] = inv.data[r * d + j].sub(&y);
                }
            }
        }
        Some(inv)
    }

    /// Kronecker product `self ⊗ o`.
    pub fn kron(&self, o: &Self) -> Self {
        let (a, b) = (self.dim, o.dim);
        let mut r = Self::zeros(a * b);
        for i in 0..a {
            for j in 0..a {
                let x = self.get(i, j);
                if x.is_zero() {
                    continue;
                }
                for k in 0..b {
                    for l in 0..b {
                        r.set(i * b + k, j * b + l, x.mul(o.get(k, l)));
                    }
                }
            }
        }
        r
    }

    pub fn to_expr(&self) -> FreeMatrixExpr<F> {
        FreeMatrixExpr::from_scalars(self.dim, self.dim, &self.data)
    }
}

/// Swap `e_i ⊗ e_j ↦ e_j ⊗ e_i` on `V ⊗ V`, `dim V = n`.
pub fn swap_matrix<F: Field>(n: usize) -> SquareMatrix<F> {
    let mut p = SquareMatrix::zeros(n * n);
    for i in 0..n {
        for j in 0..n {
            p.set(j * n + i, i * n + j, F::one());
        }
    }
    p
}

/// `M^{t1}` for `M` acting on `V ⊗ V`.
pub fn partial_transpose_first<F: Field>(m: &SquareMatrix<F>, n: usize) -> SquareMatrix<F> {
    let mut r = SquareMatrix::zeros(n * n);
    for i1 in 0..n {
        for i2 in 0..n {
            for j1 in 0..n {
                for j2 in 0..n {
                    r.set(i1 * n + i2, j1 * n + j2, m.get(j1 * n + i2, i1 * n + j2).clone());
                }
            }
        }
    }
    r
}

/// `M^{t2}` for `M` acting on `V ⊗ V`.
pub fn partial_transpose_second<F: Field>(m: &SquareMatrix<F>, n: usize) -> SquareMatrix<F> {
    let mut r = SquareMatrix::zeros(n * n);
    for i1 in 0..n {
        for i2 in 0..n {
            for j1 in 0..n {
                for j2 in 0..n {
                    r.set(i1 * n + i2, j1 * n + j2, m.get(i1 * n + j2, j1 * n + i2).clone());
                }
            }
        }
    }
    r
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericRMatrix<F> {
    pub n: usize,
    pub matrix: SquareMatrix<F>,
}

/// `E_ab ⊗ E_cd` sends `e_b ⊗ e_d` to `e_a ⊗ e_c`.
fn put_unit_pair<F: Field>(m: &mut SquareMatrix<F>, n: usize, (a, b): (usize, usize), (c, d): (usize, usize), v: &F) {
    let r = a * n + c;
    let k = b * n + d;
    let cur = m.get(r, k).add(v);
    m.set(r, k, cur);
}

fn build_r<F: Field>(n: usize, q: &F, lower: bool) -> NumericRMatrix<F> {
    let mut m = SquareMatrix::zeros(n * n);
    let qq = q.sub(&q.inv().expect("q is nonzero"));
    for i in 0..n {
        for j in 0..n {
            if i == j {
                put_unit_pair(&mut m, n, (i, i), (i, i), q);
            } else {
                put_unit_pair(&mut m, n, (i, i), (j, j), &F::one());
            }
            if (lower && i > j) || (!lower && i < j) {
                put_unit_pair(&mut m, n, (j, i), (i, j), &qq);
            }
        }
    }
    NumericRMatrix { n, matrix: m }
}

/// `R = qΣE_ii⊗E_ii + Σ_{i≠j}E_ii⊗E_jj + (q−q⁻¹)Σ_{i>j}E_ji⊗E_ij`, the form used in every relation.
pub fn r_matrix<F: Field>(n: usize, q: &F) -> NumericRMatrix<F> {
    build_r(n, q, true)
}

/// The restriction of the universal R-matrix to `V ⊗ V`, i.e. the transpose of [`r_matrix`].
pub fn r_matrix_universal<F: Field>(n: usize, q: &F) -> NumericRMatrix<F> {
    build_r(n, q, false)
}

impl<F: Field> NumericRMatrix<F> {
    /// `R_21 = P R P`.
    pub fn r21(&self) -> SquareMatrix<F> {
        let p = swap_matrix(self.n);
        p.mul(&self.matrix).mul(&p)
    }

    pub fn inverse(&self) -> Option<SquareMatrix<F>> {
        self.matrix.inverse()
    }

    /// Placements `R_12, R_13, R_23` on `V^{⊗3}`.
    pub fn three_slot(&self) -> [SquareMatrix<F>; 3] {
        let id = SquareMatrix::identity(self.n);
        let r12 = self.matrix.kron(&id);
        let r23 = id.kron(&self.matrix);
        let p23 = id.kron(&swap_matrix(self.n));
        let r13 = p23.mul(&r12).mul(&p23);
        [r12, r13, r23]
    }
}

/// Quantum Yang-Baxter equation and the Hecke condition for the R-matrix of rank `n`.
pub fn check_r_constants<F: Field>(n: usize, q: &F) -> Report {
    let mut rep = Report::new("r-constants").param("n", n as u64).param("field", F::NAME);
    let r = r_matrix(n, q);
    let rinv = r.inverse();
    rep.push(timed(|| Check::from_bool("invertible", rinv.is_some(), || "R is singular".into())));
    rep.push(timed(|| {
        let [r12, r13, r23] = r.three_slot();
        let lhs = r12.mul(&r13).mul(&r23);
        let rhs = r23.mul(&r13).mul(&r12);
        Check::from_bool("qybe", lhs == rhs, || {
            let bad = lhs.data.iter().zip(&rhs.data).position(|(a, b)| a != b).unwrap_or(0);
            format!("first differing entry at index {}", bad)
        })
    }));
    rep.push(timed(|| match &rinv {
        None => Check::fail("hecke", "R is singular"),
        Some(ri) => {
            let p = swap_matrix(n);
            let qq = q.sub(&q.inv().expect("q is nonzero"));
            let lhs = p.mul(&r.matrix).sub(&ri.mul(&p));
            let rhs = SquareMatrix::identity(n * n).scale(&qq);
            Check::from_bool("hecke", lhs == rhs, || "τR − R⁻¹τ differs from (q−q⁻¹)·Id".into())
        }
    }));
    rep.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Fp, RatFunc};

    fn q() -> RatFunc {
        RatFunc::variable(0).unwrap()
    }

    #[test]
    fn rank_one_is_q() {
        let r = r_matrix(1, &q());
        assert_eq!(r.matrix.data, vec![q()]);
        assert!(check_r_constants(1, &q()).all_pass());
    }

    #[test]
    fn rank_two_entries() {
        let q = q();
        let r = r_matrix(2, &q);
        let qq = q.sub(&q.inv().unwrap());
        // basis order e1⊗e1, e1⊗e2, e2⊗e1, e2⊗e2
        assert_eq!(r.matrix.get(0, 0), &q);
        assert_eq!(r.matrix.get(3, 3), &q);
        assert_eq!(r.matrix.get(1, 1), &RatFunc::one());
        assert_eq!(r.matrix.get(2, 2), &RatFunc::one());
        assert_eq!(r.matrix.get(1, 2), &qq);
        assert!(r.matrix.get(2, 1).is_zero());
        let u = r_matrix_universal(2, &q);
        assert_eq!(u.matrix, r.matrix.transpose());
    }

    #[test]
    fn both_placements_satisfy_the_identities() {
        for n in 1..=3 {
            assert!(check_r_constants(n, &q()).all_pass(), "n = {}", n);
            let u = r_matrix_universal(n, &q());
            let [a, b, c] = u.three_slot();
            assert_eq!(a.mul(&b).mul(&c), c.mul(&b).mul(&a));
        }
    }

    #[test]
    fn inverse_is_r_at_q_inverse() {
        let qv = Fp::from_i64(7);
        let r = r_matrix(3, &qv);
        let ri = r.inverse().unwrap();
        assert_eq!(r.matrix.mul(&ri), SquareMatrix::identity(9));
        assert_eq!(ri, r_matrix(3, &qv.inv().unwrap()).matrix);
    }

    #[test]
    fn partial_transposes_compose_to_transpose() {
        let r = r_matrix(2, &Fp::from_i64(5)).matrix;
        let t = partial_transpose_second(&partial_transpose_first(&r, 2), 2);
        assert_eq!(t, r.transpose());
    }
}
