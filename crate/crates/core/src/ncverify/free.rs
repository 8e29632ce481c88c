//! Free associative algebra over a coefficient field, and matrices over it.

use crate::scalars::Field;
use std::collections::BTreeMap;

/// A word in the generators, read left to right.
pub type Word = Vec<u16>;

/// Finite linear combination of words. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeAlgElem<F> {
    terms: BTreeMap<Word, F>,
}

impl<F: Field> Default for FreeAlgElem<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> FreeAlgElem<F> {
    pub fn zero() -> Self {
        FreeAlgElem { terms: BTreeMap::new() }
    }

    pub fn scalar(c: F) -> Self {
        Self::monomial(Vec::new(), c)
    }

    pub fn one() -> Self {
        Self::scalar(F::one())
    }

    pub fn generator(g: u16) -> Self {
        Self::monomial(vec![g], F::one())
    }

    pub fn monomial(w: Word, c: F) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &F)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, F)> {
        self.terms.into_iter()
    }

    /// Length of the longest word, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    pub fn coeff(&self, w: &[u16]) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, w: Word, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Self, c: &F) {
        for (w, v) in &o.terms {
            self.add_term(w.clone(), v.mul(c));
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(o, &F::one());
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(o, &F::one().neg());
        r
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FreeAlgElem { terms: self.terms.iter().map(|(w, v)| (w.clone(), v.mul(c))).collect() }
    }

    /// Concatenation product.
    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut w = Vec::with_capacity(a.len() + b.len());
                w.extend_from_slice(a);
                w.extend_from_slice(b);
                r.add_term(w, x.mul(y));
            }
        }
        r
    }

    /// `u · self · v` for words `u`, `v`.
    pub fn sandwich(&self, u: &[u16], v: &[u16]) -> Self {
        FreeAlgElem {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| {
                    let mut x = Vec::with_capacity(u.len() + w.len() + v.len());
                    x.extend_from_slice(u);
                    x.extend_from_slice(w);
                    x.extend_from_slice(v);
                    (x, c.clone())
                })
                .collect(),
        }
    }

    /// Maps every coefficient, dropping those that become zero.
    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> FreeAlgElem<G> {
        let mut r = FreeAlgElem::zero();
        for (w, c) in &self.terms {
            r.add_term(w.clone(), f(c));
        }
        r
    }

    /// Deterministic rendering, terms in word order.
    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                if w.is_empty() {
                    format!("({})", c)
                } else {
                    let ws: Vec<&str> = w.iter().map(|&g| names[g as usize].as_str()).collect();
                    format!("({})*{}", c, ws.join("*"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// Rectangular matrix with free-algebra entries; row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeMatrixExpr<F> {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<FreeAlgElem<F>>,
}

impl<F: Field> FreeMatrixExpr<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FreeMatrixExpr { rows, cols, entries: vec![FreeAlgElem::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, FreeAlgElem::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> FreeAlgElem<F>) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        FreeMatrixExpr { rows, cols, entries }
    }

    /// Constant matrix from row-major scalars.
    pub fn from_scalars(rows: usize, cols: usize, data: &[F]) -> Self {
        Self::from_fn(rows, cols, |i, j| FreeAlgElem::scalar(data[i * cols + j].clone()))
    }

    pub fn get(&self, i: usize, j: usize) -> &FreeAlgElem<F> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: FreeAlgElem<F>) {
        self.entries[i * self.cols + j] = e;
    }

    pub fn entries(&self) -> &[FreeAlgElem<F>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// `self` on top of `o`.
    pub fn stack(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols, "shape mismatch");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&o.entries);
        FreeMatrixExpr { rows: self.rows + o.rows, cols: self.cols, entries }
    }

    pub fn max_degree(&self) -> usize {
        self.entries.iter().filter_map(|e| e.degree()).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        FreeMatrixExpr {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        FreeMatrixExpr {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        FreeMatrixExpr { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|e| e.scale(c)).collect() }
    }

    /// Matrix product; entries of `self` stand to the left.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut r = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let p = a.mul(b);
                    r.entries[i * o.cols + j].add_scaled(&p, &F::one());
                }
            }
        }
        r
    }

    /// `self ⊗ I_m`: the matrix placed in the first tensor slot.
    pub fn slot1(&self, m: usize) -> Self {
        Self::from_fn(self.rows * m, self.cols * m, |r, c| {
            if r % m == c % m {
                self.get(r / m, c / m).clone()
            } else {
                FreeAlgElem::zero()
            }
        })
    }

    /// `I_m ⊗ self`: the matrix placed in the second tensor slot.
    pub fn slot2(&self, m: usize) -> Self {
        let (rs, cs) = (self.rows, self.cols);
        Self::from_fn(rs * m, cs * m, |r, c| {
            if r / rs == c / cs {
                self.get(r % rs, c % cs).clone()
            } else {
                FreeAlgElem::zero()
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Fp;

    fn g(i: u16) -> FreeAlgElem<Fp> {
        FreeAlgElem::generator(i)
    }

    #[test]
    fn product_is_concatenation() {
        let a = g(0).add(&g(1));
        let b = g(2).scale(&Fp::from_i64(3));
        let p = a.mul(&b);
        assert_eq!(p.coeff(&[0, 2]), Fp::from_i64(3));
        assert_eq!(p.coeff(&[1, 2]), Fp::from_i64(3));
        assert_eq!(p.num_terms(), 2);
        assert!(a.sub(&a).is_zero());
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn slots_commute_for_scalars_and_multiply_entrywise() {
        let m = FreeMatrixExpr::from_fn(2, 2, |i, j| g((2 * i + j) as u16));
        let n = FreeMatrixExpr::from_fn(2, 2, |i, j| g((4 + 2 * i + j) as u16));
        // (M ⊗ I)(I ⊗ N) = M ⊗ N with M-entries on the left
        let p = m.slot1(2).mul(&n.slot2(2));
        assert_eq!(p.get(1, 2).coeff(&[1, 6]), Fp::one());
        assert_eq!(p.get(1, 2).num_terms(), 1);
        let id = FreeMatrixExpr::<Fp>::identity(4);
        assert_eq!(p.mul(&id), p);
        assert_eq!(id.mul(&p), p);
    }

    #[test]
    fn matrix_product_is_associative() {
        let a = FreeMatrixExpr::from_fn(2, 3, |i, j| g((i * 3 + j) as u16));
        let b = FreeMatrixExpr::from_fn(3, 2, |i, j| g((10 + i * 2 + j) as u16).add(&FreeAlgElem::one()));
        let c = FreeMatrixExpr::from_fn(2, 2, |i, j| g((20 + i * 2 + j) as u16));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }
}
