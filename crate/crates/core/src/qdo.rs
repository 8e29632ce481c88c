//! Difference–reflection operators: finite sums of `f(x) · τ^μ · S_w`.
//!
//! A term acts by `p ↦ f · τ^μ(S_w p)` where `(S_w p)(x) = p(x_{w(1)}, ..)` and
//! `τ^μ x^α = q^{<μ,α>} x^α`. Shift exponents are in base q.

use crate::laurent::{Exp, LaurentPoly, Perm, RationalCoeff, MAXN};
use crate::scalars::Field;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QdoError {
    #[error("shift exponent {0:?} is odd")]
    OddShiftExponent(Vec<i32>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `A ↦ γ^{-1} A γ`.
    Inward,
    /// `A ↦ γ A γ^{-1}`.
    Outward,
}

pub type Key = (Perm, Exp);

#[derive(Clone)]
pub struct Dro<F> {
    n: usize,
    q: F,
    terms: BTreeMap<Key, RationalCoeff<F>>,
}

impl<F: Field> Dro<F> {
    pub fn zero(n: usize, q: &F) -> Self {
        Dro { n, q: q.clone(), terms: BTreeMap::new() }
    }

    pub fn identity(n: usize, q: &F) -> Self {
        Self::term(n, q, RationalCoeff::one(n), [0; MAXN], Perm::identity(n))
    }

    pub fn scalar(n: usize, q: &F, c: F) -> Self {
        Self::term(n, q, RationalCoeff::constant(n, c), [0; MAXN], Perm::identity(n))
    }

    pub fn term(n: usize, q: &F, coef: RationalCoeff<F>, mu: Exp, w: Perm) -> Self {
        let mut d = Self::zero(n, q);
        d.add_term((w, mu), coef);
        d
    }

    pub fn multiplication(p: LaurentPoly<F>, q: &F) -> Self {
        let n = p.n();
        Self::term(n, q, RationalCoeff::from_poly(p), [0; MAXN], Perm::identity(n))
    }

    pub fn coefficient(c: RationalCoeff<F>, q: &F) -> Self {
        let n = c.n();
        Self::term(n, q, c, [0; MAXN], Perm::identity(n))
    }

    pub fn shift(n: usize, q: &F, mu: Exp) -> Self {
        Self::term(n, q, RationalCoeff::one(n), mu, Perm::identity(n))
    }

    /// `τ_{x_i, q}^k`.
    pub fn shift_one(n: usize, q: &F, i: usize, k: i32) -> Self {
        let mut mu = [0; MAXN];
        mu[i] = k;
        Self::shift(n, q, mu)
    }

    pub fn perm(n: usize, q: &F, w: Perm) -> Self {
        Self::term(n, q, RationalCoeff::one(n), [0; MAXN], w)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &RationalCoeff<F>)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &Key) -> Option<&RationalCoeff<F>> {
        self.terms.get(key)
    }

    fn add_term(&mut self, key: Key, c: RationalCoeff<F>) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            Some(v) => {
                let s = v.add(&c);
                if !s.is_zero() {
                    self.terms.insert(key, s);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, c.neg());
        }
        r
    }

    pub fn neg(&self) -> Self {
        Dro { n: self.n, q: self.q.clone(), terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect() }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n, &self.q);
        }
        Dro { n: self.n, q: self.q.clone(), terms: self.terms.iter().map(|(k, v)| (*k, v.scale(c))).collect() }
    }

    /// Left multiplication by a coefficient function.
    pub fn left_mul(&self, f: &RationalCoeff<F>) -> Self {
        let mut r = Self::zero(self.n, &self.q);
        for (k, c) in &self.terms {
            r.add_term(*k, f.mul(c));
        }
        r
    }

    /// `(f,μ,w)∘(g,ν,v) = (f · τ^μ(S_w g), μ + w·ν, w∘v)`.
    pub fn compose(&self, o: &Self) -> Self {
        let mut r = Self::zero(self.n, &self.q);
        for ((w, mu), f) in &self.terms {
            for ((v, nu), g) in &o.terms {
                let g2 = g.act_symmetry(w).act_shift(mu, &self.q);
                let wnu = w.act_on_exp(nu);
                let mut key_mu = *mu;
                for i in 0..MAXN {
                    key_mu[i] += wnu[i];
                }
                r.add_term((w.compose(v), key_mu), f.mul(&g2));
            }
        }
        r
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.compose(o).sub(&o.compose(self))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::identity(self.n, &self.q);
        for _ in 0..k {
            r = r.compose(self);
        }
        r
    }

    pub fn apply(&self, p: &LaurentPoly<F>) -> RationalCoeff<F> {
        self.apply_rational(&RationalCoeff::from_poly(p.clone()))
    }

    pub fn apply_rational(&self, p: &RationalCoeff<F>) -> RationalCoeff<F> {
        let mut acc = RationalCoeff::zero(self.n);
        for ((w, mu), f) in &self.terms {
            acc = acc.add(&f.mul(&p.act_symmetry(w).act_shift(mu, &self.q)));
        }
        acc
    }

    /// Keywise coefficient equality.
    pub fn equals(&self, o: &Self) -> bool {
        self.sub(o).is_zero()
    }

    /// Conjugation by the Gaussian: each term is multiplied on the left by
    /// `q^{±Σμ_i²/4} ∏ x_i^{±μ_i/2}`.
    pub fn gaussian_conjugate(&self, dir: Direction) -> Result<Self, QdoError> {
        let mut r = Self::zero(self.n, &self.q);
        for ((w, mu), c) in &self.terms {
            if mu.iter().any(|m| m % 2 != 0) {
                return Err(QdoError::OddShiftExponent(mu[..self.n].to_vec()));
            }
            let sq: i64 = mu.iter().map(|&m| (m as i64) * (m as i64) / 4).sum();
            let mut e = [0; MAXN];
            for i in 0..self.n {
                e[i] = mu[i] / 2;
            }
            let (s, e) = match dir {
                Direction::Inward => (self.q.pow(sq), e),
                Direction::Outward => {
                    let mut ne = e;
                    for v in ne.iter_mut() {
                        *v = -*v;
                    }
                    (self.q.pow(-sq), ne)
                }
            };
            let m = LaurentPoly::monomial(self.n, e, s);
            r.add_term((*w, *mu), c.mul_poly(&m));
        }
        Ok(r)
    }

    /// Largest absolute shift exponent over all terms.
    pub fn max_shift(&self) -> i32 {
        self.terms.keys().flat_map(|(_, mu)| mu.iter().map(|m| m.abs())).max().unwrap_or(0)
    }

    pub fn map_coeffs<G: Field>(&self, q: &G, f: impl Fn(&F) -> G) -> Dro<G> {
        let mut r = Dro::zero(self.n, q);
        for (k, c) in &self.terms {
            r.add_term(*k, c.map_coeffs(&f));
        }
        r
    }
}

impl<F: Field> PartialEq for Dro<F> {
    fn eq(&self, o: &Self) -> bool {
        self.equals(o)
    }
}

impl<F: Field> fmt::Display for Dro<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((w, mu), c)| {
                let mut s = format!("[{}]", c);
                if mu.iter().any(|&m| m != 0) {
                    s.push_str(&format!("·τ{:?}", &mu[..self.n]));
                }
                if !w.is_identity() {
                    let img: Vec<usize> = (0..self.n).map(|i| w.apply(i) + 1).collect();
                    s.push_str(&format!("·S{:?}", img));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<F: Field> fmt::Debug for Dro<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Fp, RatFunc};

    fn q() -> RatFunc {
        RatFunc::var(0)
    }

    #[test]
    fn identity_acts_trivially() {
        let id = Dro::identity(2, &q());
        let p = LaurentPoly::var(2, 0).mul(&LaurentPoly::var(2, 1));
        assert!(id.apply(&p).equals(&RationalCoeff::from_poly(p.clone())));
        let a = Dro::shift_one(2, &q(), 0, 2);
        assert_eq!(a.compose(&id), a);
    }

    #[test]
    fn shifts_add() {
        let a = Dro::shift_one(2, &q(), 0, 2);
        let b = a.compose(&a);
        assert_eq!(b, Dro::shift_one(2, &q(), 0, 4));
    }

    #[test]
    fn gaussian_multiplier() {
        let qq = q();
        let tau = Dro::shift_one(2, &qq, 0, 2);
        let x1 = LaurentPoly::var(2, 0).scale(&qq);
        let expect = Dro::multiplication(x1, &qq).compose(&tau);
        assert_eq!(tau.gaussian_conjugate(Direction::Inward).unwrap(), expect);
        let taui = Dro::shift_one(2, &qq, 0, -2);
        let x1i = LaurentPoly::monomial(2, [-1, 0, 0, 0], qq.clone());
        let expect = Dro::multiplication(x1i, &qq).compose(&taui);
        assert_eq!(taui.gaussian_conjugate(Direction::Inward).unwrap(), expect);
        assert!(Dro::shift_one(2, &qq, 0, 1).gaussian_conjugate(Direction::Inward).is_err());
        let id = Dro::<RatFunc>::identity(2, &qq);
        assert_eq!(id.gaussian_conjugate(Direction::Outward).unwrap(), id);
    }

    #[test]
    fn distinct_keys_are_unequal() {
        let qq = Fp::new(3);
        let a = Dro::perm(2, &qq, Perm::simple(2, 0));
        assert!(!a.equals(&Dro::scalar(2, &qq, Fp::new(5))));
    }
}
