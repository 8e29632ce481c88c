//! Laurent polynomials in x1..xn, permutations, weights and the rational
//! coefficients carried by difference operators.

use crate::scalars::Field;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Largest supported number of x-variables.
pub const MAXN: usize = 4;

pub type Exp = [i32; MAXN];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("weight {0:?} is not dominant")]
    NonDominantWeight(Vec<i32>),
    #[error("weights {0:?} and {1:?} have different degree")]
    UnequalDegree(Vec<i32>, Vec<i32>),
    #[error("rank {0} exceeds the supported maximum")]
    RankTooLarge(usize),
}

/// Permutation of {0..n-1}; `img[i]` is the image of `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm {
    n: u8,
    img: [u8; MAXN],
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAXN);
        let mut img = [0u8; MAXN];
        for (i, v) in img.iter_mut().enumerate() {
            *v = i as u8;
        }
        Perm { n: n as u8, img }
    }

    pub fn from_images(v: &[usize]) -> Self {
        let mut p = Self::identity(v.len());
        for (i, &x) in v.iter().enumerate() {
            p.img[i] = x as u8;
        }
        p
    }

    /// The transposition of `i` and `i + 1` (0-based).
    pub fn simple(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.img.swap(i, i + 1);
        p
    }

    /// `i -> i + 1 mod n`.
    pub fn cycle(n: usize) -> Self {
        let mut p = Self::identity(n);
        for i in 0..n {
            p.img[i] = ((i + 1) % n) as u8;
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n()).all(|i| self.apply(i) == i)
    }

    /// `(self ∘ o)(i) = self(o(i))`.
    pub fn compose(&self, o: &Perm) -> Perm {
        let mut p = Self::identity(self.n());
        for i in 0..self.n() {
            p.img[i] = self.img[o.img[i] as usize];
        }
        p
    }

    pub fn inverse(&self) -> Perm {
        let mut p = Self::identity(self.n());
        for i in 0..self.n() {
            p.img[self.img[i] as usize] = i as u8;
        }
        p
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut l = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.img[i] > self.img[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// A reduced word `[i1, .., ik]` with `self = s_i1 ∘ .. ∘ s_ik`.
    pub fn reduced_word(&self) -> Vec<usize> {
        // bubble sort the one-line notation; each swap peels off a right factor
        let mut w: Vec<u8> = self.img[..self.n()].to_vec();
        let mut word = Vec::new();
        while let Some(i) = (0..self.n().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            w.swap(i, i + 1);
            word.push(i);
        }
        word.reverse();
        word
    }

    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        permute(&mut cur, 0, &mut out);
        out.sort();
        out
    }

    /// `(w·ν)_{w(i)} = ν_i`.
    pub fn act_on_exp(&self, nu: &Exp) -> Exp {
        let mut r = [0; MAXN];
        for i in 0..self.n() {
            r[self.apply(i)] = nu[i];
        }
        r
    }
}

fn permute(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Perm>) {
    if k == cur.len() {
        out.push(Perm::from_images(cur));
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permute(cur, k + 1, out);
        cur.swap(k, i);
    }
}

/// Integer weight; dominant when weakly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn new(v: Vec<i32>) -> Self {
        Weight(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn size(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn abs_size(&self) -> i32 {
        self.0.iter().map(|x| x.abs()).sum()
    }

    pub fn exp(&self) -> Exp {
        let mut e = [0; MAXN];
        e[..self.n()].copy_from_slice(&self.0);
        e
    }

    pub fn shifted(&self, m: i32) -> Weight {
        Weight(self.0.iter().map(|x| x + m).collect())
    }

    /// Dominant weights of rank `n` with entries in `[0, d]` and total degree `d`.
    pub fn partitions(n: usize, d: i32) -> Vec<Weight> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        parts(n, d, d, &mut cur, &mut out);
        out
    }
}

fn parts(n: usize, rem: i32, max: i32, cur: &mut Vec<i32>, out: &mut Vec<Weight>) {
    if cur.len() == n {
        if rem == 0 {
            out.push(Weight(cur.clone()));
        }
        return;
    }
    for v in (0..=rem.min(max)).rev() {
        cur.push(v);
        parts(n, rem - v, v, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", v.join(","))
    }
}

/// Partial-sum dominance `mu <= lambda`.
pub fn dominance_leq(mu: &Weight, lambda: &Weight) -> Result<bool, LaurentError> {
    if mu.n() != lambda.n() || mu.size() != lambda.size() {
        return Err(LaurentError::UnequalDegree(mu.0.clone(), lambda.0.clone()));
    }
    let (mut a, mut b) = (0, 0);
    for (x, y) in mu.0.iter().zip(&lambda.0) {
        a += x;
        b += y;
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cmp_exp_rev(a: &Exp, b: &Exp) -> Ordering {
    b.cmp(a)
}

/// Laurent polynomial in x1..xn.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<F> {
    n: usize,
    terms: BTreeMap<Exp, F>,
}

impl<F: Field> LaurentPoly<F> {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAXN, "rank {} exceeds {}", n, MAXN);
        LaurentPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, F::one())
    }

    pub fn constant(n: usize, c: F) -> Self {
        Self::monomial(n, [0; MAXN], c)
    }

    pub fn monomial(n: usize, e: Exp, c: F) -> Self {
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = [0; MAXN];
        e[i] = 1;
        Self::monomial(n, e, F::one())
    }

    pub fn from_terms(n: usize, it: impl IntoIterator<Item = (Exp, F)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &F)> {
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

    pub fn coeff(&self, e: &Exp) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, e: Exp, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let (mut big, small) = if self.len() >= o.len() { (self.clone(), o) } else { (o.clone(), self) };
        for (e, c) in &small.terms {
            big.add_term(*e, c.clone());
        }
        big
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c.neg());
        }
        r
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { n: self.n, terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect() }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        LaurentPoly { n: self.n, terms: self.terms.iter().map(|(e, a)| (*e, a.mul(c))).collect() }
    }

    pub fn mul_monomial(&self, m: &Exp, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, a)| (add_exp(e, m), a.mul(c))).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.n);
        }
        if o.len() == 1 {
            let (e, c) = o.terms.iter().next().expect("one term");
            return self.mul_monomial(e, c);
        }
        if self.len() == 1 {
            let (e, c) = self.terms.iter().next().expect("one term");
            return o.mul_monomial(e, c);
        }
        let mut r = Self::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                r.add_term(add_exp(ea, eb), ca.mul(cb));
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one(self.n);
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// `(S_w p)(x) = p(x_{w(1)}, .., x_{w(n)})`.
    pub fn act_symmetry(&self, w: &Perm) -> Self {
        LaurentPoly { n: self.n, terms: self.terms.iter().map(|(e, c)| (w.act_on_exp(e), c.clone())).collect() }
    }

    /// Multiplies the coefficient of `x^α` by `q^{<μ, α>}`.
    pub fn act_shift(&self, mu: &Exp, q: &F) -> Self {
        if mu.iter().all(|&m| m == 0) {
            return self.clone();
        }
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let d: i64 = (0..self.n).map(|i| mu[i] as i64 * e[i] as i64).sum();
                    (*e, c.mul(&q.pow(d)))
                })
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| self.act_symmetry(&Perm::simple(self.n, i)) == *self)
    }

    pub fn eval(&self, x: &[F]) -> F {
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..self.n {
                if e[i] != 0 {
                    t = t.mul(&x[i].pow(e[i] as i64));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Largest exponent in reverse-lex order, i.e. lexicographically largest.
    pub fn leading_exp(&self) -> Option<Exp> {
        self.terms.keys().next_back().copied()
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> LaurentPoly<G> {
        LaurentPoly::from_terms(self.n, self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Substitutes `x_i = c x_j`.
    fn substitute_ratio(&self, i: usize, j: usize, c: &F) -> Self {
        let mut r = Self::zero(self.n);
        for (e, a) in &self.terms {
            let mut e2 = *e;
            e2[j] += e2[i];
            e2[i] = 0;
            r.add_term(e2, a.mul(&c.pow(e[i] as i64)));
        }
        r
    }

    /// Exact quotient by `x_i - c x_j`, if it divides.
    pub fn div_binomial(&self, i: usize, j: usize, c: &F) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if !self.substitute_ratio(i, j, c).is_zero() {
            return None;
        }
        // coefficients by power of x_i
        let mut by_pow: BTreeMap<i32, LaurentPoly<F>> = BTreeMap::new();
        for (e, a) in &self.terms {
            let mut e2 = *e;
            let k = e2[i];
            e2[i] = 0;
            by_pow.entry(k).or_insert_with(|| Self::zero(self.n)).add_term(e2, a.clone());
        }
        let lo = *by_pow.keys().next().expect("nonzero");
        let hi = *by_pow.keys().next_back().expect("nonzero");
        let d = (hi - lo) as usize;
        let mut cx = [0; MAXN];
        cx[j] = 1;
        let a = |k: usize| by_pow.get(&(lo + k as i32)).cloned().unwrap_or_else(|| Self::zero(self.n));
        let mut b: Vec<LaurentPoly<F>> = vec![Self::zero(self.n); d.max(1)];
        if d == 0 {
            return None;
        }
        b[d - 1] = a(d);
        for k in (1..d).rev() {
            b[k - 1] = a(k).add(&b[k].mul_monomial(&cx, c));
        }
        let mut q = Self::zero(self.n);
        for (k, bk) in b.into_iter().enumerate() {
            let mut sh = [0; MAXN];
            sh[i] = lo + k as i32;
            for (e, v) in bk.terms {
                q.add_term(add_exp(&e, &sh), v);
            }
        }
        Some(q)
    }

    /// Total degree range `(min, max)` of the terms.
    pub fn degree_range(&self) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e[..self.n].iter().sum::<i32>());
        let first = it.next()?;
        Some(it.fold((first, first), |(a, b), d| (a.min(d), b.max(d))))
    }
}

impl<F: Field> fmt::Display for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Exp> = self.terms.keys().collect();
        keys.sort_by(|a, b| cmp_exp_rev(a, b));
        let mut first = true;
        for e in keys {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = &self.terms[e];
            let mono: Vec<String> = (0..self.n)
                .filter(|&i| e[i] != 0)
                .map(|i| if e[i] == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e[i]) })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", c, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

pub fn add_exp(a: &Exp, b: &Exp) -> Exp {
    let mut r = *a;
    for i in 0..MAXN {
        r[i] += b[i];
    }
    r
}

/// Orbit sum of `x^λ`, each distinct monomial once.
pub fn monomial_symmetric<F: Field>(lambda: &Weight, n: usize) -> Result<LaurentPoly<F>, LaurentError> {
    if n > MAXN {
        return Err(LaurentError::RankTooLarge(n));
    }
    if lambda.n() != n || !lambda.is_dominant() {
        return Err(LaurentError::NonDominantWeight(lambda.0.clone()));
    }
    let mut p = LaurentPoly::zero(n);
    let base = lambda.exp();
    let mut seen = std::collections::BTreeSet::new();
    for w in Perm::all(n) {
        let e = w.act_on_exp(&base);
        if seen.insert(e) {
            p.add_term(e, F::one());
        }
    }
    Ok(p)
}

/// Denominator factor `(x_i - c x_j)^mult` with `i < j`.
#[derive(Clone, PartialEq, Debug)]
pub struct DenFactor<F> {
    pub i: usize,
    pub j: usize,
    pub c: F,
    pub mult: u32,
}

/// `num / ∏ den`, with binomial denominators.
#[derive(Clone)]
pub struct RationalCoeff<F> {
    num: LaurentPoly<F>,
    den: Vec<DenFactor<F>>,
}

impl<F: Field> PartialEq for RationalCoeff<F> {
    fn eq(&self, o: &Self) -> bool {
        self.equals(o)
    }
}

impl<F: Field> RationalCoeff<F> {
    pub fn zero(n: usize) -> Self {
        RationalCoeff { num: LaurentPoly::zero(n), den: Vec::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::from_poly(LaurentPoly::one(n))
    }

    pub fn constant(n: usize, c: F) -> Self {
        Self::from_poly(LaurentPoly::constant(n, c))
    }

    pub fn from_poly(p: LaurentPoly<F>) -> Self {
        RationalCoeff { num: p, den: Vec::new() }
    }

    /// `num / (x_i - c x_j)`; any ordering of `i, j` is accepted.
    pub fn over_binomial(num: LaurentPoly<F>, i: usize, j: usize, c: F) -> Self {
        let mut r = Self::from_poly(num);
        r.push_factor(i, j, c, 1);
        r.cancel();
        r
    }

    pub fn n(&self) -> usize {
        self.num.n
    }

    pub fn num(&self) -> &LaurentPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &[DenFactor<F>] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_poly(&self) -> Option<&LaurentPoly<F>> {
        self.den.is_empty().then_some(&self.num)
    }

    fn push_factor(&mut self, i: usize, j: usize, c: F, mult: u32) {
        if mult == 0 {
            return;
        }
        // x_i - c x_j = -c (x_j - c^-1 x_i)
        let (i, j, c) = if i < j {
            (i, j, c)
        } else {
            let ci = c.inv().expect("nonzero factor ratio");
            let scale = c.neg().pow(-(mult as i64));
            self.num = self.num.scale(&scale);
            (j, i, ci)
        };
        if let Some(f) = self.den.iter_mut().find(|f| f.i == i && f.j == j && f.c == c) {
            f.mult += mult;
        } else {
            self.den.push(DenFactor { i, j, c, mult });
        }
    }

    fn factor_poly(n: usize, f: &DenFactor<F>) -> LaurentPoly<F> {
        let mut ei = [0; MAXN];
        ei[f.i] = 1;
        let mut ej = [0; MAXN];
        ej[f.j] = 1;
        LaurentPoly::from_terms(n, [(ei, F::one()), (ej, f.c.neg())])
    }

    fn mult_of(&self, f: &DenFactor<F>) -> u32 {
        self.den.iter().find(|g| g.i == f.i && g.j == f.j && g.c == f.c).map(|g| g.mult).unwrap_or(0)
    }

    /// Divides out common binomial factors between numerator and denominator.
    pub fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        for f in self.den.iter_mut() {
            while f.mult > 0 {
                match self.num.div_binomial(f.i, f.j, &f.c) {
                    Some(q) => {
                        self.num = q;
                        f.mult -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|f| f.mult > 0);
    }

    /// Common denominator of two coefficients, as a factor list.
    fn lcm_den(&self, o: &Self) -> Vec<DenFactor<F>> {
        let mut l = self.den.clone();
        for f in &o.den {
            match l.iter_mut().find(|g| g.i == f.i && g.j == f.j && g.c == f.c) {
                Some(g) => g.mult = g.mult.max(f.mult),
                None => l.push(f.clone()),
            }
        }
        l
    }

    /// Numerator over the denominator `l`, which must be a multiple of `self.den`.
    fn num_over(&self, l: &[DenFactor<F>]) -> LaurentPoly<F> {
        let mut num = self.num.clone();
        for f in l {
            let extra = f.mult - self.mult_of(f);
            if extra > 0 {
                num = num.mul(&Self::factor_poly(self.n(), f).pow(extra));
            }
        }
        num
    }

    pub fn add(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den.is_empty() && o.den.is_empty() {
            return Self::from_poly(self.num.add(&o.num));
        }
        let l = self.lcm_den(o);
        let mut r = RationalCoeff { num: self.num_over(&l).add(&o.num_over(&l)), den: l };
        r.cancel();
        r
    }

    pub fn neg(&self) -> Self {
        RationalCoeff { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.n());
        }
        let mut r = RationalCoeff { num: self.num.mul(&o.num), den: self.den.clone() };
        for f in &o.den {
            r.push_factor(f.i, f.j, f.c.clone(), f.mult);
        }
        if !o.den.is_empty() || !self.den.is_empty() {
            r.cancel();
        }
        r
    }

    pub fn mul_poly(&self, p: &LaurentPoly<F>) -> Self {
        let mut r = RationalCoeff { num: self.num.mul(p), den: self.den.clone() };
        if !r.den.is_empty() {
            r.cancel();
        }
        r
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n());
        }
        RationalCoeff { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn equals(&self, o: &Self) -> bool {
        if self.den.is_empty() && o.den.is_empty() {
            return self.num == o.num;
        }
        let l = self.lcm_den(o);
        self.num_over(&l) == o.num_over(&l)
    }

    pub fn act_symmetry(&self, w: &Perm) -> Self {
        if w.is_identity() {
            return self.clone();
        }
        let mut r = Self::from_poly(self.num.act_symmetry(w));
        for f in &self.den {
            r.push_factor(w.apply(f.i), w.apply(f.j), f.c.clone(), f.mult);
        }
        r
    }

    pub fn act_shift(&self, mu: &Exp, q: &F) -> Self {
        if mu.iter().all(|&m| m == 0) {
            return self.clone();
        }
        let mut r = Self::from_poly(self.num.act_shift(mu, q));
        for f in &self.den {
            // q^{μ_i} x_i - c q^{μ_j} x_j = q^{μ_i} (x_i - c q^{μ_j - μ_i} x_j)
            let s = q.pow(-(mu[f.i] as i64) * f.mult as i64);
            r.num = r.num.scale(&s);
            r.push_factor(f.i, f.j, f.c.mul(&q.pow((mu[f.j] - mu[f.i]) as i64)), f.mult);
        }
        r
    }

    /// Value at a point where no denominator vanishes.
    pub fn eval(&self, x: &[F]) -> Option<F> {
        let mut d = F::one();
        for f in &self.den {
            let v = x[f.i].sub(&f.c.mul(&x[f.j]));
            d = d.mul(&v.pow(f.mult as i64));
        }
        Some(self.num.eval(x).mul(&d.inv().ok()?))
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> RationalCoeff<G> {
        let mut r = RationalCoeff::from_poly(self.num.map_coeffs(&f));
        for d in &self.den {
            r.push_factor(d.i, d.j, f(&d.c), d.mult);
        }
        r
    }
}

impl<F: Field> fmt::Display for RationalCoeff<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let mut ds: Vec<String> = self
            .den
            .iter()
            .map(|d| {
                let b = format!("(x{} - {}*x{})", d.i + 1, d.c, d.j + 1);
                if d.mult > 1 {
                    format!("{}^{}", b, d.mult)
                } else {
                    b
                }
            })
            .collect();
        ds.sort();
        write!(f, "({})/({})", self.num, ds.join("*"))
    }
}

impl<F: Field> fmt::Debug for RationalCoeff<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Fp, RatFunc};

    type P = LaurentPoly<Fp>;

    fn x(i: usize) -> P {
        P::var(2, i)
    }

    #[test]
    fn monomial_symmetric_examples() {
        let m = |v: Vec<i32>| monomial_symmetric::<Fp>(&Weight(v), 2).unwrap();
        assert_eq!(m(vec![0, 0]), P::one(2));
        assert_eq!(m(vec![1, 0]), x(0).add(&x(1)));
        assert_eq!(m(vec![2, 1]), x(0).pow(2).mul(&x(1)).add(&x(0).mul(&x(1).pow(2))));
        assert!(monomial_symmetric::<Fp>(&Weight(vec![0, 1]), 2).is_err());
    }

    #[test]
    fn dominance_examples() {
        let w = |v: Vec<i32>| Weight(v);
        assert!(dominance_leq(&w(vec![1, 1]), &w(vec![1, 1])).unwrap());
        assert!(dominance_leq(&w(vec![1, 1]), &w(vec![2, 0])).unwrap());
        assert!(!dominance_leq(&w(vec![2, 0]), &w(vec![1, 1])).unwrap());
        assert!(dominance_leq(&w(vec![2, 0]), &w(vec![1, 0])).is_err());
    }

    #[test]
    fn shift_and_symmetry_examples() {
        let q = RatFunc::var(0);
        let x1 = LaurentPoly::<RatFunc>::var(2, 0);
        let s = x1.act_shift(&[2, 0, 0, 0], &q);
        assert_eq!(s, x1.scale(&q.pow(2)));
        assert_eq!(x1.act_symmetry(&Perm::simple(2, 0)), LaurentPoly::var(2, 1));
        let one = LaurentPoly::<RatFunc>::one(2);
        assert_eq!(one.act_shift(&[3, -1, 0, 0], &q), one);
    }

    #[test]
    fn reduced_words_recompose() {
        for w in Perm::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let mut p = Perm::identity(4);
            for &i in &word {
                p = p.compose(&Perm::simple(4, i));
            }
            assert_eq!(p, w);
        }
    }

    #[test]
    fn binomial_division() {
        let c = Fp::new(5);
        let f = x(0).sub(&x(1).scale(&c));
        let g = x(0).pow(3).add(&x(1).mul_monomial(&[-1, 0, 0, 0], &Fp::one()));
        let prod = f.mul(&g);
        assert_eq!(prod.div_binomial(0, 1, &c), Some(g.clone()));
        assert_eq!(g.div_binomial(0, 1, &c), None);
    }

    #[test]
    fn rational_cancellation() {
        // (x1^2 - x2^2)/(x1 - x2) = x1 + x2
        let num = x(0).pow(2).sub(&x(1).pow(2));
        let r = RationalCoeff::over_binomial(num, 0, 1, Fp::one());
        assert!(r.is_polynomial());
        assert_eq!(r.num(), &x(0).add(&x(1)));
        // reversed orientation: 1/(x2 - x1) = -1/(x1 - x2)
        let a = RationalCoeff::over_binomial(P::one(2), 1, 0, Fp::one());
        let b = RationalCoeff::over_binomial(P::one(2).neg(), 0, 1, Fp::one());
        assert_eq!(a, b);
        assert!(a.add(&b.neg()).add(&b.neg()).add(&a).is_zero());
    }
}
