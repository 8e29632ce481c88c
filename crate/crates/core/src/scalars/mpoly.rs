//! Sparse multivariate polynomials over the integers, with exact division and gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Number of indeterminates: q, t, Z1..Z4.
pub const NVARS: usize = 6;

pub type Mono = [u16; NVARS];

fn mono_deg(m: &Mono) -> u32 {
    m.iter().map(|&e| e as u32).sum()
}

/// Graded lexicographic order.
pub fn mono_cmp(a: &Mono, b: &Mono) -> Ordering {
    mono_deg(a).cmp(&mono_deg(b)).then_with(|| a.cmp(b))
}

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut r = *a;
    for i in 0..NVARS {
        r[i] += b[i];
    }
    r
}

fn mono_div(a: &Mono, b: &Mono) -> Option<Mono> {
    let mut r = *a;
    for i in 0..NVARS {
        r[i] = a[i].checked_sub(b[i])?;
    }
    Some(r)
}

fn mono_min(a: &Mono, b: &Mono) -> Mono {
    let mut r = *a;
    for i in 0..NVARS {
        r[i] = a[i].min(b[i]);
    }
    r
}

/// Terms are kept sorted in decreasing graded-lex order with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: Vec<(Mono, BigInt)>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MPoly { terms: vec![([0; NVARS], c)] }
        }
    }

    pub fn var(i: usize) -> Self {
        let mut m = [0; NVARS];
        m[i] = 1;
        MPoly { terms: vec![(m, BigInt::one())] }
    }

    pub fn monomial(m: Mono, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MPoly { terms: vec![(m, c)] }
        }
    }

    fn from_unsorted(mut v: Vec<(Mono, BigInt)>) -> Self {
        v.sort_by(|a, b| mono_cmp(&b.0, &a.0));
        let mut out: Vec<(Mono, BigInt)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if last.1.is_zero() {
                out.pop();
            }
        }
        MPoly { terms: out }
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == [0; NVARS] && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == [0; NVARS])
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if *m == [0; NVARS] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Mono, BigInt)> {
        self.terms.first()
    }

    pub fn neg(&self) -> Self {
        MPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match mono_cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        MPoly { terms: out }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].0, &o.terms[0].1);
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut v = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                v.push((mono_mul(ma, mb), ca * cb));
            }
        }
        Self::from_unsorted(v)
    }

    pub fn mul_term(&self, m: &Mono, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        // multiplying by a monomial preserves graded-lex order
        MPoly { terms: self.terms.iter().map(|(a, b)| (mono_mul(a, m), b * c)).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.mul_term(&[0; NVARS], c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        r
    }

    fn div_mono_exact(&self, m: &Mono) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (mono_div(a, m).expect("monomial divides"), c.clone()))
                .collect(),
        }
    }

    /// Exact division; `None` when `d` does not divide `self` over Z.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dm, dc) = &d.terms[0];
        if d.terms.len() == 1 {
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let (qc, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                out.push((mono_div(m, dm)?, qc));
            }
            return Some(MPoly { terms: out });
        }
        let mut rem = self.clone();
        let mut quo = Vec::new();
        while let Some((rm, rc)) = rem.terms.first().cloned() {
            let qm = mono_div(&rm, dm)?;
            let (qc, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            rem = rem.sub(&d.mul_term(&qm, &qc));
            quo.push((qm, qc));
        }
        Some(MPoly { terms: quo })
    }

    /// Gcd of the integer coefficients, positive.
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn mono_content(&self) -> Mono {
        let mut it = self.terms.iter();
        let mut m = match it.next() {
            Some(t) => t.0,
            None => return [0; NVARS],
        };
        for (a, _) in it {
            m = mono_min(&m, a);
        }
        m
    }

    pub fn degree_in(&self, v: usize) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m[v]).max()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map(|t| mono_deg(&t.0)).unwrap_or(0)
    }

    fn has_var(&self, v: usize) -> bool {
        self.terms.iter().any(|(m, _)| m[v] > 0)
    }

    /// Coefficients with respect to variable `v`, indexed by degree.
    fn coeffs_in(&self, v: usize) -> Vec<MPoly> {
        let deg = self.degree_in(v).unwrap_or(0) as usize;
        let mut buckets: Vec<Vec<(Mono, BigInt)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut mm = *m;
            let d = mm[v] as usize;
            mm[v] = 0;
            buckets[d].push((mm, c.clone()));
        }
        buckets.into_iter().map(Self::from_unsorted).collect()
    }

    fn from_coeffs_in(v: usize, cs: &[MPoly]) -> Self {
        let mut acc = Vec::new();
        for (d, c) in cs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut mm = *m;
                mm[v] += d as u16;
                acc.push((mm, a.clone()));
            }
        }
        Self::from_unsorted(acc)
    }

    /// Sign-normalised so the leading coefficient is positive.
    pub fn normalize_sign(self) -> Self {
        match self.terms.first() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self,
        }
    }

    pub fn gcd(&self, o: &Self) -> Self {
        gcd(self, o).normalize_sign()
    }

    pub fn eval_with<T: Clone>(
        &self,
        vals: &[T; NVARS],
        one: T,
        from_int: impl Fn(&BigInt) -> T,
        add: impl Fn(T, T) -> T,
        mul: impl Fn(T, T) -> T,
    ) -> T {
        let mut acc: Option<T> = None;
        for (m, c) in &self.terms {
            let mut t = from_int(c);
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = mul(t, vals[i].clone());
                }
            }
            acc = Some(match acc {
                None => t,
                Some(a) => add(a, t),
            });
        }
        acc.unwrap_or_else(|| {
            let z = from_int(&BigInt::zero());
            let _ = one;
            z
        })
    }
}

fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_monomial() || b.is_monomial() {
        let m = mono_min(&a.mono_content(), &b.mono_content());
        let c = a.int_content().gcd(&b.int_content());
        return MPoly::monomial(m, c);
    }
    // strip common monomial factors first; they are cheap and common
    let (ma, mb) = (a.mono_content(), b.mono_content());
    if ma != [0; NVARS] || mb != [0; NVARS] {
        let m = mono_min(&ma, &mb);
        let g = gcd(&a.div_mono_exact(&ma), &b.div_mono_exact(&mb));
        return g.mul_term(&m, &BigInt::one());
    }
    let v = match (0..NVARS).find(|&v| a.has_var(v) || b.has_var(v)) {
        Some(v) => v,
        None => {
            return MPoly::constant(a.int_content().gcd(&b.int_content()));
        }
    };
    if !b.has_var(v) {
        return gcd(&content_in(a, v), b);
    }
    if !a.has_var(v) {
        return gcd(a, &content_in(b, v));
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let g = prs_gcd(v, pa, pb);
    c.mul(&g)
}

fn content_in(a: &MPoly, v: usize) -> MPoly {
    let cs = a.coeffs_in(v);
    let mut g = MPoly::zero();
    for c in cs.iter().filter(|c| !c.is_zero()) {
        g = gcd(&g, c);
        if g.is_constant() && g.constant_value().map(|x| x.abs().is_one()).unwrap_or(false) {
            return MPoly::one();
        }
    }
    g.normalize_sign()
}

fn primitive_in(a: &MPoly, v: usize) -> MPoly {
    let c = content_in(a, v);
    a.div_exact(&c).expect("content divides").normalize_sign()
}

/// Pseudo-remainder of `a` by `b` as polynomials in `v`.
fn prem(v: usize, a: &MPoly, b: &MPoly) -> MPoly {
    let bc = b.coeffs_in(v);
    let db = bc.len() - 1;
    let lb = bc[db].clone();
    let mut r = a.coeffs_in(v);
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        if lr.is_zero() {
            r.pop();
            continue;
        }
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.mul(&lb);
        }
        for (k, bk) in bc.iter().enumerate() {
            r[k + shift] = r[k + shift].sub(&lr.mul(bk));
        }
        r.pop();
        while matches!(r.last(), Some(c) if c.is_zero()) {
            r.pop();
        }
    }
    MPoly::from_coeffs_in(v, &r)
}

fn prs_gcd(v: usize, a: MPoly, b: MPoly) -> MPoly {
    let (mut r0, mut r1) = if a.degree_in(v) >= b.degree_in(v) { (a, b) } else { (b, a) };
    loop {
        if r1.is_zero() {
            return primitive_in(&r0, v);
        }
        if !r1.has_var(v) {
            return MPoly::one();
        }
        let r = prem(v, &r0, &r1);
        r0 = r1;
        r1 = if r.is_zero() { r } else { primitive_in(&r, v) };
    }
}

const VAR_NAMES: [&str; NVARS] = ["q", "t", "Z1", "Z2", "Z3", "Z4"];

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let ac = c.abs();
            let is_const = *m == [0; NVARS];
            if !ac.is_one() || is_const {
                write!(f, "{}", ac)?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "{}", VAR_NAMES[i])?;
                } else {
                    write!(f, "{}^{}", VAR_NAMES[i], e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> MPoly {
        MPoly::var(0)
    }
    fn t() -> MPoly {
        MPoly::var(1)
    }
    fn c(x: i64) -> MPoly {
        MPoly::constant(BigInt::from(x))
    }

    #[test]
    fn gcd_of_products() {
        let f = q().sub(&t()).mul(&q().add(&c(2)));
        let g = q().sub(&t()).mul(&t().add(&c(3)));
        let h = f.gcd(&g);
        assert_eq!(h, q().sub(&t()).normalize_sign());
    }

    #[test]
    fn gcd_with_integer_content() {
        let f = q().mul(&c(6)).add(&c(6));
        let g = q().mul(&c(4)).add(&c(4));
        assert_eq!(f.gcd(&g), q().add(&c(1)).scale(&BigInt::from(2)));
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = q().pow(3).sub(&t().pow(2)).add(&c(5));
        let b = q().mul(&t()).sub(&c(1));
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!(p.add(&c(1)).div_exact(&b), None);
    }

    #[test]
    fn multivariate_gcd_three_vars() {
        let z = MPoly::var(2);
        let common = q().mul(&z).sub(&t().pow(2));
        let f = common.mul(&q().add(&z)).mul(&common);
        let g = common.mul(&t().sub(&z));
        assert_eq!(f.gcd(&g), common.normalize_sign());
    }
}
