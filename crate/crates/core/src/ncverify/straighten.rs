//! Rewriting to standard monomials.
//!
//! Each non-standard adjacent pair `ab` (rank of `a` above rank of `b`) has a
//! rule `ab → rhs`. The rules come from the reduced row echelon form of the
//! quadratic relations, with non-standard pairs as pivots. For `D1` this
//! gives each `x_kl ∂_ij` as `∂x` terms plus a constant, which is the
//! triangular shape of the explicit cross formula but with coefficients
//! forced by the cross relation itself. The explicit formula as printed is
//! kept in [`d1_cross_rule`] for comparison; most of its instances are not
//! consequences of the relations.

use super::free::{FreeAlgElem, Word};
use super::presentation::Presentation;
use super::NcError;
use crate::scalars::Field;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

pub const REWRITE_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

#[derive(Clone, Debug)]
pub struct Rewriter<F> {
    rank: Vec<u32>,
    rules: HashMap<(u16, u16), FreeAlgElem<F>>,
    budget: usize,
}

/// Reduced row echelon form of `rows` with columns in the given order.
fn rref<F: Field>(rows: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = x.mul(&inv);
        }
        let pr = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pr) {
                    if !y.is_zero() {
                        *x = x.sub(&y.mul(&f));
                    }
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

/// Printed explicit formula for `x_kl ∂_ij` in `D1` (indices from 0).
/// Not used for rewriting: only some instances lie in the ideal.
pub fn d1_cross_rule<F: Field>(p: &Presentation<F>, k: usize, l: usize, i: usize, j: usize) -> FreeAlgElem<F> {
    let n = p.n;
    let q = p.q.clone();
    let qi = q.inv().expect("q is nonzero");
    let qq = q.sub(&qi);
    let qq2 = qq.mul(&qq);
    let delta = |a: usize, b: usize| a == b;
    let theta = |a: usize, b: usize| a > b;
    let x = |a: usize, b: usize| p.generator_id(&format!("x{}{}", a + 1, b + 1)).expect("x generator");
    let d = |a: usize, b: usize| p.generator_id(&format!("d{}{}", a + 1, b + 1)).expect("d generator");
    let qpow = |e: i64| q.pow(e);
    let mut e = FreeAlgElem::zero();
    let e_dx = -(delta(j, k) as i64) + delta(j, l) as i64;
    e.add_term(vec![d(i, j), x(k, l)], qpow(e_dx));
    let mut c0 = F::zero();
    if delta(i, l) && delta(j, k) {
        c0 = c0.add(&qpow(delta(i, j) as i64));
    }
    if theta(j, l) && delta(i, j) && delta(k, l) {
        c0 = c0.add(&qq);
    }
    e.add_term(vec![], c0.mul(&qq).neg());
    if theta(k, i) {
        e.add_term(vec![x(i, l), d(k, j)], qq.neg());
    }
    if delta(i, l) {
        for m in i + 1..n {
            e.add_term(vec![x(k, m), d(m, j)], qq.neg());
        }
    }
    if theta(k, i) && delta(k, l) {
        for m in k + 1..n {
            e.add_term(vec![x(i, m), d(m, j)], qq2.neg());
        }
    }
    if theta(l, j) {
        e.add_term(vec![d(i, l), x(k, j)], qq.clone());
    }
    if delta(j, k) {
        for m in 0..j {
            e.add_term(vec![d(i, m), x(m, l)], qq.neg());
        }
    }
    if theta(l, j) && delta(k, l) {
        for m in 0..l {
            e.add_term(vec![d(i, m), x(m, j)], qq2.neg());
        }
    }
    let lead = -(delta(i, k) as i64) + delta(i, l) as i64;
    e.scale(&qpow(lead))
}

impl<F: Field> Rewriter<F> {
    pub fn new(p: &Presentation<F>) -> Result<Self, NcError> {
        let rank = p.std_rank().ok_or_else(|| NcError::NoOrientation(p.name.to_string()))?.to_vec();
        let mut words: Vec<Word> = Vec::new();
        for r in &p.relations {
            if r.elem.degree().unwrap_or(0) > 2 {
                continue;
            }
            words.extend(r.elem.terms().map(|(w, _)| w.clone()));
        }
        words.sort();
        words.dedup();
        let is_std = |w: &Word| p.is_standard(w).unwrap_or(true);
        words.sort_by(|a, b| b.len().cmp(&a.len()).then(is_std(a).cmp(&is_std(b))).then(a.cmp(b)));
        let col: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut rows: Vec<Vec<F>> = p
            .relations
            .iter()
            .filter(|r| r.elem.degree().unwrap_or(0) <= 2)
            .map(|r| {
                let mut v = vec![F::zero(); words.len()];
                for (w, c) in r.elem.terms() {
                    v[col[w]] = c.clone();
                }
                v
            })
            .collect();
        let pivots = rref(&mut rows, words.len());
        let mut rules = HashMap::new();
        for (row, &pc) in rows.iter().zip(&pivots) {
            let w = &words[pc];
            if w.len() != 2 || is_std(w) {
                continue;
            }
            let mut rhs = FreeAlgElem::zero();
            for (c, v) in row.iter().enumerate() {
                if c != pc && !v.is_zero() {
                    rhs.add_term(words[c].clone(), v.neg());
                }
            }
            rules.insert((w[0], w[1]), rhs);
        }
        let g = p.num_generators() as u16;
        for a in 0..g {
            for b in 0..g {
                if rank[a as usize] > rank[b as usize] && !rules.contains_key(&(a, b)) {
                    return Err(NcError::IncompleteOrientation(p.render_word(&[a, b])));
                }
            }
        }
        Ok(Rewriter { rank, rules, budget: REWRITE_BUDGET })
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn rule(&self, a: u16, b: u16) -> Option<&FreeAlgElem<F>> {
        self.rules.get(&(a, b))
    }

    fn bad_pair(&self, w: &[u16], strategy: Strategy) -> Option<usize> {
        let bad = |k: usize| self.rank[w[k] as usize] > self.rank[w[k + 1] as usize];
        let n = w.len().saturating_sub(1);
        match strategy {
            Strategy::Leftmost => (0..n).find(|&k| bad(k)),
            Strategy::Rightmost => (0..n).rev().find(|&k| bad(k)),
        }
    }

    /// Rewrites `e` to a combination of standard monomials; returns it with the step count.
    pub fn straighten_elem(&self, e: &FreeAlgElem<F>, strategy: Strategy) -> Result<(FreeAlgElem<F>, usize), NcError> {
        // keyed by (length, word) so that like terms merge before they are expanded
        let mut pending: BTreeMap<(usize, Word), F> = BTreeMap::new();
        let add = |m: &mut BTreeMap<(usize, Word), F>, w: Word, c: F| {
            let key = (w.len(), w);
            match m.get_mut(&key) {
                Some(v) => {
                    let s = v.add(&c);
                    if s.is_zero() {
                        m.remove(&key);
                    } else {
                        *v = s;
                    }
                }
                None => {
                    if !c.is_zero() {
                        m.insert(key, c);
                    }
                }
            }
        };
        for (w, c) in e.terms() {
            add(&mut pending, w.clone(), c.clone());
        }
        let mut out = FreeAlgElem::zero();
        let mut steps = 0usize;
        while let Some(((_, w), c)) = pending.pop_last() {
            let Some(k) = self.bad_pair(&w, strategy) else {
                out.add_term(w, c);
                continue;
            };
            steps += 1;
            if steps > self.budget {
                return Err(NcError::RewriteBudgetExceeded(self.budget));
            }
            let rhs = &self.rules[&(w[k], w[k + 1])];
            for (t, tc) in rhs.terms() {
                let mut x = Vec::with_capacity(w.len() + t.len());
                x.extend_from_slice(&w[..k]);
                x.extend_from_slice(t);
                x.extend_from_slice(&w[k + 2..]);
                add(&mut pending, x, tc.mul(&c));
            }
        }
        Ok((out, steps))
    }

    pub fn straighten_word(&self, w: &[u16], strategy: Strategy) -> Result<FreeAlgElem<F>, NcError> {
        self.straighten_elem(&FreeAlgElem::monomial(w.to_vec(), F::one()), strategy).map(|x| x.0)
    }

    /// Standard-first comparison of generator ranks, used for sorting test corpora.
    pub fn cmp_generators(&self, a: u16, b: u16) -> Ordering {
        self.rank[a as usize].cmp(&self.rank[b as usize])
    }
}

/// Straightens a single word with the leftmost strategy.
pub fn straighten<F: Field>(p: &Presentation<F>, word: &[u16]) -> Result<FreeAlgElem<F>, NcError> {
    Rewriter::new(p)?.straighten_word(word, Strategy::Leftmost)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncverify::presentation::{build_presentation, PresentationName};
    use crate::scalars::RatFunc;

    fn q() -> RatFunc {
        RatFunc::variable(0).unwrap()
    }

    #[test]
    fn standard_word_is_fixed() {
        let p = build_presentation(PresentationName::W, 2, &q()).unwrap();
        let x1 = p.generator_id("x1").unwrap();
        let d2 = p.generator_id("d2").unwrap();
        let w = vec![x1, x1, d2];
        assert_eq!(straighten(&p, &w).unwrap(), FreeAlgElem::monomial(w, RatFunc::one()));
    }

    #[test]
    fn weyl_d1_x1() {
        let q = q();
        let p = build_presentation(PresentationName::W, 2, &q).unwrap();
        let x1 = p.generator_id("x1").unwrap();
        let d1 = p.generator_id("d1").unwrap();
        let got = straighten(&p, &[d1, x1]).unwrap();
        let mut want = FreeAlgElem::scalar(RatFunc::one());
        want.add_term(vec![x1, d1], q.mul(&q));
        assert_eq!(got, want);
    }

    #[test]
    fn d1_x11_d11_follows_the_cross_relation() {
        // the [1,1] entry of the cross relation reads q² x11 ∂11 = ∂11 x11 + (1−q²)(1 + ∂12 x21)
        let q = q();
        let p = build_presentation(PresentationName::D1, 2, &q).unwrap();
        let g = |s: &str| p.generator_id(s).unwrap();
        let qm2 = q.pow(-2);
        let c = qm2.sub(&RatFunc::one());
        let mut want = FreeAlgElem::monomial(vec![g("d11"), g("x11")], qm2);
        want.add_term(vec![], c.clone());
        want.add_term(vec![g("d12"), g("x21")], c);
        assert_eq!(straighten(&p, &[g("x11"), g("d11")]).unwrap(), want);
        assert_ne!(want, d1_cross_rule(&p, 0, 0, 0, 0));
    }

    #[test]
    fn d1_cross_rule_at_one_one() {
        let q = q();
        let p = build_presentation(PresentationName::D1, 2, &q).unwrap();
        let g = |s: &str| p.generator_id(s).unwrap();
        // x11 ∂11 = ∂11 x11 − (q²−1) − (q−q⁻¹) x12 ∂21
        let got = d1_cross_rule(&p, 0, 0, 0, 0);
        let qq = q.sub(&q.inv().unwrap());
        let mut want = FreeAlgElem::monomial(vec![g("d11"), g("x11")], RatFunc::one());
        want.add_term(vec![], q.mul(&q).sub(&RatFunc::one()).neg());
        want.add_term(vec![g("x12"), g("d21")], qq.neg());
        assert_eq!(got, want);
        // x12 ∂21 = ∂21 x12 − (q²−1) + (q²−1) ∂22 x11
        let got = d1_cross_rule(&p, 0, 1, 1, 0);
        let q2m1 = q.mul(&q).sub(&RatFunc::one());
        let mut want = FreeAlgElem::monomial(vec![g("d21"), g("x12")], RatFunc::one());
        want.add_term(vec![], q2m1.neg());
        want.add_term(vec![g("d22"), g("x11")], q2m1);
        assert_eq!(got, want);
    }
}
