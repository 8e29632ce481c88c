//! Truncated two-sided ideals: the span of `u·r·v` with `|u|+|r|+|v| ≤ D`,
//! split into blocks by every grading the relations preserve.

use super::free::{FreeAlgElem, Word};
use super::presentation::Presentation;
use crate::scalars::{Field, Q};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

pub type Key = Vec<i32>;

/// Integer gradings preserved by every relation, as weight vectors on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub basis: Vec<Vec<i64>>,
}

impl Grading {
    pub fn compute<F: Field>(p: &Presentation<F>) -> Self {
        let g = p.num_generators();
        let count = |w: &[u16]| {
            let mut c = vec![0i64; g];
            for &x in w {
                c[x as usize] += 1;
            }
            c
        };
        // every term of a relation must carry the weight of its first term
        let mut rows: Vec<Vec<Q>> = Vec::new();
        for r in &p.relations {
            let mut it = r.elem.terms();
            let Some((w0, _)) = it.next() else { continue };
            let c0 = count(w0);
            for (w, _) in it {
                let c = count(w);
                if c != c0 {
                    rows.push(c.iter().zip(&c0).map(|(a, b)| Q::from_i64(a - b)).collect());
                }
            }
        }
        Grading { basis: integer_nullspace(rows, g) }
    }

    pub fn key(&self, w: &[u16]) -> Key {
        self.basis.iter().map(|v| w.iter().map(|&x| v[x as usize]).sum::<i64>() as i32).collect()
    }

    pub fn key_elem<F: Field>(&self, e: &FreeAlgElem<F>) -> Option<Key> {
        let mut it = e.terms().map(|(w, _)| self.key(w));
        let k = it.next()?;
        it.all(|x| x == k).then_some(k)
    }
}

/// Primitive integer basis of the right nullspace of `rows` (width `g`).
fn integer_nullspace(mut rows: Vec<Vec<Q>>, g: usize) -> Vec<Vec<i64>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..g {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        rows[r] = rows[r].iter().map(|x| x.mul(&inv)).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pr = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pr) {
                    *x = x.sub(&y.mul(&f));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..g).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); g];
        v[free] = Q::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = rows[i][free].neg();
        }
        let lcm = v.iter().fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.0.denom()));
        let ints: Vec<num_bigint::BigInt> = v.iter().map(|x| (x.0.numer() * &lcm) / x.0.denom()).collect();
        let gcd = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
        basis.push(ints.iter().map(|x| (x / &gcd).to_i64().expect("small grading weight")).collect::<Vec<i64>>());
    }
    // prefer nonnegative leading entries for readability
    for v in &mut basis {
        if v.iter().find(|x| **x != 0).is_some_and(|x| x.is_negative()) {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
    basis
}

/// Sparse row: strictly increasing column indices, no zero coefficients.
pub type SparseRow<F> = Vec<(u32, F)>;

fn sub_scaled<F: Field>(a: &[(u32, F)], b: &[(u32, F)], c: &F) -> SparseRow<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((b[j].0, b[j].1.mul(c).neg()));
                j += 1;
            }
            Ordering::Equal => {
                let v = a[i].1.sub(&b[j].1.mul(c));
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// One graded piece of the truncated ideal in semi-echelon form.
#[derive(Debug)]
pub struct Block<F> {
    pub degree: usize,
    pub key: Key,
    cols: Vec<Word>,
    col_of: HashMap<Word, u32>,
    pivot_of: Vec<Option<u32>>,
    pivots: Vec<SparseRow<F>>,
    pub rows_generated: usize,
}

impl<F: Field> Block<F> {
    pub fn num_columns(&self) -> usize {
        self.cols.len()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn column(&self, c: u32) -> &Word {
        &self.cols[c as usize]
    }

    /// Lengths of the leading words of the pivots.
    pub fn pivot_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.iter().map(|r| self.cols[r[0].0 as usize].len())
    }

    pub fn has_pivot_word(&self, w: &[u16]) -> bool {
        self.col_of.get(w).is_some_and(|&c| self.pivot_of[c as usize].is_some())
    }

    /// Splits `e` into known columns and words foreign to the block.
    fn to_row(&self, e: &FreeAlgElem<F>) -> (SparseRow<F>, Vec<(Word, F)>) {
        let mut row = Vec::new();
        let mut foreign = Vec::new();
        for (w, c) in e.terms() {
            match self.col_of.get(w) {
                Some(&k) => row.push((k, c.clone())),
                None => foreign.push((w.clone(), c.clone())),
            }
        }
        row.sort_by_key(|x| x.0);
        (row, foreign)
    }

    /// Leading-term reduction; `None` when `e` lies in the span, else the first unreducible word.
    pub fn reduce_leading(&self, e: &FreeAlgElem<F>) -> Option<Word> {
        let (mut row, foreign) = self.to_row(e);
        if let Some((w, _)) = foreign.into_iter().next() {
            return Some(w);
        }
        while let Some((lead, c)) = row.first().cloned() {
            match self.pivot_of[lead as usize] {
                Some(p) => row = sub_scaled(&row, &self.pivots[p as usize], &c),
                None => return Some(self.cols[lead as usize].clone()),
            }
        }
        None
    }

    /// Full reduction onto non-pivot columns.
    pub fn normal_form(&self, e: &FreeAlgElem<F>) -> FreeAlgElem<F> {
        let (mut row, foreign) = self.to_row(e);
        let mut out = FreeAlgElem::zero();
        for (w, c) in foreign {
            out.add_term(w, c);
        }
        let mut k = 0;
        while k < row.len() {
            let (col, c) = row[k].clone();
            match self.pivot_of[col as usize] {
                Some(p) => {
                    let (done, rest) = row.split_at(k);
                    let mut next = done.to_vec();
                    next.extend(sub_scaled(rest, &self.pivots[p as usize], &c));
                    row = next;
                }
                None => k += 1,
            }
        }
        for (col, c) in row {
            out.add_term(self.cols[col as usize].clone(), c);
        }
        out
    }
}

struct RelData<F> {
    terms: Vec<(Word, F)>,
    len: usize,
    key: Key,
}

/// Column comparison: longer words first, then non-standard before standard, then lexicographic.
fn column_cmp(a: &(usize, bool, &Word), b: &(usize, bool, &Word)) -> Ordering {
    b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(b.2))
}

/// Lazily built blocks of the truncated ideal of a presentation.
pub struct TruncatedIdeal<'p, F> {
    pub pres: &'p Presentation<F>,
    pub grading: Grading,
    rels: Vec<RelData<F>>,
    min_rel_len: usize,
    pads: HashMap<usize, Arc<HashMap<Key, Vec<Word>>>>,
    blocks: HashMap<(usize, Key), Arc<Block<F>>>,
}

/// Every word of length at most `max_len` over `g` generators, shortest first.
pub fn all_words(g: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * g);
        for w in &layer {
            for x in 0..g as u16 {
                let mut v = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

impl<'p, F: Field> TruncatedIdeal<'p, F> {
    pub fn new(pres: &'p Presentation<F>) -> Self {
        let grading = Grading::compute(pres);
        let rels: Vec<RelData<F>> = pres
            .relations
            .iter()
            .map(|r| {
                let terms: Vec<(Word, F)> = r.elem.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
                let len = r.elem.degree().unwrap_or(0);
                let key = grading.key_elem(&r.elem).expect("relations are homogeneous for their own gradings");
                RelData { terms, len, key }
            })
            .collect();
        let min_rel_len = rels.iter().map(|r| r.len).min().unwrap_or(0);
        TruncatedIdeal { pres, grading, rels, min_rel_len, pads: HashMap::new(), blocks: HashMap::new() }
    }

    pub fn key(&self, w: &[u16]) -> Key {
        self.grading.key(w)
    }

    fn pads(&mut self, max_len: usize) -> Arc<HashMap<Key, Vec<Word>>> {
        if let Some(p) = self.pads.get(&max_len) {
            return p.clone();
        }
        let mut m: HashMap<Key, Vec<Word>> = HashMap::new();
        for w in all_words(self.pres.num_generators(), max_len) {
            m.entry(self.grading.key(&w)).or_default().push(w);
        }
        let p = Arc::new(m);
        self.pads.insert(max_len, p.clone());
        p
    }

    fn sub_key(a: &Key, b: &Key) -> Key {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    /// The block of grade `key` at truncation degree `degree`.
    pub fn block(&mut self, degree: usize, key: &Key) -> Arc<Block<F>> {
        if let Some(b) = self.blocks.get(&(degree, key.clone())) {
            return b.clone();
        }
        let pad_len = degree.saturating_sub(self.min_rel_len);
        let pads = self.pads(pad_len);
        let b = Arc::new(self.build_block(degree, key, &pads));
        self.blocks.insert((degree, key.clone()), b.clone());
        b
    }

    /// Blocks are cached per `(degree, key)`; this drops them.
    pub fn clear_cache(&mut self) {
        self.blocks.clear();
    }

    fn build_block(&self, degree: usize, key: &Key, pads: &HashMap<Key, Vec<Word>>) -> Block<F> {
        let mut raw: Vec<Vec<(Word, F)>> = Vec::new();
        for r in &self.rels {
            if r.len > degree {
                continue;
            }
            let Some(ws) = pads.get(&Self::sub_key(key, &r.key)) else { continue };
            for w in ws {
                if w.len() + r.len > degree {
                    continue;
                }
                for s in 0..=w.len() {
                    let (u, v) = w.split_at(s);
                    raw.push(
                        r.terms
                            .iter()
                            .map(|(t, c)| {
                                let mut x = Vec::with_capacity(u.len() + t.len() + v.len());
                                x.extend_from_slice(u);
                                x.extend_from_slice(t);
                                x.extend_from_slice(v);
                                (x, c.clone())
                            })
                            .collect(),
                    );
                }
            }
        }
        let mut words: Vec<Word> = raw.iter().flat_map(|r| r.iter().map(|(w, _)| w.clone())).collect();
        words.sort();
        words.dedup();
        let std = |w: &Word| self.pres.is_standard(w).unwrap_or(false);
        let mut decorated: Vec<(usize, bool, &Word)> = words.iter().map(|w| (w.len(), std(w), w)).collect();
        decorated.sort_by(column_cmp);
        let cols: Vec<Word> = decorated.into_iter().map(|(_, _, w)| w.clone()).collect();
        let col_of: HashMap<Word, u32> = cols.iter().enumerate().map(|(i, w)| (w.clone(), i as u32)).collect();
        let mut rows: Vec<SparseRow<F>> = raw
            .into_iter()
            .map(|r| {
                let mut v: SparseRow<F> = r.into_iter().map(|(w, c)| (col_of[&w], c)).collect();
                v.sort_by_key(|x| x.0);
                v
            })
            .collect();
        let rows_generated = rows.len();
        // sparse rows with late leading columns first keep pivot tails short
        rows.sort_by(|a, b| b[0].0.cmp(&a[0].0).then(a.len().cmp(&b.len())));
        let mut pivot_of: Vec<Option<u32>> = vec![None; cols.len()];
        let mut pivots: Vec<SparseRow<F>> = Vec::new();
        for mut row in rows {
            while let Some((lead, c)) = row.first().cloned() {
                match pivot_of[lead as usize] {
                    Some(p) => row = sub_scaled(&row, &pivots[p as usize], &c),
                    None => {
                        let inv = c.inv().expect("nonzero leading coefficient");
                        for t in row.iter_mut() {
                            t.1 = t.1.mul(&inv);
                        }
                        pivot_of[lead as usize] = Some(pivots.len() as u32);
                        pivots.push(row);
                        break;
                    }
                }
            }
        }
        Block { degree, key: key.clone(), cols, col_of, pivot_of, pivots, rows_generated }
    }

    /// Splits `e` into grade components.
    pub fn components(&self, e: &FreeAlgElem<F>) -> BTreeMap<Key, FreeAlgElem<F>> {
        let mut out: BTreeMap<Key, FreeAlgElem<F>> = BTreeMap::new();
        for (w, c) in e.terms() {
            out.entry(self.grading.key(w)).or_default().add_term(w.clone(), c.clone());
        }
        out
    }

    /// Smallest truncation degree in `[deg e, max_degree]` certifying `e ∈ I`, if any.
    /// On failure, returns the first unreducible word at `max_degree`.
    pub fn membership(&mut self, e: &FreeAlgElem<F>, max_degree: usize) -> Result<usize, Word> {
        let mut used = 0;
        for (key, comp) in self.components(e) {
            let start = comp.degree().unwrap_or(0).max(self.min_rel_len);
            let mut last = None;
            let mut ok = None;
            for d in start..=max_degree {
                let b = self.block(d, &key);
                match b.reduce_leading(&comp) {
                    None => {
                        ok = Some(d);
                        break;
                    }
                    Some(w) => last = Some(w),
                }
            }
            match ok {
                Some(d) => used = used.max(d),
                None => return Err(last.unwrap_or_else(|| comp.terms().next().map(|(w, _)| w.clone()).unwrap_or_default())),
            }
        }
        Ok(used)
    }

    /// Normal form of `e` with respect to the degree-`degree` truncation.
    pub fn normal_form(&mut self, e: &FreeAlgElem<F>, degree: usize) -> FreeAlgElem<F> {
        let mut out = FreeAlgElem::zero();
        for (key, comp) in self.components(e) {
            let b = self.block(degree, &key);
            out = out.add(&b.normal_form(&comp));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncverify::presentation::{build_presentation, PresentationName};
    use crate::scalars::Fp;

    #[test]
    fn weyl_gradings_are_torus_weights() {
        let p = build_presentation(PresentationName::W, 2, &Fp::from_i64(3)).unwrap();
        let g = Grading::compute(&p);
        // x_i − ∂_i counts for each i survive; total length does not
        assert_eq!(g.basis.len(), 2);
        let x1 = p.generator_id("x1").unwrap();
        let d1 = p.generator_id("d1").unwrap();
        assert_eq!(g.key(&[x1, d1]), vec![0, 0]);
        assert_ne!(g.key(&[x1]), g.key(&[d1]));
    }

    #[test]
    fn reflection_relations_are_homogeneous() {
        let p = build_presentation(PresentationName::Ref, 2, &Fp::from_i64(5)).unwrap();
        let g = Grading::compute(&p);
        let ones: Vec<u16> = vec![0, 0];
        let k = g.key(&ones);
        assert!(k.iter().any(|&x| x != 0));
    }

    #[test]
    fn membership_of_a_relation_and_of_its_sandwich() {
        let p = build_presentation(PresentationName::W, 2, &Fp::from_i64(7)).unwrap();
        let mut ideal = TruncatedIdeal::new(&p);
        let r = p.relations[0].elem.clone();
        assert_eq!(ideal.membership(&r, 2), Ok(2));
        let s = r.sandwich(&[1], &[2]);
        assert_eq!(ideal.membership(&s, 4), Ok(4));
        let x1 = p.generator_id("x1").unwrap();
        assert!(ideal.membership(&FreeAlgElem::generator(x1), 3).is_err());
    }

    #[test]
    fn nullspace_of_single_constraint() {
        let rows = vec![vec![Q::from_i64(1), Q::from_i64(-1), Q::from_i64(0)]];
        let b = integer_nullspace(rows, 3);
        assert_eq!(b.len(), 2);
        for v in &b {
            assert_eq!(v[0], v[1]);
        }
    }
}
