//! Named presentations: generators, matrix relations expanded entrywise, and
//! the standard monomial order used for straightening and PBW counts.

use super::free::{FreeAlgElem, FreeMatrixExpr};
use super::rmatrix::{
    partial_transpose_first, partial_transpose_second, r_matrix, swap_matrix, SquareMatrix,
};
use super::NcError;
use crate::scalars::Field;
use sha2::{Digest, Sha256};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PresentationName {
    /// Reflection equation algebra.
    Ref,
    /// Quantum Weyl algebra.
    W,
    /// Fourth quadrant subalgebra, generators `A` and `B⁻¹`.
    D0IV,
    /// `D0IV` with an adjoined two-sided inverse of `A`.
    D0loc,
    D1,
    Dl(usize),
    /// `Dl` braided with the Weyl algebra.
    Ml(usize),
}

impl PresentationName {
    pub fn parse(s: &str) -> Result<Self, NcError> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        let arg = |prefix: &str| -> Option<usize> {
            let rest = lower.strip_prefix(prefix)?;
            let rest = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
            rest.parse().ok()
        };
        let name = match lower.as_str() {
            "ref" => PresentationName::Ref,
            "w" | "weyl" => PresentationName::W,
            "d0iv" => PresentationName::D0IV,
            "d0loc" => PresentationName::D0loc,
            "d1" => PresentationName::D1,
            _ => {
                if let Some(l) = arg("dl") {
                    if l == 1 {
                        PresentationName::D1
                    } else {
                        PresentationName::Dl(l)
                    }
                } else if let Some(l) = arg("ml") {
                    PresentationName::Ml(l)
                } else {
                    return Err(NcError::UnknownPresentation(t.to_string()));
                }
            }
        };
        match name {
            PresentationName::Dl(l) | PresentationName::Ml(l) if l < 2 => Err(NcError::UnknownPresentation(t.into())),
            _ => Ok(name),
        }
    }
}

impl fmt::Display for PresentationName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationName::Ref => f.write_str("Ref"),
            PresentationName::W => f.write_str("W"),
            PresentationName::D0IV => f.write_str("D0IV"),
            PresentationName::D0loc => f.write_str("D0loc"),
            PresentationName::D1 => f.write_str("D1"),
            PresentationName::Dl(l) => write!(f, "Dl({})", l),
            PresentationName::Ml(l) => write!(f, "Ml({})", l),
        }
    }
}

impl FromStr for PresentationName {
    type Err = NcError;
    fn from_str(s: &str) -> Result<Self, NcError> {
        Self::parse(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Relation<F> {
    pub label: String,
    pub elem: FreeAlgElem<F>,
}

/// A named matrix whose entries are generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    pub ids: Vec<u16>,
}

/// The R-matrix and its companions as constant matrices over the free algebra.
#[derive(Clone, Debug)]
pub struct RConsts<F> {
    pub n: usize,
    pub q: F,
    pub r: FreeMatrixExpr<F>,
    pub r21: FreeMatrixExpr<F>,
    pub rinv: FreeMatrixExpr<F>,
    pub r21inv: FreeMatrixExpr<F>,
    /// `Ω = Σ E_ij ⊗ E_ji`, the flip.
    pub omega: FreeMatrixExpr<F>,
    pub id: FreeMatrixExpr<F>,
}

impl<F: Field> RConsts<F> {
    pub fn new(n: usize, q: &F) -> Self {
        let r = r_matrix(n, q);
        let r21 = r.r21();
        let rinv = r.inverse().expect("R is invertible");
        let r21inv = r21.inverse().expect("R21 is invertible");
        RConsts {
            n,
            q: q.clone(),
            r: r.matrix.to_expr(),
            r21: r21.to_expr(),
            rinv: rinv.to_expr(),
            r21inv: r21inv.to_expr(),
            omega: swap_matrix::<F>(n).to_expr(),
            id: FreeMatrixExpr::identity(n),
        }
    }

    pub fn qq(&self) -> F {
        self.q.sub(&self.q.inv().expect("q is nonzero"))
    }

    pub fn s1(&self, m: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        m.slot1(self.n)
    }

    pub fn s2(&self, m: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        m.slot2(self.n)
    }

    /// `R21 M1 R M2 − M2 R21 M1 R`.
    pub fn reflection(&self, m: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        let (m1, m2) = (self.s1(m), self.s2(m));
        let lhs = self.r21.mul(&m1).mul(&self.r).mul(&m2);
        let rhs = m2.mul(&self.r21).mul(&m1).mul(&self.r);
        lhs.sub(&rhs)
    }

    /// `R21 M1 M2 − M2 M1 R`.
    pub fn frt(&self, m: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        let (m1, m2) = (self.s1(m), self.s2(m));
        self.r21.mul(&m1).mul(&m2).sub(&m2.mul(&m1).mul(&self.r))
    }

    /// `R⁻¹ D1 R21⁻¹ D2 − D2 R⁻¹ D1 R21⁻¹`.
    pub fn inverse_reflection(&self, d: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        let (d1, d2) = (self.s1(d), self.s2(d));
        let lhs = self.rinv.mul(&d1).mul(&self.r21inv).mul(&d2);
        let rhs = d2.mul(&self.rinv).mul(&d1).mul(&self.r21inv);
        lhs.sub(&rhs)
    }

    /// `D1 R21⁻¹ X2 R21 − R X2 R21 D1 − (q−q⁻¹) R Ω`.
    pub fn d1_cross(&self, d: &FreeMatrixExpr<F>, x: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        let (d1, x2) = (self.s1(d), self.s2(x));
        let lhs = d1.mul(&self.r21inv).mul(&x2).mul(&self.r21);
        let rhs = self.r.mul(&x2).mul(&self.r21).mul(&d1);
        lhs.sub(&rhs).sub(&self.r.mul(&self.omega).scale(&self.qq()))
    }

    /// `B'1 R21⁻¹ A2 R21 − R A2 R21 B'1`.
    pub fn d0_cross(&self, bp: &FreeMatrixExpr<F>, a: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        let (b1, a2) = (self.s1(bp), self.s2(a));
        let lhs = b1.mul(&self.r21inv).mul(&a2).mul(&self.r21);
        let rhs = self.r.mul(&a2).mul(&self.r21).mul(&b1);
        lhs.sub(&rhs)
    }

    /// The cross relation conjugated by `A⁻¹`: `A2⁻¹ R⁻¹ B1⁻¹ R21⁻¹ − R21 B1⁻¹ R21⁻¹ A2⁻¹`.
    pub fn d0_cross_inverse(&self, bp: &FreeMatrixExpr<F>, ap: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        let (b1, a2) = (self.s1(bp), self.s2(ap));
        let lhs = a2.mul(&self.rinv).mul(&b1).mul(&self.r21inv);
        let rhs = self.r21.mul(&b1).mul(&self.r21inv).mul(&a2);
        lhs.sub(&rhs)
    }

    /// `R21 B1 R A2 − A2 R21 B1 R21⁻¹`.
    pub fn dab(&self, b: &FreeMatrixExpr<F>, a: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        let (b1, a2) = (self.s1(b), self.s2(a));
        let lhs = self.r21.mul(&b1).mul(&self.r).mul(&a2);
        let rhs = a2.mul(&self.r21).mul(&b1).mul(&self.r21inv);
        lhs.sub(&rhs)
    }

    /// `X1^(a) X2^(a−1) − X2^(a−1) R21 X1^(a)`.
    pub fn xx_adjacent(&self, xa: &FreeMatrixExpr<F>, xb: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        let (x1, x2) = (self.s1(xa), self.s2(xb));
        x1.mul(&x2).sub(&x2.mul(&self.r21).mul(&x1))
    }

    /// `X1^(2) R X2^(1) − X2^(1) R21 X1^(2)`.
    pub fn xx_adjacent_two(&self, x2m: &FreeMatrixExpr<F>, x1m: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        let (a1, b2) = (self.s1(x2m), self.s2(x1m));
        a1.mul(&self.r).mul(&b2).sub(&b2.mul(&self.r21).mul(&a1))
    }

    /// `M1 K2 − K2 M1`.
    pub fn commuting(&self, m: &FreeMatrixExpr<F>, k: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        let (m1, k2) = (self.s1(m), self.s2(k));
        m1.mul(&k2).sub(&k2.mul(&m1))
    }

    /// `D1^(a) D2^(a+1) − D2^(a+1) R⁻¹ D1^(a)`.
    pub fn dd_adjacent(&self, da: &FreeMatrixExpr<F>, db: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        let (d1, d2) = (self.s1(da), self.s2(db));
        d1.mul(&d2).sub(&d2.mul(&self.rinv).mul(&d1))
    }

    /// `D1^(1) R21⁻¹ D2^(2) − D2^(2) R⁻¹ D1^(1)`.
    pub fn dd_adjacent_two(&self, da: &FreeMatrixExpr<F>, db: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        let (d1, d2) = (self.s1(da), self.s2(db));
        d1.mul(&self.r21inv).mul(&d2).sub(&d2.mul(&self.rinv).mul(&d1))
    }

    /// `D2 R⁻¹ X1 − X1 R D2 − (q−q⁻¹) Ω`.
    pub fn dx_same(&self, d: &FreeMatrixExpr<F>, x: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        let (d2, x1) = (self.s2(d), self.s1(x));
        let lhs = d2.mul(&self.rinv).mul(&x1);
        let rhs = x1.mul(&self.r).mul(&d2);
        lhs.sub(&rhs).sub(&self.omega.scale(&self.qq()))
    }

    /// `D1^(a) X2^(a+1) − R X2^(a+1) D1^(a)`.
    pub fn dx_next(&self, d: &FreeMatrixExpr<F>, x: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        let (d1, x2) = (self.s1(d), self.s2(x));
        d1.mul(&x2).sub(&self.r.mul(&x2).mul(&d1))
    }

    /// `D1^(a) X2^(a−1) − X2^(a−1) D1^(a) R21⁻¹`.
    pub fn dx_prev(&self, d: &FreeMatrixExpr<F>, x: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        let (d1, x2) = (self.s1(d), self.s2(x));
        d1.mul(&x2).sub(&x2.mul(&d1).mul(&self.r21inv))
    }

    /// `D1^(a) X2^(a+1) − R X2^(a+1) D1^(a) R21⁻¹`, the two-vertex form: both braidings of the
    /// `ℓ ≥ 3` adjacent relations at once.
    pub fn dx_two(&self, d: &FreeMatrixExpr<F>, x: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        let (d1, x2) = (self.s1(d), self.s2(x));
        d1.mul(&x2).sub(&self.r.mul(&x2).mul(&d1).mul(&self.r21inv))
    }

    /// `D1^(a) X2^(a+1) − R21⁻¹ X2^(a+1) D1^(a) R21⁻¹`. Kept for comparison only: with it the
    /// generators of `D_2` fall into the ideal by degree 3.
    pub fn dx_two_printed(&self, d: &FreeMatrixExpr<F>, x: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        let (d1, x2) = (self.s1(d), self.s2(x));
        d1.mul(&x2).sub(&self.r21inv.mul(&x2).mul(&d1).mul(&self.r21inv))
    }

    /// `M K − I` as an n×n relation.
    pub fn inverse_pair(&self, m: &FreeMatrixExpr<F>, k: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
        m.mul(k).sub(&self.id)
    }
}

/// Source of a generator under the `U_(1)` action in a braided product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rep {
    V,
    VDual,
}

#[derive(Clone, Debug)]
pub struct Presentation<F> {
    pub name: PresentationName,
    pub n: usize,
    pub q: F,
    pub generators: Vec<String>,
    pub relations: Vec<Relation<F>>,
    /// Filtration weight of each generator; all equal to one.
    pub grading_weights: Vec<u32>,
    pub matrices: Vec<GeneratorMatrix>,
    std_rank: Option<Vec<u32>>,
}

impl<F: Field> Presentation<F> {
    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn rconsts(&self) -> RConsts<F> {
        RConsts::new(self.n, &self.q)
    }

    pub fn generator_id(&self, name: &str) -> Option<u16> {
        self.generators.iter().position(|g| g == name).map(|i| i as u16)
    }

    pub fn generator_matrix(&self, name: &str) -> Option<&GeneratorMatrix> {
        self.matrices.iter().find(|m| m.name == name)
    }

    /// The generator matrix `name` as a free-algebra matrix.
    pub fn matrix(&self, name: &str) -> Option<FreeMatrixExpr<F>> {
        let g = self.generator_matrix(name)?;
        Some(FreeMatrixExpr::from_fn(g.rows, g.cols, |i, j| FreeAlgElem::generator(g.ids[i * g.cols + j])))
    }

    pub fn std_rank(&self) -> Option<&[u32]> {
        self.std_rank.as_deref()
    }

    /// A word is standard when its generator ranks are nondecreasing.
    pub fn is_standard(&self, w: &[u16]) -> Option<bool> {
        let r = self.std_rank.as_ref()?;
        Some(w.windows(2).all(|p| r[p[0] as usize] <= r[p[1] as usize]))
    }

    /// Number of standard monomials of length at most `d`, i.e. `C(N+d, d)`.
    pub fn standard_count(&self, d: usize) -> Option<u128> {
        self.std_rank.as_ref()?;
        Some(binomial(self.generators.len() + d, d))
    }

    /// Number of standard monomials of length exactly `k`.
    pub fn standard_count_exact(&self, k: usize) -> Option<u128> {
        self.std_rank.as_ref()?;
        let n = self.generators.len();
        Some(if n == 0 { u128::from(k == 0) } else { binomial(n + k - 1, k) })
    }

    pub fn render_word(&self, w: &[u16]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|&g| self.generators[g as usize].as_str()).collect::<Vec<_>>().join("*")
    }

    pub fn render(&self, e: &FreeAlgElem<F>) -> String {
        e.render(&self.generators)
    }

    /// Number of relation entries and the SHA-256 of their rendering.
    pub fn digest(&self) -> (usize, String) {
        let mut h = Sha256::new();
        for r in &self.relations {
            h.update(r.label.as_bytes());
            h.update(b": ");
            h.update(self.render(&r.elem).as_bytes());
            h.update(b"\n");
        }
        let hex: String = h.finalize().iter().map(|b| format!("{:02x}", b)).collect();
        (self.relations.len(), hex)
    }

    /// Relations whose label starts with `prefix`.
    pub fn relations_labeled<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a Relation<F>> + 'a {
        self.relations.iter().filter(move |r| r.label.split('[').next() == Some(prefix))
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k.min(n));
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

struct Builder<F> {
    n: usize,
    c: RConsts<F>,
    generators: Vec<String>,
    matrices: Vec<GeneratorMatrix>,
    relations: Vec<Relation<F>>,
}

impl<F: Field> Builder<F> {
    fn new(n: usize, q: &F) -> Self {
        Builder { n, c: RConsts::new(n, q), generators: Vec::new(), matrices: Vec::new(), relations: Vec::new() }
    }

    fn matrix(&mut self, name: &str, rows: usize, cols: usize, gen: impl Fn(usize, usize) -> String) -> FreeMatrixExpr<F> {
        let mut ids = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                ids.push(self.generators.len() as u16);
                self.generators.push(gen(i + 1, j + 1));
            }
        }
        let m = FreeMatrixExpr::from_fn(rows, cols, |i, j| FreeAlgElem::generator(ids[i * cols + j]));
        self.matrices.push(GeneratorMatrix { name: name.into(), rows, cols, ids });
        m
    }

    fn ids(&self, name: &str) -> &[u16] {
        &self.matrices.iter().find(|m| m.name == name).expect("matrix exists").ids
    }

    fn push(&mut self, label: &str, m: &FreeMatrixExpr<F>) {
        for i in 0..m.rows {
            for j in 0..m.cols {
                let e = m.get(i, j);
                if !e.is_zero() {
                    self.relations.push(Relation { label: format!("{}[{},{}]", label, i + 1, j + 1), elem: e.clone() });
                }
            }
        }
    }

    fn push_elem(&mut self, label: String, e: FreeAlgElem<F>) {
        if !e.is_zero() {
            self.relations.push(Relation { label, elem: e });
        }
    }

    fn finish(self, name: PresentationName, std_rank: Option<Vec<u32>>) -> Presentation<F> {
        let g = self.generators.len();
        Presentation {
            name,
            n: self.n,
            q: self.c.q,
            generators: self.generators,
            relations: self.relations,
            grading_weights: vec![1; g],
            matrices: self.matrices,
            std_rank,
        }
    }
}

fn lex_ranks(n: usize, offset: u32, reversed: bool) -> Vec<u32> {
    (0..n * n).map(|k| offset + if reversed { (n * n - 1 - k) as u32 } else { k as u32 }).collect()
}

fn add_weyl<F: Field>(b: &mut Builder<F>, xname: &str, dname: &str) {
    let n = b.n;
    let q = b.c.q.clone();
    b.matrix("x", 1, n, |_, j| format!("{}{}", xname, j));
    b.matrix("d", n, 1, |i, _| format!("{}{}", dname, i));
    let x: Vec<u16> = b.ids("x").to_vec();
    let d: Vec<u16> = b.ids("d").to_vec();
    let mono = |w: Vec<u16>, c: F| FreeAlgElem::monomial(w, c);
    let one = F::one();
    let q2 = q.mul(&q);
    for i in 0..n {
        for j in 0..i {
            let e = mono(vec![x[i], x[j]], one.clone()).sub(&mono(vec![x[j], x[i]], q.clone()));
            b.push_elem(format!("WeylPres.xx[{},{}]", i + 1, j + 1), e);
        }
    }
    for i in 0..n {
        for j in 0..i {
            let e = mono(vec![d[i], d[j]], one.clone()).sub(&mono(vec![d[j], d[i]], q.inv().expect("q is nonzero")));
            b.push_elem(format!("WeylPres.dd[{},{}]", i + 1, j + 1), e);
        }
    }
    for i in 0..n {
        for j in 0..n {
            let e = if i != j {
                mono(vec![d[i], x[j]], one.clone()).sub(&mono(vec![x[j], d[i]], q.clone()))
            } else {
                let mut e = mono(vec![d[i], x[i]], one.clone());
                e.add_term(vec![], one.neg());
                e.add_term(vec![x[i], d[i]], q2.neg());
                for k in 0..i {
                    e.add_term(vec![x[k], d[k]], q2.sub(&one).neg());
                }
                e
            };
            b.push_elem(format!("WeylPres.dx[{},{}]", i + 1, j + 1), e);
        }
    }
}

fn build_ref<F: Field>(n: usize, q: &F) -> Presentation<F> {
    let mut b = Builder::new(n, q);
    let m = b.matrix("M", n, n, |i, j| format!("m{}{}", i, j));
    let rel = b.c.reflection(&m);
    b.push("Ref", &rel);
    b.finish(PresentationName::Ref, Some(lex_ranks(n, 0, false)))
}

fn build_w<F: Field>(n: usize, q: &F) -> Presentation<F> {
    let mut b = Builder::new(n, q);
    add_weyl(&mut b, "x", "d");
    let ranks = (0..2 * n as u32).collect();
    b.finish(PresentationName::W, Some(ranks))
}

fn build_d1<F: Field>(n: usize, q: &F) -> Presentation<F> {
    let mut b = Builder::new(n, q);
    let x = b.matrix("X", n, n, |i, j| format!("x{}{}", i, j));
    let d = b.matrix("D", n, n, |i, j| format!("d{}{}", i, j));
    let r1 = b.c.reflection(&x);
    let r2 = b.c.inverse_reflection(&d);
    let r3 = b.c.d1_cross(&d, &x);
    b.push("D1rel1", &r1);
    b.push("D1rel2", &r2);
    b.push("D1rel3", &r3);
    let nn = (n * n) as u32;
    let mut ranks = lex_ranks(n, nn, false);
    ranks.extend(lex_ranks(n, 0, true));
    b.finish(PresentationName::D1, Some(ranks))
}

fn build_d0<F: Field>(n: usize, q: &F, localized: bool, with_b: bool) -> Presentation<F> {
    let mut b = Builder::new(n, q);
    let a = b.matrix("A", n, n, |i, j| format!("a{}{}", i, j));
    let bp = b.matrix("Bp", n, n, |i, j| format!("bp{}{}", i, j));
    let r1 = b.c.reflection(&a);
    let r2 = b.c.inverse_reflection(&bp);
    let r3 = b.c.d0_cross(&bp, &a);
    b.push("DAA", &r1);
    b.push("DBinv", &r2);
    if !with_b {
        b.push("D0cross", &r3);
    }
    if localized {
        let ap = b.matrix("Ap", n, n, |i, j| format!("ap{}{}", i, j));
        let l = b.c.inverse_pair(&a, &ap);
        let r = b.c.inverse_pair(&ap, &a);
        b.push("AinvL", &l);
        b.push("AinvR", &r);
        // consequences of the inverse pairs that only surface at high degree
        let inv_aa = b.c.inverse_reflection(&ap);
        let inv_cross = b.c.d0_cross_inverse(&bp, &ap);
        b.push("DAAinv", &inv_aa);
        b.push("D0crossInv", &inv_cross);
    }
    if with_b {
        let bm = b.matrix("B", n, n, |i, j| format!("b{}{}", i, j));
        let l = b.c.inverse_pair(&bm, &bp);
        let r = b.c.inverse_pair(&bp, &bm);
        let dab = b.c.dab(&bm, &a);
        b.push("BinvL", &l);
        b.push("BinvR", &r);
        b.push("DAB", &dab);
    }
    let nn = (n * n) as u32;
    let ranks = if localized || with_b {
        None
    } else {
        let mut r = lex_ranks(n, 0, false);
        r.extend(lex_ranks(n, nn, true));
        Some(r)
    };
    b.finish(if localized { PresentationName::D0loc } else { PresentationName::D0IV }, ranks)
}

/// `D0IV` with `A⁻¹`, `B⁻¹`, `B` and the relation (DAB) in place of the cross relation; used to test that (DAB) implies it.
pub fn build_d0_with_b<F: Field>(n: usize, q: &F) -> Presentation<F> {
    let mut p = build_d0(n, q, true, true);
    p.name = PresentationName::D0loc;
    p
}

fn add_dl<F: Field>(b: &mut Builder<F>, l: usize) {
    let n = b.n;
    let xs: Vec<FreeMatrixExpr<F>> =
        (1..=l).map(|a| b.matrix(&format!("X{}", a), n, n, |i, j| format!("x{}_{}{}", a, i, j))).collect();
    let ds: Vec<FreeMatrixExpr<F>> =
        (1..=l).map(|a| b.matrix(&format!("D{}", a), n, n, |i, j| format!("d{}_{}{}", a, i, j))).collect();
    let prev = |a: usize| (a + l - 1) % l;
    let next = |a: usize| (a + 1) % l;
    let adjacent = |a: usize, c: usize| c == a || c == prev(a) || c == next(a);
    let c = b.c.clone();
    for a in 0..l {
        b.push(&format!("Xaa{}", a + 1), &c.frt(&xs[a]));
    }
    if l == 2 {
        b.push("XXad2", &c.xx_adjacent_two(&xs[1], &xs[0]));
    } else {
        for a in 0..l {
            b.push(&format!("XXad{}", a + 1), &c.xx_adjacent(&xs[a], &xs[prev(a)]));
        }
        for a in 0..l {
            for e in a + 1..l {
                if !adjacent(a, e) {
                    b.push(&format!("XXcom{}{}", a + 1, e + 1), &c.commuting(&xs[a], &xs[e]));
                }
            }
        }
    }
    for a in 0..l {
        b.push(&format!("Daa{}", a + 1), &c.frt(&ds[a]));
    }
    if l == 2 {
        b.push("DDadj2", &c.dd_adjacent_two(&ds[0], &ds[1]));
    } else {
        for a in 0..l {
            b.push(&format!("DDadj{}", a + 1), &c.dd_adjacent(&ds[a], &ds[next(a)]));
        }
        for a in 0..l {
            for e in a + 1..l {
                if !adjacent(a, e) {
                    b.push(&format!("DDcom{}{}", a + 1, e + 1), &c.commuting(&ds[a], &ds[e]));
                }
            }
        }
    }
    for a in 0..l {
        b.push(&format!("DXa{}", a + 1), &c.dx_same(&ds[a], &xs[a]));
    }
    if l == 2 {
        for a in 0..l {
            b.push(&format!("DXadj{}", a + 1), &c.dx_two(&ds[a], &xs[next(a)]));
        }
    } else {
        for a in 0..l {
            b.push(&format!("DXadj1_{}", a + 1), &c.dx_next(&ds[a], &xs[next(a)]));
            b.push(&format!("DXadj2_{}", a + 1), &c.dx_prev(&ds[a], &xs[prev(a)]));
            for e in 0..l {
                if !adjacent(a, e) {
                    b.push(&format!("DXcom{}{}", a + 1, e + 1), &c.commuting(&ds[a], &xs[e]));
                }
            }
        }
    }
}

fn dl_ranks(n: usize, l: usize) -> Vec<u32> {
    let nn = (n * n) as u32;
    let mut r = Vec::new();
    for a in 0..l as u32 {
        r.extend(lex_ranks(n, a * nn, false));
    }
    for a in 0..l as u32 {
        r.extend(lex_ranks(n, (l as u32 + a) * nn, false));
    }
    r
}

fn build_dl<F: Field>(n: usize, q: &F, l: usize) -> Presentation<F> {
    let mut b = Builder::new(n, q);
    add_dl(&mut b, l);
    b.finish(PresentationName::Dl(l), Some(dl_ranks(n, l)))
}

/// The braiding `b ⊗ a ↦ Σ a' ⊗ b'` on `B ⊗ A` for the given representation types, indexed by
/// `(β, α) ↦ β n + α`. On `V ⊗ V` it is the relation matrix `R` itself, the convention under which
/// the Weyl relations read `q x1 x2 = x2 x1 R`. Duals come from the antipode; the `V ⊗ V*` block
/// picks up the conjugation by `q^{2ρ}` that realises the square of the antipode.
fn braiding_block<F: Field>(n: usize, q: &F, tb: Rep, ta: Rep) -> SquareMatrix<F> {
    let r = r_matrix(n, q).matrix;
    let rinv = r.inverse().expect("R is invertible");
    match (tb, ta) {
        (Rep::V, Rep::V) => r,
        (Rep::V, Rep::VDual) => {
            let mut k = SquareMatrix::zeros(n);
            for i in 0..n {
                k.set(i, i, q.pow(2 * i as i64));
            }
            let id = SquareMatrix::identity(n);
            let kinv = k.inverse().expect("diagonal is invertible");
            id.kron(&k).mul(&partial_transpose_second(&rinv, n)).mul(&id.kron(&kinv))
        }
        (Rep::VDual, Rep::V) => partial_transpose_first(&rinv, n),
        (Rep::VDual, Rep::VDual) => r.transpose(),
    }
}

fn build_ml<F: Field>(n: usize, q: &F, l: usize) -> Presentation<F> {
    let mut b = Builder::new(n, q);
    add_dl(&mut b, l);
    add_weyl(&mut b, "xw", "dw");
    // U_(1)-multiplets of D_l: (generator at index α with spectator s, representation type)
    let mut multiplets: Vec<(Vec<Vec<u16>>, Rep)> = Vec::new();
    let grid = |ids: &[u16], by_row: bool| -> Vec<Vec<u16>> {
        (0..n).map(|s| (0..n).map(|a| if by_row { ids[a * n + s] } else { ids[s * n + a] }).collect()).collect()
    };
    multiplets.push((grid(b.ids("X1"), true), Rep::VDual));
    multiplets.push((grid(b.ids(&format!("X{}", l)), false), Rep::V));
    multiplets.push((grid(b.ids("D1"), false), Rep::V));
    multiplets.push((grid(b.ids(&format!("D{}", l)), true), Rep::VDual));
    let mut acted: Vec<u16> = Vec::new();
    for (g, _) in &multiplets {
        acted.extend(g.iter().flatten());
    }
    let weyl: Vec<(u16, usize, Rep)> = b
        .ids("x")
        .iter()
        .enumerate()
        .map(|(i, &g)| (g, i, Rep::V))
        .chain(b.ids("d").iter().enumerate().map(|(i, &g)| (g, i, Rep::VDual)))
        .collect();
    let dl_count = 2 * l * n * n;
    for &(wg, beta, tb) in &weyl {
        for (fam, ta) in &multiplets {
            let m = braiding_block(n, q, tb, *ta);
            for row in fam {
                for (alpha, &ag) in row.iter().enumerate() {
                    let mut e = FreeAlgElem::monomial(vec![wg, ag], F::one());
                    for (alpha2, &ag2) in row.iter().enumerate() {
                        for &(wg2, beta2, tb2) in &weyl {
                            if tb2 != tb {
                                continue;
                            }
                            let c = m.get(beta2 * n + alpha2, beta * n + alpha);
                            e.add_term(vec![ag2, wg2], c.neg());
                        }
                    }
                    let label = format!("Braid[{},{}]", b.generators[wg as usize], b.generators[ag as usize]);
                    b.push_elem(label, e);
                }
            }
        }
        for g in 0..dl_count as u16 {
            if !acted.contains(&g) {
                let e = FreeAlgElem::monomial(vec![wg, g], F::one()).sub(&FreeAlgElem::monomial(vec![g, wg], F::one()));
                let label = format!("Braid[{},{}]", b.generators[wg as usize], b.generators[g as usize]);
                b.push_elem(label, e);
            }
        }
    }
    let mut ranks = dl_ranks(n, l);
    let off = (2 * l * n * n) as u32;
    ranks.extend((0..2 * n as u32).map(|k| off + k));
    b.finish(PresentationName::Ml(l), Some(ranks))
}

/// Builds the named presentation at rank `n` with the R-matrix specialised at `q`.
pub fn build_presentation<F: Field>(name: PresentationName, n: usize, q: &F) -> Result<Presentation<F>, NcError> {
    if n == 0 {
        return Err(NcError::InvalidParameter("n must be at least 1".into()));
    }
    if q.is_zero() {
        return Err(NcError::InvalidParameter("q must be nonzero".into()));
    }
    Ok(match name {
        PresentationName::Ref => build_ref(n, q),
        PresentationName::W => build_w(n, q),
        PresentationName::D0IV => build_d0(n, q, false, false),
        PresentationName::D0loc => build_d0(n, q, true, false),
        PresentationName::D1 => build_d1(n, q),
        PresentationName::Dl(l) if l >= 2 => build_dl(n, q, l),
        PresentationName::Ml(l) if l >= 2 => build_ml(n, q, l),
        other => return Err(NcError::UnknownPresentation(other.to_string())),
    })
}
