//! Graded dimension audits, matrix identities and homomorphism checks by
//! bounded-degree ideal membership.

use super::free::{FreeAlgElem, FreeMatrixExpr, Word};
use super::ideal::{all_words, TruncatedIdeal};
use super::presentation::{build_d0_with_b, build_presentation, Presentation, PresentationName, RConsts};
use super::rmatrix::r_matrix;
use super::straighten::{d1_cross_rule, Rewriter, Strategy};
use super::NcError;
use crate::report::{timed, Check, Report, Status};
use crate::scalars::Field;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Unequal,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Equal => "equal",
            Verdict::Unequal => "unequal",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Counts for one word length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthCount {
    pub length: usize,
    pub words: u128,
    pub rank: u128,
    pub standard: Option<u128>,
}

impl LengthCount {
    pub fn upper(&self) -> u128 {
        self.words - self.rank
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditOutcome {
    pub presentation: String,
    pub n: usize,
    pub degree: usize,
    pub slack: usize,
    pub per_length: Vec<LengthCount>,
    pub upper_bound: u128,
    pub standard: Option<u128>,
    pub verdict: Verdict,
    pub blocks: usize,
    pub max_columns: usize,
}

/// Upper bound for `dim T_{≤d}/(I ∩ T_{≤d})`, with `I` truncated at `d + slack`.
pub fn audit_outcome<F: Field>(p: &Presentation<F>, d: usize, slack: usize) -> AuditOutcome {
    let mut ideal = TruncatedIdeal::new(p);
    let mut by_key: BTreeMap<Vec<i32>, Vec<u128>> = BTreeMap::new();
    for w in all_words(p.num_generators(), d) {
        by_key.entry(ideal.key(&w)).or_insert_with(|| vec![0; d + 1])[w.len()] += 1;
    }
    let mut words = vec![0u128; d + 1];
    let mut rank = vec![0u128; d + 1];
    let mut max_columns = 0;
    let blocks = by_key.len();
    for (key, counts) in &by_key {
        for (k, c) in counts.iter().enumerate() {
            words[k] += c;
        }
        let b = ideal.block(d + slack, key);
        max_columns = max_columns.max(b.num_columns());
        for len in b.pivot_lengths() {
            if len <= d {
                rank[len] += 1;
            }
        }
        ideal.clear_cache();
    }
    let per_length: Vec<LengthCount> = (0..=d)
        .map(|k| LengthCount { length: k, words: words[k], rank: rank[k], standard: p.standard_count_exact(k) })
        .collect();
    let upper_bound = per_length.iter().map(LengthCount::upper).sum();
    let standard = p.standard_count(d);
    let verdict = match standard {
        None => Verdict::Inconclusive,
        Some(s) if s == upper_bound => Verdict::Equal,
        Some(s) if upper_bound < s => Verdict::Unequal,
        Some(_) => Verdict::Inconclusive,
    };
    AuditOutcome {
        presentation: p.name.to_string(),
        n: p.n,
        degree: d,
        slack,
        per_length,
        upper_bound,
        standard,
        verdict,
        blocks,
        max_columns,
    }
}

fn verdict_status(v: Verdict) -> Status {
    match v {
        Verdict::Equal => Status::Pass,
        Verdict::Unequal => Status::Fail,
        Verdict::Inconclusive => Status::Inconclusive,
    }
}

/// Compares the upper bound on the filtered dimension with the standard monomial count.
pub fn graded_dimension_audit<F: Field>(p: &Presentation<F>, d: usize, slack: usize) -> Report {
    let start = std::time::Instant::now();
    let o = audit_outcome(p, d, slack);
    let millis = start.elapsed().as_millis() as u64;
    let mut rep = Report::new("pbw-audit")
        .param("presentation", o.presentation.clone())
        .param("n", o.n as u64)
        .param("degree", d as u64)
        .param("slack", slack as u64)
        .param("field", F::NAME)
        .param("dimension", o.upper_bound as u64)
        .param("verdict", o.verdict.to_string());
    let std_text = o.standard.map_or("none".to_string(), |s| s.to_string());
    let mut total = Check::new(
        format!("{}.d{}", o.presentation, d),
        verdict_status(o.verdict),
        Some(format!("upper bound {}, standard count {}", o.upper_bound, std_text)),
    );
    total.millis = millis;
    rep.push(total);
    for c in &o.per_length {
        let ok = c.standard.map(|s| s == c.upper());
        let status = match ok {
            Some(true) => Status::Pass,
            Some(false) if c.upper() < c.standard.unwrap_or(0) => Status::Fail,
            _ => Status::Inconclusive,
        };
        let std_k = c.standard.map_or("none".to_string(), |s| s.to_string());
        rep.push(Check::new(
            format!("{}.d{}.length{}", o.presentation, d, c.length),
            status,
            Some(format!("{} words, rank {}, upper bound {}, standard {}", c.words, c.rank, c.upper(), std_k)),
        ));
    }
    rep.finish()
}

/// First entry of `diff` outside the ideal, or the largest certifying degree.
fn matrix_membership<F: Field>(
    ideal: &mut TruncatedIdeal<F>,
    diff: &FreeMatrixExpr<F>,
    d: usize,
) -> Result<Result<usize, (usize, usize, Word)>, NcError> {
    let deg = diff.max_degree();
    if deg > d {
        return Err(NcError::DegreeOverflow { degree: deg, bound: d });
    }
    let mut used = 0;
    for i in 0..diff.rows {
        for j in 0..diff.cols {
            match ideal.membership(diff.get(i, j), d) {
                Ok(k) => used = used.max(k),
                Err(w) => return Ok(Err((i, j, w))),
            }
        }
    }
    Ok(Ok(used))
}

/// One check for the whole matrix `diff = lhs − rhs`.
pub fn matrix_check<F: Field>(
    ideal: &mut TruncatedIdeal<F>,
    name: &str,
    diff: &FreeMatrixExpr<F>,
    d: usize,
) -> Result<Check, NcError> {
    let p = ideal.pres;
    let mut err = None;
    let c = timed(|| match matrix_membership(ideal, diff, d) {
        Err(e) => {
            err = Some(e);
            Check::fail(name, "")
        }
        Ok(Ok(k)) => Check::pass(name).with_witness(format!("certified at degree {}", k)),
        Ok(Err((i, j, w))) => Check::fail(
            name,
            format!("entry [{},{}] not reduced at degree {}; leading word {}", i + 1, j + 1, d, p.render_word(&w)),
        ),
    });
    match err {
        Some(e) => Err(e),
        None => Ok(c),
    }
}

/// Each entry of `lhs − rhs` lies in the ideal truncated at degree `d`; one check per entry.
pub fn check_matrix_identity<F: Field>(
    p: &Presentation<F>,
    lhs: &FreeMatrixExpr<F>,
    rhs: &FreeMatrixExpr<F>,
    d: usize,
) -> Result<Report, NcError> {
    let diff = lhs.sub(rhs);
    let deg = diff.max_degree();
    if deg > d {
        return Err(NcError::DegreeOverflow { degree: deg, bound: d });
    }
    let mut ideal = TruncatedIdeal::new(p);
    let mut rep = Report::new("matrix-identity").param("presentation", p.name.to_string()).param("degree", d as u64);
    for i in 0..diff.rows {
        for j in 0..diff.cols {
            let name = format!("[{},{}]", i + 1, j + 1);
            rep.push(timed(|| match ideal.membership(diff.get(i, j), d) {
                Ok(k) => Check::pass(&name).with_witness(format!("certified at degree {}", k)),
                Err(w) => Check::fail(&name, format!("leading word {}", p.render_word(&w))),
            }));
        }
    }
    Ok(rep.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismName {
    PhiEll(usize),
    Psi1Z,
}

impl fmt::Display for MorphismName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismName::PhiEll(l) => write!(f, "PhiEll({})", l),
            MorphismName::Psi1Z => f.write_str("Psi1Z"),
        }
    }
}

fn mat<F: Field>(p: &Presentation<F>, name: &str) -> FreeMatrixExpr<F> {
    p.matrix(name).unwrap_or_else(|| panic!("presentation {} has no matrix {}", p.name, name))
}

/// Source relations, as functions of the images of the source generator matrices, checked in the target ideal.
pub fn check_morphism<F: Field>(name: MorphismName, n: usize, d: usize, q: &F, z: &F) -> Result<Report, NcError> {
    let mut rep = Report::new("morphisms")
        .param("morphism", name.to_string())
        .param("n", n as u64)
        .param("degree", d as u64)
        .param("field", F::NAME);
    let c = RConsts::new(n, q);
    let id = FreeMatrixExpr::identity(n);
    match name {
        MorphismName::PhiEll(l) => {
            if l < 2 {
                return Err(NcError::InvalidParameter(format!("PhiEll needs ℓ ≥ 2, got {}", l)));
            }
            let target = build_presentation(PresentationName::Dl(l), n, q)?;
            let mut a = mat(&target, "X1");
            for k in 2..=l {
                a = a.mul(&mat(&target, &format!("X{}", k)));
            }
            let bp = id.add(&mat(&target, "X1").mul(&mat(&target, "D1")));
            let mut ideal = TruncatedIdeal::new(&target);
            for (label, diff) in [("DAA", c.reflection(&a)), ("DBinv", c.inverse_reflection(&bp)), ("D0cross", c.d0_cross(&bp, &a))] {
                rep.push(matrix_check(&mut ideal, &format!("{}.{}", name, label), &diff, d)?);
                ideal.clear_cache();
            }
        }
        MorphismName::Psi1Z => {
            let zi = z.inv().map_err(|_| NcError::InvalidParameter("Z must be nonzero".into()))?;
            let target = build_presentation(PresentationName::D0loc, n, q)?;
            let x = mat(&target, "A");
            let dd = mat(&target, "Ap").mul(&mat(&target, "Bp").scale(&zi).sub(&id));
            rep.push(d0loc_derived_check(n, q, d)?);
            let mut ideal = TruncatedIdeal::new(&target);
            for (label, diff) in
                [("D1rel1", c.reflection(&x)), ("D1rel2", c.inverse_reflection(&dd)), ("D1rel3", c.d1_cross(&dd, &x))]
            {
                rep.push(matrix_check(&mut ideal, &format!("{}.{}", name, label), &diff, d)?);
                ideal.clear_cache();
            }
        }
    }
    Ok(rep.finish())
}

/// The relations `D0loc` lists beyond the inverse pairs lie in the ideal of the rest.
pub fn d0loc_derived_check<F: Field>(n: usize, q: &F, d: usize) -> Result<Check, NcError> {
    let full = build_presentation(PresentationName::D0loc, n, q)?;
    let mut base = full.clone();
    base.relations.retain(|r| !r.label.starts_with("DAAinv") && !r.label.starts_with("D0crossInv"));
    let c = RConsts::new(n, q);
    let (ap, bp) = (mat(&base, "Ap"), mat(&base, "Bp"));
    let diff = c.inverse_reflection(&ap).stack(&c.d0_cross_inverse(&bp, &ap));
    let mut ideal = TruncatedIdeal::new(&base);
    matrix_check(&mut ideal, "D0loc.derived", &diff, d)
}

/// `X` with its columns in reverse order, the FRT generator matrix of an `X^(a)` block.
pub fn frt_matrix<F: Field>(x: &FreeMatrixExpr<F>) -> FreeMatrixExpr<F> {
    FreeMatrixExpr::from_fn(x.rows, x.cols, |i, j| x.get(i, x.cols - 1 - j).clone())
}

/// `Σ_w (−q)^{l(w)} x_{w(1)1}⋯x_{w(n)n}` (columns) or `x_{1w(1)}⋯x_{nw(n)}` (rows).
pub fn quantum_determinant<F: Field>(x: &FreeMatrixExpr<F>, q: &F, by_columns: bool) -> FreeAlgElem<F> {
    let n = x.rows;
    let mut out = FreeAlgElem::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let mut term = FreeAlgElem::scalar(q.neg().pow(inversions as i64));
        for k in 0..n {
            let e = if by_columns { x.get(perm[k], k) } else { x.get(k, perm[k]) };
            term = term.mul(e);
        }
        out = out.add(&term);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else { return false };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Moment-map identities in inverse-free form, `X°` commutations and the quantum determinant.
pub fn identity_suite<F: Field>(n: usize, q: &F, d: usize) -> Result<Report, NcError> {
    let mut rep = Report::new("identity-suite").param("n", n as u64).param("degree", d as u64).param("field", F::NAME);
    let c = RConsts::new(n, q);
    let (r, r21, rinv, r21inv) = (&c.r, &c.r21, &c.rinv, &c.r21inv);

    let d1 = build_presentation(PresentationName::D1, n, q)?;
    let x = mat(&d1, "X");
    let dm = mat(&d1, "D");
    let ly = c.id.add(&x.mul(&dm));
    let ry = c.id.add(&dm.mul(&x));
    let (ly1, ry1) = (c.s1(&ly), c.s1(&ry));
    let (x2, d2) = (c.s2(&x), c.s2(&dm));
    let eqs = [
        ("D1YL1", c.inverse_reflection(&ly)),
        ("D1YR1", c.reflection(&ry)),
        ("D1YL2", ly1.mul(r21inv).mul(&x2).sub(&r.mul(&x2).mul(r21).mul(&ly1).mul(r21inv))),
        ("D1YL3", ly1.mul(r21inv).mul(&d2).sub(&r21inv.mul(&d2).mul(rinv).mul(&ly1).mul(r21inv))),
        ("D1YR2", ry1.mul(r).mul(&x2).sub(&r.mul(&x2).mul(r21).mul(&ry1).mul(r))),
        ("D1YR3", ry1.mul(r).mul(&d2).sub(&r21inv.mul(&d2).mul(rinv).mul(&ry1).mul(r))),
    ];
    let mut ideal = TruncatedIdeal::new(&d1);
    for (label, diff) in eqs {
        rep.push(matrix_check(&mut ideal, &format!("D1.{}", label), &diff, d)?);
    }
    drop(ideal);

    let dl = build_presentation(PresentationName::Dl(2), n, q)?;
    let mut ideal = TruncatedIdeal::new(&dl);
    let xs = [mat(&dl, "X1"), mat(&dl, "X2")];
    let ds = [mat(&dl, "D1"), mat(&dl, "D2")];
    for a in 0..2 {
        let ly = c.id.add(&xs[a].mul(&ds[a]));
        let ry = c.id.add(&ds[a].mul(&xs[a]));
        let (ly1, ry1, x2, d2) = (c.s1(&ly), c.s1(&ry), c.s2(&xs[a]), c.s2(&ds[a]));
        let eqs = [
            ("YR1", ry1.mul(&x2).sub(&x2.mul(r21).mul(&ry1).mul(r))),
            ("YR2", ry1.mul(r).mul(&d2).sub(&r21inv.mul(&d2).mul(&ry1))),
            ("YL1", r.mul(&x2).mul(&ly1).sub(&ly1.mul(r21inv).mul(&x2))),
            ("YL2", ly1.mul(&d2).mul(r21).sub(&d2.mul(rinv).mul(&ly1))),
        ];
        for (label, diff) in eqs {
            rep.push(matrix_check(&mut ideal, &format!("Dl(2).{}[{}]", label, a + 1), &diff, d)?);
        }
    }
    let xc = xs[0].mul(&xs[1]);
    let x1c = c.s1(&xs[0]).mul(&c.s2(&xc)).sub(&r21inv.mul(&c.s2(&xc)).mul(r21).mul(&c.s1(&xs[0])));
    rep.push(matrix_check(&mut ideal, "Dl(2).X1circ", &x1c, d)?);
    let xlc = c.s1(&xc).mul(&c.s2(&xs[1])).sub(&c.s2(&xs[1]).mul(r21).mul(&c.s1(&xc)).mul(r21inv));
    rep.push(matrix_check(&mut ideal, "Dl(2).Xellcirc", &xlc, d)?);
    for (a, xa) in xs.iter().enumerate() {
        // R21 X1 X2 = X2 X1 R becomes the FRT relation R X1 X2 = X2 X1 R after reversing columns
        let frt = frt_matrix(xa);
        let col = quantum_determinant(&frt, q, true);
        let row = quantum_determinant(&frt, q, false);
        let forms = FreeMatrixExpr::from_fn(1, 1, |_, _| col.sub(&row));
        rep.push(matrix_check(&mut ideal, &format!("Dl(2).detq-forms[{}]", a + 1), &forms, d)?);
        let comm = FreeMatrixExpr::from_fn(n, n, |i, j| col.mul(xa.get(i, j)).sub(&xa.get(i, j).mul(&col)));
        rep.push(matrix_check(&mut ideal, &format!("Dl(2).detq-central[{}]", a + 1), &comm, d.min(n + 1).max(comm.max_degree()))?);
    }
    Ok(rep.finish())
}

/// The cross relation of `D0IV` follows from (DAB) once `B` and `B⁻¹` are both present.
pub fn dab_implies_cross<F: Field>(n: usize, q: &F, d: usize) -> Result<Check, NcError> {
    let p = build_d0_with_b(n, q);
    let c = RConsts::new(n, q);
    let cross = c.d0_cross(&mat(&p, "Bp"), &mat(&p, "A"));
    let mut ideal = TruncatedIdeal::new(&p);
    matrix_check(&mut ideal, "D0.DAB-implies-cross", &cross, d)
}

/// The R-matrix form of the Weyl relations against the presentation by generators.
pub fn weyl_r_check<F: Field>(n: usize, q: &F) -> Result<Check, NcError> {
    let p = build_presentation(PresentationName::W, n, q)?;
    let qi = q.inv()?;
    let x = |i: usize| FreeAlgElem::generator(p.generator_id(&format!("x{}", i + 1)).expect("x generator"));
    let dg = |i: usize| FreeAlgElem::generator(p.generator_id(&format!("d{}", i + 1)).expect("d generator"));
    let rm = r_matrix(n, q).matrix;
    let rr = |a: usize, b: usize, cc: usize, dd: usize| rm.get(a * n + b, cc * n + dd).clone();
    let nn = n * n;
    let mut xx = FreeMatrixExpr::zeros(1, nn);
    let mut ddm = FreeMatrixExpr::zeros(nn, 1);
    let mut dx = FreeMatrixExpr::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            // q x1x2 = x2x1 R
            let mut e = x(i).mul(&x(j)).scale(q);
            for a in 0..n {
                for b in 0..n {
                    e = e.sub(&x(b).mul(&x(a)).scale(&rr(a, b, i, j)));
                }
            }
            xx.set(0, i * n + j, e);
            // q d1d2 = R d2d1
            let mut e = dg(i).mul(&dg(j)).scale(q);
            for a in 0..n {
                for b in 0..n {
                    e = e.sub(&dg(b).mul(&dg(a)).scale(&rr(i, j, a, b)));
                }
            }
            ddm.set(i * n + j, 0, e);
            // q⁻¹ d2 x1 = x1 R d2 + q⁻¹ Σ e^i⊗e_i
            let (k, l) = (i, j);
            let mut e = dg(k).mul(&x(l)).scale(&qi);
            for a in 0..n {
                for b in 0..n {
                    e = e.sub(&x(a).mul(&dg(b)).scale(&rr(a, k, l, b)));
                }
            }
            if k == l {
                e = e.sub(&FreeAlgElem::scalar(qi.clone()));
            }
            dx.set(k, l, e);
        }
    }
    let all = FreeMatrixExpr::from_fn(1, 3 * nn, |_, c| match c / nn {
        0 => xx.get(0, c % nn).clone(),
        1 => ddm.get(c % nn, 0).clone(),
        _ => dx.get((c % nn) / n, c % n).clone(),
    });
    let mut ideal = TruncatedIdeal::new(&p);
    matrix_check(&mut ideal, "W.WeylR", &all, 2)
}

/// Index tuples `(k, l, i, j)` (from 1) whose printed `x_kl ∂_ij` formula lies in the `D1` ideal.
pub fn d1_printed_cross_consequences<F: Field>(n: usize, q: &F) -> Result<Vec<(usize, usize, usize, usize)>, NcError> {
    let p = build_presentation(PresentationName::D1, n, q)?;
    let g = |s: String| p.generator_id(&s).expect("generator");
    let mut ideal = TruncatedIdeal::new(&p);
    let mut out = Vec::new();
    for k in 0..n {
        for l in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let lhs =
                        FreeAlgElem::monomial(vec![g(format!("x{}{}", k + 1, l + 1)), g(format!("d{}{}", i + 1, j + 1))], F::one());
                    if ideal.membership(&lhs.sub(&d1_cross_rule(&p, k, l, i, j)), 2).is_ok() {
                        out.push((k + 1, l + 1, i + 1, j + 1));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Random words straightened both ways and compared with the linear-algebra normal form.
pub fn straightening_suite<F: Field>(p: &Presentation<F>, count: usize, max_len: usize, seed: u64) -> Result<Report, NcError> {
    let rw = Rewriter::new(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = p.num_generators() as u16;
    let words: Vec<Word> = (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            (0..len).map(|_| rng.gen_range(0..g)).collect()
        })
        .collect();
    let mut rep = Report::new("straightening")
        .param("presentation", p.name.to_string())
        .param("n", p.n as u64)
        .param("words", count as u64)
        .param("max_length", max_len as u64)
        .param("seed", seed);
    let mut left = Vec::new();
    let mut max_steps = 0;
    let mut budget_err = None;
    rep.push(timed(|| {
        for w in &words {
            match rw.straighten_elem(&FreeAlgElem::monomial(w.clone(), F::one()), Strategy::Leftmost) {
                Ok((e, s)) => {
                    max_steps = max_steps.max(s);
                    left.push(e);
                }
                Err(e) => {
                    budget_err = Some((w.clone(), e));
                    return Check::fail("terminates", "");
                }
            }
        }
        Check::pass("terminates").with_witness(format!("at most {} rewrites per word", max_steps))
    }));
    if let Some((w, e)) = budget_err {
        rep.checks.last_mut().expect("pushed").witness = Some(format!("{}: {}", p.render_word(&w), e));
        return Ok(rep.finish());
    }
    rep.push(timed(|| {
        for (w, l) in words.iter().zip(&left) {
            match rw.straighten_word(w, Strategy::Rightmost) {
                Ok(r) if &r == l => {}
                Ok(_) => return Check::fail("order-independent", p.render_word(w)),
                Err(e) => return Check::fail("order-independent", format!("{}: {}", p.render_word(w), e)),
            }
        }
        Check::pass("order-independent")
    }));
    let mut ideal = TruncatedIdeal::new(p);
    rep.push(timed(|| {
        for (w, l) in words.iter().zip(&left) {
            let e = FreeAlgElem::monomial(w.clone(), F::one());
            let mut nf = ideal.normal_form(&e, w.len());
            if nf.terms().any(|(u, _)| p.is_standard(u) == Some(false)) {
                nf = ideal.normal_form(&e, w.len() + 1);
            }
            if &nf != l {
                return Check::fail("matches-normal-form", p.render_word(w));
            }
        }
        Check::pass("matches-normal-form")
    }));
    Ok(rep.finish())
}
