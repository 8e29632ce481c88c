//! Polynomial representation of the GL_n double affine Hecke algebra and the
//! cyclotomic q-Dunkl operators.
//!
//! Generator indices are 1-based as in the usual presentation.

use crate::laurent::{LaurentPoly, Perm, RationalCoeff, MAXN};
use crate::qdo::{Direction, Dro, QdoError};
use crate::report::{clip, timed, Check, Report};
use crate::scalars::{Field, Params};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DahaError {
    #[error("generator index {index} out of range for {kind:?} at n = {n}")]
    BadIndex { kind: GenKind, index: usize, n: usize },
    #[error(transparent)]
    Qdo(#[from] QdoError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    T,
    Tinv,
    X,
    Xinv,
    Pi,
    Piinv,
    Y,
    Yinv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GenSymbol {
    pub kind: GenKind,
    pub index: usize,
}

/// Builder for represented DAHA elements at fixed `n`, q, t.
#[derive(Clone, Debug)]
pub struct Daha<F> {
    n: usize,
    q: F,
    t: F,
}

impl<F: Field> Daha<F> {
    pub fn new(n: usize, q: F, t: F) -> Self {
        assert!((1..=MAXN).contains(&n), "rank must be in 1..={}", MAXN);
        Daha { n, q, t }
    }

    pub fn from_params(n: usize, p: &Params<F>) -> Self {
        Self::new(n, p.q.clone(), p.t.clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    pub fn t(&self) -> &F {
        &self.t
    }

    fn t_minus_tinv(&self) -> F {
        self.t.sub(&self.t.inv().expect("t nonzero"))
    }

    pub fn identity(&self) -> Dro<F> {
        Dro::identity(self.n, &self.q)
    }

    pub fn scalar(&self, c: F) -> Dro<F> {
        Dro::scalar(self.n, &self.q, c)
    }

    /// `t s_i + (t - t^{-1}) x_{i+1} (s_i - 1)/(x_i - x_{i+1})`.
    pub fn t_gen(&self, i: usize) -> Dro<F> {
        assert!(i >= 1 && i < self.n);
        let n = self.n;
        let (a, b) = (i - 1, i);
        let c = self.t_minus_tinv();
        let xb = LaurentPoly::var(n, b).scale(&c);
        let frac = RationalCoeff::over_binomial(xb, a, b, F::one());
        let s = Perm::simple(n, a);
        let on_s = RationalCoeff::constant(n, self.t.clone()).add(&frac);
        let id = [0; MAXN];
        Dro::term(n, &self.q, on_s, id, s).add(&Dro::term(n, &self.q, frac.neg(), id, Perm::identity(n)))
    }

    pub fn t_inv(&self, i: usize) -> Dro<F> {
        self.t_gen(i).sub(&self.scalar(self.t_minus_tinv()))
    }

    pub fn x(&self, i: usize) -> Dro<F> {
        Dro::multiplication(LaurentPoly::var(self.n, i - 1), &self.q)
    }

    pub fn x_inv(&self, i: usize) -> Dro<F> {
        let mut e = [0; MAXN];
        e[i - 1] = -1;
        Dro::multiplication(LaurentPoly::monomial(self.n, e, F::one()), &self.q)
    }

    /// `f ↦ f(x_2, .., x_n, q^{-2} x_1)`.
    pub fn pi(&self) -> Dro<F> {
        let mut mu = [0; MAXN];
        mu[0] = -2;
        Dro::term(self.n, &self.q, RationalCoeff::one(self.n), mu, Perm::cycle(self.n))
    }

    /// `f ↦ f(q^2 x_n, x_1, .., x_{n-1})`.
    pub fn pi_inv(&self) -> Dro<F> {
        let mut mu = [0; MAXN];
        mu[self.n - 1] = 2;
        Dro::term(self.n, &self.q, RationalCoeff::one(self.n), mu, Perm::cycle(self.n).inverse())
    }

    /// `Y_i = T_i ⋯ T_{n-1} π^{-1} T_1^{-1} ⋯ T_{i-1}^{-1}`.
    pub fn y(&self, i: usize) -> Dro<F> {
        let mut r = self.identity();
        for k in i..self.n {
            r = r.compose(&self.t_gen(k));
        }
        r = r.compose(&self.pi_inv());
        for k in 1..i {
            r = r.compose(&self.t_inv(k));
        }
        r
    }

    /// `Y_i^{-1} = T_{i-1} ⋯ T_1 π T_{n-1}^{-1} ⋯ T_i^{-1}`.
    pub fn y_inv(&self, i: usize) -> Dro<F> {
        let mut r = self.identity();
        for k in (1..i).rev() {
            r = r.compose(&self.t_gen(k));
        }
        r = r.compose(&self.pi());
        for k in (i..self.n).rev() {
            r = r.compose(&self.t_inv(k));
        }
        r
    }

    pub fn generator(&self, sym: GenSymbol) -> Result<Dro<F>, DahaError> {
        let n = self.n;
        let i = sym.index;
        let bad = || DahaError::BadIndex { kind: sym.kind, index: i, n };
        match sym.kind {
            GenKind::T | GenKind::Tinv if i == 0 || i >= n => Err(bad()),
            GenKind::X | GenKind::Xinv | GenKind::Y | GenKind::Yinv if i == 0 || i > n => Err(bad()),
            GenKind::T => Ok(self.t_gen(i)),
            GenKind::Tinv => Ok(self.t_inv(i)),
            GenKind::X => Ok(self.x(i)),
            GenKind::Xinv => Ok(self.x_inv(i)),
            GenKind::Pi => Ok(self.pi()),
            GenKind::Piinv => Ok(self.pi_inv()),
            GenKind::Y => Ok(self.y(i)),
            GenKind::Yinv => Ok(self.y_inv(i)),
        }
    }

    /// `T_w` along a reduced word.
    pub fn t_w(&self, w: &Perm) -> Dro<F> {
        let mut r = self.identity();
        for i in w.reduced_word() {
            r = r.compose(&self.t_gen(i + 1));
        }
        r
    }

    /// `Σ_w t^{2 l(w)}`.
    pub fn poincare(&self) -> F {
        Perm::all(self.n).iter().fold(F::zero(), |acc, w| acc.add(&self.t.pow(2 * w.length() as i64)))
    }

    /// Hecke symmetrizer `Σ_w t^{l(w)} T_w / Σ_w t^{2 l(w)}`.
    pub fn symmetrizer(&self) -> Dro<F> {
        let mut r = Dro::zero(self.n, &self.q);
        for w in Perm::all(self.n) {
            r = r.add(&self.t_w(&w).scale(&self.t.pow(w.length() as i64)));
        }
        r.scale(&self.poincare().inv().expect("Poincaré polynomial nonzero"))
    }

    /// `D_1 = X_1^{-1} ∏_a (q^{-1} t^{1-n} Y_1^{-1} - Z_a)` conjugated to slot `i`.
    /// `D_i` with `D_1 = ∏_a (q^{-3} t^{1-n} Y_1^{-1} - Z_a) X_1^{-1}`, conjugated
    /// by `T^{-1}`. Agrees with `X_1^{-1} ∏_a (q^{-1} Y_1^{-1} - Z_a)` at `n = 1`.
    pub fn dunkl(&self, i: usize, z: &[F]) -> Result<Dro<F>, DahaError> {
        let c = self.q.pow(-3).mul(&self.t.pow(1 - self.n as i64));
        self.dunkl_with_constant(i, z, DunklOrder::FactorsLeft, &c)
    }

    /// The literal `X_1^{-1} ∏_a (q^{-1} t^{1-n} Y_1^{-1} - Z_a)` and its `T^{-1}`-conjugates.
    pub fn dunkl_x_left(&self, i: usize, z: &[F]) -> Result<Dro<F>, DahaError> {
        let c = self.q.pow(-1).mul(&self.t.pow(1 - self.n as i64));
        self.dunkl_with_constant(i, z, DunklOrder::XLeft, &c)
    }

    /// `D_i` with `c Y_1^{-1} - Z_a` factors in place of the printed constant.
    pub fn dunkl_with_constant(&self, i: usize, z: &[F], order: DunklOrder, c: &F) -> Result<Dro<F>, DahaError> {
        if i == 0 || i > self.n {
            return Err(DahaError::BadIndex { kind: GenKind::X, index: i, n: self.n });
        }
        let b = self.y_inv(1).scale(c);
        let mut prod = self.identity();
        for za in z {
            prod = prod.compose(&b.sub(&self.scalar(za.clone())));
        }
        let d1 = match order {
            DunklOrder::FactorsLeft => prod.compose(&self.x_inv(1)),
            DunklOrder::XLeft => self.x_inv(1).compose(&prod),
        };
        let mut left = self.identity();
        let mut right = self.identity();
        for k in 1..i {
            left = self.t_inv(k).compose(&left);
            right = right.compose(&self.t_inv(k));
        }
        Ok(left.compose(&d1).compose(&right))
    }

    /// `ε(D_1) = ∏_a (q³ X_1^{-1} - Z_a) · t^{1-n} Y_1^{-1}` with `ε` the automorphism
    /// `X_i ↦ t^{n-1}Y_i`, `t^{n-1}Y_i ↦ X_i`, `q ↦ q^{-1}`, `t ↦ t^{-1}`, applied to [`Daha::dunkl`].
    pub fn eps_dunkl_direct(&self, z: &[F]) -> Dro<F> {
        let mut r = self.identity();
        let q3 = self.q.pow(3);
        for za in z {
            r = r.compose(&self.x_inv(1).scale(&q3).sub(&self.scalar(za.clone())));
        }
        r.compose(&self.y_inv(1).scale(&self.t.pow(1 - self.n as i64)))
    }

    /// `ε(D_1)` from `B_0 = t^{1-n} Y_1^{-1}` and `B_a = γ^{-1} B_{a-1} γ - Z_a B_{a-1}`.
    pub fn eps_dunkl(&self, z: &[F]) -> Result<Dro<F>, DahaError> {
        let mut b = self.y_inv(1).scale(&self.t.pow(1 - self.n as i64));
        for za in z {
            b = b.gaussian_conjugate(Direction::Inward)?.sub(&b.scale(za));
        }
        Ok(b)
    }
}

/// Placement of `X_1^{-1}` relative to the factors `q^{-1}t^{1-n}Y_1^{-1} - Z_a` in `D_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DunklOrder {
    /// `∏_a (..) · X_1^{-1}`
    FactorsLeft,
    /// `X_1^{-1} · ∏_a (..)`
    XLeft,
}

fn eq_check<F: Field>(name: String, lhs: &Dro<F>, rhs: &Dro<F>) -> Check {
    let diff = lhs.sub(rhs);
    Check::from_bool(name, diff.is_zero(), || clip(format!("lhs - rhs = {}", diff)))
}

/// Every relation of the (T, X, Y) and (T, X, π) presentations, as operator identities.
pub fn verify_daha_presentation<F: Field>(n: usize, p: &Params<F>) -> Report {
    let d = Daha::from_params(n, p);
    let mut rep = Report::new("daha-presentation").param("n", n);
    let t = &p.t;
    let tinv = t.inv().expect("t nonzero");
    let q2 = p.q.pow(2);
    let q2i = p.q.pow(-2);
    let ts: Vec<Dro<F>> = (1..n).map(|i| d.t_gen(i)).collect();
    let tis: Vec<Dro<F>> = (1..n).map(|i| d.t_inv(i)).collect();
    let xs: Vec<Dro<F>> = (1..=n).map(|i| d.x(i)).collect();
    let ys: Vec<Dro<F>> = (1..=n).map(|i| d.y(i)).collect();
    let id = d.identity();
    let zero = Dro::zero(n, &p.q);
    let mut eq = |name: String, l: &dyn Fn() -> Dro<F>, r: &dyn Fn() -> Dro<F>| {
        rep.push(timed(|| eq_check(name, &l(), &r())));
    };

    for i in 1..n {
        let (ti, tii) = (&ts[i - 1], &tis[i - 1]);
        eq(
            format!("hecke-quadratic/T{}", i),
            &|| ti.sub(&d.scalar(t.clone())).compose(&ti.add(&d.scalar(tinv.clone()))),
            &|| zero.clone(),
        );
        eq(format!("inverse/T{}", i), &|| ti.compose(tii), &|| id.clone());
        eq(format!("TXT/T{}", i), &|| ti.compose(&xs[i - 1]).compose(ti), &|| xs[i].clone());
        eq(format!("TinvYTinv/T{}", i), &|| tii.compose(&ys[i - 1]).compose(tii), &|| ys[i].clone());
        for j in 1..=n {
            if j != i && j != i + 1 {
                eq(format!("TX-commute/T{}X{}", i, j), &|| ti.compose(&xs[j - 1]), &|| xs[j - 1].compose(ti));
                eq(format!("TY-commute/T{}Y{}", i, j), &|| ti.compose(&ys[j - 1]), &|| ys[j - 1].compose(ti));
            }
        }
        if i + 1 < n {
            let tj = &ts[i];
            eq(
                format!("braid/T{}T{}", i, i + 1),
                &|| ti.compose(tj).compose(ti),
                &|| tj.compose(ti).compose(tj),
            );
        }
        for j in i + 2..n {
            let tj = &ts[j - 1];
            eq(format!("T-commute/T{}T{}", i, j), &|| ti.compose(tj), &|| tj.compose(ti));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let (xi, xj, yi, yj) = (&xs[i - 1], &xs[j - 1], &ys[i - 1], &ys[j - 1]);
            eq(format!("X-commute/X{}X{}", i, j), &|| xi.compose(xj), &|| xj.compose(xi));
            eq(format!("Y-commute/Y{}Y{}", i, j), &|| yi.compose(yj), &|| yj.compose(yi));
        }
        eq(format!("inverse/Y{}", i), &|| ys[i - 1].compose(&d.y_inv(i)), &|| id.clone());
    }
    let yprod = ys.iter().fold(id.clone(), |a, y| a.compose(y));
    let xprod = xs.iter().fold(id.clone(), |a, x| a.compose(x));
    for j in 1..=n {
        let (xj, yj) = (&xs[j - 1], &ys[j - 1]);
        eq(format!("YprodX/X{}", j), &|| yprod.compose(xj), &|| xj.compose(&yprod).scale(&q2));
        eq(format!("XprodY/Y{}", j), &|| xprod.compose(yj), &|| yj.compose(&xprod).scale(&q2i));
    }
    if n >= 2 {
        eq(
            "X1Y2".into(),
            &|| xs[0].compose(&ys[1]),
            &|| ys[1].compose(&ts[0]).compose(&ts[0]).compose(&xs[0]),
        );
    }
    // the (T, X, π) presentation
    let pi = d.pi();
    let pin = pi.pow(n as u32);
    eq("inverse/pi".into(), &|| pi.compose(&d.pi_inv()), &|| id.clone());
    for i in 1..n {
        let ti = &ts[i - 1];
        if i + 1 < n {
            eq(format!("piT/T{}", i), &|| pi.compose(ti), &|| ts[i].compose(&pi));
        }
        eq(format!("pinT/T{}", i), &|| pin.compose(ti), &|| ti.compose(&pin));
    }
    for i in 1..n {
        eq(format!("piX/X{}", i), &|| pi.compose(&xs[i - 1]), &|| xs[i].compose(&pi));
    }
    eq("piX/Xn".into(), &|| pi.compose(&xs[n - 1]), &|| xs[0].compose(&pi).scale(&q2i));
    rep.finish()
}

/// `[D_i, D_j] = 0` for all pairs.
pub fn verify_dunkl_commutativity<F: Field>(n: usize, p: &Params<F>) -> Result<Report, DahaError> {
    let d = Daha::from_params(n, p);
    let mut rep = Report::new("dunkl-commutativity").param("n", n).param("ell", p.ell());
    let ds: Vec<Dro<F>> = (1..=n).map(|i| d.dunkl(i, &p.z)).collect::<Result<_, _>>()?;
    for i in 1..=n {
        for j in i + 1..=n {
            rep.push(timed(|| {
                let c = ds[i - 1].commutator(&ds[j - 1]);
                Check::from_bool(format!("commute/D{}D{}", i, j), c.is_zero(), || clip(c.to_string()))
            }));
        }
    }
    Ok(rep.finish())
}

/// Idempotency and absorption identities of the symmetrizer.
pub fn verify_symmetrizer<F: Field>(n: usize, p: &Params<F>) -> Report {
    let d = Daha::from_params(n, p);
    let s = d.symmetrizer();
    let mut rep = Report::new("symmetrizer").param("n", n);
    rep.push(timed(|| eq_check("idempotent".into(), &s.compose(&s), &s)));
    for i in 1..n {
        let ti = d.t_gen(i);
        let ts = s.scale(&p.t);
        rep.push(timed(|| eq_check(format!("left-absorb/T{}", i), &ti.compose(&s), &ts)));
        rep.push(timed(|| eq_check(format!("right-absorb/T{}", i), &s.compose(&ti), &ts)));
        rep.push(timed(|| eq_check(format!("sandwich/T{}", i), &s.compose(&ti).compose(&s), &ts)));
    }
    rep.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Exp;
    use crate::scalars::RatFunc;

    fn daha(n: usize) -> Daha<RatFunc> {
        Daha::new(n, RatFunc::var(0), RatFunc::var(1))
    }

    fn mono(n: usize, e: Exp) -> LaurentPoly<RatFunc> {
        LaurentPoly::monomial(n, e, RatFunc::one())
    }

    #[test]
    fn n1_y_is_a_pure_shift() {
        let d = daha(1);
        assert_eq!(d.y(1), Dro::shift_one(1, d.q(), 0, 2));
    }

    #[test]
    fn t_fixes_one_up_to_t() {
        let d = daha(2);
        let r = d.t_gen(1).apply(&LaurentPoly::one(2));
        assert!(r.equals(&RationalCoeff::constant(2, d.t().clone())));
    }

    #[test]
    fn pi_sends_xn_to_q_inverse_square_x1() {
        for n in 1..=3 {
            let d = daha(n);
            let mut e = [0; MAXN];
            e[n - 1] = 1;
            let r = d.pi().apply(&mono(n, e));
            let expect = LaurentPoly::var(n, 0).scale(&d.q().pow(-2));
            assert!(r.equals(&RationalCoeff::from_poly(expect)));
        }
    }

    #[test]
    fn y1_chain_at_n2() {
        let d = daha(2);
        assert_eq!(d.y(1), d.t_gen(1).compose(&d.pi_inv()));
        assert_eq!(d.y(2), d.pi_inv().compose(&d.t_inv(1)));
    }

    #[test]
    fn t_x_t_is_x_next() {
        let d = daha(2);
        assert_eq!(d.t_gen(1).compose(&d.x(1)).compose(&d.t_gen(1)), d.x(2));
    }

    #[test]
    fn hecke_relation_via_composition() {
        let d = daha(3);
        for i in 1..3 {
            let t = d.t_gen(i);
            let c = d.t().sub(&d.t().inv().unwrap());
            let z = t.compose(&t).sub(&t.scale(&c)).sub(&d.identity());
            assert!(z.is_zero());
        }
    }

    #[test]
    fn demazure_output_is_polynomial() {
        let d = daha(3);
        for a in -2..=3 {
            for b in -1..=2 {
                let p = mono(3, [a, b, 1, 0]);
                for i in 1..3 {
                    assert!(d.t_gen(i).apply(&p).is_polynomial());
                }
            }
        }
    }

    #[test]
    fn symmetrizer_n2_matches_closed_form() {
        let d = daha(2);
        let t = d.t().clone();
        let expect = d.identity().add(&d.t_gen(1).scale(&t)).scale(&RatFunc::one().add(&t.pow(2)).inv().unwrap());
        let s = d.symmetrizer();
        assert_eq!(s, expect);
        let r = s.apply(&LaurentPoly::var(2, 0));
        assert!(r.as_poly().unwrap().is_symmetric());
        assert!(verify_symmetrizer(2, &Params::<RatFunc>::generic(0).unwrap()).all_pass());
    }

    #[test]
    fn dunkl_small_cases() {
        let d = daha(2);
        assert_eq!(d.dunkl(2, &[]).unwrap(), d.x_inv(2));
        let d1 = daha(1);
        let z = RatFunc::var(2);
        let q = d1.q().clone();
        let x1i = LaurentPoly::monomial(1, [-1, 0, 0, 0], RatFunc::one());
        let shift = Dro::shift_one(1, &q, 0, -2).scale(&q.inv().unwrap());
        let expect = Dro::multiplication(x1i, &q).compose(&shift.sub(&d1.scalar(z.clone())));
        assert_eq!(d1.dunkl(1, &[z.clone()]).unwrap(), expect);
        assert_eq!(d1.dunkl_x_left(1, &[z]).unwrap(), expect);
    }

    #[test]
    fn x_left_dunkl_fails_to_commute() {
        let d = daha(2);
        let z = [RatFunc::var(2)];
        let a = d.dunkl_x_left(1, &z).unwrap();
        let b = d.dunkl_x_left(2, &z).unwrap();
        assert!(!a.commutator(&b).is_zero());
        let a = d.dunkl(1, &z).unwrap();
        let b = d.dunkl(2, &z).unwrap();
        assert!(a.commutator(&b).is_zero());
    }

    #[test]
    fn eps_dunkl_small_cases() {
        let d = daha(1);
        let q = d.q().clone();
        assert_eq!(d.eps_dunkl(&[]).unwrap(), Dro::shift_one(1, &q, 0, -2));
        let z = RatFunc::var(2);
        let coef = LaurentPoly::from_terms(1, [([-1, 0, 0, 0], q.clone()), ([0; 4], z.neg())]);
        let expect = Dro::multiplication(coef, &q).compose(&Dro::shift_one(1, &q, 0, -2));
        assert_eq!(d.eps_dunkl(&[z]).unwrap(), expect);
        let d2 = daha(2);
        let e0 = d2.eps_dunkl(&[]).unwrap();
        assert_eq!(e0, d2.y_inv(1).scale(&d2.t().inv().unwrap()));
    }

    #[test]
    fn bad_index_is_rejected() {
        let d = daha(2);
        assert!(d.generator(GenSymbol { kind: GenKind::T, index: 2 }).is_err());
        assert!(d.generator(GenSymbol { kind: GenKind::Y, index: 0 }).is_err());
        assert!(d.dunkl(3, &[]).is_err());
    }

    #[test]
    fn presentation_n2_exact() {
        let r = verify_daha_presentation(2, &Params::<RatFunc>::generic(0).unwrap());
        for c in &r.checks {
            assert!(c.is_pass(), "{} failed: {:?}", c.name, c.witness);
        }
    }
}
