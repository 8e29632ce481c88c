use qdaha::laurent::LaurentPoly;
use qdaha::qdo::Dro;
use qdaha::scalars::{draw_params, Field, Fp, Mode, ParamContext, Params, RatFunc};
use qdaha::toroidal::*;

fn modp(ell: usize, seed: u64) -> Params<Fp> {
    Params::from_context(&draw_params(&ParamContext::new(ell, Mode::ModpRandom, seed)).unwrap()).unwrap()
}

fn status(r: &qdaha::report::Report, name: &str) -> bool {
    r.find(name).unwrap_or_else(|| panic!("missing check {}", name)).is_pass()
}

#[test]
fn spec_mode_examples_exact() {
    let p0 = Params::<RatFunc>::generic(0).unwrap();
    let r = verify_toroidal_relations(&GkloContext::new(1, &p0), ModeWindow::new(0, 0).unwrap());
    assert!(status(&r, "ef/0,0"));
    let r = verify_toroidal_relations(&GkloContext::new(2, &p0), ModeWindow::new(0, 0).unwrap());
    assert!(r.all_pass(), "{}", r.to_json());
    let p1 = Params::<RatFunc>::generic(1).unwrap();
    let r = verify_toroidal_relations(&GkloContext::new(2, &p1), ModeWindow::new(0, 1).unwrap());
    assert!(status(&r, "psi+e/1,0") && status(&r, "psi-e/1,0"));
    assert!(r.all_pass(), "{}", r.to_json());
}

#[test]
fn relations_on_full_window_mod_p() {
    for (n, ell) in [(1, 2), (2, 0), (2, 2)] {
        let r = verify_toroidal_relations(&GkloContext::new(n, &modp(ell, 21)), ModeWindow::new(-2, 2).unwrap());
        assert!(r.all_pass(), "n={} ell={}: {:?}", n, ell, r.failures().next());
        assert_eq!(r.checks.len(), 2 * 25 + 4 * 25 + 25 + 2 * 35);
    }
}

#[test]
fn empty_window_is_rejected() {
    assert_eq!(ModeWindow::new(1, 0), Err(ToroidalError::EmptyWindow(1, 0)));
}

/// `exp` of a truncated series with zero constant term.
fn exp_series(n: usize, terms: &[LaurentPoly<RatFunc>], len: usize) -> Vec<LaurentPoly<RatFunc>> {
    // E' = L' E, so k E_k = Σ_{j=1..k} j L_j E_{k-j}
    let mut e = vec![LaurentPoly::one(n)];
    for k in 1..len {
        let mut acc = LaurentPoly::zero(n);
        for j in 1..=k {
            let lj = terms[j].scale(&RatFunc::from_int(j as i64));
            acc = acc.add(&lj.mul(&e[k - j]));
        }
        e.push(acc.scale(&RatFunc::from_int(k as i64).inv().unwrap()));
    }
    e
}

#[test]
fn psi_plus_is_exp_of_printed_b() {
    let len = 4;
    for (n, ell) in [(1, 0), (2, 1)] {
        let ctx = GkloContext::new(n, &Params::<RatFunc>::generic(ell).unwrap());
        let mut logs = vec![LaurentPoly::zero(n)];
        for m in 1..len as i32 {
            logs.push(gklo_b(m, &ctx).unwrap().scale(&RatFunc::from_int(m as i64).inv().unwrap()));
        }
        let e = exp_series(n, &logs, len);
        let psi = PsiModes::new(&ctx, len);
        for (s, es) in e.iter().enumerate() {
            assert_eq!(psi.plus(s as i32), *es, "n={} ell={} s={}", n, ell, s);
        }
        let top = psi_minus_top(&ctx);
        let mut logs = vec![LaurentPoly::zero(n)];
        for m in 1..len as i32 {
            logs.push(gklo_b(-m, &ctx).unwrap().scale(&RatFunc::from_int(m as i64).inv().unwrap()));
        }
        let e = exp_series(n, &logs, len);
        for (k, es) in e.iter().enumerate() {
            assert_eq!(psi.minus(ell as i32 - k as i32), es.scale(&top));
        }
    }
}

#[test]
fn b_modes_commute_with_symmetric_multiplication() {
    let p = modp(2, 4);
    let ctx = GkloContext::new(2, &p);
    let b1 = Dro::multiplication(gklo_b(1, &ctx).unwrap(), &p.q);
    let bm2 = Dro::multiplication(gklo_b(-2, &ctx).unwrap(), &p.q);
    let e = Dro::multiplication(LaurentPoly::var(2, 0).mul(&LaurentPoly::var(2, 1)), &p.q);
    assert!(b1.commutator(&bm2).is_zero());
    assert!(b1.commutator(&e).is_zero());
}

#[test]
fn n1_closed_form_constants() {
    let p = Params::<RatFunc>::generic(0).unwrap();
    let one = RatFunc::one();
    let c1 = one.sub(&p.q.pow(2));
    let c2 = p.q.pow(-2).sub(&one);
    let r = verify_correspondence(1, &p, 4, Some((c1, c2))).unwrap();
    assert!(r.all_pass(), "{}", r.to_json());
}

#[test]
fn correspondence_with_spectral_parameters() {
    let p = Params::<RatFunc>::generic(1).unwrap();
    let r = verify_correspondence(2, &p, 3, None).unwrap();
    assert!(r.all_pass(), "{}", r.to_json());
    for ell in [0, 2] {
        let r = verify_correspondence(2, &modp(ell, 8), 4, None).unwrap();
        assert!(r.all_pass(), "{}", r.to_json());
    }
}

#[test]
fn printed_statements_fail_beyond_one_variable() {
    let p = Params::<RatFunc>::generic(1).unwrap();
    let r = correspondence_printed(2, &p, 2).unwrap();
    assert!(!status(&r, "Yf"));
    assert!(!status(&r, "De"));
    assert!(!status(&r, "operators/first/[1,0]"));
    assert!(!status(&r, "operators/dual/[1,0]"));
    let r = correspondence_printed(1, &Params::<RatFunc>::generic(0).unwrap(), 3).unwrap();
    assert!(r.all_pass(), "{}", r.to_json());
}
