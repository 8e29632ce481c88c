use qdaha::daha::Daha;
use qdaha::laurent::{Weight, RationalCoeff};
use qdaha::macdonald::*;
use qdaha::qdo::Dro;
use qdaha::scalars::{draw_params, Field, Fp, Mode, ParamContext, Params, RatFunc};

fn generic(ell: usize) -> Params<RatFunc> {
    Params::generic(ell).unwrap()
}

fn modp(ell: usize, seed: u64) -> Params<Fp> {
    Params::from_context(&draw_params(&ParamContext::new(ell, Mode::ModpRandom, seed)).unwrap()).unwrap()
}

/// `(a; b)_k`
fn poch(a: &RatFunc, b: &RatFunc, k: i64) -> RatFunc {
    pochhammer(a, b, k).unwrap()
}

/// Two-variable Macdonald polynomials in closed form:
/// `P_(m) = (Q;Q)_m/(T;Q)_m Σ_k (T;Q)_k (T;Q)_{m-k}/((Q;Q)_k (Q;Q)_{m-k}) x1^k x2^{m-k}`
/// with `Q = q², T = t²`.
fn rogers(m: i32, k: i32) -> RatFunc {
    let qq = RatFunc::var(0).pow(2);
    let tt = RatFunc::var(1).pow(2);
    let pre = poch(&qq, &qq, m as i64).mul(&poch(&tt, &qq, m as i64).inv().unwrap());
    let a = poch(&tt, &qq, k as i64).mul(&poch(&tt, &qq, (m - k) as i64));
    let b = poch(&qq, &qq, k as i64).mul(&poch(&qq, &qq, (m - k) as i64));
    pre.mul(&a).mul(&b.inv().unwrap())
}

#[test]
fn two_variable_polynomials_match_closed_form() {
    let p = generic(0);
    let mut tab = MacdonaldTable::new(2, p.q.clone(), p.t.clone());
    for m in 1..=4 {
        let c = tab.coefficients(&Weight(vec![m, 0])).unwrap();
        for k in (m + 1) / 2..=m {
            let mu = Weight(vec![k, m - k]);
            assert_eq!(c.get(&mu).cloned().unwrap_or_else(RatFunc::zero), rogers(m, k), "m={} k={}", m, k);
        }
    }
}

#[test]
fn p20_coefficient() {
    let p = generic(0);
    let mut tab = MacdonaldTable::new(2, p.q.clone(), p.t.clone());
    let c = tab.coefficients(&Weight(vec![2, 0])).unwrap();
    let (q2, t2) = (p.q.pow(2), p.t.pow(2));
    let one = RatFunc::one();
    let expect = one.add(&q2).mul(&one.sub(&t2)).mul(&one.sub(&q2.mul(&t2)).inv().unwrap());
    assert_eq!(c[&Weight(vec![1, 1])], expect);
}

#[test]
fn macdonald_table_exact_n2_n3() {
    for n in [2, 3] {
        let r = verify_macdonald(n, 4, &generic(0)).unwrap();
        assert!(r.all_pass(), "{}", r.to_json());
    }
}

#[test]
fn y_spectrum_on_small_partitions() {
    let r = verify_y_spectrum(2, 3, &generic(0)).unwrap();
    assert!(r.all_pass(), "{}", r.to_json());
    let r = verify_y_spectrum(3, 2, &modp(0, 5)).unwrap();
    assert!(r.all_pass(), "{}", r.to_json());
}

#[test]
fn operator_identities() {
    let r = verify_operator_identity(2, 3, &generic(0)).unwrap();
    assert!(r.all_pass(), "{}", r.to_json());
    let r = verify_operator_identity(3, 2, &modp(0, 9)).unwrap();
    assert!(r.all_pass(), "{}", r.to_json());
}

#[test]
fn printed_operator_has_reversed_spectrum() {
    let p = generic(0);
    let m1 = power_sum::<RatFunc>(2, 1);
    let r = macdonald_operator_printed(2, &p.q, &p.t).apply(&m1);
    let e = p.q.pow(2).add(&p.t.pow(2));
    assert!(r.equals(&RationalCoeff::from_poly(m1.scale(&e))));
}

#[test]
fn specialization_at_small_powers() {
    let r = verify_specialization(2, 4, &[2, 3]).unwrap();
    assert!(r.all_pass(), "{}", r.to_json());
    let r = verify_specialization(3, 3, &[2, 3]).unwrap();
    assert!(r.all_pass(), "{}", r.to_json());
}

#[test]
fn determinant_twist() {
    let r = verify_determinant_twist(2, 3, &generic(0)).unwrap();
    assert!(r.all_pass(), "{}", r.to_json());
}

#[test]
fn gamma_conjugation_windows() {
    for (n, ell, d) in [(1, 1, 3), (1, 2, 3), (2, 1, 2), (2, 2, 2), (3, 1, 1)] {
        let p = modp(ell, 11);
        let daha = Daha::from_params(n, &p);
        let ds: Vec<Dro<Fp>> = (1..=n).map(|i| daha.dunkl(i, &p.z).unwrap()).collect();
        let r = verify_gamma_conjugation(n, &p, d, &ds).unwrap();
        assert!(r.all_pass(), "n={} ell={}: {}", n, ell, r.to_json());
    }
}

#[test]
fn gamma_conjugation_exact_n1() {
    let p = generic(1);
    let daha = Daha::from_params(1, &p);
    let r = verify_gamma_conjugation(1, &p, 3, &[daha.dunkl(1, &p.z).unwrap()]).unwrap();
    assert!(r.all_pass(), "{}", r.to_json());
}

#[test]
fn collision_is_reported() {
    // q⁴t² + 1 = q²t² + q² at t = q⁻¹
    let q = Fp::new(3);
    let mut tab = MacdonaldTable::new(2, q, q.inv().unwrap());
    let err = tab.poly(&Weight(vec![2, 0])).unwrap_err();
    assert!(matches!(err, MacdonaldError::EigenvalueCollision(..)));
}
