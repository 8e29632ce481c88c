use proptest::prelude::{prop, proptest, prop_assert, prop_assert_eq, ProptestConfig, Strategy};
use qdaha::ncverify::audit::{
    audit_outcome, d0loc_derived_check, d1_printed_cross_consequences, dab_implies_cross, weyl_r_check,
};
use qdaha::ncverify::ideal::all_words;
use qdaha::ncverify::presentation::Relation;
use qdaha::ncverify::rmatrix::swap_matrix;
use qdaha::ncverify::*;
use qdaha::ncverify::Strategy as Order;
use qdaha::scalars::{Field, Fp, RatFunc};
use std::path::PathBuf;

fn q() -> RatFunc {
    RatFunc::variable(0).unwrap()
}

fn qp() -> Fp {
    Fp::from_i64(1_234_567)
}

fn pres<F: Field>(name: &str, q: &F) -> Presentation<F> {
    build_presentation(PresentationName::parse(name).unwrap(), 2, q).unwrap()
}

fn choose(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn ref_has_sixteen_quadratic_entries() {
    let p = pres("Ref", &q());
    let m = p.rconsts().reflection(&p.matrix("M").unwrap());
    assert_eq!(m.entries().len(), 16);
    assert!(m.entries().iter().all(|e| e.terms().all(|(w, _)| w.len() == 2)));
    // the four corner entries vanish identically and are not stored as relations
    let zero: Vec<(usize, usize)> = (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).filter(|&(i, j)| m.get(i, j).is_zero()).collect();
    assert_eq!(zero, vec![(0, 0), (0, 3), (3, 0), (3, 3)]);
    assert_eq!(p.relations.len(), 12);
}

#[test]
fn weyl_contains_d1_x1_relation() {
    let q = q();
    let p = pres("W", &q);
    let (x1, d1) = (p.generator_id("x1").unwrap(), p.generator_id("d1").unwrap());
    let mut want = FreeAlgElem::monomial(vec![d1, x1], RatFunc::one());
    want.add_term(vec![], RatFunc::one().neg());
    want.add_term(vec![x1, d1], q.mul(&q).neg());
    let found = p.relations.iter().any(|r| {
        let c = r.elem.coeff(&[d1, x1]);
        !c.is_zero() && r.elem == want.scale(&c)
    });
    assert!(found);
}

#[test]
fn d1_third_relation_carries_the_omega_term() {
    // constant terms are −(q − q⁻¹)(RΩ)_{ij}, computed here from the numeric matrices
    let q = q();
    let p = pres("D1", &q);
    let qq = q.sub(&q.inv().unwrap());
    let ro = r_matrix(2, &q).matrix.mul(&swap_matrix::<RatFunc>(2));
    let mut seen = 0;
    for i in 0..4 {
        for j in 0..4 {
            let label = format!("D1rel3[{},{}]", i + 1, j + 1);
            let want = ro.get(i, j).mul(&qq).neg();
            let got = p.relations.iter().find(|r| r.label == label).map(|r| r.elem.coeff(&[])).unwrap_or_else(RatFunc::zero);
            assert_eq!(got, want, "{}", label);
            if !want.is_zero() {
                seen += 1;
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn unknown_presentation_is_rejected() {
    assert!(matches!(PresentationName::parse("Foo"), Err(NcError::UnknownPresentation(_))));
    assert!(matches!(PresentationName::parse("Dl(1)"), Ok(PresentationName::D1)));
    assert!(PresentationName::parse("Ml(1)").is_err());
}

#[test]
fn r21_places_the_entry_below_the_diagonal() {
    let q = q();
    let r = r_matrix(2, &q);
    let r21 = r.r21();
    let qq = q.sub(&q.inv().unwrap());
    // row e2⊗e1, column e1⊗e2
    assert_eq!(r21.get(2, 1), &qq);
    assert!(r21.get(1, 2).is_zero());
    assert!(check_r_constants(2, &q).all_pass());
}

#[test]
fn r_constants_up_to_rank_four() {
    for n in 1..=4 {
        assert!(check_r_constants(n, &q()).all_pass(), "n = {}", n);
    }
}

#[test]
fn small_audits_match_commutative_counts() {
    let q = qp();
    let w = audit_outcome(&pres("W", &q), 2, 1);
    assert_eq!((w.upper_bound, w.verdict), (15, Verdict::Equal));
    let r = audit_outcome(&pres("Ref", &q), 2, 1);
    let deg2 = r.per_length.iter().find(|c| c.length == 2).unwrap();
    assert_eq!(deg2.upper(), choose(5, 2));
    let d1 = audit_outcome(&pres("D1", &q), 2, 1);
    assert_eq!((d1.upper_bound, d1.verdict), (1 + 8 + 36, Verdict::Equal));
}

#[test]
fn audit_report_names_the_dimension() {
    let r = graded_dimension_audit(&pres("D1", &qp()), 2, 1);
    assert_eq!(r.params["dimension"], 45);
    assert_eq!(r.params["verdict"], "equal");
}

#[test]
fn printed_two_cross_relation_is_not_flat() {
    let q = qp();
    let mut p = pres("Dl(2)", &q);
    let c = p.rconsts();
    p.relations.retain(|r| !r.label.starts_with("DXadj"));
    for (a, b) in [(1, 2), (2, 1)] {
        let m = c.dx_two_printed(&p.matrix(&format!("D{}", a)).unwrap(), &p.matrix(&format!("X{}", b)).unwrap());
        for i in 0..m.rows {
            for j in 0..m.cols {
                let e = m.get(i, j);
                if !e.is_zero() {
                    p.relations.push(Relation { label: format!("DXadj{}[{},{}]", a, i + 1, j + 1), elem: e.clone() });
                }
            }
        }
    }
    assert_eq!(audit_outcome(&p, 3, 1).verdict, Verdict::Unequal);
    assert_eq!(audit_outcome(&pres("Dl(2)", &q), 3, 1).verdict, Verdict::Equal);
}

#[test]
fn printed_d1_cross_formula_holds_only_for_two_instances() {
    assert_eq!(d1_printed_cross_consequences(2, &qp()).unwrap(), vec![(1, 2, 1, 2), (2, 1, 2, 1)]);
}

#[test]
fn derived_relations_and_cross_relation_are_consequences() {
    assert_eq!(d0loc_derived_check(2, &qp(), 6).unwrap().status, qdaha::report::Status::Pass);
    assert_eq!(dab_implies_cross(2, &qp(), 4).unwrap().status, qdaha::report::Status::Pass);
    assert_eq!(weyl_r_check(2, &qp()).unwrap().status, qdaha::report::Status::Pass);
}

#[test]
fn moment_map_identities_and_determinant() {
    let r = identity_suite(2, &qp(), 5).unwrap();
    assert!(r.all_pass(), "{:?}", r.failures().map(|c| c.name.clone()).collect::<Vec<_>>());
    assert!(r.checks.iter().any(|c| c.name == "D1.D1YR2"));
    assert!(r.checks.iter().any(|c| c.name.starts_with("Dl(2).detq-central")));
}

#[test]
fn syntactic_identity_passes_and_overflow_is_reported() {
    let p = pres("D1", &qp());
    let x = p.matrix("X").unwrap();
    let xx = x.mul(&x);
    assert!(check_matrix_identity(&p, &xx, &xx, 2).unwrap().all_pass());
    let xxx = xx.mul(&x);
    assert_eq!(
        check_matrix_identity(&p, &xxx, &x, 2).unwrap_err(),
        NcError::DegreeOverflow { degree: 3, bound: 2 }
    );
}

#[test]
fn morphism_images_vanish() {
    for (m, z) in [(MorphismName::PhiEll(2), Fp::from_i64(5)), (MorphismName::Psi1Z, Fp::from_i64(5)), (MorphismName::Psi1Z, Fp::one())] {
        let r = check_morphism(m, 2, 6, &qp(), &z).unwrap();
        assert!(r.all_pass(), "{} {:?}", m, r.failures().map(|c| c.name.clone()).collect::<Vec<_>>());
    }
}

#[test]
fn straightening_agrees_with_linear_algebra() {
    for name in ["W", "Ref", "D1"] {
        let r = audit::straightening_suite(&pres(name, &qp()), 40, 4, 7).unwrap();
        assert!(r.all_pass(), "{}", name);
    }
}

#[test]
fn tight_budget_is_reported() {
    let q = qp();
    let p = pres("D1", &q);
    let rw = Rewriter::new(&p).unwrap().with_budget(1);
    let g = |s: &str| p.generator_id(s).unwrap();
    let w = [g("x11"), g("x22"), g("d11"), g("d22")];
    assert!(matches!(rw.straighten_word(&w, Order::Leftmost), Err(NcError::RewriteBudgetExceeded(1))));
}

fn fixture_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/presentations_n2.json")
}

const GOLDEN: [&str; 8] = ["Ref", "W", "D0IV", "D0loc", "D1", "Dl(2)", "Dl(3)", "Ml(2)"];

#[test]
fn relation_sets_match_golden_digests() {
    let current: Vec<serde_json::Value> = GOLDEN
        .iter()
        .map(|name| {
            let (count, sha) = pres(name, &q()).digest();
            serde_json::json!({ "name": name, "entries": count, "sha256": sha })
        })
        .collect();
    let doc = serde_json::json!({ "version": 1, "q": "generic", "n": 2, "presentations": current });
    if std::env::var_os("QDAHA_BLESS").is_some() {
        std::fs::create_dir_all(fixture_path().parent().unwrap()).unwrap();
        std::fs::write(fixture_path(), serde_json::to_string_pretty(&doc).unwrap() + "\n").unwrap();
    }
    let text = std::fs::read_to_string(fixture_path()).expect("fixture present; regenerate with QDAHA_BLESS=1");
    let stored: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(stored["version"], 1);
    for (want, got) in stored["presentations"].as_array().unwrap().iter().zip(&current) {
        assert_eq!(want, got, "relation set of {} changed", want["name"]);
    }
    assert_eq!(stored["presentations"].as_array().unwrap().len(), GOLDEN.len());
}

fn elem_strategy(gens: u16) -> impl Strategy<Value = FreeAlgElem<Fp>> {
    prop::collection::vec((prop::collection::vec(0..gens, 0..3), -5i64..5), 0..4).prop_map(|ts| {
        let mut e = FreeAlgElem::zero();
        for (w, c) in ts {
            e.add_term(w, Fp::from_i64(c));
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn free_algebra_is_associative_and_distributive(a in elem_strategy(3), b in elem_strategy(3), c in elem_strategy(3)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert!(a.terms().all(|(_, x)| !x.is_zero()));
    }

    #[test]
    fn straightened_words_are_standard_and_congruent(idx in 0usize..10_000, name in prop::sample::select(vec!["W", "Ref", "D1"])) {
        let p = pres(name, &qp());
        let words = all_words(p.num_generators(), 3);
        let w = &words[idx % words.len()];
        let rw = Rewriter::new(&p).unwrap();
        let a = rw.straighten_word(w, Order::Leftmost).unwrap();
        let b = rw.straighten_word(w, Order::Rightmost).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(a.terms().all(|(u, _)| p.is_standard(u) == Some(true)));
        let diff = FreeAlgElem::monomial(w.clone(), Fp::one()).sub(&a);
        let mut ideal = TruncatedIdeal::new(&p);
        prop_assert!(ideal.membership(&diff, 3).is_ok());
    }
}
