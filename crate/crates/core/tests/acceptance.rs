//! End-to-end acceptance run: one line per criterion, nonzero exit on any failure.

use qdaha::ncverify::{build_presentation, PresentationName};
use qdaha::report::Report;
use qdaha::scalars::{Field, Fp};
use qdaha::suites::{macdonald_specialization, run_suite, Suite, SuiteConfig};
use std::time::{Duration, Instant};

#[derive(Default)]
struct Tally {
    reports: usize,
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn add(&mut self, label: &str, r: Report) {
        self.reports += 1;
        self.checks += r.checks.len();
        for c in &r.checks {
            if !matches!(c.status, qdaha::report::Status::Pass | qdaha::report::Status::Skipped) {
                self.failures.push(format!("{} {} [{:?}] {}", label, c.name, c.status, c.witness.as_deref().unwrap_or("")));
            }
        }
    }

    fn run(&mut self, label: &str, c: SuiteConfig) {
        match run_suite(&c) {
            Ok(r) => self.add(label, r),
            Err(e) => self.failures.push(format!("{} config error: {}", label, e)),
        }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }
}

fn cfg(suite: Suite, n: usize, ell: usize) -> SuiteConfig {
    let mut c = SuiteConfig::new(suite);
    c.n = n;
    c.ell = ell;
    c
}

fn seeds3(mut c: SuiteConfig) -> SuiteConfig {
    c.mode = Some("modp-random".into());
    c.seeds = vec![1, 2, 3];
    c
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn c1_daha() -> Tally {
    let mut t = Tally::default();
    for n in [2, 3] {
        let mut c = cfg(Suite::DahaPresentation, n, 0);
        c.mode = Some("exact".into());
        t.run(&format!("n={}", n), c);
    }
    t
}

fn c2_dunkl() -> Tally {
    let mut t = Tally::default();
    for n in 1..=3 {
        for ell in 0..=2 {
            t.run(&format!("n={} ell={}", n, ell), seeds3(cfg(Suite::DunklCommutativity, n, ell)));
        }
    }
    t
}

fn c3_macdonald() -> Tally {
    let mut t = Tally::default();
    for n in 1..=3 {
        let mut c = cfg(Suite::Macdonald, n, 0);
        c.mode = Some("exact".into());
        c.degree = Some(4);
        t.run(&format!("n={}", n), c);
    }
    for n in 2..=3 {
        t.add(&format!("specialization n={}", n), macdonald_specialization(n, 4, &[2, 3]));
    }
    t
}

fn c4_gamma() -> Tally {
    let mut t = Tally::default();
    for ell in 1..=2 {
        let mut c = cfg(Suite::GammaConjugation, 2, ell);
        c.degree = Some(3);
        t.run(&format!("ell={}", ell), c);
    }
    t
}

fn c5_toroidal() -> Tally {
    let mut t = Tally::default();
    for n in 1..=3 {
        for ell in 0..=2 {
            let mut c = seeds3(cfg(Suite::ToroidalRelations, n, ell));
            c.mode_window = Some([-2, 2]);
            t.run(&format!("n={} ell={}", n, ell), c);
        }
    }
    t
}

fn c6_correspondence() -> Tally {
    let mut t = Tally::default();
    // n = 1 checks the closed forms C1 = 1 - q², C2 = q⁻² - 1
    let mut c = cfg(Suite::Correspondence, 1, 0);
    c.mode = Some("exact".into());
    t.run("n=1 exact", c);
    let mut c = cfg(Suite::Correspondence, 2, 1);
    c.mode = Some("exact".into());
    c.degree = Some(3);
    t.run("n=2 ell=1 exact", c);
    for ell in 0..=2 {
        let mut c = seeds3(cfg(Suite::Correspondence, 2, ell));
        c.degree = Some(4);
        t.run(&format!("n=2 ell={}", ell), c);
    }
    let mut c = cfg(Suite::Correspondence, 3, 0);
    c.mode = Some("exact".into());
    c.degree = Some(2);
    t.run("n=3 exact", c);
    t
}

fn c7_r_constants() -> Tally {
    let mut t = Tally::default();
    for n in 1..=4 {
        t.run(&format!("n={}", n), cfg(Suite::RConstants, n, 0));
    }
    t
}

fn c8_pbw() -> Tally {
    let mut t = Tally::default();
    let q = Fp::from_i64(3);
    for (name, dmax) in [("W", 4), ("Ref", 4), ("D1", 4), ("Dl(2)", 3), ("Ml(2)", 3)] {
        let gens = build_presentation(PresentationName::parse(name).unwrap(), 2, &q).unwrap().num_generators() as u128;
        for d in 1..=dmax {
            let mut c = cfg(Suite::PbwAudit, 2, 0);
            c.presentation = Some(name.into());
            c.degree = Some(d);
            match run_suite(&c) {
                Ok(r) => {
                    let dim = r.params["dimension"].as_u64().unwrap_or(0) as u128;
                    let want = binomial(gens + d as u128, d as u128);
                    t.require(dim == want, format!("{} d={}: dimension {} vs standard count {}", name, d, dim, want));
                    t.require(r.params["verdict"] == "equal", format!("{} d={}: verdict {}", name, d, r.params["verdict"]));
                    t.add(&format!("{} d={}", name, d), r);
                }
                Err(e) => t.failures.push(format!("{} d={}: {}", name, d, e)),
            }
        }
    }
    let mut c = cfg(Suite::PbwAudit, 2, 0);
    c.presentation = Some("D1".into());
    c.degree = Some(2);
    let r = run_suite(&c).unwrap();
    t.require(r.params["dimension"] == 45, "D1, n=2, d=2 is not 45");
    t
}

fn c9_straightening() -> Tally {
    let mut t = Tally::default();
    let mut c = cfg(Suite::Straightening, 2, 0);
    c.presentation = Some("D1".into());
    c.words = Some(100);
    c.degree = Some(5);
    t.run("D1", c);
    t
}

fn c10_morphisms() -> Tally {
    let mut t = Tally::default();
    let mut c = cfg(Suite::Morphisms, 2, 2);
    c.degree = Some(6);
    t.run("generic Z", c);
    let mut c = cfg(Suite::Morphisms, 2, 1);
    c.degree = Some(6);
    c.z = Some("1".into());
    t.run("Z=1", c);
    t
}

fn c11_determinism() -> Tally {
    let mut t = Tally::default();
    let mut configs = vec![seeds3(cfg(Suite::DunklCommutativity, 2, 2)), cfg(Suite::RConstants, 3, 0)];
    let mut c = seeds3(cfg(Suite::ToroidalRelations, 2, 1));
    c.mode_window = Some([-1, 1]);
    configs.push(c);
    let mut c = cfg(Suite::PbwAudit, 2, 0);
    c.presentation = Some("Ref".into());
    c.degree = Some(3);
    configs.push(c);
    let mut c = cfg(Suite::Straightening, 2, 0);
    c.degree = Some(4);
    c.words = Some(20);
    configs.push(c);
    for c in configs {
        let a = run_suite(&c).map(|r| r.to_json_untimed());
        let b = run_suite(&c).map(|r| r.to_json_untimed());
        t.checks += 1;
        t.reports += 1;
        t.require(a.is_ok() && a == b, format!("{:?} differs between runs", c.suite));
    }
    t
}

type Criterion = (usize, &'static str, u64, fn() -> Tally);

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "DAHA presentation, n = 2, 3, exact", 120, c1_daha),
        (2, "Dunkl commutativity, n <= 3, ell <= 2, 3 seeds", 120, c2_dunkl),
        (3, "Macdonald polynomials, |λ| <= 4, n <= 3", 180, c3_macdonald),
        (4, "γ_Z conjugation, n = 2, ell <= 2, |λ| <= 3", 120, c4_gamma),
        (5, "toroidal relations on [-2, 2], n <= 3, ell <= 2, 3 seeds", 300, c5_toroidal),
        (6, "correspondence and proportionality constants", 180, c6_correspondence),
        (7, "R-matrix QYBE and Hecke condition, n <= 4", 60, c7_r_constants),
        (8, "PBW audits at n = 2", 600, c8_pbw),
        (9, "D1 straightening on 100 random words", 120, c9_straightening),
        (10, "morphisms Φ^2 and Ψ¹_Z at degree 6", 600, c10_morphisms),
        (11, "determinism of JSON reports", 120, c11_determinism),
    ];
    let filter: Option<usize> = std::env::args().nth(1).and_then(|s| s.parse().ok());
    let mut failed = 0;
    for (k, title, limit, f) in criteria {
        if filter.is_some_and(|x| x != k) {
            continue;
        }
        let start = Instant::now();
        let t = f();
        let el = start.elapsed();
        let slow = el > Duration::from_secs(limit);
        let ok = t.failures.is_empty() && !slow;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {} ({} reports, {} checks, {:.1}s of {}s)",
            k,
            if ok { "PASS" } else { "FAIL" },
            title,
            t.reports,
            t.checks,
            el.as_secs_f64(),
            limit
        );
        for f in t.failures.iter().take(5) {
            println!("    {}", f);
        }
        if slow {
            println!("    exceeded the time limit");
        }
    }
    if failed > 0 {
        println!("{} criteria failed", failed);
        std::process::exit(1);
    }
}
