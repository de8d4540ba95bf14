use qcongr::algebra::{int, rat, Rational};
use qcongr::cases::{list_cases, manifest, plan, run_case, run_suite, Engine, Instance, RunOptions, Status};
use qcongr::qseries::{multi_sum, Exact, Family, Params, SummandInstance};
use qcongr::Error;

fn quiet() -> RunOptions {
    RunOptions { timing: false, ..RunOptions::default() }
}

#[test]
fn catalog_covers_the_manifest() {
    let cases = list_cases();
    assert!(cases.len() >= 40, "only {} cases", cases.len());
    assert!(cases.iter().all(|c| !c.anchor.is_empty()));
    assert!(manifest::unmapped().is_empty(), "{:?}", manifest::unmapped());
    for id in ["thm_a", "thm_b", "thm_c", "thm_d", "thm_e", "thm_f", "watson", "sears", "saalschutz", "relation_id"] {
        assert!(cases.iter().any(|c| c.id == id), "{id}");
    }
}

#[test]
fn thm_a_at_three() {
    let r = run_case("thm_a", &Instance::n(3), &quiet()).unwrap();
    assert!(r.holds);
    assert_eq!(r.status, Status::Holds);
    assert_eq!(r.target, "[n]Phi_n^4");
}

#[test]
fn thm_c_at_seven() {
    let r = run_case("thm_c", &Instance::dmrn(3, 2, 1, 7), &quiet()).unwrap();
    assert!(r.holds);
    assert_eq!(r.target, "Phi_n^6");
    let phi = r.factors.iter().find(|f| f.factor == "Phi_7").unwrap();
    assert_eq!(phi.required, 6);
}

#[test]
fn relation_is_an_identity() {
    let r = run_case("relation_id", &Instance::default(), &quiet()).unwrap();
    assert!(r.holds);
}

#[test]
fn even_n_is_out_of_domain() {
    assert!(matches!(run_case("thm_a", &Instance::n(4), &quiet()), Err(Error::OutOfDomain(_))));
    assert!(matches!(run_case("nope", &Instance::n(3), &quiet()), Err(Error::UnknownCase(_))));
    let jobs = vec![("thm_a".to_string(), Instance::n(4))];
    let r = run_suite(&jobs, &quiet(), 1).unwrap();
    assert_eq!(r[0].status, Status::OutOfDomain);
}

#[test]
fn engines_agree() {
    for n in [3, 5, 7] {
        let local = run_case("thm_a", &Instance::n(n), &quiet()).unwrap();
        let exact = run_case("thm_a", &Instance::n(n), &RunOptions { engine: Engine::Exact, ..quiet() }).unwrap();
        assert_eq!(local.holds, exact.holds, "n = {n}");
        assert!(local.holds);
    }
}

#[test]
fn watson_over_seeds() {
    let insts: Vec<_> = (1..=5).map(Instance::trunc).collect();
    let jobs = plan("watson", Some(&insts), false);
    let mut total = 0;
    for seed in 1..=5 {
        let reports = run_suite(&jobs, &RunOptions { seed, ..quiet() }, 1).unwrap();
        assert!(reports.iter().all(|r| r.holds), "seed {seed}");
        total += reports.len();
    }
    assert_eq!(total, 25);
}

#[test]
fn empty_filter_plans_nothing() {
    assert!(plan("no_such_case", None, false).is_empty());
    assert!(!plan("thm_*", None, false).is_empty());
}

#[test]
fn unit_relations_over_seeds() {
    for seed in 1..=5 {
        let r = run_case("lemma_d_units", &Instance::default(), &RunOptions { seed, ..quiet() }).unwrap();
        assert!(r.holds, "seed {seed}");
    }
}

#[test]
fn suite_is_deterministic() {
    let jobs = plan("thm_a,watson,lemma_a_prop", None, false);
    let a = run_suite(&jobs, &quiet(), 1).unwrap();
    let b = run_suite(&jobs, &quiet(), 1).unwrap();
    assert_eq!(a, b);
}

// The double sum at n = 5 and q = 1 is the rational sum of cor-a at p = 5, s = 1.
#[test]
fn quartic_sum_limit() {
    let inst = SummandInstance::new(Family::Quartic, 5, Params::<Rational>::default());
    let s = multi_sum(&Exact::new(), &inst, 2, 4).unwrap();
    let at_one = s.eval(&int(1)).unwrap();
    let half = rat(1, 2);
    let c: Vec<Rational> = (0..5i64)
        .map(|k| {
            let mut r = int(1);
            for j in 0..k {
                r = r * (&half + int(j)) / int(j + 1);
            }
            int(4 * k + 1) * r.pow(4)
        })
        .collect();
    let mut expected = int(0);
    for i in 0..5 {
        for j in 0..5 - i {
            expected = expected + &c[i] * &c[j];
        }
    }
    assert_eq!(at_one, expected);
}

#[test]
fn composite_pole_in_wei_o() {
    let r = run_case("wei_o", &Instance::n(3), &quiet()).unwrap();
    assert!(r.holds);
    let r = run_case("wei_o", &Instance::n(9), &quiet()).unwrap();
    assert_eq!(r.status, Status::NotCoprime);
    let phi3 = r.factors.iter().find(|f| f.factor == "Phi_3").unwrap();
    assert!(phi3.valuation.unwrap() < 0);
    assert!(r.factors.iter().find(|f| f.factor == "Phi_9").unwrap().holds);
}
