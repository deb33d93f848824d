mod common;

use common::{bottleneck_opt, exhaustive_instances, random_instances};
use mmisr::exact::{equalize, solve_exact};
use mmisr::oracle::{isr_tj_decide, opt_exact, OracleLimits};
use mmisr::{validate_sequence, Instance, VertexSet};
use rand::Rng;

#[test]
fn opt_matches_bottleneck_on_small_graphs() {
    let limits = OracleLimits::default();
    for inst in exhaustive_instances(5) {
        let (opt, witness) = opt_exact(&inst, &limits).unwrap();
        assert_eq!(opt, bottleneck_opt(&inst), "{inst:?}");
        assert!(opt <= inst.phi());
        assert!(validate_sequence(&inst, &witness).ok());
        assert_eq!(witness.value().unwrap(), opt);
    }
}

#[test]
fn opt_matches_bottleneck_on_random_graphs() {
    let limits = OracleLimits::default();
    for inst in random_instances(150, 12, 11) {
        assert_eq!(opt_exact(&inst, &limits).unwrap().0, bottleneck_opt(&inst));
    }
}

#[test]
fn tj_presence_iff_opt_at_least_phi_minus_one() {
    let limits = OracleLimits::default();
    for inst in random_instances(300, 10, 12) {
        let (a, b) = equalize(&inst.ini, &inst.tar);
        if a.is_empty() {
            continue;
        }
        let trimmed = Instance::new(inst.graph.clone(), a.clone(), b.clone()).unwrap();
        let tj = isr_tj_decide(&inst.graph, &a, &b, &limits).unwrap();
        assert_eq!(tj.is_some(), bottleneck_opt(&trimmed) + 1 >= a.len(), "{trimmed:?}");
    }
}

#[test]
fn subsets_take_the_minimum() {
    let limits = OracleLimits::default();
    let mut rng = mmisr::families::rng(13);
    for inst in random_instances(150, 10, 14) {
        let pick = |s: &VertexSet, rng: &mut rand_chacha::ChaCha8Rng| -> VertexSet {
            s.iter().filter(|_| rng.gen_bool(0.6)).collect()
        };
        let (i, j) = (pick(&inst.ini, &mut rng), pick(&inst.tar, &mut rng));
        let sub = Instance::new(inst.graph.clone(), i.clone(), j.clone()).unwrap();
        let whole = opt_exact(&inst, &limits).unwrap().0;
        assert_eq!(opt_exact(&sub, &limits).unwrap().0, i.len().min(j.len()).min(whole));
    }
}

#[test]
fn exact_solver_matches_oracle() {
    let limits = OracleLimits::default();
    let instances = random_instances(200, 8, 15).into_iter().chain(random_instances(100, 12, 16));
    for inst in instances {
        let sol = solve_exact(&inst, &limits).unwrap();
        assert_eq!(sol.value, bottleneck_opt(&inst), "{inst:?}");
        assert!(validate_sequence(&inst, &sol.seq).ok());
        assert_eq!(sol.seq.value().unwrap(), sol.value);
        assert!(sol.max_call_size <= inst.phi() + 1);
    }
}
