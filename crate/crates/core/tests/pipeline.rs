use eajr::ea::{
    ea_k_run, iterative_compression, restart_budget, restart_run, RunOptions, BUDGET_CONSTANT,
};
use eajr::instances::{gen_papadimitriou_steiglitz, gen_planted, GeneratedInstance};
use eajr::oracle::OracleLimit;
use eajr::ProblemKind;

const KINDS: [ProblemKind; 3] = [ProblemKind::VertexCover, ProblemKind::Fvst, ProblemKind::Oct];

#[test]
fn planted_instances_are_solved_within_formula_budget() {
    for kind in KINDS {
        for seed in 0..5 {
            let gen = gen_planted(kind, 10, 2, 0.5, seed).unwrap();
            let inst = &gen.instance;
            let budget = restart_budget(kind, 2, 10, BUDGET_CONSTANT);
            let res = ea_k_run(inst, seed, &RunOptions::with_budget(budget));
            assert!(res.success, "{kind} seed {seed}");
            assert!(res.final_point.x_s.len() <= 2);
            assert!(inst.verify_final(&res.final_point.x_s));
        }
    }
}

#[test]
fn file_round_trip_preserves_instance_and_planted_set() {
    for kind in KINDS {
        let gen = gen_planted(kind, 9, 3, 0.4, 11).unwrap();
        let back = GeneratedInstance::from_file_str(&gen.to_file_string()).unwrap();
        assert_eq!(back.instance, gen.instance);
        assert_eq!(back.planted_solution, gen.planted_solution);
        let planted = back.planted_solution.unwrap();
        assert!(back.instance.verify_final(&planted));
    }
}

#[test]
fn restart_agrees_with_oracle() {
    let limit = OracleLimit::default();
    for kind in KINDS {
        for seed in 0..3 {
            let gen = gen_planted(kind, 8, 2, 0.5, 100 + seed).unwrap();
            let (opt, _) = limit.minimum(&gen.instance).unwrap();
            let res = restart_run(kind, gen.graph(), seed, BUDGET_CONSTANT);
            assert_eq!(res.k_found, opt, "{kind} seed {seed}");
            assert_eq!(res.solution.len(), opt);
            assert_eq!(
                res.per_k_iterations.iter().sum::<u64>(),
                res.total_evaluations
            );
        }
    }
}

#[test]
fn compression_finds_papadimitriou_steiglitz_cover() {
    let gen = gen_papadimitriou_steiglitz(4).unwrap();
    let s = iterative_compression(&gen.instance).unwrap();
    assert_eq!(s.len(), gen.known_optimum.unwrap());
    assert!(gen.instance.verify_final(&s));
    let below = gen.instance.with_k(s.len() - 1).unwrap();
    assert!(iterative_compression(&below).is_none());
}
