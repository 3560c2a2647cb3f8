use fatchroma_core::fat::Partition;
use fatchroma_core::generators::*;
use fatchroma_core::reproduce::{reproduce, run_case, CaseStatus, Theorem};
use fatchroma_core::solver::{
    chi_fat, chromatic_number, fat_k_feasible, Feasibility, SolveOptions,
};
use fatchroma_core::{connected_components, degree_stats, neighbor_count, verify_fat, Rational};

#[test]
fn crown_witness_from_construction() {
    for n in [3, 5, 7, 9] {
        let g = crown(n).unwrap();
        assert_eq!(connected_components(&g).count(), 1);
        let blocks: Vec<Vec<usize>> = (0..n).map(|i| vec![i, n + i]).collect();
        let p = Partition::new(2 * n, blocks).unwrap();
        let alpha = Rational::new(1, n as u64 - 1);
        assert!(verify_fat(&g, &p, alpha, Rational::ZERO)
            .unwrap()
            .is_accepted());
        assert_eq!(neighbor_count(&g, 0, &[0, n]).unwrap(), 0);
        assert_eq!(neighbor_count(&g, 0, &[1, n + 1]).unwrap(), 1);
    }
}

#[test]
fn crown_rejects_equal_parameters() {
    let g = crown(5).unwrap();
    let p = Partition::new(10, (0..5).map(|i| vec![i, 5 + i]).collect()).unwrap();
    let quarter = Rational::new(1, 4);
    let fatchroma_core::Verdict::Rejected(v) = verify_fat(&g, &p, quarter, quarter).unwrap() else {
        panic!("beta = 1/4 must fail");
    };
    assert_eq!((v.vertex, v.block, v.observed, v.degree), (0, 0, 0, 4));
}

#[test]
fn pendant_triangle_two_coloring() {
    let g = pendant_triangles(5).unwrap();
    let p = Partition::new(25, vec![(0..5).collect(), (5..25).collect()]).unwrap();
    let half = Rational::new(1, 2);
    assert!(verify_fat(&g, &p, half, half).unwrap().is_accepted());
    let s = degree_stats(&g);
    assert_eq!((s.min_degree, s.degree_gcd), (2, Some(2)));
}

#[test]
fn larger_connected_instance() {
    let opts = SolveOptions::default();
    let g = pendant_triangles(7).unwrap();
    assert_eq!(g.vertex_count(), 49);
    assert_eq!(
        fat_k_feasible(&g, 3, &opts).unwrap().0,
        Feasibility::Infeasible
    );
    assert_eq!(chi_fat(&g, &opts).unwrap().value(), Some(2));
    assert_eq!(chromatic_number(&g, &opts).unwrap().value(), Some(7));
    let crown7 = crown(7).unwrap();
    assert_eq!(chi_fat(&crown7, &opts).unwrap().value(), Some(7));
}

#[test]
fn mixed_cliques_need_two_sizes() {
    // with L1 = 1 the construction would be K1 plus K_L2, which is
    // disconnected, so chi_fat >= 2 > L1
    let g = fatchroma_core::Graph::from_edges(4, [(1, 2), (1, 3), (2, 3)]).unwrap();
    assert!(
        chi_fat(&g, &SolveOptions::default())
            .unwrap()
            .value()
            .unwrap()
            >= 2
    );
    assert!(cliques_mixed(1, 3).is_err());
}

#[test]
fn full_default_reproduction_passes() {
    let theorems = fatchroma_core::reproduce::default_theorems(false);
    let results = reproduce(
        &theorems,
        &SolveOptions {
            threads: Some(4),
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(results.len(), 6 + 3 + 2 + 8);
    assert!(results.iter().all(|r| r.status == CaseStatus::Pass));
    // rows keep case order regardless of completion order
    let order: Vec<String> = results.iter().map(|r| r.case.family.to_string()).collect();
    let expected: Vec<String> = theorems
        .iter()
        .flat_map(|t| t.cases().unwrap())
        .map(|c| c.family.to_string())
        .collect();
    assert_eq!(order, expected);
}

#[test]
fn connected_seven_case() {
    for case in (Theorem::Connected { n: 7 }).cases().unwrap() {
        let r = run_case(&case, &SolveOptions::default()).unwrap();
        assert_eq!(r.status, CaseStatus::Pass, "{}", case.family);
    }
}
