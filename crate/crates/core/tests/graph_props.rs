use mmisr::brute::alpha_bruteforce;
use mmisr::format::{parse_instance, parse_sequence, parse_td, write_instance, write_sequence, write_td};
use mmisr::traversal::degeneracy_ordering;
use mmisr::treewidth::TreeDecomposition;
use mmisr::{validate_sequence, Graph, Instance, ReconfigSequence, VertexSet};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((1..=n, 1..=n), 0..=2 * n).prop_map(move |pairs| {
            Graph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
        })
    })
}

fn min_degree_in(g: &Graph, mask: u64) -> usize {
    (1..=g.n())
        .filter(|v| mask >> (v - 1) & 1 == 1)
        .map(|v| g.neighbors(v).iter().filter(|&&w| mask >> (w - 1) & 1 == 1).count())
        .min()
        .unwrap_or(0)
}

proptest! {
    #[test]
    fn independence_matches_edge_scan(g in graph_strategy(10), mask in 0u64..1024) {
        let s = VertexSet::from_mask(mask & ((1 << g.n()) - 1));
        let scan = g.edges().all(|(u, v)| !(s.contains(u) && s.contains(v)));
        prop_assert_eq!(g.is_independent(&s).unwrap(), scan);
    }

    #[test]
    fn degeneracy_matches_exhaustive(g in graph_strategy(8)) {
        let best = (1u64..1 << g.n()).map(|m| min_degree_in(&g, m)).max().unwrap_or(0);
        prop_assert_eq!(degeneracy_ordering(&g).d, best);
    }

    #[test]
    fn alpha_matches_enumeration(g in graph_strategy(12)) {
        let best = (0u64..1 << g.n())
            .filter(|&m| g.edges().all(|(u, v)| m >> (u - 1) & 1 == 0 || m >> (v - 1) & 1 == 0))
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap();
        prop_assert_eq!(alpha_bruteforce(&g).unwrap().0, best);
    }

    #[test]
    fn value_bounded_by_endpoints(steps in proptest::collection::vec(0u64..64, 1..6)) {
        let seq = ReconfigSequence::new(steps.iter().map(|&m| VertexSet::from_mask(m)).collect());
        let v = seq.value().unwrap();
        prop_assert!(v <= seq.steps()[0].len());
        prop_assert!(v <= seq.steps().last().unwrap().len());
    }

    #[test]
    fn instance_roundtrip(g in graph_strategy(9), seed in 0u64..1000) {
        let mut rng = mmisr::families::rng(seed);
        let inst = mmisr::families::random_instance(g, 3, &mut rng);
        let text = write_instance(&inst);
        prop_assert_eq!(parse_instance(&text).unwrap(), inst);
    }

    #[test]
    fn td_roundtrip(g in graph_strategy(9)) {
        let td = TreeDecomposition::min_fill(&g);
        let back = parse_td(&write_td(&td, g.n())).unwrap();
        prop_assert!(back.validate(&g).is_ok());
        prop_assert_eq!(back, td);
    }
}

#[test]
fn duplicate_edges_collapse() {
    let g = Graph::from_edges(3, [(1, 2), (2, 1), (1, 2), (2, 3)]).unwrap();
    assert_eq!(g.edge_count(), 2);
}

#[test]
fn sequence_roundtrip_and_validation() {
    let g = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
    let inst = Instance::new(g, [1, 3].into(), [2, 4].into()).unwrap();
    let seq = ReconfigSequence::new(vec![[1, 3].into(), [1].into(), [1, 4].into(), [4].into(), [2, 4].into()]);
    let back = parse_sequence(&write_sequence(&seq)).unwrap();
    assert_eq!(back, seq);
    assert!(validate_sequence(&inst, &back).ok());
    assert_eq!(back.value().unwrap(), 1);
    let empty = ReconfigSequence::new(vec![VertexSet::new()]);
    assert_eq!(parse_sequence(&write_sequence(&empty)).unwrap(), empty);
}
