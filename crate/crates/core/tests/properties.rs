use gwalk_core::exact::ExtScalar;
use gwalk_core::graph::{builtin, encode_graph6, parse_adjlist, parse_graph6, to_adjlist, Graph, BUILTIN_NAMES};
use gwalk_core::lineqw::{evolve, Chirality};
use gwalk_core::matrix::{IntMatrix, RatMatrix};
use gwalk_core::walkops::{build_grover, flip, flip_matrix, support_of_grover, support_of_power, Side};
use proptest::prelude::*;

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (3usize..8).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        proptest::sample::subsequence(pairs.clone(), 1..=pairs.len())
            .prop_map(move |edges| Graph::from_edges(n, edges).unwrap())
    })
}

fn without_isolated(g: &Graph) -> bool {
    (0..g.vertex_count()).all(|v| g.degree(v) > 0)
}

fn is_orthogonal(u: &RatMatrix) -> bool {
    u.mul(&u.transpose()).is_identity()
}

fn check_operator_identities(g: &Graph) {
    let u = build_grover(g).unwrap();
    assert!(is_orthogonal(&u));
    let s = support_of_grover(g).unwrap();
    let j = flip_matrix(g);
    assert!(j.mul(&j).is_identity());
    assert_eq!(s.transpose(), j.mul(&s).mul(&j));
    assert_eq!(flip(g, &flip(g, &s, Side::Left), Side::Right), s.transpose());
}

#[test]
fn fixtures_satisfy_operator_identities() {
    for name in BUILTIN_NAMES {
        check_operator_identities(&builtin(name).unwrap());
    }
}

#[test]
fn transposed_powers_are_flipped_powers() {
    let g = builtin("heawood").unwrap();
    let j = flip_matrix(&g);
    for n in 1..=4 {
        let s: IntMatrix = support_of_power(&g, n).unwrap();
        assert_eq!(s.transpose(), j.mul(&s).mul(&j), "n = {n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_graphs_satisfy_operator_identities(g in graph_strategy()) {
        prop_assume!(without_isolated(&g));
        check_operator_identities(&g);
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy()) {
        let back = parse_graph6(&encode_graph6(&g)).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges().collect::<Vec<_>>().len(), g.edge_count());
        for (a, b) in g.edges() {
            prop_assert!(back.has_edge(a, b));
        }
    }

    #[test]
    fn adjlist_round_trip(g in graph_strategy()) {
        let back = parse_adjlist(&to_adjlist(&g)).unwrap();
        prop_assert_eq!(encode_graph6(&back), encode_graph6(&g));
    }

    #[test]
    fn walk_light_cone_parity_and_norm(k in 3u64..40, n in 1usize..40) {
        let s = evolve(k, n).unwrap();
        prop_assert_eq!(s.norm_squared(), ExtScalar::one(k - 1));
        let reach = n as i64 + 2;
        for x in -reach..=reach {
            for c in [Chirality::L, Chirality::R] {
                let a = s.amplitude(x, c);
                if x.abs() > n as i64 || (x - n as i64).rem_euclid(2) != 0 {
                    prop_assert!(a.is_zero(), "({x}; {c}) at k = {k}, n = {n}");
                }
            }
        }
        // both light-cone extremes are occupied
        prop_assert!(!s.amplitude(n as i64, Chirality::R).is_zero());
        prop_assert!(!s.amplitude(-(n as i64), Chirality::L).is_zero());
        prop_assert!(s.amplitude(n as i64, Chirality::L).is_zero());
        prop_assert!(s.amplitude(-(n as i64), Chirality::R).is_zero());
    }
}
