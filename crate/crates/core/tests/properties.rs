use proptest::prelude::*;
use sqcolor::color::{
    chromatic_number, corr_color, exact_coloring, is_corr_coloring, is_list_coloring, is_proper_coloring, list_color,
    CorrespondenceAssignment, ListAssignment,
};
use sqcolor::degeneracy::{back_degrees, degeneracy_order, good_order_certificate, greedy_color_from_order};
use sqcolor::discharge::run_discharging;
use sqcolor::generators::random_plane_c4free;
use sqcolor::graph::find_four_cycle;
use sqcolor::io::{parse_graph, parse_plane, write_graph, write_plane};
use sqcolor::kernel::{find_kernel, is_kernel, is_kernel_perfect, Digraph};
use sqcolor::Graph;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

/// Brute-force chromatic number by trying every assignment with `k` colors.
fn brute_chromatic(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut color = vec![0usize; n];
        loop {
            if g.edges().all(|(u, v)| color[u] != color[v]) {
                return k;
            }
            let mut i = 0;
            while i < n && color[i] == k - 1 {
                color[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            color[i] += 1;
        }
    }
    n
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn square_is_distance_at_most_two(g in graph_strategy(9)) {
        let sq = g.square();
        for u in 0..g.n() {
            let dist = g.distances_from(u);
            for v in 0..g.n() {
                let close = u != v && matches!(dist[v], Some(1) | Some(2));
                prop_assert_eq!(sq.has_edge(u, v), close);
            }
        }
    }

    #[test]
    fn degeneracy_order_bounds_back_degrees(g in graph_strategy(10)) {
        let (order, k) = degeneracy_order(&g);
        let back = back_degrees(&g, &order);
        prop_assert!(back.iter().all(|&b| b <= k));
        let colors = greedy_color_from_order(&g, &order);
        prop_assert!(is_proper_coloring(&g, &colors));
        prop_assert!(colors.iter().all(|&c| c <= k + 1));
    }

    #[test]
    fn exact_coloring_is_optimal(g in graph_strategy(7)) {
        let col = exact_coloring(&g).unwrap();
        prop_assert!(g.n() == 0 || is_proper_coloring(&g, &col));
        prop_assert_eq!(chromatic_number(&g).unwrap(), brute_chromatic(&g));
    }

    #[test]
    fn long_lists_always_color(g in graph_strategy(8), shift in 0usize..5) {
        let lists: Vec<Vec<usize>> =
            (0..g.n()).map(|v| (1 + shift * v % 3..).take(g.degree(v) + 1).collect()).collect();
        let lists = ListAssignment::new(lists);
        let col = list_color(&g, &lists).unwrap().expect("degree + 1 lists suffice");
        prop_assert!(is_list_coloring(&g, &lists, &col));
    }

    #[test]
    fn identity_correspondence_is_ordinary_coloring(g in graph_strategy(7)) {
        let chi = chromatic_number(&g).unwrap().max(1);
        let c = CorrespondenceAssignment::identity(&g, vec![chi; g.n()]);
        let col = corr_color(&g, &c).unwrap().expect("chi colors suffice");
        prop_assert!(is_corr_coloring(&g, &c, &col));
        prop_assert!(g.n() == 0 || is_proper_coloring(&g, &col));
        if chi > 1 {
            let tight = CorrespondenceAssignment::identity(&g, vec![chi - 1; g.n()]);
            prop_assert!(corr_color(&g, &tight).unwrap().is_none());
        }
    }

    #[test]
    fn edge_list_round_trips(g in graph_strategy(10)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn acyclic_digraphs_are_kernel_perfect(g in graph_strategy(8)) {
        // Every edge points from the lower to the higher id.
        let d = Digraph::new(g.n(), g.edges().collect()).unwrap();
        prop_assert_eq!(is_kernel_perfect(&d), Ok(true));
        let k = find_kernel(&d).unwrap().expect("acyclic digraphs have kernels");
        let all: Vec<usize> = (0..g.n()).collect();
        prop_assert!(is_kernel(&d, &all, &k));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_plane_graphs_are_c4_free_embeddings(n in 4usize..80, seed in any::<u64>()) {
        let (pg, ids) = random_plane_c4free(n, seed);
        let g = pg.graph();
        prop_assert!(g.n() <= n);
        prop_assert_eq!(ids.len(), g.n());
        prop_assert!(find_four_cycle(g).is_none());
        prop_assert!(pg.euler_check_components());
        let sides: usize = (0..pg.face_count()).map(|f| pg.face_len(f)).sum();
        prop_assert_eq!(sides, 2 * g.m());
        let back = parse_plane(&write_plane(&pg)).unwrap();
        prop_assert_eq!(back.rotations(), pg.rotations());
    }

    #[test]
    fn good_order_certificate_holds(n in 4usize..120, seed in any::<u64>()) {
        let (pg, _) = random_plane_c4free(n, seed);
        let cert = good_order_certificate(pg.graph());
        prop_assert!(cert.pass);
        prop_assert_eq!(cert.bound, pg.graph().max_degree() + 72);
    }

    #[test]
    fn discharging_conserves_charge(n in 8usize..120, seed in any::<u64>(), beta in 3usize..12) {
        let (pg, _) = random_plane_c4free(n, seed);
        let g = pg.graph();
        prop_assume!(g.n() > 0 && g.is_connected() && g.min_degree() >= 2);
        let ledger = run_discharging(&pg, beta).unwrap();
        for (_, total) in ledger.totals() {
            prop_assert_eq!(total, (-8).into());
        }
    }
}
