use hoffman_limits::graph::{
    cycle, double_snake, edges_on_internal_paths, internal_paths, lollipop, p2_two_paths, path,
    star, Graph, PathKind,
};
use hoffman_limits::limits::{
    eta_deficit, eta_n, eta_n_version2, omega1, phi_version1, phi_version2, psi, theta_substitution,
};
use hoffman_limits::roots::RootConfig;
use hoffman_limits::spectral::{
    alpha_radius, assemble_a_alpha, assemble_laplacian, full_spectrum, h_of_lambda, radius_bounds,
    DEFAULT_TOL,
};
use hoffman_limits::verify::random_connected_graph;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn connected(seed: u64, n: usize) -> Graph {
    random_connected_graph(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn rho(g: &Graph, a: f64) -> f64 {
    alpha_radius(g, a, DEFAULT_TOL).unwrap()
}

fn sorted_spectrum(g: &Graph, a: f64) -> Vec<f64> {
    full_spectrum(assemble_a_alpha(g, a).unwrap().matrix(), DEFAULT_TOL)
        .unwrap()
        .eigenvalues
        .unwrap()
}

fn family(kind: u8, k: usize) -> Graph {
    match kind {
        0 => path(k).unwrap(),
        1 => cycle(k.max(3)).unwrap(),
        2 => star(k).unwrap(),
        3 => lollipop(k.max(4)).unwrap(),
        4 => double_snake(k.max(6)).unwrap(),
        _ => p2_two_paths(k, k / 2 + 1).unwrap().0,
    }
}

fn well_formed(g: &Graph) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    g.edges().all(|(u, v)| u != v && u < g.n_vertices() && v < g.n_vertices() && seen.insert((u.min(v), u.max(v))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn constructors_are_simple(kind in 0u8..6, k in 1usize..30) {
        prop_assert!(well_formed(&family(kind, k)));
    }

    #[test]
    fn two_paths_symmetric(m in 1usize..15, n in 1usize..15, a in 0.0f64..1.0) {
        let (g, _) = p2_two_paths(m, n).unwrap();
        let (h, _) = p2_two_paths(n, m).unwrap();
        prop_assert_eq!(g.degree_sequence(), h.degree_sequence());
        for (x, y) in sorted_spectrum(&g, a).iter().zip(sorted_spectrum(&h, a)) {
            prop_assert!((x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn subdivision_adds_one_of_each(seed: u64, n in 4usize..=12, pick: prop::sample::Index) {
        let g = connected(seed, n);
        let edges: Vec<_> = g.edges().collect();
        let s = g.subdivide_edge(edges[pick.index(edges.len())]).unwrap();
        prop_assert_eq!(s.n_vertices(), g.n_vertices() + 1);
        prop_assert_eq!(s.n_edges(), g.n_edges() + 1);
        prop_assert!(s.is_connected());
    }

    #[test]
    fn internal_paths_are_maximal(seed: u64, n in 4usize..=12, extra in 0usize..4, pick: prop::sample::Index) {
        // lengthen one edge so that degree-2 runs appear
        let mut g = connected(seed, n);
        for _ in 0..extra {
            let edges: Vec<_> = g.edges().collect();
            g = g.subdivide_edge(edges[pick.index(edges.len())]).unwrap();
        }
        for p in internal_paths(&g) {
            let (first, last) = (p.vertices[0], *p.vertices.last().unwrap());
            prop_assert!(g.degree(first) > 2 && g.degree(last) > 2);
            prop_assert!(p.vertices[1..p.len()].iter().all(|&v| g.degree(v) == 2));
            prop_assert!(p.edges().all(|(u, v)| g.has_edge(u, v)));
            prop_assert_eq!(p.kind == PathKind::TypeI, first == last);
        }
        // every edge between two vertices of degree 2 lies inside some path
        let on = edges_on_internal_paths(&g);
        let covered = internal_paths(&g).iter().flat_map(|p| p.vertices.clone()).collect::<Vec<_>>();
        for (u, v) in g.edges() {
            if on.contains(&(u, v)) {
                prop_assert!(covered.contains(&u) && covered.contains(&v));
            }
        }
    }

    #[test]
    fn radius_within_bounds(seed: u64, n in 4usize..=12, a in 0.0f64..=1.0) {
        let g = connected(seed, n);
        let r = rho(&g, a);
        let (lo, hi) = radius_bounds(&g, a);
        prop_assert!(lo <= r + 1e-10 && r <= hi + 1e-10);
    }

    #[test]
    fn radius_grows_with_alpha(seed: u64, n in 4usize..=12, a in 0.0f64..0.95, step in 0.05f64..0.5) {
        let g = connected(seed, n);
        let b = (a + step).min(1.0);
        if g.is_regular() {
            prop_assert!((rho(&g, b) - rho(&g, a)).abs() < 1e-10);
        } else {
            prop_assert!(rho(&g, b) > rho(&g, a));
        }
    }

    #[test]
    fn deleting_an_edge_lowers_radius(seed: u64, n in 4usize..=12, a in 0.0f64..1.0, pick: prop::sample::Index) {
        let g = connected(seed, n);
        let edges: Vec<_> = g.edges().collect();
        let h = g.remove_edge(edges[pick.index(edges.len())]).unwrap();
        prop_assert!(rho(&h, a) < rho(&g, a) + 1e-12);
    }

    #[test]
    fn laplacian_rows_sum_to_zero(seed: u64, n in 4usize..=12) {
        let l = assemble_laplacian(&connected(seed, n), false);
        for i in 0..n {
            prop_assert_eq!(l.matrix().row(i).iter().sum::<f64>(), 0.0);
        }
    }

    #[test]
    fn signless_is_twice_half(seed: u64, n in 4usize..=12) {
        let g = connected(seed, n);
        let q = assemble_laplacian(&g, true);
        prop_assert_eq!(q.matrix().max_abs_diff(&assemble_a_alpha(&g, 0.5).unwrap().matrix().scale(2.0)), 0.0);
    }

    #[test]
    fn phi_increasing_with_one_root(n in 1usize..=20, a in 0.0f64..0.95) {
        let p = phi_version1(n, a).unwrap();
        prop_assert!(p.eval_t(0.0) < 0.0 && p.eval_t(1.0) > 0.0);
        let values: Vec<f64> = (0..=100).map(|i| p.eval_t(i as f64 / 100.0)).collect();
        prop_assert!(values.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn duality(n in 1usize..=20, a in 0.0f64..0.95, x in 0.001f64..0.999) {
        let p = phi_version1(n, a).unwrap();
        let pt = phi_version2(n, a).unwrap();
        let r = p.eval_x(x) + x.powi(n as i32 + 1) * pt.eval_x(1.0 / x);
        prop_assert!(r.abs() < 1e-12 * p.eval_x(x).abs().max(1.0));
    }

    #[test]
    fn both_roots_give_one_eta(n in 1usize..=20, a in 0.0f64..0.95) {
        let cfg = RootConfig::default();
        prop_assert!((eta_n(n, a, &cfg).unwrap() - eta_n_version2(n, a, &cfg).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn h_parametrised_by_theta(theta in 0.01f64..0.999, a in 0.0f64..0.95) {
        let lambda = theta_substitution(theta, a).unwrap();
        let h = h_of_lambda(lambda, a).unwrap();
        prop_assert!((h - theta / (1.0 - a * (1.0 - theta))).abs() < 1e-10);
    }

    #[test]
    fn deficits_strictly_shrink(n in 0usize..30, a in 0.0f64..0.95) {
        let cfg = RootConfig::default();
        let (d, next) = (eta_deficit(n, a, &cfg).unwrap(), eta_deficit(n + 1, a, &cfg).unwrap());
        prop_assert!(next > 0.0);
        // η_0 = η_1 = 2 at α = 0
        if n == 0 && a == 0.0 {
            prop_assert!((d - next).abs() < 1e-15);
        } else {
            prop_assert!(d > next);
        }
    }
}

#[test]
fn eta_50_close_to_psi_and_below_omega1() {
    let cfg = RootConfig::default();
    for i in 0..20 {
        let a = i as f64 / 20.0;
        let p = psi(a, &cfg).unwrap();
        assert!((p - eta_n(50, a, &cfg).unwrap()).abs() < 1e-3);
        assert!(p < omega1(a).unwrap());
    }
}
