use cage_spectra::cages::moore_exists;
use cage_spectra::closed_forms::{
    cage_distance_spectrum, coefficient_table, distance_polynomial, dr_radius, equidistance_matrix,
    subdivision_distance_blocks, subdivision_quotient, subdivision_radius, Parity,
};
use cage_spectra::graph::shell_of;
use cage_spectra::regularity::quotient_matrix;
use cage_spectra::scalar::{rat, ratio};
use cage_spectra::spectra::{char_poly_exact, eig_symmetric, numeric_spectrum, roots_match_numeric};
use cage_spectra::{Error, Graph, IntMatrix, QuadSurd, RationalPolynomial};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Connected graph on `n` vertices: a random spanning tree plus extra edges.
fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..10).prop_flat_map(|n| {
        let parents = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
        let extra = proptest::collection::vec((0..n, 0..n), 0..2 * n);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            edges.extend(extra.into_iter().filter(|(u, v)| u != v));
            edges.iter_mut().for_each(|e| *e = (e.0.min(e.1), e.0.max(e.1)));
            edges.sort_unstable();
            edges.dedup();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Circulant graph `C_n(S)`: regular of degree `|±S|`.
fn circulant() -> impl Strategy<Value = Graph> {
    (5usize..14).prop_flat_map(|n| {
        proptest::collection::btree_set(1..=n / 2, 1..=3).prop_map(move |offsets| {
            let mut edges = Vec::new();
            for v in 0..n {
                for &s in &offsets {
                    let w = (v + s) % n;
                    edges.push((v.min(w), v.max(w)));
                }
            }
            edges.sort_unstable();
            edges.dedup();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn surd_in(r: u64) -> impl Strategy<Value = QuadSurd> {
    (-20i64..20, 1i64..6, -20i64..20, 1i64..6)
        .prop_map(move |(an, ad, bn, bd)| QuadSurd::new(ratio(an, ad), ratio(bn, bd), r))
}

fn radicand() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 6, 7, 10])
}

fn small_surd() -> impl Strategy<Value = QuadSurd> {
    radicand().prop_flat_map(surd_in)
}

/// Two surds over the same field `Q(√r)`.
fn surd_pair() -> impl Strategy<Value = (QuadSurd, QuadSurd)> {
    radicand().prop_flat_map(|r| (surd_in(r), surd_in(r)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn shells_sum_to_distance(g in connected_graph()) {
        let d = g.distance_matrix().unwrap();
        let diam = g.diameter().unwrap();
        let sum = (0..=diam).fold(IntMatrix::zeros(d.rows(), d.rows()), |acc, i| {
            &acc + &shell_of(&d, i).scale(&(i as i64))
        });
        prop_assert_eq!(sum, d);
    }

    #[test]
    fn incidence_identities(g in connected_graph()) {
        let r = g.incidence_matrix();
        let n = g.vertex_count();
        let degrees = IntMatrix::from_fn(n, n, |i, j| if i == j { g.degree(i) as i64 } else { 0 });
        prop_assert_eq!(r.matmul(&r.transpose()), &g.adjacency_matrix() + &degrees);
        let m = g.edge_count();
        let lhs = r.transpose().matmul(&r);
        prop_assert_eq!(lhs, &g.line_graph().adjacency_matrix() + &IntMatrix::identity(m).scale(&2));
    }

    #[test]
    fn subdivision_block_form_holds_for_any_connected_graph(g in connected_graph()) {
        let bfs = g.subdivision().distance_matrix().unwrap();
        prop_assert_eq!(subdivision_distance_blocks(&g, Parity::Odd).unwrap(), bfs.clone());
        // E vanishes exactly on bipartite graphs, where the even form suffices.
        let e = equidistance_matrix(&g, &g.distance_matrix().unwrap());
        let e_zero = e.iter().all(|&v| v == 0);
        prop_assert_eq!(e_zero, g.is_bipartite());
        if g.is_bipartite() {
            prop_assert_eq!(subdivision_distance_blocks(&g, Parity::Even).unwrap(), bfs);
        }
    }

    #[test]
    fn char_poly_low_coefficients(g in connected_graph()) {
        let d = g.distance_matrix().unwrap();
        let n = d.rows();
        let p = char_poly_exact(&d, 64).unwrap();
        prop_assert_eq!(p.coeff(n), BigInt::from(1));
        prop_assert_eq!(p.coeff(n - 1), BigInt::from(0));
        let frob: i64 = d.iter().map(|v| v * v).sum();
        prop_assert_eq!(p.coeff(n - 2), BigInt::from(-frob / 2));
        let eig = eig_symmetric(&d.to_f64()).unwrap();
        let sq: f64 = eig.iter().map(|x| x * x).sum();
        prop_assert!((sq - frob as f64).abs() <= 1e-8 * frob as f64);
        prop_assert!(eig.iter().sum::<f64>().abs() <= 1e-8 * (frob as f64).sqrt());
    }

    #[test]
    fn singleton_partition_is_the_matrix(g in connected_graph()) {
        let d = g.distance_matrix().unwrap();
        let parts: Vec<Vec<usize>> = (0..d.rows()).map(|v| vec![v]).collect();
        let q = quotient_matrix(&d, &parts).unwrap();
        prop_assert!(q.equitable);
        prop_assert_eq!(q.q, d.map(|&v| rat(v)));
    }

    #[test]
    fn line_graph_spectrum_of_regular_graphs(g in circulant()) {
        let r = g.regularity().unwrap() as f64;
        let (n, m) = (g.vertex_count(), g.edge_count());
        prop_assume!(m >= n);
        let mut expected: Vec<f64> = eig_symmetric(&g.adjacency_matrix().to_f64())
            .unwrap()
            .into_iter()
            .map(|l| l + r - 2.0)
            .chain(std::iter::repeat_n(-2.0, m - n))
            .collect();
        expected.sort_by(f64::total_cmp);
        let got = eig_symmetric(&g.line_graph().adjacency_matrix().to_f64()).unwrap();
        for (a, b) in got.iter().zip(&expected) {
            prop_assert!((a - b).abs() <= 1e-6, "{} vs {}", a, b);
        }
    }

    #[test]
    fn surd_field_operations((x, y) in surd_pair()) {
        let sum = x.checked_add(&y).unwrap();
        prop_assert_eq!(sum.checked_sub(&y).unwrap(), x.clone());
        let conj = x.checked_mul(&x.conjugate()).unwrap();
        prop_assert_eq!(conj, QuadSurd::rational(x.norm()));
        let prod = x.checked_mul(&y).unwrap();
        prop_assert!((prod.to_f64() - x.to_f64() * y.to_f64()).abs() <= 1e-9 * (1.0 + prod.to_f64().abs()));
        if !x.norm().eq(&rat(0)) {
            prop_assert_eq!(prod.checked_div(&x).unwrap(), y);
        }
    }

    #[test]
    fn surd_evaluation_matches_float(x in small_surd(), coeffs in proptest::collection::vec(-9i64..9, 1..5)) {
        let p = RationalPolynomial::from_ints(&coeffs);
        let exact = x.eval(&p).to_f64();
        let t = x.to_f64();
        let float: f64 = coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c as f64);
        prop_assert!((exact - float).abs() <= 1e-9 * (1.0 + float.abs()));
    }

    #[test]
    fn coefficient_lemma_holds(k in 2i64..60, d in 1usize..9) {
        prop_assert!(coefficient_table(k, d).is_ok());
    }

    #[test]
    fn moore_closed_forms_are_consistent(k in 3u64..40, g in prop::sample::select(vec![3u64, 4, 5, 6, 8, 12])) {
        prop_assume!(moore_exists(k, g).formula_ok());
        let d = g / 2;
        let spec = cage_distance_spectrum(k, g).unwrap();
        prop_assert!(spec.trace_is_zero());
        prop_assert_eq!(spec.distinct_count() as u64, d + 1);
        let r = dr_radius(k, g).unwrap();
        let pk = QuadSurd::int(k as i64).eval(&distance_polynomial(k, g).unwrap().p);
        prop_assert_eq!(pk.to_integer(), Some(r.clone()));
        prop_assert_eq!(spec.largest().and_then(|v| v.to_integer()), Some(r));
        let q = subdivision_quotient(k, g).unwrap();
        match (subdivision_radius(k, g), q.larger_root()) {
            (Ok(a), Ok(b)) => {
                prop_assert_eq!(&a, &b);
                let diag = q.q[(0, 0)].clone().max(q.q[(1, 1)].clone());
                prop_assert!(a.to_f64() > cage_spectra::Scalar::to_f64_lossy(&diag));
            }
            // radicands are held in u64; larger ones must fail cleanly, never silently
            (Err(Error::Surd(a)), Err(Error::Surd(b))) => {
                prop_assert!(a.contains("exceeds u64") && b.contains("exceeds u64"));
            }
            (a, b) => prop_assert!(false, "radius {:?} vs quotient root {:?}", a, b),
        }
    }
}

#[test]
fn char_poly_roots_match_eigensolver_on_random_cycles() {
    for n in 3..12 {
        let g = Graph::from_edges(n, (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n)))).unwrap();
        let d = g.distance_matrix().unwrap();
        let p = char_poly_exact(&d, 64).unwrap();
        assert!(roots_match_numeric(&p, &numeric_spectrum(&d).unwrap(), 1e-6), "C_{n}");
    }
}
