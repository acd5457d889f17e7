use eil_core::constructions::{build_hn, build_hvd, check_construction1, predict_deg, predict_v, ConstructionPart};
use eil_core::homology::SimplicialComplex;
use eil_core::invariants::{deg_h, f_vector, hilbert_series, v_number};
use eil_core::regularity::{independence_complex, reduced_betti, regularity, regularity_chordal};
use eil_core::search::{enumerate_graphs, verify_theorems};
use eil_core::{FieldSpec, Graph, IntPolynomial, VertexSet};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

#[test]
fn complete_and_star_series() {
    for n in 2..=12 {
        let s = hilbert_series(&Graph::complete(n).unwrap()).unwrap();
        assert_eq!(s.numerator(), &IntPolynomial::from_coeffs(vec![1, n as i128 - 1]));
        assert_eq!(s.pole_order(), 1);
        let s = hilbert_series(&Graph::star(n - 1).unwrap()).unwrap();
        let expected = IntPolynomial::from_coeffs(vec![0, 1])
            .mul_one_minus_t_pow(n - 2)
            .unwrap()
            .checked_add(&IntPolynomial::one())
            .unwrap();
        assert_eq!(s.numerator(), &expected);
        assert_eq!(s.pole_order(), n - 1);
    }
}

#[test]
fn disjoint_unions_are_additive() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..100 {
        let n1 = rng.gen_range(2..=8);
        let n2 = rng.gen_range(2..=8);
        let g1 = random_graph(&mut rng, n1, 0.4);
        let g2 = random_graph(&mut rng, n2, 0.4);
        let u = g1.disjoint_union(&g2).unwrap();
        let (s1, s2, su) = (hilbert_series(&g1).unwrap(), hilbert_series(&g2).unwrap(), hilbert_series(&u).unwrap());
        assert_eq!(su, s1.product(&s2).unwrap());
        assert_eq!(su.degree(), s1.degree() + s2.degree());
        assert_eq!(v_number(&u), v_number(&g1) + v_number(&g2));
        assert_eq!(u.independence_number(), g1.independence_number() + g2.independence_number());
    }
}

#[test]
fn regularity_is_additive_on_chordal_pairs() {
    let chordal: Vec<Graph> =
        (2..=5).flat_map(|n| enumerate_graphs(n, true).unwrap()).filter(|g| g.is_chordal()).collect();
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..30 {
        let a = chordal.choose(&mut rng).unwrap();
        let b = chordal.choose(&mut rng).unwrap();
        let u = a.disjoint_union(b).unwrap();
        let q = FieldSpec::Rationals;
        assert_eq!(regularity(&u, q).unwrap(), regularity(a, q).unwrap() + regularity(b, q).unwrap());
    }
}

#[test]
fn exhaustive_small_graph_bounds() {
    for n in 1..=7 {
        let graphs = enumerate_graphs(n, false).unwrap();
        for g in &graphs {
            assert!(deg_h(g).unwrap() <= g.independence_number());
            let f = f_vector(g);
            let top = *f.counts().last().unwrap() as i128;
            assert_eq!(hilbert_series(g).unwrap().numerator().eval_at_one(), Ok(top));
        }
        let report = verify_theorems(&graphs);
        assert_eq!(report.theorem_violations(), 0, "n={n}: {report:?}");
    }
}

#[test]
fn chordal_homology_matches_induced_matching() {
    for n in 2..=7 {
        for g in enumerate_graphs(n, false).unwrap() {
            if g.is_edgeless() || !g.is_chordal() {
                continue;
            }
            let nu = regularity_chordal(&g).unwrap();
            assert_eq!(regularity(&g, FieldSpec::Rationals), Ok(nu));
            assert_eq!(regularity(&g, FieldSpec::PrimeField(2)), Ok(nu));
        }
    }
}

#[test]
fn regularity_envelope() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..60 {
        let n = rng.gen_range(2..=9);
        let g = random_graph(&mut rng, n, 0.35);
        if g.is_edgeless() {
            continue;
        }
        let r = regularity(&g, FieldSpec::Rationals).unwrap();
        assert!(g.induced_matching_number() <= r && r <= n - g.independence_number(), "{g:?}");
    }
}

#[test]
fn betti_numbers_ignore_labels() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..40 {
        let n = rng.gen_range(3..=9);
        let g = random_graph(&mut rng, n, 0.4);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let h = g.permuted(&perm).unwrap();
        let a = independence_complex(&g).unwrap();
        let b = independence_complex(&h).unwrap();
        assert_eq!(reduced_betti(&a, FieldSpec::Rationals), reduced_betti(&b, FieldSpec::Rationals));
        assert_eq!(a.face_counts(), f_vector(&g).counts().iter().map(|&c| c as usize).collect::<Vec<_>>());
        for d in 0..=a.dimension() {
            assert!(a.boundary(d).compose(&a.boundary(d + 1)).iter().flatten().all(|&x| x == 0));
        }
    }
}

#[test]
fn boundary_squares_to_zero_on_a_simplex() {
    let c = SimplicialComplex::simplex(VertexSet::full(6));
    for d in 0..=c.dimension() {
        assert!(c.boundary(d).compose(&c.boundary(d + 1)).iter().flatten().all(|&x| x == 0));
    }
}

#[test]
fn hvd_realizes_every_pair() {
    for d in 1..=6 {
        for v in 1..=d {
            let g = build_hvd(v, d).unwrap();
            assert!(g.is_connected());
            assert_eq!((v_number(&g), deg_h(&g).unwrap()), (v, d), "H({v},{d})");
        }
    }
}

#[test]
fn construction_predictions_on_small_parts() {
    let mut rng = StdRng::seed_from_u64(17);
    let pool: Vec<Graph> = (2..=5).flat_map(|n| enumerate_graphs(n, true).unwrap()).collect();
    let (mut deg_checked, mut v_checked) = (0, 0);
    for _ in 0..3000 {
        let k = rng.gen_range(1..=3);
        let parts: Vec<ConstructionPart> = (0..k)
            .map(|_| {
                let g = pool.choose(&mut rng).unwrap().clone();
                let a = VertexSet(rng.gen_range(1..1u64 << g.n()));
                ConstructionPart::new(g, a).unwrap()
            })
            .collect();
        let h = build_hn(&parts).unwrap();
        if check_construction1(&parts).unwrap() {
            let p = predict_deg(&parts).unwrap();
            assert_eq!(p.deg_h, Some(deg_h(&h).unwrap()));
            assert_eq!(p.dim, Some(h.independence_number()));
            deg_checked += 1;
        }
        if k >= 2 {
            if let Some(v) = predict_v(&parts).unwrap().v {
                assert_eq!(v, v_number(&h));
                v_checked += 1;
            }
        }
    }
    assert!(deg_checked >= 20 && v_checked >= 20, "{deg_checked} {v_checked}");
}
