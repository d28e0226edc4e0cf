use coset_growth::catalog::{by_name, standard};
use coset_growth::growth::{self, kneser_holds, mu_abelian, power_trace, ruzsa_counts};
use coset_growth::measure::{FgGroup, MeasureSpace, MeasurableSet};
use coset_growth::metric::{self, LatticeGraph};
use coset_growth::oracle;
use coset_growth::product_free as pf;
use coset_growth::subgroup::{enumerate_subgroups, quotient};
use coset_growth::{ElementSet, GroupTable, Rational};
use proptest::prelude::*;
use proptest::sample::select;
use std::sync::{Arc, OnceLock};

fn groups_up_to(n: usize) -> Vec<(String, Arc<GroupTable>)> {
    standard(n).into_iter().map(|e| (e.name, e.group)).collect()
}

fn small_groups() -> &'static [(String, Arc<GroupTable>)] {
    static G: OnceLock<Vec<(String, Arc<GroupTable>)>> = OnceLock::new();
    G.get_or_init(|| groups_up_to(16))
}

fn abelian16() -> &'static [(String, Arc<GroupTable>)] {
    static G: OnceLock<Vec<(String, Arc<GroupTable>)>> = OnceLock::new();
    G.get_or_init(|| {
        groups_up_to(16)
            .into_iter()
            .filter(|(_, g)| g.is_abelian() && g.order() == 16)
            .collect()
    })
}

fn subset(g: &GroupTable, bits: u64) -> ElementSet {
    let n = g.order();
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let s = ElementSet::from_mask(n, bits & mask);
    if s.is_empty() {
        ElementSet::singleton(n, 0)
    } else {
        s
    }
}

fn group_and_sets(
    pool: &'static [(String, Arc<GroupTable>)],
    k: usize,
) -> impl Strategy<Value = (String, Arc<GroupTable>, Vec<ElementSet>)> {
    (select(pool), proptest::collection::vec(any::<u64>(), k)).prop_map(|((name, g), bits)| {
        let sets = bits.iter().map(|&b| subset(&g, b)).collect();
        (name, g, sets)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn ruzsa_symmetry((_n, g, s) in group_and_sets(small_groups(), 2)) {
        let ab = ruzsa_counts(&g, &s[0], &s[1]);
        let ba = ruzsa_counts(&g, &s[1], &s[0]);
        prop_assert_eq!(ab.ab_inv, ba.ab_inv);
        prop_assert_eq!(ab.a_inv_b, ba.a_inv_b);
    }

    #[test]
    fn ruzsa_triangle((_n, g, s) in group_and_sets(small_groups(), 3)) {
        // d(A,C) <= d(A,B) + d(B,C) is |AC^-1||B| <= |AB^-1||BC^-1|
        let (a, b, c) = (&s[0], &s[1], &s[2]);
        let ac = ruzsa_counts(&g, a, c);
        let ab = ruzsa_counts(&g, a, b);
        let bc = ruzsa_counts(&g, b, c);
        let lhs = (ac.ab_inv * b.count()) as u64;
        let rhs = (ab.ab_inv * bc.ab_inv) as u64;
        prop_assert!(lhs <= rhs);
    }

    #[test]
    fn kneser_on_order_16((_n, g, s) in group_and_sets(abelian16(), 2)) {
        prop_assert!(kneser_holds(&g, &s[0], &s[1]));
    }

    #[test]
    fn powers_grow_then_settle((_n, g, s) in group_and_sets(small_groups(), 1)) {
        let t = power_trace(&g, &s[0], None);
        prop_assert!(t.sizes.windows(2).all(|w| w[0] <= w[1]));
        let n = t.stabilization_index.expect("stabilizes within 2|G|");
        prop_assert!(t.terminal_witness.is_some());
        let next = g.product_set(&t.terminal, &s[0]);
        prop_assert_eq!(next.count(), t.terminal.count());
        prop_assert_eq!(t.sizes[n - 1], t.terminal.count());
    }

    #[test]
    fn product_bounds((_n, g, s) in group_and_sets(small_groups(), 2)) {
        let ab = g.product_set(&s[0], &s[1]).count();
        prop_assert!(ab >= s[0].count().max(s[1].count()));
        if s[0].count() + s[1].count() > g.order() {
            prop_assert_eq!(ab, g.order());
        }
    }
}

#[test]
fn mu_formula_matches_search_on_small_abelian_groups() {
    for (name, g) in groups_up_to(12).into_iter().filter(|(_, g)| g.is_abelian()) {
        let n = g.order();
        for r in 1..=n {
            for s in 1..=n {
                let f = mu_abelian(&g, r, s).unwrap();
                let o = oracle::min_product_size(&g, r, s, u128::MAX).unwrap().value;
                assert_eq!(f, o, "{name} r={r} s={s}");
            }
        }
    }
}

fn z_space() -> &'static MeasureSpace {
    static S: OnceLock<MeasureSpace> = OnceLock::new();
    S.get_or_init(|| {
        let z = MeasureSpace::new(FgGroup::integers());
        for n in 1..=24 {
            z.register_cyclic(&format!("C{n}"), n).unwrap();
        }
        z
    })
}

fn z_set() -> impl Strategy<Value = MeasurableSet> {
    (1usize..=24, any::<u32>()).prop_map(|(n, bits)| {
        let q = z_space().chart(&format!("C{n}")).unwrap();
        MeasurableSet::from_indices(&q, (0..n).filter(|&i| bits >> i & 1 == 1))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn measure_is_additive(a in z_set(), b in z_set()) {
        let z = z_space();
        let u = z.union(&a, &b).unwrap();
        let i = z.intersect(&a, &b).unwrap();
        prop_assert_eq!(u.measure() + i.measure(), a.measure() + b.measure());
        let d = z.difference(&a, &b).unwrap();
        prop_assert_eq!(d.measure() + i.measure(), a.measure());
        prop_assert_eq!(a.complement().measure(), Rational::from(1) - a.measure());
    }

    #[test]
    fn measure_ignores_the_chart(a in z_set(), n in 1usize..=24) {
        let z = z_space();
        let q = z.chart(&format!("C{n}")).unwrap();
        let b = z.rechart(&a, &q).unwrap();
        prop_assert_eq!(b.measure(), a.measure());
        prop_assert!(z.sets_equal(&a, &b).unwrap());
    }

    #[test]
    fn measure_bounds(a in z_set()) {
        let m = a.measure();
        prop_assert!(m >= Rational::from(0) && m <= Rational::from(1));
        // squares only grow in measure
        prop_assert!(a.body().is_empty() || a.square().measure() >= m);
    }
}

#[test]
fn pullbacks_keep_product_free_density() {
    for (name, g) in groups_up_to(24) {
        let lat = enumerate_subgroups(&g).unwrap();
        for n in lat.normal_subgroups(&g).filter(|n| n.order() > 1 && n.order() < g.order()) {
            let (q, map) = quotient(&g, n).unwrap();
            let best = pf::max_product_free(&q);
            let p = pf::pullback_product_free(&map, &q, &best.set).unwrap();
            assert!(pf::is_product_free(&g, &p), "{name}");
            assert_eq!(Rational::new(p.count() as i64, g.order() as i64), best.alpha, "{name}");
            // and the density never beats the group's own optimum
            assert!(best.alpha <= pf::max_product_free(&g).alpha, "{name}");
        }
    }
}

fn metric_axioms(g: &GroupTable) {
    let (lat, graph) = metric::build_graph(g).unwrap();
    let subs = lat.subgroups();
    for (i, a) in subs.iter().enumerate() {
        for (j, b) in subs.iter().enumerate() {
            let e = metric::e_distance(a, b);
            assert_eq!(e, metric::e_distance(b, a));
            assert_eq!(e == 1, i == j);
            let path = metric::geodesic(&lat, &graph, i, j);
            assert_eq!(graph.path_weight(&path), Some(e));
            for c in subs {
                assert!(e <= metric::e_distance(a, c) * metric::e_distance(c, b));
            }
        }
    }
    for edge in &graph.edges {
        assert!(edge.index >= 2);
        assert_eq!(subs[edge.upper].order(), subs[edge.lower].order() * edge.index);
    }
    let back = LatticeGraph::from_json(&graph.to_json()).unwrap();
    assert_eq!(back.edges.len(), graph.edges.len());
    assert_eq!(back.vertices.len(), graph.vertices.len());
}

#[test]
fn lattice_metric_axioms() {
    for name in ["C12", "S3", "D4", "Q8", "A4", "C2^3", "D6"] {
        metric_axioms(&by_name(name).unwrap());
    }
}

#[test]
fn stable_squares_are_left_right_cosets() {
    let g = by_name("S3").unwrap();
    for bits in 1u64..64 {
        let a = ElementSet::from_mask(6, bits);
        let stable = g.product_set(&a, &a).count() == a.count();
        assert_eq!(stable, growth::is_left_right_coset(&g, &a).is_some(), "{bits:b}");
    }
}
