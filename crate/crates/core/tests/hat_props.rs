use hatlab_core::hat::{
    degree_for_genus, gcd, hat_bounds, hat_genus_at_degree, is_triangular, milnor_genus, min_hat_degree,
    negative_torus_max_slk, semigroup_lb, slk_for_hat, stabilized_lower_qp, stabilized_upper, t2_table,
    triangular_lb, twist_knot_hat_genus, WitnessDb,
};
use hatlab_core::report::T2_EXPECTED;
use proptest::prelude::*;

fn tri(d: i64) -> i64 {
    (d - 1) * (d - 2) / 2
}

/// Least `d >= 1` with `tri(d) >= t`, by linear scan.
fn scan_degree(t: i64) -> i64 {
    (1..).find(|&d| tri(d) >= t).unwrap()
}

proptest! {
    #[test]
    fn genus_and_slk_are_inverse(d in 1i64..200, g in 0i64..5000) {
        let slk = slk_for_hat(d, g);
        prop_assume!(slk % 2 != 0);
        prop_assert_eq!(hat_genus_at_degree(slk, d).unwrap(), g);
        prop_assert_eq!(degree_for_genus(slk, g).unwrap(), Some(scan_degree(tri(d))));
    }

    #[test]
    fn genus_grows_with_degree(half in -1i64..400, d in 1i64..100) {
        let slk = 2 * half + 1;
        if let (Ok(a), Ok(b)) = (hat_genus_at_degree(slk, d), hat_genus_at_degree(slk, d + 1)) {
            prop_assert_eq!(b - a, d - 1);
        }
    }

    #[test]
    fn min_degree_is_least_feasible(half in -1i64..2000) {
        let slk = 2 * half + 1;
        let d = min_hat_degree(slk).unwrap();
        prop_assert!(hat_genus_at_degree(slk, d).is_ok());
        prop_assert!(d == 1 || hat_genus_at_degree(slk, d - 1).is_err());
        prop_assert_eq!(d, scan_degree(half + 1));
    }

    #[test]
    fn triangular_bound_is_zero_exactly_on_triangular_numbers(g in 0i64..100_000) {
        let b = triangular_lb(g).unwrap();
        prop_assert_eq!(b.genus_lb == 0, is_triangular(g));
        prop_assert_eq!(b.degree, scan_degree(g));
        prop_assert_eq!(b.m, tri(b.degree));
        prop_assert!(b.m >= g);
    }

    #[test]
    fn stabilization_brackets(g_s in 0i64..50, extra in 0i64..50, k in 0i64..100) {
        let hat = g_s + extra;
        prop_assert!(stabilized_lower_qp(g_s, k) <= stabilized_upper(hat, k));
    }

    #[test]
    fn bounds_report_is_consistent(half in 0i64..500, span in 1i64..6) {
        let slk = 2 * half + 1;
        let r = hat_bounds(slk, None, None, span).unwrap();
        prop_assert_eq!(r.slice_genus, half + 1);
        prop_assert_eq!(r.genus_by_degree.len() as i64, span);
        prop_assert_eq!(r.genus_by_degree[&r.degree_lb], r.genus_lb);
        for (&d, &g) in &r.genus_by_degree {
            prop_assert_eq!(g, tri(d) - (slk + 1) / 2);
        }
    }
}

#[test]
fn semigroup_third_element_by_enumeration() {
    for q in 3..=20i64 {
        for p in 2..q {
            if gcd(p, q) != 1 {
                assert!(semigroup_lb(p, q).is_err());
                continue;
            }
            let mut elems: Vec<i64> =
                (0..=3).flat_map(|i| (0..=3).map(move |j| i * p + j * q)).collect();
            elems.sort_unstable();
            elems.dedup();
            assert_eq!(semigroup_lb(p, q).unwrap(), elems[2], "p={p} q={q}");
        }
    }
}

#[test]
fn torus_knots_are_quasipositive_with_milnor_genus() {
    for q in 3..=12i64 {
        for p in 2..q {
            if gcd(p, q) != 1 {
                continue;
            }
            let g = milnor_genus(p, q).unwrap();
            let slk = p * q - p - q;
            assert_eq!(hatlab_core::hat::slice_genus_qp(slk).unwrap(), g);
            let d = min_hat_degree(slk).unwrap();
            assert_eq!(hat_genus_at_degree(slk, d).unwrap(), triangular_lb(g).unwrap().genus_lb);
            let neg = negative_torus_max_slk(p, q).unwrap();
            assert_eq!(neg % 2, -1);
            assert!(neg < -1);
        }
    }
}

#[test]
fn twist_knots() {
    assert_eq!(twist_knot_hat_genus(-3), Some(1));
    assert_eq!(twist_knot_hat_genus(1), Some(2));
    assert_eq!(twist_knot_hat_genus(4), Some(2));
    assert_eq!(twist_knot_hat_genus(-2), None);
    assert_eq!(twist_knot_hat_genus(0), None);
}

#[test]
fn witness_table_is_self_consistent() {
    let db = WitnessDb::builtin();
    db.check().unwrap();
    for w in &db.witnesses {
        assert_eq!(w.genus, tri(w.degree) - (w.slk + 1) / 2, "{}", w.knot);
    }
}

#[test]
fn t2_table_against_independent_bracket() {
    let db = WitnessDb::builtin();
    let rows = t2_table(11);
    for (row, expected) in rows.iter().zip(T2_EXPECTED) {
        let k = row.k;
        let slk = 2 * k - 1;
        let d = scan_degree(k);
        let mut lb = tri(d) - k;
        if let Some(f) = db.lower_bound_for(&row.knot) {
            lb = lb.max(f.genus);
        }
        let best = db.witnesses_for(&row.knot).filter(|w| w.slk == slk).map(|w| w.genus).min();
        assert_eq!(row.lower_bound, lb, "k={k}");
        assert_eq!(best, Some(expected), "k={k}");
        assert_eq!(row.exact(), Some(expected), "k={k}");
    }
}

#[test]
fn torus_knot_hat_at_degree_q() {
    for q in 3..=12i64 {
        for p in 2..q {
            if gcd(p, q) != 1 {
                continue;
            }
            let slk = p * q - p - q;
            assert_eq!(hat_genus_at_degree(slk, q).unwrap(), (q - 1) * (q - p - 1) / 2, "p={p} q={q}");
        }
    }
    assert_eq!(hat_genus_at_degree(19, 6).unwrap(), 0);
}
