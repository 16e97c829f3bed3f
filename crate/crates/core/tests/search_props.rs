use std::collections::BTreeSet;

use hatlab_core::search::{
    class_genus, cusp_genus, enumeration_size, gromov_constraints, ohta_ono_filter, search, search_with_cap,
    triangular_difference, CurveClass, TriangularDifference,
};
use hatlab_core::{SearchParams, SearchError};
use proptest::prelude::*;

/// Every class with `a` in range and `a >= b_1 >= ... >= b_n >= 0` whose
/// genus after removing the two cusps is `genus`, by exhaustive counting.
fn naive(p: i64, n: usize, a_min: i64, a_max: i64, genus: i64) -> BTreeSet<(i64, Vec<i64>)> {
    let mut out = BTreeSet::new();
    for a in a_min..=a_max {
        let total = (a + 1).pow(n as u32);
        for code in 0..total {
            let mut b = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                b.push(c % (a + 1));
                c /= a + 1;
            }
            if b.windows(2).any(|w| w[0] < w[1]) {
                continue;
            }
            let g = (a - 1) * (a - 2) / 2 - b.iter().map(|x| x * (x - 1) / 2).sum::<i64>() - cusp_genus(p);
            if g == genus {
                out.insert((a, b));
            }
        }
    }
    out
}

fn params(p: i64, blowups: usize, a_min: i64, a_max: i64, genus: i64) -> SearchParams {
    SearchParams { p, blowups, a_min, a_max, genus }
}

#[test]
fn matches_exhaustive_enumeration() {
    for p in 2..=4 {
        for n in 0..=2 {
            for genus in 0..=2 {
                let r = search(params(p, n, 0, 12, genus)).unwrap();
                let got: BTreeSet<_> = r.solutions.iter().map(|s| (s.a, s.b.clone())).collect();
                assert_eq!(got, naive(p, n, 0, 12, genus), "p={p} n={n} g={genus}");
                assert_eq!(got.len(), r.solutions.len());
            }
        }
    }
}

#[test]
fn known_runs() {
    let r = search(params(3, 1, 0, 20, 0)).unwrap();
    assert_eq!(r.solution_classes(), [CurveClass::new(6, vec![4])]);
    let r = search(params(4, 1, 0, 20, 1)).unwrap();
    assert_eq!(r.solution_classes(), [CurveClass::new(10, vec![8])]);
    let r = search(params(6, 4, 0, 9, 0)).unwrap();
    assert_eq!(r.surviving_classes(), [CurveClass::new(9, vec![3, 3, 3, 3])]);
    let r = search(params(7, 5, 9, 16, 0)).unwrap();
    assert_eq!(r.surviving().count(), 0);
}

#[test]
fn resource_cap_is_enforced() {
    let needed = enumeration_size(8, 0, 200);
    match search_with_cap(params(6, 8, 0, 200, 0), 1000) {
        Err(SearchError::ResourceLimit { needed: n, cap }) => assert_eq!((n, cap), (needed, 1000)),
        other => panic!("{other:?}"),
    }
    assert!(search(params(1, 1, 0, 5, 0)).is_err());
    assert!(search(params(3, 1, 5, 4, 0)).is_err());
}

#[test]
fn triangular_differences_by_scan() {
    let tris: Vec<i64> = (0..2000).map(|j| j * (j + 1) / 2).collect();
    for g in 1..=60 {
        let TriangularDifference::Pairs(pairs) = triangular_difference(g) else { panic!("g={g}") };
        let expected: Vec<(i64, i64)> =
            tris.iter().filter(|&&m2| tris.contains(&(m2 + g))).map(|&m2| (m2 + g, m2)).collect();
        assert_eq!(pairs, expected, "g={g}");
    }
    assert_eq!(triangular_difference(0), TriangularDifference::SelfPairs);
}

fn class_strategy() -> impl Strategy<Value = (i64, CurveClass)> {
    (2i64..10, 0i64..40, prop::collection::vec(0i64..40, 0..7)).prop_map(|(p, a, b)| (p, CurveClass::new(a, b)))
}

proptest! {
    #[test]
    fn split_ranges_give_the_same_solutions(p in 2i64..6, n in 0usize..4, lo in 0i64..10, mid in 0i64..8, hi in 0i64..8, genus in 0i64..3) {
        let (m, h) = (lo + mid, lo + mid + hi + 1);
        let whole = search(params(p, n, lo, h, genus)).unwrap();
        let mut parts = search(params(p, n, lo, m, genus)).unwrap().solutions;
        parts.extend(search(params(p, n, m + 1, h, genus)).unwrap().solutions);
        prop_assert_eq!(whole.solutions, parts);
    }

    #[test]
    fn solutions_recheck(p in 2i64..7, n in 0usize..4, a_max in 0i64..16, genus in 0i64..3) {
        let r = search(params(p, n, 0, a_max, genus)).unwrap();
        for s in &r.solutions {
            let c = s.class();
            prop_assert_eq!(class_genus(&c, cusp_genus(p)), genus);
            prop_assert_eq!(s.self_int, c.a * c.a - c.b.iter().map(|b| b * b).sum::<i64>());
            let g = gromov_constraints(p, &c);
            prop_assert_eq!((g.lines, g.conics, ohta_ono_filter(p, &c)), (s.passes.lines, s.passes.conics, s.passes.ohta_ono));
        }
        let mut sorted = r.solutions.clone();
        sorted.sort_by_key(|s| s.class());
        prop_assert_eq!(sorted, r.solutions);
    }

    #[test]
    fn sentinel_bounds_dominate((p, c) in class_strategy()) {
        let d = gromov_constraints(p, &c).detail;
        prop_assert_eq!(d.len(), 6);
        if d[2].holds {
            prop_assert!(d[0].holds && d[1].holds);
        }
        if d[5].holds {
            prop_assert!(d[3].holds && d[4].holds);
        }
    }

    #[test]
    fn class_normalisation((_p, c) in class_strategy()) {
        prop_assert!(c.b.windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(c.chern(), 3 * c.a - c.b.iter().sum::<i64>());
        let prefix = format!("({};", c.a);
        prop_assert!(c.to_string().starts_with(&prefix));
    }
}
