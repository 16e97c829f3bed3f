//! Enumeration of curve classes `a h - Σ b_i e_i` in `CP² # N(-CP²)` for
//! rational cuspidal curves with one `T(p,p+1)` and one `T(2,3)` cusp.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::SearchError;

/// Default bound on the number of candidate classes a search may visit.
pub const DEFAULT_CAP: u128 = 200_000_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CurveClass {
    pub a: i64,
    /// Exceptional coefficients, non-increasing.
    pub b: Vec<i64>,
}

impl CurveClass {
    pub fn new(a: i64, mut b: Vec<i64>) -> Self {
        b.sort_unstable_by(|x, y| y.cmp(x));
        CurveClass { a, b }
    }

    pub fn self_intersection(&self) -> Result<i64, SearchError> {
        let mut s = self.a.checked_mul(self.a).ok_or(SearchError::Overflow)?;
        for &b in &self.b {
            s = s.checked_sub(b.checked_mul(b).ok_or(SearchError::Overflow)?).ok_or(SearchError::Overflow)?;
        }
        Ok(s)
    }

    /// `3a - Σ b_i`, the first Chern class evaluated on the class.
    pub fn chern(&self) -> i64 {
        3 * self.a - self.b.iter().sum::<i64>()
    }
}

impl std::fmt::Display for CurveClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({};", self.a)?;
        for (i, b) in self.b.iter().enumerate() {
            write!(f, "{}{b}", if i == 0 { "" } else { "," })?;
        }
        write!(f, ")")
    }
}

/// Genus of the `T(p,p+1)` and `T(2,3)` singular points together.
pub fn cusp_genus(p: i64) -> i64 {
    p * (p - 1) / 2 + 1
}

pub fn adjunction_rational(p: i64, c: &CurveClass) -> bool {
    c.self_intersection().is_ok_and(|s| s == p * p - p + c.chern())
}

pub fn class_genus(c: &CurveClass, sing_genus_sum: i64) -> i64 {
    let tri = |x: i64| x * (x - 1) / 2;
    (c.a - 1) * (c.a - 2) / 2 - c.b.iter().map(|&b| tri(b)).sum::<i64>() - sing_genus_sum
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GromovCheck {
    pub lines: bool,
    pub conics: bool,
    pub detail: Vec<Inequality>,
}

fn ineq(name: &str, lhs: i64, rhs: i64) -> Inequality {
    Inequality { name: name.to_string(), lhs, rhs, holds: lhs >= rhs }
}

fn padded(b: &[i64], len: usize) -> Vec<i64> {
    let mut v = b.to_vec();
    v.resize(v.len().max(len), 0);
    v
}

/// Line and conic positivity bounds. The sentinel form appends `p` and `2`
/// (the two cusps) to the coefficients and bounds the largest two and five.
pub fn gromov_constraints(p: i64, c: &CurveClass) -> GromovCheck {
    let a = c.a;
    let b = padded(&c.b, 5);
    let mut with_sentinels = c.b.clone();
    with_sentinels.extend([p, 2]);
    with_sentinels.sort_unstable_by(|x, y| y.cmp(x));
    let s = padded(&with_sentinels, 5);

    let line = [
        ineq("a >= b1 + p", a, b[0] + p),
        ineq("a >= b1 + b2", a, b[0] + b[1]),
        ineq("a >= two largest with sentinels", a, s[0] + s[1]),
    ];
    let conic = [
        ineq("2a >= b1 + b2 + b3 + b4 + p", 2 * a, b[..4].iter().sum::<i64>() + p),
        ineq("2a >= b1 + ... + b5", 2 * a, b[..5].iter().sum()),
        ineq("2a >= five largest with sentinels", 2 * a, s[..5].iter().sum()),
    ];
    GromovCheck {
        lines: line.iter().all(|i| i.holds),
        conics: conic.iter().all(|i| i.holds),
        detail: line.into_iter().chain(conic).collect(),
    }
}

/// True iff the class respects the self-intersection ceiling `p² + 9`.
pub fn ohta_ono_filter(p: i64, c: &CurveClass) -> bool {
    c.self_intersection().is_ok_and(|s| s <= p * p + 9)
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct Exclusion {
    pub p: i64,
    pub a: i64,
    pub b: Vec<i64>,
    pub source: String,
}

/// Classes ruled out by geometric arguments that are recorded, not computed.
pub fn exclusions() -> &'static [Exclusion] {
    static DATA: OnceLock<Vec<Exclusion>> = OnceLock::new();
    DATA.get_or_init(|| serde_json::from_str(include_str!("../data/exclusions.json")).expect("embedded exclusions parse"))
}

fn exclusion_for(p: i64, c: &CurveClass) -> Option<String> {
    exclusions().iter().find(|e| e.p == p && e.a == c.a && e.b == c.b).map(|e| e.source.clone())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchParams {
    pub p: i64,
    pub blowups: usize,
    pub a_min: i64,
    pub a_max: i64,
    pub genus: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Passes {
    pub lines: bool,
    pub conics: bool,
    pub ohta_ono: bool,
}

impl Passes {
    pub fn all(&self) -> bool {
        self.lines && self.conics && self.ohta_ono
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub a: i64,
    pub b: Vec<i64>,
    pub self_int: i64,
    pub passes: Passes,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exclusion: Option<String>,
    #[serde(skip)]
    pub detail: Vec<Inequality>,
}

impl Solution {
    pub fn class(&self) -> CurveClass {
        CurveClass { a: self.a, b: self.b.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub params: SearchParams,
    pub solutions: Vec<Solution>,
}

impl SearchReport {
    /// Solutions passing every arithmetic constraint.
    pub fn surviving(&self) -> impl Iterator<Item = &Solution> {
        self.solutions.iter().filter(|s| s.passes.all())
    }

    pub fn surviving_classes(&self) -> Vec<CurveClass> {
        self.surviving().map(Solution::class).collect()
    }

    pub fn solution_classes(&self) -> Vec<CurveClass> {
        self.solutions.iter().map(Solution::class).collect()
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Number of non-increasing `b` of length `n` with entries in `0..=a`,
/// summed over the range.
pub fn enumeration_size(n: usize, a_min: i64, a_max: i64) -> u128 {
    (a_min.max(0)..=a_max).map(|a| binomial(a as u128 + n as u128, n as u128)).fold(0u128, u128::saturating_add)
}

pub fn search(params: SearchParams) -> Result<SearchReport, SearchError> {
    search_with_cap(params, DEFAULT_CAP)
}

pub fn search_with_cap(params: SearchParams, cap: u128) -> Result<SearchReport, SearchError> {
    let SearchParams { p, blowups, a_min, a_max, genus } = params;
    if p < 2 {
        return Err(SearchError::BadParameters(format!("p must be at least 2, got {p}")));
    }
    if genus < 0 {
        return Err(SearchError::BadParameters(format!("negative genus {genus}")));
    }
    if a_min > a_max {
        return Err(SearchError::BadParameters(format!("empty range {a_min}..={a_max}")));
    }
    if a_max.checked_mul(a_max).is_none() || a_max > 3_000_000_000 {
        return Err(SearchError::Overflow);
    }
    let needed = enumeration_size(blowups, a_min, a_max);
    if needed > cap {
        return Err(SearchError::ResourceLimit { needed, cap });
    }

    let per_a: Vec<Vec<CurveClass>> =
        (a_min.max(0)..=a_max).into_par_iter().map(|a| classes_at(p, blowups, a, genus)).collect();
    let mut classes: Vec<CurveClass> = per_a.into_iter().flatten().collect();
    classes.sort();

    let solutions = classes
        .into_iter()
        .map(|c| {
            let g = gromov_constraints(p, &c);
            let self_int = c.self_intersection()?;
            Ok(Solution {
                passes: Passes { lines: g.lines, conics: g.conics, ohta_ono: ohta_ono_filter(p, &c) },
                exclusion: exclusion_for(p, &c),
                self_int,
                detail: g.detail,
                a: c.a,
                b: c.b,
            })
        })
        .collect::<Result<_, SearchError>>()?;
    Ok(SearchReport { params, solutions })
}

/// All non-increasing `b` with `b_1 <= a` and `Σ b_i(b_i - 1)` equal to the
/// value adjunction demands.
fn classes_at(p: i64, n: usize, a: i64, genus: i64) -> Vec<CurveClass> {
    let target = a * a - 3 * a + 2 - 2 * cusp_genus(p) - 2 * genus;
    let mut out = Vec::new();
    if target < 0 {
        return out;
    }
    let mut b = Vec::with_capacity(n);
    fill(a, n, target, &mut b, &mut |b| out.push(CurveClass { a, b: b.to_vec() }));
    out
}

fn fill(max: i64, slots: usize, remaining: i64, b: &mut Vec<i64>, emit: &mut impl FnMut(&[i64])) {
    if slots == 0 {
        if remaining == 0 {
            emit(b);
        }
        return;
    }
    for v in (0..=max).rev() {
        let w = v * (v - 1);
        if w > remaining {
            continue;
        }
        if w * (slots as i64) < remaining {
            break;
        }
        b.push(v);
        fill(v, slots - 1, remaining - w, b, emit);
        b.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum TriangularDifference {
    /// `g = 0`: every pair `(m, m)`.
    SelfPairs,
    Pairs(Vec<(i64, i64)>),
}

/// Pairs of triangular numbers `m1 - m2 = g`. Consecutive triangular numbers
/// `j(j+1)/2` differ by `j + 1`, so `m2` has index below `g`.
pub fn triangular_difference(g: i64) -> TriangularDifference {
    if g <= 0 {
        return TriangularDifference::SelfPairs;
    }
    let tri = |j: i64| j * (j + 1) / 2;
    let pairs = (0..g)
        .map(tri)
        .filter(|&m2| crate::hat::is_triangular(m2 + g))
        .map(|m2| (m2 + g, m2))
        .collect();
    TriangularDifference::Pairs(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(a: i64, b: &[i64]) -> CurveClass {
        CurveClass::new(a, b.to_vec())
    }

    #[test]
    fn adjunction_examples() {
        assert!(adjunction_rational(6, &class(9, &[3, 3, 3, 3])));
        assert!(!adjunction_rational(2, &class(0, &[])));
        assert!(!adjunction_rational(4, &class(10, &[8])));
        assert!(adjunction_rational(3, &class(6, &[4])));
    }

    #[test]
    fn genus_examples() {
        assert_eq!(class_genus(&class(6, &[4]), 4), 0);
        assert_eq!(class_genus(&class(1, &[]), 0), 0);
        assert_eq!(class_genus(&class(10, &[8]), 7), 1);
        assert_eq!(cusp_genus(3), 4);
        assert_eq!(cusp_genus(4), 7);
    }

    #[test]
    fn line_bounds() {
        let g = gromov_constraints(4, &class(10, &[8]));
        assert!(!g.lines);
        assert!(!g.detail[0].holds);
        assert_eq!((g.detail[0].lhs, g.detail[0].rhs), (10, 12));
        assert!(!gromov_constraints(3, &class(6, &[4])).lines);
        let bare = gromov_constraints(5, &class(7, &[0, 0]));
        assert!(bare.lines && bare.conics);
        assert!(!gromov_constraints(5, &class(6, &[])).lines);
    }

    #[test]
    fn self_intersection_ceiling() {
        assert!(!ohta_ono_filter(3, &class(6, &[4])));
        assert!(ohta_ono_filter(6, &class(9, &[3, 3, 3, 3])));
        assert!(ohta_ono_filter(2, &class(0, &[])));
    }

    #[test]
    fn differences() {
        assert_eq!(triangular_difference(4), TriangularDifference::Pairs(vec![(10, 6)]));
        assert_eq!(triangular_difference(8), TriangularDifference::Pairs(vec![(36, 28)]));
        assert_eq!(triangular_difference(0), TriangularDifference::SelfPairs);
        assert_eq!(triangular_difference(3), TriangularDifference::Pairs(vec![(3, 0), (6, 3)]));
    }

    #[test]
    fn small_searches() {
        let r = search(SearchParams { p: 3, blowups: 1, a_min: 0, a_max: 20, genus: 0 }).unwrap();
        assert_eq!(r.solution_classes(), vec![class(6, &[4])]);
        assert_eq!(r.solutions[0].self_int, 20);
        let r = search(SearchParams { p: 4, blowups: 1, a_min: 0, a_max: 20, genus: 1 }).unwrap();
        assert_eq!(r.solution_classes(), vec![class(10, &[8])]);
    }

    #[test]
    fn cap_is_enforced() {
        let params = SearchParams { p: 7, blowups: 5, a_min: 9, a_max: 16, genus: 0 };
        assert!(matches!(search_with_cap(params, 10), Err(SearchError::ResourceLimit { .. })));
    }

    #[test]
    fn k6_exclusion_is_attached() {
        let r = search(SearchParams { p: 6, blowups: 4, a_min: 0, a_max: 9, genus: 0 }).unwrap();
        let s: Vec<_> = r.surviving().collect();
        assert_eq!(s.len(), 1);
        assert!(s[0].exclusion.is_some());
    }
}
