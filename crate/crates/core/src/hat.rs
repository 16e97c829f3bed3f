//! Bounds on the genus and degree of projective hats.
//!
//! A degree-`d` hat of genus `g` for a transverse knot with self-linking `slk`
//! satisfies `g = (d-1)(d-2)/2 - (slk+1)/2`, so genus and degree determine each
//! other. Everything here is exact integer arithmetic.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::BoundsError;

fn check_knot_slk(slk: i64) -> Result<(), BoundsError> {
    if slk.rem_euclid(2) != 1 {
        return Err(BoundsError::EvenSelfLinking(slk));
    }
    Ok(())
}

/// `(d-1)(d-2)/2`, the genus of a smooth plane curve of degree `d`.
pub fn plane_curve_genus(d: i64) -> Result<i64, BoundsError> {
    if d < 1 {
        return Err(BoundsError::NonPositiveDegree(d));
    }
    Ok((d - 1) * (d - 2) / 2)
}

/// Genus of the torus knot `T(p,q)`.
pub fn milnor_genus(p: i64, q: i64) -> Result<i64, BoundsError> {
    if p < 1 || q < 1 {
        return Err(BoundsError::BadTorusParameters { p, q });
    }
    if gcd(p, q) != 1 {
        return Err(BoundsError::NotCoprime { p, q });
    }
    Ok((p - 1) * (q - 1) / 2)
}

/// Smooth genus left for a degree-`d` curve whose singular points absorb
/// `sing_genera`.
pub fn singular_genus_budget(d: i64, sing_genera: &[i64]) -> Result<i64, BoundsError> {
    let budget = plane_curve_genus(d)?;
    let needed: i64 = sing_genera.iter().sum();
    if needed > budget {
        return Err(BoundsError::BudgetExceeded { degree: d, budget, needed });
    }
    Ok(budget - needed)
}

/// Genus of the quasipositive surface bounded by a knot of self-linking `slk`.
pub fn slice_genus_qp(slk: i64) -> Result<i64, BoundsError> {
    check_knot_slk(slk)?;
    if slk < -1 {
        return Err(BoundsError::SelfLinkingTooSmall(slk));
    }
    Ok((slk + 1) / 2)
}

pub fn hat_genus_at_degree(slk: i64, d: i64) -> Result<i64, BoundsError> {
    check_knot_slk(slk)?;
    let g = plane_curve_genus(d)? - (slk + 1) / 2;
    if g < 0 {
        return Err(BoundsError::DegreeInfeasible { slk, degree: d });
    }
    Ok(g)
}

/// Inverse of [`hat_genus_at_degree`] in the self-linking number.
pub fn slk_for_hat(d: i64, genus: i64) -> i64 {
    d * d - 3 * d + 1 - 2 * genus
}

/// Least `d >= 1` with `(d-1)(d-2)/2 >= t`.
pub fn least_degree_for_triangular(t: i64) -> i64 {
    if t <= 0 {
        return 1;
    }
    // (d-1)(d-2) = 2t has root d = (3 + sqrt(1 + 8t)) / 2
    let root = (1 + 8 * t as u64).isqrt() as i64;
    let mut d = (3 + root) / 2;
    while (d - 1) * (d - 2) / 2 < t {
        d += 1;
    }
    while d > 1 && (d - 2) * (d - 3) / 2 >= t {
        d -= 1;
    }
    d
}

/// Smallest degree at which a hat can exist.
pub fn min_hat_degree(slk: i64) -> Result<i64, BoundsError> {
    check_knot_slk(slk)?;
    Ok(least_degree_for_triangular((slk + 1) / 2))
}

/// The degree forced by a hat of the given genus, if one is consistent.
pub fn degree_for_genus(slk: i64, genus: i64) -> Result<Option<i64>, BoundsError> {
    check_knot_slk(slk)?;
    let t = genus + (slk + 1) / 2;
    if t < 0 {
        return Ok(None);
    }
    let d = least_degree_for_triangular(t);
    Ok(((d - 1) * (d - 2) / 2 == t).then_some(d))
}

pub fn is_triangular(m: i64) -> bool {
    m >= 0 && {
        let d = least_degree_for_triangular(m);
        (d - 1) * (d - 2) / 2 == m
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TriangularBound {
    /// Least triangular number `(d-2)(d-1)/2 >= g_s`.
    pub m: i64,
    pub degree: i64,
    pub genus_lb: i64,
}

pub fn triangular_lb(slice_genus: i64) -> Result<TriangularBound, BoundsError> {
    if slice_genus < 0 {
        return Err(BoundsError::NegativeGenus(slice_genus));
    }
    let degree = least_degree_for_triangular(slice_genus);
    let m = (degree - 1) * (degree - 2) / 2;
    Ok(TriangularBound { m, degree, genus_lb: m - slice_genus })
}

/// Hat genus of a knot joined to the maximal unknot by positive crossing
/// changes, e.g. any negative braid closure. The hat degree is 1.
pub fn negbraid_hat_genus(slk: i64) -> Result<i64, BoundsError> {
    check_knot_slk(slk)?;
    if slk > -1 {
        return Err(BoundsError::NotNegative(slk));
    }
    Ok(-(slk + 1) / 2)
}

/// Maximal self-linking number of `T(p,-q)`, `2 <= p < q`.
pub fn negative_torus_max_slk(p: i64, q: i64) -> Result<i64, BoundsError> {
    if !(2 <= p && p < q) {
        return Err(BoundsError::BadTorusParameters { p, q });
    }
    if gcd(p, q) != 1 {
        return Err(BoundsError::NotCoprime { p, q });
    }
    Ok(-p * q + q - p)
}

/// Hat genus of the maximal self-linking twist knot `T_n`; `None` where it is
/// unknown (even `n < 0`).
pub fn twist_knot_hat_genus(n: i64) -> Option<i64> {
    match n {
        n if n <= -3 && n % 2 != 0 => Some(1),
        n if n >= 1 && n % 2 != 0 => Some((n + 3) / 2),
        n if n >= 2 && n % 2 == 0 => Some(n / 2),
        _ => None,
    }
}

/// Upper bound on the hat genus of the `k`-fold stabilization.
pub fn stabilized_upper(hat_genus: i64, k: i64) -> i64 {
    hat_genus + k
}

/// Lower bound on the hat genus of the `k`-fold stabilization of a
/// quasipositive knot.
pub fn stabilized_lower_qp(slice_genus: i64, k: i64) -> i64 {
    (k - slice_genus).max(0)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Third element of the numerical semigroup `<p,q>` counting 0 as the first.
pub fn semigroup_lb(p: i64, q: i64) -> Result<i64, BoundsError> {
    if !(2 <= p && p < q) {
        return Err(BoundsError::BadTorusParameters { p, q });
    }
    if gcd(p, q) != 1 {
        return Err(BoundsError::NotCoprime { p, q });
    }
    Ok((2 * p).min(q))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub knot: String,
    pub slk: i64,
    pub degree: i64,
    pub genus: i64,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBoundFact {
    pub knot: String,
    pub slk: i64,
    pub genus: i64,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDb {
    pub witnesses: Vec<Witness>,
    pub lower_bounds: Vec<LowerBoundFact>,
}

impl WitnessDb {
    pub fn builtin() -> &'static WitnessDb {
        static DB: OnceLock<WitnessDb> = OnceLock::new();
        DB.get_or_init(|| {
            serde_json::from_str(include_str!("../data/witnesses.json")).expect("embedded witness data parses")
        })
    }

    pub fn witnesses_for<'a>(&'a self, knot: &str) -> impl Iterator<Item = &'a Witness> + 'a {
        let knot = knot.to_string();
        self.witnesses.iter().filter(move |w| w.knot == knot)
    }

    pub fn best_witness(&self, knot: &str) -> Option<&Witness> {
        self.witnesses_for(knot).min_by_key(|w| (w.genus, w.degree))
    }

    pub fn lower_bound_for(&self, knot: &str) -> Option<&LowerBoundFact> {
        self.lower_bounds.iter().filter(|f| f.knot == knot).max_by_key(|f| f.genus)
    }

    /// Every witness must sit on the genus/degree relation for its slk.
    pub fn check(&self) -> Result<(), String> {
        for w in &self.witnesses {
            match hat_genus_at_degree(w.slk, w.degree) {
                Ok(g) if g == w.genus => {}
                Ok(g) => return Err(format!("{}: degree {} forces genus {g}, not {}", w.knot, w.degree, w.genus)),
                Err(e) => return Err(format!("{}: {e}", w.knot)),
            }
        }
        for f in &self.lower_bounds {
            if let Some(w) = self.witnesses_for(&f.knot).find(|w| w.genus < f.genus) {
                return Err(format!("{}: witness genus {} beats lower bound {}", f.knot, w.genus, f.genus));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HatBoundReport {
    pub slk: i64,
    pub slice_genus: i64,
    pub degree_lb: i64,
    pub genus_lb: i64,
    pub genus_by_degree: BTreeMap<i64, i64>,
    pub witnesses: Vec<(i64, i64, String)>,
}

/// Bounds from `slk`, the slice genus (defaults to the quasipositive value)
/// and any database witnesses for `knot`. `genus_by_degree` lists the first
/// `span` feasible degrees.
pub fn hat_bounds(
    slk: i64,
    slice_genus: Option<i64>,
    knot: Option<&str>,
    span: i64,
) -> Result<HatBoundReport, BoundsError> {
    let slice_genus = match slice_genus {
        Some(g) => g,
        None => slice_genus_qp(slk)?,
    };
    let by_slk = min_hat_degree(slk)?;
    let tri = triangular_lb(slice_genus)?;
    let mut degree_lb = by_slk.max(tri.degree);
    let mut genus_lb = hat_genus_at_degree(slk, degree_lb)?.max(tri.genus_lb);

    let db = WitnessDb::builtin();
    let mut witnesses = Vec::new();
    if let Some(name) = knot {
        if let Some(f) = db.lower_bound_for(name) {
            if f.slk == slk && f.genus > genus_lb {
                genus_lb = f.genus;
                degree_lb = degree_lb.max(degree_for_genus(slk, f.genus)?.unwrap_or(degree_lb));
            }
        }
        witnesses = db
            .witnesses_for(name)
            .filter(|w| w.slk == slk)
            .map(|w| (w.degree, w.genus, w.source.clone()))
            .collect();
    }

    let genus_by_degree = (degree_lb..degree_lb + span.max(1))
        .map(|d| hat_genus_at_degree(slk, d).map(|g| (d, g)))
        .collect::<Result<_, _>>()?;
    Ok(HatBoundReport { slk, slice_genus, degree_lb, genus_lb, genus_by_degree, witnesses })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct T2Row {
    pub k: i64,
    pub knot: String,
    pub lower_bound: i64,
    pub witness_genus: Option<i64>,
    pub witness_degree: Option<i64>,
}

impl T2Row {
    /// The hat genus when the bounds meet.
    pub fn exact(&self) -> Option<i64> {
        self.witness_genus.filter(|&g| g == self.lower_bound)
    }
}

/// Hat genus bounds for `T(2, 2k+1)`, `k = 1..=k_max`.
pub fn t2_table(k_max: i64) -> Vec<T2Row> {
    let db = WitnessDb::builtin();
    (1..=k_max)
        .map(|k| {
            let knot = format!("T(2,{})", 2 * k + 1);
            let mut lower_bound = triangular_lb(k).map(|b| b.genus_lb).unwrap_or(0);
            if let Some(f) = db.lower_bound_for(&knot) {
                lower_bound = lower_bound.max(f.genus);
            }
            let best = db.best_witness(&knot);
            T2Row {
                k,
                lower_bound,
                witness_genus: best.map(|w| w.genus),
                witness_degree: best.map(|w| w.degree),
                knot,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn self_linking_to_slice_genus() {
        assert_eq!(slice_genus_qp(9), Ok(5));
        assert_eq!(slice_genus_qp(-1), Ok(0));
        assert_eq!(slice_genus_qp(19), Ok(milnor_genus(3, 11).unwrap()));
        assert_eq!(slice_genus_qp(4), Err(BoundsError::EvenSelfLinking(4)));
        assert_eq!(slice_genus_qp(-3), Err(BoundsError::SelfLinkingTooSmall(-3)));
    }

    #[test]
    fn genus_at_degree() {
        assert_eq!(hat_genus_at_degree(19, 6), Ok(0));
        assert_eq!(hat_genus_at_degree(-1, 1), Ok(0));
        assert_eq!(hat_genus_at_degree(5, 7), Ok(12));
        assert!(matches!(hat_genus_at_degree(19, 5), Err(BoundsError::DegreeInfeasible { .. })));
        assert_eq!(hat_genus_at_degree(1, 0), Err(BoundsError::NonPositiveDegree(0)));
    }

    #[test]
    fn degrees() {
        assert_eq!(min_hat_degree(19), Ok(6));
        assert_eq!(min_hat_degree(-1), Ok(1));
        assert_eq!(min_hat_degree(1), Ok(3));
        assert_eq!(degree_for_genus(19, 5), Ok(Some(7)));
        assert_eq!(degree_for_genus(19, 2), Ok(None));
    }

    #[test]
    fn triangular() {
        assert_eq!(triangular_lb(4), Ok(TriangularBound { m: 6, degree: 5, genus_lb: 2 }));
        assert_eq!(triangular_lb(0), Ok(TriangularBound { m: 0, degree: 1, genus_lb: 0 }));
        assert_eq!(triangular_lb(10).unwrap().genus_lb, 0);
        assert!(is_triangular(10) && !is_triangular(11));
    }

    #[test]
    fn negative_braids() {
        assert_eq!(negbraid_hat_genus(-1), Ok(0));
        assert_eq!(negbraid_hat_genus(-5), Ok(2));
        assert_eq!(negbraid_hat_genus(1), Err(BoundsError::NotNegative(1)));
        let slk = negative_torus_max_slk(2, 3).unwrap();
        assert_eq!(slk, -5);
        assert_eq!(negbraid_hat_genus(slk), Ok(2));
    }

    #[test]
    fn twist_knots() {
        assert_eq!(twist_knot_hat_genus(-3), Some(1));
        assert_eq!(twist_knot_hat_genus(1), Some(2));
        assert_eq!(twist_knot_hat_genus(2), Some(1));
        assert_eq!(twist_knot_hat_genus(-4), None);
    }

    #[test]
    fn curve_genera() {
        assert_eq!(milnor_genus(3, 7), Ok(6));
        assert_eq!(milnor_genus(2, 21), Ok(10));
        assert_eq!(plane_curve_genus(6), Ok(10));
        assert_eq!(singular_genus_budget(5, &[milnor_genus(3, 5).unwrap()]), Ok(2));
        assert_eq!(singular_genus_budget(5, &[4, 2]), Ok(0));
        assert!(singular_genus_budget(4, &[4]).is_err());
    }

    #[test]
    fn semigroup_third_element() {
        assert_eq!(semigroup_lb(2, 3), Ok(3));
        assert_eq!(semigroup_lb(3, 11), Ok(6));
        assert_eq!(semigroup_lb(5, 9), Ok(9));
        assert!(semigroup_lb(4, 6).is_err());
    }

    #[test]
    fn stabilization() {
        assert_eq!(stabilized_upper(0, 3), 3);
        assert_eq!(stabilized_lower_qp(0, 3), 3);
        assert_eq!(stabilized_lower_qp(5, 3), 0);
    }

    #[test]
    fn witness_data_is_consistent() {
        WitnessDb::builtin().check().unwrap();
    }

    #[test]
    fn report_for_t2_21() {
        let r = hat_bounds(19, Some(10), Some("T(2,21)"), 3).unwrap();
        assert_eq!((r.degree_lb, r.genus_lb), (7, 5));
        assert_eq!(r.genus_by_degree.get(&7), Some(&5));
        assert!(r.witnesses.iter().all(|w| w.1 >= r.genus_lb));
        let r = hat_bounds(19, None, None, 2).unwrap();
        assert_eq!((r.degree_lb, r.genus_lb), (6, 0));
    }

    #[test]
    fn t2_row() {
        let row: Vec<_> = t2_table(11).iter().map(|r| r.exact()).collect();
        let expected = [0, 1, 0, 2, 1, 0, 3, 2, 1, 5, 4].map(Some);
        assert_eq!(row, expected);
    }
}
