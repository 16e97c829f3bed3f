//! Cyclic branched covers of `CP²` and `CP¹×CP¹`, and the Betti and signature
//! books of a K3 surface split into a filling and a cap.

use serde::Serialize;

use crate::error::CoverError;
use crate::hat::plane_curve_genus;

pub const K3_B2: i64 = 22;
pub const K3_SIGNATURE: i64 = -16;
pub const K3_EULER: i64 = 24;

pub fn branched_cover_euler(r: i64, chi_base: i64, chi_branch: i64) -> Result<i64, CoverError> {
    if r < 1 {
        return Err(CoverError::BadOrder(r));
    }
    Ok(r * chi_base - (r - 1) * chi_branch)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// Plane curve of the given degree in `CP²`.
    Cp2(i64),
    /// Curve of bidegree `(a, b)` in `CP¹×CP¹`.
    P1xP1(i64, i64),
}

impl Branch {
    pub fn base_euler(self) -> i64 {
        match self {
            Branch::Cp2(_) => 3,
            Branch::P1xP1(..) => 4,
        }
    }

    pub fn genus(self) -> i64 {
        match self {
            Branch::Cp2(d) => plane_curve_genus(d).unwrap_or(0),
            Branch::P1xP1(a, b) => (a - 1) * (b - 1),
        }
    }

    pub fn euler(self) -> i64 {
        2 - 2 * self.genus()
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Branch::Cp2(d) => write!(f, "CP2 degree {d}"),
            Branch::P1xP1(a, b) => write!(f, "P1xP1 bidegree ({a},{b})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CyCoverCheck {
    pub r: i64,
    pub branch: Branch,
    pub canonical_trivial: bool,
    pub euler: i64,
}

impl CyCoverCheck {
    pub fn passes(&self) -> bool {
        self.canonical_trivial && self.euler == K3_EULER
    }
}

/// The `r`-fold cyclic cover has trivial canonical class iff
/// `K_base + (r-1)/r · B = 0`.
pub fn cy_cover_test(r: i64, branch: Branch) -> Result<CyCoverCheck, CoverError> {
    if r < 2 {
        return Err(CoverError::BadOrder(r));
    }
    let canonical_trivial = match branch {
        Branch::Cp2(d) => {
            if d < 1 || d % r != 0 {
                return Err(CoverError::NotDivisible { r, degree: d });
            }
            (r - 1) * d == 3 * r
        }
        Branch::P1xP1(a, b) => {
            for k in [a, b] {
                if k < 0 || k % r != 0 {
                    return Err(CoverError::NotDivisible { r, degree: k });
                }
            }
            (r - 1) * a == 2 * r && (r - 1) * b == 2 * r
        }
    };
    let euler = branched_cover_euler(r, branch.base_euler(), branch.euler())?;
    Ok(CyCoverCheck { r, branch, canonical_trivial, euler })
}

/// The four K3 presentations as cyclic branched covers.
pub fn k3_presentations() -> [(i64, Branch); 4] {
    [(2, Branch::Cp2(6)), (4, Branch::Cp2(4)), (2, Branch::P1xP1(4, 4)), (3, Branch::P1xP1(3, 3))]
}

/// Name of the unimodular form of this rank and signature, when it is pinned
/// down by the cases in use. `Ok(None)` means several forms fit.
pub fn unimodular_form(rank: i64, signature: i64, even: bool) -> Result<Option<String>, CoverError> {
    let impossible = rank < 0 || signature.abs() > rank || (rank - signature) % 2 != 0 || (even && signature % 8 != 0);
    if impossible {
        return Err(CoverError::NoUnimodularForm { rank, signature });
    }
    let label = match (even, rank, signature) {
        (true, 12, -8) => Some("E8+2H".to_string()),
        (true, 10, -8) => Some("E8+H".to_string()),
        (true, 8, -8) => Some("E8".to_string()),
        (true, 4, 0) => Some("2H".to_string()),
        (true, 2, 0) => Some("H".to_string()),
        (false, k, s) if s == -k && (1..8).contains(&k) => Some(format!("<-1>^{k}")),
        _ => None,
    };
    Ok(label)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverBooks {
    pub r: i64,
    pub b2_filling: i64,
    pub b2_cap: i64,
    pub sigma_filling: Option<i64>,
    pub sigma_cap: Option<i64>,
    /// `"undetermined"` when rank and signature do not single out a form.
    pub form_label: String,
}

/// Splits the K3 books between the `r`-fold cover of `B⁴` branched over a
/// genus-`g_s` surface and its complement. The cover of a knot with
/// homology-sphere branched cover is unimodular, and being inside a spin
/// manifold its form is even.
pub fn cyclic_cover_books(r: i64, g_s: i64, sigma_filling: Option<i64>) -> Result<CoverBooks, CoverError> {
    if r < 2 {
        return Err(CoverError::BadOrder(r));
    }
    let b2_filling = (r - 1) * 2 * g_s;
    let b2_cap = K3_B2 - b2_filling;
    let sigma_cap = sigma_filling.map(|s| K3_SIGNATURE - s);
    if let Some(s) = sigma_filling {
        unimodular_form(b2_filling, s, true)?;
    }
    let form_label = match sigma_cap {
        Some(s) => unimodular_form(b2_cap, s, true)?,
        None if b2_cap < 0 => return Err(CoverError::NoUnimodularForm { rank: b2_cap, signature: 0 }),
        None => None,
    };
    Ok(CoverBooks {
        r,
        b2_filling,
        b2_cap,
        sigma_filling,
        sigma_cap,
        form_label: form_label.unwrap_or_else(|| "undetermined".to_string()),
    })
}

/// `(b2 filling, b2 cap, sigma cap, form)` for the double cover.
pub fn double_cover_books(g_s: i64, sigma_filling: i64) -> Result<(i64, i64, i64, String), CoverError> {
    let b = cyclic_cover_books(2, g_s, Some(sigma_filling))?;
    Ok((b.b2_filling, b.b2_cap, K3_SIGNATURE - sigma_filling, b.form_label))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_characteristics() {
        assert_eq!(branched_cover_euler(2, 3, -18), Ok(24));
        assert_eq!(branched_cover_euler(1, 3, -18), Ok(3));
        assert_eq!(branched_cover_euler(3, 4, -6), Ok(24));
        assert!(branched_cover_euler(0, 3, 0).is_err());
    }

    #[test]
    fn k3_covers() {
        for (r, branch) in k3_presentations() {
            let c = cy_cover_test(r, branch).unwrap();
            assert!(c.passes(), "{r} {branch}");
        }
        let quartic = cy_cover_test(2, Branch::Cp2(4)).unwrap();
        assert!(!quartic.canonical_trivial);
        assert_eq!(cy_cover_test(3, Branch::Cp2(4)), Err(CoverError::NotDivisible { r: 3, degree: 4 }));
    }

    #[test]
    fn books() {
        assert_eq!(double_cover_books(5, -8), Ok((10, 12, -8, "E8+2H".to_string())));
        assert_eq!(double_cover_books(0, 0), Ok((0, 22, -16, "undetermined".to_string())));
        assert_eq!(double_cover_books(6, -8), Ok((12, 10, -8, "E8+H".to_string())));
        assert!(double_cover_books(5, -3).is_err());
        assert!(double_cover_books(12, 0).is_err());
    }

    #[test]
    fn form_table() {
        assert_eq!(unimodular_form(8, -8, true), Ok(Some("E8".to_string())));
        assert_eq!(unimodular_form(3, -3, false), Ok(Some("<-1>^3".to_string())));
        assert_eq!(unimodular_form(16, -16, true), Ok(None));
        assert!(unimodular_form(4, -4, true).is_err());
        assert!(unimodular_form(3, -2, false).is_err());
    }

    #[test]
    fn higher_order_books() {
        let b = cyclic_cover_books(3, 2, None).unwrap();
        assert_eq!((b.b2_filling, b.b2_cap), (8, 14));
        assert_eq!(b.form_label, "undetermined");
    }
}
