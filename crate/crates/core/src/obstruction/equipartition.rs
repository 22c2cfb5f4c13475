//! Evaluation of the primary obstruction for equipartitions of `j` measures
//! in `R^d` by two hyperplanes, on the line `2d - 3j = 1`.
//!
//! There the obstruction lives in `H^{2d-1}` of the top fragment of
//! `S^d x S^d` with coefficients in `Z_chi`, where `chi` is trivial on
//! `alpha, beta` and nontrivial on `gamma`. That group is `Z/4` for even `d`
//! (generated by the cocycle `(1, -1)`) and `Z/2 + Z/2` for odd `d`. For
//! `(d, j) = (6k + 2, 4k + 1)` the obstruction is `2 C(2k-1, k-1)` times the
//! generator, which is nonzero exactly when `k` is a power of two.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::ObstructionError;
use crate::chain_complexes::build_sphere_product_fragment;
use crate::cohomology::{cohomology_at, CohomologyClass};
use crate::group_algebra::{Character, GroupTable};
use crate::polynomial_degrees::{binomial, degree_monic_multiplication, degree_sphere_multiplication};
use crate::serde_int::JsonInt;

/// Largest `k` for which `C(2k-1, k-1)` is expanded exactly. Beyond it only
/// the residue is computed, by Lucas' and Kummer's theorems.
pub const EXACT_BINOMIAL_LIMIT: u64 = 1 << 16;

/// The coefficient character of `H_{2d-2}(S(W^j))` on `D8`.
pub fn coefficient_character(g: &GroupTable) -> Character {
    Character::from_signs(g, &[("alpha", 1), ("beta", 1), ("gamma", -1)]).expect("D8 generators")
}

fn require_positive(k: u64) -> Result<(), ObstructionError> {
    if k == 0 {
        return Err(ObstructionError::Invalid("k must be at least 1".into()));
    }
    Ok(())
}

/// Whether `C(2k-1, k-1)` is odd.
///
/// For `k` up to [`EXACT_BINOMIAL_LIMIT`] the binomial is expanded and
/// reduced mod 2; otherwise the number of carries when adding `k-1` and `k`
/// in base 2 is counted (Kummer). The result is compared with the
/// power-of-two test.
pub fn binomial_parity(k: u64) -> Result<bool, ObstructionError> {
    require_positive(k)?;
    let by_value = if k <= EXACT_BINOMIAL_LIMIT {
        binomial(2 * k - 1, k - 1).is_odd()
    } else {
        let carries = (k - 1).count_ones() + k.count_ones() - (2 * k - 1).count_ones();
        carries == 0
    };
    let by_shape = k.is_power_of_two();
    assert_eq!(by_value, by_shape, "parity of C(2k-1, k-1) disagrees with the power-of-two test at k = {k}");
    Ok(by_value)
}

/// Consistency of `θ` with the degree of monic polynomial multiplication.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCrossCheck {
    /// `deg(μ⁰_{2k,2k}) = C(2k, k)` by enumeration.
    pub monic_degree: i64,
    pub monic_degree_mod4: u8,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaReport {
    pub k: u64,
    pub d: u64,
    pub j: u64,
    /// `C(2k-1, k-1)`, omitted above [`EXACT_BINOMIAL_LIMIT`].
    pub binomial: Option<JsonInt>,
    pub theta_mod4: u8,
    pub cohomology_degree: i64,
    pub class: CohomologyClass,
    pub cross_check: Option<DegreeCrossCheck>,
    pub provenance: BTreeMap<String, String>,
}

/// `θ = 2 C(2k-1, k-1) mod 4` for `(d, j) = (6k + 2, 4k + 1)`, as a class in
/// `H^{2d-1}(C; Z_chi) = Z/4`.
///
/// With `cross_check` the residue is compared with `C(2k, k) mod 4`
/// obtained by enumerating factorizations; that costs `C(2k, k)` resultants.
pub fn theta_equipartition(k: u64, cross_check: bool) -> Result<ThetaReport, ObstructionError> {
    require_positive(k)?;
    let d = 6 * k + 2;
    let j = 4 * k + 1;
    let exact = (k <= EXACT_BINOMIAL_LIMIT).then(|| binomial(2 * k - 1, k - 1));
    let odd = binomial_parity(k)?;
    let theta_mod4: u8 = if odd { 2 } else { 0 };
    if let Some(b) = &exact {
        let direct = (BigInt::from(2) * b).mod_floor(&BigInt::from(4));
        assert_eq!(direct, BigInt::from(theta_mod4));
    }

    let n = i64::try_from(d).map_err(|_| ObstructionError::Invalid(format!("k = {k} is too large")))?;
    let fragment = build_sphere_product_fragment(n)?;
    let chi = coefficient_character(fragment.group());
    let group = cohomology_at(&fragment, &chi, 2 * n - 1)?;
    if group.invariant_factors() != vec![BigInt::from(4)] || group.free_rank != 0 {
        return Err(ObstructionError::Invalid(format!(
            "expected Z/4 in degree {}, found {:?}",
            2 * n - 1,
            group.invariant_factors()
        )));
    }
    let representative = group.representative(&[BigInt::from(theta_mod4)]);
    let class = group.reduce_class(&representative)?;

    let cross_check = if cross_check {
        let m = usize::try_from(2 * k).map_err(|_| ObstructionError::Invalid("k too large".into()))?;
        let monic = degree_monic_multiplication(m, m)?;
        let residue = monic.degree.rem_euclid(4) as u8;
        Some(DegreeCrossCheck { monic_degree: monic.degree, monic_degree_mod4: residue, agrees: residue == theta_mod4 })
    } else {
        None
    };

    let mut provenance = BTreeMap::new();
    provenance.insert(
        "theta_mod4".into(),
        "closed form 2*C(2k-1,k-1) mod 4 for the primary obstruction at (d, j) = (6k+2, 4k+1)".into(),
    );
    provenance.insert(
        "class".into(),
        "theta_mod4 times the generator (1,-1) of H^{2d-1}(C; Z_chi) = Z/4, reduced by Smith normal form".into(),
    );
    if cross_check.is_some() {
        provenance.insert(
            "cross_check".into(),
            "signed count of monic factorizations of prod (x^2+i), equal to C(2k,k) = 2*C(2k-1,k-1)".into(),
        );
    }
    Ok(ThetaReport {
        k,
        d,
        j,
        binomial: exact.map(JsonInt),
        theta_mod4,
        cohomology_degree: 2 * n - 1,
        class,
        cross_check,
        provenance,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    AdmissibleByPrimaryObstruction,
    PrimaryObstructionVanishesInconclusive,
    OutOfTheoremScope,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub d: u32,
    pub j: u32,
    /// Number of hyperplanes; only two are handled.
    pub hyperplanes: u32,
    /// `2d - 3j`
    pub delta: i64,
    /// `k` with `(d, j) = (6k + 2, 4k + 1)`, when it exists.
    pub k_param: Option<u64>,
    pub theta_mod4: Option<u8>,
    /// Invariant factors of the group containing the obstruction, when known.
    pub obstruction_group: Option<Vec<JsonInt>>,
    pub verdict: Verdict,
    /// `ceil(3j / 2)`
    pub ramos_lower_bound: u64,
    pub notes: Vec<String>,
    pub provenance: BTreeMap<String, String>,
}

/// Decides whether `(d, j, 2)` is shown admissible by the primary
/// obstruction.
pub fn decide_admissible(d: u32, j: u32) -> AdmissibilityReport {
    let delta = 2 * i64::from(d) - 3 * i64::from(j);
    let ramos_lower_bound = (3 * u64::from(j)).div_ceil(2);
    let mut report = AdmissibilityReport {
        d,
        j,
        hyperplanes: 2,
        delta,
        k_param: None,
        theta_mod4: None,
        obstruction_group: None,
        verdict: Verdict::OutOfTheoremScope,
        ramos_lower_bound,
        notes: Vec::new(),
        provenance: BTreeMap::new(),
    };
    report.provenance.insert("ramos_lower_bound".into(), "lower bound Δ(j,2) >= 3j/2".into());
    report.provenance.insert("delta".into(), "2d - 3j; the obstruction is primary only when it equals 1".into());

    if d == 0 || j == 0 {
        report.notes.push("d and j must be positive".into());
    } else if delta != 1 {
        report.notes.push("the primary obstruction is evaluated only on the line 2d - 3j = 1".into());
        if u64::from(d) < ramos_lower_bound {
            report.notes.push(format!("d < ceil(3j/2) = {ramos_lower_bound}, so (d, j, 2) is not admissible"));
        }
    } else if d % 2 == 1 {
        if d >= 8 {
            let fragment = build_sphere_product_fragment(i64::from(d)).expect("d >= 8");
            let chi = coefficient_character(fragment.group());
            let degree = 2 * i64::from(d) - 1;
            if let Ok(group) = cohomology_at(&fragment, &chi, degree) {
                report.obstruction_group = Some(group.invariant_factors);
                report.provenance.insert(
                    "obstruction_group".into(),
                    format!("H^{degree}(C; Z_chi) of the top fragment of S^d x S^d, by Smith normal form"),
                );
            }
        }
        report.notes.push("d is odd: the obstruction group is known but no value of θ is computed".into());
    } else {
        let k = (u64::from(d) - 2) / 6;
        report.k_param = Some(k);
        if k == 0 {
            report.notes.push("(d, j) = (2, 1) lies below the dimensions covered by the obstruction computation".into());
        } else {
            match theta_equipartition(k, false) {
                Ok(theta) => {
                    report.theta_mod4 = Some(theta.theta_mod4);
                    report.obstruction_group = Some(theta.class.invariant_factors.clone());
                    report.provenance.insert("theta_mod4".into(), theta.provenance["theta_mod4"].clone());
                    report.provenance.insert(
                        "obstruction_group".into(),
                        "H^{2d-1}(C; Z_chi) of the top fragment of S^d x S^d, by Smith normal form".into(),
                    );
                    if theta.theta_mod4 != 0 {
                        report.verdict = Verdict::AdmissibleByPrimaryObstruction;
                        if u64::from(d) == ramos_lower_bound {
                            report.notes.push(format!("Δ({j},2) = {d}: the lower bound ceil(3j/2) is attained"));
                        }
                    } else {
                        report.verdict = Verdict::PrimaryObstructionVanishesInconclusive;
                        report.notes.push(format!("k = {k} is not a power of two, so θ = 0"));
                    }
                }
                Err(e) => report.notes.push(format!("θ could not be evaluated: {e}")),
            }
        }
    }
    report.notes.push(
        "the inequality Δ(j,2) <= Δ(j+1,2) - 1 is recorded for reference only and never changes the verdict".into(),
    );
    debug_assert!(report.verdict != Verdict::AdmissibleByPrimaryObstruction || u64::from(d) >= ramos_lower_bound);
    report
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub k: u64,
    /// `|deg μ′_{2k,2k}|` by enumeration.
    pub sphere_degree: i64,
    /// `2 C(2k, k)`
    pub twice_central_binomial: JsonInt,
    /// `4 C(2k-1, k-1)`
    pub four_binomial: JsonInt,
    pub exactly_equal: bool,
    pub congruent_mod8: bool,
    /// `8k + 2`
    pub dimension_lhs: u64,
    /// `6k + 3`
    pub dimension_rhs: u64,
    pub dimension_hypothesis: bool,
    pub passed: bool,
    pub provenance: BTreeMap<String, String>,
}

/// Checks `|deg μ′_{2k,2k}| = 2 C(2k, k) = 4 C(2k-1, k-1)` (in particular
/// the congruence mod 8) and the dimension hypothesis `8k + 2 >= 6k + 3`.
///
/// The degree is obtained by enumeration, so the cost grows like `C(2k, k)`.
pub fn congruence_check(k: u64) -> Result<CongruenceReport, ObstructionError> {
    require_positive(k)?;
    let m = usize::try_from(2 * k).map_err(|_| ObstructionError::Invalid("k too large".into()))?;
    let sphere_degree = degree_sphere_multiplication(m, m)?;
    let twice_central = BigInt::from(2) * binomial(2 * k, k);
    let four_binomial = BigInt::from(4) * binomial(2 * k - 1, k - 1);
    let eight = BigInt::from(8);
    let exactly_equal = BigInt::from(sphere_degree) == twice_central && twice_central == four_binomial;
    let congruent_mod8 = BigInt::from(sphere_degree).mod_floor(&eight) == four_binomial.mod_floor(&eight);
    let dimension_lhs = 8 * k + 2;
    let dimension_rhs = 6 * k + 3;
    let dimension_hypothesis = dimension_lhs >= dimension_rhs;

    let mut provenance = BTreeMap::new();
    provenance.insert(
        "sphere_degree".into(),
        "twice the signed count of monic factorizations of prod (x^2+i), i = 1..2k".into(),
    );
    provenance.insert("four_binomial".into(), "degree congruence deg(f) = 4*C(2k-1,k-1) mod 8".into());
    provenance.insert("dimension_hypothesis".into(), "dimension condition 8k+2 >= 6k+3 for comparing degrees mod 8".into());
    Ok(CongruenceReport {
        k,
        sphere_degree,
        twice_central_binomial: JsonInt(twice_central),
        four_binomial: JsonInt(four_binomial),
        exactly_equal,
        congruent_mod8,
        dimension_lhs,
        dimension_rhs,
        dimension_hypothesis,
        passed: exactly_equal && congruent_mod8 && dimension_hypothesis,
        provenance,
    })
}

impl ThetaReport {
    pub fn binomial_value(&self) -> Option<u64> {
        self.binomial.as_ref().and_then(|b| b.0.to_u64())
    }
}
