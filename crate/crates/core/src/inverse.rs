//! Recovering boundary data from a Steklov spectrum prefix.
//!
//! A canonical orbisurface spectrum is finitely many zeros together with a
//! finite union of progressions `d·N`.  Greedy peeling recovers that
//! decomposition from a long enough prefix, and the zero count plus total
//! progression multiplicity pin down the component counts: with `z` zeros
//! and total multiplicity `t`, `r = t - z` and `s = 2z - t`.  The lengths are
//! recovered only as the merged multiset `L ⊔ L ⊔ 2·Lbar`, which is exactly
//! the ambiguity the spectrum leaves.
//!
//! No finite prefix can certify the absence of a very sparse progression, so
//! the caller asserts the prefix is long enough; every decomposition is
//! verified by re-enumeration and peeling fails loudly otherwise.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{floor_div, format_rat, rat_int, Rat};
use crate::spectra::{
    enumerate, ArithmeticSpectrum, BoundaryData, Length, SpectraError, SpectrumUnit, SpectrumView,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InverseError {
    #[error("peel inconsistency: expected {needed} copies of {value}, found {present}; prefix too short or not a union of progressions")]
    PeelInconsistency {
        value: String,
        needed: u64,
        present: u64,
    },
    #[error("peel inconsistency: re-enumeration does not reproduce the input prefix")]
    ReenumerationMismatch,
    #[error("infeasible counts: zeros {zeros} and total multiplicity {total} admit no orbisurface (r = t - z, s = 2z - t must be non-negative)")]
    InfeasibleCounts { zeros: usize, total: u64 },
    #[error("merged length multiset admits no split into {r} pairs and {s} singletons")]
    EmptyClass { r: usize, s: usize },
    #[error("boundary classes are defined for pi-scaled spectra only")]
    NotPiScaled,
    #[error("merged length multiset has {got} entries, expected 2r + s = {expected}")]
    MergedSizeMismatch { got: usize, expected: usize },
    #[error("tolerance must be positive and finite")]
    BadTolerance,
    #[error("approximate view must be non-negative and non-decreasing")]
    BadApproxView,
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

/// Zeros plus progressions peeled from a spectrum prefix.  Same canonical
/// form as [`ArithmeticSpectrum`]; kept separate because a decomposition
/// carries the promise that it re-enumerates to the prefix it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProgressionDecomposition {
    unit: SpectrumUnit,
    zeros: usize,
    progressions: BTreeMap<Rat, u64>,
}

impl ProgressionDecomposition {
    pub fn unit(&self) -> SpectrumUnit {
        self.unit
    }

    pub fn zeros(&self) -> usize {
        self.zeros
    }

    pub fn progressions(&self) -> impl Iterator<Item = (&Rat, u64)> {
        self.progressions.iter().map(|(d, &m)| (d, m))
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.progressions.values().sum()
    }

    pub fn to_spectrum(&self) -> ArithmeticSpectrum {
        ArithmeticSpectrum::new(
            self.unit,
            self.zeros,
            self.progressions.iter().map(|(d, &m)| (d.clone(), m)),
        )
        .expect("decomposition invariants match spectrum invariants")
    }
}

/// Greedy progression peeling.
///
/// Repeatedly take the smallest remaining positive value `d`; its remaining
/// multiplicity is the number of progressions with difference `d`; remove
/// that many copies of `d, 2d, 3d, ...` up to the largest view value.  A
/// shortfall strictly below the largest value is an inconsistency; at the
/// largest value it is tolerated, since a prefix may truncate mid-
/// multiplicity there.  The result is checked by re-enumerating to the
/// prefix length.
pub fn peel_progressions(view: &SpectrumView) -> Result<ProgressionDecomposition, InverseError> {
    let zeros = view.values().iter().filter(|v| v.is_zero()).count();

    let mut remaining: BTreeMap<Rat, u64> = BTreeMap::new();
    for v in view.values().iter().filter(|v| !v.is_zero()) {
        *remaining.entry(v.clone()).or_insert(0) += 1;
    }
    let max_value = remaining.keys().next_back().cloned();

    let mut progressions: BTreeMap<Rat, u64> = BTreeMap::new();
    while let Some((difference, multiplicity)) =
        remaining.iter().next().map(|(d, &m)| (d.clone(), m))
    {
        let max_value = max_value.as_ref().expect("nonempty remaining has a max");
        progressions.insert(difference.clone(), multiplicity);
        let top_multiple = floor_div(max_value, &difference);
        let mut k = rat_int(1);
        while k.numer() <= &top_multiple {
            let value = &difference * &k;
            let at_boundary = &value == max_value;
            let present = remaining.get(&value).copied().unwrap_or(0);
            if present < multiplicity && !at_boundary {
                return Err(InverseError::PeelInconsistency {
                    value: format_rat(&value),
                    needed: multiplicity,
                    present,
                });
            }
            let removed = multiplicity.min(present);
            if removed == present {
                remaining.remove(&value);
            } else {
                remaining.insert(value, present - removed);
            }
            k += rat_int(1);
        }
    }

    let decomposition = ProgressionDecomposition {
        unit: view.unit(),
        zeros,
        progressions,
    };

    // Consistency gate: the decomposition must reproduce the prefix exactly.
    let reenumerated = if view.is_empty() {
        Vec::new()
    } else {
        enumerate(&decomposition.to_spectrum(), view.len())?
            .values()
            .to_vec()
    };
    if reenumerated != view.values() {
        return Err(InverseError::ReenumerationMismatch);
    }
    Ok(decomposition)
}

/// A prefix length guaranteed to identify every progression of `spectrum`:
/// all eigenvalues up to and including the largest difference.  Any longer
/// prefix also peels correctly.
pub fn sufficient_prefix_len(spectrum: &ArithmeticSpectrum) -> usize {
    let Some(max_difference) = spectrum.progressions().map(|(d, _)| d.clone()).last() else {
        return spectrum.zeros().max(1);
    };
    let mut count = spectrum.zeros() as u64;
    for (d, m) in spectrum.progressions() {
        let multiples = floor_div(&max_difference, d);
        count += m * u64::try_from(multiples).expect("desk-scale prefix");
    }
    count as usize
}

/// The equivalence class of boundary data recovered from a spectrum: the
/// component counts and the merged multiset `L ⊔ L ⊔ 2·Lbar`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryDataClass {
    r: usize,
    s: usize,
    merged_lengths: Vec<Rat>,
}

impl BoundaryDataClass {
    /// Validates that the merged multiset has `2r + s` entries and admits at
    /// least one split into `r` equal pairs plus `s` leftovers.
    pub fn new(r: usize, s: usize, mut merged_lengths: Vec<Rat>) -> Result<Self, InverseError> {
        merged_lengths.sort();
        if merged_lengths.len() != 2 * r + s {
            return Err(InverseError::MergedSizeMismatch {
                got: merged_lengths.len(),
                expected: 2 * r + s,
            });
        }
        let class = BoundaryDataClass {
            r,
            s,
            merged_lengths,
        };
        if !class.has_split() {
            return Err(InverseError::EmptyClass { r, s });
        }
        Ok(class)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn merged_lengths(&self) -> &[Rat] {
        &self.merged_lengths
    }

    fn value_counts(&self) -> Vec<(Rat, usize)> {
        let mut counts: Vec<(Rat, usize)> = Vec::new();
        for v in &self.merged_lengths {
            match counts.last_mut() {
                Some((value, count)) if value == v => *count += 1,
                _ => counts.push((v.clone(), 1)),
            }
        }
        counts
    }

    fn has_split(&self) -> bool {
        // r pairs must come from values with spare even capacity; greedy
        // feasibility: total available pairs >= r is enough, because pairs
        // from distinct values are independent.
        let available: usize = self.value_counts().iter().map(|(_, c)| c / 2).sum();
        available >= self.r
    }
}

/// Component counts and merged lengths from a peeled decomposition.
///
/// With `z` zeros and total multiplicity `t`: `r = t - z`, `s = 2z - t`.
/// Each progression `(d, mu)` contributes `mu` copies of the length `2/d`
/// (a disk of circumference `l` has difference `2/l` twice; a half-disk of
/// boundary length `lbar` has difference `1/lbar` once, and `2·lbar = 2/d`).
pub fn recover_boundary_class(
    decomposition: &ProgressionDecomposition,
) -> Result<BoundaryDataClass, InverseError> {
    if decomposition.unit() != SpectrumUnit::PiScaled {
        return Err(InverseError::NotPiScaled);
    }
    let z = decomposition.zeros();
    let t = decomposition.total_multiplicity();
    let (r, s) = counts_from_invariants(z, t)?;

    let mut merged: Vec<Rat> = Vec::with_capacity(t as usize);
    for (d, m) in decomposition.progressions() {
        let length = rat_int(2) / d;
        for _ in 0..m {
            merged.push(length.clone());
        }
    }
    BoundaryDataClass::new(r, s, merged)
}

fn counts_from_invariants(zeros: usize, total: u64) -> Result<(usize, usize), InverseError> {
    let z = zeros as u64;
    if total < z || 2 * z < total {
        return Err(InverseError::InfeasibleCounts { zeros, total });
    }
    Ok(((total - z) as usize, (2 * z - total) as usize))
}

/// Definition of the boundary-data equivalence: equal component counts and
/// equal merged multisets.
pub fn data_equivalent(a: &BoundaryData, b: &BoundaryData) -> bool {
    a.r() == b.r() && a.s() == b.s() && a.merged_lengths() == b.merged_lengths()
}

/// All boundary data in the class, sorted and deduplicated.
///
/// A member is a choice of `r` unordered equal pairs from the merged
/// multiset (these become `L`); the `s` leftovers are halved to form `Lbar`.
/// Distinct members correspond to distinct per-value pair counts, so the
/// search runs over vectors `k_v` with `0 <= k_v <= count_v / 2` and
/// `sum k_v = r`.
pub fn enumerate_class_members(
    class: &BoundaryDataClass,
) -> Result<Vec<BoundaryData>, InverseError> {
    let counts = class.value_counts();
    let mut members: Vec<BoundaryData> = Vec::new();
    let mut pair_take: Vec<usize> = vec![0; counts.len()];
    search_splits(&counts, 0, class.r(), &mut pair_take, &mut members);
    if members.is_empty() {
        return Err(InverseError::EmptyClass {
            r: class.r(),
            s: class.s(),
        });
    }
    members.sort_by(|a, b| {
        (a.type_one(), a.type_two())
            .partial_cmp(&(b.type_one(), b.type_two()))
            .expect("lengths are totally ordered")
    });
    members.dedup();
    Ok(members)
}

fn search_splits(
    counts: &[(Rat, usize)],
    index: usize,
    pairs_left: usize,
    pair_take: &mut Vec<usize>,
    members: &mut Vec<BoundaryData>,
) {
    if index == counts.len() {
        if pairs_left == 0 {
            members.push(build_member(counts, pair_take));
        }
        return;
    }
    let capacity: usize = counts[index..].iter().map(|(_, c)| c / 2).sum();
    if capacity < pairs_left {
        return;
    }
    let max_here = (counts[index].1 / 2).min(pairs_left);
    for take in 0..=max_here {
        pair_take[index] = take;
        search_splits(counts, index + 1, pairs_left - take, pair_take, members);
    }
    pair_take[index] = 0;
}

fn build_member(counts: &[(Rat, usize)], pair_take: &[usize]) -> BoundaryData {
    let mut type_one: Vec<Length> = Vec::new();
    let mut type_two: Vec<Length> = Vec::new();
    let half = rat_int(1) / rat_int(2);
    for ((value, count), &take) in counts.iter().zip(pair_take) {
        for _ in 0..take {
            type_one.push(Length::new(value.clone()).expect("positive merged length"));
        }
        for _ in 0..(count - 2 * take) {
            type_two.push(Length::new(value * &half).expect("positive merged length"));
        }
    }
    BoundaryData::new(type_one, type_two)
}

/// Output schema of the `invert` surface: counts, merged lengths, members.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InversionReport {
    pub r: usize,
    pub s: usize,
    #[serde(with = "crate::rational::rat_vec_string")]
    pub merged_lengths: Vec<Rat>,
    pub members: Vec<BoundaryData>,
}

/// Peel, recover and enumerate in one step, producing the `invert` report.
pub fn invert_view(view: &SpectrumView) -> Result<InversionReport, InverseError> {
    let decomposition = peel_progressions(view)?;
    let class = recover_boundary_class(&decomposition)?;
    let members = enumerate_class_members(&class)?;
    Ok(InversionReport {
        r: class.r(),
        s: class.s(),
        merged_lengths: class.merged_lengths().to_vec(),
        members,
    })
}

/// Heuristic decomposition of a floating-point spectrum prefix.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproxDecomposition {
    pub zeros: usize,
    pub progressions: Vec<(f64, u64)>,
}

/// Tolerance-mode peeling for externally produced floating spectra.
///
/// Heuristic surrogate for the exact peel: values within `epsilon` of each
/// other are bucketed together and multiples are matched within `epsilon`.
/// Unlike the exact peel this proves nothing; a poorly chosen `epsilon`
/// merges genuinely distinct progressions or splits one in two.
pub fn peel_progressions_with_tolerance(
    values: &[f64],
    epsilon: f64,
) -> Result<ApproxDecomposition, InverseError> {
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(InverseError::BadTolerance);
    }
    if values
        .windows(2)
        .any(|w| w[0] > w[1] || !w[0].is_finite() || !w[1].is_finite())
        || values.first().is_some_and(|v| *v < -epsilon)
    {
        return Err(InverseError::BadApproxView);
    }

    // Bucket sorted values: a new bucket starts when the gap exceeds epsilon.
    let mut buckets: Vec<(f64, u64)> = Vec::new();
    for &v in values {
        match buckets.last_mut() {
            Some((rep, count)) if (v - *rep).abs() <= epsilon => {
                // Running mean keeps the representative centered.
                *rep += (v - *rep) / (*count as f64 + 1.0);
                *count += 1;
            }
            _ => buckets.push((v, 1)),
        }
    }

    let mut zeros = 0usize;
    if let Some(&(rep, count)) = buckets.first() {
        if rep.abs() <= epsilon {
            zeros = count as usize;
            buckets.remove(0);
        }
    }
    let max_value = buckets.last().map(|&(rep, _)| rep).unwrap_or(0.0);

    let mut progressions: Vec<(f64, u64)> = Vec::new();
    while let Some(&(difference, multiplicity)) = buckets.first() {
        progressions.push((difference, multiplicity));
        let mut k = 1u64;
        loop {
            let target = difference * k as f64;
            if target > max_value + epsilon {
                break;
            }
            let at_boundary = (target - max_value).abs() <= epsilon;
            let slot = buckets
                .iter()
                .position(|&(rep, _)| (rep - target).abs() <= epsilon);
            match slot {
                Some(i) => {
                    let present = buckets[i].1;
                    if present < multiplicity && !at_boundary {
                        return Err(InverseError::PeelInconsistency {
                            value: format!("{target}"),
                            needed: multiplicity,
                            present,
                        });
                    }
                    let removed = multiplicity.min(present);
                    if removed == present {
                        buckets.remove(i);
                    } else {
                        buckets[i].1 = present - removed;
                    }
                }
                None if at_boundary => {}
                None => {
                    return Err(InverseError::PeelInconsistency {
                        value: format!("{target}"),
                        needed: multiplicity,
                        present: 0,
                    });
                }
            }
            k += 1;
        }
    }

    Ok(ApproxDecomposition {
        zeros,
        progressions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::spectra::{canonical_spectrum, spectra_equal};

    fn len(n: i64, d: i64) -> Length {
        Length::new(rat(n, d)).unwrap()
    }

    fn abs_view(values: &[(i64, i64)]) -> SpectrumView {
        SpectrumView::new(
            SpectrumUnit::Absolute,
            values.iter().map(|&(n, d)| rat(n, d)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn peels_disk_prefix() {
        let view = abs_view(&[(0, 1), (1, 1), (1, 1), (2, 1), (2, 1), (3, 1), (3, 1)]);
        let dec = peel_progressions(&view).unwrap();
        assert_eq!(dec.zeros(), 1);
        let progressions: Vec<(Rat, u64)> =
            dec.progressions().map(|(d, m)| (d.clone(), m)).collect();
        assert_eq!(progressions, vec![(rat_int(1), 2)]);
    }

    #[test]
    fn peels_all_zero_view() {
        let view = abs_view(&[(0, 1), (0, 1), (0, 1)]);
        let dec = peel_progressions(&view).unwrap();
        assert_eq!(dec.zeros(), 3);
        assert_eq!(dec.total_multiplicity(), 0);
    }

    #[test]
    fn peels_mixed_union_from_constructor() {
        let bd = BoundaryData::new(vec![len(1, 1)], vec![len(1, 1)]);
        let spectrum = canonical_spectrum(&bd);
        let view = enumerate(&spectrum, 60).unwrap();
        let dec = peel_progressions(&view).unwrap();
        assert_eq!(dec.zeros(), 2);
        let progressions: Vec<(Rat, u64)> =
            dec.progressions().map(|(d, m)| (d.clone(), m)).collect();
        assert_eq!(progressions, vec![(rat_int(1), 1), (rat_int(2), 2)]);
        assert!(spectra_equal(&dec.to_spectrum(), &spectrum).unwrap());
    }

    #[test]
    fn tolerates_truncation_at_the_boundary_value() {
        // Disk prefix cut mid-multiplicity at the top value.
        let view = abs_view(&[(0, 1), (1, 1), (1, 1), (2, 1)]);
        let dec = peel_progressions(&view).unwrap();
        let progressions: Vec<(Rat, u64)> =
            dec.progressions().map(|(d, m)| (d.clone(), m)).collect();
        assert_eq!(progressions, vec![(rat_int(1), 2)]);
    }

    #[test]
    fn detects_missing_interior_multiple() {
        let view = abs_view(&[(0, 1), (1, 1), (1, 1), (3, 1)]);
        assert!(matches!(
            peel_progressions(&view),
            Err(InverseError::PeelInconsistency { .. })
        ));
    }

    #[test]
    fn recovers_single_disk_class() {
        let bd = BoundaryData::new(vec![len(2, 1)], vec![]);
        let view = enumerate(&canonical_spectrum(&bd), 10).unwrap();
        let class = recover_boundary_class(&peel_progressions(&view).unwrap()).unwrap();
        assert_eq!(class.r(), 1);
        assert_eq!(class.s(), 0);
        assert_eq!(class.merged_lengths(), &[rat_int(2), rat_int(2)]);
    }

    #[test]
    fn interchange_pair_recovers_identical_class() {
        let a = BoundaryData::new(vec![len(2, 1)], vec![len(2, 1), len(2, 1)]);
        let b = BoundaryData::new(vec![len(4, 1)], vec![len(1, 1), len(1, 1)]);
        let class_of = |bd: &BoundaryData| {
            let spectrum = canonical_spectrum(bd);
            let view = enumerate(&spectrum, sufficient_prefix_len(&spectrum)).unwrap();
            recover_boundary_class(&peel_progressions(&view).unwrap()).unwrap()
        };
        let ca = class_of(&a);
        let cb = class_of(&b);
        assert_eq!(ca, cb);
        assert_eq!(ca.r(), 1);
        assert_eq!(ca.s(), 2);
        assert_eq!(
            ca.merged_lengths(),
            &[rat_int(2), rat_int(2), rat_int(4), rat_int(4)]
        );
    }

    #[test]
    fn infeasible_counts_are_rejected() {
        // z = 1, t = 3 forces s = -1.
        let dec = ProgressionDecomposition {
            unit: SpectrumUnit::PiScaled,
            zeros: 1,
            progressions: [(rat_int(1), 2u64), (rat_int(3), 1u64)]
                .into_iter()
                .collect(),
        };
        assert!(matches!(
            recover_boundary_class(&dec),
            Err(InverseError::InfeasibleCounts { zeros: 1, total: 3 })
        ));
        // z = 2, t = 1 forces r = -1.
        let dec = ProgressionDecomposition {
            unit: SpectrumUnit::PiScaled,
            zeros: 2,
            progressions: [(rat_int(1), 1u64)].into_iter().collect(),
        };
        assert!(matches!(
            recover_boundary_class(&dec),
            Err(InverseError::InfeasibleCounts { zeros: 2, total: 1 })
        ));
    }

    #[test]
    fn absolute_unit_has_no_boundary_interpretation() {
        let dec = ProgressionDecomposition {
            unit: SpectrumUnit::Absolute,
            zeros: 1,
            progressions: [(rat_int(1), 2u64)].into_iter().collect(),
        };
        assert!(matches!(
            recover_boundary_class(&dec),
            Err(InverseError::NotPiScaled)
        ));
    }

    #[test]
    fn feasible_counts_with_no_split_are_an_empty_class() {
        // z = 1, t = 2 gives r = 1, s = 0, but distinct lengths cannot pair.
        let dec = ProgressionDecomposition {
            unit: SpectrumUnit::PiScaled,
            zeros: 1,
            progressions: [(rat_int(1), 1u64), (rat_int(2), 1u64)]
                .into_iter()
                .collect(),
        };
        assert!(matches!(
            recover_boundary_class(&dec),
            Err(InverseError::EmptyClass { r: 1, s: 0 })
        ));
    }

    #[test]
    fn data_equivalence_examples() {
        let a = BoundaryData::new(vec![len(2, 1)], vec![len(2, 1), len(2, 1)]);
        let b = BoundaryData::new(vec![len(4, 1)], vec![len(1, 1), len(1, 1)]);
        assert!(data_equivalent(&a, &a));
        assert!(data_equivalent(&a, &b));

        let c = BoundaryData::new(vec![len(1, 1)], vec![]);
        let d = BoundaryData::new(vec![], vec![len(1, 1), len(1, 1)]);
        assert!(!data_equivalent(&c, &d));
    }

    #[test]
    fn class_members_forced_singleton() {
        let class = BoundaryDataClass::new(1, 0, vec![rat_int(2), rat_int(2)]).unwrap();
        let members = enumerate_class_members(&class).unwrap();
        assert_eq!(members, vec![BoundaryData::new(vec![len(2, 1)], vec![])]);
    }

    #[test]
    fn class_members_interchange_pair() {
        let class =
            BoundaryDataClass::new(1, 2, vec![rat_int(2), rat_int(2), rat_int(4), rat_int(4)])
                .unwrap();
        let members = enumerate_class_members(&class).unwrap();
        assert_eq!(
            members,
            vec![
                BoundaryData::new(vec![len(2, 1)], vec![len(2, 1), len(2, 1)]),
                BoundaryData::new(vec![len(4, 1)], vec![len(1, 1), len(1, 1)]),
            ]
        );
    }

    #[test]
    fn class_members_distinct_type_two_lengths() {
        let class = BoundaryDataClass::new(0, 3, vec![rat_int(2), rat_int(4), rat_int(6)]).unwrap();
        let members = enumerate_class_members(&class).unwrap();
        assert_eq!(
            members,
            vec![BoundaryData::new(
                vec![],
                vec![len(1, 1), len(2, 1), len(3, 1)]
            )]
        );
    }

    #[test]
    fn peeling_is_scale_equivariant() {
        let bd = BoundaryData::new(vec![len(1, 1), len(3, 1)], vec![len(2, 1)]);
        let spectrum = canonical_spectrum(&bd);
        let view = enumerate(&spectrum, sufficient_prefix_len(&spectrum)).unwrap();
        let scale = rat(5, 3);
        let scaled_view = SpectrumView::new(
            view.unit(),
            view.values().iter().map(|v| v * &scale).collect(),
        )
        .unwrap();
        let dec = peel_progressions(&view).unwrap();
        let scaled_dec = peel_progressions(&scaled_view).unwrap();
        assert_eq!(dec.zeros(), scaled_dec.zeros());
        let scaled: Vec<(Rat, u64)> = dec.progressions().map(|(d, m)| (d * &scale, m)).collect();
        let got: Vec<(Rat, u64)> = scaled_dec
            .progressions()
            .map(|(d, m)| (d.clone(), m))
            .collect();
        assert_eq!(scaled, got);
    }

    #[test]
    fn approx_peel_recovers_simple_union() {
        // 0, 1, 2, 2, 3, 4, 4, ... = (1)N + (2)N with noise.
        let values = [
            0.0000003, 0.9999997, 2.0000001, 2.0000004, 2.9999998, 3.9999995, 4.0000002,
        ];
        let dec = peel_progressions_with_tolerance(&values, 1e-5).unwrap();
        assert_eq!(dec.zeros, 1);
        assert_eq!(dec.progressions.len(), 2);
        assert!((dec.progressions[0].0 - 1.0).abs() < 1e-5);
        assert_eq!(dec.progressions[0].1, 1);
        assert!((dec.progressions[1].0 - 2.0).abs() < 1e-5);
        assert_eq!(dec.progressions[1].1, 1);
    }

    #[test]
    fn approx_peel_rejects_bad_tolerance() {
        assert!(peel_progressions_with_tolerance(&[0.0, 1.0], 0.0).is_err());
        assert!(peel_progressions_with_tolerance(&[0.0, 1.0], f64::NAN).is_err());
    }
}
