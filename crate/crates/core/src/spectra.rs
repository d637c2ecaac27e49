//! Canonical Steklov spectra of flat disks, flat half-disk orbisurfaces and
//! their disjoint unions, in exact arithmetic.
//!
//! A disk of circumference `l` contributes `{0}` together with two copies of
//! the progression `(2pi/l)N`; a half-disk orbisurface with boundary length
//! `lbar` contributes `{0}` together with one copy of `(pi/lbar)N`.  All
//! eigenvalues of these model surfaces are rational multiples of pi, so a
//! spectrum is stored as a zero count plus a canonical multiset of
//! (difference, multiplicity) progressions with the pi factored out.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{format_rat, rat_int, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectraError {
    #[error("length must be positive, got {0}")]
    NonPositiveLength(String),
    #[error("progression difference must be positive, got {0}")]
    NonPositiveDifference(String),
    #[error("progression multiplicity must be positive")]
    ZeroMultiplicity,
    #[error("requested enumeration of 0 values")]
    ZeroEnumeration,
    #[error("unit mismatch: {0:?} vs {1:?}")]
    UnitMismatch(SpectrumUnit, SpectrumUnit),
    #[error("spectrum view values must be non-negative and non-decreasing")]
    UnsortedView,
}

/// Unit tag carried by every spectrum.
///
/// Canonical orbisurface eigenvalues are stored as rational coefficients of
/// pi (`PiScaled`); ball-quotient eigenvalues `m/R` are plain rationals
/// (`Absolute`).  Cross-unit arithmetic is rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpectrumUnit {
    #[serde(rename = "pi")]
    PiScaled,
    #[serde(rename = "abs")]
    Absolute,
}

/// A positive rational boundary length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Length(Rat);

impl Length {
    pub fn new(value: Rat) -> Result<Self, SpectraError> {
        if value <= Rat::zero() {
            return Err(SpectraError::NonPositiveLength(format_rat(&value)));
        }
        Ok(Length(value))
    }

    pub fn from_int(n: i64) -> Result<Self, SpectraError> {
        Self::new(rat_int(n))
    }

    pub fn value(&self) -> &Rat {
        &self.0
    }

    pub fn into_value(self) -> Rat {
        self.0
    }
}

/// Boundary data `(L; Lbar)`: multisets of type I and type II boundary
/// component lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryData {
    type_one: Vec<Length>,
    type_two: Vec<Length>,
}

impl BoundaryData {
    /// Multiset semantics: the input order is irrelevant and not preserved.
    pub fn new(mut type_one: Vec<Length>, mut type_two: Vec<Length>) -> Self {
        type_one.sort();
        type_two.sort();
        BoundaryData { type_one, type_two }
    }

    pub fn empty() -> Self {
        BoundaryData {
            type_one: Vec::new(),
            type_two: Vec::new(),
        }
    }

    /// Number of type I components.
    pub fn r(&self) -> usize {
        self.type_one.len()
    }

    /// Number of type II components.
    pub fn s(&self) -> usize {
        self.type_two.len()
    }

    pub fn type_one(&self) -> &[Length] {
        &self.type_one
    }

    pub fn type_two(&self) -> &[Length] {
        &self.type_two
    }

    /// The multiset `L ⊔ L ⊔ 2·Lbar`, sorted.  Two boundary data are
    /// equivalent exactly when their counts and merged multisets agree.
    pub fn merged_lengths(&self) -> Vec<Rat> {
        let mut merged: Vec<Rat> = Vec::with_capacity(2 * self.r() + self.s());
        for l in &self.type_one {
            merged.push(l.value().clone());
            merged.push(l.value().clone());
        }
        for l in &self.type_two {
            merged.push(l.value() * rat_int(2));
        }
        merged.sort();
        merged
    }
}

impl Serialize for BoundaryData {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            #[serde(with = "crate::rational::rat_vec_string")]
            type_one: &'a [Rat],
            #[serde(with = "crate::rational::rat_vec_string")]
            type_two: &'a [Rat],
        }
        let type_one: Vec<Rat> = self.type_one.iter().map(|l| l.value().clone()).collect();
        let type_two: Vec<Rat> = self.type_two.iter().map(|l| l.value().clone()).collect();
        Raw {
            type_one: &type_one,
            type_two: &type_two,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BoundaryData {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            #[serde(with = "crate::rational::rat_vec_string")]
            type_one: Vec<Rat>,
            #[serde(with = "crate::rational::rat_vec_string")]
            type_two: Vec<Rat>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let type_one = raw
            .type_one
            .into_iter()
            .map(Length::new)
            .collect::<Result<_, _>>()
            .map_err(serde::de::Error::custom)?;
        let type_two = raw
            .type_two
            .into_iter()
            .map(Length::new)
            .collect::<Result<_, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(BoundaryData::new(type_one, type_two))
    }
}

/// Exact normal form of a canonical Steklov spectrum: a zero count plus a
/// multiset of arithmetic progressions `d·N` with multiplicities.
///
/// Canonical form is unique: progressions are keyed by difference and equal
/// differences merge by summing multiplicities.  Which component contributed
/// which copy is deliberately forgotten; the spectrum itself has no such
/// memory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArithmeticSpectrum {
    unit: SpectrumUnit,
    zeros: usize,
    progressions: BTreeMap<Rat, u64>,
}

impl ArithmeticSpectrum {
    pub fn new(
        unit: SpectrumUnit,
        zeros: usize,
        progressions: impl IntoIterator<Item = (Rat, u64)>,
    ) -> Result<Self, SpectraError> {
        let mut map: BTreeMap<Rat, u64> = BTreeMap::new();
        for (difference, multiplicity) in progressions {
            if difference <= Rat::zero() {
                return Err(SpectraError::NonPositiveDifference(format_rat(&difference)));
            }
            if multiplicity == 0 {
                return Err(SpectraError::ZeroMultiplicity);
            }
            *map.entry(difference).or_insert(0) += multiplicity;
        }
        Ok(ArithmeticSpectrum {
            unit,
            zeros,
            progressions: map,
        })
    }

    pub fn empty(unit: SpectrumUnit) -> Self {
        ArithmeticSpectrum {
            unit,
            zeros: 0,
            progressions: BTreeMap::new(),
        }
    }

    pub fn unit(&self) -> SpectrumUnit {
        self.unit
    }

    /// Multiplicity of the eigenvalue 0.
    pub fn zeros(&self) -> usize {
        self.zeros
    }

    /// Canonical progression list, sorted by difference.
    pub fn progressions(&self) -> impl Iterator<Item = (&Rat, u64)> {
        self.progressions.iter().map(|(d, &m)| (d, m))
    }

    /// Total multiplicity over all progressions; `2r + s` for a canonical
    /// orbisurface spectrum.
    pub fn total_multiplicity(&self) -> u64 {
        self.progressions.values().sum()
    }

    /// A spectrum with no progressions has only finitely many eigenvalues.
    pub fn is_finite(&self) -> bool {
        self.progressions.is_empty()
    }

    /// Disjoint-union merge; both operands must carry the same unit.
    pub fn merge(&self, other: &ArithmeticSpectrum) -> Result<ArithmeticSpectrum, SpectraError> {
        if self.unit != other.unit {
            return Err(SpectraError::UnitMismatch(self.unit, other.unit));
        }
        let mut merged = self.clone();
        merged.zeros += other.zeros;
        for (d, m) in &other.progressions {
            *merged.progressions.entry(d.clone()).or_insert(0) += m;
        }
        Ok(merged)
    }
}

impl Serialize for ArithmeticSpectrum {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("ArithmeticSpectrum", 3)?;
        st.serialize_field("unit", &self.unit)?;
        st.serialize_field("zeros", &self.zeros)?;
        let progressions: Vec<(String, u64)> = self
            .progressions
            .iter()
            .map(|(d, &m)| (format_rat(d), m))
            .collect();
        st.serialize_field("progressions", &progressions)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for ArithmeticSpectrum {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            unit: SpectrumUnit,
            zeros: usize,
            progressions: Vec<(String, u64)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let progressions = raw
            .progressions
            .iter()
            .map(|(d, m)| {
                crate::rational::parse_rat(d)
                    .map(|d| (d, *m))
                    .map_err(serde::de::Error::custom)
            })
            .collect::<Result<Vec<_>, _>>()?;
        ArithmeticSpectrum::new(raw.unit, raw.zeros, progressions).map_err(serde::de::Error::custom)
    }
}

/// A finite non-decreasing prefix of a spectrum, with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumView {
    unit: SpectrumUnit,
    values: Vec<Rat>,
}

impl SpectrumView {
    pub fn new(unit: SpectrumUnit, values: Vec<Rat>) -> Result<Self, SpectraError> {
        let sorted = values.windows(2).all(|w| w[0] <= w[1]);
        let nonneg = values.first().is_none_or(|v| *v >= Rat::zero());
        if !sorted || !nonneg {
            return Err(SpectraError::UnsortedView);
        }
        Ok(SpectrumView { unit, values })
    }

    pub fn unit(&self) -> SpectrumUnit {
        self.unit
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl Serialize for SpectrumView {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("SpectrumView", 2)?;
        st.serialize_field("unit", &self.unit)?;
        let values: Vec<String> = self.values.iter().map(format_rat).collect();
        st.serialize_field("values", &values)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SpectrumView {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        // Unknown fields are tolerated so that views decorated with
        // approximate decimal renderings still re-parse.
        #[derive(Deserialize)]
        struct Raw {
            unit: SpectrumUnit,
            #[serde(with = "crate::rational::rat_vec_string")]
            values: Vec<Rat>,
        }
        let raw = Raw::deserialize(deserializer)?;
        SpectrumView::new(raw.unit, raw.values).map_err(serde::de::Error::custom)
    }
}

/// Steklov spectrum of a flat disk of circumference `l`:
/// `{0} ⊔ (2pi/l)N ⊔ (2pi/l)N`, stored as the pi-coefficient `2/l` with
/// multiplicity two.
pub fn canonical_disk_spectrum(l: &Length) -> ArithmeticSpectrum {
    let difference = rat_int(2) / l.value();
    ArithmeticSpectrum::new(SpectrumUnit::PiScaled, 1, [(difference, 2)])
        .expect("positive length gives positive difference")
}

/// Steklov spectrum of the flat half-disk orbisurface with boundary length
/// `lbar`: `{0} ⊔ (pi/lbar)N`, each eigenvalue simple.
pub fn canonical_half_disk_spectrum(lbar: &Length) -> ArithmeticSpectrum {
    let difference = rat_int(1) / lbar.value();
    ArithmeticSpectrum::new(SpectrumUnit::PiScaled, 1, [(difference, 1)])
        .expect("positive length gives positive difference")
}

/// Steklov spectrum of the canonical orbisurface with the given boundary
/// data: the disjoint union of one disk per type I length and one half-disk
/// orbisurface per type II length.  The zero count is `r + s`.
pub fn canonical_spectrum(bd: &BoundaryData) -> ArithmeticSpectrum {
    let mut spectrum = ArithmeticSpectrum::empty(SpectrumUnit::PiScaled);
    for l in bd.type_one() {
        spectrum = spectrum
            .merge(&canonical_disk_spectrum(l))
            .expect("same unit");
    }
    for lbar in bd.type_two() {
        spectrum = spectrum
            .merge(&canonical_half_disk_spectrum(lbar))
            .expect("same unit");
    }
    spectrum
}

/// First `min(n, total size)` eigenvalues, non-decreasing, with multiplicity.
///
/// The progressions are merged as `k` sorted streams through a min-heap; ties
/// drain every equal value before any larger one is emitted, so the output is
/// deterministic.
pub fn enumerate(spectrum: &ArithmeticSpectrum, n: usize) -> Result<SpectrumView, SpectraError> {
    if n == 0 {
        return Err(SpectraError::ZeroEnumeration);
    }
    let mut out: Vec<Rat> = Vec::with_capacity(n.min(spectrum.zeros + 64));
    for _ in 0..spectrum.zeros.min(n) {
        out.push(Rat::zero());
    }

    // One stream per progression: d, 2d, 3d, ... each value repeated
    // `multiplicity` times.
    struct Stream {
        difference: Rat,
        multiplicity: u64,
        multiple: u64,
        emitted_at_multiple: u64,
    }
    let mut streams: Vec<Stream> = spectrum
        .progressions()
        .map(|(d, m)| Stream {
            difference: d.clone(),
            multiplicity: m,
            multiple: 1,
            emitted_at_multiple: 0,
        })
        .collect();

    let mut heap: BinaryHeap<Reverse<(Rat, usize)>> = streams
        .iter()
        .enumerate()
        .map(|(i, s)| Reverse((s.difference.clone(), i)))
        .collect();

    while out.len() < n {
        let Some(Reverse((value, idx))) = heap.pop() else {
            break;
        };
        out.push(value);
        let stream = &mut streams[idx];
        stream.emitted_at_multiple += 1;
        if stream.emitted_at_multiple == stream.multiplicity {
            stream.multiple += 1;
            stream.emitted_at_multiple = 0;
        }
        let next = &stream.difference * rat_int(stream.multiple as i64);
        heap.push(Reverse((next, idx)));
    }

    SpectrumView::new(spectrum.unit, out)
}

/// Exact spectral equality: same unit, same zero count, same canonical
/// progression multiset.
pub fn spectra_equal(a: &ArithmeticSpectrum, b: &ArithmeticSpectrum) -> Result<bool, SpectraError> {
    if a.unit != b.unit {
        return Err(SpectraError::UnitMismatch(a.unit, b.unit));
    }
    Ok(a == b)
}
