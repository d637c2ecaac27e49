//! Invariant harmonic polynomial dimensions and ball-quotient spectra.
//!
//! The Steklov eigenfunctions of `Gamma \ B(0,R)` pull back to the
//! Gamma-invariant homogeneous harmonic polynomials, so the eigenvalue `m/R`
//! has multiplicity `d_Gamma(m)`.  Degree-m polynomials split as
//! `P_m = H_m ⊕ r^2 P_{m-2}` compatibly with the O(n) action, hence
//!
//! ```text
//! d_Gamma(m) = (1/|Gamma|) * sum_gamma (p_m(gamma) - p_{m-2}(gamma))
//! ```
//!
//! where `p_m(gamma)` is the coefficient of `t^m` in `1/det(I - t*gamma)`.
//! Those coefficients satisfy `p_m = -(c_1 p_{m-1} + ... + c_n p_{m-n})`
//! with `c_k` the characteristic coefficients of `det(I - t*gamma)`, which
//! the Newton identities produce from traces of powers.  No eigenvalue
//! factorization is needed, so the whole pipeline stays exact in rational
//! mode.

use serde::{Deserialize, Serialize};

use crate::matgroup::{GroupError, GroupScalar, Matrix, OrthogonalGroup};
use crate::rational::{format_rat, rat_int, Rat};
use crate::spectra::{SpectrumUnit, SpectrumView};

/// Absolute deviation from an integer tolerated when snapping float-mode
/// averaged dimensions.
pub const DIMENSION_SNAP_TOLERANCE: f64 = 1e-6;

/// Dimensions `d_Gamma(0..=M)` of invariant homogeneous harmonic polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarmonicDimensionTable {
    group_order: usize,
    dims: Vec<u64>,
}

impl HarmonicDimensionTable {
    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn max_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, degree: usize) -> u64 {
        self.dims[degree]
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }
}

/// Coefficients `c_0..c_n` of `det(I - t*gamma)` via Newton's identities on
/// the traces `s_k = tr(gamma^k)`.
fn char_poly_coefficients<T: GroupScalar>(gamma: &Matrix<T>) -> Vec<T> {
    let n = gamma.dim();
    let mut traces: Vec<T> = Vec::with_capacity(n + 1);
    traces.push(T::from_integer(0)); // s_0 unused
    let mut power = gamma.clone();
    for k in 1..=n {
        traces.push(power.trace());
        if k < n {
            power = power.mul(gamma);
        }
    }

    // e_k = (1/k) * sum_{i=1..k} (-1)^{i-1} e_{k-i} s_i; c_k = (-1)^k e_k.
    let mut elementary: Vec<T> = vec![T::one()];
    for k in 1..=n {
        let mut acc = T::zero();
        let mut sign = T::one();
        for i in 1..=k {
            acc = acc + sign.clone() * elementary[k - i].clone() * traces[i].clone();
            sign = -sign;
        }
        elementary.push(acc / T::from_integer(k as i64));
    }
    let mut coefficients = Vec::with_capacity(n + 1);
    let mut sign = T::one();
    for e in elementary {
        coefficients.push(sign.clone() * e);
        sign = -sign;
    }
    coefficients
}

/// The series `1/det(I - t*gamma) = sum p_m t^m`, truncated at `max_degree`.
fn inverse_det_series<T: GroupScalar>(gamma: &Matrix<T>, max_degree: usize) -> Vec<T> {
    let coefficients = char_poly_coefficients(gamma);
    let n = gamma.dim();
    let mut series: Vec<T> = Vec::with_capacity(max_degree + 1);
    series.push(T::one());
    for m in 1..=max_degree {
        let mut acc = T::zero();
        for k in 1..=n.min(m) {
            acc = acc + coefficients[k].clone() * series[m - k].clone();
        }
        series.push(-acc);
    }
    series
}

/// Character-averaged dimensions of Gamma-invariant homogeneous harmonic
/// polynomials for all degrees `0..=max_degree`.
///
/// Exact in rational mode; in float mode the per-degree average is snapped
/// to the nearest integer and rejected if it deviates by more than 1e-6.
/// The accumulation order over elements is fixed, so float results are
/// deterministic.
pub fn invariant_harmonic_dims<T: GroupScalar>(
    group: &OrthogonalGroup<T>,
    max_degree: usize,
) -> Result<HarmonicDimensionTable, GroupError> {
    let order = group.order();
    let mut sums: Vec<T> = vec![T::zero(); max_degree + 1];
    for gamma in group.elements() {
        let series = inverse_det_series(gamma, max_degree);
        for m in 0..=max_degree {
            let harmonic_part = if m >= 2 {
                series[m].clone() - series[m - 2].clone()
            } else {
                series[m].clone()
            };
            sums[m] = sums[m].clone() + harmonic_part;
        }
    }

    let order_scalar = T::from_integer(order as i64);
    let mut dims = Vec::with_capacity(max_degree + 1);
    for (degree, sum) in sums.into_iter().enumerate() {
        let average = sum / order_scalar.clone();
        match average.to_integer_within(DIMENSION_SNAP_TOLERANCE) {
            Some(d) if d >= 0 => dims.push(d as u64),
            _ => {
                return Err(GroupError::NonIntegerDimension {
                    degree,
                    value: average.to_f64(),
                })
            }
        }
    }
    debug_assert_eq!(dims[0], 1);
    Ok(HarmonicDimensionTable {
        group_order: order,
        dims,
    })
}

/// Dimension of the full space of homogeneous harmonic polynomials of degree
/// `m` on R^n: `C(n+m-1, m) - C(n+m-3, m-2)`.
pub fn full_harmonic_dim(n: usize, m: usize) -> u64 {
    let poly = |degree: usize| binomial(n + degree - 1, degree);
    if m >= 2 {
        poly(m) - poly(m - 2)
    } else {
        poly(m)
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(result).expect("desk-scale binomial")
}

/// Steklov spectrum of `Gamma \ B(0,R)` up to degree `max_degree`: the
/// multiset `{m/R with multiplicity d_Gamma(m)}`, in absolute units.
pub fn quotient_ball_spectrum<T: GroupScalar>(
    group: &OrthogonalGroup<T>,
    radius: &Rat,
    max_degree: usize,
) -> Result<SpectrumView, GroupError> {
    if *radius <= Rat::from_integer(0.into()) {
        return Err(GroupError::NonPositiveRadius);
    }
    let table = invariant_harmonic_dims(group, max_degree)?;
    Ok(spectrum_from_dims(&table, radius))
}

/// Expand a dimension table into the sorted eigenvalue list `m/R`.
pub fn spectrum_from_dims(table: &HarmonicDimensionTable, radius: &Rat) -> SpectrumView {
    let mut values: Vec<Rat> = Vec::new();
    for m in 0..=table.max_degree() {
        let value = rat_int(m as i64) / radius;
        for _ in 0..table.dim(m) {
            values.push(value.clone());
        }
    }
    SpectrumView::new(SpectrumUnit::Absolute, values).expect("m/R is increasing in m")
}

/// Verdict of a finite isospectrality check; never a claim beyond the
/// computed degree range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsospectralVerdict {
    pub isospectral: bool,
    pub checked_degree: usize,
    /// First degree where the dimensions differ, with both values.
    pub first_difference: Option<(usize, u64, u64)>,
}

/// Compare `d_Gamma1(m)` and `d_Gamma2(m)` for all `m <= max_degree`.  The
/// radius cancels, so it does not appear.
pub fn steklov_isospectral_quotients<T: GroupScalar>(
    group1: &OrthogonalGroup<T>,
    group2: &OrthogonalGroup<T>,
    max_degree: usize,
) -> Result<IsospectralVerdict, GroupError> {
    if group1.dim() != group2.dim() {
        return Err(GroupError::DimensionMismatch(group1.dim(), group2.dim()));
    }
    let table1 = invariant_harmonic_dims(group1, max_degree)?;
    let table2 = invariant_harmonic_dims(group2, max_degree)?;
    Ok(compare_dimension_tables(&table1, &table2))
}

/// Table-level comparison, usable across entry modes.
pub fn compare_dimension_tables(
    table1: &HarmonicDimensionTable,
    table2: &HarmonicDimensionTable,
) -> IsospectralVerdict {
    let checked_degree = table1.max_degree().min(table2.max_degree());
    let first_difference = (0..=checked_degree)
        .find(|&m| table1.dim(m) != table2.dim(m))
        .map(|m| (m, table1.dim(m), table2.dim(m)));
    IsospectralVerdict {
        isospectral: first_difference.is_none(),
        checked_degree,
        first_difference,
    }
}

/// Mode-erased dimension table for callers holding an [`AnyGroup`].
pub fn invariant_harmonic_dims_any(
    group: &crate::matgroup::AnyGroup,
    max_degree: usize,
) -> Result<HarmonicDimensionTable, GroupError> {
    match group {
        crate::matgroup::AnyGroup::Rational(g) => invariant_harmonic_dims(g, max_degree),
        crate::matgroup::AnyGroup::Float(g) => invariant_harmonic_dims(g, max_degree),
    }
}

/// Mode-erased quotient spectrum for callers holding an [`AnyGroup`].
pub fn quotient_ball_spectrum_any(
    group: &crate::matgroup::AnyGroup,
    radius: &Rat,
    max_degree: usize,
) -> Result<SpectrumView, GroupError> {
    if *radius <= Rat::from_integer(0.into()) {
        return Err(GroupError::NonPositiveRadius);
    }
    let table = invariant_harmonic_dims_any(group, max_degree)?;
    Ok(spectrum_from_dims(&table, radius))
}

/// A Fourier-diagonal Dirichlet-to-Neumann operator on a circle: mode `j`
/// (the span of `cos(js)` and `sin(js)` in arclength coordinate `s`) is an
/// eigenspace with the listed eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourierDtn {
    label: String,
    eigenvalues: Vec<Rat>,
}

impl FourierDtn {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn max_mode(&self) -> usize {
        self.eigenvalues.len() - 1
    }

    pub fn eigenvalue_of_mode(&self, mode: usize) -> &Rat {
        &self.eigenvalues[mode]
    }

    pub fn eigenvalues(&self) -> &[Rat] {
        &self.eigenvalues
    }
}

impl Serialize for FourierDtn {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("FourierDtn", 2)?;
        st.serialize_field("label", &self.label)?;
        let eigenvalues: Vec<String> = self.eigenvalues.iter().map(format_rat).collect();
        st.serialize_field("eigenvalues", &eigenvalues)?;
        st.end()
    }
}

/// Dirichlet-to-Neumann operator of the radius-R disk: mode `j` has
/// eigenvalue `j/R`.
pub fn dtn_disk(radius: &Rat, max_mode: usize) -> Result<FourierDtn, GroupError> {
    if *radius <= Rat::from_integer(0.into()) {
        return Err(GroupError::NonPositiveRadius);
    }
    let eigenvalues = (0..=max_mode).map(|j| rat_int(j as i64) / radius).collect();
    Ok(FourierDtn {
        label: format!("disk(R={})", format_rat(radius)),
        eigenvalues,
    })
}

/// Dirichlet-to-Neumann operator of the cone `Z_k \ D(2*pi*k)`, computed
/// through the quotient: the Z_k-invariant modes on the covering disk of
/// radius `k` are `m = jk` with eigenvalue `m/k = j`, and the covering map
/// `(k, theta) -> s = k*theta` pushes them to arclength modes `j` on the
/// boundary circle.
pub fn dtn_cone(k: u64, max_mode: usize) -> Result<FourierDtn, GroupError> {
    if k == 0 {
        return Err(GroupError::BadConeOrder);
    }
    let radius = rat_int(k as i64);
    let eigenvalues = (0..=max_mode)
        .map(|j| {
            let invariant_degree = rat_int((j as u64 * k) as i64);
            invariant_degree / &radius
        })
        .collect();
    Ok(FourierDtn {
        label: format!("cone(k={k})"),
        eigenvalues,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgroup::{
        close_group, cyclic_rotation_group, signed_diagonal, OrthogonalGroup, DEFAULT_TOLERANCE,
    };
    use crate::rational::rat;
    use num_traits::{One, Zero};

    fn trivial(dim: usize) -> OrthogonalGroup<Rat> {
        OrthogonalGroup::trivial(dim).unwrap()
    }

    #[test]
    fn trivial_group_reproduces_full_harmonic_dims() {
        for n in 2..=4 {
            let table = invariant_harmonic_dims(&trivial(n), 8).unwrap();
            for m in 0..=8 {
                assert_eq!(table.dim(m), full_harmonic_dim(n, m), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn plane_dims_are_constant_two() {
        let table = invariant_harmonic_dims(&trivial(2), 6).unwrap();
        assert_eq!(table.dims(), &[1, 2, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn cyclic_group_keeps_multiples_of_k() {
        for k in [2usize, 3, 4, 5] {
            let group = cyclic_rotation_group(k).unwrap();
            let table = invariant_harmonic_dims(&group, 3 * k).unwrap();
            for m in 1..=3 * k {
                let expected = if m % k == 0 { 2 } else { 0 };
                assert_eq!(table.dim(m), expected, "k={k} m={m}");
            }
        }
    }

    #[test]
    fn antipodal_quotient_kills_odd_degrees() {
        let group = close_group(&[signed_diagonal(&[-1, -1, -1])], DEFAULT_TOLERANCE, 4).unwrap();
        let table = invariant_harmonic_dims(&group, 4).unwrap();
        assert_eq!(table.dims(), &[1, 0, 5, 0, 9]);
    }

    #[test]
    fn unit_ball_spectrum_in_the_plane() {
        let view = quotient_ball_spectrum(&trivial(2), &rat_int(1), 3).unwrap();
        let expected: Vec<Rat> = [0, 1, 1, 2, 2, 3, 3].iter().map(|&v| rat_int(v)).collect();
        assert_eq!(view.values(), &expected);
    }

    #[test]
    fn cone_and_disk_spectra_agree_through_the_quotient() {
        for k in [2usize, 5] {
            let group = cyclic_rotation_group(k).unwrap();
            let view = quotient_ball_spectrum(&group, &rat_int(k as i64), 3 * k).unwrap();
            let expected: Vec<Rat> = [0, 1, 1, 2, 2, 3, 3].iter().map(|&v| rat_int(v)).collect();
            assert_eq!(view.values(), &expected, "k={k}");
        }
    }

    #[test]
    fn rotation_and_reflection_z2_differ_at_degree_one() {
        let rotation = close_group(&[signed_diagonal(&[-1, -1])], DEFAULT_TOLERANCE, 4).unwrap();
        let reflection = close_group(&[signed_diagonal(&[1, -1])], DEFAULT_TOLERANCE, 4).unwrap();
        let verdict = steklov_isospectral_quotients(&rotation, &reflection, 6).unwrap();
        assert!(!verdict.isospectral);
        assert_eq!(verdict.first_difference, Some((1, 0, 1)));
    }

    #[test]
    fn cyclic_three_differs_from_trivial_at_degree_one() {
        let z3 = cyclic_rotation_group(3).unwrap();
        let trivial_float =
            close_group(&[Matrix::<f64>::identity(2)], DEFAULT_TOLERANCE, 2).unwrap();
        let verdict = steklov_isospectral_quotients(&z3, &trivial_float, 6).unwrap();
        assert!(!verdict.isospectral);
        assert_eq!(verdict.first_difference, Some((1, 0, 2)));
    }

    #[test]
    fn conjugate_groups_are_isospectral() {
        // Conjugate the Klein four rotation group by a signed permutation.
        let x = signed_diagonal(&[1, -1, -1]);
        let y = signed_diagonal(&[-1, 1, -1]);
        let group = close_group(&[x.clone(), y.clone()], DEFAULT_TOLERANCE, 8).unwrap();
        // Cyclic coordinate permutation x -> y -> z -> x.
        let mut q_entries = vec![Rat::zero(); 9];
        q_entries[1] = Rat::one();
        q_entries[5] = Rat::one();
        q_entries[6] = Rat::one();
        let q = Matrix::new(3, q_entries).unwrap();
        let conjugated: Vec<Matrix<Rat>> = [x, y]
            .iter()
            .map(|g| q.mul(g).mul(&q.transpose()))
            .collect();
        let conjugate_group = close_group(&conjugated, DEFAULT_TOLERANCE, 8).unwrap();
        let verdict = steklov_isospectral_quotients(&group, &conjugate_group, 10).unwrap();
        assert!(verdict.isospectral);
    }

    #[test]
    fn dtn_disk_modes() {
        let dtn = dtn_disk(&rat_int(1), 3).unwrap();
        let expected: Vec<Rat> = (0..=3).map(rat_int).collect();
        assert_eq!(dtn.eigenvalues(), &expected);

        let dtn = dtn_disk(&rat_int(2), 4).unwrap();
        assert_eq!(dtn.eigenvalue_of_mode(4), &rat_int(2));

        let dtn = dtn_disk(&rat(1, 2), 1).unwrap();
        assert_eq!(dtn.eigenvalue_of_mode(1), &rat_int(2));
    }

    #[test]
    fn cone_operator_equals_unit_disk_operator() {
        let disk = dtn_disk(&rat_int(1), 10).unwrap();
        for k in [1u64, 5, 7] {
            let cone = dtn_cone(k, 10).unwrap();
            assert_eq!(cone.eigenvalues(), disk.eigenvalues(), "k={k}");
        }
    }

    #[test]
    fn dtn_rejects_bad_parameters() {
        assert!(dtn_disk(&rat_int(0), 3).is_err());
        assert!(dtn_cone(0, 3).is_err());
    }
}
