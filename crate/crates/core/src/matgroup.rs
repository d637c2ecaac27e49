//! Finite matrix subgroups of O(n), closed from generators.
//!
//! Two entry modes are supported.  Exact rationals cover axis rotations by
//! pi, reflections and signed permutations; floats with a tolerance cover
//! rotations by 2*pi*p/q, whose entries are irrational.  Cyclotomic exact
//! arithmetic is deliberately not attempted.

use std::collections::HashMap;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::Deserialize;
use thiserror::Error;

use crate::rational::{parse_rat, Rat};

/// Default tolerance for float-mode orthogonality checks and deduplication.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Granularity of the rounded-entry hash used for float deduplication.
const DEDUP_GRID: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GroupError {
    #[error("generator {index} is not orthogonal within tolerance")]
    NotOrthogonal { index: usize },
    #[error("closure exceeded max_order {max_order}; group presumed infinite")]
    OrderExceeded { max_order: usize },
    #[error("matrix has {got} entries, expected {expected} for dimension {dim}")]
    BadMatrixSize {
        dim: usize,
        expected: usize,
        got: usize,
    },
    #[error("ambient dimension must be at least 2, got {0}")]
    BadDimension(usize),
    #[error("max_order must be at least 1")]
    BadMaxOrder,
    #[error("averaged dimension {value} at degree {degree} is not within 1e-6 of an integer")]
    NonIntegerDimension { degree: usize, value: f64 },
    #[error("ambient dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("radius must be positive")]
    NonPositiveRadius,
    #[error("cone order k must be at least 1")]
    BadConeOrder,
    #[error("element set is not closed under multiplication")]
    NotClosed,
    #[error("unknown matrix mode `{0}`")]
    UnknownMode(String),
    #[error("bad matrix entry `{entry}`: {message}")]
    BadEntry { entry: String, message: String },
}

/// Scalar usable as a matrix entry: exact rationals or tolerance floats.
pub trait GroupScalar:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Exact scalars compare with `==`; floats within a tolerance.
    const EXACT: bool;

    fn from_integer(n: i64) -> Self;
    fn approx_eq(&self, other: &Self, tolerance: f64) -> bool;
    fn to_f64(&self) -> f64;

    /// The integer this scalar represents, if it represents one: exactly in
    /// rational mode, within `tolerance` in float mode.
    fn to_integer_within(&self, tolerance: f64) -> Option<i64>;
}

impl GroupScalar for Rat {
    const EXACT: bool = true;

    fn from_integer(n: i64) -> Self {
        crate::rational::rat_int(n)
    }

    fn approx_eq(&self, other: &Self, _tolerance: f64) -> bool {
        self == other
    }

    fn to_f64(&self) -> f64 {
        crate::rational::rat_to_f64(self)
    }

    fn to_integer_within(&self, _tolerance: f64) -> Option<i64> {
        if self.is_integer() {
            i64::try_from(self.numer().clone()).ok()
        } else {
            None
        }
    }
}

impl GroupScalar for f64 {
    const EXACT: bool = false;

    fn from_integer(n: i64) -> Self {
        n as f64
    }

    fn approx_eq(&self, other: &Self, tolerance: f64) -> bool {
        (self - other).abs() <= tolerance
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn to_integer_within(&self, tolerance: f64) -> Option<i64> {
        let rounded = self.round();
        if (self - rounded).abs() <= tolerance {
            Some(rounded as i64)
        } else {
            None
        }
    }
}

/// Square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: GroupScalar> Matrix<T> {
    pub fn new(dim: usize, entries: Vec<T>) -> Result<Self, GroupError> {
        if entries.len() != dim * dim {
            return Err(GroupError::BadMatrixSize {
                dim,
                expected: dim * dim,
                got: entries.len(),
            });
        }
        Ok(Matrix { dim, entries })
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![T::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = T::one();
        }
        Matrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &T {
        &self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        debug_assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut entries = vec![T::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] =
                        entries[i * n + j].clone() + a.clone() * other.entry(k, j).clone();
                }
            }
        }
        Matrix { dim: n, entries }
    }

    pub fn transpose(&self) -> Matrix<T> {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                entries.push(self.entry(i, j).clone());
            }
        }
        Matrix { dim: n, entries }
    }

    pub fn trace(&self) -> T {
        let mut t = T::zero();
        for i in 0..self.dim {
            t = t + self.entry(i, i).clone();
        }
        t
    }

    pub fn approx_eq(&self, other: &Matrix<T>, tolerance: f64) -> bool {
        self.dim == other.dim
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.approx_eq(b, tolerance))
    }

    /// Max-norm distance of `MᵀM` from the identity, as f64.
    fn orthogonality_defect(&self) -> f64 {
        let gram = self.transpose().mul(self);
        let n = self.dim;
        let mut defect = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let target = if i == j { 1.0 } else { 0.0 };
                defect = defect.max((gram.entry(i, j).to_f64() - target).abs());
            }
        }
        defect
    }

    fn is_orthogonal(&self, tolerance: f64) -> bool {
        if T::EXACT {
            let gram = self.transpose().mul(self);
            gram == Matrix::identity(self.dim)
        } else {
            self.orthogonality_defect() <= tolerance
        }
    }

    fn dedup_key(&self) -> Vec<i64> {
        self.entries
            .iter()
            .map(|e| (e.to_f64() / DEDUP_GRID).round() as i64)
            .collect()
    }
}

/// A finite subgroup of O(n) with its full element list.
///
/// The element list is closed under products and inverses (verified at
/// construction), contains the identity at index 0, and is ordered by the
/// breadth-first closure, so all downstream reductions are deterministic.
#[derive(Debug, Clone)]
pub struct OrthogonalGroup<T> {
    dim: usize,
    elements: Vec<Matrix<T>>,
    generators: Vec<Matrix<T>>,
    tolerance: f64,
}

impl<T: GroupScalar> OrthogonalGroup<T> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix<T>] {
        &self.elements
    }

    pub fn generators(&self) -> &[Matrix<T>] {
        &self.generators
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn contains(&self, m: &Matrix<T>) -> bool {
        self.elements.iter().any(|e| e.approx_eq(m, self.tolerance))
    }

    /// Wrap an explicit element list, verifying closure, the identity and
    /// per-element orthogonality.
    pub fn from_elements(
        dim: usize,
        elements: Vec<Matrix<T>>,
        tolerance: f64,
    ) -> Result<Self, GroupError> {
        if dim < 2 {
            return Err(GroupError::BadDimension(dim));
        }
        for (index, m) in elements.iter().enumerate() {
            if m.dim() != dim {
                return Err(GroupError::BadMatrixSize {
                    dim,
                    expected: dim * dim,
                    got: m.entries().len(),
                });
            }
            if !m.is_orthogonal(tolerance) {
                return Err(GroupError::NotOrthogonal { index });
            }
        }
        let identity = Matrix::identity(dim);
        let mut ordered: Vec<Matrix<T>> = vec![identity.clone()];
        for m in elements {
            if !ordered.iter().any(|e| e.approx_eq(&m, tolerance)) {
                ordered.push(m);
            }
        }
        let group = OrthogonalGroup {
            dim,
            elements: ordered,
            generators: Vec::new(),
            tolerance,
        };
        for a in &group.elements {
            for b in &group.elements {
                if !group.contains(&a.mul(b)) {
                    return Err(GroupError::NotClosed);
                }
            }
            if !group.contains(&a.transpose()) {
                return Err(GroupError::NotClosed);
            }
        }
        Ok(group)
    }

    pub fn trivial(dim: usize) -> Result<Self, GroupError> {
        close_group(&[Matrix::identity(dim)], DEFAULT_TOLERANCE, 1)
    }
}

/// Breadth-first closure of a generator list into a finite group.
///
/// Deduplication hashes entries rounded at the 1e-6 grid; a bucket hit is
/// confirmed by full comparison, and in float mode a miss falls back to a
/// scan so grid-straddling duplicates cannot slip through.  Closure past
/// `max_order` elements aborts with `OrderExceeded`.
pub fn close_group<T: GroupScalar>(
    generators: &[Matrix<T>],
    tolerance: f64,
    max_order: usize,
) -> Result<OrthogonalGroup<T>, GroupError> {
    if max_order == 0 {
        return Err(GroupError::BadMaxOrder);
    }
    let dim = generators.first().map(|g| g.dim()).unwrap_or(2);
    if dim < 2 {
        return Err(GroupError::BadDimension(dim));
    }
    for (index, g) in generators.iter().enumerate() {
        if g.dim() != dim {
            return Err(GroupError::BadMatrixSize {
                dim,
                expected: dim * dim,
                got: g.entries().len(),
            });
        }
        if !g.is_orthogonal(tolerance) {
            return Err(GroupError::NotOrthogonal { index });
        }
    }

    let mut elements: Vec<Matrix<T>> = Vec::new();
    let mut buckets: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();

    let mut frontier: Vec<usize> = Vec::new();
    let identity = Matrix::identity(dim);
    buckets.entry(identity.dedup_key()).or_default().push(0);
    elements.push(identity);
    frontier.push(0);

    while let Some(current) = frontier.pop() {
        for g in generators {
            let product = elements[current].mul(g);
            if find_element(&buckets, &elements, &product, tolerance).is_some() {
                continue;
            }
            if !product.is_orthogonal(tolerance) {
                return Err(GroupError::NotOrthogonal {
                    index: elements.len(),
                });
            }
            let index = elements.len();
            if index >= max_order {
                return Err(GroupError::OrderExceeded { max_order });
            }
            buckets.entry(product.dedup_key()).or_default().push(index);
            elements.push(product);
            frontier.push(index);
        }
    }

    // A finite set closed under right multiplication by generators and
    // containing the identity is a group; verify inverses via transposes.
    for m in &elements {
        if find_element(&buckets, &elements, &m.transpose(), tolerance).is_none() {
            return Err(GroupError::NotClosed);
        }
    }

    Ok(OrthogonalGroup {
        dim,
        elements,
        generators: generators.to_vec(),
        tolerance,
    })
}

/// Bucket fast path with a scan backstop: a bucket hit is confirmed by full
/// comparison; in float mode a miss falls back to a scan so duplicates that
/// straddle a grid boundary cannot slip through.  Equal rationals produce
/// equal keys, so in exact mode a miss is conclusive.
fn find_element<T: GroupScalar>(
    buckets: &HashMap<Vec<i64>, Vec<usize>>,
    elements: &[Matrix<T>],
    m: &Matrix<T>,
    tolerance: f64,
) -> Option<usize> {
    if let Some(candidates) = buckets.get(&m.dedup_key()) {
        for &i in candidates {
            if elements[i].approx_eq(m, tolerance) {
                return Some(i);
            }
        }
    }
    if T::EXACT {
        None
    } else {
        elements.iter().position(|e| e.approx_eq(m, tolerance))
    }
}

/// Rotation of the plane by 2*pi*p/q, float entries.
pub fn plane_rotation(p: i64, q: i64) -> Matrix<f64> {
    let theta = 2.0 * std::f64::consts::PI * (p as f64) / (q as f64);
    let (sin, cos) = theta.sin_cos();
    Matrix::new(2, vec![cos, -sin, sin, cos]).expect("2x2")
}

/// The cyclic group Z_k of plane rotations, float entries.
pub fn cyclic_rotation_group(k: usize) -> Result<OrthogonalGroup<f64>, GroupError> {
    if k == 0 {
        return Err(GroupError::BadConeOrder);
    }
    close_group(&[plane_rotation(1, k as i64)], DEFAULT_TOLERANCE, k + 1)
}

/// Entry mode declared by a group description.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, serde::Serialize)]
pub enum MatrixMode {
    #[serde(rename = "rational")]
    Rational,
    #[serde(rename = "float")]
    Float,
}

/// JSON description of a matrix group: dimension, entry mode, row-major
/// generator matrices as strings, and the closure cap.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub dim: usize,
    pub mode: MatrixMode,
    pub generators: Vec<Vec<String>>,
    pub max_order: usize,
    #[serde(default)]
    pub tolerance: Option<f64>,
}

/// A closed group in either entry mode, for mode-erased callers.
#[derive(Debug, Clone)]
pub enum AnyGroup {
    Rational(OrthogonalGroup<Rat>),
    Float(OrthogonalGroup<f64>),
}

impl AnyGroup {
    pub fn dim(&self) -> usize {
        match self {
            AnyGroup::Rational(g) => g.dim(),
            AnyGroup::Float(g) => g.dim(),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            AnyGroup::Rational(g) => g.order(),
            AnyGroup::Float(g) => g.order(),
        }
    }
}

/// Matrices parsed from string entries in either mode.
#[derive(Debug, Clone)]
pub enum AnyMatrices {
    Rational(Vec<Matrix<Rat>>),
    Float(Vec<Matrix<f64>>),
}

/// Parse row-major string matrices.  Rational mode requires `"p/q"` entries;
/// float mode accepts decimal strings and `"p/q"`.
pub fn parse_matrices(
    dim: usize,
    mode: MatrixMode,
    rows: &[Vec<String>],
) -> Result<AnyMatrices, GroupError> {
    match mode {
        MatrixMode::Rational => {
            let matrices = rows
                .iter()
                .map(|row| {
                    let entries = row
                        .iter()
                        .map(|e| {
                            parse_rat(e).map_err(|err| GroupError::BadEntry {
                                entry: e.clone(),
                                message: err.to_string(),
                            })
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    Matrix::new(dim, entries)
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(AnyMatrices::Rational(matrices))
        }
        MatrixMode::Float => {
            let matrices = rows
                .iter()
                .map(|row| {
                    let entries = row
                        .iter()
                        .map(|e| parse_float_entry(e))
                        .collect::<Result<Vec<_>, _>>()?;
                    Matrix::new(dim, entries)
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(AnyMatrices::Float(matrices))
        }
    }
}

impl GroupSpec {
    /// Close the described group.
    pub fn build(&self) -> Result<AnyGroup, GroupError> {
        let tolerance = self.tolerance.unwrap_or(DEFAULT_TOLERANCE);
        match parse_matrices(self.dim, self.mode, &self.generators)? {
            AnyMatrices::Rational(generators) => Ok(AnyGroup::Rational(close_group(
                &generators,
                tolerance,
                self.max_order,
            )?)),
            AnyMatrices::Float(generators) => Ok(AnyGroup::Float(close_group(
                &generators,
                tolerance,
                self.max_order,
            )?)),
        }
    }
}

fn parse_float_entry(s: &str) -> Result<f64, GroupError> {
    if let Ok(v) = s.trim().parse::<f64>() {
        if v.is_finite() {
            return Ok(v);
        }
    }
    if let Ok(r) = parse_rat(s) {
        return Ok(crate::rational::rat_to_f64(&r));
    }
    Err(GroupError::BadEntry {
        entry: s.to_string(),
        message: "expected a decimal or p/q".to_string(),
    })
}

/// Signed diagonal matrix with the given signs, exact entries.
pub fn signed_diagonal(signs: &[i64]) -> Matrix<Rat> {
    let n = signs.len();
    let mut entries = vec![Rat::zero(); n * n];
    for (i, &sign) in signs.iter().enumerate() {
        entries[i * n + i] = Rat::from_integer(sign.into());
    }
    Matrix::new(n, entries).expect("square")
}
