//! Exact quantities behind the eigenvalue upper bounds: the lens-quotient
//! first eigenvalue as a minimal L1 lattice norm, the isoperimetric quotient
//! law, the orbifold Euler characteristic, and the two-dimensional regime
//! classifier.
//!
//! The universal constants in the bounds are non-constructive, so they are
//! caller-supplied parameters everywhere; nothing here fabricates values.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{rat_int, rat_to_f64, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("q must be at least 1")]
    ZeroModulus,
    #[error("p must have at least one component")]
    EmptyExponentVector,
    #[error("q = j^m overflows; use smaller parameters")]
    Overflow,
    #[error("cell dimension must be 0, 1 or 2, got {0}")]
    BadCellDimension(u8),
    #[error("isotropy order must be at least 1")]
    ZeroIsotropy,
    #[error("constant {name} must be positive")]
    NonPositiveConstant { name: &'static str },
    #[error("isoperimetric ratio must be positive")]
    NonPositiveRatio,
    #[error("dimension must be at least 2")]
    BadDimension,
    #[error("k must be at least 1")]
    ZeroK,
}

/// Parameters of the lens-type quotient: the cyclic group of order `q`
/// acting on C^m by coordinatewise rotations `exp(2*pi*i*p_j/q)`.
///
/// The associated congruence lattice is
/// `L(q; p) = {a in Z^m : a . p == 0 mod q}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LensParams {
    q: u64,
    p: Vec<i64>,
}

impl LensParams {
    pub fn new(q: u64, p: Vec<i64>) -> Result<Self, BoundsError> {
        if q == 0 {
            return Err(BoundsError::ZeroModulus);
        }
        if p.is_empty() {
            return Err(BoundsError::EmptyExponentVector);
        }
        let reduced = p.into_iter().map(|x| x.rem_euclid(q as i64)).collect();
        Ok(LensParams { q, p: reduced })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> &[i64] {
        &self.p
    }

    /// Number of complex coordinates; the ambient real dimension is `2m`.
    pub fn m(&self) -> usize {
        self.p.len()
    }

    pub fn ambient_dim(&self) -> usize {
        2 * self.m()
    }

    /// `q = 1` or an all-zero `p` makes the lattice all of Z^m and the
    /// group trivial.
    pub fn is_trivial_lattice(&self) -> bool {
        self.q == 1 || self.p.iter().all(|&x| x == 0)
    }

    fn is_feasible(&self, a: &[i64]) -> bool {
        let mut dot: i128 = 0;
        for (&ai, &pi) in a.iter().zip(&self.p) {
            dot += ai as i128 * pi as i128;
        }
        dot.rem_euclid(self.q as i128) == 0
    }
}

/// The minimum L1 norm over nonzero lattice vectors, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LensMinimum {
    pub sigma2: u64,
    pub witness: Vec<i64>,
}

/// `sigma_2` of the lens-type quotient: the minimum L1 norm of a nonzero
/// vector in `L(q; p)`, found by exhausting the shells `sum |a_i| = t` for
/// `t = 1, 2, ...`.  The vector `(q, 0, ..., 0)` is always feasible, so the
/// search terminates by `t = q`.
///
/// Shell enumeration is exhaustive on purpose: walk-based formulations admit
/// self-canceling step sequences whose net vector is zero, while every
/// vector visited here is nonzero by construction.
pub fn sigma2_lens(params: &LensParams) -> LensMinimum {
    for t in 1..=params.q() {
        if let Some(witness) = search_shell(params, t) {
            let norm: u64 = witness.iter().map(|a| a.unsigned_abs()).sum();
            assert!(
                norm == t && witness.iter().any(|&a| a != 0) && params.is_feasible(&witness),
                "witness re-verification failed"
            );
            return LensMinimum { sigma2: t, witness };
        }
    }
    unreachable!("shell t = q always contains (q, 0, ..., 0)")
}

/// First feasible vector with `sum |a_i| = t` in the deterministic
/// enumeration order, if any.
fn search_shell(params: &LensParams, t: u64) -> Option<Vec<i64>> {
    let mut magnitudes = vec![0i64; params.m()];
    search_magnitudes(params, t as i64, 0, &mut magnitudes)
}

fn search_magnitudes(
    params: &LensParams,
    remaining: i64,
    index: usize,
    magnitudes: &mut Vec<i64>,
) -> Option<Vec<i64>> {
    if index == magnitudes.len() - 1 {
        magnitudes[index] = remaining;
        return search_signs(params, magnitudes);
    }
    for value in 0..=remaining {
        magnitudes[index] = value;
        if let Some(found) = search_magnitudes(params, remaining - value, index + 1, magnitudes) {
            return Some(found);
        }
    }
    magnitudes[index] = 0;
    None
}

fn search_signs(params: &LensParams, magnitudes: &[i64]) -> Option<Vec<i64>> {
    let nonzero: Vec<usize> = (0..magnitudes.len())
        .filter(|&i| magnitudes[i] != 0)
        .collect();
    let mut candidate = magnitudes.to_vec();
    for pattern in 0u32..(1 << nonzero.len()) {
        for (bit, &i) in nonzero.iter().enumerate() {
            candidate[i] = if pattern & (1 << bit) == 0 {
                magnitudes[i]
            } else {
                -magnitudes[i]
            };
        }
        if params.is_feasible(&candidate) {
            return Some(candidate);
        }
    }
    None
}

/// Sharpness family `q = j^m`, `p = (1, j, j^2, ..., j^{m-1})`: true iff
/// `sigma2_lens` equals `j = q^{1/m}` exactly.
pub fn verify_sharpness_family(j: u64, m: usize) -> Result<bool, BoundsError> {
    if m == 0 {
        return Err(BoundsError::EmptyExponentVector);
    }
    if j == 0 {
        return Err(BoundsError::ZeroModulus);
    }
    let q = j.checked_pow(m as u32).ok_or(BoundsError::Overflow)?;
    let mut p: Vec<i64> = Vec::with_capacity(m);
    let mut power: u64 = 1;
    for _ in 0..m {
        p.push(i64::try_from(power).map_err(|_| BoundsError::Overflow)?);
        power = power.checked_mul(j).ok_or(BoundsError::Overflow)?;
    }
    let params = LensParams::new(q, p)?;
    Ok(sigma2_lens(&params).sigma2 == j)
}

/// The isoperimetric ratio of an order-q isometric quotient:
/// `I(O) = q^{-1/n} I(Omega)`.  Since the n-th root is usually irrational,
/// the result is kept symbolic as the triple `(I(Omega), q, n)` together
/// with a float evaluation; when `q` is a perfect n-th power the value is
/// also available exactly.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsoperimetricQuotient {
    #[serde(with = "crate::rational::rat_string")]
    pub base_ratio: Rat,
    pub group_order: u64,
    pub dim: u32,
    pub value: f64,
}

impl IsoperimetricQuotient {
    /// Exact value when `q^{1/n}` is an integer.
    pub fn exact_value(&self) -> Option<Rat> {
        integer_nth_root(self.group_order, self.dim)
            .map(|root| &self.base_ratio / rat_int(root as i64))
    }
}

pub fn isoperimetric_quotient(
    base_ratio: &Rat,
    group_order: u64,
    dim: u32,
) -> Result<IsoperimetricQuotient, BoundsError> {
    if *base_ratio <= Rat::zero() {
        return Err(BoundsError::NonPositiveRatio);
    }
    if group_order == 0 {
        return Err(BoundsError::ZeroModulus);
    }
    if dim < 2 {
        return Err(BoundsError::BadDimension);
    }
    let value = rat_to_f64(base_ratio) * (group_order as f64).powf(-1.0 / dim as f64);
    Ok(IsoperimetricQuotient {
        base_ratio: base_ratio.clone(),
        group_order,
        dim,
        value,
    })
}

/// Largest-integer check for `root^n == q`.
fn integer_nth_root(q: u64, n: u32) -> Option<u64> {
    let guess = (q as f64).powf(1.0 / n as f64).round() as u64;
    (guess.saturating_sub(1)..=guess + 1).find(|&candidate| candidate.checked_pow(n) == Some(q))
}

/// One cell of an isotropy-constant cell division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub dim: u8,
    pub isotropy: u64,
}

/// A cell division of an orbifold in which the isotropy group is constant
/// on the interior of each cell.
///
/// This is a plain alternating-sum calculator; whether the complex models a
/// genuine orbifold is the caller's responsibility and is not verified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellComplex {
    cells: Vec<Cell>,
}

impl CellComplex {
    pub fn new(cells: Vec<Cell>) -> Result<Self, BoundsError> {
        for cell in &cells {
            if cell.dim > 2 {
                return Err(BoundsError::BadCellDimension(cell.dim));
            }
            if cell.isotropy == 0 {
                return Err(BoundsError::ZeroIsotropy);
            }
        }
        Ok(CellComplex { cells })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Disjoint union of two complexes.
    pub fn disjoint_union(&self, other: &CellComplex) -> CellComplex {
        let mut cells = self.cells.clone();
        cells.extend_from_slice(&other.cells);
        CellComplex { cells }
    }

    /// Cell structure of a smooth disk: one boundary vertex, the boundary
    /// circle, one face.
    pub fn disk() -> CellComplex {
        CellComplex {
            cells: vec![
                Cell {
                    dim: 0,
                    isotropy: 1,
                },
                Cell {
                    dim: 1,
                    isotropy: 1,
                },
                Cell {
                    dim: 2,
                    isotropy: 1,
                },
            ],
        }
    }

    /// Cell structure of the order-k cone: the disk division refined by the
    /// interior cone vertex and a radial edge out to the boundary.
    pub fn cone(k: u64) -> Result<CellComplex, BoundsError> {
        if k == 0 {
            return Err(BoundsError::ZeroIsotropy);
        }
        Ok(CellComplex {
            cells: vec![
                Cell {
                    dim: 0,
                    isotropy: 1,
                },
                Cell {
                    dim: 0,
                    isotropy: k,
                },
                Cell {
                    dim: 1,
                    isotropy: 1,
                },
                Cell {
                    dim: 1,
                    isotropy: 1,
                },
                Cell {
                    dim: 2,
                    isotropy: 1,
                },
            ],
        })
    }
}

/// `chi = sum_i (-1)^{dim c_i} / |Iso(c_i)|`, exactly.
pub fn euler_characteristic(complex: &CellComplex) -> Rat {
    let mut chi = Rat::zero();
    for cell in complex.cells() {
        let term = rat_int(1) / rat_int(cell.isotropy as i64);
        if cell.dim % 2 == 0 {
            chi += term;
        } else {
            chi -= term;
        }
    }
    chi
}

/// Inputs of the two-dimensional upper bound: the Euler characteristic and
/// the boundary component counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRegimeInput {
    #[serde(with = "crate::rational::rat_string")]
    pub chi: Rat,
    pub r: u64,
    pub s: u64,
}

/// Which case of the two-dimensional bound applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    /// `chi + r + s/2 >= 0`: the bound is `B*k`.
    NonnegativeExcess,
    /// `chi + r + s/2 < 0`: the bound is `-A*(chi + r + s/2) + B*k`.
    NegativeExcess,
}

/// Status of the conformal invariant attached to a bound report.  Only the
/// regime flag is tracked; the invariant itself is out of reach without an
/// explicit admissible extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum ConformalFlag {
    /// An admissible extension with nonnegative Ricci curvature is known,
    /// which forces the invariant to vanish.
    #[serde(rename = "zero")]
    Zero,
    #[serde(rename = "positive_unknown")]
    PositiveUnknown,
    #[default]
    #[serde(rename = "unspecified")]
    Unspecified,
}

/// Evaluated right-hand side of the two-dimensional bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegimeReport {
    pub regime: Regime,
    #[serde(with = "crate::rational::rat_string")]
    pub excess: Rat,
    #[serde(with = "crate::rational::rat_string")]
    pub rhs: Rat,
    pub k: u64,
    #[serde(with = "crate::rational::rat_string")]
    pub a: Rat,
    #[serde(with = "crate::rational::rat_string")]
    pub b: Rat,
    pub conformal: ConformalFlag,
}

/// Classify the regime of the 2D bound and evaluate its right side with
/// caller-supplied constants `A` and `B`.
pub fn bound_regime(
    input: &BoundRegimeInput,
    k: u64,
    a: &Rat,
    b: &Rat,
    conformal: ConformalFlag,
) -> Result<RegimeReport, BoundsError> {
    if k == 0 {
        return Err(BoundsError::ZeroK);
    }
    if *a <= Rat::zero() {
        return Err(BoundsError::NonPositiveConstant { name: "A" });
    }
    if *b <= Rat::zero() {
        return Err(BoundsError::NonPositiveConstant { name: "B" });
    }
    let excess = &input.chi + rat_int(input.r as i64) + rat_int(input.s as i64) / rat_int(2);
    let bk = b * rat_int(k as i64);
    let (regime, rhs) = if excess >= Rat::zero() {
        (Regime::NonnegativeExcess, bk)
    } else {
        (Regime::NegativeExcess, -(a * &excess) + bk)
    };
    Ok(RegimeReport {
        regime,
        excess,
        rhs,
        k,
        a: a.clone(),
        b: b.clone(),
        conformal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn trivial_modulus_gives_norm_one() {
        let params = LensParams::new(1, vec![0, 0]).unwrap();
        assert!(params.is_trivial_lattice());
        let result = sigma2_lens(&params);
        assert_eq!(result.sigma2, 1);
        assert_eq!(result.witness.iter().map(|a| a.abs()).sum::<i64>(), 1);
    }

    #[test]
    fn witness_is_always_verified_feasible() {
        for (q, p) in [
            (9u64, vec![1, 3]),
            (5, vec![1, 2]),
            (7, vec![2, 3]),
            (12, vec![4, 6]),
        ] {
            let params = LensParams::new(q, p).unwrap();
            let result = sigma2_lens(&params);
            assert!(params.is_feasible(&result.witness));
            assert!(result.witness.iter().any(|&a| a != 0));
            assert_eq!(
                result.witness.iter().map(|a| a.unsigned_abs()).sum::<u64>(),
                result.sigma2
            );
            assert!(result.sigma2 >= 1 && result.sigma2 <= q);
        }
    }

    #[test]
    fn shells_below_the_minimum_are_infeasible() {
        let params = LensParams::new(9, vec![1, 3]).unwrap();
        let result = sigma2_lens(&params);
        assert_eq!(result.sigma2, 3);
        for t in 1..result.sigma2 {
            assert!(search_shell(&params, t).is_none(), "shell {t}");
        }
    }

    #[test]
    fn five_one_two_has_minimum_three() {
        // Shells 1 and 2 contain no vector with a.p == 0 mod 5; (2, -1) and
        // (1, 2) sit in shell 3.
        let params = LensParams::new(5, vec![1, 2]).unwrap();
        let result = sigma2_lens(&params);
        assert_eq!(result.sigma2, 3);
    }

    #[test]
    fn sharpness_family_examples() {
        assert!(verify_sharpness_family(2, 2).unwrap());
        assert!(verify_sharpness_family(3, 2).unwrap());
        assert!(verify_sharpness_family(2, 3).unwrap());
        // Degenerate but consistent: j = 1 collapses to the trivial lattice.
        assert!(verify_sharpness_family(1, 2).unwrap());
    }

    #[test]
    fn sharpness_overflow_is_guarded() {
        assert!(matches!(
            verify_sharpness_family(u64::MAX, 3),
            Err(BoundsError::Overflow)
        ));
    }

    #[test]
    fn isoperimetric_quotient_examples() {
        let unit = rat_int(7);
        let unchanged = isoperimetric_quotient(&unit, 1, 4).unwrap();
        assert_eq!(unchanged.exact_value(), Some(rat_int(7)));

        let halved = isoperimetric_quotient(&unit, 16, 4).unwrap();
        assert_eq!(halved.exact_value(), Some(rat(7, 2)));

        let cone = isoperimetric_quotient(&rat_int(2), 3, 2).unwrap();
        assert!(cone.exact_value().is_none());
        assert!((cone.value - 2.0 / 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn disk_complex_has_chi_one() {
        assert_eq!(euler_characteristic(&CellComplex::disk()), rat_int(1));
    }

    #[test]
    fn cone_complex_has_chi_one_over_k() {
        for k in [2u64, 3, 5, 7] {
            let complex = CellComplex::cone(k).unwrap();
            assert_eq!(euler_characteristic(&complex), rat(1, k as i64));
        }
    }

    #[test]
    fn chi_is_additive_over_disjoint_union() {
        let a = CellComplex::cone(3).unwrap();
        let b = CellComplex::disk();
        assert_eq!(
            euler_characteristic(&a.disjoint_union(&b)),
            euler_characteristic(&a) + euler_characteristic(&b)
        );
    }

    #[test]
    fn regime_examples() {
        // Disk: chi = 1, r = 1, s = 0.
        let disk = BoundRegimeInput {
            chi: rat_int(1),
            r: 1,
            s: 0,
        };
        let report =
            bound_regime(&disk, 3, &rat_int(1), &rat_int(10), ConformalFlag::Zero).unwrap();
        assert_eq!(report.regime, Regime::NonnegativeExcess);
        assert_eq!(report.rhs, rat_int(30));

        // chi = -3, r = 1, s = 0, k = 1, A = B = 1: rhs = 2 + 1.
        let negative = BoundRegimeInput {
            chi: rat_int(-3),
            r: 1,
            s: 0,
        };
        let report = bound_regime(
            &negative,
            1,
            &rat_int(1),
            &rat_int(1),
            ConformalFlag::Unspecified,
        )
        .unwrap();
        assert_eq!(report.regime, Regime::NegativeExcess);
        assert_eq!(report.rhs, rat_int(3));

        // Cone boundary data always lands in the nonnegative regime.
        let cone = BoundRegimeInput {
            chi: rat(1, 7),
            r: 1,
            s: 0,
        };
        let report = bound_regime(&cone, 2, &rat_int(1), &rat_int(1), ConformalFlag::Zero).unwrap();
        assert_eq!(report.regime, Regime::NonnegativeExcess);
    }

    #[test]
    fn regime_rejects_bad_constants() {
        let input = BoundRegimeInput {
            chi: rat_int(0),
            r: 0,
            s: 0,
        };
        assert!(bound_regime(
            &input,
            1,
            &rat_int(0),
            &rat_int(1),
            ConformalFlag::Unspecified
        )
        .is_err());
        assert!(bound_regime(
            &input,
            1,
            &rat_int(1),
            &rat_int(-2),
            ConformalFlag::Unspecified
        )
        .is_err());
        assert!(bound_regime(
            &input,
            0,
            &rat_int(1),
            &rat_int(1),
            ConformalFlag::Unspecified
        )
        .is_err());
    }
}
