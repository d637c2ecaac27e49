//! Shared test support: a brute-force Reynolds-operator oracle for invariant
//! harmonic dimensions.
//!
//! The oracle is deliberately independent of the character-averaging
//! pipeline it checks: it materializes an explicit monomial basis of the
//! harmonic polynomials, averages the group action on that basis, and takes
//! the rank of the averaged family.

use std::collections::BTreeMap;

use steklov::matgroup::{GroupScalar, Matrix, OrthogonalGroup};
use steklov::rational::{rat_int, Rat};

/// Pivot threshold for float-mode rank computation.  The averaged operator
/// is a projection, so numerical pivots sit near 0 or well away from it.
const RANK_PIVOT_TOLERANCE: f64 = 1e-6;

type MultiIndex = Vec<u8>;
type Poly<T> = BTreeMap<MultiIndex, T>;

/// All exponent vectors of total degree `degree` in `vars` variables,
/// lexicographically ordered.
fn monomials(vars: usize, degree: usize) -> Vec<MultiIndex> {
    fn extend(vars: usize, degree: usize, prefix: &mut MultiIndex, out: &mut Vec<MultiIndex>) {
        if prefix.len() == vars - 1 {
            let mut index = prefix.clone();
            index.push(degree as u8);
            out.push(index);
            return;
        }
        for e in (0..=degree).rev() {
            prefix.push(e as u8);
            extend(vars, degree - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(vars, degree, &mut Vec::new(), &mut out);
    out
}

/// Exact basis of the degree-`degree` harmonic polynomials in `vars`
/// variables, as coefficient vectors over the monomial basis: the nullspace
/// of the Laplacian map into degree `degree - 2`.
fn harmonic_basis(vars: usize, degree: usize) -> Vec<Vec<Rat>> {
    let source = monomials(vars, degree);
    if degree < 2 {
        return (0..source.len())
            .map(|i| {
                let mut v = vec![Rat::from_integer(0.into()); source.len()];
                v[i] = rat_int(1);
                v
            })
            .collect();
    }
    let target = monomials(vars, degree - 2);
    let target_index: BTreeMap<&MultiIndex, usize> =
        target.iter().enumerate().map(|(i, m)| (m, i)).collect();

    // Laplacian matrix: rows indexed by degree-2 monomials, columns by
    // degree monomials.
    let mut laplacian = vec![vec![Rat::from_integer(0.into()); source.len()]; target.len()];
    for (col, alpha) in source.iter().enumerate() {
        for i in 0..vars {
            if alpha[i] >= 2 {
                let mut beta = alpha.clone();
                beta[i] -= 2;
                let row = target_index[&beta];
                let coefficient = rat_int(alpha[i] as i64) * rat_int(alpha[i] as i64 - 1);
                laplacian[row][col] += coefficient;
            }
        }
    }
    nullspace(&laplacian, source.len())
}

/// Nullspace basis of an exact rational matrix via Gauss-Jordan elimination.
fn nullspace(matrix: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let zero = Rat::from_integer(0.into());
    let mut m: Vec<Vec<Rat>> = matrix.to_vec();
    let rows = m.len();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        let pivot_row = (row..rows).find(|&r| m[r][col] != zero);
        let Some(pivot_row) = pivot_row else { continue };
        m.swap(row, pivot_row);
        let pivot = m[row][col].clone();
        for entry in &mut m[row][col..cols] {
            *entry = entry.clone() / pivot.clone();
        }
        let pivot_row_values = m[row].clone();
        for (r, current) in m.iter_mut().enumerate() {
            if r != row && current[col] != zero {
                let factor = current[col].clone();
                for (entry, pivot_entry) in current[col..cols]
                    .iter_mut()
                    .zip(&pivot_row_values[col..cols])
                {
                    *entry = entry.clone() - factor.clone() * pivot_entry.clone();
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }

    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let is_pivot = |c: usize| pivot_cols.contains(&c);
    let mut basis = Vec::new();
    for free_col in (0..cols).filter(|&c| !is_pivot(c)) {
        let mut v = vec![zero.clone(); cols];
        v[free_col] = rat_int(1);
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[r][free_col].clone();
        }
        basis.push(v);
    }
    basis
}

fn rat_to_scalar<T: GroupScalar>(r: &Rat) -> T {
    let numer = i64::try_from(r.numer().clone()).expect("oracle coefficients stay small");
    let denom = i64::try_from(r.denom().clone()).expect("oracle coefficients stay small");
    T::from_integer(numer) / T::from_integer(denom)
}

/// Expand `(gamma . monomial)(x) = prod_i (sum_j gamma_{ji} x_j)^{alpha_i}`.
fn act_on_monomial<T: GroupScalar>(gamma: &Matrix<T>, alpha: &MultiIndex) -> Poly<T> {
    let vars = gamma.dim();
    let mut result: Poly<T> = BTreeMap::new();
    result.insert(vec![0u8; vars], T::one());
    for (i, &exponent) in alpha.iter().enumerate() {
        for _ in 0..exponent {
            // Multiply by the linear form substituted for x_i.
            let mut next: Poly<T> = BTreeMap::new();
            for (index, coefficient) in &result {
                for j in 0..vars {
                    let entry = gamma.entry(j, i).clone();
                    if entry.is_zero() {
                        continue;
                    }
                    let mut bumped = index.clone();
                    bumped[j] += 1;
                    let term = coefficient.clone() * entry;
                    next.entry(bumped)
                        .and_modify(|c| *c = c.clone() + term.clone())
                        .or_insert(term);
                }
            }
            result = next;
        }
    }
    result
}

/// Dimension of the Gamma-invariant harmonic polynomials of the given
/// degree, as the rank of the Reynolds-averaged harmonic basis.
pub fn reynolds_invariant_dim<T: GroupScalar>(group: &OrthogonalGroup<T>, degree: usize) -> u64 {
    let vars = group.dim();
    let basis = harmonic_basis(vars, degree);
    let monomial_list = monomials(vars, degree);
    let monomial_index: BTreeMap<&MultiIndex, usize> = monomial_list
        .iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();

    // Averaged action of each group element on each monomial, reused across
    // basis polynomials.
    let mut averaged_rows: Vec<Vec<T>> = Vec::with_capacity(basis.len());
    let order = T::from_integer(group.order() as i64);
    let mut monomial_averages: Vec<Vec<T>> = vec![Vec::new(); monomial_list.len()];
    for (slot, alpha) in monomial_list.iter().enumerate() {
        let mut total = vec![T::zero(); monomial_list.len()];
        for gamma in group.elements() {
            for (index, coefficient) in act_on_monomial(gamma, alpha) {
                let target = monomial_index[&index];
                total[target] = total[target].clone() + coefficient;
            }
        }
        monomial_averages[slot] = total.into_iter().map(|c| c / order.clone()).collect();
    }

    for coefficients in &basis {
        let mut row = vec![T::zero(); monomial_list.len()];
        for (slot, coefficient) in coefficients.iter().enumerate() {
            if *coefficient == Rat::from_integer(0.into()) {
                continue;
            }
            let scalar: T = rat_to_scalar(coefficient);
            for (target, value) in monomial_averages[slot].iter().enumerate() {
                row[target] = row[target].clone() + scalar.clone() * value.clone();
            }
        }
        averaged_rows.push(row);
    }

    rank(averaged_rows)
}

/// Rank by Gaussian elimination; exact pivots in rational mode, a 1e-6
/// pivot threshold in float mode.
fn rank<T: GroupScalar>(mut rows: Vec<Vec<T>>) -> u64 {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0u64;
    let mut row = 0usize;
    for col in 0..cols {
        // Largest pivot keeps the float path stable; harmless when exact.
        let pivot_row = (row..rows.len())
            .filter(|&r| {
                if T::EXACT {
                    !rows[r][col].is_zero()
                } else {
                    rows[r][col].to_f64().abs() > RANK_PIVOT_TOLERANCE
                }
            })
            .max_by(|&a, &b| {
                rows[a][col]
                    .to_f64()
                    .abs()
                    .partial_cmp(&rows[b][col].to_f64().abs())
                    .expect("finite pivots")
            });
        let Some(pivot_row) = pivot_row else { continue };
        rows.swap(row, pivot_row);
        let pivot = rows[row][col].clone();
        let pivot_row_values = rows[row].clone();
        for current in rows.iter_mut().skip(row + 1) {
            if current[col].is_zero() {
                continue;
            }
            let factor = current[col].clone() / pivot.clone();
            for (entry, pivot_entry) in current[col..cols]
                .iter_mut()
                .zip(&pivot_row_values[col..cols])
            {
                *entry = entry.clone() - factor.clone() * pivot_entry.clone();
            }
        }
        rank += 1;
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    rank
}

/// Deterministic 64-bit generator for randomized acceptance checks.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}
