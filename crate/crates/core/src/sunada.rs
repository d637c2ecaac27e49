//! The multiple-component Sunada condition for finite groups.
//!
//! For collections of subgroups `H_1..H_r` and `K_1..K_r` of a finite group
//! `G`, the condition asks, per conjugacy class `[x]`,
//!
//! ```text
//! sum_i |[x] ∩ H_i| / |H_i|  ==  sum_i |[x] ∩ K_i| / |K_i|
//! ```
//!
//! which holds exactly when the permutation representations of `G` on the
//! disjoint unions of coset spaces are linearly equivalent, and which forces
//! the quotient unions `⊔ H_i\M` and `⊔ K_i\M` to be Steklov isospectral
//! for any isometric `G`-action on `M`.  All arithmetic here is exact
//! rational; groups are given by explicit multiplication tables.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::harmonic::invariant_harmonic_dims;
use crate::matgroup::{GroupError, GroupScalar, Matrix, OrthogonalGroup};
use crate::rational::{rat_int, Rat};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SunadaError {
    #[error("collections have different sizes: {0} vs {1}")]
    CollectionSizeMismatch(usize, usize),
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("subgroup {index} is not a subgroup: {reason}")]
    NotASubgroup { index: usize, reason: String },
    #[error("matrix list has {got} entries, expected one per group element ({expected})")]
    RealizationSizeMismatch { expected: usize, got: usize },
    #[error("matrix assignment is not a homomorphism at ({0}, {1})")]
    NotHomomorphic(usize, usize),
    #[error("matrix assignment is not injective: elements {0} and {1} coincide")]
    NotInjective(usize, usize),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A finite group presented by its multiplication table.
///
/// `table[i][j]` is the index of the product of elements `i` and `j`.  The
/// identity may sit at any index; it is located at construction.
/// Associativity is fully checked for orders up to 32 and spot-checked on
/// 1000 random-ish triples beyond that.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
    identity: usize,
    labels: Vec<String>,
}

impl FiniteGroup {
    pub fn new(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self, SunadaError> {
        let order = table.len();
        if order == 0 {
            return Err(SunadaError::InvalidTable("empty table".to_string()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(SunadaError::InvalidTable(format!(
                    "row {i} has length {}, expected {order}",
                    row.len()
                )));
            }
            if row.iter().any(|&e| e >= order) {
                return Err(SunadaError::InvalidTable(format!(
                    "row {i} contains an out-of-range index"
                )));
            }
        }

        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| SunadaError::InvalidTable("no identity element".to_string()))?;

        let mut inverses = vec![usize::MAX; order];
        for x in 0..order {
            let inv = (0..order)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| SunadaError::InvalidTable(format!("element {x} has no inverse")))?;
            inverses[x] = inv;
        }

        let check_triple =
            |a: usize, b: usize, c: usize| table[table[a][b]][c] == table[a][table[b][c]];
        if order <= 32 {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if !check_triple(a, b, c) {
                            return Err(SunadaError::InvalidTable(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..1000 {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let a = (state >> 33) as usize % order;
                let b = (state >> 17) as usize % order;
                let c = state as usize % order;
                if !check_triple(a, b, c) {
                    return Err(SunadaError::InvalidTable(format!(
                        "associativity fails at ({a}, {b}, {c})"
                    )));
                }
            }
        }

        let labels = labels.unwrap_or_else(|| (0..order).map(|i| format!("g{i}")).collect());
        if labels.len() != order {
            return Err(SunadaError::InvalidTable(format!(
                "got {} labels for {order} elements",
                labels.len()
            )));
        }
        Ok(FiniteGroup {
            order,
            table,
            inverses,
            identity,
            labels,
        })
    }

    /// The cyclic group Z_n with generator at index 1.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        FiniteGroup::new(table, None).expect("cyclic table is a group")
    }

    /// The Klein four-group {1, s, t, st}.
    pub fn klein_four() -> Self {
        let table = vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ];
        let labels = ["1", "s", "t", "st"].map(String::from).to_vec();
        FiniteGroup::new(table, Some(labels)).expect("klein table is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    /// Verify that a sorted index set is closed, contains the identity and
    /// is inverse-closed.
    pub fn verify_subgroup(&self, members: &[usize]) -> Result<(), String> {
        if members.iter().any(|&m| m >= self.order) {
            return Err("index out of range".to_string());
        }
        let set: BTreeSet<usize> = members.iter().copied().collect();
        if set.len() != members.len() {
            return Err("repeated element".to_string());
        }
        if !set.contains(&self.identity) {
            return Err("missing identity".to_string());
        }
        for &a in &set {
            if !set.contains(&self.inverse(a)) {
                return Err(format!("missing inverse of {a}"));
            }
            for &b in &set {
                if !set.contains(&self.mul(a, b)) {
                    return Err(format!("not closed at ({a}, {b})"));
                }
            }
        }
        Ok(())
    }
}

/// JSON description of a finite group: `{"order", "table", "labels"}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiniteGroupSpec {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
}

impl FiniteGroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, SunadaError> {
        if self.table.len() != self.order {
            return Err(SunadaError::InvalidTable(format!(
                "declared order {} but table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        FiniteGroup::new(self.table.clone(), self.labels.clone())
    }
}

/// An ordered list of verified subgroups of a fixed group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupCollection {
    subgroups: Vec<Vec<usize>>,
}

impl SubgroupCollection {
    pub fn new(group: &FiniteGroup, subgroups: Vec<Vec<usize>>) -> Result<Self, SunadaError> {
        let mut verified = Vec::with_capacity(subgroups.len());
        for (index, mut members) in subgroups.into_iter().enumerate() {
            members.sort_unstable();
            group
                .verify_subgroup(&members)
                .map_err(|reason| SunadaError::NotASubgroup { index, reason })?;
            verified.push(members);
        }
        Ok(SubgroupCollection {
            subgroups: verified,
        })
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Vec<usize>] {
        &self.subgroups
    }
}

/// JSON description of the two collections: `{"H": [[...]], "K": [[...]]}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CollectionsSpec {
    #[serde(rename = "H")]
    pub h: Vec<Vec<usize>>,
    #[serde(rename = "K")]
    pub k: Vec<Vec<usize>>,
}

/// Conjugacy classes as sorted element lists, ordered by smallest member.
pub fn conjugacy_classes(group: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut seen = vec![false; group.order()];
    let mut classes = Vec::new();
    for x in 0..group.order() {
        if seen[x] {
            continue;
        }
        let mut class: BTreeSet<usize> = BTreeSet::new();
        for g in 0..group.order() {
            class.insert(group.conjugate(g, x));
        }
        for &member in &class {
            seen[member] = true;
        }
        classes.push(class.into_iter().collect());
    }
    classes
}

/// Both sides of the Sunada condition on one conjugacy class.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassLine {
    pub representative: usize,
    pub representative_label: String,
    pub class_size: usize,
    #[serde(with = "crate::rational::rat_string")]
    pub lhs: Rat,
    #[serde(with = "crate::rational::rat_string")]
    pub rhs: Rat,
    pub equal: bool,
}

/// Per-class report of the Sunada condition; failures stay diagnosable.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SunadaReport {
    pub holds: bool,
    pub per_class: Vec<ClassLine>,
}

/// Evaluate the Sunada condition exactly, class by class.
pub fn sunada_condition(
    group: &FiniteGroup,
    h: &SubgroupCollection,
    k: &SubgroupCollection,
) -> Result<SunadaReport, SunadaError> {
    if h.len() != k.len() {
        return Err(SunadaError::CollectionSizeMismatch(h.len(), k.len()));
    }
    let side = |collection: &SubgroupCollection, class: &[usize]| -> Rat {
        let class: BTreeSet<usize> = class.iter().copied().collect();
        let mut total = Rat::from_integer(0.into());
        for subgroup in collection.subgroups() {
            let intersection = subgroup.iter().filter(|m| class.contains(m)).count();
            total += rat_int(intersection as i64) / rat_int(subgroup.len() as i64);
        }
        total
    };

    let mut per_class = Vec::new();
    let mut holds = true;
    for class in conjugacy_classes(group) {
        let lhs = side(h, &class);
        let rhs = side(k, &class);
        let equal = lhs == rhs;
        holds &= equal;
        per_class.push(ClassLine {
            representative: class[0],
            representative_label: group.label(class[0]).to_string(),
            class_size: class.len(),
            lhs,
            rhs,
            equal,
        });
    }
    Ok(SunadaReport { holds, per_class })
}

/// Permutation character of the right-translation action on `⊔ H_i\G`,
/// evaluated at every group element.
fn permutation_character(group: &FiniteGroup, collection: &SubgroupCollection) -> Vec<u64> {
    let order = group.order();
    let mut character = vec![0u64; order];
    for subgroup in collection.subgroups() {
        let members: BTreeSet<usize> = subgroup.iter().copied().collect();
        // Enumerate right cosets H a by marking elements.
        let mut assigned = vec![false; order];
        let mut representatives = Vec::new();
        for a in 0..order {
            if assigned[a] {
                continue;
            }
            representatives.push(a);
            for &h in subgroup {
                assigned[group.mul(h, a)] = true;
            }
        }
        // The coset H a is fixed by g iff a g a^{-1} lies in H.
        for (g, slot) in character.iter_mut().enumerate() {
            for &a in &representatives {
                if members.contains(&group.conjugate(a, g)) {
                    *slot += 1;
                }
            }
        }
    }
    character
}

/// Pointwise comparison of the permutation characters of the two coset
/// actions; equality is equivalent to the Sunada condition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharacterReport {
    pub equal: bool,
    pub chi_h: Vec<u64>,
    pub chi_k: Vec<u64>,
}

pub fn permutation_character_equal(
    group: &FiniteGroup,
    h: &SubgroupCollection,
    k: &SubgroupCollection,
) -> Result<CharacterReport, SunadaError> {
    if h.len() != k.len() {
        return Err(SunadaError::CollectionSizeMismatch(h.len(), k.len()));
    }
    let chi_h = permutation_character(group, h);
    let chi_k = permutation_character(group, k);
    Ok(CharacterReport {
        equal: chi_h == chi_k,
        chi_h,
        chi_k,
    })
}

/// A verified matrix realization of a finite group: one orthogonal matrix
/// per element, forming a homomorphic bijection onto its image.
#[derive(Debug, Clone)]
pub struct MatrixRealization<T> {
    dim: usize,
    matrices: Vec<Matrix<T>>,
    tolerance: f64,
}

impl<T: GroupScalar> MatrixRealization<T> {
    /// `matrices[i]` is the matrix acting for group element `i`.
    pub fn new(
        group: &FiniteGroup,
        matrices: Vec<Matrix<T>>,
        tolerance: f64,
    ) -> Result<Self, SunadaError> {
        if matrices.len() != group.order() {
            return Err(SunadaError::RealizationSizeMismatch {
                expected: group.order(),
                got: matrices.len(),
            });
        }
        let dim = matrices[0].dim();
        for i in 0..matrices.len() {
            for j in 0..matrices.len() {
                let product = matrices[i].mul(&matrices[j]);
                if !product.approx_eq(&matrices[group.mul(i, j)], tolerance) {
                    return Err(SunadaError::NotHomomorphic(i, j));
                }
                if i < j && matrices[i].approx_eq(&matrices[j], tolerance) {
                    return Err(SunadaError::NotInjective(i, j));
                }
            }
        }
        Ok(MatrixRealization {
            dim,
            matrices,
            tolerance,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, element: usize) -> &Matrix<T> {
        &self.matrices[element]
    }

    /// The image of a subgroup as a closed orthogonal group.
    pub fn subgroup_image(&self, members: &[usize]) -> Result<OrthogonalGroup<T>, SunadaError> {
        let matrices: Vec<Matrix<T>> = members.iter().map(|&m| self.matrices[m].clone()).collect();
        Ok(OrthogonalGroup::from_elements(
            self.dim,
            matrices,
            self.tolerance,
        )?)
    }
}

/// JSON description of a matrix action: one row-major matrix per group
/// element, index-aligned with the multiplication table.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RealizationSpec {
    pub dim: usize,
    pub mode: crate::matgroup::MatrixMode,
    pub matrices: Vec<Vec<String>>,
    #[serde(default)]
    pub tolerance: Option<f64>,
}

/// A verified realization in either entry mode.
#[derive(Debug, Clone)]
pub enum AnyRealization {
    Rational(MatrixRealization<Rat>),
    Float(MatrixRealization<f64>),
}

impl RealizationSpec {
    pub fn build(&self, group: &FiniteGroup) -> Result<AnyRealization, SunadaError> {
        let tolerance = self.tolerance.unwrap_or(crate::matgroup::DEFAULT_TOLERANCE);
        match crate::matgroup::parse_matrices(self.dim, self.mode, &self.matrices)? {
            crate::matgroup::AnyMatrices::Rational(matrices) => Ok(AnyRealization::Rational(
                MatrixRealization::new(group, matrices, tolerance)?,
            )),
            crate::matgroup::AnyMatrices::Float(matrices) => Ok(AnyRealization::Float(
                MatrixRealization::new(group, matrices, tolerance)?,
            )),
        }
    }
}

impl AnyRealization {
    pub fn ball_check(
        &self,
        h: &SubgroupCollection,
        k: &SubgroupCollection,
        max_degree: usize,
    ) -> Result<BallCheckReport, SunadaError> {
        match self {
            AnyRealization::Rational(r) => sunada_ball_check(r, h, k, max_degree),
            AnyRealization::Float(r) => sunada_ball_check(r, h, k, max_degree),
        }
    }
}

/// Eigenvalue multiplicities of both quotient unions on the unit ball.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BallCheckReport {
    pub equal: bool,
    pub max_degree: usize,
    /// Multiplicity of eigenvalue `m` in `Stek(⊔ H_i\B(0,1))`, indexed by m.
    pub h_multiplicities: Vec<u64>,
    pub k_multiplicities: Vec<u64>,
}

/// Compare `Stek(⊔ H_i\B(0,1))` and `Stek(⊔ K_i\B(0,1))` up to degree
/// `max_degree` by summing invariant harmonic dimensions per subgroup.
pub fn sunada_ball_check<T: GroupScalar>(
    realization: &MatrixRealization<T>,
    h: &SubgroupCollection,
    k: &SubgroupCollection,
    max_degree: usize,
) -> Result<BallCheckReport, SunadaError> {
    if h.len() != k.len() {
        return Err(SunadaError::CollectionSizeMismatch(h.len(), k.len()));
    }
    let union_multiplicities = |collection: &SubgroupCollection| -> Result<Vec<u64>, SunadaError> {
        let mut total = vec![0u64; max_degree + 1];
        for members in collection.subgroups() {
            let image = realization.subgroup_image(members)?;
            let table = invariant_harmonic_dims(&image, max_degree)?;
            for (m, slot) in total.iter_mut().enumerate() {
                *slot += table.dim(m);
            }
        }
        Ok(total)
    };
    let h_multiplicities = union_multiplicities(h)?;
    let k_multiplicities = union_multiplicities(k)?;
    Ok(BallCheckReport {
        equal: h_multiplicities == k_multiplicities,
        max_degree,
        h_multiplicities,
        k_multiplicities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgroup::{signed_diagonal, DEFAULT_TOLERANCE};

    fn klein_collections(group: &FiniteGroup) -> (SubgroupCollection, SubgroupCollection) {
        let h = SubgroupCollection::new(group, vec![vec![0, 1], vec![0, 2], vec![0, 3]]).unwrap();
        let k = SubgroupCollection::new(group, vec![vec![0], vec![0, 1, 2, 3], vec![0, 1, 2, 3]])
            .unwrap();
        (h, k)
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteGroup::new(vec![], None).is_err());
        // Row length mismatch.
        assert!(FiniteGroup::new(vec![vec![0, 1], vec![1]], None).is_err());
        // Identity present but element 1 has no inverse.
        assert!(FiniteGroup::new(vec![vec![0, 1], vec![1, 1]], None).is_err());
        // Identity may sit at any index.
        let shifted = FiniteGroup::new(vec![vec![1, 0], vec![0, 1]], None).unwrap();
        assert_eq!(shifted.identity(), 1);
    }

    #[test]
    fn abelian_groups_have_singleton_classes() {
        let z6 = FiniteGroup::cyclic(6);
        let classes = conjugacy_classes(&z6);
        assert_eq!(classes.len(), 6);
        assert!(classes.iter().all(|c| c.len() == 1));

        let klein = FiniteGroup::klein_four();
        assert_eq!(conjugacy_classes(&klein).len(), 4);
    }

    fn symmetric_three() -> FiniteGroup {
        // Elements: e, (12), (13), (23), (123), (132).
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let compose =
            |a: &[usize; 3], b: &[usize; 3]| -> [usize; 3] { [a[b[0]], a[b[1]], a[b[2]]] };
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let c = compose(a, b);
                        perms.iter().position(|p| *p == c).unwrap()
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::new(table, None).unwrap()
    }

    #[test]
    fn symmetric_three_has_classes_of_sizes_one_two_three() {
        let s3 = symmetric_three();
        let mut sizes: Vec<usize> = conjugacy_classes(&s3).iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn klein_example_satisfies_the_condition() {
        let group = FiniteGroup::klein_four();
        let (h, k) = klein_collections(&group);
        let report = sunada_condition(&group, &h, &k).unwrap();
        assert!(report.holds);
        assert_eq!(report.per_class.len(), 4);
        // Identity class: 3/2 on both sides.
        assert_eq!(report.per_class[0].lhs, crate::rational::rat(3, 2));
        assert_eq!(report.per_class[0].rhs, crate::rational::rat(3, 2));

        let characters = permutation_character_equal(&group, &h, &k).unwrap();
        assert!(characters.equal);
    }

    #[test]
    fn identical_collections_trivially_satisfy_both() {
        let group = FiniteGroup::klein_four();
        let h = SubgroupCollection::new(&group, vec![vec![0, 1]]).unwrap();
        assert!(sunada_condition(&group, &h, &h).unwrap().holds);
        assert!(permutation_character_equal(&group, &h, &h).unwrap().equal);
    }

    #[test]
    fn single_mismatched_pair_fails_both() {
        let group = FiniteGroup::klein_four();
        let h = SubgroupCollection::new(&group, vec![vec![0, 1]]).unwrap();
        let k = SubgroupCollection::new(&group, vec![vec![0]]).unwrap();
        let report = sunada_condition(&group, &h, &k).unwrap();
        assert!(!report.holds);
        // Class of s: 1/2 on the left, 0 on the right.
        let line = &report.per_class[1];
        assert_eq!(line.lhs, crate::rational::rat(1, 2));
        assert_eq!(line.rhs, crate::rational::rat(0, 1));
        assert!(!permutation_character_equal(&group, &h, &k).unwrap().equal);
    }

    #[test]
    fn collection_size_mismatch_is_rejected() {
        let group = FiniteGroup::klein_four();
        let h = SubgroupCollection::new(&group, vec![vec![0, 1], vec![0, 2]]).unwrap();
        let k = SubgroupCollection::new(&group, vec![vec![0]]).unwrap();
        assert!(matches!(
            sunada_condition(&group, &h, &k),
            Err(SunadaError::CollectionSizeMismatch(2, 1))
        ));
    }

    #[test]
    fn invalid_subgroup_is_rejected() {
        let group = FiniteGroup::klein_four();
        // {0, 1, 2} is not closed: 1*2 = 3.
        assert!(matches!(
            SubgroupCollection::new(&group, vec![vec![0, 1, 2]]),
            Err(SunadaError::NotASubgroup { index: 0, .. })
        ));
    }

    fn klein_rotation_realization(group: &FiniteGroup) -> MatrixRealization<Rat> {
        MatrixRealization::new(
            group,
            vec![
                Matrix::identity(3),
                signed_diagonal(&[1, -1, -1]),
                signed_diagonal(&[-1, 1, -1]),
                signed_diagonal(&[-1, -1, 1]),
            ],
            DEFAULT_TOLERANCE,
        )
        .unwrap()
    }

    #[test]
    fn realization_must_be_homomorphic() {
        let group = FiniteGroup::klein_four();
        // s and t mapped to matrices whose product is not the image of st.
        let bad = MatrixRealization::new(
            &group,
            vec![
                Matrix::identity(3),
                signed_diagonal(&[1, 1, -1]),
                signed_diagonal(&[1, -1, 1]),
                signed_diagonal(&[-1, 1, 1]),
            ],
            DEFAULT_TOLERANCE,
        );
        assert!(matches!(bad, Err(SunadaError::NotHomomorphic(..))));
    }

    #[test]
    fn ball_check_on_the_rotation_example() {
        let group = FiniteGroup::klein_four();
        let (h, k) = klein_collections(&group);
        let realization = klein_rotation_realization(&group);
        let report = sunada_ball_check(&realization, &h, &k, 12).unwrap();
        assert!(report.equal);
        // Union of three half-turn quotients at degree 1: one invariant
        // axis each.
        assert_eq!(report.h_multiplicities[1], 3);
        assert_eq!(report.k_multiplicities[1], 3);
    }

    #[test]
    fn ball_check_detects_unbalanced_collections() {
        let group = FiniteGroup::klein_four();
        let h = SubgroupCollection::new(&group, vec![vec![0, 1]]).unwrap();
        let k = SubgroupCollection::new(&group, vec![vec![0]]).unwrap();
        let realization = klein_rotation_realization(&group);
        let report = sunada_ball_check(&realization, &h, &k, 6).unwrap();
        assert!(!report.equal);
    }

    #[test]
    fn trivial_collections_give_equal_spectra() {
        let group = FiniteGroup::klein_four();
        let trivial = SubgroupCollection::new(&group, vec![vec![0]]).unwrap();
        let realization = klein_rotation_realization(&group);
        let report = sunada_ball_check(&realization, &trivial, &trivial, 8).unwrap();
        assert!(report.equal);
    }
}
