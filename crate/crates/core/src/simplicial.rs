//! The two-piece simplicial sheaf condition on a finite distributive lattice.
//!
//! For elements `i, j` the square
//!
//! ```text
//! L ──▶ L/(i≤j) × L/(j≤i) ⇉ L/(i=j)
//! ```
//!
//! is an equalizer, and the preimage of a matching pair `([x], [y])` is given
//! by the explicit amalgam `(x∨y) ∧ (x∨i) ∧ (y∨j)`.

use serde::Serialize;
use thiserror::Error;

use crate::congruence::{congruence_closure, principal, principal_leq, quotient, Congruence, Quotient};
use crate::lattice::Lattice;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("amalgam hypothesis fails: {x} and {y} are not congruent modulo ({i} = {j})")]
    HypothesisFailed { i: usize, j: usize, x: usize, y: usize },
    #[error("{constraints} constraints but {signs} signs")]
    SignCount { constraints: usize, signs: usize },
}

/// `z = (x∨y) ∧ (x∨i) ∧ (y∨j)`, after checking `x ≡ y (mod i = j)`.
pub fn amalgam(l: &Lattice, i: usize, j: usize, x: usize, y: usize) -> Result<usize, SimplicialError> {
    if !principal(l, i, j).related(x, y) {
        return Err(SimplicialError::HypothesisFailed { i, j, x, y });
    }
    Ok(amalgam_unchecked(l, i, j, x, y))
}

fn amalgam_unchecked(l: &Lattice, i: usize, j: usize, x: usize, y: usize) -> usize {
    l.meet(l.meet(l.join(x, y), l.join(x, i)), l.join(y, j))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub w1: usize,
    pub w2: usize,
    pub preimages: Vec<usize>,
    pub amalgam: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualizerReport {
    pub lattice: String,
    pub i: usize,
    pub j: usize,
    pub lattice_size: usize,
    pub size_i_le_j: usize,
    pub size_j_le_i: usize,
    pub size_i_eq_j: usize,
    pub equalizer_size: usize,
    pub bijective: bool,
    pub amalgam_matches: bool,
    pub counterexample: Option<Witness>,
}

impl EqualizerReport {
    pub fn passed(&self) -> bool {
        self.bijective && self.amalgam_matches
    }
}

/// Enumerates the equalizer of `L/(i≤j) × L/(j≤i) ⇉ L/(i=j)` and checks the
/// canonical map from `L` onto it. Every equalizer point is also matched
/// against the amalgam formula and against an exhaustive preimage search.
pub fn check_simplicial_equalizer(l: &Lattice, lattice_id: &str, i: usize, j: usize) -> EqualizerReport {
    let le = principal_leq(l, i, j);
    let ge = principal_leq(l, j, i);
    let eq = principal(l, i, j);
    // Both order congruences refine (i = j), so classes map through representatives.
    let to_eq = |c: &Congruence, class: usize| eq.class_of(c.representatives()[class]);

    let mut preimages: Vec<Vec<usize>> = Vec::new();
    let mut points: Vec<(usize, usize)> = Vec::new();
    for w1 in 0..le.class_count() {
        for w2 in 0..ge.class_count() {
            if to_eq(&le, w1) == to_eq(&ge, w2) {
                points.push((w1, w2));
            }
        }
    }
    let mut index = vec![usize::MAX; le.class_count() * ge.class_count()];
    for (k, &(w1, w2)) in points.iter().enumerate() {
        index[w1 * ge.class_count() + w2] = k;
        preimages.push(Vec::new());
    }
    for z in 0..l.size() {
        let k = index[le.class_of(z) * ge.class_count() + ge.class_of(z)];
        preimages[k].push(z);
    }
    let bijective = preimages.iter().all(|p| p.len() == 1);

    let mut amalgam_matches = true;
    let mut counterexample = None;
    for (k, &(w1, w2)) in points.iter().enumerate() {
        let x = le.representatives()[w1];
        let y = ge.representatives()[w2];
        let z = amalgam_unchecked(l, i, j, x, y);
        let ok = le.class_of(z) == w1 && ge.class_of(z) == w2 && preimages[k] == [z];
        if !ok {
            amalgam_matches = false;
            if counterexample.is_none() {
                counterexample = Some(Witness { w1, w2, preimages: preimages[k].clone(), amalgam: z });
            }
        }
    }
    if counterexample.is_none() && !bijective {
        let k = preimages.iter().position(|p| p.len() != 1).expect("non-bijective has a bad fiber");
        let (w1, w2) = points[k];
        counterexample = Some(Witness {
            w1,
            w2,
            preimages: preimages[k].clone(),
            amalgam: amalgam_unchecked(l, i, j, le.representatives()[w1], ge.representatives()[w2]),
        });
    }

    EqualizerReport {
        lattice: lattice_id.to_string(),
        i,
        j,
        lattice_size: l.size(),
        size_i_le_j: le.class_count(),
        size_j_le_i: ge.class_count(),
        size_i_eq_j: eq.class_count(),
        equalizer_size: points.len(),
        bijective,
        amalgam_matches,
        counterexample,
    }
}

/// Runs [`check_simplicial_equalizer`] on every ordered pair.
pub fn sweep_all_pairs(l: &Lattice, lattice_id: &str) -> Vec<EqualizerReport> {
    let n = l.size();
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| check_simplicial_equalizer(l, lattice_id, i, j)).collect()
}

/// Sign of one order constraint in a chain presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `a ≤ b`
    Forward,
    /// `b ≤ a`
    Reversed,
}

/// Quotient of `l` by the congruence generated by `(aₖ ≤ bₖ)` or its
/// reversal `(bₖ ≤ aₖ)` for each constraint.
pub fn chain_quotients(
    l: &Lattice,
    constraints: &[(usize, usize)],
    signs: &[Orientation],
) -> Result<Quotient, SimplicialError> {
    if constraints.len() != signs.len() {
        return Err(SimplicialError::SignCount { constraints: constraints.len(), signs: signs.len() });
    }
    let pairs: Vec<(usize, usize)> = constraints
        .iter()
        .zip(signs)
        .map(|(&(a, b), s)| match s {
            Orientation::Forward => (l.join(a, b), b),
            Orientation::Reversed => (l.join(a, b), a),
        })
        .collect();
    Ok(quotient(l, &congruence_closure(l, &pairs)))
}

/// All `2ⁿ` sign vectors in lexicographic order, `Forward` first.
pub fn all_orientations(n: usize) -> Vec<Vec<Orientation>> {
    (0..1usize << n)
        .map(|mask| {
            (0..n)
                .map(|k| if mask >> (n - 1 - k) & 1 == 0 { Orientation::Forward } else { Orientation::Reversed })
                .collect()
        })
        .collect()
}
