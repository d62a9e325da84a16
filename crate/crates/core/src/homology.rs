//! Reduced integer homology of finite simplicial complexes.
//!
//! The augmented chain complex puts the empty face in degree −1, so the empty
//! space has `H̃₋₁ = ℤ` and every nonempty complex has `H̃₋₁ = 0`. Boundary
//! matrices are brought to Smith normal form with checked `i64` arithmetic.

use serde::Serialize;
use thiserror::Error;

use crate::join::SimplicialComplex;

/// Default cap on the entries of a single boundary matrix.
pub const DEFAULT_MATRIX_BOUND: usize = 4_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("boundary matrix {rows} × {cols} exceeds the bound of {bound} entries")]
    MatrixTooLarge { rows: usize, cols: usize, bound: usize },
    #[error("integer overflow during reduction")]
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    /// Reduced Betti numbers from degree 0 up to the dimension.
    pub betti: Vec<usize>,
    /// Invariant factors above 1 of the torsion in each degree, from degree 0.
    pub torsion: Vec<Vec<u64>>,
    /// Reduced homology in degree −1, which is `ℤ` exactly for the empty space.
    pub empty: bool,
}

impl HomologyProfile {
    pub fn betti_at(&self, degree: usize) -> usize {
        self.betti.get(degree).copied().unwrap_or(0)
    }

    /// No reduced homology in any degree.
    pub fn is_acyclic(&self) -> bool {
        !self.empty && self.betti.iter().all(|&b| b == 0) && self.torsion.iter().all(Vec::is_empty)
    }

    /// The profile of the `n`-sphere: a single `ℤ` in degree `n`.
    pub fn is_sphere(&self, n: usize) -> bool {
        !self.empty
            && self.torsion.iter().all(Vec::is_empty)
            && self.betti.iter().enumerate().all(|(d, &b)| b == usize::from(d == n))
            && self.betti.len() > n
    }

    /// `Σ (−1)^d b̃_d`, including degree −1.
    pub fn euler_characteristic(&self) -> i64 {
        let base = if self.empty { -1 } else { 0 };
        self.betti
            .iter()
            .enumerate()
            .fold(base, |acc, (d, &b)| if d % 2 == 0 { acc + b as i64 } else { acc - b as i64 })
    }
}

/// Rank and the nontrivial invariant factors of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub rank: usize,
    pub factors: Vec<u64>,
}

/// Smith normal form by repeated pivoting on the entry of least absolute
/// value, scanning rows then columns so the result is deterministic.
pub fn smith_form(mut m: Vec<Vec<i64>>) -> Result<SmithForm, HomologyError> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let mut pivot = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 && pivot.is_none_or(|(_, _, best): (usize, usize, i64)| x.unsigned_abs() < best.unsigned_abs()) {
                    pivot = Some((i, j, x));
                }
            }
        }
        let Some((pi, pj, _)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut dirty = false;
            // clear column t
            for i in t + 1..rows {
                let q = m[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        let d = q.checked_mul(m[t][j]).ok_or(HomologyError::Overflow)?;
                        m[i][j] = m[i][j].checked_sub(d).ok_or(HomologyError::Overflow)?;
                    }
                }
                dirty |= m[i][t] != 0;
            }
            // clear row t
            for j in t + 1..cols {
                let q = m[t][j] / p;
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        let d = q.checked_mul(row[t]).ok_or(HomologyError::Overflow)?;
                        row[j] = row[j].checked_sub(d).ok_or(HomologyError::Overflow)?;
                    }
                }
                dirty |= m[t][j] != 0;
            }
            if !dirty {
                // the pivot must divide the rest of the block
                let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0));
                match bad {
                    None => break,
                    Some(i) => {
                        for j in t..cols {
                            m[t][j] = m[t][j].checked_add(m[i][j]).ok_or(HomologyError::Overflow)?;
                        }
                        continue;
                    }
                }
            }
            // a remainder is now smaller than the pivot; move it into place
            let (mut bi, mut bj, mut best) = (t, t, m[t][t].unsigned_abs());
            for i in t..rows {
                if m[i][t] != 0 && m[i][t].unsigned_abs() < best {
                    (bi, bj, best) = (i, t, m[i][t].unsigned_abs());
                }
            }
            for j in t..cols {
                if m[t][j] != 0 && m[t][j].unsigned_abs() < best {
                    (bi, bj, best) = (t, j, m[t][j].unsigned_abs());
                }
            }
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
        }
        diagonal.push(m[t][t].unsigned_abs());
        t += 1;
    }
    Ok(SmithForm { rank: diagonal.len(), factors: diagonal.into_iter().filter(|&d| d > 1).collect() })
}

/// Boundary matrix from `d`-faces to `(d−1)`-faces, rows indexed by the lower faces.
fn boundary(lower: &[Vec<usize>], upper: &[Vec<usize>]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; upper.len()]; lower.len()];
    for (c, face) in upper.iter().enumerate() {
        for skip in 0..face.len() {
            let sub: Vec<usize> = face.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &v)| v).collect();
            let r = lower.binary_search(&sub).expect("faces are downward closed");
            m[r][c] = if skip % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

pub fn homology(k: &SimplicialComplex) -> Result<HomologyProfile, HomologyError> {
    homology_bounded(k, DEFAULT_MATRIX_BOUND)
}

pub fn homology_bounded(k: &SimplicialComplex, bound: usize) -> Result<HomologyProfile, HomologyError> {
    // levels[0] is the empty face alone
    let mut levels: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    levels.extend(k.faces_by_dimension());
    let mut forms = Vec::with_capacity(levels.len());
    for d in 1..levels.len() {
        let (rows, cols) = (levels[d - 1].len(), levels[d].len());
        if rows.saturating_mul(cols) > bound {
            return Err(HomologyError::MatrixTooLarge { rows, cols, bound });
        }
        forms.push(smith_form(boundary(&levels[d - 1], &levels[d]))?);
    }
    // forms[d] is the boundary out of level d + 1, i.e. out of degree d
    let rank_out = |level: usize| if level == 0 { 0 } else { forms[level - 1].rank };
    let rank_in = |level: usize| forms.get(level).map_or(0, |f| f.rank);
    let reduced = |level: usize| levels[level].len() - rank_out(level) - rank_in(level);
    Ok(HomologyProfile {
        empty: reduced(0) == 1,
        betti: (1..levels.len()).map(reduced).collect(),
        torsion: (1..levels.len()).map(|l| forms.get(l).map_or_else(Vec::new, |f| f.factors.clone())).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::join::{iterated_join, join, SimplicialComplex};

    fn profile(k: &SimplicialComplex) -> HomologyProfile {
        homology(k).unwrap()
    }

    #[test]
    fn small_complexes() {
        let triangle = SimplicialComplex::sphere(1);
        assert_eq!(profile(&triangle).betti, vec![0, 1]);
        assert!(profile(&SimplicialComplex::simplex(4)).is_acyclic());
        let e = profile(&SimplicialComplex::empty());
        assert!(e.empty && e.betti.is_empty());
        assert_eq!(e.euler_characteristic(), -1);
        assert_eq!(profile(&SimplicialComplex::discrete(3)).betti, vec![2]);
    }

    #[test]
    fn complete_bipartite() {
        let k33 = join(&SimplicialComplex::discrete(3), &SimplicialComplex::discrete(3));
        assert_eq!(profile(&k33).betti, vec![0, 4]);
        for m in 1..=5 {
            let k = iterated_join(&SimplicialComplex::discrete(m), 2).unwrap();
            assert_eq!(profile(&k).betti_at(1), (m - 1) * (m - 1));
        }
    }

    #[test]
    fn octahedron_is_a_two_sphere() {
        let k = iterated_join(&SimplicialComplex::discrete(2), 3).unwrap();
        assert!(profile(&k).is_sphere(2));
    }

    #[test]
    fn sphere_joins() {
        for a in 0..=2 {
            for b in 0..=2 {
                let k = join(&SimplicialComplex::sphere(a), &SimplicialComplex::sphere(b));
                assert!(profile(&k).is_sphere(a + b + 1), "S^{a} * S^{b}");
            }
        }
    }

    #[test]
    fn euler_characteristic_oracle() {
        let family = [
            SimplicialComplex::sphere(2),
            SimplicialComplex::new(5, vec![vec![0, 1, 2], vec![2, 3], vec![3, 4], vec![4, 2]]).unwrap(),
            iterated_join(&SimplicialComplex::discrete(3), 3).unwrap(),
        ];
        for k in &family {
            assert_eq!(profile(k).euler_characteristic(), k.reduced_euler_characteristic());
        }
    }

    #[test]
    fn projective_plane_has_torsion() {
        // six-vertex triangulation of ℝP²
        let facets = vec![
            vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4], vec![0, 4, 5], vec![0, 1, 5],
            vec![1, 2, 4], vec![2, 3, 5], vec![1, 3, 4], vec![2, 4, 5], vec![1, 3, 5],
        ];
        let p = profile(&SimplicialComplex::new(6, facets).unwrap());
        assert_eq!(p.betti, vec![0, 0, 0]);
        assert_eq!(p.torsion, vec![vec![], vec![2], vec![]]);
    }

    #[test]
    fn smith_form_of_small_matrix() {
        let s = smith_form(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).unwrap();
        assert_eq!(s, SmithForm { rank: 3, factors: vec![2, 6, 12] });
    }

    #[test]
    fn bound_is_enforced() {
        let k = iterated_join(&SimplicialComplex::discrete(3), 2).unwrap();
        assert!(matches!(homology_bounded(&k, 10), Err(HomologyError::MatrixTooLarge { .. })));
    }
}
