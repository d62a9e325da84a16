//! Finite bounded distributive lattices stored as dense operation tables.
//!
//! A [`Lattice`] can only be obtained through [`Lattice::validate`] (or one of
//! the constructors, which route through it), so every value in circulation
//! satisfies the bounded distributive lattice axioms.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest generator count accepted by [`free_bounded_distributive_lattice`].
pub const MAX_FREE_GENERATORS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("not a lattice: {axiom} fails at {witness:?}")]
    NotALattice { axiom: &'static str, witness: Vec<usize> },
    #[error("not distributive: a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c) at ({0}, {1}, {2})")]
    NonDistributive(usize, usize, usize),
    #[error("declared bounds do not act as bottom/top (bottom {bottom}, top {top}, witness {witness})")]
    BoundsMismatch { bottom: usize, top: usize, witness: usize },
    #[error("free lattice on {0} generators exceeds the supported ceiling of {MAX_FREE_GENERATORS}")]
    TooManyGenerators(usize),
    #[error("element {index} out of range for lattice of size {size}")]
    OutOfRange { index: usize, size: usize },
}

/// Unvalidated lattice tables, exactly as they appear in the JSON format.
///
/// Field order matters: serialization emits `size, meet, join, bottom, top,
/// labels` in that order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawLattice {
    pub size: usize,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub bottom: usize,
    pub top: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// A validated finite bounded distributive lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    size: usize,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
    labels: Option<Vec<String>>,
}

/// Index of an element in a specific lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticeElement(pub usize);

impl Lattice {
    /// Checks every axiom by full table scan and returns the first violation.
    pub fn validate(raw: RawLattice) -> Result<Lattice, LatticeError> {
        let n = raw.size;
        let total = |t: &Vec<Vec<usize>>| t.len() == n && t.iter().all(|row| row.len() == n);
        if !total(&raw.meet) || !total(&raw.join) {
            return Err(LatticeError::NotALattice { axiom: "totality", witness: vec![] });
        }
        if n == 0 {
            return Err(LatticeError::NotALattice { axiom: "nonempty carrier", witness: vec![] });
        }
        for (a, (mrow, jrow)) in raw.meet.iter().zip(&raw.join).enumerate() {
            for b in 0..n {
                if mrow[b] >= n || jrow[b] >= n {
                    return Err(LatticeError::NotALattice { axiom: "closure", witness: vec![a, b] });
                }
            }
        }
        if raw.bottom >= n || raw.top >= n {
            return Err(LatticeError::BoundsMismatch { bottom: raw.bottom, top: raw.top, witness: n });
        }
        if let Some(labels) = &raw.labels {
            if labels.len() != n {
                return Err(LatticeError::NotALattice { axiom: "label count", witness: vec![labels.len()] });
            }
        }
        let l = Lattice {
            size: n,
            meet: raw.meet.concat(),
            join: raw.join.concat(),
            bottom: raw.bottom,
            top: raw.top,
            labels: raw.labels,
        };
        l.check_axioms()?;
        Ok(l)
    }

    fn check_axioms(&self) -> Result<(), LatticeError> {
        let n = self.size;
        let fail = |axiom, witness: Vec<usize>| Err(LatticeError::NotALattice { axiom, witness });
        for a in 0..n {
            for b in 0..n {
                if self.meet(a, b) != self.meet(b, a) {
                    return fail("meet commutativity", vec![a, b]);
                }
                if self.join(a, b) != self.join(b, a) {
                    return fail("join commutativity", vec![a, b]);
                }
            }
        }
        for a in 0..n {
            if self.meet(a, a) != a {
                return fail("meet idempotence", vec![a]);
            }
            if self.join(a, a) != a {
                return fail("join idempotence", vec![a]);
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.meet(self.meet(a, b), c) != self.meet(a, self.meet(b, c)) {
                        return fail("meet associativity", vec![a, b, c]);
                    }
                    if self.join(self.join(a, b), c) != self.join(a, self.join(b, c)) {
                        return fail("join associativity", vec![a, b, c]);
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.meet(a, self.join(a, b)) != a {
                    return fail("meet absorption", vec![a, b]);
                }
                if self.join(a, self.meet(a, b)) != a {
                    return fail("join absorption", vec![a, b]);
                }
            }
        }
        for a in 0..n {
            if self.meet(self.bottom, a) != self.bottom || self.join(self.top, a) != self.top {
                return Err(LatticeError::BoundsMismatch { bottom: self.bottom, top: self.top, witness: a });
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Err(LatticeError::NonDistributive(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Human name of an element, falling back to its index.
    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    /// Looks an element up by label.
    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn check_index(&self, a: usize) -> Result<LatticeElement, LatticeError> {
        if a < self.size {
            Ok(LatticeElement(a))
        } else {
            Err(LatticeError::OutOfRange { index: a, size: self.size })
        }
    }

    /// `a ≤ b`, defined as `a ∨ b = b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.join(a, b) == b
    }

    /// The complement of `a`, if it has one. Complements are unique in a
    /// distributive lattice, so the first hit is the only one.
    pub fn complement_of(&self, a: usize) -> Option<usize> {
        (0..self.size).find(|&b| self.meet(a, b) == self.bottom && self.join(a, b) == self.top)
    }

    pub fn are_complements(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == self.bottom && self.join(a, b) == self.top
    }

    pub fn to_raw(&self) -> RawLattice {
        let n = self.size;
        RawLattice {
            size: n,
            meet: self.meet.chunks(n).map(<[usize]>::to_vec).collect(),
            join: self.join.chunks(n).map(<[usize]>::to_vec).collect(),
            bottom: self.bottom,
            top: self.top,
            labels: self.labels.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_raw()).expect("lattice tables serialize")
    }

    pub fn from_json(text: &str) -> Result<Lattice, crate::Error> {
        let raw: RawLattice = serde_json::from_str(text)?;
        Ok(Lattice::validate(raw)?)
    }

    /// Builds a lattice from an order-compatible meet/join pair given as closures.
    pub(crate) fn from_fns(
        size: usize,
        meet: impl Fn(usize, usize) -> usize,
        join: impl Fn(usize, usize) -> usize,
        bottom: usize,
        top: usize,
        labels: Option<Vec<String>>,
    ) -> Result<Lattice, LatticeError> {
        let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
            (0..size).map(|a| (0..size).map(|b| f(a, b)).collect()).collect()
        };
        Lattice::validate(RawLattice { size, meet: table(&meet), join: table(&join), bottom, top, labels })
    }

    /// The chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Lattice {
        assert!(n >= 1, "a bounded chain has at least one element");
        Lattice::from_fns(n, usize::min, usize::max, 0, n - 1, None).expect("chains are distributive")
    }

    /// The Boolean lattice of subsets of a `k`-element set, indexed by bitmask.
    pub fn boolean(k: u32) -> Lattice {
        let n = 1usize << k;
        let labels = (0..n)
            .map(|m| {
                let items: Vec<String> = (0..k).filter(|i| m >> i & 1 == 1).map(|i| format!("x{}", i + 1)).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        Lattice::from_fns(n, |a, b| a & b, |a, b| a | b, 0, n - 1, Some(labels)).expect("Boolean lattices are distributive")
    }
}

/// The free bounded distributive lattice on `n ≤ 4` generators, realized as
/// monotone Boolean functions of `n` variables under the pointwise order.
///
/// Elements are sorted by their truth-table bitmask, where bit `i` holds the
/// value at the input whose `k`-th bit is the value of generator `g(k+1)`.
/// Generators are labelled `g1..gn`; every element carries its irredundant
/// disjunctive normal form as a label.
pub fn free_bounded_distributive_lattice(n: usize) -> Result<Lattice, LatticeError> {
    if n > MAX_FREE_GENERATORS {
        return Err(LatticeError::TooManyGenerators(n));
    }
    let points = 1usize << n;
    let tables = monotone_truth_tables(n);
    let index_of = |t: u32| tables.binary_search(&t).expect("monotone functions are closed under ∧ and ∨");
    let size = tables.len();
    let labels = tables.iter().map(|&t| dnf_label(t, n, points)).collect();
    Lattice::from_fns(
        size,
        |a, b| index_of(tables[a] & tables[b]),
        |a, b| index_of(tables[a] | tables[b]),
        0,
        size - 1,
        Some(labels),
    )
}

/// Sorted truth tables of all monotone Boolean functions on `n` variables.
fn monotone_truth_tables(n: usize) -> Vec<u32> {
    let points = 1usize << n;
    // Monotone iff the true set is an up-set; it suffices to check covering pairs.
    let mut out = Vec::new();
    for t in 0u64..(1u64 << points) {
        let t = t as u32;
        let monotone = (0..points).all(|x| {
            t >> x & 1 == 0 || (0..n).all(|k| t >> (x | 1 << k) & 1 == 1)
        });
        if monotone {
            out.push(t);
        }
    }
    out
}

fn dnf_label(table: u32, n: usize, points: usize) -> String {
    if table == 0 {
        return "0".into();
    }
    if table.count_ones() as usize == points {
        return "1".into();
    }
    // Minimal true points are the irredundant terms.
    let minimal: Vec<usize> = (0..points)
        .filter(|&x| table >> x & 1 == 1)
        .filter(|&x| (0..n).all(|k| x >> k & 1 == 0 || table >> (x & !(1 << k)) & 1 == 0))
        .collect();
    let terms: Vec<String> = minimal
        .iter()
        .map(|&x| {
            let gens: Vec<String> = (0..n).filter(|k| x >> k & 1 == 1).map(|k| format!("g{}", k + 1)).collect();
            gens.join("∧")
        })
        .collect();
    if terms.len() == 1 {
        return terms[0].clone();
    }
    terms
        .iter()
        .map(|t| if t.contains('∧') { format!("({t})") } else { t.clone() })
        .collect::<Vec<_>>()
        .join("∨")
}

/// Label of generator `k` (1-based) in a free lattice.
pub fn generator_label(k: usize) -> String {
    format!("g{k}")
}
