//! Congruences of finite distributive lattices: closure, quotients, and the
//! principal-congruence criterion for distributive lattices.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{Lattice, LatticeError, RawLattice};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("criterion requires a ≤ b, got a = {a}, b = {b}")]
    PreconditionViolated { a: usize, b: usize },
    #[error("partition is not compatible with {op} at ({u}, {v}) with {w}")]
    Incompatible { op: &'static str, u: usize, v: usize, w: usize },
    #[error("class vector has length {got}, lattice has {expected} elements")]
    WrongLength { got: usize, expected: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Union-find with path halving.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if the two classes were distinct.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // smaller root wins so roots are class minima
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    /// Dense class ids ordered by minimum element.
    pub(crate) fn classes(&mut self) -> Vec<usize> {
        let n = self.parent.len();
        let mut id_of_root = vec![usize::MAX; n];
        let mut next = 0;
        let mut out = Vec::with_capacity(n);
        for x in 0..n {
            let r = self.find(x);
            if id_of_root[r] == usize::MAX {
                id_of_root[r] = next;
                next += 1;
            }
            out.push(id_of_root[r]);
        }
        out
    }
}

/// A partition of a lattice's carrier compatible with meet and join.
///
/// Class ids are dense and ordered by their minimum element, so two equal
/// congruences always have identical class vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    classes: Vec<usize>,
    representatives: Vec<usize>,
}

impl Congruence {
    /// Wraps an explicit partition after checking compatibility with the lattice.
    pub fn from_classes(l: &Lattice, classes: Vec<usize>) -> Result<Congruence, CongruenceError> {
        if classes.len() != l.size() {
            return Err(CongruenceError::WrongLength { got: classes.len(), expected: l.size() });
        }
        let mut uf = UnionFind::new(l.size());
        let mut first = std::collections::HashMap::new();
        for (x, &c) in classes.iter().enumerate() {
            let f = *first.entry(c).or_insert(x);
            uf.union(f, x);
        }
        let canon = Congruence::from_union_find(&mut uf);
        for u in 0..l.size() {
            let v = canon.representatives[canon.classes[u]];
            for w in 0..l.size() {
                if !canon.related(l.meet(u, w), l.meet(v, w)) {
                    return Err(CongruenceError::Incompatible { op: "meet", u, v, w });
                }
                if !canon.related(l.join(u, w), l.join(v, w)) {
                    return Err(CongruenceError::Incompatible { op: "join", u, v, w });
                }
            }
        }
        Ok(canon)
    }

    fn from_union_find(uf: &mut UnionFind) -> Congruence {
        let classes = uf.classes();
        let count = classes.iter().max().map_or(0, |m| m + 1);
        let mut representatives = vec![usize::MAX; count];
        for (x, &c) in classes.iter().enumerate() {
            if representatives[c] == usize::MAX {
                representatives[c] = x;
            }
        }
        Congruence { classes, representatives }
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.classes[x]
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    /// Minimum element of each class, indexed by class id.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.classes[x] == self.classes[y]
    }

    /// Members of each class in increasing order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count()];
        for (x, &c) in self.classes.iter().enumerate() {
            out[c].push(x);
        }
        out
    }
}

/// Least congruence containing every pair: seed a union-find with the pairs,
/// then relate `(u∧w, v∧w)` and `(u∨w, v∨w)` for related `u, v` until nothing
/// changes.
pub fn congruence_closure(l: &Lattice, pairs: &[(usize, usize)]) -> Congruence {
    let n = l.size();
    let mut uf = UnionFind::new(n);
    for &(a, b) in pairs {
        uf.union(a, b);
    }
    loop {
        let mut changed = false;
        for u in 0..n {
            let r = uf.find(u);
            if r == u {
                continue;
            }
            for w in 0..n {
                changed |= uf.union(l.meet(u, w), l.meet(r, w));
                changed |= uf.union(l.join(u, w), l.join(r, w));
            }
        }
        if !changed {
            break;
        }
    }
    Congruence::from_union_find(&mut uf)
}

/// A quotient lattice together with the projection onto it.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub lattice: Lattice,
    pub projection: Vec<usize>,
}

/// Quotient of `l` by `theta`, with operations computed on class minima.
pub fn quotient(l: &Lattice, theta: &Congruence) -> Quotient {
    let reps = theta.representatives();
    let labels = l.labels().map(|names| reps.iter().map(|&r| format!("[{}]", names[r])).collect());
    let lattice = Lattice::from_fns(
        theta.class_count(),
        |a, b| theta.class_of(l.meet(reps[a], reps[b])),
        |a, b| theta.class_of(l.join(reps[a], reps[b])),
        theta.class_of(l.bottom()),
        theta.class_of(l.top()),
        labels,
    )
    .expect("quotients of distributive lattices are distributive");
    Quotient { lattice, projection: theta.classes().to_vec() }
}

/// Principal congruence `(a = b)`.
pub fn principal(l: &Lattice, a: usize, b: usize) -> Congruence {
    congruence_closure(l, &[(a, b)])
}

/// Congruence `(a ≤ b)`, i.e. `(a ∨ b = b)`.
pub fn principal_leq(l: &Lattice, a: usize, b: usize) -> Congruence {
    congruence_closure(l, &[(l.join(a, b), b)])
}

/// For `a ≤ b`: `x ≡ y (mod a = b)` iff `x ∧ a = y ∧ a` and `x ∨ b = y ∨ b`.
pub fn gratzer_criterion(l: &Lattice, a: usize, b: usize, x: usize, y: usize) -> Result<bool, CongruenceError> {
    if !l.leq(a, b) {
        return Err(CongruenceError::PreconditionViolated { a, b });
    }
    Ok(l.meet(x, a) == l.meet(y, a) && l.join(x, b) == l.join(y, b))
}

/// Whether `(a = b)` and `(a ∧ b = a ∨ b)` generate the same congruence.
pub fn principal_eq_meet_join(l: &Lattice, a: usize, b: usize) -> bool {
    principal(l, a, b) == principal(l, l.meet(a, b), l.join(a, b))
}

/// Whether `L/(a = b)` is the one-element lattice.
pub fn is_zero_quotient(l: &Lattice, a: usize, b: usize) -> bool {
    principal(l, a, b).class_count() == 1
}

/// On-disk congruence: `{ "lattice": <inline or path>, "classes": [...] }`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CongruenceFile {
    pub lattice: LatticeRef,
    pub classes: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LatticeRef {
    Path(String),
    Inline(RawLattice),
}
