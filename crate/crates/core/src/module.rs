//! Finite modules over finite commutative rings.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::abelian::{AbelianGroup, TableGroup};
use crate::ring::{enumerate_homs, FiniteRing, Ideal, RingError, RingHom};

/// An `R`-module on the carrier `0..size`, with `action[r][m] = r·m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModule {
    ring: FiniteRing,
    group: TableGroup,
    action: Vec<usize>,
    labels: Vec<String>,
}

impl AbelianGroup for FiniteModule {
    fn size(&self) -> usize {
        self.group.size
    }
    fn zero(&self) -> u32 {
        self.group.zero as u32
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        self.group.add(a, b)
    }
    fn neg(&self, a: u32) -> u32 {
        self.group.neg(a)
    }
}

/// JSON for `Z/n-with-action:<path>`: an `|R| × n` action table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActionFile {
    pub action: Vec<Vec<usize>>,
}

impl FiniteModule {
    /// Checks the abelian group and module axioms by full scan.
    pub fn new(ring: FiniteRing, group: TableGroup, action: Vec<usize>, labels: Vec<String>) -> Result<FiniteModule, RingError> {
        let m = FiniteModule { ring, group, action, labels };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<(), RingError> {
        let n = self.group.size;
        let r = &self.ring;
        let g = &self.group;
        let fail = |axiom, witness| Err(RingError::NotARing { axiom, witness });
        if n == 0 || g.add.len() != n * n || g.neg.len() != n || g.zero >= n || self.action.len() != r.size() * n {
            return fail("module table shape", vec![]);
        }
        if g.add.iter().chain(&g.neg).chain(&self.action).any(|&x| x >= n) || self.labels.len() != n {
            return fail("module table range", vec![]);
        }
        for a in 0..n {
            if self.addu(a, g.zero) != a || self.addu(a, g.neg[a]) != g.zero {
                return fail("module identity/inverse", vec![a]);
            }
            if self.act(r.one(), a) != a {
                return fail("unit action", vec![a]);
            }
            for b in 0..n {
                if self.addu(a, b) != self.addu(b, a) {
                    return fail("module commutativity", vec![a, b]);
                }
                for c in 0..n {
                    if self.addu(self.addu(a, b), c) != self.addu(a, self.addu(b, c)) {
                        return fail("module associativity", vec![a, b, c]);
                    }
                }
            }
        }
        for s in 0..r.size() {
            for t in 0..r.size() {
                for m in 0..n {
                    if self.act(r.mul(s, t), m) != self.act(s, self.act(t, m)) {
                        return fail("action associativity", vec![s, t, m]);
                    }
                    if self.act(r.add(s, t), m) != self.addu(self.act(s, m), self.act(t, m)) {
                        return fail("action distributes over ring addition", vec![s, t, m]);
                    }
                }
            }
            for a in 0..n {
                for b in 0..n {
                    if self.act(s, self.addu(a, b)) != self.addu(self.act(s, a), self.act(s, b)) {
                        return fail("action distributes over module addition", vec![s, a, b]);
                    }
                }
            }
        }
        Ok(())
    }

    /// `R` acting on itself.
    pub fn ring_as_module(r: &FiniteRing) -> FiniteModule {
        FiniteModule::restrict(&RingHom::identity(r))
    }

    /// The target of `σ: R → A` as an `R`-module via `r·a = σ(r)a`.
    pub fn restrict(sigma: &RingHom) -> FiniteModule {
        let (r, a) = (&sigma.source, &sigma.target);
        let n = a.size();
        let group = additive_table(a);
        let action = (0..r.size()).flat_map(|s| (0..n).map(move |x| a.mul(sigma.apply(s), x))).collect();
        FiniteModule { ring: r.clone(), group, action, labels: a.labels().to_vec() }
    }

    /// An ideal as a submodule of `R`.
    pub fn from_ideal(r: &FiniteRing, ideal: &Ideal) -> FiniteModule {
        FiniteModule::ring_as_module(r).submodule(ideal.members())
    }

    /// `R/I`, classes labelled by their least element.
    pub fn quotient_ring_module(r: &FiniteRing, ideal: &Ideal) -> FiniteModule {
        let mut class = vec![usize::MAX; r.size()];
        let mut reps = Vec::new();
        for x in 0..r.size() {
            if class[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for &i in ideal.members() {
                class[r.add(x, i)] = id;
            }
        }
        let n = reps.len();
        let group = TableGroup {
            size: n,
            add: (0..n * n).map(|k| class[r.add(reps[k / n], reps[k % n])]).collect(),
            neg: (0..n).map(|a| class[r.neg(reps[a])]).collect(),
            zero: class[r.zero()],
        };
        let action = (0..r.size()).flat_map(|s| (0..n).map(move |a| (s, a))).map(|(s, a)| class[r.mul(s, reps[a])]).collect();
        let labels = reps.iter().map(|&x| format!("[{}]", r.label(x))).collect();
        FiniteModule { ring: r.clone(), group, action, labels }
    }

    /// `ℤ/k` with the action induced by the unique ring hom `R → ℤ/k`.
    pub fn cyclic_via_hom(r: &FiniteRing, k: usize) -> Result<FiniteModule, RingError> {
        let target = FiniteRing::zmod(k);
        let homs = enumerate_homs(r, &target, &[]);
        let map = homs
            .into_iter()
            .next()
            .ok_or_else(|| RingError::NoStructureHom(format!("to Z/{k}")))?;
        Ok(FiniteModule::restrict(&RingHom { source: r.clone(), target, map }))
    }

    /// `ℤ/n` with an explicit action table, validated.
    pub fn cyclic_with_action(r: &FiniteRing, n: usize, action: &[Vec<usize>]) -> Result<FiniteModule, RingError> {
        let group = additive_table(&FiniteRing::zmod(n));
        if action.len() != r.size() || action.iter().any(|row| row.len() != n) {
            return Err(RingError::BadTable(format!("action must be {} × {n}", r.size())));
        }
        FiniteModule::new(r.clone(), group, action.concat(), (0..n).map(|i| i.to_string()).collect())
    }

    /// Parses a module spec: `self`, `ring-as-module`, `Z/k` (via the ring
    /// hom `R → ℤ/k`) or `Z/n-with-action:<path>`.
    pub fn parse_spec(r: &FiniteRing, spec: &str, base: Option<&Path>) -> Result<FiniteModule, RingError> {
        let s = spec.trim();
        if s == "self" || s == "ring-as-module" {
            return Ok(FiniteModule::ring_as_module(r));
        }
        if let Some(rest) = s.strip_prefix("Z/") {
            if let Some((n, path)) = rest.split_once("-with-action:") {
                let n: usize = n.parse().map_err(|_| RingError::BadSpec(spec.into()))?;
                let full = base.map_or_else(|| Path::new(path).to_path_buf(), |b| b.join(path));
                let text = std::fs::read_to_string(&full)
                    .map_err(|e| RingError::Io { path: full.display().to_string(), message: e.to_string() })?;
                let file: ActionFile = serde_json::from_str(&text).map_err(|e| RingError::BadTable(e.to_string()))?;
                return FiniteModule::cyclic_with_action(r, n, &file.action);
            }
            let k: usize = rest.parse().map_err(|_| RingError::BadSpec(spec.into()))?;
            if k == 0 {
                return Err(RingError::BadSpec(spec.into()));
            }
            return FiniteModule::cyclic_via_hom(r, k);
        }
        Err(RingError::BadSpec(spec.into()))
    }

    /// Restriction to a subset closed under addition and the action, relabelled densely.
    pub fn submodule(&self, members: &[usize]) -> FiniteModule {
        let mut carrier = members.to_vec();
        carrier.sort_unstable();
        carrier.dedup();
        let mut index = vec![usize::MAX; self.size()];
        for (k, &x) in carrier.iter().enumerate() {
            index[x] = k;
        }
        let n = carrier.len();
        let group = TableGroup {
            size: n,
            add: (0..n * n).map(|k| index[self.addu(carrier[k / n], carrier[k % n])]).collect(),
            neg: carrier.iter().map(|&x| index[self.group.neg[x]]).collect(),
            zero: index[self.group.zero],
        };
        let action = (0..self.ring.size())
            .flat_map(|s| carrier.iter().map(move |&x| (s, x)))
            .map(|(s, x)| index[self.act(s, x)])
            .collect();
        let labels = carrier.iter().map(|&x| self.labels[x].clone()).collect();
        let sub = FiniteModule { ring: self.ring.clone(), group, action, labels };
        debug_assert!(sub.check().is_ok(), "submodule must be closed");
        sub
    }

    /// The elements `e·m`, as a subset of the carrier.
    pub fn scaled(&self, e: usize) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.size()).map(|m| self.act(e, m)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn group(&self) -> &TableGroup {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.group.size
    }

    pub fn zero_element(&self) -> usize {
        self.group.zero
    }

    #[inline]
    pub fn addu(&self, a: usize, b: usize) -> usize {
        self.group.add[a * self.group.size + b]
    }

    pub fn subu(&self, a: usize, b: usize) -> usize {
        self.addu(a, self.group.neg[b])
    }

    #[inline]
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.action[r * self.group.size + m]
    }

    pub fn label(&self, m: usize) -> &str {
        &self.labels[m]
    }
}

pub(crate) fn additive_table(r: &FiniteRing) -> TableGroup {
    let n = r.size();
    TableGroup {
        size: n,
        add: (0..n * n).map(|k| r.add(k / n, k % n)).collect(),
        neg: (0..n).map(|a| r.neg(a)).collect(),
        zero: r.zero(),
    }
}
