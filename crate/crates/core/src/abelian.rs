//! Finite abelian groups and subgroups of their finite products.
//!
//! [`ProductSubgroup`] is an echelon structure for subgroups of `Gᵏ`: for each
//! slot it keeps a transversal of the projection of the "zero before this
//! slot" part, pushing every Schreier generator further right. The subgroup
//! order is then the product of the transversal sizes, and membership is a
//! left-to-right reduction.

use std::collections::BTreeMap;
use std::fmt;

/// A finite abelian group on the carrier `0..size()`.
pub trait AbelianGroup {
    fn size(&self) -> usize;
    fn zero(&self) -> u32;
    fn add(&self, a: u32, b: u32) -> u32;
    fn neg(&self, a: u32) -> u32;

    fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }
}

/// `ℤ/n` with its usual addition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cyclic(pub u32);

impl AbelianGroup for Cyclic {
    fn size(&self) -> usize {
        self.0 as usize
    }
    fn zero(&self) -> u32 {
        0
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }
    fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }
}

/// An additive group given by an explicit table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableGroup {
    pub size: usize,
    pub add: Vec<usize>,
    pub neg: Vec<usize>,
    pub zero: usize,
}

impl AbelianGroup for TableGroup {
    fn size(&self) -> usize {
        self.size
    }
    fn zero(&self) -> u32 {
        self.zero as u32
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.size + b as usize] as u32
    }
    fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize] as u32
    }
}

/// Elements of the subgroup generated by `gens`, in discovery order.
pub fn span<G: AbelianGroup>(g: &G, gens: &[u32]) -> Vec<u32> {
    let mut seen = vec![false; g.size()];
    let mut out = vec![g.zero()];
    seen[g.zero() as usize] = true;
    let mut k = 0;
    while k < out.len() {
        let x = out[k];
        for &s in gens {
            let y = g.add(x, s);
            if !seen[y as usize] {
                seen[y as usize] = true;
                out.push(y);
            }
        }
        k += 1;
    }
    out
}

/// Greedy additive generating set: scan the carrier in order and keep every
/// element not yet in the span of the earlier picks.
pub fn additive_generators<G: AbelianGroup>(g: &G, within: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut gens = Vec::new();
    let mut inside = vec![false; g.size()];
    inside[g.zero() as usize] = true;
    for x in within {
        if !inside[x as usize] {
            gens.push(x);
            for y in span(g, &gens) {
                inside[y as usize] = true;
            }
        }
    }
    gens
}

/// Additive order of `x`.
pub fn element_order<G: AbelianGroup>(g: &G, x: u32) -> u64 {
    let mut k = 1;
    let mut y = x;
    while y != g.zero() {
        y = g.add(y, x);
        k += 1;
    }
    k
}

/// Least common multiple of all element orders.
pub fn exponent<G: AbelianGroup>(g: &G) -> u64 {
    (0..g.size() as u32).map(|x| element_order(g, x)).fold(1, lcm)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// A positive integer kept as its prime factorization, so products of many
/// group orders neither overflow nor lose exact divisibility.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Order(BTreeMap<u64, i64>);

impl Order {
    pub fn one() -> Order {
        Order::default()
    }

    pub fn of(mut n: u64) -> Order {
        assert!(n > 0, "group orders are positive");
        let mut f = BTreeMap::new();
        let mut p = 2;
        while p * p <= n {
            while n.is_multiple_of(p) {
                *f.entry(p).or_insert(0) += 1;
                n /= p;
            }
            p += 1;
        }
        if n > 1 {
            *f.entry(n).or_insert(0) += 1;
        }
        Order(f)
    }

    pub fn mul(&self, other: &Order) -> Order {
        let mut f = self.0.clone();
        for (p, e) in &other.0 {
            *f.entry(*p).or_insert(0) += e;
        }
        f.retain(|_, e| *e != 0);
        Order(f)
    }

    /// Exact quotient; `None` if `other` does not divide `self`.
    pub fn div(&self, other: &Order) -> Option<Order> {
        let mut f = self.0.clone();
        for (p, e) in &other.0 {
            *f.entry(*p).or_insert(0) -= e;
        }
        if f.values().any(|e| *e < 0) {
            return None;
        }
        f.retain(|_, e| *e != 0);
        Some(Order(f))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_u128(&self) -> Option<u128> {
        let mut acc: u128 = 1;
        for (&p, &e) in &self.0 {
            for _ in 0..e {
                acc = acc.checked_mul(p as u128)?;
            }
        }
        Some(acc)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_u128() {
            Some(n) => write!(f, "{n}"),
            None => {
                let parts: Vec<String> = self.0.iter().map(|(p, e)| format!("{p}^{e}")).collect();
                write!(f, "{}", parts.join("*"))
            }
        }
    }
}

#[derive(Debug, Clone)]
struct Level {
    gens: Vec<Vec<u32>>,
    /// `reps[x]` is a subgroup element whose first nonzero slot is this one, with value `x` there.
    reps: Vec<Option<Vec<u32>>>,
    count: usize,
}

/// A subgroup of `Gᵏ` in echelon form.
#[derive(Debug, Clone)]
pub struct ProductSubgroup<'g, G: AbelianGroup> {
    group: &'g G,
    slots: usize,
    levels: Vec<Level>,
}

impl<'g, G: AbelianGroup> ProductSubgroup<'g, G> {
    pub fn new(group: &'g G, slots: usize) -> Self {
        let n = group.size();
        let mut reps = vec![None; n];
        reps[group.zero() as usize] = Some(vec![group.zero(); slots]);
        let level = Level { gens: Vec::new(), reps, count: 1 };
        ProductSubgroup { group, slots, levels: vec![level; slots] }
    }

    pub fn zero_vector(&self) -> Vec<u32> {
        vec![self.group.zero(); self.slots]
    }

    fn sub_vec(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.group.sub(x, y)).collect()
    }

    fn add_vec(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.group.add(x, y)).collect()
    }

    fn leading(&self, v: &[u32]) -> Option<usize> {
        let z = self.group.zero();
        v.iter().position(|&x| x != z)
    }

    /// Adds `v` to the generating set.
    pub fn insert(&mut self, v: Vec<u32>) {
        assert_eq!(v.len(), self.slots);
        let mut pending = vec![v];
        while let Some(v) = pending.pop() {
            let Some(c) = self.leading(&v) else { continue };
            let x = v[c] as usize;
            if let Some(rep) = &self.levels[c].reps[x] {
                let rest = self.sub_vec(&v, rep);
                pending.push(rest);
                continue;
            }
            // New generator at slot c: extend the transversal and push every
            // coincidence (a Schreier generator) to later slots.
            self.levels[c].gens.push(v.clone());
            let existing: Vec<Vec<u32>> = self.levels[c].reps.iter().flatten().cloned().collect();
            let mut queue: Vec<(Vec<u32>, bool)> = existing.into_iter().map(|r| (r, false)).collect();
            while let Some((r, fresh)) = queue.pop() {
                let gens: Vec<Vec<u32>> = if fresh {
                    self.levels[c].gens.clone()
                } else {
                    vec![v.clone()]
                };
                for g in gens {
                    let cand = self.add_vec(&r, &g);
                    let key = cand[c] as usize;
                    match &self.levels[c].reps[key] {
                        Some(rep) => {
                            let diff = self.sub_vec(&cand, rep);
                            if self.leading(&diff).is_some() {
                                pending.push(diff);
                            }
                        }
                        None => {
                            self.levels[c].reps[key] = Some(cand.clone());
                            self.levels[c].count += 1;
                            queue.push((cand, true));
                        }
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut v = v.to_vec();
        while let Some(c) = self.leading(&v) {
            match &self.levels[c].reps[v[c] as usize] {
                Some(rep) => v = self.sub_vec(&v, rep),
                None => return false,
            }
        }
        true
    }

    /// Size of the projection transversal at each slot.
    pub fn slot_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.count).collect()
    }

    pub fn order(&self) -> Order {
        self.levels.iter().fold(Order::one(), |acc, l| acc.mul(&Order::of(l.count as u64)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    /// Brute-force span in `(ℤ/e)ᵏ`.
    fn brute_span(e: u32, k: usize, gens: &[Vec<u32>]) -> HashSet<Vec<u32>> {
        let g = Cyclic(e);
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut stack = vec![vec![0u32; k]];
        seen.insert(vec![0; k]);
        while let Some(x) = stack.pop() {
            for s in gens {
                let y: Vec<u32> = x.iter().zip(s).map(|(&a, &b)| g.add(a, b)).collect();
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    proptest! {
        #[test]
        fn echelon_matches_brute_force(
            e in 2u32..9,
            k in 1usize..4,
            raw in prop::collection::vec(prop::collection::vec(0u32..100, 3), 0..4),
        ) {
            let gens: Vec<Vec<u32>> = raw.iter().map(|v| v[..k].iter().map(|x| x % e).collect()).collect();
            let g = Cyclic(e);
            let mut sub = ProductSubgroup::new(&g, k);
            for v in &gens {
                sub.insert(v.clone());
            }
            let brute = brute_span(e, k, &gens);
            prop_assert_eq!(sub.order().to_u128(), Some(brute.len() as u128));
            // membership agrees on the whole ambient group
            let total = (e as usize).pow(k as u32);
            for idx in 0..total {
                let mut v = vec![0u32; k];
                let mut r = idx;
                for s in v.iter_mut() {
                    *s = (r % e as usize) as u32;
                    r /= e as usize;
                }
                prop_assert_eq!(sub.contains(&v), brute.contains(&v));
            }
        }
    }

    #[test]
    fn order_arithmetic() {
        let a = Order::of(12);
        let b = Order::of(18);
        assert_eq!(a.mul(&b).to_u128(), Some(216));
        assert_eq!(a.mul(&b).div(&b), Some(a.clone()));
        assert_eq!(a.div(&b), None);
        assert_eq!(Order::of(1), Order::one());
    }

    #[test]
    fn greedy_generators_of_klein_group() {
        let g = TableGroup {
            size: 4,
            add: (0..16).map(|k| (k / 4) ^ (k % 4)).collect(),
            neg: vec![0, 1, 2, 3],
            zero: 0,
        };
        assert_eq!(additive_generators(&g, 0..4), vec![1, 2]);
        assert_eq!(exponent(&g), 2);
    }
}
