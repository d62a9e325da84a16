//! Finite commutative rings with unit, stored as dense operation tables.
//!
//! Localization of a finite ring at `f` is the factor `eR` cut out by the
//! unique idempotent `e` in the multiplicative orbit of `f`. Ring homs are
//! found by backtracking over a ring generating set with additive and
//! multiplicative propagation.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::AbelianGroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("not a commutative ring: {axiom} fails at {witness:?}")]
    NotARing { axiom: &'static str, witness: Vec<usize> },
    #[error("element {index} out of range for ring of size {size}")]
    OutOfRange { index: usize, size: usize },
    #[error("cover {0:?} is not unimodular: 1 is not in the ideal it generates")]
    NotUnimodular(Vec<usize>),
    #[error("map is not a ring homomorphism: {0}")]
    NotAHom(&'static str),
    #[error("no ring homomorphism {0}")]
    NoStructureHom(String),
    #[error("structure homomorphism is ambiguous ({0} candidates)")]
    AmbiguousStructureHom(usize),
    #[error("cannot parse ring spec `{0}`")]
    BadSpec(String),
    #[error("reading {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed table file: {0}")]
    BadTable(String),
    #[error("polynomial quotient must be over ℤ/n with n ≥ 1 and degree ≥ 1")]
    BadPolynomial,
}

/// Ring tables as they appear in JSON: `size, add, mul, neg, zero, one, labels`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawRing {
    pub size: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
    pub zero: usize,
    pub one: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// A validated finite commutative ring with unit. The zero ring is allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    size: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    one: usize,
    labels: Vec<String>,
}

impl AbelianGroup for FiniteRing {
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

impl FiniteRing {
    pub fn validate(raw: RawRing) -> Result<FiniteRing, RingError> {
        let n = raw.size;
        let square = |t: &Vec<Vec<usize>>| t.len() == n && t.iter().all(|r| r.len() == n && r.iter().all(|&x| x < n));
        if n == 0 || !square(&raw.add) || !square(&raw.mul) || raw.neg.len() != n || raw.neg.iter().any(|&x| x >= n) {
            return Err(RingError::NotARing { axiom: "total tables", witness: vec![] });
        }
        if raw.zero >= n || raw.one >= n {
            return Err(RingError::NotARing { axiom: "constants in range", witness: vec![raw.zero, raw.one] });
        }
        let labels = match raw.labels {
            Some(l) if l.len() == n => l,
            Some(_) => return Err(RingError::NotARing { axiom: "label count", witness: vec![] }),
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        let r = FiniteRing {
            size: n,
            add: raw.add.concat(),
            mul: raw.mul.concat(),
            neg: raw.neg,
            zero: raw.zero,
            one: raw.one,
            labels,
        };
        r.check_axioms()?;
        Ok(r)
    }

    fn check_axioms(&self) -> Result<(), RingError> {
        let n = self.size;
        let fail = |axiom, witness| Err(RingError::NotARing { axiom, witness });
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return fail("additive identity", vec![a]);
            }
            if self.mul(a, self.one) != a {
                return fail("multiplicative identity", vec![a]);
            }
            if self.add(a, self.neg(a)) != self.zero {
                return fail("additive inverse", vec![a]);
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", vec![a, b]);
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplicative commutativity", vec![a, b]);
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("additive associativity", vec![a, b, c]);
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplicative associativity", vec![a, b, c]);
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity", vec![a, b, c]);
                    }
                }
            }
        }
        Ok(())
    }

    fn from_fns(
        size: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        neg: impl Fn(usize) -> usize,
        zero: usize,
        one: usize,
        labels: Vec<String>,
    ) -> Result<FiniteRing, RingError> {
        let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
            (0..size).map(|a| (0..size).map(|b| f(a, b)).collect()).collect()
        };
        FiniteRing::validate(RawRing {
            size,
            add: table(&add),
            mul: table(&mul),
            neg: (0..size).map(neg).collect(),
            zero,
            one,
            labels: Some(labels),
        })
    }

    /// `ℤ/n`; `ℤ/1` is the zero ring.
    pub fn zmod(n: usize) -> FiniteRing {
        assert!(n >= 1, "ℤ/0 is not finite");
        FiniteRing::from_fns(
            n,
            |a, b| (a + b) % n,
            |a, b| a * b % n,
            |a| (n - a) % n,
            0,
            1 % n,
            (0..n).map(|i| i.to_string()).collect(),
        )
        .expect("ℤ/n is a commutative ring")
    }

    pub fn zero_ring() -> FiniteRing {
        FiniteRing::zmod(1)
    }

    /// Direct product, indexed in mixed radix with the first factor least significant.
    pub fn product(factors: &[FiniteRing]) -> FiniteRing {
        let size: usize = factors.iter().map(|r| r.size).product();
        let split = |mut x: usize| -> Vec<usize> {
            factors
                .iter()
                .map(|r| {
                    let c = x % r.size;
                    x /= r.size;
                    c
                })
                .collect()
        };
        let join = |parts: Vec<usize>| -> usize {
            parts.iter().zip(factors).rev().fold(0, |acc, (&c, r)| acc * r.size + c)
        };
        let zip = |a: usize, b: usize, op: &dyn Fn(&FiniteRing, usize, usize) -> usize| {
            join(split(a).into_iter().zip(split(b)).zip(factors).map(|((x, y), r)| op(r, x, y)).collect())
        };
        let labels = (0..size)
            .map(|x| {
                let parts: Vec<&str> = split(x).iter().zip(factors).map(|(&c, r)| r.labels[c].as_str()).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        FiniteRing::from_fns(
            size,
            |a, b| zip(a, b, &|r, x, y| r.add(x, y)),
            |a, b| zip(a, b, &|r, x, y| r.mul(x, y)),
            |a| join(split(a).iter().zip(factors).map(|(&c, r)| r.neg(c)).collect()),
            join(factors.iter().map(|r| r.zero).collect()),
            join(factors.iter().map(|r| r.one).collect()),
            labels,
        )
        .expect("products of commutative rings are commutative rings")
    }

    /// `ℤ/n[x]/(p)` for the monic `p = x^d + c_{d-1}x^{d-1} + … + c_0`, given
    /// as `[c_0, …, c_{d-1}]`. Elements are coefficient vectors in base `n`.
    pub fn polynomial_quotient(n: usize, lower_coeffs: &[usize]) -> Result<FiniteRing, RingError> {
        let d = lower_coeffs.len();
        if n == 0 || d == 0 {
            return Err(RingError::BadPolynomial);
        }
        let size = n.checked_pow(d as u32).filter(|&s| s <= 4096).ok_or(RingError::BadPolynomial)?;
        let coeffs = |mut x: usize| -> Vec<usize> {
            (0..d)
                .map(|_| {
                    let c = x % n;
                    x /= n;
                    c
                })
                .collect()
        };
        let pack = |v: &[usize]| v.iter().rev().fold(0, |acc, &c| acc * n + c);
        let mul = |a: usize, b: usize| {
            let (u, v) = (coeffs(a), coeffs(b));
            let mut prod = vec![0usize; 2 * d - 1];
            for (i, &x) in u.iter().enumerate() {
                for (j, &y) in v.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % n;
                }
            }
            // x^k = -Σ c_i x^{k-d+i} for k ≥ d
            for k in (d..prod.len()).rev() {
                let top = prod[k];
                prod[k] = 0;
                for (i, &c) in lower_coeffs.iter().enumerate() {
                    let idx = k - d + i;
                    prod[idx] = (prod[idx] + n - (top * (c % n)) % n) % n;
                }
            }
            pack(&prod[..d])
        };
        let labels = (0..size)
            .map(|x| {
                let terms: Vec<String> = coeffs(x)
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| match i {
                        0 => c.to_string(),
                        1 => format!("{c}x"),
                        _ => format!("{c}x^{i}"),
                    })
                    .collect();
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            })
            .collect();
        FiniteRing::from_fns(
            size,
            |a, b| pack(&coeffs(a).iter().zip(coeffs(b)).map(|(x, y)| (x + y) % n).collect::<Vec<_>>()),
            mul,
            |a| pack(&coeffs(a).iter().map(|x| (n - x) % n).collect::<Vec<_>>()),
            0,
            1 % n,
            labels,
        )
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn is_zero_ring(&self) -> bool {
        self.size == 1
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn check_index(&self, a: usize) -> Result<usize, RingError> {
        if a < self.size {
            Ok(a)
        } else {
            Err(RingError::OutOfRange { index: a, size: self.size })
        }
    }

    pub fn is_unit(&self, a: usize) -> bool {
        (0..self.size).any(|b| self.mul(a, b) == self.one)
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size).filter(|&e| self.mul(e, e) == e).collect()
    }

    pub fn to_raw(&self) -> RawRing {
        let n = self.size;
        RawRing {
            size: n,
            add: self.add.chunks(n).map(<[usize]>::to_vec).collect(),
            mul: self.mul.chunks(n).map(<[usize]>::to_vec).collect(),
            neg: self.neg.clone(),
            zero: self.zero,
            one: self.one,
            labels: Some(self.labels.clone()),
        }
    }

    /// `n·1`, the image of an integer.
    pub fn from_integer(&self, k: u64) -> usize {
        let mut acc = self.zero;
        for _ in 0..k % (crate::abelian::element_order(self, self.one as u32)) {
            acc = self.add(acc, self.one);
        }
        acc
    }

    /// The unique idempotent in the multiplicative orbit `f, f², f³, …`.
    ///
    /// The orbit is eventually periodic; the cycle is a cyclic group whose
    /// identity is the idempotent.
    pub fn stable_idempotent(&self, f: usize) -> usize {
        let mut first_seen = vec![usize::MAX; self.size];
        let mut powers = Vec::new();
        let mut x = f;
        while first_seen[x] == usize::MAX {
            first_seen[x] = powers.len();
            powers.push(x);
            x = self.mul(x, f);
        }
        let cycle = &powers[first_seen[x]..];
        *cycle
            .iter()
            .find(|&&e| self.mul(e, e) == e)
            .expect("every finite cyclic semigroup has an idempotent in its cycle")
    }

    /// The ring `eR` with unit `e`, together with the projection `r ↦ e·r`.
    pub fn corner(&self, e: usize) -> (FiniteRing, RingHom) {
        debug_assert_eq!(self.mul(e, e), e);
        let mut carrier: Vec<usize> = (0..self.size).map(|r| self.mul(e, r)).collect();
        carrier.sort_unstable();
        carrier.dedup();
        let mut index = vec![usize::MAX; self.size];
        for (k, &x) in carrier.iter().enumerate() {
            index[x] = k;
        }
        let sub = FiniteRing::from_fns(
            carrier.len(),
            |a, b| index[self.add(carrier[a], carrier[b])],
            |a, b| index[self.mul(carrier[a], carrier[b])],
            |a| index[self.neg(carrier[a])],
            index[self.zero],
            index[e],
            carrier.iter().map(|&x| self.labels[x].clone()).collect(),
        )
        .expect("corner rings of idempotents are rings");
        let map = (0..self.size).map(|r| index[self.mul(e, r)]).collect();
        let hom = RingHom { source: self.clone(), target: sub.clone(), map };
        (sub, hom)
    }

    /// Least ideal containing `gens`.
    pub fn ideal_generated(&self, gens: &[usize]) -> Ideal {
        let mut member = vec![false; self.size];
        member[self.zero] = true;
        let mut list = vec![self.zero];
        let push = |x: usize, member: &mut Vec<bool>, list: &mut Vec<usize>| {
            if !member[x] {
                member[x] = true;
                list.push(x);
            }
        };
        for &g in gens {
            push(g, &mut member, &mut list);
        }
        let mut k = 0;
        while k < list.len() {
            let x = list[k];
            push(self.neg(x), &mut member, &mut list);
            for r in 0..self.size {
                push(self.mul(r, x), &mut member, &mut list);
            }
            for j in 0..=k {
                let y = list[j];
                push(self.add(x, y), &mut member, &mut list);
            }
            k += 1;
        }
        let mut members: Vec<usize> = list;
        members.sort_unstable();
        Ideal { members }
    }

    /// Whether `1 ∈ (f₁, …, fₙ)`.
    pub fn is_unimodular(&self, cover: &[usize]) -> bool {
        self.ideal_generated(cover).contains(self.one)
    }

    /// Every ideal, sorted by member list.
    pub fn all_ideals(&self) -> Vec<Ideal> {
        let mut found = vec![self.ideal_generated(&[])];
        let mut k = 0;
        while k < found.len() {
            for r in 0..self.size {
                if found[k].contains(r) {
                    continue;
                }
                let mut gens = found[k].members.clone();
                gens.push(r);
                let bigger = self.ideal_generated(&gens);
                if !found.contains(&bigger) {
                    found.push(bigger);
                }
            }
            k += 1;
        }
        found.sort_by(|a, b| a.members.len().cmp(&b.members.len()).then_with(|| a.members.cmp(&b.members)));
        found
    }

    pub fn from_json(text: &str) -> Result<FiniteRing, RingError> {
        let raw: RawRing = serde_json::from_str(text).map_err(|e| RingError::BadTable(e.to_string()))?;
        FiniteRing::validate(raw)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_raw()).expect("ring tables serialize")
    }
}

/// An ideal, as its sorted member list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    members: Vec<usize>,
}

impl Ideal {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// A unital ring homomorphism, as an element table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingHom {
    pub source: FiniteRing,
    pub target: FiniteRing,
    pub map: Vec<usize>,
}

impl RingHom {
    pub fn new(source: FiniteRing, target: FiniteRing, map: Vec<usize>) -> Result<RingHom, RingError> {
        let h = RingHom { source, target, map };
        h.check()?;
        Ok(h)
    }

    pub fn identity(r: &FiniteRing) -> RingHom {
        RingHom { source: r.clone(), target: r.clone(), map: (0..r.size()).collect() }
    }

    fn check(&self) -> Result<(), RingError> {
        let (s, t) = (&self.source, &self.target);
        if self.map.len() != s.size() || self.map.iter().any(|&x| x >= t.size()) {
            return Err(RingError::NotAHom("table shape"));
        }
        if self.map[s.one()] != t.one() {
            return Err(RingError::NotAHom("unit"));
        }
        for a in 0..s.size() {
            for b in 0..s.size() {
                if self.map[s.add(a, b)] != t.add(self.map[a], self.map[b]) {
                    return Err(RingError::NotAHom("addition"));
                }
                if self.map[s.mul(a, b)] != t.mul(self.map[a], self.map[b]) {
                    return Err(RingError::NotAHom("multiplication"));
                }
            }
        }
        Ok(())
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn is_bijective(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        for &y in &self.map {
            if hit[y] {
                return false;
            }
            hit[y] = true;
        }
        hit.iter().all(|&h| h)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &RingHom) -> RingHom {
        RingHom {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&x| other.map[x]).collect(),
        }
    }
}

/// Ring generating set of `r` over the subring generated by `seed`.
fn ring_generators(r: &FiniteRing, seed: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; r.size()];
    let mut list = Vec::new();
    let close = |inside: &mut Vec<bool>, list: &mut Vec<usize>, start: &[usize]| {
        for &x in start {
            if !inside[x] {
                inside[x] = true;
                list.push(x);
            }
        }
        let mut k = 0;
        while k < list.len() {
            let x = list[k];
            for j in 0..=k {
                let y = list[j];
                for z in [r.add(x, y), r.mul(x, y)] {
                    if !inside[z] {
                        inside[z] = true;
                        list.push(z);
                    }
                }
            }
            k += 1;
        }
    };
    let mut start = vec![r.zero(), r.one()];
    start.extend_from_slice(seed);
    close(&mut inside, &mut list, &start);
    let mut gens = Vec::new();
    for x in 0..r.size() {
        if !inside[x] {
            gens.push(x);
            close(&mut inside, &mut list, &[x]);
        }
    }
    gens
}

/// Partial map with add/mul propagation; `None` from `assign` means a clash.
struct Partial<'a> {
    source: &'a FiniteRing,
    target: &'a FiniteRing,
    map: Vec<Option<usize>>,
    assigned: Vec<usize>,
}

impl Partial<'_> {
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            match self.map[x] {
                Some(v) if v == y => continue,
                Some(_) => return false,
                None => {}
            }
            self.map[x] = Some(y);
            self.assigned.push(x);
            let snapshot = self.assigned.len();
            for k in 0..snapshot {
                let a = self.assigned[k];
                let fa = self.map[a].expect("assigned");
                queue.push((self.source.add(a, x), self.target.add(fa, y)));
                queue.push((self.source.mul(a, x), self.target.mul(fa, y)));
            }
        }
        true
    }

    fn undo_to(&mut self, len: usize) {
        while self.assigned.len() > len {
            let x = self.assigned.pop().expect("nonempty");
            self.map[x] = None;
        }
    }
}

/// All unital ring homs `source → target` with `φ(a) = b` for each fixed pair.
pub fn enumerate_homs(source: &FiniteRing, target: &FiniteRing, fixed: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut p = Partial { source, target, map: vec![None; source.size()], assigned: Vec::new() };
    if !p.assign(source.zero(), target.zero()) || !p.assign(source.one(), target.one()) {
        return Vec::new();
    }
    for &(a, b) in fixed {
        if !p.assign(a, b) {
            return Vec::new();
        }
    }
    let seed: Vec<usize> = fixed.iter().map(|&(a, _)| a).collect();
    let gens = ring_generators(source, &seed);
    let mut out = Vec::new();
    fn go(p: &mut Partial<'_>, gens: &[usize], out: &mut Vec<Vec<usize>>) {
        let Some((&g, rest)) = gens.split_first() else {
            out.push(p.map.iter().map(|v| v.expect("generators cover the ring")).collect());
            return;
        };
        if p.map[g].is_some() {
            go(p, rest, out);
            return;
        }
        for y in 0..p.target.size() {
            let mark = p.assigned.len();
            if p.assign(g, y) {
                go(p, rest, out);
            }
            p.undo_to(mark);
        }
    }
    go(&mut p, &gens, &mut out);
    out
}

/// A localization of `R` at `f`: the ring, the structure hom and the idempotent used.
#[derive(Debug, Clone)]
pub struct Localization {
    pub ring: FiniteRing,
    pub hom: RingHom,
    pub idempotent: usize,
}

/// `R_f`, realized as `eR` for the stable idempotent `e` of `f`.
pub fn localize(r: &FiniteRing, f: usize) -> Localization {
    let e = r.stable_idempotent(f);
    let (ring, hom) = r.corner(e);
    Localization { ring, hom, idempotent: e }
}

/// Test family for universal-property checks: the zero ring and `ℤ/n` for
/// small `n`.
pub fn standard_test_family() -> Vec<FiniteRing> {
    [1, 2, 3, 4, 5, 6, 8, 9, 12].iter().map(|&n| FiniteRing::zmod(n)).collect()
}

/// Named rings used by the sweeps: cyclic rings, products and `ℤ/6[x]/(x² − x)`.
pub fn bundled_rings() -> Vec<(String, FiniteRing)> {
    let mut out: Vec<(String, FiniteRing)> =
        [2, 4, 6, 8, 9, 12, 30].iter().map(|&n| (format!("Z/{n}"), FiniteRing::zmod(n))).collect();
    for spec in ["prod(Z/2,Z/2)", "prod(Z/4,Z/9)"] {
        out.push((spec.to_string(), parse_ring_spec(spec).expect("bundled spec parses")));
    }
    // x² = x
    let idempotent_line = FiniteRing::polynomial_quotient(6, &[0, 5]).expect("monic quotient is a ring");
    out.push(("Z/6[x]/(x^2-x)".to_string(), idempotent_line));
    out
}

/// Brute-force universal property: for every `S` in `family` (plus `R` and
/// the candidate itself) and every hom `φ: R → S` sending `f` to a unit,
/// exactly one `ψ` out of the candidate satisfies `ψ ∘ λ = φ`.
pub fn verify_localization(r: &FiniteRing, f: usize, candidate: &RingHom, family: &[FiniteRing]) -> bool {
    let cand = &candidate.target;
    if candidate.source != *r || !cand.is_unit(candidate.apply(f)) {
        return false;
    }
    let mut tests: Vec<&FiniteRing> = family.iter().collect();
    tests.push(r);
    tests.push(cand);
    for s in tests {
        for phi in enumerate_homs(r, s, &[]) {
            if !s.is_unit(phi[f]) {
                continue;
            }
            let fixed: Vec<(usize, usize)> = (0..r.size()).map(|x| (candidate.apply(x), phi[x])).collect();
            if enumerate_homs(cand, s, &fixed).len() != 1 {
                return false;
            }
        }
    }
    true
}

/// Whether `(A, σ_A)` and `(B, σ_B)` are isomorphic as `R`-algebras, found by
/// enumerating homs over `R` and testing bijectivity.
pub fn isomorphic_over(sigma_a: &RingHom, sigma_b: &RingHom) -> bool {
    let (a, b) = (&sigma_a.target, &sigma_b.target);
    if a.size() != b.size() {
        return false;
    }
    let fixed: Vec<(usize, usize)> =
        (0..sigma_a.source.size()).map(|x| (sigma_a.apply(x), sigma_b.apply(x))).collect();
    enumerate_homs(a, b, &fixed).into_iter().any(|m| {
        let mut seen = vec![false; b.size()];
        m.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    })
}

/// `R_f ⊗_R R_g ≅ R_{fg}`, with the left side computed as `e_f·e_g·R`.
pub fn localization_product(r: &FiniteRing, f: usize, g: usize) -> bool {
    let fg = localize(r, r.mul(f, g));
    let e = r.mul(r.stable_idempotent(f), r.stable_idempotent(g));
    let (_, pushout) = r.corner(e);
    isomorphic_over(&fg.hom, &pushout)
}

/// Points of `A` over `R`: homs `A → R` that are left inverse to the structure hom.
pub fn spec_points(structure: &RingHom) -> Vec<RingHom> {
    let (r, a) = (&structure.source, &structure.target);
    let fixed: Vec<(usize, usize)> = (0..r.size()).map(|x| (structure.apply(x), x)).collect();
    enumerate_homs(a, r, &fixed)
        .into_iter()
        .map(|map| RingHom { source: a.clone(), target: r.clone(), map })
        .collect()
}

/// Kernel and image sizes of the evaluation map `A → R^{Spec(A)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityDiagnostics {
    pub points: usize,
    pub kernel: usize,
    pub image: usize,
    /// Whether evaluation is a bijection onto `R^{Spec(A)}`.
    pub bijective: bool,
}

pub fn duality_diagnostics(structure: &RingHom) -> DualityDiagnostics {
    let points = spec_points(structure);
    let a = &structure.target;
    let mut images: Vec<Vec<usize>> = (0..a.size()).map(|x| points.iter().map(|p| p.apply(x)).collect()).collect();
    let kernel = images.iter().filter(|v| v.iter().all(|&y| y == structure.source.zero())).count();
    images.sort();
    images.dedup();
    DualityDiagnostics {
        points: points.len(),
        kernel,
        image: images.len(),
        bijective: kernel == 1
            && (structure.source.size() as u64).checked_pow(points.len() as u32) == Some(images.len() as u64),
    }
}

/// The unique hom `R → A` for the structure map, if there is exactly one.
pub fn unique_structure_hom(r: &FiniteRing, a: &FiniteRing) -> Result<RingHom, RingError> {
    let homs = enumerate_homs(r, a, &[]);
    match homs.len() {
        0 => Err(RingError::NoStructureHom(format!("from a ring of size {} to one of size {}", r.size(), a.size()))),
        1 => Ok(RingHom { source: r.clone(), target: a.clone(), map: homs.into_iter().next().expect("one") }),
        k => Err(RingError::AmbiguousStructureHom(k)),
    }
}

/// Parses `Z/n`, `prod(spec, spec, …)` or `table:<path>`.
pub fn parse_ring_spec(spec: &str) -> Result<FiniteRing, RingError> {
    parse_ring_spec_in(spec, None)
}

/// As [`parse_ring_spec`], resolving relative table paths against `base`.
pub fn parse_ring_spec_in(spec: &str, base: Option<&Path>) -> Result<FiniteRing, RingError> {
    let s = spec.trim();
    let bad = || RingError::BadSpec(spec.to_string());
    if let Some(path) = s.strip_prefix("table:") {
        let full = match base {
            Some(b) => b.join(path),
            None => Path::new(path).to_path_buf(),
        };
        let text = std::fs::read_to_string(&full)
            .map_err(|e| RingError::Io { path: full.display().to_string(), message: e.to_string() })?;
        return FiniteRing::from_json(&text);
    }
    if let Some(n) = s.strip_prefix("Z/").or_else(|| s.strip_prefix("ℤ/")) {
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        if n == 0 || n > 4096 {
            return Err(bad());
        }
        return Ok(FiniteRing::zmod(n));
    }
    if let Some(inner) = s.strip_prefix("prod(").and_then(|r| r.strip_suffix(')')) {
        let mut parts = Vec::new();
        let mut depth = 0usize;
        let mut start = 0;
        for (i, ch) in inner.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth = depth.checked_sub(1).ok_or_else(bad)?,
                ',' if depth == 0 => {
                    parts.push(&inner[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        parts.push(&inner[start..]);
        if parts.len() < 2 {
            return Err(bad());
        }
        let factors = parts.iter().map(|p| parse_ring_spec_in(p, base)).collect::<Result<Vec<_>, _>>()?;
        if factors.iter().map(FiniteRing::size).product::<usize>() > 4096 {
            return Err(bad());
        }
        return Ok(FiniteRing::product(&factors));
    }
    Err(bad())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideals_of_z6() {
        let r = FiniteRing::zmod(6);
        assert_eq!(r.ideal_generated(&[2]).members(), &[0, 2, 4]);
        assert_eq!(r.ideal_generated(&[]).members(), &[0]);
        assert_eq!(r.ideal_generated(&[2, 3]).members(), &[0, 1, 2, 3, 4, 5]);
        assert!(r.is_unimodular(&[3, 4]));
        assert!(!r.is_unimodular(&[2, 4]));
        assert_eq!(r.all_ideals().len(), 4);
    }

    #[test]
    fn localizations_of_examples() {
        let z6 = FiniteRing::zmod(6);
        let l = localize(&z6, 3);
        assert_eq!(l.ring.size(), 2);
        assert_eq!(l.idempotent, 3);
        assert_eq!(l.ring.labels(), ["0", "3"]);
        assert_eq!(localize(&z6, 5).ring.size(), 6);
        let z12 = FiniteRing::zmod(12);
        let l = localize(&z12, 2);
        assert_eq!(l.idempotent, 4);
        assert_eq!(l.ring.labels(), ["0", "4", "8"]);
        assert!(localize(&z6, 0).ring.is_zero_ring());
    }

    #[test]
    fn idempotent_found_in_cycle_not_by_squaring() {
        // In ℤ/7, 3 generates the units; squaring 3 → 2 → 4 → 2 never hits 1.
        let z7 = FiniteRing::zmod(7);
        assert_eq!(z7.stable_idempotent(3), 1);
    }

    #[test]
    fn universal_property_examples() {
        let z6 = FiniteRing::zmod(6);
        let fam = standard_test_family();
        let l = localize(&z6, 3);
        assert!(verify_localization(&z6, 3, &l.hom, &fam));
        assert!(verify_localization(&z6, 1, &RingHom::identity(&z6), &fam));
        let z3 = FiniteRing::zmod(3);
        let wrong = RingHom::new(z6.clone(), z3, (0..6).map(|x| x % 3).collect()).unwrap();
        assert!(!verify_localization(&z6, 3, &wrong, &fam));
        // ℤ/6 itself inverts 3 nowhere, so the identity is not R_3
        assert!(!verify_localization(&z6, 3, &RingHom::identity(&z6), &fam));
    }

    #[test]
    fn localization_product_examples() {
        assert!(localization_product(&FiniteRing::zmod(6), 3, 4));
        assert!(localization_product(&FiniteRing::zmod(12), 5, 10));
        assert!(localization_product(&FiniteRing::zmod(12), 1, 7));
        assert_eq!(localize(&FiniteRing::zmod(12), 50 % 12).ring.size(), 3);
    }

    #[test]
    fn spec_of_idempotent_algebra() {
        let z6 = FiniteRing::zmod(6);
        // x² = x, i.e. x² - x = 0: c0 = 0, c1 = -1
        let a = FiniteRing::polynomial_quotient(6, &[0, 5]).unwrap();
        assert_eq!(a.size(), 36);
        let sigma = unique_structure_hom(&z6, &a).unwrap();
        let x = a.element("1x").unwrap();
        let mut images: Vec<usize> = spec_points(&sigma).iter().map(|p| p.apply(x)).collect();
        images.sort();
        assert_eq!(images, vec![0, 1, 3, 4]);
        assert_eq!(spec_points(&RingHom::identity(&z6)).len(), 1);
        let zero = FiniteRing::zero_ring();
        let to_zero = unique_structure_hom(&z6, &zero).unwrap();
        assert!(spec_points(&to_zero).is_empty());
    }

    #[test]
    fn spec_parser() {
        assert_eq!(parse_ring_spec("Z/6").unwrap().size(), 6);
        let p = parse_ring_spec("prod(Z/4, Z/9)").unwrap();
        assert_eq!(p.size(), 36);
        assert_eq!(p.idempotents().len(), 4);
        assert!(parse_ring_spec("prod(Z/2)").is_err());
        assert!(parse_ring_spec("Q").is_err());
        assert_eq!(parse_ring_spec("prod(Z/2,prod(Z/3,Z/5))").unwrap().size(), 30);
    }

    #[test]
    fn table_round_trip() {
        let r = FiniteRing::product(&[FiniteRing::zmod(2), FiniteRing::zmod(3)]);
        assert_eq!(FiniteRing::from_json(&r.to_json()).unwrap(), r);
        let mut raw = r.to_raw();
        raw.mul[2][3] = (raw.mul[2][3] + 1) % 6;
        assert!(FiniteRing::validate(raw).is_err());
    }

    #[test]
    fn hom_counts() {
        let z6 = FiniteRing::zmod(6);
        assert_eq!(enumerate_homs(&z6, &FiniteRing::zmod(2), &[]).len(), 1);
        assert_eq!(enumerate_homs(&z6, &FiniteRing::zmod(4), &[]).len(), 0);
        assert_eq!(enumerate_homs(&FiniteRing::zero_ring(), &z6, &[]).len(), 0);
        let p = parse_ring_spec("prod(Z/2,Z/2)").unwrap();
        // two projections
        assert_eq!(enumerate_homs(&p, &FiniteRing::zmod(2), &[]).len(), 2);
        // e₁ ↦ e for each of the four idempotents e
        assert_eq!(enumerate_homs(&p, &p, &[]).len(), 4);
    }
}
