//! Čech descent for unimodular covers of finite rings.
//!
//! For a cover `f₁, …, fₙ` with stable idempotents `eᵢ`, the localized
//! module `M_{fᵢ}` is `eᵢ·M` and restriction to an overlap is multiplication
//! by the product of the idempotents involved. The complex is
//!
//! ```text
//! ∏ᵢ M_{fᵢ} ──d0──▶ ∏ᵢⱼ M_{fᵢfⱼ} ──d1──▶ ∏ᵢⱼₖ M_{fᵢfⱼfₖ}
//! ```
//!
//! with `d0(s)(i,j) = s(i) - s(j)` and
//! `d1(t)(i,j,k) = t(i,j) - t(i,k) + t(j,k)`, all restricted to the overlap.
//! Diagonal terms are included. Group orders are computed with
//! [`ProductSubgroup`], so no level group is ever enumerated.

use serde::Serialize;
use thiserror::Error;

use crate::abelian::{additive_generators, AbelianGroup, Order, ProductSubgroup, TableGroup};
use crate::module::FiniteModule;
use crate::ring::{localize, FiniteRing, RingError};
use crate::tensor::tensor_order;

/// Largest cover accepted; level 2 has `n³` factors.
pub const MAX_COVER: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescentError {
    #[error("cover {0:?} is not unimodular: 1 is not in the ideal it generates")]
    NotUnimodular(Vec<usize>),
    #[error("cover has {0} elements, at most {MAX_COVER} are supported")]
    CoverTooLarge(usize),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// `d(s)(x, x') = s(x) - s(x')` on a finite index set, pairs in row-major order.
pub fn d0<G: AbelianGroup>(m: &G, s: &[u32]) -> Vec<u32> {
    let n = s.len();
    (0..n * n).map(|k| m.sub(s[k / n], s[k % n])).collect()
}

/// `d(t)(x, x', x'') = t(x, x') - t(x, x'') + t(x', x'')`, triples in row-major order.
pub fn d1<G: AbelianGroup>(m: &G, t: &[u32]) -> Vec<u32> {
    let n = (t.len() as f64).sqrt().round() as usize;
    assert_eq!(n * n, t.len(), "level-1 cochain must be indexed by pairs");
    let at = |i: usize, j: usize| t[i * n + j];
    (0..n * n * n)
        .map(|k| {
            let (i, j, l) = (k / (n * n), k / n % n, k % n);
            m.add(m.sub(at(i, j), at(i, l)), at(j, l))
        })
        .collect()
}

/// The descent complex of a module over a unimodular cover.
#[derive(Debug, Clone)]
pub struct DescentComplex {
    module: FiniteModule,
    cover: Vec<usize>,
    idempotents: Vec<usize>,
    zero_d0: bool,
}

impl DescentComplex {
    pub fn for_cover(m: &FiniteModule, cover: &[usize]) -> Result<DescentComplex, DescentError> {
        let r = m.ring();
        for &f in cover {
            r.check_index(f)?;
        }
        if cover.len() > MAX_COVER {
            return Err(DescentError::CoverTooLarge(cover.len()));
        }
        if !r.is_unimodular(cover) {
            return Err(DescentError::NotUnimodular(cover.to_vec()));
        }
        let idempotents = cover.iter().map(|&f| r.stable_idempotent(f)).collect();
        Ok(DescentComplex { module: m.clone(), cover: cover.to_vec(), idempotents, zero_d0: false })
    }

    /// The same complex with `d0` replaced by the zero map; a negative control.
    pub fn with_zero_d0(mut self) -> DescentComplex {
        self.zero_d0 = true;
        self
    }

    pub fn cover(&self) -> &[usize] {
        &self.cover
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    fn ring(&self) -> &FiniteRing {
        self.module.ring()
    }

    fn n(&self) -> usize {
        self.cover.len()
    }

    /// Idempotent of an index tuple.
    fn overlap(&self, tuple: &[usize]) -> usize {
        let r = self.ring();
        tuple.iter().fold(r.one(), |acc, &i| r.mul(acc, self.idempotents[i]))
    }

    fn tuples(&self, level: usize) -> Vec<Vec<usize>> {
        let n = self.n();
        let count = n.pow(level as u32 + 1);
        (0..count)
            .map(|mut k| {
                let mut t = vec![0; level + 1];
                for slot in t.iter_mut().rev() {
                    *slot = k % n;
                    k /= n;
                }
                t
            })
            .collect()
    }

    /// The factor `e·M` of each slot at a level.
    pub fn factor_elements(&self, level: usize) -> Vec<Vec<usize>> {
        self.tuples(level).iter().map(|t| self.module.scaled(self.overlap(t))).collect()
    }

    pub fn level_order(&self, level: usize) -> Order {
        self.factor_elements(level).iter().fold(Order::one(), |acc, f| acc.mul(&Order::of(f.len() as u64)))
    }

    fn scale(&self, e: usize, x: u32) -> u32 {
        self.module.act(e, x as usize) as u32
    }

    pub fn apply_d0(&self, s: &[u32]) -> Vec<u32> {
        let n = self.n();
        if self.zero_d0 {
            return vec![self.module.zero(); n * n];
        }
        let raw = d0(&self.module, s);
        self.tuples(1).iter().zip(raw).map(|(t, x)| self.scale(self.overlap(t), x)).collect()
    }

    pub fn apply_d1(&self, t: &[u32]) -> Vec<u32> {
        let raw = d1(&self.module, t);
        self.tuples(2).iter().zip(raw).map(|(tr, x)| self.scale(self.overlap(tr), x)).collect()
    }

    /// Generators of a level group: each additive generator of each factor, in its own slot.
    fn level_generators(&self, level: usize) -> Vec<Vec<u32>> {
        let factors = self.factor_elements(level);
        let zero = self.module.zero();
        let mut out = Vec::new();
        for (slot, elems) in factors.iter().enumerate() {
            for g in additive_generators(&self.module, elems.iter().map(|&x| x as u32)) {
                let mut v = vec![zero; factors.len()];
                v[slot] = g;
                out.push(v);
            }
        }
        out
    }

    fn image_of(&self, level: usize) -> ProductSubgroup<'_, FiniteModule> {
        let slots = self.n().pow(level as u32 + 2);
        let mut sub = ProductSubgroup::new(&self.module, slots);
        for g in self.level_generators(level) {
            let img = if level == 0 { self.apply_d0(&g) } else { self.apply_d1(&g) };
            sub.insert(img);
        }
        sub
    }

    /// Whether `d1 ∘ d0 = 0`, checked on generators.
    pub fn is_cochain_complex(&self) -> bool {
        let zero = self.module.zero();
        self.level_generators(0).iter().all(|g| self.apply_d1(&self.apply_d0(g)).iter().all(|&x| x == zero))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub h0: String,
    pub h1: String,
    pub exact: bool,
    pub cochain: bool,
    pub level_orders: [String; 3],
    pub image_d0: String,
    pub kernel_d1: String,
    pub witnesses: Vec<String>,
}

/// Caps the search for a non-trivial cocycle in reports.
const WITNESS_SEARCH_LIMIT: usize = 200_000;

/// `|H⁰| = |ker d0|` and `|H¹| = |ker d1| / |im d0|` by subgroup echelon.
pub fn h1(c: &DescentComplex) -> CohomologyReport {
    let level = [c.level_order(0), c.level_order(1), c.level_order(2)];
    let im_d0 = c.image_of(0);
    let im_d1 = c.image_of(1);
    let im_d0_order = im_d0.order();
    let ker_d1 = level[1].div(&im_d1.order()).expect("image order divides the group order");
    let h0 = level[0].div(&im_d0_order).expect("image order divides the group order");
    let cochain = c.is_cochain_complex();
    let h1 = ker_d1.div(&im_d0_order);
    let exact = cochain && h1.as_ref().is_some_and(Order::is_one);
    let mut witnesses = Vec::new();
    if !cochain {
        witnesses.push("d1 ∘ d0 ≠ 0 on a level-0 generator".to_string());
    }
    if !exact {
        if let Some(t) = find_unglued_cocycle(c, &im_d0) {
            let names: Vec<&str> = t.iter().map(|&x| c.module.label(x as usize)).collect();
            witnesses.push(format!("cocycle not in im d0: [{}]", names.join(", ")));
        }
    }
    CohomologyReport {
        h0: h0.to_string(),
        h1: h1.map_or_else(|| "undefined".to_string(), |o| o.to_string()),
        exact,
        cochain,
        level_orders: level.map(|o| o.to_string()),
        image_d0: im_d0_order.to_string(),
        kernel_d1: ker_d1.to_string(),
        witnesses,
    }
}

fn find_unglued_cocycle(c: &DescentComplex, im_d0: &ProductSubgroup<'_, FiniteModule>) -> Option<Vec<u32>> {
    let factors = c.factor_elements(1);
    let zero = c.module.zero();
    let mut index = vec![0usize; factors.len()];
    for _ in 0..WITNESS_SEARCH_LIMIT {
        let t: Vec<u32> = index.iter().zip(&factors).map(|(&k, f)| f[k] as u32).collect();
        if c.apply_d1(&t).iter().all(|&x| x == zero) && !im_d0.contains(&t) {
            return Some(t);
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == index.len() {
                return None;
            }
            index[pos] += 1;
            if index[pos] < factors[pos].len() {
                break;
            }
            index[pos] = 0;
            pos += 1;
        }
    }
    None
}

/// Builds the complex and reports its cohomology.
pub fn descent_h1(m: &FiniteModule, cover: &[usize]) -> Result<CohomologyReport, DescentError> {
    Ok(h1(&DescentComplex::for_cover(m, cover)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GluingReport {
    pub ring_size: usize,
    pub compatible_families: usize,
    pub injective: bool,
    pub bijective: bool,
}

/// Checks that `R → {(xᵢ) ∈ ∏ R_{fᵢ} : [xᵢ]ᵢⱼ = [xⱼ]ᵢⱼ}` is a bijection by
/// enumerating compatible families with backtracking.
pub fn ring_gluing_equalizer(r: &FiniteRing, cover: &[usize]) -> Result<GluingReport, DescentError> {
    for &f in cover {
        r.check_index(f)?;
    }
    if !r.is_unimodular(cover) {
        return Err(DescentError::NotUnimodular(cover.to_vec()));
    }
    let es: Vec<usize> = cover.iter().map(|&f| r.stable_idempotent(f)).collect();
    let pieces: Vec<Vec<usize>> = es
        .iter()
        .map(|&e| {
            let mut v: Vec<usize> = (0..r.size()).map(|x| r.mul(e, x)).collect();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();

    fn count(r: &FiniteRing, es: &[usize], pieces: &[Vec<usize>], chosen: &mut Vec<usize>) -> usize {
        let k = chosen.len();
        if k == pieces.len() {
            return 1;
        }
        let mut total = 0;
        for &x in &pieces[k] {
            // x ∈ e_k R, so its restriction to the (i, k) overlap is e_i·x
            let ok = chosen.iter().enumerate().all(|(i, &y)| r.mul(es[i], x) == r.mul(es[k], y));
            if ok {
                chosen.push(x);
                total += count(r, es, pieces, chosen);
                chosen.pop();
            }
        }
        total
    }
    let families = count(r, &es, &pieces, &mut Vec::new());
    let mut images: Vec<Vec<usize>> = (0..r.size()).map(|x| es.iter().map(|&e| r.mul(e, x)).collect()).collect();
    images.sort();
    images.dedup();
    let injective = images.len() == r.size();
    Ok(GluingReport {
        ring_size: r.size(),
        compatible_families: families,
        injective,
        bijective: injective && families == r.size(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasicoherenceReport {
    pub element: usize,
    pub idempotent: usize,
    pub tensor_order: String,
    pub localized_order: usize,
    pub isomorphic: bool,
}

/// Whether `M ⊗_R R_f → e_f·M`, `m ⊗ r ↦ r·m`, is an isomorphism. The map is
/// onto by construction, so it is one exactly when the orders agree.
pub fn weak_quasicoherence_check(m: &FiniteModule, f: usize) -> Result<QuasicoherenceReport, DescentError> {
    let r = m.ring();
    r.check_index(f)?;
    let loc = localize(r, f);
    let rf = FiniteModule::restrict(&loc.hom);
    let t = tensor_order(m, &rf);
    let local = m.scaled(loc.idempotent).len();
    Ok(QuasicoherenceReport {
        element: f,
        idempotent: loc.idempotent,
        isomorphic: t == Order::of(local as u64),
        tensor_order: t.to_string(),
        localized_order: local,
    })
}

/// All covers of `r` given as nondecreasing tuples of length `1..=max_len`
/// that generate the unit ideal.
pub fn unimodular_covers(r: &FiniteRing, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(r: &FiniteRing, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() && r.is_unimodular(cur) {
            out.push(cur.clone());
        }
        if cur.len() == max_len {
            return;
        }
        let start = cur.last().copied().unwrap_or(0);
        for x in start..r.size() {
            cur.push(x);
            go(r, max_len, cur, out);
            cur.pop();
        }
    }
    go(r, max_len, &mut Vec::new(), &mut out);
    out
}

/// Standalone cyclic group for the plain `d0`/`d1` maps.
pub fn cyclic_table(n: usize) -> TableGroup {
    crate::module::additive_table(&FiniteRing::zmod(n))
}
