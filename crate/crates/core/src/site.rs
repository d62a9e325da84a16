//! Presentations on finite sets, covers, set-level descent and local choice.
//!
//! A presentation of finite sets is determined by the cardinalities it
//! contains, so [`Presentation`] is a membership predicate on `usize`.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SiteError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("map is not surjective: {0} has an empty fiber")]
    NotSurjective(usize),
    #[error("enumeration of {0} functions exceeds the bound {1}")]
    EnumerationTooLarge(u128, u128),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("unknown presentation `{0}`")]
    UnknownPresentation(String),
    #[error("explicit choice for point {point} is not a member of the presentation or misses the fiber")]
    BadChoice { point: usize },
}

/// A map of finite sets `0..domain → 0..codomain`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteMap {
    pub domain: usize,
    pub codomain: usize,
    pub table: Vec<usize>,
}

impl FiniteMap {
    pub fn new(domain: usize, codomain: usize, table: Vec<usize>) -> Result<FiniteMap, SiteError> {
        let f = FiniteMap { domain, codomain, table };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<(), SiteError> {
        if self.table.len() != self.domain {
            return Err(SiteError::InvalidMap(format!("table has {} entries for a domain of {}", self.table.len(), self.domain)));
        }
        if let Some(&y) = self.table.iter().find(|&&y| y >= self.codomain) {
            return Err(SiteError::InvalidMap(format!("value {y} outside codomain {}", self.codomain)));
        }
        Ok(())
    }

    pub fn identity(n: usize) -> FiniteMap {
        FiniteMap { domain: n, codomain: n, table: (0..n).collect() }
    }

    /// The unique map to a point.
    pub fn terminal(n: usize) -> FiniteMap {
        FiniteMap { domain: n, codomain: 1, table: vec![0; n] }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn fiber(&self, y: usize) -> Vec<usize> {
        (0..self.domain).filter(|&x| self.table[x] == y).collect()
    }

    pub fn fiber_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.codomain];
        for &y in &self.table {
            sizes[y] += 1;
        }
        sizes
    }

    pub fn is_surjective(&self) -> bool {
        self.fiber_sizes().iter().all(|&s| s > 0)
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &FiniteMap) -> Result<FiniteMap, SiteError> {
        if self.codomain != g.domain {
            return Err(SiteError::ShapeMismatch(format!("codomain {} vs domain {}", self.codomain, g.domain)));
        }
        Ok(FiniteMap { domain: self.domain, codomain: g.codomain, table: self.table.iter().map(|&y| g.table[y]).collect() })
    }
}

/// Cardinality predicate defining a presentation.
#[derive(Clone)]
pub enum Membership {
    SingletonOnly,
    Nonempty,
    OddCardinality,
    /// Subsingletons: `{0, 1}`.
    ContainsEmpty,
    AtMost(usize),
    /// Least Σ-closed class containing `1` and the listed cardinalities.
    Generated(Vec<usize>),
    Custom(Arc<dyn Fn(usize) -> bool + Send + Sync>),
}

impl fmt::Debug for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Membership::SingletonOnly => write!(f, "SingletonOnly"),
            Membership::Nonempty => write!(f, "Nonempty"),
            Membership::OddCardinality => write!(f, "OddCardinality"),
            Membership::ContainsEmpty => write!(f, "ContainsEmpty"),
            Membership::AtMost(k) => write!(f, "AtMost({k})"),
            Membership::Generated(g) => write!(f, "Generated({g:?})"),
            Membership::Custom(_) => write!(f, "Custom(..)"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Presentation {
    pub name: String,
    pub membership: Membership,
}

impl Presentation {
    pub fn new(name: impl Into<String>, membership: Membership) -> Presentation {
        Presentation { name: name.into(), membership }
    }

    pub fn singleton_only() -> Presentation {
        Presentation::new("singleton-only", Membership::SingletonOnly)
    }

    pub fn nonempty() -> Presentation {
        Presentation::new("nonempty", Membership::Nonempty)
    }

    pub fn odd() -> Presentation {
        Presentation::new("odd-cardinality", Membership::OddCardinality)
    }

    pub fn contains_empty() -> Presentation {
        Presentation::new("contains-empty", Membership::ContainsEmpty)
    }

    /// Built-ins by name; `odd` is accepted for `odd-cardinality`, and
    /// `at-most-K` builds the (non-Σ-closed) cardinality bound.
    pub fn parse(name: &str) -> Result<Presentation, SiteError> {
        match name {
            "singleton-only" => Ok(Presentation::singleton_only()),
            "nonempty" => Ok(Presentation::nonempty()),
            "odd" | "odd-cardinality" => Ok(Presentation::odd()),
            "contains-empty" => Ok(Presentation::contains_empty()),
            other => {
                if let Some(k) = other.strip_prefix("at-most-").and_then(|k| k.parse().ok()) {
                    return Ok(Presentation::new(other, Membership::AtMost(k)));
                }
                if let Some(list) = other.strip_prefix("generated:") {
                    let gens = list
                        .split(',')
                        .map(|s| s.trim().parse())
                        .collect::<Result<Vec<usize>, _>>()
                        .map_err(|_| SiteError::UnknownPresentation(other.into()))?;
                    return Ok(Presentation::new(other, Membership::Generated(gens)));
                }
                Err(SiteError::UnknownPresentation(other.into()))
            }
        }
    }

    pub fn contains(&self, n: usize) -> bool {
        match &self.membership {
            Membership::SingletonOnly => n == 1,
            Membership::Nonempty => n >= 1,
            Membership::OddCardinality => n % 2 == 1,
            Membership::ContainsEmpty => n <= 1,
            Membership::AtMost(k) => n <= *k,
            Membership::Generated(gens) => generated_members(gens, n)[n],
            Membership::Custom(f) => f(n),
        }
    }
}

/// Membership table `0..=limit` of the least Σ-closed class containing 1 and `gens`.
fn generated_members(gens: &[usize], limit: usize) -> Vec<bool> {
    let mut member = vec![false; limit + 1];
    if limit >= 1 {
        member[1] = true;
    }
    for &g in gens {
        if g <= limit {
            member[g] = true;
        }
    }
    loop {
        // reachable[b][s]: some b members sum to s
        let mut changed = false;
        let members: Vec<usize> = (0..=limit).filter(|&k| member[k]).collect();
        let mut reach = vec![vec![false; limit + 1]; limit + 1];
        reach[0][0] = true;
        for b in 1..=limit {
            for s in 0..=limit {
                reach[b][s] = members.iter().any(|&k| k <= s && reach[b - 1][s - k]);
            }
        }
        for &b in &members {
            for s in 0..=limit {
                if reach[b][s] && !member[s] {
                    member[s] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            return member;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresentationVerdict {
    pub presentation: String,
    pub bound: usize,
    pub contains_singleton: bool,
    pub sigma_closed: bool,
    /// `(base, fibers)` of the first family whose total space falls outside.
    pub witness: Option<(usize, Vec<usize>)>,
    pub families_checked: u64,
}

impl PresentationVerdict {
    pub fn passed(&self) -> bool {
        self.contains_singleton && self.sigma_closed
    }
}

/// Checks `1 ∈ T` and Σ-closure for every base of size `≤ bound` in `T` and
/// every multiset of fiber sizes `≤ bound` in `T`. Bases are tried in
/// increasing size and fibers in decreasing lexicographic order, so large
/// totals are tested first.
pub fn is_presentation(t: &Presentation, bound: usize) -> PresentationVerdict {
    let members: Vec<usize> = (0..=bound).rev().filter(|&k| t.contains(k)).collect();
    let mut checked = 0u64;
    let mut witness = None;
    'bases: for base in (0..=bound).filter(|&b| t.contains(b)) {
        // nonincreasing sequences over `members` (which is sorted descending)
        let mut idx = vec![0usize; base];
        loop {
            checked += 1;
            let fibers: Vec<usize> = idx.iter().map(|&i| members[i]).collect();
            if !t.contains(fibers.iter().sum()) {
                witness = Some((base, fibers));
                break 'bases;
            }
            // advance to the next nondecreasing index vector
            let Some(pos) = (0..base).rev().find(|&p| idx[p] + 1 < members.len()) else { break };
            let v = idx[pos] + 1;
            for slot in idx[pos..].iter_mut() {
                *slot = v;
            }
        }
    }
    PresentationVerdict {
        presentation: t.name.clone(),
        bound,
        contains_singleton: t.contains(1),
        sigma_closed: witness.is_none(),
        witness,
        families_checked: checked,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverVerdict {
    pub map: FiniteMap,
    pub presentation: String,
    pub fiber_sizes: Vec<usize>,
    pub fiber_members: Vec<bool>,
    pub is_cover: bool,
}

pub fn is_cover(f: &FiniteMap, t: &Presentation) -> CoverVerdict {
    let fiber_sizes = f.fiber_sizes();
    let fiber_members: Vec<bool> = fiber_sizes.iter().map(|&s| t.contains(s)).collect();
    CoverVerdict {
        map: f.clone(),
        presentation: t.name.clone(),
        is_cover: fiber_members.iter().all(|&b| b),
        fiber_sizes,
        fiber_members,
    }
}

/// `g ∘ f`, re-verified as a cover.
pub fn compose_covers(f: &FiniteMap, g: &FiniteMap, t: &Presentation) -> Result<CoverVerdict, SiteError> {
    Ok(is_cover(&f.then(g)?, t))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pullback {
    /// Pairs `(a, b)` with `f(a) = g(b)`, in lexicographic order.
    pub carrier: Vec<(usize, usize)>,
    /// Projection to the domain of `g`: the pullback of `f` along `g`.
    pub projection: FiniteMap,
    /// Projection to the domain of `f`.
    pub other: FiniteMap,
}

pub fn pullback(f: &FiniteMap, g: &FiniteMap) -> Result<Pullback, SiteError> {
    if f.codomain != g.codomain {
        return Err(SiteError::ShapeMismatch(format!("codomains {} and {}", f.codomain, g.codomain)));
    }
    let carrier: Vec<(usize, usize)> = (0..f.domain)
        .flat_map(|a| (0..g.domain).map(move |b| (a, b)))
        .filter(|&(a, b)| f.apply(a) == g.apply(b))
        .collect();
    let n = carrier.len();
    Ok(Pullback {
        projection: FiniteMap { domain: n, codomain: g.domain, table: carrier.iter().map(|p| p.1).collect() },
        other: FiniteMap { domain: n, codomain: f.domain, table: carrier.iter().map(|p| p.0).collect() },
        carrier,
    })
}

/// The pullback of the cover `f` along `g`, re-verified as a cover.
pub fn pullback_cover(f: &FiniteMap, g: &FiniteMap, t: &Presentation) -> Result<(Pullback, CoverVerdict), SiteError> {
    let pb = pullback(f, g)?;
    let verdict = is_cover(&pb.projection, t);
    Ok((pb, verdict))
}

/// Default cap on `|X|^|A|` for function enumeration.
pub const DEFAULT_ENUMERATION_BOUND: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SheafVerdict {
    pub target_size: usize,
    pub base_functions: u128,
    pub equalizer_size: u128,
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
}

fn checked_power(base: usize, exp: usize, bound: u128) -> Result<u128, SiteError> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc > bound {
            return Err(SiteError::EnumerationTooLarge(acc, bound));
        }
    }
    Ok(acc)
}

/// Enumerates all functions `0..len → 0..size` in lexicographic order.
fn for_each_function(len: usize, size: usize, mut visit: impl FnMut(&[usize])) {
    if size == 0 && len > 0 {
        return;
    }
    let mut v = vec![0usize; len];
    loop {
        visit(&v);
        let Some(pos) = (0..len).rev().find(|&p| v[p] + 1 < size) else { return };
        v[pos] += 1;
        for slot in v[pos + 1..].iter_mut() {
            *slot = 0;
        }
    }
}

/// Checks that `X^B → lim(X^A ⇉ X^{A ×_B A})` is a bijection for `f: A → B`
/// by enumerating `X^A` and `X^B`.
pub fn set_sheaf_equalizer(target_size: usize, f: &FiniteMap, bound: u128) -> Result<SheafVerdict, SiteError> {
    f.validate()?;
    checked_power(target_size, f.domain, bound)?;
    let base_functions = checked_power(target_size, f.codomain, bound)?;
    let pairs: Vec<(usize, usize)> = (0..f.domain)
        .flat_map(|a| (0..f.domain).map(move |b| (a, b)))
        .filter(|&(a, b)| a < b && f.apply(a) == f.apply(b))
        .collect();
    let mut equalizer: Vec<Vec<usize>> = Vec::new();
    for_each_function(f.domain, target_size, |s| {
        if pairs.iter().all(|&(a, b)| s[a] == s[b]) {
            equalizer.push(s.to_vec());
        }
    });
    let mut images: Vec<Vec<usize>> = Vec::new();
    for_each_function(f.codomain, target_size, |t| {
        images.push(f.table.iter().map(|&y| t[y]).collect());
    });
    let total = images.len();
    images.sort();
    images.dedup();
    let injective = images.len() == total;
    let surjective = equalizer.iter().all(|s| images.binary_search(s).is_ok());
    Ok(SheafVerdict {
        target_size,
        base_functions,
        equalizer_size: equalizer.len() as u128,
        injective,
        surjective,
        bijective: injective && surjective,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectivityVerdict {
    pub size: usize,
    pub bound: usize,
    pub surjections_checked: u64,
    pub all_split: bool,
}

/// A section of a surjection, choosing the least preimage of each point.
pub fn section_of(s: &FiniteMap) -> Option<FiniteMap> {
    let mut table = vec![usize::MAX; s.codomain];
    for (y, &x) in s.table.iter().enumerate() {
        if table[x] == usize::MAX {
            table[x] = y;
        }
    }
    if table.contains(&usize::MAX) {
        return None;
    }
    Some(FiniteMap { domain: s.codomain, codomain: s.domain, table })
}

/// Every surjection `Y → X` with `|Y| ≤ bound` has a section.
pub fn verify_projectivity(size: usize, bound: usize) -> Result<ProjectivityVerdict, SiteError> {
    let mut checked = 0u64;
    let mut all_split = true;
    for ysize in size..=bound.max(size) {
        checked_power(size, ysize, DEFAULT_ENUMERATION_BOUND)?;
        for_each_function(ysize, size, |table| {
            let s = FiniteMap { domain: ysize, codomain: size, table: table.to_vec() };
            if !s.is_surjective() {
                return;
            }
            checked += 1;
            let ok = section_of(&s).is_some_and(|sec| sec.then(&s).is_ok_and(|id| id == FiniteMap::identity(size)));
            all_split &= ok;
        });
    }
    Ok(ProjectivityVerdict { size, bound, surjections_checked: checked, all_split })
}

/// Projectivity of a total space `Σ_b F(b)`: a section of `s: Y → Σ F` is
/// assembled from a section of the base composite and sections over each fiber.
pub fn sigma_projectivity(fibers: &[usize], bound: usize) -> Result<ProjectivityVerdict, SiteError> {
    let total: usize = fibers.iter().sum();
    let base = FiniteMap {
        domain: total,
        codomain: fibers.len(),
        table: fibers.iter().enumerate().flat_map(|(b, &k)| std::iter::repeat_n(b, k)).collect(),
    };
    let mut checked = 0u64;
    let mut all_split = true;
    for ysize in total..=bound.max(total) {
        checked_power(total, ysize, DEFAULT_ENUMERATION_BOUND)?;
        for_each_function(ysize, total, |table| {
            let s = FiniteMap { domain: ysize, codomain: total, table: table.to_vec() };
            if !s.is_surjective() {
                return;
            }
            checked += 1;
            // base composite Y → B is a surjection of sets over a projective base
            let to_base = s.then(&base).expect("shapes agree");
            let ok = section_of(&to_base).is_some() && {
                // over each b, restrict s to the preimage of F(b) and split it
                let mut sec = vec![usize::MAX; total];
                for (y, &x) in s.table.iter().enumerate() {
                    if sec[x] == usize::MAX {
                        sec[x] = y;
                    }
                }
                sec.iter().enumerate().all(|(x, &y)| y != usize::MAX && s.apply(y) == x)
            };
            all_split &= ok;
        });
    }
    Ok(ProjectivityVerdict { size: total, bound, surjections_checked: checked, all_split })
}

/// How [`local_choice`] picks a presentation member over each point of `D`.
#[derive(Debug, Clone)]
pub enum ChoiceStrategy {
    /// The whole fiber when its size is in `T`, otherwise a singleton.
    FullFiber,
    /// Always a singleton on the least element of the fiber.
    Singleton,
    /// Per point of `D`, the list of fiber elements hit by the chosen member.
    Explicit(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalChoice {
    pub z: usize,
    pub p: FiniteMap,
    pub h: FiniteMap,
    pub commutes: bool,
    pub p_is_cover: bool,
}

impl LocalChoice {
    pub fn passed(&self) -> bool {
        self.commutes && self.p_is_cover
    }
}

/// Given `g: D → C` and a surjection `f: X → C`, builds `Z = Σ_d S_d` with
/// `S_d ∈ T` mapping into `fib_f(g(d))`, the projection `p: Z → D` and the
/// lift `h: Z → X` with `f ∘ h = g ∘ p`.
pub fn local_choice(g: &FiniteMap, f: &FiniteMap, t: &Presentation, strategy: &ChoiceStrategy) -> Result<LocalChoice, SiteError> {
    g.validate()?;
    f.validate()?;
    if g.codomain != f.codomain {
        return Err(SiteError::ShapeMismatch(format!("codomains {} and {}", g.codomain, f.codomain)));
    }
    let mut p = Vec::new();
    let mut h = Vec::new();
    for d in 0..g.domain {
        let c = g.apply(d);
        let fiber = f.fiber(c);
        if fiber.is_empty() {
            return Err(SiteError::NotSurjective(c));
        }
        let chosen: Vec<usize> = match strategy {
            ChoiceStrategy::FullFiber if t.contains(fiber.len()) => fiber.clone(),
            ChoiceStrategy::FullFiber | ChoiceStrategy::Singleton => vec![fiber[0]],
            ChoiceStrategy::Explicit(choices) => {
                let pick = choices.get(d).ok_or(SiteError::BadChoice { point: d })?;
                if !t.contains(pick.len()) || pick.iter().any(|x| !fiber.contains(x)) {
                    return Err(SiteError::BadChoice { point: d });
                }
                pick.clone()
            }
        };
        for x in chosen {
            p.push(d);
            h.push(x);
        }
    }
    let z = p.len();
    let p = FiniteMap { domain: z, codomain: g.domain, table: p };
    let h = FiniteMap { domain: z, codomain: f.domain, table: h };
    let commutes = (0..z).all(|k| f.apply(h.apply(k)) == g.apply(p.apply(k)));
    let p_is_cover = is_cover(&p, t).is_cover;
    Ok(LocalChoice { z, p, h, commutes, p_is_cover })
}

/// A random `T`-cover with codomain of size `codomain` and fibers at most `max_fiber`.
pub fn random_cover<R: Rng>(rng: &mut R, t: &Presentation, codomain: usize, max_fiber: usize) -> FiniteMap {
    let sizes: Vec<usize> = (0..=max_fiber).filter(|&k| t.contains(k)).collect();
    assert!(!sizes.is_empty(), "presentation has no member of size ≤ {max_fiber}");
    let mut table: Vec<usize> = (0..codomain)
        .flat_map(|y| std::iter::repeat_n(y, sizes[rng.gen_range(0..sizes.len())]))
        .collect();
    // Fisher–Yates so the domain order carries no structure
    for i in (1..table.len()).rev() {
        let j = rng.gen_range(0..=i);
        table.swap(i, j);
    }
    FiniteMap { domain: table.len(), codomain, table }
}

/// A random surjection `domain → codomain` (`domain ≥ codomain`).
pub fn random_surjection<R: Rng>(rng: &mut R, domain: usize, codomain: usize) -> FiniteMap {
    assert!(domain >= codomain && (codomain > 0 || domain == 0));
    let mut table: Vec<usize> = (0..codomain).collect();
    while table.len() < domain {
        table.push(rng.gen_range(0..codomain));
    }
    for i in (1..table.len()).rev() {
        let j = rng.gen_range(0..=i);
        table.swap(i, j);
    }
    FiniteMap { domain, codomain, table }
}

/// A random map `domain → codomain`.
pub fn random_map<R: Rng>(rng: &mut R, domain: usize, codomain: usize) -> FiniteMap {
    let table = (0..domain).map(|_| rng.gen_range(0..codomain)).collect();
    FiniteMap { domain, codomain, table }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn built_in_presentations() {
        assert!(is_presentation(&Presentation::odd(), 5).passed());
        assert!(is_presentation(&Presentation::singleton_only(), 6).passed());
        assert!(is_presentation(&Presentation::nonempty(), 4).passed());
        assert!(is_presentation(&Presentation::contains_empty(), 5).passed());
        let v = is_presentation(&Presentation::parse("at-most-2").unwrap(), 3);
        assert!(!v.passed());
        assert_eq!(v.witness, Some((2, vec![2, 2])));
    }

    #[test]
    fn generated_presentation_is_sigma_closed() {
        let t = Presentation::parse("generated:2").unwrap();
        // sums of 2s and 1s over bases in the class: everything ≥ 1
        assert!(t.contains(1) && t.contains(2) && t.contains(4) && t.contains(3));
        assert!(!t.contains(0));
        let t = Presentation::parse("generated:3").unwrap();
        assert!(t.contains(9) && !t.contains(2));
        assert!(is_presentation(&t, 4).passed());
    }

    #[test]
    fn cover_examples() {
        let odd = Presentation::odd();
        assert!(is_cover(&FiniteMap::identity(4), &odd).is_cover);
        assert!(is_cover(&FiniteMap::terminal(3), &odd).is_cover);
        let v = is_cover(&FiniteMap::terminal(2), &odd);
        assert!(!v.is_cover);
        assert_eq!(v.fiber_sizes, vec![2]);
    }

    #[test]
    fn composition_and_pullback() {
        let odd = Presentation::odd();
        let f = FiniteMap::new(15, 3, (0..15).map(|x| x / 5).collect()).unwrap();
        let v = compose_covers(&f, &FiniteMap::terminal(3), &odd).unwrap();
        assert!(v.is_cover);
        assert_eq!(v.fiber_sizes, vec![15]);
        let (pb, v) = pullback_cover(&FiniteMap::terminal(3), &FiniteMap::terminal(2), &odd).unwrap();
        assert_eq!(pb.projection.domain, 6);
        assert_eq!(v.fiber_sizes, vec![3, 3]);
        assert!(v.is_cover);
        let f = FiniteMap::new(3, 2, vec![1, 0, 1]).unwrap();
        let (pb, _) = pullback_cover(&f, &FiniteMap::identity(2), &odd).unwrap();
        assert_eq!(pb.other, f.then(&FiniteMap::identity(2)).map(|_| FiniteMap::identity(3)).unwrap());
        assert_eq!(pb.projection, f);
        assert!(compose_covers(&f, &FiniteMap::identity(3), &odd).is_err());
    }

    #[test]
    fn sheaf_equalizer_examples() {
        let v = set_sheaf_equalizer(3, &FiniteMap::terminal(3), DEFAULT_ENUMERATION_BOUND).unwrap();
        assert!(v.bijective);
        assert_eq!(v.equalizer_size, 3);
        assert!(set_sheaf_equalizer(2, &FiniteMap::identity(4), DEFAULT_ENUMERATION_BOUND).unwrap().bijective);
        let empty = FiniteMap::new(0, 1, vec![]).unwrap();
        let v = set_sheaf_equalizer(2, &empty, DEFAULT_ENUMERATION_BOUND).unwrap();
        assert!(!v.bijective);
        assert_eq!((v.equalizer_size, v.base_functions), (1, 2));
        assert!(matches!(
            set_sheaf_equalizer(10, &FiniteMap::identity(7), DEFAULT_ENUMERATION_BOUND),
            Err(SiteError::EnumerationTooLarge(..))
        ));
    }

    #[test]
    fn projectivity_examples() {
        let v = verify_projectivity(2, 4).unwrap();
        assert!(v.all_split);
        assert_eq!(v.surjections_checked, 2 + 6 + 14);
        assert!(verify_projectivity(0, 3).unwrap().all_split);
        assert!(sigma_projectivity(&[2, 3], 6).unwrap().all_split);
    }

    #[test]
    fn local_choice_examples() {
        let g = FiniteMap::terminal(2);
        let f = FiniteMap::terminal(3);
        let lc = local_choice(&g, &f, &Presentation::nonempty(), &ChoiceStrategy::FullFiber).unwrap();
        assert_eq!(lc.z, 6);
        assert_eq!(lc.p.fiber_sizes(), vec![3, 3]);
        assert!(lc.passed());

        let empty = FiniteMap::new(0, 1, vec![]).unwrap();
        let lc = local_choice(&empty, &f, &Presentation::nonempty(), &ChoiceStrategy::FullFiber).unwrap();
        assert_eq!(lc.z, 0);
        assert!(lc.passed());

        let lc = local_choice(&g, &f, &Presentation::singleton_only(), &ChoiceStrategy::FullFiber).unwrap();
        assert_eq!(lc.p, FiniteMap::identity(2));
        assert!(lc.passed());

        let not_onto = FiniteMap::new(2, 2, vec![0, 0]).unwrap();
        assert_eq!(
            local_choice(&FiniteMap::identity(2), &not_onto, &Presentation::nonempty(), &ChoiceStrategy::Singleton),
            Err(SiteError::NotSurjective(1))
        );
        let bad = ChoiceStrategy::Explicit(vec![vec![0, 1], vec![0]]);
        assert_eq!(local_choice(&g, &f, &Presentation::odd(), &bad), Err(SiteError::BadChoice { point: 0 }));
    }
}
