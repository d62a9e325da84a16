//! Finite simplicial complexes, joins and joins of maps.
//!
//! A complex is given by its facets; the complex with no facets is the empty
//! space, whose only simplex is the empty face. It is the unit for [`join`].

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::congruence::UnionFind;
use crate::site::FiniteMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JoinError {
    #[error("facet {facet} references vertex {vertex} outside 0..{vertices}")]
    VertexOutOfRange { facet: usize, vertex: usize, vertices: usize },
    #[error("facet {0} is empty")]
    EmptyFacet(usize),
    #[error("facet {0} repeats a vertex")]
    RepeatedVertex(usize),
    #[error("facet {contained} is contained in facet {container}")]
    NotMaximal { contained: usize, container: usize },
    #[error("vertex {0} lies in no facet")]
    UnusedVertex(usize),
    #[error("iterated join needs at least one factor")]
    ZeroPower,
    #[error("codomains {0} and {1} differ")]
    CodomainMismatch(usize, usize),
    #[error("fiber size {0} is outside 1..=4")]
    FiberTooLarge(usize),
    #[error("search visited more than {0} partial assignments")]
    SearchTooLarge(u64),
}

/// Facets are stored sorted, each facet sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawComplex", into = "RawComplex")]
pub struct SimplicialComplex {
    vertices: usize,
    facets: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawComplex {
    vertices: usize,
    facets: Vec<Vec<usize>>,
}

impl TryFrom<RawComplex> for SimplicialComplex {
    type Error = JoinError;
    fn try_from(raw: RawComplex) -> Result<Self, JoinError> {
        SimplicialComplex::new(raw.vertices, raw.facets)
    }
}

impl From<SimplicialComplex> for RawComplex {
    fn from(k: SimplicialComplex) -> RawComplex {
        RawComplex { vertices: k.vertices, facets: k.facets }
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

impl SimplicialComplex {
    /// Validates facets: nonempty, in range, distinct, pairwise incomparable,
    /// and covering every vertex.
    pub fn new(vertices: usize, facets: Vec<Vec<usize>>) -> Result<SimplicialComplex, JoinError> {
        let mut sorted = Vec::with_capacity(facets.len());
        for (k, f) in facets.into_iter().enumerate() {
            if f.is_empty() {
                return Err(JoinError::EmptyFacet(k));
            }
            if let Some(&v) = f.iter().find(|&&v| v >= vertices) {
                return Err(JoinError::VertexOutOfRange { facet: k, vertex: v, vertices });
            }
            let mut s = f;
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(JoinError::RepeatedVertex(k));
            }
            sorted.push(s);
        }
        for i in 0..sorted.len() {
            for j in 0..sorted.len() {
                if i != j && is_subset(&sorted[i], &sorted[j]) && (sorted[i].len() < sorted[j].len() || i > j) {
                    return Err(JoinError::NotMaximal { contained: i, container: j });
                }
            }
        }
        let mut used = vec![false; vertices];
        for f in &sorted {
            for &v in f {
                used[v] = true;
            }
        }
        if let Some(v) = used.iter().position(|&u| !u) {
            return Err(JoinError::UnusedVertex(v));
        }
        sorted.sort();
        Ok(SimplicialComplex { vertices, facets: sorted })
    }

    /// Builds a complex from any generating simplices, keeping the maximal ones.
    /// Vertices that appear in none become isolated points.
    pub fn from_simplices(vertices: usize, simplices: impl IntoIterator<Item = Vec<usize>>) -> SimplicialComplex {
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
        for mut s in simplices {
            s.sort_unstable();
            s.dedup();
            if !s.is_empty() {
                set.insert(s);
            }
        }
        let mut used = vec![false; vertices];
        for s in &set {
            for &v in s {
                used[v] = true;
            }
        }
        for (v, _) in used.iter().enumerate().filter(|(_, &u)| !u) {
            set.insert(vec![v]);
        }
        let all: Vec<Vec<usize>> = set.into_iter().collect();
        let mut facets: Vec<Vec<usize>> = all
            .iter()
            .filter(|s| !all.iter().any(|t| t.len() > s.len() && is_subset(s, t)))
            .cloned()
            .collect();
        facets.sort();
        SimplicialComplex { vertices, facets }
    }

    /// The empty space: no vertices, only the empty face.
    pub fn empty() -> SimplicialComplex {
        SimplicialComplex { vertices: 0, facets: Vec::new() }
    }

    /// `n` isolated points.
    pub fn discrete(n: usize) -> SimplicialComplex {
        SimplicialComplex { vertices: n, facets: (0..n).map(|v| vec![v]).collect() }
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> SimplicialComplex {
        if n == 0 {
            return SimplicialComplex::empty();
        }
        SimplicialComplex { vertices: n, facets: vec![(0..n).collect()] }
    }

    /// Boundary of the simplex on `n + 2` vertices: a hollow `n`-sphere.
    pub fn sphere(n: usize) -> SimplicialComplex {
        let k = n + 2;
        let mut facets: Vec<Vec<usize>> = (0..k).map(|skip| (0..k).filter(|&v| v != skip).collect()).collect();
        facets.sort();
        SimplicialComplex { vertices: k, facets }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.vertices == 0
    }

    /// Largest facet dimension; `-1` for the empty space.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    /// All nonempty faces grouped by dimension, each group sorted.
    pub fn faces_by_dimension(&self) -> Vec<Vec<Vec<usize>>> {
        let top = self.facets.iter().map(Vec::len).max().unwrap_or(0);
        let mut levels: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); top];
        for f in &self.facets {
            let k = f.len();
            assert!(k < usize::BITS as usize, "facet too large to enumerate");
            for mask in 1usize..(1 << k) {
                let face: Vec<usize> = (0..k).filter(|&b| mask >> b & 1 == 1).map(|b| f[b]).collect();
                levels[face.len() - 1].insert(face);
            }
        }
        levels.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    pub fn face_count(&self) -> usize {
        self.faces_by_dimension().iter().map(Vec::len).sum()
    }

    /// The reduced Euler characteristic, counting the empty face in degree −1.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces_by_dimension()
            .iter()
            .enumerate()
            .fold(-1, |acc, (d, faces)| if d % 2 == 0 { acc + faces.len() as i64 } else { acc - faces.len() as i64 })
    }

    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.vertices);
        for f in &self.facets {
            for w in f.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        uf.classes().into_iter().max().map_or(0, |m| m + 1)
    }

    /// Full subcomplex on `keep` (ascending), relabelled to `0..keep.len()`.
    pub fn induced(&self, keep: &[usize]) -> SimplicialComplex {
        let mut index = vec![usize::MAX; self.vertices];
        for (k, &v) in keep.iter().enumerate() {
            index[v] = k;
        }
        let pieces = self
            .facets
            .iter()
            .map(|f| f.iter().filter(|&&v| index[v] != usize::MAX).map(|&v| index[v]).collect::<Vec<_>>());
        SimplicialComplex::from_simplices(keep.len(), pieces)
    }
}

/// Vertices of `b` are shifted past those of `a`; facets are unions of facets.
pub fn join(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let shift = a.vertices;
    let mut facets: Vec<Vec<usize>> = a
        .facets
        .iter()
        .flat_map(|f| b.facets.iter().map(move |g| f.iter().copied().chain(g.iter().map(|&v| v + shift)).collect()))
        .collect();
    facets.sort();
    SimplicialComplex { vertices: a.vertices + b.vertices, facets }
}

/// Left-associated `n`-fold join of `k` with itself.
pub fn iterated_join(k: &SimplicialComplex, n: usize) -> Result<SimplicialComplex, JoinError> {
    if n == 0 {
        return Err(JoinError::ZeroPower);
    }
    let mut acc = k.clone();
    for _ in 1..n {
        acc = join(&acc, k);
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberJoin {
    pub point: usize,
    pub left_fiber: Vec<usize>,
    pub right_fiber: Vec<usize>,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinOfMaps {
    /// Vertices `0..|A|` are `A`, then `B`.
    pub complex: SimplicialComplex,
    pub fibers: Vec<FiberJoin>,
}

impl JoinOfMaps {
    pub fn passed(&self) -> bool {
        self.fibers.iter().all(|f| f.matches)
    }
}

/// For discrete `f: A → X`, `g: B → X`, the complex on `A ⊔ B` with an edge
/// `(a, b)` whenever `f(a) = g(b)`, together with a per-point check that the
/// part over `x` is the join of the two fibers.
pub fn join_of_maps(f: &FiniteMap, g: &FiniteMap) -> Result<JoinOfMaps, JoinError> {
    if f.codomain != g.codomain {
        return Err(JoinError::CodomainMismatch(f.codomain, g.codomain));
    }
    let shift = f.domain;
    let edges = (0..f.domain)
        .flat_map(|a| (0..g.domain).map(move |b| (a, b)))
        .filter(|&(a, b)| f.apply(a) == g.apply(b))
        .map(|(a, b)| vec![a, b + shift]);
    let complex = SimplicialComplex::from_simplices(f.domain + g.domain, edges);
    let fibers = (0..f.codomain)
        .map(|x| {
            let left = f.fiber(x);
            let right = g.fiber(x);
            let keep: Vec<usize> = left.iter().copied().chain(right.iter().map(|&b| b + shift)).collect();
            let over = complex.induced(&keep);
            let expected = join(&SimplicialComplex::discrete(left.len()), &SimplicialComplex::discrete(right.len()));
            FiberJoin { point: x, matches: over == expected, left_fiber: left, right_fiber: right }
        })
        .collect();
    Ok(JoinOfMaps { complex, fibers })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizationReport {
    pub points: usize,
    pub target: usize,
    /// `|X|^|A|`.
    pub all_maps: u64,
    /// Maps from the vertices of `A ∗ A` to `X` constant on every edge.
    pub maps_from_join: u64,
    /// `|X|` for nonempty `A`, otherwise 1.
    pub maps_from_truncation: u64,
    /// Components of `A^{∗n}` for `n = 2, 3, 4`.
    pub components: Vec<usize>,
    pub passed: bool,
}

/// Set-level check that maps out of `A ∗ A` into a set `X` are the maps out of
/// the propositional truncation of `A`, counted by brute force.
pub fn truncation_stabilization(points: usize, target: usize) -> StabilizationReport {
    let a = SimplicialComplex::discrete(points);
    let square = join(&a, &a);
    let n = square.vertex_count();
    let mut maps_from_join = 0u64;
    let mut v = vec![0usize; n];
    if target > 0 || n == 0 {
        loop {
            if square.facets().iter().all(|f| f.iter().all(|&x| v[x] == v[f[0]])) {
                maps_from_join += 1;
            }
            let Some(pos) = (0..n).rev().find(|&p| v[p] + 1 < target) else { break };
            v[pos] += 1;
            for slot in v[pos + 1..].iter_mut() {
                *slot = 0;
            }
        }
    }
    let maps_from_truncation = if points == 0 { 1 } else { target as u64 };
    let components: Vec<usize> = (2..=4)
        .map(|k| iterated_join(&a, k).expect("positive power").components())
        .collect();
    let connected = points == 0 || components.iter().all(|&c| c == 1);
    StabilizationReport {
        points,
        target,
        all_maps: (target as u64).pow(points as u32),
        maps_from_join,
        maps_from_truncation,
        passed: maps_from_join == maps_from_truncation && connected,
        components,
    }
}

/// Families of `fiber`-element sets over a complex: a bijection per edge,
/// commuting around every triangle. Edges of a spanning forest are fixed to
/// the identity, so on a connected complex the count is `|Hom(π₁, S_fiber)|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalSystemReport {
    pub fiber: usize,
    pub edges: usize,
    pub free_edges: usize,
    pub flat_connections: u64,
    /// Flat connections with some non-identity edge, i.e. not constant.
    pub nontrivial: u64,
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for k in 0..m {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=k).map(move |i| {
                    let mut q = p.clone();
                    q.insert(i, k);
                    q
                })
            })
            .collect();
    }
    out.sort();
    out
}

/// Enumerates flat connections with fibers of size `fiber`, visiting at most
/// `budget` partial assignments.
pub fn local_systems(k: &SimplicialComplex, fiber: usize, budget: u64) -> Result<LocalSystemReport, JoinError> {
    if fiber == 0 || fiber > 4 {
        return Err(JoinError::FiberTooLarge(fiber));
    }
    let perms = permutations(fiber);
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("a permutation");
    let compose: Vec<Vec<usize>> = perms
        .iter()
        .map(|a| perms.iter().map(|b| index(&a.iter().map(|&x| b[x]).collect::<Vec<_>>())).collect())
        .collect();
    let identity = index(&(0..fiber).collect::<Vec<_>>());

    let levels = k.faces_by_dimension();
    let edges: Vec<(usize, usize)> = levels.get(1).map_or(Vec::new(), |l| l.iter().map(|e| (e[0], e[1])).collect());
    let triangles: Vec<[usize; 3]> = levels.get(2).map_or(Vec::new(), |l| l.iter().map(|t| [t[0], t[1], t[2]]).collect());
    let edge_id = |u: usize, v: usize| edges.binary_search(&(u, v)).expect("face of a triangle");
    let tri_edges: Vec<[usize; 3]> =
        triangles.iter().map(|&[u, v, w]| [edge_id(u, v), edge_id(v, w), edge_id(u, w)]).collect();

    let mut uf = UnionFind::new(k.vertex_count());
    let mut assigned: Vec<Option<usize>> = edges.iter().map(|&(u, v)| uf.union(u, v).then_some(identity)).collect();
    let mut ready = assigned.iter().map(Option::is_some).collect::<Vec<_>>();
    let mut order = Vec::new();
    while ready.iter().any(|&r| !r) {
        let closes = |e: usize| {
            tri_edges.iter().filter(|t| t.contains(&e) && t.iter().filter(|&&x| x != e).all(|&x| ready[x])).count()
        };
        let next = (0..edges.len()).filter(|&e| !ready[e]).max_by_key(|&e| (closes(e), std::cmp::Reverse(e))).expect("unassigned edge");
        ready[next] = true;
        order.push(next);
    }
    let mut position = vec![None; edges.len()];
    for (i, &e) in order.iter().enumerate() {
        position[e] = Some(i);
    }
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); order.len()];
    for (t, es) in tri_edges.iter().enumerate() {
        if let Some(last) = es.iter().filter_map(|&e| position[e]).max() {
            closing[last].push(t);
        }
    }
    let flat = |assigned: &[Option<usize>], t: usize| {
        let [uv, vw, uw] = tri_edges[t];
        let get = |e: usize| assigned[e].expect("assigned");
        compose[get(uv)][get(vw)] == get(uw)
    };
    let mut flat_connections = 0u64;
    let mut nontrivial = 0u64;
    let mut visited = 0u64;
    let mut choice = vec![0usize; order.len()];
    let mut depth = 0usize;
    // Iterative depth-first search; `choice[depth]` is the next candidate.
    loop {
        if depth == order.len() {
            flat_connections += 1;
            if order.iter().any(|&e| assigned[e] != Some(identity)) {
                nontrivial += 1;
            }
            if depth == 0 {
                break;
            }
            depth -= 1;
            continue;
        }
        let e = order[depth];
        if choice[depth] == perms.len() {
            choice[depth] = 0;
            assigned[e] = None;
            if depth == 0 {
                break;
            }
            depth -= 1;
            continue;
        }
        visited += 1;
        if visited > budget {
            return Err(JoinError::SearchTooLarge(budget));
        }
        assigned[e] = Some(choice[depth]);
        choice[depth] += 1;
        if closing[depth].iter().all(|&t| flat(&assigned, t)) {
            depth += 1;
        }
    }
    Ok(LocalSystemReport { fiber, edges: edges.len(), free_edges: order.len(), flat_connections, nontrivial })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DependentReport {
    pub points: usize,
    /// Local systems over `A^{∗k}` for `k = 2, 3`, fiber sizes `1..=max_fiber`.
    pub levels: Vec<(usize, Vec<LocalSystemReport>)>,
    /// Every family of sets over `A^{∗3}` is constant.
    pub passed: bool,
}

/// Experimental: families of finite sets over `A^{∗3}` are all constant, so
/// their dependent products are those over the truncation of `A`.
pub fn dependent_stabilization(points: usize, max_fiber: usize, budget: u64) -> Result<DependentReport, JoinError> {
    let a = SimplicialComplex::discrete(points);
    let mut levels = Vec::new();
    for k in 2..=3 {
        let power = iterated_join(&a, k)?;
        let reports = (1..=max_fiber).map(|m| local_systems(&power, m, budget)).collect::<Result<Vec<_>, _>>()?;
        levels.push((k, reports));
    }
    let passed = levels[1].1.iter().all(|r| r.nontrivial == 0 && r.flat_connections == 1);
    Ok(DependentReport { points, levels, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert_eq!(SimplicialComplex::new(2, vec![vec![0, 2]]), Err(JoinError::VertexOutOfRange { facet: 0, vertex: 2, vertices: 2 }));
        assert_eq!(SimplicialComplex::new(3, vec![vec![0, 1]]), Err(JoinError::UnusedVertex(2)));
        assert!(matches!(SimplicialComplex::new(2, vec![vec![0], vec![0, 1]]), Err(JoinError::NotMaximal { .. })));
        assert!(matches!(SimplicialComplex::new(2, vec![vec![0, 1], vec![1, 0]]), Err(JoinError::NotMaximal { .. })));
        let k = SimplicialComplex::new(3, vec![vec![2, 1], vec![0]]).unwrap();
        assert_eq!(k.facets(), &[vec![0], vec![1, 2]]);
        let json = serde_json::to_string(&k).unwrap();
        assert_eq!(json, r#"{"vertices":3,"facets":[[0],[1,2]]}"#);
        assert_eq!(serde_json::from_str::<SimplicialComplex>(&json).unwrap(), k);
        assert!(serde_json::from_str::<SimplicialComplex>(r#"{"vertices":1,"facets":[]}"#).is_err());
    }

    #[test]
    fn join_examples() {
        let two = SimplicialComplex::discrete(2);
        let square = join(&two, &two);
        assert_eq!(square.facets(), &[vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]);
        let k = SimplicialComplex::sphere(1);
        assert_eq!(join(&k, &SimplicialComplex::empty()), k);
        assert_eq!(join(&SimplicialComplex::empty(), &k), k);
        let cone = join(&SimplicialComplex::discrete(1), &k);
        assert_eq!(cone.reduced_euler_characteristic(), 0);
        assert_eq!(iterated_join(&two, 3).unwrap().face_count(), 26);
        assert_eq!(iterated_join(&two, 0), Err(JoinError::ZeroPower));
    }

    #[test]
    fn join_is_associative_on_small_family() {
        let family = [
            SimplicialComplex::empty(),
            SimplicialComplex::discrete(2),
            SimplicialComplex::sphere(1),
            SimplicialComplex::simplex(2),
            SimplicialComplex::new(3, vec![vec![0, 1], vec![2]]).unwrap(),
        ];
        for a in &family {
            for b in &family {
                for c in &family {
                    assert_eq!(join(&join(a, b), c), join(a, &join(b, c)));
                }
            }
        }
    }

    #[test]
    fn euler_characteristic_is_multiplicative_up_to_sign() {
        let family = [SimplicialComplex::empty(), SimplicialComplex::discrete(3), SimplicialComplex::sphere(0), SimplicialComplex::sphere(2)];
        for a in &family {
            for b in &family {
                let lhs = join(a, b).reduced_euler_characteristic();
                assert_eq!(lhs, -a.reduced_euler_characteristic() * b.reduced_euler_characteristic());
            }
        }
    }

    #[test]
    fn join_of_maps_examples() {
        let id = FiniteMap::identity(3);
        let j = join_of_maps(&id, &id).unwrap();
        assert!(j.passed());
        assert_eq!(j.complex.facets(), &[vec![0, 3], vec![1, 4], vec![2, 5]]);

        let j = join_of_maps(&FiniteMap::terminal(2), &FiniteMap::terminal(3)).unwrap();
        assert!(j.passed());
        assert_eq!(j.complex.facets().len(), 6);

        let empty = FiniteMap::new(0, 2, vec![]).unwrap();
        let f = FiniteMap::new(3, 2, vec![0, 1, 1]).unwrap();
        let j = join_of_maps(&f, &empty).unwrap();
        assert_eq!(j.complex, SimplicialComplex::discrete(3));
        assert!(j.passed());
    }

    #[test]
    fn stabilization_examples() {
        let r = truncation_stabilization(2, 3);
        assert_eq!((r.all_maps, r.maps_from_join, r.maps_from_truncation), (9, 3, 3));
        assert!(r.passed);
        let r = truncation_stabilization(0, 4);
        assert_eq!((r.maps_from_join, r.maps_from_truncation), (1, 1));
        assert!(r.passed);
        let r = truncation_stabilization(1, 4);
        assert_eq!(r.maps_from_join, 4);
        assert!(r.passed);
    }

    #[test]
    fn local_systems_on_small_complexes() {
        // circle: holonomy is any permutation
        let circle = SimplicialComplex::sphere(1);
        let r = local_systems(&circle, 3, 1_000).unwrap();
        assert_eq!((r.flat_connections, r.nontrivial), (6, 5));
        // filled triangle: only the constant family
        let r = local_systems(&SimplicialComplex::simplex(2), 3, 1_000).unwrap();
        assert_eq!((r.flat_connections, r.nontrivial), (1, 0));
        // K₃,₃ has free fundamental group of rank 4
        let k33 = join(&SimplicialComplex::discrete(3), &SimplicialComplex::discrete(3));
        assert_eq!(local_systems(&k33, 2, 100_000).unwrap().flat_connections, 16);
        assert_eq!(local_systems(&SimplicialComplex::sphere(2), 2, 1_000).unwrap().nontrivial, 0);
        assert!(matches!(local_systems(&circle, 0, 10), Err(JoinError::FiberTooLarge(0))));
        assert!(matches!(local_systems(&k33, 3, 10), Err(JoinError::SearchTooLarge(10))));
    }

    #[test]
    fn dependent_stabilization_at_three() {
        for points in 0..=3 {
            let r = dependent_stabilization(points, 3, 10_000_000).unwrap();
            assert!(r.passed, "{points}: {r:?}");
        }
        let r = dependent_stabilization(2, 2, 1_000).unwrap();
        assert_eq!(r.levels[0].1[1].nontrivial, 1);
    }
}
