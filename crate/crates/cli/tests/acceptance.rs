//! Acceptance run: one line per criterion, nonzero exit on any failure.
//!
//! Every criterion is checked against an oracle written here from the raw
//! tables (lattice meets/joins, ring add/mul, map tables), not against the
//! library's own algorithms.

use std::collections::{BTreeSet, VecDeque};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use finsite_core::congruence::{gratzer_criterion, is_zero_quotient, principal_eq_meet_join};
use finsite_core::descent::{h1, ring_gluing_equalizer, unimodular_covers, DescentComplex};
use finsite_core::homology::homology;
use finsite_core::join::{iterated_join, truncation_stabilization, SimplicialComplex};
use finsite_core::lattice::Lattice;
use finsite_core::ring::{
    bundled_rings, enumerate_homs, localization_product, localize, parse_ring_spec, standard_test_family,
    unique_structure_hom, verify_localization,
};
use finsite_core::site::{
    compose_covers, local_choice, pullback_cover, random_cover, random_map, random_surjection, set_sheaf_equalizer,
    ChoiceStrategy, FiniteMap, Presentation, DEFAULT_ENUMERATION_BOUND,
};
use finsite_core::tensor::flatness;
use finsite_core::{free_bounded_distributive_lattice, FiniteModule, FiniteRing, RingHom};

const SEED: u64 = 20240601;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_secs: u64) -> Result<(), String> {
    ensure(elapsed < Duration::from_secs(limit_secs), || format!("took {elapsed:.2?}, limit {limit_secs} s"))
}

fn finsite(args: &[&str]) -> (i32, String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_finsite")).args(args).output().expect("spawn finsite");
    let elapsed = start.elapsed();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 output"), elapsed)
}

fn last_json(stdout: &str) -> Value {
    serde_json::from_str(stdout.lines().last().expect("a report line")).expect("report JSON")
}

fn fd(n: usize) -> Lattice {
    free_bounded_distributive_lattice(n).expect("supported size")
}

// ---------- lattice oracles ----------

/// Monotone functions on `n` variables as pairs `f₀ ≤ f₁` on `n − 1`.
fn monotone_tables(n: usize) -> Vec<Vec<bool>> {
    if n == 0 {
        return vec![vec![false], vec![true]];
    }
    let lower = monotone_tables(n - 1);
    let mut out = Vec::new();
    for f0 in &lower {
        for f1 in &lower {
            if f0.iter().zip(f1).all(|(&a, &b)| !a || b) {
                out.push(f0.iter().chain(f1).copied().collect());
            }
        }
    }
    out
}

/// Smallest congruence containing `pairs`, as a relation matrix, by fixpoint.
fn closure_oracle(l: &Lattice, pairs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let n = l.size();
    let mut rel = vec![vec![false; n]; n];
    for (x, row) in rel.iter_mut().enumerate() {
        row[x] = true;
    }
    for &(a, b) in pairs {
        rel[a][b] = true;
        rel[b][a] = true;
    }
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in 0..n {
                if !rel[x][y] {
                    continue;
                }
                for z in 0..n {
                    for (u, v) in [(l.meet(x, z), l.meet(y, z)), (l.join(x, z), l.join(y, z))] {
                        if !rel[u][v] {
                            rel[u][v] = true;
                            rel[v][u] = true;
                            changed = true;
                        }
                    }
                    if rel[y][z] && !rel[x][z] {
                        rel[x][z] = true;
                        rel[z][x] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return rel;
        }
    }
}

fn class_ids(rel: &[Vec<bool>]) -> Vec<usize> {
    (0..rel.len()).map(|x| (0..rel.len()).find(|&y| rel[x][y]).expect("reflexive")).collect()
}

fn criterion_1() -> Outcome {
    let mut sizes = Vec::new();
    let mut elapsed = Duration::ZERO;
    for n in 0..=4usize {
        let (code, out, t) = finsite(&["lattice", "free", "--gens", &n.to_string()]);
        elapsed += t;
        ensure(code == 0, || format!("exit {code} for n = {n}"))?;
        let size = last_json(&out)["result"]["size"].as_u64().ok_or("missing size")?;
        let oracle = monotone_tables(n).len() as u64;
        ensure(size == oracle, || format!("n = {n}: {size} vs oracle {oracle}"))?;
        sizes.push(size);
    }
    ensure(sizes == [2, 3, 6, 20, 168], || format!("sizes {sizes:?}"))?;
    within(elapsed, 1)?;
    Ok(format!("sizes {sizes:?}"))
}

fn criterion_2() -> Outcome {
    let mut checked = 0u64;
    let mut elapsed = Duration::ZERO;
    for n in [2, 3] {
        let l = fd(n);
        let s = l.size();
        for a in 0..s {
            for b in (0..s).filter(|&b| l.leq(a, b)) {
                let rel = closure_oracle(&l, &[(a, b)]);
                let start = Instant::now();
                let verdicts: Vec<bool> = (0..s * s)
                    .map(|k| gratzer_criterion(&l, a, b, k / s, k % s).expect("a ≤ b"))
                    .collect();
                elapsed += start.elapsed();
                for (k, v) in verdicts.into_iter().enumerate() {
                    checked += 1;
                    ensure(v == rel[k / s][k % s], || format!("FD({n}) a={a} b={b} x={} y={}", k / s, k % s))?;
                }
            }
        }
    }
    within(elapsed, 10)?;
    Ok(format!("0 mismatches in {checked} tuples"))
}

fn criterion_3() -> Outcome {
    let mut elapsed = Duration::ZERO;
    let mut total = 0;
    for (n, expected) in [(2usize, 36usize), (3, 400)] {
        let (code, out, t) = finsite(&["lattice", "simplicial-check", "--gens", &n.to_string(), "--format", "json"]);
        elapsed += t;
        ensure(code == 0, || format!("exit {code} for FD({n})"))?;
        let reports: Vec<Value> =
            out.lines().map(|line| serde_json::from_str(line).expect("JSON line")).filter(|v: &Value| v.get("i").is_some()).collect();
        ensure(reports.len() == expected, || format!("FD({n}): {} reports", reports.len()))?;
        let l = fd(n);
        let s = l.size();
        for r in &reports {
            let (i, j) = (r["i"].as_u64().unwrap() as usize, r["j"].as_u64().unwrap() as usize);
            ensure(r["bijective"] == true && r["amalgam_matches"] == true, || format!("FD({n}) pair ({i},{j}): {r}"))?;
            let m = l.meet(i, j);
            let c1 = class_ids(&closure_oracle(&l, &[(i, m)]));
            let c2 = class_ids(&closure_oracle(&l, &[(j, m)]));
            let c3 = class_ids(&closure_oracle(&l, &[(i, j)]));
            let images: BTreeSet<(usize, usize)> = (0..s).map(|x| (c1[x], c2[x])).collect();
            // compatible pairs of classes over the common quotient
            let classes = |c: &[usize]| c.iter().copied().collect::<BTreeSet<_>>();
            let over = |c: &[usize], k: usize| classes(c).into_iter().filter(|&u| c3[u] == k).count();
            let pullback: usize = classes(&c3).into_iter().map(|k| over(&c1, k) * over(&c2, k)).sum();
            ensure(images.len() == s && pullback == s, || {
                format!("FD({n}) pair ({i},{j}): oracle image {} pullback {pullback}", images.len())
            })?;
            total += 1;
        }
    }
    within(elapsed, 10)?;
    Ok(format!("{total} pairs bijective"))
}

fn criterion_4() -> Outcome {
    let mut pairs = 0;
    for n in [2, 3] {
        let l = fd(n);
        for a in 0..l.size() {
            for b in 0..l.size() {
                let lhs = class_ids(&closure_oracle(&l, &[(a, b)]));
                let rhs = class_ids(&closure_oracle(&l, &[(l.meet(a, b), l.join(a, b))]));
                ensure(principal_eq_meet_join(&l, a, b) && lhs == rhs, || format!("FD({n}) ({a},{b})"))?;
                pairs += 1;
            }
        }
    }
    let mut family: Vec<(String, Lattice)> = (0..=3).map(|n| (format!("FD({n})"), fd(n))).collect();
    family.extend((1..=4).map(|n| (format!("chain {n}"), Lattice::chain(n))));
    family.extend((1..=3).map(|k| (format!("2^{k}"), Lattice::boolean(k))));
    for (name, l) in &family {
        for a in 0..l.size() {
            for b in 0..l.size() {
                let complements = l.meet(a, b) == l.bottom() && l.join(a, b) == l.top();
                let collapses = closure_oracle(l, &[(a, b)])[l.bottom()][l.top()];
                ensure(is_zero_quotient(l, a, b) == complements && collapses == complements, || {
                    format!("{name} ({a},{b})")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

// ---------- ring oracles ----------

/// Ideal generated by `gens`, closed under addition and multiplication by `R`.
fn ideal_oracle(r: &FiniteRing, gens: &[usize]) -> BTreeSet<usize> {
    let mut seen: BTreeSet<usize> = [r.zero()].into();
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &g in gens {
        for x in 0..r.size() {
            let p = r.mul(x, g);
            if seen.insert(p) {
                queue.push_back(p);
            }
        }
    }
    while let Some(a) = queue.pop_front() {
        for b in seen.clone() {
            let s = r.add(a, b);
            if seen.insert(s) {
                queue.push_back(s);
            }
        }
    }
    seen
}

fn idempotent_power(r: &FiniteRing, f: usize) -> usize {
    let mut p = f;
    for _ in 0..2 * r.size() + 2 {
        if r.mul(p, p) == p {
            return p;
        }
        p = r.mul(p, f);
    }
    unreachable!("some power of an element of a finite ring is idempotent")
}

/// Compatible families `(sᵢ ∈ eᵢR)` with `eᵢeⱼsᵢ = eᵢeⱼsⱼ`, by brute force.
fn compatible_families(r: &FiniteRing, es: &[usize]) -> usize {
    let factors: Vec<Vec<usize>> =
        es.iter().map(|&e| (0..r.size()).map(|x| r.mul(e, x)).collect::<BTreeSet<_>>().into_iter().collect()).collect();
    let mut count = 0;
    let mut idx = vec![0usize; es.len()];
    loop {
        let s: Vec<usize> = idx.iter().zip(&factors).map(|(&k, f)| f[k]).collect();
        let ok = (0..es.len()).all(|i| {
            (0..es.len()).all(|j| {
                let e = r.mul(es[i], es[j]);
                r.mul(e, s[i]) == r.mul(e, s[j])
            })
        });
        count += ok as usize;
        let Some(p) = (0..es.len()).rev().find(|&p| idx[p] + 1 < factors[p].len()) else { break };
        idx[p] += 1;
        idx[p + 1..].iter_mut().for_each(|k| *k = 0);
    }
    count
}

/// `|ker d1| / |im d0|` over all ordered pairs and triples of a two-element
/// cover, by enumerating every 0- and 1-cochain.
fn h1_oracle(r: &FiniteRing, cover: &[usize], zero_d0: bool) -> u64 {
    let es: Vec<usize> = cover.iter().map(|&f| idempotent_power(r, f)).collect();
    let n = es.len();
    let piece = |e: usize| (0..r.size()).map(|x| r.mul(e, x)).collect::<BTreeSet<_>>().into_iter().collect::<Vec<_>>();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let c1: Vec<Vec<usize>> = pairs.iter().map(|&(i, j)| piece(r.mul(es[i], es[j]))).collect();
    let c0: Vec<Vec<usize>> = es.iter().map(|&e| piece(e)).collect();
    let tuples = |levels: &[Vec<usize>]| -> Vec<Vec<usize>> {
        levels.iter().fold(vec![Vec::new()], |acc, l| {
            acc.into_iter().flat_map(|t| l.iter().map(move |&x| [t.clone(), vec![x]].concat())).collect()
        })
    };
    let pos = |i: usize, j: usize| i * n + j;
    let mut image: BTreeSet<Vec<usize>> = BTreeSet::new();
    if zero_d0 {
        image.insert(vec![r.zero(); pairs.len()]);
    } else {
        for s in tuples(&c0) {
            image.insert(pairs.iter().map(|&(i, j)| r.mul(r.mul(es[i], es[j]), r.sub(s[j], s[i]))).collect());
        }
    }
    let mut kernel = 0u64;
    for t in tuples(&c1) {
        let closed = (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let e = r.mul(r.mul(es[i], es[j]), es[k]);
                    let v = r.add(r.sub(t[pos(j, k)], t[pos(i, k)]), t[pos(i, j)]);
                    r.mul(e, v) == r.zero()
                })
            })
        });
        kernel += closed as u64;
    }
    kernel / image.len() as u64
}

fn criterion_5() -> Outcome {
    let mut elapsed = Duration::ZERO;
    let mut covers = 0;
    let mut glued_by_oracle = 0;
    let mut h1_by_oracle = 0;
    for spec in ["Z/6", "Z/12", "Z/30", "prod(Z/4,Z/9)"] {
        let r = parse_ring_spec(spec).map_err(|e| e.to_string())?;
        let m = FiniteModule::ring_as_module(&r);
        let start = Instant::now();
        let library = unimodular_covers(&r, 3);
        elapsed += start.elapsed();
        let mut expected = Vec::new();
        for a in 0..r.size() {
            for b in a..r.size() {
                for c in b..r.size() {
                    for cover in [vec![a], vec![a, b], vec![a, b, c]] {
                        if ideal_oracle(&r, &cover).contains(&r.one()) {
                            expected.push(cover);
                        }
                    }
                }
            }
        }
        expected.sort();
        expected.dedup();
        let mut got = library.clone();
        got.sort();
        ensure(got == expected, || format!("{spec}: {} covers vs oracle {}", got.len(), expected.len()))?;
        for cover in &library {
            let start = Instant::now();
            let c = DescentComplex::for_cover(&m, cover).map_err(|e| e.to_string())?;
            let rep = h1(&c);
            let glue = ring_gluing_equalizer(&r, cover).map_err(|e| e.to_string())?;
            elapsed += start.elapsed();
            ensure(rep.h1 == "1" && rep.exact && glue.bijective, || format!("{spec} {cover:?}: h1 {} glue {glue:?}", rep.h1))?;
            let es: Vec<usize> = cover.iter().map(|&f| idempotent_power(&r, f)).collect();
            let families = compatible_families(&r, &es);
            ensure(families == r.size() && glue.compatible_families == families, || {
                format!("{spec} {cover:?}: oracle {families} compatible families")
            })?;
            glued_by_oracle += 1;
            if cover.len() <= 2 && r.size() <= 12 {
                let oracle = h1_oracle(&r, cover, false);
                ensure(oracle == 1, || format!("{spec} {cover:?}: oracle |H¹| = {oracle}"))?;
                h1_by_oracle += 1;
            }
            covers += 1;
        }
    }
    let r = FiniteRing::zmod(6);
    let m = FiniteModule::ring_as_module(&r);
    let corrupted = h1(&DescentComplex::for_cover(&m, &[1, 5]).map_err(|e| e.to_string())?.with_zero_d0());
    let oracle = h1_oracle(&r, &[1, 5], true);
    ensure(corrupted.h1 != "1" && corrupted.h1 == oracle.to_string(), || {
        format!("negative control: |H¹| = {} vs oracle {oracle}", corrupted.h1)
    })?;
    within(elapsed, 20)?;
    Ok(format!(
        "{covers} covers exact and glued ({glued_by_oracle} gluings and {h1_by_oracle} H¹ by oracle); negative control |H¹| = {}",
        corrupted.h1
    ))
}

fn criterion_6() -> Outcome {
    let family = standard_test_family();
    let mut elapsed = Duration::ZERO;
    let mut checked = 0;
    for (name, r) in bundled_rings() {
        for f in 0..r.size() {
            let e = idempotent_power(&r, f);
            let start = Instant::now();
            let loc = localize(&r, f);
            let universal = verify_localization(&r, f, &loc.hom, &family);
            elapsed += start.elapsed();
            ensure(universal, || format!("{name} f={f}: universal property"))?;
            let corner: BTreeSet<usize> = (0..r.size()).map(|x| r.mul(e, x)).collect();
            ensure(loc.idempotent == e && loc.ring.size() == corner.len(), || format!("{name} f={f}: size {}", loc.ring.size()))?;
            for s in &family {
                let from_loc = enumerate_homs(&loc.ring, s, &[]).len();
                let inverting = enumerate_homs(&r, s, &[]).into_iter().filter(|phi| s.is_unit(phi[f])).count();
                ensure(from_loc == inverting, || format!("{name} f={f}: {from_loc} vs {inverting} homs"))?;
            }
            for g in 0..r.size() {
                let start = Instant::now();
                let product = localization_product(&r, f, g);
                elapsed += start.elapsed();
                let expected = r.mul(e, idempotent_power(&r, g)) == idempotent_power(&r, r.mul(f, g));
                ensure(product && expected, || format!("{name} f={f} g={g}"))?;
                checked += 1;
            }
        }
    }
    within(elapsed, 10)?;
    Ok(format!("{checked} pairs"))
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// For `ℤ/n → ℤ/k`: `(d) ⊗ ℤ/k ≅ ℤ/gcd(n/d, k)` must match `dℤ/k`, and every
/// prime of `n` must survive in `ℤ/k`.
fn cyclic_flatness(n: usize, k: usize) -> (bool, bool) {
    let flat = (1..=n).filter(|d| n.is_multiple_of(*d)).all(|d| gcd(n / d, k) == k / gcd(d, k));
    let primes = (2..=n).filter(|&p| n.is_multiple_of(p) && (2..p).all(|q| p % q != 0));
    let faithful = flat && primes.into_iter().all(|p| k.is_multiple_of(p));
    (flat, faithful)
}

fn criterion_7() -> Outcome {
    let verdict = |n: usize, k: usize| {
        let rep = flatness(&unique_structure_hom(&FiniteRing::zmod(n), &FiniteRing::zmod(k)).expect("k divides n"));
        (rep.flat, rep.faithfully_flat)
    };
    ensure(verdict(4, 2) == (false, false), || "Z/4 → Z/2".into())?;
    ensure(verdict(12, 3) == (true, false), || "Z/12 → Z/3".into())?;
    for (name, r) in bundled_rings().into_iter().filter(|(_, r)| r.size() <= 12) {
        let rep = flatness(&RingHom::identity(&r));
        ensure(rep.flat && rep.faithfully_flat, || format!("{name} → {name}"))?;
    }
    let mut pairs = 0;
    for n in 1..=12 {
        for k in (1..=n).filter(|k| n % k == 0) {
            ensure(verdict(n, k) == cyclic_flatness(n, k), || format!("Z/{n} → Z/{k}: {:?}", verdict(n, k)))?;
            pairs += 1;
        }
    }
    Ok(format!("three verdicts exact; {pairs} cyclic pairs agree with the divisor oracle"))
}

// ---------- site oracles ----------

fn cover_oracle(f: &FiniteMap, member: impl Fn(usize) -> bool) -> bool {
    let mut sizes = vec![0usize; f.codomain];
    for &y in &f.table {
        sizes[y] += 1;
    }
    sizes.into_iter().all(member)
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let presentations = [(Presentation::odd(), (|n| n % 2 == 1) as fn(usize) -> bool), (Presentation::nonempty(), |n| n >= 1)];
    for k in 0..1000 {
        let (t, member) = &presentations[k % 2];
        let z = rng.gen_range(1..=3);
        let g = random_cover(&mut rng, t, z, 3);
        let f = random_cover(&mut rng, t, g.domain, 3);
        let composite = FiniteMap { domain: f.domain, codomain: g.codomain, table: f.table.iter().map(|&x| g.table[x]).collect() };
        let v = compose_covers(&f, &g, t).map_err(|e| e.to_string())?;
        ensure(v.is_cover && v.map == composite && cover_oracle(&composite, member), || format!("composite #{k}"))?;
        let w = rng.gen_range(0..=4);
        let h = random_map(&mut rng, w, g.codomain);
        let (pb, v) = pullback_cover(&g, &h, t).map_err(|e| e.to_string())?;
        let expected: usize = h.table.iter().map(|&y| g.table.iter().filter(|&&x| x == y).count()).sum();
        let square = pb.carrier.iter().all(|&(a, b)| g.table[a] == h.table[b]);
        ensure(v.is_cover && pb.carrier.len() == expected && square && cover_oracle(&pb.projection, member), || {
            format!("pullback #{k}")
        })?;
    }
    for k in 0..1000 {
        let (t, member) = &presentations[k % 2];
        let c = rng.gen_range(1..=4);
        let x = rng.gen_range(c..=6);
        let f = random_surjection(&mut rng, x, c);
        let d = rng.gen_range(0..=5);
        let g = random_map(&mut rng, d, c);
        let strategy = if k % 4 < 2 { ChoiceStrategy::FullFiber } else { ChoiceStrategy::Singleton };
        let lc = local_choice(&g, &f, t, &strategy).map_err(|e| e.to_string())?;
        let commutes = (0..lc.z).all(|i| f.table[lc.h.table[i]] == g.table[lc.p.table[i]]);
        ensure(lc.passed() && commutes && cover_oracle(&lc.p, member), || format!("local choice #{k}"))?;
    }
    Ok("1000 composites and pullbacks, 1000 local choices".into())
}

/// Functions `A → X` constant on the fibers of `f`, by enumeration.
fn matching_families(x: usize, f: &FiniteMap) -> u64 {
    let a = f.domain;
    if x == 0 {
        return (a == 0) as u64;
    }
    let mut count = 0;
    for code in 0..(x as u64).pow(a as u32) {
        let s: Vec<u64> = (0..a).map(|i| code / (x as u64).pow(i as u32) % x as u64).collect();
        count += (0..a).all(|i| (0..a).all(|j| f.table[i] != f.table[j] || s[i] == s[j])) as u64;
    }
    count
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    for k in 0..1000 {
        let b = rng.gen_range(1..=5);
        let a = rng.gen_range(b..=5);
        let f = random_surjection(&mut rng, a, b);
        let x = rng.gen_range(0..=4);
        let v = set_sheaf_equalizer(x, &f, DEFAULT_ENUMERATION_BOUND).map_err(|e| e.to_string())?;
        let oracle = matching_families(x, &f);
        ensure(v.bijective && v.equalizer_size == oracle as u128 && oracle == (x as u64).pow(b as u32), || {
            format!("#{k}: |X| = {x}, {f:?}: {v:?}, oracle {oracle}")
        })?;
    }
    let empty = FiniteMap::new(0, 1, Vec::new()).map_err(|e| e.to_string())?;
    let v = set_sheaf_equalizer(2, &empty, DEFAULT_ENUMERATION_BOUND).map_err(|e| e.to_string())?;
    ensure(!v.bijective && v.equalizer_size == matching_families(2, &empty) as u128 && v.base_functions == 2, || format!("{v:?}"))?;
    Ok(format!("1000 surjections bijective; empty cover {} vs {}", v.base_functions, v.equalizer_size))
}

// ---------- join oracles ----------

fn binomial(n: u64, k: u64) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn criterion_10() -> Outcome {
    let mut elapsed = Duration::ZERO;
    for points in 2..=4usize {
        for n in 2..=4usize {
            let k = iterated_join(&SimplicialComplex::discrete(points), n).map_err(|e| e.to_string())?;
            let start = Instant::now();
            let p = homology(&k).map_err(|e| e.to_string())?;
            elapsed += start.elapsed();
            // s-vertex faces pick s of the n copies and one point in each
            let chi: i64 = -1
                + (1..=n as u64).map(|s| if s % 2 == 1 { 1 } else { -1 } * binomial(n as u64, s) * (points as i64).pow(s as u32)).sum::<i64>();
            let from_betti: i64 = p.betti.iter().enumerate().map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
            let top = (points - 1).pow(n as u32);
            let low = (0..n - 1).all(|d| p.betti_at(d) == 0);
            ensure(low && p.betti_at(n - 1) == top && chi == from_betti && p.torsion.iter().all(Vec::is_empty), || {
                format!("|A| = {points}, n = {n}: {p:?}, χ̃ {chi}")
            })?;
        }
    }
    let octahedron = homology(&iterated_join(&SimplicialComplex::discrete(2), 3).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(octahedron.is_sphere(2) && octahedron.betti_at(2) == 1, || format!("{octahedron:?}"))?;
    for points in 0..=4usize {
        for target in 0..=4usize {
            let start = Instant::now();
            let r = truncation_stabilization(points, target);
            elapsed += start.elapsed();
            // vertices 0..points and points..2·points, every cross pair an edge
            let v = 2 * points;
            let mut constant = 0u64;
            for code in 0..(target as u64).pow(v as u32) {
                let c: Vec<u64> = (0..v).map(|i| code / (target as u64).pow(i as u32) % target as u64).collect();
                constant += (0..points).all(|i| (points..v).all(|j| c[i] == c[j])) as u64;
            }
            let truncation = if points == 0 { 1 } else { target as u64 };
            ensure(r.passed && r.maps_from_join == constant && constant == truncation, || {
                format!("|A| = {points}, |X| = {target}: {r:?}, oracle {constant}")
            })?;
        }
    }
    within(elapsed, 20)?;
    Ok("A^{∗n} profiles and stabilization hold".into())
}

fn criterion_11() -> Outcome {
    let (code1, out1, t1) = finsite(&["suite", "all"]);
    let (code2, out2, t2) = finsite(&["suite", "all"]);
    ensure(code1 == 0 && code2 == 0, || format!("exit codes {code1}, {code2}"))?;
    within(t1.max(t2), 60)?;
    ensure(out1 == out2, || "reports differ between runs".into())?;
    let report = last_json(&out1);
    ensure(report["summary"]["failed"] == 0, || format!("{}", report["summary"]))?;
    Ok(format!("{} checks, {:.2?} per run, byte-identical", report["summary"]["passed"], t1.max(t2)))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("free lattice sizes", criterion_1),
        ("meet/join criterion vs closure", criterion_2),
        ("simplicial equalizer", criterion_3),
        ("principal congruences", criterion_4),
        ("Zariski gluing", criterion_5),
        ("localization", criterion_6),
        ("flatness", criterion_7),
        ("cover laws", criterion_8),
        ("set sheaf descent", criterion_9),
        ("join connectivity", criterion_10),
        ("suite all", criterion_11),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail} ({elapsed:.2?})", k + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {why} ({elapsed:.2?})", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
