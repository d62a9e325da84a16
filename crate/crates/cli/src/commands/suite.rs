use clap::Subcommand;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use finsite_core::congruence::{gratzer_criterion, is_zero_quotient, principal, principal_eq_meet_join};
use finsite_core::descent::{h1, ring_gluing_equalizer, unimodular_covers, DescentComplex};
use finsite_core::homology::homology;
use finsite_core::join::{iterated_join, truncation_stabilization, SimplicialComplex};
use finsite_core::lattice::Lattice;
use finsite_core::ring::{
    bundled_rings, localization_product, localize, parse_ring_spec, standard_test_family, unique_structure_hom,
    verify_localization,
};
use finsite_core::simplicial::sweep_all_pairs;
use finsite_core::site::{
    compose_covers, local_choice, pullback_cover, random_cover, random_map, random_surjection, set_sheaf_equalizer,
    ChoiceStrategy, FiniteMap, Presentation, DEFAULT_ENUMERATION_BOUND,
};
use finsite_core::tensor::flatness;
use finsite_core::{free_bounded_distributive_lattice, FiniteModule, FiniteRing};

use super::lattice::monotone_count;
use crate::input::InputError;
use crate::report::{witness, Recorder, RunReport};
use crate::{Global, Output};

#[derive(Subcommand, Debug)]
pub enum SuiteCommand {
    /// Every check at its default bounds.
    All,
}

/// Randomized instances per family.
const SAMPLES: usize = 1000;

pub fn run(cmd: &SuiteCommand, g: &Global) -> Result<(RunReport, Output), InputError> {
    let SuiteCommand::All = cmd;
    let mut rec = Recorder::new("suite all", g.timings);
    rec.param("seed", g.seed);
    let bound = g.bound.unwrap_or(20);
    rec.param("bound", bound);
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed);

    lattices(&mut rec, bound);
    rings(&mut rec);
    sites(&mut rec, &mut rng);
    joins(&mut rec);
    Ok((rec.finish(), Output { lines: Vec::new() }))
}

fn fd(n: usize) -> Lattice {
    free_bounded_distributive_lattice(n).expect("n ≤ 4")
}

fn lattices(rec: &mut Recorder, bound: usize) {
    rec.timed("free lattice sizes match monotone function counts", || {
        let sizes: Vec<usize> = (0..=4).map(|n| fd(n).size()).collect();
        let counts: Vec<u64> = (0..=4).map(monotone_count).collect();
        let ok = sizes.iter().zip(&counts).all(|(&s, &c)| s as u64 == c) && sizes == [2, 3, 6, 20, 168];
        (ok, witness(json!({ "sizes": sizes, "counts": counts })), ())
    });

    rec.timed("meet/join criterion agrees with congruence closure on FD(2), FD(3)", || {
        let mut checked = 0u64;
        let mut mismatch = None;
        for n in [2, 3] {
            let l = fd(n);
            let s = l.size();
            for a in 0..s {
                for b in (0..s).filter(|&b| l.leq(a, b)) {
                    let theta = principal(&l, a, b);
                    for x in 0..s {
                        for y in 0..s {
                            checked += 1;
                            if gratzer_criterion(&l, a, b, x, y).expect("a ≤ b") != theta.related(x, y) && mismatch.is_none() {
                                mismatch = Some((n, a, b, x, y));
                            }
                        }
                    }
                }
            }
        }
        (mismatch.is_none(), witness(json!({ "checked": checked, "first_mismatch": mismatch })), ())
    });

    rec.timed("simplicial equalizer on every pair of FD(2), FD(3)", || {
        let mut gens = vec![2, 3];
        if bound >= 168 {
            gens.push(4);
        }
        let mut pairs = 0;
        let mut failed = Vec::new();
        for n in gens {
            for r in sweep_all_pairs(&fd(n), &format!("FD({n})")) {
                pairs += 1;
                if !r.passed() {
                    failed.push((n, r.i, r.j));
                }
            }
        }
        (failed.is_empty(), witness(json!({ "pairs": pairs, "failed": failed.first() })), ())
    });

    rec.timed("principal congruences and zero quotients", || {
        let mut ok = true;
        for n in [2, 3] {
            let l = fd(n);
            for a in 0..l.size() {
                for b in 0..l.size() {
                    ok &= principal_eq_meet_join(&l, a, b);
                }
            }
        }
        let mut family: Vec<Lattice> = (0..=3).map(fd).collect();
        family.extend((1..=4).map(Lattice::chain));
        family.extend((1..=3).map(Lattice::boolean));
        for l in &family {
            for a in 0..l.size() {
                for b in 0..l.size() {
                    let complements = l.meet(a, b) == l.bottom() && l.join(a, b) == l.top();
                    ok &= is_zero_quotient(l, a, b) == complements;
                }
            }
        }
        (ok, None, ())
    });
}

fn rings(rec: &mut Recorder) {
    rec.timed("every small unimodular cover glues with trivial H¹", || {
        let mut covers = 0usize;
        let mut failed = None;
        for spec in ["Z/6", "Z/12", "Z/30", "prod(Z/4,Z/9)"] {
            let r = parse_ring_spec(spec).expect("bundled spec");
            let m = FiniteModule::ring_as_module(&r);
            for cover in unimodular_covers(&r, 3) {
                covers += 1;
                let c = DescentComplex::for_cover(&m, &cover).expect("unimodular by construction");
                let exact = h1(&c).exact;
                let glued = ring_gluing_equalizer(&r, &cover).expect("unimodular by construction").bijective;
                if !(exact && glued) && failed.is_none() {
                    failed = Some((spec, cover));
                }
            }
        }
        (failed.is_none(), witness(json!({ "covers": covers, "failed": failed })), ())
    });

    rec.timed("corrupted descent complex has nontrivial H¹", || {
        let r = FiniteRing::zmod(6);
        let m = FiniteModule::ring_as_module(&r);
        let c = DescentComplex::for_cover(&m, &[1, 5]).expect("units cover").with_zero_d0();
        let rep = h1(&c);
        (!rep.exact, witness(json!({ "h1": rep.h1 })), ())
    });

    rec.timed("localizations satisfy their universal property", || {
        let family = standard_test_family();
        let mut failed = None;
        for (name, r) in bundled_rings() {
            for f in 0..r.size() {
                let loc = localize(&r, f);
                if !verify_localization(&r, f, &loc.hom, &family) && failed.is_none() {
                    failed = Some((name.clone(), f, None));
                }
                for h in 0..r.size() {
                    if !localization_product(&r, f, h) && failed.is_none() {
                        failed = Some((name.clone(), f, Some(h)));
                    }
                }
            }
        }
        (failed.is_none(), witness(json!({ "failed": failed })), ())
    });

    rec.timed("flatness classifications", || {
        let over = |n: usize, k: usize| {
            flatness(&unique_structure_hom(&FiniteRing::zmod(n), &FiniteRing::zmod(k)).expect("ℤ/k is a ℤ/n-algebra"))
        };
        let a = over(4, 2);
        let b = over(12, 3);
        let c = over(12, 12);
        let ok = !a.flat && b.flat && !b.faithfully_flat && c.faithfully_flat;
        (ok, witness(json!({ "Z/4->Z/2": a.flat, "Z/12->Z/3": [b.flat, b.faithfully_flat], "Z/12->Z/12": c.faithfully_flat })), ())
    });
}

fn sites(rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let presentations = [Presentation::odd(), Presentation::nonempty()];
    rec.timed("random composites and pullbacks of covers are covers", || {
        let mut ok = true;
        for k in 0..SAMPLES {
            let t = &presentations[k % 2];
            let (f, g) = loop {
                let z = rng.gen_range(1..=3);
                let g = random_cover(rng, t, z, 3);
                let f = random_cover(rng, t, g.domain, 3);
                if f.domain <= 8 {
                    break (f, g);
                }
            };
            ok &= compose_covers(&f, &g, t).expect("composable").is_cover;
            let w = rng.gen_range(0..=4);
            let h = random_map(rng, w, g.codomain);
            ok &= pullback_cover(&g, &h, t).expect("same codomain").1.is_cover;
        }
        (ok, witness(json!({ "samples": SAMPLES })), ())
    });

    rec.timed("random local choices commute and give covers", || {
        let mut ok = true;
        for k in 0..SAMPLES {
            let t = &presentations[k % 2];
            let c = rng.gen_range(1..=4);
            let x = rng.gen_range(c..=6);
            let f = random_surjection(rng, x, c);
            let d = rng.gen_range(0..=5);
            let g = random_map(rng, d, c);
            let s = if k % 4 < 2 { ChoiceStrategy::FullFiber } else { ChoiceStrategy::Singleton };
            ok &= local_choice(&g, &f, t, &s).expect("f is onto").passed();
        }
        (ok, witness(json!({ "samples": SAMPLES })), ())
    });

    rec.timed("sets satisfy descent along surjections", || {
        let mut ok = true;
        for _ in 0..SAMPLES {
            let b = rng.gen_range(1..=5);
            let a = rng.gen_range(b..=5);
            let f = random_surjection(rng, a, b);
            let x = rng.gen_range(0..=4);
            ok &= set_sheaf_equalizer(x, &f, DEFAULT_ENUMERATION_BOUND).expect("within bound").bijective;
        }
        let empty = FiniteMap::new(0, 1, vec![]).expect("empty map");
        let v = set_sheaf_equalizer(2, &empty, DEFAULT_ENUMERATION_BOUND).expect("within bound");
        ok &= !v.bijective;
        (ok, witness(json!({ "samples": SAMPLES, "empty_cover_equalizer": v.equalizer_size, "empty_cover_base": v.base_functions })), ())
    });
}

fn joins(rec: &mut Recorder) {
    rec.timed("iterated joins of points are wedges of spheres", || {
        let mut failed = None;
        for points in 2..=4usize {
            let a = SimplicialComplex::discrete(points);
            for n in 2..=4usize {
                let p = homology(&iterated_join(&a, n).expect("n ≥ 1")).expect("within bound");
                let low = (0..n - 1).all(|d| p.betti_at(d) == 0);
                if !(low && p.betti_at(n - 1) == (points - 1).pow(n as u32)) && failed.is_none() {
                    failed = Some((points, n, p.betti.clone()));
                }
            }
        }
        let octahedron = homology(&iterated_join(&SimplicialComplex::discrete(2), 3).expect("n ≥ 1")).expect("small");
        (failed.is_none() && octahedron.is_sphere(2), witness(json!({ "failed": failed })), ())
    });

    rec.timed("truncation stabilizes at the second join", || {
        let mut ok = true;
        for points in 0..=4 {
            for target in 0..=4 {
                ok &= truncation_stabilization(points, target).passed;
            }
        }
        (ok, None, ())
    });
}
