use clap::{Subcommand, ValueEnum};
use serde_json::json;

use finsite_core::descent::{h1, ring_gluing_equalizer, weak_quasicoherence_check, DescentComplex, MAX_COVER};
use finsite_core::ring::{
    duality_diagnostics, localization_product, localize, parse_ring_spec, spec_points, standard_test_family,
    unique_structure_hom, verify_localization,
};
use finsite_core::tensor::flatness;
use finsite_core::{FiniteModule, FiniteRing};

use crate::input::{self, bail, InputError};
use crate::report::{witness, Recorder, RunReport};
use crate::{Global, Output};

#[derive(Subcommand, Debug)]
pub enum RingCommand {
    /// Localization at one element, checked against its universal property.
    Localize {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        element: String,
    },
    /// Points of an algebra over the base ring.
    Spec {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        algebra: String,
    },
    /// Flatness and faithful flatness of the structure map.
    Flat {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        algebra: String,
        /// Expected classification; adds a check against it.
        #[arg(long, value_enum)]
        expect: Option<Flatness>,
    },
    /// First cohomology of the descent complex of a cover.
    H1 {
        #[arg(long)]
        ring: String,
        /// `self`, `Z/k`, or `Z/n-with-action:PATH`.
        #[arg(long, default_value = "self")]
        module: String,
        #[arg(long)]
        cover: String,
        /// Replace the first differential by zero (negative control).
        #[arg(long)]
        corrupt: bool,
    },
    /// Gluing of ring elements over a cover.
    Glue {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        cover: String,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flatness {
    NotFlat,
    Flat,
    Faithful,
}

fn ring(spec: &str) -> Result<FiniteRing, InputError> {
    Ok(parse_ring_spec(spec)?)
}

fn cover(r: &FiniteRing, text: &str) -> Result<Vec<usize>, InputError> {
    let c = input::ring_elements(r, text)?;
    if c.is_empty() || c.len() > MAX_COVER {
        return bail(format!("a cover needs 1 to {MAX_COVER} elements"));
    }
    Ok(c)
}

pub fn run(cmd: &RingCommand, g: &Global) -> Result<(RunReport, Output), InputError> {
    let rec = match cmd {
        RingCommand::Localize { ring: spec, element } => {
            let mut rec = Recorder::new("ring localize", g.timings);
            rec.param("ring", spec);
            rec.param("element", element);
            let r = ring(spec)?;
            let f = input::ring_element(&r, element)?;
            let loc = localize(&r, f);
            let family = standard_test_family();
            rec.timed("universal property over the test family", || {
                (verify_localization(&r, f, &loc.hom, &family), None, ())
            });
            let bad: Vec<usize> = (0..r.size()).filter(|&h| !localization_product(&r, f, h)).collect();
            rec.check("R_f ⊗ R_g ≅ R_fg for every g", bad.is_empty(), bad.first().and_then(|&h| witness(r.label(h))));
            rec.result(json!({
                "idempotent": r.label(loc.idempotent),
                "size": loc.ring.size(),
                "elements": loc.ring.labels(),
                "map": loc.hom.map,
            }));
            rec
        }
        RingCommand::Spec { ring: spec, algebra } => {
            let mut rec = Recorder::new("ring spec", g.timings);
            rec.param("ring", spec);
            rec.param("algebra", algebra);
            let r = ring(spec)?;
            let a = ring(algebra)?;
            let structure = unique_structure_hom(&r, &a)?;
            let points = spec_points(&structure);
            let split = points.iter().all(|p| structure.then(p).map == (0..r.size()).collect::<Vec<_>>());
            rec.check("every point splits the structure map", split, None);
            rec.result(json!({
                "points": points.iter().map(|p| p.map.clone()).collect::<Vec<_>>(),
                "diagnostics": duality_diagnostics(&structure),
            }));
            rec
        }
        RingCommand::Flat { ring: spec, algebra, expect } => {
            let mut rec = Recorder::new("ring flat", g.timings);
            rec.param("ring", spec);
            rec.param("algebra", algebra);
            let r = ring(spec)?;
            let a = ring(algebra)?;
            let sigma = unique_structure_hom(&r, &a)?;
            let report = rec.timed("flatness scan over all ideals", || {
                let rep = flatness(&sigma);
                (!rep.faithfully_flat || rep.flat, None, rep)
            });
            if let Some(e) = expect {
                rec.param("expect", e.to_possible_value().expect("no skipped variants").get_name().to_string());
                let got = match (report.flat, report.faithfully_flat) {
                    (false, _) => Flatness::NotFlat,
                    (true, false) => Flatness::Flat,
                    (true, true) => Flatness::Faithful,
                };
                rec.check("classification matches the expectation", got == *e, witness(format!("{got:?}")));
            }
            rec.result(report);
            rec
        }
        RingCommand::H1 { ring: spec, module, cover: cover_text, corrupt } => {
            let mut rec = Recorder::new("ring h1", g.timings);
            rec.param("ring", spec);
            rec.param("module", module);
            rec.param("cover", cover_text);
            if *corrupt {
                rec.param("corrupt", true);
            }
            let r = ring(spec)?;
            let m = FiniteModule::parse_spec(&r, module, None)?;
            let c = cover(&r, cover_text)?;
            let mut complex = DescentComplex::for_cover(&m, &c)?;
            if *corrupt {
                complex = complex.with_zero_d0();
            }
            let report = rec.timed("descent complex is exact in degree 1", || {
                let rep = h1(&complex);
                (rep.exact, rep.witnesses.first().and_then(witness), rep)
            });
            for &f in &c {
                let q = weak_quasicoherence_check(&m, f)?;
                rec.check(format!("M ⊗ R_f ≅ M_f at f = {}", r.label(f)), q.isomorphic, witness(&q));
            }
            rec.result(report);
            rec
        }
        RingCommand::Glue { ring: spec, cover: cover_text } => {
            let mut rec = Recorder::new("ring glue", g.timings);
            rec.param("ring", spec);
            rec.param("cover", cover_text);
            let r = ring(spec)?;
            let c = cover(&r, cover_text)?;
            let report = ring_gluing_equalizer(&r, &c)?;
            rec.check("ring is the equalizer of its localizations", report.bijective, witness(&report));
            rec.result(report);
            rec
        }
    };
    Ok((rec.finish(), Output { lines: Vec::new() }))
}
