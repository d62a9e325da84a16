use std::path::PathBuf;

use clap::{Args, Subcommand};
use serde_json::json;

use finsite_core::homology::homology_bounded;
use finsite_core::homology::DEFAULT_MATRIX_BOUND;
use finsite_core::join::{dependent_stabilization, iterated_join, join, join_of_maps, truncation_stabilization, SimplicialComplex};

use crate::input::{self, bail, InputError};
use crate::report::{witness, Recorder, RunReport};
use crate::{Global, Output};

#[derive(Subcommand, Debug)]
pub enum JoinCommand {
    /// Build a join or iterated join.
    Build {
        #[command(flatten)]
        source: ComplexSource,
        /// Join on the right with this complex.
        #[arg(long)]
        with: Option<PathBuf>,
    },
    /// Reduced integer homology.
    Homology {
        #[command(flatten)]
        source: ComplexSource,
    },
    /// Maps out of `A ∗ A` into a set against maps out of the truncation.
    Stabilize {
        #[arg(long)]
        points: usize,
        #[arg(long)]
        target: usize,
        /// Experimental: also check that families of sets with fibers of size
        /// 1..=min(target, 3) over `A^{∗3}` are constant. Needs `points ≤ 3`.
        #[arg(long)]
        dependent: bool,
    },
    /// Join of two maps of finite sets, fiber by fiber.
    Fibers {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        g: PathBuf,
    },
}

#[derive(Args, Debug)]
pub struct ComplexSource {
    /// Complex JSON `{ "vertices": n, "facets": [...] }`.
    #[arg(long)]
    complex: Option<PathBuf>,
    /// Use this many isolated points instead.
    #[arg(long)]
    points: Option<usize>,
    /// Iterated join power.
    #[arg(long, default_value_t = 1)]
    power: usize,
}

impl ComplexSource {
    fn load(&self, rec: &mut Recorder) -> Result<SimplicialComplex, InputError> {
        let base = match (&self.complex, self.points) {
            (Some(path), None) => {
                rec.param("complex", path.display().to_string());
                input::complex(path)?
            }
            (None, Some(n)) => {
                rec.param("points", n);
                SimplicialComplex::discrete(n)
            }
            _ => return bail("give exactly one of --complex PATH or --points N"),
        };
        rec.param("power", self.power);
        if self.power > 6 {
            return bail("powers above 6 are not supported");
        }
        Ok(iterated_join(&base, self.power)?)
    }
}

/// Partial assignments visited by `--dependent` unless `--bound` is given.
const DEPENDENT_BUDGET: u64 = 10_000_000;

pub fn run(cmd: &JoinCommand, g: &Global) -> Result<(RunReport, Output), InputError> {
    let rec = match cmd {
        JoinCommand::Build { source, with } => {
            let mut rec = Recorder::new("join build", g.timings);
            let mut k = source.load(&mut rec)?;
            if let Some(path) = with {
                rec.param("with", path.display().to_string());
                k = join(&k, &input::complex(path)?);
            }
            rec.check("facets are pairwise incomparable", SimplicialComplex::new(k.vertex_count(), k.facets().to_vec()).is_ok(), None);
            rec.result(json!({ "complex": k, "dimension": k.dimension(), "faces": k.face_count() }));
            rec
        }
        JoinCommand::Homology { source } => {
            let mut rec = Recorder::new("join homology", g.timings);
            let k = source.load(&mut rec)?;
            let bound = g.bound.unwrap_or(DEFAULT_MATRIX_BOUND);
            let profile = homology_bounded(&k, bound)?;
            let chi = k.reduced_euler_characteristic();
            rec.check(
                "Betti numbers match the Euler characteristic",
                profile.euler_characteristic() == chi,
                witness(json!({ "from_faces": chi, "from_homology": profile.euler_characteristic() })),
            );
            rec.result(profile);
            rec
        }
        JoinCommand::Stabilize { points, target, dependent } => {
            let mut rec = Recorder::new("join stabilize", g.timings);
            rec.param("points", points);
            rec.param("target", target);
            if *points > 6 || *target > 6 {
                return bail("points and target are limited to 6");
            }
            let r = truncation_stabilization(*points, *target);
            rec.check("maps out of A ∗ A equal maps out of the truncation", r.maps_from_join == r.maps_from_truncation, None);
            rec.check("A^{∗n} is connected for n = 2, 3, 4", *points == 0 || r.components.iter().all(|&c| c == 1), witness(&r.components));
            if *dependent {
                if *points > 3 {
                    return bail("--dependent needs points ≤ 3");
                }
                let budget = g.bound.map_or(DEPENDENT_BUDGET, |b| b as u64);
                rec.param("dependent", true);
                let d = dependent_stabilization(*points, (*target).clamp(1, 3), budget)?;
                rec.check("families of sets over A^{∗3} are constant", d.passed, None);
                rec.result(json!({ "stabilization": r, "dependent": d }));
            } else {
                rec.result(r);
            }
            rec
        }
        JoinCommand::Fibers { f, g: gpath } => {
            let mut rec = Recorder::new("join fibers", g.timings);
            rec.param("f", f.display().to_string());
            rec.param("g", gpath.display().to_string());
            let fm = input::map(f)?;
            let gm = input::map(gpath)?;
            let j = join_of_maps(&fm, &gm)?;
            let bad = j.fibers.iter().find(|x| !x.matches);
            rec.check("each fiber is the join of the two fibers", j.passed(), bad.and_then(witness));
            rec.result(j);
            rec
        }
    };
    Ok((rec.finish(), Output { lines: Vec::new() }))
}
