use std::path::PathBuf;

use clap::{Subcommand, ValueEnum};
use serde_json::json;

use finsite_core::site::{
    compose_covers, is_cover, is_presentation, local_choice, pullback_cover, set_sheaf_equalizer, sigma_projectivity,
    verify_projectivity, ChoiceStrategy, Presentation, DEFAULT_ENUMERATION_BOUND,
};

use crate::input::{self, InputError};
use crate::report::{witness, Recorder, RunReport};
use crate::{Global, Output};

#[derive(Subcommand, Debug)]
pub enum SiteCommand {
    /// Check that a cardinality class contains 1 and is closed under sums.
    Presentation {
        #[arg(long)]
        presentation: String,
    },
    /// Check that every fiber of a map lies in the presentation.
    CheckCover {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        presentation: String,
        /// Also check the composite with this cover.
        #[arg(long)]
        then: Option<PathBuf>,
        /// Also check the pullback along this map.
        #[arg(long)]
        pullback_along: Option<PathBuf>,
    },
    /// Functions on the base against matching families on the cover.
    Sheaf {
        #[arg(long)]
        map: PathBuf,
        /// Size of the target set.
        #[arg(long)]
        target: usize,
    },
    /// Lift a map against a surjection after passing to a cover.
    LocalChoice {
        /// The map `D → C` to lift.
        #[arg(long)]
        g: PathBuf,
        /// The surjection `X → C`.
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        presentation: String,
        #[arg(long, value_enum, default_value_t = Strategy::Full)]
        strategy: Strategy,
    },
    /// Every surjection onto a finite set splits.
    Projective {
        #[arg(long)]
        size: Option<usize>,
        /// Check the total space of these fibers instead.
        #[arg(long)]
        fibers: Option<String>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum Strategy {
    Full,
    Singleton,
}

pub fn run(cmd: &SiteCommand, g: &Global) -> Result<(RunReport, Output), InputError> {
    let rec = match cmd {
        SiteCommand::Presentation { presentation } => {
            let mut rec = Recorder::new("site presentation", g.timings);
            let bound = g.bound.unwrap_or(5);
            rec.param("presentation", presentation);
            rec.param("bound", bound);
            let t = Presentation::parse(presentation)?;
            let v = is_presentation(&t, bound);
            rec.check("contains the singleton", v.contains_singleton, None);
            rec.check("closed under sums", v.sigma_closed, v.witness.as_ref().and_then(|w| witness(json!({ "base": w.0, "fibers": w.1 }))));
            rec.result(v);
            rec
        }
        SiteCommand::CheckCover { map, presentation, then, pullback_along } => {
            let mut rec = Recorder::new("site check-cover", g.timings);
            rec.param("map", map.display().to_string());
            rec.param("presentation", presentation);
            let t = Presentation::parse(presentation)?;
            let f = input::map(map)?;
            let v = is_cover(&f, &t);
            let bad = v.fiber_members.iter().position(|&m| !m);
            rec.check("every fiber is in the presentation", v.is_cover, bad.and_then(|y| witness(json!({ "point": y, "fiber_size": v.fiber_sizes[y] }))));
            let mut result = json!({ "cover": v });
            if let Some(path) = then {
                rec.param("then", path.display().to_string());
                let h = input::map(path)?;
                let c = compose_covers(&f, &h, &t)?;
                rec.check("composite is a cover", c.is_cover, None);
                result["composite"] = serde_json::to_value(c)?;
            }
            if let Some(path) = pullback_along {
                rec.param("pullback_along", path.display().to_string());
                let h = input::map(path)?;
                let (pb, c) = pullback_cover(&f, &h, &t)?;
                rec.check("pullback is a cover", c.is_cover, None);
                result["pullback"] = serde_json::to_value(pb)?;
            }
            rec.result(result);
            rec
        }
        SiteCommand::Sheaf { map, target } => {
            let mut rec = Recorder::new("site sheaf", g.timings);
            rec.param("map", map.display().to_string());
            rec.param("target", target);
            let bound = g.bound.map_or(DEFAULT_ENUMERATION_BOUND, |b| b as u128);
            let f = input::map(map)?;
            let v = set_sheaf_equalizer(*target, &f, bound)?;
            rec.check("restriction to matching families is a bijection", v.bijective, witness(&v));
            rec.result(v);
            rec
        }
        SiteCommand::LocalChoice { g: gpath, f: fpath, presentation, strategy } => {
            let mut rec = Recorder::new("site local-choice", g.timings);
            rec.param("g", gpath.display().to_string());
            rec.param("f", fpath.display().to_string());
            rec.param("presentation", presentation);
            rec.param("strategy", format!("{strategy:?}").to_lowercase());
            let t = Presentation::parse(presentation)?;
            let gm = input::map(gpath)?;
            let fm = input::map(fpath)?;
            let s = match strategy {
                Strategy::Full => ChoiceStrategy::FullFiber,
                Strategy::Singleton => ChoiceStrategy::Singleton,
            };
            let lc = local_choice(&gm, &fm, &t, &s)?;
            rec.check("square commutes", lc.commutes, None);
            rec.check("projection is a cover", lc.p_is_cover, None);
            rec.result(lc);
            rec
        }
        SiteCommand::Projective { size, fibers } => {
            let mut rec = Recorder::new("site projective", g.timings);
            let v = match (size, fibers) {
                (_, Some(text)) => {
                    let fs = input::sizes(text)?;
                    let total: usize = fs.iter().sum();
                    let bound = g.bound.unwrap_or(total + 1);
                    rec.param("fibers", &fs);
                    rec.param("bound", bound);
                    sigma_projectivity(&fs, bound)?
                }
                (Some(n), None) => {
                    let bound = g.bound.unwrap_or(n + 2);
                    rec.param("size", n);
                    rec.param("bound", bound);
                    verify_projectivity(*n, bound)?
                }
                (None, None) => return Err(InputError("give --size N or --fibers LIST".into())),
            };
            rec.check("every surjection splits", v.all_split, None);
            rec.result(v);
            rec
        }
    };
    Ok((rec.finish(), Output { lines: Vec::new() }))
}
