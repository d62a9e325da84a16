use clap::{Args, Subcommand};
use serde::Serialize;
use serde_json::json;

use finsite_core::congruence::{congruence_closure, gratzer_criterion, is_zero_quotient, principal_eq_meet_join, quotient};
use finsite_core::lattice::Lattice;
use finsite_core::simplicial::{all_orientations, chain_quotients, check_simplicial_equalizer, Orientation};
use finsite_core::free_bounded_distributive_lattice;

use crate::input::{self, bail, InputError};
use crate::report::{witness, Recorder, RunReport};
use crate::{Global, Output};

#[derive(Subcommand, Debug)]
pub enum LatticeCommand {
    /// Free bounded distributive lattice on N generators.
    Free {
        #[arg(long)]
        gens: usize,
    },
    /// Validate lattice JSON.
    Validate {
        #[arg(long)]
        lattice: String,
    },
    /// Congruence generated by pairs, checked against the meet/join criterion.
    Congruence {
        #[command(flatten)]
        source: LatticeSource,
        /// Generating pair `a,b` (labels or indices); repeatable.
        #[arg(long = "pair", required = true)]
        pairs: Vec<String>,
    },
    /// Two-piece equalizer check for every pair, or for one pair.
    SimplicialCheck {
        #[command(flatten)]
        source: LatticeSource,
        #[arg(long)]
        pair: Option<String>,
    },
    /// Quotients by every orientation of a list of order constraints.
    Chain {
        #[command(flatten)]
        source: LatticeSource,
        /// Constraints `a<=b;c<=d;...`, at most three.
        #[arg(long)]
        constraints: String,
    },
}

#[derive(Args, Debug)]
pub struct LatticeSource {
    /// Use the free lattice on N generators.
    #[arg(long)]
    gens: Option<usize>,
    /// `fd:N`, `chain:N`, `boolean:K` or a JSON path.
    #[arg(long)]
    lattice: Option<String>,
}

impl LatticeSource {
    fn load(&self) -> Result<(Lattice, String), InputError> {
        input::lattice_arg(self.gens, self.lattice.as_deref())
    }
}

/// Largest lattice swept pair-by-pair unless `--bound` allows more.
const DEFAULT_SWEEP_BOUND: usize = 20;

pub fn run(cmd: &LatticeCommand, g: &Global) -> Result<(RunReport, Output), InputError> {
    let mut lines = Vec::new();
    let rec = match cmd {
        LatticeCommand::Free { gens } => free(*gens, g)?,
        LatticeCommand::Validate { lattice } => {
            let mut rec = Recorder::new("lattice validate", g.timings);
            rec.param("lattice", lattice);
            let l = input::lattice(lattice)?;
            rec.check("bounded distributive lattice", true, None);
            rec.result(json!({ "size": l.size() }));
            rec
        }
        LatticeCommand::Congruence { source, pairs } => congruence(source, pairs, g)?,
        LatticeCommand::SimplicialCheck { source, pair } => simplicial(source, pair.as_deref(), g, &mut lines)?,
        LatticeCommand::Chain { source, constraints } => chain(source, constraints, g)?,
    };
    Ok((rec.finish(), Output { lines }))
}

/// Monotone functions `2ⁿ → 2`, counted by scanning truth tables.
pub(crate) fn monotone_count(n: usize) -> u64 {
    let points = 1usize << n;
    (0u64..1 << points)
        .filter(|&t| (0..points).all(|x| (0..points).all(|y| x & y != x || t >> x & 1 <= t >> y & 1)))
        .count() as u64
}

fn free(gens: usize, g: &Global) -> Result<Recorder, InputError> {
    let mut rec = Recorder::new("lattice free", g.timings);
    rec.param("gens", gens);
    let l = free_bounded_distributive_lattice(gens)?;
    let count = monotone_count(gens);
    rec.check("size equals the monotone Boolean function count", l.size() as u64 == count, witness(json!({ "size": l.size(), "count": count })));
    rec.result(json!({ "size": l.size(), "lattice": l.to_raw() }));
    Ok(rec)
}

#[derive(Serialize)]
struct CongruenceResult {
    classes: Vec<usize>,
    class_count: usize,
    blocks: Vec<Vec<String>>,
    zero_quotient: bool,
    quotient: finsite_core::RawLattice,
}

fn congruence(source: &LatticeSource, pairs: &[String], g: &Global) -> Result<Recorder, InputError> {
    let (l, id) = source.load()?;
    let mut rec = Recorder::new("lattice congruence", g.timings);
    rec.param("lattice", &id);
    rec.param("pairs", pairs);
    let pairs = pairs.iter().map(|p| input::element_pair(&l, p)).collect::<Result<Vec<_>, _>>()?;
    let theta = congruence_closure(&l, &pairs);
    for &(a, b) in &pairs {
        rec.check(
            format!("({} = {}) equals ({} = {})", l.label(a), l.label(b), l.label(l.meet(a, b)), l.label(l.join(a, b))),
            principal_eq_meet_join(&l, a, b),
            None,
        );
    }
    if let [(a, b)] = pairs[..] {
        let (lo, hi) = (l.meet(a, b), l.join(a, b));
        let n = l.size();
        let mismatch = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| gratzer_criterion(&l, lo, hi, x, y).expect("lo ≤ hi") != theta.related(x, y));
        rec.check("meet/join criterion agrees with closure", mismatch.is_none(), mismatch.and_then(witness));
    }
    let zero_quotient = match pairs[..] {
        [(a, b)] => is_zero_quotient(&l, a, b),
        _ => theta.class_count() == 1,
    };
    let q = quotient(&l, &theta);
    rec.result(CongruenceResult {
        classes: theta.classes().to_vec(),
        class_count: theta.class_count(),
        blocks: theta.blocks().iter().map(|b| b.iter().map(|&x| l.label(x)).collect()).collect(),
        zero_quotient,
        quotient: q.lattice.to_raw(),
    });
    Ok(rec)
}

fn simplicial(source: &LatticeSource, pair: Option<&str>, g: &Global, lines: &mut Vec<String>) -> Result<Recorder, InputError> {
    let (l, id) = source.load()?;
    let mut rec = Recorder::new("lattice simplicial-check", g.timings);
    rec.param("lattice", &id);
    let pairs: Vec<(usize, usize)> = match pair {
        Some(p) => vec![input::element_pair(&l, p)?],
        None => {
            let bound = g.bound.unwrap_or(DEFAULT_SWEEP_BOUND);
            rec.param("bound", bound);
            if l.size() > bound {
                return bail(format!("lattice has {} elements; raise --bound to sweep all pairs", l.size()));
            }
            (0..l.size()).flat_map(|i| (0..l.size()).map(move |j| (i, j))).collect()
        }
    };
    let mut failures = Vec::new();
    let mut count = 0usize;
    rec.timed("every pair has a bijective equalizer and matching amalgam", || {
        for &(i, j) in &pairs {
            let report = check_simplicial_equalizer(&l, &id, i, j);
            if !report.passed() {
                failures.push((i, j));
            }
            count += 1;
            lines.push(serde_json::to_string(&report).expect("reports serialize"));
        }
        (failures.is_empty(), failures.first().and_then(witness), ())
    });
    rec.result(json!({ "pairs": count, "failed": failures.len() }));
    Ok(rec)
}

fn chain(source: &LatticeSource, constraints: &str, g: &Global) -> Result<Recorder, InputError> {
    let (l, id) = source.load()?;
    let mut rec = Recorder::new("lattice chain", g.timings);
    rec.param("lattice", &id);
    rec.param("constraints", constraints);
    let cs = input::constraints(&l, constraints)?;
    if cs.len() > 3 {
        return bail("at most three constraints");
    }
    let orientations = all_orientations(cs.len());
    let mut sizes = Vec::new();
    let mut projections = Vec::new();
    for signs in &orientations {
        let q = chain_quotients(&l, &cs, signs)?;
        let name: String = signs.iter().map(|s| if *s == Orientation::Forward { '+' } else { '-' }).collect();
        sizes.push(json!({ "signs": name, "size": q.lattice.size() }));
        projections.push(q.projection);
    }
    let mut images: Vec<Vec<usize>> = (0..l.size()).map(|x| projections.iter().map(|p| p[x]).collect()).collect();
    images.sort();
    images.dedup();
    rec.check("all orientations are jointly injective", images.len() == l.size(), witness(json!({ "distinct_images": images.len() })));
    rec.result(json!({ "quotients": sizes }));
    Ok(rec)
}
