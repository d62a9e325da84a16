//! Parsing of lattice, ring, map and complex arguments.

use std::fmt;
use std::path::Path;

use finsite_core::join::SimplicialComplex;
use finsite_core::lattice::Lattice;
use finsite_core::site::FiniteMap;
use finsite_core::{free_bounded_distributive_lattice, FiniteRing};

/// Any problem with the command line or its input files; exits with code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for InputError {
    fn from(e: E) -> InputError {
        InputError(e.to_string())
    }
}

pub fn bail<T>(msg: impl Into<String>) -> Result<T, InputError> {
    Err(InputError(msg.into()))
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// `fd:N`, `chain:N`, `boolean:K`, or a path to lattice JSON.
pub fn lattice(spec: &str) -> Result<Lattice, InputError> {
    let number = |s: &str| s.parse::<usize>().map_err(|_| InputError(format!("bad lattice size in `{spec}`")));
    if let Some(n) = spec.strip_prefix("fd:") {
        return Ok(free_bounded_distributive_lattice(number(n)?)?);
    }
    if let Some(n) = spec.strip_prefix("chain:") {
        let n = number(n)?;
        if n == 0 {
            return bail("a chain needs at least one element");
        }
        return Ok(Lattice::chain(n));
    }
    if let Some(k) = spec.strip_prefix("boolean:") {
        let k = number(k)?;
        if k > 8 {
            return bail("boolean lattices are limited to 8 atoms");
        }
        return Ok(Lattice::boolean(k as u32));
    }
    Ok(Lattice::from_json(&read(Path::new(spec))?)?)
}

/// Resolves `--gens` / `--lattice` into a lattice and a display id.
pub fn lattice_arg(gens: Option<usize>, spec: Option<&str>) -> Result<(Lattice, String), InputError> {
    match (gens, spec) {
        (Some(n), None) => Ok((free_bounded_distributive_lattice(n)?, format!("FD({n})"))),
        (None, Some(s)) => Ok((lattice(s)?, s.to_string())),
        (None, None) => bail("give --gens N or --lattice SPEC"),
        (Some(_), Some(_)) => bail("--gens and --lattice are exclusive"),
    }
}

/// An element by label or index.
pub fn element(l: &Lattice, token: &str) -> Result<usize, InputError> {
    let token = token.trim();
    if let Some(x) = l.element(token) {
        return Ok(x);
    }
    match token.parse::<usize>() {
        Ok(x) if x < l.size() => Ok(x),
        _ => bail(format!("no lattice element `{token}`")),
    }
}

/// `a,b` as a pair of elements.
pub fn element_pair(l: &Lattice, text: &str) -> Result<(usize, usize), InputError> {
    let Some((a, b)) = text.split_once(',') else {
        return bail(format!("expected `a,b`, got `{text}`"));
    };
    Ok((element(l, a)?, element(l, b)?))
}

/// `a<=b` constraints separated by `;`.
pub fn constraints(l: &Lattice, text: &str) -> Result<Vec<(usize, usize)>, InputError> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|c| match c.split_once("<=") {
            Some((a, b)) => Ok((element(l, a)?, element(l, b)?)),
            None => bail(format!("expected `a<=b`, got `{c}`")),
        })
        .collect()
}

/// Comma-separated ring elements, by label or integer image.
pub fn ring_elements(r: &FiniteRing, text: &str) -> Result<Vec<usize>, InputError> {
    top_level_split(text).into_iter().map(|t| ring_element(r, t)).collect()
}

/// Splits on commas outside parentheses, so `(1,0),(0,1)` has two parts.
fn top_level_split(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

pub fn ring_element(r: &FiniteRing, token: &str) -> Result<usize, InputError> {
    let token = token.trim();
    if let Some(x) = r.element(token) {
        return Ok(x);
    }
    match token.parse::<u64>() {
        Ok(k) => Ok(r.from_integer(k)),
        Err(_) => bail(format!("no ring element `{token}`")),
    }
}

pub fn map(path: &Path) -> Result<FiniteMap, InputError> {
    let f: FiniteMap = serde_json::from_str(&read(path)?)?;
    f.validate()?;
    Ok(f)
}

pub fn complex(path: &Path) -> Result<SimplicialComplex, InputError> {
    Ok(serde_json::from_str(&read(path)?)?)
}

/// Comma-separated cardinalities.
pub fn sizes(text: &str) -> Result<Vec<usize>, InputError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<usize>().map_err(|_| InputError(format!("bad size `{s}`"))))
        .collect()
}
