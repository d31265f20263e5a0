//! Complex and coloring files.
//!
//! JSON is canonical: coordinates are written as `"p/q"` (or `"p"`) strings so
//! a save/load cycle is exact. Integers, decimal strings and JSON floats are
//! accepted on input and converted exactly. OFF is supported for planar
//! triangle meshes only.

use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{Coloring, Complex};
use crate::error::{Error, Result};
use crate::geometry::{format_rational, parse_rational, Point, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Off,
}

impl Format {
    /// `.off` means OFF; anything else is JSON.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("off") => Format::Off,
            _ => Format::Json,
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoordValue {
    Int(i64),
    Float(f64),
    Text(String),
}

#[derive(Deserialize)]
struct ComplexIn {
    dimension: usize,
    vertices: Vec<Vec<CoordValue>>,
    simplices: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct ComplexOut<'a> {
    dimension: usize,
    vertices: Vec<Vec<String>>,
    simplices: Vec<&'a [usize]>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

pub fn from_json_str(text: &str) -> Result<Complex> {
    let raw: ComplexIn = serde_json::from_str(text).map_err(json_error)?;
    let vertices = raw
        .vertices
        .into_iter()
        .enumerate()
        .map(|(i, coords)| {
            coords
                .into_iter()
                .enumerate()
                .map(|(k, c)| {
                    let value = match c {
                        CoordValue::Int(n) => Ok(Rational::from_integer(n.into())),
                        CoordValue::Float(f) => {
                            Rational::from_float(f).ok_or_else(|| format!("non-finite value {f}"))
                        }
                        CoordValue::Text(s) => parse_rational(&s),
                    };
                    value.map_err(|m| Error::input(format!("vertex {i}, coordinate {k}: {m}")))
                })
                .collect::<Result<Vec<_>>>()
                .map(Point::new)
        })
        .collect::<Result<Vec<_>>>()?;
    Complex::new(raw.dimension, vertices, raw.simplices)
}

pub fn to_json_string(c: &Complex) -> String {
    let out = ComplexOut {
        dimension: c.dimension(),
        vertices: c
            .vertices()
            .iter()
            .map(|p| p.coords().iter().map(format_rational).collect())
            .collect(),
        simplices: c.simplices().iter().map(|s| s.ids()).collect(),
    };
    serde_json::to_string(&out).expect("complex serializes")
}

fn off_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses an OFF file holding a planar triangle mesh. A third coordinate, if
/// present, must be zero; faces must be triangles.
pub fn from_off_str(text: &str) -> Result<Complex> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let eof = || off_error(text.lines().count().max(1), 1, "unexpected end of file");

    let (ln, first) = lines.next().ok_or_else(eof)?;
    let mut header = first.split_whitespace();
    let magic = header.next().unwrap_or_default();
    if magic != "OFF" {
        let why = if magic.ends_with("OFF") {
            format!("unsupported OFF variant {magic:?}; only planar triangle meshes are accepted")
        } else {
            format!("expected OFF header, found {magic:?}")
        };
        return Err(off_error(ln, 1, why));
    }
    let mut counts: Vec<(usize, String)> = header.map(|t| (ln, t.to_string())).collect();
    while counts.len() < 3 {
        let (ln, l) = lines.next().ok_or_else(eof)?;
        counts.extend(l.split_whitespace().map(|t| (ln, t.to_string())));
    }
    if counts.len() != 3 {
        return Err(off_error(counts[3].0, 1, "expected exactly three counts after OFF"));
    }
    let count = |k: usize, what: &str| -> Result<usize> {
        let (ln, t) = &counts[k];
        t.parse::<usize>()
            .map_err(|_| off_error(*ln, 1, format!("bad {what} count {t:?}")))
    };
    let nv = count(0, "vertex")?;
    let nf = count(1, "face")?;
    count(2, "edge")?;

    let mut vertices = Vec::with_capacity(nv);
    for i in 0..nv {
        let (ln, l) = lines.next().ok_or_else(eof)?;
        let parts: Vec<&str> = l.split_whitespace().collect();
        if parts.len() != 2 && parts.len() != 3 {
            return Err(off_error(
                ln,
                1,
                format!("vertex {i}: expected 2 or 3 coordinates, found {}", parts.len()),
            ));
        }
        let coords = parts
            .iter()
            .map(|t| parse_rational(t).map_err(|m| off_error(ln, 1, format!("vertex {i}: {m}"))))
            .collect::<Result<Vec<_>>>()?;
        if coords.len() == 3 && !coords[2].is_zero() {
            return Err(off_error(
                ln,
                1,
                format!("vertex {i} has non-zero z; only planar meshes are accepted"),
            ));
        }
        vertices.push(Point::new(coords[..2].to_vec()));
    }
    let mut simplices = Vec::with_capacity(nf);
    for i in 0..nf {
        let (ln, l) = lines.next().ok_or_else(eof)?;
        let parts: Vec<&str> = l.split_whitespace().collect();
        let arity: usize = parts[0]
            .parse()
            .map_err(|_| off_error(ln, 1, format!("face {i}: bad vertex count")))?;
        if arity != 3 {
            return Err(off_error(
                ln,
                1,
                format!("face {i} has {arity} vertices; only triangles are accepted"),
            ));
        }
        if parts.len() < 4 {
            return Err(off_error(ln, 1, format!("face {i}: missing vertex indices")));
        }
        let ids = parts[1..4]
            .iter()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| off_error(ln, 1, format!("face {i}: bad vertex index {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        simplices.push(ids);
    }
    Complex::new(2, vertices, simplices)
}

/// Exact decimal if the denominator divides a power of ten, else `p/q`.
fn off_number(x: &Rational) -> String {
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let mut den = x.denom().clone();
    let (mut twos, mut fives) = (0u32, 0u32);
    while den.is_even() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return format_rational(x);
    }
    let places = twos.max(fives) as usize;
    if places == 0 {
        return x.numer().to_string();
    }
    let scaled = (x * Rational::from_integer(BigInt::from(10).pow(places as u32))).to_integer();
    let negative = scaled < BigInt::zero();
    let digits = if negative { -scaled } else { scaled }.to_string();
    let digits = format!("{digits:0>width$}", width = places + 1);
    let (int_part, frac_part) = digits.split_at(digits.len() - places);
    format!("{}{int_part}.{frac_part}", if negative { "-" } else { "" })
}

pub fn to_off_string(c: &Complex) -> Result<String> {
    if c.dimension() != 2 {
        return Err(Error::UnsupportedDimension {
            dimension: c.dimension(),
            context: "OFF output is limited to planar triangle meshes".into(),
        });
    }
    let mut out = format!("OFF\n{} {} 0\n", c.vertices().len(), c.len());
    for p in c.vertices() {
        out.push_str(&format!(
            "{} {} 0\n",
            off_number(&p.coords()[0]),
            off_number(&p.coords()[1])
        ));
    }
    for s in c.simplices() {
        let ids = s.ids();
        out.push_str(&format!("3 {} {} {}\n", ids[0], ids[1], ids[2]));
    }
    Ok(out)
}

pub fn load(path: &Path, format: Format) -> Result<Complex> {
    let text = fs::read_to_string(path)?;
    match format {
        Format::Json => from_json_str(&text),
        Format::Off => from_off_str(&text),
    }
}

pub fn save(c: &Complex, path: &Path, format: Format) -> Result<()> {
    let text = match format {
        Format::Json => to_json_string(c),
        Format::Off => to_off_string(c)?,
    };
    fs::write(path, text)?;
    Ok(())
}

pub fn coloring_from_json(text: &str) -> Result<Coloring> {
    serde_json::from_str(text).map_err(json_error)
}

pub fn coloring_to_json(col: &Coloring) -> String {
    serde_json::to_string(col).expect("coloring serializes")
}

pub fn load_coloring(path: &Path) -> Result<Coloring> {
    coloring_from_json(&fs::read_to_string(path)?)
}

pub fn save_coloring(col: &Coloring, path: &Path) -> Result<()> {
    fs::write(path, coloring_to_json(col))?;
    Ok(())
}
