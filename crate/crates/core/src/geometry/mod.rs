//! Exact geometric kernel.
//!
//! Every predicate works on [`Rational`] coordinates and returns an exact
//! [`Sign`]; there are no tolerances anywhere.

mod linalg;
mod lp;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use linalg::{determinant, dot, null_vector, rank};
pub use lp::cone_separator;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(x: &Rational) -> Sign {
        if x.is_zero() {
            Sign::Zero
        } else if x.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// A point of `R^d` with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn scaled(&self, factor: &Rational) -> Point {
        Point(self.0.iter().map(|x| x * factor).collect())
    }

    /// Lexicographic comparison of coordinates.
    pub fn lex_cmp(&self, other: &Point) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(x))?;
        }
        write!(f, ")")
    }
}

/// The hyperplane `{x : normal . x = offset}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    normal: Vec<Rational>,
    offset: Rational,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Result<Self> {
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::input("hyperplane normal must be non-zero"));
        }
        Ok(Hyperplane { normal, offset })
    }

    /// The hyperplane through `d` affinely independent points of `R^d`.
    pub fn through(points: &[&Point]) -> Result<Self> {
        let dim = points.first().map(|p| p.dim()).unwrap_or(0);
        if dim == 0 || points.len() != dim {
            return Err(Error::input(format!(
                "a hyperplane in R^{dim} needs exactly {dim} points, got {}",
                points.len()
            )));
        }
        check_dims(points.iter().copied(), dim)?;
        let base = points[0].coords();
        let dirs: Vec<Vec<Rational>> = points[1..]
            .iter()
            .map(|p| linalg::sub(p.coords(), base))
            .collect();
        if linalg::rank(&dirs, dim) != dim - 1 {
            return Err(Error::input("points are affinely dependent"));
        }
        let normal = linalg::null_vector(&dirs, dim)
            .ok_or_else(|| Error::Invariant("no normal for a rank-deficient system".into()))?;
        let offset = linalg::dot(&normal, base);
        Ok(Hyperplane { normal, offset })
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }
}

fn check_dims<'a>(points: impl IntoIterator<Item = &'a Point>, dim: usize) -> Result<()> {
    for p in points {
        if p.dim() != dim {
            return Err(Error::input(format!(
                "point {p} has dimension {}, expected {dim}",
                p.dim()
            )));
        }
    }
    Ok(())
}

/// Orientation of `dim + 1` points in `R^dim`: the sign of
/// `det[p_1 - p_0, ..., p_dim - p_0]`. Zero iff the points are affinely
/// dependent.
pub fn orientation(points: &[&Point], dim: usize) -> Result<Sign> {
    Ok(Sign::of(&signed_volume_factor(points, dim)?))
}

/// `d!` times the signed volume of the simplex spanned by `points`.
pub fn signed_volume_factor(points: &[&Point], dim: usize) -> Result<Rational> {
    if points.len() != dim + 1 {
        return Err(Error::input(format!(
            "orientation in R^{dim} needs {} points, got {}",
            dim + 1,
            points.len()
        )));
    }
    check_dims(points.iter().copied(), dim)?;
    let base = points[0].coords();
    let rows: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| linalg::sub(p.coords(), base))
        .collect();
    Ok(linalg::determinant(&rows))
}

/// Sign of `normal . p - offset`.
pub fn side_of(h: &Hyperplane, p: &Point) -> Result<Sign> {
    if h.dim() != p.dim() {
        return Err(Error::input(format!(
            "hyperplane in R^{} cannot classify point {p}",
            h.dim()
        )));
    }
    Ok(Sign::of(&(linalg::dot(&h.normal, p.coords()) - &h.offset)))
}

/// Finds a hyperplane containing every vertex of `face` with all of `cloud`
/// in its closed negative side (`side_of <= 0`), or `None` if the face meets
/// the interior of the convex hull of `cloud`.
///
/// The equality constraints on the face are encoded as pairs of opposite
/// inequalities, reducing the question to whether a finite set of directions
/// positively spans `R^d` (see [`cone_separator`]). Degenerate clouds always
/// admit a hyperplane containing their whole affine hull.
pub fn supporting_hyperplane(face: &[&Point], cloud: &[&Point]) -> Result<Option<Hyperplane>> {
    let Some(first) = cloud.first() else {
        return Err(Error::input("supporting_hyperplane: empty point cloud"));
    };
    let dim = first.dim();
    let Some(base) = face.first() else {
        return Err(Error::input("supporting_hyperplane: empty face"));
    };
    check_dims(cloud.iter().copied(), dim)?;
    check_dims(face.iter().copied(), dim)?;

    let base = base.coords();
    let spans: Vec<Vec<Rational>> = face
        .iter()
        .skip(1)
        .map(|q| linalg::sub(q.coords(), base))
        .filter(|w| w.iter().any(|x| !x.is_zero()))
        .collect();

    // A face spanning a hyperplane has only that hyperplane as a candidate.
    if dim >= 1 && linalg::rank(&spans, dim) == dim - 1 {
        let normal = linalg::null_vector(&spans, dim)
            .ok_or_else(|| Error::Invariant("no normal for a rank-deficient system".into()))?;
        let offset = linalg::dot(&normal, base);
        let (mut below, mut above) = (false, false);
        for q in cloud {
            match Sign::of(&(linalg::dot(&normal, q.coords()) - &offset)) {
                Sign::Negative => below = true,
                Sign::Positive => above = true,
                Sign::Zero => {}
            }
            if below && above {
                return Ok(None);
            }
        }
        let h = if above {
            Hyperplane {
                normal: normal.iter().map(|x| -x).collect(),
                offset: -offset,
            }
        } else {
            Hyperplane { normal, offset }
        };
        return Ok(Some(h));
    }

    let mut directions: Vec<Vec<Rational>> = Vec::with_capacity(cloud.len() + 2 * spans.len());
    for w in spans {
        directions.push(w.iter().map(|x| -x).collect());
        directions.push(w);
    }
    for q in cloud {
        let u = linalg::sub(q.coords(), base);
        if u.iter().any(|x| !x.is_zero()) {
            directions.push(u);
        }
    }
    Ok(lp::cone_separator(&directions, dim).map(|normal| {
        let offset = linalg::dot(&normal, base);
        Hyperplane { normal, offset }
    }))
}

/// Index of the lexicographically smallest point (lowest index on ties),
/// which is always a vertex of the convex hull.
pub fn extreme_point(cloud: &[&Point]) -> Result<usize> {
    cloud
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.lex_cmp(b))
        .map(|(i, _)| i)
        .ok_or_else(|| Error::input("extreme_point: empty point cloud"))
}

/// Parses `"p"`, `"p/q"` or a decimal such as `"-1.25e-3"` exactly.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let d: BigInt = d
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in {s:?}"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (
            &s[..i],
            s[i + 1..]
                .parse::<i32>()
                .map_err(|_| format!("bad exponent in {s:?}"))?,
        ),
        None => (s, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("not a number: {s:?}"));
    }
    let negative = int_part.starts_with('-');
    let digits = format!("{}{}", int_part.trim_start_matches(['-', '+']), frac_part);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("not a number: {s:?}"));
    }
    let mut value = Rational::from_integer(digits.parse::<BigInt>().map_err(|e| e.to_string())?);
    let shift = exp - frac_part.len() as i32;
    let ten = Rational::from_integer(10.into());
    value *= ten.pow(shift);
    Ok(if negative { -value } else { value })
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Nearest `f64`, for display only.
pub fn to_f64(x: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
}
