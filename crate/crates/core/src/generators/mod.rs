//! Deterministic test complexes.
//!
//! | kind                | dimensions | `size` means                          | simplices      |
//! |---------------------|------------|---------------------------------------|----------------|
//! | `fan`               | any        | `k` cones around an interior point, `1 <= k <= d+1` | `k`  |
//! | `closed-fan`        | 2          | `n >= 3` triangles around a vertex    | `n`            |
//! | `tri-tiling`        | 2          | rows `m` of a triangular lattice      | `m^2`          |
//! | `delaunay2d`        | 2          | `n >= 3` random points                | about `2n`     |
//! | `freudenthal`       | any        | cells per axis `m`                    | `m^d * d!`     |
//! | `path`              | any        | chain length `n`                      | `n`            |
//! | `boundary-abstract` | any        | ignored                               | `d + 2`        |
//!
//! The seed drives the random points of `delaunay2d`. For every other kind a
//! non-zero seed shuffles vertex ids and simplex order; seed 0 keeps the
//! canonical labeling.

mod delaunay;

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::geometry::{Point, Rational};

/// Upper limit on generated simplex counts.
pub const MAX_SIMPLICES: usize = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    Fan,
    ClosedFan,
    TriTiling,
    #[serde(rename = "delaunay2d")]
    Delaunay2d,
    Freudenthal,
    Path,
    BoundaryAbstract,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 7] = [
        GeneratorKind::Fan,
        GeneratorKind::ClosedFan,
        GeneratorKind::TriTiling,
        GeneratorKind::Delaunay2d,
        GeneratorKind::Freudenthal,
        GeneratorKind::Path,
        GeneratorKind::BoundaryAbstract,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::Fan => "fan",
            GeneratorKind::ClosedFan => "closed-fan",
            GeneratorKind::TriTiling => "tri-tiling",
            GeneratorKind::Delaunay2d => "delaunay2d",
            GeneratorKind::Freudenthal => "freudenthal",
            GeneratorKind::Path => "path",
            GeneratorKind::BoundaryAbstract => "boundary-abstract",
        }
    }

    /// Whether the kind exists in dimension `d`.
    pub fn supports(self, d: usize) -> bool {
        match self {
            GeneratorKind::ClosedFan | GeneratorKind::TriTiling | GeneratorKind::Delaunay2d => {
                d == 2
            }
            _ => d >= 1,
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GeneratorKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::input(format!("unknown generator kind {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub dimension: usize,
    pub size: usize,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, dimension: usize, size: usize) -> Self {
        GeneratorSpec {
            kind,
            dimension,
            size,
            seed: 0,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<Complex> {
    let d = spec.dimension;
    if !spec.kind.supports(d) {
        return Err(Error::UnsupportedDimension {
            dimension: d,
            context: format!("generator {} is not available in this dimension", spec.kind),
        });
    }
    let complex = match spec.kind {
        GeneratorKind::Fan => fan(d, spec.size)?,
        GeneratorKind::ClosedFan => closed_fan(spec.size)?,
        GeneratorKind::TriTiling => tri_tiling(spec.size)?,
        GeneratorKind::Delaunay2d => return delaunay2d(spec.size, spec.seed),
        GeneratorKind::Freudenthal => freudenthal(d, spec.size)?,
        GeneratorKind::Path => path(d, spec.size)?,
        GeneratorKind::BoundaryAbstract => boundary_abstract(d)?,
    };
    if spec.seed == 0 {
        Ok(complex)
    } else {
        relabel(&complex, spec.seed)
    }
}

fn int(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn unit(d: usize, axis: usize, scale: i64) -> Point {
    let mut c = vec![0i64; d];
    c[axis] = scale;
    Point::from_ints(&c)
}

/// The first `k` cones from the centroid of a large simplex over its facets.
/// With `k = d + 1` the cones subdivide the simplex and their dual is
/// `K_{d+1}`.
fn fan(d: usize, k: usize) -> Result<Complex> {
    if k == 0 || k > d + 1 {
        return Err(Error::input(format!(
            "fan in dimension {d} needs 1..={} simplices, got {k}",
            d + 1
        )));
    }
    let scale = i64::try_from(d + 1).map_err(|_| Error::input("dimension too large"))?;
    let mut vertices = vec![Point::from_ints(&vec![1; d]), Point::from_ints(&vec![0; d])];
    vertices.extend((0..d).map(|a| unit(d, a, scale)));
    let simplices = (0..k)
        .map(|skip| {
            std::iter::once(0)
                .chain((0..=d).filter(|&o| o != skip).map(|o| o + 1))
                .collect()
        })
        .collect();
    Ok(Complex::new(d, vertices, simplices)?.compacted())
}

/// `n` triangles around the origin, rim points on the unit circle via the
/// rational parametrization `((1 - t^2) / (1 + t^2), 2t / (1 + t^2))`.
fn closed_fan(n: usize) -> Result<Complex> {
    if n < 3 {
        return Err(Error::input(format!("closed-fan needs at least 3 triangles, got {n}")));
    }
    check_count(n)?;
    let denom = 64 * n as i64;
    let mut vertices = vec![Point::from_ints(&[0, 0])];
    for k in 0..n {
        let angle = -std::f64::consts::PI
            + 2.0 * std::f64::consts::PI * (k as f64 + 0.5) / n as f64;
        let t = ratio(((angle / 2.0).tan() * denom as f64).round() as i64, denom);
        let one = int(1);
        let t2 = &t * &t;
        let w = &one + &t2;
        vertices.push(Point::new(vec![(&one - &t2) / &w, (int(2) * &t) / &w]));
    }
    let simplices = (0..n).map(|k| vec![0, k + 1, (k + 1) % n + 1]).collect();
    Complex::new(2, vertices, simplices)
}

/// Triangular-lattice window shaped as a big triangle with `m` rows, on the
/// sheared lattice `(i + j/2, 13j/15)`.
fn tri_tiling(m: usize) -> Result<Complex> {
    if m == 0 {
        return Err(Error::input("tri-tiling needs at least one row"));
    }
    check_count(m.saturating_mul(m))?;
    // Row j holds m + 1 - j vertices.
    let id = |i: usize, j: usize| j * (m + 1) - j * j.saturating_sub(1) / 2 + i;
    let mut vertices = Vec::new();
    for j in 0..=m {
        for i in 0..=m - j {
            debug_assert_eq!(id(i, j), vertices.len());
            let (i, j) = (i as i64, j as i64);
            vertices.push(Point::new(vec![ratio(2 * i + j, 2), ratio(13 * j, 15)]));
        }
    }
    let mut simplices = Vec::with_capacity(m * m);
    for j in 0..m {
        for i in 0..m - j {
            simplices.push(vec![id(i, j), id(i + 1, j), id(i, j + 1)]);
            if i + j + 2 <= m {
                simplices.push(vec![id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)]);
            }
        }
    }
    Complex::new(2, vertices, simplices)
}

fn delaunay2d(n: usize, seed: u64) -> Result<Complex> {
    if n < 3 {
        return Err(Error::input(format!("delaunay2d needs at least 3 points, got {n}")));
    }
    check_count(2 * n)?;
    const BITS: u32 = 20;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<(i64, i64)> = Vec::with_capacity(n);
    let mut tris = Vec::new();
    // Top up after dedup until n distinct points give a 2D triangulation.
    while pts.len() < n || tris.is_empty() {
        let missing = n.saturating_sub(pts.len()).max(1);
        for _ in 0..missing {
            pts.push((rng.random_range(0..1 << BITS), rng.random_range(0..1 << BITS)));
        }
        pts.sort_unstable();
        pts.dedup();
        if pts.len() >= n {
            tris = delaunay::triangulate(&pts);
        }
    }
    let scale = 1i64 << BITS;
    let vertices = pts
        .iter()
        .map(|&(x, y)| Point::new(vec![ratio(x, scale), ratio(y, scale)]))
        .collect();
    Complex::new(2, vertices, tris.into_iter().map(|t| t.to_vec()).collect())
}

/// Kuhn/Freudenthal subdivision of `[0, m]^d`: each unit cell splits into the
/// `d!` simplices `c, c + e_p0, c + e_p0 + e_p1, ...` for permutations `p`.
fn freudenthal(d: usize, m: usize) -> Result<Complex> {
    if m == 0 {
        return Err(Error::input("freudenthal needs at least one cell per axis"));
    }
    let factorial = (1..=d).try_fold(1usize, |acc, k| acc.checked_mul(k));
    let cells = u32::try_from(d).ok().and_then(|e| m.checked_pow(e));
    let total = cells.zip(factorial).and_then(|(c, f)| c.checked_mul(f));
    check_count(total.unwrap_or(usize::MAX))?;
    let cells = cells.expect("checked");

    let side = m + 1;
    let index = |x: &[usize]| x.iter().rev().fold(0, |acc, &c| acc * side + c);
    let grid_points = side.pow(d as u32);
    let vertices = (0..grid_points)
        .map(|mut id| {
            let coords: Vec<i64> = (0..d)
                .map(|_| {
                    let c = id % side;
                    id /= side;
                    c as i64
                })
                .collect();
            Point::from_ints(&coords)
        })
        .collect();

    let perms = permutations(d);
    let mut simplices = Vec::with_capacity(cells * perms.len());
    for mut cell in 0..cells {
        let corner: Vec<usize> = (0..d)
            .map(|_| {
                let c = cell % m;
                cell /= m;
                c
            })
            .collect();
        for perm in &perms {
            let mut x = corner.clone();
            let mut ids = vec![index(&x)];
            for &axis in perm {
                x[axis] += 1;
                ids.push(index(&x));
            }
            simplices.push(ids);
        }
    }
    Complex::new(d, vertices, simplices)
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..d).collect(), &mut Vec::new(), &mut out);
    out
}

/// `n` consecutive simplices along the staircase `w_{k+1} = w_k + e_{k mod d}`;
/// each is a Freudenthal simplex, and consecutive ones share `d` vertices.
fn path(d: usize, n: usize) -> Result<Complex> {
    if n == 0 {
        return Err(Error::input("path needs at least one simplex"));
    }
    check_count(n)?;
    let mut x = vec![0i64; d];
    let mut vertices = vec![Point::from_ints(&x)];
    for k in 0..n + d - 1 {
        x[k % d] += 1;
        vertices.push(Point::from_ints(&x));
    }
    let simplices = (0..n).map(|i| (i..=i + d).collect()).collect();
    Complex::new(d, vertices, simplices)
}

/// All `d + 2` facets of a `(d+1)`-simplex, as an abstract `d`-complex with
/// coordinates `0, e_1, ..., e_d, (2, ..., 2)`. Every facet is glued twice and
/// the dual is `K_{d+2}`, so it cannot be realized in `R^d`.
fn boundary_abstract(d: usize) -> Result<Complex> {
    let mut vertices = vec![Point::from_ints(&vec![0; d])];
    vertices.extend((0..d).map(|a| unit(d, a, 1)));
    vertices.push(Point::from_ints(&vec![2; d]));
    let simplices = (0..d + 2)
        .rev()
        .map(|skip| (0..d + 2).filter(|&v| v != skip).collect())
        .collect();
    Complex::new(d, vertices, simplices)
}

fn check_count(n: usize) -> Result<()> {
    if n > MAX_SIMPLICES {
        return Err(Error::input(format!(
            "requested {n} simplices; the generator limit is {MAX_SIMPLICES}"
        )));
    }
    Ok(())
}

/// Shuffles vertex ids and simplex order deterministically from `seed`.
fn relabel(c: &Complex, seed: u64) -> Result<Complex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vertex_perm: Vec<usize> = (0..c.vertices().len()).collect();
    vertex_perm.shuffle(&mut rng);
    let mut vertices = vec![Point::new(Vec::new()); c.vertices().len()];
    for (old, &new) in vertex_perm.iter().enumerate() {
        vertices[new] = c.vertex(old).clone();
    }
    let mut order: Vec<usize> = (0..c.len()).collect();
    order.shuffle(&mut rng);
    let simplices = order
        .iter()
        .map(|&i| c.simplex(i).ids().iter().map(|&v| vertex_perm[v]).collect())
        .collect();
    Complex::new(c.dimension(), vertices, simplices)
}
