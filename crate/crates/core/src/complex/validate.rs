use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use super::{Complex, Facet};
use crate::geometry::{self, dot, Point, Rational, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValidationLevel {
    /// Gluing invariants plus per-simplex non-degeneracy.
    Combinatorial,
    /// Additionally checks pairwise interior-disjointness (d <= 3).
    GeometricStrict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    DegenerateSimplex { simplex: usize },
    OversharedFacet { facet: Facet, simplices: Vec<usize> },
    DuplicateSimplex { first: usize, second: usize },
    CoincidentVertices { first: usize, second: usize },
    IsolatedVertex { vertex: usize },
    InteriorOverlap { first: usize, second: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub level: ValidationLevel,
    pub violations: Vec<Violation>,
    /// Set when geometric-strict was requested for `d > 3`, where the overlap
    /// check is not performed.
    pub overlap_check_skipped: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Violations that are part of the combinatorial level.
    pub fn combinatorial_violations(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| !matches!(v, Violation::InteriorOverlap { .. }))
    }
}

/// Checks every complex invariant at the requested level and lists each
/// violation with the offending indices. Never fails.
pub fn validate(c: &Complex, level: ValidationLevel) -> ValidationReport {
    let mut violations = Vec::new();
    let d = c.dimension();

    let mut degenerate = vec![false; c.len()];
    for (i, flag) in degenerate.iter_mut().enumerate() {
        let pts = c.simplex_points(i);
        if geometry::orientation(&pts, d).map_or(true, |s| s == Sign::Zero) {
            *flag = true;
            violations.push(Violation::DegenerateSimplex { simplex: i });
        }
    }

    let mut overshared: Vec<(Facet, Vec<usize>)> = c
        .facet_incidence()
        .into_iter()
        .filter(|(_, s)| s.len() > 2)
        .collect();
    overshared.sort();
    violations.extend(
        overshared
            .into_iter()
            .map(|(facet, simplices)| Violation::OversharedFacet { facet, simplices }),
    );

    let mut first_seen: HashMap<&[usize], usize> = HashMap::new();
    for (i, s) in c.simplices().iter().enumerate() {
        if let Some(&first) = first_seen.get(s.ids()) {
            violations.push(Violation::DuplicateSimplex { first, second: i });
        } else {
            first_seen.insert(s.ids(), i);
        }
    }

    let mut by_coords: HashMap<&Point, usize> = HashMap::new();
    for (i, p) in c.vertices().iter().enumerate() {
        if let Some(&first) = by_coords.get(p) {
            violations.push(Violation::CoincidentVertices { first, second: i });
        } else {
            by_coords.insert(p, i);
        }
    }

    let mut used = vec![false; c.vertices().len()];
    for s in c.simplices() {
        for &v in s.ids() {
            used[v] = true;
        }
    }
    violations.extend(
        used.iter()
            .enumerate()
            .filter(|(_, &u)| !u)
            .map(|(vertex, _)| Violation::IsolatedVertex { vertex }),
    );

    let mut overlap_check_skipped = false;
    if level == ValidationLevel::GeometricStrict {
        if d <= 3 {
            violations.extend(
                overlapping_pairs(c, &degenerate)
                    .into_iter()
                    .map(|(first, second)| Violation::InteriorOverlap { first, second }),
            );
        } else {
            overlap_check_skipped = true;
        }
    }

    ValidationReport {
        level,
        violations,
        overlap_check_skipped,
    }
}

/// Pairs of non-degenerate simplices whose interiors intersect, found by a
/// sweep over bounding boxes followed by an exact separating-axis test.
fn overlapping_pairs(c: &Complex, degenerate: &[bool]) -> Vec<(usize, usize)> {
    let d = c.dimension();
    let boxes: Vec<(Vec<Rational>, Vec<Rational>)> = (0..c.len())
        .map(|i| {
            let pts = c.simplex_points(i);
            (0..d)
                .map(|k| {
                    let lo = pts.iter().map(|p| &p.coords()[k]).min().unwrap().clone();
                    let hi = pts.iter().map(|p| &p.coords()[k]).max().unwrap().clone();
                    (lo, hi)
                })
                .unzip()
        })
        .collect();
    let mut order: Vec<usize> = (0..c.len()).filter(|&i| !degenerate[i]).collect();
    order.sort_by(|&a, &b| boxes[a].0[0].cmp(&boxes[b].0[0]).then(a.cmp(&b)));

    let mut pairs = Vec::new();
    for (pos, &a) in order.iter().enumerate() {
        for &b in &order[pos + 1..] {
            if boxes[b].0[0] >= boxes[a].1[0] {
                break;
            }
            let boxes_overlap =
                (1..d).all(|k| boxes[a].0[k] < boxes[b].1[k] && boxes[b].0[k] < boxes[a].1[k]);
            if !boxes_overlap || c.simplex(a) == c.simplex(b) {
                continue;
            }
            if interiors_intersect(&c.simplex_points(a), &c.simplex_points(b), d) {
                pairs.push((a.min(b), a.max(b)));
            }
        }
    }
    pairs.sort_unstable();
    pairs
}

/// Exact interior-intersection test for two non-degenerate d-simplices,
/// d <= 3. Interiors are disjoint iff some axis weakly separates the closed
/// simplices; for polytopes it suffices to try facet normals of both and, in
/// 3D, cross products of edge pairs.
pub(crate) fn interiors_intersect(a: &[&Point], b: &[&Point], d: usize) -> bool {
    !candidate_axes(a, b, d).iter().any(|axis| weakly_separates(axis, a, b))
}

fn candidate_axes(a: &[&Point], b: &[&Point], d: usize) -> Vec<Vec<Rational>> {
    let mut axes = Vec::new();
    match d {
        1 => axes.push(vec![Rational::from_integer(1.into())]),
        2 => {
            for s in [a, b] {
                for i in 0..3 {
                    let j = (i + 1) % 3;
                    let e = geometry_sub(s[j], s[i]);
                    axes.push(vec![-e[1].clone(), e[0].clone()]);
                }
            }
        }
        3 => {
            let edges = |s: &[&Point]| -> Vec<Vec<Rational>> {
                let mut out = Vec::new();
                for i in 0..4 {
                    for j in i + 1..4 {
                        out.push(geometry_sub(s[j], s[i]));
                    }
                }
                out
            };
            for s in [a, b] {
                for skip in 0..4 {
                    let f: Vec<&Point> = (0..4).filter(|&k| k != skip).map(|k| s[k]).collect();
                    axes.push(cross(&geometry_sub(f[1], f[0]), &geometry_sub(f[2], f[0])));
                }
            }
            for ea in edges(a) {
                for eb in edges(b) {
                    axes.push(cross(&ea, &eb));
                }
            }
        }
        _ => unreachable!("overlap test is limited to d <= 3"),
    }
    axes.retain(|n| n.iter().any(|x| !x.is_zero()));
    axes
}

fn weakly_separates(axis: &[Rational], a: &[&Point], b: &[&Point]) -> bool {
    let proj = |s: &[&Point]| -> (Rational, Rational) {
        let vals: Vec<Rational> = s.iter().map(|p| dot(axis, p.coords())).collect();
        (
            vals.iter().min().unwrap().clone(),
            vals.iter().max().unwrap().clone(),
        )
    };
    let (amin, amax) = proj(a);
    let (bmin, bmax) = proj(b);
    amax <= bmin || bmax <= amin
}

fn geometry_sub(p: &Point, q: &Point) -> Vec<Rational> {
    p.coords().iter().zip(q.coords()).map(|(x, y)| x - y).collect()
}

fn cross(u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    vec![
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}
