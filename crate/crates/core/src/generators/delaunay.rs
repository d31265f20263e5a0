//! Exact planar Delaunay triangulation of integer points: a left-to-right
//! sweep builds some triangulation of the hull, then Lawson flips make every
//! interior edge locally Delaunay. Coordinates are bounded so that the
//! in-circle determinant fits in `i128`.

use std::collections::HashMap;

/// Coordinates must lie in `[0, COORD_LIMIT)`.
pub const COORD_LIMIT: i64 = 1 << 24;

type P = (i64, i64);

fn orient(a: P, b: P, c: P) -> i128 {
    let (abx, aby) = ((b.0 - a.0) as i128, (b.1 - a.1) as i128);
    let (acx, acy) = ((c.0 - a.0) as i128, (c.1 - a.1) as i128);
    abx * acy - aby * acx
}

/// Positive iff `d` lies strictly inside the circle through the
/// counter-clockwise triangle `a, b, c`.
fn in_circle(a: P, b: P, c: P, d: P) -> i128 {
    let row = |p: P| {
        let x = (p.0 - d.0) as i128;
        let y = (p.1 - d.1) as i128;
        (x, y, x * x + y * y)
    };
    let (ax, ay, a2) = row(a);
    let (bx, by, b2) = row(b);
    let (cx, cy, c2) = row(c);
    ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) + a2 * (bx * cy - by * cx)
}

/// Triangulates distinct points given in lexicographic order. Returns
/// counter-clockwise index triples; empty if all points are collinear.
pub fn triangulate(points: &[P]) -> Vec<[usize; 3]> {
    debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
    debug_assert!(points
        .iter()
        .all(|p| (0..COORD_LIMIT).contains(&p.0) && (0..COORD_LIMIT).contains(&p.1)));
    let mut tris: Vec<[usize; 3]> = Vec::with_capacity(2 * points.len());
    let mut upper: Vec<usize> = Vec::new();
    let mut lower: Vec<usize> = Vec::new();
    for (i, &p) in points.iter().enumerate() {
        while upper.len() >= 2 {
            let (a, b) = (upper[upper.len() - 2], upper[upper.len() - 1]);
            if orient(points[a], points[b], p) > 0 {
                tris.push([a, b, i]);
                upper.pop();
            } else {
                break;
            }
        }
        upper.push(i);
        while lower.len() >= 2 {
            let (a, b) = (lower[lower.len() - 2], lower[lower.len() - 1]);
            if orient(points[a], points[b], p) < 0 {
                tris.push([a, i, b]);
                lower.pop();
            } else {
                break;
            }
        }
        lower.push(i);
    }
    flip_to_delaunay(points, &mut tris);
    tris
}

fn flip_to_delaunay(points: &[P], tris: &mut [[usize; 3]]) {
    let mut owner: HashMap<(usize, usize), usize> = HashMap::with_capacity(3 * tris.len());
    for (t, tri) in tris.iter().enumerate() {
        for k in 0..3 {
            owner.insert((tri[k], tri[(k + 1) % 3]), t);
        }
    }
    let mut stack: Vec<(usize, usize)> = owner
        .keys()
        .copied()
        .filter(|&(u, v)| u < v && owner.contains_key(&(v, u)))
        .collect();
    stack.sort_unstable();
    let third = |tri: &[usize; 3], u: usize, v: usize| -> usize {
        *tri.iter().find(|&&w| w != u && w != v).expect("triangle has a third vertex")
    };
    while let Some((u, v)) = stack.pop() {
        let (Some(&t1), Some(&t2)) = (owner.get(&(u, v)), owner.get(&(v, u))) else {
            continue;
        };
        let c = third(&tris[t1], u, v);
        let d = third(&tris[t2], u, v);
        if in_circle(points[u], points[v], points[c], points[d]) <= 0 {
            continue;
        }
        // Triangles (u, v, c) and (v, u, d) become (u, d, c) and (d, v, c).
        tris[t1] = [u, d, c];
        tris[t2] = [d, v, c];
        owner.remove(&(u, v));
        owner.remove(&(v, u));
        owner.insert((u, d), t1);
        owner.insert((d, c), t1);
        owner.insert((c, u), t1);
        owner.insert((d, v), t2);
        owner.insert((v, c), t2);
        owner.insert((c, d), t2);
        for (a, b) in [(u, d), (d, v), (v, c), (c, u)] {
            stack.push((a.min(b), a.max(b)));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_delaunay(points: &[P], tris: &[[usize; 3]]) {
        for t in tris {
            assert!(orient(points[t[0]], points[t[1]], points[t[2]]) > 0);
            for (i, &p) in points.iter().enumerate() {
                if !t.contains(&i) {
                    assert!(in_circle(points[t[0]], points[t[1]], points[t[2]], p) <= 0);
                }
            }
        }
    }

    #[test]
    fn square_with_center() {
        let pts = vec![(0, 0), (0, 4), (2, 2), (4, 0), (4, 4)];
        let tris = triangulate(&pts);
        assert_eq!(tris.len(), 4);
        check_delaunay(&pts, &tris);
    }

    #[test]
    fn collinear_prefix() {
        let pts = vec![(0, 0), (1, 0), (2, 0), (3, 0), (5, 7)];
        let tris = triangulate(&pts);
        assert_eq!(tris.len(), 3);
        check_delaunay(&pts, &tris);
        assert!(triangulate(&[(0, 0), (1, 1), (2, 2)]).is_empty());
    }

    #[test]
    fn cocircular_grid() {
        let mut pts = Vec::new();
        for x in 0..5 {
            for y in 0..5 {
                pts.push((x, y));
            }
        }
        let tris = triangulate(&pts);
        // Euler: 2n - h - 2 with 16 hull points.
        assert_eq!(tris.len(), 2 * 25 - 16 - 2);
        check_delaunay(&pts, &tris);
    }

    #[test]
    fn pseudo_random_points() {
        let mut pts: Vec<P> = (0..200i64)
            .map(|i| ((i * 7919 + 13) % 1009, (i * 104_729 + 7) % 997))
            .collect();
        pts.sort();
        pts.dedup();
        let tris = triangulate(&pts);
        check_delaunay(&pts, &tris);
    }
}
