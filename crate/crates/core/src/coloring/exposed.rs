use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::Residual;
use crate::complex::Facet;
use crate::error::{Error, Result};
use crate::geometry::{extreme_point, supporting_hyperplane, Point};

/// Lowest-index active simplex owning a facet of multiplicity 1 in the
/// residual, with its lexicographically smallest such facet.
pub fn find_exposed_combinatorial(residual: &Residual) -> Result<(usize, Facet)> {
    if residual.is_empty() {
        return Err(Error::input("cannot search an empty complex"));
    }
    let c = residual.complex();
    let mut count: HashMap<Facet, usize> = HashMap::new();
    for i in residual.indices() {
        for f in c.simplex(i).facets() {
            *count.entry(f).or_default() += 1;
        }
    }
    residual
        .indices()
        .find_map(|i| {
            c.simplex(i)
                .facets()
                .find(|f| count[f] == 1)
                .map(|f| (i, f))
        })
        .ok_or(Error::Unrealizable {
            residual: residual.len(),
        })
}

/// One level of the nested-hull search: the face every simplex of the level
/// contains, and how many simplices that is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HullStage {
    pub anchor: Vec<usize>,
    pub subset_size: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HullTrace {
    pub stages: Vec<HullStage>,
}

impl HullTrace {
    pub fn subset_sizes(&self) -> Vec<usize> {
        self.stages.iter().map(|s| s.subset_size).collect()
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.stages
            .windows(2)
            .all(|w| w[1].subset_size < w[0].subset_size)
    }
}

/// Finds an exposed simplex through nested convex hulls.
///
/// Starts from the lexicographically smallest vertex `v` of the residual and
/// the simplices around it. At each level, with anchor face `A` and the
/// simplices `S_A` containing it: if some facet `f ⊇ A` of a simplex in `S_A`
/// lies on the hull of `S_A`, that facet is exposed and is returned.
/// Otherwise the largest face `F ⊋ A` on the hull is chosen (ties: lowest
/// simplex index, then lexicographic), and the search continues on the
/// simplices containing `F`, which is a strictly smaller set.
///
/// Requiring every candidate to contain the anchor is what makes a hull
/// facet exposed: any simplex glued across it would contain the anchor too,
/// and so would lie in the same hull on the other side of the facet.
pub fn find_exposed_geometric(residual: &Residual) -> Result<(usize, Facet, HullTrace)> {
    if residual.is_empty() {
        return Err(Error::input("cannot search an empty complex"));
    }
    let c = residual.complex();
    let d = c.dimension();

    let used: BTreeSet<usize> = residual
        .indices()
        .flat_map(|i| c.simplex(i).ids().iter().copied())
        .collect();
    let used: Vec<usize> = used.into_iter().collect();
    let pts: Vec<&Point> = used.iter().map(|&v| c.vertex(v)).collect();
    let v = used[extreme_point(&pts)?];

    let mut anchor = vec![v];
    let mut subset: Vec<usize> = residual
        .indices()
        .filter(|&i| c.simplex(i).contains(v))
        .collect();
    let mut trace = HullTrace {
        stages: vec![HullStage {
            anchor: anchor.clone(),
            subset_size: subset.len(),
        }],
    };

    loop {
        let cloud_ids: BTreeSet<usize> = subset
            .iter()
            .flat_map(|&i| c.simplex(i).ids().iter().copied())
            .collect();
        let cloud: Vec<&Point> = cloud_ids.iter().map(|&v| c.vertex(v)).collect();
        let mut on_hull: HashMap<Vec<usize>, bool> = HashMap::new();
        let mut supported = |face: &[usize]| -> Result<bool> {
            if let Some(&known) = on_hull.get(face) {
                return Ok(known);
            }
            let face_pts: Vec<&Point> = face.iter().map(|&v| c.vertex(v)).collect();
            let found = supporting_hyperplane(&face_pts, &cloud)?.is_some();
            on_hull.insert(face.to_vec(), found);
            Ok(found)
        };

        for &s in &subset {
            for f in c.simplex(s).facets() {
                if is_superset(f.ids(), &anchor) && supported(f.ids())? {
                    if residual.multiplicity(&f) != 1 {
                        return Err(inconsistent(
                            residual,
                            format!("facet {f} lies on a hull but is glued"),
                        ));
                    }
                    return Ok((s, f, trace));
                }
            }
        }

        // No facet on the hull: take the largest proper face through the anchor.
        let mut next: Option<Vec<usize>> = None;
        'sizes: for size in (anchor.len() + 1..d).rev() {
            for &s in &subset {
                for face in faces_through(c.simplex(s).ids(), &anchor, size) {
                    if supported(&face)? {
                        next = Some(face);
                        break 'sizes;
                    }
                }
            }
        }
        let Some(face) = next else {
            return Err(inconsistent(
                residual,
                format!("no hull face extends anchor {anchor:?}"),
            ));
        };
        let narrowed: Vec<usize> = subset
            .iter()
            .copied()
            .filter(|&i| c.simplex(i).contains_all(&face))
            .collect();
        if narrowed.len() >= subset.len() {
            return Err(inconsistent(
                residual,
                format!(
                    "hull chain failed to decrease at face {face:?} ({} simplices)",
                    subset.len()
                ),
            ));
        }
        anchor = face;
        subset = narrowed;
        trace.stages.push(HullStage {
            anchor: anchor.clone(),
            subset_size: subset.len(),
        });
    }
}

/// Distinguishes abstract inputs (nothing exposed at all) from geometry
/// that does not realize the complex.
fn inconsistent(residual: &Residual, detail: String) -> Error {
    match super::find_exposed_combinatorial(residual) {
        Err(e @ Error::Unrealizable { .. }) => e,
        _ => Error::Invariant(format!(
            "{detail}; coordinates do not realize the complex"
        )),
    }
}

fn is_superset(sorted: &[usize], subset: &[usize]) -> bool {
    subset.iter().all(|v| sorted.binary_search(v).is_ok())
}

/// Faces of the simplex with `size` vertices that contain `anchor`, in
/// lexicographic order.
fn faces_through(simplex: &[usize], anchor: &[usize], size: usize) -> Vec<Vec<usize>> {
    let rest: Vec<usize> = simplex
        .iter()
        .copied()
        .filter(|v| !anchor.contains(v))
        .collect();
    let extra = size - anchor.len();
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(extra);
    combinations(&rest, extra, 0, &mut pick, &mut |chosen| {
        let mut face: Vec<usize> = anchor.iter().chain(chosen).copied().collect();
        face.sort_unstable();
        out.push(face);
    });
    out.sort();
    out
}

fn combinations(
    items: &[usize],
    k: usize,
    start: usize,
    pick: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if pick.len() == k {
        emit(pick);
        return;
    }
    for i in start..items.len() {
        pick.push(items[i]);
        combinations(items, k, i + 1, pick, emit);
        pick.pop();
    }
}
