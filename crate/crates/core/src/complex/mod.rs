//! Pure `d`-simplex complexes: vertex table plus a list of `d`-simplices
//! identified by sorted vertex ids.

mod io;
mod validate;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point;

pub use io::{
    coloring_from_json, coloring_to_json, from_json_str, from_off_str, load, load_coloring, save,
    save_coloring, to_json_string, to_off_string, Format,
};
pub use validate::{validate, ValidationLevel, ValidationReport, Violation};

/// A `d`-simplex as a strictly increasing list of `d + 1` vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<usize>);

/// A `(d-1)`-face as a strictly increasing list of `d` vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Facet(Vec<usize>);

fn sorted_distinct(mut ids: Vec<usize>, what: &str) -> Result<Vec<usize>> {
    ids.sort_unstable();
    if ids.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::input(format!("{what} repeats a vertex id: {ids:?}")));
    }
    Ok(ids)
}

impl Simplex {
    /// Sorts the ids; fails on repeated ids.
    pub fn new(ids: Vec<usize>) -> Result<Self> {
        sorted_distinct(ids, "simplex").map(Simplex)
    }

    pub fn ids(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, vertex: usize) -> bool {
        self.0.binary_search(&vertex).is_ok()
    }

    pub fn contains_all(&self, ids: &[usize]) -> bool {
        ids.iter().all(|&v| self.contains(v))
    }

    /// The facet missing `self.ids()[k]`.
    pub fn facet_without(&self, k: usize) -> Facet {
        let mut ids = self.0.clone();
        ids.remove(k);
        Facet(ids)
    }

    /// All facets in lexicographic order.
    pub fn facets(&self) -> impl Iterator<Item = Facet> + '_ {
        (0..self.0.len()).rev().map(|k| self.facet_without(k))
    }

    /// Number of shared vertex ids.
    pub fn shared_count(&self, other: &Simplex) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }
}

impl Facet {
    pub fn new(ids: Vec<usize>) -> Result<Self> {
        sorted_distinct(ids, "facet").map(Facet)
    }

    pub fn ids(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A finite pure `d`-simplex complex in `R^d`.
///
/// Construction checks only shape (coordinate lengths, simplex arity, id
/// range); gluing and geometric invariants are reported by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    dimension: usize,
    vertices: Vec<Point>,
    simplices: Vec<Simplex>,
}

impl Complex {
    pub fn new(dimension: usize, vertices: Vec<Point>, simplices: Vec<Vec<usize>>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::input("dimension must be at least 1"));
        }
        for (i, p) in vertices.iter().enumerate() {
            if p.dim() != dimension {
                return Err(Error::input(format!(
                    "vertex {i} has {} coordinates, expected {dimension}",
                    p.dim()
                )));
            }
        }
        let simplices = simplices
            .into_iter()
            .enumerate()
            .map(|(i, ids)| {
                if ids.len() != dimension + 1 {
                    return Err(Error::input(format!(
                        "simplex {i} has {} vertices, expected {}",
                        ids.len(),
                        dimension + 1
                    )));
                }
                if let Some(&bad) = ids.iter().find(|&&v| v >= vertices.len()) {
                    return Err(Error::input(format!(
                        "simplex {i} references vertex {bad}, but only {} vertices exist",
                        vertices.len()
                    )));
                }
                Simplex::new(ids).map_err(|e| Error::input(format!("simplex {i}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Complex {
            dimension,
            vertices,
            simplices,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, id: usize) -> &Point {
        &self.vertices[id]
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn simplex(&self, index: usize) -> &Simplex {
        &self.simplices[index]
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Vertex points of simplex `index`, in id order.
    pub fn simplex_points(&self, index: usize) -> Vec<&Point> {
        self.simplices[index]
            .ids()
            .iter()
            .map(|&v| &self.vertices[v])
            .collect()
    }

    /// Every facet mapped to the simplices containing it, in increasing
    /// simplex order.
    pub fn facet_incidence(&self) -> HashMap<Facet, Vec<usize>> {
        let mut map: HashMap<Facet, Vec<usize>> =
            HashMap::with_capacity(self.simplices.len() * (self.dimension + 1));
        for (i, s) in self.simplices.iter().enumerate() {
            for f in s.facets() {
                map.entry(f).or_default().push(i);
            }
        }
        map
    }

    /// Number of simplices containing each facet: 1 for exposed, 2 for glued.
    /// Counts above 2 mark an invalid complex.
    pub fn facet_multiplicity(&self) -> BTreeMap<Facet, usize> {
        self.facet_incidence()
            .into_iter()
            .map(|(f, s)| (f, s.len()))
            .collect()
    }

    /// The same complex with simplices listed in the order given by
    /// `order` (a permutation of simplex indices).
    pub fn reordered(&self, order: &[usize]) -> Result<Complex> {
        let mut seen = vec![false; self.simplices.len()];
        if order.len() != self.simplices.len()
            || order.iter().any(|&i| i >= seen.len() || std::mem::replace(&mut seen[i], true))
        {
            return Err(Error::input("reordering is not a permutation of the simplices"));
        }
        Ok(Complex {
            dimension: self.dimension,
            vertices: self.vertices.clone(),
            simplices: order.iter().map(|&i| self.simplices[i].clone()).collect(),
        })
    }

    /// Drops vertices not used by any simplex, renumbering the rest in their
    /// original order.
    pub fn compacted(self) -> Complex {
        let mut new_id = vec![usize::MAX; self.vertices.len()];
        for s in &self.simplices {
            for &v in s.ids() {
                new_id[v] = 0;
            }
        }
        let mut vertices = Vec::new();
        for (old, p) in self.vertices.into_iter().enumerate() {
            if new_id[old] == 0 {
                new_id[old] = vertices.len();
                vertices.push(p);
            }
        }
        let simplices = self
            .simplices
            .iter()
            .map(|s| Simplex(s.ids().iter().map(|&v| new_id[v]).collect()))
            .collect();
        Complex {
            dimension: self.dimension,
            vertices,
            simplices,
        }
    }
}

/// One color per simplex, each in `0..=d` for a proper `(d+1)`-coloring.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors used.
    pub fn colors_used(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    pub fn max_color(&self) -> Option<usize> {
        self.colors.iter().copied().max()
    }
}
