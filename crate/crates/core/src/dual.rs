//! The dual graph of a complex: one node per simplex, one edge per glued
//! facet.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::complex::{Complex, Facet};
use crate::error::{Error, Result};
use crate::geometry::{side_of, Hyperplane, Sign};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    /// Per node: `(neighbor, shared facet)`, sorted by neighbor.
    adjacency: Vec<Vec<(usize, Facet)>>,
}

impl DualGraph {
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[node].iter().map(|(n, _)| *n)
    }

    pub fn adjacency(&self, node: usize) -> &[(usize, Facet)] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search_by_key(&b, |(n, _)| *n).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges `(a, b, facet)` with `a < b`, in order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Facet)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(a, adj)| {
            adj.iter()
                .filter(move |(b, _)| a < *b)
                .map(move |(b, f)| (a, *b, f))
        })
    }

    /// Builds a graph from an explicit edge list (facets left empty); used
    /// for abstract graphs that do not come from a complex.
    pub fn from_edges(node_count: usize, edges: &[(usize, usize)]) -> Result<DualGraph> {
        let mut adjacency = vec![Vec::new(); node_count];
        for &(a, b) in edges {
            if a == b || a >= node_count || b >= node_count {
                return Err(Error::input(format!("bad edge ({a}, {b})")));
            }
            adjacency[a].push((b, Facet::default()));
            adjacency[b].push((a, Facet::default()));
        }
        for adj in &mut adjacency {
            adj.sort();
            adj.dedup_by_key(|(n, _)| *n);
        }
        Ok(DualGraph { adjacency })
    }

    pub fn component_count(&self) -> usize {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }
}

/// Joins simplices that share exactly `d` vertex ids, labeling each edge
/// with the shared facet.
pub fn build_dual(c: &Complex) -> Result<DualGraph> {
    let mut adjacency = vec![Vec::new(); c.len()];
    for (facet, simplices) in c.facet_incidence() {
        match simplices.as_slice() {
            [_] => {}
            &[a, b] => {
                if a == b {
                    continue;
                }
                adjacency[a].push((b, facet.clone()));
                adjacency[b].push((a, facet));
            }
            many => {
                return Err(Error::InvalidComplex(format!(
                    "facet {facet} is shared by {} simplices {many:?}",
                    many.len()
                )))
            }
        }
    }
    for adj in &mut adjacency {
        adj.sort();
    }
    Ok(DualGraph { adjacency })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub max_degree: usize,
    pub component_count: usize,
    /// `floor((r-1)/r * (max_degree + 2))` with `r = d + 2`, present only when
    /// `4 <= r <= max_degree + 1` and the graph has no `K_r`.
    pub lawrence_bound: Option<usize>,
    /// The best available bound: the Lawrence bound when it applies, else the
    /// greedy bound `max_degree + 1`.
    pub chromatic_upper_bound: usize,
}

pub fn stats(g: &DualGraph, d: usize) -> GraphStats {
    let max_degree = g.max_degree();
    let r = d + 2;
    let lawrence_bound = (4 <= r && r <= max_degree + 1 && find_clique(g, r).is_none())
        .then(|| (r - 1) * (max_degree + 2) / r);
    let greedy = if g.node_count() == 0 { 0 } else { max_degree + 1 };
    GraphStats {
        max_degree,
        component_count: g.component_count(),
        lawrence_bound,
        chromatic_upper_bound: lawrence_bound.map_or(greedy, |b| b.min(greedy)),
    }
}

/// Some `r`-clique, or `None`. Lexicographically first by node index.
pub fn find_clique(g: &DualGraph, r: usize) -> Option<Vec<usize>> {
    let mut found = None;
    cliques_with(g, r, &mut |clique| {
        found = Some(clique.to_vec());
        false
    });
    found
}

/// Every `r`-clique, each as a sorted node list, in lexicographic order.
pub fn find_all_cliques(g: &DualGraph, r: usize) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    cliques_with(g, r, &mut |clique| {
        all.push(clique.to_vec());
        true
    });
    all
}

/// Enumerates cliques anchored at their smallest node, extending only by
/// higher-numbered neighbors of the anchor. With degree at most `d + 1` the
/// candidate set per anchor has at most `d + 1` nodes.
fn cliques_with(g: &DualGraph, r: usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
    if r == 0 {
        return;
    }
    let mut current = Vec::with_capacity(r);
    for u in 0..g.node_count() {
        let candidates: Vec<usize> = g.neighbors(u).filter(|&w| w > u).collect();
        if candidates.len() + 1 < r {
            continue;
        }
        current.clear();
        current.push(u);
        if !extend(g, r, &candidates, &mut current, visit) {
            return;
        }
    }
}

fn extend(
    g: &DualGraph,
    r: usize,
    candidates: &[usize],
    current: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if current.len() == r {
        return visit(current);
    }
    for (i, &w) in candidates.iter().enumerate() {
        if candidates.len() - i + current.len() < r {
            break;
        }
        if current.iter().all(|&u| g.has_edge(u, w)) {
            current.push(w);
            let keep_going = extend(g, r, &candidates[i + 1..], current, visit);
            current.pop();
            if !keep_going {
                return false;
            }
        }
    }
    true
}

/// Outcome of checking a `K_{d+1}` of the dual graph against the expected
/// configuration: `d + 2` vertices in total, and the vertex outside the first
/// simplex on the same side of that simplex's base as the shared apex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueReport {
    pub clique_nodes: Vec<usize>,
    pub distinct_vertex_ids: BTreeSet<usize>,
    pub vertex_count_ok: bool,
    pub halfspace_condition_ok: bool,
    /// Vertex ids in relabeled order: `labels[0]` is the apex shared by every
    /// simplex, `labels[1..=d]` the base of the first simplex, `labels[d+1]`
    /// the remaining vertex. Present when the vertex count is `d + 2`.
    pub labels: Option<Vec<usize>>,
}

/// Relabels a `K_{d+1}` configuration concretely and checks both
/// properties. The halfspace condition is checked with every clique member
/// in the role of the first simplex.
pub fn analyze_kd1_configuration(c: &Complex, clique: &[usize]) -> Result<CliqueReport> {
    let d = c.dimension();
    if clique.len() != d + 1 {
        return Err(Error::input(format!(
            "expected {} simplices, got {}",
            d + 1,
            clique.len()
        )));
    }
    let mut clique_nodes = clique.to_vec();
    clique_nodes.sort_unstable();
    if clique_nodes.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::input("clique lists a simplex twice"));
    }
    if let Some(&bad) = clique_nodes.iter().find(|&&i| i >= c.len()) {
        return Err(Error::input(format!("simplex {bad} does not exist")));
    }
    for (k, &a) in clique_nodes.iter().enumerate() {
        for &b in &clique_nodes[k + 1..] {
            if c.simplex(a).shared_count(c.simplex(b)) != d {
                return Err(Error::input(format!(
                    "simplices {a} and {b} do not share a facet; not a clique"
                )));
            }
        }
    }

    let distinct_vertex_ids: BTreeSet<usize> = clique_nodes
        .iter()
        .flat_map(|&i| c.simplex(i).ids().iter().copied())
        .collect();
    let vertex_count_ok = distinct_vertex_ids.len() == d + 2;
    if !vertex_count_ok {
        return Ok(CliqueReport {
            clique_nodes,
            distinct_vertex_ids,
            vertex_count_ok,
            halfspace_condition_ok: false,
            labels: None,
        });
    }

    // Of the d + 2 subsets of size d + 1 exactly one is absent; the vertex
    // outside it lies in every simplex and becomes the apex.
    let all: Vec<usize> = distinct_vertex_ids.iter().copied().collect();
    let apex = *all
        .iter()
        .find(|&&v| clique_nodes.iter().all(|&i| c.simplex(i).contains(v)))
        .ok_or_else(|| Error::Invariant("K_{d+1} configuration without a common apex".into()))?;

    let mut labels = None;
    let mut halfspace_condition_ok = true;
    for (role, &first) in clique_nodes.iter().enumerate() {
        let sigma = c.simplex(first);
        let base: Vec<usize> = sigma.ids().iter().copied().filter(|&v| v != apex).collect();
        let other = *all
            .iter()
            .find(|&&v| !sigma.contains(v))
            .expect("d + 2 vertices, simplex has d + 1");
        if role == 0 {
            let mut l = vec![apex];
            l.extend(&base);
            l.push(other);
            labels = Some(l);
        }
        let base_points: Vec<_> = base.iter().map(|&v| c.vertex(v)).collect();
        let ok = match Hyperplane::through(&base_points) {
            Ok(h) => {
                let apex_side = side_of(&h, c.vertex(apex))?;
                let other_side = side_of(&h, c.vertex(other))?;
                apex_side != Sign::Zero && apex_side == other_side
            }
            Err(_) => false,
        };
        halfspace_condition_ok &= ok;
    }

    Ok(CliqueReport {
        clique_nodes,
        distinct_vertex_ids,
        vertex_count_ok,
        halfspace_condition_ok,
        labels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    /// Three triangles around vertex 0, inside the outer triangle 1-2-3.
    fn tri_k3() -> Complex {
        Complex::new(
            2,
            vec![
                Point::from_ints(&[1, 1]),
                Point::from_ints(&[0, 0]),
                Point::from_ints(&[3, 0]),
                Point::from_ints(&[0, 3]),
            ],
            vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 1, 3]],
        )
        .unwrap()
    }

    /// All four faces of a tetrahedron, flattened into the plane.
    fn boundary_of_tetrahedron() -> Complex {
        Complex::new(
            2,
            vec![
                Point::from_ints(&[0, 0]),
                Point::from_ints(&[1, 0]),
                Point::from_ints(&[0, 1]),
                Point::from_ints(&[3, 3]),
            ],
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        )
        .unwrap()
    }

    #[test]
    fn single_simplex_dual() {
        let c = Complex::new(
            1,
            vec![Point::from_ints(&[0]), Point::from_ints(&[1])],
            vec![vec![0, 1]],
        )
        .unwrap();
        let g = build_dual(&c).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (1, 0));
        let s = stats(&g, 1);
        assert_eq!(s.max_degree, 0);
        assert_eq!(s.lawrence_bound, None);
        assert_eq!(s.chromatic_upper_bound, 1);
    }

    #[test]
    fn tri_k3_is_a_triangle_graph() {
        let g = build_dual(&tri_k3()).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.max_degree(), 2);
        assert_eq!(find_clique(&g, 3), Some(vec![0, 1, 2]));
        assert_eq!(find_clique(&g, 4), None);
        let f: Vec<_> = g.edges().map(|(a, b, f)| (a, b, f.ids().to_vec())).collect();
        assert_eq!(f, vec![(0, 1, vec![0, 2]), (0, 2, vec![0, 1]), (1, 2, vec![0, 3])]);
    }

    #[test]
    fn overshared_facet_is_rejected() {
        let c = Complex::new(
            2,
            vec![
                Point::from_ints(&[0, 0]),
                Point::from_ints(&[2, 0]),
                Point::from_ints(&[1, 1]),
                Point::from_ints(&[1, -1]),
                Point::from_ints(&[1, 3]),
            ],
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]],
        )
        .unwrap();
        assert!(matches!(build_dual(&c), Err(Error::InvalidComplex(_))));
    }

    #[test]
    fn lawrence_bound_values() {
        // d = 2, full degree: floor(3/4 * 5) = 3.
        let k13 = DualGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = stats(&k13, 2);
        assert_eq!(s.lawrence_bound, Some(3));
        assert_eq!(s.chromatic_upper_bound, 3);
        // d = 3, degree 4: floor(4/5 * 6) = 4.
        let k14 = DualGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(stats(&k14, 3).lawrence_bound, Some(4));
        // Precondition r <= max_degree + 1 fails for the K_3 fan.
        assert_eq!(stats(&build_dual(&tri_k3()).unwrap(), 2).lawrence_bound, None);
    }

    #[test]
    fn abstract_boundary_contains_k4() {
        let c = boundary_of_tetrahedron();
        let g = build_dual(&c).unwrap();
        assert_eq!(find_clique(&g, 4), Some(vec![0, 1, 2, 3]));
        // The bound does not apply when the forbidden clique is present.
        assert_eq!(stats(&g, 2).lawrence_bound, None);
        assert_eq!(stats(&g, 2).chromatic_upper_bound, 4);
    }

    #[test]
    fn all_cliques_are_listed_once() {
        let k4 = DualGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(find_all_cliques(&k4, 3).len(), 4);
        assert_eq!(find_all_cliques(&k4, 2).len(), 6);
        assert_eq!(find_all_cliques(&k4, 5).len(), 0);
    }

    #[test]
    fn tri_k3_configuration() {
        let c = tri_k3();
        let r = analyze_kd1_configuration(&c, &[2, 0, 1]).unwrap();
        assert_eq!(r.clique_nodes, vec![0, 1, 2]);
        assert_eq!(r.distinct_vertex_ids.len(), 4);
        assert!(r.vertex_count_ok);
        assert!(r.halfspace_condition_ok);
        assert_eq!(r.labels, Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn configuration_rejects_non_cliques() {
        let c = Complex::new(
            2,
            vec![
                Point::from_ints(&[0, 0]),
                Point::from_ints(&[1, 0]),
                Point::from_ints(&[0, 1]),
                Point::from_ints(&[1, 1]),
                Point::from_ints(&[2, 0]),
            ],
            vec![vec![0, 1, 2], vec![1, 2, 3], vec![1, 3, 4]],
        )
        .unwrap();
        assert!(analyze_kd1_configuration(&c, &[0, 1, 2]).is_err());
        assert!(analyze_kd1_configuration(&c, &[0, 1]).is_err());
    }
}
