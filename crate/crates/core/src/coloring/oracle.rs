//! Exact chromatic number by branch and bound, used to cross-check the
//! greedy colorer on small instances.

use serde::Serialize;

use crate::complex::Coloring;
use crate::dual::DualGraph;
use crate::error::{Error, Result};

pub const DEFAULT_NODE_LIMIT: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub chromatic_number: usize,
    pub optimal_coloring: Coloring,
}

/// Exact chromatic number, computed per connected component.
///
/// Each component starts from a maximum-clique lower bound and a DSATUR
/// upper bound; every `k` in between is decided by exhaustive DSATUR-ordered
/// backtracking, so a reported `chi` comes with a proof that `chi - 1` colors
/// fail.
pub fn exact_chromatic(g: &DualGraph, node_limit: usize) -> Result<OracleResult> {
    let n = g.node_count();
    if n > node_limit {
        return Err(Error::OracleLimit {
            nodes: n,
            limit: node_limit,
        });
    }
    let mut colors = vec![0usize; n];
    let mut chi = 0;
    for component in components(g) {
        let local = Local::new(g, &component);
        let lower = local.max_clique();
        let (upper, mut best) = local.dsatur_greedy();
        for k in lower..upper {
            if let Some(col) = local.k_coloring(k) {
                best = col;
                break;
            }
        }
        let used = best.iter().max().map_or(0, |&m| m + 1);
        chi = chi.max(used);
        for (local_idx, &node) in component.iter().enumerate() {
            colors[node] = best[local_idx];
        }
    }
    Ok(OracleResult {
        chromatic_number: chi,
        optimal_coloring: Coloring::new(colors),
    })
}

fn components(g: &DualGraph) -> Vec<Vec<usize>> {
    let n = g.node_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut k = 0;
        while k < comp.len() {
            let u = comp[k];
            k += 1;
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A component with dense local indices.
struct Local {
    adj: Vec<Vec<usize>>,
    matrix: Vec<Vec<bool>>,
}

impl Local {
    fn new(g: &DualGraph, nodes: &[usize]) -> Self {
        let index = |node: usize| nodes.binary_search(&node).expect("node in component");
        let adj: Vec<Vec<usize>> = nodes
            .iter()
            .map(|&u| g.neighbors(u).map(index).collect())
            .collect();
        let mut matrix = vec![vec![false; nodes.len()]; nodes.len()];
        for (u, ns) in adj.iter().enumerate() {
            for &w in ns {
                matrix[u][w] = true;
            }
        }
        Local { adj, matrix }
    }

    fn len(&self) -> usize {
        self.adj.len()
    }

    fn max_clique(&self) -> usize {
        let mut best = usize::from(self.len() > 0);
        let all: Vec<usize> = (0..self.len()).collect();
        self.grow_clique(0, &all, &mut best);
        best
    }

    fn grow_clique(&self, size: usize, candidates: &[usize], best: &mut usize) {
        if size > *best {
            *best = size;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if size + candidates.len() - i <= *best {
                return;
            }
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| self.matrix[v][w])
                .collect();
            self.grow_clique(size + 1, &next, best);
        }
    }

    /// Next uncolored vertex: most distinct neighbor colors, then highest
    /// degree, then lowest index.
    fn pick(&self, colors: &[Option<usize>]) -> Option<usize> {
        (0..self.len())
            .filter(|&u| colors[u].is_none())
            .max_by(|&a, &b| {
                let sat = |u: usize| {
                    let mut cs: Vec<usize> = self.adj[u].iter().filter_map(|&w| colors[w]).collect();
                    cs.sort_unstable();
                    cs.dedup();
                    cs.len()
                };
                (sat(a), self.adj[a].len())
                    .cmp(&(sat(b), self.adj[b].len()))
                    .then(b.cmp(&a))
            })
    }

    fn dsatur_greedy(&self) -> (usize, Vec<usize>) {
        let mut colors = vec![None; self.len()];
        while let Some(u) = self.pick(&colors) {
            let k = (0..)
                .find(|&k| self.adj[u].iter().all(|&w| colors[w] != Some(k)))
                .expect("some color is free");
            colors[u] = Some(k);
        }
        let colors: Vec<usize> = colors.into_iter().map(Option::unwrap).collect();
        let used = colors.iter().max().map_or(0, |&m| m + 1);
        (used, colors)
    }

    fn k_coloring(&self, k: usize) -> Option<Vec<usize>> {
        let mut colors = vec![None; self.len()];
        if self.backtrack(k, &mut colors, 0) {
            Some(colors.into_iter().map(Option::unwrap).collect())
        } else {
            None
        }
    }

    /// `max_used` is the number of distinct colors opened so far; a vertex
    /// may only open one new color, which removes color permutations.
    fn backtrack(&self, k: usize, colors: &mut [Option<usize>], max_used: usize) -> bool {
        let Some(u) = self.pick(colors) else {
            return true;
        };
        for c in 0..k.min(max_used + 1) {
            if self.adj[u].iter().any(|&w| colors[w] == Some(c)) {
                continue;
            }
            colors[u] = Some(c);
            if self.backtrack(k, colors, max_used.max(c + 1)) {
                return true;
            }
        }
        colors[u] = None;
        false
    }
}
