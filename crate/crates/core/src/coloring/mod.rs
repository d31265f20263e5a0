//! Exposed-simplex search, peeling and greedy `(d+1)`-coloring.
//!
//! Peeling repeatedly removes a simplex that has a facet glued to nothing in
//! the remaining complex. Coloring the removals in reverse order then never
//! sees more than `d` colored neighbors, so `d + 1` colors always suffice.

mod exposed;
mod oracle;

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::complex::{Coloring, Complex, Facet};
use crate::dual::build_dual;
use crate::error::{Error, Result};

pub use exposed::{find_exposed_combinatorial, find_exposed_geometric, HullStage, HullTrace};
pub use oracle::{exact_chromatic, OracleResult, DEFAULT_NODE_LIMIT};

/// A complex with some simplices already removed.
#[derive(Clone, Debug)]
pub struct Residual<'a> {
    complex: &'a Complex,
    active: Vec<bool>,
    remaining: usize,
}

impl<'a> Residual<'a> {
    pub fn full(complex: &'a Complex) -> Self {
        Residual {
            complex,
            active: vec![true; complex.len()],
            remaining: complex.len(),
        }
    }

    pub fn complex(&self) -> &'a Complex {
        self.complex
    }

    pub fn is_active(&self, simplex: usize) -> bool {
        self.active[simplex]
    }

    pub fn len(&self) -> usize {
        self.remaining
    }

    pub fn is_empty(&self) -> bool {
        self.remaining == 0
    }

    /// Active simplex indices in increasing order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.active
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(i, _)| i)
    }

    pub fn remove(&mut self, simplex: usize) {
        if std::mem::replace(&mut self.active[simplex], false) {
            self.remaining -= 1;
        }
    }

    /// Number of active simplices containing `facet`.
    pub fn multiplicity(&self, facet: &Facet) -> usize {
        self.indices()
            .filter(|&i| self.complex.simplex(i).contains_all(facet.ids()))
            .count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PeelMethod {
    Combinatorial,
    Geometric,
}

impl std::str::FromStr for PeelMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "combinatorial" => Ok(PeelMethod::Combinatorial),
            "geometric" => Ok(PeelMethod::Geometric),
            other => Err(Error::input(format!("unknown peel method {other:?}"))),
        }
    }
}

/// One removal: the simplex and the facet that was exposed when it went.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "(usize, Facet)", into = "(usize, Facet)")]
pub struct PeelStep {
    pub simplex: usize,
    pub facet: Facet,
}

impl From<(usize, Facet)> for PeelStep {
    fn from((simplex, facet): (usize, Facet)) -> Self {
        PeelStep { simplex, facet }
    }
}

impl From<PeelStep> for (usize, Facet) {
    fn from(s: PeelStep) -> Self {
        (s.simplex, s.facet)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelCertificate {
    pub method: PeelMethod,
    pub steps: Vec<PeelStep>,
}

impl PeelCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Replays the certificate and checks that each witness facet belongs to
    /// its simplex and is exposed at its step, and that every simplex is
    /// removed exactly once.
    pub fn check(&self, c: &Complex) -> Result<()> {
        if self.steps.len() != c.len() {
            return Err(Error::input(format!(
                "certificate has {} steps for {} simplices",
                self.steps.len(),
                c.len()
            )));
        }
        let mut residual = Residual::full(c);
        for (k, step) in self.steps.iter().enumerate() {
            if step.simplex >= c.len() || !residual.is_active(step.simplex) {
                return Err(Error::input(format!(
                    "step {k}: simplex {} is missing or already removed",
                    step.simplex
                )));
            }
            let s = c.simplex(step.simplex);
            if step.facet.ids().len() != c.dimension() || !s.contains_all(step.facet.ids()) {
                return Err(Error::input(format!(
                    "step {k}: {} is not a facet of simplex {}",
                    step.facet, step.simplex
                )));
            }
            let m = residual.multiplicity(&step.facet);
            if m != 1 {
                return Err(Error::input(format!(
                    "step {k}: facet {} has multiplicity {m}, not exposed",
                    step.facet
                )));
            }
            residual.remove(step.simplex);
        }
        Ok(())
    }
}

/// Peels the whole complex with the chosen exposed-simplex finder.
pub fn peel(c: &Complex, method: PeelMethod) -> Result<PeelCertificate> {
    match method {
        PeelMethod::Combinatorial => peel_combinatorial(c),
        PeelMethod::Geometric => peel_geometric_traced(c).map(|(cert, _)| cert),
    }
}

/// Geometric peel that also returns the nested-hull trace of every step.
pub fn peel_geometric_traced(c: &Complex) -> Result<(PeelCertificate, Vec<HullTrace>)> {
    let mut residual = Residual::full(c);
    let mut steps = Vec::with_capacity(c.len());
    let mut traces = Vec::with_capacity(c.len());
    while !residual.is_empty() {
        let (simplex, facet, trace) = find_exposed_geometric(&residual)?;
        residual.remove(simplex);
        steps.push(PeelStep { simplex, facet });
        traces.push(trace);
    }
    Ok((
        PeelCertificate {
            method: PeelMethod::Geometric,
            steps,
        },
        traces,
    ))
}

/// Same choices as calling [`find_exposed_combinatorial`] on every residual,
/// but with live facet counts and a candidate set of simplices that currently
/// own an exposed facet.
fn peel_combinatorial(c: &Complex) -> Result<PeelCertificate> {
    let incidence = c.facet_incidence();
    let mut count: HashMap<&Facet, usize> = HashMap::with_capacity(incidence.len());
    for (facet, owners) in &incidence {
        if owners.len() > 2 {
            return Err(Error::InvalidComplex(format!(
                "facet {facet} is shared by {} simplices",
                owners.len()
            )));
        }
        count.insert(facet, owners.len());
    }
    let facets: Vec<Vec<Facet>> = c.simplices().iter().map(|s| s.facets().collect()).collect();

    let mut active = vec![true; c.len()];
    let mut candidates: BTreeSet<usize> = (0..c.len())
        .filter(|&i| facets[i].iter().any(|f| count[f] == 1))
        .collect();
    let mut steps = Vec::with_capacity(c.len());
    for remaining in (1..=c.len()).rev() {
        let Some(s) = candidates.pop_first() else {
            return Err(Error::Unrealizable { residual: remaining });
        };
        let facet = facets[s]
            .iter()
            .find(|f| count[f] == 1)
            .expect("candidate has an exposed facet")
            .clone();
        active[s] = false;
        for f in &facets[s] {
            let n = count.get_mut(f).expect("facet indexed");
            *n -= 1;
            if *n == 1 {
                let other = incidence[f]
                    .iter()
                    .copied()
                    .find(|&t| active[t])
                    .expect("one owner left");
                candidates.insert(other);
            }
        }
        steps.push(PeelStep { simplex: s, facet });
    }
    Ok(PeelCertificate {
        method: PeelMethod::Combinatorial,
        steps,
    })
}

/// Colors simplices in reverse peel order, each with the smallest color in
/// `0..=d` not used by an already colored dual neighbor.
pub fn color(c: &Complex, cert: &PeelCertificate) -> Result<Coloring> {
    let mut seen = vec![false; c.len()];
    for step in &cert.steps {
        if step.simplex >= c.len() || std::mem::replace(&mut seen[step.simplex], true) {
            return Err(Error::input(format!(
                "certificate lists simplex {} out of range or twice",
                step.simplex
            )));
        }
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(Error::input(format!(
            "certificate does not cover simplex {missing}"
        )));
    }
    let g = build_dual(c)?;
    let d = c.dimension();
    let mut colors: Vec<Option<usize>> = vec![None; c.len()];
    let mut used = vec![false; d + 2];
    for step in cert.steps.iter().rev() {
        used.iter_mut().for_each(|u| *u = false);
        for n in g.neighbors(step.simplex) {
            if let Some(k) = colors[n] {
                if k < used.len() {
                    used[k] = true;
                }
            }
        }
        let k = used.iter().position(|u| !u).expect("d + 2 slots");
        if k > d {
            return Err(Error::Invariant(format!(
                "simplex {} already has {} colored neighbors; certificate is not a peel order",
                step.simplex,
                d + 1
            )));
        }
        colors[step.simplex] = Some(k);
    }
    Ok(Coloring::new(
        colors.into_iter().map(|k| k.expect("all colored")).collect(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ColoringViolation {
    SameColor {
        first: usize,
        second: usize,
        facet: Facet,
        color: usize,
    },
    ColorOutOfRange {
        simplex: usize,
        color: usize,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ColoringCheck {
    pub violations: Vec<ColoringViolation>,
}

impl ColoringCheck {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that glued simplices get different colors and that every color
/// lies in `0..=d`.
pub fn verify_coloring(c: &Complex, col: &Coloring) -> Result<ColoringCheck> {
    if col.len() != c.len() {
        return Err(Error::input(format!(
            "coloring has {} entries for {} simplices",
            col.len(),
            c.len()
        )));
    }
    let d = c.dimension();
    let mut violations: Vec<ColoringViolation> = col
        .colors
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > d)
        .map(|(simplex, &color)| ColoringViolation::ColorOutOfRange { simplex, color })
        .collect();
    let g = build_dual(c)?;
    violations.extend(
        g.edges()
            .filter(|(a, b, _)| col.colors[*a] == col.colors[*b])
            .map(|(first, second, facet)| ColoringViolation::SameColor {
                first,
                second,
                facet: facet.clone(),
                color: col.colors[first],
            }),
    );
    Ok(ColoringCheck { violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    fn segment_path(n: usize) -> Complex {
        Complex::new(
            1,
            (0..=n as i64).map(|x| Point::from_ints(&[x])).collect(),
            (0..n).map(|i| vec![i, i + 1]).collect(),
        )
        .unwrap()
    }

    fn glued_pair() -> Complex {
        Complex::new(
            2,
            vec![
                Point::from_ints(&[0, 0]),
                Point::from_ints(&[1, 0]),
                Point::from_ints(&[0, 1]),
                Point::from_ints(&[1, 1]),
            ],
            vec![vec![0, 1, 2], vec![1, 2, 3]],
        )
        .unwrap()
    }

    #[test]
    fn path_peels_in_n_steps() {
        let c = segment_path(5);
        for method in [PeelMethod::Combinatorial, PeelMethod::Geometric] {
            let cert = peel(&c, method).unwrap();
            assert_eq!(cert.steps.len(), 5);
            cert.check(&c).unwrap();
            let col = color(&c, &cert).unwrap();
            assert!(verify_coloring(&c, &col).unwrap().is_valid());
            assert_eq!(col.colors_used(), 2);
        }
    }

    #[test]
    fn single_simplex_gets_color_zero() {
        let c = segment_path(1);
        let col = color(&c, &peel(&c, PeelMethod::Combinatorial).unwrap()).unwrap();
        assert_eq!(col.colors, vec![0]);
    }

    #[test]
    fn glued_pair_gets_two_colors() {
        let c = glued_pair();
        let col = color(&c, &peel(&c, PeelMethod::Combinatorial).unwrap()).unwrap();
        let mut k = col.colors.clone();
        k.sort();
        assert_eq!(k, vec![0, 1]);
    }

    #[test]
    fn same_color_across_shared_facet_is_reported() {
        let c = glued_pair();
        let check = verify_coloring(&c, &Coloring::new(vec![0, 0])).unwrap();
        assert_eq!(
            check.violations,
            vec![ColoringViolation::SameColor {
                first: 0,
                second: 1,
                facet: Facet::new(vec![1, 2]).unwrap(),
                color: 0
            }]
        );
        let check = verify_coloring(&c, &Coloring::new(vec![0, 3])).unwrap();
        assert_eq!(
            check.violations,
            vec![ColoringViolation::ColorOutOfRange { simplex: 1, color: 3 }]
        );
        assert!(matches!(
            verify_coloring(&c, &Coloring::new(vec![0])),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn color_rejects_partial_certificates() {
        let c = glued_pair();
        let mut cert = peel(&c, PeelMethod::Combinatorial).unwrap();
        cert.steps.pop();
        assert!(color(&c, &cert).is_err());
        assert!(cert.check(&c).is_err());
    }

    #[test]
    fn certificate_json_shape() {
        let c = glued_pair();
        let cert = peel(&c, PeelMethod::Combinatorial).unwrap();
        let json = cert.to_json();
        assert_eq!(json, r#"{"method":"combinatorial","steps":[[0,[0,1]],[1,[1,2]]]}"#);
        assert_eq!(PeelCertificate::from_json(&json).unwrap(), cert);
    }

    #[test]
    fn incremental_peel_matches_naive_rerun() {
        let c = segment_path(7).reordered(&[3, 0, 6, 1, 5, 2, 4]).unwrap();
        let fast = peel(&c, PeelMethod::Combinatorial).unwrap();
        let mut residual = Residual::full(&c);
        let mut naive = Vec::new();
        while !residual.is_empty() {
            let (s, f) = find_exposed_combinatorial(&residual).unwrap();
            residual.remove(s);
            naive.push(PeelStep { simplex: s, facet: f });
        }
        assert_eq!(fast.steps, naive);
    }
}
