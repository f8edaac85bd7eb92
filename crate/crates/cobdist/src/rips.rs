//! Vietoris-Rips complexes over certified integer-distance oracles.
//!
//! A simplex is a set of vertices at pairwise distance exactly one. Only the
//! maximal simplices (maximal cliques of the distance-one graph) are stored;
//! faces are implied. Pairs the oracle cannot certify are excluded from the
//! edge set and reported, never guessed.

use serde::Serialize;

use crate::knots::twist_jump_cosine;
use crate::metric::{delta_certified, ClassNode};
use crate::Error;

/// Pairwise verdict from a distance oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairVerdict {
    /// Certified exact distance.
    Exact { value: u32, certificate: String },
    /// Certified "distance is one" without a full value computation.
    IsOne { certificate: String },
    /// Certified "distance is not one".
    NotOne,
    /// No certificate available; the pair is reported and excluded.
    Uncertified,
}

/// Distance-one edge with its certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub certificate: String,
}

/// A Rips complex: vertices, certified distance-one edges, and the maximal
/// simplices of the induced clique complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RipsComplex {
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
    pub maximal_simplices: Vec<Vec<usize>>,
    pub uncertified_pairs: Vec<(usize, usize)>,
}

impl RipsComplex {
    /// Max simplex dimension; `None` for an empty vertex set.
    pub fn dimension(&self) -> Option<usize> {
        self.maximal_simplices.iter().map(|s| s.len() - 1).max()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

/// Build the complex from vertex labels and a pairwise oracle.
pub fn build_rips<L, F>(labels: &[L], mut oracle: F) -> RipsComplex
where
    L: std::fmt::Display,
    F: FnMut(usize, usize) -> PairVerdict,
{
    let n = labels.len();
    let mut edges = Vec::new();
    let mut uncertified = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            match oracle(i, j) {
                PairVerdict::Exact {
                    value: 1,
                    certificate,
                }
                | PairVerdict::IsOne { certificate } => {
                    edges.push(Edge {
                        a: i,
                        b: j,
                        certificate,
                    });
                }
                PairVerdict::Exact { .. } | PairVerdict::NotOne => {}
                PairVerdict::Uncertified => uncertified.push((i, j)),
            }
        }
    }
    let mut adj = vec![vec![false; n]; n];
    for e in &edges {
        adj[e.a][e.b] = true;
        adj[e.b][e.a] = true;
    }
    let mut simplices = maximal_cliques(&adj);
    for s in &mut simplices {
        s.sort_unstable();
    }
    simplices.sort();
    RipsComplex {
        vertices: labels.iter().map(|l| l.to_string()).collect(),
        edges,
        maximal_simplices: simplices,
        uncertified_pairs: uncertified,
    }
}

/// Bron-Kerbosch with pivoting.
fn maximal_cliques(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    fn expand(
        adj: &[Vec<bool>],
        r: &mut Vec<usize>,
        mut p: Vec<usize>,
        mut x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|u| p.iter().filter(|v| adj[*u][**v]).count())
            .unwrap();
        let todo: Vec<usize> = p.iter().copied().filter(|v| !adj[pivot][*v]).collect();
        for v in todo {
            r.push(v);
            let p2 = p.iter().copied().filter(|u| adj[v][*u]).collect();
            let x2 = x.iter().copied().filter(|u| adj[v][*u]).collect();
            expand(adj, r, p2, x2, out);
            r.pop();
            p.retain(|u| *u != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    let n = adj.len();
    expand(adj, &mut Vec::new(), (0..n).collect(), Vec::new(), &mut out);
    out
}

type PairResult = Result<((usize, usize), PairVerdict), Error>;

/// Rips complex over torus-span class nodes, with [`delta_certified`] as the
/// oracle. Pairs whose interval is not exact are reported as uncertified.
pub fn build_rips_for_combos(nodes: &[ClassNode], threads: usize) -> Result<RipsComplex, Error> {
    let pairs: Vec<(usize, usize)> = (0..nodes.len())
        .flat_map(|i| ((i + 1)..nodes.len()).map(move |j| (i, j)))
        .collect();
    let verdicts: Vec<PairResult> = crate::metric::par_map(pairs, threads, |(i, j)| {
        let d = delta_certified(&nodes[i], &nodes[j])?;
        let v = if d.exact() {
            PairVerdict::Exact {
                value: d.lower,
                certificate: format!(
                    "delta = {} ({} lower / {} upper)",
                    d.lower,
                    d.lower_cert.kind(),
                    d.upper_cert.kind()
                ),
            }
        } else {
            PairVerdict::Uncertified
        };
        Ok(((i, j), v))
    });
    let mut map = std::collections::BTreeMap::new();
    for v in verdicts {
        let ((i, j), verdict) = v?;
        map.insert((i, j), verdict);
    }
    let labels: Vec<String> = nodes.iter().map(|n| n.label()).collect();
    Ok(build_rips(&labels, |i, j| {
        map.get(&(i, j)).cloned().expect("all pairs evaluated")
    }))
}

/// The twist-knot clique: pairwise distance-one is supplied by the geometric
/// unknotting argument (a crossing change each way gives a singular disk,
/// tubed to an embedded torus), imported as an axiom; distinctness of the
/// classes is certified by their pairwise distinct signature jump cosines.
pub fn twist_clique(ns: &[u32]) -> Result<RipsComplex, Error> {
    let mut seen = std::collections::BTreeSet::new();
    for n in ns {
        if !seen.insert(*n) {
            return Err(Error::DuplicateTwist(*n));
        }
    }
    let cosines: Vec<_> = ns
        .iter()
        .map(|n| twist_jump_cosine(*n))
        .collect::<Result<Vec<_>, _>>()?;
    let labels: Vec<String> = ns.iter().map(|n| format!("W({n})")).collect();
    Ok(build_rips(&labels, |i, j| PairVerdict::IsOne {
        certificate: format!(
            "axiom: one positive and one negative crossing change give a genus-one \
             cobordism (distance <= 1); jump cosines {} != {} separate the classes \
             (distance >= 1)",
            cosines[i], cosines[j]
        ),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::{Generator, KnotCombo};

    #[test]
    fn torus_three_simplex() {
        // T(2,3), T(2,5), T(2,7), T(2,3) + T(2,5): one maximal 3-simplex.
        let mut sum = KnotCombo::new();
        sum.insert(Generator::Torus { m: 1 }, 1);
        sum.insert(Generator::Torus { m: 2 }, 1);
        let nodes = vec![
            ClassNode::torus(1).unwrap(),
            ClassNode::torus(2).unwrap(),
            ClassNode::torus(3).unwrap(),
            ClassNode::new(sum).unwrap(),
        ];
        let complex = build_rips_for_combos(&nodes, 1).unwrap();
        assert!(complex.uncertified_pairs.is_empty());
        assert_eq!(complex.maximal_simplices, vec![vec![0, 1, 2, 3]]);
        assert_eq!(complex.dimension(), Some(3));
    }

    #[test]
    fn single_vertex() {
        let nodes = vec![ClassNode::torus(4).unwrap()];
        let complex = build_rips_for_combos(&nodes, 1).unwrap();
        assert_eq!(complex.maximal_simplices, vec![vec![0]]);
        assert_eq!(complex.dimension(), Some(0));
    }

    #[test]
    fn torus_edges_match_radius_one_balls() {
        let nodes: Vec<ClassNode> = (1..=10).map(|m| ClassNode::torus(m).unwrap()).collect();
        let complex = build_rips_for_combos(&nodes, 1).unwrap();
        let mut expected = Vec::new();
        for m in 1..=10u32 {
            let ball = crate::metric::ball_radius_one(m, 10, 1).unwrap();
            for q in ball {
                let mm = (q - 1) / 2;
                if mm > m {
                    expected.push((m as usize - 1, mm as usize - 1));
                }
            }
        }
        let got: Vec<(usize, usize)> = complex.edges.iter().map(|e| (e.a, e.b)).collect();
        assert_eq!(got, expected);

        // Clique-complex closure: every pair inside a maximal simplex is an
        // edge, and no maximal simplex contains another.
        let edge_set: std::collections::BTreeSet<(usize, usize)> = got.into_iter().collect();
        for s in &complex.maximal_simplices {
            for (pos, i) in s.iter().enumerate() {
                for j in &s[pos + 1..] {
                    assert!(s.len() == 1 || edge_set.contains(&(*i, *j)));
                }
            }
            for other in &complex.maximal_simplices {
                if s != other {
                    assert!(!s.iter().all(|v| other.contains(v)));
                }
            }
        }
    }

    #[test]
    fn vertex_order_is_immaterial() {
        let a: Vec<ClassNode> = (1..=6).map(|m| ClassNode::torus(m).unwrap()).collect();
        let mut b = a.clone();
        b.reverse();
        let ca = build_rips_for_combos(&a, 1).unwrap();
        let cb = build_rips_for_combos(&b, 1).unwrap();
        let as_labels = |c: &RipsComplex| -> Vec<Vec<String>> {
            let mut out: Vec<Vec<String>> = c
                .maximal_simplices
                .iter()
                .map(|s| {
                    let mut names: Vec<String> = s.iter().map(|i| c.vertices[*i].clone()).collect();
                    names.sort();
                    names
                })
                .collect();
            out.sort();
            out
        };
        assert_eq!(as_labels(&ca), as_labels(&cb));
    }

    #[test]
    fn twist_cliques() {
        let ns: Vec<u32> = (1..=11).collect();
        let c = twist_clique(&ns).unwrap();
        assert_eq!(c.dimension(), Some(10));
        assert_eq!(c.maximal_simplices.len(), 1);
        assert!(c.edges.iter().all(|e| e.certificate.contains("axiom")));

        let c = twist_clique(&[1]).unwrap();
        assert_eq!(c.dimension(), Some(0));

        assert_eq!(twist_clique(&[2, 2]), Err(Error::DuplicateTwist(2)));
        assert!(twist_clique(&[0]).is_err());
    }

    #[test]
    fn dimension_scales_with_parameter_count() {
        for d in 1..=6usize {
            let ns: Vec<u32> = (1..=d as u32 + 1).collect();
            assert_eq!(twist_clique(&ns).unwrap().dimension(), Some(d));
        }
    }

    #[test]
    fn json_export_shape() {
        let c = twist_clique(&[1, 2]).unwrap();
        let json = c.to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!(v["vertices"].is_array());
        assert!(v["edges"].is_array());
        assert!(v["maximal_simplices"].is_array());
    }
}
