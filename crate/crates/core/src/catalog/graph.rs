use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::matroid::{BinaryMatrix, Matroid};

/// An edge `(u, v)` labelled by a matroid element id. `u == v` is a loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub u: String,
    pub v: String,
    pub id: String,
}

/// A multigraph given by its labelled edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    pub edges: Vec<Edge>,
}

impl Graph {
    pub fn new<S: AsRef<str>>(edges: &[(S, S, S)]) -> Graph {
        Graph {
            edges: edges
                .iter()
                .map(|(u, v, id)| Edge { u: u.as_ref().into(), v: v.as_ref().into(), id: id.as_ref().into() })
                .collect(),
        }
    }

    /// Vertex names in order of first appearance.
    pub fn vertices(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for e in &self.edges {
            for v in [&e.u, &e.v] {
                if !out.contains(&v.as_str()) {
                    out.push(v);
                }
            }
        }
        out
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    /// Cycle matroid, represented by the vertex-edge incidence matrix over GF(2).
    pub fn cycle_matroid(&self) -> Result<Matroid> {
        if self.edges.is_empty() {
            return input("a graph needs at least one edge");
        }
        let verts = self.vertices();
        let ids: Vec<&str> = self.edges.iter().map(|e| e.id.as_str()).collect();
        let mut rows = vec![0u64; verts.len()];
        for (j, e) in self.edges.iter().enumerate() {
            if e.u == e.v {
                continue;
            }
            let iu = verts.iter().position(|v| *v == e.u).unwrap();
            let iv = verts.iter().position(|v| *v == e.v).unwrap();
            rows[iu] |= 1 << j;
            rows[iv] |= 1 << j;
        }
        Matroid::from_binary(&ids, BinaryMatrix::new(ids.len(), rows))
    }

    /// Walk the cycle formed by the edges `ids` (which must be the edge set of a cycle)
    /// and return the ids in traversal order.
    pub fn walk_cycle(&self, ids: &[&str]) -> Option<Vec<String>> {
        let edges: Vec<&Edge> = ids.iter().map(|id| self.edge(id)).collect::<Option<_>>()?;
        if edges.len() == 1 {
            return (edges[0].u == edges[0].v).then(|| vec![edges[0].id.clone()]);
        }
        let mut used = vec![false; edges.len()];
        let mut order = vec![edges[0].id.clone()];
        used[0] = true;
        let start = edges[0].u.as_str();
        let mut at = edges[0].v.as_str();
        while order.len() < edges.len() {
            let (k, e) = edges.iter().enumerate().find(|(k, e)| !used[*k] && (e.u == at || e.v == at))?;
            used[k] = true;
            order.push(e.id.clone());
            at = if e.u == at { &e.v } else { &e.u };
        }
        (at == start).then_some(order)
    }
}
