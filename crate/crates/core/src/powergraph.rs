//! Directed power graphs.
//!
//! The directed graph has an edge `g -> h` whenever `h` is a power of `g`
//! other than `g` itself. Its undirected edges are the mutually directed
//! pairs, which are exactly the pairs of distinct elements generating the
//! same cyclic subgroup; a vertex `g` lies on `phi(o(g)) - 1` of them.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::groups::{FiniteGroup, GroupError};

#[derive(Clone, Debug)]
pub struct PowerGraph<'g> {
    group: &'g FiniteGroup,
    directed: Vec<(usize, usize)>,
    undirected: Vec<(usize, usize)>,
    degree: Vec<usize>,
}

/// JSON form: `{ "group", "n", "directed", "undirected" }` with sorted pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerGraphJson {
    pub group: String,
    pub n: usize,
    pub directed: Vec<[usize; 2]>,
    pub undirected: Vec<[usize; 2]>,
}

impl<'g> PowerGraph<'g> {
    pub fn build(group: &'g FiniteGroup) -> Self {
        let n = group.order();
        let mut directed = Vec::new();
        // membership[g] marks <g>; only used to derive the mutual pairs
        let mut membership: Vec<Vec<bool>> = Vec::with_capacity(n);
        for g in group.elements() {
            let powers = group.cyclic_powers(g);
            let mut mask = vec![false; n];
            for &h in &powers {
                mask[h] = true;
                if h != g {
                    directed.push((g, h));
                }
            }
            membership.push(mask);
        }
        directed.sort_unstable();
        let undirected: Vec<(usize, usize)> = directed
            .iter()
            .copied()
            .filter(|&(g, h)| g < h && membership[h][g])
            .collect();
        let mut degree = vec![0; n];
        for &(g, h) in &undirected {
            degree[g] += 1;
            degree[h] += 1;
        }
        PowerGraph {
            group,
            directed,
            undirected,
            degree,
        }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    /// Sorted `(source, target)` pairs.
    pub fn directed_edges(&self) -> &[(usize, usize)] {
        &self.directed
    }

    /// Sorted `(g, h)` pairs with `g < h`.
    pub fn undirected_edges(&self) -> &[(usize, usize)] {
        &self.undirected
    }

    pub fn directed_edge_count(&self) -> usize {
        self.directed.len()
    }

    pub fn undirected_edge_count(&self) -> usize {
        self.undirected.len()
    }

    pub fn has_directed_edge(&self, g: usize, h: usize) -> bool {
        self.directed.binary_search(&(g, h)).is_ok()
    }

    pub fn undirected_degree(&self, g: usize) -> Result<usize, GroupError> {
        self.group.check_element(g)?;
        Ok(self.degree[g])
    }

    pub fn to_json_doc(&self) -> PowerGraphJson {
        PowerGraphJson {
            group: self.group.name().to_string(),
            n: self.group.order(),
            directed: self.directed.iter().map(|&(a, b)| [a, b]).collect(),
            undirected: self.undirected.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn export_json(&self) -> String {
        serde_json::to_string(&self.to_json_doc()).expect("plain data serializes")
    }

    /// Graphviz digraph: one node line per element, one `a -> b;` line per
    /// directed edge.
    pub fn export_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph \"{}\" {{", escape(self.group.name())).unwrap();
        for g in self.group.elements() {
            writeln!(out, "  {} [label=\"{}\"];", g, escape(&self.group.label(g))).unwrap();
        }
        for &(g, h) in &self.directed {
            writeln!(out, "  {g} -> {h};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl PowerGraphJson {
    pub fn parse(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{abelian, cyclic};

    #[test]
    fn trivial_group_has_no_edges() {
        let g = cyclic(1).unwrap();
        let pg = PowerGraph::build(&g);
        assert_eq!(pg.directed_edge_count(), 0);
        assert_eq!(pg.undirected_edge_count(), 0);
        let dot = pg.export_dot();
        assert_eq!(dot.matches("->").count(), 0);
        assert_eq!(dot.matches("[label=").count(), 1);
    }

    #[test]
    fn c2_has_one_directed_edge() {
        let g = cyclic(2).unwrap();
        let pg = PowerGraph::build(&g);
        assert_eq!(pg.directed_edges(), &[(1, 0)]);
        assert_eq!(pg.undirected_edge_count(), 0);
        let dot = pg.export_dot();
        let edge_lines: Vec<&str> = dot.lines().filter(|l| l.contains("->")).collect();
        assert_eq!(edge_lines, vec!["  1 -> 0;"]);
    }

    #[test]
    fn c6_edge_counts() {
        let g = cyclic(6).unwrap();
        let pg = PowerGraph::build(&g);
        assert_eq!(pg.undirected_edge_count(), 2);
        assert_eq!(pg.undirected_edges(), &[(1, 5), (2, 4)]);
        assert_eq!(pg.undirected_degree(1).unwrap(), 1);
        assert_eq!(pg.undirected_degree(0).unwrap(), 0);
        assert!(pg.undirected_degree(6).is_err());
        let doc = PowerGraphJson::parse(&pg.export_json()).unwrap();
        assert_eq!(doc.undirected.len(), 2);
        assert_eq!(doc.n, 6);
    }

    #[test]
    fn c5_generators_are_pairwise_mutual() {
        let g = cyclic(5).unwrap();
        let pg = PowerGraph::build(&g);
        assert_eq!(pg.undirected_edge_count(), 6);
        for x in 1..5 {
            assert_eq!(pg.undirected_degree(x).unwrap(), 3);
        }
    }

    #[test]
    fn klein_four_has_no_undirected_edges() {
        let g = abelian(&[2, 2]).unwrap();
        assert_eq!(PowerGraph::build(&g).undirected_edge_count(), 0);
    }

    #[test]
    fn json_is_byte_stable() {
        let g = cyclic(4).unwrap();
        let a = PowerGraph::build(&g).export_json();
        let b = PowerGraph::build(&g).export_json();
        assert_eq!(a, b);
        assert_eq!(
            a,
            r#"{"group":"C4","n":4,"directed":[[1,0],[1,2],[1,3],[2,0],[3,0],[3,1],[3,2]],"undirected":[[1,3]]}"#
        );
    }
}
