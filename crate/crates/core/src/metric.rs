//! The Ruzsa metric on subgroups: `e(A,B) = [A:A∩B][B:A∩B]`, the lattice
//! graph weighted by indices, geodesics, and the conjugation action.

use crate::error::Result;
use crate::group::GroupTable;
use crate::set::ElementSet;
use crate::subgroup::{centre, enumerate_subgroups, normalizer, second_centre, Subgroup, SubgroupLattice};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// `[A:A∩B][B:A∩B]`, the exponential of the distance.
pub fn e_distance(a: &Subgroup, b: &Subgroup) -> usize {
    let i = a.members().intersection(b.members()).count();
    (a.order() / i) * (b.order() / i)
}

/// `e(A,C) e(C,B) = e(A,B)`.
pub fn is_triangle_tight(a: &Subgroup, b: &Subgroup, c: &Subgroup) -> bool {
    e_distance(a, c) * e_distance(c, b) == e_distance(a, b)
}

/// `A∩B ⊆ C` and `C = (C∩A)(C∩B)`.
pub fn structural_tightness(g: &GroupTable, a: &Subgroup, b: &Subgroup, c: &Subgroup) -> bool {
    let ab = a.members().intersection(b.members());
    if !ab.is_subset(c.members()) {
        return false;
    }
    let ca = c.members().intersection(a.members());
    let cb = c.members().intersection(b.members());
    g.product_set(&ca, &cb) == *c.members()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: usize,
    pub order: usize,
    pub members: Vec<usize>,
}

/// `lower` is maximal in `upper`, with weight `[upper:lower]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub upper: usize,
    pub lower: usize,
    pub index: usize,
}

/// Subgroups joined by maximal inclusions. Vertex ids follow the lattice
/// order (by order, then members).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl LatticeGraph {
    /// Maximal subgroups of `v`, ascending ids.
    pub fn maximal_below(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |e| e.upper == v).map(|e| e.lower)
    }

    pub fn edge_index(&self, x: usize, y: usize) -> Option<usize> {
        self.edges
            .iter()
            .find(|e| (e.upper == x && e.lower == y) || (e.upper == y && e.lower == x))
            .map(|e| e.index)
    }

    /// Product of edge weights along a path.
    pub fn path_weight(&self, path: &[usize]) -> Option<usize> {
        path.windows(2).try_fold(1, |acc, w| self.edge_index(w[0], w[1]).map(|i| acc * i))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<LatticeGraph> {
        serde_json::from_str(text).map_err(|e| crate::Error::parse(e.line(), e.to_string()))
    }

    /// DOT, optionally coloring vertices by orbit.
    pub fn to_dot(&self, action: Option<&ActionReport>) -> String {
        let mut out = String::from("graph lattice {\n  node [shape=box];\n");
        let orbit_of = |v: usize| action.and_then(|a| a.orbits.iter().position(|o| o.contains(&v)));
        for v in &self.vertices {
            let members: Vec<String> = v.members.iter().map(|m| m.to_string()).collect();
            let _ = write!(out, "  v{} [label=\"{} | order {} | {{{}}}\"", v.id, v.id, v.order, members.join(","));
            if let Some(o) = orbit_of(v.id) {
                let _ = write!(out, ", colorscheme=set312, style=filled, fillcolor={}", o % 12 + 1);
            }
            out.push_str("];\n");
        }
        for e in &self.edges {
            let _ = writeln!(out, "  v{} -- v{} [label=\"{}\"];", e.upper, e.lower, e.index);
        }
        out.push_str("}\n");
        out
    }
}

/// The lattice graph, with edges sorted by `(upper, lower)`.
pub fn build_graph(g: &GroupTable) -> Result<(SubgroupLattice, LatticeGraph)> {
    let lat = enumerate_subgroups(g)?;
    let graph = graph_of(&lat);
    Ok((lat, graph))
}

pub fn graph_of(lat: &SubgroupLattice) -> LatticeGraph {
    let subs = lat.subgroups();
    let vertices = subs
        .iter()
        .enumerate()
        .map(|(id, h)| Vertex {
            id,
            order: h.order(),
            members: h.members().to_vec(),
        })
        .collect();
    let below = |a: usize, b: usize| {
        subs[b].order() < subs[a].order() && subs[a].order().is_multiple_of(subs[b].order()) && subs[b].members().is_subset(subs[a].members())
    };
    let mut edges = Vec::new();
    for a in 0..subs.len() {
        let proper: Vec<usize> = (0..a).filter(|&b| below(a, b)).collect();
        for &b in &proper {
            if !proper.iter().any(|&c| c != b && below(c, b)) {
                edges.push(Edge {
                    upper: a,
                    lower: b,
                    index: subs[a].order() / subs[b].order(),
                });
            }
        }
    }
    LatticeGraph { vertices, edges }
}

/// From `A` down a maximal chain to `A∩B`, then up to `B`; at each step the
/// smallest-id maximal subgroup containing `A∩B`.
pub fn geodesic(lat: &SubgroupLattice, graph: &LatticeGraph, a: usize, b: usize) -> Vec<usize> {
    let meet = lat.get(a).members().intersection(lat.get(b).members());
    let m = lat.id_of(&meet).expect("intersection of subgroups is a subgroup");
    let descend = |from: usize| {
        let mut chain = vec![from];
        let mut cur = from;
        while cur != m {
            cur = graph
                .maximal_below(cur)
                .filter(|&v| meet.is_subset(lat.get(v).members()))
                .min()
                .expect("a maximal subgroup over the meet");
            chain.push(cur);
        }
        chain
    };
    let mut path = descend(a);
    let mut up = descend(b);
    up.pop();
    path.extend(up.into_iter().rev());
    path
}

/// The conjugation action of `G` on its subgroups.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ActionReport {
    /// `permutations[g][v]` is the id of `gHg^-1` for `H` = vertex `v`.
    pub permutations: Vec<Vec<usize>>,
    pub orbits: Vec<Vec<usize>>,
    /// Intersection of all normalizers.
    pub kernel: Vec<usize>,
    pub faithful: bool,
    pub centre: Vec<usize>,
    pub second_centre: Vec<usize>,
}

impl ActionReport {
    /// Kernel inside the second centre.
    pub fn kernel_in_second_centre(&self) -> bool {
        self.kernel.iter().all(|k| self.second_centre.contains(k))
    }
}

pub fn conjugation_action(g: &GroupTable, lat: &SubgroupLattice) -> ActionReport {
    let n = g.order();
    let permutations: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            lat.iter()
                .map(|h| lat.id_of(&g.conjugate_set(h.members(), x)).expect("conjugate subgroup"))
                .collect()
        })
        .collect();
    let mut kernel = ElementSet::full(n);
    for h in lat.iter() {
        kernel.intersect_with(normalizer(g, h).members());
    }
    debug_assert!(kernel
        .iter()
        .all(|x| permutations[x].iter().enumerate().all(|(v, &w)| v == w)));
    let mut orbit_id = vec![usize::MAX; lat.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for v in 0..lat.len() {
        if orbit_id[v] != usize::MAX {
            continue;
        }
        let mut orbit: Vec<usize> = permutations.iter().map(|p| p[v]).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &w in &orbit {
            orbit_id[w] = orbits.len();
        }
        orbits.push(orbit);
    }
    ActionReport {
        permutations,
        orbits,
        faithful: kernel.count() == 1,
        kernel: kernel.to_vec(),
        centre: centre(g).members().to_vec(),
        second_centre: second_centre(g).members().to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{by_name, cyclic, symmetric};

    fn transposition_subgroups(g: &GroupTable, lat: &SubgroupLattice) -> (usize, usize, usize) {
        let find = |name: &str| {
            let x = g.index_of_name(name).unwrap();
            lat.id_of(&g.set_of([0, x])).unwrap()
        };
        let a3 = lat.iter().position(|h| h.order() == 3).unwrap();
        (find("(0 1)"), find("(0 2)"), a3)
    }

    #[test]
    fn distances() {
        let s3 = symmetric(3);
        let lat = enumerate_subgroups(&s3).unwrap();
        let (a, b, c) = transposition_subgroups(&s3, &lat);
        let (a, b, c) = (lat.get(a), lat.get(b), lat.get(c));
        assert_eq!(e_distance(a, a), 1);
        assert_eq!(e_distance(a, b), 4);
        assert_eq!(e_distance(a, c) * e_distance(c, b), 36);
        assert!(!is_triangle_tight(a, b, c));
        assert!(!structural_tightness(&s3, a, b, c));
        let whole = lat.get(lat.len() - 1);
        assert_eq!(e_distance(whole, c), 2);
        assert!(is_triangle_tight(a, c, a));
    }

    #[test]
    fn graphs() {
        let (lat, g) = build_graph(&cyclic(2)).unwrap();
        assert_eq!((lat.len(), g.edges.len(), g.edges[0].index), (2, 1, 2));
        let s3 = symmetric(3);
        let (lat, graph) = build_graph(&s3).unwrap();
        assert_eq!((graph.vertices.len(), graph.edges.len()), (6, 8));
        let (a, b, _) = transposition_subgroups(&s3, &lat);
        let path = geodesic(&lat, &graph, a, b);
        assert_eq!(path, vec![a, 0, b]);
        assert_eq!(graph.path_weight(&path), Some(4));
        assert_eq!(geodesic(&lat, &graph, a, a), vec![a]);
        let back = LatticeGraph::from_json(&graph.to_json()).unwrap();
        assert_eq!(back, graph);
        assert!(graph.to_dot(None).starts_with("graph lattice {"));
    }

    #[test]
    fn actions() {
        let s3 = symmetric(3);
        let lat = enumerate_subgroups(&s3).unwrap();
        let r = conjugation_action(&s3, &lat);
        assert_eq!((r.kernel.clone(), r.faithful), (vec![0], true));
        assert_eq!(r.orbits.len(), 4);
        let q8 = by_name("Q8").unwrap();
        let r = conjugation_action(&q8, &enumerate_subgroups(&q8).unwrap());
        assert_eq!(r.kernel.len(), 8);
        assert!(!r.faithful && r.kernel_in_second_centre());
        let c6 = cyclic(6);
        let r = conjugation_action(&c6, &enumerate_subgroups(&c6).unwrap());
        assert_eq!(r.kernel.len(), 6);
    }
}
