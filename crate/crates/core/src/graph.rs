//! Simple undirected graphs with stable vertex identifiers.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Opaque, stable vertex identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Longest cycle length accepted by [`Graph::cycles_of_length`].
pub const MAX_CYCLE_LEN: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    IndexOutOfRange { index: usize, n: usize },
    SelfLoop(VertexId),
    MissingVertex(VertexId),
    SameVertex(VertexId),
    DuplicateLabel(String),
    CycleLengthOutOfRange(usize),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::IndexOutOfRange { index, n } => {
                write!(f, "vertex index {index} out of range for {n} vertices")
            }
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::MissingVertex(v) => write!(f, "vertex {v} is not in the graph"),
            GraphError::SameVertex(v) => write!(f, "cannot identify vertex {v} with itself"),
            GraphError::DuplicateLabel(l) => write!(f, "label {l:?} is already in use"),
            GraphError::CycleLengthOutOfRange(l) => {
                write!(f, "cycle length {l} outside supported range 3..={MAX_CYCLE_LEN}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Result of [`Graph::girth`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

/// A simple undirected graph.
///
/// Adjacency is kept symmetric and loop-free; duplicate edges collapse.
/// Vertices may carry unique string labels (used for gadget terminals).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adjacency: BTreeMap<VertexId, BTreeSet<VertexId>>,
    labels: BTreeMap<VertexId, String>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on vertices `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new();
        for i in 0..n {
            g.adjacency.insert(VertexId(i as u32), BTreeSet::new());
        }
        for &(i, j) in edges {
            for index in [i, j] {
                if index >= n {
                    return Err(GraphError::IndexOutOfRange { index, n });
                }
            }
            g.add_edge(VertexId(i as u32), VertexId(j as u32))?;
        }
        Ok(g)
    }

    /// Adds a fresh vertex with the next unused identifier.
    pub fn add_vertex(&mut self) -> VertexId {
        let id = self.next_id();
        self.adjacency.insert(id, BTreeSet::new());
        id
    }

    pub fn insert_vertex(&mut self, v: VertexId) {
        self.adjacency.entry(v).or_default();
    }

    /// Adds the edge `uv`; a repeated edge is a no-op.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.require(u)?;
        self.require(v)?;
        self.adjacency.get_mut(&u).unwrap().insert(v);
        self.adjacency.get_mut(&v).unwrap().insert(u);
        Ok(())
    }

    pub fn set_label(&mut self, v: VertexId, label: impl Into<String>) -> Result<(), GraphError> {
        self.require(v)?;
        let label = label.into();
        if let Some(owner) = self.vertex_by_label(&label) {
            if owner != v {
                return Err(GraphError::DuplicateLabel(label));
            }
        }
        self.labels.insert(v, label);
        Ok(())
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> impl Iterator<Item = (VertexId, &str)> + '_ {
        self.labels.iter().map(|(&v, l)| (v, l.as_str()))
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().find(|(_, l)| l.as_str() == label).map(|(&v, _)| v)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.adjacency.contains_key(&v)
    }

    fn require(&self, v: VertexId) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::MissingVertex(v))
        }
    }

    fn next_id(&self) -> VertexId {
        self.adjacency
            .keys()
            .next_back()
            .map_or(VertexId(0), |v| VertexId(v.0 + 1))
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Vertices in increasing identifier order.
    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = VertexId> + ExactSizeIterator + '_ {
        self.adjacency.keys().copied()
    }

    /// Each edge once as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .flat_map(|(&u, ns)| ns.range(u..).map(move |&v| (u, v)))
    }

    /// Neighbors of `v` in increasing order; empty if `v` is absent.
    pub fn neighbors(&self, v: VertexId) -> impl DoubleEndedIterator<Item = VertexId> + '_ {
        self.adjacency.get(&v).into_iter().flat_map(|ns| ns.iter().copied())
    }

    pub fn neighbor_set(&self, v: VertexId) -> Option<&BTreeSet<VertexId>> {
        self.adjacency.get(&v)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency.get(&u).is_some_and(|ns| ns.contains(&v))
    }

    pub fn is_connected(&self) -> bool {
        let Some(start) = self.vertices().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = alloc::vec![start];
        while let Some(x) = stack.pop() {
            for y in self.neighbors(x) {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.len() == self.vertex_count()
    }

    /// Merges `v` into `u`: the merged vertex keeps `u`'s identifier and the
    /// union of both neighborhoods, minus any loop.
    pub fn identify(&self, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        self.require(u)?;
        self.require(v)?;
        let mut g = self.clone();
        let v_neighbors = g.adjacency.remove(&v).unwrap();
        for w in v_neighbors {
            g.adjacency.get_mut(&w).unwrap().remove(&v);
            if w != u {
                g.adjacency.get_mut(&u).unwrap().insert(w);
                g.adjacency.get_mut(&w).unwrap().insert(u);
            }
        }
        if let Some(label) = g.labels.remove(&v) {
            g.labels.entry(u).or_insert(label);
        }
        Ok(g)
    }

    /// Induced subgraph on all vertices but `v`.
    pub fn delete_vertex(&self, v: VertexId) -> Result<Graph, GraphError> {
        self.require(v)?;
        let mut g = self.clone();
        for w in g.adjacency.remove(&v).unwrap() {
            g.adjacency.get_mut(&w).unwrap().remove(&v);
        }
        g.labels.remove(&v);
        Ok(g)
    }

    /// Copies `other` into `self` under fresh identifiers. Returns the map
    /// from `other`'s identifiers to the new ones. Labels of `other` are
    /// dropped.
    pub fn absorb(&mut self, other: &Graph) -> BTreeMap<VertexId, VertexId> {
        let mut map = BTreeMap::new();
        for v in other.vertices() {
            map.insert(v, self.add_vertex());
        }
        for (a, b) in other.edges() {
            self.add_edge(map[&a], map[&b]).expect("fresh vertices");
        }
        map
    }

    /// Renumbers vertices to `0..n` preserving their relative order.
    pub fn compact(&self) -> (Graph, BTreeMap<VertexId, VertexId>) {
        let map: BTreeMap<VertexId, VertexId> = self
            .vertices()
            .enumerate()
            .map(|(i, v)| (v, VertexId(i as u32)))
            .collect();
        let mut g = Graph::new();
        for &nv in map.values() {
            g.insert_vertex(nv);
        }
        for (a, b) in self.edges() {
            g.add_edge(map[&a], map[&b]).unwrap();
        }
        for (v, l) in &self.labels {
            g.labels.insert(map[v], l.clone());
        }
        (g, map)
    }

    /// Every simple cycle with exactly `len` vertices, once per cycle.
    ///
    /// A cycle is reported starting at its smallest vertex, oriented so the
    /// second vertex is smaller than the last. Output order is lexicographic.
    pub fn cycles_of_length(&self, len: usize) -> Result<Vec<Vec<VertexId>>, GraphError> {
        if !(3..=MAX_CYCLE_LEN).contains(&len) {
            return Err(GraphError::CycleLengthOutOfRange(len));
        }
        let mut out = Vec::new();
        self.walk_cycles(len, &mut |c| {
            out.push(c.to_vec());
            true
        });
        Ok(out)
    }

    fn has_cycle_of_length(&self, len: usize) -> bool {
        let mut found = false;
        self.walk_cycles(len, &mut |_| {
            found = true;
            false
        });
        found
    }

    /// Calls `visit` on each canonical cycle; stops once it returns false.
    fn walk_cycles(&self, len: usize, visit: &mut dyn FnMut(&[VertexId]) -> bool) {
        fn extend(
            g: &Graph,
            len: usize,
            path: &mut Vec<VertexId>,
            on_path: &mut BTreeSet<VertexId>,
            visit: &mut dyn FnMut(&[VertexId]) -> bool,
        ) -> bool {
            let start = path[0];
            let last = *path.last().unwrap();
            if path.len() == len {
                if g.has_edge(last, start) && path[1] < last {
                    return visit(path);
                }
                return true;
            }
            for w in g.neighbors(last) {
                if w <= start || on_path.contains(&w) {
                    continue;
                }
                path.push(w);
                on_path.insert(w);
                let go_on = extend(g, len, path, on_path, visit);
                on_path.remove(&w);
                path.pop();
                if !go_on {
                    return false;
                }
            }
            true
        }

        for s in self.vertices() {
            let mut path = alloc::vec![s];
            let mut on_path = BTreeSet::from([s]);
            if !extend(self, len, &mut path, &mut on_path, visit) {
                return;
            }
        }
    }

    pub fn is_c4c5_free(&self) -> bool {
        !self.has_cycle_of_length(4) && !self.has_cycle_of_length(5)
    }

    /// Length of a shortest cycle, by breadth-first search from every vertex.
    pub fn girth(&self) -> Girth {
        let mut best: Option<usize> = None;
        for root in self.vertices() {
            let mut dist: BTreeMap<VertexId, usize> = BTreeMap::from([(root, 0)]);
            let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
            let mut queue = alloc::collections::VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                let dx = dist[&x];
                if best.is_some_and(|b| 2 * dx + 1 >= b) {
                    break;
                }
                for y in self.neighbors(x) {
                    match dist.get(&y) {
                        None => {
                            dist.insert(y, dx + 1);
                            parent.insert(y, x);
                            queue.push_back(y);
                        }
                        Some(&dy) => {
                            if parent.get(&x) != Some(&y) {
                                let len = dx + dy + 1;
                                if best.is_none_or(|b| len < b) {
                                    best = Some(len);
                                }
                            }
                        }
                    }
                }
            }
        }
        best.map_or(Girth::Infinite, Girth::Finite)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    // u=0, a=1, b=2, d=3, c=4, v=5
    fn huv_skeleton() -> Graph {
        Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap()
    }

    #[test]
    fn make_graph_examples() {
        let k3 = triangle();
        assert_eq!(k3.edge_count(), 3);
        assert!(k3.vertices().all(|x| k3.degree(x) == 2));

        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert_eq!((k1.vertex_count(), k1.degree(v(0))), (1, 0));

        let h = huv_skeleton();
        let degrees: Vec<_> = h.vertices().map(|x| h.degree(x)).collect();
        assert_eq!(degrees, vec![2, 2, 3, 3, 2, 2]);
    }

    #[test]
    fn make_graph_errors_and_duplicates() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::IndexOutOfRange { index: 2, n: 2 })
        );
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(GraphError::SelfLoop(v(1))));
        let g = Graph::from_edges(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn identify_examples() {
        let mut g = triangle();
        let other = g.absorb(&triangle());
        let bowtie = g.identify(v(0), other[&v(0)]).unwrap();
        assert_eq!(bowtie.vertex_count(), 5);
        assert_eq!(bowtie.degree(v(0)), 4);
        assert_eq!(bowtie.edge_count(), 6);

        // disjoint merge adds no edges
        let mut p = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let lone = p.add_vertex();
        let merged = p.identify(v(0), lone).unwrap();
        assert_eq!(merged.edges().collect::<Vec<_>>(), vec![(v(0), v(1))]);

        let k2 = triangle().identify(v(0), v(1)).unwrap();
        assert_eq!(k2.vertices().collect::<Vec<_>>(), vec![v(0), v(2)]);
        assert_eq!(k2.edges().collect::<Vec<_>>(), vec![(v(0), v(2))]);
    }

    #[test]
    fn identify_errors() {
        let g = triangle();
        assert_eq!(g.identify(v(1), v(1)), Err(GraphError::SameVertex(v(1))));
        assert_eq!(g.identify(v(1), v(9)), Err(GraphError::MissingVertex(v(9))));
    }

    #[test]
    fn identify_keeps_labels() {
        let mut g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        g.set_label(v(2), "x").unwrap();
        let m = g.identify(v(0), v(2)).unwrap();
        assert_eq!(m.label(v(0)), Some("x"));
        assert!(g.set_label(v(0), "x").is_err());
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(triangle().cycles_of_length(3).unwrap().len(), 1);
        assert!(cycle(6).cycles_of_length(4).unwrap().is_empty());
        let h = huv_skeleton();
        assert!(h.cycles_of_length(4).unwrap().is_empty());
        assert!(h.cycles_of_length(5).unwrap().is_empty());
        assert_eq!(
            h.cycles_of_length(3).unwrap(),
            vec![vec![v(0), v(1), v(2)], vec![v(3), v(4), v(5)]]
        );
        assert_eq!(h.cycles_of_length(2), Err(GraphError::CycleLengthOutOfRange(2)));
        assert_eq!(h.cycles_of_length(9), Err(GraphError::CycleLengthOutOfRange(9)));
    }

    #[test]
    fn c4c5_examples() {
        assert!(!cycle(4).is_c4c5_free());
        assert!(!cycle(5).is_c4c5_free());
        assert!(cycle(6).is_c4c5_free());
        assert!(huv_skeleton().is_c4c5_free());
    }

    #[test]
    fn girth_examples() {
        let tree = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(tree.girth(), Girth::Infinite);
        assert_eq!(triangle().girth(), Girth::Finite(3));
        let mut c6 = cycle(6);
        let a = c6.add_vertex();
        let b = c6.add_vertex();
        c6.add_edge(v(0), a).unwrap();
        c6.add_edge(a, b).unwrap();
        assert_eq!(c6.girth(), Girth::Finite(6));
        assert_eq!(cycle(7).girth(), Girth::Finite(7));
    }

    #[test]
    fn delete_vertex_examples() {
        let e = triangle().delete_vertex(v(2)).unwrap();
        assert_eq!((e.vertex_count(), e.edge_count()), (2, 1));

        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let leaves = star.delete_vertex(v(0)).unwrap();
        assert_eq!((leaves.vertex_count(), leaves.edge_count()), (3, 0));

        let h = huv_skeleton().delete_vertex(v(2)).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(
            h.edges().collect::<Vec<_>>(),
            vec![(v(0), v(1)), (v(3), v(4)), (v(3), v(5)), (v(4), v(5))]
        );
        assert_eq!(huv_skeleton().delete_vertex(v(7)), Err(GraphError::MissingVertex(v(7))));
    }

    #[test]
    fn compact_renumbers() {
        let g = triangle().identify(v(0), v(1)).unwrap();
        let (c, map) = g.compact();
        assert_eq!(map[&v(2)], v(1));
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(v(0), v(1))]);
    }
}
