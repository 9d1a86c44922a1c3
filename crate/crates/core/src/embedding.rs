//! Rotation systems and face tracing.
//!
//! A [`PlaneEmbedding`] stores, for every vertex, the clockwise cyclic order
//! of its neighbors. Faces are recovered by walking darts: after arriving at
//! `v` along `u -> v`, the walk leaves along `v -> w` where `w` follows `u`
//! in the rotation at `v`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::graph::{Graph, GraphError, VertexId};

/// A directed edge `(tail, head)`.
pub type Dart = (VertexId, VertexId);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    MissingRotation(VertexId),
    UnknownVertex(VertexId),
    /// The rotation at this vertex is not a permutation of its neighbors.
    BadRotation(VertexId),
    Disconnected,
    Empty,
    /// The rotation system does not describe a genus-0 embedding.
    NotPlanar { euler: i64 },
    Graph(GraphError),
}

impl fmt::Display for EmbeddingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbeddingError::MissingRotation(v) => write!(f, "no rotation given for vertex {v}"),
            EmbeddingError::UnknownVertex(v) => write!(f, "rotation given for unknown vertex {v}"),
            EmbeddingError::BadRotation(v) => {
                write!(f, "rotation at vertex {v} must list each neighbor exactly once")
            }
            EmbeddingError::Disconnected => write!(f, "embedding graph is disconnected"),
            EmbeddingError::Empty => write!(f, "embedding graph has no vertices"),
            EmbeddingError::NotPlanar { euler } => {
                write!(f, "rotation system fails Euler's formula (V - E + F = {euler})")
            }
            EmbeddingError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for EmbeddingError {}

impl From<GraphError> for EmbeddingError {
    fn from(e: GraphError) -> Self {
        EmbeddingError::Graph(e)
    }
}

/// A face as a closed boundary walk. A vertex met at several corners appears
/// once per corner, and the degree is the walk length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.darts.len()
    }

    /// Corner vertices in walk order (the tail of each dart).
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.darts.iter().map(|&(t, _)| t)
    }

    pub fn occurrences(&self, v: VertexId) -> usize {
        self.vertices().filter(|&x| x == v).count()
    }

    /// True when no vertex repeats along the walk.
    pub fn is_simple(&self) -> bool {
        let set: BTreeSet<_> = self.vertices().collect();
        set.len() == self.darts.len()
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.vertices().collect()
    }
}

/// Opaque face index into the list returned by [`PlaneEmbedding::trace_faces`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceId(pub usize);

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneEmbedding {
    graph: Graph,
    rotation: BTreeMap<VertexId, Vec<VertexId>>,
}

fn canonical_cycle(mut order: Vec<VertexId>) -> Vec<VertexId> {
    if let Some(pos) = order.iter().enumerate().min_by_key(|(_, v)| **v).map(|(i, _)| i) {
        order.rotate_left(pos);
    }
    order
}

/// Clockwise comparison of direction vectors, starting from the positive x
/// axis with y pointing up.
fn clockwise(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |(x, y): (i64, i64)| u8::from(!(y < 0 || (y == 0 && x > 0)));
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 * b.1 - a.1 * b.0;
        // b clockwise of a means a negative cross product, so a sorts first
        cross.cmp(&0)
    })
}

impl PlaneEmbedding {
    /// Validates that every vertex has a rotation listing each of its
    /// neighbors exactly once. Rotations are stored starting at the smallest
    /// neighbor; the cyclic order is unchanged.
    pub fn new(
        graph: Graph,
        rotation: BTreeMap<VertexId, Vec<VertexId>>,
    ) -> Result<Self, EmbeddingError> {
        for v in rotation.keys() {
            if !graph.contains(*v) {
                return Err(EmbeddingError::UnknownVertex(*v));
            }
        }
        let mut canon = BTreeMap::new();
        for v in graph.vertices() {
            let order = rotation.get(&v).ok_or(EmbeddingError::MissingRotation(v))?;
            let listed: BTreeSet<_> = order.iter().copied().collect();
            if listed.len() != order.len() || Some(&listed) != graph.neighbor_set(v) {
                return Err(EmbeddingError::BadRotation(v));
            }
            canon.insert(v, canonical_cycle(order.clone()));
        }
        Ok(PlaneEmbedding { graph, rotation: canon })
    }

    /// Rotation system read off a straight-line drawing with integer
    /// coordinates.
    pub fn from_coordinates(
        graph: Graph,
        coords: &BTreeMap<VertexId, (i64, i64)>,
    ) -> Result<Self, EmbeddingError> {
        let mut rotation = BTreeMap::new();
        for v in graph.vertices() {
            let p = *coords.get(&v).ok_or(EmbeddingError::MissingRotation(v))?;
            let mut ns: Vec<VertexId> = graph.neighbors(v).collect();
            for w in &ns {
                if !coords.contains_key(w) {
                    return Err(EmbeddingError::MissingRotation(*w));
                }
            }
            ns.sort_by(|a, b| {
                let pa = coords[a];
                let pb = coords[b];
                clockwise((pa.0 - p.0, pa.1 - p.1), (pb.0 - p.0, pb.1 - p.1))
            });
            rotation.insert(v, ns);
        }
        PlaneEmbedding::new(graph, rotation)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        self.rotation.get(&v).map_or(&[], Vec::as_slice)
    }

    /// Neighbor following `u` in the rotation at `v`.
    fn successor(&self, v: VertexId, u: VertexId) -> VertexId {
        let rot = &self.rotation[&v];
        let i = rot.iter().position(|&x| x == u).expect("dart in rotation");
        rot[(i + 1) % rot.len()]
    }

    /// Faces by boundary walk. Walks start from the smallest unused dart, so
    /// the order is deterministic. A lone vertex has one face of degree 0.
    pub fn trace_faces(&self) -> Vec<Face> {
        if self.graph.edge_count() == 0 {
            return if self.graph.vertex_count() == 1 {
                alloc::vec![Face { darts: Vec::new() }]
            } else {
                Vec::new()
            };
        }
        let mut used: BTreeSet<Dart> = BTreeSet::new();
        let mut faces = Vec::new();
        for (u, v) in self.darts() {
            if used.contains(&(u, v)) {
                continue;
            }
            let mut darts = Vec::new();
            let mut dart = (u, v);
            while used.insert(dart) {
                darts.push(dart);
                let (a, b) = dart;
                dart = (b, self.successor(b, a));
            }
            faces.push(Face { darts });
        }
        faces
    }

    /// All `2|E|` darts in lexicographic order.
    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        self.graph
            .vertices()
            .flat_map(move |u| self.graph.neighbors(u).map(move |v| (u, v)))
    }

    /// `V - E + F` for the traced faces.
    pub fn euler_characteristic(&self) -> i64 {
        self.graph.vertex_count() as i64 - self.graph.edge_count() as i64
            + self.trace_faces().len() as i64
    }

    /// True iff `V - E + F = 2`. Disconnected or empty graphs are rejected.
    pub fn check_planarity_certificate(&self) -> Result<bool, EmbeddingError> {
        self.require_connected()?;
        Ok(self.euler_characteristic() == 2)
    }

    pub(crate) fn require_connected(&self) -> Result<(), EmbeddingError> {
        if self.graph.vertex_count() == 0 {
            return Err(EmbeddingError::Empty);
        }
        if !self.graph.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        Ok(())
    }

    /// Connected and genus 0, or the reason it is not.
    pub fn require_plane(&self) -> Result<(), EmbeddingError> {
        if self.check_planarity_certificate()? {
            Ok(())
        } else {
            Err(EmbeddingError::NotPlanar { euler: self.euler_characteristic() })
        }
    }

    /// Identifies `other_at` of `other` with `at` of `self`, inserting the
    /// whole of `other` into one corner at `at`. The rotation at the merged
    /// vertex is `self`'s followed by `other`'s, which keeps genus 0 when
    /// both parts are plane. Returns the map from `other`'s vertices to the
    /// glued graph.
    pub fn glue(
        &self,
        at: VertexId,
        other: &PlaneEmbedding,
        other_at: VertexId,
    ) -> Result<(PlaneEmbedding, BTreeMap<VertexId, VertexId>), EmbeddingError> {
        if !self.graph.contains(at) {
            return Err(EmbeddingError::UnknownVertex(at));
        }
        if !other.graph.contains(other_at) {
            return Err(EmbeddingError::UnknownVertex(other_at));
        }
        let mut g = self.graph.clone();
        let mut map = g.absorb(&other.graph);
        let g = g.identify(at, map[&other_at])?;
        map.insert(other_at, at);
        let mut rotation = self.rotation.clone();
        for (v, rot) in &other.rotation {
            let mapped = rot.iter().map(|w| map[w]);
            if *v == other_at {
                rotation.get_mut(&at).unwrap().extend(mapped);
            } else {
                rotation.insert(map[v], mapped.collect());
            }
        }
        Ok((PlaneEmbedding::new(g, rotation)?, map))
    }

    /// Renumbers vertices to `0..n` preserving order.
    pub fn compact(&self) -> (PlaneEmbedding, BTreeMap<VertexId, VertexId>) {
        let (g, map) = self.graph.compact();
        let rotation = self
            .rotation
            .iter()
            .map(|(v, rot)| (map[v], rot.iter().map(|w| map[w]).collect()))
            .collect();
        (PlaneEmbedding::new(g, rotation).expect("relabelled rotation stays valid"), map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn coords(pts: &[(i64, i64)]) -> BTreeMap<VertexId, (i64, i64)> {
        pts.iter().enumerate().map(|(i, &p)| (v(i as u32), p)).collect()
    }

    fn k3() -> PlaneEmbedding {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        PlaneEmbedding::from_coordinates(g, &coords(&[(0, 0), (2, 0), (1, 2)])).unwrap()
    }

    #[test]
    fn triangle_has_two_three_faces() {
        let faces = k3().trace_faces();
        assert_eq!(faces.iter().map(Face::degree).collect::<Vec<_>>(), vec![3, 3]);
        assert_eq!(k3().check_planarity_certificate(), Ok(true));
    }

    #[test]
    fn hexagon_has_two_six_faces() {
        let edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let g = Graph::from_edges(6, &edges).unwrap();
        let e = PlaneEmbedding::from_coordinates(
            g,
            &coords(&[(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)]),
        )
        .unwrap();
        let faces = e.trace_faces();
        assert_eq!(faces.iter().map(Face::degree).collect::<Vec<_>>(), vec![6, 6]);
    }

    #[test]
    fn pendant_edge_is_walked_twice() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let e = PlaneEmbedding::from_coordinates(g, &coords(&[(0, 0), (2, 0), (1, 2), (-2, 0)]))
            .unwrap();
        let mut degrees: Vec<_> = e.trace_faces().iter().map(Face::degree).collect();
        degrees.sort();
        assert_eq!(degrees, vec![3, 5]);
        let outer = e.trace_faces().into_iter().find(|f| f.degree() == 5).unwrap();
        assert!(!outer.is_simple());
        assert_eq!(outer.occurrences(v(0)), 2);
    }

    #[test]
    fn malformed_rotations_rejected() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let mut rot: BTreeMap<_, _> =
            [(v(0), vec![v(1), v(2)]), (v(1), vec![v(0), v(2)])].into_iter().collect();
        assert_eq!(
            PlaneEmbedding::new(g.clone(), rot.clone()),
            Err(EmbeddingError::MissingRotation(v(2)))
        );
        rot.insert(v(2), vec![v(0), v(0)]);
        assert_eq!(
            PlaneEmbedding::new(g.clone(), rot.clone()),
            Err(EmbeddingError::BadRotation(v(2)))
        );
        rot.insert(v(2), vec![v(0)]);
        assert_eq!(PlaneEmbedding::new(g.clone(), rot.clone()), Err(EmbeddingError::BadRotation(v(2))));
        rot.insert(v(2), vec![v(0), v(1)]);
        rot.insert(v(7), vec![]);
        assert_eq!(PlaneEmbedding::new(g, rot), Err(EmbeddingError::UnknownVertex(v(7))));
    }

    /// Every rotation system of K5 and K3,3, enumerated exhaustively, fails
    /// the Euler check.
    #[test]
    fn nonplanar_graphs_never_certify() {
        fn all_rotations(g: &Graph) -> Vec<BTreeMap<VertexId, Vec<VertexId>>> {
            let mut acc = vec![BTreeMap::new()];
            for x in g.vertices() {
                let ns: Vec<_> = g.neighbors(x).collect();
                let mut orders = Vec::new();
                permute(&ns[1..], &mut vec![ns[0]], &mut orders);
                acc = acc
                    .into_iter()
                    .flat_map(|m| {
                        orders.iter().map(move |o| {
                            let mut m = m.clone();
                            m.insert(x, o.clone());
                            m
                        })
                    })
                    .collect();
            }
            acc
        }
        fn permute(rest: &[VertexId], prefix: &mut Vec<VertexId>, out: &mut Vec<Vec<VertexId>>) {
            if rest.is_empty() {
                out.push(prefix.clone());
                return;
            }
            for i in 0..rest.len() {
                let mut r = rest.to_vec();
                let x = r.remove(i);
                prefix.push(x);
                permute(&r, prefix, out);
                prefix.pop();
            }
        }

        let mut k5 = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                k5.push((i, j));
            }
        }
        let k5 = Graph::from_edges(5, &k5).unwrap();
        let rots = all_rotations(&k5);
        assert_eq!(rots.len(), 6usize.pow(5));
        for r in rots {
            let e = PlaneEmbedding::new(k5.clone(), r).unwrap();
            assert_eq!(e.check_planarity_certificate(), Ok(false));
        }

        let mut k33 = Vec::new();
        for i in 0..3 {
            for j in 3..6 {
                k33.push((i, j));
            }
        }
        let k33 = Graph::from_edges(6, &k33).unwrap();
        for r in all_rotations(&k33) {
            let e = PlaneEmbedding::new(k33.clone(), r).unwrap();
            assert_eq!(e.check_planarity_certificate(), Ok(false));
        }
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let e = PlaneEmbedding::from_coordinates(g, &coords(&[(0, 0), (1, 0), (5, 0), (6, 0)]))
            .unwrap();
        assert_eq!(e.check_planarity_certificate(), Err(EmbeddingError::Disconnected));
    }

    #[test]
    fn glue_keeps_genus_zero() {
        let (bowtie, map) = k3().glue(v(0), &k3(), v(1)).unwrap();
        assert_eq!(map[&v(1)], v(0));
        assert_eq!(bowtie.graph().vertex_count(), 5);
        assert_eq!(bowtie.check_planarity_certificate(), Ok(true));
        let mut degrees: Vec<_> = bowtie.trace_faces().iter().map(Face::degree).collect();
        degrees.sort();
        assert_eq!(degrees, vec![3, 3, 6]);
    }

    #[test]
    fn coordinates_give_clockwise_order() {
        // center 0 with east 1, north 2, west 3, south 4
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let coords = [(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1)]
            .into_iter()
            .enumerate()
            .map(|(i, p)| (VertexId(i as u32), p))
            .collect();
        let e = PlaneEmbedding::from_coordinates(g, &coords).unwrap();
        assert_eq!(e.rotation(VertexId(0)), [1, 4, 3, 2].map(VertexId));
    }

    #[test]
    fn lone_vertex_has_one_empty_face() {
        let e = PlaneEmbedding::new(
            Graph::from_edges(1, &[]).unwrap(),
            [(v(0), vec![])].into_iter().collect(),
        )
        .unwrap();
        assert_eq!(e.trace_faces().len(), 1);
        assert_eq!(e.check_planarity_certificate(), Ok(true));
    }
}
