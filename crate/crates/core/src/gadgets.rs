//! Generators for the gadget graphs: the two-triangle gadget `H(u,v)`, the
//! amplifier `S(z)`, the non-`(1,k)`-colorable composite, and the
//! triangle-attachment reduction from `(0,1)`- to `(0,k)`-coloring.
//!
//! All outputs are compacted to identifiers `0..n` and are byte-for-byte
//! reproducible.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::embedding::{EmbeddingError, PlaneEmbedding};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GadgetError {
    /// The size parameter must be at least 1.
    ZeroK,
    Embedding(EmbeddingError),
}

impl fmt::Display for GadgetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GadgetError::ZeroK => write!(f, "gadget parameter k must be at least 1"),
            GadgetError::Embedding(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for GadgetError {}

impl From<EmbeddingError> for GadgetError {
    fn from(e: EmbeddingError) -> Self {
        GadgetError::Embedding(e)
    }
}

/// A generated graph with named terminal vertices. Terminal names are also
/// attached to the graph as vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetResult {
    pub graph: Graph,
    pub terminals: BTreeMap<String, VertexId>,
    pub embedding: Option<PlaneEmbedding>,
}

impl GadgetResult {
    pub fn terminal(&self, name: &str) -> Option<VertexId> {
        self.terminals.get(name).copied()
    }

    fn from_embedding(emb: PlaneEmbedding) -> Self {
        let (emb, _) = emb.compact();
        let graph = emb.graph().clone();
        let terminals = graph.labels().map(|(v, l)| (String::from(l), v)).collect();
        GadgetResult { graph, terminals, embedding: Some(emb) }
    }
}

// Vertex order u, a, b, d, c, v.
const HUV_NAMES: [&str; 6] = ["u", "a", "b", "d", "c", "v"];
const HUV_EDGES: [(usize, usize); 7] = [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)];
const HUV_COORDS: [(i64, i64); 6] = [(0, 0), (2, 2), (2, -2), (5, -2), (5, 2), (7, 0)];

fn huv_embedding() -> PlaneEmbedding {
    let mut g = Graph::from_edges(6, &HUV_EDGES).expect("static edge list");
    for (i, name) in HUV_NAMES.iter().enumerate() {
        g.set_label(VertexId(i as u32), *name).expect("distinct names");
    }
    let coords = HUV_COORDS
        .iter()
        .enumerate()
        .map(|(i, &p)| (VertexId(i as u32), p))
        .collect();
    PlaneEmbedding::from_coordinates(g, &coords).expect("straight-line drawing")
}

/// Triangles `u a b` and `d c v` joined by the edge `b d`. With `u` and `v`
/// colored 2 and none of `a, b, c, d` colored 2, no `(1, k)`-coloring exists:
/// `b` would see both `a` and `d` in color 1.
pub fn huv() -> GadgetResult {
    GadgetResult::from_embedding(huv_embedding())
}

type Rotation = BTreeMap<VertexId, Vec<VertexId>>;

/// Disjoint union of rotation systems, with `other` relabelled to fresh ids.
fn absorb(
    graph: &mut Graph,
    rotation: &mut Rotation,
    other: &Graph,
    other_rotation: impl Fn(VertexId) -> Vec<VertexId>,
) -> BTreeMap<VertexId, VertexId> {
    let map = graph.absorb(other);
    for v in other.vertices() {
        rotation.insert(map[&v], other_rotation(v).iter().map(|w| map[w]).collect());
    }
    map
}

/// Graph and rotation of `S(z)`. The rotation at `z` is kept uncanonicalized:
/// its first entry follows the empty eastern gap above the lanes.
fn s_gadget_parts(k: usize) -> Result<(Graph, Rotation), GadgetError> {
    if k == 0 {
        return Err(GadgetError::ZeroK);
    }
    let copies = 2 * k + 1;
    let mut g = Graph::from_edges(4, &[(1, 2), (2, 3)]).expect("static edge list");
    let z = VertexId(0);
    let xs = [VertexId(1), VertexId(2), VertexId(3)];
    g.set_label(z, "z").unwrap();
    for (j, &x) in xs.iter().enumerate() {
        g.set_label(x, format!("x{}", j + 1)).unwrap();
    }
    let mut rotation = Rotation::new();
    let base = huv_embedding();
    let [u, a, b, d, c, v] = [0, 1, 2, 3, 4, 5].map(VertexId);

    // Copies are laid out as lanes from z (top) down to x_j (bottom), with
    // x_1, x_2, x_3 left to right. Clockwise at z the lanes run east to west:
    // group x_3 first, lane 1 of each group outermost east. At x_j the
    // clockwise order is the east path neighbor, the west one, then the
    // lanes from west to east.
    let mut at_z: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
    let mut at_x: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
    let mut pending: Vec<(usize, VertexId, VertexId)> = Vec::new();
    for j in 0..3 {
        for _ in 0..copies {
            let map = absorb(&mut g, &mut rotation, base.graph(), |x| base.rotation(x).to_vec());
            at_z.entry(j).or_default().extend([map[&a], map[&b]]);
            at_x.entry(j).or_default().splice(0..0, [map[&d], map[&c]]);
            pending.push((j, map[&u], map[&v]));
        }
    }
    for &(j, cu, cv) in &pending {
        g = g.identify(z, cu).expect("copy terminal exists");
        g = g.identify(xs[j], cv).expect("copy terminal exists");
        rotation.remove(&cu);
        rotation.remove(&cv);
        for rot in rotation.values_mut() {
            for w in rot.iter_mut() {
                if *w == cu {
                    *w = z;
                } else if *w == cv {
                    *w = xs[j];
                }
            }
        }
    }
    rotation.insert(z, (0..3).rev().flat_map(|j| at_z[&j].clone()).collect());
    for (j, &x) in xs.iter().enumerate() {
        let mut rot = Vec::new();
        if j + 1 < 3 {
            rot.push(xs[j + 1]);
        }
        if j > 0 {
            rot.push(xs[j - 1]);
        }
        rot.extend(at_x[&j].iter().copied());
        rotation.insert(x, rot);
    }
    Ok((g, rotation))
}

/// `z`, a path `x1 x2 x3`, and for each `j` in `1..=3`, `2k + 1` copies of
/// `H(u,v)` with `u` identified to `z` and `v` to `x_j`. Copies are generated
/// `j`-major. `4 + 12(2k + 1)` vertices.
pub fn s_gadget(k: usize) -> Result<GadgetResult, GadgetError> {
    let (g, rotation) = s_gadget_parts(k)?;
    Ok(GadgetResult::from_embedding(PlaneEmbedding::new(g, rotation)?))
}

/// Three copies of `S(z)` joined by the path `z1 z2 z3`. Not
/// `(1, k)`-colorable.
pub fn non_1k(k: usize) -> Result<GadgetResult, GadgetError> {
    let (s, s_rotation) = s_gadget_parts(k)?;
    let mut g = Graph::new();
    let mut rotation = Rotation::new();
    let mut zs = Vec::new();
    let z = s.vertex_by_label("z").expect("S(z) has terminal z");
    for m in 1..=3 {
        let map = absorb(&mut g, &mut rotation, &s, |x| s_rotation[&x].clone());
        g.set_label(map[&z], format!("z{m}")).unwrap();
        zs.push(map[&z]);
    }
    // z1 z2 z3 run left to right above their copies: at z_m the east
    // neighbor comes first clockwise, the west neighbor last.
    for m in 0..3 {
        let rot = rotation.get_mut(&zs[m]).unwrap();
        if m + 1 < 3 {
            g.add_edge(zs[m], zs[m + 1]).unwrap();
            rot.insert(0, zs[m + 1]);
        }
        if m > 0 {
            rot.push(zs[m - 1]);
        }
    }
    Ok(GadgetResult::from_embedding(PlaneEmbedding::new(g, rotation)?))
}

/// Attaches `k - 1` pendant triangles `v v' v''` at every vertex `v`, in
/// vertex order. `|V| (2k - 1)` vertices; labels of `g` carry over as
/// terminals.
pub fn np_reduce(g: &Graph, k: usize) -> Result<GadgetResult, GadgetError> {
    if k == 0 {
        return Err(GadgetError::ZeroK);
    }
    let mut h = g.clone();
    let originals: Vec<VertexId> = g.vertices().collect();
    for &v in &originals {
        for _ in 1..k {
            let a = h.add_vertex();
            let b = h.add_vertex();
            h.add_edge(v, a).unwrap();
            h.add_edge(v, b).unwrap();
            h.add_edge(a, b).unwrap();
        }
    }
    let (graph, _) = h.compact();
    let terminals = graph.labels().map(|(v, l)| (String::from(l), v)).collect();
    Ok(GadgetResult { graph, terminals, embedding: None })
}

/// [`np_reduce`] on an embedded graph; each triangle is inserted into a
/// corner at its vertex. Same graph and numbering as [`np_reduce`].
pub fn np_reduce_embedded(emb: &PlaneEmbedding, k: usize) -> Result<GadgetResult, GadgetError> {
    if k == 0 {
        return Err(GadgetError::ZeroK);
    }
    let triangle = {
        let t = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        PlaneEmbedding::from_coordinates(
            t,
            &[(0u32, (0i64, 0i64)), (1, (1, 2)), (2, (2, 0))]
                .into_iter()
                .map(|(i, p)| (VertexId(i), p))
                .collect(),
        )?
    };
    let originals: Vec<VertexId> = emb.graph().vertices().collect();
    let mut out = emb.clone();
    for &v in &originals {
        for _ in 1..k {
            out = out.glue(v, &triangle, VertexId(0))?.0;
        }
    }
    Ok(GadgetResult::from_embedding(out))
}
