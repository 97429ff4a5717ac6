//! Outerplanarity recognition, per-block boundary cycles, bounded faces,
//! boundary/internal edge classification, the weak dual and outerpath face
//! orders.
//!
//! Recognition works per nontrivial block: an edge of a biconnected
//! outerplanar graph is a boundary edge exactly when deleting its two
//! endpoints leaves the block connected. The boundary candidates must form a
//! Hamiltonian cycle and the remaining chords must be pairwise non-crossing
//! in the cyclic order; any violation refuses the graph.

use crate::error::{Error, Result};
use crate::graph::{block_cut_decomposition, edge, BlockDecomposition, Graph, V};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    Boundary,
    Internal,
}

/// A bounded face of the outerplane embedding of one nontrivial block.
#[derive(Debug, Clone)]
pub struct Face {
    /// Cyclic vertex sequence.
    pub vertices: Vec<V>,
    /// Face edges that are internal edges of the graph.
    pub internal_edges: Vec<(V, V)>,
    /// Index of the owning block in the embedding's decomposition.
    pub block: usize,
}

impl Face {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// A leaf face has at most one internal edge.
    pub fn is_leaf(&self) -> bool {
        self.internal_edges.len() <= 1
    }

    /// Face edges in cyclic order (canonical endpoint order).
    pub fn edges(&self) -> Vec<(V, V)> {
        let k = self.vertices.len();
        (0..k)
            .map(|i| edge(self.vertices[i], self.vertices[(i + 1) % k]))
            .collect()
    }

    /// Face edges lying on the outer boundary.
    pub fn boundary_edges(&self) -> Vec<(V, V)> {
        let internal: BTreeSet<(V, V)> = self.internal_edges.iter().copied().collect();
        self.edges()
            .into_iter()
            .filter(|e| !internal.contains(e))
            .collect()
    }
}

/// Outerplane embedding: boundary cycle per nontrivial block, all bounded
/// faces and the boundary/internal classification of every edge.
#[derive(Debug, Clone)]
pub struct OuterplanarEmbedding {
    pub decomposition: BlockDecomposition,
    /// Boundary cycle per nontrivial block, keyed by block index.
    pub boundaries: BTreeMap<usize, Vec<V>>,
    pub faces: Vec<Face>,
    pub edge_class: BTreeMap<(V, V), EdgeClass>,
}

impl OuterplanarEmbedding {
    pub fn faces_of_block(&self, block: usize) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&f| self.faces[f].block == block)
            .collect()
    }

    pub fn internal_edges(&self) -> Vec<(V, V)> {
        self.edge_class
            .iter()
            .filter(|(_, c)| **c == EdgeClass::Internal)
            .map(|(e, _)| *e)
            .collect()
    }
}

/// Weak dual: one node per bounded face, edges between faces sharing an
/// internal edge. A forest for outerplanar graphs.
#[derive(Debug, Clone)]
pub struct WeakDual {
    pub adj: Vec<BTreeSet<usize>>,
    pub shared_edge: BTreeMap<(usize, usize), (V, V)>,
}

impl WeakDual {
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, f: usize) -> usize {
        self.adj[f].len()
    }

    pub fn edge_count(&self) -> usize {
        self.shared_edge.len()
    }
}

/// Face order of an outerpath block: faces F_1..F_n along the dual path,
/// the edges shared by consecutive faces, and a chosen boundary edge of F_n.
#[derive(Debug, Clone)]
pub struct OuterpathOrder {
    pub faces: Vec<usize>,
    /// shared[i] joins faces[i] and faces[i+1].
    pub shared: Vec<(V, V)>,
    /// Chosen boundary edge of the final face.
    pub last_edge: (V, V),
}

/// Decide outerplanarity and produce the embedding, or refuse definitively.
pub fn recognize_outerplanar(g: &Graph) -> Result<OuterplanarEmbedding> {
    let dec = block_cut_decomposition(g);
    let mut boundaries = BTreeMap::new();
    let mut faces: Vec<Face> = Vec::new();
    let mut edge_class: BTreeMap<(V, V), EdgeClass> = BTreeMap::new();
    for (u, v) in g.edges() {
        edge_class.insert(edge(u, v), EdgeClass::Boundary);
    }

    for (bi, block) in dec.blocks.iter().enumerate() {
        if block.len() <= 2 {
            continue;
        }
        let (bg, back) = g.induced(block);
        let nb = bg.n();
        let mb = bg.m();
        if mb > 2 * nb - 3 {
            return Err(Error::NotOuterplanar(format!(
                "block with {nb} vertices has {mb} > 2n-3 edges"
            )));
        }
        // boundary candidates: edges whose endpoint deletion keeps the block connected
        let mut boundary_local: BTreeSet<(V, V)> = BTreeSet::new();
        for (u, v) in bg.edges() {
            let removed: BTreeSet<V> = [u, v].into();
            let comps = bg.components_without(&removed);
            if comps.len() <= 1 {
                boundary_local.insert((u, v));
            }
        }
        // boundary candidates must form a Hamiltonian cycle of the block
        let mut bdeg = vec![0usize; nb];
        let mut badj: Vec<Vec<V>> = vec![Vec::new(); nb];
        for &(u, v) in &boundary_local {
            bdeg[u] += 1;
            bdeg[v] += 1;
            badj[u].push(v);
            badj[v].push(u);
        }
        if bdeg.iter().any(|&d| d != 2) || boundary_local.len() != nb {
            return Err(Error::NotOuterplanar(
                "boundary edges do not form a Hamiltonian cycle".into(),
            ));
        }
        // walk the cycle; canonical rotation: start at local 0, then smaller neighbor
        let mut cycle = vec![0usize];
        let mut prev;
        let mut cur = 0usize;
        let mut next = *badj[0].iter().min().unwrap();
        while next != 0 {
            cycle.push(next);
            prev = cur;
            cur = next;
            next = badj[cur]
                .iter()
                .copied()
                .find(|&w| w != prev)
                .expect("degree-2 walk");
        }
        if cycle.len() != nb {
            return Err(Error::NotOuterplanar(
                "boundary edges form more than one cycle".into(),
            ));
        }
        // chords in cyclic positions; crossing chords refuse the graph
        let pos: BTreeMap<V, usize> = cycle.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut chords: Vec<(usize, usize)> = Vec::new();
        for (u, v) in bg.edges() {
            if !boundary_local.contains(&(u, v)) {
                let (a, b) = edge(pos[&u], pos[&v]);
                chords.push((a, b));
            }
        }
        chords.sort();
        for i in 0..chords.len() {
            for j in i + 1..chords.len() {
                let (a, b) = chords[i];
                let (c, d) = chords[j];
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return Err(Error::NotOuterplanar("crossing chords".into()));
                }
            }
        }
        // classify internal edges globally
        for &(pu, pv) in &chords {
            edge_class.insert(edge(back[cycle[pu]], back[cycle[pv]]), EdgeClass::Internal);
        }
        // recover bounded faces by nested interval sweep
        let chord_set: BTreeSet<(usize, usize)> = chords.iter().copied().collect();
        let mut longest_from: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(a, b) in &chords {
            longest_from.entry(a).or_default().push(b);
        }
        for targets in longest_from.values_mut() {
            targets.sort_unstable_by(|x, y| y.cmp(x));
        }
        let mut stack: Vec<(usize, usize)> = vec![(0, nb - 1)];
        while let Some((i, j)) = stack.pop() {
            let mut verts_pos = vec![i];
            let mut internal = Vec::new();
            let mut t = i;
            while t < j {
                let mut s = t + 1;
                if let Some(targets) = longest_from.get(&t) {
                    for &cand in targets {
                        if cand <= j && !(t == i && cand == j) {
                            s = s.max(cand);
                            break;
                        }
                    }
                }
                if s > t + 1 {
                    stack.push((t, s));
                    internal.push(edge(back[cycle[t]], back[cycle[s]]));
                }
                verts_pos.push(s);
                t = s;
            }
            if chord_set.contains(&(i, j)) {
                internal.push(edge(back[cycle[i]], back[cycle[j]]));
            }
            faces.push(Face {
                vertices: verts_pos.iter().map(|&p| back[cycle[p]]).collect(),
                internal_edges: internal,
                block: bi,
            });
        }
        boundaries.insert(bi, cycle.iter().map(|&p| back[p]).collect());
    }

    Ok(OuterplanarEmbedding {
        decomposition: dec,
        boundaries,
        faces,
        edge_class,
    })
}

/// All bounded faces of the embedding.
pub fn faces(emb: &OuterplanarEmbedding) -> &[Face] {
    &emb.faces
}

/// Weak dual of the embedding: forest with one component per nontrivial block.
pub fn weak_dual(emb: &OuterplanarEmbedding) -> WeakDual {
    let mut by_edge: BTreeMap<(V, V), Vec<usize>> = BTreeMap::new();
    for (fi, f) in emb.faces.iter().enumerate() {
        for &e in &f.internal_edges {
            by_edge.entry(e).or_default().push(fi);
        }
    }
    let mut adj = vec![BTreeSet::new(); emb.faces.len()];
    let mut shared_edge = BTreeMap::new();
    for (e, fs) in by_edge {
        assert_eq!(fs.len(), 2, "internal edge must lie in exactly two faces");
        let (a, b) = (fs[0].min(fs[1]), fs[0].max(fs[1]));
        adj[a].insert(b);
        adj[b].insert(a);
        shared_edge.insert((a, b), e);
    }
    WeakDual { adj, shared_edge }
}

/// True iff every dual component is a path (degrees at most two, acyclic).
pub fn is_linear_forest(d: &WeakDual) -> bool {
    if d.adj.iter().any(|s| s.len() > 2) {
        return false;
    }
    // acyclicity: edges < nodes per component; degrees <=2 makes each
    // component a path or a cycle, so edge count distinguishes them
    let mut seen = vec![false; d.n()];
    for start in 0..d.n() {
        if seen[start] {
            continue;
        }
        let mut nodes = 0usize;
        let mut deg_sum = 0usize;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            nodes += 1;
            deg_sum += d.adj[u].len();
            for &w in &d.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if deg_sum / 2 >= nodes {
            return false;
        }
    }
    true
}

fn face_key(emb: &OuterplanarEmbedding, f: usize) -> Vec<V> {
    let mut k: Vec<V> = emb.faces[f].vertices.clone();
    k.sort_unstable();
    k
}

/// Order the faces of one block along its dual path. The first face is the
/// path end with the lexicographically smallest vertex set; the last edge is
/// the lexicographically smallest boundary edge of the final face.
pub fn outerpath_order(emb: &OuterplanarEmbedding, block: usize) -> Result<OuterpathOrder> {
    let dual = weak_dual(emb);
    let block_faces = emb.faces_of_block(block);
    if block_faces.is_empty() {
        return Err(Error::PreconditionViolated(
            "block has no bounded faces".into(),
        ));
    }
    for &f in &block_faces {
        if dual.degree(f) > 2 {
            return Err(Error::NotAnOuterpath);
        }
    }
    let order: Vec<usize> = if block_faces.len() == 1 {
        block_faces.clone()
    } else {
        let mut ends: Vec<usize> = block_faces
            .iter()
            .copied()
            .filter(|&f| dual.degree(f) == 1)
            .collect();
        if ends.len() != 2 {
            return Err(Error::NotAnOuterpath);
        }
        ends.sort_by_key(|&f| face_key(emb, f));
        let start = ends[0];
        let mut order = vec![start];
        let mut prev;
        let mut cur = start;
        loop {
            let next = dual.adj[cur].iter().copied().find(|&f| f != prev);
            match next {
                Some(nf) => {
                    order.push(nf);
                    prev = cur;
                    cur = nf;
                }
                None => break,
            }
        }
        if order.len() != block_faces.len() {
            return Err(Error::NotAnOuterpath);
        }
        order
    };
    let shared: Vec<(V, V)> = order
        .windows(2)
        .map(|w| {
            let key = (w[0].min(w[1]), w[0].max(w[1]));
            dual.shared_edge[&key]
        })
        .collect();
    let last = *order.last().unwrap();
    let last_edge = emb.faces[last]
        .boundary_edges()
        .into_iter()
        .min()
        .ok_or(Error::InvariantBroken("face without boundary edge".into()))?;
    Ok(OuterpathOrder {
        faces: order,
        shared,
        last_edge,
    })
}

/// A 3-sun: triangle 0,1,2 with 3,4,5 attached to its edges.
#[cfg(test)]
pub fn three_sun() -> Graph {
    Graph::from_edges(
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 0),
            (0, 3),
            (1, 3),
            (1, 4),
            (2, 4),
            (2, 5),
            (0, 5),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn k4_refused() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(recognize_outerplanar(&g).is_err());
    }

    #[test]
    fn k23_refused() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(recognize_outerplanar(&g).is_err());
    }

    #[test]
    fn c6_single_face() {
        let emb = recognize_outerplanar(&cycle(6)).unwrap();
        assert_eq!(emb.faces.len(), 1);
        assert_eq!(emb.faces[0].len(), 6);
        assert!(emb.faces[0].is_leaf());
    }

    #[test]
    fn c4_one_leaf_face() {
        let emb = recognize_outerplanar(&cycle(4)).unwrap();
        assert_eq!(emb.faces.len(), 1);
        assert_eq!(emb.faces[0].len(), 4);
    }

    #[test]
    fn three_sun_embedding() {
        let emb = recognize_outerplanar(&three_sun()).unwrap();
        assert_eq!(emb.faces.len(), 4);
        let internal = emb.internal_edges();
        assert_eq!(internal, vec![(0, 1), (0, 2), (1, 2)]);
        let boundary = emb.boundaries.values().next().unwrap();
        assert_eq!(boundary.len(), 6);
        let dual = weak_dual(&emb);
        // star K1,3: one face of dual degree 3
        let mut degs: Vec<usize> = (0..dual.n()).map(|f| dual.degree(f)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 3]);
        assert!(!is_linear_forest(&dual));
    }

    #[test]
    fn tree_has_empty_dual() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]);
        let emb = recognize_outerplanar(&g).unwrap();
        assert!(emb.faces.is_empty());
        assert!(is_linear_forest(&weak_dual(&emb)));
    }

    #[test]
    fn diamond_two_faces() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        let emb = recognize_outerplanar(&g).unwrap();
        assert_eq!(emb.faces.len(), 2);
        assert!(emb.faces.iter().all(|f| f.len() == 3));
        assert_eq!(emb.internal_edges(), vec![(0, 2)]);
        let order = outerpath_order(&emb, 0).unwrap();
        assert_eq!(order.faces.len(), 2);
        assert_eq!(order.shared, vec![(0, 2)]);
    }

    #[test]
    fn single_cycle_order() {
        let emb = recognize_outerplanar(&cycle(5)).unwrap();
        let order = outerpath_order(&emb, 0).unwrap();
        assert_eq!(order.faces.len(), 1);
        assert_eq!(order.last_edge, (0, 1));
    }

    #[test]
    fn three_sun_not_an_outerpath() {
        let emb = recognize_outerplanar(&three_sun()).unwrap();
        assert!(matches!(
            outerpath_order(&emb, 0),
            Err(Error::NotAnOuterpath)
        ));
    }

    #[test]
    fn edge_bound_accepted_graphs() {
        for n in 3..8 {
            let emb = recognize_outerplanar(&cycle(n)).unwrap();
            let g = cycle(n);
            assert!(g.m() <= 2 * g.n() - 3);
            assert_eq!(emb.faces.len(), 1);
        }
    }
}
