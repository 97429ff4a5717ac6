//! Constructive augmentation of a linear outerplanar graph into a biconnected
//! outerpath: tuck maximal small components into blocks, then bond sibling
//! components at the remaining cutvertices. Every connector is either a new
//! edge (spanning mode) or a two-edge path through a fresh vertex (induced
//! mode). Every intermediate graph is re-validated: outerplanar, linear-forest
//! dual, cut-safe and block-safe.

use crate::error::{Error, Result};
use crate::graph::{
    block_cut_decomposition, components_incident, edge, ComponentKind, Graph, IncidentComponent, V,
};
use crate::linearity::{
    is_block_safe, is_cut_safe, is_linear, trivial_terminals, LinearityResult,
};
use crate::outerplanar::{is_linear_forest, outerpath_order, recognize_outerplanar, weak_dual};
use std::collections::{BTreeMap, BTreeSet};

/// Whether connectors are single edges (result contains the input as a
/// spanning subgraph) or two-edge paths (induced subgraph).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectorMode {
    Edge,
    TwoPath,
}

/// A connector joining two previously nonadjacent boundary vertices.
#[derive(Debug, Clone)]
pub struct Connector {
    pub from: V,
    pub to: V,
    /// Fresh intermediate vertex in two-path mode.
    pub middle: Option<V>,
}

#[derive(Debug, Clone)]
pub enum ActionKind {
    /// Tail at a_i merged into its block along the terminal edge (a_i, b_i).
    TuckIntoBlock {
        component: BTreeSet<V>,
        terminal: (V, V),
    },
    /// Component closed into its own block at the cutvertex.
    TuckAroundCutvertex { component: BTreeSet<V>, cutvertex: V },
    /// Two sibling components bonded at a cutvertex.
    Bond { cutvertex: V, from: V, to: V },
    /// Degenerate completion of a one- or two-vertex graph to a triangle.
    CompleteTriangle,
    /// Two component outerpaths joined through a new bounded face.
    ChainComponents { edge_a: (V, V), edge_b: (V, V) },
}

#[derive(Debug, Clone)]
pub struct ActionRecord {
    pub kind: ActionKind,
    pub connectors: Vec<Connector>,
}

/// Mutable augmentation state: the growing graph plus the oriented terminal
/// edges of every block, keyed by the block's sorted vertex list.
#[derive(Debug, Clone)]
pub struct AugmentState {
    pub graph: Graph,
    pub terminals: BTreeMap<Vec<V>, [(V, V); 2]>,
    pub connectors: Vec<Connector>,
    pub trace: Vec<ActionRecord>,
    mode: ConnectorMode,
}

/// Result of a full augmentation run.
#[derive(Debug, Clone)]
pub struct AugmentationResult {
    pub supergraph: Graph,
    pub embedding: crate::outerplanar::OuterplanarEmbedding,
    /// Original vertex index -> supergraph vertex index (always identity:
    /// originals keep their indices, fresh vertices are appended).
    pub vertex_map: Vec<V>,
    pub connectors: Vec<Connector>,
    pub trace: Vec<ActionRecord>,
}

impl AugmentationResult {
    pub fn added_vertices(&self, original: &Graph) -> usize {
        self.supergraph.n() - original.n()
    }
}

fn block_key(b: &BTreeSet<V>) -> Vec<V> {
    b.iter().copied().collect()
}

/// All maximal small components: small components not strictly contained in a
/// small component incident to another cutvertex. Sorted by (cutvertex,
/// vertex set).
pub fn maximal_small_components(
    g: &Graph,
    dec: &crate::graph::BlockDecomposition,
) -> Vec<IncidentComponent> {
    let mut smalls: Vec<IncidentComponent> = Vec::new();
    for &v in &dec.cutvertices {
        for c in components_incident(g, v).expect("cutvertex") {
            if c.kind != ComponentKind::Big {
                smalls.push(c);
            }
        }
    }
    let mut out: Vec<IncidentComponent> = smalls
        .iter()
        .filter(|c| {
            !smalls.iter().any(|other| {
                other.cutvertex != c.cutvertex
                    && other.vertices.len() > c.vertices.len()
                    && c.vertices.is_subset(&other.vertices)
            })
        })
        .cloned()
        .collect();
    out.sort_by(|a, b| (a.cutvertex, &a.vertices).cmp(&(b.cutvertex, &b.vertices)));
    out
}

impl AugmentState {
    /// Initialize from a linear graph: terminal assignments from the
    /// certificate plus convention terminals for trivial blocks.
    pub fn start(g: &Graph, mode: ConnectorMode) -> Result<AugmentState> {
        let cert = match is_linear(g)? {
            LinearityResult::Linear(c) => c,
            LinearityResult::NotLinear(_) => return Err(Error::NotLinear),
        };
        let mut terminals = BTreeMap::new();
        for (bi, block) in cert.embedding.decomposition.blocks.iter().enumerate() {
            if let Some(ta) = cert.assignments.get(&bi) {
                terminals.insert(block_key(block), ta.terminals);
            } else if block.len() == 2 {
                terminals.insert(block_key(block), trivial_terminals(g, block));
            }
        }
        Ok(AugmentState {
            graph: g.clone(),
            terminals,
            connectors: Vec::new(),
            trace: Vec::new(),
            mode,
        })
    }

    fn add_connector(&mut self, from: V, to: V) -> Result<Connector> {
        if self.graph.has_edge(from, to) {
            return Err(Error::PreconditionViolated(format!(
                "connector endpoints {}-{} already adjacent",
                self.graph.name(from),
                self.graph.name(to)
            )));
        }
        let c = match self.mode {
            ConnectorMode::Edge => {
                self.graph.add_edge(from, to);
                Connector {
                    from,
                    to,
                    middle: None,
                }
            }
            ConnectorMode::TwoPath => {
                let w = self.graph.add_fresh_vertex("w");
                self.graph.add_edge(from, w);
                self.graph.add_edge(w, to);
                Connector {
                    from,
                    to,
                    middle: Some(w),
                }
            }
        };
        self.connectors.push(c.clone());
        Ok(c)
    }

    /// Drop terminal entries whose blocks no longer exist, keep the rest,
    /// and install `new_entries` for freshly formed blocks.
    fn refresh_terminals(&mut self, new_entries: Vec<(Vec<V>, [(V, V); 2])>) {
        let dec = block_cut_decomposition(&self.graph);
        let live: BTreeSet<Vec<V>> = dec.blocks.iter().map(block_key).collect();
        self.terminals.retain(|k, _| live.contains(k));
        for (k, t) in new_entries {
            debug_assert!(live.contains(&k), "terminal entry for unknown block");
            self.terminals.insert(k, t);
        }
        // convention terminals for any trivial block that lost its entry
        for block in &dec.blocks {
            if block.len() == 2 {
                let k = block_key(block);
                self.terminals
                    .entry(k)
                    .or_insert_with(|| trivial_terminals(&self.graph, block));
            }
        }
    }

    /// Re-check all characterization invariants on the current graph.
    pub fn validate(&self) -> Result<()> {
        let emb = recognize_outerplanar(&self.graph)?;
        if !is_linear_forest(&weak_dual(&emb)) {
            return Err(Error::InvariantBroken("dual lost linearity".into()));
        }
        if is_cut_safe(&self.graph, &emb.decomposition).is_err() {
            return Err(Error::InvariantBroken("cut-safety lost".into()));
        }
        if is_block_safe(&self.graph, &emb).is_err() {
            return Err(Error::InvariantBroken("block-safety lost".into()));
        }
        // stored terminals must be boundary edges of live blocks
        for (key, slots) in &self.terminals {
            let bset: BTreeSet<V> = key.iter().copied().collect();
            for (a, b) in slots {
                if !bset.contains(a) || !bset.contains(b) || !self.graph.has_edge(*a, *b) {
                    return Err(Error::InvariantBroken(format!(
                        "stale terminal {a}-{b}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Terminal slot (v, b) of a nontrivial block at v, if any — the hook for
    /// merging a tail into that block. Smallest (block, slot) wins.
    fn a_slot_at(&self, v: V, component: &BTreeSet<V>) -> Option<(Vec<V>, usize)> {
        for (key, slots) in &self.terminals {
            if key.len() <= 2 || !key.contains(&v) {
                continue;
            }
            // the component must not contain the block
            if key.iter().all(|u| *u == v || component.contains(u)) {
                continue;
            }
            for (i, &(a, _)) in slots.iter().enumerate() {
                if a == v {
                    return Some((key.clone(), i));
                }
            }
        }
        None
    }

    /// Action 1: tuck one maximal small component. Case (a) merges a tail
    /// into the block owning the terminal edge it hangs from; case (b)
    /// closes the component into a block at its cutvertex.
    pub fn tuck_tail(&mut self, component: &IncidentComponent) -> Result<()> {
        let v = component.cutvertex;
        let cset = &component.vertices;
        let mut without_v = cset.clone();
        without_v.remove(&v);
        if component.kind == ComponentKind::Tail {
            if let Some((bkey, slot)) = self.a_slot_at(v, cset) {
                return self.tuck_case_a(component, &bkey, slot);
            }
        }
        self.tuck_case_b(component)
    }

    fn tuck_case_a(
        &mut self,
        component: &IncidentComponent,
        bkey: &[V],
        slot: usize,
    ) -> Result<()> {
        let v = component.cutvertex;
        let slots = self.terminals[bkey];
        let (a, b) = slots[slot];
        debug_assert_eq!(a, v);
        // leaf of the tail: the path end other than v
        let leaf = component
            .vertices
            .iter()
            .copied()
            .filter(|&u| u != v)
            .find(|&u| {
                self.graph
                    .neighbors(u)
                    .filter(|w| component.vertices.contains(w))
                    .count()
                    <= 1
            })
            .ok_or(Error::PreconditionViolated("tail without a leaf".into()))?;
        let conn = self.add_connector(leaf, b)?;
        // merged block: the one containing b after the connector
        let dec = block_cut_decomposition(&self.graph);
        let last_edge_src = conn.middle.unwrap_or(conn.from);
        let bnew = dec
            .block_of_edge
            .get(&edge(last_edge_src, b))
            .copied()
            .ok_or(Error::InvariantBroken("connector edge has no block".into()))?;
        let key = block_key(&dec.blocks[bnew]);
        let remaining = slots[1 - slot];
        let new_terminal = (last_edge_src, b);
        self.trace.push(ActionRecord {
            kind: ActionKind::TuckIntoBlock {
                component: component.vertices.clone(),
                terminal: (a, b),
            },
            connectors: vec![conn],
        });
        self.refresh_terminals(vec![(key, [remaining, new_terminal])]);
        self.validate()
    }

    fn tuck_case_b(&mut self, component: &IncidentComponent) -> Result<()> {
        let v = component.cutvertex;
        let without_v = component.without_cutvertex();
        // endpoints of the path component minus the cutvertex
        let ends: Vec<V> = without_v
            .iter()
            .copied()
            .filter(|&u| {
                self.graph
                    .neighbors(u)
                    .filter(|w| without_v.contains(w))
                    .count()
                    <= 1
            })
            .collect();
        let mut conns = Vec::new();
        for &p in &ends {
            if !self.graph.has_edge(v, p) {
                conns.push(self.add_connector(v, p)?);
            }
        }
        // new block: everything of the component now lies in one block at v
        let dec = block_cut_decomposition(&self.graph);
        let anchor = *without_v.iter().next().expect("nonempty component");
        let bnew = dec
            .blocks
            .iter()
            .position(|blk| blk.contains(&v) && blk.contains(&anchor))
            .ok_or(Error::InvariantBroken("tucked component has no block".into()))?;
        let blk = &dec.blocks[bnew];
        let slots = if blk.len() == 2 {
            trivial_terminals(&self.graph, blk)
        } else {
            let emb = recognize_outerplanar(&self.graph)?;
            let boundary = emb
                .boundaries
                .get(&bnew)
                .ok_or(Error::InvariantBroken("missing boundary".into()))?;
            let pos = boundary
                .iter()
                .position(|&u| u == v)
                .ok_or(Error::InvariantBroken("cutvertex off boundary".into()))?;
            let n = boundary.len();
            let mut nbrs = [boundary[(pos + 1) % n], boundary[(pos + n - 1) % n]];
            nbrs.sort_unstable();
            [(nbrs[0], v), (nbrs[1], v)]
        };
        self.trace.push(ActionRecord {
            kind: ActionKind::TuckAroundCutvertex {
                component: component.vertices.clone(),
                cutvertex: v,
            },
            connectors: conns,
        });
        self.refresh_terminals(vec![(block_key(blk), slots)]);
        self.validate()
    }

    /// Terminal slot of the given block ending at v, preferring the smallest
    /// first endpoint.
    fn slot_ending_at(&self, key: &[V], v: V) -> Option<(usize, V)> {
        let slots = self.terminals.get(key)?;
        let mut best: Option<(usize, V)> = None;
        for (i, &(u, b)) in slots.iter().enumerate() {
            if b == v {
                match best {
                    Some((_, cur)) if cur <= u => {}
                    _ => best = Some((i, u)),
                }
            }
        }
        best
    }

    /// Action 2: bond two components at cutvertex v, prioritizing small
    /// components, merging their v-blocks through a new bounded face.
    pub fn bond_siblings(&mut self, v: V) -> Result<()> {
        let mut comps = components_incident(&self.graph, v)
            .map_err(|_| Error::PreconditionViolated("bond at a non-cutvertex".into()))?;
        comps.sort_by_key(|c| (c.kind == ComponentKind::Big, c.vertices.clone()));
        if comps.len() < 2 {
            return Err(Error::PreconditionViolated("fewer than two components".into()));
        }
        let dec = block_cut_decomposition(&self.graph);
        let mut picks = Vec::new();
        for c in comps.iter().take(2) {
            let bi = dec
                .blocks
                .iter()
                .position(|blk| blk.contains(&v) && blk.iter().all(|u| c.vertices.contains(u)))
                .ok_or(Error::InvariantBroken("component without v-block".into()))?;
            let key = block_key(&dec.blocks[bi]);
            let (slot, u) = self.slot_ending_at(&key, v).ok_or(Error::InvariantBroken(
                format!("block at {} has no terminal ending there", self.graph.name(v)),
            ))?;
            picks.push((key, slot, u));
        }
        let (key0, slot0, u0) = picks[0].clone();
        let (key1, slot1, u1) = picks[1].clone();
        let conn = self.add_connector(u0, u1)?;
        let remaining0 = self.terminals[&key0][1 - slot0];
        let remaining1 = self.terminals[&key1][1 - slot1];
        let dec = block_cut_decomposition(&self.graph);
        let probe = conn.middle.unwrap_or(conn.to);
        let bnew = dec
            .block_of_edge
            .get(&edge(conn.from, probe))
            .copied()
            .ok_or(Error::InvariantBroken("bond edge has no block".into()))?;
        let key = block_key(&dec.blocks[bnew]);
        self.trace.push(ActionRecord {
            kind: ActionKind::Bond {
                cutvertex: v,
                from: u0,
                to: u1,
            },
            connectors: vec![conn],
        });
        self.refresh_terminals(vec![(key, [remaining0, remaining1])]);
        self.validate()
    }
}

/// Full pipeline: repeat Action 1 once per maximal small component (skipping
/// any whose component was absorbed by an earlier application), then Action 2
/// until no cutvertex remains.
pub fn embed_in_biconnected_outerpath(
    g: &Graph,
    mode: ConnectorMode,
) -> Result<AugmentationResult> {
    if g.n() == 0 {
        return Err(Error::PreconditionViolated("empty graph".into()));
    }
    if g.n() <= 2 {
        return complete_tiny(g, mode);
    }
    if !g.is_connected() {
        return augment_disconnected(g, mode);
    }
    let mut st = AugmentState::start(g, mode)?;
    let queue = maximal_small_components(&st.graph, &block_cut_decomposition(&st.graph));
    for item in queue {
        // applicability: the cutvertex and the exact component must persist
        let dec = block_cut_decomposition(&st.graph);
        if !dec.cutvertices.contains(&item.cutvertex) {
            continue;
        }
        let current = components_incident(&st.graph, item.cutvertex).expect("cutvertex");
        let Some(cur) = current.iter().find(|c| c.vertices == item.vertices) else {
            continue;
        };
        if cur.kind == ComponentKind::Big {
            continue;
        }
        st.tuck_tail(cur)?;
    }
    let mut guard = 0usize;
    loop {
        let dec = block_cut_decomposition(&st.graph);
        let Some(&v) = dec.cutvertices.iter().next() else {
            break;
        };
        st.bond_siblings(v)?;
        guard += 1;
        if guard > 4 * g.n() + 16 {
            return Err(Error::InvariantBroken("bond phase did not terminate".into()));
        }
    }
    finish(g, st)
}

fn finish(original: &Graph, st: AugmentState) -> Result<AugmentationResult> {
    let emb = recognize_outerplanar(&st.graph)?;
    let dec = &emb.decomposition;
    if st.graph.n() >= 3 {
        if dec.blocks.len() != 1 || dec.blocks[0].len() != st.graph.n() {
            return Err(Error::InvariantBroken("result is not biconnected".into()));
        }
        outerpath_order(&emb, 0)?;
    }
    // containment checks
    for (u, v) in original.edges() {
        if !st.graph.has_edge(u, v) {
            return Err(Error::InvariantBroken("original edge lost".into()));
        }
    }
    if st.mode == ConnectorMode::TwoPath {
        for u in original.vertices() {
            for w in st.graph.neighbors(u) {
                if w < original.n() && !original.has_edge(u, w) {
                    return Err(Error::InvariantBroken(
                        "induced containment violated".into(),
                    ));
                }
            }
        }
    } else if st.graph.n() != original.n() {
        return Err(Error::InvariantBroken("spanning mode added vertices".into()));
    }
    Ok(AugmentationResult {
        embedding: emb,
        vertex_map: (0..original.n()).collect(),
        connectors: st.connectors,
        trace: st.trace,
        supergraph: st.graph,
    })
}

/// K1 and K2 are linear but admit no biconnected outerpath on their own
/// vertex set; induced mode completes them to a triangle.
fn complete_tiny(g: &Graph, mode: ConnectorMode) -> Result<AugmentationResult> {
    if mode == ConnectorMode::Edge {
        return Err(Error::PreconditionViolated(
            "no biconnected outerpath exists on fewer than three vertices".into(),
        ));
    }
    let mut h = g.clone();
    match g.n() {
        1 => {
            let a = 0;
            let w1 = h.add_fresh_vertex("w");
            let w2 = h.add_fresh_vertex("w");
            h.add_edge(a, w1);
            h.add_edge(w1, w2);
            h.add_edge(w2, a);
        }
        2 => {
            if !h.has_edge(0, 1) {
                return augment_disconnected(g, mode);
            }
            let w = h.add_fresh_vertex("w");
            h.add_edge(0, w);
            h.add_edge(1, w);
        }
        _ => unreachable!(),
    }
    let emb = recognize_outerplanar(&h)?;
    Ok(AugmentationResult {
        embedding: emb,
        vertex_map: (0..g.n()).collect(),
        connectors: Vec::new(),
        trace: vec![ActionRecord {
            kind: ActionKind::CompleteTriangle,
            connectors: Vec::new(),
        }],
        supergraph: h,
    })
}

/// Augment each component separately, then chain consecutive outerpaths
/// through a new bounded face joining a boundary edge of the last face of one
/// with a boundary edge of the first face of the next.
fn augment_disconnected(g: &Graph, mode: ConnectorMode) -> Result<AugmentationResult> {
    let comps = g.components();
    let mut merged = Graph::new();
    for v in g.vertices() {
        merged.add_vertex(g.name(v));
    }
    let mut connectors = Vec::new();
    let mut trace = Vec::new();
    let mut chain_edges: Vec<((V, V), (V, V))> = Vec::new(); // (first-face edge, last-face edge) per component
    for comp in &comps {
        let (sub, back) = g.induced(comp);
        let part = embed_in_biconnected_outerpath(&sub, mode)?;
        // splice the component's supergraph into the merged graph
        let mut local_to_merged: Vec<V> = Vec::new();
        for v in part.supergraph.vertices() {
            if v < sub.n() {
                local_to_merged.push(back[v]);
            } else {
                local_to_merged.push(merged.add_fresh_vertex("w"));
            }
        }
        for (u, v) in part.supergraph.edges() {
            merged.add_edge(local_to_merged[u], local_to_merged[v]);
        }
        for c in &part.connectors {
            connectors.push(Connector {
                from: local_to_merged[c.from],
                to: local_to_merged[c.to],
                middle: c.middle.map(|m| local_to_merged[m]),
            });
        }
        trace.extend(part.trace.iter().cloned());
        let order = outerpath_order(&part.embedding, 0)?;
        let first_face = &part.embedding.faces[order.faces[0]];
        let first_edge = if order.faces.len() == 1 {
            // single face: chain on an edge disjoint from last_edge if possible
            first_face
                .boundary_edges()
                .into_iter()
                .filter(|&e| {
                    e != order.last_edge
                        && e.0 != order.last_edge.0
                        && e.0 != order.last_edge.1
                        && e.1 != order.last_edge.0
                        && e.1 != order.last_edge.1
                })
                .min()
                .unwrap_or_else(|| {
                    first_face
                        .boundary_edges()
                        .into_iter()
                        .filter(|&e| e != order.last_edge)
                        .min()
                        .expect("face has at least three edges")
                })
        } else {
            first_face
                .boundary_edges()
                .into_iter()
                .min()
                .expect("leaf face has boundary edges")
        };
        let last_edge = order.last_edge;
        chain_edges.push((
            (local_to_merged[first_edge.0], local_to_merged[first_edge.1]),
            (local_to_merged[last_edge.0], local_to_merged[last_edge.1]),
        ));
    }
    for w in chain_edges.windows(2) {
        let (_, (x, y)) = w[0];
        let ((u, v), _) = w[1];
        match mode {
            ConnectorMode::Edge => {
                merged.add_edge(x, u);
                merged.add_edge(y, v);
                connectors.push(Connector {
                    from: x,
                    to: u,
                    middle: None,
                });
                connectors.push(Connector {
                    from: y,
                    to: v,
                    middle: None,
                });
            }
            ConnectorMode::TwoPath => {
                let w1 = merged.add_fresh_vertex("w");
                let w2 = merged.add_fresh_vertex("w");
                merged.add_edge(x, w1);
                merged.add_edge(w1, u);
                merged.add_edge(y, w2);
                merged.add_edge(w2, v);
                connectors.push(Connector {
                    from: x,
                    to: u,
                    middle: Some(w1),
                });
                connectors.push(Connector {
                    from: y,
                    to: v,
                    middle: Some(w2),
                });
            }
        }
        trace.push(ActionRecord {
            kind: ActionKind::ChainComponents {
                edge_a: (x, y),
                edge_b: (u, v),
            },
            connectors: Vec::new(),
        });
    }
    let emb = recognize_outerplanar(&merged)?;
    let dec = &emb.decomposition;
    if dec.blocks.len() != 1 || dec.blocks[0].len() != merged.n() {
        return Err(Error::InvariantBroken("chained result not biconnected".into()));
    }
    outerpath_order(&emb, 0)?;
    for (u, v) in g.edges() {
        if !merged.has_edge(u, v) {
            return Err(Error::InvariantBroken("original edge lost".into()));
        }
    }
    Ok(AugmentationResult {
        embedding: emb,
        vertex_map: (0..g.n()).collect(),
        connectors,
        trace,
        supergraph: merged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    fn assert_outerpath(g: &Graph) {
        let emb = recognize_outerplanar(g).unwrap();
        assert_eq!(emb.decomposition.blocks.len(), 1);
        assert_eq!(emb.decomposition.blocks[0].len(), g.n());
        outerpath_order(&emb, 0).unwrap();
    }

    #[test]
    fn identity_on_biconnected_outerpath() {
        let g = cycle(6);
        let r = embed_in_biconnected_outerpath(&g, ConnectorMode::TwoPath).unwrap();
        assert_eq!(r.supergraph.n(), 6);
        assert!(r.connectors.is_empty());
    }

    #[test]
    fn star_spanning_mode() {
        // K1,3 spanning: biconnected outerpath on 4 vertices with 2 connector edges
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let r = embed_in_biconnected_outerpath(&g, ConnectorMode::Edge).unwrap();
        assert_eq!(r.supergraph.n(), 4);
        assert_eq!(r.connectors.len(), 2);
        assert_outerpath(&r.supergraph);
    }

    #[test]
    fn paths_augment_induced() {
        for n in 3..9 {
            let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            let g = Graph::from_edges(n, &edges);
            let r = embed_in_biconnected_outerpath(&g, ConnectorMode::TwoPath).unwrap();
            assert_outerpath(&r.supergraph);
            let blocks = n - 1;
            assert!(
                r.added_vertices(&g) < blocks,
                "P{n}: added {} >= blocks {}",
                r.added_vertices(&g),
                blocks
            );
        }
    }

    #[test]
    fn c5_pendant_augments() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]);
        let r = embed_in_biconnected_outerpath(&g, ConnectorMode::TwoPath).unwrap();
        assert_outerpath(&r.supergraph);
        assert!(r.added_vertices(&g) < 2);
    }

    #[test]
    fn tiny_graphs_induced() {
        let k1 = Graph::build(&[], &["a"]).unwrap();
        let r = embed_in_biconnected_outerpath(&k1, ConnectorMode::TwoPath).unwrap();
        assert_eq!(r.supergraph.n(), 3);
        let k2 = Graph::build(&[("a", "b")], &[]).unwrap();
        let r = embed_in_biconnected_outerpath(&k2, ConnectorMode::TwoPath).unwrap();
        assert_eq!(r.supergraph.n(), 3);
        assert_outerpath(&r.supergraph);
    }

    #[test]
    fn disconnected_chains() {
        let g = Graph::build(&[("a", "b"), ("b", "c"), ("c", "a"), ("x", "y"), ("y", "z"), ("z", "x")], &[])
            .unwrap();
        let r = embed_in_biconnected_outerpath(&g, ConnectorMode::TwoPath).unwrap();
        assert_outerpath(&r.supergraph);
    }

    #[test]
    fn nonlinear_rejected() {
        let sun = Graph::from_edges(
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
        );
        assert!(matches!(
            embed_in_biconnected_outerpath(&sun, ConnectorMode::TwoPath),
            Err(Error::NotLinear)
        ));
    }
}
