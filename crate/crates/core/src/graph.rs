//! Simple undirected graphs with stable string identifiers, block–cutvertex
//! decomposition and incident-component classification.

use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};

/// Dense vertex index, valid for one `Graph` value.
pub type V = usize;

/// Canonical undirected edge: endpoints sorted.
pub fn edge(u: V, v: V) -> (V, V) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph. Vertex names are opaque strings mapped to dense
/// indices; iteration order is deterministic (sorted names at construction,
/// later additions appended).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: BTreeMap<String, V>,
    adj: Vec<BTreeSet<V>>,
}

impl Graph {
    pub fn new() -> Self {
        Graph {
            names: Vec::new(),
            index: BTreeMap::new(),
            adj: Vec::new(),
        }
    }

    /// Build a graph from named edges plus isolated vertices. Rejects loops
    /// and duplicate edges. Vertices are indexed in sorted name order.
    pub fn build(edge_list: &[(&str, &str)], isolated: &[&str]) -> Result<Self> {
        let mut names: BTreeSet<String> = BTreeSet::new();
        for (u, v) in edge_list {
            names.insert((*u).to_string());
            names.insert((*v).to_string());
        }
        for v in isolated {
            names.insert((*v).to_string());
        }
        let mut g = Graph::new();
        for name in names {
            g.add_vertex(&name);
        }
        for (u, v) in edge_list {
            if u == v {
                return Err(Error::SelfLoop((*u).to_string()));
            }
            let ui = g.index[*u];
            let vi = g.index[*v];
            if g.adj[ui].contains(&vi) {
                return Err(Error::DuplicateEdge((*u).to_string(), (*v).to_string()));
            }
            g.adj[ui].insert(vi);
            g.adj[vi].insert(ui);
        }
        Ok(g)
    }

    /// Convenience constructor for tests: vertices `0..n` with numeric names.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new();
        for i in 0..n {
            g.add_vertex(&format!("{i}"));
        }
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_vertex(&mut self, name: &str) -> V {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        self.adj.push(BTreeSet::new());
        i
    }

    /// Add a vertex with a generated name not colliding with existing ones.
    pub fn add_fresh_vertex(&mut self, hint: &str) -> V {
        let mut k = 0usize;
        loop {
            let name = format!("{hint}{k}");
            if !self.index.contains_key(&name) {
                return self.add_vertex(&name);
            }
            k += 1;
        }
    }

    pub fn add_edge(&mut self, u: V, v: V) {
        assert!(u != v, "self loop");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: V, v: V) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn name(&self, v: V) -> &str {
        &self.names[v]
    }

    pub fn lookup(&self, name: &str) -> Option<V> {
        self.index.get(name).copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = V> {
        0..self.n()
    }

    pub fn neighbors(&self, v: V) -> impl Iterator<Item = V> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: V) -> usize {
        self.adj[v].len()
    }

    /// Edges in canonical sorted order.
    pub fn edges(&self) -> Vec<(V, V)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighborhood(&self, v: V) -> BTreeSet<V> {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.component_of(0, &BTreeSet::new()).len() == self.n()
    }

    /// Connected component containing `start` in the graph minus `removed`.
    pub fn component_of(&self, start: V, removed: &BTreeSet<V>) -> BTreeSet<V> {
        let mut seen = BTreeSet::new();
        if removed.contains(&start) {
            return seen;
        }
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !removed.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// All connected components of the graph minus `removed`, each sorted,
    /// listed by smallest contained vertex.
    pub fn components_without(&self, removed: &BTreeSet<V>) -> Vec<BTreeSet<V>> {
        let mut out = Vec::new();
        let mut seen: BTreeSet<V> = removed.clone();
        for v in self.vertices() {
            if !seen.contains(&v) {
                let comp = self.component_of(v, removed);
                seen.extend(comp.iter().copied());
                out.push(comp);
            }
        }
        out
    }

    pub fn components(&self) -> Vec<BTreeSet<V>> {
        self.components_without(&BTreeSet::new())
    }

    /// Induced subgraph on `verts`; second result maps new index -> old index.
    pub fn induced(&self, verts: &BTreeSet<V>) -> (Graph, Vec<V>) {
        let mut g = Graph::new();
        let order: Vec<V> = verts.iter().copied().collect();
        for &v in &order {
            g.add_vertex(self.name(v));
        }
        let back: BTreeMap<V, V> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        for &v in &order {
            for &w in &self.adj[v] {
                if v < w && verts.contains(&w) {
                    g.add_edge(back[&v], back[&w]);
                }
            }
        }
        (g, order)
    }

    /// True iff the induced subgraph on `verts` is a path (single vertex counts).
    pub fn induces_path(&self, verts: &BTreeSet<V>) -> bool {
        if verts.is_empty() {
            return false;
        }
        let mut deg2 = 0;
        let mut deg1 = 0;
        let mut edges = 0;
        for &v in verts {
            let d = self.adj[v].iter().filter(|w| verts.contains(w)).count();
            edges += d;
            match d {
                0 | 1 => deg1 += 1,
                2 => deg2 += 1,
                _ => return false,
            }
        }
        edges /= 2;
        if edges != verts.len() - 1 {
            return false;
        }
        let _ = (deg1, deg2);
        // connected check on the induced subgraph
        let start = *verts.iter().next().unwrap();
        let mut seen = BTreeSet::new();
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if verts.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == verts.len()
    }
}

impl Default for Graph {
    fn default() -> Self {
        Graph::new()
    }
}

/// Block–cutvertex decomposition. Blocks are listed by smallest contained
/// vertex; a trivial block has at most two vertices.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub blocks: Vec<BTreeSet<V>>,
    pub cutvertices: BTreeSet<V>,
    pub block_of_edge: BTreeMap<(V, V), usize>,
}

impl BlockDecomposition {
    pub fn is_trivial(&self, b: usize) -> bool {
        self.blocks[b].len() <= 2
    }

    /// Indices of blocks containing vertex v.
    pub fn blocks_at(&self, v: V) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.blocks[b].contains(&v))
            .collect()
    }
}

/// Standard lowpoint block decomposition (iterative DFS).
pub fn block_cut_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut num = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(V, V)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(V, V)>> = Vec::new();
    let mut cutvertices = BTreeSet::new();

    let mut iters: Vec<Vec<V>> = vec![Vec::new(); n];
    let mut cursor = vec![0usize; n];
    for root in 0..n {
        if num[root] != usize::MAX {
            continue;
        }
        let mut stack = vec![root];
        num[root] = timer;
        low[root] = timer;
        timer += 1;
        iters[root] = g.neighbors(root).collect();
        let mut root_children = 0usize;
        while let Some(&u) = stack.last() {
            if cursor[u] < iters[u].len() {
                let w = iters[u][cursor[u]];
                cursor[u] += 1;
                if num[w] == usize::MAX {
                    parent[w] = u;
                    edge_stack.push(edge(u, w));
                    num[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    iters[w] = g.neighbors(w).collect();
                    stack.push(w);
                    if u == root {
                        root_children += 1;
                    }
                } else if w != parent[u] && num[w] < num[u] {
                    edge_stack.push(edge(u, w));
                    low[u] = low[u].min(num[w]);
                }
            } else {
                stack.pop();
                if let Some(&p) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= num[p] {
                        // edges from p--u down form one block
                        let mut blk = Vec::new();
                        while let Some(&e) = edge_stack.last() {
                            blk.push(e);
                            edge_stack.pop();
                            if e == edge(p, u) {
                                break;
                            }
                        }
                        raw_blocks.push(blk);
                        if p != root {
                            cutvertices.insert(p);
                        }
                    }
                }
            }
        }
        if root_children >= 2 {
            cutvertices.insert(root);
        }
    }

    let mut blocks: Vec<BTreeSet<V>> = raw_blocks
        .iter()
        .map(|es| {
            let mut s = BTreeSet::new();
            for &(a, b) in es {
                s.insert(a);
                s.insert(b);
            }
            s
        })
        .collect();
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    order.sort_by(|&a, &b| {
        let ka: Vec<V> = blocks[a].iter().copied().collect();
        let kb: Vec<V> = blocks[b].iter().copied().collect();
        ka.cmp(&kb)
    });
    let mut sorted_blocks = Vec::new();
    let mut block_of_edge = BTreeMap::new();
    for (new_idx, &old_idx) in order.iter().enumerate() {
        for &e in &raw_blocks[old_idx] {
            block_of_edge.insert(e, new_idx);
        }
        sorted_blocks.push(std::mem::take(&mut blocks[old_idx]));
    }

    BlockDecomposition {
        blocks: sorted_blocks,
        cutvertices,
        block_of_edge,
    }
}

/// Classification of a component incident to a cutvertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    Big,
    Small,
    Tail,
}

/// One component of `g - v` together with `v` itself.
#[derive(Debug, Clone)]
pub struct IncidentComponent {
    pub cutvertex: V,
    /// Vertex set including the cutvertex.
    pub vertices: BTreeSet<V>,
    pub kind: ComponentKind,
}

impl IncidentComponent {
    /// Vertices of the component without the cutvertex.
    pub fn without_cutvertex(&self) -> BTreeSet<V> {
        let mut s = self.vertices.clone();
        s.remove(&self.cutvertex);
        s
    }
}

/// Components incident to a cutvertex, classified Big / Small / Tail.
/// Small: C \ v is a path. Tail: C itself (including v) is a path.
pub fn components_incident(g: &Graph, v: V) -> Result<Vec<IncidentComponent>> {
    let mut removed = BTreeSet::new();
    removed.insert(v);
    let comps = g.components_without(&removed);
    if comps.len() < 2 {
        return Err(Error::NotACutvertex(g.name(v).to_string()));
    }
    Ok(comps
        .into_iter()
        .map(|c| {
            let small = g.induces_path(&c);
            let mut with_v = c.clone();
            with_v.insert(v);
            let kind = if !small {
                ComponentKind::Big
            } else if g.induces_path(&with_v) {
                ComponentKind::Tail
            } else {
                ComponentKind::Small
            };
            IncidentComponent {
                cutvertex: v,
                vertices: with_v,
                kind,
            }
        })
        .collect())
}

/// True iff every path between `ys` and `zs` meets `xs`.
pub fn separates(g: &Graph, xs: &BTreeSet<V>, ys: &BTreeSet<V>, zs: &BTreeSet<V>) -> bool {
    // components of g - xs; ys and zs must not share one
    let comps = g.components_without(xs);
    for c in comps {
        let hits_y = ys.iter().any(|y| c.contains(y));
        let hits_z = zs.iter().any(|z| c.contains(z));
        if hits_y && hits_z {
            return false;
        }
    }
    // a vertex both in ys and zs outside xs is a trivial path
    if ys.iter().any(|y| zs.contains(y) && !xs.contains(y)) {
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_rejects_loops_and_duplicates() {
        assert!(matches!(
            Graph::build(&[("a", "a")], &[]),
            Err(Error::SelfLoop(_))
        ));
        assert!(matches!(
            Graph::build(&[("a", "b"), ("b", "a")], &[]),
            Err(Error::DuplicateEdge(_, _))
        ));
        let g = Graph::build(&[], &["a"]).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn build_triangle() {
        let g = Graph::build(&[("a", "b"), ("b", "c"), ("c", "a")], &[]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert!(g.is_connected());
    }

    #[test]
    fn blocks_of_cycle_with_pendant() {
        // C5 plus pendant edge at vertex 0
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]);
        let dec = block_cut_decomposition(&g);
        assert_eq!(dec.blocks.len(), 2);
        assert_eq!(dec.cutvertices.iter().copied().collect::<Vec<_>>(), vec![0]);
        let sizes: Vec<usize> = dec.blocks.iter().map(|b| b.len()).collect();
        assert!(sizes.contains(&5) && sizes.contains(&2));
    }

    #[test]
    fn biconnected_cycle_single_block() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let dec = block_cut_decomposition(&g);
        assert_eq!(dec.blocks.len(), 1);
        assert!(dec.cutvertices.is_empty());
    }

    #[test]
    fn star_components_are_tails() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let comps = components_incident(&g, 0).unwrap();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.kind == ComponentKind::Tail));
    }

    #[test]
    fn c5_pendant_components() {
        // cutvertex 0: C5 remnant is Small (not Tail), pendant is Tail
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]);
        let comps = components_incident(&g, 0).unwrap();
        assert_eq!(comps.len(), 2);
        let kinds: Vec<ComponentKind> = comps.iter().map(|c| c.kind).collect();
        assert!(kinds.contains(&ComponentKind::Small));
        assert!(kinds.contains(&ComponentKind::Tail));
        let small = comps.iter().find(|c| c.kind == ComponentKind::Small).unwrap();
        assert_eq!(small.vertices.len(), 5);
    }

    #[test]
    fn not_a_cutvertex_is_rejected() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(components_incident(&g, 0).is_err());
    }

    #[test]
    fn separates_path_and_cycle() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let b: BTreeSet<V> = [1].into();
        let a: BTreeSet<V> = [0].into();
        let c: BTreeSet<V> = [2].into();
        assert!(separates(&path, &b, &a, &c));
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(!separates(&c4, &b, &a, &c));
    }

    #[test]
    fn incident_components_pairwise_meet_in_cutvertex() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (0, 5), (5, 6)]);
        let comps = components_incident(&g, 0).unwrap();
        assert!(comps.len() >= 2);
        for i in 0..comps.len() {
            for j in i + 1..comps.len() {
                let inter: Vec<V> = comps[i]
                    .vertices
                    .intersection(&comps[j].vertices)
                    .copied()
                    .collect();
                assert_eq!(inter, vec![0]);
            }
        }
    }
}
