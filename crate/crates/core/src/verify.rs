//! Independent checking: recompute intersection graphs from drawings,
//! collinearity classes, and the necessary conditions for segment
//! representability (forced collinear edges, interval neighborhoods,
//! bipartite contraction).

use crate::atfree::is_at_free;
use crate::error::{Error, Result};
use crate::geometry::SegmentDrawing;
use crate::graph::{edge, Graph, V};
use std::collections::{BTreeMap, BTreeSet};

/// Intersection graph of the drawing: edge iff the closed segments meet
/// (point touch, crossing or collinear overlap). Vertex names are taken from
/// the reference graph.
pub fn intersection_graph(reference: &Graph, d: &SegmentDrawing) -> Graph {
    let mut g = Graph::new();
    for &v in d.segments.keys() {
        g.add_vertex(reference.name(v));
    }
    let verts: Vec<V> = d.segments.keys().copied().collect();
    for (i, &u) in verts.iter().enumerate() {
        for &v in verts.iter().skip(i + 1) {
            if d.segments[&u].intersects(&d.segments[&v]) {
                let a = g.lookup(reference.name(u)).unwrap();
                let b = g.lookup(reference.name(v)).unwrap();
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// True iff the drawing has one segment per vertex of g and its intersection
/// graph equals g edge-for-edge.
pub fn verify_drawing(g: &Graph, d: &SegmentDrawing) -> Result<bool> {
    if d.segments.len() != g.n() || d.segments.keys().any(|&v| v >= g.n()) {
        return Err(Error::VertexMismatch(format!(
            "{} segments for {} vertices",
            d.segments.len(),
            g.n()
        )));
    }
    let verts: Vec<V> = d.segments.keys().copied().collect();
    for (i, &u) in verts.iter().enumerate() {
        for &v in verts.iter().skip(i + 1) {
            if d.segments[&u].intersects(&d.segments[&v]) != g.has_edge(u, v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}

/// Partition of the vertices into transitive-closure classes of the relation
/// "segments collinear and intersecting".
pub fn collinearity_classes(d: &SegmentDrawing) -> Vec<BTreeSet<V>> {
    let verts: Vec<V> = d.segments.keys().copied().collect();
    let mut dsu = Dsu::new(verts.len());
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            let (su, sv) = (&d.segments[&verts[i]], &d.segments[&verts[j]]);
            if su.intersects(sv) && su.collinear_with(sv) {
                dsu.union(i, j);
            }
        }
    }
    let mut classes: BTreeMap<usize, BTreeSet<V>> = BTreeMap::new();
    for (i, &v) in verts.iter().enumerate() {
        classes.entry(dsu.find(i)).or_default().insert(v);
    }
    classes.into_values().collect()
}

/// All diamond diagonals: edges uv with two nonadjacent common neighbors x, y
/// such that {u,v,x,y} induces a four-cycle plus the single chord uv.
pub fn diamond_diagonals(g: &Graph) -> Vec<(V, V)> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        let common: Vec<V> = g
            .neighbors(u)
            .filter(|&x| x != v && g.has_edge(x, v))
            .collect();
        let mut found = false;
        for (i, &x) in common.iter().enumerate() {
            for &y in common.iter().skip(i + 1) {
                if !g.has_edge(x, y) {
                    found = true;
                }
            }
        }
        if found {
            out.push((u, v));
        }
    }
    out
}

/// Edges lying on some chordless four-cycle. Any segment representation must
/// realize such an edge as a non-collinear contact.
fn edges_in_induced_c4(g: &Graph) -> BTreeSet<(V, V)> {
    let mut out = BTreeSet::new();
    for (u, v) in g.edges() {
        let nu: Vec<V> = g
            .neighbors(u)
            .filter(|&x| x != v && !g.has_edge(x, v))
            .collect();
        let nv: Vec<V> = g
            .neighbors(v)
            .filter(|&y| y != u && !g.has_edge(y, u))
            .collect();
        'search: for &x in &nu {
            for &y in &nv {
                if x != y && g.has_edge(x, y) {
                    out.insert(edge(u, v));
                    break 'search;
                }
            }
        }
    }
    out
}

/// Chordality via maximum cardinality search plus perfect-elimination check.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut weight = vec![0usize; n];
    let mut picked = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !picked[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        picked[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !picked[w] {
                weight[w] += 1;
            }
        }
    }
    order.reverse(); // elimination order
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &order {
        let later: Vec<V> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
        if let Some(&u) = later.iter().min_by_key(|&&w| pos[w]) {
            for &w in &later {
                if w != u && !g.has_edge(u, w) {
                    return false;
                }
            }
        }
    }
    true
}

/// Interval recognition through the classical equivalence: chordal and
/// asteroidal-triple-free.
pub fn is_interval(g: &Graph) -> bool {
    is_chordal(g) && is_at_free(g)
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    for s in 0..n {
        if color[s] != usize::MAX {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u) {
                if color[w] == usize::MAX {
                    color[w] = 1 - color[u];
                    stack.push(w);
                } else if color[w] == color[u] {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailReason {
    /// The forced collinearities and forced non-collinearities contradict.
    ForcedContradiction,
    /// Every admissible collinearity pattern has a component whose closed
    /// neighborhood is not an interval graph (the exhibit is one of them).
    NeighborhoodNotInterval { example: BTreeSet<V> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum B0Status {
    /// Contraction small enough for the exhaustive oracle and confirmed.
    Confirmed,
    /// Contraction too large for the oracle; bipartiteness only.
    Skipped { size: usize },
    NotApplicable,
}

#[derive(Debug, Clone)]
pub struct ComponentReport {
    pub vertices: BTreeSet<V>,
    pub neighborhood_interval: bool,
}

#[derive(Debug, Clone)]
pub enum Verdict {
    Pass,
    Fail(FailReason),
}

#[derive(Debug, Clone)]
pub struct NecessityReport {
    pub forced_edges: Vec<(V, V)>,
    pub chosen_h: Option<Vec<(V, V)>>,
    pub components: Vec<ComponentReport>,
    pub contraction_bipartite: Option<bool>,
    pub contraction_b0: B0Status,
    pub verdict: Verdict,
}

impl NecessityReport {
    pub fn passed(&self) -> bool {
        matches!(self.verdict, Verdict::Pass)
    }
}

/// Exact bounded search for a subgraph H containing all diamond diagonals
/// such that every H-component has an interval closed neighborhood and the
/// contraction of all components is bipartite.
///
/// The search runs over two-colorings of the vertices: H is the set of
/// monochromatic edges, which makes the contraction bipartite by
/// construction. Diamond diagonals force equal colors; edges on chordless
/// four-cycles force unequal colors (a collinear pair there would drag a
/// chordless four-cycle into a closed neighborhood). The remaining freedom is
/// enumerated exhaustively.
pub fn check_necessary_conditions(g: &Graph) -> Result<NecessityReport> {
    check_necessary_conditions_with(g, 22)
}

pub fn check_necessary_conditions_with(g: &Graph, max_free_bits: u32) -> Result<NecessityReport> {
    let n = g.n();
    let forced = diamond_diagonals(g);
    let anti = edges_in_induced_c4(g);

    // constraint graph: equalities from diagonals, inequalities from
    // chordless four-cycles
    let mut dsu = Dsu::new(n);
    for &(u, v) in &forced {
        dsu.union(u, v);
    }
    let mut diseq: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &(u, v) in &anti {
        let (a, b) = (dsu.find(u), dsu.find(v));
        if a == b {
            return Ok(fail_report(forced, FailReason::ForcedContradiction));
        }
        diseq.insert((a.min(b), a.max(b)));
    }
    // relative two-coloring of each constraint component
    let mut rel_color: BTreeMap<usize, u8> = BTreeMap::new();
    let mut comp_of: BTreeMap<usize, usize> = BTreeMap::new();
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in &diseq {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let roots: BTreeSet<usize> = (0..n).map(|v| dsu.find(v)).collect();
    let mut comp_count = 0usize;
    for &r in &roots {
        if comp_of.contains_key(&r) {
            continue;
        }
        let cid = comp_count;
        comp_count += 1;
        rel_color.insert(r, 0);
        comp_of.insert(r, cid);
        let mut stack = vec![r];
        while let Some(u) = stack.pop() {
            for &w in adj.get(&u).into_iter().flatten() {
                if let Some(&cw) = rel_color.get(&w) {
                    if cw == rel_color[&u] {
                        return Ok(fail_report(forced, FailReason::ForcedContradiction));
                    }
                } else {
                    rel_color.insert(w, 1 - rel_color[&u]);
                    comp_of.insert(w, cid);
                    stack.push(w);
                }
            }
        }
    }
    let free_bits = comp_count.saturating_sub(1) as u32;
    if free_bits > max_free_bits {
        return Err(Error::SearchBudgetExceeded(format!(
            "{free_bits} free collinearity choices exceed the cap of {max_free_bits}"
        )));
    }

    let all_edges = g.edges();
    let mut interval_memo: BTreeMap<Vec<V>, bool> = BTreeMap::new();
    let mut first_fail_component: Option<BTreeSet<V>> = None;

    for mask in 0u64..(1u64 << free_bits) {
        let color = |v: V| -> u8 {
            let r = {
                // path-compressed dsu is immutable here; walk parents
                let mut x = v;
                loop {
                    let p = dsurep(&dsu, x);
                    if p == x {
                        break x;
                    }
                    x = p;
                }
            };
            let cid = comp_of[&r];
            let flip = if cid == 0 { 0 } else { ((mask >> (cid - 1)) & 1) as u8 };
            rel_color[&r] ^ flip
        };
        let mono: Vec<(V, V)> = all_edges
            .iter()
            .copied()
            .filter(|&(u, v)| color(u) == color(v))
            .collect();
        // components of the monochromatic subgraph
        let mut h = Dsu::new(n);
        for &(u, v) in &mono {
            h.union(u, v);
        }
        let mut comps: BTreeMap<usize, BTreeSet<V>> = BTreeMap::new();
        for v in 0..n {
            comps.entry(h.find(v)).or_default().insert(v);
        }
        let mut reports = Vec::new();
        let mut ok = true;
        for comp in comps.values() {
            let mut nbhd: BTreeSet<V> = comp.clone();
            for &v in comp {
                nbhd.extend(g.neighbors(v));
            }
            let key: Vec<V> = nbhd.iter().copied().collect();
            let interval = *interval_memo.entry(key).or_insert_with(|| {
                let (sub, _) = g.induced(&nbhd);
                is_interval(&sub)
            });
            reports.push(ComponentReport {
                vertices: comp.clone(),
                neighborhood_interval: interval,
            });
            if !interval {
                if first_fail_component.is_none() {
                    first_fail_component = Some(comp.clone());
                }
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        // contraction: bipartite by construction; verify and size-check
        let quotient = contraction(g, &comps);
        let bip = is_bipartite(&quotient);
        debug_assert!(bip);
        let b0_status = if quotient.n() <= 7 {
            match crate::oracle::brute_force_b0(&quotient, &crate::oracle::SearchBudget::default())
            {
                Ok(crate::oracle::B0Outcome::Drawing(_)) => B0Status::Confirmed,
                Ok(crate::oracle::B0Outcome::NotB0) => continue,
                _ => B0Status::Skipped { size: quotient.n() },
            }
        } else {
            B0Status::Skipped { size: quotient.n() }
        };
        return Ok(NecessityReport {
            forced_edges: forced,
            chosen_h: Some(mono),
            components: reports,
            contraction_bipartite: Some(bip),
            contraction_b0: b0_status,
            verdict: Verdict::Pass,
        });
    }

    let reason = match first_fail_component {
        Some(example) => FailReason::NeighborhoodNotInterval { example },
        None => FailReason::ForcedContradiction,
    };
    Ok(fail_report(forced, reason))
}

fn dsurep(dsu: &Dsu, x: usize) -> usize {
    dsu.parent[x]
}

fn fail_report(forced: Vec<(V, V)>, reason: FailReason) -> NecessityReport {
    NecessityReport {
        forced_edges: forced,
        chosen_h: None,
        components: Vec::new(),
        contraction_bipartite: None,
        contraction_b0: B0Status::NotApplicable,
        verdict: Verdict::Fail(reason),
    }
}

/// Simple minor obtained by contracting each part to a single vertex.
fn contraction(g: &Graph, parts: &BTreeMap<usize, BTreeSet<V>>) -> Graph {
    let mut part_of: BTreeMap<V, usize> = BTreeMap::new();
    for (i, comp) in parts.values().enumerate() {
        for &v in comp {
            part_of.insert(v, i);
        }
    }
    let mut q = Graph::new();
    for i in 0..parts.len() {
        q.add_vertex(&format!("c{i}"));
    }
    for (u, v) in g.edges() {
        let (a, b) = (part_of[&u], part_of[&v]);
        if a != b && !q.has_edge(a, b) {
            q.add_edge(a, b);
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Point, Segment};

    fn three_sun() -> Graph {
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

    #[test]
    fn intersection_of_disjoint_and_overlapping() {
        let g = Graph::from_edges(2, &[]);
        let mut d = SegmentDrawing::new();
        d.segments
            .insert(0, Segment::new(Point::of(0, 0), Point::of(1, 0)).unwrap());
        d.segments
            .insert(1, Segment::new(Point::of(3, 0), Point::of(4, 0)).unwrap());
        assert!(verify_drawing(&g, &d).unwrap());
        let g2 = Graph::from_edges(2, &[(0, 1)]);
        let mut d2 = SegmentDrawing::new();
        d2.segments
            .insert(0, Segment::new(Point::of(0, 0), Point::of(2, 0)).unwrap());
        d2.segments
            .insert(1, Segment::new(Point::of(1, 0), Point::of(4, 0)).unwrap());
        assert!(verify_drawing(&g2, &d2).unwrap());
    }

    #[test]
    fn empty_drawing_verifies_empty_graph() {
        let g = Graph::new();
        let d = SegmentDrawing::new();
        assert!(verify_drawing(&g, &d).unwrap());
    }

    #[test]
    fn mismatched_vertex_sets_error() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let d = SegmentDrawing::new();
        assert!(matches!(
            verify_drawing(&g, &d),
            Err(Error::VertexMismatch(_))
        ));
    }

    #[test]
    fn collinearity_classes_p3_overlapping() {
        let mut d = SegmentDrawing::new();
        d.segments
            .insert(0, Segment::new(Point::of(0, 0), Point::of(2, 0)).unwrap());
        d.segments
            .insert(1, Segment::new(Point::of(1, 0), Point::of(3, 0)).unwrap());
        d.segments
            .insert(2, Segment::new(Point::of(2, 0), Point::of(5, 0)).unwrap());
        let classes = collinearity_classes(&d);
        assert_eq!(classes.len(), 1);
    }

    #[test]
    fn diamond_diagonal_found() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        assert_eq!(diamond_diagonals(&g), vec![(0, 2)]);
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert!(diamond_diagonals(&c6).is_empty());
    }

    #[test]
    fn three_sun_diagonals_are_inner_triangle() {
        assert_eq!(diamond_diagonals(&three_sun()), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn chordal_and_interval_basics() {
        assert!(is_chordal(&three_sun()));
        assert!(!is_interval(&three_sun()));
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(is_interval(&p4));
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(!is_chordal(&c4));
    }

    #[test]
    fn bipartite_odd_cycle() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(!is_bipartite(&c5));
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert!(is_bipartite(&c6));
    }

    #[test]
    fn three_sun_fails_necessity() {
        let r = check_necessary_conditions(&three_sun()).unwrap();
        assert!(!r.passed());
        assert_eq!(r.forced_edges.len(), 3);
    }

    #[test]
    fn cycles_pass_necessity() {
        for n in 3..8 {
            let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            let g = Graph::from_edges(n, &edges);
            let r = check_necessary_conditions(&g).unwrap();
            assert!(r.passed(), "C{n}");
        }
    }
}
