//! Brute-force ground truth at desk scale: exhaustive segment-representation
//! search on a bounded grid, structural enumeration of biconnected
//! outerpaths, enumeration of connected outerplanar graphs up to isomorphism,
//! and containment-based linearity oracles.

use crate::error::{Error, Result};
use crate::geometry::{Point, Segment, SegmentDrawing};
use crate::graph::{block_cut_decomposition, Graph, V};
use crate::outerplanar::recognize_outerplanar;
use std::collections::{BTreeMap, BTreeSet};

/// Budget for the exhaustive searches. Exceeding a budget yields
/// `Indeterminate`, never a wrong verdict.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    /// Cap on grid coordinates per axis; 0 means the complete bound of 2n.
    pub max_grid: usize,
    pub max_vertices: usize,
    pub node_limit: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_grid: 0,
            max_vertices: 7,
            node_limit: 50_000_000,
        }
    }
}

#[derive(Debug, Clone)]
pub enum B0Outcome {
    Drawing(SegmentDrawing),
    NotB0,
    Indeterminate,
}

impl B0Outcome {
    pub fn is_not_b0(&self) -> bool {
        matches!(self, B0Outcome::NotB0)
    }

    pub fn found(&self) -> bool {
        matches!(self, B0Outcome::Drawing(_))
    }
}

#[derive(Clone)]
struct Bitset {
    words: Vec<u64>,
}

impl Bitset {
    fn empty(n: usize) -> Bitset {
        Bitset {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    fn and_into(&self, other: &Bitset, out: &mut Bitset) {
        for ((o, a), b) in out.words.iter_mut().zip(&self.words).zip(&other.words) {
            *o = a & b;
        }
    }

    fn and_not_into(&self, other: &Bitset, out: &mut Bitset) {
        for ((o, a), b) in out.words.iter_mut().zip(&self.words).zip(&other.words) {
            *o = a & !b;
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
struct GridSeg {
    x1: i64,
    y1: i64,
    x2: i64,
    y2: i64,
}

impl GridSeg {
    fn touches(&self, o: &GridSeg) -> bool {
        self.x1 <= o.x2 && o.x1 <= self.x2 && self.y1 <= o.y2 && o.y1 <= self.y2
    }
}

fn universe(grid: i64) -> Vec<GridSeg> {
    let mut out = Vec::new();
    for y in 0..grid {
        for x in 0..grid {
            out.push(GridSeg {
                x1: x,
                y1: y,
                x2: x,
                y2: y,
            });
        }
    }
    for y in 0..grid {
        for x1 in 0..grid {
            for x2 in x1 + 1..grid {
                out.push(GridSeg {
                    x1,
                    y1: y,
                    x2,
                    y2: y,
                });
            }
        }
    }
    for x in 0..grid {
        for y1 in 0..grid {
            for y2 in y1 + 1..grid {
                out.push(GridSeg {
                    x1: x,
                    y1,
                    x2: x,
                    y2,
                });
            }
        }
    }
    out
}

/// Exhaustive segment-representation search on the complete 2n-grid. Any
/// representation by n axis-parallel segments uses at most 2n distinct
/// coordinates per axis, and order-preserving remaps keep the intersection
/// pattern, so the grid search is complete.
pub fn brute_force_b0(g: &Graph, budget: &SearchBudget) -> Result<B0Outcome> {
    let n = g.n();
    if n == 0 {
        return Ok(B0Outcome::Drawing(SegmentDrawing::new()));
    }
    if n > budget.max_vertices {
        return Ok(B0Outcome::Indeterminate);
    }
    let full_grid = 2 * n as i64;
    let grid = if budget.max_grid == 0 {
        full_grid
    } else {
        (budget.max_grid as i64).min(full_grid)
    };
    let complete = grid >= full_grid;
    let uni = universe(grid);
    let u = uni.len();
    let mut touch: Vec<Bitset> = vec![Bitset::empty(u); u];
    for i in 0..u {
        for j in i..u {
            if uni[i].touches(&uni[j]) {
                touch[i].set(j);
                touch[j].set(i);
            }
        }
    }

    // vertex order: breadth-first from a maximum-degree vertex
    let start = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(start);
    seen[start] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    for v in 0..n {
        if !seen[v] {
            order.push(v);
        }
    }

    // root domain: horizontal or point segments, canonical in their orbit
    // under the two axis reflections (the diagonal reflection is spent on
    // forcing horizontality)
    let canon = |s: &GridSeg| -> bool {
        if s.y1 != s.y2 {
            return false;
        }
        let refl_x = (grid - 1 - s.x2, grid - 1 - s.x1);
        if (s.x1, s.x2) > refl_x {
            return false;
        }
        s.y1 <= grid - 1 - s.y1
    };
    let mut domains: Vec<Bitset> = vec![Bitset::empty(u); n];
    for (i, s) in uni.iter().enumerate() {
        for v in 0..n {
            let admissible = if v == order[0] { canon(s) } else { true };
            if admissible {
                domains[v].set(i);
            }
        }
    }

    let mut nodes = 0u64;
    let mut assignment = vec![usize::MAX; n];
    let outcome = place(
        g,
        &order,
        &touch,
        &mut domains,
        &mut assignment,
        0,
        &mut nodes,
        budget.node_limit,
    );
    match outcome {
        PlaceOutcome::Found => {
            let mut d = SegmentDrawing::new();
            for v in 0..n {
                let s = &uni[assignment[v]];
                d.segments.insert(
                    v,
                    Segment::new(Point::of(s.x1, s.y1), Point::of(s.x2, s.y2))
                        .expect("grid segments are axis-parallel"),
                );
            }
            if !crate::verify::verify_drawing(g, &d)? {
                return Err(Error::InvariantBroken("oracle drawing failed verification".into()));
            }
            Ok(B0Outcome::Drawing(d))
        }
        PlaceOutcome::Exhausted => {
            if complete {
                Ok(B0Outcome::NotB0)
            } else {
                Ok(B0Outcome::Indeterminate)
            }
        }
        PlaceOutcome::Budget => Ok(B0Outcome::Indeterminate),
    }
}

enum PlaceOutcome {
    Found,
    Exhausted,
    Budget,
}

#[allow(clippy::too_many_arguments)]
fn place(
    g: &Graph,
    order: &[V],
    touch: &[Bitset],
    domains: &mut [Bitset],
    assignment: &mut [usize],
    depth: usize,
    nodes: &mut u64,
    node_limit: u64,
) -> PlaceOutcome {
    let n = order.len();
    if depth == n {
        return PlaceOutcome::Found;
    }
    // most constrained unplaced vertex
    let v = (0..n)
        .filter(|&v| assignment[v] == usize::MAX)
        .min_by_key(|&v| (domains[v].count(), v))
        .unwrap();
    let cands: Vec<usize> = domains[v].iter_ones().collect();
    let mut budget_hit = false;
    for s in cands {
        *nodes += 1;
        if *nodes > node_limit {
            return PlaceOutcome::Budget;
        }
        assignment[v] = s;
        let mut saved: Vec<(usize, Bitset)> = Vec::new();
        let mut dead = false;
        for u in 0..n {
            if assignment[u] != usize::MAX || u == v {
                continue;
            }
            let mut next = Bitset::empty(touch.len());
            if g.has_edge(u, v) {
                domains[u].and_into(&touch[s], &mut next);
            } else {
                domains[u].and_not_into(&touch[s], &mut next);
            }
            if next.is_empty() {
                dead = true;
            }
            saved.push((u, std::mem::replace(&mut domains[u], next)));
            if dead {
                break;
            }
        }
        if !dead {
            match place(g, order, touch, domains, assignment, depth + 1, nodes, node_limit) {
                PlaceOutcome::Found => return PlaceOutcome::Found,
                PlaceOutcome::Budget => budget_hit = true,
                PlaceOutcome::Exhausted => {}
            }
        }
        for (u, old) in saved.into_iter().rev() {
            domains[u] = old;
        }
        assignment[v] = usize::MAX;
        if budget_hit {
            return PlaceOutcome::Budget;
        }
    }
    PlaceOutcome::Exhausted
}

/// Canonical form for graphs up to 11 or so vertices: color refinement with
/// individualization, minimizing the adjacency code over discrete leaves.
pub fn canonical_code(g: &Graph) -> Vec<u64> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut best: Option<Vec<u64>> = None;
    let init: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let colors = normalize(&init);
    refine_and_branch(g, colors, &mut best);
    best.unwrap()
}

fn normalize(raw: &[usize]) -> Vec<usize> {
    let mut vals: Vec<usize> = raw.to_vec();
    vals.sort_unstable();
    vals.dedup();
    raw.iter()
        .map(|c| vals.binary_search(c).unwrap())
        .collect()
}

fn refine(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..g.n())
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = keys.iter().collect();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = keys
            .iter()
            .map(|k| sorted.binary_search(&k).unwrap())
            .collect();
        if next == colors {
            return colors;
        }
        colors = next;
    }
}

fn refine_and_branch(g: &Graph, colors: Vec<usize>, best: &mut Option<Vec<u64>>) {
    let colors = refine(g, colors);
    let n = g.n();
    let mut cells: BTreeMap<usize, Vec<V>> = BTreeMap::new();
    for v in 0..n {
        cells.entry(colors[v]).or_default().push(v);
    }
    if let Some((_, cell)) = cells.iter().find(|(_, vs)| vs.len() > 1) {
        for &v in cell {
            let mut next: Vec<usize> = colors.iter().map(|&c| c * 2 + 1).collect();
            next[v] -= 1;
            refine_and_branch(g, normalize(&next), best);
        }
        return;
    }
    // discrete: colors form a permutation
    let mut perm = vec![0usize; n];
    for v in 0..n {
        perm[colors[v]] = v;
    }
    let mut code = vec![0u64; (n * n).div_ceil(64)];
    for i in 0..n {
        for j in 0..n {
            if g.has_edge(perm[i], perm[j]) {
                let bit = i * n + j;
                code[bit / 64] |= 1u64 << (bit % 64);
            }
        }
    }
    match best {
        Some(b) if *b <= code => {}
        _ => *best = Some(code),
    }
}

/// Injective map from `pattern` into `host` preserving edges; with `induced`
/// also preserving non-edges.
pub fn contains_subgraph(host: &Graph, pattern: &Graph, induced: bool) -> bool {
    let np = pattern.n();
    let nh = host.n();
    if np > nh || pattern.m() > host.m() {
        return false;
    }
    // order pattern vertices to keep the partial map connected
    let mut order: Vec<V> = Vec::new();
    let mut chosen = vec![false; np];
    for _ in 0..np {
        let v = (0..np)
            .filter(|&v| !chosen[v])
            .max_by_key(|&v| {
                let anchored = pattern.neighbors(v).filter(|&w| chosen[w]).count();
                (anchored, pattern.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        chosen[v] = true;
        order.push(v);
    }
    let mut map = vec![usize::MAX; np];
    let mut used = vec![false; nh];
    fn go(
        host: &Graph,
        pattern: &Graph,
        order: &[V],
        depth: usize,
        map: &mut [usize],
        used: &mut [bool],
        induced: bool,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        'cand: for h in 0..host.n() {
            if used[h] || host.degree(h) < pattern.degree(v) {
                continue;
            }
            for w in 0..pattern.n() {
                if map[w] == usize::MAX {
                    continue;
                }
                let pe = pattern.has_edge(v, w);
                let he = host.has_edge(h, map[w]);
                if pe && !he {
                    continue 'cand;
                }
                if induced && !pe && he {
                    continue 'cand;
                }
            }
            map[v] = h;
            used[h] = true;
            if go(host, pattern, order, depth + 1, map, used, induced) {
                return true;
            }
            map[v] = usize::MAX;
            used[h] = false;
        }
        false
    }
    go(host, pattern, &order, 0, &mut map, &mut used, induced)
}

/// All biconnected outerpaths up to `max_n` vertices, generated structurally
/// by gluing each next face along a boundary edge of the previous one,
/// deduplicated canonically.
pub fn enumerate_biconnected_outerpaths(max_n: usize) -> Result<Vec<Graph>> {
    if max_n > 11 {
        return Err(Error::SearchBudgetExceeded(format!(
            "outerpath enumeration capped at 11 vertices, requested {max_n}"
        )));
    }
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut out: Vec<Graph> = Vec::new();
    fn grow(
        g: &Graph,
        face: &[V],
        prev_shared: Option<(V, V)>,
        max_n: usize,
        seen: &mut BTreeSet<Vec<u64>>,
        out: &mut Vec<Graph>,
    ) {
        if seen.insert(canonical_code(g)) {
            out.push(g.clone());
        }
        let k = face.len();
        for i in 0..k {
            let (a, b) = (face[i], face[(i + 1) % k]);
            if let Some((pa, pb)) = prev_shared {
                if (a == pa && b == pb) || (a == pb && b == pa) {
                    continue;
                }
            }
            for extra in 1..=(max_n.saturating_sub(g.n())) {
                let mut g2 = g.clone();
                let mut new_face = vec![a];
                let mut prev = a;
                for _ in 0..extra {
                    let w = g2.add_fresh_vertex("v");
                    g2.add_edge(prev, w);
                    new_face.push(w);
                    prev = w;
                }
                g2.add_edge(prev, b);
                new_face.push(b);
                grow(&g2, &new_face, Some((a, b)), max_n, seen, out);
            }
        }
    }
    for m in 3..=max_n {
        let edges: Vec<(usize, usize)> = (0..m).map(|i| (i, (i + 1) % m)).collect();
        let g = Graph::from_edges(m, &edges);
        let face: Vec<V> = (0..m).collect();
        grow(&g, &face, None, max_n, &mut seen, &mut out);
    }
    out.sort_by_key(|g| (g.n(), g.m(), canonical_code(g)));
    Ok(out)
}

/// Biconnected outerplanar graphs on exactly `n` vertices up to isomorphism:
/// a polygon plus any non-crossing chord set.
pub fn enumerate_biconnected_outerplanar(n: usize) -> Vec<Graph> {
    assert!((3..=11).contains(&n));
    // enumerate non-crossing chord subsets over the n-gon
    let mut chords: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            chords.push((i, j));
        }
    }
    let crossing = |a: (usize, usize), b: (usize, usize)| -> bool {
        let (i, j) = a;
        let (k, l) = b;
        (i < k && k < j && j < l) || (k < i && i < l && l < j)
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<(usize, usize)>)> = vec![(0, Vec::new())];
    while let Some((idx, chosen)) = stack.pop() {
        if idx == chords.len() {
            let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            edges.extend(chosen.iter().copied());
            let g = Graph::from_edges(n, &edges);
            if seen.insert(canonical_code(&g)) {
                out.push(g);
            }
            continue;
        }
        let c = chords[idx];
        stack.push((idx + 1, chosen.clone()));
        if chosen.iter().all(|&d| !crossing(c, d)) {
            let mut with = chosen;
            with.push(c);
            stack.push((idx + 1, with));
        }
    }
    out
}

/// All connected outerplanar graphs on n vertices up to isomorphism:
/// connected edge-subsets of all maximal outerplanar graphs (polygon
/// triangulations), deduplicated canonically.
pub fn enumerate_outerplanar(n: usize) -> Result<Vec<Graph>> {
    if n > 8 {
        return Err(Error::SearchBudgetExceeded(format!(
            "outerplanar enumeration capped at 8 vertices, requested {n}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![Graph::from_edges(1, &[])]);
    }
    if n == 2 {
        return Ok(vec![Graph::from_edges(2, &[(0, 1)])]);
    }
    fn triangulations(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if hi - lo < 2 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for k in lo + 1..hi {
            let lefts = triangulations(lo, k);
            let rights = triangulations(k, hi);
            for l in &lefts {
                for r in &rights {
                    let mut t = Vec::new();
                    if k > lo + 1 {
                        t.push((lo, k));
                    }
                    if hi > k + 1 {
                        t.push((k, hi));
                    }
                    t.extend(l.iter().copied());
                    t.extend(r.iter().copied());
                    out.push(t);
                }
            }
        }
        out
    }
    let triangulation_chords = triangulations(0, n - 1);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for chords in &triangulation_chords {
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend(chords.iter().copied());
        edges.sort_unstable();
        edges.dedup();
        debug_assert_eq!(edges.len(), 2 * n - 3);
        let full: Vec<(usize, usize)> = edges;
        for mask in 0u64..(1u64 << full.len()) {
            let sub: Vec<(usize, usize)> = full
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if sub.len() < n - 1 {
                continue;
            }
            let g = Graph::from_edges(n, &sub);
            if !g.is_connected() {
                continue;
            }
            if seen.insert(canonical_code(&g)) {
                out.push(g);
            }
        }
    }
    out.sort_by_key(|g| (g.m(), canonical_code(g)));
    Ok(out)
}

/// Linearity oracle. A graph is linear iff it embeds as a spanning subgraph
/// of a biconnected outerpath on the same vertex count (for fewer than three
/// vertices this holds trivially). The induced-containment route with its
/// added-vertex budget is available separately.
pub fn brute_force_linear(g: &Graph) -> Result<bool> {
    if g.n() <= 2 {
        return Ok(true);
    }
    if g.n() > 11 {
        return Err(Error::SearchBudgetExceeded(
            "linearity oracle capped at 11 vertices".into(),
        ));
    }
    let catalog = enumerate_biconnected_outerpaths(g.n())?;
    Ok(spanning_route(g, &catalog))
}

pub fn spanning_route(g: &Graph, catalog: &[Graph]) -> bool {
    catalog
        .iter()
        .filter(|h| h.n() == g.n() && h.m() >= g.m())
        .any(|h| contains_subgraph(h, g, false))
}

/// Induced-containment route: some biconnected outerpath on at most
/// |V| + #blocks - 1 vertices contains g as an induced subgraph.
pub fn brute_force_linear_induced(g: &Graph, catalog: &[Graph]) -> Result<bool> {
    if g.n() <= 2 {
        return Ok(true);
    }
    let blocks = block_cut_decomposition(g).blocks.len();
    let cap = g.n() + blocks - 1;
    if cap > 11 {
        return Err(Error::SearchBudgetExceeded(format!(
            "induced route needs outerpaths up to {cap} vertices"
        )));
    }
    if catalog.iter().all(|h| h.n() < cap) {
        return Err(Error::SearchBudgetExceeded(
            "catalog does not reach the required vertex count".into(),
        ));
    }
    Ok(catalog
        .iter()
        .filter(|h| h.n() >= g.n() && h.n() <= cap)
        .any(|h| contains_subgraph(h, g, true)))
}

/// Exhaustive minor test for the two outerplanarity obstructions, used as an
/// independent oracle for the recognizer.
pub fn has_k4_or_k23_minor(g: &Graph) -> bool {
    has_minor(g, &Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]))
        || has_minor(
            g,
            &Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
        )
}

/// Naive minor containment: enumerate assignments of host vertices to branch
/// sets (0 = unused), requiring connected branch sets and all pattern edges.
pub fn has_minor(g: &Graph, pattern: &Graph) -> bool {
    let k = pattern.n();
    let n = g.n();
    if n < k {
        return false;
    }
    let mut label = vec![0usize; n]; // 0 = unused, 1..=k branch sets
    fn ok(g: &Graph, pattern: &Graph, label: &[usize]) -> bool {
        let k = pattern.n();
        for part in 1..=k {
            let set: BTreeSet<V> = (0..g.n()).filter(|&v| label[v] == part).collect();
            if set.is_empty() {
                return false;
            }
            let start = *set.iter().next().unwrap();
            let mut seenc = BTreeSet::new();
            seenc.insert(start);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for w in g.neighbors(u) {
                    if set.contains(&w) && seenc.insert(w) {
                        stack.push(w);
                    }
                }
            }
            if seenc.len() != set.len() {
                return false;
            }
        }
        for (a, b) in pattern.edges() {
            let mut found = false;
            'scan: for u in 0..g.n() {
                if label[u] != a + 1 {
                    continue;
                }
                for w in g.neighbors(u) {
                    if label[w] == b + 1 {
                        found = true;
                        break 'scan;
                    }
                }
            }
            if !found {
                return false;
            }
        }
        true
    }
    fn assign(g: &Graph, pattern: &Graph, label: &mut Vec<usize>, v: usize) -> bool {
        if v == g.n() {
            return ok(g, pattern, label);
        }
        for part in 0..=pattern.n() {
            label[v] = part;
            if assign(g, pattern, label, v + 1) {
                return true;
            }
        }
        label[v] = 0;
        false
    }
    assign(g, pattern, &mut label, 0)
}

/// Connected outerplanar graph enumeration by brute force over all graphs,
/// used to validate the triangulation-subset route at small n.
pub fn enumerate_outerplanar_bruteforce(n: usize) -> Vec<Graph> {
    assert!(n <= 6);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges);
        if !g.is_connected() || recognize_outerplanar(&g).is_err() {
            continue;
        }
        if seen.insert(canonical_code(&g)) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn c4_is_representable() {
        let out = brute_force_b0(&cycle(4), &SearchBudget::default()).unwrap();
        assert!(out.found());
    }

    #[test]
    fn k4_is_representable_as_interval_graph() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let out = brute_force_b0(&k4, &SearchBudget::default()).unwrap();
        assert!(out.found());
    }

    #[test]
    fn canonical_code_distinguishes_and_identifies() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let p4b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]);
        assert_eq!(canonical_code(&p4), canonical_code(&p4b));
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(canonical_code(&p4), canonical_code(&claw));
    }

    #[test]
    fn outerpath_enumeration_small() {
        let up3 = enumerate_biconnected_outerpaths(3).unwrap();
        assert_eq!(up3.len(), 1); // C3
        let up4 = enumerate_biconnected_outerpaths(4).unwrap();
        assert_eq!(up4.len(), 3); // C3, C4, two glued triangles
    }

    #[test]
    fn outerplanar_enumeration_counts() {
        assert_eq!(enumerate_outerplanar(1).unwrap().len(), 1);
        assert_eq!(enumerate_outerplanar(2).unwrap().len(), 1);
        assert_eq!(enumerate_outerplanar(3).unwrap().len(), 2);
        assert_eq!(enumerate_outerplanar(4).unwrap().len(), 5);
    }

    #[test]
    fn enumeration_routes_agree_small() {
        for n in 3..=5 {
            let a = enumerate_outerplanar(n).unwrap();
            let b = enumerate_outerplanar_bruteforce(n);
            assert_eq!(a.len(), b.len(), "n={n}");
        }
    }

    #[test]
    fn linear_oracle_examples() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert!(brute_force_linear(&p3).unwrap());
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
        assert!(!brute_force_linear(&sun).unwrap());
    }

    #[test]
    fn subgraph_containment() {
        let c5 = cycle(5);
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert!(contains_subgraph(&c5, &p5, false));
        assert!(!contains_subgraph(&c5, &p5, true));
        assert!(contains_subgraph(&c5, &Graph::from_edges(3, &[(0, 1), (1, 2)]), true));
    }

    #[test]
    fn minor_oracle_on_obstructions() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(has_k4_or_k23_minor(&k4));
        assert!(!has_k4_or_k23_minor(&cycle(5)));
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(has_k4_or_k23_minor(&k23));
    }
}
