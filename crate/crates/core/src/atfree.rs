//! Asteroidal triple detection with re-checkable witnesses.

use crate::graph::{Graph, V};
use std::collections::BTreeSet;

/// An asteroidal triple with one avoiding path per pair: `paths[0]` joins
/// x and y avoiding N[z], `paths[1]` joins x and z avoiding N[y], `paths[2]`
/// joins y and z avoiding N[x].
#[derive(Debug, Clone)]
pub struct ATWitness {
    pub triple: (V, V, V),
    pub paths: [Vec<V>; 3],
}

impl ATWitness {
    /// Re-check the stored paths against the graph.
    pub fn validate(&self, g: &Graph) -> bool {
        let (x, y, z) = self.triple;
        if g.has_edge(x, y) || g.has_edge(x, z) || g.has_edge(y, z) {
            return false;
        }
        let checks = [(x, y, z), (x, z, y), (y, z, x)];
        for (i, &(a, b, c)) in checks.iter().enumerate() {
            let path = &self.paths[i];
            if path.first() != Some(&a) || path.last() != Some(&b) {
                return false;
            }
            let avoid = g.closed_neighborhood(c);
            if path.iter().any(|v| avoid.contains(v)) {
                return false;
            }
            for w in path.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return false;
                }
            }
        }
        true
    }
}

fn bfs_path(g: &Graph, from: V, to: V, allowed: &BTreeSet<V>) -> Option<Vec<V>> {
    if !allowed.contains(&from) || !allowed.contains(&to) {
        return None;
    }
    let mut prev = vec![usize::MAX; g.n()];
    let mut seen = BTreeSet::new();
    seen.insert(from);
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(from);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u) {
            if allowed.contains(&w) && seen.insert(w) {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// First asteroidal triple in lexicographic order, or None.
///
/// For each excluded vertex z the components of g minus N[z] are labeled
/// once and reused across all pairs.
pub fn find_asteroidal_triple(g: &Graph) -> Option<ATWitness> {
    let n = g.n();
    // comp_label[z][v]: component id of v in g - N[z], usize::MAX inside N[z]
    let mut comp_label: Vec<Vec<usize>> = Vec::with_capacity(n);
    for z in 0..n {
        let avoid = g.closed_neighborhood(z);
        let mut label = vec![usize::MAX; n];
        let mut next = 0usize;
        for s in 0..n {
            if avoid.contains(&s) || label[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            label[s] = next;
            while let Some(u) = stack.pop() {
                for w in g.neighbors(u) {
                    if !avoid.contains(&w) && label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp_label.push(label);
    }
    for x in 0..n {
        for y in x + 1..n {
            if g.has_edge(x, y) {
                continue;
            }
            for z in y + 1..n {
                if g.has_edge(x, z) || g.has_edge(y, z) {
                    continue;
                }
                let xy = comp_label[z][x] != usize::MAX && comp_label[z][x] == comp_label[z][y];
                let xz = comp_label[y][x] != usize::MAX && comp_label[y][x] == comp_label[y][z];
                let yz = comp_label[x][y] != usize::MAX && comp_label[x][y] == comp_label[x][z];
                if xy && xz && yz {
                    let allowed_z: BTreeSet<V> = {
                        let avoid = g.closed_neighborhood(z);
                        (0..n).filter(|v| !avoid.contains(v)).collect()
                    };
                    let allowed_y: BTreeSet<V> = {
                        let avoid = g.closed_neighborhood(y);
                        (0..n).filter(|v| !avoid.contains(v)).collect()
                    };
                    let allowed_x: BTreeSet<V> = {
                        let avoid = g.closed_neighborhood(x);
                        (0..n).filter(|v| !avoid.contains(v)).collect()
                    };
                    let witness = ATWitness {
                        triple: (x, y, z),
                        paths: [
                            bfs_path(g, x, y, &allowed_z).expect("labeled reachable"),
                            bfs_path(g, x, z, &allowed_y).expect("labeled reachable"),
                            bfs_path(g, y, z, &allowed_x).expect("labeled reachable"),
                        ],
                    };
                    debug_assert!(witness.validate(g));
                    return Some(witness);
                }
            }
        }
    }
    None
}

pub fn is_at_free(g: &Graph) -> bool {
    find_asteroidal_triple(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

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
    fn three_sun_has_at() {
        let w = find_asteroidal_triple(&three_sun()).unwrap();
        assert_eq!(w.triple, (3, 4, 5));
        assert!(w.validate(&three_sun()));
    }

    #[test]
    fn c5_pendant_is_at_free() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]);
        assert!(is_at_free(&g));
    }

    #[test]
    fn claw_is_at_free() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(is_at_free(&g));
    }

    #[test]
    fn small_independence_number_is_at_free() {
        // complete graph minus a perfect matching on 4 vertices: independence 2
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(is_at_free(&g));
    }

    #[test]
    fn triangle_plus_pendant_is_at_free() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]);
        assert!(is_at_free(&g));
    }
}
