//! The figure graphs used throughout the test suites: a 25-vertex
//! biconnected outerpath, the unsafe galleries, the augmentation example,
//! the non-representable gallery, and the 16-vertex graph showing the
//! necessary conditions are not sufficient.

use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    // one-based labels in the figures; vertex "k" gets index k-1
    let mut g = Graph::new();
    for i in 1..=n {
        g.add_vertex(&format!("{i}"));
    }
    for &(u, v) in edges {
        g.add_edge(u - 1, v - 1);
    }
    g
}

/// 25-vertex biconnected outerpath with 13 faces along its dual path.
pub fn outerpath_25() -> Graph {
    build(
        25,
        &[
            (1, 2),
            (2, 3),
            (1, 3),
            (2, 4),
            (4, 5),
            (5, 3),
            (5, 6),
            (6, 3),
            (6, 7),
            (7, 3),
            (7, 8),
            (8, 9),
            (9, 6),
            (9, 10),
            (10, 11),
            (11, 6),
            (11, 14),
            (14, 15),
            (15, 16),
            (16, 10),
            (11, 12),
            (12, 13),
            (13, 14),
            (14, 18),
            (18, 17),
            (17, 13),
            (18, 19),
            (19, 14),
            (19, 20),
            (20, 21),
            (21, 14),
            (21, 22),
            (22, 23),
            (23, 24),
            (24, 14),
            (23, 25),
            (25, 22),
        ],
    )
}

/// The five outerpaths that are not block-safe.
pub fn unsafe_blocks() -> Vec<Graph> {
    vec![
        // fan of four triangles with a pendant at an interior face vertex
        build(
            7,
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 1),
                (6, 2),
                (6, 3),
                (6, 4),
                (3, 7),
            ],
        ),
        // five-cycle with a pendant at every vertex
        build(
            10,
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 1),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 10),
            ],
        ),
        // six-cycle with pendants at three pairwise nonadjacent vertices
        build(
            9,
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 1),
                (1, 7),
                (3, 8),
                (5, 9),
            ],
        ),
        // four-cycle with pendant pairs at three corners, one at the fourth
        build(
            11,
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 1),
                (1, 5),
                (1, 6),
                (2, 7),
                (2, 8),
                (3, 9),
                (4, 10),
                (4, 11),
            ],
        ),
        // four-cycle with pendant pairs at two corners and a triangle on the
        // opposite edge
        build(
            9,
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 1),
                (1, 5),
                (1, 6),
                (2, 7),
                (2, 8),
                (3, 9),
                (9, 4),
            ],
        ),
    ]
}

/// 30-vertex outerplanar graph whose central cutvertex has four big
/// components.
pub fn unsafe_cutvertex() -> Graph {
    build(
        30,
        &[
            // triangle pair
            (1, 2),
            (2, 3),
            (3, 1),
            (2, 4),
            (4, 3),
            // small tree component
            (1, 5),
            (5, 6),
            (6, 7),
            (5, 8),
            (8, 9),
            (9, 10),
            // big star-path component
            (1, 11),
            (11, 12),
            (12, 13),
            (12, 14),
            // square with a pendant
            (1, 15),
            (15, 16),
            (16, 17),
            (17, 1),
            (16, 18),
            // hanging triangle
            (1, 19),
            (19, 20),
            (20, 21),
            (21, 19),
            // pentagon with chord plus two tails
            (1, 22),
            (22, 23),
            (23, 24),
            (24, 25),
            (25, 1),
            (24, 1),
            (22, 26),
            (26, 27),
            (25, 28),
            (28, 29),
            (29, 30),
        ],
    )
}

/// 25-vertex cut-safe, block-safe outerplanar graph with a linear-forest
/// dual — the running augmentation example.
pub fn augmentable_25() -> Graph {
    build(
        25,
        &[
            // diamond block
            (1, 2),
            (2, 3),
            (3, 1),
            (2, 4),
            (4, 3),
            // pendant and quad at 4
            (4, 5),
            (4, 6),
            (6, 7),
            (7, 8),
            (8, 4),
            // two tails at 3
            (3, 9),
            (9, 10),
            (3, 11),
            (11, 12),
            // chain to 14
            (1, 13),
            (13, 14),
            // tail, pendant and chain at 14
            (14, 15),
            (15, 16),
            (16, 17),
            (14, 18),
            (14, 19),
            (19, 20),
            // triangle with tail and pendant
            (20, 21),
            (21, 24),
            (24, 20),
            (21, 22),
            (22, 23),
            (24, 25),
        ],
    )
}

/// 3-sun: triangle 1,2,3 with 4,5,6 attached to its edges.
pub fn three_sun() -> Graph {
    build(
        6,
        &[
            (1, 2),
            (2, 3),
            (3, 1),
            (1, 4),
            (2, 4),
            (2, 5),
            (3, 5),
            (3, 6),
            (1, 6),
        ],
    )
}

/// Kite: three chorded squares and three pendants around one center.
pub fn kite() -> Graph {
    build(
        13,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (1, 3),
            (1, 6),
            (6, 7),
            (7, 5),
            (5, 1),
            (1, 7),
            (1, 8),
            (8, 9),
            (9, 10),
            (10, 1),
            (1, 9),
            (1, 11),
            (1, 12),
            (1, 13),
        ],
    )
}

/// Bookmark: a square sharing corners with two chorded triangles.
pub fn bookmark() -> Graph {
    build(
        7,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (2, 7),
            (7, 5),
            (5, 2),
            (1, 6),
            (6, 7),
            (7, 1),
        ],
    )
}

/// Ninja star: five-cycle, a chorded square on every cycle edge, and a
/// pendant at each chord tip.
pub fn ninja_star() -> Graph {
    build(
        20,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 1),
            // on edge 5-1
            (5, 6),
            (6, 7),
            (7, 1),
            (5, 7),
            (7, 8),
            // on edge 1-2
            (1, 9),
            (9, 10),
            (10, 2),
            (1, 10),
            (10, 11),
            // on edge 2-3
            (2, 12),
            (12, 13),
            (13, 3),
            (2, 13),
            (13, 14),
            // on edge 3-4
            (3, 15),
            (15, 16),
            (16, 4),
            (3, 16),
            (16, 17),
            // on edge 4-5
            (4, 18),
            (18, 19),
            (19, 5),
            (4, 19),
            (19, 20),
        ],
    )
}

/// Attach a chordless four-cycle petal to every listed edge.
fn with_petals(mut g: Graph, petaled: &[(usize, usize)]) -> Graph {
    for &(u, v) in petaled {
        let ui = g.lookup(&format!("{u}")).expect("petal endpoint");
        let vi = g.lookup(&format!("{v}")).expect("petal endpoint");
        let x = g.add_fresh_vertex("p");
        let y = g.add_fresh_vertex("p");
        g.add_edge(ui, x);
        g.add_edge(x, y);
        g.add_edge(y, vi);
    }
    g
}

/// Five-cycle with a petal on every edge (15 vertices).
pub fn odd_cycle_with_petals() -> Graph {
    let base = build(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]);
    with_petals(base, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
}

/// Three pentagons sharing a vertex, all edges petaled except one plain edge
/// per pentagon at the shared vertex (37 vertices).
pub fn petal_triple() -> Graph {
    let base = build(
        13,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 1),
            (1, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (9, 1),
            (1, 10),
            (10, 11),
            (11, 12),
            (12, 13),
            (13, 1),
        ],
    );
    with_petals(
        base,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (1, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (10, 11),
            (11, 12),
            (12, 13),
            (13, 1),
        ],
    )
}

/// Six pentagons around a shared vertex with five plain spokes (60 vertices).
pub fn petal_sextet() -> Graph {
    let base = build(
        20,
        &[
            // spokes
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (1, 6),
            // pentagon rims
            (2, 7),
            (7, 8),
            (8, 3),
            (3, 9),
            (9, 10),
            (10, 4),
            (2, 11),
            (11, 12),
            (12, 13),
            (13, 1),
            (4, 14),
            (14, 15),
            (15, 5),
            (5, 16),
            (16, 17),
            (17, 6),
            (6, 18),
            (18, 19),
            (19, 20),
            (20, 1),
        ],
    );
    with_petals(
        base,
        &[
            (2, 7),
            (7, 8),
            (8, 3),
            (3, 9),
            (9, 10),
            (10, 4),
            (2, 11),
            (11, 12),
            (12, 13),
            (13, 1),
            (4, 14),
            (14, 15),
            (15, 5),
            (5, 16),
            (16, 17),
            (17, 6),
            (6, 18),
            (18, 19),
            (19, 20),
            (20, 1),
        ],
    )
}

/// All seven graphs of the non-representable gallery.
pub fn forbidden_gallery() -> Vec<(&'static str, Graph)> {
    vec![
        ("three-sun", three_sun()),
        ("kite", kite()),
        ("bookmark", bookmark()),
        ("ninja-star", ninja_star()),
        ("odd-cycle-petals", odd_cycle_with_petals()),
        ("petal-triple", petal_triple()),
        ("petal-sextet", petal_sextet()),
    ]
}

/// Two hexagons joined by a bridge, with two triangle ears at each bridge
/// endpoint (16 vertices). Satisfies the necessary conditions although it has
/// no segment representation.
pub fn insufficiency_16() -> Graph {
    build(
        16,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 1),
            (7, 8),
            (8, 9),
            (9, 10),
            (10, 11),
            (11, 12),
            (12, 7),
            (1, 7),
            (1, 13),
            (13, 2),
            (1, 14),
            (14, 6),
            (7, 15),
            (15, 8),
            (7, 16),
            (16, 12),
        ],
    )
}

/// Five-cycle with a pendant vertex: asteroidal-triple-free and linear, yet
/// no biconnected AT-free outerplanar supergraph contains it induced.
pub fn c5_pendant() -> Graph {
    build(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 6)])
}

/// Large linear outerplanar example (65 vertices).
pub fn linear_65() -> Graph {
    build(
        65,
        &[
            (1, 2),
            (2, 3),
            (3, 1),
            (2, 4),
            (4, 3),
            (1, 53),
            (53, 54),
            (54, 55),
            (53, 56),
            (56, 57),
            (57, 58),
            (1, 59),
            (59, 60),
            (60, 61),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (9, 4),
            (7, 10),
            (10, 11),
            (11, 8),
            (10, 12),
            (12, 13),
            (13, 14),
            (14, 10),
            (10, 15),
            (15, 16),
            (16, 17),
            (17, 18),
            (18, 10),
            (10, 17),
            (10, 19),
            (19, 20),
            (20, 21),
            (11, 22),
            (22, 23),
            (23, 24),
            (9, 25),
            (25, 26),
            (4, 27),
            (27, 28),
            (28, 29),
            (29, 4),
            (30, 27),
            (29, 31),
            (4, 32),
            (32, 33),
            (33, 34),
            (4, 35),
            (35, 36),
            (1, 37),
            (37, 38),
            (38, 39),
            (39, 40),
            (40, 1),
            (1, 38),
            (1, 41),
            (41, 42),
            (42, 43),
            (1, 44),
            (44, 45),
            (45, 46),
            (46, 47),
            (47, 1),
            (1, 46),
            (44, 48),
            (48, 49),
            (47, 50),
            (50, 51),
            (51, 52),
            (3, 62),
            (62, 63),
            (3, 64),
            (64, 65),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outerplanar::recognize_outerplanar;

    #[test]
    fn counts() {
        let g = outerpath_25();
        assert_eq!(g.n(), 25);
        assert_eq!(g.m(), 37);
        assert_eq!(unsafe_cutvertex().n(), 30);
        assert_eq!(augmentable_25().n(), 25);
        assert_eq!(augmentable_25().m(), 28);
        assert_eq!(ninja_star().n(), 20);
        assert_eq!(ninja_star().m(), 30);
        assert_eq!(odd_cycle_with_petals().n(), 15);
        assert_eq!(petal_triple().n(), 37);
        assert_eq!(petal_sextet().n(), 60);
        assert_eq!(insufficiency_16().n(), 16);
        assert_eq!(insufficiency_16().m(), 21);
        assert_eq!(linear_65().n(), 65);
    }

    #[test]
    fn all_fixtures_outerplanar() {
        for (name, g) in forbidden_gallery() {
            assert!(recognize_outerplanar(&g).is_ok(), "{name}");
        }
        assert!(recognize_outerplanar(&outerpath_25()).is_ok());
        assert!(recognize_outerplanar(&unsafe_cutvertex()).is_ok());
        assert!(recognize_outerplanar(&augmentable_25()).is_ok());
        assert!(recognize_outerplanar(&insufficiency_16()).is_ok());
        assert!(recognize_outerplanar(&linear_65()).is_ok());
    }
}
