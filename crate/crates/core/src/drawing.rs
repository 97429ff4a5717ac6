//! Incremental segment drawing of biconnected outerpaths, face by face along
//! the dual path, keeping the frontier edge extendable; plus the composition
//! for arbitrary linear outerplanar graphs (augment, draw, restrict).
//!
//! Every face attachment re-validates the intersection graph of the partial
//! drawing against the input, so a returned drawing is always verified.

use crate::augment::{embed_in_biconnected_outerpath, ConnectorMode};
use crate::error::{Error, Result};
use crate::geometry::{coord, Axis, Coord, Dir, Point, Segment, SegmentDrawing};
use crate::graph::{edge, Graph, V};
use crate::outerplanar::{outerpath_order, recognize_outerplanar, OuterpathOrder, OuterplanarEmbedding};
use std::collections::BTreeSet;

/// Extendability bookkeeping for the frontier edge of the partial drawing.
#[derive(Debug, Clone)]
pub struct ExtendabilityState {
    /// Frontier edge (canonical order).
    pub edge: (V, V),
    /// Designated shared point of its two segments.
    pub point: Point,
}

fn preference(seg: &Segment) -> Vec<Dir> {
    match seg.axis() {
        Some(Axis::Horizontal) => vec![Dir::Right, Dir::Left],
        Some(Axis::Vertical) => vec![Dir::Up, Dir::Down],
        None => vec![Dir::Right, Dir::Up, Dir::Left, Dir::Down],
    }
}

/// Directions along which `v`'s segment is extendable from `p`: the open ray
/// must avoid every other segment, and a non-point segment only extends on
/// its own axis.
fn empty_dirs(d: &SegmentDrawing, v: V, p: &Point) -> Vec<Dir> {
    let seg = &d.segments[&v];
    preference(seg)
        .into_iter()
        .filter(|&dir| d.ray_free(p, dir, &[v]))
        .collect()
}

/// Directions whose open ray from `p` avoids every segment, restricted to the
/// axes available to both endpoint segments.
fn common_empty_dirs(d: &SegmentDrawing, a: V, c: V, p: &Point) -> Vec<Dir> {
    let pa = preference(&d.segments[&a]);
    let pc = preference(&d.segments[&c]);
    Dir::ALL
        .into_iter()
        .filter(|dir| pa.contains(dir) && pc.contains(dir) && d.ray_free(p, *dir, &[]))
        .collect()
}

/// A point beyond the current bounding box, reached from `p` along `d`.
fn beyond_bbox(d: &SegmentDrawing, p: &Point, dir: Dir) -> Point {
    let (xl, yl, xh, yh) = d.bbox().expect("nonempty drawing");
    let one = coord(1);
    match dir {
        Dir::Right => Point::new(xh + one, p.y.clone()),
        Dir::Left => Point::new(xl - one, p.y.clone()),
        Dir::Up => Point::new(p.x.clone(), yh + one),
        Dir::Down => Point::new(p.x.clone(), yl - one),
    }
}

/// Face cycle oriented as v_0..v_k with {v_k, v_0} the shared-in edge and
/// v_0 its smaller endpoint.
fn orient_face(face: &[V], shared_in: (V, V)) -> Vec<V> {
    let v0 = shared_in.0.min(shared_in.1);
    let vk = shared_in.0.max(shared_in.1);
    let n = face.len();
    let i = face.iter().position(|&u| u == v0).expect("v0 on face");
    let mut fwd: Vec<V> = (0..n).map(|t| face[(i + t) % n]).collect();
    if fwd[1] == vk {
        let mut rev = vec![fwd[0]];
        rev.extend(fwd[1..].iter().rev().copied());
        fwd = rev;
    }
    debug_assert_eq!(*fwd.last().unwrap(), vk);
    fwd
}

/// Uniformly spaced overlapping intervals along a leg from `from` to `to`:
/// interval i of t covers [max(0,2i-3), 2i] * len/(2t), so consecutive
/// intervals overlap in a subsegment, non-consecutive ones are disjoint, the
/// first contains `from` and the last ends exactly at `to`.
fn leg_segments(from: &Point, to: &Point, t: usize) -> Vec<Segment> {
    assert!(t >= 1);
    let dx = &to.x - &from.x;
    let dy = &to.y - &from.y;
    let half = coord(2 * t as i64);
    let mut out = Vec::with_capacity(t);
    for i in 1..=t {
        let lo = coord((2 * i as i64 - 3).max(0));
        let hi = coord(2 * i as i64);
        let p1 = Point::new(
            &from.x + &dx * &lo / &half,
            &from.y + &dy * &lo / &half,
        );
        let p2 = Point::new(
            &from.x + &dx * &hi / &half,
            &from.y + &dy * &hi / &half,
        );
        out.push(Segment::new(p1, p2).expect("leg is axis-parallel"));
    }
    out
}

/// Check that the intersection pattern of drawn segments equals the induced
/// subgraph on the drawn vertices.
fn check_partial(g: &Graph, d: &SegmentDrawing) -> Result<()> {
    let verts: Vec<V> = d.segments.keys().copied().collect();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            let touching = d.segments[&u].intersects(&d.segments[&v]);
            if touching != g.has_edge(u, v) {
                return Err(Error::InvariantBroken(format!(
                    "segments of {} and {} {} but the edge {}",
                    g.name(u),
                    g.name(v),
                    if touching { "intersect" } else { "are disjoint" },
                    if g.has_edge(u, v) { "exists" } else { "does not exist" },
                )));
            }
        }
    }
    Ok(())
}

/// Draw the first face: a triangle becomes three coincident point segments,
/// a longer face is laid out on an axis-parallel rectangle with the endpoints
/// of the frontier edge sharing only a corner.
pub fn draw_base_face(
    emb: &OuterplanarEmbedding,
    order: &OuterpathOrder,
) -> Result<(SegmentDrawing, ExtendabilityState)> {
    let face = &emb.faces[order.faces[0]];
    let e1 = if order.faces.len() > 1 {
        order.shared[0]
    } else {
        order.last_edge
    };
    let mut d = SegmentDrawing::new();
    if face.len() == 3 {
        for &v in &face.vertices {
            d.segments.insert(v, Segment::point(Point::of(0, 0)));
        }
        return Ok((
            d,
            ExtendabilityState {
                edge: e1,
                point: Point::of(0, 0),
            },
        ));
    }
    let cyc = orient_face(&face.vertices, e1);
    let m = cyc.len();
    // side lengths and per-side counts: at least one segment per side
    let base = m / 4;
    let extra = m % 4;
    let counts: Vec<usize> = (0..4).map(|s| base + usize::from(s < extra)).collect();
    let len: Coord = coord(m as i64);
    let zero = coord(0);
    let corners = [
        Point::new(zero.clone(), zero.clone()),
        Point::new(len.clone(), zero.clone()),
        Point::new(len.clone(), len.clone()),
        Point::new(zero.clone(), len.clone()),
    ];
    let mut idx = 0usize;
    for side in 0..4 {
        let from = &corners[side];
        let to = &corners[(side + 1) % 4];
        for seg in leg_segments(from, to, counts[side]) {
            d.segments.insert(cyc[idx], seg);
            idx += 1;
        }
    }
    debug_assert_eq!(idx, m);
    Ok((
        d,
        ExtendabilityState {
            edge: e1,
            point: Point::of(0, 0),
        },
    ))
}

/// Attach the next face of the dual path to the drawing, producing the new
/// frontier state. `shared_in` joins the face to the drawn region,
/// `shared_out` is the next shared edge (or the chosen last edge).
pub fn attach_face(
    g: &Graph,
    d: &mut SegmentDrawing,
    st: &ExtendabilityState,
    face: &[V],
    shared_in: (V, V),
    shared_out: (V, V),
) -> Result<ExtendabilityState> {
    debug_assert_eq!(edge(st.edge.0, st.edge.1), edge(shared_in.0, shared_in.1));
    let p = st.point.clone();
    for &v in &[shared_in.0, shared_in.1] {
        if !d.segments[&v].contains(&p) {
            return Err(Error::InvariantBroken(
                "shared point left the frontier segments".into(),
            ));
        }
    }
    if face.len() == 3 {
        attach_triangle(g, d, &p, shared_in, shared_out)
    } else {
        attach_long_face(g, d, &p, face, shared_in, shared_out)
    }
}

fn attach_triangle(
    g: &Graph,
    d: &mut SegmentDrawing,
    p: &Point,
    shared_in: (V, V),
    shared_out: (V, V),
) -> Result<ExtendabilityState> {
    let ins = [shared_in.0, shared_in.1];
    let outs = [shared_out.0, shared_out.1];
    let a = *ins
        .iter()
        .find(|v| outs.contains(v))
        .ok_or(Error::InvariantBroken("consecutive face edges must share a vertex".into()))?;
    let c = if shared_in.0 == a { shared_in.1 } else { shared_in.0 };
    let b = if shared_out.0 == a {
        shared_out.1
    } else {
        shared_out.0
    };
    let common = common_empty_dirs(d, a, c, p);
    let state = if let Some(&dir) = common.first() {
        let q = beyond_bbox(d, p, dir);
        d.segments.get_mut(&a).unwrap().extend_to(q.clone())?;
        d.segments.get_mut(&c).unwrap().extend_to(q.clone())?;
        d.segments.insert(b, Segment::point(q.clone()));
        ExtendabilityState {
            edge: edge(a, b),
            point: q,
        }
    } else {
        // orthogonal-only: the shared point must touch no third segment
        for (v, s) in &d.segments {
            if *v != a && *v != c && s.contains(p) {
                return Err(Error::InvariantBroken(
                    "apex point occupied by a third segment".into(),
                ));
            }
        }
        d.segments.insert(b, Segment::point(p.clone()));
        ExtendabilityState {
            edge: edge(a, b),
            point: p.clone(),
        }
    };
    check_partial(g, d)?;
    Ok(state)
}

fn attach_long_face(
    g: &Graph,
    d: &mut SegmentDrawing,
    p: &Point,
    face: &[V],
    shared_in: (V, V),
    shared_out: (V, V),
) -> Result<ExtendabilityState> {
    let cyc = orient_face(face, shared_in);
    let k = cyc.len() - 1;
    let j = (0..k)
        .find(|&i| edge(cyc[i], cyc[i + 1]) == edge(shared_out.0, shared_out.1))
        .ok_or(Error::InvariantBroken("outgoing edge not on the face".into()))?;
    let v0 = cyc[0];
    let vk = cyc[k];
    let dirs0 = empty_dirs(d, v0, p);
    let dirsk = empty_dirs(d, vk, p);
    let mut chosen = None;
    'outer: for &d0 in &dirs0 {
        for &dk in &dirsk {
            if d0.orthogonal_to(dk) {
                chosen = Some((d0, dk));
                break 'outer;
            }
        }
    }
    let (d0, dk) =
        chosen.ok_or(Error::InvariantBroken("no orthogonal extension available".into()))?;
    let q0 = beyond_bbox(d, p, d0);
    d.segments.get_mut(&v0).unwrap().extend_to(q0.clone())?;
    let qk = beyond_bbox(d, p, dk);
    d.segments.get_mut(&vk).unwrap().extend_to(qk.clone())?;
    // corner of the two perpendiculars
    let q = if d0.axis() == Axis::Horizontal {
        Point::new(q0.x.clone(), qk.y.clone())
    } else {
        Point::new(qk.x.clone(), q0.y.clone())
    };
    let (count_a, count_b) = if j == 0 {
        (k - 2, 1)
    } else if j == k - 1 {
        (1, k - 2)
    } else {
        (j, k - 1 - j)
    };
    let mut segs = leg_segments(&q0, &q, count_a);
    segs.extend(leg_segments(&q, &qk, count_b));
    for (i, seg) in segs.into_iter().enumerate() {
        d.segments.insert(cyc[1 + i], seg);
    }
    let z = if j == 0 {
        q0
    } else if j == k - 1 {
        qk
    } else {
        q
    };
    check_partial(g, d)?;
    Ok(ExtendabilityState {
        edge: edge(shared_out.0, shared_out.1),
        point: z,
    })
}

/// Draw a biconnected outerpath: base face, then fold the remaining faces
/// along the dual path. The result is verified against the input before
/// returning.
pub fn draw_biconnected_outerpath(
    g: &Graph,
    emb: &OuterplanarEmbedding,
    order: &OuterpathOrder,
) -> Result<SegmentDrawing> {
    let (mut d, mut st) = draw_base_face(emb, order)?;
    check_partial(g, &d)?;
    let f = order.faces.len();
    for t in 1..f {
        let shared_in = order.shared[t - 1];
        let shared_out = if t < f - 1 {
            order.shared[t]
        } else {
            order.last_edge
        };
        let face = emb.faces[order.faces[t]].vertices.clone();
        st = attach_face(g, &mut d, &st, &face, shared_in, shared_out)?;
    }
    if d.segments.len() != g.n() {
        return Err(Error::InvariantBroken("not all vertices drawn".into()));
    }
    check_partial(g, &d)?;
    Ok(d)
}

/// Convenience wrapper: recognize, order and draw a biconnected outerpath.
pub fn draw_outerpath_graph(g: &Graph) -> Result<SegmentDrawing> {
    let emb = recognize_outerplanar(g)?;
    if emb.decomposition.blocks.len() != 1 || emb.decomposition.blocks[0].len() != g.n() {
        return Err(Error::PreconditionViolated("graph is not biconnected".into()));
    }
    let order = outerpath_order(&emb, 0)?;
    draw_biconnected_outerpath(g, &emb, &order)
}

/// Draw any linear outerplanar graph: embed it as an induced subgraph of a
/// biconnected outerpath, draw that, and delete the connector segments.
pub fn draw_linear_outerplanar(g: &Graph) -> Result<SegmentDrawing> {
    let aug = embed_in_biconnected_outerpath(g, ConnectorMode::TwoPath)?;
    let h = &aug.supergraph;
    let order = outerpath_order(&aug.embedding, 0)?;
    let mut d = draw_biconnected_outerpath(h, &aug.embedding, &order)?;
    let keep: BTreeSet<V> = (0..g.n()).collect();
    d.segments.retain(|v, _| keep.contains(v));
    check_partial(g, &d)?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn triangle_three_coincident_points() {
        let d = draw_outerpath_graph(&cycle(3)).unwrap();
        let pts: Vec<&Segment> = d.segments.values().collect();
        assert!(pts.iter().all(|s| s.is_point()));
        assert!(pts.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn rectangle_base_for_cycles() {
        for n in 4..10 {
            let d = draw_outerpath_graph(&cycle(n)).unwrap();
            assert_eq!(d.segments.len(), n);
        }
    }

    #[test]
    fn c4_corner_is_orthogonal() {
        let g = cycle(4);
        let emb = recognize_outerplanar(&g).unwrap();
        let order = outerpath_order(&emb, 0).unwrap();
        let (d, st) = draw_base_face(&emb, &order).unwrap();
        let (x, y) = st.edge;
        let sx = &d.segments[&x];
        let sy = &d.segments[&y];
        assert_ne!(sx.axis(), sy.axis());
        // they share exactly the corner
        assert!(sx.intersects(sy));
        assert!(sx.contains(&st.point) && sy.contains(&st.point));
    }

    #[test]
    fn diamond_draws() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        let d = draw_outerpath_graph(&g).unwrap();
        assert_eq!(d.segments.len(), 4);
    }

    #[test]
    fn fan_strip_draws() {
        // triangle strip: 0-1-2, 1-2-3, 2-3-4 ...
        let mut edges = vec![(0, 1)];
        for i in 0..5 {
            edges.push((i, i + 2));
            edges.push((i + 1, i + 2));
        }
        let g = Graph::from_edges(7, &edges);
        let d = draw_outerpath_graph(&g).unwrap();
        assert_eq!(d.segments.len(), 7);
    }

    #[test]
    fn linear_pipeline_for_paths_and_pendants() {
        for n in 1..8 {
            let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            let g = Graph::from_edges(n.max(1), &edges);
            let d = draw_linear_outerplanar(&g).unwrap();
            assert_eq!(d.segments.len(), g.n());
        }
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]);
        draw_linear_outerplanar(&g).unwrap();
    }
}
