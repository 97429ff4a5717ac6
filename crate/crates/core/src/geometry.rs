//! Exact rational points and axis-parallel segments. All intersection tests
//! reduce to closed-interval overlap per axis, so every predicate is an exact
//! decision.

use crate::error::{Error, Result};
use crate::graph::V;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::BTreeMap;

pub type Coord = BigRational;

pub fn coord(n: i64) -> Coord {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Coord {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Point {
    pub x: Coord,
    pub y: Coord,
}

impl Point {
    pub fn new(x: Coord, y: Coord) -> Point {
        Point { x, y }
    }

    pub fn of(x: i64, y: i64) -> Point {
        Point::new(coord(x), coord(y))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Horizontal,
    Vertical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    Right,
    Up,
    Left,
    Down,
}

impl Dir {
    pub const ALL: [Dir; 4] = [Dir::Right, Dir::Up, Dir::Left, Dir::Down];

    pub fn axis(self) -> Axis {
        match self {
            Dir::Right | Dir::Left => Axis::Horizontal,
            Dir::Up | Dir::Down => Axis::Vertical,
        }
    }

    pub fn orthogonal_to(self, other: Dir) -> bool {
        self.axis() != other.axis()
    }
}

/// Closed axis-parallel segment; point segments allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub p1: Point,
    pub p2: Point,
}

impl Segment {
    pub fn new(p1: Point, p2: Point) -> Result<Segment> {
        if p1.x != p2.x && p1.y != p2.y {
            return Err(Error::NonAxisParallel);
        }
        Ok(Segment { p1, p2 })
    }

    pub fn point(p: Point) -> Segment {
        Segment {
            p1: p.clone(),
            p2: p,
        }
    }

    pub fn is_point(&self) -> bool {
        self.p1 == self.p2
    }

    /// Axis of a non-point segment.
    pub fn axis(&self) -> Option<Axis> {
        if self.is_point() {
            None
        } else if self.p1.y == self.p2.y {
            Some(Axis::Horizontal)
        } else {
            Some(Axis::Vertical)
        }
    }

    pub fn x_lo(&self) -> &Coord {
        (&self.p1.x).min(&self.p2.x)
    }

    pub fn x_hi(&self) -> &Coord {
        (&self.p1.x).max(&self.p2.x)
    }

    pub fn y_lo(&self) -> &Coord {
        (&self.p1.y).min(&self.p2.y)
    }

    pub fn y_hi(&self) -> &Coord {
        (&self.p1.y).max(&self.p2.y)
    }

    /// Closed intersection test: axis-parallel segments are degenerate boxes,
    /// so they intersect iff both coordinate intervals overlap.
    pub fn intersects(&self, other: &Segment) -> bool {
        self.x_lo() <= other.x_hi()
            && other.x_lo() <= self.x_hi()
            && self.y_lo() <= other.y_hi()
            && other.y_lo() <= self.y_hi()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.x_lo() <= &p.x && &p.x <= self.x_hi() && self.y_lo() <= &p.y && &p.y <= self.y_hi()
    }

    /// Both segments on one horizontal or one vertical line.
    pub fn collinear_with(&self, other: &Segment) -> bool {
        let same_y = self.p1.y == self.p2.y
            && other.p1.y == other.p2.y
            && self.p1.y == other.p1.y;
        let same_x = self.p1.x == self.p2.x
            && other.p1.x == other.p2.x
            && self.p1.x == other.p1.x;
        same_y || same_x
    }

    /// Does the open ray from `p` along `d` meet this segment?
    pub fn blocks_ray(&self, p: &Point, d: Dir) -> bool {
        match d {
            Dir::Right => self.y_lo() <= &p.y && &p.y <= self.y_hi() && self.x_hi() > &p.x,
            Dir::Left => self.y_lo() <= &p.y && &p.y <= self.y_hi() && self.x_lo() < &p.x,
            Dir::Up => self.x_lo() <= &p.x && &p.x <= self.x_hi() && self.y_hi() > &p.y,
            Dir::Down => self.x_lo() <= &p.x && &p.x <= self.x_hi() && self.y_lo() < &p.y,
        }
    }

    /// Grow the segment along its own line to include `q`.
    pub fn extend_to(&mut self, q: Point) -> Result<()> {
        let grown = Segment::new(self.p1.clone(), q.clone())?;
        if !self.is_point() && grown.axis().is_some() && grown.axis() != self.axis() {
            return Err(Error::InvariantBroken("extension off axis".into()));
        }
        // hull of the union
        let (x1, x2) = (
            self.x_lo().clone().min(q.x.clone()),
            self.x_hi().clone().max(q.x.clone()),
        );
        let (y1, y2) = (
            self.y_lo().clone().min(q.y.clone()),
            self.y_hi().clone().max(q.y.clone()),
        );
        if x1 != x2 && y1 != y2 {
            return Err(Error::InvariantBroken("extension not axis-parallel".into()));
        }
        self.p1 = Point::new(x1, y1);
        self.p2 = Point::new(x2, y2);
        Ok(())
    }
}

/// One axis-parallel segment per vertex, exact rational coordinates.
#[derive(Debug, Clone, Default)]
pub struct SegmentDrawing {
    pub segments: BTreeMap<V, Segment>,
}

impl SegmentDrawing {
    pub fn new() -> SegmentDrawing {
        SegmentDrawing {
            segments: BTreeMap::new(),
        }
    }

    /// Bounding box (x_lo, y_lo, x_hi, y_hi); None when empty.
    pub fn bbox(&self) -> Option<(Coord, Coord, Coord, Coord)> {
        let mut it = self.segments.values();
        let first = it.next()?;
        let mut xl = first.x_lo().clone();
        let mut yl = first.y_lo().clone();
        let mut xh = first.x_hi().clone();
        let mut yh = first.y_hi().clone();
        for s in it {
            xl = xl.min(s.x_lo().clone());
            yl = yl.min(s.y_lo().clone());
            xh = xh.max(s.x_hi().clone());
            yh = yh.max(s.y_hi().clone());
        }
        Some((xl, yl, xh, yh))
    }

    /// True iff the open ray from `p` along `d` avoids every segment except
    /// the ones listed in `except`.
    pub fn ray_free(&self, p: &Point, d: Dir, except: &[V]) -> bool {
        self.segments
            .iter()
            .all(|(v, s)| except.contains(v) || !s.blocks_ray(p, d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_rejected() {
        assert!(Segment::new(Point::of(0, 0), Point::of(1, 1)).is_err());
    }

    #[test]
    fn box_overlap_intersection() {
        let h = Segment::new(Point::of(0, 0), Point::of(4, 0)).unwrap();
        let v = Segment::new(Point::of(2, -1), Point::of(2, 3)).unwrap();
        assert!(h.intersects(&v));
        let far = Segment::new(Point::of(5, 1), Point::of(5, 2)).unwrap();
        assert!(!h.intersects(&far));
        let touch = Segment::new(Point::of(4, 0), Point::of(4, 2)).unwrap();
        assert!(h.intersects(&touch));
    }

    #[test]
    fn collinear_overlap_is_intersection() {
        let a = Segment::new(Point::of(0, 0), Point::of(2, 0)).unwrap();
        let b = Segment::new(Point::of(1, 0), Point::of(3, 0)).unwrap();
        assert!(a.intersects(&b));
        assert!(a.collinear_with(&b));
    }

    #[test]
    fn point_segments() {
        let p = Segment::point(Point::of(1, 1));
        assert!(p.is_point());
        let h = Segment::new(Point::of(0, 1), Point::of(2, 1)).unwrap();
        assert!(p.intersects(&h));
        assert!(p.collinear_with(&h));
        let v = Segment::new(Point::of(0, 0), Point::of(0, 2)).unwrap();
        assert!(!p.intersects(&v));
    }

    #[test]
    fn ray_blocking() {
        let s = Segment::new(Point::of(2, 0), Point::of(4, 0)).unwrap();
        let p = Point::of(0, 0);
        assert!(s.blocks_ray(&p, Dir::Right));
        assert!(!s.blocks_ray(&p, Dir::Left));
        assert!(!s.blocks_ray(&p, Dir::Up));
        // open ray: a segment starting exactly at p does not block beyond it
        let at = Segment::point(Point::of(0, 0));
        assert!(!at.blocks_ray(&p, Dir::Right));
    }

    #[test]
    fn extend_keeps_axis() {
        let mut s = Segment::new(Point::of(0, 0), Point::of(2, 0)).unwrap();
        s.extend_to(Point::of(5, 0)).unwrap();
        assert_eq!(s.x_hi(), &coord(5));
        let mut p = Segment::point(Point::of(1, 1));
        p.extend_to(Point::of(1, 4)).unwrap();
        assert_eq!(p.axis(), Some(Axis::Vertical));
    }
}
