//! The Fano plane on the point set `Z7`.
//!
//! Point `j` is paired with the line `{j+1, j+2, j+4}`; this correspondence
//! fixes line indices everywhere else in the crate.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A point of the Fano plane, i.e. a residue mod 7.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct Point(u8);

impl Point {
    /// All seven points in ascending order.
    pub const ALL: [Point; 7] = [
        Point(0),
        Point(1),
        Point(2),
        Point(3),
        Point(4),
        Point(5),
        Point(6),
    ];

    /// Reduces `value` mod 7.
    pub const fn new(value: u8) -> Point {
        Point(value % 7)
    }

    /// Parses a single ASCII digit `0..=6`.
    pub fn from_digit(c: char) -> Result<Point> {
        match c.to_digit(10) {
            Some(d) if d < 7 => Ok(Point(d as u8)),
            _ => Err(Error::Parse(format!("'{c}' is not a point of Z7"))),
        }
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// Translation `p ↦ p + t`.
    pub const fn shift(self, t: u8) -> Point {
        Point((self.0 + t % 7) % 7)
    }

    /// Multiplication `p ↦ k·p`.
    pub const fn scale(self, k: u8) -> Point {
        Point((self.0 * (k % 7)) % 7)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A line: an unordered 3-set of points, stored sorted ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line([Point; 3]);

impl Line {
    /// Validates that `points` form a line of the plane.
    pub fn try_from_points(points: [Point; 3]) -> Result<Line> {
        let mut sorted = points;
        sorted.sort();
        LINES
            .iter()
            .find(|l| l.0 == sorted)
            .copied()
            .ok_or(Error::NotALine(points.map(Point::value)))
    }

    pub fn points(&self) -> [Point; 3] {
        self.0
    }

    pub fn contains(&self, p: Point) -> bool {
        self.0.contains(&p)
    }

    /// The `j` with `line(j) == self`.
    pub fn index(&self) -> Point {
        Point::ALL
            .into_iter()
            .find(|&j| line(j) == *self)
            .expect("a constructed Line is always one of the seven lines")
    }

    /// The six orderings of this line in lexicographic order.
    pub fn orderings(&self) -> [OrderedLine; 6] {
        let [a, b, c] = self.0;
        [
            OrderedLine([a, b, c]),
            OrderedLine([a, c, b]),
            OrderedLine([b, a, c]),
            OrderedLine([b, c, a]),
            OrderedLine([c, a, b]),
            OrderedLine([c, b, a]),
        ]
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

/// A line written in a fixed order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedLine([Point; 3]);

impl OrderedLine {
    pub fn new(seq: [Point; 3]) -> Result<OrderedLine> {
        Line::try_from_points(seq)?;
        if seq[0] == seq[1] || seq[1] == seq[2] || seq[0] == seq[2] {
            return Err(Error::NotALine(seq.map(Point::value)));
        }
        Ok(OrderedLine(seq))
    }

    pub fn seq(&self) -> [Point; 3] {
        self.0
    }

    pub fn line(&self) -> Line {
        let mut s = self.0;
        s.sort();
        Line(s)
    }
}

impl fmt::Display for OrderedLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

const fn make_line(j: u8) -> Line {
    let mut p = [(j + 1) % 7, (j + 2) % 7, (j + 4) % 7];
    // three-element sort
    if p[0] > p[1] {
        let t = p[0];
        p[0] = p[1];
        p[1] = t;
    }
    if p[1] > p[2] {
        let t = p[1];
        p[1] = p[2];
        p[2] = t;
    }
    if p[0] > p[1] {
        let t = p[0];
        p[0] = p[1];
        p[1] = t;
    }
    Line([Point(p[0]), Point(p[1]), Point(p[2])])
}

/// `LINES[j] == line(j)`.
pub const LINES: [Line; 7] = [
    make_line(0),
    make_line(1),
    make_line(2),
    make_line(3),
    make_line(4),
    make_line(5),
    make_line(6),
];

/// The line `{j+1, j+2, j+4}`.
pub fn line(j: Point) -> Line {
    LINES[j.index()]
}

/// Index of the line spanned by an arbitrary 3-set, if it is one.
pub fn line_index(points: [Point; 3]) -> Result<Point> {
    Line::try_from_points(points).map(|l| l.index())
}

/// The third point on the line through `p` and `q`.
pub fn third_point(p: Point, q: Point) -> Result<Point> {
    if p == q {
        return Err(Error::DegeneratePair(p.value()));
    }
    Ok(third_point_unchecked(p, q))
}

pub(crate) fn third_point_unchecked(p: Point, q: Point) -> Point {
    let l = LINES
        .iter()
        .find(|l| l.contains(p) && l.contains(q))
        .expect("two distinct points span a line");
    l.0.into_iter().find(|&r| r != p && r != q).unwrap()
}

/// The three lines through `p`, in ascending order.
pub fn lines_through(p: Point) -> Vec<Line> {
    let mut v: Vec<Line> = LINES.iter().copied().filter(|l| l.contains(p)).collect();
    v.sort();
    v
}

/// The four lines missing `p`, in ascending order.
pub fn lines_avoiding(p: Point) -> Vec<Line> {
    let mut v: Vec<Line> = LINES.iter().copied().filter(|l| !l.contains(p)).collect();
    v.sort();
    v
}

/// A permutation of the points that maps lines to lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Collineation([Point; 7]);

impl Collineation {
    pub const IDENTITY: Collineation = Collineation(Point::ALL);

    /// Accepts `images` only if it is a bijection preserving the line set.
    pub fn new(images: [Point; 7]) -> Option<Collineation> {
        let mut seen = [false; 7];
        for p in images {
            if std::mem::replace(&mut seen[p.index()], true) {
                return None;
            }
        }
        let c = Collineation(images);
        LINES
            .iter()
            .all(|l| Line::try_from_points(l.points().map(|p| c.apply(p))).is_ok())
            .then_some(c)
    }

    pub fn translation(t: u8) -> Collineation {
        Collineation(Point::ALL.map(|p| p.shift(t)))
    }

    /// `p ↦ k·p`; a collineation for `k ∈ {1, 2, 4}`.
    pub fn multiplication(k: u8) -> Option<Collineation> {
        Collineation::new(Point::ALL.map(|p| p.scale(k)))
    }

    pub fn apply(&self, p: Point) -> Point {
        self.0[p.index()]
    }

    pub fn images(&self) -> [Point; 7] {
        self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Collineation) -> Collineation {
        Collineation(other.0.map(|p| self.apply(p)))
    }

    pub fn inverse(&self) -> Collineation {
        let mut inv = [Point(0); 7];
        for p in Point::ALL {
            inv[self.apply(p).index()] = p;
        }
        Collineation(inv)
    }
}

/// All 168 collineations, sorted by image tuple.
pub fn collineations() -> Vec<Collineation> {
    Point::ALL
        .into_iter()
        .permutations(7)
        .filter_map(|perm| Collineation::new(perm.try_into().unwrap()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: [u8; 3]) -> [Point; 3] {
        v.map(Point::new)
    }

    #[test]
    fn line_formula() {
        assert_eq!(line(Point::new(0)).points(), pts([1, 2, 4]));
        assert_eq!(line(Point::new(6)).points(), pts([0, 1, 3]));
        for j in Point::ALL {
            assert!(!line(j).contains(j));
        }
    }

    #[test]
    fn line_index_examples() {
        assert_eq!(line_index(pts([1, 2, 4])).unwrap(), Point::new(0));
        assert_eq!(line_index(pts([2, 3, 5])).unwrap(), Point::new(1));
        assert_eq!(line_index(pts([6, 0, 2])).unwrap(), Point::new(5));
        assert!(matches!(
            line_index(pts([1, 2, 5])),
            Err(Error::NotALine(_))
        ));
        for j in Point::ALL {
            assert_eq!(line(j).index(), j);
        }
    }

    #[test]
    fn third_point_examples() {
        let tp = |a, b| third_point(Point::new(a), Point::new(b)).unwrap();
        assert_eq!(tp(0, 2), Point::new(6));
        assert_eq!(tp(0, 1), Point::new(3));
        for p in Point::ALL {
            for q in Point::ALL {
                if p != q {
                    assert_eq!(third_point(p, q).unwrap(), third_point(q, p).unwrap());
                }
            }
        }
        assert!(matches!(
            third_point(Point::new(3), Point::new(3)),
            Err(Error::DegeneratePair(3))
        ));
    }

    #[test]
    fn pencils_and_antiflags() {
        let avoid: Vec<_> = lines_avoiding(Point::new(0))
            .iter()
            .map(|l| l.points())
            .collect();
        let mut want = vec![
            pts([1, 2, 4]),
            pts([2, 3, 5]),
            pts([3, 4, 6]),
            pts([1, 5, 6]),
        ];
        want.sort();
        assert_eq!(avoid, want);
        let through: Vec<_> = lines_through(Point::new(0))
            .iter()
            .map(|l| l.points())
            .collect();
        assert_eq!(
            through,
            vec![pts([0, 1, 3]), pts([0, 2, 6]), pts([0, 4, 5])]
        );
        for p in Point::ALL {
            assert_eq!(lines_through(p).len(), 3);
            assert_eq!(lines_avoiding(p).len(), 4);
        }
    }

    #[test]
    fn incidence_axioms() {
        for (a, b) in Point::ALL.into_iter().tuple_combinations() {
            let n = LINES
                .iter()
                .filter(|l| l.contains(a) && l.contains(b))
                .count();
            assert_eq!(n, 1);
        }
        for (l, m) in LINES.into_iter().tuple_combinations() {
            let n = Point::ALL
                .iter()
                .filter(|&&p| l.contains(p) && m.contains(p))
                .count();
            assert_eq!(n, 1);
        }
    }

    #[test]
    fn doubling_is_a_collineation() {
        for j in Point::ALL {
            let doubled = line(j).points().map(|p| p.scale(2));
            assert_eq!(Line::try_from_points(doubled).unwrap(), line(j.scale(2)));
        }
        assert!(Collineation::multiplication(2).is_some());
        assert!(Collineation::multiplication(3).is_none());
    }

    #[test]
    fn collineation_group() {
        let all = collineations();
        assert_eq!(all.len(), 168);
        assert!(all.contains(&Collineation::IDENTITY));
        assert!(all.contains(&Collineation::translation(1)));
        let set: std::collections::HashSet<_> = all.iter().copied().collect();
        for a in &all {
            assert!(set.contains(&a.inverse()));
            for b in &all {
                assert!(set.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn ordered_lines() {
        let l = line(Point::new(1));
        let ords = l.orderings();
        let mut sorted = ords;
        sorted.sort();
        assert_eq!(ords, sorted);
        assert!(ords.iter().all(|o| o.line() == l));
        assert!(OrderedLine::new(pts([2, 2, 5])).is_err());
    }
}
