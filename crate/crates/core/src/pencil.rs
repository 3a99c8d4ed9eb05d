//! Ordered pencils of ordered lines: the 168 vertices of the digraph.
//!
//! A vertex `(x, b1c1, b2c2, b0c0)` is fixed by its base point `x` and the
//! ordered line `b1 b2 b0` avoiding `x`; each `c_i` is the third point of the
//! line through `x` and `b_i`. Three notations are supported: the long tuple,
//! the compact `yup_x` symbol, and the row/column symbol `j_i` of a
//! translation class.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::fano::{
    lines_avoiding, third_point, third_point_unchecked, Collineation, Line, OrderedLine, Point,
};

/// Slot index of a pencil entry, written `1`, `2`, `0` and cycled in that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArcLabel {
    One,
    Two,
    Zero,
}

impl ArcLabel {
    /// Labels in slot order.
    pub const ALL: [ArcLabel; 3] = [ArcLabel::One, ArcLabel::Two, ArcLabel::Zero];

    /// Storage position: `1 → 0`, `2 → 1`, `0 → 2`.
    pub const fn slot(self) -> usize {
        match self {
            ArcLabel::One => 0,
            ArcLabel::Two => 1,
            ArcLabel::Zero => 2,
        }
    }

    pub const fn from_slot(slot: usize) -> ArcLabel {
        match slot % 3 {
            0 => ArcLabel::One,
            1 => ArcLabel::Two,
            _ => ArcLabel::Zero,
        }
    }

    /// The printed value `1`, `2` or `0`.
    pub const fn value(self) -> u8 {
        match self {
            ArcLabel::One => 1,
            ArcLabel::Two => 2,
            ArcLabel::Zero => 0,
        }
    }

    pub fn from_value(v: u8) -> Option<ArcLabel> {
        match v {
            1 => Some(ArcLabel::One),
            2 => Some(ArcLabel::Two),
            0 => Some(ArcLabel::Zero),
            _ => None,
        }
    }

    /// Cyclic successor `1 → 2 → 0 → 1`.
    pub const fn succ(self) -> ArcLabel {
        ArcLabel::from_slot(self.slot() + 1)
    }

    pub const fn pred(self) -> ArcLabel {
        ArcLabel::from_slot(self.slot() + 2)
    }
}

impl fmt::Display for ArcLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// An ordered pencil `(x, b1c1, b2c2, b0c0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DVertex {
    x: Point,
    b: OrderedLine,
    c: [Point; 3],
}

impl DVertex {
    /// Builds the pencil at `x` whose second coordinates are `b`, in slot order.
    pub fn new(x: Point, b: [Point; 3]) -> Result<DVertex> {
        let b = OrderedLine::new(b)?;
        if b.line().contains(x) {
            return Err(Error::PointOnLine { x: x.value() });
        }
        let c = b.seq().map(|bi| third_point_unchecked(x, bi));
        Ok(DVertex { x, b, c })
    }

    pub fn x(&self) -> Point {
        self.x
    }

    pub fn b(&self) -> [Point; 3] {
        self.b.seq()
    }

    pub fn c(&self) -> [Point; 3] {
        self.c
    }

    pub fn b_at(&self, i: ArcLabel) -> Point {
        self.b.seq()[i.slot()]
    }

    pub fn c_at(&self, i: ArcLabel) -> Point {
        self.c[i.slot()]
    }

    pub fn line(&self) -> Line {
        self.b.line()
    }

    pub fn compact(&self) -> CompactSymbol {
        let [y, u, p] = self.b();
        CompactSymbol { y, u, p, x: self.x }
    }

    pub fn rowcol(&self) -> RowColSymbol {
        rowcol(self)
    }

    /// Adds `t` to every coordinate.
    pub fn translate(&self, t: u8) -> DVertex {
        self.map_points(&Collineation::translation(t))
    }

    /// Applies a collineation entrywise.
    pub fn map_points(&self, g: &Collineation) -> DVertex {
        DVertex {
            x: g.apply(self.x),
            b: OrderedLine::new(self.b().map(|p| g.apply(p)))
                .expect("collineations preserve lines"),
            c: self.c.map(|p| g.apply(p)),
        }
    }

    /// Cycles the slots so that slot `k` moves to slot `k - 1`.
    pub fn rotate_slots(&self) -> DVertex {
        let [b1, b2, b0] = self.b();
        DVertex::new(self.x, [b2, b0, b1]).expect("rotation keeps the line")
    }

    /// Long form `(x,b1c1,b2c2,b0c0)`.
    pub fn long(&self) -> String {
        let b = self.b();
        format!(
            "({},{}{},{}{},{}{})",
            self.x, b[0], self.c[0], b[1], self.c[1], b[2], self.c[2]
        )
    }
}

impl fmt::Display for DVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.compact().fmt(f)
    }
}

/// Builds a vertex from its long form, checking every entry `x b_i c_i` is a line.
pub fn decode_long(x: Point, entries: [(Point, Point); 3]) -> Result<DVertex> {
    for (b, c) in entries {
        if b == x {
            return Err(Error::PointOnLine { x: x.value() });
        }
        if third_point(x, b)? != c {
            return Err(Error::InconsistentPencil {
                x: x.value(),
                b: b.value(),
                c: c.value(),
            });
        }
    }
    DVertex::new(x, entries.map(|(b, _)| b))
}

/// Parses `(x,b1c1,b2c2,b0c0)`; whitespace is ignored.
pub fn parse_long(s: &str) -> Result<DVertex> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = cleaned
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("'{s}' is not parenthesised")))?;
    let parts: Vec<&str> = inner.split(',').collect();
    let bad = || Error::Parse(format!("'{s}' is not of the form (x,bc,bc,bc)"));
    if parts.len() != 4 || parts[0].len() != 1 || parts[1..].iter().any(|p| p.len() != 2) {
        return Err(bad());
    }
    let digit = |c: char| Point::from_digit(c);
    let x = digit(parts[0].chars().next().unwrap())?;
    let mut entries = [(Point::new(0), Point::new(0)); 3];
    for (k, part) in parts[1..].iter().enumerate() {
        let mut ch = part.chars();
        entries[k] = (digit(ch.next().unwrap())?, digit(ch.next().unwrap())?);
    }
    decode_long(x, entries)
}

/// The compact symbol `yup_x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompactSymbol {
    pub y: Point,
    pub u: Point,
    pub p: Point,
    pub x: Point,
}

impl CompactSymbol {
    pub fn to_vertex(&self) -> Result<DVertex> {
        DVertex::new(self.x, [self.y, self.u, self.p])
    }

    /// The `yup` part without subscript.
    pub fn stem(&self) -> String {
        format!("{}{}{}", self.y, self.u, self.p)
    }
}

impl fmt::Display for CompactSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}_{}", self.y, self.u, self.p, self.x)
    }
}

impl FromStr for CompactSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.trim().chars().collect();
        if chars.len() != 5 || chars[3] != '_' {
            return Err(Error::Parse(format!("'{s}' is not of the form yup_x")));
        }
        Ok(CompactSymbol {
            y: Point::from_digit(chars[0])?,
            u: Point::from_digit(chars[1])?,
            p: Point::from_digit(chars[2])?,
            x: Point::from_digit(chars[4])?,
        })
    }
}

impl FromStr for DVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('(') {
            parse_long(s)
        } else {
            parse_compact(s)
        }
    }
}

pub fn compact(v: &DVertex) -> CompactSymbol {
    v.compact()
}

pub fn parse_compact(s: &str) -> Result<DVertex> {
    s.parse::<CompactSymbol>()?.to_vertex()
}

/// Row letter `a..f`: lexicographic rank of an ordering among the six of its line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RowLetter(u8);

impl RowLetter {
    pub fn rank(self) -> usize {
        self.0 as usize
    }

    pub fn letter(self) -> char {
        (b'a' + self.0) as char
    }
}

/// The symbol `j_i` naming a translation class of vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RowColSymbol {
    pub j: Point,
    pub i: RowLetter,
}

impl fmt::Display for RowColSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.j, self.i.letter())
    }
}

/// Row/column symbol of the translate of `v` with base point 0.
pub fn rowcol(v: &DVertex) -> RowColSymbol {
    let rep = v.translate(7 - v.x().value());
    let line = rep.line();
    let rank = line
        .orderings()
        .iter()
        .position(|o| o.seq() == rep.b())
        .expect("b is an ordering of its own line");
    RowColSymbol {
        j: line.index(),
        i: RowLetter(rank as u8),
    }
}

pub fn translate(v: &DVertex, t: u8) -> DVertex {
    v.translate(t)
}

/// All 168 vertices, ascending by `x` then lexicographically by `(b1, b2, b0)`.
pub fn enumerate_vertices() -> Vec<DVertex> {
    let mut out = Vec::with_capacity(168);
    for x in Point::ALL {
        let mut ords: Vec<OrderedLine> = lines_avoiding(x)
            .iter()
            .flat_map(|l| l.orderings())
            .collect();
        ords.sort();
        out.extend(ords.into_iter().map(|o| DVertex::new(x, o.seq()).unwrap()));
    }
    out
}

struct VertexTable {
    vertices: Vec<DVertex>,
    index: Vec<u8>,
}

const NO_VERTEX: u8 = u8::MAX;

fn key(x: Point, b: [Point; 3]) -> usize {
    ((x.index() * 7 + b[0].index()) * 7 + b[1].index()) * 7 + b[2].index()
}

fn table() -> &'static VertexTable {
    static TABLE: OnceLock<VertexTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let vertices = enumerate_vertices();
        let mut index = vec![NO_VERTEX; 7 * 7 * 7 * 7];
        for (k, v) in vertices.iter().enumerate() {
            index[key(v.x(), v.b())] = k as u8;
        }
        VertexTable { vertices, index }
    })
}

/// The canonical vertex list, shared.
pub fn vertices() -> &'static [DVertex] {
    &table().vertices
}

/// Position of `v` in [`vertices`].
pub fn index_of(v: &DVertex) -> usize {
    let k = table().index[key(v.x(), v.b())];
    debug_assert_ne!(k, NO_VERTEX);
    k as usize
}

pub fn vertex(index: usize) -> DVertex {
    table().vertices[index]
}
