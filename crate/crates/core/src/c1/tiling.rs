use std::fmt;

use super::rect::{Rect, RectClass};
use crate::error::{Error, Result};
use crate::report::{ClaimId, ClaimReport};

/// A board `(0, a, 0, b)` and the tiles claimed to tile it. Tiles are kept
/// in lexicographic `(x1, y1, x2, y2)` order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tiling {
    board: Rect,
    tiles: Vec<Rect>,
}

/// Why a tiling failed validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TilingDefect {
    BadBoard(Rect),
    InvalidTile(Rect),
    OutsideBoard(Rect),
    Overlap(Rect, Rect),
    Uncovered { covered: u64, board: u64 },
}

impl fmt::Display for TilingDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TilingDefect::BadBoard(r) => write!(f, "board {r} is not of the form (0,a,0,b) with a,b >= 1"),
            TilingDefect::InvalidTile(r) => write!(f, "tile {r} is not a valid rectangle"),
            TilingDefect::OutsideBoard(r) => write!(f, "tile {r} extends outside the board"),
            TilingDefect::Overlap(r1, r2) => write!(f, "tiles {r1} and {r2} overlap"),
            TilingDefect::Uncovered { covered, board } => {
                write!(f, "tiles cover {covered} of {board} squares")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    AllEven,
    AllOdd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::AllEven => "AllEven",
            Parity::AllOdd => "AllOdd",
        })
    }
}

impl Tiling {
    /// Builds a board `(0, a, 0, b)` with the given tiles; no validation.
    pub fn new(a: u32, b: u32, tiles: impl IntoIterator<Item = Rect>) -> Self {
        Self::with_board(Rect::board(a, b), tiles)
    }

    pub fn with_board(board: Rect, tiles: impl IntoIterator<Item = Rect>) -> Self {
        let mut tiles: Vec<Rect> = tiles.into_iter().collect();
        tiles.sort();
        Tiling { board, tiles }
    }

    pub fn board(&self) -> Rect {
        self.board
    }

    pub fn tiles(&self) -> &[Rect] {
        &self.tiles
    }

    pub fn width(&self) -> u32 {
        self.board.x2
    }

    pub fn height(&self) -> u32 {
        self.board.y2
    }

    /// Checks the board shape, tile validity, containment, pairwise
    /// disjointness and total area, reporting the first defect found.
    pub fn validate(&self) -> Result<()> {
        let defect = |d| Err(Error::InvalidTiling(d));
        let b = self.board;
        if b.x1 != 0 || b.y1 != 0 || !b.is_valid() {
            return defect(TilingDefect::BadBoard(b));
        }
        for t in &self.tiles {
            if !t.is_valid() {
                return defect(TilingDefect::InvalidTile(*t));
            }
            if !t.inside(&b) {
                return defect(TilingDefect::OutsideBoard(*t));
            }
        }
        if let Some((r1, r2)) = first_overlap(&self.tiles) {
            return defect(TilingDefect::Overlap(r1, r2));
        }
        let covered: u64 = self.tiles.iter().map(Rect::area).sum();
        if covered != b.area() {
            return defect(TilingDefect::Uncovered {
                covered,
                board: b.area(),
            });
        }
        Ok(())
    }

    fn require_odd_valid(&self) -> Result<()> {
        self.validate()?;
        if self.width().is_multiple_of(2) || self.height().is_multiple_of(2) {
            return Err(Error::PreconditionFailed(format!(
                "board sides must be odd, got {}x{}",
                self.width(),
                self.height()
            )));
        }
        Ok(())
    }

    /// First green tile in lexicographic order. Requires a valid tiling of an
    /// odd-by-odd board.
    pub fn find_green_tile(&self) -> Result<Rect> {
        self.require_odd_valid()?;
        self.tiles
            .iter()
            .copied()
            .find(|t| t.classify() == Ok(RectClass::Green))
            .ok_or_else(|| {
                Error::TheoremViolation(format!("no green tile on board {}", self.board))
            })
    }

    /// First tile (lexicographic order) whose four distances to the board
    /// sides share parity, scanning every tile rather than only green ones.
    pub fn witness(&self) -> Result<(Rect, Parity)> {
        self.require_odd_valid()?;
        self.tiles
            .iter()
            .find_map(|t| shared_parity(&distances(t, &self.board)).map(|p| (*t, p)))
            .ok_or_else(|| {
                Error::TheoremViolation(format!("no parity witness on board {}", self.board))
            })
    }
}

/// `[x1 - X1, X2 - x2, y1 - Y1, Y2 - y2]` for `inner` inside `outer`.
pub fn distances(inner: &Rect, outer: &Rect) -> [u32; 4] {
    [
        inner.x1 - outer.x1,
        outer.x2 - inner.x2,
        inner.y1 - outer.y1,
        outer.y2 - inner.y2,
    ]
}

pub fn shared_parity(ds: &[u32; 4]) -> Option<Parity> {
    if ds.iter().all(|d| d % 2 == 0) {
        Some(Parity::AllEven)
    } else if ds.iter().all(|d| d % 2 == 1) {
        Some(Parity::AllOdd)
    } else {
        None
    }
}

fn first_overlap(rs: &[Rect]) -> Option<(Rect, Rect)> {
    for (i, r1) in rs.iter().enumerate() {
        for r2 in &rs[i + 1..] {
            if r1.overlaps(r2) {
                return Some((*r1, *r2));
            }
        }
    }
    None
}

pub fn non_overlapping(rs: &[Rect]) -> bool {
    first_overlap(rs).is_none()
}

/// Union of the tiles' squares equals the squares of `r`.
pub fn cover(rs: &[Rect], r: &Rect) -> bool {
    if !rs.iter().all(|t| t.inside(r)) {
        return false;
    }
    if non_overlapping(rs) {
        rs.iter().map(Rect::area).sum::<u64>() == r.area()
    } else {
        super::literal::cover(rs, r)
    }
}

/// Area, containment and disjointness together decide `cover` and
/// `non_overlapping` at once.
pub fn tiles(rs: &[Rect], r: &Rect) -> bool {
    non_overlapping(rs)
        && rs.iter().all(|t| t.inside(r))
        && rs.iter().map(Rect::area).sum::<u64>() == r.area()
}

/// For green `inner` inside green `outer`, the four side distances share
/// parity.
pub fn parity_lemma_check(inner: &Rect, outer: &Rect) -> Result<ClaimReport> {
    let pre = |msg: &str| Err(Error::PreconditionFailed(format!("{msg}: {inner} in {outer}")));
    if !inner.is_valid() || !outer.is_valid() {
        return pre("both rects must be valid");
    }
    if inner.classify()? != RectClass::Green || outer.classify()? != RectClass::Green {
        return pre("both rects must be green");
    }
    if !inner.inside(outer) {
        return pre("inner rect must lie inside outer rect");
    }
    let ds = distances(inner, outer);
    let coords = vec![
        inner.x1 as u64,
        inner.x2 as u64,
        inner.y1 as u64,
        inner.y2 as u64,
        outer.x1 as u64,
        outer.x2 as u64,
        outer.y1 as u64,
        outer.y2 as u64,
    ];
    let report = ClaimReport::new(ClaimId::C1ParityLemma).steps(1);
    Ok(match shared_parity(&ds) {
        Some(p) => report
            .witness(ds.iter().map(|&d| d as u64).collect())
            .detail(p.to_string()),
        None => report.fail(coords),
    })
}
