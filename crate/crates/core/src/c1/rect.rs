use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A unit square, identified by its lower-left corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Square {
    pub x: u32,
    pub y: u32,
}

impl Square {
    pub const fn new(x: u32, y: u32) -> Self {
        Square { x, y }
    }

    pub fn color(self) -> Color {
        if (self.x + self.y).is_multiple_of(2) {
            Color::Green
        } else {
            Color::Yellow
        }
    }

    pub fn is_green(self) -> bool {
        self.color() == Color::Green
    }

    pub fn is_yellow(self) -> bool {
        self.color() == Color::Yellow
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Green,
    Yellow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RectClass {
    Green,
    Yellow,
    Mixed,
}

impl fmt::Display for RectClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RectClass::Green => "Green",
            RectClass::Yellow => "Yellow",
            RectClass::Mixed => "Mixed",
        })
    }
}

/// Axis-aligned rectangle covering unit squares `[x1, x2) x [y1, y2)`.
///
/// Validity (`x1 < x2 && y1 < y2`) is checked, not enforced; an invalid rect
/// simply has no squares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rect {
    pub x1: u32,
    pub x2: u32,
    pub y1: u32,
    pub y2: u32,
}

impl Rect {
    pub const fn new(x1: u32, x2: u32, y1: u32, y2: u32) -> Self {
        Rect { x1, x2, y1, y2 }
    }

    /// The board `(0, a, 0, b)`.
    pub const fn board(a: u32, b: u32) -> Self {
        Rect::new(0, a, 0, b)
    }

    pub fn is_valid(&self) -> bool {
        self.x1 < self.x2 && self.y1 < self.y2
    }

    fn require_valid(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidRect(*self))
        }
    }

    pub fn width(&self) -> u32 {
        self.x2.saturating_sub(self.x1)
    }

    pub fn height(&self) -> u32 {
        self.y2.saturating_sub(self.y1)
    }

    /// Number of unit squares; zero for invalid rects.
    pub fn area(&self) -> u64 {
        self.width() as u64 * self.height() as u64
    }

    /// Sort key for the deterministic tile order `(x1, y1, x2, y2)`.
    pub fn lex_key(&self) -> (u32, u32, u32, u32) {
        (self.x1, self.y1, self.x2, self.y2)
    }

    pub fn squares(&self) -> impl Iterator<Item = Square> + '_ {
        let ys = self.y1..self.y2;
        (self.x1..self.x2).flat_map(move |x| ys.clone().map(move |y| Square::new(x, y)))
    }

    pub fn corners(&self) -> Result<BTreeSet<Square>> {
        self.require_valid()?;
        let (xl, xr, yb, yt) = (self.x1, self.x2 - 1, self.y1, self.y2 - 1);
        Ok([
            Square::new(xl, yb),
            Square::new(xl, yt),
            Square::new(xr, yb),
            Square::new(xr, yt),
        ]
        .into_iter()
        .collect())
    }

    pub fn classify(&self) -> Result<RectClass> {
        let corners = self.corners()?;
        Ok(if corners.iter().all(|c| c.is_green()) {
            RectClass::Green
        } else if corners.iter().all(|c| c.is_yellow()) {
            RectClass::Yellow
        } else {
            RectClass::Mixed
        })
    }

    fn start_is_green(&self) -> bool {
        Square::new(self.x1, self.y1).is_green()
    }

    /// `(k + 1) div 2` green squares when the first square is green, `k div 2`
    /// otherwise, with `k` the area.
    pub fn count_green(&self) -> Result<u64> {
        self.require_valid()?;
        let k = self.area();
        Ok(if self.start_is_green() { k.div_ceil(2) } else { k / 2 })
    }

    pub fn count_yellow(&self) -> Result<u64> {
        self.require_valid()?;
        let k = self.area();
        Ok(if self.start_is_green() { k / 2 } else { k.div_ceil(2) })
    }

    /// Interval form of "share at least one square".
    pub fn overlaps(&self, other: &Rect) -> bool {
        self.is_valid()
            && other.is_valid()
            && self.x1.max(other.x1) < self.x2.min(other.x2)
            && self.y1.max(other.y1) < self.y2.min(other.y2)
    }

    /// Interval form of "every square of `self` is a square of `outer`".
    pub fn inside(&self, outer: &Rect) -> bool {
        !self.is_valid()
            || (outer.x1 <= self.x1
                && self.x2 <= outer.x2
                && outer.y1 <= self.y1
                && self.y2 <= outer.y2)
    }
}

impl PartialOrd for Rect {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rect {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_key().cmp(&other.lex_key())
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.x1, self.x2, self.y1, self.y2)
    }
}

/// Green squares in the row `[x1, x2) x {y0}`.
pub fn count_green_row(x1: u32, x2: u32, y0: u32) -> Result<u64> {
    if x1 >= x2 {
        return Err(Error::InvalidRange { x1, x2 });
    }
    let len = (x2 - x1) as u64;
    Ok(if Square::new(x1, y0).is_green() { len.div_ceil(2) } else { len / 2 })
}

/// Every valid rect whose coordinates lie in `0..=max`, in lexicographic order.
pub fn all_rects_within(max: u32) -> Vec<Rect> {
    let mut out = Vec::new();
    for x1 in 0..=max {
        for y1 in 0..=max {
            for x2 in x1 + 1..=max {
                for y2 in y1 + 1..=max {
                    out.push(Rect::new(x1, x2, y1, y2));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(x: u32, y: u32) -> Square {
        Square::new(x, y)
    }

    #[test]
    fn squares_examples() {
        let s: Vec<_> = Rect::new(0, 2, 0, 1).squares().collect();
        assert_eq!(s, vec![sq(0, 0), sq(1, 0)]);
        assert_eq!(Rect::new(3, 3, 0, 5).squares().count(), 0);
        assert_eq!(Rect::board(17, 11).squares().count(), 187);
    }

    #[test]
    fn colors() {
        assert!(sq(0, 0).is_green());
        assert!(sq(0, 1).is_yellow());
        assert!(sq(16, 10).is_green());
    }

    #[test]
    fn corners_examples() {
        let c = |r: Rect| r.corners().unwrap().into_iter().collect::<Vec<_>>();
        assert_eq!(c(Rect::new(0, 1, 0, 1)), vec![sq(0, 0)]);
        assert_eq!(
            c(Rect::board(17, 11)),
            vec![sq(0, 0), sq(0, 10), sq(16, 0), sq(16, 10)]
        );
        assert_eq!(
            c(Rect::new(2, 4, 3, 5)),
            vec![sq(2, 3), sq(2, 4), sq(3, 3), sq(3, 4)]
        );
        assert!(matches!(
            Rect::new(2, 2, 0, 1).corners(),
            Err(Error::InvalidRect(_))
        ));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(Rect::board(17, 11).classify().unwrap(), RectClass::Green);
        assert_eq!(Rect::new(1, 2, 0, 1).classify().unwrap(), RectClass::Yellow);
        assert_eq!(Rect::new(0, 2, 0, 1).classify().unwrap(), RectClass::Mixed);
        assert!(Rect::new(0, 2, 1, 1).classify().is_err());
    }

    #[test]
    fn count_examples() {
        let r = Rect::new(0, 3, 0, 3);
        assert_eq!((r.count_green().unwrap(), r.count_yellow().unwrap()), (5, 4));
        let r = Rect::new(0, 1, 0, 1);
        assert_eq!((r.count_green().unwrap(), r.count_yellow().unwrap()), (1, 0));
        let r = Rect::new(1, 3, 0, 2);
        assert_eq!((r.count_green().unwrap(), r.count_yellow().unwrap()), (2, 2));
        assert!(Rect::new(1, 0, 0, 2).count_green().is_err());
    }

    #[test]
    fn row_examples() {
        assert_eq!(count_green_row(0, 3, 0).unwrap(), 2);
        assert_eq!(count_green_row(1, 2, 0).unwrap(), 0);
        assert_eq!(count_green_row(0, 4, 1).unwrap(), 2);
        assert_eq!(
            count_green_row(3, 3, 0),
            Err(Error::InvalidRange { x1: 3, x2: 3 })
        );
    }

    #[test]
    fn overlap_and_inside_examples() {
        assert!(Rect::new(0, 2, 0, 2).overlaps(&Rect::new(1, 3, 1, 3)));
        assert!(!Rect::new(0, 2, 0, 2).overlaps(&Rect::new(2, 4, 0, 2)));
        assert!(Rect::new(1, 2, 1, 2).inside(&Rect::new(0, 3, 0, 3)));
        assert!(!Rect::new(0, 3, 0, 3).inside(&Rect::new(1, 2, 1, 2)));
        let r = Rect::new(0, 2, 0, 2);
        assert!(r.inside(&r));
    }

    #[test]
    fn lexicographic_order() {
        let mut v = vec![
            Rect::new(1, 2, 0, 3),
            Rect::new(0, 3, 1, 2),
            Rect::new(0, 1, 1, 2),
            Rect::new(0, 1, 0, 3),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Rect::new(0, 1, 0, 3),
                Rect::new(0, 1, 1, 2),
                Rect::new(0, 3, 1, 2),
                Rect::new(1, 2, 0, 3),
            ]
        );
    }

    #[test]
    fn rect_range_size() {
        // C(13, 2)^2
        assert_eq!(all_rects_within(12).len(), 6084);
        assert!(all_rects_within(12).windows(2).all(|w| w[0] < w[1]));
    }
}
