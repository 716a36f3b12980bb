//! Tiling sources: seeded guillotine cuts, the five-piece pinwheel, and an
//! exhaustive enumerator for small boards.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::rect::Rect;
use super::tiling::Tiling;
use crate::error::{Error, Result};

/// Largest board area `enumerate_tilings` accepts.
pub const MAX_ENUM_AREA: u32 = 16;

/// Probability that a region wider or taller than one square is kept whole.
const STOP_PROBABILITY: f64 = 0.2;

/// Recursively cuts the `a x b` board with full-length axis-parallel cuts at
/// integer positions. The same `(a, b, seed)` always yields the same tiling.
pub fn guillotine(a: u32, b: u32, seed: u64) -> Tiling {
    assert!(a >= 1 && b >= 1, "guillotine board must be at least 1x1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pending = vec![Rect::board(a, b)];
    let mut tiles = Vec::new();
    while let Some(r) = pending.pop() {
        let (w, h) = (r.width(), r.height());
        if (w == 1 && h == 1) || rng.random_bool(STOP_PROBABILITY) {
            tiles.push(r);
            continue;
        }
        let vertical = if w == 1 {
            false
        } else if h == 1 {
            true
        } else {
            rng.random_bool(w as f64 / (w + h) as f64)
        };
        if vertical {
            let cut = r.x1 + rng.random_range(1..w);
            pending.push(Rect::new(r.x1, cut, r.y1, r.y2));
            pending.push(Rect::new(cut, r.x2, r.y1, r.y2));
        } else {
            let cut = r.y1 + rng.random_range(1..h);
            pending.push(Rect::new(r.x1, r.x2, r.y1, cut));
            pending.push(Rect::new(r.x1, r.x2, cut, r.y2));
        }
    }
    Tiling::new(a, b, tiles)
}

/// Four rectangles winding around a central one; not a guillotine tiling.
pub fn pinwheel(a: u32, b: u32, cx1: u32, cx2: u32, cy1: u32, cy2: u32) -> Result<Tiling> {
    if !(0 < cx1 && cx1 < cx2 && cx2 < a && 0 < cy1 && cy1 < cy2 && cy2 < b) {
        return Err(Error::InvalidPinwheel);
    }
    Ok(Tiling::new(
        a,
        b,
        [
            Rect::new(0, cx2, 0, cy1),
            Rect::new(cx2, a, 0, cy2),
            Rect::new(cx1, a, cy2, b),
            Rect::new(0, cx1, cy1, b),
            Rect::new(cx1, cx2, cy1, cy2),
        ],
    ))
}

/// A pinwheel with cut positions drawn from `seed`. Needs `a, b >= 3`.
pub fn random_pinwheel(a: u32, b: u32, seed: u64) -> Result<Tiling> {
    if a < 3 || b < 3 {
        return Err(Error::InvalidPinwheel);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cx1 = rng.random_range(1..a - 1);
    let cx2 = rng.random_range(cx1 + 1..a);
    let cy1 = rng.random_range(1..b - 1);
    let cy2 = rng.random_range(cy1 + 1..b);
    pinwheel(a, b, cx1, cx2, cy1, cy2)
}

/// Every tiling of the `a x b` board, each exactly once.
///
/// Tilings are produced depth-first: the lexicographically smallest uncovered
/// square `(x, y)` is covered in turn by every free rect with that square as
/// its lower-left corner, widths before heights.
pub fn enumerate_tilings(a: u32, b: u32) -> Result<TilingEnumerator> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidRect(Rect::board(a, b)));
    }
    if a.saturating_mul(b) > MAX_ENUM_AREA {
        return Err(Error::BoardTooLarge {
            a,
            b,
            cap: MAX_ENUM_AREA,
        });
    }
    let mut e = TilingEnumerator {
        a,
        b,
        covered: vec![false; (a * b) as usize],
        stack: Vec::new(),
    };
    let first = e.candidates(0, 0);
    e.stack.push(Frame {
        candidates: first,
        next: 0,
    });
    Ok(e)
}

struct Frame {
    candidates: Vec<Rect>,
    next: usize,
}

pub struct TilingEnumerator {
    a: u32,
    b: u32,
    // indexed x * b + y, so index order is (x, y) lexicographic order
    covered: Vec<bool>,
    stack: Vec<Frame>,
}

impl TilingEnumerator {
    fn idx(&self, x: u32, y: u32) -> usize {
        (x * self.b + y) as usize
    }

    fn is_free(&self, r: &Rect) -> bool {
        r.squares().all(|s| !self.covered[self.idx(s.x, s.y)])
    }

    fn set(&mut self, r: Rect, value: bool) {
        for s in r.squares() {
            let i = self.idx(s.x, s.y);
            self.covered[i] = value;
        }
    }

    fn candidates(&self, x: u32, y: u32) -> Vec<Rect> {
        let mut out = Vec::new();
        for x2 in x + 1..=self.a {
            for y2 in y + 1..=self.b {
                let r = Rect::new(x, x2, y, y2);
                if self.is_free(&r) {
                    out.push(r);
                }
            }
        }
        out
    }

    fn first_uncovered(&self) -> Option<(u32, u32)> {
        self.covered
            .iter()
            .position(|c| !c)
            .map(|i| (i as u32 / self.b, i as u32 % self.b))
    }

    fn current(&self) -> Tiling {
        Tiling::new(
            self.a,
            self.b,
            self.stack.iter().map(|f| f.candidates[f.next - 1]),
        )
    }
}

impl Iterator for TilingEnumerator {
    type Item = Tiling;

    fn next(&mut self) -> Option<Tiling> {
        loop {
            let top = self.stack.last()?;
            if top.next > 0 {
                let placed = top.candidates[top.next - 1];
                self.set(placed, false);
            }
            let top = self.stack.last_mut().unwrap();
            if top.next == top.candidates.len() {
                self.stack.pop();
                continue;
            }
            let r = top.candidates[top.next];
            top.next += 1;
            self.set(r, true);
            match self.first_uncovered() {
                None => return Some(self.current()),
                Some((x, y)) => {
                    let candidates = self.candidates(x, y);
                    self.stack.push(Frame {
                        candidates,
                        next: 0,
                    });
                }
            }
        }
    }
}
