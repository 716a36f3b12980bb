//! Set-level definitions over materialized squares. These are the reference
//! semantics; the interval-arithmetic versions in `rect` and `tiling` must
//! agree with them.

use std::collections::HashSet;

use super::rect::{Rect, Square};

pub fn squares(r: &Rect) -> HashSet<Square> {
    r.squares().collect()
}

pub fn green_squares(r: &Rect) -> HashSet<Square> {
    r.squares().filter(|s| s.is_green()).collect()
}

pub fn yellow_squares(r: &Rect) -> HashSet<Square> {
    r.squares().filter(|s| s.is_yellow()).collect()
}

pub fn overlap(r1: &Rect, r2: &Rect) -> bool {
    !squares(r1).is_disjoint(&squares(r2))
}

/// No two tiles at distinct positions of `rs` share a square. Repeated
/// entries count as distinct tiles.
pub fn non_overlapping(rs: &[Rect]) -> bool {
    let mut seen = HashSet::new();
    rs.iter().flat_map(|r| r.squares()).all(|s| seen.insert(s))
}

pub fn cover(rs: &[Rect], r: &Rect) -> bool {
    let union: HashSet<Square> = rs.iter().flat_map(|t| t.squares()).collect();
    union == squares(r)
}

pub fn tiles(rs: &[Rect], r: &Rect) -> bool {
    cover(rs, r) && non_overlapping(rs)
}

pub fn inside(ri: &Rect, ro: &Rect) -> bool {
    squares(ri).is_subset(&squares(ro))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_tiling() {
        let r = Rect::new(0, 1, 0, 1);
        assert!(tiles(&[r], &r));
    }

    #[test]
    fn duplicate_entries_overlap() {
        let r = Rect::new(0, 1, 0, 1);
        assert!(!non_overlapping(&[r, r]));
        assert!(cover(&[r, r], &r));
    }

    #[test]
    fn empty_rects_are_harmless() {
        let empty = Rect::new(4, 4, 0, 9);
        assert!(inside(&empty, &Rect::new(0, 1, 0, 1)));
        assert!(!overlap(&empty, &Rect::new(0, 9, 0, 9)));
    }
}
