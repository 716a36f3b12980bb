//! Tilings of an odd-by-odd board by integer rectangles, the green/yellow
//! checkerboard counting argument, and the distance-parity witness.

pub mod checks;
mod format;
mod generate;
pub mod literal;
mod rect;
mod tiling;

pub use format::{parse_tiling, serialize_tiling};
pub use generate::{
    enumerate_tilings, guillotine, pinwheel, random_pinwheel, TilingEnumerator, MAX_ENUM_AREA,
};
pub use rect::{all_rects_within, count_green_row, Color, Rect, RectClass, Square};
pub use tiling::{
    cover, distances, non_overlapping, parity_lemma_check, shared_parity, tiles, Parity, Tiling,
    TilingDefect,
};
