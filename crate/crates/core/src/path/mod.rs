//! Paths and loops in ℝⁿ: composition, inversion, contraction, straight segments,
//! frames, thin reduction and reparametrization.

mod family;
mod pathnd;
mod poly;
mod segment;

pub use family::{radial_family, reconstruction_loop, PathFamily};
pub use pathnd::{
    compose_paths, contract, invert_path, monomial_warp, reparametrize, straight_segment,
    thin_reduce, LoopAtBase, PathNd, POINT_TOL,
};
pub use segment::{Segment, SegmentKind};
