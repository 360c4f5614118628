//! Triangular-block decomposition of plane graphs, exact edge/face
//! contribution accounting, extremal constructions for Theta-free planar
//! graphs, and a brute-force oracle for small planar Turan numbers.

pub mod blocks;
pub mod constructions;
pub mod contribution;
pub mod oracle;
pub mod patterns;
pub mod plane_graph;
