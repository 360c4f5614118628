//! The nine small triangular blocks, with the straight-line drawings used as
//! their standard embeddings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::plane_graph::{Graph, PlaneGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BlockLabel {
    B2,
    B3,
    B4a,
    B4b,
    B5a,
    B5b,
    B5c,
    B5d,
    B6,
    Other,
}

impl BlockLabel {
    pub const CATALOG: [BlockLabel; 9] = [
        BlockLabel::B2,
        BlockLabel::B3,
        BlockLabel::B4a,
        BlockLabel::B4b,
        BlockLabel::B5a,
        BlockLabel::B5b,
        BlockLabel::B5c,
        BlockLabel::B5d,
        BlockLabel::B6,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BlockLabel::B2 => "B2",
            BlockLabel::B3 => "B3",
            BlockLabel::B4a => "B4a",
            BlockLabel::B4b => "B4b",
            BlockLabel::B5a => "B5a",
            BlockLabel::B5b => "B5b",
            BlockLabel::B5c => "B5c",
            BlockLabel::B5d => "B5d",
            BlockLabel::B6 => "B6",
            BlockLabel::Other => "Other",
        }
    }
}

impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BlockLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BlockLabel::CATALOG
            .into_iter()
            .chain([BlockLabel::Other])
            .find(|l| l.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown block label `{s}`"))
    }
}

pub type Drawing = (Vec<(f64, f64)>, Vec<(usize, usize)>);

/// Coordinates and edges of a catalog block's standard drawing.
///
/// Vertex `i` is `x_{i+1}` in the usual figure labels.
pub fn catalog_drawing(label: BlockLabel) -> Option<Drawing> {
    let s3 = 3f64.sqrt();
    let drawing = match label {
        BlockLabel::B2 => (vec![(-1.0, 0.0), (1.0, 0.0)], vec![(0, 1)]),
        BlockLabel::B3 => (
            vec![(0.0, s3), (-1.0, 0.0), (1.0, 0.0)],
            vec![(0, 1), (1, 2), (0, 2)],
        ),
        BlockLabel::B4a => (
            vec![(0.0, s3), (-1.0, 0.0), (1.0, 0.0), (0.0, s3 / 3.0)],
            vec![(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)],
        ),
        BlockLabel::B4b => (
            vec![(-1.0, 1.0), (1.0, 1.0), (1.0, -1.0), (-1.0, -1.0)],
            vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
        ),
        // triangle x1 x2 x3, x4 inside joined to all three corners,
        // x5 inside x2 x3 x4 joined to its corners
        BlockLabel::B5a => (
            vec![(0.0, 2.6), (-1.5, 0.0), (1.5, 0.0), (0.0, 1.7), (0.0, 0.87)],
            vec![
                (0, 1),
                (1, 2),
                (0, 2),
                (0, 3),
                (1, 3),
                (2, 3),
                (1, 4),
                (2, 4),
                (3, 4),
            ],
        ),
        BlockLabel::B5b => (
            vec![(-1.0, 1.0), (1.0, 1.0), (1.0, -1.0), (-1.0, -1.0), (0.0, 0.0)],
            vec![
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (0, 4),
                (1, 4),
                (2, 4),
                (3, 4),
            ],
        ),
        BlockLabel::B5c => (
            vec![(0.0, 1.0), (s3, 0.0), (0.0, -1.0), (-s3, 0.0), (s3 / 3.0, 0.0)],
            vec![
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (0, 2),
                (0, 4),
                (1, 4),
                (2, 4),
            ],
        ),
        BlockLabel::B5d => {
            let pt = |deg: f64| {
                let r = deg.to_radians();
                (1.5 * r.cos(), 1.5 * r.sin())
            };
            (
                vec![pt(90.0), pt(18.0), pt(-54.0), pt(-126.0), pt(162.0)],
                vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)],
            )
        }
        BlockLabel::B6 => (
            vec![
                (0.0, 1.5),
                (1.3, 0.75),
                (1.3, -0.75),
                (0.0, -1.5),
                (-1.3, -0.75),
                (-1.3, 0.75),
            ],
            vec![
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 0),
                (0, 2),
                (2, 4),
                (4, 0),
            ],
        ),
        BlockLabel::Other => return None,
    };
    Some(drawing)
}

pub fn catalog_graph(label: BlockLabel) -> Option<Graph> {
    let (coords, edges) = catalog_drawing(label)?;
    Some(Graph::new(coords.len(), edges).expect("catalog graphs are simple"))
}

pub fn catalog_plane_graph(label: BlockLabel) -> Option<PlaneGraph> {
    let (coords, edges) = catalog_drawing(label)?;
    Some(PlaneGraph::from_coordinates(&coords, &edges).expect("catalog drawings are planar"))
}
