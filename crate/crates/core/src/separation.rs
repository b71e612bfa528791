//! Digital separation on cell masks.
//!
//! A marked set separates two corner cells when they fall in different
//! 4-connected components of the unmarked cells. Pairing 4-connectivity of
//! the complement with 8-connectivity of the set avoids the digital Jordan
//! paradox.
//!
//! Two separating sets of complementary corner pairs must share a cell only
//! if one of them also separates under 8-connected paths; two chains that
//! are merely 8-connected can cross diagonally without meeting.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::error::Error;
use crate::median::ZeroMask;

/// A corner of the unit parameter square, as `(r₁, r₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corner {
    /// `(0, 0)`
    Origin,
    /// `(0, 1)`
    Top,
    /// `(1, 0)`
    Right,
    /// `(1, 1)`
    Far,
}

impl Corner {
    fn cell(self, g: usize) -> (usize, usize) {
        match self {
            Corner::Origin => (0, 0),
            Corner::Top => (0, g - 1),
            Corner::Right => (g - 1, 0),
            Corner::Far => (g - 1, g - 1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CornerPair {
    pub from: Corner,
    pub to: Corner,
}

impl CornerPair {
    pub fn new(from: Corner, to: Corner) -> Option<Self> {
        (from != to).then_some(CornerPair { from, to })
    }

    /// The pair `(0, 1)`, `(1, 0)` that a median mask must separate.
    pub const ANTI_DIAGONAL: CornerPair = CornerPair { from: Corner::Top, to: Corner::Right };
    pub const DIAGONAL: CornerPair = CornerPair { from: Corner::Origin, to: Corner::Far };
}

/// Adjacency used for paths through unmarked cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connectivity {
    /// Edge neighbours only.
    Four,
    /// Edge and diagonal neighbours.
    Eight,
}

/// Whether the marked cells separate the two corner cells, with paths in the
/// complement 4-connected. A marked corner cell counts as separated.
pub fn separates(mask: &ZeroMask, pair: CornerPair) -> bool {
    separates_with(mask, pair, Connectivity::Four)
}

/// [`separates`] with a chosen complement connectivity. Separation under
/// [`Connectivity::Eight`] is the stronger property: it needs a barrier that
/// is itself 4-connected.
pub fn separates_with(mask: &ZeroMask, pair: CornerPair, paths: Connectivity) -> bool {
    let g = mask.resolution();
    let from = pair.from.cell(g);
    let to = pair.to.cell(g);
    if mask.get(from.0, from.1) || mask.get(to.0, to.1) {
        return true;
    }
    let mut seen = alloc::vec![false; g * g];
    let mut queue = VecDeque::new();
    seen[from.0 * g + from.1] = true;
    queue.push_back(from);
    while let Some((i, j)) = queue.pop_front() {
        if (i, j) == to {
            return false;
        }
        let (im, jm) = (i.wrapping_sub(1), j.wrapping_sub(1));
        let edge = [(im, j), (i + 1, j), (i, jm), (i, j + 1)];
        let diagonal = [(im, jm), (im, j + 1), (i + 1, jm), (i + 1, j + 1)];
        let extra: &[(usize, usize)] = if paths == Connectivity::Eight { &diagonal } else { &[] };
        for &(a, b) in edge.iter().chain(extra) {
            if a < g && b < g && !seen[a * g + b] && !mask.get(a, b) {
                seen[a * g + b] = true;
                queue.push_back((a, b));
            }
        }
    }
    true
}

/// Cells marked in both masks.
pub fn masks_intersect(k: &ZeroMask, l: &ZeroMask) -> Result<Vec<(usize, usize)>, Error> {
    if k.resolution() != l.resolution() {
        return Err(Error::ResolutionMismatch { left: k.resolution(), right: l.resolution() });
    }
    Ok(k.marked().filter(|&(i, j)| l.get(i, j)).collect())
}
