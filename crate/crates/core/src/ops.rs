//! Diagram operations: tensor product, composition with exact removed-loop
//! counting, involution, (verticolor) reflection, rotation, and the derived
//! surgeries (erasing color-inverse neighbours, recoloring, disconnecting a
//! point, connecting neighbouring blocks).

use thiserror::Error;

use crate::partition::{Color, Partition, PointRef, Row};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OpsError {
    #[error("composition shape mismatch: lower row of p has {p_lower} points, upper row of q has {q_upper}")]
    ShapeMismatch { p_lower: usize, q_upper: usize },
    #[error("composition color mismatch at middle position {position}")]
    ColorMismatch { position: usize },
    #[error("rotation source row is empty")]
    EmptySourceRow,
    #[error("point pair ({first}, {second}) out of range on the {row:?} row")]
    PairOutOfRange { row: Row, first: usize, second: usize },
    #[error("points {first} and {second} have equal colors; erasing requires inverse colors")]
    EqualColors { first: usize, second: usize },
    #[error("invalid point reference {0:?}")]
    InvalidPoint(PointRef),
    #[error("invalid block id {0}")]
    InvalidBlock(usize),
    #[error("blocks {0} and {1} are not neighbouring on any row")]
    NotNeighbouring(usize, usize),
}

/// Result of a composition: the glued partition and the number of closed
/// middle components that were removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComposeOutcome {
    pub result: Partition,
    pub removed_loops: usize,
}

/// Horizontal concatenation `p (x) q`; q's points are shifted right.
pub fn tensor(p: &Partition, q: &Partition) -> Partition {
    let mut upper: Vec<Color> = p.upper_colors().to_vec();
    upper.extend_from_slice(q.upper_colors());
    let mut lower: Vec<Color> = p.lower_colors().to_vec();
    lower.extend_from_slice(q.lower_colors());

    let shift = p.block_count();
    let (pk, qk) = (p.upper_len(), q.upper_len());
    let mut ids = Vec::with_capacity(p.points() + q.points());
    ids.extend_from_slice(&p.block_ids()[..pk]);
    ids.extend(q.block_ids()[..qk].iter().map(|b| b + shift));
    ids.extend_from_slice(&p.block_ids()[pk..]);
    ids.extend(q.block_ids()[qk..].iter().map(|b| b + shift));
    Partition::new(upper, lower, &ids)
}

/// Vertical concatenation `qp` (q written below p), gluing p's lower row to
/// q's upper row. Middle components touching neither the top of p nor the
/// bottom of q are loops; they are removed and counted.
pub fn compose(q: &Partition, p: &Partition) -> Result<ComposeOutcome, OpsError> {
    let l = p.lower_len();
    if q.upper_len() != l {
        return Err(OpsError::ShapeMismatch { p_lower: l, q_upper: q.upper_len() });
    }
    for t in 0..l {
        if p.lower_colors()[t] != q.upper_colors()[t] {
            return Err(OpsError::ColorMismatch { position: t + 1 });
        }
    }

    // nodes: p's blocks, then q's blocks, glued along the middle row
    let offset = p.block_count();
    let mut uf = UnionFind::new(offset + q.block_count());
    for t in 1..=l {
        uf.union(p.lower_block(t), offset + q.upper_block(t));
    }

    let k = p.upper_len();
    let l_out = q.lower_len();
    let mut ids = Vec::with_capacity(k + l_out);
    for s in 1..=k {
        ids.push(uf.find(p.upper_block(s)));
    }
    for t in 1..=l_out {
        ids.push(uf.find(offset + q.lower_block(t)));
    }

    // loops: merged classes that contain middle points only
    let mut touched = vec![false; offset + q.block_count()];
    for &root in &ids {
        touched[root] = true;
    }
    let mut seen_middle = vec![false; offset + q.block_count()];
    let mut removed_loops = 0;
    for t in 1..=l {
        let root = uf.find(p.lower_block(t));
        if !touched[root] && !seen_middle[root] {
            seen_middle[root] = true;
            removed_loops += 1;
        }
    }

    let result = Partition::new(
        p.upper_colors().to_vec(),
        q.lower_colors().to_vec(),
        &ids,
    );
    Ok(ComposeOutcome { result, removed_loops })
}

/// Reflection at the horizontal axis (turning upside down); colors unchanged.
pub fn involution(p: &Partition) -> Partition {
    let k = p.upper_len();
    let mut ids: Vec<usize> = p.block_ids()[k..].to_vec();
    ids.extend_from_slice(&p.block_ids()[..k]);
    Partition::new(p.lower_colors().to_vec(), p.upper_colors().to_vec(), &ids)
}

/// Reflection at the vertical axis; colors unchanged.
pub fn vreflect(p: &Partition) -> Partition {
    let k = p.upper_len();
    let mut upper: Vec<Color> = p.upper_colors().to_vec();
    upper.reverse();
    let mut lower: Vec<Color> = p.lower_colors().to_vec();
    lower.reverse();
    let mut ids: Vec<usize> = p.block_ids()[..k].iter().rev().copied().collect();
    ids.extend(p.block_ids()[k..].iter().rev());
    Partition::new(upper, lower, &ids)
}

/// Reflection at the vertical axis with all colors inverted.
pub fn verticolor_reflect(p: &Partition) -> Partition {
    let r = vreflect(p);
    Partition::new(
        r.upper_colors().iter().map(|c| c.invert()).collect(),
        r.lower_colors().iter().map(|c| c.invert()).collect(),
        r.block_ids(),
    )
}

/// The four corner moves: an end point changes row at the stated side, its
/// color is inverted and its block membership kept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RotationCorner {
    UpperLeftDown,
    UpperRightDown,
    LowerLeftUp,
    LowerRightUp,
}

pub fn rotate(p: &Partition, corner: RotationCorner) -> Result<Partition, OpsError> {
    use RotationCorner::*;
    let k = p.upper_len();
    let l = p.lower_len();
    let source_len = match corner {
        UpperLeftDown | UpperRightDown => k,
        LowerLeftUp | LowerRightUp => l,
    };
    if source_len == 0 {
        return Err(OpsError::EmptySourceRow);
    }

    let mut upper: Vec<(Color, usize)> = p
        .upper_colors()
        .iter()
        .copied()
        .zip(p.block_ids()[..k].iter().copied())
        .collect();
    let mut lower: Vec<(Color, usize)> = p
        .lower_colors()
        .iter()
        .copied()
        .zip(p.block_ids()[k..].iter().copied())
        .collect();
    let invert = |(c, b): (Color, usize)| (c.invert(), b);
    match corner {
        UpperLeftDown => {
            let pt = upper.remove(0);
            lower.insert(0, invert(pt));
        }
        UpperRightDown => {
            let pt = upper.pop().unwrap();
            lower.push(invert(pt));
        }
        LowerLeftUp => {
            let pt = lower.remove(0);
            upper.insert(0, invert(pt));
        }
        LowerRightUp => {
            let pt = lower.pop().unwrap();
            upper.push(invert(pt));
        }
    }
    Ok(rebuild(upper, lower))
}

/// Corner move without the color inversion. This is rotation as the
/// one-colored calculus knows it, where colors play no role; on all-white
/// input the result stays all-white.
pub fn rotate_keep_colors(p: &Partition, corner: RotationCorner) -> Result<Partition, OpsError> {
    use RotationCorner::*;
    let rotated = rotate(p, corner)?;
    let moved = match corner {
        UpperLeftDown => PointRef {
            row: Row::Lower,
            index: 1,
        },
        UpperRightDown => PointRef {
            row: Row::Lower,
            index: rotated.lower_len(),
        },
        LowerLeftUp => PointRef {
            row: Row::Upper,
            index: 1,
        },
        LowerRightUp => PointRef {
            row: Row::Upper,
            index: rotated.upper_len(),
        },
    };
    let restored = rotated
        .color_of(moved)
        .map_err(|_| OpsError::InvalidPoint(moved))?
        .invert();
    recolor_point(&rotated, moved, restored)
}

/// Single-row rotation on `P(0, l)`: the leftmost lower point moves to the
/// rightmost position (or back). Colors are not changed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CycleDirection {
    LeftToRight,
    RightToLeft,
}

pub fn cycle_lower(p: &Partition, direction: CycleDirection) -> Result<Partition, OpsError> {
    if p.upper_len() != 0 || p.lower_len() == 0 {
        return Err(OpsError::EmptySourceRow);
    }
    let mut lower: Vec<(Color, usize)> = p
        .lower_colors()
        .iter()
        .copied()
        .zip(p.block_ids().iter().copied())
        .collect();
    match direction {
        CycleDirection::LeftToRight => {
            let pt = lower.remove(0);
            lower.push(pt);
        }
        CycleDirection::RightToLeft => {
            let pt = lower.pop().unwrap();
            lower.insert(0, pt);
        }
    }
    Ok(rebuild(Vec::new(), lower))
}

/// Rotates the first `t` lower points of `p in P(0, l)` to the upper line,
/// one corner move at a time (each inverts the moved point's color).
pub fn rotate_lower_to_upper(p: &Partition, t: usize) -> Result<Partition, OpsError> {
    let mut out = p.clone();
    for _ in 0..t {
        out = rotate(&out, RotationCorner::LowerLeftUp)?;
    }
    Ok(out)
}

/// Erases the neighbouring points `j`, `j+1` (inverse colors) on a row,
/// merging their blocks first.
pub fn erase_pair(p: &Partition, row: Row, j: usize) -> Result<Partition, OpsError> {
    let len = match row {
        Row::Upper => p.upper_len(),
        Row::Lower => p.lower_len(),
    };
    if j == 0 || j + 1 > len {
        return Err(OpsError::PairOutOfRange { row, first: j, second: j + 1 });
    }
    let a = PointRef { row, index: j };
    let b = PointRef { row, index: j + 1 };
    let ca = p.color_of(a).unwrap();
    let cb = p.color_of(b).unwrap();
    if ca == cb {
        return Err(OpsError::EqualColors { first: j, second: j + 1 });
    }
    let block_a = p.block_of(a).unwrap();
    let block_b = p.block_of(b).unwrap();

    let k = p.upper_len();
    let merged = |id: usize| if id == block_b { block_a } else { id };
    let (remove_lo, remove_hi) = match row {
        Row::Upper => (j - 1, j),
        Row::Lower => (k + j - 1, k + j),
    };
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for (i, &id) in p.block_ids().iter().enumerate() {
        if i == remove_lo || i == remove_hi {
            continue;
        }
        let entry = if i < k {
            (p.upper_colors()[i], merged(id))
        } else {
            (p.lower_colors()[i - k], merged(id))
        };
        if i < k {
            upper.push(entry);
        } else {
            lower.push(entry);
        }
    }
    Ok(rebuild(upper, lower))
}

/// Changes the color of a single point.
pub fn recolor_point(p: &Partition, point: PointRef, color: Color) -> Result<Partition, OpsError> {
    p.block_of(point).map_err(|_| OpsError::InvalidPoint(point))?;
    let mut upper: Vec<Color> = p.upper_colors().to_vec();
    let mut lower: Vec<Color> = p.lower_colors().to_vec();
    match point.row {
        Row::Upper => upper[point.index - 1] = color,
        Row::Lower => lower[point.index - 1] = color,
    }
    Ok(Partition::new(upper, lower, p.block_ids()))
}

/// Turns a point into a new singleton block.
pub fn disconnect_point(p: &Partition, point: PointRef) -> Result<Partition, OpsError> {
    p.block_of(point).map_err(|_| OpsError::InvalidPoint(point))?;
    let k = p.upper_len();
    let flat = match point.row {
        Row::Upper => point.index - 1,
        Row::Lower => k + point.index - 1,
    };
    let fresh = p.block_count();
    let mut ids = p.block_ids().to_vec();
    ids[flat] = fresh;
    Ok(Partition::new(
        p.upper_colors().to_vec(),
        p.lower_colors().to_vec(),
        &ids,
    ))
}

/// Merges two blocks that are neighbouring on some row, i.e. some point of
/// one is directly adjacent to a point of the other.
pub fn connect_blocks(p: &Partition, b1: usize, b2: usize) -> Result<Partition, OpsError> {
    let blocks = p.block_count();
    if b1 >= blocks {
        return Err(OpsError::InvalidBlock(b1));
    }
    if b2 >= blocks {
        return Err(OpsError::InvalidBlock(b2));
    }
    let k = p.upper_len();
    let neighbouring = |row: &[usize]| {
        row.windows(2).any(|w| {
            (w[0] == b1 && w[1] == b2) || (w[0] == b2 && w[1] == b1)
        })
    };
    if b1 == b2 || !(neighbouring(&p.block_ids()[..k]) || neighbouring(&p.block_ids()[k..])) {
        return Err(OpsError::NotNeighbouring(b1, b2));
    }
    let ids: Vec<usize> = p
        .block_ids()
        .iter()
        .map(|&id| if id == b2 { b1 } else { id })
        .collect();
    Ok(Partition::new(
        p.upper_colors().to_vec(),
        p.lower_colors().to_vec(),
        &ids,
    ))
}

fn rebuild(upper: Vec<(Color, usize)>, lower: Vec<(Color, usize)>) -> Partition {
    let upper_colors: Vec<Color> = upper.iter().map(|&(c, _)| c).collect();
    let lower_colors: Vec<Color> = lower.iter().map(|&(c, _)| c).collect();
    let ids: Vec<usize> = upper
        .iter()
        .chain(&lower)
        .map(|&(_, b)| b)
        .collect();
    Partition::new(upper_colors, lower_colors, &ids)
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n] }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
    }
}
