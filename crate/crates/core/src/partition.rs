//! Canonical representation, parsing and printing of (two-colored) set
//! partitions, together with builders for the named example partitions.
//!
//! A partition of `k` upper and `l` lower points assigns every point to a
//! non-empty block. Points are indexed left-to-right on each row, 1-based.
//! Block ids are canonical: consecutive integers in order of first appearance
//! scanning the upper row left-to-right, then the lower row left-to-right.
//! Equality is plain field equality of the canonical form.

use std::fmt;

use thiserror::Error;

/// Point color. One-colored partitions use `White` everywhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn invert(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }

    /// `true` for black points, which stand for the adjoint generator.
    pub fn is_star(self) -> bool {
        self == Color::Black
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Row {
    Upper,
    Lower,
}

/// A 1-based reference to a point of a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PointRef {
    pub row: Row,
    pub index: usize,
}

impl PointRef {
    pub fn upper(index: usize) -> Self {
        PointRef { row: Row::Upper, index }
    }

    pub fn lower(index: usize) -> Self {
        PointRef { row: Row::Lower, index }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown builtin partition `{0}`")]
    UnknownBuiltin(String),
    #[error("invalid parameter for builtin `{name}`: {message}")]
    InvalidParameter { name: String, message: String },
    #[error("point out of range: {0:?}")]
    PointOutOfRange(PointRef),
    #[error("operation requires k = 0, but partition has {0} upper points")]
    NotSingleRow(usize),
}

/// A two-colored set partition of `k` upper and `l` lower points, in
/// canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    upper_colors: Vec<Color>,
    lower_colors: Vec<Color>,
    /// Block id per point, upper 1..k then lower 1..l; ids are consecutive
    /// from 0 in order of first appearance.
    blocks: Vec<usize>,
}

impl Partition {
    /// Builds a partition from per-point block labels (upper row then lower
    /// row, arbitrary ids) and normalizes to canonical form.
    ///
    /// Every label class becomes one block; labels need not be consecutive.
    pub fn new(
        upper_colors: Vec<Color>,
        lower_colors: Vec<Color>,
        raw_blocks: &[usize],
    ) -> Partition {
        assert_eq!(
            raw_blocks.len(),
            upper_colors.len() + lower_colors.len(),
            "one block label per point required"
        );
        let mut p = Partition {
            upper_colors,
            lower_colors,
            blocks: raw_blocks.to_vec(),
        };
        p.canonicalize();
        p
    }

    /// The empty partition in `P(0,0)`.
    pub fn empty() -> Partition {
        Partition {
            upper_colors: Vec::new(),
            lower_colors: Vec::new(),
            blocks: Vec::new(),
        }
    }

    fn canonicalize(&mut self) {
        let mut relabel: Vec<Option<usize>> = vec![None; self.blocks.len().max(1)];
        let mut next = 0usize;
        let max_id = self.blocks.iter().copied().max().unwrap_or(0);
        if relabel.len() <= max_id {
            relabel.resize(max_id + 1, None);
        }
        for b in &mut self.blocks {
            let id = relabel[*b].get_or_insert_with(|| {
                let id = next;
                next += 1;
                id
            });
            *b = *id;
        }
    }

    pub fn upper_len(&self) -> usize {
        self.upper_colors.len()
    }

    pub fn lower_len(&self) -> usize {
        self.lower_colors.len()
    }

    /// Total number of points, `k + l`.
    pub fn points(&self) -> usize {
        self.blocks.len()
    }

    pub fn upper_colors(&self) -> &[Color] {
        &self.upper_colors
    }

    pub fn lower_colors(&self) -> &[Color] {
        &self.lower_colors
    }

    /// `true` if every point is white.
    pub fn is_one_colored(&self) -> bool {
        self.upper_colors
            .iter()
            .chain(&self.lower_colors)
            .all(|&c| c == Color::White)
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.blocks.iter().copied().max().map_or(0, |m| m + 1)
    }

    /// Canonical block id of a point.
    pub fn block_of(&self, point: PointRef) -> Result<usize, PartitionError> {
        Ok(self.blocks[self.flat_index(point)?])
    }

    pub fn color_of(&self, point: PointRef) -> Result<Color, PartitionError> {
        let i = self.flat_index(point)?;
        Ok(if i < self.upper_len() {
            self.upper_colors[i]
        } else {
            self.lower_colors[i - self.upper_len()]
        })
    }

    fn flat_index(&self, point: PointRef) -> Result<usize, PartitionError> {
        let limit = match point.row {
            Row::Upper => self.upper_len(),
            Row::Lower => self.lower_len(),
        };
        if point.index == 0 || point.index > limit {
            return Err(PartitionError::PointOutOfRange(point));
        }
        Ok(match point.row {
            Row::Upper => point.index - 1,
            Row::Lower => self.upper_len() + point.index - 1,
        })
    }

    /// Block id of the `s`-th upper point (1-based).
    pub fn upper_block(&self, s: usize) -> usize {
        self.blocks[s - 1]
    }

    /// Block id of the `t`-th lower point (1-based).
    pub fn lower_block(&self, t: usize) -> usize {
        self.blocks[self.upper_len() + t - 1]
    }

    /// Block ids for all points, upper row then lower row.
    pub fn block_ids(&self) -> &[usize] {
        &self.blocks
    }

    /// Sizes of the blocks, sorted ascending.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.block_count()];
        for &b in &self.blocks {
            sizes[b] += 1;
        }
        sizes.sort_unstable();
        sizes
    }

    /// `true` if every block has exactly two points.
    pub fn is_pair(&self) -> bool {
        self.block_sizes().iter().all(|&s| s == 2)
    }

    /// `true` if every block has an even number of points.
    pub fn has_even_blocks(&self) -> bool {
        self.block_sizes().iter().all(|&s| s % 2 == 0)
    }

    /// Block ids in the cyclic boundary order of the rectangle picture:
    /// upper row left-to-right, then lower row right-to-left.
    fn boundary_blocks(&self) -> Vec<usize> {
        let k = self.upper_len();
        let mut out: Vec<usize> = self.blocks[..k].to_vec();
        out.extend(self.blocks[k..].iter().rev());
        out
    }

    /// `true` if the diagram may be drawn without crossing strings.
    ///
    /// Tested on the cyclic boundary reading order: two blocks cross iff
    /// their boundary points interleave as a b a b around the circle.
    pub fn is_noncrossing(&self) -> bool {
        let word = self.boundary_blocks();
        // Stack test on the single-line word: a block may be re-opened only
        // while no other block opened after it is still open.
        let mut stack: Vec<usize> = Vec::new();
        let mut remaining = vec![0usize; self.block_count()];
        for &b in &word {
            remaining[b] += 1;
        }
        for &b in &word {
            if let Some(pos) = stack.iter().rposition(|&x| x == b) {
                if pos != stack.len() - 1 {
                    return false;
                }
            } else {
                stack.push(b);
            }
            remaining[b] -= 1;
            if remaining[b] == 0 {
                if stack.last() != Some(&b) {
                    return false;
                }
                stack.pop();
            }
        }
        true
    }

    /// `true` if every block consists of consecutive lower points.
    ///
    /// Only defined on `P(0, l)`.
    pub fn is_interval(&self) -> Result<bool, PartitionError> {
        if self.upper_len() != 0 {
            return Err(PartitionError::NotSingleRow(self.upper_len()));
        }
        let mut last_seen: Vec<Option<usize>> = vec![None; self.block_count()];
        for (i, &b) in self.blocks.iter().enumerate() {
            if let Some(prev) = last_seen[b] {
                if prev + 1 != i {
                    return Ok(false);
                }
            }
            last_seen[b] = Some(i);
        }
        Ok(true)
    }

    /// Parses the partition literal grammar:
    ///
    /// ```text
    /// partition := "[" point* "|" point* "]"
    /// point     := label color?     label := [A-Za-z0-9_]+
    /// color     := "o" (white, default) | "x" (black)
    /// ```
    ///
    /// Equal labels within one literal denote the same block. A token of
    /// length >= 2 ending in `o` or `x` is read as label plus color suffix.
    pub fn parse(text: &str) -> Result<Partition, PartitionError> {
        Parser::new(text).parse()
    }

    /// Canonical literal. One-colored partitions print without color
    /// suffixes; otherwise every point carries an explicit `o` or `x`.
    pub fn print(&self) -> String {
        let explicit = !self.is_one_colored();
        let k = self.upper_len();
        let token = |b: usize, c: Color| {
            let mut t = block_label(b);
            if explicit {
                t.push(if c == Color::Black { 'x' } else { 'o' });
            }
            t
        };
        let mut out = String::from("[");
        for (i, &b) in self.blocks[..k].iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&token(b, self.upper_colors[i]));
        }
        if k > 0 {
            out.push(' ');
        }
        out.push('|');
        for (t, &b) in self.blocks[k..].iter().enumerate() {
            out.push(' ');
            out.push_str(&token(b, self.lower_colors[t]));
        }
        out.push(']');
        out
    }

    /// A named partition from the worked examples, possibly with parameters.
    ///
    /// `identity`, `pair_lower`, `pair_upper` accept optional color
    /// parameters (0 = white, 1 = black, one per point); `singleton` accepts
    /// an optional color; `singleton_upper` is its upper-row mirror;
    /// `block_b` and `h` require a size parameter.
    pub fn builtin(name: &str, params: &[i64]) -> Result<Partition, PartitionError> {
        let color = |v: i64| if v == 0 { Color::White } else { Color::Black };
        let colors = |count: usize| -> Vec<Color> {
            (0..count)
                .map(|i| params.get(i).copied().map_or(Color::White, color))
                .collect()
        };
        let need = |cond: bool, msg: &str| -> Result<(), PartitionError> {
            if cond {
                Ok(())
            } else {
                Err(PartitionError::InvalidParameter {
                    name: name.to_string(),
                    message: msg.to_string(),
                })
            }
        };
        Ok(match name {
            "identity" => {
                let c = colors(2);
                Partition::new(vec![c[0]], vec![c[1]], &[0, 0])
            }
            "pair_lower" => Partition::new(Vec::new(), colors(2), &[0, 0]),
            "pair_upper" => Partition::new(colors(2), Vec::new(), &[0, 0]),
            "singleton" => Partition::new(Vec::new(), colors(1), &[0]),
            "singleton_upper" => Partition::new(colors(1), Vec::new(), &[0]),
            "crossing" => Partition::new(
                vec![Color::White; 2],
                vec![Color::White; 2],
                &[0, 1, 1, 0],
            ),
            "three_block_up" => {
                Partition::new(vec![Color::White; 2], vec![Color::White], &[0, 0, 0])
            }
            "three_block_down" => {
                Partition::new(vec![Color::White], vec![Color::White; 2], &[0, 0, 0])
            }
            "four_block" => Partition::new(
                vec![Color::White; 2],
                vec![Color::White; 2],
                &[0, 0, 0, 0],
            ),
            "block_b" => {
                let l = *params.first().unwrap_or(&0);
                need(l >= 1, "block size must be >= 1")?;
                let l = l as usize;
                Partition::new(Vec::new(), vec![Color::White; l], &vec![0; l])
            }
            "h" => {
                let s = *params.first().unwrap_or(&0);
                need(s >= 1, "half-size must be >= 1")?;
                let s = s as usize;
                let labels: Vec<usize> = (0..2 * s).map(|i| i % 2).collect();
                Partition::new(Vec::new(), vec![Color::White; 2 * s], &labels)
            }
            "fat_crossing" => Partition::new(
                vec![Color::White; 4],
                vec![Color::White; 4],
                &[0, 0, 1, 1, 1, 1, 0, 0],
            ),
            "pair_positioner" => Partition::new(
                vec![Color::White; 3],
                vec![Color::White; 3],
                &[0, 0, 1, 1, 0, 0],
            ),
            _ => return Err(PartitionError::UnknownBuiltin(name.to_string())),
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.print())
    }
}

fn block_label(id: usize) -> String {
    if id < 26 {
        ((b'a' + id as u8) as char).to_string()
    } else {
        format!("z{id}")
    }
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text, bytes: text.as_bytes(), pos: 0 }
    }

    fn error(&self, message: impl Into<String>) -> PartitionError {
        PartitionError::Syntax { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, ch: u8) -> Result<(), PartitionError> {
        self.skip_ws();
        if self.pos < self.bytes.len() && self.bytes[self.pos] == ch {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", ch as char)))
        }
    }

    fn parse(mut self) -> Result<Partition, PartitionError> {
        self.expect(b'[')?;
        let upper = self.parse_row(b'|')?;
        self.expect(b'|')?;
        let lower = self.parse_row(b']')?;
        self.expect(b']')?;
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(self.error("trailing input after `]`"));
        }

        let mut labels: Vec<&str> = Vec::new();
        let mut ids = Vec::new();
        let mut upper_colors = Vec::new();
        let mut lower_colors = Vec::new();
        for (label, color, is_upper) in upper
            .into_iter()
            .map(|(l, c)| (l, c, true))
            .chain(lower.into_iter().map(|(l, c)| (l, c, false)))
        {
            let id = labels.iter().position(|&x| x == label).unwrap_or_else(|| {
                labels.push(label);
                labels.len() - 1
            });
            ids.push(id);
            if is_upper {
                upper_colors.push(color);
            } else {
                lower_colors.push(color);
            }
        }
        Ok(Partition::new(upper_colors, lower_colors, &ids))
    }

    fn parse_row(&mut self, stop: u8) -> Result<Vec<(&'a str, Color)>, PartitionError> {
        let mut points = Vec::new();
        loop {
            self.skip_ws();
            if self.pos >= self.bytes.len() {
                return Err(self.error("unexpected end of input"));
            }
            let b = self.bytes[self.pos];
            if b == stop || b == b'|' || b == b']' {
                return Ok(points);
            }
            points.push(self.parse_point()?);
        }
    }

    fn parse_point(&mut self) -> Result<(&'a str, Color), PartitionError> {
        let start = self.pos;
        while self.pos < self.bytes.len() && is_label_byte(self.bytes[self.pos]) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(format!(
                "invalid character `{}` in point",
                self.bytes[self.pos] as char
            )));
        }
        let token = &self.text[start..self.pos];
        // A trailing color char belongs to the point, not the label, as long
        // as stripping it leaves a non-empty label.
        let (label, color) = match token.as_bytes() {
            [rest @ .., b'o'] if !rest.is_empty() => (&token[..token.len() - 1], Color::White),
            [rest @ .., b'x'] if !rest.is_empty() => (&token[..token.len() - 1], Color::Black),
            _ => (token, Color::White),
        };
        if label == "o" || label == "x" {
            // single-char color tokens would make the block label empty
            return Err(self.error("empty block label before color character"));
        }
        Ok((label, color))
    }
}

fn is_label_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}
