//! Planar-diagram codes for single-component knot diagrams.
//!
//! A code with `n` crossings has `2n` edges labeled `1..=2n` consecutively along
//! the orientation. Each crossing is a quadruple read counterclockwise starting at
//! the incoming under-edge; incoming edges carry a positive sign and outgoing edges
//! a negative one. So in `[a, b, c, d]` the under-strand runs `a -> c` and exactly
//! one of `b`, `d` is the incoming over-edge.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::gamma::GammaElement;

pub type Quad = [i32; 4];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

/// The first invariant a candidate code breaks. `quad` indices are zero-based.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("quadruple {quad} {entries:?}: label {label} outside 1..={edges}")]
    LabelOutOfRange {
        quad: usize,
        entries: Quad,
        label: i32,
        edges: usize,
    },
    #[error("quadruple {quad} {entries:?}: label {} appears twice {}", .label.abs(), if *.label > 0 { "positive" } else { "negative" })]
    RepeatedLabel { quad: usize, entries: Quad, label: i32 },
    #[error("quadruple {quad} {entries:?}: first entry must be the incoming under-edge (positive)")]
    UnderNotIncoming { quad: usize, entries: Quad },
    #[error("quadruple {quad} {entries:?}: under-strand must leave along {expected}")]
    UnderStrandBreak {
        quad: usize,
        entries: Quad,
        expected: i32,
    },
    #[error("quadruple {quad} {entries:?}: over-strand needs exactly one positive entry among positions 2 and 4")]
    OverStrandSigns { quad: usize, entries: Quad },
    #[error("quadruple {quad} {entries:?}: over-strand must leave along {expected}")]
    OverStrandBreak {
        quad: usize,
        entries: Quad,
        expected: i32,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PdError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid PD-code: {0}")]
    Invalid(#[from] Violation),
    #[error("connected sum needs nonempty diagrams")]
    EmptySummand,
    #[error("connected sum of an empty list")]
    EmptyList,
}

/// A validated PD-code. Every constructor checks the invariants, so any value of
/// this type is a well-formed single-component diagram.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PdCode {
    crossings: Vec<Quad>,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, want: u8, context: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(b) if b == want => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(self.error(format!(
                "expected `{}` {context}, found `{}`",
                want as char, b as char
            ))),
            None => Err(self.error(format!("expected `{}` {context}, found end of input", want as char))),
        }
    }

    fn int(&mut self) -> Result<i32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let negative = self.bytes.get(self.pos) == Some(&b'-');
        if negative {
            self.pos += 1;
        }
        match self.bytes.get(self.pos) {
            Some(b'1'..=b'9') => {}
            Some(b'0') => return Err(self.error("labels are nonzero and have no leading zeros")),
            _ => return Err(self.error("expected an integer label")),
        }
        while matches!(self.bytes.get(self.pos), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        text.parse().map_err(|_| ParseError {
            position: start,
            message: format!("label `{text}` out of range"),
        })
    }

    fn quad(&mut self) -> Result<Quad, ParseError> {
        self.expect(b'[', "to open a quadruple")?;
        let mut quad = [0; 4];
        for (i, slot) in quad.iter_mut().enumerate() {
            if i > 0 {
                match self.peek() {
                    Some(b']') => {
                        return Err(self.error(format!(
                            "quadruple has {i} entries, expected exactly 4"
                        )))
                    }
                    _ => self.expect(b',', "between labels")?,
                }
            }
            *slot = self.int()?;
        }
        match self.peek() {
            Some(b',') => Err(self.error("quadruple has more than 4 entries")),
            _ => self.expect(b']', "to close a quadruple"),
        }?;
        Ok(quad)
    }
}

/// Parses the textual grammar without checking diagram invariants.
pub fn parse_quads(text: &str) -> Result<Vec<Quad>, ParseError> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    cur.expect(b'[', "at start of code")?;
    let mut quads = Vec::new();
    if cur.peek() == Some(b']') {
        cur.pos += 1;
    } else {
        loop {
            quads.push(cur.quad()?);
            match cur.peek() {
                Some(b',') => cur.pos += 1,
                Some(b']') => {
                    cur.pos += 1;
                    break;
                }
                Some(b) => return Err(cur.error(format!("expected `,` or `]`, found `{}`", b as char))),
                None => return Err(cur.error("unterminated code")),
            }
        }
    }
    if cur.peek().is_some() {
        return Err(cur.error("trailing input after code"));
    }
    Ok(quads)
}

/// Successor of edge `k` along the orientation of a knot with `edges` edges.
fn next_edge(k: i32, edges: i32) -> i32 {
    k % edges + 1
}

/// Checks every PD-code invariant, reporting the first one violated.
///
/// Label ranges and the once-positive/once-negative pairing are checked over the
/// whole code first; then each quadruple's under- and over-strand structure.
pub fn validate(quads: &[Quad]) -> Result<(), Violation> {
    let edges = 2 * quads.len();
    let mut seen_pos = vec![false; edges + 1];
    let mut seen_neg = vec![false; edges + 1];
    for (qi, q) in quads.iter().enumerate() {
        for &label in q {
            let mag = label.unsigned_abs() as usize;
            if label == 0 || mag > edges {
                return Err(Violation::LabelOutOfRange {
                    quad: qi,
                    entries: *q,
                    label,
                    edges,
                });
            }
            let seen = if label > 0 { &mut seen_pos } else { &mut seen_neg };
            if std::mem::replace(&mut seen[mag], true) {
                return Err(Violation::RepeatedLabel {
                    quad: qi,
                    entries: *q,
                    label,
                });
            }
        }
    }
    // With 4n entries over 2n magnitudes and no repeats, every signed label occurs.

    let e = edges as i32;
    for (qi, q) in quads.iter().enumerate() {
        let [a, b, c, d] = *q;
        if a < 0 {
            return Err(Violation::UnderNotIncoming { quad: qi, entries: *q });
        }
        let expected = -next_edge(a, e);
        if c != expected {
            return Err(Violation::UnderStrandBreak {
                quad: qi,
                entries: *q,
                expected,
            });
        }
        let (incoming, outgoing) = match (b > 0, d > 0) {
            (true, false) => (b, d),
            (false, true) => (d, b),
            _ => return Err(Violation::OverStrandSigns { quad: qi, entries: *q }),
        };
        let expected = -next_edge(incoming, e);
        if outgoing != expected {
            return Err(Violation::OverStrandBreak {
                quad: qi,
                entries: *q,
                expected,
            });
        }
    }
    Ok(())
}

impl PdCode {
    pub fn new(crossings: Vec<Quad>) -> Result<Self, Violation> {
        validate(&crossings)?;
        Ok(Self { crossings })
    }

    /// The crossingless unknot diagram.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn crossings(&self) -> &[Quad] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Mirror: switch every crossing on the same shadow. The old incoming
    /// over-edge becomes the incoming under-edge, so each quadruple restarts there.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|&[a, b, c, d]| if b > 0 { [b, c, d, a] } else { [d, a, b, c] })
            .collect();
        Self { crossings }
    }

    /// Reverse orientation: relabel `k -> 2n+1-k`, flip every sign, and restart
    /// each quadruple at the old outgoing under-edge.
    pub fn reverse(&self) -> Self {
        let e = self.edge_count() as i32;
        let flip = |k: i32| -k.signum() * (e + 1 - k.abs());
        let crossings = self
            .crossings
            .iter()
            .map(|&[a, b, c, d]| [flip(c), flip(d), flip(a), flip(b)])
            .collect();
        Self { crossings }
    }

    /// Applies an intrinsic symmetry: mirror first (if any), then reverse.
    pub fn apply_gamma(&self, g: GammaElement) -> Self {
        let mirrored = if g.is_mirror() {
            self.mirror()
        } else {
            self.clone()
        };
        if g.is_reverse() {
            mirrored.reverse()
        } else {
            mirrored
        }
    }

    /// Lexicographically least code over all cyclic relabelings, with quadruples
    /// sorted by their first entry.
    pub fn canonical_form(&self) -> Self {
        let e = self.edge_count() as i32;
        (0..e.max(1))
            .map(|shift| {
                let relabel = |k: i32| k.signum() * ((k.abs() - 1 + shift) % e + 1);
                let mut crossings: Vec<Quad> = self
                    .crossings
                    .iter()
                    .map(|q| q.map(relabel))
                    .collect();
                crossings.sort_unstable_by_key(|q| q[0]);
                crossings
            })
            .min()
            .map(|crossings| Self { crossings })
            .unwrap_or_default()
    }

    /// Equality up to relabeling of the starting edge and crossing order.
    pub fn diagram_equal(&self, other: &Self) -> bool {
        self.crossing_count() == other.crossing_count()
            && self.canonical_form() == other.canonical_form()
    }

    /// Connected sum along the edges labeled 1.
    ///
    /// Every label of `self` is shifted up by the edge count of `other` except
    /// `-1`, which now closes the path coming out of `other`; in `other`, the `-1`
    /// that follows its last edge becomes the first shifted edge of `self`. The
    /// quadruples of `self` come first.
    pub fn connected_sum(&self, other: &Self) -> Result<Self, PdError> {
        if self.is_empty() || other.is_empty() {
            return Err(PdError::EmptySummand);
        }
        let n2 = other.edge_count() as i32;
        let shifted = self.crossings.iter().map(|q| {
            q.map(|k| if k == -1 { -1 } else { k.signum() * (k.abs() + n2) })
        });
        let spliced = other.crossings.iter().map(|q| {
            if q.contains(&n2) {
                q.map(|k| if k == -1 { -(n2 + 1) } else { k })
            } else {
                *q
            }
        });
        let crossings: Vec<Quad> = shifted.chain(spliced).collect();
        debug_assert_eq!(validate(&crossings), Ok(()));
        Ok(Self { crossings })
    }
}

/// Left fold of [`PdCode::connected_sum`] over `codes`.
pub fn connected_sum_list<'a, I>(codes: I) -> Result<PdCode, PdError>
where
    I: IntoIterator<Item = &'a PdCode>,
{
    let mut iter = codes.into_iter();
    let first = iter.next().ok_or(PdError::EmptyList)?;
    if first.is_empty() {
        return Err(PdError::EmptySummand);
    }
    iter.try_fold(first.clone(), |acc, next| acc.connected_sum(next))
}

impl FromStr for PdCode {
    type Err = PdError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Self::new(parse_quads(s)?)?)
    }
}

impl TryFrom<Vec<Quad>> for PdCode {
    type Error = Violation;

    fn try_from(crossings: Vec<Quad>) -> Result<Self, Self::Error> {
        Self::new(crossings)
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, [a, b, c, d]) in self.crossings.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "[{a},{b},{c},{d}]")?;
        }
        f.write_str("]")
    }
}
