//! Compositions and the seaweed descriptors built from them.
//!
//! A standard seaweed in `gl(N)` is a pair of compositions of `N`; a standard
//! seaweed in `sp(2n)` (or `so(2n+1)`, which shares the parametrization) is a
//! rank `n` together with two compositions of total at most `n`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Ordered list of positive parts. The empty composition is a valid value.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
    total: usize,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = parts.iter().find(|&&p| p == 0) {
            return Err(Error::Parse {
                token: bad.to_string(),
                reason: "part must be ≥ 1",
            });
        }
        let total = parts.iter().sum();
        Ok(Self { parts, total })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a composition from parts, silently dropping zero parts.
    pub(crate) fn from_parts_dropping_zeros(parts: impl IntoIterator<Item = usize>) -> Self {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        let total = parts.iter().sum();
        Self { parts, total }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.parts.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.parts.last().copied()
    }

    /// All parts but the first.
    pub fn tail(&self) -> Composition {
        match self.parts.split_first() {
            Some((head, rest)) => Self {
                parts: rest.to_vec(),
                total: self.total - head,
            },
            None => Self::empty(),
        }
    }

    /// A copy with `part` appended. `part` must be positive.
    pub fn with_appended(&self, part: usize) -> Composition {
        assert!(part > 0, "composition parts are positive");
        let mut parts = self.parts.clone();
        parts.push(part);
        Self {
            parts,
            total: self.total + part,
        }
    }

    /// A copy with `prefix` placed in front of the existing parts; zero parts are skipped.
    pub(crate) fn with_prefix(&self, prefix: &[usize]) -> Composition {
        Self::from_parts_dropping_zeros(prefix.iter().copied().chain(self.parts.iter().copied()))
    }

    /// The serialized form: `"a1,a2,...,as"`, with the empty composition as `""`.
    pub fn to_text(&self) -> String {
        self.parts
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "∅" || text.eq_ignore_ascii_case("empty") {
            return Ok(Self::empty());
        }
        let parts = text
            .split(',')
            .map(|raw| {
                let token = raw.trim();
                let value: i128 = token.parse().map_err(|_| Error::Parse {
                    token: token.to_string(),
                    reason: "not an integer",
                })?;
                if value < 1 {
                    return Err(Error::Parse {
                        token: token.to_string(),
                        reason: "part must be ≥ 1",
                    });
                }
                usize::try_from(value).map_err(|_| Error::Parse {
                    token: token.to_string(),
                    reason: "part too large",
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("∅")
        } else {
            f.write_str(&self.to_text())
        }
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Ordering used to pick ~-class representatives: larger total first, then
/// lexicographically smaller parts first.
fn canonical_order(x: &Composition, y: &Composition) -> Ordering {
    y.total.cmp(&x.total).then_with(|| x.parts.cmp(&y.parts))
}

/// Standard seaweed `q^A(a | b)` in `gl(N)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeaweedA {
    top: Composition,
    bottom: Composition,
    size: usize,
}

impl SeaweedA {
    pub fn new(top: Composition, bottom: Composition) -> Result<Self> {
        if top.total() != bottom.total() {
            return Err(Error::TotalsDiffer {
                top: top.total(),
                bottom: bottom.total(),
            });
        }
        if top.total() == 0 {
            return Err(Error::EmptyTypeA);
        }
        let size = top.total();
        Ok(Self { top, bottom, size })
    }

    pub fn top(&self) -> &Composition {
        &self.top
    }

    pub fn bottom(&self) -> &Composition {
        &self.bottom
    }

    pub fn size(&self) -> usize {
        self.size
    }
}

impl fmt::Display for SeaweedA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^A({} | {})", self.top, self.bottom)
    }
}

/// Which classical series a rank-`n` seaweed descriptor lives in. Both series
/// share compositions, meander graphs and index values.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    /// `sp(2n)`, type C.
    #[default]
    Sp,
    /// `so(2n+1)`, type B.
    SoOdd,
}

impl Series {
    pub fn letter(self) -> &'static str {
        match self {
            Series::Sp => "C",
            Series::SoOdd => "B",
        }
    }

    /// Name of the ambient algebra at rank `n`.
    pub fn ambient(self, rank: usize) -> String {
        match self {
            Series::Sp => format!("sp({})", 2 * rank),
            Series::SoOdd => format!("so({})", 2 * rank + 1),
        }
    }
}

/// Standard seaweed `q_n(a | b)` in `sp(2n)` or `so(2n+1)`.
///
/// Rank 0 is admitted: it is the zero algebra reached at the end of some
/// reduction chains, with index 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeaweedC {
    rank: usize,
    top: Composition,
    bottom: Composition,
    series: Series,
}

impl SeaweedC {
    pub fn new(rank: usize, top: Composition, bottom: Composition, series: Series) -> Result<Self> {
        if top.total() > rank {
            return Err(Error::TopExceedsRank {
                total: top.total(),
                rank,
            });
        }
        if bottom.total() > rank {
            return Err(Error::BottomExceedsRank {
                total: bottom.total(),
                rank,
            });
        }
        Ok(Self {
            rank,
            top,
            bottom,
            series,
        })
    }

    /// Symplectic seaweed; shorthand used throughout tests and enumeration.
    pub fn sp(rank: usize, top: Composition, bottom: Composition) -> Result<Self> {
        Self::new(rank, top, bottom, Series::Sp)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn top(&self) -> &Composition {
        &self.top
    }

    pub fn bottom(&self) -> &Composition {
        &self.bottom
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn with_series(&self, series: Series) -> Self {
        Self {
            series,
            ..self.clone()
        }
    }

    /// `d = n - Σa`, the number of central arcs above the line.
    pub fn d(&self) -> usize {
        self.rank - self.top.total()
    }

    /// `d' = n - Σb`, the number of central arcs below the line.
    pub fn d_prime(&self) -> usize {
        self.rank - self.bottom.total()
    }

    pub fn is_parabolic(&self) -> bool {
        self.top.is_empty() || self.bottom.is_empty()
    }

    /// `q_n(b | a)`: isomorphic to `q_n(a | b)`.
    pub fn swapped(&self) -> Self {
        Self {
            rank: self.rank,
            top: self.bottom.clone(),
            bottom: self.top.clone(),
            series: self.series,
        }
    }

    /// Representative of the class `{(a|b), (b|a)}`: the side with the larger
    /// total goes on top, ties broken by the lexicographically smaller parts.
    pub fn canonical_pair(&self) -> Self {
        match canonical_order(&self.top, &self.bottom) {
            Ordering::Greater => self.swapped(),
            _ => self.clone(),
        }
    }

    /// The symmetric seaweed of `gl(2n)` whose meander graph is the graph of `self`.
    pub fn symmetrize(&self) -> SeaweedA {
        SeaweedA {
            top: symmetric_composition(&self.top, self.rank),
            bottom: symmetric_composition(&self.bottom, self.rank),
            size: 2 * self.rank,
        }
    }
}

impl fmt::Display for SeaweedC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q^{}_{}({} | {})",
            self.series.letter(),
            self.rank,
            self.top,
            self.bottom
        )
    }
}

/// `(a1, ..., as, 2d, as, ..., a1)` with `d = rank - Σa`; the middle part is
/// omitted when `d = 0`.
pub fn symmetric_composition(a: &Composition, rank: usize) -> Composition {
    let d = rank - a.total();
    let parts = a
        .parts()
        .iter()
        .copied()
        .chain(std::iter::once(2 * d))
        .chain(a.parts().iter().rev().copied());
    Composition::from_parts_dropping_zeros(parts)
}

/// Free-function form of [`SeaweedC::new`].
pub fn make_seaweed_c(rank: usize, a: Composition, b: Composition, series: Series) -> Result<SeaweedC> {
    SeaweedC::new(rank, a, b, series)
}

/// Free-function form of [`SeaweedC::symmetrize`].
pub fn symmetrize(q: &SeaweedC) -> SeaweedA {
    q.symmetrize()
}

/// Free-function form of [`SeaweedC::canonical_pair`].
pub fn canonical_pair(q: &SeaweedC) -> SeaweedC {
    q.canonical_pair()
}

pub fn parse_composition(text: &str) -> Result<Composition> {
    text.parse()
}
