//! Linear brane diagrams: NS5 (`o`) and D5 (`x`) fivebranes separated by
//! D3 segments of given dimensions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::chain_to_orbit;
use crate::spaces::{compose, Group, SpaceDescriptor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Brane {
    #[serde(rename = "o")]
    Ns5,
    #[serde(rename = "x")]
    D5,
}

impl Brane {
    pub fn swapped(self) -> Brane {
        match self {
            Brane::Ns5 => Brane::D5,
            Brane::D5 => Brane::Ns5,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Brane::Ns5 => 'o',
            Brane::D5 => 'x',
        }
    }
}

/// A diagram `d_0 b_1 d_1 b_2 ... b_k d_k`. The outer segments carry flavor
/// symmetry `GL(d_0)` and `GL(d_k)`; a closed diagram has both equal to zero.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DiagramDoc")]
pub struct BraneDiagram {
    branes: Vec<Brane>,
    dims: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramDoc {
    branes: Vec<Brane>,
    dims: Vec<usize>,
}

impl TryFrom<DiagramDoc> for BraneDiagram {
    type Error = Error;
    fn try_from(doc: DiagramDoc) -> Result<Self> {
        BraneDiagram::new(doc.branes, doc.dims)
    }
}

impl BraneDiagram {
    pub fn new(branes: Vec<Brane>, dims: Vec<usize>) -> Result<Self> {
        if dims.len() != branes.len() + 1 {
            return Err(Error::InvalidDiagram(format!(
                "{} branes need {} segment dimensions, got {}",
                branes.len(),
                branes.len() + 1,
                dims.len()
            )));
        }
        Ok(BraneDiagram { branes, dims })
    }

    /// The diagram with no branes and a single segment of dimension `d`.
    pub fn empty(d: usize) -> Self {
        BraneDiagram { branes: Vec::new(), dims: vec![d] }
    }

    pub fn branes(&self) -> &[Brane] {
        &self.branes
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.branes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.branes.is_empty()
    }

    /// Both outer segments are zero.
    pub fn is_closed(&self) -> bool {
        self.dims[0] == 0 && *self.dims.last().unwrap() == 0
    }

    pub fn count(&self, kind: Brane) -> usize {
        self.branes.iter().filter(|&&b| b == kind).count()
    }

    /// Places `other` to the right of `self`, identifying the shared segment.
    pub fn concat(&self, other: &BraneDiagram) -> Result<BraneDiagram> {
        let (l, r) = (*self.dims.last().unwrap(), other.dims[0]);
        if l != r {
            return Err(Error::InvalidDiagram(format!(
                "cannot glue a diagram ending in {l} to one starting with {r}"
            )));
        }
        let mut branes = self.branes.clone();
        branes.extend_from_slice(&other.branes);
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims[1..]);
        Ok(BraneDiagram { branes, dims })
    }

    /// Dimensions just to the right of every NS5 except the last, i.e. the
    /// gauge dimensions of the quiver the diagram came from.
    pub fn ns5_segment_dims(&self) -> Vec<usize> {
        let ns5: Vec<usize> = (0..self.branes.len()).filter(|&i| self.branes[i] == Brane::Ns5).collect();
        ns5.iter().take(ns5.len().saturating_sub(1)).map(|&i| self.dims[i + 1]).collect()
    }
}

impl fmt::Display for BraneDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dims[0])?;
        for (b, d) in self.branes.iter().zip(&self.dims[1..]) {
            write!(f, " {} {}", b.symbol(), d)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraneDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraneDiagram({self})")
    }
}

impl FromStr for BraneDiagram {
    type Err = Error;

    /// Parses `0 o 1 x 1 x 1 o 0`. Whitespace between tokens is optional
    /// only where unambiguous, so `0o1x1` is accepted too.
    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = Vec::new();
        let mut chars = s.chars().peekable();
        while let Some(&c) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
            } else if c.is_ascii_digit() {
                let mut num = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    num.push(d);
                    chars.next();
                }
                tokens.push(num);
            } else if c == 'o' || c == 'x' {
                tokens.push(c.to_string());
                chars.next();
            } else {
                return Err(Error::Parse(format!("unexpected character {c:?} in diagram {s:?}")));
            }
        }
        if tokens.is_empty() {
            return Err(Error::Parse("empty diagram string".into()));
        }
        let mut branes = Vec::new();
        let mut dims = Vec::new();
        for (i, t) in tokens.iter().enumerate() {
            if i % 2 == 0 {
                let d = t
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("expected a dimension at token {i} of {s:?}, found {t:?}")))?;
                dims.push(d);
            } else {
                branes.push(match t.as_str() {
                    "o" => Brane::Ns5,
                    "x" => Brane::D5,
                    _ => return Err(Error::Parse(format!("expected o or x at token {i} of {s:?}, found {t:?}"))),
                });
            }
        }
        if tokens.len() % 2 == 0 {
            return Err(Error::Parse(format!("diagram {s:?} must end with a dimension")));
        }
        BraneDiagram::new(branes, dims)
    }
}

/// Linear quiver with gauge dimensions `v` and framing dimensions `w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverData {
    v: Vec<usize>,
    w: Vec<usize>,
}

impl QuiverData {
    pub fn new(v: Vec<usize>, w: Vec<usize>) -> Result<Self> {
        if v.len() != w.len() {
            return Err(Error::InvalidDiagram(format!(
                "quiver has {} gauge nodes but {} framing entries",
                v.len(),
                w.len()
            )));
        }
        Ok(QuiverData { v, w })
    }

    pub fn len(&self) -> usize {
        self.v.len()
    }

    pub fn is_empty(&self) -> bool {
        self.v.is_empty()
    }

    pub fn gauge(&self) -> &[usize] {
        &self.v
    }

    pub fn framing(&self) -> &[usize] {
        &self.w
    }
}

fn alternating(q: &QuiverData, separator: Brane) -> BraneDiagram {
    let mut branes = vec![separator];
    let mut dims = vec![0];
    for (&v, &w) in q.v.iter().zip(&q.w) {
        dims.push(v);
        for _ in 0..w {
            branes.push(separator.swapped());
            dims.push(v);
        }
        branes.push(separator);
    }
    dims.push(0);
    BraneDiagram { branes, dims }
}

/// `o x^{w_1} o x^{w_2} o ... x^{w_l} o` with segment dimensions
/// `0, v_1, .., v_1, v_2, .., v_l, 0`.
pub fn quiver_to_diagram(q: &QuiverData) -> BraneDiagram {
    alternating(q, Brane::Ns5)
}

/// The same chain with the roles of the two brane types exchanged,
/// `x o^{w_1} x ... o^{w_l} x`.
pub fn quiver_to_dual_diagram(q: &QuiverData) -> BraneDiagram {
    alternating(q, Brane::D5)
}

/// Exchanges NS5 and D5 branes, keeping every segment.
pub fn sdual(d: &BraneDiagram) -> BraneDiagram {
    BraneDiagram {
        branes: d.branes.iter().map(|b| b.swapped()).collect(),
        dims: d.dims.clone(),
    }
}

/// Swaps the branes at `i` and `i + 1` and replaces the segment between them
/// by `d_1 + d_3 + 1 - d_2`.
pub fn hw_move(d: &BraneDiagram, i: usize) -> Result<BraneDiagram> {
    if i + 1 >= d.branes.len() {
        return Err(Error::IndexOutOfRange { index: i, len: d.branes.len() });
    }
    if d.branes[i] == d.branes[i + 1] {
        return Err(Error::SameTypePair(i));
    }
    let (d1, d2, d3) = (d.dims[i] as i64, d.dims[i + 1] as i64, d.dims[i + 2] as i64);
    let new = d1 + d3 + 1 - d2;
    if new < 0 {
        return Err(Error::NonAdmissible(new));
    }
    let mut out = d.clone();
    out.branes.swap(i, i + 1);
    out.dims[i + 1] = new as usize;
    Ok(out)
}

/// Linking numbers of all fivebranes, each list sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LinkingData {
    pub ns5: Vec<i64>,
    pub d5: Vec<i64>,
}

impl fmt::Display for LinkingData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "ns5 {{{}}}  d5 {{{}}}", show(&self.ns5), show(&self.d5))
    }
}

/// NS5 at `p`: `(right - left) + #D5 to the left`.
/// D5 at `p`: `(left - right) + #NS5 to the right`.
pub fn linking_numbers(d: &BraneDiagram) -> LinkingData {
    let total_ns5 = d.count(Brane::Ns5) as i64;
    let (mut ns5, mut d5) = (Vec::new(), Vec::new());
    let (mut d5_left, mut ns5_left) = (0i64, 0i64);
    for (p, b) in d.branes.iter().enumerate() {
        let (left, right) = (d.dims[p] as i64, d.dims[p + 1] as i64);
        match b {
            Brane::Ns5 => {
                ns5.push(right - left + d5_left);
                ns5_left += 1;
            }
            Brane::D5 => {
                d5.push(left - right + (total_ns5 - ns5_left));
                d5_left += 1;
            }
        }
    }
    ns5.sort_unstable();
    d5.sort_unstable();
    LinkingData { ns5, d5 }
}

/// `M_○(V_i, V_j)` or `M_×(V_i, V_j)` for a single brane.
pub fn block_space(brane: Brane, vi: usize, vj: usize) -> SpaceDescriptor {
    match brane {
        Brane::Ns5 => SpaceDescriptor::ns5_block(vi, vj),
        Brane::D5 => SpaceDescriptor::d5_block(vi, vj),
    }
}

/// The Hamiltonian space the diagram is known to describe. Two families are
/// recognized: NS5-only chains starting at zero (an orbit closure) and
/// single-brane diagrams.
pub fn expected_space(d: &BraneDiagram) -> Result<SpaceDescriptor> {
    if d.branes.len() == 1 {
        return Ok(block_space(d.branes[0], d.dims[0], d.dims[1]));
    }
    if !d.branes.is_empty() && d.dims[0] == 0 && d.branes.iter().all(|&b| b == Brane::Ns5) {
        let orbit = chain_to_orbit(&d.dims)?;
        return Ok(SpaceDescriptor::orbit_closure(orbit.jordan_type, Group::trivial(), Group::gl(orbit.n)));
    }
    Err(Error::UnsupportedDiagram(d.to_string()))
}

/// Composes the blocks of the diagram over the interior segments,
/// `M_1 ∘_{GL(d_1)} M_2 ∘ ... ∘_{GL(d_{k-1})} M_k`.
pub fn composed_space(d: &BraneDiagram, free: bool) -> Result<SpaceDescriptor> {
    let mut acc = match d.branes.first() {
        Some(&b) => block_space(b, d.dims[0], d.dims[1]),
        None => return Ok(SpaceDescriptor::point(Group::gl(d.dims[0]))),
    };
    for (i, &b) in d.branes.iter().enumerate().skip(1) {
        let next = block_space(b, d.dims[i], d.dims[i + 1]);
        acc = compose(&acc, &next, &Group::gl(d.dims[i]), free)?;
    }
    Ok(acc)
}
