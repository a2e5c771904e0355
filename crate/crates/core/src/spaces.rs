//! Descriptor-level bookkeeping for Hamiltonian spaces: composition by
//! symplectic reduction, the table of known S-dual pairs, and the dimension
//! identities they satisfy.
//!
//! Dual groups are identified with the groups themselves (`T^∨ = T`,
//! `GL_n^∨ = GL_n`); descriptors track dimensions and partition data only.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coulomb::{effective_rank, sdual_torus, TorusTheory};
use crate::error::{Error, Result};
use crate::partitions::{centralizer_dim, chain_to_orbit, hook, orbit_dim, rank_profile, transpose, Partition};

/// A torus, a general linear group, or a product of these.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", from = "GroupRepr")]
pub enum Group {
    Torus(usize),
    Gl(usize),
    Product(Vec<Group>),
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case")]
enum GroupRepr {
    Torus(usize),
    Gl(usize),
    Product(Vec<Group>),
}

impl From<GroupRepr> for Group {
    fn from(g: GroupRepr) -> Self {
        match g {
            GroupRepr::Torus(r) => Group::torus(r),
            GroupRepr::Gl(n) => Group::gl(n),
            GroupRepr::Product(fs) => Group::product(fs),
        }
    }
}

impl Group {
    pub fn trivial() -> Self {
        Group::Product(Vec::new())
    }

    pub fn torus(r: usize) -> Self {
        if r == 0 {
            Group::trivial()
        } else {
            Group::Torus(r)
        }
    }

    pub fn gl(n: usize) -> Self {
        if n == 0 {
            Group::trivial()
        } else {
            Group::Gl(n)
        }
    }

    /// Flattens nested products and drops trivial factors.
    pub fn product(factors: Vec<Group>) -> Self {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                Group::Product(inner) => flat.extend(inner),
                g => flat.push(g),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            Group::Product(flat)
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, Group::Product(fs) if fs.is_empty())
    }

    pub fn dim(&self) -> usize {
        match self {
            Group::Torus(r) => *r,
            Group::Gl(n) => n * n,
            Group::Product(fs) => fs.iter().map(Group::dim).sum(),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Group::Torus(r) => *r,
            Group::Gl(n) => *n,
            Group::Product(fs) => fs.iter().map(Group::rank).sum(),
        }
    }

    /// Langlands dual, identified with the group itself at this level.
    pub fn dual(&self) -> Group {
        self.clone()
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Torus(r) => write!(f, "T({r})"),
            Group::Gl(n) => write!(f, "GL({n})"),
            Group::Product(fs) if fs.is_empty() => f.write_str("1"),
            Group::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(Group::to_string).collect();
                f.write_str(&parts.join(" x "))
            }
        }
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Representations `N` whose cotangent bundle is the space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Rep {
    /// A torus theory; its linear and `C^×` directions.
    Torus { theory: TorusTheory },
    /// `Hom(C^from, C^to)` under `GL(from) x GL(to)`.
    Hom { from: usize, to: usize },
    /// `GL(v) x C^v` under `GL(v) x GL(v)`.
    GroupAndVector { v: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpaceKind {
    Point,
    CotangentOfRep { rep: Rep },
    CotangentOfGroup { group: Group },
    /// `GL(n) x S(λ)` with `S(λ)` the Slodowy slice of Jordan type `λ`.
    GroupTimesSlice { n: usize, slice: Partition },
    OrbitClosure { n: usize, jordan_type: Partition },
    TypeASingularity { k: u32 },
    AffinePlane,
    /// `T^*(C^×)^r`.
    TorusCotangent { rank: usize },
    /// Coulomb branch of a torus theory with no closed-form classification.
    CoulombBranch { theory: TorusTheory },
    Product { factors: Vec<SpaceDescriptor> },
    /// `μ^{-1}(0) // by` of the product of the factors.
    Reduction { factors: Vec<SpaceDescriptor>, by: Group },
    /// `T^*((N_1 x N_2) / by)`.
    CotangentOfQuotient { factors: Vec<SpaceDescriptor>, by: Group },
}

impl SpaceKind {
    fn intrinsic_dim(&self) -> Result<i64> {
        let dim = match self {
            SpaceKind::Point => 0,
            SpaceKind::CotangentOfRep { rep } => match rep {
                Rep::Torus { theory } => theory.matter_dim() as i64,
                Rep::Hom { from, to } => 2 * (from * to) as i64,
                Rep::GroupAndVector { v } => 2 * (v * v + v) as i64,
            },
            SpaceKind::CotangentOfGroup { group } => 2 * group.dim() as i64,
            SpaceKind::GroupTimesSlice { n, slice } => {
                check_size(*n, slice)?;
                (n * n + centralizer_dim(slice)) as i64
            }
            SpaceKind::OrbitClosure { n, jordan_type } => {
                check_size(*n, jordan_type)?;
                orbit_dim(jordan_type) as i64
            }
            SpaceKind::TypeASingularity { .. } | SpaceKind::AffinePlane => 2,
            SpaceKind::TorusCotangent { rank } => 2 * *rank as i64,
            SpaceKind::CoulombBranch { theory } => 2 * effective_rank(theory) as i64,
            SpaceKind::Product { factors } => factors.iter().map(|f| f.dim).sum(),
            SpaceKind::Reduction { factors, by } | SpaceKind::CotangentOfQuotient { factors, by } => {
                factors.iter().map(|f| f.dim).sum::<i64>() - 2 * by.dim() as i64
            }
        };
        Ok(dim)
    }

    fn is_cotangent(&self) -> bool {
        matches!(
            self,
            SpaceKind::Point
                | SpaceKind::CotangentOfRep { .. }
                | SpaceKind::CotangentOfGroup { .. }
                | SpaceKind::TorusCotangent { .. }
                | SpaceKind::CotangentOfQuotient { .. }
        )
    }
}

fn check_size(n: usize, lambda: &Partition) -> Result<()> {
    if lambda.n() != n {
        return Err(Error::InvalidPartition(format!("{lambda} is not a partition of {n}")));
    }
    Ok(())
}

/// A Hamiltonian `left x right`-space together with its complex dimension.
///
/// For composites that are not free the dimension is the expected one.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DescriptorDoc")]
pub struct SpaceDescriptor {
    pub kind: SpaceKind,
    pub left_group: Group,
    pub right_group: Group,
    pub dim: i64,
    /// Produced by a table entry that is conjectural.
    pub conjectural: bool,
    pub possibly_singular: bool,
    /// The right action is twisted by the Chevalley involution.
    pub right_twisted: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DescriptorDoc {
    kind: SpaceKind,
    #[serde(default = "Group::trivial")]
    left_group: Group,
    #[serde(default = "Group::trivial")]
    right_group: Group,
    #[serde(default)]
    dim: Option<i64>,
    #[serde(default)]
    conjectural: bool,
    #[serde(default)]
    possibly_singular: bool,
    #[serde(default)]
    right_twisted: bool,
}

impl TryFrom<DescriptorDoc> for SpaceDescriptor {
    type Error = Error;
    fn try_from(doc: DescriptorDoc) -> Result<Self> {
        let mut d = SpaceDescriptor::try_new(doc.kind, doc.left_group, doc.right_group)?;
        if let Some(dim) = doc.dim {
            if dim != d.dim {
                return Err(Error::Parse(format!("declared dimension {dim} but the kind has dimension {}", d.dim)));
            }
        }
        d.conjectural = doc.conjectural;
        d.possibly_singular = doc.possibly_singular;
        d.right_twisted = doc.right_twisted;
        Ok(d)
    }
}

impl SpaceDescriptor {
    /// Canonicalizes the kind and computes the dimension.
    pub fn try_new(kind: SpaceKind, left_group: Group, right_group: Group) -> Result<Self> {
        let one_sided = left_group.is_trivial() || right_group.is_trivial();
        let kind = match kind {
            SpaceKind::OrbitClosure { ref jordan_type, .. } if jordan_type.parts().iter().all(|&p| p == 1) => {
                SpaceKind::Point
            }
            SpaceKind::GroupTimesSlice { n, ref slice }
                if one_sided && slice.parts().iter().all(|&p| p == 1) && slice.n() == n =>
            {
                SpaceKind::CotangentOfGroup { group: Group::gl(n) }
            }
            SpaceKind::CotangentOfGroup { group: Group::Torus(r) } => SpaceKind::TorusCotangent { rank: r },
            SpaceKind::CotangentOfGroup { ref group } if group.is_trivial() => SpaceKind::Point,
            SpaceKind::TorusCotangent { rank: 0 } => SpaceKind::Point,
            SpaceKind::CotangentOfRep { rep: Rep::Hom { from, to } } if from * to == 0 => SpaceKind::Point,
            SpaceKind::CotangentOfRep { rep: Rep::GroupAndVector { v: 0 } } => SpaceKind::Point,
            SpaceKind::CotangentOfRep { rep: Rep::Torus { ref theory } }
                if theory.linear_weights().is_empty() && theory.multiplicative_weights().is_empty() =>
            {
                SpaceKind::Point
            }
            k => k,
        };
        let dim = kind.intrinsic_dim()?;
        Ok(SpaceDescriptor {
            kind,
            left_group,
            right_group,
            dim,
            conjectural: false,
            possibly_singular: false,
            right_twisted: false,
        })
    }

    /// Like [`SpaceDescriptor::try_new`] for kinds whose data is known to be consistent.
    pub fn new(kind: SpaceKind, left_group: Group, right_group: Group) -> Self {
        Self::try_new(kind, left_group, right_group).expect("consistent space data")
    }

    /// The point with a (trivial) action of `g`.
    pub fn point(g: Group) -> Self {
        Self::new(SpaceKind::Point, g, Group::trivial())
    }

    pub fn cotangent_of_group(g: Group) -> Self {
        Self::new(SpaceKind::CotangentOfGroup { group: g.clone() }, g, Group::trivial())
    }

    /// `T^*G` with left and right multiplication.
    pub fn cotangent_of_group_bimodule(g: Group) -> Self {
        Self::new(SpaceKind::CotangentOfGroup { group: g.clone() }, g.clone(), g)
    }

    pub fn torus_theory(theory: TorusTheory) -> Self {
        let g = Group::torus(theory.rank());
        Self::new(SpaceKind::CotangentOfRep { rep: Rep::Torus { theory } }, g, Group::trivial())
    }

    pub fn group_times_slice(slice: Partition, left: Group, right: Group) -> Self {
        Self::new(SpaceKind::GroupTimesSlice { n: slice.n(), slice }, left, right)
    }

    pub fn orbit_closure(jordan_type: Partition, left: Group, right: Group) -> Self {
        Self::new(SpaceKind::OrbitClosure { n: jordan_type.n(), jordan_type }, left, right)
    }

    /// `M_○(V_i, V_j) = T^*Hom(V_i, V_j)`.
    pub fn ns5_block(vi: usize, vj: usize) -> Self {
        Self::new(SpaceKind::CotangentOfRep { rep: Rep::Hom { from: vi, to: vj } }, Group::gl(vi), Group::gl(vj))
    }

    /// `M_×(V_i, V_j)`: `T^*(GL(V) x V)` when `v_i = v_j`, otherwise
    /// `GL(V_max) x S(|v_i - v_j|, 1^{min})`.
    pub fn d5_block(vi: usize, vj: usize) -> Self {
        let kind = if vi == vj {
            SpaceKind::CotangentOfRep { rep: Rep::GroupAndVector { v: vi } }
        } else {
            let slice = hook(vi.abs_diff(vj), vi.min(vj)).expect("positive arm");
            SpaceKind::GroupTimesSlice { n: vi.max(vj), slice }
        };
        Self::new(kind, Group::gl(vi), Group::gl(vj))
    }

    /// The single acting group of a one-sided space, or the product of both sides.
    pub fn acting_group(&self) -> Group {
        Group::product(vec![self.left_group.clone(), self.right_group.clone()])
    }

    fn is_one_sided(&self) -> bool {
        self.left_group.is_trivial() || self.right_group.is_trivial()
    }

    /// Same kind placed with the acting group on the same side as `self`.
    fn on_same_side(&self, kind: SpaceKind, g: Group) -> SpaceDescriptor {
        if self.left_group.is_trivial() && !self.right_group.is_trivial() {
            Self::new(kind, Group::trivial(), g)
        } else {
            Self::new(kind, g, Group::trivial())
        }
    }

    fn with_conjectural(mut self, c: bool) -> Self {
        self.conjectural = c;
        self
    }

    fn label(&self) -> String {
        match &self.kind {
            SpaceKind::Point => "pt".into(),
            SpaceKind::CotangentOfRep { rep } => match rep {
                Rep::Torus { theory } => format!("T*N[{theory}]"),
                Rep::Hom { from, to } => format!("T*Hom(C^{from}, C^{to})"),
                Rep::GroupAndVector { v } => format!("T*(GL({v}) x C^{v})"),
            },
            SpaceKind::CotangentOfGroup { group } => format!("T*{group}"),
            SpaceKind::GroupTimesSlice { n, slice } => format!("GL({n}) x Slice{slice}"),
            SpaceKind::OrbitClosure { n, jordan_type } => {
                if jordan_type.len() == 1 {
                    format!("N(gl({n}))")
                } else {
                    format!("Orbit{jordan_type}-bar in gl({n})")
                }
            }
            SpaceKind::TypeASingularity { k } => format!("A_{k} singularity"),
            SpaceKind::AffinePlane => "C^2".into(),
            SpaceKind::TorusCotangent { rank } => format!("T*(C^x)^{rank}"),
            SpaceKind::CoulombBranch { theory } => format!("Coulomb[{theory}]"),
            SpaceKind::Product { factors } => {
                let parts: Vec<String> = factors.iter().map(|f| format!("({})", f.label())).collect();
                parts.join(" x ")
            }
            SpaceKind::Reduction { factors, by } => {
                let parts: Vec<String> = factors.iter().map(|f| format!("({})", f.label())).collect();
                format!("{} // {by}", parts.join(" x "))
            }
            SpaceKind::CotangentOfQuotient { factors, by } => {
                let parts: Vec<String> = factors.iter().map(|f| format!("({})", f.label())).collect();
                format!("T*[{} / {by}]", parts.join(" x "))
            }
        }
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}  (dim {})", self.label(), self.dim)?;
        if self.conjectural {
            f.write_str("  [conjectural]")?;
        }
        if self.possibly_singular {
            f.write_str("  [possibly singular]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} <{} | {}>", self.left_group, self.right_group)
    }
}

/// `M_12 ∘ M_23 = μ_2^{-1}(0) // G_2`.
pub fn compose(m12: &SpaceDescriptor, m23: &SpaceDescriptor, g2: &Group, free: bool) -> Result<SpaceDescriptor> {
    if &m12.right_group != g2 || &m23.left_group != g2 {
        return Err(Error::GroupMismatch(m12.right_group.to_string(), m23.left_group.to_string()));
    }
    let conjectural = m12.conjectural || m23.conjectural;
    let finish = |mut d: SpaceDescriptor| {
        d.conjectural |= conjectural;
        d.right_twisted = m23.right_twisted;
        d
    };

    if g2.is_trivial() {
        let bare_point = |m: &SpaceDescriptor| m.kind == SpaceKind::Point && m.is_one_sided() && m.acting_group().is_trivial();
        if bare_point(m23) {
            return Ok(m12.clone());
        }
        if bare_point(m12) {
            return Ok(m23.clone());
        }
        let kind = SpaceKind::Product { factors: vec![m12.clone(), m23.clone()] };
        return Ok(finish(SpaceDescriptor::new(kind, m12.left_group.clone(), m23.right_group.clone())));
    }

    // T*G_2 with both multiplications is the unit for composition
    let is_unit = |m: &SpaceDescriptor| {
        matches!(&m.kind, SpaceKind::CotangentOfGroup { group } if group == g2)
            && &m.left_group == g2
            && &m.right_group == g2
    };
    if is_unit(m12) {
        return Ok(finish(m23.clone()));
    }
    if is_unit(m23) {
        return Ok(finish(m12.clone()));
    }

    if let Some(d) = extend_chain(m12, m23, g2) {
        return Ok(finish(d));
    }

    let factors = vec![m12.clone(), m23.clone()];
    let by = g2.clone();
    let (l, r) = (m12.left_group.clone(), m23.right_group.clone());
    let mut d = if free && m12.kind.is_cotangent() && m23.kind.is_cotangent() {
        SpaceDescriptor::new(SpaceKind::CotangentOfQuotient { factors, by }, l, r)
    } else {
        SpaceDescriptor::new(SpaceKind::Reduction { factors, by }, l, r)
    };
    d.possibly_singular = !free;
    Ok(finish(d))
}

/// An orbit closure in `gl(n)` composed with `T^*Hom(C^n, C^{n'})` is again an
/// orbit closure when the extended quiver chain has weakly decreasing steps.
fn extend_chain(m12: &SpaceDescriptor, m23: &SpaceDescriptor, g2: &Group) -> Option<SpaceDescriptor> {
    let Group::Gl(n) = *g2 else { return None };
    if !m12.left_group.is_trivial() {
        return None;
    }
    let mu = match &m12.kind {
        SpaceKind::Point => Partition::column(n),
        SpaceKind::OrbitClosure { jordan_type, .. } => jordan_type.clone(),
        _ => return None,
    };
    let SpaceKind::CotangentOfRep { rep: Rep::Hom { from, to } } = m23.kind else { return None };
    if from != n || to < n + mu.len() {
        return None;
    }
    let mut dims: Vec<usize> = (1..=mu.largest()).rev().map(|k| rank_profile(&mu, k)).collect();
    dims.push(n);
    dims.push(to);
    let orbit = chain_to_orbit(&dims).ok()?;
    Some(SpaceDescriptor::orbit_closure(orbit.jordan_type, Group::trivial(), m23.right_group.clone()))
}

/// Looks up the S-dual in the built-in table. Group sides are preserved.
pub fn sdual_pair(m: &SpaceDescriptor) -> Result<SpaceDescriptor> {
    let no_dual = || Error::NoKnownDual(m.to_string());
    let g = m.acting_group();
    match &m.kind {
        SpaceKind::Point if m.is_one_sided() => match g {
            Group::Torus(r) => Ok(m.on_same_side(SpaceKind::TorusCotangent { rank: r }, g.clone())),
            Group::Gl(n) => Ok(m.on_same_side(SpaceKind::GroupTimesSlice { n, slice: Partition::row(n) }, g.clone())),
            ref g if g.is_trivial() => Ok(SpaceDescriptor::point(Group::trivial())),
            _ => Err(no_dual()),
        },
        SpaceKind::GroupTimesSlice { n, slice } if m.is_one_sided() && g == Group::gl(*n) => {
            Ok(m.on_same_side(SpaceKind::OrbitClosure { n: *n, jordan_type: transpose(slice) }, g.clone()))
        }
        SpaceKind::OrbitClosure { n, jordan_type } if m.is_one_sided() && g == Group::gl(*n) => {
            Ok(m.on_same_side(SpaceKind::GroupTimesSlice { n: *n, slice: transpose(jordan_type) }, g.clone()))
        }
        SpaceKind::CotangentOfGroup { group: group @ Group::Gl(n) } => {
            if m.is_one_sided() {
                Ok(m.on_same_side(SpaceKind::OrbitClosure { n: *n, jordan_type: Partition::row(*n) }, group.clone()))
            } else if &m.left_group == group && &m.right_group == group {
                Ok(SpaceDescriptor::cotangent_of_group_bimodule(group.clone()))
            } else {
                Err(no_dual())
            }
        }
        SpaceKind::TorusCotangent { rank } if m.is_one_sided() && g == Group::torus(*rank) => {
            Ok(m.on_same_side(SpaceKind::Point, g.clone()))
        }
        SpaceKind::AffinePlane if m.is_one_sided() && g == Group::torus(1) => {
            let theory = TorusTheory::rank1(&[1]);
            Ok(m.on_same_side(SpaceKind::CotangentOfRep { rep: Rep::Torus { theory } }, g.clone()))
        }
        SpaceKind::CotangentOfRep { rep: Rep::Torus { theory } }
            if m.is_one_sided() && g == Group::torus(theory.rank()) =>
        {
            let d = sdual_torus(theory);
            Ok(m.on_same_side(d.kind, g.clone()))
        }
        SpaceKind::CotangentOfRep { rep: Rep::Hom { from, to } }
            if m.left_group == Group::gl(*from) && m.right_group == Group::gl(*to) =>
        {
            Ok(SpaceDescriptor::d5_block(*from, *to).with_conjectural(true))
        }
        SpaceKind::CotangentOfRep { rep: Rep::GroupAndVector { v } }
            if m.left_group == Group::gl(*v) && m.right_group == Group::gl(*v) =>
        {
            Ok(SpaceDescriptor::ns5_block(*v, *v).with_conjectural(true))
        }
        SpaceKind::GroupTimesSlice { n, slice } => {
            let (Group::Gl(vi), Group::Gl(vj)) = (&m.left_group, &m.right_group) else {
                return Err(no_dual());
            };
            let expected = SpaceDescriptor::d5_block(*vi, *vj);
            if expected.kind == (SpaceKind::GroupTimesSlice { n: *n, slice: slice.clone() }) {
                Ok(SpaceDescriptor::ns5_block(*vi, *vj).with_conjectural(true))
            } else {
                Err(no_dual())
            }
        }
        _ => Err(no_dual()),
    }
}

/// Both sides of the Kostant-reduction identity
/// `dim M_C(G, M) = dim M^∨ - dim G + rank G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KostantCheck {
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

/// Dimension of the Coulomb branch of `(g, m)` when it is known: `2 rank G`
/// for cotangent bundles of representations, zero for `T^*G`.
pub fn coulomb_dim(m: &SpaceDescriptor, g: &Group) -> Result<i64> {
    let unknown = || Error::UnknownCoulombDimension(m.to_string());
    match &m.kind {
        SpaceKind::Point => Ok(2 * g.rank() as i64),
        SpaceKind::CotangentOfRep { rep: Rep::Torus { theory } } => Ok(2 * effective_rank(theory) as i64),
        SpaceKind::CotangentOfRep { rep: Rep::Hom { .. } } => Ok(2 * g.rank() as i64),
        SpaceKind::CotangentOfGroup { group } if m.is_one_sided() && group == g => Ok(0),
        SpaceKind::TorusCotangent { rank } if m.is_one_sided() && Group::torus(*rank) == *g => Ok(0),
        _ => Err(unknown()),
    }
}

pub fn kostant_reduction_check(m: &SpaceDescriptor, g: &Group) -> Result<KostantCheck> {
    let dual = sdual_pair(m)?;
    let lhs = coulomb_dim(m, g)?;
    let rhs = dual.dim - g.dim() as i64 + g.rank() as i64;
    Ok(KostantCheck { lhs, rhs, pass: lhs == rhs })
}

/// `dim M + dim N_G - 2 dim G`; nonpositive is necessary for the moment map
/// to `g^* // G` to have finite fibers.
pub fn hyperspherical_deficit(m: &SpaceDescriptor, g: &Group) -> i64 {
    m.dim + (g.dim() as i64 - g.rank() as i64) - 2 * g.dim() as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::LinearForm;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn groups() {
        assert_eq!(Group::gl(0), Group::trivial());
        assert_eq!(Group::product(vec![Group::gl(2), Group::trivial()]), Group::gl(2));
        let g = Group::product(vec![Group::gl(2), Group::torus(3)]);
        assert_eq!((g.dim(), g.rank()), (7, 5));
        assert_eq!(g.to_string(), "GL(2) x T(3)");
        assert_eq!(Group::trivial().to_string(), "1");
        let back: Group = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        assert_eq!(back, g);
        assert_eq!(serde_json::from_str::<Group>(r#"{"gl":0}"#).unwrap(), Group::trivial());
    }

    #[test]
    fn block_dimensions() {
        assert_eq!(SpaceDescriptor::ns5_block(2, 3).dim, 12);
        assert_eq!(SpaceDescriptor::d5_block(2, 2).dim, 12);
        assert_eq!(SpaceDescriptor::d5_block(3, 1).dim, 14);
        assert_eq!(SpaceDescriptor::d5_block(1, 3).dim, 14);
        assert_eq!(SpaceDescriptor::d5_block(3, 1).to_string(), "GL(3) x Slice[2,1]  (dim 14)");
        assert_eq!(SpaceDescriptor::ns5_block(0, 4).kind, SpaceKind::Point);
    }

    #[test]
    fn dual_table_examples() {
        let d = sdual_pair(&SpaceDescriptor::point(Group::gl(2))).unwrap();
        assert_eq!(d.kind, SpaceKind::GroupTimesSlice { n: 2, slice: p(&[2]) });
        assert_eq!(d.dim, 6);
        let d = sdual_pair(&SpaceDescriptor::cotangent_of_group(Group::gl(3))).unwrap();
        assert_eq!(d.kind, SpaceKind::OrbitClosure { n: 3, jordan_type: p(&[3]) });
        assert_eq!(d.dim, 6);
        let m = SpaceDescriptor::group_times_slice(p(&[2, 1]), Group::gl(3), Group::trivial());
        let d = sdual_pair(&m).unwrap();
        assert_eq!(d.kind, SpaceKind::OrbitClosure { n: 3, jordan_type: p(&[2, 1]) });
        assert!(!d.conjectural);
    }

    #[test]
    fn block_duals_are_conjectural() {
        let d = sdual_pair(&SpaceDescriptor::ns5_block(3, 1)).unwrap();
        assert_eq!(d, SpaceDescriptor::d5_block(3, 1).with_conjectural(true));
        let back = sdual_pair(&d).unwrap();
        assert_eq!(back.kind, SpaceDescriptor::ns5_block(3, 1).kind);
        assert!(back.conjectural);
    }

    #[test]
    fn unknown_duals() {
        let m = SpaceDescriptor::new(SpaceKind::TypeASingularity { k: 2 }, Group::torus(1), Group::trivial());
        assert!(matches!(sdual_pair(&m), Err(Error::NoKnownDual(_))));
    }

    #[test]
    fn kostant_examples() {
        for n in 1..=4 {
            let c = kostant_reduction_check(&SpaceDescriptor::point(Group::gl(n)), &Group::gl(n)).unwrap();
            assert_eq!((c.lhs, c.rhs), (2 * n as i64, 2 * n as i64));
            let c = kostant_reduction_check(&SpaceDescriptor::cotangent_of_group(Group::gl(n)), &Group::gl(n)).unwrap();
            assert_eq!((c.lhs, c.rhs, c.pass), (0, 0, true));
        }
        let m = SpaceDescriptor::torus_theory(TorusTheory::rank1(&[1]));
        let c = kostant_reduction_check(&m, &Group::torus(1)).unwrap();
        assert_eq!((c.lhs, c.rhs), (2, 2));
    }

    #[test]
    fn deficits() {
        let m = SpaceDescriptor::torus_theory(TorusTheory::rank1(&[1]));
        assert_eq!(hyperspherical_deficit(&m, &Group::torus(1)), 0);
        let m = SpaceDescriptor::cotangent_of_group(Group::gl(3));
        assert_eq!(hyperspherical_deficit(&m, &Group::gl(3)), 6);
        assert_eq!(hyperspherical_deficit(&SpaceDescriptor::point(Group::torus(1)), &Group::torus(1)), -2);
    }

    #[test]
    fn composition_rules() {
        let m = SpaceDescriptor::d5_block(3, 1);
        let pt = SpaceDescriptor::point(Group::trivial());
        assert_eq!(compose(&m, &pt, &Group::gl(1), false).unwrap_err(), Error::GroupMismatch("GL(1)".into(), "1".into()));
        let a = SpaceDescriptor::cotangent_of_group(Group::gl(2));
        assert_eq!(compose(&a, &pt, &Group::trivial(), true).unwrap(), a);

        let t = SpaceDescriptor::cotangent_of_group_bimodule(Group::gl(2));
        let c = compose(&t, &t, &Group::gl(2), true).unwrap();
        assert_eq!(c.dim, 8);
        assert_eq!(c.kind, t.kind);

        // the full-flag chain at n = 3
        let mut acc = SpaceDescriptor::ns5_block(0, 1);
        for (a, b) in [(1, 2), (2, 3)] {
            acc = compose(&acc, &SpaceDescriptor::ns5_block(a, b), &Group::gl(a), false).unwrap();
        }
        assert_eq!(acc.kind, SpaceKind::OrbitClosure { n: 3, jordan_type: p(&[3]) });
        assert_eq!(acc.dim, 6);

        let r = compose(&SpaceDescriptor::ns5_block(2, 2), &SpaceDescriptor::ns5_block(2, 1), &Group::gl(2), false).unwrap();
        assert!(matches!(r.kind, SpaceKind::Reduction { .. }));
        assert!(r.possibly_singular);
        assert_eq!(r.dim, 8 + 4 - 8);
        let q = compose(&SpaceDescriptor::ns5_block(2, 2), &SpaceDescriptor::ns5_block(2, 1), &Group::gl(2), true).unwrap();
        assert!(matches!(q.kind, SpaceKind::CotangentOfQuotient { .. }));
    }

    #[test]
    fn descriptor_json() {
        let json = r#"{"kind":{"kind":"group_times_slice","n":3,"slice":[2,1]},"left_group":{"gl":3}}"#;
        let d: SpaceDescriptor = serde_json::from_str(json).unwrap();
        assert_eq!(d.dim, 14);
        let back: SpaceDescriptor = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        assert_eq!(back, d);
        let bad = r#"{"kind":{"kind":"point"},"dim":3}"#;
        assert!(serde_json::from_str::<SpaceDescriptor>(bad).is_err());
        let bad = r#"{"kind":{"kind":"orbit_closure","n":4,"jordan_type":[2,1]}}"#;
        assert!(serde_json::from_str::<SpaceDescriptor>(bad).is_err());
        let theory = TorusTheory::new(1, vec![LinearForm::new(vec![1])], vec![]).unwrap();
        let t = SpaceDescriptor::torus_theory(theory);
        let back: SpaceDescriptor = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        assert_eq!(back, t);
    }
}
