//! Coulomb branches of torus gauge theories.
//!
//! For a torus `T` of rank `r` acting on `N` with linear weights `a_j` the
//! equivariant homology of the variety of triples is free over
//! `H_T(pt) = Z[w_1..w_r]` on monomial classes `r'_λ`, one per cocharacter
//! `λ`, and the convolution product is
//!
//! ```text
//! r'_λ · r'_μ = Π_j a_j(w)^{d_j} · r'_{λ+μ},
//! d_j = (|<a_j,λ>| + |<a_j,μ>| - |<a_j,λ+μ>|) / 2.
//! ```
//!
//! Multiplicative directions (`C^×` factors of `N`) kill every class whose
//! cocharacter pairs nontrivially with their weights; [`reduce_multiplicative`]
//! passes to the surviving sublattice.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{eval_product, integer_kernel, IntegerMatrix, LinearForm, Polynomial};
use crate::spaces::{Group, SpaceDescriptor, SpaceKind};

/// Default `|λ|_∞` cutoff for structure-constant tables.
pub const DEFAULT_TABLE_CUTOFF: i64 = 5;

/// A cocharacter of the torus, i.e. a point of its affine Grassmannian and a
/// component label in `π_1(T)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cocharacter(Vec<i64>);

impl Cocharacter {
    pub fn new(v: Vec<i64>) -> Self {
        Cocharacter(v)
    }

    pub fn zero(rank: usize) -> Self {
        Cocharacter(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn sup_norm(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Self {
        Cocharacter(self.0.iter().map(|x| -x).collect())
    }
}

impl std::ops::Add for &Cocharacter {
    type Output = Cocharacter;
    fn add(self, rhs: &Cocharacter) -> Cocharacter {
        Cocharacter(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl From<Vec<i64>> for Cocharacter {
    fn from(v: Vec<i64>) -> Self {
        Cocharacter(v)
    }
}

impl fmt::Display for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Every cocharacter of the given rank with `|λ|_∞ <= bound`, in lexicographic order.
pub fn cocharacter_box(rank: usize, bound: i64) -> Vec<Cocharacter> {
    let mut out = vec![Vec::with_capacity(rank)];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (-bound..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Cocharacter).collect()
}

/// A torus gauge theory: the torus rank and the weights of the linear and
/// multiplicative directions of `N`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TheoryDoc")]
pub struct TorusTheory {
    rank: usize,
    linear_weights: Vec<LinearForm>,
    multiplicative_weights: Vec<LinearForm>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TheoryDoc {
    rank: usize,
    #[serde(default)]
    linear_weights: Vec<Vec<i64>>,
    #[serde(default)]
    multiplicative_weights: Vec<Vec<i64>>,
}

impl TryFrom<TheoryDoc> for TorusTheory {
    type Error = Error;
    fn try_from(doc: TheoryDoc) -> Result<Self> {
        TorusTheory::new(
            doc.rank,
            doc.linear_weights.into_iter().map(LinearForm::new).collect(),
            doc.multiplicative_weights.into_iter().map(LinearForm::new).collect(),
        )
    }
}

impl TorusTheory {
    pub fn new(
        rank: usize,
        linear_weights: Vec<LinearForm>,
        multiplicative_weights: Vec<LinearForm>,
    ) -> Result<Self> {
        for w in linear_weights.iter().chain(&multiplicative_weights) {
            if w.rank() != rank {
                return Err(Error::RankMismatch { expected: rank, found: w.rank() });
            }
        }
        Ok(TorusTheory { rank, linear_weights, multiplicative_weights })
    }

    /// Rank-one theory with the given integer weights and no multiplicative part.
    pub fn rank1(weights: &[i64]) -> Self {
        TorusTheory {
            rank: 1,
            linear_weights: weights.iter().map(|&a| LinearForm::new(vec![a])).collect(),
            multiplicative_weights: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn linear_weights(&self) -> &[LinearForm] {
        &self.linear_weights
    }

    pub fn multiplicative_weights(&self) -> &[LinearForm] {
        &self.multiplicative_weights
    }

    /// Twice the monopole degree of `r'_λ`.
    pub fn doubled_degree(&self, lambda: &Cocharacter) -> u64 {
        self.linear_weights
            .iter()
            .map(|a| a.pair(lambda.coords()).unsigned_abs())
            .sum()
    }

    /// Whether `r'_λ` survives the multiplicative directions.
    pub fn in_kernel(&self, lambda: &Cocharacter) -> bool {
        self.multiplicative_weights.iter().all(|b| b.pair(lambda.coords()) == 0)
    }

    fn check_rank(&self, lambda: &Cocharacter) -> Result<()> {
        if lambda.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: lambda.rank() });
        }
        Ok(())
    }

    /// Complex dimension of `T*N`: two per linear direction and two per `C^×` direction.
    pub fn matter_dim(&self) -> usize {
        2 * (self.linear_weights.len() + self.multiplicative_weights.len())
    }
}

impl fmt::Debug for TorusTheory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TorusTheory(rank {}, linear {:?}, multiplicative {:?})",
            self.rank, self.linear_weights, self.multiplicative_weights
        )
    }
}

impl fmt::Display for TorusTheory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |ws: &[LinearForm]| {
            let parts: Vec<String> = ws.iter().map(|w| format!("{:?}", w.coeffs())).collect();
            format!("[{}]", parts.join(",")).replace(' ', "")
        };
        write!(
            f,
            "rank {}, linear {}, multiplicative {}",
            self.rank,
            show(&self.linear_weights),
            show(&self.multiplicative_weights)
        )
    }
}

/// The exponents `d_j` of the structure constant of `r'_λ · r'_μ`, one per
/// linear weight.
pub fn structure_exponents(
    t: &TorusTheory,
    lambda: &Cocharacter,
    mu: &Cocharacter,
) -> Result<Vec<u64>> {
    t.check_rank(lambda)?;
    t.check_rank(mu)?;
    let sum = lambda + mu;
    Ok(t.linear_weights
        .iter()
        .map(|a| {
            let (x, y, z) = (a.pair(lambda.coords()), a.pair(mu.coords()), a.pair(sum.coords()));
            // x + y = z, so |x| + |y| - |z| is even and nonnegative
            (x.unsigned_abs() + y.unsigned_abs() - z.unsigned_abs()) / 2
        })
        .collect())
}

/// The polynomial `Π_j a_j(w)^{d_j}` multiplying `r'_{λ+μ}` in `r'_λ · r'_μ`.
pub fn structure_constant(
    t: &TorusTheory,
    lambda: &Cocharacter,
    mu: &Cocharacter,
) -> Result<Polynomial> {
    let d = structure_exponents(t, lambda, mu)?;
    let forms: Vec<(LinearForm, u32)> = t
        .linear_weights
        .iter()
        .cloned()
        .zip(d.into_iter().map(|e| e as u32))
        .collect();
    eval_product(t.rank, &forms)
}

/// An element of the Coulomb-branch ring: a finitely supported map from
/// cocharacters to polynomial coefficients, `Σ_λ p_λ(w) r'_λ`.
#[derive(Clone, PartialEq, Eq)]
pub struct CoulombElement {
    rank: usize,
    support: BTreeMap<Cocharacter, Polynomial>,
}

impl CoulombElement {
    pub fn zero(rank: usize) -> Self {
        CoulombElement { rank, support: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::basis(Cocharacter::zero(rank))
    }

    /// The monomial class `r'_λ`.
    pub fn basis(lambda: Cocharacter) -> Self {
        let rank = lambda.rank();
        Self::term(lambda, Polynomial::one(rank))
    }

    /// `w_i · r'_0`.
    pub fn w(rank: usize, i: usize) -> Self {
        Self::term(Cocharacter::zero(rank), Polynomial::var(rank, i))
    }

    pub fn term(lambda: Cocharacter, coeff: Polynomial) -> Self {
        assert_eq!(lambda.rank(), coeff.nvars(), "coefficient ring does not match cocharacter rank");
        let rank = lambda.rank();
        let mut support = BTreeMap::new();
        if !coeff.is_zero() {
            support.insert(lambda, coeff);
        }
        CoulombElement { rank, support }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (&Cocharacter, &Polynomial)> {
        self.support.iter()
    }

    pub fn coefficient(&self, lambda: &Cocharacter) -> Polynomial {
        self.support.get(lambda).cloned().unwrap_or_else(|| Polynomial::zero(self.rank))
    }

    pub fn add(&self, other: &CoulombElement) -> CoulombElement {
        assert_eq!(self.rank, other.rank, "adding elements over different ranks");
        let mut out = self.clone();
        for (lambda, p) in &other.support {
            out.add_term(lambda.clone(), p);
        }
        out
    }

    fn add_term(&mut self, lambda: Cocharacter, p: &Polynomial) {
        let entry = self.support.entry(lambda).or_insert_with(|| Polynomial::zero(p.nvars()));
        *entry = &*entry + p;
        self.support.retain(|_, q| !q.is_zero());
    }

    /// Twice the degree of the element when it is homogeneous. The zero
    /// element reports `Some(0)`.
    pub fn homogeneous_degree(&self, t: &TorusTheory) -> Option<u64> {
        let mut degree = None;
        for (lambda, p) in &self.support {
            for (exps, _) in p.terms() {
                let d = t.doubled_degree(lambda) + 2 * exps.iter().map(|&e| e as u64).sum::<u64>();
                match degree {
                    None => degree = Some(d),
                    Some(prev) if prev != d => return None,
                    _ => {}
                }
            }
        }
        Some(degree.unwrap_or(0))
    }
}

impl fmt::Display for CoulombElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .support
            .iter()
            .map(|(lambda, p)| format_term(p, lambda))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for CoulombElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoulombElement({self})")
    }
}

fn format_term(p: &Polynomial, lambda: &Cocharacter) -> String {
    if p.is_one() {
        format!("r'{lambda}")
    } else if p.num_terms() == 1 {
        format!("{p} r'{lambda}")
    } else {
        format!("({p}) r'{lambda}")
    }
}

/// Convolution product, the bilinear extension of
/// `r'_λ · r'_μ = Π_j a_j(w)^{d_j} r'_{λ+μ}`.
pub fn multiply(t: &TorusTheory, x: &CoulombElement, y: &CoulombElement) -> Result<CoulombElement> {
    for e in [x, y] {
        if e.rank != t.rank {
            return Err(Error::RankMismatch { expected: t.rank, found: e.rank });
        }
        if let Some((lambda, _)) = e.support.iter().find(|(l, _)| !t.in_kernel(l)) {
            return Err(Error::OutsideKernel(lambda.coords().to_vec()));
        }
    }
    let mut out = CoulombElement::zero(t.rank);
    for (lambda, p) in &x.support {
        for (mu, q) in &y.support {
            let c = structure_constant(t, lambda, mu)?;
            let coeff = &(p * q) * &c;
            out.add_term(lambda + mu, &coeff);
        }
    }
    Ok(out)
}

/// Result of passing to the sublattice cut out by the multiplicative weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    theory: TorusTheory,
    /// Basis of the surviving sublattice, rows in Hermite normal form.
    basis: Vec<Vec<i64>>,
    original_rank: usize,
}

impl Reduction {
    pub fn theory(&self) -> &TorusTheory {
        &self.theory
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// The embedding `Z^{r'} -> Z^r` as an `r x r'` matrix.
    pub fn embedding(&self) -> IntegerMatrix {
        IntegerMatrix::from_columns(self.original_rank, &self.basis).expect("basis vectors have the original rank")
    }

    pub fn is_identity(&self) -> bool {
        self.original_rank == self.basis.len()
            && self
                .basis
                .iter()
                .enumerate()
                .all(|(i, v)| v.iter().enumerate().all(|(j, &x)| x == (i == j) as i64))
    }

    pub fn embed(&self, lambda: &Cocharacter) -> Cocharacter {
        let mut v = vec![0; self.original_rank];
        for (c, b) in lambda.coords().iter().zip(&self.basis) {
            for (x, y) in v.iter_mut().zip(b) {
                *x += c * y;
            }
        }
        Cocharacter(v)
    }

    /// Coordinates of `λ` in the sublattice basis, `None` when `λ` lies
    /// outside it (its class is zero after reduction).
    pub fn restrict(&self, lambda: &Cocharacter) -> Option<Cocharacter> {
        let mut residual = lambda.coords().to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for b in &self.basis {
            let p = b.iter().position(|&x| x != 0)?;
            if residual[p] % b[p] != 0 {
                return None;
            }
            let c = residual[p] / b[p];
            for (x, y) in residual.iter_mut().zip(b) {
                *x -= c * y;
            }
            coords.push(c);
        }
        residual.iter().all(|&x| x == 0).then_some(Cocharacter(coords))
    }

    /// Restriction `H_T(pt) -> H_{T'}(pt)`, `w_i -> Σ_k B_{ik} w'_k`.
    pub fn restrict_polynomial(&self, p: &Polynomial) -> Result<Polynomial> {
        let r = self.basis.len();
        let images: Vec<Polynomial> = (0..self.original_rank)
            .map(|i| {
                let form: Vec<i64> = self.basis.iter().map(|b| b[i]).collect();
                LinearForm::new(form).to_polynomial()
            })
            .collect();
        p.substitute(&images, r)
    }

    /// Image of an element of the original ring; classes outside the
    /// sublattice map to zero.
    pub fn restrict_element(&self, x: &CoulombElement) -> Result<CoulombElement> {
        let mut out = CoulombElement::zero(self.basis.len());
        for (lambda, p) in &x.support {
            if let Some(l) = self.restrict(lambda) {
                out.add_term(l, &self.restrict_polynomial(p)?);
            }
        }
        Ok(out)
    }
}

/// Passes to the sublattice `{λ : <b_k, λ> = 0 for all k}` of cocharacters
/// surviving the multiplicative directions and restricts the linear weights.
pub fn reduce_multiplicative(t: &TorusTheory) -> Reduction {
    let rows: Vec<Vec<i64>> = t.multiplicative_weights.iter().map(|b| b.coeffs().to_vec()).collect();
    let m = IntegerMatrix::from_rows(t.rank, &rows).expect("weights have the theory rank");
    let basis = integer_kernel(&m);
    let embedding = IntegerMatrix::from_columns(t.rank, &basis).expect("kernel vectors have the theory rank");
    let linear_weights = t
        .linear_weights
        .iter()
        .map(|a| a.restrict(&embedding).expect("weight rank checked"))
        .collect();
    Reduction {
        theory: TorusTheory { rank: basis.len(), linear_weights, multiplicative_weights: Vec::new() },
        basis,
        original_rank: t.rank,
    }
}

/// Rank of the torus after reduction; the Coulomb branch has twice this dimension.
pub fn effective_rank(t: &TorusTheory) -> usize {
    if t.multiplicative_weights.is_empty() {
        t.rank
    } else {
        reduce_multiplicative(t).theory.rank
    }
}

/// Isomorphism class of a presented Coulomb branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VarietyTag {
    /// `C × C^×`
    TorusCotangent,
    /// `C^2`
    AffinePlane,
    /// Simple singularity `A_k`, `xy = w^{k+1}`.
    TypeASingularity(u32),
    Point,
    Unclassified,
}

impl fmt::Display for VarietyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarietyTag::TorusCotangent => f.write_str("T^*(C^x)"),
            VarietyTag::AffinePlane => f.write_str("C^2"),
            VarietyTag::TypeASingularity(k) => write!(f, "A_{k} singularity"),
            VarietyTag::Point => f.write_str("point"),
            VarietyTag::Unclassified => f.write_str("unclassified"),
        }
    }
}

/// Classifies `xy = rhs(w)` with `rhs` a unit multiple of `w^e`. Unit
/// scalars are irrelevant to the isomorphism class.
pub fn classify_rank1(rhs: &Polynomial) -> VarietyTag {
    match rhs.as_scaled_monomial() {
        Some((_, [0])) => VarietyTag::TorusCotangent,
        Some((_, [1])) => VarietyTag::AffinePlane,
        Some((_, [e])) => VarietyTag::TypeASingularity(e - 1),
        _ => VarietyTag::Unclassified,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub name: String,
    /// Twice the degree, so half-integral monopole degrees stay integral.
    pub doubled_degree: u64,
}

/// Polynomial identity `lhs = rhs` in the generators of a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Polynomial,
    pub rhs: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    pub variables: Vec<Generator>,
    pub relations: Vec<Relation>,
    pub variety_tag: VarietyTag,
}

impl RingPresentation {
    fn point() -> Self {
        RingPresentation { variables: Vec::new(), relations: Vec::new(), variety_tag: VarietyTag::Point }
    }

    fn names(&self) -> Vec<&str> {
        self.variables.iter().map(|g| g.name.as_str()).collect()
    }

    pub fn relation_strings(&self) -> Vec<String> {
        let names = self.names();
        self.relations
            .iter()
            .map(|r| format!("{} = {}", r.lhs.display_with(&names), r.rhs.display_with(&names)))
            .collect()
    }

    /// One-line summary, e.g. `x*y = w^3  [A_2 singularity]`, or `point`.
    pub fn relation_line(&self) -> String {
        if self.variety_tag == VarietyTag::Point && self.variables.is_empty() {
            return "point".to_string();
        }
        format!("{}  [{}]", self.relation_strings().join(", "), self.variety_tag)
    }

    /// Every relation is homogeneous for the generator degrees.
    pub fn is_homogeneous(&self) -> bool {
        let weight = |p: &Polynomial| -> Option<u64> {
            let mut ds = p.terms().map(|(e, _)| {
                e.iter().zip(&self.variables).map(|(&k, g)| k as u64 * g.doubled_degree).sum::<u64>()
            });
            let first = ds.next();
            match first {
                Some(d) if ds.all(|x| x == d) => Some(d),
                _ => None,
            }
        };
        self.relations.iter().all(|r| match (weight(&r.lhs), weight(&r.rhs)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        })
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.variables.is_empty() {
            return write!(f, "C  [{}]", self.variety_tag);
        }
        write!(
            f,
            "C[{}] / ({})  [{}]",
            self.names().join(", "),
            self.relation_strings().join(", "),
            self.variety_tag
        )
    }
}

/// Presentation `C[w, x, y] / (x*y = Π_j a_j(w)^{|a_j|})` of a theory whose
/// effective rank is one, with `x = r'_1` and `y = r'_{-1}`. Effective rank
/// zero gives the point.
pub fn present_rank1(t: &TorusTheory) -> Result<RingPresentation> {
    let reduced = reduce_multiplicative(t);
    let t = reduced.theory();
    match t.rank {
        0 => Ok(RingPresentation::point()),
        1 => {
            let forms: Vec<(LinearForm, u32)> = t
                .linear_weights
                .iter()
                .map(|a| (a.clone(), a.coeffs()[0].unsigned_abs() as u32))
                .collect();
            let rhs_w = eval_product(1, &forms)?;
            let tag = classify_rank1(&rhs_w);
            let w = Polynomial::var(3, 0);
            let rhs = rhs_w.substitute(&[w], 3)?;
            let lhs = &Polynomial::var(3, 1) * &Polynomial::var(3, 2);
            let monopole = t.doubled_degree(&Cocharacter::new(vec![1]));
            Ok(RingPresentation {
                variables: vec![
                    Generator { name: "w".into(), doubled_degree: 2 },
                    Generator { name: "x".into(), doubled_degree: monopole },
                    Generator { name: "y".into(), doubled_degree: monopole },
                ],
                relations: vec![Relation { lhs, rhs }],
                variety_tag: tag,
            })
        }
        r => Err(Error::RankTooHigh(r)),
    }
}

/// One row of a structure-constant table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureEntry {
    pub lambda: Cocharacter,
    pub mu: Cocharacter,
    pub exponents: Vec<u64>,
    pub coefficient: Polynomial,
}

impl fmt::Display for StructureEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sum = &self.lambda + &self.mu;
        write!(f, "r'{} * r'{} = {}", self.lambda, self.mu, format_term(&self.coefficient, &sum))
    }
}

/// Structure constants `r'_λ r'_μ` of the reduced theory for all pairs
/// `λ <= μ` (lexicographically) with `|λ|_∞, |μ|_∞ <= cutoff`, in reduced
/// lattice coordinates.
pub fn structure_table(t: &TorusTheory, cutoff: i64) -> Result<Vec<StructureEntry>> {
    let reduced = reduce_multiplicative(t);
    let t = reduced.theory();
    let cochars = cocharacter_box(t.rank, cutoff);
    let rows: Result<Vec<Vec<StructureEntry>>> = cochars
        .par_iter()
        .enumerate()
        .map(|(i, lambda)| {
            cochars[i..]
                .iter()
                .map(|mu| {
                    Ok(StructureEntry {
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                        exponents: structure_exponents(t, lambda, mu)?,
                        coefficient: structure_constant(t, lambda, mu)?,
                    })
                })
                .collect()
        })
        .collect();
    Ok(rows?.into_iter().flatten().collect())
}

/// Coulomb branch of a torus theory viewed as a Hamiltonian space for the
/// dual torus; the dual torus acts through the grading by `π_1(T)`.
pub fn sdual_torus(t: &TorusTheory) -> SpaceDescriptor {
    let reduced = reduce_multiplicative(t);
    let rt = reduced.theory();
    let kind = if rt.rank == 0 {
        SpaceKind::Point
    } else if rt.linear_weights.iter().all(LinearForm::is_zero) {
        SpaceKind::TorusCotangent { rank: rt.rank }
    } else if rt.rank == 1 {
        let p = present_rank1(rt).expect("effective rank one");
        match p.variety_tag {
            VarietyTag::AffinePlane => SpaceKind::AffinePlane,
            VarietyTag::TypeASingularity(k) => SpaceKind::TypeASingularity { k },
            VarietyTag::TorusCotangent => SpaceKind::TorusCotangent { rank: 1 },
            VarietyTag::Point => SpaceKind::Point,
            VarietyTag::Unclassified => SpaceKind::CoulombBranch { theory: t.clone() },
        }
    } else {
        SpaceKind::CoulombBranch { theory: t.clone() }
    };
    SpaceDescriptor::new(kind, Group::torus(t.rank), Group::trivial())
}
