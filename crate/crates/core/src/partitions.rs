//! Partitions and nilpotent orbits in `gl_n`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::IntegerMatrix;

/// A partition, stored with parts weakly decreasing and no zeros.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts and drops zero parts.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::new(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        transpose(self)
    }

    /// Partial sums `λ_1, λ_1 + λ_2, ...`.
    fn partial_sums(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().scan(0, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
    }

    /// Dominance order: `self >= other` when both have the same size and
    /// every partial sum of `self` is at least the corresponding one of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let a: Vec<usize> = self.partial_sums().collect();
        let b: Vec<usize> = other.partial_sums().collect();
        let n = self.n();
        (0..a.len().max(b.len())).all(|i| a.get(i).copied().unwrap_or(n) >= b.get(i).copied().unwrap_or(n))
    }

    /// Dominance as a partial order; `None` for incomparable partitions or different sizes.
    pub fn dominance_cmp(&self, other: &Partition) -> Option<Ordering> {
        match (self.dominates(other), other.dominates(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            (false, false) => None,
        }
    }

    /// All partitions of `n`, lexicographically decreasing, starting at `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        fn rec(rest: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(stack.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                stack.push(p);
                rec(rest - p, p, stack, out);
                stack.pop();
            }
        }
        rec(n, n, &mut stack, &mut out);
        out
    }
}

impl From<Vec<usize>> for Partition {
    fn from(v: Vec<usize>) -> Self {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[3,1,1]`, `3,1,1` or `[]`; parts must already be weakly decreasing.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner.strip_prefix('[').unwrap_or(inner);
        let inner = inner.strip_suffix(']').unwrap_or(inner).trim();
        if inner.is_empty() {
            return Ok(Partition(Vec::new()));
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {:?} in {s:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {s:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("parts of {s:?} are not weakly decreasing")));
        }
        Ok(Partition(parts))
    }
}

/// `λ^t_k = #{i : λ_i >= k}`.
pub fn transpose(lambda: &Partition) -> Partition {
    let parts = (1..=lambda.largest())
        .map(|k| lambda.0.iter().take_while(|&&p| p >= k).count())
        .collect();
    Partition(parts)
}

/// Dimension of the centralizer of a nilpotent of Jordan type `λ`, `Σ (λ^t_i)^2`.
pub fn centralizer_dim(lambda: &Partition) -> usize {
    transpose(lambda).0.iter().map(|c| c * c).sum()
}

/// Dimension of the orbit of Jordan type `λ` in `gl_n`.
pub fn orbit_dim(lambda: &Partition) -> usize {
    let n = lambda.n();
    n * n - centralizer_dim(lambda)
}

/// Rank of `x^k` for `x` nilpotent of Jordan type `λ`.
pub fn rank_profile(lambda: &Partition, k: usize) -> usize {
    lambda.0.iter().map(|&p| p.saturating_sub(k)).sum()
}

/// The hook `(a, 1^b)`.
pub fn hook(a: usize, b: usize) -> Result<Partition> {
    if a == 0 {
        return Err(Error::InvalidPartition("hook arm must be positive".into()));
    }
    let mut parts = vec![a];
    parts.extend(std::iter::repeat_n(1, b));
    Ok(Partition(parts))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitKind {
    OrbitClosure,
    Slice,
    GroupTimesSlice,
    NilpotentCone,
}

/// A nilpotent-orbit datum in `gl_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitDescriptor {
    pub n: usize,
    pub jordan_type: Partition,
    pub kind: OrbitKind,
}

impl OrbitDescriptor {
    /// Closure of the orbit of type `λ`; the regular orbit gives the nilpotent cone.
    pub fn orbit_closure(lambda: Partition) -> Self {
        let n = lambda.n();
        let kind = if lambda.len() == 1 { OrbitKind::NilpotentCone } else { OrbitKind::OrbitClosure };
        OrbitDescriptor { n, jordan_type: lambda, kind }
    }

    pub fn slice(lambda: Partition) -> Self {
        OrbitDescriptor { n: lambda.n(), jordan_type: lambda, kind: OrbitKind::Slice }
    }

    pub fn group_times_slice(lambda: Partition) -> Self {
        OrbitDescriptor { n: lambda.n(), jordan_type: lambda, kind: OrbitKind::GroupTimesSlice }
    }

    pub fn dim(&self) -> usize {
        match self.kind {
            OrbitKind::OrbitClosure | OrbitKind::NilpotentCone => orbit_dim(&self.jordan_type),
            OrbitKind::Slice => centralizer_dim(&self.jordan_type),
            OrbitKind::GroupTimesSlice => self.n * self.n + centralizer_dim(&self.jordan_type),
        }
    }
}

/// Jordan type of the generic composite `C^{v_m} -> C^{v_{m-1}} -> ... -> C^{v_0} = 0 -> ...`
/// in a cotangent chain: the dominance-maximal `μ ⊢ v_m` with
/// `rank_profile(μ, k) <= v_{m-k}` for `1 <= k <= m`.
pub fn chain_to_orbit(dims: &[usize]) -> Result<OrbitDescriptor> {
    let (&first, _) = dims
        .split_first()
        .ok_or_else(|| Error::InconsistentChain("empty dimension vector".into()))?;
    if first != 0 {
        return Err(Error::InconsistentChain(format!("chain must start at 0, got {first}")));
    }
    let m = dims.len() - 1;
    let target = dims[m];

    // differences counted from the top; when they decrease the answer is their transpose
    let diffs: Vec<i64> = (0..m).map(|k| dims[m - k] as i64 - dims[m - k - 1] as i64).collect();
    if diffs.iter().all(|&d| d >= 0) && diffs.windows(2).all(|w| w[0] >= w[1]) {
        let t = Partition::new(diffs.iter().map(|&d| d as usize).collect());
        return Ok(OrbitDescriptor::orbit_closure(transpose(&t)));
    }

    // lexicographic order refines dominance, so the first feasible partition is the maximum
    let feasible = |mu: &Partition| (1..=m).all(|k| rank_profile(mu, k) <= dims[m - k]);
    let mut found = None;
    for_each_partition_desc(target, |mu| {
        if feasible(mu) {
            found = Some(mu.clone());
            false
        } else {
            true
        }
    });
    // (1^n) has rank zero everywhere, so something is always feasible
    let mu = found.expect("the zero orbit is always feasible");
    Ok(OrbitDescriptor::orbit_closure(mu))
}

/// Visits partitions of `n` in lexicographically decreasing order until the
/// visitor returns `false`.
fn for_each_partition_desc(n: usize, mut visit: impl FnMut(&Partition) -> bool) {
    fn rec(rest: usize, max: usize, stack: &mut Partition, visit: &mut dyn FnMut(&Partition) -> bool) -> bool {
        if rest == 0 {
            return visit(stack);
        }
        for p in (1..=rest.min(max)).rev() {
            stack.0.push(p);
            let go_on = rec(rest - p, p, stack, visit);
            stack.0.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    rec(n, n, &mut Partition(Vec::new()), &mut visit);
}

/// Block-diagonal nilpotent Jordan matrix of type `λ`, ones on the superdiagonal.
pub fn jordan_matrix(lambda: &Partition) -> IntegerMatrix {
    let n = lambda.n();
    let mut m = IntegerMatrix::zeros(n, n);
    let mut start = 0;
    for &p in lambda.parts() {
        for i in start..start + p - 1 {
            m.set(i, i + 1, 1);
        }
        start += p;
    }
    m
}

/// Exact ranks of `J_λ^k` for `k = 0, 1, ..., λ_1`, computed from the matrix.
pub fn numeric_jordan_oracle(lambda: &Partition) -> Vec<usize> {
    let j = jordan_matrix(lambda);
    let mut power = IntegerMatrix::identity(lambda.n());
    let mut ranks = Vec::with_capacity(lambda.largest() + 1);
    for k in 0..=lambda.largest() {
        if k > 0 {
            power = power.mul(&j).expect("square matrices");
        }
        ranks.push(power.rank());
    }
    ranks
}

/// Dimension of `{x : [x, J_λ] = 0}`, from the rank of the `n^2 x n^2`
/// commutator system.
pub fn numeric_centralizer_dim(lambda: &Partition) -> usize {
    let j = jordan_matrix(lambda);
    let n = lambda.n();
    let nn = n * n;
    let mut system = IntegerMatrix::zeros(nn, nn);
    // (xJ - Jx)_{ab} = Σ_c x_{ac} J_{cb} - J_{ac} x_{cb}
    for a in 0..n {
        for b in 0..n {
            let row = a * n + b;
            for c in 0..n {
                let jcb = j.get(c, b);
                if jcb != 0 {
                    let col = a * n + c;
                    system.set(row, col, system.get(row, col) + jcb);
                }
                let jac = j.get(a, c);
                if jac != 0 {
                    let col = c * n + b;
                    system.set(row, col, system.get(row, col) - jac);
                }
            }
        }
    }
    nn - system.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn transposes() {
        assert_eq!(transpose(&p(&[4])), p(&[1, 1, 1, 1]));
        assert_eq!(transpose(&p(&[3, 1])), p(&[2, 1, 1]));
        assert_eq!(transpose(&p(&[4, 2, 1])), p(&[3, 2, 1, 1]));
        assert_eq!(transpose(&p(&[])), p(&[]));
    }

    #[test]
    fn dimensions() {
        assert_eq!(centralizer_dim(&p(&[1, 1, 1])), 9);
        assert_eq!(centralizer_dim(&p(&[3])), 3);
        assert_eq!(centralizer_dim(&p(&[2, 1])), 5);
        assert_eq!(orbit_dim(&p(&[3])), 6);
        assert_eq!(orbit_dim(&p(&[1, 1, 1, 1])), 0);
        assert_eq!(orbit_dim(&p(&[2, 2])), 8);
    }

    #[test]
    fn centralizer_matches_commutator_system() {
        for lambda in [p(&[3]), p(&[2, 1]), p(&[1, 1, 1]), p(&[3, 1]), p(&[2, 2])] {
            assert_eq!(numeric_centralizer_dim(&lambda), centralizer_dim(&lambda), "{lambda}");
        }
    }

    #[test]
    fn rank_profiles() {
        assert_eq!(rank_profile(&p(&[3]), 1), 2);
        assert_eq!(rank_profile(&p(&[2, 1]), 1), 1);
        assert_eq!(rank_profile(&p(&[4, 2, 1]), 2), 2);
    }

    #[test]
    fn jordan_oracle_examples() {
        assert_eq!(numeric_jordan_oracle(&p(&[2])), vec![2, 1, 0]);
        assert_eq!(numeric_jordan_oracle(&p(&[3, 1])), vec![4, 2, 1, 0]);
        assert_eq!(numeric_jordan_oracle(&p(&[2, 2])), vec![4, 2, 0]);
    }

    #[test]
    fn hooks() {
        assert_eq!(hook(3, 0).unwrap(), p(&[3]));
        assert_eq!(hook(2, 2).unwrap(), p(&[2, 1, 1]));
        assert_eq!(hook(1, 3).unwrap(), p(&[1, 1, 1, 1]));
        assert!(hook(0, 2).is_err());
    }

    #[test]
    fn chains() {
        assert_eq!(chain_to_orbit(&[0, 1, 2, 3]).unwrap().jordan_type, p(&[3]));
        assert_eq!(chain_to_orbit(&[0, 1, 2, 3]).unwrap().kind, OrbitKind::NilpotentCone);
        assert_eq!(chain_to_orbit(&[0, 3]).unwrap().jordan_type, p(&[1, 1, 1]));
        assert_eq!(chain_to_orbit(&[0, 1, 3]).unwrap().jordan_type, p(&[2, 1]));
        // non-decreasing differences go through the enumeration
        assert_eq!(chain_to_orbit(&[0, 2, 3]).unwrap().jordan_type, p(&[2, 1]));
        assert_eq!(chain_to_orbit(&[0, 0, 3]).unwrap().jordan_type, p(&[1, 1, 1]));
        assert_eq!(chain_to_orbit(&[0]).unwrap().jordan_type, p(&[]));
        assert!(chain_to_orbit(&[]).is_err());
        assert!(chain_to_orbit(&[1, 2]).is_err());
    }

    #[test]
    fn parse_and_render() {
        let lambda: Partition = "[3,1,1]".parse().unwrap();
        assert_eq!(lambda, p(&[3, 1, 1]));
        assert_eq!(lambda.to_string(), "[3,1,1]");
        assert_eq!("2, 2".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert_eq!("[]".parse::<Partition>().unwrap(), p(&[]));
        assert!("[1,3]".parse::<Partition>().is_err());
        assert!("[2,0]".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
    }

    #[test]
    fn dominance() {
        assert!(p(&[3]).dominates(&p(&[2, 1])));
        assert!(!p(&[2, 1]).dominates(&p(&[3])));
        assert_eq!(p(&[3, 3]).dominance_cmp(&p(&[4, 1, 1])), None);
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(0), vec![p(&[])]);
    }
}
