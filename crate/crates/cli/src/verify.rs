//! The named checks behind `sdualkit verify`.
//!
//! Every check is a closure over the seed; checks are independent and run
//! in parallel, and the report lists them in declaration order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use sdualkit_core::brane::{
    composed_space, hw_move, linking_numbers, quiver_to_diagram, quiver_to_dual_diagram, sdual, Brane,
    BraneDiagram, QuiverData,
};
use sdualkit_core::coulomb::{
    cocharacter_box, multiply, present_rank1, structure_constant, structure_exponents, Cocharacter,
    CoulombElement, TorusTheory, VarietyTag,
};
use sdualkit_core::exactalg::{LinearForm, Polynomial};
use sdualkit_core::partitions::{
    chain_to_orbit, numeric_jordan_oracle, orbit_dim, rank_profile, transpose, OrbitKind, Partition,
};
use sdualkit_core::spaces::{hyperspherical_deficit, kostant_reduction_check, sdual_pair, Group, SpaceDescriptor};

use crate::commands::{run_coulomb, run_dual, CoulombOptions};

type CheckFn = Box<dyn Fn(u64) -> Result<String, String> + Send + Sync>;

pub struct Check {
    pub name: String,
    run: CheckFn,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out += &format!("{status} {}  {}\n", c.name, c.detail);
        }
        out += &format!(
            "{} checks, {} passed, {} failed (seed {})\n",
            self.checks.len(),
            self.checks.len() - self.failures(),
            self.failures(),
            self.seed
        );
        out
    }
}

fn check(name: impl Into<String>, run: impl Fn(u64) -> Result<String, String> + Send + Sync + 'static) -> Check {
    Check { name: name.into(), run: Box::new(run) }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

macro_rules! golden {
    ($dir:literal: $($name:literal),* $(,)?) => {
        &[$((
            $name,
            include_str!(concat!("../tests/golden/", $dir, "/", $name, ".json")),
            include_str!(concat!("../tests/golden/", $dir, "/", $name, ".out")),
        )),*]
    };
}

pub const COULOMB_GOLDEN: &[(&str, &str, &str)] = golden!("coulomb":
    "pure-gauge", "one-flavour",
    "flavours-2", "flavours-3", "flavours-4", "flavours-5", "flavours-6",
    "weight-2", "weight-3", "weight-4",
    "multiplicative",
);

pub const HYPERSPHERICAL_GOLDEN: &[(&str, &str, &str)] = golden!("hyperspherical":
    "cotangent-line", "cotangent-gl3", "point-torus",
);

/// All checks in report order.
pub fn all_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for &(name, input, expected) in COULOMB_GOLDEN {
        checks.push(check(format!("coulomb-golden-{name}"), move |_| golden_coulomb(input, expected)));
    }
    checks.push(check("abelian-product-rank1", |_| {
        let corpus = rank1_theories(4, 3);
        product_laws_over(&corpus, 0)
    }));
    checks.push(check("abelian-product-random", |seed| {
        let corpus = random_theories(seed, 200);
        product_laws_over(&corpus, seed)
    }));
    checks.push(check("abelian-grading", |seed| {
        let mut corpus = rank1_theories(4, 3);
        corpus.extend(random_theories(seed, 200));
        grading_over(&corpus)
    }));
    for n in 1..=8 {
        checks.push(check(format!("nilcone-chain-n{n}"), move |_| nilcone_chain(n)));
    }
    checks.push(check("jordan-oracle", |_| jordan_oracle(10)));
    checks.push(check("slice-orbit-transpose", |_| slice_orbit_transpose(7)));
    checks.push(check("transpose-dominance", |_| transpose_dominance(8)));
    checks.push(check("kostant-reduction", |_| kostant_reduction()));
    checks.push(check("brane-hw", brane_hw));
    checks.push(check("sdual-concat", sdual_concat));
    checks.push(check("quiver-dual-pattern", |_| quiver_dual_pattern(4, 4)));
    checks.push(check("u1-flavours-cross", |_| u1_flavours_cross(6)));
    for &(name, input, expected) in HYPERSPHERICAL_GOLDEN {
        checks.push(check(format!("hyperspherical-golden-{name}"), move |_| golden_dual(input, expected)));
    }
    checks.push(check("hyperspherical-gl", |_| hyperspherical_gl(6)));
    checks
}

pub fn check_names() -> Vec<String> {
    all_checks().into_iter().map(|c| c.name).collect()
}

/// Runs every check whose name contains `filter`.
pub fn run_verify(filter: Option<&str>, seed: u64) -> Report {
    let selected: Vec<Check> = all_checks()
        .into_iter()
        .filter(|c| filter.is_none_or(|f| c.name.contains(f)))
        .collect();
    let checks = selected
        .par_iter()
        .map(|c| {
            let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| (c.run)(seed)))
                .unwrap_or_else(|_| Err("panicked".to_string()));
            match result {
                Ok(detail) => CheckOutcome { name: c.name.clone(), passed: true, detail },
                Err(detail) => CheckOutcome { name: c.name.clone(), passed: false, detail },
            }
        })
        .collect();
    Report { seed, checks }
}

fn golden_coulomb(input: &str, expected: &str) -> Result<String, String> {
    let opts = CoulombOptions { table: false, cutoff: 0, json: false };
    let got = run_coulomb(input, opts).map_err(|e| e.to_string())?;
    ensure(got == expected, || format!("expected {expected:?}, got {got:?}"))?;
    Ok(got.trim_end().to_string())
}

fn golden_dual(input: &str, expected: &str) -> Result<String, String> {
    let got = run_dual(input, false).map_err(|e| e.to_string())?;
    ensure(got == expected, || format!("expected {expected:?}, got {got:?}"))?;
    Ok(got.lines().last().unwrap_or_default().to_string())
}

/// Every rank-1 theory whose linear weights form a multiset of at most
/// `max_weights` entries from `[-bound, bound]`.
pub fn rank1_theories(max_weights: usize, bound: i64) -> Vec<TorusTheory> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(start: i64, bound: i64, left: usize, current: &mut Vec<i64>, out: &mut Vec<TorusTheory>) {
        out.push(TorusTheory::rank1(current));
        if left == 0 {
            return;
        }
        for a in start..=bound {
            current.push(a);
            go(a, bound, left - 1, current, out);
            current.pop();
        }
    }
    go(-bound, bound, max_weights, &mut current, &mut out);
    out
}

/// Seeded theories of rank 2 or 3 with up to four weights in `[-3, 3]`;
/// roughly one weight in five is multiplicative.
pub fn random_theories(seed: u64, count: usize) -> Vec<TorusTheory> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let rank = rng.gen_range(2..=3);
            let k = rng.gen_range(0..=4);
            let (mut lin, mut mult) = (Vec::new(), Vec::new());
            for _ in 0..k {
                let form = LinearForm::new((0..rank).map(|_| rng.gen_range(-3..=3)).collect());
                if rng.gen_ratio(1, 5) {
                    mult.push(form);
                } else {
                    lin.push(form);
                }
            }
            TorusTheory::new(rank, lin, mult).expect("weights have the theory's rank")
        })
        .collect()
}

/// Dense index of a cocharacter in the box `|λ|_∞ ≤ bound`.
fn box_index(c: &[i64], bound: i64) -> usize {
    let side = (2 * bound + 1) as usize;
    c.iter().rev().fold(0, |acc, &x| acc * side + (x + bound) as usize)
}

fn product_laws_over(corpus: &[TorusTheory], seed: u64) -> Result<String, String> {
    let triples: usize = corpus
        .par_iter()
        .enumerate()
        .map(|(i, t)| product_laws(t, seed.wrapping_add(i as u64)).map_err(|e| format!("{t}: {e}")))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();
    Ok(format!("{} theories, {triples} triples", corpus.len()))
}

/// Commutativity and associativity of `r'_λ r'_μ` for all kernel
/// cocharacters with `|λ|_∞ ≤ 2`, compared exponent by exponent, plus a few
/// full products of random elements.
fn product_laws(t: &TorusTheory, seed: u64) -> Result<usize, String> {
    let r = t.rank();
    let small: Vec<Cocharacter> = cocharacter_box(r, 2).into_iter().filter(|l| t.in_kernel(l)).collect();
    let large = cocharacter_box(r, 4);
    let nw = t.linear_weights().len();
    let exps = |a: &Cocharacter, b: &Cocharacter| structure_exponents(t, a, b).map_err(|e| e.to_string());
    // left[L][s] = d(L, s), right[s][L] = d(s, L) with L in the big box
    let side4 = 9usize.pow(r as u32);
    let side2 = 5usize.pow(r as u32);
    let mut left = vec![0u64; side4 * side2 * nw];
    let mut right = vec![0u64; side4 * side2 * nw];
    for big in &large {
        let bi = box_index(big.coords(), 4);
        for s in &small {
            let si = box_index(s.coords(), 2);
            let at = (bi * side2 + si) * nw;
            left[at..at + nw].copy_from_slice(&exps(big, s)?);
            right[at..at + nw].copy_from_slice(&exps(s, big)?);
        }
    }
    let l_at = |a: &Cocharacter, b: &Cocharacter| (box_index(a.coords(), 4) * side2 + box_index(b.coords(), 2)) * nw;
    let r_at = |a: &Cocharacter, b: &Cocharacter| (box_index(b.coords(), 4) * side2 + box_index(a.coords(), 2)) * nw;
    let mut count = 0;
    for a in &small {
        for b in &small {
            let (x, y) = (r_at(a, b), r_at(b, a));
            ensure(right[x..x + nw] == right[y..y + nw],|| format!("r'{a} r'{b} is not commutative"))?;
            let ab = a + b;
            for c in &small {
                let bc = b + c;
                let (p, q, u, v) = (r_at(a, b), l_at(&ab, c), r_at(b, c), r_at(a, &bc));
                for j in 0..nw {
                    if right[p + j] + left[q + j] != right[u + j] + right[v + j] {
                        return Err(format!("(r'{a} r'{b}) r'{c} differs from r'{a} (r'{b} r'{c}) at weight {j}"));
                    }
                }
                count += 1;
            }
        }
    }
    sampled_products(t, seed)?;
    Ok(count)
}

fn random_element(t: &TorusTheory, support: &[Cocharacter], rng: &mut ChaCha8Rng) -> CoulombElement {
    let r = t.rank();
    let mut x = CoulombElement::zero(r);
    for _ in 0..2 {
        let lambda = support[rng.gen_range(0..support.len())].clone();
        let mut p = Polynomial::constant(r, rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 });
        if r > 0 && rng.gen_bool(0.5) {
            p = &p + &Polynomial::var(r, rng.gen_range(0..r));
        }
        x = x.add(&CoulombElement::term(lambda, p));
    }
    x
}

fn sampled_products(t: &TorusTheory, seed: u64) -> Result<(), String> {
    let support: Vec<Cocharacter> = cocharacter_box(t.rank(), 1).into_iter().filter(|l| t.in_kernel(l)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let mul = |a: &CoulombElement, b: &CoulombElement| multiply(t, a, b).map_err(|e| e.to_string());
    for _ in 0..4 {
        let x = random_element(t, &support, &mut rng);
        let y = random_element(t, &support, &mut rng);
        let z = random_element(t, &support, &mut rng);
        ensure(mul(&x, &y)? == mul(&y, &x)?, || format!("{x} and {y} do not commute"))?;
        ensure(mul(&mul(&x, &y)?, &z)? == mul(&x, &mul(&y, &z)?)?, || {
            format!("({x})({y})({z}) is not associative")
        })?;
    }
    Ok(())
}

fn grading_over(corpus: &[TorusTheory]) -> Result<String, String> {
    let pairs: usize = corpus
        .par_iter()
        .map(|t| grading(t).map_err(|e| format!("{t}: {e}")))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();
    Ok(format!("{} theories, {pairs} structure constants", corpus.len()))
}

/// The structure constant of `r'_λ r'_μ` has doubled degree
/// `deg λ + deg μ - deg(λ+μ)`: as a polynomial for `|λ|_∞ ≤ 1`, through
/// its exponents for `|λ|_∞ ≤ 2`.
fn grading(t: &TorusTheory) -> Result<usize, String> {
    let mut count = 0;
    let kernel = |bound| -> Vec<Cocharacter> { cocharacter_box(t.rank(), bound).into_iter().filter(|l| t.in_kernel(l)).collect() };
    let expected = |a: &Cocharacter, b: &Cocharacter| t.doubled_degree(a) + t.doubled_degree(b) - t.doubled_degree(&(a + b));
    for a in &kernel(1) {
        for b in &kernel(1) {
            let p = structure_constant(t, a, b).map_err(|e| e.to_string())?;
            ensure(p.is_homogeneous(), || format!("r'{a} r'{b}: {p} is not homogeneous"))?;
            let d = 2 * p.degree().unwrap_or(0) as u64;
            ensure(!p.is_zero() && d == expected(a, b), || format!("r'{a} r'{b}: degree of {p}"))?;
            count += 1;
        }
    }
    for a in &kernel(2) {
        for b in &kernel(2) {
            let e = structure_exponents(t, a, b).map_err(|e| e.to_string())?;
            let mut d = 0;
            for (form, k) in t.linear_weights().iter().zip(&e) {
                if form.is_zero() {
                    ensure(*k == 0, || format!("r'{a} r'{b}: zero weight with exponent {k}"))?;
                }
                d += 2 * k;
            }
            ensure(d == expected(a, b), || format!("r'{a} r'{b}: exponents {e:?}"))?;
            count += 1;
        }
    }
    Ok(count)
}

fn ns5_chain(dims: &[usize]) -> BraneDiagram {
    BraneDiagram::new(vec![Brane::Ns5; dims.len() - 1], dims.to_vec()).expect("one more dim than branes")
}

fn nilcone_chain(n: usize) -> Result<String, String> {
    let dims: Vec<usize> = (0..=n).collect();
    let o = chain_to_orbit(&dims).map_err(|e| e.to_string())?;
    let row = Partition::new(vec![n]);
    ensure(o.jordan_type == row && o.kind == OrbitKind::NilpotentCone, || format!("got {o:?}"))?;
    let c = composed_space(&ns5_chain(&dims), false).map_err(|e| e.to_string())?;
    let expected = (n * n - n) as i64;
    ensure(c.dim == expected && orbit_dim(&row) as i64 == expected, || format!("composed dim {}", c.dim))?;
    ensure(c == SpaceDescriptor::orbit_closure(row, Group::trivial(), Group::gl(n)), || format!("composed {c}"))?;
    Ok(format!("jordan type [{n}], dim {expected}"))
}

fn jordan_oracle(max_n: usize) -> Result<String, String> {
    let parts: Vec<Partition> = (1..=max_n).flat_map(Partition::all).collect();
    parts.par_iter().try_for_each(|l| {
        let oracle = numeric_jordan_oracle(l);
        let ours: Vec<usize> = (0..oracle.len()).map(|k| rank_profile(l, k)).collect();
        ensure(ours == oracle, || format!("{l}: {ours:?} vs oracle {oracle:?}"))
    })?;
    Ok(format!("{} partitions of n <= {max_n}", parts.len()))
}

fn slice_orbit_transpose(max_n: usize) -> Result<String, String> {
    let mut count = 0;
    for n in 1..=max_n {
        for l in Partition::all(n) {
            let m = SpaceDescriptor::group_times_slice(l.clone(), Group::gl(n), Group::trivial());
            let d = sdual_pair(&m).map_err(|e| e.to_string())?;
            let expected = SpaceDescriptor::orbit_closure(transpose(&l), Group::gl(n), Group::trivial());
            ensure(d == expected, || format!("{l}: dual {d}"))?;
            let dd = sdual_pair(&d).map_err(|e| e.to_string())?;
            ensure(dd.kind == m.kind && dd.dim == m.dim, || format!("{l}: double dual {dd}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} partitions of n <= {max_n}"))
}

fn transpose_dominance(max_n: usize) -> Result<String, String> {
    let mut pairs = 0;
    for n in 0..=max_n {
        let all = Partition::all(n);
        for a in &all {
            ensure(transpose(&transpose(a)) == *a, || format!("{a}: transpose is not an involution"))?;
            for b in &all {
                ensure(a.dominates(b) == transpose(b).dominates(&transpose(a)), || {
                    format!("{a}, {b}: dominance not reversed")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs with n <= {max_n}"))
}

fn kostant_reduction() -> Result<String, String> {
    let mut cases: Vec<(SpaceDescriptor, Group)> = Vec::new();
    let groups: Vec<Group> = (1..=6).map(Group::gl).chain((1..=4).map(Group::torus)).collect();
    for g in groups {
        cases.push((SpaceDescriptor::point(g.clone()), g.clone()));
        cases.push((SpaceDescriptor::cotangent_of_group(g.clone()), g));
    }
    for t in rank1_theories(6, 3) {
        cases.push((SpaceDescriptor::torus_theory(t), Group::torus(1)));
    }
    let mult = TorusTheory::new(1, vec![], vec![LinearForm::new(vec![1])]).expect("rank-1 weight");
    cases.push((SpaceDescriptor::torus_theory(mult), Group::torus(1)));
    for (m, g) in &cases {
        let k = kostant_reduction_check(m, g).map_err(|e| format!("{m}: {e}"))?;
        ensure(k.pass, || format!("{m}: lhs {} rhs {}", k.lhs, k.rhs))?;
    }
    Ok(format!("{} spaces", cases.len()))
}

pub fn random_diagram(rng: &mut ChaCha8Rng, max_branes: usize, max_dim: usize) -> BraneDiagram {
    let k = rng.gen_range(0..=max_branes);
    let branes = (0..k).map(|_| if rng.gen_bool(0.5) { Brane::Ns5 } else { Brane::D5 }).collect();
    let dims = (0..=k).map(|_| rng.gen_range(0..=max_dim)).collect();
    BraneDiagram::new(branes, dims).expect("one more dim than branes")
}

fn brane_hw(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xb7a2e);
    let (mut diagrams, mut moves) = (0, 0);
    while diagrams < 500 {
        let d = random_diagram(&mut rng, 12, 9);
        let admissible: Vec<usize> = (0..d.len().saturating_sub(1)).filter(|&i| hw_move(&d, i).is_ok()).collect();
        if admissible.is_empty() {
            continue;
        }
        let before = linking_numbers(&d);
        for i in admissible {
            let e = hw_move(&d, i).map_err(|e| e.to_string())?;
            let back = hw_move(&e, i).map_err(|e| format!("{d}: {e}"))?;
            ensure(back == d, || format!("{d}: move {i} twice gives {back}"))?;
            ensure(linking_numbers(&e) == before, || format!("{d}: move {i} changes linking numbers"))?;
            let sd = hw_move(&sdual(&d), i).map_err(|e| format!("{d}: dual side {e}"))?;
            ensure(sdual(&e) == sd, || format!("{d}: move {i} does not commute with S-duality"))?;
            moves += 1;
        }
        diagrams += 1;
    }
    Ok(format!("{diagrams} diagrams, {moves} moves"))
}

fn sdual_concat(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc0ca7);
    for _ in 0..500 {
        let a = random_diagram(&mut rng, 6, 9);
        let b = random_diagram(&mut rng, 6, 9);
        let mut dims = b.dims().to_vec();
        dims[0] = *a.dims().last().expect("dims never empty");
        let b = BraneDiagram::new(b.branes().to_vec(), dims).expect("same shape");
        let ab = a.concat(&b).map_err(|e| e.to_string())?;
        let rhs = sdual(&a).concat(&sdual(&b)).map_err(|e| e.to_string())?;
        ensure(sdual(&ab) == rhs, || format!("{a} + {b}"))?;
    }
    Ok("500 glued pairs".to_string())
}

/// The mirror chain written out symbol by symbol: `0 x v1 o v1 .. x v2 .. x 0`.
fn mirror_text(v: &[usize], w: &[usize]) -> String {
    let mut s = String::from("0 x");
    for (&vi, &wi) in v.iter().zip(w) {
        s += &format!(" {vi}");
        for _ in 0..wi {
            s += &format!(" o {vi}");
        }
        s += " x";
    }
    s + " 0"
}

fn mirror_matches(v: &[usize], w: &[usize]) -> Result<(), String> {
    let q = QuiverData::new(v.to_vec(), w.to_vec()).map_err(|e| e.to_string())?;
    let d = sdual(&quiver_to_diagram(&q));
    let direct = quiver_to_dual_diagram(&q);
    let text = mirror_text(v, w);
    ensure(d == direct && d.to_string() == text, || format!("v {v:?} w {w:?}: {d} vs {text}"))
}

fn quiver_dual_pattern(max_len: usize, max_entry: usize) -> Result<String, String> {
    let mut count = 0;
    for len in 1..=max_len {
        let side = max_entry + 1;
        let total = side.pow(2 * len as u32);
        (0..total).into_par_iter().try_for_each(|mut code| {
            let mut digits = Vec::with_capacity(2 * len);
            for _ in 0..2 * len {
                digits.push(code % side);
                code /= side;
            }
            mirror_matches(&digits[..len], &digits[len..])
        })?;
        count += total;
    }
    Ok(format!("{count} quivers"))
}

fn u1_flavours_cross(max_l: usize) -> Result<String, String> {
    for l in 1..=max_l {
        let t = TorusTheory::rank1(&vec![1; l]);
        let p = present_rank1(&t).map_err(|e| e.to_string())?;
        let expected = if l == 1 { VarietyTag::AffinePlane } else { VarietyTag::TypeASingularity((l - 1) as u32) };
        ensure(p.variety_tag == expected, || format!("{l} flavours: {}", p.variety_tag))?;
        mirror_matches(&[1], &[l])?;
    }
    Ok(format!("l = 1..{max_l}"))
}

fn hyperspherical_gl(max_n: usize) -> Result<String, String> {
    for n in 1..=max_n {
        let g = Group::gl(n);
        let d = hyperspherical_deficit(&SpaceDescriptor::cotangent_of_group(g.clone()), &g);
        ensure(d == (n * n - n) as i64, || format!("T*GL({n}): {d}"))?;
        let p = hyperspherical_deficit(&SpaceDescriptor::point(g.clone()), &g);
        ensure(p == -((n * n + n) as i64), || format!("pt with GL({n}): {p}"))?;
    }
    Ok(format!("gl(n), n <= {max_n}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut names = check_names();
        let total = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), total);
    }

    #[test]
    fn rank1_corpus_sizes() {
        // multisets of size <= k from 7 values
        assert_eq!(rank1_theories(4, 3).len(), 330);
        assert_eq!(rank1_theories(6, 3).len(), 1716);
    }

    #[test]
    fn mirror_text_shape() {
        assert_eq!(mirror_text(&[1], &[2]), "0 x 1 o 1 o 1 x 0");
        assert!(mirror_matches(&[2, 1], &[0, 3]).is_ok());
    }

    #[test]
    fn filtered_run() {
        let r = run_verify(Some("transpose-dominance"), 1);
        assert_eq!(r.checks.len(), 1);
        assert!(r.all_passed(), "{}", r.render());
    }
}
