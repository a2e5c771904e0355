use serde_json::json;

use sdualkit_core::brane::{hw_move, linking_numbers, sdual, BraneDiagram};
use sdualkit_core::coulomb::{present_rank1, reduce_multiplicative, structure_table, TorusTheory};
use sdualkit_core::partitions::{
    centralizer_dim, chain_to_orbit, orbit_dim, rank_profile, transpose, Partition,
};
use sdualkit_core::spaces::{hyperspherical_deficit, kostant_reduction_check, sdual_pair, Group, SpaceDescriptor};
use sdualkit_core::Error as CoreError;

use crate::{parse_usize_list, CliError, CliResult};

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

pub fn parse_theory(text: &str) -> CliResult<TorusTheory> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("torus theory: {e}")))
}

/// JSON (`{"branes": ..., "dims": ...}`) or the ASCII form `0 o 1 x 1 o 0`.
pub fn parse_diagram(text: &str) -> CliResult<BraneDiagram> {
    let t = text.trim();
    if t.starts_with('{') {
        serde_json::from_str(t).map_err(|e| CliError::Parse(format!("diagram: {e}")))
    } else {
        Ok(t.parse()?)
    }
}

pub fn parse_descriptor(text: &str) -> CliResult<SpaceDescriptor> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("space descriptor: {e}")))
}

#[derive(Clone, Copy, Debug)]
pub struct CoulombOptions {
    pub table: bool,
    pub cutoff: i64,
    pub json: bool,
}

pub fn run_coulomb(text: &str, opts: CoulombOptions) -> CliResult<String> {
    let theory = parse_theory(text)?;
    if opts.table {
        return coulomb_table(&theory, opts);
    }
    let p = present_rank1(&theory).map_err(|e| match e {
        CoreError::RankTooHigh(r) => CliError::Unsupported(format!(
            "effective rank {r} has no closed presentation; rerun with --table for structure constants"
        )),
        e => e.into(),
    })?;
    if opts.json {
        let gens: Vec<_> = p.variables.iter().map(|g| json!({"name": g.name, "doubled_degree": g.doubled_degree})).collect();
        return Ok(to_json(&json!({
            "generators": gens,
            "relations": p.relation_strings(),
            "variety_tag": p.variety_tag,
            "summary": p.relation_line(),
        })));
    }
    Ok(format!("{}\n", p.relation_line()))
}

fn coulomb_table(theory: &TorusTheory, opts: CoulombOptions) -> CliResult<String> {
    let red = reduce_multiplicative(theory);
    let entries = structure_table(theory, opts.cutoff)?;
    if opts.json {
        let rows: Vec<_> = entries
            .iter()
            .map(|e| {
                json!({
                    "lambda": e.lambda,
                    "mu": e.mu,
                    "exponents": e.exponents,
                    "coefficient": e.coefficient.to_string(),
                })
            })
            .collect();
        return Ok(to_json(&json!({
            "reduced_rank": red.theory().rank(),
            "sublattice_basis": red.basis(),
            "cutoff": opts.cutoff,
            "entries": rows,
        })));
    }
    let mut out = format!("theory: {theory}\n");
    if !red.is_identity() {
        out += &format!("sublattice basis: {:?}\n", red.basis()).replace(' ', "");
        out += &format!("reduced theory: {}\n", red.theory());
    }
    out += &format!("cutoff: {}\n", opts.cutoff);
    for e in entries {
        out += &format!("{e}\n");
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug)]
pub enum DiagramAction {
    Sdual,
    Hw(usize),
    Linking,
}

pub fn run_diagram(action: DiagramAction, text: &str, json: bool) -> CliResult<String> {
    let d = parse_diagram(text)?;
    match action {
        DiagramAction::Sdual | DiagramAction::Hw(_) => {
            let e = match action {
                DiagramAction::Hw(i) => hw_move(&d, i)?,
                _ => sdual(&d),
            };
            Ok(if json { to_json(&e) } else { format!("{e}\n") })
        }
        DiagramAction::Linking => {
            let l = linking_numbers(&d);
            Ok(if json { to_json(&l) } else { format!("{l}\n") })
        }
    }
}

#[derive(Clone, Debug)]
pub enum OrbitAction {
    Chain(String),
    Dual(String),
    Dims(String),
}

pub fn run_orbit(action: &OrbitAction, json: bool) -> CliResult<String> {
    match action {
        OrbitAction::Chain(dims) => {
            let dims = parse_usize_list(dims)?;
            let o = chain_to_orbit(&dims)?;
            let dim = orbit_dim(&o.jordan_type);
            if json {
                return Ok(to_json(&json!({"n": o.n, "jordan_type": o.jordan_type, "kind": o.kind, "dim": dim})));
            }
            Ok(format!("jordan type {} in gl({}), orbit dim {}\n", o.jordan_type, o.n, dim))
        }
        OrbitAction::Dual(p) => {
            let lambda: Partition = p.parse()?;
            let n = lambda.n();
            let slice = SpaceDescriptor::group_times_slice(lambda.clone(), Group::gl(n), Group::trivial());
            let dual = sdual_pair(&slice)?;
            if json {
                return Ok(to_json(&json!({"transpose": transpose(&lambda), "input": slice, "dual": dual})));
            }
            Ok(format!("transpose {}\n{}  <->  {}\n", transpose(&lambda), slice, dual))
        }
        OrbitAction::Dims(p) => {
            let lambda: Partition = p.parse()?;
            let ranks: Vec<usize> = (0..=lambda.largest()).map(|k| rank_profile(&lambda, k)).collect();
            if json {
                return Ok(to_json(&json!({
                    "partition": lambda,
                    "n": lambda.n(),
                    "centralizer_dim": centralizer_dim(&lambda),
                    "orbit_dim": orbit_dim(&lambda),
                    "rank_profile": ranks,
                })));
            }
            let ranks: Vec<String> = ranks.iter().map(usize::to_string).collect();
            Ok(format!(
                "partition {} of {}\ncentralizer dim {}\norbit dim {}\nrank profile {}\n",
                lambda,
                lambda.n(),
                centralizer_dim(&lambda),
                orbit_dim(&lambda),
                ranks.join(",")
            ))
        }
    }
}

/// S-dual lookup with the Kostant and hyperspherical dimension counts,
/// taken for the full acting group of the input.
pub fn run_dual(text: &str, json: bool) -> CliResult<String> {
    let m = parse_descriptor(text)?;
    let dual = sdual_pair(&m)?;
    let g = m.acting_group();
    let kostant = match kostant_reduction_check(&m, &g) {
        Ok(k) => Some(k),
        Err(CoreError::UnknownCoulombDimension(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let deficit = hyperspherical_deficit(&m, &g);
    if json {
        return Ok(to_json(&json!({
            "input": m,
            "dual": dual,
            "group": g,
            "kostant": kostant,
            "hyperspherical_deficit": deficit,
        })));
    }
    let kline = match kostant {
        Some(k) => format!("kostant: lhs {}, rhs {}, {}", k.lhs, k.rhs, if k.pass { "pass" } else { "fail" }),
        None => "kostant: unknown Coulomb dimension".to_string(),
    };
    Ok(format!("input: {m}\ndual: {dual}\n{kline}\nhyperspherical deficit: {deficit}\n"))
}

#[cfg(test)]
mod tests {
    use super::*;

    const PLAIN: CoulombOptions = CoulombOptions { table: false, cutoff: 5, json: false };

    #[test]
    fn coulomb_lines() {
        assert_eq!(run_coulomb(r#"{"rank":1,"linear_weights":[[1],[1]]}"#, PLAIN).unwrap(), "x*y = w^2  [A_1 singularity]\n");
        assert_eq!(run_coulomb(r#"{"rank":1,"linear_weights":[]}"#, PLAIN).unwrap(), "x*y = 1  [T^*(C^x)]\n");
        assert_eq!(
            run_coulomb(r#"{"rank":1,"linear_weights":[],"multiplicative_weights":[[1]]}"#, PLAIN).unwrap(),
            "point\n"
        );
    }

    #[test]
    fn coulomb_errors_map_to_exit_codes() {
        assert_eq!(run_coulomb("{", PLAIN).unwrap_err().exit_code(), 2);
        let e = run_coulomb(r#"{"rank":2}"#, PLAIN).unwrap_err();
        assert_eq!(e.exit_code(), 3);
        assert!(e.to_string().contains("--table"));
    }

    #[test]
    fn coulomb_table_for_rank_two() {
        let opts = CoulombOptions { table: true, cutoff: 1, json: false };
        let out = run_coulomb(r#"{"rank":2,"linear_weights":[[1,0],[0,1]]}"#, opts).unwrap();
        assert!(out.contains("r'(-1,-1) * r'(1,1) = w1*w2 r'(0,0)"));
        assert_eq!(out.lines().filter(|l| l.starts_with("r'")).count(), 45);
    }

    #[test]
    fn diagram_commands() {
        assert_eq!(run_diagram(DiagramAction::Hw(0), "0 o 1 x 1 x 1 o 0", false).unwrap(), "0 x 1 o 1 x 1 o 0\n");
        assert_eq!(run_diagram(DiagramAction::Sdual, "0 o 1 x 1 x 1 o 0", false).unwrap(), "0 x 1 o 1 o 1 x 0\n");
        assert_eq!(run_diagram(DiagramAction::Linking, "0 o 1 x 1 x 1 o 0", false).unwrap(), "ns5 {1,1}  d5 {1,1}\n");
        assert_eq!(run_diagram(DiagramAction::Hw(1), "0 o 1 x 1 x 1 o 0", false).unwrap_err().exit_code(), 3);
        assert_eq!(run_diagram(DiagramAction::Sdual, "0 q 1", false).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn orbit_commands() {
        let out = run_orbit(&OrbitAction::Chain("0,1,2,3".into()), false).unwrap();
        assert_eq!(out, "jordan type [3] in gl(3), orbit dim 6\n");
        let out = run_orbit(&OrbitAction::Dual("[2,1]".into()), false).unwrap();
        assert_eq!(out, "transpose [2,1]\nGL(3) x Slice[2,1]  (dim 14)  <->  Orbit[2,1]-bar in gl(3)  (dim 4)\n");
        let out = run_orbit(&OrbitAction::Dims("[4,2,1]".into()), false).unwrap();
        assert!(out.contains("rank profile 7,4,2,1,0"));
    }

    #[test]
    fn dual_command() {
        let text = r#"{"kind":{"kind":"cotangent_of_group","group":{"gl":3}},"left_group":{"gl":3}}"#;
        let out = run_dual(text, false).unwrap();
        assert_eq!(
            out,
            "input: T*GL(3)  (dim 18)\ndual: N(gl(3))  (dim 6)\nkostant: lhs 0, rhs 0, pass\nhyperspherical deficit: 6\n"
        );
        let text = r#"{"kind":{"kind":"type_a_singularity","k":1},"left_group":{"torus":1}}"#;
        assert_eq!(run_dual(text, false).unwrap_err().exit_code(), 3);
    }
}
