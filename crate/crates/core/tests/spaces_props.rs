use proptest::prelude::*;
use sdualkit_core::brane::{composed_space, Brane, BraneDiagram};
use sdualkit_core::coulomb::TorusTheory;
use sdualkit_core::exactalg::LinearForm;
use sdualkit_core::partitions::{chain_to_orbit, orbit_dim, transpose, Partition};
use sdualkit_core::spaces::{
    compose, hyperspherical_deficit, kostant_reduction_check, sdual_pair, Group, SpaceDescriptor, SpaceKind,
};

/// Entries of the dual table whose dual is itself in the table.
fn table_entries() -> Vec<SpaceDescriptor> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push(SpaceDescriptor::point(Group::gl(n)));
        out.push(SpaceDescriptor::cotangent_of_group(Group::gl(n)));
        out.push(SpaceDescriptor::cotangent_of_group_bimodule(Group::gl(n)));
    }
    for r in 1..=4 {
        out.push(SpaceDescriptor::point(Group::torus(r)));
        out.push(SpaceDescriptor::cotangent_of_group(Group::torus(r)));
    }
    for n in 1..=7 {
        for l in Partition::all(n) {
            out.push(SpaceDescriptor::group_times_slice(l.clone(), Group::gl(n), Group::trivial()));
            out.push(SpaceDescriptor::group_times_slice(l.clone(), Group::trivial(), Group::gl(n)));
            out.push(SpaceDescriptor::orbit_closure(l, Group::gl(n), Group::trivial()));
        }
    }
    for vi in 1..=4 {
        for vj in 1..=4 {
            out.push(SpaceDescriptor::ns5_block(vi, vj));
            out.push(SpaceDescriptor::d5_block(vi, vj));
        }
    }
    out.push(SpaceDescriptor::torus_theory(TorusTheory::rank1(&[1])));
    out
}

#[test]
fn double_dual_returns_the_input() {
    for m in table_entries() {
        let d = sdual_pair(&m).unwrap_or_else(|e| panic!("{m:?}: {e}"));
        let dd = sdual_pair(&d).unwrap_or_else(|e| panic!("{d:?}: {e}"));
        assert_eq!((dd.kind.clone(), dd.dim), (m.kind.clone(), m.dim), "{m:?}");
        assert_eq!((&dd.left_group, &dd.right_group), (&m.left_group, &m.right_group));
    }
}

#[test]
fn slices_dualize_to_transposed_orbits() {
    for n in 1..=7 {
        for l in Partition::all(n) {
            let m = SpaceDescriptor::group_times_slice(l.clone(), Group::gl(n), Group::trivial());
            let d = sdual_pair(&m).unwrap();
            let expected = SpaceDescriptor::orbit_closure(transpose(&l), Group::gl(n), Group::trivial());
            assert_eq!(d, expected, "{l}");
            assert_eq!(d.dim as usize, orbit_dim(&transpose(&l)));
        }
    }
}

#[test]
fn kostant_identity_on_known_coulomb_dimensions() {
    let mut checked = 0;
    for m in table_entries() {
        let g = m.acting_group();
        if let Ok(c) = kostant_reduction_check(&m, &g) {
            assert!(c.pass, "{m:?}: {c:?}");
            checked += 1;
        }
    }
    assert!(checked > 20);
    let cx = TorusTheory::new(1, vec![], vec![LinearForm::new(vec![1])]).unwrap();
    assert!(kostant_reduction_check(&SpaceDescriptor::torus_theory(cx), &Group::torus(1)).unwrap().pass);
    for ws in [vec![], vec![1], vec![2, -1], vec![1, 1, 1, 3, -2, 0]] {
        let m = SpaceDescriptor::torus_theory(TorusTheory::rank1(&ws));
        assert!(kostant_reduction_check(&m, &Group::torus(1)).unwrap().pass);
    }
}

#[test]
fn deficits() {
    for n in 1..=6 {
        let m = SpaceDescriptor::cotangent_of_group(Group::gl(n));
        assert_eq!(hyperspherical_deficit(&m, &Group::gl(n)), (n * n - n) as i64);
        let g = Group::gl(n);
        assert_eq!(hyperspherical_deficit(&SpaceDescriptor::point(g.clone()), &g), -((g.dim() + g.rank()) as i64));
    }
}

fn good_chains(max_top: usize) -> Vec<Vec<usize>> {
    // weakly decreasing steps read from the top are exactly transposed partitions
    let mut out = Vec::new();
    for top in 0..=max_top {
        for steps in Partition::all(top) {
            let mut dims = vec![0];
            for s in steps.parts().iter().rev() {
                dims.push(dims.last().unwrap() + s);
            }
            out.push(dims);
        }
    }
    out
}

fn ns5_chain(dims: &[usize]) -> BraneDiagram {
    BraneDiagram::new(vec![Brane::Ns5; dims.len() - 1], dims.to_vec()).unwrap()
}

#[test]
fn composed_good_chains_are_orbit_closures() {
    for dims in good_chains(8).into_iter().filter(|d| d.len() > 1) {
        let c = composed_space(&ns5_chain(&dims), false).unwrap();
        let o = chain_to_orbit(&dims).unwrap();
        assert_eq!(c.dim as usize, orbit_dim(&o.jordan_type), "{dims:?}");
        assert_eq!(c, SpaceDescriptor::orbit_closure(o.jordan_type, Group::trivial(), Group::gl(o.n)), "{dims:?}");
    }
}

#[test]
fn non_good_chains_keep_the_expected_dimension() {
    // (0,3,3): the orbit is [2,1] of dimension 4, the reduction has expected dimension 0 + 18 - 18
    let c = composed_space(&ns5_chain(&[0, 3, 3]), false).unwrap();
    assert_eq!(c.dim, 0);
    assert!(c.possibly_singular);
    let o = chain_to_orbit(&[0, 3, 3]).unwrap();
    assert_eq!(o.jordan_type, Partition::new(vec![2, 1]));
    assert_eq!(orbit_dim(&o.jordan_type), 4);
}

#[test]
fn duality_commutes_with_composition_in_dimension() {
    let mut pool: Vec<SpaceDescriptor> = Vec::new();
    for dims in good_chains(5).into_iter().filter(|d| d.len() > 1) {
        pool.push(composed_space(&ns5_chain(&dims), false).unwrap());
    }
    for i in 0..=5 {
        for j in 0..=5 {
            pool.push(SpaceDescriptor::ns5_block(i, j));
            pool.push(SpaceDescriptor::d5_block(i, j));
        }
        pool.push(SpaceDescriptor::cotangent_of_group_bimodule(Group::gl(i)));
        pool.push(SpaceDescriptor::point(Group::gl(i)));
    }
    let mut both_defined = 0;
    for a in &pool {
        for b in &pool {
            if a.right_group != b.left_group {
                continue;
            }
            let g = a.right_group.clone();
            let lhs = compose(a, b, &g, true).and_then(|c| sdual_pair(&c));
            let rhs = match (sdual_pair(a), sdual_pair(b)) {
                (Ok(da), Ok(db)) => compose(&da, &db, &g.dual(), true),
                (Err(e), _) | (_, Err(e)) => Err(e),
            };
            if let (Ok(l), Ok(r)) = (lhs, rhs) {
                assert_eq!(l.dim, r.dim, "{a:?} o {b:?}");
                both_defined += 1;
            }
        }
    }
    assert!(both_defined > 50, "only {both_defined} comparable pairs");
}

fn block_diagram() -> impl Strategy<Value = BraneDiagram> {
    prop::collection::vec(any::<bool>(), 1..=6).prop_flat_map(|bs| {
        let k = bs.len();
        prop::collection::vec(0usize..=4, k + 1).prop_map(move |dims| {
            let branes = bs.iter().map(|&b| if b { Brane::Ns5 } else { Brane::D5 }).collect();
            BraneDiagram::new(branes, dims).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn composition_dimension_is_associative(d in block_diagram(), free in any::<bool>()) {
        let left = composed_space(&d, free).unwrap();
        let blocks: Vec<SpaceDescriptor> = d
            .branes()
            .iter()
            .enumerate()
            .map(|(i, &b)| sdualkit_core::brane::block_space(b, d.dims()[i], d.dims()[i + 1]))
            .collect();
        let mut right = blocks.last().unwrap().clone();
        for i in (0..blocks.len() - 1).rev() {
            right = compose(&blocks[i], &right, &Group::gl(d.dims()[i + 1]), free).unwrap();
        }
        prop_assert_eq!(left.dim, right.dim);
        let arithmetic: i64 = blocks.iter().map(|b| b.dim).sum::<i64>()
            - 2 * d.dims()[1..d.len()].iter().map(|&v| (v * v) as i64).sum::<i64>();
        prop_assert_eq!(left.dim, arithmetic);
        prop_assert_eq!(&left.left_group, &Group::gl(d.dims()[0]));
        prop_assert_eq!(&left.right_group, &Group::gl(*d.dims().last().unwrap()));
    }

    #[test]
    fn descriptors_round_trip_json(i in 0usize..5, j in 0usize..5, ns5 in any::<bool>()) {
        let m = if ns5 { SpaceDescriptor::ns5_block(i, j) } else { SpaceDescriptor::d5_block(i, j) };
        let json = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<SpaceDescriptor>(&json).unwrap(), m);
    }
}

#[test]
fn unit_and_trivial_compositions() {
    for n in 1..=4 {
        let t = SpaceDescriptor::cotangent_of_group_bimodule(Group::gl(n));
        let m = SpaceDescriptor::d5_block(n, 2);
        assert_eq!(compose(&t, &m, &Group::gl(n), false).unwrap(), m);
        let c = compose(&t, &t, &Group::gl(n), true).unwrap();
        assert_eq!(c.dim, 2 * (n * n) as i64);
    }
    let a = SpaceDescriptor::point(Group::gl(2));
    let b = SpaceDescriptor::point(Group::trivial());
    assert_eq!(compose(&a, &b, &Group::trivial(), false).unwrap(), a);
    let c = SpaceDescriptor::new(SpaceKind::AffinePlane, Group::trivial(), Group::torus(1));
    let p = compose(&a, &c, &Group::trivial(), false).unwrap();
    assert!(matches!(p.kind, SpaceKind::Product { .. }));
    assert_eq!(p.dim, 2);
}
