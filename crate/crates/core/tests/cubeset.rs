use std::collections::HashMap;

use kanlab::codiscrete::{codiscrete_interval, codiscrete_nerve, minimal_interval};
use kanlab::cubeset::{algebraic_of_geometric, check_cube_naturality, geometric_of_algebraic};
use kanlab::dimcat::canonical_keys;
use kanlab::{CubeId, CubeMorphism, DimName, DimSet, Error, FiniteCubicalSet, Generator};
use proptest::prelude::*;

fn generator_tables(x: &FiniteCubicalSet) -> HashMap<Generator, Vec<CubeId>> {
    Generator::all(x.bound())
        .into_iter()
        .map(|g| (g, x.generator_table(g).to_vec()))
        .collect()
}

fn labels(x: &FiniteCubicalSet) -> Vec<Vec<String>> {
    (0..=x.bound()).map(|n| x.labels(n).to_vec()).collect()
}

#[test]
fn generators_determine_the_set() {
    for x in [codiscrete_interval(3).unwrap(), minimal_interval(3).unwrap()] {
        let rebuilt = FiniteCubicalSet::from_generators(x.bound(), labels(&x), &generator_tables(&x)).unwrap();
        assert_eq!(rebuilt, x);
    }
}

#[test]
fn corrupted_face_entry_breaks_the_laws() {
    let x = codiscrete_interval(2).unwrap();
    let mut gens = generator_tables(&x);
    let g = Generator::Face { dim: 2, end: kanlab::EndPoint::Zero };
    let square = x.lookup(2, "0111").unwrap();
    gens.get_mut(&g).unwrap()[square.index()] = x.lookup(1, "10").unwrap();
    let bad = FiniteCubicalSet::from_generators(2, labels(&x), &gens).unwrap();
    let report = bad.check_functor_laws();
    assert!(!report.is_empty());
    assert!(report.iter().any(|v| v.cube == "0111"), "{}", report[0]);
}

#[test]
fn missing_generator_is_rejected() {
    let x = codiscrete_interval(1).unwrap();
    let mut gens = generator_tables(&x);
    gens.remove(&Generator::Inclusion { dim: 0 });
    assert!(matches!(
        FiniteCubicalSet::from_generators(1, labels(&x), &gens),
        Err(Error::Validation(_))
    ));
}

#[test]
fn bound_guard() {
    assert!(matches!(codiscrete_interval(7), Err(Error::DimensionOverflow { .. })));
}

#[test]
fn corrupted_geometric_cube_is_unnatural() {
    let x = codiscrete_interval(2).unwrap();
    let shape = DimSet::from_names(["u", "v"]).unwrap();
    let c = x.lookup(2, "0110").unwrap();
    let kappa = geometric_of_algebraic(&x, &shape, c).unwrap();
    assert!(check_cube_naturality(&x, &kappa).is_empty());
    let mut table = kappa.table().clone();
    let (f, v) = table.iter_mut().find(|(f, _)| f.cod().len() == 1).unwrap();
    let f = f.clone();
    *v = if v.0 == 0 { CubeId(1) } else { CubeId(0) };
    let broken = kanlab::GeometricCube::from_table(shape, table);
    let report = check_cube_naturality(&x, &broken);
    assert!(!report.is_empty(), "changing the entry at {f} went unnoticed");
}

fn small_set() -> impl Strategy<Value = FiniteCubicalSet> {
    prop_oneof![
        Just(codiscrete_interval(2).unwrap()),
        Just(minimal_interval(2).unwrap()),
        Just(codiscrete_nerve(&["a", "b", "c"], 2).unwrap()),
    ]
}

fn pool() -> Vec<DimName> {
    ["x", "y", "z", "w"].iter().map(|n| DimName::new(n).unwrap()).collect()
}

proptest! {
    #[test]
    fn actions_compose(x in small_set(), a in 0usize..=2, b in 0usize..=2, c in 0usize..=2, seed in any::<u64>()) {
        let fs = canonical_keys(a, b);
        let gs = canonical_keys(b, c);
        let f = fs[(seed as usize) % fs.len()];
        let g = gs[((seed >> 20) as usize) % gs.len()];
        let fg = f.then(g).unwrap();
        for cube in x.cubes(a) {
            prop_assert_eq!(x.act(fg, cube).unwrap(), x.act(g, x.act(f, cube).unwrap()).unwrap());
        }
    }

    #[test]
    fn named_actions_follow_renaming(x in small_set(), n in 0usize..=2, m in 0usize..=2, seed in any::<u64>()) {
        let names = pool();
        let dom: DimSet = names[..n].iter().cloned().collect();
        let cod: DimSet = names[4 - m..].iter().cloned().collect();
        let fs = kanlab::enumerate_morphisms(&dom, &cod);
        let f = &fs[(seed as usize) % fs.len()];
        let to_canon = CubeMorphism::renaming(&DimSet::canonical(n), &dom).unwrap();
        let from_canon = CubeMorphism::renaming(&cod, &DimSet::canonical(m)).unwrap();
        let canonical = to_canon.compose(f).unwrap().compose(&from_canon).unwrap();
        for cube in x.cubes(n) {
            prop_assert_eq!(x.action(f, cube).unwrap(), x.act(canonical.key(), cube).unwrap());
        }
    }

    #[test]
    fn yoneda_round_trip(x in small_set(), n in 0usize..=2, pick in any::<u32>()) {
        let shape: DimSet = pool()[..n].iter().cloned().collect();
        let c = CubeId(pick % x.carrier_len(n) as u32);
        let kappa = geometric_of_algebraic(&x, &shape, c).unwrap();
        prop_assert!(check_cube_naturality(&x, &kappa).is_empty());
        prop_assert_eq!(algebraic_of_geometric(&kappa).unwrap(), c);
    }

    #[test]
    fn reindexing_is_precomposition(n in 0usize..=2, pick in any::<u32>(), seed in any::<u64>()) {
        let x = codiscrete_interval(2).unwrap();
        let names = pool();
        let shape: DimSet = names[..n].iter().cloned().collect();
        let c = CubeId(pick % x.carrier_len(n) as u32);
        let kappa = geometric_of_algebraic(&x, &shape, c).unwrap();
        let target: DimSet = names[2..3].iter().cloned().collect();
        let gs = kanlab::enumerate_morphisms(&shape, &target);
        let g = &gs[(seed as usize) % gs.len()];
        let moved = kappa.reindex(g, 2).unwrap();
        let expected = geometric_of_algebraic(&x, &target, x.action(g, c).unwrap()).unwrap();
        prop_assert_eq!(moved, expected);
    }
}
