//! Codiscrete nerves, the minimal interval, and products.
//!
//! An `n`-cube of the codiscrete nerve on a set of objects assigns an object to
//! each of the `2^n` vertices. Vertex `v` has coordinate `d(k+1)` equal to bit
//! `k` of `v`. Cube ids list the vertex values as digits, most significant
//! first, so ids sort like labels.

use crate::cubeset::{CubeId, FiniteCubicalSet, MAX_TABLE_ENTRIES};
use crate::dimcat::{MorphKey, MAX_BOUND};
use crate::error::{Error, Result};

/// Vertex values of cube `c` at dimension `dim`, indexed by vertex.
pub fn corners(objects: usize, dim: usize, c: CubeId) -> Vec<usize> {
    let vertices = 1usize << dim;
    let mut out = vec![0; vertices];
    let mut rest = c.index();
    for v in (0..vertices).rev() {
        out[v] = rest % objects;
        rest /= objects;
    }
    out
}

/// Inverse of [`corners`].
pub fn cube_of_corners(objects: usize, values: &[usize]) -> CubeId {
    CubeId(values.iter().fold(0usize, |acc, &v| acc * objects + v) as u32)
}

/// The vertex of the domain seen from vertex `w` of the codomain.
pub fn pull_vertex(key: MorphKey, w: usize) -> usize {
    key.codes().enumerate().fold(0, |v, (i, code)| {
        let bit = if code < 2 { code as usize } else { (w >> (code - 2)) & 1 };
        v | (bit << i)
    })
}

fn corner_action(objects: usize, key: MorphKey, c: CubeId) -> CubeId {
    let src = corners(objects, key.dom_len(), c);
    let image: Vec<usize> = (0..1usize << key.cod_len())
        .map(|w| src[pull_vertex(key, w)])
        .collect();
    cube_of_corners(objects, &image)
}

fn carrier_size(objects: usize, dim: usize) -> Option<usize> {
    let vertices = u32::try_from(1usize << dim).ok()?;
    objects.checked_pow(vertices)
}

/// The codiscrete nerve on `objects`, truncated at `bound`.
pub fn codiscrete_nerve<S: AsRef<str>>(objects: &[S], bound: usize) -> Result<FiniteCubicalSet> {
    let names: Vec<&str> = objects.iter().map(AsRef::as_ref).collect();
    if names.is_empty() {
        return Err(Error::Validation("a codiscrete nerve needs at least one object".into()));
    }
    let mut sorted = names.clone();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Validation(format!("object `{}` is listed twice", w[0])));
    }
    if bound > MAX_BOUND {
        return Err(Error::DimensionOverflow { dim: bound, bound: MAX_BOUND });
    }
    let q = names.len();
    let top = carrier_size(q, bound)
        .filter(|&s| s <= MAX_TABLE_ENTRIES)
        .ok_or_else(|| {
            Error::Validation(format!(
                "{q} objects at dimension {bound} give too many cubes"
            ))
        })?;
    debug_assert!(top >= 1);
    let separator = if names.iter().all(|n| n.chars().count() == 1) { "" } else { "," };
    let labels = (0..=bound)
        .map(|n| {
            let size = carrier_size(q, n).expect("smaller than the top carrier");
            (0..size as u32)
                .map(|c| {
                    corners(q, n, CubeId(c))
                        .into_iter()
                        .map(|v| names[v])
                        .collect::<Vec<_>>()
                        .join(separator)
                })
                .collect()
        })
        .collect();
    FiniteCubicalSet::from_fn(bound, labels, |key, c| corner_action(q, key, c))
}

/// The codiscrete nerve on `{0, 1}`.
pub fn codiscrete_interval(bound: usize) -> Result<FiniteCubicalSet> {
    codiscrete_nerve(&["0", "1"], bound)
}

/// Whether a corner assignment of the interval is constant or a single
/// coordinate projection.
pub fn is_constant_or_projection(dim: usize, values: &[usize]) -> bool {
    let constant = values.iter().all(|&v| v == values[0]);
    let projection = (0..dim).any(|k| values.iter().enumerate().all(|(v, &x)| x == (v >> k) & 1));
    constant || projection
}

/// The interval with only the cubes forced by its endpoints and its segment:
/// constants and coordinate projections.
pub fn minimal_interval(bound: usize) -> Result<FiniteCubicalSet> {
    let full = codiscrete_interval(bound)?;
    full.restrict(|n, c| is_constant_or_projection(n, &corners(2, n, c)))
}

/// The product `X x F`; the cube `(x, f)` has id `x * |F_n| + f`.
pub fn product(x: &FiniteCubicalSet, f: &FiniteCubicalSet) -> Result<FiniteCubicalSet> {
    if x.bound() != f.bound() {
        return Err(Error::Validation(format!(
            "bounds differ: {} and {}",
            x.bound(),
            f.bound()
        )));
    }
    let labels = (0..=x.bound())
        .map(|n| {
            x.labels(n)
                .iter()
                .flat_map(|a| f.labels(n).iter().map(move |b| format!("({a},{b})")))
                .collect()
        })
        .collect();
    FiniteCubicalSet::from_fn(x.bound(), labels, |key, c| {
        let width = f.carrier_len(key.dom_len()) as u32;
        let (a, b) = (CubeId(c.0 / width), CubeId(c.0 % width));
        let xa = x.act(key, a).expect("within bound");
        let fb = f.act(key, b).expect("within bound");
        CubeId(xa.0 * f.carrier_len(key.cod_len()) as u32 + fb.0)
    })
}

/// Splits a product cube id into its two components.
pub fn product_parts(f: &FiniteCubicalSet, dim: usize, c: CubeId) -> (CubeId, CubeId) {
    let width = f.carrier_len(dim) as u32;
    (CubeId(c.0 / width), CubeId(c.0 % width))
}

pub fn product_cube(f: &FiniteCubicalSet, dim: usize, x: CubeId, y: CubeId) -> CubeId {
    CubeId(x.0 * f.carrier_len(dim) as u32 + y.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubeset::{algebraic_of_geometric, geometric_of_algebraic, check_cube_naturality};
    use crate::dimcat::{enumerate_morphisms, CubeMorphism, DimName, DimSet, EndPoint};

    fn name(s: &str) -> DimName {
        DimName::new(s).unwrap()
    }

    #[test]
    fn codiscrete_carrier_sizes() {
        let x = codiscrete_interval(3).unwrap();
        assert_eq!(x.carrier_sizes(), vec![2, 4, 16, 256]);
        let y = codiscrete_nerve(&["a", "b", "c"], 2).unwrap();
        assert_eq!(y.carrier_sizes(), vec![3, 9, 81]);
    }

    #[test]
    fn codiscrete_interval_is_a_functor() {
        for bound in 0..=3 {
            let x = codiscrete_interval(bound).unwrap();
            assert!(x.check_functor_laws().is_empty());
        }
        assert!(codiscrete_nerve(&["a", "b", "c"], 2).unwrap().check_functor_laws().is_empty());
    }

    #[test]
    fn segment_ends() {
        let x = codiscrete_interval(2).unwrap();
        let seg = x.lookup(1, "01").unwrap();
        let one = CubeMorphism::face(&DimSet::empty(), &name("x"), EndPoint::One).unwrap();
        let zero = CubeMorphism::face(&DimSet::empty(), &name("x"), EndPoint::Zero).unwrap();
        assert_eq!(x.label(0, x.action(&one, seg).unwrap()), "1");
        assert_eq!(x.label(0, x.action(&zero, seg).unwrap()), "0");

        let kappa = geometric_of_algebraic(&x, &DimSet::from_names(["x"]).unwrap(), seg).unwrap();
        assert_eq!(x.label(0, kappa.get(&zero).unwrap()), "0");
    }

    #[test]
    fn degenerate_then_face_fixes_cubes() {
        let x = codiscrete_interval(2).unwrap();
        let incl = CubeMorphism::inclusion(&DimSet::empty(), &name("y")).unwrap();
        let face = CubeMorphism::face(&DimSet::empty(), &name("y"), EndPoint::Zero).unwrap();
        let round = incl.compose(&face).unwrap();
        for c in x.cubes(0) {
            assert_eq!(x.action(&round, c).unwrap(), c);
        }
    }

    #[test]
    fn degeneracies_commute() {
        let x = codiscrete_interval(3).unwrap();
        let base = DimSet::from_names(["a"]).unwrap();
        let ix = CubeMorphism::inclusion(&base, &name("x")).unwrap();
        let iy = CubeMorphism::inclusion(&base, &name("y")).unwrap();
        let ix_then_iy = ix.compose(&CubeMorphism::inclusion(ix.cod(), &name("y")).unwrap()).unwrap();
        let iy_then_ix = iy.compose(&CubeMorphism::inclusion(iy.cod(), &name("x")).unwrap()).unwrap();
        assert_eq!(ix_then_iy, iy_then_ix);
        for c in x.cubes(1) {
            let stepwise_a = x
                .action(&CubeMorphism::inclusion(ix.cod(), &name("y")).unwrap(), x.action(&ix, c).unwrap())
                .unwrap();
            let stepwise_b = x
                .action(&CubeMorphism::inclusion(iy.cod(), &name("x")).unwrap(), x.action(&iy, c).unwrap())
                .unwrap();
            assert_eq!(stepwise_a, stepwise_b);
        }
    }

    #[test]
    fn minimal_interval_sizes_and_members() {
        let m = minimal_interval(3).unwrap();
        assert_eq!(m.carrier_sizes(), vec![2, 3, 4, 5]);
        assert_eq!(m.labels(0), ["0", "1"]);
        assert_eq!(m.labels(1), ["00", "01", "11"]);
        assert_eq!(m.labels(2), ["0000", "0011", "0101", "1111"]);
        assert!(m.check_functor_laws().is_empty());
    }

    #[test]
    fn restriction_must_be_closed() {
        let x = codiscrete_interval(1).unwrap();
        // Keeping the segment without its endpoint 1 is not closed.
        let r = x.restrict(|n, c| n == 1 || c == CubeId(0));
        assert!(matches!(r, Err(Error::Validation(_))));
    }

    #[test]
    fn yoneda_round_trips() {
        let x = codiscrete_interval(2).unwrap();
        for n in 0..=2 {
            let shape: DimSet = ["p", "q"][..n].iter().map(|s| name(s)).collect();
            for c in x.cubes(n) {
                let kappa = geometric_of_algebraic(&x, &shape, c).unwrap();
                assert!(check_cube_naturality(&x, &kappa).is_empty());
                let back = algebraic_of_geometric(&kappa).unwrap();
                assert_eq!(back, c);
                assert_eq!(geometric_of_algebraic(&x, &shape, back).unwrap(), kappa);
            }
        }
    }

    #[test]
    fn corrupted_geometric_cube_is_not_natural() {
        let x = codiscrete_interval(2).unwrap();
        let shape = DimSet::from_names(["p"]).unwrap();
        let kappa = geometric_of_algebraic(&x, &shape, CubeId(1)).unwrap();
        let mut table = kappa.table().clone();
        let f = enumerate_morphisms(&shape, &DimSet::canonical(2))[0].clone();
        let entry = table.get_mut(&f).unwrap();
        *entry = CubeId((entry.0 + 1) % 16);
        let bad = crate::cubeset::GeometricCube::from_table(shape, table);
        assert!(!check_cube_naturality(&x, &bad).is_empty());
    }

    #[test]
    fn product_is_a_functor() {
        let x = codiscrete_interval(2).unwrap();
        let f = codiscrete_nerve(&["u", "v", "w"], 2).unwrap();
        let p = product(&x, &f).unwrap();
        assert_eq!(p.carrier_sizes(), vec![6, 36, 16 * 81]);
        assert!(p.check_functor_laws().is_empty());
        let c = product_cube(&f, 1, CubeId(2), CubeId(5));
        assert_eq!(product_parts(&f, 1, c), (CubeId(2), CubeId(5)));
        assert_eq!(p.label(1, c), format!("({},{})", x.label(1, CubeId(2)), f.label(1, CubeId(5))));
    }

    #[test]
    fn bad_object_lists_are_rejected() {
        assert!(codiscrete_nerve::<&str>(&[], 1).is_err());
        assert!(codiscrete_nerve(&["a", "a"], 1).is_err());
        assert!(codiscrete_nerve(&["a", "b", "c"], 4).is_err());
    }
}
