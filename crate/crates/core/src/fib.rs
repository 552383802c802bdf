//! Maps of cubical sets viewed as fibrations: fibers, total spaces,
//! fibration boxes, uniform fibration filling, and transport.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::boxes::{
    box_action, box_projection, enumerate_boxes_from, face_keys, full_action_key, AlgBox, BoxShape,
    Polarity,
};
use crate::codiscrete::{codiscrete_nerve, corners, cube_of_corners, product_cube, product_parts};
use crate::cubeset::{CubeId, FiniteCubicalSet, Generator};
use crate::dimcat::{canonical_keys, CubeMorphism, EndPoint, MorphKey};
use crate::error::{Error, Result};
use crate::kan::{
    kan_verdict, section_report, synthesize, uniformity_report, FillingProblem, FillingTable,
    KanVerdict, Synthesis, UniformityViolation,
};

/// A map `Y -> X` given by its components at each canonical dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicalMap {
    source: FiniteCubicalSet,
    target: FiniteCubicalSet,
    components: Vec<Vec<CubeId>>,
}

impl CubicalMap {
    /// Checks bounds and ranges; naturality is left to
    /// [`check_map_naturality`].
    pub fn new(
        source: FiniteCubicalSet,
        target: FiniteCubicalSet,
        components: Vec<Vec<CubeId>>,
    ) -> Result<Self> {
        if source.bound() != target.bound() {
            return Err(Error::Validation(format!(
                "source bound {} differs from target bound {}",
                source.bound(),
                target.bound()
            )));
        }
        if components.len() != source.bound() + 1 {
            return Err(Error::Validation(format!(
                "expected components for dimensions 0..={}",
                source.bound()
            )));
        }
        for (n, comp) in components.iter().enumerate() {
            if comp.len() != source.carrier_len(n) {
                return Err(Error::Validation(format!(
                    "component at dimension {n} is not total"
                )));
            }
            if let Some(bad) = comp.iter().find(|c| c.index() >= target.carrier_len(n)) {
                return Err(Error::UnknownCube { dim: n, cube: bad.to_string() });
            }
        }
        Ok(CubicalMap { source, target, components })
    }

    pub fn from_fn<F>(source: FiniteCubicalSet, target: FiniteCubicalSet, f: F) -> Result<Self>
    where
        F: Fn(usize, CubeId) -> CubeId,
    {
        let components = (0..=source.bound())
            .map(|n| source.cubes(n).map(|c| f(n, c)).collect())
            .collect();
        Self::new(source, target, components)
    }

    pub fn identity(x: &FiniteCubicalSet) -> Self {
        Self::from_fn(x.clone(), x.clone(), |_, c| c).expect("identity is total")
    }

    /// The unique map to the one-point set.
    pub fn terminal(x: &FiniteCubicalSet) -> Self {
        let point = FiniteCubicalSet::one_point(x.bound()).expect("bound already accepted");
        Self::from_fn(x.clone(), point, |_, _| CubeId(0)).expect("terminal map is total")
    }

    /// The projection `X x F -> X`.
    pub fn product_projection(x: &FiniteCubicalSet, f: &FiniteCubicalSet) -> Result<Self> {
        let total = crate::codiscrete::product(x, f)?;
        Self::from_fn(total, x.clone(), |n, c| product_parts(f, n, c).0)
    }

    /// The map of codiscrete nerves induced by `phi` on objects.
    pub fn codiscrete<S: AsRef<str>, T: AsRef<str>>(
        source_objects: &[S],
        target_objects: &[T],
        phi: &[usize],
        bound: usize,
    ) -> Result<Self> {
        if phi.len() != source_objects.len() || phi.iter().any(|&t| t >= target_objects.len()) {
            return Err(Error::Validation(
                "the object map must send every source object to a target object".into(),
            ));
        }
        let source = codiscrete_nerve(source_objects, bound)?;
        let target = codiscrete_nerve(target_objects, bound)?;
        let (qs, qt) = (source_objects.len(), target_objects.len());
        Self::from_fn(source, target, |n, c| {
            let image: Vec<usize> = corners(qs, n, c).into_iter().map(|v| phi[v]).collect();
            cube_of_corners(qt, &image)
        })
    }

    pub fn source(&self) -> &FiniteCubicalSet {
        &self.source
    }

    pub fn target(&self) -> &FiniteCubicalSet {
        &self.target
    }

    pub fn component(&self, dim: usize, c: CubeId) -> CubeId {
        self.components[dim][c.index()]
    }

    pub fn components(&self, dim: usize) -> &[CubeId] {
        &self.components[dim]
    }
}

/// A generator and a cube on which the two paths around the naturality
/// square differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapViolation {
    pub generator: CubeMorphism,
    pub cube: String,
    /// The generator applied in the target after the component.
    pub via_target: String,
    /// The component applied after the generator in the source.
    pub via_source: String,
}

impl fmt::Display for MapViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at `{}`: `{}` in the target vs `{}` from the source",
            self.generator, self.cube, self.via_target, self.via_source
        )
    }
}

/// Every generator and cube breaking naturality.
pub fn check_map_naturality(p: &CubicalMap) -> Vec<MapViolation> {
    let mut out = Vec::new();
    for g in Generator::all(p.source.bound()) {
        let key = g.key();
        let (n, m) = (key.dom_len(), key.cod_len());
        for c in p.source.cubes(n) {
            let via_target = p.target.act(key, p.component(n, c)).expect("within bound");
            let via_source = p.component(m, p.source.act(key, c).expect("within bound"));
            if via_target != via_source {
                out.push(MapViolation {
                    generator: g.morphism(),
                    cube: p.source.label(n, c).to_owned(),
                    via_target: p.target.label(m, via_target).to_owned(),
                    via_source: p.target.label(m, via_source).to_owned(),
                });
            }
        }
    }
    out
}

/// Cubes of the source over `x`, in id order.
pub fn fibers(p: &CubicalMap, dim: usize, x: CubeId) -> Result<Vec<CubeId>> {
    p.target.check_cube(dim, x)?;
    Ok(p.source.cubes(dim).filter(|&c| p.component(dim, c) == x).collect())
}

/// Problems with a candidate section `s : X -> Y` of `p`, one line each.
pub fn check_section(p: &CubicalMap, s: &CubicalMap) -> Vec<String> {
    let mut out: Vec<String> = check_map_naturality(s).iter().map(ToString::to_string).collect();
    if s.source != p.target || s.target != p.source {
        out.push("the section does not go from the base to the total space".into());
        return out;
    }
    for n in 0..=p.target.bound() {
        for x in p.target.cubes(n) {
            let back = p.component(n, s.component(n, x));
            if back != x {
                out.push(format!(
                    "`{}` is sent into the fiber over `{}`",
                    p.target.label(n, x),
                    p.target.label(n, back)
                ));
            }
        }
    }
    out
}

/// A functor on the cubes of a base: a set over each cube and a function
/// between them for each morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointwiseFamily {
    base: FiniteCubicalSet,
    /// `fibers[n][x]` lists the labels over cube `x` at dimension `n`.
    fibers: Vec<Vec<Vec<String>>>,
    /// Position in the target fiber of each element, per canonical morphism and base cube.
    lifts: HashMap<(MorphKey, CubeId), Vec<usize>>,
}

impl PointwiseFamily {
    /// `lift(f, x, i)` is the position, in the fiber over `X(f)(x)`, of the
    /// image of the `i`-th element over `x`.
    pub fn new<F>(base: FiniteCubicalSet, fibers: Vec<Vec<Vec<String>>>, lift: F) -> Result<Self>
    where
        F: Fn(MorphKey, CubeId, usize) -> usize,
    {
        let bound = base.bound();
        if fibers.len() != bound + 1
            || (0..=bound).any(|n| fibers[n].len() != base.carrier_len(n))
        {
            return Err(Error::Validation("every base cube needs a fiber".into()));
        }
        let mut lifts = HashMap::new();
        for n in 0..=bound {
            for m in 0..=bound {
                for key in canonical_keys(n, m) {
                    for x in base.cubes(n) {
                        let fx = base.act(key, x)?;
                        let size = fibers[m][fx.index()].len();
                        let map: Vec<usize> =
                            (0..fibers[n][x.index()].len()).map(|i| lift(key, x, i)).collect();
                        if map.iter().any(|&j| j >= size) {
                            return Err(Error::Validation(format!(
                                "lift along {} leaves the fiber over `{}`",
                                CubeMorphism::from_key(key),
                                base.label(m, fx)
                            )));
                        }
                        lifts.insert((key, x), map);
                    }
                }
            }
        }
        Ok(PointwiseFamily { base, fibers, lifts })
    }

    /// The family with fiber `f` over every cube.
    pub fn constant(base: &FiniteCubicalSet, f: &FiniteCubicalSet) -> Result<Self> {
        let fibers = (0..=base.bound())
            .map(|n| vec![f.labels(n).to_vec(); base.carrier_len(n)])
            .collect();
        Self::new(base.clone(), fibers, |key, _, i| {
            f.act(key, CubeId(i as u32)).expect("within bound").index()
        })
    }

    pub fn base(&self) -> &FiniteCubicalSet {
        &self.base
    }

    pub fn fiber(&self, dim: usize, x: CubeId) -> &[String] {
        &self.fibers[dim][x.index()]
    }

    pub fn lift(&self, key: MorphKey, x: CubeId) -> &[usize] {
        &self.lifts[&(key, x)]
    }

    /// Failures of the identity and composition laws, one line each.
    pub fn check_functorial(&self) -> Vec<String> {
        let bound = self.base.bound();
        let mut out = Vec::new();
        for a in 0..=bound {
            for x in self.base.cubes(a) {
                let id = self.lift(MorphKey::identity(a), x);
                if id.iter().enumerate().any(|(i, &j)| i != j) {
                    out.push(format!("identity moves the fiber over `{}`", self.base.label(a, x)));
                }
            }
            for b in 0..=bound {
                for f in canonical_keys(a, b) {
                    for c in 0..=bound {
                        for g in canonical_keys(b, c) {
                            let fg = f.then(g).expect("composable");
                            for x in self.base.cubes(a) {
                                let fx = self.base.act(f, x).expect("within bound");
                                let first = self.lift(f, x);
                                let second = self.lift(g, fx);
                                let both = self.lift(fg, x);
                                if first.iter().zip(both).any(|(&i, &j)| second[i] != j) {
                                    out.push(format!(
                                        "lifts along {} then {} over `{}` do not compose",
                                        CubeMorphism::from_key(f),
                                        CubeMorphism::from_key(g),
                                        self.base.label(a, x)
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Whether two families have the same fiber sizes and lifts, ignoring labels.
    pub fn same_up_to_labels(&self, other: &PointwiseFamily) -> bool {
        self.base == other.base
            && self.lifts == other.lifts
            && (0..=self.base.bound()).all(|n| {
                self.base
                    .cubes(n)
                    .all(|x| self.fiber(n, x).len() == other.fiber(n, x).len())
            })
    }
}

/// The total space of a family and its projection. Cubes are ordered by base
/// cube, then by position in the fiber.
pub fn total_space(fam: &PointwiseFamily) -> Result<(FiniteCubicalSet, CubicalMap)> {
    let base = &fam.base;
    let bound = base.bound();
    let mut offsets: Vec<Vec<usize>> = Vec::with_capacity(bound + 1);
    let mut owners: Vec<Vec<(CubeId, usize)>> = Vec::with_capacity(bound + 1);
    let mut labels = Vec::with_capacity(bound + 1);
    for n in 0..=bound {
        let mut off = Vec::with_capacity(base.carrier_len(n));
        let mut own = Vec::new();
        let mut ls = Vec::new();
        for x in base.cubes(n) {
            off.push(own.len());
            for (i, y) in fam.fiber(n, x).iter().enumerate() {
                own.push((x, i));
                ls.push(format!("({},{y})", base.label(n, x)));
            }
        }
        offsets.push(off);
        owners.push(own);
        labels.push(ls);
    }
    let total = FiniteCubicalSet::from_fn(bound, labels, |key, c| {
        let (x, i) = owners[key.dom_len()][c.index()];
        let fx = base.act(key, x).expect("within bound");
        let j = fam.lift(key, x)[i];
        CubeId((offsets[key.cod_len()][fx.index()] + j) as u32)
    })?;
    let map = CubicalMap::from_fn(total.clone(), base.clone(), |n, c| owners[n][c.index()].0)?;
    Ok((total, map))
}

/// The family of fibers of a map.
pub fn fibers_family(p: &CubicalMap) -> Result<PointwiseFamily> {
    let base = p.target.clone();
    let bound = base.bound();
    let members: Vec<Vec<Vec<CubeId>>> = (0..=bound)
        .map(|n| base.cubes(n).map(|x| fibers(p, n, x)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let labels = (0..=bound)
        .map(|n| {
            members[n]
                .iter()
                .map(|ys| ys.iter().map(|&y| p.source.label(n, y).to_owned()).collect())
                .collect()
        })
        .collect();
    PointwiseFamily::new(base.clone(), labels, |key, x, i| {
        let y = members[key.dom_len()][x.index()][i];
        let fy = p.source.act(key, y).expect("within bound");
        let fx = base.act(key, x).expect("within bound");
        members[key.cod_len()][fx.index()]
            .binary_search(&fy)
            .unwrap_or(usize::MAX)
    })
}

/// A box in the total space lying over a cube of the base.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FibAlgBox {
    pub index: CubeId,
    pub boxed: AlgBox,
}

impl FibAlgBox {
    pub fn shape(&self) -> &BoxShape {
        self.boxed.shape()
    }

    pub fn describe(&self, p: &CubicalMap) -> String {
        format!(
            "over `{}`: {}",
            p.target.label(self.shape().dim(), self.index),
            self.boxed.describe(&p.source)
        )
    }
}

/// Faces of `fb` that do not lie over the matching face of its index.
pub fn check_lying_over(p: &CubicalMap, fb: &FibAlgBox) -> Vec<String> {
    let shape = fb.shape();
    let dim = shape.dim() - 1;
    let mut out = Vec::new();
    for ((f, c), key) in fb.boxed.faces().zip(face_keys(shape)) {
        let below = p.target.act(key, fb.index).expect("within bound");
        if p.component(dim, c) != below {
            out.push(format!(
                "face {f} lies over `{}`, the index face is `{}`",
                p.target.label(dim, p.component(dim, c)),
                p.target.label(dim, below)
            ));
        }
    }
    out
}

pub fn fib_box_projection(p: &CubicalMap, shape: &BoxShape, c: CubeId) -> Result<FibAlgBox> {
    let boxed = box_projection(&p.source, shape, c)?;
    Ok(FibAlgBox { index: p.component(shape.dim(), c), boxed })
}

/// The action of `h : J -> J'` on fibration boxes.
pub fn fib_box_action(p: &CubicalMap, h: &CubeMorphism, fb: &FibAlgBox) -> Result<FibAlgBox> {
    let boxed = box_action(&p.source, h, &fb.boxed)?;
    let index = p.target.act(full_action_key(fb.shape(), h)?, fb.index)?;
    Ok(FibAlgBox { index, boxed })
}

/// Every fibration box of `shape` in enumeration order: by index, then by faces.
pub fn enumerate_fib_boxes(p: &CubicalMap, shape: &BoxShape) -> Result<Vec<FibAlgBox>> {
    shape.check_fits(&p.source)?;
    let dim = shape.dim();
    let keys = face_keys(shape);
    let below: Vec<Vec<CubeId>> = p.target.cubes(dim - 1).map(|x| fibers(p, dim - 1, x)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for index in p.target.cubes(dim) {
        let domains: Vec<Vec<CubeId>> = keys
            .iter()
            .map(|&k| below[p.target.act(k, index).expect("within bound").index()].clone())
            .collect();
        out.extend(
            enumerate_boxes_from(&p.source, shape, &domains)
                .into_iter()
                .map(|boxed| FibAlgBox { index, boxed }),
        );
    }
    Ok(out)
}

type FillerIndex = HashMap<(CubeId, Vec<CubeId>), Vec<CubeId>>;

pub(crate) struct FibProblem<'a> {
    p: &'a CubicalMap,
    boxes: BTreeMap<BoxShape, Vec<FibAlgBox>>,
    fillers: BTreeMap<BoxShape, FillerIndex>,
}

impl<'a> FibProblem<'a> {
    pub(crate) fn new(p: &'a CubicalMap) -> Self {
        let mut boxes = BTreeMap::new();
        let mut fillers = BTreeMap::new();
        for shape in BoxShape::all_canonical(p.source.bound()) {
            boxes.insert(shape.clone(), enumerate_fib_boxes(p, &shape).expect("shape fits"));
            let keys = face_keys(&shape);
            let mut index = FillerIndex::new();
            for c in p.source.cubes(shape.dim()) {
                let faces = keys.iter().map(|&k| p.source.act(k, c).expect("within bound")).collect();
                index.entry((p.component(shape.dim(), c), faces)).or_default().push(c);
            }
            fillers.insert(shape, index);
        }
        FibProblem { p, boxes, fillers }
    }
}

impl FillingProblem for FibProblem<'_> {
    type Key = FibAlgBox;

    fn space(&self) -> &FiniteCubicalSet {
        &self.p.source
    }

    fn boxes(&self, shape: &BoxShape) -> Vec<FibAlgBox> {
        self.boxes.get(shape).cloned().unwrap_or_default()
    }

    fn fillers(&self, key: &FibAlgBox) -> Vec<CubeId> {
        self.fillers
            .get(key.shape())
            .and_then(|m| m.get(&(key.index, key.boxed.aligned().to_vec())))
            .cloned()
            .unwrap_or_default()
    }

    fn is_filler(&self, key: &FibAlgBox, c: CubeId) -> bool {
        self.fillers(key).binary_search(&c).is_ok()
    }

    fn act(&self, h: &CubeMorphism, key: &FibAlgBox) -> Result<FibAlgBox> {
        fib_box_action(self.p, h, key)
    }

    fn describe(&self, key: &FibAlgBox) -> String {
        key.describe(self.p)
    }
}

/// Whether every fibration box has a filler over its index.
pub fn is_kan_fibration(p: &CubicalMap) -> KanVerdict<FibAlgBox> {
    kan_verdict(&FibProblem::new(p))
}

pub fn check_fib_section(p: &CubicalMap, table: &FillingTable<FibAlgBox>) -> Vec<String> {
    section_report(&FibProblem::new(p), table)
}

pub fn check_fib_uniform(p: &CubicalMap, table: &FillingTable<FibAlgBox>) -> Vec<UniformityViolation> {
    uniformity_report(&FibProblem::new(p), table)
}

pub fn synthesize_uniform_fib(p: &CubicalMap, budget: usize) -> Synthesis<FibAlgBox> {
    synthesize(&FibProblem::new(p), budget)
}

/// The one-face box over a line `kappa` starting at `y0`.
pub fn transport_box(p: &CubicalMap, kappa: CubeId, y0: CubeId) -> Result<FibAlgBox> {
    p.target.check_cube(1, kappa)?;
    p.source.check_cube(0, y0)?;
    let start = p.target.act(Generator::Face { dim: 1, end: EndPoint::Zero }.key(), kappa)?;
    if p.component(0, y0) != start {
        return Err(Error::FiberMismatch(format!(
            "`{}` lies over `{}`, the line starts at `{}`",
            p.source.label(0, y0),
            p.target.label(0, p.component(0, y0)),
            p.target.label(0, start)
        )));
    }
    let shape = BoxShape::canonical(0, 0, Polarity::Positive);
    Ok(FibAlgBox { index: kappa, boxed: AlgBox::unchecked(shape, vec![y0]) })
}

/// Moves `y0` along the line `kappa` to the fiber over its far end.
pub fn transport(
    p: &CubicalMap,
    table: &FillingTable<FibAlgBox>,
    kappa: CubeId,
    y0: CubeId,
) -> Result<CubeId> {
    let fb = transport_box(p, kappa, y0)?;
    let filler = table.get(&fb).ok_or_else(|| {
        Error::Validation(format!("the table has no filler for [{}]", fb.describe(p)))
    })?;
    p.source.act(Generator::Face { dim: 1, end: EndPoint::One }.key(), filler)
}

/// The filler of a fibration box for a map of codiscrete nerves induced by
/// `phi`.
///
/// Vertices on an applicable face take that face's value. Any other vertex
/// keeps the starting face's value when it lies over the index, and otherwise
/// takes the least object over the index.
pub fn codiscrete_fib_filler(
    phi: &[usize],
    target_objects: usize,
    fb: &FibAlgBox,
) -> Result<CubeId> {
    let source_objects = phi.len();
    let shape = fb.shape();
    let full = shape.full();
    let n = full.len();
    let index = corners(target_objects, n, fb.index);
    let faces: Vec<(usize, usize, Vec<usize>)> = fb
        .boxed
        .faces()
        .map(|(f, c)| {
            (full.position(&f.dim).expect("face"), f.end.bit(), corners(source_objects, n - 1, c))
        })
        .collect();
    let start_pos = full.position(shape.filling()).expect("filling name");
    let start = &faces.iter().find(|(p, _, _)| *p == start_pos).expect("start face").2;
    let drop = |v: usize, pos: usize| (v & ((1 << pos) - 1)) | ((v >> (pos + 1)) << pos);
    let mut values = Vec::with_capacity(1 << n);
    for v in 0..1usize << n {
        let forced: Option<usize> = faces
            .iter()
            .find(|(pos, end, _)| (v >> pos) & 1 == *end)
            .map(|(pos, _, cs)| cs[drop(v, *pos)]);
        let value = match forced {
            Some(value) => value,
            None => {
                let copied = start[drop(v, start_pos)];
                if phi[copied] == index[v] {
                    copied
                } else {
                    phi.iter().position(|&t| t == index[v]).ok_or_else(|| {
                        Error::FiberMismatch(format!("no object lies over {}", index[v]))
                    })?
                }
            }
        };
        if phi[value] != index[v] {
            return Err(Error::FiberMismatch(format!("vertex {v} is not over the index")));
        }
        values.push(value);
    }
    Ok(cube_of_corners(source_objects, &values))
}

/// The codiscrete fibration filler for every fibration box.
pub fn codiscrete_fib_table(
    p: &CubicalMap,
    phi: &[usize],
    target_objects: usize,
) -> Result<FillingTable<FibAlgBox>> {
    let mut table = FillingTable::new();
    for shape in BoxShape::all_canonical(p.source.bound()) {
        for fb in enumerate_fib_boxes(p, &shape)? {
            let c = codiscrete_fib_filler(phi, target_objects, &fb)?;
            table.insert(fb, c);
        }
    }
    Ok(table)
}

/// The table of the projection `X x F -> X` pairing each index with the
/// filler `table_f` picks for the box's second components.
pub fn product_fib_table(
    p: &CubicalMap,
    f: &FiniteCubicalSet,
    table_f: &FillingTable,
) -> Result<FillingTable<FibAlgBox>> {
    let mut table = FillingTable::new();
    for shape in BoxShape::all_canonical(p.source.bound()) {
        let dim = shape.dim();
        for fb in enumerate_fib_boxes(p, &shape)? {
            let faces = fb.boxed.aligned().iter().map(|&c| product_parts(f, dim - 1, c).1).collect();
            let second = AlgBox::from_aligned(f, shape.clone(), faces)?;
            let filler = table_f.get(&second).ok_or_else(|| {
                Error::Validation(format!("no filler for [{}]", second.describe(f)))
            })?;
            table.insert(fb.clone(), product_cube(f, dim, fb.index, filler));
        }
    }
    Ok(table)
}

/// A plain table read as a table for the map to the one-point set.
pub fn terminal_fib_table(table: &FillingTable) -> FillingTable<FibAlgBox> {
    table
        .iter()
        .map(|(b, c)| (FibAlgBox { index: CubeId(0), boxed: b.clone() }, c))
        .collect()
}

/// A table for the map to the one-point set read as a plain table.
pub fn plain_table(table: &FillingTable<FibAlgBox>) -> FillingTable {
    table.iter().map(|(fb, c)| (fb.boxed.clone(), c)).collect()
}

/// Whether the names of a shape are canonical enough to key a table.
pub fn is_canonical_shape(shape: &BoxShape) -> bool {
    *shape == BoxShape::canonical(shape.included().len(), shape.extra().len(), shape.polarity())
}
