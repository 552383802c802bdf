//! Fillers, the Kan condition, uniform filling tables and their synthesis.
//!
//! A filling table picks one filler for every box of every canonical shape
//! within the bound. It is uniform when it commutes with the action of every
//! map between canonical extra-name sets.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::boxes::{
    box_action, enumerate_boxes, face_keys, full_action_key, nerve, realize, reindex, AlgBox,
    BoxShape, GeomBox,
};
use crate::codiscrete::{corners, cube_of_corners};
use crate::cubeset::{algebraic_of_geometric, geometric_of_algebraic, CubeId, FiniteCubicalSet, GeometricCube};
use crate::dimcat::{enumerate_morphisms, CubeMorphism, FaceLabel, MorphKey};
use crate::error::{Error, Result};

/// Every cube whose projection is `b`, in id order.
pub fn fillers(x: &FiniteCubicalSet, b: &AlgBox) -> Result<Vec<CubeId>> {
    let shape = b.shape();
    shape.check_fits(x)?;
    let keys = face_keys(shape);
    Ok(x.cubes(shape.dim())
        .filter(|&c| {
            keys.iter()
                .zip(b.aligned())
                .all(|(&k, &face)| x.act(k, c).ok() == Some(face))
        })
        .collect())
}

/// Projections of every cube of a shape, grouped by box.
pub(crate) fn projection_index(x: &FiniteCubicalSet, shape: &BoxShape) -> HashMap<Vec<CubeId>, Vec<CubeId>> {
    let keys = face_keys(shape);
    let mut out: HashMap<Vec<CubeId>, Vec<CubeId>> = HashMap::new();
    for c in x.cubes(shape.dim()) {
        let faces = keys.iter().map(|&k| x.act(k, c).expect("within bound")).collect();
        out.entry(faces).or_default().push(c);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KanVerdict<B = AlgBox> {
    Kan { boxes: usize },
    NotKan { witness: B },
}

impl<B> KanVerdict<B> {
    pub fn is_kan(&self) -> bool {
        matches!(self, KanVerdict::Kan { .. })
    }
}

/// Whether every box of every canonical shape within the bound has a filler.
/// The witness is the first unfillable box in enumeration order.
pub fn is_kan(x: &FiniteCubicalSet) -> KanVerdict {
    kan_verdict(&PlainProblem::new(x))
}

pub(crate) fn kan_verdict<P: FillingProblem>(p: &P) -> KanVerdict<P::Key> {
    let mut checked = 0;
    for shape in BoxShape::all_canonical(p.space().bound()) {
        for b in p.boxes(&shape) {
            checked += 1;
            if p.fillers(&b).is_empty() {
                return KanVerdict::NotKan { witness: b };
            }
        }
    }
    KanVerdict::Kan { boxes: checked }
}

/// A chosen filler for each box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FillingTable<B: Ord = AlgBox> {
    entries: BTreeMap<B, CubeId>,
}

impl<B: Ord> Default for FillingTable<B> {
    fn default() -> Self {
        FillingTable { entries: BTreeMap::new() }
    }
}

impl<B: Ord> FillingTable<B> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, b: B, filler: CubeId) -> Option<CubeId> {
        self.entries.insert(b, filler)
    }

    pub fn get(&self, b: &B) -> Option<CubeId> {
        self.entries.get(b).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, CubeId)> {
        self.entries.iter().map(|(b, &c)| (b, c))
    }

    pub fn get_mut(&mut self, b: &B) -> Option<&mut CubeId> {
        self.entries.get_mut(b)
    }
}

impl<B: Ord> FromIterator<(B, CubeId)> for FillingTable<B> {
    fn from_iter<T: IntoIterator<Item = (B, CubeId)>>(iter: T) -> Self {
        FillingTable { entries: iter.into_iter().collect() }
    }
}

/// One failure of naturality in the extra names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformityViolation {
    pub shape: BoxShape,
    pub h: CubeMorphism,
    /// The box acted on.
    pub source: String,
    /// `h` applied to the filler of the box.
    pub left: String,
    /// The filler of the image box.
    pub right: String,
}

impl fmt::Display for UniformityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} along {}: filler moved gives `{}`, filler of moved box is `{}` [{}]",
            self.shape, self.h, self.left, self.right, self.source
        )
    }
}

/// A family of boxes with a notion of filler and a covariant action of maps
/// between extra-name sets.
pub(crate) trait FillingProblem {
    type Key: Clone + Ord + std::hash::Hash;

    /// The cubical set fillers are drawn from.
    fn space(&self) -> &FiniteCubicalSet;
    fn boxes(&self, shape: &BoxShape) -> Vec<Self::Key>;
    fn fillers(&self, key: &Self::Key) -> Vec<CubeId>;
    fn is_filler(&self, key: &Self::Key, c: CubeId) -> bool;
    fn act(&self, h: &CubeMorphism, key: &Self::Key) -> Result<Self::Key>;
    fn describe(&self, key: &Self::Key) -> String;
}

/// Maps from the extra names of `shape` to canonical extra sets that keep
/// the shape within `bound`.
pub fn extra_maps(shape: &BoxShape, bound: usize) -> Vec<CubeMorphism> {
    let room = bound.saturating_sub(shape.included().len() + 1);
    if shape.dim() > bound {
        return Vec::new();
    }
    (0..=room)
        .flat_map(|b| enumerate_morphisms(shape.extra(), &BoxShape::canonical_extra(b)))
        .collect()
}

pub(crate) fn section_report<P: FillingProblem>(p: &P, table: &FillingTable<P::Key>) -> Vec<String> {
    let mut out = Vec::new();
    for shape in BoxShape::all_canonical(p.space().bound()) {
        for b in p.boxes(&shape) {
            match table.get(&b) {
                None => out.push(format!("no filler for [{}]", p.describe(&b))),
                Some(c) if !p.is_filler(&b, c) => out.push(format!(
                    "`{}` does not fill [{}]",
                    p.space().label(shape.dim(), c),
                    p.describe(&b)
                )),
                Some(_) => {}
            }
        }
    }
    out
}

pub(crate) fn uniformity_report<P: FillingProblem>(
    p: &P,
    table: &FillingTable<P::Key>,
) -> Vec<UniformityViolation> {
    let space = p.space();
    let mut out = Vec::new();
    for shape in BoxShape::all_canonical(space.bound()) {
        let boxes = p.boxes(&shape);
        for h in extra_maps(&shape, space.bound()) {
            let key = full_action_key(&shape, &h).expect("fresh names");
            let target_dim = shape.dim() - h.dom().len() + h.cod().len();
            for b in &boxes {
                let moved = p.act(&h, b).expect("within bound");
                let (Some(c), Some(d)) = (table.get(b), table.get(&moved)) else {
                    continue;
                };
                let left = space.act(key, c).expect("within bound");
                if left != d {
                    out.push(UniformityViolation {
                        shape: shape.clone(),
                        h: h.clone(),
                        source: p.describe(b),
                        left: space.label(target_dim, left).to_owned(),
                        right: space.label(target_dim, d).to_owned(),
                    });
                }
            }
        }
    }
    out
}

/// Outcome of a uniform filling search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Synthesis<B: Ord = AlgBox> {
    Found(FillingTable<B>),
    /// No uniform table exists. The witness, when present, is a box with no
    /// filler at all.
    Nonexistent { witness: Option<B> },
    BudgetExhausted { decisions: usize },
}

struct Search<'a> {
    space: &'a FiniteCubicalSet,
    domains: Vec<Vec<CubeId>>,
    out_edges: Vec<Vec<(usize, MorphKey)>>,
    in_edges: Vec<Vec<(usize, MorphKey)>>,
    order: Vec<usize>,
    values: Vec<Option<CubeId>>,
    trail: Vec<usize>,
    decisions: usize,
    budget: usize,
}

enum Step {
    Solved,
    Failed,
    OutOfBudget,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, c: CubeId) -> bool {
        let mut queue = vec![(v, c)];
        while let Some((v, c)) = queue.pop() {
            match self.values[v] {
                Some(d) if d == c => continue,
                Some(_) => return false,
                None => {}
            }
            if self.domains[v].binary_search(&c).is_err() {
                return false;
            }
            self.values[v] = Some(c);
            self.trail.push(v);
            for &(u, key) in &self.in_edges[v] {
                if let Some(cu) = self.values[u] {
                    if self.space.act(key, cu).ok() != Some(c) {
                        return false;
                    }
                }
            }
            for &(w, key) in &self.out_edges[v] {
                queue.push((w, self.space.act(key, c).expect("within bound")));
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for v in self.trail.drain(mark..) {
            self.values[v] = None;
        }
    }

    fn run(&mut self, from: usize) -> Step {
        let Some(pos) = (from..self.order.len()).find(|&i| self.values[self.order[i]].is_none())
        else {
            return Step::Solved;
        };
        let v = self.order[pos];
        for i in 0..self.domains[v].len() {
            let c = self.domains[v][i];
            self.decisions += 1;
            if self.decisions > self.budget {
                return Step::OutOfBudget;
            }
            let mark = self.trail.len();
            if self.assign(v, c) {
                match self.run(pos + 1) {
                    Step::Failed => {}
                    done => return done,
                }
            }
            self.undo(mark);
        }
        Step::Failed
    }
}

/// Backtracking search for a uniform filling table. Boxes outside the image
/// of every dimension-raising action are decided first; each decision is
/// propagated along all actions.
pub(crate) fn synthesize<P: FillingProblem>(p: &P, budget: usize) -> Synthesis<P::Key> {
    let space = p.space();
    let mut keys: Vec<P::Key> = Vec::new();
    let mut index: HashMap<P::Key, usize> = HashMap::new();
    let shapes = BoxShape::all_canonical(space.bound());
    for shape in &shapes {
        for b in p.boxes(shape) {
            index.insert(b.clone(), keys.len());
            keys.push(b);
        }
    }
    let domains: Vec<Vec<CubeId>> = keys.iter().map(|b| p.fillers(b)).collect();
    if let Some(v) = domains.iter().position(Vec::is_empty) {
        return Synthesis::Nonexistent { witness: Some(keys[v].clone()) };
    }

    let n = keys.len();
    let mut out_edges = vec![Vec::new(); n];
    let mut in_edges = vec![Vec::new(); n];
    let mut raised = vec![false; n];
    for shape in &shapes {
        let members: Vec<usize> = p.boxes(shape).iter().map(|b| index[b]).collect();
        for h in extra_maps(shape, space.bound()) {
            if h.is_identity() {
                continue;
            }
            let key = full_action_key(shape, &h).expect("fresh names");
            let raises = h.cod().len() > h.dom().len();
            for &v in &members {
                let w = index[&p.act(&h, &keys[v]).expect("within bound")];
                out_edges[v].push((w, key));
                in_edges[w].push((v, key));
                raised[w] |= raises;
            }
        }
    }
    let order: Vec<usize> = (0..n)
        .filter(|&v| !raised[v])
        .chain((0..n).filter(|&v| raised[v]))
        .collect();

    let mut search = Search {
        space,
        domains,
        out_edges,
        in_edges,
        order,
        values: vec![None; n],
        trail: Vec::new(),
        decisions: 0,
        budget,
    };
    match search.run(0) {
        Step::Solved => Synthesis::Found(
            keys.into_iter()
                .zip(search.values)
                .map(|(b, c)| (b, c.expect("assigned")))
                .collect(),
        ),
        Step::Failed => Synthesis::Nonexistent { witness: None },
        Step::OutOfBudget => Synthesis::BudgetExhausted { decisions: search.decisions - 1 },
    }
}

/// Plain boxes in one cubical set.
pub(crate) struct PlainProblem<'a> {
    x: &'a FiniteCubicalSet,
    projections: BTreeMap<BoxShape, HashMap<Vec<CubeId>, Vec<CubeId>>>,
    boxes: BTreeMap<BoxShape, Vec<AlgBox>>,
}

impl<'a> PlainProblem<'a> {
    pub(crate) fn new(x: &'a FiniteCubicalSet) -> Self {
        let mut projections = BTreeMap::new();
        let mut boxes = BTreeMap::new();
        for shape in BoxShape::all_canonical(x.bound()) {
            projections.insert(shape.clone(), projection_index(x, &shape));
            boxes.insert(shape.clone(), enumerate_boxes(x, &shape).expect("shape fits"));
        }
        PlainProblem { x, projections, boxes }
    }
}

impl FillingProblem for PlainProblem<'_> {
    type Key = AlgBox;

    fn space(&self) -> &FiniteCubicalSet {
        self.x
    }

    fn boxes(&self, shape: &BoxShape) -> Vec<AlgBox> {
        self.boxes.get(shape).cloned().unwrap_or_default()
    }

    fn fillers(&self, key: &AlgBox) -> Vec<CubeId> {
        self.projections
            .get(key.shape())
            .and_then(|m| m.get(key.aligned()))
            .cloned()
            .unwrap_or_default()
    }

    fn is_filler(&self, key: &AlgBox, c: CubeId) -> bool {
        self.fillers(key).binary_search(&c).is_ok()
    }

    fn act(&self, h: &CubeMorphism, key: &AlgBox) -> Result<AlgBox> {
        box_action(self.x, h, key)
    }

    fn describe(&self, key: &AlgBox) -> String {
        key.describe(self.x)
    }
}

/// Missing entries and entries that do not fill their box, one line each.
pub fn check_section(x: &FiniteCubicalSet, table: &FillingTable) -> Vec<String> {
    section_report(&PlainProblem::new(x), table)
}

/// Every failure of naturality in the extra names.
pub fn check_uniform(x: &FiniteCubicalSet, table: &FillingTable) -> Vec<UniformityViolation> {
    uniformity_report(&PlainProblem::new(x), table)
}

/// Searches for a uniform filling table within `budget` decisions.
pub fn synthesize_uniform(x: &FiniteCubicalSet, budget: usize) -> Synthesis {
    synthesize(&PlainProblem::new(x), budget)
}

/// Removes the coordinate at `pos` from a vertex.
fn drop_coordinate(v: usize, pos: usize) -> usize {
    (v & ((1 << pos) - 1)) | ((v >> (pos + 1)) << pos)
}

/// The filler of a box in the codiscrete nerve on `objects` objects.
///
/// Every vertex on an applicable face takes that face's value. The remaining
/// vertices (only present when no names are included) copy the starting face.
pub fn codiscrete_filler(objects: usize, b: &AlgBox) -> Result<CubeId> {
    let shape = b.shape();
    let full = shape.full();
    let n = full.len();
    let face_corners: Vec<(usize, usize, Vec<usize>)> = b
        .faces()
        .map(|(f, c)| {
            let pos = full.position(&f.dim).expect("face of the shape");
            (pos, f.end.bit(), corners(objects, n - 1, c))
        })
        .collect();
    let start_pos = full.position(shape.filling()).expect("filling name");
    let start = &face_corners
        .iter()
        .find(|(pos, _, _)| *pos == start_pos)
        .expect("starting face")
        .2;
    let mut values = Vec::with_capacity(1 << n);
    for v in 0..1usize << n {
        let mut value = None;
        for (pos, end, cs) in &face_corners {
            if (v >> pos) & 1 == *end {
                let here = cs[drop_coordinate(v, *pos)];
                match value {
                    None => value = Some(here),
                    Some(prev) if prev != here => {
                        return Err(Error::AdjacencyViolation(format!(
                            "faces disagree at vertex {v} of {shape}"
                        )))
                    }
                    Some(_) => {}
                }
            }
        }
        values.push(value.unwrap_or_else(|| start[drop_coordinate(v, start_pos)]));
    }
    Ok(cube_of_corners(objects, &values))
}

/// The codiscrete filler for every box of every canonical shape.
pub fn codiscrete_table(x: &FiniteCubicalSet, objects: usize) -> Result<FillingTable> {
    let mut table = FillingTable::new();
    for shape in BoxShape::all_canonical(x.bound()) {
        for b in enumerate_boxes(x, &shape)? {
            let c = codiscrete_filler(objects, &b)?;
            table.insert(b, c);
        }
    }
    Ok(table)
}

/// A filling table in geometric form: a lift of every geometric box to the
/// free-standing cube on its full name set.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GeometricFilling {
    lifts: BTreeMap<GeomBox, GeometricCube>,
}

impl GeometricFilling {
    pub fn len(&self) -> usize {
        self.lifts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lifts.is_empty()
    }

    pub fn get(&self, beta: &GeomBox) -> Option<&GeometricCube> {
        self.lifts.get(beta)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GeomBox, &GeometricCube)> {
        self.lifts.iter()
    }
}

pub fn geometric_filling(x: &FiniteCubicalSet, table: &FillingTable) -> Result<GeometricFilling> {
    let mut lifts = BTreeMap::new();
    for (b, c) in table.iter() {
        let beta = realize(x, b)?;
        let lift = geometric_of_algebraic(x, b.shape().full(), c)?;
        lifts.insert(beta, lift);
    }
    Ok(GeometricFilling { lifts })
}

pub fn algebraic_filling(g: &GeometricFilling) -> Result<FillingTable> {
    g.lifts
        .iter()
        .map(|(beta, lift)| Ok((nerve(beta)?, algebraic_of_geometric(lift)?)))
        .collect()
}

/// Checks that each lift extends its box and that lifts commute with
/// reindexing along maps between extra-name sets.
pub fn check_geometric_filling(x: &FiniteCubicalSet, g: &GeometricFilling) -> Vec<String> {
    let mut out = Vec::new();
    for (beta, lift) in &g.lifts {
        let shape = beta.shape();
        if lift.shape() != shape.full() {
            out.push(format!("lift of a {shape} box has shape {}", lift.shape()));
            continue;
        }
        for (m, &c) in beta.table() {
            if lift.get(m) != Some(c) {
                out.push(format!("lift of a {shape} box disagrees with it at {m}"));
            }
        }
        for h in extra_maps(shape, x.bound()) {
            let moved = match reindex(x, beta, &h) {
                Ok(m) => m,
                Err(e) => {
                    out.push(format!("cannot move a {shape} box along {h}: {e}"));
                    continue;
                }
            };
            let Some(moved_lift) = g.get(&moved) else {
                out.push(format!("no lift for a {shape} box moved along {h}"));
                continue;
            };
            let fixed = shape.included().with(shape.filling()).expect("disjoint");
            let along = CubeMorphism::augment(&fixed, &h).expect("fresh names");
            match lift.reindex(&along, x.bound()) {
                Ok(expected) if &expected == moved_lift => {}
                Ok(_) => out.push(format!("lift of a {shape} box moved along {h} is not the moved lift")),
                Err(e) => out.push(format!("cannot move a lift along {h}: {e}")),
            }
        }
    }
    out
}

/// The mirror image of a box under an automorphism `flip` of the cubical
/// set that reverses every coordinate: polarity and face ends are swapped.
pub fn mirror_box<F>(b: &AlgBox, flip: F) -> AlgBox
where
    F: Fn(usize, CubeId) -> CubeId,
{
    let shape = b.shape().with_polarity(b.shape().polarity().flip());
    let dim = shape.dim() - 1;
    let faces = shape
        .afm()
        .iter()
        .map(|f| {
            let twin = FaceLabel::new(f.dim.clone(), f.end.flip());
            flip(dim, b.face(&twin).expect("mirrored face"))
        })
        .collect();
    AlgBox::unchecked(shape, faces)
}

/// The mirror image of a filling table.
pub fn mirror_table<F>(table: &FillingTable, flip: F) -> FillingTable
where
    F: Fn(usize, CubeId) -> CubeId,
{
    table
        .iter()
        .map(|(b, c)| (mirror_box(b, &flip), flip(b.shape().dim(), c)))
        .collect()
}

/// Reverses every coordinate of a codiscrete cube.
pub fn codiscrete_flip(objects: usize) -> impl Fn(usize, CubeId) -> CubeId {
    move |dim, c| {
        let mut cs = corners(objects, dim, c);
        cs.reverse();
        cube_of_corners(objects, &cs)
    }
}
