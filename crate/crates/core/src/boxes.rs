//! Open boxes: shapes, their co-sieves, face families, and the conversions
//! between geometric and algebraic boxes.
//!
//! A shape `(I, J, y, polarity)` describes a cube on `I + J + {y}` missing its
//! interior, the far face in `y`, and both faces in each name of `J`. The
//! applicable faces are both ends of each name of `I` and the starting end of
//! `y`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::cubeset::{CubeId, FiniteCubicalSet};
use crate::dimcat::{
    enumerate_morphisms, orthogonal, CubeMorphism, DimName, DimSet, EndPoint, FaceLabel, Image,
    MorphKey,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    pub const BOTH: [Polarity; 2] = [Polarity::Positive, Polarity::Negative];

    /// The end of the filling name carrying the starting face.
    pub fn start(self) -> EndPoint {
        match self {
            Polarity::Positive => EndPoint::Zero,
            Polarity::Negative => EndPoint::One,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Polarity::Positive => Polarity::Negative,
            Polarity::Negative => Polarity::Positive,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Polarity::Positive => "positive",
            Polarity::Negative => "negative",
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxShape {
    included: DimSet,
    extra: DimSet,
    filling: DimName,
    polarity: Polarity,
    full: DimSet,
    afm: Vec<FaceLabel>,
}

impl BoxShape {
    pub fn new(
        included: DimSet,
        extra: DimSet,
        filling: DimName,
        polarity: Polarity,
    ) -> Result<Self> {
        let full = included.union(&extra)?.with(&filling)?;
        let mut afm: Vec<FaceLabel> = included
            .iter()
            .flat_map(|d| EndPoint::BOTH.map(|e| FaceLabel::new(d.clone(), e)))
            .collect();
        afm.push(FaceLabel::new(filling.clone(), polarity.start()));
        afm.sort();
        Ok(BoxShape { included, extra, filling, polarity, full, afm })
    }

    /// The shape with included names `i1..`, extra names `j1..`, filling `y`.
    pub fn canonical(included: usize, extra: usize, polarity: Polarity) -> Self {
        let names = |prefix: &str, n: usize| {
            DimSet::from_names((1..=n).map(|k| format!("{prefix}{k}"))).expect("distinct names")
        };
        BoxShape::new(
            names("i", included),
            names("j", extra),
            DimName::new("y").expect("valid name"),
            polarity,
        )
        .expect("disjoint names")
    }

    /// The canonical extra-name set of size `n`.
    pub fn canonical_extra(n: usize) -> DimSet {
        DimSet::from_names((1..=n).map(|k| format!("j{k}"))).expect("distinct names")
    }

    /// Every canonical shape whose cubes fit within `bound`.
    pub fn all_canonical(bound: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for total in 0..bound {
            for i in 0..=total {
                for polarity in Polarity::BOTH {
                    out.push(BoxShape::canonical(i, total - i, polarity));
                }
            }
        }
        out
    }

    pub fn included(&self) -> &DimSet {
        &self.included
    }

    pub fn extra(&self) -> &DimSet {
        &self.extra
    }

    pub fn filling(&self) -> &DimName {
        &self.filling
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    /// `I + J + {y}`.
    pub fn full(&self) -> &DimSet {
        &self.full
    }

    pub fn dim(&self) -> usize {
        self.full.len()
    }

    /// The applicable faces, sorted by name and then end.
    pub fn afm(&self) -> &[FaceLabel] {
        &self.afm
    }

    pub fn face_index(&self, face: &FaceLabel) -> Option<usize> {
        self.afm.binary_search(face).ok()
    }

    /// The face as a morphism out of the full name set.
    pub fn face_instance(&self, face: &FaceLabel) -> CubeMorphism {
        face.instance(&self.full).expect("face of the shape")
    }

    /// `(I + {y}) - {face.dim}`: the non-extra names left on the face.
    pub fn residual(&self, face: &FaceLabel) -> DimSet {
        self.included.with(&self.filling).expect("disjoint").without(&face.dim)
    }

    pub fn with_extra(&self, extra: DimSet) -> Result<Self> {
        BoxShape::new(self.included.clone(), extra, self.filling.clone(), self.polarity)
    }

    pub fn with_polarity(&self, polarity: Polarity) -> Self {
        BoxShape::new(self.included.clone(), self.extra.clone(), self.filling.clone(), polarity)
            .expect("same names")
    }

    /// Aligns a face family with [`BoxShape::afm`].
    pub fn align(&self, faces: &FaceFamily) -> Result<Vec<CubeId>> {
        if faces.len() != self.afm.len() || !self.afm.iter().all(|f| faces.contains_key(f)) {
            let given: Vec<String> = faces.keys().map(ToString::to_string).collect();
            let wanted: Vec<String> = self.afm.iter().map(ToString::to_string).collect();
            return Err(Error::ShapeMismatch(format!(
                "faces [{}] do not match [{}]",
                given.join(", "),
                wanted.join(", ")
            )));
        }
        Ok(self.afm.iter().map(|f| faces[f]).collect())
    }

    pub(crate) fn check_fits(&self, x: &FiniteCubicalSet) -> Result<()> {
        if self.dim() > x.bound() {
            return Err(Error::DimensionOverflow { dim: self.dim(), bound: x.bound() });
        }
        Ok(())
    }
}

impl fmt::Display for BoxShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "I={} J={} y={} {}",
            self.included, self.extra, self.filling, self.polarity
        )
    }
}

impl fmt::Debug for BoxShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Faces of a box keyed by label.
pub type FaceFamily = BTreeMap<FaceLabel, CubeId>;

/// A face family satisfying adjacency.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlgBox {
    shape: BoxShape,
    /// Aligned with `shape.afm()`.
    faces: Vec<CubeId>,
}

impl AlgBox {
    /// Validates carriers and adjacency.
    pub fn new(x: &FiniteCubicalSet, shape: BoxShape, faces: &FaceFamily) -> Result<Self> {
        let aligned = shape.align(faces)?;
        Self::from_aligned(x, shape, aligned)
    }

    pub fn from_aligned(x: &FiniteCubicalSet, shape: BoxShape, faces: Vec<CubeId>) -> Result<Self> {
        shape.check_fits(x)?;
        if faces.len() != shape.afm().len() {
            return Err(Error::ShapeMismatch(format!(
                "{} faces for a shape with {}",
                faces.len(),
                shape.afm().len()
            )));
        }
        for &c in &faces {
            x.check_cube(shape.dim() - 1, c)?;
        }
        if let Some(v) = adjacency_violations(x, &shape, &faces).into_iter().next() {
            return Err(Error::AdjacencyViolation(v.to_string()));
        }
        Ok(AlgBox { shape, faces })
    }

    pub(crate) fn unchecked(shape: BoxShape, faces: Vec<CubeId>) -> Self {
        AlgBox { shape, faces }
    }

    pub fn shape(&self) -> &BoxShape {
        &self.shape
    }

    pub fn aligned(&self) -> &[CubeId] {
        &self.faces
    }

    pub fn face(&self, label: &FaceLabel) -> Option<CubeId> {
        self.shape.face_index(label).map(|i| self.faces[i])
    }

    pub fn faces(&self) -> impl Iterator<Item = (&FaceLabel, CubeId)> {
        self.shape.afm().iter().zip(self.faces.iter().copied())
    }

    pub fn face_family(&self) -> FaceFamily {
        self.faces().map(|(f, c)| (f.clone(), c)).collect()
    }

    /// `shape; x@0=label, ...` with labels taken from `x`.
    pub fn describe(&self, x: &FiniteCubicalSet) -> String {
        let dim = self.shape.dim() - 1;
        let faces: Vec<String> = self
            .faces()
            .map(|(f, c)| format!("{f}={}", x.label(dim, c)))
            .collect();
        format!("{}; {}", self.shape, faces.join(", "))
    }
}

/// Two orthogonal faces whose shared edge disagrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyViolation {
    pub first: FaceLabel,
    pub second: FaceLabel,
    /// The second face's map applied to the first face's cube.
    pub left: String,
    /// The first face's map applied to the second face's cube.
    pub right: String,
}

impl fmt::Display for AdjacencyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "faces {} and {} disagree: `{}` vs `{}`",
            self.first, self.second, self.left, self.right
        )
    }
}

/// For each orthogonal pair `(s, t)` with `s < t`, the keys of `t` on the
/// face `s` and of `s` on the face `t`.
fn adjacency_keys(shape: &BoxShape) -> Vec<(usize, usize, MorphKey, MorphKey)> {
    let afm = shape.afm();
    let mut out = Vec::new();
    for s in 0..afm.len() {
        for t in s + 1..afm.len() {
            if !orthogonal(&afm[s], &afm[t]) {
                continue;
            }
            let on_s = afm[t].instance(&shape.full().without(&afm[s].dim)).expect("orthogonal");
            let on_t = afm[s].instance(&shape.full().without(&afm[t].dim)).expect("orthogonal");
            out.push((s, t, on_s.key(), on_t.key()));
        }
    }
    out
}

fn adjacency_violations(
    x: &FiniteCubicalSet,
    shape: &BoxShape,
    faces: &[CubeId],
) -> Vec<AdjacencyViolation> {
    let edge = shape.dim().saturating_sub(2);
    adjacency_keys(shape)
        .into_iter()
        .filter_map(|(s, t, on_s, on_t)| {
            let left = x.act(on_s, faces[s]).expect("checked cube");
            let right = x.act(on_t, faces[t]).expect("checked cube");
            (left != right).then(|| AdjacencyViolation {
                first: shape.afm()[s].clone(),
                second: shape.afm()[t].clone(),
                left: x.label(edge, left).to_owned(),
                right: x.label(edge, right).to_owned(),
            })
        })
        .collect()
}

/// Every orthogonal pair of faces that disagrees.
pub fn check_adjacency(
    x: &FiniteCubicalSet,
    shape: &BoxShape,
    faces: &FaceFamily,
) -> Result<Vec<AdjacencyViolation>> {
    shape.check_fits(x)?;
    let aligned = shape.align(faces)?;
    for &c in &aligned {
        x.check_cube(shape.dim() - 1, c)?;
    }
    Ok(adjacency_violations(x, shape, &aligned))
}

/// A pair of faces and reconciling maps whose images disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceViolation {
    pub first: FaceLabel,
    pub second: FaceLabel,
    pub g1: CubeMorphism,
    pub g2: CubeMorphism,
    pub left: String,
    pub right: String,
}

impl fmt::Display for CoherenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "faces {} and {} reconciled by {} and {} disagree: `{}` vs `{}`",
            self.first, self.second, self.g1, self.g2, self.left, self.right
        )
    }
}

/// All reconciling pairs for the faces of one shape, precomputed so that
/// many face families can be checked cheaply.
#[derive(Clone, Debug)]
pub struct NaiveCoherence {
    shape: BoxShape,
    /// `(s, g1, t, g2)` with `face_s ; g1 == face_t ; g2` and `s < t`.
    pairs: Vec<(usize, MorphKey, usize, MorphKey)>,
}

impl NaiveCoherence {
    /// Reconciling maps land in `{d1..dk}` for `k <= bound`.
    pub fn new(shape: &BoxShape, bound: usize) -> Self {
        let afm = shape.afm();
        let instances: Vec<CubeMorphism> = afm.iter().map(|f| shape.face_instance(f)).collect();
        let mut pairs = Vec::new();
        for k in 0..=bound {
            let target = DimSet::canonical(k);
            let mut by_composite: HashMap<CubeMorphism, Vec<(usize, MorphKey)>> = HashMap::new();
            for (s, inst) in instances.iter().enumerate() {
                for g in enumerate_morphisms(inst.cod(), &target) {
                    let composite = inst.compose(&g).expect("composable");
                    by_composite.entry(composite).or_default().push((s, g.key()));
                }
            }
            let mut groups: Vec<(CubeMorphism, Vec<(usize, MorphKey)>)> =
                by_composite.into_iter().collect();
            groups.sort();
            for (_, group) in groups {
                for (a, &(s, g1)) in group.iter().enumerate() {
                    for &(t, g2) in &group[a + 1..] {
                        if s != t {
                            pairs.push((s, g1, t, g2));
                        }
                    }
                }
            }
        }
        NaiveCoherence { shape: shape.clone(), pairs }
    }

    pub fn shape(&self) -> &BoxShape {
        &self.shape
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// Checks a family aligned with the shape's faces.
    pub fn check(&self, x: &FiniteCubicalSet, faces: &[CubeId]) -> Vec<CoherenceViolation> {
        let afm = self.shape.afm();
        let mut out = Vec::new();
        for &(s, g1, t, g2) in &self.pairs {
            let left = x.act(g1, faces[s]).expect("checked cube");
            let right = x.act(g2, faces[t]).expect("checked cube");
            if left != right {
                let dim = g1.cod_len();
                out.push(CoherenceViolation {
                    first: afm[s].clone(),
                    second: afm[t].clone(),
                    g1: CubeMorphism::from_key(g1),
                    g2: CubeMorphism::from_key(g2),
                    left: x.label(dim, left).to_owned(),
                    right: x.label(dim, right).to_owned(),
                });
            }
        }
        out
    }
}

/// Every pair of faces and reconciling maps within the bound of `x` whose
/// images disagree.
pub fn check_naive_coherence(
    x: &FiniteCubicalSet,
    shape: &BoxShape,
    faces: &FaceFamily,
) -> Result<Vec<CoherenceViolation>> {
    shape.check_fits(x)?;
    let aligned = shape.align(faces)?;
    for &c in &aligned {
        x.check_cube(shape.dim() - 1, c)?;
    }
    Ok(NaiveCoherence::new(shape, x.bound()).check(x, &aligned))
}

/// The first applicable face a morphism out of the full name set factors
/// through, if any.
pub fn member_face(shape: &BoxShape, m: &CubeMorphism) -> Option<usize> {
    shape
        .afm()
        .iter()
        .position(|f| m.image(&f.dim) == Some(&Image::End(f.end)))
}

/// Members of the box co-sieve with codomain `k`, in enumeration order.
pub fn sieve_members(shape: &BoxShape, k: &DimSet) -> Vec<CubeMorphism> {
    enumerate_morphisms(shape.full(), k)
        .into_iter()
        .filter(|m| member_face(shape, m).is_some())
        .collect()
}

/// A map from the box co-sieve into a cubical set, given by its components
/// at every canonical codomain within the bound.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GeomBox {
    shape: BoxShape,
    table: BTreeMap<CubeMorphism, CubeId>,
}

impl GeomBox {
    pub fn from_table(shape: BoxShape, table: BTreeMap<CubeMorphism, CubeId>) -> Self {
        GeomBox { shape, table }
    }

    pub fn shape(&self) -> &BoxShape {
        &self.shape
    }

    pub fn table(&self) -> &BTreeMap<CubeMorphism, CubeId> {
        &self.table
    }

    pub fn get(&self, m: &CubeMorphism) -> Option<CubeId> {
        self.table.get(m).copied()
    }
}

/// Missing, extra, or unnatural components of `beta`, one line each.
pub fn check_geom_box(x: &FiniteCubicalSet, beta: &GeomBox) -> Vec<String> {
    let mut out = Vec::new();
    let mut expected = 0;
    for k in 0..=x.bound() {
        for m in sieve_members(&beta.shape, &DimSet::canonical(k)) {
            expected += 1;
            let Some(c) = beta.get(&m) else {
                out.push(format!("missing component at {m}"));
                continue;
            };
            for l in 0..=x.bound() {
                for g in enumerate_morphisms(m.cod(), &DimSet::canonical(l)) {
                    let mg = m.compose(&g).expect("composable");
                    if beta.get(&mg) != x.action(&g, c).ok() {
                        out.push(format!("component at {mg} does not match {g} applied at {m}"));
                    }
                }
            }
        }
    }
    if beta.table.len() != expected {
        out.push(format!(
            "{} components given, the co-sieve has {expected}",
            beta.table.len()
        ));
    }
    out
}

/// The algebraic box read off the generating faces.
pub fn nerve(beta: &GeomBox) -> Result<AlgBox> {
    let shape = beta.shape.clone();
    let faces = shape
        .afm()
        .iter()
        .map(|f| {
            let inst = shape.face_instance(f);
            let sigma = CubeMorphism::renaming(inst.cod(), &DimSet::canonical(inst.cod().len()))?;
            let m = inst.compose(&sigma)?;
            beta.get(&m)
                .ok_or_else(|| Error::Validation(format!("no component at {m}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AlgBox { shape, faces })
}

/// Extends an algebraic box to its co-sieve, factoring each member through
/// its first applicable face.
pub fn realize(x: &FiniteCubicalSet, b: &AlgBox) -> Result<GeomBox> {
    let shape = b.shape();
    shape.check_fits(x)?;
    if let Some(v) = adjacency_violations(x, shape, &b.faces).into_iter().next() {
        return Err(Error::AdjacencyViolation(v.to_string()));
    }
    let mut table = BTreeMap::new();
    for k in 0..=x.bound() {
        for m in enumerate_morphisms(shape.full(), &DimSet::canonical(k)) {
            if let Some(s) = member_face(shape, &m) {
                let h = m.drop_end(&shape.afm()[s].dim).expect("factors through the face");
                let value = x.action(&h, b.faces[s])?;
                table.insert(m, value);
            }
        }
    }
    Ok(GeomBox { shape: shape.clone(), table })
}

/// The faces of a complete cube.
pub fn box_projection(x: &FiniteCubicalSet, shape: &BoxShape, c: CubeId) -> Result<AlgBox> {
    shape.check_fits(x)?;
    x.check_cube(shape.dim(), c)?;
    let faces = shape
        .afm()
        .iter()
        .map(|f| x.action(&shape.face_instance(f), c))
        .collect::<Result<Vec<_>>>()?;
    Ok(AlgBox { shape: shape.clone(), faces })
}

/// Keys of the face maps of a shape, aligned with its faces.
pub fn face_keys(shape: &BoxShape) -> Vec<MorphKey> {
    shape.afm().iter().map(|f| shape.face_instance(f).key()).collect()
}

/// The action of `h : J -> J'` on boxes of shape `(I, J, y)`.
pub fn box_action(x: &FiniteCubicalSet, h: &CubeMorphism, b: &AlgBox) -> Result<AlgBox> {
    let shape = b.shape();
    if h.dom() != shape.extra() {
        return Err(Error::ShapeMismatch(format!(
            "{h} does not start at the extra names {}",
            shape.extra()
        )));
    }
    let target = shape.with_extra(h.cod().clone())?;
    target.check_fits(x)?;
    let keys = box_action_keys(shape, h)?;
    let faces = keys
        .iter()
        .zip(&b.faces)
        .map(|(&k, &c)| x.act(k, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(AlgBox { shape: target, faces })
}

/// For each face, the key of `residual + h` acting on that face.
pub fn box_action_keys(shape: &BoxShape, h: &CubeMorphism) -> Result<Vec<MorphKey>> {
    shape
        .afm()
        .iter()
        .map(|f| Ok(CubeMorphism::augment(&shape.residual(f), h)?.key()))
        .collect()
}

/// The key of `(I + {y}) + h` acting on full cubes.
pub fn full_action_key(shape: &BoxShape, h: &CubeMorphism) -> Result<MorphKey> {
    let fixed = shape.included().with(shape.filling())?;
    Ok(CubeMorphism::augment(&fixed, h)?.key())
}

/// `beta` precomposed with the co-sieve map induced by `h : J -> J'`.
pub fn reindex(x: &FiniteCubicalSet, beta: &GeomBox, h: &CubeMorphism) -> Result<GeomBox> {
    let shape = beta.shape();
    if h.dom() != shape.extra() {
        return Err(Error::ShapeMismatch(format!(
            "{h} does not start at the extra names {}",
            shape.extra()
        )));
    }
    let target = shape.with_extra(h.cod().clone())?;
    let lift = CubeMorphism::augment(&shape.included().with(shape.filling())?, h)?;
    let mut table = BTreeMap::new();
    for k in 0..=x.bound() {
        for m in sieve_members(&target, &DimSet::canonical(k)) {
            let pulled = lift.compose(&m)?;
            let value = beta
                .get(&pulled)
                .ok_or_else(|| Error::Validation(format!("no component at {pulled}")))?;
            table.insert(m, value);
        }
    }
    Ok(GeomBox { shape: target, table })
}

/// All boxes of `shape` whose faces are drawn from `domains` (aligned with
/// the faces), in lexicographic order of their aligned faces.
pub fn enumerate_boxes_from(
    x: &FiniteCubicalSet,
    shape: &BoxShape,
    domains: &[Vec<CubeId>],
) -> Vec<AlgBox> {
    let n = shape.afm().len();
    let mut constraints: Vec<Vec<(usize, MorphKey, MorphKey)>> = vec![Vec::new(); n];
    for (s, t, on_s, on_t) in adjacency_keys(shape) {
        constraints[t].push((s, on_s, on_t));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn go(
        x: &FiniteCubicalSet,
        shape: &BoxShape,
        domains: &[Vec<CubeId>],
        constraints: &[Vec<(usize, MorphKey, MorphKey)>],
        current: &mut Vec<CubeId>,
        out: &mut Vec<AlgBox>,
    ) {
        let t = current.len();
        if t == domains.len() {
            out.push(AlgBox { shape: shape.clone(), faces: current.clone() });
            return;
        }
        for &c in &domains[t] {
            let fits = constraints[t].iter().all(|&(s, on_s, on_t)| {
                x.act(on_s, current[s]).ok() == x.act(on_t, c).ok()
            });
            if fits {
                current.push(c);
                go(x, shape, domains, constraints, current, out);
                current.pop();
            }
        }
    }
    go(x, shape, domains, &constraints, &mut current, &mut out);
    out
}

/// Every box of `shape` in `x`.
pub fn enumerate_boxes(x: &FiniteCubicalSet, shape: &BoxShape) -> Result<Vec<AlgBox>> {
    shape.check_fits(x)?;
    let all: Vec<CubeId> = x.cubes(shape.dim() - 1).collect();
    let domains = vec![all; shape.afm().len()];
    Ok(enumerate_boxes_from(x, shape, &domains))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codiscrete::{codiscrete_interval, minimal_interval};

    fn name(s: &str) -> DimName {
        DimName::new(s).unwrap()
    }

    fn shape(included: &[&str], extra: &[&str], polarity: Polarity) -> BoxShape {
        BoxShape::new(
            DimSet::from_names(included).unwrap(),
            DimSet::from_names(extra).unwrap(),
            name("y"),
            polarity,
        )
        .unwrap()
    }

    fn face(d: &str, e: EndPoint) -> FaceLabel {
        FaceLabel::new(name(d), e)
    }

    #[test]
    fn applicable_faces() {
        let s = shape(&[], &[], Polarity::Positive);
        assert_eq!(s.afm(), [face("y", EndPoint::Zero)]);
        let s = shape(&["x"], &[], Polarity::Positive);
        assert_eq!(
            s.afm(),
            [face("x", EndPoint::Zero), face("x", EndPoint::One), face("y", EndPoint::Zero)]
        );
        let s = shape(&[], &[], Polarity::Negative);
        assert_eq!(s.afm(), [face("y", EndPoint::One)]);
        let s = shape(&["a", "b"], &["c"], Polarity::Negative);
        assert_eq!(s.afm().len(), 5);
    }

    #[test]
    fn shapes_reject_clashing_names() {
        let r = BoxShape::new(
            DimSet::from_names(["x"]).unwrap(),
            DimSet::from_names(["x"]).unwrap(),
            name("y"),
            Polarity::Positive,
        );
        assert_eq!(r.unwrap_err(), Error::NameClash(name("x")));
        assert!(BoxShape::new(
            DimSet::from_names(["y"]).unwrap(),
            DimSet::empty(),
            name("y"),
            Polarity::Positive
        )
        .is_err());
    }

    #[test]
    fn canonical_shapes_fit_their_bound() {
        let shapes = BoxShape::all_canonical(3);
        // (i, j) with i + j <= 2, two polarities each.
        assert_eq!(shapes.len(), 12);
        assert!(shapes.iter().all(|s| s.dim() <= 3));
    }

    #[test]
    fn sieve_basics() {
        let s = shape(&["x"], &[], Polarity::Positive);
        let full = s.full().clone();
        assert!(!sieve_members(&s, &full).contains(&CubeMorphism::identity(&full)));
        let y0 = s.face_instance(&face("y", EndPoint::Zero));
        assert!(sieve_members(&s, &DimSet::from_names(["x"]).unwrap()).contains(&y0));
    }

    /// Does `m` factor as a face instance followed by some morphism?
    fn factors(shape: &BoxShape, m: &CubeMorphism) -> bool {
        shape.afm().iter().any(|f| {
            let inst = shape.face_instance(f);
            enumerate_morphisms(inst.cod(), m.cod())
                .iter()
                .any(|h| inst.compose(h).unwrap() == *m)
        })
    }

    #[test]
    fn sieve_matches_factorization_search() {
        for polarity in Polarity::BOTH {
            for (i, j) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
                let s = BoxShape::canonical(i, j, polarity);
                for k in 0..=3 {
                    let target = DimSet::canonical(k);
                    let brute: Vec<CubeMorphism> = enumerate_morphisms(s.full(), &target)
                        .into_iter()
                        .filter(|m| factors(&s, m))
                        .collect();
                    assert_eq!(sieve_members(&s, &target), brute, "{s} at {k}");
                }
            }
        }
    }

    #[test]
    fn sieve_is_saturated() {
        let s = BoxShape::canonical(1, 1, Polarity::Positive);
        for k in 0..=2 {
            for m in sieve_members(&s, &DimSet::canonical(k)) {
                for l in 0..=2 {
                    for g in enumerate_morphisms(m.cod(), &DimSet::canonical(l)) {
                        assert!(member_face(&s, &m.compose(&g).unwrap()).is_some());
                    }
                }
            }
        }
    }

    fn hinge(x: &FiniteCubicalSet, top: &str) -> FaceFamily {
        // Faces are squares' edges in the x/y plane: x@0 is a line in y,
        // x@1 is a line in y, y@0 is a line in x.
        BTreeMap::from([
            (face("x", EndPoint::Zero), x.lookup(1, "01").unwrap()),
            (face("x", EndPoint::One), x.lookup(1, top).unwrap()),
            (face("y", EndPoint::Zero), x.lookup(1, "01").unwrap()),
        ])
    }

    #[test]
    fn adjacency_examples() {
        let m = minimal_interval(2).unwrap();
        let s = shape(&["x"], &[], Polarity::Positive);
        assert!(check_adjacency(&m, &s, &hinge(&m, "11")).unwrap().is_empty());
        let bad = check_adjacency(&m, &s, &hinge(&m, "00")).unwrap();
        assert_eq!(bad.len(), 1);
        assert_eq!((bad[0].first.clone(), bad[0].second.clone()), (face("x", EndPoint::One), face("y", EndPoint::Zero)));
        assert!(!check_naive_coherence(&m, &s, &hinge(&m, "00")).unwrap().is_empty());
        assert!(matches!(AlgBox::new(&m, s.clone(), &hinge(&m, "00")), Err(Error::AdjacencyViolation(_))));

        let mut wrong = hinge(&m, "11");
        wrong.remove(&face("y", EndPoint::Zero));
        assert!(matches!(check_adjacency(&m, &s, &wrong), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn single_face_boxes_are_coherent() {
        let x = codiscrete_interval(2).unwrap();
        let s = shape(&[], &["j"], Polarity::Positive);
        assert_eq!(NaiveCoherence::new(&s, 2).pair_count(), 0);
        for c in x.cubes(1) {
            let faces = BTreeMap::from([(face("y", EndPoint::Zero), c)]);
            assert!(check_naive_coherence(&x, &s, &faces).unwrap().is_empty());
        }
    }

    #[test]
    fn projection_example() {
        let x = codiscrete_interval(2).unwrap();
        let s = shape(&["x"], &[], Polarity::Positive);
        // Corners (x, y): (0,0)=0, (1,0)=1, (0,1)=1, (1,1)=1.
        let square = x.lookup(2, "0111").unwrap();
        let b = box_projection(&x, &s, square).unwrap();
        assert_eq!(x.label(1, b.face(&face("y", EndPoint::Zero)).unwrap()), "01");
        assert_eq!(x.label(1, b.face(&face("x", EndPoint::Zero)).unwrap()), "01");
        assert_eq!(x.label(1, b.face(&face("x", EndPoint::One)).unwrap()), "11");
    }

    #[test]
    fn realize_on_generators_returns_faces() {
        let x = codiscrete_interval(2).unwrap();
        let s = shape(&["x"], &[], Polarity::Positive);
        let b = AlgBox::new(&x, s.clone(), &hinge(&x, "11")).unwrap();
        let beta = realize(&x, &b).unwrap();
        assert!(check_geom_box(&x, &beta).is_empty());
        for f in s.afm() {
            let inst = s.face_instance(f);
            let sigma = CubeMorphism::renaming(inst.cod(), &DimSet::canonical(1)).unwrap();
            assert_eq!(beta.get(&inst.compose(&sigma).unwrap()), b.face(f));
        }
        assert_eq!(nerve(&beta).unwrap(), b);
    }

    #[test]
    fn box_action_identity_and_composition() {
        let x = codiscrete_interval(3).unwrap();
        let s = BoxShape::canonical(0, 1, Polarity::Positive);
        let j1 = BoxShape::canonical_extra(1);
        let j0 = BoxShape::canonical_extra(0);
        for b in enumerate_boxes(&x, &s).unwrap() {
            assert_eq!(box_action(&x, &CubeMorphism::identity(&j1), &b).unwrap(), b);
            for h1 in enumerate_morphisms(&j1, &j1) {
                let b1 = box_action(&x, &h1, &b).unwrap();
                for h2 in enumerate_morphisms(&j1, &j0) {
                    let both = box_action(&x, &h1.compose(&h2).unwrap(), &b).unwrap();
                    assert_eq!(both, box_action(&x, &h2, &b1).unwrap());
                }
            }
        }
    }

    #[test]
    fn box_enumeration_matches_filtering() {
        let x = codiscrete_interval(2).unwrap();
        let s = shape(&["x"], &[], Polarity::Negative);
        let listed = enumerate_boxes(&x, &s).unwrap();
        let mut brute = Vec::new();
        for a in x.cubes(1) {
            for b in x.cubes(1) {
                for c in x.cubes(1) {
                    let faces = vec![a, b, c];
                    if adjacency_violations(&x, &s, &faces).is_empty() {
                        brute.push(AlgBox::unchecked(s.clone(), faces));
                    }
                }
            }
        }
        assert_eq!(listed, brute);
    }
}
