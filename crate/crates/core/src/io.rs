//! JSON file formats for morphisms, cubical sets, boxes, filling tables and
//! maps, plus a DOT rendering of low-dimensional cubes.
//!
//! Cubes are written by label; the order of a carrier list fixes cube ids.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::boxes::{AlgBox, BoxShape, FaceFamily, Polarity};
use crate::cubeset::{CubeId, FiniteCubicalSet, Generator};
use crate::dimcat::{CubeMorphism, DimName, DimSet, EndPoint, FaceLabel, Image};
use crate::error::{Error, Result};
use crate::fib::{CubicalMap, FibAlgBox};
use crate::kan::FillingTable;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismRepr {
    pub dom: Vec<String>,
    pub cod: Vec<String>,
    pub map: BTreeMap<String, String>,
}

fn parse_names(names: &[String]) -> Result<DimSet> {
    if let Some(bad) = names.iter().find(|n| DimName::new(n).is_err()) {
        return Err(Error::Parse(format!("invalid dimension name `{bad}`")));
    }
    DimSet::from_names(names).map_err(|e| Error::Parse(e.to_string()))
}

fn names(dims: &DimSet) -> Vec<String> {
    dims.iter().map(|d| d.as_str().to_owned()).collect()
}

impl From<&CubeMorphism> for MorphismRepr {
    fn from(f: &CubeMorphism) -> Self {
        MorphismRepr {
            dom: names(f.dom()),
            cod: names(f.cod()),
            map: f.assignments().map(|(n, im)| (n.as_str().to_owned(), im.to_string())).collect(),
        }
    }
}

impl MorphismRepr {
    pub fn to_morphism(&self) -> Result<CubeMorphism> {
        let dom = parse_names(&self.dom)?;
        let cod = parse_names(&self.cod)?;
        let assignment = self
            .map
            .iter()
            .map(|(k, v)| {
                let name = DimName::new(k).map_err(|_| Error::Parse(format!("invalid name `{k}`")))?;
                let image = match v.as_str() {
                    "0" => Image::End(EndPoint::Zero),
                    "1" => Image::End(EndPoint::One),
                    other => Image::Dim(
                        DimName::new(other).map_err(|_| Error::Parse(format!("invalid image `{other}`")))?,
                    ),
                };
                Ok((name, image))
            })
            .collect::<Result<Vec<_>>>()?;
        CubeMorphism::new(dom, cod, assignment)
    }
}

pub fn morphism_to_json(f: &CubeMorphism) -> String {
    serde_json::to_string(&MorphismRepr::from(f)).expect("serializable")
}

pub fn morphism_from_json(text: &str) -> Result<CubeMorphism> {
    serde_json::from_str::<MorphismRepr>(text)?.to_morphism()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionRecord {
    pub morphism: MorphismRepr,
    pub table: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CubeSetRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub version: Option<u32>,
    pub bound: usize,
    pub carriers: BTreeMap<String, Vec<String>>,
    pub actions: Vec<ActionRecord>,
}

impl From<&FiniteCubicalSet> for CubeSetRepr {
    fn from(x: &FiniteCubicalSet) -> Self {
        let carriers = (0..=x.bound()).map(|n| (n.to_string(), x.labels(n).to_vec())).collect();
        let actions = Generator::all(x.bound())
            .into_iter()
            .map(|g| {
                let key = g.key();
                let table = x
                    .cubes(key.dom_len())
                    .map(|c| {
                        let image = x.act(key, c).expect("within bound");
                        (x.label(key.dom_len(), c).to_owned(), x.label(key.cod_len(), image).to_owned())
                    })
                    .collect();
                ActionRecord { morphism: MorphismRepr::from(&g.morphism()), table }
            })
            .collect();
        CubeSetRepr { version: Some(FORMAT_VERSION), bound: x.bound(), carriers, actions }
    }
}

impl CubeSetRepr {
    /// Builds the set from its generator records, checks every other record
    /// against the derived action, then checks the functor laws.
    pub fn to_cubeset(&self) -> Result<FiniteCubicalSet> {
        if let Some(v) = self.version.filter(|&v| v != FORMAT_VERSION) {
            return Err(Error::Parse(format!("unsupported format version {v}")));
        }
        let mut labels = Vec::with_capacity(self.bound + 1);
        for n in 0..=self.bound {
            let carrier = self
                .carriers
                .get(&n.to_string())
                .ok_or_else(|| Error::Parse(format!("no carrier for dimension {n}")))?;
            labels.push(carrier.clone());
        }
        if let Some(k) = self
            .carriers
            .keys()
            .find(|k| k.parse::<usize>().map_or(true, |n| n > self.bound))
        {
            return Err(Error::Parse(format!("unexpected carrier key `{k}`")));
        }
        let index: Vec<HashMap<&str, CubeId>> = labels
            .iter()
            .map(|ls| ls.iter().enumerate().map(|(i, l)| (l.as_str(), CubeId(i as u32))).collect())
            .collect();
        let resolve = |dim: usize, label: &str| {
            index[dim]
                .get(label)
                .copied()
                .ok_or_else(|| Error::UnknownCube { dim, cube: label.to_owned() })
        };
        let generators: HashMap<_, _> =
            Generator::all(self.bound).into_iter().map(|g| (g.key(), g)).collect();
        let mut records = Vec::with_capacity(self.actions.len());
        for rec in &self.actions {
            let f = rec.morphism.to_morphism()?;
            let (n, m) = (f.dom().len(), f.cod().len());
            if !f.dom().is_canonical() || !f.cod().is_canonical() {
                return Err(Error::Validation(format!("{f} is not over canonical names")));
            }
            if n > self.bound || m > self.bound {
                return Err(Error::DimensionOverflow { dim: n.max(m), bound: self.bound });
            }
            if rec.table.len() != labels[n].len() {
                return Err(Error::Validation(format!("table for {f} is not total")));
            }
            let mut table = vec![CubeId(0); labels[n].len()];
            for (src, dst) in &rec.table {
                table[resolve(n, src)?.index()] = resolve(m, dst)?;
            }
            records.push((f, table));
        }
        let gen_tables: HashMap<Generator, Vec<CubeId>> = records
            .iter()
            .filter_map(|(f, t)| generators.get(&f.key()).map(|&g| (g, t.clone())))
            .collect();
        let x = FiniteCubicalSet::from_generators(self.bound, labels, &gen_tables)?;
        for (f, table) in &records {
            let derived = x.table(f.key())?;
            if let Some(c) = (0..table.len()).find(|&c| derived[c] != table[c]) {
                let c = CubeId(c as u32);
                return Err(Error::Validation(format!(
                    "{f} sends `{}` to `{}`, its generators give `{}`",
                    x.label(f.dom().len(), c),
                    x.label(f.cod().len(), table[c.index()]),
                    x.label(f.cod().len(), derived[c.index()])
                )));
            }
        }
        if let Some(v) = x.check_functor_laws().into_iter().next() {
            return Err(Error::Validation(v.to_string()));
        }
        Ok(x)
    }
}

pub fn cubeset_to_json(x: &FiniteCubicalSet) -> String {
    serde_json::to_string_pretty(&CubeSetRepr::from(x)).expect("serializable")
}

pub fn cubeset_from_json(text: &str) -> Result<FiniteCubicalSet> {
    serde_json::from_str::<CubeSetRepr>(text)?.to_cubeset()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapeRepr {
    pub included: Vec<String>,
    pub extra: Vec<String>,
    pub filling: String,
    pub polarity: String,
}

impl From<&BoxShape> for ShapeRepr {
    fn from(s: &BoxShape) -> Self {
        ShapeRepr {
            included: names(s.included()),
            extra: names(s.extra()),
            filling: s.filling().as_str().to_owned(),
            polarity: s.polarity().as_str().to_owned(),
        }
    }
}

impl ShapeRepr {
    pub fn to_shape(&self) -> Result<BoxShape> {
        let polarity = match self.polarity.as_str() {
            "positive" => Polarity::Positive,
            "negative" => Polarity::Negative,
            other => return Err(Error::Parse(format!("unknown polarity `{other}`"))),
        };
        let filling = DimName::new(&self.filling)
            .map_err(|_| Error::Parse(format!("invalid name `{}`", self.filling)))?;
        BoxShape::new(parse_names(&self.included)?, parse_names(&self.extra)?, filling, polarity)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoxRepr {
    pub shape: ShapeRepr,
    pub faces: BTreeMap<String, String>,
}

impl BoxRepr {
    pub fn of(x: &FiniteCubicalSet, b: &AlgBox) -> Self {
        let dim = b.shape().dim() - 1;
        BoxRepr {
            shape: ShapeRepr::from(b.shape()),
            faces: b.faces().map(|(f, c)| (f.to_string(), x.label(dim, c).to_owned())).collect(),
        }
    }

    /// Resolves labels and checks the adjacency condition.
    pub fn to_box(&self, x: &FiniteCubicalSet) -> Result<AlgBox> {
        let shape = self.shape.to_shape()?;
        let dim = shape.dim() - 1;
        if dim > x.bound() {
            return Err(Error::DimensionOverflow { dim: shape.dim(), bound: x.bound() });
        }
        let mut faces = FaceFamily::new();
        for (k, v) in &self.faces {
            let label: FaceLabel = k.parse().map_err(|_| Error::Parse(format!("invalid face key `{k}`")))?;
            faces.insert(label, x.lookup(dim, v)?);
        }
        AlgBox::new(x, shape, &faces)
    }
}

pub fn box_to_json(x: &FiniteCubicalSet, b: &AlgBox) -> String {
    serde_json::to_string_pretty(&BoxRepr::of(x, b)).expect("serializable")
}

pub fn box_from_json(x: &FiniteCubicalSet, text: &str) -> Result<AlgBox> {
    serde_json::from_str::<BoxRepr>(text)?.to_box(x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<String>,
    pub shape: ShapeRepr,
    pub faces: BTreeMap<String, String>,
    pub filler: String,
}

pub fn table_to_json(x: &FiniteCubicalSet, table: &FillingTable) -> String {
    let records: Vec<TableRecord> = table
        .iter()
        .map(|(b, c)| {
            let BoxRepr { shape, faces } = BoxRepr::of(x, b);
            let filler = x.label(b.shape().dim(), c).to_owned();
            TableRecord { index: None, shape, faces, filler }
        })
        .collect();
    serde_json::to_string_pretty(&records).expect("serializable")
}

fn record_box(x: &FiniteCubicalSet, rec: &TableRecord) -> Result<(AlgBox, CubeId)> {
    let b = BoxRepr { shape: rec.shape.clone(), faces: rec.faces.clone() }.to_box(x)?;
    let c = x.lookup(b.shape().dim(), &rec.filler)?;
    Ok((b, c))
}

/// Reads a table; each filler must be a filler of its box.
pub fn table_from_json(x: &FiniteCubicalSet, text: &str) -> Result<FillingTable> {
    let records: Vec<TableRecord> = serde_json::from_str(text)?;
    let mut table = FillingTable::new();
    for rec in &records {
        if rec.index.is_some() {
            return Err(Error::Parse("plain tables carry no index".into()));
        }
        let (b, c) = record_box(x, rec)?;
        if table.insert(b, c).is_some() {
            return Err(Error::Validation("a box appears twice".into()));
        }
    }
    Ok(table)
}

pub fn fib_table_to_json(p: &CubicalMap, table: &FillingTable<FibAlgBox>) -> String {
    let records: Vec<TableRecord> = table
        .iter()
        .map(|(fb, c)| {
            let BoxRepr { shape, faces } = BoxRepr::of(p.source(), &fb.boxed);
            let dim = fb.shape().dim();
            TableRecord {
                index: Some(p.target().label(dim, fb.index).to_owned()),
                shape,
                faces,
                filler: p.source().label(dim, c).to_owned(),
            }
        })
        .collect();
    serde_json::to_string_pretty(&records).expect("serializable")
}

pub fn fib_table_from_json(p: &CubicalMap, text: &str) -> Result<FillingTable<FibAlgBox>> {
    let records: Vec<TableRecord> = serde_json::from_str(text)?;
    let mut table = FillingTable::new();
    for rec in &records {
        let (boxed, c) = record_box(p.source(), rec)?;
        let label = rec.index.as_deref().ok_or_else(|| Error::Parse("record without index".into()))?;
        let index = p.target().lookup(boxed.shape().dim(), label)?;
        if table.insert(FibAlgBox { index, boxed }, c).is_some() {
            return Err(Error::Validation("a box appears twice".into()));
        }
    }
    Ok(table)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapRepr {
    pub source: CubeSetRepr,
    pub target: CubeSetRepr,
    pub components: BTreeMap<String, BTreeMap<String, String>>,
}

impl From<&CubicalMap> for MapRepr {
    fn from(p: &CubicalMap) -> Self {
        let (y, x) = (p.source(), p.target());
        let components = (0..=y.bound())
            .map(|n| {
                let comp = y
                    .cubes(n)
                    .map(|c| (y.label(n, c).to_owned(), x.label(n, p.component(n, c)).to_owned()))
                    .collect();
                (n.to_string(), comp)
            })
            .collect();
        MapRepr { source: CubeSetRepr::from(y), target: CubeSetRepr::from(x), components }
    }
}

impl MapRepr {
    /// Loads both sets, resolves components and checks naturality.
    pub fn to_map(&self) -> Result<CubicalMap> {
        let y = self.source.to_cubeset()?;
        let x = self.target.to_cubeset()?;
        let mut components = Vec::with_capacity(y.bound() + 1);
        for n in 0..=y.bound() {
            let comp = self
                .components
                .get(&n.to_string())
                .ok_or_else(|| Error::Parse(format!("no component for dimension {n}")))?;
            if comp.len() != y.carrier_len(n) {
                return Err(Error::Validation(format!("component at dimension {n} is not total")));
            }
            let mut out = vec![CubeId(0); y.carrier_len(n)];
            for (src, dst) in comp {
                out[y.lookup(n, src)?.index()] = x.lookup(n, dst)?;
            }
            components.push(out);
        }
        let p = CubicalMap::new(y, x, components)?;
        if let Some(v) = crate::fib::check_map_naturality(&p).into_iter().next() {
            return Err(Error::Validation(v.to_string()));
        }
        Ok(p)
    }
}

pub fn map_to_json(p: &CubicalMap) -> String {
    serde_json::to_string_pretty(&MapRepr::from(p)).expect("serializable")
}

pub fn map_from_json(text: &str) -> Result<CubicalMap> {
    serde_json::from_str::<MapRepr>(text)?.to_map()
}

/// A DOT graph of the cubes up to `max_dim` with an edge to both faces in
/// the last name.
pub fn to_dot(x: &FiniteCubicalSet, max_dim: usize) -> String {
    let top = max_dim.min(x.bound());
    let mut out = String::from("digraph cubes {\n  rankdir=BT;\n  node [shape=box, fontname=monospace];\n");
    for n in 0..=top {
        let _ = writeln!(out, "  subgraph dim{n} {{\n    rank=same;");
        for c in x.cubes(n) {
            let _ = writeln!(out, "    \"{n}:{}\" [label=\"{}\"];", c.index(), x.label(n, c));
        }
        out.push_str("  }\n");
    }
    for n in 1..=top {
        for g in Generator::all(x.bound()) {
            let Generator::Face { dim, end } = g else { continue };
            if dim != n {
                continue;
            }
            for c in x.cubes(n) {
                let face = x.act(g.key(), c).expect("within bound");
                let _ = writeln!(
                    out,
                    "  \"{n}:{}\" -> \"{}:{}\" [label=\"{}\"];",
                    c.index(),
                    n - 1,
                    face.index(),
                    end
                );
            }
        }
    }
    out.push_str("}\n");
    out
}
