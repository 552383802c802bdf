//! Dimension-truncated cubical sets.
//!
//! Carriers live only at the canonical sets `{d1..dn}`. A cube over an
//! arbitrary name set `I` is a cube of the carrier at `|I|`, read through the
//! sort-order renaming of `I`, so the action of a named morphism is looked up
//! by its [`MorphKey`]. Every canonical morphism's table is materialized when
//! the set is built.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::dimcat::{
    canonical_keys, enumerate_morphisms, CubeMorphism, DimSet, EndPoint, MorphKey, MAX_BOUND,
};
use crate::error::{Error, Result};

/// Ceiling on the number of table entries a single cubical set may hold.
pub const MAX_TABLE_ENTRIES: usize = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeId(pub u32);

impl CubeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for CubeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// The generating morphisms between canonical sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// `{d1..dn} -> {d1..d(n-1)}` sending `dn` to `end`.
    Face { dim: usize, end: EndPoint },
    /// Exchange of `d(at)` and `d(at+1)` on `{d1..dn}`, `at` one based.
    Swap { dim: usize, at: usize },
    /// `{d1..dn} -> {d1..d(n+1)}`.
    Inclusion { dim: usize },
}

impl Generator {
    pub fn all(bound: usize) -> Vec<Generator> {
        let mut out = Vec::new();
        for n in 0..=bound {
            if n >= 1 {
                for end in EndPoint::BOTH {
                    out.push(Generator::Face { dim: n, end });
                }
            }
            for at in 1..n {
                out.push(Generator::Swap { dim: n, at });
            }
            if n < bound {
                out.push(Generator::Inclusion { dim: n });
            }
        }
        out
    }

    pub fn key(self) -> MorphKey {
        match self {
            Generator::Face { dim, end } => {
                let mut codes: Vec<u8> = (0..dim as u8 - 1).map(|i| i + 2).collect();
                codes.push(end.bit() as u8);
                MorphKey::from_codes(dim - 1, &codes)
            }
            Generator::Swap { dim, at } => {
                let mut codes: Vec<u8> = (0..dim as u8).map(|i| i + 2).collect();
                codes.swap(at - 1, at);
                MorphKey::from_codes(dim, &codes)
            }
            Generator::Inclusion { dim } => {
                let codes: Vec<u8> = (0..dim as u8).map(|i| i + 2).collect();
                MorphKey::from_codes(dim + 1, &codes)
            }
        }
    }

    pub fn morphism(self) -> CubeMorphism {
        CubeMorphism::from_key(self.key())
    }

    pub fn dom_len(self) -> usize {
        match self {
            Generator::Face { dim, .. }
            | Generator::Swap { dim, .. }
            | Generator::Inclusion { dim } => dim,
        }
    }
}

/// Adjacent exchanges whose composite, in order, is the permutation `perm`
/// (position `i` goes to `perm[i]`).
fn swap_word(dim: usize, perm: &mut [usize], out: &mut Vec<Generator>) {
    loop {
        match (0..perm.len().saturating_sub(1)).find(|&k| perm[k] > perm[k + 1]) {
            Some(k) => {
                perm.swap(k, k + 1);
                out.push(Generator::Swap { dim, at: k + 1 });
            }
            None => return,
        }
    }
}

/// A word of generators composing (diagrammatically) to the canonical
/// morphism with the given key: a permutation bringing renamed names to the
/// front, faces on the trailing names, inclusions, then a permutation of the
/// codomain.
pub fn generator_word(key: MorphKey) -> Vec<Generator> {
    let n = key.dom_len();
    let m = key.cod_len();
    let codes: Vec<u8> = key.codes().collect();
    let renamed: Vec<usize> = (0..n).filter(|&i| codes[i] >= 2).collect();
    let specialized: Vec<usize> = (0..n).filter(|&i| codes[i] < 2).collect();
    let r = renamed.len();
    let mut word = Vec::new();

    let mut front = vec![0; n];
    for (a, &i) in renamed.iter().chain(specialized.iter()).enumerate() {
        front[i] = a;
    }
    swap_word(n, &mut front, &mut word);

    for (b, &i) in specialized.iter().enumerate().rev() {
        word.push(Generator::Face { dim: r + b + 1, end: EndPoint::from_bit(codes[i] as usize) });
    }
    for d in r..m {
        word.push(Generator::Inclusion { dim: d });
    }

    let mut targets: Vec<usize> = renamed.iter().map(|&i| codes[i] as usize - 2).collect();
    let mut unused: Vec<usize> = (0..m).filter(|j| !targets.contains(j)).collect();
    targets.append(&mut unused);
    swap_word(m, &mut targets, &mut word);
    word
}

/// One failure of the functor laws.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorViolation {
    /// The morphisms involved: one for an identity law, two for composition.
    pub morphisms: Vec<CubeMorphism>,
    pub cube: String,
    /// Image under the composite (or the identity).
    pub composite: String,
    /// Image computed step by step (or the cube itself).
    pub stepwise: String,
}

impl fmt::Display for FunctorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.morphisms.as_slice() {
            [id] => write!(
                f,
                "identity {id} sends `{}` to `{}`",
                self.cube, self.composite
            ),
            [a, b] => write!(
                f,
                "composite of {a} then {b} sends `{}` to `{}`, steps give `{}`",
                self.cube, self.composite, self.stepwise
            ),
            _ => write!(f, "violation at `{}`", self.cube),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCubicalSet {
    bound: usize,
    labels: Vec<Vec<String>>,
    index: Vec<HashMap<String, CubeId>>,
    tables: HashMap<MorphKey, Vec<CubeId>>,
}

impl FiniteCubicalSet {
    fn validate_labels(bound: usize, labels: &[Vec<String>]) -> Result<Vec<HashMap<String, CubeId>>> {
        if bound > MAX_BOUND {
            return Err(Error::DimensionOverflow { dim: bound, bound: MAX_BOUND });
        }
        if labels.len() != bound + 1 {
            return Err(Error::Validation(format!(
                "expected carriers for dimensions 0..={bound}, found {}",
                labels.len()
            )));
        }
        let mut entries = 0usize;
        for n in 0..=bound {
            for m in 0..=bound {
                entries = entries
                    .saturating_add(canonical_keys(n, m).len().saturating_mul(labels[n].len()));
            }
        }
        if entries > MAX_TABLE_ENTRIES {
            return Err(Error::Validation(format!(
                "action tables would need {entries} entries (limit {MAX_TABLE_ENTRIES})"
            )));
        }
        labels
            .iter()
            .enumerate()
            .map(|(n, ls)| {
                let mut map = HashMap::with_capacity(ls.len());
                for (i, l) in ls.iter().enumerate() {
                    if map.insert(l.clone(), CubeId(i as u32)).is_some() {
                        return Err(Error::Validation(format!(
                            "cube `{l}` appears twice at dimension {n}"
                        )));
                    }
                }
                Ok(map)
            })
            .collect()
    }

    /// Builds a set whose canonical actions are given by `act`.
    pub fn from_fn<F>(bound: usize, labels: Vec<Vec<String>>, mut act: F) -> Result<Self>
    where
        F: FnMut(MorphKey, CubeId) -> CubeId,
    {
        let index = Self::validate_labels(bound, &labels)?;
        let mut tables = HashMap::new();
        for n in 0..=bound {
            for m in 0..=bound {
                for key in canonical_keys(n, m) {
                    let table: Vec<CubeId> =
                        (0..labels[n].len() as u32).map(|c| act(key, CubeId(c))).collect();
                    if let Some(bad) = table.iter().find(|c| c.index() >= labels[m].len()) {
                        return Err(Error::UnknownCube { dim: m, cube: bad.to_string() });
                    }
                    tables.insert(key, table);
                }
            }
        }
        Ok(FiniteCubicalSet { bound, labels, index, tables })
    }

    /// Builds a set from a table for every canonical morphism.
    pub fn from_tables(
        bound: usize,
        labels: Vec<Vec<String>>,
        tables: &HashMap<MorphKey, Vec<CubeId>>,
    ) -> Result<Self> {
        let sizes: Vec<usize> = labels.iter().map(Vec::len).collect();
        let mut missing = None;
        let built = Self::from_fn(bound, labels, |key, c| {
            match tables.get(&key).filter(|t| t.len() == sizes[key.dom_len()]) {
                Some(t) => t[c.index()],
                None => {
                    missing.get_or_insert(key);
                    CubeId(0)
                }
            }
        })?;
        match missing {
            Some(key) => Err(Error::Validation(format!(
                "no total table for {}",
                CubeMorphism::from_key(key)
            ))),
            None => Ok(built),
        }
    }

    /// Builds a set from generator tables, deriving every other table along
    /// [`generator_word`]. The result is not checked against the functor laws.
    pub fn from_generators(
        bound: usize,
        labels: Vec<Vec<String>>,
        generators: &HashMap<Generator, Vec<CubeId>>,
    ) -> Result<Self> {
        Self::validate_labels(bound, &labels)?;
        for g in Generator::all(bound) {
            let table = generators.get(&g).ok_or_else(|| {
                Error::Validation(format!("missing table for generator {}", g.morphism()))
            })?;
            let cod_len = g.key().cod_len();
            if table.len() != labels[g.dom_len()].len()
                || table.iter().any(|c| c.index() >= labels[cod_len].len())
            {
                return Err(Error::Validation(format!(
                    "table for generator {} is not total on its carrier",
                    g.morphism()
                )));
            }
        }
        Self::from_fn(bound, labels, |key, c| {
            generator_word(key)
                .into_iter()
                .fold(c, |c, g| generators[&g][c.index()])
        })
    }

    /// The empty cubical set.
    pub fn empty(bound: usize) -> Result<Self> {
        Self::from_fn(bound, vec![Vec::new(); bound + 1], |_, c| c)
    }

    /// The terminal cubical set: one cube at every dimension.
    pub fn one_point(bound: usize) -> Result<Self> {
        Self::from_fn(bound, vec![vec!["*".to_owned()]; bound + 1], |_, _| CubeId(0))
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn carrier_len(&self, dim: usize) -> usize {
        self.labels.get(dim).map_or(0, Vec::len)
    }

    pub fn carrier_sizes(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn cubes(&self, dim: usize) -> impl Iterator<Item = CubeId> {
        (0..self.carrier_len(dim) as u32).map(CubeId)
    }

    pub fn labels(&self, dim: usize) -> &[String] {
        &self.labels[dim]
    }

    /// # Panics
    /// If `c` is not a cube at `dim`.
    pub fn label(&self, dim: usize, c: CubeId) -> &str {
        &self.labels[dim][c.index()]
    }

    pub fn lookup(&self, dim: usize, label: &str) -> Result<CubeId> {
        self.index
            .get(dim)
            .and_then(|m| m.get(label).copied())
            .ok_or_else(|| Error::UnknownCube { dim, cube: label.to_owned() })
    }

    pub fn check_cube(&self, dim: usize, c: CubeId) -> Result<()> {
        if dim > self.bound {
            return Err(Error::DimensionOverflow { dim, bound: self.bound });
        }
        if c.index() >= self.carrier_len(dim) {
            return Err(Error::UnknownCube { dim, cube: c.to_string() });
        }
        Ok(())
    }

    /// The table of a canonical morphism.
    pub fn table(&self, key: MorphKey) -> Result<&[CubeId]> {
        let worst = key.dom_len().max(key.cod_len());
        if worst > self.bound {
            return Err(Error::DimensionOverflow { dim: worst, bound: self.bound });
        }
        Ok(&self.tables[&key])
    }

    pub fn act(&self, key: MorphKey, c: CubeId) -> Result<CubeId> {
        let table = self.table(key)?;
        table
            .get(c.index())
            .copied()
            .ok_or_else(|| Error::UnknownCube { dim: key.dom_len(), cube: c.to_string() })
    }

    /// `X(f)(c)` for a cube `c` over `dom(f)`.
    pub fn action(&self, f: &CubeMorphism, c: CubeId) -> Result<CubeId> {
        self.act(f.key(), c)
    }

    pub fn generator_table(&self, g: Generator) -> &[CubeId] {
        &self.tables[&g.key()]
    }

    /// Every failure of the identity and composition laws among canonical
    /// morphisms within the bound.
    pub fn check_functor_laws(&self) -> Vec<FunctorViolation> {
        let mut out = Vec::new();
        let keys: Vec<Vec<Vec<MorphKey>>> = (0..=self.bound)
            .map(|a| (0..=self.bound).map(|b| canonical_keys(a, b)).collect())
            .collect();
        for a in 0..=self.bound {
            let id = MorphKey::identity(a);
            for c in self.cubes(a) {
                let image = self.tables[&id][c.index()];
                if image != c {
                    out.push(FunctorViolation {
                        morphisms: vec![CubeMorphism::from_key(id)],
                        cube: self.label(a, c).to_owned(),
                        composite: self.label(a, image).to_owned(),
                        stepwise: self.label(a, c).to_owned(),
                    });
                }
            }
        }
        for a in 0..=self.bound {
            if self.carrier_len(a) == 0 {
                continue;
            }
            for b in 0..=self.bound {
                for &f in &keys[a][b] {
                    let tf = &self.tables[&f];
                    for c in 0..=self.bound {
                        for &g in &keys[b][c] {
                            let tg = &self.tables[&g];
                            let tfg = &self.tables[&f.then(g).expect("composable")];
                            for x in self.cubes(a) {
                                let direct = tfg[x.index()];
                                let steps = tg[tf[x.index()].index()];
                                if direct != steps {
                                    out.push(FunctorViolation {
                                        morphisms: vec![
                                            CubeMorphism::from_key(f),
                                            CubeMorphism::from_key(g),
                                        ],
                                        cube: self.label(a, x).to_owned(),
                                        composite: self.label(c, direct).to_owned(),
                                        stepwise: self.label(c, steps).to_owned(),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// The sub-presheaf of cubes satisfying `keep`. Fails unless the kept
    /// cubes are closed under every action.
    pub fn restrict<F>(&self, keep: F) -> Result<Self>
    where
        F: Fn(usize, CubeId) -> bool,
    {
        let mut renumber: Vec<Vec<Option<CubeId>>> = Vec::with_capacity(self.bound + 1);
        let mut labels = Vec::with_capacity(self.bound + 1);
        for n in 0..=self.bound {
            let mut map = vec![None; self.carrier_len(n)];
            let mut ls = Vec::new();
            for c in self.cubes(n) {
                if keep(n, c) {
                    map[c.index()] = Some(CubeId(ls.len() as u32));
                    ls.push(self.label(n, c).to_owned());
                }
            }
            renumber.push(map);
            labels.push(ls);
        }
        let mut escape = None;
        let kept: Vec<Vec<CubeId>> = (0..=self.bound)
            .map(|n| self.cubes(n).filter(|c| renumber[n][c.index()].is_some()).collect())
            .collect();
        let restricted = Self::from_fn(self.bound, labels, |key, c| {
            let (n, m) = (key.dom_len(), key.cod_len());
            let image = self.tables[&key][kept[n][c.index()].index()];
            match renumber[m][image.index()] {
                Some(id) => id,
                None => {
                    escape.get_or_insert_with(|| {
                        format!(
                            "{} sends kept cube `{}` to `{}`, which is not kept",
                            CubeMorphism::from_key(key),
                            self.label(n, kept[n][c.index()]),
                            self.label(m, image)
                        )
                    });
                    CubeId(0)
                }
            }
        })?;
        match escape {
            Some(msg) => Err(Error::Validation(msg)),
            None => Ok(restricted),
        }
    }
}

/// A map out of the free-standing cube on `shape`, given by its components
/// at every canonical codomain within the bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricCube {
    shape: DimSet,
    table: BTreeMap<CubeMorphism, CubeId>,
}

impl GeometricCube {
    pub fn from_table(shape: DimSet, table: BTreeMap<CubeMorphism, CubeId>) -> Self {
        GeometricCube { shape, table }
    }

    pub fn shape(&self) -> &DimSet {
        &self.shape
    }

    pub fn table(&self) -> &BTreeMap<CubeMorphism, CubeId> {
        &self.table
    }

    pub fn get(&self, f: &CubeMorphism) -> Option<CubeId> {
        self.table.get(f).copied()
    }

    /// The cube on `cod(g)` whose component at `m` is this cube's component
    /// at `g ; m`.
    pub fn reindex(&self, g: &CubeMorphism, bound: usize) -> Result<GeometricCube> {
        if g.dom() != &self.shape {
            return Err(Error::DomainMismatch { left: self.shape.clone(), right: g.dom().clone() });
        }
        let mut table = BTreeMap::new();
        for k in 0..=bound {
            for m in enumerate_morphisms(g.cod(), &DimSet::canonical(k)) {
                let gm = g.compose(&m)?;
                let c = self
                    .get(&gm)
                    .ok_or_else(|| Error::Validation(format!("no component at {gm}")))?;
                table.insert(m, c);
            }
        }
        Ok(GeometricCube { shape: g.cod().clone(), table })
    }
}

/// The Yoneda image of `c`: `f` goes to `X(f)(c)`.
pub fn geometric_of_algebraic(
    x: &FiniteCubicalSet,
    shape: &DimSet,
    c: CubeId,
) -> Result<GeometricCube> {
    x.check_cube(shape.len(), c)?;
    let mut table = BTreeMap::new();
    for k in 0..=x.bound() {
        for f in enumerate_morphisms(shape, &DimSet::canonical(k)) {
            let image = x.action(&f, c)?;
            table.insert(f, image);
        }
    }
    Ok(GeometricCube { shape: shape.clone(), table })
}

/// The component at the renaming of the shape onto canonical names.
pub fn algebraic_of_geometric(kappa: &GeometricCube) -> Result<CubeId> {
    let sigma = CubeMorphism::renaming(&kappa.shape, &DimSet::canonical(kappa.shape.len()))?;
    kappa.get(&sigma).ok_or_else(|| {
        Error::Validation(format!("no component at {sigma}"))
    })
}

/// Entries of `kappa` that are missing or break naturality, one line each.
pub fn check_cube_naturality(x: &FiniteCubicalSet, kappa: &GeometricCube) -> Vec<String> {
    let mut out = Vec::new();
    for k in 0..=x.bound() {
        for f in enumerate_morphisms(&kappa.shape, &DimSet::canonical(k)) {
            let Some(c) = kappa.get(&f) else {
                out.push(format!("missing component at {f}"));
                continue;
            };
            for l in 0..=x.bound() {
                for g in enumerate_morphisms(f.cod(), &DimSet::canonical(l)) {
                    let fg = f.compose(&g).expect("composable");
                    let expected = x.action(&g, c).ok();
                    if kappa.get(&fg) != expected {
                        out.push(format!("component at {fg} does not match {g} applied at {f}"));
                    }
                }
            }
        }
    }
    out
}
