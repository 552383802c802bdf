//! The cube category on named dimensions.
//!
//! Objects are finite sets of dimension names. A morphism `I -> J` sends every
//! name of `I` either to a name of `J` or to one of the two endpoints, and no
//! two names of `I` land on the same name of `J`. Composition passes endpoints
//! through unchanged and otherwise composes as functions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest truncation bound any cubical set may use.
///
/// Action tables are keyed by a packed [`MorphKey`], which holds at most this
/// many names per side.
pub const MAX_BOUND: usize = 6;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DimName(Arc<str>);

impl DimName {
    /// Names are case-sensitive identifiers. `0` and `1` are reserved for the
    /// endpoints, and `@` separates a name from an end in face keys.
    pub fn new(name: &str) -> Result<Self> {
        let valid = !name.is_empty()
            && name != "0"
            && name != "1"
            && name
                .chars()
                .all(|c| c.is_alphanumeric() || c == '_' || c == '\'' || c == '-');
        if valid {
            Ok(DimName(Arc::from(name)))
        } else {
            Err(Error::InvalidName(name.to_owned()))
        }
    }

    /// The `index`-th canonical name (`d1`, `d2`, ...), zero based.
    pub fn canonical(index: usize) -> Self {
        DimName(Arc::from(format!("d{}", index + 1).as_str()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for DimName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DimName::new(s)
    }
}

impl fmt::Display for DimName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for DimName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A finite set of names, kept sorted.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DimSet(Vec<DimName>);

impl DimSet {
    pub fn empty() -> Self {
        DimSet(Vec::new())
    }

    /// `{d1, ..., dn}`.
    pub fn canonical(n: usize) -> Self {
        DimSet((0..n).map(DimName::canonical).collect())
    }

    /// Builds a set from names, rejecting duplicates.
    pub fn from_names<I>(names: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        let mut out: Vec<DimName> = names
            .into_iter()
            .map(|n| DimName::new(n.as_ref()))
            .collect::<Result<_>>()?;
        out.sort();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NameClash(w[0].clone()));
        }
        Ok(DimSet(out))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, DimName> {
        self.0.iter()
    }

    pub fn contains(&self, name: &DimName) -> bool {
        self.0.binary_search(name).is_ok()
    }

    /// Sort position of `name`, if present.
    pub fn position(&self, name: &DimName) -> Option<usize> {
        self.0.binary_search(name).ok()
    }

    pub fn get(&self, index: usize) -> Option<&DimName> {
        self.0.get(index)
    }

    pub fn is_canonical(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, n)| *n == DimName::canonical(i))
    }

    /// `self + {name}`; the name must be fresh.
    pub fn with(&self, name: &DimName) -> Result<Self> {
        match self.0.binary_search(name) {
            Ok(_) => Err(Error::NameClash(name.clone())),
            Err(at) => {
                let mut names = self.0.clone();
                names.insert(at, name.clone());
                Ok(DimSet(names))
            }
        }
    }

    /// `self - {name}`; a no-op when absent.
    pub fn without(&self, name: &DimName) -> Self {
        DimSet(self.0.iter().filter(|n| *n != name).cloned().collect())
    }

    /// Disjoint union.
    pub fn union(&self, other: &DimSet) -> Result<Self> {
        if let Some(n) = other.iter().find(|n| self.contains(n)) {
            return Err(Error::NameClash(n.clone()));
        }
        let mut names: Vec<DimName> = self.0.iter().chain(other.iter()).cloned().collect();
        names.sort();
        Ok(DimSet(names))
    }

    pub fn is_disjoint(&self, other: &DimSet) -> bool {
        other.iter().all(|n| !self.contains(n))
    }
}

impl FromIterator<DimName> for DimSet {
    fn from_iter<T: IntoIterator<Item = DimName>>(iter: T) -> Self {
        let mut names: Vec<DimName> = iter.into_iter().collect();
        names.sort();
        names.dedup();
        DimSet(names)
    }
}

impl<'a> IntoIterator for &'a DimSet {
    type Item = &'a DimName;
    type IntoIter = std::slice::Iter<'a, DimName>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for DimSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for DimSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EndPoint {
    Zero,
    One,
}

impl EndPoint {
    pub const BOTH: [EndPoint; 2] = [EndPoint::Zero, EndPoint::One];

    pub fn flip(self) -> Self {
        match self {
            EndPoint::Zero => EndPoint::One,
            EndPoint::One => EndPoint::Zero,
        }
    }

    pub fn bit(self) -> usize {
        match self {
            EndPoint::Zero => 0,
            EndPoint::One => 1,
        }
    }

    pub fn from_bit(bit: usize) -> Self {
        if bit == 0 {
            EndPoint::Zero
        } else {
            EndPoint::One
        }
    }
}

impl fmt::Display for EndPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// Where a morphism sends one name. The derived order (names first, then
/// `Zero`, then `One`) is the enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Image {
    Dim(DimName),
    End(EndPoint),
}

impl fmt::Display for Image {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Image::Dim(n) => write!(f, "{n}"),
            Image::End(e) => write!(f, "{e}"),
        }
    }
}

/// Packed description of a morphism up to renaming of both ends by sort order.
///
/// Two morphisms share a key exactly when they agree after renaming their
/// domain and codomain to canonical names. Action tables are keyed by it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MorphKey(u64);

impl MorphKey {
    const CODE_BITS: u32 = 4;

    /// `codes[i]` is 0 or 1 for an endpoint, `2 + j` for the `j`-th codomain name.
    pub fn from_codes(cod_len: usize, codes: &[u8]) -> Self {
        debug_assert!(codes.len() <= MAX_BOUND && cod_len <= MAX_BOUND);
        let mut packed = (codes.len() as u64) | ((cod_len as u64) << 4);
        for (i, &c) in codes.iter().enumerate() {
            packed |= (c as u64) << (8 + Self::CODE_BITS * i as u32);
        }
        MorphKey(packed)
    }

    pub fn dom_len(self) -> usize {
        (self.0 & 0xf) as usize
    }

    pub fn cod_len(self) -> usize {
        ((self.0 >> 4) & 0xf) as usize
    }

    pub fn code(self, i: usize) -> u8 {
        ((self.0 >> (8 + Self::CODE_BITS * i as u32)) & 0xf) as u8
    }

    pub fn codes(self) -> impl Iterator<Item = u8> {
        (0..self.dom_len()).map(move |i| self.code(i))
    }

    pub fn identity(n: usize) -> Self {
        let codes: Vec<u8> = (0..n as u8).map(|i| i + 2).collect();
        MorphKey::from_codes(n, &codes)
    }

    /// Diagrammatic composition of keys; `None` when the ends do not meet.
    pub fn then(self, next: MorphKey) -> Option<MorphKey> {
        if self.cod_len() != next.dom_len() {
            return None;
        }
        let mut codes = [0u8; MAX_BOUND];
        for (i, c) in self.codes().enumerate() {
            codes[i] = if c < 2 { c } else { next.code(c as usize - 2) };
        }
        Some(MorphKey::from_codes(next.cod_len(), &codes[..self.dom_len()]))
    }
}

/// Keys of every morphism `{d1..dn} -> {d1..dm}`, in the order of
/// [`enumerate_morphisms`].
pub fn canonical_keys(n: usize, m: usize) -> Vec<MorphKey> {
    let alternatives: Vec<u8> = (0..m as u8).map(|j| j + 2).chain([0, 1]).collect();
    let mut out = Vec::new();
    let mut codes = Vec::with_capacity(n);
    fn go(n: usize, m: usize, alternatives: &[u8], codes: &mut Vec<u8>, out: &mut Vec<MorphKey>) {
        if codes.len() == n {
            out.push(MorphKey::from_codes(m, codes));
            return;
        }
        for &a in alternatives {
            if a >= 2 && codes.contains(&a) {
                continue;
            }
            codes.push(a);
            go(n, m, alternatives, codes, out);
            codes.pop();
        }
    }
    go(n, m, &alternatives, &mut codes, &mut out);
    out
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeMorphism {
    dom: DimSet,
    cod: DimSet,
    /// `images[i]` is the image of the `i`-th domain name in sort order.
    images: Vec<Image>,
}

impl CubeMorphism {
    /// Builds a morphism from an assignment for every domain name.
    pub fn new<I>(dom: DimSet, cod: DimSet, assignment: I) -> Result<Self>
    where
        I: IntoIterator<Item = (DimName, Image)>,
    {
        let mut images: Vec<Option<Image>> = vec![None; dom.len()];
        for (name, image) in assignment {
            let pos = dom.position(&name).ok_or_else(|| {
                Error::InvalidMorphism(format!("`{name}` is not in the domain {dom}"))
            })?;
            if images[pos].replace(image).is_some() {
                return Err(Error::InvalidMorphism(format!("`{name}` is assigned twice")));
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, im)| {
                im.ok_or_else(|| {
                    Error::InvalidMorphism(format!("`{}` has no image", dom.0[i]))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(dom, cod, images)
    }

    /// Builds a morphism from images listed in domain sort order.
    pub fn from_images(dom: DimSet, cod: DimSet, images: Vec<Image>) -> Result<Self> {
        if images.len() != dom.len() {
            return Err(Error::InvalidMorphism(format!(
                "{} images for a domain of size {}",
                images.len(),
                dom.len()
            )));
        }
        let mut hit = vec![false; cod.len()];
        for image in &images {
            if let Image::Dim(n) = image {
                let pos = cod.position(n).ok_or_else(|| {
                    Error::InvalidMorphism(format!("`{n}` is not in the codomain {cod}"))
                })?;
                if std::mem::replace(&mut hit[pos], true) {
                    return Err(Error::InvalidMorphism(format!(
                        "two names are sent to `{n}`"
                    )));
                }
            }
        }
        Ok(CubeMorphism { dom, cod, images })
    }

    pub fn identity(dims: &DimSet) -> Self {
        CubeMorphism {
            dom: dims.clone(),
            cod: dims.clone(),
            images: dims.iter().cloned().map(Image::Dim).collect(),
        }
    }

    /// The face `dims + {x} -> dims` setting `x` to `end`.
    pub fn face(dims: &DimSet, x: &DimName, end: EndPoint) -> Result<Self> {
        let dom = dims.with(x)?;
        let images = dom
            .iter()
            .map(|n| if n == x { Image::End(end) } else { Image::Dim(n.clone()) })
            .collect();
        Ok(CubeMorphism { dom, cod: dims.clone(), images })
    }

    /// The degeneracy `dims -> dims + {x}`.
    pub fn inclusion(dims: &DimSet, x: &DimName) -> Result<Self> {
        let cod = dims.with(x)?;
        Ok(CubeMorphism {
            dom: dims.clone(),
            cod,
            images: dims.iter().cloned().map(Image::Dim).collect(),
        })
    }

    /// The exchange of `x` and `y` on `dims + {x, y}`.
    pub fn swap(dims: &DimSet, x: &DimName, y: &DimName) -> Result<Self> {
        if x == y {
            return Err(Error::NameClash(x.clone()));
        }
        let all = dims.with(x)?.with(y)?;
        let images = all
            .iter()
            .map(|n| {
                if n == x {
                    Image::Dim(y.clone())
                } else if n == y {
                    Image::Dim(x.clone())
                } else {
                    Image::Dim(n.clone())
                }
            })
            .collect();
        Ok(CubeMorphism { dom: all.clone(), cod: all, images })
    }

    /// Extends `self` to `dom + {x} -> cod + {y}` by sending `x` to `y`.
    pub fn extend(&self, x: &DimName, y: &DimName) -> Result<Self> {
        let dom = self.dom.with(x)?;
        let cod = self.cod.with(y)?;
        let images = dom
            .iter()
            .map(|n| {
                if n == x {
                    Image::Dim(y.clone())
                } else {
                    self.image(n).cloned().expect("name of the old domain")
                }
            })
            .collect();
        Ok(CubeMorphism { dom, cod, images })
    }

    /// `fixed + h : fixed + dom(h) -> fixed + cod(h)`, the identity on `fixed`.
    pub fn augment(fixed: &DimSet, h: &CubeMorphism) -> Result<Self> {
        let dom = fixed.union(&h.dom)?;
        let cod = fixed.union(&h.cod)?;
        let images = dom
            .iter()
            .map(|n| match h.image(n) {
                Some(im) => im.clone(),
                None => Image::Dim(n.clone()),
            })
            .collect();
        Ok(CubeMorphism { dom, cod, images })
    }

    /// The order-preserving bijection between two sets of the same size.
    pub fn renaming(dom: &DimSet, cod: &DimSet) -> Result<Self> {
        if dom.len() != cod.len() {
            return Err(Error::InvalidMorphism(format!(
                "cannot rename {dom} onto {cod}"
            )));
        }
        Ok(CubeMorphism {
            dom: dom.clone(),
            cod: cod.clone(),
            images: cod.iter().cloned().map(Image::Dim).collect(),
        })
    }

    pub fn dom(&self) -> &DimSet {
        &self.dom
    }

    pub fn cod(&self) -> &DimSet {
        &self.cod
    }

    pub fn image(&self, name: &DimName) -> Option<&Image> {
        self.dom.position(name).map(|i| &self.images[i])
    }

    /// `(name, image)` pairs in domain order.
    pub fn assignments(&self) -> impl Iterator<Item = (&DimName, &Image)> {
        self.dom.iter().zip(self.images.iter())
    }

    /// Diagrammatic composition: first `self`, then `next`.
    pub fn compose(&self, next: &CubeMorphism) -> Result<Self> {
        if self.cod != next.dom {
            return Err(Error::DomainMismatch {
                left: self.cod.clone(),
                right: next.dom.clone(),
            });
        }
        let images = self
            .images
            .iter()
            .map(|im| match im {
                Image::Dim(n) => next.image(n).cloned().expect("name of the middle set"),
                Image::End(e) => Image::End(*e),
            })
            .collect();
        Ok(CubeMorphism { dom: self.dom.clone(), cod: next.cod.clone(), images })
    }

    /// The same morphism with its codomain renamed onto `{d1..dm}`.
    pub fn canonical_cod(&self) -> Self {
        let cod = DimSet::canonical(self.cod.len());
        let images = self
            .images
            .iter()
            .map(|im| match im {
                Image::Dim(n) => Image::Dim(DimName::canonical(self.cod.position(n).unwrap())),
                Image::End(e) => Image::End(*e),
            })
            .collect();
        CubeMorphism { dom: self.dom.clone(), cod, images }
    }

    /// Restricts to `dom - {x}`, provided `x` is sent to an endpoint.
    ///
    /// This is the unique `h` with `face(x, e) ; h == self`.
    pub fn drop_end(&self, x: &DimName) -> Option<Self> {
        let pos = self.dom.position(x)?;
        if !matches!(self.images[pos], Image::End(_)) {
            return None;
        }
        let mut images = self.images.clone();
        images.remove(pos);
        Some(CubeMorphism { dom: self.dom.without(x), cod: self.cod.clone(), images })
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod
            && self
                .assignments()
                .all(|(n, im)| matches!(im, Image::Dim(m) if m == n))
    }

    pub fn key(&self) -> MorphKey {
        let mut codes = [0u8; MAX_BOUND];
        for (i, im) in self.images.iter().enumerate() {
            codes[i] = match im {
                Image::End(e) => e.bit() as u8,
                Image::Dim(n) => 2 + self.cod.position(n).unwrap() as u8,
            };
        }
        MorphKey::from_codes(self.cod.len(), &codes[..self.images.len()])
    }

    /// The canonical morphism `{d1..dn} -> {d1..dm}` with the given key.
    pub fn from_key(key: MorphKey) -> Self {
        let dom = DimSet::canonical(key.dom_len());
        let cod = DimSet::canonical(key.cod_len());
        let images = key
            .codes()
            .map(|c| match c {
                0 => Image::End(EndPoint::Zero),
                1 => Image::End(EndPoint::One),
                c => Image::Dim(DimName::canonical(c as usize - 2)),
            })
            .collect();
        CubeMorphism { dom, cod, images }
    }
}

impl fmt::Display for CubeMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, (n, im)) in self.assignments().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{n}->{im}")?;
        }
        write!(f, ") : {} -> {}", self.dom, self.cod)
    }
}

impl fmt::Debug for CubeMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Specializations, then a bijective renaming, then inclusions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub specializations: BTreeMap<DimName, EndPoint>,
    pub renaming: BTreeMap<DimName, DimName>,
    pub inclusions: DimSet,
}

impl CanonicalForm {
    pub fn dom(&self) -> DimSet {
        self.specializations
            .keys()
            .chain(self.renaming.keys())
            .cloned()
            .collect()
    }

    pub fn cod(&self) -> DimSet {
        self.renaming
            .values()
            .chain(self.inclusions.iter())
            .cloned()
            .collect()
    }

    /// The three factors as morphisms, composable in order.
    pub fn factors(&self) -> (CubeMorphism, CubeMorphism, CubeMorphism) {
        let dom = self.dom();
        let kept: DimSet = self.renaming.keys().cloned().collect();
        let image: DimSet = self.renaming.values().cloned().collect();
        let specialize = CubeMorphism {
            images: dom
                .iter()
                .map(|n| match self.specializations.get(n) {
                    Some(e) => Image::End(*e),
                    None => Image::Dim(n.clone()),
                })
                .collect(),
            dom,
            cod: kept.clone(),
        };
        let rename = CubeMorphism {
            images: kept
                .iter()
                .map(|n| Image::Dim(self.renaming[n].clone()))
                .collect(),
            dom: kept,
            cod: image.clone(),
        };
        let include = CubeMorphism {
            images: image.iter().cloned().map(Image::Dim).collect(),
            dom: image,
            cod: self.cod(),
        };
        (specialize, rename, include)
    }

    pub fn recompose(&self) -> CubeMorphism {
        let (s, r, i) = self.factors();
        s.compose(&r)
            .and_then(|sr| sr.compose(&i))
            .expect("factors are composable")
    }
}

pub fn canonical_form(f: &CubeMorphism) -> CanonicalForm {
    let mut specializations = BTreeMap::new();
    let mut renaming = BTreeMap::new();
    for (n, im) in f.assignments() {
        match im {
            Image::End(e) => {
                specializations.insert(n.clone(), *e);
            }
            Image::Dim(m) => {
                renaming.insert(n.clone(), m.clone());
            }
        }
    }
    let inclusions = f
        .cod
        .iter()
        .filter(|m| !renaming.values().any(|v| v == *m))
        .cloned()
        .collect();
    CanonicalForm { specializations, renaming, inclusions }
}

/// A face map named independently of its ambient dimensions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceLabel {
    pub dim: DimName,
    pub end: EndPoint,
}

impl FaceLabel {
    pub fn new(dim: DimName, end: EndPoint) -> Self {
        FaceLabel { dim, end }
    }

    /// The instance `ambient -> ambient - {dim}`.
    pub fn instance(&self, ambient: &DimSet) -> Result<CubeMorphism> {
        if !ambient.contains(&self.dim) {
            return Err(Error::InvalidMorphism(format!(
                "face {self} does not apply to {ambient}"
            )));
        }
        CubeMorphism::face(&ambient.without(&self.dim), &self.dim, self.end)
    }
}

impl fmt::Display for FaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.dim, self.end)
    }
}

impl fmt::Debug for FaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FaceLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (dim, end) = s
            .rsplit_once('@')
            .ok_or_else(|| Error::Parse(format!("face key `{s}` is not `<dim>@<0|1>`")))?;
        let end = match end {
            "0" => EndPoint::Zero,
            "1" => EndPoint::One,
            _ => return Err(Error::Parse(format!("face key `{s}` has a bad end"))),
        };
        Ok(FaceLabel { dim: DimName::new(dim)?, end })
    }
}

/// Distinct-name faces commute; faces on the same name never do.
pub fn orthogonal(f1: &FaceLabel, f2: &FaceLabel) -> bool {
    f1.dim != f2.dim
}

/// Searches for `g1`, `g2` with `f1 ; g1 == f2 ; g2`, trying codomains
/// `{d1..dk}` for `k = 0..=bound` in order. Identical morphisms are
/// reconciled by identities.
pub fn reconcilable(
    f1: &CubeMorphism,
    f2: &CubeMorphism,
    bound: usize,
) -> Result<Option<(CubeMorphism, CubeMorphism)>> {
    if f1.dom != f2.dom {
        return Err(Error::DomainMismatch { left: f1.dom.clone(), right: f2.dom.clone() });
    }
    if f1 == f2 {
        return Ok(Some((
            CubeMorphism::identity(&f1.cod),
            CubeMorphism::identity(&f2.cod),
        )));
    }
    for k in 0..=bound {
        let target = DimSet::canonical(k);
        let mut by_composite: HashMap<CubeMorphism, CubeMorphism> = HashMap::new();
        for g1 in enumerate_morphisms(&f1.cod, &target) {
            let c = f1.compose(&g1)?;
            by_composite.entry(c).or_insert(g1);
        }
        for g2 in enumerate_morphisms(&f2.cod, &target) {
            let c = f2.compose(&g2)?;
            if let Some(g1) = by_composite.get(&c) {
                return Ok(Some((g1.clone(), g2)));
            }
        }
    }
    Ok(None)
}

/// Every morphism `dom -> cod`, lexicographic over the domain names with
/// alternatives ordered codomain names first, then `Zero`, then `One`.
pub fn enumerate_morphisms(dom: &DimSet, cod: &DimSet) -> Vec<CubeMorphism> {
    let alternatives: Vec<Image> = cod
        .iter()
        .cloned()
        .map(Image::Dim)
        .chain(EndPoint::BOTH.into_iter().map(Image::End))
        .collect();
    let mut out = Vec::new();
    let mut used = vec![false; cod.len()];
    let mut current = Vec::with_capacity(dom.len());
    fn go(
        dom: &DimSet,
        cod: &DimSet,
        alternatives: &[Image],
        used: &mut [bool],
        current: &mut Vec<Image>,
        out: &mut Vec<CubeMorphism>,
    ) {
        if current.len() == dom.len() {
            out.push(CubeMorphism {
                dom: dom.clone(),
                cod: cod.clone(),
                images: current.clone(),
            });
            return;
        }
        for (a, im) in alternatives.iter().enumerate() {
            let is_name = a < cod.len();
            if is_name && used[a] {
                continue;
            }
            if is_name {
                used[a] = true;
            }
            current.push(im.clone());
            go(dom, cod, alternatives, used, current, out);
            current.pop();
            if is_name {
                used[a] = false;
            }
        }
    }
    go(dom, cod, &alternatives, &mut used, &mut current, &mut out);
    out
}
