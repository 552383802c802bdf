//! Finite cubical sets on named dimensions, open boxes, and uniform Kan
//! filling checks for cubical sets and fibrations.

pub mod boxes;
pub mod codiscrete;
pub mod cubeset;
pub mod dimcat;
pub mod error;
pub mod fib;
pub mod io;
pub mod kan;

pub use boxes::{AlgBox, BoxShape, FaceFamily, GeomBox, Polarity};
pub use cubeset::{CubeId, FiniteCubicalSet, Generator, GeometricCube};
pub use dimcat::{
    canonical_form, enumerate_morphisms, orthogonal, reconcilable, CanonicalForm, CubeMorphism,
    DimName, DimSet, EndPoint, FaceLabel, Image, MorphKey, MAX_BOUND,
};
pub use error::{Error, Result};
pub use fib::{CubicalMap, FibAlgBox, PointwiseFamily};
pub use kan::{FillingTable, GeometricFilling, KanVerdict, Synthesis};
