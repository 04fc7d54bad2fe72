//! Exact enumeration of real rational M-functions through planar chord
//! diagrams, with independent cross-checks of every count.

pub mod asymptotics;
pub mod bijection;
pub mod diagram;
pub mod error;
pub mod labeling;
pub mod report;
pub mod series;
pub mod tree;
pub mod updown;
pub mod verify;

pub use diagram::{Chord, ChordDiagram, OrientedDiagram, Polarity};
pub use error::{Error, Result};
pub use tree::{CaterpillarType, PlaneTree, PlantedTree};
pub use updown::UpDownWord;
