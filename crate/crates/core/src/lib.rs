//! Exact characters of cohomology of Schur-functor bundles on super
//! Grassmannians and super partial flag varieties.

pub mod bott;
pub mod characters;
pub mod cohomology;
pub mod error;
mod linalg;
pub mod partitions;
pub mod qseries;
pub mod superschur;

pub use characters::{GLWeight, GradedCharacter, VirtualCharacter};
pub use error::{Error, Result};
pub use partitions::{Partition, SkewShape};
pub use qseries::HilbertSeries;
pub use bott::{BottContext, LeviWeight};
pub use superschur::{SuperDim, SuperWeight};
pub use cohomology::{BundleSpec, E1Options, E1Page, E1Term, FlagSpec, HypothesisCase, VerifyReport};
