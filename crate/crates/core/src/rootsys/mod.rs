//! Root systems of the simple types, Chevalley structure constants, and the
//! parabolic partition of the roots.

pub mod parabolic;
pub mod roots;
pub mod structure;
pub mod types;

pub use parabolic::{partition, ParabolicChoice, RootClass};
pub use roots::{build_root_system, nu_degree, Root, RootSystem};
pub use structure::{basis_labels, lie_algebra, magnitude_matches_string, structure_constants, StructureConstants};
pub use types::{Family, LieType};
