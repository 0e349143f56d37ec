//! Young-diagram combinatorics: the lattice `YL`, its truncations `YL(N)`,
//! oscillating paths, the diagonal reflection and the rectangle action that
//! together generate the dihedral symmetry.

pub mod autos;
pub mod diagram;
pub mod gtensor;
pub mod lattice;

pub use diagram::{Cell, YoungDiagram};
pub use gtensor::{g_tensor, g_tensor_pow, GTensorError};
pub use lattice::{double_factorial_odd, LatticeGraph};
