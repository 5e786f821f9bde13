//! Exact computations in the surjection and Barratt–Eccles operads.
//!
//! Elements are sparse linear combinations over the integers or `ℤ/n`
//! ([`FreeModuleElement`]). On top of that sit the group ring of the
//! symmetric groups, both operads with their boundaries, partial
//! compositions and symmetric actions, the table reduction between them,
//! Steenrod–Adem structures `ψ`, and the action of surjections on tensor
//! powers of simplicial and cubical chains, which yields chain-level
//! representatives of Steenrod operations at every prime.
//!
//! ```
//! use einfty::{psi_surj, Torsion};
//!
//! let psi = psi_surj(3, 2);
//! assert_eq!(psi.to_string(), "(1,2,3,1,2) + (1,2,3,2,3) + (1,3,1,2,3)");
//! assert_eq!(psi.torsion(), Torsion::INTEGERS);
//! ```
//!
//! The enumeration-heavy kernels run on rayon when the `parallel` feature is
//! enabled (the default). Every such kernel has a `*_with` variant taking an
//! explicit [`Strategy`].

pub mod barratt_eccles;
pub mod chains;
mod error;
mod free_module;
mod parallel;
mod render;
pub mod steenrod;
pub mod surjection;
pub mod symmetric;

pub use barratt_eccles::{
    eilenberg_zilber, render_tensor, BarrattEcclesElement, BarrattEcclesTensor, Simplex, TensorTerm,
};
pub use chains::{
    act_cubical, act_cubical_with, act_on_cube, act_on_simplex, act_simplicial, act_simplicial_with, CubicalCell,
    CubicalElement, SimplicialCell, SimplicialElement,
};
pub use error::AlgebraError;
pub use free_module::{Accumulator, FreeModuleElement, Torsion};
pub use parallel::Strategy;
pub use steenrod::{nu, psi_be, psi_surj, steenrod_chain, steenrod_index, ChainContext, ChainElement, SteenrodRequest};
pub use surjection::{Convention, Surjection, SurjectionElement};
pub use symmetric::{Permutation, SymmetricRingElement};
