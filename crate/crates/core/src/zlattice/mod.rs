//! Exact integer linear algebra: matrices, normal forms, lattices and
//! finite abelian groups.

mod group;
mod lattice;
mod matrix;
mod snf;

pub use group::{
    character_group, cokernel, CharacterGroup, Cokernel, FiniteAbelianGroup, GroupHom, QmodZ,
    SolveResult,
};
pub use lattice::{fixed_sublattice, tate_h1_cyclic, Lattice, QuotientMap};
pub use matrix::{big_vec, small_vec, IntMatrix};
pub use snf::{hermite_rows, integer_kernel, smith_normal_form, solve_integer, SmithForm};
