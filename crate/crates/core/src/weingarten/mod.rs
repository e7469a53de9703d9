//! `T`-functions and Weingarten functions for the three classical compact
//! groups and the seven symmetric-space ensemble classes, all evaluated as
//! exact rationals at exact rational parameters.

mod class;
mod polys;
mod tfunc;
mod wg;

pub use class::EnsembleClass;
pub use polys::{c_poly, d_poly, dprime_poly, rat_pow};
pub use tfunc::{
    t_bdg_orthogonal, t_bdg_symplectic, t_bdg_symplectic_table, t_bdg_orthogonal_table,
    t_chiral_cycle, t_chiral_cycle_table, t_chiral_orthogonal, t_chiral_orthogonal_table,
    t_chiral_symplectic, t_chiral_symplectic_table, t_function, t_orthogonal,
    t_orthogonal_table, t_symplectic, t_symplectic_table, t_unitary, t_unitary_table,
};
pub use wg::{
    wg_function, wg_orthogonal, wg_symplectic, wg_unitary, WgEvaluation, WgTable,
    WG_DEGREE_CAP, WG_HALF_DEGREE_CAP,
};
