//! Darboux transformations between rational-gauge exceptional operators.

pub mod eigen;
pub mod operator;
pub mod rdt;

pub use eigen::{has_typed_index, typed_dimension, typed_eigenfunction, typed_numerators};
pub use operator::OperatorRG;
pub use rdt::{
    cdt_step, cdt_with_seed, chain, chain_intertwiner_closed_form, chain_tau_closed_form, confluent_integral,
    detect_type, intertwiner_prefactor, para_jacobi_step, rdt_step, rdt_with_seed, step_table, Cdt, DarbouxError, Rdt,
};
