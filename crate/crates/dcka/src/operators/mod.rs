//! Differential operators with rational coefficients, Darboux intertwiners
//! and deformed Hamiltonians.
//!
//! ```
//! use dcka::operators::{dcka_potential, intertwiner};
//! use dcka::schemes::Scheme;
//!
//! let s: Scheme = "-3".parse().unwrap();
//! let a = intertwiner(&s).unwrap();
//! assert_eq!(a.order(), Some(1));
//! let form = dcka_potential(&s).unwrap().decompose().unwrap();
//! assert_eq!(form.m, 1);
//! assert_eq!(form.constant, dcka::exact_core::rat(-2));
//! ```

mod chain;
mod darboux;
mod diffop;
mod hamiltonian;
mod order_two;

pub use chain::OpChain;
pub use darboux::{
    a_minus, a_plus, chain_for_seeds, chain_potential, darboux_pair, dcka_potential, intertwiner,
    intertwiner_chain, intertwiner_from_minors, involution_check, iso_pair, map_state,
    susy_content_check, verify_factorization, verify_intertwining, wick_check,
    wick_substitute, OperatorError, SusyReport,
};
pub use diffop::DiffOp;
pub use hamiltonian::{OperatorPoly, PotentialForm, SchrodingerOp};
pub use order_two::{order_two_ladder_spot_check, OrderTwoReport};

pub(crate) use darboux::native_potential_for_seeds;
