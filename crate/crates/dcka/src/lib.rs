pub mod exact_core;
pub mod states;
pub mod wronskian;
pub mod operators;
pub mod schemes;
pub mod ladders;
pub mod numeric_verify;

#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    pub mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/schemes.md")]
    pub mod schemes {}
    #[doc = include_str!("../../../book/src/potentials.md")]
    pub mod potentials {}
    #[doc = include_str!("../../../book/src/ladders.md")]
    pub mod ladders {}
    #[doc = include_str!("../../../book/src/numerics.md")]
    pub mod numerics {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
