pub mod exactnum;
pub mod packing;
pub mod shell;
pub mod verifier;
