//! Meander graphs and the index of seaweed subalgebras in types A, B and C.
//!
//! The index of a seaweed is computed three independent ways: from the
//! cycle/segment structure of its meander graph ([`index`]), by the inductive
//! reduction to parabolics ([`index::reduction_chain`]), and from the generic
//! rank of the Kirillov form of an explicit matrix realization ([`oracle`]).
//! [`enumeration`] builds the census of Frobenius seaweeds of `sp(2n)`.

pub mod cli;
pub mod composition;
pub mod enumeration;
pub mod error;
pub mod index;
pub mod meander;
pub mod oracle;
pub mod render;
pub mod verify;

pub use composition::{Composition, SeaweedA, SeaweedC, Series};
pub use error::{Error, Result};
pub use index::{index_a_gl, index_a_sl, index_c};
pub use meander::{analyze, build_graph_a, build_graph_c, ComponentReport, MeanderGraph};
