pub mod canon;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod minor;
pub mod planarity;
pub mod verifier;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{EdgeList, Graph, VertexSet, MAX_VERTICES};
