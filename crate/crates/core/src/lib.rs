pub mod algebra;
pub mod cli;
pub mod error;
pub mod flow;
pub mod fourflow;
pub mod generators;
pub mod glue;
pub mod io;
pub mod multigraph;

pub use algebra::{make_group, Element, Endomorphism, Group, GroupKind, Scalar};
pub use error::{Error, Hypothesis, Result};
pub use multigraph::{EdgeSet, MultiGraph};
