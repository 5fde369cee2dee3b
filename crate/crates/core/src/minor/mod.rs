//! Minor containment with certificates, Hadwiger numbers, and the Petersen
//! family obstruction set for linkless embeddability.

mod model;
mod search;
mod transform;

pub use model::{verify_model, MinorModel};
pub use search::{
    find_minor, find_minor_with, hadwiger_number, hadwiger_number_with, has_minor, SearchLimits, SearchStats,
};
pub use transform::{delta_y, is_linkless, is_linkless_with, petersen_family, y_delta};

#[allow(unused_imports)]
pub(crate) use search::subgraph_embedding;
