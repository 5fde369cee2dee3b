//! Named graph families: cockades, the exceptional apex graphs, the tight
//! bipartite family, and the dense graphs without a `K_10` minor.

mod cockade;
mod exceptional;
mod families;

pub use cockade::{build_cockade, is_cockade, CockadeRecipe, GlueStep};
pub use exceptional::{exceptional_apex, exceptional_graph, is_exceptional};
pub use families::{extremal_bipartite, k10_catalog, named_graph, octahedron, petersen_graph};
