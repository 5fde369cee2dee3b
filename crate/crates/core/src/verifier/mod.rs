//! Executable forms of the extremal edge bounds, the strengthened apex
//! bound, and the contraction tests behind the triangle-free reduction.

mod apex;
mod bounds;
mod reduction;
mod report;
mod theorems;

pub use apex::{check_strengthened_apex, strengthened_apex_check, ApexCase, ApexCheck};
pub use bounds::{apex_bound, mader_bound, mantel_bound, trifree_bound};
pub use reduction::{exists_triangle_free_preimage, triangle_transversal_exceeds, PREIMAGE_MAX_ORDER};
pub use report::{check_bound, BoundFn, BoundReport, BoundSpec, Predicate, Recognizer, Status, Verdict, Violation};
pub use theorems::{
    corpus_filters, is_k10_exception, specs_for, verify_builtin, verify_corpus, verify_min_degree_claim, THEOREM_IDS,
};
