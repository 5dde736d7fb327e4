//! Graph parameters: independence number, pendant structure, canonical forms.

mod canon;
mod independence;
mod structure;

pub use canon::{canonical_form, canonical_graph, canonical_labeling, is_isomorphic, CanonicalForm};
pub use independence::{independence_number, is_independent, max_independent_set};
pub use structure::{all_deg2_sets, common_neighborhood_set, star_degree};
