//! Surface embeddings: planarity, rotation systems, genus and crosscap
//! number.

mod certificate;
mod closed;
mod genus;
mod planar;
mod reduce;
mod scheme;
mod search;

pub use certificate::{
    k5_fan, nonprojectivity_certificate, nontoroidality_certificate, Certificate, CERTIFICATE_BUDGET,
};
pub use closed::{closed_form_genus, ClosedForm};
pub use genus::{
    block_euler_bounds, euler_bound, nonorientable_genus, orientable_genus, GenusOptions, GenusResult, GenusStatus,
    LowerBound, DEFAULT_GENUS_BUDGET,
};
pub use planar::{is_planar, kuratowski_witness, planar_embedding, KuratowskiWitness};
pub use scheme::{edge_index, trace_faces, EmbeddingScheme, FaceTrace};
