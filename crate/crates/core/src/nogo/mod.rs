//! The magic-square no-go argument, at the level of sign assignments and at
//! the level of frameworks.

mod signs;
mod square;
mod utf;
mod weak_c;

pub use signs::{
    score_assignment, search_sign_assignments, Constraint, ParityCertificate, ProductRules,
    SignAssignment, SignSearch,
};
pub use square::{
    build_mermin_square, sign_label, verify_square_identities, IdentityCheck, IdentityReport,
    MerminSquare, COLUMN_TARGETS, LABELS, ROW_TARGETS,
};
pub use utf::{
    square_frameworks, utf_search, Conflict, FrameworkCollection, SearchTrace, SharedProjector,
    UtfOutcome, MAX_SHARED_CELLS,
};
pub use weak_c::{realize_line, weak_c_demo, weak_c_demo_on, LineFunctional, WeakCReport};
