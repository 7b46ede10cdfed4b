//! Rough graphs built from information systems, the graph families used for
//! even-vertex ζ-graceful labeling, closed-form labelers with an auditor that
//! checks them against the induced edge function, and an exhaustive search
//! oracle for small graphs.

pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod rough;
pub mod search;

pub use error::{Error, Result};
pub use generators::{Family, FamilyInstance, Role, RoleKind};
pub use graph::{Edge, GraphStats, RoughGraph, Weight};
pub use labeling::{
    audit::{audit_all_modes, audit_range, audit_theorem, AuditReport, AuditRow},
    induce, induced_edge_label, verify, zeta, EdgeLabeling, Mode, TheoremLabeling, VerificationReport, VertexLabeling,
};
pub use rough::{InformationSystem, MembershipAssignment, Partition};
pub use search::{count_labelings, search_labeling, SearchConfig, SearchMode, SearchOutcome};
