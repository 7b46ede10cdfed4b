//! File formats and the table-to-graph pipeline.

pub mod dot;
pub mod json;
pub mod table;

pub use dot::to_dot;
pub use json::{graph_from_json, graph_to_json, load_graph, GraphFile, GraphSource, LabeledGraph, LabelingFile};
pub use table::{load_table, read_table, TargetSelector};

use crate::error::Result;
use crate::graph::RoughGraph;
use crate::rough::{InformationSystem, MembershipAssignment, Partition};

/// Everything derived from one information table and target set.
#[derive(Debug, Clone)]
pub struct PipelineOutput {
    pub partition: Partition,
    pub memberships: MembershipAssignment,
    pub graph: RoughGraph,
}

/// Partitions on `attrs` (all condition attributes when `None`), computes
/// memberships of `target`, and builds the rough graph.
pub fn build_from_table<S: AsRef<str>>(
    system: &InformationSystem,
    attrs: Option<&[S]>,
    target: &[String],
) -> Result<PipelineOutput> {
    let partition = match attrs {
        Some(attrs) => system.partition_by(attrs)?,
        None => system.indiscernibility()?,
    };
    let memberships = partition.memberships(target)?;
    let graph = RoughGraph::from_memberships(&memberships)?;
    Ok(PipelineOutput {
        partition,
        memberships,
        graph,
    })
}

/// Membership table, one `id<TAB>p/q` line per object in universe order.
pub fn membership_table(m: &MembershipAssignment) -> String {
    m.iter()
        .map(|(id, w)| format!("{id}\t{}\n", json::format_weight(w)))
        .collect()
}
