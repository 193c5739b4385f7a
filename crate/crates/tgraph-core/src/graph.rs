use crate::error::GraphError;

/// Compacted node identifier, `1..=n`.
pub type NodeId = u32;
/// Compacted timestamp index, `1..=T`.
pub type TimestampId = u32;

/// A node occurrence at a specific timestamp.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TemporalNode {
    pub node: NodeId,
    pub t: TimestampId,
}

impl TemporalNode {
    pub fn new(node: NodeId, t: TimestampId) -> Self {
        Self { node, t }
    }
}

/// A directed edge stamped with a timestamp index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TemporalEdge {
    pub src: NodeId,
    pub dst: NodeId,
    pub t: TimestampId,
}

impl TemporalEdge {
    pub fn new(src: NodeId, dst: NodeId, t: TimestampId) -> Self {
        Self { src, dst, t }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct ActivityEntry {
    pub t: TimestampId,
    /// Out-neighbors at `t`, sorted, parallel edges kept.
    pub out: Vec<NodeId>,
    /// In-neighbors at `t`, sorted, parallel edges kept.
    pub inn: Vec<NodeId>,
}

/// Immutable temporal graph over compacted ids.
///
/// Construction sorts edges by `(t, src, dst)` (stable for parallel
/// duplicates) and indexes them per timestamp and per node. The original
/// raw edge lines are retained so that serialization round-trips exactly.
#[derive(Debug, Clone)]
pub struct TemporalGraph {
    n: u32,
    t_len: u32,
    edges: Vec<TemporalEdge>,
    t_ranges: Vec<(u32, u32)>,
    activity: Vec<Vec<ActivityEntry>>,
    occurrences: Vec<TemporalNode>,
    pub(crate) raw_edges: Vec<(i64, i64, i64)>,
}

impl TemporalGraph {
    /// Builds a graph from already-compacted edges.
    ///
    /// `n` and `t_len` may exceed the ids actually present (a generated graph
    /// keeps the observed graph's dimensions even when some nodes end up
    /// unused). Raw lines for serialization are the canonically sorted edges.
    pub fn from_edges(
        n: u32,
        t_len: u32,
        mut edges: Vec<TemporalEdge>,
    ) -> Result<Self, GraphError> {
        if edges.is_empty() {
            return Err(GraphError::EmptyInput);
        }
        for e in &edges {
            if e.src == 0 || e.src > n {
                return Err(GraphError::NodeOutOfRange { node: e.src, n });
            }
            if e.dst == 0 || e.dst > n {
                return Err(GraphError::NodeOutOfRange { node: e.dst, n });
            }
            if e.t == 0 || e.t > t_len {
                return Err(GraphError::TimestampOutOfRange { t: e.t, t_max: t_len });
            }
        }
        edges.sort_by_key(|e| (e.t, e.src, e.dst));
        let raw_edges = edges
            .iter()
            .map(|e| (e.src as i64, e.dst as i64, e.t as i64))
            .collect();
        Ok(Self::assemble(n, t_len, edges, raw_edges))
    }

    pub(crate) fn assemble(
        n: u32,
        t_len: u32,
        edges: Vec<TemporalEdge>,
        raw_edges: Vec<(i64, i64, i64)>,
    ) -> Self {
        debug_assert!(edges.windows(2).all(|w| (w[0].t, w[0].src, w[0].dst)
            <= (w[1].t, w[1].src, w[1].dst)));

        let mut t_ranges = vec![(0u32, 0u32); t_len as usize];
        let mut i = 0usize;
        while i < edges.len() {
            let t = edges[i].t;
            let start = i;
            while i < edges.len() && edges[i].t == t {
                i += 1;
            }
            t_ranges[(t - 1) as usize] = (start as u32, i as u32);
        }
        // fill empty timestamps with empty ranges positioned consistently
        let mut cursor = 0u32;
        for r in t_ranges.iter_mut() {
            if r.0 == 0 && r.1 == 0 {
                *r = (cursor, cursor);
            } else {
                cursor = r.1;
            }
        }

        let mut per_node: Vec<Vec<(TimestampId, NodeId, bool)>> = vec![Vec::new(); n as usize];
        for e in &edges {
            per_node[(e.src - 1) as usize].push((e.t, e.dst, true));
            if e.src != e.dst {
                per_node[(e.dst - 1) as usize].push((e.t, e.src, false));
            } else {
                // self-loop: single occurrence, but both directions recorded
                per_node[(e.dst - 1) as usize].push((e.t, e.src, false));
            }
        }
        let mut activity: Vec<Vec<ActivityEntry>> = Vec::with_capacity(n as usize);
        let mut occurrences = Vec::new();
        for (idx, mut items) in per_node.into_iter().enumerate() {
            items.sort_by_key(|&(t, nb, is_out)| (t, !is_out, nb));
            let mut entries: Vec<ActivityEntry> = Vec::new();
            for (t, nb, is_out) in items {
                if entries.last().map(|e| e.t) != Some(t) {
                    entries.push(ActivityEntry { t, out: Vec::new(), inn: Vec::new() });
                    occurrences.push(TemporalNode::new(idx as NodeId + 1, t));
                }
                let entry = entries.last_mut().unwrap();
                if is_out {
                    entry.out.push(nb);
                } else {
                    entry.inn.push(nb);
                }
            }
            activity.push(entries);
        }
        occurrences.sort();

        Self { n, t_len, edges, t_ranges, activity, occurrences, raw_edges }
    }

    pub fn node_count(&self) -> u32 {
        self.n
    }

    pub fn timestamp_count(&self) -> u32 {
        self.t_len
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges, sorted by `(t, src, dst)`.
    pub fn edges(&self) -> &[TemporalEdge] {
        &self.edges
    }

    /// Edge slice of one timestamp.
    pub fn edges_at(&self, t: TimestampId) -> Result<&[TemporalEdge], GraphError> {
        self.check_t(t)?;
        let (s, e) = self.t_ranges[(t - 1) as usize];
        Ok(&self.edges[s as usize..e as usize])
    }

    /// Edges with timestamp `<= t` (a prefix of the sorted edge sequence).
    pub fn edges_up_to(&self, t: TimestampId) -> Result<&[TemporalEdge], GraphError> {
        self.check_t(t)?;
        let (_, e) = self.t_ranges[(t - 1) as usize];
        Ok(&self.edges[..e as usize])
    }

    pub(crate) fn check_t(&self, t: TimestampId) -> Result<(), GraphError> {
        if t == 0 || t > self.t_len {
            Err(GraphError::TimestampOutOfRange { t, t_max: self.t_len })
        } else {
            Ok(())
        }
    }

    pub fn check_node(&self, node: NodeId) -> Result<(), GraphError> {
        if node == 0 || node > self.n {
            Err(GraphError::NodeOutOfRange { node, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Temporal nodes that occur (have an incident edge), sorted.
    pub fn occurrences(&self) -> &[TemporalNode] {
        &self.occurrences
    }

    pub fn occurs(&self, v: TemporalNode) -> bool {
        self.entry_at(v.node, v.t).is_some()
    }

    pub(crate) fn entry_at(&self, node: NodeId, t: TimestampId) -> Option<&ActivityEntry> {
        if node == 0 || node > self.n {
            return None;
        }
        let entries = &self.activity[(node - 1) as usize];
        entries.binary_search_by_key(&t, |e| e.t).ok().map(|i| &entries[i])
    }

    pub(crate) fn entries_in_window(
        &self,
        node: NodeId,
        lo: TimestampId,
        hi: TimestampId,
    ) -> &[ActivityEntry] {
        let entries = &self.activity[(node - 1) as usize];
        let start = entries.partition_point(|e| e.t < lo);
        let end = entries.partition_point(|e| e.t <= hi);
        &entries[start..end]
    }

    /// Out-neighbors of `v` at its timestamp, parallel edges kept, sorted.
    pub fn out_neighbors_at(&self, v: TemporalNode) -> &[NodeId] {
        self.entry_at(v.node, v.t).map(|e| e.out.as_slice()).unwrap_or(&[])
    }

    pub fn in_neighbors_at(&self, v: TemporalNode) -> &[NodeId] {
        self.entry_at(v.node, v.t).map(|e| e.inn.as_slice()).unwrap_or(&[])
    }

    /// Number of out-edges of `v` at its own timestamp (with multiplicity).
    pub fn out_degree_at(&self, v: TemporalNode) -> usize {
        self.out_neighbors_at(v).len()
    }

    /// Distinct out-neighbors of `v` at its timestamp.
    pub fn distinct_out_neighbors(&self, v: TemporalNode) -> Vec<NodeId> {
        let mut nbrs = self.out_neighbors_at(v).to_vec();
        nbrs.dedup();
        nbrs
    }
}
