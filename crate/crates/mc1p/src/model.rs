//! Core data model: assembly hypergraphs, assemblies (sets of walks), and the
//! compatibility checker that every engine's witness is validated against.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Index into a hypergraph's sorted vertex table.
pub type VertexId = usize;

/// Genome model: linear walks only, or linear and circular walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    Linear,
    Mixed,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::Linear => write!(f, "linear"),
            Model::Mixed => write!(f, "mixed"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("edge references undeclared vertex {0:?}")]
    UndeclaredVertex(String),
    #[error("vertex {0:?} has multiplicity {1}; must be >= 1")]
    BadMultiplicity(String, u32),
    #[error("edge {0:?} needs at least 2 distinct vertices")]
    BadEdge(String),
    #[error("order of edge {0:?} does not visit exactly its member set")]
    BadOrder(String),
    #[error("adjacency {0:?} carries an order; adjacencies are unordered")]
    OrderedAdjacency(String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(String),
}

/// A weighted, optionally ordered hyperedge. Identity is the member set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    /// Distinct member vertices, sorted.
    pub members: Vec<VertexId>,
    pub weight: i64,
    /// For intervals only: a sequence over `members` in which every member
    /// appears at least once. Adjacencies never carry an order.
    pub order: Option<Vec<VertexId>>,
}

impl Edge {
    pub fn is_adjacency(&self) -> bool {
        self.members.len() == 2
    }

    pub fn is_interval(&self) -> bool {
        self.members.len() > 2
    }

    pub fn is_ordered(&self) -> bool {
        self.order.is_some()
    }

    pub fn is_triple(&self) -> bool {
        self.members.len() == 3
    }
}

/// Derived instance statistics (the classical n, m, s, Δ, δ, γ, ρ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stats {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub total_edge_size: usize,
    pub max_edge_size: usize,
    pub max_degree: usize,
    pub max_multiplicity: u32,
    pub repeat_count: usize,
    pub repeat_set: Vec<VertexId>,
}

/// An assembly hypergraph: vertices with multiplicities plus weighted,
/// optionally ordered edges. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssemblyHypergraph {
    names: Vec<String>,
    multiplicities: Vec<u32>,
    edges: Vec<Edge>,
}

/// Incremental, name-based construction of an [`AssemblyHypergraph`].
#[derive(Debug, Default, Clone)]
pub struct HypergraphBuilder {
    vertices: Vec<(String, u32)>,
    edges: Vec<(Vec<String>, i64, Option<Vec<String>>)>,
}

impl HypergraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, name: &str, multiplicity: u32) -> &mut Self {
        self.vertices.push((name.to_owned(), multiplicity));
        self
    }

    pub fn adjacency(&mut self, u: &str, v: &str, weight: i64) -> &mut Self {
        self.edges
            .push((vec![u.to_owned(), v.to_owned()], weight, None));
        self
    }

    pub fn interval(&mut self, members: &[&str], weight: i64) -> &mut Self {
        self.edges
            .push((members.iter().map(|s| (*s).to_owned()).collect(), weight, None));
        self
    }

    pub fn ordered_interval(&mut self, members: &[&str], order: &[&str], weight: i64) -> &mut Self {
        self.edges.push((
            members.iter().map(|s| (*s).to_owned()).collect(),
            weight,
            Some(order.iter().map(|s| (*s).to_owned()).collect()),
        ));
        self
    }

    pub fn build(&self) -> Result<AssemblyHypergraph, ModelError> {
        let mut names: Vec<String> = Vec::with_capacity(self.vertices.len());
        for (name, _) in &self.vertices {
            names.push(name.clone());
        }
        names.sort();
        names.dedup();
        if names.len() != self.vertices.len() {
            let mut seen = BTreeSet::new();
            for (name, _) in &self.vertices {
                if !seen.insert(name.clone()) {
                    return Err(ModelError::DuplicateVertex(name.clone()));
                }
            }
        }
        let index: BTreeMap<&str, VertexId> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let mut multiplicities = vec![0u32; names.len()];
        for (name, mult) in &self.vertices {
            multiplicities[index[name.as_str()]] = *mult;
        }

        let resolve = |name: &String| -> Result<VertexId, ModelError> {
            index
                .get(name.as_str())
                .copied()
                .ok_or_else(|| ModelError::UndeclaredVertex(name.clone()))
        };

        let mut edges = Vec::with_capacity(self.edges.len());
        for (members, weight, order) in &self.edges {
            let mut ids = members
                .iter()
                .map(resolve)
                .collect::<Result<Vec<_>, _>>()?;
            ids.sort_unstable();
            ids.dedup();
            let order_ids = order
                .as_ref()
                .map(|o| o.iter().map(resolve).collect::<Result<Vec<_>, _>>())
                .transpose()?;
            edges.push(Edge {
                members: ids,
                weight: *weight,
                order: order_ids,
            });
        }
        edges.sort_by(|a, b| {
            (a.members.len(), &a.members, &a.order).cmp(&(b.members.len(), &b.members, &b.order))
        });

        let h = AssemblyHypergraph {
            names,
            multiplicities,
            edges,
        };
        h.validate()?;
        Ok(h)
    }
}

impl AssemblyHypergraph {
    /// Re-checks every structural invariant and returns the derived statistics.
    pub fn validate(&self) -> Result<Stats, ModelError> {
        for (v, mult) in self.multiplicities.iter().enumerate() {
            if *mult < 1 {
                return Err(ModelError::BadMultiplicity(self.names[v].clone(), *mult));
            }
        }
        let mut seen_members: BTreeSet<&[VertexId]> = BTreeSet::new();
        for edge in &self.edges {
            let label = || self.edge_label(edge);
            if edge.members.len() < 2 {
                return Err(ModelError::BadEdge(label()));
            }
            for w in edge.members.windows(2) {
                if w[0] == w[1] {
                    return Err(ModelError::BadEdge(label()));
                }
            }
            for &v in &edge.members {
                if v >= self.names.len() {
                    return Err(ModelError::UndeclaredVertex(format!("#{v}")));
                }
            }
            if let Some(order) = &edge.order {
                if edge.is_adjacency() {
                    return Err(ModelError::OrderedAdjacency(label()));
                }
                let content: BTreeSet<VertexId> = order.iter().copied().collect();
                let members: BTreeSet<VertexId> = edge.members.iter().copied().collect();
                if content != members {
                    return Err(ModelError::BadOrder(label()));
                }
            }
            if !seen_members.insert(&edge.members) {
                return Err(ModelError::DuplicateEdge(label()));
            }
        }

        let mut degree = vec![0usize; self.names.len()];
        for edge in &self.edges {
            for &v in &edge.members {
                degree[v] += 1;
            }
        }
        let repeat_set: Vec<VertexId> = (0..self.names.len())
            .filter(|&v| self.multiplicities[v] > 1)
            .collect();
        Ok(Stats {
            vertex_count: self.names.len(),
            edge_count: self.edges.len(),
            total_edge_size: self.edges.iter().map(|e| e.members.len()).sum(),
            max_edge_size: self.edges.iter().map(|e| e.members.len()).max().unwrap_or(0),
            max_degree: degree.iter().copied().max().unwrap_or(0),
            max_multiplicity: self.multiplicities.iter().copied().max().unwrap_or(1),
            repeat_count: repeat_set.len(),
            repeat_set,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        0..self.names.len()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn multiplicity(&self, v: VertexId) -> u32 {
        self.multiplicities[v]
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn is_repeat(&self, v: VertexId) -> bool {
        self.multiplicities[v] > 1
    }

    pub fn repeat_set(&self) -> Vec<VertexId> {
        self.vertex_ids().filter(|&v| self.is_repeat(v)).collect()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn adjacencies(&self) -> impl Iterator<Item = (usize, &Edge)> {
        self.edges.iter().enumerate().filter(|(_, e)| e.is_adjacency())
    }

    pub fn intervals(&self) -> impl Iterator<Item = (usize, &Edge)> {
        self.edges.iter().enumerate().filter(|(_, e)| e.is_interval())
    }

    pub fn has_adjacency(&self, u: VertexId, v: VertexId) -> bool {
        let key = if u < v { vec![u, v] } else { vec![v, u] };
        self.edges.iter().any(|e| e.members == key)
    }

    pub fn has_edge_with_members(&self, members: &[VertexId]) -> bool {
        let mut key = members.to_vec();
        key.sort_unstable();
        self.edges.iter().any(|e| e.members == key)
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.members.contains(&v)).count()
    }

    /// Vertices sharing an edge with `v`, excluding `v` itself.
    pub fn neighborhood(&self, v: VertexId) -> Vec<VertexId> {
        let mut out = BTreeSet::new();
        for edge in &self.edges {
            if edge.members.contains(&v) {
                out.extend(edge.members.iter().copied().filter(|&u| u != v));
            }
        }
        out.into_iter().collect()
    }

    fn edge_label(&self, edge: &Edge) -> String {
        let names: Vec<&str> = edge
            .members
            .iter()
            .map(|&v| self.names.get(v).map(|s| s.as_str()).unwrap_or("?"))
            .collect();
        format!("{{{}}}", names.join(","))
    }

    /// The induced adjacency graph: same vertices and multiplicities, only the
    /// adjacencies of this hypergraph.
    pub fn induced_adjacency_graph(&self) -> AssemblyHypergraph {
        AssemblyHypergraph {
            names: self.names.clone(),
            multiplicities: self.multiplicities.clone(),
            edges: self
                .edges
                .iter()
                .filter(|e| e.is_adjacency())
                .cloned()
                .collect(),
        }
    }

    /// Same vertices, keeping exactly the edges selected by `keep`.
    pub fn restrict_edges(&self, keep: &[bool]) -> AssemblyHypergraph {
        assert_eq!(keep.len(), self.edges.len());
        AssemblyHypergraph {
            names: self.names.clone(),
            multiplicities: self.multiplicities.clone(),
            edges: self
                .edges
                .iter()
                .zip(keep)
                .filter(|(_, k)| **k)
                .map(|(e, _)| e.clone())
                .collect(),
        }
    }

    /// Same vertices, with `extra` edges appended (members must be valid ids).
    pub fn with_extra_edges(&self, extra: Vec<Edge>) -> Result<AssemblyHypergraph, ModelError> {
        let mut edges = self.edges.clone();
        edges.extend(extra);
        edges.sort_by(|a, b| {
            (a.members.len(), &a.members, &a.order).cmp(&(b.members.len(), &b.members, &b.order))
        });
        let h = AssemblyHypergraph {
            names: self.names.clone(),
            multiplicities: self.multiplicities.clone(),
            edges,
        };
        h.validate()?;
        Ok(h)
    }

    /// Construct from already-resolved parts. Callers own id consistency;
    /// `validate` is still run.
    pub fn from_parts(
        names: Vec<String>,
        multiplicities: Vec<u32>,
        mut edges: Vec<Edge>,
    ) -> Result<AssemblyHypergraph, ModelError> {
        assert_eq!(names.len(), multiplicities.len());
        debug_assert!(names.windows(2).all(|w| w[0] < w[1]), "names must be sorted");
        edges.sort_by(|a, b| {
            (a.members.len(), &a.members, &a.order).cmp(&(b.members.len(), &b.members, &b.order))
        });
        let h = AssemblyHypergraph {
            names,
            multiplicities,
            edges,
        };
        h.validate()?;
        Ok(h)
    }

    /// Connected components of the hypergraph (vertices linked by shared
    /// edges), sorted by smallest vertex id.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut parent: Vec<VertexId> = (0..self.names.len()).collect();
        fn find(parent: &mut Vec<VertexId>, v: VertexId) -> VertexId {
            let mut root = v;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = v;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        for edge in &self.edges {
            let first = edge.members[0];
            for &v in &edge.members[1..] {
                let a = find(&mut parent, first);
                let b = find(&mut parent, v);
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for v in 0..self.names.len() {
            let root = find(&mut parent, v);
            groups.entry(root).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// Maximal repeat clusters: connected components of the hypergraph
    /// restricted to the repeat set (edges intersected with it).
    pub fn repeat_clusters(&self) -> Vec<Vec<VertexId>> {
        let repeats = self.repeat_set();
        let mut parent: BTreeMap<VertexId, VertexId> =
            repeats.iter().map(|&v| (v, v)).collect();
        fn find(parent: &mut BTreeMap<VertexId, VertexId>, v: VertexId) -> VertexId {
            let mut root = v;
            while parent[&root] != root {
                root = parent[&root];
            }
            let mut cur = v;
            while parent[&cur] != root {
                let next = parent[&cur];
                parent.insert(cur, root);
                cur = next;
            }
            root
        }
        for edge in &self.edges {
            let inside: Vec<VertexId> = edge
                .members
                .iter()
                .copied()
                .filter(|v| parent.contains_key(v))
                .collect();
            for w in inside.windows(2) {
                let a = find(&mut parent, w[0]);
                let b = find(&mut parent, w[1]);
                if a != b {
                    let keep = a.min(b);
                    parent.insert(a.max(b), keep);
                }
            }
        }
        let mut groups: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for &v in &repeats {
            let root = find(&mut parent, v);
            groups.entry(root).or_default().push(v);
        }
        groups.into_values().collect()
    }
}

/// Linear or circular walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SequenceKind {
    Linear,
    Circular,
}

/// One walk of an assembly, kept in canonical form: a linear sequence is the
/// lexicographically smaller of itself and its reversal; a circular sequence
/// is the minimal rotation over both directions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sequence {
    pub kind: SequenceKind,
    pub vertices: Vec<VertexId>,
}

impl Sequence {
    pub fn linear(vertices: Vec<VertexId>) -> Self {
        Sequence {
            kind: SequenceKind::Linear,
            vertices,
        }
        .canonical()
    }

    pub fn circular(vertices: Vec<VertexId>) -> Self {
        Sequence {
            kind: SequenceKind::Circular,
            vertices,
        }
        .canonical()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn canonical(&self) -> Sequence {
        assert!(!self.vertices.is_empty(), "sequences are non-empty");
        match self.kind {
            SequenceKind::Linear => {
                let mut rev = self.vertices.clone();
                rev.reverse();
                Sequence {
                    kind: SequenceKind::Linear,
                    vertices: self.vertices.clone().min(rev),
                }
            }
            SequenceKind::Circular => {
                let n = self.vertices.len();
                let mut best: Option<Vec<VertexId>> = None;
                let mut consider = |candidate: Vec<VertexId>| match &best {
                    Some(b) if *b <= candidate => {}
                    _ => best = Some(candidate),
                };
                let mut rev = self.vertices.clone();
                rev.reverse();
                for start in 0..n {
                    let mut rot: Vec<VertexId> = Vec::with_capacity(n);
                    rot.extend(self.vertices[start..].iter().copied());
                    rot.extend(self.vertices[..start].iter().copied());
                    consider(rot);
                    let mut rot_rev: Vec<VertexId> = Vec::with_capacity(n);
                    rot_rev.extend(rev[start..].iter().copied());
                    rot_rev.extend(rev[..start].iter().copied());
                    consider(rot_rev);
                }
                Sequence {
                    kind: SequenceKind::Circular,
                    vertices: best.expect("non-empty"),
                }
            }
        }
    }
}

/// A set of walks. Always canonical: each sequence in canonical form and the
/// multiset sorted, so equality is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Assembly {
    sequences: Vec<Sequence>,
}

impl Assembly {
    pub fn new(sequences: Vec<Sequence>) -> Self {
        let mut sequences: Vec<Sequence> = sequences.iter().map(Sequence::canonical).collect();
        sequences.sort();
        Assembly { sequences }
    }

    pub fn sequences(&self) -> &[Sequence] {
        &self.sequences
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    /// Total occurrences of each vertex across all sequences.
    pub fn occurrence_counts(&self, vertex_count: usize) -> Vec<usize> {
        let mut counts = vec![0usize; vertex_count];
        for seq in &self.sequences {
            for &v in &seq.vertices {
                counts[v] += 1;
            }
        }
        counts
    }

    /// Remap every vertex id (used to decode engine-internal constructions).
    pub fn map_vertices(&self, f: impl Fn(VertexId) -> VertexId) -> Assembly {
        Assembly::new(
            self.sequences
                .iter()
                .map(|s| Sequence {
                    kind: s.kind,
                    vertices: s.vertices.iter().map(|&v| f(v)).collect(),
                })
                .collect(),
        )
    }
}

/// Yes-with-witness or No answer from a decision engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub witness: Option<Assembly>,
    pub note: Option<String>,
}

impl Verdict {
    pub fn yes(witness: Assembly) -> Self {
        Verdict {
            witness: Some(witness),
            note: None,
        }
    }

    pub fn no() -> Self {
        Verdict {
            witness: None,
            note: None,
        }
    }

    pub fn no_because(note: impl Into<String>) -> Self {
        Verdict {
            witness: None,
            note: Some(note.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn is_yes(&self) -> bool {
        self.witness.is_some()
    }
}

/// One reason an assembly fails against a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    CircularInLinearModel { sequence: usize },
    MultiplicityExceeded { vertex: String, used: usize, cap: u32 },
    EdgeNotCovered { edge: String },
    OrderNotCovered { edge: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CircularInLinearModel { sequence } => {
                write!(f, "sequence #{sequence} is circular in the linear model")
            }
            Violation::MultiplicityExceeded { vertex, used, cap } => {
                write!(f, "vertex {vertex:?} appears {used} times; multiplicity {cap}")
            }
            Violation::EdgeNotCovered { edge } => {
                write!(f, "edge {edge} has no contiguous window")
            }
            Violation::OrderNotCovered { edge } => {
                write!(f, "ordered interval {edge} matches no contiguous window")
            }
        }
    }
}

/// Result of checking an assembly against a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityReport {
    pub violations: Vec<Violation>,
}

impl CompatibilityReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

fn unordered_edge_compatible(seq: &Sequence, target: &BTreeSet<VertexId>) -> bool {
    let n = seq.vertices.len();
    match seq.kind {
        SequenceKind::Linear => {
            for start in 0..n {
                let mut seen = BTreeSet::new();
                for end in start..n {
                    let v = seq.vertices[end];
                    if !target.contains(&v) {
                        break;
                    }
                    seen.insert(v);
                    if seen.len() == target.len() {
                        return true;
                    }
                }
            }
            false
        }
        SequenceKind::Circular => {
            for start in 0..n {
                let mut seen = BTreeSet::new();
                for offset in 0..n {
                    let v = seq.vertices[(start + offset) % n];
                    if !target.contains(&v) {
                        break;
                    }
                    seen.insert(v);
                    if seen.len() == target.len() {
                        return true;
                    }
                }
            }
            false
        }
    }
}

fn ordered_edge_compatible(seq: &Sequence, order: &[VertexId]) -> bool {
    let n = seq.vertices.len();
    let p = order.len();
    if p > n {
        return false;
    }
    let mut mirror = order.to_vec();
    mirror.reverse();
    match seq.kind {
        SequenceKind::Linear => (0..=(n - p)).any(|start| {
            let window = &seq.vertices[start..start + p];
            window == order || window == mirror.as_slice()
        }),
        SequenceKind::Circular => (0..n).any(|start| {
            let fwd = (0..p).all(|i| seq.vertices[(start + i) % n] == order[i]);
            let bwd = (0..p).all(|i| seq.vertices[(start + i) % n] == mirror[i]);
            fwd || bwd
        }),
    }
}

/// Checks an assembly against a hypergraph under a genome model: no circular
/// sequences in the linear model, per-vertex occurrences within multiplicity,
/// every unordered edge covered by a contiguous window with exactly its
/// content, and every ordered interval covered by its order or the mirror.
pub fn is_compatible(
    assembly: &Assembly,
    h: &AssemblyHypergraph,
    model: Model,
) -> CompatibilityReport {
    let mut violations = Vec::new();
    if model == Model::Linear {
        for (i, seq) in assembly.sequences().iter().enumerate() {
            if seq.kind == SequenceKind::Circular {
                violations.push(Violation::CircularInLinearModel { sequence: i });
            }
        }
    }
    let counts = assembly.occurrence_counts(h.vertex_count());
    for v in h.vertex_ids() {
        if counts[v] > h.multiplicity(v) as usize {
            violations.push(Violation::MultiplicityExceeded {
                vertex: h.name(v).to_owned(),
                used: counts[v],
                cap: h.multiplicity(v),
            });
        }
    }
    for edge in h.edges() {
        match &edge.order {
            None => {
                let target: BTreeSet<VertexId> = edge.members.iter().copied().collect();
                if !assembly
                    .sequences()
                    .iter()
                    .any(|seq| unordered_edge_compatible(seq, &target))
                {
                    violations.push(Violation::EdgeNotCovered {
                        edge: h.edge_label(edge),
                    });
                }
            }
            Some(order) => {
                if !assembly
                    .sequences()
                    .iter()
                    .any(|seq| ordered_edge_compatible(seq, order))
                {
                    violations.push(Violation::OrderNotCovered {
                        edge: h.edge_label(edge),
                    });
                }
            }
        }
    }
    CompatibilityReport { violations }
}

/// True when every vertex of `h` appears at least once in the assembly.
/// Engines emit whole-genome witnesses, so their Yes witnesses satisfy this
/// in addition to [`is_compatible`].
pub fn covers_all_vertices(assembly: &Assembly, h: &AssemblyHypergraph) -> bool {
    assembly
        .occurrence_counts(h.vertex_count())
        .iter()
        .all(|&c| c >= 1)
}
