//! Adjacency graphs with multiplicities: the degree-condition decision with
//! walk extraction, and maximum-weight edge compatibility via a capacitated
//! subgraph solver.

use crate::model::{
    is_compatible, Assembly, AssemblyHypergraph, Model, Verdict, VertexId,
};
use crate::walks::{decompose, WalkEdge, WalkGraph};
use crate::EngineError;

const ENGINE: &str = "adjacency";

/// Decides whether an adjacency graph admits an assembly.
///
/// Mixed model: yes iff deg(v) <= 2 c(v) everywhere. Linear model:
/// additionally every connected component must have positive spare capacity
/// sum(2 c(v) - deg(v)). Yes answers carry a witness built by pairing edge
/// slots at every vertex into walks.
pub fn decide_adjacency(
    h: &AssemblyHypergraph,
    model: Model,
) -> Result<Verdict, EngineError> {
    h.validate()?;
    if h.edges().iter().any(|e| e.is_interval()) {
        return Err(EngineError::precondition(ENGINE, "input contains intervals"));
    }
    let mut degree = vec![0usize; h.vertex_count()];
    for edge in h.edges() {
        for &v in &edge.members {
            degree[v] += 1;
        }
    }
    for v in h.vertex_ids() {
        if degree[v] > 2 * h.multiplicity(v) as usize {
            return Ok(Verdict::no_because(format!(
                "vertex {:?} has {} neighbours; at most {} fit into {} occurrences",
                h.name(v),
                degree[v],
                2 * h.multiplicity(v),
                h.multiplicity(v),
            )));
        }
    }
    if model == Model::Linear {
        for component in h.components() {
            let spare: i64 = component
                .iter()
                .map(|&v| 2 * h.multiplicity(v) as i64 - degree[v] as i64)
                .sum();
            if spare <= 0 {
                let smallest = h.name(component[0]);
                return Ok(Verdict::no_because(format!(
                    "component of {smallest:?} has no spare capacity to end a linear walk",
                )));
            }
        }
    }
    let graph = WalkGraph {
        vertex_count: h.vertex_count(),
        budget: h.multiplicities().to_vec(),
        edges: h
            .edges()
            .iter()
            .map(|e| WalkEdge::plain(e.members[0], e.members[1]))
            .collect(),
    };
    let sequences = decompose(&graph, model)
        .expect("degree and spare-capacity conditions guarantee extraction");
    let witness = Assembly::new(sequences);
    debug_assert!(is_compatible(&witness, h, model).ok());
    Ok(Verdict::yes(witness))
}

/// A simple weighted graph with per-vertex degree capacities. Parallel edges
/// are allowed and distinguished by index.
#[derive(Debug, Clone)]
pub struct CapacityGraph {
    pub vertex_count: usize,
    pub capacities: Vec<u32>,
    pub edges: Vec<CapacityEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapacityEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: i64,
}

impl CapacityGraph {
    /// Capacities 2 c(v) over the vertices of `h`, edges from its adjacencies.
    pub fn from_adjacencies(h: &AssemblyHypergraph) -> CapacityGraph {
        CapacityGraph {
            vertex_count: h.vertex_count(),
            capacities: h.multiplicities().iter().map(|&c| 2 * c).collect(),
            edges: h
                .adjacencies()
                .map(|(_, e)| CapacityEdge {
                    u: e.members[0],
                    v: e.members[1],
                    weight: e.weight,
                })
                .collect(),
        }
    }
}

/// Maximum-weight edge subset with every selected degree within capacity.
///
/// Exact branch-and-bound over the edge list. Ties between optima are broken
/// toward the lexicographically smallest sorted index set, so results are
/// reproducible. Intended for the instance sizes this crate certifies
/// (tens of edges); the search is exponential in the worst case.
pub fn max_weight_capacitated_subgraph(g: &CapacityGraph) -> (Vec<usize>, i64) {
    let m = g.edges.len();
    // Suffix sums of positive weights bound what the remaining edges can add.
    let mut optimistic = vec![0i64; m + 1];
    for i in (0..m).rev() {
        optimistic[i] = optimistic[i + 1] + g.edges[i].weight.max(0);
    }
    struct Search<'a> {
        g: &'a CapacityGraph,
        optimistic: &'a [i64],
        remaining: Vec<i64>,
        chosen: Vec<usize>,
        best_weight: i64,
        best_set: Vec<usize>,
    }
    impl Search<'_> {
        fn run(&mut self, i: usize, weight: i64) {
            if weight + self.optimistic[i] < self.best_weight {
                return;
            }
            if i == self.g.edges.len() {
                if weight > self.best_weight
                    || (weight == self.best_weight && self.chosen < self.best_set)
                {
                    self.best_weight = weight;
                    self.best_set = self.chosen.clone();
                }
                return;
            }
            let edge = &self.g.edges[i];
            let fits = self.remaining[edge.u] >= 1 && self.remaining[edge.v] >= 1;
            if fits && edge.weight >= 0 {
                self.remaining[edge.u] -= 1;
                self.remaining[edge.v] -= 1;
                self.chosen.push(i);
                self.run(i + 1, weight + edge.weight);
                self.chosen.pop();
                self.remaining[edge.u] += 1;
                self.remaining[edge.v] += 1;
            }
            self.run(i + 1, weight);
        }
    }
    let mut search = Search {
        g,
        optimistic: &optimistic,
        remaining: g.capacities.iter().map(|&c| c as i64).collect(),
        chosen: Vec::new(),
        best_weight: i64::MIN,
        best_set: Vec::new(),
    };
    search.run(0, 0);
    (search.best_set, search.best_weight)
}

/// Result of maximum-weight adjacency compatibility in the mixed model.
#[derive(Debug, Clone)]
pub struct AdjacencyMaximization {
    /// Indices into `h.edges()` of the kept adjacencies.
    pub kept: Vec<usize>,
    pub weight: i64,
    pub assembly: Assembly,
}

/// Maximum-weight subset of adjacencies whose restriction admits a mixed
/// assembly: exactly the capacitated subgraph optimum with capacities 2 c(v),
/// plus a witness assembly of the kept set.
pub fn maximize_adjacencies_mixed(
    h: &AssemblyHypergraph,
) -> Result<AdjacencyMaximization, EngineError> {
    h.validate()?;
    if h.edges().iter().any(|e| e.is_interval()) {
        return Err(EngineError::precondition(ENGINE, "input contains intervals"));
    }
    let g = CapacityGraph::from_adjacencies(h);
    let (kept, weight) = max_weight_capacitated_subgraph(&g);
    let graph = WalkGraph {
        vertex_count: h.vertex_count(),
        budget: h.multiplicities().to_vec(),
        edges: kept
            .iter()
            .map(|&i| WalkEdge::plain(g.edges[i].u, g.edges[i].v))
            .collect(),
    };
    let sequences = decompose(&graph, Model::Mixed)
        .expect("mixed extraction cannot fail within capacities");
    let assembly = Assembly::new(sequences);
    let mut keep_mask = vec![false; h.edges().len()];
    for &i in &kept {
        keep_mask[i] = true;
    }
    debug_assert!(is_compatible(&assembly, &h.restrict_edges(&keep_mask), Model::Mixed).ok());
    Ok(AdjacencyMaximization {
        kept,
        weight,
        assembly,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::covers_all_vertices;

    #[test]
    fn star_linear_yes_with_known_witness() {
        let h = fixtures::star();
        let verdict = decide_adjacency(&h, Model::Linear).unwrap();
        let witness = verdict.witness.expect("yes");
        assert!(is_compatible(&witness, &h, Model::Linear).ok());
        assert!(covers_all_vertices(&witness, &h));
        // The three possible linear assemblies of the star, canonicalized.
        let id = |n: &str| h.vertex_id(n).unwrap();
        let expected: Vec<Assembly> = [
            [["a", "c", "b"], ["d", "c", "e"]],
            [["a", "c", "d"], ["b", "c", "e"]],
            [["a", "c", "e"], ["b", "c", "d"]],
        ]
        .iter()
        .map(|pair| {
            Assembly::new(
                pair.iter()
                    .map(|seq| {
                        crate::model::Sequence::linear(seq.iter().map(|n| id(n)).collect())
                    })
                    .collect(),
            )
        })
        .collect();
        assert!(expected.contains(&witness));
    }

    #[test]
    fn claw_mixed_no() {
        let verdict = decide_adjacency(&fixtures::claw(), Model::Mixed).unwrap();
        assert!(!verdict.is_yes());
    }

    #[test]
    fn triangle_linear_no_mixed_yes() {
        let h = fixtures::triangle();
        assert!(!decide_adjacency(&h, Model::Linear).unwrap().is_yes());
        let verdict = decide_adjacency(&h, Model::Mixed).unwrap();
        let witness = verdict.witness.expect("yes");
        assert!(witness
            .sequences()
            .iter()
            .any(|s| s.kind == crate::model::SequenceKind::Circular));
    }

    #[test]
    fn path3_linear_yes() {
        // Spare capacity (2c - deg) sums to 2 > 0 on the single component.
        let verdict = decide_adjacency(&fixtures::path3(), Model::Linear).unwrap();
        assert!(verdict.is_yes());
    }

    #[test]
    fn interval_input_is_rejected() {
        let err = decide_adjacency(&fixtures::trip1(), Model::Mixed).unwrap_err();
        assert!(matches!(err, EngineError::PreconditionViolated { .. }));
    }

    #[test]
    fn k4_capacitated_optimum_is_four() {
        let g = CapacityGraph::from_adjacencies(&fixtures::k4());
        let (kept, weight) = max_weight_capacitated_subgraph(&g);
        assert_eq!(weight, 4);
        assert_eq!(kept.len(), 4);
    }

    #[test]
    fn path3_capacitated_keeps_everything() {
        let g = CapacityGraph::from_adjacencies(&fixtures::path3());
        let (kept, weight) = max_weight_capacitated_subgraph(&g);
        assert_eq!(weight, 2);
        assert_eq!(kept, vec![0, 1]);
    }

    #[test]
    fn single_heavy_edge_is_kept() {
        let g = CapacityGraph {
            vertex_count: 2,
            capacities: vec![2, 2],
            edges: vec![CapacityEdge { u: 0, v: 1, weight: 5 }],
        };
        assert_eq!(max_weight_capacitated_subgraph(&g), (vec![0], 5));
    }

    #[test]
    fn parallel_labeled_edges_are_individually_selectable() {
        let g = CapacityGraph {
            vertex_count: 2,
            capacities: vec![2, 2],
            edges: vec![
                CapacityEdge { u: 0, v: 1, weight: 3 },
                CapacityEdge { u: 0, v: 1, weight: 4 },
                CapacityEdge { u: 0, v: 1, weight: 2 },
            ],
        };
        let (kept, weight) = max_weight_capacitated_subgraph(&g);
        assert_eq!(weight, 7);
        assert_eq!(kept, vec![0, 1]);
    }

    #[test]
    fn maximize_star_drops_nothing() {
        let h = fixtures::star();
        let out = maximize_adjacencies_mixed(&h).unwrap();
        assert_eq!(out.weight, 4);
        assert_eq!(out.kept.len(), 4);
    }

    #[test]
    fn maximize_claw_drops_one() {
        let out = maximize_adjacencies_mixed(&fixtures::claw()).unwrap();
        assert_eq!(out.weight, 2);
    }
}
