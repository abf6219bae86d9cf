//! Consecutive-ones recognition for repeat-free instances: the linear model
//! asks for a vertex order per connected component in which every edge is a
//! contiguous window; the mixed model falls back to a circular order where a
//! linear one does not exist.

use pq_tree::PQTree;

use crate::model::{
    is_compatible, Assembly, AssemblyHypergraph, Model, Sequence, Verdict, VertexId,
};
use crate::EngineError;

const ENGINE: &str = "c1p";

/// One consecutive order realizing all constraints, or None.
fn consecutive_order(leaves: &[VertexId], constraints: &[Vec<VertexId>]) -> Option<Vec<VertexId>> {
    let mut tree = PQTree::from_leaves(leaves).expect("distinct leaves");
    for c in constraints {
        debug_assert!(!c.is_empty());
        tree = tree.reduction(c).ok()?;
    }
    tree.sort_minimal();
    Some(tree.frontier())
}

fn require_repeat_free(h: &AssemblyHypergraph) -> Result<(), EngineError> {
    if let Some(v) = h.vertex_ids().find(|&v| h.is_repeat(v)) {
        return Err(EngineError::precondition(
            ENGINE,
            format!("vertex {:?} has multiplicity {} > 1", h.name(v), h.multiplicity(v)),
        ));
    }
    Ok(())
}

fn component_edges<'a>(
    h: &'a AssemblyHypergraph,
    component: &[VertexId],
) -> Vec<&'a crate::model::Edge> {
    h.edges()
        .iter()
        .filter(|e| component.contains(&e.members[0]))
        .collect()
}

/// Checks the ordered intervals of a component against its witness sequence.
/// Window matching is reversal- and rotation-invariant, so no alternative
/// orientations need to be searched.
fn ordered_intervals_hold(
    h: &AssemblyHypergraph,
    component: &[VertexId],
    seq: &Sequence,
) -> Result<(), String> {
    for edge in component_edges(h, component) {
        if let Some(order) = &edge.order {
            let probe = Assembly::new(vec![seq.clone()]);
            let single = AssemblyHypergraph::from_parts(
                h.names().to_vec(),
                h.multiplicities().to_vec(),
                vec![crate::model::Edge {
                    members: edge.members.clone(),
                    weight: edge.weight,
                    order: Some(order.clone()),
                }],
            )
            .expect("edge taken from a valid hypergraph");
            if !is_compatible(&probe, &single, Model::Mixed).ok() {
                let names: Vec<&str> = order.iter().map(|&v| h.name(v)).collect();
                return Err(format!(
                    "ordered interval {} is not realized by the consecutive-ones witness; \
                     ordered recognition is delegated to the spanning realization engine \
                     where applicable",
                    names.join("."),
                ));
            }
        }
    }
    Ok(())
}

/// Linear-model decision for repeat-free hypergraphs: every connected
/// component must admit a consecutive-ones order. Ordered intervals are
/// recognized unordered, then order-checked against the witness.
pub fn c1p_linear(h: &AssemblyHypergraph, ) -> Result<Verdict, EngineError> {
    h.validate()?;
    require_repeat_free(h)?;
    let mut sequences = Vec::new();
    for component in h.components() {
        if component.len() == 1 {
            sequences.push(Sequence::linear(component));
            continue;
        }
        let constraints: Vec<Vec<VertexId>> = component_edges(h, &component)
            .iter()
            .map(|e| e.members.clone())
            .collect();
        match consecutive_order(&component, &constraints) {
            Some(order) => {
                let seq = Sequence::linear(order);
                if let Err(reason) = ordered_intervals_hold(h, &component, &seq) {
                    return Ok(Verdict::no_because(reason));
                }
                sequences.push(seq);
            }
            None => {
                return Ok(Verdict::no_because(format!(
                    "component of {:?} has no consecutive-ones order",
                    h.name(component[0]),
                )));
            }
        }
    }
    let witness = Assembly::new(sequences);
    debug_assert!(is_compatible(&witness, h, Model::Linear).ok());
    Ok(Verdict::yes(witness))
}

/// Mixed-model decision for repeat-free hypergraphs: per component, a linear
/// sequence when the component has the consecutive-ones property, otherwise a
/// circular sequence when it has the circular variant (tested by fixing one
/// vertex and complementing the edges that contain it).
pub fn c1p_mixed(h: &AssemblyHypergraph) -> Result<Verdict, EngineError> {
    h.validate()?;
    require_repeat_free(h)?;
    let mut sequences = Vec::new();
    for component in h.components() {
        if component.len() == 1 {
            sequences.push(Sequence::linear(component));
            continue;
        }
        let edges = component_edges(h, &component);
        let constraints: Vec<Vec<VertexId>> = edges.iter().map(|e| e.members.clone()).collect();
        let seq = if let Some(order) = consecutive_order(&component, &constraints) {
            Sequence::linear(order)
        } else {
            let pivot = component[0];
            let complemented: Vec<Vec<VertexId>> = constraints
                .iter()
                .map(|members| {
                    if members.contains(&pivot) {
                        component
                            .iter()
                            .copied()
                            .filter(|v| !members.contains(v))
                            .collect()
                    } else {
                        members.clone()
                    }
                })
                .filter(|c: &Vec<VertexId>| !c.is_empty())
                .collect();
            match consecutive_order(&component, &complemented) {
                Some(order) => Sequence::circular(order),
                None => {
                    return Ok(Verdict::no_because(format!(
                        "component of {:?} has neither a consecutive-ones \
                         nor a circular-ones order",
                        h.name(component[0]),
                    )));
                }
            }
        };
        if let Err(reason) = ordered_intervals_hold(h, &component, &seq) {
            return Ok(Verdict::no_because(reason));
        }
        sequences.push(seq);
    }
    let witness = Assembly::new(sequences);
    debug_assert!(is_compatible(&witness, h, Model::Mixed).ok());
    Ok(Verdict::yes(witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::{HypergraphBuilder, SequenceKind};

    /// Brute-force reference for tiny repeat-free instances: try every
    /// permutation of the whole vertex set as a single line.
    fn some_permutation_realizes(h: &AssemblyHypergraph) -> bool {
        fn permutations(items: Vec<VertexId>) -> Vec<Vec<VertexId>> {
            if items.len() <= 1 {
                return vec![items];
            }
            let mut out = Vec::new();
            for i in 0..items.len() {
                let mut rest = items.clone();
                let v = rest.remove(i);
                for mut tail in permutations(rest) {
                    tail.insert(0, v);
                    out.push(tail);
                }
            }
            out
        }
        let vertices: Vec<VertexId> = h.vertex_ids().collect();
        permutations(vertices).into_iter().any(|perm| {
            let a = Assembly::new(vec![Sequence::linear(perm)]);
            is_compatible(&a, h, Model::Linear).ok()
        })
    }

    #[test]
    fn path3_linear_unique_order() {
        let h = fixtures::path3();
        let verdict = c1p_linear(&h).unwrap();
        let id = |n: &str| h.vertex_id(n).unwrap();
        assert_eq!(
            verdict.witness.unwrap(),
            Assembly::new(vec![Sequence::linear(vec![id("p"), id("q"), id("r")])])
        );
    }

    #[test]
    fn triangle_linear_no_matches_permutation_brute_force() {
        let h = fixtures::triangle();
        assert!(!some_permutation_realizes(&h));
        assert!(!c1p_linear(&h).unwrap().is_yes());
    }

    #[test]
    fn nested_interval_instance_is_linear_yes() {
        let mut b = HypergraphBuilder::new();
        b.vertex("1", 1)
            .vertex("2", 1)
            .vertex("3", 1)
            .vertex("4", 1)
            .adjacency("1", "2", 1)
            .adjacency("2", "3", 1)
            .interval(&["1", "2", "3"], 1);
        let h = b.build().unwrap();
        assert!(some_permutation_realizes(&h));
        let verdict = c1p_linear(&h).unwrap();
        let witness = verdict.witness.unwrap();
        // 1.2.3 contiguous somewhere; 4 floats free as its own component.
        assert!(is_compatible(&witness, &h, Model::Linear).ok());
        assert_eq!(witness.sequences().len(), 2);
    }

    #[test]
    fn triangle_mixed_circular_witness() {
        let h = fixtures::triangle();
        let verdict = c1p_mixed(&h).unwrap();
        let witness = verdict.witness.unwrap();
        assert_eq!(witness.sequences().len(), 1);
        assert_eq!(witness.sequences()[0].kind, SequenceKind::Circular);
        assert!(is_compatible(&witness, &h, Model::Mixed).ok());
    }

    #[test]
    fn path3_mixed_prefers_linear() {
        let verdict = c1p_mixed(&fixtures::path3()).unwrap();
        let witness = verdict.witness.unwrap();
        assert!(witness.sequences().iter().all(|s| s.kind == SequenceKind::Linear));
    }

    #[test]
    fn claw_mixed_no() {
        assert!(!c1p_mixed(&fixtures::claw()).unwrap().is_yes());
    }

    #[test]
    fn repeats_are_rejected() {
        let err = c1p_linear(&fixtures::star()).unwrap_err();
        assert!(matches!(err, EngineError::PreconditionViolated { .. }));
    }

    #[test]
    fn linear_yes_implies_mixed_yes() {
        for h in [fixtures::path3(), fixtures::triangle(), fixtures::claw(), fixtures::k4()] {
            if c1p_linear(&h).unwrap().is_yes() {
                assert!(c1p_mixed(&h).unwrap().is_yes());
            }
        }
    }

    #[test]
    fn ordered_interval_checked_on_witness() {
        let mut b = HypergraphBuilder::new();
        b.vertex("1", 1)
            .vertex("2", 1)
            .vertex("3", 1)
            .adjacency("1", "2", 1)
            .adjacency("2", "3", 1)
            .ordered_interval(&["1", "2", "3"], &["1", "2", "3"], 1);
        let h = b.build().unwrap();
        assert!(c1p_linear(&h).unwrap().is_yes());

        let mut b = HypergraphBuilder::new();
        b.vertex("1", 1)
            .vertex("2", 1)
            .vertex("3", 1)
            .adjacency("1", "2", 1)
            .adjacency("2", "3", 1)
            .ordered_interval(&["1", "2", "3"], &["2", "1", "3"], 1);
        let h = b.build().unwrap();
        let verdict = c1p_linear(&h).unwrap();
        assert!(!verdict.is_yes());
        assert!(verdict.note.unwrap().contains("ordered interval"));
    }
}
