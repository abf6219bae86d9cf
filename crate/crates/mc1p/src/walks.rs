//! Walk extraction for adjacency-shaped instances: pair up edge slots at every
//! vertex into transitions, read off the orbits as trails and cycles, then (in
//! the linear model) splice cycles into other orbits or open them at vertices
//! with spare multiplicity.
//!
//! Every edge is traversed exactly once, so each vertex is visited
//! ceil(deg/2) times, plus one for each opened cycle. Edges may carry a `via`
//! payload: vertices emitted between the endpoints when the edge is traversed
//! (used to lift contracted triples back into walks).

use crate::model::{Model, Sequence, VertexId};

#[derive(Debug, Clone)]
pub(crate) struct WalkEdge {
    pub u: VertexId,
    pub v: VertexId,
    /// Emitted between `u` and `v` when traversing from `u`.
    pub via: Vec<VertexId>,
}

impl WalkEdge {
    pub fn plain(u: VertexId, v: VertexId) -> Self {
        WalkEdge { u, v, via: Vec::new() }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct WalkGraph {
    pub vertex_count: usize,
    /// Visit budget per vertex (the multiplicity function).
    pub budget: Vec<u32>,
    pub edges: Vec<WalkEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum WalkError {
    /// A leftover cycle has no vertex with spare budget to open at.
    NoSpareOnCycle,
}

/// Slot id: edge index * 2 + end (0 = u side, 1 = v side).
type Slot = usize;

fn slot_vertex(g: &WalkGraph, s: Slot) -> VertexId {
    let e = &g.edges[s / 2];
    if s % 2 == 0 {
        e.u
    } else {
        e.v
    }
}

struct Pairing {
    /// partner[s] = Some(t) when slots s and t form a transition at their
    /// shared vertex; None marks a walk endpoint.
    partner: Vec<Option<Slot>>,
}

impl Pairing {
    fn initial(g: &WalkGraph) -> Pairing {
        let mut at_vertex: Vec<Vec<Slot>> = vec![Vec::new(); g.vertex_count];
        for s in 0..2 * g.edges.len() {
            at_vertex[slot_vertex(g, s)].push(s);
        }
        let mut partner = vec![None; 2 * g.edges.len()];
        for slots in &at_vertex {
            for pair in slots.chunks(2) {
                if let [a, b] = pair {
                    partner[*a] = Some(*b);
                    partner[*b] = Some(*a);
                }
            }
        }
        Pairing { partner }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum OrbitKind {
    Trail,
    Cycle,
}

#[derive(Debug, Clone)]
struct Orbit {
    kind: OrbitKind,
    /// Edge traversals in order: (edge index, entered-from-u).
    steps: Vec<(usize, bool)>,
}

fn other_slot(s: Slot) -> Slot {
    s ^ 1
}

fn collect_orbits(g: &WalkGraph, pairing: &Pairing) -> Vec<Orbit> {
    let mut orbit_of_edge = vec![usize::MAX; g.edges.len()];
    let mut orbits = Vec::new();
    // Open trails first: each starts at an unpaired slot.
    for start in 0..2 * g.edges.len() {
        if pairing.partner[start].is_some() || orbit_of_edge[start / 2] != usize::MAX {
            continue;
        }
        let mut steps = Vec::new();
        let mut slot = start;
        loop {
            orbit_of_edge[slot / 2] = orbits.len();
            steps.push((slot / 2, slot % 2 == 0));
            let arrive = other_slot(slot);
            match pairing.partner[arrive] {
                Some(next) => slot = next,
                None => break,
            }
        }
        orbits.push(Orbit {
            kind: OrbitKind::Trail,
            steps,
        });
    }
    // Remaining edges sit on cycles.
    for e in 0..g.edges.len() {
        if orbit_of_edge[e] != usize::MAX {
            continue;
        }
        let start = 2 * e;
        let mut steps = Vec::new();
        let mut slot = start;
        loop {
            orbit_of_edge[slot / 2] = orbits.len();
            steps.push((slot / 2, slot % 2 == 0));
            let arrive = other_slot(slot);
            let next = pairing.partner[arrive].expect("cycle slots are all paired");
            if next == start {
                break;
            }
            slot = next;
        }
        orbits.push(Orbit {
            kind: OrbitKind::Cycle,
            steps,
        });
    }
    orbits
}

fn orbit_visits(g: &WalkGraph, orbit: &Orbit) -> Vec<(VertexId, Slot, Option<Slot>)> {
    // Each visit is the arrival slot plus the paired departure slot (if any).
    let mut visits = Vec::new();
    for (i, &(edge, from_u)) in orbit.steps.iter().enumerate() {
        let arrive: Slot = 2 * edge + usize::from(from_u);
        let depart = if i + 1 < orbit.steps.len() {
            let (ne, nf) = orbit.steps[i + 1];
            Some(2 * ne + usize::from(!nf))
        } else if orbit.kind == OrbitKind::Cycle {
            let (ne, nf) = orbit.steps[0];
            Some(2 * ne + usize::from(!nf))
        } else {
            None
        };
        visits.push((slot_vertex(g, arrive), arrive, depart));
    }
    if orbit.kind == OrbitKind::Trail {
        // The start of a trail is also a visit, entered from nowhere.
        let (e0, f0) = orbit.steps[0];
        let start_slot = 2 * e0 + usize::from(!f0);
        visits.push((slot_vertex(g, start_slot), start_slot, None));
    }
    visits
}

fn total_visits(g: &WalkGraph, pairing: &Pairing) -> Vec<usize> {
    let mut slots = vec![0usize; g.vertex_count];
    let mut singles = vec![0usize; g.vertex_count];
    for s in 0..2 * g.edges.len() {
        let v = slot_vertex(g, s);
        slots[v] += 1;
        if pairing.partner[s].is_none() {
            singles[v] += 1;
        }
    }
    (0..g.vertex_count).map(|v| (slots[v] + singles[v]) / 2).collect()
}

fn emit(g: &WalkGraph, orbit: &Orbit) -> Sequence {
    let mut vertices = Vec::new();
    let (e0, f0) = orbit.steps[0];
    let start = if f0 { g.edges[e0].u } else { g.edges[e0].v };
    vertices.push(start);
    for &(edge, from_u) in &orbit.steps {
        let e = &g.edges[edge];
        if from_u {
            vertices.extend(e.via.iter().copied());
            vertices.push(e.v);
        } else {
            vertices.extend(e.via.iter().rev().copied());
            vertices.push(e.u);
        }
    }
    match orbit.kind {
        OrbitKind::Trail => Sequence::linear(vertices),
        OrbitKind::Cycle => {
            // The closing step re-emits the start vertex; drop it.
            vertices.pop();
            Sequence::circular(vertices)
        }
    }
}

/// Decompose the multigraph into walks covering every edge exactly once.
/// Vertices with no incident edges become singleton linear sequences.
pub(crate) fn decompose(g: &WalkGraph, model: Model) -> Result<Vec<Sequence>, WalkError> {
    let mut pairing = Pairing::initial(g);
    if model == Model::Linear {
        loop {
            let orbits = collect_orbits(g, &pairing);
            let Some(cycle_idx) = orbits.iter().position(|o| o.kind == OrbitKind::Cycle) else {
                break;
            };
            // Membership of vertices in orbits, to find a splice point.
            let cycle = &orbits[cycle_idx];
            let cycle_visits = orbit_visits(g, cycle);
            let mut splice: Option<(Slot, Slot, Slot, Option<Slot>)> = None;
            'search: for other in orbits.iter().enumerate().filter(|(i, _)| *i != cycle_idx) {
                for (v, arrive, depart) in orbit_visits(g, other.1) {
                    if let Some(&(_, ca, cd)) = cycle_visits.iter().find(|(cv, _, _)| *cv == v) {
                        splice = Some((ca, cd.expect("cycle visits always paired"), arrive, depart));
                        break 'search;
                    }
                }
            }
            if let Some((ca, cd, oa, od)) = splice {
                // Cross the transitions at the shared vertex: the cycle is
                // inserted into the other orbit; visit counts are unchanged.
                pairing.partner[ca] = Some(oa);
                pairing.partner[oa] = Some(ca);
                pairing.partner[cd] = od;
                if let Some(od) = od {
                    pairing.partner[od] = Some(cd);
                }
                continue;
            }
            // Isolated cycle: open it at a vertex with spare budget.
            let visits = total_visits(g, &pairing);
            let open = cycle_visits
                .iter()
                .filter(|(v, _, _)| visits[*v] + 1 <= g.budget[*v] as usize)
                .min_by_key(|(v, _, _)| *v);
            match open {
                Some(&(_, arrive, depart)) => {
                    let depart = depart.expect("cycle visits always paired");
                    pairing.partner[arrive] = None;
                    pairing.partner[depart] = None;
                }
                None => return Err(WalkError::NoSpareOnCycle),
            }
        }
    }
    let orbits = collect_orbits(g, &pairing);
    let mut sequences: Vec<Sequence> = orbits.iter().map(|o| emit(g, o)).collect();
    let mut touched = vec![false; g.vertex_count];
    for e in &g.edges {
        touched[e.u] = true;
        touched[e.v] = true;
    }
    for v in 0..g.vertex_count {
        if !touched[v] {
            sequences.push(Sequence::linear(vec![v]));
        }
    }
    Ok(sequences)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::SequenceKind;

    fn graph(n: usize, budget: Vec<u32>, edges: &[(usize, usize)]) -> WalkGraph {
        WalkGraph {
            vertex_count: n,
            budget,
            edges: edges.iter().map(|&(u, v)| WalkEdge::plain(u, v)).collect(),
        }
    }

    #[test]
    fn path_is_one_trail() {
        let g = graph(3, vec![1, 1, 1], &[(0, 1), (1, 2)]);
        let seqs = decompose(&g, Model::Linear).unwrap();
        assert_eq!(seqs.len(), 1);
        assert_eq!(seqs[0], Sequence::linear(vec![0, 1, 2]));
    }

    #[test]
    fn triangle_mixed_is_cycle() {
        let g = graph(3, vec![1, 1, 1], &[(0, 1), (0, 2), (1, 2)]);
        let seqs = decompose(&g, Model::Mixed).unwrap();
        assert_eq!(seqs.len(), 1);
        assert_eq!(seqs[0].kind, SequenceKind::Circular);
        assert_eq!(seqs[0].len(), 3);
    }

    #[test]
    fn triangle_linear_has_no_spare() {
        let g = graph(3, vec![1, 1, 1], &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(decompose(&g, Model::Linear), Err(WalkError::NoSpareOnCycle));
    }

    #[test]
    fn triangle_with_pendant_splices() {
        // Triangle on {0,1,2} plus pendant 3-0, budget 2 at vertex 0.
        let g = graph(4, vec![2, 1, 1, 1], &[(0, 1), (0, 2), (0, 3), (1, 2)]);
        let seqs = decompose(&g, Model::Linear).unwrap();
        assert!(seqs.iter().all(|s| s.kind == SequenceKind::Linear));
        let occurrences: usize = seqs.iter().map(|s| s.vertices.iter().filter(|&&v| v == 0).count()).sum();
        assert_eq!(occurrences, 2);
        let edge_count: usize = seqs.iter().map(|s| s.len() - 1).sum();
        assert_eq!(edge_count, 4);
    }

    #[test]
    fn isolated_cycle_opens_at_spare_vertex() {
        let g = graph(3, vec![1, 2, 1], &[(0, 1), (0, 2), (1, 2)]);
        let seqs = decompose(&g, Model::Linear).unwrap();
        assert_eq!(seqs.len(), 1);
        assert_eq!(seqs[0].kind, SequenceKind::Linear);
        assert_eq!(seqs[0].len(), 4);
        assert_eq!(seqs[0].vertices.iter().filter(|&&v| v == 1).count(), 2);
    }

    #[test]
    fn via_payload_is_expanded() {
        let g = WalkGraph {
            vertex_count: 3,
            budget: vec![1, 1, 2],
            edges: vec![WalkEdge { u: 0, v: 1, via: vec![2] }],
        };
        let seqs = decompose(&g, Model::Mixed).unwrap();
        assert_eq!(seqs[0], Sequence::linear(vec![0, 2, 1]));
    }
}
