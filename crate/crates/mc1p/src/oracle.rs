//! Exhaustive ground truth at small scale: enumerate every canonical
//! assembly, decide compatibility by brute force, and compute optimal edge
//! subsets. Every engine in this crate is certified against this module.
//!
//! Assemblies are enumerated as walk covers: consecutive vertices of a
//! sequence always share an edge (including the wrap of a circular sequence).
//! A sequence can always be cut at a junction whose endpoints share no edge
//! without breaking any covering window — a window's content lies inside a
//! single edge — so the restriction changes neither decidability nor
//! witnesses, and it keeps assembly counts meaningful.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::model::{
    is_compatible, Assembly, AssemblyHypergraph, Model, Sequence, Verdict, VertexId,
};

/// Hard cap on total multiplicity for exhaustive enumeration. Overridable via
/// the `MC1P_ORACLE_CAP` environment variable.
pub fn hard_cap() -> usize {
    std::env::var("MC1P_ORACLE_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(9)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("total multiplicity {total} exceeds the oracle cap {cap} (set MC1P_ORACLE_CAP to raise it)")]
    CapExceeded { total: usize, cap: usize },
    #[error("{count} candidate edges exceed the subset search limit of {limit}")]
    TooManyCandidates { count: usize, limit: usize },
}

/// Limits for assembly enumeration.
#[derive(Debug, Clone)]
pub struct EnumerationBounds {
    /// Upper bound on vertex occurrences summed over all sequences.
    pub max_total_occurrences: usize,
    /// Upper bound on the number of sequences per assembly.
    pub max_sequences: usize,
    pub model: Model,
    /// Require every vertex to appear at least once (the whole-genome
    /// convention shared with the engines). Disable to probe assemblies that
    /// drop vertices.
    pub require_full_coverage: bool,
}

impl EnumerationBounds {
    pub fn for_instance(h: &AssemblyHypergraph, model: Model) -> Self {
        let total: usize = h.multiplicities().iter().map(|&c| c as usize).sum();
        EnumerationBounds {
            max_total_occurrences: total,
            max_sequences: total.max(1),
            model,
            require_full_coverage: true,
        }
    }
}

fn check_cap(h: &AssemblyHypergraph) -> Result<(), OracleError> {
    let total: usize = h.multiplicities().iter().map(|&c| c as usize).sum();
    let cap = hard_cap();
    if total > cap {
        return Err(OracleError::CapExceeded { total, cap });
    }
    Ok(())
}

struct Enumerator<'a, F: FnMut(&Assembly) -> bool> {
    h: &'a AssemblyHypergraph,
    bounds: &'a EnumerationBounds,
    /// share[u][v]: some edge contains both u and v.
    share: Vec<Vec<bool>>,
    used: Vec<u32>,
    total: usize,
    current: Vec<VertexId>,
    done: Vec<Sequence>,
    last_linear: Option<Vec<VertexId>>,
    last_circular: Option<Vec<VertexId>>,
    circular_phase: bool,
    keep_going: bool,
    emit: F,
}

impl<F: FnMut(&Assembly) -> bool> Enumerator<'_, F> {
    fn coverage_ok(&self) -> bool {
        !self.bounds.require_full_coverage || self.used.iter().all(|&u| u >= 1)
    }

    fn is_canonical_linear(v: &[VertexId]) -> bool {
        let rev: Vec<VertexId> = v.iter().rev().copied().collect();
        *v <= *rev
    }

    fn is_canonical_circular(v: &[VertexId]) -> bool {
        Sequence::circular(v.to_vec()).vertices == v
    }

    fn go(&mut self) {
        if !self.keep_going {
            return;
        }
        if self.current.is_empty() {
            if self.coverage_ok() {
                let assembly = Assembly::new(self.done.clone());
                if !(self.emit)(&assembly) {
                    self.keep_going = false;
                    return;
                }
            }
            if self.done.len() < self.bounds.max_sequences
                && self.total < self.bounds.max_total_occurrences
            {
                for v in 0..self.h.vertex_count() {
                    if self.used[v] < self.h.multiplicity(v) {
                        self.used[v] += 1;
                        self.total += 1;
                        self.current.push(v);
                        self.go();
                        self.current.pop();
                        self.total -= 1;
                        self.used[v] -= 1;
                        if !self.keep_going {
                            return;
                        }
                    }
                }
            }
            return;
        }
        // Close the running sequence as a linear walk.
        if !self.circular_phase && Self::is_canonical_linear(&self.current) {
            let candidate = self.current.clone();
            if self.last_linear.as_ref().is_none_or(|last| *last <= candidate) {
                let saved_last = self.last_linear.take();
                self.last_linear = Some(candidate.clone());
                self.done.push(Sequence {
                    kind: crate::model::SequenceKind::Linear,
                    vertices: candidate,
                });
                let saved_current = std::mem::take(&mut self.current);
                self.go();
                self.current = saved_current;
                self.done.pop();
                self.last_linear = saved_last;
                if !self.keep_going {
                    return;
                }
            }
        }
        // Close it as a circular walk (mixed model only; the wrap must also
        // step along an edge).
        if self.bounds.model == Model::Mixed
            && self.share[self.current[self.current.len() - 1]][self.current[0]]
            && Self::is_canonical_circular(&self.current)
        {
            let candidate = self.current.clone();
            if self.last_circular.as_ref().is_none_or(|last| *last <= candidate) {
                let saved_last = self.last_circular.take();
                let saved_phase = self.circular_phase;
                self.last_circular = Some(candidate.clone());
                self.circular_phase = true;
                self.done.push(Sequence {
                    kind: crate::model::SequenceKind::Circular,
                    vertices: candidate,
                });
                let saved_current = std::mem::take(&mut self.current);
                self.go();
                self.current = saved_current;
                self.done.pop();
                self.circular_phase = saved_phase;
                self.last_circular = saved_last;
                if !self.keep_going {
                    return;
                }
            }
        }
        // Extend along an edge.
        if self.total < self.bounds.max_total_occurrences {
            let tail = self.current[self.current.len() - 1];
            for v in 0..self.h.vertex_count() {
                if self.used[v] < self.h.multiplicity(v) && self.share[tail][v] {
                    self.used[v] += 1;
                    self.total += 1;
                    self.current.push(v);
                    self.go();
                    self.current.pop();
                    self.total -= 1;
                    self.used[v] -= 1;
                    if !self.keep_going {
                        return;
                    }
                }
            }
        }
    }
}

/// Streams every canonical assembly within bounds to `emit`, in a fixed
/// deterministic order and with no duplicates. `emit` returns `false` to stop
/// early. Returns `Ok(true)` when the stream ran to completion.
pub fn enumerate_assemblies<F: FnMut(&Assembly) -> bool>(
    h: &AssemblyHypergraph,
    bounds: &EnumerationBounds,
    emit: F,
) -> Result<bool, OracleError> {
    check_cap(h)?;
    let n = h.vertex_count();
    let mut share = vec![vec![false; n]; n];
    for edge in h.edges() {
        for (i, &u) in edge.members.iter().enumerate() {
            for &v in &edge.members[i + 1..] {
                share[u][v] = true;
                share[v][u] = true;
            }
        }
    }
    let mut e = Enumerator {
        h,
        bounds,
        share,
        used: vec![0; n],
        total: 0,
        current: Vec::new(),
        done: Vec::new(),
        last_linear: None,
        last_circular: None,
        circular_phase: false,
        keep_going: true,
        emit,
    };
    e.go();
    Ok(e.keep_going)
}

/// Reference decision: yes iff some enumerated assembly is compatible. The
/// witness is the smallest compatible assembly in canonical order.
pub fn oracle_decide(h: &AssemblyHypergraph, model: Model) -> Result<Verdict, OracleError> {
    let bounds = EnumerationBounds::for_instance(h, model);
    let mut best: Option<Assembly> = None;
    enumerate_assemblies(h, &bounds, |a| {
        if is_compatible(a, h, model).ok() {
            match &best {
                Some(b) if b <= a => {}
                _ => best = Some(a.clone()),
            }
        }
        true
    })?;
    Ok(match best {
        Some(witness) => Verdict::yes(witness),
        None => Verdict::no(),
    })
}

/// Like [`oracle_decide`] but stops at the first compatible assembly in
/// enumeration order. Deterministic, but the witness is not necessarily the
/// canonical minimum. Used by the large equivalence sweeps where only the
/// yes/no answer matters.
pub fn oracle_decide_first(h: &AssemblyHypergraph, model: Model) -> Result<Verdict, OracleError> {
    let bounds = EnumerationBounds::for_instance(h, model);
    let mut found: Option<Assembly> = None;
    enumerate_assemblies(h, &bounds, |a| {
        if is_compatible(a, h, model).ok() {
            found = Some(a.clone());
            false
        } else {
            true
        }
    })?;
    Ok(match found {
        Some(witness) => Verdict::yes(witness),
        None => Verdict::no(),
    })
}

/// Number of distinct canonical assemblies compatible with `h`.
pub fn count_compatible(h: &AssemblyHypergraph, model: Model) -> Result<usize, OracleError> {
    let bounds = EnumerationBounds::for_instance(h, model);
    let mut count = 0usize;
    enumerate_assemblies(h, &bounds, |a| {
        if is_compatible(a, h, model).ok() {
            count += 1;
        }
        true
    })?;
    Ok(count)
}

const MAX_CANDIDATES: usize = 12;

/// Maximum-weight subset of `candidates` (indices into `h.edges()`) whose
/// addition to the non-candidate edges admits an assembly. Ties are broken
/// toward the lexicographically smallest sorted index set. Returns `None`
/// when no subset (not even the empty one) is feasible.
pub fn oracle_max_subset(
    h: &AssemblyHypergraph,
    candidates: &[usize],
    model: Model,
) -> Result<Option<(Vec<usize>, i64)>, OracleError> {
    check_cap(h)?;
    if candidates.len() > MAX_CANDIDATES {
        return Err(OracleError::TooManyCandidates {
            count: candidates.len(),
            limit: MAX_CANDIDATES,
        });
    }
    let k = candidates.len();
    let candidate_set: BTreeSet<usize> = candidates.iter().copied().collect();
    assert_eq!(candidate_set.len(), k, "candidate indices must be distinct");

    let mut ranked: Vec<(u32, i64, Vec<usize>)> = (0..(1u32 << k))
        .map(|mask| {
            let chosen: Vec<usize> = (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| candidates[i])
                .collect();
            let weight: i64 = chosen.iter().map(|&e| h.edges()[e].weight).sum();
            (mask, weight, chosen)
        })
        .collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.2.cmp(&b.2)));

    let mut feasible_masks: Vec<u32> = Vec::new();
    let mut infeasible_masks: Vec<u32> = Vec::new();
    for (mask, weight, chosen) in ranked {
        if infeasible_masks.iter().any(|&i| i & mask == i) {
            continue;
        }
        let known_feasible = feasible_masks.iter().any(|&f| mask & f == mask);
        let feasible = known_feasible || {
            let keep: Vec<bool> = (0..h.edges().len())
                .map(|e| !candidate_set.contains(&e) || chosen.contains(&e))
                .collect();
            let sub = h.restrict_edges(&keep);
            let yes = oracle_decide_first(&sub, model)?.is_yes();
            if yes {
                feasible_masks.push(mask);
            } else {
                infeasible_masks.push(mask);
            }
            yes
        };
        if feasible {
            return Ok(Some((chosen, weight)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::SequenceKind;

    #[test]
    fn single_vertex_has_one_assembly() {
        let mut b = crate::model::HypergraphBuilder::new();
        b.vertex("v", 1);
        let h = b.build().unwrap();
        assert_eq!(count_compatible(&h, Model::Linear).unwrap(), 1);
    }

    #[test]
    fn star_has_exactly_three_linear_assemblies() {
        let h = fixtures::star();
        assert_eq!(count_compatible(&h, Model::Linear).unwrap(), 3);
    }

    #[test]
    fn star_ordered_has_exactly_one_linear_assembly() {
        let h = fixtures::star_ordered();
        assert_eq!(count_compatible(&h, Model::Linear).unwrap(), 1);
        let id = |n: &str| h.vertex_id(n).unwrap();
        let expected = Assembly::new(vec![
            Sequence::linear(vec![id("a"), id("c"), id("d")]),
            Sequence::linear(vec![id("b"), id("c"), id("e")]),
        ]);
        assert_eq!(oracle_decide(&h, Model::Linear).unwrap().witness.unwrap(), expected);
    }

    #[test]
    fn triangle_decisions() {
        let h = fixtures::triangle();
        assert!(oracle_decide(&h, Model::Mixed).unwrap().is_yes());
        assert!(!oracle_decide(&h, Model::Linear).unwrap().is_yes());
    }

    #[test]
    fn claw_mixed_no() {
        assert!(!oracle_decide(&fixtures::claw(), Model::Mixed).unwrap().is_yes());
    }

    #[test]
    fn emitted_assemblies_are_canonical_and_distinct() {
        let h = fixtures::star();
        let bounds = EnumerationBounds::for_instance(&h, Model::Mixed);
        let mut seen = std::collections::BTreeSet::new();
        enumerate_assemblies(&h, &bounds, |a| {
            let recanonical = Assembly::new(a.sequences().to_vec());
            assert_eq!(&recanonical, a);
            assert!(seen.insert(a.clone()), "duplicate assembly emitted");
            true
        })
        .unwrap();
        assert!(!seen.is_empty());
    }

    #[test]
    fn decide_is_monotone_under_edge_removal() {
        let h = fixtures::star_ordered();
        let m = h.edges().len();
        let yes = oracle_decide_first(&h, Model::Linear).unwrap().is_yes();
        assert!(yes);
        for drop in 0..m {
            let keep: Vec<bool> = (0..m).map(|e| e != drop).collect();
            let sub = h.restrict_edges(&keep);
            assert!(oracle_decide_first(&sub, Model::Linear).unwrap().is_yes());
        }
    }

    #[test]
    fn degenerate_circulars_are_permitted() {
        let mut b = crate::model::HypergraphBuilder::new();
        b.vertex("u", 1).vertex("v", 1).adjacency("u", "v", 1);
        let h = b.build().unwrap();
        let bounds = EnumerationBounds::for_instance(&h, Model::Mixed);
        let mut any_circular_pair = false;
        enumerate_assemblies(&h, &bounds, |a| {
            if a.sequences()
                .iter()
                .any(|s| s.kind == SequenceKind::Circular && s.len() == 2)
            {
                any_circular_pair = true;
            }
            true
        })
        .unwrap();
        assert!(any_circular_pair);
    }

    #[test]
    fn cap_is_enforced() {
        let mut b = crate::model::HypergraphBuilder::new();
        for i in 0..10 {
            b.vertex(&format!("v{i}"), 1);
        }
        let h = b.build().unwrap();
        assert!(matches!(
            oracle_decide(&h, Model::Linear),
            Err(OracleError::CapExceeded { total: 10, .. })
        ));
    }

    #[test]
    fn max_subset_claw_and_k4() {
        let claw = fixtures::claw();
        let all: Vec<usize> = (0..claw.edges().len()).collect();
        let (_, w) = oracle_max_subset(&claw, &all, Model::Mixed).unwrap().unwrap();
        assert_eq!(w, 2);
        let k4 = fixtures::k4();
        let all: Vec<usize> = (0..k4.edges().len()).collect();
        let (_, w) = oracle_max_subset(&k4, &all, Model::Mixed).unwrap().unwrap();
        assert_eq!(w, 4);
    }

    #[test]
    fn max_subset_empty_candidates() {
        let h = fixtures::path3();
        let out = oracle_max_subset(&h, &[], Model::Linear).unwrap().unwrap();
        assert_eq!(out, (vec![], 0));
    }
}
