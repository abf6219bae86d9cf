//! Fixed-parameter decision for general instances: make c(r) copies of every
//! repeat r, guess up to two neighbours for each copy, build a repeat-free
//! expansion, and decide it with the consecutive-ones engine. The instance is
//! a yes exactly when some guess leads to a yes, and any witness of the
//! expansion decodes back to a witness of the original.

use std::collections::{BTreeMap, BTreeSet};

use crate::c1p;
use crate::model::{
    is_compatible, Assembly, AssemblyHypergraph, Edge, Model, Verdict, VertexId,
};
use crate::EngineError;

const ENGINE: &str = "fpt";

/// A vertex of the expanded world: an original non-repeat, or one copy of a
/// repeat.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExpandedVertex {
    Original(VertexId),
    /// Index into [`RepeatCopySet::copies`].
    Copy(usize),
}

/// The copies introduced for the repeats: copy i carries its origin and a
/// 1-based index up to the origin's multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepeatCopySet {
    pub copies: Vec<(VertexId, u32)>,
}

impl RepeatCopySet {
    /// Copies in (repeat, index) lexicographic order.
    pub fn for_instance(h: &AssemblyHypergraph) -> Self {
        let mut copies = Vec::new();
        for r in h.vertex_ids() {
            if h.is_repeat(r) {
                for i in 1..=h.multiplicity(r) {
                    copies.push((r, i));
                }
            }
        }
        RepeatCopySet { copies }
    }

    pub fn origin(&self, copy: usize) -> VertexId {
        self.copies[copy].0
    }

    pub fn copies_of(&self, r: VertexId) -> impl Iterator<Item = usize> + '_ {
        self.copies
            .iter()
            .enumerate()
            .filter(move |(_, &(origin, _))| origin == r)
            .map(|(i, _)| i)
    }
}

/// One guess: each copy is assigned 0, 1, or 2 neighbours from the expanded
/// neighbourhood of its origin.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NeighborChoice {
    /// Per copy (parallel to [`RepeatCopySet::copies`]), the chosen
    /// neighbours, sorted, at most 2.
    pub assignments: Vec<Vec<ExpandedVertex>>,
}

impl NeighborChoice {
    pub fn empty(copies: usize) -> Self {
        NeighborChoice {
            assignments: vec![Vec::new(); copies],
        }
    }

    /// The de-duplicated edge set induced by the assignments. The expansion
    /// depends only on this set.
    pub fn edge_set(&self) -> BTreeSet<(ExpandedVertex, ExpandedVertex)> {
        let mut edges = BTreeSet::new();
        for (copy, chosen) in self.assignments.iter().enumerate() {
            let c = ExpandedVertex::Copy(copy);
            for &t in chosen {
                edges.insert(if c < t { (c, t) } else { (t, c) });
            }
        }
        edges
    }
}

/// The expanded neighbourhood a copy of `r` may choose from: non-repeat
/// neighbours of `r`, plus every copy of each repeat neighbour and of `r`
/// itself (never the choosing copy).
fn neighbor_pool(
    h: &AssemblyHypergraph,
    copies: &RepeatCopySet,
    copy: usize,
) -> Vec<ExpandedVertex> {
    let r = copies.origin(copy);
    let mut pool: BTreeSet<ExpandedVertex> = BTreeSet::new();
    for u in h.neighborhood(r) {
        if h.is_repeat(u) {
            pool.extend(copies.copies_of(u).map(ExpandedVertex::Copy));
        } else {
            pool.insert(ExpandedVertex::Original(u));
        }
    }
    pool.extend(copies.copies_of(r).map(ExpandedVertex::Copy));
    pool.remove(&ExpandedVertex::Copy(copy));
    pool.into_iter().collect()
}

fn degrees_within_two(edges: &BTreeSet<(ExpandedVertex, ExpandedVertex)>) -> bool {
    let mut deg: BTreeMap<ExpandedVertex, u32> = BTreeMap::new();
    for &(a, b) in edges {
        for v in [a, b] {
            let d = deg.entry(v).or_insert(0);
            *d += 1;
            if *d > 2 {
                return false;
            }
        }
    }
    true
}

/// Streams every neighbour-choice assignment: per copy the subsets of its
/// pool of size 0, 1, or 2 in sorted order, filtered so that no vertex
/// accumulates de-duplicated choice-edge degree above 2.
pub fn enumerate_choices(h: &AssemblyHypergraph) -> impl Iterator<Item = NeighborChoice> {
    let copies = RepeatCopySet::for_instance(h);
    let options: Vec<Vec<Vec<ExpandedVertex>>> = (0..copies.copies.len())
        .map(|c| {
            let pool = neighbor_pool(h, &copies, c);
            let mut opts: Vec<Vec<ExpandedVertex>> = vec![Vec::new()];
            opts.extend(pool.iter().map(|&v| vec![v]));
            for i in 0..pool.len() {
                for j in (i + 1)..pool.len() {
                    opts.push(vec![pool[i], pool[j]]);
                }
            }
            opts
        })
        .collect();
    ChoiceIter {
        options,
        cursor: Some(Vec::new()),
        started: false,
    }
}

struct ChoiceIter {
    options: Vec<Vec<Vec<ExpandedVertex>>>,
    /// Odometer over per-copy option indices; None once exhausted.
    cursor: Option<Vec<usize>>,
    started: bool,
}

impl ChoiceIter {
    fn advance(&mut self) {
        let Some(cursor) = &mut self.cursor else { return };
        if cursor.is_empty() {
            self.cursor = None;
            return;
        }
        for i in (0..cursor.len()).rev() {
            cursor[i] += 1;
            if cursor[i] < self.options[i].len() {
                return;
            }
            cursor[i] = 0;
        }
        self.cursor = None;
    }
}

impl Iterator for ChoiceIter {
    type Item = NeighborChoice;

    fn next(&mut self) -> Option<NeighborChoice> {
        if !self.started {
            self.started = true;
            self.cursor = Some(vec![0; self.options.len()]);
        }
        loop {
            let cursor = self.cursor.as_ref()?;
            let choice = NeighborChoice {
                assignments: cursor
                    .iter()
                    .enumerate()
                    .map(|(i, &o)| self.options[i][o].clone())
                    .collect(),
            };
            self.advance();
            if degrees_within_two(&choice.edge_set()) {
                return Some(choice);
            }
        }
    }
}

/// Closed-form bound on the number of streamed choices:
/// (C(x,2) + x + 1)^(rho * gamma) with x = delta * (Delta + rho * gamma - 1).
pub fn choice_bound(h: &AssemblyHypergraph) -> u128 {
    let stats = h.validate().expect("valid instance");
    let rho_gamma = (stats.repeat_count as u128).saturating_mul(stats.max_multiplicity as u128);
    let x = (stats.max_degree as u128)
        .saturating_mul((stats.max_edge_size as u128 + rho_gamma).saturating_sub(1));
    let per_copy = x
        .saturating_mul(x.saturating_sub(1))
        / 2
        + x
        + 1;
    let mut bound: u128 = 1;
    for _ in 0..rho_gamma {
        bound = bound.saturating_mul(per_copy);
    }
    bound
}

/// Reasons a particular choice cannot lead to an assembly and is skipped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChoiceRejected {
    /// Some vertex would need more than two distinct neighbours.
    DegreeExceeded(ExpandedVertex),
    /// The choice edges close a cycle through copies only; its chain walk has
    /// no non-repeat endpoint to anchor the rewriting.
    PureCopyCycle,
    /// The copy-chain structure cannot produce a window whose content is the
    /// original edge with this index.
    UncoverableEdge(usize),
}

/// The repeat-free expansion of an instance under one neighbour choice.
#[derive(Debug, Clone)]
pub struct ExpandedHypergraph {
    pub hypergraph: AssemblyHypergraph,
    /// Expansion vertex id to original vertex id (identity on non-repeats).
    pub decode: Vec<VertexId>,
    /// Choice edges, as expansion vertex id pairs.
    pub f_edges: Vec<(VertexId, VertexId)>,
    /// Member sets (expansion ids) of the rewritten original edges.
    pub expanded_edges: Vec<Vec<VertexId>>,
}

impl ExpandedHypergraph {
    pub fn decode_assembly(&self, a: &Assembly) -> Assembly {
        a.map_vertices(|v| self.decode[v])
    }
}

struct FGraph {
    adj: BTreeMap<ExpandedVertex, Vec<ExpandedVertex>>,
}

impl FGraph {
    fn new(edges: &BTreeSet<(ExpandedVertex, ExpandedVertex)>) -> FGraph {
        let mut adj: BTreeMap<ExpandedVertex, Vec<ExpandedVertex>> = BTreeMap::new();
        for &(a, b) in edges {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        FGraph { adj }
    }

    fn neighbors(&self, v: ExpandedVertex) -> &[ExpandedVertex] {
        self.adj.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    /// True when some connected component consists of copies only and closes
    /// a cycle (edge count equals vertex count).
    fn has_pure_copy_cycle(&self) -> bool {
        let mut seen: BTreeSet<ExpandedVertex> = BTreeSet::new();
        for &start in self.adj.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut stack = vec![start];
            let mut vertices = Vec::new();
            let mut edge_ends = 0usize;
            while let Some(v) = stack.pop() {
                if !seen.insert(v) {
                    continue;
                }
                vertices.push(v);
                edge_ends += self.neighbors(v).len();
                stack.extend(self.neighbors(v).iter().copied());
            }
            let all_copies = vertices
                .iter()
                .all(|v| matches!(v, ExpandedVertex::Copy(_)));
            if all_copies && edge_ends / 2 == vertices.len() {
                return true;
            }
        }
        false
    }

    /// Follow the chain leaving `from` into `start`, collecting consecutive
    /// copies that satisfy `qualify`. Stops at the first non-copy,
    /// non-qualifying, or missing continuation.
    fn collect_chain(
        &self,
        from: ExpandedVertex,
        start: ExpandedVertex,
        qualify: &dyn Fn(ExpandedVertex) -> bool,
        out: &mut BTreeSet<ExpandedVertex>,
    ) {
        let mut prev = from;
        let mut cur = start;
        loop {
            if !matches!(cur, ExpandedVertex::Copy(_)) || !qualify(cur) {
                return;
            }
            out.insert(cur);
            match self.neighbors(cur).iter().copied().find(|&n| n != prev) {
                Some(n) => {
                    prev = cur;
                    cur = n;
                }
                None => return,
            }
        }
    }

    /// True when some run of qualifying copies along the chains has exactly
    /// the target origin content. Qualifying components are paths here: a
    /// qualifying cycle would be a pure copy cycle, rejected beforehand.
    fn some_copy_run_covers(
        &self,
        qualify: &dyn Fn(ExpandedVertex) -> bool,
        origin_of: &dyn Fn(ExpandedVertex) -> VertexId,
        target: &BTreeSet<VertexId>,
    ) -> bool {
        let is_member = |v: ExpandedVertex| matches!(v, ExpandedVertex::Copy(_)) && qualify(v);
        let mut visited: BTreeSet<ExpandedVertex> = BTreeSet::new();
        for &start in self.adj.keys() {
            if !is_member(start) || visited.contains(&start) {
                continue;
            }
            let inner_degree = self
                .neighbors(start)
                .iter()
                .filter(|&&n| is_member(n))
                .count();
            if inner_degree > 1 {
                continue; // interior; the walk starts from an endpoint
            }
            let mut path = vec![start];
            visited.insert(start);
            let mut prev: Option<ExpandedVertex> = None;
            let mut cur = start;
            while let Some(n) = self
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&n| is_member(n) && Some(n) != prev)
            {
                visited.insert(n);
                path.push(n);
                prev = Some(cur);
                cur = n;
            }
            for i in 0..path.len() {
                let mut content: BTreeSet<VertexId> = BTreeSet::new();
                for &v in &path[i..] {
                    content.insert(origin_of(v));
                    if content.len() == target.len() {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Builds the repeat-free expansion for one choice, or reports why the choice
/// is rejected. Rejection skips the choice; it is never fatal.
pub fn expand(
    h: &AssemblyHypergraph,
    choice: &NeighborChoice,
) -> Result<ExpandedHypergraph, ChoiceRejected> {
    let copies = RepeatCopySet::for_instance(h);
    assert_eq!(choice.assignments.len(), copies.copies.len());
    let edges = choice.edge_set();
    {
        let mut deg: BTreeMap<ExpandedVertex, u32> = BTreeMap::new();
        for &(a, b) in &edges {
            for v in [a, b] {
                let d = deg.entry(v).or_insert(0);
                *d += 1;
                if *d > 2 {
                    return Err(ChoiceRejected::DegreeExceeded(v));
                }
            }
        }
    }
    let f = FGraph::new(&edges);
    if f.has_pure_copy_cycle() {
        return Err(ChoiceRejected::PureCopyCycle);
    }

    let origin_of = |v: ExpandedVertex| match v {
        ExpandedVertex::Original(u) => u,
        ExpandedVertex::Copy(c) => copies.origin(c),
    };

    let mut rewritten: Vec<BTreeSet<ExpandedVertex>> = Vec::new();
    for (idx, edge) in h.edges().iter().enumerate() {
        let member_set: BTreeSet<VertexId> = edge.members.iter().copied().collect();
        let nonrep: Vec<VertexId> = edge
            .members
            .iter()
            .copied()
            .filter(|&v| !h.is_repeat(v))
            .collect();
        let qualify = |v: ExpandedVertex| member_set.contains(&origin_of(v));
        if nonrep.is_empty() {
            // Repeat-only edge: its window must be a forced run of copies.
            if !f.some_copy_run_covers(&qualify, &origin_of, &member_set) {
                return Err(ChoiceRejected::UncoverableEdge(idx));
            }
            continue;
        }
        let mut expanded: BTreeSet<ExpandedVertex> = nonrep
            .iter()
            .map(|&v| ExpandedVertex::Original(v))
            .collect();
        for &v in &nonrep {
            let xv = ExpandedVertex::Original(v);
            for &n in f.neighbors(xv) {
                f.collect_chain(xv, n, &qualify, &mut expanded);
            }
        }
        // Every repeat member of the edge needs a copy inside the window.
        let covered: BTreeSet<VertexId> = expanded.iter().map(|&v| origin_of(v)).collect();
        if covered != member_set {
            return Err(ChoiceRejected::UncoverableEdge(idx));
        }
        rewritten.push(expanded);
    }

    // Lay out expansion vertices: non-repeats first, then copies. Names get a
    // fixed-width index prefix so the sorted name table keeps this layout.
    let mut xid_of: BTreeMap<ExpandedVertex, VertexId> = BTreeMap::new();
    let mut decode = Vec::new();
    let mut names = Vec::new();
    for v in h.vertex_ids().filter(|&v| !h.is_repeat(v)) {
        xid_of.insert(ExpandedVertex::Original(v), decode.len());
        names.push(format!("{:05}~{}", decode.len(), h.name(v)));
        decode.push(v);
    }
    for (c, &(origin, i)) in copies.copies.iter().enumerate() {
        xid_of.insert(ExpandedVertex::Copy(c), decode.len());
        names.push(format!("{:05}~{}#{}", decode.len(), h.name(origin), i));
        decode.push(origin);
    }

    let mut member_sets: BTreeSet<Vec<VertexId>> = BTreeSet::new();
    let mut f_edges = Vec::new();
    for &(a, b) in &edges {
        let mut pair = vec![xid_of[&a], xid_of[&b]];
        pair.sort_unstable();
        f_edges.push((pair[0], pair[1]));
        member_sets.insert(pair);
    }
    let mut expanded_edges = Vec::new();
    for expanded in rewritten {
        let mut members: Vec<VertexId> = expanded.iter().map(|v| xid_of[v]).collect();
        members.sort_unstable();
        expanded_edges.push(members.clone());
        member_sets.insert(members);
    }

    let hypergraph = AssemblyHypergraph::from_parts(
        names,
        vec![1; decode.len()],
        member_sets
            .into_iter()
            .map(|members| Edge {
                members,
                weight: 1,
                order: None,
            })
            .collect(),
    )
    .expect("expansion is structurally valid");
    Ok(ExpandedHypergraph {
        hypergraph,
        decode,
        f_edges,
        expanded_edges,
    })
}

/// Options for the neighbour-choice search.
#[derive(Debug, Clone, Default)]
pub struct FptOptions {
    /// Keep searching after the first accepting choice and record them all.
    pub collect_all_accepting: bool,
}

#[derive(Debug, Clone)]
pub struct FptOutcome {
    pub verdict: Verdict,
    /// Distinct de-duplicated choice-edge sets examined.
    pub edge_sets_examined: u128,
    /// Accepting choices in search order (first only unless collecting all).
    pub accepting: Vec<NeighborChoice>,
}

/// Decision by neighbour-choice search. Equivalent to scanning
/// [`enumerate_choices`], but de-duplicated by choice-edge set, since the
/// expansion depends only on that set.
pub fn fpt_search(
    h: &AssemblyHypergraph,
    model: Model,
    options: &FptOptions,
) -> Result<FptOutcome, EngineError> {
    h.validate()?;
    if let Some((_, edge)) = h.intervals().find(|(_, e)| e.is_ordered()) {
        let names: Vec<&str> = edge.members.iter().map(|&v| h.name(v)).collect();
        return Err(EngineError::precondition(
            ENGINE,
            format!(
                "ordered interval {{{}}} must be realized by the spanning engine first",
                names.join(",")
            ),
        ));
    }
    let copies = RepeatCopySet::for_instance(h);
    let mut candidates: BTreeSet<(ExpandedVertex, ExpandedVertex)> = BTreeSet::new();
    for c in 0..copies.copies.len() {
        let cv = ExpandedVertex::Copy(c);
        for t in neighbor_pool(h, &copies, c) {
            candidates.insert(if cv < t { (cv, t) } else { (t, cv) });
        }
    }
    let candidates: Vec<(ExpandedVertex, ExpandedVertex)> = candidates.into_iter().collect();

    struct Search<'a> {
        h: &'a AssemblyHypergraph,
        model: Model,
        options: &'a FptOptions,
        copies: usize,
        candidates: &'a [(ExpandedVertex, ExpandedVertex)],
        chosen: Vec<(ExpandedVertex, ExpandedVertex)>,
        degree: BTreeMap<ExpandedVertex, u32>,
        examined: u128,
        accepting: Vec<NeighborChoice>,
        verdict: Option<Verdict>,
    }
    impl Search<'_> {
        fn choice_from_chosen(&self) -> NeighborChoice {
            let mut assignments = vec![Vec::new(); self.copies];
            for &(a, b) in &self.chosen {
                if let ExpandedVertex::Copy(c) = a {
                    assignments[c].push(b);
                }
                if let ExpandedVertex::Copy(c) = b {
                    assignments[c].push(a);
                }
            }
            for set in &mut assignments {
                set.sort();
                set.dedup();
            }
            NeighborChoice { assignments }
        }

        fn at_leaf(&mut self) {
            self.examined += 1;
            let choice = self.choice_from_chosen();
            let Ok(expansion) = expand(self.h, &choice) else {
                return;
            };
            let verdict = match self.model {
                Model::Linear => c1p::c1p_linear(&expansion.hypergraph),
                Model::Mixed => c1p::c1p_mixed(&expansion.hypergraph),
            }
            .expect("expansion is repeat-free");
            if let Some(witness) = verdict.witness {
                let decoded = expansion.decode_assembly(&witness);
                debug_assert!(
                    is_compatible(&decoded, self.h, self.model).ok(),
                    "decoded witness must satisfy the original instance"
                );
                if self.verdict.is_none() {
                    self.verdict = Some(Verdict::yes(decoded));
                }
                self.accepting.push(choice);
            }
        }

        fn run(&mut self, i: usize) {
            if self.verdict.is_some() && !self.options.collect_all_accepting {
                return;
            }
            if i == self.candidates.len() {
                self.at_leaf();
                return;
            }
            // Exclude first: sparser guesses come before denser ones.
            self.run(i + 1);
            let (a, b) = self.candidates[i];
            let fits = self.degree.get(&a).copied().unwrap_or(0) < 2
                && self.degree.get(&b).copied().unwrap_or(0) < 2;
            if fits {
                *self.degree.entry(a).or_insert(0) += 1;
                *self.degree.entry(b).or_insert(0) += 1;
                self.chosen.push((a, b));
                self.run(i + 1);
                self.chosen.pop();
                *self.degree.get_mut(&a).unwrap() -= 1;
                *self.degree.get_mut(&b).unwrap() -= 1;
            }
        }
    }

    let mut search = Search {
        h,
        model,
        options,
        copies: copies.copies.len(),
        candidates: &candidates,
        chosen: Vec::new(),
        degree: BTreeMap::new(),
        examined: 0,
        accepting: Vec::new(),
        verdict: None,
    };
    search.run(0);
    debug_assert!(search.examined <= choice_bound(h));
    Ok(FptOutcome {
        verdict: search.verdict.unwrap_or_else(Verdict::no),
        edge_sets_examined: search.examined,
        accepting: search.accepting,
    })
}

/// Decides the instance in the given model; intervals must be unordered.
pub fn decide_fpt(h: &AssemblyHypergraph, model: Model) -> Result<Verdict, EngineError> {
    Ok(fpt_search(h, model, &FptOptions::default())?.verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::HypergraphBuilder;
    use crate::oracle;

    #[test]
    fn no_repeats_single_empty_choice() {
        let h = fixtures::path3();
        let choices: Vec<NeighborChoice> = enumerate_choices(&h).collect();
        assert_eq!(choices, vec![NeighborChoice::empty(0)]);
    }

    #[test]
    fn star_stream_contains_the_known_assembly_choice() {
        let h = fixtures::star();
        let copies = RepeatCopySet::for_instance(&h);
        assert_eq!(copies.copies.len(), 2);
        let id = |n: &str| h.vertex_id(n).unwrap();
        // The assembly {a.c.d, b.c.e} assigns copy 1 the neighbours {a, d}
        // and copy 2 the neighbours {b, e}.
        let target = NeighborChoice {
            assignments: vec![
                vec![
                    ExpandedVertex::Original(id("a")),
                    ExpandedVertex::Original(id("d")),
                ],
                vec![
                    ExpandedVertex::Original(id("b")),
                    ExpandedVertex::Original(id("e")),
                ],
            ],
        };
        assert!(enumerate_choices(&h).any(|c| c == target));
    }

    #[test]
    fn two_copy_count_matches_direct_combinatorics() {
        // V = {u, r}, c(r) = 2, one adjacency {u, r}: each copy picks subsets
        // of {u, other copy}; all 4 x 4 assignments pass the degree filter.
        let mut b = HypergraphBuilder::new();
        b.vertex("u", 1).vertex("r", 2).adjacency("u", "r", 1);
        let h = b.build().unwrap();
        let mut direct = 0;
        for a in 0..4u8 {
            for bb in 0..4u8 {
                let mut edges: BTreeSet<(u8, u8)> = BTreeSet::new();
                for (copy, set) in [a, bb].iter().enumerate() {
                    let copy = copy as u8;
                    if set & 1 != 0 {
                        edges.insert((copy, 10)); // copy -> u
                    }
                    if set & 2 != 0 {
                        let other = 1 - copy;
                        edges.insert((copy.min(other), copy.max(other)));
                    }
                }
                let mut deg: BTreeMap<u8, u32> = BTreeMap::new();
                for &(x, y) in &edges {
                    *deg.entry(x).or_insert(0) += 1;
                    *deg.entry(y).or_insert(0) += 1;
                }
                if deg.values().all(|&d| d <= 2) {
                    direct += 1;
                }
            }
        }
        assert_eq!(direct, 16);
        assert_eq!(enumerate_choices(&h).count(), direct);
    }

    #[test]
    fn stream_respects_closed_form_bound() {
        for h in [fixtures::star(), fixtures::trip1()] {
            let streamed = enumerate_choices(&h).count() as u128;
            assert!(streamed <= choice_bound(&h));
        }
    }

    #[test]
    fn expansion_is_repeat_free_and_small_for_star() {
        let h = fixtures::star();
        let id = |n: &str| h.vertex_id(n).unwrap();
        let choice = NeighborChoice {
            assignments: vec![
                vec![
                    ExpandedVertex::Original(id("a")),
                    ExpandedVertex::Original(id("d")),
                ],
                vec![
                    ExpandedVertex::Original(id("b")),
                    ExpandedVertex::Original(id("e")),
                ],
            ],
        };
        let expansion = expand(&h, &choice).unwrap();
        let stats = expansion.hypergraph.validate().unwrap();
        assert_eq!(stats.max_multiplicity, 1);
        assert_eq!(stats.vertex_count, 6);
        // Four choice edges pair each copy with its guessed neighbours; the
        // original adjacencies collapse onto the same pairs.
        assert_eq!(stats.edge_count, 4);
    }

    #[test]
    fn no_repeats_expansion_is_identity_shaped() {
        let h = fixtures::triangle();
        let expansion = expand(&h, &NeighborChoice::empty(0)).unwrap();
        assert_eq!(expansion.hypergraph.vertex_count(), 3);
        assert_eq!(expansion.hypergraph.edges().len(), 3);
        assert_eq!(expansion.decode, vec![0, 1, 2]);
    }

    #[test]
    fn interval_expansion_splits_by_choice() {
        // Intervals {a,b,r} and {c,d,r} with c(r) = 2: assigning copy 1 to
        // {a,b} and copy 2 to {c,d} rewrites each interval with its own copy.
        let mut b = HypergraphBuilder::new();
        b.vertex("a", 1)
            .vertex("b", 1)
            .vertex("c", 1)
            .vertex("d", 1)
            .vertex("r", 2)
            .interval(&["a", "b", "r"], 1)
            .interval(&["c", "d", "r"], 1);
        let h = b.build().unwrap();
        let id = |n: &str| h.vertex_id(n).unwrap();
        let choice = NeighborChoice {
            assignments: vec![
                vec![
                    ExpandedVertex::Original(id("a")),
                    ExpandedVertex::Original(id("b")),
                ],
                vec![
                    ExpandedVertex::Original(id("c")),
                    ExpandedVertex::Original(id("d")),
                ],
            ],
        };
        let expansion = expand(&h, &choice).unwrap();
        let decoded: Vec<BTreeSet<VertexId>> = expansion
            .expanded_edges
            .iter()
            .map(|m| m.iter().map(|&x| expansion.decode[x]).collect())
            .collect();
        assert_eq!(decoded.len(), 2);
        assert!(decoded.contains(&[id("a"), id("b"), id("r")].into_iter().collect()));
        assert!(decoded.contains(&[id("c"), id("d"), id("r")].into_iter().collect()));
    }

    #[test]
    fn star_decides_yes_in_linear_model() {
        let h = fixtures::star();
        let verdict = decide_fpt(&h, Model::Linear).unwrap();
        let witness = verdict.witness.expect("yes");
        assert!(is_compatible(&witness, &h, Model::Linear).ok());
    }

    #[test]
    fn claw_mixed_no() {
        assert!(!decide_fpt(&fixtures::claw(), Model::Mixed).unwrap().is_yes());
    }

    #[test]
    fn shared_repeat_intervals_match_oracle() {
        let mut b = HypergraphBuilder::new();
        b.vertex("a", 1)
            .vertex("b", 1)
            .vertex("c", 1)
            .vertex("d", 1)
            .vertex("r", 2)
            .interval(&["a", "b", "r"], 1)
            .interval(&["c", "d", "r"], 1);
        let h = b.build().unwrap();
        let verdict = decide_fpt(&h, Model::Mixed).unwrap();
        assert!(verdict.is_yes());
        assert!(is_compatible(&verdict.witness.unwrap(), &h, Model::Mixed).ok());
        assert!(oracle::oracle_decide(&h, Model::Mixed).unwrap().is_yes());
    }

    #[test]
    fn ordered_intervals_are_rejected() {
        let err = decide_fpt(&fixtures::star_ordered(), Model::Linear).unwrap_err();
        assert!(matches!(err, EngineError::PreconditionViolated { .. }));
    }

    #[test]
    fn adjacency_to_repeat_with_bystander_edge_stays_sound() {
        // Edges {a,b} and {a,r} with c(r) = 2: any witness must place a next
        // to b; guesses that would wedge a copy between them fail recognition
        // and are never decoded into an invalid witness.
        let mut b = HypergraphBuilder::new();
        b.vertex("a", 1)
            .vertex("b", 1)
            .vertex("r", 2)
            .adjacency("a", "b", 1)
            .adjacency("a", "r", 1);
        let h = b.build().unwrap();
        for model in [Model::Linear, Model::Mixed] {
            let verdict = decide_fpt(&h, model).unwrap();
            assert!(verdict.is_yes());
            assert!(is_compatible(&verdict.witness.unwrap(), &h, model).ok());
        }
    }

    #[test]
    fn repeat_only_edge_is_decidable() {
        let mut b = HypergraphBuilder::new();
        b.vertex("q", 2).vertex("r", 2).adjacency("q", "r", 1);
        let h = b.build().unwrap();
        for model in [Model::Linear, Model::Mixed] {
            let verdict = decide_fpt(&h, model).unwrap();
            assert_eq!(
                verdict.is_yes(),
                oracle::oracle_decide(&h, model).unwrap().is_yes()
            );
            if let Some(witness) = verdict.witness {
                assert!(is_compatible(&witness, &h, model).ok());
            }
        }
    }

    #[test]
    fn enumeration_count_grows_with_copies() {
        let mut counts = Vec::new();
        for mult in 2..=4 {
            let mut b = HypergraphBuilder::new();
            b.vertex("u", 1).vertex("r", mult).adjacency("u", "r", 1);
            let h = b.build().unwrap();
            counts.push(enumerate_choices(&h).count());
        }
        assert!(counts.windows(2).all(|w| w[0] < w[1]), "{counts:?}");
    }
}
