//! Small named instances used throughout the test suites and docs.

use crate::model::{AssemblyHypergraph, HypergraphBuilder};

/// Star around a duplicated center: five vertices, `c` has multiplicity 2,
/// four unit adjacencies into `c`.
pub fn star() -> AssemblyHypergraph {
    let mut b = HypergraphBuilder::new();
    b.vertex("a", 1)
        .vertex("b", 1)
        .vertex("c", 2)
        .vertex("d", 1)
        .vertex("e", 1)
        .adjacency("a", "c", 1)
        .adjacency("b", "c", 1)
        .adjacency("c", "d", 1)
        .adjacency("c", "e", 1);
    b.build().expect("fixture")
}

/// [`star`] plus the ordered interval {a,c,d} with order a.c.d, which pins the
/// assembly down to a single choice.
pub fn star_ordered() -> AssemblyHypergraph {
    let mut b = HypergraphBuilder::new();
    b.vertex("a", 1)
        .vertex("b", 1)
        .vertex("c", 2)
        .vertex("d", 1)
        .vertex("e", 1)
        .adjacency("a", "c", 1)
        .adjacency("b", "c", 1)
        .adjacency("c", "d", 1)
        .adjacency("c", "e", 1)
        .ordered_interval(&["a", "c", "d"], &["a", "c", "d"], 1);
    b.build().expect("fixture")
}

/// Three vertices on a path: p - q - r, all multiplicity 1.
pub fn path3() -> AssemblyHypergraph {
    let mut b = HypergraphBuilder::new();
    b.vertex("p", 1)
        .vertex("q", 1)
        .vertex("r", 1)
        .adjacency("p", "q", 1)
        .adjacency("q", "r", 1);
    b.build().expect("fixture")
}

/// Triangle on three multiplicity-1 vertices.
pub fn triangle() -> AssemblyHypergraph {
    let mut b = HypergraphBuilder::new();
    b.vertex("x", 1)
        .vertex("y", 1)
        .vertex("z", 1)
        .adjacency("x", "y", 1)
        .adjacency("y", "z", 1)
        .adjacency("x", "z", 1);
    b.build().expect("fixture")
}

/// Claw: center x adjacent to a, b, c, all multiplicity 1.
pub fn claw() -> AssemblyHypergraph {
    let mut b = HypergraphBuilder::new();
    b.vertex("a", 1)
        .vertex("b", 1)
        .vertex("c", 1)
        .vertex("x", 1)
        .adjacency("a", "x", 1)
        .adjacency("b", "x", 1)
        .adjacency("c", "x", 1);
    b.build().expect("fixture")
}

/// Complete graph on four multiplicity-1 vertices, unit weights.
pub fn k4() -> AssemblyHypergraph {
    let mut b = HypergraphBuilder::new();
    b.vertex("a", 1).vertex("b", 1).vertex("c", 1).vertex("d", 1);
    let names = ["a", "b", "c", "d"];
    for i in 0..4 {
        for j in (i + 1)..4 {
            b.adjacency(names[i], names[j], 1);
        }
    }
    b.build().expect("fixture")
}

/// One repeat r with three spokes and a single unordered triple {a,r,b} of
/// weight 2.
pub fn trip1() -> AssemblyHypergraph {
    let mut b = HypergraphBuilder::new();
    b.vertex("a", 1)
        .vertex("b", 1)
        .vertex("d", 1)
        .vertex("r", 2)
        .adjacency("a", "r", 1)
        .adjacency("b", "r", 1)
        .adjacency("d", "r", 1)
        .interval(&["a", "r", "b"], 2);
    b.build().expect("fixture")
}
