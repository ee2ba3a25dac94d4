//! Semiarc incidence structure of classical, virtual and marked-graph diagrams.
//!
//! Semiarcs carry labels `1..=semiarc_count`. Every node lists its four
//! endpoints; each label must occur once as an in-end and once as an out-end.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub type Label = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A classical crossing in normal form: `c = a ⊳̲ b` and `d = b ⊳̄ a`.
///
/// The oriented semiarcs map to the normal form as
///
/// | sign | a | b | c | d |
/// |------|---|---|---|---|
/// | +    | under-in | over-out | under-out | over-in |
/// | −    | under-out | over-in | under-in | over-out |
///
/// so one equation shape serves both signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassicalCrossing {
    pub a: Label,
    pub b: Label,
    pub c: Label,
    pub d: Label,
    pub sign: Sign,
}

impl ClassicalCrossing {
    /// Build from `[under-in, over-in, under-out, over-out]`.
    pub fn from_oriented(sign: Sign, [ui, oi, uo, oo]: [Label; 4]) -> Self {
        match sign {
            Sign::Pos => ClassicalCrossing { a: ui, b: oo, c: uo, d: oi, sign },
            Sign::Neg => ClassicalCrossing { a: uo, b: oi, c: ui, d: oo, sign },
        }
    }

    /// `[under-in, over-in, under-out, over-out]`.
    pub fn oriented(&self) -> [Label; 4] {
        match self.sign {
            Sign::Pos => [self.a, self.d, self.c, self.b],
            Sign::Neg => [self.c, self.b, self.a, self.d],
        }
    }
}

/// Two strands passing through each other: `a → c` and `b → d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VirtualNode {
    pub a: Label,
    pub b: Label,
    pub c: Label,
    pub d: Label,
}

/// A marked vertex with in-ends `a, b` and out-ends `c, d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MarkedVertex {
    pub a: Label,
    pub b: Label,
    pub c: Label,
    pub d: Label,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Crossing(ClassicalCrossing),
    Virtual(VirtualNode),
    Marked(MarkedVertex),
    /// A crossingless closed component made of one semiarc.
    Loop(Label),
}

impl Node {
    /// `(label, is_in_end)` for every endpoint of the node.
    pub fn ends(&self) -> [(Label, bool); 4] {
        match *self {
            Node::Crossing(x) => {
                let [ui, oi, uo, oo] = x.oriented();
                [(ui, true), (oi, true), (uo, false), (oo, false)]
            }
            Node::Virtual(VirtualNode { a, b, c, d }) | Node::Marked(MarkedVertex { a, b, c, d }) => {
                [(a, true), (b, true), (c, false), (d, false)]
            }
            Node::Loop(k) => [(k, true), (k, false), (0, true), (0, false)],
        }
    }

    fn end_count(&self) -> usize {
        match self {
            Node::Loop(_) => 2,
            _ => 4,
        }
    }

    /// Pairs of labels that continue the same strand through this node.
    fn strand_links(&self) -> Vec<(Label, Label)> {
        match *self {
            Node::Crossing(x) => {
                let [ui, oi, uo, oo] = x.oriented();
                vec![(ui, uo), (oi, oo)]
            }
            Node::Virtual(v) => vec![(v.a, v.c), (v.b, v.d)],
            Node::Marked(m) => vec![(m.a, m.b), (m.a, m.c), (m.a, m.d)],
            Node::Loop(_) => Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Label 0 is not a semiarc.
    ZeroLabel,
    /// A label used a number of times other than two.
    Multiplicity { label: Label, count: usize },
    /// A label used twice but not as one in-end and one out-end.
    Orientation { label: Label },
    /// A label missing from `1..=max`.
    Gap { label: Label },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroLabel => write!(f, "label 0 is not allowed"),
            Violation::Multiplicity { label, count } => {
                write!(f, "label multiplicity: {label} used {count} times")
            }
            Violation::Orientation { label } => {
                write!(f, "label {label} is not one in-end and one out-end")
            }
            Violation::Gap { label } => write!(f, "label gap: {label} is never used"),
        }
    }
}

/// A validated diagram. Nodes keep their input order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    nodes: Vec<Node>,
    semiarc_count: usize,
    component_count: usize,
}

impl Diagram {
    pub fn new(nodes: Vec<Node>) -> Result<Diagram, Vec<Violation>> {
        let report = validate(&nodes);
        if !report.is_empty() {
            return Err(report);
        }
        let semiarc_count = max_label(&nodes) as usize;
        let component_count = count_components(&nodes, semiarc_count);
        Ok(Diagram { nodes, semiarc_count, component_count })
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn semiarc_count(&self) -> usize {
        self.semiarc_count
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn crossings(&self) -> impl Iterator<Item = &ClassicalCrossing> {
        self.nodes.iter().filter_map(|n| match n {
            Node::Crossing(x) => Some(x),
            _ => None,
        })
    }

    pub fn virtuals(&self) -> impl Iterator<Item = &VirtualNode> {
        self.nodes.iter().filter_map(|n| match n {
            Node::Virtual(v) => Some(v),
            _ => None,
        })
    }

    pub fn marked(&self) -> impl Iterator<Item = &MarkedVertex> {
        self.nodes.iter().filter_map(|n| match n {
            Node::Marked(m) => Some(m),
            _ => None,
        })
    }
}

fn max_label(nodes: &[Node]) -> Label {
    nodes.iter().flat_map(|n| n.ends()[..n.end_count()].to_vec()).map(|(l, _)| l).max().unwrap_or(0)
}

/// Every violation of the label invariants, in label order.
pub fn validate(nodes: &[Node]) -> Vec<Violation> {
    let mut report = Vec::new();
    let max = max_label(nodes) as usize;
    let mut ins = vec![0usize; max + 1];
    let mut outs = vec![0usize; max + 1];
    for n in nodes {
        for &(l, is_in) in &n.ends()[..n.end_count()] {
            if is_in {
                ins[l as usize] += 1;
            } else {
                outs[l as usize] += 1;
            }
        }
    }
    if ins[0] + outs[0] > 0 {
        report.push(Violation::ZeroLabel);
    }
    for l in 1..=max {
        let count = ins[l] + outs[l];
        let label = l as Label;
        if count == 0 {
            report.push(Violation::Gap { label });
        } else if count != 2 {
            report.push(Violation::Multiplicity { label, count });
        } else if ins[l] != 1 {
            report.push(Violation::Orientation { label });
        }
    }
    report
}

/// Minimal union-find over `0..n`.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller root so class representatives are stable
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

fn count_components(nodes: &[Node], semiarcs: usize) -> usize {
    let mut uf = UnionFind::new(semiarcs);
    for n in nodes {
        for (p, q) in n.strand_links() {
            uf.union(p as usize - 1, q as usize - 1);
        }
    }
    (0..semiarcs).filter(|&i| uf.find(i) == i).count()
}
