//! Reidemeister-type insertions on diagram codes.
//!
//! Edits work on the semiarc incidence structure only. A new node is spliced
//! into a semiarc by cutting it into pieces; fresh labels continue after the
//! current maximum, so labels stay contiguous.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{ClassicalCrossing, Diagram, Label, MarkedVertex, Node, Sign, VirtualNode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveEdit {
    /// A kink on `semiarc`; `under_first` says whether the strand passes
    /// under before it passes over.
    R1 { semiarc: Label, sign: Sign, under_first: bool },
    /// Push `s1` over `s2`, creating a bigon. The crossing met first along
    /// `s1` gets `first_sign`.
    R2 { s1: Label, s2: Label, parallel: bool, first_sign: Sign },
    /// Two virtual crossings between `s1` and `s2`.
    V2 { s1: Label, s2: Label, parallel: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveError {
    UnknownSemiarc(Label),
    SameSemiarc(Label),
}

impl fmt::Display for MoveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveError::UnknownSemiarc(l) => write!(f, "semiarc {l} is not in the diagram"),
            MoveError::SameSemiarc(l) => write!(f, "both strands of the move are semiarc {l}"),
        }
    }
}

impl core::error::Error for MoveError {}

struct Editor {
    nodes: Vec<Node>,
    next: Label,
}

impl Editor {
    fn new(d: &Diagram) -> Self {
        Editor { nodes: d.nodes().to_vec(), next: d.semiarc_count() as Label + 1 }
    }

    fn fresh(&mut self) -> Label {
        self.next += 1;
        self.next - 1
    }

    /// Cut `s` for `k` new nodes. Node `i` of the chain has in-end `seg[i]`
    /// and out-end `seg[i + 1]`.
    fn split(&mut self, s: Label, k: usize) -> Vec<Label> {
        if let Some(pos) = self.nodes.iter().position(|n| *n == Node::Loop(s)) {
            self.nodes.remove(pos);
            let mut seg = vec![s];
            seg.extend((1..k).map(|_| self.fresh()));
            seg.push(s);
            return seg;
        }
        let mut seg = vec![s];
        seg.extend((0..k).map(|_| self.fresh()));
        let last = seg[k];
        for node in self.nodes.iter_mut() {
            if let Some(n) = with_in_end(node, s, last) {
                *node = n;
                break;
            }
        }
        seg
    }
}

/// `node` with its in-end `from` renamed to `to`, if it has that in-end.
fn with_in_end(node: &Node, from: Label, to: Label) -> Option<Node> {
    match *node {
        Node::Crossing(x) => {
            let [ui, oi, uo, oo] = x.oriented();
            let ends = if ui == from {
                [to, oi, uo, oo]
            } else if oi == from {
                [ui, to, uo, oo]
            } else {
                return None;
            };
            Some(Node::Crossing(ClassicalCrossing::from_oriented(x.sign, ends)))
        }
        Node::Virtual(v) if v.a == from => Some(Node::Virtual(VirtualNode { a: to, ..v })),
        Node::Virtual(v) if v.b == from => Some(Node::Virtual(VirtualNode { b: to, ..v })),
        Node::Marked(m) if m.a == from => Some(Node::Marked(MarkedVertex { a: to, ..m })),
        Node::Marked(m) if m.b == from => Some(Node::Marked(MarkedVertex { b: to, ..m })),
        _ => None,
    }
}

fn check(d: &Diagram, labels: &[Label]) -> Result<(), MoveError> {
    for &l in labels {
        if l == 0 || l as usize > d.semiarc_count() {
            return Err(MoveError::UnknownSemiarc(l));
        }
    }
    if labels.len() == 2 && labels[0] == labels[1] {
        return Err(MoveError::SameSemiarc(labels[0]));
    }
    Ok(())
}

fn crossing(sign: Sign, ends: [Label; 4]) -> Node {
    Node::Crossing(ClassicalCrossing::from_oriented(sign, ends))
}

pub fn r1_insert(d: &Diagram, semiarc: Label, sign: Sign, under_first: bool) -> Result<Diagram, MoveError> {
    apply(d, MoveEdit::R1 { semiarc, sign, under_first })
}

pub fn r2_insert(d: &Diagram, s1: Label, s2: Label, parallel: bool, first_sign: Sign) -> Result<Diagram, MoveError> {
    apply(d, MoveEdit::R2 { s1, s2, parallel, first_sign })
}

pub fn v2_insert(d: &Diagram, s1: Label, s2: Label, parallel: bool) -> Result<Diagram, MoveError> {
    apply(d, MoveEdit::V2 { s1, s2, parallel })
}

pub fn apply(d: &Diagram, edit: MoveEdit) -> Result<Diagram, MoveError> {
    let mut ed = Editor::new(d);
    match edit {
        MoveEdit::R1 { semiarc, sign, under_first } => {
            check(d, &[semiarc])?;
            let [p0, l, p1]: [Label; 3] = ed.split(semiarc, 2).try_into().expect("two cuts give three pieces");
            let ends = if under_first { [p0, l, l, p1] } else { [l, p0, p1, l] };
            ed.nodes.push(crossing(sign, ends));
        }
        MoveEdit::R2 { s1, s2, parallel, first_sign } => {
            check(d, &[s1, s2])?;
            let a = ed.split(s1, 2);
            let b = ed.split(s2, 2);
            let (first, second) = if parallel { ([b[0], b[1]], [b[1], b[2]]) } else { ([b[1], b[2]], [b[0], b[1]]) };
            ed.nodes.push(crossing(first_sign, [first[0], a[0], first[1], a[1]]));
            ed.nodes.push(crossing(first_sign.flip(), [second[0], a[1], second[1], a[2]]));
        }
        MoveEdit::V2 { s1, s2, parallel } => {
            check(d, &[s1, s2])?;
            let a = ed.split(s1, 2);
            let b = ed.split(s2, 2);
            let (first, second) = if parallel { ([b[0], b[1]], [b[1], b[2]]) } else { ([b[1], b[2]], [b[0], b[1]]) };
            ed.nodes.push(Node::Virtual(VirtualNode { a: a[0], b: first[0], c: a[1], d: first[1] }));
            ed.nodes.push(Node::Virtual(VirtualNode { a: a[1], b: second[0], c: a[2], d: second[1] }));
        }
    }
    Ok(Diagram::new(ed.nodes).expect("insertions keep every label invariant"))
}
