//! Biquandle colorings of diagrams by constraint propagation and backtracking.

use alloc::vec;
use alloc::vec::Vec;

use crate::biquandle::{image_closure, Biquandle, Elem};
use crate::diagram::{Diagram, Node, UnionFind};

/// Colors indexed by `label - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    pub colors: Vec<Elem>,
}

impl Coloring {
    /// Color of semiarc `label` (1-based).
    #[inline]
    pub fn of(&self, label: u32) -> Elem {
        self.colors[label as usize - 1]
    }
}

/// Whether `colors` satisfies every node constraint of `d`.
pub fn is_coloring(d: &Diagram, x: &Biquandle, colors: &[Elem]) -> bool {
    if colors.len() != d.semiarc_count() || colors.iter().any(|&c| c >= x.n()) {
        return false;
    }
    let col = |l: u32| colors[l as usize - 1];
    d.nodes().iter().all(|n| match *n {
        Node::Crossing(k) => col(k.c) == x.under(col(k.a), col(k.b)) && col(k.d) == x.over(col(k.b), col(k.a)),
        Node::Virtual(v) => col(v.a) == col(v.c) && col(v.b) == col(v.d),
        Node::Marked(m) => col(m.a) == col(m.b) && col(m.a) == col(m.c) && col(m.a) == col(m.d),
        Node::Loop(_) => true,
    })
}

struct Solver<'a> {
    x: &'a Biquandle,
    /// crossings as class ids `[a, b, c, d]`
    crossings: Vec<[usize; 4]>,
    /// crossings touching each class
    touching: Vec<Vec<usize>>,
    /// `S⁻¹` keyed by `c * n + d`
    inverse: Vec<(Elem, Elem)>,
    value: Vec<Option<Elem>>,
    trail: Vec<usize>,
}

impl Solver<'_> {
    fn assign(&mut self, class: usize, v: Elem, queue: &mut Vec<usize>) -> bool {
        match self.value[class] {
            Some(w) => w == v,
            None => {
                self.value[class] = Some(v);
                self.trail.push(class);
                queue.extend_from_slice(&self.touching[class]);
                true
            }
        }
    }

    fn propagate(&mut self, mut queue: Vec<usize>) -> bool {
        let n = self.x.n();
        while let Some(i) = queue.pop() {
            let [a, b, c, d] = self.crossings[i];
            let [va, vb, vc, vd] = [a, b, c, d].map(|k| self.value[k]);
            if let (Some(va), Some(vb)) = (va, vb) {
                let (pc, pd) = (self.x.under(va, vb), self.x.over(vb, va));
                if !self.assign(c, pc, &mut queue) || !self.assign(d, pd, &mut queue) {
                    return false;
                }
            } else if let (Some(vc), Some(vd)) = (vc, vd) {
                let (pa, pb) = self.inverse[vc * n + vd];
                if !self.assign(a, pa, &mut queue) || !self.assign(b, pb, &mut queue) {
                    return false;
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let class = self.trail.pop().expect("trail is longer than mark");
            self.value[class] = None;
        }
    }

    fn search(&mut self, next: usize, out: &mut Vec<Vec<Elem>>) {
        let Some(class) = (next..self.value.len()).find(|&k| self.value[k].is_none()) else {
            out.push(self.value.iter().map(|v| v.expect("all classes assigned")).collect());
            return;
        };
        for v in 0..self.x.n() {
            let mark = self.trail.len();
            let mut queue = Vec::new();
            if self.assign(class, v, &mut queue) && self.propagate(queue) {
                self.search(class + 1, out);
            }
            self.undo(mark);
        }
    }
}

/// Every coloring, sorted lexicographically by the color array.
///
/// Virtual and marked identifications merge semiarcs into classes first;
/// crossings then propagate `(a,b) → (c,d)` and, through `S⁻¹`, `(c,d) → (a,b)`.
pub fn enumerate_colorings(d: &Diagram, x: &Biquandle) -> Vec<Coloring> {
    let semiarcs = d.semiarc_count();
    let n = x.n();
    let mut uf = UnionFind::new(semiarcs);
    for node in d.nodes() {
        match *node {
            Node::Virtual(v) => {
                uf.union(v.a as usize - 1, v.c as usize - 1);
                uf.union(v.b as usize - 1, v.d as usize - 1);
            }
            Node::Marked(m) => {
                for l in [m.b, m.c, m.d] {
                    uf.union(m.a as usize - 1, l as usize - 1);
                }
            }
            _ => {}
        }
    }
    let mut class_of = vec![usize::MAX; semiarcs];
    let mut classes = 0;
    for (i, slot) in class_of.iter_mut().enumerate() {
        let root = uf.find(i);
        if root == i {
            *slot = classes;
            classes += 1;
        }
    }
    for i in 0..semiarcs {
        class_of[i] = class_of[uf.find(i)];
    }
    let crossings: Vec<[usize; 4]> =
        d.crossings().map(|k| [k.a, k.b, k.c, k.d].map(|l| class_of[l as usize - 1])).collect();
    let mut touching = vec![Vec::new(); classes];
    for (i, q) in crossings.iter().enumerate() {
        for &c in q {
            if !touching[c].contains(&i) {
                touching[c].push(i);
            }
        }
    }
    let mut inverse = vec![(0, 0); n * n];
    for a in 0..n {
        for b in 0..n {
            let (c, d) = (x.under(a, b), x.over(b, a));
            inverse[c * n + d] = (a, b);
        }
    }
    let mut solver = Solver { x, crossings, touching, inverse, value: vec![None; classes], trail: Vec::new() };
    let mut found = Vec::new();
    solver.search(0, &mut found);
    let mut out: Vec<Coloring> =
        found.into_iter().map(|vals| Coloring { colors: class_of.iter().map(|&c| vals[c]).collect() }).collect();
    out.sort_unstable();
    out
}

/// Size of the homset.
pub fn counting_invariant(d: &Diagram, x: &Biquandle) -> usize {
    enumerate_colorings(d, x).len()
}

/// Closure of the colors a coloring uses.
pub fn coloring_image(c: &Coloring, x: &Biquandle) -> Vec<Elem> {
    image_closure(x, &c.colors)
}
