//! Maximal paths in the identity subgraph and the path polynomial.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::diagram::UnionFind;
use crate::quiver::{QuiverRep, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Repetition {
    /// No arrow is used twice (trails).
    ArrowSimple,
    /// No vertex is visited twice, except that the last may close onto the first.
    VertexSimple,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Maximality {
    /// Cannot be extended at either end.
    NonExtendable,
    /// Of the greatest length in the whole graph.
    GloballyLongest,
    /// Of the greatest length among paths in the same weak component.
    LongestPerComponent,
    /// Of the greatest length among paths with the same start vertex.
    LongestPerStart,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RankVertex {
    /// Every vertex on the path must have the same rank.
    PathConstant,
    StartVertex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathSemantics {
    pub repetition: Repetition,
    pub maximality: Maximality,
    pub rank_vertex: RankVertex,
}

impl Default for PathSemantics {
    fn default() -> Self {
        PathSemantics {
            repetition: Repetition::ArrowSimple,
            maximality: Maximality::LongestPerComponent,
            rank_vertex: RankVertex::PathConstant,
        }
    }
}

const REPETITIONS: [(Repetition, &str); 2] =
    [(Repetition::ArrowSimple, "arrow-simple"), (Repetition::VertexSimple, "vertex-simple")];
const MAXIMALITIES: [(Maximality, &str); 4] = [
    (Maximality::NonExtendable, "non-extendable"),
    (Maximality::GloballyLongest, "globally-longest"),
    (Maximality::LongestPerComponent, "longest-per-component"),
    (Maximality::LongestPerStart, "longest-per-start"),
];
const RANK_VERTICES: [(RankVertex, &str); 2] =
    [(RankVertex::PathConstant, "path-constant"), (RankVertex::StartVertex, "start-vertex")];

fn name_of<T: PartialEq + Copy>(table: &[(T, &'static str)], v: T) -> &'static str {
    table.iter().find(|(k, _)| *k == v).map(|(_, s)| *s).expect("every variant is named")
}

fn parse_name<T: Copy>(table: &[(T, &'static str)], s: &str) -> Option<T> {
    table.iter().find(|(_, name)| *name == s).map(|(k, _)| *k)
}

impl Repetition {
    pub fn name(self) -> &'static str {
        name_of(&REPETITIONS, self)
    }
    pub fn parse(s: &str) -> Option<Self> {
        parse_name(&REPETITIONS, s)
    }
}

impl Maximality {
    pub fn name(self) -> &'static str {
        name_of(&MAXIMALITIES, self)
    }
    pub fn parse(s: &str) -> Option<Self> {
        parse_name(&MAXIMALITIES, s)
    }
}

impl RankVertex {
    pub fn name(self) -> &'static str {
        name_of(&RANK_VERTICES, self)
    }
    pub fn parse(s: &str) -> Option<Self> {
        parse_name(&RANK_VERTICES, s)
    }
}

impl PathSemantics {
    /// Every configuration, default first.
    pub fn all() -> Vec<PathSemantics> {
        let mut out = vec![PathSemantics::default()];
        for &(repetition, _) in &REPETITIONS {
            for &(maximality, _) in &MAXIMALITIES {
                for &(rank_vertex, _) in &RANK_VERTICES {
                    let s = PathSemantics { repetition, maximality, rank_vertex };
                    if !out.contains(&s) {
                        out.push(s);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for PathSemantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}/{}", self.repetition.name(), self.maximality.name(), self.rank_vertex.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemanticsParseError(pub String);

impl fmt::Display for SemanticsParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown path semantics component `{}`", self.0)
    }
}

impl core::error::Error for SemanticsParseError {}

impl FromStr for PathSemantics {
    type Err = SemanticsParseError;

    /// `repetition/maximality/rank-vertex`; any part may be omitted in favor of
    /// the default, and parts may come in any order.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = PathSemantics::default();
        for part in s.split(['/', ',']).map(str::trim).filter(|p| !p.is_empty()) {
            if let Some(r) = Repetition::parse(part) {
                out.repetition = r;
            } else if let Some(m) = Maximality::parse(part) {
                out.maximality = m;
            } else if let Some(v) = RankVertex::parse(part) {
                out.rank_vertex = v;
            } else {
                return Err(SemanticsParseError(part.into()));
            }
        }
        Ok(out)
    }
}

/// A polynomial in `x, y` with positive integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathPolynomial {
    terms: BTreeMap<(u32, u32), u64>,
}

impl PathPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, x: u32, y: u32, coefficient: u64) {
        if coefficient > 0 {
            *self.terms.entry((x, y)).or_insert(0) += coefficient;
        }
    }

    /// `(x-exponent, y-exponent, coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.terms.iter().rev().map(|(&(a, b), &c)| (a, b, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, x: u64, y: u64) -> u128 {
        self.terms.iter().map(|(&(a, b), &c)| c as u128 * (x as u128).pow(a) * (y as u128).pow(b)).sum()
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: char, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

impl fmt::Display for PathPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (a, b, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c != 1 || (a == 0 && b == 0) {
                write!(f, "{c}")?;
            }
            write_power(f, 'x', a)?;
            write_power(f, 'y', b)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialParseError(pub String);

impl fmt::Display for PolynomialParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed polynomial term `{}`", self.0)
    }
}

impl core::error::Error for PolynomialParseError {}

fn parse_term(term: &str) -> Option<(u32, u32, u64)> {
    let digits = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
    let coefficient = if digits == 0 { 1 } else { term[..digits].parse().ok()? };
    let mut rest = &term[digits..];
    let mut power = |var: char| -> Option<u32> {
        let Some(after) = rest.strip_prefix(var) else { return Some(0) };
        if let Some(exp) = after.strip_prefix('^') {
            let end = exp.find(|c: char| !c.is_ascii_digit()).unwrap_or(exp.len());
            rest = &exp[end..];
            exp[..end].parse().ok()
        } else {
            rest = after;
            Some(1)
        }
    };
    let a = power('x')?;
    let b = power('y')?;
    (rest.is_empty() && !term.is_empty()).then_some((a, b, coefficient))
}

impl FromStr for PathPolynomial {
    type Err = PolynomialParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = PathPolynomial::new();
        if compact == "0" {
            return Ok(p);
        }
        for term in compact.split('+') {
            let (a, b, c) = parse_term(term).ok_or_else(|| PolynomialParseError(term.into()))?;
            p.add_term(a, b, c);
        }
        Ok(p)
    }
}

/// A digraph given by its arrows; `origin[i]` is the quiver index of arrow `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    pub vertex_count: usize,
    pub arrows: Vec<(usize, usize)>,
    pub origin: Vec<usize>,
}

impl Digraph {
    pub fn new(vertex_count: usize, arrows: Vec<(usize, usize)>) -> Self {
        let origin = (0..arrows.len()).collect();
        Digraph { vertex_count, arrows, origin }
    }
}

/// The Identity-weighted arrows of `q`, loops included.
pub fn identity_subgraph(q: &QuiverRep) -> Digraph {
    let (arrows, origin) = q
        .arrows
        .iter()
        .enumerate()
        .filter(|(_, a)| a.weight == Weight::Identity)
        .map(|(i, a)| ((a.src, a.dst), i))
        .unzip();
    Digraph { vertex_count: q.vertices.len(), arrows, origin }
}

/// A path: its start vertex and arrow indices. Length-0 paths stand for
/// vertices that touch no arrow.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Visited vertices, start first.
    pub fn vertices(&self, g: &Digraph) -> Vec<usize> {
        let mut out = vec![self.start];
        out.extend(self.arrows.iter().map(|&a| g.arrows[a].1));
        out
    }
}

/// Upper bound on the number of partial paths a search may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(50_000_000)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathError {
    /// The search visited more than the budgeted number of paths.
    Budget { limit: u64 },
    /// An identity path joins vertices of different rank.
    RankVaries { path: Path },
}

impl fmt::Display for PathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathError::Budget { limit } => write!(f, "path search exceeded its budget of {limit} paths"),
            PathError::RankVaries { path } => {
                write!(f, "rank varies along the identity path from vertex {}", path.start)
            }
        }
    }
}

impl core::error::Error for PathError {}

struct Walker<'a> {
    g: &'a Digraph,
    rep: Repetition,
    outs: Vec<Vec<usize>>,
    ins: Vec<Vec<usize>>,
    used_arrow: Vec<bool>,
    on_path: Vec<bool>,
    path: Vec<usize>,
    start: usize,
    steps: u64,
    limit: u64,
}

impl Walker<'_> {
    fn new(g: &Digraph, rep: Repetition, limit: u64) -> Walker<'_> {
        let mut outs = vec![Vec::new(); g.vertex_count];
        let mut ins = vec![Vec::new(); g.vertex_count];
        for (i, &(a, b)) in g.arrows.iter().enumerate() {
            outs[a].push(i);
            ins[b].push(i);
        }
        Walker {
            g,
            rep,
            outs,
            ins,
            used_arrow: vec![false; g.arrows.len()],
            on_path: vec![false; g.vertex_count],
            path: Vec::new(),
            start: 0,
            steps: 0,
            limit,
        }
    }

    fn head(&self) -> usize {
        self.path.last().map_or(self.start, |&a| self.g.arrows[a].1)
    }

    fn closed(&self) -> bool {
        !self.path.is_empty() && self.head() == self.start
    }

    fn can_append(&self, arrow: usize) -> bool {
        match self.rep {
            Repetition::ArrowSimple => !self.used_arrow[arrow],
            Repetition::VertexSimple => {
                let to = self.g.arrows[arrow].1;
                !self.closed() && (!self.on_path[to] || to == self.start)
            }
        }
    }

    fn can_prepend(&self, arrow: usize) -> bool {
        match self.rep {
            Repetition::ArrowSimple => !self.used_arrow[arrow],
            Repetition::VertexSimple => {
                let from = self.g.arrows[arrow].0;
                !self.closed() && (!self.on_path[from] || from == self.head())
            }
        }
    }

    fn extendable(&self) -> bool {
        self.outs[self.head()].iter().any(|&a| self.can_append(a))
            || self.ins[self.start].iter().any(|&a| self.can_prepend(a))
    }

    /// Calls `visit` on every nonempty path, depth first from each arrow.
    fn run(&mut self, visit: &mut impl FnMut(&Self)) -> Result<(), PathError> {
        for first in 0..self.g.arrows.len() {
            self.start = self.g.arrows[first].0;
            self.on_path[self.start] = true;
            self.push(first);
            let r = self.descend(visit);
            self.pop();
            self.on_path[self.start] = false;
            r?;
        }
        Ok(())
    }

    fn push(&mut self, arrow: usize) {
        self.used_arrow[arrow] = true;
        self.on_path[self.g.arrows[arrow].1] = true;
        self.path.push(arrow);
    }

    fn pop(&mut self) {
        let arrow = self.path.pop().expect("pop follows push");
        self.used_arrow[arrow] = false;
        let to = self.g.arrows[arrow].1;
        // only vertex-simple paths read `on_path`, and there `to` occurs once
        if to != self.start {
            self.on_path[to] = false;
        }
    }

    fn descend(&mut self, visit: &mut impl FnMut(&Self)) -> Result<(), PathError> {
        self.steps += 1;
        if self.steps > self.limit {
            return Err(PathError::Budget { limit: self.limit });
        }
        visit(self);
        let head = self.head();
        for i in 0..self.outs[head].len() {
            let a = self.outs[head][i];
            if self.can_append(a) {
                self.push(a);
                let r = self.descend(visit);
                self.pop();
                r?;
            }
        }
        Ok(())
    }
}

fn weak_components(g: &Digraph) -> Vec<usize> {
    let mut uf = UnionFind::new(g.vertex_count);
    for &(a, b) in &g.arrows {
        uf.union(a, b);
    }
    (0..g.vertex_count).map(|v| uf.find(v)).collect()
}

/// The maximal paths of `g` under `sem`, in discovery order, followed by a
/// length-0 path for every vertex no arrow touches.
pub fn enumerate_maximal_paths(g: &Digraph, sem: PathSemantics, budget: Budget) -> Result<Vec<Path>, PathError> {
    let component = weak_components(g);
    let group = |start: usize| match sem.maximality {
        Maximality::GloballyLongest => 0,
        Maximality::LongestPerComponent => component[start],
        Maximality::LongestPerStart => start,
        Maximality::NonExtendable => 0,
    };
    let mut walker = Walker::new(g, sem.repetition, budget.0);
    let mut best = vec![0usize; g.vertex_count.max(1)];
    if sem.maximality != Maximality::NonExtendable {
        walker.run(&mut |w: &Walker<'_>| {
            let slot = &mut best[group(w.start)];
            *slot = (*slot).max(w.path.len());
        })?;
    }
    let mut out = Vec::new();
    walker.run(&mut |w: &Walker<'_>| {
        let keep = match sem.maximality {
            Maximality::NonExtendable => !w.extendable(),
            _ => w.path.len() == best[group(w.start)],
        };
        if keep {
            out.push(Path { start: w.start, arrows: w.path.clone() });
        }
    })?;
    let mut touched = vec![false; g.vertex_count];
    for &(a, b) in &g.arrows {
        touched[a] = true;
        touched[b] = true;
    }
    out.extend((0..g.vertex_count).filter(|&v| !touched[v]).map(|v| Path { start: v, arrows: Vec::new() }));
    Ok(out)
}

/// Sum of `x^rank y^length` over the maximal identity paths of `q`.
pub fn natural_path_polynomial(q: &QuiverRep, sem: PathSemantics, budget: Budget) -> Result<PathPolynomial, PathError> {
    let g = identity_subgraph(q);
    let mut poly = PathPolynomial::new();
    for path in enumerate_maximal_paths(&g, sem, budget)? {
        let rank = q.vertices[path.start].rank();
        if sem.rank_vertex == RankVertex::PathConstant
            && path.vertices(&g).iter().any(|&v| q.vertices[v].rank() != rank)
        {
            return Err(PathError::RankVaries { path });
        }
        poly.add_term(rank as u32, path.len() as u32, 1);
    }
    Ok(poly)
}
