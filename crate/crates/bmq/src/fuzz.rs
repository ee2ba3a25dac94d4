//! Random move sequences checked against the invariants of the start diagram.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Result;
use bmq_core::codec::serialize;
use bmq_core::diagram::{Diagram, Label, Sign};
use bmq_core::moves::{apply, MoveEdit};
use bmq_core::paths::{Budget, PathSemantics};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::formats::DataVector;
use crate::report::{compute, ComputeError};

/// What a move must preserve: homset size, rank multiset and the polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub counting: usize,
    pub ranks: Vec<usize>,
    pub polynomial: String,
}

pub fn signature(d: &Diagram, v: &DataVector, sem: PathSemantics, budget: Budget) -> Result<Signature, ComputeError> {
    let r = compute(d, v, sem, budget)?;
    let mut ranks = r.ranks;
    ranks.sort_unstable();
    Ok(Signature { counting: r.counting, ranks, polynomial: r.polynomial })
}

fn sign(rng: &mut impl Rng) -> Sign {
    if rng.random() {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// A uniformly chosen edit that applies to `d`.
pub fn random_edit<R: Rng>(d: &Diagram, rng: &mut R) -> MoveEdit {
    let n = d.semiarc_count() as Label;
    let kind = if n < 2 { 0 } else { rng.random_range(0..3) };
    let s1 = rng.random_range(1..=n);
    if kind == 0 {
        return MoveEdit::R1 { semiarc: s1, sign: sign(rng), under_first: rng.random() };
    }
    let mut s2 = rng.random_range(1..n);
    if s2 >= s1 {
        s2 += 1;
    }
    let parallel = rng.random();
    if kind == 1 {
        MoveEdit::R2 { s1, s2, parallel, first_sign: sign(rng) }
    } else {
        MoveEdit::V2 { s1, s2, parallel }
    }
}

#[derive(Clone, Debug)]
pub struct FuzzFailure {
    pub trial: usize,
    pub edits: Vec<MoveEdit>,
    pub diagram: Diagram,
    pub expected: Signature,
    pub found: Signature,
}

impl FuzzFailure {
    /// A diagram file that reproduces the failure, with the history in comments.
    pub fn reproducer(&self) -> String {
        let mut out = format!("# fuzz trial {}\n", self.trial);
        for e in &self.edits {
            out.push_str(&format!("# {e:?}\n"));
        }
        out.push_str(&format!(
            "# expected {} / {:?} / {}\n# found {} / {:?} / {}\n",
            self.expected.counting,
            self.expected.ranks,
            self.expected.polynomial,
            self.found.counting,
            self.found.ranks,
            self.found.polynomial
        ));
        out.push_str(&serialize(&self.diagram));
        out
    }

    pub fn write_to(&self, dir: &Path, stem: &str) -> Result<PathBuf> {
        fs::create_dir_all(dir)?;
        let path = dir.join(format!("{stem}-trial{}.pdk", self.trial));
        fs::write(&path, self.reproducer())?;
        Ok(path)
    }
}

pub struct FuzzConfig {
    pub moves: usize,
    pub trials: usize,
    pub seed: u64,
}

/// Run `trials` sequences of `moves` edits each; every failing trial is returned.
pub fn fuzz(
    d: &Diagram,
    v: &DataVector,
    sem: PathSemantics,
    budget: Budget,
    cfg: &FuzzConfig,
) -> Result<Vec<FuzzFailure>, ComputeError> {
    let expected = signature(d, v, sem, budget)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut failures = Vec::new();
    for trial in 0..cfg.trials {
        let mut cur = d.clone();
        let mut edits = Vec::with_capacity(cfg.moves);
        for _ in 0..cfg.moves {
            let e = random_edit(&cur, &mut rng);
            cur = apply(&cur, e).expect("random edits name existing semiarcs");
            edits.push(e);
        }
        let found = signature(&cur, v, sem, budget)?;
        if found != expected {
            failures.push(FuzzFailure { trial, edits, diagram: cur, expected: expected.clone(), found });
        }
    }
    Ok(failures)
}
