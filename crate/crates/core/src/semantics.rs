//! Finite-trace evaluation.
//!
//! Formulae are evaluated bottom-up into one truth value per position, so
//! every operator costs a linear (temporal) or quadratic (modal) pass over
//! the trace regardless of nesting.
//!
//! Position ranges per logic:
//!
//! | logic  | positions      | satisfaction checked at |
//! |--------|----------------|-------------------------|
//! | LTLf   | `0..=n-1`      | `0`                     |
//! | PLTLf  | `0..=n-1`      | `n-1`                   |
//! | LDLf   | `0..=n`        | `0`                     |
//! | PLDLf  | `-1..=n-1`     | `n-1`                   |
//!
//! LTLf and PLTLf reject the empty trace. The dynamic logics accept it
//! through the end point `n` and the pre-trace point `-1`.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use thiserror::Error;

use crate::ast::{
    Formula, LdlfFormula, Logical, LtlfFormula, PldlfFormula, PltlfFormula, Prop, Regex,
};
use crate::lexer::Logic;

/// A finite sequence of steps, each the set of atoms true at that step.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Trace {
    steps: Vec<BTreeSet<String>>,
}

#[derive(Debug, Error)]
pub enum TraceError {
    #[error("malformed trace: {0}")]
    Json(#[from] serde_json::Error),
    #[error("step {step}: atom names must be non-empty")]
    EmptyName { step: usize },
}

impl Trace {
    pub fn new(steps: Vec<BTreeSet<String>>) -> Result<Self, TraceError> {
        if let Some(step) = steps.iter().position(|s| s.contains("")) {
            return Err(TraceError::EmptyName { step });
        }
        Ok(Trace { steps })
    }

    /// Builds a trace from string slices, e.g. `Trace::from_steps(&[&["p"], &[]])`.
    pub fn from_steps(steps: &[&[&str]]) -> Result<Self, TraceError> {
        Trace::new(
            steps
                .iter()
                .map(|s| s.iter().map(|a| a.to_string()).collect())
                .collect(),
        )
    }

    /// Reads the JSON trace format: an array of steps, each an array of
    /// atom names, e.g. `[["p"],["p","q"],[]]`. Repeated names within a step
    /// are merged.
    pub fn from_json(text: &str) -> Result<Self, TraceError> {
        let raw: Vec<Vec<String>> = serde_json::from_str(text)?;
        Trace::new(raw.into_iter().map(|s| s.into_iter().collect()).collect())
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[BTreeSet<String>] {
        &self.steps
    }

    fn holds(&self, p: &Prop, position: isize) -> bool {
        eval_prop(p, &self.steps[position as usize])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("the trace is empty; {logic} formulae need at least one step")]
    EmptyTrace { logic: Logic },
    #[error("position {position} is outside {min}..={max}")]
    PositionOutOfRange {
        position: isize,
        min: isize,
        max: isize,
    },
}

/// Propositional satisfaction in one step.
pub fn eval_prop(p: &Prop, step: &BTreeSet<String>) -> bool {
    match p {
        Prop::Atom(a) => step.contains(&a.name),
        Prop::True => true,
        Prop::False => false,
        Prop::Not(a) => !eval_prop(a, step),
        Prop::And(l, r) => eval_prop(l, step) && eval_prop(r, step),
        Prop::Or(l, r) => eval_prop(l, step) || eval_prop(r, step),
        Prop::Impl(l, r) => !eval_prop(l, step) || eval_prop(r, step),
        Prop::Equiv(l, r) => eval_prop(l, step) == eval_prop(r, step),
        Prop::Xor(l, r) => eval_prop(l, step) != eval_prop(r, step),
    }
}

fn pointwise(a: Vec<bool>, b: Vec<bool>, op: impl Fn(bool, bool) -> bool) -> Vec<bool> {
    a.into_iter().zip(b).map(|(x, y)| op(x, y)).collect()
}

fn negate(a: Vec<bool>) -> Vec<bool> {
    a.into_iter().map(|x| !x).collect()
}

/// `until[i]` = ∃j ≥ i: right[j] ∧ ∀k ∈ [i, j): left[k].
fn until(left: &[bool], right: &[bool]) -> Vec<bool> {
    let mut out = vec![false; left.len()];
    let mut later = false;
    for i in (0..left.len()).rev() {
        later = right[i] || (left[i] && later);
        out[i] = later;
    }
    out
}

/// `since[i]` = ∃j ≤ i: right[j] ∧ ∀k ∈ (j, i]: left[k].
fn since(left: &[bool], right: &[bool]) -> Vec<bool> {
    let mut out = vec![false; left.len()];
    let mut earlier = false;
    for i in 0..left.len() {
        earlier = right[i] || (left[i] && earlier);
        out[i] = earlier;
    }
    out
}

fn ltlf_vector(f: &LtlfFormula, t: &Trace) -> Vec<bool> {
    use LtlfFormula::*;
    let n = t.len();
    let v = |g: &LtlfFormula| ltlf_vector(g, t);
    match f {
        Atom(a) => (0..n).map(|i| t.steps[i].contains(&a.name)).collect(),
        True | Tt => vec![true; n],
        False | Ff | End => vec![false; n],
        Last => (0..n).map(|i| i + 1 == n).collect(),
        Not(a) => negate(v(a)),
        And(l, r) => pointwise(v(l), v(r), |x, y| x && y),
        Or(l, r) => pointwise(v(l), v(r), |x, y| x || y),
        Impl(l, r) => pointwise(v(l), v(r), |x, y| !x || y),
        Equiv(l, r) => pointwise(v(l), v(r), |x, y| x == y),
        Xor(l, r) => pointwise(v(l), v(r), |x, y| x != y),
        WeakNext(a) => {
            let a = v(a);
            (0..n).map(|i| i + 1 == n || a[i + 1]).collect()
        }
        StrongNext(a) => {
            let a = v(a);
            (0..n).map(|i| i + 1 < n && a[i + 1]).collect()
        }
        Until(l, r) => until(&v(l), &v(r)),
        Release(l, r) => negate(until(&negate(v(l)), &negate(v(r)))),
        WeakUntil(l, r) => {
            let (l, r) = (v(l), v(r));
            let strong = until(&l, &r);
            let always = negate(until(&vec![true; n], &negate(l)));
            pointwise(strong, always, |x, y| x || y)
        }
        StrongRelease(l, r) => {
            let (l, r) = (v(l), v(r));
            let both = pointwise(l, r.clone(), |x, y| x && y);
            until(&r, &both)
        }
        Eventually(a) => until(&vec![true; n], &v(a)),
        Always(a) => negate(until(&vec![true; n], &negate(v(a)))),
    }
}

fn pltlf_vector(f: &PltlfFormula, t: &Trace) -> Vec<bool> {
    use PltlfFormula::*;
    let n = t.len();
    let v = |g: &PltlfFormula| pltlf_vector(g, t);
    match f {
        Atom(a) => (0..n).map(|i| t.steps[i].contains(&a.name)).collect(),
        True | Tt => vec![true; n],
        False | Ff | Start => vec![false; n],
        First => (0..n).map(|i| i == 0).collect(),
        Not(a) => negate(v(a)),
        And(l, r) => pointwise(v(l), v(r), |x, y| x && y),
        Or(l, r) => pointwise(v(l), v(r), |x, y| x || y),
        Impl(l, r) => pointwise(v(l), v(r), |x, y| !x || y),
        Equiv(l, r) => pointwise(v(l), v(r), |x, y| x == y),
        Xor(l, r) => pointwise(v(l), v(r), |x, y| x != y),
        Before(a) => {
            let a = v(a);
            (0..n).map(|i| i > 0 && a[i - 1]).collect()
        }
        Since(l, r) => since(&v(l), &v(r)),
        Once(a) => since(&vec![true; n], &v(a)),
        Historically(a) => negate(since(&vec![true; n], &negate(v(a)))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    /// Positions a path expression ranges over on a trace of length `n`.
    pub fn positions(self, n: usize) -> RangeInclusive<isize> {
        let n = n as isize;
        match self {
            Direction::Forward => 0..=n,
            Direction::Backward => -1..=n - 1,
        }
    }
}

/// A binary relation over the `n + 1` positions of a path direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    min: isize,
    size: usize,
    bits: Vec<bool>,
}

impl Relation {
    pub fn empty(positions: RangeInclusive<isize>) -> Self {
        let size = (positions.end() - positions.start() + 1) as usize;
        Relation {
            min: *positions.start(),
            size,
            bits: vec![false; size * size],
        }
    }

    pub fn identity(positions: RangeInclusive<isize>) -> Self {
        let mut r = Relation::empty(positions);
        for i in 0..r.size {
            r.bits[i * r.size + i] = true;
        }
        r
    }

    pub fn positions(&self) -> RangeInclusive<isize> {
        self.min..=self.min + self.size as isize - 1
    }

    fn index(&self, from: isize, to: isize) -> Option<usize> {
        let range = self.positions();
        (range.contains(&from) && range.contains(&to))
            .then(|| (from - self.min) as usize * self.size + (to - self.min) as usize)
    }

    pub fn contains(&self, from: isize, to: isize) -> bool {
        self.index(from, to).is_some_and(|i| self.bits[i])
    }

    pub fn insert(&mut self, from: isize, to: isize) {
        let i = self
            .index(from, to)
            .unwrap_or_else(|| panic!("({from}, {to}) outside {:?}", self.positions()));
        self.bits[i] = true;
    }

    pub fn pairs(&self) -> Vec<(isize, isize)> {
        let range = self.positions();
        range
            .clone()
            .flat_map(|i| range.clone().map(move |j| (i, j)))
            .filter(|&(i, j)| self.contains(i, j))
            .collect()
    }

    pub fn union(&self, other: &Relation) -> Relation {
        debug_assert_eq!(self.positions(), other.positions());
        Relation {
            bits: pointwise(self.bits.clone(), other.bits.clone(), |x, y| x || y),
            ..self.clone()
        }
    }

    /// Relational composition: `i → k` iff `i → j` in `self` and `j → k` in `other`.
    pub fn compose(&self, other: &Relation) -> Relation {
        debug_assert_eq!(self.positions(), other.positions());
        let n = self.size;
        let mut out = Relation {
            bits: vec![false; n * n],
            ..self.clone()
        };
        for i in 0..n {
            for j in (0..n).filter(|&j| self.bits[i * n + j]) {
                for k in 0..n {
                    out.bits[i * n + k] |= other.bits[j * n + k];
                }
            }
        }
        out
    }

    /// Reflexive-transitive closure, as the least fixpoint of
    /// `S = id ∪ S ∘ self` over the finite position set.
    pub fn star(&self) -> Relation {
        let mut closure = Relation::identity(self.positions());
        loop {
            let next = closure.union(&closure.compose(self));
            if next == closure {
                return closure;
            }
            closure = next;
        }
    }
}

/// The dynamic logics, whose path expressions run in a fixed direction.
pub trait PathLogic: Formula<Test = Self> {
    const DIRECTION: Direction;

    /// Truth value at every position of [`Direction::positions`], in order.
    fn truth_vector(&self, t: &Trace) -> Vec<bool>;
}

/// Pairs of positions connected by `r` on `t`. Letters step forward for
/// LDLf and backward for PLDLf; tests re-enter the owning logic.
pub fn regex_reach<F: PathLogic>(r: &Regex<F>, t: &Trace) -> Relation {
    let positions = F::DIRECTION.positions(t.len());
    match r {
        Regex::Prop(p) => {
            let mut rel = Relation::empty(positions.clone());
            for i in positions {
                match F::DIRECTION {
                    Direction::Forward if i < t.len() as isize && t.holds(p, i) => {
                        rel.insert(i, i + 1)
                    }
                    Direction::Backward if i >= 0 && t.holds(p, i) => rel.insert(i, i - 1),
                    _ => {}
                }
            }
            rel
        }
        Regex::Test(f) => {
            let mut rel = Relation::empty(positions.clone());
            for (i, holds) in positions.zip(f.truth_vector(t)) {
                if holds {
                    rel.insert(i, i);
                }
            }
            rel
        }
        Regex::Concat(a, b) => regex_reach(a, t).compose(&regex_reach(b, t)),
        Regex::Union(a, b) => regex_reach(a, t).union(&regex_reach(b, t)),
        Regex::Star(a) => regex_reach(a, t).star(),
    }
}

fn modal_vector<F: PathLogic>(r: &Regex<F>, arg: &F, t: &Trace, diamond: bool) -> Vec<bool> {
    let rel = regex_reach(r, t);
    let arg = arg.truth_vector(t);
    let positions = rel.positions();
    positions
        .clone()
        .map(|i| {
            let mut targets = positions
                .clone()
                .zip(&arg)
                .filter(|&(j, _)| rel.contains(i, j));
            if diamond {
                targets.any(|(_, &holds)| holds)
            } else {
                targets.all(|(_, &holds)| holds)
            }
        })
        .collect()
}

impl PathLogic for LdlfFormula {
    const DIRECTION: Direction = Direction::Forward;

    fn truth_vector(&self, t: &Trace) -> Vec<bool> {
        use LdlfFormula::*;
        let size = t.len() + 1;
        let v = |g: &LdlfFormula| g.truth_vector(t);
        match self {
            Tt => vec![true; size],
            Ff => vec![false; size],
            Not(a) => negate(v(a)),
            And(l, r) => pointwise(v(l), v(r), |x, y| x && y),
            Or(l, r) => pointwise(v(l), v(r), |x, y| x || y),
            Impl(l, r) => pointwise(v(l), v(r), |x, y| !x || y),
            Equiv(l, r) => pointwise(v(l), v(r), |x, y| x == y),
            Xor(l, r) => pointwise(v(l), v(r), |x, y| x != y),
            Diamond(re, a) => modal_vector(re, a, t, true),
            Box(re, a) => modal_vector(re, a, t, false),
        }
    }
}

impl PathLogic for PldlfFormula {
    const DIRECTION: Direction = Direction::Backward;

    fn truth_vector(&self, t: &Trace) -> Vec<bool> {
        use PldlfFormula::*;
        let size = t.len() + 1;
        let v = |g: &PldlfFormula| g.truth_vector(t);
        match self {
            Tt => vec![true; size],
            Ff => vec![false; size],
            Not(a) => negate(v(a)),
            And(l, r) => pointwise(v(l), v(r), |x, y| x && y),
            Or(l, r) => pointwise(v(l), v(r), |x, y| x || y),
            Impl(l, r) => pointwise(v(l), v(r), |x, y| !x || y),
            Equiv(l, r) => pointwise(v(l), v(r), |x, y| x == y),
            Xor(l, r) => pointwise(v(l), v(r), |x, y| x != y),
            BackDiamond(re, a) => modal_vector(re, a, t, true),
            BackBox(re, a) => modal_vector(re, a, t, false),
        }
    }
}

/// Evaluation entry points shared by the four logics.
pub trait Semantics: Logical {
    /// Legal evaluation positions on a trace of length `n`.
    fn positions(n: usize) -> Result<RangeInclusive<isize>, EvalError>;

    /// Position at which trace satisfaction is decided.
    fn satisfaction_point(n: usize) -> isize;

    /// Truth value at every position of [`Semantics::positions`], in order.
    fn evaluate_all(&self, t: &Trace) -> Result<Vec<bool>, EvalError>;

    fn eval(&self, t: &Trace, position: isize) -> Result<bool, EvalError> {
        let range = Self::positions(t.len())?;
        if !range.contains(&position) {
            return Err(EvalError::PositionOutOfRange {
                position,
                min: *range.start(),
                max: *range.end(),
            });
        }
        let values = self.evaluate_all(t)?;
        Ok(values[(position - range.start()) as usize])
    }

    /// Whether `t` satisfies the formula under the logic's convention.
    fn satisfied_by(&self, t: &Trace) -> Result<bool, EvalError> {
        self.eval(t, Self::satisfaction_point(t.len()))
    }
}

fn non_empty(logic: Logic, n: usize) -> Result<RangeInclusive<isize>, EvalError> {
    if n == 0 {
        Err(EvalError::EmptyTrace { logic })
    } else {
        Ok(0..=n as isize - 1)
    }
}

impl Semantics for LtlfFormula {
    fn positions(n: usize) -> Result<RangeInclusive<isize>, EvalError> {
        non_empty(Logic::Ltlf, n)
    }

    fn satisfaction_point(_: usize) -> isize {
        0
    }

    fn evaluate_all(&self, t: &Trace) -> Result<Vec<bool>, EvalError> {
        Self::positions(t.len())?;
        Ok(ltlf_vector(self, t))
    }
}

impl Semantics for PltlfFormula {
    fn positions(n: usize) -> Result<RangeInclusive<isize>, EvalError> {
        non_empty(Logic::Pltlf, n)
    }

    fn satisfaction_point(n: usize) -> isize {
        n as isize - 1
    }

    fn evaluate_all(&self, t: &Trace) -> Result<Vec<bool>, EvalError> {
        Self::positions(t.len())?;
        Ok(pltlf_vector(self, t))
    }
}

impl Semantics for LdlfFormula {
    fn positions(n: usize) -> Result<RangeInclusive<isize>, EvalError> {
        Ok(Direction::Forward.positions(n))
    }

    fn satisfaction_point(_: usize) -> isize {
        0
    }

    fn evaluate_all(&self, t: &Trace) -> Result<Vec<bool>, EvalError> {
        Ok(self.truth_vector(t))
    }
}

impl Semantics for PldlfFormula {
    fn positions(n: usize) -> Result<RangeInclusive<isize>, EvalError> {
        Ok(Direction::Backward.positions(n))
    }

    fn satisfaction_point(n: usize) -> isize {
        n as isize - 1
    }

    fn evaluate_all(&self, t: &Trace) -> Result<Vec<bool>, EvalError> {
        Ok(self.truth_vector(t))
    }
}

pub fn eval_ltlf(f: &LtlfFormula, t: &Trace, position: isize) -> Result<bool, EvalError> {
    f.eval(t, position)
}

pub fn eval_pltlf(f: &PltlfFormula, t: &Trace, position: isize) -> Result<bool, EvalError> {
    f.eval(t, position)
}

pub fn eval_ldlf(f: &LdlfFormula, t: &Trace, position: isize) -> Result<bool, EvalError> {
    f.eval(t, position)
}

pub fn eval_pldlf(f: &PldlfFormula, t: &Trace, position: isize) -> Result<bool, EvalError> {
    f.eval(t, position)
}
