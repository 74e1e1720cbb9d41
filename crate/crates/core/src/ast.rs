//! Syntax trees for the four logics and the regular expressions shared by
//! the dynamic ones.
//!
//! Every formula type implements [`Formula`], which exposes a uniform
//! [`View`] of a node and constructors from the same shape. The parser,
//! printer, serializer and random generator are written once against that
//! trait.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::lexer::Logic;
use crate::table::{self, PrecedenceTable};

/// An atomic proposition.
///
/// Equality and hashing look at the name only: `'a'` and `a` denote the same
/// proposition.
#[derive(Debug, Clone, Eq)]
pub struct Atom {
    pub name: String,
    pub quoted: bool,
}

impl Atom {
    pub fn new(name: impl Into<String>) -> Self {
        Atom {
            name: name.into(),
            quoted: false,
        }
    }

    pub fn quoted(name: impl Into<String>) -> Self {
        Atom {
            name: name.into(),
            quoted: true,
        }
    }
}

impl PartialEq for Atom {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl Hash for Atom {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.name.hash(state);
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Nullary keywords.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constant {
    True,
    False,
    Tt,
    Ff,
    Last,
    End,
    First,
    Start,
}

impl Constant {
    pub fn keyword(self) -> &'static str {
        match self {
            Constant::True => "true",
            Constant::False => "false",
            Constant::Tt => "tt",
            Constant::Ff => "ff",
            Constant::Last => "last",
            Constant::End => "end",
            Constant::First => "first",
            Constant::Start => "start",
        }
    }
}

/// Every unary, binary and modal operator of the four logics, including the
/// regular-expression operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operator {
    Not,
    And,
    Or,
    Impl,
    Equiv,
    Xor,
    Until,
    WeakUntil,
    Release,
    StrongRelease,
    Eventually,
    Always,
    WeakNext,
    StrongNext,
    Since,
    Once,
    Historically,
    Before,
    Diamond,
    Box,
    BackDiamond,
    BackBox,
    Test,
    Concat,
    Union,
    Star,
}

impl Operator {
    /// Canonical spelling. For modalities this is the opening bracket.
    pub fn symbol(self) -> &'static str {
        use Operator::*;
        match self {
            Not => "!",
            And => "&",
            Or => "|",
            Impl => "->",
            Equiv => "<->",
            Xor => "^",
            Until => "U",
            WeakUntil => "W",
            Release => "R",
            StrongRelease => "M",
            Eventually => "F",
            Always => "G",
            WeakNext => "X",
            StrongNext => "X[!]",
            Since => "S",
            Once => "O",
            Historically => "H",
            Before => "Y",
            Diamond => "<",
            Box => "[",
            BackDiamond => "<<",
            BackBox => "[[",
            Test => "?",
            Concat => ";",
            Union => "+",
            Star => "*",
        }
    }

    /// Closing bracket of a modality.
    pub fn closing(self) -> Option<&'static str> {
        match self {
            Operator::Diamond => Some(">"),
            Operator::Box => Some("]"),
            Operator::BackDiamond => Some(">>"),
            Operator::BackBox => Some("]]"),
            _ => None,
        }
    }

    /// Name used in the JSON serialization.
    pub fn json_name(self) -> &'static str {
        use Operator::*;
        match self {
            Not => "not",
            And => "and",
            Or => "or",
            Impl => "impl",
            Equiv => "equiv",
            Xor => "xor",
            Until => "until",
            WeakUntil => "weak_until",
            Release => "release",
            StrongRelease => "strong_release",
            Eventually => "eventually",
            Always => "always",
            WeakNext => "weak_next",
            StrongNext => "next",
            Since => "since",
            Once => "once",
            Historically => "historically",
            Before => "before",
            Diamond => "diamond",
            Box => "box",
            BackDiamond => "back_diamond",
            BackBox => "back_box",
            Test => "test",
            Concat => "concat",
            Union => "union",
            Star => "star",
        }
    }

    pub fn is_modality(self) -> bool {
        self.closing().is_some()
    }
}

/// Borrowed, logic-independent shape of a formula node.
pub enum View<'a, F: Formula> {
    Atom(&'a Atom),
    Constant(Constant),
    Prefix(Operator, &'a F),
    Infix(Operator, &'a F, &'a F),
    Modality(Operator, &'a Regex<F::Test>, &'a F),
}

/// Common interface of the formula families.
///
/// The `from_*` constructors return `None` (or panic, for operators) when the
/// shape does not exist in the logic; the parser only calls them with shapes
/// taken from the logic's own precedence table.
pub trait Formula: Clone + PartialEq + fmt::Debug + Sized {
    /// Formula type nested inside regex tests. Only meaningful for the
    /// dynamic logics; the others set it to themselves.
    type Test: Formula;

    fn table() -> &'static PrecedenceTable;
    fn view(&self) -> View<'_, Self>;

    fn from_atom(atom: Atom) -> Option<Self>;
    fn from_constant(c: Constant) -> Option<Self>;
    fn from_prefix(op: Operator, arg: Self) -> Self;
    fn from_infix(op: Operator, lhs: Self, rhs: Self) -> Self;
    fn from_modality(op: Operator, regex: Regex<Self::Test>, arg: Self) -> Self;

    /// Every atom name occurring in the tree, including inside regexes and
    /// tests.
    fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        collect_atoms(self, &mut out);
        out
    }

    /// Number of nodes, counting regex and propositional nodes.
    fn size(&self) -> usize {
        match self.view() {
            View::Atom(_) | View::Constant(_) => 1,
            View::Prefix(_, a) => 1 + a.size(),
            View::Infix(_, l, r) => 1 + l.size() + r.size(),
            View::Modality(_, re, a) => 1 + re.size() + a.size(),
        }
    }
}

/// A formula family that is one of the four top-level logics.
pub trait Logical: Formula {
    const LOGIC: Logic;
}

fn collect_atoms<F: Formula>(f: &F, out: &mut BTreeSet<String>) {
    match f.view() {
        View::Atom(a) => {
            out.insert(a.name.clone());
        }
        View::Constant(_) => {}
        View::Prefix(_, a) => collect_atoms(a, out),
        View::Infix(_, l, r) => {
            collect_atoms(l, out);
            collect_atoms(r, out);
        }
        View::Modality(_, re, a) => {
            re.collect_atoms(out);
            collect_atoms(a, out);
        }
    }
}

/// Propositional formula, the letters of regular expressions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Prop {
    Atom(Atom),
    True,
    False,
    Not(Box<Prop>),
    And(Box<Prop>, Box<Prop>),
    Or(Box<Prop>, Box<Prop>),
    Impl(Box<Prop>, Box<Prop>),
    Equiv(Box<Prop>, Box<Prop>),
    Xor(Box<Prop>, Box<Prop>),
}

impl Prop {
    pub fn atom(name: &str) -> Self {
        Prop::Atom(Atom::new(name))
    }
}

impl Formula for Prop {
    type Test = Prop;

    fn table() -> &'static PrecedenceTable {
        &table::PROPOSITIONAL
    }

    fn view(&self) -> View<'_, Self> {
        match self {
            Prop::Atom(a) => View::Atom(a),
            Prop::True => View::Constant(Constant::True),
            Prop::False => View::Constant(Constant::False),
            Prop::Not(a) => View::Prefix(Operator::Not, a),
            Prop::And(l, r) => View::Infix(Operator::And, l, r),
            Prop::Or(l, r) => View::Infix(Operator::Or, l, r),
            Prop::Impl(l, r) => View::Infix(Operator::Impl, l, r),
            Prop::Equiv(l, r) => View::Infix(Operator::Equiv, l, r),
            Prop::Xor(l, r) => View::Infix(Operator::Xor, l, r),
        }
    }

    fn from_atom(atom: Atom) -> Option<Self> {
        Some(Prop::Atom(atom))
    }

    fn from_constant(c: Constant) -> Option<Self> {
        match c {
            Constant::True => Some(Prop::True),
            Constant::False => Some(Prop::False),
            _ => None,
        }
    }

    fn from_prefix(op: Operator, arg: Self) -> Self {
        match op {
            Operator::Not => Prop::Not(Box::new(arg)),
            _ => unreachable!("{op:?} is not a propositional prefix operator"),
        }
    }

    fn from_infix(op: Operator, lhs: Self, rhs: Self) -> Self {
        let (l, r) = (Box::new(lhs), Box::new(rhs));
        match op {
            Operator::And => Prop::And(l, r),
            Operator::Or => Prop::Or(l, r),
            Operator::Impl => Prop::Impl(l, r),
            Operator::Equiv => Prop::Equiv(l, r),
            Operator::Xor => Prop::Xor(l, r),
            _ => unreachable!("{op:?} is not a propositional connective"),
        }
    }

    fn from_modality(op: Operator, _: Regex<Prop>, _: Self) -> Self {
        unreachable!("{op:?}: propositional formulae have no modalities")
    }
}

/// Path expression of the dynamic logics; `F` is the formula type of tests.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Regex<F> {
    Prop(Prop),
    Test(Box<F>),
    Concat(Box<Regex<F>>, Box<Regex<F>>),
    Union(Box<Regex<F>>, Box<Regex<F>>),
    Star(Box<Regex<F>>),
}

impl<F: Formula> Regex<F> {
    pub fn prop(p: Prop) -> Self {
        Regex::Prop(p)
    }

    pub fn test(f: F) -> Self {
        Regex::Test(Box::new(f))
    }

    pub fn concat(l: Self, r: Self) -> Self {
        Regex::Concat(Box::new(l), Box::new(r))
    }

    pub fn union(l: Self, r: Self) -> Self {
        Regex::Union(Box::new(l), Box::new(r))
    }

    pub fn star(r: Self) -> Self {
        Regex::Star(Box::new(r))
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Regex::Prop(p) => collect_atoms(p, out),
            Regex::Test(f) => collect_atoms(f.as_ref(), out),
            Regex::Concat(l, r) | Regex::Union(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
            Regex::Star(r) => r.collect_atoms(out),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Regex::Prop(p) => 1 + p.size(),
            Regex::Test(f) => 1 + f.size(),
            Regex::Concat(l, r) | Regex::Union(l, r) => 1 + l.size() + r.size(),
            Regex::Star(r) => 1 + r.size(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LtlfFormula {
    Atom(Atom),
    True,
    False,
    Tt,
    Ff,
    Last,
    End,
    Not(Box<LtlfFormula>),
    And(Box<LtlfFormula>, Box<LtlfFormula>),
    Or(Box<LtlfFormula>, Box<LtlfFormula>),
    Impl(Box<LtlfFormula>, Box<LtlfFormula>),
    Equiv(Box<LtlfFormula>, Box<LtlfFormula>),
    Xor(Box<LtlfFormula>, Box<LtlfFormula>),
    Until(Box<LtlfFormula>, Box<LtlfFormula>),
    WeakUntil(Box<LtlfFormula>, Box<LtlfFormula>),
    Release(Box<LtlfFormula>, Box<LtlfFormula>),
    StrongRelease(Box<LtlfFormula>, Box<LtlfFormula>),
    Eventually(Box<LtlfFormula>),
    Always(Box<LtlfFormula>),
    WeakNext(Box<LtlfFormula>),
    StrongNext(Box<LtlfFormula>),
}

impl LtlfFormula {
    pub fn atom(name: &str) -> Self {
        LtlfFormula::Atom(Atom::new(name))
    }

    /// Replaces `last` by `X false` and `end` by `G false`.
    pub fn desugar(&self) -> Self {
        use LtlfFormula::*;
        let un = |f: &LtlfFormula| Box::new(f.desugar());
        match self {
            Last => WeakNext(Box::new(False)),
            End => Always(Box::new(False)),
            Atom(_) | True | False | Tt | Ff => self.clone(),
            Not(a) => Not(un(a)),
            Eventually(a) => Eventually(un(a)),
            Always(a) => Always(un(a)),
            WeakNext(a) => WeakNext(un(a)),
            StrongNext(a) => StrongNext(un(a)),
            And(l, r) => And(un(l), un(r)),
            Or(l, r) => Or(un(l), un(r)),
            Impl(l, r) => Impl(un(l), un(r)),
            Equiv(l, r) => Equiv(un(l), un(r)),
            Xor(l, r) => Xor(un(l), un(r)),
            Until(l, r) => Until(un(l), un(r)),
            WeakUntil(l, r) => WeakUntil(un(l), un(r)),
            Release(l, r) => Release(un(l), un(r)),
            StrongRelease(l, r) => StrongRelease(un(l), un(r)),
        }
    }
}

impl Formula for LtlfFormula {
    type Test = LtlfFormula;

    fn table() -> &'static PrecedenceTable {
        &table::LTLF
    }

    fn view(&self) -> View<'_, Self> {
        use LtlfFormula::*;
        match self {
            Atom(a) => View::Atom(a),
            True => View::Constant(Constant::True),
            False => View::Constant(Constant::False),
            Tt => View::Constant(Constant::Tt),
            Ff => View::Constant(Constant::Ff),
            Last => View::Constant(Constant::Last),
            End => View::Constant(Constant::End),
            Not(a) => View::Prefix(Operator::Not, a),
            Eventually(a) => View::Prefix(Operator::Eventually, a),
            Always(a) => View::Prefix(Operator::Always, a),
            WeakNext(a) => View::Prefix(Operator::WeakNext, a),
            StrongNext(a) => View::Prefix(Operator::StrongNext, a),
            And(l, r) => View::Infix(Operator::And, l, r),
            Or(l, r) => View::Infix(Operator::Or, l, r),
            Impl(l, r) => View::Infix(Operator::Impl, l, r),
            Equiv(l, r) => View::Infix(Operator::Equiv, l, r),
            Xor(l, r) => View::Infix(Operator::Xor, l, r),
            Until(l, r) => View::Infix(Operator::Until, l, r),
            WeakUntil(l, r) => View::Infix(Operator::WeakUntil, l, r),
            Release(l, r) => View::Infix(Operator::Release, l, r),
            StrongRelease(l, r) => View::Infix(Operator::StrongRelease, l, r),
        }
    }

    fn from_atom(atom: Atom) -> Option<Self> {
        Some(LtlfFormula::Atom(atom))
    }

    fn from_constant(c: Constant) -> Option<Self> {
        Some(match c {
            Constant::True => LtlfFormula::True,
            Constant::False => LtlfFormula::False,
            Constant::Tt => LtlfFormula::Tt,
            Constant::Ff => LtlfFormula::Ff,
            Constant::Last => LtlfFormula::Last,
            Constant::End => LtlfFormula::End,
            Constant::First | Constant::Start => return None,
        })
    }

    fn from_prefix(op: Operator, arg: Self) -> Self {
        let a = Box::new(arg);
        match op {
            Operator::Not => LtlfFormula::Not(a),
            Operator::Eventually => LtlfFormula::Eventually(a),
            Operator::Always => LtlfFormula::Always(a),
            Operator::WeakNext => LtlfFormula::WeakNext(a),
            Operator::StrongNext => LtlfFormula::StrongNext(a),
            _ => unreachable!("{op:?} is not an LTLf prefix operator"),
        }
    }

    fn from_infix(op: Operator, lhs: Self, rhs: Self) -> Self {
        let (l, r) = (Box::new(lhs), Box::new(rhs));
        match op {
            Operator::And => LtlfFormula::And(l, r),
            Operator::Or => LtlfFormula::Or(l, r),
            Operator::Impl => LtlfFormula::Impl(l, r),
            Operator::Equiv => LtlfFormula::Equiv(l, r),
            Operator::Xor => LtlfFormula::Xor(l, r),
            Operator::Until => LtlfFormula::Until(l, r),
            Operator::WeakUntil => LtlfFormula::WeakUntil(l, r),
            Operator::Release => LtlfFormula::Release(l, r),
            Operator::StrongRelease => LtlfFormula::StrongRelease(l, r),
            _ => unreachable!("{op:?} is not an LTLf binary operator"),
        }
    }

    fn from_modality(op: Operator, _: Regex<Self>, _: Self) -> Self {
        unreachable!("{op:?}: LTLf has no modalities")
    }
}

impl Logical for LtlfFormula {
    const LOGIC: Logic = Logic::Ltlf;
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PltlfFormula {
    Atom(Atom),
    True,
    False,
    Tt,
    Ff,
    First,
    Start,
    Not(Box<PltlfFormula>),
    And(Box<PltlfFormula>, Box<PltlfFormula>),
    Or(Box<PltlfFormula>, Box<PltlfFormula>),
    Impl(Box<PltlfFormula>, Box<PltlfFormula>),
    Equiv(Box<PltlfFormula>, Box<PltlfFormula>),
    Xor(Box<PltlfFormula>, Box<PltlfFormula>),
    Since(Box<PltlfFormula>, Box<PltlfFormula>),
    Once(Box<PltlfFormula>),
    Historically(Box<PltlfFormula>),
    Before(Box<PltlfFormula>),
}

impl PltlfFormula {
    pub fn atom(name: &str) -> Self {
        PltlfFormula::Atom(Atom::new(name))
    }

    /// Replaces `first` by `!Y true` and `start` by `H false`.
    pub fn desugar(&self) -> Self {
        use PltlfFormula::*;
        let un = |f: &PltlfFormula| Box::new(f.desugar());
        match self {
            First => Not(Box::new(Before(Box::new(True)))),
            Start => Historically(Box::new(False)),
            Atom(_) | True | False | Tt | Ff => self.clone(),
            Not(a) => Not(un(a)),
            Once(a) => Once(un(a)),
            Historically(a) => Historically(un(a)),
            Before(a) => Before(un(a)),
            And(l, r) => And(un(l), un(r)),
            Or(l, r) => Or(un(l), un(r)),
            Impl(l, r) => Impl(un(l), un(r)),
            Equiv(l, r) => Equiv(un(l), un(r)),
            Xor(l, r) => Xor(un(l), un(r)),
            Since(l, r) => Since(un(l), un(r)),
        }
    }
}

impl Formula for PltlfFormula {
    type Test = PltlfFormula;

    fn table() -> &'static PrecedenceTable {
        &table::PLTLF
    }

    fn view(&self) -> View<'_, Self> {
        use PltlfFormula::*;
        match self {
            Atom(a) => View::Atom(a),
            True => View::Constant(Constant::True),
            False => View::Constant(Constant::False),
            Tt => View::Constant(Constant::Tt),
            Ff => View::Constant(Constant::Ff),
            First => View::Constant(Constant::First),
            Start => View::Constant(Constant::Start),
            Not(a) => View::Prefix(Operator::Not, a),
            Once(a) => View::Prefix(Operator::Once, a),
            Historically(a) => View::Prefix(Operator::Historically, a),
            Before(a) => View::Prefix(Operator::Before, a),
            And(l, r) => View::Infix(Operator::And, l, r),
            Or(l, r) => View::Infix(Operator::Or, l, r),
            Impl(l, r) => View::Infix(Operator::Impl, l, r),
            Equiv(l, r) => View::Infix(Operator::Equiv, l, r),
            Xor(l, r) => View::Infix(Operator::Xor, l, r),
            Since(l, r) => View::Infix(Operator::Since, l, r),
        }
    }

    fn from_atom(atom: Atom) -> Option<Self> {
        Some(PltlfFormula::Atom(atom))
    }

    fn from_constant(c: Constant) -> Option<Self> {
        Some(match c {
            Constant::True => PltlfFormula::True,
            Constant::False => PltlfFormula::False,
            Constant::Tt => PltlfFormula::Tt,
            Constant::Ff => PltlfFormula::Ff,
            Constant::First => PltlfFormula::First,
            Constant::Start => PltlfFormula::Start,
            Constant::Last | Constant::End => return None,
        })
    }

    fn from_prefix(op: Operator, arg: Self) -> Self {
        let a = Box::new(arg);
        match op {
            Operator::Not => PltlfFormula::Not(a),
            Operator::Once => PltlfFormula::Once(a),
            Operator::Historically => PltlfFormula::Historically(a),
            Operator::Before => PltlfFormula::Before(a),
            _ => unreachable!("{op:?} is not a PLTLf prefix operator"),
        }
    }

    fn from_infix(op: Operator, lhs: Self, rhs: Self) -> Self {
        let (l, r) = (Box::new(lhs), Box::new(rhs));
        match op {
            Operator::And => PltlfFormula::And(l, r),
            Operator::Or => PltlfFormula::Or(l, r),
            Operator::Impl => PltlfFormula::Impl(l, r),
            Operator::Equiv => PltlfFormula::Equiv(l, r),
            Operator::Xor => PltlfFormula::Xor(l, r),
            Operator::Since => PltlfFormula::Since(l, r),
            _ => unreachable!("{op:?} is not a PLTLf binary operator"),
        }
    }

    fn from_modality(op: Operator, _: Regex<Self>, _: Self) -> Self {
        unreachable!("{op:?}: PLTLf has no modalities")
    }
}

impl Logical for PltlfFormula {
    const LOGIC: Logic = Logic::Pltlf;
}

/// LDLf formula. Atoms only occur inside path expressions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LdlfFormula {
    Tt,
    Ff,
    Not(Box<LdlfFormula>),
    And(Box<LdlfFormula>, Box<LdlfFormula>),
    Or(Box<LdlfFormula>, Box<LdlfFormula>),
    Impl(Box<LdlfFormula>, Box<LdlfFormula>),
    Equiv(Box<LdlfFormula>, Box<LdlfFormula>),
    Xor(Box<LdlfFormula>, Box<LdlfFormula>),
    Diamond(Box<Regex<LdlfFormula>>, Box<LdlfFormula>),
    Box(Box<Regex<LdlfFormula>>, Box<LdlfFormula>),
}

impl LdlfFormula {
    pub fn diamond(r: Regex<LdlfFormula>, f: LdlfFormula) -> Self {
        LdlfFormula::Diamond(Box::new(r), Box::new(f))
    }

    pub fn box_(r: Regex<LdlfFormula>, f: LdlfFormula) -> Self {
        LdlfFormula::Box(Box::new(r), Box::new(f))
    }
}

impl Formula for LdlfFormula {
    type Test = LdlfFormula;

    fn table() -> &'static PrecedenceTable {
        &table::LDLF
    }

    fn view(&self) -> View<'_, Self> {
        use LdlfFormula::*;
        match self {
            Tt => View::Constant(Constant::Tt),
            Ff => View::Constant(Constant::Ff),
            Not(a) => View::Prefix(Operator::Not, a),
            And(l, r) => View::Infix(Operator::And, l, r),
            Or(l, r) => View::Infix(Operator::Or, l, r),
            Impl(l, r) => View::Infix(Operator::Impl, l, r),
            Equiv(l, r) => View::Infix(Operator::Equiv, l, r),
            Xor(l, r) => View::Infix(Operator::Xor, l, r),
            Diamond(re, a) => View::Modality(Operator::Diamond, re, a),
            Box(re, a) => View::Modality(Operator::Box, re, a),
        }
    }

    fn from_atom(_: Atom) -> Option<Self> {
        None
    }

    fn from_constant(c: Constant) -> Option<Self> {
        match c {
            Constant::Tt => Some(LdlfFormula::Tt),
            Constant::Ff => Some(LdlfFormula::Ff),
            _ => None,
        }
    }

    fn from_prefix(op: Operator, arg: Self) -> Self {
        match op {
            Operator::Not => LdlfFormula::Not(Box::new(arg)),
            _ => unreachable!("{op:?} is not an LDLf prefix operator"),
        }
    }

    fn from_infix(op: Operator, lhs: Self, rhs: Self) -> Self {
        let (l, r) = (Box::new(lhs), Box::new(rhs));
        match op {
            Operator::And => LdlfFormula::And(l, r),
            Operator::Or => LdlfFormula::Or(l, r),
            Operator::Impl => LdlfFormula::Impl(l, r),
            Operator::Equiv => LdlfFormula::Equiv(l, r),
            Operator::Xor => LdlfFormula::Xor(l, r),
            _ => unreachable!("{op:?} is not an LDLf binary operator"),
        }
    }

    fn from_modality(op: Operator, regex: Regex<Self>, arg: Self) -> Self {
        match op {
            Operator::Diamond => LdlfFormula::diamond(regex, arg),
            Operator::Box => LdlfFormula::box_(regex, arg),
            _ => unreachable!("{op:?} is not an LDLf modality"),
        }
    }
}

impl Logical for LdlfFormula {
    const LOGIC: Logic = Logic::Ldlf;
}

/// PLDLf formula, the backward mirror of [`LdlfFormula`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PldlfFormula {
    Tt,
    Ff,
    Not(Box<PldlfFormula>),
    And(Box<PldlfFormula>, Box<PldlfFormula>),
    Or(Box<PldlfFormula>, Box<PldlfFormula>),
    Impl(Box<PldlfFormula>, Box<PldlfFormula>),
    Equiv(Box<PldlfFormula>, Box<PldlfFormula>),
    Xor(Box<PldlfFormula>, Box<PldlfFormula>),
    BackDiamond(Box<Regex<PldlfFormula>>, Box<PldlfFormula>),
    BackBox(Box<Regex<PldlfFormula>>, Box<PldlfFormula>),
}

impl PldlfFormula {
    pub fn back_diamond(r: Regex<PldlfFormula>, f: PldlfFormula) -> Self {
        PldlfFormula::BackDiamond(Box::new(r), Box::new(f))
    }

    pub fn back_box(r: Regex<PldlfFormula>, f: PldlfFormula) -> Self {
        PldlfFormula::BackBox(Box::new(r), Box::new(f))
    }
}

impl Formula for PldlfFormula {
    type Test = PldlfFormula;

    fn table() -> &'static PrecedenceTable {
        &table::PLDLF
    }

    fn view(&self) -> View<'_, Self> {
        use PldlfFormula::*;
        match self {
            Tt => View::Constant(Constant::Tt),
            Ff => View::Constant(Constant::Ff),
            Not(a) => View::Prefix(Operator::Not, a),
            And(l, r) => View::Infix(Operator::And, l, r),
            Or(l, r) => View::Infix(Operator::Or, l, r),
            Impl(l, r) => View::Infix(Operator::Impl, l, r),
            Equiv(l, r) => View::Infix(Operator::Equiv, l, r),
            Xor(l, r) => View::Infix(Operator::Xor, l, r),
            BackDiamond(re, a) => View::Modality(Operator::BackDiamond, re, a),
            BackBox(re, a) => View::Modality(Operator::BackBox, re, a),
        }
    }

    fn from_atom(_: Atom) -> Option<Self> {
        None
    }

    fn from_constant(c: Constant) -> Option<Self> {
        match c {
            Constant::Tt => Some(PldlfFormula::Tt),
            Constant::Ff => Some(PldlfFormula::Ff),
            _ => None,
        }
    }

    fn from_prefix(op: Operator, arg: Self) -> Self {
        match op {
            Operator::Not => PldlfFormula::Not(Box::new(arg)),
            _ => unreachable!("{op:?} is not a PLDLf prefix operator"),
        }
    }

    fn from_infix(op: Operator, lhs: Self, rhs: Self) -> Self {
        let (l, r) = (Box::new(lhs), Box::new(rhs));
        match op {
            Operator::And => PldlfFormula::And(l, r),
            Operator::Or => PldlfFormula::Or(l, r),
            Operator::Impl => PldlfFormula::Impl(l, r),
            Operator::Equiv => PldlfFormula::Equiv(l, r),
            Operator::Xor => PldlfFormula::Xor(l, r),
            _ => unreachable!("{op:?} is not a PLDLf binary operator"),
        }
    }

    fn from_modality(op: Operator, regex: Regex<Self>, arg: Self) -> Self {
        match op {
            Operator::BackDiamond => PldlfFormula::back_diamond(regex, arg),
            Operator::BackBox => PldlfFormula::back_box(regex, arg),
            _ => unreachable!("{op:?} is not a PLDLf modality"),
        }
    }
}

impl Logical for PldlfFormula {
    const LOGIC: Logic = Logic::Pldlf;
}
