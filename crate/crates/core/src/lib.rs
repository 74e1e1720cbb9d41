//! Lexer, parser, printer and finite-trace evaluator for LTLf, LDLf, PLTLf
//! and PLDLf.
//!
//! ```
//! use fintl::{parse_ltlf, print, PrintStyle};
//!
//! let f = parse_ltlf("a && b || c").unwrap();
//! assert_eq!(print(&f, PrintStyle::Canonical).unwrap(), "a & b | c");
//! ```

pub mod ast;
pub mod conformance;
pub mod json;
pub mod lexer;
pub mod parser;
pub mod printer;
pub mod random;
pub mod semantics;
pub mod table;

pub use ast::{
    Atom, Constant, Formula, LdlfFormula, Logical, LtlfFormula, Operator, PldlfFormula,
    PltlfFormula, Prop, Regex,
};
pub use json::to_json;
pub use lexer::{tokenize, LexError, LexErrorKind, Logic, Token, TokenKind};
pub use parser::{
    parse, parse_ldlf, parse_ltlf, parse_pldlf, parse_pltlf, Error, ParseError, ParseErrorKind,
};
pub use printer::{print, PrintError, PrintStyle};
pub use semantics::{regex_reach, Direction, EvalError, Relation, Semantics, Trace, TraceError};

/// A formula of any of the four logics, chosen at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyFormula {
    Ltlf(LtlfFormula),
    Ldlf(LdlfFormula),
    Pltlf(PltlfFormula),
    Pldlf(PldlfFormula),
}

macro_rules! each {
    ($self:expr, $f:ident => $body:expr) => {
        match $self {
            AnyFormula::Ltlf($f) => $body,
            AnyFormula::Ldlf($f) => $body,
            AnyFormula::Pltlf($f) => $body,
            AnyFormula::Pldlf($f) => $body,
        }
    };
}

impl AnyFormula {
    pub fn parse(logic: Logic, input: &str) -> Result<Self, Error> {
        Ok(match logic {
            Logic::Ltlf => AnyFormula::Ltlf(parse(input)?),
            Logic::Ldlf => AnyFormula::Ldlf(parse(input)?),
            Logic::Pltlf => AnyFormula::Pltlf(parse(input)?),
            Logic::Pldlf => AnyFormula::Pldlf(parse(input)?),
        })
    }

    pub fn logic(&self) -> Logic {
        match self {
            AnyFormula::Ltlf(_) => Logic::Ltlf,
            AnyFormula::Ldlf(_) => Logic::Ldlf,
            AnyFormula::Pltlf(_) => Logic::Pltlf,
            AnyFormula::Pldlf(_) => Logic::Pldlf,
        }
    }

    pub fn print(&self, style: PrintStyle) -> Result<String, PrintError> {
        each!(self, f => print(f, style))
    }

    pub fn to_json(&self) -> String {
        each!(self, f => to_json(f))
    }

    pub fn satisfied_by(&self, trace: &Trace) -> Result<bool, EvalError> {
        each!(self, f => f.satisfied_by(trace))
    }
}
