//! Rendering of syntax trees back to text.
//!
//! Canonical output fixes one spelling per operator (`!`, `&`, `|`, `->`,
//! `<->`, `^`, `R`), puts single spaces around binary operators, none after
//! prefix operators or inside modal brackets, and emits only the
//! parentheses the precedence table requires. The full-parens style wraps
//! every compound subterm instead.

use std::fmt::Write as _;

use thiserror::Error;

use crate::ast::{Atom, Formula, Operator, Regex, View};
use crate::lexer::KEYWORDS;
use crate::table::Assoc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PrintStyle {
    #[default]
    Canonical,
    FullParens,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrintError {
    #[error("atom {name:?} cannot be written: {reason}")]
    Unprintable { name: String, reason: &'static str },
}

/// Renders `f` in the given style. Fails only for atoms whose name cannot be
/// expressed in the grammar.
pub fn print<F: Formula>(f: &F, style: PrintStyle) -> Result<String, PrintError> {
    let mut printer = Printer {
        style,
        out: String::new(),
    };
    printer.formula(f)?;
    Ok(printer.out)
}

/// Whether `name` can be written without quotes.
pub fn is_plain_name(name: &str) -> bool {
    let mut bytes = name.bytes();
    matches!(bytes.next(), Some(b'a'..=b'z' | b'_'))
        && bytes.all(|b| matches!(b, b'a'..=b'z' | b'_' | b'0'..=b'9'))
        && !KEYWORDS.contains(&name)
}

fn write_atom(atom: &Atom, out: &mut String) -> Result<(), PrintError> {
    let name = &atom.name;
    let unprintable = |reason| PrintError::Unprintable {
        name: name.clone(),
        reason,
    };
    if !name.chars().all(|c| matches!(c, ' '..='~')) {
        return Err(unprintable(
            "quoted names may only hold printable ASCII characters",
        ));
    }
    if is_plain_name(name) {
        out.push_str(name);
    } else if !name.contains('"') {
        let _ = write!(out, "\"{name}\"");
    } else if !name.contains('\'') {
        let _ = write!(out, "'{name}'");
    } else {
        return Err(unprintable("it contains both quote characters"));
    }
    Ok(())
}

/// Position of a child relative to its parent, for parenthesization.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
    Operand,
}

struct Printer {
    style: PrintStyle,
    out: String,
}

impl Printer {
    fn formula<F: Formula>(&mut self, f: &F) -> Result<(), PrintError> {
        let table = F::table();
        match f.view() {
            View::Atom(a) => write_atom(a, &mut self.out)?,
            View::Constant(c) => self.out.push_str(c.keyword()),
            View::Prefix(op, arg) => {
                self.out.push_str(op.symbol());
                self.child(arg, table.level_of(op), Side::Operand)?;
            }
            View::Infix(op, lhs, rhs) => {
                let level = table.level_of(op);
                self.child(lhs, level, Side::Left)?;
                let _ = write!(self.out, " {} ", op.symbol());
                self.child(rhs, level, Side::Right)?;
            }
            View::Modality(op, regex, arg) => {
                self.out.push_str(op.symbol());
                let wrap = self.style == PrintStyle::FullParens && regex_is_compound(regex);
                self.parenthesized(wrap, |p| p.regex(regex))?;
                self.out.push_str(op.closing().unwrap_or_default());
                self.child(arg, table.level_of(op), Side::Operand)?;
            }
        }
        Ok(())
    }

    fn child<F: Formula>(
        &mut self,
        child: &F,
        parent: Option<(usize, Assoc)>,
        side: Side,
    ) -> Result<(), PrintError> {
        let wrap = match self.style {
            PrintStyle::FullParens => !matches!(child.view(), View::Atom(_) | View::Constant(_)),
            PrintStyle::Canonical => needs_parens(child, parent, side),
        };
        self.parenthesized(wrap, |p| p.formula(child))
    }

    fn parenthesized(
        &mut self,
        wrap: bool,
        body: impl FnOnce(&mut Self) -> Result<(), PrintError>,
    ) -> Result<(), PrintError> {
        if wrap {
            self.out.push('(');
        }
        body(self)?;
        if wrap {
            self.out.push(')');
        }
        Ok(())
    }

    fn regex<T: Formula>(&mut self, r: &Regex<T>) -> Result<(), PrintError> {
        match r {
            Regex::Prop(p) => self.formula(p),
            Regex::Test(f) => {
                let wrap = match self.style {
                    PrintStyle::FullParens => {
                        !matches!(f.view(), View::Atom(_) | View::Constant(_))
                    }
                    PrintStyle::Canonical => matches!(f.view(), View::Infix(..)),
                };
                self.parenthesized(wrap, |p| p.formula(f.as_ref()))?;
                self.out.push('?');
                Ok(())
            }
            Regex::Concat(lhs, rhs) | Regex::Union(lhs, rhs) => {
                let op = match r {
                    Regex::Concat(..) => Operator::Concat,
                    _ => Operator::Union,
                };
                let level = regex_level_of::<T>(op);
                self.regex_child(lhs, level, Side::Left)?;
                let _ = write!(self.out, " {} ", op.symbol());
                self.regex_child(rhs, level, Side::Right)
            }
            Regex::Star(inner) => {
                self.regex_child(inner, regex_level_of::<T>(Operator::Star), Side::Operand)?;
                self.out.push('*');
                Ok(())
            }
        }
    }

    fn regex_child<T: Formula>(
        &mut self,
        child: &Regex<T>,
        parent_level: usize,
        side: Side,
    ) -> Result<(), PrintError> {
        let wrap = match self.style {
            PrintStyle::FullParens => regex_is_compound(child),
            PrintStyle::Canonical => match regex_binding(child) {
                None => false,
                Some(level) => {
                    level < parent_level || (level == parent_level && side == Side::Right)
                }
            },
        };
        self.parenthesized(wrap, |p| p.regex(child))
    }
}

fn regex_level_of<T: Formula>(op: Operator) -> usize {
    T::table()
        .level_of(op)
        .map(|(level, _)| level)
        .unwrap_or_else(|| unreachable!("{op:?} missing from the path expression table"))
}

fn regex_is_compound<T: Formula>(r: &Regex<T>) -> bool {
    !matches!(r, Regex::Prop(p) if matches!(p.view(), View::Atom(_) | View::Constant(_)))
}

/// Level at which an unparenthesized `r` would stop binding, or `None` when
/// it is closed (postfix, test, simple letter). A compound letter binds
/// looser than every path operator.
fn regex_binding<T: Formula>(r: &Regex<T>) -> Option<usize> {
    match r {
        Regex::Concat(..) => Some(regex_level_of::<T>(Operator::Concat)),
        Regex::Union(..) => Some(regex_level_of::<T>(Operator::Union)),
        Regex::Prop(p) if matches!(p.view(), View::Infix(..)) => Some(0),
        _ => None,
    }
}

/// Parentheses required around `child` in canonical output. Both sides of a
/// binary operator are treated alike for prefix children; in the shipped
/// tables every prefix level is above every binary level, so that case never
/// arises.
fn needs_parens<F: Formula>(child: &F, parent: Option<(usize, Assoc)>, side: Side) -> bool {
    let Some((parent_level, parent_assoc)) = parent else {
        return false;
    };
    let table = F::table();
    match child.view() {
        View::Atom(_) | View::Constant(_) => false,
        View::Prefix(op, _) | View::Modality(op, _, _) => {
            side != Side::Operand && table.level_of(op).is_some_and(|(l, _)| l < parent_level)
        }
        View::Infix(op, _, _) => {
            let Some((level, _)) = table.level_of(op) else {
                return true;
            };
            match side {
                Side::Operand => level <= parent_level,
                Side::Left => {
                    level < parent_level || (level == parent_level && parent_assoc == Assoc::Right)
                }
                Side::Right => {
                    level < parent_level || (level == parent_level && parent_assoc == Assoc::Left)
                }
            }
        }
    }
}
