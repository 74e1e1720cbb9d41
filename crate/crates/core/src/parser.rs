//! Precedence-climbing parser driven by [`crate::table`].
//!
//! One engine serves every formula family through the [`Formula`] trait.
//! Path expressions get a second, smaller engine: inside `<...>` the letters
//! are propositional formulae, `φ?` re-enters the owning logic, and
//! parenthesized groups may be any of the three. The regex engine resolves
//! that by trying the readings in turn and reporting the error that got
//! furthest.
//!
//! Boolean connectives sit below every regex operator in the dynamic tables,
//! so an unparenthesized compound letter such as `a & b` is only accepted as
//! a whole path expression; `a & b ; c` is rejected rather than silently
//! read as `(a & b) ; c`.

use std::fmt;

use thiserror::Error;

use crate::ast::{
    Atom, Constant, Formula, LdlfFormula, Logical, LtlfFormula, Operator, PldlfFormula,
    PltlfFormula, Prop, Regex, View,
};
use crate::lexer::{self, tokenize, LexError, Token, TokenKind};
use crate::table::Assoc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParseErrorKind {
    UnexpectedToken,
    UnexpectedEnd,
    ReservedWord,
    AtomNotAllowedHere,
    UnbalancedDelimiter,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
    pub offset: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (found, expected) = (&self.found, &self.expected);
        match self.kind {
            ParseErrorKind::UnexpectedToken => write!(f, "unexpected `{found}`, expected {expected}"),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input, expected {expected}"),
            ParseErrorKind::ReservedWord => write!(
                f,
                "`{found}` is a reserved keyword and cannot be used as an atom (write \"{found}\" for a proposition with that name)"
            ),
            ParseErrorKind::AtomNotAllowedHere => write!(f, "{found} is not allowed here: {expected}"),
            ParseErrorKind::UnbalancedDelimiter => write!(f, "unbalanced `{found}`: {expected}"),
        }
    }
}

impl std::error::Error for ParseError {}

/// Anything that can go wrong turning text into a formula.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Lex(#[from] LexError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    pub fn line(&self) -> usize {
        match self {
            Error::Lex(e) => e.line,
            Error::Parse(e) => e.line,
        }
    }

    pub fn column(&self) -> usize {
        match self {
            Error::Lex(e) => e.column,
            Error::Parse(e) => e.column,
        }
    }

    pub fn offset(&self) -> usize {
        match self {
            Error::Lex(e) => e.offset,
            Error::Parse(e) => e.offset,
        }
    }

    /// `LINE:COL: message`, the one-line diagnostic format of the CLI.
    pub fn diagnostic(&self) -> String {
        format!("{}:{}: {}", self.line(), self.column(), self)
    }
}

fn token_operator(kind: TokenKind) -> Option<Operator> {
    use TokenKind as T;
    Some(match kind {
        T::Not => Operator::Not,
        T::And => Operator::And,
        T::Or => Operator::Or,
        T::Impl => Operator::Impl,
        T::Equiv => Operator::Equiv,
        T::Xor => Operator::Xor,
        T::WeakNext => Operator::WeakNext,
        T::StrongNext => Operator::StrongNext,
        T::Until => Operator::Until,
        T::WeakUntil => Operator::WeakUntil,
        T::Release => Operator::Release,
        T::StrongRelease => Operator::StrongRelease,
        T::Eventually => Operator::Eventually,
        T::Always => Operator::Always,
        T::Before => Operator::Before,
        T::Since => Operator::Since,
        T::Once => Operator::Once,
        T::Historically => Operator::Historically,
        T::LDiam => Operator::Diamond,
        T::LBox => Operator::Box,
        T::LBDiam => Operator::BackDiamond,
        T::LBBox => Operator::BackBox,
        T::Test => Operator::Test,
        T::Concat => Operator::Concat,
        T::Union => Operator::Union,
        T::Star => Operator::Star,
        _ => return None,
    })
}

fn token_constant(kind: TokenKind) -> Option<Constant> {
    use TokenKind as T;
    Some(match kind {
        T::True => Constant::True,
        T::False => Constant::False,
        T::Tt => Constant::Tt,
        T::Ff => Constant::Ff,
        T::Last => Constant::Last,
        T::End => Constant::End,
        T::First => Constant::First,
        T::Start => Constant::Start,
        _ => return None,
    })
}

fn closing_token(op: Operator) -> TokenKind {
    match op {
        Operator::Diamond => TokenKind::RDiam,
        Operator::Box => TokenKind::RBox,
        Operator::BackDiamond => TokenKind::RBDiam,
        Operator::BackBox => TokenKind::RBBox,
        _ => unreachable!("{op:?} is not a modality"),
    }
}

fn is_regex_operator(op: Operator) -> bool {
    matches!(
        op,
        Operator::Test | Operator::Concat | Operator::Union | Operator::Star
    )
}

/// How to write a modality in an example, for diagnostics.
fn modality_example<F: Formula>() -> &'static str {
    if F::table().contains(Operator::BackDiamond) {
        "`<<a>>tt`"
    } else {
        "`<a>tt`"
    }
}

struct Parser<'t> {
    tokens: &'t [Token],
    pos: usize,
    /// Offset, line and column just past the last character.
    eof: (usize, usize, usize),
}

impl<'t> Parser<'t> {
    fn new(input: &str, tokens: &'t [Token]) -> Self {
        let (line, column) = lexer::line_column(input, input.len());
        Parser {
            tokens,
            pos: 0,
            eof: (input.len(), line, column),
        }
    }

    fn peek(&self) -> Option<&'t Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<TokenKind> {
        self.peek().map(|t| t.kind)
    }

    fn peek_op(&self) -> Option<Operator> {
        self.peek_kind().and_then(token_operator)
    }

    fn bump(&mut self) -> &'t Token {
        let tok = &self.tokens[self.pos];
        self.pos += 1;
        tok
    }

    fn error_at(&self, kind: ParseErrorKind, tok: &Token, expected: &str) -> ParseError {
        ParseError {
            kind,
            line: tok.line,
            column: tok.column,
            offset: tok.offset,
            expected: expected.to_string(),
            found: tok.lexeme.clone(),
        }
    }

    /// Error at the current token, or at end of input.
    fn unexpected(&self, expected: &str) -> ParseError {
        match self.peek() {
            Some(tok) if tok.kind == TokenKind::RParen => {
                self.error_at(ParseErrorKind::UnbalancedDelimiter, tok, "no matching `(`")
            }
            Some(tok) if tok.kind.is_keyword() && token_operator(tok.kind).is_some() => {
                self.error_at(ParseErrorKind::ReservedWord, tok, expected)
            }
            Some(tok) => self.error_at(ParseErrorKind::UnexpectedToken, tok, expected),
            None => {
                let (offset, line, column) = self.eof;
                ParseError {
                    kind: ParseErrorKind::UnexpectedEnd,
                    line,
                    column,
                    offset,
                    expected: expected.to_string(),
                    found: String::new(),
                }
            }
        }
    }

    fn expect_closing(
        &mut self,
        open: &Token,
        close: TokenKind,
        spelling: &str,
    ) -> Result<(), ParseError> {
        match self.peek() {
            Some(tok) if tok.kind == close => {
                self.pos += 1;
                Ok(())
            }
            Some(_) => Err(self.unexpected(&format!("`{spelling}`"))),
            None => Err(self.error_at(
                ParseErrorKind::UnbalancedDelimiter,
                open,
                &format!("missing `{spelling}`"),
            )),
        }
    }

    /// Whether the current token can begin an operand of `F`.
    fn starts_operand<F: Formula>(&self) -> bool {
        let Some(kind) = self.peek_kind() else {
            return false;
        };
        match kind {
            TokenKind::Atom | TokenKind::LParen => true,
            _ if token_constant(kind).is_some() => true,
            _ => token_operator(kind)
                .and_then(|op| F::table().level_of(op))
                .is_some_and(|(_, assoc)| matches!(assoc, Assoc::Prefix | Assoc::Modality)),
        }
    }

    fn expr<F: Formula>(&mut self, min_level: usize) -> Result<F, ParseError> {
        let mut lhs = self.unary::<F>()?;
        while let Some(op) = self.peek_op() {
            if is_regex_operator(op) {
                break;
            }
            let Some((level, assoc)) = F::table().level_of(op) else {
                break;
            };
            if !matches!(assoc, Assoc::Left | Assoc::Right) || level < min_level {
                break;
            }
            self.pos += 1;
            let next_min = if assoc == Assoc::Right {
                level
            } else {
                level + 1
            };
            let rhs = self.expr::<F>(next_min)?;
            lhs = F::from_infix(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary<F: Formula>(&mut self) -> Result<F, ParseError> {
        if let Some(op) = self.peek_op() {
            match F::table().level_of(op) {
                Some((level, Assoc::Prefix)) => {
                    let tok = self.bump();
                    if tok.kind.is_keyword() && !self.starts_operand::<F>() {
                        // `F` alone, `(X)`, `a & G`: a keyword where an atom was meant.
                        return Err(self.error_at(ParseErrorKind::ReservedWord, tok, "an atom"));
                    }
                    let arg = self.expr::<F>(level + 1)?;
                    return Ok(F::from_prefix(op, arg));
                }
                Some((level, Assoc::Modality)) => {
                    let open = self.bump();
                    let regex = self.regex::<F::Test>()?;
                    let close = op.closing().unwrap_or_default();
                    self.expect_closing(open, closing_token(op), close)?;
                    let arg = self.expr::<F>(level + 1)?;
                    return Ok(F::from_modality(op, regex, arg));
                }
                _ => {}
            }
        }
        self.primary::<F>()
    }

    fn primary<F: Formula>(&mut self) -> Result<F, ParseError> {
        let Some(tok) = self.peek() else {
            return Err(self.unexpected("a formula"));
        };
        if tok.kind == TokenKind::LParen {
            self.pos += 1;
            let inner = self.expr::<F>(0)?;
            self.expect_closing(tok, TokenKind::RParen, ")")?;
            return Ok(inner);
        }
        if let Some(name) = tok.atom_name() {
            let atom = Atom {
                name: name.to_string(),
                quoted: tok.is_quoted(),
            };
            return match F::from_atom(atom) {
                Some(f) => {
                    self.pos += 1;
                    Ok(f)
                }
                None => Err(ParseError {
                    found: format!("atom `{}`", tok.lexeme),
                    ..self.error_at(
                        ParseErrorKind::AtomNotAllowedHere,
                        tok,
                        &format!(
                            "atoms may only appear inside a path expression, e.g. {}",
                            modality_example::<F>()
                        ),
                    )
                }),
            };
        }
        if let Some(c) = token_constant(tok.kind) {
            return match F::from_constant(c) {
                Some(f) => {
                    self.pos += 1;
                    Ok(f)
                }
                None => Err(ParseError {
                    found: format!("propositional constant `{}`", tok.lexeme),
                    ..self.error_at(
                        ParseErrorKind::AtomNotAllowedHere,
                        tok,
                        "it may only appear inside a path expression (use `tt`/`ff` for the logical constants)",
                    )
                }),
            };
        }
        Err(self.unexpected("a formula"))
    }

    fn regex<F: Formula>(&mut self) -> Result<Regex<F>, ParseError> {
        self.regex_expr::<F>(0).map(|(r, _)| r)
    }

    /// Returns the expression and whether it is a compound propositional
    /// letter without enclosing parentheses.
    fn regex_expr<F: Formula>(&mut self, min_level: usize) -> Result<(Regex<F>, bool), ParseError> {
        let (mut lhs, mut exposed) = self.regex_postfix::<F>()?;
        while let Some(op @ (Operator::Concat | Operator::Union)) = self.peek_op() {
            let Some((level, assoc)) = F::table().level_of(op) else {
                break;
            };
            if level < min_level {
                break;
            }
            let tok = self.bump();
            if exposed {
                return Err(self.exposed_letter(tok));
            }
            let next_min = if assoc == Assoc::Right {
                level
            } else {
                level + 1
            };
            let (rhs, rhs_exposed) = self.regex_expr::<F>(next_min)?;
            if rhs_exposed {
                return Err(self.exposed_letter(tok));
            }
            lhs = match op {
                Operator::Concat => Regex::concat(lhs, rhs),
                _ => Regex::union(lhs, rhs),
            };
            exposed = false;
        }
        Ok((lhs, exposed))
    }

    fn exposed_letter(&self, op: &Token) -> ParseError {
        self.error_at(
            ParseErrorKind::UnexpectedToken,
            op,
            "parentheses around the propositional formula next to it (boolean connectives bind looser than path operators)",
        )
    }

    fn regex_postfix<F: Formula>(&mut self) -> Result<(Regex<F>, bool), ParseError> {
        let (mut r, mut exposed) = self.regex_primary::<F>()?;
        while self.peek_kind() == Some(TokenKind::Star) {
            let tok = self.bump();
            if exposed {
                return Err(self.exposed_letter(tok));
            }
            r = Regex::star(r);
            exposed = false;
        }
        if let Some(tok) = self.peek().filter(|t| t.kind == TokenKind::Test) {
            return Err(self.error_at(
                ParseErrorKind::UnexpectedToken,
                tok,
                "a formula before `?` (tests apply to formulae such as `tt?` or `(<a>tt)?`, not to path expressions)",
            ));
        }
        Ok((r, exposed))
    }

    fn regex_primary<F: Formula>(&mut self) -> Result<(Regex<F>, bool), ParseError> {
        let start = self.pos;
        let Some(tok) = self.peek() else {
            return Err(self.unexpected("a path expression"));
        };
        let mut best: Option<ParseError> = None;
        let keep = |e: ParseError, best: &mut Option<ParseError>| {
            if best.as_ref().is_none_or(|b| e.offset > b.offset) {
                *best = Some(e);
            }
        };

        // φ?
        let letter_start = matches!(
            tok.kind,
            TokenKind::Atom | TokenKind::True | TokenKind::False
        );
        if !letter_start && self.starts_operand::<F>() {
            match self.unary::<F>() {
                Ok(f) if self.peek_kind() == Some(TokenKind::Test) => {
                    self.pos += 1;
                    return Ok((Regex::test(f), false));
                }
                Ok(_) => keep(self.unexpected("`?` after the test formula"), &mut best),
                Err(e) => keep(e, &mut best),
            }
            self.pos = start;
        }

        // propositional letter
        if letter_start || matches!(tok.kind, TokenKind::Not | TokenKind::LParen) {
            match self.expr::<Prop>(0) {
                Ok(p) => {
                    let exposed = matches!(p.view(), View::Infix(..)) && !self.parenthesized(start);
                    return Ok((Regex::Prop(p), exposed));
                }
                Err(e) => keep(e, &mut best),
            }
            self.pos = start;
        }

        // ( regex )
        if tok.kind == TokenKind::LParen {
            self.pos += 1;
            let inner = self
                .regex::<F>()
                .and_then(|r| self.expect_closing(tok, TokenKind::RParen, ")").map(|_| r));
            match inner {
                Ok(r) => return Ok((r, false)),
                Err(e) => keep(e, &mut best),
            }
            self.pos = start;
        }

        Err(best.unwrap_or_else(|| self.unexpected("a path expression")))
    }

    /// Whether tokens `start..self.pos` form one parenthesized group.
    fn parenthesized(&self, start: usize) -> bool {
        if self.tokens[start].kind != TokenKind::LParen {
            return false;
        }
        let mut depth = 0usize;
        for (i, tok) in self.tokens[start..self.pos].iter().enumerate() {
            match tok.kind {
                TokenKind::LParen => depth += 1,
                TokenKind::RParen => {
                    depth -= 1;
                    if depth == 0 {
                        return start + i + 1 == self.pos;
                    }
                }
                _ => {}
            }
        }
        false
    }
}

/// Parses a complete formula of the logic `F`.
pub fn parse<F: Logical>(input: &str) -> Result<F, Error> {
    let tokens = tokenize(input, F::LOGIC)?;
    let mut parser = Parser::new(input, &tokens);
    let formula = parser.expr::<F>(0)?;
    if parser.peek().is_some() {
        return Err(parser.unexpected("an operator or end of input").into());
    }
    Ok(formula)
}

pub fn parse_ltlf(input: &str) -> Result<LtlfFormula, Error> {
    parse(input)
}

pub fn parse_ldlf(input: &str) -> Result<LdlfFormula, Error> {
    parse(input)
}

pub fn parse_pltlf(input: &str) -> Result<PltlfFormula, Error> {
    parse(input)
}

pub fn parse_pldlf(input: &str) -> Result<PldlfFormula, Error> {
    parse(input)
}
