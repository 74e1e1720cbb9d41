//! Tokenizer for LTLf, LDLf, PLTLf and PLDLf formulae.
//!
//! The lexer is driven by a [`Logic`] profile: every profile activates its own
//! subset of operator tokens, and longest match is resolved against that
//! subset only. `<<` is one token under PLDLf and two `<` tokens under LDLf;
//! `X[!]` only exists under LTLf.

use std::fmt;
use std::str::FromStr;

use serde::Deserialize;

/// The four logics sharing the common grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Logic {
    Ltlf,
    Ldlf,
    Pltlf,
    Pldlf,
}

impl Logic {
    pub const ALL: [Logic; 4] = [Logic::Ltlf, Logic::Ldlf, Logic::Pltlf, Logic::Pldlf];

    /// Lowercase identifier used on the command line and in corpus files.
    pub fn id(self) -> &'static str {
        match self {
            Logic::Ltlf => "ltlf",
            Logic::Ldlf => "ldlf",
            Logic::Pltlf => "pltlf",
            Logic::Pldlf => "pldlf",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Logic::Ltlf => "LTLf",
            Logic::Ldlf => "LDLf",
            Logic::Pltlf => "PLTLf",
            Logic::Pldlf => "PLDLf",
        }
    }
}

impl fmt::Display for Logic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Logic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Logic::ALL
            .into_iter()
            .find(|l| l.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown logic `{s}` (expected ltlf, ldlf, pltlf or pldlf)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    True,
    False,
    Tt,
    Ff,
    Last,
    End,
    First,
    Start,

    Not,
    And,
    Or,
    Impl,
    Equiv,
    Xor,
    LParen,
    RParen,

    WeakNext,
    StrongNext,
    Until,
    WeakUntil,
    Release,
    StrongRelease,
    Eventually,
    Always,

    Before,
    Since,
    Once,
    Historically,

    LDiam,
    RDiam,
    LBox,
    RBox,
    LBDiam,
    RBDiam,
    LBBox,
    RBBox,

    Test,
    Concat,
    Union,
    Star,

    Atom,
}

impl TokenKind {
    /// Whether the kind can be emitted under `logic`.
    pub fn is_active(self, logic: Logic) -> bool {
        use TokenKind::*;
        match self {
            True | False | Tt | Ff | Not | And | Or | Impl | Equiv | Xor | LParen | RParen
            | Atom => true,
            Last | End | WeakNext | StrongNext | Until | WeakUntil | Release | StrongRelease
            | Eventually | Always => logic == Logic::Ltlf,
            First | Start | Before | Since | Once | Historically => logic == Logic::Pltlf,
            LDiam | RDiam | LBox | RBox => logic == Logic::Ldlf,
            LBDiam | RBDiam | LBBox | RBBox => logic == Logic::Pldlf,
            Test | Concat | Union | Star => matches!(logic, Logic::Ldlf | Logic::Pldlf),
        }
    }

    /// Alphabetic reserved words, i.e. tokens that could be mistaken for atoms.
    pub fn is_keyword(self) -> bool {
        use TokenKind::*;
        matches!(
            self,
            True | False
                | Tt
                | Ff
                | Last
                | End
                | First
                | Start
                | WeakNext
                | Until
                | WeakUntil
                | Release
                | StrongRelease
                | Eventually
                | Always
                | Before
                | Since
                | Once
                | Historically
        )
    }
}

/// Every reserved word, in the order the grammar lists them.
pub const KEYWORDS: [&str; 20] = [
    "true", "false", "tt", "ff", "last", "end", "first", "start", "F", "G", "H", "M", "O", "R",
    "S", "U", "V", "W", "X", "Y",
];

fn keyword_kind(word: &str) -> Option<TokenKind> {
    use TokenKind::*;
    Some(match word {
        "true" => True,
        "false" => False,
        "tt" => Tt,
        "ff" => Ff,
        "last" => Last,
        "end" => End,
        "first" => First,
        "start" => Start,
        "F" => Eventually,
        "G" => Always,
        "H" => Historically,
        "M" => StrongRelease,
        "O" => Once,
        "R" | "V" => Release,
        "S" => Since,
        "U" => Until,
        "W" => WeakUntil,
        "X" => WeakNext,
        "Y" => Before,
        _ => return None,
    })
}

/// A lexical unit. `lexeme` is the verbatim slice of the input at `offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    /// Byte offset of the first character.
    pub offset: usize,
    pub line: usize,
    pub column: usize,
}

impl Token {
    pub fn is_quoted(&self) -> bool {
        self.kind == TokenKind::Atom && self.lexeme.starts_with(['"', '\''])
    }

    /// The proposition name carried by an atom token, without quotes.
    pub fn atom_name(&self) -> Option<&str> {
        if self.kind != TokenKind::Atom {
            return None;
        }
        if self.is_quoted() {
            Some(&self.lexeme[1..self.lexeme.len() - 1])
        } else {
            Some(&self.lexeme)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LexErrorKind {
    IllegalCharacter,
    UnterminatedQuote,
    MalformedStrongNext,
    UnknownOperator,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexError {
    pub kind: LexErrorKind,
    pub line: usize,
    pub column: usize,
    pub offset: usize,
    pub offending: String,
    pub logic: Logic,
}

impl fmt::Display for LexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LexErrorKind::IllegalCharacter => {
                let c = self.offending.chars().next().unwrap_or('\0');
                if c.is_ascii_graphic() {
                    write!(f, "illegal character `{c}`")
                } else {
                    write!(f, "illegal character U+{:04X}", c as u32)
                }
            }
            LexErrorKind::UnterminatedQuote => {
                write!(
                    f,
                    "unterminated quoted atom starting with {}",
                    self.offending
                )
            }
            LexErrorKind::MalformedStrongNext => {
                write!(
                    f,
                    "malformed strong next `X{}`, expected `X[!]`",
                    self.offending
                )
            }
            LexErrorKind::UnknownOperator => {
                if KEYWORDS.contains(&self.offending.as_str()) {
                    write!(
                        f,
                        "reserved keyword `{}` is not available in {}",
                        self.offending, self.logic
                    )
                } else {
                    write!(
                        f,
                        "`{}` is not an operator of {}",
                        self.offending, self.logic
                    )
                }
            }
        }
    }
}

impl std::error::Error for LexError {}

/// Whether `c` belongs to the legal character set (tab, line feed, carriage
/// return, printable ASCII).
pub fn is_legal_char(c: char) -> bool {
    matches!(c, '\t' | '\n' | '\r' | ' '..='~')
}

pub fn is_whitespace(b: u8) -> bool {
    matches!(b, b' ' | b'\t' | b'\n' | b'\r')
}

fn is_name_start(b: u8) -> bool {
    b.is_ascii_lowercase() || b == b'_'
}

fn is_name_char(b: u8) -> bool {
    is_name_start(b) || b.is_ascii_digit()
}

/// Line and column (both 1-based) of byte `offset` in `input`.
pub fn line_column(input: &str, offset: usize) -> (usize, usize) {
    let before = &input[..offset];
    let line = before.matches('\n').count() + 1;
    let line_start = before.rfind('\n').map_or(0, |i| i + 1);
    (line, before[line_start..].chars().count() + 1)
}

struct Lexer<'a> {
    input: &'a str,
    bytes: &'a [u8],
    logic: Logic,
    pos: usize,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn error_at(&self, kind: LexErrorKind, offset: usize, offending: &str) -> LexError {
        // Errors always lie on the current line, and everything between
        // `self.pos` and `offset` is ASCII.
        LexError {
            kind,
            line: self.line,
            column: self.column + (offset - self.pos),
            offset,
            offending: offending.to_string(),
            logic: self.logic,
        }
    }

    fn illegal(&self, offset: usize) -> LexError {
        let c = self.input[offset..].chars().next().unwrap_or('\0');
        let mut err = self.error_at(LexErrorKind::IllegalCharacter, offset, "");
        err.offending = c.to_string();
        err
    }

    fn peek(&self, ahead: usize) -> Option<u8> {
        self.bytes.get(self.pos + ahead).copied()
    }

    fn advance(&mut self, len: usize) {
        for &b in &self.bytes[self.pos..self.pos + len] {
            if b == b'\n' {
                self.line += 1;
                self.column = 1;
            } else {
                self.column += 1;
            }
        }
        self.pos += len;
    }

    fn skip_whitespace(&mut self) {
        while let Some(b) = self.peek(0) {
            if !is_whitespace(b) {
                break;
            }
            self.advance(1);
        }
    }

    fn token(&mut self, kind: TokenKind, len: usize) -> Token {
        let tok = Token {
            kind,
            lexeme: self.input[self.pos..self.pos + len].to_string(),
            offset: self.pos,
            line: self.line,
            column: self.column,
        };
        self.advance(len);
        tok
    }

    /// Emits `kind` if it is active in the profile, otherwise reports the
    /// `len` characters at the cursor as an unknown operator.
    fn operator(&mut self, kind: TokenKind, len: usize) -> Result<Token, LexError> {
        if kind.is_active(self.logic) {
            Ok(self.token(kind, len))
        } else {
            let lexeme = &self.input[self.pos..self.pos + len];
            Err(self.error_at(LexErrorKind::UnknownOperator, self.pos, lexeme))
        }
    }

    fn next_token(&mut self) -> Result<Token, LexError> {
        use TokenKind::*;
        let b = self.bytes[self.pos];
        let next = self.peek(1);
        match b {
            b'(' => Ok(self.token(LParen, 1)),
            b')' => Ok(self.token(RParen, 1)),
            b'!' | b'~' => Ok(self.token(Not, 1)),
            b'^' => Ok(self.token(Xor, 1)),
            b'&' => Ok(self.token(And, if next == Some(b'&') { 2 } else { 1 })),
            b'|' => Ok(self.token(Or, if next == Some(b'|') { 2 } else { 1 })),
            b'-' | b'=' if next == Some(b'>') => Ok(self.token(Impl, 2)),
            b'<' if matches!(next, Some(b'-' | b'=')) && self.peek(2) == Some(b'>') => {
                Ok(self.token(Equiv, 3))
            }
            b'<' => match self.logic {
                Logic::Pldlf if next == Some(b'<') => Ok(self.token(LBDiam, 2)),
                _ => self.operator(LDiam, 1),
            },
            b'>' => match self.logic {
                Logic::Pldlf if next == Some(b'>') => Ok(self.token(RBDiam, 2)),
                _ => self.operator(RDiam, 1),
            },
            b'[' => match self.logic {
                Logic::Pldlf if next == Some(b'[') => Ok(self.token(LBBox, 2)),
                _ => self.operator(LBox, 1),
            },
            b']' => match self.logic {
                Logic::Pldlf if next == Some(b']') => Ok(self.token(RBBox, 2)),
                _ => self.operator(RBox, 1),
            },
            b'?' => self.operator(Test, 1),
            b';' => self.operator(Concat, 1),
            b'+' => self.operator(Union, 1),
            b'*' => self.operator(Star, 1),
            b'"' | b'\'' => self.quoted(b),
            b'X' if self.logic == Logic::Ltlf && next == Some(b'[') => {
                if self.peek(2) == Some(b'!') && self.peek(3) == Some(b']') {
                    Ok(self.token(StrongNext, 4))
                } else {
                    let end = (self.pos + 4).min(self.bytes.len());
                    let tail: String = self.input[self.pos + 1..]
                        .chars()
                        .take(end - self.pos - 1)
                        .take_while(|c| !c.is_whitespace())
                        .collect();
                    Err(self.error_at(LexErrorKind::MalformedStrongNext, self.pos + 1, &tail))
                }
            }
            b'A'..=b'Z' => match keyword_kind(&self.input[self.pos..self.pos + 1]) {
                Some(kind) => self.operator(kind, 1),
                None => Err(self.illegal(self.pos)),
            },
            _ if is_name_start(b) => {
                let len = self.bytes[self.pos..]
                    .iter()
                    .take_while(|&&c| is_name_char(c))
                    .count();
                match keyword_kind(&self.input[self.pos..self.pos + len]) {
                    Some(kind) => self.operator(kind, len),
                    None => Ok(self.token(Atom, len)),
                }
            }
            b'-' | b'=' => {
                let lexeme = &self.input[self.pos..self.pos + 1];
                Err(self.error_at(LexErrorKind::UnknownOperator, self.pos, lexeme))
            }
            _ => Err(self.illegal(self.pos)),
        }
    }

    fn quoted(&mut self, quote: u8) -> Result<Token, LexError> {
        let start = self.pos;
        let mut i = start + 1;
        loop {
            match self.bytes.get(i).copied() {
                Some(b) if b == quote => return Ok(self.token(TokenKind::Atom, i + 1 - start)),
                None | Some(b'\n' | b'\t' | b'\r') => {
                    let opening = &self.input[start..start + 1];
                    return Err(self.error_at(LexErrorKind::UnterminatedQuote, start, opening));
                }
                Some(b) if b.is_ascii_graphic() || b == b' ' => i += 1,
                Some(_) => return Err(self.illegal(i)),
            }
        }
    }
}

/// Splits `input` into tokens under the given profile. Whitespace between
/// tokens is skipped; everything else must belong to exactly one token.
pub fn tokenize(input: &str, logic: Logic) -> Result<Vec<Token>, LexError> {
    let mut lexer = Lexer {
        input,
        bytes: input.as_bytes(),
        logic,
        pos: 0,
        line: 1,
        column: 1,
    };
    let mut tokens = Vec::new();
    loop {
        lexer.skip_whitespace();
        if lexer.pos >= lexer.bytes.len() {
            return Ok(tokens);
        }
        tokens.push(lexer.next_token()?);
    }
}
