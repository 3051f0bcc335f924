//! Recursive-descent parser for propositional formulas.
//!
//! Precedence, tightest first: `!`/`¬`, `&`/`∧`, `^`/`⊻`, `|`/`∨`. Binary
//! operators associate to the left. Offsets in errors are byte offsets.

use std::collections::BTreeSet;
use std::fmt;

use super::{Formula, MAX_DEPTH};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: BTreeSet<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: ", self.offset)?;
        if self.expected.is_empty() {
            write!(f, "{}", self.found)
        } else {
            let expected: Vec<&str> = self.expected.iter().copied().collect();
            write!(
                f,
                "expected one of [{}], found {}",
                expected.join(", "),
                self.found
            )
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Atom(String),
    Not,
    And,
    Xor,
    Or,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Atom(name) => format!("atom `{name}`"),
            Tok::Not => "`!`".into(),
            Tok::And => "`&`".into(),
            Tok::Xor => "`^`".into(),
            Tok::Or => "`|`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

const OPERAND: [&str; 3] = ["!", "(", "atom"];
const BINARY: [&str; 3] = ["&", "^", "|"];

fn error(offset: usize, expected: &[&'static str], found: String) -> ParseError {
    ParseError {
        offset,
        expected: expected.iter().copied().collect(),
        found,
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, ch)) = chars.peek() {
        let tok = match ch {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '!' | '¬' => Tok::Not,
            '&' | '∧' => Tok::And,
            '^' | '⊻' => Tok::Xor,
            '|' | '∨' => Tok::Or,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_alphabetic() => {
                let mut end = i;
                while let Some(&(j, c)) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        end = j + c.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push((Tok::Atom(text[i..end].to_string()), i));
                continue;
            }
            other => {
                let mut expected: Vec<&'static str> = OPERAND.to_vec();
                expected.extend(BINARY);
                expected.push(")");
                return Err(error(i, &expected, format!("character `{other}`")));
            }
        };
        chars.next();
        tokens.push((tok, i));
    }
    tokens.push((Tok::End, text.len()));
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &(Tok, usize) {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn too_deep(offset: usize) -> ParseError {
        error(offset, &[], format!("formula nesting exceeds {MAX_DEPTH}"))
    }

    fn binary_level(
        &mut self,
        nesting: usize,
        op: Tok,
        make: fn(Formula, Formula) -> Formula,
        next: fn(&mut Parser, usize) -> Result<Formula, ParseError>,
    ) -> Result<Formula, ParseError> {
        let mut lhs = next(self, nesting)?;
        while self.peek().0 == op {
            let (_, at) = self.bump();
            let rhs = next(self, nesting)?;
            lhs = make(lhs, rhs);
            if lhs.depth() > MAX_DEPTH {
                return Err(Parser::too_deep(at));
            }
        }
        Ok(lhs)
    }

    fn or_expr(&mut self, nesting: usize) -> Result<Formula, ParseError> {
        self.binary_level(nesting, Tok::Or, Formula::or, Parser::xor_expr)
    }

    fn xor_expr(&mut self, nesting: usize) -> Result<Formula, ParseError> {
        self.binary_level(nesting, Tok::Xor, Formula::xor, Parser::and_expr)
    }

    fn and_expr(&mut self, nesting: usize) -> Result<Formula, ParseError> {
        self.binary_level(nesting, Tok::And, Formula::and, Parser::unary)
    }

    fn unary(&mut self, nesting: usize) -> Result<Formula, ParseError> {
        if nesting > MAX_DEPTH {
            return Err(Parser::too_deep(self.peek().1));
        }
        let (tok, at) = self.bump();
        match tok {
            Tok::Not => {
                let inner = self.unary(nesting + 1)?;
                let f = Formula::not(inner);
                if f.depth() > MAX_DEPTH {
                    return Err(Parser::too_deep(at));
                }
                Ok(f)
            }
            Tok::Atom(name) => Ok(Formula::Atom(name)),
            Tok::LParen => {
                let inner = self.or_expr(nesting + 1)?;
                let (close, at) = self.bump();
                if close != Tok::RParen {
                    let mut expected: Vec<&'static str> = BINARY.to_vec();
                    expected.push(")");
                    return Err(error(at, &expected, close.describe()));
                }
                Ok(inner)
            }
            other => Err(error(at, &OPERAND, other.describe())),
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser {
        tokens: lex(text)?,
        pos: 0,
    };
    let f = parser.or_expr(0)?;
    let (tok, at) = parser.bump();
    if tok != Tok::End {
        let mut expected: Vec<&'static str> = BINARY.to_vec();
        expected.push("end of input");
        return Err(error(at, &expected, tok.describe()));
    }
    Ok(f)
}
