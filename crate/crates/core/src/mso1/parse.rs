//! Text syntax for the formula language.
//!
//! ```text
//! formula := iff
//! iff     := implies ("<->" implies)*
//! implies := or ("->" implies)?
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "!" unary | quant | atom
//! quant   := ("exists" | "forall" | "existsSet" | "forallSet") VAR "." formula
//! atom    := "(" formula ")" | "adj" "(" VAR "," VAR ")"
//!          | "in" "(" VAR "," VAR ")" | VAR "=" VAR
//! ```
//!
//! Quantifier bodies extend as far right as possible. Parsed formulas are
//! also validated: every variable use must be bound.

use std::fmt;

use super::{Mso1Error, Mso1Formula};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mso1ParseError {
    Syntax { pos: usize, msg: String },
    Invalid(Mso1Error),
}

impl fmt::Display for Mso1ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mso1ParseError::Syntax { pos, msg } => write!(f, "syntax error at offset {pos}: {msg}"),
            Mso1ParseError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for Mso1ParseError {}

const KEYWORDS: [&str; 6] = ["exists", "forall", "existsSet", "forallSet", "adj", "in"];

pub fn parse_formula(text: &str) -> Result<Mso1Formula, Mso1ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let f = p.formula()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input after formula"));
    }
    f.validate_sentence().map_err(Mso1ParseError::Invalid)?;
    Ok(f)
}

pub fn print_formula(f: &Mso1Formula) -> String {
    match f {
        Mso1Formula::Adj(u, v) => format!("adj({u},{v})"),
        Mso1Formula::In(u, set) => format!("in({u},{set})"),
        Mso1Formula::Eq(u, v) => format!("{u} = {v}"),
        Mso1Formula::Not(a) => format!("!{}", print_formula(a)),
        Mso1Formula::And(a, b) => format!("({} & {})", print_formula(a), print_formula(b)),
        Mso1Formula::Or(a, b) => format!("({} | {})", print_formula(a), print_formula(b)),
        Mso1Formula::Implies(a, b) => format!("({} -> {})", print_formula(a), print_formula(b)),
        Mso1Formula::Iff(a, b) => format!("({} <-> {})", print_formula(a), print_formula(b)),
        Mso1Formula::ExistsVertex(x, a) => format!("(exists {x}. {})", print_formula(a)),
        Mso1Formula::ForallVertex(x, a) => format!("(forall {x}. {})", print_formula(a)),
        Mso1Formula::ExistsSet(x, a) => format!("(existsSet {x}. {})", print_formula(a)),
        Mso1Formula::ForallSet(x, a) => format!("(forallSet {x}. {})", print_formula(a)),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Mso1ParseError {
        Mso1ParseError::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), Mso1ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    /// Peeks an identifier without consuming it.
    fn peek_ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if start >= self.src.len()
            || !(self.src[start].is_ascii_alphabetic() || self.src[start] == b'_')
        {
            return None;
        }
        let mut end = start;
        while end < self.src.len()
            && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
        {
            end += 1;
        }
        Some(String::from_utf8(self.src[start..end].to_vec()).unwrap())
    }

    fn ident(&mut self) -> Result<String, Mso1ParseError> {
        let id = self.peek_ident().ok_or_else(|| self.error("expected an identifier"))?;
        self.pos += id.len();
        Ok(id)
    }

    fn variable(&mut self) -> Result<String, Mso1ParseError> {
        self.skip_ws();
        let at = self.pos;
        let id = self.ident()?;
        if KEYWORDS.contains(&id.as_str()) {
            return Err(Mso1ParseError::Syntax {
                pos: at,
                msg: format!("`{id}` is a keyword, not a variable"),
            });
        }
        Ok(id)
    }

    fn formula(&mut self) -> Result<Mso1Formula, Mso1ParseError> {
        let mut left = self.implies()?;
        while self.peek_op("<->") {
            self.expect("<->")?;
            let right = self.implies()?;
            left = Mso1Formula::iff(left, right);
        }
        Ok(left)
    }

    fn peek_op(&mut self, op: &str) -> bool {
        self.skip_ws();
        // "->" must not shadow "<->"; check the exact operator
        if op == "->" && self.src[self.pos..].starts_with(b"<->") {
            return false;
        }
        self.src[self.pos..].starts_with(op.as_bytes())
    }

    fn implies(&mut self) -> Result<Mso1Formula, Mso1ParseError> {
        let left = self.disjunction()?;
        if self.peek_op("->") {
            self.expect("->")?;
            let right = self.implies()?;
            return Ok(Mso1Formula::implies(left, right));
        }
        Ok(left)
    }

    fn disjunction(&mut self) -> Result<Mso1Formula, Mso1ParseError> {
        let mut left = self.conjunction()?;
        while self.peek_op("|") {
            self.expect("|")?;
            let right = self.conjunction()?;
            left = Mso1Formula::or(left, right);
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<Mso1Formula, Mso1ParseError> {
        let mut left = self.unary()?;
        while self.peek_op("&") {
            self.expect("&")?;
            let right = self.unary()?;
            left = Mso1Formula::and(left, right);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Mso1Formula, Mso1ParseError> {
        if self.eat("!") {
            return Ok(Mso1Formula::not(self.unary()?));
        }
        if let Some(id) = self.peek_ident() {
            let quantifier: Option<fn(String, Mso1Formula) -> Mso1Formula> = match id.as_str() {
                "exists" => Some(Mso1Formula::exists_vertex),
                "forall" => Some(Mso1Formula::forall_vertex),
                "existsSet" => Some(Mso1Formula::exists_set),
                "forallSet" => Some(Mso1Formula::forall_set),
                _ => None,
            };
            if let Some(build) = quantifier {
                self.pos += id.len();
                let var = self.variable()?;
                self.expect(".")?;
                let body = self.formula()?;
                return Ok(build(var, body));
            }
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Mso1Formula, Mso1ParseError> {
        if self.eat("(") {
            let inner = self.formula()?;
            self.expect(")")?;
            return Ok(inner);
        }
        self.skip_ws();
        let at = self.pos;
        let id = self.ident()?;
        match id.as_str() {
            "adj" | "in" => {
                self.expect("(")?;
                let u = self.variable()?;
                self.expect(",")?;
                let v = self.variable()?;
                self.expect(")")?;
                Ok(if id == "adj" {
                    Mso1Formula::adj(u, v)
                } else {
                    Mso1Formula::member(u, v)
                })
            }
            _ if KEYWORDS.contains(&id.as_str()) => Err(Mso1ParseError::Syntax {
                pos: at,
                msg: format!("unexpected keyword `{id}`"),
            }),
            _ => {
                self.expect("=")?;
                let v = self.variable()?;
                Ok(Mso1Formula::eq(id, v))
            }
        }
    }
}
