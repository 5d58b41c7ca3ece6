//! Text form of expression trees:
//! `expr := intro(L,NAME) | union(expr,expr) | rho(L,L,expr) | join(L,L,expr)`
//! with positive integer labels and identifier vertex names.

use std::fmt;

use super::{CwExpression, Label};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CwParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for CwParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for CwParseError {}

pub fn parse_expression(text: &str) -> Result<CwExpression, CwParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input after expression"));
    }
    Ok(e)
}

pub fn print_expression(e: &CwExpression) -> String {
    match e {
        CwExpression::Intro { label, name } => format!("intro({label},{name})"),
        CwExpression::Union(l, r) => {
            format!("union({},{})", print_expression(l), print_expression(r))
        }
        CwExpression::Relabel { from, to, child } => {
            format!("rho({from},{to},{})", print_expression(child))
        }
        CwExpression::Join { a, b, child } => {
            format!("join({a},{b},{})", print_expression(child))
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> CwParseError {
        CwParseError { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), CwParseError> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn keyword(&mut self) -> Result<String, CwParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a keyword"));
        }
        Ok(String::from_utf8(self.src[start..self.pos].to_vec()).unwrap())
    }

    fn name(&mut self) -> Result<String, CwParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.src.len()
            || !(self.src[self.pos].is_ascii_alphabetic() || self.src[self.pos] == b'_')
        {
            return Err(self.error("expected a vertex name"));
        }
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        Ok(String::from_utf8(self.src[start..self.pos].to_vec()).unwrap())
    }

    fn label(&mut self) -> Result<Label, CwParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a label"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let value: Label =
            text.parse().map_err(|_| CwParseError { pos: start, msg: "label too large".into() })?;
        if value == 0 {
            return Err(CwParseError { pos: start, msg: "labels are positive".into() });
        }
        Ok(value)
    }

    fn expr(&mut self) -> Result<CwExpression, CwParseError> {
        self.skip_ws();
        let at = self.pos;
        let head = self.keyword()?;
        self.expect(b'(')?;
        let node = match head.as_str() {
            "intro" => {
                let label = self.label()?;
                self.expect(b',')?;
                let name = self.name()?;
                CwExpression::intro(label, name)
            }
            "union" => {
                let left = self.expr()?;
                self.expect(b',')?;
                let right = self.expr()?;
                CwExpression::union(left, right)
            }
            "rho" => {
                let from = self.label()?;
                self.expect(b',')?;
                let to = self.label()?;
                self.expect(b',')?;
                CwExpression::relabel(from, to, self.expr()?)
            }
            "join" => {
                let a = self.label()?;
                self.expect(b',')?;
                let b = self.label()?;
                if a == b {
                    return Err(CwParseError {
                        pos: at,
                        msg: format!("join requires distinct labels, got {a} and {b}"),
                    });
                }
                self.expect(b',')?;
                CwExpression::join(a, b, self.expr()?)
            }
            other => {
                return Err(CwParseError {
                    pos: at,
                    msg: format!("expected intro, union, rho, or join, got `{other}`"),
                })
            }
        };
        self.expect(b')')?;
        Ok(node)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_p3_expression() {
        let e = parse_expression("join(1,2,union(intro(1,b),union(intro(2,a),intro(2,c))))")
            .unwrap();
        let expected = CwExpression::join(
            1,
            2,
            CwExpression::union(
                CwExpression::intro(1, "b"),
                CwExpression::union(CwExpression::intro(2, "a"), CwExpression::intro(2, "c")),
            ),
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn parses_relabel_over_leaf() {
        let e = parse_expression("rho(1,2,intro(1,a))").unwrap();
        assert_eq!(e, CwExpression::relabel(1, 2, CwExpression::intro(1, "a")));
    }

    #[test]
    fn rejects_join_with_equal_labels() {
        let err = parse_expression("join(1,1,intro(1,a))").unwrap_err();
        assert!(err.msg.contains("distinct"));
    }

    #[test]
    fn rejects_zero_labels_and_garbage() {
        assert!(parse_expression("intro(0,a)").is_err());
        assert!(parse_expression("intro(1,a) extra").is_err());
        assert!(parse_expression("frob(1,a)").is_err());
        assert!(parse_expression("union(intro(1,a))").is_err());
        assert!(parse_expression("").is_err());
    }

    #[test]
    fn whitespace_is_insignificant() {
        let e = parse_expression(" join( 1 , 2 ,\n union( intro(1, b), intro(2, a) ) ) ").unwrap();
        assert_eq!(e.width(), 2);
    }

    #[test]
    fn print_parse_round_trip() {
        let texts = [
            "intro(1,a)",
            "rho(1,2,intro(1,a))",
            "join(1,2,union(intro(1,b),union(intro(2,a),intro(2,c))))",
        ];
        for t in texts {
            let e = parse_expression(t).unwrap();
            assert_eq!(print_expression(&e), t);
            assert_eq!(parse_expression(&print_expression(&e)).unwrap(), e);
        }
    }
}
