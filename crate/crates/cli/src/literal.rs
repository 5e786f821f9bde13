//! Parser for element literals such as `- (2,1,3) - 2(2,3,1) + (1,2,3)`.
//!
//! The grammar is kind-agnostic: a basis is any nested tuple of unsigned
//! integers. Checking the shape against a kind happens in [`crate::element`].
//!
//! ```text
//! element := "0" | ["-"] term (("+" | "-") term)*
//! term    := [unsigned] tuple
//! tuple   := "(" [node ("," node)* [","]] ")"
//! node    := unsigned | tuple
//! ```

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Int(u64),
    Tuple(Vec<Node>),
}

impl Node {
    pub fn as_ints(&self) -> Option<Vec<u64>> {
        match self {
            Node::Tuple(items) => items
                .iter()
                .map(|n| match n {
                    Node::Int(v) => Some(*v),
                    Node::Tuple(_) => None,
                })
                .collect(),
            Node::Int(_) => None,
        }
    }

    pub fn as_int_tuples(&self) -> Option<Vec<Vec<u64>>> {
        match self {
            Node::Tuple(items) => items.iter().map(Node::as_ints).collect(),
            Node::Int(_) => None,
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Int(v) => write!(f, "{v}"),
            Node::Tuple(items) => {
                f.write_str("(")?;
                for (k, n) in items.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{n}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub column: usize,
    pub message: String,
    pub source: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "column {}: {}", self.column + 1, self.message)?;
        writeln!(f, "  {}", self.source)?;
        write!(f, "  {}^", " ".repeat(self.source[..self.column].chars().count()))
    }
}

impl std::error::Error for SyntaxError {}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> SyntaxError {
        SyntaxError { column: self.pos, message: message.into(), source: self.src.to_string() }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`, found {}", self.describe())))
        }
    }

    fn describe(&self) -> String {
        match self.peek() {
            Some(c) => format!("`{c}`"),
            None => "end of input".into(),
        }
    }

    fn number(&mut self) -> Result<Option<u64>, SyntaxError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        self.src[start..self.pos].parse().map(Some).map_err(|_| {
            let mut e = self.error("integer too large");
            e.column = start;
            e
        })
    }

    fn node(&mut self) -> Result<Node, SyntaxError> {
        if let Some(v) = self.number()? {
            return Ok(Node::Int(v));
        }
        self.tuple()
    }

    fn tuple(&mut self) -> Result<Node, SyntaxError> {
        self.expect('(')?;
        let mut items = Vec::new();
        if self.eat(')') {
            return Ok(Node::Tuple(items));
        }
        loop {
            items.push(self.node()?);
            if self.eat(')') {
                return Ok(Node::Tuple(items));
            }
            self.expect(',')?;
            if self.eat(')') {
                return Ok(Node::Tuple(items));
            }
        }
    }

    fn term(&mut self, sign: i64) -> Result<(Node, i64), SyntaxError> {
        let coefficient = match self.number()? {
            Some(v) => i64::try_from(v).map_err(|_| self.error("coefficient too large"))?,
            None => 1,
        };
        self.skip_ws();
        if self.peek() != Some('(') {
            return Err(self.error(format!("expected a basis tuple, found {}", self.describe())));
        }
        Ok((self.tuple()?, sign * coefficient))
    }
}

/// Parses a literal into `(basis, coefficient)` pairs in source order.
pub fn parse(src: &str) -> Result<Vec<(Node, i64)>, SyntaxError> {
    let mut p = Parser { src, pos: 0 };
    p.skip_ws();
    if src.trim() == "0" {
        return Ok(Vec::new());
    }
    if p.peek().is_none() {
        return Err(p.error("empty element literal"));
    }
    let mut terms = Vec::new();
    let sign = if p.eat('-') { -1 } else { 1 };
    terms.push(p.term(sign)?);
    loop {
        p.skip_ws();
        let sign = match p.peek() {
            None => return Ok(terms),
            Some('+') => 1,
            Some('-') => -1,
            Some(_) => return Err(p.error(format!("expected `+` or `-`, found {}", p.describe()))),
        };
        p.pos += 1;
        terms.push(p.term(sign)?);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[u64]) -> Node {
        Node::Tuple(v.iter().map(|&x| Node::Int(x)).collect())
    }

    #[test]
    fn printed_output_reparses() {
        let terms = parse("- (2,1,3) - 2(2,3,1) + (1,2,3)").unwrap();
        assert_eq!(terms, vec![(ints(&[2, 1, 3]), -1), (ints(&[2, 3, 1]), -2), (ints(&[1, 2, 3]), 1)]);
    }

    #[test]
    fn nested_and_trailing_commas() {
        let terms = parse("((1,2),) + 3((),)").unwrap();
        assert_eq!(terms[0].0, Node::Tuple(vec![ints(&[1, 2])]));
        assert_eq!(terms[1], (Node::Tuple(vec![Node::Tuple(vec![])]), 3));
        assert_eq!(terms[0].0.to_string(), "((1,2))");
    }

    #[test]
    fn zero_and_whitespace() {
        assert!(parse(" 0 ").unwrap().is_empty());
        assert_eq!(parse(" ( 1 , 2 ) ").unwrap(), vec![(ints(&[1, 2]), 1)]);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("(1,2").unwrap_err();
        assert_eq!(e.column, 4);
        let e = parse("(1,2) * (2,1)").unwrap_err();
        assert_eq!(e.column, 6);
        assert!(e.to_string().contains('^'));
        assert!(parse("").is_err());
        assert!(parse("2").is_err());
        assert!(parse("(1,,2)").is_err());
    }
}
