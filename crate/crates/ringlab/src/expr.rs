//! Ring expressions: the grammar the CLI and corpus files speak.
//!
//! ```text
//! expr  := term ( "x" term )*                      products, left associative
//! term  := "Z" digits
//!        | "GF" "(" digits "," poly ")"
//!        | "Quot" "(" digits "," poly ")"
//!        | "M" digits "(" expr ")"                 full matrices
//!        | "T" digits "(" expr ")"                 upper triangular
//!        | "S" digits "(" expr ")"                 constant diagonal
//!        | "V" digits "(" expr ")"                 constant superdiagonals
//!        | "corner" "(" expr "," digits ")"
//!        | "pullback" "(" expr ")"
//!        | "RAB" "(" expr "," "sub" "=" "[" ints "]" "," "L" "=" digits ")"
//!        | "quot" "(" expr "," "gens" "=" "[" ints "]" ")"
//!        | "file" "(" path ")"
//!        | "(" expr ")"
//! poly  := polyterm ( "+" polyterm )*              e.g. x^2+x+1, 2x, 7
//! ```
//!
//! Printing is canonical and `parse(print(e)) == e`.

use std::fmt;

use ringlab_core::construct::render_poly;

/// Abstract syntax of a ring expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Zmod(usize),
    Gf { p: usize, poly: Vec<usize> },
    Quot { p: usize, poly: Vec<usize> },
    Matrix { n: usize, inner: Box<Expr> },
    Upper { n: usize, inner: Box<Expr> },
    ConstDiag { n: usize, inner: Box<Expr> },
    ConstSuper { n: usize, inner: Box<Expr> },
    Product(Box<Expr>, Box<Expr>),
    Corner { inner: Box<Expr>, e: usize },
    Pullback(Box<Expr>),
    Rab {
        inner: Box<Expr>,
        sub: Vec<usize>,
        len: usize,
    },
    QuotIdeal {
        inner: Box<Expr>,
        gens: Vec<usize>,
    },
    File(String),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Zmod(n) => write!(f, "Z{n}"),
            Expr::Gf { p, poly } => write!(f, "GF({p},{})", render_poly(poly)),
            Expr::Quot { p, poly } => write!(f, "Quot({p},{})", render_poly(poly)),
            Expr::Matrix { n, inner } => write!(f, "M{n}({inner})"),
            Expr::Upper { n, inner } => write!(f, "T{n}({inner})"),
            Expr::ConstDiag { n, inner } => write!(f, "S{n}({inner})"),
            Expr::ConstSuper { n, inner } => write!(f, "V{n}({inner})"),
            Expr::Product(a, b) => {
                write!(f, "{a} x ")?;
                if matches!(**b, Expr::Product(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            Expr::Corner { inner, e } => write!(f, "corner({inner},{e})"),
            Expr::Pullback(inner) => write!(f, "pullback({inner})"),
            Expr::Rab { inner, sub, len } => {
                let subs: Vec<String> = sub.iter().map(|s| s.to_string()).collect();
                write!(f, "RAB({inner},sub=[{}],L={len})", subs.join(","))
            }
            Expr::QuotIdeal { inner, gens } => {
                let g: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
                write!(f, "quot({inner},gens=[{}])", g.join(","))
            }
            Expr::File(path) => write!(f, "file({path})"),
        }
    }
}

/// A diagnostic with a byte offset into the source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: expected {}", self.offset, self.expected)
    }
}

impl std::error::Error for ParseError {}

/// Parses one ring expression; the whole input must be consumed.
pub fn parse_expression(text: &str) -> Result<Expr, ParseError> {
    let mut cursor = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let expr = cursor.product()?;
    cursor.skip_ws();
    if cursor.pos != cursor.bytes.len() {
        return Err(cursor.err("end of input"));
    }
    Ok(expr)
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, expected: &str) -> ParseError {
        ParseError {
            offset: self.pos,
            expected: expected.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8, what: &str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(what))
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .peek()
            .map(|b| b.is_ascii_digit())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are utf8")
            .parse::<usize>()
            .map_err(|_| ParseError {
                offset: start,
                expected: "a smaller number".to_string(),
            })
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if !self
            .peek()
            .map(|b| b.is_ascii_alphabetic() || b == b'_')
            .unwrap_or(false)
        {
            return None;
        }
        while self
            .peek()
            .map(|b| b.is_ascii_alphanumeric() || b == b'_')
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        Some(String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned())
    }

    fn int_list(&mut self) -> Result<Vec<usize>, ParseError> {
        self.eat(b'[', "'['")?;
        let mut out = Vec::new();
        self.skip_ws();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(self.number()?);
            self.skip_ws();
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                }
                Some(b']') => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.err("',' or ']'")),
            }
        }
    }

    fn keyword_arg(&mut self, keyword: &str) -> Result<(), ParseError> {
        self.skip_ws();
        let at = self.pos;
        match self.ident() {
            Some(word) if word == keyword => {}
            _ => {
                return Err(ParseError {
                    offset: at,
                    expected: format!("'{keyword}='"),
                })
            }
        }
        self.eat(b'=', "'='")
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            let save = self.pos;
            match self.ident() {
                Some(word) if word == "x" => {
                    let rhs = self.term()?;
                    acc = Expr::Product(Box::new(acc), Box::new(rhs));
                }
                _ => {
                    self.pos = save;
                    return Ok(acc);
                }
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        self.skip_ws();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let inner = self.product()?;
            self.eat(b')', "')'")?;
            return Ok(inner);
        }
        let at = self.pos;
        let word = match self.ident() {
            Some(w) => w,
            None => return Err(self.err("an expression")),
        };
        // Single-letter family constructors carry their dimension in the
        // identifier: Z12, M2, T3, S4, V2.
        if let Some(first) = word.chars().next() {
            if matches!(first, 'Z' | 'M' | 'T' | 'S' | 'V') && word.len() > 1 {
                let digits = &word[1..];
                if digits.chars().all(|c| c.is_ascii_digit()) {
                    let n: usize = digits.parse().map_err(|_| ParseError {
                        offset: at,
                        expected: "a smaller number".to_string(),
                    })?;
                    if first == 'Z' {
                        return Ok(Expr::Zmod(n));
                    }
                    self.eat(b'(', "'('")?;
                    let inner = Box::new(self.product()?);
                    self.eat(b')', "')'")?;
                    return Ok(match first {
                        'M' => Expr::Matrix { n, inner },
                        'T' => Expr::Upper { n, inner },
                        'S' => Expr::ConstDiag { n, inner },
                        _ => Expr::ConstSuper { n, inner },
                    });
                }
            }
        }
        match word.as_str() {
            "GF" | "Quot" => {
                self.eat(b'(', "'('")?;
                let p = self.number()?;
                self.eat(b',', "','")?;
                let poly = self.poly()?;
                self.eat(b')', "')'")?;
                if word == "GF" {
                    Ok(Expr::Gf { p, poly })
                } else {
                    Ok(Expr::Quot { p, poly })
                }
            }
            "corner" => {
                self.eat(b'(', "'('")?;
                let inner = Box::new(self.product()?);
                self.eat(b',', "','")?;
                let e = self.number()?;
                self.eat(b')', "')'")?;
                Ok(Expr::Corner { inner, e })
            }
            "pullback" => {
                self.eat(b'(', "'('")?;
                let inner = Box::new(self.product()?);
                self.eat(b')', "')'")?;
                Ok(Expr::Pullback(inner))
            }
            "RAB" => {
                self.eat(b'(', "'('")?;
                let inner = Box::new(self.product()?);
                self.eat(b',', "','")?;
                self.keyword_arg("sub")?;
                let sub = self.int_list()?;
                self.eat(b',', "','")?;
                self.keyword_arg("L")?;
                let len = self.number()?;
                self.eat(b')', "')'")?;
                Ok(Expr::Rab { inner, sub, len })
            }
            "quot" => {
                self.eat(b'(', "'('")?;
                let inner = Box::new(self.product()?);
                self.eat(b',', "','")?;
                self.keyword_arg("gens")?;
                let gens = self.int_list()?;
                self.eat(b')', "')'")?;
                Ok(Expr::QuotIdeal { inner, gens })
            }
            "file" => {
                self.eat(b'(', "'('")?;
                let start = self.pos;
                while self.peek().map(|b| b != b')').unwrap_or(false) {
                    self.pos += 1;
                }
                if self.peek() != Some(b')') {
                    return Err(self.err("')'"));
                }
                let path = String::from_utf8_lossy(&self.bytes[start..self.pos])
                    .trim()
                    .to_string();
                self.pos += 1;
                if path.is_empty() {
                    return Err(ParseError {
                        offset: start,
                        expected: "a file path".to_string(),
                    });
                }
                Ok(Expr::File(path))
            }
            _ => Err(ParseError {
                offset: at,
                expected: format!("a known constructor (got '{word}')"),
            }),
        }
    }

    /// Polynomials in `x` over nonnegative integer coefficients, e.g.
    /// `x^3`, `x^2+x+1`, `2x+1`, `7`.
    fn poly(&mut self) -> Result<Vec<usize>, ParseError> {
        let mut coeffs: Vec<usize> = Vec::new();
        loop {
            self.skip_ws();
            let mut coeff: Option<usize> = None;
            if self.peek().map(|b| b.is_ascii_digit()).unwrap_or(false) {
                coeff = Some(self.number()?);
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                }
            }
            let mut degree = 0usize;
            self.skip_ws();
            if self.peek() == Some(b'x') {
                self.pos += 1;
                degree = 1;
                self.skip_ws();
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    degree = self.number()?;
                }
            } else if coeff.is_none() {
                return Err(self.err("a polynomial term"));
            }
            let c = coeff.unwrap_or(1);
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, 0);
            }
            coeffs[degree] += c;
            self.skip_ws();
            if self.peek() == Some(b'+') {
                self.pos += 1;
            } else {
                break;
            }
        }
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        Ok(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(text: &str) -> Expr {
        let ast = parse_expression(text).unwrap();
        let printed = ast.to_string();
        assert_eq!(parse_expression(&printed).unwrap(), ast);
        ast
    }

    #[test]
    fn basic_constructors() {
        assert_eq!(roundtrip("Z12"), Expr::Zmod(12));
        assert_eq!(
            roundtrip("T3(Z2)"),
            Expr::Upper {
                n: 3,
                inner: Box::new(Expr::Zmod(2))
            }
        );
        assert_eq!(
            roundtrip("pullback(Z4)"),
            Expr::Pullback(Box::new(Expr::Zmod(4)))
        );
        assert_eq!(
            roundtrip("GF(2,x^2+x+1)"),
            Expr::Gf {
                p: 2,
                poly: vec![1, 1, 1]
            }
        );
        assert_eq!(
            roundtrip("Quot(2,x^3)"),
            Expr::Quot {
                p: 2,
                poly: vec![0, 0, 0, 1]
            }
        );
        assert_eq!(
            roundtrip("corner(Z12,4)"),
            Expr::Corner {
                inner: Box::new(Expr::Zmod(12)),
                e: 4
            }
        );
        assert_eq!(
            roundtrip("RAB(T2(Z2),sub=[0,2,5,7],L=1)"),
            Expr::Rab {
                inner: Box::new(Expr::Upper {
                    n: 2,
                    inner: Box::new(Expr::Zmod(2))
                }),
                sub: vec![0, 2, 5, 7],
                len: 1
            }
        );
        assert_eq!(
            roundtrip("quot(Z12,gens=[6])"),
            Expr::QuotIdeal {
                inner: Box::new(Expr::Zmod(12)),
                gens: vec![6]
            }
        );
        assert_eq!(roundtrip("file(rings/t2.ring)"), Expr::File("rings/t2.ring".into()));
    }

    #[test]
    fn products_are_left_associative() {
        let ast = roundtrip("Z4 x Z2");
        assert_eq!(
            ast,
            Expr::Product(Box::new(Expr::Zmod(4)), Box::new(Expr::Zmod(2)))
        );
        let triple = roundtrip("Z2 x Z2 x Z3");
        assert_eq!(
            triple,
            Expr::Product(
                Box::new(Expr::Product(
                    Box::new(Expr::Zmod(2)),
                    Box::new(Expr::Zmod(2))
                )),
                Box::new(Expr::Zmod(3))
            )
        );
        // Parenthesized right association survives printing.
        let right = roundtrip("Z2 x (Z2 x Z3)");
        assert_eq!(right.to_string(), "Z2 x (Z2 x Z3)");
        assert_ne!(right, triple);
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(
            parse_expression("  T3( Z2 )  ").unwrap(),
            parse_expression("T3(Z2)").unwrap()
        );
        assert_eq!(
            parse_expression("RAB( T2(Z2) , sub = [ 0, 2, 5, 7 ] , L = 1 )").unwrap(),
            parse_expression("RAB(T2(Z2),sub=[0,2,5,7],L=1)").unwrap()
        );
    }

    #[test]
    fn error_offsets() {
        let err = parse_expression("T3(").unwrap_err();
        assert_eq!(err.offset, 3);
        let err = parse_expression("frob(Z2)").unwrap_err();
        assert_eq!(err.offset, 0);
        assert!(err.expected.contains("frob"));
        let err = parse_expression("Z4 x").unwrap_err();
        assert_eq!(err.offset, 4);
        let err = parse_expression("Z4 Z2").unwrap_err();
        assert_eq!(err.offset, 3);
        assert!(parse_expression("").is_err());
        assert!(parse_expression("Z4xZ2").is_err());
    }

    #[test]
    fn poly_forms() {
        assert_eq!(
            parse_expression("Quot(3,2x^2+x+1)").unwrap(),
            Expr::Quot {
                p: 3,
                poly: vec![1, 1, 2]
            }
        );
        assert_eq!(
            parse_expression("Quot(3,2*x^2+1)").unwrap(),
            Expr::Quot {
                p: 3,
                poly: vec![1, 0, 2]
            }
        );
        assert_eq!(
            parse_expression("Quot(2,x)").unwrap(),
            Expr::Quot {
                p: 2,
                poly: vec![0, 1]
            }
        );
    }
}
