//! Text rendering and parsing of interval classes, and a small expression
//! evaluator over them.
//!
//! The literal grammar mirrors the canonical forms: `[a,b]` is a proper
//! class, `dual[a,b]` its additive inverse (the improper class), a bare
//! number is a point, and `(p,q)` gives raw coordinates directly.
//! Expressions combine literals with `+`, `-` (the honest group
//! subtraction), `*` (the multiplicative product on classes, *not* the
//! classical interval product) and parentheses; `*` binds tighter than
//! the additive operators and everything associates to the left.

use crate::embed::bullet;
use crate::gelement::GElement;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TextError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("malformed interval [{lo},{hi}]: left endpoint exceeds the right")]
    MalformedInterval { lo: f64, hi: f64 },
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, TextError> {
    Err(TextError::Parse {
        pos,
        msg: msg.into(),
    })
}

/// Render a class in the literal grammar, endpoints formatted to 12
/// significant digits.
pub fn render_gelement(x: &GElement) -> String {
    x.to_string()
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Tok {
    Num(f64),
    Plus,
    Minus,
    Star,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Dual,
}

fn lex(s: &str) -> Result<Vec<(Tok, usize)>, TextError> {
    let bytes = s.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            '[' => {
                toks.push((Tok::LBracket, i));
                i += 1;
            }
            ']' => {
                toks.push((Tok::RBracket, i));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            ',' => {
                toks.push((Tok::Comma, i));
                i += 1;
            }
            'd' if s[i..].starts_with("dual") => {
                toks.push((Tok::Dual, i));
                i += 4;
            }
            _ if c.is_ascii_digit() || c == '.' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    i += 1;
                    if i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                match s[start..i].parse::<f64>() {
                    Ok(v) => toks.push((Tok::Num(v), start)),
                    Err(_) => return err(start, format!("invalid number {:?}", &s[start..i])),
                }
            }
            _ => return err(i, format!("unexpected character {c:?}")),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(s: &str) -> Result<Parser, TextError> {
        Ok(Parser {
            toks: lex(s)?,
            pos: 0,
            end: s.len(),
        })
    }

    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|&(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(_, p)| p)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), TextError> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            err(self.here(), format!("expected {what}"))
        }
    }

    /// A number literal with an optional leading sign.
    fn signed_number(&mut self) -> Result<f64, TextError> {
        let mut sign = 1.0;
        if self.peek() == Some(Tok::Minus) {
            sign = -1.0;
            self.pos += 1;
        } else if self.peek() == Some(Tok::Plus) {
            self.pos += 1;
        }
        match self.peek() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(sign * v)
            }
            _ => err(self.here(), "expected a number"),
        }
    }

    /// `[a,b]`, with the opening bracket already consumed.
    fn bracket_body(&mut self) -> Result<(f64, f64), TextError> {
        let a = self.signed_number()?;
        self.expect(Tok::Comma, "','")?;
        let b = self.signed_number()?;
        self.expect(Tok::RBracket, "']'")?;
        if a > b {
            return Err(TextError::MalformedInterval { lo: a, hi: b });
        }
        Ok((a, b))
    }

    fn expr(&mut self) -> Result<GElement, TextError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<GElement, TextError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(Tok::Star) {
            self.pos += 1;
            acc = bullet(&acc, &self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<GElement, TextError> {
        if self.peek() == Some(Tok::Minus) {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<GElement, TextError> {
        match self.peek() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(GElement::point(v))
            }
            Some(Tok::LBracket) => {
                self.pos += 1;
                let (a, b) = self.bracket_body()?;
                Ok(GElement::new(a, b))
            }
            Some(Tok::Dual) => {
                self.pos += 1;
                self.expect(Tok::LBracket, "'[' after dual")?;
                let (a, b) = self.bracket_body()?;
                Ok(GElement::new(-a, -b))
            }
            Some(Tok::LParen) => {
                // Either raw coordinates `(p,q)` or a parenthesized
                // expression; try the coordinate form first and rewind.
                let save = self.pos;
                self.pos += 1;
                if let Ok(p) = self.signed_number() {
                    if self.peek() == Some(Tok::Comma) {
                        self.pos += 1;
                        let q = self.signed_number()?;
                        self.expect(Tok::RParen, "')'")?;
                        return Ok(GElement::new(p, q));
                    }
                }
                self.pos = save + 1;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => err(self.here(), "expected a literal or '('"),
        }
    }

    fn finish(&self) -> Result<(), TextError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            err(self.here(), "trailing input")
        }
    }
}

/// Parse a single class literal (no operators).
pub fn parse_gelement(s: &str) -> Result<GElement, TextError> {
    let mut p = Parser::new(s)?;
    let x = p.factor()?;
    p.finish()?;
    Ok(x)
}

/// Evaluate an expression over class literals with `+`, `-`, `*` and
/// parentheses; `*` is the multiplicative class product.
pub fn eval_expr(s: &str) -> Result<GElement, TextError> {
    let mut p = Parser::new(s)?;
    let x = p.expr()?;
    p.finish()?;
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(p: f64, q: f64) -> GElement {
        GElement::new(p, q)
    }

    #[test]
    fn literal_grammar() {
        assert_eq!(parse_gelement("[1,3]").unwrap(), g(1.0, 3.0));
        assert_eq!(parse_gelement("dual[1,6]").unwrap(), g(-1.0, -6.0));
        assert_eq!(parse_gelement("2.5").unwrap(), GElement::point(2.5));
        assert_eq!(parse_gelement("-2.5").unwrap(), GElement::point(-2.5));
        assert_eq!(parse_gelement("(1,-2)").unwrap(), g(1.0, -2.0));
        assert_eq!(parse_gelement("[-1.5e-2, 3]").unwrap(), g(-0.015, 3.0));
    }

    #[test]
    fn malformed_intervals_are_rejected() {
        assert_eq!(
            parse_gelement("[3,1]").unwrap_err(),
            TextError::MalformedInterval { lo: 3.0, hi: 1.0 }
        );
        assert_eq!(
            parse_gelement("dual[6,1]").unwrap_err(),
            TextError::MalformedInterval { lo: 6.0, hi: 1.0 }
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_gelement("[1,]").unwrap_err() {
            TextError::Parse { pos, .. } => assert_eq!(pos, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        match eval_expr("[1,2] ! [3,4]").unwrap_err() {
            TextError::Parse { pos, .. } => assert_eq!(pos, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
        match eval_expr("[1,2] + ").unwrap_err() {
            TextError::Parse { pos, .. } => assert_eq!(pos, 8),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn addition_of_a_proper_and_an_improper_class() {
        // [2,4] plus the inverse of [1,6] lands in the improper cone.
        let x = eval_expr("[2,4] + dual[1,6]").unwrap();
        assert_eq!(x, g(1.0, -2.0));
        assert_eq!(render_gelement(&x), "dual[-1,2]");
    }

    #[test]
    fn star_is_the_class_product() {
        assert_eq!(eval_expr("[1,2] * [3,4]").unwrap(), g(3.0, 8.0));
        // 2x \ x = x: scalar factors act through the product of classes.
        assert_eq!(eval_expr("2 * [1,3] - [1,3]").unwrap(), g(1.0, 3.0));
    }

    #[test]
    fn star_binds_tighter_than_plus_and_minus() {
        assert_eq!(
            eval_expr("[1,2] + [1,1] * [3,4]").unwrap(),
            g(1.0, 2.0).add(&g(3.0, 4.0))
        );
        assert_eq!(
            eval_expr("([1,2] + 1) * [3,4]").unwrap(),
            bullet(&g(2.0, 3.0), &g(3.0, 4.0))
        );
        // Left association of subtraction.
        assert_eq!(eval_expr("5 - 2 - 1").unwrap(), GElement::point(2.0));
    }

    #[test]
    fn unary_minus_negates_a_class() {
        assert_eq!(eval_expr("-[1,2]").unwrap(), g(-1.0, -2.0));
        assert_eq!(eval_expr("3 + -[1,2]").unwrap(), g(2.0, 1.0));
    }

    #[test]
    fn rendering_the_three_classes() {
        assert_eq!(render_gelement(&g(1.0, 3.0)), "[1,3]");
        assert_eq!(render_gelement(&g(-1.0, -6.0)), "dual[1,6]");
        assert_eq!(render_gelement(&GElement::point(0.75)), "0.75");
        assert_eq!(
            render_gelement(&g(-2.0 / 3.0, 1.0 / 6.0)),
            "[-0.666666666667,0.166666666667]"
        );
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(
            p in -1e3f64..1e3,
            q in -1e3f64..1e3,
        ) {
            // Covers all three sign classes. Rendering truncates to 12
            // significant digits, so the round trip is tight but not
            // exact.
            let x = g(p, q);
            let back = parse_gelement(&render_gelement(&x)).unwrap();
            prop_assert!(back.sub(&x).norm() <= 1e-11 * (1.0 + x.norm()));
            let point = GElement::point(p);
            let back = parse_gelement(&render_gelement(&point)).unwrap();
            prop_assert!(back.sub(&point).norm() <= 1e-11 * (1.0 + point.norm()));
        }

        #[test]
        fn rendered_raw_pairs_parse_exactly(
            p in -1e3f64..1e3,
            q in -1e3f64..1e3,
        ) {
            // The raw-coordinate form uses full float formatting and
            // round-trips exactly.
            let s = format!("({p:?},{q:?})");
            prop_assert_eq!(parse_gelement(&s).unwrap(), g(p, q));
        }
    }
}
