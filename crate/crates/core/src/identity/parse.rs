//! Recursive-descent parser for the expression mini-language.
//!
//! Whitespace-insensitive grammar:
//!
//! ```text
//! expr   := term (("+"|"-") term)*
//! term   := factor (("*"|"/") factor)*
//! factor := "-" factor | atom ("^" sint)?
//! atom   := rational | "z3" | mono | jcall | namedj | mcall | lcall
//!         | mockcall | pcall | "(" expr ")"
//! jcall  := "j(" mono ";" mono ")"
//! namedj := ("J"|"Jb") "(" sint "," sint ")" | "Jp" "(" sint ")"
//! mcall  := "m(" mono "," mono ";" mono ")"
//! lcall  := "lerch(" unit ";" sint "," sint "," sint ";" unit ";" sint "," sint ")"
//! mockcall := name "(" mono ")"     name in {f3,psi3,chi3,omega3,phi10,
//!                                            psi10,X10,chi10,phi6,psi6}
//! pcall  := "poch(" mono ";" mono ";" (sint|"inf") ")"
//! mono   := (unit "*")? ("q" ("^" sint)? | "1") | unit
//! unit   := "-"? ("1" | "z3" | "z3^2")
//! sint   := "-"? digits          rational := sint ("/" digits)?
//! ```
//!
//! A rational literal like `1/3` binds tighter than series division, so
//! `1/3*Jp(1)` is (1/3) * J_1 while `1/Jp(3)` is a series quotient.

use std::fmt;

use crate::appell::{AppellSpec, LerchSpec};
use crate::cyclotomic::{rational, CycNum, Unit};
use crate::mock::MockName;
use crate::qseries::Monomial;
use crate::theta::{JKind, PochOrder, ThetaSpec};

use super::Expr;

/// Parse failure: byte offset into the input plus the expected-token set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at byte {}: expected {}",
            self.offset, self.expected
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Semi,
    Comma,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number {}", n),
            Tok::Ident(s) => format!("identifier {:?}", s),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Semi => "';'".into(),
            Tok::Comma => "','".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ';' => Tok::Semi,
            ',' => Tok::Comma,
            '0'..='9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let n: i64 = input[i..j].parse().map_err(|_| ParseError {
                    offset: start,
                    expected: "a number within i64 range".into(),
                })?;
                i = j;
                toks.push((start, Tok::Num(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let mut j = i;
                while j < bytes.len()
                    && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_')
                {
                    j += 1;
                }
                let s = input[i..j].to_string();
                i = j;
                toks.push((start, Tok::Ident(s)));
                continue;
            }
            _ => {
                return Err(ParseError {
                    offset: start,
                    expected: "one of + - * / ^ ( ) ; , digits or an identifier".into(),
                })
            }
        };
        toks.push((start, tok));
        i += 1;
    }
    toks.push((input.len(), Tok::Eof));
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.pos + 1).min(self.toks.len() - 1)].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.err(&t.describe()))
        }
    }

    fn err(&self, expected: &str) -> ParseError {
        ParseError {
            offset: self.offset(),
            expected: format!("{}, found {}", expected, self.peek().describe()),
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.parse_term()?;
        loop {
            if self.eat(&Tok::Plus) {
                e = e + self.parse_term()?;
            } else if self.eat(&Tok::Minus) {
                e = e - self.parse_term()?;
            } else {
                return Ok(e);
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.parse_factor()?;
        loop {
            if self.eat(&Tok::Star) {
                e = e * self.parse_factor()?;
            } else if self.eat(&Tok::Slash) {
                e = e / self.parse_factor()?;
            } else {
                return Ok(e);
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Expr, ParseError> {
        if self.eat(&Tok::Minus) {
            return Ok(-self.parse_factor()?);
        }
        let atom = self.parse_atom()?;
        if self.eat(&Tok::Caret) {
            let k = self.parse_sint()?;
            let k = i32::try_from(k).map_err(|_| self.err("an exponent within i32 range"))?;
            return Ok(atom.pow(k));
        }
        Ok(atom)
    }

    fn parse_atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                // rational literal binds tighter than division: only when a
                // number follows the slash
                if self.peek() == &Tok::Slash {
                    if let Tok::Num(d) = *self.peek2() {
                        if d == 0 {
                            return Err(self.err("a nonzero denominator"));
                        }
                        self.bump();
                        self.bump();
                        return Ok(Expr::Const(CycNum::from_rational(rational(n, d))));
                    }
                }
                Ok(Expr::Const(CycNum::from_int(n)))
            }
            Tok::LParen => {
                self.bump();
                let e = self.parse_expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => self.parse_ident_atom(&name),
            _ => Err(self.err("a number, name, monomial, or '('")),
        }
    }

    fn parse_ident_atom(&mut self, name: &str) -> Result<Expr, ParseError> {
        match name {
            "q" => {
                self.bump();
                let e = if self.eat(&Tok::Caret) {
                    self.parse_sint()?
                } else {
                    1
                };
                Ok(Expr::QPow(e))
            }
            "z3" => {
                self.bump();
                Ok(Expr::Const(CycNum::zeta3()))
            }
            "j" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let z = self.parse_mono()?;
                self.expect(Tok::Semi)?;
                let base = self.parse_mono()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::Theta(ThetaSpec::new(z, base)))
            }
            "J" | "Jb" => {
                let kind = if name == "J" { JKind::J } else { JKind::Jbar };
                self.bump();
                self.expect(Tok::LParen)?;
                let a = self.parse_sint()?;
                self.expect(Tok::Comma)?;
                let b = self.parse_sint()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::NamedJ(kind, a, b))
            }
            "Jp" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let a = self.parse_sint()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::NamedJ(JKind::Jeta, a, 0))
            }
            "m" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let x = self.parse_mono()?;
                self.expect(Tok::Comma)?;
                let z = self.parse_mono()?;
                self.expect(Tok::Semi)?;
                let base = self.parse_mono()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::Appell(AppellSpec::new(x, z, base)))
            }
            "lerch" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let u = self.parse_unit()?;
                self.expect(Tok::Semi)?;
                let a2 = self.parse_sint()?;
                self.expect(Tok::Comma)?;
                let a1 = self.parse_sint()?;
                self.expect(Tok::Comma)?;
                let a0 = self.parse_sint()?;
                self.expect(Tok::Semi)?;
                let w = self.parse_unit()?;
                self.expect(Tok::Semi)?;
                let c = self.parse_sint()?;
                self.expect(Tok::Comma)?;
                let d = self.parse_sint()?;
                let close = self.offset();
                self.expect(Tok::RParen)?;
                let spec = LerchSpec::new(u, a2, a1, a0, w, c, d).map_err(|e| ParseError {
                    offset: close,
                    expected: format!("a valid Lerch spec ({})", e),
                })?;
                Ok(Expr::Lerch(spec))
            }
            "poch" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let x = self.parse_mono()?;
                self.expect(Tok::Semi)?;
                let base = self.parse_mono()?;
                self.expect(Tok::Semi)?;
                let n = if matches!(self.peek(), Tok::Ident(s) if s == "inf") {
                    self.bump();
                    PochOrder::Infinite
                } else {
                    let at = self.offset();
                    let n = self.parse_sint()?;
                    let n = u32::try_from(n).map_err(|_| ParseError {
                        offset: at,
                        expected: "a nonnegative Pochhammer length or 'inf'".into(),
                    })?;
                    PochOrder::Finite(n)
                };
                self.expect(Tok::RParen)?;
                Ok(Expr::Poch(x, base, n))
            }
            _ => {
                if let Some(mock) = MockName::parse(name) {
                    self.bump();
                    self.expect(Tok::LParen)?;
                    let arg = self.parse_mono()?;
                    self.expect(Tok::RParen)?;
                    Ok(Expr::Mock(mock, arg))
                } else {
                    Err(self.err(
                        "one of q, z3, j, J, Jb, Jp, m, lerch, poch, or a mock theta name",
                    ))
                }
            }
        }
    }

    fn parse_sint(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat(&Tok::Minus);
        match self.bump() {
            Tok::Num(n) => Ok(if neg { -n } else { n }),
            _ => {
                self.pos -= 1;
                Err(self.err("an integer"))
            }
        }
    }

    /// unit := "-"? ("1" | "z3" | "z3^2")
    fn parse_unit(&mut self) -> Result<Unit, ParseError> {
        let neg = self.eat(&Tok::Minus);
        let u = self.parse_unit_body()?;
        Ok(if neg { u * Unit::MINUS_ONE } else { u })
    }

    fn parse_unit_body(&mut self) -> Result<Unit, ParseError> {
        match self.peek().clone() {
            Tok::Num(1) => {
                self.bump();
                Ok(Unit::ONE)
            }
            Tok::Ident(s) if s == "z3" => {
                self.bump();
                if self.peek() == &Tok::Caret {
                    self.bump();
                    match self.bump() {
                        Tok::Num(2) => Ok(Unit::ZETA3_SQ),
                        _ => {
                            self.pos -= 1;
                            Err(self.err("exponent 2 (units are 1, z3, z3^2)"))
                        }
                    }
                } else {
                    Ok(Unit::ZETA3)
                }
            }
            _ => Err(self.err("a unit: 1, z3, or z3^2")),
        }
    }

    /// mono := "-"? (unit "*")? ("q" ("^" sint)? | "1") | unit
    /// (a leading sign folds into the unit, so "-q^4" means -1 * q^4)
    fn parse_mono(&mut self) -> Result<Monomial, ParseError> {
        let neg = self.eat(&Tok::Minus);
        let mono = if matches!(self.peek(), Tok::Ident(s) if s == "q") {
            Monomial::new(Unit::ONE, self.parse_qpart()?)
        } else {
            let unit = self.parse_unit_body()?;
            if self.eat(&Tok::Star) {
                Monomial::new(unit, self.parse_qpart()?)
            } else {
                Monomial::new(unit, 0)
            }
        };
        Ok(if neg { mono.neg() } else { mono })
    }

    /// qpart := "q" ("^" sint)? | "1"
    fn parse_qpart(&mut self) -> Result<i64, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "q" => {
                self.bump();
                if self.eat(&Tok::Caret) {
                    self.parse_sint()
                } else {
                    Ok(1)
                }
            }
            Tok::Num(1) => {
                self.bump();
                Ok(0)
            }
            _ => Err(self.err("'q', 'q^<int>', or '1'")),
        }
    }
}

/// Parse an expression; errors carry the byte offset and expected tokens.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.parse_expr()?;
    if p.peek() != &Tok::Eof {
        return Err(p.err("end of input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_named_j() {
        assert_eq!(parse("J(1,2)").unwrap(), Expr::NamedJ(JKind::J, 1, 2));
        assert_eq!(parse("Jb(3,12)").unwrap(), Expr::NamedJ(JKind::Jbar, 3, 12));
        assert_eq!(parse("Jp(6)").unwrap(), Expr::NamedJ(JKind::Jeta, 6, 0));
    }

    #[test]
    fn parses_gm2_shape() {
        let e = parse("f3(q^3) - 1/3 * Jp(1)^4/(Jp(3)*Jp(2)^2)").unwrap();
        match e {
            Expr::Sub(lhs, rhs) => {
                assert_eq!(
                    *lhs,
                    Expr::Mock(MockName::F3, Monomial::q_pow(3))
                );
                assert!(matches!(*rhs, Expr::Div(..)));
            }
            other => panic!("expected Sub, got {:?}", other),
        }
    }

    #[test]
    fn parses_appell_with_unit_monomials() {
        let e = parse("m(-z3*1, -1; q)").unwrap();
        assert_eq!(
            e,
            Expr::Appell(AppellSpec::new(
                Monomial::new(Unit::MINUS_ZETA3, 0),
                Monomial::new(Unit::MINUS_ONE, 0),
                Monomial::q(),
            ))
        );
    }

    #[test]
    fn parses_lerch_and_validates() {
        let e = parse("lerch(z3^2; 2,2,0; z3; 2,1)").unwrap();
        assert!(matches!(e, Expr::Lerch(_)));
        // a2 + a1 odd: rejected with an offset
        let err = parse("lerch(z3; 2,1,0; z3; 2,1)").unwrap_err();
        assert!(err.expected.contains("Lerch"));
    }

    #[test]
    fn parses_negative_exponents_and_units() {
        let e = parse("q^-2 * psi10(-q^4)").unwrap();
        assert_eq!(
            e,
            Expr::QPow(-2)
                * Expr::Mock(
                    MockName::Psi10,
                    Monomial::new(Unit::MINUS_ONE, 4)
                )
        );
        let e = parse("j(-q^2; -q^10)").unwrap();
        assert_eq!(
            e,
            Expr::Theta(ThetaSpec::new(
                Monomial::new(Unit::MINUS_ONE, 2),
                Monomial::new(Unit::MINUS_ONE, 10),
            ))
        );
    }

    #[test]
    fn rational_literal_vs_division() {
        assert_eq!(
            parse("1/3").unwrap(),
            Expr::Const(CycNum::from_rational(crate::cyclotomic::rational(1, 3)))
        );
        assert!(matches!(parse("1/Jp(3)").unwrap(), Expr::Div(..)));
    }

    #[test]
    fn error_reports_offset_and_expectation() {
        let err = parse("J(1,2) + frobnicate(q)").unwrap_err();
        assert_eq!(err.offset, 9);
        assert!(err.expected.contains("mock theta name"));
        let err = parse("m(q, q; )").unwrap_err();
        assert_eq!(err.offset, 8);
    }

    #[test]
    fn whitespace_insensitive() {
        let a = parse("  J( 1 , 2 )  *  f3(  q )  ").unwrap();
        let b = parse("J(1,2)*f3(q)").unwrap();
        assert_eq!(a, b);
    }
}
