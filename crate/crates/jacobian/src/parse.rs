//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ["+" | "-"] term (("+" | "-") term)*
//! term   := factor (["*"] factor)*
//! factor := atom ("^" integer)*
//! atom   := integer ["/" integer] | variable | "(" expr ")"
//! ```
//!
//! Juxtaposition multiplies (`2xy^2`, `(x+y)(x-y)`), and variable names are
//! matched greedily against the declared list, so `xy` reads as `x*y` when
//! `x` and `y` are declared. Parenthesized powers are expanded eagerly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::ParseError;
use crate::monomial::MonomialOrder;
use crate::mpoly::MPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str, vars: &[String]) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(src[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let rest = &src[i..];
                let hit = vars
                    .iter()
                    .enumerate()
                    .filter(|(_, name)| rest.starts_with(name.as_str()))
                    .max_by_key(|(_, name)| name.len());
                match hit {
                    Some((idx, name)) => {
                        out.push((i, Tok::Var(idx)));
                        i += name.len();
                        continue;
                    }
                    None => {
                        let end = rest.find(|ch: char| !ch.is_ascii_alphanumeric()).unwrap_or(rest.len());
                        return Err(ParseError::UnknownVariable {
                            name: rest[..end].to_string(),
                            pos: i,
                        });
                    }
                }
            }
            other => {
                return Err(ParseError::Syntax {
                    pos: i,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    order: MonomialOrder,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        }
    }

    fn expr(&mut self) -> Result<MPoly, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Var(_)) | Some(Tok::LParen) => acc = &acc * &self.factor()?,
                Some(Tok::Int(_)) => return Err(self.syntax("a number cannot follow a factor without '*'")),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly, ParseError> {
        let mut base = self.atom()?;
        while self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let at = self.offset();
            match self.next() {
                Some(Tok::Int(e)) => {
                    let e = u32::try_from(e).map_err(|_| ParseError::Syntax {
                        pos: at,
                        msg: "exponent too large".into(),
                    })?;
                    base = base.pow(e);
                }
                Some(Tok::Minus) => return Err(ParseError::NegativeExponent { pos: at }),
                _ => {
                    return Err(ParseError::Syntax {
                        pos: at,
                        msg: "expected an exponent".into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MPoly, ParseError> {
        let at = self.offset();
        match self.next() {
            Some(Tok::Int(n)) => {
                let mut value = BigRational::from_integer(n);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let at_den = self.offset();
                    match self.next() {
                        Some(Tok::Int(den)) if !den.is_zero() => {
                            value /= BigRational::from_integer(den);
                        }
                        _ => {
                            return Err(ParseError::Syntax {
                                pos: at_den,
                                msg: "expected a nonzero denominator".into(),
                            })
                        }
                    }
                }
                Ok(MPoly::constant(self.order, value))
            }
            Some(Tok::Var(i)) => Ok(MPoly::var(self.order, i)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(ParseError::Syntax {
                        pos: self.offset().min(self.end),
                        msg: "expected ')'".into(),
                    }),
                }
            }
            Some(_) => Err(ParseError::Syntax {
                pos: at,
                msg: "expected a number, variable or '('".into(),
            }),
            None => Err(ParseError::Syntax {
                pos: at,
                msg: "unexpected end of input".into(),
            }),
        }
    }
}

/// Parses `expr` over the variables `vars` (in order), with degrevlex terms.
pub fn parse_poly(expr: &str, vars: &[String]) -> Result<MPoly, ParseError> {
    if vars.is_empty() || vars.len() > crate::monomial::MAX_VARS {
        return Err(ParseError::Syntax {
            pos: 0,
            msg: format!("unsupported number of variables: {}", vars.len()),
        });
    }
    let toks = tokenize(expr, vars)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: expr.len(),
        order: MonomialOrder::degrevlex(vars.len()),
    };
    if p.peek().is_none() {
        return Err(ParseError::Syntax {
            pos: 0,
            msg: "empty expression".into(),
        });
    }
    let poly = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(poly)
}

/// Variable names from a comma-separated list such as `x,y,z`.
pub fn parse_var_list(s: &str) -> Vec<String> {
    s.split(',')
        .map(|v| v.trim().to_string())
        .filter(|v| !v.is_empty())
        .collect()
}

/// The `x, y, z, w` variables needed by `expr`: three unless `w` occurs.
pub fn infer_default_vars(expr: &str) -> Vec<String> {
    let n = if expr.contains('w') { 4 } else { 3 };
    crate::mpoly::default_var_names(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::default_var_names;

    fn xyz() -> Vec<String> {
        default_var_names(3)
    }

    #[test]
    fn parses_example_curves() {
        let f = parse_poly("x^9*y + y^10 + x^3*y^5*z^2", &xyz()).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.is_homogeneous());
        assert_eq!(f.total_degree(), Some(10));
        let g = parse_poly("(x^2+y^2)^3 + (y^3+z^3)^2", &xyz()).unwrap();
        assert!(g.is_homogeneous());
        assert_eq!(g.total_degree(), Some(6));
        let expanded = parse_poly("x^6+3x^4y^2+3x^2y^4+y^6+y^6+2y^3z^3+z^6", &xyz()).unwrap();
        assert_eq!(g, expanded);
        assert!(parse_poly("0", &xyz()).unwrap().is_zero());
    }

    #[test]
    fn juxtaposition_and_signs() {
        let a = parse_poly("2xy - (x+y)(x-y)", &xyz()).unwrap();
        let b = parse_poly("2*x*y - x^2 + y^2", &xyz()).unwrap();
        assert_eq!(a, b);
        let c = parse_poly("-x^2 + 3/2*y^2", &xyz()).unwrap();
        assert_eq!(c.to_string(), "-x^2+3/2*y^2");
        let vars: Vec<String> = (0..3).map(|i| format!("x{i}")).collect();
        let d = parse_poly("x0x1^2 + x2", &vars).unwrap();
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_poly("x + q", &xyz()),
            Err(ParseError::UnknownVariable { pos: 4, .. })
        ));
        assert!(matches!(
            parse_poly("x^-2", &xyz()),
            Err(ParseError::NegativeExponent { .. })
        ));
        assert!(matches!(parse_poly("(x + y", &xyz()), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("x + ", &xyz()), Err(ParseError::Syntax { .. })));
        assert!(matches!(
            parse_poly("x 2", &xyz()),
            Err(ParseError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(parse_poly("", &xyz()), Err(ParseError::Syntax { .. })));
    }
}
