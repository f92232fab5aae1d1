//! Polynomial parser for the ASCII grammar:
//!
//! ```text
//! poly   := term (('+'|'-') term)*
//! term   := sign? factor ('*'? factor)*
//! factor := coeff | var ('^' uint)?
//! coeff  := uint ('/' uint)?
//! ```
//!
//! Whitespace is insignificant; multiplication between adjacent factors may
//! be implicit.

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingPresentation;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    UInt(u64),
    Ident(String),
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                let mut v: u64 = 0;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((bytes[i] - b'0') as u64))
                        .ok_or(Error::Syntax {
                            pos: start,
                            msg: "integer literal too large".into(),
                        })?;
                    i += 1;
                }
                toks.push((start, Tok::UInt(v)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(text[start..i].to_string())));
            }
            other => {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(toks)
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn peek_pos(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(usize::MAX)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }
}

/// Parses `text` into a canonical polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: &RingPresentation) -> Result<Polynomial> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::Syntax {
            pos: 0,
            msg: "empty input".into(),
        });
    }
    let mut lx = Lexer { toks, pos: 0 };
    let mut terms: Vec<(Monomial, Coeff)> = Vec::new();
    let (m, c) = parse_term(&mut lx, ring, true)?;
    terms.push((m, c));
    while let Some(tok) = lx.peek() {
        let negate = match tok {
            Tok::Plus => false,
            Tok::Minus => true,
            _ => {
                return Err(Error::Syntax {
                    pos: lx.peek_pos(),
                    msg: "expected `+` or `-`".into(),
                })
            }
        };
        lx.next();
        let (m, c) = parse_term(&mut lx, ring, false)?;
        terms.push((m, if negate { c.neg() } else { c }));
    }
    Ok(Polynomial::from_terms(ring, terms))
}

fn parse_term(
    lx: &mut Lexer,
    ring: &RingPresentation,
    _leading: bool,
) -> Result<(Monomial, Coeff)> {
    let mut sign = false;
    match lx.peek() {
        Some(Tok::Plus) => {
            lx.next();
        }
        Some(Tok::Minus) => {
            sign = true;
            lx.next();
        }
        _ => {}
    }
    let mut coeff = ring.field().one();
    let mut exps = vec![0u32; ring.n_vars()];
    parse_factor(lx, ring, &mut coeff, &mut exps)?;
    loop {
        match lx.peek() {
            Some(Tok::Star) => {
                lx.next();
                parse_factor(lx, ring, &mut coeff, &mut exps)?;
            }
            // implicit multiplication
            Some(Tok::UInt(_)) | Some(Tok::Ident(_)) => {
                parse_factor(lx, ring, &mut coeff, &mut exps)?;
            }
            _ => break,
        }
    }
    if sign {
        coeff = coeff.neg();
    }
    Ok((Monomial::new(exps, ring.weights()), coeff))
}

fn parse_factor(
    lx: &mut Lexer,
    ring: &RingPresentation,
    coeff: &mut Coeff,
    exps: &mut [u32],
) -> Result<()> {
    let pos = lx.peek_pos();
    match lx.next() {
        Some(Tok::UInt(n)) => {
            let c = if matches!(lx.peek(), Some(Tok::Slash)) {
                lx.next();
                let dpos = lx.peek_pos();
                match lx.next() {
                    Some(Tok::UInt(d)) => ring.field().fraction(n, d)?,
                    _ => {
                        return Err(Error::Syntax {
                            pos: dpos,
                            msg: "expected denominator".into(),
                        })
                    }
                }
            } else {
                ring.field().fraction(n, 1)?
            };
            *coeff = coeff.mul(&c);
            Ok(())
        }
        Some(Tok::Ident(name)) => {
            let idx = ring
                .var_index(&name)
                .ok_or(Error::UnknownVariable(name))?;
            let e: u32 = if matches!(lx.peek(), Some(Tok::Caret)) {
                lx.next();
                let epos = lx.peek_pos();
                match lx.next() {
                    Some(Tok::UInt(e)) if e <= u32::MAX as u64 => e as u32,
                    _ => {
                        return Err(Error::Syntax {
                            pos: epos,
                            msg: "expected exponent".into(),
                        })
                    }
                }
            } else {
                1
            };
            exps[idx] = exps[idx]
                .checked_add(e)
                .ok_or(Error::Syntax {
                    pos,
                    msg: "exponent overflow".into(),
                })?;
            Ok(())
        }
        _ => Err(Error::Syntax {
            pos,
            msg: "expected coefficient or variable".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::{MonomialOrder, OrderKind};

    fn qq_xy() -> RingPresentation {
        RingPresentation::polynomial_ring(
            Field::Rationals,
            vec![("x".into(), 1), ("y".into(), 1)],
            MonomialOrder::simple(OrderKind::GradedRevLex, 2),
        )
        .unwrap()
    }

    #[test]
    fn parses_mixed_terms() {
        let r = qq_xy();
        let f = parse_polynomial("x^2*y - 3", &r).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.to_string(), "x^2*y - 3");
    }

    #[test]
    fn parses_zero() {
        let r = qq_xy();
        let f = parse_polynomial("0", &r).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn parses_defining_relation_of_quotient() {
        // x^2*y over the eigrt model ring with a = 2
        let r = RingPresentation::standard(&["x", "y"]);
        let f = parse_polynomial("x^2*y", &r).unwrap();
        assert_eq!(f.to_string(), "x^2*y");
        assert_eq!(f.weighted_degree(), 3);
    }

    #[test]
    fn implicit_multiplication_and_fractions() {
        let r = qq_xy();
        assert_eq!(
            parse_polynomial("2x y", &r).unwrap(),
            parse_polynomial("2*x*y", &r).unwrap()
        );
        assert_eq!(
            parse_polynomial("3/2 x", &r).unwrap().to_string(),
            "3/2*x"
        );
        // coefficients cancel exactly
        assert!(parse_polynomial("1/2x - 1/2x", &r).unwrap().is_zero());
    }

    #[test]
    fn error_positions_and_kinds() {
        let r = qq_xy();
        match parse_polynomial("x + @", &r) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(
            parse_polynomial("x*z", &r),
            Err(Error::UnknownVariable(v)) if v == "z"
        ));
        assert!(matches!(
            parse_polynomial("1/0", &r),
            Err(Error::ZeroDenominator)
        ));
        let fp = RingPresentation::polynomial_ring(
            Field::Prime(7),
            vec![("x".into(), 1)],
            MonomialOrder::simple(OrderKind::GradedRevLex, 1),
        )
        .unwrap();
        assert!(matches!(
            parse_polynomial("1/14*x", &fp),
            Err(Error::DenominatorNotInvertible { .. })
        ));
    }

    #[test]
    fn double_operator_rejected() {
        let r = qq_xy();
        assert!(parse_polynomial("x - -y", &r).is_ok());
        assert!(parse_polynomial("--x", &r).is_err());
        assert!(parse_polynomial("", &r).is_err());
    }

    #[test]
    fn garbage_inputs_error_without_panicking() {
        let r = qq_xy();
        for bad in [
            "x +* y", "^2", "x^", "3/", "/3", "x^y", "x**y", "()", "x + ", "1/2/3x",
            "99999999999999999999999",
        ] {
            assert!(parse_polynomial(bad, &r).is_err(), "accepted {bad:?}");
        }
        // deep but valid input stays fine
        let long = vec!["x"; 200].join("*");
        assert!(parse_polynomial(&long, &r).is_ok());
    }
}
