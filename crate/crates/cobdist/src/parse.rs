//! Text formats shared by the library and the command line.
//!
//! Knot combinations:
//!
//! ```text
//! combo := ['-'] term (('+'|'-') term)*
//! term  := [uint '*']? gen
//! gen   := 'T(2,' odd-uint ')' | 'W(' uint ')'
//! ```
//!
//! Whitespace is insignificant. Example: `2*T(2,17) - 3*T(2,11)`.
//!
//! Group literals look like `Z^2 + Z2 + Z4 + Z3`; elements like
//! `(3,-1;1,2,0)`, with free coordinates left of the `;` and torsion residues
//! right of it.

use std::fmt;

use crate::knots::{Generator, KnotCombo};
use crate::projective::{FgGroup, GroupElement};

/// Parse failure with the byte offset of the offending input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn try_eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an unsigned integer");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError {
                pos: start,
                msg: "integer out of range".into(),
            })
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let neg = self.try_eat(b'-');
        let mag = self.uint()?;
        let v = i64::try_from(mag).map_err(|_| ParseError {
            pos: self.pos,
            msg: "integer out of range".into(),
        })?;
        Ok(if neg { -v } else { v })
    }

    fn done(&mut self) -> Result<(), ParseError> {
        if self.peek().is_some() {
            self.err("trailing input")
        } else {
            Ok(())
        }
    }
}

fn parse_generator(s: &mut Scanner) -> Result<Generator, ParseError> {
    match s.peek() {
        Some(b'T') => {
            s.pos += 1;
            s.eat(b'(')?;
            let strand_pos = s.pos;
            let strands = s.uint()?;
            if strands != 2 {
                return Err(ParseError {
                    pos: strand_pos,
                    msg: "only 2-stranded torus knots are supported".into(),
                });
            }
            s.eat(b',')?;
            let q_pos = s.pos;
            let q = s.uint()?;
            if q % 2 == 0 {
                return Err(ParseError {
                    pos: q_pos,
                    msg: "torus parameter must be odd".into(),
                });
            }
            s.eat(b')')?;
            let q = u32::try_from(q).map_err(|_| ParseError {
                pos: q_pos,
                msg: "torus parameter out of range".into(),
            })?;
            Generator::torus_odd(q).map_err(|e| ParseError {
                pos: q_pos,
                msg: e.to_string(),
            })
        }
        Some(b'W') => {
            s.pos += 1;
            s.eat(b'(')?;
            let n_pos = s.pos;
            let n = s.uint()?;
            s.eat(b')')?;
            let n = u32::try_from(n).map_err(|_| ParseError {
                pos: n_pos,
                msg: "twist parameter out of range".into(),
            })?;
            Generator::twist(n).map_err(|e| ParseError {
                pos: n_pos,
                msg: e.to_string(),
            })
        }
        _ => s.err("expected a generator: T(2,q) or W(n)"),
    }
}

fn parse_term(s: &mut Scanner) -> Result<(Generator, i64), ParseError> {
    let mut coeff = 1i64;
    if matches!(s.peek(), Some(c) if c.is_ascii_digit()) {
        let c_pos = s.pos;
        coeff = i64::try_from(s.uint()?).map_err(|_| ParseError {
            pos: c_pos,
            msg: "coefficient out of range".into(),
        })?;
        s.eat(b'*')?;
    }
    let g = parse_generator(s)?;
    Ok((g, coeff))
}

/// Parse a knot combination such as `T(2,13) - 4*T(2,3)`.
pub fn parse_combo(input: &str) -> Result<KnotCombo, ParseError> {
    let mut s = Scanner::new(input);
    let mut combo = KnotCombo::new();
    let mut sign = if s.try_eat(b'-') { -1 } else { 1 };
    loop {
        let (g, c) = parse_term(&mut s)?;
        combo.insert(g, sign * c);
        match s.peek() {
            Some(b'+') => {
                s.pos += 1;
                sign = 1;
            }
            Some(b'-') => {
                s.pos += 1;
                sign = -1;
            }
            None => break,
            _ => return s.err("expected '+', '-', or end of input"),
        }
    }
    Ok(combo)
}

/// Parse a group literal such as `Z^2 + Z2 + Z4 + Z3`.
pub fn parse_group(input: &str) -> Result<FgGroup, ParseError> {
    let mut s = Scanner::new(input);
    let mut rank = 0usize;
    let mut torsion = Vec::new();
    loop {
        s.eat(b'Z')?;
        match s.peek() {
            Some(b'^') => {
                s.pos += 1;
                rank += s.uint()? as usize;
            }
            Some(c) if c.is_ascii_digit() => {
                let q_pos = s.pos;
                let q = s.uint()?;
                if FgGroup::new(0, vec![q]).is_err() {
                    return Err(ParseError {
                        pos: q_pos,
                        msg: format!("{q} is not a prime power > 1 (split it, e.g. Z6 = Z2 + Z3)"),
                    });
                }
                torsion.push(q);
            }
            _ => rank += 1,
        }
        if !s.try_eat(b'+') {
            break;
        }
    }
    s.done()?;
    Ok(FgGroup::new(rank, torsion).expect("validated factor by factor"))
}

/// Parse an element literal such as `(3,-1;1,2,0)` against its group.
pub fn parse_element(input: &str, g: &FgGroup) -> Result<GroupElement, ParseError> {
    let mut s = Scanner::new(input);
    s.eat(b'(')?;
    let mut free = Vec::new();
    if s.peek() != Some(b';') {
        loop {
            free.push(s.int()?);
            if !s.try_eat(b',') {
                break;
            }
        }
    }
    s.eat(b';')?;
    let mut torsion = Vec::new();
    if s.peek() != Some(b')') {
        loop {
            torsion.push(s.int()?);
            if !s.try_eat(b',') {
                break;
            }
        }
    }
    s.eat(b')')?;
    s.done()?;
    let pos = s.pos;
    g.element(free, torsion).map_err(|e| ParseError {
        pos,
        msg: e.to_string(),
    })
}

/// Parse a lattice point `x,y`.
pub fn parse_point(input: &str) -> Result<(i64, i64), ParseError> {
    let mut s = Scanner::new(input);
    let x = s.int()?;
    s.eat(b',')?;
    let y = s.int()?;
    s.done()?;
    Ok((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combos_round_trip() {
        for text in [
            "T(2,3)",
            "2*T(2,17) - 3*T(2,11)",
            "T(2,13) - 4*T(2,3)",
            "-T(2,5) + W(3)",
            "2*T(2,5) + T(2,15) - T(2,25)",
        ] {
            let c = parse_combo(text).unwrap();
            assert_eq!(parse_combo(&c.to_string()).unwrap(), c, "{text}");
        }
    }

    #[test]
    fn whitespace_insignificant() {
        assert_eq!(
            parse_combo("2*T(2,17)-3*T(2,11)").unwrap(),
            parse_combo("  2 * T( 2 , 17 )  -  3*T(2,11) ").unwrap()
        );
    }

    #[test]
    fn combo_errors_carry_positions() {
        let e = parse_combo("T(2,4)").unwrap_err();
        assert_eq!(e.pos, 4);
        assert!(e.msg.contains("odd"));
        let e = parse_combo("T(3,5)").unwrap_err();
        assert!(e.msg.contains("2-stranded"));
        assert!(parse_combo("2*").is_err());
        assert!(parse_combo("T(2,5) % T(2,3)").is_err());
        assert!(parse_combo("T(2,1)").is_err());
    }

    #[test]
    fn groups() {
        let g = parse_group("Z^2 + Z2 + Z4 + Z3").unwrap();
        assert_eq!(g.rank(), 2);
        assert_eq!(g.torsion(), &[2, 4, 3]);
        let g = parse_group("Z + Z2").unwrap();
        assert_eq!((g.rank(), g.torsion().len()), (1, 1));
        assert!(parse_group("Z6").is_err());
        assert!(parse_group("Q").is_err());
    }

    #[test]
    fn elements() {
        let g = parse_group("Z^2 + Z2 + Z4 + Z3").unwrap();
        let e = parse_element("(3,-1;1,2,0)", &g).unwrap();
        assert_eq!(e.free, vec![3, -1]);
        assert_eq!(e.torsion, vec![1, 2, 0]);
        // Residues reduce modulo their orders.
        let e = parse_element("(0,0;-1,7,5)", &g).unwrap();
        assert_eq!(e.torsion, vec![1, 3, 2]);
        assert!(parse_element("(1;0)", &g).is_err());
        let z6 = parse_group("Z2 + Z3").unwrap();
        let e = parse_element("(;1,2)", &z6).unwrap();
        assert_eq!(e.torsion, vec![1, 2]);
    }

    #[test]
    fn points() {
        assert_eq!(parse_point("8,15").unwrap(), (8, 15));
        assert_eq!(parse_point(" -3 , 4 ").unwrap(), (-3, 4));
        assert!(parse_point("8").is_err());
    }
}
