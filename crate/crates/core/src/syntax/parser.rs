//! Recursive-descent parser for object formulas and temporal graded
//! formulas.
//!
//! Precedence, tightest first: `~ T X F G` (unary), `&`, `|`, `U`
//! (right-associative), `->` (right-associative). The meta level mirrors
//! the unary/`&`/`U` structure over graded atoms; an atom is a
//! parenthesized object implication closed by `>= q` or `<= q`.

use crate::algebra::{Degree, DegreeError};

use super::{Cmp, Formula, GradedImplication, ParseError, TemporalGradedFormula};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(String),
    KwT,
    KwX,
    KwF,
    KwG,
    KwU,
    Top,
    Bot,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Tilde,
    Amp,
    Pipe,
    Arrow,
    Ge,
    Le,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Number(s) => format!("number `{s}`"),
            Tok::KwT => "`T`".into(),
            Tok::KwX => "`X`".into(),
            Tok::KwF => "`F`".into(),
            Tok::KwG => "`G`".into(),
            Tok::KwU => "`U`".into(),
            Tok::Top => "`top`".into(),
            Tok::Bot => "`bot`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Ge => "`>=`".into(),
            Tok::Le => "`<=`".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
            }
            b'(' => {
                toks.push((Tok::LParen, start));
                i += 1;
            }
            b')' => {
                toks.push((Tok::RParen, start));
                i += 1;
            }
            b'[' => {
                toks.push((Tok::LBracket, start));
                i += 1;
            }
            b']' => {
                toks.push((Tok::RBracket, start));
                i += 1;
            }
            b'~' => {
                toks.push((Tok::Tilde, start));
                i += 1;
            }
            b'&' => {
                toks.push((Tok::Amp, start));
                i += 1;
            }
            b'|' => {
                toks.push((Tok::Pipe, start));
                i += 1;
            }
            b'-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((Tok::Arrow, start));
                    i += 2;
                } else {
                    return Err(ParseError::Syntax {
                        pos: start,
                        msg: "expected `->` after `-`".into(),
                    });
                }
            }
            b'>' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    toks.push((Tok::Ge, start));
                    i += 2;
                } else {
                    return Err(ParseError::Syntax {
                        pos: start,
                        msg: "expected `>=` after `>`".into(),
                    });
                }
            }
            b'<' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    toks.push((Tok::Le, start));
                    i += 2;
                } else {
                    return Err(ParseError::Syntax {
                        pos: start,
                        msg: "expected `<=` after `<`".into(),
                    });
                }
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    i += 1;
                    if i >= bytes.len() || !bytes[i].is_ascii_digit() {
                        return Err(ParseError::Syntax {
                            pos: i,
                            msg: "expected digits after decimal point".into(),
                        });
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                if i < bytes.len() && bytes[i] == b'/' {
                    i += 1;
                    if i >= bytes.len() || !bytes[i].is_ascii_digit() {
                        return Err(ParseError::Syntax {
                            pos: i,
                            msg: "expected digits after `/`".into(),
                        });
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                toks.push((Tok::Number(src[start..i].to_string()), start));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &src[start..i];
                let tok = match word {
                    "T" => Tok::KwT,
                    "X" => Tok::KwX,
                    "F" => Tok::KwF,
                    "G" => Tok::KwG,
                    "U" => Tok::KwU,
                    "top" => Tok::Top,
                    "bot" => Tok::Bot,
                    _ => Tok::Ident(word.to_string()),
                };
                toks.push((tok, start));
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{}`", src[start..].chars().next().unwrap()),
                });
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self, ParseError> {
        Ok(Parser { toks: lex(src)?, idx: 0, end: src.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(t, _)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn eat(&mut self, want: &Tok) -> bool {
        if self.peek() == Some(want) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(&want) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {what}")))
        }
    }

    fn error(&self, msg: &str) -> ParseError {
        let found = self
            .peek()
            .map(|t| format!("{msg}, found {}", t.describe()))
            .unwrap_or_else(|| format!("{msg}, found end of input"));
        ParseError::Syntax { pos: self.pos(), msg: found }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.idx == self.toks.len() {
            Ok(())
        } else {
            Err(self.error("expected end of input"))
        }
    }

    // ----- object level -----

    fn formula(&mut self, in_typ: bool) -> Result<Formula, ParseError> {
        let lhs = self.until(in_typ)?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.formula(in_typ)?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn until(&mut self, in_typ: bool) -> Result<Formula, ParseError> {
        let lhs = self.disj(in_typ)?;
        if self.peek() == Some(&Tok::KwU) {
            self.idx += 1;
            let bound = self.opt_bound()?;
            let rhs = self.until(in_typ)?;
            Ok(match bound {
                Some(t) => Formula::bounded_until(t, lhs, rhs),
                None => Formula::until(lhs, rhs),
            })
        } else {
            Ok(lhs)
        }
    }

    fn disj(&mut self, in_typ: bool) -> Result<Formula, ParseError> {
        let mut f = self.conj(in_typ)?;
        while self.eat(&Tok::Pipe) {
            let g = self.conj(in_typ)?;
            f = Formula::or(f, g);
        }
        Ok(f)
    }

    fn conj(&mut self, in_typ: bool) -> Result<Formula, ParseError> {
        let mut f = self.unary(in_typ)?;
        while self.eat(&Tok::Amp) {
            let g = self.unary(in_typ)?;
            f = Formula::and(f, g);
        }
        Ok(f)
    }

    fn opt_bound(&mut self) -> Result<Option<u32>, ParseError> {
        if !self.eat(&Tok::LBracket) {
            return Ok(None);
        }
        let pos = self.pos();
        let t = match self.bump() {
            Some(Tok::Number(n)) => n.parse::<u32>().map_err(|_| ParseError::Syntax {
                pos,
                msg: format!("expected non-negative integer bound, found `{n}`"),
            })?,
            _ => {
                return Err(ParseError::Syntax {
                    pos,
                    msg: "expected integer bound after `[`".into(),
                })
            }
        };
        self.expect(Tok::RBracket, "`]`")?;
        Ok(Some(t))
    }

    fn unary(&mut self, in_typ: bool) -> Result<Formula, ParseError> {
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Tilde) => {
                self.idx += 1;
                Ok(Formula::not(self.unary(in_typ)?))
            }
            Some(Tok::KwT) => {
                self.idx += 1;
                if in_typ {
                    return Err(ParseError::NestedTypicality { pos });
                }
                self.expect(Tok::LParen, "`(` after `T`")?;
                let inner = self.formula(true)?;
                self.expect(Tok::RParen, "`)` closing `T(`")?;
                Ok(Formula::Typ(Box::new(inner)))
            }
            Some(Tok::KwX) => {
                self.idx += 1;
                Ok(Formula::next(self.unary(in_typ)?))
            }
            Some(Tok::KwF) => {
                self.idx += 1;
                let bound = self.opt_bound()?;
                let arg = self.unary(in_typ)?;
                Ok(match bound {
                    Some(t) => Formula::bounded_eventually(t, arg),
                    None => Formula::eventually(arg),
                })
            }
            Some(Tok::KwG) => {
                self.idx += 1;
                let bound = self.opt_bound()?;
                let arg = self.unary(in_typ)?;
                Ok(match bound {
                    Some(t) => Formula::bounded_always(t, arg),
                    None => Formula::always(arg),
                })
            }
            Some(Tok::LParen) => {
                self.idx += 1;
                let inner = self.formula(in_typ)?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::Top) => {
                self.idx += 1;
                Ok(Formula::Top)
            }
            Some(Tok::Bot) => {
                self.idx += 1;
                Ok(Formula::Bot)
            }
            Some(Tok::Ident(_)) => {
                if let Some(Tok::Ident(name)) = self.bump() {
                    Ok(Formula::Prop(name))
                } else {
                    unreachable!()
                }
            }
            _ => Err(self.error("expected formula")),
        }
    }

    // ----- meta level -----

    fn meta(&mut self) -> Result<TemporalGradedFormula, ParseError> {
        let lhs = self.meta_conj()?;
        if self.eat(&Tok::KwU) {
            let rhs = self.meta()?;
            Ok(TemporalGradedFormula::until(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn meta_conj(&mut self) -> Result<TemporalGradedFormula, ParseError> {
        let mut a = self.meta_unary()?;
        while self.eat(&Tok::Amp) {
            let b = self.meta_unary()?;
            a = TemporalGradedFormula::and(a, b);
        }
        Ok(a)
    }

    fn meta_unary(&mut self) -> Result<TemporalGradedFormula, ParseError> {
        match self.peek() {
            Some(Tok::Tilde) => {
                self.idx += 1;
                Ok(TemporalGradedFormula::not(self.meta_unary()?))
            }
            Some(Tok::KwX) => {
                self.idx += 1;
                Ok(TemporalGradedFormula::next(self.meta_unary()?))
            }
            Some(Tok::KwF) => {
                self.idx += 1;
                Ok(TemporalGradedFormula::eventually(self.meta_unary()?))
            }
            Some(Tok::KwG) => {
                self.idx += 1;
                Ok(TemporalGradedFormula::always(self.meta_unary()?))
            }
            Some(Tok::LParen) => {
                // Either a graded atom `(A -> B) >= q` or a parenthesized
                // meta formula; try the atom reading first and backtrack.
                let save = self.idx;
                match self.atom() {
                    Ok(atom) => Ok(atom),
                    Err(atom_err) => {
                        self.idx = save;
                        self.idx += 1; // consume `(`
                        let inner = self.meta().map_err(|meta_err| {
                            // Report whichever attempt got further.
                            if err_pos(&meta_err) >= err_pos(&atom_err) {
                                meta_err
                            } else {
                                atom_err.clone()
                            }
                        })?;
                        self.expect(Tok::RParen, "`)`").map_err(|e| {
                            if err_pos(&e) >= err_pos(&atom_err) {
                                e
                            } else {
                                atom_err
                            }
                        })?;
                        Ok(inner)
                    }
                }
            }
            _ => Err(self.error("expected graded formula")),
        }
    }

    fn atom(&mut self) -> Result<TemporalGradedFormula, ParseError> {
        let open_pos = self.pos();
        self.expect(Tok::LParen, "`(`")?;
        let inner = self.formula(false)?;
        self.expect(Tok::RParen, "`)`")?;
        let cmp = match self.peek() {
            Some(Tok::Ge) => {
                self.idx += 1;
                Cmp::Ge
            }
            Some(Tok::Le) => {
                self.idx += 1;
                Cmp::Le
            }
            _ => return Err(self.error("expected `>=` or `<=` after graded implication")),
        };
        let deg_pos = self.pos();
        let raw = match self.bump() {
            Some(Tok::Number(n)) => n,
            _ => {
                return Err(ParseError::Syntax {
                    pos: deg_pos,
                    msg: "expected threshold degree".into(),
                })
            }
        };
        let threshold = raw.parse::<Degree>().map_err(|e| match e {
            DegreeError::OutOfRange(_) => {
                ParseError::ThresholdRange { pos: deg_pos, value: raw.clone() }
            }
            _ => ParseError::Syntax { pos: deg_pos, msg: format!("bad degree `{raw}`") },
        })?;
        match inner {
            Formula::Implies(lhs, rhs) => Ok(TemporalGradedFormula::Atom(GradedImplication {
                lhs: *lhs,
                rhs: *rhs,
                cmp,
                threshold,
            })),
            _ => Err(ParseError::Syntax {
                pos: open_pos,
                msg: "graded implication must be an implication `A -> B`".into(),
            }),
        }
    }
}

fn err_pos(e: &ParseError) -> usize {
    match e {
        ParseError::Syntax { pos, .. }
        | ParseError::NestedTypicality { pos }
        | ParseError::ThresholdRange { pos, .. } => *pos,
    }
}

/// Parses an object-level formula.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text)?;
    let f = p.formula(false)?;
    p.expect_end()?;
    Ok(f)
}

/// Parses a temporal graded formula.
pub fn parse_graded(text: &str) -> Result<TemporalGradedFormula, ParseError> {
    let mut p = Parser::new(text)?;
    let g = p.meta()?;
    p.expect_end()?;
    Ok(g)
}
