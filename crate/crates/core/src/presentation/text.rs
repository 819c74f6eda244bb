//! `< gen, gen, ... | relator, relator, ... >`
//!
//! Generators are identifiers `[A-Za-z][A-Za-z0-9_]*`, separated by commas
//! or whitespace. A relator is a juxtaposition of factors `gen` or
//! `gen^exp`, optionally separated by `*`; `1` is the empty word. Whitespace
//! is insignificant except as a separator.

use std::collections::HashMap;

use super::{GroupPresentation, Word};
use crate::{Error, Result};

pub fn print_presentation(p: &GroupPresentation) -> String {
    let gens = p.generators().join(", ");
    let rels: Vec<String> = p.relators().iter().map(|w| p.render_word(w)).collect();
    if rels.is_empty() {
        format!("< {gens} | >")
    } else {
        format!("< {gens} | {} >", rels.join(", "))
    }
}

pub fn parse_presentation(text: &str) -> Result<GroupPresentation> {
    Parser::new(text).presentation()
}

/// A single word over the generators of `p`, in relator syntax.
pub fn parse_word(p: &GroupPresentation, text: &str) -> Result<Word> {
    let mut parser = Parser::new(text);
    if let Some(e) = parser.lex_error.take() {
        return Err(e);
    }
    let index: HashMap<String, usize> =
        p.generators().iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
    let w = parser.relator(&index)?;
    if *parser.peek() != Tok::End {
        return parser.error("end of word");
    }
    Ok(w)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    LAngle,
    RAngle,
    Bar,
    Comma,
    Caret,
    Star,
    Ident(String),
    Int(i64),
    Minus,
    Plus,
    End,
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    lex_error: Option<Error>,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::LAngle => "`<`".into(),
        Tok::RAngle => "`>`".into(),
        Tok::Bar => "`|`".into(),
        Tok::Comma => "`,`".into(),
        Tok::Caret => "`^`".into(),
        Tok::Star => "`*`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Plus => "`+`".into(),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Int(i) => format!("integer `{i}`"),
        Tok::End => "end of input".into(),
    }
}

impl Parser {
    fn new(text: &str) -> Self {
        let mut toks = Vec::new();
        let mut lex_error = None;
        let mut chars = text.chars().peekable();
        let (mut line, mut col) = (1usize, 1usize);
        while let Some(&c) = chars.peek() {
            let (tl, tc) = (line, col);
            let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
                let c = chars.next();
                if c == Some('\n') {
                    line += 1;
                    col = 1;
                } else {
                    col += 1;
                }
                c
            };
            let single = match c {
                '<' => Some(Tok::LAngle),
                '>' => Some(Tok::RAngle),
                '|' => Some(Tok::Bar),
                ',' => Some(Tok::Comma),
                '^' => Some(Tok::Caret),
                '*' => Some(Tok::Star),
                '-' => Some(Tok::Minus),
                '+' => Some(Tok::Plus),
                _ => None,
            };
            if let Some(t) = single {
                bump(&mut chars);
                toks.push((t, tl, tc));
            } else if c.is_whitespace() {
                bump(&mut chars);
            } else if c.is_ascii_alphabetic() {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        bump(&mut chars);
                    } else {
                        break;
                    }
                }
                toks.push((Tok::Ident(s), tl, tc));
            } else if c.is_ascii_digit() {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        bump(&mut chars);
                    } else {
                        break;
                    }
                }
                match s.parse::<i64>() {
                    Ok(v) => toks.push((Tok::Int(v), tl, tc)),
                    Err(_) => {
                        lex_error = Some(Error::Syntax {
                            line: tl,
                            column: tc,
                            message: format!("integer `{s}` out of range"),
                        });
                        break;
                    }
                }
            } else {
                lex_error = Some(Error::Syntax {
                    line: tl,
                    column: tc,
                    message: format!("unexpected character `{c}`"),
                });
                break;
            }
        }
        toks.push((Tok::End, line, col));
        Parser {
            toks,
            pos: 0,
            lex_error,
        }
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn here(&self) -> (usize, usize) {
        let (_, l, c) = &self.toks[self.pos];
        (*l, *c)
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> Result<T> {
        let (line, column) = self.here();
        Err(Error::Syntax {
            line,
            column,
            message: format!("expected {expected}, found {}", describe(self.peek())),
        })
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if *self.peek() == t {
            self.advance();
            Ok(())
        } else {
            self.error(what)
        }
    }

    fn presentation(mut self) -> Result<GroupPresentation> {
        if let Some(e) = self.lex_error.take() {
            // Report the lexer error only if parsing would otherwise reach it.
            let stop = self.toks.len() - 1;
            let res = self.presentation_tokens();
            return match res {
                Err(pe) if self.pos < stop => Err(pe),
                _ => Err(e),
            };
        }
        self.presentation_tokens()
    }

    fn presentation_tokens(&mut self) -> Result<GroupPresentation> {
        self.expect(Tok::LAngle, "`<`")?;
        let mut gens: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        loop {
            match self.peek().clone() {
                Tok::Ident(name) => {
                    let (line, column) = self.here();
                    if index.contains_key(&name) {
                        return Err(Error::Syntax {
                            line,
                            column,
                            message: format!("generator `{name}` declared twice"),
                        });
                    }
                    self.advance();
                    index.insert(name.clone(), gens.len());
                    gens.push(name);
                    if *self.peek() == Tok::Comma {
                        self.advance();
                        if !matches!(self.peek(), Tok::Ident(_)) {
                            return self.error("generator name");
                        }
                    }
                }
                Tok::Bar => {
                    self.advance();
                    break;
                }
                _ => return self.error("generator name or `|`"),
            }
        }

        let mut relators = Vec::new();
        if *self.peek() != Tok::RAngle {
            loop {
                relators.push(self.relator(&index)?);
                match self.peek() {
                    Tok::Comma => {
                        self.advance();
                    }
                    Tok::RAngle => break,
                    _ => return self.error("`,` or `>`"),
                }
            }
        }
        self.expect(Tok::RAngle, "`>`")?;
        if *self.peek() != Tok::End {
            return self.error("end of input");
        }
        GroupPresentation::new(gens, relators)
    }

    fn relator(&mut self, index: &HashMap<String, usize>) -> Result<Word> {
        let mut w = Word::identity();
        let mut factors = 0;
        loop {
            match self.peek().clone() {
                Tok::Ident(name) => {
                    let (line, column) = self.here();
                    let g = *index.get(&name).ok_or(Error::UndeclaredGenerator {
                        name: name.clone(),
                        line,
                        column,
                    })?;
                    self.advance();
                    let e = if *self.peek() == Tok::Caret {
                        self.advance();
                        self.integer()?
                    } else {
                        1
                    };
                    w = w.concat(&Word::power(g, e));
                }
                Tok::Int(1) => {
                    self.advance();
                }
                _ if factors == 0 => return self.error("relator"),
                _ => return Ok(w),
            }
            factors += 1;
            if *self.peek() == Tok::Star {
                self.advance();
                if !matches!(self.peek(), Tok::Ident(_) | Tok::Int(1)) {
                    return self.error("factor after `*`");
                }
            }
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let negative = match self.peek() {
            Tok::Minus => {
                self.advance();
                true
            }
            Tok::Plus => {
                self.advance();
                false
            }
            _ => false,
        };
        match self.peek().clone() {
            Tok::Int(v) => {
                self.advance();
                Ok(if negative { -v } else { v })
            }
            _ => self.error("integer exponent"),
        }
    }
}
