//! Cycle-notation parser.
//!
//! ```text
//! GENERATORS := GEN (";" GEN)*
//! GEN        := CYCLE+ | ""
//! CYCLE      := "(" INT ((","|SPACE)+ INT)* ")"
//! ```
//!
//! Integers are 1-based and at most `n`. Whitespace is also accepted
//! between cycles and around `;`; inside a cycle only the separators above
//! are allowed.

use crate::error::{Error, Result};
use crate::permgroup::Permutation;

fn is_space(b: u8) -> bool {
    b == b' ' || b == b'\t'
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_spaces(&mut self) {
        while self.peek().is_some_and(is_space) {
            self.pos += 1;
        }
    }

    fn malformed(&self, reason: &'static str) -> Error {
        Error::Malformed {
            offset: self.pos,
            reason,
        }
    }

    fn int(&mut self, n: usize) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.malformed("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        match digits.parse::<usize>() {
            Ok(v) if (1..=n).contains(&v) => Ok(v),
            _ => Err(Error::EntryOutOfRange {
                entry: digits.to_string(),
                n,
            }),
        }
    }

    fn cycle(&mut self, n: usize) -> Result<Vec<usize>> {
        debug_assert_eq!(self.peek(), Some(b'('));
        self.pos += 1;
        let mut entries = vec![self.int(n)?];
        loop {
            match self.peek() {
                Some(b')') => {
                    self.pos += 1;
                    return Ok(entries);
                }
                Some(b) if b == b',' || is_space(b) => {
                    while self.peek().is_some_and(|b| b == b',' || is_space(b)) {
                        self.pos += 1;
                    }
                    entries.push(self.int(n)?);
                }
                Some(_) => return Err(self.malformed("unexpected character in cycle")),
                None => return Err(self.malformed("unclosed parenthesis")),
            }
        }
    }

    /// Parses one GEN, stopping at `;` or end of input.
    fn generator(&mut self, n: usize) -> Result<Permutation> {
        let mut cycles = Vec::new();
        loop {
            self.skip_spaces();
            match self.peek() {
                None | Some(b';') => break,
                Some(b'(') => cycles.push(self.cycle(n)?),
                Some(_) => return Err(self.malformed("expected '('")),
            }
        }
        Permutation::from_cycles(n, &cycles)
    }
}

/// Parses a product of disjoint cycles, e.g. `"(1 2 3)(4 5)"`. The empty
/// string is the identity.
pub fn parse_permutation(text: &str, n: usize) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut cur = Cursor::new(text);
    let perm = cur.generator(n)?;
    if cur.peek().is_some() {
        return Err(cur.malformed("unexpected ';' in a single permutation"));
    }
    Ok(perm)
}

/// Parses a `;`-separated list of generators.
pub fn parse_generators(text: &str, n: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut cur = Cursor::new(text);
    let mut gens = vec![cur.generator(n)?];
    while cur.peek() == Some(b';') {
        cur.pos += 1;
        gens.push(cur.generator(n)?);
    }
    Ok(gens)
}
