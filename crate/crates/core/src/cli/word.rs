//! The textual word syntax: `(12)_a`, `(1,12)_g2`, `h_{13}(g2)`, `s_2(a)`,
//! each optionally followed by `^-1`.

use crate::error::{Error, Result};
use crate::morphisms::IndexedLetter;
use crate::presentation::{GeneratorSymbol, Letter, Presentation, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LetterKind {
    Transposition { i: usize, j: usize },
    H { i: usize, j: usize },
    Coxeter { i: usize },
}

/// A parsed letter with its label kept as text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedLetter {
    pub kind: LetterKind,
    pub label: String,
    pub inverse: bool,
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::MalformedWord(format!("{msg} at offset {} in `{}`", self.pos, self.s))
    }

    fn rest(&self) -> &'a str {
        &self.s[self.pos..]
    }

    fn eat(&mut self, p: &str) -> bool {
        if self.rest().starts_with(p) {
            self.pos += p.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, p: &str) -> Result<()> {
        if self.eat(p) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{p}`")))
        }
    }

    fn skip_ws(&mut self) {
        let t = self.rest().trim_start();
        self.pos = self.s.len() - t.len();
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let r = self.rest();
        let end = r.find(|c: char| !f(c)).unwrap_or(r.len());
        self.pos += end;
        &r[..end]
    }

    fn number(&mut self) -> Result<usize> {
        let d = self.take_while(|c| c.is_ascii_digit());
        d.parse().map_err(|_| self.err("expected a number"))
    }

    /// `12` (two single digits) or `1,12`, up to the closing delimiter.
    fn pair(&mut self, close: char) -> Result<(usize, usize)> {
        let body = self.take_while(|c| c != close);
        let parsed = match body.split_once(',') {
            Some((a, b)) => a.trim().parse().ok().zip(b.trim().parse().ok()),
            None if body.len() == 2 && body.bytes().all(|b| b.is_ascii_digit()) => {
                let b = body.as_bytes();
                Some(((b[0] - b'0') as usize, (b[1] - b'0') as usize))
            }
            None => None,
        };
        parsed.ok_or_else(|| self.err(&format!("bad index pair `{body}`")))
    }

    fn label_until(&mut self, close: char) -> Result<String> {
        let l = self.take_while(|c| c != close).trim();
        if l.is_empty() {
            return Err(self.err("empty label"));
        }
        Ok(l.to_string())
    }

    fn letter(&mut self) -> Result<ParsedLetter> {
        let (kind, label) = if self.eat("(") {
            let (i, j) = self.pair(')')?;
            self.expect(")")?;
            self.expect("_")?;
            let l = self.take_while(|c| !c.is_whitespace() && c != '^' && c != '(');
            if l.is_empty() {
                return Err(self.err("empty label"));
            }
            (LetterKind::Transposition { i, j }, l.to_string())
        } else if self.eat("h_{") {
            let (i, j) = self.pair('}')?;
            self.expect("}")?;
            self.expect("(")?;
            let l = self.label_until(')')?;
            self.expect(")")?;
            (LetterKind::H { i, j }, l)
        } else if self.eat("s_") {
            let i = self.number()?;
            self.expect("(")?;
            let l = self.label_until(')')?;
            self.expect(")")?;
            (LetterKind::Coxeter { i }, l)
        } else {
            return Err(self.err("expected `(`, `h_{` or `s_`"));
        };
        let inverse = self.eat("^-1");
        Ok(ParsedLetter { kind, label, inverse })
    }
}

/// Parses a whitespace-separated word. The empty string is the empty word.
pub fn parse_word(text: &str) -> Result<Vec<ParsedLetter>> {
    let mut c = Cursor { s: text, pos: 0 };
    let mut out = Vec::new();
    c.skip_ws();
    while !c.rest().is_empty() {
        out.push(c.letter()?);
        let before = c.pos;
        c.skip_ws();
        if c.pos == before && !c.rest().is_empty() {
            return Err(c.err("letters must be separated by whitespace"));
        }
    }
    Ok(out)
}

/// Converts a parsed word to transposition letters, turning `s_i(a)` into
/// `(i,i+1)_a`.
pub fn to_transposition_letters(word: &[ParsedLetter]) -> Result<Vec<IndexedLetter<String>>> {
    word.iter()
        .map(|l| {
            let (i, j) = match l.kind {
                LetterKind::Transposition { i, j } => (i, j),
                LetterKind::Coxeter { i } => (i, i + 1),
                LetterKind::H { .. } => {
                    return Err(Error::UnsupportedSymbol("h letters cannot be rewritten".into()))
                }
            };
            Ok(IndexedLetter { i, j, label: l.label.clone(), inverse: l.inverse })
        })
        .collect()
}

/// Formats `h_{ij}(a)` letters, space-separated.
pub fn format_h_word(word: &[IndexedLetter<String>]) -> String {
    let parts: Vec<String> = word
        .iter()
        .map(|l| {
            let idx = if l.i < 10 && l.j < 10 { format!("{}{}", l.i, l.j) } else { format!("{},{}", l.i, l.j) };
            format!("h_{{{idx}}}({}){}", l.label, if l.inverse { "^-1" } else { "" })
        })
        .collect();
    parts.join(" ")
}

/// Resolves a parsed word against the generators of `p`, reading labels
/// with the parameter group of `p`.
pub fn resolve_word(p: &Presentation, word: &[ParsedLetter]) -> Result<Word> {
    let g = p.group().ok_or_else(|| Error::UnsupportedSymbol("presentation without a parameter group".into()))?;
    word.iter()
        .map(|l| {
            let label = g.parse_label(&l.label).ok_or_else(|| Error::InvalidSymbol(format!("label `{}`", l.label)))?;
            let sym = match l.kind {
                LetterKind::Transposition { i, j } => GeneratorSymbol::Transposition { i, j, label },
                LetterKind::H { i, j } => GeneratorSymbol::H { i, j, label },
                LetterKind::Coxeter { i } => GeneratorSymbol::Coxeter { i, label },
            };
            let k = p.index_of(&sym).ok_or_else(|| Error::InvalidSymbol(sym.display(Some(g))))?;
            Ok(Letter::new(k, l.inverse))
        })
        .collect::<Result<Vec<_>>>()
        .map(Word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_builtin;
    use crate::presentation::transposition_presentation;

    fn t(i: usize, j: usize, label: &str, inverse: bool) -> ParsedLetter {
        ParsedLetter { kind: LetterKind::Transposition { i, j }, label: label.into(), inverse }
    }

    #[test]
    fn parses_all_forms() {
        let w = parse_word("(12)_a (1,12)_g2^-1  h_{13}(g2) s_2(a)^-1").unwrap();
        assert_eq!(w[0], t(1, 2, "a", false));
        assert_eq!(w[1], t(1, 12, "g2", true));
        assert_eq!(w[2], ParsedLetter { kind: LetterKind::H { i: 1, j: 3 }, label: "g2".into(), inverse: false });
        assert_eq!(w[3], ParsedLetter { kind: LetterKind::Coxeter { i: 2 }, label: "a".into(), inverse: true });
        assert!(parse_word("").unwrap().is_empty());
        assert!(parse_word("   ").unwrap().is_empty());
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["(1)_a", "(12)", "(12)_", "x", "h_{12}a", "s_(a)", "(12)_a(13)_b", "(123)_a"] {
            assert!(parse_word(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn resolves_against_presentation() {
        let g = make_builtin("c2").unwrap();
        let p = transposition_presentation(3, &g).unwrap();
        let w = resolve_word(&p, &parse_word("(12)_g1 (13)_e^-1").unwrap()).unwrap();
        assert_eq!(p.display_word(&w), "(12)_g1 (13)_e^-1");
        assert!(resolve_word(&p, &parse_word("(12)_g5").unwrap()).is_err());
        assert!(resolve_word(&p, &parse_word("(14)_e").unwrap()).is_err());
    }
}
