//! Recursive-descent reader for index literals such as `2^1,4^2 @ F(1,2;4)`.

use super::{validate, Entry, Schubert, SchubertIndex, Space, SpaceKind};
use crate::error::{Error, Result, Violation};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Tok {
    Nat(u32),
    Word(String),
    Sym(char),
}

pub(crate) struct Lexer {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

impl Lexer {
    pub(crate) fn new(text: &str) -> Result<Lexer> {
        let bytes = text.as_bytes();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            if c.is_ascii_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v = text[start..i]
                    .parse::<u32>()
                    .map_err(|_| syntax(start, "number too large"))?;
                toks.push((start, Tok::Nat(v)));
            } else if c.is_ascii_alphabetic() {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                toks.push((start, Tok::Word(text[start..i].to_string())));
            } else if b"()|,;^@:".contains(&c) {
                toks.push((i, Tok::Sym(c as char)));
                i += 1;
            } else {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(syntax(i, format!("unexpected character '{}'", ch)));
            }
        }
        Ok(Lexer {
            toks,
            pos: 0,
            end: text.len(),
        })
    }

    pub(crate) fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    pub(crate) fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    pub(crate) fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(syntax(self.offset(), format!("expected '{}'", c)))
        }
    }

    pub(crate) fn nat(&mut self) -> Result<u32> {
        let at = self.offset();
        match self.next() {
            Some(Tok::Nat(v)) => Ok(v),
            _ => Err(syntax(at, "expected a number")),
        }
    }

    pub(crate) fn word(&mut self) -> Result<String> {
        let at = self.offset();
        match self.next() {
            Some(Tok::Word(w)) => Ok(w),
            _ => Err(syntax(at, "expected a name")),
        }
    }

    pub(crate) fn finish(&self) -> Result<()> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(syntax(self.offset(), "trailing input"))
        }
    }
}

/// A list of values, each optionally carrying a `^block` label.
#[derive(Debug)]
enum Seq {
    Plain(Vec<u32>),
    Flagged(Vec<Entry>),
}

impl Seq {
    fn is_empty(&self) -> bool {
        match self {
            Seq::Plain(v) => v.is_empty(),
            Seq::Flagged(v) => v.is_empty(),
        }
    }
}

fn parse_seq(lx: &mut Lexer) -> Result<Seq> {
    if !matches!(lx.peek(), Some(Tok::Nat(_))) {
        return Ok(Seq::Plain(Vec::new()));
    }
    let mut plain = Vec::new();
    let mut flagged = Vec::new();
    let mut labelled: Option<bool> = None;
    loop {
        let at = lx.offset();
        let v = lx.nat()?;
        let has = lx.eat('^');
        match labelled {
            None => labelled = Some(has),
            Some(l) if l != has => {
                return Err(syntax(at, "mix of labelled and unlabelled entries"));
            }
            _ => {}
        }
        if has {
            flagged.push(Entry::new(v, lx.nat()?));
        } else {
            plain.push(v);
        }
        if !lx.eat(',') {
            break;
        }
    }
    Ok(if labelled == Some(true) {
        Seq::Flagged(flagged)
    } else {
        Seq::Plain(plain)
    })
}

/// `G(k,n)`, `F(d1,...,dk;n)` and the orthogonal/symplectic variants.
pub(crate) fn parse_space_tokens(lx: &mut Lexer) -> Result<Space> {
    let at = lx.offset();
    let name = lx.word()?;
    let kind = SpaceKind::from_prefix(&name)
        .ok_or_else(|| syntax(at, format!("unknown space kind '{}'", name)))?;
    lx.expect('(')?;
    let mut dims = vec![lx.nat()?];
    while lx.eat(',') {
        dims.push(lx.nat()?);
    }
    let n;
    if kind.is_flag() {
        lx.expect(';')?;
        n = lx.nat()?;
    } else {
        if lx.peek() == Some(&Tok::Sym(';')) {
            return Err(syntax(lx.offset(), format!("{} takes (k,n)", name)));
        }
        if dims.len() != 2 {
            return Err(syntax(at, format!("{} takes exactly (k,n)", name)));
        }
        n = dims.pop().unwrap_or(0);
    }
    lx.expect(')')?;
    Space::new(kind, dims, n)
}

pub fn parse_space(text: &str) -> Result<Space> {
    let mut lx = Lexer::new(text)?;
    let s = parse_space_tokens(&mut lx)?;
    lx.finish()?;
    Ok(s)
}

fn with_blocks(seq: Seq) -> Vec<Entry> {
    match seq {
        Seq::Plain(v) => v.into_iter().map(|x| Entry::new(x, 1)).collect(),
        Seq::Flagged(v) => v,
    }
}

fn without_blocks(seq: Seq) -> Option<Vec<u32>> {
    match seq {
        Seq::Plain(v) => Some(v),
        Seq::Flagged(v) if v.iter().all(|e| e.block == 1) => {
            Some(v.into_iter().map(|e| e.value).collect())
        }
        Seq::Flagged(_) => None,
    }
}

fn canonical_b_plain(mut b: Vec<u32>) -> Vec<u32> {
    if b.len() > 1 && b.windows(2).all(|w| w[0] > w[1]) {
        b.reverse();
    }
    b
}

fn canonical_b_flagged(mut b: Vec<Entry>) -> Vec<Entry> {
    if b.len() > 1 && b.windows(2).all(|w| w[0].value > w[1].value) {
        b.reverse();
    }
    b
}

fn shape_error(space: &Space, found: &str) -> Error {
    Error::Invalid(vec![Violation::new(
        "shape",
        format!("{} does not take {}", space, found),
    )])
}

/// Parses and validates a full literal. Descending b lists are reversed.
pub fn parse_index(text: &str) -> Result<Schubert> {
    let s = parse_index_unchecked(text)?;
    let v = validate(&s.space, &s.index);
    if v.is_empty() {
        Ok(s)
    } else {
        Err(Error::Invalid(v))
    }
}

/// Reads the literal and checks its shape against the space, but not the
/// numeric invariants.
pub fn parse_index_unchecked(text: &str) -> Result<Schubert> {
    let mut lx = Lexer::new(text)?;
    let pair = lx.eat('(');
    let (first, second) = if pair {
        let a = parse_seq(&mut lx)?;
        lx.expect('|')?;
        let b = parse_seq(&mut lx)?;
        lx.expect(')')?;
        (a, Some(b))
    } else {
        let a = parse_seq(&mut lx)?;
        if a.is_empty() {
            return Err(syntax(lx.offset(), "expected an index"));
        }
        (a, None)
    };
    lx.expect('@')?;
    let space = parse_space_tokens(&mut lx)?;
    lx.finish()?;

    let single = space.steps.len() == 1;
    let index = match (space.kind, second) {
        (SpaceKind::Grass, None) => {
            SchubertIndex::Plain(without_blocks(first).ok_or_else(|| {
                shape_error(&space, "block labels above 1")
            })?)
        }
        (SpaceKind::Flag, None) => match first {
            Seq::Flagged(e) => SchubertIndex::Flagged(e),
            Seq::Plain(_) if !single => {
                return Err(shape_error(&space, "an unlabelled index"));
            }
            plain => SchubertIndex::Flagged(with_blocks(plain)),
        },
        (SpaceKind::OrthGrass | SpaceKind::SympGrass, Some(b)) => {
            let a = without_blocks(first)
                .ok_or_else(|| shape_error(&space, "block labels above 1"))?;
            let b = without_blocks(b)
                .ok_or_else(|| shape_error(&space, "block labels above 1"))?;
            SchubertIndex::Pair {
                a,
                b: canonical_b_plain(b),
            }
        }
        (SpaceKind::OrthFlag | SpaceKind::SympFlag, Some(b)) => {
            let flagged = matches!(first, Seq::Flagged(_)) || matches!(b, Seq::Flagged(_));
            let bare_nonempty = (matches!(first, Seq::Plain(_)) && !first.is_empty())
                || (matches!(b, Seq::Plain(_)) && !b.is_empty());
            if (!flagged || bare_nonempty) && !single {
                return Err(shape_error(&space, "unlabelled entries"));
            }
            SchubertIndex::FlaggedPair {
                a: with_blocks(first),
                b: canonical_b_flagged(with_blocks(b)),
            }
        }
        (_, None) => return Err(shape_error(&space, "a single sequence")),
        (_, Some(_)) => return Err(shape_error(&space, "an (a | b) pair")),
    };
    Ok(Schubert { space, index })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::entries;

    #[test]
    fn flagged_literal() {
        let s = parse_index("2^1,4^2 @ F(1,2;4)").unwrap();
        assert_eq!(s.index, SchubertIndex::Flagged(entries(&[(2, 1), (4, 2)])));
        assert_eq!(s.to_string(), "2^1,4^2 @ F(1,2;4)");
    }

    #[test]
    fn descending_b_is_reversed() {
        let s = parse_index("(3 | 3,1,0) @ OG(4,11)").unwrap();
        assert_eq!(
            s.index,
            SchubertIndex::Pair {
                a: vec![3],
                b: vec![0, 1, 3]
            }
        );
        let f = parse_index("(3^2 | 3^1,1^1,0^2) @ OF(2,4;11)").unwrap();
        assert_eq!(f.index.b_values(), vec![0, 1, 3]);
    }

    #[test]
    fn empty_sides() {
        let s = parse_index("(|1,3)@OG(2,11)").unwrap();
        assert_eq!(s.to_string(), "(|1,3) @ OG(2,11)");
        let t = parse_index("(1,2|) @ OG(2,4)").unwrap();
        assert_eq!(t.index.b_values(), Vec::<u32>::new());
    }

    #[test]
    fn offset_violation() {
        match parse_index("(2 | 1) @ OG(2,7)") {
            Err(Error::Invalid(v)) => assert_eq!(v[0].rule, "offset"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_positions() {
        match parse_index("1,3 @ H(2,4)") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 6),
            other => panic!("{other:?}"),
        }
        match parse_index("1,3 # G(2,4)") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_index("1^1,3 @ F(1,2;4)"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_index("1,3 @ G(2;4)"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn single_step_shapes_interchange() {
        let f = parse_index("1,3 @ F(2;4)").unwrap();
        assert!(f.index.is_flagged());
        let g = parse_index("1^1,3^1 @ G(2,4)").unwrap();
        assert_eq!(g.index, SchubertIndex::Plain(vec![1, 3]));
        assert!(parse_index("1,3 @ F(1,2;4)").is_err());
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(matches!(parse_index("9,9 @ G(2,4)"), Err(Error::Invalid(_))));
    }
}
