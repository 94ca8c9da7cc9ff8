use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::words::{is_letter_token, Alphabet, Letter, Word};

/// Regular expression over an alphabet: letters, the empty word `1`, and the
/// rational operations union, product and star.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RegexExpr {
    EmptyWord,
    Letter(Letter),
    Concat(Vec<RegexExpr>),
    Union(Vec<RegexExpr>),
    Star(Box<RegexExpr>),
}

impl RegexExpr {
    /// Concatenation that drops `1` factors, flattens nested products and
    /// collapses repeated identical stars (`X* X* = X*`).
    pub fn concat(parts: Vec<RegexExpr>) -> RegexExpr {
        let mut flat: Vec<RegexExpr> = Vec::new();
        for p in parts {
            let items = match p {
                RegexExpr::EmptyWord => continue,
                RegexExpr::Concat(inner) => inner,
                other => vec![other],
            };
            for item in items {
                if matches!(item, RegexExpr::Star(_)) && flat.last() == Some(&item) {
                    continue;
                }
                flat.push(item);
            }
        }
        match flat.len() {
            0 => RegexExpr::EmptyWord,
            1 => flat.pop().unwrap(),
            _ => RegexExpr::Concat(flat),
        }
    }

    /// Union of a nonempty list; a single alternative is returned as is.
    pub fn union(mut alts: Vec<RegexExpr>) -> RegexExpr {
        assert!(!alts.is_empty(), "union of an empty list");
        if alts.len() == 1 {
            alts.pop().unwrap()
        } else {
            RegexExpr::Union(alts)
        }
    }

    pub fn star(e: RegexExpr) -> RegexExpr {
        match e {
            RegexExpr::EmptyWord => RegexExpr::EmptyWord,
            s @ RegexExpr::Star(_) => s,
            other => RegexExpr::Star(Box::new(other)),
        }
    }

    pub fn word(w: &Word) -> RegexExpr {
        RegexExpr::concat(w.letters().iter().map(|&l| RegexExpr::Letter(l)).collect())
    }

    /// `X*` for an alphabet of `n` letters.
    pub fn all_words(n: usize) -> RegexExpr {
        RegexExpr::star(RegexExpr::union((0..n).map(RegexExpr::Letter).collect()))
    }

    /// Language `L X*`.
    pub fn close_right(&self, n: usize) -> RegexExpr {
        RegexExpr::concat(vec![self.clone(), RegexExpr::all_words(n)])
    }

    /// Language `X* L X*`.
    pub fn close_two_sided(&self, n: usize) -> RegexExpr {
        RegexExpr::concat(vec![
            RegexExpr::all_words(n),
            self.clone(),
            RegexExpr::all_words(n),
        ])
    }

    /// The single word denoted by a star-free, union-free expression.
    pub fn as_word(&self) -> Option<Word> {
        fn collect(e: &RegexExpr, out: &mut Vec<Letter>) -> bool {
            match e {
                RegexExpr::EmptyWord => true,
                RegexExpr::Letter(l) => {
                    out.push(*l);
                    true
                }
                RegexExpr::Concat(parts) => parts.iter().all(|p| collect(p, out)),
                RegexExpr::Union(_) | RegexExpr::Star(_) => false,
            }
        }
        let mut letters = Vec::new();
        collect(self, &mut letters).then(|| Word::new(letters))
    }

    pub fn max_letter(&self) -> Option<Letter> {
        match self {
            RegexExpr::EmptyWord => None,
            RegexExpr::Letter(l) => Some(*l),
            RegexExpr::Concat(v) | RegexExpr::Union(v) => v.iter().filter_map(Self::max_letter).max(),
            RegexExpr::Star(e) => e.max_letter(),
        }
    }

    /// End positions `j` such that `word[start..j]` is in the language.
    ///
    /// A direct set-based matcher, independent of the automaton pipeline.
    pub fn end_positions(&self, word: &[Letter], start: usize) -> BTreeSet<usize> {
        match self {
            RegexExpr::EmptyWord => BTreeSet::from([start]),
            RegexExpr::Letter(l) => {
                if word.get(start) == Some(l) {
                    BTreeSet::from([start + 1])
                } else {
                    BTreeSet::new()
                }
            }
            RegexExpr::Concat(parts) => {
                let mut cur = BTreeSet::from([start]);
                for p in parts {
                    cur = cur.iter().flat_map(|&s| p.end_positions(word, s)).collect();
                    if cur.is_empty() {
                        break;
                    }
                }
                cur
            }
            RegexExpr::Union(alts) => alts.iter().flat_map(|a| a.end_positions(word, start)).collect(),
            RegexExpr::Star(inner) => {
                let mut reached = BTreeSet::from([start]);
                let mut frontier = vec![start];
                while let Some(s) = frontier.pop() {
                    for e in inner.end_positions(word, s) {
                        if reached.insert(e) {
                            frontier.push(e);
                        }
                    }
                }
                reached
            }
        }
    }

    pub fn matches(&self, word: &Word) -> bool {
        self.end_positions(word.letters(), 0).contains(&word.degree())
    }

    /// Some prefix of `word` is in the language.
    pub fn matches_prefix(&self, word: &Word) -> bool {
        !self.end_positions(word.letters(), 0).is_empty()
    }

    /// Some factor of `word` is in the language.
    pub fn matches_factor(&self, word: &Word) -> bool {
        (0..=word.degree()).any(|s| !self.end_positions(word.letters(), s).is_empty())
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        self.write(alphabet, &mut out, 0);
        out
    }

    // precedence: 0 union, 1 concat, 2 star operand
    fn write(&self, alphabet: &Alphabet, out: &mut String, prec: u8) {
        match self {
            RegexExpr::EmptyWord => out.push('1'),
            RegexExpr::Letter(l) => out.push_str(alphabet.name(*l)),
            RegexExpr::Concat(parts) => {
                let paren = prec > 1;
                if paren {
                    out.push_str("( ");
                }
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        out.push(' ');
                    }
                    p.write(alphabet, out, 2);
                }
                if paren {
                    out.push_str(" )");
                }
            }
            RegexExpr::Union(alts) => {
                let paren = prec > 0;
                if paren {
                    out.push_str("( ");
                }
                for (i, a) in alts.iter().enumerate() {
                    if i > 0 {
                        out.push_str(" | ");
                    }
                    a.write(alphabet, out, 1);
                }
                if paren {
                    out.push_str(" )");
                }
            }
            RegexExpr::Star(inner) => {
                inner.write(alphabet, out, 2);
                let _ = write!(out, "*");
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Letter(String),
    One,
    LParen,
    RParen,
    Bar,
    Star,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        let simple = match c {
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            '|' => Some(Token::Bar),
            '*' => Some(Token::Star),
            _ => None,
        };
        if let Some(tok) = simple {
            tokens.push((pos, tok));
            chars.next();
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let mut end = pos;
        while let Some(&(p, ch)) = chars.peek() {
            if ch.is_whitespace() || "()|*".contains(ch) {
                break;
            }
            end = p + ch.len_utf8();
            chars.next();
        }
        let word = &text[pos..end];
        if word == "1" {
            tokens.push((pos, Token::One));
        } else if is_letter_token(word) {
            tokens.push((pos, Token::Letter(word.to_string())));
        } else {
            return Err(Error::Syntax {
                pos,
                message: format!("invalid token `{word}`"),
            });
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<RegexExpr> {
        let mut alts = vec![self.term()?];
        while self.peek() == Some(&Token::Bar) {
            self.pos += 1;
            alts.push(self.term()?);
        }
        Ok(RegexExpr::union(alts))
    }

    fn term(&mut self) -> Result<RegexExpr> {
        let mut parts = Vec::new();
        while matches!(
            self.peek(),
            Some(Token::Letter(_) | Token::One | Token::LParen)
        ) {
            parts.push(self.factor()?);
        }
        if parts.is_empty() {
            return self.error("expected a letter, `1` or `(`");
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            RegexExpr::Concat(parts)
        })
    }

    fn factor(&mut self) -> Result<RegexExpr> {
        let atom = self.atom()?;
        if self.peek() == Some(&Token::Star) {
            self.pos += 1;
            if self.peek() == Some(&Token::Star) {
                return self.error("repeated `*`");
            }
            return Ok(RegexExpr::Star(Box::new(atom)));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<RegexExpr> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Token::Letter(name)) => {
                self.pos += 1;
                self.alphabet
                    .index_of(&name)
                    .map(RegexExpr::Letter)
                    .map_err(|_| Error::UnknownLetter(format!("{name} (position {at})")))
            }
            Some(Token::One) => {
                self.pos += 1;
                Ok(RegexExpr::EmptyWord)
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return self.error("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => self.error("expected a letter, `1` or `(`"),
        }
    }
}

/// Parses the grammar
///
/// ```text
/// expr   := term { "|" term }
/// term   := factor { factor }
/// factor := atom [ "*" ]
/// atom   := LETTER | "1" | "(" expr ")"
/// ```
///
/// Letters are identifiers declared in `alphabet`, separated by whitespace
/// or punctuation.
pub fn parse_regex(text: &str, alphabet: &Alphabet) -> Result<RegexExpr> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        end: text.len(),
        alphabet,
    };
    let e = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return parser.error("unexpected token");
    }
    Ok(e)
}
