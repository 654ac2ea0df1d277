//! S-expression reader. `;` starts a comment running to end of line.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sexp {
    Atom { text: String, pos: Pos },
    List { items: Vec<Sexp>, pos: Pos },
}

impl Sexp {
    pub fn pos(&self) -> Pos {
        match self {
            Sexp::Atom { pos, .. } | Sexp::List { pos, .. } => *pos,
        }
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            Sexp::Atom { text, .. } => Some(text),
            Sexp::List { .. } => None,
        }
    }

    pub fn as_list(&self) -> Option<&[Sexp]> {
        match self {
            Sexp::List { items, .. } => Some(items),
            Sexp::Atom { .. } => None,
        }
    }

    /// The head symbol of a nonempty list.
    pub fn head(&self) -> Option<&str> {
        self.as_list()?.first()?.as_atom()
    }
}

impl fmt::Display for Sexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sexp::Atom { text, .. } => f.write_str(text),
            Sexp::List { items, .. } => {
                f.write_str("(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    item.fmt(f)?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{0}: unexpected ')'")]
    UnexpectedClose(Pos),
    #[error("{0}: unclosed '('")]
    Unclosed(Pos),
}

impl ParseError {
    pub fn pos(&self) -> Pos {
        match self {
            ParseError::UnexpectedClose(p) | ParseError::Unclosed(p) => *p,
        }
    }
}

struct Reader<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl Reader<'_> {
    fn pos(&self) -> Pos {
        Pos { line: self.line, col: self.col }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c == ';' {
                while self.chars.peek().is_some_and(|&c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    /// `None` at end of input.
    fn read(&mut self) -> Option<Result<Sexp, ParseError>> {
        self.skip_trivia();
        let pos = self.pos();
        match *self.chars.peek()? {
            ')' => {
                self.bump();
                Some(Err(ParseError::UnexpectedClose(pos)))
            }
            '(' => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_trivia();
                    match self.chars.peek() {
                        None => return Some(Err(ParseError::Unclosed(pos))),
                        Some(')') => {
                            self.bump();
                            return Some(Ok(Sexp::List { items, pos }));
                        }
                        Some(_) => match self.read()? {
                            Ok(item) => items.push(item),
                            Err(e) => return Some(Err(e)),
                        },
                    }
                }
            }
            _ => {
                let mut text = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_whitespace() || matches!(c, '(' | ')' | ';') {
                        break;
                    }
                    text.push(c);
                    self.bump();
                }
                Some(Ok(Sexp::Atom { text, pos }))
            }
        }
    }
}

/// Every top-level expression in `text`.
pub fn parse_all(text: &str) -> Result<Vec<Sexp>, ParseError> {
    let mut r = Reader { chars: text.chars().peekable(), line: 1, col: 1 };
    std::iter::from_fn(|| r.read()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_lists_and_comments() {
        let es = parse_all("(subset? (pr (at tag 0 3)) ; trailing\n  x)\ny").unwrap();
        assert_eq!(es.len(), 2);
        assert_eq!(es[0].to_string(), "(subset? (pr (at tag 0 3)) x)");
        assert_eq!(es[0].head(), Some("subset?"));
        assert_eq!(es[1].pos(), Pos { line: 3, col: 1 });
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_all("(a\n  (b c)"), Err(ParseError::Unclosed(Pos { line: 1, col: 1 })));
        assert_eq!(parse_all("a )"), Err(ParseError::UnexpectedClose(Pos { line: 1, col: 3 })));
    }

    #[test]
    fn blank_input() {
        assert!(parse_all("  ; nothing\n").unwrap().is_empty());
    }
}
