//! Plain-text algebra documents.
//!
//! ```text
//! algebra <name>
//! elements <tok> <tok> ...
//! zero <tok>
//! one <tok>
//! arrow
//! <n rows of n tokens; row i lists element_i -> element_j>
//! ```
//!
//! `#` starts a comment that runs to the end of the line and blank lines are
//! ignored. [`serialize`] emits the canonical rendering, single-space
//! separated, which [`parse`] reads back to an identical document.

use std::collections::HashMap;

use crate::algebra::{valid_name, FiniteAlgebra};
use crate::error::{ParseError, ParseErrorKind, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: String,
    pub elements: Vec<String>,
    pub zero: String,
    pub one: String,
    /// `rows[i][j]` names the value of `elements[i] -> elements[j]`.
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn lex(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let content = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let mut tokens = Vec::new();
        let mut start: Option<usize> = None;
        for (byte, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
            if ch.is_whitespace() {
                if let Some(s) = start.take() {
                    let column = content[..s].chars().count() + 1;
                    tokens.push(Token { text: &content[s..byte], line: idx + 1, column });
                }
            } else if start.is_none() {
                start = Some(byte);
            }
        }
        if !tokens.is_empty() {
            out.push(Line { number: idx + 1, tokens });
        }
    }
    out
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    fn next_line(&mut self, section: &'static str) -> Result<&Line<'a>, ParseError> {
        if self.pos >= self.lines.len() {
            return Err(err(self.last_line + 1, 1, ParseErrorKind::MissingSection(section)));
        }
        self.pos += 1;
        Ok(&self.lines[self.pos - 1])
    }

    /// Reads `keyword arg...`, returning the argument tokens.
    fn keyword(&mut self, keyword: &'static str) -> Result<Vec<Token<'a>>, ParseError> {
        let line = self.next_line(keyword)?;
        let head = line.tokens[0];
        if head.text != keyword {
            return Err(err(
                head.line,
                head.column,
                ParseErrorKind::UnexpectedToken { expected: keyword, found: head.text.to_string() },
            ));
        }
        Ok(line.tokens[1..].to_vec())
    }
}

fn single<'a>(
    args: Vec<Token<'a>>,
    line: usize,
    what: &'static str,
    missing: ParseErrorKind,
) -> Result<Token<'a>, ParseError> {
    match args.as_slice() {
        [] => Err(err(line, 1, missing)),
        [t] => Ok(*t),
        [_, extra, ..] => Err(err(extra.line, extra.column, ParseErrorKind::UnexpectedToken {
            expected: what,
            found: extra.text.to_string(),
        })),
    }
}

/// Parses and validates an algebra document.
pub fn parse(text: &str) -> Result<AlgebraDocument, ParseError> {
    let lines = lex(text);
    let last_line = text.lines().count();
    let mut cur = Cursor { lines, pos: 0, last_line };

    let line_no = |cur: &Cursor| cur.lines.get(cur.pos).map_or(last_line + 1, |l| l.number);

    let at = line_no(&cur);
    let name = single(
        cur.keyword("algebra")?,
        at,
        "end of line",
        ParseErrorKind::Invalid("missing algebra name".into()),
    )?;
    if !valid_name(name.text) {
        return Err(err(name.line, name.column, ParseErrorKind::Invalid(format!("invalid algebra name `{}`", name.text))));
    }

    let at = line_no(&cur);
    let element_toks = cur.keyword("elements")?;
    if element_toks.is_empty() {
        return Err(err(at, 1, ParseErrorKind::Invalid("no elements listed".into())));
    }
    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, t) in element_toks.iter().enumerate() {
        if !valid_name(t.text) {
            return Err(err(t.line, t.column, ParseErrorKind::Invalid(format!("invalid element name `{}`", t.text))));
        }
        if index.insert(t.text, i).is_some() {
            return Err(err(t.line, t.column, ParseErrorKind::DuplicateElement(t.text.to_string())));
        }
    }
    let n = element_toks.len();

    let known = |t: &Token| -> Result<String, ParseError> {
        if index.contains_key(t.text) {
            Ok(t.text.to_string())
        } else {
            Err(err(t.line, t.column, ParseErrorKind::UnknownName(t.text.to_string())))
        }
    };

    let at = line_no(&cur);
    let zero = single(cur.keyword("zero")?, at, "end of line", ParseErrorKind::MissingConstant("zero"))?;
    let zero = known(&zero)?;
    let at = line_no(&cur);
    let one = single(cur.keyword("one")?, at, "end of line", ParseErrorKind::MissingConstant("one"))?;
    let one = known(&one)?;

    let arrow_args = cur.keyword("arrow")?;
    if let Some(t) = arrow_args.first() {
        return Err(err(t.line, t.column, ParseErrorKind::UnexpectedToken {
            expected: "end of line",
            found: t.text.to_string(),
        }));
    }
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let line = cur.next_line("arrow row")?;
        if line.tokens.len() != n {
            let column = line.tokens.get(n).map_or(1, |t| t.column);
            return Err(err(line.number, column, ParseErrorKind::RowLength { expected: n, got: line.tokens.len() }));
        }
        rows.push(line.tokens.iter().map(known).collect::<Result<Vec<_>, _>>()?);
    }
    if let Some(extra) = cur.lines.get(cur.pos) {
        let t = extra.tokens[0];
        return Err(err(t.line, t.column, ParseErrorKind::TrailingInput(t.text.to_string())));
    }

    Ok(AlgebraDocument {
        name: name.text.to_string(),
        elements: element_toks.iter().map(|t| t.text.to_string()).collect(),
        zero,
        one,
        rows,
    })
}

/// Canonical rendering; `parse(&serialize(d)) == d`.
pub fn serialize(doc: &AlgebraDocument) -> String {
    let mut out = String::new();
    out.push_str(&format!("algebra {}\n", doc.name));
    out.push_str(&format!("elements {}\n", doc.elements.join(" ")));
    out.push_str(&format!("zero {}\n", doc.zero));
    out.push_str(&format!("one {}\n", doc.one));
    out.push_str("arrow\n");
    for row in &doc.rows {
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

impl AlgebraDocument {
    pub fn from_algebra(name: &str, a: &FiniteAlgebra) -> Self {
        AlgebraDocument {
            name: name.to_string(),
            elements: a.names().to_vec(),
            zero: a.name(a.zero()).to_string(),
            one: a.name(a.one()).to_string(),
            rows: a
                .elements()
                .map(|x| a.elements().map(|y| a.name(a.arrow(x, y)).to_string()).collect())
                .collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<FiniteAlgebra> {
        let index: HashMap<&str, usize> =
            self.elements.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
        let look = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| crate::Error::InvalidName(s.to_string()))
        };
        let table = self
            .rows
            .iter()
            .map(|row| row.iter().map(|v| look(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FiniteAlgebra::new(self.elements.clone(), table, look(&self.zero)?, look(&self.one)?)
    }
}

/// Parses text straight into an algebra.
pub fn parse_algebra(text: &str) -> Result<(String, FiniteAlgebra)> {
    let doc = parse(text)?;
    let a = doc.to_algebra()?;
    Ok((doc.name, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn parses_orthomodular_fixture() {
        let doc = parse(catalog::ORTHOMODULAR6_SRC).unwrap();
        assert_eq!(doc.elements.len(), 6);
        assert_eq!(doc.rows[1].join(" "), "c 1 1 c 1 1");
        assert_eq!(parse(&serialize(&doc)).unwrap(), doc);
    }

    #[test]
    fn parses_weakly_linear_fixture() {
        let doc = parse(catalog::WEAKLY_LINEAR5_SRC).unwrap();
        assert_eq!(doc.elements.len(), 5);
        assert_eq!(doc.rows[2].join(" "), "a 1 1 1 1");
        assert_eq!(parse(&serialize(&doc)).unwrap(), doc);
    }

    #[test]
    fn short_row_reports_its_line() {
        let text = catalog::ORTHOMODULAR6_SRC.replace("c 1 1 c 1 1", "c 1 1 c 1");
        let e = parse(&text).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::RowLength { expected: 6, got: 5 }));
        let bad_line = text.lines().position(|l| l.trim_start().starts_with("c 1 1 c 1")).unwrap() + 1;
        assert_eq!(e.line, bad_line);
    }

    #[test]
    fn error_cases() {
        let base = "algebra t\nelements 0 1\nzero 0\none 1\narrow\n1 1\n0 1\n";
        assert!(parse(base).is_ok());

        let e = parse("algebra t\nelements 0 0\nzero 0\none 1\narrow\n1 1\n0 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 12));
        assert!(matches!(e.kind, ParseErrorKind::DuplicateElement(_)));

        let e = parse("algebra t\nelements 0 1\nzero 0\none 1\narrow\n1 q\n0 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (6, 3));
        assert_eq!(e.kind, ParseErrorKind::UnknownName("q".into()));

        let e = parse("algebra t\nelements 0 1\nzero 0\narrow\n1 1\n0 1\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::UnexpectedToken { expected: "one", .. }));

        let e = parse("algebra t\nelements 0 1\nzero\none 1\narrow\n1 1\n0 1\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingConstant("zero"));

        let e = parse("algebra t\nelements 0 1\nzero 0\none 1\narrow\n1 1\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingSection("arrow row"));

        let e = parse("algebra t\nelements 0 1\nzero 0\none 1\narrow\n1 1\n0 1\nextra\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::TrailingInput(_)));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\nalgebra t # trailing\n\nelements 0 1\nzero 0\n  one 1\narrow\n1 1 # row 0\n\n0 1\n";
        let doc = parse(text).unwrap();
        assert_eq!(doc.rows, vec![vec!["1", "1"], vec!["0", "1"]]);
    }
}
