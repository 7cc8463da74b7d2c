//! The line-oriented QTOP structure format.
//!
//! ```text
//! SPACE n=2
//! OPENS
//! {}
//! {1}
//! {0,1}
//! END
//! ```
//!
//! A space gives either `OPENS` (one subset per line) or `PREORDER` (`n` rows
//! of `0`/`1`). A monoid block is `MONOID n=<int> unit=<int>`, a `TABLE`
//! section of `n` rows of `n` integers, then a space section, then `END`.
//! Blank lines and lines starting with `#` are ignored.

use crate::error::{Error, Result};
use crate::finmonoid::{CayleyTable, TopMonoid};
use crate::fintop::FinSpace;
use crate::relcore::{check_size, PointSet, Relation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Space(FinSpace),
    Monoid(TopMonoid),
}

struct Line<'a> {
    no: usize,
    /// Column of the first non-blank character.
    indent: usize,
    text: &'a str,
}

fn significant_lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let trimmed = raw.trim();
            (!trimmed.is_empty() && !trimmed.starts_with('#')).then(|| Line {
                no: i + 1,
                indent: raw.len() - raw.trim_start().len(),
                text: trimmed,
            })
        })
        .collect()
}

/// Parses `{}` or `{i,j,…}` with points below `n`. `line` and `column` locate
/// the text in error messages.
pub fn parse_point_set_at(text: &str, n: usize, line: usize, column: usize) -> Result<PointSet> {
    let t = text.trim();
    let offset = column + (text.len() - text.trim_start().len());
    let inner = t
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| Error::parse(line, offset, "expected a set such as {0,2}"))?;
    let mut set = PointSet::EMPTY;
    if inner.trim().is_empty() {
        return Ok(set);
    }
    let mut col = offset + 1;
    for item in inner.split(',') {
        let lead = item.len() - item.trim_start().len();
        let token = item.trim();
        let p: usize = token
            .parse()
            .map_err(|_| Error::parse(line, col + lead, format!("bad point {token:?}")))?;
        if p >= n {
            return Err(Error::parse(
                line,
                col + lead,
                format!("point {p} out of range for n={n}"),
            ));
        }
        set = set.with(p);
        col += item.len() + 1;
    }
    Ok(set)
}

pub fn parse_point_set(text: &str, n: usize) -> Result<PointSet> {
    parse_point_set_at(text, n, 1, 1)
}

/// Reads `key=<int>` from a header word.
fn header_value(word: Option<&str>, key: &str, line: &Line<'_>) -> Result<usize> {
    let col = word
        .map(|w| line.text.find(w).unwrap_or(0) + line.indent + 1)
        .unwrap_or(line.text.len() + line.indent + 1);
    let w = word.ok_or_else(|| Error::parse(line.no, col, format!("missing {key}=")))?;
    let v = w
        .strip_prefix(key)
        .and_then(|s| s.strip_prefix('='))
        .ok_or_else(|| Error::parse(line.no, col, format!("expected {key}=<int>")))?;
    v.parse()
        .map_err(|_| Error::parse(line.no, col + key.len() + 1, format!("bad integer {v:?}")))
}

struct Parser<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Parser<'a> {
    fn next(&mut self, what: &str) -> Result<&Line<'a>> {
        let l = self.lines.get(self.pos).ok_or_else(|| {
            Error::parse(
                self.last_line + 1,
                1,
                format!("unexpected end of input, expected {what}"),
            )
        })?;
        self.pos += 1;
        Ok(l)
    }

    fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.pos)
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        let l = self.next(word)?;
        if l.text == word {
            Ok(())
        } else {
            Err(Error::parse(
                l.no,
                l.indent + 1,
                format!("expected {word}, found {:?}", l.text),
            ))
        }
    }

    fn space_section(&mut self, n: usize) -> Result<FinSpace> {
        let l = self.next("OPENS or PREORDER")?;
        let (no, indent) = (l.no, l.indent);
        match l.text {
            "PREORDER" => {
                let mut rows = Vec::with_capacity(n);
                let mut first = None;
                for _ in 0..n {
                    let l = self.next("a preorder row")?;
                    first.get_or_insert(l.no);
                    if l.no != first.unwrap() + rows.len() {
                        return Err(Error::parse(l.no, 1, "preorder rows must be consecutive"));
                    }
                    rows.push(l.text);
                }
                let m = Relation::parse_text(&rows, first.unwrap_or(no + 1))?;
                if let Some((x, y, z)) = m.transitivity_violation() {
                    return Err(Error::NotPreorder { x, y, z });
                }
                FinSpace::from_preorder(m)
            }
            "OPENS" => {
                let mut opens = Vec::new();
                while let Some(l) = self.peek() {
                    if l.text == "END" {
                        break;
                    }
                    opens.push(parse_point_set_at(l.text, n, l.no, l.indent + 1)?);
                    self.pos += 1;
                }
                FinSpace::from_opens(n, &opens)
            }
            other => Err(Error::parse(
                no,
                indent + 1,
                format!("expected OPENS or PREORDER, found {other:?}"),
            )),
        }
    }

    fn table_section(&mut self, n: usize, unit: usize) -> Result<CayleyTable> {
        self.keyword("TABLE")?;
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let l = self.next("a table row")?;
            let mut row = Vec::with_capacity(n);
            let mut col = l.indent + 1;
            let mut rest = l.text;
            while !rest.is_empty() {
                let lead = rest.len() - rest.trim_start().len();
                rest = &rest[lead..];
                col += lead;
                let len = rest.find(char::is_whitespace).unwrap_or(rest.len());
                let token = &rest[..len];
                let v: usize = token
                    .parse()
                    .map_err(|_| Error::parse(l.no, col, format!("bad table entry {token:?}")))?;
                if v >= n {
                    return Err(Error::parse(
                        l.no,
                        col,
                        format!("entry {v} out of range for n={n}"),
                    ));
                }
                row.push(v);
                rest = &rest[len..];
                col += len;
            }
            if row.len() != n {
                return Err(Error::parse(
                    l.no,
                    l.indent + 1,
                    format!("expected {n} entries, found {}", row.len()),
                ));
            }
            rows.push(row);
        }
        CayleyTable::new(n, unit, &rows)
    }

    fn finish(&mut self) -> Result<()> {
        self.keyword("END")?;
        if let Some(l) = self.peek() {
            return Err(Error::parse(l.no, l.indent + 1, "content after END"));
        }
        Ok(())
    }
}

/// Parses one SPACE or MONOID block.
pub fn parse(text: &str) -> Result<Structure> {
    let lines = significant_lines(text);
    let last_line = text.lines().count();
    let mut p = Parser {
        lines,
        pos: 0,
        last_line,
    };
    let header = p.next("SPACE or MONOID")?;
    let mut words = header.text.split_whitespace();
    let kind = words.next().unwrap_or("");
    let n_word = words.next();
    match kind {
        "SPACE" => {
            let n = header_value(n_word, "n", header)?;
            if let Some(extra) = words.next() {
                let col = header.text.find(extra).unwrap_or(0) + header.indent + 1;
                return Err(Error::parse(
                    header.no,
                    col,
                    format!("unexpected {extra:?}"),
                ));
            }
            check_size(n)?;
            let s = p.space_section(n)?;
            p.finish()?;
            Ok(Structure::Space(s))
        }
        "MONOID" => {
            let n = header_value(n_word, "n", header)?;
            let unit = header_value(words.next(), "unit", header)?;
            check_size(n)?;
            let t = p.table_section(n, unit)?;
            let s = p.space_section(n)?;
            p.finish()?;
            Ok(Structure::Monoid(TopMonoid::new(t, s)?))
        }
        other => Err(Error::parse(
            header.no,
            header.indent + 1,
            format!("expected SPACE or MONOID, found {other:?}"),
        )),
    }
}

pub fn parse_space(text: &str) -> Result<FinSpace> {
    match parse(text)? {
        Structure::Space(s) => Ok(s),
        Structure::Monoid(_) => Err(Error::parse(1, 1, "expected a SPACE block, found MONOID")),
    }
}

pub fn parse_monoid(text: &str) -> Result<TopMonoid> {
    match parse(text)? {
        Structure::Monoid(m) => Ok(m),
        Structure::Space(_) => Err(Error::parse(1, 1, "expected a MONOID block, found SPACE")),
    }
}

fn preorder_section(s: &FinSpace) -> String {
    format!("PREORDER\n{}", s.preorder())
}

pub fn dump_space(s: &FinSpace) -> String {
    format!("SPACE n={}\n{}END\n", s.n(), preorder_section(s))
}

/// The OPENS form of a space, opens in bit order.
pub fn dump_space_opens(s: &FinSpace) -> String {
    let mut out = format!("SPACE n={}\nOPENS\n", s.n());
    for o in s.opens() {
        out.push_str(&format!("{o}\n"));
    }
    out.push_str("END\n");
    out
}

pub fn dump_monoid(m: &TopMonoid) -> String {
    format!(
        "MONOID n={} unit={}\nTABLE\n{}\n{}END\n",
        m.n(),
        m.unit(),
        m.table(),
        preorder_section(m.space())
    )
}

pub fn dump(s: &Structure) -> String {
    match s {
        Structure::Space(s) => dump_space(s),
        Structure::Monoid(m) => dump_monoid(m),
    }
}
