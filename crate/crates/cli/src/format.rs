//! Line-oriented text formats.
//!
//! * `.braid`: `degree=<n>; word=<i,j,...>`, one record per line or split
//!   across lines.
//! * `.tc`: `degree=`, `a=`, `b=` lines.
//! * `.tcm`: `degree=`, alternating `slice=` and `event=` lines, then optional
//!   `block=<name> <first> <last>` lines.
//! * chart graphs: `degree=`, `v`, `e`, `rot` and `inside` lines.
//!
//! Lines starting with `#` are comments. Every `emit_*` output parses back to
//! the same value and re-emits byte for byte.

use std::collections::BTreeMap;
use std::fmt::Write;

use tckit_core::braid::{BraidWord, Letter, Sign};
use tckit_core::chart::{
    Band, BandOp, ChartGraph, ChartMovie, Edge, Event, Orientation, TorusCoveringChart, Vertex,
};
use tckit_core::compile::{Block, BlockKind};
use tckit_core::ParseError;

type Parsed<T> = Result<T, ParseError>;

/// `key=value`, with 1-based positions of the key and of the value.
#[derive(Debug)]
struct Field<'a> {
    key: &'a str,
    value: &'a str,
    line: usize,
    column: usize,
    value_column: usize,
}

impl Field<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.column, message)
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        (!body.trim().is_empty()).then_some((i + 1, body))
    })
}

fn column_of(line: &str, part: &str) -> usize {
    line[..part.as_ptr() as usize - line.as_ptr() as usize].chars().count() + 1
}

/// Splits each content line on `;` into `key=value` fields.
fn fields(text: &str) -> Parsed<Vec<Field<'_>>> {
    let mut out = Vec::new();
    for (line_no, line) in content_lines(text) {
        for segment in line.split(';') {
            let trimmed = segment.trim();
            if trimmed.is_empty() {
                continue;
            }
            let column = column_of(line, trimmed);
            let Some(eq) = trimmed.find('=') else {
                return Err(ParseError::new(line_no, column, format!("expected key=value, found `{trimmed}`")));
            };
            let value = trimmed[eq + 1..].trim();
            out.push(Field {
                key: trimmed[..eq].trim(),
                value,
                line: line_no,
                column,
                value_column: if value.is_empty() { column + eq + 1 } else { column_of(line, value) },
            });
        }
    }
    Ok(out)
}

fn parse_degree(f: &Field) -> Parsed<usize> {
    let compact: String = f.value.split_whitespace().collect();
    match compact.parse::<usize>() {
        Ok(0) => Err(ParseError::new(f.line, f.value_column, "degree must be at least 1")),
        Ok(n) => Ok(n),
        Err(_) => Err(ParseError::new(f.line, f.value_column, format!("invalid degree `{}`", f.value))),
    }
}

fn parse_letters(f: &Field, degree: usize) -> Parsed<BraidWord> {
    let mut letters = Vec::new();
    if f.value.is_empty() {
        return Ok(BraidWord::identity(degree));
    }
    let mut offset = 0;
    for token in f.value.split(',') {
        let column = f.value_column + f.value[..offset].chars().count() + (token.len() - token.trim_start().len());
        offset += token.len() + 1;
        let compact: String = token.split_whitespace().collect();
        let value: i64 = compact
            .parse()
            .map_err(|_| ParseError::new(f.line, column, format!("invalid generator `{}`", token.trim())))?;
        match Letter::from_signed(value) {
            Some(l) if l.index < degree => letters.push(l),
            _ => {
                return Err(ParseError::new(
                    f.line,
                    column,
                    format!("generator {value} out of range for degree {degree}"),
                ))
            }
        }
    }
    Ok(BraidWord::new(degree, letters).expect("indices checked"))
}

fn letters_text(w: &BraidWord) -> String {
    w.to_signed().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn end_of(text: &str) -> ParseError {
    ParseError::new(text.lines().count().max(1), 1, "unexpected end of input")
}

fn expect_key<'a>(f: &Field<'a>, key: &str) -> Parsed<()> {
    if f.key == key {
        Ok(())
    } else {
        Err(f.error(format!("expected `{key}=`, found `{}=`", f.key)))
    }
}

/// Parses every `degree=...; word=...` record in `text`.
pub fn parse_braids(text: &str) -> Parsed<Vec<BraidWord>> {
    let fields = fields(text)?;
    let mut out = Vec::new();
    let mut it = fields.iter();
    while let Some(f) = it.next() {
        expect_key(f, "degree")?;
        let degree = parse_degree(f)?;
        let w = it.next().ok_or_else(|| end_of(text))?;
        expect_key(w, "word")?;
        out.push(parse_letters(w, degree)?);
    }
    Ok(out)
}

/// Parses a text holding exactly one braid record.
pub fn parse_braid(text: &str) -> Parsed<BraidWord> {
    let mut all = parse_braids(text)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        0 => Err(end_of(text)),
        n => Err(ParseError::new(1, 1, format!("expected one braid, found {n}"))),
    }
}

/// Parses a bare letter list such as `1,-2,3` for a known degree.
pub fn parse_word_list(degree: usize, list: &str) -> Parsed<BraidWord> {
    let value = list.trim();
    let f = Field {
        key: "word",
        value: if value == "e" { "" } else { value },
        line: 1,
        column: 1,
        value_column: 1 + (list.len() - list.trim_start().len()),
    };
    parse_letters(&f, degree)
}

pub fn emit_braid(w: &BraidWord) -> String {
    format!("degree={}; word={}\n", w.degree(), letters_text(w))
}

/// A torus-covering-chart as read, before the commuting check.
pub fn parse_chart(text: &str) -> Parsed<(BraidWord, BraidWord)> {
    let fields = fields(text)?;
    let mut it = fields.iter();
    let f = it.next().ok_or_else(|| end_of(text))?;
    expect_key(f, "degree")?;
    let degree = parse_degree(f)?;
    let fa = it.next().ok_or_else(|| end_of(text))?;
    expect_key(fa, "a")?;
    let fb = it.next().ok_or_else(|| end_of(text))?;
    expect_key(fb, "b")?;
    if let Some(extra) = it.next() {
        return Err(extra.error(format!("unexpected `{}=` after `b=`", extra.key)));
    }
    Ok((parse_letters(fa, degree)?, parse_letters(fb, degree)?))
}

pub fn emit_chart(t: &TorusCoveringChart) -> String {
    format!(
        "degree={}\na={}\nb={}\n",
        t.degree(),
        letters_text(t.a()),
        letters_text(t.b())
    )
}

/// A movie file: the movie and, for compiler output, its block map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MovieFile {
    pub movie: ChartMovie,
    pub blocks: Vec<Block>,
}

fn parse_event(f: &Field, degree: usize) -> Parsed<Event> {
    let parts: Vec<&str> = f.value.split_whitespace().collect();
    let err = |m: String| ParseError::new(f.line, f.value_column, m);
    match parts.as_slice() {
        ["eq"] => Ok(Event::Eq),
        ["band", op, pos, generator, sign] => {
            let op = match *op {
                "ins" => BandOp::Insert,
                "del" => BandOp::Delete,
                other => return Err(err(format!("band op must be ins or del, found `{other}`"))),
            };
            let position = pos.parse().map_err(|_| err(format!("invalid band position `{pos}`")))?;
            let generator: usize = generator
                .parse()
                .map_err(|_| err(format!("invalid band generator `{generator}`")))?;
            if generator == 0 || generator >= degree {
                return Err(err(format!("band generator {generator} out of range for degree {degree}")));
            }
            let sign = match *sign {
                "+1" | "1" => Sign::Pos,
                "-1" => Sign::Neg,
                other => return Err(err(format!("band sign must be +1 or -1, found `{other}`"))),
            };
            Ok(Event::Band(Band {
                op,
                position,
                generator,
                sign,
            }))
        }
        _ => Err(err(format!(
            "expected `eq` or `band <ins|del> <pos> <gen> <+1|-1>`, found `{}`",
            f.value
        ))),
    }
}

fn parse_block(f: &Field) -> Parsed<Block> {
    let parts: Vec<&str> = f.value.split_whitespace().collect();
    let err = |m: String| ParseError::new(f.line, f.value_column, m);
    let [name, first, last] = parts.as_slice() else {
        return Err(err("expected `block=<name> <first> <last>`".into()));
    };
    let kind = BlockKind::from_name(name).ok_or_else(|| err(format!("unknown block `{name}`")))?;
    let first_event = first.parse().map_err(|_| err(format!("invalid event index `{first}`")))?;
    let last_event = last.parse().map_err(|_| err(format!("invalid event index `{last}`")))?;
    Ok(Block {
        kind,
        first_event,
        last_event,
    })
}

pub fn parse_movie(text: &str) -> Parsed<MovieFile> {
    let fields = fields(text)?;
    let mut it = fields.iter().peekable();
    let f = it.next().ok_or_else(|| end_of(text))?;
    expect_key(f, "degree")?;
    let degree = parse_degree(f)?;
    let mut slices = Vec::new();
    let mut events = Vec::new();
    let mut blocks = Vec::new();
    while let Some(f) = it.next() {
        match f.key {
            "slice" if slices.len() == events.len() && blocks.is_empty() => {
                slices.push(parse_letters(f, degree)?)
            }
            "event" if slices.len() == events.len() + 1 && blocks.is_empty() => {
                events.push(parse_event(f, degree)?);
                if it.peek().map(|n| n.key) != Some("slice") {
                    return Err(f.error("an event must be followed by a slice"));
                }
            }
            "block" if !slices.is_empty() => blocks.push(parse_block(f)?),
            "slice" | "event" | "block" => return Err(f.error(format!("`{}=` out of order", f.key))),
            other => return Err(f.error(format!("unknown key `{other}`"))),
        }
    }
    if slices.is_empty() {
        return Err(end_of(text));
    }
    let movie = ChartMovie::new(degree, slices, events).expect("shape checked while parsing");
    Ok(MovieFile { movie, blocks })
}

pub fn emit_movie(m: &ChartMovie, blocks: &[Block]) -> String {
    let mut out = format!("degree={}\n", m.degree());
    for (i, slice) in m.slices().iter().enumerate() {
        if i > 0 {
            match m.events()[i - 1] {
                Event::Eq => out.push_str("event=eq\n"),
                Event::Band(b) => {
                    let op = match b.op {
                        BandOp::Insert => "ins",
                        BandOp::Delete => "del",
                    };
                    let sign = match b.sign {
                        Sign::Pos => "+1",
                        Sign::Neg => "-1",
                    };
                    writeln!(out, "event=band {op} {} {} {sign}", b.position, b.generator).unwrap();
                }
            }
        }
        writeln!(out, "slice={}", letters_text(slice)).unwrap();
    }
    for b in blocks {
        writeln!(out, "block={} {} {}", b.kind, b.first_event, b.last_event).unwrap();
    }
    out
}

pub fn parse_graph(text: &str) -> Parsed<ChartGraph> {
    let mut g = ChartGraph::default();
    let mut saw_degree = false;
    for (line_no, line) in content_lines(text) {
        let words: Vec<&str> = line.split_whitespace().collect();
        let col = |k: usize| column_of(line, words[k]);
        let err = |k: usize, m: String| ParseError::new(line_no, col(k), m);
        let endpoint = |s: &str| (s != "-").then(|| s.to_string());
        match words[0] {
            w if w.starts_with("degree") && !saw_degree => {
                let compact: String = words.concat();
                let n = compact
                    .strip_prefix("degree=")
                    .and_then(|v| v.parse::<usize>().ok())
                    .filter(|&n| n > 0)
                    .ok_or_else(|| err(0, "expected `degree=<n>` with n ≥ 1".into()))?;
                g.degree = n;
                saw_degree = true;
            }
            _ if !saw_degree => return Err(err(0, "expected `degree=<n>` first".into())),
            "v" if words.len() == 3 => {
                let degree = words[2]
                    .parse()
                    .map_err(|_| err(2, format!("invalid vertex degree `{}`", words[2])))?;
                g.vertices.push(Vertex {
                    id: words[1].to_string(),
                    degree,
                });
            }
            "e" if words.len() == 6 => {
                let label = words[4]
                    .parse()
                    .map_err(|_| err(4, format!("invalid label `{}`", words[4])))?;
                let orientation = match words[5] {
                    "+" => Orientation::Forward,
                    "-" => Orientation::Backward,
                    other => return Err(err(5, format!("orientation must be + or -, found `{other}`"))),
                };
                g.edges.push(Edge {
                    id: words[1].to_string(),
                    from: endpoint(words[2]),
                    to: endpoint(words[3]),
                    label,
                    orientation,
                });
            }
            "rot" if words.len() >= 2 => {
                let ids = words[2..].iter().map(|s| s.to_string()).collect();
                if g.rotations.insert(words[1].to_string(), ids).is_some() {
                    return Err(err(1, format!("second rotation for vertex {}", words[1])));
                }
            }
            "inside" if words.len() == 3 => g.nest.push((words[1].to_string(), words[2].to_string())),
            "v" | "e" | "rot" | "inside" => return Err(err(0, format!("wrong number of fields for `{}`", words[0]))),
            other => return Err(err(0, format!("unknown line kind `{other}`"))),
        }
    }
    if !saw_degree {
        return Err(end_of(text));
    }
    Ok(g)
}

pub fn emit_graph(g: &ChartGraph) -> String {
    let mut out = format!("degree={}\n", g.degree);
    for v in &g.vertices {
        writeln!(out, "v {} {}", v.id, v.degree).unwrap();
    }
    for e in &g.edges {
        let end = |x: &Option<String>| x.clone().unwrap_or_else(|| "-".into());
        let orient = match e.orientation {
            Orientation::Forward => "+",
            Orientation::Backward => "-",
        };
        writeln!(out, "e {} {} {} {} {orient}", e.id, end(&e.from), end(&e.to), e.label).unwrap();
    }
    let rotations: &BTreeMap<String, Vec<String>> = &g.rotations;
    for (v, ids) in rotations {
        let mut line = format!("rot {v}");
        for id in ids {
            line.push(' ');
            line.push_str(id);
        }
        writeln!(out, "{line}").unwrap();
    }
    for (item, lp) in &g.nest {
        writeln!(out, "inside {item} {lp}").unwrap();
    }
    out
}
