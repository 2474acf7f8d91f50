//! Plain-text formats for polytopes and fans.
//!
//! Polytope files start with `v d` followed by `v` rows of `d` integers.
//! Fan files have a `rays s d` block, a `cones t` block of 0-based ray
//! indices and an optional `divisor` line followed by `s` integers. In both
//! formats `#` starts a comment and blank lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::lattice::{Int, LatticeVector};
use crate::polytope::Polytope;
use crate::toric::{Fan, TDivisor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number; the line after the last one for a truncated file.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed header, expected {0}")]
    MalformedHeader(&'static str),
    #[error("wrong arity: expected {expected} values, found {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("not an integer: {0:?}")]
    NotInteger(String),
    #[error("unexpected end of input")]
    UnexpectedEof,
    #[error("unexpected trailing data")]
    TrailingData,
    #[error("{0}")]
    Invalid(String),
}

type Tokens<'a> = Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a>;

/// Non-blank, comment-stripped lines with their 1-based numbers.
struct Lines<'a> {
    inner: std::iter::Peekable<Tokens<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let last = text.lines().count();
        let it: Tokens<'a> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| {
                    (
                        i + 1,
                        l.split('#')
                            .next()
                            .unwrap_or("")
                            .split_whitespace()
                            .collect::<Vec<_>>(),
                    )
                })
                .filter(|(_, toks)| !toks.is_empty()),
        );
        Self {
            inner: it.peekable(),
            last,
        }
    }

    fn next(&mut self) -> Result<(usize, Vec<&'a str>), ParseError> {
        self.inner.next().ok_or(ParseError {
            line: self.last + 1,
            kind: ParseErrorKind::UnexpectedEof,
        })
    }

    fn peek(&mut self) -> Option<&(usize, Vec<&'a str>)> {
        self.inner.peek()
    }

    fn finish(mut self) -> Result<(), ParseError> {
        match self.inner.next() {
            Some((line, _)) => Err(ParseError {
                line,
                kind: ParseErrorKind::TrailingData,
            }),
            None => Ok(()),
        }
    }
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn int(line: usize, tok: &str) -> Result<Int, ParseError> {
    tok.parse()
        .map_err(|_| err(line, ParseErrorKind::NotInteger(tok.to_string())))
}

fn count(line: usize, tok: &str, what: &'static str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| err(line, ParseErrorKind::MalformedHeader(what)))
}

fn row(line: usize, toks: &[&str], arity: usize) -> Result<Vec<Int>, ParseError> {
    if toks.len() != arity {
        return Err(err(
            line,
            ParseErrorKind::WrongArity {
                expected: arity,
                found: toks.len(),
            },
        ));
    }
    toks.iter().map(|t| int(line, t)).collect()
}

fn vector(line: usize, coords: &[Int]) -> Result<LatticeVector, ParseError> {
    LatticeVector::new(coords).map_err(|e| err(line, ParseErrorKind::Invalid(e.to_string())))
}

fn polytope_header(line: usize, toks: &[&str]) -> Result<(usize, usize), ParseError> {
    const WHAT: &str = "`v d` with v ≥ 1 and d ∈ {2, 3}";
    if toks.len() != 2 {
        return Err(err(line, ParseErrorKind::MalformedHeader(WHAT)));
    }
    let (v, d) = (count(line, toks[0], WHAT)?, count(line, toks[1], WHAT)?);
    if v == 0 || !(2..=3).contains(&d) {
        return Err(err(line, ParseErrorKind::MalformedHeader(WHAT)));
    }
    Ok((v, d))
}

fn points_to_polytope(line: usize, points: &[LatticeVector]) -> Result<Polytope, ParseError> {
    Polytope::hull(points).map_err(|e| err(line, ParseErrorKind::Invalid(e.to_string())))
}

/// Reads a polytope file. The points need not be extreme; the result is
/// their convex hull.
pub fn parse_polytope(text: &str) -> Result<Polytope, ParseError> {
    let mut lines = Lines::new(text);
    let (hl, header) = lines.next()?;
    let (v, d) = polytope_header(hl, &header)?;
    let mut points = Vec::with_capacity(v);
    for _ in 0..v {
        let (l, toks) = lines.next()?;
        points.push(vector(l, &row(l, &toks, d)?)?);
    }
    lines.finish()?;
    points_to_polytope(hl, &points)
}

/// Canonical text of a polytope: its sorted vertex list.
pub fn write_polytope(p: &Polytope) -> String {
    let mut out = format!("{} {}\n", p.vertices().len(), p.ambient_dim());
    for v in p.vertices() {
        push_row(&mut out, v.coords());
    }
    out
}

fn push_row(out: &mut String, values: &[impl std::fmt::Display]) {
    let mut first = true;
    for x in values {
        if !first {
            out.push(' ');
        }
        first = false;
        write!(out, "{x}").unwrap();
    }
    out.push('\n');
}

/// Reads a fan file. A divisor, if present, is reordered to follow the
/// canonical ray order of the returned fan.
pub fn parse_fan(text: &str) -> Result<(Fan, Option<TDivisor>), ParseError> {
    let mut lines = Lines::new(text);
    let (hl, header) = lines.next()?;
    const RAYS: &str = "`rays s d` with d ∈ {2, 3}";
    if header.len() != 3 || header[0] != "rays" {
        return Err(err(hl, ParseErrorKind::MalformedHeader(RAYS)));
    }
    let (s, d) = (count(hl, header[1], RAYS)?, count(hl, header[2], RAYS)?);
    if !(2..=3).contains(&d) {
        return Err(err(hl, ParseErrorKind::MalformedHeader(RAYS)));
    }
    let mut rays = Vec::with_capacity(s);
    for _ in 0..s {
        let (l, toks) = lines.next()?;
        rays.push(vector(l, &row(l, &toks, d)?)?);
    }

    let (cl, header) = lines.next()?;
    const CONES: &str = "`cones t`";
    if header.len() != 2 || header[0] != "cones" {
        return Err(err(cl, ParseErrorKind::MalformedHeader(CONES)));
    }
    let t = count(cl, header[1], CONES)?;
    let mut cones = Vec::with_capacity(t);
    for _ in 0..t {
        let (l, toks) = lines.next()?;
        let idx = toks
            .iter()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| err(l, ParseErrorKind::NotInteger(tok.to_string())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(&bad) = idx.iter().find(|&&i| i >= s) {
            return Err(err(
                l,
                ParseErrorKind::Invalid(format!("ray index {bad} out of range")),
            ));
        }
        cones.push(idx);
    }

    let mut coeffs = None;
    if let Some((dl, toks)) = lines.peek() {
        let dl = *dl;
        if toks.len() != 1 || toks[0] != "divisor" {
            return Err(err(dl, ParseErrorKind::MalformedHeader("`divisor`")));
        }
        lines.next()?;
        let (l, toks) = lines.next()?;
        coeffs = Some(row(l, &toks, s)?);
    }
    lines.finish()?;

    let invalid = |e: crate::toric::ToricError| err(hl, ParseErrorKind::Invalid(e.to_string()));
    match coeffs {
        Some(c) => Fan::with_divisor(rays, cones, c)
            .map(|(f, d)| (f, Some(d)))
            .map_err(invalid),
        None => Fan::new(rays, cones).map(|f| (f, None)).map_err(invalid),
    }
}

/// Canonical text of a fan, with an optional divisor.
pub fn write_fan(fan: &Fan, divisor: Option<&TDivisor>) -> String {
    let mut out = format!("rays {} {}\n", fan.rays().len(), fan.dim());
    for r in fan.rays() {
        push_row(&mut out, r.coords());
    }
    writeln!(out, "cones {}", fan.max_cones().len()).unwrap();
    for c in fan.max_cones() {
        push_row(&mut out, &c.rays);
    }
    if let Some(d) = divisor {
        out.push_str("divisor\n");
        push_row(&mut out, &d.coeffs);
    }
    out
}

/// Reads a concatenation of vertex-matrix blocks. Each block has a header
/// whose first two integers give the matrix shape (anything after them on
/// the header line is ignored), followed by that many rows. A block `d v`
/// with `d ∈ {2, 3}` and `v > d` lists vertices as columns and is
/// transposed; any other block lists them as rows.
pub fn parse_vertex_blocks(text: &str) -> Result<Vec<Polytope>, ParseError> {
    let mut lines = Lines::new(text);
    let mut out = Vec::new();
    while lines.peek().is_some() {
        let (hl, header) = lines.next()?;
        const WHAT: &str = "a block header `rows cols ...`";
        if header.len() < 2 {
            return Err(err(hl, ParseErrorKind::MalformedHeader(WHAT)));
        }
        let (rows, cols) = (count(hl, header[0], WHAT)?, count(hl, header[1], WHAT)?);
        if rows == 0 || cols == 0 {
            return Err(err(hl, ParseErrorKind::MalformedHeader(WHAT)));
        }
        let mut matrix = Vec::with_capacity(rows);
        for _ in 0..rows {
            let (l, toks) = lines.next()?;
            matrix.push((l, row(l, &toks, cols)?));
        }
        let points = if (2..=3).contains(&rows) && cols > rows {
            (0..cols)
                .map(|j| vector(hl, &matrix.iter().map(|(_, r)| r[j]).collect::<Vec<_>>()))
                .collect::<Result<Vec<_>, _>>()?
        } else {
            if !(2..=3).contains(&cols) {
                return Err(err(
                    hl,
                    ParseErrorKind::MalformedHeader("ambient dimension 2 or 3"),
                ));
            }
            matrix
                .iter()
                .map(|(l, r)| vector(*l, r))
                .collect::<Result<Vec<_>, _>>()?
        };
        out.push(points_to_polytope(hl, &points)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reeve_text() {
        let p = parse_polytope("4 3\n0 0 0\n1 0 0\n0 1 0\n1 1 2").unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(write_polytope(&p), "4 3\n0 0 0\n0 1 0\n1 0 0\n1 1 2\n");
    }

    #[test]
    fn point_and_comments() {
        let p = parse_polytope("# a point\n1 3   # header\n\n0 0 0\n").unwrap();
        assert_eq!(p.dim(), 0);
    }

    #[test]
    fn errors_carry_lines() {
        let e = parse_polytope("2 3\n0 0 0\n0 0").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(
            e.kind,
            ParseErrorKind::WrongArity {
                expected: 3,
                found: 2
            }
        );
        assert_eq!(
            parse_polytope("2 3\n0 0 x\n1 1 1").unwrap_err().kind,
            ParseErrorKind::NotInteger("x".into())
        );
        assert!(matches!(
            parse_polytope("3\n").unwrap_err().kind,
            ParseErrorKind::MalformedHeader(_)
        ));
        assert_eq!(
            parse_polytope("2 2\n0 0\n").unwrap_err(),
            ParseError {
                line: 3,
                kind: ParseErrorKind::UnexpectedEof
            }
        );
        assert_eq!(
            parse_polytope("1 2\n0 0\n1 1\n").unwrap_err().kind,
            ParseErrorKind::TrailingData
        );
    }

    #[test]
    fn fan_round_trip() {
        let text = "rays 3 2\n1 0\n0 1\n-1 -1\ncones 3\n0 1\n1 2\n2 0\ndivisor\n0 0 1\n";
        let (fan, d) = parse_fan(text).unwrap();
        let d = d.unwrap();
        assert_eq!(fan.rays()[0], LatticeVector::new2(-1, -1));
        assert_eq!(d.coeffs, vec![1, 0, 0]);
        let canon = write_fan(&fan, Some(&d));
        assert_eq!(parse_fan(&canon).unwrap(), (fan, Some(d)));
        assert_eq!(
            write_fan(
                &parse_fan(&canon).unwrap().0,
                Some(&parse_fan(&canon).unwrap().1.unwrap())
            ),
            canon
        );
    }

    #[test]
    fn fan_errors() {
        assert_eq!(parse_fan("rays 2 2\n1 0\n").unwrap_err().line, 3);
        assert!(matches!(
            parse_fan("rays 1 2\n1 0\ncones 1\n0 5\n").unwrap_err().kind,
            ParseErrorKind::Invalid(_)
        ));
        assert!(matches!(
            parse_fan("cones 1\n").unwrap_err().kind,
            ParseErrorKind::MalformedHeader(_)
        ));
    }

    #[test]
    fn vertex_blocks_both_orientations() {
        let text =
            "3 4  M:5 4 N:5 4\n 0 1 0 1\n 0 0 1 1\n 0 0 0 2\n4 3\n0 0 0\n1 0 0\n0 1 0\n1 1 2\n";
        let ps = parse_vertex_blocks(text).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[0], ps[1]);
    }
}
