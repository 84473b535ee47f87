//! Plain-text formats.
//!
//! Hypergraph: a header `r n m`, then `m` lines of `r` ascending vertices,
//! lines in colex order. Weighted system: a header `r s m`, a line of `s`
//! nonincreasing weights (decimals or `a/b`), then `m` lines of ascending
//! points of variable length, in colex order. Both use LF line endings and
//! allow `#` comment lines before the header only.
//!
//! A single set system fits on one line as `s m: 1 2; 1 3; 2 3`.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, SetSystem, Vertex};
use crate::util::{colex_cmp, parse_rat, rat_string};
use crate::wiss::{ProbDist, Wiss};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Non-comment lines with their 1-based line numbers.
fn body_lines(text: &str) -> Result<Vec<(usize, &str)>> {
    let mut out = Vec::new();
    let mut header_seen = false;
    let lines: Vec<&str> = text.split('\n').collect();
    let last = lines.len();
    for (idx, line) in lines.into_iter().enumerate() {
        let no = idx + 1;
        if no == last && line.is_empty() {
            break;
        }
        if line.starts_with('#') {
            if header_seen {
                return Err(parse_err(no, "comments are only allowed before the header"));
            }
            continue;
        }
        if line.contains('\r') {
            return Err(parse_err(no, "carriage return in line; use LF line endings"));
        }
        header_seen = true;
        out.push((no, line));
    }
    Ok(out)
}

fn ints(no: usize, line: &str, what: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| parse_err(no, format!("{what}: `{t}` is not a nonnegative integer"))))
        .collect()
}

fn header(lines: &[(usize, &str)], names: &str) -> Result<(usize, usize, usize)> {
    let &(no, line) = lines.first().ok_or_else(|| parse_err(1, format!("missing header `{names}`")))?;
    let v = ints(no, line, "header")?;
    if v.len() != 3 {
        return Err(parse_err(no, format!("header must be `{names}`, found {} fields", v.len())));
    }
    Ok((v[0], v[1], v[2]))
}

fn edge_line(no: usize, line: &str, bound: usize) -> Result<Vec<Vertex>> {
    let e: Vec<Vertex> = ints(no, line, "edge")?.into_iter().map(|v| v as Vertex).collect();
    if e.is_empty() {
        return Err(parse_err(no, "empty edge"));
    }
    if e.windows(2).any(|w| w[0] >= w[1]) {
        return Err(parse_err(no, "vertices must be strictly ascending"));
    }
    if let Some(&v) = e.iter().find(|&&v| v == 0 || v as usize > bound) {
        return Err(parse_err(no, format!("vertex {v} outside [1, {bound}]")));
    }
    Ok(e)
}

fn check_count(lines: &[(usize, &str)], expected: usize, skip: usize) -> Result<()> {
    let got = lines.len() - skip;
    if got != expected {
        let no = lines.last().map_or(1, |l| l.0);
        return Err(parse_err(no, format!("header announces {expected} edges, found {got}")));
    }
    Ok(())
}

fn check_colex(no: usize, prev: Option<&Vec<Vertex>>, e: &[Vertex]) -> Result<()> {
    if let Some(p) = prev {
        match colex_cmp(p, e) {
            Ordering::Less => {}
            Ordering::Equal => return Err(parse_err(no, "duplicate edge")),
            Ordering::Greater => return Err(parse_err(no, "edges must be in colex order")),
        }
    }
    Ok(())
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let lines = body_lines(text)?;
    let (r, n, m) = header(&lines, "r n m")?;
    if r == 0 {
        return Err(parse_err(lines[0].0, "r must be positive"));
    }
    check_count(&lines, m, 1)?;
    let mut edges: Vec<Vec<Vertex>> = Vec::with_capacity(m);
    for &(no, line) in &lines[1..] {
        let e = edge_line(no, line, n)?;
        if e.len() != r {
            return Err(parse_err(no, format!("edge has {} vertices, expected {r}", e.len())));
        }
        check_colex(no, edges.last(), &e)?;
        edges.push(e);
    }
    Hypergraph::new(r, n, edges)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {} {}\n", h.r(), h.n(), h.edge_count());
    for e in h.edges() {
        push_set(&mut out, e);
        out.push('\n');
    }
    out
}

fn push_set(out: &mut String, e: &[Vertex]) {
    for (i, v) in e.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{v}");
    }
}

pub fn parse_wiss(text: &str) -> Result<Wiss> {
    let lines = body_lines(text)?;
    let (r, s, m) = header(&lines, "r s m")?;
    if s > 63 {
        return Err(parse_err(lines[0].0, format!("ground set size {s} exceeds 63")));
    }
    let &(wno, wline) = lines.get(1).ok_or_else(|| parse_err(lines[0].0 + 1, "missing weight line"))?;
    let weights = wline
        .split_whitespace()
        .map(|t| parse_rat(t).ok_or_else(|| parse_err(wno, format!("`{t}` is not a decimal or a/b rational"))))
        .collect::<Result<Vec<_>>>()?;
    if weights.len() != s {
        return Err(parse_err(wno, format!("expected {s} weights, found {}", weights.len())));
    }
    let p = ProbDist::exact(weights).map_err(|e| parse_err(wno, e.to_string()))?;
    check_count(&lines, m, 2)?;
    let mut edges: Vec<Vec<Vertex>> = Vec::with_capacity(m);
    for &(no, line) in &lines[2..] {
        let e = edge_line(no, line, s)?;
        if e.len() > r {
            return Err(parse_err(no, format!("edge has {} points, at most {r} allowed", e.len())));
        }
        check_colex(no, edges.last(), &e)?;
        edges.push(e);
    }
    let g = SetSystem::new(s, r, edges)?;
    Wiss::new(g, r, p)
}

pub fn write_wiss(w: &Wiss) -> String {
    let g = w.system();
    let mut out = format!("{} {} {}\n", w.r(), w.s(), g.len());
    let weights: Vec<String> = match w.dist().exact_p() {
        Some(p) => p.iter().map(rat_string).collect(),
        None => w.dist().p().iter().map(|x| format!("{x}")).collect(),
    };
    out.push_str(&weights.join(" "));
    out.push('\n');
    for e in g.members() {
        push_set(&mut out, &e);
        out.push('\n');
    }
    out
}

/// `s m: 1 2; 1 3; 2 3`.
pub fn system_line(g: &SetSystem) -> String {
    let mut out = format!("{} {}:", g.s(), g.len());
    for (i, e) in g.members().iter().enumerate() {
        out.push_str(if i == 0 { " " } else { "; " });
        push_set(&mut out, e);
    }
    out
}

/// Inverse of [`system_line`]; `r` caps the member size.
pub fn parse_system_line(line: &str, r: usize) -> Result<SetSystem> {
    let (head, body) = line.split_once(':').ok_or_else(|| parse_err(1, "expected `s m: ...`"))?;
    let v = ints(1, head, "header")?;
    if v.len() != 2 {
        return Err(parse_err(1, "header must be `s m`"));
    }
    let (s, m) = (v[0], v[1]);
    let mut edges: Vec<Vec<Vertex>> = Vec::new();
    for part in body.split(';').filter(|p| !p.trim().is_empty()) {
        let e = edge_line(1, part, s)?;
        check_colex(1, edges.last(), &e)?;
        edges.push(e);
    }
    if edges.len() != m {
        return Err(parse_err(1, format!("header announces {m} members, found {}", edges.len())));
    }
    SetSystem::new(s, r, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::construct::complete;

    #[test]
    fn hypergraph_round_trip() {
        let k = complete(5, 3).unwrap();
        let text = write_hypergraph(&k);
        assert!(text.starts_with("3 5 10\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n1 2 5\n"));
        assert_eq!(parse_hypergraph(&text).unwrap(), k);
        let commented = format!("# K5\n# two lines\n{text}");
        assert_eq!(parse_hypergraph(&commented).unwrap(), k);
    }

    #[test]
    fn hypergraph_errors_carry_line_numbers() {
        let cases = [
            ("3 5 2\n1 2 3\n", 2, "announces"),
            ("3 5 1\n1 2\n", 2, "expected 3"),
            ("3 5 2\n1 2 4\n1 2 3\n", 3, "colex"),
            ("3 5 1\n3 2 1\n", 2, "ascending"),
            ("3 5 1\n1 2 9\n", 2, "outside"),
            ("# c\n3 5 1\n1 2 x\n", 3, "not a nonnegative"),
            ("3 5 1\n# late\n1 2 3\n", 2, "comments"),
            ("3 5\n", 1, "header"),
            ("3 5 1\r\n1 2 3\n", 1, "carriage"),
        ];
        for (text, line, needle) in cases {
            match parse_hypergraph(text) {
                Err(Error::Parse { line: l, message }) => {
                    assert_eq!(l, line, "{text:?}: {message}");
                    assert!(message.contains(needle), "{text:?}: {message}");
                }
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn wiss_round_trip() {
        let text = "3 3 4\n0.3 1/4 0.2\n1 2\n1 3\n2 3\n1 2 3\n";
        let w = parse_wiss(text).unwrap();
        assert!(w.dist().is_exact());
        assert_eq!(w.dist().exact_inf().unwrap(), &crate::exact::rat(1, 4));
        let out = write_wiss(&w);
        assert_eq!(out, "3 3 4\n3/10 1/4 1/5\n1 2\n1 3\n2 3\n1 2 3\n");
        assert_eq!(write_wiss(&parse_wiss(&out).unwrap()), out);
    }

    #[test]
    fn wiss_errors() {
        assert!(matches!(parse_wiss("3 2 1\n0.2 0.3\n1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_wiss("2 2 1\n0.5 0.25\n1 2 3\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_wiss("2 2 1\n0.5 abc\n1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_wiss("2 2 2\n0.5 0.25\n1\n2\n"), Err(Error::NotIntersecting)));
    }

    #[test]
    fn system_lines() {
        let g = SetSystem::new(3, 2, [[1, 2], [1, 3], [2, 3]]).unwrap();
        let line = system_line(&g);
        assert_eq!(line, "3 3: 1 2; 1 3; 2 3");
        assert_eq!(parse_system_line(&line, 2).unwrap(), g);
    }
}
