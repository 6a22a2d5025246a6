//! The line-oriented input format:
//!
//! ```text
//! # comment
//! ring Q[x,y]
//! ideal I = x^6, x^4*y, x*y^5, y^6
//! element p = x^4*y + y^6
//! ```

use crate::error::ParseError;
use crate::ideal::Ideal;
use crate::monomial::TermOrder;
use crate::poly::Polynomial;
use crate::ring::RingCtx;

#[derive(Clone, Debug)]
pub struct Input {
    pub ring: RingCtx,
    pub ideal_name: String,
    pub ideal: Ideal,
    pub element: Option<(String, Polynomial)>,
}

fn err(line: usize, col: usize, expected: &str) -> ParseError {
    ParseError { line, col, expected: expected.to_string() }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// Column (1-based) of byte offset `at` in `line`.
fn col_of(line: &str, at: usize) -> usize {
    line[..at].chars().count() + 1
}

fn is_ident(s: &str) -> bool {
    let mut c = s.chars();
    c.next().is_some_and(|c| c.is_ascii_alphabetic()) && c.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// `name = rest` after a keyword; returns the name and the byte offset of
/// `rest` within `line`.
fn binding(line: &str, no: usize, from: usize) -> Result<(&str, usize), ParseError> {
    let rest = &line[from..];
    let eq = rest.find('=').ok_or_else(|| err(no, col_of(line, line.trim_end().len()), "'='"))?;
    let name = rest[..eq].trim();
    if !is_ident(name) {
        let off = from + rest.len() - rest.trim_start().len();
        return Err(err(no, col_of(line, off), "identifier"));
    }
    Ok((name, from + eq + 1))
}

fn parse_ring(line: &str, no: usize, from: usize) -> Result<RingCtx, ParseError> {
    let rest = &line[from..];
    let lead = rest.len() - rest.trim_start().len();
    let body = rest.trim();
    let at = from + lead;
    if !body.starts_with("Q[") {
        return Err(err(no, col_of(line, at), "'Q['"));
    }
    if !body.ends_with(']') {
        return Err(err(no, col_of(line, at + body.len()), "']'"));
    }
    let inner = &body[2..body.len() - 1];
    let vars: Vec<&str> = inner.split(',').map(str::trim).collect();
    let mut off = at + 2;
    for v in &vars {
        if !is_ident(v) {
            return Err(err(no, col_of(line, off), "variable name"));
        }
        off += v.len() + 1;
    }
    RingCtx::new(&vars, TermOrder::DegRevLex).map_err(|e| err(no, col_of(line, at), &e.to_string()))
}

/// Splits `line[from..]` at top-level commas and parses each piece.
fn parse_list(ring: &RingCtx, line: &str, no: usize, from: usize) -> Result<Vec<Polynomial>, ParseError> {
    let mut out = Vec::new();
    let mut start = from;
    let bytes = line.as_bytes();
    let mut i = from;
    loop {
        if i == line.len() || bytes[i] == b',' {
            let piece = &line[start..i];
            let lead = piece.len() - piece.trim_start().len();
            if piece.trim().is_empty() {
                return Err(err(no, col_of(line, start + lead), "polynomial"));
            }
            out.push(ring.parse_poly_at(piece.trim(), no, col_of(line, start + lead))?);
            if i == line.len() {
                return Ok(out);
            }
            start = i + 1;
        }
        i += 1;
    }
}

pub fn parse_input(text: &str) -> Result<Input, ParseError> {
    let mut ring: Option<RingCtx> = None;
    let mut ideal: Option<(String, Vec<Polynomial>)> = None;
    let mut element: Option<(String, Polynomial)> = None;
    let mut last_line = 1;
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        last_line = no;
        let line = strip_comment(raw).trim_end();
        let trimmed = line.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        let at = line.len() - trimmed.len();
        let kw_end = trimmed.find(|c: char| c.is_whitespace()).unwrap_or(trimmed.len());
        let kw = &trimmed[..kw_end];
        let from = at + kw_end;
        match kw {
            "ring" => {
                if ring.is_some() {
                    return Err(err(no, col_of(line, at), "a single ring declaration"));
                }
                ring = Some(parse_ring(line, no, from)?);
            }
            "ideal" | "element" => {
                let r = ring.as_ref().ok_or_else(|| err(no, col_of(line, at), "'ring' before this line"))?;
                let (name, body) = binding(line, no, from)?;
                if kw == "ideal" {
                    if ideal.is_some() {
                        return Err(err(no, col_of(line, at), "a single ideal declaration"));
                    }
                    ideal = Some((name.to_string(), parse_list(r, line, no, body)?));
                } else {
                    if element.is_some() {
                        return Err(err(no, col_of(line, at), "a single element declaration"));
                    }
                    let polys = parse_list(r, line, no, body)?;
                    if polys.len() != 1 {
                        return Err(err(no, col_of(line, body), "exactly one polynomial"));
                    }
                    element = Some((name.to_string(), polys.into_iter().next().unwrap()));
                }
            }
            _ => return Err(err(no, col_of(line, at), "'ring', 'ideal' or 'element'")),
        }
    }
    let ring = ring.ok_or_else(|| err(last_line, 1, "'ring' declaration"))?;
    let (ideal_name, gens) = ideal.ok_or_else(|| err(last_line, 1, "'ideal' declaration"))?;
    let ideal = Ideal::new(&ring, gens).map_err(|e| err(last_line, 1, &e.to_string()))?;
    Ok(Input { ring, ideal_name, ideal, element })
}

/// Renders an input back into the grammar.
pub fn render(ring: &RingCtx, gens: &[Polynomial], element: Option<&Polynomial>) -> String {
    let mut s = format!("ring Q[{}]\n", ring.vars().join(","));
    let g: Vec<String> = gens.iter().map(|p| ring.format_poly(p)).collect();
    s.push_str(&format!("ideal I = {}\n", g.join(", ")));
    if let Some(p) = element {
        s.push_str(&format!("element p = {}\n", ring.format_poly(p)));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ring_ideal_and_element() {
        let src = "# sextic\nring Q[x,y]\nideal I = x^6, x^4*y, x*y^5, y^6   # four generators\nelement p = x^4*y + y^6\n";
        let inp = parse_input(src).unwrap();
        assert_eq!(inp.ring.vars(), ["x", "y"]);
        assert_eq!(inp.ideal.gens().len(), 4);
        assert_eq!(inp.ring.format_poly(&inp.element.as_ref().unwrap().1), "y^6 + x^4*y");
        let again = parse_input(&render(&inp.ring, inp.ideal.gens(), inp.element.as_ref().map(|e| &e.1))).unwrap();
        assert_eq!(again.ideal.gens(), inp.ideal.gens());
    }

    #[test]
    fn missing_ideal_is_an_error() {
        let e = parse_input("ring Q[x]").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(e.expected.contains("ideal"));
    }

    #[test]
    fn errors_are_positioned() {
        let e = parse_input("ring Q[x,y]\nideal I = x^2, y^^3").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.col >= 16, "{e:?}");
        let e = parse_input("ideal I = x").unwrap_err();
        assert_eq!((e.line, e.col), (1, 1));
        let e = parse_input("ring Q[x,2y]\n").unwrap_err();
        assert_eq!((e.line, e.col), (1, 10));
        let e = parse_input("ring Q[x]\nideal I = x,\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_input("ring Q[x]\nfoo\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 1));
    }
}
