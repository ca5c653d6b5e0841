//! Plain edge-list text and graph6.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

/// Parses `n <k>` followed by one `u v` edge per line. Blank lines and lines
/// starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("missing \"n <k>\" header".into()))?;
    let k = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", k] => k
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("vertex count {k:?}: {e}")))?,
        _ => return Err(Error::Parse(format!("expected \"n <k>\", got {header:?}"))),
    };
    let mut g = Graph::new(k)?;
    for (lineno, line) in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = parts[..] else {
            return Err(Error::Parse(format!(
                "line {}: expected \"u v\", got {line:?}",
                lineno + 1
            )));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| Error::Parse(format!("line {}: {s:?}: {e}", lineno + 1)))
        };
        g.add_edge(parse(u)?, parse(v)?)?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes a one-line graph6 string (optionally prefixed by `>>graph6<<`).
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Parse("empty graph6 string".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::Parse(format!("bad graph6 size byte {first}")));
    }
    if first == 126 {
        return Err(Error::Range {
            what: "vertex count",
            value: 63,
            max: MAX_VERTICES,
        });
    }
    let k = usize::from(first - 63);
    let mut g = Graph::new(k)?;
    let nbits = k * (k - 1) / 2;
    let needed = nbits.div_ceil(6);
    if body.len() != needed {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {needed}",
            body.len()
        )));
    }
    let mut bit = 0;
    for v in 1..k {
        for u in 0..v {
            let byte = body[bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Parse(format!("bad graph6 byte {byte}")));
            }
            if (byte - 63) & (1 << (5 - bit % 6)) != 0 {
                g.add_edge(u + 1, v + 1)?;
            }
            bit += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let k = g.vertex_count();
    let mut out = vec![(k + 63) as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..k {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u + 1, v + 1));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn edge_list_round_trip() {
        let text = "# a path\nn 4\n1 2\n\n2 3\n3 4\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, generators::path(4).unwrap());
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse(_))));
        assert!(matches!(parse_edge_list("k 3"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_edge_list("n 3\n1 2 3"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_edge_list("n 3\n1 4"),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn known_graph6_strings() {
        // Reference encodings: P4 is "Ch", K4 is "C~", C5 is "Dhc".
        assert_eq!(to_graph6(&generators::path(4).unwrap()), "Ch");
        assert_eq!(to_graph6(&generators::complete(4).unwrap()), "C~");
        assert_eq!(to_graph6(&generators::cycle(5).unwrap()), "Dhc");
        assert_eq!(from_graph6("Dhc").unwrap(), generators::cycle(5).unwrap());
        assert_eq!(
            from_graph6(">>graph6<<C~").unwrap(),
            generators::complete(4).unwrap()
        );
        assert!(from_graph6("C").is_err());
    }
}
