//! Graph text formats.
//!
//! Two formats are supported:
//!
//! * the multigraph text format: a header `n m` followed by one record
//!   `u v k` per parallel class (multiplicity k, vertices 0-based) and
//!   `u u k` for k loops at u. `#` starts a comment that runs to the end
//!   of the line. Records are token-based, so a whole graph may sit on
//!   one line or span several.
//! * graph6 for simple graphs (the standard printable 6-bit encoding).
//!   The writer rejects loops and parallel edges.

use crate::multigraph::Multigraph;
use crate::{Error, Result};

/// Parses the multigraph text format.
pub fn read_text(input: &str) -> Result<Multigraph> {
    let mut tokens = Vec::new();
    for line in input.lines() {
        let body = line.split('#').next().unwrap_or("");
        tokens.extend(body.split_whitespace().map(|s| s.to_string()));
    }
    if tokens.len() < 2 {
        return Err(Error::Parse("expected header `n m`".into()));
    }
    let parse = |tok: &str| -> Result<usize> {
        tok.parse()
            .map_err(|_| Error::Parse(format!("bad integer {tok:?}")))
    };
    let n = parse(&tokens[0])?;
    let m = parse(&tokens[1])?;
    if n == 0 {
        return Err(Error::Parse("vertex count must be positive".into()));
    }
    let rest = &tokens[2..];
    if rest.len() % 3 != 0 {
        return Err(Error::Parse(
            "edge records must be `u v k` triples".into(),
        ));
    }
    let mut classes = Vec::new();
    for chunk in rest.chunks(3) {
        let (u, v, k) = (parse(&chunk[0])?, parse(&chunk[1])?, parse(&chunk[2])?);
        if u >= n || v >= n {
            return Err(Error::Parse(format!(
                "vertex {} out of range (n = {n})",
                u.max(v)
            )));
        }
        classes.push((u, v, k));
    }
    let g = Multigraph::from_classes(n, &classes)?;
    if g.edge_count() != m {
        return Err(Error::Parse(format!(
            "header claims m = {m} but records sum to {}",
            g.edge_count()
        )));
    }
    Ok(g)
}

/// Multi-line text form: header, then one class per line, loops last.
pub fn write_text(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v, k) in g.parallel_classes() {
        out.push_str(&format!("{u} {v} {k}\n"));
    }
    for v in 0..g.vertex_count() {
        let k = g.loop_count(v);
        if k > 0 {
            out.push_str(&format!("{v} {v} {k}\n"));
        }
    }
    out
}

/// Single-line record form of the same token stream, used by the
/// enumeration output where each graph occupies one line.
pub fn write_text_record(g: &Multigraph) -> String {
    write_text(g).split_whitespace().collect::<Vec<_>>().join(" ")
}

fn g6_size_header(n: usize) -> Result<Vec<u8>> {
    if n <= 62 {
        Ok(vec![n as u8 + 63])
    } else if n <= 258047 {
        let mut out = vec![126u8];
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
        Ok(out)
    } else {
        Err(Error::Domain(format!("graph too large for this writer: n = {n}")))
    }
}

/// Encodes a simple graph in graph6. Loops or parallel edges are
/// rejected with an explanatory error.
pub fn write_graph6(g: &Multigraph) -> Result<String> {
    if g.has_loops() {
        return Err(Error::Domain(
            "graph6 encodes simple graphs only; this graph has loops".into(),
        ));
    }
    if g.parallel_classes().any(|(_, _, k)| k > 1) {
        return Err(Error::Domain(
            "graph6 encodes simple graphs only; this graph has parallel edges".into(),
        ));
    }
    let n = g.vertex_count();
    let mut bytes = g6_size_header(n)?;
    // upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.multiplicity(i, j) == 1);
        }
    }
    for group in bits.chunks(6) {
        let mut b = 0u8;
        for (pos, &bit) in group.iter().enumerate() {
            if bit {
                b |= 1 << (5 - pos);
            }
        }
        bytes.push(b + 63);
    }
    Ok(String::from_utf8(bytes).expect("printable bytes"))
}

/// Decodes a graph6 line into a simple graph.
pub fn read_graph6(line: &str) -> Result<Multigraph> {
    let line = line.trim();
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 line".into()));
    }
    let pos;
    let n = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::Parse("unsupported graph6 size header".into()));
        }
        pos = 4;
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            let v = b
                .checked_sub(63)
                .ok_or_else(|| Error::Parse("bad graph6 size byte".into()))?;
            n = (n << 6) | v as usize;
        }
        n
    } else {
        pos = 1;
        bytes[0]
            .checked_sub(63)
            .ok_or_else(|| Error::Parse("bad graph6 size byte".into()))? as usize
    };
    if n == 0 {
        return Err(Error::Parse("graph6 graph with no vertices".into()));
    }
    let need_bits = n * (n - 1) / 2;
    let need_bytes = need_bits.div_ceil(6);
    if bytes.len() - pos != need_bytes {
        return Err(Error::Parse(format!(
            "graph6 body length {} does not match n = {n}",
            bytes.len() - pos
        )));
    }
    let mut bits = Vec::with_capacity(need_bytes * 6);
    for &b in &bytes[pos..] {
        let v = b
            .checked_sub(63)
            .ok_or_else(|| Error::Parse("bad graph6 body byte".into()))?;
        if v >= 64 {
            return Err(Error::Parse("bad graph6 body byte".into()));
        }
        for shift in (0..6).rev() {
            bits.push((v >> shift) & 1 == 1);
        }
    }
    let mut classes = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                classes.push((i, j, 1));
            }
            idx += 1;
        }
    }
    Multigraph::from_classes(n, &classes)
}

/// Reads either format: the text format when the content parses as one,
/// otherwise a graph6 line.
pub fn read_any(input: &str) -> Result<Multigraph> {
    match read_text(input) {
        Ok(g) => Ok(g),
        Err(text_err) => {
            let non_empty: Vec<&str> = input.lines().filter(|l| !l.trim().is_empty()).collect();
            if non_empty.len() == 1 {
                if let Ok(g) = read_graph6(non_empty[0]) {
                    return Ok(g);
                }
            }
            Err(text_err)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::families;

    #[test]
    fn text_round_trip() {
        for g in [
            families::make_z3(),
            families::make_l4(),
            families::make_k4_loops(2),
            families::make_gstar(10).unwrap(),
        ] {
            let s = write_text(&g);
            assert_eq!(read_text(&s).unwrap(), g);
            let one_line = write_text_record(&g);
            assert!(!one_line.contains('\n'));
            assert_eq!(read_text(&one_line).unwrap(), g);
        }
    }

    #[test]
    fn text_comments_and_errors() {
        let ok = "# theta graph\n2 3\n0 1 3 # the triple edge\n";
        assert_eq!(read_text(ok).unwrap(), families::make_z3());
        assert!(read_text("2 3\n0 1").is_err());
        assert!(read_text("2 3\n0 5 3").is_err());
        assert!(read_text("2 4\n0 1 3").is_err());
        assert!(read_text("").is_err());
    }

    #[test]
    fn graph6_round_trip_k4() {
        let g = families::make_k4();
        let s = write_graph6(&g).unwrap();
        assert_eq!(s, "C~");
        let back = read_graph6(&s).unwrap();
        assert!(is_isomorphic(&g, &back));
    }

    #[test]
    fn graph6_round_trip_bigger() {
        for n in [8, 10, 12] {
            let g = families::make_gstar(n).unwrap();
            let back = read_graph6(&write_graph6(&g).unwrap()).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn graph6_rejects_multigraphs() {
        assert!(write_graph6(&families::make_z3()).is_err());
        assert!(write_graph6(&families::make_k4_loops(1)).is_err());
    }

    #[test]
    fn read_any_detects_format() {
        let g = families::make_k4();
        assert_eq!(read_any(&write_text(&g)).unwrap(), g);
        assert_eq!(read_any("C~").unwrap(), g);
        assert!(read_any("!!!").is_err());
    }
}
