//! Text formats.
//!
//! 3-graph: header `n m`, then m lines `a b c` with 0 <= a < b < c < n in
//! strictly increasing lexicographic order. 2-graph: `n m` then `a b` lines,
//! same discipline. Pair colouring: `n s` then one line `a b colour` per pair,
//! lexicographic. Tournament: `n` then one line `winner loser` per pair,
//! ordered by the underlying unordered pair. Anything malformed, duplicated
//! or out of order is a hard error with a line number.

use std::fs;
use std::path::Path;

use crate::constructions::{PairColouring, Tournament};
use crate::error::{Error, Result};
use crate::hypergraph::{all_pairs, pair_count, pair_rank, PairGraph, TriSystem};

fn parse_err(path: &Path, line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        line,
        msg: msg.into(),
    }
}

fn read_lines(path: &Path) -> Result<Vec<String>> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(text.lines().map(str::to_string).collect())
}

fn parse_fields(path: &Path, line_no: usize, line: &str, want: usize) -> Result<Vec<usize>> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != want {
        return Err(parse_err(
            path,
            line_no,
            format!("expected {want} fields, got {}", fields.len()),
        ));
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| parse_err(path, line_no, format!("'{f}' is not a number")))
        })
        .collect()
}

pub fn write_tri_string(g: &TriSystem) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for t in g.edges() {
        out.push_str(&format!("{} {} {}\n", t[0], t[1], t[2]));
    }
    out
}

pub fn write_tri_file(path: &Path, g: &TriSystem) -> Result<()> {
    fs::write(path, write_tri_string(g)).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_tri_file(path: &Path) -> Result<TriSystem> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_tri_string(&text, path)
}

/// Parses the 3-graph text format; `origin` only labels errors.
pub fn parse_tri_string(text: &str, origin: &Path) -> Result<TriSystem> {
    let path = origin;
    let lines: Vec<&str> = text.lines().collect();
    if lines.is_empty() {
        return Err(parse_err(path, 1, "missing header"));
    }
    let header = parse_fields(path, 1, lines[0], 2)?;
    let (n, m) = (header[0], header[1]);
    if lines.len() != m + 1 {
        return Err(parse_err(
            path,
            lines.len(),
            format!("expected {m} edge lines after the header, got {}", lines.len() - 1),
        ));
    }
    let mut edges: Vec<[usize; 3]> = Vec::with_capacity(m);
    for (i, line) in lines.iter().enumerate().skip(1) {
        let f = parse_fields(path, i + 1, line, 3)?;
        let t = [f[0], f[1], f[2]];
        if !(t[0] < t[1] && t[1] < t[2] && t[2] < n) {
            return Err(parse_err(path, i + 1, "need 0 <= a < b < c < n"));
        }
        if let Some(prev) = edges.last() {
            if *prev >= t {
                return Err(parse_err(
                    path,
                    i + 1,
                    "edges must be sorted lexicographically without duplicates",
                ));
            }
        }
        edges.push(t);
    }
    TriSystem::new(n, edges)
}

pub fn write_pair_string(g: &PairGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for p in g.edges() {
        out.push_str(&format!("{} {}\n", p[0], p[1]));
    }
    out
}

pub fn read_pair_file(path: &Path) -> Result<PairGraph> {
    let lines = read_lines(path)?;
    if lines.is_empty() {
        return Err(parse_err(path, 1, "missing header"));
    }
    let header = parse_fields(path, 1, &lines[0], 2)?;
    let (n, m) = (header[0], header[1]);
    if lines.len() != m + 1 {
        return Err(parse_err(
            path,
            lines.len(),
            format!("expected {m} edge lines after the header, got {}", lines.len() - 1),
        ));
    }
    let mut edges: Vec<[usize; 2]> = Vec::with_capacity(m);
    for (i, line) in lines.iter().enumerate().skip(1) {
        let f = parse_fields(path, i + 1, line, 2)?;
        let p = [f[0], f[1]];
        if !(p[0] < p[1] && p[1] < n) {
            return Err(parse_err(path, i + 1, "need 0 <= a < b < n"));
        }
        if let Some(prev) = edges.last() {
            if *prev >= p {
                return Err(parse_err(
                    path,
                    i + 1,
                    "edges must be sorted lexicographically without duplicates",
                ));
            }
        }
        edges.push(p);
    }
    PairGraph::new(n, edges)
}

pub fn write_colouring_string(c: &PairColouring) -> String {
    let mut out = format!("{} {}\n", c.n(), c.colour_count());
    let mut pairs: Vec<[usize; 2]> = all_pairs(c.n()).collect();
    pairs.sort_unstable();
    for p in pairs {
        out.push_str(&format!("{} {} {}\n", p[0], p[1], c.get(p[0], p[1])));
    }
    out
}

pub fn read_colouring_file(path: &Path) -> Result<PairColouring> {
    let lines = read_lines(path)?;
    if lines.is_empty() {
        return Err(parse_err(path, 1, "missing header"));
    }
    let header = parse_fields(path, 1, &lines[0], 2)?;
    let (n, s) = (header[0], header[1]);
    let expect = pair_count(n);
    if lines.len() != expect + 1 {
        return Err(parse_err(
            path,
            lines.len(),
            format!("expected {expect} pair lines after the header"),
        ));
    }
    let mut sorted_pairs: Vec<[usize; 2]> = all_pairs(n).collect();
    sorted_pairs.sort_unstable();
    let mut colours = vec![0u16; expect];
    for (i, line) in lines.iter().enumerate().skip(1) {
        let f = parse_fields(path, i + 1, line, 3)?;
        let expected_pair = sorted_pairs[i - 1];
        if [f[0], f[1]] != expected_pair {
            return Err(parse_err(
                path,
                i + 1,
                format!(
                    "expected pair {} {} here (lexicographic order, every pair once)",
                    expected_pair[0], expected_pair[1]
                ),
            ));
        }
        if f[2] == 0 || f[2] > s {
            return Err(parse_err(path, i + 1, format!("colour must be in 1..={s}")));
        }
        colours[pair_rank(f[0], f[1])] = f[2] as u16;
    }
    PairColouring::new(n, s, colours)
}

pub fn write_tournament_string(t: &Tournament) -> String {
    let mut out = format!("{}\n", t.n());
    let mut pairs: Vec<[usize; 2]> = all_pairs(t.n()).collect();
    pairs.sort_unstable();
    for p in pairs {
        if t.forward(p[0], p[1]) {
            out.push_str(&format!("{} {}\n", p[0], p[1]));
        } else {
            out.push_str(&format!("{} {}\n", p[1], p[0]));
        }
    }
    out
}

pub fn read_tournament_file(path: &Path) -> Result<Tournament> {
    let lines = read_lines(path)?;
    if lines.is_empty() {
        return Err(parse_err(path, 1, "missing header"));
    }
    let header = parse_fields(path, 1, &lines[0], 1)?;
    let n = header[0];
    let expect = pair_count(n);
    if lines.len() != expect + 1 {
        return Err(parse_err(
            path,
            lines.len(),
            format!("expected {expect} orientation lines after the header"),
        ));
    }
    let mut sorted_pairs: Vec<[usize; 2]> = all_pairs(n).collect();
    sorted_pairs.sort_unstable();
    let mut forward = vec![false; expect];
    for (i, line) in lines.iter().enumerate().skip(1) {
        let f = parse_fields(path, i + 1, line, 2)?;
        let (winner, loser) = (f[0], f[1]);
        let pair = [winner.min(loser), winner.max(loser)];
        if pair != sorted_pairs[i - 1] {
            return Err(parse_err(
                path,
                i + 1,
                format!(
                    "expected the pair {{{}, {}}} here (ordered by unordered pair)",
                    sorted_pairs[i - 1][0], sorted_pairs[i - 1][1]
                ),
            ));
        }
        if winner == loser || pair[1] >= n {
            return Err(parse_err(path, i + 1, "need two distinct vertices < n"));
        }
        forward[pair_rank(pair[0], pair[1])] = winner < loser;
    }
    Tournament::new(n, forward)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::winding_tripartite;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::path::PathBuf;

    fn temp(name: &str, contents: &str) -> PathBuf {
        let path = std::env::temp_dir().join(format!("codegree-io-{name}"));
        fs::write(&path, contents).unwrap();
        path
    }

    #[test]
    fn tri_round_trip() {
        let g = winding_tripartite(9).unwrap();
        let path = temp("roundtrip.tri", &write_tri_string(&g));
        assert_eq!(read_tri_file(&path).unwrap(), g);
    }

    #[test]
    fn tri_rejects_malformed() {
        for (name, text) in [
            ("dup", "4 2\n0 1 2\n0 1 2\n"),
            ("unsorted", "4 2\n0 1 3\n0 1 2\n"),
            ("order", "4 1\n2 1 0\n"),
            ("range", "4 1\n0 1 4\n"),
            ("count", "4 2\n0 1 2\n"),
            ("junk", "4 1\n0 1 x\n"),
        ] {
            let path = temp(&format!("bad-{name}.tri"), text);
            assert!(read_tri_file(&path).is_err(), "{name} should fail");
        }
    }

    #[test]
    fn colouring_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let c = PairColouring::random(7, 3, &mut rng);
        let path = temp("colouring.txt", &write_colouring_string(&c));
        assert_eq!(read_colouring_file(&path).unwrap(), c);
    }

    #[test]
    fn tournament_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let t = Tournament::random(6, &mut rng);
        let path = temp("tournament.txt", &write_tournament_string(&t));
        assert_eq!(read_tournament_file(&path).unwrap(), t);
    }

    #[test]
    fn tournament_rejects_missing_pair() {
        let path = temp("bad-tournament.txt", "3\n1 0\n2 0\n2 0\n");
        assert!(read_tournament_file(&path).is_err());
    }
}
