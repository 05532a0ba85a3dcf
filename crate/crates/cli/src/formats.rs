//! Text and JSON artifact formats.
//!
//! JSON is written by hand, one column or block per line, so that output is
//! byte-stable and diffs stay readable. Parsing goes through serde.

use std::fmt::Write as _;

use serde::Deserialize;

use rmub::designs::{IncidenceVector, LatinSquare, Net};
use rmub::exact::{ScaledBasis, SignMatrix, SignVector};
use rmub::{LatticeLineSet, MubSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Artifact {
    Mubs(MubSet),
    Lines(LatticeLineSet),
    Hadamard(SignMatrix),
    Net(Net),
    Mols { q: usize, squares: Vec<Vec<Vec<u32>>> },
}

impl Artifact {
    pub fn kind(&self) -> &'static str {
        match self {
            Artifact::Mubs(_) => "mubs",
            Artifact::Lines(_) => "lines",
            Artifact::Hadamard(_) => "hadamard",
            Artifact::Net(_) => "net",
            Artifact::Mols { .. } => "mols",
        }
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

pub fn write_mubs(ms: &MubSet) -> String {
    let mut out = format!("{{\n  \"type\": \"mubs\",\n  \"dim\": {},\n  \"bases\": [\n", ms.dim());
    for (j, b) in ms.bases().iter().enumerate() {
        let _ = writeln!(out, "    {{\n      \"scale_sq\": {},\n      \"columns\": [", b.scale_sq());
        for (k, c) in b.columns().iter().enumerate() {
            let sep = if k + 1 < b.dim() { "," } else { "" };
            let _ = writeln!(out, "        [{}]{sep}", join(c.coords()));
        }
        let sep = if j + 1 < ms.len() { "," } else { "" };
        let _ = writeln!(out, "      ]\n    }}{sep}");
    }
    out.push_str("  ]\n}\n");
    out
}

pub fn write_lines(ls: &LatticeLineSet) -> String {
    let mut out = format!("# lattice lines dim={} count={}\n", ls.dim(), ls.len());
    for l in ls.lines() {
        let _ = writeln!(out, "{l}");
    }
    out
}

pub fn write_hadamard(h: &SignMatrix, recipe: Option<&str>) -> String {
    let mut out = format!("# hadamard order={}\n", h.order());
    if let Some(r) = recipe {
        let _ = writeln!(out, "# recipe {r}");
    }
    for row in h.rows() {
        out.extend(row.iter().map(|&e| if e > 0 { '+' } else { '-' }));
        out.push('\n');
    }
    out
}

pub fn write_net(net: &Net) -> String {
    let mut out = format!("{{\n  \"type\": \"net\",\n  \"s\": {},\n  \"k\": {},\n  \"blocks\": [\n", net.s(), net.k());
    for (j, block) in net.blocks().iter().enumerate() {
        let vs: Vec<String> = block.iter().map(|v| format!("\"{v}\"")).collect();
        let sep = if j + 1 < net.k() { "," } else { "" };
        let _ = writeln!(out, "    [{}]{sep}", vs.join(", "));
    }
    out.push_str("  ]\n}\n");
    out
}

pub fn write_mols(q: usize, squares: &[LatinSquare]) -> String {
    let mut out = format!("{{\n  \"type\": \"mols\",\n  \"q\": {q},\n  \"squares\": [\n");
    for (j, sq) in squares.iter().enumerate() {
        out.push_str("    [\n");
        let rows: Vec<&[u32]> = sq.rows().collect();
        for (r, row) in rows.iter().enumerate() {
            let sep = if r + 1 < rows.len() { "," } else { "" };
            let _ = writeln!(out, "      [{}]{sep}", join(row));
        }
        let sep = if j + 1 < squares.len() { "," } else { "" };
        let _ = writeln!(out, "    ]{sep}");
    }
    out.push_str("  ]\n}\n");
    out
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisFile {
    scale_sq: i64,
    columns: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum JsonArtifact {
    Mubs { dim: usize, bases: Vec<BasisFile> },
    Net { s: usize, k: usize, blocks: Vec<Vec<String>> },
    Mols { q: usize, squares: Vec<Vec<Vec<u32>>> },
}

/// Parses any artifact, choosing JSON by a leading `{` and text otherwise.
pub fn parse_artifact(text: &str) -> Result<Artifact, String> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

fn parse_json(text: &str) -> Result<Artifact, String> {
    let raw: JsonArtifact = serde_json::from_str(text).map_err(|e| format!("invalid JSON artifact: {e}"))?;
    match raw {
        JsonArtifact::Mubs { dim, bases } => {
            let bases = bases
                .into_iter()
                .map(|b| ScaledBasis::new(b.scale_sq, b.columns))
                .collect::<rmub::Result<Vec<_>>>()
                .map_err(|e| e.to_string())?;
            MubSet::new(dim, bases).map(Artifact::Mubs).map_err(|e| e.to_string())
        }
        JsonArtifact::Net { s, k, blocks } => {
            if blocks.len() != k {
                return Err(format!("net header says k={k} but has {} blocks", blocks.len()));
            }
            let blocks = blocks
                .iter()
                .map(|b| b.iter().map(|v| v.parse::<IncidenceVector>()).collect::<rmub::Result<Vec<_>>>())
                .collect::<rmub::Result<Vec<_>>>()
                .map_err(|e| e.to_string())?;
            Net::new(s, blocks).map(Artifact::Net).map_err(|e| e.to_string())
        }
        JsonArtifact::Mols { q, squares } => Ok(Artifact::Mols { q, squares }),
    }
}

fn parse_text(text: &str) -> Result<Artifact, String> {
    let mut hadamard_order = None;
    let mut rows = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(order) = comment.trim().strip_prefix("hadamard order=") {
                let order: usize = order.trim().parse().map_err(|_| format!("line {}: bad hadamard order", n + 1))?;
                hadamard_order = Some(order);
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let v: SignVector = line.parse().map_err(|e| format!("line {}: {e}", n + 1))?;
        rows.push(v);
    }
    if let Some(order) = hadamard_order {
        if rows.len() != order {
            return Err(format!("hadamard header says order {order} but there are {} rows", rows.len()));
        }
        let rows: Vec<Vec<i8>> = rows.into_iter().map(|r| r.entries().to_vec()).collect();
        return SignMatrix::from_rows(&rows).map(Artifact::Hadamard).map_err(|e| e.to_string());
    }
    let Some(first) = rows.first() else {
        return Err("no lines found".into());
    };
    let d = first.len();
    if let Some((k, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != d) {
        return Err(format!("line {k} has length {}, expected {d}", r.len()));
    }
    LatticeLineSet::new(d, rows).map(Artifact::Lines).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rmub::designs::{gf_mols, net_from_mols};
    use rmub::{greedy_lines, latin_mubs, sylvester};

    #[test]
    fn mubs_round_trip() {
        let net = net_from_mols(&gf_mols(2).unwrap(), 2).unwrap();
        let ms = latin_mubs(&net, &sylvester(1).unwrap()).unwrap();
        let text = write_mubs(&ms);
        assert!(text.starts_with("{\n  \"type\": \"mubs\",\n  \"dim\": 4,"));
        assert_eq!(parse_artifact(&text).unwrap(), Artifact::Mubs(ms));
        let back = match parse_artifact(&text).unwrap() {
            Artifact::Mubs(m) => write_mubs(&m),
            _ => unreachable!(),
        };
        assert_eq!(back, text);
    }

    #[test]
    fn lines_and_hadamard_round_trip() {
        let ls = greedy_lines(16).unwrap();
        assert_eq!(parse_artifact(&write_lines(&ls)).unwrap(), Artifact::Lines(ls));
        let h = sylvester(2).unwrap();
        let text = write_hadamard(h.matrix(), Some("sylvester(2)"));
        assert!(text.starts_with("# hadamard order=4\n# recipe sylvester(2)\n++++\n+-+-\n"));
        assert_eq!(parse_artifact(&text).unwrap(), Artifact::Hadamard(h.matrix().clone()));
    }

    #[test]
    fn unicode_minus_is_accepted() {
        let a = parse_artifact("# two lines\n++++\n+++−\n").unwrap();
        let Artifact::Lines(ls) = a else { panic!() };
        assert_eq!(ls.lines()[1].to_string(), "+++-");
    }

    #[test]
    fn net_and_mols_round_trip() {
        let mols = gf_mols(3).unwrap();
        let net = net_from_mols(&mols, 3).unwrap();
        assert_eq!(parse_artifact(&write_net(&net)).unwrap(), Artifact::Net(net));
        let text = write_mols(3, &mols);
        let Artifact::Mols { q, squares } = parse_artifact(&text).unwrap() else { panic!() };
        assert_eq!((q, squares.len()), (3, 2));
        assert_eq!(squares[0], mols[0].rows().map(|r| r.to_vec()).collect::<Vec<_>>());
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_artifact("{\"type\": \"mubs\"").is_err());
        assert!(parse_artifact("{\"type\": \"other\"}").is_err());
        assert!(parse_artifact("++\n+++\n").is_err());
        assert!(parse_artifact("# hadamard order=3\n++\n+-\n").is_err());
        assert!(parse_artifact("+x+\n").is_err());
        assert!(parse_artifact("# nothing\n").is_err());
    }
}
