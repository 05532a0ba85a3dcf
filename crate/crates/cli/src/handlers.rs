use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::Instant;

use serde_json::{json, Value};

use rmub::arith::{exact_sqrt, prime_power};
use rmub::designs::{are_orthogonal, gf_mols, net_from_mols, LatinSquare};
use rmub::exact::{SignMatrix, SignVector};
use rmub::hadamard::{HadamardCatalog, HadamardMatrix, Status};
use rmub::search::{
    extend_lattice_lines, extend_real_mub, latin_d4_complex_certificate, max_mutually_unbiased_lines,
    max_orthogonal_set, SearchBudget, SearchOutcome, EXACT_LINES_MAX_DIM,
};
use rmub::{bounds_with, greedy_lines, latin_mubs, sylvester_lines, BoundOptions, BoundReport, LatticeLineSet};

use crate::args::{
    BudgetArgs, CatalogAction, ClassifyArgs, Command, ConstructArgs, ConstructKind, Format, SearchArgs, SearchKind,
};
use crate::formats::{parse_artifact, write_hadamard, write_lines, write_mols, write_mubs, write_net, Artifact};
use crate::{store, Failure, Outcome, EXIT_BUDGET, EXIT_OK, EXIT_VERIFY};

type Result<T> = std::result::Result<T, Failure>;

/// Upper limit on rows in one `classify` range.
const MAX_CLASSIFY_ROWS: u64 = 1_000_000;

pub(crate) fn execute(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Classify(a) => classify(a),
        Command::Construct(a) => construct(a),
        Command::Verify(a) => verify(&a.path),
        Command::Search(a) => search(a),
        Command::Catalog(a) => match a.action {
            CatalogAction::Export { out } => {
                let text = store::to_json(&store::load());
                emit(out.as_deref(), text, "hadamard catalog")
            }
            CatalogAction::Path => Ok(ok(format!("{}\n", store::catalog_path().display()))),
        },
    }
}

fn ok(stdout: String) -> Outcome {
    Outcome { code: EXIT_OK, stdout, stderr: String::new() }
}

fn parse_dims(spec: &str) -> Result<(u64, u64)> {
    let num = |s: &str| s.trim().parse::<u64>().map_err(|_| Failure::input(format!("not a dimension: {s:?}")));
    let (a, b) = match spec.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let d = num(spec)?;
            (d, d)
        }
    };
    if a < 2 {
        return Err(Failure::input(format!("dimensions start at 2, got {a}")));
    }
    if b < a {
        return Err(Failure::input(format!("empty range {a}..{b}")));
    }
    if b - a >= MAX_CLASSIFY_ROWS {
        return Err(Failure::input(format!("range {a}..{b} exceeds {MAX_CLASSIFY_ROWS} rows")));
    }
    Ok((a, b))
}

fn classify(a: ClassifyArgs) -> Result<Outcome> {
    let (lo, hi) = parse_dims(&a.dims)?;
    let catalog = store::load();
    let opts = BoundOptions { assume_hadamard_conjecture: a.assume_hadamard_conjecture };
    let reports = (lo..=hi).map(|d| bounds_with(d, &catalog, opts)).collect::<rmub::Result<Vec<_>>>()?;
    let text = match a.format {
        Format::Json => {
            let value = if lo == hi { json!(reports[0]) } else { json!(reports) };
            pretty(&value)
        }
        Format::Table => render_table(&reports),
    };
    Ok(ok(text))
}

/// Columns follow the published summary table: dimension, its class, then
/// the bound on the number of real MUBs.
fn render_table(reports: &[BoundReport]) -> String {
    let rows: Vec<[String; 5]> = reports
        .iter()
        .map(|r| {
            let bound = match r.exact {
                Some(e) => format!("= {e}"),
                None if r.lower.value == 1 => format!("<= {}", r.upper.value),
                None => format!("{} .. {}", r.lower.value, r.upper.value),
            };
            let mut remarks = r.caveats.clone();
            remarks.extend(r.notes.iter().cloned());
            [r.d.to_string(), r.class.to_string(), bound, r.lower.note.clone(), remarks.join("; ")]
        })
        .collect();
    let header = ["d", "class", "real MUBs", "lower bound from", "caveats / notes"];
    let width = |k: usize| rows.iter().map(|r| r[k].chars().count()).chain([header[k].len()]).max().unwrap_or(0);
    let widths: Vec<usize> = (0..4).map(width).collect();
    let mut out = String::new();
    let line = |out: &mut String, cells: [&str; 5]| {
        for (k, c) in cells.iter().take(4).enumerate() {
            let pad = widths[k] - c.chars().count();
            if k == 0 {
                let _ = write!(out, "{}{c}  ", " ".repeat(pad));
            } else {
                let _ = write!(out, "{c}{}  ", " ".repeat(pad));
            }
        }
        let _ = writeln!(out, "{}", cells[4]);
    };
    line(&mut out, header);
    for r in &rows {
        line(&mut out, [r[0].as_str(), r[1].as_str(), r[2].as_str(), r[3].as_str(), r[4].as_str()]);
    }
    out.lines().map(str::trim_end).collect::<Vec<_>>().join("\n") + "\n"
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn check_out_path(out: Option<&Path>) -> Result<()> {
    if let Some(p) = out {
        let parent = p.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
        if !parent.is_dir() {
            return Err(Failure::input(format!("output directory {} does not exist", parent.display())));
        }
    }
    Ok(())
}

fn emit(out: Option<&Path>, text: String, what: &str) -> Result<Outcome> {
    match out {
        None => Ok(ok(text)),
        Some(p) => {
            fs::write(p, &text).map_err(|e| Failure::input(format!("cannot write {}: {e}", p.display())))?;
            Ok(ok(format!("wrote {what} to {}\n", p.display())))
        }
    }
}

fn hadamard_from(catalog: &HadamardCatalog, order: usize) -> Result<(HadamardMatrix, String)> {
    match catalog.status(order).status {
        Status::Constructive(r) => Ok((r.build()?, r.to_string())),
        Status::Impossible => Err(Failure::infeasible(format!("order must be 1, 2, or ≡ 0 mod 4 (got {order})"))),
        Status::Unknown => {
            Err(Failure::infeasible(format!("no Sylvester/Paley/Kronecker construction known for order {order}")))
        }
    }
}

fn mols_for(q: u64, classes: Option<usize>) -> Result<(usize, Vec<LatinSquare>)> {
    if prime_power(q).is_none() {
        return Err(Failure::infeasible(format!("q must be a prime power, got {q}")));
    }
    let s = q as usize;
    let k = classes.unwrap_or(s + 1);
    if !(2..=s + 1).contains(&k) {
        return Err(Failure::infeasible(format!("a net over GF({q}) has 2 to {} parallel classes, got {k}", s + 1)));
    }
    let mut mols = gf_mols(q)?;
    mols.truncate(k - 2);
    Ok((s, mols))
}

fn construct(a: ConstructArgs) -> Result<Outcome> {
    let out = a.out.as_deref();
    check_out_path(out)?;
    let (text, what) = match a.kind {
        ConstructKind::Hadamard { order } => {
            let (h, recipe) = hadamard_from(&store::load(), order)?;
            if !rmub::is_hadamard(h.matrix()) {
                return Ok(verify_failed("constructed matrix is not Hadamard"));
            }
            (write_hadamard(h.matrix(), Some(&recipe)), format!("Hadamard matrix of order {order}"))
        }
        ConstructKind::LatinMubs { dim, classes } => {
            let s = exact_sqrt(dim as u64)
                .filter(|&s| s >= 2)
                .ok_or_else(|| Failure::infeasible(format!("latin MUBs need d = s² with s >= 2, got {dim}")))?;
            let (s, mols) = mols_for(s, classes)?;
            let (h, _) = hadamard_from(&store::load(), s)
                .map_err(|f| Failure::infeasible(format!("latin MUBs in d={dim} need a Hadamard matrix of order {s}: {}", f.message)))?;
            let net = net_from_mols(&mols, s)?;
            let ms = latin_mubs(&net, &h)?;
            if let Some(v) = ms.violation() {
                return Ok(verify_failed(&v.to_string()));
            }
            (write_mubs(&ms), format!("{} MUBs in dimension {dim}", ms.len()))
        }
        ConstructKind::SylvesterLines { i, s, signs } => {
            let signs: Vec<i8> = match signs {
                Some(t) => t.parse::<SignVector>().map_err(|e| Failure::input(format!("--signs: {e}")))?.entries().to_vec(),
                None => vec![1; (1usize << i.min(20)).saturating_sub(1)],
            };
            let ls = sylvester_lines(i, s, &signs)?;
            lines_artifact(ls)?
        }
        ConstructKind::GreedyLines { dim } => lines_artifact(greedy_lines(dim)?)?,
        ConstructKind::Mols { q } => {
            let (s, mols) = mols_for(q, None)?;
            (write_mols(s, &mols), format!("{} MOLS of order {q}", mols.len()))
        }
        ConstructKind::Net { q, classes } => {
            let (s, mols) = mols_for(q, classes)?;
            let net = net_from_mols(&mols, s)?;
            if let Some(v) = net.violation() {
                return Ok(verify_failed(&v.to_string()));
            }
            (write_net(&net), format!("({}, {s})-net", net.k()))
        }
    };
    // the written bytes must parse back and pass verification
    let reparsed = parse_artifact(&text).map_err(|e| Failure::new(EXIT_VERIFY, format!("output does not re-parse: {e}")))?;
    let check = check_artifact(&reparsed);
    if check.code != EXIT_OK {
        return Ok(check);
    }
    emit(out, text, &what)
}

fn lines_artifact(ls: LatticeLineSet) -> Result<(String, String)> {
    if let Some(v) = ls.violation() {
        return Err(Failure::new(EXIT_VERIFY, v.to_string()));
    }
    let what = format!("{} lattice lines in dimension {}", ls.len(), ls.dim());
    Ok((write_lines(&ls), what))
}

fn verify_failed(reason: &str) -> Outcome {
    Outcome { code: EXIT_VERIFY, stdout: format!("FAIL: {reason}\n"), stderr: String::new() }
}

fn read_artifact(path: &Path) -> Result<Artifact> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    parse_artifact(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn verify(path: &Path) -> Result<Outcome> {
    Ok(check_artifact(&read_artifact(path)?))
}

fn first_non_orthogonal_rows(h: &SignMatrix) -> Option<(usize, usize)> {
    let n = h.order();
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| {
        h.row(i).iter().zip(h.row(j)).map(|(&a, &b)| (a * b) as i64).sum::<i64>() != 0
    })
}

fn check_artifact(a: &Artifact) -> Outcome {
    let failure = match a {
        Artifact::Mubs(ms) => ms.violation().map(|v| v.to_string()),
        Artifact::Lines(ls) => ls.violation().map(|v| v.to_string()),
        Artifact::Net(net) => net.violation().map(|v| v.to_string()),
        Artifact::Hadamard(h) => first_non_orthogonal_rows(h).map(|(i, j)| format!("rows {i} and {j} are not orthogonal")),
        Artifact::Mols { q, squares } => check_mols(*q, squares).err(),
    };
    if let Some(reason) = failure {
        return verify_failed(&reason);
    }
    let summary = match a {
        Artifact::Mubs(ms) => format!("{} mutually unbiased bases in dimension {}", ms.len(), ms.dim()),
        Artifact::Lines(ls) => format!("{} mutually unbiased lattice lines in dimension {}", ls.len(), ls.dim()),
        Artifact::Net(net) => format!("({}, {})-net", net.k(), net.s()),
        Artifact::Hadamard(h) => format!("Hadamard matrix of order {}", h.order()),
        Artifact::Mols { q, squares } => format!("{} mutually orthogonal Latin squares of order {q}", squares.len()),
    };
    ok(format!("ok: {} ({summary})\n", a.kind()))
}

fn check_mols(q: usize, squares: &[Vec<Vec<u32>>]) -> std::result::Result<(), String> {
    let parsed = squares
        .iter()
        .enumerate()
        .map(|(k, rows)| {
            if rows.len() != q {
                return Err(format!("square {k} has {} rows, expected {q}", rows.len()));
            }
            LatinSquare::from_rows(rows).map_err(|e| format!("square {k}: {e}"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    for i in 0..parsed.len() {
        for j in i + 1..parsed.len() {
            if !are_orthogonal(&parsed[i], &parsed[j]).map_err(|e| e.to_string())? {
                return Err(format!("squares {i} and {j} are not orthogonal"));
            }
        }
    }
    Ok(())
}

fn budget_from(b: &BudgetArgs) -> Result<SearchBudget> {
    let budget = SearchBudget::new(b.max_candidates, b.max_seconds, b.exact_required)?;
    Ok(budget.with_workers(b.workers))
}

fn outcome_json<W>(o: &SearchOutcome<W>, witness: impl Fn(&W) -> Value) -> (Value, Option<Value>) {
    (json!(o.kind()), o.witness().map(witness))
}

fn search(a: SearchArgs) -> Result<Outcome> {
    let budget = budget_from(&a.budget)?;
    let start = Instant::now();
    let mut code = EXIT_OK;
    let mut report = serde_json::Map::new();
    match a.kind {
        SearchKind::ExtendLines { path } => {
            let Artifact::Lines(ls) = read_artifact(&path)? else {
                return Err(not_kind(&path, "a lines file"));
            };
            let r = extend_lattice_lines(&ls, &budget)?;
            let (outcome, witness) = outcome_json(&r.outcome, |w| json!(w.to_string()));
            report.insert("search".into(), json!("extend-lines"));
            report.insert("dim".into(), json!(ls.dim()));
            report.insert("lines".into(), json!(ls.len()));
            report.insert("outcome".into(), outcome);
            report.insert("candidates_examined".into(), json!(r.candidates_examined));
            if let Some(w) = witness {
                report.insert("witness".into(), w);
            }
            if matches!(r.outcome, SearchOutcome::BudgetExceeded(_)) {
                code = EXIT_BUDGET;
            }
        }
        SearchKind::ExtendMub { path } => {
            let ms = match read_artifact(&path)? {
                Artifact::Mubs(ms) => ms,
                _ => return Err(not_kind(&path, "a MUB file")),
            };
            let r = extend_real_mub(&ms, &budget)?;
            let (outcome, witness) =
                outcome_json(&r.outcome, |w| json!({"scale_sq": w.scale_sq(), "coords": w.coords()}));
            report.insert("search".into(), json!("extend-mub"));
            report.insert("dim".into(), json!(ms.dim()));
            report.insert("bases".into(), json!(ms.len()));
            report.insert("outcome".into(), outcome);
            report.insert("candidates_examined".into(), json!(r.candidates_examined));
            if let Some(w) = witness {
                report.insert("witness".into(), w);
            }
            if matches!(r.outcome, SearchOutcome::BudgetExceeded(_)) {
                code = EXIT_BUDGET;
            }
        }
        SearchKind::MaxLines { dim } => {
            let r = max_mutually_unbiased_lines(dim, &budget)?;
            let should_be_exact = dim <= EXACT_LINES_MAX_DIM || exact_sqrt(dim as u64).is_none();
            if !r.exact && (should_be_exact || budget.exact_required) {
                if budget.exact_required {
                    return Err(Failure::new(EXIT_BUDGET, format!("no exact maximum for d={dim} within the budget")));
                }
                code = EXIT_BUDGET;
            }
            report.insert("search".into(), json!("max-lines"));
            report.insert("dim".into(), json!(dim));
            report.insert("size".into(), json!(r.size));
            report.insert("exact".into(), json!(r.exact));
            report.insert("witness".into(), json!(r.witness.lines().iter().map(|l| l.to_string()).collect::<Vec<_>>()));
        }
        SearchKind::MaxOrthogonal { dim } => {
            let set = max_orthogonal_set(dim)?;
            report.insert("search".into(), json!("max-orthogonal"));
            report.insert("dim".into(), json!(dim));
            report.insert("size".into(), json!(set.len()));
            report.insert("exact".into(), json!(true));
            report.insert("witness".into(), json!(set.iter().map(|l| l.to_string()).collect::<Vec<_>>()));
        }
        SearchKind::LatinD4Complex { grid_steps } => {
            let c = latin_d4_complex_certificate(grid_steps)?;
            let Value::Object(fields) = json!(c) else { unreachable!("certificate is a struct") };
            report.insert("search".into(), json!("latin-d4-complex"));
            report.extend(fields);
        }
    }
    if a.budget.timing {
        report.insert("elapsed_seconds".into(), json!(start.elapsed().as_secs_f64()));
    }
    Ok(Outcome { code, stdout: pretty(&Value::Object(report)), stderr: String::new() })
}

fn not_kind(path: &Path, want: &str) -> Failure {
    Failure::input(format!("{} is not {want}", path.display()))
}
