//! Worked-example fixtures: each file holds an object and the statistics it
//! is expected to have. `figures` recomputes the statistics and diffs.
//!
//! File format, blank lines and `#` comments ignored:
//!
//! ```text
//! [input]
//! kind: brick-tableau
//! row: 2 1
//! [expected]
//! weight: 2
//! ```

use std::fmt::Write;
use std::path::{Path, PathBuf};

use serde_json::json;
use symstab::frobenius::{LabeledDyckPath, MacdonaldFilling, Step};
use symstab::stability::Table;
use symstab::tableaux::{BrickTableau, RimHookTableau};
use symstab::{Cell, Error, Result};

use crate::output::Output;

pub struct Fixture {
    pub name: String,
    pub input: Vec<(String, String)>,
    pub expected: Vec<(String, String)>,
}

pub fn parse_fixture(name: &str, text: &str) -> Result<Fixture> {
    let mut input = Vec::new();
    let mut expected = Vec::new();
    let mut section: Option<bool> = None;
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match line {
            "[input]" => section = Some(false),
            "[expected]" => section = Some(true),
            _ => {
                let (key, value) = line
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("{name}:{}: expected `key: value`", k + 1)))?;
                let pair = (key.trim().to_string(), value.trim().to_string());
                match section {
                    Some(false) => input.push(pair),
                    Some(true) => expected.push(pair),
                    None => return Err(Error::Parse(format!("{name}:{}: outside a section", k + 1))),
                }
            }
        }
    }
    Ok(Fixture { name: name.to_string(), input, expected })
}

fn get<'a>(f: &'a Fixture, key: &str) -> Result<&'a str> {
    f.input
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v.as_str())
        .ok_or_else(|| Error::Parse(format!("{}: missing input `{key}`", f.name)))
}

fn rows(f: &Fixture) -> Result<Vec<Vec<usize>>> {
    f.input
        .iter()
        .filter(|(k, _)| k == "row")
        .map(|(_, v)| {
            v.split_whitespace()
                .map(|x| x.parse::<usize>().map_err(|e| Error::Parse(format!("{}: {x:?}: {e}", f.name))))
                .collect()
        })
        .collect()
}

fn cells(cs: &[Cell]) -> String {
    cs.iter().map(|c| format!("({},{})", c.row, c.col)).collect::<Vec<_>>().join(" ")
}

fn words(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn steps(p: &LabeledDyckPath) -> String {
    p.steps().iter().map(|s| if *s == Step::N { 'N' } else { 'E' }).collect()
}

/// The coarsest `α` for which `word` is an `α`-shuffle: cut between `v` and
/// `v + 1` whenever `v + 1` is read first.
pub fn coarsest_shuffle(word: &[usize]) -> Vec<usize> {
    let n = word.len();
    let mut pos = vec![0; n + 2];
    for (k, &v) in word.iter().enumerate() {
        pos[v] = k;
    }
    let mut out = Vec::new();
    let mut run = 0;
    for v in 1..=n {
        run += 1;
        if v == n || pos[v + 1] < pos[v] {
            out.push(run);
            run = 0;
        }
    }
    out
}

fn path_stats(p: &LabeledDyckPath, out: &mut Vec<(String, String)>) {
    let pairs: Vec<String> = p.dinv_pairs().iter().map(|(a, b)| format!("({a},{b})")).collect();
    let word = p.reading_word();
    let mut push = |k: &str, v: String| out.push(kv(k, v));
    push("steps", steps(p));
    push("labels", words(p.labels()));
    push("reading word", words(&word));
    push("area sequence", words(&p.area_sequence()));
    push("area", p.area().to_string());
    push("dinv pairs", pairs.join(" "));
    push("dinv", p.dinv().to_string());
    let alpha: Vec<String> = coarsest_shuffle(&word).iter().map(usize::to_string).collect();
    push("coarsest shuffle", format!("[{}]", alpha.join(",")));
}

fn parse_path(f: &Fixture) -> Result<LabeledDyckPath> {
    let labels: Vec<usize> = get(f, "labels")?
        .split_whitespace()
        .map(|x| x.parse::<usize>().map_err(|e| Error::Parse(format!("{}: {x:?}: {e}", f.name))))
        .collect::<Result<_>>()?;
    LabeledDyckPath::parse(get(f, "steps")?, &labels)
}

/// Recomputes every statistic the fixture's kind supports.
fn kv(k: &str, v: String) -> (String, String) {
    (k.to_string(), v)
}

pub fn compute(f: &Fixture) -> Result<Vec<(String, String)>> {
    let mut out: Vec<(String, String)> = Vec::new();
    match get(f, "kind")? {
        "brick-tableau" => {
            let t = BrickTableau::from_top_rows(rows(f)?)?;
            out.push(kv("shape", t.shape().to_string()));
            out.push(kv("content", t.content().to_string()));
            out.push(kv("weight", t.weight().to_string()));
        }
        "rim-hook-tableau" => {
            let t = RimHookTableau::from_top_rows(rows(f)?)?;
            out.push(kv("shape", t.shape().to_string()));
            out.push(kv("content", t.content().to_string()));
            out.push(kv("south steps", t.south_steps().to_string()));
            out.push(kv("sign", t.sign().to_string()));
        }
        "labeled-dyck-path" => path_stats(&parse_path(f)?, &mut out),
        "extended-dyck-path" => {
            let p = parse_path(f)?;
            let q = p.psi();
            path_stats(&q, &mut out);
            let kept = q.area() == p.area() && q.dinv() == p.dinv();
            out.push(kv("statistics preserved", if kept { "yes" } else { "no" }.into()));
        }
        "macdonald-filling" => {
            let t = MacdonaldFilling::from_top_rows(rows(f)?)?;
            out.push(kv("shape", t.shape().to_string()));
            out.push(kv("content", words(&t.content())));
            out.push(kv("descents", cells(&t.descents())));
            out.push(kv("maj", t.maj().to_string()));
            let triples: Vec<String> = t
                .inversion_triples()
                .iter()
                .map(|(u, w, v)| match v {
                    Some(v) => cells(&[*u, *w, *v]).replace(' ', ""),
                    None => format!("{}-", cells(&[*u, *w]).replace(' ', "")),
                })
                .collect();
            out.push(kv("inversion triples", triples.join(" ")));
            out.push(kv("inv", t.inv().to_string()));
        }
        other => return Err(Error::Parse(format!("{}: unknown kind {other:?}", f.name))),
    }
    Ok(out)
}

pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub struct FiguresResult {
    pub output: Output,
    pub mismatches: usize,
}

pub fn run(dir: &Path) -> std::result::Result<FiguresResult, String> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| format!("{}: {e}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(format!("no fixtures in {}", dir.display()));
    }
    let mut table = Table::new(&["fixture", "statistic", "expected", "computed", "status"]);
    let mut records = Vec::new();
    let mut mismatches = 0;
    let mut summary = String::new();
    for path in files {
        let name = path.file_stem().unwrap_or_default().to_string_lossy().to_string();
        let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        let fixture = parse_fixture(&name, &text).map_err(|e| e.to_string())?;
        let computed = compute(&fixture).map_err(|e| format!("{name}: {e}"))?;
        let mut bad = 0;
        let mut keys: Vec<&String> = computed.iter().map(|(k, _)| k).collect();
        for (k, _) in &fixture.expected {
            if !keys.contains(&k) {
                keys.push(k);
            }
        }
        for key in keys {
            let exp = fixture.expected.iter().find(|(k, _)| k == key).map(|(_, v)| v.clone());
            let got = computed.iter().find(|(k, _)| k == key).map(|(_, v)| v.clone());
            let ok = exp.is_some() && exp == got;
            if !ok {
                bad += 1;
            }
            let show = |v: &Option<String>| v.clone().unwrap_or_else(|| "-".into());
            table.push(vec![
                name.clone(),
                key.clone(),
                show(&exp),
                show(&got),
                if ok { "ok" } else { "MISMATCH" }.into(),
            ]);
            records.push(json!({"fixture": name, "statistic": key, "expected": exp, "computed": got, "ok": ok}));
            if !ok {
                writeln!(summary, "{name}: {key}: expected {}, computed {}", show(&exp), show(&got)).unwrap();
            }
        }
        if bad == 0 {
            writeln!(summary, "{name}: ok").unwrap();
        }
        mismatches += bad;
    }
    write!(summary, "{} mismatches", mismatches).unwrap();
    Ok(FiguresResult {
        output: Output::new(table, json!({"mismatches": mismatches, "checks": records})).with_text(summary),
        mismatches,
    })
}
