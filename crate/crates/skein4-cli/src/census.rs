//! The bundled census of small diagrams and the CSV loader behind it.

use std::collections::BTreeSet;

use anyhow::{bail, Context, Result};
use serde::Deserialize;
use skein4::diagram::parse::parse_diagram;
use skein4::LinkDiagram;

/// One census row: a named diagram plus the statistics the file promises.
pub struct CensusEntry {
    pub name: String,
    pub code: String,
    pub diagram: LinkDiagram,
}

#[derive(Deserialize)]
struct RawEntry {
    name: String,
    code: String,
    #[serde(default)]
    crossings: Option<usize>,
    #[serde(default)]
    mu: Option<usize>,
}

/// CSV bundled into the binary; every row is revalidated on load.
pub const BUILTIN: &str = include_str!("../data/census7.csv");

pub fn load_builtin() -> Result<Vec<CensusEntry>> {
    load_csv(BUILTIN).context("bundled census")
}

pub fn load_file(path: &str) -> Result<Vec<CensusEntry>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading census file {path}"))?;
    load_csv(&text).with_context(|| format!("census file {path}"))
}

/// Parses `name,code` rows, checking that names are unique.  Optional
/// `crossings` and `mu` columns are verified against the parsed diagram.
pub fn load_csv(text: &str) -> Result<Vec<CensusEntry>> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for row in reader.deserialize() {
        let raw: RawEntry = row?;
        if !seen.insert(raw.name.clone()) {
            bail!("duplicate census name '{}'", raw.name);
        }
        let diagram = parse_diagram(&raw.code)
            .map_err(|e| anyhow::anyhow!("entry '{}': {e}", raw.name))?;
        if let Some(c) = raw.crossings {
            if diagram.crossing_count() != c {
                bail!(
                    "entry '{}' declares {c} crossings but the code has {}",
                    raw.name,
                    diagram.crossing_count()
                );
            }
        }
        if let Some(mu) = raw.mu {
            if diagram.mu() != mu {
                bail!(
                    "entry '{}' declares {mu} components but the code has {}",
                    raw.name,
                    diagram.mu()
                );
            }
        }
        out.push(CensusEntry {
            name: raw.name,
            code: raw.code,
            diagram,
        });
    }
    if out.is_empty() {
        bail!("census has no entries");
    }
    Ok(out)
}

/// Finds one entry of the bundled census by name.
pub fn find_builtin(name: &str) -> Result<CensusEntry> {
    let mut entries = load_builtin()?;
    match entries.iter().position(|e| e.name == name) {
        Some(k) => Ok(entries.swap_remove(k)),
        None => {
            let names: Vec<String> = entries.into_iter().map(|e| e.name).collect();
            bail!(
                "no census entry '{name}'; available: {}",
                names.join(", ")
            )
        }
    }
}
