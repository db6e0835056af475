//! JSON documents read by the subcommands.

use std::fs;
use std::io::{self, Read, Write};

use anyhow::{Context, Result};
use lda_core::{Graph, Labeling, SignColoring};
use serde_json::Value;

/// A graph with an optional labeling and sign coloring.
///
/// Accepts a bare graph (`{"n", "edges"}`) or any object with a `graph` key,
/// such as a construction result; `labels` and `signs` are read from the top
/// level when present.
pub struct Doc {
    pub graph: Graph,
    pub labels: Option<Labeling>,
    pub signs: Option<SignColoring>,
}

pub fn read_text(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

pub fn load(path: &str) -> Result<Doc> {
    let text = read_text(path)?;
    let v: Value =
        serde_json::from_str(&text).with_context(|| format!("parsing JSON from {path}"))?;
    let graph_value = v.get("graph").unwrap_or(&v);
    let graph: Graph = serde_json::from_value(graph_value.clone()).context("reading graph")?;
    let labels = match v.get("labels") {
        Some(_) => Some(serde_json::from_value(v.clone()).context("reading labels")?),
        None => None,
    };
    let signs = match v.get("signs") {
        Some(_) => Some(serde_json::from_value(v.clone()).context("reading signs")?),
        None => None,
    };
    Ok(Doc {
        graph,
        labels,
        signs,
    })
}

/// Writes `text` plus a newline to `path` (`-` is standard output).
pub fn write_text(path: &str, text: &str) -> Result<()> {
    if path == "-" {
        let mut out = io::stdout().lock();
        writeln!(out, "{text}").context("writing standard output")?;
        out.flush()?;
    } else {
        fs::write(path, format!("{text}\n")).with_context(|| format!("writing {path}"))?;
    }
    Ok(())
}

pub fn write_json<T: serde::Serialize>(path: &str, value: &T) -> Result<()> {
    write_text(path, &serde_json::to_string(value)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load_str(name: &str, text: &str) -> Result<Doc> {
        let path = std::env::temp_dir().join(format!("lda-doc-{}-{name}.json", std::process::id()));
        fs::write(&path, text).unwrap();
        let d = load(path.to_str().unwrap());
        fs::remove_file(&path).unwrap();
        d
    }

    #[test]
    fn bare_and_wrapped_graphs() {
        let bare = load_str("bare", r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(bare.graph.size(), 2);
        assert!(bare.labels.is_none() && bare.signs.is_none());
        let wrapped = load_str(
            "wrapped",
            r#"{"graph":{"n":3,"edges":[[0,1],[1,2]]},"labels":[2,1,3],"signs":[1,1,-1],"report":{}}"#,
        )
        .unwrap();
        assert_eq!(wrapped.graph, bare.graph);
        assert_eq!(wrapped.labels.unwrap().as_slice(), [2, 1, 3]);
        assert_eq!(wrapped.signs.unwrap().as_slice(), [1, 1, -1]);
    }

    #[test]
    fn rejects_non_bijective_labels() {
        assert!(load_str("bad", r#"{"graph":{"n":2,"edges":[[0,1]]},"labels":[1,1]}"#).is_err());
        assert!(load_str("edge", r#"{"n":2,"edges":[[0,2]]}"#).is_err());
    }
}
