use anyhow::{anyhow, Result};
use lda_core::coloring::{
    census, nbc_search, nbc_tree_interior, non_pendant_nbc_search, verify_interior_nbc, verify_nbc,
};
use lda_core::constructions::*;
use lda_core::dot::to_dot;
use lda_core::graph::{
    corona_empty, direct_product, disjoint_union, generate, join_k1, lexicographic_product,
};
use lda_core::solver::{
    chi_ld_exact, reproduce_table, structural_lower_bound, TableFamily, TableRow,
};
use lda_core::{
    ChiLd, FamilySpec, Graph, Labeling, LdaError, SearchBudget, SignColoring, SolveResult,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::doc::{load, write_json, write_text, Doc};
use crate::{
    Budget, Cli, Command, ConstructArgs, ConstructKind, Family, GenArgs, NbcArgs, ProductArgs,
    ProductKind, SolveArgs, Status, TableArgs, TableFamilyArg, TableFormat, UsageError,
};

/// Signs searched exhaustively before giving up on a balanced coloring.
const NBC_LIMIT: usize = 30;

pub fn run(cli: Cli) -> Result<Status> {
    let out = cli.out.as_str();
    match cli.command {
        Command::Gen(a) => {
            write_json(out, &gen(&a)?)?;
            Ok(Status::Ok)
        }
        Command::Product(a) => {
            write_json(out, &product(&a)?)?;
            Ok(Status::Ok)
        }
        Command::Nbc(a) => nbc(&a, out),
        Command::Construct(a) => construct(&a, out),
        Command::Verify(input) => verify(&load(input.path())?, out),
        Command::Solve(a) => solve(&a, out),
        Command::Table(a) => table(&a, out),
        Command::ExportDot(input) => {
            let d = load(input.path())?;
            let dot = match &d.labels {
                Some(f) => {
                    let report = lda_core::verify_lda(&d.graph, f)?;
                    to_dot(&d.graph, Some((f, &report)))
                }
                None => to_dot(&d.graph, None),
            };
            write_text(out, dot.trim_end())?;
            Ok(Status::Ok)
        }
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str, what: &str) -> Result<T> {
    v.ok_or_else(|| UsageError(format!("{what} requires --{flag}")).into())
}

fn need_with(path: &Option<String>, what: &str) -> Result<Doc> {
    let p = path
        .as_deref()
        .ok_or_else(|| UsageError(format!("{what} requires --with")))?;
    load(p)
}

fn pair(v: &[usize], flag: &str, what: &str) -> Result<(usize, usize)> {
    match v {
        [a, b] => Ok((*a, *b)),
        _ => Err(UsageError(format!("{what} requires --{flag} a,b")).into()),
    }
}

fn gen(a: &GenArgs) -> Result<Graph> {
    let n = || need(a.n, "n", "this family");
    let spec = match a.family {
        Family::Path => FamilySpec::Path(n()?),
        Family::Cycle => FamilySpec::Cycle(n()?),
        Family::Complete => FamilySpec::Complete(n()?),
        Family::Star => FamilySpec::Star(n()?),
        Family::Friendship => FamilySpec::Friendship(n()?),
        Family::Wheel => FamilySpec::Wheel(n()?),
        Family::Empty => FamilySpec::Empty(n()?),
        Family::BookC4 => FamilySpec::BookC4(need(a.t.or(a.n), "t", "book-c4")?),
        Family::Multipartite => FamilySpec::CompleteMultipartite(a.parts.clone()),
        Family::Bistar => {
            let (c, d) = pair(&a.parts, "parts", "bistar")?;
            FamilySpec::Bistar(c, d)
        }
        Family::RandomTree => FamilySpec::Tree(prufer_edges(n()?, a.seed)),
    };
    Ok(generate(&spec)?)
}

/// Edges of the tree with a uniformly random Prüfer sequence.
fn prufer_edges(n: usize, seed: u64) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf.min(s), leaf.max(s)));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn product(a: &ProductArgs) -> Result<Graph> {
    let g = load(a.input.path())?.graph;
    Ok(match a.kind {
        ProductKind::Direct => direct_product(&g, &need_with(&a.with, "direct")?.graph)?,
        ProductKind::Lexicographic => {
            lexicographic_product(&g, &need_with(&a.with, "lexicographic")?.graph)?
        }
        ProductKind::Union => disjoint_union(&g, need(a.m, "m", "union")?)?,
        ProductKind::Corona => corona_empty(&g, need(a.p, "p", "corona")?)?,
        ProductKind::Join => join_k1(&g),
    })
}

fn nbc(a: &NbcArgs, out: &str) -> Result<Status> {
    let d = load(a.input.path())?;
    let g = &d.graph;
    let sigma = match (&d.signs, a.interior) {
        (Some(s), _) => s.clone(),
        (None, true) => nbc_tree_interior(g)?,
        (None, false) => nbc_search(g)?
            .ok_or_else(|| LdaError::NoNbcExists("exhaustive search found none".into()))?,
    };
    let verified = if a.interior {
        verify_interior_nbc(g, &sigma)?
    } else {
        verify_nbc(g, &sigma)?
    };
    let mut doc = json!({ "signs": sigma.as_slice(), "verified": verified });
    if !a.interior {
        doc["census"] = serde_json::to_value(census(g, &sigma)?)?;
    }
    write_json(out, &doc)?;
    if a.verify && !verified {
        return Ok(Status::Rejected {
            kind: "not-balanced",
            message: "the coloring leaves some vertex unbalanced".into(),
        });
    }
    Ok(Status::Ok)
}

fn search_budget(b: &Budget) -> SearchBudget {
    SearchBudget::default()
        .with_max_nodes(b.budget)
        .with_threads(b.threads)
        .with_max_vertices(b.max_vertices)
}

/// The document's labeling, or an optimal one found by search.
fn labeling(d: &Doc, b: &Budget) -> Result<Labeling> {
    if let Some(f) = &d.labels {
        return Ok(f.clone());
    }
    chi_ld_exact(&d.graph, search_budget(b))?
        .witness
        .ok_or_else(|| LdaError::Budget("no labeling found within the budget".into()).into())
}

/// The document's sign coloring, or one found by search.
fn signs(d: &Doc, non_pendant: bool) -> Result<SignColoring> {
    if let Some(s) = &d.signs {
        return Ok(s.clone());
    }
    let found = if non_pendant {
        non_pendant_nbc_search(&d.graph, NBC_LIMIT)?
    } else {
        nbc_search(&d.graph)?
    };
    found.ok_or_else(|| LdaError::NoNbcExists("exhaustive search found none".into()).into())
}

fn construct(a: &ConstructArgs, out: &str) -> Result<Status> {
    use ConstructKind::*;
    let base = || load(a.input.path());
    let inner = |what: &str| -> Result<(Graph, Labeling, SignColoring)> {
        let h = need_with(&a.with, what)?;
        let f = labeling(&h, &a.budget)?;
        let s = signs(&h, false)?;
        Ok((h.graph, f, s))
    };
    let result = match a.kind {
        BookC4 => label_book_c4(need(a.t, "t", "book-c4")?)?,
        Multipartite => label_complete_multipartite(&a.parts)?,
        Corona => {
            let g = base()?;
            label_corona(
                &g.graph,
                &labeling(&g, &a.budget)?,
                need(a.p, "p", "corona")?,
            )?
        }
        Copies => {
            let g = base()?;
            let (f, s) = (labeling(&g, &a.budget)?, signs(&g, false)?);
            label_copies_nbc(&g.graph, &f, &s, need(a.m, "m", "copies")?)?
        }
        CopiesPendant => {
            let g = base()?;
            let (f, s) = (labeling(&g, &a.budget)?, signs(&g, true)?);
            label_copies_pendant(&g.graph, &f, &s, need(a.m, "m", "copies-pendant")?)?
        }
        DirectNbc => {
            let g = base()?;
            let (f, s) = (labeling(&g, &a.budget)?, signs(&g, false)?);
            label_direct_nbc(&g.graph, &f, &s, &need_with(&a.with, "direct-nbc")?.graph)?
        }
        DirectBipartite => {
            let (n1, n2) = pair(&a.parts, "parts", "direct-bipartite")?;
            label_direct_complete_bipartite(&base()?.graph, n1, n2)?
        }
        LexiRegular => {
            let (h, f, s) = inner("lexi-regular")?;
            label_lexi_regular_bipartite(&base()?.graph, &h, &f, &s)?
        }
        LexiBiregular => {
            let (h, f, s) = inner("lexi-biregular")?;
            label_lexi_biregular(&base()?.graph, &h, &f, &s)?
        }
        LexiJoin => {
            let (h, f, s) = inner("lexi-join")?;
            label_lexi_join_k1(&base()?.graph, &h, &f, &s)?
        }
        LexiBistar => {
            let (c, d) = pair(&a.sides, "sides", "lexi-bistar")?;
            label_lexi_bistar(c, d, &a.parts)?
        }
        MagicRectangle => {
            let rows = need(a.n, "n", "magic-rectangle")?;
            let cols = need(a.m, "m", "magic-rectangle")?;
            let rect = match a.seed {
                Some(seed) => magic_rectangle_seeded(rows, cols, seed)?,
                None => magic_rectangle(rows, cols)?,
            };
            write_json(out, &rect)?;
            return Ok(Status::Ok);
        }
    };
    write_json(out, &result)?;
    Ok(Status::Ok)
}

fn verify(d: &Doc, out: &str) -> Result<Status> {
    let f = d
        .labels
        .as_ref()
        .ok_or_else(|| anyhow!("input has no \"labels\" field"))?;
    let report = lda_core::verify_lda(&d.graph, f)?;
    write_json(out, &report)?;
    if !report.is_lda {
        return Ok(Status::Rejected {
            kind: "not-lda",
            message: format!(
                "{} edges join vertices of equal weight",
                report.violations.len()
            ),
        });
    }
    Ok(Status::Ok)
}

fn solve(a: &SolveArgs, out: &str) -> Result<Status> {
    let g = load(a.input.path())?.graph;
    match chi_ld_exact(&g, search_budget(&a.budget)) {
        Ok(r) => {
            write_json(out, &r)?;
            Ok(if r.exhausted {
                Status::Ok
            } else {
                Status::Partial
            })
        }
        Err(e) if e.is_budget() => {
            let partial = SolveResult {
                chi_ld: ChiLd::Bounds {
                    lower: structural_lower_bound(&g),
                    upper: None,
                },
                witness: None,
                nodes_explored: 0,
                exhausted: false,
            };
            write_json(out, &partial)?;
            eprintln!("{}", crate::error_json(e.kind(), &e.to_string()));
            Ok(Status::Partial)
        }
        Err(e) => Err(e.into()),
    }
}

fn table_family(f: TableFamilyArg) -> TableFamily {
    match f {
        TableFamilyArg::Cycles => TableFamily::Cycles,
        TableFamilyArg::Paths => TableFamily::Paths,
        TableFamilyArg::Complete => TableFamily::Complete,
        TableFamilyArg::Friendship => TableFamily::Friendship,
        TableFamilyArg::Wheels => TableFamily::Wheels,
    }
}

fn show_computed(c: &ChiLd) -> String {
    match c {
        ChiLd::Exact(k) => k.to_string(),
        ChiLd::Bounds {
            lower,
            upper: Some(u),
        } => format!("[{lower},{u}]"),
        ChiLd::Bounds { lower, upper: None } => format!("[{lower},?]"),
    }
}

fn show_known(k: Option<(usize, usize)>) -> String {
    match k {
        Some((lo, hi)) if lo == hi => lo.to_string(),
        Some((lo, hi)) => format!("[{lo},{hi}]"),
        None => "-".into(),
    }
}

fn render_table(rows: &[TableRow], format: TableFormat) -> String {
    let mut lines = Vec::with_capacity(rows.len() + 1);
    match format {
        TableFormat::Text => {
            lines.push(format!(
                "{:>4} {:>6} {:>8} {:>8}  agrees",
                "n", "order", "chi_ld", "known"
            ));
            for r in rows {
                lines.push(format!(
                    "{:>4} {:>6} {:>8} {:>8}  {}",
                    r.param,
                    r.order,
                    show_computed(&r.computed),
                    show_known(r.known),
                    if r.agrees { "yes" } else { "NO" }
                ));
            }
        }
        TableFormat::Csv => {
            lines.push("n,order,lower,upper,known_lower,known_upper,agrees,nodes".into());
            for r in rows {
                let (lo, hi) = match r.computed {
                    ChiLd::Exact(k) => (k.to_string(), k.to_string()),
                    ChiLd::Bounds { lower, upper } => (
                        lower.to_string(),
                        upper.map(|u| u.to_string()).unwrap_or_default(),
                    ),
                };
                let (klo, khi) = r
                    .known
                    .map(|(a, b)| (a.to_string(), b.to_string()))
                    .unwrap_or_default();
                lines.push(format!(
                    "{},{},{lo},{hi},{klo},{khi},{},{}",
                    r.param, r.order, r.agrees, r.nodes_explored
                ));
            }
        }
    }
    lines.join("\n")
}

fn table(a: &TableArgs, out: &str) -> Result<Status> {
    let family = table_family(a.family);
    let from = a.from.unwrap_or(family.min_param());
    if from > a.to {
        return Err(UsageError(format!("--from {from} exceeds --to {}", a.to)).into());
    }
    let rows = reproduce_table(family, from..=a.to, search_budget(&a.budget))?;
    write_text(out, &render_table(&rows, a.format))?;
    if let Some(r) = rows.iter().find(|r| !r.agrees) {
        return Ok(Status::Rejected {
            kind: "table-mismatch",
            message: format!(
                "n = {}: computed {} vs known {}",
                r.param,
                show_computed(&r.computed),
                show_known(r.known)
            ),
        });
    }
    if rows.iter().any(|r| r.computed.exact().is_none()) {
        return Ok(Status::Partial);
    }
    Ok(Status::Ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prufer_trees_are_trees() {
        for n in 2..12 {
            for seed in 0..5 {
                let edges = prufer_edges(n, seed);
                assert!(generate(&FamilySpec::Tree(edges)).unwrap().is_tree());
            }
        }
        assert!(prufer_edges(1, 0).is_empty());
    }

    #[test]
    fn interval_rendering() {
        assert_eq!(show_computed(&ChiLd::Exact(4)), "4");
        assert_eq!(
            show_computed(&ChiLd::Bounds {
                lower: 3,
                upper: Some(5)
            }),
            "[3,5]"
        );
        assert_eq!(
            show_computed(&ChiLd::Bounds {
                lower: 3,
                upper: None
            }),
            "[3,?]"
        );
        assert_eq!(show_known(Some((4, 4))), "4");
        assert_eq!(show_known(Some((4, 6))), "[4,6]");
        assert_eq!(show_known(None), "-");
    }

    #[test]
    fn csv_leaves_unknown_bounds_empty() {
        let row = TableRow {
            param: 11,
            order: 11,
            computed: ChiLd::Bounds {
                lower: 4,
                upper: None,
            },
            known: None,
            agrees: true,
            nodes_explored: 0,
        };
        let text = render_table(&[row], TableFormat::Csv);
        assert_eq!(text.lines().nth(1), Some("11,11,4,,,,true,0"));
    }
}
