//! Corpus ingestion: graph6 lines, generator specs and sweeps.
//!
//! Generator grammar, with `+` forming disjoint unions and `m*` repeating a
//! term:
//!
//! ```text
//! gen:cycle:7   gen:path:5   gen:complete:4   gen:empty:3
//! gen:kdd:3     gen:petersen gen:rr:12:3:42   gen:2*kdd:3+cycle:5
//! ```
//!
//! Sweeps expand to many graphs:
//!
//! ```text
//! sweep:rr:N:d:count[:seed]   N is one size or a range a-b
//! sweep:cycles:maxn           every 2-regular graph up to maxn vertices
//! sweep:complete:maxn         K_1 .. K_maxn
//! sweep:cliques:kmax:mmax     m K_k for k <= kmax, m <= mmax
//! sweep:kdd:dmax:mmax         m K_{d,d} for d <= dmax, m <= mmax
//! ```

use std::fs;
use std::io::{self, Read};
use std::path::Path;

use indpoly::graph::{self, parse_graph6};
use indpoly::Graph;

use crate::error::{HarnessError, Result};

/// One graph of a corpus with its descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphItem {
    pub id: String,
    pub graph: Graph,
}

fn number(text: &str, what: &str) -> Result<usize, String> {
    text.parse().map_err(|_| format!("{what} must be a nonnegative integer, got {text:?}"))
}

fn expect_args<'a>(family: &str, args: &'a [&'a str], count: usize) -> Result<&'a [&'a str], String> {
    if args.len() == count {
        Ok(args)
    } else {
        Err(format!("{family} takes {count} argument(s), got {}", args.len()))
    }
}

fn term_graph(term: &str) -> Result<Graph, String> {
    let (copies, body) = match term.split_once('*') {
        Some((m, rest)) => (number(m, "multiplier")?, rest),
        None => (1, term),
    };
    let mut parts = body.split(':');
    let family = parts.next().unwrap_or_default();
    let args: Vec<&str> = parts.collect();
    let g = match family {
        "cycle" => graph::cycle(number(expect_args(family, &args, 1)?[0], "n")?),
        "path" => graph::path(number(expect_args(family, &args, 1)?[0], "n")?),
        "complete" => graph::complete(number(expect_args(family, &args, 1)?[0], "n")?),
        "empty" => Graph::empty(number(expect_args(family, &args, 1)?[0], "n")?),
        "kdd" => graph::complete_bipartite(number(expect_args(family, &args, 1)?[0], "d")?),
        "petersen" => {
            expect_args(family, &args, 0)?;
            Ok(graph::petersen())
        }
        "rr" => {
            let args = expect_args(family, &args, 3)?;
            let seed = args[2].parse().map_err(|_| format!("seed must be an integer, got {:?}", args[2]))?;
            graph::random_regular(number(args[0], "n")?, number(args[1], "d")?, seed)
        }
        other => return Err(format!("unknown generator {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    if copies == 0 {
        return Ok(Graph::empty(0).expect("empty graph"));
    }
    graph::repeat(&g, copies).map_err(|e| e.to_string())
}

/// Builds the graph named by a `gen:` spec.
pub fn generate(spec: &str) -> Result<Graph, String> {
    let body = spec.strip_prefix("gen:").ok_or_else(|| "generator specs start with \"gen:\"".to_string())?;
    let mut result = Graph::empty(0).expect("empty graph");
    for term in body.split('+') {
        result = result.disjoint_union(&term_graph(term.trim())?).map_err(|e| e.to_string())?;
    }
    Ok(result)
}

fn from_spec(id: String) -> Result<GraphItem, String> {
    let graph = generate(&id)?;
    Ok(GraphItem { id, graph })
}

/// Multisets of cycle lengths (each at least 3) summing to `n`, as
/// nondecreasing sequences.
fn cycle_partitions(n: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in min..=n {
        if n - part == 0 || n - part >= part {
            prefix.push(part);
            cycle_partitions(n - part, part, prefix, out);
            prefix.pop();
        }
    }
}

fn size_range(text: &str) -> Result<(usize, usize), String> {
    match text.split_once('-') {
        Some((a, b)) => {
            let (a, b) = (number(a, "size")?, number(b, "size")?);
            if a > b {
                return Err(format!("empty size range {text:?}"));
            }
            Ok((a, b))
        }
        None => {
            let n = number(text, "size")?;
            Ok((n, n))
        }
    }
}

/// Expands a `sweep:` spec; `default_seed` seeds random sweeps without an
/// explicit seed.
pub fn expand_sweep(spec: &str, default_seed: u64) -> Result<Vec<GraphItem>, String> {
    let body = spec.strip_prefix("sweep:").ok_or_else(|| "sweep specs start with \"sweep:\"".to_string())?;
    let parts: Vec<&str> = body.split(':').collect();
    let (family, args) = parts.split_first().expect("split yields one part");
    let mut ids = Vec::new();
    match *family {
        "rr" => {
            if !(3..=4).contains(&args.len()) {
                return Err("sweep:rr takes N:d:count[:seed]".into());
            }
            let (lo, hi) = size_range(args[0])?;
            let d = number(args[1], "d")?;
            let count = number(args[2], "count")?;
            let seed = match args.get(3) {
                Some(s) => s.parse().map_err(|_| format!("seed must be an integer, got {s:?}"))?,
                None => default_seed,
            };
            let sizes: Vec<usize> = (lo..=hi).filter(|&n| n > d && n * d % 2 == 0).collect();
            if sizes.is_empty() && count > 0 {
                return Err(format!("no valid size in {lo}-{hi} for degree {d}"));
            }
            for i in 0..count {
                ids.push(format!("gen:rr:{}:{d}:{}", sizes[i % sizes.len()], seed.wrapping_add(i as u64)));
            }
        }
        "cycles" => {
            let max = number(expect_args("sweep:cycles", args, 1)?[0], "maxn")?;
            for n in 3..=max {
                let mut parts = Vec::new();
                cycle_partitions(n, 3, &mut Vec::new(), &mut parts);
                for lengths in parts {
                    let terms: Vec<String> = lengths.iter().map(|l| format!("cycle:{l}")).collect();
                    ids.push(format!("gen:{}", terms.join("+")));
                }
            }
        }
        "complete" => {
            let max = number(expect_args("sweep:complete", args, 1)?[0], "maxn")?;
            ids.extend((1..=max).map(|k| format!("gen:complete:{k}")));
        }
        "cliques" | "kdd" => {
            let args = expect_args(family, args, 2)?;
            let (kmax, mmax) = (number(args[0], "size")?, number(args[1], "copies")?);
            let name = if *family == "cliques" { "complete" } else { "kdd" };
            for k in 1..=kmax {
                ids.extend((1..=mmax).map(|m| format!("gen:{m}*{name}:{k}")));
            }
        }
        other => return Err(format!("unknown sweep {other:?}")),
    }
    ids.into_iter().map(from_spec).collect()
}

/// Parses one corpus entry: a graph6 string, a `gen:` spec or a `sweep:`.
pub fn parse_entry(text: &str, default_seed: u64) -> Result<Vec<GraphItem>, String> {
    let text = text.trim();
    if text.starts_with("gen:") {
        Ok(vec![from_spec(text.to_string())?])
    } else if text.starts_with("sweep:") {
        expand_sweep(text, default_seed)
    } else {
        let graph = parse_graph6(text).map_err(|e| e.to_string())?;
        Ok(vec![GraphItem { id: text.to_string(), graph }])
    }
}

/// Reads a corpus, one entry per line. Blank lines and `#` comments are
/// skipped; graph6 lines get the id `name:line`.
pub fn parse_corpus(name: &str, text: &str, default_seed: u64) -> Result<Vec<GraphItem>> {
    let mut items = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parsed = parse_entry(line, default_seed).map_err(|message| HarnessError::Parse {
            source_name: name.to_string(),
            line: i + 1,
            message,
        })?;
        let is_graph6 = !line.starts_with("gen:") && !line.starts_with("sweep:");
        items.extend(parsed.into_iter().map(|mut item| {
            if is_graph6 {
                item.id = format!("{name}:{}", i + 1);
            }
            item
        }));
    }
    Ok(items)
}

/// Resolves command-line inputs: `-` for stdin, spec strings, corpus files,
/// or a literal graph6 string.
pub fn load_inputs(inputs: &[String], default_seed: u64) -> Result<Vec<GraphItem>> {
    let mut items = Vec::new();
    for input in inputs {
        if input == "-" {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).map_err(|e| HarnessError::io("<stdin>", e))?;
            items.extend(parse_corpus("<stdin>", &text, default_seed)?);
        } else if input.starts_with("gen:") || input.starts_with("sweep:") || !Path::new(input).is_file() {
            let parsed = parse_entry(input, default_seed)
                .map_err(|message| HarnessError::Input { input: input.clone(), message })?;
            items.extend(parsed);
        } else {
            let text = fs::read_to_string(input).map_err(|e| HarnessError::io(input, e))?;
            items.extend(parse_corpus(input, &text, default_seed)?);
        }
    }
    Ok(items)
}

/// Resolves an input that must name exactly one graph.
pub fn load_single(input: &str, default_seed: u64) -> Result<GraphItem> {
    let mut items = load_inputs(&[input.to_string()], default_seed)?;
    if items.len() != 1 {
        return Err(HarnessError::Input {
            input: input.to_string(),
            message: format!("expected one graph, found {}", items.len()),
        });
    }
    Ok(items.pop().expect("one item"))
}
