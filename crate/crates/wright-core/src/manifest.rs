//! Plain-text manifests consumed by the CLI: the Laplace pair catalog for
//! `verify laplace` / `verify limits`, and sweep definitions for `sweep`.
//!
//! The format is a bare INI dialect: `[pair]` or `[curve]` opens a block,
//! `key = value` lines fill it, `#` starts a comment, blank lines separate.
//! For `[pair]` blocks the keys name/family/grid/tol_rel/tol_abs/slow are
//! structural; every other key is a named numeric parameter and file order
//! is preserved.  For `[curve]` blocks the structural keys are output/
//! target/sweep/start/stop/step; the rest become fixed parameters.

use std::path::Path;

use crate::error::{Result, WrightError};
use crate::laplace::TransformPair;
use crate::sweep::SweepSpec;

fn err(line: usize, msg: impl std::fmt::Display) -> WrightError {
    WrightError::Manifest(format!("line {line}: {msg}"))
}

/// (key, value, line number) triples of one `[kind]` block.
struct Block {
    kind: String,
    line: usize,
    entries: Vec<(String, String, usize)>,
}

impl Block {
    /// Remove and return the value for a structural key, if present.
    fn take(&mut self, key: &str) -> Option<(String, usize)> {
        let at = self.entries.iter().position(|(k, _, _)| k == key)?;
        let (_, v, line) = self.entries.remove(at);
        Some((v, line))
    }

    fn require(&mut self, key: &str) -> Result<(String, usize)> {
        self.take(key)
            .ok_or_else(|| err(self.line, format_args!("[{}] block needs '{key}'", self.kind)))
    }

    /// Whatever keys remain after the structural ones: parse as numeric
    /// parameters, keeping order.
    fn numeric_rest(self) -> Result<Vec<(String, f64)>> {
        self.entries
            .into_iter()
            .map(|(k, v, line)| Ok((k, parse_f64(&v, line)?)))
            .collect()
    }
}

fn parse_f64(v: &str, line: usize) -> Result<f64> {
    v.parse::<f64>()
        .map_err(|_| err(line, format_args!("'{v}' is not a number")))
}

fn parse_blocks(text: &str) -> Result<Vec<Block>> {
    let mut blocks: Vec<Block> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(at) => &raw[..at],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(kind) = line.strip_prefix('[') {
            let kind = kind
                .strip_suffix(']')
                .ok_or_else(|| err(line_no, "unterminated section header"))?
                .trim();
            if kind.is_empty() {
                return Err(err(line_no, "empty section header"));
            }
            blocks.push(Block {
                kind: kind.to_string(),
                line: line_no,
                entries: Vec::new(),
            });
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| err(line_no, format_args!("expected 'key = value', got '{line}'")))?;
        let key = key.trim().to_string();
        let value = value.trim().to_string();
        if key.is_empty() || value.is_empty() {
            return Err(err(line_no, "empty key or value"));
        }
        let block = blocks
            .last_mut()
            .ok_or_else(|| err(line_no, "'key = value' before any section header"))?;
        if block.entries.iter().any(|(k, _, _)| *k == key) {
            return Err(err(line_no, format_args!("duplicate key '{key}'")));
        }
        block.entries.push((key, value, line_no));
    }
    Ok(blocks)
}

fn pair_from_block(mut b: Block) -> Result<TransformPair> {
    let (name, _) = b.require("name")?;
    let (family, _) = b.require("family")?;
    let (grid_text, grid_line) = b.require("grid")?;
    let grid = grid_text
        .split_whitespace()
        .map(|tok| parse_f64(tok, grid_line))
        .collect::<Result<Vec<f64>>>()?;
    if grid.is_empty() {
        return Err(err(grid_line, "grid must list at least one point"));
    }
    let (tol_rel_text, tol_rel_line) = b.require("tol_rel")?;
    let tol_rel = parse_f64(&tol_rel_text, tol_rel_line)?;
    let tol_abs = match b.take("tol_abs") {
        Some((v, line)) => parse_f64(&v, line)?,
        None => 1e-8,
    };
    let slow = match b.take("slow") {
        Some((v, line)) => match v.as_str() {
            "true" => true,
            "false" => false,
            _ => return Err(err(line, format_args!("slow must be true or false, got '{v}'"))),
        },
        None => false,
    };
    Ok(TransformPair {
        name,
        family,
        params: b.numeric_rest()?,
        grid,
        tol_rel,
        tol_abs,
        slow,
    })
}

fn sweep_from_block(mut b: Block) -> Result<SweepSpec> {
    let (output, _) = b.require("output")?;
    let (target, _) = b.require("target")?;
    let (sweep_var, _) = b.require("sweep")?;
    let (v, line) = b.require("start")?;
    let start = parse_f64(&v, line)?;
    let (v, line) = b.require("stop")?;
    let stop = parse_f64(&v, line)?;
    let (v, line) = b.require("step")?;
    let step = parse_f64(&v, line)?;
    Ok(SweepSpec {
        target,
        fixed: b.numeric_rest()?,
        sweep_var,
        start,
        stop,
        step,
        output,
    })
}

/// Parse a `[pair]` manifest into the same shape `builtin_pairs` produces.
pub fn parse_pair_manifest(text: &str) -> Result<Vec<TransformPair>> {
    parse_blocks(text)?
        .into_iter()
        .map(|b| {
            if b.kind != "pair" {
                return Err(err(b.line, format_args!("expected [pair], got [{}]", b.kind)));
            }
            pair_from_block(b)
        })
        .collect()
}

/// Parse a `[curve]` manifest into sweep specs.  Shape only: target names
/// and parameter coverage are checked when each sweep runs.
pub fn parse_sweep_manifest(text: &str) -> Result<Vec<SweepSpec>> {
    parse_blocks(text)?
        .into_iter()
        .map(|b| {
            if b.kind != "curve" {
                return Err(err(b.line, format_args!("expected [curve], got [{}]", b.kind)));
            }
            sweep_from_block(b)
        })
        .collect()
}

pub fn load_pair_manifest(path: &Path) -> Result<Vec<TransformPair>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| WrightError::Io(format!("{}: {e}", path.display())))?;
    parse_pair_manifest(&text)
}

pub fn load_sweep_manifest(path: &Path) -> Result<Vec<SweepSpec>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| WrightError::Io(format!("{}: {e}", path.display())))?;
    parse_sweep_manifest(&text)
}

/// Render pairs in the manifest format, one blank line between blocks.
/// `parse_pair_manifest` inverts this exactly.
pub fn pairs_to_manifest(pairs: &[TransformPair]) -> String {
    let mut out = String::from("# Laplace-pair catalog; regenerate with WRIGHT_REGEN_MANIFESTS=1\n");
    for p in pairs {
        out.push_str("\n[pair]\n");
        out.push_str(&format!("name = {}\n", p.name));
        out.push_str(&format!("family = {}\n", p.family));
        for (k, v) in &p.params {
            out.push_str(&format!("{k} = {v}\n"));
        }
        let grid: Vec<String> = p.grid.iter().map(|g| g.to_string()).collect();
        out.push_str(&format!("grid = {}\n", grid.join(" ")));
        out.push_str(&format!("tol_rel = {:e}\n", p.tol_rel));
        out.push_str(&format!("tol_abs = {:e}\n", p.tol_abs));
        if p.slow {
            out.push_str("slow = true\n");
        }
    }
    out
}

/// Render sweep specs in the manifest format.
pub fn sweeps_to_manifest(sweeps: &[SweepSpec]) -> String {
    let mut out =
        String::from("# figure sweep definitions; regenerate with WRIGHT_REGEN_MANIFESTS=1\n");
    for s in sweeps {
        out.push_str("\n[curve]\n");
        out.push_str(&format!("output = {}\n", s.output));
        out.push_str(&format!("target = {}\n", s.target));
        out.push_str(&format!("sweep = {}\n", s.sweep_var));
        out.push_str(&format!("start = {}\n", s.start));
        out.push_str(&format!("stop = {}\n", s.stop));
        out.push_str(&format!("step = {}\n", s.step));
        for (k, v) in &s.fixed {
            out.push_str(&format!("{k} = {v}\n"));
        }
    }
    out
}
