//! Group files: a `degree N` line followed by one generator per line in
//! cycle notation. `#` starts a comment; blank lines are skipped.

use std::path::Path;

use hypermap_core::perm::Permutation;

use crate::failure::{CliResult, Failure};

#[derive(Debug)]
pub struct GroupFile {
    pub generators: Vec<Permutation>,
}

pub fn read(path: &Path) -> CliResult<GroupFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|f| Failure::parse(format!("{}: {}", path.display(), f.message)))
}

/// Errors carry a `line N: ` prefix.
pub fn parse(text: &str) -> CliResult<GroupFile> {
    let mut degree = None;
    let mut generators = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |msg: String| Failure::parse(format!("line {line_no}: {msg}"));
        match degree {
            None => {
                let rest = line
                    .strip_prefix("degree")
                    .ok_or_else(|| at(format!("expected `degree N`, found {line:?}")))?;
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| at(format!("bad degree {:?}", rest.trim())))?;
                if n == 0 {
                    return Err(at("degree must be positive".into()));
                }
                degree = Some(n);
            }
            Some(n) => {
                let perm = Permutation::from_cycles(line, n).map_err(|e| at(e.to_string()))?;
                generators.push(perm);
            }
        }
    }
    if degree.is_none() {
        return Err(Failure::parse("line 1: missing `degree N` header"));
    }
    if generators.is_empty() {
        return Err(Failure::parse("no generators listed"));
    }
    Ok(GroupFile { generators })
}
