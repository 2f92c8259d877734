use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// One corpus entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tags: Option<Vec<String>>,
}

impl GroupSpec {
    pub fn build(&self) -> Result<PermGroup> {
        let gens = self
            .generators
            .iter()
            .map(|g| Permutation::parse(g, self.degree))
            .collect::<Result<Vec<_>>>()?;
        let group = PermGroup::new(self.degree, gens)?;
        if let Some(order) = self.order {
            if group.order() != order {
                return Err(Error::Precondition(format!(
                    "declared order {order} but generators give {}",
                    group.order()
                )));
            }
        }
        Ok(group)
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags
            .as_ref()
            .is_some_and(|t| t.iter().any(|x| x == tag))
    }
}

/// Parsed corpus with the warnings raised while loading.
#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub specs: Vec<GroupSpec>,
    pub warnings: Vec<String>,
    /// SHA-256 of the concatenated input files.
    pub sha256: String,
}

impl Corpus {
    pub fn find(&self, name: &str) -> Option<&GroupSpec> {
        self.specs.iter().find(|s| s.name == name)
    }
}

/// Parses JSON-lines text, one entry per nonblank line.
pub fn parse_corpus(text: &str) -> Result<Vec<GroupSpec>> {
    let mut specs: Vec<GroupSpec> = Vec::new();
    let mut names = HashSet::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let spec: GroupSpec = serde_json::from_str(trimmed).map_err(|e| Error::Corpus {
            line: line_no,
            message: e.to_string(),
        })?;
        spec.build().map_err(|e| Error::Corpus {
            line: line_no,
            message: format!("entry {}: {e}", spec.name),
        })?;
        if !names.insert(spec.name.clone()) {
            return Err(Error::Corpus {
                line: line_no,
                message: format!("duplicate name {}", spec.name),
            });
        }
        specs.push(spec);
    }
    Ok(specs)
}

/// Loads and validates one or more corpus files; names must be unique
/// across all of them.
pub fn load_corpus<P: AsRef<Path>>(paths: &[P]) -> Result<Corpus> {
    let mut corpus = Corpus::default();
    let mut hasher = Sha256::new();
    let mut names = HashSet::new();
    for path in paths {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        hasher.update(text.as_bytes());
        let specs = parse_corpus(&text).map_err(|e| match e {
            Error::Corpus { line, message } => Error::Corpus {
                line,
                message: format!("{}: {message}", path.display()),
            },
            other => other,
        })?;
        if specs.is_empty() {
            corpus
                .warnings
                .push(format!("{}: empty corpus", path.display()));
        }
        for s in specs {
            if !names.insert(s.name.clone()) {
                return Err(Error::Corpus {
                    line: 0,
                    message: format!("duplicate name {} across corpus files", s.name),
                });
            }
            corpus.specs.push(s);
        }
    }
    corpus.sha256 = format!("{:x}", hasher.finalize());
    Ok(corpus)
}
