//! Embedded reference data.
//!
//! Every file under `files/` is compiled into the binary and listed in
//! `SHA256SUMS`. [`DataSet::embedded`] refuses to hand out any table whose
//! digest does not match the manifest.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DataError {
    #[error("checksum mismatch for {name}: expected {expected}, found {found}")]
    Checksum {
        name: String,
        expected: String,
        found: String,
    },
    #[error("file {0} is not listed in the manifest")]
    Unlisted(String),
    #[error("manifest entry {0} has no corresponding file")]
    Missing(String),
    #[error("malformed manifest line: {0}")]
    Manifest(String),
    #[error("{file}:{line}: {msg}")]
    Parse {
        file: String,
        line: usize,
        msg: String,
    },
    #[error("i/o error reading {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

macro_rules! embed {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../files/", $name)))),*]
    };
}

const FILES: &[(&str, &str)] = embed!(
    "p6_normals.txt",
    "p6_vertices.txt",
    "table4.txt",
    "table7.txt",
    "table8.txt",
    "table9.txt",
    "table10.txt",
    "table11.txt",
    "table12.txt",
    "manifold1.8p",
    "manifold2.8p",
    "manifold3.8p",
    "manifold4.8p",
    "manifold5.8p",
    "manifold6.8p",
    "manifold7.8p",
    "manifold8.8p",
    "manifold9.8p",
);

const MANIFEST: &str = include_str!("../SHA256SUMS");

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut s = String::with_capacity(64);
    for b in digest {
        let _ = write!(s, "{b:02x}");
    }
    s
}

fn parse_manifest(text: &str) -> Result<BTreeMap<String, String>, DataError> {
    let mut out = BTreeMap::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let mut it = line.split_whitespace();
        match (it.next(), it.next(), it.next()) {
            (Some(hash), Some(name), None) if hash.len() == 64 => {
                out.insert(name.to_string(), hash.to_string());
            }
            _ => return Err(DataError::Manifest(line.to_string())),
        }
    }
    Ok(out)
}

/// The full set of reference tables keyed by file name.
#[derive(Debug, Clone)]
pub struct DataSet {
    files: BTreeMap<String, String>,
}

impl DataSet {
    /// The compiled-in tables, verified once per process.
    pub fn embedded() -> Result<&'static DataSet, DataError> {
        static CELL: OnceLock<Result<DataSet, String>> = OnceLock::new();
        let res = CELL.get_or_init(|| {
            let files = FILES
                .iter()
                .map(|(n, t)| (n.to_string(), t.to_string()))
                .collect();
            let ds = DataSet { files };
            ds.verify().map(|_| ds).map_err(|e| e.to_string())
        });
        match res {
            Ok(ds) => Ok(ds),
            Err(msg) => Err(DataError::Manifest(msg.clone())),
        }
    }

    /// Load tables from a directory; digests are checked against the embedded manifest.
    pub fn from_dir(dir: &Path) -> Result<DataSet, DataError> {
        let mut files = BTreeMap::new();
        for (name, _) in FILES {
            let path = dir.join(name);
            let text = std::fs::read_to_string(&path).map_err(|source| DataError::Io {
                path: path.display().to_string(),
                source,
            })?;
            files.insert(name.to_string(), text);
        }
        let ds = DataSet { files };
        ds.verify()?;
        Ok(ds)
    }

    /// Build a data set without any integrity check. Intended for fault-injection tests.
    pub fn unchecked(files: BTreeMap<String, String>) -> DataSet {
        DataSet { files }
    }

    /// Copy of the file map, e.g. to corrupt one table in a test.
    pub fn to_map(&self) -> BTreeMap<String, String> {
        self.files.clone()
    }

    pub fn verify(&self) -> Result<(), DataError> {
        let manifest = parse_manifest(MANIFEST)?;
        for name in self.files.keys() {
            if !manifest.contains_key(name) {
                return Err(DataError::Unlisted(name.clone()));
            }
        }
        for (name, expected) in &manifest {
            let text = self
                .files
                .get(name)
                .ok_or_else(|| DataError::Missing(name.clone()))?;
            let found = sha256_hex(text.as_bytes());
            if &found != expected {
                return Err(DataError::Checksum {
                    name: name.clone(),
                    expected: expected.clone(),
                    found,
                });
            }
        }
        Ok(())
    }

    pub fn text(&self, name: &str) -> Result<&str, DataError> {
        self.files
            .get(name)
            .map(String::as_str)
            .ok_or_else(|| DataError::Missing(name.to_string()))
    }

    /// Non-comment, non-blank lines with their 1-based line numbers.
    pub fn lines(&self, name: &str) -> Result<Vec<(usize, &str)>, DataError> {
        Ok(self
            .text(name)?
            .lines()
            .enumerate()
            .filter(|(_, l)| {
                let t = l.trim();
                !t.is_empty() && !t.starts_with('#')
            })
            .map(|(i, l)| (i + 1, l.trim()))
            .collect())
    }

    /// Parse a whitespace-separated integer table.
    pub fn int_rows(&self, name: &str) -> Result<Vec<Vec<i64>>, DataError> {
        self.lines(name)?
            .into_iter()
            .map(|(ln, l)| {
                l.split_whitespace()
                    .map(|t| {
                        t.parse::<i64>().map_err(|e| DataError::Parse {
                            file: name.to_string(),
                            line: ln,
                            msg: format!("{t:?}: {e}"),
                        })
                    })
                    .collect()
            })
            .collect()
    }

    pub fn manifold_array_name(id: usize) -> String {
        format!("manifold{id}.8p")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_verify() {
        let ds = DataSet::embedded().unwrap();
        assert_eq!(ds.int_rows("p6_normals.txt").unwrap().len(), 27);
        assert_eq!(ds.int_rows("p6_vertices.txt").unwrap().len(), 99);
        assert_eq!(ds.lines("table4.txt").unwrap().len(), 9);
        assert_eq!(ds.lines("table7.txt").unwrap().len(), 45);
    }

    #[test]
    fn corruption_is_detected() {
        let mut map = DataSet::embedded().unwrap().to_map();
        map.get_mut("table10.txt").unwrap().push('1');
        let err = DataSet::unchecked(map).verify().unwrap_err();
        assert!(matches!(err, DataError::Checksum { ref name, .. } if name == "table10.txt"));
    }

    #[test]
    fn manifest_parser_rejects_garbage() {
        assert!(parse_manifest("abc def").is_err());
    }
}
