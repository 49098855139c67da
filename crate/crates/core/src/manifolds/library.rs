//! The bundled descriptor library.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use super::{DescriptorFile, FormatError, ManifoldRecord};

const BUNDLED: &str = include_str!("../../data/library.json");

/// Named manifold records that descriptor files may refer to without
/// declaring them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Library {
    records: BTreeMap<String, ManifoldRecord>,
}

impl Library {
    /// S⁴, CP², conj(CP²), S²×S², E(1)…E(6) (with K3 = E(2)) and
    /// N = conj(CP² # CP²).
    pub fn bundled() -> Self {
        let mut lib = Self::default();
        lib.add_file(BUNDLED).expect("bundled library is valid");
        lib
    }

    /// Loads every `*.json` file in `dir` instead of the bundled data, or the
    /// bundled data when `dir` is `None`.
    pub fn load(dir: Option<&Path>) -> Result<Self, FormatError> {
        let Some(dir) = dir else {
            return Ok(Self::bundled());
        };
        let io = |path: &Path, e: std::io::Error| FormatError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        };
        let mut paths: Vec<_> = fs::read_dir(dir)
            .map_err(|e| io(dir, e))?
            .filter_map(Result::ok)
            .map(|entry| entry.path())
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        let mut lib = Self::default();
        for p in paths {
            let text = fs::read_to_string(&p).map_err(|e| io(&p, e))?;
            lib.add_file(&text)?;
        }
        Ok(lib)
    }

    fn add_file(&mut self, text: &str) -> Result<(), FormatError> {
        let file = DescriptorFile::parse(text)?;
        for r in file.manifolds {
            let name = r.manifold.name.clone();
            if self.records.insert(name.clone(), r).is_some() {
                return Err(FormatError::DuplicateName(name));
            }
        }
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&ManifoldRecord> {
        self.records.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.records.keys().map(String::as_str)
    }

    pub fn records(&self) -> impl Iterator<Item = &ManifoldRecord> {
        self.records.values()
    }
}
