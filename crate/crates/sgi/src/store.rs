//! Output directory layout. Per-group files live under a directory named by
//! a hash of the group's canonical spec text, so reruns land in the same
//! place and stored embeddings can be checked again.

use std::fs;
use std::path::{Path, PathBuf};

use sgi_core::embed::{trace_faces, EmbeddingScheme};
use sgi_core::{FamilySpec, SimpleGraph};

use crate::formats::{parse_scheme, scheme_to_text};
use crate::SgiError;

/// Hex digest prefix naming a group directory.
pub fn spec_key(spec: &FamilySpec) -> String {
    use sha2::{Digest, Sha256};
    let digest = Sha256::digest(spec.to_string().as_bytes());
    digest.iter().take(16).map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug)]
pub struct Store {
    root: PathBuf,
}

/// Which surface a stored scheme claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Surface {
    Orientable(usize),
    Nonorientable(usize),
}

impl Surface {
    fn file_name(self) -> String {
        match self {
            Surface::Orientable(k) => format!("genus-{k}.scheme"),
            Surface::Nonorientable(k) => format!("crosscap-{k}.scheme"),
        }
    }

    /// The scheme embeds `g` in exactly this surface.
    pub fn realised_by(self, g: &SimpleGraph, s: &EmbeddingScheme) -> bool {
        let Ok(t) = trace_faces(g, s) else { return false };
        match self {
            Surface::Orientable(k) => t.orientable && t.euler_genus == 2 * k,
            Surface::Nonorientable(k) => t.euler_genus == k && (k == 0 || !t.orientable),
        }
    }
}

impl Store {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        Store { root: root.into() }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    /// Writes `contents` to `rel` under the root, creating directories.
    pub fn write(&self, rel: &Path, contents: &str) -> Result<(), SgiError> {
        let path = self.root.join(rel);
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir).map_err(SgiError::io(dir))?;
        }
        fs::write(&path, contents).map_err(SgiError::io(&path))
    }

    /// Relative directory of a group, with its spec text recorded inside.
    pub fn group_dir(&self, spec: &FamilySpec) -> Result<PathBuf, SgiError> {
        let rel = Path::new("groups").join(spec_key(spec));
        self.write(&rel.join("spec.txt"), &format!("{spec}\n"))?;
        Ok(rel)
    }

    /// Stores an embedding of the group's graph unless a stored one already
    /// re-traces to the same surface. Returns the relative fixture path.
    pub fn fixture(
        &self,
        spec: &FamilySpec,
        g: &SimpleGraph,
        surface: Surface,
        scheme: &EmbeddingScheme,
    ) -> Result<PathBuf, SgiError> {
        let rel = self.group_dir(spec)?.join(surface.file_name());
        let path = self.root.join(&rel);
        if let Ok(text) = fs::read_to_string(&path) {
            if parse_scheme(&text, g.n()).is_ok_and(|s| surface.realised_by(g, &s)) {
                return Ok(rel);
            }
        }
        self.write(&rel, &scheme_to_text(scheme))?;
        Ok(rel)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_stable_and_distinct() {
        let a: FamilySpec = "cyclic:64".parse().unwrap();
        let b: FamilySpec = "cyclic:32".parse().unwrap();
        assert_eq!(spec_key(&a), spec_key(&a.clone()));
        assert_ne!(spec_key(&a), spec_key(&b));
        assert_eq!(spec_key(&a).len(), 32);
    }
}
