//! JSON persistence of the catalog with tamper detection on load.

use chrono::{SecondsFormat, Utc};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashSet};
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::fast_transform::{self, Constants, OpCounts, Route};
use crate::search::{assess, ApproximationRecord, Catalog};

pub const SCHEMA_VERSION: &str = "1.0.0";
pub const CATALOG_ENV: &str = "DCTLAB_CATALOG";
pub const DEFAULT_CATALOG: &str = "catalog.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanSummary {
    pub m: Option<Constants>,
    pub route: Route,
    pub counts: OpCounts,
    pub steps: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogFile {
    pub version: String,
    pub generated_at: String,
    pub records: Vec<ApproximationRecord>,
    pub plans: BTreeMap<String, PlanSummary>,
}

impl CatalogFile {
    pub fn from_catalog(c: &Catalog) -> Self {
        let plans = c
            .records
            .iter()
            .filter_map(|r| {
                let p = fast_transform::build_plan(r).ok()?;
                Some((
                    r.name.clone(),
                    PlanSummary {
                        m: p.m,
                        route: p.route,
                        counts: p.counts,
                        steps: p.steps.len(),
                    },
                ))
            })
            .collect();
        CatalogFile {
            version: SCHEMA_VERSION.to_owned(),
            generated_at: Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true),
            records: c.records.clone(),
            plans,
        }
    }

    pub fn catalog(&self) -> Catalog {
        Catalog {
            records: self.records.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("catalog serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: CatalogFile = serde_json::from_str(s).map_err(|e| Error::Schema(e.to_string()))?;
        f.verify()?;
        Ok(f)
    }

    /// Recomputes everything derivable from each stored matrix and compares.
    pub fn verify(&self) -> Result<()> {
        let major = self.version.split('.').next().unwrap_or("");
        if major != SCHEMA_VERSION.split('.').next().unwrap_or("") {
            return Err(Error::Schema(format!("unsupported version {}", self.version)));
        }
        let mut names = HashSet::new();
        let mut aliases = HashSet::new();
        for r in &self.records {
            let bad = |what: &str| Error::InvariantMismatch {
                name: r.name.clone(),
                what: what.to_owned(),
            };
            if !names.insert(r.name.to_ascii_lowercase()) {
                return Err(bad("duplicate name"));
            }
            if let Some(a) = &r.alias {
                if !aliases.insert(a.to_ascii_lowercase()) {
                    return Err(bad("duplicate alias"));
                }
            }
            let a = assess(&r.matrix).ok_or_else(|| bad("matrix has entries outside {0,±1,±2,±3} or is zero"))?;
            if a.classification != r.classification {
                return Err(bad("classification"));
            }
            if a.diag_gram != r.diag_gram {
                return Err(bad("diag_gram"));
            }
            if (a.delta - r.delta).abs() > 1e-12 {
                return Err(bad("delta"));
            }
            if a.inverse != r.inverse {
                return Err(bad("inverse"));
            }
            if a.scaling.as_ref().map(|s| &s.squared) != r.scaling.as_ref().map(|s| &s.squared) {
                return Err(bad("scaling"));
            }
            if let Some(p) = self.plans.get(&r.name) {
                let fresh = fast_transform::build_plan(r).map_err(|_| bad("plan for unplannable record"))?;
                if fresh.counts != p.counts || fresh.m != p.m {
                    return Err(bad("plan"));
                }
            }
        }
        if let Some(n) = self.plans.keys().find(|n| !names.contains(&n.to_ascii_lowercase())) {
            return Err(Error::InvariantMismatch {
                name: n.clone(),
                what: "plan without record".into(),
            });
        }
        Ok(())
    }
}

/// Writes atomically: temp file in the destination directory, then rename.
pub fn save_catalog(c: &Catalog, path: &Path) -> Result<CatalogFile> {
    let file = CatalogFile::from_catalog(c);
    save_file(&file, path)?;
    Ok(file)
}

pub fn save_file(file: &CatalogFile, path: &Path) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(&dir).map_err(|e| Error::io(&dir, e))?;
    tmp.write_all(file.to_json().as_bytes())
        .and_then(|_| tmp.write_all(b"\n"))
        .map_err(|e| Error::io(tmp.path(), e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

pub fn load_catalog(path: &Path) -> Result<CatalogFile> {
    let s = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    CatalogFile::from_json(&s)
}

/// Explicit path, else `$DCTLAB_CATALOG`, else `catalog.json`.
pub fn catalog_path(explicit: Option<&Path>) -> PathBuf {
    explicit
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os(CATALOG_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(DEFAULT_CATALOG))
}
