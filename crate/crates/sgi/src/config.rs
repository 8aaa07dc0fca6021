use std::collections::BTreeSet;
use std::path::PathBuf;
use std::str::FromStr;

use sgi_core::classify::Budgets;
use sgi_core::embed::DEFAULT_GENUS_BUDGET;
use sgi_core::{Error, DEFAULT_MAX_ORDER};

use crate::SgiError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OutputFormat {
    Dot,
    Adjacency,
    Csv,
    Report,
}

impl FromStr for OutputFormat {
    type Err = SgiError;
    fn from_str(s: &str) -> Result<Self, SgiError> {
        match s {
            "dot" => Ok(OutputFormat::Dot),
            "adjacency" => Ok(OutputFormat::Adjacency),
            "csv" => Ok(OutputFormat::Csv),
            "report" => Ok(OutputFormat::Report),
            other => Err(SgiError::UnsupportedFormat(other.into())),
        }
    }
}

/// Node budget for subgraph, independence and clique cover searches.
pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub max_order: usize,
    pub genus_node_budget: u64,
    pub search_node_budget: u64,
    /// Nothing is written when unset.
    pub output_dir: Option<PathBuf>,
    pub formats: BTreeSet<OutputFormat>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_order: DEFAULT_MAX_ORDER,
            genus_node_budget: DEFAULT_GENUS_BUDGET,
            search_node_budget: DEFAULT_SEARCH_BUDGET,
            output_dir: None,
            formats: [OutputFormat::Csv, OutputFormat::Report].into(),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), SgiError> {
        let bad = |m: String| Err(SgiError::Core(Error::InvalidConfig(m)));
        if self.max_order == 0 || self.max_order > DEFAULT_MAX_ORDER {
            return bad(format!("max order must be in 1..={DEFAULT_MAX_ORDER}, got {}", self.max_order));
        }
        if self.genus_node_budget == 0 || self.search_node_budget == 0 {
            return bad("budgets must be positive".into());
        }
        Ok(())
    }

    pub fn budgets(&self) -> Budgets {
        Budgets {
            genus_nodes: self.genus_node_budget,
            subgraph_nodes: self.search_node_budget,
            cover_nodes: self.search_node_budget,
            ..Budgets::default()
        }
    }

    pub fn wants(&self, f: OutputFormat) -> bool {
        self.formats.contains(&f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(RunConfig::default().validate().is_ok());
        let c = RunConfig { max_order: 513, ..RunConfig::default() };
        assert!(c.validate().is_err());
        let c = RunConfig { genus_node_budget: 0, ..RunConfig::default() };
        assert!(c.validate().is_err());
        assert!("svg".parse::<OutputFormat>().is_err());
    }
}
