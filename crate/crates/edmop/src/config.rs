//! Runtime settings: budgets, strictness and output selection.

use std::path::PathBuf;

use edmop_core::Budgets;
use thiserror::Error;

/// Overrides default budgets, e.g.
/// `EDMOP_BUDGETS=outerplanar_max_n=40,search_max_nodes=1000000`.
pub const BUDGETS_VAR: &str = "EDMOP_BUDGETS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExportFormat {
    #[default]
    Edgelist,
    Graph6,
    Dot,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CliConfig {
    pub budgets: Budgets,
    /// Verify every intermediate family while extending, and parse input
    /// files without normalizing edge order.
    pub strict: bool,
    pub format: ExportFormat,
    /// `None` writes to standard output.
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BudgetSpecError {
    #[error("expected `key=value`, found `{0}`")]
    Syntax(String),
    #[error("unknown budget `{0}`")]
    UnknownKey(String),
    #[error("`{key}` needs a non-negative integer, found `{value}`")]
    BadValue { key: String, value: String },
}

/// Level 12 already has 4096 members on 16384 vertices.
pub const MAX_DOUBLING_LEVEL: u64 = 12;

/// Applies comma-separated `key=value` overrides on top of `base`.
pub fn parse_budgets(spec: &str, base: Budgets) -> Result<Budgets, BudgetSpecError> {
    let mut b = base;
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item.split_once('=').ok_or_else(|| BudgetSpecError::Syntax(item.to_string()))?;
        let (key, value) = (key.trim(), value.trim());
        let bad = || BudgetSpecError::BadValue { key: key.to_string(), value: value.to_string() };
        let num: u64 = value.parse().map_err(|_| bad())?;
        let small = || usize::try_from(num).map_err(|_| bad());
        match key {
            "outerplanar_max_n" => b.outerplanar_max_n = small()?,
            "search_max_n" => b.search_max_n = small()?,
            "search_max_m" => b.search_max_m = small()?,
            "search_max_nodes" => b.search_max_nodes = num,
            "color_max_n" => b.color_max_n = small()?,
            "doubling_max_s" if num <= MAX_DOUBLING_LEVEL => b.doubling_max_s = num as u32,
            "doubling_max_s" => return Err(bad()),
            _ => return Err(BudgetSpecError::UnknownKey(key.to_string())),
        }
    }
    Ok(b)
}
