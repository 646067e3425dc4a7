//! Cayley table files: `{"names": [...], "table": [[...], ...]}`.

use serde::{Deserialize, Serialize};

use super::{FiniteMonoid, MonoidError};

/// On-disk form of a Cayley table. Field order is alphabetical so the
/// serialized form has sorted keys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CayleyFile {
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

pub fn read_cayley_json(text: &str) -> Result<FiniteMonoid, MonoidError> {
    let file: CayleyFile =
        serde_json::from_str(text).map_err(|e| MonoidError::Format(e.to_string()))?;
    FiniteMonoid::new(file.table, file.names)
}

/// Compact, one table row per line, trailing newline.
pub fn to_cayley_json(m: &FiniteMonoid) -> String {
    let names = serde_json::to_string(m.names()).expect("strings serialize");
    let rows: Vec<String> = m
        .table_rows()
        .iter()
        .map(|r| serde_json::to_string(r).expect("ints serialize"))
        .collect();
    format!(
        "{{\"names\":{names},\"table\":[\n{}\n]}}\n",
        rows.join(",\n")
    )
}
