//! Output rows and their text, JSON and CSV renderings.

use std::io::Write;

use gegentropy::{EntropyJson, ExactEntropy, Precision};
use serde::{Deserialize, Serialize};

/// One computed entropy, as printed by `entropy` and `table`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub lambda: u32,
    pub n: u32,
    pub normalized: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact: Option<EntropyJson>,
    pub decimal: String,
    pub route: String,
}

impl OutputRecord {
    pub fn new(
        lambda: u32,
        n: u32,
        normalized: bool,
        value: &ExactEntropy,
        route: &str,
        prec: Precision,
        places: u32,
    ) -> Self {
        let exact = value.to_json_value(prec, places);
        OutputRecord {
            lambda,
            n,
            normalized,
            decimal: exact.decimal.clone(),
            exact: Some(exact),
            route: route.to_string(),
        }
    }

    /// Human-readable exact expression, or `None` for numeric-only records.
    pub fn exact_text(&self) -> Option<String> {
        let json = self.exact.as_ref()?;
        Some(
            json.to_exact()
                .map_or_else(|e| format!("<{e}>"), |v| v.to_string()),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Writes `rows` (each already in header order) as CSV.
pub fn write_csv<W: Write>(out: W, header: &[&str], rows: &[Vec<String>]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}
