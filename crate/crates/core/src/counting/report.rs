use std::collections::BTreeMap;
use std::io::Write;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Rounds to 12 significant digits.
pub fn round12(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.11e}").parse().expect("formatted float parses")
}

/// A float printed with 12 significant digits.
pub fn fmt12(v: f64) -> String {
    round12(v).to_string()
}

fn ser_opt12<S: Serializer>(v: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_f64(round12(*x)),
        None => s.serialize_none(),
    }
}

/// An exact count next to its predicted main term.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CountingReport {
    pub quantity: String,
    pub x: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    pub exact: u64,
    #[serde(serialize_with = "ser_opt12")]
    pub predicted: Option<f64>,
    #[serde(serialize_with = "ser_opt12")]
    pub ratio: Option<f64>,
    pub constants: BTreeMap<String, String>,
}

impl CountingReport {
    pub fn new(quantity: &str, x: u64, q: Option<u64>, exact: u64, predicted: Option<f64>) -> Self {
        let ratio = predicted.filter(|&p| p > 0.0).map(|p| exact as f64 / p);
        Self {
            quantity: quantity.into(),
            x,
            q,
            exact,
            predicted,
            ratio,
            constants: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.constants.insert(key.into(), value.to_string());
        self
    }

    /// `exact - predicted`.
    pub fn residual(&self) -> Option<f64> {
        self.predicted.map(|p| self.exact as f64 - p)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// CSV with columns `x, exact, predicted, ratio, constants`; constants are
/// joined as `key=value` pairs separated by `;`.
pub fn write_csv<W: Write>(reports: &[CountingReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Internal(format!("csv: {e}"));
    w.write_record(["x", "exact", "predicted", "ratio", "constants"])
        .map_err(io)?;
    for r in reports {
        let opt = |v: Option<f64>| v.map(fmt12).unwrap_or_default();
        let constants: Vec<String> = r
            .constants
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        w.write_record([
            r.x.to_string(),
            r.exact.to_string(),
            opt(r.predicted),
            opt(r.ratio),
            constants.join(";"),
        ])
        .map_err(io)?;
    }
    w.flush()
        .map_err(|e| Error::Internal(format!("csv: {e}")))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digits() {
        assert_eq!(fmt12(2.294_856_591_612_345), "2.29485659161");
        assert_eq!(fmt12(78_626.504_017_379_9), "78626.5040174");
        assert_eq!(fmt12(0.0), "0");
    }

    #[test]
    fn csv_and_json() {
        let r = CountingReport::new("asum", 10, None, 14, Some(7.0)).with("c1", "2.2948565916");
        assert_eq!(r.ratio, Some(2.0));
        let mut buf = Vec::new();
        write_csv(std::slice::from_ref(&r), &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "x,exact,predicted,ratio,constants\n10,14,7,2,c1=2.2948565916\n"
        );
        let j = r.to_json();
        assert_eq!(j["exact"], 14);
        assert!(j.get("q").is_none());
        assert!(CountingReport::new("x", 1, None, 1, Some(0.0))
            .ratio
            .is_none());
    }
}
