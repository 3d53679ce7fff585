//! Serialized views of an injectivity analysis: a JSON schema with fixed
//! field order (re-parsing a report and re-serializing is byte-identical),
//! a CSV row shape for sweeps, and a human rendering.

use crate::error::{Error, Result};
use crate::thickening::{InjectivityReport, ThickeningMode, Variety};
use serde::{Deserialize, Serialize};
use std::fmt;

pub fn mode_name(mode: ThickeningMode) -> &'static str {
    match mode {
        ThickeningMode::Power => "power",
        ThickeningMode::Bracket => "bracket",
    }
}

pub fn mode_from_name(name: &str) -> Option<ThickeningMode> {
    match name {
        "power" => Some(ThickeningMode::Power),
        "bracket" => Some(ThickeningMode::Bracket),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietyInfo {
    pub n: usize,
    pub p: u64,
    pub c: usize,
    pub degrees: Vec<u64>,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryInfo {
    pub t: u64,
    pub twist: i64,
    pub mode: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessInfo {
    pub numerator: String,
    pub level: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultInfo {
    pub domain_dim: u64,
    pub codomain_dim: u64,
    pub rank: u64,
    pub injective: bool,
    pub kernel_witness: Option<WitnessInfo>,
    pub level: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub variety: VarietyInfo,
    pub query: QueryInfo,
    pub result: ResultInfo,
    pub elapsed_ms: u64,
}

/// Header for the sweep CSV shape; [`Report::csv_row`] emits matching rows.
pub const CSV_HEADER: &str = "p,t,twist,domain_dim,rank,injective,elapsed_ms";

impl Report {
    pub fn new(variety: &Variety, analysis: &InjectivityReport) -> Report {
        let witness = analysis.kernel_witness.as_ref().map(|class| WitnessInfo {
            numerator: class.numerator().to_string(),
            level: class.level(),
        });
        Report {
            variety: VarietyInfo {
                n: variety.ambient_dim(),
                p: variety.ring().modulus().get(),
                c: variety.codim(),
                degrees: variety.degrees(),
                generators: variety.generators().iter().map(|g| g.to_string()).collect(),
            },
            query: QueryInfo {
                t: analysis.query.t,
                twist: analysis.query.twist,
                mode: mode_name(analysis.query.mode).to_string(),
            },
            result: ResultInfo {
                domain_dim: analysis.domain_dim,
                codomain_dim: analysis.codomain_dim,
                rank: analysis.rank,
                injective: analysis.injective,
                kernel_witness: witness,
                level: analysis.level,
            },
            elapsed_ms: analysis.elapsed.as_millis() as u64,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report has no non-serializable state")
    }

    pub fn from_json(text: &str) -> Result<Report> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: e.column().saturating_sub(1),
            msg: format!("report JSON: {e}"),
        })
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.variety.p,
            self.query.t,
            self.query.twist,
            self.result.domain_dim,
            self.result.rank,
            self.result.injective,
            self.elapsed_ms
        )
    }

    /// Identical up to timing: every field except `elapsed_ms` agrees.
    pub fn same_analysis(&self, other: &Report) -> bool {
        self.variety == other.variety
            && self.query == other.query
            && self.result == other.result
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "variety: n = {}, p = {}, c = {}, degrees {:?}",
            self.variety.n, self.variety.p, self.variety.c, self.variety.degrees
        )?;
        for g in &self.variety.generators {
            writeln!(f, "  generator: {g}")?;
        }
        writeln!(
            f,
            "query: t = {}, twist = {}, {} mode",
            self.query.t, self.query.twist, self.query.mode
        )?;
        let verdict = if self.result.injective { "injective" } else { "not injective" };
        let note = if self.result.codomain_dim == 0 && self.result.domain_dim > 0 {
            " (codomain piece vanishes)"
        } else {
            ""
        };
        writeln!(
            f,
            "result: domain {}, codomain {}, rank {} -> {verdict}{note} at level {}",
            self.result.domain_dim, self.result.codomain_dim, self.result.rank, self.result.level
        )?;
        if let Some(w) = &self.result.kernel_witness {
            writeln!(f, "kernel witness: [{} / (x0...x{})^{}]", w.numerator, self.variety.n, w.level)?;
        }
        write!(f, "elapsed: {} ms", self.elapsed_ms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PrimeModulus;
    use crate::parse::parse;
    use crate::poly::RingSpec;
    use crate::thickening::{is_injective, ThickeningQuery};

    fn cusp_report(t: u64) -> (Variety, InjectivityReport) {
        let r = RingSpec::new(3, PrimeModulus::new(7).unwrap());
        let v = Variety::hypersurface(parse(r, "x0^3 - x1^2*x2").unwrap()).unwrap();
        let a = is_injective(
            &v,
            &ThickeningQuery { t, twist: 0, mode: ThickeningMode::Bracket },
        )
        .unwrap();
        (v, a)
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        for t in [1, 2] {
            let (v, a) = cusp_report(t);
            let report = Report::new(&v, &a);
            let text = report.to_json();
            let parsed = Report::from_json(&text).unwrap();
            assert_eq!(parsed, report);
            assert_eq!(parsed.to_json(), text);
        }
    }

    #[test]
    fn schema_field_order_is_stable() {
        let (v, a) = cusp_report(2);
        let text = Report::new(&v, &a).to_json();
        let variety_pos = text.find("\"variety\"").unwrap();
        let query_pos = text.find("\"query\"").unwrap();
        let result_pos = text.find("\"result\"").unwrap();
        let elapsed_pos = text.find("\"elapsed_ms\"").unwrap();
        assert!(variety_pos < query_pos && query_pos < result_pos && result_pos < elapsed_pos);
        for key in [
            "\"n\"", "\"p\"", "\"c\"", "\"degrees\"", "\"generators\"", "\"t\"", "\"twist\"",
            "\"mode\"", "\"domain_dim\"", "\"codomain_dim\"", "\"rank\"", "\"injective\"",
            "\"kernel_witness\"", "\"level\"",
        ] {
            assert!(text.contains(key), "missing {key} in {text}");
        }
    }

    #[test]
    fn witness_appears_exactly_when_not_injective() {
        let (v, miss) = cusp_report(1);
        let miss = Report::new(&v, &miss);
        assert!(!miss.result.injective);
        assert!(miss.result.kernel_witness.is_some());
        assert!(miss.to_json().contains("\"kernel_witness\":{\"numerator\""));

        let (v, hit) = cusp_report(2);
        let hit = Report::new(&v, &hit);
        assert!(hit.result.injective);
        assert!(hit.result.kernel_witness.is_none());
        assert!(hit.to_json().contains("\"kernel_witness\":null"));
    }

    #[test]
    fn csv_row_matches_header_shape() {
        let (v, a) = cusp_report(2);
        let report = Report::new(&v, &a);
        let row = report.csv_row();
        assert_eq!(row.split(',').count(), CSV_HEADER.split(',').count());
        assert!(row.starts_with("7,2,0,"));
        assert!(row.contains(",true,"));
    }

    #[test]
    fn same_analysis_ignores_timing() {
        let (v, a) = cusp_report(2);
        let mut x = Report::new(&v, &a);
        let y = Report::new(&v, &a);
        x.elapsed_ms = x.elapsed_ms.wrapping_add(57);
        assert!(x.same_analysis(&y));
        x.result.rank += 1;
        assert!(!x.same_analysis(&y));
    }

    #[test]
    fn mode_names_round_trip() {
        for mode in [ThickeningMode::Power, ThickeningMode::Bracket] {
            assert_eq!(mode_from_name(mode_name(mode)), Some(mode));
        }
        assert_eq!(mode_from_name("frobenius"), None);
    }

    #[test]
    fn human_rendering_mentions_witness_and_verdict() {
        let (v, a) = cusp_report(1);
        let text = Report::new(&v, &a).to_string();
        assert!(text.contains("not injective"));
        assert!(text.contains("kernel witness"));
        let (v, a) = cusp_report(2);
        let text = Report::new(&v, &a).to_string();
        assert!(text.contains("-> injective"));
    }
}
