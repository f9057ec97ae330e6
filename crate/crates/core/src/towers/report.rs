use serde::Serialize;

use super::{genus_bound_holds, genus_e, genus_f, GenusSelector, TowerSpec};
use crate::error::{Error, Result};
use crate::fields::FieldDescriptor;

/// Point-count evidence for one level of a tower.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SplitReport {
    pub tower: String,
    pub q: u64,
    #[serde(rename = "L")]
    pub l: Option<String>,
    pub gamma: Option<String>,
    pub field: FieldDescriptor,
    pub level: usize,
    pub split_rule: String,
    pub split_size: usize,
    pub complete: bool,
    #[serde(rename = "N_lb")]
    pub n_lb: u128,
    pub genus: Option<String>,
    pub genus_anomaly: Option<String>,
    pub ratio: Option<f64>,
    pub dv_bound: f64,
    #[serde(rename = "prop22_ok")]
    pub genus_bound_ok: Option<bool>,
}

struct GenusEntry {
    exact: String,
    value: f64,
    anomaly: Option<String>,
}

fn genus_entry(sel: GenusSelector, n: usize, q: u64) -> Option<GenusEntry> {
    let n32 = n as u32;
    match sel {
        GenusSelector::None => None,
        GenusSelector::FType => {
            let g = genus_f(n32, q);
            let anomaly = (g <= 0).then(|| "non-positive".to_string());
            Some(GenusEntry {
                exact: g.to_string(),
                value: g as f64,
                anomaly,
            })
        }
        GenusSelector::EType => {
            let g = genus_e(n32, q);
            let anomaly = match (&g.anomaly, n < 3) {
                (Some(a), _) => Some(a.clone()),
                (None, true) => Some("level below 3".to_string()),
                (None, false) => None,
            };
            Some(GenusEntry {
                exact: g.to_exact_string(),
                value: g.to_f64(),
                anomaly,
            })
        }
    }
}

/// One report per level, sharing a single splitting set.
pub fn dv_reports(tower: &TowerSpec, levels: &[usize]) -> Result<Vec<SplitReport>> {
    if let Some(&n) = levels.iter().max() {
        tower.check_work(n)?;
    }
    let (rule, set) = tower.splitting_set()?;
    let q = tower.q();
    levels
        .iter()
        .map(|&n| {
            let cert = tower.certify_splitting(&set, n)?;
            let genus = genus_entry(tower.genus_selector(), n, q);
            let ratio = genus
                .as_ref()
                .filter(|g| g.anomaly.is_none())
                .map(|g| cert.n_lb as f64 / g.value);
            let genus_bound_ok = (tower.genus_selector() == GenusSelector::FType)
                .then(|| genus_bound_holds(n as u32, q));
            Ok(SplitReport {
                tower: tower.kind().name().to_string(),
                q,
                l: tower.prime().map(|p| p.to_string()),
                gamma: tower.gamma_label().map(str::to_string),
                field: tower.field().descriptor(),
                level: n,
                split_rule: rule.clone(),
                split_size: set.len(),
                complete: cert.certified() && !set.is_empty(),
                n_lb: cert.n_lb,
                genus: genus.as_ref().map(|g| g.exact.clone()),
                genus_anomaly: genus.and_then(|g| g.anomaly),
                ratio,
                dv_bound: tower.dv_bound(),
                genus_bound_ok,
            })
        })
        .collect()
}

#[derive(Serialize)]
struct CsvRow<'a> {
    tower: &'a str,
    q: u64,
    #[serde(rename = "L")]
    l: Option<&'a str>,
    gamma: Option<&'a str>,
    field_p: u64,
    field_k: usize,
    field_modulus: String,
    level: usize,
    split_rule: &'a str,
    split_size: usize,
    complete: bool,
    #[serde(rename = "N_lb")]
    n_lb: u128,
    genus: Option<&'a str>,
    genus_anomaly: Option<&'a str>,
    ratio: Option<f64>,
    dv_bound: f64,
    #[serde(rename = "prop22_ok")]
    genus_bound_ok: Option<bool>,
}

/// The reports as CSV with a header row; the field is flattened into three
/// columns and the modulus is written as space-separated coefficients.
pub fn reports_to_csv(reports: &[SplitReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in reports {
        let row = CsvRow {
            tower: &r.tower,
            q: r.q,
            l: r.l.as_deref(),
            gamma: r.gamma.as_deref(),
            field_p: r.field.p,
            field_k: r.field.k,
            field_modulus: r
                .field
                .modulus
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" "),
            level: r.level,
            split_rule: &r.split_rule,
            split_size: r.split_size,
            complete: r.complete,
            n_lb: r.n_lb,
            genus: r.genus.as_deref(),
            genus_anomaly: r.genus_anomaly.as_deref(),
            ratio: r.ratio,
            dv_bound: r.dv_bound,
            genus_bound_ok: r.genus_bound_ok,
        };
        w.serialize(row)
            .map_err(|e| Error::Invalid(format!("csv: {e}")))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Invalid(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Invalid(format!("csv: {e}")))
}
