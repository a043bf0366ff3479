//! Sweep reports and their JSON, CSV and text renderings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Check {
    Thm1,
    Cert,
    Small5,
    Cor1,
    Acampo,
    ThmA,
    PropD,
    LemmaB,
    Monodromy,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Thm1,
        Check::Cert,
        Check::Small5,
        Check::Cor1,
        Check::Acampo,
        Check::ThmA,
        Check::PropD,
        Check::LemmaB,
        Check::Monodromy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Thm1 => "thm1",
            Check::Cert => "cert",
            Check::Small5 => "small5",
            Check::Cor1 => "cor1",
            Check::Acampo => "acampo",
            Check::ThmA => "thmA",
            Check::PropD => "propD",
            Check::LemmaB => "lemmaB",
            Check::Monodromy => "monodromy",
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        Check::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// Parses a comma-separated list of check names; `all` selects every check.
pub fn parse_checks(list: &str) -> Result<BTreeSet<Check>> {
    let mut out = BTreeSet::new();
    for word in list.split(',').map(str::trim).filter(|w| !w.is_empty()) {
        if word == "all" {
            out.extend(Check::ALL);
        } else {
            out.insert(word.parse()?);
        }
    }
    if out.is_empty() {
        return Err(Error::UnknownCheck(list.to_string()));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Corpus {
    pub family: String,
    pub min_n: usize,
    pub max_n: usize,
    pub checks: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Record {
    /// Canonical code for trees, a label otherwise.
    pub id: String,
    pub n: usize,
    pub b1: usize,
    pub sigma: i64,
    /// `⌈|σ|/2⌉`.
    pub four_ball_lower: i64,
    pub cert_bound: Option<i64>,
    pub circle_count: Option<usize>,
    pub positive_real_count: Option<usize>,
    pub other_count: Option<usize>,
    pub alexander_circle_roots: Option<usize>,
    pub det_sign: Option<i8>,
    pub checks: BTreeMap<String, bool>,
    pub note: Option<String>,
}

impl Record {
    pub fn new(id: impl Into<String>, n: usize, b1: usize, sigma: i64) -> Self {
        Record { id: id.into(), n, b1, sigma, four_ball_lower: four_ball_lower(sigma), ..Default::default() }
    }

    pub fn set(&mut self, check: &str, pass: bool) {
        self.checks.insert(check.to_string(), pass);
    }

    pub fn passed(&self) -> bool {
        self.checks.values().all(|&p| p)
    }
}

pub fn four_ball_lower(sigma: i64) -> i64 {
    (sigma.abs() + 1) / 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub id: String,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extremal {
    pub id: String,
    pub sigma: i64,
    pub b1: usize,
    /// `σ / b₁` in lowest terms.
    pub ratio: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub items: usize,
    pub failed_items: usize,
    pub per_check: BTreeMap<String, Tally>,
    /// Smallest `σ / b₁` over the corpus (first item in corpus order on ties).
    pub min_ratio: Option<Extremal>,
    /// Free-form findings, such as whether a root with order above its nullity occurred.
    pub notes: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub corpus: Corpus,
    pub records: Vec<Record>,
    pub summary: Summary,
    pub failures: Vec<Failure>,
    pub version: String,
}

fn ratio_text(sigma: i64, b1: usize) -> String {
    if b1 == 0 {
        return "undefined".into();
    }
    let g = num::integer::gcd(sigma.unsigned_abs() as usize, b1).max(1);
    format!("{}/{}", sigma / g as i64, b1 / g)
}

impl SweepReport {
    /// Builds the summary; `failures` should name every failing check.
    pub fn new(corpus: Corpus, records: Vec<Record>, failures: Vec<Failure>) -> Self {
        let mut summary = Summary { items: records.len(), ..Default::default() };
        for r in &records {
            if !r.passed() {
                summary.failed_items += 1;
            }
            for (name, &pass) in &r.checks {
                let t = summary.per_check.entry(name.clone()).or_default();
                if pass {
                    t.passed += 1;
                } else {
                    t.failed += 1;
                }
            }
            if r.b1 > 0 {
                let better = match &summary.min_ratio {
                    None => true,
                    Some(e) => (r.sigma as i128) * (e.b1 as i128) < (e.sigma as i128) * (r.b1 as i128),
                };
                if better {
                    summary.min_ratio =
                        Some(Extremal { id: r.id.clone(), sigma: r.sigma, b1: r.b1, ratio: ratio_text(r.sigma, r.b1) });
                }
            }
        }
        SweepReport { corpus, records, summary, failures, version: env!("CARGO_PKG_VERSION").to_string() }
    }

    /// Collects failures from records whose checks did not pass.
    pub fn from_records(corpus: Corpus, records: Vec<Record>) -> Self {
        let failures = records
            .iter()
            .flat_map(|r| {
                r.checks.iter().filter(|(_, &p)| !p).map(move |(c, _)| Failure {
                    id: r.id.clone(),
                    check: c.clone(),
                    detail: format!("n={} sigma={} b1={}", r.n, r.sigma, r.b1),
                })
            })
            .collect();
        SweepReport::new(corpus, records, failures)
    }

    pub fn note(mut self, key: &str, value: impl ToString) -> Self {
        self.summary.notes.insert(key.to_string(), value.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// One row per record; check columns are the union of all check names.
    pub fn to_csv(&self) -> String {
        let names: BTreeSet<&String> = self.records.iter().flat_map(|r| r.checks.keys()).collect();
        let mut w = csv::Writer::from_writer(Vec::new());
        let opt = |x: Option<String>| x.unwrap_or_default();
        let mut header: Vec<String> = [
            "id",
            "n",
            "b1",
            "sigma",
            "four_ball_lower",
            "cert_bound",
            "circle_count",
            "positive_real_count",
            "other_count",
            "alexander_circle_roots",
            "det_sign",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        header.extend(names.iter().map(|s| s.to_string()));
        w.write_record(&header).expect("in-memory write");
        for r in &self.records {
            let mut row = vec![
                r.id.clone(),
                r.n.to_string(),
                r.b1.to_string(),
                r.sigma.to_string(),
                r.four_ball_lower.to_string(),
                opt(r.cert_bound.map(|x| x.to_string())),
                opt(r.circle_count.map(|x| x.to_string())),
                opt(r.positive_real_count.map(|x| x.to_string())),
                opt(r.other_count.map(|x| x.to_string())),
                opt(r.alexander_circle_roots.map(|x| x.to_string())),
                opt(r.det_sign.map(|x| x.to_string())),
            ];
            row.extend(names.iter().map(|c| match r.checks.get(*c) {
                Some(true) => "pass".to_string(),
                Some(false) => "FAIL".to_string(),
                None => String::new(),
            }));
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let c = &self.corpus;
        let _ = writeln!(s, "corpus: {} n={}..{} checks={}", c.family, c.min_n, c.max_n, c.checks.join(","));
        let _ = writeln!(s, "items: {}  failed items: {}", self.summary.items, self.summary.failed_items);
        for (name, t) in &self.summary.per_check {
            let _ = writeln!(s, "  {name:<10} pass {:>6}  fail {:>6}", t.passed, t.failed);
        }
        if let Some(e) = &self.summary.min_ratio {
            let _ = writeln!(s, "min sigma/b1 = {} (sigma {}, b1 {}) at {}", e.ratio, e.sigma, e.b1, e.id);
        }
        for (k, v) in &self.summary.notes {
            let _ = writeln!(s, "{k}: {v}");
        }
        for f in &self.failures {
            let _ = writeln!(s, "FAIL {} [{}] {}", f.check, f.id, f.detail);
        }
        let _ = writeln!(s, "{}", if self.passed() { "OK" } else { "FAILED" });
        s
    }

    pub fn render(&self, format: &str) -> Result<String> {
        match format {
            "json" => Ok(self.to_json()),
            "csv" => Ok(self.to_csv()),
            "text" => Ok(self.to_text()),
            other => Err(Error::Parse { line: 0, msg: format!("unknown format '{other}'") }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names() {
        assert_eq!(parse_checks("thm1,cert").unwrap().len(), 2);
        assert_eq!(parse_checks("all").unwrap().len(), 9);
        assert_eq!(parse_checks("thm1,bogus"), Err(Error::UnknownCheck("bogus".into())));
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
    }

    #[test]
    fn summary_and_renderings() {
        let corpus = Corpus { family: "test".into(), min_n: 1, max_n: 2, checks: vec!["thm1".into()] };
        let mut a = Record::new("()", 1, 1, 1);
        a.set("thm1", true);
        let mut b = Record::new("(())", 2, 6, 4);
        b.set("thm1", false);
        let r = SweepReport::from_records(corpus, vec![a, b]);
        assert!(!r.passed());
        assert_eq!(r.summary.failed_items, 1);
        assert_eq!(r.summary.min_ratio.as_ref().unwrap().ratio, "2/3");
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in ["corpus", "records", "summary", "failures", "version"] {
            assert!(json.get(key).is_some());
        }
        assert!(r.to_csv().lines().nth(2).unwrap().ends_with("FAIL"));
        assert!(r.to_text().contains("FAILED"));
        assert!(r.render("yaml").is_err());
        assert_eq!(four_ball_lower(5), 3);
        assert_eq!(four_ball_lower(4), 2);
    }
}
