//! Table rows and their CSV / JSON renderings.

use std::fmt::Write as _;

use dyonstark::verify::CheckOutcome;
use dyonstark::{FieldConfig, HalfInteger, PhysicalParams};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A float written as its shortest round-trip decimal string.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Exact(pub f64);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map(Exact).map_err(serde::de::Error::custom)
    }
}

/// 15 significant digits, fixed layout.
pub fn sci(x: f64) -> String {
    format!("{x:.14e}")
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

/// RFC 4180 field quoting.
fn csv_field(text: &str) -> String {
    if text.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

/// One state of a spectrum, shift or dipole table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateRecord {
    pub n: HalfInteger,
    pub s: HalfInteger,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n1: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n2: Option<u32>,
    pub m: HalfInteger,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub j: Option<HalfInteger>,
    pub e0: Exact,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub e1: Option<Exact>,
    /// e1 in sixths of 3ħ²|e|ε/(2μγ).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub e1_sixths: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dipole_z: Option<Exact>,
}

pub const STATE_HEADER: &str = "n,s2,n1,n2,m2,j2,e0,e1,dipole_z";

impl StateRecord {
    fn csv(&self) -> String {
        [
            self.n.to_string(),
            self.s.twice().to_string(),
            opt(self.n1),
            opt(self.n2),
            self.m.twice().to_string(),
            opt(self.j.map(|j| j.twice())),
            sci(self.e0.0),
            opt(self.e1.map(|x| sci(x.0))),
            opt(self.dipole_z.map(|x| sci(x.0))),
        ]
        .join(",")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplittingRecord {
    pub n: HalfInteger,
    pub s: HalfInteger,
    pub shell_splitting: Exact,
    pub shell_splitting_sixths: i64,
    pub fixed_m_splitting: Exact,
}

pub const SPLITTING_HEADER: &str = "n,s2,shell_splitting,fixed_m_splitting";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DipoleRecord {
    pub n: HalfInteger,
    pub s: HalfInteger,
    pub n1: u32,
    pub n2: u32,
    pub m: HalfInteger,
    pub dipole_z: Exact,
    pub dipole_operator: Exact,
}

pub const DIPOLE_HEADER: &str = "n,s2,n1,n2,m2,dipole_z,dipole_operator";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleRecord {
    pub r: Exact,
    pub theta: Exact,
    pub phi: Exact,
    pub re: Exact,
    pub im: Exact,
}

pub const SAMPLE_HEADER: &str = "r,theta,phi,re,im,density";

/// A complete table with the inputs that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document<R> {
    pub params: PhysicalParams,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub field: Option<FieldConfig>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub state: Option<String>,
    pub records: Vec<R>,
}

pub enum Table {
    States(Document<StateRecord>),
    Splitting(Document<SplittingRecord>),
    Dipole(Document<DipoleRecord>),
    Samples(Document<SampleRecord>),
}

impl Table {
    pub fn to_csv(&self) -> String {
        let (header, rows): (&str, Vec<String>) = match self {
            Table::States(d) => (STATE_HEADER, d.records.iter().map(StateRecord::csv).collect()),
            Table::Splitting(d) => (
                SPLITTING_HEADER,
                d.records
                    .iter()
                    .map(|r| format!("{},{},{},{}", r.n, r.s.twice(), sci(r.shell_splitting.0), sci(r.fixed_m_splitting.0)))
                    .collect(),
            ),
            Table::Dipole(d) => (
                DIPOLE_HEADER,
                d.records
                    .iter()
                    .map(|r| {
                        format!(
                            "{},{},{},{},{},{},{}",
                            r.n,
                            r.s.twice(),
                            r.n1,
                            r.n2,
                            r.m.twice(),
                            sci(r.dipole_z.0),
                            sci(r.dipole_operator.0)
                        )
                    })
                    .collect(),
            ),
            Table::Samples(d) => (
                SAMPLE_HEADER,
                d.records
                    .iter()
                    .map(|r| {
                        let density = r.re.0 * r.re.0 + r.im.0 * r.im.0;
                        [r.r.0, r.theta.0, r.phi.0, r.re.0, r.im.0, density].map(sci).join(",")
                    })
                    .collect(),
            ),
        };
        let mut out = String::with_capacity(64 * (rows.len() + 1));
        out.push_str(header);
        out.push_str("\r\n");
        for row in rows {
            out.push_str(&row);
            out.push_str("\r\n");
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut text = match self {
            Table::States(d) => serde_json::to_string_pretty(d),
            Table::Splitting(d) => serde_json::to_string_pretty(d),
            Table::Dipole(d) => serde_json::to_string_pretty(d),
            Table::Samples(d) => serde_json::to_string_pretty(d),
        }?;
        text.push('\n');
        Ok(text)
    }
}

pub const VERIFY_HEADER: &str = "id,passed,cases,worst,tolerance,failure";

pub fn verify_csv(outcomes: &[CheckOutcome]) -> String {
    let mut out = String::new();
    out.push_str(VERIFY_HEADER);
    out.push_str("\r\n");
    for c in outcomes {
        let _ = write!(
            out,
            "{},{},{},{},{},{}\r\n",
            c.id,
            c.passed,
            c.cases,
            sci(c.worst),
            sci(c.tolerance),
            csv_field(c.failure.as_deref().unwrap_or(""))
        );
    }
    out
}

#[derive(Serialize)]
pub struct VerifyReport<'a> {
    pub max_n: u32,
    pub quad_order: usize,
    pub checks: &'a [CheckOutcome],
    pub failures: Vec<&'a str>,
}
