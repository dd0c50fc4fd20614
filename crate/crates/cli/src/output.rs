use serde::Serialize;

/// Node count in JSON: a number, or `"inf"`.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum NodeCount {
    Finite(u64),
    Infinite(&'static str),
}

impl From<Option<u64>> for NodeCount {
    fn from(n: Option<u64>) -> Self {
        match n {
            Some(n) => NodeCount::Finite(n),
            None => NodeCount::Infinite("inf"),
        }
    }
}

/// One line of `--json` output for spec-oriented commands.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub spec: String,
    pub kind: &'static str,
    pub n: NodeCount,
    /// Decimal count, or `"infinite"`.
    pub count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed_points: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ns: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_count: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_elapsed_ns: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agrees: Option<bool>,
}

impl OutputRecord {
    pub fn new(spec: String, kind: &'static str, n: Option<u64>, count: String) -> Self {
        OutputRecord {
            spec,
            kind,
            n: n.into(),
            count,
            fixed_points: None,
            elapsed_ns: None,
            oracle_count: None,
            oracle_elapsed_ns: None,
            agrees: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsRecord {
    pub m: u64,
    pub closed: bool,
    pub lower: String,
    pub upper: String,
    /// False for closed families with an odd number of runs.
    pub representable: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SequenceRecord {
    pub sequence: &'static str,
    pub index: usize,
    pub value: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub max_n: usize,
    pub open_networks: u64,
    pub closed_networks: u64,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<MismatchRecord>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MismatchRecord {
    pub kind: &'static str,
    pub operators: String,
    pub formula: String,
    pub oracle: String,
}

pub fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("records serialize to JSON")
    );
}
