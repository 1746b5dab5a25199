//! Canonical JSON and CSV serialization of structure-constant tables.
//!
//! The JSON document is
//! `{"format_version":1,"algebra":..,"k_kind":..,"l_kind":..,"dim":..,"basis":[..],"brackets":[[i,j,[[k,num,den],..]],..],"sha256":..}`
//! with one bracket per line. The hash covers the same document without
//! the `sha256` key.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::octonion::AlgebraKind;
use crate::scalar::Rational;
use crate::table::{StructureConstants, TableError};

pub const FORMAT_VERSION: u64 = 1;

#[derive(Debug, thiserror::Error)]
pub enum ExportError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field {0:?} is missing or has the wrong type")]
    Field(&'static str),
    #[error("unsupported format_version {0}")]
    Version(u64),
    #[error("dim {dim} does not match {labels} basis labels")]
    Dim { dim: usize, labels: usize },
    #[error("malformed bracket entry {0}")]
    Entry(String),
    #[error("coefficient {num}/{den} is not a reduced fraction with denominator 1 or 2")]
    Coefficient { num: String, den: String },
    #[error("brackets are not sorted by (i, j, k) at pair ({i}, {j})")]
    Order { i: usize, j: usize },
    #[error("sha256 mismatch: file has {found}, content hashes to {expected}")]
    Hash { found: String, expected: String },
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("unknown kind {0:?}")]
    Kind(String),
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn body(t: &StructureConstants) -> String {
    let mut out = String::new();
    out.push_str("{\"format_version\":1");
    let _ = write!(out, ",\"algebra\":{}", json_string(t.algebra()));
    let _ = write!(out, ",\"k_kind\":{}", json_string(t.k_kind().as_str()));
    match t.l_kind() {
        Some(l) => {
            let _ = write!(out, ",\"l_kind\":{}", json_string(l.as_str()));
        }
        None => out.push_str(",\"l_kind\":null"),
    }
    let _ = write!(out, ",\"dim\":{}", t.dim());
    let basis: Vec<String> = t.labels().iter().map(|l| json_string(l)).collect();
    let _ = write!(out, ",\"basis\":[{}]", basis.join(","));
    out.push_str(",\"brackets\":[");
    for (n, (i, j, v)) in t.entries().enumerate() {
        if n > 0 {
            out.push(',');
        }
        out.push('\n');
        let terms: Vec<String> = v
            .iter()
            .map(|(k, c)| format!("[{k},{},{}]", c.numer(), c.denom()))
            .collect();
        let _ = write!(out, "[{i},{j},[{}]]", terms.join(","));
    }
    out.push_str("\n]");
    out
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// The content hash recorded in the JSON export.
pub fn table_hash(t: &StructureConstants) -> String {
    let mut b = body(t);
    b.push('}');
    sha256_hex(b.as_bytes())
}

/// Canonical JSON, newline-terminated.
pub fn to_json(t: &StructureConstants) -> String {
    let mut b = body(t);
    let mut hashed = b.clone();
    hashed.push('}');
    let _ = writeln!(b, ",\"sha256\":{}}}", json_string(&sha256_hex(hashed.as_bytes())));
    b
}

/// One row per nonzero coefficient: `i,j,k,num,den`.
pub fn to_csv(t: &StructureConstants) -> String {
    let mut out = String::from("i,j,k,num,den\n");
    for (i, j, v) in t.entries() {
        for (k, c) in v {
            let _ = writeln!(out, "{i},{j},{k},{},{}", c.numer(), c.denom());
        }
    }
    out
}

fn kind(s: &str) -> Result<AlgebraKind, ExportError> {
    s.parse().map_err(|_| ExportError::Kind(s.to_string()))
}

fn index(v: &Value) -> Result<usize, ExportError> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| ExportError::Entry(v.to_string()))
}

fn integer(v: &Value) -> Result<BigInt, ExportError> {
    match v {
        Value::Number(n) => n
            .to_string()
            .parse::<BigInt>()
            .map_err(|_| ExportError::Entry(v.to_string())),
        _ => Err(ExportError::Entry(v.to_string())),
    }
}

/// Parses a JSON export and checks its hash and invariants.
pub fn from_json(text: &str) -> Result<StructureConstants, ExportError> {
    let v: Value = serde_json::from_str(text)?;
    let version = v["format_version"].as_u64().ok_or(ExportError::Field("format_version"))?;
    if version != FORMAT_VERSION {
        return Err(ExportError::Version(version));
    }
    let algebra = v["algebra"].as_str().ok_or(ExportError::Field("algebra"))?;
    let k_kind = kind(v["k_kind"].as_str().ok_or(ExportError::Field("k_kind"))?)?;
    let l_kind = match &v["l_kind"] {
        Value::Null => None,
        Value::String(s) => Some(kind(s)?),
        _ => return Err(ExportError::Field("l_kind")),
    };
    let dim = v["dim"].as_u64().ok_or(ExportError::Field("dim"))? as usize;
    let labels: Vec<String> = v["basis"]
        .as_array()
        .ok_or(ExportError::Field("basis"))?
        .iter()
        .map(|l| l.as_str().map(String::from).ok_or(ExportError::Field("basis")))
        .collect::<Result<_, _>>()?;
    if labels.len() != dim {
        return Err(ExportError::Dim { dim, labels: labels.len() });
    }
    let mut t = StructureConstants::new(algebra, k_kind, l_kind, labels)?;
    let mut last: Option<(usize, usize)> = None;
    for entry in v["brackets"].as_array().ok_or(ExportError::Field("brackets"))? {
        let e = entry.as_array().filter(|e| e.len() == 3).ok_or_else(|| ExportError::Entry(entry.to_string()))?;
        let (i, j) = (index(&e[0])?, index(&e[1])?);
        if last.is_some_and(|p| p >= (i, j)) {
            return Err(ExportError::Order { i, j });
        }
        last = Some((i, j));
        let mut terms = Vec::new();
        let mut prev: Option<usize> = None;
        for term in e[2].as_array().ok_or_else(|| ExportError::Entry(entry.to_string()))? {
            let term = term.as_array().filter(|x| x.len() == 3).ok_or_else(|| ExportError::Entry(entry.to_string()))?;
            let k = index(&term[0])?;
            if prev.is_some_and(|p| p >= k) {
                return Err(ExportError::Order { i, j });
            }
            prev = Some(k);
            let (num, den) = (integer(&term[1])?, integer(&term[2])?);
            let c = Rational::from_bigs(num.clone(), den.clone());
            let reduced = c.numer() == num && c.denom() == den;
            if !reduced || c.is_zero() || !c.is_half_integer() {
                return Err(ExportError::Coefficient {
                    num: num.to_string(),
                    den: den.to_string(),
                });
            }
            terms.push((k, c));
        }
        t.set(i, j, terms)?;
    }
    let found = v["sha256"].as_str().ok_or(ExportError::Field("sha256"))?;
    let expected = table_hash(&t);
    if found != expected {
        return Err(ExportError::Hash {
            found: found.to_string(),
            expected,
        });
    }
    Ok(t)
}
