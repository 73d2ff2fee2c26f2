//! JSON interchange records and the on-disk cache.
//!
//! Big integers travel as decimal strings and rationals as `["num", "den"]`
//! string pairs, so every record is exact and diffable.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactnum::{Matrix, NfElem, Rationals};
use crate::jacobi::{JacobiForm1, KohnenForm};
use crate::level1::NewformData;
use crate::qexp::QExpansion;
use crate::siegel::SiegelExpansion;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const CACHE_ENV: &str = "SKLIFT_CACHE_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    QExpansion,
    Jacobi,
    Kohnen,
    Siegel,
    Matrix,
    Report,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub version: String,
    pub params: BTreeMap<String, String>,
    /// SHA-256 of the compact serialization of `payload`.
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormRecord {
    pub kind: Kind,
    pub weight: i64,
    pub precision: u64,
    pub payload: Value,
    pub metadata: Metadata,
}

pub fn payload_hash(payload: &Value) -> String {
    let bytes = serde_json::to_vec(payload).expect("json values serialize");
    hex::encode(Sha256::digest(&bytes))
}

impl FormRecord {
    pub fn new(
        kind: Kind,
        weight: i64,
        precision: u64,
        payload: Value,
        params: BTreeMap<String, String>,
    ) -> Self {
        let sha256 = payload_hash(&payload);
        FormRecord {
            kind,
            weight,
            precision,
            payload,
            metadata: Metadata {
                version: VERSION.into(),
                params,
                sha256,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    /// Parses a record and verifies its content hash.
    pub fn from_json(s: &str) -> Result<Self> {
        let rec: FormRecord = serde_json::from_str(s)?;
        if payload_hash(&rec.payload) != rec.metadata.sha256 {
            return Err(Error::Format("payload hash mismatch".into()));
        }
        Ok(rec)
    }
}

pub fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

pub fn int_to_json(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

pub fn int_from_json(v: &Value) -> Result<BigInt> {
    v.as_str()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Format(format!("expected a decimal integer string, got {v}")))
}

pub fn rat_to_json(q: &BigRational) -> Value {
    json!([q.numer().to_string(), q.denom().to_string()])
}

pub fn rat_from_json(v: &Value) -> Result<BigRational> {
    let bad = || Error::Format(format!("expected [\"num\", \"den\"], got {v}"));
    let arr = v.as_array().ok_or_else(bad)?;
    if arr.len() != 2 {
        return Err(bad());
    }
    let num = int_from_json(&arr[0])?;
    let den = int_from_json(&arr[1])?;
    if den.is_zero() {
        return Err(Error::Format("zero denominator".into()));
    }
    Ok(BigRational::new(num, den))
}

pub fn rats_to_json(v: &[BigRational]) -> Value {
    Value::Array(v.iter().map(rat_to_json).collect())
}

pub fn rats_from_json(v: &Value) -> Result<Vec<BigRational>> {
    v.as_array()
        .ok_or_else(|| Error::Format(format!("expected an array, got {v}")))?
        .iter()
        .map(rat_from_json)
        .collect()
}

pub fn nf_to_json(e: &NfElem) -> Value {
    rats_to_json(&e.0)
}

pub fn nf_from_json(v: &Value) -> Result<NfElem> {
    Ok(NfElem(rats_from_json(v)?))
}

pub fn matrix_to_json(m: &Matrix<Rationals>) -> Value {
    Value::Array(m.to_rows().iter().map(|r| rats_to_json(r)).collect())
}

pub fn matrix_from_json(v: &Value) -> Result<Matrix<Rationals>> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Format("matrix payload must be an array of rows".into()))?
        .iter()
        .map(rats_from_json)
        .collect::<Result<Vec<_>>>()?;
    if rows.iter().any(|r| r.len() != rows.first().map_or(0, |f| f.len())) {
        return Err(Error::Format("ragged matrix".into()));
    }
    Ok(Matrix::from_rows(Rationals, rows))
}

pub fn qexp_to_record(f: &QExpansion<Rationals>, params: BTreeMap<String, String>) -> FormRecord {
    FormRecord::new(
        Kind::QExpansion,
        f.weight(),
        f.precision() as u64,
        json!({ "coeffs": rats_to_json(f.coeffs()) }),
        params,
    )
}

fn expect_kind(rec: &FormRecord, kind: Kind) -> Result<()> {
    if rec.kind != kind {
        return Err(Error::Format(format!("expected a {kind:?} record, got {:?}", rec.kind)));
    }
    Ok(())
}

fn field<'a>(rec: &'a FormRecord, name: &str) -> Result<&'a Value> {
    rec.payload
        .get(name)
        .ok_or_else(|| Error::Format(format!("payload has no \"{name}\"")))
}

pub fn qexp_from_record(rec: &FormRecord) -> Result<QExpansion<Rationals>> {
    expect_kind(rec, Kind::QExpansion)?;
    Ok(QExpansion::new(Rationals, rec.weight, rats_from_json(field(rec, "coeffs")?)?))
}

/// A newform over its eigenfield: the defining polynomial and the
/// coefficients as polynomials in its root.
pub fn newform_to_record(f: &NewformData, params: BTreeMap<String, String>) -> FormRecord {
    FormRecord::new(
        Kind::QExpansion,
        f.weight,
        f.expansion.precision() as u64,
        json!({
            "field": rats_to_json(f.charpoly.coeffs()),
            "coeffs": Value::Array(f.expansion.coeffs().iter().map(nf_to_json).collect()),
        }),
        params,
    )
}

pub fn jacobi_to_record(phi: &JacobiForm1, params: BTreeMap<String, String>) -> FormRecord {
    FormRecord::new(
        Kind::Jacobi,
        phi.weight,
        phi.dmax() as u64,
        json!({ "index": 1, "coeffs": rats_to_json(&phi.coeffs) }),
        params,
    )
}

pub fn jacobi_from_record(rec: &FormRecord) -> Result<JacobiForm1> {
    expect_kind(rec, Kind::Jacobi)?;
    Ok(JacobiForm1 {
        weight: rec.weight,
        coeffs: rats_from_json(field(rec, "coeffs")?)?,
    })
}

pub fn kohnen_to_record(g: &KohnenForm, params: BTreeMap<String, String>) -> FormRecord {
    FormRecord::new(
        Kind::Kohnen,
        g.k,
        g.precision() as u64,
        json!({ "coeffs": rats_to_json(&g.coeffs) }),
        params,
    )
}

pub fn kohnen_from_record(rec: &FormRecord) -> Result<KohnenForm> {
    expect_kind(rec, Kind::Kohnen)?;
    Ok(KohnenForm {
        k: rec.weight,
        coeffs: rats_from_json(field(rec, "coeffs")?)?,
    })
}

/// Siegel coefficients keyed `"n,r,m"`.
pub fn siegel_to_record(f: &SiegelExpansion<Rationals>, params: BTreeMap<String, String>) -> FormRecord {
    let coeffs: serde_json::Map<String, Value> = f
        .stored()
        .map(|((n, r, m), v)| (format!("{n},{r},{m}"), rat_to_json(v)))
        .collect();
    FormRecord::new(
        Kind::Siegel,
        f.weight,
        f.bound as u64,
        json!({ "coeffs": coeffs }),
        params,
    )
}

pub fn siegel_from_record(rec: &FormRecord) -> Result<SiegelExpansion<Rationals>> {
    expect_kind(rec, Kind::Siegel)?;
    let map = field(rec, "coeffs")?
        .as_object()
        .ok_or_else(|| Error::Format("siegel coefficients must be an object".into()))?;
    let mut out = SiegelExpansion::new(Rationals, rec.weight, rec.precision as i64);
    for (key, v) in map {
        let parts: Vec<i64> = key
            .split(',')
            .map(|t| t.parse().map_err(|_| Error::Format(format!("bad index \"{key}\""))))
            .collect::<Result<_>>()?;
        let [n, r, m] = parts[..] else {
            return Err(Error::Format(format!("bad index \"{key}\"")));
        };
        out.set(n, r, m, rat_from_json(v)?);
    }
    Ok(out)
}

pub fn matrix_to_record(m: &Matrix<Rationals>, weight: i64, params: BTreeMap<String, String>) -> FormRecord {
    FormRecord::new(Kind::Matrix, weight, m.rows() as u64, json!({ "rows": matrix_to_json(m) }), params)
}

pub fn matrix_from_record(rec: &FormRecord) -> Result<Matrix<Rationals>> {
    expect_kind(rec, Kind::Matrix)?;
    matrix_from_json(field(rec, "rows")?)
}

/// Directory-backed record cache keyed by the hash of construction
/// parameters.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$SKLIFT_CACHE_DIR`, or `./.sklift-cache`.
    pub fn from_env() -> Self {
        let dir = std::env::var_os(CACHE_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(".sklift-cache"));
        Cache::new(dir)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(params: &BTreeMap<String, String>) -> String {
        let bytes = serde_json::to_vec(params).expect("params serialize");
        hex::encode(Sha256::digest(&bytes))
    }

    fn path(&self, params: &BTreeMap<String, String>) -> PathBuf {
        self.dir.join(format!("{}.json", Self::key(params)))
    }

    /// Missing or unreadable entries are treated as misses.
    pub fn get(&self, params: &BTreeMap<String, String>) -> Option<FormRecord> {
        let text = fs::read_to_string(self.path(params)).ok()?;
        let rec = FormRecord::from_json(&text).ok()?;
        (rec.metadata.params == *params).then_some(rec)
    }

    /// Writes to a temporary file in the cache directory, then renames it
    /// into place.
    pub fn put(&self, rec: &FormRecord) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let target = self.path(&rec.metadata.params);
        let tmp = self.dir.join(format!(
            ".{}.{}.tmp",
            Self::key(&rec.metadata.params),
            std::process::id()
        ));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(rec.to_json().as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &target)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::field::{q, qi};

    #[test]
    fn rationals_round_trip() {
        for x in [q(-7, 3), qi(0), qi(123456789)] {
            assert_eq!(rat_from_json(&rat_to_json(&x)).unwrap(), x);
        }
        assert_eq!(rat_to_json(&q(1, -2)), json!(["-1", "2"]));
        assert!(rat_from_json(&json!(["1", "0"])).is_err());
        assert!(rat_from_json(&json!([1, 2])).is_err());
    }

    #[test]
    fn tampered_record_is_rejected() {
        let rec = FormRecord::new(
            Kind::Matrix,
            12,
            2,
            json!([[["-24", "1"]]]),
            params([("ell", "2".into())]),
        );
        let text = rec.to_json();
        assert_eq!(FormRecord::from_json(&text).unwrap(), rec);
        let bad = text.replace("-24", "-25");
        assert!(matches!(FormRecord::from_json(&bad), Err(Error::Format(_))));
    }

    #[test]
    fn cache_put_get() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let p = params([("w", "12".into())]);
        assert!(cache.get(&p).is_none());
        let rec = FormRecord::new(Kind::Report, 0, 0, json!({"a": 1}), p.clone());
        cache.put(&rec).unwrap();
        assert_eq!(cache.get(&p).unwrap(), rec);
    }
}
