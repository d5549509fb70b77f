//! Serialization helpers shared by the JSON reports.

use num_complex::Complex64;
use serde::ser::SerializeSeq;
use serde::Serializer;

/// A complex number as `[re, im]`, or a bare real when `im` is zero.
pub fn complex_value(z: Complex64) -> serde_json::Value {
    if z.im == 0.0 {
        serde_json::json!(z.re)
    } else {
        serde_json::json!([z.re, z.im])
    }
}

pub fn ser_complex3<S: Serializer>(c: &[Complex64; 3], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(3))?;
    for z in c {
        seq.serialize_element(&complex_value(*z))?;
    }
    seq.end()
}

pub fn ser_complex<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&complex_value(*z), s)
}
