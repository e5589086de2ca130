//! Serde helpers rendering rationals as `"p/q"` strings.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::Serializer;

use crate::multseq::Partition;
use crate::series::Rational;

pub(crate) fn rational<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub(crate) fn partition_map<S: Serializer>(
    map: &BTreeMap<Partition, Rational>,
    s: S,
) -> Result<S::Ok, S::Error> {
    let mut out = s.serialize_map(Some(map.len()))?;
    for (p, v) in map {
        out.serialize_entry(&p.key(), &v.to_string())?;
    }
    out.end()
}
