//! JSON instance formats.
//!
//! Grid:
//!
//! ```json
//! {"field": {"kind": "prime", "p": 7},
//!  "sets": [[{"value": "0", "mult": 2}, {"value": "3", "mult": 1}], [...]]}
//! ```
//!
//! Values are decimal strings (`"a/b"` for rationals); bare JSON integers are
//! accepted on input. Hyperplane lists are arrays `[c0, c1, ..., cn]` for
//! `c0 + c1 x1 + ... + cn xn`. Vector multisets list
//! `{"vector": [..], "mult": m}` entries.

use serde::{Deserialize, Serialize};

use crate::apps::{Hyperplane, VectorMultiset};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldKind, FieldSpec};
use crate::ideal::{Multiset, MultisetGrid};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldJson {
    Prime { p: u64 },
    Rational,
}

impl FieldJson {
    pub fn to_spec(&self) -> Result<FieldSpec> {
        match *self {
            FieldJson::Prime { p } => FieldSpec::prime(p),
            FieldJson::Rational => Ok(FieldSpec::rational()),
        }
    }
}

impl From<FieldSpec> for FieldJson {
    fn from(spec: FieldSpec) -> Self {
        match spec.kind() {
            FieldKind::Prime(p) => FieldJson::Prime { p },
            FieldKind::Rational => FieldJson::Rational,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueJson {
    Text(String),
    Int(i64),
}

impl ValueJson {
    pub fn to_element(&self, spec: FieldSpec) -> Result<FieldElement> {
        match self {
            ValueJson::Text(s) => spec.parse_element(s),
            ValueJson::Int(v) => Ok(spec.from_i64(*v)),
        }
    }
}

impl From<&FieldElement> for ValueJson {
    fn from(e: &FieldElement) -> Self {
        ValueJson::Text(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryJson {
    pub value: ValueJson,
    pub mult: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridJson {
    pub field: FieldJson,
    pub sets: Vec<Vec<EntryJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultisetPairJson {
    pub field: FieldJson,
    pub a: Vec<EntryJson>,
    pub b: Vec<EntryJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperplanesJson {
    /// Defaults to the grid's field when omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldJson>,
    pub hyperplanes: Vec<Vec<ValueJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorEntryJson {
    pub vector: Vec<u64>,
    pub mult: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorPairJson {
    pub p: u64,
    pub dim: usize,
    pub a: Vec<VectorEntryJson>,
    pub b: Vec<VectorEntryJson>,
}

/// Deserializes with serde_json and maps failures to an input error that
/// carries line and column.
pub fn from_str<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        Error::InvalidInput(format!("JSON at line {} column {}: {e}", e.line(), e.column()))
    })
}

pub fn multiset_from_entries(spec: FieldSpec, entries: &[EntryJson]) -> Result<Multiset> {
    let parsed = entries
        .iter()
        .map(|e| Ok((e.value.to_element(spec)?, e.mult)))
        .collect::<Result<Vec<_>>>()?;
    Multiset::new(spec, parsed)
}

/// Compact form `value:mult,...` such as `0:2,3:1` or `-1/2:1`. Each entry
/// splits on its last `:`.
pub fn parse_multiset_compact(text: &str, spec: FieldSpec) -> Result<Multiset> {
    if text.trim().is_empty() {
        return Err(Error::InvalidMultiset("multiset is empty".to_string()));
    }
    let entries = text
        .split(',')
        .map(|s| {
            let s = s.trim();
            let (v, m) = s
                .rsplit_once(':')
                .ok_or_else(|| Error::InvalidInput(format!("expected value:mult, got {s:?}")))?;
            let m: u32 = m
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad multiplicity in {s:?}")))?;
            Ok((spec.parse_element(v)?, m))
        })
        .collect::<Result<Vec<_>>>()?;
    Multiset::new(spec, entries)
}

pub fn multiset_to_entries(set: &Multiset) -> Vec<EntryJson> {
    set.iter()
        .map(|(v, m)| EntryJson {
            value: v.into(),
            mult: m,
        })
        .collect()
}

impl GridJson {
    pub fn to_grid(&self) -> Result<MultisetGrid> {
        let spec = self.field.to_spec()?;
        let sets = self
            .sets
            .iter()
            .map(|s| multiset_from_entries(spec, s))
            .collect::<Result<Vec<_>>>()?;
        MultisetGrid::new(sets)
    }
}

impl From<&MultisetGrid> for GridJson {
    fn from(grid: &MultisetGrid) -> Self {
        GridJson {
            field: grid.spec().into(),
            sets: grid.sets().iter().map(multiset_to_entries).collect(),
        }
    }
}

pub fn parse_grid(text: &str) -> Result<MultisetGrid> {
    from_str::<GridJson>(text)?.to_grid()
}

pub fn grid_to_string(grid: &MultisetGrid) -> String {
    serde_json::to_string(&GridJson::from(grid)).expect("plain data serializes")
}

impl MultisetPairJson {
    pub fn to_pair(&self) -> Result<(Multiset, Multiset)> {
        let spec = self.field.to_spec()?;
        Ok((multiset_from_entries(spec, &self.a)?, multiset_from_entries(spec, &self.b)?))
    }
}

impl HyperplanesJson {
    /// `default` is used when the document carries no field of its own.
    pub fn to_hyperplanes(&self, default: FieldSpec) -> Result<Vec<Hyperplane>> {
        let spec = match &self.field {
            Some(f) => f.to_spec()?,
            None => default,
        };
        self.hyperplanes
            .iter()
            .map(|row| {
                let mut values = row
                    .iter()
                    .map(|v| v.to_element(spec))
                    .collect::<Result<Vec<_>>>()?;
                if values.len() < 2 {
                    return Err(Error::InvalidInput(
                        "hyperplane needs a constant and at least one coefficient".to_string(),
                    ));
                }
                let coeffs = values.split_off(1);
                Hyperplane::new(values.pop().expect("constant"), coeffs)
            })
            .collect()
    }
}

pub fn hyperplanes_to_json(hs: &[Hyperplane]) -> Vec<Vec<ValueJson>> {
    hs.iter()
        .map(|h| {
            std::iter::once(h.constant())
                .chain(h.coeffs())
                .map(ValueJson::from)
                .collect()
        })
        .collect()
}

impl VectorPairJson {
    pub fn to_pair(&self) -> Result<(VectorMultiset, VectorMultiset)> {
        let side = |entries: &[VectorEntryJson]| {
            VectorMultiset::new(
                self.p,
                self.dim,
                entries.iter().map(|e| (e.vector.clone(), e.mult)),
            )
        };
        Ok((side(&self.a)?, side(&self.b)?))
    }
}

pub fn vector_multiset_to_json(set: &VectorMultiset) -> Vec<VectorEntryJson> {
    set.iter()
        .map(|(v, m)| VectorEntryJson {
            vector: v.0.clone(),
            mult: m,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_round_trip() {
        let text = r#"{"field":{"kind":"prime","p":7},"sets":[[{"value":"0","mult":2},{"value":"3","mult":1}],[{"value":1,"mult":1}]]}"#;
        let grid = parse_grid(text).unwrap();
        assert_eq!(grid.sizes(), vec![3, 1]);
        let again = parse_grid(&grid_to_string(&grid)).unwrap();
        assert_eq!(again, grid);
        assert_eq!(
            grid_to_string(&grid),
            r#"{"field":{"kind":"prime","p":7},"sets":[[{"value":"0","mult":2},{"value":"3","mult":1}],[{"value":"1","mult":1}]]}"#
        );
    }

    #[test]
    fn rational_values() {
        let text = r#"{"field":{"kind":"rational"},"sets":[[{"value":"-1/2","mult":1},{"value":"3","mult":2}]]}"#;
        let grid = parse_grid(text).unwrap();
        assert_eq!(grid.set(0).elements().next().unwrap().to_string(), "-1/2");
    }

    #[test]
    fn bad_documents() {
        assert!(matches!(parse_grid("{"), Err(Error::InvalidInput(_))));
        let dup = r#"{"field":{"kind":"prime","p":5},"sets":[[{"value":"1","mult":1},{"value":"6","mult":1}]]}"#;
        assert!(matches!(parse_grid(dup), Err(Error::InvalidMultiset(_))));
        let not_prime = r#"{"field":{"kind":"prime","p":6},"sets":[[{"value":"1","mult":1}]]}"#;
        assert!(matches!(parse_grid(not_prime), Err(Error::NotPrime(6))));
        let extra = r#"{"field":{"kind":"rational"},"sets":[],"x":1}"#;
        assert!(parse_grid(extra).is_err());
    }

    #[test]
    fn hyperplane_rows() {
        let spec = FieldSpec::prime(5).unwrap();
        let doc: HyperplanesJson = from_str(r#"{"hyperplanes":[["-1","1","0"],[4,0,1]]}"#).unwrap();
        let hs = doc.to_hyperplanes(spec).unwrap();
        assert_eq!(hs[0], Hyperplane::axis(2, 0, &spec.one()));
        assert_eq!(hs[1], Hyperplane::axis(2, 1, &spec.one()));
        let text = serde_json::to_string(&hyperplanes_to_json(&hs)).unwrap();
        assert_eq!(text, r#"[["4","1","0"],["4","0","1"]]"#);
        let bad: HyperplanesJson = from_str(r#"{"hyperplanes":[["1"]]}"#).unwrap();
        assert!(bad.to_hyperplanes(spec).is_err());
    }

    #[test]
    fn compact_multisets() {
        let f7 = FieldSpec::prime(7).unwrap();
        let m = parse_multiset_compact("0:2, 3:1", f7).unwrap();
        assert_eq!(m.to_string(), "{0:2, 3:1}");
        let q = FieldSpec::rational();
        assert_eq!(parse_multiset_compact("-1/2:3", q).unwrap().size(), 3);
        assert!(parse_multiset_compact("", f7).is_err());
        assert!(parse_multiset_compact("1", f7).is_err());
        assert!(parse_multiset_compact("1:x", f7).is_err());
        assert!(parse_multiset_compact("1:1,8:1", f7).is_err());
    }

    #[test]
    fn vector_pair() {
        let doc: VectorPairJson = from_str(
            r#"{"p":2,"dim":2,"a":[{"vector":[0,0],"mult":1},{"vector":[1,0],"mult":1}],"b":[{"vector":[0,1],"mult":2}]}"#,
        )
        .unwrap();
        let (a, b) = doc.to_pair().unwrap();
        assert_eq!((a.size(), b.size()), (2, 2));
        assert_eq!(vector_multiset_to_json(&b)[0].vector, vec![0, 1]);
    }
}
