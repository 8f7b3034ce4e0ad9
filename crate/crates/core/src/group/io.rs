//! JSON files for groups, involutions and quasigroup tables.
//!
//! A group file is `{"names": [...], "unit": name, "cayley": [[name, ...], ...]}`
//! where `cayley[i][j]` names the product of `names[i]` and `names[j]`.
//! Quasigroup files use the same layout plus `"tau"`. An involution file is
//! `{"involution": {name: image, ...}}`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::{CayleyTable, GroupError, Involution};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub names: Vec<String>,
    pub unit: String,
    pub cayley: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<String>,
}

fn name_index(names: &[String]) -> HashMap<&str, usize> {
    names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect()
}

fn lookup(index: &HashMap<&str, usize>, name: &str, context: impl FnOnce() -> String) -> Result<usize, GroupError> {
    index.get(name).copied().ok_or_else(|| GroupError::UnknownName {
        name: name.to_string(),
        context: context(),
    })
}

impl GroupFile {
    pub fn from_table(table: &CayleyTable) -> Self {
        let n = table.order();
        Self {
            names: table.names().to_vec(),
            unit: table.name(table.unit()).to_string(),
            cayley: (0..n)
                .map(|a| (0..n).map(|b| table.name(table.product(a, b)).to_string()).collect())
                .collect(),
            tau: None,
        }
    }

    /// Resolves names to indices; the result is only structurally checked.
    pub fn to_table(&self) -> Result<CayleyTable, GroupError> {
        let n = self.names.len();
        let index = name_index(&self.names);
        if index.len() != n {
            let mut seen = std::collections::HashSet::new();
            let dup = self
                .names
                .iter()
                .find(|x| !seen.insert(x.as_str()))
                .cloned()
                .unwrap_or_default();
            return Err(GroupError::DuplicateName(dup));
        }
        let unit = lookup(&index, &self.unit, || "field \"unit\"".into())?;
        if self.cayley.len() != n {
            return Err(GroupError::TableSize {
                expected: n * n,
                found: self.cayley.iter().map(Vec::len).sum(),
            });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (r, row) in self.cayley.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::TableSize {
                    expected: n * n,
                    found: self.cayley.iter().map(Vec::len).sum(),
                });
            }
            for (c, name) in row.iter().enumerate() {
                flat.push(lookup(&index, name, || format!("field \"cayley\" row {r} column {c}"))?);
            }
        }
        CayleyTable::new(self.names.clone(), flat, unit)
    }

    pub fn tau_index(&self) -> Result<Option<usize>, GroupError> {
        let index = name_index(&self.names);
        self.tau
            .as_deref()
            .map(|t| lookup(&index, t, || "field \"tau\"".into()))
            .transpose()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionFile {
    pub involution: BTreeMap<String, String>,
}

impl InvolutionFile {
    pub fn from_involution(names: &[String], inv: &Involution) -> Self {
        Self {
            involution: names
                .iter()
                .enumerate()
                .map(|(i, n)| (n.clone(), names[inv.apply(i)].clone()))
                .collect(),
        }
    }

    pub fn to_involution(&self, names: &[String]) -> Result<Involution, GroupError> {
        let index = name_index(names);
        for key in self.involution.keys() {
            lookup(&index, key, || "involution keys".into())?;
        }
        let map = names
            .iter()
            .map(|n| {
                let image = self.involution.get(n).ok_or_else(|| GroupError::MissingEntry {
                    name: n.clone(),
                    context: "involution".into(),
                })?;
                lookup(&index, image, || format!("image of {n:?}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Involution::new(map))
    }
}

#[cfg(test)]
mod tests {
    use super::super::catalog;
    use super::*;

    #[test]
    fn group_file_round_trip() {
        let t = catalog::symmetric_table(3);
        let file = GroupFile::from_table(&t);
        let text = serde_json::to_string(&file).unwrap();
        let back: GroupFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_table().unwrap(), t);
        assert!(!text.contains("tau"));
    }

    #[test]
    fn missing_unit_is_a_schema_error() {
        let err = serde_json::from_str::<GroupFile>(r#"{"names": ["e"], "cayley": [["e"]]}"#).unwrap_err();
        assert!(err.to_string().contains("unit"));
    }

    #[test]
    fn unknown_cayley_entry_reports_position() {
        let file = GroupFile {
            names: vec!["e".into(), "a".into()],
            unit: "e".into(),
            cayley: vec![vec!["e".into(), "a".into()], vec!["a".into(), "b".into()]],
            tau: None,
        };
        let err = file.to_table().unwrap_err();
        assert!(err.to_string().contains("row 1 column 1"), "{err}");
    }

    #[test]
    fn involution_file_round_trip() {
        let g = catalog::symmetric(3);
        let inv = Involution::inversion(&g);
        let file = InvolutionFile::from_involution(g.names(), &inv);
        assert_eq!(file.to_involution(g.names()).unwrap(), inv);
        let mut partial = file.clone();
        partial.involution.remove("123");
        assert!(matches!(
            partial.to_involution(g.names()),
            Err(GroupError::MissingEntry { .. })
        ));
    }
}
