//! Representation bundles: `{"dimension": d, "elements": {name: cracovian}}`
//! with each cracovian in the JSON layout of [`crate::cracovian::io`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cracovian::io::CracovianJson;
use crate::cracovian::Cracovian;

use super::{Representation, RepresentationError};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationBundle {
    pub dimension: usize,
    pub elements: BTreeMap<String, CracovianJson>,
}

impl RepresentationBundle {
    pub fn from_representation(rep: &Representation) -> Self {
        Self {
            dimension: rep.dimension(),
            elements: rep
                .names()
                .iter()
                .zip(rep.tables())
                .map(|(n, t)| (n.clone(), CracovianJson::from(t)))
                .collect(),
        }
    }

    /// Tables in name order; each must be `dimension x dimension`.
    pub fn to_representation(&self) -> Result<Representation, RepresentationError> {
        let mut names = Vec::with_capacity(self.elements.len());
        let mut tables = Vec::with_capacity(self.elements.len());
        for (name, j) in &self.elements {
            let t = Cracovian::try_from(j.clone())
                .map_err(|e| RepresentationError::Bundle(format!("element {name:?}: {e}")))?;
            if t.n_rows() != self.dimension || t.n_cols() != self.dimension {
                return Err(RepresentationError::SizeMismatch {
                    name: name.clone(),
                    expected: format!("{0} x {0}", self.dimension),
                    found: t.shape().to_string(),
                });
            }
            names.push(name.clone());
            tables.push(t);
        }
        Representation::from_tables(names, tables)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, RepresentationError> {
        serde_json::from_str(text).map_err(|e| RepresentationError::Bundle(e.to_string()))
    }
}
