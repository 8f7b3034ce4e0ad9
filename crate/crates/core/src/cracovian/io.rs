//! Text formats for cracovians.
//!
//! CSV holds the row display, one table row per line, each scalar written as
//! `re` or `re+imj` / `re-imj`. JSON holds
//! `{"n_cols", "n_rows", "entries_column_major": [[re, im], ...]}`.

use serde::{Deserialize, Serialize};

use super::{Cracovian, CracovianError, Scalar};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CracovianJson {
    pub n_cols: usize,
    pub n_rows: usize,
    pub entries_column_major: Vec<[f64; 2]>,
}

impl From<&Cracovian> for CracovianJson {
    fn from(c: &Cracovian) -> Self {
        Self {
            n_cols: c.n_cols(),
            n_rows: c.n_rows(),
            entries_column_major: c.entries().iter().map(|z| [clean(z.re), clean(z.im)]).collect(),
        }
    }
}

impl TryFrom<CracovianJson> for Cracovian {
    type Error = CracovianError;

    fn try_from(j: CracovianJson) -> Result<Self, Self::Error> {
        let entries = j
            .entries_column_major
            .into_iter()
            .map(|[re, im]| Scalar::new(re, im))
            .collect();
        Cracovian::new(j.n_cols, j.n_rows, entries)
    }
}

pub fn to_json(c: &Cracovian) -> String {
    serde_json::to_string_pretty(&CracovianJson::from(c)).expect("plain data serializes")
}

pub fn from_json(text: &str) -> Result<Cracovian, CracovianError> {
    let j: CracovianJson = serde_json::from_str(text).map_err(|e| CracovianError::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    Cracovian::try_from(j)
}

// -0.0 prints as "-0"; fold it into +0.0.
fn clean(x: f64) -> f64 {
    x + 0.0
}

pub fn format_scalar(z: Scalar) -> String {
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        format!("{re}")
    } else if im < 0.0 {
        format!("{re}-{}j", -im)
    } else {
        format!("{re}+{im}j")
    }
}

pub fn parse_scalar(text: &str) -> Result<Scalar, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("empty scalar".into());
    }
    let Some(body) = s.strip_suffix(['j', 'i']) else {
        return s
            .parse::<f64>()
            .map(|re| Scalar::new(re, 0.0))
            .map_err(|_| format!("bad scalar {s:?}"));
    };
    // Split at the last sign that is not part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re_part, im_part) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let re = re_part.parse::<f64>().map_err(|_| format!("bad real part in {s:?}"))?;
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other
            .parse::<f64>()
            .map_err(|_| format!("bad imaginary part in {s:?}"))?,
    };
    Ok(Scalar::new(re, im))
}

pub fn to_csv(c: &Cracovian) -> String {
    let mut out = String::new();
    for row in c.rows() {
        let cells: Vec<String> = row.into_iter().map(format_scalar).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn from_csv(text: &str) -> Result<Cracovian, CracovianError> {
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split(',')
            .map(parse_scalar)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|msg| CracovianError::Parse { line: idx + 1, msg })?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CracovianError::Parse {
            line: 1,
            msg: "no rows".into(),
        });
    }
    Cracovian::from_rows(&rows)
}
