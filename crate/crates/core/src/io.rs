//! Text formats for curves and plane parametrizations.
//!
//! Curve file:
//!
//! ```text
//! # comment
//! vars: x, y, z
//! F1: -718945312497/100*x + 698623125001/100*y - 671015625*z
//!     + 13865578693*z*y            (indented lines continue an entry)
//! F2: ...
//! ```
//!
//! Parametrization file: entries `p1:`, `p2:` or `p3:`, and `q:`, each a
//! polynomial in `t`.

use std::collections::BTreeMap;
use std::path::Path;

use crate::curve::{SpaceCurve, SPACE_VARS};
use crate::error::{Error, Result};
use crate::poly::{parse_poly, MPoly, Rat, UPoly};

/// One `label: expression` entry, possibly spanning several lines.
#[derive(Debug)]
struct Entry {
    label: String,
    text: String,
    /// `(offset in text, line, column)` for each physical line segment.
    segments: Vec<(usize, usize, usize)>,
}

impl Entry {
    fn locate(&self, pos: usize) -> (usize, usize) {
        let seg = self.segments.iter().rev().find(|s| s.0 <= pos).unwrap_or(&self.segments[0]);
        (seg.1, seg.2 + (pos - seg.0))
    }

    fn remap(&self, e: Error) -> Error {
        match e {
            Error::Parse { column, message, .. } => {
                let (line, col) = self.locate(column.saturating_sub(1));
                Error::Parse { line, column: col, message }
            }
            other => other,
        }
    }
}

fn entries(src: &str) -> Result<Vec<Entry>> {
    let mut out: Vec<Entry> = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line_no = i + 1;
        let line = match raw.find('#') {
            Some(k) => &raw[..k],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let continuation = raw.starts_with([' ', '\t']) && !out.is_empty() && !line.contains(':');
        if continuation {
            let e = out.last_mut().unwrap();
            let lead = line.len() - line.trim_start().len();
            e.text.push(' ');
            e.segments.push((e.text.len(), line_no, lead + 1));
            e.text.push_str(line.trim_start());
            continue;
        }
        let Some(colon) = line.find(':') else {
            return Err(Error::Parse { line: line_no, column: 1, message: "expected `label: value`".into() });
        };
        let label = line[..colon].trim().to_string();
        let rest = &line[colon + 1..];
        let lead = rest.len() - rest.trim_start().len();
        let start_col = line[..colon + 1].chars().count() + lead + 1;
        out.push(Entry { label, text: rest.trim_start().to_string(), segments: vec![(0, line_no, start_col)] });
    }
    Ok(out)
}

/// Parses a curve file. The `vars:` line names the three coordinates, which
/// are mapped in order to `x, y, z`.
pub fn parse_curve(src: &str) -> Result<SpaceCurve> {
    let es = entries(src)?;
    let mut names: Vec<String> = SPACE_VARS.iter().map(|s| s.to_string()).collect();
    let mut gens: BTreeMap<usize, MPoly> = BTreeMap::new();
    for e in &es {
        if e.label == "vars" {
            let vs: Vec<String> = e.text.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
            if vs.len() != 3 {
                let (line, column) = e.locate(0);
                return Err(Error::Parse { line, column, message: "expected three variable names".into() });
            }
            names = vs;
        } else if let Some(k) = e.label.strip_prefix('F').and_then(|n| n.parse::<usize>().ok()) {
            let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let p = parse_poly(&e.text, &refs).map_err(|err| e.remap(err))?;
            gens.insert(k, p.renamed(&SPACE_VARS));
        } else {
            let (line, _) = e.locate(0);
            return Err(Error::Parse { line, column: 1, message: format!("unknown entry `{}`", e.label) });
        }
    }
    if gens.len() < 2 {
        return Err(Error::TooFewGenerators(gens.len()));
    }
    SpaceCurve::new(&gens.into_values().collect::<Vec<_>>())
}

pub fn read_curve(path: &Path) -> Result<SpaceCurve> {
    parse_curve(&std::fs::read_to_string(path)?)
}

/// Renders a curve in the file format.
pub fn write_curve(curve: &SpaceCurve) -> String {
    let mut s = String::from("vars: x, y, z\n");
    for (i, g) in curve.generators().iter().enumerate() {
        s.push_str(&format!("F{}: {}\n", i + 1, g));
    }
    s
}

/// Raw contents of a parametrization file, keyed by label (`p1`, `p2`,
/// `p3`, `q`).
#[derive(Clone, Debug, Default)]
pub struct ParamFile {
    pub entries: BTreeMap<String, UPoly<Rat>>,
}

impl ParamFile {
    pub fn get(&self, label: &str) -> Option<&UPoly<Rat>> {
        self.entries.get(label)
    }
}

pub fn parse_param(src: &str) -> Result<ParamFile> {
    let mut out = ParamFile::default();
    for e in entries(src)? {
        if !matches!(e.label.as_str(), "p1" | "p2" | "p3" | "q") {
            let (line, _) = e.locate(0);
            return Err(Error::Parse { line, column: 1, message: format!("unknown entry `{}`", e.label) });
        }
        let p = parse_poly(&e.text, &["t"]).map_err(|err| e.remap(err))?.to_upoly(0)?;
        out.entries.insert(e.label.clone(), p);
    }
    if !out.entries.contains_key("q") {
        return Err(Error::Parse { line: 1, column: 1, message: "missing `q:` entry".into() });
    }
    Ok(out)
}

pub fn read_param(path: &Path) -> Result<ParamFile> {
    parse_param(&std::fs::read_to_string(path)?)
}

pub fn write_param(labels: &[(&str, &UPoly<Rat>)]) -> String {
    labels.iter().map(|(l, p)| format!("{l}: {p}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_with_continuation_and_comments() {
        let src = "# twisted\nvars: x, y, z\nF1: y - x^2\nF2: z\n    - x^3  # tail\n";
        let c = parse_curve(src).unwrap();
        assert_eq!(c.generators().len(), 2);
        assert_eq!(c.generators()[1], parse_poly("z - x^3", &SPACE_VARS).unwrap());
    }

    #[test]
    fn renamed_variables_map_to_xyz() {
        let c = parse_curve("vars: a, b, c\nF1: a - b\nF2: c").unwrap();
        assert_eq!(c.generators()[0], parse_poly("x - y", &SPACE_VARS).unwrap());
    }

    #[test]
    fn parse_error_positions() {
        match parse_curve("vars: x, y, z\nF1: x + y\nF2: x + $z") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 9)),
            other => panic!("{other:?}"),
        }
        match parse_curve("vars: x, y, z\nF1: x + y\nF2: z +\n  ?") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (4, 3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn param_roundtrip() {
        let src = "p1: 1 - t^2\np2: 2*t\nq: 1 + t^2\n";
        let p = parse_param(src).unwrap();
        let again = parse_param(&write_param(&[("p1", p.get("p1").unwrap()), ("p2", p.get("p2").unwrap()), ("q", p.get("q").unwrap())])).unwrap();
        assert_eq!(again.get("q"), p.get("q"));
        assert!(parse_param("p1: t\n").is_err());
    }
}
