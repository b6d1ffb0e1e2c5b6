//! Point-set text format.
//!
//! ```text
//! dual
//! 1/2 0 3 4
//! -1 2/3 0 0
//! ```
//!
//! The first non-blank line is the plane tag (`dual`, `double` or `real`);
//! each following line holds one point as whitespace-separated rationals, four
//! per point for `dual`/`double` and two for `real`. Blank lines and lines
//! starting with `#` are ignored. Duplicate points are collapsed.

use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::Path;

use crate::error::{Error, Result};
use crate::point::{AnyPointSet, Plane, PlanePoint, PointSet};
use crate::rational::Rational;

fn parse_points<'a, P: PlanePoint>(
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<PointSet<P>> {
    let arity = P::PLANE.arity();
    let mut pts = Vec::new();
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        if fields.len() != arity {
            return Err(Error::Parse {
                line,
                message: format!(
                    "expected {arity} coordinates for a {} point, found {}",
                    P::PLANE,
                    fields.len()
                ),
            });
        }
        let coords = fields
            .iter()
            .map(|f| {
                f.parse::<Rational>().map_err(|_| Error::Parse {
                    line,
                    message: format!("malformed rational `{f}`"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        pts.push(P::from_coords(coords).expect("arity checked"));
    }
    Ok(PointSet::new(pts))
}

pub fn parse_pointset(text: &str) -> Result<AnyPointSet> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let Some((header_line, header)) = lines.next() else {
        return Err(Error::Parse {
            line: 1,
            message: "missing plane tag".into(),
        });
    };
    let plane: Plane = header.parse().map_err(|_| Error::Parse {
        line: header_line,
        message: format!("unknown plane tag `{header}` (expected dual, double or real)"),
    })?;
    Ok(match plane {
        Plane::Dual => AnyPointSet::Dual(parse_points(lines)?),
        Plane::Double => AnyPointSet::Double(parse_points(lines)?),
        Plane::Real => AnyPointSet::Real(parse_points(lines)?),
    })
}

fn serialize_points<P: PlanePoint>(set: &PointSet<P>) -> String {
    let mut out = String::new();
    out.push_str(P::PLANE.tag());
    out.push('\n');
    for p in set {
        let coords: Vec<String> = p.coords().iter().map(|c| c.to_string()).collect();
        writeln!(out, "{}", coords.join(" ")).expect("writing to a String");
    }
    out
}

pub fn serialize_pointset(set: &AnyPointSet) -> String {
    match set {
        AnyPointSet::Dual(s) => serialize_points(s),
        AnyPointSet::Double(s) => serialize_points(s),
        AnyPointSet::Real(s) => serialize_points(s),
    }
}

/// Reads a point-set file; `-` reads standard input.
pub fn read_pointset_file(path: impl AsRef<Path>) -> Result<AnyPointSet> {
    let path = path.as_ref();
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path)?
    };
    parse_pointset(&text)
}
