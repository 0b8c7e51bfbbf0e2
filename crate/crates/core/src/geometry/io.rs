//! Text format: a header line `dim=<1|2|3> field=<Q|Q(sqrtD)> sphere=<0|1>`
//! followed by one point per line, coordinates separated by whitespace.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use super::{PointConfig, ScalarField};
use crate::error::{Error, Result};
use crate::exactnum::{is_square_free, parse_rational, QuadExt, Rational};

/// A configuration read from text, over whichever field its header names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyConfig {
    Rational(PointConfig<Rational>),
    Quadratic(PointConfig<QuadExt>),
}

impl AnyConfig {
    pub fn dim(&self) -> usize {
        match self {
            AnyConfig::Rational(c) => c.dim(),
            AnyConfig::Quadratic(c) => c.dim(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AnyConfig::Rational(c) => c.len(),
            AnyConfig::Quadratic(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn on_sphere(&self) -> bool {
        match self {
            AnyConfig::Rational(c) => c.on_sphere(),
            AnyConfig::Quadratic(c) => c.on_sphere(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            AnyConfig::Rational(c) => c.to_text(),
            AnyConfig::Quadratic(c) => c.to_text(),
        }
    }

    /// The configuration over ℚ(√D), converting a rational one.
    pub fn into_quadratic(self) -> PointConfig<QuadExt> {
        match self {
            AnyConfig::Quadratic(c) => c,
            AnyConfig::Rational(c) => c
                .map_coords(ScalarField::Quadratic(0), |x| QuadExt::rational(x.clone()))
                .expect("conversion keeps validity"),
        }
    }
}

fn header(dim: usize, field: ScalarField, sphere: bool) -> String {
    format!("dim={dim} field={field} sphere={}\n", sphere as u8)
}

impl PointConfig<Rational> {
    pub fn to_text(&self) -> String {
        let mut out = header(self.dim, ScalarField::Rational, self.on_sphere);
        for p in &self.points {
            let row: Vec<String> = p.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }
}

impl PointConfig<QuadExt> {
    pub fn to_text(&self) -> String {
        let field = match self.field {
            ScalarField::Quadratic(d) if d >= 2 => ScalarField::Quadratic(d),
            _ => {
                let d = self
                    .points
                    .iter()
                    .flatten()
                    .map(QuadExt::radicand)
                    .find(|&d| d != 0);
                d.map_or(ScalarField::Rational, ScalarField::Quadratic)
            }
        };
        let mut out = header(self.dim, field, self.on_sphere);
        for p in &self.points {
            let row: Vec<String> = p.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }
}

fn parse_field(v: &str) -> Result<ScalarField> {
    if v == "Q" {
        return Ok(ScalarField::Rational);
    }
    let inner = v
        .strip_prefix("Q(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("unknown field `{v}`")))?;
    let d = inner
        .strip_prefix("sqrt")
        .or_else(|| inner.strip_prefix('√'))
        .ok_or_else(|| Error::Parse(format!("unknown field `{v}`")))?;
    let d: u64 = d
        .parse()
        .map_err(|_| Error::Parse(format!("bad radicand in `{v}`")))?;
    if d < 2 || !is_square_free(d) {
        return Err(Error::Parse(format!("radicand {d} is not square-free")));
    }
    Ok(ScalarField::Quadratic(d))
}

/// Reads the text format.
pub fn parse_config(text: &str) -> Result<AnyConfig> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, head) = lines
        .next()
        .ok_or_else(|| Error::Parse("missing header line".into()))?;
    let (mut dim, mut field, mut sphere) = (None, ScalarField::Rational, false);
    for tok in head.split_whitespace() {
        let (k, v) = tok
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad header token `{tok}`")))?;
        match k {
            "dim" => {
                dim = Some(
                    v.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad dimension `{v}`")))?,
                )
            }
            "field" => field = parse_field(v)?,
            "sphere" => {
                sphere = match v {
                    "0" => false,
                    "1" => true,
                    _ => return Err(Error::Parse(format!("bad sphere flag `{v}`"))),
                }
            }
            _ => return Err(Error::Parse(format!("unknown header key `{k}`"))),
        }
    }
    let dim = dim.ok_or_else(|| Error::Parse("header lacks dim=".into()))?;
    if sphere && dim != 3 {
        return Err(Error::Parse("sphere=1 requires dim=3".into()));
    }
    let rows: Vec<(usize, Vec<&str>)> = lines
        .map(|(n, l)| (n, l.split_whitespace().collect()))
        .collect();
    for (n, r) in &rows {
        if r.len() != dim {
            return Err(Error::Parse(format!(
                "line {n}: expected {dim} coordinates, found {}",
                r.len()
            )));
        }
    }
    match field {
        ScalarField::Rational => {
            let pts = rows
                .iter()
                .map(|(_, r)| r.iter().map(|t| parse_rational(t)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let c = if sphere {
                PointConfig::sphere(field, pts)?
            } else {
                PointConfig::ordered(dim, field, pts)?
            };
            Ok(AnyConfig::Rational(c))
        }
        ScalarField::Quadratic(d) => {
            let mut pts = Vec::with_capacity(rows.len());
            for (n, r) in &rows {
                let mut p = Vec::with_capacity(dim);
                for t in r {
                    let q: QuadExt = t.parse()?;
                    if q.radicand() != 0 && q.radicand() != d {
                        return Err(Error::FieldMismatch(format!(
                            "line {n}: √{} in a Q(sqrt{d}) configuration",
                            q.radicand()
                        )));
                    }
                    p.push(q);
                }
                pts.push(p);
            }
            let c = if sphere {
                PointConfig::sphere(field, pts)?
            } else {
                PointConfig::ordered(dim, field, pts)?
            };
            Ok(AnyConfig::Quadratic(c))
        }
        ScalarField::Cyclotomic(_) => unreachable!("not produced by the parser"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn rational_round_trip() {
        let text = "dim=2 field=Q sphere=0\n0 0\n3/2 -1\n7 1/3\n";
        let c = parse_config(text).unwrap();
        assert_eq!(c.to_text(), text);
        match &c {
            AnyConfig::Rational(p) => assert_eq!(p.point(1)[0], rat(3, 2)),
            _ => panic!("expected rational"),
        }
    }

    #[test]
    fn quadratic_round_trip_and_comments() {
        let text = "# golden\ndim=3 field=Q(sqrt5) sphere=1\n\n0 1 1/2+1/2√5\n0 -1 1/2+1/2√5\n";
        let c = parse_config(text).unwrap();
        let out = c.to_text();
        assert_eq!(out, "dim=3 field=Q(sqrt5) sphere=1\n0 1 1/2+1/2√5\n0 -1 1/2+1/2√5\n");
        assert_eq!(parse_config(&out).unwrap(), c);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_config("").is_err());
        assert!(parse_config("dim=2 field=Q sphere=0\n1 2 3\n").is_err());
        assert!(parse_config("dim=2 field=Q(sqrt4) sphere=0\n").is_err());
        assert!(parse_config("dim=2 field=Q sphere=1\n").is_err());
        assert!(parse_config("dim=1 field=Q(sqrt5) sphere=0\n1+√3\n").is_err());
        assert!(parse_config("dim=1 field=Q sphere=0\n1\n1\n").is_err());
        assert!(parse_config("dim=3 field=Q sphere=1\n1 0 0\n0 0 2\n").is_err());
        assert!(parse_config("dims=1\n").is_err());
    }
}
