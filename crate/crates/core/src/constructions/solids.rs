//! Regular polygons, Platonic solids and doubled configurations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactnum::{int, rat, OrderedScalar, QuadExt, Rational, Scalar};
use crate::geometry::{Point, PointConfig, ScalarField};
use crate::sphere::{concyclic_gap_config, hemisphere_witness, SphereConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Solid {
    Tetrahedron,
    Octahedron,
    Cube,
    Icosahedron,
    Dodecahedron,
}

impl Solid {
    pub const ALL: [Solid; 5] = [
        Solid::Tetrahedron,
        Solid::Octahedron,
        Solid::Cube,
        Solid::Icosahedron,
        Solid::Dodecahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Solid::Tetrahedron => "tetrahedron",
            Solid::Octahedron => "octahedron",
            Solid::Cube => "cube",
            Solid::Icosahedron => "icosahedron",
            Solid::Dodecahedron => "dodecahedron",
        }
    }
}

impl fmt::Display for Solid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Solid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Solid::ALL
            .into_iter()
            .find(|x| x.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidParameter(format!("unknown solid {s:?}")))
    }
}

fn signs<F: Scalar>(v: [F; 3], mask: [bool; 3]) -> Vec<Vec<F>> {
    let mut out = vec![v.to_vec()];
    for k in 0..3 {
        if !mask[k] {
            continue;
        }
        let mut more = Vec::new();
        for p in &out {
            let mut q = p.clone();
            q[k] = q[k].negated();
            more.push(q);
        }
        out.extend(more);
    }
    out
}

fn cyclic<F: Scalar>(pts: Vec<Vec<F>>) -> Vec<Vec<F>> {
    let mut out = Vec::new();
    for shift in 0..3 {
        for p in &pts {
            out.push((0..3).map(|k| p[(k + shift) % 3].clone()).collect());
        }
    }
    out
}

/// Vertices of a Platonic solid centred at the origin; coordinates are
/// rational except for the icosahedron and dodecahedron, which use ℚ(√5).
pub fn platonic(solid: Solid) -> SphereConfig {
    let r = |v: [i64; 3]| -> Point<Rational> { v.iter().map(|&x| int(x)).collect() };
    let rational = |pts: Vec<Point<Rational>>| {
        SphereConfig::Rational(PointConfig::sphere(ScalarField::Rational, pts).expect("regular solid"))
    };
    let phi = QuadExt::new(rat(1, 2), rat(1, 2), 5);
    let inv_phi = QuadExt::new(rat(-1, 2), rat(1, 2), 5);
    let q = |x: i64| QuadExt::rational(int(x));
    let quadratic = |pts: Vec<Point<QuadExt>>| {
        SphereConfig::Quadratic(PointConfig::sphere(ScalarField::Quadratic(5), pts).expect("regular solid"))
    };
    match solid {
        Solid::Tetrahedron => rational(vec![r([1, 1, 1]), r([1, -1, -1]), r([-1, 1, -1]), r([-1, -1, 1])]),
        Solid::Octahedron => rational(cyclic(signs([int(1), int(0), int(0)], [true, false, false]))),
        Solid::Cube => rational(signs([int(1), int(1), int(1)], [true; 3])),
        Solid::Icosahedron => quadratic(cyclic(signs([q(0), q(1), phi], [false, true, true]))),
        Solid::Dodecahedron => {
            let mut pts = signs([q(1), q(1), q(1)], [true; 3]);
            pts.extend(cyclic(signs([q(0), inv_phi, phi], [false, true, true])));
            quadratic(pts)
        }
    }
}

/// `S ∪ (−S)` for a spherical configuration inside an open hemisphere.
pub fn doubled<F: OrderedScalar>(s: &PointConfig<F>) -> Result<PointConfig<F>> {
    if !s.on_sphere() {
        return Err(Error::Hypothesis("configuration is not on a central sphere".into()));
    }
    if hemisphere_witness(s.points()).is_none() {
        return Err(Error::NotInHemisphere);
    }
    let mut pts = s.points().to_vec();
    pts.extend(s.points().iter().map(|p| p.iter().map(Scalar::negated).collect::<Vec<_>>()));
    PointConfig::sphere(s.field(), pts)
}

/// The regular `n`-gon in the plane with exact coordinates, for
/// `n ∈ {3, 4, 6, 8, 12}`.
pub fn concyclic_equal(n: usize) -> Result<PointConfig<QuadExt>> {
    let (d, c, s): (u64, QuadExt, QuadExt) = match n {
        3 | 6 | 12 => (3, QuadExt::new(rat(0, 1), rat(1, 2), 3), QuadExt::rational(rat(1, 2))),
        4 => (0, QuadExt::rational(int(0)), QuadExt::rational(int(1))),
        8 => (2, QuadExt::new(rat(0, 1), rat(1, 2), 2), QuadExt::new(rat(0, 1), rat(1, 2), 2)),
        _ => {
            return Err(Error::InvalidParameter(format!(
                "exact regular {n}-gon unsupported; n must be one of 3, 4, 6, 8, 12"
            )))
        }
    };
    // (c, s) is the unit step for n = 12, 4, 8; n = 3 and 6 take powers of the
    // 12th root.
    let step = match n {
        3 => 4,
        6 => 2,
        _ => 1,
    };
    let mut pts = Vec::with_capacity(n);
    let (mut x, mut y) = (QuadExt::rational(int(1)), QuadExt::rational(int(0)));
    let total = n * step;
    for i in 0..total {
        if i % step == 0 {
            pts.push(vec![x.clone(), y.clone()]);
        }
        let nx = x.times(&c).minus(&y.times(&s));
        y = x.times(&s).plus(&y.times(&c));
        x = nx;
    }
    let field = if d == 0 {
        ScalarField::Rational
    } else {
        ScalarField::Quadratic(d)
    };
    PointConfig::new(2, field, pts)
}

/// Equally spaced concyclic points on the sphere, in the cyclotomic frame.
pub fn concyclic_equal_sphere(n: usize) -> Result<SphereConfig> {
    concyclic_gap_config(n, n)
}
