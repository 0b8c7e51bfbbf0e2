//! The end-to-end acceptance suite: ten criteria, each a list of exact checks
//! with a wall-clock limit.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement2d::{a_s, Line};
use crate::constructions::{
    circle_gadget, collinear_embedding, doubled, equally_spaced_line, free_config, free_sum_once, gap_config_1d,
    near_max_config, parallel_lines_gadget, platonic, trapezoid_gadget, FreeSpace, Solid,
};
use crate::error::Result;
use crate::exactnum::{int, rat, Rational};
use crate::formulas::{
    circle_gadget_count, collinear_two_vantage_bound, doubled_census, fibonacci, free_sum_increment,
    max_orderings, parallel_gadget_count, planar_max_poly, sphere_doubled_count, sphere_max, velo_bound,
};
use crate::geometry::{
    bisector_line_weighted, ordering_from_vantage, ordering_weighted, weighted_transform, PointConfig,
    PointOrdering, Weights,
};
use crate::par::Exec;
use crate::search::{coverage_report, reverify, search_achievable, SearchParams, Strategy};
use crate::sphere::{
    count_sphere, in_open_hemisphere, plane_to_sphere_count, rectangle_witness, sphere_min, sphere_regions,
    stereographic_lift,
};
use crate::twovantage::{
    classify_tie_1d, cmp_1d, collinear_checks, ordering_two_vantage, reduce_to_single_1d,
    sample_two_vantage_orderings, SamplerSpec, TieKind, VantagePair,
};

pub const CRITERIA: [(u8, &str, u64); 10] = [
    (1, "maximum formulas", 1),
    (2, "free witnesses", 30),
    (3, "minimum", 60),
    (4, "1-D gap filling", 10),
    (5, "free-sum lemma", 120),
    (6, "gadgets", 300),
    (7, "sphere", 300),
    (8, "achievability search", 900),
    (9, "two vantage points", 1800),
    (10, "weighted preferences", 10),
];

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.elapsed <= self.limit
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {:<22} {}  {} checks  {:.2}s / {}s",
            self.id,
            self.title,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        )?;
        if self.elapsed > self.limit {
            write!(f, "  time limit exceeded")?;
        }
        for m in &self.failures {
            write!(f, "\n    {m}")?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Checks {
    count: usize,
    failures: Vec<String>,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.count += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, got: T, want: T, label: impl fmt::Display) {
        self.count += 1;
        if got != want {
            self.failures.push(format!("{label}: got {got:?}, expected {want:?}"));
        }
    }
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn regions(c: &PointConfig<Rational>) -> BigInt {
    big(a_s(c).regions_total)
}

/// Runs one criterion.
pub fn run_criterion(id: u8, exec: Exec) -> Option<CriterionReport> {
    let &(_, title, limit) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let mut c = Checks::default();
    let body: fn(&mut Checks, Exec) -> Result<()> = match id {
        1 => c1,
        2 => c2,
        3 => c3,
        4 => c4,
        5 => c5,
        6 => c6,
        7 => c7,
        8 => c8,
        9 => c9,
        _ => c10,
    };
    if let Err(e) = body(&mut c, exec) {
        c.failures.push(format!("aborted: {e}"));
    }
    Some(CriterionReport {
        id,
        title,
        checks: c.count,
        failures: c.failures,
        elapsed: start.elapsed(),
        limit: Duration::from_secs(limit),
    })
}

/// Runs every criterion in order.
pub fn run_all(exec: Exec) -> Vec<CriterionReport> {
    CRITERIA.iter().filter_map(|c| run_criterion(c.0, exec)).collect()
}

fn c1(c: &mut Checks, _: Exec) -> Result<()> {
    for (n, m) in [(3, 6), (4, 18), (5, 46), (6, 101), (7, 197), (8, 351)] {
        c.eq(max_orderings(n, 2), big(m), format_args!("M({n},2)"));
    }
    for n in 1..=30 {
        c.eq(planar_max_poly(n), max_orderings(n, 2), format_args!("polynomial at n={n}"));
    }
    Ok(())
}

fn c2(c: &mut Checks, _: Exec) -> Result<()> {
    for n in 3..=7 {
        let s = free_config(n, n as u64, FreeSpace::Plane)?;
        c.eq(regions(&s), max_orderings(n as u64, 2), format_args!("free n={n}"));
    }
    Ok(())
}

fn c3(c: &mut Checks, _: Exec) -> Result<()> {
    for n in 2..=12 {
        let s = collinear_embedding(&equally_spaced_line(n)?, n as u64)?;
        c.eq(regions(&s), big(2 * n as u64 - 2), format_args!("equally spaced n={n}"));
    }
    let s = collinear_embedding(&PointConfig::from_ints(1, &[&[1], &[2], &[4], &[5]])?, 0)?;
    c.eq(regions(&s), big(6), "{1,2,4,5}");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut done = 0;
    while done < 500 {
        let n = rng.gen_range(3..=7);
        let pts: Vec<[Rational; 2]> = (0..n)
            .map(|_| [int(rng.gen_range(-6..=6)), int(rng.gen_range(-6..=6))])
            .collect();
        let Ok(s) = PointConfig::plane(pts) else { continue };
        if crate::twovantage::line_positions(&s).is_some() {
            continue;
        }
        let k = a_s(&s).regions_total;
        c.check(k > 2 * n as u64 - 2, || format!("non-collinear {:?} counts {k}", s.points()));
        done += 1;
    }
    Ok(())
}

fn c4(c: &mut Checks, _: Exec) -> Result<()> {
    for n in 6..=10usize {
        for k in 2 * n - 2..=(n * n - n + 2) / 2 {
            let s = gap_config_1d(n, k)?;
            // independent oracle: distinct pairwise sums of the integer positions
            let v: Vec<BigInt> = s.points().iter().map(|p| p[0].to_integer()).collect();
            let mut sums = std::collections::HashSet::new();
            for i in 0..v.len() {
                for j in 0..i {
                    sums.insert(&v[i] + &v[j]);
                }
            }
            c.eq(sums.len() + 1, k, format_args!("gap n={n} k={k}"));
            c.eq(s.len(), n, format_args!("gap size n={n} k={k}"));
        }
    }
    Ok(())
}

fn c5(c: &mut Checks, exec: Exec) -> Result<()> {
    let results = exec.map_range(0..100, |i| -> Result<(usize, usize, BigInt, BigInt)> {
        let mut rng = ChaCha8Rng::seed_from_u64(500 + i as u64);
        let (s, t) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let a = free_config(s, rng.gen(), FreeSpace::Plane)?;
        let b = free_config(t, rng.gen(), FreeSpace::Plane)?;
        let u = free_sum_once(&a, &b, rng.gen())?;
        let want = regions(&a) + regions(&b) + free_sum_increment(s as u64, t as u64);
        Ok((s, t, regions(&u), want))
    });
    for (i, r) in results.into_iter().enumerate() {
        let (s, t, got, want) = r?;
        c.eq(got, want, format_args!("free pair #{i} (s={s}, t={t})"));
    }
    for n in 2..=12u64 {
        for k in 1..n {
            let lhs = max_orderings(k, 2) + max_orderings(n - k, 2) + free_sum_increment(k, n - k);
            c.eq(lhs, max_orderings(n, 2), format_args!("M({k})+M({})+g at n={n}", n - k));
        }
    }
    Ok(())
}

fn c6(c: &mut Checks, exec: Exec) -> Result<()> {
    for k in 2..=4u64 {
        let g = trapezoid_gadget(k as usize, k)?;
        c.eq(regions(&g), max_orderings(2 * k, 2) - k + 1, format_args!("trapezoid k={k}"));
    }
    // below n = 4 the top range would need 5 regions from a triangle
    let cases: Vec<(usize, usize)> = (4..=10).flat_map(|n| (0..=n / 2).map(move |k| (n, k))).collect();
    let got = exec.map(&cases, |&(n, k)| near_max_config(n, k, (n * 31 + k) as u64).map(|s| regions(&s)));
    for (&(n, k), r) in cases.iter().zip(got) {
        c.eq(r?, max_orderings(n as u64, 2) - k, format_args!("M(n)-k n={n} k={k}"));
    }
    for k in 2..=3 {
        for l in 1..=2 {
            for m in 0..=3 {
                let s = parallel_lines_gadget(m, k, l, 17)?;
                let (poly, closed) = parallel_gadget_count(m as u64, k as u64, l as u64)?;
                let got = regions(&s);
                c.eq(&got, &poly, format_args!("parallel lines m={m} k={k} l={l}, polynomial"));
                c.eq(&got, &closed, format_args!("parallel lines m={m} k={k} l={l}, closed form"));
            }
        }
    }
    for n in 2..=7u64 {
        for k in 2..=n {
            let s = circle_gadget(n as usize, k as usize, 3)?;
            let want = max_orderings(n, 2) - max_orderings(k, 2) + k * (k - 1);
            c.eq(regions(&s), want.clone(), format_args!("circle n={n} k={k}"));
            c.eq(circle_gadget_count(n, k), want, format_args!("circle formula n={n} k={k}"));
        }
    }
    Ok(())
}

fn c7(c: &mut Checks, exec: Exec) -> Result<()> {
    let even = |c: &mut Checks, k: u64, what: &str| c.check(k % 2 == 0, || format!("odd count {k} for {what}"));
    for (s, want) in Solid::ALL.into_iter().zip([24, 48, 96, 240, 240]) {
        let k = platonic(s).regions(exec).regions_total;
        c.eq(k, want, format_args!("{s}"));
        even(c, k, s.name());
    }
    for (n, m) in [(4, 24), (6, 172), (8, 646), (12, 3852), (20, 33632)] {
        c.eq(sphere_max(n), big(m), format_args!("sphere max n={n}"));
    }
    for n in 2..=5 {
        let s = free_config(n, 70 + n as u64, FreeSpace::Sphere)?;
        let k = count_sphere(&s)?.regions_total;
        c.eq(big(k), sphere_max(n as u64), format_args!("free sphere n={n}"));
        even(c, k, "free sphere");
    }
    for n in 3..=5u64 {
        let s = free_config(n as usize, 80 + n, FreeSpace::Sphere)?;
        let d = doubled(&s)?;
        let sum = sphere_regions(d.points(), exec);
        let (v4, v6, v8) = doubled_census(n);
        c.eq(big(sum.regions_total), sphere_doubled_count(n), format_args!("doubled n={n}"));
        c.eq(big(sum.vertices_of_degree(4) as u64), v4, format_args!("doubled n={n} v4"));
        c.eq(big(sum.vertices_of_degree(6) as u64), v6, format_args!("doubled n={n} v6"));
        c.eq(big(sum.vertices_of_degree(8) as u64), v8, format_args!("doubled n={n} v8"));
        even(c, sum.regions_total, "doubled");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut done = 0;
    let south = [int(0), int(0), int(-1)];
    while done < 50 {
        let n = rng.gen_range(3..=6);
        let pts: Vec<[Rational; 2]> = (0..n)
            .map(|_| [0, 1].map(|_| int(rng.gen_range(-4096..=4096))))
            .collect();
        let Ok(s) = PointConfig::plane(pts) else { continue };
        let Ok(expected) = plane_to_sphere_count(&s) else { continue };
        let lifted = stereographic_lift(&s)?;
        c.check(in_open_hemisphere(lifted.points(), &south), || "lift left the hemisphere".into());
        let k = count_sphere(&lifted)?.regions_total;
        c.eq(k, expected, format_args!("u+2b for {:?}", s.points()));
        even(c, k, "lifted configuration");
        done += 1;
    }
    for n in 4..=8 {
        let (k, w) = sphere_min(n)?;
        c.eq(k, 2 * n as u64, format_args!("sphere min n={n}"));
        c.eq(w.regions(exec).regions_total, 2 * n as u64, format_args!("sphere min witness n={n}"));
        c.eq(w.len(), n, format_args!("sphere min witness size n={n}"));
    }
    let r = count_sphere(&rectangle_witness())?.regions_total;
    c.eq(r, 8, "rectangle");
    Ok(())
}

fn c8(c: &mut Checks, exec: Exec) -> Result<()> {
    let params = SearchParams::default();
    let budget = 100_000;
    let r3 = search_achievable(3, budget, 1, Strategy::Mixed, &params, exec)?;
    c.eq(r3.achieved.keys().copied().collect::<Vec<_>>(), vec![4, 6], "n=3 achieved");
    let r4 = search_achievable(4, budget, 1, Strategy::Mixed, &params, exec)?;
    let want: Vec<u64> = (6..=18).filter(|k| ![9, 11, 13, 14, 15].contains(k)).collect();
    c.eq(r4.achieved.keys().copied().collect::<Vec<_>>(), want, "n=4 achieved");
    let r5 = search_achievable(5, budget, 1, Strategy::Mixed, &params, exec)?;
    match coverage_report(&r5) {
        Some(cov) => {
            c.eq((cov.min, cov.max), (8, 46), "n=5 extremes");
            c.check(cov.fraction >= 0.61, || format!("n=5 coverage {}", cov.percentage()));
        }
        None => c.check(false, || "n=5 found nothing".into()),
    }
    for r in [&r3, &r4, &r5] {
        let bad = reverify(r);
        c.check(bad.is_empty(), || format!("n={} witnesses fail to re-verify: {bad:?}", r.n));
    }
    Ok(())
}

fn c9(c: &mut Checks, exec: Exec) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut done = 0;
    while done < 10_000 {
        let n = rng.gen_range(2..=7);
        let mut v: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(-200..=200), rng.gen_range(1..=12))).collect();
        v.sort();
        v.dedup();
        let s = PointConfig::line(v)?;
        let vp = VantagePair::line(rat(rng.gen_range(-300..=300), 7), rat(rng.gen_range(-300..=300), 5));
        match reduce_to_single_1d(&s, &vp) {
            Ok(m) => {
                let single = ordering_from_vantage(&s, &[m])?;
                c.eq(single, ordering_two_vantage(&s, &vp)?, "1-D reduction");
                done += 1;
            }
            Err(crate::Error::TiesPresent) => {}
            Err(e) => return Err(e),
        }
    }
    let grid: Vec<Rational> = (0..=8).map(|k| rat(k, 2)).collect();
    for pi in &grid {
        for pj in grid.iter().filter(|p| *p != pi) {
            let s = PointConfig::line(vec![pi.clone(), pj.clone()])?;
            for v1 in &grid {
                for v2 in &grid {
                    let kind = classify_tie_1d(pi, pj, v1, v2);
                    let tied = !ordering_two_vantage(&s, &VantagePair::line(v1.clone(), v2.clone()))?.is_strict();
                    c.check(tied == (kind != TieKind::None), || format!("tie {pi} {pj} {v1} {v2}: {kind:?}"));
                    c.check(tied == (cmp_1d(pi, pj, v1, v2).is_eq()), || format!("sum tie {pi} {pj} {v1} {v2}"));
                }
            }
        }
    }
    for (n, b) in [(4, 8), (5, 16), (6, 30), (7, 54), (8, 94)] {
        let pts: Vec<[Rational; 2]> = (1..=n).map(|i| [int(i), int(0)]).collect();
        let s = PointConfig::plane(pts)?;
        let run = sample_two_vantage_orderings(&s, &SamplerSpec::default(), 1_000_000, 1, exec)?;
        c.eq(run.distinct(), b as usize, format_args!("b_{n}"));
        let rep = collinear_checks(&s, &run).expect("collinear");
        c.check(rep.violations.is_empty(), || format!("n={n}: {:?}", rep.violations));
        c.check(big(run.distinct() as u64) <= collinear_two_vantage_bound(n as u64), || format!("n={n} above 2^(n-1)"));
        c.check(big(run.distinct() as u64) <= velo_bound(n as u64), || format!("n={n} above c_n"));
    }
    for (n, b) in (2..=10u64).zip([2, 4, 8, 16, 30, 54, 94, 160, 268]) {
        let c_n = 2 * (fibonacci(n + 2) - n);
        c.eq(&c_n, &big(b), format_args!("c_{n}"));
        c.eq(velo_bound(n), c_n, format_args!("velo_bound({n})"));
    }
    Ok(())
}

fn c10(c: &mut Checks, _: Exec) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut r = |lo: i64, hi: i64, d: i64| rat(rng.gen_range(lo..=hi), d);
    let mut done = 0;
    while done < 1000 {
        let n = 2 + done % 5;
        let pts: Vec<[Rational; 2]> = (0..n).map(|_| [r(-30, 30, 3), r(-30, 30, 2)]).collect();
        let Ok(s) = PointConfig::plane(pts) else { continue };
        let w = Weights::new(vec![r(1, 9, 4), r(1, 9, 3)])?;
        let v = vec![r(-40, 40, 5), r(-40, 40, 7)];
        // weighted distances ranked directly
        let wv = w.values();
        let d: Vec<Rational> = s
            .points()
            .iter()
            .map(|p| (0..2).map(|k| &wv[k] * &wv[k] * (&p[k] - &v[k]) * (&p[k] - &v[k])).sum())
            .collect();
        let direct = PointOrdering::by_comparator(n, |i, j| d[i].cmp(&d[j]));
        c.eq(ordering_weighted(&s, &v, &w)?, direct.clone(), "weighted ordering");
        let t = weighted_transform(&s, &w)?;
        let tv: Vec<Rational> = (0..2).map(|k| &v[k] * &wv[k]).collect();
        c.eq(ordering_from_vantage(&t, &tv)?, direct, "transformed ordering");
        done += 1;
    }
    for _ in 0..300 {
        let p = vec![r(-20, 20, 1), r(-20, 20, 1)];
        let q = vec![r(-20, 20, 1), r(-20, 20, 1)];
        if p == q {
            continue;
        }
        let w = Weights::new(vec![r(1, 6, 1), r(1, 6, 1)])?;
        let wv = w.values().to_vec();
        let line = bisector_line_weighted(&p, &q, &w)?;
        // the ordinary bisector of the transformed pair, pulled back
        let tp: Vec<Rational> = (0..2).map(|k| &p[k] * &wv[k]).collect();
        let tq: Vec<Rational> = (0..2).map(|k| &q[k] * &wv[k]).collect();
        let b = Line::bisector(&tp, &tq);
        let (a0, b0, c0) = b.coefficients();
        let back = Line::new(a0 * &wv[0], b0 * &wv[1], c0.clone());
        c.eq(&line, &back, "weighted bisector");
        let mid: Vec<Rational> = (0..2).map(|k| (&p[k] + &q[k]) * rat(1, 2)).collect();
        c.check(line.contains(&mid), || "weighted bisector misses the midpoint".into());
        let (la, lb, _) = line.coefficients();
        let (dx, dy) = (&q[0] - &p[0], &q[1] - &p[1]);
        let perpendicular = la * &dy == lb * &dx;
        let axis = dx == int(0) || dy == int(0);
        if wv[0] != wv[1] && !axis {
            c.check(!perpendicular, || format!("weighted bisector of {p:?} {q:?} is perpendicular"));
        } else {
            c.check(perpendicular, || format!("bisector of {p:?} {q:?} should be perpendicular"));
        }
    }
    Ok(())
}
