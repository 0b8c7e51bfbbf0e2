use std::cmp::Ordering;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vantage_core::constructions::{free_config, FreeSpace};
use vantage_core::exactnum::{int, rat, Rational};
use vantage_core::formulas::velo_bound;
use vantage_core::geometry::{ordering_from_vantage, PointConfig};
use vantage_core::par::Exec;
use vantage_core::twovantage::*;

fn line(v: &[i64]) -> PointConfig<Rational> {
    PointConfig::line(v.iter().map(|&x| int(x)).collect()).unwrap()
}

fn collinear(n: i64) -> PointConfig<Rational> {
    let pts: Vec<[Rational; 2]> = (1..=n).map(|i| [int(i), int(0)]).collect();
    PointConfig::plane(pts).unwrap()
}

#[test]
fn line_examples() {
    let s = line(&[0, 10]);
    let o = ordering_two_vantage(&s, &VantagePair::line(int(1), int(3))).unwrap();
    assert_eq!(o.ranks(), vec![0, 1]);
    assert!(o.is_strict());
    let tie = ordering_two_vantage(&line(&[0, 4]), &VantagePair::line(int(1), int(3))).unwrap();
    assert!(!tie.is_strict());
    assert_eq!(reduce_to_single_1d(&s, &VantagePair::line(int(1), int(3))).unwrap(), int(2));
    let s = line(&[2, 0, 10]);
    let vp = VantagePair::line(int(1), int(3));
    assert_eq!(ordering_two_vantage(&s, &vp).unwrap().ranks()[0], 0);
    assert_eq!(reduce_to_single_1d(&s, &vp).unwrap(), int(2));
    let vp = VantagePair::line(rat(7, 3), rat(7, 3));
    assert!(vp.is_degenerate());
    assert_eq!(reduce_to_single_1d(&line(&[0, 1, 5]), &vp).unwrap(), rat(7, 3));
    assert_eq!(
        reduce_to_single_1d(&line(&[0, 4]), &VantagePair::line(int(1), int(3))),
        Err(vantage_core::Error::TiesPresent)
    );
}

#[test]
fn tie_classification_is_complete_on_a_grid() {
    let grid: Vec<Rational> = (0..=8).map(|k| rat(k, 2)).collect();
    let mut seen = [0usize; 3];
    for pi in &grid {
        for pj in &grid {
            if pi == pj {
                continue;
            }
            let s = PointConfig::line(vec![pi.clone(), pj.clone()]).unwrap();
            for v1 in &grid {
                for v2 in &grid {
                    let kind = classify_tie_1d(pi, pj, v1, v2);
                    let vp = VantagePair::line(v1.clone(), v2.clone());
                    let tied = !ordering_two_vantage(&s, &vp).unwrap().is_strict();
                    assert_eq!(tied, kind != TieKind::None, "{pi} {pj} {v1} {v2}");
                    assert_eq!(tied, cmp_1d(pi, pj, v1, v2) == Ordering::Equal);
                    seen[kind as usize] += 1;
                }
            }
        }
    }
    assert!(seen.iter().all(|&c| c > 0));
}

#[test]
fn reduction_on_random_lines() {
    let mut r = ChaCha8Rng::seed_from_u64(55);
    let mut done = 0;
    while done < 10_000 {
        let n = r.gen_range(2..=7);
        let mut v: Vec<Rational> = (0..n).map(|_| rat(r.gen_range(-200..=200), r.gen_range(1..=12))).collect();
        v.sort();
        v.dedup();
        let s = PointConfig::line(v).unwrap();
        let vp = VantagePair::line(rat(r.gen_range(-300..=300), 7), rat(r.gen_range(-300..=300), 5));
        match reduce_to_single_1d(&s, &vp) {
            Ok(m) => {
                let single = ordering_from_vantage(&s, &[m]).unwrap();
                assert_eq!(single, ordering_two_vantage(&s, &vp).unwrap());
                done += 1;
            }
            Err(vantage_core::Error::TiesPresent) => {}
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn equally_spaced_collinear_counts() {
    let spec = SamplerSpec::default();
    for (n, b) in [(4, 8), (5, 16), (6, 30), (7, 54), (8, 94)] {
        let s = collinear(n);
        let run = sample_two_vantage_orderings(&s, &spec, 200_000, 7, Exec::Parallel).unwrap();
        assert_eq!(run.distinct(), b, "n={n}");
        let rep = collinear_checks(&s, &run).unwrap();
        assert!(rep.equally_spaced);
        assert!(rep.violations.is_empty(), "{:?}", rep.violations);
        assert_eq!(rep.velo_bound, BigInt::from(b));
    }
}

#[test]
fn free_triangle_gives_all_orderings() {
    let s = free_config(3, 4, FreeSpace::Plane).unwrap();
    let run = sample_two_vantage_orderings(&s, &SamplerSpec::default(), 20_000, 1, Exec::Parallel).unwrap();
    assert_eq!(run.distinct(), 6);
    assert!(collinear_checks(&s, &run).is_none());
}

#[test]
fn sampling_is_deterministic_and_monotone() {
    let s = collinear(7);
    let spec = SamplerSpec {
        resolution: 12,
        block: 500,
    };
    let small = sample_two_vantage_orderings(&s, &spec, 1_200, 3, Exec::Parallel).unwrap();
    let big = sample_two_vantage_orderings(&s, &spec, 6_000, 3, Exec::Parallel).unwrap();
    let seq = sample_two_vantage_orderings(&s, &spec, 6_000, 3, Exec::Sequential).unwrap();
    assert!(small.orderings.is_subset(&big.orderings));
    assert_eq!(big, seq);
}

#[test]
fn velo_words_are_counted_by_the_fibonacci_formula() {
    for n in 2..=14u64 {
        assert_eq!(BigInt::from(count_velo_valid(n as usize)), velo_bound(n), "n={n}");
    }
    let b: Vec<BigInt> = (2..=10).map(velo_bound).collect();
    let want = [2, 4, 8, 16, 30, 54, 94, 160, 268].map(BigInt::from);
    assert_eq!(b, want);
}

#[test]
fn updown_rejects_ties() {
    let o = ordering_two_vantage(&line(&[0, 4]), &VantagePair::line(int(1), int(3))).unwrap();
    assert!(updown(&o).is_err());
    let seq = updown(&vantage_core::geometry::PointOrdering::strict(vec![4, 3, 5, 6, 2, 1, 7, 8, 0])).unwrap();
    assert_eq!(seq.to_string(), "01100110");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coincident_vantage_is_single_vantage(seed in any::<u64>(), n in 2usize..7) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let pts: Vec<[Rational; 2]> = (0..n)
            .map(|_| [rat(r.gen_range(-50..=50), 3), rat(r.gen_range(-50..=50), 4)])
            .collect();
        if let Ok(s) = PointConfig::plane(pts) {
            let v = vec![rat(r.gen_range(-90..=90), 7), rat(r.gen_range(-90..=90), 5)];
            let vp = VantagePair::new(v.clone(), v.clone()).unwrap();
            prop_assert_eq!(ordering_two_vantage(&s, &vp).unwrap(), ordering_from_vantage(&s, &v).unwrap());
        }
    }

    #[test]
    fn collinear_orderings_are_contiguous(seed in any::<u64>(), n in 3usize..7) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let (dx, dy) = (r.gen_range(1..=5), r.gen_range(-5..=5));
        let mut ts: Vec<i64> = (0..n).map(|_| r.gen_range(-40..=40)).collect();
        ts.sort();
        ts.dedup();
        let pts: Vec<[Rational; 2]> = ts.iter().map(|&t| [int(3 + t * dx), int(-1 + t * dy)]).collect();
        let s = PointConfig::plane(pts).unwrap();
        let run = sample_two_vantage_orderings(&s, &SamplerSpec::default(), 3_000, seed, Exec::Parallel).unwrap();
        let rep = collinear_checks(&s, &run).unwrap();
        prop_assert!(rep.violations.is_empty(), "{:?}", rep.violations);
        prop_assert!(BigInt::from(run.distinct()) <= rep.contiguous_bound);
    }
}
