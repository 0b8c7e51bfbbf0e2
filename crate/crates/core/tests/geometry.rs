use proptest::prelude::*;
use vantage_core::exactnum::{int, rat, Rational};
use vantage_core::geometry::{distinct_midpoints_1d, is_equally_spaced, ordering_from_vantage, PointConfig};

fn coord() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..6).prop_map(|(p, q)| rat(p, q))
}

fn subsets(universe: i64, size: usize) -> Vec<Vec<i64>> {
    fn go(start: i64, universe: i64, size: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for x in start..=universe {
            cur.push(x);
            go(x + 1, universe, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, universe, size, &mut Vec::new(), &mut out);
    out
}

#[test]
fn minimal_line_configurations_are_equally_spaced() {
    for n in 5..=7usize {
        for set in subsets(11, n) {
            let s = PointConfig::line(set.iter().map(|&x| int(x)).collect()).unwrap();
            if distinct_midpoints_1d(&s).unwrap() == 2 * n - 3 {
                assert!(is_equally_spaced(&s), "{set:?}");
            }
        }
    }
    // three points always have three midpoints
    let s = PointConfig::line([0, 1, 3].map(int).to_vec()).unwrap();
    assert_eq!(distinct_midpoints_1d(&s).unwrap(), 3);
    let s = PointConfig::line([1, 2, 4, 5].map(int).to_vec()).unwrap();
    assert_eq!(distinct_midpoints_1d(&s).unwrap(), 5);
    assert!(!is_equally_spaced(&s));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn similarity_invariance(
        pts in prop::collection::vec((coord(), coord()), 2..7),
        v in (coord(), coord()),
        lam in (1i64..30, 1i64..30),
        t in (coord(), coord()),
    ) {
        let Ok(s) = PointConfig::plane(pts.iter().map(|(x, y)| [x.clone(), y.clone()]).collect()) else {
            return Ok(());
        };
        let l = rat(lam.0, lam.1);
        let map = |x: &Rational, y: &Rational| [&l * x + &t.0, &l * y + &t.1];
        let moved = PointConfig::plane(pts.iter().map(|(x, y)| map(x, y)).collect()).unwrap();
        let before = ordering_from_vantage(&s, &[v.0.clone(), v.1.clone()]).unwrap();
        let after = ordering_from_vantage(&moved, &map(&v.0, &v.1)).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn midpoint_count_bounds(vals in prop::collection::btree_set(-60i64..60, 2..10)) {
        let n = vals.len();
        let s = PointConfig::line(vals.iter().map(|&x| int(x)).collect()).unwrap();
        let k = distinct_midpoints_1d(&s).unwrap() + 1;
        prop_assert!(2 * n - 2 <= k && k <= (n * n - n + 2) / 2);
    }
}
