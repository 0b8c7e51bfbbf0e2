//! Plain-text and CSV renderings of the formula tables.

use super::{
    collinear_two_vantage_bound, max_orderings, min_orderings, sphere_max, sphere_min, velo_bound,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Csv,
}

fn render(title: &str, rows: &[Vec<String>], format: TableFormat) -> String {
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            for r in rows {
                out.push_str(&r.join(","));
                out.push('\n');
            }
        }
        TableFormat::Text => {
            out.push_str(title);
            out.push('\n');
            let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
            let widths: Vec<usize> = (0..cols)
                .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
                .collect();
            for r in rows {
                let cells: Vec<String> = r
                    .iter()
                    .enumerate()
                    .map(|(c, s)| format!("{:>w$}", s, w = widths[c]))
                    .collect();
                out.push_str(cells.join("  ").trim_end());
                out.push('\n');
            }
        }
    }
    out
}

fn row(label: &str, vals: impl IntoIterator<Item = String>) -> Vec<String> {
    std::iter::once(label.to_string()).chain(vals).collect()
}

/// Planar extremes (n = 3..8), spherical extremes (n = 4, 6, 8, 12, 20) and
/// the two-vantage collinear bounds (n = 2..10).
pub fn render_tables(format: TableFormat) -> String {
    let planar: Vec<u64> = (3..=8).collect();
    let plane = vec![
        row("n", planar.iter().map(|n| n.to_string())),
        row("Min", planar.iter().map(|&n| min_orderings(n).expect("n ≥ 2").to_string())),
        row("Max", planar.iter().map(|&n| max_orderings(n, 2).to_string())),
    ];
    let sizes = [4u64, 6, 8, 12, 20];
    let sphere = vec![
        row("n", sizes.iter().map(|n| n.to_string())),
        row("Min", sizes.iter().map(|&n| sphere_min(n).expect("n ≥ 4").to_string())),
        row("Max", sizes.iter().map(|&n| sphere_max(n).to_string())),
    ];
    let line: Vec<u64> = (2..=10).collect();
    let two = vec![
        row("n", line.iter().map(|n| n.to_string())),
        row("2^(n-1)", line.iter().map(|&n| collinear_two_vantage_bound(n).to_string())),
        row("c_n", line.iter().map(|&n| velo_bound(n).to_string())),
    ];
    let mut out = String::new();
    out.push_str(&render("planar orderings, one vantage point", &plane, format));
    out.push('\n');
    out.push_str(&render("spherical orderings", &sphere, format));
    out.push('\n');
    out.push_str(&render("collinear points, two vantage points (bounds)", &two, format));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_tables_contain_known_rows() {
        let t = render_tables(TableFormat::Text);
        let rows: Vec<String> = t
            .lines()
            .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
            .collect();
        for want in [
            "Max 6 18 46 101 197 351",
            "Max 24 172 646 3852 33632",
            "c_n 2 4 8 16 30 54 94 160 268",
        ] {
            assert!(rows.iter().any(|r| r == want), "{want} missing from\n{t}");
        }
        let c = render_tables(TableFormat::Csv);
        assert!(c.contains("Min,4,6,8,10,12,14"));
    }
}
