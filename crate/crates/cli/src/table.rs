use clap::{Args, ValueEnum};
use serde_json::json;
use wreathgen::counting::{
    count_min_gensets, idempotents_txp_recurrence, rank_exp, size_exp, sum_wnk, wnk,
};
use wreathgen::BigCount;

use crate::{Format, Global, Outcome, UsageError};

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum TableId {
    /// w_nk, rows n, columns k.
    Wnk,
    /// Σ_k w_nk, one row over n.
    SumWnk,
    /// |E(T(X,P))|, rows m, columns n.
    IdempotentCounts,
    /// |S|, rows m, columns n.
    ExpSize,
    /// rank(S), rows m, columns n.
    Rank,
    /// Number of minimal idempotent generating sets, rows m, columns n.
    MinGensetCounts,
}

#[derive(Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    id: TableId,
    /// Inclusive row range, e.g. 0:5.
    #[arg(long, value_parser = parse_range)]
    rows: Option<(usize, usize)>,
    /// Inclusive column range, e.g. 1:10.
    #[arg(long, value_parser = parse_range)]
    cols: Option<(usize, usize)>,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected START:END, got {s:?}"))?;
    let a: usize = a.trim().parse().map_err(|e| format!("bad start {a:?}: {e}"))?;
    let b: usize = b.trim().parse().map_err(|e| format!("bad end {b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok((a, b))
}

struct Table {
    name: &'static str,
    row_label: &'static str,
    col_label: &'static str,
    rows: Vec<usize>,
    cols: Vec<usize>,
    /// `None` for cells outside the table's domain.
    cells: Vec<Vec<Option<BigCount>>>,
}

const GRID_LIMIT: usize = 64;

fn build(args: &TableArgs) -> Result<Table, UsageError> {
    let range = |r: Option<(usize, usize)>, default: (usize, usize)| {
        let (a, b) = r.unwrap_or(default);
        if b > GRID_LIMIT {
            return Err(UsageError(format!("range end {b} exceeds {GRID_LIMIT}")));
        }
        Ok((a..=b).collect::<Vec<_>>())
    };
    let grid = |name, row_label, col_label, rows: Vec<usize>, cols: Vec<usize>, f: &dyn Fn(usize, usize) -> Option<BigCount>| Table {
        name,
        row_label,
        col_label,
        cells: rows.iter().map(|&r| cols.iter().map(|&c| f(r, c)).collect()).collect(),
        rows,
        cols,
    };
    Ok(match args.id {
        TableId::Wnk => {
            let rows = range(args.rows, (0, 5))?;
            let widest = rows.iter().map(|&n| n * n.saturating_sub(1) / 2).max().unwrap_or(0);
            let cols = range(args.cols, (0, widest))?;
            grid("wnk", "n", "k", rows, cols, &|n, k| {
                (k <= n * n.saturating_sub(1) / 2).then(|| wnk(n, k))
            })
        }
        TableId::SumWnk => {
            if args.cols.is_some() {
                return Err(UsageError("sum-wnk has a single row; use --rows for n".into()));
            }
            let ns = range(args.rows, (0, 8))?;
            Table {
                name: "sum-wnk",
                row_label: "",
                col_label: "n",
                cells: vec![ns.iter().map(|&n| Some(sum_wnk(n))).collect()],
                rows: vec![0],
                cols: ns,
            }
        }
        TableId::IdempotentCounts => grid(
            "idempotent-counts",
            "m",
            "n",
            range(args.rows, (0, 5))?,
            range(args.cols, (0, 5))?,
            &|m, n| Some(idempotents_txp_recurrence(m, n)),
        ),
        TableId::ExpSize => grid(
            "exp-size",
            "m",
            "n",
            range(args.rows, (0, 5))?,
            range(args.cols, (0, 5))?,
            &|m, n| Some(size_exp(m, n).value),
        ),
        TableId::Rank => grid(
            "rank",
            "m",
            "n",
            range(args.rows, (1, 10))?,
            range(args.cols, (1, 10))?,
            &|m, n| Some(rank_exp(m, n).value),
        ),
        TableId::MinGensetCounts => grid(
            "min-genset-counts",
            "m",
            "n",
            range(args.rows, (1, 4))?,
            range(args.cols, (1, 4))?,
            &|m, n| Some(count_min_gensets(m, n).value),
        ),
    })
}

pub fn run(args: &TableArgs, g: Global) -> Result<Outcome, UsageError> {
    let t = build(args)?;
    let text = |c: &Option<BigCount>| c.as_ref().map(|v| v.to_string()).unwrap_or_default();
    match g.format {
        Format::Text => {
            let header: Vec<String> = std::iter::once(format!("{}\\{}", t.row_label, t.col_label))
                .chain(t.cols.iter().map(usize::to_string))
                .collect();
            let mut lines = vec![header];
            for (r, row) in t.rows.iter().zip(&t.cells) {
                let label = if t.row_label.is_empty() { String::new() } else { r.to_string() };
                lines.push(std::iter::once(label).chain(row.iter().map(text)).collect());
            }
            let widths: Vec<usize> = (0..lines[0].len())
                .map(|k| lines.iter().map(|l| l[k].len()).max().unwrap_or(0))
                .collect();
            for line in lines {
                let cells: Vec<String> = line
                    .iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s:>w$}"))
                    .collect();
                println!("{}", cells.join("  ").trim_end());
            }
        }
        Format::Csv => {
            let mut header = vec![format!("{}\\{}", t.row_label, t.col_label)];
            header.extend(t.cols.iter().map(usize::to_string));
            println!("{}", header.join(","));
            for (r, row) in t.rows.iter().zip(&t.cells) {
                let label = if t.row_label.is_empty() { String::new() } else { r.to_string() };
                let cells: Vec<String> = std::iter::once(label).chain(row.iter().map(text)).collect();
                println!("{}", cells.join(","));
            }
        }
        Format::Json => {
            let values: Vec<Vec<Option<String>>> = t
                .cells
                .iter()
                .map(|row| row.iter().map(|c| c.as_ref().map(|v| v.to_string())).collect())
                .collect();
            let doc = if t.row_label.is_empty() {
                json!({ "table": t.name, t.col_label: t.cols, "values": values[0] })
            } else {
                json!({
                    "table": t.name,
                    t.row_label: t.rows,
                    t.col_label: t.cols,
                    "values": values,
                })
            };
            println!("{doc}");
        }
    }
    Ok(Outcome::Success)
}
