//! Text output formats: tab-separated tables, JSON records with
//! arbitrary-precision values as strings, and OEIS b-files.

use num_bigint::BigInt;
use serde::Serialize;

/// One table cell as a JSON record; the value is an exact decimal string.
#[derive(Serialize)]
struct Cell {
    n: usize,
    h: i64,
    k: i64,
    value: String,
}

/// TSV table of A_n(k): header row `k\n  1 2 ... N`, then one row per k.
/// Lines end with LF.
pub fn table_tsv(rows: &[(i64, Vec<BigInt>)], n_values: &[usize]) -> String {
    let mut out = String::from("k\\n");
    for n in n_values {
        out.push('\t');
        out.push_str(&n.to_string());
    }
    out.push('\n');
    for (k, values) in rows {
        out.push_str(&k.to_string());
        for v in values {
            out.push('\t');
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

/// JSON array of {n, h, k, value} records in row-major order (h = 1
/// throughout, since the table tabulates A_n(k) = M_n(1,k)).
pub fn table_json(rows: &[(i64, Vec<BigInt>)], n_values: &[usize]) -> String {
    let cells: Vec<Cell> = rows
        .iter()
        .flat_map(|(k, values)| {
            n_values.iter().zip(values).map(|(&n, v)| Cell {
                n,
                h: 1,
                k: *k,
                value: v.to_string(),
            })
        })
        .collect();
    serde_json::to_string(&cells).expect("cells serialize")
}

/// OEIS b-file: one "index value" pair per line, LF endings.
pub fn bfile(start_index: i64, values: &[BigInt]) -> String {
    let mut out = String::new();
    for (offset, v) in values.iter().enumerate() {
        out.push_str(&(start_index + offset as i64).to_string());
        out.push(' ');
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}
