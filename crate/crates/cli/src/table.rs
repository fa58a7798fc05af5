use anyhow::Result;
use qcyclic::duadic::{find_splittings, is_prime, qr_splitting, DuadicPair};
use qcyclic::quantum::{extended_duadic_quantum, QuantumParams};
use serde::Serialize;

use crate::output::{csv_line, join, Report};
use crate::Format;

/// Lengths whose rows are exact within the default budget.
const FAST: [usize; 5] = [5, 7, 13, 17, 23];
/// Rows that need `--slow`; from n = 61 on the default budget leaves an interval.
const SLOW: [usize; 5] = [29, 37, 41, 53, 61];

#[derive(Serialize)]
struct Row {
    n: usize,
    leaders: Vec<usize>,
    #[serde(rename = "type")]
    kind: &'static str,
    params: QuantumParams,
}

impl Row {
    fn source(&self) -> String {
        let d = &self.params.d;
        if d.lo_src == d.hi_src {
            format!("extended duadic; {}", d.lo_src)
        } else {
            format!("extended duadic; {}/{}", d.lo_src, d.hi_src)
        }
    }
}

fn row(n: usize, budget: u64) -> Result<Row> {
    if is_prime(n) && (n % 8 == 5 || n % 8 == 7) {
        let s = qr_splitting(n)?;
        let leaders = s.s1().leaders();
        let b = extended_duadic_quantum(&DuadicPair::new(s)?, budget, &[])?;
        return Ok(Row { n, leaders, kind: "QR", params: b.params });
    }
    let mut best: Option<Row> = None;
    for s in find_splittings(n, Some(-2))? {
        let leaders = s.s1().leaders();
        let p = extended_duadic_quantum(&DuadicPair::new(s)?, budget, &[])?.params;
        let better = best.as_ref().is_none_or(|b| {
            let key = |p: &QuantumParams| (p.d.lo, std::cmp::Reverse(p.d.hi.unwrap_or(usize::MAX)));
            key(&p) > key(&b.params)
        });
        if better {
            best = Some(Row { n, leaders, kind: "D", params: p });
        }
    }
    best.ok_or_else(|| anyhow::anyhow!("no splitting of Z_{n} given by −2"))
}

pub fn table(budget: u64, max_n: usize, slow: bool) -> Result<Report> {
    let lengths = FAST.iter().chain(if slow { SLOW.iter() } else { [].iter() }).copied().filter(|&n| n <= max_n);
    let rows = lengths.map(|n| row(n, budget)).collect::<Result<Vec<_>>>()?;
    let mut csv = String::from("n,leaders,type,params,source\n");
    let mut text = String::new();
    for r in &rows {
        csv += &csv_line(&[r.n.to_string(), join(&r.leaders, " "), r.kind.into(), r.params.to_string(), r.source()]);
        text += &format!("{:>4}  {:<10} {:<3} {:<16} {}\n", r.n, join(&r.leaders, ","), r.kind, r.params.to_string(), r.source());
    }
    Ok(Report { json: serde_json::to_value(&rows)?, csv, text, default: Format::Csv })
}
