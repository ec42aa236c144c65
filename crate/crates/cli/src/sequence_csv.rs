//! Reads `n,length` CSV produced elsewhere (comment lines start with `#`).

use std::io::Read;

use anyhow::{bail, Context, Result};
use hgl_core::{Length, LengthSequence};

pub fn read_sequence(input: impl Read) -> Result<LengthSequence> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(input);
    let mut n0 = None;
    let mut values = Vec::new();
    for (k, rec) in reader.records().enumerate() {
        let rec = rec.context("malformed CSV")?;
        if rec.len() != 2 {
            bail!("row {}: expected `n,length`", k + 2);
        }
        let n: u32 = rec[0].parse().with_context(|| format!("row {}: bad n `{}`", k + 2, &rec[0]))?;
        let start = *n0.get_or_insert(n);
        if n != start + values.len() as u32 {
            bail!("row {}: n values must be consecutive", k + 2);
        }
        let v = match &rec[1] {
            "INFINITE" => Length::Infinite,
            s => Length::Finite(s.parse().with_context(|| format!("row {}: bad length `{}`", k + 2, s))?),
        };
        values.push(v);
    }
    let Some(n0) = n0 else { bail!("no data rows") };
    Ok(LengthSequence::new(n0, values, "csv"))
}
