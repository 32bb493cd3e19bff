//! Brute-force differential analysis over GF(2^m).
//!
//! For every nonzero direction a the map x -> f(x+a) + f(x) is tallied
//! into a dense count array; the differential uniformity delta is the
//! largest tally over all (a, b). A function is APN exactly when delta is
//! 2, the smallest value possible in characteristic 2 (solutions pair up
//! as x, x+a).
//!
//! The a-loop is embarrassingly parallel and runs under rayon with
//! per-worker scratch buffers. Merging takes maxima and sums, both
//! commutative, so the report never depends on scheduling order.

use crate::error::Error;
use crate::field::{FieldCtx, MAX_M};
use crate::poly::vbf::Vbf;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

/// Largest extension tried without an explicit override; the quadratic
/// kernel is ~2.7e8 table lookups here.
pub const DEFAULT_M_BUDGET: u32 = 14;

/// Outcome of a differential-uniformity computation.
#[derive(Clone, Debug)]
pub struct ApnReport {
    pub m: u32,
    /// max over a != 0, b of #{x : f(x+a) + f(x) = b}
    pub delta: u32,
    /// delta == 2
    pub is_apn: bool,
    /// solution count -> how many (a, b) pairs produce it, zero included;
    /// frequencies total q(q-1)
    pub spectrum: BTreeMap<u32, u64>,
    pub elapsed: Duration,
}

/// Differential uniformity, spectrum, and the APN verdict for f.
/// Refuses m above [`DEFAULT_M_BUDGET`] unless `force` is set.
pub fn differential_uniformity(f: &Vbf, force: bool) -> Result<ApnReport, Error> {
    let ctx = f.ctx();
    if ctx.m() > DEFAULT_M_BUDGET && !force {
        return Err(Error::BudgetExceeded {
            what: "differential uniformity kernel (override with force)".into(),
            limit: DEFAULT_M_BUDGET as u64,
            requested: ctx.m() as u64,
        });
    }
    let start = Instant::now();
    let table = f.table();
    let q = table.len();
    let (delta, spectrum) = (1..q as u64)
        .into_par_iter()
        .map_init(
            || (vec![0u32; q], Vec::with_capacity(q / 2)),
            |(counts, touched), a| {
                for x in 0..q as u64 {
                    let b = table[x as usize] ^ table[(x ^ a) as usize];
                    let slot = &mut counts[b as usize];
                    if *slot == 0 {
                        touched.push(b);
                    }
                    *slot += 1;
                }
                let mut local_max = 0u32;
                let mut local: BTreeMap<u32, u64> = BTreeMap::new();
                for &b in touched.iter() {
                    let c = counts[b as usize];
                    counts[b as usize] = 0;
                    local_max = local_max.max(c);
                    *local.entry(c).or_insert(0) += 1;
                }
                *local.entry(0).or_insert(0) += (q - touched.len()) as u64;
                touched.clear();
                (local_max, local)
            },
        )
        .reduce(
            || (0, BTreeMap::new()),
            |(d1, mut s1), (d2, s2)| {
                for (c, n) in s2 {
                    *s1.entry(c).or_insert(0) += n;
                }
                (d1.max(d2), s1)
            },
        );
    Ok(ApnReport {
        m: ctx.m(),
        delta,
        is_apn: delta == 2,
        spectrum,
        elapsed: start.elapsed(),
    })
}

/// One extension's slot in a multi-field scan.
#[derive(Clone, Debug)]
pub struct ScanEntry {
    pub m: u32,
    pub result: Result<ApnReport, Error>,
}

/// Instantiate a prime-field polynomial over every GF(2^m) for m in the
/// inclusive range and test each. Per-extension budget failures land in
/// their entry instead of aborting the scan.
pub fn scan_extensions(
    f: &Vbf,
    m_lo: u32,
    m_hi: u32,
    force: bool,
) -> Result<Vec<ScanEntry>, Error> {
    if f.ctx().m() != 1 {
        return Err(Error::Precondition {
            what: "extension scans need coefficients in GF(2)".into(),
        });
    }
    if m_lo < 1 || m_hi > MAX_M || m_lo > m_hi {
        return Err(Error::Precondition {
            what: format!("bad extension range {m_lo}..{m_hi}; need 1 <= lo <= hi <= {MAX_M}"),
        });
    }
    Ok((m_lo..=m_hi)
        .map(|m| {
            let ctx = FieldCtx::new(m).expect("range checked above");
            let fm = Vbf::from_terms(ctx, f.terms().map(|(e, c)| (e, ctx.el(c.bits()))));
            ScanEntry {
                m,
                result: differential_uniformity(&fm, force),
            }
        })
        .collect())
}
