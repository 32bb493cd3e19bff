//! Point counts on phi curves and surfaces over small binary fields.
//!
//! An absolutely irreducible plane curve defined over F_2 has close to 2^k
//! rational points over F_{2^k}, within a Weil-style band around 2^k. A
//! curve whose components are conjugate over a proper extension instead
//! shows collapsed counts whenever the extension does not embed into the
//! counting field. Comparing exact counts against the band across a range
//! of k yields numerical evidence for or against a component over the
//! ground field; it is evidence only, never a proof.

use rayon::prelude::*;

use crate::error::Error;
use crate::field::{Embedding, Fe, FieldCtx};
use crate::phi::phi_power;
use crate::poly::vbf::DensePoly;
use crate::poly::{TriPoly, Var};

/// Largest counting-field degree for curve counts without a budget error.
pub const DEFAULT_CURVE_K_BUDGET: u32 = 12;
/// Largest (x, y) pair count for surface counts: q'^2 at most 2^20.
pub const SURFACE_PAIR_BUDGET: u64 = 1 << 20;

/// Exact affine point count over F_{2^k}, with the one-component band the
/// count is compared against. The band is centered on the expected count
/// of a single absolutely irreducible component (2^k for a curve, 2^(2k)
/// for a surface) with slack (d-1)(d-2)*ceil(sqrt(center)) + d^2; the d^2
/// term is generous cover for singular points and the line at infinity,
/// a documented heuristic rather than a sharp constant.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PointCountReport {
    pub k: u32,
    pub count: u64,
    pub degree: u32,
    pub weil_low: u64,
    pub weil_high: u64,
}

impl PointCountReport {
    pub fn in_band(&self) -> bool {
        self.weil_low <= self.count && self.count <= self.weil_high
    }
}

fn ceil_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).map_or(true, |s| s < n) {
        r += 1;
    }
    while r > 0 && (r - 1).checked_mul(r - 1).map_or(false, |s| s >= n) {
        r -= 1;
    }
    r
}

fn weil_band(center: u64, d: u32) -> (u64, u64) {
    let d = d as u64;
    let quad = d.saturating_sub(1) * d.saturating_sub(2);
    let slack = quad * ceil_sqrt(center) + d * d;
    (center.saturating_sub(slack), center.saturating_add(slack))
}

/// phi_e with z set to 1: the plane curve over F_2 whose rational points
/// the evidence verdicts are about.
pub fn dehomogenized_phi_curve(e: u64) -> Result<TriPoly<Fe>, Error> {
    let ctx = FieldCtx::new(1)?;
    let phi = phi_power(ctx, e)?;
    let p = phi.substitute(Var::Z, &TriPoly::constant(ctx.one()));
    if p.is_zero() {
        return Err(Error::Precondition {
            what: format!("phi_{e} dehomogenizes to the zero polynomial"),
        });
    }
    Ok(p)
}

/// Field context of a nonzero polynomial's coefficients.
fn base_ctx(p: &TriPoly<Fe>) -> FieldCtx {
    p.terms().next().expect("nonzero polynomial").1.ctx()
}

fn require_bivariate(p: &TriPoly<Fe>) -> Result<(), Error> {
    if p.is_zero() {
        return Err(Error::Precondition {
            what: "cannot count points of the zero polynomial".into(),
        });
    }
    if p.terms().any(|(m, _)| m.get(Var::Z) != 0) {
        return Err(Error::Precondition {
            what: "curve polynomial must be bivariate in x and y".into(),
        });
    }
    Ok(())
}

/// Specialize the x variable and return the dense univariate in y (or z
/// for `zvar`) over the counting field.
fn specialize_line(
    terms: &[(u16, u16, Fe)],
    deg_v: usize,
    x0_pows: &[Fe],
    kctx: FieldCtx,
) -> DensePoly {
    let mut c = vec![kctx.zero(); deg_v + 1];
    for &(xe, ve, coeff) in terms {
        c[ve as usize] = c[ve as usize] + coeff * x0_pows[xe as usize];
    }
    DensePoly::from_coeffs(kctx, c)
}

/// Count affine F_{2^k} points of a bivariate curve p(x, y) = 0.
///
/// One x-line at a time: specialize x, then count distinct y-roots of the
/// resulting univariate as the degree of its gcd with y^(2^k) + y. A line
/// on which p vanishes identically contributes all 2^k of its points.
pub fn count_curve_points(p: &TriPoly<Fe>, k: u32) -> Result<PointCountReport, Error> {
    require_bivariate(p)?;
    if k > DEFAULT_CURVE_K_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "curve counting field degree".into(),
            limit: DEFAULT_CURVE_K_BUDGET as u64,
            requested: k as u64,
        });
    }
    let kctx = FieldCtx::new(k)?;
    let emb = Embedding::new(base_ctx(p), kctx)?;
    let terms: Vec<(u16, u16, Fe)> = p
        .terms()
        .map(|(m, &c)| (m.get(Var::X), m.get(Var::Y), emb.map(c)))
        .collect();
    let deg_x = terms.iter().map(|&(xe, _, _)| xe).max().unwrap() as usize;
    let deg_y = terms.iter().map(|&(_, ye, _)| ye).max().unwrap() as usize;

    let q = kctx.order();
    let count: u64 = (0..q)
        .into_par_iter()
        .map(|bits| {
            let x0 = kctx.el(bits);
            let mut pows = Vec::with_capacity(deg_x + 1);
            let mut acc = kctx.one();
            for _ in 0..=deg_x {
                pows.push(acc);
                acc = acc * x0;
            }
            specialize_line(&terms, deg_y, &pows, kctx).distinct_roots_in_field()
        })
        .sum();

    let d = p.degree().unwrap();
    let (weil_low, weil_high) = weil_band(q, d);
    Ok(PointCountReport {
        k,
        count,
        degree: d,
        weil_low,
        weil_high,
    })
}

/// Count affine F_{2^k} points of a surface p(x, y, z) = 0.
///
/// Per (x, y) pair the z-roots are counted the same way as curve lines;
/// a pair on which the specialization vanishes contributes a full 2^k.
pub fn count_surface_points(p: &TriPoly<Fe>, k: u32) -> Result<PointCountReport, Error> {
    if p.is_zero() {
        return Err(Error::Precondition {
            what: "cannot count points of the zero polynomial".into(),
        });
    }
    let pairs = if 2 * k >= 64 {
        u64::MAX
    } else {
        1u64 << (2 * k)
    };
    if pairs > SURFACE_PAIR_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "surface counting pairs".into(),
            limit: SURFACE_PAIR_BUDGET,
            requested: pairs,
        });
    }
    let kctx = FieldCtx::new(k)?;
    let emb = Embedding::new(base_ctx(p), kctx)?;
    let terms: Vec<(u16, u16, u16, Fe)> = p
        .terms()
        .map(|(m, &c)| (m.get(Var::X), m.get(Var::Y), m.get(Var::Z), emb.map(c)))
        .collect();
    let deg_x = terms.iter().map(|&(e, _, _, _)| e).max().unwrap() as usize;
    let deg_y = terms.iter().map(|&(_, e, _, _)| e).max().unwrap() as usize;
    let deg_z = terms.iter().map(|&(_, _, e, _)| e).max().unwrap() as usize;

    let q = kctx.order();
    let count: u64 = (0..q)
        .into_par_iter()
        .map(|xbits| {
            let x0 = kctx.el(xbits);
            let mut xpows = Vec::with_capacity(deg_x + 1);
            let mut acc = kctx.one();
            for _ in 0..=deg_x {
                xpows.push(acc);
                acc = acc * x0;
            }
            let mut row = 0u64;
            for ybits in 0..q {
                let y0 = kctx.el(ybits);
                let mut ypows = Vec::with_capacity(deg_y + 1);
                let mut acc = kctx.one();
                for _ in 0..=deg_y {
                    ypows.push(acc);
                    acc = acc * y0;
                }
                let mut c = vec![kctx.zero(); deg_z + 1];
                for &(xe, ye, ze, coeff) in &terms {
                    c[ze as usize] =
                        c[ze as usize] + coeff * xpows[xe as usize] * ypows[ye as usize];
                }
                row += DensePoly::from_coeffs(kctx, c).distinct_roots_in_field();
            }
            row
        })
        .sum();

    let d = p.degree().unwrap();
    let center = if 2 * k >= 64 { u64::MAX } else { 1u64 << (2 * k) };
    let (weil_low, weil_high) = weil_band(center, d);
    Ok(PointCountReport {
        k,
        count,
        degree: d,
        weil_low,
        weil_high,
    })
}

/// Evidence verdict from comparing counts across a k range.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EvidenceVerdict {
    /// Every count sits inside its one-component band.
    For,
    /// Counts collapse exactly when t does not divide k: the signature of
    /// components conjugate over F_{2^t}.
    Against { t: u32 },
    /// Neither pattern holds.
    Inconclusive,
}

impl EvidenceVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            EvidenceVerdict::For => "evidence-for",
            EvidenceVerdict::Against { .. } => "evidence-against",
            EvidenceVerdict::Inconclusive => "inconclusive",
        }
    }
}

/// Verdict plus the raw counts it was derived from; the counts are the
/// substance, the verdict is policy.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EvidenceReport {
    pub verdict: EvidenceVerdict,
    pub reports: Vec<PointCountReport>,
}

/// Compare curve counts against the one-component band for every k in
/// `k_lo..=k_hi` (at least 3 values required).
///
/// All counts in band: evidence for a component over the ground field.
/// Counts collapsing to at most d^2 exactly on the k not divisible by
/// some t in {2, 3}, with non-collapsed counts on the multiples:
/// evidence against (conjugate components). Anything else: inconclusive.
pub fn component_evidence(
    p: &TriPoly<Fe>,
    k_lo: u32,
    k_hi: u32,
) -> Result<EvidenceReport, Error> {
    require_bivariate(p)?;
    if k_lo < 1 || k_lo > k_hi {
        return Err(Error::Precondition {
            what: format!("bad k range {k_lo}..={k_hi}"),
        });
    }
    let m = base_ctx(p).m();
    let ks: Vec<u32> = (k_lo..=k_hi).filter(|k| k % m == 0).collect();
    if ks.len() < 3 {
        return Err(Error::InsufficientData {
            what: format!(
                "need at least 3 counting fields, range {k_lo}..={k_hi} admits {}",
                ks.len()
            ),
        });
    }
    let reports: Vec<PointCountReport> = ks
        .iter()
        .map(|&k| count_curve_points(p, k))
        .collect::<Result<_, _>>()?;

    let verdict = if reports.iter().all(|r| r.in_band()) {
        EvidenceVerdict::For
    } else {
        let d = reports[0].degree as u64;
        let collapse_bound = d * d;
        let mut found = None;
        for t in [2u32, 3] {
            let off: Vec<&PointCountReport> =
                reports.iter().filter(|r| r.k % t != 0).collect();
            let on: Vec<&PointCountReport> =
                reports.iter().filter(|r| r.k % t == 0).collect();
            if !off.is_empty()
                && !on.is_empty()
                && off.iter().all(|r| r.count <= collapse_bound)
                && on.iter().all(|r| r.count > collapse_bound)
            {
                found = Some(EvidenceVerdict::Against { t });
                break;
            }
        }
        found.unwrap_or(EvidenceVerdict::Inconclusive)
    };
    Ok(EvidenceReport { verdict, reports })
}
