//! Structural screens for exceptionality: exponent classification for
//! absolute irreducibility of the phi surface, the Rodier divisor test
//! with the quadratic candidate family A + R, and the product identity
//! that ties the specialized family to a linearized permutation.
//!
//! The divisor candidates live over the cubic extension F_{q^3}; the
//! Galois product of a candidate with its two conjugates is defined over
//! F_q again, which is what makes it a meaningful divisor of phi_f.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::ccz;
use crate::error::Error;
use crate::field::ext::{ExtCtx, Xfe};
use crate::phi::{divides, phi_of, splitting_product, DivisibilityReport};
use crate::poly::vbf::Vbf;
use crate::poly::{Mono, TriPoly};

/// Structural class of an exponent e, deciding (or conditioning) absolute
/// irreducibility of the degree-(e-3) surface numerator phi_e.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExponentKind {
    /// e = 2^i + 1: phi_e splits into known absolutely irreducible factors.
    Gold,
    /// e = 4^i - 2^i + 1: phi_e splits into known factors.
    Kasami,
    /// e even: phi_e is never irreducible.
    EvenReducible,
    /// e = 3 (mod 4): phi_e is absolutely irreducible.
    Cong3Mod4Irreducible,
    /// e = 5 (mod 8): phi_e is absolutely irreducible under an extra
    /// cyclic-code hypothesis that this classifier does not evaluate, so
    /// the class is only conditional. The hypothesis is not vacuous:
    /// e = 205 is the smallest odd exponent, neither Gold nor Kasami, for
    /// which absolute irreducibility fails.
    Cong5Mod8Conditional,
    /// None of the implemented criteria applies.
    Unknown,
}

impl ExponentKind {
    /// Stable hyphenated label for reports.
    pub fn label(&self) -> &'static str {
        match self {
            ExponentKind::Gold => "gold",
            ExponentKind::Kasami => "kasami",
            ExponentKind::EvenReducible => "even-reducible",
            ExponentKind::Cong3Mod4Irreducible => "cong-3-mod-4-irreducible",
            ExponentKind::Cong5Mod8Conditional => "cong-5-mod-8-conditional",
            ExponentKind::Unknown => "unknown",
        }
    }
}

/// Classification result; `witness` carries the i of a Gold or Kasami hit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ExponentClass {
    pub e: u64,
    pub kind: ExponentKind,
    pub witness: Option<u32>,
}

/// Classify an exponent e >= 3. Gold and Kasami shapes take precedence
/// over the congruence classes (their surfaces factor in a known way, so
/// the congruence criteria must not claim them).
pub fn classify_exponent(e: u64) -> Result<ExponentClass, Error> {
    if e < 3 {
        return Err(Error::Precondition {
            what: format!("exponent must be at least 3, got {e}"),
        });
    }
    if (e - 1).is_power_of_two() {
        let i = (e - 1).trailing_zeros();
        return Ok(ExponentClass {
            e,
            kind: ExponentKind::Gold,
            witness: Some(i),
        });
    }
    let mut i = 2u32;
    while 2 * i < 64 {
        let v = (1u64 << (2 * i)) - (1u64 << i) + 1;
        if v == e {
            return Ok(ExponentClass {
                e,
                kind: ExponentKind::Kasami,
                witness: Some(i),
            });
        }
        if v > e {
            break;
        }
        i += 1;
    }
    let kind = if e % 2 == 0 {
        ExponentKind::EvenReducible
    } else if e % 4 == 3 {
        ExponentKind::Cong3Mod4Irreducible
    } else if e % 8 == 5 {
        ExponentKind::Cong5Mod8Conditional
    } else {
        ExponentKind::Unknown
    };
    Ok(ExponentClass {
        e,
        kind,
        witness: None,
    })
}

/// Coefficients of the quadratic divisor candidate
/// R = c1 (x^2+y^2+z^2) + c4 (xy+xz+zy) + b1 (x+y+z) + d1 over F_{q^3}.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RodierCandidate {
    pub c1: Xfe,
    pub c4: Xfe,
    pub b1: Xfe,
    pub d1: Xfe,
}

impl RodierCandidate {
    pub fn new(c1: Xfe, c4: Xfe, b1: Xfe, d1: Xfe) -> RodierCandidate {
        debug_assert!(c1.ctx() == c4.ctx() && c1.ctx() == b1.ctx() && c1.ctx() == d1.ctx());
        RodierCandidate { c1, c4, b1, d1 }
    }

    /// The all-zero candidate, R = 0.
    pub fn zero(ext: ExtCtx) -> RodierCandidate {
        RodierCandidate::new(ext.zero(), ext.zero(), ext.zero(), ext.zero())
    }

    /// The specialized family R = c1 phi_5 + c1^3, i.e. c4 = c1, b1 = 0,
    /// d1 = c1^3; the only shape a divisor of a quartic-power surface can
    /// take, and it forces tr(c1) = 0 (rejected otherwise).
    pub fn special(c1: Xfe) -> Result<RodierCandidate, Error> {
        if !c1.rel_trace().is_zero() {
            return Err(Error::TraceNotZero {
                elem: c1.to_string(),
            });
        }
        let zero = c1.ctx().zero();
        Ok(RodierCandidate::new(c1, c1, zero, c1.pow(3)))
    }

    pub fn ctx(&self) -> ExtCtx {
        self.c1.ctx()
    }

    /// The candidate with every coefficient conjugated, rho(R).
    pub fn frobenius(&self) -> RodierCandidate {
        RodierCandidate::new(
            self.c1.frobenius(),
            self.c4.frobenius(),
            self.b1.frobenius(),
            self.d1.frobenius(),
        )
    }
}

/// Expand R as a trivariate polynomial over F_{q^3}.
pub fn build_r(cand: &RodierCandidate) -> TriPoly<Xfe> {
    let mut p = TriPoly::new();
    for m in [Mono::new(2, 0, 0), Mono::new(0, 2, 0), Mono::new(0, 0, 2)] {
        p.insert_add(m, cand.c1);
    }
    for m in [Mono::new(1, 1, 0), Mono::new(1, 0, 1), Mono::new(0, 1, 1)] {
        p.insert_add(m, cand.c4);
    }
    for m in [Mono::new(1, 0, 0), Mono::new(0, 1, 0), Mono::new(0, 0, 1)] {
        p.insert_add(m, cand.b1);
    }
    p.insert_add(Mono::ONE, cand.d1);
    p
}

/// The divisor candidate A + R over F_{q^3}, where A is the splitting
/// product (x+y)(y+z)(z+x) embedded from the base field.
pub fn build_divisor(cand: &RodierCandidate) -> TriPoly<Xfe> {
    let ext = cand.ctx();
    let a = splitting_product(ext.base()).map_coeffs(|c| ext.embed(c));
    &a + &build_r(cand)
}

/// The Galois product (A + R)(A + rho R)(A + rho^2 R); its coefficients
/// are fixed by the Galois action, hence lie in the embedded base field.
pub fn galois_product(cand: &RodierCandidate) -> TriPoly<Xfe> {
    let d0 = build_divisor(cand);
    let d1 = build_divisor(&cand.frobenius());
    let d2 = build_divisor(&cand.frobenius().frobenius());
    &(&d0 * &d1) * &d2
}

/// Both divisibility questions for a candidate against phi_f: the single
/// factor A + R, and the Galois product of its three conjugates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RodierTestReport {
    pub factor: DivisibilityReport<Xfe>,
    pub product: DivisibilityReport<Xfe>,
}

fn degree_4e(f: &Vbf) -> Result<u64, Error> {
    match f.degree() {
        Some(d) if d > 0 && d % 4 == 0 => Ok(d),
        other => Err(Error::Precondition {
            what: format!("degree of f must be a positive multiple of 4, got {other:?}"),
        }),
    }
}

/// Run the divisor test for one candidate: does A + R divide phi_f, and
/// does the full Galois product divide it? Both answers are reported;
/// non-divisibility is an answer, not an error.
pub fn rodier_test(f: &Vbf, cand: &RodierCandidate) -> Result<RodierTestReport, Error> {
    let ext = cand.ctx();
    assert_eq!(
        ext.base(),
        f.ctx(),
        "candidate extends a different base field"
    );
    degree_4e(f)?;
    let phif = phi_of(f).map_coeffs(|c| ext.embed(c));
    let factor = divides(&build_divisor(cand), &phif)?;
    let product = divides(&galois_product(cand), &phif)?;
    Ok(RodierTestReport { factor, product })
}

/// Largest base-field degree scanned exhaustively (q^2 = 256 trace-zero
/// candidates); beyond it the caller must opt into sampling.
pub const EXHAUSTIVE_SCAN_MAX_M: u32 = 4;

/// How a scan chose its candidates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ScanMode {
    Exhaustive,
    Sampled { seed: u64 },
}

impl ScanMode {
    pub fn label(&self) -> &'static str {
        match self {
            ScanMode::Exhaustive => "exhaustive",
            ScanMode::Sampled { .. } => "sampled",
        }
    }
}

/// Scan controls: `sample` switches to seeded random candidate selection
/// (required above [`EXHAUSTIVE_SCAN_MAX_M`]); the default seed is 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ScanOptions {
    pub sample: Option<u64>,
    pub seed: u64,
}

impl Default for ScanOptions {
    fn default() -> ScanOptions {
        ScanOptions {
            sample: None,
            seed: 1,
        }
    }
}

/// One candidate whose factor or product divided phi_f. The stored c1 is
/// the canonical orbit representative; its two conjugates produce the
/// same Galois product, so they are not listed separately.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ScanHit {
    pub c1: Xfe,
    pub factor_divides: bool,
    pub product_divides: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScanReport {
    pub mode: ScanMode,
    pub candidates_tested: u64,
    pub hits: Vec<ScanHit>,
}

/// Scan the specialized candidate family R = c1 phi_5 + c1^3 over all
/// trace-zero c1 (one representative per conjugate orbit) and report every
/// divisor found. An empty hit list means no divisor of the specialized
/// form exists, which supports a non-exceptionality argument for f.
///
/// Exhaustive for m <= 4; larger fields must pass `sample`, which draws
/// seeded random trace-zero candidates instead.
pub fn rodier_scan(f: &Vbf, ext: ExtCtx, opts: &ScanOptions) -> Result<ScanReport, Error> {
    assert_eq!(
        ext.base(),
        f.ctx(),
        "scan extension over a different base field"
    );
    degree_4e(f)?;
    let m = ext.base().m();

    let (mode, candidates) = match opts.sample {
        Some(n) => {
            let basis = ext.trace_kernel_basis();
            let dim = basis.len() as u32;
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let mut seen: BTreeMap<u64, Xfe> = BTreeMap::new();
            let max_attempts = n.saturating_mul(64).saturating_add(256);
            let mut attempts = 0u64;
            while (seen.len() as u64) < n && attempts < max_attempts {
                attempts += 1;
                let mask = rng.gen::<u64>() & ((1u64 << dim) - 1);
                let mut c = ext.zero();
                for (i, b) in basis.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        c = c + *b;
                    }
                }
                let canon = c.conjugacy_canonical();
                seen.entry(canon.packed()).or_insert(canon);
            }
            (
                ScanMode::Sampled { seed: opts.seed },
                seen.into_values().collect::<Vec<_>>(),
            )
        }
        None => {
            if m > EXHAUSTIVE_SCAN_MAX_M {
                return Err(Error::BudgetExceeded {
                    what: "trace-zero scan candidates (pass a sample size to scan anyway)".into(),
                    limit: 1u64 << (2 * EXHAUSTIVE_SCAN_MAX_M),
                    requested: 1u64 << (2 * m),
                });
            }
            let mut seen: BTreeMap<u64, Xfe> = BTreeMap::new();
            for c in ext.trace_zero_elems() {
                let canon = c.conjugacy_canonical();
                seen.entry(canon.packed()).or_insert(canon);
            }
            (ScanMode::Exhaustive, seen.into_values().collect::<Vec<_>>())
        }
    };

    let phif = phi_of(f).map_coeffs(|c| ext.embed(c));
    let hits: Vec<ScanHit> = candidates
        .par_iter()
        .filter_map(|&c1| {
            let cand = RodierCandidate::special(c1).expect("scan candidates are trace-zero");
            let factor = divides(&build_divisor(&cand), &phif)
                .expect("divisor has the cubic terms of A, never zero");
            let product = divides(&galois_product(&cand), &phif)
                .expect("product divisor is nonzero");
            if factor.divisible || product.divisible {
                Some(ScanHit {
                    c1,
                    factor_divides: factor.divisible,
                    product_divides: product.divisible,
                })
            } else {
                None
            }
        })
        .collect();
    Ok(ScanReport {
        mode,
        candidates_tested: candidates.len() as u64,
        hits,
    })
}

/// The product identity behind the specialized family: for trace-zero c1,
/// (A + R)(A + rho R)(A + rho^2 R) equals phi of L^3, where L is the
/// linearized permutation attached to c1. Checked as exact symbolic
/// equality over F_{q^3}.
pub fn verify_product_identity(c1: Xfe) -> Result<bool, Error> {
    let cand = RodierCandidate::special(c1)?;
    let lhs = galois_product(&cand);
    let ext = c1.ctx();
    let l3 = ccz::build_l(c1)?.to_vbf().pow(3);
    let rhs = phi_of(&l3).map_coeffs(|c| ext.embed(c));
    Ok(lhs == rhs)
}
