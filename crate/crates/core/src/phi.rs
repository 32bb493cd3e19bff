//! The surface polynomials attached to a vectorial Boolean function.
//!
//! For f over GF(2^m) the associated trivariate polynomial is
//!
//! ```text
//! phi_f(x,y,z) = (f(x) + f(y) + f(z) + f(x+y+z)) / A,   A = (x+y)(y+z)(z+x)
//! ```
//!
//! and phi_e is the monomial case f = x^e. The numerator is symmetric, so
//! everything is computed in the s1/s2/s3 basis, where A = s1 s2 + s3 and
//! phi obeys the recursion
//!
//! ```text
//! phi_e = s1 phi_{e-1} + s2 phi_{e-2} + s3 phi_{e-3} + s1^(e-3)
//! ```
//!
//! seeded with phi_0 = phi_1 = phi_2 = 0. The recursion is the Newton
//! power-sum recursion transported through the exact division by A; unit
//! tests re-derive every value from the definition as an oracle.
//!
//! The module also checks two families of identities used when reasoning
//! about these surfaces: the diagonal specialization
//! `phi_e(x,z,z) = (x^{e-1}+z^{e-1})/(x+z)^2` for odd e, and the expansion
//! of `(x+z)^2 phi_e` through order 2 in s = y + z.

use crate::error::Error;
use crate::field::{Fe, FieldCtx};
use crate::poly::sym::SymPoly;
use crate::poly::vbf::Vbf;
use crate::poly::{Coeff, Mono, TriPoly, Var};

fn require_e_at_least_3(e: u64) -> Result<(), Error> {
    if e < 3 {
        return Err(Error::Precondition {
            what: format!("phi_{e} is not defined; the exponent must be at least 3"),
        });
    }
    Ok(())
}

fn require_odd(e: u64) -> Result<(), Error> {
    if e % 2 == 0 {
        return Err(Error::Precondition {
            what: format!("exponent {e} must be odd"),
        });
    }
    Ok(())
}

/// Run the recursion up to `e` and hand each phi_i (i from 0) to `sink`.
fn phi_sweep<C: Coeff>(one: C, e: u64, mut sink: impl FnMut(u64, &SymPoly<C>)) {
    let s1 = Mono::new(1, 0, 0);
    let s2 = Mono::new(0, 1, 0);
    let s3 = Mono::new(0, 0, 1);
    let mut window: [SymPoly<C>; 3] = [SymPoly::new(), SymPoly::new(), SymPoly::new()];
    for i in 0..3.min(e + 1) {
        sink(i, &window[i as usize]);
    }
    for i in 3..=e {
        let mut next = &(&window[2].mul_mono(s1) + &window[1].mul_mono(s2))
            + &window[0].mul_mono(s3);
        debug_assert!(i - 3 <= u16::MAX as u64, "phi exponent out of range");
        next.add_in(&SymPoly::term(one, Mono::new((i - 3) as u16, 0, 0)));
        sink(i, &next);
        window.rotate_left(1);
        window[2] = next;
    }
}

/// phi_e in the s-basis, coefficients in `ctx` (they are always 0 or 1).
pub fn phi_power_sym(ctx: FieldCtx, e: u64) -> Result<SymPoly<Fe>, Error> {
    require_e_at_least_3(e)?;
    let mut out = SymPoly::new();
    phi_sweep(ctx.one(), e, |i, p| {
        if i == e {
            out = p.clone();
        }
    });
    Ok(out)
}

/// phi_e as a trivariate polynomial over `ctx`.
pub fn phi_power(ctx: FieldCtx, e: u64) -> Result<TriPoly<Fe>, Error> {
    Ok(phi_power_sym(ctx, e)?.expand())
}

/// phi_f = sum of a_e phi_e over the terms of f, in one recursion sweep.
/// Terms of degree below 3 have identically vanishing numerators and
/// contribute nothing.
pub fn phi_of(f: &Vbf) -> TriPoly<Fe> {
    let ctx = f.ctx();
    let top = f.degree().unwrap_or(0);
    let mut acc = SymPoly::new();
    phi_sweep(ctx.one(), top, |i, p| {
        let c = f.coeff_at(i);
        if !c.is_zero() {
            acc.add_in(&p.scale(c));
        }
    });
    acc.expand()
}

/// The splitting product A = (x+y)(y+z)(z+x) over `ctx`.
pub fn splitting_product(ctx: FieldCtx) -> TriPoly<Fe> {
    // A = s1 s2 + s3
    SymPoly::from_terms([
        (Mono::new(1, 1, 0), ctx.one()),
        (Mono::new(0, 0, 1), ctx.one()),
    ])
    .expand()
}

/// Outcome of a divisibility question, carrying the quotient on success
/// and the stuck monomial otherwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DivisibilityReport<C: Coeff> {
    pub divisible: bool,
    pub quotient: Option<TriPoly<C>>,
    pub witness: Option<Mono>,
}

/// Does p divide phi? Non-divisibility is an answer, not an error; only a
/// zero divisor is rejected.
pub fn divides<C: Coeff>(
    p: &TriPoly<C>,
    phi: &TriPoly<C>,
) -> Result<DivisibilityReport<C>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolyDivisor);
    }
    match phi.divexact(p) {
        Ok(q) => Ok(DivisibilityReport {
            divisible: true,
            quotient: Some(q),
            witness: None,
        }),
        Err(Error::NotDivisible { x, y, z }) => Ok(DivisibilityReport {
            divisible: false,
            quotient: None,
            witness: Some(Mono::new(x, y, z)),
        }),
        Err(e) => Err(e),
    }
}

/// The quotient (x^{e-1} + z^{e-1}) / (x+z)^2 for odd e, i.e. the value of
/// phi_e on the diagonal y = z. The numerator is a square because e-1 is
/// even, so the division is exact.
pub fn diagonal_quotient(ctx: FieldCtx, e: u64) -> Result<TriPoly<Fe>, Error> {
    require_e_at_least_3(e)?;
    require_odd(e)?;
    let num = xz_power_sum(ctx, e - 1);
    let den = xz_binomial(ctx).square();
    num.divexact(&den)
}

/// Check phi_e(x, z, z) = (x^{e-1} + z^{e-1}) / (x+z)^2 symbolically.
pub fn verify_diagonal_identity(ctx: FieldCtx, e: u64) -> Result<bool, Error> {
    let lhs = phi_power(ctx, e)?.substitute(Var::Y, &TriPoly::var(ctx.one(), Var::Z));
    Ok(lhs == diagonal_quotient(ctx, e)?)
}

fn xz_binomial(ctx: FieldCtx) -> TriPoly<Fe> {
    &TriPoly::var(ctx.one(), Var::X) + &TriPoly::var(ctx.one(), Var::Z)
}

/// x^k + z^k as a trivariate polynomial.
fn xz_power_sum(ctx: FieldCtx, k: u64) -> TriPoly<Fe> {
    assert!(k <= u16::MAX as u64);
    TriPoly::from_terms([
        (Mono::new(k as u16, 0, 0), ctx.one()),
        (Mono::new(0, 0, k as u16), ctx.one()),
    ])
}

/// The expansion of (x+z)^2 phi_e through order 2 in s = y + z, written
/// with the y slot holding s. Which shape applies depends on e mod 4:
///
/// ```text
/// e = 3 mod 4:  (x^{e-1}+z^{e-1}) + s (x^{e-2}z + z^{e-2}x)/(x+z)
///                                 + s^2 (x^{e-3}+z^{e-3})(x^2+z^2+xz)/(x+z)^2
/// e = 1 mod 4:  (x^{e-1}+z^{e-1}) (1 + s/(x+z) + s^2/(x+z)^2)
/// ```
///
/// with every division exact. Requires odd e with e at least 5.
pub fn series_expansion_rhs(ctx: FieldCtx, e: u64) -> Result<TriPoly<Fe>, Error> {
    require_odd(e)?;
    if e < 5 {
        return Err(Error::Precondition {
            what: format!("series expansion needs e >= 5, got {e}"),
        });
    }
    let xz = xz_binomial(ctx);
    let xz2 = xz.square();
    let s = TriPoly::var(ctx.one(), Var::Y);
    let order0 = xz_power_sum(ctx, e - 1);
    let (order1, order2) = if e % 4 == 3 {
        let mixed = TriPoly::from_terms([
            (Mono::new((e - 2) as u16, 0, 1), ctx.one()),
            (Mono::new(1, 0, (e - 2) as u16), ctx.one()),
        ]);
        let quad = TriPoly::from_terms([
            (Mono::new(2, 0, 0), ctx.one()),
            (Mono::new(0, 0, 2), ctx.one()),
            (Mono::new(1, 0, 1), ctx.one()),
        ]);
        (
            mixed.divexact(&xz)?,
            &xz_power_sum(ctx, e - 3).divexact(&xz2)? * &quad,
        )
    } else {
        (order0.divexact(&xz)?, order0.divexact(&xz2)?)
    };
    Ok(&(&order0 + &(&s * &order1)) + &(&s.square() * &order2))
}

/// Truncation of p below order 3 in the y slot.
fn truncate_y3<C: Coeff>(p: &TriPoly<C>) -> TriPoly<C> {
    TriPoly::from_terms(p.terms().filter(|(m, _)| m.y < 3).map(|(&m, &c)| (m, c)))
}

/// Check the order-2 expansion of (x+z)^2 phi_e in s = y + z: substitute
/// y := s + z (the y slot then carries s), truncate both sides mod s^3,
/// and compare with [`series_expansion_rhs`].
pub fn verify_series_expansion(ctx: FieldCtx, e: u64) -> Result<bool, Error> {
    let rhs = series_expansion_rhs(ctx, e)?;
    let to_s = &TriPoly::var(ctx.one(), Var::Y) + &TriPoly::var(ctx.one(), Var::Z);
    let lhs = (&xz_binomial(ctx).square() * &phi_power(ctx, e)?).substitute(Var::Y, &to_s);
    Ok(truncate_y3(&lhs) == rhs)
}
