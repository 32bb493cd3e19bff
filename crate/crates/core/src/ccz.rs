//! Linearized polynomials and the change of variables they induce.
//!
//! For a trace-zero c1 in the cubic extension, the product
//! x(x + c1)(x + rho(c1))(x + rho^2(c1)) collapses to the linearized
//! polynomial L(x) = x^4 + q1(c1) x^2 + N(c1) x with coefficients in the
//! base field. L is a permutation of F_q, and composing with the inverse
//! permutation rewrites any f whose surface numerator carries the
//! specialized divisor product as g = x^e + S(x) up to 2-power monomials,
//! exhibiting f = g o L. Since composition with a linearized permutation is
//! an extended-affine equivalence, f and x^e + S(x) are CCZ-equivalent and
//! share their differential spectrum.

use std::collections::BTreeMap;

use crate::criteria::{self, RodierCandidate};
use crate::error::Error;
use crate::field::ext::{form_q1, Xfe};
use crate::field::{Fe, FieldCtx};
use crate::linalg;
use crate::phi::{divides, phi_of, DivisibilityReport};
use crate::poly::vbf::Vbf;

/// 2-linear (optionally affine) polynomial: a sparse map from k to the
/// coefficient of x^(2^k), plus a constant term for the affine case.
///
/// Evaluation is additive in the linear part: L(a + b) = L(a) + L(b).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearizedPoly {
    ctx: FieldCtx,
    coeffs: BTreeMap<u32, Fe>,
    constant: Fe,
}

impl LinearizedPoly {
    /// The zero map.
    pub fn new(ctx: FieldCtx) -> LinearizedPoly {
        LinearizedPoly {
            ctx,
            coeffs: BTreeMap::new(),
            constant: ctx.zero(),
        }
    }

    /// Build from (k, coefficient of x^(2^k)) pairs; repeated k accumulate.
    pub fn from_coeffs(ctx: FieldCtx, it: impl IntoIterator<Item = (u32, Fe)>) -> LinearizedPoly {
        let mut l = LinearizedPoly::new(ctx);
        for (k, c) in it {
            assert!(k < 64, "exponent 2^{k} overflows");
            assert_eq!(c.ctx(), ctx, "coefficient from a foreign field context");
            l.insert_add(k, c);
        }
        l
    }

    /// Same map with the constant term replaced.
    pub fn with_constant(mut self, c: Fe) -> LinearizedPoly {
        assert_eq!(c.ctx(), self.ctx, "constant from a foreign field context");
        self.constant = c;
        self
    }

    fn insert_add(&mut self, k: u32, c: Fe) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(k) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = *o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    o.insert(s);
                }
            }
        }
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    /// Coefficient of x^(2^k).
    pub fn coeff(&self, k: u32) -> Fe {
        self.coeffs.get(&k).copied().unwrap_or(self.ctx.zero())
    }

    pub fn constant(&self) -> Fe {
        self.constant
    }

    /// (k, coefficient) pairs for the nonzero linear terms, ascending k.
    pub fn coeffs(&self) -> impl Iterator<Item = (u32, Fe)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    /// True when the constant term is zero (a strictly linear map).
    pub fn is_linear(&self) -> bool {
        self.constant.is_zero()
    }

    /// Degree as a polynomial: 2^kmax, or 0 for a constant, or None for
    /// the zero map.
    pub fn degree(&self) -> Option<u64> {
        match self.coeffs.keys().next_back() {
            Some(&k) => Some(1u64 << k),
            None if !self.constant.is_zero() => Some(0),
            None => None,
        }
    }

    fn eval_linear(&self, a: Fe) -> Fe {
        debug_assert_eq!(a.ctx(), self.ctx);
        let mut acc = self.ctx.zero();
        let mut pow = a;
        let mut at = 0u32;
        for (&k, &c) in &self.coeffs {
            for _ in at..k {
                pow = pow.square();
            }
            at = k;
            acc = acc + c * pow;
        }
        acc
    }

    pub fn eval(&self, a: Fe) -> Fe {
        self.eval_linear(a) + self.constant
    }

    /// Value table indexed by element bits.
    pub fn table(&self) -> Vec<u64> {
        self.ctx.elems().map(|a| self.eval(a).bits()).collect()
    }

    /// The same polynomial as a general sparse univariate.
    pub fn to_vbf(&self) -> Vbf {
        let mut terms: Vec<(u64, Fe)> = self.coeffs.iter().map(|(&k, &c)| (1u64 << k, c)).collect();
        if !self.constant.is_zero() {
            terms.push((0, self.constant));
        }
        Vbf::from_terms(self.ctx, terms)
    }
}

/// The linearized polynomial x(x + c1)(x + rho(c1))(x + rho^2(c1)) =
/// x^4 + q1(c1) x^2 + N(c1) x.
///
/// The x^3 coefficient of the expanded product is tr(c1); the map is
/// linearized exactly when that trace vanishes, so a nonzero trace is
/// rejected.
pub fn build_l(c1: Xfe) -> Result<LinearizedPoly, Error> {
    let tr = c1.rel_trace();
    if !tr.is_zero() {
        return Err(Error::TraceNotZero {
            elem: c1.to_string(),
        });
    }
    let base = c1.ctx().base();
    Ok(LinearizedPoly::from_coeffs(
        base,
        [
            (2, base.one()),
            (1, form_q1(c1)),
            (0, c1.rel_norm()),
        ],
    ))
}

/// Permutation test for the linear part: rank of the m x m matrix of the
/// action on the polynomial basis. An affine map permutes iff its linear
/// part does.
pub fn is_permutation(l: &LinearizedPoly) -> bool {
    let m = l.ctx.m() as usize;
    let cols: Vec<u64> = (0..m)
        .map(|j| l.eval_linear(l.ctx.el(1 << j)).bits())
        .collect();
    linalg::invert(&cols, m).is_some()
}

/// Inverse of a linearized permutation, as a linearized polynomial.
///
/// The inverse of the linear part is additive, so it is again a
/// 2-polynomial; its coefficients b_k are recovered by solving
/// sum_k b_k (t^j)^(2^k) = Linv(t^j) over the basis t^j, an m x m system
/// over F_q whose matrix has independent rows. For an affine input
/// x -> L(x) + c the inverse is y -> Linv(y) + Linv(c).
pub fn invert(l: &LinearizedPoly) -> Result<LinearizedPoly, Error> {
    let ctx = l.ctx;
    let m = ctx.m() as usize;
    let cols: Vec<u64> = (0..m)
        .map(|j| l.eval_linear(ctx.el(1 << j)).bits())
        .collect();
    let minv = linalg::invert(&cols, m).ok_or(Error::NotAPermutation)?;

    let rows: Vec<Vec<Fe>> = (0..m)
        .map(|j| {
            let mut pow = ctx.el(1 << j);
            (0..m)
                .map(|_| {
                    let v = pow;
                    pow = pow.square();
                    v
                })
                .collect()
        })
        .collect();
    let rhs: Vec<Fe> = minv.iter().map(|&bits| ctx.el(bits)).collect();
    let b = solve_square(rows, rhs).expect("Moore matrix of a basis is invertible");

    let mut inv = LinearizedPoly::from_coeffs(ctx, b.into_iter().enumerate().map(|(k, c)| (k as u32, c)));
    if !l.constant.is_zero() {
        let shift = inv.eval_linear(l.constant);
        inv = inv.with_constant(shift);
    }
    for j in 0..m {
        let a = ctx.el(1 << j);
        debug_assert_eq!(inv.eval(l.eval(a)), a);
    }
    Ok(inv)
}

/// Gaussian elimination for a square system over F_q; None if singular.
fn solve_square(mut a: Vec<Vec<Fe>>, mut w: Vec<Fe>) -> Option<Vec<Fe>> {
    let n = w.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        w.swap(col, piv);
        let inv = a[col][col].inv().ok()?;
        for k in col..n {
            a[col][k] = a[col][k] * inv;
        }
        w[col] = w[col] * inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for k in col..n {
                    let s = a[col][k] * f;
                    a[r][k] = a[r][k] + s;
                }
                let s = w[col] * f;
                w[r] = w[r] + s;
            }
        }
    }
    Some(w)
}

/// Outcome of rewriting f as (x^e + S + residual) o L.
///
/// `s` carries no monomial with a 2-power exponent and has degree at most
/// e - 1; `residual` holds the 2-power and constant terms, which are
/// 2-affine and therefore irrelevant to CCZ-equivalence; `g` is the full
/// reduced composition f o Linv.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub e: u64,
    pub s: Vbf,
    pub residual: Vbf,
    pub g: Vbf,
}

/// Rewrite f of degree 4e as g o L with g = x^e + S(x) plus 2-affine
/// residual terms, where L is the linearized permutation attached to c1.
///
/// Preconditions: deg f = 4e with 4e < q so that the shape of g is not
/// confounded by reduction, f monic, and the specialized divisor product
/// for c1 must divide phi_f (the membership condition for the rewrite to
/// exist); that last check runs through [`criteria::rodier_test`].
pub fn ccz_decompose(f: &Vbf, c1: Xfe) -> Result<Decomposition, Error> {
    let ctx = f.ctx();
    assert_eq!(c1.ctx().base(), ctx, "candidate extends a different base field");
    let d = match f.degree() {
        Some(d) if d > 0 && d % 4 == 0 => d,
        _ => {
            return Err(Error::Precondition {
                what: format!(
                    "degree of f must be a positive multiple of 4, got {:?}",
                    f.degree()
                ),
            })
        }
    };
    let e = d / 4;
    let q = ctx.order();
    if d >= q {
        return Err(Error::Precondition {
            what: format!("deg f = {d} must be below the field order {q}"),
        });
    }
    if !f.coeff_at(d).is_one() {
        return Err(Error::Precondition {
            what: format!("f must be monic, leading coefficient is {}", f.coeff_at(d)),
        });
    }

    let cand = RodierCandidate::special(c1)?;
    let test = criteria::rodier_test(f, &cand)?;
    if !test.product.divisible {
        return Err(Error::Precondition {
            what: "the specialized divisor product for c1 does not divide phi_f".into(),
        });
    }

    let l = build_l(c1)?;
    if !is_permutation(&l) {
        return Err(Error::NotAPermutation);
    }

    // g = f o Linv as a function: g(L(x)) = f(x) pointwise, then
    // interpolated to the unique reduced polynomial.
    let tf = f.table();
    let tl = l.table();
    let qs = q as usize;
    let mut tg = vec![0u64; qs];
    for x in 0..qs {
        tg[tl[x] as usize] = tf[x];
    }
    let g = Vbf::interpolate_table(ctx, &tg)?;
    for x in 0..qs {
        if g.eval(ctx.el(tl[x])).bits() != tf[x] {
            return Err(Error::IdentityFailed {
                what: "decomposition roundtrip g o L = f".into(),
            });
        }
    }

    let mut s = Vbf::new(ctx);
    let mut residual = Vbf::new(ctx);
    let mut saw_e = false;
    for (ee, c) in g.terms() {
        if ee == e {
            if !c.is_one() {
                return Err(Error::NotDecomposable {
                    reason: format!("coefficient of x^{e} is {c}, expected 1"),
                });
            }
            saw_e = true;
        } else if ee == 0 || ee.is_power_of_two() {
            residual.insert_add(ee, c);
        } else if ee < e {
            s.insert_add(ee, c);
        } else {
            return Err(Error::NotDecomposable {
                reason: format!("unexplained monomial of exponent {ee}"),
            });
        }
    }
    if !saw_e {
        return Err(Error::NotDecomposable {
            reason: format!("missing the x^{e} term"),
        });
    }
    Ok(Decomposition { e, s, residual, g })
}

/// Check that phi of L^3 divides phi of L^n for every n in 3..=n_max.
///
/// The n = 3 case divides with quotient 1; the chain is what makes the
/// specialized product a divisor of phi_f for every f built from powers
/// of L.
pub fn verify_divisibility_chain(c1: Xfe, n_max: u64) -> Result<bool, Error> {
    if n_max < 3 {
        return Err(Error::Precondition {
            what: format!("n_max must be at least 3, got {n_max}"),
        });
    }
    let l = build_l(c1)?.to_vbf();
    let phi3 = phi_of(&l.pow(3));
    for n in 3..=n_max {
        let phin = phi_of(&l.pow(n));
        let rep: DivisibilityReport<Fe> = divides(&phi3, &phin)?;
        if !rep.divisible {
            return Ok(false);
        }
    }
    Ok(true)
}
