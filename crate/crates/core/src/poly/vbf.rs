//! Univariate polynomials over GF(2^m) in two flavors: the sparse [`Vbf`],
//! which presents a vectorial Boolean function F_q -> F_q, and the dense
//! [`DensePoly`] used for remainders, gcds, and root counting.
//!
//! Two reduced polynomials of degree below q agree as functions exactly
//! when they are equal, so [`Vbf::reduced`] doubles as a canonical form.

use crate::error::Error;
use crate::field::{Fe, FieldCtx};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse univariate polynomial, exponent -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct Vbf {
    ctx: FieldCtx,
    terms: BTreeMap<u64, Fe>,
}

impl Vbf {
    pub fn new(ctx: FieldCtx) -> Vbf {
        Vbf {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    /// The monomial x^e.
    pub fn monomial(ctx: FieldCtx, e: u64) -> Vbf {
        let mut v = Vbf::new(ctx);
        v.insert_add(e, ctx.one());
        v
    }

    pub fn from_terms(ctx: FieldCtx, it: impl IntoIterator<Item = (u64, Fe)>) -> Vbf {
        let mut v = Vbf::new(ctx);
        for (e, c) in it {
            assert!(c.ctx() == ctx, "coefficient from a foreign field");
            v.insert_add(e, c);
        }
        v
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.last_key_value().map(|(&e, _)| e)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, Fe)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff_at(&self, e: u64) -> Fe {
        self.terms.get(&e).copied().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn insert_add(&mut self, e: u64, c: Fe) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(en) => {
                en.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut en) => {
                let s = *en.get() + c;
                if s.is_zero() {
                    en.remove();
                } else {
                    *en.get_mut() = s;
                }
            }
        }
    }

    pub fn add_in(&mut self, rhs: &Vbf) {
        assert!(self.ctx == rhs.ctx, "mixed-field polynomial sum");
        for (e, c) in rhs.terms() {
            self.insert_add(e, c);
        }
    }

    pub fn scale(&self, c: Fe) -> Vbf {
        let mut out = Vbf::new(self.ctx);
        for (e, a) in self.terms() {
            out.insert_add(e, a * c);
        }
        out
    }

    pub fn eval(&self, a: Fe) -> Fe {
        let mut acc = self.ctx.zero();
        for (e, c) in self.terms() {
            acc += c * a.pow(e);
        }
        acc
    }

    /// Value table indexed by input bit pattern.
    pub fn table(&self) -> Vec<u64> {
        self.ctx.elems().map(|a| self.eval(a).bits()).collect()
    }

    /// Canonical representative of the same function with exponents below
    /// q, folding x^q = x (valid on all of F_q including 0).
    pub fn reduced(&self) -> Vbf {
        let q = self.ctx.order();
        let mut out = Vbf::new(self.ctx);
        for (e, c) in self.terms() {
            let r = if e == 0 { 0 } else { (e - 1) % (q - 1) + 1 };
            out.insert_add(r, c);
        }
        out
    }

    /// Frobenius squaring: exponents double, coefficients square.
    pub fn square(&self) -> Vbf {
        let mut out = Vbf::new(self.ctx);
        for (e, c) in self.terms() {
            out.insert_add(e.checked_mul(2).expect("exponent overflow"), c * c);
        }
        out
    }

    /// self^e by square and multiply; exponents grow freely.
    pub fn pow(&self, e: u64) -> Vbf {
        if e == 0 {
            return Vbf::from_terms(self.ctx, [(0, self.ctx.one())]);
        }
        let mut base = self.clone();
        let mut acc: Option<Vbf> = None;
        let mut k = e;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.square();
        }
        acc.unwrap()
    }

    pub fn mul(&self, rhs: &Vbf) -> Vbf {
        assert!(self.ctx == rhs.ctx, "mixed-field polynomial product");
        let mut out = Vbf::new(self.ctx);
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.insert_add(e1.checked_add(e2).expect("exponent overflow"), c1 * c2);
            }
        }
        out
    }

    /// self(inner(x)) as a plain polynomial expansion of degree
    /// deg self * deg inner. Nothing is folded mod x^q + x here; reduction
    /// stays a separate, explicit step so identity testing sees the raw
    /// composition.
    pub fn compose(&self, inner: &Vbf) -> Vbf {
        assert!(self.ctx == inner.ctx, "mixed-field composition");
        let mut out = Vbf::new(self.ctx);
        for (e, c) in self.terms() {
            out.add_in(&inner.pow(e).scale(c));
        }
        out
    }

    /// The unique polynomial of degree below q hitting every table entry,
    /// by Lagrange interpolation against M(x) = x^q + x. M'(v) = 1 in
    /// characteristic 2, so each basis polynomial is the synthetic quotient
    /// M/(x + v) as is, and the whole pass costs O(q^2) multiplications.
    pub fn interpolate_table(ctx: FieldCtx, values: &[u64]) -> Result<Vbf, Error> {
        let q = ctx.order();
        if values.len() as u64 != q {
            return Err(Error::Precondition {
                what: format!("interpolation needs exactly {q} values, got {}", values.len()),
            });
        }
        let mut coeffs = vec![ctx.zero(); q as usize];
        for (vbits, &fbits) in values.iter().enumerate() {
            let fv = ctx.elem(fbits)?;
            if fv.is_zero() {
                continue;
            }
            let v = ctx.el(vbits as u64);
            if v.is_zero() {
                // M/(x+0) = x^{q-1} + 1
                coeffs[0] += fv;
                coeffs[q as usize - 1] += fv;
                continue;
            }
            // quotient coefficients b_i = v^{q-1-i} for i = q-1 down to 1
            let mut w = ctx.one();
            for i in (1..q as usize).rev() {
                coeffs[i] += fv * w;
                w *= v;
            }
        }
        Ok(Vbf::from_terms(
            ctx,
            coeffs
                .into_iter()
                .enumerate()
                .map(|(e, c)| (e as u64, c)),
        ))
    }
}

impl fmt::Display for Vbf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{c}")?;
                continue;
            }
            if !c.is_one() {
                write!(f, "{c}*")?;
            }
            if e == 1 {
                write!(f, "x")?;
            } else {
                write!(f, "x^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Vbf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Dense univariate polynomial; index i holds the coefficient of x^i and
/// the top entry is never zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DensePoly {
    ctx: FieldCtx,
    c: Vec<Fe>,
}

impl DensePoly {
    pub fn zero(ctx: FieldCtx) -> DensePoly {
        DensePoly { ctx, c: Vec::new() }
    }

    pub fn from_coeffs(ctx: FieldCtx, mut c: Vec<Fe>) -> DensePoly {
        while c.last().is_some_and(|t| t.is_zero()) {
            c.pop();
        }
        DensePoly { ctx, c }
    }

    /// The monomial x.
    pub fn x(ctx: FieldCtx) -> DensePoly {
        DensePoly::from_coeffs(ctx, vec![ctx.zero(), ctx.one()])
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.c
    }

    pub fn eval(&self, a: Fe) -> Fe {
        let mut acc = self.ctx.zero();
        for &ci in self.c.iter().rev() {
            acc = acc * a + ci;
        }
        acc
    }

    pub fn add(&self, rhs: &DensePoly) -> DensePoly {
        let n = self.c.len().max(rhs.c.len());
        let mut out = vec![self.ctx.zero(); n];
        for (i, &ci) in self.c.iter().enumerate() {
            out[i] += ci;
        }
        for (i, &ci) in rhs.c.iter().enumerate() {
            out[i] += ci;
        }
        DensePoly::from_coeffs(self.ctx, out)
    }

    pub fn mul(&self, rhs: &DensePoly) -> DensePoly {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero(self.ctx);
        }
        let mut out = vec![self.ctx.zero(); self.c.len() + rhs.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePoly::from_coeffs(self.ctx, out)
    }

    /// Remainder of self by d; d must be nonzero.
    pub fn rem(&self, d: &DensePoly) -> DensePoly {
        let dd = d.deg().expect("remainder by the zero polynomial");
        let lead_inv = d.c[dd].inv().expect("nonzero leading coefficient");
        let mut r = self.c.clone();
        while r.len() > dd {
            let k = r.len() - 1;
            let top = r[k];
            if !top.is_zero() {
                let f = top * lead_inv;
                for (i, &di) in d.c.iter().enumerate() {
                    r[k - dd + i] += f * di;
                }
            }
            debug_assert!(r[k].is_zero());
            r.pop();
        }
        DensePoly::from_coeffs(self.ctx, r)
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(&self, rhs: &DensePoly) -> DensePoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        match a.deg() {
            None => a,
            Some(d) => {
                let inv = a.c[d].inv().unwrap();
                DensePoly::from_coeffs(self.ctx, a.c.iter().map(|&ci| ci * inv).collect())
            }
        }
    }

    /// x^(2^k) mod self, by k squarings mod self.
    pub fn frobenius_power_mod(&self, k: u32) -> DensePoly {
        let mut r = DensePoly::x(self.ctx).rem(self);
        for _ in 0..k {
            r = r.mul(&r).rem(self);
        }
        r
    }

    /// How many distinct roots self has in its coefficient field, via
    /// deg gcd(self, x^q + x). The zero polynomial vanishes everywhere.
    pub fn distinct_roots_in_field(&self) -> u64 {
        let Some(d) = self.deg() else {
            return self.ctx.order();
        };
        if d == 0 {
            return 0;
        }
        let frob = self.frobenius_power_mod(self.ctx.m());
        let split = frob.add(&DensePoly::x(self.ctx).rem(self));
        self.gcd(&split).deg().unwrap_or(0) as u64
    }
}
