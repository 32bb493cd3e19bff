//! Sparse polynomial arithmetic in three variables over characteristic-2
//! coefficient fields.
//!
//! Terms live in a `BTreeMap` keyed by graded lexicographic monomial order
//! with x > y > z, so the last map entry is always the leading term.
//! Squaring uses the characteristic-2 identity (sum of terms)^2 = sum of
//! squared terms, which keeps powers of sparse polynomials sparse.

use crate::error::Error;
use crate::field::ext::Xfe;
use crate::field::Fe;
use std::collections::BTreeMap;
use std::fmt;

pub mod parse;
pub mod sym;
pub mod vbf;

pub use sym::SymPoly;

/// A monomial x^a y^b z^c.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mono {
    pub x: u16,
    pub y: u16,
    pub z: u16,
}

impl Mono {
    pub const ONE: Mono = Mono { x: 0, y: 0, z: 0 };

    pub fn new(x: u16, y: u16, z: u16) -> Mono {
        Mono { x, y, z }
    }

    pub fn deg(self) -> u32 {
        self.x as u32 + self.y as u32 + self.z as u32
    }

    pub fn is_one(self) -> bool {
        self == Mono::ONE
    }

    pub fn get(self, v: Var) -> u16 {
        match v {
            Var::X => self.x,
            Var::Y => self.y,
            Var::Z => self.z,
        }
    }

    /// Copy with the exponent of `v` cleared.
    pub fn without(self, v: Var) -> Mono {
        let mut m = self;
        match v {
            Var::X => m.x = 0,
            Var::Y => m.y = 0,
            Var::Z => m.z = 0,
        }
        m
    }

    pub fn mul(self, o: Mono) -> Mono {
        let x = self.x as u32 + o.x as u32;
        let y = self.y as u32 + o.y as u32;
        let z = self.z as u32 + o.z as u32;
        assert!(
            x <= u16::MAX as u32 && y <= u16::MAX as u32 && z <= u16::MAX as u32,
            "monomial exponent overflow"
        );
        Mono::new(x as u16, y as u16, z as u16)
    }

    pub fn doubled(self) -> Mono {
        self.mul(self)
    }

    /// Does every exponent of `self` stay within `o`?
    pub fn divides(self, o: Mono) -> bool {
        self.x <= o.x && self.y <= o.y && self.z <= o.z
    }

    /// self / den componentwise; caller guarantees divisibility.
    pub fn quotient(self, den: Mono) -> Mono {
        debug_assert!(den.divides(self));
        Mono::new(self.x - den.x, self.y - den.y, self.z - den.z)
    }

    fn swapped(self, a: Var, b: Var) -> Mono {
        let mut m = self;
        let ea = self.get(a);
        let eb = self.get(b);
        match a {
            Var::X => m.x = eb,
            Var::Y => m.y = eb,
            Var::Z => m.z = eb,
        }
        match b {
            Var::X => m.x = ea,
            Var::Y => m.y = ea,
            Var::Z => m.z = ea,
        }
        m
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.deg()
            .cmp(&o.deg())
            .then(self.x.cmp(&o.x))
            .then(self.y.cmp(&o.y))
            .then(self.z.cmp(&o.z))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    X,
    Y,
    Z,
}

/// Coefficient contract for the polynomial engine: a copyable
/// characteristic-2 field element that can mint the zero and one of its own
/// field, so context never has to be threaded separately.
pub trait Coeff:
    Copy
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + std::ops::Add<Output = Self>
    + std::ops::Mul<Output = Self>
{
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn inv(&self) -> Result<Self, Error>;
}

impl Coeff for Fe {
    fn is_zero(&self) -> bool {
        Fe::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Fe::is_one(self)
    }
    fn zero_like(&self) -> Self {
        self.ctx().zero()
    }
    fn one_like(&self) -> Self {
        self.ctx().one()
    }
    fn inv(&self) -> Result<Self, Error> {
        Fe::inv(*self)
    }
}

impl Coeff for Xfe {
    fn is_zero(&self) -> bool {
        Xfe::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Xfe::is_one(self)
    }
    fn zero_like(&self) -> Self {
        self.ctx().zero()
    }
    fn one_like(&self) -> Self {
        self.ctx().one()
    }
    fn inv(&self) -> Result<Self, Error> {
        Xfe::inv(*self)
    }
}

/// Coefficient power by square and multiply; e = 0 gives one.
pub(crate) fn cpow<C: Coeff>(c: C, mut e: u32) -> C {
    let mut base = c;
    let mut acc = c.one_like();
    while e != 0 {
        if e & 1 == 1 {
            acc = acc * base;
        }
        base = base * base;
        e >>= 1;
    }
    acc
}

/// A sparse trivariate polynomial. Stored coefficients are never zero.
#[derive(Clone, PartialEq, Eq)]
pub struct TriPoly<C: Coeff> {
    terms: BTreeMap<Mono, C>,
}

impl<C: Coeff> Default for TriPoly<C> {
    fn default() -> Self {
        TriPoly::new()
    }
}

impl<C: Coeff> TriPoly<C> {
    pub fn new() -> Self {
        TriPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Mono::ONE)
    }

    pub fn term(c: C, m: Mono) -> Self {
        let mut p = Self::new();
        p.insert_add(m, c);
        p
    }

    pub fn var(c: C, v: Var) -> Self {
        let m = match v {
            Var::X => Mono::new(1, 0, 0),
            Var::Y => Mono::new(0, 1, 0),
            Var::Z => Mono::new(0, 0, 1),
        };
        Self::term(c, m)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Mono, C)>) -> Self {
        let mut p = Self::new();
        for (m, c) in it {
            p.insert_add(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &C)> {
        self.terms.iter()
    }

    pub fn coeff_at(&self, m: Mono) -> Option<C> {
        self.terms.get(&m).copied()
    }

    /// Total degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.deg())
    }

    pub fn leading(&self) -> Option<(Mono, C)> {
        self.terms.last_key_value().map(|(m, c)| (*m, *c))
    }

    fn any_coeff(&self) -> Option<C> {
        self.terms.values().next().copied()
    }

    /// Add c into the slot for m, dropping the entry if it cancels.
    pub fn insert_add(&mut self, m: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = *e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_in(&mut self, rhs: &TriPoly<C>) {
        for (&m, &c) in &rhs.terms {
            self.insert_add(m, c);
        }
    }

    pub fn scale(&self, c: C) -> TriPoly<C> {
        if c.is_zero() {
            return TriPoly::new();
        }
        let mut out = TriPoly::new();
        for (&m, &a) in &self.terms {
            out.insert_add(m, a * c);
        }
        out
    }

    pub fn mul_mono(&self, m: Mono) -> TriPoly<C> {
        let mut out = TriPoly::new();
        for (&t, &c) in &self.terms {
            out.insert_add(t.mul(m), c);
        }
        out
    }

    /// Frobenius squaring: cross terms vanish in characteristic 2.
    pub fn square(&self) -> TriPoly<C> {
        let mut out = TriPoly::new();
        for (&m, &c) in &self.terms {
            out.insert_add(m.doubled(), c * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> TriPoly<C> {
        if e == 0 {
            let one = self
                .any_coeff()
                .expect("zero polynomial to the zeroth power has no defined unit")
                .one_like();
            return TriPoly::constant(one);
        }
        let mut base = self.clone();
        let mut acc: Option<TriPoly<C>> = None;
        let mut k = e;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => &a * &base,
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

    /// Terms of total degree exactly d.
    pub fn homogeneous_component(&self, d: u32) -> TriPoly<C> {
        TriPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.deg() == d)
                .map(|(&m, &c)| (m, c))
                .collect(),
        }
    }

    /// Replace every occurrence of `v` by `rep`, other variables untouched.
    pub fn substitute(&self, v: Var, rep: &TriPoly<C>) -> TriPoly<C> {
        let mut out = TriPoly::new();
        let mut cache: BTreeMap<u16, TriPoly<C>> = BTreeMap::new();
        for (&m, &c) in &self.terms {
            let e = m.get(v);
            if e == 0 {
                out.insert_add(m, c);
                continue;
            }
            let p = cache
                .entry(e)
                .or_insert_with(|| rep.pow(e as u32))
                .mul_mono(m.without(v))
                .scale(c);
            out.add_in(&p);
        }
        out
    }

    /// Simultaneous substitution x := px, y := py, z := pz.
    pub fn compose3(
        &self,
        px: &TriPoly<C>,
        py: &TriPoly<C>,
        pz: &TriPoly<C>,
    ) -> TriPoly<C> {
        fn powc<'a, C: Coeff>(
            cache: &'a mut BTreeMap<u16, TriPoly<C>>,
            base: &TriPoly<C>,
            e: u16,
        ) -> &'a TriPoly<C> {
            cache.entry(e).or_insert_with(|| base.pow(e as u32))
        }
        let mut out = TriPoly::new();
        let (mut cx, mut cy, mut cz) = (BTreeMap::new(), BTreeMap::new(), BTreeMap::new());
        for (&m, &c) in &self.terms {
            let mut part = TriPoly::constant(c);
            if m.x > 0 {
                part = &part * powc(&mut cx, px, m.x);
            }
            if m.y > 0 {
                part = &part * powc(&mut cy, py, m.y);
            }
            if m.z > 0 {
                part = &part * powc(&mut cz, pz, m.z);
            }
            out.add_in(&part);
        }
        out
    }

    pub fn eval(&self, ax: C, ay: C, az: C) -> C {
        let mut acc = ax.zero_like();
        let (mut cx, mut cy, mut cz) = (BTreeMap::new(), BTreeMap::new(), BTreeMap::new());
        let powc = |cache: &mut BTreeMap<u16, C>, base: C, e: u16| -> C {
            *cache.entry(e).or_insert_with(|| cpow(base, e as u32))
        };
        for (&m, &c) in &self.terms {
            let mut v = c;
            if m.x > 0 {
                v = v * powc(&mut cx, ax, m.x);
            }
            if m.y > 0 {
                v = v * powc(&mut cy, ay, m.y);
            }
            if m.z > 0 {
                v = v * powc(&mut cz, az, m.z);
            }
            acc = acc + v;
        }
        acc
    }

    /// Exact division: self / d, or the leading monomial of the first
    /// residue whose lead d cannot cancel. For a true multiple that residue
    /// never appears, so aborting at the first stuck monomial is sound.
    pub fn divexact(&self, d: &TriPoly<C>) -> Result<TriPoly<C>, Error> {
        let (dm, dc) = d.leading().ok_or(Error::ZeroPolyDivisor)?;
        let dci = dc.inv()?;
        let mut r = self.clone();
        let mut q = TriPoly::new();
        while let Some((rm, rc)) = r.leading() {
            if !dm.divides(rm) {
                return Err(Error::NotDivisible {
                    x: rm.x,
                    y: rm.y,
                    z: rm.z,
                });
            }
            let qm = rm.quotient(dm);
            let qc = rc * dci;
            q.insert_add(qm, qc);
            // characteristic 2: subtraction is addition
            r.add_in(&d.mul_mono(qm).scale(qc));
        }
        Ok(q)
    }

    fn var_swapped(&self, a: Var, b: Var) -> TriPoly<C> {
        TriPoly {
            terms: self
                .terms
                .iter()
                .map(|(&m, &c)| (m.swapped(a, b), c))
                .collect(),
        }
    }

    /// Invariance under all six variable permutations, checked on the two
    /// generating transpositions.
    pub fn is_symmetric(&self) -> bool {
        self.var_swapped(Var::X, Var::Y) == *self && self.var_swapped(Var::Y, Var::Z) == *self
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(C) -> D) -> TriPoly<D> {
        let mut out = TriPoly::new();
        for (&m, &c) in &self.terms {
            out.insert_add(m, f(c));
        }
        out
    }
}

impl<C: Coeff> std::ops::Add for &TriPoly<C> {
    type Output = TriPoly<C>;
    fn add(self, rhs: &TriPoly<C>) -> TriPoly<C> {
        let mut out = self.clone();
        out.add_in(rhs);
        out
    }
}

impl<C: Coeff> std::ops::Add for TriPoly<C> {
    type Output = TriPoly<C>;
    fn add(mut self, rhs: TriPoly<C>) -> TriPoly<C> {
        self.add_in(&rhs);
        self
    }
}

impl<C: Coeff> std::ops::Mul for &TriPoly<C> {
    type Output = TriPoly<C>;
    fn mul(self, rhs: &TriPoly<C>) -> TriPoly<C> {
        let mut out = TriPoly::new();
        for (&m1, &c1) in &self.terms {
            for (&m2, &c2) in &rhs.terms {
                out.insert_add(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl<C: Coeff> std::ops::Mul for TriPoly<C> {
    type Output = TriPoly<C>;
    fn mul(self, rhs: TriPoly<C>) -> TriPoly<C> {
        &self * &rhs
    }
}

impl<C: Coeff> fmt::Display for TriPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{c}")?;
                continue;
            }
            let mut lead = true;
            if !c.is_one() {
                write!(f, "{c}")?;
                lead = false;
            }
            for (name, e) in [("x", m.x), ("y", m.y), ("z", m.z)] {
                if e == 0 {
                    continue;
                }
                if !lead {
                    write!(f, "*")?;
                }
                lead = false;
                if e == 1 {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for TriPoly<C> {
    // Debug mirrors Display; the grammar form is the canonical one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use proptest::prelude::*;

    fn gf2() -> FieldCtx {
        FieldCtx::new(1).unwrap()
    }

    fn vars(ctx: FieldCtx) -> (TriPoly<Fe>, TriPoly<Fe>, TriPoly<Fe>) {
        (
            TriPoly::var(ctx.one(), Var::X),
            TriPoly::var(ctx.one(), Var::Y),
            TriPoly::var(ctx.one(), Var::Z),
        )
    }

    #[test]
    fn grlex_order() {
        // degree first, then x, then y
        assert!(Mono::new(2, 0, 0) < Mono::new(0, 3, 0));
        assert!(Mono::new(1, 1, 0) > Mono::new(0, 2, 0));
        assert!(Mono::new(1, 0, 0) > Mono::new(0, 1, 0));
        assert!(Mono::new(0, 1, 0) > Mono::new(0, 0, 1));
        assert!(Mono::new(1, 0, 1) > Mono::new(0, 2, 0));
    }

    #[test]
    fn add_cancels() {
        let (x, y, z) = vars(gf2());
        let s = (&x + &y) + (&x + &z);
        assert_eq!(s, &y + &z);
        assert!((&s + &s).is_zero());
    }

    #[test]
    fn splitting_field_product() {
        // (x+y)(y+z)(z+x) in characteristic 2: the xyz terms cancel in pairs
        let (x, y, z) = vars(gf2());
        let a = (&(&x + &y) * &(&y + &z)) * (&z + &x);
        let expect = TriPoly::from_terms(
            [
                Mono::new(2, 1, 0),
                Mono::new(2, 0, 1),
                Mono::new(1, 2, 0),
                Mono::new(0, 2, 1),
                Mono::new(1, 0, 2),
                Mono::new(0, 1, 2),
            ]
            .into_iter()
            .map(|m| (m, gf2().one())),
        );
        assert_eq!(a, expect);
        assert!(a.is_symmetric());
    }

    #[test]
    fn pow_small_binomial() {
        let (x, y, _) = vars(gf2());
        let b = &x + &y;
        assert_eq!(b.pow(2), b.square());
        let cube = b.pow(3);
        let expect = TriPoly::from_terms(
            [
                Mono::new(3, 0, 0),
                Mono::new(2, 1, 0),
                Mono::new(1, 2, 0),
                Mono::new(0, 3, 0),
            ]
            .into_iter()
            .map(|m| (m, gf2().one())),
        );
        assert_eq!(cube, expect);
        assert_eq!(b.pow(0), TriPoly::constant(gf2().one()));
    }

    #[test]
    fn square_has_even_exponents() {
        let ctx = FieldCtx::new(4).unwrap();
        let p = TriPoly::from_terms([
            (Mono::new(1, 2, 0), ctx.el(0x3)),
            (Mono::new(0, 0, 3), ctx.el(0x7)),
            (Mono::ONE, ctx.el(0x1)),
        ]);
        let s = p.square();
        assert_eq!(s, &p * &p);
        for (m, _) in s.terms() {
            assert!(m.x % 2 == 0 && m.y % 2 == 0 && m.z % 2 == 0);
        }
    }

    #[test]
    fn divexact_reports_stuck_monomial() {
        let (x, y, _) = vars(gf2());
        let x2 = x.square();
        assert_eq!(
            x2.divexact(&y),
            Err(Error::NotDivisible { x: 2, y: 0, z: 0 })
        );
        assert_eq!(x2.divexact(&TriPoly::new()), Err(Error::ZeroPolyDivisor));
    }

    #[test]
    fn divexact_mixed_divisor() {
        // (x + y + z)(x^2 + y) / (x + y + z) recovers the cofactor even
        // though reduction interleaves both divisor terms.
        let (x, y, z) = vars(gf2());
        let d = &(&x + &y) + &z;
        let c = &x.square() + &y;
        let prod = &d * &c;
        assert_eq!(prod.divexact(&d).unwrap(), c);
        assert!(prod.divexact(&x).is_err());
    }

    #[test]
    fn substitute_shifts_one_variable() {
        let (x, y, z) = vars(gf2());
        let p = &x * &y;
        let sub = p.substitute(Var::Y, &(&y + &z));
        assert_eq!(sub, &(&x * &y) + &(&x * &z));
        // variables in the replacement are not re-substituted
        let q = y.substitute(Var::Y, &(&y + &x));
        assert_eq!(q, &y + &x);
    }

    #[test]
    fn compose3_identity_and_rotation() {
        let ctx = FieldCtx::new(3).unwrap();
        let (x, y, z) = vars(ctx);
        let p = TriPoly::from_terms([
            (Mono::new(2, 1, 0), ctx.el(0x5)),
            (Mono::new(0, 0, 2), ctx.el(0x3)),
        ]);
        assert_eq!(p.compose3(&x, &y, &z), p);
        let rot = p.compose3(&y, &z, &x);
        assert_eq!(
            rot,
            TriPoly::from_terms([
                (Mono::new(0, 2, 1), ctx.el(0x5)),
                (Mono::new(2, 0, 0), ctx.el(0x3)),
            ])
        );
    }

    #[test]
    fn eval_matches_term_sum() {
        let ctx = FieldCtx::new(4).unwrap();
        let p = TriPoly::from_terms([
            (Mono::new(3, 0, 1), ctx.el(0x9)),
            (Mono::new(0, 2, 0), ctx.el(0x4)),
            (Mono::ONE, ctx.el(0x1)),
        ]);
        for bits in [(0x2, 0x7, 0xb), (0x0, 0x1, 0xf)] {
            let (a, b, c) = (ctx.el(bits.0), ctx.el(bits.1), ctx.el(bits.2));
            let direct = ctx.el(0x9) * a.pow(3) * c + ctx.el(0x4) * b * b + ctx.one();
            assert_eq!(p.eval(a, b, c), direct);
        }
    }

    #[test]
    fn homogeneous_components_partition() {
        let ctx = FieldCtx::new(2).unwrap();
        let p = TriPoly::from_terms([
            (Mono::new(2, 0, 0), ctx.el(0x3)),
            (Mono::new(1, 1, 0), ctx.el(0x2)),
            (Mono::new(1, 0, 0), ctx.el(0x1)),
            (Mono::ONE, ctx.el(0x3)),
        ]);
        let mut back = TriPoly::new();
        for d in 0..=p.degree().unwrap() {
            back.add_in(&p.homogeneous_component(d));
        }
        assert_eq!(back, p);
        assert_eq!(p.homogeneous_component(2).num_terms(), 2);
    }

    #[test]
    fn symmetry_detection() {
        let (x, y, z) = vars(gf2());
        let sym = &(&(&x * &y) + &(&x * &z)) + &(&y * &z);
        assert!(sym.is_symmetric());
        assert!(!(&x + &y).is_symmetric());
        assert!(TriPoly::<Fe>::new().is_symmetric());
    }

    #[test]
    fn display_grammar_form() {
        let ctx = FieldCtx::new(4).unwrap();
        let p = TriPoly::from_terms([
            (Mono::new(2, 1, 0), ctx.el(0x3)),
            (Mono::new(0, 0, 1), ctx.el(0x1)),
            (Mono::ONE, ctx.el(0x9)),
        ]);
        assert_eq!(p.to_string(), "0x3*x^2*y + z + 0x9");
        assert_eq!(TriPoly::<Fe>::new().to_string(), "0");
    }

    fn arb_poly(max_terms: usize) -> impl Strategy<Value = TriPoly<Fe>> {
        let ctx = FieldCtx::new(4).unwrap();
        proptest::collection::vec(((0u16..5, 0u16..5, 0u16..5), 0u64..16), 0..max_terms)
            .prop_map(move |ts| {
                TriPoly::from_terms(
                    ts.into_iter()
                        .map(|((x, y, z), b)| (Mono::new(x, y, z), ctx.el(b))),
                )
            })
    }

    proptest! {
        #[test]
        fn prop_add_commutes(a in arb_poly(6), b in arb_poly(6)) {
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn prop_mul_commutes(a in arb_poly(6), b in arb_poly(6)) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn prop_mul_associates(a in arb_poly(4), b in arb_poly(4), c in arb_poly(4)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn prop_mul_distributes(a in arb_poly(4), b in arb_poly(4), c in arb_poly(4)) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn prop_square_is_self_product(a in arb_poly(6)) {
            prop_assert_eq!(a.square(), &a * &a);
        }

        #[test]
        fn prop_divexact_recovers_cofactor(a in arb_poly(5), b in arb_poly(5)) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.divexact(&b).unwrap(), a);
        }
    }
}
