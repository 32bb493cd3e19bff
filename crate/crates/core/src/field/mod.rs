//! GF(2^m) in polynomial basis, m <= 16.
//!
//! Elements are coefficient bit-vectors (bit i holds the coefficient of
//! t^i) reduced modulo a fixed irreducible polynomial. Each element carries
//! its context; operations on mismatched contexts panic, and the checked
//! variants return [`Error::ContextMismatch`] instead.

pub mod ext;

use crate::error::Error;
use std::fmt;

/// Largest supported extension degree of the base field.
pub const MAX_M: u32 = 16;

/// Default modulus per degree: the irreducible polynomial over GF(2) whose
/// coefficient bit-string is numerically smallest. Frozen; the generating
/// search is `smallest_irreducible`, cross-checked in tests.
const DEFAULT_MODULUS: [u64; 17] = [
    0, 0x3, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11b, 0x203, 0x409, 0x805, 0x1009, 0x201b, 0x4021,
    0x8003, 0x1002b,
];

/// Degree of a nonzero GF(2) polynomial in bit-vector form.
fn poly_deg(bits: u64) -> u32 {
    debug_assert!(bits != 0);
    63 - bits.leading_zeros()
}

/// Carry-less product of two GF(2) polynomials.
fn clmul(a: u64, b: u64) -> u64 {
    let mut acc = 0;
    let mut b = b;
    while b != 0 {
        acc ^= a << b.trailing_zeros();
        b &= b - 1;
    }
    acc
}

/// Remainder of a GF(2) polynomial modulo another (nonzero) one.
fn poly_rem(mut a: u64, m: u64) -> u64 {
    let dm = poly_deg(m);
    while a != 0 && poly_deg(a) >= dm {
        a ^= m << (poly_deg(a) - dm);
    }
    a
}

/// Exhaustive irreducibility test over GF(2) by trial division,
/// for degrees up to [`MAX_M`].
pub fn is_irreducible(f: u64) -> bool {
    if f < 2 {
        return false;
    }
    let d = poly_deg(f);
    if d == 0 {
        return false;
    }
    for g in 2..1u64 << (d / 2 + 1) {
        if poly_deg(g) >= 1 && poly_rem(f, g) == 0 {
            return false;
        }
    }
    true
}

/// Numerically smallest irreducible polynomial of degree m over GF(2).
pub fn smallest_irreducible(m: u32) -> u64 {
    // Constant term must be 1 (t must not divide), so step by 2.
    ((1u64 << m) + 1..1u64 << (m + 1))
        .step_by(2)
        .find(|&f| is_irreducible(f))
        .expect("an irreducible polynomial exists in every degree")
}

/// A binary field GF(2^m): degree plus modulus. Cheap to copy; equality is
/// componentwise, so two contexts agree iff they define the same field
/// representation.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    m: u32,
    modulus: u64,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}; 0x{:x})", self.m, self.modulus)
    }
}

impl FieldCtx {
    /// Field with the frozen default modulus for degree m.
    pub fn new(m: u32) -> Result<Self, Error> {
        if m == 0 || m > MAX_M {
            return Err(Error::BadDegree { m });
        }
        Ok(FieldCtx {
            m,
            modulus: DEFAULT_MODULUS[m as usize],
        })
    }

    /// Field with an explicit modulus; validated for degree, constant term
    /// and irreducibility.
    pub fn with_modulus(m: u32, modulus: u64) -> Result<Self, Error> {
        if m == 0 || m > MAX_M {
            return Err(Error::BadDegree { m });
        }
        if modulus >> m != 1 {
            return Err(Error::BadModulus {
                m,
                modulus,
                reason: "leading coefficient must be exactly t^m",
            });
        }
        if modulus & 1 == 0 {
            return Err(Error::BadModulus {
                m,
                modulus,
                reason: "constant term must be 1",
            });
        }
        if !is_irreducible(modulus) {
            return Err(Error::BadModulus {
                m,
                modulus,
                reason: "reducible polynomial",
            });
        }
        Ok(FieldCtx { m, modulus })
    }

    /// Parse a field specification string `m=<int>[,mod=0x<hex>]`.
    pub fn parse_spec(spec: &str) -> Result<Self, Error> {
        let bad = |reason: &str| Error::BadFieldSpec {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let mut m = None;
        let mut modulus = None;
        for part in spec.split(',') {
            let part = part.trim();
            if let Some(v) = part.strip_prefix("m=") {
                m = Some(v.trim().parse::<u32>().map_err(|_| bad("bad m value"))?);
            } else if let Some(v) = part.strip_prefix("mod=") {
                let v = v
                    .trim()
                    .strip_prefix("0x")
                    .ok_or_else(|| bad("modulus must be 0x-hex"))?;
                modulus = Some(u64::from_str_radix(v, 16).map_err(|_| bad("bad modulus hex"))?);
            } else {
                return Err(bad("expected m=<int> or mod=0x<hex> parts"));
            }
        }
        let m = m.ok_or_else(|| bad("missing m="))?;
        match modulus {
            Some(md) => FieldCtx::with_modulus(m, md),
            None => FieldCtx::new(m),
        }
    }

    /// Specification string round-tripping through [`FieldCtx::parse_spec`].
    pub fn spec_string(&self) -> String {
        format!("m={},mod=0x{:x}", self.m, self.modulus)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of field elements, q = 2^m.
    pub fn order(&self) -> u64 {
        1 << self.m
    }

    pub fn zero(&self) -> Fe {
        Fe { bits: 0, ctx: *self }
    }

    pub fn one(&self) -> Fe {
        Fe { bits: 1, ctx: *self }
    }

    /// Element from a bit-vector, checked against the field size.
    pub fn elem(&self, bits: u64) -> Result<Fe, Error> {
        if bits >> self.m != 0 {
            return Err(Error::ElemOutOfRange { bits, m: self.m });
        }
        Ok(Fe { bits, ctx: *self })
    }

    pub(crate) fn el(&self, bits: u64) -> Fe {
        debug_assert!(bits >> self.m == 0);
        Fe { bits, ctx: *self }
    }

    /// All field elements in ascending bit-pattern order.
    pub fn elems(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.order()).map(move |b| self.el(b))
    }

    /// Embedding of this field into `target` (requires m | target.m).
    pub fn embedding_into(&self, target: FieldCtx) -> Result<Embedding, Error> {
        Embedding::new(*self, target)
    }
}

/// An element of GF(2^m), tagged with its context.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fe {
    bits: u64,
    ctx: FieldCtx,
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{:x}@{:?}", self.bits, self.ctx)
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{:x}", self.bits)
    }
}

impl Fe {
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_one(&self) -> bool {
        self.bits == 1
    }

    fn require_ctx(&self, rhs: &Fe) -> Result<(), Error> {
        if self.ctx == rhs.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: format!("{:?}", self.ctx),
                right: format!("{:?}", rhs.ctx),
            })
        }
    }

    /// Sum, or a context-mismatch error.
    pub fn checked_add(self, rhs: Fe) -> Result<Fe, Error> {
        self.require_ctx(&rhs)?;
        Ok(self.ctx.el(self.bits ^ rhs.bits))
    }

    /// Product, or a context-mismatch error.
    pub fn checked_mul(self, rhs: Fe) -> Result<Fe, Error> {
        self.require_ctx(&rhs)?;
        let prod = clmul(self.bits, rhs.bits);
        Ok(self.ctx.el(poly_rem(prod, self.ctx.modulus)))
    }

    pub fn square(self) -> Fe {
        self * self
    }

    /// Power by square-and-multiply; 0^0 = 1 by convention.
    pub fn pow(self, mut e: u64) -> Fe {
        let mut base = self;
        let mut acc = self.ctx.one();
        while e != 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via a^(q-2); errors on zero.
    pub fn inv(self) -> Result<Fe, Error> {
        if self.is_zero() {
            return Err(Error::InverseOfZero);
        }
        Ok(self.pow(self.ctx.order() - 2))
    }
}

impl std::ops::Add for Fe {
    type Output = Fe;
    fn add(self, rhs: Fe) -> Fe {
        self.checked_add(rhs).expect("field context mismatch")
    }
}

impl std::ops::AddAssign for Fe {
    fn add_assign(&mut self, rhs: Fe) {
        *self = *self + rhs;
    }
}

impl std::ops::Mul for Fe {
    type Output = Fe;
    fn mul(self, rhs: Fe) -> Fe {
        self.checked_mul(rhs).expect("field context mismatch")
    }
}

impl std::ops::MulAssign for Fe {
    fn mul_assign(&mut self, rhs: Fe) {
        *self = *self * rhs;
    }
}

/// A field homomorphism GF(2^j) -> GF(2^k) for j | k, realized by sending
/// the source generator t to the numerically smallest root of the source
/// modulus in the target field. Deterministic for fixed contexts.
#[derive(Clone, Debug)]
pub struct Embedding {
    from: FieldCtx,
    to: FieldCtx,
    /// Image of t^i for i < from.m, as target bit-vectors.
    gen_powers: Vec<u64>,
}

impl Embedding {
    pub fn new(from: FieldCtx, to: FieldCtx) -> Result<Self, Error> {
        if to.m % from.m != 0 {
            return Err(Error::EmbeddingUnavailable {
                from_m: from.m,
                to_m: to.m,
            });
        }
        // Smallest root of the source modulus in the target field. One
        // exists exactly when from.m divides to.m.
        let root = to
            .elems()
            .find(|r| {
                let mut acc = to.zero();
                for i in (0..=from.m).rev() {
                    acc = acc * *r;
                    if from.modulus >> i & 1 == 1 {
                        acc += to.one();
                    }
                }
                acc.is_zero()
            })
            .ok_or(Error::EmbeddingUnavailable {
                from_m: from.m,
                to_m: to.m,
            })?;
        let mut gen_powers = Vec::with_capacity(from.m as usize);
        let mut p = to.one();
        for _ in 0..from.m {
            gen_powers.push(p.bits());
            p = p * root;
        }
        Ok(Embedding {
            from,
            to,
            gen_powers,
        })
    }

    pub fn from_ctx(&self) -> FieldCtx {
        self.from
    }

    pub fn to_ctx(&self) -> FieldCtx {
        self.to
    }

    /// Map an element along the embedding. Panics on context mismatch.
    pub fn map(&self, a: Fe) -> Fe {
        assert!(a.ctx == self.from, "embedding applied to foreign element");
        let mut bits = 0;
        for (i, g) in self.gen_powers.iter().enumerate() {
            if a.bits >> i & 1 == 1 {
                bits ^= g;
            }
        }
        self.to.el(bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent multiplication oracle: schoolbook product followed by
    /// textbook long division, written against the definitions only.
    fn mul_longdiv(a: u64, b: u64, m: u32, modulus: u64) -> u64 {
        let mut prod = 0u64;
        for i in 0..64 {
            if a >> i & 1 == 1 {
                prod ^= b << i;
            }
        }
        let mut rem = prod;
        for i in (m..64).rev() {
            if rem >> i & 1 == 1 {
                rem ^= modulus << (i - m);
            }
        }
        rem
    }

    #[test]
    fn default_table_matches_regeneration() {
        for m in 1..=MAX_M {
            assert_eq!(
                DEFAULT_MODULUS[m as usize],
                smallest_irreducible(m),
                "frozen modulus for m={m}"
            );
        }
    }

    #[test]
    fn gf16_product_example() {
        // t * (t^3 + 1) = t^4 + t = 1 mod t^4 + t + 1.
        let f = FieldCtx::new(4).unwrap();
        assert_eq!(f.modulus(), 0x13);
        let a = f.elem(0x2).unwrap();
        let b = f.elem(0x9).unwrap();
        assert_eq!((a * b).bits(), 0x1);
        assert_eq!(mul_longdiv(0x2, 0x9, 4, 0x13), 0x1);
    }

    #[test]
    fn mul_matches_longdiv_oracle() {
        for m in [2u32, 3, 4, 5] {
            let f = FieldCtx::new(m).unwrap();
            for a in f.elems() {
                for b in f.elems() {
                    assert_eq!(
                        (a * b).bits(),
                        mul_longdiv(a.bits(), b.bits(), m, f.modulus())
                    );
                }
            }
        }
    }

    #[test]
    fn add_is_self_inverse() {
        let f = FieldCtx::new(3).unwrap();
        for a in f.elems() {
            assert!((a + a).is_zero());
        }
    }

    #[test]
    fn pow_order_is_identity() {
        let f = FieldCtx::new(3).unwrap();
        for a in f.elems().skip(1) {
            assert!(a.pow(f.order() - 1).is_one());
        }
    }

    #[test]
    fn field_axioms_sampled() {
        let f = FieldCtx::new(4).unwrap();
        for a in f.elems() {
            for b in f.elems() {
                assert_eq!(a * b, b * a);
                for c in f.elems().step_by(5) {
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
    }

    #[test]
    fn inverse_works_and_rejects_zero() {
        let f = FieldCtx::new(5).unwrap();
        assert_eq!(f.zero().inv(), Err(Error::InverseOfZero));
        for a in f.elems().skip(1) {
            assert!((a * a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn modulus_validation() {
        // t^4 + 1 = (t+1)^4 is reducible.
        assert!(matches!(
            FieldCtx::with_modulus(4, 0x11),
            Err(Error::BadModulus { .. })
        ));
        // missing leading term
        assert!(matches!(
            FieldCtx::with_modulus(4, 0xb),
            Err(Error::BadModulus { .. })
        ));
        // valid alternative modulus for m=4: t^4 + t^3 + 1
        let f = FieldCtx::with_modulus(4, 0x19).unwrap();
        assert_eq!(f.modulus(), 0x19);
    }

    #[test]
    fn spec_string_roundtrip() {
        let f = FieldCtx::parse_spec("m=5").unwrap();
        assert_eq!(f.modulus(), 0x25);
        let g = FieldCtx::parse_spec("m=4, mod=0x19").unwrap();
        assert_eq!(g.modulus(), 0x19);
        assert_eq!(FieldCtx::parse_spec(&g.spec_string()).unwrap(), g);
        assert!(FieldCtx::parse_spec("mod=0x13").is_err());
        assert!(FieldCtx::parse_spec("m=zero").is_err());
    }

    #[test]
    fn out_of_range_elem_rejected() {
        let f = FieldCtx::new(3).unwrap();
        assert!(f.elem(8).is_err());
        assert!(f.elem(7).is_ok());
    }

    #[test]
    #[should_panic(expected = "field context mismatch")]
    fn cross_context_add_panics() {
        let a = FieldCtx::new(3).unwrap().one();
        let b = FieldCtx::new(4).unwrap().one();
        let _ = a + b;
    }

    #[test]
    fn checked_ops_report_mismatch() {
        let a = FieldCtx::new(3).unwrap().one();
        let b = FieldCtx::new(4).unwrap().one();
        assert!(matches!(
            a.checked_mul(b),
            Err(Error::ContextMismatch { .. })
        ));
    }

    #[test]
    fn embedding_prime_subfield_is_identity_on_bits() {
        let f2 = FieldCtx::new(1).unwrap();
        let f8 = FieldCtx::new(3).unwrap();
        let e = f2.embedding_into(f8).unwrap();
        assert_eq!(e.map(f2.zero()).bits(), 0);
        assert_eq!(e.map(f2.one()).bits(), 1);
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let f4 = FieldCtx::new(2).unwrap();
        let f16 = FieldCtx::new(4).unwrap();
        let e = f4.embedding_into(f16).unwrap();
        // injective
        let images: std::collections::BTreeSet<u64> =
            f4.elems().map(|a| e.map(a).bits()).collect();
        assert_eq!(images.len(), 4);
        for a in f4.elems() {
            for b in f4.elems() {
                assert_eq!(e.map(a + b), e.map(a) + e.map(b));
                assert_eq!(e.map(a * b), e.map(a) * e.map(b));
            }
        }
        // no embedding of GF(4) into GF(32)
        assert!(f4.embedding_into(FieldCtx::new(5).unwrap()).is_err());
    }
}
