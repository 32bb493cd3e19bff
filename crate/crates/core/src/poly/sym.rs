//! Polynomials in the elementary symmetric functions s1, s2, s3 of x, y, z,
//! and the translation between that basis and symmetric trivariate
//! polynomials.
//!
//! Internally a `SymPoly` reuses the trivariate map with the x/y/z exponent
//! slots holding the exponents of s1/s2/s3. Conversion from a symmetric
//! polynomial runs the classical leading-term reduction, which under grlex
//! strictly decreases the lead each step and stays inside one total degree.

use super::{Coeff, Mono, TriPoly, Var};
use crate::error::Error;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct SymPoly<C: Coeff>(TriPoly<C>);

impl<C: Coeff> Default for SymPoly<C> {
    fn default() -> Self {
        SymPoly(TriPoly::new())
    }
}

impl<C: Coeff> SymPoly<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn constant(c: C) -> Self {
        SymPoly(TriPoly::constant(c))
    }

    /// Single term c * s1^a s2^b s3^d, with the exponents passed as a Mono.
    pub fn term(c: C, m: Mono) -> Self {
        SymPoly(TriPoly::term(c, m))
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Mono, C)>) -> Self {
        SymPoly(TriPoly::from_terms(it))
    }

    /// The underlying polynomial with x/y/z slots meaning s1/s2/s3.
    pub fn as_basis_poly(&self) -> &TriPoly<C> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &C)> {
        self.0.terms()
    }

    pub fn add_in(&mut self, rhs: &SymPoly<C>) {
        self.0.add_in(&rhs.0);
    }

    /// Multiply by the monomial s1^a s2^b s3^d.
    pub fn mul_mono(&self, m: Mono) -> SymPoly<C> {
        SymPoly(self.0.mul_mono(m))
    }

    pub fn scale(&self, c: C) -> SymPoly<C> {
        SymPoly(self.0.scale(c))
    }

    /// Substitute the defining expansions s1 = x+y+z, s2 = xy+xz+yz,
    /// s3 = xyz to land back in the trivariate ring.
    pub fn expand(&self) -> TriPoly<C> {
        let one = match self.0.terms().next() {
            Some((_, c)) => c.one_like(),
            None => return TriPoly::new(),
        };
        let x = TriPoly::var(one, Var::X);
        let y = TriPoly::var(one, Var::Y);
        let z = TriPoly::var(one, Var::Z);
        let e1 = &(&x + &y) + &z;
        let e2 = &(&(&x * &y) + &(&x * &z)) + &(&y * &z);
        let e3 = &(&x * &y) * &z;
        self.0.compose3(&e1, &e2, &e3)
    }
}

impl<C: Coeff> std::ops::Add for &SymPoly<C> {
    type Output = SymPoly<C>;
    fn add(self, rhs: &SymPoly<C>) -> SymPoly<C> {
        SymPoly(&self.0 + &rhs.0)
    }
}

impl<C: Coeff> std::ops::Mul for &SymPoly<C> {
    type Output = SymPoly<C>;
    fn mul(self, rhs: &SymPoly<C>) -> SymPoly<C> {
        SymPoly(&self.0 * &rhs.0)
    }
}

impl<C: Coeff> fmt::Display for SymPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.0.terms().collect::<Vec<_>>().into_iter().rev() {
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
            for (name, e) in [("s1", m.x), ("s2", m.y), ("s3", m.z)] {
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

impl<C: Coeff> fmt::Debug for SymPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Rewrite a symmetric trivariate polynomial in the s1/s2/s3 basis.
///
/// Errors with the offending monomial if some leading term has exponents
/// out of descending order, which certifies the input is not symmetric.
pub fn to_symmetric<C: Coeff>(p: &TriPoly<C>) -> Result<SymPoly<C>, Error> {
    let mut r = p.clone();
    let mut out = SymPoly::new();
    while let Some((m, c)) = r.leading() {
        if !(m.x >= m.y && m.y >= m.z) {
            return Err(Error::NotSymmetric {
                x: m.x,
                y: m.y,
                z: m.z,
            });
        }
        let sm = Mono::new(m.x - m.y, m.y - m.z, m.z);
        let piece = SymPoly::term(c, sm);
        // leading of the expansion is exactly (m, c); adding cancels it
        r.add_in(&piece.expand());
        out.add_in(&piece);
    }
    Ok(out)
}

/// The power sum p_i = x^i + y^i + z^i in the s-basis, by the Newton
/// recursion p_i = s1 p_{i-1} + s2 p_{i-2} + s3 p_{i-3} (signs collapse in
/// characteristic 2), seeded with p_0 = 1, p_1 = s1, p_2 = s1^2,
/// p_3 = s1^3 + s1 s2 + s3.
pub fn power_sum<C: Coeff>(one: C, i: u32) -> SymPoly<C> {
    debug_assert!(one.is_one(), "power_sum needs the field's one");
    let seeds: [SymPoly<C>; 4] = [
        SymPoly::constant(one),
        SymPoly::term(one, Mono::new(1, 0, 0)),
        SymPoly::term(one, Mono::new(2, 0, 0)),
        SymPoly::from_terms([
            (Mono::new(3, 0, 0), one),
            (Mono::new(1, 1, 0), one),
            (Mono::new(0, 0, 1), one),
        ]),
    ];
    if i <= 3 {
        return seeds[i as usize].clone();
    }
    let mut window = seeds;
    // window holds p_{k-4}, p_{k-3}, p_{k-2}, p_{k-1} rotating in place
    for _ in 4..=i {
        let next = &(&window[3].mul_mono(Mono::new(1, 0, 0))
            + &window[2].mul_mono(Mono::new(0, 1, 0)))
            + &window[1].mul_mono(Mono::new(0, 0, 1));
        window.rotate_left(1);
        window[3] = next;
    }
    window[3].clone()
}
