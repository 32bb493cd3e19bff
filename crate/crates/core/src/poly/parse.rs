//! Text form of polynomials.
//!
//! ```text
//! poly   := term ('+' term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ['^' nat]
//! var    := 'x' | 'y' | 'z'
//! coeff  := '0x' hex | decimal
//! ```
//!
//! Whitespace is free between tokens. Coefficients are field-element bit
//! patterns; repeated variables inside one term accumulate their exponents.
//! `Display` on the polynomial types emits exactly this grammar, so printed
//! values parse back unchanged.

use super::vbf::Vbf;
use super::{Mono, TriPoly, Var};
use crate::error::Error;
use crate::field::{Fe, FieldCtx};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Tok {
    Plus,
    Star,
    Caret,
    Var(Var),
    Num(u64),
}

fn bad(at: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        at,
        reason: reason.into(),
    }
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, Error> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        match b[i] {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            b'*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            b'^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            b'x' => {
                out.push((i, Tok::Var(Var::X)));
                i += 1;
            }
            b'y' => {
                out.push((i, Tok::Var(Var::Y)));
                i += 1;
            }
            b'z' => {
                out.push((i, Tok::Var(Var::Z)));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                let val = if b[i] == b'0' && b.get(i + 1) == Some(&b'x') {
                    i += 2;
                    let digits = i;
                    while i < b.len() && b[i].is_ascii_hexdigit() {
                        i += 1;
                    }
                    if i == digits {
                        return Err(bad(start, "incomplete hex literal"));
                    }
                    u64::from_str_radix(&s[digits..i], 16)
                        .map_err(|_| bad(start, "hex literal does not fit in 64 bits"))?
                } else {
                    while i < b.len() && b[i].is_ascii_digit() {
                        i += 1;
                    }
                    s[start..i]
                        .parse::<u64>()
                        .map_err(|_| bad(start, "number does not fit in 64 bits"))?
                };
                out.push((start, Tok::Num(val)));
            }
            c => return Err(bad(i, format!("unexpected character {:?}", c as char))),
        }
    }
    Ok(out)
}

struct RawTerm {
    coeff: Option<(usize, u64)>,
    factors: Vec<(usize, Var, u64)>,
}

fn parse_factor(
    toks: &[(usize, Tok)],
    i: &mut usize,
    end: usize,
) -> Result<(usize, Var, u64), Error> {
    let (at, v) = match toks.get(*i) {
        Some(&(at, Tok::Var(v))) => (at, v),
        Some(&(at, _)) => return Err(bad(at, "expected a variable")),
        None => return Err(bad(end, "expected a variable")),
    };
    *i += 1;
    let mut e = 1u64;
    if let Some(&(_, Tok::Caret)) = toks.get(*i) {
        *i += 1;
        match toks.get(*i) {
            Some(&(_, Tok::Num(n))) => {
                e = n;
                *i += 1;
            }
            Some(&(at, _)) => return Err(bad(at, "expected an exponent after '^'")),
            None => return Err(bad(end, "expected an exponent after '^'")),
        }
    }
    Ok((at, v, e))
}

fn parse_raw(s: &str) -> Result<Vec<RawTerm>, Error> {
    let toks = lex(s)?;
    let end = s.len();
    if toks.is_empty() {
        return Err(bad(0, "empty polynomial"));
    }
    let mut terms = Vec::new();
    let mut i = 0;
    loop {
        let mut term = RawTerm {
            coeff: None,
            factors: Vec::new(),
        };
        match toks.get(i) {
            Some(&(at, Tok::Num(v))) => {
                term.coeff = Some((at, v));
                i += 1;
            }
            Some(&(_, Tok::Var(_))) => {
                term.factors.push(parse_factor(&toks, &mut i, end)?);
            }
            Some(&(at, _)) => return Err(bad(at, "expected a coefficient or variable")),
            None => return Err(bad(end, "expected a term after '+'")),
        }
        while let Some(&(_, Tok::Star)) = toks.get(i) {
            i += 1;
            term.factors.push(parse_factor(&toks, &mut i, end)?);
        }
        terms.push(term);
        match toks.get(i) {
            None => break,
            Some(&(_, Tok::Plus)) => i += 1,
            Some(&(at, _)) => return Err(bad(at, "expected '+' between terms")),
        }
    }
    Ok(terms)
}

fn term_coeff(ctx: FieldCtx, coeff: Option<(usize, u64)>) -> Result<Fe, Error> {
    match coeff {
        None => Ok(ctx.one()),
        Some((at, bits)) => ctx.elem(bits).map_err(|_| {
            bad(
                at,
                format!("coefficient 0x{bits:x} out of range for GF(2^{})", ctx.m()),
            )
        }),
    }
}

/// Parse a trivariate polynomial with coefficients in `ctx`.
pub fn parse_tri(ctx: FieldCtx, s: &str) -> Result<TriPoly<Fe>, Error> {
    let mut p = TriPoly::new();
    for t in parse_raw(s)? {
        let c = term_coeff(ctx, t.coeff)?;
        let mut m = Mono::ONE;
        for (at, v, e) in t.factors {
            let total = m.get(v) as u64 + e;
            if total > u16::MAX as u64 {
                return Err(bad(at, format!("exponent {total} exceeds {}", u16::MAX)));
            }
            m = match v {
                Var::X => Mono::new(total as u16, m.y, m.z),
                Var::Y => Mono::new(m.x, total as u16, m.z),
                Var::Z => Mono::new(m.x, m.y, total as u16),
            };
        }
        p.insert_add(m, c);
    }
    Ok(p)
}

/// Parse a univariate polynomial in x with coefficients in `ctx`.
pub fn parse_vbf(ctx: FieldCtx, s: &str) -> Result<Vbf, Error> {
    let mut p = Vbf::new(ctx);
    for t in parse_raw(s)? {
        let c = term_coeff(ctx, t.coeff)?;
        let mut e = 0u64;
        for (at, v, fe) in t.factors {
            if v != Var::X {
                return Err(bad(at, "only the variable x is allowed here"));
            }
            e = e
                .checked_add(fe)
                .ok_or_else(|| bad(at, "exponent does not fit in 64 bits"))?;
        }
        p.insert_add(e, c);
    }
    Ok(p)
}
