//! Exact arithmetic in the tower GF(p) ⊂ GF(q) ⊂ GF(q^m), q = p^s.
//!
//! Elements of GF(q) are plain `u64` symbols in their canonical encoding
//! `Σ c_i p^i`. Elements of GF(q^m) are [`FieldElem`] values carrying the
//! encoding `Σ enc(coeff_j) q^j` together with the tag of their context.
//!
//! Both moduli are the smallest monic irreducibles (by little-endian
//! coefficient encoding) of the required degree, and the primitive element is
//! the smallest encoding of full multiplicative order, so a context is fully
//! determined by `(p, s, m)`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Largest supported field size is `2^SIZE_BUDGET_BITS` elements.
pub const SIZE_BUDGET_BITS: u32 = 40;

/// Fields up to this size get precomputed addition and multiplication tables.
const TABLE_LIMIT: u64 = 256;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

fn budgeted_pow(base: u64, exp: u32) -> Result<u64> {
    match checked_pow(base, exp) {
        Some(v) if v <= 1u64 << SIZE_BUDGET_BITS => Ok(v),
        _ => Err(Error::SizeBudget {
            base,
            exp,
            budget_bits: SIZE_BUDGET_BITS,
        }),
    }
}

/// `N_modulus(x)`: 0 when `modulus | x`, 1 otherwise.
pub fn np_indicator(x: i64, modulus: u64) -> u8 {
    assert!(modulus >= 2, "modulus must be at least 2");
    u8::from(x.rem_euclid(modulus as i64) != 0)
}

/// Identifies a field context. Contexts are canonical, so equal tags mean
/// identical fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FieldTag {
    pub p: u64,
    pub s: u32,
    pub m: u32,
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(({}^{})^{})", self.p, self.s, self.m)
    }
}

struct Tables {
    add: Vec<u32>,
    neg: Vec<u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

/// The field GF(q), q = p^s, over which codes and sequences live.
pub struct BaseField {
    p: u64,
    s: u32,
    q: u64,
    /// Monic irreducible of degree `s` over GF(p), lowest degree first.
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

impl fmt::Debug for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BaseField")
            .field("p", &self.p)
            .field("s", &self.s)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for BaseField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.s == other.s
    }
}

impl Eq for BaseField {}

impl BaseField {
    /// The prime field GF(p). Its modulus is the degree-one polynomial `x`.
    pub fn prime(p: u64) -> Result<Arc<Self>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        budgeted_pow(p, 1)?;
        Ok(Arc::new(BaseField {
            p,
            s: 1,
            q: p,
            modulus: vec![0, 1],
            tables: None,
        }))
    }

    pub fn new(p: u64, s: u32) -> Result<Arc<Self>> {
        if s == 0 {
            return Err(Error::InvalidParameter("s must be positive".into()));
        }
        let prime = Self::prime(p)?;
        if s == 1 {
            return Ok(prime);
        }
        let q = budgeted_pow(p, s)?;
        let modulus = canonical_irreducible(&prime, s as usize)?;
        let mut field = BaseField {
            p,
            s,
            q,
            modulus: modulus.coeffs().to_vec(),
            tables: None,
        };
        if q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(Arc::new(field))
    }

    fn build_tables(&self) -> Tables {
        let q = self.q as usize;
        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        let mut neg = vec![0u32; q];
        let mut inv = vec![0u32; q];
        for a in 0..q {
            neg[a] = self.slow_neg(a as u64) as u32;
            for b in 0..q {
                add[a * q + b] = self.slow_add(a as u64, b as u64) as u32;
                let prod = self.slow_mul(a as u64, b as u64);
                mul[a * q + b] = prod as u32;
                if prod == 1 {
                    inv[a] = b as u32;
                }
            }
        }
        Tables { add, neg, mul, inv }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Defining polynomial of GF(q) over GF(p), lowest degree first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn contains(&self, a: u64) -> bool {
        a < self.q
    }

    pub fn check(&self, a: u64) -> Result<u64> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::SymbolOutOfRange {
                symbol: a,
                q: self.q,
            })
        }
    }

    /// Base-p digits of a symbol, length `s`.
    pub fn digits(&self, mut a: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.s as usize);
        for _ in 0..self.s {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    fn encode_digits(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.s == 1 {
            let r = a + b;
            return if r >= self.p { r - self.p } else { r };
        }
        match &self.tables {
            Some(t) => t.add[(a * self.q + b) as usize] as u64,
            None => self.slow_add(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        if self.s == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        match &self.tables {
            Some(t) => t.neg[a as usize] as u64,
            None => self.slow_neg(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.s == 1 {
            return ((a as u128 * b as u128) % self.p as u128) as u64;
        }
        match &self.tables {
            Some(t) => t.mul[(a * self.q + b) as usize] as u64,
            None => self.slow_mul(a, b),
        }
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        Some(match &self.tables {
            Some(t) => t.inv[a as usize] as u64,
            None => self.pow(a, self.q - 2),
        })
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, inv))
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Embeds an integer (reduced mod p) into GF(q).
    pub fn from_int(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn slow_add(&self, a: u64, b: u64) -> u64 {
        let da = self.digits(a);
        let db = self.digits(b);
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode_digits(&sum)
    }

    fn slow_neg(&self, a: u64) -> u64 {
        let d: Vec<u64> = self
            .digits(a)
            .into_iter()
            .map(|x| (self.p - x) % self.p)
            .collect();
        self.encode_digits(&d)
    }

    fn slow_mul(&self, a: u64, b: u64) -> u64 {
        let p = self.p as u128;
        let s = self.s as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u128; 2 * s - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u128 * y as u128) % p;
            }
        }
        for k in (s..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (j, &mj) in self.modulus[..s].iter().enumerate() {
                let idx = k - s + j;
                prod[idx] = (prod[idx] + (p - c) * mj as u128) % p;
            }
            prod[k] = 0;
        }
        let digits: Vec<u64> = prod[..s].iter().map(|&c| c as u64).collect();
        self.encode_digits(&digits)
    }
}

/// Smallest monic irreducible polynomial of `degree` over `field`, ordered by
/// the little-endian encoding of its lower coefficients.
fn canonical_irreducible(field: &Arc<BaseField>, degree: usize) -> Result<Poly> {
    let q = field.q();
    let count = budgeted_pow(q, degree as u32)?;
    for v in 0..count {
        let mut coeffs = Vec::with_capacity(degree + 1);
        let mut rest = v;
        for _ in 0..degree {
            coeffs.push(rest % q);
            rest /= q;
        }
        coeffs.push(1);
        let f = Poly::new(field.clone(), coeffs)?;
        if f.is_irreducible() {
            return Ok(f);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// An element of GF(q^m), stored as its canonical integer encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    tag: FieldTag,
    enc: u64,
}

impl FieldElem {
    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    /// Canonical integer encoding.
    pub fn enc(&self) -> u64 {
        self.enc
    }

    pub(crate) fn from_parts(tag: FieldTag, enc: u64) -> Self {
        FieldElem { tag, enc }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.enc)
    }
}

struct CtxInner {
    tag: FieldTag,
    base: Arc<BaseField>,
    ext_modulus: Poly,
    size: u64,
    n: u64,
    alpha: FieldElem,
}

/// The two-level tower GF(p) ⊂ GF(q) ⊂ GF(q^m) with a fixed primitive element.
///
/// Immutable and cheap to clone.
#[derive(Clone)]
pub struct FieldCtx {
    inner: Arc<CtxInner>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("tag", &self.inner.tag)
            .field("base_modulus", &self.inner.base.modulus())
            .field("ext_modulus", &self.inner.ext_modulus.coeffs())
            .field("alpha", &self.inner.alpha.enc)
            .finish()
    }
}

/// Builds the canonical context for GF((p^s)^m).
pub fn build_field(p: u64, s: u32, m: u32) -> Result<FieldCtx> {
    FieldCtx::new(p, s, m)
}

impl FieldCtx {
    pub fn new(p: u64, s: u32, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("m must be positive".into()));
        }
        let base = BaseField::new(p, s)?;
        let size = budgeted_pow(base.q(), m)?;
        let ext_modulus = canonical_irreducible(&base, m as usize)?;
        let tag = FieldTag { p, s, m };
        let mut ctx = CtxInner {
            tag,
            base,
            ext_modulus,
            size,
            n: size - 1,
            alpha: FieldElem { tag, enc: 1 },
        };
        let factors = prime_factors(ctx.n);
        let alpha = (1..size)
            .find(|&enc| {
                let e = FieldElem { tag, enc };
                factors
                    .iter()
                    .all(|&r| ctx_pow(&ctx, e, ctx.n / r).enc != 1)
            })
            .expect("the multiplicative group is cyclic");
        ctx.alpha = FieldElem { tag, enc: alpha };
        Ok(FieldCtx {
            inner: Arc::new(ctx),
        })
    }

    pub fn tag(&self) -> FieldTag {
        self.inner.tag
    }

    pub fn p(&self) -> u64 {
        self.inner.tag.p
    }

    pub fn s(&self) -> u32 {
        self.inner.tag.s
    }

    pub fn m(&self) -> u32 {
        self.inner.tag.m
    }

    pub fn q(&self) -> u64 {
        self.inner.base.q()
    }

    /// Number of elements, q^m.
    pub fn size(&self) -> u64 {
        self.inner.size
    }

    /// Order of the multiplicative group, q^m - 1.
    pub fn n(&self) -> u64 {
        self.inner.n
    }

    pub fn base(&self) -> &Arc<BaseField> {
        &self.inner.base
    }

    /// Defining polynomial of GF(p^s) over GF(p).
    pub fn base_modulus(&self) -> &[u64] {
        self.inner.base.modulus()
    }

    /// Defining polynomial of GF(q^m) over GF(q).
    pub fn ext_modulus(&self) -> &Poly {
        &self.inner.ext_modulus
    }

    pub fn alpha(&self) -> FieldElem {
        self.inner.alpha
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            tag: self.tag(),
            enc: 0,
        }
    }

    pub fn one(&self) -> FieldElem {
        FieldElem {
            tag: self.tag(),
            enc: 1,
        }
    }

    pub fn elem(&self, enc: u64) -> Result<FieldElem> {
        if enc >= self.size() {
            return Err(Error::SymbolOutOfRange {
                symbol: enc,
                q: self.size(),
            });
        }
        Ok(FieldElem {
            tag: self.tag(),
            enc,
        })
    }

    /// Embeds a GF(q) symbol as a constant of GF(q^m).
    pub fn from_base(&self, symbol: u64) -> Result<FieldElem> {
        self.inner.base.check(symbol)?;
        Ok(FieldElem {
            tag: self.tag(),
            enc: symbol,
        })
    }

    /// Embeds an integer, reduced mod p.
    pub fn from_int(&self, v: i64) -> FieldElem {
        FieldElem {
            tag: self.tag(),
            enc: self.inner.base.from_int(v),
        }
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        let tag = self.tag();
        (0..self.size()).map(move |enc| FieldElem { tag, enc })
    }

    pub fn check(&self, e: &FieldElem) -> Result<()> {
        if e.tag != self.tag() {
            return Err(Error::FieldMismatch {
                left: self.tag(),
                right: e.tag,
            });
        }
        Ok(())
    }

    /// GF(q)-coordinates, lowest power first, length m.
    pub fn coords(&self, e: &FieldElem) -> Result<Vec<u64>> {
        self.check(e)?;
        Ok(decode(&self.inner, e.enc))
    }

    pub fn from_coords(&self, coords: &[u64]) -> Result<FieldElem> {
        if coords.len() != self.m() as usize {
            return Err(Error::InvalidParameter(format!(
                "expected {} coordinates, got {}",
                self.m(),
                coords.len()
            )));
        }
        for &c in coords {
            self.inner.base.check(c)?;
        }
        Ok(FieldElem {
            tag: self.tag(),
            enc: encode(&self.inner, coords),
        })
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(ctx_add(&self.inner, *a, *b))
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        let nb = ctx_neg(&self.inner, *b);
        Ok(ctx_add(&self.inner, *a, nb))
    }

    pub fn neg(&self, a: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        Ok(ctx_neg(&self.inner, *a))
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(ctx_mul(&self.inner, *a, *b))
    }

    pub fn pow(&self, a: &FieldElem, e: u64) -> Result<FieldElem> {
        self.check(a)?;
        Ok(ctx_pow(&self.inner, *a, e))
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        if a.enc == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(ctx_pow(&self.inner, *a, self.n() - 1))
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        let inv = self.inv(b)?;
        self.mul(a, &inv)
    }

    /// α^i for any integer exponent (reduced mod n).
    pub fn alpha_pow(&self, i: i64) -> FieldElem {
        let e = i.rem_euclid(self.n() as i64) as u64;
        ctx_pow(&self.inner, self.inner.alpha, e)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: &FieldElem) -> Result<u64> {
        self.check(a)?;
        if a.enc == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut ord = self.n();
        for r in prime_factors(self.n()) {
            while ord % r == 0 && ctx_pow(&self.inner, *a, ord / r).enc == 1 {
                ord /= r;
            }
        }
        Ok(ord)
    }

    /// Absolute trace to GF(q): `Σ_{i<m} x^{q^i}`, returned embedded in GF(q^m).
    pub fn trace(&self, x: &FieldElem) -> Result<FieldElem> {
        self.check(x)?;
        Ok(ctx_trace(&self.inner, *x))
    }

    /// Trace as a GF(q) symbol.
    pub fn trace_symbol(&self, x: &FieldElem) -> Result<u64> {
        let t = self.trace(x)?;
        debug_assert!(t.enc < self.q(), "trace left the subfield");
        Ok(t.enc)
    }

    /// `δ(x)`: 0 when Tr(x) = 0, 1 otherwise.
    pub fn delta(&self, x: &FieldElem) -> Result<u8> {
        Ok(u8::from(self.trace_symbol(x)? != 0))
    }

    /// Returns the GF(q) symbol of an element lying in the subfield.
    pub fn to_base(&self, e: &FieldElem) -> Result<u64> {
        self.check(e)?;
        if e.enc < self.q() {
            Ok(e.enc)
        } else {
            Err(Error::NotInSubfield(e.enc))
        }
    }

    pub(crate) fn raw_add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        ctx_add(&self.inner, a, b)
    }

    pub(crate) fn raw_mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        ctx_mul(&self.inner, a, b)
    }

    pub(crate) fn raw_neg(&self, a: FieldElem) -> FieldElem {
        ctx_neg(&self.inner, a)
    }

    pub(crate) fn raw_pow(&self, a: FieldElem, e: u64) -> FieldElem {
        ctx_pow(&self.inner, a, e)
    }

    pub(crate) fn raw_trace(&self, a: FieldElem) -> u64 {
        ctx_trace(&self.inner, a).enc
    }
}

fn decode(ctx: &CtxInner, mut enc: u64) -> Vec<u64> {
    let q = ctx.base.q();
    let m = ctx.tag.m as usize;
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        out.push(enc % q);
        enc /= q;
    }
    out
}

fn encode(ctx: &CtxInner, coords: &[u64]) -> u64 {
    let q = ctx.base.q();
    coords.iter().rev().fold(0, |acc, &c| acc * q + c)
}

fn ctx_add(ctx: &CtxInner, a: FieldElem, b: FieldElem) -> FieldElem {
    if ctx.tag.m == 1 {
        return FieldElem {
            tag: a.tag,
            enc: ctx.base.add(a.enc, b.enc),
        };
    }
    let ca = decode(ctx, a.enc);
    let cb = decode(ctx, b.enc);
    let sum: Vec<u64> = ca
        .iter()
        .zip(&cb)
        .map(|(&x, &y)| ctx.base.add(x, y))
        .collect();
    FieldElem {
        tag: a.tag,
        enc: encode(ctx, &sum),
    }
}

fn ctx_neg(ctx: &CtxInner, a: FieldElem) -> FieldElem {
    let c: Vec<u64> = decode(ctx, a.enc)
        .into_iter()
        .map(|x| ctx.base.neg(x))
        .collect();
    FieldElem {
        tag: a.tag,
        enc: encode(ctx, &c),
    }
}

fn mul_coords(ctx: &CtxInner, a: &[u64], b: &[u64]) -> Vec<u64> {
    let f = &ctx.base;
    let m = ctx.tag.m as usize;
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = f.add(prod[i + j], f.mul(x, y));
        }
    }
    let modulus = ctx.ext_modulus.coeffs();
    for k in (m..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        let nc = f.neg(c);
        for (j, &mj) in modulus[..m].iter().enumerate() {
            let idx = k - m + j;
            prod[idx] = f.add(prod[idx], f.mul(nc, mj));
        }
        prod[k] = 0;
    }
    prod.truncate(m);
    prod
}

fn ctx_mul(ctx: &CtxInner, a: FieldElem, b: FieldElem) -> FieldElem {
    if a.enc == 0 || b.enc == 0 {
        return FieldElem { tag: a.tag, enc: 0 };
    }
    if ctx.tag.m == 1 {
        return FieldElem {
            tag: a.tag,
            enc: ctx.base.mul(a.enc, b.enc),
        };
    }
    let prod = mul_coords(ctx, &decode(ctx, a.enc), &decode(ctx, b.enc));
    FieldElem {
        tag: a.tag,
        enc: encode(ctx, &prod),
    }
}

fn ctx_pow(ctx: &CtxInner, a: FieldElem, mut e: u64) -> FieldElem {
    if ctx.tag.m == 1 {
        return FieldElem {
            tag: a.tag,
            enc: ctx.base.pow(a.enc, e),
        };
    }
    let m = ctx.tag.m as usize;
    let mut base = decode(ctx, a.enc);
    let mut acc = vec![0u64; m];
    acc[0] = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_coords(ctx, &acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul_coords(ctx, &base, &base);
        }
    }
    FieldElem {
        tag: a.tag,
        enc: encode(ctx, &acc),
    }
}

fn ctx_trace(ctx: &CtxInner, x: FieldElem) -> FieldElem {
    let q = ctx.base.q();
    let mut acc = FieldElem { tag: x.tag, enc: 0 };
    let mut y = x;
    for _ in 0..ctx.tag.m {
        acc = ctx_add(ctx, acc, y);
        y = ctx_pow(ctx, y, q);
    }
    acc
}
