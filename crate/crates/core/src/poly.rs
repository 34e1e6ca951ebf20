//! Dense univariate polynomials over GF(q).

use std::fmt;
use std::sync::Arc;

use crate::cyclotomic::CosetTable;
use crate::error::{Error, Result};
use crate::field::{BaseField, FieldCtx, FieldElem, FieldTag};

/// A polynomial over GF(q), coefficients lowest degree first with no
/// trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone)]
pub struct Poly {
    field: Arc<BaseField>,
    coeffs: Vec<u64>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[GF({})]({})", self.field.q(), self)
    }
}

impl fmt::Display for Poly {
    /// Human-readable form, highest degree first, e.g. `x^3 + x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if c == 1 && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{coef}x")?,
                _ => write!(f, "{coef}x^{i}")?,
            }
        }
        Ok(())
    }
}

fn tag_of(field: &BaseField) -> FieldTag {
    FieldTag {
        p: field.p(),
        s: field.s(),
        m: 1,
    }
}

impl Poly {
    /// Builds a polynomial from canonical symbols, validating each and trimming
    /// trailing zeros.
    pub fn new(field: Arc<BaseField>, coeffs: Vec<u64>) -> Result<Self> {
        for &c in &coeffs {
            field.check(c)?;
        }
        Ok(Self::from_raw(field, coeffs))
    }

    pub(crate) fn from_raw(field: Arc<BaseField>, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Arc<BaseField>) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: Arc<BaseField>) -> Self {
        Poly {
            field,
            coeffs: vec![1],
        }
    }

    /// `c·x^k`.
    pub fn monomial(field: Arc<BaseField>, k: usize, c: u64) -> Result<Self> {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(field, coeffs)
    }

    pub fn x(field: Arc<BaseField>) -> Self {
        Poly {
            field,
            coeffs: vec![0, 1],
        }
    }

    /// `x^n − 1`.
    pub fn xn_minus_1(field: Arc<BaseField>, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = field.neg(1);
        coeffs[n] = 1;
        Self::from_raw(field, coeffs)
    }

    /// `x − c`.
    pub fn linear(field: Arc<BaseField>, c: u64) -> Result<Self> {
        field.check(c)?;
        let neg = field.neg(c);
        Ok(Self::from_raw(field, vec![neg, 1]))
    }

    /// Parses the comma-separated text format, lowest degree first.
    pub fn parse(field: Arc<BaseField>, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let coeffs = text
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, coeffs)
    }

    /// Comma-separated text format, lowest degree first; the zero polynomial
    /// is `0`.
    pub fn to_text(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn field(&self) -> &Arc<BaseField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if *self.field == *other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: tag_of(&self.field),
                right: tag_of(&other.field),
            })
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Self::from_raw(f.clone(), coeffs))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        Self::from_raw(self.field.clone(), coeffs)
    }

    pub fn scale(&self, c: u64) -> Poly {
        let coeffs = self.coeffs.iter().map(|&x| self.field.mul(x, c)).collect();
        Self::from_raw(self.field.clone(), coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field.clone()));
        }
        let f = &self.field;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Self::from_raw(f.clone(), out))
    }

    /// Product of a list of polynomials; the empty product is 1.
    pub fn product<'a>(
        field: Arc<BaseField>,
        factors: impl IntoIterator<Item = &'a Poly>,
    ) -> Result<Poly> {
        factors
            .into_iter()
            .try_fold(Self::one(field), |acc, f| acc.mul(f))
    }

    /// Euclidean division: `self = quot·divisor + rem` with `deg rem < deg divisor`.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[dd]).ok_or(Error::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f.clone()), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k];
            if c == 0 {
                continue;
            }
            let factor = f.mul(c, lead_inv);
            quot[k - dd] = factor;
            let nf = f.neg(factor);
            for (j, &dj) in divisor.coeffs.iter().enumerate() {
                if dj != 0 {
                    rem[k - dd + j] = f.add(rem[k - dd + j], f.mul(nf, dj));
                }
            }
        }
        rem.truncate(dd);
        Ok((
            Self::from_raw(f.clone(), quot),
            Self::from_raw(f.clone(), rem),
        ))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Quotient of an exact division; errors if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvalidParameter(format!(
                "{divisor} does not divide {self}"
            )));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Scales to leading coefficient 1; the zero polynomial is returned as is.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None | Some(1) => self.clone(),
            Some(l) => self.scale(self.field.inv(l).expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Returns `(g, u, v)` with `u·self + v·other = g = gcd(self, other)` monic.
    pub fn ext_gcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.same_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let f = self.field.clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f.clone()), Self::zero(f.clone()));
        let (mut t0, mut t1) = (Self::zero(f.clone()), Self::one(f.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = s0.sub(&q.mul(&s1)?)?;
            let t = t0.sub(&q.mul(&t1)?)?;
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let lead = r0.leading().expect("gcd is nonzero");
        let inv = f.inv(lead).expect("nonzero");
        Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
    }

    /// `x^{deg f} f(1/x)`, made monic.
    pub fn reciprocal(&self) -> Result<Poly> {
        match self.coeffs.first() {
            None => Err(Error::ZeroConstantTerm),
            Some(0) => Err(Error::ZeroConstantTerm),
            Some(_) => {
                let rev: Vec<u64> = self.coeffs.iter().rev().copied().collect();
                Ok(Self::from_raw(self.field.clone(), rev).monic())
            }
        }
    }

    /// Evaluates at a GF(q) symbol by Horner's rule.
    pub fn eval(&self, x: u64) -> u64 {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Evaluates at an element of an extension field of GF(q).
    pub fn eval_ext(&self, ctx: &FieldCtx, x: &FieldElem) -> Result<FieldElem> {
        ctx.check(x)?;
        if ctx.base().as_ref() != self.field.as_ref() {
            return Err(Error::FieldMismatch {
                left: ctx.tag(),
                right: tag_of(&self.field),
            });
        }
        let mut acc = ctx.zero();
        for &c in self.coeffs.iter().rev() {
            acc = ctx.raw_add(ctx.raw_mul(acc, *x), FieldElem::from_parts(ctx.tag(), c));
        }
        Ok(acc)
    }

    /// `self^e mod modulus`.
    pub fn powmod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Self::one(self.field.clone()).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?.rem(modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?.rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// Distinct-degree irreducibility test: `f` of degree `d` is irreducible
    /// iff `gcd(x^{q^i} − x, f) = 1` for every `1 ≤ i ≤ d/2`.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        let f = self.field.clone();
        let x = Self::x(f.clone());
        let q = f.q();
        let mut h = x.clone();
        for _ in 1..=d / 2 {
            h = h.powmod(q, self).expect("nonzero modulus");
            let g = h.sub(&x).expect("same field").gcd(self).expect("nonzero");
            if !g.is_one() {
                return false;
            }
        }
        true
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.from_int((i as u64 % f.p()) as i64)))
            .collect();
        Self::from_raw(f.clone(), coeffs)
    }
}

/// Minimal polynomial over GF(q) of an element of GF(q^m): the product of
/// `x − e^{q^j}` over the distinct conjugates of `e`. For `e = 0` this is `x`.
pub fn minimal_polynomial_of_element(ctx: &FieldCtx, e: &FieldElem) -> Result<Poly> {
    ctx.check(e)?;
    let base = ctx.base().clone();
    if e.enc() == 0 {
        return Ok(Poly::x(base));
    }
    let mut conjugates = vec![*e];
    let mut y = ctx.raw_pow(*e, ctx.q());
    while y != *e {
        conjugates.push(y);
        y = ctx.raw_pow(y, ctx.q());
    }
    // Coefficients in GF(q^m), lowest degree first.
    let mut prod = vec![ctx.one()];
    for c in conjugates {
        let negc = ctx.raw_neg(c);
        let mut next = vec![ctx.zero(); prod.len() + 1];
        for (i, &a) in prod.iter().enumerate() {
            next[i + 1] = ctx.raw_add(next[i + 1], a);
            next[i] = ctx.raw_add(next[i], ctx.raw_mul(a, negc));
        }
        prod = next;
    }
    let coeffs = prod
        .iter()
        .map(|c| ctx.to_base(c))
        .collect::<Result<Vec<_>>>()?;
    Poly::new(base, coeffs)
}

/// Minimal polynomial of `α^i` (exponent taken mod n).
pub fn minimal_polynomial_of_power(ctx: &FieldCtx, i: i64) -> Result<Poly> {
    minimal_polynomial_of_element(ctx, &ctx.alpha_pow(i))
}

/// Factors `x^n − 1` over GF(q) as one minimal polynomial per q-cyclotomic
/// coset leader `i`, namely that of `β^i` with `β = α^{(q^m−1)/n}`.
pub fn factor_xn_minus_1(ctx: &FieldCtx, n: u64) -> Result<Vec<(u64, Poly)>> {
    if n == 0 || ctx.n() % n != 0 {
        return Err(Error::LengthDoesNotDivide { n, order: ctx.n() });
    }
    let table = CosetTable::new(n, ctx.q())?;
    let beta = ctx.alpha_pow((ctx.n() / n) as i64);
    table
        .leaders()
        .iter()
        .map(|&i| {
            let e = ctx.raw_pow(beta, i);
            Ok((i, minimal_polynomial_of_element(ctx, &e)?))
        })
        .collect()
}
