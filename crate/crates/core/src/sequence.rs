//! Periodic sequences over GF(q), their construction and linear complexity.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{BaseField, FieldCtx, FieldElem};
use crate::poly::Poly;

/// One period of a sequence over GF(q) whose period is coprime to q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicSequence {
    field: Arc<BaseField>,
    symbols: Vec<u64>,
}

/// Linear span and minimal polynomial of a sequence. The minimal polynomial
/// is monic and oriented so that it is `(x^n − 1)/gcd(S(x), x^n − 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LfsrProfile {
    pub linear_span: usize,
    pub minimal_poly: Poly,
}

impl PeriodicSequence {
    pub fn new(field: Arc<BaseField>, symbols: Vec<u64>) -> Result<Self> {
        let n = symbols.len() as u64;
        if n == 0 {
            return Err(Error::InvalidParameter("period must be positive".into()));
        }
        if n.gcd(&field.q()) != 1 {
            return Err(Error::NotCoprime { n, q: field.q() });
        }
        for &c in &symbols {
            field.check(c)?;
        }
        Ok(PeriodicSequence { field, symbols })
    }

    pub fn field(&self) -> &Arc<BaseField> {
        &self.field
    }

    pub fn period(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[u64] {
        &self.symbols
    }

    pub fn is_zero(&self) -> bool {
        self.symbols.iter().all(|&c| c == 0)
    }

    /// The sequence `(s_{i+k})`.
    pub fn shifted(&self, k: usize) -> Self {
        let mut symbols = self.symbols.clone();
        let n = symbols.len();
        symbols.rotate_left(k % n);
        PeriodicSequence {
            field: self.field.clone(),
            symbols,
        }
    }

    /// `S(x) = Σ s_i x^i` over one period.
    pub fn generating_poly(&self) -> Poly {
        Poly::from_raw(self.field.clone(), self.symbols.clone())
    }

    /// Text format: header `p s n`, then the n symbols.
    pub fn to_text(&self) -> String {
        let body: Vec<String> = self.symbols.iter().map(u64::to_string).collect();
        format!(
            "{} {} {}\n{}\n",
            self.field.p(),
            self.field.s(),
            self.period(),
            body.join(" ")
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace().map(|t| {
            t.parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
        });
        let mut header = |what: &str| {
            tokens
                .next()
                .unwrap_or_else(|| Err(Error::Parse(format!("missing {what} in header"))))
        };
        let p = header("p")?;
        let s = header("s")?;
        let n = header("n")?;
        let s = u32::try_from(s).map_err(|_| Error::Parse("s out of range".into()))?;
        let symbols = tokens.collect::<Result<Vec<_>>>()?;
        if symbols.len() as u64 != n {
            return Err(Error::Parse(format!(
                "header announces {n} symbols, found {}",
                symbols.len()
            )));
        }
        Self::new(BaseField::new(p, s)?, symbols)
    }
}

/// Characteristic sequence of `d ⊆ Z_n`: `s_i = 1` iff `i ∈ d`.
pub fn characteristic_sequence(
    d: &BTreeSet<u64>,
    n: u64,
    field: Arc<BaseField>,
) -> Result<PeriodicSequence> {
    if let Some(&bad) = d.iter().find(|&&i| i >= n) {
        return Err(Error::ResidueOutOfRange { value: bad, n });
    }
    let symbols = (0..n).map(|i| u64::from(d.contains(&i))).collect();
    PeriodicSequence::new(field, symbols)
}

const TRACE_CHUNK: u64 = 1 << 12;

/// `s_i = Tr(f(α^i + 1))` for `0 ≤ i < q^m − 1`.
pub fn trace_sequence<F>(ctx: &FieldCtx, f: F) -> PeriodicSequence
where
    F: Fn(FieldElem) -> FieldElem + Sync,
{
    let n = ctx.n();
    let alpha = ctx.alpha();
    let one = ctx.one();
    let chunks: Vec<Vec<u64>> = (0..n.div_ceil(TRACE_CHUNK))
        .into_par_iter()
        .map(|c| {
            let start = c * TRACE_CHUNK;
            let end = (start + TRACE_CHUNK).min(n);
            let mut x = ctx.raw_pow(alpha, start);
            let mut out = Vec::with_capacity((end - start) as usize);
            for _ in start..end {
                out.push(ctx.raw_trace(f(ctx.raw_add(x, one))));
                x = ctx.raw_mul(x, alpha);
            }
            out
        })
        .collect();
    PeriodicSequence {
        field: ctx.base().clone(),
        symbols: chunks.concat(),
    }
}

/// Trace sequence of the monomial `x^e`.
pub fn monomial_sequence(ctx: &FieldCtx, e: u64) -> PeriodicSequence {
    trace_sequence(ctx, |x| ctx.raw_pow(x, e))
}

/// Trace sequence of a polynomial with coefficients in GF(q^m), lowest
/// degree first.
pub fn polynomial_sequence(ctx: &FieldCtx, coeffs: &[FieldElem]) -> Result<PeriodicSequence> {
    for c in coeffs {
        ctx.check(c)?;
    }
    Ok(trace_sequence(ctx, |x| horner(ctx, coeffs, x)))
}

fn horner(ctx: &FieldCtx, coeffs: &[FieldElem], x: FieldElem) -> FieldElem {
    coeffs
        .iter()
        .rev()
        .fold(ctx.zero(), |acc, &c| ctx.raw_add(ctx.raw_mul(acc, x), c))
}

/// Evaluates a GF(q^m)-coefficient polynomial at `x`.
pub fn eval_ext_poly(ctx: &FieldCtx, coeffs: &[FieldElem], x: &FieldElem) -> Result<FieldElem> {
    ctx.check(x)?;
    for c in coeffs {
        ctx.check(c)?;
    }
    Ok(horner(ctx, coeffs, *x))
}

/// Which family of Dickson polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DicksonKind {
    /// `D_0 = 2`, `D_1 = x`.
    First,
    /// `E_0 = 1`, `E_1 = x`.
    Second,
}

/// Coefficients (lowest degree first) of the Dickson polynomial of degree `h`
/// with parameter `a`, from `f_h = x·f_{h−1} − a·f_{h−2}`.
pub fn dickson_poly(
    ctx: &FieldCtx,
    kind: DicksonKind,
    h: usize,
    a: &FieldElem,
) -> Result<Vec<FieldElem>> {
    ctx.check(a)?;
    let zero = ctx.zero();
    let f0 = match kind {
        DicksonKind::First => vec![ctx.from_int(2)],
        DicksonKind::Second => vec![ctx.one()],
    };
    if h == 0 {
        return Ok(f0);
    }
    let mut prev = f0;
    let mut cur = vec![zero, ctx.one()];
    let neg_a = ctx.raw_neg(*a);
    for _ in 2..=h {
        let mut next = vec![zero; cur.len() + 1];
        for (i, &c) in cur.iter().enumerate() {
            next[i + 1] = c;
        }
        for (i, &c) in prev.iter().enumerate() {
            next[i] = ctx.raw_add(next[i], ctx.raw_mul(neg_a, c));
        }
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// First-kind Dickson polynomial from the explicit sum
/// `Σ_{i ≤ h/2} h/(h−i)·C(h−i, i)·(−a)^i x^{h−2i}`, integer coefficients
/// reduced mod p. Agrees with [`dickson_poly`] for every `h ≥ 1`.
pub fn dickson_first_kind_closed_form(
    ctx: &FieldCtx,
    h: usize,
    a: &FieldElem,
) -> Result<Vec<FieldElem>> {
    ctx.check(a)?;
    if h == 0 {
        return Ok(vec![ctx.from_int(2)]);
    }
    let p = ctx.p() as u128;
    let mut out = vec![ctx.zero(); h + 1];
    let neg_a = ctx.raw_neg(*a);
    for i in 0..=h / 2 {
        let num = h as u128 * binomial(h - i, i);
        debug_assert_eq!(num % (h - i) as u128, 0);
        let c = (num / (h - i) as u128) % p;
        let c = ctx.from_int(c as i64);
        out[h - 2 * i] = ctx.raw_mul(c, ctx.raw_pow(neg_a, i as u64));
    }
    Ok(out)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Trace sequence of a Dickson polynomial.
pub fn dickson_sequence(
    ctx: &FieldCtx,
    kind: DicksonKind,
    h: usize,
    a: &FieldElem,
) -> Result<PeriodicSequence> {
    let coeffs = dickson_poly(ctx, kind, h, a)?;
    polynomial_sequence(ctx, &coeffs)
}

/// Berlekamp–Massey over two periods, which determines the linear span of a
/// periodic sequence exactly.
pub fn berlekamp_massey(seq: &PeriodicSequence) -> LfsrProfile {
    let f = &seq.field;
    let n = seq.period();
    let s: Vec<u64> = seq.symbols.iter().chain(&seq.symbols).copied().collect();
    let mut c = vec![1u64];
    let mut b = vec![1u64];
    let mut l = 0usize;
    let mut shift = 1usize;
    let mut b_disc = 1u64;
    for i in 0..2 * n {
        let mut d = s[i];
        for j in 1..=l.min(c.len() - 1) {
            d = f.add(d, f.mul(c[j], s[i - j]));
        }
        if d == 0 {
            shift += 1;
            continue;
        }
        let coef = f.neg(f.mul(d, f.inv(b_disc).expect("nonzero discrepancy")));
        let mut next = c.clone();
        if next.len() < b.len() + shift {
            next.resize(b.len() + shift, 0);
        }
        for (j, &bj) in b.iter().enumerate() {
            next[j + shift] = f.add(next[j + shift], f.mul(coef, bj));
        }
        if 2 * l <= i {
            l = i + 1 - l;
            b = std::mem::replace(&mut c, next);
            b_disc = d;
            shift = 1;
        } else {
            c = next;
            shift += 1;
        }
    }
    c.resize(l + 1, 0);
    // For periodic sequences with gcd(n, q) = 1 the connection polynomial has
    // full degree l and, made monic, is exactly (x^n − 1)/gcd(S, x^n − 1).
    let minimal_poly = Poly::from_raw(f.clone(), c).monic();
    LfsrProfile {
        linear_span: l,
        minimal_poly,
    }
}

/// `(x^n − 1)/gcd(S(x), x^n − 1)`, monic; 1 for the zero sequence.
pub fn minimal_poly_via_gcd(seq: &PeriodicSequence) -> Poly {
    let f = seq.field.clone();
    let xn1 = Poly::xn_minus_1(f.clone(), seq.period());
    let s = seq.generating_poly();
    if s.is_zero() {
        return Poly::one(f);
    }
    let g = s.gcd(&xn1).expect("x^n - 1 is nonzero");
    xn1.exact_div(&g).expect("gcd divides x^n - 1")
}

/// `max_{a≠0, b} #{x : f(x+a) − f(x) = b}` over GF(q^m). Planar functions
/// have value 1; APN functions over characteristic 2 have value 2.
pub fn differential_uniformity<F>(ctx: &FieldCtx, f: F) -> u64
where
    F: Fn(FieldElem) -> FieldElem + Sync,
{
    let values: Vec<FieldElem> = ctx.elements().map(&f).collect();
    let size = ctx.size();
    (1..size)
        .into_par_iter()
        .map(|a| {
            let a = FieldElem::from_parts(ctx.tag(), a);
            let mut counts = vec![0u64; size as usize];
            for x in ctx.elements() {
                let xa = ctx.raw_add(x, a);
                let diff = ctx.raw_add(
                    values[xa.enc() as usize],
                    ctx.raw_neg(values[x.enc() as usize]),
                );
                counts[diff.enc() as usize] += 1;
            }
            counts.into_iter().max().unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}
