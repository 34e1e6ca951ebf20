//! Difference sets, Singer sets and the counting helpers used by the
//! monomial predictions.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldCtx;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DesignKind {
    DifferenceSet,
    AlmostDifferenceSet,
    Neither,
}

/// Classification of a subset of Z_n by its difference multiset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DesignReport {
    pub kind: DesignKind,
    pub lambda: Option<u64>,
    pub t: Option<u64>,
}

/// Multiplicity of each residue `r ∈ Z_n` among the differences `x − y`,
/// `x ≠ y ∈ d`. Index 0 is always zero.
pub fn difference_counts(d: &BTreeSet<u64>, n: u64) -> Result<Vec<u64>> {
    if let Some(&bad) = d.iter().find(|&&i| i >= n) {
        return Err(Error::ResidueOutOfRange { value: bad, n });
    }
    let mut counts = vec![0u64; n as usize];
    for &x in d {
        for &y in d {
            if x != y {
                counts[((x + n - y) % n) as usize] += 1;
            }
        }
    }
    Ok(counts)
}

/// Reports a difference set when every nonzero residue occurs λ times, an
/// almost difference set when multiplicities are exactly λ and λ+1 (t
/// residues at λ), and neither otherwise.
pub fn classify_subset(d: &BTreeSet<u64>, n: u64) -> Result<DesignReport> {
    let counts = difference_counts(d, n)?;
    let values: BTreeSet<u64> = counts.iter().skip(1).copied().collect();
    let report = match values.len() {
        0 => DesignReport {
            kind: DesignKind::DifferenceSet,
            lambda: Some(0),
            t: None,
        },
        1 => DesignReport {
            kind: DesignKind::DifferenceSet,
            lambda: values.first().copied(),
            t: None,
        },
        2 => {
            let lo = *values.first().expect("two values");
            let hi = *values.last().expect("two values");
            if hi == lo + 1 {
                let t = counts.iter().skip(1).filter(|&&c| c == lo).count() as u64;
                DesignReport {
                    kind: DesignKind::AlmostDifferenceSet,
                    lambda: Some(lo),
                    t: Some(t),
                }
            } else {
                neither()
            }
        }
        _ => neither(),
    };
    Ok(report)
}

fn neither() -> DesignReport {
    DesignReport {
        kind: DesignKind::Neither,
        lambda: None,
        t: None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingerVariant {
    /// `{i : Tr(α^i) = 1} ⊆ Z_{2^m−1}` over GF(2).
    TraceOneBinary,
    /// `{0 ≤ i < (q^m−1)/(q−1) : Tr(α^i) = 0}`.
    TraceZeroProjective,
}

/// A Singer difference set from the trace of powers of α, with its modulus.
pub fn singer_difference_set(
    ctx: &FieldCtx,
    variant: SingerVariant,
) -> Result<(BTreeSet<u64>, u64)> {
    match variant {
        SingerVariant::TraceOneBinary => {
            if ctx.q() != 2 {
                return Err(Error::InvalidParameter(format!(
                    "trace-one Singer sets need q = 2, got q = {}",
                    ctx.q()
                )));
            }
            let n = ctx.n();
            let set = trace_positions(ctx, n, |t| t == 1);
            Ok((set, n))
        }
        SingerVariant::TraceZeroProjective => {
            if ctx.m() < 3 {
                return Err(Error::InvalidParameter(format!(
                    "projective Singer sets need m ≥ 3, got m = {}",
                    ctx.m()
                )));
            }
            let n = ctx.n() / (ctx.q() - 1);
            let set = trace_positions(ctx, n, |t| t == 0);
            Ok((set, n))
        }
    }
}

fn trace_positions(ctx: &FieldCtx, n: u64, keep: impl Fn(u64) -> bool) -> BTreeSet<u64> {
    let alpha = ctx.alpha();
    let mut x = ctx.one();
    let mut out = BTreeSet::new();
    for i in 0..n {
        if keep(ctx.raw_trace(x)) {
            out.insert(i);
        }
        x = ctx.raw_mul(x, alpha);
    }
    out
}

/// `N(J, t)`: number of strictly increasing (t−1)-tuples with entries in
/// `(0, J)`, from `N(J, 1) = 1` and `N(J, t) = Σ_{j=t−1}^{J−1} N(j, t−1)`.
pub fn count_vectors(j: u64, t: u64) -> Result<u128> {
    if t == 0 || j < t {
        return Err(Error::InvalidParameter(format!(
            "N(J, t) needs J ≥ t ≥ 1, got J={j} t={t}"
        )));
    }
    // row[x] = N(x, level) for x in 0..=j.
    let mut row = vec![1u128; j as usize + 1];
    for level in 2..=t {
        let mut next = vec![0u128; j as usize + 1];
        let mut acc = 0u128;
        for x in level..=j {
            acc = acc
                .checked_add(row[x as usize - 1])
                .ok_or_else(|| Error::InvalidParameter("N(J, t) overflows".into()))?;
            next[x as usize] = acc;
        }
        row = next;
    }
    Ok(row[j as usize])
}

/// κ_a^{(t)} for odd `a` in `[1, T]`, `T = 2^t − 1`: 1 when `a = T`,
/// otherwise `⌈log₂(T/a)⌉ mod 2`, with the ceiling computed exactly as the
/// least `e` with `a·2^e ≥ T`.
pub fn kappa(a: u64, t: u32) -> Result<u8> {
    if t == 0 || t >= 63 {
        return Err(Error::InvalidParameter(format!("t = {t} out of range")));
    }
    let big_t = (1u64 << t) - 1;
    if a % 2 == 0 || a == 0 || a > big_t {
        return Err(Error::InvalidParameter(format!(
            "a must be odd in [1, {big_t}], got {a}"
        )));
    }
    if a == big_t {
        return Ok(1);
    }
    let mut e = 0u32;
    while a << e < big_t {
        e += 1;
    }
    Ok((e % 2) as u8)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;

    fn set(v: &[u64]) -> BTreeSet<u64> {
        v.iter().copied().collect()
    }

    #[test]
    fn classify_examples() {
        let r = classify_subset(&set(&[0, 3, 5, 6]), 7).unwrap();
        assert_eq!(r.kind, DesignKind::DifferenceSet);
        assert_eq!(r.lambda, Some(2));
        let r = classify_subset(&set(&[0]), 5).unwrap();
        assert_eq!((r.kind, r.lambda), (DesignKind::DifferenceSet, Some(0)));
        let r = classify_subset(&set(&[0, 1]), 5).unwrap();
        assert_eq!(r.kind, DesignKind::AlmostDifferenceSet);
        assert_eq!((r.lambda, r.t), (Some(0), Some(2)));
        let r = classify_subset(&set(&[0, 1, 2, 3]), 13).unwrap();
        assert_eq!(r.kind, DesignKind::Neither);
    }

    #[test]
    fn singer_examples() {
        let gf8 = build_field(2, 1, 3).unwrap();
        let (d, n) = singer_difference_set(&gf8, SingerVariant::TraceOneBinary).unwrap();
        assert_eq!((d, n), (set(&[0, 3, 5, 6]), 7));

        let gf16 = build_field(2, 1, 4).unwrap();
        let (d, n) = singer_difference_set(&gf16, SingerVariant::TraceOneBinary).unwrap();
        assert_eq!((d.len(), n), (8, 15));
        assert_eq!(classify_subset(&d, n).unwrap().lambda, Some(4));

        let gf27 = build_field(3, 1, 3).unwrap();
        let (d, n) = singer_difference_set(&gf27, SingerVariant::TraceZeroProjective).unwrap();
        assert_eq!((d.len(), n), (4, 13));
        let r = classify_subset(&d, n).unwrap();
        assert_eq!((r.kind, r.lambda), (DesignKind::DifferenceSet, Some(1)));

        assert!(singer_difference_set(&gf27, SingerVariant::TraceOneBinary).is_err());
        let gf9 = build_field(3, 1, 2).unwrap();
        assert!(singer_difference_set(&gf9, SingerVariant::TraceZeroProjective).is_err());
    }

    #[test]
    fn count_vectors_examples() {
        assert_eq!(count_vectors(4, 2).unwrap(), 3);
        assert_eq!(count_vectors(4, 3).unwrap(), 3);
        assert_eq!(count_vectors(5, 4).unwrap(), 4);
        for t in 2..=6 {
            assert_eq!(count_vectors(t, t).unwrap(), 1);
        }
        assert_eq!(count_vectors(9, 1).unwrap(), 1);
        assert!(count_vectors(3, 4).is_err());
        assert!(count_vectors(3, 0).is_err());
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(1, 3).unwrap(), 1);
        assert_eq!(kappa(5, 3).unwrap(), 1);
        assert_eq!(kappa(3, 4).unwrap(), 1);
        assert_eq!(kappa(3, 3).unwrap(), 0);
        assert_eq!(kappa(7, 3).unwrap(), 1);
        assert!(kappa(4, 3).is_err());
        assert!(kappa(9, 3).is_err());
    }

    #[test]
    fn kappa_count_matches_span_formula() {
        // #{odd a ≤ 2^h − 1 : κ = 1} = (2^h + (−1)^{h−1})/3.
        for h in 1..=12u32 {
            let count = (1..1u64 << h)
                .step_by(2)
                .filter(|&a| kappa(a, h).unwrap() == 1)
                .count() as i64;
            let sign = if h % 2 == 1 { 1 } else { -1 };
            assert_eq!(3 * count, (1i64 << h) + sign, "h={h}");
        }
    }
}
