//! Cyclic codes: construction, derived codes, weight distributions and
//! minimum distance.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::cyclotomic::CosetTable;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::field::{build_field, BaseField, FieldCtx, SIZE_BUDGET_BITS};
use crate::poly::Poly;
use crate::sequence::{minimal_poly_via_gcd, PeriodicSequence};

/// Default enumeration budget, in codewords.
pub const DEFAULT_BUDGET: u64 = 1 << 22;

/// Cap on k²·n, the cost of one elimination in the randomized search.
const SEARCH_WORK: u128 = 1 << 31;

/// A cyclic code of length `n` over GF(q), given by its monic generator
/// polynomial, a divisor of `x^n − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCode {
    n: usize,
    generator: Poly,
}

impl CyclicCode {
    pub fn new(n: usize, generator: Poly) -> Result<Self> {
        let q = generator.field().q();
        if n == 0 {
            return Err(Error::InvalidParameter("length must be positive".into()));
        }
        if (n as u64).gcd(&q) != 1 {
            return Err(Error::NotCoprime { n: n as u64, q });
        }
        if !generator.is_monic() {
            return Err(Error::InvalidParameter(format!(
                "generator {generator} is not monic"
            )));
        }
        let xn1 = Poly::xn_minus_1(generator.field().clone(), n);
        if !generator.divides(&xn1)? {
            return Err(Error::InvalidParameter(format!(
                "generator {generator} does not divide x^{n} - 1"
            )));
        }
        Ok(CyclicCode { n, generator })
    }

    /// The code with generator `(x^n − 1)/gcd(S(x), x^n − 1)`.
    pub fn from_sequence(seq: &PeriodicSequence) -> Result<Self> {
        Self::new(seq.period(), minimal_poly_via_gcd(seq))
    }

    /// The code with generator `gcd(x^n − 1, Σ_{i∈D} x^i)`.
    pub fn classical(d: &BTreeSet<u64>, n: u64, field: Arc<BaseField>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("length must be positive".into()));
        }
        if n.gcd(&field.q()) != 1 {
            return Err(Error::NotCoprime { n, q: field.q() });
        }
        if let Some(&bad) = d.iter().find(|&&i| i >= n) {
            return Err(Error::ResidueOutOfRange { value: bad, n });
        }
        let mut coeffs = vec![0u64; n as usize];
        for &i in d {
            coeffs[i as usize] = 1;
        }
        let s = Poly::new(field.clone(), coeffs)?;
        let xn1 = Poly::xn_minus_1(field, n as usize);
        Self::new(n as usize, xn1.gcd(&s)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.n - self.generator.degree().expect("generator is nonzero")
    }

    pub fn field(&self) -> &Arc<BaseField> {
        self.generator.field()
    }

    pub fn q(&self) -> u64 {
        self.field().q()
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    pub fn is_zero_code(&self) -> bool {
        self.k() == 0
    }

    /// `h(x) = (x^n − 1)/g(x)`.
    pub fn check_poly(&self) -> Poly {
        Poly::xn_minus_1(self.field().clone(), self.n)
            .exact_div(&self.generator)
            .expect("generator divides x^n - 1")
    }

    /// The dual code, generated by the reciprocal of `h(x)`.
    pub fn dual(&self) -> Self {
        let g = self
            .check_poly()
            .reciprocal()
            .expect("h divides x^n - 1, so h(0) != 0");
        CyclicCode {
            n: self.n,
            generator: g,
        }
    }

    /// The complement code, generated by `h(x)`.
    pub fn complement(&self) -> Self {
        CyclicCode {
            n: self.n,
            generator: self.check_poly(),
        }
    }

    /// The subcode of codewords whose coordinates sum to zero.
    pub fn even_like_subcode(&self) -> Self {
        let x_minus_1 = Poly::linear(self.field().clone(), 1).expect("1 is a symbol");
        if x_minus_1.divides(&self.generator).expect("same field") {
            return self.clone();
        }
        CyclicCode {
            n: self.n,
            generator: self.generator.mul(&x_minus_1).expect("same field"),
        }
    }

    /// Degree of the smallest extension of GF(q) containing the n-th roots of
    /// unity, i.e. the multiplicative order of q mod n.
    pub fn splitting_degree(&self) -> u32 {
        multiplicative_order(self.q(), self.n as u64)
    }

    /// Generator-matrix rows `x^j g(x)`, `0 ≤ j < k`.
    pub fn generator_rows(&self) -> Vec<Vec<u64>> {
        let g = self.generator.coeffs();
        (0..self.k())
            .map(|j| {
                let mut row = vec![0u64; self.n];
                row[j..j + g.len()].copy_from_slice(g);
                row
            })
            .collect()
    }

    /// Encodes a message polynomial `m(x)` (degree < k) as `m(x)g(x)`.
    pub fn encode(&self, message: &Poly) -> Result<Vec<u64>> {
        if message.degree().is_some_and(|d| d >= self.k()) {
            return Err(Error::InvalidParameter(
                "message degree must be below k".into(),
            ));
        }
        let c = message.mul(&self.generator)?;
        let mut out = c.coeffs().to_vec();
        out.resize(self.n, 0);
        Ok(out)
    }

    /// Whether `word` (length n) is a codeword, i.e. `g(x)` divides it.
    pub fn contains(&self, word: &[u64]) -> Result<bool> {
        if word.len() != self.n {
            return Ok(false);
        }
        let w = Poly::new(self.field().clone(), word.to_vec())?;
        Ok(w.rem(&self.generator)?.is_zero())
    }
}

impl fmt::Display for CyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] over GF({})", self.n, self.k(), self.q())
    }
}

/// Multiplicative order of `q` modulo `n` (1 for n = 1).
pub fn multiplicative_order(q: u64, n: u64) -> u32 {
    if n == 1 {
        return 1;
    }
    let qm = q % n;
    let mut x = qm;
    let mut ord = 1;
    while x != 1 {
        x = ((x as u128 * qm as u128) % n as u128) as u64;
        ord += 1;
    }
    ord
}

/// `q^e` if it fits in the budget.
fn within(q: u64, e: usize, budget: u64) -> bool {
    u32::try_from(e)
        .ok()
        .and_then(|e| q.checked_pow(e))
        .is_some_and(|v| v <= budget)
}

/// Counts `A_0, …, A_n` of codewords by Hamming weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<BigUint>) -> Result<Self> {
        if counts.first() != Some(&BigUint::one()) {
            return Err(Error::InvalidDistribution("A_0 must be 1".into()));
        }
        Ok(WeightDistribution { counts })
    }

    pub fn from_u64(counts: &[u64]) -> Result<Self> {
        Self::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    /// Number of codewords, `Σ A_i`.
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight with a codeword, if any.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Weight distribution of the dual of an `[n, k_dual]` code over GF(q) whose
/// distribution is `dual`, via `A_j = q^{−k_dual} Σ_i B_i K_j(i)` with
/// Krawtchouk polynomials `K_j`.
pub fn macwilliams_transform(
    dual: &WeightDistribution,
    n: usize,
    q: u64,
    k_dual: usize,
) -> Result<WeightDistribution> {
    if dual.n() != n {
        return Err(Error::InvalidDistribution(format!(
            "distribution has length {} but n = {n}",
            dual.n() + 1
        )));
    }
    let size = BigUint::from(q).pow(k_dual as u32);
    if dual.total() != size {
        return Err(Error::InvalidDistribution(format!(
            "distribution sums to {} instead of q^k = {size}",
            dual.total()
        )));
    }
    let qb = BigInt::from(q);
    let nb = BigInt::from(n);
    let mut acc = vec![BigInt::zero(); n + 1];
    for (i, b) in dual.counts.iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        let b = BigInt::from(b.clone());
        let x = BigInt::from(i);
        // (j+1) K_{j+1} = ((n−j)(q−1) + j − q x) K_j − (q−1)(n−j+1) K_{j−1}
        let mut prev = BigInt::zero();
        let mut cur = BigInt::one();
        for (j, slot) in acc.iter_mut().enumerate() {
            *slot += &b * &cur;
            let jb = BigInt::from(j);
            let qm1: BigInt = &qb - 1;
            let lead: BigInt = (&nb - &jb) * &qm1 + &jb - &qb * &x;
            let tail: BigInt = &qm1 * (&nb - &jb + 1);
            let next: BigInt = lead * &cur - tail * &prev;
            let (quot, rem) = next.div_rem(&(jb + 1));
            debug_assert!(rem.is_zero());
            prev = std::mem::replace(&mut cur, quot);
        }
    }
    let size = BigInt::from(size);
    let counts = acc
        .into_iter()
        .enumerate()
        .map(|(j, a)| {
            let (quot, rem) = a.div_rem(&size);
            if !rem.is_zero() || quot.is_negative() {
                return Err(Error::InvalidDistribution(format!(
                    "transformed A_{j} = {a}/{size} is not a non-negative integer"
                )));
            }
            Ok(quot.to_biguint().expect("non-negative"))
        })
        .collect::<Result<Vec<_>>>()?;
    WeightDistribution::new(counts)
}

fn enumerate_distribution(code: &CyclicCode) -> WeightDistribution {
    let hist = enumerate::weight_histogram(code.field(), &code.generator_rows(), code.n);
    WeightDistribution::from_u64(&hist).expect("A_0 = 1")
}

/// Exact weight distribution, by enumerating whichever of the code and its
/// dual has at most `budget` codewords.
pub fn weight_distribution(code: &CyclicCode, budget: u64) -> Result<WeightDistribution> {
    let q = code.q();
    if within(q, code.k(), budget) {
        return Ok(enumerate_distribution(code));
    }
    let dual = code.dual();
    if within(q, dual.k(), budget) {
        let b = enumerate_distribution(&dual);
        return macwilliams_transform(&b, code.n, q, dual.k());
    }
    Err(Error::BudgetExceeded {
        needed: format!("min({q}^{}, {q}^{})", code.k(), dual.k()),
        budget,
    })
}

/// How a distance result was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceMethod {
    FullEnumeration,
    DualMacwilliams,
    BchBound,
    RandomSearch,
    Combined,
}

impl DistanceMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            DistanceMethod::FullEnumeration => "full_enumeration",
            DistanceMethod::DualMacwilliams => "dual_macwilliams",
            DistanceMethod::BchBound => "bch_bound",
            DistanceMethod::RandomSearch => "random_search",
            DistanceMethod::Combined => "combined",
        }
    }
}

impl fmt::Display for DistanceMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Minimum distance or bounds on it, with provenance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DistanceResult {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub method: DistanceMethod,
}

impl DistanceResult {
    fn exact(d: usize, method: DistanceMethod) -> Self {
        DistanceResult {
            lower: d,
            upper: d,
            exact: true,
            method,
        }
    }

    /// The exact value, when known.
    pub fn value(&self) -> Option<usize> {
        self.exact.then_some(self.lower)
    }
}

/// Minimum distance within an enumeration budget.
///
/// Exact when the code or its dual has at most `budget` codewords; otherwise
/// the lower bound is the BCH bound and the upper bound the lightest codeword
/// found by a seeded information-set search examining about `budget`
/// codewords. Codes too large for that search fall back to the weight of
/// the generator polynomial.
pub fn min_distance(code: &CyclicCode, budget: u64) -> Result<DistanceResult> {
    if code.is_zero_code() {
        return Err(Error::ZeroCode);
    }
    let q = code.q();
    if within(q, code.k(), budget) {
        let d = enumerate_distribution(code)
            .min_nonzero_weight()
            .expect("nonzero code has a nonzero codeword");
        return Ok(DistanceResult::exact(d, DistanceMethod::FullEnumeration));
    }
    let dual = code.dual();
    if within(q, dual.k(), budget) {
        let b = enumerate_distribution(&dual);
        let a = macwilliams_transform(&b, code.n, q, dual.k())?;
        let d = a.min_nonzero_weight().expect("nonzero code");
        return Ok(DistanceResult::exact(d, DistanceMethod::DualMacwilliams));
    }
    let lower = best_bch_bound(code).ok();
    let target = lower.unwrap_or(1);
    // The generator polynomial itself is a codeword.
    let g_weight = code.generator.coeffs().iter().filter(|&&c| c != 0).count();
    let k = code.k() as u128;
    let upper = if k * k * code.n as u128 <= SEARCH_WORK {
        let outcome = enumerate::low_weight_search(
            code.field(),
            &code.generator_rows(),
            code.n,
            budget,
            target,
            search_seed(code),
        );
        outcome.best.map_or(g_weight, |b| b.min(g_weight))
    } else {
        g_weight
    };
    let method = if lower.is_some() {
        DistanceMethod::Combined
    } else {
        DistanceMethod::RandomSearch
    };
    let lower = lower.unwrap_or(1);
    debug_assert!(
        lower <= upper,
        "BCH bound {lower} exceeds a found weight {upper}"
    );
    Ok(DistanceResult {
        lower,
        upper,
        exact: lower == upper,
        method,
    })
}

fn search_seed(code: &CyclicCode) -> u64 {
    // FNV-1a over the generator, so identical codes search identically.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &c in code
        .generator
        .coeffs()
        .iter()
        .chain([code.n as u64, code.q()].iter())
    {
        h ^= c;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// Exponents `i ∈ Z_n` with `g(β^i) = 0` for a fixed primitive n-th root of
/// unity `β = α^{(q^m−1)/n}`, where `m` is the order of q mod n.
pub fn root_exponents(code: &CyclicCode) -> Result<BTreeSet<u64>> {
    let n = code.n as u64;
    let field = code.field();
    let m = code.splitting_degree();
    let fits = field
        .q()
        .checked_pow(m)
        .is_some_and(|v| v <= 1u64 << SIZE_BUDGET_BITS);
    if !fits {
        return Err(Error::InvalidParameter(format!(
            "roots of x^{n} - 1 live in GF({}^{m}), beyond the field size budget",
            field.q()
        )));
    }
    let ctx = build_field(field.p(), field.s(), m)?;
    root_exponents_in(code, &ctx)
}

fn root_exponents_in(code: &CyclicCode, ctx: &FieldCtx) -> Result<BTreeSet<u64>> {
    let n = code.n as u64;
    let beta = ctx.alpha_pow((ctx.n() / n) as i64);
    let table = CosetTable::new(n, code.q())?;
    let mut roots = BTreeSet::new();
    for &leader in table.leaders() {
        let x = ctx.pow(&beta, leader)?;
        if code.generator.eval_ext(ctx, &x)?.enc() == 0 {
            roots.extend(table.coset(leader)?.iter().copied());
        }
    }
    Ok(roots)
}

/// Longest cyclic run `b, b+step, …` inside `roots` (mod n).
fn longest_run(roots: &BTreeSet<u64>, n: u64, step: u64) -> u64 {
    if roots.len() as u64 == n {
        return n;
    }
    let mut best = 0;
    for &start in roots {
        let prev = (start + n - step % n) % n;
        if roots.contains(&prev) {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while roots.contains(&x) {
            len += 1;
            x = (x + step) % n;
        }
        best = best.max(len);
    }
    best
}

/// BCH bound: one more than the longest run of consecutive root exponents.
pub fn bch_bound(code: &CyclicCode) -> Result<usize> {
    let roots = root_exponents(code)?;
    Ok(longest_run(&roots, code.n as u64, 1) as usize + 1)
}

/// BCH bound maximized over all primitive n-th roots of unity `β^c`,
/// `gcd(c, n) = 1`: a run of `δ − 1` consecutive powers of any of them
/// forces `d ≥ δ`.
pub fn best_bch_bound(code: &CyclicCode) -> Result<usize> {
    let roots = root_exponents(code)?;
    let n = code.n as u64;
    if n == 1 {
        return Ok(roots.len() + 1);
    }
    // The root set is closed under j ↦ qj and j ↦ −j maps runs to runs, so
    // one step per coset of ⟨q, −1⟩ suffices.
    let table = CosetTable::new(n, code.q())?;
    let best = table
        .leaders()
        .iter()
        .copied()
        .filter(|&c| c.gcd(&n) == 1 && table.leader_of(-(c as i64)) >= c)
        .map(|c| longest_run(&roots, n, c))
        .max()
        .unwrap_or(0);
    Ok(best as usize + 1)
}

/// Comparison against the sphere-packing bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpherePacking {
    Perfect,
    TightOrUnknown,
    Violates,
}

impl SpherePacking {
    pub fn as_str(self) -> &'static str {
        match self {
            SpherePacking::Perfect => "perfect",
            SpherePacking::TightOrUnknown => "tight_or_unknown",
            SpherePacking::Violates => "violates",
        }
    }
}

impl fmt::Display for SpherePacking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn ball_volume(n: usize, radius: usize, q: u64) -> BigUint {
    let mut volume = BigUint::zero();
    let mut binom = BigUint::one();
    let mut qpow = BigUint::one();
    for i in 0..=radius.min(n) {
        if i > 0 {
            binom = binom * BigUint::from(n - i + 1) / BigUint::from(i);
            qpow *= BigUint::from(q - 1);
        }
        volume += &binom * &qpow;
    }
    volume
}

/// Compares `q^{n−k}` with the volume `Σ_{i ≤ ⌊(d−1)/2⌋} C(n,i)(q−1)^i`.
///
/// For even `d` the punctured `[n−1, k, d−1]` code is checked as well, which
/// catches parameters such as `[7, 4, 4]` that meet the plain bound.
pub fn sphere_packing_check(n: usize, k: usize, d: usize, q: u64) -> Result<SpherePacking> {
    if d == 0 || d > n || k > n {
        return Err(Error::InvalidParameter(format!(
            "need 1 ≤ d ≤ n and k ≤ n, got n={n} k={k} d={d}"
        )));
    }
    let redundancy = BigUint::from(q).pow((n - k) as u32);
    let volume = ball_volume(n, (d - 1) / 2, q);
    if redundancy < volume {
        return Ok(SpherePacking::Violates);
    }
    if d % 2 == 0 && k < n {
        let punctured = BigUint::from(q).pow((n - 1 - k) as u32);
        if punctured < ball_volume(n - 1, (d - 2) / 2, q) {
            return Ok(SpherePacking::Violates);
        }
    }
    Ok(if redundancy == volume {
        SpherePacking::Perfect
    } else {
        SpherePacking::TightOrUnknown
    })
}

/// Serializable code summary with a fixed field order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeRecord {
    pub p: u64,
    pub s: u32,
    pub m: u32,
    pub n: usize,
    pub k: usize,
    pub generator: String,
    pub distance: Option<DistanceResult>,
}

impl CodeRecord {
    /// `m` is the extension degree the code was built in; `distance` is
    /// `None` for the zero code.
    pub fn new(code: &CyclicCode, m: u32, distance: Option<DistanceResult>) -> Self {
        CodeRecord {
            p: code.field().p(),
            s: code.field().s(),
            m,
            n: code.n(),
            k: code.k(),
            generator: code.generator().to_text(),
            distance,
        }
    }
}

/// Converts a distribution to plain integers when every entry fits.
pub fn counts_u64(dist: &WeightDistribution) -> Option<Vec<u64>> {
    dist.counts.iter().map(ToPrimitive::to_u64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::characteristic_sequence;

    fn gf2() -> Arc<BaseField> {
        BaseField::new(2, 1).unwrap()
    }

    fn poly(text: &str) -> Poly {
        Poly::parse(gf2(), text).unwrap()
    }

    fn set(v: &[u64]) -> BTreeSet<u64> {
        v.iter().copied().collect()
    }

    fn hamming() -> CyclicCode {
        CyclicCode::new(7, poly("1,0,1,1")).unwrap()
    }

    #[test]
    fn code_from_sequence_examples() {
        let m_seq = PeriodicSequence::new(gf2(), vec![1, 0, 0, 1, 0, 1, 1]).unwrap();
        let c = CyclicCode::from_sequence(&m_seq).unwrap();
        assert_eq!(c, hamming());
        let zero = PeriodicSequence::new(gf2(), vec![0; 7]).unwrap();
        let c = CyclicCode::from_sequence(&zero).unwrap();
        assert_eq!((c.n(), c.k()), (7, 7));
        let ones = PeriodicSequence::new(gf2(), vec![1; 7]).unwrap();
        let c = CyclicCode::from_sequence(&ones).unwrap();
        assert_eq!(c.generator(), &poly("1,1"));
        assert_eq!(c.k(), 6);
    }

    #[test]
    fn classical_code_examples() {
        let c = CyclicCode::classical(&set(&[0]), 9, gf2()).unwrap();
        assert_eq!(c.k(), 9);
        let rep = CyclicCode::classical(&(0..7).collect(), 7, gf2()).unwrap();
        assert_eq!(rep.k(), 1);
        assert_eq!(rep.generator(), &poly("1,1,1,1,1,1,1"));
        let c = CyclicCode::classical(&set(&[0, 3, 5, 6]), 7, gf2()).unwrap();
        assert_eq!(c.k(), 3);
        assert_eq!(c.complement(), hamming());
        let seq = characteristic_sequence(&set(&[0, 3, 5, 6]), 7, gf2()).unwrap();
        assert_eq!(CyclicCode::from_sequence(&seq).unwrap(), c.complement());
    }

    #[test]
    fn dual_and_complement() {
        let h = hamming();
        assert_eq!(h.complement().generator(), &poly("1,0,1,1,1"));
        assert_eq!(h.dual().generator(), &poly("1,1,1,0,1"));
        let full = CyclicCode::new(7, Poly::one(gf2())).unwrap();
        assert!(full.dual().is_zero_code());
        assert!(full.complement().is_zero_code());
        assert_eq!(h.dual().dual(), h);
    }

    #[test]
    fn even_like_examples() {
        let e = hamming().even_like_subcode();
        assert_eq!(e.k(), 3);
        assert_eq!(e.generator(), &poly("1,0,1,1").mul(&poly("1,1")).unwrap());
        let parity = CyclicCode::new(7, poly("1,1")).unwrap();
        assert_eq!(parity.even_like_subcode(), parity);
        let rep = CyclicCode::new(7, poly("1,1,1,1,1,1,1")).unwrap();
        let z = rep.even_like_subcode();
        assert!(z.is_zero_code());
        assert_eq!(
            min_distance(&z, DEFAULT_BUDGET).unwrap_err(),
            Error::ZeroCode
        );
    }

    #[test]
    fn rejects_non_divisors() {
        assert!(CyclicCode::new(7, poly("1,1,1")).is_err());
        assert!(CyclicCode::new(8, poly("1,1")).is_err());
    }

    #[test]
    fn weight_distribution_examples() {
        let a = weight_distribution(&hamming(), DEFAULT_BUDGET).unwrap();
        assert_eq!(counts_u64(&a).unwrap(), vec![1, 0, 0, 7, 7, 0, 0, 1]);
        let simplex = hamming().dual();
        let b = weight_distribution(&simplex, DEFAULT_BUDGET).unwrap();
        assert_eq!(counts_u64(&b).unwrap(), vec![1, 0, 0, 0, 7, 0, 0, 0]);
        let zero = CyclicCode::new(7, Poly::xn_minus_1(gf2(), 7)).unwrap();
        let z = weight_distribution(&zero, DEFAULT_BUDGET).unwrap();
        assert_eq!(counts_u64(&z).unwrap(), vec![1, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn dual_route_distribution() {
        // Budget 8 forces the [7,4] code through its [7,3] dual.
        let a = weight_distribution(&hamming(), 8).unwrap();
        assert_eq!(counts_u64(&a).unwrap(), vec![1, 0, 0, 7, 7, 0, 0, 1]);
        assert!(matches!(
            weight_distribution(&hamming(), 4),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn macwilliams_examples() {
        let simplex = WeightDistribution::from_u64(&[1, 0, 0, 0, 7, 0, 0, 0]).unwrap();
        let ham = macwilliams_transform(&simplex, 7, 2, 3).unwrap();
        assert_eq!(counts_u64(&ham).unwrap(), vec![1, 0, 0, 7, 7, 0, 0, 1]);
        let full: Vec<u64> = [1, 3, 3, 1].to_vec();
        let full = WeightDistribution::from_u64(&full).unwrap();
        let zero = macwilliams_transform(&full, 3, 2, 3).unwrap();
        assert_eq!(counts_u64(&zero).unwrap(), vec![1, 0, 0, 0]);
        let bogus = WeightDistribution::from_u64(&[1, 2, 0, 1]).unwrap();
        assert!(matches!(
            macwilliams_transform(&bogus, 3, 2, 2),
            Err(Error::InvalidDistribution(_))
        ));
        assert!(macwilliams_transform(&bogus, 3, 2, 1).is_err());
    }

    #[test]
    fn min_distance_examples() {
        let d = min_distance(&hamming(), DEFAULT_BUDGET).unwrap();
        assert_eq!(d.value(), Some(3));
        assert_eq!(d.method, DistanceMethod::FullEnumeration);
        let d = min_distance(&hamming(), 8).unwrap();
        assert_eq!(d.value(), Some(3));
        assert_eq!(d.method, DistanceMethod::DualMacwilliams);
        let inv = CyclicCode::new(7, poly("1,0,1,1").mul(&poly("1,1")).unwrap()).unwrap();
        assert_eq!(min_distance(&inv, DEFAULT_BUDGET).unwrap().value(), Some(4));
        let rep = CyclicCode::new(7, poly("1,1,1,1,1,1,1")).unwrap();
        assert_eq!(min_distance(&rep, DEFAULT_BUDGET).unwrap().value(), Some(7));
    }

    #[test]
    fn bounds_only_when_over_budget() {
        // [31, 16] BCH-like code; budget 2^10 is below both 2^16 and 2^15.
        let ctx = build_field(2, 1, 5).unwrap();
        let g = crate::poly::minimal_polynomial_of_power(&ctx, 1)
            .unwrap()
            .mul(&crate::poly::minimal_polynomial_of_power(&ctx, 3).unwrap())
            .unwrap()
            .mul(&crate::poly::minimal_polynomial_of_power(&ctx, 5).unwrap())
            .unwrap();
        let code = CyclicCode::new(31, g).unwrap();
        assert_eq!(code.k(), 16);
        let exact = min_distance(&code, DEFAULT_BUDGET).unwrap();
        assert_eq!(exact.value(), Some(7));
        let bounded = min_distance(&code, 1 << 10).unwrap();
        assert_eq!(bounded.method, DistanceMethod::Combined);
        assert!(bounded.lower <= 7 && 7 <= bounded.upper);
        assert!(bounded.lower >= 7, "BCH bound for roots 1..6 is 7");
    }

    #[test]
    fn sphere_packing_examples() {
        assert_eq!(
            sphere_packing_check(7, 4, 3, 2).unwrap(),
            SpherePacking::Perfect
        );
        assert_eq!(
            sphere_packing_check(7, 3, 4, 2).unwrap(),
            SpherePacking::TightOrUnknown
        );
        assert_eq!(
            sphere_packing_check(7, 4, 4, 2).unwrap(),
            SpherePacking::Violates
        );
        assert_eq!(
            sphere_packing_check(23, 12, 7, 2).unwrap(),
            SpherePacking::Perfect
        );
        assert_eq!(
            sphere_packing_check(11, 6, 5, 3).unwrap(),
            SpherePacking::Perfect
        );
    }

    #[test]
    fn bch_examples() {
        assert_eq!(bch_bound(&hamming()).unwrap(), 3);
        let full = CyclicCode::new(7, Poly::one(gf2())).unwrap();
        assert_eq!(bch_bound(&full).unwrap(), 1);
        let c = CyclicCode::new(7, poly("1,0,1,1").mul(&poly("1,1")).unwrap()).unwrap();
        assert_eq!(root_exponents(&c).unwrap(), set(&[0, 3, 5, 6]));
        assert_eq!(bch_bound(&c).unwrap(), 4);
    }

    #[test]
    fn qary_enumeration_matches_dual_route() {
        // Ternary [13, 10] code: generator of degree 3 dividing x^13 − 1.
        let ctx = build_field(3, 1, 3).unwrap();
        let g = crate::poly::factor_xn_minus_1(&ctx, 13).unwrap()[1]
            .1
            .clone();
        let code = CyclicCode::new(13, g).unwrap();
        let direct = weight_distribution(&code, DEFAULT_BUDGET).unwrap();
        let via_dual = weight_distribution(&code, 27).unwrap();
        assert_eq!(direct, via_dual);
        assert_eq!(direct.total(), BigUint::from(3u64.pow(10)));
    }

    #[test]
    fn record_field_order() {
        let d = min_distance(&hamming(), DEFAULT_BUDGET).unwrap();
        let rec = CodeRecord::new(&hamming(), 3, Some(d));
        let json = serde_json::to_string(&rec).unwrap();
        assert_eq!(
            json,
            r#"{"p":2,"s":1,"m":3,"n":7,"k":4,"generator":"1,0,1,1","distance":{"lower":3,"upper":3,"exact":true,"method":"full_enumeration"}}"#
        );
    }
}
