//! Registry of parameterized predictions about codes from trace sequences
//! of monomials, Dickson polynomials and Singer sets, plus the engine that
//! computes the ground truth and compares.
//!
//! Each [`Claim`] predicts the minimal polynomial `(x−1)^u · Π m_{α^{−e}}`
//! (expanded over distinct cyclotomic cosets), the linear span, the code
//! dimension and a statement about the minimum distance.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use num_integer::Integer;
use serde::Serialize;

use crate::code::{min_distance, CyclicCode, DistanceResult};
use crate::design::{count_vectors, kappa, singer_difference_set, SingerVariant};
use crate::error::{Error, Result};
use crate::field::{np_indicator, FieldCtx, FieldElem};
use crate::poly::{minimal_polynomial_of_power, Poly};
use crate::sequence::{
    berlekamp_massey, characteristic_sequence, dickson_sequence, minimal_poly_via_gcd,
    monomial_sequence, DicksonKind, PeriodicSequence,
};

/// Parameter point for a claim. `a` is the canonical encoding of an element
/// of GF(q^m).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Params {
    pub p: u64,
    pub s: u32,
    pub m: u32,
    pub h: Option<u32>,
    pub kappa: Option<u32>,
    pub u: Option<u32>,
    pub a: Option<u64>,
}

impl Params {
    pub fn new(p: u64, s: u32, m: u32) -> Self {
        Params {
            p,
            s,
            m,
            h: None,
            kappa: None,
            u: None,
            a: None,
        }
    }

    pub fn with_h(mut self, h: u32) -> Self {
        self.h = Some(h);
        self
    }

    pub fn with_kappa(mut self, kappa: u32) -> Self {
        self.kappa = Some(kappa);
        self
    }

    pub fn with_u(mut self, u: u32) -> Self {
        self.u = Some(u);
        self
    }

    pub fn with_a(mut self, a: u64) -> Self {
        self.a = Some(a);
        self
    }

    fn q(&self) -> u64 {
        self.p.pow(self.s)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} s={} m={}", self.p, self.s, self.m)?;
        for (name, v) in [("h", self.h), ("kappa", self.kappa), ("u", self.u)] {
            if let Some(v) = v {
                write!(f, " {name}={v}")?;
            }
        }
        if let Some(a) = self.a {
            write!(f, " a={a}")?;
        }
        Ok(())
    }
}

/// Extra parameters a claim needs beyond the field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamKind {
    H,
    Kappa,
    U,
    A,
}

impl ParamKind {
    pub fn name(self) -> &'static str {
        match self {
            ParamKind::H => "h",
            ParamKind::Kappa => "kappa",
            ParamKind::U => "u",
            ParamKind::A => "a",
        }
    }
}

/// Predicted minimum distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DistanceClaim {
    Exact {
        value: usize,
    },
    AtLeast {
        value: usize,
    },
    Range {
        lo: usize,
        hi: usize,
    },
    /// `d` is even and `d² − d + 1 ≥ n`.
    EvenSquareBound {
        n: usize,
    },
    /// No statement about `d` at this parameter point.
    Unstated,
}

impl fmt::Display for DistanceClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DistanceClaim::Exact { value } => write!(f, "d = {value}"),
            DistanceClaim::AtLeast { value } => write!(f, "d >= {value}"),
            DistanceClaim::Range { lo, hi } => write!(f, "{lo} <= d <= {hi}"),
            DistanceClaim::EvenSquareBound { n } => write!(f, "d even, d^2-d+1 >= {n}"),
            DistanceClaim::Unstated => f.write_str("unstated"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    BoundConsistent,
    Mismatch,
    NotComputed,
    /// The parameter point lies outside the claim's hypotheses.
    Exploratory,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::BoundConsistent => "bound_consistent",
            Verdict::Mismatch => "mismatch",
            Verdict::NotComputed => "not_computed",
            Verdict::Exploratory => "exploratory",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Hamming,
    SingerComplement,
    Welch,
    Power2h1,
    Niho,
    Kasami,
    Inverse,
    PlanarGold,
    QhMinus1,
    QhMinus1H3,
    Cm,
    CmH3,
    DicksonPu,
    DicksonD2,
    DicksonD3Q2,
    DicksonD3Qt,
    DicksonD4Q3,
    DicksonD4Qt,
    DicksonD5Q2,
    DicksonD5Q4,
    DicksonD5Q2t,
    DicksonD5Q3,
    DicksonD5Q3t,
    DicksonD5P7,
}

/// One registry entry.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Claim {
    pub id: &'static str,
    /// The sequence the code is built from.
    pub sequence: &'static str,
    /// Hypotheses on the parameters, as enforced by [`Claim::check`].
    pub hypotheses: &'static str,
    pub params: &'static [ParamKind],
    /// Whether the minimum distance is an open problem for this family.
    pub open_distance: bool,
    /// Readings applied where the stated formulas are inconsistent.
    pub notes: &'static [&'static str],
    #[serde(skip)]
    family: Family,
}

const NONE: &[ParamKind] = &[];
const H: &[ParamKind] = &[ParamKind::H];
const A: &[ParamKind] = &[ParamKind::A];

static REGISTRY: [Claim; 24] = [
    Claim {
        id: "hamming",
        sequence: "characteristic sequence of {i : Tr(α^i) = 1} ⊆ Z_{2^m−1}",
        hypotheses: "q = 2, m >= 2",
        params: NONE,
        open_distance: false,
        notes: &[],
        family: Family::Hamming,
    },
    Claim {
        id: "singer-complement",
        sequence: "characteristic sequence of {0 <= i < (q^m−1)/(q−1) : Tr(α^i) = 0}",
        hypotheses: "m >= 3",
        params: NONE,
        open_distance: true,
        notes: &["span is the dimension C(p+m−2, m−1)^s + 1 of the complement code"],
        family: Family::SingerComplement,
    },
    Claim {
        id: "welch",
        sequence: "Tr(f(α^i+1)), f = x^(2^t+3)",
        hypotheses: "q = 2, m = 2t+1 >= 7",
        params: NONE,
        open_distance: true,
        notes: &[],
        family: Family::Welch,
    },
    Claim {
        id: "power-2h-1",
        sequence: "Tr(f(α^i+1)), f = x^(2^h−1)",
        hypotheses: "q = 2, 2 <= h <= ceil(m/2)",
        params: H,
        open_distance: true,
        notes: &[],
        family: Family::Power2h1,
    },
    Claim {
        id: "niho",
        sequence: "Tr(f(α^i+1)), f = x^e, e = 2^((m−1)/2) + 2^((m−1)/4) − 1",
        hypotheses: "q = 2, m >= 9 odd, m ≡ 1 (mod 4)",
        params: NONE,
        open_distance: true,
        notes: &[],
        family: Family::Niho,
    },
    Claim {
        id: "kasami",
        sequence: "Tr(f(α^i+1)), f = x^(2^(2h) − 2^h + 1)",
        hypotheses: "q = 2, gcd(m, h) = 1, 1 <= h <= (m−r)/4 with r = 1,3,4,2 for m ≡ 1,3,0,2 (mod 4)",
        params: H,
        open_distance: true,
        notes: &["the h-even span exponent is read as 2^(h+2)"],
        family: Family::Kasami,
    },
    Claim {
        id: "inverse",
        sequence: "Tr(f(α^i+1)), f = x^(2^m−2)",
        hypotheses: "q = 2, m >= 2",
        params: NONE,
        open_distance: false,
        notes: &["the distance statement applies to odd m only"],
        family: Family::Inverse,
    },
    Claim {
        id: "planar-gold",
        sequence: "Tr(f(α^i+1)), f = x^(q^kappa+1)",
        hypotheses: "q odd, m odd, kappa >= 1",
        params: &[ParamKind::Kappa],
        open_distance: false,
        notes: &["the second factor is m_{α^−(q^kappa+1)}, matching f"],
        family: Family::PlanarGold,
    },
    Claim {
        id: "qh-minus-1",
        sequence: "Tr(f(α^i+1)), f = x^((q^h−1)/(q−1))",
        hypotheses: "1 <= h <= (m−1)/2 for odd m, m/2 for even m",
        params: H,
        open_distance: true,
        notes: &[],
        family: Family::QhMinus1,
    },
    Claim {
        id: "qh-minus-1-h3",
        sequence: "Tr(f(α^i+1)), f = x^(1+q+q^2)",
        hypotheses: "h = 3 satisfies 3 <= (m−1)/2 for odd m, m/2 for even m",
        params: NONE,
        open_distance: true,
        notes: &["for p = 2 the general h formula gives three factors, not four; predictions follow the h = 3 formula with four factors"],
        family: Family::QhMinus1H3,
    },
    Claim {
        id: "cm",
        sequence: "Tr(f(α^i+1)), f = x^((3^h+1)/2) over GF(3^m)",
        hypotheses: "q = 3, h odd, gcd(m, h) = 1, 3 <= h <= (m−1)/2 for odd m, m/2 for even m",
        params: H,
        open_distance: true,
        notes: &["all three conditions on h are enforced"],
        family: Family::Cm,
    },
    Claim {
        id: "cm-h3",
        sequence: "Tr(f(α^i+1)), f = x^14 over GF(3^m)",
        hypotheses: "q = 3, gcd(m, 3) = 1, 3 <= (m−1)/2 for odd m, m/2 for even m",
        params: NONE,
        open_distance: true,
        notes: &[],
        family: Family::CmH3,
    },
    Claim {
        id: "dickson-pu",
        sequence: "Tr(f(α^i+1)), f = D_(p^u)(x, a) = x^(p^u)",
        hypotheses: "m >= 2",
        params: &[ParamKind::U],
        open_distance: false,
        notes: &["m >= 2 is imposed so that the code is nontrivial"],
        family: Family::DicksonPu,
    },
    Claim {
        id: "dickson-d2",
        sequence: "Tr(f(α^i+1)), f = D_2(x, a) = x^2 − 2a",
        hypotheses: "p > 2, m >= 3",
        params: A,
        open_distance: false,
        notes: &[],
        family: Family::DicksonD2,
    },
    Claim {
        id: "dickson-d3-q2",
        sequence: "Tr(f(α^i+1)), f = D_3(x, a) = x^3 + ax over GF(2^m)",
        hypotheses: "q = 2, m >= 4",
        params: A,
        open_distance: false,
        notes: &[],
        family: Family::DicksonD3Q2,
    },
    Claim {
        id: "dickson-d3-qt",
        sequence: "Tr(f(α^i+1)), f = D_3(x, a) = x^3 − 3ax",
        hypotheses: "p >= 5, or p = 2 and s >= 2; m >= 2",
        params: A,
        open_distance: true,
        notes: &[
            "span for a != 1 uses δ(1−3a), the (x−1) exponent of the minimal polynomial",
            "the q = 4 distance rows are read as strengthenings of the general rows",
            "m >= 2 is imposed so that the code is nontrivial",
        ],
        family: Family::DicksonD3Qt,
    },
    Claim {
        id: "dickson-d4-q3",
        sequence: "Tr(f(α^i+1)), f = D_4(x, a) = x^4 − 4ax^2 + 2a^2 over GF(3^m)",
        hypotheses: "q = 3, m >= 3",
        params: A,
        open_distance: true,
        notes: &["the a = 0 rows are read as 'a = 0 and m ≡ 0 (mod 6)' and its negation"],
        family: Family::DicksonD4Q3,
    },
    Claim {
        id: "dickson-d4-qt",
        sequence: "Tr(f(α^i+1)), f = D_4(x, a) = x^4 − 4ax^2 + 2a^2",
        hypotheses: "p >= 5, or p = 3 and s >= 2; m >= 2",
        params: A,
        open_distance: true,
        notes: &["distance rows use δ(1−4a+2a^2), the (x−1) exponent of the minimal polynomial"],
        family: Family::DicksonD4Qt,
    },
    Claim {
        id: "dickson-d5-q2",
        sequence: "Tr(f(α^i+1)), f = D_5(x, a) over GF(2^m)",
        hypotheses: "q = 2, m >= 5",
        params: A,
        open_distance: true,
        notes: &[],
        family: Family::DicksonD5Q2,
    },
    Claim {
        id: "dickson-d5-q4",
        sequence: "Tr(f(α^i+1)), f = D_5(x, a) over GF(4^m)",
        hypotheses: "q = 4, m >= 3",
        params: A,
        open_distance: true,
        notes: &["for a + a^2 != 0 the span and distance rows use δ(1+a+a^2), the (x−1) exponent of the minimal polynomial"],
        family: Family::DicksonD5Q4,
    },
    Claim {
        id: "dickson-d5-q2t",
        sequence: "Tr(f(α^i+1)), f = D_5(x, a) over GF((2^s)^m)",
        hypotheses: "p = 2, s >= 3, m >= 3",
        params: A,
        open_distance: true,
        notes: &[
            "for 1 + a + a^2 = 0 the span is read as 4m, matching the minimal polynomial",
            "for a + a^2 + a^3 != 0 the span and distance rows use δ(1+a+a^2)",
        ],
        family: Family::DicksonD5Q2t,
    },
    Claim {
        id: "dickson-d5-q3",
        sequence: "Tr(f(α^i+1)), f = D_5(x, a) over GF(3^m)",
        hypotheses: "q = 3, m >= 3",
        params: A,
        open_distance: true,
        notes: &[],
        family: Family::DicksonD5Q3,
    },
    Claim {
        id: "dickson-d5-q3t",
        sequence: "Tr(f(α^i+1)), f = D_5(x, a) over GF((3^s)^m)",
        hypotheses: "p = 3, s >= 2, m >= 2",
        params: A,
        open_distance: true,
        notes: &[],
        family: Family::DicksonD5Q3t,
    },
    Claim {
        id: "dickson-d5-p7",
        sequence: "Tr(f(α^i+1)), f = D_5(x, a)",
        hypotheses: "p >= 7, m >= 2",
        params: A,
        open_distance: true,
        notes: &[],
        family: Family::DicksonD5P7,
    },
];

/// Ids that stand for a group of claims; the member is chosen by the field.
const ALIASES: [(&str, &[&str]); 3] = [
    ("dickson-d3", &["dickson-d3-q2", "dickson-d3-qt"]),
    ("dickson-d4", &["dickson-d4-q3", "dickson-d4-qt"]),
    (
        "dickson-d5",
        &[
            "dickson-d5-q2",
            "dickson-d5-q4",
            "dickson-d5-q2t",
            "dickson-d5-q3",
            "dickson-d5-q3t",
            "dickson-d5-p7",
        ],
    ),
];

pub fn registry() -> &'static [Claim] {
    &REGISTRY
}

/// Group ids accepted by [`resolve`] with their members.
pub fn aliases() -> &'static [(&'static str, &'static [&'static str])] {
    &ALIASES
}

pub fn lookup(id: &str) -> Result<&'static Claim> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// Like [`lookup`], but a group id picks the member whose field condition
/// holds for `params`.
pub fn resolve(id: &str, params: &Params) -> Result<&'static Claim> {
    if let Some((_, members)) = ALIASES.iter().find(|(alias, _)| *alias == id) {
        return members
            .iter()
            .map(|m| lookup(m).expect("alias members are registered"))
            .find(|c| field_condition(c.family, params).is_ok())
            .ok_or_else(|| {
                Error::Hypothesis(format!(
                    "no member of {id} covers GF({}^{})",
                    params.p, params.s
                ))
            });
    }
    lookup(id)
}

/// A prediction instantiated at a parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    /// Which case of the statement applies.
    pub case: String,
    /// Exponent of `x − 1`.
    pub unit_exponent: u8,
    /// Distinct coset leaders `j` with `m_{α^j}` a predicted factor.
    pub factors: Option<Vec<u64>>,
    /// The expanded minimal polynomial, when the statement gives one.
    pub mpoly: Option<Poly>,
    pub span: usize,
    pub dimension: usize,
    pub distance: DistanceClaim,
}

struct Shape {
    case: String,
    unit: u8,
    exponents: Option<Vec<u64>>,
    span: i64,
    distance: DistanceClaim,
}

impl Shape {
    fn new(
        case: impl Into<String>,
        unit: u8,
        exponents: Vec<u64>,
        span: i64,
        distance: DistanceClaim,
    ) -> Self {
        Shape {
            case: case.into(),
            unit,
            exponents: Some(exponents),
            span,
            distance,
        }
    }
}

fn exact(value: usize) -> DistanceClaim {
    DistanceClaim::Exact { value }
}

fn at_least(value: usize) -> DistanceClaim {
    DistanceClaim::AtLeast { value }
}

fn range(lo: usize, hi: usize) -> DistanceClaim {
    DistanceClaim::Range { lo, hi }
}

impl Claim {
    /// Checks that the required parameters are present and the hypotheses
    /// hold. Violations are reported as [`Error::Hypothesis`].
    pub fn check(&self, params: &Params) -> Result<()> {
        self.require(params)?;
        hypotheses(self.family, params).map_err(Error::Hypothesis)
    }

    fn require(&self, params: &Params) -> Result<()> {
        for &kind in self.params {
            let present = match kind {
                ParamKind::H => params.h.is_some(),
                ParamKind::Kappa => params.kappa.is_some(),
                ParamKind::U => params.u.is_some(),
                ParamKind::A => params.a.is_some(),
            };
            if !present {
                return Err(Error::InvalidParameter(format!(
                    "{} needs parameter {}",
                    self.id,
                    kind.name()
                )));
            }
        }
        Ok(())
    }

    /// Builds the sequence whose minimal polynomial the claim describes.
    pub fn sequence(&self, ctx: &FieldCtx, params: &Params) -> Result<PeriodicSequence> {
        self.require(params)?;
        let m = params.m;
        let q = ctx.q();
        let mono = |e: u64| Ok(monomial_sequence(ctx, e));
        let h = params.h.unwrap_or(0);
        match self.family {
            Family::Hamming | Family::SingerComplement => {
                let variant = if self.family == Family::Hamming {
                    SingerVariant::TraceOneBinary
                } else {
                    SingerVariant::TraceZeroProjective
                };
                let (set, n) = singer_difference_set(ctx, variant)?;
                characteristic_sequence(&set, n, ctx.base().clone())
            }
            Family::Welch => mono((1u64 << ((m - 1) / 2)) + 3),
            Family::Power2h1 => mono(pow2(h)? - 1),
            Family::Niho => mono(pow2((m - 1) / 2)? + pow2((m - 1) / 4)? - 1),
            Family::Kasami => mono(pow2(2 * h)? - pow2(h)? + 1),
            Family::Inverse => mono(ctx.size() - 2),
            Family::PlanarGold => {
                // x^(q^κ+1) only depends on q^κ modulo q^m − 1.
                let k = params.kappa.unwrap_or(0);
                mono(pow_mod(q, u64::from(k), ctx.n()) + 1)
            }
            Family::QhMinus1 | Family::QhMinus1H3 => {
                let h = if self.family == Family::QhMinus1H3 {
                    3
                } else {
                    h
                };
                mono(geometric(q, h)?)
            }
            Family::Cm | Family::CmH3 => {
                let h = if self.family == Family::CmH3 { 3 } else { h };
                let t = checked_pow(3, h)?;
                mono(t.div_ceil(2))
            }
            Family::DicksonPu => {
                let u = params.u.unwrap_or(0);
                let e = checked_pow(ctx.p(), u)?;
                let a = ctx.elem(params.a.unwrap_or(0))?;
                if e <= 64 {
                    dickson_sequence(ctx, DicksonKind::First, e as usize, &a)
                } else {
                    // D_{p^u}(x, a) = x^{p^u} in characteristic p.
                    mono(e)
                }
            }
            f => {
                let degree = match f {
                    Family::DicksonD2 => 2,
                    Family::DicksonD3Q2 | Family::DicksonD3Qt => 3,
                    Family::DicksonD4Q3 | Family::DicksonD4Qt => 4,
                    _ => 5,
                };
                let a = ctx.elem(params.a.unwrap_or(0))?;
                dickson_sequence(ctx, DicksonKind::First, degree, &a)
            }
        }
    }
}

fn pow2(e: u32) -> Result<u64> {
    checked_pow(2, e)
}

fn checked_pow(base: u64, e: u32) -> Result<u64> {
    base.checked_pow(e)
        .ok_or_else(|| Error::InvalidParameter(format!("{base}^{e} overflows")))
}

fn pow_mod(base: u64, mut e: u64, n: u64) -> u64 {
    let n = u128::from(n);
    let mut b = u128::from(base) % n;
    let mut acc = 1u128 % n;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % n;
        }
        b = b * b % n;
        e >>= 1;
    }
    acc as u64
}

/// `(q^h − 1)/(q − 1)`.
fn geometric(q: u64, h: u32) -> Result<u64> {
    let mut acc = 0u64;
    for i in 0..h {
        acc = acc
            .checked_add(checked_pow(q, i)?)
            .ok_or_else(|| Error::InvalidParameter("exponent overflows".into()))?;
    }
    Ok(acc)
}

fn field_condition(family: Family, params: &Params) -> std::result::Result<(), String> {
    let (p, s) = (params.p, params.s);
    let q = params.q();
    let need = |ok: bool, text: &str| if ok { Ok(()) } else { Err(text.to_string()) };
    match family {
        Family::Hamming
        | Family::Welch
        | Family::Power2h1
        | Family::Niho
        | Family::Kasami
        | Family::Inverse
        | Family::DicksonD3Q2
        | Family::DicksonD5Q2 => need(q == 2, "q = 2"),
        Family::PlanarGold => need(p != 2, "q odd"),
        Family::Cm | Family::CmH3 | Family::DicksonD4Q3 | Family::DicksonD5Q3 => {
            need(q == 3, "q = 3")
        }
        Family::DicksonD2 => need(p > 2, "p > 2"),
        Family::DicksonD3Qt => need(p >= 5 || (p == 2 && s >= 2), "p >= 5, or p = 2 and s >= 2"),
        Family::DicksonD4Qt => need(p >= 5 || (p == 3 && s >= 2), "p >= 5, or p = 3 and s >= 2"),
        Family::DicksonD5Q4 => need(q == 4, "q = 4"),
        Family::DicksonD5Q2t => need(p == 2 && s >= 3, "p = 2 and s >= 3"),
        Family::DicksonD5Q3t => need(p == 3 && s >= 2, "p = 3 and s >= 2"),
        Family::DicksonD5P7 => need(p >= 7, "p >= 7"),
        Family::SingerComplement | Family::QhMinus1 | Family::QhMinus1H3 | Family::DicksonPu => {
            Ok(())
        }
    }
}

/// Largest h allowed by `1 <= h <= (m−1)/2` (m odd) or `m/2` (m even).
fn half_bound(m: u32) -> u32 {
    if m % 2 == 1 {
        (m - 1) / 2
    } else {
        m / 2
    }
}

fn kasami_bound(m: u32) -> u32 {
    let r = match m % 4 {
        1 => 1,
        3 => 3,
        0 => 4,
        _ => 2,
    };
    m.saturating_sub(r) / 4
}

fn hypotheses(family: Family, params: &Params) -> std::result::Result<(), String> {
    field_condition(family, params)?;
    let m = params.m;
    let h = params.h.unwrap_or(0);
    let need = |ok: bool, text: String| if ok { Ok(()) } else { Err(text) };
    match family {
        Family::Hamming | Family::Inverse => need(m >= 2, format!("m >= 2 (m = {m})")),
        Family::SingerComplement => need(m >= 3, format!("m >= 3 (m = {m})")),
        Family::Welch => need(m % 2 == 1 && m >= 7, format!("m = 2t+1 >= 7 (m = {m})")),
        Family::Power2h1 => need(
            h >= 2 && h <= m.div_ceil(2),
            format!("2 <= h <= ceil(m/2) (h = {h}, m = {m})"),
        ),
        Family::Niho => need(
            m >= 9 && m % 4 == 1,
            format!("m >= 9 odd with m ≡ 1 (mod 4) (m = {m})"),
        ),
        Family::Kasami => {
            need(m.gcd(&h) == 1, format!("gcd(m, h) = 1 (m = {m}, h = {h})"))?;
            need(
                h >= 1 && h <= kasami_bound(m),
                format!("1 <= h <= {} for m = {m} (h = {h})", kasami_bound(m)),
            )
        }
        Family::PlanarGold => {
            let k = params.kappa.unwrap_or(0);
            need(m % 2 == 1, format!("m odd (m = {m})"))?;
            need(k >= 1, format!("kappa >= 1 (kappa = {k})"))?;
            need(
                (m / m.gcd(&k)) % 2 == 1,
                format!("m/gcd(m, kappa) odd (m = {m}, kappa = {k})"),
            )
        }
        Family::QhMinus1 => need(
            h >= 1 && h <= half_bound(m),
            format!("1 <= h <= {} for m = {m} (h = {h})", half_bound(m)),
        ),
        Family::QhMinus1H3 => need(
            half_bound(m) >= 3,
            format!("h = 3 <= {} for m = {m}", half_bound(m)),
        ),
        Family::Cm => {
            need(h % 2 == 1, format!("h odd (h = {h})"))?;
            need(m.gcd(&h) == 1, format!("gcd(m, h) = 1 (m = {m}, h = {h})"))?;
            need(
                h >= 3 && h <= half_bound(m),
                format!("3 <= h <= {} for m = {m} (h = {h})", half_bound(m)),
            )
        }
        Family::CmH3 => {
            need(m % 3 != 0, format!("gcd(m, 3) = 1 (m = {m})"))?;
            need(
                half_bound(m) >= 3,
                format!("h = 3 <= {} for m = {m}", half_bound(m)),
            )
        }
        Family::DicksonPu
        | Family::DicksonD3Qt
        | Family::DicksonD4Qt
        | Family::DicksonD5Q3t
        | Family::DicksonD5P7 => need(m >= 2, format!("m >= 2 (m = {m})")),
        Family::DicksonD2
        | Family::DicksonD4Q3
        | Family::DicksonD5Q4
        | Family::DicksonD5Q2t
        | Family::DicksonD5Q3 => need(m >= 3, format!("m >= 3 (m = {m})")),
        Family::DicksonD3Q2 => need(m >= 4, format!("m >= 4 (m = {m})")),
        Family::DicksonD5Q2 => need(m >= 5, format!("m >= 5 (m = {m})")),
    }
}

/// Evaluates the claim at `params`, enforcing its hypotheses.
pub fn predict(claim: &Claim, params: &Params) -> Result<Prediction> {
    claim.check(params)?;
    let ctx = FieldCtx::new(params.p, params.s, params.m)?;
    predict_in(claim, params, &ctx)
}

fn predict_in(claim: &Claim, params: &Params, ctx: &FieldCtx) -> Result<Prediction> {
    claim.require(params)?;
    let shape = shape(claim.family, params, ctx)?;
    let n = match claim.family {
        Family::SingerComplement => ctx.n() / (ctx.q() - 1),
        _ => ctx.n(),
    };
    let span = usize::try_from(shape.span)
        .ok()
        .filter(|&s| s as u64 <= n)
        .ok_or_else(|| {
            Error::InvalidParameter(format!("predicted span {} is out of range", shape.span))
        })?;
    let (factors, mpoly) = match &shape.exponents {
        Some(exps) => {
            let leaders: BTreeSet<u64> = exps
                .iter()
                .map(|&e| neg_leader(e, ctx.q(), ctx.n()))
                .collect();
            let base = ctx.base().clone();
            let mut g = Poly::one(base.clone());
            let unit = Poly::linear(base, 1)?;
            for _ in 0..shape.unit {
                g = g.mul(&unit)?;
            }
            for &j in &leaders {
                g = g.mul(&minimal_polynomial_of_power(ctx, j as i64)?)?;
            }
            (Some(leaders.into_iter().collect()), Some(g))
        }
        None => (None, None),
    };
    Ok(Prediction {
        case: shape.case,
        unit_exponent: shape.unit,
        factors,
        mpoly,
        span,
        dimension: n as usize - span,
        distance: shape.distance,
    })
}

/// Leader of the q-cyclotomic coset of `−e` modulo n.
fn neg_leader(e: u64, q: u64, n: u64) -> u64 {
    let start = (n - e % n) % n;
    let mut best = start;
    let mut j = start;
    loop {
        j = (u128::from(j) * u128::from(q) % u128::from(n)) as u64;
        if j == start {
            return best;
        }
        best = best.min(j);
    }
}

fn np(x: i64, p: u64) -> u8 {
    np_indicator(x, p)
}

fn np64(x: u32, p: u64) -> i64 {
    i64::from(np(i64::from(x), p))
}

fn div3(x: i64) -> Result<i64> {
    if x % 3 == 0 {
        Ok(x / 3)
    } else {
        Err(Error::InvalidParameter(format!(
            "{x} is not divisible by 3"
        )))
    }
}

/// Odd `j` in `[from, 2^t − 1]` with `κ_j^{(t)} = 1`.
fn kappa_odds(t: u32, from: u64) -> Result<Vec<u64>> {
    let top = pow2(t)? - 1;
    let mut out = Vec::new();
    let mut j = from;
    while j <= top {
        if kappa(j, t)? == 1 {
            out.push(j);
        }
        j += 2;
    }
    Ok(out)
}

/// Strictly increasing `k`-tuples drawn from `lo..hi`.
fn increasing_tuples(lo: u32, hi: u32, k: usize) -> Vec<Vec<u32>> {
    fn go(lo: u32, hi: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in lo..hi {
            cur.push(i);
            go(i + 1, hi, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lo, hi, k, &mut Vec::new(), &mut out);
    out
}

/// `N(J, t)`, taken as 0 when `J < t`.
fn n_vectors(j: u32, t: u32) -> Result<i64> {
    if j < t {
        return Ok(0);
    }
    let v = count_vectors(u64::from(j), u64::from(t))?;
    i64::try_from(v).map_err(|_| Error::InvalidParameter("N(J, t) overflows".into()))
}

fn shape(family: Family, params: &Params, ctx: &FieldCtx) -> Result<Shape> {
    let m = params.m;
    let mi = i64::from(m);
    let p = ctx.p();
    let q = ctx.q();
    let h = params.h.unwrap_or(0);
    let delta = |x: FieldElem| u8::from(ctx.raw_trace(x) != 0);
    let int = |v: i64| ctx.from_int(v);
    let add = |x: FieldElem, y: FieldElem| ctx.raw_add(x, y);
    let mul = |x: FieldElem, y: FieldElem| ctx.raw_mul(x, y);
    let a = ctx.elem(params.a.unwrap_or(0))?;
    let zero = ctx.zero();
    let one = ctx.one();
    let a2 = mul(a, a);
    let d1 = delta(one);
    let d1i = i64::from(d1);

    let shape = match family {
        Family::Hamming => Shape::new("m-sequence", 0, vec![1], mi, exact(3)),
        Family::SingerComplement => {
            let c = binomial(p + u64::from(m) - 2, u64::from(m) - 1)
                .checked_pow(params.s)
                .ok_or_else(|| Error::InvalidParameter("dimension overflows".into()))?;
            Shape {
                case: "projective trace-zero set".into(),
                unit: 0,
                exponents: None,
                span: c as i64 + 1,
                distance: DistanceClaim::Unstated,
            }
        }
        Family::Welch => {
            let t = (m - 1) / 2;
            let b = pow2(t)?;
            Shape::new(
                format!("t={t}"),
                1,
                vec![1, 3, b + 1, b + 2, b + 3],
                5 * mi + 1,
                at_least(8),
            )
        }
        Family::Power2h1 => {
            let sign = if h % 2 == 1 { 1 } else { -1 };
            let odd = i64::from(m % 2);
            let span = div3(mi * (pow2(h)? as i64 + sign))? + odd;
            let base = pow2(h.saturating_sub(2))? as usize;
            let d = if m % 2 == 1 && h > 2 {
                base + 2
            } else {
                base + 1
            };
            let case = if m % 2 == 1 { "m odd" } else { "m even" };
            Shape::new(case, m as u8 % 2, kappa_odds(h, 1)?, span, at_least(d))
        }
        Family::Niho => {
            let r = (m - 1) / 4;
            let half = pow2((m - 1) / 2)?;
            let top = pow2(r)?;
            let sign = if r % 2 == 1 { 1 } else { -1 }; // (−1)^{(m−5)/4} = (−1)^{r−1}
            if m % 8 == 1 {
                let span = div3(mi * (pow2(r + 2)? as i64 + sign) + 3)?;
                let mut exps: Vec<u64> = (0..top).map(|i| i + half).collect();
                exps.extend(kappa_odds(r, 1)?);
                Shape::new("m ≡ 1 (mod 8)", 1, exps, span, at_least(top as usize + 2))
            } else {
                let span = div3(mi * (pow2(r + 2)? as i64 + sign - 6) + 3)?;
                let mut exps: Vec<u64> = (1..top).map(|i| i + half).collect();
                exps.extend(kappa_odds(r, 3)?);
                Shape::new("m ≡ 5 (mod 8)", 1, exps, span, at_least(top as usize))
            }
        }
        Family::Kasami => {
            let top = pow2(h)?;
            let shift = pow2(m.saturating_sub(h))?;
            let sign = if h % 2 == 1 { 1 } else { -1 };
            if h % 2 == 0 {
                let span = div3(mi * (pow2(h + 2)? as i64 + sign) + 3)?;
                let mut exps: Vec<u64> = (0..top).map(|i| i + shift).collect();
                exps.extend(kappa_odds(h, 1)?);
                Shape::new("h even", 1, exps, span, at_least(top as usize + 2))
            } else {
                let span = div3(mi * (pow2(h + 2)? as i64 + sign - 6) + 3)?;
                let mut exps: Vec<u64> = (1..top).map(|i| i + shift).collect();
                exps.extend(kappa_odds(h, 3)?);
                Shape::new("h odd", 1, exps, span, at_least(top as usize))
            }
        }
        Family::Inverse => {
            let n = ctx.n();
            let table = crate::cyclotomic::CosetTable::new(n, 2)?;
            let mut exps = Vec::new();
            for &j in table.leaders() {
                if table.nu(j, m)? == 1 {
                    exps.push(j);
                }
            }
            // m_{α^{−j}} for leaders j; the unit factor is j = 0.
            let unit = u8::from(exps.first() == Some(&0));
            exps.retain(|&j| j != 0);
            let distance = if m % 2 == 1 {
                DistanceClaim::EvenSquareBound { n: n as usize }
            } else {
                DistanceClaim::Unstated
            };
            let case = if m % 2 == 1 { "m odd" } else { "m even" };
            Shape::new(case, unit, exps, n.div_ceil(2) as i64, distance)
        }
        Family::PlanarGold => {
            let k = params.kappa.unwrap_or(0);
            let npm = np(mi, p);
            let qk = pow_mod(q, u64::from(k), ctx.n());
            let d = match (q == 3, m as u64 % p == 0) {
                (true, true) => exact(4),
                (true, false) => range(4, 5),
                (false, true) => exact(3),
                (false, false) => range(3, 4),
            };
            Shape::new(
                format!("N_p(m)={npm}"),
                npm,
                vec![1, qk + 1],
                2 * mi + i64::from(npm),
                d,
            )
        }
        Family::QhMinus1 => {
            let npm = np(mi, p);
            let mut exps = Vec::new();
            if np64(h, p) == 1 {
                exps.push(1);
            }
            for u in 1..h {
                if np64(h - u, p) == 1 {
                    exps.push(1 + checked_pow(q, u)?);
                }
            }
            for t in 2..h {
                for u in t..h {
                    if np64(h - u, p) != 1 {
                        continue;
                    }
                    for tuple in increasing_tuples(1, u, (t - 1) as usize) {
                        let mut e = 1 + checked_pow(q, u)?;
                        for i in tuple {
                            e += checked_pow(q, i)?;
                        }
                        exps.push(e);
                    }
                }
            }
            let mut coef = np64(h, p);
            for t in 1..h {
                for u in 1..h {
                    coef += np64(h - u, p) * n_vectors(u, t)?;
                }
            }
            Shape::new(
                format!("N_p(h)={}, N_p(m)={npm}", np64(h, p)),
                npm,
                exps,
                coef * mi + i64::from(npm),
                DistanceClaim::Unstated,
            )
        }
        Family::QhMinus1H3 => {
            let npm = np(mi, p);
            let q2 = q * q;
            let (exps, span) = if p == 3 {
                (vec![1 + q, 1 + q2, 1 + q + q2], 3 * mi)
            } else {
                (vec![1, 1 + q, 1 + q2, 1 + q + q2], 4 * mi)
            };
            let d = match (p, npm) {
                (2, _) => DistanceClaim::Unstated,
                (3, 1) => range(3, 8),
                (3, _) => range(3, 6),
                _ => range(3, 8),
            };
            Shape::new(
                format!("p={p}, N_p(m)={npm}"),
                npm,
                exps,
                span + i64::from(npm),
                d,
            )
        }
        Family::Cm => {
            let n3 = |x: u32| np64(x, 3);
            let n3m = np(mi, 3);
            let p3 = |i: u32| checked_pow(3, i);
            let mut exps = Vec::new();
            if n3(h + 1) == 1 {
                exps.push(1);
            }
            exps.push(2);
            for t in 1..h {
                for tuple in increasing_tuples(1, h, t as usize) {
                    let mut e = 2;
                    for i in tuple {
                        e += p3(i)?;
                    }
                    exps.push(e);
                }
            }
            for u in 1..h {
                if n3(h - u + 1) == 1 {
                    exps.push(1 + p3(u)?);
                }
            }
            for t in 2..h {
                for it in t..h {
                    if n3(h - it + 1) != 1 {
                        continue;
                    }
                    for tuple in increasing_tuples(1, it, (t - 1) as usize) {
                        let mut e = 1 + p3(it)?;
                        for i in tuple {
                            e += p3(i)?;
                        }
                        exps.push(e);
                    }
                }
            }
            let mut first = 0i64;
            for i in 0..=h {
                first += n3(h - i + 1);
            }
            let mut second = 0i64;
            for t in 2..=h {
                second += n_vectors(h, t)?;
            }
            for t in 2..h {
                for it in t..h {
                    second += n3(h - it + 1) * n_vectors(it, t)?;
                }
            }
            Shape::new(
                format!("N_3(m)={n3m}"),
                n3m,
                exps,
                i64::from(n3m) + (first + second) * mi,
                DistanceClaim::Unstated,
            )
        }
        Family::CmH3 => {
            let n3m = np(mi, 3);
            let d = if n3m == 1 { range(5, 16) } else { range(4, 16) };
            Shape::new(
                format!("N_3(m)={n3m}"),
                n3m,
                vec![1, 2, 5, 10, 11, 13, 14],
                7 * mi + i64::from(n3m),
                d,
            )
        }
        Family::DicksonPu => {
            let u = params.u.unwrap_or(0);
            let d = match (q == 2, d1) {
                (true, 1) => 4,
                (true, _) => 3,
                (false, 1) => 3,
                (false, _) => 2,
            };
            Shape::new(
                format!("δ(1)={d1}"),
                d1,
                vec![checked_pow(p, u)?],
                mi + d1i,
                exact(d),
            )
        }
        Family::DicksonD2 => {
            let dl = delta(add(one, mul(int(-2), a)));
            let d = match (q == 3, dl) {
                (true, 0) => 4,
                (true, _) => 5,
                (false, 0) => 3,
                (false, _) => 4,
            };
            Shape::new(
                format!("δ(1−2a)={dl}"),
                dl,
                vec![1, 2],
                2 * mi + i64::from(dl),
                exact(d),
            )
        }
        Family::DicksonD3Q2 => {
            if a == zero {
                let d = if d1 == 0 { 2 } else { 4 };
                Shape::new(format!("a=0, δ(1)={d1}"), d1, vec![3], mi + d1i, exact(d))
            } else {
                let dl = delta(add(one, a));
                let d = if dl == 0 { 5 } else { 6 };
                Shape::new(
                    format!("a≠0, δ(1+a)={dl}"),
                    dl,
                    vec![1, 3],
                    2 * mi + i64::from(dl),
                    exact(d),
                )
            }
        }
        Family::DicksonD3Qt => {
            if a == one {
                let dl = delta(int(-2));
                Shape::new(
                    format!("a=1, δ(−2)={dl}"),
                    dl,
                    vec![3, 2],
                    2 * mi + i64::from(dl),
                    at_least(3),
                )
            } else {
                let dl = delta(add(one, mul(int(-3), a)));
                let d = match (q == 4, dl) {
                    (true, 0) => 5,
                    (true, _) => 6,
                    (false, 0) => 4,
                    (false, _) => 5,
                };
                Shape::new(
                    format!("a≠1, δ(1−3a)={dl}"),
                    dl,
                    vec![3, 2, 1],
                    3 * mi + i64::from(dl),
                    at_least(d),
                )
            }
        }
        Family::DicksonD4Q3 => {
            if a == zero {
                let d = if m % 6 == 0 { exact(3) } else { at_least(4) };
                Shape::new(format!("a=0, δ(1)={d1}"), d1, vec![4, 1], 2 * mi + d1i, d)
            } else if a == one {
                Shape::new(
                    format!("a=1, δ(1)={d1}"),
                    d1,
                    vec![4, 2],
                    2 * mi + d1i,
                    exact(2),
                )
            } else {
                let dl = delta(add(add(one, ctx.raw_neg(a)), ctx.raw_neg(a2)));
                let d = if dl == 0 { at_least(5) } else { exact(6) };
                Shape::new(
                    format!("a∉{{0,1}}, δ(1−a−a²)={dl}"),
                    dl,
                    vec![4, 2, 1],
                    3 * mi + i64::from(dl),
                    d,
                )
            }
        }
        Family::DicksonD4Qt => {
            let two = int(2);
            let three_halves = ctx.div(&int(3), &two)?;
            let half = ctx.div(&one, &two)?;
            if a == three_halves {
                Shape::new(
                    format!("a=3/2, δ(1)={d1}"),
                    d1,
                    vec![4, 3, 1],
                    3 * mi + d1i,
                    at_least(3),
                )
            } else if a == half {
                Shape::new(
                    format!("a=1/2, δ(1)={d1}"),
                    d1,
                    vec![4, 3, 2],
                    3 * mi + d1i,
                    at_least(4),
                )
            } else {
                let c = add(add(one, mul(int(-4), a)), mul(two, a2));
                let dl = delta(c);
                let d = if dl == 0 { at_least(5) } else { exact(6) };
                Shape::new(
                    format!("a∉{{3/2,1/2}}, δ(1−4a+2a²)={dl}"),
                    dl,
                    vec![1, 2, 3, 4],
                    4 * mi + i64::from(dl),
                    d,
                )
            }
        }
        Family::DicksonD5Q2 => {
            let a3 = mul(a2, a);
            let n = ctx.n();
            if a == zero {
                let d = match (d1, n % 5 == 0) {
                    (1, _) => 4,
                    (_, true) => 2,
                    (_, false) => 3,
                };
                Shape::new(format!("a=0, δ(1)={d1}"), d1, vec![5], mi + d1i, exact(d))
            } else if add(add(one, a), a3) == zero {
                let d = if d1 == 0 { 3 } else { 4 };
                Shape::new(
                    format!("1+a+a³=0, δ(1)={d1}"),
                    d1,
                    vec![5, 3],
                    2 * mi + d1i,
                    at_least(d),
                )
            } else {
                let d = if d1 == 0 { at_least(7) } else { exact(8) };
                Shape::new(
                    format!("a+a²+a⁴≠0, δ(1)={d1}"),
                    d1,
                    vec![1, 3, 5],
                    3 * mi + d1i,
                    d,
                )
            }
        }
        Family::DicksonD5Q4 => {
            let n = ctx.n();
            if a == zero {
                let d = match (d1, n % 5 == 0) {
                    (0, true) => exact(2),
                    (_, false) => exact(3),
                    _ => DistanceClaim::Unstated,
                };
                Shape::new(format!("a=0, δ(1)={d1}"), d1, vec![5], mi + d1i, d)
            } else if a == one {
                Shape::new(
                    format!("a=1, δ(1)={d1}"),
                    d1,
                    vec![5, 3, 2],
                    3 * mi + d1i,
                    at_least(3),
                )
            } else {
                let dl = delta(add(add(one, a), a2));
                let d = if dl == 0 { 6 } else { 7 };
                Shape::new(
                    format!("a+a²≠0, δ(1+a+a²)={dl}"),
                    dl,
                    vec![5, 3, 2, 1],
                    4 * mi + i64::from(dl),
                    at_least(d),
                )
            }
        }
        Family::DicksonD5Q2t => {
            let c = add(add(one, a), a2);
            if a == zero {
                let d = if d1 == 0 { 3 } else { 4 };
                Shape::new(
                    format!("a=0, δ(1)={d1}"),
                    d1,
                    vec![5, 4, 1],
                    3 * mi + d1i,
                    at_least(d),
                )
            } else if c == zero {
                Shape::new("1+a+a²=0", 0, vec![2, 3, 4, 5], 4 * mi, at_least(5))
            } else {
                let dl = delta(c);
                let d = if dl == 0 { 6 } else { 7 };
                Shape::new(
                    format!("a+a²+a³≠0, δ(1+a+a²)={dl}"),
                    dl,
                    vec![1, 2, 3, 4, 5],
                    5 * mi + i64::from(dl),
                    at_least(d),
                )
            }
        }
        Family::DicksonD5Q3 => {
            let dl = delta(add(add(one, a), mul(int(2), a2)));
            let a6 = ctx.raw_pow(a, 6);
            if a == a6 {
                Shape::new(
                    format!("a=a⁶, δ(1+a+2a²)={dl}"),
                    dl,
                    vec![5, 4, 2],
                    3 * mi + i64::from(dl),
                    at_least(4),
                )
            } else {
                let d = if dl == 0 { 7 } else { 8 };
                Shape::new(
                    format!("a≠a⁶, δ(1+a+2a²)={dl}"),
                    dl,
                    vec![2, 3, 4, 5],
                    4 * mi + i64::from(dl),
                    at_least(d),
                )
            }
        }
        Family::DicksonD5Q3t => {
            let minus_one = int(-1);
            if a == minus_one {
                let d = if d1 == 0 { 3 } else { 4 };
                Shape::new(
                    format!("a=−1, δ(1)={d1}"),
                    d1,
                    vec![5, 4, 2, 1],
                    4 * mi + d1i,
                    at_least(d),
                )
            } else if a2 == minus_one {
                let dl = delta(add(a, minus_one));
                let d = if dl == 0 { 5 } else { 6 };
                Shape::new(
                    format!("a²=−1, δ(a−1)={dl}"),
                    dl,
                    vec![5, 4, 3, 2],
                    4 * mi + i64::from(dl),
                    at_least(d),
                )
            } else {
                let dl = delta(add(add(one, a), mul(int(2), a2)));
                let d = if dl == 0 { 6 } else { 7 };
                Shape::new(
                    format!("(a+1)(a²+1)≠0, δ(1+a+2a²)={dl}"),
                    dl,
                    vec![1, 2, 3, 4, 5],
                    5 * mi + i64::from(dl),
                    at_least(d),
                )
            }
        }
        Family::DicksonD5P7 => {
            let dl = delta(add(add(one, mul(int(-5), a)), mul(int(5), a2)));
            let two_thirds = ctx.div(&int(2), &int(3))?;
            let golden = add(add(a2, mul(int(-3), a)), one);
            let (case, exps, d0) = if a == int(2) {
                ("a=2", vec![5, 4, 2, 1], 3)
            } else if a == two_thirds {
                ("a=2/3", vec![5, 4, 3, 1], 4)
            } else if golden == zero {
                ("a²−3a+1=0", vec![5, 4, 3, 2], 5)
            } else {
                ("generic", vec![1, 2, 3, 4, 5], 6)
            };
            let span = exps.len() as i64 * mi + i64::from(dl);
            Shape::new(
                format!("{case}, δ(1−5a+5a²)={dl}"),
                dl,
                exps,
                span,
                at_least(d0 + usize::from(dl)),
            )
        }
    };
    Ok(shape)
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n.saturating_sub(k));
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Verdict of a computed distance against a prediction.
pub fn distance_verdict(claim: &DistanceClaim, computed: Option<&DistanceResult>) -> Verdict {
    let Some(d) = computed else {
        return Verdict::NotComputed;
    };
    let (lo, hi) = (d.lower, d.upper);
    match *claim {
        DistanceClaim::Exact { value } => {
            if d.exact {
                if lo == value {
                    Verdict::Match
                } else {
                    Verdict::Mismatch
                }
            } else if value < lo || value > hi {
                Verdict::Mismatch
            } else {
                Verdict::NotComputed
            }
        }
        DistanceClaim::AtLeast { value } => {
            if lo >= value {
                Verdict::BoundConsistent
            } else if hi < value {
                Verdict::Mismatch
            } else {
                Verdict::NotComputed
            }
        }
        DistanceClaim::Range { lo: a, hi: b } => {
            if lo >= a && hi <= b {
                Verdict::BoundConsistent
            } else if hi < a || lo > b {
                Verdict::Mismatch
            } else {
                Verdict::NotComputed
            }
        }
        DistanceClaim::EvenSquareBound { n } => {
            let ok = |x: usize| {
                let x = x as u128;
                x * x - x + 1 >= n as u128
            };
            if d.exact {
                if lo % 2 == 0 && ok(lo) {
                    Verdict::Match
                } else {
                    Verdict::Mismatch
                }
            } else if !ok(hi) {
                Verdict::Mismatch
            } else {
                Verdict::NotComputed
            }
        }
        DistanceClaim::Unstated => Verdict::NotComputed,
    }
}

/// How [`verify_claim`] treats a parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Codeword budget for distance computations.
    pub budget: u64,
    /// When false, points outside the hypotheses are still evaluated and
    /// every verdict becomes [`Verdict::Exploratory`].
    pub check_hypotheses: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: crate::code::DEFAULT_BUDGET,
            check_hypotheses: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictedRecord {
    pub case: String,
    pub mpoly: Option<String>,
    pub span: usize,
    pub dimension: usize,
    pub distance: DistanceClaim,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComputedRecord {
    pub mpoly: String,
    pub span: usize,
    pub dimension: usize,
    /// Berlekamp–Massey and the gcd route returned the same polynomial.
    pub oracles_agree: bool,
    pub distance: Option<DistanceResult>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub mpoly: Verdict,
    pub span: Verdict,
    pub dimension: Verdict,
    pub distance: Verdict,
}

impl Verdicts {
    pub fn any_mismatch(&self) -> bool {
        [self.mpoly, self.span, self.dimension, self.distance].contains(&Verdict::Mismatch)
    }
}

/// Outcome of checking one claim at one parameter point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimReport {
    pub claim: &'static str,
    pub params: Params,
    pub hypotheses_hold: bool,
    pub n: usize,
    pub open_distance: bool,
    pub predicted: Option<PredictedRecord>,
    pub computed: ComputedRecord,
    pub verdicts: Verdicts,
    /// Wall time in seconds; `None` when timing is suppressed.
    pub seconds: Option<f64>,
}

impl ClaimReport {
    pub fn has_mismatch(&self) -> bool {
        self.verdicts.any_mismatch()
    }

    pub const CSV_HEADER: &'static str =
        "claim,params,n,k,span_verdict,mpoly_verdict,d_computed,d_verdict,seconds";

    /// One CSV row in the column order of [`Self::CSV_HEADER`].
    pub fn csv_row(&self) -> String {
        let d = match &self.computed.distance {
            Some(d) if d.exact => d.lower.to_string(),
            Some(d) => format!("{}..{}", d.lower, d.upper),
            None => String::new(),
        };
        let secs = self.seconds.map(|s| format!("{s:.3}")).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.claim,
            self.params,
            self.n,
            self.computed.dimension,
            self.verdicts.span,
            self.verdicts.mpoly,
            d,
            self.verdicts.distance,
            secs
        )
    }
}

/// Builds the sequence, computes its minimal polynomial two ways and the
/// code's distance within budget, and compares with [`predict`].
pub fn verify_claim(claim: &Claim, params: &Params, options: VerifyOptions) -> Result<ClaimReport> {
    let start = Instant::now();
    claim.require(params)?;
    let hypotheses_hold = match claim.check(params) {
        Ok(()) => true,
        Err(e) if options.check_hypotheses => return Err(e),
        Err(_) => false,
    };
    let ctx = FieldCtx::new(params.p, params.s, params.m)?;
    let prediction = if hypotheses_hold {
        Some(predict_in(claim, params, &ctx)?)
    } else {
        predict_in(claim, params, &ctx).ok()
    };
    let seq = claim.sequence(&ctx, params)?;
    let n = seq.period();
    let bm = berlekamp_massey(&seq);
    let via_gcd = minimal_poly_via_gcd(&seq);
    let oracles_agree = bm.minimal_poly == via_gcd;
    let code = CyclicCode::new(n, bm.minimal_poly.clone())?;
    let distance = if code.is_zero_code() {
        None
    } else {
        Some(min_distance(&code, options.budget)?)
    };
    let computed = ComputedRecord {
        mpoly: bm.minimal_poly.to_text(),
        span: bm.linear_span,
        dimension: code.k(),
        oracles_agree,
        distance,
    };
    let verdicts = if !hypotheses_hold {
        Verdicts {
            mpoly: Verdict::Exploratory,
            span: Verdict::Exploratory,
            dimension: Verdict::Exploratory,
            distance: Verdict::Exploratory,
        }
    } else {
        let pred = prediction
            .as_ref()
            .expect("prediction exists under the hypotheses");
        let eq = |ok: bool| {
            if ok {
                Verdict::Match
            } else {
                Verdict::Mismatch
            }
        };
        Verdicts {
            mpoly: match &pred.mpoly {
                Some(g) => eq(oracles_agree && *g == bm.minimal_poly),
                None if oracles_agree => Verdict::NotComputed,
                None => Verdict::Mismatch,
            },
            span: eq(pred.span == computed.span),
            dimension: eq(pred.dimension == computed.dimension),
            distance: distance_verdict(&pred.distance, computed.distance.as_ref()),
        }
    };
    let predicted = prediction.map(|p| PredictedRecord {
        case: p.case,
        mpoly: p.mpoly.map(|g| g.to_text()),
        span: p.span,
        dimension: p.dimension,
        distance: p.distance,
    });
    Ok(ClaimReport {
        claim: claim.id,
        params: *params,
        hypotheses_hold,
        n,
        open_distance: claim.open_distance,
        predicted,
        computed,
        verdicts,
        seconds: Some(start.elapsed().as_secs_f64()),
    })
}
