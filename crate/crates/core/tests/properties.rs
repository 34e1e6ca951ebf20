use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;

use seqcyclic::claims::{predict, registry, Params};
use seqcyclic::code::{macwilliams_transform, weight_distribution};
use seqcyclic::design::{
    classify_subset, count_vectors, singer_difference_set, DesignKind, SingerVariant,
};
use seqcyclic::sequence::characteristic_sequence;
use seqcyclic::{
    berlekamp_massey, BaseField, CosetTable, CyclicCode, FieldCtx, PeriodicSequence, Poly,
};

const FIELDS: [(u64, u32); 4] = [(2, 1), (3, 1), (2, 2), (5, 1)];

fn field(idx: usize) -> Arc<BaseField> {
    let (p, s) = FIELDS[idx];
    BaseField::new(p, s).unwrap()
}

fn poly_in(f: &Arc<BaseField>, coeffs: &[u64]) -> Poly {
    let q = f.q();
    Poly::new(f.clone(), coeffs.iter().map(|c| c % q).collect()).unwrap()
}

fn coeffs(max_len: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..64, 1..max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_identity(fi in 0..FIELDS.len(), a in coeffs(12), b in coeffs(8)) {
        let f = field(fi);
        let (a, b) = (poly_in(&f, &a), poly_in(&f, &b));
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn bezout_identity(fi in 0..FIELDS.len(), a in coeffs(10), b in coeffs(10)) {
        let f = field(fi);
        let (a, b) = (poly_in(&f, &a), poly_in(&f, &b));
        prop_assume!(!a.is_zero() || !b.is_zero());
        let (g, u, v) = a.ext_gcd(&b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert_eq!(&g, &a.gcd(&b).unwrap());
        prop_assert_eq!(u.mul(&a).unwrap().add(&v.mul(&b).unwrap()).unwrap(), g.clone());
        prop_assert!(g.divides(&a).unwrap() && g.divides(&b).unwrap());
    }

    #[test]
    fn reciprocal_is_an_involution_on_monic_polys(fi in 0..FIELDS.len(), a in coeffs(10)) {
        let f = field(fi);
        let a = poly_in(&f, &a).monic();
        prop_assume!(!a.is_zero() && a.coeff(0) != 0);
        prop_assert_eq!(a.reciprocal().unwrap().reciprocal().unwrap(), a.monic());
    }

    #[test]
    fn trace_is_linear_and_frobenius_invariant(
        (p, s, m) in prop::sample::select(vec![(2u64, 1u32, 4u32), (3, 1, 3), (2, 2, 3), (5, 1, 2)]),
        x in any::<u64>(),
        y in any::<u64>(),
    ) {
        let ctx = FieldCtx::new(p, s, m).unwrap();
        let x = ctx.elem(x % ctx.size()).unwrap();
        let y = ctx.elem(y % ctx.size()).unwrap();
        let tx = ctx.trace(&x).unwrap();
        let ty = ctx.trace(&y).unwrap();
        prop_assert!(tx.enc() < ctx.q());
        prop_assert_eq!(ctx.trace(&ctx.add(&x, &y).unwrap()).unwrap(), ctx.add(&tx, &ty).unwrap());
        let xq = ctx.pow(&x, ctx.q()).unwrap();
        prop_assert_eq!(ctx.trace(&xq).unwrap(), tx);
    }

    #[test]
    fn cosets_agree_with_union_find(n in 1u64..400, q in prop::sample::select(vec![2u64, 3, 4, 5, 7])) {
        prop_assume!(num_gcd(n, q) == 1);
        let table = CosetTable::new(n, q).unwrap();
        // Union-find over the functional graph j -> qj mod n.
        let mut parent: Vec<usize> = (0..n as usize).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for j in 0..n {
            let (a, b) = (find(&mut parent, j as usize), find(&mut parent, (j * q % n) as usize));
            parent[a.max(b)] = a.min(b);
        }
        let mut total = 0;
        for (leader, members) in table.iter() {
            total += members.len();
            prop_assert_eq!(leader, members[0]);
            let root = find(&mut parent, leader as usize);
            for &x in members {
                prop_assert_eq!(find(&mut parent, x as usize), root);
            }
        }
        prop_assert_eq!(total as u64, n);
        let roots: BTreeSet<usize> = (0..n as usize).map(|j| find(&mut parent, j)).collect();
        prop_assert_eq!(roots.len(), table.leaders().len());
    }

    #[test]
    fn span_is_shift_invariant(fi in 0..3usize, symbols in prop::collection::vec(0u64..4, 1..40), k in 0usize..40) {
        let f = field(fi);
        prop_assume!(num_gcd(symbols.len() as u64, f.q()) == 1);
        let symbols: Vec<u64> = symbols.into_iter().map(|x| x % f.q()).collect();
        let seq = PeriodicSequence::new(f, symbols).unwrap();
        let span = berlekamp_massey(&seq).linear_span;
        prop_assert_eq!(berlekamp_massey(&seq.shifted(k % seq.period())).linear_span, span);
    }

    #[test]
    fn dual_of_dual(fi in 0..3usize, n in prop::sample::select(vec![5usize, 7, 9, 11, 13, 15, 17, 21, 23, 31]), pick in any::<u64>()) {
        let f = field(fi);
        prop_assume!(num_gcd(n as u64, f.q()) == 1 && splits_in_budget(&f, n));
        let code = random_code(&f, n, pick);
        prop_assert_eq!(code.dual().dual(), code);
    }

    #[test]
    fn count_vectors_matches_brute_force(j in 1u64..=12, t in 1u64..=12) {
        prop_assume!(t <= j);
        // (t−1)-subsets of {1, …, J−1}.
        let brute = subsets_of_size(j - 1, t - 1);
        prop_assert_eq!(count_vectors(j, t).unwrap(), brute);
    }
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn subsets_of_size(universe: u64, size: u64) -> u128 {
    (0u32..1 << universe)
        .filter(|m| u64::from(m.count_ones()) == size)
        .count() as u128
}

/// A cyclic code whose generator is a product of a pseudo-random selection
/// of the irreducible factors of x^n − 1.
fn random_code(f: &Arc<BaseField>, n: usize, pick: u64) -> CyclicCode {
    let factors = irreducible_factors(f, n);
    let mut g = Poly::one(f.clone());
    for (i, factor) in factors.iter().enumerate() {
        if pick >> (i % 64) & 1 == 1 {
            g = g.mul(factor).unwrap();
        }
    }
    CyclicCode::new(n, g).unwrap()
}

/// Degree of the extension of GF(q) containing the n-th roots of unity.
fn splitting_degree(f: &Arc<BaseField>, n: usize) -> u32 {
    let table = CosetTable::new(n as u64, f.q()).unwrap();
    table.iter().map(|(_, c)| c.len() as u32).fold(1, lcm)
}

fn splits_in_budget(f: &Arc<BaseField>, n: usize) -> bool {
    f.q()
        .checked_pow(splitting_degree(f, n))
        .is_some_and(|v| v <= 1 << 40)
}

fn irreducible_factors(f: &Arc<BaseField>, n: usize) -> Vec<Poly> {
    let ctx = FieldCtx::new(f.p(), f.s(), splitting_degree(f, n)).unwrap();
    seqcyclic::factor_xn_minus_1(&ctx, n as u64)
        .unwrap()
        .into_iter()
        .map(|(_, p)| p)
        .collect()
}

fn lcm(a: u32, b: u32) -> u32 {
    a / num_gcd(u64::from(a), u64::from(b)) as u32 * b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn macwilliams_is_an_involution(fi in 0..3usize, n in prop::sample::select(vec![7usize, 9, 11, 13, 15]), pick in any::<u64>()) {
        let f = field(fi);
        prop_assume!(num_gcd(n as u64, f.q()) == 1);
        let code = random_code(&f, n, pick);
        prop_assume!(!code.is_zero_code() && code.k() < n);
        let budget = 1 << 20;
        let a = weight_distribution(&code, budget).unwrap();
        let dual = code.dual();
        let b = weight_distribution(&dual, budget).unwrap();
        prop_assert_eq!(&macwilliams_transform(&b, n, f.q(), dual.k()).unwrap(), &a);
        prop_assert_eq!(&macwilliams_transform(&a, n, f.q(), code.k()).unwrap(), &b);
    }

    #[test]
    fn classical_code_is_complement_of_sequence_code(
        (n, p) in prop::sample::select(vec![(7usize, 2u64), (15, 2), (13, 3), (21, 2)]),
        bits in any::<u64>(),
    ) {
        let f = BaseField::new(p, 1).unwrap();
        let d: BTreeSet<u64> = (0..n as u64).filter(|i| bits >> i & 1 == 1).collect();
        prop_assume!(!d.is_empty());
        let seq = characteristic_sequence(&d, n as u64, f.clone()).unwrap();
        let from_seq = CyclicCode::from_sequence(&seq).unwrap();
        let classical = CyclicCode::classical(&d, n as u64, f).unwrap();
        prop_assert_eq!(classical, from_seq.complement());
    }
}

#[test]
fn singer_sets_are_difference_sets() {
    for (p, m) in [(2u64, 3u32), (2, 4), (2, 5), (3, 3)] {
        let ctx = FieldCtx::new(p, 1, m).unwrap();
        let (d, n) = singer_difference_set(&ctx, SingerVariant::TraceZeroProjective).unwrap();
        let report = classify_subset(&d, n).unwrap();
        assert_eq!(report.kind, DesignKind::DifferenceSet, "p={p} m={m}");
        // (v, k, λ) = ((q^m−1)/(q−1), (q^{m−1}−1)/(q−1), (q^{m−2}−1)/(q−1)).
        let geo = |e: u32| (p.pow(e) - 1) / (p - 1);
        assert_eq!(
            (n, d.len() as u64, report.lambda),
            (geo(m), geo(m - 1), Some(geo(m - 2)))
        );
        // k(k−1) = λ(v−1).
        let k = d.len() as u64;
        assert_eq!(k * (k - 1), report.lambda.unwrap() * (n - 1));
    }
}

/// Parameter points inside each claim's hypotheses, small enough to expand.
fn sample_points() -> Vec<(&'static str, Params)> {
    let b = |m| Params::new(2, 1, m);
    vec![
        ("hamming", b(4)),
        ("singer-complement", Params::new(3, 1, 3)),
        ("welch", b(7)),
        ("welch", b(9)),
        ("power-2h-1", b(7).with_h(3)),
        ("power-2h-1", b(8).with_h(4)),
        ("niho", b(9)),
        ("niho", b(13)),
        ("kasami", b(9).with_h(2)),
        ("kasami", b(7).with_h(1)),
        ("inverse", b(6)),
        ("planar-gold", Params::new(3, 1, 5).with_kappa(2)),
        ("qh-minus-1", b(8).with_h(4)),
        ("qh-minus-1", Params::new(3, 1, 6).with_h(3)),
        ("qh-minus-1-h3", Params::new(5, 1, 6)),
        ("cm", Params::new(3, 1, 7).with_h(3)),
        ("cm-h3", Params::new(3, 1, 8)),
        ("dickson-pu", Params::new(3, 1, 3).with_u(1)),
        ("dickson-d2", Params::new(5, 1, 3).with_a(7)),
        ("dickson-d3-q2", b(5).with_a(3)),
        ("dickson-d3-qt", Params::new(2, 2, 3).with_a(9)),
        ("dickson-d4-q3", Params::new(3, 1, 4).with_a(5)),
        ("dickson-d4-qt", Params::new(7, 1, 2).with_a(4)),
        ("dickson-d5-q2", b(6).with_a(0)),
        ("dickson-d5-q4", Params::new(2, 2, 3).with_a(6)),
        ("dickson-d5-q2t", Params::new(2, 3, 3).with_a(6)),
        ("dickson-d5-q3", Params::new(3, 1, 3).with_a(2)),
        ("dickson-d5-q3t", Params::new(3, 2, 2).with_a(8)),
        ("dickson-d5-p7", Params::new(7, 1, 2).with_a(5)),
    ]
}

#[test]
fn predictions_are_internally_consistent() {
    let mut covered = BTreeSet::new();
    for (id, params) in sample_points() {
        let claim = seqcyclic::claims::lookup(id).unwrap();
        let pred = predict(claim, &params).unwrap_or_else(|e| panic!("{id} at {params}: {e}"));
        covered.insert(id);
        let ctx = FieldCtx::new(params.p, params.s, params.m).unwrap();
        let n = if id == "singer-complement" {
            ctx.n() / (ctx.q() - 1)
        } else {
            ctx.n()
        } as usize;
        assert_eq!(pred.span + pred.dimension, n, "{id} at {params}");
        if let Some(g) = &pred.mpoly {
            assert_eq!(g.degree(), Some(pred.span), "{id} at {params}");
            let xn = Poly::xn_minus_1(ctx.base().clone(), n);
            assert!(g.divides(&xn).unwrap(), "{id} at {params}");
        }
    }
    let all: BTreeSet<&str> = registry().iter().map(|c| c.id).collect();
    assert_eq!(covered, all);
}
