//! Acceptance suite. Each test checks one criterion end to end, enforces
//! its runtime budget, and prints a PASS line; all comparisons are exact.

use std::time::{Duration, Instant};

use frobcenter::center::{compute_center, CenterOptions};
use frobcenter::frobdata::{
    filter_S_prime, guess_m, hasse_ok, validate_weil, FrobeniusDatum, Verdict,
};
use frobcenter::normic::{is_normic, norm_poly, normic_divisors, DEFAULT_SUBSET_CAP};
use frobcenter::numberfield::{
    is_isomorphic, roots_in_field, trager_factor, NFElem, NFPoly, NumberField,
};
use frobcenter::pointcount::{
    count_points, frobenius_datum_from_curve, predicted_count, CurveSpec, DEFAULT_ENUM_CAP,
};
use frobcenter::polyq::{
    discriminant_q, factor_over_q, mth_root, power_sums_of_reciprocal_roots,
    resultant_bivariate, tensor_square, IntPoly, RatPoly,
};
use num::{BigInt, BigRational, Zero};
use proptest::collection::vec as pvec;
use proptest::prelude::*;

fn nf(c: &[i64]) -> NumberField {
    NumberField::new(IntPoly::from_i64(c)).unwrap()
}

/// The field Q[T]/(monic reciprocal of g), for g with constant term 1.
fn frobenius_field(g: &IntPoly) -> NumberField {
    let tilde = g.reciprocal_monic().unwrap().to_int_exact().unwrap();
    NumberField::new(tilde).unwrap()
}

fn br(v: i64) -> BigRational {
    BigRational::from(BigInt::from(v))
}

/// a + b * generator in the field m.
fn elem(m: &NumberField, a: i64, b: i64) -> NFElem {
    &m.from_rational(br(a)) + &m.generator().scale(&br(b))
}

fn nfpoly(m: &NumberField, pairs: &[(i64, i64)], monic: bool) -> NFPoly {
    let mut cs: Vec<NFElem> = pairs.iter().map(|&(a, b)| elem(m, a, b)).collect();
    if monic {
        cs.push(m.one());
    }
    NFPoly::new(m.clone(), cs)
}

fn pass(id: &str, what: &str, t: Instant, budget_s: f64) {
    let dt = t.elapsed();
    assert!(
        dt <= Duration::from_secs_f64(budget_s),
        "criterion {} exceeded its {}s budget: {:?}",
        id,
        budget_s,
        dt
    );
    println!("criterion {} ({}): PASS [{:.2?}]", id, what, dt);
}

#[test]
fn criterion_1_genus4_center() {
    let t = Instant::now();
    let g19 = IntPoly::from_i64(&[1, -2, 19]);
    let g37 = IntPoly::from_i64(&[1, 7, 37]);
    let data = vec![
        FrobeniusDatum::new(19, g19.pow(4)),
        FrobeniusDatum::new(37, g37.pow(4)),
    ];
    let r = compute_center(4, &data, &CenterOptions::default());
    assert_eq!(r.filter_results.len(), 2);
    for (_, s) in &r.filter_results {
        assert_eq!(s.verdict, Verdict::InSPrime);
    }
    // The Frobenius fields are Q(sqrt(-2)) and Q(sqrt(-11)).
    assert!(is_isomorphic(&frobenius_field(&g19), &nf(&[2, 0, 1])).unwrap());
    assert!(is_isomorphic(&frobenius_field(&g37), &nf(&[11, 0, 1])).unwrap());
    assert!(r.found);
    assert_eq!(r.q_used, Some(19));
    assert_eq!(r.d_c, Some(1));
    assert_eq!(r.candidate_fields.len(), 1);
    assert!(r.candidate_fields[0].is_rationals());
    pass("1", "genus-4 input: both primes admissible, center Q, d_C = 1", t, 1.0);
}

#[test]
fn criterion_2_elliptic_pipeline() {
    let t = Instant::now();
    let curve = CurveSpec::elliptic_i64(0, -1, 1, -10, -20);
    let d3 = frobenius_datum_from_curve(&curve, 3, DEFAULT_ENUM_CAP).unwrap();
    let d7 = frobenius_datum_from_curve(&curve, 7, DEFAULT_ENUM_CAP).unwrap();
    assert_eq!(d3.cpoly, IntPoly::from_i64(&[1, 1, 3]));
    assert_eq!(d7.cpoly, IntPoly::from_i64(&[1, 2, 7]));
    // Predictive check: counts over the degree-2 extensions match the
    // counts implied by the reconstructed polynomials.
    for (d, p) in [(&d3, 3u64), (&d7, 7u64)] {
        let counted = count_points(&curve, p, 2, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(BigInt::from(counted), predicted_count(d, 2).unwrap());
    }
    let r = compute_center(1, &[d3, d7], &CenterOptions::default());
    assert!(r.found);
    assert_eq!(r.d_c, Some(1));
    assert_eq!(r.candidate_fields.len(), 1);
    assert!(r.candidate_fields[0].is_rationals());
    pass("2", "y^2+y=x^3-x^2-10x-20 pipeline: c_3, c_7, center Q", t, 5.0);
}

#[test]
fn criterion_3_cm_detection() {
    let t = Instant::now();
    let curve = CurveSpec::hyperelliptic(IntPoly::from_i64(&[0, -1, 0, 1]));
    let data: Vec<FrobeniusDatum> = [5u64, 13]
        .iter()
        .map(|&p| frobenius_datum_from_curve(&curve, p, DEFAULT_ENUM_CAP).unwrap())
        .collect();
    let r = compute_center(1, &data, &CenterOptions::default());
    assert!(r.found);
    assert_eq!(r.d_c, Some(2));
    assert_eq!(r.candidate_fields.len(), 1);
    assert!(is_isomorphic(&r.candidate_fields[0], &nf(&[1, 0, 1])).unwrap());
    pass("3", "y^2=x^3-x at 5, 13: center isomorphic to Q(i), d_C = 2", t, 5.0);
}

#[test]
fn criterion_4_supersingular_rejection() {
    let t = Instant::now();
    let cases = [
        FrobeniusDatum::new(3, IntPoly::from_i64(&[1, 0, 3])),
        FrobeniusDatum::new(2, IntPoly::from_i64(&[1, 2, 2])),
    ];
    for (_, s) in filter_S_prime(&cases, 1) {
        assert_eq!(s.verdict, Verdict::FailsEndosOverBase);
    }
    pass("4", "supersingular data rejected by the tensor-square test", t, 1.0);
}

#[test]
fn criterion_5_no_normic_proper_factor() {
    let t = Instant::now();
    // f = x^4 - x - 1: irreducible, discriminant -283 (not a square), and
    // cubic resolvent z^3 + 4z - 1 irreducible, so the Galois group is S4.
    let f = IntPoly::from_i64(&[-1, -1, 0, 0, 1]);
    assert!(factor_over_q(&f.to_rat()).unwrap().is_irreducible());
    assert_eq!(discriminant_q(&f.to_rat()), br(-283));
    assert!(factor_over_q(&RatPoly::from_i64(&[-1, 4, 0, 1])).unwrap().is_irreducible());

    // Degree-6 field generated by a product of two roots of f.
    // Res_y(f(y), y^4 f(x/y)) has roots r_i * r_j over all ordered pairs;
    // dividing by Res_y(f(y), x - y^2) (roots r_i^2) leaves the square of
    // the monic degree-6 polynomial with roots r_i r_j for i < j.
    let fy: Vec<RatPoly> = (0..=4)
        .map(|i| RatPoly::new(vec![BigRational::from(f.coeff(i))]))
        .collect();
    let fxy: Vec<RatPoly> = (0..=4)
        .map(|j| {
            let mut v = vec![BigRational::zero(); 5 - j];
            v[4 - j] = BigRational::from(f.coeff(4 - j));
            RatPoly::new(v)
        })
        .collect();
    let all_pairs = resultant_bivariate(&fy, &fxy).monic();
    let squares = resultant_bivariate(
        &fy,
        &[RatPoly::monomial(1), RatPoly::zero(), RatPoly::from_i64(&[-1])],
    )
    .monic();
    let pair_sq = all_pairs.exact_div(&squares);
    assert_eq!(pair_sq.degree(), Some(12));
    let pair_poly = mth_root(&pair_sq, 2).unwrap().monic();
    let m = NumberField::new(pair_poly.to_int_exact().expect("integral")).unwrap();
    assert_eq!(m.degree(), 6);

    // Over M the quartic splits into two quadratics; each has coefficient
    // field of degree 6, so 6 * 2 != 4 and neither is normic. Only the
    // full product f survives.
    let g = f.to_rat();
    let facs = trager_factor(&NFPoly::from_ratpoly(&m, &g)).unwrap();
    assert_eq!(facs.len(), 2);
    for (h, e) in &facs {
        assert_eq!(*e, 1);
        assert_eq!(h.degree(), Some(2));
        let (ok, l, _) = is_normic(&g, h).unwrap();
        assert!(!ok);
        assert_eq!(l.degree(), 6);
    }
    let divs = normic_divisors(&g, &m, DEFAULT_SUBSET_CAP).unwrap();
    assert_eq!(divs.len(), 1);
    assert_eq!(divs[0].h.degree(), Some(4));
    assert!(divs[0].coeff_field.is_rationals());
    pass("5", "S4 quartic over its degree-6 pair field: only g itself is normic", t, 10.0);
}

// ------------------------------------------------------------ criterion 6

const QUAD_DS: [i64; 10] = [-1, -2, -3, -5, -7, 2, 3, 5, 6, 7];

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        max_global_rejects: 4096,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

#[test]
fn criterion_6a_norm_multiplicativity() {
    let t = Instant::now();
    proptest!(cfg(200), |(
        di in 0..QUAD_DS.len(),
        p1 in pvec((-4i64..=4, -4i64..=4), 1..=3),
        p2 in pvec((-4i64..=4, -4i64..=4), 1..=3),
    )| {
        let m = nf(&[-QUAD_DS[di], 0, 1]);
        let h1 = nfpoly(&m, &p1, true);
        let h2 = nfpoly(&m, &p2, false);
        prop_assume!(!h2.is_zero());
        let lhs = norm_poly(&h1.mul(&h2));
        let rhs = &norm_poly(&h1) * &norm_poly(&h2);
        prop_assert_eq!(lhs, rhs);
    });
    pass("6a", "norm multiplicativity, 200 cases", t, 10.0);
}

#[test]
fn criterion_6b_normic_criterion_equivalence() {
    let t = Instant::now();
    // For a monic divisor h of g over M with coefficient field L, the
    // degree-and-irreducibility criterion must agree with the direct
    // definition. Since Nm from M of h equals (Nm from L of h)^[M:L],
    // "g is the norm of h from L" is equivalent to norm(h) = g^[M:L].
    proptest!(cfg(200), |(
        di in 0..QUAD_DS.len(),
        deg in prop_oneof![Just(4usize), Just(6usize)],
        cs in pvec(-5i64..=5, 6),
    )| {
        let m = nf(&[-QUAD_DS[di], 0, 1]);
        let mut v: Vec<i64> = cs[..deg].to_vec();
        if v[0] == 0 {
            v[0] = 1;
        }
        v.push(1);
        let g_int = IntPoly::from_i64(&v);
        let g = g_int.to_rat();
        prop_assume!(factor_over_q(&g).unwrap().is_irreducible());
        let facs = trager_factor(&NFPoly::from_ratpoly(&m, &g)).unwrap();
        let k = facs.len();
        let mut any_normic = false;
        for mask in 1u32..(1 << k) {
            let mut h = NFPoly::one(m.clone());
            for (i, (f, _)) in facs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    h = h.mul(f);
                }
            }
            let (verdict, l, _) = is_normic(&g, &h).unwrap();
            let e = (m.degree() / l.degree()) as u32;
            let by_definition = norm_poly(&h) == g.pow(e);
            prop_assert_eq!(verdict, by_definition);
            any_normic |= verdict;
        }
        // g itself is always normic (with L = Q), so the set is nonempty.
        prop_assert!(any_normic);
    });
    pass("6b", "normic criterion matches the norm definition both ways, 200 cases", t, 20.0);
}

#[test]
fn criterion_6c_field_containment_along_divisibility() {
    let t = Instant::now();
    // Biquadratic quartics split completely over their own root field, so
    // the normic-divisor poset has genuine chains: linear divisors carry
    // the full quartic field, quadratic divisors carry its quadratic
    // subfields. Whenever h1 | h2 are both normic with fields L1, L2, the
    // defining polynomial of L2 must have a root in L1.
    const BIQ_DS: [i64; 6] = [-1, -2, -3, 2, 3, 5];
    proptest!(cfg(200), |(
        i1 in 0..BIQ_DS.len(),
        i2 in 0..BIQ_DS.len(),
        c1 in 1i64..=2,
        c2 in 1i64..=2,
    )| {
        let e1 = BIQ_DS[i1] * c1 * c1;
        let e2 = BIQ_DS[i2] * c2 * c2;
        prop_assume!(e1 != e2);
        // minimal polynomial of sqrt(e1) + sqrt(e2)
        let g_int = IntPoly::from_i64(&[(e1 - e2) * (e1 - e2), 0, -2 * (e1 + e2), 0, 1]);
        prop_assume!(factor_over_q(&g_int.to_rat()).unwrap().is_irreducible());
        let m = NumberField::new(g_int.clone()).unwrap();
        let g = g_int.to_rat();
        let divs = normic_divisors(&g, &m, DEFAULT_SUBSET_CAP).unwrap();
        prop_assert!(!divs.is_empty());
        for a in &divs {
            for b in &divs {
                if a.h.divides(&b.h) {
                    let roots = roots_in_field(
                        &a.coeff_field,
                        &b.coeff_field.defining_poly().to_rat(),
                    )
                    .unwrap();
                    prop_assert!(!roots.is_empty());
                }
            }
        }
    });
    pass("6c", "coefficient-field containment along divisor chains, 200 cases", t, 30.0);
}

#[test]
fn criterion_6d_factorization_round_trips() {
    let t = Instant::now();
    proptest!(cfg(200), |(
        fv in pvec(-6i64..=6, 1..=5),
        gv in pvec(-6i64..=6, 1..=5),
        di in 0..QUAD_DS.len(),
        p1 in pvec((-3i64..=3, -3i64..=3), 1..=2),
        p2 in pvec((-3i64..=3, -3i64..=3), 1..=2),
    )| {
        // over Q: expand(factor(f*g)) = f*g, and factors do not split
        // further under a second pass
        let fp = RatPoly::from_i64(&fv);
        let gp = RatPoly::from_i64(&gv);
        prop_assume!(!fp.is_zero() && !gp.is_zero());
        let prod = &fp * &gp;
        let fac = factor_over_q(&prod).unwrap();
        prop_assert_eq!(fac.expand(), prod);
        for (p, _) in &fac.factors {
            prop_assert!(factor_over_q(p).unwrap().is_irreducible());
        }
        // over a quadratic field: product of the returned factors with
        // multiplicities equals the (monic) input
        let m = nf(&[-QUAD_DS[di], 0, 1]);
        let prod2 = nfpoly(&m, &p1, true).mul(&nfpoly(&m, &p2, true));
        let mut back = NFPoly::one(m.clone());
        for (h, e) in trager_factor(&prod2).unwrap() {
            back = back.mul(&h.pow(e));
        }
        prop_assert_eq!(back, prod2);
    });
    pass("6d", "factorization round-trips over Q and over quadratic fields, 200 cases", t, 20.0);
}

#[test]
fn criterion_6e_tensor_square_power_sums() {
    let t = Instant::now();
    // The r-th power sum of the reciprocal roots of the tensor square is
    // the square of the r-th power sum of the reciprocal roots of c:
    // sum (a_i a_j)^r over all ordered pairs = (sum a_i^r)^2.
    proptest!(cfg(200), |(lv in pvec(-4i64..=4, 0..=4))| {
        let mut v = vec![1i64];
        v.extend_from_slice(&lv);
        let c = IntPoly::from_i64(&v);
        let d = c.degree().unwrap();
        let ts = tensor_square(&c).unwrap();
        prop_assert_eq!(ts.degree(), Some(d * d));
        let sc = power_sums_of_reciprocal_roots(&c.to_rat(), 4).unwrap();
        let st = power_sums_of_reciprocal_roots(&ts.to_rat(), 4).unwrap();
        for r in 0..4 {
            prop_assert_eq!(&st[r], &(&sc[r] * &sc[r]));
        }
    });
    pass("6e", "tensor-square power-sum identity for r = 1..4, 200 cases", t, 10.0);
}

#[test]
fn criterion_6f_counts_preserve_weil_symmetry() {
    let t = Instant::now();
    proptest!(cfg(200), |(
        a1 in -2i64..=2, a2 in -2i64..=2, a3 in -2i64..=2,
        a4 in -2i64..=2, a6 in -2i64..=2,
        pi in 0..5usize,
        fv in pvec(-3i64..=3, 5),
        hi in 0..4usize,
    )| {
        let ps = [3u64, 5, 7, 11, 13];
        let curve = CurveSpec::elliptic_i64(a1, a2, a3, a4, a6);
        let e = frobenius_datum_from_curve(&curve, ps[pi], DEFAULT_ENUM_CAP);
        prop_assume!(e.is_ok());
        prop_assert!(validate_weil(&e.unwrap()));
        // genus-2 hyperelliptic alongside, when the reduction is good
        let hps = [5u64, 7, 11, 13];
        let mut v = fv.clone();
        v.push(1);
        let hcurve = CurveSpec::hyperelliptic(IntPoly::from_i64(&v));
        if let Ok(d) = frobenius_datum_from_curve(&hcurve, hps[hi], DEFAULT_ENUM_CAP) {
            prop_assert!(validate_weil(&d));
        }
    });
    pass("6f", "reconstructed polynomials satisfy Weil symmetry, 200 cases", t, 20.0);
}

#[test]
fn criterion_6g_hasse_bound() {
    let t = Instant::now();
    proptest!(cfg(200), |(
        a1 in -3i64..=3, a2 in -3i64..=3, a3 in -3i64..=3,
        a4 in -3i64..=3, a6 in -3i64..=3,
        pi in 0..6usize,
    )| {
        let ps = [3u64, 5, 7, 11, 13, 17];
        let p = ps[pi];
        let curve = CurveSpec::elliptic_i64(a1, a2, a3, a4, a6);
        let d = frobenius_datum_from_curve(&curve, p, DEFAULT_ENUM_CAP);
        prop_assume!(d.is_ok());
        prop_assert!(hasse_ok(&d.unwrap()));
        // independent integer check: |p + 1 - N1|^2 <= 4p
        let n1 = count_points(&curve, p, 1, DEFAULT_ENUM_CAP).unwrap() as i64;
        let a = p as i64 + 1 - n1;
        prop_assert!(a * a <= 4 * p as i64);
    });
    pass("6g", "Hasse bound on counted elliptic data, 200 cases", t, 10.0);
}

#[test]
fn criterion_7_exponent_guess() {
    let t = Instant::now();
    let g19 = IntPoly::from_i64(&[1, -2, 19]);
    let g37 = IntPoly::from_i64(&[1, 7, 37]);
    let genus4 = vec![
        FrobeniusDatum::new(19, g19.pow(4)),
        FrobeniusDatum::new(37, g37.pow(4)),
    ];
    assert_eq!(guess_m(&genus4).unwrap(), 4);
    let elliptic = vec![
        FrobeniusDatum::new(3, IntPoly::from_i64(&[1, 1, 3])),
        FrobeniusDatum::new(7, IntPoly::from_i64(&[1, 2, 7])),
    ];
    assert_eq!(guess_m(&elliptic).unwrap(), 1);
    pass("7", "exponent upper bound: 4 on the genus-4 data, 1 on the elliptic data", t, 1.0);
}
