use num_bigint::BigInt;
use proptest::prelude::*;

use crate::ntheory::{euler_phi, moebius, ramanujan_sum, units_mod};

use super::charpoly::{faddeev_leverrier, product_of_linear_factors};
use super::*;

fn field(m: u64) -> CycloField {
    CycloField::new(m).unwrap()
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

// ---------- elements ----------

#[test]
fn zeta_power_examples() {
    let f4 = field(4);
    let i = f4.zeta_pow(1);
    assert_eq!(&i * &i, f4.from_integer(-1));
    for m in [1u64, 2, 5, 12] {
        let f = field(m);
        assert!(f.zeta_pow(0).is_one());
    }
    // field trace of zeta_6^2 equals the Ramanujan sum c_6(2)
    let z = field(6).zeta_pow(2);
    assert_eq!(z.field_trace(), rat(ramanujan_sum(6, 2), 1));
}

#[test]
fn zeta_exponent_wraps_modulo_m() {
    let f = field(15);
    let a = &f.zeta_pow(7) * &f.zeta_pow(8);
    assert!(a.is_one());
    assert_eq!(f.zeta_pow(-1), f.zeta_pow(14));
}

#[test]
fn standalone_zeta_power_builds_its_field() {
    let i = zeta_power(4, 1).unwrap();
    assert_eq!(&i * &i, field(4).from_integer(-1));
    assert!(zeta_power(509, 1).is_err());
}

#[test]
fn additive_inverse_cancels() {
    let f = field(12);
    let a = &f.zeta_pow(5) + &f.from_rational(rat(3, 7));
    assert!((&a + &(-&a)).is_zero());
}

#[test]
#[should_panic(expected = "addition of elements")]
fn mixed_conductor_add_rejected() {
    let _ = &field(4).zeta() + &field(6).zeta();
}

#[test]
#[should_panic(expected = "multiplication of elements")]
fn mixed_conductor_mul_rejected() {
    let _ = &field(4).zeta() * &field(6).zeta();
}

#[test]
fn degree_bound_enforced() {
    // phi(509) = 508 > 256
    assert!(matches!(
        CycloField::new(509),
        Err(CycloError::DegreeBound { .. })
    ));
}

#[test]
fn galois_conj_examples() {
    let f = field(7);
    let z = f.zeta();
    assert_eq!(z.galois_conj(1).unwrap(), z);
    assert_eq!(z.galois_conj(3).unwrap(), f.zeta_pow(3));
    let e = z.galois_conj(14);
    assert_eq!(
        e,
        Err(CycloError::NotCoprime { s: 14, m: 7, g: 7 })
    );
}

#[test]
fn field_trace_examples() {
    for m in [1u64, 2, 4, 6, 15, 16, 30] {
        let f = field(m);
        assert_eq!(f.one().field_trace(), rat(euler_phi(m) as i64, 1));
        // trace of zeta_m is the Ramanujan sum at k = 1, i.e. mu(m) for
        // squarefree m
        assert_eq!(f.zeta().field_trace(), rat(ramanujan_sum(m, 1), 1));
    }
    assert_eq!(field(15).zeta().field_trace(), rat(moebius(15), 1));
}

#[test]
fn trace_of_monomials_is_ramanujan_sum_up_to_40() {
    for m in 1..=40u64 {
        let f = field(m);
        for k in 0..m {
            assert_eq!(
                f.zeta_pow(k as i64).field_trace(),
                rat(ramanujan_sum(m, k as i64), 1),
                "m={m} k={k}"
            );
        }
    }
}

#[test]
fn as_rational_examples() {
    let f = field(12);
    assert_eq!(f.from_rational(rat(5, 3)).as_rational(), Some(rat(5, 3)));
    assert_eq!(field(4).zeta().as_rational(), None);
    let f5 = field(5);
    let sum = (1..=4).fold(f5.zero(), |acc, k| &acc + &f5.zeta_pow(k));
    assert_eq!(sum.as_rational(), Some(rat(-1, 1)));
}

#[test]
fn inverse_of_zeta_is_opposite_power() {
    for m in [3u64, 4, 7, 12, 15] {
        let f = field(m);
        let z = f.zeta_pow(1);
        assert_eq!(z.inverse().unwrap(), f.zeta_pow(-1), "m = {m}");
        assert!(f.zero().inverse().is_none());
    }
}

// ---------- random-element properties ----------

fn arb_elt(m: u64) -> impl Strategy<Value = CycloElt> {
    let dim = euler_phi(m) as usize;
    proptest::collection::vec((-6i64..=6, 1i64..=4), dim).prop_map(move |cs| {
        let f = field(m);
        f.from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect())
    })
}

fn arb_m() -> impl Strategy<Value = u64> {
    prop_oneof![Just(1u64), Just(2), Just(3), Just(4), Just(6), Just(8), Just(9), Just(12), Just(15)]
}

fn arb_elt_pair() -> impl Strategy<Value = (CycloElt, CycloElt)> {
    arb_m().prop_flat_map(|m| (arb_elt(m), arb_elt(m)))
}

fn arb_elt_triple() -> impl Strategy<Value = (CycloElt, CycloElt, CycloElt)> {
    arb_m().prop_flat_map(|m| (arb_elt(m), arb_elt(m), arb_elt(m)))
}

fn arb_elt_with_units() -> impl Strategy<Value = (CycloElt, u64, u64)> {
    arb_m().prop_flat_map(|m| {
        let units = units_mod(m);
        let k = units.len();
        (arb_elt(m), 0..k, 0..k)
            .prop_map(move |(a, si, ti)| (a, units[si], units[ti]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_axioms((a, b, c) in arb_elt_triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn galois_conj_is_ring_homomorphism((a, b) in arb_elt_pair(), pick in 0usize..64) {
        let units = units_mod(a.m());
        let s = units[pick % units.len()];
        let lhs = (&a * &b).galois_conj(s).unwrap();
        let rhs = &a.galois_conj(s).unwrap() * &b.galois_conj(s).unwrap();
        prop_assert_eq!(lhs, rhs);
        let sum = (&a + &b).galois_conj(s).unwrap();
        prop_assert_eq!(sum, &a.galois_conj(s).unwrap() + &b.galois_conj(s).unwrap());
    }

    #[test]
    fn galois_conj_composition((a, s, t) in arb_elt_with_units()) {
        let m = a.m();
        let st = if m == 1 { 0 } else { (s * t) % m };
        let twice = a.galois_conj(s).unwrap().galois_conj(t).unwrap();
        prop_assert_eq!(twice, a.galois_conj(st).unwrap());
    }

    #[test]
    fn nonzero_elements_invert((a, _, _) in arb_elt_with_units()) {
        prop_assume!(!a.is_zero());
        let inv = a.inverse().unwrap();
        prop_assert!((&a * &inv).is_one());
    }

    #[test]
    fn field_trace_is_additive((a, b) in arb_elt_pair()) {
        prop_assert_eq!((&a + &b).field_trace(), a.field_trace() + b.field_trace());
    }
}

// ---------- matrices ----------

#[test]
fn identity_is_neutral() {
    let f = field(5);
    let a = CycloMatrix::from_fn(&f, 3, 3, |r, c| f.zeta_pow((r * c) as i64));
    let id = CycloMatrix::identity(&f, 3);
    assert_eq!(id.mul(&a), a);
    assert_eq!(a.mul(&id), a);
}

#[test]
fn permutation_inverse_roundtrip() {
    let f = field(7);
    let p = CycloMatrix::permutation(&f, &[2, 0, 1, 3]);
    let pinv = p.inverse_permutation().unwrap();
    assert_eq!(p.mul(&pinv), CycloMatrix::identity(&f, 4));
    assert_eq!(pinv.mul(&p), CycloMatrix::identity(&f, 4));
}

#[test]
fn non_permutation_rejected() {
    let f = field(3);
    let a = CycloMatrix::from_fn(&f, 2, 2, |_, _| f.one());
    assert_eq!(a.inverse_permutation(), Err(CycloError::NotAPermutation));
}

#[test]
fn diagonal_square_doubles_exponents() {
    let f = field(9);
    let d = CycloMatrix::diagonal(&f, &[f.zeta_pow(1), f.zeta_pow(2), f.zeta_pow(4)]);
    let d2 = d.pow(2);
    let expect = CycloMatrix::diagonal(&f, &[f.zeta_pow(2), f.zeta_pow(4), f.zeta_pow(8)]);
    assert_eq!(d2, expect);
}

#[test]
fn matrix_pow_diagonal_matches_generic_product() {
    let f = field(12);
    let d = CycloMatrix::diagonal(&f, &[f.zeta_pow(1), f.zeta_pow(5), f.zeta_pow(7)]);
    let mut acc = CycloMatrix::identity(&f, 3);
    for _ in 0..5 {
        acc = acc.mul(&d);
    }
    assert_eq!(d.pow(5), acc);
}

#[test]
fn trace_examples() {
    let f = field(12);
    assert_eq!(
        CycloMatrix::identity(&f, 4).trace(),
        f.from_integer(4)
    );
    assert_eq!(CycloMatrix::zero(&f, 3, 3).trace(), f.zero());
    // diagonal of all primitive m-th roots: trace = mu(m)
    let prim: Vec<CycloElt> = units_mod(12).iter().map(|&x| f.zeta_pow(x as i64)).collect();
    let d = CycloMatrix::diagonal(&f, &prim);
    assert_eq!(d.trace().as_rational(), Some(rat(moebius(12), 1)));
}

#[test]
#[should_panic(expected = "trace of a non-square")]
fn trace_rejects_non_square() {
    let f = field(3);
    let _ = CycloMatrix::zero(&f, 2, 3).trace();
}

#[test]
#[should_panic(expected = "product of")]
fn mul_rejects_shape_mismatch() {
    let f = field(3);
    let _ = CycloMatrix::zero(&f, 2, 3).mul(&CycloMatrix::zero(&f, 2, 3));
}

// ---------- characteristic polynomial ----------

/// Polynomials in X with CycloElt coefficients, for the Laplace oracle.
type XPoly = Vec<CycloElt>;

fn xp_add(f: &CycloField, a: &XPoly, b: &XPoly) -> XPoly {
    let n = a.len().max(b.len());
    let mut out = vec![f.zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] = &out[i] + c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = &out[i] + c;
    }
    out
}

fn xp_mul(f: &CycloField, a: &XPoly, b: &XPoly) -> XPoly {
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

fn xp_neg(a: &XPoly) -> XPoly {
    a.iter().map(|c| -c).collect()
}

/// `det(X I - A)` by cofactor expansion along the first row; exponential,
/// test-only, independent of Faddeev-LeVerrier.
fn charpoly_laplace(a: &CycloMatrix) -> XPoly {
    let f = a.field().clone();
    let n = a.rows();
    let entries: Vec<Vec<XPoly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    if r == c {
                        vec![-a.get(r, c), f.one()]
                    } else {
                        vec![-a.get(r, c)]
                    }
                })
                .collect()
        })
        .collect();
    fn det(f: &CycloField, m: &[Vec<XPoly>]) -> XPoly {
        let n = m.len();
        if n == 0 {
            return vec![f.one()];
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = vec![f.zero()];
        for c in 0..n {
            let minor: Vec<Vec<XPoly>> = (1..n)
                .map(|r| {
                    (0..n)
                        .filter(|&cc| cc != c)
                        .map(|cc| m[r][cc].clone())
                        .collect()
                })
                .collect();
            let term = xp_mul(f, &m[0][c], &det(f, &minor));
            acc = if c % 2 == 0 {
                xp_add(f, &acc, &term)
            } else {
                xp_add(f, &acc, &xp_neg(&term))
            };
        }
        acc
    }
    det(&f, &entries)
}

#[test]
fn charpoly_identity_two_by_two() {
    let f = field(4);
    let id = CycloMatrix::identity(&f, 2);
    // (X - 1)^2 = 1 - 2X + X^2
    let cp = charpoly(&id).unwrap();
    assert_eq!(cp, vec![f.one(), f.from_integer(-2), f.one()]);
}

#[test]
fn charpoly_of_plus_minus_i() {
    let f = field(4);
    let d = CycloMatrix::diagonal(&f, &[f.zeta_pow(1), f.zeta_pow(3)]);
    let cp = charpoly(&d).unwrap();
    assert_eq!(cp, vec![f.one(), f.zero(), f.one()]); // X^2 + 1
}

#[test]
fn faddeev_leverrier_matches_laplace_oracle() {
    // non-diagonal matrices, so the generic route is what is being tested
    let f = field(5);
    for seed in 0..6u64 {
        let n = 3;
        let a = CycloMatrix::from_fn(&f, n, n, |r, c| {
            f.zeta_pow(((seed + 1) * (2 * r as u64 + 3 * c as u64 + 1)) as i64)
        });
        let got = faddeev_leverrier(&a);
        let want = charpoly_laplace(&a);
        assert_eq!(got.len(), want.len(), "seed {seed}");
        assert_eq!(got, want, "seed {seed}");
    }
}

#[test]
fn faddeev_leverrier_agrees_with_diagonal_expansion() {
    // dual route: generic recurrence vs product of linear factors
    for m in [4u64, 6, 8, 12] {
        let f = field(m);
        let entries: Vec<CycloElt> = units_mod(m)
            .iter()
            .map(|&x| f.zeta_pow(x as i64))
            .collect();
        let d = CycloMatrix::diagonal(&f, &entries);
        assert_eq!(
            faddeev_leverrier(&d),
            product_of_linear_factors(&f, &entries),
            "m = {m}"
        );
    }
}

#[test]
fn charpoly_dimension_bound() {
    let f = field(1);
    let a = CycloMatrix::identity(&f, CHARPOLY_DIM_BOUND + 1);
    assert!(matches!(
        charpoly(&a),
        Err(CycloError::MatrixBound { .. })
    ));
}

// ---------- nullspace ----------

#[test]
fn nullspace_of_identity_is_trivial() {
    let f = field(7);
    let ns = nullspace(&CycloMatrix::identity(&f, 4)).unwrap();
    assert_eq!(ns.rank, 4);
    assert!(ns.basis.is_empty());
}

#[test]
fn nullspace_of_zero_matrix_is_everything() {
    let f = field(7);
    let ns = nullspace(&CycloMatrix::zero(&f, 5, 5)).unwrap();
    assert_eq!(ns.rank, 0);
    assert_eq!(ns.basis.len(), 5);
}

#[test]
fn nullspace_vectors_are_annihilated() {
    let f = field(6);
    // rank-1 matrix: rows are multiples of one another
    let a = CycloMatrix::from_fn(&f, 3, 4, |r, c| {
        f.zeta_pow(r as i64).scale(&rat(c as i64 + 1, 1))
    });
    let ns = nullspace(&a).unwrap();
    assert_eq!(ns.rank, 1);
    assert_eq!(ns.basis.len(), 3);
    for v in &ns.basis {
        for r in 0..a.rows() {
            let mut acc = f.zero();
            for c in 0..a.cols() {
                acc = &acc + &(a.get(r, c) * &v[c]);
            }
            assert!(acc.is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_nullity_and_annihilation(
        rows in 1usize..5,
        cols in 1usize..5,
        entries in proptest::collection::vec((-3i64..=3, 0u8..4), 16),
    ) {
        let f = field(12);
        let a = CycloMatrix::from_fn(&f, rows, cols, |r, c| {
            let (n, zp) = entries[(r * cols + c) % entries.len()];
            if n == 0 {
                f.zero()
            } else {
                f.zeta_pow(zp as i64).scale(&rat(n, 1))
            }
        });
        let ns = nullspace(&a).unwrap();
        prop_assert_eq!(ns.rank + ns.basis.len(), cols);
        for v in &ns.basis {
            for r in 0..rows {
                let mut acc = f.zero();
                for c in 0..cols {
                    acc = &acc + &(a.get(r, c) * &v[c]);
                }
                prop_assert!(acc.is_zero());
            }
        }
    }
}
