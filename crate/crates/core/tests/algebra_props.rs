use enriques_core::algebra::modular::{modular_rank, PrimeSource};
use enriques_core::algebra::{q, resultant_uni, Fp};
use enriques_core::{QMatrix, QMultiPoly, QPoly, UniPoly};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

type F101 = Fp<101>;

fn qmatrix(rows: usize, cols: usize, vals: &[i64]) -> QMatrix {
    let rows = (0..rows)
        .map(|r| vals[r * cols..(r + 1) * cols].iter().map(|&v| q(v)).collect())
        .collect();
    QMatrix::from_rows(cols, rows)
}

/// A rows x cols matrix of rank at most `k`, as a product of random factors.
fn low_rank(rows: usize, cols: usize, k: usize, a: &[i64], b: &[i64]) -> QMatrix {
    let l = qmatrix(rows, k, a);
    let r = qmatrix(k, cols, b);
    let mut out = QMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            let v = (0..k).fold(q(0), |s, t| s + l.get(i, t) * r.get(t, j));
            out.set(i, j, v);
        }
    }
    out
}

fn poly_i64(c: &[i64]) -> UniPoly<BigInt> {
    UniPoly::new(c.iter().map(|&v| BigInt::from(v)).collect())
}

fn poly_q(c: &[i64]) -> QPoly {
    QPoly::new(c.iter().map(|&v| q(v)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_equals_transpose_rank(vals in prop::collection::vec(-3i64..=3, 7 * 9)) {
        let m = qmatrix(7, 9, &vals);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(m.rank(), m.rank_gauss());
    }

    #[test]
    fn bareiss_matches_modular_rank(
        k in 0usize..=20,
        a in prop::collection::vec(-50i64..=50, 20 * 20),
        b in prop::collection::vec(-50i64..=50, 20 * 30),
        seed in any::<u64>(),
    ) {
        let m = low_rank(20, 30, k, &a[..20 * k], &b[..k * 30]);
        let exact = m.rank();
        prop_assert!(exact <= k);
        let r = modular_rank(&m, 3, &mut PrimeSource::new(seed));
        prop_assert!(r.agree);
        prop_assert_eq!(r.rank, exact);
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(
        f in prop::collection::vec(-5i64..=5, 2..5),
        g in prop::collection::vec(-5i64..=5, 2..5),
        h in prop::collection::vec(-3i64..=3, 1..3),
    ) {
        let (fq, gq, hq) = (poly_q(&f), poly_q(&g), poly_q(&h));
        prop_assume!(fq.degree().unwrap_or(0) >= 1 && gq.degree().unwrap_or(0) >= 1 && !hq.is_zero());
        let a = &fq * &hq;
        let b = &gq * &hq;
        let res = resultant_uni(&a, &b);
        let common = !a.gcd(&b).is_constant();
        prop_assert_eq!(res.is_zero(), common);
        let plain = resultant_uni(&fq, &gq);
        prop_assert_eq!(plain.is_zero(), !fq.gcd(&gq).is_constant());
        let zi = resultant_uni(&poly_i64(&f), &poly_i64(&g));
        prop_assert_eq!(q(0) + num_rational::BigRational::from_integer(zi), plain);
    }

    #[test]
    fn mod_inverse_round_trip(
        m in prop::collection::vec(-6i64..=6, 3..7),
        g in prop::collection::vec(-6i64..=6, 1..6),
    ) {
        let (mq, gq) = (poly_q(&m), poly_q(&g));
        prop_assume!(mq.degree().unwrap_or(0) >= 1);
        let r = gq.rem(&mq).unwrap();
        match r.mod_inverse(&mq) {
            Ok(inv) => prop_assert!(r.mul_mod(&inv, &mq) == QPoly::one()),
            Err(_) => prop_assert!(r.is_zero() || !r.gcd(&mq).is_constant()),
        }
    }

    #[test]
    fn mixed_partials_commute(terms in prop::collection::vec((0u32..5, 0u32..5, 0u32..5, -9i64..=9), 1..8)) {
        let vars = ["x", "y", "z"];
        let p = QMultiPoly::from_terms(&vars, terms.iter().map(|&(a, b, c, v)| (vec![a, b, c], q(v))).collect());
        let dxy = p.partial_derivative("x", 1).unwrap().partial_derivative("y", 2).unwrap();
        let dyx = p.partial_derivative("y", 2).unwrap().partial_derivative("x", 1).unwrap();
        prop_assert_eq!(dxy, dyx);
    }

    #[test]
    fn prime_field_inverse(v in 1i64..101) {
        let x = F101::new(v);
        prop_assert_eq!(x * (F101::one() / x), F101::one());
    }
}
