use proptest::prelude::*;

use kzdyn::linalg::rational::{q, qf};
use kzdyn::linalg::{ExponentVector, PuiseuxMatrix, Rational, RationalMatrix};
use kzdyn::ops::p_series;
use kzdyn::repr::WeightModule;
use kzdyn::roots::{CartanType, RootSystem, TieBreak, WeylElement};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| qf(n, d))
}

fn square(n: usize) -> impl Strategy<Value = RationalMatrix> {
    proptest::collection::vec(rational(), n * n).prop_map(move |v| {
        let rows: Vec<Vec<Rational>> = v.chunks(n).map(<[Rational]>::to_vec).collect();
        RationalMatrix::from_rows(rows)
    })
}

/// Laplace expansion along the first row.
fn cofactor_det(m: &RationalMatrix) -> Rational {
    let n = m.rows();
    if n == 0 {
        return q(1);
    }
    let mut out = q(0);
    for c in 0..n {
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&x| x != c).collect();
        let minor = cofactor_det(&m.submatrix(&rows, &cols));
        let term = &m[(0, c)] * minor;
        if c % 2 == 0 {
            out += term;
        } else {
            out -= term;
        }
    }
    out
}

/// Gauss-Jordan on `[M | I]` without the library elimination.
fn gauss_jordan_inverse(m: &RationalMatrix) -> Option<RationalMatrix> {
    let n = m.rows();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = (0..n).map(|j| m[(i, j)].clone()).collect();
            row.extend((0..n).map(|j| if i == j { q(1) } else { q(0) }));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| a[r][col] != q(0))?;
        a.swap(col, p);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && a[r][col] != q(0) {
                let f = a[r][col].clone();
                let pivot = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(RationalMatrix::from_rows(
        a.into_iter().map(|r| r[n..].to_vec()).collect(),
    ))
}

fn puiseux(n: usize, nvars: usize) -> impl Strategy<Value = PuiseuxMatrix> {
    let term = (
        0..n,
        0..n,
        proptest::collection::vec(-3i64..=3, nvars),
        rational(),
    );
    proptest::collection::vec(term, 0..6).prop_map(move |terms| {
        let mut m = PuiseuxMatrix::zeros(n, n, nvars);
        for (i, j, e, c) in terms {
            let exp = ExponentVector(e.into_iter().map(|x| qf(x, 2)).collect());
            m.add_term(i, j, exp, c);
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn det_matches_cofactor_expansion(m in square(4)) {
        prop_assert_eq!(m.det(), cofactor_det(&m));
    }

    #[test]
    fn det_is_multiplicative(a in square(3), b in square(3)) {
        prop_assert_eq!((&a * &b).det(), a.det() * b.det());
    }

    #[test]
    fn inverse_matches_gauss_jordan(m in square(4)) {
        match gauss_jordan_inverse(&m) {
            Some(inv) => {
                prop_assert_eq!(m.inverse().unwrap(), inv.clone());
                prop_assert_eq!(m.det() * inv.det(), q(1));
            }
            None => {
                prop_assert!(m.inverse().is_err());
                prop_assert_eq!(m.det(), q(0));
            }
        }
    }

    #[test]
    fn rank_nullity(m in square(4)) {
        let ker = m.kernel();
        prop_assert_eq!(m.rank() + ker.len(), 4);
        for v in ker {
            prop_assert!(m.mul_vec(&v).iter().all(|x| *x == q(0)));
        }
    }

    #[test]
    fn evaluation_is_a_ring_map(a in puiseux(3, 2), b in puiseux(3, 2), t1 in 1i64..=4, t2 in 1i64..=4) {
        // half-integral exponents: evaluate at z = t^2
        let at = |m: &PuiseuxMatrix| m.substitute_power(2).unwrap().eval(&[q(t1), q(t2)]).unwrap();
        prop_assert_eq!(at(&(&a * &b)), &at(&a) * &at(&b));
        prop_assert_eq!(at(&(&a + &b)), &at(&a) + &at(&b));
    }

    #[test]
    fn substitution_then_evaluation(a in puiseux(2, 2), t1 in 1i64..=3, t2 in 1i64..=3) {
        // z^{e} at z = t^4 equals (z^{e} at z = t^2) with t replaced by t^2
        let four = a.substitute_power(4).unwrap().eval(&[q(t1), q(t2)]).unwrap();
        let two = a.substitute_power(2).unwrap().eval(&[q(t1 * t1), q(t2 * t2)]).unwrap();
        prop_assert_eq!(four, two);
    }

    #[test]
    fn p_series_inversion(m in 0usize..=6, num in -40i64..=40, den in 1i64..=7) {
        // p(-t-2; -H, F, E) p(t; H, E, F) = (t - H + 1)/(t + 1)
        let t = qf(num, den);
        let l = WeightModule::sl2_irrep(m);
        let h = l.e(0, 0) - l.e(1, 1);
        let (e, f) = (l.e(0, 1), l.e(1, 0));
        let left = p_series(&(-&t - q(2)), &-&h, f, e);
        let right = p_series(&t, &h, e, f);
        if let (Ok(left), Ok(right)) = (left, right) {
            let d = m + 1;
            let diag: Vec<Rational> = (0..d).map(|k| (&t - &h[(k, k)] + q(1)) / (&t + q(1))).collect();
            prop_assert_eq!(&left * &right, RationalMatrix::diagonal(&diag));
        }
    }

    #[test]
    fn weyl_words_compose(a in proptest::collection::vec(1usize..=3, 0..8), b in proptest::collection::vec(1usize..=3, 0..8)) {
        let rs = RootSystem::build(CartanType::B, 3).unwrap();
        let x = rs.weyl_from_word(&a);
        let y = rs.weyl_from_word(&b);
        let mut ab = a.clone();
        ab.extend(&b);
        // words list letters in application order
        let yx = y.compose(&rs, &x);
        let whole = rs.weyl_from_word(&ab);
        prop_assert_eq!(yx.matrix(), whole.matrix());
        let red = x.reduced_word(&rs, TieBreak::Smallest);
        prop_assert_eq!(red.len(), x.length());
        let back = rs.weyl_from_word(&red);
        prop_assert_eq!(back.matrix(), x.matrix());
    }

    #[test]
    fn reflections_preserve_form(word in proptest::collection::vec(1usize..=2, 0..10)) {
        let rs = RootSystem::build(CartanType::G, 2).unwrap();
        let w: WeylElement = rs.weyl_from_word(&word);
        for a in rs.all_roots() {
            for b in rs.positive_roots() {
                prop_assert_eq!(rs.form(&w.apply(&a), &w.apply(b)), rs.form(&a, b));
            }
            prop_assert!(rs.is_root(&w.apply(&a)));
        }
    }
}
