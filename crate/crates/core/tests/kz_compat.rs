use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kzdyn::kz::cocycle::{check_cocycle_identity, check_factor_choices, cocycle_value};
use kzdyn::kz::compat::{
    check_dyn_dyn_compat, check_kz_dyn_compat, check_lemma_nice, check_pi_invariance,
    check_r_conjugation, equivalent_form_check, k_eval,
};
use kzdyn::kz::det::{check_useful_roots, det_formula_check};
use kzdyn::kz::dynamical::{eval_at, z_power};
use kzdyn::kz::system::{check_kz_flatness, ZPoint};
use kzdyn::linalg::rational::{q, qf};
use kzdyn::linalg::Rational;
use kzdyn::ops::bbb::bb_w;
use kzdyn::repr::WeightModule;
use kzdyn::roots::{AffineWeylElement, CartanType, RootSystem, Vector};

fn sl(n: usize) -> RootSystem {
    RootSystem::build(CartanType::A, n - 1).unwrap()
}

fn lambda(n: usize, seed: i64) -> Vector {
    let mut v: Vector = (0..n - 1)
        .map(|i| qf(7 * seed + 3 * i as i64 + 2, 11 + 2 * i as i64))
        .collect();
    let total = v.iter().fold(q(0), |a, b| a + b);
    v.push(-total);
    v
}

fn point(k: usize, n: usize) -> ZPoint {
    let t = [qf(3, 2), q(2), qf(5, 7), qf(9, 4)];
    ZPoint::new(t[..k].to_vec(), n as u32)
}

fn kappa() -> Rational {
    qf(7, 3)
}

#[test]
fn kz_flatness() {
    for (desc, n) in [
        ("2:1,1", 2),
        ("2:L2,1,1", 2),
        ("3:1,1,1", 3),
        ("3:1,2,1", 3),
    ] {
        let v = WeightModule::from_descriptor(desc).unwrap();
        let pt = point(v.num_factors(), n);
        assert!(
            check_kz_flatness(&v, &pt.z(), &lambda(n, 1), &kappa())
                .unwrap()
                .passed(),
            "{desc}"
        );
    }
}

#[test]
fn kz_dynamical_compatibility() {
    for (desc, n) in [
        ("2:1,1", 2),
        ("2:L3,1", 2),
        ("3:1,1,1", 3),
        ("3:1,2", 3),
        ("4:1,2", 4),
    ] {
        let v = WeightModule::from_descriptor(desc).unwrap();
        let rs = sl(n);
        let pt = point(v.num_factors(), n);
        for i in 1..n {
            for j in 0..v.num_factors() {
                let r = check_kz_dyn_compat(&v, &rs, i, j, &pt, &lambda(n, 2), &kappa()).unwrap();
                assert!(r.passed(), "{desc} i={i} j={j}: {:?}", r.witness);
            }
        }
    }
}

#[test]
fn dynamical_operators_commute() {
    for (desc, n, pairs) in [
        ("3:1,1,1", 3, vec![(1, 2)]),
        ("3:2,1", 3, vec![(1, 2)]),
        ("4:1,2", 4, vec![(1, 2), (1, 3), (2, 3)]),
    ] {
        let v = WeightModule::from_descriptor(desc).unwrap();
        let rs = sl(n);
        let pt = point(v.num_factors(), n);
        for (i, j) in pairs {
            assert!(
                check_dyn_dyn_compat(&v, &rs, i, j, &pt, &lambda(n, 3), &kappa())
                    .unwrap()
                    .passed(),
                "{desc} ({i},{j})"
            );
        }
    }
}

#[test]
fn rotation_and_pi_invariance() {
    for (desc, n) in [("2:1,1,1", 2), ("3:1,1,1", 3), ("4:1,3", 4)] {
        let v = WeightModule::from_descriptor(desc).unwrap();
        let rs = sl(n);
        let pt = point(v.num_factors(), n);
        for i in 1..n {
            assert!(
                check_r_conjugation(&v, &rs, i, &pt).unwrap().passed(),
                "{desc} i={i}"
            );
            for j in 0..v.num_factors() {
                assert!(check_pi_invariance(&v, &rs, i, j, &pt, &lambda(n, 4))
                    .unwrap()
                    .passed());
            }
        }
    }
}

#[test]
fn bw_intertwines_kz_matrices() {
    let v = WeightModule::from_descriptor("3:1,1,1").unwrap();
    let rs = sl(3);
    let z = point(3, 1).z();
    for w in rs.weyl_group_elements() {
        for j in 0..3 {
            assert!(check_lemma_nice(&v, &rs, j, &w, &z, &lambda(3, 5))
                .unwrap()
                .passed());
        }
    }
}

#[test]
fn delta_step_form() {
    for (desc, n) in [("2:1,1", 2), ("3:1,1,1", 3), ("4:1,2", 4)] {
        let v = WeightModule::from_descriptor(desc).unwrap();
        let rs = sl(n);
        let pt = point(v.num_factors(), n);
        for i in 1..=n {
            let r = equivalent_form_check(&v, &rs, i, &pt, &lambda(n, 6), &kappa()).unwrap();
            assert!(r.passed(), "{desc} i={i}: {:?}", r.witness);
        }
    }
}

#[test]
fn determinant_closed_form() {
    for (desc, n) in [
        ("2:1,1", 2),
        ("2:L2,L1", 2),
        ("3:1,1,1", 3),
        ("3:1,2", 3),
        ("4:1,1,2", 4),
    ] {
        let v = WeightModule::from_descriptor(desc).unwrap();
        let rs = sl(n);
        let pt = point(v.num_factors(), n);
        for (nu, _) in v.weight_spaces() {
            for i in 1..n {
                let r = det_formula_check(&v, &rs, &nu, i, &pt, &lambda(n, 7), &kappa()).unwrap();
                assert!(r.passed(), "{desc} nu={nu:?} i={i}");
            }
        }
    }
}

#[test]
fn sl2_zero_weight_determinant_value() {
    // det K_1 on V[0] of C^2 ⊗ C^2 is (z_1 z_2)^0 (a+1)/(a-1) with a = (lambda, alpha)
    let v = WeightModule::from_descriptor("2:1,1").unwrap();
    let rs = sl(2);
    let a = qf(13, 5);
    let lam = vec![&a / q(2), -&a / q(2)];
    let pt = point(2, 2);
    let idx = v.weight_space(&[q(0), q(0)]);
    let d = k_eval(&v, &rs, 1, &pt, &lam).unwrap().principal(&idx).det();
    assert_eq!(d, (&a + q(1)) / (&a - q(1)));
}

#[test]
fn useful_roots_across_types() {
    for (k, r) in [
        (CartanType::A, 3),
        (CartanType::B, 3),
        (CartanType::C, 3),
        (CartanType::D, 4),
        (CartanType::E, 6),
        (CartanType::E, 7),
    ] {
        let rs = RootSystem::build(k, r).unwrap();
        for i in rs.o_star() {
            assert!(check_useful_roots(&rs, i).unwrap(), "{} {i}", rs.name());
        }
    }
}

#[test]
fn cocycle_at_fundamental_translations() {
    for (desc, n) in [("2:1,1", 2), ("3:1,2", 3), ("4:1,1", 4)] {
        let v = WeightModule::from_descriptor(desc).unwrap();
        let rs = sl(n);
        let pt = point(v.num_factors(), n);
        let lam = lambda(n, 8);
        for i in 1..n {
            let t = AffineWeylElement::translation(&rs, rs.fundamental_coweight(i));
            let g = cocycle_value(&v, &rs, &t, &lam, &kappa()).unwrap();
            let b = bb_w(&v, &rs, &rs.w_bracket(i).unwrap(), &lam).unwrap();
            assert_eq!(eval_at(&g.matrix, &pt).unwrap(), b);
            // K_i = z^{omega_i} G~_{t_{omega_i}}
            let zp = eval_at(&z_power(&v, rs.fundamental_coweight(i)), &pt).unwrap();
            assert_eq!(&zp * &b, k_eval(&v, &rs, i, &pt, &lam).unwrap());
        }
    }
}

#[test]
fn cocycle_of_identity_is_one() {
    let v = WeightModule::from_descriptor("3:1,1").unwrap();
    let rs = sl(3);
    let g = cocycle_value(
        &v,
        &rs,
        &AffineWeylElement::identity(&rs),
        &lambda(3, 1),
        &kappa(),
    )
    .unwrap();
    assert!(eval_at(&g.matrix, &point(2, 3)).unwrap().is_identity());
    assert!(g.factors.is_empty());
}

/// Random length-additive pair `(x, y)` with `x` starting at some `pi_i`.
fn random_pair(
    rs: &RootSystem,
    rng: &mut ChaCha8Rng,
    len: usize,
) -> (AffineWeylElement, AffineWeylElement) {
    let mut starts = vec![0];
    starts.extend(rs.o_star());
    let pi = starts[rng.gen_range(0..starts.len())];
    let mut letters = Vec::new();
    let mut el = AffineWeylElement::pi(rs, pi).unwrap();
    while letters.len() < len {
        let k = rng.gen_range(0..=rs.rank());
        let next = el.compose(&AffineWeylElement::simple_reflection(rs, k));
        if next.length(rs) > el.length(rs) {
            letters.push(k);
            el = next;
        }
    }
    let cut = rng.gen_range(0..=len);
    let mut x = AffineWeylElement::pi(rs, pi).unwrap();
    for &k in &letters[..cut] {
        x = x.compose(&AffineWeylElement::simple_reflection(rs, k));
    }
    let mut y = AffineWeylElement::identity(rs);
    for &k in &letters[cut..] {
        y = y.compose(&AffineWeylElement::simple_reflection(rs, k));
    }
    (x, y)
}

#[test]
fn cocycle_identity_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (desc, n, len) in [("2:1,1", 2, 6), ("3:1,2", 3, 7), ("3:1,1,1", 3, 5)] {
        let v = WeightModule::from_descriptor(desc).unwrap();
        let rs = sl(n);
        let pt = point(v.num_factors(), n);
        for _ in 0..4 {
            let (x, y) = random_pair(&rs, &mut rng, len);
            let r = check_cocycle_identity(&v, &rs, &x, &y, &lambda(n, 9), &kappa(), &pt).unwrap();
            assert!(r.passed(), "{desc}: {:?}", r.witness);
            assert!(
                check_factor_choices(&v, &rs, &x.compose(&y), &lambda(n, 9), &kappa()).unwrap()
            );
        }
    }
}
