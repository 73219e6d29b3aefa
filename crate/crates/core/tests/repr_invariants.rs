use kzdyn::linalg::rational::{pow_i64, q};
use kzdyn::linalg::{Rational, RationalMatrix};
use kzdyn::repr::{lift_word, simple_lift, GroupLift, WeightModule};
use kzdyn::roots::{CartanType, RootSystem, TieBreak};

fn modules(n: usize) -> Vec<WeightModule> {
    let mut out = vec![WeightModule::vector_rep(n)];
    out.push(WeightModule::from_descriptor(&format!("{n}:1,1")).unwrap());
    if n >= 3 {
        out.push(WeightModule::from_descriptor(&format!("{n}:2")).unwrap());
        out.push(WeightModule::from_descriptor(&format!("{n}:1,2")).unwrap());
    }
    out
}

fn basis_h(n: usize) -> Vec<Vec<Rational>> {
    (0..n - 1)
        .map(|i| {
            let mut h = vec![q(0); n];
            h[i] = q(1);
            h[i + 1] = q(-1);
            h
        })
        .collect()
}

#[test]
fn ad_simple_lift_is_simple_reflection_on_h() {
    for n in 2..=4 {
        let rs = RootSystem::build(CartanType::A, n - 1).unwrap();
        for v in modules(n) {
            for i in 1..n {
                let x = simple_lift(&v, i);
                let xinv = x.inverse().unwrap();
                for h in basis_h(n) {
                    let lhs = &(&x * &v.h_action(&h)) * &xinv;
                    let rhs = v.h_action(&rs.reflect(rs.simple_root(i), &h));
                    assert_eq!(lhs, rhs, "{v:?} i={i}");
                }
            }
        }
    }
}

#[test]
fn lift_conjugates_torus_by_w() {
    let rs = RootSystem::build(CartanType::A, 2).unwrap();
    let v = WeightModule::from_descriptor("3:1,2").unwrap();
    for w in rs.weyl_group_elements() {
        let g = GroupLift::new(&v, &rs, &w).unwrap();
        for h in basis_h(3) {
            assert_eq!(g.act(&v.h_action(&h)), v.h_action(&w.apply(&h)));
        }
    }
}

#[test]
fn lift_is_word_independent_for_longest() {
    for n in [3, 4] {
        let rs = RootSystem::build(CartanType::A, n - 1).unwrap();
        let w0 = rs.longest();
        let a = w0.reduced_word(&rs, TieBreak::Smallest);
        let b = w0.reduced_word(&rs, TieBreak::Largest);
        assert_ne!(a, b);
        for v in modules(n) {
            assert_eq!(lift_word(&v, &a), lift_word(&v, &b), "{v:?}");
        }
    }
}

#[test]
fn ef_commutator_on_c3_squared() {
    let rs = RootSystem::build(CartanType::A, 2).unwrap();
    let v = WeightModule::from_descriptor("3:1,1").unwrap();
    let f0 = v.factor(0).clone();
    let f1 = v.factor(1).clone();
    let ef = |alpha: &[Rational]| {
        let neg: Vec<Rational> = alpha.iter().map(|x| -x).collect();
        &v.embed(0, f0.root_op(alpha)) * &v.embed(1, f1.root_op(&neg))
    };
    for w in rs.weyl_group_elements() {
        let g = GroupLift::new(&v, &rs, &w).unwrap();
        for alpha in rs.all_roots() {
            assert_eq!(g.act(&ef(&alpha)), ef(&w.apply(&alpha)));
        }
    }
}

#[test]
fn weight_zero_action_ignores_torus_rescaling() {
    // t = diag(2^{(omega, mu)}) with integral coweight omega acts trivially on V[0]
    let rs = RootSystem::build(CartanType::A, 2).unwrap();
    let v = WeightModule::from_descriptor("3:1,1,1").unwrap();
    let zero = vec![q(0); 3];
    let idx = v.weight_space(&zero);
    assert!(!idx.is_empty());
    let omega = [2i64, -1, -1];
    let t = RationalMatrix::diagonal(
        &(0..v.dim())
            .map(|b| {
                let e: i64 = v.gl_weight(b).iter().zip(&omega).map(|(g, o)| g * o).sum();
                pow_i64(&q(2), e)
            })
            .collect::<Vec<_>>(),
    );
    for w in rs.weyl_group_elements() {
        let g = GroupLift::new(&v, &rs, &w).unwrap();
        let plain = g.matrix().submatrix(&idx, &idx);
        let twisted = (&t * g.matrix()).submatrix(&idx, &idx);
        assert_eq!(plain, twisted);
    }
}
