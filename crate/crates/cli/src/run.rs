use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use kzdyn::check::{CheckReport, Witness};
use kzdyn::kz::cocycle::{check_cocycle_identity, check_factor_choices, cocycle_value};
use kzdyn::kz::compat::{
    check_dyn_dyn_compat, check_kz_dyn_compat, check_lemma_nice, check_pi_invariance,
    check_r_conjugation, equivalent_form_check,
};
use kzdyn::kz::det::det_formula_check;
use kzdyn::kz::dynamical::eval_at;
use kzdyn::kz::system::{check_kz_flatness, ZPoint};
use kzdyn::linalg::rational::{q, Rational};
use kzdyn::linalg::RationalMatrix;
use kzdyn::ops::bbb::bb_word;
use kzdyn::ops::fusion::fusion_checked;
use kzdyn::ops::identities::{
    verify_braid_a2, verify_commuting, verify_lemma_rb, verify_property_vii, verify_sl2_product,
};
use kzdyn::ops::p_series;
use kzdyn::ops::verma::{default_depth, sl2_verma_oracle};
use kzdyn::repr::WeightModule;
use kzdyn::roots::{
    AffineRoot, AffineWeylElement, CartanType, RootSystem, TieBreak, Vector, WeylElement,
};
use kzdyn::sample;

use crate::config::{Suite, SuiteConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// One line of the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub suite: String,
    pub check_name: String,
    #[serde(rename = "type")]
    pub lie_type: String,
    pub rank: usize,
    pub module_descriptor: Option<String>,
    pub sample: usize,
    #[serde(rename = "λ")]
    pub lambda: Option<Vec<String>>,
    #[serde(rename = "κ")]
    pub kappa: Option<String>,
    pub z: Option<Vec<String>>,
    pub status: Status,
    pub failure_witness: Option<Witness>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteResult {
    pub records: Vec<CheckRecord>,
    /// Wall-clock time per record; kept out of the reports so they stay reproducible.
    pub timings: Vec<Duration>,
}

impl SuiteResult {
    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn all_passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }
}

/// Evaluation point for one sample.
#[derive(Clone, Debug)]
struct Ctx {
    lambda: Vector,
    kappa: Rational,
    pt: ZPoint,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

struct Runner<'a> {
    cfg: &'a SuiteConfig,
    suite: Suite,
    rng: ChaCha8Rng,
    out: SuiteResult,
}

impl<'a> Runner<'a> {
    fn new(cfg: &'a SuiteConfig, suite: Suite) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(suite.stream());
        Self {
            cfg,
            suite,
            rng,
            out: SuiteResult::default(),
        }
    }

    fn record(
        &mut self,
        name: &str,
        sample: usize,
        ctx: Option<&Ctx>,
        descriptor: Option<&str>,
        outcome: kzdyn::Result<CheckReport>,
        took: Duration,
    ) {
        let (status, failure_witness, note) = match outcome {
            Ok(r) if r.passed() => (Status::Pass, None, None),
            Ok(r) => (Status::Fail, r.witness, None),
            Err(e) => (Status::Fail, None, Some(e.to_string())),
        };
        self.out.records.push(CheckRecord {
            suite: self.suite.name().into(),
            check_name: name.into(),
            lie_type: self.cfg.type_name(),
            rank: self.cfg.rank,
            module_descriptor: descriptor.map(str::to_string),
            sample,
            lambda: ctx.map(|c| strings(&c.lambda)),
            kappa: ctx.map(|c| c.kappa.to_string()),
            z: ctx.map(|c| strings(&c.pt.z())),
            status,
            failure_witness,
            note,
        });
        self.out.timings.push(took);
    }

    fn skip(&mut self, name: &str, why: &str) {
        self.out.records.push(CheckRecord {
            suite: self.suite.name().into(),
            check_name: name.into(),
            lie_type: self.cfg.type_name(),
            rank: self.cfg.rank,
            module_descriptor: None,
            sample: 0,
            lambda: None,
            kappa: None,
            z: None,
            status: Status::Skip,
            failure_witness: None,
            note: Some(why.into()),
        });
        self.out.timings.push(Duration::ZERO);
    }

    /// A check without a random evaluation point.
    fn fixed(
        &mut self,
        name: &str,
        descriptor: Option<&str>,
        f: impl FnOnce() -> kzdyn::Result<CheckReport>,
    ) {
        let start = Instant::now();
        let outcome = f();
        self.record(name, 0, None, descriptor, outcome, start.elapsed());
    }

    fn draw(&mut self, n: usize, points: usize, power: u32) -> Ctx {
        let lambda = sample::lambda(&mut self.rng, n);
        let kappa = match &self.cfg.kappa {
            Some(k) => k.clone(),
            None => sample::kappa(&mut self.rng),
        };
        let pt = sample::points(&mut self.rng, points, power);
        Ctx { lambda, kappa, pt }
    }

    /// `samples` evaluations of `f`, each redrawn on resample-class errors.
    fn sampled(
        &mut self,
        name: &str,
        v: &WeightModule,
        mut f: impl FnMut(&Ctx, &mut ChaCha8Rng) -> kzdyn::Result<CheckReport>,
    ) {
        let n = v.n();
        let points = v.num_factors();
        for s in 1..=self.cfg.samples {
            let start = Instant::now();
            let mut last = self.draw(n, points, n as u32);
            let mut outcome = Err(kzdyn::Error::PoleAtOne);
            for _ in 0..sample::MAX_ATTEMPTS {
                let mut sub = ChaCha8Rng::seed_from_u64(self.rng.gen());
                outcome = f(&last, &mut sub);
                match &outcome {
                    Err(e) if e.is_resample() => last = self.draw(n, points, n as u32),
                    _ => break,
                }
            }
            self.record(
                name,
                s,
                Some(&last),
                Some(v.descriptor()),
                outcome,
                start.elapsed(),
            );
        }
    }
}

/// `(i, factors)`: a known factor order for the translation by `ω_i`, leftmost factor first.
pub type FactorOrder = (usize, Vec<(i64, i64, i64)>);

/// Reference factor orders for translations in ranks two.
pub fn example_factor_orders(rs: &RootSystem) -> Vec<FactorOrder> {
    match (rs.kind(), rs.rank()) {
        (CartanType::A, 2) => vec![
            (1, vec![(1, 1, 0), (1, 0, 0)]),
            (2, vec![(1, 1, 0), (0, 1, 0)]),
        ],
        (CartanType::B, 2) => vec![
            (1, vec![(1, 2, 0), (1, 1, 0), (1, 0, 0)]),
            (2, vec![(1, 2, 1), (1, 1, 0), (1, 2, 0), (0, 1, 0)]),
        ],
        (CartanType::G, 2) => vec![
            (
                1,
                vec![
                    (3, 2, 2),
                    (3, 1, 2),
                    (2, 1, 1),
                    (3, 2, 1),
                    (3, 1, 1),
                    (1, 1, 0),
                    (3, 2, 0),
                    (2, 1, 0),
                    (3, 1, 0),
                    (1, 0, 0),
                ],
            ),
            (
                2,
                vec![
                    (3, 2, 1),
                    (3, 1, 0),
                    (2, 1, 0),
                    (3, 2, 0),
                    (1, 1, 0),
                    (0, 1, 0),
                ],
            ),
        ],
        _ => Vec::new(),
    }
}

pub fn rank2_root(rs: &RootSystem, (a, b, j): (i64, i64, i64)) -> AffineRoot {
    let v: Vector = rs
        .simple_root(1)
        .iter()
        .zip(rs.simple_root(2))
        .map(|(x, y)| x * q(a) + y * q(b))
        .collect();
    AffineRoot::new(v, j)
}

fn pass_if(ok: bool, what: &str) -> CheckReport {
    if ok {
        CheckReport::pass()
    } else {
        CheckReport {
            witness: Some(Witness {
                row: 0,
                col: 0,
                lhs: what.into(),
                rhs: "expected".into(),
            }),
        }
    }
}

/// `{[alpha, j] : alpha > 0, 0 <= j < (omega_i^vee, alpha)}`.
pub fn useful_roots(rs: &RootSystem, i: usize) -> Vec<AffineRoot> {
    let omega = rs.fundamental_coweight(i);
    let mut out = Vec::new();
    for a in rs.positive_roots() {
        let m = rs.form(omega, a);
        let mut j = 0;
        while q(j) < m {
            out.push(AffineRoot::new(a.clone(), j));
            j += 1;
        }
    }
    out.sort();
    out
}

/// Factors listed leftmost first reconstruct a reduced word of `t_{omega_i}`.
pub fn factor_order_is_reduced_word(rs: &RootSystem, i: usize, factors: &[AffineRoot]) -> bool {
    let mut prefix = AffineWeylElement::identity(rs);
    let mut word = Vec::new();
    for root in factors.iter().rev() {
        let simple = prefix.inverse().apply_root(rs, root);
        let Some(j) = (0..=rs.rank()).find(|&k| rs.affine_simple_root(k) == simple) else {
            return false;
        };
        word.push(j);
        prefix = prefix.compose(&AffineWeylElement::simple_reflection(rs, j));
    }
    let t = AffineWeylElement::translation(rs, rs.fundamental_coweight(i));
    let (pi, _) = t.reduced_word(rs);
    AffineWeylElement::from_word(rs, pi, &word)
        .map(|x| x == t)
        .unwrap_or(false)
}

fn word_checks(r: &mut Runner<'_>, rs: &RootSystem) {
    for i in 1..=rs.rank() {
        r.fixed(&format!("a_tilde_translation_{i}"), None, || {
            let t = AffineWeylElement::translation(rs, rs.fundamental_coweight(i));
            let mut seq = t.a_tilde_sequence(rs);
            let len_ok = seq.len() == t.length(rs);
            seq.sort();
            Ok(pass_if(
                len_ok && seq == useful_roots(rs, i),
                "inversion set of the translation",
            ))
        });
    }
    r.fixed("weyl_coxeter_relations", None, || {
        let mut ok = true;
        for i in 1..=rs.rank() {
            for j in 1..=rs.rank() {
                let m = rs.coxeter_m(i, j) as usize;
                let word: Vec<usize> = (0..2 * m).map(|k| if k % 2 == 0 { i } else { j }).collect();
                ok &= rs.weyl_from_word(&word).is_identity();
            }
        }
        Ok(pass_if(ok, "(s_i s_j)^m_ij"))
    });
    for (i, factors) in example_factor_orders(rs) {
        r.fixed(&format!("example_factor_order_{i}"), None, || {
            let roots: Vec<AffineRoot> = factors.iter().map(|&f| rank2_root(rs, f)).collect();
            let mut sorted = roots.clone();
            sorted.sort();
            Ok(pass_if(
                factor_order_is_reduced_word(rs, i, &roots) && sorted == useful_roots(rs, i),
                "factor order",
            ))
        });
    }
}

/// Positive roots `(a, b)` of type A with `a + b` a root, and orthogonal pairs.
type RootPairs = Vec<(Vector, Vector)>;

fn root_pairs(rs: &RootSystem) -> (RootPairs, RootPairs) {
    let pos = rs.positive_roots();
    let mut a2 = Vec::new();
    let mut orth = Vec::new();
    for (x, a) in pos.iter().enumerate() {
        for b in &pos[x + 1..] {
            let s: Vector = a.iter().zip(b).map(|(p, q)| p + q).collect();
            if rs.is_root(&s) {
                a2.push((a.clone(), b.clone()));
            } else if rs.form(a, b) == q(0) {
                orth.push((a.clone(), b.clone()));
            }
        }
    }
    (a2, orth)
}

fn run_sl2(r: &mut Runner<'_>) {
    let alpha = vec![q(1), q(-1)];
    for m in 1..=6usize {
        let l = WeightModule::sl2_irrep(m);
        r.sampled(&format!("sl2_product_eigenvalues_L{m}"), &l, |c, _| {
            verify_sl2_product(m, &kzdyn::linalg::rational::dot(&c.lambda, &alpha))
        });
    }
    for m in 1..=6usize {
        let l = WeightModule::sl2_irrep(m);
        r.sampled(&format!("sl2_inversion_L{m}"), &l, |c, _| {
            let t = kzdyn::linalg::rational::dot(&c.lambda, &alpha);
            let h = l.e(0, 0) - l.e(1, 1);
            let left = p_series(&(-&t - q(2)), &-&h, l.e(1, 0), l.e(0, 1))?;
            let right = p_series(&t, &h, l.e(0, 1), l.e(1, 0))?;
            let d: Vec<Rational> = (0..=m)
                .map(|k| (&t - &h[(k, k)] + q(1)) / (&t + q(1)))
                .collect();
            Ok(CheckReport::compare(
                &(&left * &right),
                &RationalMatrix::diagonal(&d),
            ))
        });
    }
    for (m, lam) in [(2usize, 6i64), (3, 8), (4, 10)] {
        r.fixed(
            &format!("verma_oracle_L{m}_at_{lam}"),
            Some(&format!("2:L{m}")),
            || sl2_verma_oracle(m, lam, default_depth(m, lam)),
        );
    }
}

fn run_braid(r: &mut Runner<'_>, rs: &RootSystem, v: Option<&WeightModule>) {
    word_checks(r, rs);
    let Some(v) = v else {
        r.skip(
            "braid_relations",
            "representation checks need a type A module",
        );
        return;
    };
    let (a2, orth) = root_pairs(rs);
    if !orth.is_empty() {
        r.sampled("braid_commuting", v, |c, _| {
            let reports = orth
                .iter()
                .map(|(a, b)| verify_commuting(v, a, b, &c.lambda))
                .collect::<kzdyn::Result<Vec<_>>>()?;
            Ok(CheckReport::all(reports))
        });
    }
    if a2.is_empty() {
        r.skip("braid_a2", "no pair of roots spans an A2 subsystem");
    } else {
        r.sampled("braid_a2", v, |c, _| {
            let reports = a2
                .iter()
                .map(|(a, b)| verify_braid_a2(v, a, b, &c.lambda))
                .collect::<kzdyn::Result<Vec<_>>>()?;
            Ok(CheckReport::all(reports))
        });
    }
    r.sampled("longest_word_independence", v, |c, _| {
        let w0 = rs.longest();
        let x = bb_word(v, rs, &w0.reduced_word(rs, TieBreak::Smallest), &c.lambda)?;
        let y = bb_word(v, rs, &w0.reduced_word(rs, TieBreak::Largest), &c.lambda)?;
        Ok(CheckReport::compare(&x, &y))
    });
}

fn fusion_elements(rs: &RootSystem) -> Vec<(&'static str, WeylElement)> {
    vec![("s1", rs.simple_reflection(1)), ("longest", rs.longest())]
}

fn run_fusion(r: &mut Runner<'_>, rs: &RootSystem, v: Option<&WeightModule>) {
    let Some(v) = v.filter(|v| v.num_factors() >= 2) else {
        r.skip("fusion", "needs a type A module with at least two factors");
        return;
    };
    let first = v.factor(0).clone();
    let rest: Vec<WeightModule> = (1..v.num_factors()).map(|k| v.factor(k).clone()).collect();
    let second = WeightModule::tensor(&rest).expect("same rank");
    r.sampled("abrr_residual_and_unipotence", v, |c, _| {
        Ok(fusion_checked(v, 1, &c.lambda)?.1)
    });
    for (label, w) in fusion_elements(rs) {
        r.sampled(&format!("property_vii_{label}"), v, |c, _| {
            verify_property_vii(&first, &second, rs, &w, &c.lambda)
        });
        r.sampled(&format!("lemma_rb_{label}"), v, |c, _| {
            verify_lemma_rb(v, 1, rs, &w, &c.lambda)
        });
    }
}

fn run_kz(r: &mut Runner<'_>, v: Option<&WeightModule>) {
    let Some(v) = v else {
        r.skip("kz_flatness", "needs a type A module");
        return;
    };
    r.sampled("kz_flatness", v, |c, _| {
        check_kz_flatness(v, &c.pt.z(), &c.lambda, &c.kappa)
    });
}

/// Random length-additive pair `(x, y)`.
fn random_pair(
    rs: &RootSystem,
    rng: &mut ChaCha8Rng,
    len: usize,
) -> (AffineWeylElement, AffineWeylElement) {
    let mut letters = Vec::new();
    let mut el = AffineWeylElement::identity(rs);
    while letters.len() < len {
        let k = rng.gen_range(0..=rs.rank());
        let next = el.compose(&AffineWeylElement::simple_reflection(rs, k));
        if next.length(rs) > el.length(rs) {
            letters.push(k);
            el = next;
        }
    }
    let cut = rng.gen_range(0..=len);
    let build = |ls: &[usize]| {
        ls.iter().fold(AffineWeylElement::identity(rs), |acc, &k| {
            acc.compose(&AffineWeylElement::simple_reflection(rs, k))
        })
    };
    (build(&letters[..cut]), build(&letters[cut..]))
}

fn run_compat(r: &mut Runner<'_>, rs: &RootSystem, v: Option<&WeightModule>) {
    let Some(v) = v else {
        r.skip("compat", "representation checks need a type A module");
        return;
    };
    let minuscule = rs.o_star();
    let points = v.num_factors();
    for &i in &minuscule {
        r.sampled(&format!("kz_dyn_compat_{i}"), v, |c, _| {
            let reports = (0..points)
                .map(|j| check_kz_dyn_compat(v, rs, i, j, &c.pt, &c.lambda, &c.kappa))
                .collect::<kzdyn::Result<Vec<_>>>()?;
            Ok(CheckReport::all(reports))
        });
    }
    for (x, &i) in minuscule.iter().enumerate() {
        for &j in &minuscule[x + 1..] {
            r.sampled(&format!("dyn_dyn_compat_{i}_{j}"), v, |c, _| {
                check_dyn_dyn_compat(v, rs, i, j, &c.pt, &c.lambda, &c.kappa)
            });
        }
    }
    for &i in &minuscule {
        r.sampled(&format!("pi_invariance_{i}"), v, |c, _| {
            let mut reports = vec![check_r_conjugation(v, rs, i, &c.pt)?];
            for j in 0..points {
                reports.push(check_pi_invariance(v, rs, i, j, &c.pt, &c.lambda)?);
            }
            Ok(CheckReport::all(reports))
        });
    }
    for (label, w) in fusion_elements(rs) {
        r.sampled(&format!("lemma_nice_{label}"), v, |c, _| {
            let reports = (0..points)
                .map(|j| check_lemma_nice(v, rs, j, &w, &c.pt.z(), &c.lambda))
                .collect::<kzdyn::Result<Vec<_>>>()?;
            Ok(CheckReport::all(reports))
        });
    }
    for i in 1..=rs.rank() + 1 {
        r.sampled(&format!("equivalent_form_{i}"), v, |c, _| {
            equivalent_form_check(v, rs, i, &c.pt, &c.lambda, &c.kappa)
        });
    }
    for &i in &minuscule {
        r.sampled(&format!("cocycle_translation_{i}"), v, |c, _| {
            let t = AffineWeylElement::translation(rs, rs.fundamental_coweight(i));
            let g = eval_at(
                &cocycle_value(v, rs, &t, &c.lambda, &c.kappa)?.matrix,
                &c.pt,
            )?;
            let b = kzdyn::ops::bb_w(v, rs, &rs.w_bracket(i)?, &c.lambda)?;
            Ok(CheckReport::compare(&g, &b))
        });
    }
    r.sampled("cocycle_identity", v, |c, rng| {
        let (x, y) = random_pair(rs, rng, 2 * rs.rank() + 2);
        let report = check_cocycle_identity(v, rs, &x, &y, &c.lambda, &c.kappa, &c.pt)?;
        let choices = check_factor_choices(v, rs, &x.compose(&y), &c.lambda, &c.kappa)?;
        Ok(CheckReport::all([
            report,
            pass_if(choices, "second omega choice"),
        ]))
    });
}

fn run_det(r: &mut Runner<'_>, rs: &RootSystem, v: Option<&WeightModule>) {
    let Some(v) = v else {
        r.skip("det", "needs a type A module");
        return;
    };
    let nu = match r.cfg.projected_weight() {
        Some(nu) => nu,
        None => {
            let zero = vec![q(0); v.n()];
            if v.weight_space(&zero).is_empty() {
                v.weight_spaces()[0].0.clone()
            } else {
                zero
            }
        }
    };
    let at = strings(&nu).join(",");
    for i in rs.o_star() {
        r.sampled(&format!("det_ratio_{i}@{at}"), v, |c, _| {
            det_formula_check(v, rs, &nu, i, &c.pt, &c.lambda, &c.kappa)
        });
    }
}

/// Run every configured suite in order.
pub fn run_suite(cfg: &SuiteConfig) -> SuiteResult {
    let rs = cfg.root_system();
    let module = cfg.module();
    let mut total = SuiteResult::default();
    for &suite in &cfg.suites {
        let mut r = Runner::new(cfg, suite);
        match suite {
            Suite::Sl2 => run_sl2(&mut r),
            Suite::Braid => run_braid(&mut r, &rs, module.as_ref()),
            Suite::Fusion => run_fusion(&mut r, &rs, module.as_ref()),
            Suite::Kz => run_kz(&mut r, module.as_ref()),
            Suite::Compat => run_compat(&mut r, &rs, module.as_ref()),
            Suite::Det => run_det(&mut r, &rs, module.as_ref()),
        }
        total.records.extend(r.out.records);
        total.timings.extend(r.out.timings);
    }
    total
}
