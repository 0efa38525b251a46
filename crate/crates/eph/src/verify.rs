//! A registry of named self-checks, one per identity the crate promises.
//!
//! Each check replays its identity on fixed-seed random draws and reports
//! pass/fail together with a short measurement (case count for exact
//! arithmetic, worst deviation for floating point). The `verify` subcommand
//! of the command-line tool runs these suites; because every seed is pinned,
//! two runs of the same build produce identical reports.

use std::fmt;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::dualalg::{Flavor, PVec};
use crate::homogeneous::{
    act_brute, act_moebius, cayley_conjugate, p_map_mat, parab_rotate_n, parab_rotate_nprime,
    s_map_raw, HalfPlanePoint, IsotropyGroup, ProjPoint,
};
use crate::hypercomplex::{HNum, Sigma};
use crate::induced::{
    chi, f_k, rep_k, rep_nprime, rep_nprime_fn, CharacterSpec, NprimeFlavor, SampledFunction,
};
use crate::ladder::{ad, find_y, killing_form, solve_ladder};
use crate::orbitgen::{figure_geometric, figure_rotations, CurveKind, OrbitCurve};
use crate::sampling::{self, rat_in};
use crate::scalar::{rat, Rat, Scalar};
use crate::sl2::{
    classify, commutator, exp_traceless, iwasawa_decompose, subgroup_element, LieElem,
    SubgroupKind,
};

const SIGMAS: [Sigma; 3] = [Sigma::Elliptic, Sigma::Parabolic, Sigma::Hyperbolic];

/// The check groups, one per module with promised identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Hypercomplex,
    Sl2,
    Homogeneous,
    Dualalg,
    Induced,
    Ladder,
    Orbit,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Hypercomplex,
        Suite::Sl2,
        Suite::Homogeneous,
        Suite::Dualalg,
        Suite::Induced,
        Suite::Ladder,
        Suite::Orbit,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Suite::Hypercomplex => "hypercomplex",
            Suite::Sl2 => "sl2",
            Suite::Homogeneous => "homogeneous",
            Suite::Dualalg => "dualalg",
            Suite::Induced => "induced",
            Suite::Ladder => "ladder",
            Suite::Orbit => "orbit",
        }
    }

    pub fn from_label(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|k| k.label() == s)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub suite: Suite,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} :: {} [{}]",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.name,
            self.detail
        )
    }
}

struct CheckDef {
    suite: Suite,
    name: &'static str,
    run: fn() -> (bool, String),
}

/// Runs the selected suites in registry order.
pub fn run_suites(suites: &[Suite]) -> Vec<CheckReport> {
    registry()
        .into_iter()
        .filter(|d| suites.contains(&d.suite))
        .map(|d| {
            let (passed, detail) = (d.run)();
            CheckReport { suite: d.suite, name: d.name, passed, detail }
        })
        .collect()
}

/// Runs every suite.
pub fn run_all() -> Vec<CheckReport> {
    run_suites(&Suite::ALL)
}

/// Accumulates case results; exact checks count mismatches, float checks
/// track the worst deviation against a stated tolerance.
struct Tally {
    cases: usize,
    failed: usize,
    worst: f64,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, failed: 0, worst: 0.0 }
    }

    fn exact(&mut self, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
        }
    }

    fn within(&mut self, dev: f64, tol: f64) {
        self.cases += 1;
        if !(dev <= tol) {
            self.failed += 1;
        }
        if dev.is_nan() {
            self.worst = f64::NAN;
        } else if !self.worst.is_nan() && dev > self.worst {
            self.worst = dev;
        }
    }

    fn exact_report(self) -> (bool, String) {
        if self.failed == 0 {
            (true, format!("{} cases, all exact", self.cases))
        } else {
            (false, format!("{} of {} cases failed", self.failed, self.cases))
        }
    }

    fn tol_report(self, tol: f64) -> (bool, String) {
        (
            self.failed == 0,
            format!("{} cases, worst deviation {:.2e} (tolerance {:.0e})", self.cases, self.worst, tol),
        )
    }
}

fn nonzero_rat(r: &mut ChaCha8Rng, span: i64, max_den: i64) -> Rat {
    loop {
        let x = rat_in(r, span, max_den);
        if !x.is_zero() {
            return x;
        }
    }
}

fn rat_hnum(r: &mut ChaCha8Rng, sigma: Sigma) -> HNum<Rat> {
    HNum::new(rat_in(r, 8, 5), rat_in(r, 8, 5), sigma)
}

fn hnum_dev(a: &HNum<f64>, b: &HNum<f64>) -> f64 {
    (a.re - b.re).abs().max((a.im - b.im).abs())
}

fn registry() -> Vec<CheckDef> {
    use Suite::*;
    vec![
        CheckDef { suite: Hypercomplex, name: "ring axioms hold in all three algebras", run: hc_ring_axioms },
        CheckDef { suite: Hypercomplex, name: "the square modulus is multiplicative", run: hc_modulus_multiplicative },
        CheckDef { suite: Hypercomplex, name: "unit exponentials compose additively", run: hc_exp_additive },
        CheckDef { suite: Hypercomplex, name: "multiplying by a unit exponential shifts the argument", run: hc_arg_shift },
        CheckDef { suite: Sl2, name: "iwasawa factors recompose to the group element", run: sl_iwasawa_round_trip },
        CheckDef { suite: Sl2, name: "exponentials form one-parameter subgroups", run: sl_exp_one_parameter },
        CheckDef { suite: Sl2, name: "classification is conjugation invariant", run: sl_classify_conjugation },
        CheckDef { suite: Sl2, name: "exponentials have unit determinant", run: sl_exp_unit_det },
        CheckDef { suite: Sl2, name: "the commutator satisfies the jacobi identity", run: sl_jacobi },
        CheckDef { suite: Homogeneous, name: "the brute-force action is a homomorphism", run: ho_action_homomorphism },
        CheckDef { suite: Homogeneous, name: "the action agrees with section followed by projection", run: ho_action_diagram },
        CheckDef { suite: Homogeneous, name: "both action forms give the same point", run: ho_action_forms_agree },
        CheckDef { suite: Homogeneous, name: "cayley conjugation straightens the isotropy subgroups", run: ho_cayley_diagonal },
        CheckDef { suite: Homogeneous, name: "parabolic rotations form one-parameter flows", run: ho_parab_flows },
        CheckDef { suite: Dualalg, name: "a dual number splits into real and imaginary parts", run: da_split },
        CheckDef { suite: Dualalg, name: "polar reconstruction returns the stated norm and argument", run: da_polar_round_trip },
        CheckDef { suite: Dualalg, name: "norms are invariant under the matching rotations", run: da_norm_invariant },
        CheckDef { suite: Dualalg, name: "rotations shift the argument by the parameter", run: da_arg_shift },
        CheckDef { suite: Dualalg, name: "conjugate products survive simultaneous rotation", run: da_conjugate_product_invariant },
        CheckDef { suite: Dualalg, name: "a vector times its conjugate is the squared norm", run: da_conjugate_square },
        CheckDef { suite: Dualalg, name: "the unit vector is neutral for the product", run: da_unit_neutral },
        CheckDef { suite: Dualalg, name: "addition is commutative", run: da_add_commutative },
        CheckDef { suite: Dualalg, name: "addition is associative", run: da_add_associative },
        CheckDef { suite: Dualalg, name: "scalar factors commute", run: da_scalar_commute },
        CheckDef { suite: Dualalg, name: "scalar factors compose multiplicatively", run: da_scalar_compose },
        CheckDef { suite: Dualalg, name: "scalars distribute over vector sums", run: da_scalar_over_sum },
        CheckDef { suite: Dualalg, name: "scalar sums distribute over the vector", run: da_sum_over_scalar },
        CheckDef { suite: Dualalg, name: "the product is commutative", run: da_mul_commutative },
        CheckDef { suite: Dualalg, name: "the product is associative", run: da_mul_associative },
        CheckDef { suite: Dualalg, name: "the product distributes over addition", run: da_mul_distributive },
        CheckDef { suite: Dualalg, name: "rotation acts as multiplication by a unit vector", run: da_rotation_is_unit_mul },
        CheckDef { suite: Induced, name: "characters are multiplicative", run: in_chi_multiplicative },
        CheckDef { suite: Induced, name: "the representation composes along the group law", run: in_rep_composes },
        CheckDef { suite: Induced, name: "rotation eigenfunctions scale by the character", run: in_k_eigenfunction },
        CheckDef { suite: Induced, name: "representation multipliers have unit norm", run: in_multiplier_unit },
        CheckDef { suite: Ladder, name: "eigenvalue squares match the three case constants", run: la_eigenvalue_squares },
        CheckDef { suite: Ladder, name: "every returned pair satisfies the eigen relation exactly", run: la_eigen_relation },
        CheckDef { suite: Ladder, name: "the split algebra doubles the ladder pairs", run: la_pair_counts },
        CheckDef { suite: Ladder, name: "the killing partner is null-paired and unique up to scale", run: la_killing_partner },
        CheckDef { suite: Orbit, name: "every figure sample lies on its defining curve", run: or_samples_on_curve },
        CheckDef { suite: Orbit, name: "case rotations preserve the level sets", run: or_rotation_invariance },
    ]
}

// ---- hypercomplex ----------------------------------------------------------

fn hc_ring_axioms() -> (bool, String) {
    let mut r = sampling::rng(101);
    let mut t = Tally::new();
    for sigma in SIGMAS {
        for _ in 0..25 {
            let w1 = rat_hnum(&mut r, sigma);
            let w2 = rat_hnum(&mut r, sigma);
            let w3 = rat_hnum(&mut r, sigma);
            t.exact(w1.add(&w2).unwrap() == w2.add(&w1).unwrap());
            t.exact(w1.add(&w2).unwrap().add(&w3).unwrap() == w1.add(&w2.add(&w3).unwrap()).unwrap());
            t.exact(w1.mul(&w2).unwrap() == w2.mul(&w1).unwrap());
            t.exact(w1.mul(&w2).unwrap().mul(&w3).unwrap() == w1.mul(&w2.mul(&w3).unwrap()).unwrap());
            let lhs = w1.mul(&w2.add(&w3).unwrap()).unwrap();
            let rhs = w1.mul(&w2).unwrap().add(&w1.mul(&w3).unwrap()).unwrap();
            t.exact(lhs == rhs);
        }
    }
    t.exact_report()
}

fn hc_modulus_multiplicative() -> (bool, String) {
    let mut r = sampling::rng(102);
    let mut t = Tally::new();
    for sigma in SIGMAS {
        for _ in 0..40 {
            let w1 = rat_hnum(&mut r, sigma);
            let w2 = rat_hnum(&mut r, sigma);
            t.exact(w1.mul(&w2).unwrap().modulus_sq() == w1.modulus_sq() * w2.modulus_sq());
        }
    }
    t.exact_report()
}

fn hc_exp_additive() -> (bool, String) {
    let mut r = sampling::rng(103);
    let mut exact = Tally::new();
    for _ in 0..60 {
        let a = rat_in(&mut r, 9, 5);
        let b = rat_in(&mut r, 9, 5);
        let lhs = HNum::<Rat>::exp_unit(Sigma::Parabolic, &a)
            .unwrap()
            .mul(&HNum::exp_unit(Sigma::Parabolic, &b).unwrap())
            .unwrap();
        let rhs = HNum::exp_unit(Sigma::Parabolic, &(a + b)).unwrap();
        exact.exact(lhs == rhs);
    }
    let (ok0, det0) = exact.exact_report();

    let tol = 1e-12;
    let mut float = Tally::new();
    for sigma in [Sigma::Elliptic, Sigma::Hyperbolic] {
        for _ in 0..200 {
            let a: f64 = r.gen_range(-1.5..1.5);
            let b: f64 = r.gen_range(-1.5..1.5);
            let lhs = HNum::exp_unit(sigma, &a).unwrap().mul(&HNum::exp_unit(sigma, &b).unwrap()).unwrap();
            let rhs = HNum::exp_unit(sigma, &(a + b)).unwrap();
            float.within(hnum_dev(&lhs, &rhs), tol);
        }
    }
    let (ok1, det1) = float.tol_report(tol);
    (ok0 && ok1, format!("dual exact: {det0}; complex/double: {det1}"))
}

fn hc_arg_shift() -> (bool, String) {
    let mut r = sampling::rng(104);
    let tol = 1e-12;
    let mut t = Tally::new();
    for _ in 0..200 {
        // Elliptic draw kept away from the branch cut at ±π.
        let phi: f64 = r.gen_range(-1.0..1.0);
        let m: f64 = r.gen_range(0.3..2.0);
        let dt: f64 = r.gen_range(-0.5..0.5);
        let w = HNum::new(m * phi.cos(), m * phi.sin(), Sigma::Elliptic);
        let moved = w.mul(&HNum::exp_unit(Sigma::Elliptic, &dt).unwrap()).unwrap();
        t.within((moved.arg().unwrap() - (w.arg().unwrap() + dt)).abs(), tol);

        // Parabolic needs an invertible real part.
        let re: f64 = r.gen_range(0.3..2.0) * if r.gen_bool(0.5) { 1.0 } else { -1.0 };
        let im: f64 = r.gen_range(-2.0..2.0);
        let dt: f64 = r.gen_range(-1.0..1.0);
        let w = HNum::new(re, im, Sigma::Parabolic);
        let moved = w.mul(&HNum::exp_unit(Sigma::Parabolic, &dt).unwrap()).unwrap();
        t.within((moved.arg().unwrap() - (w.arg().unwrap() + dt)).abs(), tol);

        // Hyperbolic draw stays in the wedge |re| > |im| before and after.
        let phi: f64 = r.gen_range(-1.0..1.0);
        let m: f64 = r.gen_range(0.3..2.0) * if r.gen_bool(0.5) { 1.0 } else { -1.0 };
        let dt: f64 = r.gen_range(-1.0..1.0);
        let w = HNum::new(m * phi.cosh(), m * phi.sinh(), Sigma::Hyperbolic);
        let moved = w.mul(&HNum::exp_unit(Sigma::Hyperbolic, &dt).unwrap()).unwrap();
        t.within((moved.arg().unwrap() - (w.arg().unwrap() + dt)).abs(), tol);
    }
    t.tol_report(tol)
}

// ---- sl2 -------------------------------------------------------------------

fn sl_iwasawa_round_trip() -> (bool, String) {
    let mut r = sampling::rng(201);
    let tol = 1e-10;
    let mut t = Tally::new();
    for _ in 0..10_000 {
        let g = subgroup_element(SubgroupKind::A, &r.gen_range(-2.0..2.0))
            .unwrap()
            .mul(&subgroup_element(SubgroupKind::N, &r.gen_range(-2.0..2.0)).unwrap())
            .mul(&subgroup_element(SubgroupKind::K, &r.gen_range(-3.1..3.1)).unwrap());
        let back = iwasawa_decompose(&g).unwrap().recompose().unwrap();
        let (m, n) = (g.mat(), back.mat());
        let dev = (m.a - n.a).abs().max((m.b - n.b).abs()).max((m.c - n.c).abs()).max((m.d - n.d).abs());
        t.within(dev, tol);
    }
    t.tol_report(tol)
}

fn sl_exp_one_parameter() -> (bool, String) {
    let mut r = sampling::rng(202);
    let tol = 1e-10;
    let mut t = Tally::new();
    for _ in 0..300 {
        let x = sampling::float_traceless(&mut r, 1.5);
        let (a, b) = (r.gen_range(-1.5..1.5), r.gen_range(-1.5..1.5));
        let lhs = exp_traceless(&x, &a).unwrap().mul(&exp_traceless(&x, &b).unwrap());
        let rhs = exp_traceless(&x, &(a + b)).unwrap();
        let (m, n) = (lhs.mat(), rhs.mat());
        let dev = (m.a - n.a).abs().max((m.b - n.b).abs()).max((m.c - n.c).abs()).max((m.d - n.d).abs());
        t.within(dev, tol);
    }
    t.tol_report(tol)
}

fn sl_classify_conjugation() -> (bool, String) {
    let mut r = sampling::rng(203);
    let mut t = Tally::new();
    for _ in 0..200 {
        let x = sampling::rational_traceless(&mut r);
        if x.is_zero() {
            continue;
        }
        let s = sampling::rational_sl2(&mut r);
        let conj = LieElem::new(s.mat().mul(x.mat()).mul(s.inverse().mat())).unwrap();
        t.exact(classify(&conj).unwrap() == classify(&x).unwrap());
    }
    t.exact_report()
}

fn sl_exp_unit_det() -> (bool, String) {
    let mut r = sampling::rng(204);
    let tol = 1e-12;
    let mut t = Tally::new();
    for _ in 0..300 {
        let x = sampling::float_traceless(&mut r, 1.5);
        let g = exp_traceless(&x, &r.gen_range(-1.5..1.5)).unwrap();
        t.within((g.mat().det() - 1.0).abs(), tol);
    }
    t.tol_report(tol)
}

fn sl_jacobi() -> (bool, String) {
    let mut r = sampling::rng(205);
    let mut t = Tally::new();
    for _ in 0..150 {
        let x = sampling::rational_traceless(&mut r);
        let y = sampling::rational_traceless(&mut r);
        let z = sampling::rational_traceless(&mut r);
        let c1 = commutator(&commutator(&x, &y), &z);
        let c2 = commutator(&commutator(&y, &z), &x);
        let c3 = commutator(&commutator(&z, &x), &y);
        let (m1, m2, m3) = (c1.mat(), c2.mat(), c3.mat());
        let sum = [
            m1.a.clone() + m2.a.clone() + m3.a.clone(),
            m1.b.clone() + m2.b.clone() + m3.b.clone(),
            m1.c.clone() + m2.c.clone() + m3.c.clone(),
            m1.d.clone() + m2.d.clone() + m3.d.clone(),
        ];
        t.exact(sum.iter().all(Rat::is_zero));
    }
    t.exact_report()
}

// ---- homogeneous -----------------------------------------------------------

fn ho_action_homomorphism() -> (bool, String) {
    let mut r = sampling::rng(301);
    let mut t = Tally::new();
    for sigma in SIGMAS {
        for _ in 0..60 {
            let g1 = sampling::rational_sl2(&mut r);
            let g2 = sampling::rational_sl2(&mut r);
            let p = sampling::rational_point(&mut r);
            // Draws whose chain passes through an ideal point are outside
            // the half-plane model and carry no information here.
            let two = act_brute(&g2, &p, sigma).and_then(|q| act_brute(&g1, &q, sigma));
            let one = act_brute(&g1.mul(&g2), &p, sigma);
            if let (Ok(a), Ok(b)) = (one, two) {
                t.exact(a.u == b.u && a.v == b.v);
            }
        }
    }
    t.exact_report()
}

fn ho_action_diagram() -> (bool, String) {
    let mut r = sampling::rng(302);
    let mut t = Tally::new();
    for h in [IsotropyGroup::K, IsotropyGroup::Nprime, IsotropyGroup::Aprime] {
        let sigma = h.sigma();
        for _ in 0..60 {
            let g = sampling::rational_sl2(&mut r);
            let p = sampling::rational_point(&mut r);
            let direct = act_brute(&g, &p, sigma);
            let through = s_map_raw(&p).and_then(|raw| p_map_mat(&g.mat().mul(&raw), h));
            match (direct, through) {
                (Ok(a), Ok(b)) => t.exact(a.u == b.u && a.v == b.v),
                (Err(_), Err(_)) => {}
                _ => t.exact(false),
            }
        }
    }
    t.exact_report()
}

fn ho_action_forms_agree() -> (bool, String) {
    let mut r = sampling::rng(303);
    let mut t = Tally::new();
    for sigma in SIGMAS {
        for _ in 0..60 {
            let g = sampling::rational_sl2(&mut r);
            let p = sampling::rational_point(&mut r);
            let brute = act_brute(&g, &p, sigma);
            let moebius =
                act_moebius(&g, &ProjPoint::embed(&p, sigma)).and_then(|q| q.affine_point());
            match (brute, moebius) {
                (Ok(a), Ok(b)) => t.exact(a.u == b.u && a.v == b.v),
                (Err(_), Err(_)) => {}
                _ => t.exact(false),
            }
        }
    }
    t.exact_report()
}

fn ho_cayley_diagonal() -> (bool, String) {
    let mut r = sampling::rng(304);
    let tol = 1e-12;
    let mut float = Tally::new();
    for _ in 0..80 {
        let t: f64 = r.gen_range(-3.1..3.1);
        let conj = cayley_conjugate(&subgroup_element(SubgroupKind::K, &t).unwrap(), Sigma::Elliptic)
            .unwrap();
        let off = conj.b.re.abs().max(conj.b.im.abs()).max(conj.c.re.abs()).max(conj.c.im.abs());
        float.within(off, tol);

        let t: f64 = r.gen_range(-2.0..2.0);
        let conj =
            cayley_conjugate(&subgroup_element(SubgroupKind::APrime, &t).unwrap(), Sigma::Hyperbolic)
                .unwrap();
        let off = conj.b.re.abs().max(conj.b.im.abs()).max(conj.c.re.abs()).max(conj.c.im.abs());
        float.within(off, tol);
    }
    let (ok_f, det_f) = float.tol_report(tol);

    let mut exact = Tally::new();
    for _ in 0..60 {
        let t = rat_in(&mut r, 9, 5);
        let conj = cayley_conjugate(&subgroup_element(SubgroupKind::N, &t).unwrap(), Sigma::Parabolic)
            .unwrap();
        let want_a = HNum::new(rat(1, 1), t.clone(), Sigma::Parabolic);
        let want_b = HNum::new(t.clone(), rat(0, 1), Sigma::Parabolic);
        let want_d = HNum::new(rat(1, 1), -t.clone(), Sigma::Parabolic);
        exact.exact(conj.a == want_a && conj.b == want_b && conj.c.is_zero() && conj.d == want_d);
    }
    let (ok_e, det_e) = exact.exact_report();
    (ok_f && ok_e, format!("rotation/boost off-diagonals: {det_f}; shear exact: {det_e}"))
}

fn ho_parab_flows() -> (bool, String) {
    let mut r = sampling::rng(305);
    let mut t = Tally::new();
    for _ in 0..150 {
        let p = HalfPlanePoint::new(rat_in(&mut r, 6, 4), rat_in(&mut r, 6, 4));
        let (a, b) = (rat_in(&mut r, 6, 4), rat_in(&mut r, 6, 4));
        let two_step = parab_rotate_n(&a, &parab_rotate_n(&b, &p));
        let one_step = parab_rotate_n(&(a.clone() + b.clone()), &p);
        t.exact(two_step.u == one_step.u && two_step.v == one_step.v);

        let two_step = parab_rotate_nprime(&b, &p).and_then(|q| parab_rotate_nprime(&a, &q));
        let one_step = parab_rotate_nprime(&(a + b), &p);
        if let (Ok(x), Ok(y)) = (two_step, one_step) {
            t.exact(x.u == y.u && x.v == y.v);
        }
    }
    t.exact_report()
}

// ---- dualalg ---------------------------------------------------------------

fn same_vec(p: &PVec<Rat>, q: &PVec<Rat>) -> bool {
    if p == q {
        return true;
    }
    match (p.hompolar_pair(), q.hompolar_pair()) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

/// An `N`-flavor draw in the affine chart (total for every operation).
fn n_vec(r: &mut ChaCha8Rng) -> PVec<Rat> {
    PVec::affine(Flavor::N, rat_in(r, 6, 4), rat_in(r, 6, 4))
}

/// An `N'`-flavor draw in the homogeneous chart, nonzero norm.
fn np_vec(r: &mut ChaCha8Rng) -> PVec<Rat> {
    PVec::hompolar(Flavor::Nprime, rat_in(r, 6, 4), nonzero_rat(r, 6, 4))
}

/// An `N'` point safe for the affine chart and its rotations: u ≠ 0, v ≠ −1.
fn np_affine(r: &mut ChaCha8Rng) -> (Rat, Rat) {
    let u = nonzero_rat(r, 6, 4);
    let v = loop {
        let v = rat_in(r, 6, 4);
        if v != rat(-1, 1) {
            break v;
        }
    };
    (u, v)
}

fn both_flavors(r: &mut ChaCha8Rng) -> [PVec<Rat>; 2] {
    [n_vec(r), np_vec(r)]
}

fn da_split() -> (bool, String) {
    let mut r = sampling::rng(401);
    let mut t = Tally::new();
    for _ in 0..40 {
        let w = rat_hnum(&mut r, Sigma::Parabolic);
        let re = HNum::from_real(w.re.clone(), Sigma::Parabolic);
        let im = HNum::new(rat(0, 1), w.im.clone(), Sigma::Parabolic);
        t.exact(re.add(&im).unwrap() == w);
    }
    t.exact_report()
}

fn da_polar_round_trip() -> (bool, String) {
    let mut r = sampling::rng(402);
    let mut t = Tally::new();
    for _ in 0..60 {
        let arg = rat_in(&mut r, 7, 4);
        let m = nonzero_rat(&mut r, 7, 4);
        for flavor in [Flavor::N, Flavor::Nprime] {
            let p = PVec::from_arg_mod(flavor, arg.clone(), m.clone());
            t.exact(p.norm().unwrap() == m && p.argument().unwrap() == arg);
        }
    }
    t.exact_report()
}

fn da_norm_invariant() -> (bool, String) {
    let mut r = sampling::rng(403);
    let mut t = Tally::new();
    for _ in 0..120 {
        let dt = rat_in(&mut r, 5, 4);
        let (u, v) = (rat_in(&mut r, 6, 4), rat_in(&mut r, 6, 4));
        let p = PVec::affine(Flavor::N, u.clone(), v.clone());
        let q = parab_rotate_n(&dt, &HalfPlanePoint::new(u, v));
        t.exact(PVec::affine(Flavor::N, q.u, q.v).norm().unwrap() == p.norm().unwrap());

        let (u, v) = np_affine(&mut r);
        let p = PVec::affine(Flavor::Nprime, u.clone(), v.clone());
        if let Ok(q) = parab_rotate_nprime(&dt, &HalfPlanePoint::new(u, v)) {
            t.exact(PVec::affine(Flavor::Nprime, q.u, q.v).norm().unwrap() == p.norm().unwrap());
        }
    }
    t.exact_report()
}

fn da_arg_shift() -> (bool, String) {
    let mut r = sampling::rng(404);
    let mut t = Tally::new();
    for _ in 0..120 {
        let dt = rat_in(&mut r, 5, 4);
        let (u, v) = (rat_in(&mut r, 6, 4), rat_in(&mut r, 6, 4));
        let p = PVec::affine(Flavor::N, u.clone(), v.clone());
        let q = parab_rotate_n(&dt, &HalfPlanePoint::new(u, v));
        t.exact(
            PVec::affine(Flavor::N, q.u, q.v).argument().unwrap()
                == p.argument().unwrap() + dt.clone(),
        );

        let (u, v) = np_affine(&mut r);
        let p = PVec::affine(Flavor::Nprime, u.clone(), v.clone());
        if let Ok(q) = parab_rotate_nprime(&dt, &HalfPlanePoint::new(u.clone(), v)) {
            if !q.u.is_zero() {
                t.exact(
                    PVec::affine(Flavor::Nprime, q.u, q.v).argument().unwrap()
                        == p.argument().unwrap() + dt,
                );
            }
        }
    }
    t.exact_report()
}

fn da_conjugate_product_invariant() -> (bool, String) {
    let mut r = sampling::rng(405);
    let mut t = Tally::new();
    for _ in 0..100 {
        let dt = rat_in(&mut r, 5, 4);
        // Keep rotated factors in the homogeneous chart: the affine product
        // formula refuses argument-sum zero, which says nothing about the
        // identity itself.
        let rot = |p: &PVec<Rat>| {
            let unit = PVec::from_arg_mod(p.flavor, dt.clone(), rat(1, 1));
            unit.pmul(p).unwrap().to_hompolar().unwrap()
        };
        for pair in [
            (n_vec(&mut r), n_vec(&mut r)),
            (np_vec(&mut r), np_vec(&mut r)),
        ] {
            let (w1, w2) = pair;
            let before = w1.pmul(&w2.pconj()).unwrap();
            let after = rot(&w1).pmul(&rot(&w2).pconj()).unwrap();
            t.exact(same_vec(&before, &after));
        }
    }
    t.exact_report()
}

fn da_conjugate_square() -> (bool, String) {
    let mut r = sampling::rng(406);
    let mut t = Tally::new();
    for _ in 0..100 {
        for p in both_flavors(&mut r) {
            let n = p.norm().unwrap();
            let prod = p.pmul(&p.pconj()).unwrap();
            let want = PVec::from_arg_mod(p.flavor, rat(0, 1), n.clone() * n.clone());
            t.exact(same_vec(&prod, &want) && prod.norm().unwrap() == n.clone() * n);
        }
    }
    t.exact_report()
}

fn da_unit_neutral() -> (bool, String) {
    let mut r = sampling::rng(407);
    let mut t = Tally::new();
    for _ in 0..100 {
        for p in both_flavors(&mut r) {
            t.exact(same_vec(&p.pmul(&PVec::unit(p.flavor)).unwrap(), &p));
        }
    }
    t.exact_report()
}

fn da_add_commutative() -> (bool, String) {
    let mut r = sampling::rng(408);
    let mut t = Tally::new();
    for _ in 0..100 {
        for (p, q) in [
            (n_vec(&mut r), n_vec(&mut r)),
            (np_vec(&mut r), np_vec(&mut r)),
        ] {
            t.exact(same_vec(&p.padd(&q).unwrap(), &q.padd(&p).unwrap()));
        }
    }
    t.exact_report()
}

fn da_add_associative() -> (bool, String) {
    let mut r = sampling::rng(409);
    let mut t = Tally::new();
    for _ in 0..100 {
        for (p, q, s) in [
            (n_vec(&mut r), n_vec(&mut r), n_vec(&mut r)),
            (np_vec(&mut r), np_vec(&mut r), np_vec(&mut r)),
        ] {
            let lhs = p.padd(&q).unwrap().padd(&s).unwrap();
            let rhs = p.padd(&q.padd(&s).unwrap()).unwrap();
            t.exact(same_vec(&lhs, &rhs));
        }
    }
    t.exact_report()
}

fn da_scalar_commute() -> (bool, String) {
    let mut r = sampling::rng(410);
    let mut t = Tally::new();
    for _ in 0..100 {
        let (a, b) = (rat_in(&mut r, 6, 4), rat_in(&mut r, 6, 4));
        for p in both_flavors(&mut r) {
            let lhs = p.smul(&a).and_then(|q| q.smul(&b));
            let rhs = p.smul(&b).and_then(|q| q.smul(&a));
            match (lhs, rhs) {
                (Ok(x), Ok(y)) => t.exact(same_vec(&x, &y)),
                (Err(_), Err(_)) => {}
                _ => t.exact(false),
            }
        }
    }
    t.exact_report()
}

fn da_scalar_compose() -> (bool, String) {
    let mut r = sampling::rng(411);
    let mut t = Tally::new();
    for _ in 0..100 {
        let (a, b) = (rat_in(&mut r, 6, 4), rat_in(&mut r, 6, 4));
        for p in both_flavors(&mut r) {
            let lhs = p.smul(&a).and_then(|q| q.smul(&b));
            let rhs = p.smul(&(a.clone() * b.clone()));
            match (lhs, rhs) {
                (Ok(x), Ok(y)) => t.exact(same_vec(&x, &y)),
                (Err(_), Err(_)) => {}
                _ => t.exact(false),
            }
        }
    }
    t.exact_report()
}

fn da_scalar_over_sum() -> (bool, String) {
    let mut r = sampling::rng(412);
    let mut t = Tally::new();
    for _ in 0..100 {
        let a = nonzero_rat(&mut r, 6, 4);
        for (p, q) in [
            (n_vec(&mut r), n_vec(&mut r)),
            (np_vec(&mut r), np_vec(&mut r)),
        ] {
            let lhs = p.padd(&q).unwrap().smul(&a).unwrap();
            let rhs = p.smul(&a).unwrap().padd(&q.smul(&a).unwrap()).unwrap();
            t.exact(same_vec(&lhs, &rhs));
        }
    }
    t.exact_report()
}

fn da_sum_over_scalar() -> (bool, String) {
    let mut r = sampling::rng(413);
    let mut t = Tally::new();
    for _ in 0..100 {
        let (a, b) = (nonzero_rat(&mut r, 6, 4), nonzero_rat(&mut r, 6, 4));
        if (a.clone() + b.clone()).is_zero() {
            continue;
        }
        for p in both_flavors(&mut r) {
            let lhs = p.smul(&(a.clone() + b.clone())).unwrap();
            let rhs = p.smul(&a).unwrap().padd(&p.smul(&b).unwrap()).unwrap();
            t.exact(same_vec(&lhs, &rhs));
        }
    }
    t.exact_report()
}

fn da_mul_commutative() -> (bool, String) {
    let mut r = sampling::rng(414);
    let mut t = Tally::new();
    for _ in 0..100 {
        for (p, q) in [
            (n_vec(&mut r), n_vec(&mut r)),
            (np_vec(&mut r), np_vec(&mut r)),
        ] {
            t.exact(same_vec(&p.pmul(&q).unwrap(), &q.pmul(&p).unwrap()));
        }
    }
    t.exact_report()
}

fn da_mul_associative() -> (bool, String) {
    let mut r = sampling::rng(415);
    let mut t = Tally::new();
    for _ in 0..100 {
        for (p, q, s) in [
            (n_vec(&mut r), n_vec(&mut r), n_vec(&mut r)),
            (np_vec(&mut r), np_vec(&mut r), np_vec(&mut r)),
        ] {
            let lhs = p.pmul(&q).unwrap().pmul(&s).unwrap();
            let rhs = p.pmul(&q.pmul(&s).unwrap()).unwrap();
            t.exact(same_vec(&lhs, &rhs));
        }
    }
    t.exact_report()
}

fn da_mul_distributive() -> (bool, String) {
    let mut r = sampling::rng(416);
    let mut t = Tally::new();
    for _ in 0..100 {
        for (p, q, s) in [
            (n_vec(&mut r), n_vec(&mut r), n_vec(&mut r)),
            (np_vec(&mut r), np_vec(&mut r), np_vec(&mut r)),
        ] {
            let lhs = p.padd(&q).unwrap().pmul(&s).unwrap();
            let rhs = p.pmul(&s).unwrap().padd(&q.pmul(&s).unwrap()).unwrap();
            t.exact(same_vec(&lhs, &rhs));
        }
    }
    t.exact_report()
}

fn da_rotation_is_unit_mul() -> (bool, String) {
    let mut r = sampling::rng(417);
    let mut t = Tally::new();
    for _ in 0..120 {
        let dt = rat_in(&mut r, 5, 4);
        let (u, v) = (rat_in(&mut r, 6, 4), rat_in(&mut r, 6, 4));
        let q = parab_rotate_n(&dt, &HalfPlanePoint::new(u.clone(), v.clone()));
        let prod = PVec::from_arg_mod(Flavor::N, dt.clone(), rat(1, 1))
            .pmul(&PVec::affine(Flavor::N, u, v))
            .unwrap();
        t.exact(same_vec(&PVec::affine(Flavor::N, q.u, q.v), &prod));

        let (u, v) = np_affine(&mut r);
        if let Ok(q) = parab_rotate_nprime(&dt, &HalfPlanePoint::new(u.clone(), v.clone())) {
            let prod = PVec::from_arg_mod(Flavor::Nprime, dt.clone(), rat(1, 1))
                .pmul(&PVec::affine(Flavor::Nprime, u, v))
                .unwrap();
            t.exact(same_vec(&PVec::affine(Flavor::Nprime, q.u, q.v), &prod));
        }
    }
    t.exact_report()
}

// ---- induced ---------------------------------------------------------------

fn in_chi_multiplicative() -> (bool, String) {
    let mut r = sampling::rng(501);
    let mut exact = Tally::new();
    for _ in 0..80 {
        let tau = rat_in(&mut r, 6, 4);
        let (t1, t2) = (rat_in(&mut r, 6, 4), rat_in(&mut r, 6, 4));
        let h1 = subgroup_element(SubgroupKind::NPrime, &t1).unwrap();
        let h2 = subgroup_element(SubgroupKind::NPrime, &t2).unwrap();
        let h12 = h1.mul(&h2);

        let alg = CharacterSpec::Nprime { flavor: NprimeFlavor::ParabAlgebraic, tau: tau.clone() };
        let lhs = chi(&alg, &h12).unwrap();
        let rhs = chi(&alg, &h1).unwrap().mul(&chi(&alg, &h2).unwrap()).unwrap();
        exact.exact(lhs == rhs);

        // The geometric character composes under the exotic product.
        let geo = CharacterSpec::Nprime { flavor: NprimeFlavor::ParabGeometric, tau };
        let [c1, c2, c12] =
            [&h1, &h2, &h12].map(|h| chi(&geo, h).unwrap());
        let prod = PVec::affine(Flavor::N, c1.re, c1.im)
            .pmul(&PVec::affine(Flavor::N, c2.re, c2.im))
            .unwrap();
        exact.exact(same_vec(&prod, &PVec::affine(Flavor::N, c12.re, c12.im)));
    }
    let (ok_e, det_e) = exact.exact_report();

    let tol = 1e-12;
    let mut float = Tally::new();
    for _ in 0..150 {
        let tau: f64 = r.gen_range(-2.0..2.0);
        let (t1, t2): (f64, f64) = (r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0));
        let h1 = subgroup_element(SubgroupKind::NPrime, &t1).unwrap();
        let h2 = subgroup_element(SubgroupKind::NPrime, &t2).unwrap();
        let spec = CharacterSpec::Nprime { flavor: NprimeFlavor::Complex, tau };
        let lhs = chi(&spec, &h1.mul(&h2)).unwrap();
        let rhs = chi(&spec, &h1).unwrap().mul(&chi(&spec, &h2).unwrap()).unwrap();
        float.within(hnum_dev(&lhs, &rhs), tol);
    }
    let (ok_f, det_f) = float.tol_report(tol);
    (ok_e && ok_f, format!("parabolic flavors: {det_e}; complex: {det_f}"))
}

fn in_rep_composes() -> (bool, String) {
    let mut r = sampling::rng(502);
    let mut exact = Tally::new();
    for _ in 0..60 {
        let tau = rat_in(&mut r, 4, 3);
        let g1 = sampling::rational_sl2(&mut r);
        let g2 = sampling::rational_sl2(&mut r);
        let w = sampling::rational_point(&mut r);

        // Stay away from the poles of every Möbius map in the chain.
        let [a1, b1, c1, d1] = g1.inverse().mat().entries();
        let den1 = c1.clone() * w.u.clone() + d1;
        if den1.is_zero() {
            continue;
        }
        let w1 = HalfPlanePoint::new(
            (a1 * w.u.clone() + b1) / den1.clone(),
            w.v.clone() / (den1.clone() * den1),
        );
        let [_, _, c2, d2] = g2.inverse().mat().entries();
        if (c2 * w1.u.clone() + d2).is_zero() {
            continue;
        }
        let g12 = g1.mul(&g2);
        let [_, _, c12, d12] = g12.inverse().mat().entries();
        if (c12 * w.u.clone() + d12).is_zero() {
            continue;
        }

        let f: SampledFunction<Rat> = SampledFunction::new(Sigma::Parabolic, None, |w| {
            HNum::new(
                w.u.clone() * w.v.clone() + rat(2, 1),
                w.u.clone() - w.v.clone(),
                Sigma::Parabolic,
            )
        });
        let flavor = NprimeFlavor::ParabAlgebraic;
        let lhs = rep_nprime(flavor, &tau, &g12, &f, &w).unwrap();
        let tau2 = tau.clone();
        let g2c = g2.clone();
        let inner = SampledFunction::new(Sigma::Parabolic, None, move |p: &HalfPlanePoint<Rat>| {
            rep_nprime(flavor, &tau2, &g2c, &f, p).unwrap_or_else(|_| HNum::zero(Sigma::Parabolic))
        });
        let rhs = rep_nprime(flavor, &tau, &g1, &inner, &w).unwrap();
        exact.exact(lhs == rhs);
    }
    let (ok_e, det_e) = exact.exact_report();

    let tol = 1e-10;
    let mut float = Tally::new();
    for _ in 0..80 {
        let tau: f64 = r.gen_range(-1.5..1.5);
        let g1 = sampling::float_sl2(&mut r);
        let g2 = sampling::float_sl2(&mut r);
        let w = HalfPlanePoint::new(r.gen_range(-2.0..2.0), r.gen_range(0.2..3.0));

        let [a1, b1, c1, d1] = g1.inverse().mat().entries();
        let den1 = c1 * w.u + d1;
        if den1.abs() < 0.05 {
            continue;
        }
        let w1 = HalfPlanePoint::new((a1 * w.u + b1) / den1, w.v / (den1 * den1));
        let [_, _, c2, d2] = g2.inverse().mat().entries();
        if (c2 * w1.u + d2).abs() < 0.05 {
            continue;
        }
        let g12 = g1.mul(&g2);
        let [_, _, c12, d12] = g12.inverse().mat().entries();
        if (c12 * w.u + d12).abs() < 0.05 {
            continue;
        }

        let f: SampledFunction<f64> = SampledFunction::new(Sigma::Elliptic, None, |w| {
            HNum::new((0.7 * w.u).sin() + w.v, w.u - 0.3 * w.v, Sigma::Elliptic)
        });
        let flavor = NprimeFlavor::Complex;
        let lhs = rep_nprime(flavor, &tau, &g12, &f, &w).unwrap();
        let inner = rep_nprime_fn(flavor, tau, &g2, &f).unwrap();
        let rhs = rep_nprime(flavor, &tau, &g1, &inner, &w).unwrap();
        float.within(hnum_dev(&lhs, &rhs), tol);
    }
    let (ok_f, det_f) = float.tol_report(tol);
    (ok_e && ok_f, format!("parabolic exact: {det_e}; complex: {det_f}"))
}

fn in_k_eigenfunction() -> (bool, String) {
    let mut r = sampling::rng(503);
    let tol = 1e-10;
    let mut tally = Tally::new();
    for k in [1_i64, 2, 5] {
        let f = f_k(k).unwrap();
        for j in 0..16 {
            let t = -std::f64::consts::PI + (j as f64 + 0.5) * std::f64::consts::TAU / 16.0;
            let h = subgroup_element(SubgroupKind::K, &t).unwrap();
            let eigen = chi(&CharacterSpec::K { k }, &h.inverse()).unwrap();
            for _ in 0..4 {
                let w = HalfPlanePoint::new(r.gen_range(-2.0..2.0), r.gen_range(0.3..3.0));
                let lhs = rep_k(k, &h, &f, &w).unwrap();
                let rhs = eigen.mul(&f.value_at(&w)).unwrap();
                tally.within(hnum_dev(&lhs, &rhs), tol);
            }
        }
    }
    tally.tol_report(tol)
}

fn in_multiplier_unit() -> (bool, String) {
    let mut r = sampling::rng(504);
    let tol = 1e-12;
    let mut float = Tally::new();
    for k in 1..=6_i64 {
        for j in 0..13 {
            let t = -3.1 + (j as f64) * 6.2 / 12.0;
            let h = subgroup_element(SubgroupKind::K, &t).unwrap();
            let c = chi(&CharacterSpec::K { k }, &h).unwrap();
            float.within((c.modulus_sq() - 1.0).abs(), tol);
        }
    }
    let (ok_f, det_f) = float.tol_report(tol);

    let mut exact = Tally::new();
    for _ in 0..60 {
        let tau = rat_in(&mut r, 6, 4);
        let t = rat_in(&mut r, 6, 4);
        let spec = CharacterSpec::Nprime { flavor: NprimeFlavor::ParabGeometric, tau };
        let c = chi(&spec, &subgroup_element(SubgroupKind::NPrime, &t).unwrap()).unwrap();
        exact.exact(PVec::affine(Flavor::N, c.re, c.im).norm().unwrap() == rat(1, 1));
    }
    let (ok_e, det_e) = exact.exact_report();
    (ok_f && ok_e, format!("rotation multiplier: {det_f}; geometric multiplier exact: {det_e}"))
}

// ---- ladder ----------------------------------------------------------------

fn la_eigenvalue_squares() -> (bool, String) {
    let mut t = Tally::new();
    let z_gen = [rat(0, 1), rat(0, 1), rat(1, 1)];
    let pairs = solve_ladder(&z_gen, Sigma::Elliptic).unwrap();
    t.exact(pairs.len() == 2);
    for (lambda, _) in &pairs {
        t.exact(lambda.mul(lambda).unwrap() == HNum::from_real(rat(-4, 1), Sigma::Elliptic));
    }

    let b_gen = [rat(0, 1), rat(1, 1), rat(0, 1)];
    let pairs = solve_ladder(&b_gen, Sigma::Hyperbolic).unwrap();
    t.exact(pairs.len() == 4);
    for (lambda, _) in &pairs {
        t.exact(lambda.mul(lambda).unwrap() == HNum::from_real(rat(1, 1), Sigma::Hyperbolic));
    }

    let shear = [rat(0, 1), rat(-1, 1), rat(1, 2)];
    let pairs = solve_ladder(&shear, Sigma::Parabolic).unwrap();
    t.exact(pairs.len() == 2);
    for (lambda, _) in &pairs {
        t.exact(lambda.mul(lambda).unwrap().is_zero() && !lambda.is_zero());
    }
    t.exact_report()
}

fn la_eigen_relation() -> (bool, String) {
    let mut tally = Tally::new();
    let bases: [([i64; 6], &[Sigma]); 5] = [
        ([0, 1, 1, 1, 0, 1], &SIGMAS),
        ([3, 1, 4, 1, 0, 1], &SIGMAS),
        ([1, 1, 2, 1, 1, 1], &SIGMAS),
        ([0, 1, 0, 1, 1, 1], &[Sigma::Elliptic]),
        ([0, 1, -1, 1, 1, 2], &[Sigma::Parabolic]),
    ];
    let scales = [rat(1, 1), rat(2, 3), rat(-5, 4), rat(3, 1)];
    for (nums, sigmas) in bases {
        let base = [rat(nums[0], nums[1]), rat(nums[2], nums[3]), rat(nums[4], nums[5])];
        for s in &scales {
            let x = [
                base[0].clone() * s.clone(),
                base[1].clone() * s.clone(),
                base[2].clone() * s.clone(),
            ];
            let theta = x[0].clone() * x[0].clone() + x[1].clone() * x[1].clone()
                - rat(4, 1) * x[2].clone() * x[2].clone();
            for &sigma in sigmas {
                let adx = ad(&x);
                for (lambda, l) in solve_ladder(&x, sigma).unwrap() {
                    let moved = adx.apply(&l).coeffs();
                    let scaled = l.scale(&lambda).unwrap().coeffs();
                    tally.exact(moved == scaled);
                    tally.exact(
                        lambda.mul(&lambda).unwrap() == HNum::from_real(theta.clone(), sigma),
                    );
                }
            }
        }
    }
    tally.exact_report()
}

fn la_pair_counts() -> (bool, String) {
    let mut t = Tally::new();
    for s in [rat(1, 1), rat(2, 1), rat(-3, 2)] {
        let x = [rat(0, 1), s.clone(), rat(0, 1)];
        let split = solve_ladder(&x, Sigma::Hyperbolic).unwrap();
        t.exact(split.len() == 4);
        let complex = solve_ladder(&x, Sigma::Elliptic).unwrap();
        t.exact(complex.len() == 2);
        // Each eigenvalue comes with its negative.
        for (lambda, _) in &split {
            t.exact(split.iter().any(|(m, _)| *m == lambda.neg()));
        }
        // The extra split pairs are the ±h multiples, purely imaginary.
        t.exact(split.iter().filter(|(m, _)| m.re.is_zero() && !m.im.is_zero()).count() == 2);
        t.exact(complex.iter().all(|(m, _)| m.im.is_zero()));
    }
    t.exact_report()
}

fn la_killing_partner() -> (bool, String) {
    let mut r = sampling::rng(601);
    let mut t = Tally::new();
    let ad_a = ad(&[rat(1, 1), rat(0, 1), rat(0, 1)]);
    for _ in 0..100 {
        let x = [rat(0, 1), rat_in(&mut r, 6, 4), rat_in(&mut r, 6, 4)];
        if x[1].is_zero() && x[2].is_zero() {
            continue;
        }
        let y = find_y(&x).unwrap();
        t.exact(ad_a.apply_real(&y) == x);
        t.exact(killing_form(&x, &y).is_zero());

        // Linearity in the generator pins the partner up to the same scale.
        let s = nonzero_rat(&mut r, 5, 3);
        let xs = [rat(0, 1), x[1].clone() * s.clone(), x[2].clone() * s.clone()];
        let ys = find_y(&xs).unwrap();
        t.exact(ys == [rat(0, 1), y[1].clone() * s.clone(), y[2].clone() * s]);

        // The homogeneous solution space is trivial on span{B, Z}.
        let k = [rat(0, 1), nonzero_rat(&mut r, 5, 3), nonzero_rat(&mut r, 5, 3)];
        t.exact(!ad_a.apply_real(&k).iter().all(Rat::is_zero));
    }
    // Partners with a component along the diagonal generator are refused.
    t.exact(find_y(&[rat(1, 1), rat(2, 1), rat(0, 1)]).is_err());
    t.exact_report()
}

// ---- orbit -----------------------------------------------------------------

fn or_samples_on_curve() -> (bool, String) {
    let tol = 1e-9;
    let mut t = Tally::new();
    for (curves, geodesic) in [
        (figure_rotations(), false),
        (figure_geometric(false), false),
        (figure_geometric(true), true),
    ] {
        for c in &curves {
            t.within(c.max_residual(geodesic), tol);
        }
    }
    t.tol_report(tol)
}

fn rotated_residual(c: &OrbitCurve, x: f64, y: f64, dt: f64) -> Option<f64> {
    use crate::orbitgen::CaseLabel;
    match c.case_label {
        CaseLabel::E | CaseLabel::P0 | CaseLabel::H => {
            let sigma = match c.case_label {
                CaseLabel::E => Sigma::Elliptic,
                CaseLabel::P0 => Sigma::Parabolic,
                _ => Sigma::Hyperbolic,
            };
            let w = HNum::new(x, y, sigma).mul(&HNum::exp_unit(sigma, &dt).unwrap()).unwrap();
            Some(c.defining_residual(w.re, w.im, false))
        }
        CaseLabel::P => {
            let q = parab_rotate_n(&dt, &HalfPlanePoint::new(x, y));
            Some(c.defining_residual(q.u, q.v, false))
        }
        CaseLabel::Pprime => {
            if (1.0 + dt * x).abs() < 0.05 {
                return None;
            }
            let q = parab_rotate_nprime(&dt, &HalfPlanePoint::new(x, y)).ok()?;
            Some(c.defining_residual(q.u, q.v, false))
        }
    }
}

fn or_rotation_invariance() -> (bool, String) {
    let tol = 1e-9;
    let mut t = Tally::new();
    let mut curves = figure_rotations();
    curves.extend(figure_geometric(false));
    for c in &curves {
        if c.kind == CurveKind::Spoke {
            continue;
        }
        for &(x, y) in c.samples.iter().step_by(16) {
            for dt in [0.3, -0.7] {
                if let Some(residual) = rotated_residual(c, x, y, dt) {
                    t.within(residual, tol);
                }
            }
        }
    }
    t.tol_report(tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_registered_check_passes() {
        let reports = run_all();
        let mut failed = Vec::new();
        for rep in &reports {
            if !rep.passed {
                failed.push(rep.to_string());
            }
        }
        assert!(failed.is_empty(), "failing checks:\n{}", failed.join("\n"));
    }

    #[test]
    fn the_registry_covers_every_suite() {
        let reports = run_all();
        for suite in Suite::ALL {
            assert!(reports.iter().any(|r| r.suite == suite), "no checks for {suite}");
        }
        assert_eq!(reports.len(), 41);
    }

    #[test]
    fn suite_selection_filters_the_registry() {
        let reports = run_suites(&[Suite::Dualalg]);
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.suite == Suite::Dualalg));
    }

    #[test]
    fn labels_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(Suite::from_label(suite.label()), Some(suite));
        }
        assert_eq!(Suite::from_label("nonsense"), None);
    }

    #[test]
    fn reports_are_deterministic() {
        let a: Vec<String> = run_all().iter().map(|r| r.to_string()).collect();
        let b: Vec<String> = run_all().iter().map(|r| r.to_string()).collect();
        assert_eq!(a, b);
    }
}
