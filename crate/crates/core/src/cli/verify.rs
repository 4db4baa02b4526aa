//! The acceptance suite behind `verify --suite=...`.
//!
//! Every comparison is exact. Randomized parts draw from a ChaCha8 stream
//! seeded with [`SEED`].

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    batch_lines, evaluate, parse, run_batch, Command, Config, DiamondSource, Expr, Format, Suite, Target,
};
use crate::bsato::{
    alpha_tilde_int, bp_reduced_roots, check_cor_bs, tuple_ts_roots, BsInequalityInput, BS_HRH,
};
use crate::determinantal::{closed_forms, det_report, groth_vector, DetCase, DetRegime, DetSpec};
use crate::exactnum::{qbinomial, Extended, Rational};
use crate::families::{cone_hrh, toric_hrh, HodgeDiamond, ToricCone};
use crate::hrh::HrhValue;
use crate::oracle::{bp_spectrum_brute_force, qbinomial_pascal};
use crate::spectrum::{
    bp_spectrum, bp_spectrum_capped, check_duality, hrh_from_milnor, hrh_isolated_hypersurface, milnor_s,
    sp_min_int, BpSpec,
};

pub const SEED: u64 = 0x5eed_2024;

/// Cap used inside the suite. Criterion 2 needs `μ = 4^10` for `bp(5 x 10)`,
/// which the spectrum computes by convolution rather than enumeration.
pub const SUITE_MAX_MU: u64 = 1 << 24;

/// Largest `μ` for random BP specs in the property suite.
pub const RANDOM_MAX_MU: u64 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Collects failures for one criterion.
struct Tally {
    failures: Vec<String>,
    checked: usize,
}

impl Tally {
    fn new() -> Self {
        Tally { failures: Vec::new(), checked: 0 }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if ok {
            return;
        }
        match self.failures.len() {
            0..=4 => self.failures.push(what()),
            5 => self.failures.push("...".into()),
            _ => {}
        }
    }

    fn finish(self, id: u8, name: &'static str) -> CriterionResult {
        let passed = self.failures.is_empty();
        let detail = if passed {
            format!("{} checks", self.checked)
        } else {
            self.failures.join("; ")
        };
        CriterionResult { id, name, passed, detail }
    }
}

fn bp(e: Vec<u32>) -> BpSpec {
    BpSpec::new(e).expect("suite uses valid exponents")
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

fn hrh_of(spec: &BpSpec) -> Option<HrhValue> {
    bp_spectrum_capped(spec, SUITE_MAX_MU).ok().map(|sp| hrh_isolated_hypersurface(&sp))
}

fn quadric_family() -> CriterionResult {
    let mut t = Tally::new();
    for m in 2..=8i64 {
        let spec = bp(vec![2; 2 * m as usize]);
        let hrh = hrh_of(&spec);
        t.expect(hrh == Some(HrhValue::exact(m - 2)), || format!("m={m}: HRH {hrh:?}"));
        match bp_reduced_roots(&spec) {
            Ok(rs) => {
                let want = [Rational::one(), Rational::from(m)].into_iter().collect();
                t.expect(rs.full_set() == want, || format!("m={m}: roots {:?}", rs.full_set()));
            }
            Err(e) => t.expect(false, || format!("m={m}: {e}")),
        }
    }
    t.finish(1, "quadric family: HRH = m - 2, b-roots {1, m}")
}

fn equal_exponent_family() -> CriterionResult {
    let mut t = Tally::new();
    for m in 3..=5u32 {
        let spec = bp(vec![m; 2 * m as usize]);
        match bp_spectrum_capped(&spec, SUITE_MAX_MU) {
            Ok(sp) => {
                let smin = sp_min_int(&sp);
                t.expect(smin == Extended::Finite(Rational::from(2)), || format!("m={m}: Sp_min {smin}"));
                let hrh = hrh_isolated_hypersurface(&sp);
                t.expect(hrh == HrhValue::exact(0), || format!("m={m}: HRH {hrh}"));
            }
            Err(e) => t.expect(false, || format!("m={m}: {e}")),
        }
    }
    t.finish(2, "bp(m x 2m): Sp_min_Z = 2, HRH = 0")
}

fn torelli() -> CriterionResult {
    let mut t = Tally::new();
    let q = bp(vec![2, 2, 2]);
    match bp_reduced_roots(&q) {
        Ok(rs) => {
            let tuple = tuple_ts_roots(&rs, &rs);
            let want = [Rational::from(2), rat(5, 2), Rational::from(3)].into_iter().collect();
            t.expect(tuple.full_set() == want, || format!("roots {:?}", tuple.full_set()));
            let alpha = alpha_tilde_int(&tuple);
            t.expect(alpha == Extended::Finite(Rational::from(3)), || format!("alpha_tilde {alpha}"));
            let factor_hrh = hrh_of(&q);
            t.expect(factor_hrh == Some(HrhValue::infinite()), || format!("factor HRH {factor_hrh:?}"));
            let rep = check_cor_bs(&BsInequalityInput {
                alpha_z: alpha,
                r: tuple.r(),
                hrh: HrhValue::infinite(),
                sp_min: None,
                hodge_index: None,
            });
            t.expect(rep.all_hold() && rep.get(BS_HRH).is_some(), || format!("inequalities {rep:?}"));
        }
        Err(e) => t.expect(false, || e.to_string()),
    }
    t.finish(3, "tuple of two 3-variable quadrics: roots {2, 5/2, 3}, alpha_tilde_Z = 3")
}

fn ts_failure() -> CriterionResult {
    let mut t = Tally::new();
    for n in [3usize, 5, 7] {
        for m in [3usize, 5, 7] {
            t.expect(hrh_of(&bp(vec![2; n])) == Some(HrhValue::infinite()), || format!("n={n} not RHM"));
            let sum = match bp_spectrum(&bp(vec![2; n + m])) {
                Ok(sp) => sp_min_int(&sp),
                Err(_) => Extended::PosInf,
            };
            let want = Extended::Finite(rat((n + m) as i64, 2));
            t.expect(sum == want, || format!("n={n}, m={m}: Sp_min {sum}"));
        }
    }
    t.finish(4, "Thom-Sebastiani of RHM quadrics is not RHM")
}

fn det_grid() -> CriterionResult {
    let mut t = Tally::new();
    for spec in crate::determinantal::spec_grid(8) {
        match spec.regime() {
            DetRegime::Smooth => continue,
            DetRegime::SymmetricRankOne => {
                let ok = det_report(&spec).is_ok_and(|r| r.is_rhm && r.hrh.is_rhm());
                t.expect(ok, || format!("{spec}: rank-one symmetric not RHM"));
                continue;
            }
            DetRegime::Singular => {}
        }
        let (Ok(cf), Ok(gv), Ok(rep)) = (closed_forms(&spec), groth_vector(&spec), det_report(&spec)) else {
            t.expect(false, || format!("{spec}: evaluation failed"));
            continue;
        };
        t.expect(gv.min_exponent() == cf.codim, || format!("{spec}: min exponent"));
        t.expect(gv.all_nonnegative(), || format!("{spec}: negative coefficient"));
        t.expect(rep.lcdef_gen == cf.lcdef_gen, || format!("{spec}: lcdef_gen"));
        t.expect(rep.lcd == cf.lcd && gv.max_exponent() == cf.lcd, || format!("{spec}: lcd"));
        t.expect(rep.lcdef - rep.lcdef_gen == cf.lcdef_minus_gen, || format!("{spec}: lcdef difference"));
        t.expect(rep.ic_equals_h == cf.ic_equals_h, || format!("{spec}: IC = H^c"));
        t.expect(rep.nrs_codim == Some(cf.nrs_codim), || format!("{spec}: nrs codim"));
        let slack = rep.pp_bound_slack();
        t.expect(slack.is_some_and(|s| s >= 0), || format!("{spec}: pp bound slack {slack:?}"));
        t.expect(!rep.is_rhm, || format!("{spec}: reported RHM"));
        if matches!(spec.case(), DetCase::Generic { .. }) {
            t.expect(slack == Some(0), || format!("{spec}: generic pp bound not an equality"));
            t.expect(rep.hrh == HrhValue::exact(0), || format!("{spec}: generic HRH {}", rep.hrh));
        } else {
            t.expect(rep.hrh == HrhValue::interval(0, Extended::Finite(1)), || format!("{spec}: HRH {}", rep.hrh));
        }
    }
    t.finish(5, "determinantal grid up to size 8")
}

fn pfaffian() -> CriterionResult {
    let mut t = Tally::new();
    let spec = DetSpec::new(DetCase::SkewEven { m: 2 }, 1).expect("in range");
    match det_report(&spec) {
        Ok(rep) => {
            t.expect(rep.hrh == HrhValue::interval(0, Extended::Finite(1)), || format!("det HRH {}", rep.hrh));
            let quadric = hrh_of(&bp(vec![2; 6]));
            t.expect(quadric == Some(HrhValue::exact(1)), || format!("quadric HRH {quadric:?}"));
            let one = Extended::Finite(1);
            t.expect(rep.hrh.contains(&one) && rep.hrh.upper() == one, || "spectral HRH outside bracket".into());
            let at_one = rep.nrs_codim.map(|c| c - (rep.lcdef_gen + 2 + 3));
            t.expect(at_one == Some(0), || format!("pp bound slack at HRH = 1: {at_one:?}"));
        }
        Err(e) => t.expect(false, || e.to_string()),
    }
    t.finish(6, "Pfaffian of 4x4 skew matrices vs the 6-variable quadric")
}

fn cones() -> CriterionResult {
    let mut t = Tally::new();
    let p2 = cone_hrh(&HodgeDiamond::projective_space(2));
    t.expect(p2.as_ref().is_ok_and(HrhValue::is_rhm), || format!("P^2 cone {p2:?}"));
    let godeaux = HodgeDiamond::from_entries(2, &[(0, 0, 1), (1, 1, 9), (0, 1, 0), (0, 2, 0)]).and_then(|d| cone_hrh(&d));
    t.expect(godeaux.as_ref().is_ok_and(|h| *h == HrhValue::exact(0)), || format!("Godeaux cone {godeaux:?}"));
    t.finish(7, "cones over P^2 and a Godeaux surface")
}

fn toric_square() -> CriterionResult {
    let mut t = Tally::new();
    let square = ToricCone::new(vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]).map(|c| toric_hrh(&c));
    let quadric = hrh_of(&bp(vec![2, 2, 2, 2]));
    t.expect(square.as_ref().is_ok_and(|h| *h == HrhValue::exact(0)), || format!("square cone {square:?}"));
    t.expect(square.ok() == quadric, || format!("quadric {quadric:?}"));
    t.finish(8, "cone over a square agrees with xy = zw")
}

/// Random BP spec with `μ <= max_mu`.
pub fn random_bp(rng: &mut ChaCha8Rng, max_vars: usize, max_exp: u32, max_mu: u64) -> BpSpec {
    loop {
        let n = rng.gen_range(1..=max_vars);
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(2..=max_exp)).collect();
        let spec = bp(e);
        if spec.milnor_u64().is_some_and(|mu| mu <= max_mu) {
            return spec;
        }
    }
}

fn binomial(a: i64, b: i64) -> BigInt {
    (0..b).fold(BigInt::from(1), |acc, i| acc * BigInt::from(a - i) / BigInt::from(i + 1))
}

fn properties() -> CriterionResult {
    let mut t = Tally::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..50 {
        let spec = random_bp(&mut rng, 5, 9, RANDOM_MAX_MU);
        let Ok(sp) = bp_spectrum(&spec) else {
            t.expect(false, || format!("{spec}: spectrum failed"));
            continue;
        };
        let mu = spec.milnor_u64().expect("bounded");
        t.expect(sp.values().total() == mu, || format!("{spec}: count"));
        let n = Rational::from(spec.num_vars() as i64);
        let symmetric = sp.values().iter().all(|(a, m)| sp.values().multiplicity(&(&n - a)) == m);
        t.expect(symmetric, || format!("{spec}: symmetry about n/2"));
        t.expect(check_duality(&sp).holds, || format!("{spec}: duality"));
        let e = spec.exponents();
        let cut = rng.gen_range(0..=e.len());
        let split = if cut == 0 || cut == e.len() {
            sp.clone()
        } else {
            let a = bp_spectrum(&bp(e[..cut].to_vec())).expect("smaller mu");
            let b = bp_spectrum(&bp(e[cut..].to_vec())).expect("smaller mu");
            a.thom_sebastiani(&b)
        };
        let oracle = bp_spectrum_brute_force(&spec, RANDOM_MAX_MU);
        t.expect(oracle.as_ref().is_ok_and(|o| o == split.values()), || format!("{spec}: TS vs enumeration"));
        let via_milnor = hrh_from_milnor(&milnor_s(&sp));
        t.expect(via_milnor == hrh_isolated_hypersurface(&sp), || format!("{spec}: Milnor route {via_milnor}"));
    }
    for a in 0..=12i64 {
        for b in 0..=a {
            let (Ok(p1), Ok(p4)) = (qbinomial(a, b, 1), qbinomial(a, b, -4)) else {
                t.expect(false, || format!("q-binomial ({a},{b}) failed"));
                continue;
            };
            t.expect(p1.is_palindromic(), || format!("({a},{b}) not palindromic"));
            t.expect(p1.eval_at_one() == binomial(a, b), || format!("({a},{b}) at q=1"));
            let low = -4 * b * (a - b);
            t.expect(
                p4.min_degree().ok() == Some(low) && p4.coeff(low) == BigInt::from(1),
                || format!("({a},{b}) lowest term"),
            );
            t.expect(qbinomial_pascal(a, b, 1).ok() == Some(p1), || format!("({a},{b}) vs Pascal"));
        }
    }
    t.finish(9, "randomized spectrum and q-binomial properties")
}

fn random_expr(rng: &mut ChaCha8Rng, depth: u32) -> Expr {
    let leaf = depth == 0 || rng.gen_bool(0.6);
    if leaf {
        let n = rng.gen_range(1..=3);
        return Expr::Bp(bp((0..n).map(|_| rng.gen_range(2..=5)).collect()));
    }
    let a = Box::new(random_expr(rng, depth - 1));
    let b = Box::new(random_expr(rng, depth - 1));
    if rng.gen_bool(0.5) {
        Expr::Ts(a, b)
    } else {
        Expr::Tuple(a, b)
    }
}

fn random_det(rng: &mut ChaCha8Rng) -> DetSpec {
    loop {
        let case = match rng.gen_range(0..4) {
            0 => {
                let n = rng.gen_range(2..=6);
                DetCase::Generic { m: rng.gen_range(n..=7), n }
            }
            1 => DetCase::SkewOdd { m: rng.gen_range(1..=5) },
            2 => DetCase::SkewEven { m: rng.gen_range(1..=5) },
            _ => DetCase::Symmetric { n: rng.gen_range(2..=7) },
        };
        if let Ok(spec) = DetSpec::new(case, rng.gen_range(0..=7)) {
            return spec;
        }
    }
}

/// Random command; `with_verify` allows the `verify` verb.
pub fn random_command(rng: &mut ChaCha8Rng, with_verify: bool) -> Command {
    let verbs = if with_verify { 8 } else { 7 };
    let target = match rng.gen_range(0..verbs) {
        0 => Target::Spectrum(random_expr(rng, 2)),
        1 => Target::Hrh(random_expr(rng, 2)),
        2 => Target::Bsato(random_expr(rng, 2)),
        3 => Target::Det(random_det(rng)),
        4 => {
            if rng.gen_bool(0.8) {
                let n = rng.gen_range(1..=4);
                let k = rng.gen_range(0..=4);
                let entries = (0..k)
                    .map(|_| (rng.gen_range(0..=n as i64), rng.gen_range(0..=n as i64), rng.gen_range(0..=3)))
                    .collect();
                Target::Cone(DiamondSource::Inline { n, entries })
            } else {
                Target::Cone(DiamondSource::File(format!("data/diamond_{}.json", rng.gen_range(0..100))))
            }
        }
        5 => {
            let dim = rng.gen_range(1..=3);
            let k = rng.gen_range(1..=4);
            Target::Toric((0..k).map(|_| (0..dim).map(|_| rng.gen_range(-3..=3)).collect()).collect())
        }
        6 => Target::Secant { is_p1: rng.gen_bool(0.5), vanishing: rng.gen_bool(0.5) },
        _ => Target::Verify([Suite::All, Suite::Spectrum, Suite::Det, Suite::Families][rng.gen_range(0..4)]),
    };
    let format = [None, Some(Format::Text), Some(Format::Json)][rng.gen_range(0..3)];
    Command { target, format }
}

fn cli(cfg: &Config) -> CriterionResult {
    let mut t = Tally::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xc11);
    let mut rendered = Vec::new();
    for _ in 0..200 {
        let cmd = random_command(&mut rng, true);
        let text = cmd.to_string();
        let back = parse(&text);
        t.expect(back.as_ref() == Ok(&cmd), || format!("round trip of {text:?}: {back:?}"));
        if !matches!(cmd.target, Target::Verify(_)) {
            rendered.push(text);
        }
    }
    let batch_text = rendered.join("\n");
    let lines = batch_lines(&batch_text);
    let seq = run_batch(&lines, Format::Json, cfg, false);
    let par = run_batch(&lines, Format::Json, cfg, true);
    t.expect(seq == par, || "batch output differs from sequential".into());
    let one_by_one: Vec<_> = lines.iter().map(|l| evaluate(l, Format::Json, cfg)).collect();
    t.expect(one_by_one == par, || "batch output differs from single runs".into());
    for (input, code) in [
        ("hrh bp(1,2)", 2),
        ("det generic m=3 n=4 p=1", 2),
        ("spectrum tuple(bp(2,2),bp(2,2))", 2),
    ] {
        let got = evaluate(input, Format::Text, cfg).exit_code;
        t.expect(got == code, || format!("{input:?}: exit {got}, expected {code}"));
    }
    t.finish(10, "command round trip, batch identity, exit codes")
}

fn criterion_ids(suite: Suite) -> &'static [u8] {
    match suite {
        Suite::Spectrum => &[1, 2, 3, 4, 9],
        Suite::Det => &[5, 6],
        Suite::Families => &[7, 8],
        Suite::All => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
    }
}

pub fn run_criterion(id: u8, cfg: &Config) -> CriterionResult {
    match id {
        1 => quadric_family(),
        2 => equal_exponent_family(),
        3 => torelli(),
        4 => ts_failure(),
        5 => det_grid(),
        6 => pfaffian(),
        7 => cones(),
        8 => toric_square(),
        9 => properties(),
        10 => cli(cfg),
        _ => panic!("no criterion {id}"),
    }
}

/// Runs the criteria of `suite` in order. Spectrum criteria pin their own
/// cap; `cfg` applies to the commands evaluated by criterion 10.
pub fn run_suite(suite: Suite, cfg: &Config) -> Vec<CriterionResult> {
    criterion_ids(suite).iter().map(|&id| run_criterion(id, cfg)).collect()
}
