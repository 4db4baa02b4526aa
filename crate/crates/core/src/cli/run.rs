use num_bigint::BigUint;
use serde_json::Value;

use super::report::Report;
use super::{verify, Command, Config, DiamondSource, Expr, Target};
use crate::bsato::{
    alpha_tilde_int, check_cor_bs, ext_json, roots_from_spectrum, tuple_ts_roots, BsInequalityInput, RootSet,
};
use crate::determinantal::{det_report, groth_vector, DetRegime};
use crate::error::{HrhError, Result};
use crate::exactnum::{Extended, Rational};
use crate::families::{cone_hrh, cone_lcdef, secant_hrh, toric_hrh, HodgeDiamond, ToricCone};
use crate::hrh::HrhValue;
use crate::oracle::bp_spectrum_brute_force;
use crate::spectrum::{
    bp_spectrum_capped, check_duality, hrh_from_milnor, hrh_isolated_hypersurface, milnor_s, sp_min_int, BpSpec,
    SpectrumData,
};

const SRC_SPMIN: &str = "Cor: HRH = Sp_min,Z - 2";
const SRC_MILNOR: &str = "Prop: HRH >= k iff s_(d-p) = s_p for all p <= k";
const SRC_DUALITY: &str = "Prop: m_alpha = m_(d+1-alpha) for non-integral alpha";
const SRC_TS: &str = "Thom-Sebastiani: spectra combine by sumset";
const SRC_TUPLE_TS: &str = "Thom-Sebastiani for tuples: b-function roots combine by sumset";
const SRC_BS: &str = "Cor: alpha_tilde_Z - r - 1 <= HRH for rational singularities";
const SRC_PRODUCT: &str = "products of rational homology manifolds";
const SRC_DICHOTOMY: &str = "finiteness dichotomy: HRH = +inf or 2 HRH <= dim - 3";
const SRC_CODIM: &str = "Cor: codimension of rank loci";
const SRC_LCDEF_GEN: &str = "Prop: lcdef_gen = top degree of the witness class - codim";
const SRC_LCD: &str = "lcd = top degree of H_p(q)";
const SRC_PP: &str = "Thm: lcdef_gen + 2 HRH + 3 <= codim of the non-RS locus";
const SRC_CONE: &str = "Prop: cone criterion from Hodge numbers of the base";
const SRC_CONE_LCDEF: &str = "Rmk: cone lcdef from Lefschetz isomorphisms";
const SRC_TORIC: &str = "toric: +inf iff simplicial, else 0";
const SRC_SECANT: &str = "secant varieties: +inf for P^1, 0 if H^i(O_X) = 0 for i >= 1, else -1";

fn hrh_json(h: &HrhValue) -> Value {
    serde_json::to_value(h).expect("HRH serializes")
}

/// Brieskorn–Pham summands of a hypersurface expression.
fn hypersurface_parts(expr: &Expr) -> Result<Vec<BpSpec>> {
    match expr {
        Expr::Bp(s) => Ok(vec![s.clone()]),
        Expr::Ts(a, b) => {
            let mut out = hypersurface_parts(a)?;
            out.extend(hypersurface_parts(b)?);
            Ok(out)
        }
        Expr::Tuple(..) => Err(HrhError::domain(format!(
            "{expr} is a tuple, not a hypersurface (ts() of tuples and spectra of tuples are not supported)"
        ))),
    }
}

/// Factors of a tuple, each a hypersurface given by its summands.
fn tuple_factors(expr: &Expr) -> Result<Vec<Vec<BpSpec>>> {
    match expr {
        Expr::Tuple(a, b) => {
            let mut out = tuple_factors(a)?;
            out.extend(tuple_factors(b)?);
            Ok(out)
        }
        _ => Ok(vec![hypersurface_parts(expr)?]),
    }
}

fn concat(parts: &[BpSpec]) -> BpSpec {
    parts[1..].iter().fold(parts[0].clone(), |acc, p| acc.concat(p))
}

struct Hypersurface {
    whole: BpSpec,
    spectrum: SpectrumData,
    parts: usize,
}

/// Spectrum of `f_1 + ... + f_k` as the iterated sumset of the summands' spectra.
fn hypersurface(parts: &[BpSpec], cfg: &Config) -> Result<Hypersurface> {
    let whole = concat(parts);
    if whole.milnor_number() > BigUint::from(cfg.max_mu) {
        return Err(HrhError::domain(format!(
            "Milnor number {} of {whole} exceeds the enumeration cap {} (HRHLAB_MAX_MU)",
            whole.milnor_number(),
            cfg.max_mu
        )));
    }
    let mut spectrum = bp_spectrum_capped(&parts[0], cfg.max_mu)?;
    for p in &parts[1..] {
        spectrum = spectrum.thom_sebastiani(&bp_spectrum_capped(p, cfg.max_mu)?);
    }
    Ok(Hypersurface { whole, spectrum, parts: parts.len() })
}

fn spectrum_invariants(rep: &mut Report, h: &Hypersurface) {
    let sp = &h.spectrum;
    rep.set("n", sp.ambient_vars());
    rep.set("dim", sp.dim());
    rep.set("mu", sp.values().total());
    rep.set("Sp_min_Z", ext_json(&sp_min_int(sp)));
    rep.set("milnor_s", milnor_s(sp).s().to_vec());
}

/// Largest `μ` for which the brute-force oracle is rerun inside a report.
const ORACLE_MU: u64 = 20_000;

fn spectrum_checks(rep: &mut Report, h: &Hypersurface) {
    let sp = &h.spectrum;
    let dual = check_duality(sp);
    let detail = if dual.holds {
        String::new()
    } else {
        format!("violations at {:?}", dual.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>())
    };
    rep.check("duality", "m_alpha = m_(d+1-alpha) for non-integral alpha", SRC_DUALITY, dual.holds, detail);
    let mu = h.whole.milnor_number();
    rep.check(
        "milnor_number",
        "total multiplicity = prod (a_i - 1)",
        "Milnor number of a Brieskorn-Pham polynomial",
        BigUint::from(sp.values().total()) == mu,
        format!("mu = {mu}"),
    );
    if h.parts > 1 {
        if let Ok(direct) = bp_spectrum_brute_force(&h.whole, ORACLE_MU) {
            rep.check(
                "ts_sumset",
                "sumset of summand spectra = direct enumeration",
                SRC_TS,
                &direct == sp.values(),
                String::new(),
            );
        }
    }
}

fn run_spectrum(rep: &mut Report, expr: &Expr, cfg: &Config) -> Result<()> {
    let h = hypersurface(&hypersurface_parts(expr)?, cfg)?;
    spectrum_invariants(rep, &h);
    rep.set("spectrum", h.spectrum.to_json()["values"].clone());
    spectrum_checks(rep, &h);
    rep.verdict = format!(
        "spectrum of {expr}: mu = {}, Sp_min_Z = {}",
        h.spectrum.values().total(),
        sp_min_int(&h.spectrum)
    );
    Ok(())
}

fn hrh_verdict(h: &HrhValue) -> String {
    if h.is_rhm() {
        "rational homology manifold (HRH = inf)".to_string()
    } else {
        match h {
            HrhValue::LowerBound(lo) => format!("HRH >= {lo}"),
            HrhValue::Interval { lo, hi } => format!("HRH in [{lo}, {hi}]"),
            HrhValue::Exact(k) => format!("HRH = {k}"),
        }
    }
}

/// HRH of an isolated BP hypersurface, cross-checked against the Milnor-fiber route.
fn hypersurface_hrh(rep: &mut Report, h: &Hypersurface) -> HrhValue {
    let hrh = hrh_isolated_hypersurface(&h.spectrum);
    let via_milnor = hrh_from_milnor(&milnor_s(&h.spectrum));
    rep.check(
        "milnor_agrees",
        "HRH from Hodge numbers of the Milnor fiber = Sp_min,Z - 2",
        SRC_MILNOR,
        via_milnor == hrh,
        format!("Milnor route gives {via_milnor}"),
    );
    hrh
}

struct TupleData {
    roots: RootSet,
    hrh: HrhValue,
    source: &'static str,
}

fn has_rational_singularities(spec: &BpSpec) -> bool {
    let s = spec
        .exponents()
        .iter()
        .fold(Rational::zero(), |acc, &a| acc + Rational::new(1, a).expect("a >= 2"));
    s > Rational::one()
}

fn tuple_data(factors: &[Vec<BpSpec>], cfg: &Config) -> Result<TupleData> {
    let mut roots: Option<RootSet> = None;
    let mut all_rhm = true;
    let mut all_rational = true;
    for f in factors {
        let h = hypersurface(f, cfg)?;
        all_rhm &= hrh_isolated_hypersurface(&h.spectrum).is_rhm();
        all_rational &= has_rational_singularities(&h.whole);
        let rs = roots_from_spectrum(&h.spectrum);
        roots = Some(match roots {
            None => rs,
            Some(acc) => tuple_ts_roots(&acc, &rs),
        });
    }
    let roots = roots.expect("at least one factor");
    let (hrh, source) = if all_rhm {
        (HrhValue::infinite(), SRC_PRODUCT)
    } else if all_rational {
        let bound = match alpha_tilde_int(&roots) {
            Extended::PosInf => Extended::PosInf,
            Extended::Finite(a) => {
                let k = a.to_i64().expect("small root") - roots.r() as i64 - 1;
                Extended::Finite(k.max(-1))
            }
        };
        match bound {
            Extended::PosInf => (HrhValue::infinite(), SRC_BS),
            b => (HrhValue::LowerBound(b), SRC_BS),
        }
    } else {
        (HrhValue::LowerBound(Extended::Finite(-1)), "HRH >= -1 always")
    };
    Ok(TupleData { roots, hrh, source })
}

fn roots_json(rs: &RootSet) -> Value {
    rs.full_set().iter().map(|r| Value::from(r.to_string())).collect()
}

fn add_bs_checks(rep: &mut Report, input: &BsInequalityInput) {
    for (name, e) in check_cor_bs(input).entries {
        rep.check(
            &name,
            e.statement,
            SRC_BS,
            e.holds,
            format!("{} <= {}", value_text(&ext_json(&e.lhs)), value_text(&ext_json(&e.rhs))),
        );
    }
}

fn value_text(v: &Value) -> String {
    v.as_str().map_or_else(|| v.to_string(), str::to_string)
}

fn run_hrh(rep: &mut Report, expr: &Expr, cfg: &Config) -> Result<()> {
    if matches!(expr, Expr::Tuple(..)) {
        let t = tuple_data(&tuple_factors(expr)?, cfg)?;
        rep.set_sourced("HRH", hrh_json(&t.hrh), t.source);
        rep.set("alpha_tilde_Z", ext_json(&alpha_tilde_int(&t.roots)));
        rep.set("r", t.roots.r());
        rep.set("is_rhm", t.hrh.is_rhm());
        rep.verdict = hrh_verdict(&t.hrh);
        return Ok(());
    }
    let h = hypersurface(&hypersurface_parts(expr)?, cfg)?;
    spectrum_invariants(rep, &h);
    spectrum_checks(rep, &h);
    let hrh = hypersurface_hrh(rep, &h);
    rep.set_sourced("HRH", hrh_json(&hrh), SRC_SPMIN);
    rep.set("is_rhm", hrh.is_rhm());
    rep.verdict = hrh_verdict(&hrh);
    Ok(())
}

fn run_bsato(rep: &mut Report, expr: &Expr, cfg: &Config) -> Result<()> {
    let (roots, hrh, sp_min, source) = if matches!(expr, Expr::Tuple(..)) {
        let t = tuple_data(&tuple_factors(expr)?, cfg)?;
        (t.roots, t.hrh, None, t.source)
    } else {
        let h = hypersurface(&hypersurface_parts(expr)?, cfg)?;
        let hrh = hypersurface_hrh(rep, &h);
        let sp_min = sp_min_int(&h.spectrum);
        rep.set("Sp_min_Z", ext_json(&sp_min));
        (roots_from_spectrum(&h.spectrum), hrh, Some(sp_min), SRC_SPMIN)
    };
    let alpha = alpha_tilde_int(&roots);
    rep.set_sourced("roots", roots_json(&roots), SRC_TUPLE_TS);
    rep.set(
        "reduced_roots",
        roots.reduced().iter().map(|r| Value::from(r.to_string())).collect::<Value>(),
    );
    rep.set("r", roots.r());
    rep.set("alpha_tilde_Z", ext_json(&alpha));
    rep.set_sourced("HRH", hrh_json(&hrh), source);
    add_bs_checks(
        rep,
        &BsInequalityInput { alpha_z: alpha.clone(), r: roots.r(), hrh: hrh.clone(), sp_min, hodge_index: None },
    );
    rep.verdict = format!("alpha_tilde_Z = {alpha}; {}", hrh_verdict(&hrh));
    Ok(())
}

fn run_det(rep: &mut Report, spec: &crate::determinantal::DetSpec) -> Result<()> {
    let d = det_report(spec)?;
    rep.set_sourced("codim", d.codim, SRC_CODIM);
    rep.set("dim", d.dim);
    rep.set("ic_equals_h", d.ic_equals_h);
    rep.set("is_rhm", d.is_rhm);
    rep.set("nrs_codim", d.nrs_codim);
    match spec.regime() {
        DetRegime::Smooth => {
            rep.set_sourced("HRH", hrh_json(&d.hrh), "smooth");
            rep.set("lcdef", d.lcdef);
        }
        DetRegime::SymmetricRankOne => {
            rep.set_sourced("HRH", hrh_json(&d.hrh), "rank-one symmetric matrices form a rational homology manifold");
            rep.set("lcdef", d.lcdef);
            rep.set("groth_vector", groth_vector(spec)?.to_json());
        }
        DetRegime::Singular => {
            rep.set_sourced("HRH", hrh_json(&d.hrh), SRC_PP);
            rep.set_sourced("lcdef_gen", d.lcdef_gen, SRC_LCDEF_GEN);
            rep.set_sourced("lcd", d.lcd, SRC_LCD);
            rep.set("lcdef", d.lcdef);
            rep.set("groth_vector", groth_vector(spec)?.to_json());
            rep.check(
                "lcdef_gen_le_lcdef",
                "lcdef_gen <= lcdef",
                "lcdef_gen <= lcdef",
                d.lcdef_gen <= d.lcdef,
                format!("{} <= {}", d.lcdef_gen, d.lcdef),
            );
            let slack = d.pp_bound_slack().expect("singular report has a non-RS locus");
            rep.check(
                "pp_bound",
                "lcdef_gen + 2 HRH + 3 <= codim of the non-RS locus",
                SRC_PP,
                slack >= 0,
                format!("slack {slack} at HRH = {}", d.hrh.lower()),
            );
        }
    }
    rep.verdict = format!("{spec}: {}", hrh_verdict(&d.hrh));
    Ok(())
}

fn load_diamond(src: &DiamondSource) -> Result<HodgeDiamond> {
    match src {
        DiamondSource::Inline { n, entries } => HodgeDiamond::from_entries(*n, entries),
        DiamondSource::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| HrhError::domain(format!("cannot read {path}: {e}")))?;
            let v: Value = serde_json::from_str(&text)
                .map_err(|e| HrhError::domain(format!("{path} is not valid JSON: {e}")))?;
            HodgeDiamond::from_json(&v)
        }
    }
}

fn run_cone(rep: &mut Report, src: &DiamondSource) -> Result<()> {
    let dia = load_diamond(src)?;
    let hrh = cone_hrh(&dia)?;
    let n = dia.n() as i64;
    rep.set("n", n);
    rep.set("dim", n + 1);
    rep.set("diamond", dia.to_json()["h"].clone());
    rep.set("betti", (0..=2 * n).map(|k| dia.betti(k)).collect::<Vec<_>>());
    rep.set_sourced("HRH", hrh_json(&hrh), SRC_CONE);
    rep.set_sourced("lcdef", cone_lcdef(&dia), SRC_CONE_LCDEF);
    let ok = match hrh.upper() {
        Extended::PosInf => true,
        Extended::Finite(k) => 2 * k <= n - 2,
    };
    rep.check("dichotomy", "HRH = +inf or 2 HRH <= dim - 3", SRC_DICHOTOMY, ok, String::new());
    rep.verdict = hrh_verdict(&hrh);
    Ok(())
}

fn run_toric(rep: &mut Report, rays: &[Vec<i64>]) -> Result<()> {
    let cone = ToricCone::new(rays.to_vec())?;
    let hrh = toric_hrh(&cone);
    rep.set("rays", cone.to_json()["rays"].clone());
    rep.set("rank", cone.rank());
    rep.set("extremal_rays", cone.extremal_rays().len());
    rep.set("simplicial", cone.is_simplicial());
    rep.set_sourced("HRH", hrh_json(&hrh), SRC_TORIC);
    rep.verdict = hrh_verdict(&hrh);
    Ok(())
}

fn run_verify(rep: &mut Report, suite: super::Suite, cfg: &Config) {
    let results = verify::run_suite(suite, cfg);
    let passed = results.iter().filter(|r| r.passed).count();
    rep.set("criteria_total", results.len());
    rep.set("criteria_passed", passed);
    for r in &results {
        rep.check(&format!("criterion_{}", r.id), r.name, "acceptance", r.passed, r.detail.clone());
    }
    rep.verdict = format!("{passed}/{} criteria pass", results.len());
}

/// Runs one command. `Err` carries a domain or consistency failure; failed
/// checks inside a successful report are reported through [`Report::passed`].
pub fn run(cmd: &Command, cfg: &Config) -> Result<Report> {
    let mut rep = Report::new(cmd.to_string(), cmd.verb());
    match &cmd.target {
        Target::Spectrum(e) => run_spectrum(&mut rep, e, cfg)?,
        Target::Hrh(e) => run_hrh(&mut rep, e, cfg)?,
        Target::Bsato(e) => run_bsato(&mut rep, e, cfg)?,
        Target::Det(spec) => run_det(&mut rep, spec)?,
        Target::Cone(src) => run_cone(&mut rep, src)?,
        Target::Toric(rays) => run_toric(&mut rep, rays)?,
        Target::Secant { is_p1, vanishing } => {
            let hrh = secant_hrh(*is_p1, *vanishing);
            rep.set_sourced("HRH", hrh_json(&hrh), SRC_SECANT);
            rep.verdict = hrh_verdict(&hrh);
        }
        Target::Verify(suite) => run_verify(&mut rep, *suite, cfg),
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse;
    use serde_json::json;

    fn report(s: &str) -> Report {
        run(&parse(s).unwrap(), &Config::default()).unwrap()
    }

    #[test]
    fn quadric_text_line() {
        let r = report("hrh bp(2,2,2,2)");
        assert!(r.render(super::super::Format::Text).lines().any(|l| l == "HRH = 0 (Cor: HRH = Sp_min,Z - 2)"));
        assert!(r.passed());
    }

    #[test]
    fn det_json() {
        let r = report("det generic m=4 n=3 p=2 --format=json");
        assert_eq!(r.invariants["HRH"], json!({"kind": "exact", "lo": 0, "hi": 0}));
        assert_eq!(r.invariants["lcdef_gen"], 1);
        assert_eq!(r.invariants["lcd"], 4);
        assert!(r.passed());
    }

    #[test]
    fn torelli() {
        let r = report("bsato tuple(bp(2,2,2), bp(2,2,2))");
        assert_eq!(r.invariants["roots"], json!(["2", "5/2", "3"]));
        assert_eq!(r.invariants["alpha_tilde_Z"], "3");
        assert_eq!(r.invariants["HRH"]["lo"], "inf");
        assert!(r.passed());
    }

    #[test]
    fn ts_spectrum_checked() {
        let r = report("spectrum ts(bp(3,3),bp(5))");
        assert!(r.checks.iter().any(|c| c.name == "ts_sumset" && c.holds));
        assert_eq!(r.invariants["mu"], 16);
    }

    #[test]
    fn tuple_lower_bound() {
        let r = report("hrh tuple(bp(2,2,2,2),bp(2,2))");
        assert_eq!(r.invariants["HRH"]["kind"], "lower_bound");
    }

    #[test]
    fn spectrum_of_tuple_rejected() {
        let cmd = parse("spectrum tuple(bp(2,2),bp(2,2))").unwrap();
        assert!(matches!(run(&cmd, &Config::default()), Err(HrhError::Domain(_))));
        let cmd = parse("hrh ts(tuple(bp(2),bp(2)),bp(2))").unwrap();
        assert!(matches!(run(&cmd, &Config::default()), Err(HrhError::Domain(_))));
    }

    #[test]
    fn families() {
        assert!(report("cone n=2 h=[[0,0,1],[1,1,1]]").invariants["HRH"]["lo"] == "inf");
        assert_eq!(report("cone n=2 h=[[0,0,1],[1,1,9]]").invariants["HRH"]["lo"], 0);
        assert_eq!(report("toric rays=[[1,0,0],[0,1,0],[1,0,1],[0,1,1]]").invariants["HRH"]["lo"], 0);
        assert_eq!(report("secant p1=false vanishing=false").invariants["HRH"]["lo"], -1);
    }
}
