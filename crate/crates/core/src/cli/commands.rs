//! Subcommand runners. Each one loads its input file, calls the library and
//! returns a [`Report`]; failures carry the exit code of their class.

use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use super::report::{self, Report};
use super::schema::{self, Diagnostic};
use crate::curvepair::{is_valuable, lct_g, BoundaryCoeff, LctValue, MarkedCurvePair, OrbitClass};
use crate::error::Error;
use crate::exact::{format_rational, smith_normal_form, IntMatrix, ProjPoint, Rational};
use crate::group::{
    classify, closure, common_fixed_point, fixed_sublattice, LatticeAutGroup, MoebiusElement, MoebiusGroup,
    DEFAULT_GROUP_CAP,
};
use crate::polyhedral::{image_cone, DEFAULT_PATTERN_CAP};
use crate::quotients::{
    chow_quotient_fan, compare_with_claim, is_polystable, limit_support, polystable_locus, verify_certificate,
    LimitSupport, StabilityCert, WeightMatrix,
};
use crate::tvariety::{
    anticanonical_lift, boundary, is_effective, ke_verdict, multiplicity, non_reduced_fibers, CxOneVariety, DivisorOnY,
    FiberBook, HorizontalDivisor, QuotientAction, VarietyData, VerticalDivisor,
};

#[derive(Debug, Clone)]
pub struct Options {
    pub json: bool,
    pub group_cap: usize,
    pub pattern_cap: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { json: false, group_cap: DEFAULT_GROUP_CAP, pattern_cap: DEFAULT_PATTERN_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    TvarCheck { file: PathBuf },
    Lct { file: PathBuf },
    Valuable { file: PathBuf },
    GitPolystable { file: PathBuf, support: Vec<String> },
    GitLocus { file: PathBuf },
    Chow { file: PathBuf },
    LatticeSymmetric { file: PathBuf },
    Validate { file: PathBuf },
    Selftest { seed: u64, cases: usize },
}

#[derive(Debug, Clone, Error)]
pub enum CliError {
    #[error("cannot read {0}: {1}")]
    Io(String, String),
    #[error("{0} is not valid JSON: {1}")]
    Json(String, String),
    #[error("{} schema violation(s)", .0.len())]
    Schema(Vec<Diagnostic>),
    #[error(transparent)]
    Library(#[from] Error),
    #[error("self-test found failures")]
    SelftestFailed(Box<Report>),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(..) | CliError::Json(..) | CliError::Schema(_) => 1,
            CliError::Library(e) => e.class().exit_code(),
            CliError::SelftestFailed(_) => 2,
        }
    }

    /// Lines for a human reader.
    pub fn messages(&self) -> Vec<String> {
        match self {
            CliError::Schema(d) => d.iter().map(|x| x.to_string()).collect(),
            other => vec![other.to_string()],
        }
    }

    pub fn to_json(&self) -> Value {
        let class = match self.exit_code() {
            1 => "input",
            2 => "computation",
            _ => "precondition",
        };
        let mut v = json!({
            "report_version": report::REPORT_VERSION,
            "error": {"class": class, "exit_code": self.exit_code(), "messages": self.messages()},
        });
        if let CliError::SelftestFailed(r) = self {
            v["report"] = serde_json::to_value(r).expect("plain data");
        }
        v
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

pub fn run(cmd: &Command, opts: &Options) -> CliResult<Report> {
    match cmd {
        Command::TvarCheck { file } => tvar_check(file, opts),
        Command::Lct { file } => lct(file, opts),
        Command::Valuable { file } => valuable(file, opts),
        Command::GitPolystable { file, support } => git_polystable(file, support),
        Command::GitLocus { file } => git_locus(file),
        Command::Chow { file } => chow(file, opts),
        Command::LatticeSymmetric { file } => lattice_symmetric(file),
        Command::Validate { file } => validate(file),
        Command::Selftest { seed, cases } => selftest(*seed, *cases),
    }
}

fn load(file: &Path) -> CliResult<Value> {
    let name = file.display().to_string();
    let text = std::fs::read_to_string(file).map_err(|e| CliError::Io(name.clone(), e.to_string()))?;
    serde_json::from_str(&text).map_err(|e| CliError::Json(name, e.to_string()))
}

fn subject(file: &Path) -> String {
    file.file_stem().map_or_else(|| file.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn orbit_class(c: &OrbitClass) -> Value {
    json!({
        "kind": c.kind.to_string(),
        "orbit": c.orbit.points.iter().map(report::point).collect::<Vec<_>>(),
        "coefficient": c.coefficient.to_string(),
    })
}

fn group_summary(g: &MoebiusGroup) -> Value {
    json!({
        "kind": classify(g).to_string(),
        "order": g.order(),
        "fixed_point": common_fixed_point(g).as_ref().map(report::point),
    })
}

fn tvar_check(file: &Path, opts: &Options) -> CliResult<Report> {
    let v = schema::parse_variety(&load(file)?).map_err(CliError::Schema)?;
    Ok(check_variety(&v, opts)?)
}

/// Full verdict pipeline for one variety.
pub fn check_variety(v: &CxOneVariety, opts: &Options) -> crate::Result<Report> {
    let mut r = Report::new("tvar check", &v.name);
    let fixed = fixed_sublattice(v.lattice());
    r.push(
        "symmetric",
        json!(fixed.is_empty()),
        None,
        json!({
            "lattice_generators": v.lattice().generators().iter().map(report::int_matrix).collect::<Vec<_>>(),
            "fixed_sublattice_basis": fixed.iter().map(|b| report::int_vector(b)).collect::<Vec<_>>(),
        }),
    );
    if !fixed.is_empty() {
        return Err(Error::NotSymmetric);
    }

    let b = boundary(v);
    let entries: Vec<Value> = v
        .fibers()
        .marked_points()
        .map(|p| {
            json!({
                "point": report::point(p),
                "multiplicity": multiplicity(v, p),
                "coefficient": b.coefficient_at(p).to_string(),
            })
        })
        .collect();
    r.push("boundary", json!(b.to_string()), None, json!(entries));

    let nr = non_reduced_fibers(v);
    r.push("non-reduced fibers", json!(nr.len()), None, json!(nr.iter().map(report::point).collect::<Vec<_>>()));

    match v.action() {
        QuotientAction::Moebius(_) => {
            let g = v.moebius_group(opts.group_cap)?.expect("explicit action");
            r.push("group on the quotient line", json!(classify(&g).to_string()), None, group_summary(&g));
        }
        QuotientAction::Declared { permutations, cyclic } => {
            r.push(
                "group on the quotient line",
                json!(if *cyclic { "cyclic (declared)" } else { "non-cyclic (declared)" }),
                None,
                json!({ "point_permutations": permutations }),
            );
        }
    }

    let ke = ke_verdict(v, opts.group_cap)?;
    match &ke.glct {
        Some(g) => {
            let route =
                if g.lower_bound { "lower bound from the declared action" } else { "min(1, lct of the quotient pair)" };
            let cert = match &g.quotient {
                Some(q) => json!({
                    "quotient_lct": q.value.to_string(),
                    "boundary_degree": format_rational(&q.degree),
                    "minimizers": q.minimizers.iter().map(orbit_class).collect::<Vec<_>>(),
                }),
                None => Value::Null,
            };
            r.push("glct", report::rational(&g.value), Some(route.into()), cert);
            if g.lower_bound {
                r.warn("glct is only a lower bound: the action on the quotient line is declared by its permutation of the listed fibers");
            }
        }
        None => {
            r.push("glct", Value::Null, Some("undefined".into()), Value::Null);
            r.warn("glct is undefined: some listed fiber has no vertical divisor, so the quotient map is not a morphism on the maximal orbits");
        }
    }

    r.push(
        "Kähler–Einstein",
        json!(if ke.certified { "certified" } else { "inconclusive" }),
        ke.route.map(|x| x.to_string()),
        json!({
            "details": ke.details,
            "non_reduced": ke.non_reduced.iter().map(report::point).collect::<Vec<_>>(),
            "tian_threshold": format_rational(&ke.threshold),
        }),
    );
    if !ke.certified {
        r.warn("inconclusive: the sufficient criteria do not apply; this does not rule out a Kähler–Einstein metric");
    }
    Ok(r)
}

fn load_pair(file: &Path, opts: &Options) -> CliResult<(MarkedCurvePair, MoebiusGroup)> {
    let p = schema::parse_pair(&load(file)?).map_err(CliError::Schema)?;
    let g = if p.generators.is_empty() { MoebiusGroup::trivial() } else { closure(&p.generators, opts.group_cap)? };
    Ok((p.pair, g))
}

fn lct(file: &Path, opts: &Options) -> CliResult<Report> {
    let (pair, g) = load_pair(file, opts)?;
    let res = lct_g(&pair, &g)?;
    let mut r = Report::new("lct", &subject(file));
    r.push("group", json!(classify(&g).to_string()), None, group_summary(&g));
    let route = match (&res.value, res.witness()) {
        (LctValue::Infinite, _) => Some("boundary degree ≥ 2".to_string()),
        (_, Some(w)) => Some(format!("{} orbit of size {}", w.kind, w.orbit.len())),
        _ => None,
    };
    r.push(
        "lct",
        json!(res.value.to_string()),
        route,
        json!({
            "boundary": pair.to_string(),
            "boundary_degree": format_rational(&res.degree),
            "minimizers": res.minimizers.iter().map(orbit_class).collect::<Vec<_>>(),
        }),
    );
    Ok(r)
}

fn valuable(file: &Path, opts: &Options) -> CliResult<Report> {
    let (pair, g) = load_pair(file, opts)?;
    let v = is_valuable(&pair, &g)?;
    let mut r = Report::new("valuable", &subject(file));
    r.push("group", json!(classify(&g).to_string()), None, group_summary(&g));
    r.push(
        "valuable",
        json!(v.valuable),
        v.vacuous.then(|| "no invariant divisor D ~ -K with D ≥ B exists".to_string()),
        json!({
            "sigma": format_rational(&v.sigma),
            "violation": v.violation.as_ref().map(|(c, m)| json!({
                "class": orbit_class(c),
                "max_coefficient": format_rational(m),
            })),
        }),
    );
    Ok(r)
}

fn labels(w: &WeightMatrix, s: &[usize]) -> Value {
    json!(w.support_labels(s))
}

fn set_name(w: &WeightMatrix, s: &[usize]) -> String {
    format!("{{{}}}", w.support_labels(s).join(","))
}

fn stability_certificate(w: &WeightMatrix, s: &[usize], ok: bool, cert: &StabilityCert) -> crate::Result<Value> {
    let verified = verify_certificate(w, s, ok, cert);
    Ok(match cert {
        StabilityCert::PositiveCombination(l) => json!({
            "positive_combination": l.iter().map(|(i, x)| json!([w.labels()[*i], format_rational(x)])).collect::<Vec<_>>(),
            "verified": verified,
        }),
        StabilityCert::Destabilizer(v) => {
            let limit = match limit_support(w, s, v)? {
                LimitSupport::Support(t) => labels(w, &t),
                LimitSupport::Diverges => json!("diverges"),
            };
            json!({ "destabilizer": report::int_vector(v), "limit_support": limit, "verified": verified })
        }
    })
}

fn git_polystable(file: &Path, support: &[String]) -> CliResult<Report> {
    let wf = schema::parse_weights(&load(file)?).map_err(CliError::Schema)?;
    let w = &wf.weights;
    let names: Vec<&str> = support.iter().map(String::as_str).filter(|s| !s.is_empty()).collect();
    let s = w.support(&names)?;
    let (ok, cert) = is_polystable(w, &s)?;
    let mut r = Report::new("git polystable", &subject(file));
    r.push(
        &format!("polystable {}", set_name(w, &s)),
        json!(ok),
        Some(if ok { "positive balancing of the weights" } else { "destabilizing one-parameter subgroup" }.into()),
        stability_certificate(w, &s, ok, &cert)?,
    );
    Ok(r)
}

fn git_locus(file: &Path) -> CliResult<Report> {
    let wf = schema::parse_weights(&load(file)?).map_err(CliError::Schema)?;
    let w = &wf.weights;
    let locus = polystable_locus(w)?;
    let mut r = Report::new("git locus", &subject(file));
    for e in &locus {
        r.push(
            &format!("polystable {}", set_name(w, &e.support)),
            json!(e.polystable),
            None,
            stability_certificate(w, &e.support, e.polystable, &e.cert)?,
        );
    }
    let stable: Vec<Value> = locus.iter().filter(|e| e.polystable).map(|e| labels(w, &e.support)).collect();
    r.push("polystable supports", json!(stable), None, Value::Null);
    if let Some(claim) = &wf.claimed_locus {
        let mismatches = compare_with_claim(&locus, claim);
        let clauses: Vec<String> = claim.iter().map(|c| w.support_labels(c).join("*")).collect();
        r.push(
            "agrees with the stated locus",
            json!(mismatches.is_empty()),
            Some(format!("stated: {} != 0", clauses.join(" or "))),
            json!(mismatches
                .iter()
                .map(|m| json!({"support": labels(w, &m.support), "stated": m.claimed, "computed": m.computed}))
                .collect::<Vec<_>>()),
        );
        for m in &mismatches {
            r.warn(format!(
                "support {}: the stated locus says {}, the computation says {}",
                set_name(w, &m.support),
                if m.claimed { "polystable" } else { "not polystable" },
                if m.computed { "polystable" } else { "not polystable" },
            ));
        }
    }
    Ok(r)
}

fn chow(file: &Path, opts: &Options) -> CliResult<Report> {
    let ff = schema::parse_fan(&load(file)?).map_err(CliError::Schema)?;
    let Some(p) = ff.projection else {
        return Err(CliError::Schema(vec![Diagnostic {
            path: "$".into(),
            message: "missing key \"projection\" (needed for the Chow quotient)".into(),
        }]));
    };
    let q = chow_quotient_fan(&ff.fan, &p, opts.pattern_cap)?;
    let images = ff
        .fan
        .maximal_cones()
        .iter()
        .map(|c| image_cone(c, &p).map(|i| report::cone(&i)))
        .collect::<crate::Result<Vec<_>>>()?;
    let mut r = Report::new("chow", &subject(file));
    r.push(
        "Chow quotient fan",
        report::fan(&q),
        Some("coarsest common refinement of the projected cones".into()),
        json!({ "projection": report::int_matrix(&p), "projected_cones": images }),
    );
    r.push("maximal cells", json!(q.maximal_cones().len()), None, Value::Null);
    r.push("cones including faces", json!(q.cones().len()), None, Value::Null);
    Ok(r)
}

fn lattice_symmetric(file: &Path) -> CliResult<Report> {
    let g = schema::parse_lattice(&load(file)?).map_err(CliError::Schema)?;
    let fixed = fixed_sublattice(&g);
    let mut r = Report::new("lattice symmetric", &subject(file));
    r.push(
        "symmetric",
        json!(fixed.is_empty()),
        None,
        json!({ "fixed_sublattice_basis": fixed.iter().map(|b| report::int_vector(b)).collect::<Vec<_>>() }),
    );
    Ok(r)
}

fn validate(file: &Path) -> CliResult<Report> {
    let (kind, diags) = schema::validate(&load(file)?);
    if !diags.is_empty() {
        return Err(CliError::Schema(diags));
    }
    let mut r = Report::new("validate", &subject(file));
    r.push("schema", json!("OK"), kind.map(|k| k.to_string()), Value::Null);
    Ok(r)
}

struct CheckTally {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
}

impl CheckTally {
    fn new(name: &'static str) -> Self {
        CheckTally { name, cases: 0, failures: vec![] }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data = (0..rows).map(|_| (0..cols).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect()).collect();
    IntMatrix::from_rows(data, cols).expect("rectangular")
}

fn random_moebius(rng: &mut ChaCha8Rng) -> MoebiusElement {
    loop {
        let m = [[0; 2]; 2].map(|r: [i64; 2]| r.map(|_| rng.gen_range(-3i64..=3)));
        if m[0][0] * m[1][1] != m[0][1] * m[1][0] {
            return MoebiusElement::from_i64(m).expect("nonsingular");
        }
    }
}

/// Randomised internal consistency checks with a fixed seed.
fn selftest(seed: u64, cases: usize) -> CliResult<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tallies = vec![];

    let mut t = CheckTally::new("Smith normal form U A V = D");
    for _ in 0..cases {
        let (rows, cols) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let a = random_matrix(&mut rng, rows, cols, 6);
        let s = smith_normal_form(&a);
        let ok = s.u.mul(&a).mul(&s.v) == s.d && s.u.is_unimodular() && s.v.is_unimodular();
        t.record(ok, || format!("A = {a}"));
    }
    tallies.push(t);

    let mut t = CheckTally::new("polystability certificates verify");
    for _ in 0..cases {
        let (d, n) = (rng.gen_range(1..=2), rng.gen_range(1..=5));
        let w = WeightMatrix::unlabelled(random_matrix(&mut rng, d, n, 3));
        let s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.7)).collect();
        let ok = is_polystable(&w, &s).map(|(p, c)| verify_certificate(&w, &s, p, &c)).unwrap_or(false);
        t.record(ok, || format!("W = {}, support {s:?}", w.weights()));
    }
    tallies.push(t);

    let mut t = CheckTally::new("anticanonical lift effective iff Q_Y ≥ B");
    for _ in 0..cases {
        let k = rng.gen_range(0..=3);
        let fibers = (0..k)
            .map(|i| {
                let p = ProjPoint::rational(Rational::from_integer(i.into()));
                let d = (0..rng.gen_range(1..=2))
                    .map(|j| VerticalDivisor {
                        name: format!("d{i}_{j}"),
                        base: p.clone(),
                        order: rng.gen_range(1..=3),
                    })
                    .collect();
                (p, d)
            })
            .collect();
        let v = CxOneVariety::new(VarietyData {
            name: "random".into(),
            dim: 2,
            fibers: FiberBook::new(fibers).expect("distinct points"),
            horizontals: vec![HorizontalDivisor { name: "h".into() }],
            lattice: LatticeAutGroup::trivial(1),
            action: QuotientAction::Moebius(vec![MoebiusElement::identity()]),
            fano: true,
            log_terminal: true,
        })
        .expect("valid random variety");
        // Q_Y: random coefficients on points 0..=4 adjusted to degree 2 at point 4
        let mut terms: Vec<(ProjPoint, Rational)> = (0..4)
            .map(|i| {
                (
                    ProjPoint::rational(Rational::from_integer(i.into())),
                    Rational::new(rng.gen_range(-2..=6).into(), 6.into()),
                )
            })
            .collect();
        let rest: Rational = Rational::from_integer(2.into()) - terms.iter().map(|(_, c)| c.clone()).sum::<Rational>();
        terms.push((ProjPoint::rational(Rational::from_integer(4.into())), rest));
        let q = DivisorOnY::new(terms);
        let ok = anticanonical_lift(&v, &q, DEFAULT_GROUP_CAP)
            .map(|l| is_effective(&l) == q.dominates(&boundary(&v)))
            .unwrap_or(false);
        t.record(ok, || format!("Q_Y = {q:?}"));
    }
    tallies.push(t);

    let mut t = CheckTally::new("lct invariant under Möbius conjugation");
    let swap = MoebiusElement::from_i64([[0, 1], [1, 0]]).expect("nonsingular");
    for _ in 0..cases {
        let a = Rational::new(rng.gen_range(0..=4).into(), 4.into());
        let c = Rational::new(rng.gen_range(0..=4).into(), 4.into());
        let mut marked = vec![
            (ProjPoint::rational(Rational::zero()), BoundaryCoeff::Finite(a.clone())),
            (ProjPoint::infinity(), BoundaryCoeff::Finite(a)),
        ];
        let with_one = rng.gen_bool(0.5);
        if with_one {
            marked.push((ProjPoint::rational(Rational::one()), BoundaryCoeff::Finite(c)));
        }
        let pair = MarkedCurvePair::new(marked).expect("distinct points");
        let gens = if rng.gen_bool(0.5) { vec![swap.clone()] } else { vec![] };
        let g = if gens.is_empty() { MoebiusGroup::trivial() } else { closure(&gens, DEFAULT_GROUP_CAP)? };
        let h = random_moebius(&mut rng);
        let before = lct_g(&pair, &g).map(|x| x.value);
        let after = lct_g(&pair.transform(&h), &g.conjugate_by(&h)).map(|x| x.value);
        t.record(before.is_ok() && before == after, || format!("pair {pair}, h = {h}"));
    }
    tallies.push(t);

    let mut r = Report::new("selftest", &format!("seed {seed}"));
    let mut failed = false;
    for t in tallies {
        failed |= !t.failures.is_empty();
        r.push(
            t.name,
            json!(t.failures.is_empty()),
            None,
            json!({ "cases": t.cases, "failures": t.failures.len(), "first_failure": t.failures.first() }),
        );
    }
    if failed {
        return Err(CliError::SelftestFailed(Box::new(r)));
    }
    Ok(r)
}
