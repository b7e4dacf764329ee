//! JSON input files: varieties, curve pairs, weight matrices, fans and
//! lattice groups. Parsing collects every violation with its JSON path
//! instead of stopping at the first one.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde_json::{Map, Value};

use crate::curvepair::{BoundaryCoeff, MarkedCurvePair};
use crate::exact::{parse_rational, IntMatrix, ProjPoint, QuadExt, Rational};
use crate::group::{LatticeAutGroup, MoebiusElement};
use crate::polyhedral::{Cone, Fan};
use crate::quotients::WeightMatrix;
use crate::tvariety::{CxOneVariety, FiberBook, HorizontalDivisor, QuotientAction, VarietyData, VerticalDivisor};

/// One schema violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub path: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

pub type Parsed<T> = std::result::Result<T, Vec<Diagnostic>>;

/// The kinds of input file, told apart by their keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    Variety,
    Pair,
    Weights,
    Fan,
    Lattice,
}

impl fmt::Display for FileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FileKind::Variety => "variety",
            FileKind::Pair => "curve pair",
            FileKind::Weights => "weight matrix",
            FileKind::Fan => "fan",
            FileKind::Lattice => "lattice group",
        })
    }
}

pub fn detect_kind(v: &Value) -> Option<FileKind> {
    let m = v.as_object()?;
    if m.contains_key("fibers") || m.contains_key("dim") {
        Some(FileKind::Variety)
    } else if m.contains_key("weights") {
        Some(FileKind::Weights)
    } else if m.contains_key("cones") {
        Some(FileKind::Fan)
    } else if m.contains_key("points") {
        Some(FileKind::Pair)
    } else if m.contains_key("generators") {
        Some(FileKind::Lattice)
    } else {
        None
    }
}

#[derive(Default)]
struct Ctx {
    diags: Vec<Diagnostic>,
}

impl Ctx {
    fn err(&mut self, path: &str, message: impl Into<String>) {
        self.diags.push(Diagnostic { path: path.to_string(), message: message.into() });
    }

    fn finish<T>(self, value: Option<T>) -> Parsed<T> {
        match value {
            Some(v) if self.diags.is_empty() => Ok(v),
            _ => {
                let mut d = self.diags;
                if d.is_empty() {
                    d.push(Diagnostic { path: "$".into(), message: "invalid input".into() });
                }
                Err(d)
            }
        }
    }

    fn object<'a>(&mut self, v: &'a Value, path: &str) -> Option<&'a Map<String, Value>> {
        let m = v.as_object();
        if m.is_none() {
            self.err(path, "expected an object");
        }
        m
    }

    fn array<'a>(&mut self, v: &'a Value, path: &str) -> Option<&'a Vec<Value>> {
        let a = v.as_array();
        if a.is_none() {
            self.err(path, "expected an array");
        }
        a
    }

    /// Flags missing required keys and unknown keys; `notes` is always allowed.
    fn keys(&mut self, m: &Map<String, Value>, path: &str, required: &[&str], optional: &[&str]) {
        for k in required {
            if !m.contains_key(*k) {
                self.err(path, format!("missing key {k:?}"));
            }
        }
        for k in m.keys() {
            if !required.contains(&k.as_str()) && !optional.contains(&k.as_str()) && k != "notes" {
                self.err(&format!("{path}.{k}"), "unknown key");
            }
        }
    }

    fn field<'a>(&mut self, m: &'a Map<String, Value>, key: &str) -> Option<&'a Value> {
        m.get(key)
    }

    fn string(&mut self, v: &Value, path: &str) -> Option<String> {
        let s = v.as_str().map(str::to_string);
        if s.is_none() {
            self.err(path, "expected a string");
        }
        s
    }

    fn boolean(&mut self, v: &Value, path: &str) -> Option<bool> {
        let b = v.as_bool();
        if b.is_none() {
            self.err(path, "expected true or false");
        }
        b
    }

    fn integer(&mut self, v: &Value, path: &str) -> Option<BigInt> {
        let r = match v {
            Value::Number(n) if n.is_i64() => n.as_i64().map(BigInt::from),
            Value::Number(n) if n.is_u64() => n.as_u64().map(BigInt::from),
            Value::String(s) => s.trim().parse::<BigInt>().ok(),
            _ => None,
        };
        if r.is_none() {
            self.err(path, "expected an integer");
        }
        r
    }

    fn count(&mut self, v: &Value, path: &str) -> Option<u64> {
        let r = v.as_u64();
        if r.is_none() {
            self.err(path, "expected a nonnegative integer");
        }
        r
    }

    fn rational(&mut self, v: &Value, path: &str) -> Option<Rational> {
        let r = match v {
            Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()).ok(),
            Value::String(s) => parse_rational(s).ok(),
            _ => None,
        };
        if r.is_none() {
            self.err(path, "expected an exact rational: an integer or a string \"p/q\"");
        }
        r
    }

    /// A rational, or `{"a": .., "b": .., "d": ..}` for `a + b sqrt(d)`.
    fn quad(&mut self, v: &Value, path: &str) -> Option<QuadExt> {
        if let Some(m) = v.as_object() {
            self.keys(m, path, &["a", "b", "d"], &[]);
            let a = m.get("a").and_then(|x| self.rational(x, &format!("{path}.a")));
            let b = m.get("b").and_then(|x| self.rational(x, &format!("{path}.b")));
            let d = m.get("d").and_then(|x| self.integer(x, &format!("{path}.d")));
            let (a, b, d) = (a?, b?, d?);
            return match QuadExt::new(a, b, d) {
                Ok(q) => Some(q),
                Err(e) => {
                    self.err(path, e.to_string());
                    None
                }
            };
        }
        self.rational(v, path).map(QuadExt::rational)
    }

    fn point(&mut self, v: &Value, path: &str) -> Option<ProjPoint> {
        let a = self.array(v, path)?;
        if a.len() != 2 {
            self.err(path, "a point is a pair of homogeneous coordinates [x, y]");
            return None;
        }
        let x = self.quad(&a[0], &format!("{path}[0]"));
        let y = self.quad(&a[1], &format!("{path}[1]"));
        match ProjPoint::new(x?, y?) {
            Ok(p) => Some(p),
            Err(e) => {
                self.err(path, e.to_string());
                None
            }
        }
    }

    fn int_matrix(&mut self, v: &Value, path: &str) -> Option<IntMatrix> {
        let rows = self.array(v, path)?;
        let mut out = Vec::new();
        let mut ok = true;
        for (i, r) in rows.iter().enumerate() {
            let rp = format!("{path}[{i}]");
            match self.int_vector(r, &rp) {
                Some(row) => out.push(row),
                None => ok = false,
            }
        }
        if !ok {
            return None;
        }
        let cols = out.first().map_or(0, |r| r.len());
        match IntMatrix::from_rows(out, cols) {
            Ok(m) => Some(m),
            Err(e) => {
                self.err(path, e.to_string());
                None
            }
        }
    }

    fn int_vector(&mut self, v: &Value, path: &str) -> Option<Vec<BigInt>> {
        let a = self.array(v, path)?;
        let xs: Vec<Option<BigInt>> =
            a.iter().enumerate().map(|(j, x)| self.integer(x, &format!("{path}[{j}]"))).collect();
        xs.into_iter().collect()
    }

    fn moebius(&mut self, v: &Value, path: &str) -> Option<MoebiusElement> {
        let rows = self.array(v, path)?;
        if rows.len() != 2 {
            self.err(path, "a Möbius transformation is a 2x2 matrix [[a, b], [c, d]]");
            return None;
        }
        let mut m: Vec<Rational> = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            let rp = format!("{path}[{i}]");
            let r = self.array(r, &rp)?;
            if r.len() != 2 {
                self.err(&rp, "expected 2 entries");
                return None;
            }
            for (j, x) in r.iter().enumerate() {
                m.push(self.rational(x, &format!("{rp}[{j}]"))?);
            }
        }
        let [a, b, c, d]: [Rational; 4] = m.try_into().ok()?;
        match MoebiusElement::new([[a, b], [c, d]]) {
            Ok(g) => Some(g),
            Err(e) => {
                self.err(path, e.to_string());
                None
            }
        }
    }

    fn lattice_generators(&mut self, v: &Value, path: &str, rank: Option<usize>) -> Option<LatticeAutGroup> {
        let gens = self.array(v, path)?;
        let mats: Vec<Option<IntMatrix>> =
            gens.iter().enumerate().map(|(i, g)| self.int_matrix(g, &format!("{path}[{i}]"))).collect();
        let mats: Vec<IntMatrix> = mats.into_iter().collect::<Option<_>>()?;
        let rank = rank.or_else(|| mats.first().map(|m| m.rows())).unwrap_or(0);
        match LatticeAutGroup::new(rank, mats) {
            Ok(g) => Some(g),
            Err(e) => {
                self.err(path, e.to_string());
                None
            }
        }
    }
}

fn read_root<'a>(ctx: &mut Ctx, v: &'a Value) -> Option<&'a Map<String, Value>> {
    ctx.object(v, "$")
}

/// Parses a variety file.
pub fn parse_variety(v: &Value) -> Parsed<CxOneVariety> {
    let mut ctx = Ctx::default();
    let out = variety(&mut ctx, v);
    ctx.finish(out)
}

fn variety(ctx: &mut Ctx, v: &Value) -> Option<CxOneVariety> {
    let m = read_root(ctx, v)?;
    ctx.keys(m, "$", &["dim", "fano", "log_terminal", "fibers", "symmetry"], &["name", "horizontal"]);
    let name = match m.get("name") {
        Some(x) => ctx.string(x, "$.name"),
        None => Some("unnamed".to_string()),
    };
    let dim = ctx.field(m, "dim").and_then(|x| ctx.count(x, "$.dim"));
    if let Some(d) = dim {
        if d < 2 {
            ctx.err("$.dim", "dimension must be ≥ 2");
        }
    }
    let fano = ctx.field(m, "fano").and_then(|x| ctx.boolean(x, "$.fano"));
    let log_terminal = ctx.field(m, "log_terminal").and_then(|x| ctx.boolean(x, "$.log_terminal"));

    let mut names: HashMap<String, String> = HashMap::new();
    let mut claim_name = |ctx: &mut Ctx, n: &str, path: &str| {
        if let Some(first) = names.get(n) {
            ctx.err(path, format!("duplicate divisor name {n:?} (first used at {first})"));
        } else {
            names.insert(n.to_string(), path.to_string());
        }
    };

    let mut fibers = Vec::new();
    let mut points: Vec<(ProjPoint, String)> = Vec::new();
    if let Some(fs) = m.get("fibers").and_then(|x| ctx.array(x, "$.fibers")) {
        for (i, f) in fs.iter().enumerate() {
            let fp = format!("$.fibers[{i}]");
            let Some(fm) = ctx.object(f, &fp) else { continue };
            ctx.keys(fm, &fp, &["point", "divisors"], &[]);
            let point = fm.get("point").and_then(|x| ctx.point(x, &format!("{fp}.point")));
            if let Some(p) = &point {
                if let Some((_, first)) = points.iter().find(|(q, _)| q == p) {
                    ctx.err(&format!("{fp}.point"), format!("point {p} already listed at {first}"));
                }
                points.push((p.clone(), format!("{fp}.point")));
            }
            let mut divs = Vec::new();
            if let Some(ds) = fm.get("divisors").and_then(|x| ctx.array(x, &format!("{fp}.divisors"))) {
                for (j, d) in ds.iter().enumerate() {
                    let dp = format!("{fp}.divisors[{j}]");
                    let Some(dm) = ctx.object(d, &dp) else { continue };
                    ctx.keys(dm, &dp, &["name", "order"], &[]);
                    let name = dm.get("name").and_then(|x| ctx.string(x, &format!("{dp}.name")));
                    if let Some(n) = &name {
                        claim_name(ctx, n, &format!("{dp}.name"));
                    }
                    let order = dm.get("order").and_then(|x| ctx.count(x, &format!("{dp}.order")));
                    if order == Some(0) {
                        ctx.err(&format!("{dp}.order"), "order must be ≥ 1");
                    }
                    if let (Some(n), Some(o), Some(p)) = (name, order, &point) {
                        divs.push(VerticalDivisor { name: n, base: p.clone(), order: o });
                    }
                }
            }
            if let Some(p) = point {
                fibers.push((p, divs));
            }
        }
    }

    let mut horizontals = Vec::new();
    if let Some(hs) = m.get("horizontal").and_then(|x| ctx.array(x, "$.horizontal")) {
        for (i, h) in hs.iter().enumerate() {
            let hp = format!("$.horizontal[{i}]");
            if let Some(n) = ctx.string(h, &hp) {
                claim_name(ctx, &n, &hp);
                horizontals.push(HorizontalDivisor { name: n });
            }
        }
    }

    let rank = dim.map(|d| d.saturating_sub(1) as usize);
    let (lattice, action) = symmetry(ctx, m.get("symmetry")?, rank)?;

    let (name, dim, fano, log_terminal) = (name?, dim?, fano?, log_terminal?);
    if !ctx.diags.is_empty() {
        return None;
    }
    let book = match FiberBook::new(fibers) {
        Ok(b) => b,
        Err(e) => {
            ctx.err("$.fibers", e.to_string());
            return None;
        }
    };
    let data = VarietyData { name, dim: dim as usize, fibers: book, horizontals, lattice, action, fano, log_terminal };
    match CxOneVariety::new(data) {
        Ok(v) => Some(v),
        Err(e) => {
            ctx.err("$", e.to_string());
            None
        }
    }
}

fn symmetry(ctx: &mut Ctx, v: &Value, rank: Option<usize>) -> Option<(LatticeAutGroup, QuotientAction)> {
    let sm = ctx.object(v, "$.symmetry")?;
    ctx.keys(sm, "$.symmetry", &["lattice_generators"], &["moebius_generators", "point_permutations", "cyclic"]);
    let lattice =
        sm.get("lattice_generators").and_then(|x| ctx.lattice_generators(x, "$.symmetry.lattice_generators", rank));
    let explicit = sm.contains_key("moebius_generators");
    let declared = sm.contains_key("point_permutations") || sm.contains_key("cyclic");
    let action = match (explicit, declared) {
        (true, true) => {
            ctx.err("$.symmetry", "give either moebius_generators or point_permutations with cyclic, not both");
            None
        }
        (false, false) => {
            ctx.err("$.symmetry", "missing key \"moebius_generators\" (or \"point_permutations\" with \"cyclic\")");
            None
        }
        (true, false) => {
            let path = "$.symmetry.moebius_generators";
            let gens = ctx.array(&sm["moebius_generators"], path)?;
            let gens: Vec<Option<MoebiusElement>> =
                gens.iter().enumerate().map(|(i, g)| ctx.moebius(g, &format!("{path}[{i}]"))).collect();
            gens.into_iter().collect::<Option<Vec<_>>>().map(QuotientAction::Moebius)
        }
        (false, true) => {
            let perms = match sm.get("point_permutations") {
                Some(p) => {
                    let path = "$.symmetry.point_permutations";
                    let ps = ctx.array(p, path)?;
                    let ps: Vec<Option<Vec<usize>>> = ps
                        .iter()
                        .enumerate()
                        .map(|(i, q)| {
                            let qp = format!("{path}[{i}]");
                            let a = ctx.array(q, &qp)?;
                            let xs: Vec<Option<usize>> = a
                                .iter()
                                .enumerate()
                                .map(|(j, x)| ctx.count(x, &format!("{qp}[{j}]")).map(|x| x as usize))
                                .collect();
                            xs.into_iter().collect()
                        })
                        .collect();
                    ps.into_iter().collect::<Option<Vec<_>>>()
                }
                None => Some(vec![]),
            };
            let cyclic = match sm.get("cyclic") {
                Some(c) => ctx.boolean(c, "$.symmetry.cyclic"),
                None => {
                    ctx.err("$.symmetry", "missing key \"cyclic\"");
                    None
                }
            };
            Some(QuotientAction::Declared { permutations: perms?, cyclic: cyclic? })
        }
    };
    Some((lattice?, action?))
}

/// A curve pair with the generators of the group acting on it.
#[derive(Debug, Clone)]
pub struct PairFile {
    pub pair: MarkedCurvePair,
    pub generators: Vec<MoebiusElement>,
}

/// Parses `{"points": [{"point": [x, y], "coefficient": "p/q" | "-inf"}], "group": [[[a, b], [c, d]], ...]}`.
pub fn parse_pair(v: &Value) -> Parsed<PairFile> {
    let mut ctx = Ctx::default();
    let out = pair(&mut ctx, v);
    ctx.finish(out)
}

fn pair(ctx: &mut Ctx, v: &Value) -> Option<PairFile> {
    let m = read_root(ctx, v)?;
    ctx.keys(m, "$", &["points"], &["group"]);
    let mut marked = Vec::new();
    if let Some(ps) = m.get("points").and_then(|x| ctx.array(x, "$.points")) {
        for (i, p) in ps.iter().enumerate() {
            let pp = format!("$.points[{i}]");
            let Some(pm) = ctx.object(p, &pp) else { continue };
            ctx.keys(pm, &pp, &["point", "coefficient"], &[]);
            let point = pm.get("point").and_then(|x| ctx.point(x, &format!("{pp}.point")));
            let coeff = pm.get("coefficient").and_then(|x| {
                if x.as_str().map(str::trim) == Some("-inf") {
                    Some(BoundaryCoeff::NegInfinity)
                } else {
                    ctx.rational(x, &format!("{pp}.coefficient")).map(BoundaryCoeff::Finite)
                }
            });
            if let (Some(p), Some(c)) = (point, coeff) {
                marked.push((p, c));
            }
        }
    }
    let mut generators = Vec::new();
    if let Some(gs) = m.get("group").and_then(|x| ctx.array(x, "$.group")) {
        for (i, g) in gs.iter().enumerate() {
            if let Some(g) = ctx.moebius(g, &format!("$.group[{i}]")) {
                generators.push(g);
            }
        }
    }
    if !ctx.diags.is_empty() {
        return None;
    }
    match MarkedCurvePair::new(marked) {
        Ok(pair) => Some(PairFile { pair, generators }),
        Err(e) => {
            ctx.err("$.points", e.to_string());
            None
        }
    }
}

/// A weight matrix, optionally with a stated locus to compare against: a
/// list of clauses, each a set of coordinates that must all be nonzero.
#[derive(Debug, Clone)]
pub struct WeightsFile {
    pub weights: WeightMatrix,
    pub claimed_locus: Option<Vec<Vec<usize>>>,
}

pub fn parse_weights(v: &Value) -> Parsed<WeightsFile> {
    let mut ctx = Ctx::default();
    let out = weights(&mut ctx, v);
    ctx.finish(out)
}

fn weights(ctx: &mut Ctx, v: &Value) -> Option<WeightsFile> {
    let m = read_root(ctx, v)?;
    ctx.keys(m, "$", &["labels", "weights"], &["claimed_locus"]);
    let labels: Option<Vec<String>> = m.get("labels").and_then(|x| ctx.array(x, "$.labels")).and_then(|ls| {
        let ls: Vec<Option<String>> =
            ls.iter().enumerate().map(|(i, l)| ctx.string(l, &format!("$.labels[{i}]"))).collect();
        ls.into_iter().collect()
    });
    let w = m.get("weights").and_then(|x| ctx.int_matrix(x, "$.weights"));
    let (labels, w) = (labels?, w?);
    let wm = match WeightMatrix::new(w, labels.clone()) {
        Ok(wm) => wm,
        Err(e) => {
            ctx.err("$", e.to_string());
            return None;
        }
    };
    let claimed_locus = match m.get("claimed_locus") {
        None => None,
        Some(c) => {
            let clauses = ctx.array(c, "$.claimed_locus")?;
            let mut out = Vec::new();
            for (i, cl) in clauses.iter().enumerate() {
                let cp = format!("$.claimed_locus[{i}]");
                let Some(items) = ctx.array(cl, &cp) else { continue };
                let mut idx = Vec::new();
                for (j, it) in items.iter().enumerate() {
                    let ip = format!("{cp}[{j}]");
                    if let Some(s) = ctx.string(it, &ip) {
                        match labels.iter().position(|l| *l == s) {
                            Some(k) => idx.push(k),
                            None => ctx.err(&ip, format!("unknown coordinate {s:?}")),
                        }
                    }
                }
                idx.sort_unstable();
                idx.dedup();
                out.push(idx);
            }
            Some(out)
        }
    };
    Some(WeightsFile { weights: wm, claimed_locus })
}

/// A fan, optionally with the projection used for its Chow quotient.
#[derive(Debug, Clone)]
pub struct FanFile {
    pub fan: Fan,
    pub projection: Option<IntMatrix>,
}

/// Parses `{"rank": n, "cones": [{"generators": [[...]]}], "projection": [[...]]}`.
pub fn parse_fan(v: &Value) -> Parsed<FanFile> {
    let mut ctx = Ctx::default();
    let out = fan(&mut ctx, v);
    ctx.finish(out)
}

fn fan(ctx: &mut Ctx, v: &Value) -> Option<FanFile> {
    let m = read_root(ctx, v)?;
    ctx.keys(m, "$", &["rank", "cones"], &["projection"]);
    let rank = m.get("rank").and_then(|x| ctx.count(x, "$.rank")).map(|r| r as usize);
    let mut cones = Vec::new();
    if let Some(cs) = m.get("cones").and_then(|x| ctx.array(x, "$.cones")) {
        for (i, c) in cs.iter().enumerate() {
            let cp = format!("$.cones[{i}]");
            let Some(cm) = ctx.object(c, &cp) else { continue };
            ctx.keys(cm, &cp, &["generators"], &[]);
            let Some(gs) = cm.get("generators").and_then(|x| ctx.array(x, &format!("{cp}.generators"))) else {
                continue;
            };
            let mut gens = Vec::new();
            for (j, g) in gs.iter().enumerate() {
                let gp = format!("{cp}.generators[{j}]");
                if let Some(g) = ctx.int_vector(g, &gp) {
                    if rank.is_some_and(|r| r != g.len()) {
                        ctx.err(&gp, format!("expected {} entries", rank.unwrap_or(0)));
                    } else {
                        gens.push(g);
                    }
                }
            }
            if let Some(r) = rank {
                match Cone::from_generators(r, &gens) {
                    Ok(c) => cones.push(c),
                    Err(e) => ctx.err(&cp, e.to_string()),
                }
            }
        }
    }
    let projection = match m.get("projection") {
        Some(p) => {
            let p = ctx.int_matrix(p, "$.projection")?;
            if rank.is_some_and(|r| p.cols() != r) {
                ctx.err("$.projection", format!("expected {} columns", rank.unwrap_or(0)));
            }
            Some(p)
        }
        None => None,
    };
    let rank = rank?;
    if !ctx.diags.is_empty() {
        return None;
    }
    match Fan::new(rank, cones) {
        Ok(fan) => Some(FanFile { fan, projection }),
        Err(e) => {
            ctx.err("$.cones", e.to_string());
            None
        }
    }
}

/// Parses `{"rank": n, "generators": [[[...]]]}`, or takes the lattice
/// group out of a variety file.
pub fn parse_lattice(v: &Value) -> Parsed<LatticeAutGroup> {
    if detect_kind(v) == Some(FileKind::Variety) {
        return parse_variety(v).map(|x| x.lattice().clone());
    }
    let mut ctx = Ctx::default();
    let out = (|| {
        let m = read_root(&mut ctx, v)?;
        ctx.keys(m, "$", &["rank", "generators"], &[]);
        let rank = m.get("rank").and_then(|x| ctx.count(x, "$.rank")).map(|r| r as usize);
        let gens = m.get("generators")?;
        ctx.lattice_generators(gens, "$.generators", Some(rank?))
    })();
    ctx.finish(out)
}

/// Parses any input file, reporting every violation. Nothing is computed
/// beyond the consistency checks of construction.
pub fn validate(v: &Value) -> (Option<FileKind>, Vec<Diagnostic>) {
    let Some(kind) = detect_kind(v) else {
        let d = Diagnostic {
            path: "$".into(),
            message: "not a recognised input file (expected keys such as \"fibers\", \"points\", \"weights\", \"cones\" or \"generators\")".into(),
        };
        return (None, vec![d]);
    };
    let diags = match kind {
        FileKind::Variety => parse_variety(v).err(),
        FileKind::Pair => parse_pair(v).err(),
        FileKind::Weights => parse_weights(v).err(),
        FileKind::Fan => parse_fan(v).err(),
        FileKind::Lattice => parse_lattice(v).err(),
    };
    (Some(kind), diags.unwrap_or_default())
}
