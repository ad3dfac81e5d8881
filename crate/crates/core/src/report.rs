//! Report assembly for the command-line front end. Every field is produced
//! by a library operation; this module only collects and serializes.
//!
//! Reports are `serde_json::Value` trees. Object keys are kept sorted, so
//! identical inputs serialize to identical bytes.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::betti::{betti_semigroup, compare::compare_tables, Hypotheses};
use crate::error::{Error, Result};
use crate::extension::{
    extension_sequence, geometric_corpus, geometric_semigroup, is_complete_intersection,
    nice_extension, projective_closure, verify_extension_theorems, ExtensionStep,
};
use crate::ideal::{gastinger_check, toric_ideal, Binomial, ToricIdeal};
use crate::limits::Limits;
use crate::local::{cm_check, homogeneity_gb_check, standard_basis, support_condition, StandardBasisResult};
use crate::semigroup::{
    apery_set_from_ideal, default_degree_bound, homogeneity_of, is_cohen_macaulay_ring,
    order_obstructions, verify_reduction, AffineSemigroup, AperySet, Point,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportOptions {
    /// Largest `n` tried by the reduction certificate.
    pub n_max: u32,
    /// Obstruction search bound; derived from the Apéry set when absent.
    pub degree_bound: Option<u64>,
    pub limits: Limits,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { n_max: 8, degree_bound: None, limits: Limits::default() }
    }
}

/// Semigroup input document: `{"dim": d, "generators": [[...], ...]}`.
/// For `dim = 1` a generator may be a bare integer.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupInput {
    pub dim: usize,
    pub generators: Vec<GeneratorInput>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum GeneratorInput {
    Scalar(u64),
    Vector(Vec<u64>),
}

impl SemigroupInput {
    pub fn points(&self) -> Result<Vec<Point>> {
        self.generators
            .iter()
            .enumerate()
            .map(|(index, g)| match g {
                GeneratorInput::Vector(v) => Ok(Point::new(v.clone())),
                GeneratorInput::Scalar(x) if self.dim == 1 => Ok(Point::new(vec![*x])),
                GeneratorInput::Scalar(_) => Err(Error::DimensionMismatch {
                    index,
                    expected: self.dim,
                    found: 1,
                }),
            })
            .collect()
    }

    /// The semigroup in canonical generator order.
    pub fn semigroup(&self) -> Result<AffineSemigroup> {
        Ok(AffineSemigroup::new(self.points()?, self.dim)?.canonical())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtendInput {
    pub dim: usize,
    pub generators: Vec<GeneratorInput>,
    pub b: GeneratorInput,
    pub lambda: u64,
    pub mu: u64,
    /// Multiplicities in the order the generators are listed.
    pub alpha: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceInput {
    pub dim: usize,
    pub steps: Vec<ExtensionStep>,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize to JSON")
}

fn texts(bs: &[Binomial]) -> Value {
    Value::Array(bs.iter().map(|b| Value::String(b.to_string())).collect())
}

fn envelope(command: &str, body: Value) -> Value {
    let mut v = json!({ "schema_version": SCHEMA_VERSION, "command": command });
    if let (Value::Object(out), Value::Object(fields)) = (&mut v, body) {
        out.extend(fields);
    }
    v
}

fn semigroup_value(s: &AffineSemigroup) -> Value {
    json!({
        "dim": s.dim(),
        "generators": s.generators(),
        "extremal_rays": s.extremal_rays(),
        "simplicial": true,
    })
}

fn apery_value(s: &AffineSemigroup, ap: &AperySet) -> Value {
    let verdict = homogeneity_of(ap);
    json!({
        "elements": ap.elements.iter().map(|e| json!({
            "point": e.point,
            "monomial": e.monomial.to_string(),
            "lengths": e.lengths,
        })).collect::<Vec<_>>(),
        "count": ap.len(),
        "homogeneous": verdict.homogeneous,
        "witness": verdict.witness.map(|w| w.point),
        "ring_cohen_macaulay": is_cohen_macaulay_ring(s, ap),
    })
}

fn toric_value(t: &ToricIdeal) -> Value {
    json!({
        "generators": texts(t.generators()),
        "degrees": t.degrees,
        "count": t.len(),
        "saturation": t.basis.stats,
    })
}

fn standard_basis_value(sb: &StandardBasisResult) -> Value {
    json!({
        "order": "negdegrevlex",
        "basis": texts(&sb.basis),
        "leading_monomials": sb.leading_monomials.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "homogeneous_part": sb.homogeneous_part,
        "nonhomogeneous_part": sb.nonhomogeneous_part,
        "tangent_cone_generators": texts(&sb.tangent_cone_generators),
        "stats": sb.stats,
    })
}

/// The pieces shared by most commands, computed once.
struct Pipeline {
    s: AffineSemigroup,
    toric: ToricIdeal,
    ap: AperySet,
}

impl Pipeline {
    fn new(s: AffineSemigroup, limits: &Limits) -> Result<Self> {
        let toric = toric_ideal(&s, limits)?;
        let ap = apery_set_from_ideal(&s, toric.generators(), limits)?;
        Ok(Pipeline { s, toric, ap })
    }

    fn standard_basis(&self, limits: &Limits) -> Result<StandardBasisResult> {
        standard_basis(self.toric.generators(), limits)
    }

    fn cm_value(&self, sb: &StandardBasisResult, opts: &ReportOptions) -> Result<(Value, Hypotheses)> {
        let verdict = cm_check(sb, self.s.dim());
        let reduction = verify_reduction(&self.s, opts.n_max, &opts.limits)?;
        let bound = opts.degree_bound.unwrap_or_else(|| default_degree_bound(&self.s, &self.ap));
        let witnesses = order_obstructions(&self.s, bound, &opts.limits)?;
        let hypotheses = Hypotheses {
            ring_cohen_macaulay: is_cohen_macaulay_ring(&self.s, &self.ap),
            tangent_cone_cohen_macaulay: verdict.cohen_macaulay,
            support_condition: support_condition(sb, self.s.dim()).is_some(),
            reduction,
        };
        let value = json!({
            "cohen_macaulay": verdict.cohen_macaulay,
            "offending": verdict.offending.iter().map(|(j, i)| json!({"variable": j, "element": i})).collect::<Vec<_>>(),
            "reduction": reduction,
            "hypothesis_certified": reduction.is_certified(),
            "obstructions": {
                "degree_bound": bound,
                "default_bound": opts.degree_bound.is_none(),
                "count": witnesses.len(),
                "witnesses": witnesses,
            },
            "consistent_with_obstructions": verdict.cohen_macaulay == witnesses.is_empty(),
        });
        Ok((value, hypotheses))
    }
}

fn homogeneity_value(p: &Pipeline, sb: &StandardBasisResult) -> Result<Value> {
    let check = homogeneity_gb_check(&p.s, sb, &p.ap)?;
    let mut v = to_value(&check);
    if let Value::Object(map) = &mut v {
        if let Some(Value::Array(basis)) = map.get("basis").cloned() {
            let t: Vec<Value> = basis.into_iter().filter_map(|b| b.get("text").cloned()).collect();
            map.insert("basis".into(), Value::Array(t));
        }
        map.insert("definitional".into(), json!(homogeneity_of(&p.ap).homogeneous));
    }
    Ok(v)
}

/// Full pipeline.
pub fn analyze(s: &AffineSemigroup, opts: &ReportOptions) -> Result<Value> {
    let limits = &opts.limits;
    let p = Pipeline::new(s.canonical(), limits)?;
    let sb = p.standard_basis(limits)?;
    let (cm, hypotheses) = p.cm_value(&sb, opts)?;
    let betti = compare_tables(&p.s, &sb, hypotheses, limits)?;
    let body = json!({
        "semigroup": semigroup_value(&p.s),
        "apery": apery_value(&p.s, &p.ap),
        "toric_ideal": toric_value(&p.toric),
        "standard_basis": standard_basis_value(&sb),
        "cm": cm,
        "homogeneity": homogeneity_value(&p, &sb)?,
        "betti": betti,
        "complete_intersection": is_complete_intersection(&p.s, limits)?,
        "limits": limits,
    });
    Ok(envelope("analyze", body))
}

pub fn apery(s: &AffineSemigroup, opts: &ReportOptions) -> Result<Value> {
    let p = Pipeline::new(s.canonical(), &opts.limits)?;
    Ok(envelope("apery", json!({
        "semigroup": semigroup_value(&p.s),
        "apery": apery_value(&p.s, &p.ap),
    })))
}

pub fn ideal(s: &AffineSemigroup, opts: &ReportOptions) -> Result<Value> {
    let s = s.canonical();
    let t = toric_ideal(&s, &opts.limits)?;
    let mut body = json!({
        "semigroup": semigroup_value(&s),
        "toric_ideal": toric_value(&t),
        "complete_intersection": is_complete_intersection(&s, &opts.limits)?,
    });
    if s.dim() == 1 && s.numerical_generators().map(|g| g.iter().fold(0, |a, &b| num_integer::gcd(a, b)) == 1)? {
        let checks = (0..s.len())
            .map(|i| gastinger_check(t.generators(), &s, i, &opts.limits))
            .collect::<Result<Vec<_>>>()?;
        body["gastinger"] = to_value(&checks);
    }
    Ok(envelope("ideal", body))
}

pub fn stdbasis(s: &AffineSemigroup, opts: &ReportOptions) -> Result<Value> {
    let s = s.canonical();
    let t = toric_ideal(&s, &opts.limits)?;
    let sb = standard_basis(t.generators(), &opts.limits)?;
    Ok(envelope("stdbasis", json!({
        "semigroup": semigroup_value(&s),
        "standard_basis": standard_basis_value(&sb),
    })))
}

pub fn cm(s: &AffineSemigroup, opts: &ReportOptions) -> Result<Value> {
    let p = Pipeline::new(s.canonical(), &opts.limits)?;
    let sb = p.standard_basis(&opts.limits)?;
    let (cm, _) = p.cm_value(&sb, opts)?;
    Ok(envelope("cm", json!({ "semigroup": semigroup_value(&p.s), "cm": cm })))
}

pub fn homogeneous(s: &AffineSemigroup, opts: &ReportOptions) -> Result<Value> {
    let p = Pipeline::new(s.canonical(), &opts.limits)?;
    let sb = p.standard_basis(&opts.limits)?;
    Ok(envelope("homogeneous", json!({
        "semigroup": semigroup_value(&p.s),
        "apery": apery_value(&p.s, &p.ap),
        "homogeneity": homogeneity_value(&p, &sb)?,
    })))
}

pub fn betti(s: &AffineSemigroup, opts: &ReportOptions) -> Result<Value> {
    let p = Pipeline::new(s.canonical(), &opts.limits)?;
    let sb = p.standard_basis(&opts.limits)?;
    let (_, hypotheses) = p.cm_value(&sb, opts)?;
    let cmp = compare_tables(&p.s, &sb, hypotheses, &opts.limits)?;
    Ok(envelope("betti", json!({ "semigroup": semigroup_value(&p.s), "betti": cmp })))
}

pub fn extend(input: &ExtendInput, opts: &ReportOptions) -> Result<Value> {
    let given = SemigroupInput { dim: input.dim, generators: input.generators.clone() }.points()?;
    if input.alpha.len() != given.len() {
        return Err(Error::NotInSpan(format!(
            "factorization has {} entries for {} generators",
            input.alpha.len(),
            given.len()
        )));
    }
    let s = AffineSemigroup::new(given.clone(), input.dim)?;
    let alpha: Vec<u64> = s
        .generators()
        .iter()
        .map(|g| input.alpha[given.iter().position(|h| h == g).expect("same generators")])
        .collect();
    let b = SemigroupInput { dim: input.dim, generators: vec![input.b.clone()] }.points()?.remove(0);
    let ext = nice_extension(&s, &b, input.lambda, input.mu, &alpha)?;
    let report = verify_extension_theorems(&ext, &opts.limits)?;
    Ok(envelope("extend", json!({
        "base": semigroup_value(&ext.base),
        "b": ext.b,
        "lambda": ext.lambda,
        "mu": ext.mu,
        "alpha": ext.alpha,
        "result": semigroup_value(&ext.result),
        "relation": ext.relation.to_string(),
        "verification": report,
        "all_hold": report.all_hold(),
    })))
}

pub fn sequence(input: &SequenceInput, opts: &ReportOptions) -> Result<Value> {
    let r = extension_sequence(input.dim, &input.steps, &opts.limits)?;
    Ok(envelope("sequence", json!({
        "semigroup": semigroup_value(&r.semigroup),
        "certificates": r.certificates,
        "complete_intersection": r.certificates.last().is_some_and(|c| c.is_ci),
    })))
}

/// One geometric-sequence fixture, with expected values and the verdict of
/// recomputing them.
pub fn corpus_entry(a: u64, b: u64, r: u32, opts: &ReportOptions) -> Result<Value> {
    let limits = &opts.limits;
    let g = geometric_semigroup(a, b, r)?;
    let s = &g.semigroup;
    let t = toric_ideal(s, limits)?;
    let sb = standard_basis(t.generators(), limits)?;
    let ideal_ok = t.len() == g.expected_ideal.len()
        && g.expected_ideal.iter().all(|e| t.generators().iter().any(|x| x.same_up_to_sign(e)));
    let expected_lms: Vec<String> = g.expected_ideal.iter().map(|e| e.lead().to_string()).collect();
    let lms: Vec<String> = sb.leading_monomials.iter().map(ToString::to_string).collect();
    let gastinger = gastinger_check(t.generators(), s, 0, limits)?;
    let betti = betti_semigroup(s, limits)?.totals();
    let cm = cm_check(&sb, 1).cohen_macaulay;
    Ok(json!({
        "a": a,
        "b": b,
        "r": r,
        "dim": 1,
        "generators": s.numerical_generators()?,
        "expected": {
            "toric_ideal": texts(&g.expected_ideal),
            "standard_basis_leading_monomials": expected_lms,
            "betti": g.expected_betti,
            "gastinger_dimension": g.gastinger_dimension,
            "cohen_macaulay": true,
        },
        "verified": {
            "toric_ideal": ideal_ok,
            "standard_basis_leading_monomials": lms == expected_lms,
            "betti": betti == g.expected_betti,
            "gastinger": gastinger.holds && gastinger.dimension == Some(g.gastinger_dimension),
            "cohen_macaulay": cm,
        },
    }))
}

/// Fixtures for one parameter triple, or for the whole corpus.
pub fn corpus(params: Option<(u64, u64, u32)>, opts: &ReportOptions) -> Result<Value> {
    let list = match params {
        Some(p) => vec![p],
        None => geometric_corpus(),
    };
    let entries = list
        .into_iter()
        .map(|(a, b, r)| corpus_entry(a, b, r, opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(envelope("corpus", json!({ "count": entries.len(), "fixtures": entries })))
}

pub fn closure(s: &AffineSemigroup, opts: &ReportOptions) -> Result<Value> {
    let s = s.canonical();
    let c = projective_closure(&s, &opts.limits)?;
    Ok(envelope("closure", json!({
        "semigroup": semigroup_value(&s),
        "homogenized_ideal": c.ideal.iter().map(|b| b.render(&|i| format!("z{i}"))).collect::<Vec<_>>(),
        "homogenizing_variable": "z0",
        "closure": semigroup_value(&c.semigroup),
        "ideal_matches": c.ideal_matches,
        "cohen_macaulay": c.cohen_macaulay,
        "gorenstein": c.gorenstein,
        "complete_intersection": c.ci,
    })))
}

/// Indented `key: value` rendering of a report.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items
                .iter()
                .map(|x| match x {
                    Value::Array(_) | Value::Object(_) if !x.is_array() || !is_numeric(x) => None,
                    _ => inline(x),
                })
                .collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Object(map) => map.get("text").and_then(Value::as_str).map(str::to_string),
    }
}

fn is_numeric(v: &Value) -> bool {
    v.as_array().is_some_and(|a| a.iter().all(Value::is_number))
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other).unwrap_or_default())),
    }
}
