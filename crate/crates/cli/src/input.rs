//! JSON input parsing. Every schema error carries the path of the offending
//! field with 1-based list indices, e.g. `algebra.lambda[2][1]`.

use gkgrowth::catalog::CatalogEntry;
use gkgrowth::exactnum::BigRational;
use gkgrowth::hilbert::{DimensionSequence, SequenceKind};
use gkgrowth::presentations::{
    AlgebraKind, AlgebraSpec, Generator, LinearCombo, ModuleSpec, MultiDegree, NormalMonomial, Relation, Summand,
};
use gkgrowth::Error as CoreError;
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde_json::{Map, Value};

use crate::CliError;

/// Everything a spec file may contain, validated.
#[derive(Clone, Debug, Default)]
pub struct Input {
    pub algebra: Option<AlgebraSpec>,
    pub module: Option<ModuleSpec>,
    pub sub_ideal: Option<Vec<Vec<NormalMonomial>>>,
    pub chain: Option<Vec<Vec<Vec<NormalMonomial>>>>,
    pub sequence: Option<DimensionSequence>,
    pub refilter_weights: Option<Vec<u64>>,
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Schema {
        path: path.into(),
        message: message.into(),
    }
}

pub(crate) fn from_core(e: CoreError, fallback: &str) -> CliError {
    match e {
        CoreError::InvalidSpec { path, message } => schema(path, message),
        other => schema(fallback, other.to_string()),
    }
}

fn object<'a>(v: &'a Value, path: &str, allowed: &[&str]) -> Result<&'a Map<String, Value>, CliError> {
    let map = v.as_object().ok_or_else(|| schema(path, "expected an object"))?;
    for key in map.keys() {
        if !allowed.contains(&key.as_str()) {
            let full = if path.is_empty() { key.clone() } else { format!("{path}.{key}") };
            return Err(schema(full, "unknown field"));
        }
    }
    Ok(map)
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, CliError> {
    v.as_array().ok_or_else(|| schema(path, "expected a list"))
}

fn string<'a>(v: &'a Value, path: &str) -> Result<&'a str, CliError> {
    v.as_str().ok_or_else(|| schema(path, "expected a string"))
}

fn integer(v: &Value, path: &str) -> Result<BigInt, CliError> {
    match v {
        Value::Number(n) => n
            .to_string()
            .parse::<BigInt>()
            .map_err(|_| schema(path, "expected an integer")),
        _ => Err(schema(path, "expected an integer")),
    }
}

fn natural(v: &Value, path: &str) -> Result<BigUint, CliError> {
    integer(v, path)?
        .to_biguint()
        .ok_or_else(|| schema(path, "expected a natural number"))
}

fn small(v: &Value, path: &str) -> Result<u64, CliError> {
    u64::try_from(natural(v, path)?).map_err(|_| schema(path, "number too large"))
}

fn rational(v: &Value, path: &str) -> Result<BigRational, CliError> {
    match v {
        Value::Number(_) => Ok(BigRational::from_integer(integer(v, path)?)),
        Value::Array(pair) if pair.len() == 2 => {
            let n = integer(&pair[0], &format!("{path}[1]"))?;
            let d = integer(&pair[1], &format!("{path}[2]"))?;
            if d.is_zero() {
                return Err(schema(format!("{path}[2]"), "denominator must be nonzero"));
            }
            Ok(BigRational::new(n, d))
        }
        _ => Err(schema(path, "expected an integer or a [numerator, denominator] pair")),
    }
}

/// `x1^2*x2`, `y`, or `1` for the unit.
pub fn parse_monomial(text: &str, names: &[String], path: &str) -> Result<NormalMonomial, CliError> {
    let mut exps = vec![0u32; names.len()];
    let text = text.trim();
    if text == "1" {
        return Ok(NormalMonomial::new(exps));
    }
    if text.is_empty() {
        return Err(schema(path, "empty monomial"));
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e: u32 = e
                    .trim()
                    .parse()
                    .map_err(|_| schema(path, format!("bad exponent in factor `{factor}`")))?;
                (n.trim(), e)
            }
            None => (factor, 1),
        };
        let i = names
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| schema(path, format!("unknown generator `{name}`")))?;
        exps[i] = exps[i]
            .checked_add(exp)
            .ok_or_else(|| schema(path, "exponent too large"))?;
    }
    Ok(NormalMonomial::new(exps))
}

fn ideal(v: &Value, names: &[String], path: &str) -> Result<Vec<NormalMonomial>, CliError> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let p = format!("{path}[{}]", i + 1);
            parse_monomial(string(m, &p)?, names, &p)
        })
        .collect()
}

/// A flat list of monomials stands for a single summand.
fn ideals_per_summand(v: &Value, names: &[String], path: &str) -> Result<Vec<Vec<NormalMonomial>>, CliError> {
    let items = array(v, path)?;
    if items.is_empty() || items.iter().all(Value::is_string) {
        return Ok(vec![ideal(v, names, path)?]);
    }
    items
        .iter()
        .enumerate()
        .map(|(i, x)| ideal(x, names, &format!("{path}[{}]", i + 1)))
        .collect()
}

fn degree(v: &Value, path: &str) -> Result<MultiDegree, CliError> {
    match v {
        Value::Array(xs) => Ok(MultiDegree::new(
            xs.iter()
                .enumerate()
                .map(|(i, x)| small(x, &format!("{path}[{}]", i + 1)))
                .collect::<Result<_, _>>()?,
        )),
        _ => Ok(MultiDegree::scalar(small(v, path)?)),
    }
}

fn generators(v: &Value, path: &str) -> Result<Vec<Generator>, CliError> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let p = format!("{path}[{}]", i + 1);
            let map = object(g, &p, &["name", "degree"])?;
            let name = string(
                map.get("name").ok_or_else(|| schema(format!("{p}.name"), "missing field"))?,
                &format!("{p}.name"),
            )?;
            if name.is_empty() || name == "1" || name.contains(['*', '^']) || name.trim() != name {
                return Err(schema(format!("{p}.name"), "generator names must be nonempty and free of `*`, `^` and spaces"));
            }
            let degree = match map.get("degree") {
                Some(d) => degree(d, &format!("{p}.degree"))?,
                None => MultiDegree::scalar(1),
            };
            Ok(Generator {
                name: name.to_string(),
                degree,
            })
        })
        .collect()
}

fn default_generators(names: Vec<String>) -> Vec<Generator> {
    names
        .into_iter()
        .map(|name| Generator {
            name,
            degree: MultiDegree::scalar(1),
        })
        .collect()
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn relations(v: &Value, names: &[String], path: &str) -> Result<Vec<Relation>, CliError> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let p = format!("{path}[{}]", k + 1);
            let map = object(r, &p, &["lhs", "leading", "lower"])?;
            let lhs_path = format!("{p}.lhs");
            let lhs = string(map.get("lhs").ok_or_else(|| schema(&lhs_path, "missing field"))?, &lhs_path)?;
            let sides: Vec<&str> = lhs.split('*').map(str::trim).collect();
            let index = |name: &str| {
                names
                    .iter()
                    .position(|g| g == name)
                    .ok_or_else(|| schema(&lhs_path, format!("unknown generator `{name}`")))
            };
            if sides.len() != 2 {
                return Err(schema(&lhs_path, "expected two generators like `x2*x1`"));
            }
            let (upper, lower) = (index(sides[0])?, index(sides[1])?);
            let leading = match map.get("leading") {
                Some(l) => rational(l, &format!("{p}.leading"))?,
                None => BigRational::from_integer(1.into()),
            };
            let mut tail = LinearCombo::zero();
            if let Some(lower_terms) = map.get("lower") {
                let lp = format!("{p}.lower");
                for (i, t) in array(lower_terms, &lp)?.iter().enumerate() {
                    let tp = format!("{lp}[{}]", i + 1);
                    let tm = object(t, &tp, &["coeff", "monomial"])?;
                    let coeff = match tm.get("coeff") {
                        Some(c) => rational(c, &format!("{tp}.coeff"))?,
                        None => BigRational::from_integer(1.into()),
                    };
                    let mp = format!("{tp}.monomial");
                    let m = string(tm.get("monomial").ok_or_else(|| schema(&mp, "missing field"))?, &mp)?;
                    tail.add_term(parse_monomial(m, names, &mp)?, coeff);
                }
            }
            Ok(Relation {
                upper,
                lower,
                leading,
                tail,
            })
        })
        .collect()
}

fn lambda(v: &Value, path: &str) -> Result<Vec<Vec<BigRational>>, CliError> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let rp = format!("{path}[{}]", i + 1);
            array(row, &rp)?
                .iter()
                .enumerate()
                .map(|(j, x)| rational(x, &format!("{rp}[{}]", j + 1)))
                .collect()
        })
        .collect()
}

fn require<'a>(map: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value, CliError> {
    map.get(key)
        .ok_or_else(|| schema(format!("{path}.{key}"), "missing field"))
}

fn reject(map: &Map<String, Value>, keys: &[&str], path: &str, kind: &str) -> Result<(), CliError> {
    for k in keys {
        if map.contains_key(*k) {
            return Err(schema(format!("{path}.{k}"), format!("not allowed for kind {kind}")));
        }
    }
    Ok(())
}

pub fn parse_algebra(v: &Value) -> Result<AlgebraSpec, CliError> {
    let p = "algebra";
    let map = object(
        v,
        p,
        &["kind", "generators", "num_generators", "weights", "lambda", "weyl_rank", "catalog_id", "relations"],
    )?;
    let kind = string(require(map, "kind", p)?, "algebra.kind")?;
    if map.contains_key("generators") && (map.contains_key("num_generators") || map.contains_key("weights")) {
        return Err(schema(
            "algebra.generators",
            "give either generators or num_generators/weights, not both",
        ));
    }
    let listed = map
        .get("generators")
        .map(|g| generators(g, "algebra.generators"))
        .transpose()?;
    let weights = map
        .get("weights")
        .map(|w| {
            array(w, "algebra.weights")?
                .iter()
                .enumerate()
                .map(|(i, x)| small(x, &format!("algebra.weights[{}]", i + 1)))
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    let count = map
        .get("num_generators")
        .map(|n| small(n, "algebra.num_generators"))
        .transpose()?;
    let plain = |fallback: Vec<String>| -> Result<Vec<Generator>, CliError> {
        if let Some(g) = &listed {
            return Ok(g.clone());
        }
        let mut gens = default_generators(fallback);
        if let Some(w) = &weights {
            if w.len() != gens.len() {
                return Err(schema("algebra.weights", format!("expected {} weights, got {}", gens.len(), w.len())));
            }
            for (g, &x) in gens.iter_mut().zip(w) {
                g.degree = MultiDegree::scalar(x);
            }
        }
        Ok(gens)
    };
    let spec = match kind {
        "polynomial" => {
            reject(map, &["lambda", "weyl_rank", "catalog_id", "relations"], p, kind)?;
            let n = match (count, &weights, &listed) {
                (Some(n), Some(w), _) if n as usize != w.len() => {
                    return Err(schema("algebra.weights", format!("expected {n} weights, got {}", w.len())));
                }
                (Some(n), _, _) => n as usize,
                (None, Some(w), _) => w.len(),
                (None, None, Some(g)) => g.len(),
                (None, None, None) => return Err(schema("algebra.generators", "missing field")),
            };
            AlgebraSpec {
                kind: AlgebraKind::Polynomial,
                generators: plain(numbered("x", n))?,
                lambda: None,
                weyl_rank: 0,
                relations: Vec::new(),
            }
        }
        "weyl" => {
            reject(map, &["lambda", "catalog_id", "relations", "num_generators"], p, kind)?;
            let n = small(require(map, "weyl_rank", p)?, "algebra.weyl_rank")? as usize;
            let mut names = numbered("x", n);
            names.extend(numbered("y", n));
            AlgebraSpec {
                kind: AlgebraKind::Weyl,
                generators: plain(names)?,
                lambda: None,
                weyl_rank: n,
                relations: Vec::new(),
            }
        }
        "quantum_affine" => {
            reject(map, &["weyl_rank", "catalog_id", "relations", "num_generators"], p, kind)?;
            let l = lambda(require(map, "lambda", p)?, "algebra.lambda")?;
            AlgebraSpec {
                kind: AlgebraKind::QuantumAffine,
                generators: plain(numbered("x", l.len()))?,
                lambda: Some(l),
                weyl_rank: 0,
                relations: Vec::new(),
            }
        }
        "pbw_weighted" => {
            reject(map, &["lambda", "weyl_rank", "catalog_id", "num_generators", "weights"], p, kind)?;
            let gens = listed.clone().ok_or_else(|| schema("algebra.generators", "missing field"))?;
            let names: Vec<String> = gens.iter().map(|g| g.name.clone()).collect();
            let rels = map
                .get("relations")
                .map(|r| relations(r, &names, "algebra.relations"))
                .transpose()?
                .unwrap_or_default();
            AlgebraSpec {
                kind: AlgebraKind::PbwWeighted,
                generators: gens,
                lambda: None,
                weyl_rank: 0,
                relations: rels,
            }
        }
        "catalog" => {
            reject(
                map,
                &["generators", "num_generators", "weights", "lambda", "weyl_rank", "relations"],
                p,
                kind,
            )?;
            let id = string(require(map, "catalog_id", p)?, "algebra.catalog_id")?;
            let entry = CatalogEntry::from_id(id)
                .ok_or_else(|| schema("algebra.catalog_id", format!("unknown catalog entry `{id}`")))?;
            AlgebraSpec::catalog(entry)
        }
        other => return Err(schema("algebra.kind", format!("unknown kind `{other}`"))),
    };
    spec.validate().map_err(|e| from_core(e, "algebra"))?;
    Ok(spec)
}

pub fn parse_module(v: &Value, algebra: &AlgebraSpec) -> Result<ModuleSpec, CliError> {
    let map = object(v, "module", &["summands", "negative_shift"])?;
    let names = algebra.names();
    let summands = match map.get("summands") {
        None => Vec::new(),
        Some(s) => array(s, "module.summands")?
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let p = format!("module.summands[{}]", i + 1);
                let m = object(x, &p, &["shift", "ideal"])?;
                let shift = m
                    .get("shift")
                    .map(|s| small(s, &format!("{p}.shift")))
                    .transpose()?
                    .unwrap_or(0);
                let ideal = m
                    .get("ideal")
                    .map(|g| ideal(g, &names, &format!("{p}.ideal")))
                    .transpose()?
                    .unwrap_or_default();
                Ok(Summand { shift, ideal })
            })
            .collect::<Result<_, CliError>>()?,
    };
    let negative_shift = map
        .get("negative_shift")
        .map(|n| small(n, "module.negative_shift"))
        .transpose()?;
    let module = ModuleSpec {
        summands,
        negative_shift,
    };
    module.validate(algebra).map_err(|e| from_core(e, "module"))?;
    Ok(module)
}

fn parse_sequence(v: &Value, kind: Option<&Value>) -> Result<DimensionSequence, CliError> {
    let values: Vec<BigUint> = array(v, "sequence")?
        .iter()
        .enumerate()
        .map(|(i, x)| natural(x, &format!("sequence[{}]", i + 1)))
        .collect::<Result<_, _>>()?;
    let kind = match kind.map(|k| string(k, "sequence_kind")).transpose()? {
        None | Some("cumulative") => SequenceKind::Cumulative,
        Some("graded") => SequenceKind::GradedPiece,
        Some(other) => return Err(schema("sequence_kind", format!("expected cumulative or graded, got `{other}`"))),
    };
    Ok(DimensionSequence { values, kind })
}

/// Parse and validate a spec document.
pub fn parse_input(bytes: &[u8]) -> Result<Input, CliError> {
    let doc: Value = serde_json::from_slice(bytes).map_err(|e| CliError::Malformed(e.to_string()))?;
    let top = object(
        &doc,
        "",
        &["algebra", "module", "ses", "chain", "sequence", "sequence_kind", "refilter_weights"],
    )?;
    let mut input = Input::default();
    if let Some(a) = top.get("algebra") {
        input.algebra = Some(parse_algebra(a)?);
    }
    let needs_algebra = ["module", "ses", "chain", "refilter_weights"];
    if input.algebra.is_none() {
        if let Some(k) = needs_algebra.iter().find(|k| top.contains_key(**k)) {
            return Err(schema("algebra", format!("required when `{k}` is given")));
        }
    }
    if let Some(a) = &input.algebra {
        let names = a.names();
        if let Some(m) = top.get("module") {
            input.module = Some(parse_module(m, a)?);
        }
        if let Some(s) = top.get("ses") {
            let map = object(s, "ses", &["sub_ideal"])?;
            let sub = require(map, "sub_ideal", "ses")?;
            input.sub_ideal = Some(ideals_per_summand(sub, &names, "ses.sub_ideal")?);
        }
        if let Some(c) = top.get("chain") {
            input.chain = Some(
                array(c, "chain")?
                    .iter()
                    .enumerate()
                    .map(|(k, level)| ideals_per_summand(level, &names, &format!("chain[{}]", k + 1)))
                    .collect::<Result<_, _>>()?,
            );
        }
        if let Some(w) = top.get("refilter_weights") {
            input.refilter_weights = Some(
                array(w, "refilter_weights")?
                    .iter()
                    .enumerate()
                    .map(|(i, x)| small(x, &format!("refilter_weights[{}]", i + 1)))
                    .collect::<Result<_, _>>()?,
            );
        }
    }
    if let Some(s) = top.get("sequence") {
        input.sequence = Some(parse_sequence(s, top.get("sequence_kind"))?);
    } else if top.contains_key("sequence_kind") {
        return Err(schema("sequence_kind", "only meaningful together with `sequence`"));
    }
    Ok(input)
}
