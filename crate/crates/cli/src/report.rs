//! Report assembly. Every exact number is a JSON integer or a
//! `[numerator, denominator]` pair.

use gkgrowth::axioms::{AxiomReport, ChainReport};
use gkgrowth::exactnum::{BigRational, BinomialForm, Polynomial};
use gkgrowth::hilbert::DimensionSequence;
use gkgrowth::poincare::{Caveat, DenominatorReport, QuasiPolynomial, RationalSeries, Recurrence};
use gkgrowth::samuel::{leading_monomial_coefficient, GrowthReport};
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Map, Number, Value};

use crate::warnings::{Warning, Warnings};

pub const SPEC_VERSION: u64 = 1;

fn number(digits: String) -> Value {
    Value::Number(serde_json::from_str::<Number>(&digits).expect("integer literal"))
}

pub fn int(n: &BigInt) -> Value {
    number(n.to_string())
}

pub fn nat(n: &BigUint) -> Value {
    number(n.to_string())
}

pub fn rat(r: &BigRational) -> Value {
    Value::Array(vec![int(r.numer()), int(r.denom())])
}

pub fn opt<T>(x: Option<T>, f: impl FnOnce(T) -> Value) -> Value {
    x.map_or(Value::Null, f)
}

pub fn poly(p: &Polynomial) -> Value {
    Value::Array(p.coeffs().iter().map(rat).collect())
}

pub fn form(f: &BinomialForm) -> Value {
    Value::Array(f.coeffs().iter().map(rat).collect())
}

pub fn dims(s: &DimensionSequence) -> Value {
    Value::Array(s.values.iter().map(nat).collect())
}

pub fn series(s: &RationalSeries) -> Value {
    json!({
        "numerator": poly(s.numerator()),
        "denominator": poly(s.denominator()),
        "text": s.to_string(),
    })
}

pub fn recurrence(r: &Recurrence) -> Value {
    json!({
        "order": r.order,
        "coefficients": r.coefficients.iter().map(rat).collect::<Vec<_>>(),
        "onset": r.onset,
    })
}

pub fn denominator(d: &DenominatorReport, warnings: &mut Warnings) -> Value {
    let caveat = match d.caveat {
        Some(Caveat::MixedCyclotomic) => {
            warnings.push(Warning::MixedCyclotomic);
            Value::from("mixed_cyclotomic")
        }
        Some(Caveat::Undetermined) => {
            warnings.push(Warning::UndeterminedRoots);
            Value::from("undetermined")
        }
        None => Value::Null,
    };
    json!({
        "radius_class": d.radius_class.name(),
        "s": d.s,
        "d": d.d,
        "cyclotomic": d.cyclotomic.iter().map(|&(k, m)| json!({"order": k, "multiplicity": m})).collect::<Vec<_>>(),
        "rational_roots": d.rational_roots.iter().map(|(r, m)| json!({"root": rat(r), "multiplicity": m})).collect::<Vec<_>>(),
        "remainder": poly(&d.remainder),
        "caveat": caveat,
    })
}

pub fn quasi(q: &QuasiPolynomial) -> Value {
    json!({
        "period": q.period,
        "onset": q.onset,
        "max_degree": q.max_degree(),
        "branches": q.branches.iter().map(poly).collect::<Vec<_>>(),
        "text": q.branches.iter().enumerate().map(|(r, b)| format!("n = {r} mod {}: {}", q.period, b.display_with("n"))).collect::<Vec<_>>(),
    })
}

pub fn growth(g: &GrowthReport, warnings: &mut Warnings) -> Value {
    warnings.push(Warning::SampledAgreement);
    if g.gamma_estimate.is_some() {
        warnings.push(Warning::GammaIsFloat);
    }
    if g.evidence == gkgrowth::samuel::Evidence::BranchesDisagree {
        warnings.push(Warning::BranchesDisagree);
    }
    if g.evidence == gkgrowth::samuel::Evidence::NoRecurrence {
        warnings.push(Warning::NoRecurrence);
    }
    let hs = g.hilbert_samuel.as_ref().map(|h| {
        json!({
            "binomial_coefficients": form(&h.form),
            "degree": h.form.degree(),
            "leading_monomial_coefficient": rat(&leading_monomial_coefficient(h)),
            "stabilization_index": h.stabilization_index,
            "text": h.form.to_string(),
        })
    });
    let denom = g.denominator.as_ref().map(|d| denominator(d, warnings));
    let gamma = g.gamma_estimate.as_ref().map(|e| {
        json!({
            "value": Number::from_f64(e.value).map_or(Value::Null, Value::Number),
            "trend": e.trend.name(),
        })
    });
    json!({
        "classification": g.classification.name(),
        "gk": g.gk,
        "multiplicity": opt(g.multiplicity.as_ref(), rat),
        "evidence": g.evidence.name(),
        "hilbert_samuel": hs,
        "recurrence": opt(g.recurrence.as_ref(), recurrence),
        "series": opt(g.series.as_ref(), series),
        "denominator": denom,
        "quasi_polynomial": opt(g.quasi.as_ref(), quasi),
        "gamma_estimate": gamma,
    })
}

pub fn axioms(r: &AxiomReport, balance: bool, warnings: &mut Warnings) -> Value {
    warnings.push(Warning::SampledAgreement);
    json!({
        "case": r.case.name(),
        "gk_triple": r.gk_triple.to_vec(),
        "e_values": opt(r.e_values.as_ref(), |e| Value::Array(e.iter().map(rat).collect())),
        "exactness_ok": r.exactness_ok,
        "additivity_ok": r.additivity_ok,
        "zero_clause_ok": r.zero_clause_ok,
        "dimension_balance_ok": balance,
        "dimensions": {
            "sub": dims(&r.dims[0]),
            "module": dims(&r.dims[1]),
            "quotient": dims(&r.dims[2]),
        },
        "notes": r.notes,
    })
}

pub fn chain(r: &ChainReport, warnings: &mut Warnings) -> Value {
    warnings.push(Warning::SampledAgreement);
    json!({
        "n": r.n,
        "e_m": rat(&r.e_m),
        "gk_m": r.gk_m,
        "bound_ok": r.bound_ok,
        "quotients_full_gk": r.quotients_full_gk,
        "notes": r.notes,
    })
}

/// A finished run: payload plus the metadata every report carries.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub input_digest: String,
    pub inconclusive: bool,
    pub payload: Value,
    pub summary: Vec<String>,
    pub warnings: Warnings,
}

impl Report {
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("spec_version".into(), Value::from(SPEC_VERSION));
        m.insert("tool_version".into(), Value::from(env!("CARGO_PKG_VERSION")));
        m.insert("command".into(), Value::from(self.command));
        m.insert("input_digest".into(), Value::from(self.input_digest.clone()));
        m.insert(
            "status".into(),
            Value::from(if self.inconclusive { "inconclusive" } else { "ok" }),
        );
        m.insert("payload".into(), self.payload.clone());
        m.insert(
            "warnings".into(),
            Value::Array(self.warnings.iter().map(|w| Value::from(w.text())).collect()),
        );
        Value::Object(m)
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("gkgrowth {} {}\n", env!("CARGO_PKG_VERSION"), self.command);
        out.push_str(&format!("input: {}\n", self.input_digest));
        for line in &self.summary {
            out.push_str(line);
            out.push('\n');
        }
        if self.inconclusive {
            out.push_str("status: inconclusive\n");
        }
        for w in self.warnings.iter() {
            out.push_str(&format!("warning: {}\n", w.text()));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gkgrowth::exactnum::rat_frac;

    #[test]
    fn rationals_are_pairs() {
        assert_eq!(rat(&rat_frac(-6, 4)).to_string(), "[-3,2]");
        let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(int(&huge).to_string(), "123456789012345678901234567890");
    }
}
