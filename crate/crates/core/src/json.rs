//! JSON forms of elements, index sets and results. Scalars always cross as
//! strings; term lists are sorted by `(k, l, m)`.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactalg::Scalar;
use crate::explorer::{CharacterTable, GenerationCertificate, Report, Verdict};
use crate::gtmodule::{Basis, Element, Index, Params};
use crate::hom::{Equation, HomResult, HomSolution};
use crate::subquot::{ClosureVerdict, IndexSet, Interval, IntervalSet, Witness};
use crate::window::Window;

fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

pub fn scalar(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn parse_scalar_value(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => Ok(s.parse()?),
        Value::Number(n) => n
            .as_i64()
            .map(Scalar::int)
            .ok_or_else(|| invalid(format!("coefficient {n} is not an integer; pass rationals as strings"))),
        other => Err(invalid(format!("expected a scalar, found {other}"))),
    }
}

pub fn index(i: Index) -> Value {
    json!({"k": i.k, "l": i.l, "m": i.m})
}

pub fn params(p: &Params) -> Value {
    json!({"mu1": p.mu1.to_string(), "mu2": p.mu2.to_string()})
}

pub fn window(w: &Window) -> Value {
    json!({"k": [w.k.0, w.k.1], "l": [w.l.0, w.l.1], "m": [0, w.m_max]})
}

fn terms<'a>(it: impl IntoIterator<Item = (Index, &'a Scalar)>) -> Value {
    Value::Array(
        it.into_iter()
            .map(|(i, c)| json!({"k": i.k, "l": i.l, "m": i.m, "c": c.to_string()}))
            .collect(),
    )
}

pub fn element(v: &Element) -> Value {
    json!({
        "basis": v.basis().name(),
        "mu1": v.params().mu1.to_string(),
        "mu2": v.params().mu2.to_string(),
        "terms": terms(v.terms()),
    })
}

/// Reads an element; `mu1`, `mu2` and `basis` default to `fallback` and
/// `basis` when absent, and must agree with them when both are given.
pub fn parse_element(v: &Value, fallback: Option<&Params>, basis: Option<Basis>) -> Result<Element> {
    let obj = v.as_object().ok_or_else(|| invalid("element must be a JSON object"))?;
    let b = match (obj.get("basis"), basis) {
        (Some(Value::String(s)), Some(b)) => {
            let parsed: Basis = s.parse()?;
            if parsed != b {
                return Err(Error::BasisMismatch {
                    expected: b,
                    found: parsed,
                });
            }
            b
        }
        (Some(Value::String(s)), None) => s.parse()?,
        (None, Some(b)) => b,
        _ => return Err(invalid("element needs a string \"basis\"")),
    };
    let field = |name: &str| -> Result<Option<Scalar>> { obj.get(name).map(parse_scalar_value).transpose() };
    let p = match (field("mu1")?, field("mu2")?, fallback) {
        (Some(a), Some(b), fb) => {
            let p = Params::new(a, b);
            if fb.is_some_and(|f| *f != p) {
                return Err(Error::ParamsMismatch);
            }
            p
        }
        (None, None, Some(f)) => f.clone(),
        _ => return Err(invalid("element needs both \"mu1\" and \"mu2\"")),
    };
    let mut out = Element::zero(&p, b);
    let list = match obj.get("terms") {
        Some(Value::Array(a)) => a.as_slice(),
        None => &[],
        Some(_) => return Err(invalid("\"terms\" must be an array")),
    };
    for t in list {
        let get = |n: &str| {
            t.get(n)
                .and_then(Value::as_i64)
                .ok_or_else(|| invalid(format!("term {t} needs an integer \"{n}\"")))
        };
        let i = Index::new(get("k")?, get("l")?, get("m")?);
        if i.m < 0 {
            return Err(invalid(format!("term {t} has m < 0")));
        }
        let c = parse_scalar_value(t.get("c").ok_or_else(|| invalid(format!("term {t} needs \"c\"")))?)?;
        out.add_term(i, &c);
    }
    Ok(out)
}

fn interval(iv: &Interval) -> Value {
    match (iv.lo, iv.hi) {
        (None, None) => json!("all"),
        (Some(a), None) => json!({"ge": a}),
        (None, Some(b)) => json!({"le": b}),
        (Some(a), Some(b)) if a == b => json!({"eq": a}),
        (Some(a), Some(b)) => json!({"in": [a, b]}),
    }
}

fn interval_set(s: &IntervalSet) -> Value {
    match s.pieces() {
        [] => json!({"any": []}),
        [one] => interval(one),
        many => json!({"any": many.iter().map(interval).collect::<Vec<_>>()}),
    }
}

pub fn index_set(j: &IndexSet) -> Value {
    let mut m = Map::new();
    m.insert("lbar".into(), interval_set(&j.lbar));
    if j.shift != (0, 0) {
        m.insert("shift".into(), json!([j.shift.0, j.shift.1]));
    }
    Value::Object(m)
}

fn parse_interval_set(v: &Value) -> Result<IntervalSet> {
    if v.as_str() == Some("all") {
        return Ok(IntervalSet::all());
    }
    let obj = v.as_object().ok_or_else(|| invalid(format!("bad lbar set {v}")))?;
    let int = |x: &Value| x.as_i64().ok_or_else(|| invalid(format!("expected an integer, found {x}")));
    let mut out = IntervalSet::empty();
    for (key, val) in obj {
        let piece = match key.as_str() {
            "ge" => IntervalSet::ge(int(val)?),
            "le" => IntervalSet::le(int(val)?),
            "eq" => {
                let c = int(val)?;
                IntervalSet::range(c, c)
            }
            "in" => match val.as_array().map(Vec::as_slice) {
                Some([a, b]) => IntervalSet::range(int(a)?, int(b)?),
                _ => return Err(invalid("\"in\" takes [a, b]")),
            },
            "any" => {
                let arr = val.as_array().ok_or_else(|| invalid("\"any\" takes a list"))?;
                arr.iter()
                    .map(parse_interval_set)
                    .collect::<Result<Vec<_>>>()?
                    .iter()
                    .fold(IntervalSet::empty(), |acc, s| acc.union(s))
            }
            other => return Err(invalid(format!("unknown lbar key {other:?}"))),
        };
        out = out.union(&piece);
    }
    Ok(out)
}

/// `{"lbar": {"ge": 0}}`, `{"lbar": {"in": [0, 1]}}`, `{"lbar": "all"}`, with
/// an optional `"shift": [dk, dl]`. A bare string is parsed as in the CLI.
pub fn parse_index_set(v: &Value) -> Result<IndexSet> {
    if let Value::String(s) = v {
        return s.parse();
    }
    let obj = v.as_object().ok_or_else(|| invalid("index set must be an object or string"))?;
    let lbar = parse_interval_set(obj.get("lbar").ok_or_else(|| invalid("index set needs \"lbar\""))?)?;
    let shift = match obj.get("shift") {
        None => (0, 0),
        Some(s) => match s.as_array().map(Vec::as_slice) {
            Some([a, b]) => (
                a.as_i64().ok_or_else(|| invalid("shift entries are integers"))?,
                b.as_i64().ok_or_else(|| invalid("shift entries are integers"))?,
            ),
            _ => return Err(invalid("\"shift\" takes [dk, dl]")),
        },
    };
    Ok(IndexSet { lbar, shift })
}

pub fn witness(w: &Witness) -> Value {
    json!({
        "index": index(w.index),
        "generator": w.generator.name(),
        "target": index(w.target),
        "coeff": w.coeff.to_string(),
    })
}

pub fn closure(v: &ClosureVerdict) -> Value {
    json!({
        "closed": v.closed,
        "escapes": v.escapes,
        "witnesses": v.witnesses.iter().map(witness).collect::<Vec<_>>(),
        "note": v.note,
    })
}

pub fn hom_solution(h: &HomSolution) -> Value {
    json!({"seed": index(h.seed), "coefficients": terms(h.x.iter().map(|(i, c)| (*i, c)))})
}

pub fn equation(e: &Equation) -> Value {
    json!({
        "source": index(e.source),
        "generator": e.generator.name(),
        "target": index(e.target),
        "terms": terms(e.terms.iter().map(|(i, c)| (*i, c))),
    })
}

pub fn hom_result(r: &HomResult, obstructions: &[Index]) -> Value {
    json!({
        "dimension": r.dimension(),
        "unknowns": r.unknowns,
        "equations": r.equations,
        "solutions": r.solutions.iter().map(hom_solution).collect::<Vec<_>>(),
        "obstructions": obstructions.iter().map(|i| index(*i)).collect::<Vec<_>>(),
    })
}

pub fn certificate(c: &GenerationCertificate) -> Value {
    let verdict = match &c.verdict {
        Verdict::CoversWindow => json!("covers-window"),
        Verdict::Stuck { missing, frontier } => json!({
            "stuck": {"missing": missing, "frontier": frontier.iter().map(|i| index(*i)).collect::<Vec<_>>()}
        }),
    };
    json!({
        "module": c.module,
        "window": window(&c.window),
        "start": c.start.iter().map(|i| index(*i)).collect::<Vec<_>>(),
        "reached": c.reached.len(),
        "verdict": verdict,
        "note": "finite-window certificate",
    })
}

pub fn character(t: &CharacterTable) -> Value {
    json!({
        "cone": t.r,
        "weight": "mu1*alpha1 + a*alpha1 + b*alpha2",
        "entries": t.entries.iter().map(|((a, b), n)| json!({"a": a, "b": b, "mult": n})).collect::<Vec<_>>(),
    })
}

pub fn report(r: &Report, w: Option<&Window>) -> Value {
    json!({
        "check": r.check,
        "params": params(&r.params),
        "window": w.map(window),
        "verdict": if r.pass() { "pass" } else { "fail" },
        "subchecks": r.subchecks.iter().map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail})).collect::<Vec<_>>(),
        "witnesses": r.witnesses.iter().map(witness).collect::<Vec<_>>(),
    })
}

pub fn error(e: &Error) -> Value {
    json!({"error": e.to_string()})
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_roundtrip() {
        let p = Params::ratios((1, 3), (1, 5));
        let v = Element::from_terms(&p, Basis::W, [(Index::new(0, 0, 1), Scalar::ratio(-8, 15)), (Index::new(-1, 2, 0), Scalar::int(3))]);
        let j = element(&v);
        assert_eq!(j["terms"][0], json!({"k": -1, "l": 2, "m": 0, "c": "3"}));
        assert_eq!(parse_element(&j, None, None).unwrap(), v);
        assert_eq!(parse_element(&j, Some(&p), Some(Basis::W)).unwrap(), v);
        assert!(parse_element(&j, None, Some(Basis::U)).is_err());
        assert!(parse_element(&j, Some(&Params::ratios((1, 2), (1, 5))), None).is_err());
    }

    #[test]
    fn element_defaults_and_empty() {
        let p = Params::ratios((1, 3), (1, 5));
        let v = parse_element(&json!({"terms": []}), Some(&p), Some(Basis::U)).unwrap();
        assert!(v.is_zero());
        assert!(parse_element(&json!({"basis": "w", "terms": [{"k": 0, "l": 0, "m": -1, "c": "1"}]}), Some(&p), None).is_err());
    }

    #[test]
    fn symbolic_element_roundtrip() {
        let p = Params::symbolic();
        let v = Element::from_terms(&p, Basis::U, [(Index::new(1, 0, 0), p.kbar(1))]);
        assert_eq!(parse_element(&element(&v), None, None).unwrap(), v);
    }

    #[test]
    fn index_set_roundtrip() {
        for j in [IndexSet::ge(0), IndexSet::range(0, 1), IndexSet::le(-1), IndexSet::eq(1), IndexSet::all()] {
            assert_eq!(parse_index_set(&index_set(&j)).unwrap(), j);
        }
        assert_eq!(index_set(&IndexSet::ge(0)), json!({"lbar": {"ge": 0}}));
        assert_eq!(index_set(&IndexSet::range(0, 1)), json!({"lbar": {"in": [0, 1]}}));
        let shifted = parse_index_set(&json!({"lbar": {"ge": 0}, "shift": [1, 2]})).unwrap();
        assert_eq!(shifted.shift, (1, 2));
        assert_eq!(parse_index_set(&json!("lbar<=-1")).unwrap(), IndexSet::le(-1));
        let u = IndexSet::le(0).lbar.union(&IntervalSet::ge(2));
        let j = IndexSet::new(u);
        assert_eq!(parse_index_set(&index_set(&j)).unwrap(), j);
    }
}
