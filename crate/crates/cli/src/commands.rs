use std::io::Write;

use rayon::prelude::*;
use serde_json::{json, Value};

use gtsl3::checks::{self, CheckContext, REGISTRY};
use gtsl3::dual::pairing;
use gtsl3::explorer::{character, generate};
use gtsl3::gtmodule::{act, act_word, u_to_w, w_to_u};
use gtsl3::hom::{image_kernel, solve_by_recurrence, solve_intertwiner};
use gtsl3::json;
use gtsl3::subquot::{classify, is_closed, Classification};
use gtsl3::{
    Basis, Element, Error, Generator, GeneratorWord, HomProblem, IndexSet, ModuleDescriptor, Result, Scalar, Window,
};

use crate::{invalid, parse_index, read_arg, Cli, Command, ElementInput, Global};

fn line(s: impl std::fmt::Display) {
    // a closed pipe (e.g. `| head`) is not an error worth a panic
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn emit(g: &Global, value: Value, text: impl FnOnce() -> String) {
    if g.json {
        line(value);
    } else {
        line(text());
    }
}

fn read_element(g: &Global, input: &ElementInput, basis: Option<Basis>) -> Result<Element> {
    let defaults = g.params(false)?;
    match (&input.element, &input.index) {
        (Some(src), _) => {
            let v: Value = serde_json::from_str(&read_arg(src)?).map_err(|e| invalid(format!("element JSON: {e}")))?;
            let has_params = v.get("mu1").is_some() || v.get("mu2").is_some();
            let fallback = (g.explicit_params() || g.symbolic || !has_params).then_some(&defaults);
            json::parse_element(&v, fallback, basis)
        }
        (None, Some(i)) => {
            let b = basis.ok_or_else(|| invalid("--index needs a basis"))?;
            Ok(Element::basis_vector(&defaults, b, parse_index(i)?))
        }
        (None, None) => Err(invalid("give --element or --index")),
    }
}

fn is_full(descriptor: &str) -> bool {
    matches!(descriptor.trim(), "" | "full" | "dual" | "dual:" | "dual:full" | "all" | "dual:all")
}

pub fn run(cli: &Cli) -> Result<u8> {
    let g = &cli.global;
    match &cli.command {
        Command::Act { basis, generator, word, input } => {
            let b: Basis = basis.parse()?;
            let v = read_element(g, input, Some(b))?;
            let out = match (generator, word) {
                (Some(x), None) => act(x.parse::<Generator>().map_err(invalid)?, &v)?,
                (None, Some(w)) => act_word(&w.parse::<GeneratorWord>().map_err(invalid)?, &v)?,
                _ => return Err(invalid("give exactly one of --gen and --word")),
            };
            emit(g, json::element(&out), || out.to_string());
        }
        Command::ChangeBasis { to, input } => {
            let to: Basis = to.parse()?;
            let out = match to {
                Basis::W => u_to_w(&read_element(g, input, Some(Basis::U))?)?,
                Basis::U => w_to_u(&read_element(g, input, Some(Basis::W))?)?,
                Basis::Eta => return Err(invalid("change-basis converts between u and w")),
            };
            emit(g, json::element(&out), || out.to_string());
        }
        Command::Pair { eta, w } => {
            let d = read_element(g, &ElementInput { element: Some(eta.clone()), index: None }, Some(Basis::Eta))?;
            let v = read_element(g, &ElementInput { element: Some(w.clone()), index: None }, Some(Basis::W))?;
            let value = pairing(&d, &v)?;
            emit(g, json!({"value": value.to_string()}), || value.to_string());
        }
        Command::Hom { source, target, seed } => {
            let p = g.params(!(is_full(source) && is_full(target)))?;
            let r = g.window.unwrap_or(4);
            let prob = HomProblem::new(ModuleDescriptor::parse(&p, source)?, ModuleDescriptor::parse(&p, target)?, Window::radius(&p, r))?;
            let res = solve_intertwiner(&prob)?;
            let mut obstructions = Vec::new();
            let mut recurrence = None;
            if let Some(s) = seed {
                match solve_by_recurrence(&prob, parse_index(s)?, &Scalar::one()) {
                    Ok(h) => recurrence = Some(json::hom_solution(&h)),
                    Err(Error::ObstructionAtIndex(i)) => obstructions.push(i),
                    Err(e) => return Err(e),
                }
            }
            let mut out = json::hom_result(&res, &obstructions);
            if let [h] = res.solutions.as_slice() {
                if let Ok((img, ker)) = image_kernel(&prob, h) {
                    out["image"] = json!(img.to_string());
                    out["kernel"] = json!(ker.to_string());
                }
            }
            out["source"] = json!(prob.source.to_string());
            out["target"] = json!(prob.target.to_string());
            out["window"] = json::window(&prob.window);
            if let Some(rv) = recurrence {
                out["recurrence"] = rv;
            }
            let text = || {
                let mut s = format!("Hom({}, {}) on window radius {r}: dimension {}", prob.source, prob.target, res.dimension());
                for (n, h) in res.solutions.iter().enumerate() {
                    s.push_str(&format!("\nsolution {n}: seed {} nonzero at {} indices", h.seed, h.x.values().filter(|c| !c.is_zero()).count()));
                }
                if let (Some(i), Some(k)) = (out.get("image"), out.get("kernel")) {
                    s.push_str(&format!("\nimage {}, kernel {}", i.as_str().unwrap_or(""), k.as_str().unwrap_or("")));
                }
                for i in &obstructions {
                    s.push_str(&format!("\nobstruction at {i}"));
                }
                s
            };
            let text = text();
            emit(g, out, || text);
        }
        Command::Generate { start, module } => {
            let p = g.params(!is_full(module))?;
            let s = ModuleDescriptor::parse(&p, module)?;
            let starts = start
                .iter()
                .flat_map(|s| s.split(';'))
                .map(parse_index)
                .collect::<Result<Vec<_>>>()?;
            let w = Window::radius(&p, g.window.unwrap_or(3));
            let c = generate(&starts, &s, &w)?;
            let out = json::certificate(&c);
            emit(g, out.clone(), || match &c.verdict {
                gtsl3::explorer::Verdict::CoversWindow => format!("{}: covers the window ({} indices)", c.module, c.reached.len()),
                gtsl3::explorer::Verdict::Stuck { missing, frontier } => format!(
                    "{}: stuck after {} indices, {missing} unreached, frontier {}",
                    c.module,
                    c.reached.len(),
                    frontier.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
                ),
            });
        }
        Command::Character { module, cone } => {
            let p = g.params(true)?;
            let t = character(&ModuleDescriptor::parse(&p, module)?, *cone)?;
            emit(g, json::character(&t), || {
                t.entries
                    .iter()
                    .map(|((a, b), n)| format!("mu1*a1 {a:+}*a1 {b:+}*a2: {n}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        Command::Classify { set, basis } => {
            let p = g.params(true)?;
            let b: Basis = basis.parse()?;
            let j: IndexSet = set.parse()?;
            let w = Window::radius(&p, g.window.unwrap_or(3));
            let c = classify(&p, b, &j, &w)?;
            let closure = is_closed(&p, b, &j, &w)?;
            let mut out = json!({
                "set": j.to_string(),
                "basis": b.name(),
                "class": c.name(),
                "window": json::window(&w),
                "closure": json::closure(&closure),
            });
            if let Classification::Subquotient { outer, inner } = &c {
                out["outer"] = json!(outer.to_string());
                out["inner"] = json!(inner.to_string());
            }
            let name = c.name();
            emit(g, out, || name.to_string());
        }
        Command::VerifyPaper { check, list, seed } => {
            if *list {
                for c in REGISTRY {
                    line(format!("{:<18} {}", c.id, c.description));
                }
                return Ok(0);
            }
            let selected: Vec<_> = match check {
                Some(id) => vec![checks::find(id).ok_or_else(|| invalid(format!("unknown check {id:?}")))?],
                None => REGISTRY.iter().collect(),
            };
            let ctx = CheckContext {
                params: if g.explicit_params() { Some(g.params(false)?) } else { None },
                radius: g.window,
                symbolic: g.symbolic,
                seed: *seed,
            };
            let outcomes: Vec<_> = selected.par_iter().map(|c| checks::run(c, &ctx)).collect();
            for o in &outcomes {
                line(&o.report);
            }
            return Ok(if outcomes.iter().all(|o| o.pass) { 0 } else { 1 });
        }
    }
    Ok(0)
}
