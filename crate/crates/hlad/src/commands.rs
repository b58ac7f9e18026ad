//! One function per subcommand. Each returns the JSON document to print and
//! whether the verification it performs passed.

use hlad_core::arakawa_suzuki as as_;
use hlad_core::forms::{self, StarOp};
use hlad_core::hecke::verify_star_relation;
use hlad_core::panel::{self, LadderAudit};
use hlad_core::standard::{self, EmptyRule};
use hlad_core::{cherednik, nilpairs, tableaux};
use hlad_core::{ModuleRep, Multisegment, SkewDiagram, Weight};
use serde_json::{json, Value};

use crate::{json as enc, CliError};

/// Largest rank for which `S_n` is enumerated in full.
pub const MAX_ENUMERATION_RANK: usize = 9;

pub struct Report {
    pub value: Value,
    pub passed: bool,
}

impl Report {
    fn ok(value: Value) -> Self {
        Report { value, passed: true }
    }
}

pub fn cherednik(m: &Multisegment) -> Result<Report, CliError> {
    Ok(Report::ok(enc::module(&cherednik::build(m)?)))
}

pub fn tableaux(m: &Multisegment) -> Result<Report, CliError> {
    let lambda = m.lambda()?;
    let list: Vec<Value> = tableaux::enumerate(m)?
        .iter()
        .map(|t| {
            let w = t.to_perm();
            json!({
                "tableau": t.to_string(),
                "permutation": w.to_string(),
                "weight": enc::weight(&w.act_on_weight(&lambda)),
            })
        })
        .collect();
    Ok(Report::ok(json!({
        "multisegment": m.to_string(),
        "count": list.len(),
        "tableaux": list,
    })))
}

pub fn char_determinantal(m: &Multisegment) -> Result<Report, CliError> {
    let c = standard::determinantal_character(m)?;
    Ok(Report::ok(json!({
        "multisegment": m.to_string(),
        "dim": c.mass(),
        "character": enc::character(&c),
    })))
}

pub fn char_verify(m: &Multisegment) -> Result<Report, CliError> {
    let det = standard::determinantal_character(m)?;
    let module = standard::formal_character(&cherednik::build(m)?)?;
    let literal = standard::determinantal_character_with(m, EmptyRule::KillAll)?;
    let equal = det == module;
    Ok(Report {
        passed: equal,
        value: json!({
            "multisegment": m.to_string(),
            "determinantal": enc::character(&det),
            "module": enc::character(&module),
            "equal": equal,
            "literal_rule_equal": literal == module,
        }),
    })
}

pub fn form(m: &ModuleRep, op: StarOp) -> Result<Report, CliError> {
    let report = forms::form_report(m, op)?;
    let mut v = json!({
        "op": match op { StarOp::Bullet => "bullet", StarOp::Star => "star" },
        "dim_space": report.dim_space,
        "form": report.form.as_ref().map(enc::matrix),
        "signature": report.signature.as_ref().map(enc::inertia),
        "unitary": report.unitary,
    });
    if op == StarOp::Bullet {
        v["unit_implies_ss"] = json!(format!("{:?}", forms::check_unit_ss(m)?));
    }
    Ok(Report::ok(v))
}

fn audit_json(a: &LadderAudit) -> Value {
    json!({
        "multisegment": a.multisegment.to_string(),
        "dim": a.dim,
        "tableaux": a.tableaux,
        "relations": a.relations,
        "structure": a.structure,
        "determinantal": a.determinantal,
        "unitary": a.unitary,
        "unit_ss": a.unit_ss,
        "passed": a.passed(),
    })
}

pub fn verify_ladder(m: &Multisegment) -> Result<Report, CliError> {
    let audit = panel::audit_ladder(m)?;
    let mut v = audit_json(&audit);
    if m.n() <= 8 {
        let norm = cherednik::w_irreducibility_norm(&cherednik::build(m)?, 8)?;
        v["w_norm"] = enc::rational(&norm);
    }
    Ok(Report {
        passed: audit.passed(),
        value: v,
    })
}

pub fn verify_module(m: &ModuleRep) -> Result<Report, CliError> {
    let failures: Vec<String> = m.verify_module_relations().iter().map(ToString::to_string).collect();
    let semisimple = if failures.is_empty() {
        Some(cherednik::is_A_semisimple(m)?)
    } else {
        None
    };
    Ok(Report {
        passed: failures.is_empty(),
        value: json!({
            "dim": m.dim,
            "failed_relations": failures,
            "a_semisimple": semisimple,
        }),
    })
}

pub fn verify_star(n: usize) -> Result<Report, CliError> {
    let checks = verify_star_relation(n, 6)?;
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.element.as_str()).collect();
    Ok(Report {
        passed: failed.is_empty(),
        value: json!({ "n": n, "checked": checks.len(), "failed": failed }),
    })
}

fn shape_json(sigma: &SkewDiagram, a: i64) -> Result<(Value, bool), CliError> {
    let pair = nilpairs::from_skew(sigma)?;
    let ss = nilpairs::semisimple_pair(sigma)?;
    let relations = nilpairs::verify_pair_relations(&pair, &ss);
    let centralizer = nilpairs::centralizer_dim(&pair);
    let mut v = json!({
        "shape": sigma.to_string(),
        "a": a,
        "multisegment": sigma.to_multisegment(a)?.to_string(),
        "relations": relations,
        "centralizer_dim": centralizer,
        "principal": nilpairs::is_principal_by_dim(&pair),
        "young": sigma.is_young(),
    });
    let mut passed = relations && (!sigma.is_young() || nilpairs::is_principal_by_dim(&pair));
    if pair.n <= MAX_ENUMERATION_RANK {
        let buv = nilpairs::verify_buv(sigma, a, MAX_ENUMERATION_RANK)?;
        v["borel_count"] = json!(buv.borel.len());
        v["buv_literal_equal"] = json!(buv.literal_equal);
        v["buv_equal_up_to_inverse"] = json!(buv.equal_up_to_inverse);
        v["weights_injective"] = json!(buv.weights_injective);
        passed &= buv.passed();
    }
    v["passed"] = json!(passed);
    Ok((v, passed))
}

pub fn nilpair(sigma: &SkewDiagram, a: i64) -> Result<Report, CliError> {
    let (mut v, passed) = shape_json(sigma, a)?;
    let pair = nilpairs::from_skew(sigma)?;
    let ss = nilpairs::semisimple_pair(sigma)?;
    v["e1"] = enc::matrix(&pair.e1);
    v["e2"] = enc::matrix(&pair.e2);
    v["h1"] = enc::matrix(&ss.h1);
    v["h2"] = enc::matrix(&ss.h2);
    Ok(Report { value: v, passed })
}

pub fn as_verify(m: &Multisegment, capacity: usize) -> Result<Report, CliError> {
    let r = as_::verify_as_ladder(m, capacity)?;
    Ok(Report {
        passed: r.isomorphic,
        value: json!({
            "multisegment": m.to_string(),
            "shift": enc::rational(&r.shift),
            "mu": r.mu,
            "lambda": enc::weight(&r.lambda),
            "ell": r.ell,
            "functor_dim": r.functor_dim,
            "ladder_dim": r.ladder_dim,
            "isomorphic": r.isomorphic,
        }),
    })
}

pub fn as_functor(n: usize, mu: &[i64], ell: usize, lambda: &Weight, capacity: usize) -> Result<Report, CliError> {
    let x = as_::l_of_weight(n, mu, capacity)?;
    let m = as_::coinvariants_weight_space(&x, ell, lambda, capacity)?;
    Ok(Report::ok(enc::module(&m)))
}

pub fn panel(max_n: usize, window: i64, max_boxes: usize) -> Result<Report, CliError> {
    let mut ladders = Vec::new();
    let mut failed = Vec::new();
    for m in panel::ladders(max_n, window) {
        let audit = panel::audit_ladder(&m)?;
        if !audit.passed() {
            failed.push(m.to_string());
        }
        ladders.push(audit_json(&audit));
    }
    let mut shapes = Vec::new();
    for sigma in panel::connected_shapes(max_boxes) {
        let (v, passed) = shape_json(&sigma, 0)?;
        if !passed {
            failed.push(sigma.to_string());
        }
        shapes.push(v);
    }
    let all = panel::connected_shapes(max_boxes);
    let speh_match = panel::rectangles_match_speh(&all, 0)?;
    let passed = failed.is_empty() && speh_match;
    let (n_ladders, n_shapes) = (ladders.len(), shapes.len());
    Ok(Report {
        passed,
        value: json!({
            "max_n": max_n,
            "content_window": window,
            "max_boxes": max_boxes,
            "ladders": ladders,
            "shapes": shapes,
            "summary": {
                "ladders": n_ladders,
                "shapes": n_shapes,
                "rectangles_are_speh": speh_match,
                "failed": failed,
                "passed": passed,
            },
        }),
    })
}
