use hopfeq::catalog::{builtin, BUILTIN_NAMES};
use hopfeq::comodule::{
    can_map, coarser_morphism, detect_grading, grading_to_coaction, induced_dual_module, relations_form_coideal,
    support_coalgebra, support_equivalent, universal_hopf_presentation, Coaction,
};
use hopfeq::exactlin::{FieldSpec, Matrix, Scalar};
use hopfeq::grading::{enumerate_group, GroupPresentation};
use hopfeq::hident::{codim, codim_equiv_check, codim_series, dual_numbers_invariant_ideal_dim, graded_codim, growth_check, GrowthWindow};
use hopfeq::json::{to_value, Document};
use hopfeq::modulealg::{regular_action_on_dual, ModuleStructure};
use hopfeq::structconst::{FiniteGroup, Report};
use hopfeq::{Error, Result};
use serde_json::{json, Value};

use crate::input::{field_of, iso, Input};
use crate::{Cli, EquivKind, Outcome, Verb};

macro_rules! with_field {
    ($field:expr, $S:ident => $body:expr) => {
        match $field {
            FieldSpec::Q => {
                type $S = hopfeq::Q;
                $body
            }
            FieldSpec::Fp { p } => {
                crate::modp::set_modulus(p)?;
                type $S = crate::modp::ModP;
                $body
            }
        }
    };
}

fn inputs_of(verb: &Verb) -> Vec<&str> {
    match verb {
        Verb::Equiv(a) => vec![&a.first, &a.second],
        Verb::Finer { first, second } => vec![first, second],
        Verb::Check { input }
        | Verb::SupportCoalgebra { input }
        | Verb::UniversalGroup { input, .. }
        | Verb::UniversalHopf { input }
        | Verb::DetectGrading { input }
        | Verb::Can { input }
        | Verb::Correspondence { input }
        | Verb::CocommData { input, .. }
        | Verb::Obstruction { input, .. }
        | Verb::ClassifyDual { input }
        | Verb::GradedCodim { input, .. }
        | Verb::RegularDual { input } => vec![input],
        Verb::Codim(a) => vec![&a.input],
        Verb::Example { .. } => vec![],
    }
}

pub fn run(cli: &Cli) -> Result<(FieldSpec, Outcome)> {
    let inputs = inputs_of(&cli.verb).into_iter().map(Input::load).collect::<Result<Vec<_>>>()?;
    let field = field_of(&inputs.iter().collect::<Vec<_>>(), cli.field)?;
    let out = with_field!(field, S => run_in::<S>(cli, &inputs))?;
    Ok((field, out))
}

fn outcome(ok: bool, mut report: Value) -> Outcome {
    if report.get("status").is_none() {
        report["status"] = json!(if ok { "true" } else { "false" });
    }
    Outcome { code: if ok { 0 } else { 1 }, report }
}

fn report_value(r: &Report) -> Value {
    json!({
        "status": if r.passed() { "pass" } else { "fail" },
        "failures": r.failures,
        "unital": r.unital,
    })
}

fn to_module<S: Scalar>(d: Document<S>) -> Result<ModuleStructure<S>> {
    match d {
        Document::Module(m) => Ok(m),
        Document::Grading(g) => g.dual_action(),
        Document::Coaction(c) => Ok(induced_dual_module(&c)),
        Document::GroupAction(a) => Ok(a.to_module()),
        other => Err(Error::Precondition(format!("expected a module structure, got {}", other.kind().name()))),
    }
}

fn to_coaction<S: Scalar>(d: Document<S>) -> Result<Coaction<S>> {
    match d {
        Document::Coaction(c) => Ok(c),
        Document::Grading(g) => grading_to_coaction(&g),
        Document::Module(m) => Ok(m.to_coaction()),
        Document::GroupAction(a) => Ok(a.to_module().to_coaction()),
        other => Err(Error::Precondition(format!("expected a coaction, got {}", other.kind().name()))),
    }
}

fn presentation_value(p: &GroupPresentation) -> Value {
    serde_json::to_value(p).unwrap()
}

fn named_group(name: &str) -> Result<FiniteGroup> {
    match name {
        "trivial" => Ok(FiniteGroup::trivial()),
        _ => match builtin::<hopfeq::Q>(name)? {
            Document::Group(g) => Ok(g),
            _ => Err(Error::InvalidParams(format!("{name} is not a group"))),
        },
    }
}

fn element_index(names: &[String], s: &str) -> Result<usize> {
    names
        .iter()
        .position(|n| n == s)
        .or_else(|| s.parse().ok().filter(|&i: &usize| i < names.len()))
        .ok_or_else(|| Error::InvalidParams(format!("unknown basis element {s:?}")))
}

fn run_in<S: Scalar>(cli: &Cli, inputs: &[Input]) -> Result<Outcome> {
    let doc = |i: usize| inputs[i].document::<S>();
    match &cli.verb {
        Verb::Check { .. } => {
            let d = doc(0)?;
            let kind = d.kind().name();
            let mut v = match &d {
                Document::Algebra(a) => report_value(&a.check()),
                Document::Hopf(h) => report_value(&h.check()),
                Document::Group(g) => match g.validate() {
                    Ok(()) => json!({ "status": "pass", "failures": [] }),
                    Err(e) => json!({ "status": "fail", "error": e.to_string() }),
                },
                Document::Grading(g) => report_value(&g.check()),
                Document::Module(m) => {
                    let mut v = report_value(&m.check());
                    if let Ok(e) = m.check_unital_eigen() {
                        v["unital_eigen"] = serde_json::to_value(e).unwrap();
                    }
                    v
                }
                Document::GroupAction(a) => report_value(&a.check()),
                Document::Coaction(c) => report_value(&c.check()),
            };
            let ok = v["status"] == "pass";
            v["kind"] = json!(kind);
            Ok(outcome(ok, v))
        }
        Verb::Equiv(args) => {
            let (a, b) = (doc(0)?, doc(1)?);
            let kind = args.kind.unwrap_or(match (a.kind(), b.kind()) {
                (hopfeq::json::Kind::Grading, hopfeq::json::Kind::Grading) => EquivKind::Grading,
                (hopfeq::json::Kind::Coaction, _) | (_, hopfeq::json::Kind::Coaction) => EquivKind::Comodule,
                (hopfeq::json::Kind::GroupAction, hopfeq::json::Kind::GroupAction) => EquivKind::GroupAction,
                _ => EquivKind::Module,
            });
            let n = match &a {
                Document::Grading(g) => g.algebra.dim(),
                Document::Module(m) => m.algebra.dim(),
                Document::Coaction(c) => c.algebra.dim(),
                Document::GroupAction(x) => x.algebra.dim(),
                Document::Algebra(x) => x.dim(),
                _ => return Err(Error::Precondition("equivalence needs structures on algebras".into())),
            };
            let phi: Matrix<S> = iso(&args.iso, n)?;
            match kind {
                EquivKind::Grading => {
                    let (Document::Grading(g1), Document::Grading(g2)) = (a, b) else {
                        return Err(Error::Precondition("--kind grading needs two gradings".into()));
                    };
                    let e = g1.equivalent(&g2, &phi)?;
                    let bij: Vec<Value> = e
                        .bijection
                        .iter()
                        .map(|(x, y)| json!([g1.group.names[*x], g2.group.names[*y]]))
                        .collect();
                    Ok(outcome(
                        e.equivalent,
                        json!({ "kind": "grading", "equivalent": e.equivalent, "bijection": bij, "separating": e.separating }),
                    ))
                }
                EquivKind::Module => {
                    let (m1, m2) = (to_module(a)?, to_module(b)?);
                    let e = m1.support_equivalent(&m2, &phi)?;
                    let mut v = json!({
                        "kind": "module",
                        "equivalent": e.equivalent,
                        "span_dims": [m1.image_span().dim(), m2.image_span().dim()],
                        "certificate": e.lambda,
                    });
                    let mut ok = e.equivalent;
                    if let (Some(k), true) = (args.codim, e.equivalent) {
                        let cfg = args.budget.config()?;
                        let mut rows = Vec::new();
                        for deg in 1..=k {
                            let r = codim_equiv_check(&m1, &m2, &phi, deg, &cfg)?;
                            ok &= r.equal;
                            rows.push(r);
                        }
                        v["codim"] = serde_json::to_value(rows).unwrap();
                    }
                    Ok(outcome(ok, v))
                }
                EquivKind::Comodule => {
                    let (c1, c2) = (to_coaction(a)?, to_coaction(b)?);
                    let e = support_equivalent(&c1, &c2, &phi)?;
                    Ok(outcome(e.equivalent, json!({ "kind": "comodule", "equivalent": e.equivalent, "certificate": e })))
                }
                EquivKind::GroupAction => {
                    let (Document::GroupAction(x1), Document::GroupAction(x2)) = (a, b) else {
                        return Err(Error::Precondition("--kind group-action needs two group actions".into()));
                    };
                    let eq = x1.equivalent(&x2, &phi)?;
                    Ok(outcome(eq, json!({ "kind": "group-action", "equivalent": eq })))
                }
            }
        }
        Verb::Finer { .. } => {
            let (a, b) = (doc(0)?, doc(1)?);
            let (finer, kind) = match (a, b) {
                (Document::Grading(g1), Document::Grading(g2)) => (g1.finer_than(&g2)?, "grading"),
                (a @ Document::Coaction(_), b) | (a, b @ Document::Coaction(_)) => {
                    let (c1, c2) = (to_coaction(a)?, to_coaction(b)?);
                    (coarser_morphism(&c1, &c2)?.is_some(), "comodule")
                }
                (a, b) => (to_module(a)?.finer_than(&to_module(b)?)?, "module"),
            };
            Ok(outcome(finer, json!({ "kind": kind, "finer": finer })))
        }
        Verb::SupportCoalgebra { .. } => {
            let c = to_coaction(doc(0)?)?;
            let sc = support_coalgebra(&c)?;
            let gl = c.hopf.grouplikes();
            let grouplike_basis = gl.complete().map(|els| {
                let inside = els.iter().filter(|g| sc.as_subspace().contains_vector(g)).count();
                inside == sc.dim()
            });
            Ok(outcome(
                true,
                json!({
                    "status": "pass",
                    "dim": sc.dim(),
                    "generators": sc.generators.iter().map(|(a, b)| json!({"alpha": a, "beta": b})).collect::<Vec<_>>(),
                    "inclusion": sc.inclusion,
                    "coalgebra_check": report_value(&sc.coalgebra.check()),
                    "grouplike_basis": grouplike_basis,
                }),
            ))
        }
        Verb::UniversalGroup { coset_budget, regrade, map, .. } => {
            let Document::Grading(g) = doc(0)? else {
                return Err(Error::Precondition("universal-group needs a grading".into()));
            };
            let pres = g.universal_group()?;
            let mut v = json!({ "presentation": presentation_value(&pres) });
            if pres.abelianization_order().is_none() {
                v["order"] = json!("infinite");
            } else {
                let grp = enumerate_group(&pres, *coset_budget)?;
                v["order"] = json!(grp.order());
                v["abelian"] = json!(grp.is_abelian());
            }
            let mut ok = true;
            if let Some(name) = regrade {
                let target = named_group(name)?;
                let gen_map = map.iter().map(|s| element_index(&target.names, s)).collect::<Result<Vec<_>>>()?;
                let r = g.verify_regrading(&target, &gen_map)?;
                ok = r.relations_hold && r.regrading_valid;
                v["regrading"] = serde_json::to_value(r).unwrap();
            }
            v["status"] = json!(if ok { "pass" } else { "fail" });
            Ok(outcome(ok, v))
        }
        Verb::UniversalHopf { .. } => {
            let c = to_coaction(doc(0)?)?;
            let p = universal_hopf_presentation(&c)?;
            let counit_zero = p.relations.iter().all(|r| r.poly.eval(&p.counit).is_zero());
            let coideal = relations_form_coideal(&c);
            let relations: Vec<Value> = p
                .relations
                .iter()
                .map(|r| {
                    json!({
                        "alpha": r.alpha, "beta": r.beta, "gamma": r.gamma,
                        "terms": r.poly.terms.iter().map(|(c, w)| json!({"coef": c, "word": w})).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let ok = counit_zero && coideal;
            Ok(outcome(
                ok,
                json!({
                    "status": if ok { "pass" } else { "fail" },
                    "generators": p.generators.iter().map(|(a, b)| json!({"alpha": a, "beta": b})).collect::<Vec<_>>(),
                    "lin_deps": p.lin_deps,
                    "relations": relations,
                    "delta": p.delta,
                    "counit": p.counit,
                    "antipode_closed": p.antipode_closed,
                    "unit_grouplike": p.unit_grouplike,
                    "unit_element": p.unit_element,
                    "relations_counit_zero": counit_zero,
                    "relations_coideal": coideal,
                }),
            ))
        }
        Verb::DetectGrading { .. } => {
            let c = to_coaction(doc(0)?)?;
            match detect_grading(&c)? {
                None => Ok(outcome(false, json!({ "grading": null }))),
                Some(d) => Ok(outcome(
                    true,
                    json!({
                        "grading": to_value(&Document::Grading(d.grading)),
                        "universal_group": presentation_value(&d.universal_group),
                    }),
                )),
            }
        }
        Verb::Can { .. } => {
            let (rep, kind) = match doc(0)? {
                Document::Module(m) => (m.can_map()?, "module"),
                Document::GroupAction(a) => (a.to_module().can_map()?, "module"),
                d => (can_map(&to_coaction(d)?)?, "comodule"),
            };
            let ok = rep.bijective();
            let mut v = serde_json::to_value(&rep).unwrap();
            v["kind"] = json!(kind);
            v["hopf_galois"] = json!(ok);
            Ok(outcome(ok, v))
        }
        Verb::Correspondence { .. } => match doc(0)? {
            Document::Coaction(c) => {
                let m = induced_dual_module(&c);
                let back = m.to_coaction();
                let roundtrip = back.coeff_table() == c.coeff_table();
                Ok(outcome(roundtrip, json!({ "document": to_value(&Document::Module(m)), "roundtrip": roundtrip })))
            }
            d => {
                let m = to_module(d)?;
                let c = m.to_coaction();
                let roundtrip = induced_dual_module(&c).action == m.action;
                Ok(outcome(roundtrip, json!({ "document": to_value(&Document::Coaction(c)), "roundtrip": roundtrip })))
            }
        },
        Verb::CocommData { g0_budget, candidate, .. } => {
            let m = to_module(doc(0)?)?;
            let data = m.cocommutative_data(*g0_budget)?;
            let mut v = json!({ "status": "pass", "data": data });
            if let Some(path) = candidate {
                let cand = iso::<S>(path, m.algebra.dim())?;
                v["candidate_member"] = json!(m.g0_member(&cand));
            }
            Ok(outcome(true, v))
        }
        Verb::Obstruction { h, a, b, .. } => {
            let m = to_module(doc(0)?)?;
            let triple = match (h, a, b) {
                (Some(h), Some(a), Some(b)) => Some((
                    element_index(m.hopf.names(), h)?,
                    element_index(m.algebra.names(), a)?,
                    element_index(m.algebra.names(), b)?,
                )),
                _ => m.cocommutativity_witness(),
            };
            match triple {
                None => Ok(outcome(true, json!({ "equal": true, "searched": "all basis triples" }))),
                Some((hi, ai, bi)) => {
                    let (x, y) = m.obstruction_basis(hi, ai, bi);
                    let eq = x == y;
                    Ok(outcome(
                        eq,
                        json!({
                            "equal": eq,
                            "h": m.hopf.names()[hi], "a": m.algebra.names()[ai], "b": m.algebra.names()[bi],
                            "first": x, "second": y,
                        }),
                    ))
                }
            }
        }
        Verb::ClassifyDual { .. } => {
            let m = to_module(doc(0)?)?;
            let c = m.classify_dual_numbers()?;
            Ok(outcome(true, json!({ "status": "pass", "case": c.case, "span": c.span, "alpha": c.alpha, "beta": c.beta, "adapted_basis": c.adapted_basis })))
        }
        Verb::Codim(args) => {
            let m = to_module(doc(0)?)?;
            let cfg = args.budget.config()?;
            let budget = json!({ "rows": cfg.budget.to_string(), "shard_size": cfg.shard_size });
            if let Some(n) = args.n {
                let c = codim(&m, n, &cfg)?;
                return Ok(outcome(true, json!({ "status": "pass", "n": n, "codim": c, "budget": budget })));
            }
            let max_n = args.max_n.unwrap();
            let d = match args.d {
                Some(d) => Some(d),
                None => dual_numbers_invariant_ideal_dim(&m).ok(),
            };
            let rep = codim_series(&m, max_n, d, &cfg)?;
            let mut v = json!({ "series": rep, "budget": budget });
            let mut code = 0;
            if let (Some(d), true) = (d, rep.values.len() >= 2) {
                let verdict = growth_check(&rep, d, &GrowthWindow::default())?;
                if !verdict.passed {
                    code = 1;
                }
                v["growth"] = serde_json::to_value(verdict).unwrap();
            }
            if rep.partial() {
                code = 3;
                v["status"] = json!("partial");
            } else {
                v["status"] = json!(if code == 0 { "pass" } else { "fail" });
            }
            Ok(Outcome { code, report: v })
        }
        Verb::GradedCodim { n, budget, .. } => {
            let Document::Grading(g) = doc(0)? else {
                return Err(Error::Precondition("graded-codim needs a grading".into()));
            };
            let r = graded_codim(&g, *n, &budget.config()?)?;
            Ok(outcome(r.equal, serde_json::to_value(r).unwrap()))
        }
        Verb::Example { name } => example::<S>(name, cli.output.as_deref()),
        Verb::RegularDual { .. } => {
            let Document::Hopf(h) = doc(0)? else {
                return Err(Error::Precondition("regular-dual needs a Hopf algebra".into()));
            };
            let m = regular_action_on_dual(&h);
            let check = m.check();
            let kernel = m.kernel_dim();
            let can = m.can_map()?;
            let ok = check.passed() && kernel == 0;
            Ok(outcome(
                ok,
                json!({
                    "document": to_value(&Document::Module(m)),
                    "check": report_value(&check),
                    "kernel_dim": kernel,
                    "can": can,
                }),
            ))
        }
    }
}

fn example<S: Scalar>(name: &str, output: Option<&std::path::Path>) -> Result<Outcome> {
    let write = |path: &std::path::Path, v: &Value| -> Result<()> {
        let text = serde_json::to_string_pretty(v).unwrap() + "\n";
        std::fs::write(path, text).map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))
    };
    if name == "all" {
        let dir = output.ok_or_else(|| Error::InvalidParams("example all needs --output DIR".into()))?;
        std::fs::create_dir_all(dir).map_err(|e| Error::Parse(format!("cannot create {}: {e}", dir.display())))?;
        let mut written = Vec::new();
        let mut skipped = Vec::new();
        for n in BUILTIN_NAMES {
            match builtin::<S>(n) {
                Ok(d) => {
                    write(&dir.join(format!("{n}.json")), &to_value(&d))?;
                    written.push(*n);
                }
                Err(e) => skipped.push(json!({ "name": n, "reason": e.to_string() })),
            }
        }
        return Ok(outcome(true, json!({ "status": "pass", "written": written, "skipped": skipped })));
    }
    let d = builtin::<S>(name)?;
    let v = to_value(&d);
    match output {
        Some(path) => {
            write(path, &v)?;
            Ok(outcome(true, json!({ "status": "pass", "written": [name] })))
        }
        None => Ok(Outcome { code: 0, report: json!({ "status": "pass", "document": v }) }),
    }
}
