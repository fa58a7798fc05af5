use anyhow::{Context, Result};
use qcyclic::cyclic::{all_cosets, CodeDescriptor, CyclicCode, DefiningSet};
use qcyclic::distance::{
    binary_shadow_distance, bound_from_fixed_subcode, compose_bounds, fixed_subcode_lower_bound, min_distance_exact,
    min_weight_difference, DistanceBound,
};
use qcyclic::duadic::{find_splittings, qr_splitting, Splitting};
use qcyclic::quantum::{
    binary_cyclic_quantum, construct_from_defining_set, dual_containing_params_to_zero_dim, minus_two_splitting,
    Annotations, QuantumParams,
};
use qcyclic::Error;
use serde::Serialize;
use serde_json::json;

use crate::output::{csv_line, join, Exit, Report};
use crate::{table, Cli, CodeArgs, Command, Format};

pub fn dispatch(cli: &Cli) -> Result<Report> {
    let annotations = match &cli.annotations {
        Some(p) => Annotations::load(p)?,
        None => Annotations::default(),
    };
    let ctx = Ctx { budget: cli.budget, expand: cli.expand, annotations };
    match &cli.cmd {
        Command::Cosets { n, q } => cosets(*n, *q),
        Command::Splittings { n, multiplier } => splittings(&ctx, *n, *multiplier),
        Command::Quantum { code, binary, fixed_subcode, annotated } => {
            quantum(&ctx, code, *binary, fixed_subcode, *annotated)
        }
        Command::Distance { code, fixed_subcode, via_binary, outside } => {
            distance(&ctx, code, fixed_subcode, *via_binary, outside.as_deref())
        }
        Command::Table { max_n, slow } => table::table(ctx.budget, *max_n, *slow),
        Command::Secondary { n, k, steps } => secondary(&ctx, *n, *k, *steps),
        Command::Describe { code } => describe(&ctx, code),
    }
}

pub struct Ctx {
    pub budget: u64,
    pub expand: bool,
    pub annotations: Annotations,
}

fn resolve(code: &CodeArgs) -> Result<DefiningSet> {
    let given = [code.leaders.is_some(), code.qr, code.duadic_index.is_some(), code.descriptor.is_some()];
    if given.iter().filter(|&&g| g).count() != 1 {
        return Err(Exit::invalid("give exactly one of --leaders, --qr, --duadic-index, --descriptor"));
    }
    if let Some(path) = &code.descriptor {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let d: CodeDescriptor = serde_json::from_str(&text).map_err(|e| Exit::invalid(format!("descriptor: {e}")))?;
        if d.q != 4 || code.n.is_some_and(|n| n != d.n) {
            return Err(Exit::invalid("descriptor has another length or field size"));
        }
        let leaders: Vec<i64> = d.defining_set_leaders.iter().map(|&l| l as i64).collect();
        let a = DefiningSet::from_leaders(d.n, &leaders)?;
        if *CyclicCode::new(a.clone())?.generator_polynomial() != d.generator_polynomial {
            return Err(Exit::invalid("generator polynomial does not match the defining set"));
        }
        return Ok(a);
    }
    let n = code.n.ok_or_else(|| Exit::invalid("the length -n is required"))?;
    if let Some(l) = &code.leaders {
        return Ok(DefiningSet::from_leaders(n, l)?);
    }
    if code.qr {
        return Ok(qr_splitting(n)?.s1().clone());
    }
    let i = code.duadic_index.expect("one source given");
    let all = find_splittings(n, Some(-2))?;
    if all.is_empty() {
        return Err(Error::NoConstruction(vec![format!("no splitting of Z_{n} is given by −2")]).into());
    }
    let s = all.get(i).ok_or_else(|| Exit::invalid(format!("only {} splittings given by −2", all.len())))?;
    Ok(s.s1().clone())
}

fn cosets(n: usize, q: usize) -> Result<Report> {
    let p = all_cosets(n, q)?;
    let rows: Vec<_> = p
        .cosets()
        .iter()
        .map(|c| json!({"leader": c[0], "size": c.len(), "members": c}))
        .collect();
    let mut csv = String::from("leader,size,members\n");
    let mut text = format!("{} cosets of {q} mod {n}\n", rows.len());
    for c in p.cosets() {
        csv += &csv_line(&[c[0].to_string(), c.len().to_string(), join(c, " ")]);
        text += &format!("Z({}) = {{{}}}\n", c[0], join(c, ", "));
    }
    Ok(Report {
        json: json!({"n": n, "q": q, "count": rows.len(), "cosets": rows}),
        csv,
        text,
        default: Format::Json,
    })
}

#[derive(Serialize)]
struct SplittingOut<'a> {
    #[serde(flatten)]
    splitting: &'a Splitting,
    #[serde(skip_serializing_if = "Option::is_none")]
    s1: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s2: Option<Vec<usize>>,
}

fn splittings(ctx: &Ctx, n: usize, b: Option<i64>) -> Result<Report> {
    let all = find_splittings(n, b)?;
    let out: Vec<SplittingOut> = all
        .iter()
        .map(|s| SplittingOut {
            splitting: s,
            s1: ctx.expand.then(|| s.s1().members()),
            s2: ctx.expand.then(|| s.s2().members()),
        })
        .collect();
    let mut csv = String::from("index,s1_leaders,s2_leaders,multipliers\n");
    let by = b.map_or("any multiplier".to_string(), |b| format!("multiplier {b}"));
    let mut text = format!("{} splittings of Z_{n} given by {by}\n", all.len());
    for (i, s) in all.iter().enumerate() {
        csv += &csv_line(&[
            i.to_string(),
            join(&s.s1().leaders(), " "),
            join(&s.s2().leaders(), " "),
            join(s.multipliers(), " "),
        ]);
        text += &format!("{i}: S1 = {}, S2 = {}, multipliers {}\n", s.s1().describe(), s.s2().describe(), join(s.multipliers(), " "));
        if ctx.expand {
            text += &format!("   S1 = {{{}}}\n   S2 = {{{}}}\n", join(&s.s1().members(), ", "), join(&s.s2().members(), ", "));
        }
    }
    Ok(Report {
        json: json!({"n": n, "multiplier": b, "count": all.len(), "splittings": out}),
        csv,
        text,
        default: Format::Json,
    })
}

/// Evidence on `d(C)` from the fixed subcode under `a`, using an annotated
/// distance of the fixed subcode when one matches its length and dimension.
fn fixed_subcode_evidence(ctx: &Ctx, c: &CyclicCode, a: i64) -> Result<(DistanceBound, String)> {
    let fb = fixed_subcode_lower_bound(c, a, ctx.budget)?;
    let mut d_fixed = fb.d_fixed.clone();
    let mut note = format!("fixed subcode under {a}: dimension {}, order {}, d(C_a) {}", fb.fixed_dim, fb.order, d_fixed);
    if let Some(ann) = ctx.annotations.classical(c.len(), fb.fixed_dim) {
        d_fixed = compose_bounds(&[d_fixed, ann.bound()])?;
        note += &format!("; annotation {}", ann.describe());
    }
    let bound = bound_from_fixed_subcode(&d_fixed, fb.order)?.with_work(fb.d_fixed.work);
    note += &format!(" gives d(C) {bound}");
    Ok((bound, note))
}

fn annotated_distance(ctx: &Ctx, c: &CyclicCode) -> Option<(DistanceBound, String)> {
    ctx.annotations
        .classical(c.len(), c.dim())
        .map(|a| (a.bound(), format!("annotation {}", a.describe())))
}

fn quantum_report(ctx: &Ctx, mut p: QuantumParams, a: Option<&DefiningSet>) -> Report {
    if let (true, Some(a)) = (ctx.expand, a) {
        p.trace.insert(0, format!("A = {{{}}}", join(&a.members(), ", ")));
    }
    let mut text = format!("{p}\n");
    text += &format!("  lower end: {}, upper end: {}, pure: {:?}\n", p.d.lo_src, p.d.hi_src, p.pure);
    for s in &p.trace {
        text += &format!("  - {s}\n");
    }
    let csv = String::from("n,k,d_lo,d_hi,d_lo_src,d_hi_src,pure\n")
        + &csv_line(&[
            p.n.to_string(),
            p.k.to_string(),
            p.d.lo.to_string(),
            p.d.hi.map_or(String::new(), |h| h.to_string()),
            p.d.lo_src.to_string(),
            p.d.hi_src.to_string(),
            serde_json::to_value(p.pure).expect("enum").as_str().expect("string").to_string(),
        ]);
    Report { json: serde_json::to_value(&p).expect("serialisable"), csv, text, default: Format::Json }
}

fn as_no_construction(e: Error) -> Error {
    match e {
        Error::Precondition(m) => Error::NoConstruction(vec![m]),
        other => other,
    }
}

fn quantum(ctx: &Ctx, code: &CodeArgs, binary: bool, fixed: &[i64], annotated: Option<usize>) -> Result<Report> {
    if let Some(k) = annotated {
        let n = code.n.ok_or_else(|| Exit::invalid("the length -n is required"))?;
        let ann = ctx
            .annotations
            .classical(n, k)
            .ok_or_else(|| Exit::invalid(format!("no classical annotation for an [{n}, {k}] code")))?;
        let mut p = dual_containing_params_to_zero_dim(n, k, &ann.bound()).map_err(as_no_construction)?;
        p.trace.insert(0, format!("annotation: {}", ann.describe()));
        return Ok(quantum_report(ctx, p, None));
    }
    let a = resolve(code)?;
    if binary {
        if !fixed.is_empty() {
            return Err(Exit::invalid("--fixed-subcode does not apply to the binary route"));
        }
        let b = binary_cyclic_quantum(&a, ctx.budget).map_err(as_no_construction)?;
        return Ok(quantum_report(ctx, b.params, Some(&a)));
    }
    let mut evidence = Vec::new();
    let mut notes = Vec::new();
    if minus_two_splitting(&a).is_some() {
        let odd = CyclicCode::new(a.clone())?;
        if let Some((b, note)) = annotated_distance(ctx, &odd) {
            evidence.push(b);
            notes.push(format!("d(C_o): {note}"));
        }
        for &m in fixed {
            let (b, note) = fixed_subcode_evidence(ctx, &odd, m)?;
            evidence.push(b);
            notes.push(note);
        }
    } else if !fixed.is_empty() {
        return Err(Exit::invalid("--fixed-subcode needs the odd-like code of a splitting given by −2"));
    }
    let mut b = construct_from_defining_set(&a, ctx.budget, &evidence).map_err(as_no_construction)?;
    for (i, note) in notes.into_iter().enumerate() {
        b.params.trace.insert(i, note);
    }
    Ok(quantum_report(ctx, b.params, Some(&a)))
}

#[derive(Serialize)]
struct Part {
    source: String,
    #[serde(flatten)]
    bound: DistanceBound,
}

fn distance(ctx: &Ctx, code: &CodeArgs, fixed: &[i64], via_binary: bool, outside: Option<&[i64]>) -> Result<Report> {
    let a = resolve(code)?;
    let c = CyclicCode::new(a.clone())?;
    if c.is_zero() {
        return Err(Error::Domain("the zero code has no minimum distance".into()).into());
    }
    let mut parts = Vec::new();
    let what;
    if let Some(extra) = outside {
        if via_binary || !fixed.is_empty() {
            return Err(Exit::invalid("--outside cannot be combined with --via-binary or --fixed-subcode"));
        }
        let sub = CyclicCode::new(a.union(&DefiningSet::from_leaders(a.n(), extra)?)?)?;
        what = format!("minimum weight outside the [{}, {}] subcode", sub.len(), sub.dim());
        let b = min_weight_difference(&c.to_linear(), &sub.to_linear(), ctx.budget)?;
        parts.push(Part { source: "search".into(), bound: b });
    } else {
        what = "minimum distance".to_string();
        let b = if via_binary {
            binary_shadow_distance(&a, ctx.budget)?
        } else {
            min_distance_exact(&c.to_linear(), ctx.budget)?
        };
        parts.push(Part { source: if via_binary { "binary search" } else { "search" }.into(), bound: b });
        if let Some((b, note)) = annotated_distance(ctx, &c) {
            parts.push(Part { source: note, bound: b });
        }
        for &m in fixed {
            let (b, note) = fixed_subcode_evidence(ctx, &c, m)?;
            parts.push(Part { source: note, bound: b });
        }
    }
    let bounds: Vec<DistanceBound> = parts.iter().map(|p| p.bound.clone()).collect();
    let total = compose_bounds(&bounds)?;

    let mut json = serde_json::to_value(&total)?;
    let obj = json.as_object_mut().expect("object");
    obj.insert("n".into(), json!(c.len()));
    obj.insert("k".into(), json!(c.dim()));
    obj.insert("defining_set_leaders".into(), json!(a.leaders()));
    if ctx.expand {
        obj.insert("defining_set".into(), json!(a.members()));
    }
    obj.insert("parts".into(), serde_json::to_value(&parts)?);

    let hi = total.hi.map_or(String::new(), |h| h.to_string());
    let csv = String::from("lo,hi,lo_src,hi_src,work\n")
        + &csv_line(&[total.lo.to_string(), hi, total.lo_src.to_string(), total.hi_src.to_string(), total.work.to_string()]);
    let mut text = format!("[{}, {}] code, A = {}: {what} {total}\n", c.len(), c.dim(), a.describe());
    for p in &parts {
        text += &format!("  - {}: {} ({}/{}, {} words)\n", p.source, p.bound, p.bound.lo_src, p.bound.hi_src, p.bound.work);
    }
    Ok(Report { json, csv, text, default: Format::Json })
}

fn secondary(ctx: &Ctx, n: usize, k: usize, steps: usize) -> Result<Report> {
    let ann = ctx
        .annotations
        .quantum(n, k)
        .ok_or_else(|| Exit::invalid(format!("no quantum annotation for [[{n}, {k}]]")))?;
    let q = ann.to_params()?;
    let out = qcyclic::quantum::secondary_constructions(&q, steps)?;
    let mut csv = String::from("n,k,d_lo,d_hi\n");
    let mut text = format!("from {q} ({})\n", ann.source);
    for p in &out {
        csv += &csv_line(&[p.n.to_string(), p.k.to_string(), p.d.lo.to_string(), p.d.hi.map_or(String::new(), |h| h.to_string())]);
        text += &format!("{p}\n");
    }
    Ok(Report { json: serde_json::to_value(&out)?, csv, text, default: Format::Json })
}

fn describe(ctx: &Ctx, code: &CodeArgs) -> Result<Report> {
    let a = resolve(code)?;
    let c = CyclicCode::new(a.clone())?;
    let d = c.descriptor();
    let mut json = serde_json::to_value(&d)?;
    let obj = json.as_object_mut().expect("object");
    obj.insert("dim".into(), json!(c.dim()));
    if ctx.expand {
        obj.insert("defining_set".into(), json!(a.members()));
    }
    let g = join(&d.generator_polynomial.symbols(), " ");
    let csv = String::from("n,q,leaders,dim,generator\n")
        + &csv_line(&[d.n.to_string(), "4".into(), join(&d.defining_set_leaders, " "), c.dim().to_string(), g.clone()]);
    let mut text = format!("[{}, {}] cyclic code over GF(4), A = {}\n  g(x) coefficients, constant first: {g}\n", d.n, c.dim(), a.describe());
    if ctx.expand {
        text += &format!("  A = {{{}}}\n", join(&a.members(), ", "));
    }
    Ok(Report { json, csv, text, default: Format::Json })
}
