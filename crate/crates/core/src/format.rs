//! Text and structured (JSON) formats for ideals, decompositions, cones and
//! digraphs.
//!
//! Ideal files hold one generator per line, e.g. `x1^2*x3`. `#` starts a
//! comment and blank lines are skipped. An optional `vars: a b c` line fixes
//! the variable names; without it every variable must be `x<k>` and the
//! context is `x1..xn` with `n` the largest index used.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use regex::Regex;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::cones::{HilbertBasis, RationalCone};
use crate::decomposition::{Decomposition, IrreducibleIdeal, PrimaryIdeal};
use crate::digraphs::WeightedDigraph;
use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::{is_identifier, Monomial, MonomialPrime, PolyContext};

/// Strip a trailing `#` comment.
fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// `x<k>` with `k >= 1`, as a zero-based index.
fn default_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse::<usize>().ok().map(|k| k - 1)
}

/// A parsed factor: name, exponent, and its column (1-based).
type Factor = (String, u32, usize);

fn parse_factors(text: &str, line: usize, offset: usize) -> Result<Vec<Factor>> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    if trimmed == "1" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut col = offset + lead + 1;
    for part in trimmed.split('*') {
        let pad = part.len() - part.trim_start().len();
        let token = part.trim();
        let at = col + pad;
        if token.is_empty() {
            return Err(Error::parse(line, at, "empty factor"));
        }
        let (name, exp) = match token.split_once('^') {
            Some((name, e)) => {
                let e: u32 = e
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(line, at, format!("bad exponent in `{token}`")))?;
                (name.trim(), e)
            }
            None => (token, 1),
        };
        if !is_identifier(name) {
            return Err(Error::parse(
                line,
                at,
                format!("bad variable name `{name}`"),
            ));
        }
        out.push((name.to_string(), exp, at));
        col += part.len() + 1;
    }
    Ok(out)
}

fn build_monomial(ctx: &PolyContext, factors: &[Factor], line: usize) -> Result<Monomial> {
    let mut exps = vec![0u32; ctx.n()];
    for (name, e, col) in factors {
        let i = ctx
            .index_of(name)
            .ok_or_else(|| Error::parse(line, *col, format!("unknown variable `{name}`")))?;
        exps[i] = exps[i].checked_add(*e).ok_or(Error::ExponentOverflow)?;
    }
    Ok(Monomial::new(exps))
}

/// Parse one monomial such as `x1^2*x3` in a given context.
pub fn parse_monomial(ctx: &PolyContext, text: &str) -> Result<Monomial> {
    build_monomial(ctx, &parse_factors(text, 1, 0)?, 1)
}

fn parse_vars(rest: &str, line: usize, col: usize) -> Result<Arc<PolyContext>> {
    let names: Vec<String> = rest
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect();
    PolyContext::with_names(names).map_err(|e| Error::parse(line, col, e.to_string()))
}

/// Parse an ideal file.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut ctx: Option<Arc<PolyContext>> = None;
    let mut rows: Vec<(usize, Vec<Factor>)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        if let Some(rest) = body.trim_start().strip_prefix("vars:") {
            if ctx.is_some() || !rows.is_empty() {
                return Err(Error::parse(
                    line,
                    1,
                    "`vars:` must come first and only once",
                ));
            }
            ctx = Some(parse_vars(rest, line, 1)?);
            continue;
        }
        rows.push((line, parse_factors(body, line, 0)?));
    }
    let ctx = match ctx {
        Some(c) => c,
        None => {
            let mut n = 0;
            for (line, factors) in &rows {
                for (name, _, col) in factors {
                    let i = default_index(name).ok_or_else(|| {
                        Error::parse(
                            *line,
                            *col,
                            format!("variable `{name}` needs a `vars:` header"),
                        )
                    })?;
                    n = n.max(i + 1);
                }
            }
            if n == 0 {
                return Err(Error::parse(
                    1,
                    1,
                    "cannot infer the variables; add a `vars:` header",
                ));
            }
            PolyContext::new(n)?
        }
    };
    let gens = rows
        .iter()
        .map(|(line, f)| build_monomial(&ctx, f, *line))
        .collect::<Result<Vec<_>>>()?;
    minimalize(&ctx, gens)
}

fn needs_header(ideal: &MonomialIdeal) -> bool {
    let ctx = ideal.context();
    if !ctx.has_default_names() {
        return true;
    }
    // the inferred context would be too small
    let used = ideal
        .generators()
        .iter()
        .filter_map(|g| g.support().last().copied())
        .max()
        .map_or(0, |i| i + 1);
    used != ctx.n()
}

/// Canonical ideal file: a `vars:` line when needed, then one generator per line.
pub fn render_ideal_file(ideal: &MonomialIdeal) -> String {
    let ctx = ideal.context();
    let mut out = String::new();
    if needs_header(ideal) {
        out.push_str("vars: ");
        out.push_str(&ctx.names().join(" "));
        out.push('\n');
    }
    for g in ideal.generators() {
        out.push_str(&g.render(ctx));
        out.push('\n');
    }
    out
}

pub fn ideal_json(ideal: &MonomialIdeal) -> Value {
    json!({
        "n": ideal.n(),
        "variables": ideal.context().names(),
        "generators": ideal.generators().iter().map(|g| g.exponents().to_vec()).collect::<Vec<_>>(),
    })
}

fn exponent_map(ctx: &PolyContext, exps: &BTreeMap<usize, u32>) -> Value {
    let mut map = serde_json::Map::new();
    for (&i, &e) in exps {
        map.insert(ctx.name(i).to_string(), json!(e));
    }
    Value::Object(map)
}

pub fn prime_json(ctx: &PolyContext, p: &MonomialPrime) -> Value {
    json!(p
        .variables()
        .iter()
        .map(|&i| ctx.name(i))
        .collect::<Vec<_>>())
}

pub fn irreducible_json(d: &Decomposition<IrreducibleIdeal>, ctx: &PolyContext) -> Value {
    json!({
        "n": ctx.n(),
        "variables": ctx.names(),
        "components": d.iter().map(|c| exponent_map(ctx, &c.exponents())).collect::<Vec<_>>(),
    })
}

pub fn primary_json(d: &Decomposition<PrimaryIdeal>, ctx: &PolyContext) -> Value {
    json!({
        "n": ctx.n(),
        "variables": ctx.names(),
        "components": d.iter().map(|c| json!({
            "radical": prime_json(ctx, &c.radical),
            "generators": c.ideal.generators().iter().map(|g| g.exponents().to_vec()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

fn parse_row(body: &str, line: usize) -> Result<Vec<i64>> {
    let mut row = Vec::new();
    let mut col = 1;
    for piece in body.split(|c: char| c.is_whitespace() || c == ',') {
        if !piece.is_empty() {
            let v = piece
                .parse::<i64>()
                .map_err(|_| Error::parse(line, col, format!("bad integer `{piece}`")))?;
            row.push(v);
        }
        col += piece.len() + 1;
    }
    Ok(row)
}

/// Parse a cone matrix file with `# rays` and `# inequalities` sections.
/// Rows before any section header are rays.
pub fn parse_cone(text: &str) -> Result<RationalCone> {
    #[derive(PartialEq)]
    enum Section {
        Rays,
        Inequalities,
    }
    let mut section = Section::Rays;
    let mut rays = Vec::new();
    let mut ineqs = Vec::new();
    let mut seen_ineqs = false;
    let mut dim: Option<usize> = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let t = raw.trim();
        if let Some(head) = t.strip_prefix('#') {
            match head.trim().to_ascii_lowercase().as_str() {
                "rays" => section = Section::Rays,
                "inequalities" => {
                    section = Section::Inequalities;
                    seen_ineqs = true;
                }
                _ => {}
            }
            continue;
        }
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        let row = parse_row(body, line)?;
        match dim {
            None => dim = Some(row.len()),
            Some(d) if d != row.len() => {
                return Err(Error::parse(
                    line,
                    1,
                    format!("expected {d} entries, got {}", row.len()),
                ))
            }
            _ => {}
        }
        if section == Section::Rays {
            rays.push(row);
        } else {
            ineqs.push(row);
        }
    }
    let dim = dim.ok_or_else(|| Error::parse(1, 1, "no rows"))?;
    match (rays.is_empty(), seen_ineqs && !ineqs.is_empty()) {
        (false, false) => RationalCone::from_rays(dim, rays),
        (true, true) => RationalCone::from_inequalities(dim, ineqs),
        (false, true) => RationalCone::from_both(dim, rays, ineqs),
        (true, false) => Err(Error::parse(1, 1, "no rows")),
    }
}

fn render_rows(rows: &[Vec<i64>]) -> String {
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().map(i64::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn render_cone(cone: &RationalCone) -> String {
    let mut out = String::new();
    if let Some(r) = cone.rays() {
        out.push_str("# rays\n");
        out.push_str(&render_rows(r));
    }
    if let Some(h) = cone.inequalities() {
        out.push_str("# inequalities\n");
        out.push_str(&render_rows(h));
    }
    out
}

pub fn cone_json(cone: &RationalCone) -> Value {
    json!({
        "dim": cone.dim(),
        "rays": cone.rays(),
        "inequalities": cone.inequalities(),
    })
}

pub fn render_hilbert_basis(hb: &HilbertBasis) -> String {
    render_rows(hb.elements())
}

#[derive(Deserialize)]
#[serde(untagged)]
enum VertexId {
    Index(u64),
    Name(String),
}

impl VertexId {
    fn name(&self) -> String {
        match self {
            VertexId::Index(k) => format!("x{k}"),
            VertexId::Name(s) => s.clone(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexRecord {
    id: VertexId,
    #[serde(default = "one")]
    weight: u32,
}

fn one() -> u32 {
    1
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DigraphRecord {
    vertices: Vec<VertexRecord>,
    #[serde(default)]
    arcs: Vec<(VertexId, VertexId)>,
}

/// Order vertex names by numeric index when they look like `x<k>`,
/// otherwise by name; indexed names come first.
fn vertex_order(names: &mut [String]) {
    names.sort_by_key(|s| match default_index(s) {
        Some(i) => (0, i, String::new()),
        None => (1, 0, s.clone()),
    });
}

/// First line (1-based) whose text matches `pattern`, or 1.
fn locate(text: &str, pattern: &str) -> usize {
    let Ok(re) = Regex::new(pattern) else {
        return 1;
    };
    text.lines()
        .position(|l| re.is_match(l))
        .map_or(1, |k| k + 1)
}

fn id_pattern(id: &VertexId) -> String {
    match id {
        VertexId::Index(k) => k.to_string(),
        VertexId::Name(s) => format!("\"{}\"", regex::escape(s)),
    }
}

struct ArcCheck {
    seen: HashSet<(String, String)>,
}

impl ArcCheck {
    fn check(&mut self, tail: &str, head: &str) -> std::result::Result<(), String> {
        if tail == head {
            return Err(format!("loop at {tail}"));
        }
        if self.seen.contains(&(head.to_string(), tail.to_string())) {
            return Err(format!("2-cycle between {tail} and {head}"));
        }
        self.seen.insert((tail.to_string(), head.to_string()));
        Ok(())
    }
}

fn assemble(
    mut names: Vec<String>,
    weights: &HashMap<String, u32>,
    arcs: &[(String, String)],
) -> Result<WeightedDigraph> {
    vertex_order(&mut names);
    let ctx = PolyContext::with_names(names.clone())?;
    let w = names
        .iter()
        .map(|n| weights.get(n).copied().unwrap_or(1))
        .collect();
    let a = arcs
        .iter()
        .map(|(t, h)| (ctx.index_of(t).unwrap(), ctx.index_of(h).unwrap()))
        .collect();
    WeightedDigraph::new(&ctx, w, a)
}

fn parse_digraph_json(text: &str) -> Result<WeightedDigraph> {
    let rec: DigraphRecord = serde_json::from_str(text)
        .map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
    let mut names = Vec::new();
    let mut weights = HashMap::new();
    for v in &rec.vertices {
        let name = v.id.name();
        let line = || locate(text, &format!(r#""id"\s*:\s*{}"#, id_pattern(&v.id)));
        if !is_identifier(&name) {
            return Err(Error::parse(line(), 1, format!("bad vertex id `{name}`")));
        }
        if weights.insert(name.clone(), v.weight).is_some() {
            return Err(Error::parse(line(), 1, format!("duplicate vertex {name}")));
        }
        if v.weight == 0 {
            return Err(Error::parse(
                line(),
                1,
                format!("vertex {name} has weight 0"),
            ));
        }
        names.push(name);
    }
    let mut check = ArcCheck {
        seen: HashSet::new(),
    };
    let mut arcs = Vec::new();
    for (t, h) in &rec.arcs {
        let line = || {
            locate(
                text,
                &format!(r"\[\s*{}\s*,\s*{}\s*\]", id_pattern(t), id_pattern(h)),
            )
        };
        let (tn, hn) = (t.name(), h.name());
        for n in [&tn, &hn] {
            if !weights.contains_key(n) {
                return Err(Error::parse(
                    line(),
                    1,
                    format!("arc uses unknown vertex {n}"),
                ));
            }
        }
        check
            .check(&tn, &hn)
            .map_err(|m| Error::parse(line(), 1, m))?;
        arcs.push((tn, hn));
    }
    assemble(names, &weights, &arcs)
}

fn parse_vertex_token(token: &str, line: usize, col: usize) -> Result<String> {
    let name = if token.bytes().all(|b| b.is_ascii_digit()) && !token.is_empty() {
        format!("x{token}")
    } else {
        token.to_string()
    };
    if !is_identifier(&name) {
        return Err(Error::parse(line, col, format!("bad vertex `{token}`")));
    }
    Ok(name)
}

fn parse_digraph_edges(text: &str) -> Result<WeightedDigraph> {
    let mut names: Vec<String> = Vec::new();
    let mut known: HashSet<String> = HashSet::new();
    let mut weights = HashMap::new();
    let mut arcs = Vec::new();
    let mut check = ArcCheck {
        seen: HashSet::new(),
    };
    let mut add = |name: &str, names: &mut Vec<String>| {
        if known.insert(name.to_string()) {
            names.push(name.to_string());
        }
    };
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        if let Some(rest) = body.trim_start().strip_prefix("weights:") {
            let mut col = body.len() - rest.len() + 1;
            for piece in rest.split(' ') {
                if let Some((v, w)) = piece.split_once('=') {
                    let name = parse_vertex_token(v.trim(), line, col)?;
                    let w: u32 = w
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(line, col, format!("bad weight `{w}`")))?;
                    if w == 0 {
                        return Err(Error::parse(
                            line,
                            col,
                            format!("vertex {name} has weight 0"),
                        ));
                    }
                    if weights.insert(name.clone(), w).is_some() {
                        return Err(Error::parse(
                            line,
                            col,
                            format!("weight for {name} given twice"),
                        ));
                    }
                    add(&name, &mut names);
                } else if !piece.trim().is_empty() {
                    return Err(Error::parse(
                        line,
                        col,
                        format!("expected `vertex=weight`, got `{piece}`"),
                    ));
                }
                col += piece.len() + 1;
            }
            continue;
        }
        let Some((t, h)) = body.split_once("->") else {
            return Err(Error::parse(line, 1, "expected `tail -> head`"));
        };
        let tcol = t.len() - t.trim_start().len() + 1;
        let hcol = t.len() + 2 + h.len() - h.trim_start().len() + 1;
        let tail = parse_vertex_token(t.trim(), line, tcol)?;
        let head = parse_vertex_token(h.trim(), line, hcol)?;
        check
            .check(&tail, &head)
            .map_err(|m| Error::parse(line, tcol, m))?;
        add(&tail, &mut names);
        add(&head, &mut names);
        arcs.push((tail, head));
    }
    if names.is_empty() {
        return Err(Error::parse(1, 1, "digraph has no vertices"));
    }
    assemble(names, &weights, &arcs)
}

/// Parse a digraph in either the JSON form or the edge-list shorthand.
pub fn parse_digraph(text: &str) -> Result<WeightedDigraph> {
    if text.trim_start().starts_with('{') {
        parse_digraph_json(text)
    } else {
        parse_digraph_edges(text)
    }
}

fn vertex_json(ctx: &PolyContext, i: usize) -> Value {
    if ctx.has_default_names() {
        json!(i + 1)
    } else {
        json!(ctx.name(i))
    }
}

pub fn digraph_json(d: &WeightedDigraph) -> Value {
    let ctx = d.context();
    json!({
        "vertices": (0..d.n()).map(|i| json!({"id": vertex_json(ctx, i), "weight": d.weight(i)})).collect::<Vec<_>>(),
        "arcs": d.arcs().iter().map(|&(i, j)| json!([vertex_json(ctx, i), vertex_json(ctx, j)])).collect::<Vec<_>>(),
    })
}

/// Normalized structured digraph file: one vertex and one arc per line.
pub fn render_digraph_file(d: &WeightedDigraph) -> String {
    let ctx = d.context();
    let v = |i: usize| vertex_json(ctx, i).to_string();
    let mut out = String::from("{\n  \"vertices\": [\n");
    let verts: Vec<String> = (0..d.n())
        .map(|i| format!("    {{\"id\": {}, \"weight\": {}}}", v(i), d.weight(i)))
        .collect();
    out.push_str(&verts.join(",\n"));
    out.push_str("\n  ],\n  \"arcs\": [");
    if !d.arcs().is_empty() {
        let arcs: Vec<String> = d
            .arcs()
            .iter()
            .map(|&(i, j)| format!("    [{}, {}]", v(i), v(j)))
            .collect();
        out.push('\n');
        out.push_str(&arcs.join(",\n"));
        out.push_str("\n  ");
    }
    out.push_str("]\n}\n");
    out
}
