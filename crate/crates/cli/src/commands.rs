//! The subcommands.

use std::fs;
use std::path::Path;

use goeritz::bipartite::{
    m_evaluator, normalize_homfly, to_precursor, LockCounts, QuadEntry, QuadGoeritzMatrix, QuadInput,
};
use goeritz::diagrams::{
    homfly_from_decomposition, jones_from_bracket, kauffman_bracket, lock_retouch, planar_decomposition, Diagram,
};
use goeritz::families::{
    build_classical, build_quad, even_continued_fraction, homfly_closed_form, jones_closed_form, Coloring, FamilyKind,
    FamilySpec,
};
use goeritz::goeritz::{
    mu_evaluator, normalize_jones, writhe_factor, GoeritzMatrix, JonesNormData, MatrixInput, Reduced, SymMatrix,
};
use goeritz::polyring::{BipPoly, KauffPoly, LaurentPoly, PolyValue};
use goeritz::Error;
use num_rational::Ratio;
use serde_json::{json, Value};

use crate::render::{self, field, report};
use crate::{CfArgs, Compute, Failure, FamilyArgs, Format, OracleArgs, Outcome, Source};

pub struct Ctx {
    pub format: Format,
    pub memo_limit: usize,
}

impl Ctx {
    fn mu(&self, m: &SymMatrix<i64>) -> KauffPoly {
        mu_evaluator().with_memo_limit(self.memo_limit).eval(m)
    }

    fn m(&self, m: &SymMatrix<QuadEntry>) -> BipPoly {
        m_evaluator().with_memo_limit(self.memo_limit).eval(m)
    }

    fn jones(&self, g: &GoeritzMatrix, norm: JonesNormData) -> Result<LaurentPoly, Error> {
        normalize_jones(&self.mu(&g.matrix), norm)
    }

    fn homfly(&self, g: &QuadGoeritzMatrix, counts: &LockCounts) -> Result<PolyValue, Error> {
        normalize_homfly(&self.m(&g.matrix), counts)
    }

    fn q_poly(&self, p: &LaurentPoly) -> Value {
        match self.format {
            Format::Json => render::q_poly_json(p),
            f => Value::String(render::q_poly(f, p)),
        }
    }

    fn value(&self, v: &PolyValue) -> Value {
        match self.format {
            Format::Json => v.to_json(),
            f => Value::String(render::value(f, v)),
        }
    }

    /// A bare polynomial, or a JSON object describing it.
    fn single(&self, invariant: &str, label: &str, v: Value) -> String {
        match v {
            Value::String(s) => format!("{s}\n"),
            v => render::pretty(&json!({ "invariant": invariant, "input": label, "value": v })),
        }
    }
}

enum Kind {
    Family(FamilySpec),
    Matrix(String),
    Diagram(Diagram),
}

struct Input {
    label: String,
    kind: Kind,
    coloring: Coloring,
    mirror: bool,
}

impl Input {
    fn fail(&self, e: impl ToString) -> Failure {
        Failure::new(&self.label, e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(path.display().to_string(), e))
}

fn family_spec(s: &str, coloring: Option<u8>, mirror: bool) -> Result<FamilySpec, Failure> {
    let fail = |e: Error| Failure::new(format!("family {s}"), e);
    let kind: FamilyKind = s.parse().map_err(fail)?;
    let spec = FamilySpec::new(kind, Coloring::from_index(coloring.unwrap_or(1)).map_err(fail)?);
    Ok(if mirror { spec.mirror() } else { spec })
}

fn load(src: &Source, coloring: Option<u8>, mirror: bool) -> Result<Input, Failure> {
    let col = Coloring::from_index(coloring.unwrap_or(1)).map_err(|e| Failure::new("--coloring", e))?;
    let (label, kind) = if let Some(s) = &src.family {
        (format!("family {s}"), Kind::Family(family_spec(s, coloring, mirror)?))
    } else if let Some(p) = &src.matrix {
        (format!("matrix {}", p.display()), Kind::Matrix(read(p)?))
    } else if let Some(p) = &src.diagram {
        let label = format!("diagram {}", p.display());
        let d = Diagram::from_json(&read(p)?).map_err(|e| Failure::new(&label, e))?;
        let d = match d {
            Diagram::Pd(d) if mirror => Diagram::Pd(d.mirror()),
            Diagram::Locks(d) if mirror => Diagram::Locks(d.mirror()),
            d => d,
        };
        (label, Kind::Diagram(d))
    } else {
        unreachable!("clap requires one input source")
    };
    Ok(Input { label, kind, coloring: col, mirror })
}

/// Whether a matrix file holds a quadruple matrix.
fn is_quad(text: &str) -> bool {
    serde_json::from_str::<Value>(text).is_ok_and(|v| v.get("entries").is_some())
}

fn has_classical(kind: FamilyKind) -> bool {
    matches!(kind, FamilyKind::Torus2 { .. } | FamilyKind::Twist { .. } | FamilyKind::Knot52)
}

/// The reduced classical matrix of an input, if it has one.
fn classical(inp: &Input, delete: Option<usize>) -> Result<Option<(GoeritzMatrix, JonesNormData)>, Error> {
    Ok(Some(match &inp.kind {
        Kind::Family(spec) if has_classical(spec.kind) => {
            let b = build_classical(spec)?;
            (b.matrix.reduce(delete.unwrap_or(b.delete))?, b.norm)
        }
        Kind::Matrix(text) if !is_quad(text) => {
            let (g, norm) = MatrixInput::from_json(text)?.build(delete)?;
            if inp.mirror {
                (Reduced::new(g.matrix.negated()), JonesNormData::new(-norm.w, -norm.wr))
            } else {
                (g, norm)
            }
        }
        Kind::Diagram(Diagram::Pd(d)) => {
            let (g, norm) = d.goeritz(inp.coloring);
            (g.reduce(delete.unwrap_or(0))?, norm)
        }
        _ => return Ok(None),
    }))
}

/// The reduced quadruple matrix of an input.
fn quad(inp: &Input, delete: Option<usize>) -> Result<(QuadGoeritzMatrix, LockCounts), Error> {
    match &inp.kind {
        Kind::Family(spec) => {
            let b = build_quad(spec)?;
            Ok((b.matrix.reduce(delete.unwrap_or(b.delete))?, b.counts))
        }
        Kind::Matrix(text) => {
            let (g, counts) = QuadInput::from_json(text)?.build(delete)?;
            if inp.mirror {
                Ok((Reduced::new(g.matrix.map(QuadEntry::mirror)), counts.mirror()))
            } else {
                Ok((g, counts))
            }
        }
        Kind::Diagram(Diagram::Locks(d)) => {
            let (g, counts) = d.quad(inp.coloring);
            Ok((g.reduce(delete.unwrap_or(0))?, counts))
        }
        Kind::Diagram(Diagram::Pd(_)) => Err(Error::Input("a quadruple matrix needs a lock diagram".into())),
    }
}

fn specialize(h: &PolyValue) -> Result<LaurentPoly, Error> {
    h.specialize_a(2).as_q_poly().ok_or_else(|| Error::Input(format!("H(A = q^2) is not a polynomial: {h}")))
}

pub fn jones(ctx: &Ctx, a: &Compute) -> Result<Outcome, Failure> {
    let inp = load(&a.source, a.coloring, a.mirror)?;
    let j = match classical(&inp, a.delete).map_err(|e| inp.fail(e))? {
        Some((g, norm)) => ctx.jones(&g, norm),
        None => quad(&inp, a.delete).and_then(|(g, counts)| specialize(&ctx.homfly(&g, &counts)?)),
    }
    .map_err(|e| inp.fail(e))?;
    Ok(Outcome { text: ctx.single("jones", &inp.label, ctx.q_poly(&j)), ok: true })
}

pub fn homfly(ctx: &Ctx, a: &Compute) -> Result<Outcome, Failure> {
    let inp = load(&a.source, a.coloring, a.mirror)?;
    let (g, counts) = quad(&inp, a.delete).map_err(|e| inp.fail(e))?;
    let h = ctx.homfly(&g, &counts).map_err(|e| inp.fail(e))?;
    Ok(Outcome { text: ctx.single("homfly", &inp.label, ctx.value(&h)), ok: true })
}

fn verdict(agrees: bool) -> &'static str {
    if agrees {
        "agrees"
    } else {
        "differs"
    }
}

pub fn family(ctx: &Ctx, a: &FamilyArgs) -> Result<Outcome, Failure> {
    let spec = family_spec(&a.family, a.coloring, a.mirror)?;
    let label = format!("family {}", a.family);
    let fail = |e: Error| Failure::new(&label, e);
    let mut fields = vec![
        field("family", spec.kind.to_string()),
        field("coloring", if spec.coloring == Coloring::I { 1 } else { 2 }),
        field("mirror", spec.mirrored),
    ];
    let mut ok = true;
    let mut jones = None;
    let classical = if has_classical(spec.kind) { Some(build_classical(&spec)) } else { None };
    match classical {
        Some(Ok(b)) => {
            let g = b.matrix.reduce(b.delete).map_err(fail)?;
            let j = ctx.jones(&g, b.norm).map_err(fail)?;
            fields.push(field("goeritz", render::matrix_json(b.matrix.matrix(), b.norm, true, Some(b.delete))));
            fields.push(field("determinant", g.matrix.abs_determinant().to_string()));
            fields.push(field("jones", ctx.q_poly(&j)));
            if let Ok(c) = jones_closed_form(&spec) {
                ok &= c == j;
                fields.push(field("jones closed form", verdict(c == j)));
            }
            jones = Some(j);
        }
        Some(Err(e)) => fields.push(field("goeritz", format!("none ({e})"))),
        None => fields.push(field("goeritz", "none")),
    }
    match build_quad(&spec) {
        Ok(b) => {
            let g = b.matrix.reduce(b.delete).map_err(fail)?;
            let h = ctx.homfly(&g, &b.counts).map_err(fail)?;
            fields.push(field("quad", render::quad_json(b.matrix.matrix(), &b.counts, true, Some(b.delete))));
            fields.push(field("homfly", ctx.value(&h)));
            if let Ok(c) = homfly_closed_form(&spec) {
                ok &= c == h;
                fields.push(field("homfly closed form", verdict(c == h)));
            }
            let (pre, _) = to_precursor(&g.matrix, &b.counts);
            let holds = ctx.m(&g.matrix).reduce_to_jones_vars() == ctx.mu(&pre);
            ok &= holds;
            fields.push(field("precursor reduction", verdict(holds)));
            match jones {
                Some(j) => {
                    let s = specialize(&h).map_err(fail)?;
                    ok &= s == j;
                    fields.push(field("H(A = q^2)", verdict(s == j)));
                }
                None => fields.push(field("jones", ctx.q_poly(&specialize(&h).map_err(fail)?))),
            }
        }
        Err(e) if jones.is_some() => fields.push(field("quad", format!("none ({e})"))),
        Err(e) => return Err(fail(e)),
    }
    Ok(Outcome { text: report(ctx.format, fields), ok })
}

pub fn oracle(ctx: &Ctx, a: &OracleArgs) -> Result<Outcome, Failure> {
    let label = format!("diagram {}", a.diagram.display());
    let fail = |e: Error| Failure::new(&label, e);
    let mut d = Diagram::from_json(&read(&a.diagram)?).map_err(fail)?;
    if a.mirror {
        d = match d {
            Diagram::Pd(d) => Diagram::Pd(d.mirror()),
            Diagram::Locks(d) => Diagram::Locks(d.mirror()),
        };
    }
    let mut ok = true;
    let mut fields = Vec::new();
    match &d {
        Diagram::Pd(d) => {
            let br = kauffman_bracket(d).map_err(fail)?;
            fields.push(field("crossings", d.len()));
            fields.push(field("writhe", d.writhe()));
            fields.push(field("bracket", br.to_string()));
            for (n, c) in [(1, Coloring::I), (2, Coloring::II)] {
                let (g, norm) = d.goeritz(c);
                let r = g.reduce(0).map_err(fail)?;
                let agrees = &writhe_factor(norm.wr) * &ctx.mu(&r.matrix) == br;
                ok &= agrees;
                let m = render::matrix_json(g.matrix(), norm, true, None);
                fields.push(field(format!("coloring {n}"), json!({ "matrix": m, "mu": verdict(agrees) })));
            }
            fields.push(field("jones", ctx.q_poly(&jones_from_bracket(d).map_err(fail)?)));
        }
        Diagram::Locks(d) => {
            let dec = planar_decomposition(d).map_err(fail)?;
            fields.push(field("locks", d.len()));
            fields.push(field("decomposition", dec.to_string()));
            for (n, c) in [(1, Coloring::I), (2, Coloring::II)] {
                let (g, counts) = d.quad(c);
                let r = g.reduce(0).map_err(fail)?;
                let agrees = &ctx.m(&r.matrix) * &lock_retouch(&counts) == dec;
                ok &= agrees;
                let m = render::quad_json(g.matrix(), &counts, true, None);
                fields.push(field(format!("coloring {n}"), json!({ "matrix": m, "M": verdict(agrees) })));
            }
            let pre = kauffman_bracket(&d.precursor()).map_err(fail)?;
            let holds = dec.reduce_to_jones_vars() == pre;
            ok &= holds;
            fields.push(field("precursor bracket", verdict(holds)));
            fields.push(field("homfly", ctx.value(&homfly_from_decomposition(d).map_err(fail)?)));
        }
    }
    Ok(Outcome { text: report(ctx.format, fields), ok })
}

fn nested(c: &[i64], latex: bool) -> String {
    match c {
        [a] => a.to_string(),
        [a, rest @ ..] if latex => format!("{a} + \\cfrac{{1}}{{{}}}", nested(rest, true)),
        [a, rest @ ..] => format!("{a} + 1/({})", nested(rest, false)),
        [] => unreachable!("expansions are nonempty"),
    }
}

pub fn cf(ctx: &Ctx, a: &CfArgs) -> Result<Outcome, Failure> {
    let (p, q) = a.fraction;
    let input = format!("{p}/{q}");
    let e = even_continued_fraction(p, q).map_err(|e| Failure::new(&input, e))?;
    let target = match e.adjusted {
        Some((a, b)) => Ratio::new(a, b),
        None => Ratio::new(p, q),
    };
    let value = e.value();
    let ok = value == target;
    let text = match ctx.format {
        Format::Json => render::pretty(&json!({
            "fraction": input,
            "coefficients": e.coefficients,
            "adjusted": e.adjusted.map(|(a, b)| Ratio::new(a, b).to_string()),
            "value": value.to_string(),
            "matches": ok,
        })),
        f => {
            let latex = f == Format::Latex;
            let list = format!("[{}]", e.coefficients.iter().map(i64::to_string).collect::<Vec<_>>().join(", "));
            let mut out = format!("{list}\n");
            if let Some((a, b)) = e.adjusted {
                out.push_str(&format!("both parts odd: expanded {} in place of {input}\n", Ratio::new(a, b)));
            }
            let expr = nested(&e.coefficients, latex);
            let shown =
                if latex { format!("\\frac{{{}}}{{{}}}", value.numer(), value.denom()) } else { value.to_string() };
            out.push_str(&format!("back-evaluation: {expr} = {shown} ({})\n", verdict(ok)));
            out
        }
    };
    Ok(Outcome { text, ok })
}

pub fn reduce_check(ctx: &Ctx, a: &Compute) -> Result<Outcome, Failure> {
    let inp = load(&a.source, a.coloring, a.mirror)?;
    let (g, counts) = quad(&inp, a.delete).map_err(|e| inp.fail(e))?;
    let (pre, norm) = to_precursor(&g.matrix, &counts);
    let lhs = ctx.m(&g.matrix).reduce_to_jones_vars();
    let rhs = ctx.mu(&pre);
    let holds = lhs == rhs;
    let mut fields = vec![
        field("input", inp.label.clone()),
        field("precursor", render::matrix_json(&pre, norm, false, None)),
        field("mu", rhs.to_string()),
    ];
    if !holds {
        fields.push(field("reduced M", lhs.to_string()));
    }
    fields.push(field("identity", if holds { "holds" } else { "fails" }));
    Ok(Outcome { text: report(ctx.format, fields), ok: holds })
}
