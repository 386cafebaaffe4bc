//! Named polynomials printable by `emit`, plus the `derive-st` and
//! `solve-hwv` outputs.

use anyhow::{anyhow, bail, Context as _, Result};
use serde::Serialize;

use semiinv_core::conjinv::{phi, PAIR_RELATION_DISPLAY_ORDER, TRACE_NAMES};
use semiinv_core::generators::{
    correction_product, h_beta, q_beta, F_EXPONENTS, H_CORRECTION_BASIS, Q_CORRECTION_BASIS,
};
use semiinv_core::hwv::solve_hwv_correction;
use semiinv_core::poly::{Monomial, Polynomial, RationalField, Ring};
use semiinv_core::relations::{aronhold_in_cubic, MAIN_RELATION_DISPLAY_ORDER};

use crate::format::{render, Format, JsonPolynomial};
use crate::suites::Context;

/// Every name `emit` accepts, in listing order.
pub fn names() -> Vec<String> {
    let mut out: Vec<String> = F_EXPONENTS.iter().map(|(i, j, k)| format!("f{i}{j}{k}")).collect();
    out.extend((1..=10).map(|n| format!("f{n}")));
    out.extend(
        [
            "h",
            "q",
            "HH",
            "QQ",
            "Stilde",
            "Ttilde",
            "S_cubic",
            "T_cubic",
            "A",
            "nakamoto",
            "phi_h",
            "phi_q",
            "tracegens",
        ]
        .map(String::from),
    );
    out
}

/// Renders several named polynomials: `name = p` lines, or a JSON array.
fn render_many<R: Ring>(items: &[(String, Polynomial<R>)], format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => items.iter().map(|(n, p)| format!("{n} = {p}\n")).collect(),
        Format::Json => {
            let docs: Vec<JsonPolynomial> = items.iter().map(|(n, p)| JsonPolynomial::from_polynomial(n, p)).collect();
            let mut s = serde_json::to_string_pretty(&docs).context("serializing polynomials")?;
            s.push('\n');
            s
        }
    })
}

/// Like [`render`], but text output lists terms in lex order under
/// `priority`, the conventional layout of the two relations.
fn render_by_priority<R: Ring>(name: &str, p: &Polynomial<R>, priority: &[&str], format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(format!("{}\n", p.display_by_priority(priority).map_err(|e| anyhow!("{e}"))?)),
        Format::Json => render(name, p, format),
    }
}

/// `S~` or `T~` as a polynomial in `f1..f10` only.
fn f_only(p: &Polynomial<RationalField>) -> Result<Polynomial<RationalField>> {
    p.coefficient_of(&[0, 1], &Monomial::one(p.vars().len())).map_err(|e| anyhow!("{e}"))
}

fn st(ctx: &Context) -> Result<&semiinv_core::relations::AronholdPair> {
    ctx.st().as_ref().map_err(|e| anyhow!("cannot derive S~, T~: {e}"))
}

/// Output of `emit NAME`.
pub fn emit(ctx: &Context, name: &str, format: Format) -> Result<String> {
    if let Some((i, j, k)) = F_EXPONENTS.iter().find(|(i, j, k)| format!("f{i}{j}{k}") == name) {
        return render(name, ctx.table()?.f.get(*i, *j, *k), format);
    }
    if let Some(n) = name.strip_prefix('f').and_then(|s| s.parse::<usize>().ok()).filter(|n| (1..=10).contains(n)) {
        return render(name, ctx.table()?.f.numbered(n), format);
    }
    match name {
        "h" => render(name, &ctx.table()?.h, format),
        "q" => render(name, &ctx.table()?.q, format),
        "HH" => render(name, &ctx.table()?.hw_h, format),
        "QQ" => render(name, &ctx.table()?.hw_q, format),
        "Stilde" => render(name, &f_only(&st(ctx)?.s)?, format),
        "Ttilde" => render(name, &f_only(&st(ctx)?.t)?, format),
        "S_cubic" => render(name, &aronhold_in_cubic(&st(ctx)?.s).map_err(|e| anyhow!("{e}"))?, format),
        "T_cubic" => render(name, &aronhold_in_cubic(&st(ctx)?.t).map_err(|e| anyhow!("{e}"))?, format),
        "A" => render_by_priority(name, ctx.relation(), &MAIN_RELATION_DISPLAY_ORDER, format),
        "nakamoto" => render_by_priority(name, ctx.pair_relation(), &PAIR_RELATION_DISPLAY_ORDER, format),
        "phi_h" => render(name, &phi(&ctx.table()?.h).map_err(|e| anyhow!("{e}"))?, format),
        "phi_q" => render(name, &phi(&ctx.table()?.q).map_err(|e| anyhow!("{e}"))?, format),
        "tracegens" => {
            let traces = ctx.traces()?;
            let items: Vec<_> =
                TRACE_NAMES.iter().zip(traces.values()).map(|(n, p)| (n.to_string(), p.clone())).collect();
            render_many(&items, format)
        }
        other => bail!("unknown polynomial `{other}`; known names: {}", names().join(", ")),
    }
}

/// Output of `derive-st`: `S~`, `T~` in the f's and in the cubic coefficients.
pub fn derive_st(ctx: &Context, format: Format) -> Result<String> {
    let st = st(ctx)?;
    let items = vec![
        ("Stilde".to_string(), f_only(&st.s)?),
        ("Ttilde".to_string(), f_only(&st.t)?),
        ("S_cubic".to_string(), aronhold_in_cubic(&st.s).map_err(|e| anyhow!("{e}"))?),
        ("T_cubic".to_string(), aronhold_in_cubic(&st.t).map_err(|e| anyhow!("{e}"))?),
    ];
    render_many(&items, format)
}

#[derive(Serialize)]
struct Solved {
    name: &'static str,
    basis: Vec<String>,
    solved: Vec<String>,
    stored: Vec<String>,
}

/// Output of `solve-hwv`: the correction coefficients of `H` and `Q`, solved
/// from the highest-weight conditions, next to the stored ones.
pub fn solve_hwv(ctx: &Context, format: Format) -> Result<String> {
    let table = ctx.table()?;
    let mut results = Vec::new();
    for (name, base, basis, stored) in
        [("H", &table.h, &H_CORRECTION_BASIS[..], h_beta()), ("Q", &table.q, &Q_CORRECTION_BASIS[..], q_beta())]
    {
        let polys: Vec<_> = basis
            .iter()
            .map(|c| correction_product(c, &table.h, &table.f))
            .collect::<Result<_, _>>()
            .map_err(|e| anyhow!("{e}"))?;
        let solved = solve_hwv_correction(base, &polys).map_err(|e| anyhow!("{name}: {e}"))?;
        results.push(Solved {
            name,
            basis: basis.iter().map(|c| c.to_string()).collect(),
            solved: solved.iter().map(ToString::to_string).collect(),
            stored: stored.iter().map(ToString::to_string).collect(),
        });
    }
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&results)? + "\n",
        Format::Text => results
            .iter()
            .map(|r| {
                let terms: Vec<String> = r.basis.iter().zip(&r.solved).map(|(b, c)| format!("({c})*{b}")).collect();
                format!("{} = {} + {}\n", r.name, r.name.to_lowercase(), terms.join(" + "))
            })
            .collect(),
    })
}
