//! Command-line driver: parses a document, dispatches to the analysis
//! modules, and prints either a short text report or a JSON object.
//!
//! Exit codes: 0 on success, 2 for parse/validation problems, 3 for internal
//! invariant violations; with `--assert`, 1 when the computed verdict is
//! false.

use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand};
use serde_json::{json, Value};

use crate::cohomology::{chevalley_eilenberg, cohomology, lie_betti, Cohomology};
use crate::dga::Dga;
use crate::dsl::{lower_document, parse_document, Lowered};
use crate::error::{Error, Result};
use crate::formality::{formality_of, heisenberg_check, massey_triple, sasakian_obstruction};
use crate::gca::FreeCdga;
use crate::hodge::{bott_chern, ddbar_check, Bicomplex};
use crate::linalg::unit_vector;
use crate::malcev::{dualize, malcev_summary};
use crate::sasaki::{
    build_model, heisenberg_basic_ring, hodge_split_check, real_adapted, sasaki_mhd_check,
    sasaki_pipeline, surfaces_ring, torus_ring, validate_basic_ring, BasicRing,
};
use crate::tower::build_tower;

#[derive(Parser)]
#[command(name = "rht", version, about = "exact-arithmetic rational homotopy toolkit")]
pub struct Cli {
    /// Print a JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Exit 1 when the computed verdict is false.
    #[arg(long, global = true)]
    pub assert: bool,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Validate a document: well-formedness plus the d^2 = 0 / Jacobi checks.
    Check { file: PathBuf },
    /// Cohomology dimensions of the first block in a document.
    Cohomology {
        file: PathBuf,
        /// Restrict the report to an inclusive degree range, e.g. 0..3.
        #[arg(long, value_parser = parse_degree_range)]
        degrees: Option<(usize, usize)>,
    },
    /// Build the 1-minimal tower stage by stage.
    Minimal1 {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        stages: usize,
    },
    /// Decide 1-formality from the stabilized tower.
    Formal1 {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        stages: usize,
    },
    /// Triple product of three degree-1 cohomology classes, given by name.
    Massey {
        file: PathBuf,
        a: String,
        b: String,
        c: String,
    },
    /// Dualize the tower to a nilpotent Lie tower and summarize it.
    Malcev {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// Heisenberg recognition and the odd-dimensional admissibility data.
    Heisenberg { file: PathBuf },
    /// Analyze the closed model of a basic ring.
    #[command(group(ArgGroup::new("mode").args(["pipeline", "mhd", "hodge_split"])))]
    Sasaki {
        /// Builtin ring (heis1, heis2, heis3, torus, surfaces) or a file path.
        #[arg(long)]
        ring: String,
        /// Full pipeline: splits, diagram axioms, formality, types (default).
        #[arg(long)]
        pipeline: bool,
        /// Only the three mixed-diagram axioms.
        #[arg(long)]
        mhd: bool,
        /// Only the cohomology bigrading report.
        #[arg(long = "hodge-split")]
        hodge_split: bool,
        #[arg(long, default_value_t = 8)]
        stages: usize,
    },
    /// The del-delbar condition on a bicomplex.
    Ddbar { file: PathBuf },
    /// Bott-Chern dimensions and the natural-map isomorphism check.
    Bottchern { file: PathBuf },
}

/// Everything a subcommand produces: the JSON object, the text rendering,
/// and the verdict `--assert` keys on (None for purely numeric reports).
#[derive(Debug)]
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub verdict: Option<bool>,
}

fn parse_degree_range(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a range like 0..3, got `{s}`"))?;
    let lo: usize = a.trim().parse().map_err(|_| format!("bad degree `{a}`"))?;
    let hi: usize = b.trim().parse().map_err(|_| format!("bad degree `{b}`"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn dimension_cap() -> usize {
    std::env::var("RHT_MAX_DIM")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(64)
}

fn check_cap(dim: usize) -> Result<()> {
    let cap = dimension_cap();
    if dim > cap {
        return Err(Error::DimensionCap { dim, cap });
    }
    Ok(())
}

fn ambient_dim(item: &Lowered) -> usize {
    match item {
        Lowered::Lie(g) => g.dim(),
        Lowered::Cdga(a) => a.generators().len(),
        Lowered::Ring(r) => r.fdga.total_dim(),
        Lowered::Bicomplex(b) => {
            let coords: Vec<(i64, i64)> = b.components().collect();
            coords.into_iter().map(|(p, q)| b.dim(p, q)).sum()
        }
    }
}

fn load_items(path: &Path) -> Result<Vec<Lowered>> {
    let text = std::fs::read_to_string(path)?;
    let doc = parse_document(&text)?;
    let items = lower_document(&doc)?;
    for item in &items {
        check_cap(ambient_dim(item))?;
    }
    Ok(items)
}

fn load_first(path: &Path) -> Result<Lowered> {
    let mut items = load_items(path)?;
    Ok(items.remove(0))
}

fn pairs_json(types: &[(i64, i64)]) -> Value {
    Value::Array(types.iter().map(|(p, q)| json!([p, q])).collect())
}

fn betti_json(betti: &[usize], range: Option<(usize, usize)>) -> Value {
    let (lo, hi) = range.unwrap_or((0, betti.len().saturating_sub(1)));
    Value::Array(
        betti
            .iter()
            .enumerate()
            .filter(|(k, _)| *k >= lo && *k <= hi)
            .map(|(k, b)| json!([k, b]))
            .collect(),
    )
}

fn betti_text(name: &str, betti: &[usize], range: Option<(usize, usize)>) -> String {
    let (lo, hi) = range.unwrap_or((0, betti.len().saturating_sub(1)));
    let mut out = format!("cohomology of {name}");
    for (k, b) in betti.iter().enumerate() {
        if k >= lo && k <= hi {
            out.push_str(&format!("\n  b{k} = {b}"));
        }
    }
    out
}

/// Name -> chart coordinates of a degree-1 class, for the product command.
fn degree_one_class<T: Dga>(a: &T, coh: &Cohomology, name: &str) -> Result<Vec<crate::Scalar>> {
    let dim1 = a.dim(1);
    let mut pos = None;
    for k in 0..dim1 {
        if a.basis_label(1, k) == name {
            pos = Some(k);
            break;
        }
    }
    let Some(k) = pos else {
        return Err(Error::Validation(format!(
            "`{name}` is not a degree-1 basis element"
        )));
    };
    coh.chart(1)
        .project(&unit_vector(dim1, k))
        .ok_or_else(|| Error::Validation(format!("`{name}` is not a cohomology class")))
}

fn resolve_ring(spec: &str) -> Result<BasicRing> {
    if let Some(rest) = spec.strip_prefix("heis") {
        if let Ok(n) = rest.parse::<usize>() {
            if n == 0 {
                return Err(Error::Validation("heis0 is empty; use n >= 1".into()));
            }
            let r = heisenberg_basic_ring(n)?;
            check_cap(r.fdga.total_dim())?;
            return Ok(r);
        }
    }
    match spec {
        "torus" => torus_ring(),
        "surfaces" => real_adapted(&surfaces_ring()?),
        path => match load_first(Path::new(path))? {
            Lowered::Ring(r) => Ok(r),
            _ => Err(Error::Validation(format!(
                "`{path}` does not start with a basicring block"
            ))),
        },
    }
}

fn expect_dga(item: Lowered, cmd: &str) -> Result<DgaInput> {
    match item {
        Lowered::Lie(g) => {
            let a = chevalley_eilenberg(&g)?;
            Ok(DgaInput::Cdga(a))
        }
        Lowered::Cdga(a) => Ok(DgaInput::Cdga(a)),
        Lowered::Ring(r) => {
            validate_basic_ring(&r)?;
            Ok(DgaInput::Ring(Box::new(r)))
        }
        Lowered::Bicomplex(_) => Err(Error::Validation(format!(
            "`{cmd}` expects a lie, cdga, or basicring block; use ddbar/bottchern for bicomplexes"
        ))),
    }
}

enum DgaInput {
    Cdga(FreeCdga),
    Ring(Box<BasicRing>),
}

pub fn execute(cmd: &Cmd) -> Result<Outcome> {
    match cmd {
        Cmd::Check { file } => check_cmd(file),
        Cmd::Cohomology { file, degrees } => cohomology_cmd(file, *degrees),
        Cmd::Minimal1 { file, stages } => minimal1_cmd(file, *stages),
        Cmd::Formal1 { file, stages } => formal1_cmd(file, *stages),
        Cmd::Massey { file, a, b, c } => massey_cmd(file, a, b, c),
        Cmd::Malcev { file, depth } => malcev_cmd(file, *depth),
        Cmd::Heisenberg { file } => heisenberg_cmd(file),
        Cmd::Sasaki {
            ring,
            mhd,
            hodge_split,
            stages,
            ..
        } => sasaki_cmd(ring, *mhd, *hodge_split, *stages),
        Cmd::Ddbar { file } => ddbar_cmd(file),
        Cmd::Bottchern { file } => bottchern_cmd(file),
    }
}

fn check_cmd(file: &Path) -> Result<Outcome> {
    let items = load_items(file)?;
    let mut blocks = Vec::new();
    let mut lines = Vec::new();
    for item in &items {
        let (kind, name, warnings) = match item {
            Lowered::Lie(g) => {
                g.jacobi_check()?;
                ("lie", g.name.clone(), Vec::new())
            }
            Lowered::Cdga(a) => {
                a.check_d_squared()?;
                ("cdga", a.name.clone(), Vec::new())
            }
            Lowered::Ring(r) => ("basicring", r.fdga.name.clone(), validate_basic_ring(r)?),
            Lowered::Bicomplex(b) => {
                b.validate()?;
                ("bicomplex", b.name.clone(), Vec::new())
            }
        };
        let mut line = format!("ok: {kind} {name}");
        for w in &warnings {
            line.push_str(&format!("\n  warning: {w}"));
        }
        lines.push(line);
        blocks.push(json!({"kind": kind, "name": name, "warnings": warnings}));
    }
    Ok(Outcome {
        json: json!({"ok": true, "blocks": blocks}),
        text: lines.join("\n"),
        verdict: Some(true),
    })
}

fn cohomology_cmd(file: &Path, degrees: Option<(usize, usize)>) -> Result<Outcome> {
    let item = load_first(file)?;
    let (kind, name, betti) = match &item {
        Lowered::Lie(g) => ("lie", g.name.clone(), lie_betti(g)?),
        Lowered::Cdga(a) => {
            // the last truncated degree has no reliable d, so stop short of it
            let coh = cohomology(a, a.max_degree().saturating_sub(1))?;
            ("cdga", a.name.clone(), coh.betti_numbers())
        }
        Lowered::Ring(r) => {
            validate_basic_ring(r)?;
            let coh = cohomology(&r.fdga, r.fdga.top_degree())?;
            ("basicring", r.fdga.name.clone(), coh.betti_numbers())
        }
        Lowered::Bicomplex(_) => {
            return Err(Error::Validation(
                "cohomology of a bicomplex: use ddbar or bottchern".into(),
            ))
        }
    };
    Ok(Outcome {
        json: json!({"kind": kind, "name": name, "betti": betti_json(&betti, degrees)}),
        text: betti_text(&name, &betti, degrees),
        verdict: None,
    })
}

fn minimal1_cmd(file: &Path, stages: usize) -> Result<Outcome> {
    let input = expect_dga(load_first(file)?, "minimal1")?;
    let t = match &input {
        DgaInput::Cdga(a) => build_tower(a, stages)?,
        DgaInput::Ring(r) => build_tower(&r.fdga, stages)?,
    };
    let new_gens: Vec<usize> = t.stages.iter().map(|s| s.new_generators.len()).collect();
    let total: usize = new_gens.iter().sum();
    let mut text = format!(
        "tower with {} stage(s), {}",
        t.stages.len(),
        if t.stabilized { "stabilized" } else { "not stabilized" }
    );
    for (i, n) in new_gens.iter().enumerate() {
        text.push_str(&format!("\n  stage {}: {n} new generator(s)", i + 1));
    }
    Ok(Outcome {
        json: json!({
            "stages": t.stages.len(),
            "stabilized": t.stabilized,
            "new_generators": new_gens,
            "total_generators": total,
        }),
        text,
        verdict: Some(t.stabilized),
    })
}

fn formal1_cmd(file: &Path, stages: usize) -> Result<Outcome> {
    let input = expect_dga(load_first(file)?, "formal1")?;
    let (t, report) = match &input {
        DgaInput::Cdga(a) => formality_of(a, stages)?,
        DgaInput::Ring(r) => formality_of(&r.fdga, stages)?,
    };
    let mut text = format!(
        "one-formal: {}{}",
        report.verdict,
        if report.provisional { " (provisional: tower not stabilized)" } else { "" }
    );
    text.push_str(&format!(
        "\n  H2 comparison: image {} of {} (in a stage with H2 dim {})",
        report.image_dim, report.h2_m_dim, report.h2_m1_dim
    ));
    if let Some(label) = &report.witness_label {
        text.push_str(&format!("\n  witness outside the image: {label}"));
    }
    if !t.stabilized {
        text.push_str(&format!("\n  stages used: {}", t.stages.len()));
    }
    Ok(Outcome {
        json: json!({
            "one_formal": report.verdict,
            "h2_dims": [report.h2_m1_dim, report.h2_m_dim, report.image_dim],
        }),
        text,
        verdict: Some(report.verdict),
    })
}

fn massey_cmd(file: &Path, a: &str, b: &str, c: &str) -> Result<Outcome> {
    let input = expect_dga(load_first(file)?, "massey")?;
    fn triple<T: Dga>(
        alg: &T,
        up_to: usize,
        a: &str,
        b: &str,
        c: &str,
    ) -> Result<crate::formality::MasseyValue> {
        if up_to < 2 {
            return Err(Error::Validation(
                "the algebra has no degree-2 part; triple products are undefined".into(),
            ));
        }
        let coh = cohomology(alg, up_to.min(3))?;
        let ca = degree_one_class(alg, &coh, a)?;
        let cb = degree_one_class(alg, &coh, b)?;
        let cc = degree_one_class(alg, &coh, c)?;
        massey_triple(alg, &coh, &ca, &cb, &cc)
    }
    let value = match &input {
        DgaInput::Cdga(alg) => triple(alg, alg.max_degree().saturating_sub(1), a, b, c)?,
        DgaInput::Ring(r) => triple(&r.fdga, r.fdga.max_degree(), a, b, c)?,
    };
    Ok(Outcome {
        json: json!({
            "nonzero": value.nonzero_mod_indeterminacy,
            "indeterminacy_dim": value.indeterminacy.dim(),
        }),
        text: format!(
            "nonzero-mod-indeterminacy: {}",
            value.nonzero_mod_indeterminacy
        ),
        verdict: Some(value.nonzero_mod_indeterminacy),
    })
}

fn malcev_cmd(file: &Path, depth: usize) -> Result<Outcome> {
    let input = expect_dga(load_first(file)?, "malcev")?;
    let t = match &input {
        DgaInput::Cdga(a) => build_tower(a, depth)?,
        DgaInput::Ring(r) => build_tower(&r.fdga, depth)?,
    };
    let lt = dualize(&t)?;
    let ms = malcev_summary(&lt)?;
    let mut text = format!(
        "nilpotent tower of class {}, {}",
        ms.class,
        if ms.stabilized { "stabilized" } else { "not stabilized" }
    );
    text.push_str(&format!(
        "\n  level dims: {:?}\n  limit dim: {}",
        ms.level_dims,
        ms.limit.dim()
    ));
    Ok(Outcome {
        json: json!({
            "stabilized": ms.stabilized,
            "class": ms.class,
            "level_dims": ms.level_dims,
            "limit_dim": ms.limit.dim(),
        }),
        text,
        verdict: Some(ms.stabilized),
    })
}

fn heisenberg_cmd(file: &Path) -> Result<Outcome> {
    let Lowered::Lie(g) = load_first(file)? else {
        return Err(Error::Validation("heisenberg expects a lie block".into()));
    };
    let ob = sasakian_obstruction(&g)?;
    let hb = heisenberg_check(&g)?;
    let text = format!(
        "heisenberg: {hb}\n  dim {} (n = {}), b1 = {} (required {}): {}\n  admissible: {}",
        ob.dim,
        ob.n,
        ob.b1,
        ob.b1_required,
        if ob.b1_pass { "pass" } else { "fail" },
        ob.admissible
    );
    Ok(Outcome {
        json: json!({
            "heisenberg": hb,
            "dim": ob.dim,
            "n": ob.n,
            "b1": ob.b1,
            "b1_required": ob.b1_required,
            "b1_pass": ob.b1_pass,
            "admissible": ob.admissible,
        }),
        text,
        verdict: Some(hb),
    })
}

fn sasaki_cmd(ring: &str, mhd: bool, hodge_split: bool, stages: usize) -> Result<Outcome> {
    let r = resolve_ring(ring)?;
    validate_basic_ring(&r)?;
    if mhd {
        let m = build_model(&r)?;
        let rep = sasaki_mhd_check(&m)?;
        let text = format!(
            "mixed-diagram axioms: {}\n  E1 isomorphism: {}\n  d0 strictness: {}\n  E1 purity: {}",
            if rep.pass { "pass" } else { "fail" },
            rep.e1_iso,
            rep.d0_strict,
            rep.pure_e1
        );
        return Ok(Outcome {
            json: json!({
                "e1_iso": rep.e1_iso,
                "e1_failures": pairs_json(&rep.e1_failures),
                "d0_strict": rep.d0_strict,
                "strict_failures": pairs_json(&rep.strict_failures),
                "pure_e1": rep.pure_e1,
                "purity_failures": pairs_json(&rep.purity_failures),
                "pass": rep.pass,
            }),
            text,
            verdict: Some(rep.pass),
        });
    }
    if hodge_split {
        let m = build_model(&r)?;
        let rep = hodge_split_check(&m)?;
        let mut text = format!(
            "hodge splits: {}\n  H1 split: {}\n  top degree pure: {}",
            if rep.pass { "pass" } else { "fail" },
            rep.h1_split,
            rep.top_pure
        );
        if let Some(h2) = rep.h2_split {
            text.push_str(&format!("\n  H2 split: {h2}"));
        }
        for ((p, q), d) in &rep.h2_types {
            text.push_str(&format!("\n  H2 component ({p}, {q}): dim {d}"));
        }
        let h2_types: Vec<Value> = rep
            .h2_types
            .iter()
            .map(|((p, q), d)| json!([p, q, d]))
            .collect();
        return Ok(Outcome {
            json: json!({
                "h1_split": rep.h1_split,
                "top_pure": rep.top_pure,
                "h2_split": rep.h2_split,
                "h2_types": h2_types,
                "pass": rep.pass,
            }),
            text,
            verdict: Some(rep.pass),
        });
    }
    let rep = sasaki_pipeline(&r, stages)?;
    let pass = rep.hodge.pass
        && rep.mhd.pass
        && rep.formality.verdict
        && rep.v2_types_ok
        && rep.phi_type_ok;
    let mut text = format!(
        "pipeline: {}\n  hodge splits: {}\n  mixed-diagram axioms: {}\n  one-formal: {}{}\n  stage-2 types clean: {}\n  phi respects types: {}",
        if pass { "pass" } else { "fail" },
        rep.hodge.pass,
        rep.mhd.pass,
        rep.formality.verdict,
        if rep.formality.provisional { " (provisional)" } else { "" },
        rep.v2_types_ok,
        rep.phi_type_ok
    );
    if let Some((g, rl)) = rep.presentation {
        text.push_str(&format!("\n  presentation: {g} generators, {rl} relations"));
    }
    if let Some(ms) = &rep.malcev {
        text.push_str(&format!(
            "\n  nilpotent tower: class {}, level dims {:?}",
            ms.class, ms.level_dims
        ));
    }
    for w in &rep.warnings {
        text.push_str(&format!("\n  warning: {w}"));
    }
    let presentation = rep.presentation.map(|(g, rl)| json!([g, rl]));
    let (m_dims, m_class) = match &rep.malcev {
        Some(ms) => (json!(ms.level_dims), json!(ms.class)),
        None => (Value::Null, Value::Null),
    };
    Ok(Outcome {
        json: json!({
            "warnings": rep.warnings,
            "hodge_pass": rep.hodge.pass,
            "mhd_pass": rep.mhd.pass,
            "one_formal": rep.formality.verdict,
            "provisional": rep.formality.provisional,
            "v2_types": pairs_json(&rep.v2_types),
            "v2_types_ok": rep.v2_types_ok,
            "phi_type_ok": rep.phi_type_ok,
            "presentation": presentation,
            "malcev_level_dims": m_dims,
            "malcev_class": m_class,
            "pass": pass,
        }),
        text,
        verdict: Some(pass),
    })
}

fn expect_bicomplex(file: &Path, cmd: &str) -> Result<Bicomplex> {
    match load_first(file)? {
        Lowered::Bicomplex(b) => {
            b.validate()?;
            Ok(b)
        }
        _ => Err(Error::Validation(format!("`{cmd}` expects a bicomplex block"))),
    }
}

fn ddbar_cmd(file: &Path) -> Result<Outcome> {
    let b = expect_bicomplex(file, "ddbar")?;
    let rep = ddbar_check(&b)?;
    let mut text = format!("del-delbar: {}", if rep.holds { "holds" } else { "fails" });
    for (t, lhs, rhs) in &rep.failures {
        text.push_str(&format!(
            "\n  total degree {t}: closed-exact dim {lhs} vs del-delbar image dim {rhs}"
        ));
    }
    let failures: Vec<Value> = rep
        .failures
        .iter()
        .map(|(t, lhs, rhs)| json!([t, lhs, rhs]))
        .collect();
    Ok(Outcome {
        json: json!({"holds": rep.holds, "failures": failures}),
        text,
        verdict: Some(rep.holds),
    })
}

fn bottchern_cmd(file: &Path) -> Result<Outcome> {
    let b = expect_bicomplex(file, "bottchern")?;
    let rep = bott_chern(&b)?;
    let mut text = format!(
        "natural map to de Rham an isomorphism: {}",
        rep.natural_map_iso
    );
    for ((p, q), d) in &rep.dims {
        text.push_str(&format!("\n  ({p}, {q}): dim {d}"));
    }
    let dims: Vec<Value> = rep
        .dims
        .iter()
        .map(|((p, q), d)| json!([p, q, d]))
        .collect();
    Ok(Outcome {
        json: json!({"dims": dims, "natural_map_iso": rep.natural_map_iso}),
        text,
        verdict: Some(rep.natural_map_iso),
    })
}

/// Entry point for the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(&cli.cmd) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                println!("{}", out.text);
            }
            if cli.assert && out.verdict == Some(false) {
                1
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write_tmp(name: &str, body: &str) -> PathBuf {
        let dir = std::env::temp_dir().join("rht-cli-tests");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(name);
        std::fs::write(&path, body).unwrap();
        path
    }

    #[test]
    fn formal1_json_shape_for_a_lie_file() {
        let path = write_tmp(
            "h5-shape.lie",
            "lie h5 {\n  basis x1 x2 x3 x4 x5;\n  bracket [x1, x2] = x5;\n  bracket [x3, x4] = x5;\n}\n",
        );
        let out = execute(&Cmd::Formal1 { file: path, stages: 8 }).unwrap();
        assert_eq!(out.json, serde_json::json!({"one_formal": true, "h2_dims": [6, 5, 5]}));
        assert_eq!(out.verdict, Some(true));
    }

    #[test]
    fn massey_text_line_for_h3() {
        let path = write_tmp(
            "h3-massey.lie",
            "lie h3 {\n  basis x1 x2 x3;\n  bracket [x1, x2] = x3;\n}\n",
        );
        let mk = |name: &str| Cmd::Massey {
            file: write_tmp("h3-massey.lie", "lie h3 {\n  basis x1 x2 x3;\n  bracket [x1, x2] = x3;\n}\n"),
            a: "x1".into(),
            b: "x1".into(),
            c: name.into(),
        };
        let out = execute(&mk("x2")).unwrap();
        assert_eq!(out.text, "nonzero-mod-indeterminacy: true");
        assert_eq!(out.json["nonzero"], serde_json::json!(true));

        // x3 is not closed, so it names no class
        let err = execute(&mk("x3")).unwrap_err();
        assert!(matches!(err, Error::Validation(_)), "{err}");
        drop(path);
    }

    #[test]
    fn dimension_cap_applies_to_documents() {
        let mut body = String::from("lie big {\n  basis");
        for i in 0..70 {
            body.push_str(&format!(" e{i}"));
        }
        body.push_str(";\n}\n");
        let path = write_tmp("big.lie", &body);
        let err = execute(&Cmd::Check { file: path }).unwrap_err();
        assert!(matches!(err, Error::DimensionCap { dim: 70, cap: 64 }), "{err}");
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn builtin_ring_names_resolve() {
        for name in ["heis1", "heis2", "torus", "surfaces"] {
            let out = execute(&Cmd::Sasaki {
                ring: name.into(),
                pipeline: false,
                mhd: true,
                hodge_split: false,
                stages: 4,
            })
            .unwrap();
            assert_eq!(out.json["pass"], serde_json::json!(true), "{name}");
        }
    }

    #[test]
    fn check_reports_every_block() {
        let path = write_tmp(
            "two.lie",
            "lie h3 {\n  basis x1 x2 x3;\n  bracket [x1, x2] = x3;\n}\n\nlie ab2 {\n  basis e1 e2;\n}\n",
        );
        let out = execute(&Cmd::Check { file: path }).unwrap();
        assert_eq!(out.json["blocks"].as_array().unwrap().len(), 2);
        assert!(out.text.contains("ok: lie h3"));
        assert!(out.text.contains("ok: lie ab2"));
    }
}
