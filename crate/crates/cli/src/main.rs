//! `tamecheck`: decide automorphism, tameness and coordinate questions
//! over `K[x,y]`, `K[z][x,y]`, `K<x,y>` and `K<x,y,z>` (fixing z), with
//! verifiable certificates.

mod expr;
mod render;
mod words;

use std::io::Read;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use tamecheck_core::decide_comm::{
    recognize_aut_k2, recognize_aut_k2_ratfunc, recognize_coord_k2, recognize_z_tame_aut_comm,
    z_coord_test, z_tame_coord_test,
};
use tamecheck_core::decide_free::{
    anick, linear_z_tame_test, mennicke_factorization, metabelian_aut_test, metabelian_wild,
    omega_m, recognize_aut_free2, recognize_coord_free2, recognize_z_tame_aut3, sigma_h,
    th_context, z_jacobian, z_linear_data, jm_matrix,
};
use tamecheck_core::field::Field;
use tamecheck_core::freealg::FreePoly;
use tamecheck_core::maps::{jacobian_comm, matrix_det, smith_identity_check, Derivation, ExpError};
use tamecheck_core::ring::{
    ge2_reduce, CommPoly, ElemFactor, Ge2Outcome, Mat2Poly, TermOrder, VarContext,
};
use tamecheck_core::{CommEndo, FreeEndo, RatFunc, Rational, VerdictTag};

#[derive(Parser)]
#[command(
    name = "tamecheck",
    version,
    about = "Exact decision procedures for polynomial and free-algebra automorphisms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Which algebra the input lives in.
    #[arg(long, global = true, value_parser = ["comm", "free"])]
    algebra: Option<String>,

    /// Comma-separated variable names, in order.
    #[arg(long, global = true, value_delimiter = ',')]
    vars: Vec<String>,

    /// Treat the variable z as fixed (z-automorphism questions).
    #[arg(long, global = true)]
    fix_z: bool,

    /// Coefficient field: the rationals, or rational functions in z.
    #[arg(long, global = true, value_parser = ["q", "q(z)"], default_value = "q")]
    field: String,

    /// Term order for commutative polynomials and canonical output.
    #[arg(long, global = true, default_value = "deglex")]
    order: String,

    /// Output format.
    #[arg(long, global = true, value_parser = ["json", "text"], default_value = "json")]
    format: String,

    /// Iteration cap for exponentials of derivations.
    #[arg(long, global = true, default_value_t = 64)]
    cap: usize,

    /// Input expression, one per coordinate (repeatable).
    #[arg(short = 'e', global = true, allow_hyphen_values = true)]
    expr: Vec<String>,

    /// Matrix input: rows separated by `;`, entries by `,`.
    #[arg(short = 'm', global = true, allow_hyphen_values = true)]
    matrix: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a tuple of images defines an automorphism.
    CheckAut,
    /// Decide whether a single polynomial is a coordinate.
    CheckCoord,
    /// Decide z-tameness of a z-fixing map (or of a single coordinate).
    CheckZTame,
    /// Decide whether a polynomial is a z-tame coordinate of K[z][x,y].
    CheckZTameCoord,
    /// Decide whether a polynomial is a coordinate of K[z][x,y].
    CheckZCoord,
    /// Factor a 2x2 matrix over K[z1,z2] into elementary matrices.
    Ge2,
    /// Print the Jacobian (commutative) or z-Jacobian (free, x,y-linear).
    Jacobian,
    /// Metabelian Jacobian analysis and the wildness test.
    Metabelian,
    /// Evaluate a tame generator word from JSON on stdin.
    EvalWord,
    /// Print a built-in example.
    Example {
        /// nagata | anick | cohn | sigma-h | omega-m | mennicke | nagata-exp
        name: String,
        /// Family parameter (h for sigma-h, m for omega-m).
        arg: Option<String>,
    },
    /// Exponentiate a derivation given by its variable images.
    ExpDerivation {
        /// Kernel element to scale the derivation by before exponentiating.
        #[arg(long, allow_hyphen_values = true)]
        multiplier: Option<String>,
    },
    /// Verify the stabilization identity for a derivation and multiplier.
    SmithCheck {
        /// Kernel element w of the derivation.
        #[arg(long, allow_hyphen_values = true)]
        multiplier: String,
    },
}

fn main() {
    let cli = Cli::parse();
    let json_format = cli.format == "json";
    match run(cli) {
        Ok((out, code)) => {
            print!("{}", render::render(&out, json_format));
            if json_format {
                println!();
            }
            std::process::exit(code);
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Algebra {
    Comm,
    Free,
}

/// The fully assembled job inputs after merging flags with any stdin
/// envelope (a previous command's JSON output, or plain expression lines).
struct Inputs {
    algebra: Algebra,
    qz: bool,
    vars: Vec<String>,
    exprs: Vec<String>,
    order: TermOrder,
}

fn read_stdin() -> Result<String, String> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| format!("cannot read stdin: {e}"))?;
    Ok(buf)
}

fn gather(cli: &Cli, default_z: bool) -> Result<Inputs, String> {
    let order = TermOrder::parse(&cli.order)
        .ok_or_else(|| format!("unknown term order {:?}", cli.order))?;
    let mut algebra = match cli.algebra.as_deref() {
        Some("free") => Some(Algebra::Free),
        Some("comm") => Some(Algebra::Comm),
        Some(other) => return Err(format!("unknown algebra {other:?}")),
        None => None,
    };
    let mut qz = cli.field == "q(z)";
    let mut vars = cli.vars.clone();
    let mut exprs = cli.expr.clone();
    if exprs.is_empty() {
        let text = read_stdin()?;
        if let Ok(v) = serde_json::from_str::<Value>(&text) {
            if let Some(images) = v.get("images").and_then(Value::as_array) {
                for img in images {
                    exprs.push(
                        img.as_str()
                            .ok_or("stdin JSON: images must be strings")?
                            .to_string(),
                    );
                }
            }
            match v.get("algebra").and_then(Value::as_str) {
                Some("free") => algebra = Some(Algebra::Free),
                Some("comm") => algebra = Some(Algebra::Comm),
                Some("comm-z") => {
                    algebra = Some(Algebra::Comm);
                    qz = true;
                }
                _ => {}
            }
            if vars.is_empty() {
                if let Ok(names) = words::word_vars(&v) {
                    vars = names;
                }
            }
        } else {
            exprs.extend(
                text.lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty())
                    .map(str::to_string),
            );
        }
    }
    if exprs.is_empty() {
        return Err("no input expressions (pass -e or pipe JSON/lines on stdin)".to_string());
    }
    if vars.is_empty() {
        vars = match (exprs.len(), default_z) {
            (1, false) | (2, _) => vec!["x".into(), "y".into()],
            (1, true) | (3, _) => vec!["x".into(), "y".into(), "z".into()],
            (4, _) => vec!["x".into(), "y".into(), "t".into(), "z".into()],
            (n, _) => return Err(format!("cannot infer variables for {n} expressions")),
        };
    }
    Ok(Inputs {
        algebra: algebra.unwrap_or(Algebra::Comm),
        qz,
        vars,
        exprs,
        order,
    })
}

fn comm_endo(exprs: &[String], ctx: &Arc<VarContext>) -> Result<CommEndo<Rational>, String> {
    let images = exprs
        .iter()
        .map(|e| expr::comm_poly(e, ctx))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CommEndo::new(images))
}

fn comm_endo_qz(exprs: &[String], ctx: &Arc<VarContext>) -> Result<CommEndo<RatFunc>, String> {
    let images = exprs
        .iter()
        .map(|e| expr::comm_poly_qz(e, ctx))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CommEndo::new(images))
}

fn free_endo(exprs: &[String], ctx: &Arc<VarContext>) -> Result<FreeEndo, String> {
    let images = exprs
        .iter()
        .map(|e| expr::free_poly(e, ctx))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FreeEndo::new(images))
}

/// If one image is missing and the last variable is `z`, complete the
/// tuple with the identity image of `z`.
fn complete_with_z(inputs: &mut Inputs) {
    if inputs.exprs.len() + 1 == inputs.vars.len() {
        if let Some(last) = inputs.vars.last() {
            if last == "z" {
                inputs.exprs.push(last.clone());
            }
        }
    }
}

fn common_fields(
    command: &str,
    inputs: &Inputs,
    images: Vec<String>,
    algebra_tag: &str,
) -> Map<String, Value> {
    let mut out = Map::new();
    out.insert("schema".into(), json!(1));
    out.insert("command".into(), json!(command));
    out.insert("algebra".into(), json!(algebra_tag));
    out.insert("vars".into(), json!(inputs.vars));
    out.insert("order".into(), json!(inputs.order.to_string()));
    out.insert("images".into(), json!(images));
    out
}

fn finish(
    mut out: Map<String, Value>,
    verdict: &tamecheck_core::Verdict,
    cert_vars: &[String],
    order: &TermOrder,
) -> (Map<String, Value>, i32) {
    out.insert("verdict".into(), json!(render::tag_str(verdict.tag)));
    if let Some(cert) = &verdict.certificate {
        render::certificate_fields(cert, cert_vars, order, &mut out);
    }
    out.insert("trace".into(), json!(verdict.trace));
    (out, render::exit_code(verdict.tag))
}

fn run(cli: Cli) -> Result<(Map<String, Value>, i32), String> {
    match &cli.command {
        Command::CheckAut => check_aut(&cli),
        Command::CheckCoord => check_coord(&cli),
        Command::CheckZTame => check_z_tame(&cli, false),
        Command::CheckZTameCoord => check_z_tame(&cli, true),
        Command::CheckZCoord => check_z_coord(&cli),
        Command::Ge2 => ge2(&cli),
        Command::Jacobian => jacobian(&cli),
        Command::Metabelian => metabelian(&cli),
        Command::EvalWord => eval_word(&cli),
        Command::Example { name, arg } => example(&cli, name, arg.as_deref()),
        Command::ExpDerivation { multiplier } => exp_derivation(&cli, multiplier.as_deref()),
        Command::SmithCheck { multiplier } => smith_check(&cli, multiplier),
    }
}

fn check_aut(cli: &Cli) -> Result<(Map<String, Value>, i32), String> {
    let inputs = gather(cli, false)?;
    match inputs.algebra {
        Algebra::Free => {
            if inputs.exprs.len() != 2 {
                return Err("check-aut over the free algebra expects two images".to_string());
            }
            let ctx = VarContext::new(inputs.vars.clone());
            let phi = free_endo(&inputs.exprs, &ctx)?;
            let images = phi.images().iter().map(FreePoly::format_canonical).collect();
            let out = common_fields("check-aut", &inputs, images, "free");
            let v = recognize_aut_free2(&phi);
            Ok(finish(out, &v, &inputs.vars, &inputs.order))
        }
        Algebra::Comm if inputs.qz => {
            let vars: Vec<String> = inputs.vars.iter().filter(|v| *v != "z").cloned().collect();
            if inputs.exprs.len() != 2 || vars.len() != 2 {
                return Err("check-aut over Q(z) expects two images in two variables".to_string());
            }
            let ctx = VarContext::new(vars.clone());
            let phi = comm_endo_qz(&inputs.exprs, &ctx)?;
            let images = phi
                .images()
                .iter()
                .map(|p| p.format_with(&inputs.order))
                .collect();
            let mut out = common_fields("check-aut", &inputs, images, "comm-z");
            out.insert("field".into(), json!("q(z)"));
            let v = recognize_aut_k2_ratfunc(&phi);
            Ok(finish(out, &v, &vars, &inputs.order))
        }
        Algebra::Comm => {
            if inputs.exprs.len() != 2 {
                return Err("check-aut expects two images".to_string());
            }
            let ctx = VarContext::new(inputs.vars.clone());
            let phi = comm_endo(&inputs.exprs, &ctx)?;
            let images = phi
                .images()
                .iter()
                .map(|p| p.format_with(&inputs.order))
                .collect();
            let mut out = common_fields("check-aut", &inputs, images, "comm");
            out.insert("field".into(), json!("q"));
            let v = recognize_aut_k2(&phi);
            Ok(finish(out, &v, &inputs.vars, &inputs.order))
        }
    }
}

fn check_coord(cli: &Cli) -> Result<(Map<String, Value>, i32), String> {
    let inputs = gather(cli, false)?;
    if inputs.exprs.len() != 1 {
        return Err("check-coord expects a single polynomial".to_string());
    }
    let ctx = VarContext::new(inputs.vars.clone());
    match inputs.algebra {
        Algebra::Free => {
            let f = expr::free_poly(&inputs.exprs[0], &ctx)?;
            let out = common_fields("check-coord", &inputs, vec![f.format_canonical()], "free");
            let v = recognize_coord_free2(&f);
            Ok(finish(out, &v, &inputs.vars, &inputs.order))
        }
        Algebra::Comm => {
            let f = expr::comm_poly(&inputs.exprs[0], &ctx)?;
            let out = common_fields(
                "check-coord",
                &inputs,
                vec![f.format_with(&inputs.order)],
                "comm",
            );
            let v = recognize_coord_k2(&f);
            Ok(finish(out, &v, &inputs.vars, &inputs.order))
        }
    }
}

fn check_z_tame(cli: &Cli, coord_only: bool) -> Result<(Map<String, Value>, i32), String> {
    let mut inputs = gather(cli, true)?;
    let command = if coord_only { "check-z-tame-coord" } else { "check-z-tame" };
    if coord_only || inputs.exprs.len() == 1 {
        // Single polynomial: is it a z-tame coordinate of K[z][x,y]?
        if inputs.exprs.len() != 1 {
            return Err(format!("{command} expects a single polynomial"));
        }
        if inputs.vars.len() != 3 {
            return Err(format!("{command} expects variables x, y, z"));
        }
        let ctx = VarContext::new(inputs.vars.clone());
        let f = expr::comm_poly(&inputs.exprs[0], &ctx)?;
        let out = common_fields(command, &inputs, vec![f.format_with(&inputs.order)], "comm");
        let v = z_tame_coord_test(&f, &inputs.order);
        let cert_vars: Vec<String> = inputs.vars[..2].to_vec();
        return Ok(finish(out, &v, &cert_vars, &inputs.order));
    }
    complete_with_z(&mut inputs);
    if inputs.exprs.len() != 3 || inputs.vars.len() != 3 {
        return Err(format!("{command} expects three images of x, y, z"));
    }
    let ctx = VarContext::new(inputs.vars.clone());
    match inputs.algebra {
        Algebra::Comm => {
            let phi = comm_endo(&inputs.exprs, &ctx)?;
            let images = phi
                .images()
                .iter()
                .map(|p| p.format_with(&inputs.order))
                .collect();
            let out = common_fields(command, &inputs, images, "comm");
            let v = recognize_z_tame_aut_comm(&phi);
            let cert_vars: Vec<String> = inputs.vars[..2].to_vec();
            Ok(finish(out, &v, &cert_vars, &inputs.order))
        }
        Algebra::Free => {
            let phi = free_endo(&inputs.exprs, &ctx)?;
            let images = phi.images().iter().map(FreePoly::format_canonical).collect();
            let out = common_fields(command, &inputs, images, "free");
            // x,y-linear maps go through the z-Jacobian; everything else
            // through the bidegree peeling recognizer.
            let v = if z_linear_data(&phi).is_ok() {
                linear_z_tame_test(&phi).expect("linearity just checked")
            } else {
                recognize_z_tame_aut3(&phi)
            };
            Ok(finish(out, &v, &inputs.vars, &inputs.order))
        }
    }
}

fn check_z_coord(cli: &Cli) -> Result<(Map<String, Value>, i32), String> {
    let inputs = gather(cli, true)?;
    if inputs.exprs.len() != 1 || inputs.vars.len() != 3 {
        return Err("check-z-coord expects one polynomial in x, y, z".to_string());
    }
    let ctx = VarContext::new(inputs.vars.clone());
    let f = expr::comm_poly(&inputs.exprs[0], &ctx)?;
    let mut out = common_fields(
        "check-z-coord",
        &inputs,
        vec![f.format_with(&inputs.order)],
        "comm",
    );
    let v = z_coord_test(&f, &inputs.order);
    if v.tag == VerdictTag::Coordinate {
        let tame = z_tame_coord_test(&f, &inputs.order);
        out.insert("z_tame".into(), json!(tame.tag == VerdictTag::ZTame));
    }
    Ok(finish(out, &v, &inputs.vars, &inputs.order))
}

fn parse_matrix(
    text: &str,
    ctx: &Arc<VarContext>,
) -> Result<Mat2Poly<Rational>, String> {
    let rows: Vec<&str> = text.split(';').collect();
    if rows.len() != 2 {
        return Err("matrix input must have two `;`-separated rows".to_string());
    }
    let mut entries = Vec::with_capacity(4);
    for row in rows {
        let cells: Vec<&str> = row.split(',').collect();
        if cells.len() != 2 {
            return Err("matrix rows must have two `,`-separated entries".to_string());
        }
        for cell in cells {
            entries.push(expr::comm_poly(cell, ctx)?);
        }
    }
    Ok(Mat2Poly::new([
        [entries[0].clone(), entries[1].clone()],
        [entries[2].clone(), entries[3].clone()],
    ]))
}

fn ge2(cli: &Cli) -> Result<(Map<String, Value>, i32), String> {
    let order = TermOrder::parse(&cli.order)
        .ok_or_else(|| format!("unknown term order {:?}", cli.order))?;
    let text = match &cli.matrix {
        Some(m) => m.clone(),
        None => read_stdin()?,
    };
    let vars: Vec<String> = if cli.vars.is_empty() {
        vec!["z1".into(), "z2".into()]
    } else {
        cli.vars.clone()
    };
    if vars.len() != 2 {
        return Err("ge2 expects a two-variable polynomial ring".to_string());
    }
    let ctx = VarContext::new(vars.clone());
    let m = parse_matrix(&text, &ctx)?;
    let mut out = Map::new();
    out.insert("schema".into(), json!(1));
    out.insert("command".into(), json!("ge2"));
    out.insert("vars".into(), json!(vars));
    out.insert("order".into(), json!(order.to_string()));
    out.insert("matrix".into(), render::matrix_json(&m, &order));
    out.insert("det".into(), json!(m.det().format_with(&order)));
    match ge2_reduce(&m, &order).map_err(|e| e.to_string())? {
        Ge2Outcome::Factors(factors) => {
            out.insert("verdict".into(), json!("in-ge2"));
            let fs: Vec<Value> = factors
                .iter()
                .map(|f| match f {
                    ElemFactor::Lower(p) => {
                        json!({"kind": "lower", "offset": p.format_with(&order)})
                    }
                    ElemFactor::Upper(p) => {
                        json!({"kind": "upper", "offset": p.format_with(&order)})
                    }
                    ElemFactor::Diag(a, d) => {
                        json!({"kind": "diagonal", "a": a.to_string(), "d": d.to_string()})
                    }
                })
                .collect();
            out.insert("factorization".into(), json!(fs));
        }
        Ge2Outcome::Obstruction { a, b } => {
            out.insert("verdict".into(), json!("not-in-ge2"));
            out.insert("obstruction".into(), render::matrix_json(&m, &order));
            out.insert(
                "stuck_pair".into(),
                json!([a.format_with(&order), b.format_with(&order)]),
            );
        }
    }
    Ok((out, 0))
}

fn jacobian(cli: &Cli) -> Result<(Map<String, Value>, i32), String> {
    let mut inputs = gather(cli, false)?;
    let ctx = VarContext::new(inputs.vars.clone());
    match inputs.algebra {
        Algebra::Comm => {
            if inputs.exprs.len() != inputs.vars.len() {
                return Err("jacobian expects one image per variable".to_string());
            }
            let phi = comm_endo(&inputs.exprs, &ctx)?;
            let j = jacobian_comm(&phi);
            let det = matrix_det(&j);
            let images = phi
                .images()
                .iter()
                .map(|p| p.format_with(&inputs.order))
                .collect();
            let mut out = common_fields("jacobian", &inputs, images, "comm");
            let rows: Vec<Vec<String>> = j
                .iter()
                .map(|row| row.iter().map(|p| p.format_with(&inputs.order)).collect())
                .collect();
            out.insert("jacobian".into(), json!(rows));
            out.insert("det".into(), json!(det.format_with(&inputs.order)));
            Ok((out, 0))
        }
        Algebra::Free => {
            complete_with_z(&mut inputs);
            if inputs.exprs.len() != 3 {
                return Err("the free-algebra jacobian expects images of x, y, z".to_string());
            }
            let ctx = VarContext::new(inputs.vars.clone());
            let phi = free_endo(&inputs.exprs, &ctx)?;
            let m = z_jacobian(&phi).map_err(|e| e.to_string())?;
            let images = phi.images().iter().map(FreePoly::format_canonical).collect();
            let mut out = common_fields("jacobian", &inputs, images, "free");
            out.insert("jacobian".into(), render::matrix_json(&m, &inputs.order));
            out.insert("det".into(), json!(m.det().format_with(&inputs.order)));
            Ok((out, 0))
        }
    }
}

fn metabelian(cli: &Cli) -> Result<(Map<String, Value>, i32), String> {
    let mut inputs = gather(cli, true)?;
    complete_with_z(&mut inputs);
    if inputs.exprs.len() != 3 || inputs.vars.len() != 3 {
        return Err("metabelian expects three free-algebra images of x, y, z".to_string());
    }
    let ctx = VarContext::new(inputs.vars.clone());
    let phi = free_endo(&inputs.exprs, &ctx)?;
    let images = phi.images().iter().map(FreePoly::format_canonical).collect();
    let mut out = common_fields("metabelian", &inputs, images, "free");
    let jm = jm_matrix(&phi);
    let rows: Vec<Vec<String>> = jm
        .iter()
        .map(|row| row.iter().map(|p| p.format_with(&inputs.order)).collect())
        .collect();
    out.insert("jm".into(), json!(rows));
    out.insert(
        "det_jm".into(),
        json!(matrix_det(&jm).format_with(&inputs.order)),
    );
    out.insert(
        "metabelian_automorphism".into(),
        json!(render::tag_str(metabelian_aut_test(&phi).tag)),
    );
    let v = metabelian_wild(&phi);
    Ok(finish(out, &v, &inputs.vars, &inputs.order))
}

fn eval_word(cli: &Cli) -> Result<(Map<String, Value>, i32), String> {
    let order = TermOrder::parse(&cli.order)
        .ok_or_else(|| format!("unknown term order {:?}", cli.order))?;
    let text = read_stdin()?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| format!("stdin is not JSON: {e}"))?;
    let word_json = v.get("word").unwrap_or(&v);
    let algebra = word_json
        .get("algebra")
        .and_then(Value::as_str)
        .ok_or("word JSON: missing algebra field")?;
    let mut out = Map::new();
    out.insert("schema".into(), json!(1));
    out.insert("command".into(), json!("eval-word"));
    out.insert("algebra".into(), json!(algebra));
    out.insert("order".into(), json!(order.to_string()));
    match algebra {
        "comm" => {
            let (word, vars) = words::parse_comm_word(word_json)?;
            let ctx = VarContext::new(vars.clone());
            let phi = word.eval(&ctx);
            out.insert("vars".into(), json!(vars));
            out.insert(
                "images".into(),
                json!(phi
                    .images()
                    .iter()
                    .map(|p| p.format_with(&order))
                    .collect::<Vec<_>>()),
            );
        }
        "comm-z" => {
            let (word, vars) = words::parse_comm_word_z(word_json)?;
            let ctx = VarContext::new(vars.clone());
            let phi = word.eval(&ctx);
            out.insert("vars".into(), json!(vars));
            out.insert(
                "images".into(),
                json!(phi
                    .images()
                    .iter()
                    .map(|p| p.format_with(&order))
                    .collect::<Vec<_>>()),
            );
        }
        "free" => {
            let (word, vars) = words::parse_free_word(word_json)?;
            let ctx = VarContext::new(vars.clone());
            let phi = word.eval(&ctx);
            out.insert("vars".into(), json!(vars));
            out.insert(
                "images".into(),
                json!(phi
                    .images()
                    .iter()
                    .map(FreePoly::format_canonical)
                    .collect::<Vec<_>>()),
            );
        }
        other => return Err(format!("word JSON: unknown algebra {other:?}")),
    }
    Ok((out, 0))
}

fn nagata_endo() -> CommEndo<Rational> {
    let ctx = VarContext::xyz();
    let x = CommPoly::<Rational>::var(&ctx, 0);
    let y = CommPoly::<Rational>::var(&ctx, 1);
    let z = CommPoly::<Rational>::var(&ctx, 2);
    let w = &(&y * &y) + &(&x * &z);
    CommEndo::new(vec![
        &(&x - &(&w * &y).scale(&Rational::from_i64(2))) - &(&(&w * &w) * &z),
        &y + &(&w * &z),
        z,
    ])
}

fn example(
    cli: &Cli,
    name: &str,
    arg: Option<&str>,
) -> Result<(Map<String, Value>, i32), String> {
    let order = TermOrder::parse(&cli.order)
        .ok_or_else(|| format!("unknown term order {:?}", cli.order))?;
    let mut out = Map::new();
    out.insert("schema".into(), json!(1));
    out.insert("command".into(), json!("example"));
    out.insert("example".into(), json!(name));
    out.insert("order".into(), json!(order.to_string()));
    let free_images = |phi: &FreeEndo| -> Vec<String> {
        phi.images().iter().map(FreePoly::format_canonical).collect()
    };
    match name {
        "nagata" => {
            let nu = nagata_endo();
            out.insert("algebra".into(), json!("comm"));
            out.insert("vars".into(), json!(["x", "y", "z"]));
            out.insert("fix_z".into(), json!(true));
            out.insert(
                "images".into(),
                json!(nu
                    .images()
                    .iter()
                    .map(|p| p.format_with(&order))
                    .collect::<Vec<_>>()),
            );
        }
        "anick" => {
            let nu = anick();
            out.insert("algebra".into(), json!("free"));
            out.insert("vars".into(), json!(["x", "y", "z"]));
            out.insert("fix_z".into(), json!(true));
            out.insert("images".into(), json!(free_images(&nu)));
        }
        "cohn" => {
            let zz = VarContext::z1z2();
            let one = CommPoly::<Rational>::one(&zz);
            let z1 = CommPoly::var(&zz, 0);
            let z2 = CommPoly::var(&zz, 1);
            let m = Mat2Poly::new([
                [&one + &(&z1 * &z2), &z2 * &z2],
                [-&(&z1 * &z1), &one - &(&z1 * &z2)],
            ]);
            out.insert("vars".into(), json!(["z1", "z2"]));
            out.insert("matrix".into(), render::matrix_json(&m, &order));
            out.insert("det".into(), json!(m.det().format_with(&order)));
        }
        "sigma-h" => {
            let tz = th_context();
            let h = expr::free_poly(arg.unwrap_or("t"), &tz)?;
            let phi = sigma_h(&h);
            out.insert("algebra".into(), json!("free"));
            out.insert("vars".into(), json!(["x", "y", "z"]));
            out.insert("fix_z".into(), json!(true));
            out.insert("h".into(), json!(h.format_canonical()));
            out.insert("images".into(), json!(free_images(&phi)));
        }
        "omega-m" => {
            let m: u32 = arg
                .unwrap_or("1")
                .parse()
                .map_err(|_| "omega-m expects a positive integer parameter".to_string())?;
            if m == 0 {
                return Err("omega-m expects a positive integer parameter".to_string());
            }
            let phi = omega_m(m);
            out.insert("algebra".into(), json!("free"));
            out.insert("vars".into(), json!(["x", "y", "z"]));
            out.insert("fix_z".into(), json!(true));
            out.insert("m".into(), json!(m));
            out.insert("images".into(), json!(free_images(&phi)));
        }
        "mennicke" => {
            let word = mennicke_factorization();
            let vars: Vec<String> =
                ["x", "y", "t", "z"].iter().map(|s| s.to_string()).collect();
            let ctx = VarContext::new(vars.clone());
            let phi = word.eval(&ctx);
            out.insert("algebra".into(), json!("free"));
            out.insert("vars".into(), json!(vars));
            out.insert("fix_z".into(), json!(true));
            out.insert("word".into(), words::free_word_json(&word, &vars));
            out.insert("images".into(), json!(free_images(&phi)));
        }
        "nagata-exp" => {
            let ctx = VarContext::xyz();
            let x = CommPoly::<Rational>::var(&ctx, 0);
            let y = CommPoly::<Rational>::var(&ctx, 1);
            let z = CommPoly::<Rational>::var(&ctx, 2);
            let delta = Derivation::new(vec![
                y.scale(&Rational::from_i64(-2)),
                z.clone(),
                CommPoly::zero(&ctx),
            ]);
            let w = &(&y * &y) + &(&x * &z);
            let scaled = delta.scaled(&w);
            let phi = scaled.exp(cli.cap).map_err(|e| e.to_string())?;
            let index = scaled.nilpotency_index(cli.cap).map_err(|e| e.to_string())?;
            out.insert("algebra".into(), json!("comm"));
            out.insert("vars".into(), json!(["x", "y", "z"]));
            out.insert("fix_z".into(), json!(true));
            out.insert(
                "derivation".into(),
                json!(delta
                    .images()
                    .iter()
                    .map(|p| p.format_with(&order))
                    .collect::<Vec<_>>()),
            );
            out.insert("multiplier".into(), json!(w.format_with(&order)));
            out.insert("nilpotency_index".into(), json!(index));
            out.insert(
                "images".into(),
                json!(phi
                    .images()
                    .iter()
                    .map(|p| p.format_with(&order))
                    .collect::<Vec<_>>()),
            );
        }
        other => {
            return Err(format!(
                "unknown example {other:?} (try nagata, anick, cohn, sigma-h, omega-m, mennicke, nagata-exp)"
            ))
        }
    }
    Ok((out, 0))
}

fn derivation_inputs(cli: &Cli) -> Result<(Inputs, Derivation, Arc<VarContext>), String> {
    let inputs = gather(cli, false)?;
    if inputs.exprs.len() != inputs.vars.len() {
        return Err("expected one derivation image per variable".to_string());
    }
    let ctx = VarContext::new(inputs.vars.clone());
    let images = inputs
        .exprs
        .iter()
        .map(|e| expr::comm_poly(e, &ctx))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((inputs, Derivation::new(images), ctx))
}

fn exp_derivation(
    cli: &Cli,
    multiplier: Option<&str>,
) -> Result<(Map<String, Value>, i32), String> {
    let (inputs, mut delta, ctx) = derivation_inputs(cli)?;
    let mut out = common_fields(
        "exp-derivation",
        &inputs,
        delta
            .images()
            .iter()
            .map(|p| p.format_with(&inputs.order))
            .collect(),
        "comm",
    );
    out.remove("images");
    out.insert(
        "derivation".into(),
        json!(delta
            .images()
            .iter()
            .map(|p| p.format_with(&inputs.order))
            .collect::<Vec<_>>()),
    );
    if let Some(w_text) = multiplier {
        let w = expr::comm_poly(w_text, &ctx)?;
        if !delta.annihilates(&w) {
            return Err("the multiplier is not in the kernel of the derivation".to_string());
        }
        out.insert("multiplier".into(), json!(w.format_with(&inputs.order)));
        delta = delta.scaled(&w);
    }
    match delta.exp(cli.cap) {
        Ok(phi) => {
            let index = delta
                .nilpotency_index(cli.cap)
                .expect("exp just terminated within the cap");
            out.insert("verdict".into(), json!("automorphism"));
            out.insert("nilpotency_index".into(), json!(index));
            out.insert(
                "images".into(),
                json!(phi
                    .images()
                    .iter()
                    .map(|p| p.format_with(&inputs.order))
                    .collect::<Vec<_>>()),
            );
            Ok((out, 0))
        }
        Err(ExpError::NotNilpotentWithinCap { cap }) => {
            out.insert("verdict".into(), json!("inconclusive"));
            out.insert(
                "reason".into(),
                json!(format!("derivation is not nilpotent within {cap} iterations")),
            );
            Ok((out, 2))
        }
    }
}

fn smith_check(cli: &Cli, multiplier: &str) -> Result<(Map<String, Value>, i32), String> {
    let (inputs, delta, ctx) = derivation_inputs(cli)?;
    let w = expr::comm_poly(multiplier, &ctx)?;
    if !delta.annihilates(&w) {
        return Err("the multiplier is not in the kernel of the derivation".to_string());
    }
    let mut out = Map::new();
    out.insert("schema".into(), json!(1));
    out.insert("command".into(), json!("smith-check"));
    out.insert("vars".into(), json!(inputs.vars));
    out.insert("order".into(), json!(inputs.order.to_string()));
    out.insert(
        "derivation".into(),
        json!(delta
            .images()
            .iter()
            .map(|p| p.format_with(&inputs.order))
            .collect::<Vec<_>>()),
    );
    out.insert("multiplier".into(), json!(w.format_with(&inputs.order)));
    match smith_identity_check(&w, &delta, cli.cap) {
        Ok(holds) => {
            out.insert("holds".into(), json!(holds));
            Ok((out, 0))
        }
        Err(ExpError::NotNilpotentWithinCap { cap }) => {
            out.insert("verdict".into(), json!("inconclusive"));
            out.insert(
                "reason".into(),
                json!(format!("derivation is not nilpotent within {cap} iterations")),
            );
            Ok((out, 2))
        }
    }
}
