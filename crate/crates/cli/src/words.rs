//! JSON round-tripping of tame generator words. Every polynomial and
//! coefficient is carried as canonical expression text, so emitted words
//! can be replayed through `eval-word` or re-read by the library.

use std::sync::Arc;

use serde_json::{json, Value};

use tamecheck_core::field::Field;
use tamecheck_core::maps::{CommGen, FreeGen, TameWord};
use tamecheck_core::ring::{TermOrder, VarContext};
use tamecheck_core::{RatFunc, Rational};

use crate::expr;

fn var_name(vars: &[String], i: usize) -> &str {
    vars.get(i).map(String::as_str).unwrap_or("?")
}

fn comm_gen_json<C: Field>(g: &CommGen<C>, vars: &[String], order: &TermOrder) -> Value {
    match g {
        CommGen::Affine {
            matrix,
            translation,
        } => json!({
            "kind": "affine",
            "matrix": matrix
                .iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "translation": translation.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        }),
        CommGen::Triangular { var, scale, offset } => json!({
            "kind": "triangular",
            "var": var_name(vars, *var),
            "scale": scale.to_string(),
            "offset": offset.format_with(order),
        }),
    }
}

fn free_gen_json(g: &FreeGen, vars: &[String]) -> Value {
    match g {
        FreeGen::Affine {
            matrix,
            translation,
        } => json!({
            "kind": "affine",
            "matrix": matrix
                .iter()
                .map(|row| row.iter().map(|p| p.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "translation": translation.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        }),
        FreeGen::Triangular { var, scale, offset } => json!({
            "kind": "triangular",
            "var": var_name(vars, *var),
            "scale": scale.to_string(),
            "offset": offset.format_canonical(),
        }),
        FreeGen::EpsilonZ {
            target,
            source,
            coeff,
            left,
            right,
        } => json!({
            "kind": "epsilon-z",
            "target": var_name(vars, *target),
            "source": var_name(vars, *source),
            "coeff": coeff.to_string(),
            "left": left,
            "right": right,
        }),
    }
}

/// A word over `Q` coefficients as JSON.
pub fn comm_word_json(
    word: &TameWord<CommGen<Rational>>,
    vars: &[String],
    order: &TermOrder,
) -> Value {
    json!({
        "algebra": "comm",
        "vars": vars,
        "gens": word.gens.iter().map(|g| comm_gen_json(g, vars, order)).collect::<Vec<_>>(),
    })
}

/// A word over `Q(z)` coefficients as JSON; `vars` excludes `z`.
pub fn comm_word_z_json(
    word: &TameWord<CommGen<RatFunc>>,
    vars: &[String],
    order: &TermOrder,
) -> Value {
    json!({
        "algebra": "comm-z",
        "vars": vars,
        "gens": word.gens.iter().map(|g| comm_gen_json(g, vars, order)).collect::<Vec<_>>(),
    })
}

/// A free-algebra word as JSON.
pub fn free_word_json(word: &TameWord<FreeGen>, vars: &[String]) -> Value {
    json!({
        "algebra": "free",
        "vars": vars,
        "z": word.z_index.map(|i| var_name(vars, i).to_string()),
        "gens": word.gens.iter().map(|g| free_gen_json(g, vars)).collect::<Vec<_>>(),
    })
}

fn str_field<'v>(v: &'v Value, key: &str) -> Result<&'v str, String> {
    v.get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| format!("word JSON: missing string field {key:?}"))
}

fn arr_field<'v>(v: &'v Value, key: &str) -> Result<&'v Vec<Value>, String> {
    v.get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| format!("word JSON: missing array field {key:?}"))
}

pub fn word_vars(v: &Value) -> Result<Vec<String>, String> {
    arr_field(v, "vars")?
        .iter()
        .map(|s| {
            s.as_str()
                .map(str::to_string)
                .ok_or_else(|| "word JSON: variable names must be strings".to_string())
        })
        .collect()
}

fn var_index(vars: &[String], name: &str) -> Result<usize, String> {
    vars.iter()
        .position(|v| v == name)
        .ok_or_else(|| format!("word JSON: unknown variable {name:?}"))
}

fn parse_comm_gen<C: Field>(
    v: &Value,
    vars: &[String],
    scalar: &dyn Fn(&str) -> Result<C, String>,
    poly: &dyn Fn(&str) -> Result<tamecheck_core::ring::CommPoly<C>, String>,
) -> Result<CommGen<C>, String> {
    match str_field(v, "kind")? {
        "affine" => {
            let matrix = arr_field(v, "matrix")?
                .iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(|| "word JSON: matrix rows must be arrays".to_string())?
                        .iter()
                        .map(|e| {
                            scalar(e.as_str().ok_or("word JSON: matrix entries must be strings")?)
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let translation = arr_field(v, "translation")?
                .iter()
                .map(|e| scalar(e.as_str().ok_or("word JSON: translation entries must be strings")?))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(CommGen::Affine {
                matrix,
                translation,
            })
        }
        "triangular" => Ok(CommGen::Triangular {
            var: var_index(vars, str_field(v, "var")?)?,
            scale: scalar(str_field(v, "scale")?)?,
            offset: poly(str_field(v, "offset")?)?,
        }),
        other => Err(format!("word JSON: unknown commutative generator kind {other:?}")),
    }
}

/// Rebuild a `Q`-coefficient word from JSON.
pub fn parse_comm_word(v: &Value) -> Result<(TameWord<CommGen<Rational>>, Vec<String>), String> {
    let vars = word_vars(v)?;
    let ctx = VarContext::new(vars.clone());
    let gens = arr_field(v, "gens")?
        .iter()
        .map(|g| {
            parse_comm_gen(g, &vars, &expr::rational, &|s| expr::comm_poly(s, &ctx))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((TameWord::new(vars.len(), None, gens), vars))
}

/// Rebuild a `Q(z)`-coefficient word from JSON; `vars` excludes `z`.
pub fn parse_comm_word_z(v: &Value) -> Result<(TameWord<CommGen<RatFunc>>, Vec<String>), String> {
    let vars = word_vars(v)?;
    let ctx = VarContext::new(vars.clone());
    let gens = arr_field(v, "gens")?
        .iter()
        .map(|g| {
            parse_comm_gen(g, &vars, &expr::ratfunc, &|s| expr::comm_poly_qz(s, &ctx))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((TameWord::new(vars.len(), None, gens), vars))
}

/// Rebuild a free-algebra word from JSON.
pub fn parse_free_word(v: &Value) -> Result<(TameWord<FreeGen>, Vec<String>), String> {
    let vars = word_vars(v)?;
    let ctx = VarContext::new(vars.clone());
    let z_index = match v.get("z") {
        Some(Value::String(name)) => Some(var_index(&vars, name)?),
        Some(Value::Null) | None => None,
        Some(other) => return Err(format!("word JSON: bad z field {other}")),
    };
    let gens = arr_field(v, "gens")?
        .iter()
        .map(|g| parse_free_gen(g, &vars, &ctx))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((TameWord::new(vars.len(), z_index, gens), vars))
}

fn parse_free_gen(
    v: &Value,
    vars: &[String],
    ctx: &Arc<VarContext>,
) -> Result<FreeGen, String> {
    match str_field(v, "kind")? {
        "affine" => {
            let rows = arr_field(v, "matrix")?;
            if rows.len() != 2 {
                return Err("word JSON: free affine matrix must be 2x2".to_string());
            }
            let mut entries = Vec::with_capacity(4);
            for row in rows {
                let row = row
                    .as_array()
                    .ok_or("word JSON: matrix rows must be arrays")?;
                if row.len() != 2 {
                    return Err("word JSON: free affine matrix must be 2x2".to_string());
                }
                for e in row {
                    entries.push(expr::z_polynomial(
                        e.as_str().ok_or("word JSON: matrix entries must be strings")?,
                    )?);
                }
            }
            let tr = arr_field(v, "translation")?;
            if tr.len() != 2 {
                return Err("word JSON: free affine translation must have 2 entries".to_string());
            }
            let mut translation = Vec::with_capacity(2);
            for e in tr {
                translation.push(expr::z_polynomial(
                    e.as_str().ok_or("word JSON: translation entries must be strings")?,
                )?);
            }
            Ok(FreeGen::Affine {
                matrix: [
                    [entries[0].clone(), entries[1].clone()],
                    [entries[2].clone(), entries[3].clone()],
                ],
                translation: [translation[0].clone(), translation[1].clone()],
            })
        }
        "triangular" => Ok(FreeGen::Triangular {
            var: var_index(vars, str_field(v, "var")?)?,
            scale: expr::rational(str_field(v, "scale")?)?,
            offset: expr::free_poly(str_field(v, "offset")?, ctx)?,
        }),
        "epsilon-z" => {
            let nat = |key: &str| -> Result<usize, String> {
                v.get(key)
                    .and_then(Value::as_u64)
                    .map(|n| n as usize)
                    .ok_or_else(|| format!("word JSON: missing nonnegative field {key:?}"))
            };
            Ok(FreeGen::EpsilonZ {
                target: var_index(vars, str_field(v, "target")?)?,
                source: var_index(vars, str_field(v, "source")?)?,
                coeff: expr::rational(str_field(v, "coeff")?)?,
                left: nat("left")?,
                right: nat("right")?,
            })
        }
        other => Err(format!("word JSON: unknown free generator kind {other:?}")),
    }
}
