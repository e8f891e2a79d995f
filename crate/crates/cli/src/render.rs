//! Verdicts and certificates as JSON (schema 1) or plain text.

use serde_json::{json, Map, Value};

use tamecheck_core::maps::{Certificate, VerdictTag};
use tamecheck_core::ring::{Mat2Poly, TermOrder};
use tamecheck_core::Rational;

use crate::words;

pub fn tag_str(tag: VerdictTag) -> &'static str {
    match tag {
        VerdictTag::Automorphism => "automorphism",
        VerdictTag::NotAutomorphism => "not-automorphism",
        VerdictTag::Tame => "tame",
        VerdictTag::NotTame => "not-tame",
        VerdictTag::ZTame => "z-tame",
        VerdictTag::NotZTame => "not-z-tame",
        VerdictTag::ZWild => "z-wild",
        VerdictTag::Wild => "wild",
        VerdictTag::Coordinate => "coordinate",
        VerdictTag::NotCoordinate => "not-coordinate",
        VerdictTag::Inconclusive => "inconclusive",
    }
}

pub fn matrix_json(m: &Mat2Poly<Rational>, order: &TermOrder) -> Value {
    json!([
        [m.entry(0, 0).format_with(order), m.entry(0, 1).format_with(order)],
        [m.entry(1, 0).format_with(order), m.entry(1, 1).format_with(order)],
    ])
}

/// Certificate fields merged into the output object. `vars` names the
/// word's variables (for `comm-z` words, without `z`).
pub fn certificate_fields(
    cert: &Certificate,
    vars: &[String],
    order: &TermOrder,
    out: &mut Map<String, Value>,
) {
    match cert {
        Certificate::CommWord(w) => {
            out.insert("word".into(), words::comm_word_json(w, vars, order));
        }
        Certificate::CommWordZ(w) => {
            out.insert("word".into(), words::comm_word_z_json(w, vars, order));
        }
        Certificate::FreeWord(w) => {
            out.insert("word".into(), words::free_word_json(w, vars));
        }
        Certificate::CommMate(p) => {
            out.insert("mate".into(), json!(p.format_with(order)));
        }
        Certificate::CommMateZ(p) => {
            out.insert("mate".into(), json!(p.format_with(order)));
        }
        Certificate::FreeMate(p) => {
            out.insert("mate".into(), json!(p.format_canonical()));
        }
        Certificate::UnimodularGradient { fx, fy } => {
            out.insert("fx".into(), json!(fx.format_with(order)));
            out.insert("fy".into(), json!(fy.format_with(order)));
            out.insert("unimodular".into(), json!(true));
        }
        Certificate::StuckPair { p, q } => {
            out.insert(
                "stuck_pair".into(),
                json!([p.format_with(order), q.format_with(order)]),
            );
        }
        Certificate::Ge2Obstruction { matrix, a, b }
        | Certificate::MetabelianObstruction { matrix, a, b } => {
            out.insert("obstruction".into(), matrix_json(matrix, order));
            out.insert(
                "stuck_pair".into(),
                json!([a.format_with(order), b.format_with(order)]),
            );
        }
        Certificate::BidegreeDeadlock { u, v } => {
            out.insert(
                "deadlock".into(),
                json!({"u": u.format_canonical(), "v": v.format_canonical()}),
            );
        }
        Certificate::Reason(r) => {
            out.insert("reason".into(), json!(r));
        }
    }
}

/// Exit status for a finished decision: 0 decided, 2 inconclusive.
pub fn exit_code(tag: VerdictTag) -> i32 {
    if tag.is_decided() {
        0
    } else {
        2
    }
}

/// Render an output object per the requested format.
pub fn render(out: &Map<String, Value>, json_format: bool) -> String {
    if json_format {
        return Value::Object(out.clone()).to_string();
    }
    let mut text = String::new();
    for (k, v) in out {
        if k == "schema" {
            continue;
        }
        match v {
            Value::String(s) => text.push_str(&format!("{k}: {s}\n")),
            Value::Array(items) if k == "trace" || k == "images" => {
                text.push_str(&format!("{k}:\n"));
                for item in items {
                    match item {
                        Value::String(s) => text.push_str(&format!("  {s}\n")),
                        other => text.push_str(&format!("  {other}\n")),
                    }
                }
            }
            other => text.push_str(&format!("{k}: {other}\n")),
        }
    }
    text
}
