//! Plain-text rendering of certificates.

use std::fmt::Write;

use serde_json::Value;

use crate::certificate::{Block, Certificate};

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        Value::Object(o) if o.contains_key("num") && o.contains_key("den") => {
            let (n, d) = (o["num"].as_str().unwrap_or("?"), o["den"].as_str().unwrap_or("?"));
            if d == "1" {
                n.to_string()
            } else {
                format!("{n}/{d}")
            }
        }
        Value::Object(o) if o.contains_key("expr") => scalar(&o["expr"]),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            format!("{{{}}}", a.iter().map(scalar).collect::<Vec<_>>().join(", "))
        }
        other => other.to_string(),
    }
}

fn generic(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(o) if !(o.contains_key("num") || o.contains_key("expr")) => {
            for (k, x) in o {
                match x {
                    Value::Object(_) | Value::Array(_) if !is_flat(x) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        generic(out, x, indent + 2);
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", scalar(x));
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                if let Value::Object(o) = x {
                    let line = o
                        .iter()
                        .map(|(k, y)| format!("{k}={}", scalar(y)))
                        .collect::<Vec<_>>()
                        .join("  ");
                    let _ = writeln!(out, "{pad}- {line}");
                } else {
                    let _ = writeln!(out, "{pad}- {}", scalar(x));
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other));
        }
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_object() && !x.is_array()),
        Value::Object(o) => o.contains_key("num") || o.contains_key("expr"),
        _ => true,
    }
}

fn orbit_table(out: &mut String, data: &Value) {
    let _ = writeln!(
        out,
        "  k = {}, [k^2] = {}, 1 + k + [k^2] = {}, boundary (q-1)/2 = {}",
        data["k"], data["k2_mod_q"], data["one_plus_k_plus_k2"], data["boundary"]
    );
    let _ = writeln!(out, "  {:<20} {:>6}  {:<7} {:>5}", "orbit", "sum", "half", "small");
    for o in data["orbits"].as_array().into_iter().flatten() {
        let _ = writeln!(
            out,
            "  {:<20} {:>6}  {:<7} {:>5}",
            scalar(&o["elements"]),
            o["sum"].to_string(),
            o["half"].as_str().unwrap_or("?"),
            o["small_count"].to_string(),
        );
    }
    let _ = writeln!(
        out,
        "  first half: {}, second half: {}",
        data["first_half_count"], data["second_half_count"]
    );
}

fn cm_types(out: &mut String, data: &Value) {
    for key in ["JY", "JX"] {
        let t = &data[key];
        let _ = writeln!(
            out,
            "  {key}: Q(zeta({})) fixed by {} (degree {}), Phi = {}",
            t["conductor"],
            scalar(&t["fixing_group"]),
            t["field_degree"],
            scalar(&t["embeddings"]),
        );
    }
    let _ = writeln!(out, "  components: {}", scalar(&data["components"]));
}

fn beta_signs(out: &mut String, data: &Value) {
    let betas = data["betas"].as_array().cloned().unwrap_or_default();
    let line = betas
        .iter()
        .map(|b| {
            let s = if b["sign"].as_i64() == Some(1) { '+' } else { '-' };
            format!("{}{s}", b["l"])
        })
        .collect::<Vec<_>>()
        .join(" ");
    let _ = writeln!(out, "  signs of beta_l: {line}");
}

fn render_block(out: &mut String, b: &Block) {
    let _ = writeln!(out, "[{}] {}", b.status.as_str(), b.name);
    match b.name.as_str() {
        "orbits" if b.data.get("orbits").is_some() => orbit_table(out, &b.data),
        "cm_type" if b.data.get("JY").is_some() => cm_types(out, &b.data),
        "beta_signs" if b.data.get("betas").is_some() => beta_signs(out, &b.data),
        _ => generic(out, &b.data, 2),
    }
}

pub fn render_text(cert: &Certificate) -> String {
    let p = &cert.payload;
    let mut out = String::new();
    let _ = writeln!(out, "metacover {} | {}", p.tool_version, p.command);
    let _ = writeln!(out, "family: {}  parameters: {}", p.family, p.parameters);
    let _ = writeln!(out);
    for b in &p.blocks {
        render_block(&mut out, b);
        let _ = writeln!(out);
    }
    let _ = writeln!(out, "overall: {}", p.overall.as_str());
    let _ = writeln!(out, "payload sha256: {}", cert.payload_sha256);
    if let Some(t) = &cert.generated_at {
        let _ = writeln!(out, "generated at: {t}");
    }
    out
}
