//! Plain-text rendering for `--format pretty`.

use serde_json::Value;

use crate::view::PacketView;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        Value::Object(m) if m.values().all(|x| x.is_number()) => {
            Some(format!("{{{}}}", m.iter().map(|(k, x)| format!("{k}: {x}")).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn walk(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) => {
            let width = m.keys().map(|k| k.len()).max().unwrap_or(0);
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k:<width$}  {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}\n"));
                        walk(x, indent + 2, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        walk(x, indent + 2, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

pub fn render(v: &Value) -> String {
    let mut out = String::new();
    walk(v, 0, &mut out);
    out
}

/// Header lines followed by one aligned row per datum.
pub fn packet(p: &PacketView) -> String {
    let mut out = format!(
        "group {}  parameter {}\nepsilon_psi {}  regular {}  base {}  total {}\n",
        p.group, p.parameter, p.epsilon_psi, p.regular, p.base_group, p.total
    );
    let head = ["eta", "i", "levi", "sign", "base", "base_eta", "degree", "range"];
    let mut rows: Vec<Vec<String>> = vec![head.iter().map(|s| s.to_string()).collect()];
    for e in &p.entries {
        let eta = serde_json::to_value(&e.eta).map(|v| scalar(&v).unwrap_or_default()).unwrap_or_default();
        for d in &e.data {
            rows.push(vec![
                eta.clone(),
                format!("{:?}", d.i_vector),
                d.levi.clone(),
                d.sign.join(","),
                d.base_form.clone(),
                serde_json::to_value(&d.base_eta).map(|v| scalar(&v).unwrap_or_default()).unwrap_or_default(),
                d.degree.to_string(),
                d.range.to_string(),
            ]);
        }
    }
    let widths: Vec<usize> = (0..head.len()).map(|k| rows.iter().map(|r| r[k].chars().count()).max().unwrap_or(0)).collect();
    for r in rows {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}
