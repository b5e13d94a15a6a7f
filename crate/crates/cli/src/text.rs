//! Plain-text rendering of the JSON reports.

use std::fmt::Write;

use serde_json::Value;

fn compact(v: &Value) -> String {
    serde_json::to_string(v).unwrap_or_default()
}

fn check_lines(out: &mut String, indent: &str, checks: &Value) {
    for c in checks.as_array().into_iter().flatten() {
        let status = c["status"].as_str().unwrap_or("?");
        let _ = write!(out, "{indent}[{status:>7}] {}", c["suite"].as_str().unwrap_or("?"));
        if !c["witness"].is_null() {
            let _ = write!(out, "  witness: {}", compact(&c["witness"]));
        } else if !c["data"].is_null() {
            let _ = write!(out, "  {}", compact(&c["data"]));
        }
        out.push('\n');
    }
}

fn summary_lines(out: &mut String, summary: &Value) {
    for row in summary.as_array().into_iter().flatten() {
        let c = &row["counts"];
        let _ = writeln!(
            out,
            "  {:<26} pass {:>4}  fail {:>4}  skip {:>4}  unknown {:>4}",
            row["suite"].as_str().unwrap_or("?"),
            c["pass"],
            c["fail"],
            c["skip"],
            c["unknown"]
        );
    }
}

fn field_lines(out: &mut String, indent: &str, v: &Value) {
    if let Value::Object(map) = v {
        for (k, val) in map {
            match val {
                Value::Object(_) => {
                    let _ = writeln!(out, "{indent}{k}:");
                    field_lines(out, &format!("{indent}  "), val);
                }
                _ => {
                    let _ = writeln!(out, "{indent}{k}: {}", compact(val));
                }
            }
        }
    }
}

pub fn render(report: &Value) -> String {
    let mut out = String::new();
    let command = report["command"].as_str().unwrap_or("?");
    let _ = writeln!(out, "{command}: {}", report["status"].as_str().unwrap_or("?"));
    if let Some(err) = report.get("error") {
        match err["line"].as_u64() {
            Some(line) => {
                let _ = writeln!(out, "error: line {line}: {}", err["message"].as_str().unwrap_or(""));
            }
            None => {
                let _ = writeln!(out, "error: {}", err["message"].as_str().unwrap_or(""));
            }
        }
        return out;
    }
    let a = &report["algebra"];
    let _ = writeln!(out, "algebra {} over F_{} of dimension {}", a["name"].as_str().unwrap_or("?"), a["p"], a["dim"]);
    match command {
        "validate" => {
            for m in report["modules"].as_array().into_iter().flatten() {
                let _ = writeln!(out, "  module {} (dimension {})", m["name"].as_str().unwrap_or("?"), m["dim"]);
            }
            for x in report["complexes"].as_array().into_iter().flatten() {
                let _ = writeln!(out, "  complex {} (lo {}, ranks {})", x["name"].as_str().unwrap_or("?"), x["lo"], compact(&x["ranks"]));
            }
            check_lines(&mut out, "  ", &report["flag_checks"]);
        }
        "analyze" => {
            let _ = writeln!(out, "object {}", report["object"].as_str().unwrap_or("?"));
            field_lines(&mut out, "  ", &report["result"]);
            if !report["presentation_complex"].is_null() {
                let _ = writeln!(out, "presentation complex:");
                field_lines(&mut out, "  ", &report["presentation_complex"]);
            }
        }
        "fuzz" => {
            let s = &report["settings"];
            let _ = writeln!(out, "seed {} count {}", s["seed"], s["count"]);
            summary_lines(&mut out, &report["summary"]);
            for case in report["cases"].as_array().into_iter().flatten() {
                if case.get("instance").is_some() {
                    let _ = writeln!(out, "case {} (lo {}, ranks {}):", case["case"], case["lo"], compact(&case["ranks"]));
                    let failing: Vec<Value> =
                        case["checks"].as_array().into_iter().flatten().filter(|c| c["status"] == "fail").cloned().collect();
                    check_lines(&mut out, "  ", &Value::Array(failing));
                }
            }
        }
        "theorems" => {
            summary_lines(&mut out, &report["summary"]);
            check_lines(&mut out, "  ", &report["flag_checks"]);
            for o in report["objects"].as_array().into_iter().flatten() {
                let _ = writeln!(out, "{}:", o["object"].as_str().unwrap_or("?"));
                check_lines(&mut out, "  ", &o["checks"]);
            }
        }
        _ => {}
    }
    out
}
