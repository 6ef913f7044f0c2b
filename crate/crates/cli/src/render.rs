use epr_frames::lab::{ChshReport, CorrelationReport, OnePageOutcome};
use serde_json::{json, Value};

pub const CURVE_HEADER: &str = "theta_a,theta_b,estimator,realization,n,scalar,biv_x,biv_y,biv_z,reference";
pub const CHSH_HEADER: &str = "term,theta_a,theta_b,estimator,realization,n,scalar,biv_x,biv_y,biv_z,reference";

/// Angle cell; blank when the detector was given as a vector.
fn angle(theta: Option<f64>) -> String {
    theta.map(|t| t.to_string()).unwrap_or_default()
}

pub fn curve_row(theta_a: Option<f64>, theta_b: Option<f64>, r: &CorrelationReport) -> String {
    let [x, y, z] = r.bivector_part;
    format!(
        "{},{},{},{},{},{},{},{},{},{}",
        angle(theta_a),
        angle(theta_b),
        r.estimator,
        r.realization,
        r.n,
        r.scalar_part,
        x,
        y,
        z,
        r.reference
    )
}

pub fn report_json(r: &CorrelationReport, onepage: Option<&OnePageOutcome>) -> Value {
    let mut v = serde_json::to_value(r).expect("report serializes");
    if let Some(o) = onepage {
        v["division_form"] = json!({
            "scalar_part": o.division_form.scalar + 0.0,
            "bivector_part": o.division_form.bivector.map(|b| b + 0.0),
        });
    }
    v
}

pub fn chsh_csv(angles: [Option<f64>; 4], r: &ChshReport) -> String {
    let [a, ap, b, bp] = angles;
    let rows = [
        ("ab", a, b, &r.e_ab),
        ("ab'", a, bp, &r.e_ab_prime),
        ("a'b", ap, b, &r.e_a_prime_b),
        ("a'b'", ap, bp, &r.e_a_prime_b_prime),
    ];
    let mut out = format!("{CHSH_HEADER}\n");
    for (term, ta, tb, rep) in rows {
        out.push_str(&format!("{term},{}\n", curve_row(ta, tb, rep)));
    }
    let e = &r.e_ab;
    out.push_str(&format!("S,,,{},{},{},{},,,,\n", e.estimator, e.realization, e.n, r.s_value));
    out
}

pub fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes") + "\n"
}
