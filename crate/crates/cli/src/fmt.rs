/// Fixed six-decimal rendering used in CSV and text reports; `inf` for +∞.
pub fn fixed(v: f64) -> String {
    if v == f64::INFINITY {
        "inf".to_string()
    } else if v == f64::NEG_INFINITY {
        "-inf".to_string()
    } else if v == 0.0 {
        // Avoid printing "-0.000000".
        "0.000000".to_string()
    } else {
        format!("{v:.6}")
    }
}

/// JSON value for an exponent: a number, or the string `"inf"` since JSON has
/// no infinity literal.
pub fn json_number(v: f64) -> serde_json::Value {
    if v.is_finite() {
        serde_json::Value::from(v)
    } else {
        serde_json::Value::from(fixed(v))
    }
}
