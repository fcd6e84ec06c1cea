/// Parses radians (`1.5708`) or rational multiples of π (`pi`, `-3pi/8`, `7π/6`,
/// `2*pi/3`, `0.5pi`).
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t: String = s.trim().chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
    let bad = || format!("cannot read \"{}\" as an angle", s);
    let t = t.replace('π', "pi");
    let Some(at) = t.find("pi") else {
        return t.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(bad);
    };
    let (head, tail) = (&t[..at], &t[at + 2..]);
    let head = head.strip_suffix('*').unwrap_or(head);
    let coef = match head {
        "" | "+" => 1.0,
        "-" => -1.0,
        h => h.parse::<f64>().map_err(|_| bad())?,
    };
    let den = match tail {
        "" => 1.0,
        d => d.strip_prefix('/').ok_or_else(bad)?.parse::<f64>().map_err(|_| bad())?,
    };
    if den == 0.0 || !coef.is_finite() || !den.is_finite() {
        return Err(bad());
    }
    Ok(coef * std::f64::consts::PI / den)
}
