//! Saturation-curve equation (both directions) and the vapor-side
//! high-temperature region boundary line. The two saturation forms are
//! exact algebraic inverses of each other.

const N: [f64; 10] = [
    1167.0521452767,
    -724213.16703206,
    -17.073846940092,
    12020.82470247,
    -3232555.0322333,
    14.91510861353,
    -4823.2657361591,
    405113.40542057,
    -0.23855557567849,
    650.17534844798,
];

const P_STAR: f64 = 1e6; // Pa

/// Saturation pressure [Pa] at T [K]. Caller guards the 273.15..=647.096 range.
pub fn saturation_pressure(t: f64) -> f64 {
    let theta = t + N[8] / (t - N[9]);
    let a = theta * theta + N[0] * theta + N[1];
    let b = N[2] * theta * theta + N[3] * theta + N[4];
    let c = N[5] * theta * theta + N[6] * theta + N[7];
    let base = 2.0 * c / (-b + (b * b - 4.0 * a * c).sqrt());
    P_STAR * base.powi(4)
}

/// Saturation temperature [K] at p [Pa]. Caller guards the pressure range.
pub fn saturation_temperature(p: f64) -> f64 {
    let beta = (p / P_STAR).powf(0.25);
    let e = beta * beta + N[2] * beta + N[5];
    let f = N[0] * beta * beta + N[3] * beta + N[6];
    let g = N[1] * beta * beta + N[4] * beta + N[7];
    let d = 2.0 * g / (-f - (f * f - 4.0 * e * g).sqrt());
    (N[9] + d - ((N[9] + d) * (N[9] + d) - 4.0 * (N[8] + N[9] * d)).sqrt()) / 2.0
}

const B23: [f64; 5] = [
    348.05185628969,
    -1.1671859879975,
    0.0010192970039326,
    572.54459862746,
    13.91883977887,
];

/// Pressure [Pa] on the vapor/near-critical region boundary at T [K]
/// (623.15 K..863.15 K).
pub fn boundary23_pressure(t: f64) -> f64 {
    P_STAR * (B23[0] + B23[1] * t + B23[2] * t * t)
}
