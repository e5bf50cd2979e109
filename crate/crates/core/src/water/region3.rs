//! Near-critical/supercritical region: Helmholtz free energy in
//! (density, temperature). Fixing a state from (T, p) here requires
//! inverting p(rho, T) for the density on the correct branch.

use super::{PropertyError, GAS_CONSTANT, RHO_CRITICAL, T_CRITICAL};

const N1: f64 = 1.0658070028513; // ln(delta) coefficient
const I: [i32; 39] = [
    0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4, 4, 4, 5, 5, 5, 6, 6,
    6, 7, 8, 9, 9, 10, 10, 11,
];
const J: [i32; 39] = [
    0, 1, 2, 7, 10, 12, 23, 2, 6, 15, 17, 0, 2, 6, 7, 22, 26, 0, 2, 4, 16, 26, 0, 2, 4, 26, 1,
    3, 26, 0, 2, 26, 2, 26, 2, 26, 0, 1, 26,
];
const N: [f64; 39] = [
    -15.732845290239,
    20.944396974307,
    -7.6867707878716,
    2.6185947787954,
    -2.808078114862,
    1.2053369696517,
    -0.0084566812812502,
    -1.2654315477714,
    -1.1524407806681,
    0.88521043984318,
    -0.64207765181607,
    0.38493460186671,
    -0.85214708824206,
    4.8972281541877,
    -3.0502617256965,
    0.039420536879154,
    0.12558408424308,
    -0.2799932969871,
    1.389979956946,
    -2.018991502357,
    -0.0082147637173963,
    -0.47596035734923,
    0.0439840744735,
    -0.44476435428739,
    0.90572070719733,
    0.70522450087967,
    0.10770512626332,
    -0.32913623258954,
    -0.50871062041158,
    -0.022175400873096,
    0.094260751665092,
    0.16436278447961,
    -0.013503372241348,
    -0.014834345352472,
    0.00057922953628084,
    0.0032308904703711,
    8.0964802996215e-5,
    -0.00016557679795037,
    -4.4923899061815e-5,
];

/// Pressure [Pa] at (rho [kg/m3], T [K]).
pub fn pressure(rho: f64, t: f64) -> f64 {
    let delta = rho / RHO_CRITICAL;
    let tau = T_CRITICAL / t;
    let mut phi_delta = N1 / delta;
    for k in 0..N.len() {
        phi_delta += N[k] * f64::from(I[k]) * delta.powi(I[k] - 1) * tau.powi(J[k]);
    }
    rho * GAS_CONSTANT * t * delta * phi_delta
}

/// Enthalpy [J/kg], entropy [J/(kg.K)] and isobaric heat capacity
/// [J/(kg.K)] at (rho [kg/m3], T [K]).
pub fn h_s_cp(rho: f64, t: f64) -> (f64, f64, f64) {
    let delta = rho / RHO_CRITICAL;
    let tau = T_CRITICAL / t;

    let mut phi = N1 * delta.ln();
    let mut phi_delta = N1 / delta;
    let mut phi_deltadelta = -N1 / (delta * delta);
    let mut phi_tau = 0.0;
    let mut phi_tautau = 0.0;
    let mut phi_deltatau = 0.0;
    for k in 0..N.len() {
        let di = delta.powi(I[k]);
        let tj = tau.powi(J[k]);
        phi += N[k] * di * tj;
        phi_delta += N[k] * f64::from(I[k]) * delta.powi(I[k] - 1) * tj;
        phi_deltadelta += N[k] * f64::from(I[k] * (I[k] - 1)) * delta.powi(I[k] - 2) * tj;
        phi_tau += N[k] * di * f64::from(J[k]) * tau.powi(J[k] - 1);
        phi_tautau += N[k] * di * f64::from(J[k] * (J[k] - 1)) * tau.powi(J[k] - 2);
        phi_deltatau +=
            N[k] * f64::from(I[k]) * delta.powi(I[k] - 1) * f64::from(J[k]) * tau.powi(J[k] - 1);
    }

    let h = GAS_CONSTANT * t * (tau * phi_tau + delta * phi_delta);
    let s = GAS_CONSTANT * (tau * phi_tau - phi);
    let num = delta * phi_delta - delta * tau * phi_deltatau;
    let den = 2.0 * delta * phi_delta + delta * delta * phi_deltadelta;
    let cp = GAS_CONSTANT * (-tau * tau * phi_tautau + num * num / den);
    (h, s, cp)
}

/// Saturated-liquid density estimate [kg/m3], used only to seed and
/// bracket the density inversion on the liquid branch.
pub fn sat_liquid_density_estimate(t: f64) -> f64 {
    let th = (1.0 - t / T_CRITICAL).max(0.0);
    let b = [
        1.99274064,
        1.09965342,
        -0.510839303,
        -1.75493479,
        -45.5170352,
        -674694.450,
    ];
    RHO_CRITICAL
        * (1.0
            + b[0] * th.powf(1.0 / 3.0)
            + b[1] * th.powf(2.0 / 3.0)
            + b[2] * th.powf(5.0 / 3.0)
            + b[3] * th.powf(16.0 / 3.0)
            + b[4] * th.powf(43.0 / 3.0)
            + b[5] * th.powf(110.0 / 3.0))
}

/// Saturated-vapor density estimate [kg/m3]; same role as the liquid
/// estimate, for the vapor branch.
pub fn sat_vapor_density_estimate(t: f64) -> f64 {
    let th = (1.0 - t / T_CRITICAL).max(0.0);
    let c = [
        -2.03150240,
        -2.68302940,
        -5.38626492,
        -17.2991605,
        -44.7586581,
        -63.9201063,
    ];
    RHO_CRITICAL
        * (c[0] * th.powf(1.0 / 3.0)
            + c[1] * th.powf(2.0 / 3.0)
            + c[2] * th.powf(4.0 / 3.0)
            + c[3] * th.powf(3.0)
            + c[4] * th.powf(37.0 / 6.0)
            + c[5] * th.powf(71.0 / 6.0))
            .exp()
}

/// Which side of the two-phase dome a density inversion should land on.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Liquid,
    Vapor,
    /// T >= T_crit: single monotone isotherm, no branch choice.
    Single,
}

/// Solve p(rho, T) = p for rho on the requested branch.
///
/// Bracketed bisection with Newton acceleration; the saturated-density
/// estimates keep the bracket clear of the unstable part of the
/// isotherm for sub-critical temperatures.
pub fn density(p: f64, t: f64, branch: Branch) -> Result<f64, PropertyError> {
    let (mut lo, mut hi) = match branch {
        Branch::Single => (0.5, 800.0),
        Branch::Liquid => {
            let est = sat_liquid_density_estimate(t);
            // Walk the lower end up if it starts on the wrong side of
            // the unstable hump.
            let mut lo = 0.97 * est;
            let mut ok = false;
            for _ in 0..30 {
                if pressure(lo, t) - p <= 0.0 {
                    ok = true;
                    break;
                }
                lo *= 1.005;
            }
            if !ok {
                return Err(PropertyError::NoConvergence {
                    context: "density inversion (liquid branch)",
                });
            }
            (lo, 800.0)
        }
        Branch::Vapor => {
            let est = sat_vapor_density_estimate(t);
            let mut hi = f64::NAN;
            for factor in [1.03, 1.02, 1.01, 1.005, 1.0, 0.995, 0.99] {
                let cand = (factor * est).min(RHO_CRITICAL);
                if pressure(cand, t) - p >= 0.0 {
                    hi = cand;
                    break;
                }
            }
            if !hi.is_finite() {
                return Err(PropertyError::NoConvergence {
                    context: "density inversion (vapor branch)",
                });
            }
            (0.1, hi)
        }
    };

    let f_lo = pressure(lo, t) - p;
    let f_hi = pressure(hi, t) - p;
    if f_lo > 0.0 || f_hi < 0.0 {
        return Err(PropertyError::NoConvergence {
            context: "density inversion (no bracket)",
        });
    }

    let mut rho = 0.5 * (lo + hi);
    for _ in 0..100 {
        let f = pressure(rho, t) - p;
        if f.abs() <= 1e-9 * p {
            return Ok(rho);
        }
        if f > 0.0 {
            hi = rho;
        } else {
            lo = rho;
        }
        let eps = 1e-6 * rho;
        let slope = (pressure(rho + eps, t) - pressure(rho - eps, t)) / (2.0 * eps);
        let next = if slope > 0.0 { rho - f / slope } else { f64::NAN };
        rho = if next.is_finite() && next > lo && next < hi {
            next
        } else {
            0.5 * (lo + hi)
        };
    }
    Err(PropertyError::NoConvergence {
        context: "density inversion",
    })
}
