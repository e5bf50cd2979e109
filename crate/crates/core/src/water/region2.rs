//! Vapor-region forward equation: ideal-gas plus residual Gibbs parts,
//! valid up to 1073.15 K below the high-pressure boundary line.

use super::GAS_CONSTANT;

const J0: [i32; 9] = [0, 1, -5, -4, -3, -2, -1, 2, 3];
const N0: [f64; 9] = [
    -9.6927686500217,
    10.086655968018,
    -0.005608791128302,
    0.071452738081455,
    -0.40710498223928,
    1.4240819171444,
    -4.383951131945,
    -0.28408632460772,
    0.021268463753307,
];

const IR: [i32; 43] = [
    1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4, 4, 5, 6, 6, 6, 7, 7, 7, 8, 8, 9, 10, 10,
    10, 16, 16, 18, 20, 20, 20, 21, 22, 23, 24, 24, 24,
];
const JR: [i32; 43] = [
    0, 1, 2, 3, 6, 1, 2, 4, 7, 36, 0, 1, 3, 6, 35, 1, 2, 3, 7, 3, 16, 35, 0, 11, 25, 8, 36, 13,
    4, 10, 14, 29, 50, 57, 20, 35, 48, 21, 53, 39, 26, 40, 58,
];
const NR: [f64; 43] = [
    -0.0017731742473213,
    -0.017834862292358,
    -0.045996013696365,
    -0.057581259083432,
    -0.05032527872793,
    -3.3032641670203e-5,
    -0.00018948987516315,
    -0.0039392777243355,
    -0.043797295650573,
    -2.6674547914087e-5,
    2.0481737692309e-8,
    4.3870667284435e-7,
    -3.227767723857e-5,
    -0.0015033924542148,
    -0.040668253562649,
    -7.8847309559367e-10,
    1.2790717852285e-8,
    4.8225372718507e-7,
    2.2922076337661e-6,
    -1.6714766451061e-11,
    -0.0021171472321355,
    -23.895741934104,
    -5.905956432427e-18,
    -1.2621808899101e-6,
    -0.038946842435739,
    1.1256211360459e-11,
    -8.2311340897998,
    1.9809712802088e-8,
    1.0406965210174e-19,
    -1.0234747095929e-13,
    -1.0018179379511e-9,
    -8.0882908646985e-11,
    0.10693031879409,
    -0.33662250574171,
    8.9185845355421e-25,
    3.0629316876232e-13,
    -4.2002467698208e-6,
    -5.9056029685639e-26,
    3.7826947613457e-6,
    -1.2768608934681e-15,
    7.3087610595061e-29,
    5.5414715350778e-17,
    -9.436970724121e-7,
];

const P_STAR: f64 = 1e6; // Pa
const T_STAR: f64 = 540.0; // K

/// Specific enthalpy [J/kg], entropy [J/(kg.K)] and isobaric heat
/// capacity [J/(kg.K)] at (T [K], p [Pa]).
pub fn h_s_cp(t: f64, p: f64) -> (f64, f64, f64) {
    let pi = p / P_STAR;
    let tau = T_STAR / t;

    let mut g0 = pi.ln();
    let mut g0_tau = 0.0;
    let mut g0_tautau = 0.0;
    for k in 0..N0.len() {
        g0 += N0[k] * tau.powi(J0[k]);
        g0_tau += N0[k] * f64::from(J0[k]) * tau.powi(J0[k] - 1);
        g0_tautau += N0[k] * f64::from(J0[k] * (J0[k] - 1)) * tau.powi(J0[k] - 2);
    }

    let b = tau - 0.5;
    let mut gr = 0.0;
    let mut gr_tau = 0.0;
    let mut gr_tautau = 0.0;
    for k in 0..NR.len() {
        let pik = pi.powi(IR[k]);
        gr += NR[k] * pik * b.powi(JR[k]);
        gr_tau += NR[k] * pik * f64::from(JR[k]) * b.powi(JR[k] - 1);
        gr_tautau += NR[k] * pik * f64::from(JR[k] * (JR[k] - 1)) * b.powi(JR[k] - 2);
    }

    let h = GAS_CONSTANT * t * tau * (g0_tau + gr_tau);
    let s = GAS_CONSTANT * (tau * (g0_tau + gr_tau) - (g0 + gr));
    let cp = -GAS_CONSTANT * tau * tau * (g0_tautau + gr_tautau);
    (h, s, cp)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Specific volume [m3/kg]; exercises the pressure derivative of the
    /// residual part, which production code never touches.
    fn specific_volume(t: f64, p: f64) -> f64 {
        let pi = p / P_STAR;
        let tau = T_STAR / t;
        let b = tau - 0.5;
        let mut gr_pi = 0.0;
        for k in 0..NR.len() {
            gr_pi += NR[k] * f64::from(IR[k]) * pi.powi(IR[k] - 1) * b.powi(JR[k]);
        }
        GAS_CONSTANT * t / p * pi * (1.0 / pi + gr_pi)
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn published_check_points() {
        let cases = [
            (300.0, 0.0035e6, 0.394913866e2, 0.254991145e4, 0.852238967e1),
            (700.0, 0.0035e6, 0.923015898e2, 0.333568375e4, 0.101749996e2),
            (700.0, 30e6, 0.542946619e-2, 0.263149474e4, 0.517540298e1),
        ];
        for (t, p, v, h, s) in cases {
            let (gh, gs, _) = h_s_cp(t, p);
            assert!(rel(specific_volume(t, p), v) < 1e-8, "v at ({t}, {p})");
            assert!(rel(gh / 1e3, h) < 1e-8, "h at ({t}, {p}): {gh}");
            assert!(rel(gs / 1e3, s) < 1e-8, "s at ({t}, {p}): {gs}");
        }
    }
}
