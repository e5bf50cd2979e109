//! Liquid-region forward equation: dimensionless Gibbs energy over
//! 273.15 K..623.15 K, saturation pressure..100 MPa.

use super::GAS_CONSTANT;

const I: [i32; 34] = [
    0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 8, 8, 21, 23,
    29, 30, 31, 32,
];
const J: [i32; 34] = [
    -2, -1, 0, 1, 2, 3, 4, 5, -9, -7, -1, 0, 1, 3, -3, 0, 1, 3, 17, -4, 0, 6, -5, -2, 10, -8,
    -11, -6, -29, -31, -38, -39, -40, -41,
];
const N: [f64; 34] = [
    0.14632971213167,
    -0.84548187169114,
    -3.756360367204,
    3.3855169168385,
    -0.95791963387872,
    0.15772038513228,
    -0.016616417199501,
    0.00081214629983568,
    0.00028319080123804,
    -0.00060706301565874,
    -0.018990068218419,
    -0.032529748770505,
    -0.021841717175414,
    -5.283835796993e-5,
    -0.00047184321073267,
    -0.00030001780793026,
    4.7661393906987e-5,
    -4.4141845330846e-6,
    -7.2694996297594e-16,
    -3.1679644845054e-5,
    -2.8270797985312e-6,
    -8.5205128120103e-10,
    -2.2425281908e-6,
    -6.5171222895601e-7,
    -1.4341729937924e-13,
    -4.0516996860117e-7,
    -1.2734301741641e-9,
    -1.7424871230634e-10,
    -6.8762131295531e-19,
    1.4478307828521e-20,
    2.6335781662795e-23,
    -1.1947622640071e-23,
    1.8228094581404e-24,
    -9.3537087292458e-26,
];

const P_STAR: f64 = 16.53e6; // Pa
const T_STAR: f64 = 1386.0; // K

/// Specific enthalpy [J/kg], entropy [J/(kg.K)] and isobaric heat
/// capacity [J/(kg.K)] at (T [K], p [Pa]).
pub fn h_s_cp(t: f64, p: f64) -> (f64, f64, f64) {
    let pi = p / P_STAR;
    let tau = T_STAR / t;
    let a = 7.1 - pi;
    let b = tau - 1.222;

    let mut gamma = 0.0;
    let mut gamma_tau = 0.0;
    let mut gamma_tautau = 0.0;
    for k in 0..N.len() {
        let ai = a.powi(I[k]);
        gamma += N[k] * ai * b.powi(J[k]);
        gamma_tau += N[k] * ai * f64::from(J[k]) * b.powi(J[k] - 1);
        gamma_tautau += N[k] * ai * f64::from(J[k] * (J[k] - 1)) * b.powi(J[k] - 2);
    }

    let h = GAS_CONSTANT * t * tau * gamma_tau;
    let s = GAS_CONSTANT * (tau * gamma_tau - gamma);
    let cp = -GAS_CONSTANT * tau * tau * gamma_tautau;
    (h, s, cp)
}
