#ifndef KAWAHARA_NORMAL_FORM_HPP
#define KAWAHARA_NORMAL_FORM_HPP

#include "kawahara/fourier_state.hpp"
#include "kawahara/solver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kawahara {

// Differentiation-by-parts machinery for the quadratic Kawahara nonlinearity.
// All operators act on mean-zero states; mode 0 of every output is 0.  The
// denominators never vanish for alpha in {-1, 0, 1}: see denominator_safety.

/// B(phi,psi)_k = -(1/2) sum_{k1+k2=k, k1 k2 != 0}
///                phi_{k1} psi_{k2} / (k1 k2 {5(k1^2+k2^2+k1k2) - 3 alpha}).
FourierState bilinear_B(const FourierState& phi, const FourierState& psi, int alpha);

/// rho(u)_k = i |u_k|^2 u_k / (2 (15k^2 - 3 alpha) k).
FourierState resonant_rho(const FourierState& u, int alpha);

/// sigma(u)_k = -i u_k sum_{|j| != |k|, j != 0}
///              |u_j|^2 / (j {5(k^2 - kj + j^2) - 3 alpha}).
FourierState resonant_sigma(const FourierState& u, int alpha);

/// R(u)_k = -(i/2) sum over k1+k2+k3 = k with
///          (k1+k2)(k2+k3)(k3+k1) != 0 and k_i != 0 of
///          u_{k1} u_{k2} u_{k3} / (k1 {5(k1^2 + (k2+k3)^2 + k1(k2+k3)) - 3 alpha}).
/// Dispatches to the direct triple sum for N <= 64 and to the convolution
/// form with resonant-correction subtraction above; the two agree to 1e-10.
FourierState nonresonant_R(const FourierState& u, int alpha);
FourierState nonresonant_R_direct(const FourierState& u, int alpha);
FourierState nonresonant_R_fast(const FourierState& u, int alpha);

/// The raw trilinear sum over k1+k2+k3 = k with k2+k3 != 0 and k_i != 0
/// (static phases).  On real_symmetric states it equals rho + sigma + R
/// exactly; exposed for the decomposition-consistency tests.
FourierState trilinear_raw(const FourierState& u, int alpha);

/// Exhaustive integer denominator audit over |k| <= k_max, alpha in {-1,0,1}.
struct DenominatorSafety {
    std::int64_t min_abs_theta;      // |5(k1^2+k2^2+k3^2+k1k2+k2k3+k3k1) - 3a|
    std::int64_t min_pair_form;      // 5(k1^2+k2^2+k1k2) - 3a
    std::int64_t min_rho_form;       // 15k^2 - 3a
};
DenominatorSafety denominator_safety(int k_max);

/// Residual of the Fourier-side representation identity
///   u_k(t) = e^{-i phi(k) t} g_k + B(u,u)_k(t) - e^{-i phi(k) t} B(u,u)_k(0)
///            + int_0^t e^{-i phi(k)(t-r)} (rho + sigma + R)(u)_k(r) dr
/// evaluated on a recorded trajectory, with the time integral by composite
/// Simpson on the recorded grid (an O(h^4) end rule closes odd intervals).
/// quad_dt must be an integer multiple of the recording step.
struct RepresentationReport {
    double max_residual = 0.0;
    std::vector<std::pair<double, double>> per_time;  // (t, max_k residual at t)
};
RepresentationReport verify_representation(const Trajectory& tr, const FourierState& g,
                                           const DispersionSymbol& sym, double quad_dt);

/// Empirical operator norms: sup over seeded random unit-H^s samples of
///   |B(phi,psi)|_{H^{s1}} / (|phi|_{H^s} |psi|_{H^s}),
///   |rho(u)|_{H^{s1}} / |u|^3_{H^s},   |sigma(u)|_{H^{s1}} / |u|^3_{H^s},
/// all at alpha = 0 (the constants vary only mildly over {-1,0,1}).
struct MultilinearConstants {
    double ratio_B = 0.0;
    double ratio_rho = 0.0;
    double ratio_sigma = 0.0;
    int trials = 0;
    std::vector<std::string> warnings;  // hypothesis-range violations
};
MultilinearConstants estimate_multilinear_constants(double s, double s1, int n_modes,
                                                    int trials, unsigned seed);

}  // namespace kawahara

#endif
