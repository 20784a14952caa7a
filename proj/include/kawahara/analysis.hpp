#ifndef KAWAHARA_ANALYSIS_HPP
#define KAWAHARA_ANALYSIS_HPP

#include "kawahara/fourier_state.hpp"
#include "kawahara/solver.hpp"

#include <cstdint>
#include <vector>

namespace kawahara {

// ---------------------------------------------------------------------------
// Littlewood-Paley blocks.
//
// The dyadic cutoff is built once from the e^{-1/x} glue:
//   psi(x)  = e^{-1/x} (x > 0),        chi(x) = psi(x) / (psi(x) + psi(1-x)),
//   theta(t) = chi(2 - |t|)            (1 on |t|<=1, 0 on |t|>=2),
//   phi(t)   = theta(t) - theta(2t)    (supported on 1/2 <= |t| <= 2),
// so that phi_0 = theta and phi_0(k) + sum_{j>=1} phi(2^{-j} k) telescopes to
// exactly 1 for every integer k.
// ---------------------------------------------------------------------------

double lp_theta(double t);  // phi_0
double lp_phi(double t);    // annulus bump

/// P_j u: multiply by phi_0(k) for j = 0, by phi(2^{-j} k) for j >= 1.
FourierState lp_projection(const FourierState& u, int j);

/// Smallest J with full band coverage: sum_{j<=J} P_j = Id on |k| <= N.
int lp_max_block(int n_modes);

/// Besov norm sup_{0<=j<=j_max} 2^{sj} |P_j u|_{L^p(T)} for p in {1, 2, inf};
/// the truncation level j_max is reported alongside the value.
struct BesovNorm {
    double value = 0.0;
    int j_max = 0;
};
BesovNorm besov_norm(const FourierState& u, double s, double p);

/// L^p(T) norm of a band-limited state (p in {1, 2, inf}); L^2 by Parseval,
/// L^1 and L^inf on an oversampled grid.
double lp_norm(const FourierState& u, double p);

/// Least-squares slope beta of log2(shell RMS) over dyadic shells
/// 2^j <= |k| < 2^{j+1}, j in [j_min, j_max].  Convention: u in H^s iff
/// beta < -s - 1/2, so the implied Sobolev ceiling is -beta - 1/2.
double decay_slope(const FourierState& u, int j_min, int j_max);
inline double implied_sobolev_ceiling(double beta) { return -beta - 0.5; }

// ---------------------------------------------------------------------------
// Box-counting dimension of the graph of a sampled function.
// ---------------------------------------------------------------------------

struct DimensionEstimate {
    double slope = 0.0;      // estimated dimension D
    double eps_min = 0.0;    // fit window (finest scale used)
    double eps_max = 0.0;    //            (coarsest scale used)
    double r2 = 0.0;
    bool reliable = false;   // r2 >= 0.98
    std::vector<std::pair<double, std::int64_t>> counts;  // all (eps, N(eps))
};

/// Column-oscillation counting: at level l = 1..eps_levels the domain splits
/// into 2^l columns of width eps_l = 2pi/2^l and
///   N(eps_l) = sum_i ( ceil(osc_i / eps_l) + 1 ).
/// The slope is fitted on log N vs log(1/eps) with the two coarsest and two
/// finest levels excluded.  Requires M >= 2^{eps_levels + 4} samples and at
/// least four usable scales.
DimensionEstimate box_dimension(const RealGridFunction& f, int eps_levels);

/// Calibration fractal W(x) = sum_{j=0}^{j_max} 2^{-alpha j} cos(2^j x),
/// graph dimension 2 - alpha.  Requires alpha in (0,1) and 2^{j_max} <= M/4.
RealGridFunction weierstrass(double alpha_exp, int j_max, int n_points);

/// Discrete Bourgain-type diagnostic
///   |u|^2 = 2pi sum_k <k>^{2s} sum_m <tau_m + k^5 - alpha k^3 + mk>^{2b}
///           |u-hat(k, tau_m)|^2 dtau
/// from the temporal DFT of the trajectory after a C^inf taper of relative
/// width 0.1 at both window ends.  Requires a uniform recording grid.
double xsb_norm(const Trajectory& tr, double s, double b, const DispersionSymbol& sym);

}  // namespace kawahara

#endif
