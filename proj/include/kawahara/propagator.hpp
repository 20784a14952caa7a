#ifndef KAWAHARA_PROPAGATOR_HPP
#define KAWAHARA_PROPAGATOR_HPP

#include "kawahara/dd_real.hpp"
#include "kawahara/fourier_state.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kawahara {

/// A rational time t = 2pi p/q in lowest terms, q >= 1.
struct RationalTime {
    std::int64_t p = 0;
    std::int64_t q = 1;
};

/// Continued-fraction classification of t against the 2pi scale: returns the
/// smallest-q convergent of t/(2pi) with q <= q_max and |t/(2pi) - p/q| <= tol,
/// or nullopt ("irrational at this resolution").
std::optional<RationalTime> classify_time(double t, std::int64_t q_max, double tol);

/// Translate coefficients c_j, j = 0..q-1, with
///   e^{-2pi i p (k^5 - alpha k^3)/q} = sum_j c_j e^{-2pi i j k/q}  for all k,
/// so that e^{Lt} g = sum_j c_j g(. - 2pi j/q) at t = 2pi p/q (mean-zero L).
/// Phases are evaluated from exact integer residues mod q; the q-point inverse
/// transform is the only floating step.
std::vector<complex_t> rational_multipliers(const RationalTime& rt, int alpha);

/// A realized rational-time propagator: q translate coefficients plus the
/// Galilean shift m*t carried by the first-order term of L.
struct TranslateDecomposition {
    std::int64_t q = 1;
    std::vector<complex_t> coeffs;
    double mean_shift = 0.0;  // = mean_drift * t
};

TranslateDecomposition make_translate_decomposition(const RationalTime& rt, int alpha,
                                                    double mean_drift);

/// output(x) = Re sum_j c_j g(x - 2pi j/q - mean_shift).  Requires the grid to
/// realize every shift exactly: q | M and mean_shift an integer multiple of
/// the grid spacing (both rejected otherwise -- no silent interpolation).
RealGridFunction reconstruct_translates(const RealGridFunction& g,
                                        const TranslateDecomposition& td);

/// Exact evolution under e^{Lt}.  Times within tol = 1e-12 of a rational
/// 2pi p/q with q <= 64 are evaluated on the exact rational path (integer
/// residues); all other times go through compensated phase reduction.
/// Isometry |output_k| = |g_k| holds on either path.
FourierState propagate(const FourierState& g, double t, const DispersionSymbol& sym);

/// Rational-path propagation at exactly t = 2pi p/q.
FourierState propagate_rational(const FourierState& g, const RationalTime& rt,
                                const DispersionSymbol& sym);

/// Reduced linear phase angle(k, t) = (k^5 - alpha k^3 + m k) t mod 2pi via
/// double-double reduction, never snapped to rationals.  The multiplier of
/// e^{Lt} on mode k is e^{-i angle}.  Shared by the solver, the Duhamel
/// extraction and the representation verifier so all three see identical
/// phases.
double linear_phase(const DispersionSymbol& sym, std::int64_t k, double t);

inline complex_t linear_multiplier(const DispersionSymbol& sym, std::int64_t k, double t) {
    const double ang = linear_phase(sym, k, t);
    return {std::cos(ang), -std::sin(ang)};
}

}  // namespace kawahara

#endif
