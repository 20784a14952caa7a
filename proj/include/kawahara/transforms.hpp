#ifndef KAWAHARA_TRANSFORMS_HPP
#define KAWAHARA_TRANSFORMS_HPP

#include "kawahara/fourier_state.hpp"

#include <vector>

namespace kawahara {

/// Discrete realization of u_k = (1/2pi) \int e^{-ikx} f(x) dx on the grid
/// x_j = 2pi j/M, i.e. the length-M DFT divided by M.  Exact for inputs
/// band-limited to |k| <= N when M >= 2N+1.  The result is symmetrized
/// (real input guarantees hermitian coefficients up to roundoff).
FourierState forward_transform(const RealGridFunction& f, int n_modes);

/// Synthesis samples(j) = sum_k u_k e^{ik x_j}.  Requires M >= 2N+1 and a
/// real_symmetric state; use inverse_transform_real_part to project a
/// non-symmetric state onto its real part explicitly.
RealGridFunction inverse_transform(const FourierState& u, int n_points);
RealGridFunction inverse_transform_real_part(const FourierState& u, int n_points);

/// Full complex synthesis on M points (no symmetry requirement).
std::vector<complex_t> synthesize(const FourierState& u, int n_points);

/// Sobolev norm (sum <k>^{2s} |u_k|^2)^{1/2} with <k> = (1+k^2)^{1/2}.
double sobolev_norm(const FourierState& u, double s);

/// Reference O(N^2) convolution (a*b)_k = sum_{k1+k2=k} a_{k1} b_{k2},
/// truncated to the common band.  The oracle for the FFT-based product.
FourierState convolve_direct(const FourierState& a, const FourierState& b);

/// Dealiased FFT product; agrees with convolve_direct to roundoff.
FourierState convolve_fft(const FourierState& a, const FourierState& b);

/// Convolution on the extended band |k| <= 2N (no truncation is ever
/// active since the true product has degree 2N).  Index k + 2N.
std::vector<complex_t> full_convolution(const FourierState& a, const FourierState& b);

}  // namespace kawahara

#endif
