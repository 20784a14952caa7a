#ifndef KAWAHARA_FFT_HPP
#define KAWAHARA_FFT_HPP

#include <complex>
#include <vector>

namespace kawahara {

// Thin wrapper over FFTW complex transforms with a per-size plan cache.
// Plans are created with FFTW_ESTIMATE so results are bit-reproducible from
// run to run.  Not thread safe (all use in this project is sequential).
namespace fft {

/// In-place DFT, A_k = sum_j a_j e^{-2pi i jk/M}.  Unnormalized.
void forward(std::vector<std::complex<double>>& a);

/// In-place inverse DFT, a_j = sum_k A_k e^{+2pi i jk/M}.  Unnormalized.
void backward(std::vector<std::complex<double>>& a);

/// Smallest size >= n that FFTW handles at O(n log n) without large prime
/// factors (products of 2,3,5,7).
int good_size(int n);

}  // namespace fft
}  // namespace kawahara

#endif
