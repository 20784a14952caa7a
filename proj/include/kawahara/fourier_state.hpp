#ifndef KAWAHARA_FOURIER_STATE_HPP
#define KAWAHARA_FOURIER_STATE_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace kawahara {

using complex_t = std::complex<double>;

/// Complex Fourier coefficient sequence on the symmetric band |k| <= N,
/// with the analysis convention  u_k = (1/2pi) \int_T e^{-ikx} u(x) dx.
/// Real-valued functions carry the flag real_symmetric, asserting
/// u_{-k} = conj(u_k) and Im(u_0) = 0.
class FourierState {
  public:
    explicit FourierState(int n_modes, bool real_symmetric = true)
        : n_(check_band(n_modes)), rs_(real_symmetric),
          c_(2 * static_cast<std::size_t>(n_modes) + 1, complex_t{0.0, 0.0}) {}

    FourierState(int n_modes, std::vector<complex_t> coeffs, bool real_symmetric)
        : n_(check_band(n_modes)), rs_(real_symmetric), c_(std::move(coeffs)) {
        if (c_.size() != 2 * static_cast<std::size_t>(n_) + 1)
            throw std::invalid_argument("FourierState: coefficient array must have 2N+1 entries");
    }

    int n_modes() const { return n_; }
    bool real_symmetric() const { return rs_; }
    void set_real_symmetric(bool v) { rs_ = v; }

    complex_t coef(int k) const { return c_[index(k)]; }
    void set_coef(int k, complex_t v) { c_[index(k)] = v; }

    const std::vector<complex_t>& raw() const { return c_; }
    std::vector<complex_t>& raw() { return c_; }

    /// Max deviation from hermitian symmetry, max(|u_{-k} - conj(u_k)|, |Im u_0|).
    double symmetry_defect() const {
        double d = std::abs(c_[index(0)].imag());
        for (int k = 1; k <= n_; ++k)
            d = std::max(d, std::abs(c_[index(-k)] - std::conj(c_[index(k)])));
        return d;
    }
    bool check_real_symmetry(double tol = 1e-12) const { return symmetry_defect() <= tol; }

    /// Project exactly onto the hermitian-symmetric subspace and set the flag.
    void symmetrize() {
        for (int k = 1; k <= n_; ++k) {
            const complex_t avg = 0.5 * (c_[index(k)] + std::conj(c_[index(-k)]));
            c_[index(k)] = avg;
            c_[index(-k)] = std::conj(avg);
        }
        c_[index(0)] = complex_t{c_[index(0)].real(), 0.0};
        rs_ = true;
    }

    bool same_band(const FourierState& other) const { return n_ == other.n_; }

    std::size_t index(int k) const {
        if (k < -n_ || k > n_) throw std::out_of_range("FourierState: mode outside band");
        return static_cast<std::size_t>(k + n_);
    }

  private:
    static int check_band(int n) {
        if (n < 1) throw std::invalid_argument("FourierState: band limit must be >= 1");
        return n;
    }

    int n_;
    bool rs_;
    std::vector<complex_t> c_;
};

/// Real samples at the uniform grid x_j = 2pi j / M, j = 0..M-1.
struct RealGridFunction {
    explicit RealGridFunction(int n_points)
        : samples(check_size(n_points), 0.0) {}
    RealGridFunction(std::vector<double> s) : samples(std::move(s)) {
        check_size(static_cast<int>(samples.size()));
    }

    int n_points() const { return static_cast<int>(samples.size()); }
    double x(int j) const { return 2.0 * pi() * j / n_points(); }

    std::vector<double> samples;

    static constexpr double pi() { return 3.141592653589793238462643383279502884; }

  private:
    static int check_size(int m) {
        if (m < 1) throw std::invalid_argument("RealGridFunction: need at least one sample");
        return m;
    }
};

/// The linear operator L = -dx^5 - alpha dx^3 - m dx acting on mean-zero data.
/// On mode k it multiplies by -i phi(k) with phi(k) = k^5 - alpha k^3 + m k,
/// so e^{Lt} has multiplier e^{-i phi(k) t}.  The integer part k^5 - alpha k^3
/// is kept exactly in 64-bit arithmetic (|k| <= 4096 fits comfortably).
struct DispersionSymbol {
    int alpha = 0;        // restricted to {-1, 0, 1}
    double mean_drift = 0.0;

    DispersionSymbol() = default;
    DispersionSymbol(int a, double m) : alpha(a), mean_drift(m) {
        if (a < -1 || a > 1)
            throw std::invalid_argument("DispersionSymbol: alpha must be -1, 0 or 1");
    }

    /// k^5 - alpha k^3, exact.
    std::int64_t phase_integer(std::int64_t k) const {
        const std::int64_t k3 = k * k * k;
        return k3 * k * k - static_cast<std::int64_t>(alpha) * k3;
    }

    /// Full symbol value phi(k) = k^5 - alpha k^3 + m k (as a double; use
    /// phase_integer plus drift handling where exactness matters).
    double value(std::int64_t k) const {
        return static_cast<double>(phase_integer(k)) + mean_drift * static_cast<double>(k);
    }
};

}  // namespace kawahara

#endif
