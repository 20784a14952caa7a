#include "kawahara/transforms.hpp"

#include "kawahara/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace kawahara {

namespace {

void require_band_fits(int n_modes, int n_points) {
    if (n_points < 2 * n_modes + 1)
        throw std::invalid_argument("grid too small for band: need M >= 2N+1");
}

}  // namespace

FourierState forward_transform(const RealGridFunction& f, int n_modes) {
    const int m = f.n_points();
    require_band_fits(n_modes, m);

    std::vector<complex_t> a(f.samples.begin(), f.samples.end());
    fft::forward(a);

    FourierState u(n_modes, /*real_symmetric=*/true);
    const double inv_m = 1.0 / m;
    for (int k = -n_modes; k <= n_modes; ++k) {
        const int idx = ((k % m) + m) % m;
        u.set_coef(k, a[static_cast<std::size_t>(idx)] * inv_m);
    }
    u.symmetrize();
    return u;
}

std::vector<complex_t> synthesize(const FourierState& u, int n_points) {
    require_band_fits(u.n_modes(), n_points);
    std::vector<complex_t> a(static_cast<std::size_t>(n_points), complex_t{0.0, 0.0});
    const int n = u.n_modes();
    for (int k = -n; k <= n; ++k) {
        const int idx = ((k % n_points) + n_points) % n_points;
        a[static_cast<std::size_t>(idx)] += u.coef(k);
    }
    fft::backward(a);
    return a;
}

RealGridFunction inverse_transform(const FourierState& u, int n_points) {
    if (!u.real_symmetric())
        throw std::invalid_argument(
            "inverse_transform: real output demands a real_symmetric state");
    return inverse_transform_real_part(u, n_points);
}

RealGridFunction inverse_transform_real_part(const FourierState& u, int n_points) {
    const auto a = synthesize(u, n_points);
    RealGridFunction g(n_points);
    for (int j = 0; j < n_points; ++j)
        g.samples[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)].real();
    return g;
}

double sobolev_norm(const FourierState& u, double s) {
    double acc = 0.0;
    const int n = u.n_modes();
    for (int k = -n; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double w = std::pow(1.0 + kk * kk, s);
        acc += w * std::norm(u.coef(k));
    }
    return std::sqrt(acc);
}

FourierState convolve_direct(const FourierState& a, const FourierState& b) {
    if (!a.same_band(b))
        throw std::invalid_argument("convolve_direct: bands differ");
    const int n = a.n_modes();
    FourierState out(n, a.real_symmetric() && b.real_symmetric());
    for (int k = -n; k <= n; ++k) {
        complex_t acc{0.0, 0.0};
        const int lo = std::max(-n, k - n);
        const int hi = std::min(n, k + n);
        for (int k1 = lo; k1 <= hi; ++k1) acc += a.coef(k1) * b.coef(k - k1);
        out.set_coef(k, acc);
    }
    return out;
}

namespace {

// Shared padded-grid product: returns coefficients of a*b on |k| <= out_band,
// exact as long as pad > 2N + out_band (no aliasing into the kept band).
std::vector<complex_t> padded_product(const FourierState& a, const FourierState& b,
                                      int out_band) {
    const int n = a.n_modes();
    const int pad = fft::good_size(2 * n + out_band + 1);
    std::vector<complex_t> fa(static_cast<std::size_t>(pad), complex_t{});
    std::vector<complex_t> fb(static_cast<std::size_t>(pad), complex_t{});
    for (int k = -n; k <= n; ++k) {
        const int idx = ((k % pad) + pad) % pad;
        fa[static_cast<std::size_t>(idx)] = a.coef(k);
        fb[static_cast<std::size_t>(idx)] = b.coef(k);
    }
    fft::backward(fa);
    fft::backward(fb);
    for (int j = 0; j < pad; ++j)
        fa[static_cast<std::size_t>(j)] *= fb[static_cast<std::size_t>(j)];
    fft::forward(fa);

    std::vector<complex_t> out(2 * static_cast<std::size_t>(out_band) + 1);
    const double inv = 1.0 / pad;
    for (int k = -out_band; k <= out_band; ++k) {
        const int idx = ((k % pad) + pad) % pad;
        out[static_cast<std::size_t>(k + out_band)] =
            fa[static_cast<std::size_t>(idx)] * inv;
    }
    return out;
}

}  // namespace

FourierState convolve_fft(const FourierState& a, const FourierState& b) {
    if (!a.same_band(b))
        throw std::invalid_argument("convolve_fft: bands differ");
    const int n = a.n_modes();
    auto prod = padded_product(a, b, n);
    FourierState out(n, std::move(prod), a.real_symmetric() && b.real_symmetric());
    return out;
}

std::vector<complex_t> full_convolution(const FourierState& a, const FourierState& b) {
    if (!a.same_band(b))
        throw std::invalid_argument("full_convolution: bands differ");
    return padded_product(a, b, 2 * a.n_modes());
}

}  // namespace kawahara
