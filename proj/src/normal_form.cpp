#include "kawahara/normal_form.hpp"

#include "kawahara/rng.hpp"
#include "kawahara/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kawahara {

namespace {

void require_mean_zero(const FourierState& u, const char* who) {
    if (std::abs(u.coef(0)) > 1e-12)
        throw std::invalid_argument(std::string(who) + ": state must be mean-zero");
}

inline double pair_form(std::int64_t k1, std::int64_t k2, int alpha) {
    return static_cast<double>(5 * (k1 * k1 + k2 * k2 + k1 * k2) - 3 * alpha);
}

}  // namespace

FourierState bilinear_B(const FourierState& phi, const FourierState& psi, int alpha) {
    if (!phi.same_band(psi)) throw std::invalid_argument("bilinear_B: bands differ");
    require_mean_zero(phi, "bilinear_B");
    require_mean_zero(psi, "bilinear_B");
    const int n = phi.n_modes();
    FourierState out(n, phi.real_symmetric() && psi.real_symmetric());
    for (int k = -n; k <= n; ++k) {
        if (k == 0) continue;
        complex_t acc{0.0, 0.0};
        for (int k1 = -n; k1 <= n; ++k1) {
            const int k2 = k - k1;
            if (k1 == 0 || k2 == 0 || k2 < -n || k2 > n) continue;
            const double den =
                static_cast<double>(k1) * k2 * pair_form(k1, k2, alpha);
            acc += phi.coef(k1) * psi.coef(k2) / den;
        }
        out.set_coef(k, -0.5 * acc);
    }
    return out;
}

FourierState resonant_rho(const FourierState& u, int alpha) {
    require_mean_zero(u, "resonant_rho");
    const int n = u.n_modes();
    FourierState out(n, u.real_symmetric());
    for (int k = -n; k <= n; ++k) {
        if (k == 0) continue;
        const complex_t uk = u.coef(k);
        const double den = 2.0 * (15.0 * k * k - 3.0 * alpha) * k;
        out.set_coef(k, complex_t{0.0, 1.0} * std::norm(uk) * uk / den);
    }
    return out;
}

FourierState resonant_sigma(const FourierState& u, int alpha) {
    require_mean_zero(u, "resonant_sigma");
    const int n = u.n_modes();
    FourierState out(n, u.real_symmetric());
    for (int k = -n; k <= n; ++k) {
        if (k == 0) continue;
        double sum = 0.0;
        for (int j = -n; j <= n; ++j) {
            if (j == 0 || j == k || j == -k) continue;
            const double den = static_cast<double>(j) *
                (5.0 * (static_cast<double>(k) * k - static_cast<double>(k) * j +
                        static_cast<double>(j) * j) - 3.0 * alpha);
            sum += std::norm(u.coef(j)) / den;
        }
        out.set_coef(k, complex_t{0.0, -1.0} * u.coef(k) * sum);
    }
    return out;
}

FourierState nonresonant_R_direct(const FourierState& u, int alpha) {
    require_mean_zero(u, "nonresonant_R");
    const int n = u.n_modes();
    FourierState out(n, u.real_symmetric());
    for (int k = -n; k <= n; ++k) {
        if (k == 0) continue;
        complex_t acc{0.0, 0.0};
        for (int k1 = -n; k1 <= n; ++k1) {
            if (k1 == 0) continue;
            const int j = k - k1;  // = k2 + k3
            if (j == 0) continue;
            const double den = static_cast<double>(k1) * pair_form(k1, j, alpha);
            complex_t inner{0.0, 0.0};
            for (int k2 = std::max(-n, j - n); k2 <= std::min(n, j + n); ++k2) {
                const int k3 = j - k2;
                if (k2 == 0 || k3 == 0) continue;
                if (k1 + k2 == 0 || k3 + k1 == 0) continue;
                inner += u.coef(k2) * u.coef(k3);
            }
            acc += u.coef(k1) * inner / den;
        }
        out.set_coef(k, complex_t{0.0, -0.5} * acc);
    }
    return out;
}

FourierState nonresonant_R_fast(const FourierState& u, int alpha) {
    require_mean_zero(u, "nonresonant_R");
    const int n = u.n_modes();
    const auto conv = full_convolution(u, u);  // (u*u)_j on |j| <= 2N
    FourierState out(n, u.real_symmetric());
    for (int k = -n; k <= n; ++k) {
        if (k == 0) continue;
        const complex_t uk = u.coef(k);
        complex_t acc{0.0, 0.0};
        for (int k1 = -n; k1 <= n; ++k1) {
            if (k1 == 0) continue;
            const int j = k - k1;
            if (j == 0) continue;
            // Within the pairs k2+k3 = j, remove k2 = -k1 and k3 = -k1
            // (the vanishing factors k1+k2 and k3+k1); both coincide when
            // j = -2 k1, which would otherwise be removed twice.
            const complex_t um = u.coef(-k1);
            complex_t inner = conv[static_cast<std::size_t>(j + 2 * n)] - 2.0 * um * uk;
            if (j == -2 * k1) inner += um * um;
            const double den = static_cast<double>(k1) * pair_form(k1, j, alpha);
            acc += u.coef(k1) * inner / den;
        }
        out.set_coef(k, complex_t{0.0, -0.5} * acc);
    }
    return out;
}

FourierState nonresonant_R(const FourierState& u, int alpha) {
    return u.n_modes() <= 64 ? nonresonant_R_direct(u, alpha)
                             : nonresonant_R_fast(u, alpha);
}

FourierState trilinear_raw(const FourierState& u, int alpha) {
    require_mean_zero(u, "trilinear_raw");
    const int n = u.n_modes();
    FourierState out(n, u.real_symmetric());
    for (int k = -n; k <= n; ++k) {
        if (k == 0) continue;
        complex_t acc{0.0, 0.0};
        for (int k1 = -n; k1 <= n; ++k1) {
            if (k1 == 0) continue;
            const int j = k - k1;
            if (j == 0) continue;  // k2 + k3 != 0
            const double den = static_cast<double>(k1) * pair_form(k1, j, alpha);
            complex_t inner{0.0, 0.0};
            for (int k2 = std::max(-n, j - n); k2 <= std::min(n, j + n); ++k2) {
                const int k3 = j - k2;
                if (k2 == 0 || k3 == 0) continue;
                inner += u.coef(k2) * u.coef(k3);
            }
            acc += u.coef(k1) * inner / den;
        }
        out.set_coef(k, complex_t{0.0, -0.5} * acc);
    }
    return out;
}

DenominatorSafety denominator_safety(int k_max) {
    DenominatorSafety s;
    s.min_abs_theta = std::numeric_limits<std::int64_t>::max();
    s.min_pair_form = std::numeric_limits<std::int64_t>::max();
    s.min_rho_form = std::numeric_limits<std::int64_t>::max();
    const std::int64_t m = k_max;
    for (int alpha = -1; alpha <= 1; ++alpha) {
        for (std::int64_t k = 1; k <= m; ++k)
            s.min_rho_form = std::min(s.min_rho_form, 15 * k * k - 3 * alpha);
        for (std::int64_t k1 = -m; k1 <= m; ++k1) {
            if (k1 == 0) continue;
            for (std::int64_t k2 = -m; k2 <= m; ++k2) {
                if (k2 == 0) continue;
                const std::int64_t pf = 5 * (k1 * k1 + k2 * k2 + k1 * k2) - 3 * alpha;
                s.min_pair_form = std::min(s.min_pair_form, pf);
                for (std::int64_t k3 = -m; k3 <= m; ++k3) {
                    if (k3 == 0) continue;
                    const std::int64_t theta =
                        5 * (k1 * k1 + k2 * k2 + k3 * k3 + k1 * k2 + k2 * k3 + k3 * k1) -
                        3 * alpha;
                    s.min_abs_theta = std::min(s.min_abs_theta, std::abs(theta));
                }
            }
        }
    }
    return s;
}

RepresentationReport verify_representation(const Trajectory& tr, const FourierState& g,
                                           const DispersionSymbol& sym, double quad_dt) {
    const std::size_t n_rec = tr.times.size();
    if (n_rec < 3)
        throw std::invalid_argument("verify_representation: need at least 3 recorded states");
    const double h_rec = tr.times[1] - tr.times[0];
    for (std::size_t i = 1; i < n_rec; ++i)
        if (std::abs(tr.times[i] - tr.times[i - 1] - h_rec) > 1e-12)
            throw std::invalid_argument("verify_representation: recording grid is not uniform");
    const double stride_f = quad_dt / h_rec;
    const std::int64_t stride = std::llround(stride_f);
    if (stride < 1 || std::abs(stride_f - static_cast<double>(stride)) > 1e-9)
        throw std::invalid_argument(
            "verify_representation: quad_dt must be an integer multiple of the recording step");
    const std::size_t n_quad = (n_rec - 1) / static_cast<std::size_t>(stride) + 1;
    if (n_quad < 3)
        throw std::invalid_argument("verify_representation: recording too sparse for quad_dt");

    const int n = g.n_modes();
    const std::size_t len = 2 * static_cast<std::size_t>(n) + 1;
    const double h = static_cast<double>(stride) * h_rec;

    FourierState g0 = g;
    g0.set_coef(0, complex_t{0.0, 0.0});
    const FourierState b_init = bilinear_B(g0, g0, sym.alpha);

    // f_n[k] = e^{+i phi(k) t_n} (rho + sigma + R)(u(t_n))_k : the integrand of
    // the Duhamel-type integral after pulling the outer phase out.
    auto integrand = [&](std::size_t rec_idx) {
        const FourierState& u = tr.states[rec_idx];
        const double t = tr.times[rec_idx];
        const FourierState rho = resonant_rho(u, sym.alpha);
        const FourierState sig = resonant_sigma(u, sym.alpha);
        const FourierState rr = nonresonant_R(u, sym.alpha);
        std::vector<complex_t> f(len);
        for (int k = -n; k <= n; ++k) {
            const complex_t sum = rho.coef(k) + sig.coef(k) + rr.coef(k);
            f[static_cast<std::size_t>(k + n)] = std::conj(linear_multiplier(sym, k, t)) * sum;
        }
        return f;
    };

    RepresentationReport rep;
    std::vector<std::vector<complex_t>> f(n_quad);
    for (std::size_t q = 0; q < n_quad; ++q) f[q] = integrand(q * static_cast<std::size_t>(stride));

    std::vector<complex_t> j_even(len, complex_t{});  // cumulative integral at last even index
    std::vector<complex_t> j_here(len);

    for (std::size_t q = 0; q < n_quad; ++q) {
        const std::size_t rec_idx = q * static_cast<std::size_t>(stride);
        const double t = tr.times[rec_idx];
        if (q == 0) {
            std::fill(j_here.begin(), j_here.end(), complex_t{});
        } else if (q % 2 == 0) {
            for (std::size_t i = 0; i < len; ++i)
                j_even[i] += (h / 3.0) * (f[q - 2][i] + 4.0 * f[q - 1][i] + f[q][i]);
            j_here = j_even;
        } else {
            // Close the trailing odd interval with the O(h^4) three-point rule
            // int_{t_{q-1}}^{t_q} = h(-f_{q-2} + 8 f_{q-1} + 5 f_q)/12, and for
            // q = 1 its forward mirror over (f_0, f_1, f_2).
            if (q == 1) {
                for (std::size_t i = 0; i < len; ++i)
                    j_here[i] = (h / 12.0) * (5.0 * f[0][i] + 8.0 * f[1][i] - f[2][i]);
            } else {
                for (std::size_t i = 0; i < len; ++i)
                    j_here[i] = j_even[i] +
                                (h / 12.0) * (-f[q - 2][i] + 8.0 * f[q - 1][i] + 5.0 * f[q][i]);
            }
        }

        const FourierState& u = tr.states[rec_idx];
        const FourierState b_now = bilinear_B(u, u, sym.alpha);
        double rmax = 0.0;
        for (int k = -n; k <= n; ++k) {
            const complex_t e = linear_multiplier(sym, k, t);
            const complex_t rhs = e * g0.coef(k) + b_now.coef(k) - e * b_init.coef(k) +
                                  e * j_here[static_cast<std::size_t>(k + n)];
            rmax = std::max(rmax, std::abs(u.coef(k) - rhs));
        }
        rep.per_time.emplace_back(t, rmax);
        rep.max_residual = std::max(rep.max_residual, rmax);
    }
    return rep;
}

namespace {

FourierState random_unit_state(int n, double s, Rng& rng) {
    FourierState u(n, true);
    for (int k = 1; k <= n; ++k) {
        const complex_t v{rng.gaussian(), rng.gaussian()};
        u.set_coef(k, v);
        u.set_coef(-k, std::conj(v));
    }
    const double nrm = sobolev_norm(u, s);
    for (auto& c : u.raw()) c /= nrm;
    return u;
}

}  // namespace

MultilinearConstants estimate_multilinear_constants(double s, double s1, int n_modes,
                                                    int trials, unsigned seed) {
    MultilinearConstants out;
    out.trials = trials;
    if (s <= -0.5)
        out.warnings.push_back("s <= -1/2 is outside the estimate's hypothesis range");
    if (s1 > s + 3.0)
        out.warnings.push_back("s1 > s+3 exceeds the bilinear gain; B ratio may diverge with N");
    if (s1 > s + 2.0)
        out.warnings.push_back("s1 > s+2 exceeds the cubic gain; rho/sigma ratios may diverge with N");
    if (trials <= 0) return out;

    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const FourierState phi = random_unit_state(n_modes, s, rng);
        const FourierState psi = random_unit_state(n_modes, s, rng);
        out.ratio_B = std::max(out.ratio_B, sobolev_norm(bilinear_B(phi, psi, 0), s1));
        out.ratio_rho = std::max(out.ratio_rho, sobolev_norm(resonant_rho(phi, 0), s1));
        out.ratio_sigma = std::max(out.ratio_sigma, sobolev_norm(resonant_sigma(phi, 0), s1));
    }
    return out;
}

}  // namespace kawahara
