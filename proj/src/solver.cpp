#include "kawahara/solver.hpp"

#include "kawahara/fft.hpp"
#include "kawahara/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kawahara {

namespace {

constexpr double kTwoPiD = 6.283185307179586476925286766559;

double sup_norm_on_grid(const std::vector<complex_t>& c, int n) {
    // |u|_inf estimated on a 4N grid (exact localization is not needed for
    // the CFL monitor).
    const int m = fft::good_size(4 * n);
    std::vector<complex_t> a(static_cast<std::size_t>(m), complex_t{});
    for (int k = -n; k <= n; ++k)
        a[static_cast<std::size_t>(((k % m) + m) % m)] += c[static_cast<std::size_t>(k + n)];
    fft::backward(a);
    double s = 0.0;
    for (const auto& v : a) s = std::max(s, std::abs(v.real()));
    return s;
}

bool all_finite(const std::vector<complex_t>& c) {
    for (const auto& v : c)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

}  // namespace

void SolverConfig::validate() const {
    if (n_modes < 1) throw std::invalid_argument("SolverConfig: n_modes must be >= 1");
    if (dt <= 0.0) throw std::invalid_argument("SolverConfig: dt must be positive");
    if (t_end < 0.0) throw std::invalid_argument("SolverConfig: t_end must be >= 0");
    if (record_stride < 1) throw std::invalid_argument("SolverConfig: record_stride must be >= 1");
    if (alpha < -1 || alpha > 1) throw std::invalid_argument("SolverConfig: alpha must be -1, 0 or 1");
}

std::pair<FourierState, double> reduce_mean(const FourierState& g) {
    if (!g.check_real_symmetry())
        throw std::invalid_argument("reduce_mean: state must be real_symmetric");
    FourierState out = g;
    const double m = g.coef(0).real();
    out.set_coef(0, complex_t{0.0, 0.0});
    out.set_real_symmetric(true);
    return {std::move(out), m};
}

KawaharaStepper::KawaharaStepper(int n_modes, int alpha, double dt, bool dealias)
    : n_(n_modes), dt_(dt) {
    // Exact product on the kept band needs pad > 3N; without dealiasing the
    // product is formed on the smallest grid that holds the band.
    pad_ = fft::good_size(dealias ? 3 * n_ + 1 : 2 * n_ + 1);
    const DispersionSymbol sym(alpha, 0.0);
    const std::size_t len = 2 * static_cast<std::size_t>(n_) + 1;
    e_half_.resize(len);
    e_full_.resize(len);
    for (int k = -n_; k <= n_; ++k) {
        const std::int64_t nk = sym.phase_integer(k);
        const double ah = phase_mod_two_pi(nk, DD{0.5 * dt, 0.0});
        const double af = phase_mod_two_pi(nk, DD{dt, 0.0});
        e_half_[static_cast<std::size_t>(k + n_)] = {std::cos(ah), -std::sin(ah)};
        e_full_[static_cast<std::size_t>(k + n_)] = {std::cos(af), -std::sin(af)};
    }
    grid_.resize(static_cast<std::size_t>(pad_));
    na_.resize(len); nb_.resize(len); nc_.resize(len); nd_.resize(len);
    stage_.resize(len);
}

void KawaharaStepper::nonlinear(const std::vector<complex_t>& c,
                                std::vector<complex_t>& out) const {
    std::fill(grid_.begin(), grid_.end(), complex_t{});
    for (int k = -n_; k <= n_; ++k)
        grid_[static_cast<std::size_t>(((k % pad_) + pad_) % pad_)] =
            c[static_cast<std::size_t>(k + n_)];
    fft::backward(grid_);
    // Hermitian input synthesizes to real samples; squaring the real part
    // keeps the product exactly hermitian.
    for (auto& v : grid_) {
        const double w = v.real();
        v = {w * w, 0.0};
    }
    fft::forward(grid_);
    const double inv = 1.0 / pad_;
    for (int k = -n_; k <= n_; ++k) {
        const complex_t prod =
            grid_[static_cast<std::size_t>(((k % pad_) + pad_) % pad_)] * inv;
        // -(ik/2) (u*u)_k ; k = 0 output vanishes identically.
        out[static_cast<std::size_t>(k + n_)] =
            complex_t{0.0, -0.5 * static_cast<double>(k)} * prod;
    }
}

void KawaharaStepper::step(std::vector<complex_t>& c) const {
    const std::size_t len = c.size();
    const double h = dt_;

    nonlinear(c, na_);                                     // Na = N(u_n)
    for (std::size_t i = 0; i < len; ++i)
        stage_[i] = e_half_[i] * (c[i] + 0.5 * h * na_[i]);
    nonlinear(stage_, nb_);                                // Nb = N(E(u_n + h/2 Na))
    for (std::size_t i = 0; i < len; ++i)
        stage_[i] = e_half_[i] * c[i] + 0.5 * h * nb_[i];
    nonlinear(stage_, nc_);                                // Nc = N(E u_n + h/2 Nb)
    for (std::size_t i = 0; i < len; ++i)
        stage_[i] = e_full_[i] * c[i] + h * e_half_[i] * nc_[i];
    nonlinear(stage_, nd_);                                // Nd = N(E^2 u_n + h E Nc)
    for (std::size_t i = 0; i < len; ++i)
        c[i] = e_full_[i] * c[i] +
               (h / 6.0) * (e_full_[i] * na_[i] +
                            2.0 * e_half_[i] * (nb_[i] + nc_[i]) + nd_[i]);
}

FourierState step_ifrk4(const FourierState& u, double dt, const DispersionSymbol& sym,
                        bool enable_nonlinearity) {
    if (std::abs(u.coef(0)) > 1e-12)
        throw std::invalid_argument("step_ifrk4: state must be mean-zero");
    FourierState out = u;
    if (enable_nonlinearity) {
        KawaharaStepper stepper(u.n_modes(), sym.alpha, dt);
        stepper.step(out.raw());
    } else {
        const int n = u.n_modes();
        for (int k = -n; k <= n; ++k) {
            const double ang = phase_mod_two_pi(sym.phase_integer(k), DD{dt, 0.0});
            out.set_coef(k, complex_t{std::cos(ang), -std::sin(ang)} * u.coef(k));
        }
    }
    if (!all_finite(out.raw()))
        throw NumericalAbort("step_ifrk4: non-finite state (instability or blow-up)");
    return out;
}

FourierState step_ifrk4(const FourierState& u, double dt, const DispersionSymbol& sym) {
    return step_ifrk4(u, dt, sym, true);
}

ConservedTriple conserved_quantities(const FourierState& u, int alpha) {
    if (!u.check_real_symmetry())
        throw std::invalid_argument("conserved_quantities: state must be real_symmetric");
    const int n = u.n_modes();
    ConservedTriple out;
    out.mean = u.coef(0).real();

    double l2 = 0.0, quad = 0.0;
    for (int k = -n; k <= n; ++k) {
        const double a2 = std::norm(u.coef(k));
        const double k2 = static_cast<double>(k) * k;
        l2 += a2;
        quad += (0.5 * k2 * k2 - 0.5 * alpha * k2) * a2;
    }
    out.l2 = l2;

    // Cubic term by exact quadrature: u^3 is a trig poly of degree 3N, and the
    // M-point rectangle rule integrates degrees < M exactly.
    const int m = fft::good_size(3 * n + 1);
    std::vector<complex_t> a(static_cast<std::size_t>(m), complex_t{});
    for (int k = -n; k <= n; ++k)
        a[static_cast<std::size_t>(((k % m) + m) % m)] += u.coef(k);
    fft::backward(a);
    double cubic = 0.0;
    for (const auto& v : a) {
        const double w = v.real();
        cubic += w * w * w;
    }
    out.hamiltonian = kTwoPiD * quad + (kTwoPiD / m) * cubic / 6.0;
    return out;
}

FourierState hamiltonian_gradient(const FourierState& u, int alpha) {
    const int n = u.n_modes();
    const auto sq = full_convolution(u, u);  // exact square, band 2N
    FourierState out(n, u.real_symmetric());
    for (int k = -n; k <= n; ++k) {
        const double k2 = static_cast<double>(k) * k;
        out.set_coef(k, (k2 * k2 - alpha * k2) * u.coef(k) +
                            0.5 * sq[static_cast<std::size_t>(k + 2 * n)]);
    }
    return out;
}

Trajectory evolve(const FourierState& g, const SolverConfig& cfg) {
    cfg.validate();
    if (!g.check_real_symmetry())
        throw std::invalid_argument("evolve: initial data must be real_symmetric");
    if (g.n_modes() != cfg.n_modes)
        throw std::invalid_argument("evolve: initial data band does not match config");

    auto [g0, mean] = reduce_mean(g);
    const DispersionSymbol sym(cfg.alpha, mean);

    Trajectory tr;
    tr.config = cfg;
    tr.mean_drift = mean;

    const std::int64_t n_steps = static_cast<std::int64_t>(std::llround(cfg.t_end / cfg.dt));
    if (std::abs(static_cast<double>(n_steps) * cfg.dt - cfg.t_end) > 1e-9 * std::max(1.0, cfg.t_end))
        throw std::invalid_argument("evolve: t_end must be an integer number of steps");

    KawaharaStepper stepper(cfg.n_modes, cfg.alpha, cfg.dt, cfg.dealias);
    std::vector<complex_t> c = g0.raw();

    const double sup0 = sup_norm_on_grid(c, cfg.n_modes);
    auto check_stability = [&](double sup, double t) {
        if (sup > 0.0 && cfg.dt > 1.0 / (4.0 * cfg.n_modes * sup))
            throw NumericalAbort("evolve: dt violates stability bound dt <= 1/(4 N max|u|) at t = " +
                                 std::to_string(t));
    };
    check_stability(sup0, 0.0);

    auto record = [&](std::int64_t step) {
        const double t = static_cast<double>(step) * cfg.dt;
        if (!all_finite(c))
            throw NumericalAbort("evolve: non-finite state at t = " + std::to_string(t));
        FourierState v(cfg.n_modes, c, true);
        if (mean != 0.0 && t != 0.0) {
            // u-variable recording: the drift acts as the exact translation
            // by mean*t, a pure phase on the Fourier side.
            const DD mt = ddops::from_product(mean, t);
            for (int k = -cfg.n_modes; k <= cfg.n_modes; ++k)
                v.set_coef(k, v.coef(k) * unit_phase_neg(k, mt));
        }
        const double sup = sup_norm_on_grid(v.raw(), cfg.n_modes);
        if (step > 0) {
            if (sup0 > 0.0 && sup > 10.0 * sup0)
                throw NumericalAbort("evolve: sup-norm grew beyond 10x initial at t = " +
                                     std::to_string(t));
            check_stability(sup, t);
        }
        tr.times.push_back(t);
        tr.conserved.push_back(conserved_quantities(v, cfg.alpha));
        tr.states.push_back(std::move(v));
    };

    record(0);
    for (std::int64_t s = 1; s <= n_steps; ++s) {
        stepper.step(c);
        if (s % cfg.record_stride == 0 || s == n_steps) record(s);
    }
    return tr;
}

std::vector<FourierState> duhamel_part(const Trajectory& tr, const FourierState& g,
                                       const DispersionSymbol& sym) {
    if (g.n_modes() != tr.config.n_modes)
        throw std::invalid_argument("duhamel_part: band mismatch");
    FourierState g0 = g;
    g0.set_coef(0, complex_t{0.0, 0.0});

    std::vector<FourierState> out;
    out.reserve(tr.states.size());
    for (std::size_t i = 0; i < tr.states.size(); ++i) {
        const double t = tr.times[i];
        FourierState n_part = tr.states[i];
        const int n = n_part.n_modes();
        for (int k = -n; k <= n; ++k) {
            const complex_t lin = linear_multiplier(sym, k, t) * g0.coef(k);
            n_part.set_coef(k, n_part.coef(k) - lin);
        }
        out.push_back(std::move(n_part));
    }
    return out;
}

}  // namespace kawahara
