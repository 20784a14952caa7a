#include "kawahara/propagator.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace kawahara {

namespace {

constexpr double kTwoPiD = 6.283185307179586476925286766559;

std::int64_t mod_pos(std::int64_t a, std::int64_t q) {
    std::int64_t r = a % q;
    return r < 0 ? r + q : r;
}

/// (k^5 - alpha k^3) mod q with every partial product reduced, so no overflow
/// for any q representable in 32 bits.
std::int64_t dispersion_residue(std::int64_t k, int alpha, std::int64_t q) {
    const std::int64_t r = mod_pos(k, q);
    const std::int64_t r2 = (r * r) % q;
    const std::int64_t r3 = (r2 * r) % q;
    const std::int64_t r5 = (r3 * r2) % q;
    return mod_pos(r5 - static_cast<std::int64_t>(alpha) * r3, q);
}

}  // namespace

std::optional<RationalTime> classify_time(double t, std::int64_t q_max, double tol) {
    if (t < 0.0) throw std::invalid_argument("classify_time: t must be >= 0");
    if (q_max < 1) throw std::invalid_argument("classify_time: q_max must be >= 1");
    const double x = t / kTwoPiD;

    // Walk the continued-fraction convergents p_n/q_n of x; q_n increases,
    // so the first convergent within tol has the smallest q.
    std::int64_t p_prev = 1, q_prev = 0;  // p_{-1}/q_{-1}
    std::int64_t p = static_cast<std::int64_t>(std::floor(x)), q = 1;
    double frac = x - std::floor(x);
    for (int iter = 0; iter < 64; ++iter) {
        if (q > q_max) break;
        if (std::abs(x - static_cast<double>(p) / static_cast<double>(q)) <= tol)
            return RationalTime{p, q};
        if (frac < 1e-18) break;
        const double y = 1.0 / frac;
        const double af = std::floor(y);
        if (af > 9.0e15) break;  // next convergent astronomically far
        const std::int64_t a = static_cast<std::int64_t>(af);
        frac = y - af;
        const std::int64_t pn = a * p + p_prev;
        const std::int64_t qn = a * q + q_prev;
        p_prev = p; q_prev = q; p = pn; q = qn;
    }
    return std::nullopt;
}

std::vector<complex_t> rational_multipliers(const RationalTime& rt, int alpha) {
    if (rt.q < 1) throw std::invalid_argument("rational_multipliers: q must be >= 1");
    if (std::gcd(rt.p, rt.q) != 1 && !(rt.p == 0 && rt.q == 1))
        throw std::invalid_argument("rational_multipliers: p/q not in lowest terms");
    const std::int64_t q = rt.q;
    const std::int64_t p_mod = mod_pos(rt.p, q);

    // m_r = e^{-2pi i p (r^5 - alpha r^3)/q}, r = 0..q-1, phases from exact
    // residues; then c_j = (1/q) sum_r m_r e^{+2pi i j r/q}.
    std::vector<complex_t> m(static_cast<std::size_t>(q));
    for (std::int64_t r = 0; r < q; ++r) {
        const std::int64_t e = (p_mod * dispersion_residue(r, alpha, q)) % q;
        const double ang = kTwoPiD * static_cast<double>(e) / static_cast<double>(q);
        m[static_cast<std::size_t>(r)] = {std::cos(ang), -std::sin(ang)};
    }
    std::vector<complex_t> c(static_cast<std::size_t>(q));
    for (std::int64_t j = 0; j < q; ++j) {
        complex_t acc{0.0, 0.0};
        for (std::int64_t r = 0; r < q; ++r) {
            const std::int64_t e = (j * r) % q;
            const double ang = kTwoPiD * static_cast<double>(e) / static_cast<double>(q);
            acc += m[static_cast<std::size_t>(r)] * complex_t{std::cos(ang), std::sin(ang)};
        }
        c[static_cast<std::size_t>(j)] = acc / static_cast<double>(q);
    }
    return c;
}

TranslateDecomposition make_translate_decomposition(const RationalTime& rt, int alpha,
                                                    double mean_drift) {
    TranslateDecomposition td;
    td.q = rt.q;
    td.coeffs = rational_multipliers(rt, alpha);
    td.mean_shift = mean_drift * (kTwoPiD * static_cast<double>(rt.p) / static_cast<double>(rt.q));
    return td;
}

RealGridFunction reconstruct_translates(const RealGridFunction& g,
                                        const TranslateDecomposition& td) {
    const int m = g.n_points();
    if (td.q < 1 || static_cast<std::int64_t>(td.coeffs.size()) != td.q)
        throw std::invalid_argument("reconstruct_translates: malformed decomposition");
    if (m % td.q != 0)
        throw std::invalid_argument(
            "reconstruct_translates: grid size must be divisible by q");

    // The Galilean shift must land on a grid point as well.
    const double shift_steps = td.mean_shift * m / kTwoPiD;
    const double snapped = std::round(shift_steps);
    if (std::abs(shift_steps - snapped) > 1e-9)
        throw std::invalid_argument(
            "reconstruct_translates: mean_shift is not an integer number of grid steps");
    const std::int64_t drift_idx = static_cast<std::int64_t>(snapped);

    RealGridFunction out(m);
    const std::int64_t block = m / td.q;
    for (std::int64_t j = 0; j < td.q; ++j) {
        const complex_t c = td.coeffs[static_cast<std::size_t>(j)];
        if (c == complex_t{0.0, 0.0}) continue;
        const std::int64_t off = j * block + drift_idx;
        for (std::int64_t i = 0; i < m; ++i) {
            const std::int64_t src = mod_pos(i - off, m);
            out.samples[static_cast<std::size_t>(i)] +=
                (c * g.samples[static_cast<std::size_t>(src)]).real();
        }
    }
    return out;
}

double linear_phase(const DispersionSymbol& sym, std::int64_t k, double t) {
    const double poly = phase_mod_two_pi(sym.phase_integer(k), DD{t, 0.0});
    double ang = poly;
    if (sym.mean_drift != 0.0) {
        const double drift = phase_mod_two_pi(k, ddops::from_product(sym.mean_drift, t));
        ang += drift;
        if (ang >= kTwoPiD) ang -= kTwoPiD;
    }
    return ang;
}

FourierState propagate_rational(const FourierState& g, const RationalTime& rt,
                                const DispersionSymbol& sym) {
    const int n = g.n_modes();
    const std::int64_t q = rt.q;
    const std::int64_t p_mod = mod_pos(rt.p, q);
    const double t = kTwoPiD * static_cast<double>(rt.p) / static_cast<double>(rt.q);

    // Residue phase table, period q in k.
    std::vector<complex_t> table(static_cast<std::size_t>(q));
    for (std::int64_t r = 0; r < q; ++r) {
        const std::int64_t e = (p_mod * dispersion_residue(r, sym.alpha, q)) % q;
        const double ang = kTwoPiD * static_cast<double>(e) / static_cast<double>(q);
        table[static_cast<std::size_t>(r)] = {std::cos(ang), -std::sin(ang)};
    }

    FourierState out(n, g.real_symmetric());
    const DD mt = ddops::from_product(sym.mean_drift, t);
    for (int k = -n; k <= n; ++k) {
        complex_t mult = table[static_cast<std::size_t>(mod_pos(k, q))];
        if (sym.mean_drift != 0.0) mult *= unit_phase_neg(k, mt);
        out.set_coef(k, mult * g.coef(k));
    }
    return out;
}

FourierState propagate(const FourierState& g, double t, const DispersionSymbol& sym) {
    if (t == 0.0) return g;
    if (auto rt = classify_time(std::abs(t), 64, 1e-12); rt && t > 0.0)
        return propagate_rational(g, *rt, sym);

    const int n = g.n_modes();
    FourierState out(n, g.real_symmetric());
    for (int k = -n; k <= n; ++k) {
        const double ang = linear_phase(sym, k, t);
        out.set_coef(k, complex_t{std::cos(ang), -std::sin(ang)} * g.coef(k));
    }
    return out;
}

}  // namespace kawahara
