#ifndef KAWAHARA_DD_REAL_HPP
#define KAWAHARA_DD_REAL_HPP

#include <cmath>
#include <complex>
#include <cstdint>

// Compensated (double-double) arithmetic, used only for phase reduction:
// the dispersion phase (k^5 - alpha k^3) * t reaches ~1e19 for |k| ~ 4096,
// where a plain fmod keeps no fractional bits at all.  A dd value carries
// ~106 significant bits, enough to pin the reduced phase to ~1e-13 absolute
// over the whole band.

namespace kawahara {

struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

namespace ddops {

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {  // requires |a| >= |b|
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline DD mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline DD mul(DD a, double b) {
    DD p = two_prod(a.hi, b);
    return quick_two_sum(p.hi, p.lo + a.lo * b);
}

inline DD from_product(double a, double b) { return two_prod(a, b); }

/// Fractional part mod 1, kept as a dd in [0, 1).  Both legs of a dd are
/// reduced exactly: x - floor(x) is exact for any double.
inline DD frac(DD z) {
    const double fh = z.hi - std::floor(z.hi);
    const double fl = z.lo - std::floor(z.lo);
    DD f = two_sum(fh, fl);
    if (f.hi >= 1.0) f = add(f, DD{-1.0, 0.0});
    if (f.hi < 0.0) f = add(f, DD{1.0, 0.0});
    return f;
}

}  // namespace ddops

inline constexpr DD kTwoPi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr DD kInvTwoPi{0.15915494309189535, -9.839338337591243e-18};

/// (n * a) mod 2pi for an exact 64-bit integer n and real a, computed through
/// y = a/(2pi) in double-double with n split into 31-bit halves so every
/// partial product stays small after its own mod-1 reduction.
/// Returns the reduced angle in [0, 2pi).
inline double phase_mod_two_pi(std::int64_t n, DD a) {
    using namespace ddops;
    const bool neg = n < 0;
    const std::uint64_t un = neg ? 0ull - static_cast<std::uint64_t>(n)
                                 : static_cast<std::uint64_t>(n);

    const DD y = frac(mul(a, kInvTwoPi));
    // 2^31 * y mod 1; scaling by a power of two is exact.
    const DD y_hi_part = frac(DD{y.hi * 2147483648.0, y.lo * 2147483648.0});

    const double lo31 = static_cast<double>(un & 0x7FFFFFFFull);
    const double hi33 = static_cast<double>(un >> 31);

    DD f = add(frac(mul(y_hi_part, hi33)), frac(mul(y, lo31)));
    f = frac(f);

    double t = neg ? 1.0 - (f.hi + f.lo) : f.hi + f.lo;
    t -= std::floor(t);
    double ang = t * kTwoPi.hi + t * kTwoPi.lo;
    if (ang >= kTwoPi.hi) ang -= kTwoPi.hi;
    if (ang < 0.0) ang = 0.0;
    return ang;
}

inline double phase_mod_two_pi(std::int64_t n, double a) {
    return phase_mod_two_pi(n, DD{a, 0.0});
}

/// e^{-i (n*a mod 2pi)} on the unit circle.
inline std::complex<double> unit_phase_neg(std::int64_t n, DD a) {
    const double ang = phase_mod_two_pi(n, a);
    return {std::cos(ang), -std::sin(ang)};
}

}  // namespace kawahara

#endif
