#ifndef KAWAHARA_SOLVER_HPP
#define KAWAHARA_SOLVER_HPP

#include "kawahara/fourier_state.hpp"
#include "kawahara/propagator.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace kawahara {

/// Thrown when a run goes non-finite or trips the blow-up / CFL monitors.
/// Maps to CLI exit code 3.
struct NumericalAbort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverConfig {
    int n_modes = 64;
    double dt = 1e-4;
    double t_end = 1.0;
    int alpha = 0;
    bool dealias = true;
    int record_stride = 1;

    void validate() const;
};

struct ConservedTriple {
    double mean = 0.0;
    double l2 = 0.0;
    double hamiltonian = 0.0;
};

/// One solver run: mean-reduced states v(.,t) = u(.,t) - mean, with the
/// Galilean drift translation already applied, plus the conserved-quantity
/// log at every recorded time.
struct Trajectory {
    SolverConfig config;
    double mean_drift = 0.0;
    std::vector<double> times;
    std::vector<FourierState> states;
    std::vector<ConservedTriple> conserved;
};

/// Split g into its mean-zero part and the mean m = u_0; m reappears as the
/// first-order drift coefficient of L.
std::pair<FourierState, double> reduce_mean(const FourierState& g);

/// One integrating-factor RK4 step of the mean-zero flow.  The linear phase
/// e^{-i phi(k) dt} is applied exactly (compensated reduction), RK4 sees only
/// the bounded nonlinear term -(ik/2)(u*u)_k.  The three-argument overload
/// integrates the full equation; pass enable_nonlinearity = false to step the
/// linear flow alone (test hook).
FourierState step_ifrk4(const FourierState& u, double dt, const DispersionSymbol& sym);
FourierState step_ifrk4(const FourierState& u, double dt, const DispersionSymbol& sym,
                        bool enable_nonlinearity);

/// Integrate from g (real_symmetric) to t_end, recording every record_stride
/// steps.  Aborts via NumericalAbort on non-finite values, on sup-norm growth
/// beyond 10x the initial value, or when dt stops satisfying the advective
/// stability bound dt <= 1/(4 N max|u|).
Trajectory evolve(const FourierState& g, const SolverConfig& cfg);

/// Nonlinear Duhamel part N(.,t_n) = v(.,t_n) - e^{Lt_n} g0 for every
/// recorded time, with g0 the mean-reduced initial data and L carrying the
/// trajectory's drift.  N(.,0) = 0.
std::vector<FourierState> duhamel_part(const Trajectory& tr, const FourierState& g,
                                       const DispersionSymbol& sym);

/// (mean, l2, hamiltonian) with mean = u_0, l2 = sum |u_k|^2 and
/// H = \int ( u_xx^2/2 - alpha u_x^2/2 + u^3/6 ) dx over [0, 2pi).
ConservedTriple conserved_quantities(const FourierState& u, int alpha);

/// Variational derivative dH/du = u_xxxx + alpha u_xx + u^2/2 truncated to
/// the band, so that the flow is u_t = -d/dx (dH/du).  Used by the
/// first-integral certification tests.
FourierState hamiltonian_gradient(const FourierState& u, int alpha);

/// Reusable stepper: caches the integrating-factor tables and padded FFT
/// buffers for a fixed (N, alpha, dt).
class KawaharaStepper {
  public:
    KawaharaStepper(int n_modes, int alpha, double dt, bool dealias = true);

    /// Advance the band array c[k+N] (mean-zero, hermitian) by one step.
    void step(std::vector<complex_t>& c) const;

    /// -(ik/2) (u*u)_k from the padded-grid product, written into out.
    void nonlinear(const std::vector<complex_t>& c, std::vector<complex_t>& out) const;

    int n_modes() const { return n_; }
    double dt() const { return dt_; }

  private:
    int n_;
    double dt_;
    int pad_;
    std::vector<complex_t> e_half_, e_full_;       // e^{-i phi(k) dt/2}, e^{-i phi(k) dt}
    mutable std::vector<complex_t> grid_;          // padded scratch
    mutable std::vector<complex_t> na_, nb_, nc_, nd_, stage_;
};

}  // namespace kawahara

#endif
