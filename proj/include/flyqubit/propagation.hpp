#pragma once

#include <vector>

#include "flyqubit/emitter.hpp"
#include "flyqubit/grid.hpp"

namespace fq {

/// One-step propagator exp(-i H dt). Exact for diagonal H.
Matrix step_propagator(const Matrix& h, double dt);

/// Cached chain of step propagators V_k and their forward products G_{k,0}.
/// A built chain is read-only and may be queried concurrently.
class PropagatorChain {
public:
    PropagatorChain(const EmitterModel& model, const ControlPulse& pulse,
                    const TimeGrid& grid);

    int steps() const { return static_cast<int>(steps_.size()); }
    double dt() const { return dt_; }
    int dim() const { return dim_; }

    /// V_k for step k = 1..M (1-based to match G_{n,j} index conventions).
    const Matrix& step(int k) const { return steps_.at(static_cast<size_t>(k - 1)); }

    /// G_{n,j} for 0 <= j <= n <= M; G_{j,j} = I. O(1) for j = 0, otherwise
    /// a product of n-j cached steps.
    Matrix transition(int j, int n) const;

    /// Cached forward product G_{k,0}, k = 0..M.
    const Matrix& forward(int k) const { return forward_.at(static_cast<size_t>(k)); }

    /// Forward states G_{k,0} |psi0> for k = 0..M.
    std::vector<Vector> forward_states(const Vector& psi0) const;

    /// Backward rows <bra| G_{M,n} for n = 0..M, built in one reverse sweep.
    std::vector<RowVector> backward_rows(const Vector& bra) const;

    /// Excited-state population of G_{M,0} psi0; the horizon check
    /// "G(inf,t) ~ G(T,t)" wants this below tail_tolerance.
    double tail_population(const Vector& psi0) const;

    static constexpr double tail_tolerance = 1e-4;

private:
    int dim_;
    double dt_;
    std::vector<Matrix> steps_;    // V_1..V_M
    std::vector<Matrix> forward_;  // G_{0,0}..G_{M,0}
};

/// Integrates the master equation with piecewise-constant controls and fixed
/// coupling gamma0 by exponentiating the superoperator on each step.
/// Returns rho(t_k) for k = 0..M.
std::vector<Matrix> evolve_density(const EmitterModel& model, const ControlPulse& pulse,
                                   const Matrix& rho0, const TimeGrid& grid);

/// Liouvillian in column-major superoperator form (dim^2 x dim^2).
Matrix liouvillian(const EmitterModel& model, double ux, double uy, double gamma0);

} // namespace fq
