#pragma once

#include <functional>
#include <string>
#include <vector>

#include "flyqubit/linalg.hpp"

namespace fq {

struct OptimizerConfig {
    int memory = 10;
    int max_iters = 500;
    double grad_tol = 1e-6;        // projected-gradient infinity norm
    double objective_tol = 1e-10;  // relative per-iteration decrease
    double wolfe_c1 = 1e-4;
    double wolfe_c2 = 0.9;
    int max_line_search = 25;
    std::uint64_t rng_seed = 0;    // consumed by callers drawing initial guesses
};

enum class TerminationReason { GradTol, ObjectiveTol, MaxIters, LineSearchFailure };

std::string to_string(TerminationReason reason);

struct OptimizationResult {
    RealVector x;
    double value = 0.0;
    std::vector<double> trace;  // objective per accepted iterate, non-increasing
    TerminationReason reason = TerminationReason::MaxIters;
    int iterations = 0;
    double wall_seconds = 0.0;
};

/// Evaluates the objective and writes its gradient. The gradient vector is
/// pre-sized to x.size().
using ObjectiveFn = std::function<double(const RealVector& x, RealVector& grad)>;

/// L-BFGS two-loop recursion with strong-Wolfe line search and box bounds
/// handled by projection plus saturated-gradient zeroing. Deterministic for
/// identical inputs. Pass +-infinity bounds for unconstrained coordinates.
OptimizationResult minimize(const ObjectiveFn& fg, const RealVector& x0,
                            const RealVector& lower, const RealVector& upper,
                            const OptimizerConfig& config);

OptimizationResult minimize(const ObjectiveFn& fg, const RealVector& x0,
                            const OptimizerConfig& config);

/// Central finite differences, (f(x+h e_i) - f(x-h e_i)) / 2h.
RealVector finite_difference_gradient(const std::function<double(const RealVector&)>& f,
                                      const RealVector& x, double h);

} // namespace fq
