#pragma once

#include "flyqubit/linalg.hpp"

namespace fq {

/// Uniform time grid on [0, t_end] with n_steps pieces, dt = t_end/n_steps.
/// Sample times are t_k = k*dt, k = 0..n_steps.
class TimeGrid {
public:
    TimeGrid(double t_end, int n_steps);

    double t_end() const { return t_end_; }
    int steps() const { return steps_; }
    double dt() const { return dt_; }
    double time(int k) const { return dt_ * k; }

    /// Sample times t_1..t_M (where pulse entries and photon samples live).
    RealVector sample_times() const;

private:
    double t_end_;
    int steps_;
    double dt_;
};

/// Piecewise-constant controls: entry k (0-based) applies on [t_k, t_{k+1}],
/// i.e. it is the value "at t_{k+1}" in the sampled-at-right convention.
struct ControlPulse {
    RealVector ux;
    RealVector uy;
    RealVector gamma;

    ControlPulse() = default;
    /// All-zero drive with the given constant coupling.
    static ControlPulse constant_coupling(int n_steps, double gamma_value);

    int steps() const { return static_cast<int>(ux.size()); }
    /// Throws if lengths differ or any gamma entry is negative.
    void validate() const;
};

} // namespace fq
