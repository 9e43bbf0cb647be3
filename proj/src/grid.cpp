#include "flyqubit/grid.hpp"

#include <stdexcept>

namespace fq {

TimeGrid::TimeGrid(double t_end, int n_steps) : t_end_(t_end), steps_(n_steps)
{
    if (n_steps < 1) {
        throw std::invalid_argument("TimeGrid: n_steps must be >= 1");
    }
    if (!(t_end > 0.0)) {
        throw std::invalid_argument("TimeGrid: t_end must be positive");
    }
    dt_ = t_end / n_steps;
}

RealVector TimeGrid::sample_times() const
{
    RealVector t(steps_);
    for (int k = 0; k < steps_; ++k) {
        t(k) = dt_ * (k + 1);
    }
    return t;
}

ControlPulse ControlPulse::constant_coupling(int n_steps, double gamma_value)
{
    ControlPulse p;
    p.ux = RealVector::Zero(n_steps);
    p.uy = RealVector::Zero(n_steps);
    p.gamma = RealVector::Constant(n_steps, gamma_value);
    p.validate();
    return p;
}

void ControlPulse::validate() const
{
    if (uy.size() != ux.size() || gamma.size() != ux.size()) {
        throw std::invalid_argument("ControlPulse: channel lengths differ");
    }
    for (Eigen::Index k = 0; k < gamma.size(); ++k) {
        if (gamma(k) < 0.0) {
            throw std::invalid_argument("ControlPulse: gamma entries must be >= 0");
        }
    }
}

} // namespace fq
