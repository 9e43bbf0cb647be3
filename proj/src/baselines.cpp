#include "flyqubit/baselines.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fq {

ControlPulse gaussian_pi_pulse(double t0_ns, double sigma_ns, const TimeGrid& grid)
{
    if (!(sigma_ns > 0.0)) {
        throw std::invalid_argument("gaussian_pi_pulse: sigma must be positive");
    }
    if (t0_ns > grid.t_end() + 1e-12) {
        throw std::invalid_argument("gaussian_pi_pulse: t0 exceeds the grid horizon");
    }
    const int m = grid.steps();
    const double dt = grid.dt();
    const double center = 0.5 * t0_ns;
    ControlPulse p;
    p.ux = RealVector::Zero(m);
    p.uy = RealVector::Zero(m);
    p.gamma = RealVector::Zero(m);
    for (int k = 0; k < m; ++k) {
        const double t = dt * (k + 1);
        p.ux(k) = std::exp(-0.5 * std::pow((t - center) / sigma_ns, 2));
    }
    const double area = p.ux.sum() * dt;
    p.ux *= 0.5 * std::numbers::pi / area;  // 2 * integral(u_x) = pi
    return p;
}

ControlPulse drag_pulse(const ControlPulse& gaussian, double eta, const TimeGrid& grid)
{
    if (eta == 0.0) {
        throw std::invalid_argument("drag_pulse: eta must be nonzero");
    }
    if (gaussian.steps() != grid.steps()) {
        throw std::invalid_argument("drag_pulse: pulse length != grid steps");
    }
    ControlPulse p = gaussian;
    const int m = p.steps();
    if (m < 2) {
        return p;
    }
    const double dt = grid.dt();
    RealVector deriv(m);
    deriv(0) = (p.ux(1) - p.ux(0)) / dt;
    deriv(m - 1) = (p.ux(m - 1) - p.ux(m - 2)) / dt;
    for (int k = 1; k < m - 1; ++k) {
        deriv(k) = (p.ux(k + 1) - p.ux(k - 1)) / (2.0 * dt);
    }
    p.uy = -deriv / eta;
    return p;
}

RealVector cutoff_coupling(const RealVector& ideal_gamma, double gamma_min, double gamma_max)
{
    if (gamma_min > gamma_max) {
        throw std::invalid_argument("cutoff_coupling: gamma_min > gamma_max");
    }
    return ideal_gamma.cwiseMax(gamma_min).cwiseMin(gamma_max);
}

} // namespace fq
