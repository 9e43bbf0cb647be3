#include "flyqubit/photon_field.hpp"

#include <cmath>
#include <stdexcept>

namespace fq {

RealVector TargetShape::sample(const TimeGrid& grid) const
{
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("TargetShape: alpha must be positive");
    }
    const int m = grid.steps();
    const double dt = grid.dt();
    const double t_end = grid.t_end();
    RealVector s(m);
    for (int k = 0; k < m; ++k) {
        const double t = dt * (k + 1);
        switch (kind) {
        case ShapeKind::ExpDecay:
            s(k) = t >= t_delay ? std::sqrt(alpha) * std::exp(-0.5 * alpha * (t - t_delay)) : 0.0;
            break;
        case ShapeKind::ExpRise:
            s(k) = std::sqrt(alpha) * std::exp(0.5 * alpha * (t - t_end));
            break;
        case ShapeKind::Sech: {
            const double center = t_delay > 0.0 ? t_delay : 0.5 * t_end;
            s(k) = std::sqrt(alpha) / std::cosh(0.5 * alpha * (t - center));
            break;
        }
        }
    }
    const double norm = std::sqrt(s.squaredNorm() * dt);
    if (!(norm > 0.0)) {
        throw std::invalid_argument("TargetShape: shape vanishes on the grid");
    }
    return s / norm;
}

RealVector TargetShape::ideal_coupling(const TimeGrid& grid) const
{
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("TargetShape: alpha must be positive");
    }
    const int m = grid.steps();
    const double dt = grid.dt();
    const double t_end = grid.t_end();
    RealVector g(m);
    for (int k = 0; k < m; ++k) {
        const double t = dt * (k + 1);
        switch (kind) {
        case ShapeKind::ExpDecay:
            g(k) = t >= t_delay ? alpha : 0.0;
            break;
        case ShapeKind::ExpRise: {
            const double e = std::exp(alpha * (t - t_end));
            g(k) = e < 1.0 ? alpha * e / (1.0 - e) : 1.0 / dt;
            g(k) = std::min(g(k), 1.0 / dt);
            break;
        }
        case ShapeKind::Sech: {
            const double center = t_delay > 0.0 ? t_delay : 0.5 * t_end;
            g(k) = 0.5 * alpha * (1.0 + std::tanh(0.5 * alpha * (t - center)));
            break;
        }
        }
    }
    return g;
}

double FlyingQubitState::single_photon_norm() const
{
    return xi1.squaredNorm() * dt;
}

double FlyingQubitState::multiphoton_weight() const
{
    return 1.0 - std::norm(xi0) - single_photon_norm();
}

bool FlyingQubitState::norm_inequality_ok(double tol) const
{
    return std::norm(xi0) + single_photon_norm() <= 1.0 + tol;
}

Complex vacuum_amplitude(const PropagatorChain& chain, const Vector& psi0)
{
    const Vector ground = basis_state(chain.dim(), 0);
    return (ground.adjoint() * (chain.forward(chain.steps()) * psi0))(0);
}

Vector single_photon_component(const PropagatorChain& chain, const EmitterModel& model,
                               const ControlPulse& pulse, const Vector& psi0)
{
    const int m = chain.steps();
    const auto rows = chain.backward_rows(basis_state(chain.dim(), 0));
    const auto fwd = chain.forward_states(psi0);
    Vector xi1(m);
    for (int n = 1; n <= m; ++n) {
        const double g = pulse.gamma(n - 1);
        xi1(n - 1) = std::sqrt(g)
            * (rows[static_cast<size_t>(n)] * (model.lowering() * fwd[static_cast<size_t>(n)]))(0);
    }
    return xi1;
}

FlyingQubitState flying_qubit_state(const PropagatorChain& chain, const EmitterModel& model,
                                    const ControlPulse& pulse, const Vector& psi0)
{
    FlyingQubitState st;
    st.xi0 = vacuum_amplitude(chain, psi0);
    st.xi1 = single_photon_component(chain, model, pulse, psi0);
    st.dt = chain.dt();
    return st;
}

RealVector analytic_decay_shape(const RealVector& gamma, const TimeGrid& grid)
{
    if (gamma.size() != grid.steps()) {
        throw std::invalid_argument("analytic_decay_shape: gamma length != grid steps");
    }
    RealVector xi(gamma.size());
    double cumulative = 0.0;
    for (Eigen::Index k = 0; k < gamma.size(); ++k) {
        cumulative += gamma(k) * grid.dt();
        xi(k) = std::sqrt(gamma(k)) * std::exp(-0.5 * cumulative);
    }
    return xi;
}

RealVector ideal_coupling(const RealVector& shape_samples, const TimeGrid& grid)
{
    if (shape_samples.size() != grid.steps()) {
        throw std::invalid_argument("ideal_coupling: samples length != grid steps");
    }
    const Eigen::Index m = shape_samples.size();
    RealVector g = RealVector::Zero(m);
    double tail = 0.0;
    RealVector tails(m);
    for (Eigen::Index k = m - 1; k >= 0; --k) {
        tail += shape_samples(k) * shape_samples(k) * grid.dt();
        tails(k) = tail;
    }
    for (Eigen::Index k = 0; k < m; ++k) {
        g(k) = tails(k) > 1e-12 ? shape_samples(k) * shape_samples(k) / tails(k) : 0.0;
    }
    return g;
}

RealVector photon_leakage_trace(const PropagatorChain& chain, const Vector& psi0)
{
    RealVector trace(chain.steps() + 1);
    for (int k = 0; k <= chain.steps(); ++k) {
        trace(k) = 1.0 - (chain.forward(k) * psi0).squaredNorm();
    }
    return trace;
}

RealVector level_leakage_trace(const std::vector<Matrix>& trajectory)
{
    RealVector trace(static_cast<Eigen::Index>(trajectory.size()));
    for (size_t k = 0; k < trajectory.size(); ++k) {
        double pop = 0.0;
        for (Eigen::Index n = 2; n < trajectory[k].rows(); ++n) {
            pop += trajectory[k](n, n).real();
        }
        trace(static_cast<Eigen::Index>(k)) = pop;
    }
    return trace;
}

} // namespace fq
