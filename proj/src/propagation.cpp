#include "flyqubit/propagation.hpp"

#include <stdexcept>

namespace fq {

Matrix step_propagator(const Matrix& h, double dt)
{
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("step_propagator: H must be square");
    }
    if (!(dt > 0.0)) {
        throw std::invalid_argument("step_propagator: dt must be positive");
    }
    return expm(Complex(0.0, -dt) * h);
}

PropagatorChain::PropagatorChain(const EmitterModel& model, const ControlPulse& pulse,
                                 const TimeGrid& grid)
    : dim_(model.dim()), dt_(grid.dt())
{
    pulse.validate();
    if (pulse.steps() != grid.steps()) {
        throw std::invalid_argument("PropagatorChain: pulse length != grid steps");
    }
    const int m = grid.steps();
    steps_.reserve(static_cast<size_t>(m));
    forward_.reserve(static_cast<size_t>(m) + 1);
    forward_.push_back(Matrix::Identity(dim_, dim_));
    for (int k = 0; k < m; ++k) {
        const Matrix h = model.effective_hamiltonian(pulse.ux(k), pulse.uy(k), pulse.gamma(k));
        steps_.push_back(step_propagator(h, dt_));
        forward_.push_back(steps_.back() * forward_.back());
    }
}

Matrix PropagatorChain::transition(int j, int n) const
{
    if (j < 0 || n < j || n > steps()) {
        throw std::out_of_range("transition: need 0 <= j <= n <= M");
    }
    if (j == 0) {
        return forward_[static_cast<size_t>(n)];
    }
    Matrix g = Matrix::Identity(dim_, dim_);
    for (int k = j + 1; k <= n; ++k) {
        g = step(k) * g;
    }
    return g;
}

std::vector<Vector> PropagatorChain::forward_states(const Vector& psi0) const
{
    std::vector<Vector> states;
    states.reserve(forward_.size());
    states.push_back(psi0);
    for (const Matrix& v : steps_) {
        states.push_back(v * states.back());
    }
    return states;
}

std::vector<RowVector> PropagatorChain::backward_rows(const Vector& bra) const
{
    const int m = steps();
    std::vector<RowVector> rows(static_cast<size_t>(m) + 1);
    rows[static_cast<size_t>(m)] = bra.adjoint();
    for (int n = m - 1; n >= 0; --n) {
        rows[static_cast<size_t>(n)] = rows[static_cast<size_t>(n + 1)] * steps_[static_cast<size_t>(n)];
    }
    return rows;
}

double PropagatorChain::tail_population(const Vector& psi0) const
{
    const Vector final_state = forward_.back() * psi0;
    double pop = 0.0;
    for (int n = 1; n < dim_; ++n) {
        pop += std::norm(final_state(n));
    }
    return pop;
}

Matrix liouvillian(const EmitterModel& model, double ux, double uy, double gamma0)
{
    const int d = model.dim();
    const Matrix eye = Matrix::Identity(d, d);
    const Matrix h = model.drive_hamiltonian(ux, uy);
    const Matrix& a = model.lowering();
    const Matrix& n = model.number();
    Matrix l = Complex(0.0, -1.0) * (kron(eye, h) - kron(h.transpose(), eye));
    l += gamma0 * (kron(a.conjugate(), a)
                   - 0.5 * kron(eye, n) - 0.5 * kron(n.transpose(), eye));
    return l;
}

std::vector<Matrix> evolve_density(const EmitterModel& model, const ControlPulse& pulse,
                                   const Matrix& rho0, const TimeGrid& grid)
{
    pulse.validate();
    if (pulse.steps() != grid.steps()) {
        throw std::invalid_argument("evolve_density: pulse length != grid steps");
    }
    if (rho0.rows() != model.dim() || rho0.cols() != model.dim()) {
        throw std::invalid_argument("evolve_density: rho0 dimension mismatch");
    }
    std::vector<Matrix> traj;
    traj.reserve(static_cast<size_t>(grid.steps()) + 1);
    traj.push_back(rho0);
    Vector v = vec(rho0);
    for (int k = 0; k < grid.steps(); ++k) {
        const Matrix l = liouvillian(model, pulse.ux(k), pulse.uy(k), pulse.gamma(k));
        const Matrix e = expm(l * grid.dt());
        v = e * v;
        traj.push_back(unvec(v, model.dim()));
    }
    return traj;
}

} // namespace fq
