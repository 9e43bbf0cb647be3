#include "flyqubit/objectives.hpp"

#include <cmath>
#include <stdexcept>

namespace fq {

namespace {

ControlPulse truncated(const ControlPulse& pulse, int m0)
{
    if (pulse.steps() == m0) {
        return pulse;
    }
    ControlPulse p;
    p.ux = pulse.ux.head(m0);
    p.uy = pulse.uy.head(m0);
    p.gamma = pulse.gamma.head(m0);
    return p;
}

struct ShapingTargets {
    Complex tgt0;
    RealVector tgt1;
    Vector psi0_vacuum;  // initial state entering xi0
    Vector psi0_photon;  // initial state entering xi1
};

ShapingTargets shaping_targets(const ShapingProblem& problem)
{
    ShapingTargets t;
    const RealVector shape = problem.target.sample(problem.grid);
    const int dim = problem.model.dim();
    if (problem.objective == ObjectiveKind::J2) {
        t.tgt0 = problem.c0;
        t.tgt1 = shape;  // scaled by c1 in the complex weight below
        t.psi0_vacuum = basis_state(dim, 0);
        t.psi0_photon = basis_state(dim, 0);
    } else {
        t.tgt0 = 1.0;
        t.tgt1 = shape;
        t.psi0_vacuum = basis_state(dim, 0);
        t.psi0_photon = basis_state(dim, 1);
    }
    return t;
}

Complex target_sample(const ShapingProblem& problem, const ShapingTargets& t, int n)
{
    const Complex scale = problem.objective == ObjectiveKind::J2 ? problem.c1 : Complex(1.0);
    return scale * t.tgt1(n);
}

double shaping_value(const ShapingProblem& problem, const ControlPulse& pulse)
{
    const ShapingTargets t = shaping_targets(problem);
    const PropagatorChain chain(problem.model, pulse, problem.grid);
    const double dt = problem.grid.dt();
    const Complex xi0 = vacuum_amplitude(chain, t.psi0_vacuum);
    const Vector xi1 = single_photon_component(chain, problem.model, pulse, t.psi0_photon);
    double j = std::norm(xi0 - t.tgt0);
    for (int n = 0; n < pulse.steps(); ++n) {
        j += std::norm(xi1(n) - target_sample(problem, t, n)) * dt;
    }
    return j;
}

} // namespace

ShapingProblem::ShapingProblem(EmitterModel m, TimeGrid g)
    : model(std::move(m)), grid(g)
{
    psi_target = basis_state(model.dim(), 1);
}

void ShapingProblem::validate() const
{
    if (objective == ObjectiveKind::J2) {
        const double norm = std::norm(c0) + std::norm(c1);
        if (std::abs(norm - 1.0) > 1e-12) {
            throw std::invalid_argument("ShapingProblem: |c0|^2 + |c1|^2 must be 1");
        }
    }
    if (horizon_steps < 0 || horizon_steps > grid.steps()) {
        throw std::invalid_argument("ShapingProblem: horizon_steps out of range");
    }
    if (psi_target.size() != model.dim()) {
        throw std::invalid_argument("ShapingProblem: psi_target dimension mismatch");
    }
}

double j1_me_value(const ShapingProblem& problem, const ControlPulse& pulse)
{
    const int m0 = problem.horizon();
    const TimeGrid grid(problem.grid.dt() * m0, m0);
    const ControlPulse p = truncated(pulse, m0);
    const int dim = problem.model.dim();
    const Vector ground = basis_state(dim, 0);
    const Matrix rho0 = ground * ground.adjoint();
    const auto traj = evolve_density(problem.model, p, rho0, grid);
    const Complex overlap = (problem.psi_target.adjoint() * traj.back() * problem.psi_target)(0);
    return 1.0 - overlap.real();
}

void j1_me_gradient(const ShapingProblem& problem, const ControlPulse& pulse,
                    RealVector& grad_ux, RealVector& grad_uy)
{
    const int m = pulse.steps();
    const int m0 = problem.horizon();
    const int dim = problem.model.dim();
    const double dt = problem.grid.dt();
    const Matrix eye = Matrix::Identity(dim, dim);

    const Matrix dx = problem.model.raising() + problem.model.lowering();
    const Matrix dy = Complex(0.0, 1.0) * (problem.model.raising() - problem.model.lowering());
    const Matrix dl_dx = Complex(0.0, -1.0) * (kron(eye, dx) - kron(dx.transpose(), eye));
    const Matrix dl_dy = Complex(0.0, -1.0) * (kron(eye, dy) - kron(dy.transpose(), eye));

    std::vector<Matrix> steps(static_cast<size_t>(m0));
    std::vector<Matrix> frechet_x(static_cast<size_t>(m0));
    std::vector<Matrix> frechet_y(static_cast<size_t>(m0));
    for (int k = 0; k < m0; ++k) {
        const Matrix l = liouvillian(problem.model, pulse.ux(k), pulse.uy(k), pulse.gamma(k)) * dt;
        Matrix e;
        expm_with_frechet(l, dl_dx * dt, e, frechet_x[static_cast<size_t>(k)]);
        Matrix e2;
        expm_with_frechet(l, dl_dy * dt, e2, frechet_y[static_cast<size_t>(k)]);
        steps[static_cast<size_t>(k)] = e;
    }

    const Vector ground = basis_state(dim, 0);
    std::vector<Vector> rho_vec(static_cast<size_t>(m0) + 1);
    rho_vec[0] = vec(ground * ground.adjoint());
    for (int k = 0; k < m0; ++k) {
        rho_vec[static_cast<size_t>(k) + 1] = steps[static_cast<size_t>(k)] * rho_vec[static_cast<size_t>(k)];
    }

    const Vector proj = vec(problem.psi_target * problem.psi_target.adjoint());
    std::vector<RowVector> costate(static_cast<size_t>(m0) + 1);
    costate[static_cast<size_t>(m0)] = proj.adjoint();
    for (int k = m0 - 1; k >= 0; --k) {
        costate[static_cast<size_t>(k)] = costate[static_cast<size_t>(k) + 1] * steps[static_cast<size_t>(k)];
    }

    grad_ux = RealVector::Zero(m);
    grad_uy = RealVector::Zero(m);
    for (int k = 0; k < m0; ++k) {
        grad_ux(k) = -(costate[static_cast<size_t>(k) + 1]
                       * (frechet_x[static_cast<size_t>(k)] * rho_vec[static_cast<size_t>(k)]))(0).real();
        grad_uy(k) = -(costate[static_cast<size_t>(k) + 1]
                       * (frechet_y[static_cast<size_t>(k)] * rho_vec[static_cast<size_t>(k)]))(0).real();
    }
}

double j1_qsde_value(const ShapingProblem& problem, const ControlPulse& pulse)
{
    const int m0 = problem.horizon();
    const TimeGrid grid(problem.grid.dt() * m0, m0);
    const PropagatorChain chain(problem.model, truncated(pulse, m0), grid);
    const Vector ground = basis_state(problem.model.dim(), 0);
    const Complex z = (problem.psi_target.adjoint() * (chain.forward(m0) * ground))(0);
    return 1.0 - std::norm(z);
}

void j1_qsde_gradient(const ShapingProblem& problem, const ControlPulse& pulse,
                      RealVector& grad_ux, RealVector& grad_uy)
{
    const int m = pulse.steps();
    const int m0 = problem.horizon();
    const double dt = problem.grid.dt();
    const TimeGrid grid(dt * m0, m0);
    const PropagatorChain chain(problem.model, truncated(pulse, m0), grid);

    const Vector ground = basis_state(problem.model.dim(), 0);
    const auto rows = chain.backward_rows(problem.psi_target);  // <psi_P| G_{M0,j}
    const auto fwd = chain.forward_states(ground);
    const Complex z = (rows[0] * ground)(0);

    const Matrix dx = problem.model.raising() + problem.model.lowering();
    const Matrix dy = problem.model.raising() - problem.model.lowering();

    grad_ux = RealVector::Zero(m);
    grad_uy = RealVector::Zero(m);
    for (int j = 1; j <= m0; ++j) {
        const Vector& fj = fwd[static_cast<size_t>(j)];
        const Complex dz_x = Complex(0.0, -1.0) * (rows[static_cast<size_t>(j)] * (dx * fj))(0) * dt;
        const Complex dz_y = (rows[static_cast<size_t>(j)] * (dy * fj))(0) * dt;
        grad_ux(j - 1) = -2.0 * (std::conj(z) * dz_x).real();
        grad_uy(j - 1) = -2.0 * (std::conj(z) * dz_y).real();
    }
}

double j2_value(const ShapingProblem& problem, const ControlPulse& pulse)
{
    ShapingProblem p = problem;
    p.objective = ObjectiveKind::J2;
    return shaping_value(p, pulse);
}

double j3_value(const ShapingProblem& problem, const ControlPulse& pulse)
{
    ShapingProblem p = problem;
    p.objective = ObjectiveKind::J3;
    return shaping_value(p, pulse);
}

ShapingGradient shaping_gradient(const ShapingProblem& problem, const ControlPulse& pulse)
{
    if (problem.objective != ObjectiveKind::J2 && problem.objective != ObjectiveKind::J3) {
        throw std::invalid_argument("shaping_gradient: only J2 and J3 are supported");
    }
    const ShapingTargets t = shaping_targets(problem);
    const PropagatorChain chain(problem.model, pulse, problem.grid);
    const int m = chain.steps();
    const int dim = problem.model.dim();
    const double dt = problem.grid.dt();
    const Matrix& a = problem.model.lowering();

    const auto rows = chain.backward_rows(basis_state(dim, 0));  // b_n = <0|G_{M,n}
    const auto f0 = chain.forward_states(t.psi0_vacuum);
    const auto f1 = chain.forward_states(t.psi0_photon);

    const Complex xi0 = (rows[0] * t.psi0_vacuum)(0);
    Vector amp(m);  // <0| G_{M,n} a G_{n,0} |psi0_photon>
    for (int n = 1; n <= m; ++n) {
        amp(n - 1) = (rows[static_cast<size_t>(n)] * (a * f1[static_cast<size_t>(n)]))(0);
    }

    RealVector sqrt_gamma(m);
    for (int n = 0; n < m; ++n) {
        sqrt_gamma(n) = std::sqrt(pulse.gamma(n));
    }

    const Complex w0 = std::conj(xi0 - t.tgt0);
    Vector wn(m);  // (xi1 - target)^* dt
    Vector cn(m);  // step-derivative coefficient: wn sqrt(gamma) dt
    for (int n = 0; n < m; ++n) {
        const Complex xi1_n = sqrt_gamma(n) * amp(n);
        wn(n) = std::conj(xi1_n - target_sample(problem, t, n)) * dt;
        cn(n) = wn(n) * sqrt_gamma(n) * dt;
    }

    // s_j = sum_{n>=j} cn <0| G_{M,n} a G_{n,j}, one reverse sweep.
    std::vector<RowVector> s(static_cast<size_t>(m) + 1);
    s[static_cast<size_t>(m)] = cn(m - 1) * (rows[static_cast<size_t>(m)] * a);
    for (int j = m - 1; j >= 1; --j) {
        s[static_cast<size_t>(j)] = cn(j - 1) * (rows[static_cast<size_t>(j)] * a)
            + s[static_cast<size_t>(j) + 1] * chain.step(j + 1);
    }

    const Matrix dx = Complex(0.0, -1.0) * (problem.model.raising() + a);
    const Matrix dy = problem.model.raising() - a;
    const Matrix dg = -0.5 * problem.model.number();

    ShapingGradient grad;
    grad.ux = RealVector::Zero(m);
    grad.uy = RealVector::Zero(m);
    grad.gamma = RealVector::Zero(m);
    grad.gamma_sqrt_param = RealVector::Zero(m);

    Vector mvec = Vector::Zero(dim);  // sum_{n<j} cn G_{j,n} a f1_n, forward sweep
    for (int j = 1; j <= m; ++j) {
        if (j > 1) {
            mvec = chain.step(j) * (mvec + cn(j - 2) * (a * f1[static_cast<size_t>(j) - 1]));
        }
        const RowVector& bj = rows[static_cast<size_t>(j)];
        const Vector& v0 = f0[static_cast<size_t>(j)];
        const Vector& v1 = f1[static_cast<size_t>(j)];
        const RowVector& sj = s[static_cast<size_t>(j)];

        const Complex tx = w0 * (bj * (dx * v0))(0) * dt + (sj * (dx * v1))(0) + (bj * (dx * mvec))(0);
        const Complex ty = w0 * (bj * (dy * v0))(0) * dt + (sj * (dy * v1))(0) + (bj * (dy * mvec))(0);
        const Complex tg_vpart =
            w0 * (bj * (dg * v0))(0) * dt + (sj * (dg * v1))(0) + (bj * (dg * mvec))(0);

        grad.ux(j - 1) = 2.0 * tx.real();
        grad.uy(j - 1) = 2.0 * ty.real();

        // Exact derivative of the sqrt(gamma(t_j)) prefactor in xi1(t_j).
        Complex tg = tg_vpart;
        if (sqrt_gamma(j - 1) > 0.0) {
            tg += wn(j - 1) * amp(j - 1) / (2.0 * sqrt_gamma(j - 1));
        }
        grad.gamma(j - 1) = 2.0 * tg.real();
        // w = sqrt(gamma) channel: chain rule on the V-part, exact prefactor.
        const Complex tw = tg_vpart * 2.0 * sqrt_gamma(j - 1) + wn(j - 1) * amp(j - 1);
        grad.gamma_sqrt_param(j - 1) = 2.0 * tw.real();
    }
    return grad;
}

ConditionalErrors conditional_errors(const ShapingProblem& problem, const ControlPulse& pulse)
{
    const PropagatorChain chain(problem.model, pulse, problem.grid);
    const int dim = problem.model.dim();
    const double dt = problem.grid.dt();
    const RealVector shape = problem.target.sample(problem.grid);
    const Complex xi0 = vacuum_amplitude(chain, basis_state(dim, 0));
    const Vector xi1 = single_photon_component(chain, problem.model, pulse, basis_state(dim, 1));
    ConditionalErrors e;
    e.vacuum_error = std::norm(Complex(1.0) - xi0);
    for (int n = 0; n < pulse.steps(); ++n) {
        e.photon_error += std::norm(xi1(n) - shape(n)) * dt;
    }
    e.total = e.vacuum_error + e.photon_error;
    return e;
}

ConstraintTransform::ConstraintTransform(const TimeGrid& grid, double bound,
                                         double ramp_fraction, double filter_std_ns)
    : bound_(bound)
{
    const int m = grid.steps();
    // Tukey (tapered-cosine) window with exact zeros at both ends.
    envelope_ = RealVector::Zero(m);
    const double ramp = std::max(1.0, ramp_fraction * (m - 1));
    for (int k = 0; k < m; ++k) {
        const double x = static_cast<double>(k);
        const double tail = static_cast<double>(m - 1) - x;
        if (x < ramp) {
            envelope_(k) = 0.5 * (1.0 - std::cos(std::numbers::pi * x / ramp));
        } else if (tail < ramp) {
            envelope_(k) = 0.5 * (1.0 - std::cos(std::numbers::pi * tail / ramp));
        } else {
            envelope_(k) = 1.0;
        }
    }
    // Gaussian smoothing matrix, rows renormalized, truncated at 4 sigma.
    filter_ = RealMatrix::Zero(m, m);
    const double sigma = filter_std_ns / grid.dt();
    if (sigma < 1e-9) {
        filter_ = RealMatrix::Identity(m, m);
    } else {
        const int halfwidth = static_cast<int>(std::ceil(4.0 * sigma));
        for (int i = 0; i < m; ++i) {
            double sum = 0.0;
            for (int j = std::max(0, i - halfwidth); j <= std::min(m - 1, i + halfwidth); ++j) {
                const double w = std::exp(-0.5 * std::pow((i - j) / sigma, 2));
                filter_(i, j) = w;
                sum += w;
            }
            filter_.row(i) /= sum;
        }
    }
}

RealVector ConstraintTransform::forward_linear(const RealVector& v) const
{
    return envelope_.asDiagonal() * (filter_ * v);
}

RealVector ConstraintTransform::pullback_linear(const RealVector& g) const
{
    return filter_.transpose() * (envelope_.asDiagonal() * g);
}

ConstraintTransform::Applied ConstraintTransform::apply(const RealVector& vx,
                                                        const RealVector& vy) const
{
    Applied out;
    out.ux = forward_linear(vx);
    out.uy = forward_linear(vy);
    out.saturated_x.assign(static_cast<size_t>(out.ux.size()), false);
    out.saturated_y.assign(static_cast<size_t>(out.uy.size()), false);
    for (Eigen::Index k = 0; k < out.ux.size(); ++k) {
        if (std::abs(out.ux(k)) > bound_) {
            out.ux(k) = out.ux(k) > 0.0 ? bound_ : -bound_;
            out.saturated_x[static_cast<size_t>(k)] = true;
        }
        if (std::abs(out.uy(k)) > bound_) {
            out.uy(k) = out.uy(k) > 0.0 ? bound_ : -bound_;
            out.saturated_y[static_cast<size_t>(k)] = true;
        }
    }
    return out;
}

void ConstraintTransform::pullback(const Applied& applied,
                                   RealVector& grad_ux, RealVector& grad_uy) const
{
    RealVector gx = grad_ux;
    RealVector gy = grad_uy;
    for (Eigen::Index k = 0; k < gx.size(); ++k) {
        if (applied.saturated_x[static_cast<size_t>(k)]) {
            gx(k) = 0.0;
        }
        if (applied.saturated_y[static_cast<size_t>(k)]) {
            gy(k) = 0.0;
        }
    }
    grad_ux = pullback_linear(gx);
    grad_uy = pullback_linear(gy);
}

} // namespace fq
