#include "flyqubit/emitter.hpp"

#include <cmath>
#include <stdexcept>

namespace fq {

EmitterModel::EmitterModel(int dim, double eta) : dim_(dim), eta_(eta)
{
    if (dim < 2) {
        throw std::invalid_argument("EmitterModel: dim must be >= 2");
    }
    a_ = Matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) {
        a_(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    adag_ = a_.adjoint();
    number_ = adag_ * a_;
    kerr_ = adag_ * adag_ * a_ * a_;
}

Matrix EmitterModel::drive_hamiltonian(double ux, double uy) const
{
    const Complex u(ux, uy);
    return 0.5 * eta_ * kerr_ + u * adag_ + std::conj(u) * a_;
}

Matrix EmitterModel::effective_hamiltonian(double ux, double uy, double gamma) const
{
    if (gamma < 0.0) {
        throw std::invalid_argument("effective_hamiltonian: gamma must be >= 0");
    }
    return drive_hamiltonian(ux, uy) - Complex(0.0, 0.5 * gamma) * number_;
}

Matrix lindblad_rhs(const EmitterModel& model, const Matrix& rho,
                    double ux, double uy, double gamma0)
{
    if (rho.rows() != model.dim() || rho.cols() != model.dim()) {
        throw std::invalid_argument("lindblad_rhs: rho dimension mismatch");
    }
    if (gamma0 < 0.0) {
        throw std::invalid_argument("lindblad_rhs: gamma0 must be >= 0");
    }
    const Matrix h = model.drive_hamiltonian(ux, uy);
    const Matrix& a = model.lowering();
    const Matrix& n = model.number();
    Matrix out = Complex(0.0, -1.0) * (h * rho - rho * h);
    out += gamma0 * (a * rho * a.adjoint() - 0.5 * (rho * n + n * rho));
    return out;
}

} // namespace fq
