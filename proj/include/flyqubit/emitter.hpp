#pragma once

#include "flyqubit/linalg.hpp"

namespace fq {

/// Truncated anharmonic-oscillator emitter. Operators are built once at
/// construction and shared read-only afterwards.
class EmitterModel {
public:
    /// dim: number of retained levels (>= 2). eta: anharmonicity in rad/ns,
    /// negative for transmon-like emitters.
    explicit EmitterModel(int dim = 5, double eta = 0.0);

    int dim() const { return dim_; }
    double eta() const { return eta_; }

    const Matrix& lowering() const { return a_; }
    const Matrix& raising() const { return adag_; }
    const Matrix& number() const { return number_; }
    /// Kerr term a^dag^2 a^2, built by matrix products.
    const Matrix& kerr() const { return kerr_; }

    /// H_eff = (eta/2) a^dag^2 a^2 + u a^dag + u* a - i (gamma/2) a^dag a,
    /// u = ux + i uy. Non-Hermitian for gamma > 0. Rejects gamma < 0.
    Matrix effective_hamiltonian(double ux, double uy, double gamma) const;

    /// Hermitian part only: (eta/2) a^dag^2 a^2 + u a^dag + u* a.
    Matrix drive_hamiltonian(double ux, double uy) const;

private:
    int dim_;
    double eta_;
    Matrix a_;
    Matrix adag_;
    Matrix number_;
    Matrix kerr_;
};

/// Right-hand side of the master equation: -i[H_drive, rho]
/// + gamma0 (a rho a^dag - 1/2 {a^dag a, rho}). Trace-free and
/// Hermiticity-preserving. Rejects mismatched rho or gamma0 < 0.
Matrix lindblad_rhs(const EmitterModel& model, const Matrix& rho,
                    double ux, double uy, double gamma0);

} // namespace fq
