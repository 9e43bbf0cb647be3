#pragma once

#include <complex>

#include <Eigen/Dense>

namespace fq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RowVector = Eigen::RowVectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Matrix exponential of a small dense complex matrix.
/// Diagonal inputs take an exact elementwise path; everything else goes
/// through scaling-and-squaring with Pade approximation.
Matrix expm(const Matrix& a);

/// exp(a) together with its Frechet derivative in direction e, computed via
/// the block-triangular embedding exp([[a,e],[0,a]]).
void expm_with_frechet(const Matrix& a, const Matrix& e, Matrix& exp_a, Matrix& frechet);

/// Kronecker product, column-major vec convention: vec(A X B) = (B^T (x) A) vec(X).
Matrix kron(const Matrix& a, const Matrix& b);

inline Vector vec(const Matrix& m)
{
    return Eigen::Map<const Vector>(m.data(), m.size());
}

inline Matrix unvec(const Vector& v, Eigen::Index rows)
{
    return Eigen::Map<const Matrix>(v.data(), rows, v.size() / rows);
}

inline Vector basis_state(Eigen::Index dim, Eigen::Index n)
{
    Vector v = Vector::Zero(dim);
    v(n) = 1.0;
    return v;
}

/// max_ij |m - m^dagger|, zero for Hermitian matrices.
double hermiticity_defect(const Matrix& m);

/// Smallest eigenvalue of the Hermitian part of m (m assumed Hermitian up to noise).
double min_eigenvalue(const Matrix& m);

} // namespace fq
