#include "flyqubit/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace fq {

namespace {

bool is_diagonal(const Matrix& a)
{
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i != j && a(i, j) != Complex(0.0, 0.0)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

Matrix expm(const Matrix& a)
{
    if (is_diagonal(a)) {
        Matrix r = Matrix::Zero(a.rows(), a.cols());
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            r(i, i) = std::exp(a(i, i));
        }
        return r;
    }
    return a.exp();
}

void expm_with_frechet(const Matrix& a, const Matrix& e, Matrix& exp_a, Matrix& frechet)
{
    const Eigen::Index n = a.rows();
    Matrix block = Matrix::Zero(2 * n, 2 * n);
    block.topLeftCorner(n, n) = a;
    block.bottomRightCorner(n, n) = a;
    block.topRightCorner(n, n) = e;
    const Matrix x = block.exp();
    exp_a = x.topLeftCorner(n, n);
    frechet = x.topRightCorner(n, n);
}

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return r;
}

double hermiticity_defect(const Matrix& m)
{
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Matrix& m)
{
    const Matrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

} // namespace fq
