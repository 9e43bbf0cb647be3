#include "doctest.h"

#include <random>

#include "flyqubit/emitter.hpp"
#include "flyqubit/units.hpp"

using namespace fq;

TEST_CASE("lowering operator matrix elements")
{
    EmitterModel two(2);
    CHECK(two.lowering()(0, 1).real() == doctest::Approx(1.0));
    CHECK(std::abs(two.lowering()(1, 0)) == 0.0);

    EmitterModel three(3);
    CHECK(three.lowering()(1, 2).real() == doctest::Approx(std::sqrt(2.0)));
    CHECK(std::abs(three.lowering()(0, 2)) == 0.0);

    for (int dim : {2, 5, 9}) {
        EmitterModel m(dim);
        const Matrix n = m.number();
        for (int i = 0; i < dim; ++i) {
            CHECK(n(i, i).real() == doctest::Approx(static_cast<double>(i)));
        }
        CHECK(n.cwiseAbs().sum() == doctest::Approx(dim * (dim - 1) / 2.0));
    }

    CHECK_THROWS_AS(EmitterModel(1), std::invalid_argument);
}

TEST_CASE("effective hamiltonian structure")
{
    const double eta = mhz_to_angular(-200.0);

    SUBCASE("kerr term only")
    {
        EmitterModel m(3, eta);
        const Matrix h = m.effective_hamiltonian(0.0, 0.0, 0.0);
        CHECK(std::abs(h(0, 0)) == doctest::Approx(0.0));
        CHECK(std::abs(h(1, 1)) == doctest::Approx(0.0));
        CHECK(h(2, 2).real() == doctest::Approx(eta));
    }

    SUBCASE("drive term only")
    {
        EmitterModel m(2, 0.0);
        const Matrix h = m.effective_hamiltonian(0.1, 0.0, 0.0);
        CHECK(h(0, 1).real() == doctest::Approx(0.1));
        CHECK(h(1, 0).real() == doctest::Approx(0.1));
        CHECK(hermiticity_defect(h) < 1e-15);
    }

    SUBCASE("damping term")
    {
        EmitterModel m(2, 0.0);
        const Matrix h = m.effective_hamiltonian(0.0, 0.0, 0.01);
        CHECK(h(1, 1).imag() == doctest::Approx(-0.005));
        CHECK(std::abs(h(0, 0)) == doctest::Approx(0.0));
    }

    SUBCASE("anti-hermitian part is -(i gamma/2) n")
    {
        EmitterModel m(5, eta);
        const double gamma = 0.031;
        const Matrix h = m.effective_hamiltonian(0.2, -0.1, gamma);
        const Matrix anti = 0.5 * (h - h.adjoint());
        const Matrix expected = Complex(0.0, -0.5 * gamma) * m.number();
        CHECK((anti - expected).cwiseAbs().maxCoeff() < 1e-14);
    }

    CHECK_THROWS_AS(EmitterModel(5, eta).effective_hamiltonian(0.0, 0.0, -1e-3),
                    std::invalid_argument);
}

TEST_CASE("lindblad rhs")
{
    const double g0 = mhz_to_angular(0.5);
    EmitterModel m(5, mhz_to_angular(-200.0));

    SUBCASE("ground state is stationary")
    {
        Matrix rho = Matrix::Zero(5, 5);
        rho(0, 0) = 1.0;
        CHECK(lindblad_rhs(m, rho, 0.0, 0.0, g0).cwiseAbs().maxCoeff() < 1e-15);
    }

    SUBCASE("pure decay from |1>")
    {
        Matrix rho = Matrix::Zero(5, 5);
        rho(1, 1) = 1.0;
        const Matrix d = lindblad_rhs(m, rho, 0.0, 0.0, g0);
        CHECK(d(0, 0).real() == doctest::Approx(g0));
        CHECK(d(1, 1).real() == doctest::Approx(-g0));
        CHECK(std::abs(d.trace()) < 1e-15);
    }

    SUBCASE("trace-free and hermiticity-preserving on random states")
    {
        std::mt19937_64 rng(11);
        std::normal_distribution<double> dist;
        for (int trial = 0; trial < 10; ++trial) {
            Matrix x(5, 5);
            for (int i = 0; i < 5; ++i) {
                for (int j = 0; j < 5; ++j) {
                    x(i, j) = Complex(dist(rng), dist(rng));
                }
            }
            Matrix rho = x * x.adjoint();
            rho /= rho.trace();
            const Matrix d = lindblad_rhs(m, rho, 0.3, -0.2, g0);
            CHECK(std::abs(d.trace()) < 1e-12);
            CHECK(hermiticity_defect(d) < 1e-12);
        }
    }

    SUBCASE("dimension mismatch rejected")
    {
        CHECK_THROWS_AS(lindblad_rhs(m, Matrix::Zero(4, 4), 0.0, 0.0, g0),
                        std::invalid_argument);
    }
}

TEST_CASE("h_eff real symmetric for real drive without damping")
{
    EmitterModel m(5, mhz_to_angular(-200.0));
    const Matrix h = m.effective_hamiltonian(0.37, 0.0, 0.0);
    CHECK(h.imag().cwiseAbs().maxCoeff() < 1e-15);
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() < 1e-15);
}
