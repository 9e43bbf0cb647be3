#include "doctest.h"

#include <random>

#include "flyqubit/photon_field.hpp"
#include "flyqubit/units.hpp"

using namespace fq;

namespace {

Matrix random_hermitian(int dim, std::mt19937_64& rng)
{
    std::normal_distribution<double> dist;
    Matrix x(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            x(i, j) = Complex(dist(rng), dist(rng));
        }
    }
    return 0.5 * (x + x.adjoint());
}

ControlPulse random_pulse(int m, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-0.1, 0.1);
    std::uniform_real_distribution<double> g(0.0, 0.06);
    ControlPulse p;
    p.ux = RealVector::Zero(m);
    p.uy = RealVector::Zero(m);
    p.gamma = RealVector::Zero(m);
    for (int k = 0; k < m; ++k) {
        p.ux(k) = u(rng);
        p.uy(k) = u(rng);
        p.gamma(k) = g(rng);
    }
    return p;
}

} // namespace

TEST_CASE("step propagator basics")
{
    CHECK((step_propagator(Matrix::Zero(3, 3), 0.7)
           - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-15);

    SUBCASE("diagonal decay is exact")
    {
        const double gamma = 0.04;
        Matrix h = Matrix::Zero(2, 2);
        h(1, 1) = Complex(0.0, -0.5 * gamma);
        const Matrix v = step_propagator(h, 2.5);
        CHECK(v(0, 0).real() == doctest::Approx(1.0));
        CHECK(v(1, 1).real() == doctest::Approx(std::exp(-0.5 * gamma * 2.5)).epsilon(1e-14));
    }

    SUBCASE("unitary inverse property for hermitian generators")
    {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 5; ++trial) {
            const Matrix h = random_hermitian(5, rng);
            const Matrix v = step_propagator(h, 0.13);
            const Matrix w = expm(Complex(0.0, 0.13) * h);
            CHECK((v * w - Matrix::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("propagator chain")
{
    const double gc = mhz_to_angular(5.0);
    EmitterModel model(5, mhz_to_angular(-200.0));

    SUBCASE("single step chain")
    {
        TimeGrid grid(1.0, 1);
        const PropagatorChain chain(model, ControlPulse::constant_coupling(1, gc), grid);
        CHECK(chain.steps() == 1);
        CHECK((chain.transition(0, 1) - chain.step(1)).cwiseAbs().maxCoeff() < 1e-15);
    }

    SUBCASE("pure decay survival amplitude")
    {
        TimeGrid grid(100.0, 200);
        const PropagatorChain chain(model, ControlPulse::constant_coupling(200, gc), grid);
        const Vector psi1 = basis_state(5, 1);
        const Complex amp = (psi1.adjoint() * (chain.forward(200) * psi1))(0);
        CHECK(amp.real() == doctest::Approx(std::exp(-0.5 * gc * 100.0)).epsilon(1e-12));
    }

    SUBCASE("composition and identity")
    {
        std::mt19937_64 rng(17);
        TimeGrid grid(10.0, 25);
        const ControlPulse pulse = random_pulse(25, rng);
        const PropagatorChain chain(model, pulse, grid);
        CHECK((chain.transition(7, 7) - Matrix::Identity(5, 5)).cwiseAbs().maxCoeff() == 0.0);
        const Matrix direct = chain.transition(3, 21);
        const Matrix split = chain.transition(12, 21) * chain.transition(3, 12);
        CHECK((direct - split).cwiseAbs().maxCoeff() < 1e-10);
        CHECK_THROWS_AS(chain.transition(5, 3), std::out_of_range);
    }

    SUBCASE("contraction on random states")
    {
        std::mt19937_64 rng(23);
        TimeGrid grid(20.0, 40);
        const PropagatorChain chain(model, random_pulse(40, rng), grid);
        std::normal_distribution<double> dist;
        for (int trial = 0; trial < 5; ++trial) {
            Vector psi(5);
            for (int i = 0; i < 5; ++i) {
                psi(i) = Complex(dist(rng), dist(rng));
            }
            psi.normalize();
            double prev = 1.0;
            for (int k = 0; k <= 40; ++k) {
                const double nrm = (chain.forward(k) * psi).norm();
                CHECK(nrm <= prev + 1e-10);
                prev = nrm;
            }
        }
    }

    SUBCASE("length mismatch rejected")
    {
        TimeGrid grid(10.0, 20);
        CHECK_THROWS_AS(PropagatorChain(model, ControlPulse::constant_coupling(19, gc), grid),
                        std::invalid_argument);
    }
}

TEST_CASE("master equation integration")
{
    EmitterModel model(5, mhz_to_angular(-200.0));
    const double g0 = mhz_to_angular(0.5);

    SUBCASE("excited-state decay matches the analytic solution")
    {
        TimeGrid grid(10.0, 200);
        Matrix rho0 = Matrix::Zero(5, 5);
        rho0(1, 1) = 1.0;
        const auto traj = evolve_density(model, ControlPulse::constant_coupling(200, g0), rho0, grid);
        const double p1 = traj.back()(1, 1).real();
        CHECK(p1 == doctest::Approx(std::exp(-g0 * 10.0)).epsilon(1e-10));
        CHECK(p1 == doctest::Approx(0.96908).epsilon(1e-4));
    }

    SUBCASE("ground state is constant")
    {
        TimeGrid grid(5.0, 50);
        Matrix rho0 = Matrix::Zero(5, 5);
        rho0(0, 0) = 1.0;
        const auto traj = evolve_density(model, ControlPulse::constant_coupling(50, g0), rho0, grid);
        CHECK((traj.back() - rho0).cwiseAbs().maxCoeff() < 1e-12);
    }

    SUBCASE("trace and positivity preserved under drive")
    {
        std::mt19937_64 rng(5);
        TimeGrid grid(10.0, 100);
        ControlPulse pulse = random_pulse(100, rng);
        pulse.gamma.setConstant(g0);
        Matrix rho0 = Matrix::Zero(5, 5);
        rho0(0, 0) = 1.0;
        const auto traj = evolve_density(model, pulse, rho0, grid);
        for (const Matrix& rho : traj) {
            CHECK(std::abs(rho.trace().real() - 1.0) < 1e-8);
            CHECK(min_eigenvalue(rho) > -1e-8);
        }
    }

    SUBCASE("no-jump state is a subnormalized component of the full state")
    {
        std::mt19937_64 rng(9);
        TimeGrid grid(10.0, 100);
        ControlPulse pulse = random_pulse(100, rng);
        pulse.gamma.setConstant(g0);
        Matrix rho0 = Matrix::Zero(5, 5);
        rho0(0, 0) = 1.0;
        const auto traj = evolve_density(model, pulse, rho0, grid);
        const PropagatorChain chain(model, pulse, grid);
        for (int k = 0; k <= 100; k += 20) {
            const Matrix nojump = chain.forward(k) * rho0 * chain.forward(k).adjoint();
            CHECK(min_eigenvalue(traj[static_cast<size_t>(k)] - nojump) > -1e-8);
        }
    }
}
