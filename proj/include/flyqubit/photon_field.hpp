#pragma once

#include <vector>

#include "flyqubit/propagation.hpp"

namespace fq {

enum class ShapeKind { ExpDecay, ExpRise, Sech };

/// Target single-photon wavepacket. alpha is the width parameter in rad/ns;
/// t_delay shifts the onset (ExpDecay) or center (Sech, default T/2).
struct TargetShape {
    ShapeKind kind = ShapeKind::ExpDecay;
    double alpha = 0.0;
    double t_delay = 0.0;

    /// Samples the shape at t_1..t_M and renormalizes on the grid so that
    /// sum |xi0(t_k)|^2 dt = 1.
    RealVector sample(const TimeGrid& grid) const;

    /// Exact Eq.-14 coupling for this shape, evaluated from the closed-form
    /// tail integral: alpha for ExpDecay (0 before the onset),
    /// alpha e^{a(t-T)} / (1 - e^{a(t-T)}) for ExpRise (divergent endpoint is
    /// capped at 1/dt), (alpha/2)(1 + tanh) for Sech.
    RealVector ideal_coupling(const TimeGrid& grid) const;
};

/// Flying-qubit state extracted from a chain: vacuum amplitude, sampled
/// single-photon component at t_1..t_M, and the multi-photon weight proxy.
struct FlyingQubitState {
    Complex xi0;
    Vector xi1;
    double dt = 0.0;

    double single_photon_norm() const;                  // sum |xi1|^2 dt
    double multiphoton_weight() const;                  // 1 - |xi0|^2 - above
    /// Checks |xi0|^2 + sum |xi1|^2 dt <= 1 + tol.
    bool norm_inequality_ok(double tol = 1e-6) const;
};

/// xi0 = <0| G_{M,0} |psi0>.
Complex vacuum_amplitude(const PropagatorChain& chain, const Vector& psi0);

/// xi1(t_n) = sqrt(gamma(t_n)) <0| G_{M,n} a G_{n,0} |psi0>, n = 1..M.
Vector single_photon_component(const PropagatorChain& chain, const EmitterModel& model,
                               const ControlPulse& pulse, const Vector& psi0);

FlyingQubitState flying_qubit_state(const PropagatorChain& chain, const EmitterModel& model,
                                    const ControlPulse& pulse, const Vector& psi0);

/// Emission law for u = 0, psi0 = |1>:
/// xi(t_n) = sqrt(gamma(t_n)) exp(-1/2 sum_{k<=n} gamma(t_k) dt).
RealVector analytic_decay_shape(const RealVector& gamma, const TimeGrid& grid);

/// Discrete Eq.-14 coupling from sampled |xi0|^2:
/// gamma(t_k) = |xi0(t_k)|^2 / sum_{j>=k} |xi0(t_j)|^2 dt, with gamma = 0 once
/// the tail sum drops below 1e-12.
RealVector ideal_coupling(const RealVector& shape_samples, const TimeGrid& grid);

/// 1 - |G_{k,0} psi0|^2 at each t_k (non-decreasing).
RealVector photon_leakage_trace(const PropagatorChain& chain, const Vector& psi0);

/// Population above level |1> per sample of a density-matrix trajectory.
RealVector level_leakage_trace(const std::vector<Matrix>& trajectory);

} // namespace fq
