#pragma once

#include "flyqubit/grid.hpp"

namespace fq {

/// Gaussian pi-pulse on the in-phase channel, centered at t0_ns/2 with the
/// given width, amplitude calibrated so the two-level rotation angle
/// 2 sum u_x dt equals pi on the grid. gamma is left at zero.
ControlPulse gaussian_pi_pulse(double t0_ns, double sigma_ns, const TimeGrid& grid);

/// First-order DRAG correction u_y = -u_x'/eta (central differences on the
/// grid, one-sided at the ends); u_x is left unchanged.
ControlPulse drag_pulse(const ControlPulse& gaussian, double eta, const TimeGrid& grid);

/// Elementwise clamp of a coupling profile into [gamma_min, gamma_max].
RealVector cutoff_coupling(const RealVector& ideal_gamma, double gamma_min, double gamma_max);

} // namespace fq
