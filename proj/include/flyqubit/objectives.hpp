#pragma once

#include <vector>

#include "flyqubit/photon_field.hpp"

namespace fq {

enum class ObjectiveKind { J1_ME, J1_QSDE, J2, J3 };
enum class FreeControls { DriveOnly, CouplingOnly, DriveAndCoupling };

/// One flying-qubit control task: which functional, over which grid, against
/// which target. psi_target defaults to |1> for the J1 preparation tasks.
struct ShapingProblem {
    EmitterModel model;
    TimeGrid grid;
    TargetShape target;
    ObjectiveKind objective = ObjectiveKind::J3;
    Complex c0 = 0.0;
    Complex c1 = 1.0;
    Vector psi_target;
    FreeControls free_controls = FreeControls::DriveOnly;
    double gamma_min = 0.0;
    double gamma_max = 0.0;
    /// Steps that count for J1 (M0 = T0/dt); defaults to the whole grid.
    int horizon_steps = 0;

    ShapingProblem(EmitterModel m, TimeGrid g);
    int horizon() const { return horizon_steps > 0 ? horizon_steps : grid.steps(); }
    void validate() const;
};

struct ShapingGradient {
    RealVector ux;
    RealVector uy;
    RealVector gamma;
    /// Gradient with respect to w = sqrt(gamma); finite at gamma = 0 and used
    /// when the coupling is a free optimization channel.
    RealVector gamma_sqrt_param;
};

struct ConditionalErrors {
    double vacuum_error = 0.0;  // |1 - xi0|^2, emitter starting in |0>
    double photon_error = 0.0;  // sum |xi1 - xi0_target|^2 dt, emitter in |1>
    double total = 0.0;
};

/// 1 - <psi_P| rho(T0) |psi_P> via the master equation (gamma entries are the
/// fixed residual coupling).
double j1_me_value(const ShapingProblem& problem, const ControlPulse& pulse);

/// Adjoint gradient of the discrete J1_ME objective. Exact per-step Frechet
/// derivatives of the Liouvillian exponentials, so it matches central finite
/// differences to solver precision.
void j1_me_gradient(const ShapingProblem& problem, const ControlPulse& pulse,
                    RealVector& grad_ux, RealVector& grad_uy);

/// 1 - |<psi_P| G_{M0,0} |0>|^2.
double j1_qsde_value(const ShapingProblem& problem, const ControlPulse& pulse);

/// First-order-in-dt gradient of J1_QSDE; the chain-rule envelope
/// -2 Re{z^* dz} is applied on top of the amplitude derivatives.
void j1_qsde_gradient(const ShapingProblem& problem, const ControlPulse& pulse,
                      RealVector& grad_ux, RealVector& grad_uy);

double j2_value(const ShapingProblem& problem, const ControlPulse& pulse);
double j3_value(const ShapingProblem& problem, const ControlPulse& pulse);

/// Gradient of J2 or J3 with respect to all three control channels,
/// first-order in dt for the step-propagator terms and exact for the
/// sqrt(gamma) prefactor. O(M dim^3) via one backward and one forward sweep.
ShapingGradient shaping_gradient(const ShapingProblem& problem, const ControlPulse& pulse);

/// Conditional state-transfer error budget; total equals j3_value exactly.
ConditionalErrors conditional_errors(const ShapingProblem& problem, const ControlPulse& pulse);

/// u = S_en F_LP v with endpoint-zero envelope and Gaussian low-pass filter,
/// followed by clamping to |u| <= bound. The pullback is the transpose of the
/// linear map with saturated components zeroed.
class ConstraintTransform {
public:
    ConstraintTransform(const TimeGrid& grid, double bound,
                        double ramp_fraction = 0.1, double filter_std_ns = 1.0);

    struct Applied {
        RealVector ux;
        RealVector uy;
        std::vector<bool> saturated_x;
        std::vector<bool> saturated_y;
    };

    Applied apply(const RealVector& vx, const RealVector& vy) const;

    /// Maps dJ/du for both channels to dJ/dv.
    void pullback(const Applied& applied, RealVector& grad_ux, RealVector& grad_uy) const;

    /// Forward linear map without clamping (for adjoint verification).
    RealVector forward_linear(const RealVector& v) const;
    RealVector pullback_linear(const RealVector& g) const;

    const RealVector& envelope() const { return envelope_; }
    const RealMatrix& filter() const { return filter_; }
    double bound() const { return bound_; }

private:
    RealVector envelope_;
    RealMatrix filter_;
    double bound_;
};

} // namespace fq
