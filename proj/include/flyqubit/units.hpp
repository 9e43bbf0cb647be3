#pragma once

#include <numbers>

namespace fq {

// Internal convention: time in ns, angular frequencies in rad/ns.
// Config files carry ordinary frequencies in MHz.
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline constexpr double mhz_to_angular(double nu_mhz)
{
    return two_pi * nu_mhz * 1e-3;
}

inline constexpr double angular_to_mhz(double omega)
{
    return omega / (two_pi * 1e-3);
}

} // namespace fq
