#pragma once

#include <cmath>
#include <numbers>

namespace thmc::constants {

// 2018 CODATA exact values.
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double planck_h = 6.62607015e-34;            // J s
inline constexpr double pi = std::numbers::pi;

inline constexpr double flux_quantum = planck_h / (2.0 * elementary_charge);  // Wb
inline constexpr double reduced_flux_quantum = flux_quantum / (2.0 * pi);     // Wb

// Energies are stored as E/h in GHz throughout; times are in ns, so a phase
// accumulated over time t is 2*pi*E*t.
inline constexpr double ghz_to_hz = 1.0e9;

inline double joules_to_ghz(double e) { return e / planck_h / ghz_to_hz; }
inline double ghz_to_joules(double f) { return f * planck_h * ghz_to_hz; }

}  // namespace thmc::constants
