#pragma once

// Central numeric tolerances. Identities are checked tighter than
// inequalities, which get slack for accumulated rounding.
namespace embedlb::tol {

inline constexpr double kExact = 1e-12;      // measure normalization, triangle checks
inline constexpr double kIdentity = 1e-10;   // Parseval, transform round trips
inline constexpr double kSpectral = 1e-9;    // cross-route spectral residuals
inline constexpr double kInequality = 1e-8;  // inequality slack
inline constexpr double kSoundness = 1e-9;   // lower bound vs exact LP comparisons

}  // namespace embedlb::tol
