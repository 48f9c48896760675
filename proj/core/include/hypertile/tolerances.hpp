#pragma once

#include <numbers>

namespace hypertile {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Named tolerances shared by every module.
inline constexpr double kEpsPoint = 1e-12;
inline constexpr double kEpsAngle = 1e-9;
inline constexpr double kEpsArea = 1e-9;

// Isometry chains are re-orthonormalized after this many compositions.
inline constexpr int kRenormalizeEvery = 16;

}  // namespace hypertile
