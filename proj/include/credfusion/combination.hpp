#pragma once

#include <span>

#include "credfusion/mass_function.hpp"

namespace credfusion {

/// Conflict at or above 1 - kTotalConflictMargin is treated as total conflict.
inline constexpr double kTotalConflictMargin = 1e-12;

/// K = sum of m1(B) m2(C) over disjoint focal pairs.
double conflict(const MassFunction& m1, const MassFunction& m2);

/// Dempster's rule for two BBAs. Throws FrameMismatch or TotalConflict.
MassFunction dcr_pair(const MassFunction& m1, const MassFunction& m2);

/// Left fold of dcr_pair over a nonempty list.
MassFunction dcr_n(std::span<const MassFunction> ms);

/// Combines `times` copies of m, i.e. times - 1 applications of the rule; times = 1 returns m.
MassFunction self_fuse(const MassFunction& m, std::size_t times);

}  // namespace credfusion
