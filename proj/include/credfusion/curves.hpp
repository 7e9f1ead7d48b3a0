#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "credfusion/divergence.hpp"

namespace credfusion {

struct CurvePoint {
  int t = 0;
  double alpha = 0.0;
  double value = 0.0;
};

/// PBAGD of cases::nested_set_pair over t = 1..10 for every alpha in the grid, t-major order.
/// Alphas must lie in [0.05, 0.95].
std::vector<CurvePoint> curve_nested_sets(std::span<const double> alphas, PbOptions options = {});

/// Default alpha grid: 0.05, 0.10, ..., 0.95.
std::vector<double> default_alpha_grid();

/// PBAGD of cases::shifting_focus_pair over t = 1..10 (alpha column left at 0).
std::vector<CurvePoint> curve_shifting_focus(PbOptions options = {});

/// Writes "t<d>alpha<d>value" followed by one row per point.
void write_curve(std::ostream& os, std::span<const CurvePoint> points, char delimiter = ',');

}  // namespace credfusion
