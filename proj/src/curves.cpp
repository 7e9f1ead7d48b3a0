#include "credfusion/curves.hpp"

#include <iomanip>
#include <ostream>

#include "credfusion/cases.hpp"

namespace credfusion {

std::vector<CurvePoint> curve_nested_sets(std::span<const double> alphas, PbOptions options) {
  for (const double a : alphas) {
    if (!(a >= 0.05 - 1e-12 && a <= 0.95 + 1e-12)) throw InvalidArgument("alpha must lie in [0.05, 0.95]");
  }
  std::vector<CurvePoint> out;
  out.reserve(alphas.size() * 10);
  for (int t = 1; t <= 10; ++t) {
    for (const double a : alphas) {
      const auto [m1, m2] = cases::nested_set_pair(a, t);
      out.push_back({t, a, pbagd(m1, m2, options)});
    }
  }
  return out;
}

std::vector<double> default_alpha_grid() {
  std::vector<double> grid;
  for (int k = 1; k <= 19; ++k) grid.push_back(0.05 * k);
  // 0.05 * 19 is not exactly 0.95; the equal-evidence point must be hit exactly.
  grid.back() = 0.95;
  return grid;
}

std::vector<CurvePoint> curve_shifting_focus(PbOptions options) {
  std::vector<CurvePoint> out;
  for (int t = 1; t <= 10; ++t) {
    const auto [m1, m2] = cases::shifting_focus_pair(t);
    out.push_back({t, 0.0, pbagd(m1, m2, options)});
  }
  return out;
}

void write_curve(std::ostream& os, std::span<const CurvePoint> points, char delimiter) {
  os << "t" << delimiter << "alpha" << delimiter << "value\n";
  const auto flags = os.flags();
  const auto precision = os.precision();
  for (const auto& p : points) {
    os << p.t << delimiter << std::setprecision(4) << std::fixed << p.alpha << delimiter
       << std::setprecision(10) << p.value << '\n';
  }
  os.flags(flags);
  os.precision(precision);
}

}  // namespace credfusion
