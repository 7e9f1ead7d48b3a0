#include "credfusion/combination.hpp"

#include <map>

#include "credfusion/errors.hpp"

namespace credfusion {

double conflict(const MassFunction& m1, const MassFunction& m2) {
  if (!m1.same_frame(m2)) throw FrameMismatch();
  double k = 0.0;
  for (const auto& [b, x] : m1.focal_elements()) {
    for (const auto& [c, y] : m2.focal_elements()) {
      if (!b.intersects(c)) k += x * y;
    }
  }
  return k;
}

MassFunction dcr_pair(const MassFunction& m1, const MassFunction& m2) {
  if (!m1.same_frame(m2)) throw FrameMismatch();
  std::map<Subset, double> joint;
  double k = 0.0;
  for (const auto& [b, x] : m1.focal_elements()) {
    for (const auto& [c, y] : m2.focal_elements()) {
      const Subset meet = b & c;
      if (meet.empty()) {
        k += x * y;
      } else {
        joint[meet] += x * y;
      }
    }
  }
  if (k >= 1.0 - kTotalConflictMargin) throw TotalConflict(k);
  const double norm = 1.0 - k;
  std::vector<MassEntry> out;
  out.reserve(joint.size());
  for (const auto& [s, v] : joint) out.emplace_back(s, v / norm);
  return detail::adopt_masses(m1.frame(), std::move(out));
}

MassFunction dcr_n(std::span<const MassFunction> ms) {
  if (ms.empty()) throw InvalidArgument("dcr_n needs at least one mass function");
  MassFunction acc = ms.front();
  for (const auto& m : ms.subspan(1)) acc = dcr_pair(acc, m);
  return acc;
}

MassFunction self_fuse(const MassFunction& m, std::size_t times) {
  if (times == 0) throw InvalidArgument("self_fuse needs times >= 1");
  MassFunction acc = m;
  for (std::size_t t = 1; t < times; ++t) acc = dcr_pair(acc, m);
  return acc;
}

}  // namespace credfusion
