#include "credfusion/frame.hpp"

#include <algorithm>
#include <unordered_set>

#include "credfusion/errors.hpp"

namespace credfusion {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

FrameOfDiscernment::FrameOfDiscernment(std::vector<std::string> labels) {
  if (labels.empty()) throw InvalidFrame("frame must contain at least one event");
  if (labels.size() > kMaxFrameSize) {
    throw InvalidFrame("frame has " + std::to_string(labels.size()) + " events; at most " +
                       std::to_string(kMaxFrameSize) + " are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw InvalidFrame("event labels must be nonempty");
    if (l.find(',') != std::string::npos) throw InvalidFrame("event label '" + l + "' contains a comma");
    if (!seen.insert(l).second) throw InvalidFrame("duplicate event label '" + l + "'");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

FrameOfDiscernment FrameOfDiscernment::numbered(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) labels.push_back(std::string(prefix) + std::to_string(j));
  return FrameOfDiscernment(std::move(labels));
}

std::size_t FrameOfDiscernment::index_of(std::string_view label) const {
  const auto& ls = *labels_;
  const auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) throw InvalidFrame("unknown event label '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - ls.begin());
}

Subset FrameOfDiscernment::parse_subset(std::string_view text) const {
  Subset s;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (piece.empty()) throw InvalidFrame("empty label in subset '" + std::string(text) + "'");
    s = s | Subset::singleton(index_of(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return s;
}

std::string FrameOfDiscernment::format_subset(Subset s) const {
  std::string out;
  for (std::size_t j = 0; j < size(); ++j) {
    if (!s.contains(j)) continue;
    if (!out.empty()) out += ',';
    out += label(j);
  }
  return out;
}

}  // namespace credfusion
