#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace credfusion {

/// Largest supported frame. Divergences enumerate all 2^n - 1 nonempty subsets.
inline constexpr std::size_t kMaxFrameSize = 20;

/// A subset of the frame encoded as a bitmask; bit j set means event j is a member.
struct Subset {
  std::uint32_t bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t b) : bits(b) {}

  static constexpr Subset singleton(std::size_t event) { return Subset(std::uint32_t{1} << event); }

  constexpr bool empty() const { return bits == 0; }
  constexpr int cardinality() const { return std::popcount(bits); }
  constexpr bool contains(std::size_t event) const { return (bits >> event) & 1U; }
  constexpr bool is_subset_of(Subset other) const { return (bits & ~other.bits) == 0; }
  constexpr bool intersects(Subset other) const { return (bits & other.bits) != 0; }

  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits & b.bits); }
  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits | b.bits); }
  friend constexpr auto operator<=>(Subset a, Subset b) = default;
};

/// Ordered set of mutually exclusive events. Copies share the label storage.
class FrameOfDiscernment {
 public:
  /// Throws InvalidFrame for an empty list, duplicate labels, or more than kMaxFrameSize events.
  explicit FrameOfDiscernment(std::vector<std::string> labels);

  /// Frame with labels A1..An.
  static FrameOfDiscernment numbered(std::size_t n, std::string_view prefix = "A");

  std::size_t size() const { return labels_->size(); }
  const std::vector<std::string>& labels() const { return *labels_; }
  const std::string& label(std::size_t event) const { return (*labels_)[event]; }

  /// Index of a label; throws InvalidFrame when unknown.
  std::size_t index_of(std::string_view label) const;

  Subset full() const { return Subset(static_cast<std::uint32_t>((std::uint64_t{1} << size()) - 1)); }
  std::size_t nonempty_subset_count() const { return (std::size_t{1} << size()) - 1; }
  bool contains(Subset s) const { return s.is_subset_of(full()); }

  /// Parses comma-joined labels such as "A1,A3".
  Subset parse_subset(std::string_view text) const;
  /// Comma-joined labels in frame order.
  std::string format_subset(Subset s) const;

  friend bool operator==(const FrameOfDiscernment& a, const FrameOfDiscernment& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

}  // namespace credfusion
