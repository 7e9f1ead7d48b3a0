#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "credfusion/errors.hpp"
#include "credfusion/mass_function.hpp"

namespace credfusion {

/// Malformed or invalid evidence document.
class DocumentError : public Error {
 public:
  using Error::Error;
};

struct NamedEvidence {
  std::string name;
  MassFunction mass;
};

/// A frame, named BBAs over it, and optional tau / delta overrides.
///
/// JSON layout:
///   {"frame": ["A1", "A2", "A3"],
///    "evidence": [{"name": "m1", "masses": {"A1": 0.5, "A2,A3": 0.5}}],
///    "tau": 200, "delta": 1e-6}
struct EvidenceDocument {
  FrameOfDiscernment frame;
  std::vector<NamedEvidence> evidence;
  std::optional<double> tau;
  std::optional<double> delta;

  std::vector<MassFunction> masses() const;
  std::vector<std::string> names() const;
};

/// Names default to m1..mN.
EvidenceDocument make_document(std::span<const MassFunction> evidence, std::vector<std::string> names = {});

/// Throws DocumentError for bad syntax, unknown or repeated labels, duplicate names and masses
/// that do not form a valid BBA.
EvidenceDocument parse_document(std::string_view text);
EvidenceDocument read_document(const std::filesystem::path& path);

/// Masses are written with round-trip precision, so parse_document(to_json(doc)) reproduces doc.
std::string to_json(const EvidenceDocument& doc, int indent = 2);

}  // namespace credfusion
