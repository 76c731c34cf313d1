#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "evconflict/core.hpp"
#include "evconflict/measures.hpp"

namespace evconflict {

struct NamedBpa {
  std::string name;
  MassFunction bpa;
};

/// JSON document holding one frame and a list of named BPAs:
///
///   {"frame": ["A1", "A2"],
///    "bpas": [{"name": "m1", "masses": [{"set": ["A1"], "mass": 0.5}, ...]}]}
///
/// Unknown fields are rejected. All failures throw Error with a message that
/// starts with the offending field path (or line/column for syntax errors).
struct BpaDocument {
  Frame frame;
  std::vector<NamedBpa> bpas;

  /// Throws Error(UnknownLabel) naming the missing BPA.
  const MassFunction& find(std::string_view name) const;
};

BpaDocument parse_document(std::string_view text);
BpaDocument load_document(const std::filesystem::path& path);
std::string dump_document(const BpaDocument& doc);

std::string report_to_json(const ConflictReport& report, std::string_view first,
                           std::string_view second);

/// Writes through a sibling temporary file so a failed write leaves nothing
/// behind at `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace evconflict
