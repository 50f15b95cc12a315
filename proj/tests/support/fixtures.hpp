// Fixture corpora and their annotation manifests.
#pragma once

#include <codepark/source.hpp>

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace codepark::testing {

std::filesystem::path fixture_root();
std::filesystem::path fixture_dir(const std::string& name);

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"lm", "mg", "shapes"};
  return names;
}

struct Location {
  std::string path;
  std::size_t line = 0;
  std::size_t column = 0;
  std::string str() const;
  friend bool operator==(const Location&, const Location&) = default;
};

struct ManifestSummary {
  std::size_t classes = 0, loc = 0, largest = 0;
};

struct ManifestLines {
  std::size_t code = 0, comment = 0, blank = 0;
};

struct ManifestField {
  std::string qualified;  // Outer.Class.name
  bool is_property = false;
  std::string type;
};

struct ManifestDef {
  Location at;
  std::string kind;  // type, method, field, variable
  std::string name;
};

struct Manifest {
  std::optional<ManifestSummary> summary;
  std::map<std::string, ManifestLines> lines;
  std::vector<std::pair<std::string, std::string>> classes;  // (qualified name, kind)
  std::vector<std::pair<std::string, std::string>> methods;  // (class, signature)
  std::vector<ManifestField> fields;
  std::vector<ManifestDef> defs;
  std::size_t def_count = 0;
  std::vector<std::pair<Location, Location>> refs;  // (reference, definition)
};

Manifest load_manifest(const std::string& name);

/// Byte offset of a 1-based (line, column) in a unit.
std::size_t offset_of(const SourceUnit& unit, std::size_t line, std::size_t column);

const SourceUnit& unit_at(const Codebase& codebase, const std::string& path);

std::string read_file(const std::filesystem::path& p);

}  // namespace codepark::testing
