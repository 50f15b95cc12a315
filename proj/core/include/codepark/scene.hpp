// The scene document: layout, wallpapers, metrics and navigation in one
// canonical JSON file, plus the pipeline that builds it from source.
#pragma once

#include <codepark/diagnostics.hpp>
#include <codepark/layout.hpp>
#include <codepark/lexer.hpp>
#include <codepark/metrics.hpp>
#include <codepark/parser.hpp>
#include <codepark/resolver.hpp>
#include <codepark/source.hpp>
#include <codepark/wallpaper.hpp>

#include <json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace codepark {

inline constexpr int kSceneVersion = 1;

struct SceneMethod {
  std::string name;
  std::string signature;
  std::optional<NavigationTarget> target;
  friend bool operator==(const SceneMethod&, const SceneMethod&) = default;
};

struct SceneClass {
  std::string name;
  std::string qualified_name;
  std::string kind;
  std::string directory;
  std::string path;  // file of the first declaration
  std::vector<SceneMethod> methods;
  friend bool operator==(const SceneClass&, const SceneClass&) = default;
};

struct Scene {
  int version = kSceneVersion;
  std::string generated_from;      // digest of every (path, bytes) pair
  std::vector<std::string> files;  // indexed by FileId
  CodebaseSummary summary;
  ParkLayout layout;
  std::map<std::string, WallSet> walls;
  std::map<std::string, SceneClass> classes;
  Palette palette;
};

/// Every stage's output for one codebase. Not movable: the symbol table
/// points into `codebase` and `classes`.
struct Analysis {
  Codebase codebase;
  std::vector<TokenList> tokens;
  std::vector<UnitParse> units;
  std::vector<ClassDecl> classes;
  std::vector<std::vector<LineKind>> line_kinds;
  SymbolTable table;
  CodebaseSummary summary;
  Diagnostics diagnostics;

  Analysis() = default;
  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;
};

std::unique_ptr<Analysis> analyze(Codebase codebase);

/// Throws ConsistencyError when the assembled scene breaks referential
/// integrity, and LayoutValidationError when `arrangement` is rejected.
Scene build_scene(const Analysis& analysis, const Arrangement* arrangement = nullptr);

/// Every room has four wall pages indexed 0..3, every class has a room, and
/// every link names an existing room. Throws ConsistencyError otherwise.
void check_scene(const Scene& scene);

/// Digest of a codebase's paths and contents.
std::string codebase_digest(const Codebase& codebase);

nlohmann::json to_json(const Scene& scene);
Scene scene_from_json(const nlohmann::json& j);

/// Canonical form: sorted keys, no whitespace, integral numbers without a
/// fraction, UTF-8.
std::string canonical_dump(const nlohmann::json& j);

std::string serialize(const Scene& scene);
/// Throws Error on malformed input or an unsupported version.
Scene deserialize(std::string_view bytes);

nlohmann::json to_json(const WallPage& page);
nlohmann::json methods_json(const SceneClass& cls);

/// `{"version":1,"positions":{"<class_id>":{"x":..,"z":..}},"saved_at":..}`
nlohmann::json to_json(const Arrangement& arrangement);
/// Throws Error when the document is not an arrangement.
Arrangement arrangement_from_json(const nlohmann::json& j);

}  // namespace codepark
