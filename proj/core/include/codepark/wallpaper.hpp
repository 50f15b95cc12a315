// Wallpapers: a room's four interior walls.
//
// Wall 0 lists the class's method signatures. Walls 1-3 carry the class's
// source lines, split into three contiguous segments, as syntax-colored runs.
// Identifier runs that resolve to a definition link to where that definition
// appears on some room's wall.
#pragma once

#include <codepark/lexer.hpp>
#include <codepark/parser.hpp>
#include <codepark/resolver.hpp>
#include <codepark/source.hpp>

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace codepark {

inline constexpr std::size_t kViewportLines = 40;
inline constexpr std::size_t kMaxColumns = 120;
inline constexpr std::size_t kTabWidth = 4;
inline constexpr std::string_view kEmptyPlaceholder = "« empty »";
inline constexpr std::string_view kNoMethodsPlaceholder = "« no methods »";
inline constexpr std::string_view kContinuationMarker = "↪";

enum class ColorRole { Keyword, Comment, String, Default, Background };

std::string_view to_string(ColorRole role) noexcept;
std::optional<ColorRole> color_role_from(std::string_view name) noexcept;

/// Dark editor palette, "#RRGGBB" per role.
struct Palette {
  std::string background = "#1E1E1E";
  std::string default_text = "#D4D4D4";
  std::string keyword = "#569CD6";
  std::string comment = "#6A9955";
  std::string string = "#CE9178";

  const std::string& color(ColorRole role) const noexcept;
};

ColorRole role_for(TokenKind kind) noexcept;

/// Where a definition is shown: room, wall, row on that wall, and the scroll
/// offset that brings the row into view.
struct NavigationTarget {
  std::string class_id;
  int wall_index = 1;
  std::size_t line = 0;  // 0-based row within the wall's lines
  std::size_t scroll_offset = 0;
  DefId def_id = 0;
  friend bool operator==(const NavigationTarget&, const NavigationTarget&) = default;
};

struct StyledRun {
  std::string text;
  ColorRole role = ColorRole::Default;
  std::optional<NavigationTarget> link;
  friend bool operator==(const StyledRun&, const StyledRun&) = default;
};

struct WallLine {
  std::optional<FileId> file_id;  // absent on the overview wall and placeholders
  std::size_t line = 0;           // 1-based source line when file_id is set
  std::vector<StyledRun> runs;
  friend bool operator==(const WallLine&, const WallLine&) = default;
};

/// Class-line ordinals (1-based, in class order). Empty when last < first.
struct LineRange {
  std::size_t first = 1;
  std::size_t last = 0;
  std::size_t size() const noexcept { return last >= first ? last - first + 1 : 0; }
  friend bool operator==(const LineRange&, const LineRange&) = default;
};

struct WallPage {
  int wall_index = 0;
  std::optional<LineRange> line_range;  // absent on the overview wall
  std::vector<WallLine> lines;
  std::size_t viewport_lines = kViewportLines;
  std::size_t max_columns = kMaxColumns;
  std::size_t scroll_max = 0;
  friend bool operator==(const WallPage&, const WallPage&) = default;
};

using WallSet = std::array<WallPage, 4>;

/// A source line belonging to a class.
struct ClassLine {
  FileId file_id = 0;
  std::size_t line = 0;
  friend auto operator<=>(const ClassLine&, const ClassLine&) = default;
};

/// Lines of every part of a class, in part order.
std::vector<ClassLine> class_lines(const Codebase& codebase, const ClassDecl& cls);

/// Segment sizes for walls 1-3: ceil(n/3), ceil((n - ceil(n/3))/2), rest.
std::array<std::size_t, 3> split_sizes(std::size_t n) noexcept;

std::size_t scroll_max_for(std::size_t line_count) noexcept;

/// Tabs become kTabWidth spaces.
std::string expand_tabs(std::string_view text);

/// Where each class's lines land on its walls; locates definitions.
class PaginationIndex {
 public:
  PaginationIndex(const Codebase& codebase, std::span<const ClassDecl> classes);

  /// Target for a definition shown in its owner's room.
  std::optional<NavigationTarget> target_for(const SymbolTable& table, DefId def) const;

  const std::vector<ClassLine>& lines_of(std::string_view class_id) const;

 private:
  struct Entry {
    std::vector<ClassLine> lines;
    std::array<std::size_t, 3> sizes{};
  };
  std::map<std::string, Entry, std::less<>> entries_;
};

using TargetLookup = std::function<std::optional<NavigationTarget>(DefId)>;

/// Runs for one source line. `refs` are the file's resolved references in
/// offset order; identifier tokens with a reference get a link when `target`
/// knows where the referenced definition is shown.
std::vector<StyledRun> render_runs(const SourceUnit& unit, std::span<const Token> tokens,
                                   std::size_t line, std::span<const ResolvedReference> refs,
                                   const TargetLookup& target);

/// Method-overview wall (wall 0).
WallPage method_overview(const ClassDecl& cls, const SymbolTable& table,
                         const PaginationIndex& pages);

/// The four walls of a class. `tokens` and `refs` are indexed by FileId.
WallSet paginate(const ClassDecl& cls, const Codebase& codebase,
                 std::span<const TokenList> tokens,
                 std::span<const std::vector<ResolvedReference>> refs, const SymbolTable& table,
                 const PaginationIndex& pages);

}  // namespace codepark
