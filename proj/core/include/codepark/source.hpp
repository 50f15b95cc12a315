// Source text model: spans, line indexes, files and codebases.
//
// Everything here is immutable after construction. A SourceUnit owns its
// bytes; spans and string_views handed out by it stay valid for the unit's
// lifetime.
#pragma once

#include <codepark/error.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace codepark {

/// Index of a file inside its Codebase (position in the path-sorted list).
using FileId = std::uint32_t;

/// Half-open byte range [start, end) within one file.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  constexpr std::size_t size() const noexcept { return end - start; }
  constexpr bool empty() const noexcept { return start == end; }
  constexpr bool contains(std::size_t offset) const noexcept {
    return offset >= start && offset < end;
  }
  constexpr bool contains(const Span& other) const noexcept {
    return other.start >= start && other.end <= end;
  }
  constexpr bool intersects(const Span& other) const noexcept {
    return start < other.end && other.start < end;
  }
  friend constexpr auto operator<=>(const Span&, const Span&) = default;
};

/// 1-based line/column pair. Columns count bytes, not code points.
struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
  friend constexpr auto operator<=>(const Position&, const Position&) = default;
};

/// Byte offsets of every line start. Line 1 starts at offset 0.
///
/// A file ending in a newline records the start of the final empty line, so
/// cursor math can address the end of file; `physical_lines()` excludes that
/// phantom line for metrics.
class LineIndex {
 public:
  LineIndex() = default;
  LineIndex(std::vector<std::size_t> line_starts, std::size_t text_size);

  std::span<const std::size_t> line_starts() const noexcept { return starts_; }
  std::size_t line_count() const noexcept { return starts_.size(); }
  std::size_t text_size() const noexcept { return size_; }

  /// Lines a line counter would report: 0 for an empty file, and no extra
  /// line after a trailing newline.
  std::size_t physical_lines() const noexcept;

  /// Byte offset of the first byte of `line` (1-based).
  std::size_t line_start(std::size_t line) const;
  /// Offset one past the last content byte of `line`, excluding "\n"/"\r\n".
  std::size_t line_content_end(std::size_t line, std::string_view text) const;

  /// Throws RangeError when offset > text size.
  Position position_of(std::size_t offset) const;
  std::size_t line_of(std::size_t offset) const { return position_of(offset).line; }

 private:
  std::vector<std::size_t> starts_{0};
  std::size_t size_ = 0;
};

LineIndex build_line_index(std::string_view text);

/// Free-function form of LineIndex::position_of.
inline Position position_of(std::size_t offset, const LineIndex& index) {
  return index.position_of(offset);
}

/// One source file. `path` and `directory` are project-relative with '/'
/// separators; the root directory is "".
struct SourceUnit {
  FileId file_id = 0;
  std::string path;
  std::string directory;
  std::string text;
  LineIndex line_index;

  std::string_view slice(const Span& span) const {
    return std::string_view(text).substr(span.start, span.size());
  }
  /// Line text without its terminator.
  std::string_view line_text(std::size_t line) const;
};

/// Validates UTF-8 and builds the line index. Throws DecodeError naming the
/// file when `text` is not valid UTF-8.
SourceUnit make_unit(std::string path, std::string text, FileId file_id = 0);

/// Parent directory of a project-relative path ("" for top-level files).
std::string parent_directory(std::string_view path);

/// Offset of the first invalid UTF-8 byte, or npos when valid.
std::size_t find_invalid_utf8(std::string_view text) noexcept;

struct Codebase {
  std::filesystem::path root;
  std::vector<SourceUnit> units;  // sorted by path, byte-wise ascending

  const SourceUnit& unit(FileId id) const { return units.at(id); }
};

/// Builds a codebase from in-memory (path, text) pairs. Sorts by path and
/// assigns file ids in that order. Throws on duplicate paths.
Codebase make_codebase(std::filesystem::path root,
                       std::vector<std::pair<std::string, std::string>> files);

/// Recursively collects `*.cs` files under `root`, skipping hidden
/// directories and `bin/`, `obj/`.
Codebase load_codebase(const std::filesystem::path& root);

}  // namespace codepark
