// Line counting with line-counter semantics: a line holding only comments is
// a comment line, a whitespace-only line is blank, anything else is code.
#pragma once

#include <codepark/lexer.hpp>
#include <codepark/parser.hpp>
#include <codepark/source.hpp>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace codepark {

enum class LineKind : unsigned char { Blank, Comment, Code };

struct LineCounts {
  std::size_t code = 0;
  std::size_t comment = 0;
  std::size_t blank = 0;

  std::size_t total() const noexcept { return code + comment + blank; }
  friend bool operator==(const LineCounts&, const LineCounts&) = default;
};

/// Kind of every physical line (index 0 is line 1). Empty files have none,
/// and a trailing newline does not add a line.
std::vector<LineKind> classify_lines(const SourceUnit& unit, std::span<const Token> tokens);

LineCounts count_lines(const SourceUnit& unit, std::span<const Token> tokens);
LineCounts count_lines(std::span<const LineKind> kinds);

struct CodebaseSummary {
  std::size_t num_classes = 0;
  std::size_t total_loc = 0;
  std::size_t largest_class_loc = 0;
  std::map<std::string, std::size_t> per_class_loc;  // class_id -> code lines in class span
};

/// `line_kinds` is indexed by FileId.
CodebaseSummary summarize(const Codebase& codebase, std::span<const ClassDecl> classes,
                          std::span<const std::vector<LineKind>> line_kinds);

/// Code lines of a class: lines intersecting any of its parts.
std::size_t class_loc(const Codebase& codebase, const ClassDecl& cls,
                      std::span<const std::vector<LineKind>> line_kinds);

}  // namespace codepark
