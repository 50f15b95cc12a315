#include <codepark/metrics.hpp>

#include <algorithm>
#include <set>
#include <utility>

namespace codepark {

namespace {
bool is_blank_byte(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}
}  // namespace

std::vector<LineKind> classify_lines(const SourceUnit& unit, std::span<const Token> tokens) {
  const std::size_t lines = unit.line_index.physical_lines();
  std::vector<LineKind> kinds(lines, LineKind::Blank);
  const auto starts = unit.line_index.line_starts();
  std::size_t line = 0;  // 0-based, advanced monotonically with the byte offset
  for (const auto& tok : tokens) {
    if (tok.kind == TokenKind::Whitespace) continue;
    const LineKind mark = tok.kind == TokenKind::Comment ? LineKind::Comment : LineKind::Code;
    for (std::size_t off = tok.span.start; off < tok.span.end; ++off) {
      while (line + 1 < starts.size() && starts[line + 1] <= off) ++line;
      if (line >= lines || is_blank_byte(unit.text[off])) continue;
      kinds[line] = std::max(kinds[line], mark);
    }
  }
  return kinds;
}

LineCounts count_lines(std::span<const LineKind> kinds) {
  LineCounts c;
  for (auto k : kinds) {
    switch (k) {
      case LineKind::Code: ++c.code; break;
      case LineKind::Comment: ++c.comment; break;
      case LineKind::Blank: ++c.blank; break;
    }
  }
  return c;
}

LineCounts count_lines(const SourceUnit& unit, std::span<const Token> tokens) {
  return count_lines(classify_lines(unit, tokens));
}

std::size_t class_loc(const Codebase& codebase, const ClassDecl& cls,
                      std::span<const std::vector<LineKind>> line_kinds) {
  std::set<std::pair<FileId, std::size_t>> code_lines;
  for (const auto& part : cls.parts) {
    const auto& unit = codebase.unit(part.file_id);
    const auto& kinds = line_kinds[part.file_id];
    if (part.span.empty()) continue;
    std::size_t first = unit.line_index.line_of(part.span.start);
    std::size_t last = unit.line_index.line_of(part.span.end - 1);
    for (std::size_t l = first; l <= last && l <= kinds.size(); ++l) {
      if (kinds[l - 1] == LineKind::Code) code_lines.emplace(part.file_id, l);
    }
  }
  return code_lines.size();
}

CodebaseSummary summarize(const Codebase& codebase, std::span<const ClassDecl> classes,
                          std::span<const std::vector<LineKind>> line_kinds) {
  CodebaseSummary s;
  s.num_classes = classes.size();
  for (const auto& kinds : line_kinds) s.total_loc += count_lines(kinds).code;
  for (const auto& cls : classes) {
    std::size_t loc = class_loc(codebase, cls, line_kinds);
    s.per_class_loc[cls.class_id] = loc;
    s.largest_class_loc = std::max(s.largest_class_loc, loc);
  }
  return s;
}

}  // namespace codepark
