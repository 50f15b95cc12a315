#include <codepark/wallpaper.hpp>

#include <algorithm>
#include <set>

namespace codepark {

std::string_view to_string(ColorRole role) noexcept {
  switch (role) {
    case ColorRole::Keyword: return "keyword";
    case ColorRole::Comment: return "comment";
    case ColorRole::String: return "string";
    case ColorRole::Default: return "default";
    case ColorRole::Background: return "background";
  }
  return "default";
}

std::optional<ColorRole> color_role_from(std::string_view name) noexcept {
  for (auto r : {ColorRole::Keyword, ColorRole::Comment, ColorRole::String, ColorRole::Default,
                 ColorRole::Background}) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

const std::string& Palette::color(ColorRole role) const noexcept {
  switch (role) {
    case ColorRole::Keyword: return keyword;
    case ColorRole::Comment: return comment;
    case ColorRole::String: return string;
    case ColorRole::Background: return background;
    case ColorRole::Default: break;
  }
  return default_text;
}

ColorRole role_for(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::Keyword: return ColorRole::Keyword;
    case TokenKind::Comment: return ColorRole::Comment;
    case TokenKind::StringLiteral:
    case TokenKind::CharLiteral: return ColorRole::String;
    default: return ColorRole::Default;
  }
}

std::vector<ClassLine> class_lines(const Codebase& codebase, const ClassDecl& cls) {
  std::vector<ClassLine> out;
  std::set<ClassLine> seen;
  for (const auto& part : cls.parts) {
    const auto& idx = codebase.unit(part.file_id).line_index;
    std::size_t first = idx.line_of(part.span.start);
    std::size_t last = part.span.empty() ? first : idx.line_of(part.span.end - 1);
    for (std::size_t l = first; l <= last; ++l) {
      ClassLine cl{part.file_id, l};
      if (seen.insert(cl).second) out.push_back(cl);
    }
  }
  return out;
}

std::array<std::size_t, 3> split_sizes(std::size_t n) noexcept {
  std::size_t a = (n + 2) / 3;
  std::size_t b = (n - a + 1) / 2;
  return {a, b, n - a - b};
}

std::size_t scroll_max_for(std::size_t line_count) noexcept {
  return line_count > kViewportLines ? line_count - kViewportLines : 0;
}

std::string expand_tabs(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '\t') {
      out.append(kTabWidth, ' ');
    } else {
      out += c;
    }
  }
  return out;
}

PaginationIndex::PaginationIndex(const Codebase& codebase, std::span<const ClassDecl> classes) {
  for (const auto& cls : classes) {
    Entry e;
    e.lines = class_lines(codebase, cls);
    e.sizes = split_sizes(e.lines.size());
    entries_.emplace(cls.class_id, std::move(e));
  }
}

const std::vector<ClassLine>& PaginationIndex::lines_of(std::string_view class_id) const {
  auto it = entries_.find(class_id);
  if (it == entries_.end()) throw RangeError("unknown class id " + std::string(class_id));
  return it->second.lines;
}

std::optional<NavigationTarget> PaginationIndex::target_for(const SymbolTable& table,
                                                            DefId def) const {
  const auto& d = table.definition(def);
  auto it = entries_.find(d.owner_class);
  if (it == entries_.end()) return std::nullopt;
  const Entry& e = it->second;
  ClassLine where{d.file_id, table.codebase().unit(d.file_id).line_index.line_of(d.name_span.start)};
  auto pos = std::find(e.lines.begin(), e.lines.end(), where);
  if (pos == e.lines.end()) return std::nullopt;
  auto ordinal = static_cast<std::size_t>(pos - e.lines.begin());

  NavigationTarget t;
  t.class_id = d.owner_class;
  t.def_id = def;
  std::size_t begin = 0;
  for (int w = 0; w < 3; ++w) {
    if (ordinal < begin + e.sizes[w]) {
      t.wall_index = w + 1;
      t.line = ordinal - begin;
      t.scroll_offset = std::min(t.line, scroll_max_for(e.sizes[w]));
      return t;
    }
    begin += e.sizes[w];
  }
  return std::nullopt;
}

std::vector<StyledRun> render_runs(const SourceUnit& unit, std::span<const Token> tokens,
                                   std::size_t line, std::span<const ResolvedReference> refs,
                                   const TargetLookup& target) {
  const std::size_t begin = unit.line_index.line_start(line);
  const std::size_t end = unit.line_index.line_content_end(line, unit.text);
  std::vector<StyledRun> runs;
  auto it = std::upper_bound(tokens.begin(), tokens.end(), begin,
                             [](std::size_t off, const Token& t) { return off < t.span.end; });
  for (; it != tokens.end() && it->span.start < end; ++it) {
    std::size_t from = std::max(begin, it->span.start);
    std::size_t to = std::min(end, it->span.end);
    if (from >= to) continue;
    StyledRun run{expand_tabs(std::string_view(unit.text).substr(from, to - from)),
                  role_for(it->kind), std::nullopt};
    if (it->kind == TokenKind::Identifier) {
      auto ref = std::lower_bound(
          refs.begin(), refs.end(), it->span.start,
          [](const ResolvedReference& r, std::size_t off) { return r.ref_span.start < off; });
      if (ref != refs.end() && ref->ref_span.start == it->span.start) run.link = target(ref->target);
    }
    if (!runs.empty() && !run.link && !runs.back().link && runs.back().role == run.role) {
      runs.back().text += run.text;
    } else {
      runs.push_back(std::move(run));
    }
  }
  return runs;
}

WallPage method_overview(const ClassDecl& cls, const SymbolTable& table,
                         const PaginationIndex& pages) {
  WallPage page;
  page.wall_index = 0;
  if (cls.methods.empty()) {
    page.lines.push_back(
        {std::nullopt, 0, {{std::string(kNoMethodsPlaceholder), ColorRole::Default, std::nullopt}}});
    return page;
  }
  page.lines.push_back({std::nullopt, 0,
                        {{std::string(to_string(cls.kind)), ColorRole::Keyword, std::nullopt},
                         {" " + cls.name, ColorRole::Default, std::nullopt}}});
  for (const auto& m : cls.methods) {
    StyledRun run{m.signature_text, ColorRole::Default, std::nullopt};
    if (auto def = table.definition_at(m.file_id, m.name_span.start)) {
      run.link = pages.target_for(table, *def);
    }
    page.lines.push_back({std::nullopt, 0, {std::move(run)}});
  }
  page.scroll_max = scroll_max_for(page.lines.size());
  return page;
}

WallSet paginate(const ClassDecl& cls, const Codebase& codebase,
                 std::span<const TokenList> tokens,
                 std::span<const std::vector<ResolvedReference>> refs, const SymbolTable& table,
                 const PaginationIndex& pages) {
  WallSet walls;
  walls[0] = method_overview(cls, table, pages);
  const auto& lines = pages.lines_of(cls.class_id);
  const auto sizes = split_sizes(lines.size());
  TargetLookup target = [&](DefId d) { return pages.target_for(table, d); };

  std::size_t begin = 0;
  for (int w = 1; w <= 3; ++w) {
    WallPage& page = walls[w];
    page.wall_index = w;
    std::size_t size = sizes[w - 1];
    page.line_range = LineRange{begin + 1, begin + size};
    if (lines.empty()) {
      page.lines.push_back(
          {std::nullopt, 0, {{std::string(kEmptyPlaceholder), ColorRole::Default, std::nullopt}}});
    }
    for (std::size_t k = begin; k < begin + size; ++k) {
      const ClassLine& cl = lines[k];
      const auto& unit = codebase.unit(cl.file_id);
      page.lines.push_back(
          {cl.file_id, cl.line, render_runs(unit, tokens[cl.file_id], cl.line, refs[cl.file_id], target)});
    }
    page.scroll_max = scroll_max_for(page.lines.size());
    begin += size;
  }
  return walls;
}

}  // namespace codepark
