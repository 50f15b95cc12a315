#include <codepark/parser.hpp>

#include <codepark/hash.hpp>

#include "syntax.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace codepark {

std::string_view to_string(TypeKind kind) noexcept {
  switch (kind) {
    case TypeKind::Class: return "class";
    case TypeKind::Interface: return "interface";
    case TypeKind::Struct: return "struct";
    case TypeKind::Enum: return "enum";
  }
  return "class";
}

bool ClassDecl::has_modifier(std::string_view m) const {
  return std::binary_search(modifiers.begin(), modifiers.end(), m);
}

namespace {

using syntax::TokenView;

bool is_modifier_keyword(std::string_view w) {
  static const std::set<std::string_view> kMods = {
      "public", "private",  "protected", "internal", "static", "abstract", "virtual", "override",
      "sealed", "readonly", "const",     "extern",   "unsafe", "volatile", "new",     "async",
      "fixed",
  };
  return kMods.contains(w);
}

std::optional<TypeKind> type_keyword(std::string_view w) {
  if (w == "class") return TypeKind::Class;
  if (w == "interface") return TypeKind::Interface;
  if (w == "struct") return TypeKind::Struct;
  if (w == "enum") return TypeKind::Enum;
  return std::nullopt;
}

class Parser {
 public:
  Parser(const SourceUnit& unit, std::span<const Token> tokens)
      : unit_(unit), sig_(syntax::significant(tokens)), v_(sig_, unit.text) {
    out_.file_id = unit.file_id;
  }

  UnitParse run() {
    parse_declarations(/*braced=*/false);
    return std::move(out_);
  }

 private:
  // --- token helpers -------------------------------------------------------

  bool at_end() const { return i_ >= v_.size(); }
  std::size_t offset_at(std::size_t k) const {
    return k < v_.size() ? v_[k].span.start : unit_.text.size();
  }
  std::size_t end_of(std::size_t k) const { return v_[k].span.end; }
  Span token_span(std::size_t k) const { return v_[k].span; }

  void diagnose(std::size_t from, std::size_t to, std::string message) {
    Span span{offset_at(from), to > from && to - 1 < v_.size() ? end_of(to - 1) : offset_at(from)};
    out_.diagnostics.push_back({Severity::Warning, unit_.file_id, span, std::move(message)});
  }

  // Index one past the token closing the bracket opened at `k`; size() if unclosed.
  std::size_t skip_balanced(std::size_t k, std::string_view open, std::string_view close) const {
    int depth = 0;
    for (std::size_t j = k; j < v_.size(); ++j) {
      if (v_.is_sym(j, open)) ++depth;
      else if (v_.is_sym(j, close) && --depth == 0) return j + 1;
    }
    return v_.size();
  }

  // True when skip_balanced(open_at, ...) == end found the matching bracket.
  bool closes(std::size_t open_at, std::size_t end) const {
    if (end < v_.size()) return true;
    int depth = 0;
    for (std::size_t j = open_at; j < v_.size(); ++j) {
      if (v_.is_sym(j, v_.text(open_at))) ++depth;
      else if (v_.is_sym(j, "}") || v_.is_sym(j, ")") || v_.is_sym(j, "]")) {
        if (v_.text(j) == closing_of(v_.text(open_at))) --depth;
      }
    }
    return depth == 0;
  }
  static std::string_view closing_of(std::string_view open) {
    return open == "{" ? "}" : open == "(" ? ")" : "]";
  }

  std::size_t skip_group(std::size_t k) const {
    if (v_.is_sym(k, "{")) return skip_balanced(k, "{", "}");
    if (v_.is_sym(k, "(")) return skip_balanced(k, "(", ")");
    if (v_.is_sym(k, "[")) return skip_balanced(k, "[", "]");
    return k + 1;
  }

  // Advances to the first depth-0 token satisfying `stop`, skipping bracketed
  // groups. Never steps past an unmatched `}`.
  template <class Pred>
  std::size_t scan_until(std::size_t k, Pred stop) const {
    while (k < v_.size()) {
      if (stop(k)) return k;
      if (v_.is_sym(k, "}")) return k;
      k = skip_group(k);
    }
    return k;
  }

  // Error recovery: skip to and past the next `;`, or past one balanced `{}`
  // block, whichever comes first. Stops before an unmatched `}`.
  void recover(std::size_t from, std::string_view what) {
    std::size_t k = from;
    while (k < v_.size()) {
      if (v_.is_sym(k, ";")) {
        ++k;
        break;
      }
      if (v_.is_sym(k, "}")) break;
      if (v_.is_sym(k, "{")) {
        k = skip_balanced(k, "{", "}");
        break;
      }
      k = skip_group(k);
    }
    if (k == from && k < v_.size()) ++k;
    diagnose(from, k, std::string("skipped unparseable ") + std::string(what));
    i_ = k;
  }

  void skip_attributes() {
    while (v_.is_sym(i_, "[")) i_ = skip_balanced(i_, "[", "]");
  }

  std::string dotted_name(std::size_t& k) const {
    std::string name;
    if (v_.is_ident(k) && v_.is_sym(k + 1, "::")) k += 2;  // global::
    while (v_.is_ident(k)) {
      name += v_.text(k);
      ++k;
      if (v_.is_sym(k, ".") && v_.is_ident(k + 1)) {
        name += '.';
        ++k;
      } else {
        break;
      }
    }
    return name;
  }

  std::string current_namespace() const {
    std::string ns;
    for (const auto& part : ns_stack_) {
      if (!ns.empty()) ns += '.';
      ns += part;
    }
    return ns;
  }

  // --- namespace level -----------------------------------------------------

  void parse_declarations(bool braced) {
    while (!at_end()) {
      if (v_.is_sym(i_, "}")) {
        if (braced) return;
        diagnose(i_, i_ + 1, "unmatched '}'");
        ++i_;
        continue;
      }
      if (v_.is_sym(i_, ";")) {
        ++i_;
        continue;
      }
      if (v_.is_sym(i_, "[")) {
        skip_attributes();
        continue;
      }
      if (v_.is_keyword(i_, "using") && !v_.is_sym(i_ + 1, "(")) {
        parse_using();
        continue;
      }
      if (v_.is_keyword(i_, "namespace")) {
        parse_namespace();
        continue;
      }
      if (v_.is_keyword(i_, "extern") && v_.is_ident(i_ + 1) && v_.text(i_ + 1) == "alias") {
        recover_quiet();
        continue;
      }
      std::size_t start = i_;
      if (try_type_declaration(nullptr)) continue;
      i_ = start;
      if (skip_delegate()) continue;
      recover(start, "declaration");
    }
  }

  void recover_quiet() {
    i_ = scan_until(i_, [&](std::size_t k) { return v_.is_sym(k, ";"); });
    if (v_.is_sym(i_, ";")) ++i_;
  }

  void parse_using() {
    std::size_t k = i_ + 1;
    if (v_.is_keyword(k, "static")) ++k;
    if (v_.is_ident(k) && v_.is_sym(k + 1, "=")) {
      recover_quiet();  // alias directive
      return;
    }
    std::string name = dotted_name(k);
    if (!name.empty() && v_.is_sym(k, ";")) {
      out_.usings.push_back(std::move(name));
      i_ = k + 1;
      return;
    }
    recover(i_, "using directive");
  }

  void parse_namespace() {
    std::size_t start = i_;
    std::size_t k = i_ + 1;
    std::string name = dotted_name(k);
    if (name.empty()) {
      recover(start, "namespace declaration");
      return;
    }
    std::string full = current_namespace().empty() ? name : current_namespace() + "." + name;
    out_.namespaces.push_back(full);
    if (v_.is_sym(k, ";")) {  // file-scoped
      ns_stack_.push_back(name);
      i_ = k + 1;
      return;
    }
    if (!v_.is_sym(k, "{")) {
      recover(start, "namespace declaration");
      return;
    }
    i_ = k + 1;
    ns_stack_.push_back(name);
    parse_declarations(/*braced=*/true);
    ns_stack_.pop_back();
    if (v_.is_sym(i_, "}")) {
      ++i_;
    } else {
      diagnose(start, i_, "namespace '" + full + "' is not closed");
    }
  }

  bool skip_delegate() {
    std::size_t k = i_;
    while (v_.kind(k) == TokenKind::Keyword && is_modifier_keyword(v_.text(k))) ++k;
    if (!v_.is_keyword(k, "delegate")) return false;
    i_ = k;
    recover_quiet();
    return true;
  }

  // --- type declarations ---------------------------------------------------

  // Parses modifiers + class/interface/struct/enum at i_. Returns false
  // (leaving i_ unspecified) when the tokens are not a type declaration.
  bool try_type_declaration(const ClassDecl* outer) {
    skip_attributes();
    std::size_t start = i_;
    std::vector<std::string> modifiers;
    while (!at_end()) {
      auto t = v_.text(i_);
      if (v_.kind(i_) == TokenKind::Keyword && is_modifier_keyword(t)) {
        modifiers.emplace_back(t);
      } else if (v_.is_ident(i_) && t == "partial") {
        modifiers.emplace_back(t);
      } else {
        break;
      }
      ++i_;
    }
    if (v_.kind(i_) != TokenKind::Keyword) return false;
    auto kind = type_keyword(v_.text(i_));
    if (!kind) return false;
    ++i_;
    if (!v_.is_ident(i_)) {
      recover(start, "type declaration");
      return true;
    }

    ClassDecl decl;
    decl.kind = *kind;
    decl.name = std::string(v_.text(i_));
    decl.name_span = token_span(i_);
    decl.file_id = unit_.file_id;
    decl.namespace_name = current_namespace();
    if (outer) {
      decl.outer_qualified_name = outer->qualified_name;
      decl.qualified_name = outer->qualified_name + "." + decl.name;
    } else {
      decl.qualified_name =
          decl.namespace_name.empty() ? decl.name : decl.namespace_name + "." + decl.name;
    }
    std::sort(modifiers.begin(), modifiers.end());
    modifiers.erase(std::unique(modifiers.begin(), modifiers.end()), modifiers.end());
    decl.modifiers = std::move(modifiers);
    ++i_;

    if (v_.is_sym(i_, "<")) {
      auto after = syntax::skip_generic_args(v_, i_);
      i_ = after ? *after : i_ + 1;
    }
    if (v_.is_sym(i_, ":")) {
      ++i_;
      parse_base_list(decl);
    }
    // where-clauses and anything else up to the body
    i_ = scan_until(i_, [&](std::size_t k) { return v_.is_sym(k, "{") || v_.is_sym(k, ";"); });
    if (!v_.is_sym(i_, "{")) {
      recover(start, "type declaration");
      return true;
    }

    std::size_t slot = out_.classes.size();
    out_.classes.push_back({});
    std::size_t body_open = i_;
    ++i_;
    if (decl.kind == TypeKind::Enum) {
      parse_enum_body(decl);
    } else {
      parse_class_body(decl);
    }
    std::size_t end_offset;
    if (v_.is_sym(i_, "}")) {
      end_offset = end_of(i_);
      ++i_;
    } else {
      end_offset = unit_.text.size();
      diagnose(body_open, i_, "type '" + decl.name + "' is not closed");
    }
    if (v_.is_sym(i_, ";")) ++i_;
    decl.span = {offset_at(start), end_offset};
    decl.parts.push_back({decl.file_id, decl.span, decl.name_span});
    out_.classes[slot] = std::move(decl);
    return true;
  }

  void parse_base_list(ClassDecl& decl) {
    for (;;) {
      std::size_t k = i_;
      auto end = syntax::match_type(v_, k);
      if (!end) return;
      // Dotted identifier path with generic arguments stripped.
      std::string path;
      for (std::size_t j = k; j < *end; ++j) {
        if (v_.is_sym(j, "<")) {
          j = syntax::skip_generic_args(v_, j).value_or(*end) - 1;
          continue;
        }
        if (v_.is_ident(j) || v_.kind(j) == TokenKind::Keyword || v_.is_sym(j, ".")) {
          path += v_.text(j);
        }
      }
      decl.base_names.push_back(std::move(path));
      i_ = *end;
      if (!v_.is_sym(i_, ",")) return;
      ++i_;
    }
  }

  void parse_enum_body(ClassDecl& decl) {
    while (!at_end() && !v_.is_sym(i_, "}")) {
      skip_attributes();
      if (v_.is_sym(i_, ",")) {
        ++i_;
        continue;
      }
      if (!v_.is_ident(i_)) {
        recover(i_, "enum member");
        continue;
      }
      FieldDecl field;
      field.name = std::string(v_.text(i_));
      field.type_name = decl.name;
      field.file_id = unit_.file_id;
      field.name_span = token_span(i_);
      std::size_t last = i_;
      ++i_;
      if (v_.is_sym(i_, "=")) {
        std::size_t k = scan_until(i_ + 1, [&](std::size_t j) { return v_.is_sym(j, ","); });
        last = k - 1;
        i_ = k;
      }
      field.span = {field.name_span.start, end_of(last)};
      decl.fields.push_back(std::move(field));
    }
  }

  void parse_class_body(ClassDecl& decl) {
    while (!at_end() && !v_.is_sym(i_, "}")) {
      if (v_.is_sym(i_, ";")) {
        ++i_;
        continue;
      }
      std::size_t before = i_;
      parse_member(decl);
      if (i_ == before) recover(i_, "member");
    }
  }

  // --- members -------------------------------------------------------------

  void parse_member(ClassDecl& decl) {
    skip_attributes();
    std::size_t start = i_;

    // Nested type?
    {
      std::size_t save = i_;
      if (try_type_declaration(&decl)) return;
      i_ = save;
    }
    while (!at_end()) {
      auto t = v_.text(i_);
      bool mod = (v_.kind(i_) == TokenKind::Keyword && is_modifier_keyword(t)) ||
                 (v_.is_ident(i_) && t == "partial" && !v_.is_sym(i_ + 1, "("));
      if (!mod) break;
      ++i_;
    }
    if (v_.is_keyword(i_, "delegate")) {
      recover_quiet();
      return;
    }
    bool is_event = false;
    if (v_.is_keyword(i_, "event")) {
      is_event = true;
      ++i_;
    }

    // Destructor
    if (v_.is_sym(i_, "~") && v_.is_ident(i_ + 1) && v_.is_sym(i_ + 2, "(")) {
      std::size_t name_at = i_ + 1;
      std::string name = "~" + std::string(v_.text(name_at));
      finish_method(decl, start, name_at, i_ + 2, name, name);
      return;
    }
    // Constructor
    if (v_.is_ident(i_) && v_.text(i_) == decl.name && v_.is_sym(i_ + 1, "(")) {
      std::string name(v_.text(i_));
      finish_method(decl, start, i_, i_ + 1, name, name);
      return;
    }
    // Conversion operator
    if ((v_.is_keyword(i_, "implicit") || v_.is_keyword(i_, "explicit")) &&
        v_.is_keyword(i_ + 1, "operator")) {
      std::size_t op_at = i_ + 1;
      auto type_end = syntax::match_type(v_, i_ + 2);
      if (!type_end || !v_.is_sym(*type_end, "(")) {
        recover(start, "conversion operator");
        return;
      }
      std::string type = syntax::render_type(v_, i_ + 2, *type_end);
      std::string name = "operator " + type;
      std::string prefix = std::string(v_.text(i_)) + " operator " + type;
      finish_method(decl, start, op_at, *type_end, name, prefix);
      return;
    }

    std::size_t type_begin = i_;
    auto type_end = syntax::match_type(v_, i_);
    if (!type_end) {
      recover(start, "member");
      return;
    }
    std::string type = syntax::render_type(v_, type_begin, *type_end);
    i_ = *type_end;

    if (v_.is_keyword(i_, "operator")) {
      std::size_t op_at = i_;
      std::size_t k = i_ + 1;
      std::string op;
      while (k < v_.size() && !v_.is_sym(k, "(") && k < i_ + 4) op += v_.text(k++);
      if (op.empty() || !v_.is_sym(k, "(")) {
        recover(start, "operator");
        return;
      }
      finish_method(decl, start, op_at, k, "operator" + op, type + " operator" + op);
      return;
    }

    if (v_.is_keyword(i_, "this") && v_.is_sym(i_ + 1, "[")) {
      parse_indexer(decl, start, type);
      return;
    }

    if (!v_.is_ident(i_)) {
      recover(start, "member");
      return;
    }
    // Explicit interface implementation: IFoo.Bar / IFoo<T>.Bar
    std::size_t name_at = i_;
    for (;;) {
      std::size_t k = name_at + 1;
      if (v_.is_sym(k, "<")) {
        auto after = syntax::skip_generic_args(v_, k);
        if (after && v_.is_sym(*after, ".") && v_.is_ident(*after + 1)) {
          name_at = *after + 1;
          continue;
        }
      }
      if (v_.is_sym(k, ".") && v_.is_ident(k + 1)) {
        name_at = k + 1;
        continue;
      }
      break;
    }
    std::string name(v_.text(name_at));
    std::size_t after_name = name_at + 1;
    std::string generic;
    if (v_.is_sym(after_name, "<")) {
      if (auto after = syntax::skip_generic_args(v_, after_name);
          after && v_.is_sym(*after, "(")) {
        generic = syntax::render_type(v_, after_name, *after);
        after_name = *after;
      }
    }

    if (!is_event && v_.is_sym(after_name, "(")) {
      finish_method(decl, start, name_at, after_name, name, type + " " + name + generic);
      return;
    }
    if (v_.is_sym(after_name, "{") || v_.is_sym(after_name, "=>")) {
      parse_property(decl, start, name_at, after_name, type);
      return;
    }
    if (v_.is_sym(after_name, "=") || v_.is_sym(after_name, ";") ||
        v_.is_sym(after_name, ",")) {
      parse_fields(decl, start, name_at, type);
      return;
    }
    recover(start, "member");
  }

  // Parameter list at `open` (the '(' or '['), then optional constructor
  // initializer / where-clauses, then body.
  std::vector<Parameter> parse_params(std::size_t open, std::string_view close,
                                      std::string& rendered) {
    std::vector<Parameter> params;
    std::size_t end = v_.is_sym(open, "(") ? skip_balanced(open, "(", ")")
                                           : skip_balanced(open, "[", "]");
    std::size_t k = open + 1;
    std::size_t close_at = end - 1;
    if (close_at >= v_.size() || !v_.is_sym(close_at, close)) close_at = end;
    while (k < close_at) {
      // one parameter: [attrs] [mods] type name [= default]
      while (v_.is_sym(k, "[")) k = skip_balanced(k, "[", "]");
      std::size_t pbegin = k;
      while (v_.is_keyword(k, "ref") || v_.is_keyword(k, "out") || v_.is_keyword(k, "params") ||
             v_.is_keyword(k, "this") || v_.is_keyword(k, "in")) {
        ++k;
      }
      auto tend = syntax::match_type(v_, k);
      std::size_t next = k;
      if (tend && v_.is_name(*tend)) {
        Parameter p;
        p.type_name = syntax::render_type(v_, pbegin, *tend);
        p.name = std::string(v_.text(*tend));
        p.name_span = token_span(*tend);
        bool dup = std::any_of(params.begin(), params.end(),
                               [&](const Parameter& q) { return q.name == p.name; });
        if (dup) {
          diagnose(*tend, *tend + 1, "duplicate parameter name '" + p.name + "'");
        } else {
          params.push_back(std::move(p));
        }
        next = *tend + 1;
      } else if (k < close_at) {
        diagnose(k, k + 1, "unrecognized parameter");
      }
      // skip default value / garbage up to the next top-level comma
      while (next < close_at && !v_.is_sym(next, ",")) {
        if (v_.is_sym(next, "<")) {
          auto after = syntax::skip_generic_args(v_, next);
          next = after ? *after : next + 1;
        } else {
          next = skip_group(next);
        }
      }
      k = next + 1;
    }
    rendered.clear();
    for (const auto& p : params) {
      if (!rendered.empty()) rendered += ", ";
      rendered += p.type_name + " " + p.name;
    }
    return params;
  }

  // Parses from the end of a parameter list to the end of the member body.
  // Returns body span (if any) and sets i_ past the member.
  std::optional<Span> parse_body(std::size_t k, std::size_t& last_token) {
    // constructor initializer, where-clauses
    k = scan_until(k, [&](std::size_t j) {
      return v_.is_sym(j, "{") || v_.is_sym(j, ";") || v_.is_sym(j, "=>");
    });
    if (v_.is_sym(k, ";")) {
      last_token = k;
      i_ = k + 1;
      return std::nullopt;
    }
    if (v_.is_sym(k, "{")) {
      std::size_t end = skip_balanced(k, "{", "}");
      if (!closes(k, end)) {
        diagnose(k, end, "unterminated member body");
        last_token = v_.size() - 1;
        i_ = v_.size();
        return Span{offset_at(k), unit_.text.size()};
      }
      last_token = end - 1;
      i_ = end;
      return Span{offset_at(k), end_of(end - 1)};
    }
    if (v_.is_sym(k, "=>")) {
      std::size_t semi = scan_until(k + 1, [&](std::size_t j) { return v_.is_sym(j, ";"); });
      if (semi >= v_.size() || !v_.is_sym(semi, ";")) {
        last_token = semi > k ? semi - 1 : k;
        i_ = semi;
        return Span{offset_at(k), end_of(last_token)};
      }
      last_token = semi;
      i_ = semi + 1;
      return Span{offset_at(k), end_of(semi)};
    }
    last_token = k > 0 ? k - 1 : 0;
    i_ = k;
    return std::nullopt;
  }

  void finish_method(ClassDecl& decl, std::size_t start, std::size_t name_at, std::size_t open,
                     std::string name, std::string prefix) {
    MethodDecl m;
    m.name = std::move(name);
    m.file_id = unit_.file_id;
    m.name_span = token_span(name_at);
    std::string params_text;
    m.params = parse_params(open, ")", params_text);
    m.signature_text = prefix + "(" + params_text + ")";
    std::size_t after = skip_balanced(open, "(", ")");
    std::size_t last = after - 1;
    m.body_span = parse_body(after, last);
    m.span = {offset_at(start), end_of(std::min(last, v_.size() - 1))};
    decl.methods.push_back(std::move(m));
  }

  void parse_property(ClassDecl& decl, std::size_t start, std::size_t name_at, std::size_t k,
                      const std::string& type) {
    FieldDecl f;
    f.name = std::string(v_.text(name_at));
    f.type_name = type;
    f.file_id = unit_.file_id;
    f.name_span = token_span(name_at);
    f.is_property = true;
    std::size_t last = k;
    if (v_.is_sym(k, "{")) {
      std::size_t end = skip_balanced(k, "{", "}");
      last = std::min(end, v_.size()) - 1;
      f.body_span = Span{offset_at(k), end_of(last)};
      i_ = end;
      if (v_.is_sym(i_, "=")) {  // auto-property initializer
        std::size_t semi = scan_until(i_ + 1, [&](std::size_t j) { return v_.is_sym(j, ";"); });
        last = semi < v_.size() ? semi : v_.size() - 1;
        i_ = std::min(semi + 1, v_.size());
      }
    } else {
      std::size_t semi = scan_until(k + 1, [&](std::size_t j) { return v_.is_sym(j, ";"); });
      last = semi < v_.size() ? semi : v_.size() - 1;
      f.body_span = Span{offset_at(k), end_of(last)};
      i_ = std::min(semi + 1, v_.size());
    }
    f.span = {offset_at(start), end_of(last)};
    add_field(decl, std::move(f));
  }

  void parse_indexer(ClassDecl& decl, std::size_t start, const std::string& type) {
    std::size_t this_at = i_;
    std::string params_text;
    parse_params(i_ + 1, "]", params_text);
    std::size_t after = skip_balanced(i_ + 1, "[", "]");
    if (!v_.is_sym(after, "{") && !v_.is_sym(after, "=>")) {
      recover(start, "indexer");
      return;
    }
    parse_property(decl, start, this_at, after, type);
  }

  void parse_fields(ClassDecl& decl, std::size_t start, std::size_t name_at,
                    const std::string& type) {
    std::size_t decl_begin = start;
    std::size_t k = name_at;
    for (;;) {
      FieldDecl f;
      f.name = std::string(v_.text(k));
      f.type_name = type;
      f.file_id = unit_.file_id;
      f.name_span = token_span(k);
      std::size_t j = k + 1;
      if (v_.is_sym(j, "=")) {
        // A comma separates declarators only when followed by `name =|,|;`;
        // commas inside generic argument lists do not.
        j = scan_until(j + 1, [&](std::size_t t) {
          if (v_.is_sym(t, ";")) return true;
          return v_.is_sym(t, ",") && v_.is_ident(t + 1) &&
                 (v_.is_sym(t + 2, "=") || v_.is_sym(t + 2, ",") || v_.is_sym(t + 2, ";"));
        });
      }
      bool more = v_.is_sym(j, ",") && v_.is_ident(j + 1);
      std::size_t last = more ? j - 1 : std::min(j, v_.size() - 1);
      if (!more && !v_.is_sym(j, ";")) {
        diagnose(k, j, "field declaration missing ';'");
      }
      f.span = {offset_at(decl_begin), end_of(last)};
      add_field(decl, std::move(f));
      if (!more) {
        i_ = v_.is_sym(j, ";") ? j + 1 : j;
        return;
      }
      k = j + 1;
      decl_begin = k;
    }
  }

  void add_field(ClassDecl& decl, FieldDecl f) {
    bool dup = std::any_of(decl.fields.begin(), decl.fields.end(),
                           [&](const FieldDecl& g) { return g.name == f.name; });
    if (dup && f.name != "this") {
      out_.diagnostics.push_back({Severity::Warning, unit_.file_id, f.name_span,
                                  "duplicate member name '" + f.name + "' in " + decl.name});
    }
    decl.fields.push_back(std::move(f));
  }

  const SourceUnit& unit_;
  std::vector<Token> sig_;
  TokenView v_;
  std::size_t i_ = 0;
  std::vector<std::string> ns_stack_;
  UnitParse out_;
};

}  // namespace

UnitParse parse_unit(const SourceUnit& unit, std::span<const Token> tokens) {
  return Parser(unit, tokens).run();
}

ClassCollection collect_classes(const Codebase& codebase, std::span<const UnitParse> units) {
  ClassCollection result;
  std::vector<ClassDecl> all;
  for (const auto& u : units) {
    all.insert(all.end(), u.classes.begin(), u.classes.end());
    result.diagnostics.insert(result.diagnostics.end(), u.diagnostics.begin(),
                              u.diagnostics.end());
  }
  auto key = [&](const ClassDecl& c) {
    const auto& unit = codebase.unit(c.file_id);
    return std::tuple(std::string_view(unit.directory), std::string_view(unit.path), c.span.start);
  };
  std::stable_sort(all.begin(), all.end(),
                   [&](const ClassDecl& a, const ClassDecl& b) { return key(a) < key(b); });

  std::map<std::string, std::vector<std::size_t>> by_name;
  for (std::size_t k = 0; k < all.size(); ++k) by_name[all[k].qualified_name].push_back(k);

  std::vector<bool> absorbed(all.size(), false);
  for (auto& [name, idx] : by_name) {
    if (idx.size() < 2) continue;
    bool all_partial = std::all_of(idx.begin(), idx.end(),
                                   [&](std::size_t k) { return all[k].has_modifier("partial"); });
    if (all_partial) {
      ClassDecl& head = all[idx.front()];
      for (std::size_t n = 1; n < idx.size(); ++n) {
        ClassDecl& part = all[idx[n]];
        head.parts.insert(head.parts.end(), part.parts.begin(), part.parts.end());
        head.methods.insert(head.methods.end(), part.methods.begin(), part.methods.end());
        head.fields.insert(head.fields.end(), part.fields.begin(), part.fields.end());
        for (auto& m : part.modifiers) head.modifiers.push_back(m);
        for (auto& b : part.base_names) {
          if (std::find(head.base_names.begin(), head.base_names.end(), b) ==
              head.base_names.end()) {
            head.base_names.push_back(b);
          }
        }
        absorbed[idx[n]] = true;
      }
      std::sort(head.modifiers.begin(), head.modifiers.end());
      head.modifiers.erase(std::unique(head.modifiers.begin(), head.modifiers.end()),
                           head.modifiers.end());
    } else {
      for (std::size_t n = 1; n < idx.size(); ++n) {
        const ClassDecl& dup = all[idx[n]];
        result.diagnostics.push_back({Severity::Warning, dup.file_id, dup.name_span,
                                      "duplicate type '" + name + "' (first declared in " +
                                          codebase.unit(all[idx.front()].file_id).path + ")"});
      }
    }
  }

  std::set<std::string> used_ids;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (absorbed[k]) continue;
    ClassDecl c = std::move(all[k]);
    std::string seed = codebase.unit(c.file_id).path + "\n" + c.qualified_name;
    std::string id = fnv1a64_hex(seed);
    for (int n = 2; used_ids.contains(id); ++n) id = fnv1a64_hex(seed + "#" + std::to_string(n));
    used_ids.insert(id);
    c.class_id = std::move(id);
    result.classes.push_back(std::move(c));
  }
  return result;
}

}  // namespace codepark
