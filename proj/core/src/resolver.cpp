#include <codepark/resolver.hpp>

#include "syntax.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>
#include <unordered_map>

namespace codepark {

std::string_view to_string(DefKind kind) noexcept {
  switch (kind) {
    case DefKind::Type: return "type";
    case DefKind::Method: return "method";
    case DefKind::Field: return "field";
    case DefKind::Parameter: return "parameter";
    case DefKind::Local: return "local";
  }
  return "type";
}

std::optional<DefId> SymbolTable::definition_at(FileId file, std::size_t offset) const {
  auto it = def_at_.find({file, offset});
  if (it == def_at_.end()) return std::nullopt;
  return it->second;
}

std::optional<DefId> SymbolTable::type_definition(std::string_view class_id) const {
  auto it = class_index_.find(class_id);
  if (it == class_index_.end()) return std::nullopt;
  return classes_[it->second].type_def;
}

namespace {

// Local declarations in body tokens [begin, end): `Type name` and `var name`
// statement patterns plus untyped lambda parameters. Returns name token indexes.
std::vector<std::size_t> find_locals(const syntax::TokenView& v, std::size_t begin,
                                     std::size_t end) {
  std::vector<std::size_t> names;
  auto starts_declaration = [&](std::size_t k) {
    if (k == 0) return false;
    std::size_t p = k - 1;
    return v.is_sym(p, "{") || v.is_sym(p, "}") || v.is_sym(p, ";") || v.is_sym(p, "(") ||
           v.is_sym(p, ",") || v.is_sym(p, ":") || v.is_keyword(p, "out");
  };
  auto ends_declarator = [&](std::size_t k) {
    return v.is_sym(k, "=") || v.is_sym(k, ";") || v.is_sym(k, ",") || v.is_sym(k, ")") ||
           v.is_keyword(k, "in");
  };
  // After a declarator name at `k`, collects further `, name` declarators.
  auto more_declarators = [&](std::size_t k) {
    std::size_t j = k + 1;
    for (;;) {
      if (v.is_sym(j, "=")) {
        int depth = 0;
        ++j;
        for (; j < end; ++j) {
          if (v.is_sym(j, "(") || v.is_sym(j, "[") || v.is_sym(j, "{")) ++depth;
          else if (v.is_sym(j, ")") || v.is_sym(j, "]") || v.is_sym(j, "}")) {
            if (depth == 0) return;
            --depth;
          } else if (depth == 0 && (v.is_sym(j, ",") || v.is_sym(j, ";"))) {
            break;
          }
        }
      }
      if (!(v.is_sym(j, ",") && v.is_ident(j + 1) &&
            (v.is_sym(j + 2, "=") || v.is_sym(j + 2, ",") || v.is_sym(j + 2, ";")))) {
        return;
      }
      names.push_back(j + 1);
      j += 2;
    }
  };

  for (std::size_t k = begin; k < end; ++k) {
    // x => ...
    if (v.is_ident(k) && v.is_sym(k + 1, "=>") && !(k > 0 && v.is_sym(k - 1, "."))) {
      names.push_back(k);
      continue;
    }
    // (a, b) => ...
    if (v.is_sym(k, "(")) {
      std::size_t j = k + 1;
      bool idents = v.is_ident(j);
      while (idents && v.is_sym(j + 1, ",") && v.is_ident(j + 2)) j += 2;
      if (idents && v.is_sym(j + 1, ")") && v.is_sym(j + 2, "=>")) {
        for (std::size_t n = k + 1; n <= j; n += 2) names.push_back(n);
        k = j + 2;
        continue;
      }
    }
    if (!starts_declaration(k)) continue;
    auto type_end = syntax::match_type(v, k);
    if (!type_end || *type_end >= end || !v.is_name(*type_end)) continue;
    if (!ends_declarator(*type_end + 1)) continue;
    names.push_back(*type_end);
    more_declarators(*type_end);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

}  // namespace

class SymbolTableBuilder {
 public:
  SymbolTableBuilder(const Codebase& codebase, std::span<const ClassDecl> classes,
                     std::span<const UnitParse> units, std::span<const TokenList> tokens)
      : codebase_(codebase), classes_(classes), units_(units), tokens_(tokens) {}

  SymbolTable build() {
    t_.codebase_ = &codebase_;
    t_.files_.resize(codebase_.units.size());
    std::set<std::string> namespaces;
    for (std::size_t f = 0; f < t_.files_.size(); ++f) {
      if (f < tokens_.size()) t_.files_[f].significant = syntax::significant(tokens_[f]);
      if (f < units_.size()) {
        t_.files_[f].usings = units_[f].usings;
        for (const auto& ns : units_[f].namespaces) {
          for (std::size_t dot = ns.find('.'); dot != std::string::npos; dot = ns.find('.', dot + 1)) {
            namespaces.insert(ns.substr(0, dot));
          }
          namespaces.insert(ns);
        }
      }
    }
    t_.namespaces_.assign(namespaces.begin(), namespaces.end());

    t_.classes_.resize(classes_.size());
    for (std::size_t ci = 0; ci < classes_.size(); ++ci) add_class(ci);
    for (std::size_t ci = 0; ci < classes_.size(); ++ci) link_class(ci);
    for (std::size_t ci = 0; ci < classes_.size(); ++ci) add_scopes(ci);
    for (auto& file : t_.files_) {
      std::sort(file.class_parts.begin(), file.class_parts.end());
      std::sort(file.scopes.begin(), file.scopes.end(), [&](ScopeId a, ScopeId b) {
        return t_.scopes_[a].span < t_.scopes_[b].span;
      });
    }
    return std::move(t_);
  }

 private:
  DefId add_def(DefKind kind, std::string name, Span name_span, FileId file,
                const std::string& owner, std::optional<ScopeId> scope = std::nullopt) {
    auto id = static_cast<DefId>(t_.defs_.size());
    auto [it, inserted] = t_.def_at_.try_emplace({file, name_span.start}, id);
    if (!inserted) {
      t_.diagnostics_.push_back({Severity::Warning, file, name_span,
                                 "definition '" + name + "' shares its name token with another"});
    }
    t_.defs_.push_back({id, kind, std::move(name), name_span, file, owner, scope});
    return id;
  }

  void add_class(std::size_t ci) {
    const ClassDecl& c = classes_[ci];
    auto& info = t_.classes_[ci];
    info.decl = &c;
    t_.class_index_.emplace(c.class_id, ci);
    info.type_def = add_def(DefKind::Type, c.name, c.name_span, c.file_id, c.class_id);
    t_.by_qualified_name_[c.qualified_name].push_back(info.type_def);
    for (const auto& part : c.parts) t_.files_.at(part.file_id).class_parts.push_back({part.span, ci});
    for (const auto& f : c.fields) {
      info.fields.push_back(add_def(DefKind::Field, f.name, f.name_span, f.file_id, c.class_id));
    }
    for (const auto& m : c.methods) {
      info.methods.push_back(add_def(DefKind::Method, m.name, m.name_span, m.file_id, c.class_id));
    }
    by_name_[c.name].push_back(ci);
  }

  std::tuple<std::string_view, std::size_t> order_key(std::size_t ci) const {
    const auto& c = classes_[ci];
    return {codebase_.unit(c.file_id).path, c.name_span.start};
  }

  void link_class(std::size_t ci) {
    const ClassDecl& c = classes_[ci];
    auto& info = t_.classes_[ci];
    if (!c.outer_qualified_name.empty()) {
      for (std::size_t k : by_name_[last_segment(c.outer_qualified_name)]) {
        if (classes_[k].qualified_name == c.outer_qualified_name && k != ci) {
          info.outer = k;
          break;
        }
      }
    }
    for (const auto& base : c.base_names) {
      std::optional<std::size_t> best;
      for (std::size_t k : by_name_[last_segment(base)]) {
        if (k == ci || !visible_from(k, ci, base)) continue;
        if (!best || order_key(k) < order_key(*best)) best = k;
      }
      if (best) info.bases.push_back(*best);
    }
  }

  static std::string last_segment(std::string_view path) {
    auto dot = path.rfind('.');
    return std::string(dot == std::string_view::npos ? path : path.substr(dot + 1));
  }

  // Whether class `k` is reachable as `path` from inside class `from`.
  bool visible_from(std::size_t k, std::size_t from, std::string_view path) const {
    const ClassDecl& target = classes_[k];
    const ClassDecl& ctx = classes_[from];
    if (path.find('.') != std::string_view::npos) {
      auto qn = std::string_view(target.qualified_name);
      return qn == path || (qn.size() > path.size() && qn.ends_with(path) &&
                            qn[qn.size() - path.size() - 1] == '.');
    }
    if (!target.outer_qualified_name.empty()) {
      // nested types are visible from their outer chain
      for (std::string_view outer = ctx.qualified_name;;) {
        if (target.outer_qualified_name == outer) return true;
        auto dot = outer.rfind('.');
        if (dot == std::string_view::npos) return false;
        outer = outer.substr(0, dot);
      }
    }
    std::string_view ns = ctx.namespace_name;
    for (;;) {
      if (target.namespace_name == ns) return true;
      auto dot = ns.rfind('.');
      if (ns.empty()) break;
      ns = dot == std::string_view::npos ? std::string_view{} : ns.substr(0, dot);
    }
    for (const auto& u : t_.files_[ctx.file_id].usings) {
      if (target.namespace_name == u) return true;
    }
    return false;
  }

  void add_scopes(std::size_t ci) {
    const ClassDecl& c = classes_[ci];
    const auto& info = t_.classes_[ci];
    for (std::size_t n = 0; n < c.methods.size(); ++n) {
      const auto& m = c.methods[n];
      Scope& s = new_scope(c, info.methods[n], m.file_id, m.span);
      ScopeId sid = s.scope_id;
      for (const auto& p : m.params) {
        DefId d = add_def(DefKind::Parameter, p.name, p.name_span, m.file_id, c.class_id, sid);
        t_.scopes_[sid].parameters.push_back(d);
      }
      if (m.body_span) add_locals(c, sid, m.file_id, *m.body_span);
    }
    for (std::size_t n = 0; n < c.fields.size(); ++n) {
      const auto& f = c.fields[n];
      if (!f.body_span) continue;
      Scope& s = new_scope(c, info.fields[n], f.file_id, f.span);
      add_locals(c, s.scope_id, f.file_id, *f.body_span);
    }
  }

  Scope& new_scope(const ClassDecl& c, DefId member, FileId file, Span span) {
    auto id = static_cast<ScopeId>(t_.scopes_.size());
    t_.scopes_.push_back({id, c.class_id, member, file, span, {}, {}});
    t_.files_[file].scopes.push_back(id);
    return t_.scopes_.back();
  }

  void add_locals(const ClassDecl& c, ScopeId sid, FileId file, Span body) {
    const auto& sig = t_.files_[file].significant;
    syntax::TokenView v(sig, codebase_.unit(file).text);
    auto lo = std::lower_bound(sig.begin(), sig.end(), body.start,
                               [](const Token& t, std::size_t off) { return t.span.start < off; });
    auto hi = std::lower_bound(sig.begin(), sig.end(), body.end,
                               [](const Token& t, std::size_t off) { return t.span.start < off; });
    auto begin = static_cast<std::size_t>(lo - sig.begin());
    auto end = static_cast<std::size_t>(hi - sig.begin());
    for (std::size_t k : find_locals(v, begin, end)) {
      DefId d = add_def(DefKind::Local, std::string(v.text(k)), sig[k].span, file, c.class_id, sid);
      t_.scopes_[sid].locals.push_back(d);
    }
  }

  const Codebase& codebase_;
  std::span<const ClassDecl> classes_;
  std::span<const UnitParse> units_;
  std::span<const TokenList> tokens_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_name_;
  SymbolTable t_;
};

SymbolTable build_symbol_table(const Codebase& codebase, std::span<const ClassDecl> classes,
                               std::span<const UnitParse> units,
                               std::span<const TokenList> tokens) {
  return SymbolTableBuilder(codebase, classes, units, tokens).build();
}

class ResolverImpl {
 public:
  ResolverImpl(const SymbolTable& table, FileId file)
      : t_(table), file_(file), info_(table.files_.at(file)),
        v_(info_.significant, table.codebase().unit(file).text) {
    for (std::size_t ci = 0; ci < t_.classes_.size(); ++ci) {
      by_name_[t_.classes_[ci].decl->name].push_back(ci);
    }
  }

  std::optional<std::size_t> token_at(std::size_t offset) const {
    const auto& sig = info_.significant;
    auto it = std::upper_bound(sig.begin(), sig.end(), offset,
                               [](std::size_t off, const Token& t) { return off < t.span.start; });
    if (it == sig.begin()) return std::nullopt;
    --it;
    if (!it->span.contains(offset)) return std::nullopt;
    return static_cast<std::size_t>(it - sig.begin());
  }

  std::size_t token_count() const { return info_.significant.size(); }
  Span span_of(std::size_t k) const { return info_.significant[k].span; }

  std::optional<DefId> resolve(std::size_t k) {
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    auto result = compute(k);
    memo_[k] = result;
    return result;
  }

 private:
  using Key = std::tuple<std::string_view, std::size_t>;

  Key def_key(DefId d) const {
    const auto& def = t_.defs_[d];
    return {t_.codebase().unit(def.file_id).path, def.name_span.start};
  }

  // First-declared candidate among `ids` named `name`.
  std::optional<DefId> earliest(const std::vector<DefId>& ids, std::string_view name) const {
    std::optional<DefId> best;
    for (DefId d : ids) {
      if (t_.defs_[d].name != name) continue;
      if (!best || def_key(d) < def_key(*best)) best = d;
    }
    return best;
  }

  std::optional<std::size_t> class_at(std::size_t offset) const {
    std::optional<std::size_t> best;
    Span best_span;
    for (const auto& [span, ci] : info_.class_parts) {
      if (span.start > offset) break;
      if (span.contains(offset) && (!best || best_span.contains(span))) {
        best = ci;
        best_span = span;
      }
    }
    return best;
  }

  const Scope* scope_at(std::size_t offset) const {
    const Scope* best = nullptr;
    for (ScopeId id : info_.scopes) {
      const Scope& s = t_.scopes_[id];
      if (s.span.start > offset) break;
      if (s.span.contains(offset) && (!best || best->span.contains(s.span))) best = &s;
    }
    return best;
  }

  // Class, then its bases (breadth-first), then each outer class and its bases.
  std::vector<std::size_t> member_chain(std::size_t ci, bool include_outer) const {
    std::vector<std::size_t> order;
    std::set<std::size_t> seen;
    std::optional<std::size_t> level = ci;
    while (level) {
      std::deque<std::size_t> queue{*level};
      while (!queue.empty()) {
        std::size_t c = queue.front();
        queue.pop_front();
        if (!seen.insert(c).second) continue;
        order.push_back(c);
        for (std::size_t b : t_.classes_[c].bases) queue.push_back(b);
      }
      if (!include_outer) break;
      level = t_.classes_[*level].outer;
    }
    return order;
  }

  std::optional<DefId> lookup_members(const std::vector<std::size_t>& chain,
                                      std::string_view name) const {
    for (std::size_t c : chain) {
      if (auto d = earliest(t_.classes_[c].fields, name)) return d;
    }
    for (std::size_t c : chain) {
      // a constructor shares its class's name; plain names mean the type
      if (name == t_.classes_[c].decl->name) continue;
      if (auto d = earliest(t_.classes_[c].methods, name)) return d;
    }
    return std::nullopt;
  }

  bool type_visible(std::size_t target, std::size_t from) const {
    const ClassDecl& tc = *t_.classes_[target].decl;
    const ClassDecl& ctx = *t_.classes_[from].decl;
    if (!tc.outer_qualified_name.empty()) {
      // nested types are in scope inside their outer class, its bases and nested classes
      for (std::size_t c : member_chain(from, true)) {
        if (t_.classes_[c].decl->qualified_name == tc.outer_qualified_name) return true;
      }
      return false;
    }
    std::string_view ns = ctx.namespace_name;
    for (;;) {
      if (tc.namespace_name == ns) return true;
      if (ns.empty()) break;
      auto dot = ns.rfind('.');
      ns = dot == std::string_view::npos ? std::string_view{} : ns.substr(0, dot);
    }
    const auto& usings = t_.files_[ctx.file_id].usings;
    // usings of the file holding the reference
    for (const auto& u : info_.usings) {
      if (tc.namespace_name == u) return true;
    }
    return std::find(usings.begin(), usings.end(), tc.namespace_name) != usings.end();
  }

  std::optional<DefId> lookup_type(std::string_view name, std::size_t from) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    std::optional<DefId> best;
    for (std::size_t ci : it->second) {
      if (!type_visible(ci, from)) continue;
      DefId d = t_.classes_[ci].type_def;
      if (!best || def_key(d) < def_key(*best)) best = d;
    }
    return best;
  }

  std::optional<std::size_t> class_of_type_def(DefId d) const {
    auto it = t_.class_index_.find(t_.defs_[d].owner_class);
    if (it == t_.class_index_.end()) return std::nullopt;
    return it->second;
  }

  // `prefix.name` where the token before the dot is at `p`.
  std::optional<DefId> member_access(std::size_t p, std::string_view name, std::size_t ci) {
    if (v_.is_keyword(p, "this")) return lookup_members(member_chain(ci, false), name);
    if (v_.is_keyword(p, "base")) {
      std::vector<std::size_t> chain = member_chain(ci, false);
      if (!chain.empty()) chain.erase(chain.begin());
      return lookup_members(chain, name);
    }
    if (!v_.is_ident(p)) return std::nullopt;
    if (auto pre = resolve(p)) {
      if (t_.defs_[*pre].kind != DefKind::Type) return std::nullopt;
      auto owner = class_of_type_def(*pre);
      if (!owner) return std::nullopt;
      if (auto d = lookup_members(member_chain(*owner, false), name)) return d;
      // nested type
      const auto& owner_qn = t_.classes_[*owner].decl->qualified_name;
      auto it = by_name_.find(std::string(name));
      if (it != by_name_.end()) {
        for (std::size_t c : it->second) {
          if (t_.classes_[c].decl->outer_qualified_name == owner_qn) return t_.classes_[c].type_def;
        }
      }
      return std::nullopt;
    }
    // Namespace-qualified type: A.B.Name
    std::string path(v_.text(p));
    for (std::size_t q = p; q >= 2 && v_.is_sym(q - 1, ".") && v_.is_ident(q - 2); q -= 2) {
      path = std::string(v_.text(q - 2)) + "." + path;
    }
    if (!std::binary_search(t_.namespaces_.begin(), t_.namespaces_.end(), path)) {
      return std::nullopt;
    }
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    std::optional<DefId> best;
    for (std::size_t c : it->second) {
      const ClassDecl& cd = *t_.classes_[c].decl;
      if (cd.namespace_name != path || !cd.outer_qualified_name.empty()) continue;
      DefId d = t_.classes_[c].type_def;
      if (!best || def_key(d) < def_key(*best)) best = d;
    }
    return best;
  }

  std::optional<DefId> compute(std::size_t k) {
    if (k >= info_.significant.size() || !v_.is_name(k)) return std::nullopt;
    const Span span = span_of(k);
    std::string_view name = v_.text(k);
    if (auto d = t_.definition_at(file_, span.start)) {
      const std::string& def_name = t_.defs_[*d].name;
      // destructors are named "~T" but their name token is "T"
      if (def_name == name || (def_name.size() == name.size() + 1 && def_name[0] == '~' &&
                               std::string_view(def_name).substr(1) == name)) {
        return d;
      }
      return std::nullopt;
    }
    if (!v_.is_ident(k)) return std::nullopt;
    auto ci = class_at(span.start);
    if (!ci) return std::nullopt;

    if (k >= 2 && v_.is_sym(k - 1, ".")) return member_access(k - 2, name, *ci);

    if (const Scope* scope = scope_at(span.start)) {
      std::optional<DefId> best;
      for (DefId d : scope->locals) {
        const auto& def = t_.defs_[d];
        if (def.name == name && def.name_span.start < span.start &&
            (!best || def_key(d) < def_key(*best))) {
          best = d;
        }
      }
      if (best) return best;
      if (auto d = earliest(scope->parameters, name)) return d;
    }
    if (auto d = lookup_members(member_chain(*ci, true), name)) return d;
    return lookup_type(name, *ci);
  }

  const SymbolTable& t_;
  FileId file_;
  const SymbolTable::FileInfo& info_;
  syntax::TokenView v_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_name_;
  std::unordered_map<std::size_t, std::optional<DefId>> memo_;
};

std::optional<ResolvedReference> resolve(const SymbolTable& table, FileId file,
                                         std::size_t offset) {
  ResolverImpl r(table, file);
  auto k = r.token_at(offset);
  if (!k) return std::nullopt;
  auto d = r.resolve(*k);
  if (!d) return std::nullopt;
  return ResolvedReference{file, r.span_of(*k), *d};
}

std::vector<ResolvedReference> resolve_file(const SymbolTable& table, FileId file) {
  ResolverImpl r(table, file);
  std::vector<ResolvedReference> out;
  for (std::size_t k = 0; k < r.token_count(); ++k) {
    if (auto d = r.resolve(k)) out.push_back({file, r.span_of(k), *d});
  }
  return out;
}

}  // namespace codepark
