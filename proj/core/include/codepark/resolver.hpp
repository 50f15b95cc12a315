// Symbol table and go-to-definition resolution.
//
// Definitions come from the structural parse (types, members, parameters)
// plus local declarations pattern-matched over method bodies. Resolution is
// purely lexical: innermost scope wins, and ties inside one tier go to the
// candidate that appears first by (file path, offset).
#pragma once

#include <codepark/diagnostics.hpp>
#include <codepark/lexer.hpp>
#include <codepark/parser.hpp>
#include <codepark/source.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace codepark {

using DefId = std::uint32_t;
using ScopeId = std::uint32_t;

enum class DefKind { Type, Method, Field, Parameter, Local };

std::string_view to_string(DefKind kind) noexcept;

struct DefinitionSite {
  DefId def_id = 0;
  DefKind kind = DefKind::Type;
  std::string name;
  Span name_span;
  FileId file_id = 0;
  std::string owner_class;            // class_id of the room holding the definition
  std::optional<ScopeId> owner_scope;  // set for parameters and locals
};

/// A member with a body: parameters and locals live here.
struct Scope {
  ScopeId scope_id = 0;
  std::string class_id;
  DefId member = 0;  // the method or property definition
  FileId file_id = 0;
  Span span;
  std::vector<DefId> parameters;
  std::vector<DefId> locals;  // ordered by offset
};

struct ResolvedReference {
  FileId file_id = 0;
  Span ref_span;
  DefId target = 0;
};

class SymbolTable {
 public:
  const std::vector<DefinitionSite>& definitions() const noexcept { return defs_; }
  const DefinitionSite& definition(DefId id) const { return defs_.at(id); }
  const std::vector<Scope>& scopes() const noexcept { return scopes_; }
  /// Type definitions keyed by qualified name (several when names collide).
  const std::map<std::string, std::vector<DefId>>& by_qualified_name() const noexcept {
    return by_qualified_name_;
  }
  const Diagnostics& diagnostics() const noexcept { return diagnostics_; }

  /// Definition whose name token starts at `offset`, if any.
  std::optional<DefId> definition_at(FileId file, std::size_t offset) const;
  /// Type definition of a class.
  std::optional<DefId> type_definition(std::string_view class_id) const;

  const Codebase& codebase() const noexcept { return *codebase_; }

 private:
  friend class SymbolTableBuilder;
  friend class ResolverImpl;

  struct ClassInfo {
    const ClassDecl* decl = nullptr;
    DefId type_def = 0;
    std::vector<std::size_t> bases;  // indexes into classes_
    std::optional<std::size_t> outer;
    std::vector<DefId> fields;
    std::vector<DefId> methods;
  };
  struct FileInfo {
    std::vector<Token> significant;
    std::vector<std::string> usings;
    std::vector<std::pair<Span, std::size_t>> class_parts;  // (part span, class index)
    std::vector<ScopeId> scopes;                            // sorted by span.start
  };

  const Codebase* codebase_ = nullptr;
  std::vector<DefinitionSite> defs_;
  std::vector<Scope> scopes_;
  std::map<std::string, std::vector<DefId>> by_qualified_name_;
  std::vector<ClassInfo> classes_;
  std::map<std::string, std::size_t, std::less<>> class_index_;  // class_id -> index
  std::vector<FileInfo> files_;
  std::vector<std::string> namespaces_;  // every declared namespace and its prefixes, sorted
  std::map<std::pair<FileId, std::size_t>, DefId> def_at_;
  Diagnostics diagnostics_;
};

/// Builds the table. `units` and `tokens` are indexed by FileId. The table
/// keeps references to `codebase` and `classes`; both must outlive it.
SymbolTable build_symbol_table(const Codebase& codebase, std::span<const ClassDecl> classes,
                               std::span<const UnitParse> units,
                               std::span<const TokenList> tokens);

/// Resolves the identifier token covering `offset` in `file`. Returns nullopt
/// for unresolved names, non-identifier tokens and code outside any type.
std::optional<ResolvedReference> resolve(const SymbolTable& table, FileId file,
                                         std::size_t offset);

/// Every resolvable identifier occurrence in a file, in offset order.
/// Definition names resolve to themselves and are included.
std::vector<ResolvedReference> resolve_file(const SymbolTable& table, FileId file);

}  // namespace codepark
