// Error-tolerant structural parser: namespaces, types, members and base lists.
//
// The parser works on the significant (non-trivia) token stream and never
// builds expression trees. Unparseable regions are skipped to the next `;` or
// balanced `}` with a diagnostic.
#pragma once

#include <codepark/diagnostics.hpp>
#include <codepark/lexer.hpp>
#include <codepark/source.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace codepark {

enum class TypeKind { Class, Interface, Struct, Enum };

std::string_view to_string(TypeKind kind) noexcept;

struct Parameter {
  std::string name;
  std::string type_name;  // includes ref/out/params/this modifiers
  Span name_span;
};

struct MethodDecl {
  std::string name;
  std::string signature_text;  // "ReturnType Name(ParamType p, ...)"
  std::vector<Parameter> params;
  FileId file_id = 0;
  Span span;
  Span name_span;
  std::optional<Span> body_span;  // absent for abstract, interface and extern members
};

struct FieldDecl {
  std::string name;
  std::string type_name;
  FileId file_id = 0;
  Span span;
  Span name_span;
  bool is_property = false;
  std::optional<Span> body_span;  // accessor block or `=> expr;` of a property
};

/// One textual declaration of a type. Partial types have several.
struct ClassPart {
  FileId file_id = 0;
  Span span;
  Span name_span;
};

struct ClassDecl {
  std::string class_id;
  std::string name;
  std::string qualified_name;
  std::string namespace_name;
  std::string outer_qualified_name;  // empty unless nested
  TypeKind kind = TypeKind::Class;
  std::vector<std::string> modifiers;   // sorted, unique
  std::vector<std::string> base_names;  // dotted paths, generic arguments stripped
  FileId file_id = 0;
  Span span;
  Span name_span;
  std::vector<ClassPart> parts;  // parts[0] mirrors file_id/span/name_span
  std::vector<MethodDecl> methods;
  std::vector<FieldDecl> fields;

  bool has_modifier(std::string_view m) const;
};

struct UnitParse {
  FileId file_id = 0;
  std::vector<ClassDecl> classes;  // nested types flattened, in source order
  std::vector<std::string> usings;
  std::vector<std::string> namespaces;  // every namespace declared in the file
  Diagnostics diagnostics;
};

UnitParse parse_unit(const SourceUnit& unit, std::span<const Token> tokens);

struct ClassCollection {
  std::vector<ClassDecl> classes;  // ordered by (directory, path, span.start)
  Diagnostics diagnostics;
};

/// Merges per-file results: partial declarations are combined, duplicate
/// qualified names are kept with distinct ids and reported, and class ids are
/// assigned.
ClassCollection collect_classes(const Codebase& codebase, std::span<const UnitParse> units);

}  // namespace codepark
