// Token-pattern helpers shared by the structural parser and the resolver.
// Internal header; operates on significant (non-trivia) token sequences.
#pragma once

#include <codepark/lexer.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace codepark::syntax {

class TokenView {
 public:
  TokenView(std::span<const Token> tokens, std::string_view text) : toks_(tokens), text_(text) {}

  std::size_t size() const noexcept { return toks_.size(); }
  const Token& operator[](std::size_t k) const { return toks_[k]; }
  std::span<const Token> tokens() const noexcept { return toks_; }
  std::string_view source() const noexcept { return text_; }

  std::string_view text(std::size_t k) const {
    if (k >= toks_.size()) return {};
    const auto& t = toks_[k];
    return text_.substr(t.span.start, t.span.size());
  }
  TokenKind kind(std::size_t k) const {
    return k < toks_.size() ? toks_[k].kind : TokenKind::Unknown;
  }
  bool is_ident(std::size_t k) const { return kind(k) == TokenKind::Identifier; }
  /// Identifier, or a contextual keyword usable as a declared name.
  bool is_name(std::size_t k) const {
    if (is_ident(k)) return true;
    if (kind(k) != TokenKind::Keyword) return false;
    auto t = text(k);
    return t == "value" || t == "get" || t == "set" || t == "var" || t == "async" || t == "await";
  }
  bool is_keyword(std::size_t k, std::string_view word) const {
    return kind(k) == TokenKind::Keyword && text(k) == word;
  }
  /// Punctuation or operator with the given spelling.
  bool is_sym(std::size_t k, std::string_view sym) const {
    auto kd = kind(k);
    return (kd == TokenKind::Punctuation || kd == TokenKind::Operator) && text(k) == sym;
  }

 private:
  std::span<const Token> toks_;
  std::string_view text_;
};

/// Built-in type keywords usable in type position, including `var` and `void`.
bool is_predefined_type(std::string_view word) noexcept;

/// Index one past the `>` closing the generic argument list opened at `k`,
/// or nullopt when the tokens at `k` are not a plausible argument list.
std::optional<std::size_t> skip_generic_args(const TokenView& v, std::size_t k);

/// Index one past a type starting at `k` (qualified name, generic args,
/// array ranks, `?` and `*` suffixes), or nullopt.
std::optional<std::size_t> match_type(const TokenView& v, std::size_t k);

/// Type text for tokens [begin, end): tokens joined without spaces, except
/// ", " between generic arguments.
std::string render_type(const TokenView& v, std::size_t begin, std::size_t end);

/// Significant tokens (no whitespace or comments) of a token list.
std::vector<Token> significant(std::span<const Token> tokens);

}  // namespace codepark::syntax
