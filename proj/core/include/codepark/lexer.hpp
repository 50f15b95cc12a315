// Lossless tokenizer for C#-style source.
//
// Every byte of the input belongs to exactly one token and tokens are emitted
// in order, so concatenating token texts reproduces the input. Malformed
// input (unterminated strings or comments, stray bytes) never fails: the
// affected token runs to end of file or is classified Unknown, and a
// diagnostic is recorded.
#pragma once

#include <codepark/diagnostics.hpp>
#include <codepark/source.hpp>

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace codepark {

enum class TokenKind : std::uint8_t {
  Keyword,
  Identifier,
  StringLiteral,
  CharLiteral,
  NumberLiteral,
  Comment,
  Operator,
  Punctuation,
  Whitespace,
  Unknown,
};

std::string_view to_string(TokenKind kind) noexcept;

struct Token {
  TokenKind kind = TokenKind::Unknown;
  Span span;
  FileId file_id = 0;

  bool is_trivia() const noexcept {
    return kind == TokenKind::Whitespace || kind == TokenKind::Comment;
  }
};

using TokenList = std::vector<Token>;

/// The fixed keyword list, sorted, as shipped in data/keywords.txt.
std::span<const std::string_view> keywords() noexcept;
bool is_keyword(std::string_view word) noexcept;

TokenList tokenize(std::string_view text, FileId file_id = 0, Diagnostics* diagnostics = nullptr);
TokenList tokenize(const SourceUnit& unit, Diagnostics* diagnostics = nullptr);

}  // namespace codepark
