#include <codepark/lexer.hpp>

#include <algorithm>
#include <array>
#include <string>

namespace codepark {

// Defined in the generated keywords_data.cpp (contents of data/keywords.txt).
extern const std::string_view kKeywordAsset;

namespace {

std::vector<std::string_view> parse_keyword_asset() {
  std::vector<std::string_view> words;
  std::string_view rest = kKeywordAsset;
  while (!rest.empty()) {
    auto nl = rest.find('\n');
    auto line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    words.push_back(line);
  }
  std::sort(words.begin(), words.end());
  return words;
}

const std::vector<std::string_view>& keyword_table() {
  static const std::vector<std::string_view> table = parse_keyword_asset();
  return table;
}

constexpr std::array<std::string_view, 23> kMultiCharOperators = {
    "<<=", "?\?=", "=>", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=",
    "-=",  "*=",  "/=", "%=", "&=", "|=", "^=", "<<", "->", "??", "::",
};

bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}
bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}
bool is_ident_char(char c) noexcept { return is_ident_start(c) || is_digit(c); }
bool is_punctuation(char c) noexcept {
  switch (c) {
    case '{': case '}': case '(': case ')': case '[': case ']':
    case ';': case ',': case '.': case ':':
      return true;
    default:
      return false;
  }
}
bool is_operator_char(char c) noexcept {
  switch (c) {
    case '+': case '-': case '*': case '/': case '%': case '=': case '<': case '>':
    case '!': case '&': case '|': case '^': case '~': case '?':
      return true;
    default:
      return false;
  }
}

class Scanner {
 public:
  Scanner(std::string_view text, FileId file_id, Diagnostics* diags)
      : text_(text), file_id_(file_id), diags_(diags) {}

  TokenList run() {
    TokenList out;
    out.reserve(text_.size() / 3 + 1);
    bool line_start = true;  // only whitespace seen since the last newline
    while (pos_ < text_.size()) {
      std::size_t begin = pos_;
      TokenKind kind = next(line_start);
      out.push_back({kind, {begin, pos_}, file_id_});
      if (kind == TokenKind::Whitespace) {
        if (text_.substr(begin, pos_ - begin).find('\n') != std::string_view::npos) {
          line_start = true;
        }
      } else {
        line_start = false;
      }
    }
    return out;
  }

 private:
  char at(std::size_t i) const noexcept { return i < text_.size() ? text_[i] : '\0'; }
  char peek(std::size_t k = 0) const noexcept { return at(pos_ + k); }
  bool eof() const noexcept { return pos_ >= text_.size(); }

  void diagnose(std::size_t begin, std::string message) {
    if (diags_) diags_->push_back({Severity::Warning, file_id_, {begin, pos_}, std::move(message)});
  }

  TokenKind next(bool line_start) {
    char c = peek();
    if (is_space(c)) {
      while (!eof() && is_space(peek())) ++pos_;
      return TokenKind::Whitespace;
    }
    if (c == '#' && line_start) return line_comment();
    if (c == '/' && peek(1) == '/') return line_comment();
    if (c == '/' && peek(1) == '*') return block_comment();
    if (c == '"') return quoted(1, '"', StringLiteral);
    if (c == '\'') return quoted(1, '\'', CharLiteral);
    if (c == '@' && peek(1) == '"') return verbatim(2);
    if (c == '$' && peek(1) == '"') return quoted(2, '"', StringLiteral);
    if ((c == '$' && peek(1) == '@' && peek(2) == '"') ||
        (c == '@' && peek(1) == '$' && peek(2) == '"')) {
      return verbatim(3);
    }
    if (is_digit(c) || (c == '.' && is_digit(peek(1)))) return number();
    if (is_ident_start(c)) return identifier(0);
    if (c == '@' && is_ident_start(peek(1))) return identifier(1);
    if (is_punctuation(c)) {
      if (c == ':' && peek(1) == ':') {
        pos_ += 2;
        return TokenKind::Operator;
      }
      ++pos_;
      return TokenKind::Punctuation;
    }
    if (is_operator_char(c)) {
      auto rest = text_.substr(pos_);
      for (auto op : kMultiCharOperators) {
        if (rest.starts_with(op)) {
          pos_ += op.size();
          return TokenKind::Operator;
        }
      }
      ++pos_;
      return TokenKind::Operator;
    }
    ++pos_;
    return TokenKind::Unknown;
  }

  static constexpr TokenKind StringLiteral = TokenKind::StringLiteral;
  static constexpr TokenKind CharLiteral = TokenKind::CharLiteral;

  // Stops before the line terminator ("\n" or "\r\n").
  TokenKind line_comment() {
    while (!eof() && peek() != '\n' && !(peek() == '\r' && peek(1) == '\n')) ++pos_;
    return TokenKind::Comment;
  }

  TokenKind block_comment() {
    std::size_t begin = pos_;
    auto close = text_.find("*/", pos_ + 2);
    if (close == std::string_view::npos) {
      pos_ = text_.size();
      diagnose(begin, "unterminated block comment");
    } else {
      pos_ = close + 2;
    }
    return TokenKind::Comment;
  }

  TokenKind quoted(std::size_t prefix, char quote, TokenKind kind) {
    std::size_t begin = pos_;
    pos_ += prefix;
    while (!eof()) {
      char c = peek();
      if (c == '\\') {
        pos_ = std::min(pos_ + 2, text_.size());
        continue;
      }
      ++pos_;
      if (c == quote) return kind;
    }
    diagnose(begin, kind == TokenKind::CharLiteral ? "unterminated character literal"
                                                   : "unterminated string literal");
    return kind;
  }

  // @"..." with "" as the only escape.
  TokenKind verbatim(std::size_t prefix) {
    std::size_t begin = pos_;
    pos_ += prefix;
    while (!eof()) {
      if (peek() == '"') {
        if (peek(1) == '"') {
          pos_ += 2;
          continue;
        }
        ++pos_;
        return TokenKind::StringLiteral;
      }
      ++pos_;
    }
    diagnose(begin, "unterminated verbatim string literal");
    return TokenKind::StringLiteral;
  }

  TokenKind number() {
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X' || peek(1) == 'b' || peek(1) == 'B')) {
      pos_ += 2;
    } else {
      while (is_digit(peek()) || peek() == '_') ++pos_;
      if (peek() == '.' && is_digit(peek(1))) {
        ++pos_;
        while (is_digit(peek()) || peek() == '_') ++pos_;
      }
      if ((peek() == 'e' || peek() == 'E') &&
          (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
        pos_ += 2;
      }
    }
    // Digits, hex digits and suffixes (UL, f, m, ...).
    while (is_ident_char(peek())) ++pos_;
    return TokenKind::NumberLiteral;
  }

  TokenKind identifier(std::size_t prefix) {
    std::size_t begin = pos_;
    pos_ += prefix;
    while (is_ident_char(peek())) ++pos_;
    if (prefix == 0 && is_keyword(text_.substr(begin, pos_ - begin))) return TokenKind::Keyword;
    return TokenKind::Identifier;
  }

  std::string_view text_;
  FileId file_id_;
  Diagnostics* diags_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view to_string(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::Keyword: return "Keyword";
    case TokenKind::Identifier: return "Identifier";
    case TokenKind::StringLiteral: return "StringLiteral";
    case TokenKind::CharLiteral: return "CharLiteral";
    case TokenKind::NumberLiteral: return "NumberLiteral";
    case TokenKind::Comment: return "Comment";
    case TokenKind::Operator: return "Operator";
    case TokenKind::Punctuation: return "Punctuation";
    case TokenKind::Whitespace: return "Whitespace";
    case TokenKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::span<const std::string_view> keywords() noexcept { return keyword_table(); }

bool is_keyword(std::string_view word) noexcept {
  const auto& table = keyword_table();
  return std::binary_search(table.begin(), table.end(), word);
}

TokenList tokenize(std::string_view text, FileId file_id, Diagnostics* diagnostics) {
  return Scanner(text, file_id, diagnostics).run();
}

TokenList tokenize(const SourceUnit& unit, Diagnostics* diagnostics) {
  return tokenize(unit.text, unit.file_id, diagnostics);
}

}  // namespace codepark
