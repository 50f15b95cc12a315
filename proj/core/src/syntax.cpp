#include "syntax.hpp"

#include <algorithm>
#include <array>

namespace codepark::syntax {

namespace {
constexpr std::array<std::string_view, 18> kPredefined = {
    "bool",   "byte",  "char",  "decimal", "double", "float", "int",    "long", "object",
    "sbyte",  "short", "string", "uint",   "ulong",  "ushort", "var",   "void", "dynamic",
};
}  // namespace

bool is_predefined_type(std::string_view word) noexcept {
  return std::find(kPredefined.begin(), kPredefined.end(), word) != kPredefined.end();
}

std::optional<std::size_t> skip_generic_args(const TokenView& v, std::size_t k) {
  if (!v.is_sym(k, "<")) return std::nullopt;
  int depth = 0;
  for (std::size_t j = k; j < v.size(); ++j) {
    if (v.is_sym(j, "<")) {
      ++depth;
    } else if (v.is_sym(j, ">")) {
      if (--depth == 0) return j + 1;
    } else {
      switch (v.kind(j)) {
        case TokenKind::Identifier:
        case TokenKind::Keyword:
          break;
        case TokenKind::Punctuation:
        case TokenKind::Operator: {
          auto t = v.text(j);
          if (t != "," && t != "." && t != "[" && t != "]" && t != "?" && t != "*" && t != "::") {
            return std::nullopt;
          }
          break;
        }
        default:
          return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> match_type(const TokenView& v, std::size_t k) {
  if (k >= v.size()) return std::nullopt;
  if (v.kind(k) == TokenKind::Keyword) {
    if (!is_predefined_type(v.text(k))) return std::nullopt;
    ++k;
  } else if (v.is_ident(k)) {
    ++k;
    if (v.is_sym(k, "::") && v.is_ident(k + 1)) k += 2;
    for (;;) {
      if (v.is_sym(k, "<")) {
        auto after = skip_generic_args(v, k);
        if (!after) return std::nullopt;
        k = *after;
      }
      if (v.is_sym(k, ".") && v.is_ident(k + 1)) {
        k += 2;
        continue;
      }
      break;
    }
  } else {
    return std::nullopt;
  }
  for (;;) {
    if (v.is_sym(k, "?") || v.is_sym(k, "*")) {
      ++k;
      continue;
    }
    if (v.is_sym(k, "[")) {
      std::size_t j = k + 1;
      while (v.is_sym(j, ",")) ++j;
      if (v.is_sym(j, "]")) {
        k = j + 1;
        continue;
      }
    }
    break;
  }
  return k;
}

std::string render_type(const TokenView& v, std::size_t begin, std::size_t end) {
  std::string out;
  int angle = 0;
  for (std::size_t k = begin; k < end; ++k) {
    auto t = v.text(k);
    if (v.is_sym(k, "<")) ++angle;
    if (v.is_sym(k, ">")) --angle;
    out += t;
    if (t == "," && angle > 0) out += ' ';
    // Keyword modifiers (ref, out, params, this) are separated from the type.
    if (v.kind(k) == TokenKind::Keyword && k + 1 < end && !is_predefined_type(t)) out += ' ';
  }
  return out;
}

std::vector<Token> significant(std::span<const Token> tokens) {
  std::vector<Token> out;
  out.reserve(tokens.size() / 2);
  for (const auto& t : tokens) {
    if (!t.is_trivia()) out.push_back(t);
  }
  return out;
}

}  // namespace codepark::syntax
