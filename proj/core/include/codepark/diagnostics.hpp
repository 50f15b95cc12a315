#pragma once

#include <codepark/source.hpp>

#include <string>
#include <vector>

namespace codepark {

enum class Severity { Warning, Error };

/// A recoverable problem found while lexing or parsing. Never fatal.
struct Diagnostic {
  Severity severity = Severity::Warning;
  FileId file_id = 0;
  Span span;
  std::string message;
};

using Diagnostics = std::vector<Diagnostic>;

/// "path:line:col: warning: message"
std::string format_diagnostic(const Diagnostic& diag, const Codebase& codebase);

}  // namespace codepark
