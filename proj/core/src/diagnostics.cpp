#include <codepark/diagnostics.hpp>

namespace codepark {

std::string format_diagnostic(const Diagnostic& diag, const Codebase& codebase) {
  const auto& unit = codebase.unit(diag.file_id);
  auto pos = unit.line_index.position_of(diag.span.start);
  std::string out = unit.path + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.column);
  out += diag.severity == Severity::Error ? ": error: " : ": warning: ";
  out += diag.message;
  return out;
}

}  // namespace codepark
