#include <codepark/source.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

namespace codepark {

DecodeError::DecodeError(std::string file, std::size_t offset)
    : Error(file + ": invalid UTF-8 at byte offset " + std::to_string(offset)),
      file_(std::move(file)),
      offset_(offset) {}

LineIndex::LineIndex(std::vector<std::size_t> line_starts, std::size_t text_size)
    : starts_(std::move(line_starts)), size_(text_size) {
  if (starts_.empty() || starts_.front() != 0) {
    throw RangeError("line index must start at offset 0");
  }
}

std::size_t LineIndex::physical_lines() const noexcept {
  if (size_ == 0) return 0;
  // A start equal to the text size is the empty line after a final newline.
  if (starts_.back() == size_) return starts_.size() - 1;
  return starts_.size();
}

std::size_t LineIndex::line_start(std::size_t line) const {
  if (line == 0 || line > starts_.size()) {
    throw RangeError("line " + std::to_string(line) + " out of range");
  }
  return starts_[line - 1];
}

std::size_t LineIndex::line_content_end(std::size_t line, std::string_view text) const {
  std::size_t end = line < starts_.size() ? starts_[line] : size_;
  std::size_t begin = line_start(line);
  if (end > begin && text[end - 1] == '\n') {
    --end;
    if (end > begin && text[end - 1] == '\r') --end;
  }
  return end;
}

Position LineIndex::position_of(std::size_t offset) const {
  if (offset > size_) {
    throw RangeError("offset " + std::to_string(offset) + " beyond file length " +
                     std::to_string(size_));
  }
  auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
  auto line = static_cast<std::size_t>(std::distance(starts_.begin(), it));
  return {line, offset - starts_[line - 1] + 1};
}

LineIndex build_line_index(std::string_view text) {
  std::vector<std::size_t> starts{0};
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') starts.push_back(i + 1);
  }
  return LineIndex(std::move(starts), text.size());
}

std::string_view SourceUnit::line_text(std::size_t line) const {
  std::size_t begin = line_index.line_start(line);
  std::size_t end = line_index.line_content_end(line, text);
  return std::string_view(text).substr(begin, end - begin);
}

std::size_t find_invalid_utf8(std::string_view text) noexcept {
  auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = byte(i);
    if (c < 0x80) {
      ++i;
      continue;
    }
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > text.size()) return i;
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char cc = byte(i + k);
      if ((cc & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // Overlong forms, surrogates and out-of-range scalars.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
      return i;
    }
    i += len;
  }
  return std::string_view::npos;
}

std::string parent_directory(std::string_view path) {
  auto slash = path.rfind('/');
  if (slash == std::string_view::npos) return {};
  return std::string(path.substr(0, slash));
}

SourceUnit make_unit(std::string path, std::string text, FileId file_id) {
  if (auto bad = find_invalid_utf8(text); bad != std::string_view::npos) {
    throw DecodeError(path, bad);
  }
  SourceUnit unit;
  unit.file_id = file_id;
  unit.directory = parent_directory(path);
  unit.path = std::move(path);
  unit.text = std::move(text);
  unit.line_index = build_line_index(unit.text);
  return unit;
}

Codebase make_codebase(std::filesystem::path root,
                       std::vector<std::pair<std::string, std::string>> files) {
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  auto dup = std::adjacent_find(files.begin(), files.end(),
                                [](const auto& a, const auto& b) { return a.first == b.first; });
  if (dup != files.end()) throw Error("duplicate source path: " + dup->first);

  Codebase cb;
  cb.root = std::move(root);
  cb.units.reserve(files.size());
  for (auto& [path, text] : files) {
    cb.units.push_back(
        make_unit(std::move(path), std::move(text), static_cast<FileId>(cb.units.size())));
  }
  return cb;
}

namespace {

bool skipped_directory(const std::filesystem::path& dir) {
  auto name = dir.filename().string();
  return name.starts_with('.') || name == "bin" || name == "obj";
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot read " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

}  // namespace

Codebase load_codebase(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) throw Error("not a directory: " + root.string());

  std::vector<std::pair<std::string, std::string>> files;
  for (auto it = fs::recursive_directory_iterator(root); it != fs::recursive_directory_iterator();
       ++it) {
    if (it->is_directory()) {
      if (skipped_directory(it->path())) it.disable_recursion_pending();
      continue;
    }
    if (!it->is_regular_file() || it->path().extension() != ".cs") continue;
    auto rel = fs::relative(it->path(), root).generic_string();
    files.emplace_back(std::move(rel), read_file(it->path()));
  }
  return make_codebase(root, std::move(files));
}

}  // namespace codepark
