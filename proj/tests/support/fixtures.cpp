#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace codepark::testing {

std::filesystem::path fixture_root() { return CODEPARK_FIXTURE_DIR; }

std::filesystem::path fixture_dir(const std::string& name) { return fixture_root() / name; }

std::string Location::str() const {
  return path + ":" + std::to_string(line) + ":" + std::to_string(column);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

Location parse_location(const std::string& s) {
  auto c2 = s.rfind(':');
  auto c1 = s.rfind(':', c2 - 1);
  return {s.substr(0, c1), std::stoul(s.substr(c1 + 1, c2 - c1 - 1)), std::stoul(s.substr(c2 + 1))};
}

std::string rest_of(std::istringstream& in) {
  std::string rest;
  std::getline(in, rest);
  if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
  return rest;
}

}  // namespace

Manifest load_manifest(const std::string& name) {
  std::istringstream file(read_file(fixture_root() / (name + ".manifest")));
  Manifest m;
  std::string line;
  while (std::getline(file, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    if (tag == "summary") {
      ManifestSummary s;
      in >> s.classes >> s.loc >> s.largest;
      m.summary = s;
    } else if (tag == "lines") {
      std::string path;
      ManifestLines l;
      in >> path >> l.code >> l.comment >> l.blank;
      m.lines[path] = l;
    } else if (tag == "class") {
      std::string qn, kind;
      in >> qn >> kind;
      m.classes.emplace_back(qn, kind);
    } else if (tag == "method") {
      std::string qn;
      in >> qn;
      m.methods.emplace_back(qn, rest_of(in));
    } else if (tag == "field") {
      ManifestField f;
      std::string kind;
      in >> f.qualified >> kind;
      f.is_property = kind == "property";
      f.type = rest_of(in);
      m.fields.push_back(f);
    } else if (tag == "def") {
      std::string at;
      ManifestDef d;
      in >> at >> d.kind >> d.name;
      d.at = parse_location(at);
      m.defs.push_back(d);
    } else if (tag == "defs") {
      in >> m.def_count;
    } else if (tag == "ref") {
      std::string from, arrow, to;
      in >> from >> arrow >> to;
      m.refs.emplace_back(parse_location(from), parse_location(to));
    }
  }
  return m;
}

std::size_t offset_of(const SourceUnit& unit, std::size_t line, std::size_t column) {
  return unit.line_index.line_start(line) + column - 1;
}

const SourceUnit& unit_at(const Codebase& codebase, const std::string& path) {
  for (const auto& u : codebase.units) {
    if (u.path == path) return u;
  }
  throw std::runtime_error("no unit " + path);
}

}  // namespace codepark::testing
