#include "pipeline.hpp"

#include "fixtures.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace codepark::testing {

namespace {
std::mutex cache_mutex;
}

const Analysis& fixture_analysis(const std::string& name) {
  static std::map<std::string, std::unique_ptr<Analysis>> cache;
  std::lock_guard lock(cache_mutex);
  auto& slot = cache[name];
  if (!slot) slot = analyze(load_codebase(fixture_dir(name)));
  return *slot;
}

const Scene& fixture_scene(const std::string& name) {
  static std::map<std::string, std::unique_ptr<Scene>> cache;
  const Analysis& a = fixture_analysis(name);
  std::lock_guard lock(cache_mutex);
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<Scene>(build_scene(a));
  return *slot;
}

std::unique_ptr<Analysis> analyze_sources(std::vector<std::pair<std::string, std::string>> files) {
  return analyze(make_codebase("mem", std::move(files)));
}

const ClassDecl& class_named(const Analysis& a, const std::string& qualified_name) {
  for (const auto& c : a.classes) {
    if (c.qualified_name == qualified_name) return c;
  }
  throw std::runtime_error("no class " + qualified_name);
}

}  // namespace codepark::testing
