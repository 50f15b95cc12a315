#include <codepark/hash.hpp>
#include <codepark/scene.hpp>

#include <cmath>
#include <set>

namespace codepark {

using nlohmann::json;

std::unique_ptr<Analysis> analyze(Codebase codebase) {
  auto a = std::make_unique<Analysis>();
  a->codebase = std::move(codebase);
  const auto& units = a->codebase.units;
  a->tokens.reserve(units.size());
  a->units.reserve(units.size());
  a->line_kinds.reserve(units.size());
  for (const auto& unit : units) {
    a->tokens.push_back(tokenize(unit, &a->diagnostics));
    a->units.push_back(parse_unit(unit, a->tokens.back()));
    a->line_kinds.push_back(classify_lines(unit, a->tokens.back()));
    const auto& d = a->units.back().diagnostics;
    a->diagnostics.insert(a->diagnostics.end(), d.begin(), d.end());
  }
  auto collected = collect_classes(a->codebase, a->units);
  a->classes = std::move(collected.classes);
  a->diagnostics.insert(a->diagnostics.end(), collected.diagnostics.begin(),
                        collected.diagnostics.end());
  a->table = build_symbol_table(a->codebase, a->classes, a->units, a->tokens);
  a->diagnostics.insert(a->diagnostics.end(), a->table.diagnostics().begin(),
                        a->table.diagnostics().end());
  a->summary = summarize(a->codebase, a->classes, a->line_kinds);
  return a;
}

std::string codebase_digest(const Codebase& codebase) {
  Fnv1a64 h;
  for (const auto& unit : codebase.units) {
    h.update(unit.path).update(std::string_view("\0", 1));
    h.update(std::to_string(unit.text.size())).update(std::string_view("\0", 1));
    h.update(unit.text);
  }
  return h.hex();
}

Scene build_scene(const Analysis& analysis, const Arrangement* arrangement) {
  const Codebase& cb = analysis.codebase;
  Scene scene;
  scene.generated_from = codebase_digest(cb);
  for (const auto& unit : cb.units) scene.files.push_back(unit.path);
  scene.summary = analysis.summary;

  std::vector<std::vector<ResolvedReference>> refs;
  refs.reserve(cb.units.size());
  for (const auto& unit : cb.units) {
    auto file_refs = resolve_file(analysis.table, unit.file_id);
    // a definition's own name does not link to itself
    std::erase_if(file_refs, [&](const ResolvedReference& r) {
      const auto& d = analysis.table.definition(r.target);
      return d.file_id == r.file_id && d.name_span.start == r.ref_span.start;
    });
    refs.push_back(std::move(file_refs));
  }

  PaginationIndex pages(cb, analysis.classes);
  std::vector<RoomInput> inputs;
  for (const auto& cls : analysis.classes) {
    scene.walls.emplace(cls.class_id,
                        paginate(cls, cb, analysis.tokens, refs, analysis.table, pages));
    SceneClass sc;
    sc.name = cls.name;
    sc.qualified_name = cls.qualified_name;
    sc.kind = std::string(to_string(cls.kind));
    sc.directory = cb.unit(cls.file_id).directory;
    sc.path = cb.unit(cls.file_id).path;
    for (const auto& m : cls.methods) {
      SceneMethod sm{m.name, m.signature_text, std::nullopt};
      if (auto def = analysis.table.definition_at(m.file_id, m.name_span.start)) {
        sm.target = pages.target_for(analysis.table, *def);
      }
      sc.methods.push_back(std::move(sm));
    }
    scene.classes.emplace(cls.class_id, std::move(sc));

    auto loc = analysis.summary.per_class_loc.find(cls.class_id);
    inputs.push_back({cls.class_id, cls.name, cb.unit(cls.file_id).directory,
                      loc == analysis.summary.per_class_loc.end() ? 0 : loc->second});
  }
  scene.layout = layout_park(inputs, arrangement);
  check_scene(scene);
  return scene;
}

namespace {

void check_link(const Scene& scene, const std::optional<NavigationTarget>& link) {
  if (!link) return;
  if (!scene.layout.find_room(link->class_id)) {
    throw ConsistencyError("link into missing room " + link->class_id);
  }
  auto w = scene.walls.find(link->class_id);
  if (w == scene.walls.end() || link->wall_index < 1 || link->wall_index > 3 ||
      link->line >= w->second[link->wall_index].lines.size()) {
    throw ConsistencyError("link outside the walls of " + link->class_id);
  }
}

}  // namespace

void check_scene(const Scene& scene) {
  for (const auto& room : scene.layout.rooms) {
    auto it = scene.walls.find(room.class_id);
    if (it == scene.walls.end()) throw ConsistencyError("room without walls: " + room.class_id);
    for (int i = 0; i < 4; ++i) {
      if (it->second[i].wall_index != i) {
        throw ConsistencyError("wall index mismatch in " + room.class_id);
      }
    }
    if (!scene.classes.count(room.class_id)) {
      throw ConsistencyError("room without class: " + room.class_id);
    }
  }
  if (scene.walls.size() != scene.layout.rooms.size() ||
      scene.classes.size() != scene.layout.rooms.size()) {
    throw ConsistencyError("walls or classes without a room");
  }
  for (const auto& [id, walls] : scene.walls) {
    for (const auto& page : walls) {
      for (const auto& line : page.lines) {
        for (const auto& run : line.runs) check_link(scene, run.link);
      }
    }
  }
  for (const auto& [id, cls] : scene.classes) {
    for (const auto& m : cls.methods) check_link(scene, m.target);
  }
}

// ---- JSON ----------------------------------------------------------------

namespace {

json to_json(const Rect& r) {
  return {{"min_x", r.min_x}, {"min_z", r.min_z}, {"max_x", r.max_x}, {"max_z", r.max_z}};
}
Rect rect_from(const json& j) {
  return {j.at("min_x").get<double>(), j.at("min_z").get<double>(), j.at("max_x").get<double>(),
          j.at("max_z").get<double>()};
}

json to_json(const Point2& p) { return {{"x", p.x}, {"z", p.z}}; }
Point2 point_from(const json& j) { return {j.at("x").get<double>(), j.at("z").get<double>()}; }

json to_json(const NavigationTarget& t) {
  return {{"class_id", t.class_id},
          {"wall_index", t.wall_index},
          {"line", t.line},
          {"scroll_offset", t.scroll_offset},
          {"def_id", t.def_id}};
}
NavigationTarget target_from(const json& j) {
  NavigationTarget t;
  t.class_id = j.at("class_id").get<std::string>();
  t.wall_index = j.at("wall_index").get<int>();
  t.line = j.at("line").get<std::size_t>();
  t.scroll_offset = j.at("scroll_offset").get<std::size_t>();
  t.def_id = j.at("def_id").get<DefId>();
  return t;
}

WallPage page_from(const json& j) {
  WallPage p;
  p.wall_index = j.at("wall_index").get<int>();
  if (j.contains("line_range")) {
    p.line_range = LineRange{j["line_range"].at("first").get<std::size_t>(),
                             j["line_range"].at("last").get<std::size_t>()};
  }
  for (const auto& jl : j.at("lines")) {
    WallLine line;
    if (jl.contains("file")) {
      line.file_id = jl["file"].get<FileId>();
      line.line = jl.at("line").get<std::size_t>();
    }
    for (const auto& jr : jl.at("runs")) {
      StyledRun run;
      run.text = jr.at("text").get<std::string>();
      auto role = color_role_from(jr.at("role").get<std::string>());
      if (!role) throw Error("unknown color role " + jr["role"].get<std::string>());
      run.role = *role;
      if (jr.contains("link")) run.link = target_from(jr["link"]);
      line.runs.push_back(std::move(run));
    }
    p.lines.push_back(std::move(line));
  }
  p.viewport_lines = j.at("viewport_lines").get<std::size_t>();
  p.max_columns = j.at("max_columns").get<std::size_t>();
  p.scroll_max = j.at("scroll_max").get<std::size_t>();
  return p;
}

json to_json(const Room& r) {
  return {{"class_id", r.class_id},
          {"group_id", r.group_id},
          {"roof_label", r.roof_label},
          {"loc", r.loc},
          {"side", r.side},
          {"height", r.height},
          {"footprint", to_json(r.footprint)},
          {"exterior_color",
           {{"l", r.exterior_color.lightness},
            {"a", r.exterior_color.a},
            {"b", r.exterior_color.b},
            {"hex", r.exterior_color.hex}}}};
}
Room room_from(const json& j) {
  Room r;
  r.class_id = j.at("class_id").get<std::string>();
  r.group_id = j.at("group_id").get<std::string>();
  r.roof_label = j.at("roof_label").get<std::string>();
  r.loc = j.at("loc").get<std::size_t>();
  r.side = j.at("side").get<double>();
  r.height = j.at("height").get<double>();
  r.footprint = rect_from(j.at("footprint"));
  const auto& c = j.at("exterior_color");
  r.exterior_color = {c.at("l").get<double>(), c.at("a").get<double>(), c.at("b").get<double>(),
                      c.at("hex").get<std::string>()};
  return r;
}

json to_json(const DirectoryGroup& g) {
  return {{"group_id", g.group_id},     {"directory", g.directory},
          {"label_text", g.label_text}, {"bounds", to_json(g.bounds)},
          {"label_anchor", to_json(g.label_anchor)}, {"room_ids", g.room_ids}};
}
DirectoryGroup group_from(const json& j) {
  DirectoryGroup g;
  g.group_id = j.at("group_id").get<std::string>();
  g.directory = j.at("directory").get<std::string>();
  g.label_text = j.at("label_text").get<std::string>();
  g.bounds = rect_from(j.at("bounds"));
  g.label_anchor = point_from(j.at("label_anchor"));
  g.room_ids = j.at("room_ids").get<std::vector<std::string>>();
  return g;
}

json to_json(const ParkLayout& l) {
  json rooms = json::array();
  for (const auto& r : l.rooms) rooms.push_back(to_json(r));
  json groups = json::array();
  for (const auto& g : l.groups) groups.push_back(to_json(g));
  return {{"rooms", rooms},
          {"groups", groups},
          {"ground_extent", to_json(l.ground_extent)},
          {"arrangement_source",
           l.arrangement_source == ArrangementSource::UserOverride ? "user-override" : "computed"}};
}
ParkLayout layout_from(const json& j) {
  ParkLayout l;
  for (const auto& r : j.at("rooms")) l.rooms.push_back(room_from(r));
  for (const auto& g : j.at("groups")) l.groups.push_back(group_from(g));
  l.ground_extent = rect_from(j.at("ground_extent"));
  auto src = j.at("arrangement_source").get<std::string>();
  if (src == "user-override") {
    l.arrangement_source = ArrangementSource::UserOverride;
  } else if (src != "computed") {
    throw Error("unknown arrangement_source " + src);
  }
  return l;
}

json to_json(const CodebaseSummary& s) {
  return {{"num_classes", s.num_classes},
          {"total_loc", s.total_loc},
          {"largest_class_loc", s.largest_class_loc},
          {"per_class_loc", s.per_class_loc}};
}
CodebaseSummary summary_from(const json& j) {
  CodebaseSummary s;
  s.num_classes = j.at("num_classes").get<std::size_t>();
  s.total_loc = j.at("total_loc").get<std::size_t>();
  s.largest_class_loc = j.at("largest_class_loc").get<std::size_t>();
  s.per_class_loc = j.at("per_class_loc").get<std::map<std::string, std::size_t>>();
  return s;
}

json method_json(const SceneMethod& m) {
  json j = {{"name", m.name}, {"signature", m.signature}};
  if (m.target) j["target"] = to_json(*m.target);
  return j;
}

json to_json(const Palette& p) {
  json j;
  for (auto r : {ColorRole::Keyword, ColorRole::Comment, ColorRole::String, ColorRole::Default,
                 ColorRole::Background}) {
    j[std::string(to_string(r))] = p.color(r);
  }
  return j;
}

void canonicalize(json& j) {
  if (j.is_object() || j.is_array()) {
    for (auto& v : j) canonicalize(v);
  } else if (j.is_number_float()) {
    double d = j.get<double>();
    if (!std::isfinite(d)) throw Error("non-finite number in scene");
    if (d == std::trunc(d) && std::fabs(d) < 9.0e15) {
      j = static_cast<std::int64_t>(d);
    }
  }
}

}  // namespace

json to_json(const WallPage& page) {
  json lines = json::array();
  for (const auto& line : page.lines) {
    json runs = json::array();
    for (const auto& run : line.runs) {
      json jr = {{"text", run.text}, {"role", std::string(to_string(run.role))}};
      if (run.link) jr["link"] = to_json(*run.link);
      runs.push_back(std::move(jr));
    }
    json jl = {{"runs", std::move(runs)}};
    if (line.file_id) {
      jl["file"] = *line.file_id;
      jl["line"] = line.line;
    }
    lines.push_back(std::move(jl));
  }
  json j = {{"wall_index", page.wall_index},
            {"lines", std::move(lines)},
            {"viewport_lines", page.viewport_lines},
            {"max_columns", page.max_columns},
            {"scroll_max", page.scroll_max}};
  if (page.line_range) {
    j["line_range"] = {{"first", page.line_range->first}, {"last", page.line_range->last}};
  }
  return j;
}

json methods_json(const SceneClass& cls) {
  json arr = json::array();
  for (const auto& m : cls.methods) arr.push_back(method_json(m));
  return arr;
}

json to_json(const Scene& scene) {
  json walls = json::object();
  for (const auto& [id, set] : scene.walls) {
    json pages = json::array();
    for (const auto& p : set) pages.push_back(to_json(p));
    walls[id] = std::move(pages);
  }
  json classes = json::object();
  for (const auto& [id, c] : scene.classes) {
    classes[id] = {{"name", c.name},
                   {"qualified_name", c.qualified_name},
                   {"kind", c.kind},
                   {"directory", c.directory},
                   {"path", c.path},
                   {"methods", methods_json(c)}};
  }
  return {{"version", scene.version},
          {"generated_from", scene.generated_from},
          {"files", scene.files},
          {"summary", to_json(scene.summary)},
          {"layout", to_json(scene.layout)},
          {"walls", std::move(walls)},
          {"classes", std::move(classes)},
          {"palette", to_json(scene.palette)}};
}

Scene scene_from_json(const json& j) {
  try {
    Scene s;
    s.version = j.at("version").get<int>();
    if (s.version != kSceneVersion) {
      throw Error("unsupported scene version " + std::to_string(s.version));
    }
    s.generated_from = j.at("generated_from").get<std::string>();
    s.files = j.at("files").get<std::vector<std::string>>();
    s.summary = summary_from(j.at("summary"));
    s.layout = layout_from(j.at("layout"));
    for (const auto& [id, pages] : j.at("walls").items()) {
      if (!pages.is_array() || pages.size() != 4) throw Error("room " + id + " needs 4 walls");
      WallSet set;
      for (std::size_t i = 0; i < 4; ++i) set[i] = page_from(pages[i]);
      s.walls.emplace(id, std::move(set));
    }
    for (const auto& [id, jc] : j.at("classes").items()) {
      SceneClass c;
      c.name = jc.at("name").get<std::string>();
      c.qualified_name = jc.at("qualified_name").get<std::string>();
      c.kind = jc.at("kind").get<std::string>();
      c.directory = jc.at("directory").get<std::string>();
      c.path = jc.at("path").get<std::string>();
      for (const auto& jm : jc.at("methods")) {
        SceneMethod m{jm.at("name").get<std::string>(), jm.at("signature").get<std::string>(),
                      std::nullopt};
        if (jm.contains("target")) m.target = target_from(jm["target"]);
        c.methods.push_back(std::move(m));
      }
      s.classes.emplace(id, std::move(c));
    }
    const auto& jp = j.at("palette");
    s.palette.background = jp.at("background").get<std::string>();
    s.palette.default_text = jp.at("default").get<std::string>();
    s.palette.keyword = jp.at("keyword").get<std::string>();
    s.palette.comment = jp.at("comment").get<std::string>();
    s.palette.string = jp.at("string").get<std::string>();
    return s;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed scene: ") + e.what());
  }
}

std::string canonical_dump(const json& j) {
  json copy = j;
  canonicalize(copy);
  return copy.dump(-1, ' ', false, json::error_handler_t::strict);
}

std::string serialize(const Scene& scene) { return canonical_dump(to_json(scene)); }

Scene deserialize(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes.begin(), bytes.end());
  } catch (const json::exception& e) {
    throw Error(std::string("scene is not JSON: ") + e.what());
  }
  return scene_from_json(j);
}

json to_json(const Arrangement& a) {
  json positions = json::object();
  for (const auto& [id, p] : a.positions) positions[id] = to_json(p);
  json j = {{"version", 1}, {"positions", std::move(positions)}};
  if (!a.saved_at.empty()) j["saved_at"] = a.saved_at;
  return j;
}

Arrangement arrangement_from_json(const json& j) {
  if (!j.is_object()) throw Error("arrangement must be a JSON object");
  if (j.contains("version") && j["version"] != 1) throw Error("unsupported arrangement version");
  auto it = j.find("positions");
  if (it == j.end() || !it->is_object()) throw Error("arrangement needs a positions object");
  Arrangement a;
  for (const auto& [id, p] : it->items()) {
    if (!p.is_object() || !p.contains("x") || !p.contains("z") || !p["x"].is_number() ||
        !p["z"].is_number()) {
      throw Error("position of " + id + " needs numeric x and z");
    }
    Point2 pt = point_from(p);
    if (!std::isfinite(pt.x) || !std::isfinite(pt.z)) throw Error("non-finite position for " + id);
    a.positions.emplace(id, pt);
  }
  if (auto s = j.find("saved_at"); s != j.end() && s->is_string()) a.saved_at = s->get<std::string>();
  return a;
}

}  // namespace codepark
