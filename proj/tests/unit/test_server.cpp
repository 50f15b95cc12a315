#include <codepark/server.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pipeline.hpp"

#include <gtest/gtest.h>
#include <httplib.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <random>

namespace fs = std::filesystem;
using namespace codepark;
using namespace codepark::testing;
using nlohmann::json;

namespace {

fs::path temp_path(const std::string& stem) {
  return fs::temp_directory_path() /
         (stem + "-" + std::to_string(std::random_device{}()) + ".json");
}

// Four same-sized classes, so any two can trade places.
Scene even_scene() {
  std::vector<std::pair<std::string, std::string>> files;
  for (char c : std::string("ABCD")) {
    files.emplace_back(std::string("d/") + c + ".cs", std::string("class ") + c + "\n{\n  int x;\n}\n");
  }
  auto a = analyze_sources(files);
  return build_scene(*a);
}

struct Running {
  std::unique_ptr<SceneServer> server;
  std::unique_ptr<httplib::Client> client;

  explicit Running(Scene scene, ServerOptions opts = {}) {
    opts.port = 0;
    server = std::make_unique<SceneServer>(std::move(scene), opts);
    server->start();
    client = std::make_unique<httplib::Client>("127.0.0.1", server->port());
  }
};

std::string put_body(const std::map<std::string, Point2>& positions) {
  json p = json::object();
  for (const auto& [id, pt] : positions) p[id] = {{"x", pt.x}, {"z", pt.z}};
  return json{{"version", 1}, {"positions", p}}.dump();
}

}  // namespace

TEST(Server, SceneEndpointReturnsCanonicalBytes) {
  const auto& scene = fixture_scene("shapes");
  Running r(scene);
  auto res = r.client->Get("/api/scene");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Content-Type"), "application/json");
  EXPECT_EQ(res->body, serialize(scene));
  auto again = r.client->Get("/api/scene");
  EXPECT_EQ(again->body, res->body);
}

TEST(Server, WallAndMethodEndpoints) {
  const auto& scene = fixture_scene("shapes");
  Running r(scene);
  const auto& [id, walls] = *scene.walls.begin();
  for (int w = 0; w < 4; ++w) {
    auto res = r.client->Get("/api/rooms/" + id + "/walls/" + std::to_string(w));
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200);
    EXPECT_EQ(res->body, canonical_dump(to_json(walls[w])));
  }
  auto m = r.client->Get("/api/methods/" + id);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->status, 200);
  EXPECT_EQ(m->body, canonical_dump(methods_json(scene.classes.at(id))));
}

TEST(Server, UnknownRoomOrWallIs404WithErrorBody) {
  const auto& scene = fixture_scene("shapes");
  Running r(scene);
  const auto& id = scene.walls.begin()->first;
  for (const std::string& path : {std::string("/api/rooms/nope/walls/0"), "/api/rooms/" + id + "/walls/4",
                                  "/api/rooms/" + id + "/walls/17", std::string("/api/methods/nope")}) {
    auto res = r.client->Get(path);
    ASSERT_TRUE(res) << path;
    EXPECT_EQ(res->status, 404) << path;
    auto body = json::parse(res->body);
    EXPECT_TRUE(body.contains("error")) << path;
  }
}

TEST(Server, IdentityArrangementIsAccepted) {
  Scene scene = even_scene();
  Running r(scene);
  auto before = r.server->snapshot();
  auto res = r.client->Put("/api/arrangement", put_body(current_positions(scene.layout).positions),
                           "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  auto after = r.server->snapshot();
  for (std::size_t k = 0; k < after->scene.layout.rooms.size(); ++k) {
    EXPECT_EQ(after->scene.layout.rooms[k].footprint, before->scene.layout.rooms[k].footprint);
  }
}

TEST(Server, SwappingTwoRoomsIsAcceptedAndServed) {
  Scene scene = even_scene();
  Running r(scene);
  const auto& a = scene.layout.rooms[0];
  const auto& b = scene.layout.rooms[1];
  auto res = r.client->Put("/api/arrangement",
                           put_body({{a.class_id, b.footprint.center()}, {b.class_id, a.footprint.center()}}),
                           "application/json");
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 200) << res->body;
  auto served = deserialize(r.client->Get("/api/scene")->body);
  EXPECT_EQ(served.layout.find_room(a.class_id)->footprint, b.footprint);
  EXPECT_EQ(served.layout.find_room(b.class_id)->footprint, a.footprint);
  EXPECT_EQ(served.layout.arrangement_source, ArrangementSource::UserOverride);
  EXPECT_TRUE(oracle_layout_violations(served.layout).empty());
}

TEST(Server, OverlapIs422AndSceneUnchanged) {
  Scene scene = even_scene();
  Running r(scene);
  std::string before = r.client->Get("/api/scene")->body;
  const auto& a = scene.layout.rooms[0];
  const auto& b = scene.layout.rooms[1];
  auto res = r.client->Put("/api/arrangement", put_body({{b.class_id, a.footprint.center()}}),
                           "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 422);
  auto body = json::parse(res->body);
  EXPECT_FALSE(body["collisions"].empty());
  EXPECT_EQ(r.client->Get("/api/scene")->body, before);
}

TEST(Server, UnknownIdIs422AndMalformedIs400) {
  Scene scene = even_scene();
  Running r(scene);
  auto unknown = r.client->Put("/api/arrangement", put_body({{"ghost", {0, 0}}}), "application/json");
  ASSERT_TRUE(unknown);
  EXPECT_EQ(unknown->status, 422);
  EXPECT_EQ(json::parse(unknown->body)["unknown"], json::array({"ghost"}));
  for (std::string bad : {"{", "[]", R"({"positions":{"a":{"x":1}}})", R"({"version":9,"positions":{}})"}) {
    auto res = r.client->Put("/api/arrangement", bad, "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 400) << bad;
  }
}

TEST(Server, ArrangementPersistsAcrossRestart) {
  Scene scene = even_scene();
  auto path = temp_path("codepark-arrangement");
  ServerOptions opts;
  opts.arrangement_path = path;
  const auto& a = scene.layout.rooms[0];
  const auto& b = scene.layout.rooms[1];
  {
    Running r(scene, opts);
    auto res = r.client->Put("/api/arrangement",
                             put_body({{a.class_id, b.footprint.center()}, {b.class_id, a.footprint.center()}}),
                             "application/json");
    ASSERT_EQ(res->status, 200);
  }
  ASSERT_TRUE(fs::exists(path));
  auto saved = arrangement_from_json(json::parse(read_file(path)));
  EXPECT_FALSE(saved.saved_at.empty());
  {
    Running r(scene, opts);
    auto served = deserialize(r.client->Get("/api/scene")->body);
    EXPECT_EQ(served.layout.find_room(a.class_id)->footprint, b.footprint);
    EXPECT_EQ(served.layout.arrangement_source, ArrangementSource::UserOverride);
  }
  fs::remove(path);
}

TEST(Server, StaleArrangementFileIsIgnored) {
  Scene scene = even_scene();
  auto path = temp_path("codepark-stale");
  std::ofstream(path) << R"({"version":1,"positions":{"gone":{"x":0,"z":0}}})";
  ServerOptions opts;
  opts.arrangement_path = path;
  Running r(scene, opts);
  EXPECT_EQ(r.client->Get("/api/scene")->body, serialize(scene));
  fs::remove(path);
}

TEST(Server, BusyPortIsReported) {
  Running first(fixture_scene("shapes"));
  ServerOptions opts;
  opts.port = first.server->port();
  SceneServer second(fixture_scene("shapes"), opts);
  EXPECT_THROW(second.bind(), PortInUseError);
}

TEST(Server, ConcurrentReadersSeeIdenticalBodies) {
  const auto& scene = fixture_scene("mg");
  Running r(scene);
  std::string expected = serialize(scene);
  std::vector<std::future<std::vector<std::string>>> readers;
  for (int k = 0; k < 32; ++k) {
    readers.push_back(std::async(std::launch::async, [port = r.server->port()] {
      httplib::Client c("127.0.0.1", port);
      std::vector<std::string> bodies;
      for (int i = 0; i < 5; ++i) {
        auto res = c.Get("/api/scene");
        bodies.push_back(res ? res->body : std::string());
      }
      return bodies;
    }));
  }
  for (auto& f : readers) {
    for (const auto& body : f.get()) ASSERT_TRUE(body == expected);
  }
}

TEST(Server, StaticAssets) {
  auto dir = fs::temp_directory_path() / ("codepark-assets-" + std::to_string(std::random_device{}()));
  fs::create_directories(dir / "js");
  std::ofstream(dir / "index.html") << "<html>park</html>";
  std::ofstream(dir / "js" / "app.js") << "console.log(1)";
  ServerOptions opts;
  opts.assets_dir = dir;
  Running r(fixture_scene("shapes"), opts);
  auto index = r.client->Get("/");
  ASSERT_TRUE(index);
  EXPECT_EQ(index->status, 200);
  EXPECT_EQ(index->body, "<html>park</html>");
  auto js = r.client->Get("/assets/js/app.js");
  ASSERT_TRUE(js);
  EXPECT_EQ(js->get_header_value("Content-Type"), "text/javascript");
  EXPECT_EQ(r.client->Get("/assets/../secret")->status, 404);
  EXPECT_EQ(r.client->Get("/assets/missing.css")->status, 404);
  fs::remove_all(dir);
}

TEST(Server, WriteFileAtomicReplacesContent) {
  auto path = temp_path("codepark-atomic");
  write_file_atomic(path, "one");
  write_file_atomic(path, "two");
  EXPECT_EQ(read_file(path), "two");
  auto tmp = path;
  tmp += ".tmp";
  EXPECT_FALSE(fs::exists(tmp));
  fs::remove(path);
}

TEST(Server, UtcTimestampFormat) {
  auto ts = utc_timestamp();
  ASSERT_EQ(ts.size(), 20u);
  EXPECT_EQ(ts[4], '-');
  EXPECT_EQ(ts[10], 'T');
  EXPECT_EQ(ts.back(), 'Z');
}

TEST(Server, ServesTheBundledViewerPage) {
  ServerOptions opts;
  opts.assets_dir = CODEPARK_ASSETS_DIR;
  Running r(fixture_scene("shapes"), opts);
  auto res = r.client->Get("/");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_NE(res->body.find("/api/scene"), std::string::npos);
  EXPECT_EQ(res->get_header_value("Content-Type"), "text/html; charset=utf-8");
}
