#include <codepark/server.hpp>

#include <httplib.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace codepark {

using nlohmann::json;

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& bytes) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out.flush()) throw Error("cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot replace " + path.string() + ": " + ec.message());
}

namespace {

std::shared_ptr<const SceneSnapshot> make_snapshot(Scene scene) {
  auto snap = std::make_shared<SceneSnapshot>();
  snap->bytes = serialize(scene);
  snap->scene = std::move(scene);
  return snap;
}

std::string error_body(const std::string& message) {
  return canonical_dump(json{{"error", message}});
}

std::string mime_for(const std::filesystem::path& p) {
  auto ext = p.extension().string();
  if (ext == ".html") return "text/html; charset=utf-8";
  if (ext == ".js" || ext == ".mjs") return "text/javascript";
  if (ext == ".css") return "text/css";
  if (ext == ".json") return "application/json";
  if (ext == ".png") return "image/png";
  if (ext == ".svg") return "image/svg+xml";
  return "application/octet-stream";
}

std::optional<std::string> read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

struct SceneServer::Impl {
  ServerOptions options;
  httplib::Server http;
  std::thread thread;
  int bound_port = 0;

  mutable std::mutex snapshot_mutex;
  std::shared_ptr<const SceneSnapshot> current;
  std::mutex write_mutex;

  std::shared_ptr<const SceneSnapshot> get() const {
    std::lock_guard lock(snapshot_mutex);
    return current;
  }
  void swap(std::shared_ptr<const SceneSnapshot> next) {
    std::lock_guard lock(snapshot_mutex);
    current = std::move(next);
  }

  HttpResult put(const std::string& body) {
    Arrangement incoming;
    try {
      incoming = arrangement_from_json(json::parse(body));
    } catch (const json::exception& e) {
      return {400, error_body(std::string("body is not JSON: ") + e.what())};
    } catch (const Error& e) {
      return {400, error_body(e.what())};
    }

    std::lock_guard lock(write_mutex);
    auto snap = get();
    Arrangement merged = current_positions(snap->scene.layout);
    for (const auto& [id, p] : incoming.positions) merged.positions[id] = p;
    Scene next = snap->scene;
    try {
      std::vector<std::string> unknown;
      for (const auto& [id, p] : incoming.positions) {
        if (!snap->scene.layout.find_room(id)) unknown.push_back(id);
      }
      if (!unknown.empty()) throw LayoutValidationError({}, std::move(unknown));
      next.layout = apply_arrangement(snap->scene.layout, merged);
    } catch (const LayoutValidationError& e) {
      json collisions = json::array();
      for (const auto& [a, b] : e.collisions()) collisions.push_back({a, b});
      return {422, canonical_dump(json{{"error", e.what()},
                                       {"collisions", std::move(collisions)},
                                       {"unknown", e.unknown_ids()}})};
    }
    merged.saved_at = utc_timestamp();
    if (!options.arrangement_path.empty()) {
      try {
        write_file_atomic(options.arrangement_path, to_json(merged).dump(2) + "\n");
      } catch (const Error& e) {
        return {500, error_body(e.what())};
      }
    }
    swap(make_snapshot(std::move(next)));
    return {200, canonical_dump(to_json(merged))};
  }

  void routes() {
    http.Get("/api/scene", [this](const httplib::Request&, httplib::Response& res) {
      auto snap = get();
      res.set_content(snap->bytes, "application/json");
    });
    http.Get(R"(/api/rooms/([^/]+)/walls/(\d+))",
             [this](const httplib::Request& req, httplib::Response& res) {
               auto snap = get();
               const std::string id = req.matches[1];
               const std::string wall = req.matches[2];
               auto it = snap->scene.walls.find(id);
               if (it == snap->scene.walls.end()) {
                 res.status = 404;
                 res.set_content(error_body("unknown class id " + id), "application/json");
                 return;
               }
               if (wall.size() != 1 || wall[0] > '3') {
                 res.status = 404;
                 res.set_content(error_body("wall index must be 0..3"), "application/json");
                 return;
               }
               res.set_content(canonical_dump(to_json(it->second[wall[0] - '0'])),
                               "application/json");
             });
    http.Get(R"(/api/methods/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
      auto snap = get();
      const std::string id = req.matches[1];
      auto it = snap->scene.classes.find(id);
      if (it == snap->scene.classes.end()) {
        res.status = 404;
        res.set_content(error_body("unknown class id " + id), "application/json");
        return;
      }
      res.set_content(canonical_dump(methods_json(it->second)), "application/json");
    });
    http.Put("/api/arrangement", [this](const httplib::Request& req, httplib::Response& res) {
      auto r = put(req.body);
      res.status = r.status;
      res.set_content(r.body, "application/json");
    });
    http.Get("/", [this](const httplib::Request&, httplib::Response& res) {
      serve_static("index.html", res);
    });
    http.Get(R"(/assets/(.+))", [this](const httplib::Request& req, httplib::Response& res) {
      serve_static(req.matches[1], res);
    });
  }

  void serve_static(const std::string& rel, httplib::Response& res) {
    std::filesystem::path p = std::filesystem::path(rel).lexically_normal();
    if (options.assets_dir.empty() || p.is_absolute() || p.empty() ||
        *p.begin() == "..") {
      res.status = 404;
      res.set_content(error_body("not found"), "application/json");
      return;
    }
    auto body = read_file(options.assets_dir / p);
    if (!body) {
      res.status = 404;
      res.set_content(error_body("not found"), "application/json");
      return;
    }
    res.set_content(std::move(*body), mime_for(p));
  }
};

SceneServer::SceneServer(Scene scene, ServerOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = std::move(options);
  const auto& path = impl_->options.arrangement_path;
  if (!path.empty() && std::filesystem::exists(path)) {
    try {
      auto text = read_file(path);
      if (!text) throw Error("cannot read file");
      auto arrangement = arrangement_from_json(json::parse(*text));
      scene.layout = apply_arrangement(scene.layout, arrangement);
    } catch (const std::exception& e) {
      std::cerr << "warning: ignoring arrangement " << path.string() << ": " << e.what() << "\n";
    }
  }
  impl_->current = make_snapshot(std::move(scene));
  int threads = std::max(1, impl_->options.threads);
  impl_->http.new_task_queue = [threads] { return new httplib::ThreadPool(threads); };
  // httplib's default adds SO_REUSEPORT, which lets a second server share a busy port.
  impl_->http.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
  });
  impl_->routes();
}

SceneServer::~SceneServer() { stop(); }

void SceneServer::bind() {
  auto& o = impl_->options;
  if (o.port == 0) {
    impl_->bound_port = impl_->http.bind_to_any_port(o.host);
  } else if (impl_->http.bind_to_port(o.host, o.port)) {
    impl_->bound_port = o.port;
  } else {
    impl_->bound_port = -1;
  }
  if (impl_->bound_port <= 0) {
    throw PortInUseError("cannot bind " + o.host + ":" + std::to_string(o.port));
  }
}

void SceneServer::run() { impl_->http.listen_after_bind(); }

void SceneServer::start() {
  bind();
  impl_->thread = std::thread([this] { run(); });
  impl_->http.wait_until_ready();
}

void SceneServer::stop() {
  impl_->http.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

int SceneServer::port() const noexcept { return impl_->bound_port; }

std::shared_ptr<const SceneSnapshot> SceneServer::snapshot() const { return impl_->get(); }

HttpResult SceneServer::put_arrangement(const std::string& body) { return impl_->put(body); }

}  // namespace codepark
