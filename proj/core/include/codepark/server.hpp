// Local HTTP service: serves the scene, single walls and method lists, accepts
// arrangement updates and hosts the viewer's static files.
#pragma once

#include <codepark/scene.hpp>

#include <filesystem>
#include <memory>
#include <string>

namespace codepark {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8420;  // 0 picks a free port
  std::filesystem::path assets_dir;
  std::filesystem::path arrangement_path;  // empty disables persistence
  int threads = 32;
};

/// The port is already taken.
class PortInUseError : public Error {
 public:
  using Error::Error;
};

/// Immutable view served to readers; replaced whole on every accepted PUT.
struct SceneSnapshot {
  Scene scene;
  std::string bytes;  // canonical serialization of `scene`
};

struct HttpResult {
  int status = 200;
  std::string body;
};

class SceneServer {
 public:
  /// Loads `options.arrangement_path` when it exists; an arrangement that no
  /// longer fits the scene is ignored with a warning on stderr.
  SceneServer(Scene scene, ServerOptions options);
  ~SceneServer();
  SceneServer(const SceneServer&) = delete;
  SceneServer& operator=(const SceneServer&) = delete;

  /// Binds the socket. Throws PortInUseError when the port is busy.
  void bind();
  /// Serves until stop(). Requires bind().
  void run();
  /// bind() plus run() on a background thread.
  void start();
  void stop();
  int port() const noexcept;

  std::shared_ptr<const SceneSnapshot> snapshot() const;

  /// The PUT /api/arrangement handler without the transport.
  HttpResult put_arrangement(const std::string& body);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Current time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

/// Writes `bytes` to a sibling temp file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& bytes);

}  // namespace codepark
