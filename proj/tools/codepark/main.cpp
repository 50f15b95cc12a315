// codepark: build a scene, serve it, or print the size summary.
#include <codepark/scene.hpp>
#include <codepark/server.hpp>

#include <CLI11.hpp>

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <pthread.h>

namespace fs = std::filesystem;
using namespace codepark;

namespace {

void report(const Analysis& a) {
  for (const auto& d : a.diagnostics) std::cerr << format_diagnostic(d, a.codebase) << "\n";
}

std::unique_ptr<Analysis> analyze_dir(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(dir.string() + " is not a directory");
  return analyze(load_codebase(dir));
}

int cmd_build(const fs::path& dir, const std::string& out) {
  auto a = analyze_dir(dir);
  report(*a);
  std::string bytes = serialize(build_scene(*a));
  if (out == "-") {
    std::cout << bytes;
  } else {
    write_file_atomic(out, bytes);
  }
  return 0;
}

int cmd_summary(const fs::path& dir) {
  auto a = analyze_dir(dir);
  std::string name = fs::absolute(dir).lexically_normal().filename().string();
  if (name.empty()) name = fs::absolute(dir).lexically_normal().parent_path().filename().string();
  const auto& s = a->summary;
  std::cout << "Codebase  No.Classes  LoC  LoC(largest)\n";
  std::cout << name << "  " << s.num_classes << "  " << s.total_loc << "  " << s.largest_class_loc
            << "\n";
  return 0;
}

Scene load_scene_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  Scene scene = deserialize(ss.str());
  check_scene(scene);
  return scene;
}

int cmd_serve(const fs::path& input, std::optional<int> port, std::string arrangement,
              std::string assets) {
  Scene scene;
  fs::path default_arrangement;
  if (fs::is_directory(input)) {
    auto a = analyze_dir(input);
    report(*a);
    scene = build_scene(*a);
    default_arrangement = input / "arrangement.json";
  } else {
    scene = load_scene_file(input);
    default_arrangement = input.parent_path() / "arrangement.json";
  }

  ServerOptions opts;
  if (port) {
    opts.port = *port;
  } else if (const char* env = std::getenv("CODEPARK_PORT")) {
    try {
      opts.port = std::stoi(env);
    } catch (const std::exception&) {
      throw Error(std::string("CODEPARK_PORT is not a port number: ") + env);
    }
  }
  opts.arrangement_path = arrangement.empty() ? default_arrangement : fs::path(arrangement);
  if (!assets.empty()) {
    opts.assets_dir = assets;
  } else if (const char* env = std::getenv("CODEPARK_ASSETS")) {
    opts.assets_dir = env;
  }

  SceneServer server(std::move(scene), opts);
  try {
    server.bind();
  } catch (const PortInUseError& e) {
    std::cerr << "codepark: " << e.what() << "\n";
    return 2;
  }
  // SIGINT/SIGTERM are taken synchronously by a waiter thread; the server's
  // worker threads inherit the blocked mask.
  sigset_t stop_signals;
  sigemptyset(&stop_signals);
  sigaddset(&stop_signals, SIGINT);
  sigaddset(&stop_signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&stop_signals, &sig);
    server.stop();
  });
  std::cerr << "serving on http://" << opts.host << ":" << server.port() << "/\n";
  server.run();
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Code park: a codebase as a walkable park of rooms"};
  app.require_subcommand(1);

  std::string build_dir, build_out = "scene.json";
  auto* build = app.add_subcommand("build", "Write the scene document for a source directory");
  build->add_option("dir", build_dir, "Source directory")->required();
  build->add_option("-o,--output", build_out, "Output file, '-' for stdout");

  std::string serve_input, serve_arrangement, serve_assets;
  std::optional<int> serve_port;
  auto* serve = app.add_subcommand("serve", "Serve a scene over HTTP");
  serve->add_option("input", serve_input, "Source directory or scene.json")->required();
  serve->add_option("--port", serve_port, "Port (default $CODEPARK_PORT, else 8420)")
      ->check(CLI::Range(0, 65535));
  serve->add_option("--arrangement", serve_arrangement, "Arrangement file");
  serve->add_option("--assets", serve_assets, "Viewer static files");

  std::string summary_dir;
  auto* summary = app.add_subcommand("summary", "Print class count and line totals");
  summary->add_option("dir", summary_dir, "Source directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return cmd_build(build_dir, build_out);
    if (*serve) return cmd_serve(serve_input, serve_port, serve_arrangement, serve_assets);
    if (*summary) return cmd_summary(summary_dir);
  } catch (const std::exception& e) {
    std::cerr << "codepark: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
