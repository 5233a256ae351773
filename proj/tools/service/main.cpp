#include <CLI11.hpp>

#include <csignal>
#include <iostream>

#include "erythro/error.hpp"
#include "service.hpp"

namespace {
erythro::service::AnalysisServer* g_server = nullptr;

extern "C" void on_signal(int) {
  if (g_server) g_server->stop();
}
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HTTP service for erythrocyte form identification"};
  std::string host = "127.0.0.1";
  int port = 8080;
  std::size_t max_mb = 32;
  int idle_minutes = 30;
  std::string config_path;
  app.add_option("--host", host, "Bind address");
  app.add_option("--port", port, "Port");
  app.add_option("--max-upload-mb", max_mb, "Upload size limit in MiB");
  app.add_option("--idle-minutes", idle_minutes, "Session idle timeout");
  app.add_option("--config", config_path, "key = value analysis configuration");
  CLI11_PARSE(app, argc, argv);

  erythro::service::ServiceOptions options;
  options.max_upload_bytes = max_mb * 1024 * 1024;
  options.idle_timeout = std::chrono::minutes(idle_minutes);
  try {
    if (!config_path.empty()) options.config = erythro::load_config(config_path);
  } catch (const erythro::Error& e) {
    std::cerr << "error: " << erythro::to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  }

  erythro::service::AnalysisServer server(std::move(options));
  if (!server.bind(host, port)) {
    std::cerr << "error: cannot bind " << host << ":" << port << '\n';
    return 1;
  }
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cerr << "listening on http://" << host << ":" << port << '\n';
  server.serve();
  return 0;
}
