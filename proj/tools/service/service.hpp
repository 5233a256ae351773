#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "erythro/config.hpp"
#include "erythro/raster.hpp"

namespace erythro::service {

using Clock = std::chrono::steady_clock;

/// Uploaded images keyed by opaque session id. Images are read-only after
/// upload, so any number of analyses may share one concurrently.
class SessionStore {
 public:
  using Now = std::function<Clock::time_point()>;

  explicit SessionStore(std::chrono::seconds idle_timeout, Now now = Clock::now);

  std::string create(RasterImage image);
  /// Returns null for unknown or idle-expired ids; refreshes the idle timer.
  std::shared_ptr<const RasterImage> find(const std::string& id);
  std::size_t size() const;

 private:
  struct Entry {
    std::shared_ptr<const RasterImage> image;
    Clock::time_point created;
    Clock::time_point last_used;
  };

  void evict_expired(Clock::time_point now);

  std::chrono::seconds idle_timeout_;
  Now now_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Entry> sessions_;
  std::uint64_t counter_ = 0;
  std::uint64_t salt_;
};

struct ServiceOptions {
  std::size_t max_upload_bytes = 32u * 1024u * 1024u;
  std::chrono::seconds idle_timeout{30 * 60};
  AnalysisConfig config;
  SessionStore::Now now = Clock::now;
};

/// HTTP facade:
///   POST /api/v1/images              raw or multipart PNG/PPM -> 201 {session,width,height}
///   POST /api/v1/images/{id}/analyze {"roi":{x,y,w,h},"thresholds":{...}} -> 200 report
///   GET  /healthz                    -> 200
class AnalysisServer {
 public:
  explicit AnalysisServer(ServiceOptions options = {});
  ~AnalysisServer();

  AnalysisServer(const AnalysisServer&) = delete;
  AnalysisServer& operator=(const AnalysisServer&) = delete;

  /// Binds to a free port and returns it (or -1).
  int bind_any_port(const std::string& host = "127.0.0.1");
  bool bind(const std::string& host, int port);
  /// Blocks serving requests until stop().
  bool serve();
  void stop();
  bool running() const;
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace erythro::service
