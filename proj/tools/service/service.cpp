#include "service.hpp"

#include <httplib.h>
#include <json.hpp>

#include <iomanip>
#include <random>
#include <sstream>

#include "erythro/error.hpp"
#include "erythro/image_io.hpp"
#include "erythro/pipeline.hpp"
#include "erythro/report_json.hpp"

namespace erythro::service {

using nlohmann::json;

SessionStore::SessionStore(std::chrono::seconds idle_timeout, Now now)
    : idle_timeout_(idle_timeout), now_(std::move(now)), salt_(std::random_device{}()) {
  salt_ = (salt_ << 32) ^ std::random_device{}();
}

std::string SessionStore::create(RasterImage image) {
  auto shared = std::make_shared<const RasterImage>(std::move(image));
  std::lock_guard lock(mutex_);
  const auto now = now_();
  evict_expired(now);
  // counter keeps ids unique for the server lifetime; the salt keeps them
  // unguessable across restarts.
  std::ostringstream id;
  id << std::hex << std::setw(8) << std::setfill('0') << ++counter_ << std::setw(16)
     << (salt_ ^ (counter_ * 0x9e3779b97f4a7c15ull));
  sessions_.emplace(id.str(), Entry{std::move(shared), now, now});
  return id.str();
}

std::shared_ptr<const RasterImage> SessionStore::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  const auto now = now_();
  evict_expired(now);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return nullptr;
  it->second.last_used = now;
  return it->second.image;
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

void SessionStore::evict_expired(Clock::time_point now) {
  std::erase_if(sessions_,
                [&](const auto& kv) { return now - kv.second.last_used >= idle_timeout_; });
}

namespace {

constexpr const char* kJson = "application/json";

void reply_error(httplib::Response& res, int status, ErrorCode code, std::string_view message) {
  res.status = status;
  res.set_content(serialize_error(code, message), kJson);
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedFormat: return 415;
    case ErrorCode::RoiOutOfBounds: return 422;
    case ErrorCode::NoCellFound: return 409;
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::CorruptFile: return 400;
    default: return 500;
  }
}

bool acceptable_content_type(const std::string& type) {
  if (type.empty()) return true;
  const auto base = type.substr(0, type.find(';'));
  return base == "image/png" || base == "image/x-portable-pixmap" ||
         base == "application/octet-stream";
}

// Reads the analyze body into (roi, config). Throws ParseError / InvalidArgument.
std::pair<Roi, AnalysisConfig> parse_analyze_body(const std::string& body,
                                                  const AnalysisConfig& defaults) {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("request body: ") + e.what());
  }
  if (!j.is_object() || !j.contains("roi") || !j["roi"].is_object()) {
    throw Error(ErrorCode::ParseError, "body must contain an \"roi\" object");
  }
  Roi roi;
  try {
    const auto& r = j["roi"];
    roi = {r.at("x").get<int>(), r.at("y").get<int>(), r.at("w").get<int>(), r.at("h").get<int>()};
  } catch (const json::exception&) {
    throw Error(ErrorCode::ParseError, "roi needs integer x, y, w, h");
  }

  AnalysisConfig config = defaults;
  if (j.contains("thresholds") && !j["thresholds"].is_null()) {
    if (!j["thresholds"].is_object()) throw Error(ErrorCode::ParseError, "thresholds must be an object");
    for (const auto& [key, value] : j["thresholds"].items()) {
      if (!value.is_number()) {
        throw Error(ErrorCode::ParseError, "threshold '" + key + "' must be a number");
      }
      if (key == "min_area") {
        if (value.get<double>() < 1) throw Error(ErrorCode::InvalidArgument, "min_area must be >= 1");
        config.min_area = value.get<std::size_t>();
      } else if (!set_threshold(config.thresholds, key, value.get<double>())) {
        throw Error(ErrorCode::ParseError, "unknown threshold '" + key + "'");
      }
    }
    config.thresholds.validate();
  }
  return {roi, config};
}

}  // namespace

struct AnalysisServer::Impl {
  explicit Impl(ServiceOptions opts)
      : options(std::move(opts)), sessions(options.idle_timeout, options.now) {
    server.set_payload_max_length(options.max_upload_bytes);

    server.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(R"({"status":"ok"})", kJson);
    });

    server.Post("/api/v1/images", [this](const httplib::Request& req, httplib::Response& res) {
      upload(req, res);
    });

    server.Post(R"(/api/v1/images/([0-9a-f]+)/analyze)",
                [this](const httplib::Request& req, httplib::Response& res) { analyze(req, res); });

    server.set_exception_handler(
        [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
          std::string message = "internal error";
          try {
            if (ep) std::rethrow_exception(ep);
          } catch (const std::exception& e) {
            message = e.what();
          }
          reply_error(res, 500, ErrorCode::IoFailure, message);
        });
  }

  void upload(const httplib::Request& req, httplib::Response& res) {
    const std::string* bytes = &req.body;
    std::string content_type = req.get_header_value("Content-Type");
    if (req.is_multipart_form_data()) {
      if (req.files.empty()) {
        reply_error(res, 400, ErrorCode::ParseError, "multipart upload without a file part");
        return;
      }
      const auto& part = req.files.count("image") ? req.files.find("image")->second
                                                  : req.files.begin()->second;
      bytes = &part.content;
      content_type = part.content_type;
    }
    if (!acceptable_content_type(content_type)) {
      reply_error(res, 415, ErrorCode::UnsupportedFormat,
                  "Content-Type " + content_type + " is not image/png or image/x-portable-pixmap");
      return;
    }
    try {
      const auto* data = reinterpret_cast<const std::uint8_t*>(bytes->data());
      RasterImage image = decode_image(std::span(data, bytes->size()));
      const int width = image.width();
      const int height = image.height();
      const std::string id = sessions.create(std::move(image));
      res.status = 201;
      res.set_content(json{{"session", id}, {"width", width}, {"height", height}}.dump(), kJson);
    } catch (const Error& e) {
      reply_error(res, status_for(e.code()), e.code(), e.what());
    }
  }

  void analyze(const httplib::Request& req, httplib::Response& res) {
    const std::string id = req.matches[1];
    const auto image = sessions.find(id);
    if (!image) {
      res.status = 404;
      res.set_content(
          json{{"error", "UnknownSession"}, {"message", "unknown or expired session " + id}}.dump(),
          kJson);
      return;
    }
    try {
      const auto [roi, config] = parse_analyze_body(req.body, options.config);
      res.status = 200;
      res.set_content(serialize_report(analyze_roi(*image, roi, config)), kJson);
    } catch (const Error& e) {
      reply_error(res, status_for(e.code()), e.code(), e.what());
    }
  }

  ServiceOptions options;
  SessionStore sessions;
  httplib::Server server;
};

AnalysisServer::AnalysisServer(ServiceOptions options)
    : impl_(std::make_unique<Impl>(std::move(options))) {}

AnalysisServer::~AnalysisServer() { stop(); }

int AnalysisServer::bind_any_port(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool AnalysisServer::bind(const std::string& host, int port) {
  return impl_->server.bind_to_port(host, port);
}

bool AnalysisServer::serve() { return impl_->server.listen_after_bind(); }

void AnalysisServer::stop() {
  if (impl_) impl_->server.stop();
}

bool AnalysisServer::running() const { return impl_->server.is_running(); }

void AnalysisServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace erythro::service
