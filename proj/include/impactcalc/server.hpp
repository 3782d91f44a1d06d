#pragma once

#include "impactcalc/api.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace impactcalc::io {

/// HTTP front end over Api. Requests are served concurrently by the
/// underlying thread pool; Api itself holds no per-request state.
class HttpServer {
public:
    explicit HttpServer(Api api);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Serves a static web bundle at "/".
    void mount_static(const std::filesystem::path& directory);

    /// Binds (port 0 picks a free port), serves on a background thread and
    /// returns the bound port.
    int start(const std::string& host, int port);
    /// Binds and serves on the calling thread until stop().
    bool listen(const std::string& host, int port);
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Default store location: $IMPACTCALC_STORE when set, else "./scenarios".
std::filesystem::path default_store_path();

}  // namespace impactcalc::io
