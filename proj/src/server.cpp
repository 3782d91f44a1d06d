#include "impactcalc/server.hpp"

#include "impactcalc/error.hpp"
#include "impactcalc/version.hpp"

#include <httplib.h>

#include <cstdlib>
#include <thread>

namespace impactcalc::io {

struct HttpServer::Impl {
    explicit Impl(Api a) : api(std::move(a)) {}

    Api api;
    httplib::Server server;
    std::thread worker;
};

HttpServer::HttpServer(Api api) : impl_(std::make_unique<Impl>(std::move(api))) {
    auto forward = [this](const httplib::Request& req, httplib::Response& res) {
        ApiResponse r = impl_->api.handle(req.method, req.path, req.body);
        res.status = r.status;
        res.set_header("X-Engine-Version", std::string(kEngineVersion));
        res.set_content(r.body, "application/json");
    };
    const std::string pattern = R"(/api/v1/.*)";
    impl_->server.Get(pattern, forward);
    impl_->server.Post(pattern, forward);
    impl_->server.Put(pattern, forward);
    impl_->server.Delete(pattern, forward);
    impl_->server.Patch(pattern, forward);
}

HttpServer::~HttpServer() { stop(); }

void HttpServer::mount_static(const std::filesystem::path& directory) {
    if (!impl_->server.set_mount_point("/", directory.string())) {
        throw CalcError(ErrorKind::NotFound, "static directory " + directory.string() + " does not exist");
    }
}

int HttpServer::start(const std::string& host, int port) {
    int bound = port == 0 ? impl_->server.bind_to_any_port(host) : (impl_->server.bind_to_port(host, port) ? port : -1);
    if (bound < 0) throw CalcError(ErrorKind::ValidationError, "cannot bind " + host + ":" + std::to_string(port));
    impl_->worker = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return bound;
}

bool HttpServer::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }

void HttpServer::stop() {
    impl_->server.stop();
    if (impl_->worker.joinable()) impl_->worker.join();
}

std::filesystem::path default_store_path() {
    if (const char* env = std::getenv("IMPACTCALC_STORE"); env && *env) return env;
    return "scenarios";
}

}  // namespace impactcalc::io
