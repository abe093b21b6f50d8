/** Copyright 2026 The connview Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <thread>

#include "connview/error.h"
#include "connview/service.h"
#include "httplib.h"

namespace connview {

struct HttpServer::Impl {
  Service& service;
  httplib::Server server;
  std::thread thread;

  explicit Impl(Service& s) : service(s) {
    auto dispatch = [this](const char* method) {
      return [this, method](const httplib::Request& req,
                            httplib::Response& res) {
        ApiRequest api{method, req.path, {}, req.body};
        for (const auto& [key, value] : req.params) {
          api.params.emplace(key, value);
        }
        ApiResponse out = service.handle(api);
        res.status = out.status;
        res.set_content(out.text(), "application/json; charset=utf-8");
      };
    };
    server.Get(R"(/api/.*)", dispatch("GET"));
    server.Post(R"(/api/.*)", dispatch("POST"));
    server.Delete(R"(/api/.*)", dispatch("DELETE"));
  }
};

HttpServer::HttpServer(Service& service)
    : impl_(std::make_unique<Impl>(service)) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start(const std::string& host, int port) {
  int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                        : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) {
    throw Error("cannot listen on " + host + ":" + std::to_string(port));
  }
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

void HttpServer::run(const std::string& host, int port) {
  if (!impl_->server.listen(host, port)) {
    throw Error("cannot listen on " + host + ":" + std::to_string(port));
  }
}

void HttpServer::stop() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace connview
