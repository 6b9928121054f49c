// Copyright 2026 The moGram Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mogram/service.hpp"

#include <random>
#include <regex>

#include <fmt/format.h>
#include <httplib.h>

#include "mogram/error.hpp"

namespace mogram {

using nlohmann::json;

SessionStore::SessionStore(std::chrono::seconds idle_timeout, Clock clock)
    : idle_timeout_(idle_timeout), clock_(std::move(clock)) {}

std::string SessionStore::fresh_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  return fmt::format("{:016x}{:016x}", rng(), rng() ^ ++counter_);
}

std::string SessionStore::create(const CreateRequest& request) {
  auto session = std::make_shared<Session>(request);
  std::lock_guard lock(mutex_);
  std::string id = fresh_id();
  while (sessions_.count(id)) id = fresh_id();
  sessions_.emplace(id, Entry{std::move(session), clock_()});
  return id;
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    throw Error(ErrorCode::UnknownSession, fmt::format("no session '{}'", id), id);
  }
  it->second.last_used = clock_();
  return it->second.session;
}

bool SessionStore::erase(const std::string& id) {
  std::lock_guard lock(mutex_);
  return sessions_.erase(id) > 0;
}

std::size_t SessionStore::evict_idle() {
  std::lock_guard lock(mutex_);
  const auto now = clock_();
  return std::erase_if(sessions_, [&](const auto& item) { return now - item.second.last_used > idle_timeout_; });
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

namespace {

HttpResponse json_response(int status, const json& body) {
  return {status, "application/json", body.dump()};
}

HttpResponse error_response(int status, std::string_view code, const std::string& message,
                            const std::string& detail, const std::optional<Phase>& phase = std::nullopt) {
  json body = {{"error_code", code}, {"message", message}, {"detail", detail}};
  if (phase) body["phase"] = to_string(*phase);
  return json_response(status, body);
}

json parse_body(const std::string& body) {
  if (body.empty()) return json::object();
  json doc = json::parse(body, nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorCode::ParseError, "request body is not valid JSON");
  return doc;
}

std::vector<int> parse_ids(const json& body) {
  if (!body.is_object() || !body.contains("ids") || !body.at("ids").is_array() || body.size() != 1) {
    throw Error(ErrorCode::ParseError, "expected {\"ids\": [int...]}", "$.ids");
  }
  std::vector<int> ids;
  for (const auto& v : body.at("ids")) {
    if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, "ids must be integers", "$.ids");
    ids.push_back(v.get<int>());
  }
  return ids;
}

}  // namespace

SessionService::SessionService(std::chrono::seconds idle_timeout, SessionStore::Clock clock)
    : store_(idle_timeout, std::move(clock)) {}

HttpResponse SessionService::handle(const HttpRequest& request) {
  static const std::regex session_route(R"(^/sessions/([A-Za-z0-9]+)(?:/(view|log|exclude|style|reset))?/?$)");
  try {
    store_.evict_idle();
    if (request.path == "/sessions" || request.path == "/sessions/") {
      if (request.method != "POST") return error_response(405, "MethodNotAllowed", "use POST /sessions", "");
      const std::string id = store_.create(parse_create_request(parse_body(request.body)));
      return json_response(201, {{"session_id", id}});
    }

    std::smatch match;
    if (!std::regex_match(request.path, match, session_route)) {
      return error_response(404, "NotFound", fmt::format("no route for {}", request.path), request.path);
    }
    const std::string id = match[1];
    const std::string action = match[2];

    if (action.empty()) {
      if (request.method != "DELETE") return error_response(405, "MethodNotAllowed", "use DELETE", "");
      if (!store_.erase(id)) throw Error(ErrorCode::UnknownSession, fmt::format("no session '{}'", id), id);
      return json_response(200, {{"deleted", id}});
    }

    auto session = store_.find(id);
    if (action == "view" || action == "log") {
      if (request.method != "GET") return error_response(405, "MethodNotAllowed", "use GET", "");
      if (action == "log") return json_response(200, session->operation_log());
      auto it = request.query.find("format");
      const std::string format = it == request.query.end() ? "json" : it->second;
      if (format == "svg") return {200, "image/svg+xml", session->view_text("svg")};
      if (format == "dot") return {200, "text/vnd.graphviz", session->view_text("dot")};
      if (format == "json") return json_response(200, session->view());
      throw Error(ErrorCode::InvalidParameter, fmt::format("unknown view format '{}'", format), "format");
    }

    if (request.method != "POST") return error_response(405, "MethodNotAllowed", "use POST", "");
    const json body = parse_body(request.body);
    if (action == "exclude") {
      session->exclude(parse_ids(body));
    } else if (action == "style") {
      session->update_style(parse_style_update(body));
    } else {
      session->reset();
    }
    return json_response(200, session->view());
  } catch (const Error& e) {
    const int status = e.code() == ErrorCode::UnknownSession ? 404 : 400;
    return error_response(status, to_string(e.code()), e.what(), e.detail(), e.phase());
  } catch (const std::exception& e) {
    return error_response(500, "InternalError", e.what(), "");
  }
}

struct HttpServer::Impl {
  explicit Impl(SessionService& s) : service(s) {}
  SessionService& service;
  httplib::Server server;
};

HttpServer::HttpServer(SessionService& service, std::optional<std::filesystem::path> ui_dir)
    : impl_(std::make_unique<Impl>(service)) {
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    HttpRequest request{req.method, req.path, {}, req.body};
    for (const auto& [key, value] : req.params) request.query.emplace(key, value);
    const HttpResponse response = impl_->service.handle(request);
    res.status = response.status;
    res.set_content(response.body, response.content_type);
  };
  auto& s = impl_->server;
  s.Post(R"(/sessions.*)", forward);
  s.Get(R"(/sessions.*)", forward);
  s.Delete(R"(/sessions.*)", forward);
  if (ui_dir) s.set_mount_point("/ui", ui_dir->string());
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

bool HttpServer::running() const { return impl_->server.is_running(); }

}  // namespace mogram
