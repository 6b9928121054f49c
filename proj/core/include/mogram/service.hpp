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

#pragma once

// HTTP/JSON front of the session layer.
//
//   POST   /sessions                    create, -> {"session_id"}
//   GET    /sessions/{id}/view?format=json|svg|dot
//   GET    /sessions/{id}/log           operation log (for replay)
//   POST   /sessions/{id}/exclude       {"ids": [int...]}
//   POST   /sessions/{id}/style         {"s_lo"?, "s_hi"?, "objective_coloring"?, "label_decimals"?}
//   POST   /sessions/{id}/reset
//   DELETE /sessions/{id}
//
// Failures: 400 {"error_code", "message", "detail"}; 404 for unknown
// sessions and routes.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "mogram/session.hpp"

namespace mogram {

class SessionStore {
 public:
  using Clock = std::function<std::chrono::steady_clock::time_point()>;

  explicit SessionStore(std::chrono::seconds idle_timeout = std::chrono::minutes(30),
                        Clock clock = [] { return std::chrono::steady_clock::now(); });

  /// Builds the session and returns its opaque id.
  std::string create(const CreateRequest& request);
  /// Throws UnknownSession. Refreshes the idle timer.
  std::shared_ptr<Session> find(const std::string& id);
  bool erase(const std::string& id);
  /// Drops sessions idle for longer than the timeout; returns how many.
  std::size_t evict_idle();
  std::size_t size() const;

 private:
  struct Entry {
    std::shared_ptr<Session> session;
    std::chrono::steady_clock::time_point last_used;
  };

  std::string fresh_id();

  std::chrono::seconds idle_timeout_;
  Clock clock_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Entry> sessions_;
  std::uint64_t counter_ = 0;
};

struct HttpRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// Transport-independent request dispatch.
class SessionService {
 public:
  explicit SessionService(std::chrono::seconds idle_timeout = std::chrono::minutes(30),
                          SessionStore::Clock clock = [] { return std::chrono::steady_clock::now(); });

  HttpResponse handle(const HttpRequest& request);
  SessionStore& store() { return store_; }

 private:
  SessionStore store_;
};

/// Serves a SessionService over HTTP; optionally mounts static files under /ui.
class HttpServer {
 public:
  explicit HttpServer(SessionService& service, std::optional<std::filesystem::path> ui_dir = std::nullopt);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds; port 0 picks a free port. Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  bool listen();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mogram
