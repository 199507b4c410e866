// Copyright 2026 The LexSumm Authors.
//
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

#include "lexsumm/api_server.h"

#include <algorithm>
#include <charconv>

#include "httplib.h"
#include "json.hpp"
#include "lexsumm/error.h"
#include "lexsumm/wire_format.h"

namespace lexsumm {
namespace {

using nlohmann::json;

void SendJson(httplib::Response &res, int status, const json &body) {
  res.status = status;
  res.set_content(body.dump(), "application/json; charset=utf-8");
}

void SendError(httplib::Response &res, int status, std::string_view code,
               const std::string &message) {
  SendJson(res, status, {{"error", code}, {"message", message}});
}

int StatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValidation:
    case ErrorCode::kDecode:
      return 400;
    case ErrorCode::kNotFound:
      return 404;
    case ErrorCode::kConfiguration:
      return 409;
    case ErrorCode::kStorage:
      return 500;
  }
  return 500;
}

std::string_view ErrorNameFor(int status, ErrorCode code) {
  switch (status) {
    case 400:
      return "bad_request";
    case 404:
      return "not_found";
    case 409:
      return "conflict";
    default:
      return ErrorCodeName(code);
  }
}

// Runs `handler`, turning library errors into JSON error responses.
template <typename Handler>
httplib::Server::Handler Guarded(Handler handler) {
  return [handler](const httplib::Request &req, httplib::Response &res) {
    try {
      handler(req, res);
    } catch (const Error &e) {
      const int status = StatusFor(e.code());
      SendError(res, status, ErrorNameFor(status, e.code()), e.what());
    } catch (const json::exception &e) {
      SendError(res, 400, "bad_request", e.what());
    } catch (const std::exception &e) {
      SendError(res, 500, "internal_error", e.what());
    }
  };
}

size_t ParsePositive(const std::string &text, const char *name) {
  size_t value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value < 1) {
    throw ValidationError(std::string("\"") + name +
                          "\" must be a positive integer");
  }
  return value;
}

std::optional<std::string> Param(const httplib::Request &req, const char *name) {
  if (!req.has_param(name)) return std::nullopt;
  std::string value = req.get_param_value(name);
  if (value.empty()) return std::nullopt;
  return value;
}

json ParseBody(const httplib::Request &req) {
  if (req.body.find_first_not_of(" \t\r\n") == std::string::npos) return nullptr;
  try {
    return json::parse(req.body);
  } catch (const json::parse_error &e) {
    throw ValidationError("malformed JSON at byte " + std::to_string(e.byte));
  }
}

}  // namespace

struct ApiServer::Impl {
  CorpusStore &store;
  std::shared_ptr<const ScoringModel> model;
  ServerOptions options;
  httplib::Server server;

  Impl(CorpusStore &s, std::shared_ptr<const ScoringModel> m, ServerOptions o)
      : store(s), model(std::move(m)), options(std::move(o)) {
    Routes();
  }

  std::optional<std::string> AllowedOrigin(const httplib::Request &req) const {
    const auto &origins = options.cors_origins;
    if (std::find(origins.begin(), origins.end(), "*") != origins.end()) {
      return "*";
    }
    const std::string origin = req.get_header_value("Origin");
    if (!origin.empty() &&
        std::find(origins.begin(), origins.end(), origin) != origins.end()) {
      return origin;
    }
    return std::nullopt;
  }

  void Routes() {
    server.set_post_routing_handler(
        [this](const httplib::Request &req, httplib::Response &res) {
          if (auto origin = AllowedOrigin(req)) {
            res.set_header("Access-Control-Allow-Origin", *origin);
            res.set_header("Vary", "Origin");
          }
        });
    server.Options(".*", [](const httplib::Request &, httplib::Response &res) {
      res.status = 204;
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
    server.set_error_handler([](const httplib::Request &, httplib::Response &res) {
      if (res.body.empty()) {
        SendError(res, res.status == 404 ? 404 : res.status,
                  res.status == 404 ? "not_found" : "error",
                  res.status == 404 ? "no such endpoint" : "request failed");
      }
    });

    server.Get("/health", Guarded([this](const httplib::Request &,
                                         httplib::Response &res) {
      SendJson(res, 200,
               {{"status", "ok"},
                {"cases", store.size()},
                {"model_loaded", model != nullptr}});
    }));

    server.Get("/cases", Guarded([this](const httplib::Request &req,
                                        httplib::Response &res) {
      QueryFilter filter;
      filter.subject_matter = Param(req, "subject");
      filter.jurisdiction = Param(req, "jurisdiction");
      if (auto from = Param(req, "from")) filter.from = Date::Parse(*from);
      if (auto to = Param(req, "to")) filter.to = Date::Parse(*to);
      if (auto page = Param(req, "page")) filter.page = ParsePositive(*page, "page");
      if (auto size = Param(req, "page_size")) {
        filter.page_size = ParsePositive(*size, "page_size");
      }
      const QueryPage page = store.Query(filter);
      json items = json::array();
      for (const CaseListing &item : page.items) {
        items.push_back({{"id", item.id}, {"metadata", MetadataToJson(item.metadata)}});
      }
      SendJson(res, 200,
               {{"items", std::move(items)},
                {"total", page.total},
                {"page", page.page},
                {"page_size", page.page_size}});
    }));

    server.Post("/cases", Guarded([this](const httplib::Request &req,
                                         httplib::Response &res) {
      const json body = ParseBody(req);
      if (!body.is_object()) throw ValidationError("body must be a JSON object");
      if (!body.contains("raw_text") || !body["raw_text"].is_string()) {
        throw ValidationError("\"raw_text\" must be a string");
      }
      if (!body.contains("metadata")) throw ValidationError("missing \"metadata\"");
      const CaseMetadata metadata = MetadataFromJson(body["metadata"]);
      const std::string id =
          store.Ingest(body["raw_text"].get<std::string>(), metadata);
      SendJson(res, 201, {{"id", id}});
    }));

    server.Get(R"(/cases/([^/]+))", Guarded([this](const httplib::Request &req,
                                                   httplib::Response &res) {
      SendJson(res, 200, DocumentToJson(store.Get(req.matches[1].str())));
    }));

    server.Post(R"(/cases/([^/]+)/summary)",
                Guarded([this](const httplib::Request &req,
                               httplib::Response &res) {
      const SummarizeRequest request = ParseSummarizeRequest(ParseBody(req));
      const CaseDocument document = store.Get(req.matches[1].str());
      const SummaryConfig cfg = ApplyRequest(options.summary, request);
      const CaseSummary summary =
          SummarizeDocument(ParseText(document.raw_text, options.parser),
                            request.method, cfg, model, document.id);
      SendJson(res, 200, SummaryToJson(summary, cfg));
    }));
  }
};

ApiServer::ApiServer(CorpusStore &store,
                     std::shared_ptr<const ScoringModel> model,
                     ServerOptions options)
    : impl_(std::make_unique<Impl>(store, std::move(model), std::move(options))) {}

ApiServer::~ApiServer() { Stop(); }

bool ApiServer::Listen(const std::string &host, int port) {
  return impl_->server.listen(host, port);
}

int ApiServer::BindToAnyPort(const std::string &host) {
  return impl_->server.bind_to_any_port(host);
}

bool ApiServer::ListenAfterBind() { return impl_->server.listen_after_bind(); }

void ApiServer::WaitUntilReady() const { impl_->server.wait_until_ready(); }

void ApiServer::Stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace lexsumm
