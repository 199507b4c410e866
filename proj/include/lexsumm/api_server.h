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

#ifndef LEXSUMM_API_SERVER_H_
#define LEXSUMM_API_SERVER_H_

#include <memory>
#include <string>
#include <vector>

#include "lexsumm/corpus_store.h"
#include "lexsumm/pipeline.h"
#include "lexsumm/summarizer.h"
#include "lexsumm/supervised_scorer.h"

namespace lexsumm {

struct ServerOptions {
  // Origins allowed by CORS; "*" allows any.
  std::vector<std::string> cors_origins = {"*"};
  SummaryConfig summary;
  ParserResources parser;
};

// JSON HTTP API over a CorpusStore:
//   GET  /health
//   GET  /cases?subject=&jurisdiction=&from=&to=&page=&page_size=
//   POST /cases
//   GET  /cases/{id}
//   POST /cases/{id}/summary
// Error bodies are {"error": code, "message": text}.
class ApiServer {
 public:
  ApiServer(CorpusStore &store, std::shared_ptr<const ScoringModel> model,
            ServerOptions options = {});
  ~ApiServer();

  ApiServer(const ApiServer &) = delete;
  ApiServer &operator=(const ApiServer &) = delete;

  // Blocks until Stop(). Returns false when the address cannot be bound.
  bool Listen(const std::string &host, int port);
  // Binds an ephemeral port and returns it (negative on failure).
  int BindToAnyPort(const std::string &host);
  // Serves on the port bound by BindToAnyPort; blocks until Stop().
  bool ListenAfterBind();
  void WaitUntilReady() const;
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace lexsumm

#endif  // LEXSUMM_API_SERVER_H_
