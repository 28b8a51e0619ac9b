#pragma once

#include <memory>
#include <string>

#include "ff/mining/generator.h"

namespace ff::mining {

// Transport seam: the production implementation posts to a chat-completion
// endpoint; tests script it.
class ChatTransport {
 public:
  virtual ~ChatTransport() = default;
  // Returns false on transport failure (connection, timeout, non-2xx).
  virtual bool Post(const std::string& request_body, std::string* response_body,
                    std::string* out_error) = 0;
};

// POSTs to `endpoint_url` with bearer credentials from the
// FACTOR_FORGE_API_KEY environment variable.
std::unique_ptr<ChatTransport> MakeHttpTransport(const std::string& endpoint_url);

// Renders the prompt bundle as a chat request (system = static prefix,
// user = dynamic suffix), sends it, and extracts fenced formula lines from
// the reply. A structurally unparseable reply yields an empty batch with the
// snapshot preserved; only transport errors report failure.
class HttpGenerator : public Generator {
 public:
  HttpGenerator(std::string model, std::unique_ptr<ChatTransport> transport)
      : model_(std::move(model)), transport_(std::move(transport)) {}

  bool Generate(const PromptBundle& bundle, GenerationResult* out,
                std::string* out_error) override;

 private:
  std::string model_;
  std::unique_ptr<ChatTransport> transport_;
};

}  // namespace ff::mining
