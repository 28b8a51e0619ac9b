#include "ff/mining/http_generator.h"

#include <cstdlib>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

namespace ff::mining {

namespace {

std::string Trim(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
    --end;
  }
  return text.substr(begin, end - begin);
}

class HttplibTransport : public ChatTransport {
 public:
  explicit HttplibTransport(const std::string& endpoint_url) {
    // Split scheme://host[:port]/path.
    const std::size_t scheme_end = endpoint_url.find("://");
    std::size_t path_start = std::string::npos;
    if (scheme_end != std::string::npos) {
      path_start = endpoint_url.find('/', scheme_end + 3);
    }
    if (path_start == std::string::npos) {
      base_ = endpoint_url;
      path_ = "/";
    } else {
      base_ = endpoint_url.substr(0, path_start);
      path_ = endpoint_url.substr(path_start);
    }
    const char* key = std::getenv("FACTOR_FORGE_API_KEY");
    if (key != nullptr) {
      api_key_ = key;
    }
  }

  bool Post(const std::string& request_body, std::string* response_body,
            std::string* out_error) override {
    httplib::Client client(base_);
    client.set_connection_timeout(30);
    client.set_read_timeout(120);
    httplib::Headers headers;
    if (!api_key_.empty()) {
      headers.emplace("Authorization", "Bearer " + api_key_);
    }
    auto response = client.Post(path_, headers, request_body, "application/json");
    if (!response) {
      if (out_error != nullptr) {
        *out_error = "transport failure: " + httplib::to_string(response.error());
      }
      return false;
    }
    if (response->status < 200 || response->status >= 300) {
      if (out_error != nullptr) {
        *out_error = "endpoint returned status " + std::to_string(response->status);
      }
      return false;
    }
    *response_body = response->body;
    return true;
  }

 private:
  std::string base_;
  std::string path_;
  std::string api_key_;
};

}  // namespace

std::unique_ptr<ChatTransport> MakeHttpTransport(const std::string& endpoint_url) {
  return std::make_unique<HttplibTransport>(endpoint_url);
}

std::vector<GeneratedCandidate> ExtractCandidates(const std::string& content) {
  std::vector<GeneratedCandidate> candidates;
  const std::size_t fence_open = content.find("```");
  if (fence_open == std::string::npos) {
    return candidates;
  }
  std::size_t body_start = content.find('\n', fence_open);
  if (body_start == std::string::npos) {
    return candidates;
  }
  body_start += 1;  // skip the fence line (possibly carrying a language tag)
  const std::size_t fence_close = content.find("```", body_start);
  const std::string body =
      fence_close == std::string::npos
          ? content.substr(body_start)
          : content.substr(body_start, fence_close - body_start);

  std::size_t line_start = 0;
  while (line_start <= body.size()) {
    const std::size_t line_end = body.find('\n', line_start);
    std::string line = line_end == std::string::npos
                           ? body.substr(line_start)
                           : body.substr(line_start, line_end - line_start);
    line = Trim(line);
    if (!line.empty()) {
      GeneratedCandidate candidate;
      const std::size_t marker = line.rfind("family:");
      if (marker != std::string::npos) {
        const std::string family_name = Trim(line.substr(marker + 7));
        auto family = dsl::ParseFamilyName(family_name);
        if (family.has_value()) {
          candidate.declared_family = family;
          line = Trim(line.substr(0, marker));
        }
      }
      candidate.text = line;
      if (!candidate.text.empty()) {
        candidates.push_back(std::move(candidate));
      }
    }
    if (line_end == std::string::npos) {
      break;
    }
    line_start = line_end + 1;
  }
  return candidates;
}

bool HttpGenerator::Generate(const PromptBundle& bundle, GenerationResult* out,
                             std::string* out_error) {
  nlohmann::json request;
  request["model"] = model_;
  request["messages"] = nlohmann::json::array({
      nlohmann::json{{"role", "system"}, {"content", bundle.static_prefix}},
      nlohmann::json{{"role", "user"}, {"content", bundle.dynamic_suffix}},
  });

  GenerationResult result;
  result.model_id = model_;
  result.request_snapshot = request;

  std::string response_body;
  if (!transport_->Post(request.dump(), &response_body, out_error)) {
    return false;
  }

  nlohmann::json response = nlohmann::json::parse(response_body, nullptr, false);
  if (response.is_discarded()) {
    // Keep the raw bytes so the failure is auditable.
    result.response_snapshot = nlohmann::json{{"raw", response_body}};
    *out = std::move(result);
    return true;
  }
  result.response_snapshot = response;

  try {
    if (response.contains("model")) {
      result.model_id = response["model"].get<std::string>();
    }
    if (response.contains("usage")) {
      result.prompt_tokens = response["usage"].value("prompt_tokens", 0L);
      result.completion_tokens = response["usage"].value("completion_tokens", 0L);
    }
    if (response.contains("choices") && !response["choices"].empty()) {
      const std::string content =
          response["choices"][0]["message"]["content"].get<std::string>();
      result.candidates = ExtractCandidates(content);
    }
  } catch (const nlohmann::json::exception&) {
    result.candidates.clear();  // unparseable structure -> empty batch
  }

  *out = std::move(result);
  return true;
}

}  // namespace ff::mining
