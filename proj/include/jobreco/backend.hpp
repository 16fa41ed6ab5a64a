#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace jobreco {

struct CompletionRequest {
  std::string system_prompt;
  std::string user_prompt;
  int max_output_tokens = 1024;
  double temperature = 0.0;  // 0 for reproducibility
};

struct CompletionResponse {
  std::string text;
  std::int64_t input_tokens = 0;
  std::int64_t output_tokens = 0;
  std::int64_t latency_ms = 0;
};

/// Pluggable text-completion backend. complete() is total: it returns a
/// response or throws a typed BackendError (timeout, rate-limit, transport,
/// refusal). Implementations must be callable from multiple threads.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual CompletionResponse complete(const CompletionRequest& request) = 0;
  virtual std::string name() const = 0;
};

/// Heuristic token estimate: ceil(character_count / 4). Monotone in length.
std::int64_t estimate_tokens(const std::string& text);

inline constexpr std::int64_t kDefaultTokenBudget = 8192;  // GPT-4 context limit

/// Budget with a 10% safety margin to absorb heuristic error
/// (8192 -> 7372).
std::int64_t effective_token_budget(std::int64_t token_budget);

struct ScriptEntry {
  std::string matcher;   // substring match on user_prompt
  std::string response;  // canned completion text
};

/// Deterministic backend for offline tests: returns the first canned
/// response whose matcher fires, records every request for later assertion.
class ScriptedBackend : public Backend {
 public:
  explicit ScriptedBackend(std::vector<ScriptEntry> script);

  CompletionResponse complete(const CompletionRequest& request) override;
  std::string name() const override { return "scripted"; }

  /// Snapshot of all requests seen so far. Ordering across threads is
  /// unspecified; within one thread requests appear in call order.
  std::vector<CompletionRequest> requests() const;

 private:
  std::vector<ScriptEntry> script_;
  mutable std::mutex mutex_;
  std::vector<CompletionRequest> requests_;
};

/// Decorator that accumulates token totals across calls (atomically) and
/// forwards everything else to the wrapped backend.
class MeteredBackend : public Backend {
 public:
  explicit MeteredBackend(Backend& inner) : inner_(inner) {}

  CompletionResponse complete(const CompletionRequest& request) override;
  std::string name() const override { return inner_.name(); }

  std::int64_t input_tokens() const { return input_tokens_.load(); }
  std::int64_t output_tokens() const { return output_tokens_.load(); }
  std::int64_t calls() const { return calls_.load(); }

 private:
  Backend& inner_;
  std::atomic<std::int64_t> input_tokens_{0};
  std::atomic<std::int64_t> output_tokens_{0};
  std::atomic<std::int64_t> calls_{0};
};

/// Decorator that writes one transcript file per call (prompt + response)
/// into a directory, for auditability.
class TranscriptBackend : public Backend {
 public:
  TranscriptBackend(Backend& inner, std::string directory);

  CompletionResponse complete(const CompletionRequest& request) override;
  std::string name() const override { return inner_.name(); }

 private:
  Backend& inner_;
  std::string directory_;
  std::atomic<int> sequence_{0};
};

}  // namespace jobreco
